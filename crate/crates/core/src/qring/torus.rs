use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use super::{Coefficient, QringError, Ring};

/// Integer antisymmetric pairing `beta` on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewForm {
    n: usize,
    beta: Vec<i32>,
}

impl SkewForm {
    pub fn new(n: usize, beta: Vec<i32>) -> Result<Self, QringError> {
        if beta.len() != n * n {
            return Err(QringError::Shape(format!(
                "skew form needs {} entries, got {}",
                n * n,
                beta.len()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                let b = beta[i * n + j];
                if b != -beta[j * n + i] {
                    return Err(QringError::NotAntisymmetric(i, j));
                }
                if !(-2..=2).contains(&b) {
                    return Err(QringError::EntryOutOfRange(i, j, b));
                }
            }
        }
        Ok(SkewForm { n, beta })
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self, QringError> {
        let n = rows.len();
        let mut beta = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(QringError::Shape("ragged skew form rows".into()));
            }
            beta.extend_from_slice(r);
        }
        Self::new(n, beta)
    }

    pub fn zero(n: usize) -> Self {
        SkewForm {
            n,
            beta: vec![0; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.beta[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.beta.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// `u^T beta v`.
    pub fn pair(&self, u: &[i32], v: &[i32]) -> i32 {
        let mut acc = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            let row = &self.beta[i * self.n..(i + 1) * self.n];
            for (j, &vj) in v.iter().enumerate() {
                if vj != 0 {
                    acc += ui * row[j] * vj;
                }
            }
        }
        acc
    }

    /// `beta * v`.
    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    fn check(&self, x: &TorusElement) -> Result<(), QringError> {
        if x.dim != self.n {
            return Err(QringError::DimensionMismatch {
                expected: self.n,
                got: x.dim,
            });
        }
        Ok(())
    }
}

/// Doubled exponent vector: `du = 2u` stands for `W(u) = :exp(u . Z):`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusMonomial(Vec<i32>);

impl TorusMonomial {
    pub fn new(du: Vec<i32>) -> Self {
        TorusMonomial(du)
    }

    pub fn zero(n: usize) -> Self {
        TorusMonomial(vec![0; n])
    }

    /// Unit vector for generator `i`, scaled by `k` on the doubled lattice.
    pub fn unit(n: usize, i: usize, k: i32) -> Self {
        let mut v = vec![0; n];
        v[i] = k;
        TorusMonomial(v)
    }

    pub fn add(&self, other: &[i32]) -> TorusMonomial {
        TorusMonomial(self.0.iter().zip(other).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: i32) -> TorusMonomial {
        TorusMonomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }
}

impl Deref for TorusMonomial {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

/// Finite sum of Weyl-ordered monomials with central coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusElement {
    dim: usize,
    terms: BTreeMap<TorusMonomial, Coefficient>,
}

impl TorusElement {
    pub fn zero(dim: usize) -> Self {
        TorusElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Coefficient::one())
    }

    pub fn scalar(dim: usize, c: Coefficient) -> Self {
        let mut out = Self::zero(dim);
        if !c.is_zero() {
            out.terms.insert(TorusMonomial::zero(dim), c);
        }
        out
    }

    pub fn monomial(du: &[i32]) -> Self {
        Self::term(du, Coefficient::one())
    }

    pub fn term(du: &[i32], c: Coefficient) -> Self {
        let mut out = Self::zero(du.len());
        if !c.is_zero() {
            out.terms.insert(TorusMonomial::new(du.to_vec()), c);
        }
        out
    }

    pub fn from_terms<I>(dim: usize, it: I) -> Self
    where
        I: IntoIterator<Item = (TorusMonomial, Coefficient)>,
    {
        let mut out = Self::zero(dim);
        for (m, c) in it {
            assert_eq!(m.len(), dim, "monomial length does not match dimension");
            out.add_term(m, &c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TorusMonomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, du: &[i32]) -> Coefficient {
        self.terms
            .get(&TorusMonomial::new(du.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    fn add_term(&mut self, m: TorusMonomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = &*existing + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        assert_eq!(self.dim, other.dim, "torus dimension mismatch");
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c);
        }
        big
    }

    pub fn neg(&self) -> TorusElement {
        TorusElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &TorusElement) -> TorusElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> TorusElement {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = Self::zero(self.dim);
        for (m, v) in &self.terms {
            let p = v * c;
            if !p.is_zero() {
                out.terms.insert(m.clone(), p);
            }
        }
        out
    }

    /// Multiply every coefficient by `t^k`.
    pub fn shift_t(&self, k: i32) -> TorusElement {
        TorusElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.shift_t(k)))
                .collect(),
        }
    }

    /// Coefficient-wise bar; monomials are fixed.
    pub fn star(&self) -> TorusElement {
        TorusElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.bar()))
                .collect(),
        }
    }

    /// Set `t = 1` in every coefficient.
    pub fn at_t_one(&self) -> TorusElement {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.at_t_one());
        }
        out
    }

    /// Every monomial has an even doubled exponent in each listed generator.
    pub fn even_check(&self, affected: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|m| affected.iter().all(|&i| m[i] % 2 == 0))
    }

    /// Monomial with its coefficient when the element has exactly one term.
    pub fn single_term(&self) -> Option<(&TorusMonomial, &Coefficient)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = fmt_monomial(m, names);
                let coef = if c.len() > 1 {
                    format!("({c})")
                } else {
                    c.to_string()
                };
                if mono.is_empty() {
                    coef
                } else if c.is_one() {
                    format!("W({mono})")
                } else {
                    format!("{coef}*W({mono})")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

pub fn fmt_monomial(m: &[i32], names: &[String]) -> String {
    let mut s = String::new();
    for (i, &k) in m.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let name = names.get(i).cloned().unwrap_or_else(|| format!("z{i}"));
        let coef = if k % 2 == 0 {
            format!("{}", k / 2)
        } else {
            format!("{k}/2")
        };
        let sign = if k > 0 && !s.is_empty() { "+" } else { "" };
        let coef = match coef.as_str() {
            "1" => String::new(),
            "-1" => "-".into(),
            _ => coef,
        };
        s.push_str(&format!("{sign}{coef}{name}"));
    }
    s
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&[]))
    }
}

impl Ring for SkewForm {
    type Elem = TorusElement;

    fn zero(&self) -> TorusElement {
        TorusElement::zero(self.n)
    }

    fn add(&self, a: &TorusElement, b: &TorusElement) -> TorusElement {
        a.add(b)
    }

    fn neg(&self, a: &TorusElement) -> TorusElement {
        a.neg()
    }

    fn mul(&self, x: &TorusElement, y: &TorusElement) -> TorusElement {
        torus_mul(x, y, self).expect("torus operands must match the skew form")
    }

    fn scalar(&self, c: &Coefficient) -> TorusElement {
        TorusElement::scalar(self.n, c.clone())
    }

    fn monomial(&self, du: &[i32]) -> TorusElement {
        assert_eq!(du.len(), self.n);
        TorusElement::monomial(du)
    }

    fn is_zero(&self, a: &TorusElement) -> bool {
        a.is_zero()
    }

    fn scale(&self, c: &Coefficient, a: &TorusElement) -> TorusElement {
        a.scale(c)
    }

    fn qpow(&self, k: i32, a: &TorusElement) -> TorusElement {
        a.shift_t(4 * k)
    }
}

/// Bilinear extension of `W(u) W(v) = t^{u^T beta v} W(u + v)`.
pub fn torus_mul(
    x: &TorusElement,
    y: &TorusElement,
    form: &SkewForm,
) -> Result<TorusElement, QringError> {
    form.check(x)?;
    form.check(y)?;
    let mut acc: BTreeMap<TorusMonomial, Coefficient> = BTreeMap::new();
    for (u, cu) in &x.terms {
        let bu: Vec<i32> = (0..form.n)
            .map(|j| (0..form.n).map(|i| u[i] * form.get(i, j)).sum())
            .collect();
        for (v, cv) in &y.terms {
            let tw: i32 = bu.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
            let w = u.add(v);
            let c = (cu * cv).shift_t(tw);
            match acc.get_mut(&w) {
                Some(e) => {
                    let s = &*e + &c;
                    if s.is_zero() {
                        acc.remove(&w);
                    } else {
                        *e = s;
                    }
                }
                None => {
                    if !c.is_zero() {
                        acc.insert(w, c);
                    }
                }
            }
        }
    }
    Ok(TorusElement {
        dim: form.n,
        terms: acc,
    })
}

pub fn torus_star(x: &TorusElement) -> TorusElement {
    x.star()
}

pub fn even_check(x: &TorusElement, affected: &[usize]) -> bool {
    x.even_check(affected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs_form() -> SkewForm {
        // generators (X, S), {X,S} = 1
        SkewForm::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap()
    }

    #[test]
    fn exponentials_q_commute() {
        let f = xs_form();
        let ex = TorusElement::monomial(&[2, 0]);
        let es = TorusElement::monomial(&[0, 2]);
        let prod = f.mul(&ex, &es);
        assert_eq!(prod, TorusElement::term(&[2, 2], Coefficient::t_pow(4)));
        let rev = f.mul(&es, &ex);
        assert_eq!(prod, rev.shift_t(8));
    }

    #[test]
    fn unit_is_neutral() {
        let f = xs_form();
        let x = TorusElement::monomial(&[1, -3]).add(&TorusElement::scalar(2, 5.into()));
        assert_eq!(f.mul(&x, &TorusElement::one(2)), x);
        assert_eq!(f.mul(&TorusElement::one(2), &x), x);
    }

    #[test]
    fn star_reverses_products() {
        let f = xs_form();
        let ex = TorusElement::monomial(&[2, 0]);
        let es = TorusElement::monomial(&[0, 2]);
        let lhs = f.mul(&ex, &es).star();
        assert_eq!(lhs, TorusElement::term(&[2, 2], Coefficient::t_pow(-4)));
        assert_eq!(lhs, f.mul(&es.star(), &ex.star()));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let f = xs_form();
        let bad = TorusElement::monomial(&[1, 0, 0]);
        assert!(matches!(
            torus_mul(&bad, &bad, &f),
            Err(QringError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn skew_form_validation() {
        assert!(SkewForm::from_rows(&[vec![0, 1], vec![1, 0]]).is_err());
        assert!(SkewForm::from_rows(&[vec![0, 3], vec![-3, 0]]).is_err());
    }

    #[test]
    fn even_check_examples() {
        // X, Z: e^{-X-Z} + e^{-Z}
        let a = TorusElement::monomial(&[-2, -2]).add(&TorusElement::monomial(&[0, -2]));
        assert!(a.even_check(&[0, 1]));
        assert!(!TorusElement::monomial(&[0, 1]).even_check(&[1]));
    }
}

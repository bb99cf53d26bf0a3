use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Values for named central parameters, used when a coefficient is evaluated numerically.
pub type ParamValues = BTreeMap<String, f64>;

/// Product of named central parameters with positive integer powers, sorted by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamMonomial(Vec<(Arc<str>, u32)>);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        ParamMonomial(vec![(Arc::from(name), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(n, p)| (n.as_ref(), *p))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, p)| p).sum()
    }

    pub fn mul(&self, other: &ParamMonomial) -> ParamMonomial {
        if other.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return other.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        ParamMonomial(out)
    }

    fn eval(&self, values: &ParamValues) -> Option<f64> {
        let mut acc = 1.0;
        for (name, p) in &self.0 {
            acc *= values.get(name.as_ref())?.powi(*p as i32);
        }
        Some(acc)
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, p) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *p == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{p}")?;
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in `t = q^{1/4}` with rational coefficients that are
/// polynomials in named central parameters.
///
/// Terms are kept sorted by `(t-exponent, parameter monomial)` with no zero
/// values, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coefficient {
    terms: Vec<(i32, ParamMonomial, Rational)>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(v: Rational) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        Coefficient {
            terms: vec![(0, ParamMonomial::one(), v)],
        }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `t^k`.
    pub fn t_pow(k: i32) -> Self {
        Coefficient {
            terms: vec![(k, ParamMonomial::one(), Rational::one())],
        }
    }

    /// `q^k = t^{4k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::t_pow(4 * k)
    }

    pub fn param(name: &str) -> Self {
        Coefficient {
            terms: vec![(0, ParamMonomial::var(name), Rational::one())],
        }
    }

    /// `q^k - q^{-k}`.
    pub fn q_diff(k: i32) -> Self {
        &Self::q_pow(k) - &Self::q_pow(-k)
    }

    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (i32, ParamMonomial, Rational)>,
    {
        let mut terms: Vec<_> = it.into_iter().collect();
        normalize(&mut terms);
        Coefficient { terms }
    }

    pub fn terms(&self) -> &[(i32, ParamMonomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].0 == 0
            && self.terms[0].1.is_one()
            && self.terms[0].2.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiply by `t^k`.
    pub fn shift_t(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        Coefficient {
            terms: self
                .terms
                .iter()
                .map(|(e, m, r)| (e + k, m.clone(), r.clone()))
                .collect(),
        }
    }

    /// Bar involution `t -> 1/t`; parameters and rationals are fixed.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, m, r)| (-e, m.clone(), r.clone()))
            .collect();
        terms.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        Coefficient { terms }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Coefficient {
            terms: self
                .terms
                .iter()
                .map(|(e, m, v)| (*e, m.clone(), v * r))
                .collect(),
        }
    }

    /// Substitute `t = 1`, keeping the parameters symbolic.
    pub fn at_t_one(&self) -> Coefficient {
        Self::from_terms(self.terms.iter().map(|(_, m, r)| (0, m.clone(), r.clone())))
    }

    /// Rational value when the coefficient is a plain constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, m, r)] if m.is_one() => Some(r.clone()),
            _ => None,
        }
    }

    pub fn params(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .terms
            .iter()
            .flat_map(|(_, m, _)| m.factors().map(|(n, _)| n.to_string()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn eval_complex(&self, t: Complex64, params: &ParamValues) -> Option<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, m, r) in &self.terms {
            let pv = m.eval(params)?;
            acc += t.powi(*e) * (pv * rational_to_f64(r));
        }
        Some(acc)
    }

    /// Value at `q = 1`.
    pub fn eval_classical(&self, params: &ParamValues) -> Option<f64> {
        let mut acc = 0.0;
        for (_, m, r) in &self.terms {
            acc += m.eval(params)? * rational_to_f64(r);
        }
        Some(acc)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

fn normalize(terms: &mut Vec<(i32, ParamMonomial, Rational)>) {
    terms.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut out: Vec<(i32, ParamMonomial, Rational)> = Vec::with_capacity(terms.len());
    for (e, m, r) in terms.drain(..) {
        match out.last_mut() {
            Some(last) if last.0 == e && last.1 == m => last.2 += r,
            _ => {
                if let Some(last) = out.last() {
                    if last.2.is_zero() {
                        out.pop();
                    }
                }
                out.push((e, m, r));
            }
        }
    }
    if let Some(last) = out.last() {
        if last.2.is_zero() {
            out.pop();
        }
    }
    *terms = out;
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let a = &self.terms[i];
            let b = &rhs.terms[j];
            match (a.0, &a.1).cmp(&(b.0, &b.1)) {
                std::cmp::Ordering::Less => {
                    terms.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a.2 + &b.2;
                    if !s.is_zero() {
                        terms.push((a.0, a.1.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&rhs.terms[j..]);
        Coefficient { terms }
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            terms: self
                .terms
                .iter()
                .map(|(e, m, r)| (*e, m.clone(), -r))
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if let [(e, m, r)] = self.terms.as_slice() {
            if m.is_one() {
                let mut out = rhs.shift_t(*e);
                if !r.is_one() {
                    out = out.scale(r);
                }
                return out;
            }
        }
        if let [(e, m, r)] = rhs.terms.as_slice() {
            if m.is_one() {
                let mut out = self.shift_t(*e);
                if !r.is_one() {
                    out = out.scale(r);
                }
                return out;
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (e1, m1, r1) in &self.terms {
            for (e2, m2, r2) in &rhs.terms {
                terms.push((e1 + e2, m1.mul(m2), r1 * r2));
            }
        }
        normalize(&mut terms);
        Coefficient { terms }
    }
}

impl From<i64> for Coefficient {
    fn from(v: i64) -> Self {
        Coefficient::from_int(v)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, m, r)) in self.terms.iter().enumerate() {
            let neg = r.is_negative();
            if idx > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = r.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() {
                parts.push(a.to_string());
            }
            if *e != 0 {
                parts.push(format!("t^{e}"));
            }
            if !m.is_one() {
                parts.push(m.to_string());
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_after_cancellation() {
        let a = &Coefficient::q_pow(1) + &Coefficient::param("omega_1");
        let b = &a - &Coefficient::q_pow(1);
        assert_eq!(b, Coefficient::param("omega_1"));
        assert!((&b - &b).is_zero());
    }

    #[test]
    fn bar_is_involution_and_ring_map() {
        let a = &Coefficient::t_pow(3) + &Coefficient::ratio(-2, 5);
        let b = &Coefficient::param("a") * &Coefficient::t_pow(-1);
        assert_eq!(a.bar().bar(), a);
        assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn q_diff_vanishes_at_q_one() {
        assert!(Coefficient::q_diff(2).at_t_one().is_zero());
        let v = Coefficient::q_diff(1)
            .eval_complex(Complex64::new(1.0, 0.0), &ParamValues::new())
            .unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn param_products_merge_powers() {
        let w = Coefficient::param("omega_0");
        let sq = &w * &w;
        assert_eq!(sq.terms()[0].1.degree(), 2);
        assert_eq!(sq.to_string(), "omega_0^2");
        let mut vals = ParamValues::new();
        vals.insert("omega_0".into(), 3.0);
        assert_eq!(sq.eval_classical(&vals), Some(9.0));
        assert_eq!(sq.eval_classical(&ParamValues::new()), None);
    }
}

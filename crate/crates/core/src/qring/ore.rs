//! Right fractions `N * D_1^{-1} ... D_m^{-1}` over the quantum torus, where each
//! `D` is a unidirectional polynomial `1 + sum_k c_k W(k d)` with unit constant term.
//!
//! Moving a monomial to the left of a denominator shifts its coefficients:
//! `D^{-1} W(u) = W(u) D'^{-1}` with `c_k -> c_k t^{-2k u^T beta d}`.
//! All denominators occurring in one element must pairwise commute.

use std::collections::BTreeMap;

use super::{Coefficient, QringError, Ring, SkewForm, TorusElement, TorusMonomial};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QDenominator {
    direction: TorusMonomial,
    coeffs: Vec<Coefficient>,
}

impl QDenominator {
    pub fn new(direction: TorusMonomial, coeffs: Vec<Coefficient>) -> Result<Self, QringError> {
        if direction.is_zero() {
            return Err(QringError::Denominator("zero direction".into()));
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(QringError::Denominator(
                "degree must be at least one".into(),
            ));
        }
        Ok(QDenominator { direction, coeffs })
    }

    /// `1 + c W(d)`.
    pub fn binomial(direction: TorusMonomial, c: Coefficient) -> Result<Self, QringError> {
        Self::new(direction, vec![c])
    }

    pub fn direction(&self) -> &TorusMonomial {
        &self.direction
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_torus(&self) -> TorusElement {
        let dim = self.direction.len();
        let mut out = TorusElement::one(dim);
        for (k, c) in self.coeffs.iter().enumerate() {
            let m = self.direction.scaled(k as i32 + 1);
            out = out.add(&TorusElement::term(&m, c.clone()));
        }
        out
    }

    /// Denominator `D'` with `D W(u) = W(u) D'`.
    pub fn shifted(&self, u: &[i32], form: &SkewForm) -> QDenominator {
        let s = form.pair(u, &self.direction);
        if s == 0 {
            return self.clone();
        }
        QDenominator {
            direction: self.direction.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.shift_t(-2 * (k as i32 + 1) * s))
                .collect(),
        }
    }

    /// Image under the star involution (coefficients barred, monomials fixed).
    pub fn star(&self) -> QDenominator {
        QDenominator {
            direction: self.direction.clone(),
            coeffs: self.coeffs.iter().map(|c| c.bar()).collect(),
        }
    }

    pub fn commutes_with(&self, other: &QDenominator, form: &SkewForm) -> bool {
        form.pair(&self.direction, &other.direction) == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreTerm {
    pub numerator: TorusElement,
    /// Sorted; the factors commute so the order is canonical only.
    pub denominators: Vec<QDenominator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreElement {
    dim: usize,
    terms: Vec<OreTerm>,
}

impl From<TorusElement> for OreElement {
    fn from(x: TorusElement) -> Self {
        let dim = x.dim();
        let terms = if x.is_zero() {
            Vec::new()
        } else {
            vec![OreTerm {
                numerator: x,
                denominators: Vec::new(),
            }]
        };
        OreElement { dim, terms }
    }
}

impl OreElement {
    pub fn zero(dim: usize) -> Self {
        OreElement {
            dim,
            terms: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[OreTerm] {
        &self.terms
    }

    /// `N * D_1^{-1} ... D_m^{-1}`.
    pub fn fraction(numerator: TorusElement, dens: Vec<QDenominator>) -> Self {
        let dim = numerator.dim();
        Self::from_terms(
            dim,
            vec![OreTerm {
                numerator,
                denominators: dens,
            }],
        )
    }

    pub fn inverse_of(d: &QDenominator) -> Self {
        let dim = d.direction.len();
        Self::fraction(TorusElement::one(dim), vec![d.clone()])
    }

    pub fn from_terms(dim: usize, terms: Vec<OreTerm>) -> Self {
        let mut grouped: BTreeMap<Vec<QDenominator>, TorusElement> = BTreeMap::new();
        for mut t in terms {
            if t.numerator.is_zero() {
                continue;
            }
            t.denominators.sort();
            match grouped.get_mut(&t.denominators) {
                Some(n) => *n = n.add(&t.numerator),
                None => {
                    grouped.insert(t.denominators, t.numerator);
                }
            }
        }
        OreElement {
            dim,
            terms: grouped
                .into_iter()
                .filter(|(_, n)| !n.is_zero())
                .map(|(d, n)| OreTerm {
                    numerator: n,
                    denominators: d,
                })
                .collect(),
        }
    }

    /// Plain torus element when no term carries a denominator.
    pub fn as_torus(&self) -> Option<TorusElement> {
        let mut acc = TorusElement::zero(self.dim);
        for t in &self.terms {
            if !t.denominators.is_empty() {
                return None;
            }
            acc = acc.add(&t.numerator);
        }
        Some(acc)
    }

    pub fn is_syntactically_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &OreElement) -> OreElement {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(self.dim, terms)
    }

    pub fn neg(&self) -> OreElement {
        OreElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|t| OreTerm {
                    numerator: t.numerator.neg(),
                    denominators: t.denominators.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> OreElement {
        Self::from_terms(
            self.dim,
            self.terms
                .iter()
                .map(|t| OreTerm {
                    numerator: t.numerator.scale(c),
                    denominators: t.denominators.clone(),
                })
                .collect(),
        )
    }

    fn all_denominators(&self) -> impl Iterator<Item = &QDenominator> {
        self.terms.iter().flat_map(|t| t.denominators.iter())
    }

    /// Product with every denominator pushed to the right of its term.
    pub fn mul(&self, other: &OreElement, form: &SkewForm) -> Result<OreElement, QringError> {
        for d in self.all_denominators() {
            for e in other.all_denominators() {
                if !d.commutes_with(e, form) {
                    return Err(QringError::Denominator(
                        "denominators with non-commuting directions".into(),
                    ));
                }
            }
        }
        let mut out = Vec::new();
        for s in &self.terms {
            for o in &other.terms {
                if s.denominators.is_empty() {
                    out.push(OreTerm {
                        numerator: form.mul(&s.numerator, &o.numerator),
                        denominators: o.denominators.clone(),
                    });
                    continue;
                }
                // split o's numerator by the shift it induces on s's denominators
                let mut by_shift: BTreeMap<Vec<QDenominator>, TorusElement> = BTreeMap::new();
                for (u, c) in o.numerator.terms() {
                    let dens: Vec<QDenominator> =
                        s.denominators.iter().map(|d| d.shifted(u, form)).collect();
                    let piece = TorusElement::term(u, c.clone());
                    match by_shift.get_mut(&dens) {
                        Some(acc) => *acc = acc.add(&piece),
                        None => {
                            by_shift.insert(dens, piece);
                        }
                    }
                }
                for (mut dens, piece) in by_shift {
                    dens.extend(o.denominators.iter().cloned());
                    out.push(OreTerm {
                        numerator: form.mul(&s.numerator, &piece),
                        denominators: dens,
                    });
                }
            }
        }
        Ok(Self::from_terms(self.dim, out))
    }

    /// Antilinear antiautomorphism extending the torus star.
    pub fn star(&self, form: &SkewForm) -> OreElement {
        let mut out = Vec::new();
        for t in &self.terms {
            // star(N D1^-1 .. Dm^-1) = Dm*^-1 .. D1*^-1 N*
            let dens: Vec<QDenominator> = t.denominators.iter().map(|d| d.star()).collect();
            let n = t.numerator.star();
            for (u, c) in n.terms() {
                out.push(OreTerm {
                    numerator: TorusElement::term(u, c.clone()),
                    denominators: dens.iter().map(|d| d.shifted(u, form)).collect(),
                });
            }
        }
        Self::from_terms(self.dim, out)
    }

    /// Exact zero test by progressive right-multiplication with denominators.
    ///
    /// Right multiplication by a nonzero element is injective in the
    /// localized torus, so clearing preserves zero-ness. The multiset of
    /// distinct denominator factors shrinks at every step.
    pub fn is_zero(&self, form: &SkewForm) -> bool {
        let mut terms = self.terms.clone();
        while let Some(d) = terms.iter().find_map(|t| t.denominators.last().cloned()) {
            let dt = d.to_torus();
            for t in terms.iter_mut() {
                if let Some(pos) = t.denominators.iter().position(|x| *x == d) {
                    t.denominators.remove(pos);
                } else {
                    t.numerator = form.mul(&t.numerator, &dt);
                }
            }
            let dim = self.dim;
            terms = Self::from_terms(dim, terms).terms;
        }
        terms.iter().all(|t| t.numerator.is_zero())
    }

    /// Number of denominator factors across all terms.
    pub fn denominator_count(&self) -> usize {
        self.terms.iter().map(|t| t.denominators.len()).sum()
    }
}

/// Ore localization as a [`Ring`]. Panics if two non-commuting denominators meet.
#[derive(Clone, Copy, Debug)]
pub struct OreRing<'a> {
    pub form: &'a SkewForm,
}

impl<'a> OreRing<'a> {
    pub fn new(form: &'a SkewForm) -> Self {
        OreRing { form }
    }
}

impl Ring for OreRing<'_> {
    type Elem = OreElement;

    fn zero(&self) -> OreElement {
        OreElement::zero(self.form.dim())
    }
    fn add(&self, a: &OreElement, b: &OreElement) -> OreElement {
        a.add(b)
    }
    fn neg(&self, a: &OreElement) -> OreElement {
        a.neg()
    }
    fn mul(&self, a: &OreElement, b: &OreElement) -> OreElement {
        a.mul(b, self.form).expect("ore product")
    }
    fn scalar(&self, c: &Coefficient) -> OreElement {
        TorusElement::scalar(self.form.dim(), c.clone()).into()
    }
    fn monomial(&self, du: &[i32]) -> OreElement {
        TorusElement::monomial(du).into()
    }
    fn is_zero(&self, a: &OreElement) -> bool {
        a.is_zero(self.form)
    }
    fn scale(&self, c: &Coefficient, a: &OreElement) -> OreElement {
        a.scale(c)
    }
}

pub fn ore_mul(x: &OreElement, y: &OreElement, form: &SkewForm) -> Result<OreElement, QringError> {
    x.mul(y, form)
}

pub fn ore_zero_test(x: &OreElement, form: &SkewForm) -> bool {
    x.is_zero(form)
}

#[cfg(test)]
mod tests {
    use super::*;

    // generators (A, Z) with {Z, A} = 1
    fn az() -> SkewForm {
        SkewForm::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap()
    }

    fn binom(c: i32) -> QDenominator {
        QDenominator::binomial(TorusMonomial::new(vec![0, 2]), Coefficient::t_pow(c)).unwrap()
    }

    #[test]
    fn commutation_lemma_roundtrip() {
        let f = az();
        let d = binom(4);
        let u = [2, 0];
        let lhs = f.mul(&d.to_torus(), &TorusElement::monomial(&u));
        let rhs = f.mul(&TorusElement::monomial(&u), &d.shifted(&u, &f).to_torus());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fraction_times_its_denominator_is_numerator() {
        let f = az();
        let d = binom(-4);
        let n = TorusElement::monomial(&[2, 0]).add(&TorusElement::monomial(&[-1, 3]));
        let x = OreElement::fraction(n.clone(), vec![d.clone()]);
        let back = x.mul(&d.to_torus().into(), &f).unwrap();
        assert!(back.sub_is_zero(&n.into(), &f));
    }

    #[test]
    fn unit_fraction_is_nonzero_and_difference_is_zero() {
        let f = az();
        let d = binom(4);
        let x = OreElement::fraction(d.to_torus(), vec![d.clone()]);
        assert!(!x.is_zero(&f));
        assert!(x.add(&x.neg()).is_zero(&f));
        let one: OreElement = TorusElement::one(2).into();
        assert!(x.sub_is_zero(&one, &f));
    }

    #[test]
    fn left_inverse_roundtrip() {
        let f = az();
        let d = binom(4);
        let ea = TorusElement::monomial(&[2, 0]);
        // ((1 + q e^Z) e^A) * (e^{-A} (1 + q e^Z)^{-1}) = 1
        let x: OreElement = f.mul(&d.to_torus(), &ea).into();
        let inv = OreElement::fraction(TorusElement::monomial(&[-2, 0]), vec![d.clone()]);
        let one: OreElement = TorusElement::one(2).into();
        assert!(x.mul(&inv, &f).unwrap().sub_is_zero(&one, &f));
    }

    impl OreElement {
        fn sub_is_zero(&self, other: &OreElement, f: &SkewForm) -> bool {
            self.add(&other.neg()).is_zero(f)
        }
    }
}

//! Exact commutative model at `q = 1` with one adjoined square root.

use crate::qring::{Coefficient, Ring, SkewForm, TorusElement};

/// `(u0 + u1 r) / P^k` with `r^2 = P`, over commuting half-exponentials.
#[derive(Clone, Debug, PartialEq)]
pub struct SqrtElem {
    pub rational: TorusElement,
    pub radical: TorusElement,
    pub den: u32,
}

/// Laurent polynomials in `e^{x_i/2}` with `r = sqrt(P)` adjoined.
#[derive(Clone, Debug)]
pub struct SqrtRing {
    comm: SkewForm,
    radicand: TorusElement,
}

impl SqrtRing {
    pub fn new(n: usize, radicand: TorusElement) -> Self {
        SqrtRing {
            comm: SkewForm::zero(n),
            radicand: radicand.at_t_one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.comm.dim()
    }

    fn pow_p(&self, k: u32) -> TorusElement {
        let mut acc = TorusElement::one(self.dim());
        for _ in 0..k {
            acc = self.comm.mul(&acc, &self.radicand);
        }
        acc
    }

    fn lift(&self, x: &SqrtElem, den: u32) -> (TorusElement, TorusElement) {
        let f = self.pow_p(den - x.den);
        (
            self.comm.mul(&x.rational, &f),
            self.comm.mul(&x.radical, &f),
        )
    }

    /// `r`.
    pub fn root(&self) -> SqrtElem {
        SqrtElem {
            rational: TorusElement::zero(self.dim()),
            radical: TorusElement::one(self.dim()),
            den: 0,
        }
    }

    /// `1 / r = r / P`.
    pub fn inv_root(&self) -> SqrtElem {
        SqrtElem {
            den: 1,
            ..self.root()
        }
    }

    pub fn from_torus(&self, x: TorusElement) -> SqrtElem {
        SqrtElem {
            rational: x.at_t_one(),
            radical: TorusElement::zero(self.dim()),
            den: 0,
        }
    }
}

impl Ring for SqrtRing {
    type Elem = SqrtElem;

    fn zero(&self) -> SqrtElem {
        self.from_torus(TorusElement::zero(self.dim()))
    }
    fn add(&self, a: &SqrtElem, b: &SqrtElem) -> SqrtElem {
        let den = a.den.max(b.den);
        let (a0, a1) = self.lift(a, den);
        let (b0, b1) = self.lift(b, den);
        SqrtElem {
            rational: a0.add(&b0),
            radical: a1.add(&b1),
            den,
        }
    }
    fn neg(&self, a: &SqrtElem) -> SqrtElem {
        SqrtElem {
            rational: a.rational.neg(),
            radical: a.radical.neg(),
            den: a.den,
        }
    }
    fn mul(&self, a: &SqrtElem, b: &SqrtElem) -> SqrtElem {
        let m = |x: &TorusElement, y: &TorusElement| self.comm.mul(x, y);
        let rr = m(&m(&a.radical, &b.radical), &self.radicand);
        SqrtElem {
            rational: m(&a.rational, &b.rational).add(&rr),
            radical: m(&a.rational, &b.radical).add(&m(&a.radical, &b.rational)),
            den: a.den + b.den,
        }
    }
    fn scalar(&self, c: &Coefficient) -> SqrtElem {
        self.from_torus(TorusElement::scalar(self.dim(), c.clone()))
    }
    fn monomial(&self, du: &[i32]) -> SqrtElem {
        self.from_torus(TorusElement::monomial(du))
    }
    /// `1, r` are independent over the rational functions when `P` is not a square.
    fn is_zero(&self, a: &SqrtElem) -> bool {
        a.rational.is_zero() && a.radical.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_squares_to_radicand() {
        let p = TorusElement::one(1).add(&TorusElement::monomial(&[2]));
        let r = SqrtRing::new(1, p.clone());
        let sq = r.mul(&r.root(), &r.root());
        assert!(r.is_zero(&r.sub(&sq, &r.from_torus(p))));
        let one = r.mul(&r.root(), &r.inv_root());
        assert!(r.is_zero(&r.sub(&one, &r.one())));
    }
}

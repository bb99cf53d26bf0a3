use super::Coefficient;

/// Minimal ring interface shared by the exact quantum torus, its Ore
/// localization, scalar coefficients and the numeric oracle models.
///
/// Identity catalogs are written once against this trait and evaluated in
/// every model.
pub trait Ring {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Central scalar.
    fn scalar(&self, c: &Coefficient) -> Self::Elem;
    /// Weyl-ordered exponential on the doubled lattice.
    fn monomial(&self, du: &[i32]) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn one(&self) -> Self::Elem {
        self.scalar(&Coefficient::one())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn scale(&self, c: &Coefficient, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.scalar(c), a)
    }

    /// Multiply by `q^k`.
    fn qpow(&self, k: i32, a: &Self::Elem) -> Self::Elem {
        if k == 0 {
            return a.clone();
        }
        self.scale(&Coefficient::q_pow(k), a)
    }

    fn sum<'a, I>(&self, it: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for x in it {
            acc = self.add(&acc, x);
        }
        acc
    }

    fn product(&self, factors: &[&Self::Elem]) -> Self::Elem {
        let mut it = factors.iter();
        let Some(first) = it.next() else {
            return self.one();
        };
        let mut acc = (*first).clone();
        for f in it {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// `a b - b a`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }
}

/// Coefficients as a commutative ring; used for scalar R-matrices.
#[derive(Clone, Copy, Debug, Default)]
pub struct ScalarRing;

impl Ring for ScalarRing {
    type Elem = Coefficient;

    fn zero(&self) -> Coefficient {
        Coefficient::zero()
    }
    fn add(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        a + b
    }
    fn neg(&self, a: &Coefficient) -> Coefficient {
        -a
    }
    fn mul(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        a * b
    }
    fn scalar(&self, c: &Coefficient) -> Coefficient {
        c.clone()
    }
    fn monomial(&self, du: &[i32]) -> Coefficient {
        assert!(
            du.iter().all(|&x| x == 0),
            "scalar ring has no torus generators"
        );
        Coefficient::one()
    }
    fn is_zero(&self, a: &Coefficient) -> bool {
        a.is_zero()
    }
}

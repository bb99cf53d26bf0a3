//! Commutative evaluation at `q = 1` with real shear values.

use crate::qring::{Coefficient, ParamValues, Ring};

/// Real shears `x_i`; `W(u)` evaluates to `exp(sum u_i x_i / 2)`.
#[derive(Clone, Debug)]
pub struct FloatRing {
    pub values: Vec<f64>,
    pub params: ParamValues,
}

impl FloatRing {
    pub fn new(values: Vec<f64>, params: ParamValues) -> Self {
        FloatRing { values, params }
    }
}

impl Ring for FloatRing {
    type Elem = f64;

    fn zero(&self) -> f64 {
        0.0
    }
    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }
    fn neg(&self, a: &f64) -> f64 {
        -a
    }
    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }
    fn scalar(&self, c: &Coefficient) -> f64 {
        c.eval_classical(&self.params).unwrap_or(f64::NAN)
    }
    fn monomial(&self, du: &[i32]) -> f64 {
        let s: f64 = du
            .iter()
            .zip(&self.values)
            .map(|(&u, &x)| u as f64 * x)
            .sum();
        (s / 2.0).exp()
    }
    fn is_zero(&self, a: &f64) -> bool {
        *a == 0.0
    }
}

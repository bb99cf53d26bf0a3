//! Clock-and-shift representations of the quantum torus at a root of unity.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num::complex::Complex64;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::normal_form::{skew_normal_form, SkewNormalForm};
use crate::qring::{
    Coefficient, OreElement, ParamValues, QDenominator, Ring, SkewForm, TorusElement,
};

/// Sparse square complex matrix, rows sorted by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat {
    dim: usize,
    rows: Vec<Vec<(u32, Complex64)>>,
}

impl SparseMat {
    pub fn zero(dim: usize) -> Self {
        SparseMat {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn scalar(dim: usize, c: Complex64) -> Self {
        let mut m = Self::zero(dim);
        if c != Complex64::new(0.0, 0.0) {
            for i in 0..dim {
                m.rows[i].push((i as u32, c));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                        out.push(a[i]);
                        i += 1;
                    } else if i == a.len() || b[j].0 < a[i].0 {
                        out.push(b[j]);
                        j += 1;
                    } else {
                        out.push((a[i].0, a[i].1 + b[j].1));
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        SparseMat {
            dim: self.dim,
            rows,
        }
    }

    pub fn scale(&self, c: Complex64) -> SparseMat {
        SparseMat {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&(j, v)| (j, v * c)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        let mut acc = vec![Complex64::new(0.0, 0.0); self.dim];
        let mut touched = vec![false; self.dim];
        let mut cols: Vec<u32> = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for &(k, v) in r {
                    for &(j, w) in &other.rows[k as usize] {
                        if !touched[j as usize] {
                            touched[j as usize] = true;
                            cols.push(j);
                        }
                        acc[j as usize] += v * w;
                    }
                }
                cols.sort_unstable();
                let out = cols
                    .iter()
                    .map(|&j| {
                        let v = acc[j as usize];
                        acc[j as usize] = Complex64::new(0.0, 0.0);
                        touched[j as usize] = false;
                        (j, v)
                    })
                    .collect();
                cols.clear();
                out
            })
            .collect();
        SparseMat {
            dim: self.dim,
            rows,
        }
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter().map(|(_, v)| v.norm_sqr()))
            .sum::<f64>()
            .sqrt()
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                m[(i, j as usize)] += v;
            }
        }
        m
    }

    pub fn from_dense(m: &DMatrix<Complex64>) -> SparseMat {
        let dim = m.nrows();
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .filter(|&j| m[(i, j)] != Complex64::new(0.0, 0.0))
                    .map(|j| (j as u32, m[(i, j)]))
                    .collect()
            })
            .collect();
        SparseMat { dim, rows }
    }
}

/// Failure of a numeric evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("coefficient has unbound parameter")]
    UnboundParam,
    #[error("denominator is ill-conditioned (estimate {0:.3e})")]
    IllConditioned(f64),
    #[error("representation dimension {0} exceeds the limit")]
    TooLarge(usize),
    #[error("modulus {0} is below 3")]
    ModulusTooSmall(u32),
}

/// Irreducible-type representation of the torus of a skew form: one clock
/// and shift pair per symplectic block, random scalars on central directions.
#[derive(Clone, Debug)]
pub struct ClockShiftRep {
    modulus: u32,
    t: Complex64,
    nf: SkewNormalForm,
    /// Scalars attached to each normal-form direction.
    lambdas: Vec<Complex64>,
    /// Clock-shift factor sizes per block.
    sizes: Vec<usize>,
    dim: usize,
    pub params: ParamValues,
}

pub const MAX_DIM: usize = 4096;

impl ClockShiftRep {
    /// `t = exp(i pi / N)`, so `q = t^4` is a primitive root of unity.
    pub fn new(
        form: &SkewForm,
        modulus: u32,
        seed: u64,
        params: ParamValues,
    ) -> Result<Self, OracleError> {
        if modulus < 3 {
            return Err(OracleError::ModulusTooSmall(modulus));
        }
        let nf = skew_normal_form(&form.rows());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (modulus as u64).wrapping_mul(0x9e37_79b9));
        let n = form.dim();
        let lambdas = (0..n)
            .map(|_| {
                let r: f64 = rng.gen_range(0.8..1.25);
                let th: f64 = rng.gen_range(0.0..2.0 * PI);
                Complex64::from_polar(r, th)
            })
            .collect();
        let sizes: Vec<usize> = nf.blocks.iter().map(|_| modulus as usize).collect();
        let dim = sizes.iter().product::<usize>();
        if dim > MAX_DIM {
            return Err(OracleError::TooLarge(dim));
        }
        Ok(ClockShiftRep {
            modulus,
            t: Complex64::from_polar(1.0, PI / modulus as f64),
            nf,
            lambdas,
            sizes,
            dim,
            params,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t(&self) -> Complex64 {
        self.t
    }

    /// Image of `W(u)`: a generalized permutation matrix.
    pub fn monomial(&self, du: &[i32]) -> SparseMat {
        let n = du.len();
        // w = u P^{-1}
        let w: Vec<i64> = (0..n)
            .map(|a| (0..n).map(|i| du[i] as i64 * self.nf.p_inv[i][a]).sum())
            .collect();
        let mut scalar = Complex64::new(1.0, 0.0);
        let mut tpow: i64 = 0;
        for (a, &wa) in w.iter().enumerate() {
            scalar *= self.lambdas[a].powi(wa as i32);
        }
        let mut clocks = Vec::with_capacity(self.sizes.len());
        let mut shifts = Vec::with_capacity(self.sizes.len());
        for (k, &d) in self.nf.blocks.iter().enumerate() {
            let (wa, wb) = (w[2 * k], w[2 * k + 1]);
            tpow -= d * wa * wb;
            clocks.push(d * wa);
            shifts.push(wb);
        }
        scalar *= self.t.powi(tpow.rem_euclid(2 * self.modulus as i64) as i32);
        // zeta = t^2; C e_k = zeta^k e_k, S e_k = e_{k+1}; factor order C^c S^s
        let mut rows = vec![Vec::new(); self.dim];
        for col in 0..self.dim {
            let mut rest = col;
            let mut target = 0usize;
            let mut stride = 1usize;
            let mut phase: i64 = 0;
            for (f, &size) in self.sizes.iter().enumerate() {
                let k = (rest % size) as i64;
                rest /= size;
                let kk = (k + shifts[f]).rem_euclid(size as i64);
                phase += 2 * clocks[f] * kk;
                target += kk as usize * stride;
                stride *= size;
            }
            let v = scalar
                * self
                    .t
                    .powi((phase.rem_euclid(2 * self.modulus as i64)) as i32);
            rows[target].push((col as u32, v));
        }
        for r in rows.iter_mut() {
            r.sort_by_key(|x| x.0);
        }
        SparseMat {
            dim: self.dim,
            rows,
        }
    }

    pub fn coefficient(&self, c: &Coefficient) -> Result<Complex64, OracleError> {
        c.eval_complex(self.t, &self.params)
            .ok_or(OracleError::UnboundParam)
    }

    pub fn torus(&self, x: &TorusElement) -> Result<SparseMat, OracleError> {
        let mut acc = SparseMat::zero(self.dim);
        for (u, c) in x.terms() {
            acc = acc.add(&self.monomial(u).scale(self.coefficient(c)?));
        }
        Ok(acc)
    }

    pub fn denominator(&self, d: &QDenominator) -> Result<SparseMat, OracleError> {
        self.torus(&d.to_torus())
    }

    /// `N D_1^{-1} .. D_m^{-1}` summed over terms, via dense solves.
    pub fn ore(&self, x: &OreElement) -> Result<SparseMat, OracleError> {
        let mut acc = SparseMat::zero(self.dim);
        for t in x.terms() {
            let mut m = self.torus(&t.numerator)?.to_dense();
            for d in &t.denominators {
                let dm = self.denominator(d)?.to_dense();
                let lu = dm.clone().lu();
                let inv = lu
                    .try_inverse()
                    .ok_or(OracleError::IllConditioned(f64::INFINITY))?;
                let cond = dm.norm() * inv.norm() / self.dim as f64;
                if !cond.is_finite() || cond > 1e8 {
                    return Err(OracleError::IllConditioned(cond));
                }
                m *= inv;
            }
            acc = acc.add(&SparseMat::from_dense(&m));
        }
        Ok(acc)
    }
}

/// The representation as a numeric [`Ring`]; unbound parameters evaluate to NaN.
pub struct NumRing<'a> {
    pub rep: &'a ClockShiftRep,
}

impl Ring for NumRing<'_> {
    type Elem = SparseMat;

    fn zero(&self) -> SparseMat {
        SparseMat::zero(self.rep.dim)
    }
    fn add(&self, a: &SparseMat, b: &SparseMat) -> SparseMat {
        a.add(b)
    }
    fn neg(&self, a: &SparseMat) -> SparseMat {
        a.scale(Complex64::new(-1.0, 0.0))
    }
    fn mul(&self, a: &SparseMat, b: &SparseMat) -> SparseMat {
        a.mul(b)
    }
    fn scalar(&self, c: &Coefficient) -> SparseMat {
        let v = self
            .rep
            .coefficient(c)
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN));
        SparseMat::scalar(self.rep.dim, v)
    }
    fn monomial(&self, du: &[i32]) -> SparseMat {
        self.rep.monomial(du)
    }
    fn is_zero(&self, a: &SparseMat) -> bool {
        a.rows.iter().all(|r| r.is_empty())
    }
    fn scale(&self, c: &Coefficient, a: &SparseMat) -> SparseMat {
        let v = self
            .rep
            .coefficient(c)
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN));
        a.scale(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_diff(a: &SparseMat, b: &SparseMat) -> f64 {
        a.add(&b.scale(Complex64::new(-1.0, 0.0))).norm() / a.norm().max(1.0)
    }

    #[test]
    fn weyl_product_rule_holds() {
        let form = SkewForm::from_rows(&[
            vec![0, 1, -1, 0],
            vec![-1, 0, 1, 1],
            vec![1, -1, 0, 2],
            vec![0, -1, -2, 0],
        ])
        .unwrap();
        for modulus in [5, 7] {
            let rep = ClockShiftRep::new(&form, modulus, 3, ParamValues::new()).unwrap();
            let us = [
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 1, 1],
                [1, -1, 2, 0],
                [0, 0, 0, -1],
            ];
            for u in &us {
                for v in &us {
                    let lhs = rep.monomial(u).mul(&rep.monomial(v));
                    let s: Vec<i32> = u.iter().zip(v).map(|(a, b)| a + b).collect();
                    let k = form.pair(u, v);
                    let rhs = rep.monomial(&s).scale(rep.t().powi(k));
                    assert!(rel_diff(&lhs, &rhs) < 1e-10, "{u:?} {v:?}");
                }
            }
        }
    }
}

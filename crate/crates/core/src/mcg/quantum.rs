//! Quantum flips as substitutions from the flipped torus into the Ore
//! localization of the original torus.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::classical::{classical_flip, classical_pending_flip, ShearState};
use crate::fatgraph::{FatGraph, FlipError};
use crate::oracle::FloatRing;
use crate::qring::{
    Coefficient, OreElement, QDenominator, Ring, SkewForm, TorusElement, TorusMonomial,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SubstError {
    #[error(transparent)]
    Flip(#[from] FlipError),
    #[error("odd exponent in flip-adjacent generator {0}")]
    OddExponent(String),
    #[error("half-integer flip multiplicity for {0}")]
    HalfMultiplicity(String),
    #[error("commutation with the flipped edge is {got}, expected {expected}")]
    Multiplicity { got: i32, expected: i32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubstKind {
    Inner,
    Pending,
}

/// Image table of `e^{x~_i} -> [prod_j P_j]^{sgn k} e^{L_i}` where `L_i` is the
/// linear part, `k_i` the multiplicity and `P_j` the q-shifted flip polynomials.
#[derive(Clone, Debug)]
pub struct QuantumSubstitution {
    pub kind: SubstKind,
    pub source_graph: FatGraph,
    pub target_graph: FatGraph,
    pub source: SkewForm,
    pub target: SkewForm,
    pub edge: String,
    z: usize,
    omega: Coefficient,
    /// Linear part per generator, source coordinates (true exponents).
    linear: Vec<Vec<i32>>,
    /// Multiplicity per generator.
    kappa: Vec<i32>,
    affected: Vec<usize>,
}

impl QuantumSubstitution {
    /// Inner flip of `edge`; coinciding roles add per slot.
    pub fn inner(g: &FatGraph, edge: &str) -> Result<Self, SubstError> {
        let (tg, r) = g.flip(edge)?;
        let n = g.n_edges();
        let mut linear: Vec<Vec<i32>> = (0..n).map(|i| unit(n, i, 1)).collect();
        let mut kappa = vec![0; n];
        for a in [r.a, r.c] {
            kappa[a] += 1;
        }
        for b in [r.b, r.d] {
            kappa[b] -= 1;
            linear[b][r.z] += 1;
        }
        linear[r.z] = unit(n, r.z, -1);
        let mut affected = vec![r.a, r.b, r.c, r.d, r.z];
        affected.sort();
        affected.dedup();
        Ok(QuantumSubstitution {
            kind: SubstKind::Inner,
            source: g.skew_form(),
            target: tg.skew_form(),
            source_graph: g.clone(),
            target_graph: tg,
            edge: edge.into(),
            z: r.z,
            omega: Coefficient::zero(),
            linear,
            kappa,
            affected,
        })
    }

    /// Flip of the pending edge `edge` with orbifold weight `omega`.
    pub fn pending(g: &FatGraph, edge: &str) -> Result<Self, SubstError> {
        let (tg, r) = g.flip_pending(edge)?;
        let n = g.n_edges();
        let mut linear: Vec<Vec<i32>> = (0..n).map(|i| unit(n, i, 1)).collect();
        let mut kappa = vec![0; n];
        kappa[r.a] += 1;
        kappa[r.b] -= 1;
        linear[r.b][r.z] += 2;
        linear[r.z] = unit(n, r.z, -1);
        let mut affected = vec![r.a, r.b, r.z];
        affected.sort();
        affected.dedup();
        Ok(QuantumSubstitution {
            kind: SubstKind::Pending,
            source: g.skew_form(),
            target: tg.skew_form(),
            source_graph: g.clone(),
            target_graph: tg,
            edge: edge.into(),
            z: r.z,
            omega: r.omega,
            linear,
            kappa,
            affected,
        })
    }

    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    pub fn affected(&self) -> &[usize] {
        &self.affected
    }

    /// `q`-shifted flip polynomial `1 + q^s w e^Z + q^{2s} e^{2Z}` (pending) or
    /// `1 + q^s e^Z` (inner), as coefficients of `e^{jZ}`.
    fn factor(&self, s: i32) -> Vec<Coefficient> {
        match self.kind {
            SubstKind::Inner => vec![Coefficient::one(), Coefficient::q_pow(s)],
            SubstKind::Pending => vec![
                Coefficient::one(),
                &Coefficient::q_pow(s) * &self.omega,
                Coefficient::q_pow(2 * s),
            ],
        }
    }

    fn flip_product(&self, k: i32, s: i32) -> Option<QDenominator> {
        let mut poly = vec![Coefficient::one()];
        for j in 0..k {
            let f = self.factor(s * (2 * j + 1));
            let mut out = vec![Coefficient::zero(); poly.len() + f.len() - 1];
            for (a, x) in poly.iter().enumerate() {
                for (b, y) in f.iter().enumerate() {
                    out[a + b] = &out[a + b] + &(x * y);
                }
            }
            poly = out;
        }
        let dir = TorusMonomial::unit(self.dim(), self.z, 2);
        QDenominator::new(dir, poly[1..].to_vec()).ok()
    }

    /// Image of the target Weyl monomial `W'(u)` by the closed form; needs an
    /// integral multiplicity but no parity condition.
    pub fn image_of(&self, du: &[i32]) -> Result<OreElement, SubstError> {
        let n = self.dim();
        let mut l2 = vec![0; n];
        let mut k2 = 0;
        for (i, &u) in du.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (x, y) in l2.iter_mut().zip(&self.linear[i]) {
                *x += u * y;
            }
            k2 += u * self.kappa[i];
        }
        if k2 % 2 != 0 {
            return Err(SubstError::HalfMultiplicity(format!("{du:?}")));
        }
        let k = k2 / 2;
        let m2 = self.source.pair(&l2, &unit(n, self.z, 1));
        if m2 != -k2 {
            return Err(SubstError::Multiplicity {
                got: m2,
                expected: -k2,
            });
        }
        let w = TorusElement::monomial(&l2);
        if k == 0 {
            return Ok(w.into());
        }
        let d = self
            .flip_product(k.abs(), -k.signum())
            .expect("flip polynomial has positive degree");
        if k > 0 {
            Ok(self.source.mul(&d.to_torus(), &w).into())
        } else {
            Ok(OreElement::fraction(w, vec![d.shifted(&l2, &self.source)]))
        }
    }

    /// Relaxed apply: closed form term by term.
    pub fn apply_relaxed(&self, x: &TorusElement) -> Result<OreElement, SubstError> {
        let mut acc = OreElement::zero(self.dim());
        for (u, c) in x.terms() {
            acc = acc.add(&self.image_of(u)?.scale(c));
        }
        Ok(acc)
    }

    /// Strict apply: even exponents on flip-adjacent generators, monomials
    /// factored generator by generator in index order.
    pub fn apply(&self, x: &TorusElement) -> Result<OreElement, SubstError> {
        for &i in &self.affected {
            if !x.even_check(&[i]) {
                return Err(SubstError::OddExponent(
                    self.target_graph.name(i).to_string(),
                ));
            }
        }
        let n = self.dim();
        let mut acc = OreElement::zero(n);
        for (u, c) in x.terms() {
            let mut corr = 0;
            for i in 0..n {
                for j in i + 1..n {
                    corr -= u[i] * u[j] * self.target.get(i, j);
                }
            }
            let mut term: OreElement = TorusElement::scalar(n, c.shift_t(corr)).into();
            for i in 0..n {
                if u[i] == 0 {
                    continue;
                }
                let g = self.image_of(&unit(n, i, u[i]))?;
                term = term
                    .mul(&g, &self.source)
                    .expect("denominators share one direction");
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Exact invariants of the image table: homomorphism on generator pairs,
    /// star-equivariance, target commutation and the classical limit.
    pub fn check_invariants(&self, samples: usize, seed: u64) -> Vec<(String, bool)> {
        let n = self.dim();
        let f = &self.source;
        let img = |du: &[i32]| self.image_of(du).expect("generator image");
        let gen = |i: usize, s: i32| img(&unit(n, i, 2 * s));
        let mut homo = true;
        let mut comm = true;
        let mut star = true;
        for &i in &self.affected {
            let gi = gen(i, 1);
            let inv = gen(i, -1);
            let one: OreElement = TorusElement::one(n).into();
            homo &= gi.mul(&inv, f).unwrap().add(&one.neg()).is_zero(f);
            star &= gi.star(f).add(&gi.neg()).is_zero(f);
            for j in 0..n {
                if j == i {
                    continue;
                }
                let gj = gen(j, 1);
                let b = self.target.get(i, j);
                let mut sum = unit(n, i, 2);
                sum[j] += 2;
                let prod = gi.mul(&gj, f).unwrap();
                homo &= prod
                    .add(&img(&sum).scale(&Coefficient::t_pow(4 * b)).neg())
                    .is_zero(f);
                let rev = gj.mul(&gi, f).unwrap().scale(&Coefficient::t_pow(8 * b));
                comm &= prod.add(&rev.neg()).is_zero(f);
            }
        }
        vec![
            ("homomorphism".into(), homo),
            ("star-equivariance".into(), star),
            ("target commutation".into(), comm),
            (
                "classical limit".into(),
                self.classical_limit(samples, seed),
            ),
            ("poisson map".into(), self.poisson_exact()),
        ]
    }

    /// At `q = 1` the images agree with the classical flip on random shears.
    pub fn classical_limit(&self, samples: usize, seed: u64) -> bool {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let s = ShearState::random(self.source_graph.clone(), &mut rng, 2.0);
            let t = match self.kind {
                SubstKind::Inner => classical_flip(&s, &self.edge),
                SubstKind::Pending => classical_pending_flip(&s, &self.edge),
            }
            .expect("flip applies");
            let r = FloatRing::new(s.values.clone(), s.params.clone());
            for &i in &self.affected {
                let got = eval_ore_classical(&r, &self.image_of(&unit(n, i, 2)).unwrap());
                let want = t.values[i].exp();
                if (got - want).abs() > 1e-9 * want.abs().max(1.0) {
                    return false;
                }
            }
        }
        true
    }
}

impl QuantumSubstitution {
    /// At `q = 1` the images form a Poisson map: `{e^{x~_i}, e^{x~_j}}` equals
    /// `B'(2e_i, 2e_j) e^{x~_i} e^{x~_j}`, checked on cleared fractions.
    pub fn poisson_exact(&self) -> bool {
        let n = self.dim();
        let comm = SkewForm::zero(n);
        let m = |a: &TorusElement, b: &TorusElement| comm.mul(a, b);
        let br = |a: &TorusElement, b: &TorusElement| {
            let mut acc = TorusElement::zero(n);
            for (u, c) in a.terms() {
                for (v, e) in b.terms() {
                    let k = self.source.pair(u, v);
                    if k == 0 {
                        continue;
                    }
                    let w: Vec<i32> = u.iter().zip(v.iter()).map(|(x, y)| x + y).collect();
                    acc = acc.add(&TorusElement::term(
                        &w,
                        &(c * e) * &Coefficient::from_int(k as i64),
                    ));
                }
            }
            acc
        };
        let frac =
            |i: usize| classical_fraction(&self.image_of(&unit(n, i, 2)).expect("generator image"));
        for &i in &self.affected {
            let (ni, di) = frac(i);
            for j in 0..n {
                if j == i {
                    continue;
                }
                let (nj, dj) = frac(j);
                let k = Coefficient::from_int(4 * self.target.get(i, j) as i64);
                let lhs = m(&m(&br(&ni, &nj), &di), &dj)
                    .sub(&m(&m(&br(&ni, &dj), &di), &nj))
                    .sub(&m(&m(&br(&di, &nj), &ni), &dj))
                    .add(&m(&m(&br(&di, &dj), &ni), &nj));
                let rhs = m(&m(&ni, &nj), &m(&di, &dj)).scale(&k);
                if !lhs.sub(&rhs).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// `(n, d)` with `x = n / d` at `q = 1`.
pub fn classical_fraction(x: &OreElement) -> (TorusElement, TorusElement) {
    let dim = x.dim();
    let comm = SkewForm::zero(dim);
    let mut den = TorusElement::one(dim);
    let mut num = TorusElement::zero(dim);
    for t in x.terms() {
        let d = t
            .denominators
            .iter()
            .fold(TorusElement::one(dim), |acc, d| {
                comm.mul(&acc, &d.to_torus().at_t_one())
            });
        // n/den + N/d = (n d + N den) / (den d)
        num = comm
            .mul(&num, &d)
            .add(&comm.mul(&t.numerator.at_t_one(), &den));
        den = comm.mul(&den, &d);
    }
    (num, den)
}

/// Value of an Ore element at `q = 1` on real shears.
pub fn eval_ore_classical(r: &FloatRing, x: &OreElement) -> f64 {
    let tor =
        |e: &TorusElement| -> f64 { e.terms().map(|(u, c)| r.scalar(c) * r.monomial(u)).sum() };
    x.terms()
        .iter()
        .map(|t| {
            let d: f64 = t.denominators.iter().map(|d| tor(&d.to_torus())).product();
            tor(&t.numerator) / d
        })
        .sum()
}

fn unit(n: usize, i: usize, k: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = k;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::spine_graph_an;
    use crate::mcg::{move_graph, MoveKind};

    #[test]
    fn inner_images_are_dressed_monomials() {
        let g = move_graph(MoveKind::Inner);
        let s = QuantumSubstitution::inner(&g, "Z").unwrap();
        let f = &s.source;
        let a = g.edge("A").unwrap();
        let z = g.edge("Z").unwrap();
        // e^{A~} -> W(A) + W(A+Z)
        let mut az = unit(5, a, 2);
        az[z] = 2;
        let want: OreElement = TorusElement::monomial(&unit(5, a, 2))
            .add(&TorusElement::monomial(&az))
            .into();
        let got = s.image_of(&unit(5, a, 2)).unwrap();
        assert!(got.add(&want.neg()).is_zero(f));
        // e^{D~ + C~ + Z~} -> e^{D + C}
        let (c, d) = (g.edge("C").unwrap(), g.edge("D").unwrap());
        let mut u = vec![0; 5];
        u[c] = 2;
        u[d] = 2;
        u[z] = 2;
        let mut dc = vec![0; 5];
        dc[c] = 2;
        dc[d] = 2;
        let img = s.apply(&TorusElement::monomial(&u)).unwrap();
        let want: OreElement = TorusElement::monomial(&dc).into();
        assert!(img.add(&want.neg()).is_zero(f));
    }

    #[test]
    fn invariants_hold_for_bundled_flips() {
        let g = spine_graph_an(4).unwrap();
        let subs = [
            QuantumSubstitution::inner(&g, "X1").unwrap(),
            QuantumSubstitution::inner(&g, "X2").unwrap(),
            QuantumSubstitution::pending(&g, "S").unwrap(),
            QuantumSubstitution::pending(&g, "Z1").unwrap(),
            QuantumSubstitution::pending(&move_graph(MoveKind::Pending), "Z").unwrap(),
        ];
        for s in &subs {
            for (name, ok) in s.check_invariants(20, 5) {
                assert!(ok, "{} {name}", s.edge);
            }
        }
    }

    #[test]
    fn odd_exponent_is_rejected() {
        let g = spine_graph_an(3).unwrap();
        let s = QuantumSubstitution::inner(&g, "X1").unwrap();
        let x = g.edge("X1").unwrap();
        let err = s.apply(&TorusElement::monomial(&unit(g.n_edges(), x, 1)));
        assert!(matches!(err, Err(SubstError::OddExponent(_))));
        let one = s.apply(&TorusElement::one(g.n_edges())).unwrap();
        assert_eq!(one.as_torus(), Some(TorusElement::one(g.n_edges())));
    }
}

//! Symbolic evaluation of a relation in the quantum torus, coupled with
//! numeric evaluation in root-of-unity representations.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::relation::{eval_relation, eval_terms, sum_values, Env, Relation, Value};
use super::report::{IdentityReport, NumericSummary};
use crate::fatgraph::FatGraph;
use crate::oracle::{ClockShiftRep, NumRing, SparseMat};
use crate::qring::{ParamValues, Ring, SkewForm, TorusElement};

/// Relative norm below which a numeric evaluation counts as zero.
pub const NUMERIC_TOL: f64 = 1e-9;

/// Builds the same named atoms in any ring.
pub trait EnvBuilder: Sync {
    fn build<R: Ring>(&self, r: &R) -> Env<R::Elem>;
}

/// Random values in `(-1.9, 1.9)` for every symbolic orbifold parameter.
pub fn sample_params(graph: &FatGraph, seed: u64) -> ParamValues {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x005e_ed0f_0e9a);
    let mut out = ParamValues::new();
    for (_, o) in graph.pending_edges() {
        for p in o.omega().params() {
            out.entry(p).or_insert_with(|| rng.gen_range(-1.9..1.9));
        }
    }
    out
}

struct NumericModel {
    rep: ClockShiftRep,
    env: Env<SparseMat>,
}

/// Atoms of one graph in the exact torus and in each representation.
pub struct Checker {
    pub form: SkewForm,
    pub names: Vec<String>,
    pub sym: Env<TorusElement>,
    models: Vec<NumericModel>,
    moduli: Vec<u32>,
    setup_error: Option<String>,
}

pub fn value_norm(v: &Value<SparseMat>) -> f64 {
    match v {
        Value::Scalar(m) => m.norm(),
        Value::Mat(m) => m
            .entries()
            .iter()
            .map(|e| e.norm().powi(2))
            .sum::<f64>()
            .sqrt(),
    }
}

/// First terms of a torus element, with the total count when truncated.
pub fn digest_torus(x: &TorusElement, names: &[String]) -> String {
    const LIMIT: usize = 20;
    let head = TorusElement::from_terms(
        x.dim(),
        x.terms().take(LIMIT).map(|(u, c)| (u.clone(), c.clone())),
    );
    let mut s = head.fmt_with(names);
    if x.len() > LIMIT {
        s.push_str(&format!(" + ... ({} terms)", x.len()));
    }
    s
}

fn digest_value(v: &Value<TorusElement>, names: &[String]) -> Option<String> {
    match v {
        Value::Scalar(x) => (!x.is_zero()).then(|| digest_torus(x, names)),
        Value::Mat(m) => {
            let n = m.size();
            for i in 0..n {
                for j in 0..n {
                    let x = m.get(i, j);
                    if !x.is_zero() {
                        return Some(format!(
                            "entry ({},{}): {}",
                            i + 1,
                            j + 1,
                            digest_torus(x, names)
                        ));
                    }
                }
            }
            None
        }
    }
}

impl Checker {
    pub fn new<B: EnvBuilder>(graph: &FatGraph, builder: &B, moduli: &[u32], seed: u64) -> Self {
        let form = graph.skew_form();
        let sym = builder.build(&form);
        let params = sample_params(graph, seed);
        let mut models = Vec::new();
        let mut setup_error = None;
        for &n in moduli {
            match ClockShiftRep::new(&form, n, seed, params.clone()) {
                Ok(rep) => {
                    let env = builder.build(&NumRing { rep: &rep });
                    models.push(NumericModel { rep, env });
                }
                Err(e) => setup_error = Some(format!("modulus {n}: {e}")),
            }
        }
        Checker {
            form,
            names: graph.names().to_vec(),
            sym,
            models,
            moduli: moduli.to_vec(),
            setup_error,
        }
    }

    fn numeric<F>(&self, eval: F) -> NumericSummary
    where
        F: Fn(&NumericModel) -> Result<f64, String>,
    {
        let mut norms = Vec::new();
        let mut error = self.setup_error.clone();
        for m in &self.models {
            match eval(m) {
                Ok(v) => norms.push(v),
                Err(e) => {
                    error = Some(e);
                    norms.push(f64::NAN);
                }
            }
        }
        NumericSummary {
            moduli: self.moduli.clone(),
            norms,
            error,
        }
    }

    /// Relative numeric norms of a relation: `|sum| / max(1, max |term|)`.
    pub fn numeric_norms(&self, rel: &Relation) -> NumericSummary {
        self.numeric(|m| {
            let r = NumRing { rep: &m.rep };
            let terms = eval_terms(&r, &m.env, &rel.terms, &rel.id).map_err(|e| e.to_string())?;
            let scale = terms.iter().map(value_norm).fold(1.0, f64::max);
            Ok(value_norm(&sum_values(&r, &terms)) / scale)
        })
    }

    pub fn check(&self, rel: &Relation) -> IdentityReport {
        let start = Instant::now();
        let (sym_zero, witness) = match eval_relation(&self.form, &self.sym, rel) {
            Ok(v) => {
                let w = digest_value(&v, &self.names);
                (w.is_none(), w)
            }
            Err(e) => (false, Some(e.to_string())),
        };
        let numeric = self.numeric_norms(rel);
        let num_zero = numeric.error.is_none()
            && numeric.norms.len() == self.moduli.len()
            && numeric.norms.iter().all(|&n| n < NUMERIC_TOL);
        let pass = sym_zero && num_zero;
        let witness = match (&witness, sym_zero, num_zero) {
            (None, true, false) => Some(format!(
                "oracle disagreement: relative norms {:?}",
                numeric.norms
            )),
            _ => witness,
        };
        IdentityReport::new(&rel.id, &rel.anchor, pass)
            .with_witness(if pass { None } else { witness })
            .diagnostic(rel.diagnostic)
            .with_numeric(numeric)
            .timed(start)
    }

    /// Checks run in parallel on the current rayon pool; order is preserved.
    pub fn check_all(&self, rels: &[Relation]) -> Vec<IdentityReport> {
        rels.par_iter().map(|r| self.check(r)).collect()
    }

    /// `x^* = x` for a scalar atom.
    pub fn check_star_fixed(&self, id: &str, anchor: &str, atom: &str) -> IdentityReport {
        let start = Instant::now();
        let Some(x) = self.sym.get_scalar(atom) else {
            return IdentityReport::new(id, anchor, false)
                .with_witness(Some(format!("unknown atom {atom}")));
        };
        let xs = x.star();
        let diff = xs.sub(x);
        let numeric = self.numeric(|m| {
            let Some(v) = m.env.get_scalar(atom) else {
                return Err(format!("unknown atom {atom}"));
            };
            let s = m.rep.torus(&xs).map_err(|e| e.to_string())?;
            let d = s.add(&v.scale(num::complex::Complex64::new(-1.0, 0.0)));
            Ok(d.norm() / v.norm().max(1.0))
        });
        let pass = diff.is_zero()
            && numeric.error.is_none()
            && numeric.norms.iter().all(|&n| n < NUMERIC_TOL);
        let w = (!diff.is_zero()).then(|| digest_torus(&diff, &self.names));
        IdentityReport::new(id, anchor, pass)
            .with_witness(if pass { None } else { w })
            .with_numeric(numeric)
            .timed(start)
    }

    /// Dimensions of the representations in use.
    pub fn rep_dims(&self) -> Vec<usize> {
        self.models.iter().map(|m| m.rep.dim()).collect()
    }
}

//! Deliberately broken identities: the numeric oracle must reject each one.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::check::Checker;
use super::relation::{eval_relation, nonzero_entries, q, Relation};
use super::report::{IdentityReport, NumericSummary};

/// Numeric norm above which a mutant counts as caught.
pub const CAUGHT_TOL: f64 = 1e-6;
pub const MUTATION_COUNT: usize = 50;
pub const MUTATION_ANCHOR: &str = "numeric oracle soundness";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    QShift,
    Reverse,
    Negate,
    Drop,
}

/// Applies `kind` to a random term; `None` when it does not apply.
pub fn mutate(rel: &Relation, kind: Mutation, rng: &mut ChaCha8Rng) -> Option<Relation> {
    let live: Vec<usize> = (0..rel.terms.len())
        .filter(|&i| !rel.terms[i].coeff.is_zero())
        .collect();
    let &k = live.choose(rng)?;
    let mut out = rel.clone();
    let term = &mut out.terms[k];
    match kind {
        Mutation::QShift => term.coeff = &term.coeff * &q(1),
        Mutation::Negate => term.coeff = -&term.coeff,
        Mutation::Reverse => {
            if term.factors.len() < 2 {
                return None;
            }
            term.factors.reverse();
        }
        Mutation::Drop => {
            if live.len() < 2 {
                return None;
            }
            out.terms.remove(k);
        }
    }
    if out.terms == rel.terms {
        return None;
    }
    out.id = format!("{}~{kind:?}@{k}", rel.id);
    Some(out)
}

/// Outcome of one symbolically nonzero mutant.
#[derive(Clone, Debug)]
pub struct MutantOutcome {
    pub id: String,
    pub numeric: NumericSummary,
    pub caught: bool,
}

/// Seeded mutants of `rels` that are symbolically nonzero, with their norms.
pub fn run_mutants(ck: &Checker, rels: &[Relation], count: usize, seed: u64) -> Vec<MutantOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3a7a);
    let kinds = [
        Mutation::QShift,
        Mutation::Reverse,
        Mutation::Negate,
        Mutation::Drop,
    ];
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count {
        attempts += 1;
        let Some(rel) = rels.choose(&mut rng) else {
            break;
        };
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let Some(m) = mutate(rel, kind, &mut rng) else {
            continue;
        };
        let nonzero = match eval_relation(&ck.form, &ck.sym, &m) {
            Ok(v) => !nonzero_entries(&ck.form, &v).is_empty(),
            Err(_) => false,
        };
        if !nonzero {
            continue;
        }
        let numeric = ck.numeric_norms(&m);
        let caught = numeric.error.is_none()
            && !numeric.norms.is_empty()
            && numeric.norms.iter().all(|&n| n > CAUGHT_TOL);
        out.push(MutantOutcome {
            id: m.id,
            numeric,
            caught,
        });
    }
    out
}

pub fn mutation_report(ck: &Checker, rels: &[Relation], seed: u64) -> IdentityReport {
    let start = Instant::now();
    let res = run_mutants(ck, rels, MUTATION_COUNT, seed);
    let caught = res.iter().filter(|m| m.caught).count();
    let min = res
        .iter()
        .map(|m| m.numeric.min_norm())
        .fold(f64::INFINITY, f64::min);
    let pass = res.len() == MUTATION_COUNT && caught == res.len();
    let missed: Vec<&str> = res
        .iter()
        .filter(|m| !m.caught)
        .map(|m| m.id.as_str())
        .collect();
    IdentityReport::new("oracle/mutations", MUTATION_ANCHOR, pass)
        .with_witness(
            (!pass).then(|| format!("{} generated, missed: {}", res.len(), missed.join(", "))),
        )
        .with_detail(format!(
            "{caught} of {} mutants caught, smallest norm {min:.3e}",
            res.len()
        ))
        .timed(start)
}

//! Flip suites: classical identities and dynamics, quantum substitutions,
//! monodromy invariance, graph validation and flip scripts.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algebra::{BaseEnv, SuiteOptions};
use super::check::{sample_params, EnvBuilder, NUMERIC_TOL};
use super::realization::MonodromyRealization;
use super::report::{IdentityReport, NumericSummary};
use crate::fatgraph::{compile_word, pvi_graph, spine_graph_an, FatGraph, FlipError};
use crate::mcg::{
    bracket_defect, check_classical, check_quantum_identity, classical_catalog, classical_flip,
    classical_pending_flip, decoration_change, flip_jacobian, move_graph, pending_flip_jacobian,
    pentagon_defect, quantum_catalog, scale_rule_holds, tilde_expansion_mismatches, MoveKind,
    QuantumSubstitution, ShearState,
};
use crate::oracle::{ClockShiftRep, FloatRing};
use crate::qring::{OreElement, Ring, TorusElement};
use crate::smallmat::mat_trace;

pub const CLASSICAL_ANCHOR: &str = "classical flips and their matrix identities";
pub const QUANTUM_ANCHOR: &str = "quantum flips as morphisms of the quantum torus";
pub const GRAPH_ANCHOR: &str = "fat graph edge count 6g−6+3s+2r and skew form";

/// Tolerance for float checks of the classical layer.
pub const CLASSICAL_TOL: f64 = 1e-10;

pub fn flips_classical(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for id in classical_catalog() {
        let start = Instant::now();
        let o = check_classical(&id, opts.samples, opts.seed);
        let pass = o.exact && o.max_deviation < CLASSICAL_TOL;
        out.push(
            IdentityReport::new(format!("classical/{}", id.id), id.anchor, pass)
                .with_witness(if pass { None } else { o.witness.clone() })
                .diagnostic(!id.printed)
                .with_detail(format!(
                    "exact {}, max deviation {:.3e} over {} samples",
                    o.exact, o.max_deviation, opts.samples
                ))
                .timed(start),
        );
    }
    out.push(poisson_morphism(opts));
    out.extend(geodesic_traces(opts));
    out.push(hole_traces(opts));
    out.push(pentagon_check(opts));
    out
}

/// The pending flip (and the inner flip) preserve the Poisson bracket: exact
/// check on cleared fractions and numeric Jacobian check.
fn poisson_morphism(opts: &SuiteOptions) -> IdentityReport {
    let start = Instant::now();
    let pg = move_graph(MoveKind::Pending);
    let ig = move_graph(MoveKind::Inner);
    let exact = QuantumSubstitution::pending(&pg, "Z")
        .map(|s| s.poisson_exact())
        .unwrap_or(false)
        && QuantumSubstitution::inner(&ig, "Z")
            .map(|s| s.poisson_exact())
            .unwrap_or(false);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut worst: f64 = 0.0;
    for _ in 0..opts.samples.min(200) {
        let s = ShearState::random(pg.clone(), &mut rng, 2.0);
        let (after, _) = pg.flip_pending("Z").expect("pending move graph");
        let jac = pending_flip_jacobian(&s, "Z").expect("pending flip");
        worst = worst.max(bracket_defect(&jac, &pg, &after));
        let s = ShearState::random(ig.clone(), &mut rng, 2.0);
        let (after, _) = ig.flip("Z").expect("inner move graph");
        let jac = flip_jacobian(&s, "Z").expect("inner flip");
        worst = worst.max(bracket_defect(&jac, &ig, &after));
    }
    let pass = exact && worst < CLASSICAL_TOL;
    IdentityReport::new("classical/poisson-morphism", CLASSICAL_ANCHOR, pass)
        .with_witness((!pass).then(|| format!("exact {exact}, Jacobian defect {worst:.3e}")))
        .with_detail(format!("exact {exact}, Jacobian defect {worst:.3e}"))
        .timed(start)
}

fn random_float_ring(g: &FatGraph, rng: &mut ChaCha8Rng) -> FloatRing {
    let s = ShearState::random(g.clone(), rng, 3.0);
    FloatRing::new(s.values, s.params)
}

/// Closed-geodesic functions `G0i`, `Gij` are at least 2 at `q = 1`.
fn geodesic_traces(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in [3, 4] {
        let start = Instant::now();
        let real = MonodromyRealization::spine(n);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(n as u64));
        let m = real.targets.len();
        let mut names: Vec<String> = (1..=m).map(|i| format!("G0{i}")).collect();
        for i in 1..=m {
            for j in i + 1..=m {
                names.push(format!("G{i}{j}"));
            }
        }
        let mut min = f64::INFINITY;
        for _ in 0..opts.samples {
            let r = random_float_ring(&real.graph, &mut rng);
            let env = BaseEnv(&real).build(&r);
            for g in &names {
                min = min.min(*env.get_scalar(g).expect("geodesic atom"));
            }
        }
        let pass = min >= 2.0;
        out.push(
            IdentityReport::new(
                format!("classical/A{n}/geodesic-at-least-two"),
                CLASSICAL_ANCHOR,
                pass,
            )
            .with_witness((!pass).then(|| format!("minimum {min}")))
            .with_detail(format!("minimum {min:.6} over {} samples", opts.samples))
            .timed(start),
        );
    }
    out
}

/// Trace of a hole boundary equals `2cosh` of half its center.
fn hole_traces(opts: &SuiteOptions) -> IdentityReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x401e);
    let mut worst: f64 = 0.0;
    let graphs = [
        spine_graph_an(3).expect("A3"),
        spine_graph_an(4).expect("A4"),
    ];
    for _ in 0..opts.samples {
        for g in &graphs {
            let r = random_float_ring(g, &mut rng);
            for face in g.faces() {
                let m = compile_word(&r, g.n_edges(), &face.word(g));
                let c: Vec<i32> = face.center(g).iter().map(|x| x / 2).collect();
                let neg: Vec<i32> = c.iter().map(|x| -x).collect();
                let want = r.monomial(&c) + r.monomial(&neg);
                let got = mat_trace(&r, &m).abs();
                worst = worst.max((got - want).abs() / want);
            }
        }
    }
    let pass = worst < 1e-12;
    IdentityReport::new("classical/hole-trace-cosh", CLASSICAL_ANCHOR, pass)
        .with_witness((!pass).then(|| format!("relative deviation {worst:.3e}")))
        .with_detail(format!("relative deviation {worst:.3e}"))
        .timed(start)
}

/// Five flips around two adjacent inner edges return every shear.
fn pentagon_check(opts: &SuiteOptions) -> IdentityReport {
    let start = Instant::now();
    let g = spine_graph_an(4).expect("A4");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5);
    let mut worst: f64 = 0.0;
    let mut structure = true;
    for _ in 0..200 {
        let s = ShearState::random(g.clone(), &mut rng, 3.0);
        match pentagon_defect(&s, "X1", "X2") {
            Ok(Some(d)) => worst = worst.max(d),
            _ => structure = false,
        }
    }
    let pass = structure && worst < CLASSICAL_TOL;
    IdentityReport::new("classical/pentagon", CLASSICAL_ANCHOR, pass)
        .with_witness(
            (!pass).then(|| format!("graph restored {structure}, max |delta| {worst:.3e}")),
        )
        .with_detail(format!("200 states, max |delta| {worst:.3e}"))
        .timed(start)
}

/// Entrywise `apply(target) - source` in the Ore localization, plus its
/// relative numeric norm in root-of-unity representations.
fn invariance_report(
    id: String,
    sub: &QuantumSubstitution,
    pairs: &[(TorusElement, TorusElement)],
    opts: &SuiteOptions,
) -> IdentityReport {
    let start = Instant::now();
    let f = &sub.source;
    let names = sub.source_graph.names().to_vec();
    let mut diffs = Vec::new();
    let mut witness = None;
    for (k, (before, after)) in pairs.iter().enumerate() {
        match sub.apply(after) {
            Ok(img) => {
                let d = img.add(&OreElement::from(before.clone()).neg());
                if witness.is_none() && !d.is_zero(f) {
                    witness = Some(format!("entry {k}: {}", crate::mcg::digest(&d, &names)));
                }
                diffs.push((d, before.clone()));
            }
            Err(e) => {
                witness.get_or_insert(format!("entry {k}: {e}"));
            }
        }
    }
    let params = sample_params(&sub.source_graph, opts.seed);
    let mut norms = Vec::new();
    let mut error = None;
    for &n in &opts.moduli {
        let res = ClockShiftRep::new(f, n, opts.seed, params.clone()).map_err(|e| e.to_string());
        let v = res.and_then(|rep| {
            let mut num = 0.0f64;
            let mut den = 1.0f64;
            for (d, before) in &diffs {
                num += rep.ore(d).map_err(|e| e.to_string())?.norm().powi(2);
                den = den.max(rep.torus(before).map_err(|e| e.to_string())?.norm());
            }
            Ok(num.sqrt() / den)
        });
        match v {
            Ok(x) => norms.push(x),
            Err(e) => {
                norms.push(f64::NAN);
                error = Some(e);
            }
        }
    }
    let sym = witness.is_none() && diffs.len() == pairs.len();
    let num_ok = error.is_none() && norms.iter().all(|&x| x < NUMERIC_TOL);
    let pass = sym && num_ok;
    if sym && !num_ok {
        witness = Some(format!("oracle disagreement: relative norms {norms:?}"));
    }
    IdentityReport::new(id, QUANTUM_ANCHOR, pass)
        .with_witness(if pass { None } else { witness })
        .with_numeric(NumericSummary {
            moduli: opts.moduli.clone(),
            norms,
            error,
        })
        .timed(start)
}

fn entries<'a>(
    xs: impl IntoIterator<Item = &'a TorusElement>,
    ys: impl IntoIterator<Item = &'a TorusElement>,
) -> Vec<(TorusElement, TorusElement)> {
    xs.into_iter()
        .cloned()
        .zip(ys.into_iter().cloned())
        .collect()
}

/// Monodromy matrices under inner flips and `G0i` under the root pending flip.
pub fn monodromy_invariance(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in [3, 4] {
        let real = MonodromyRealization::spine(n);
        let f = real.form();
        let ms = real.matrices(&f);
        let inner: Vec<String> = (1..n - 1).map(|k| format!("X{k}")).collect();
        for e in &inner {
            let sub = match QuantumSubstitution::inner(&real.graph, e) {
                Ok(s) => s,
                Err(err) => {
                    out.push(
                        IdentityReport::new(
                            format!("A{n}/monodromy/flip-{e}"),
                            QUANTUM_ANCHOR,
                            false,
                        )
                        .with_witness(Some(err.to_string())),
                    );
                    continue;
                }
            };
            let flipped = MonodromyRealization {
                graph: sub.target_graph.clone(),
                ..real.clone()
            };
            let ms2 = flipped.matrices(&sub.target);
            for (i, (m, m2)) in ms.iter().zip(&ms2).enumerate() {
                let pairs = entries(m.entries(), m2.entries());
                out.push(invariance_report(
                    format!("A{n}/monodromy/flip-{e}/M{}", i + 1),
                    &sub,
                    &pairs,
                    opts,
                ));
            }
        }
        let root = real.root.clone();
        match QuantumSubstitution::pending(&real.graph, &root) {
            Ok(sub) => {
                let before = BaseEnv(&real).build(&f);
                let flipped = MonodromyRealization {
                    graph: sub.target_graph.clone(),
                    ..real.clone()
                };
                let after = BaseEnv(&flipped).build(&sub.target);
                for i in 1..n {
                    let g = format!("G0{i}");
                    let pair = vec![(
                        before.get_scalar(&g).expect("G0i").clone(),
                        after.get_scalar(&g).expect("G0i").clone(),
                    )];
                    out.push(invariance_report(
                        format!("A{n}/root-flip/{g}"),
                        &sub,
                        &pair,
                        opts,
                    ));
                }
            }
            Err(err) => out.push(
                IdentityReport::new(format!("A{n}/root-flip"), QUANTUM_ANCHOR, false)
                    .with_witness(Some(err.to_string())),
            ),
        }
    }
    out
}

pub fn flips_quantum(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let mut out = monodromy_invariance(opts);
    for corrected in [false, true] {
        let start = Instant::now();
        let mism = tilde_expansion_mismatches(corrected);
        let id = if corrected {
            "tilde-expansion-corrected-sign"
        } else {
            "tilde-expansion"
        };
        out.push(
            IdentityReport::new(id, QUANTUM_ANCHOR, mism.is_empty())
                .with_witness((!mism.is_empty()).then(|| mism.join("; ")))
                .diagnostic(corrected)
                .timed(start),
        );
    }
    for id in quantum_catalog() {
        let start = Instant::now();
        let o = check_quantum_identity(&id);
        out.push(
            IdentityReport::new(format!("quantum/{}", id.id), id.anchor, o.holds)
                .with_witness(if o.holds { None } else { o.witness.clone() })
                .diagnostic(!id.printed)
                .with_detail(format!(
                    "t^{} scale, holds at q=1: {}",
                    id.tpow, o.holds_at_q1
                ))
                .timed(start),
        );
        if id.printed {
            let ok = scale_rule_holds(&id);
            out.push(
                IdentityReport::new(format!("quantum/{}/scale-rule", id.id), id.anchor, ok)
                    .with_witness(
                        (!ok).then(|| format!("t^{} does not match the turn balance", id.tpow)),
                    ),
            );
        }
    }
    out.extend(substitution_invariants(opts));
    out
}

fn substitution_invariants(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let a4 = spine_graph_an(4).expect("A4");
    let cases: Vec<(String, Result<QuantumSubstitution, _>)> = vec![
        ("A4/X1".into(), QuantumSubstitution::inner(&a4, "X1")),
        ("A4/X2".into(), QuantumSubstitution::inner(&a4, "X2")),
        ("A4/S".into(), QuantumSubstitution::pending(&a4, "S")),
        ("A4/Z1".into(), QuantumSubstitution::pending(&a4, "Z1")),
        (
            "move/inner".into(),
            QuantumSubstitution::inner(&move_graph(MoveKind::Inner), "Z"),
        ),
        (
            "move/pending".into(),
            QuantumSubstitution::pending(&move_graph(MoveKind::Pending), "Z"),
        ),
    ];
    let mut out = Vec::new();
    for (tag, sub) in cases {
        out.extend(invariant_reports(&format!("substitution/{tag}"), sub, opts));
    }
    out
}

fn invariant_reports(
    tag: &str,
    sub: Result<QuantumSubstitution, crate::mcg::SubstError>,
    opts: &SuiteOptions,
) -> Vec<IdentityReport> {
    let start = Instant::now();
    match sub {
        Ok(s) => s
            .check_invariants(opts.samples.min(50), opts.seed)
            .into_iter()
            .map(|(name, ok)| {
                IdentityReport::new(
                    format!("{tag}/{}", name.replace(' ', "-")),
                    QUANTUM_ANCHOR,
                    ok,
                )
                .with_witness(None)
                .timed(start)
            })
            .collect(),
        Err(e) => {
            vec![IdentityReport::new(tag, QUANTUM_ANCHOR, false).with_witness(Some(e.to_string()))]
        }
    }
}

/// One move of a flip script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScriptMove {
    Flip(String),
    PendingFlip(String),
    Decoration(String),
}

/// Lines `flip <edge>`, `pflip <edge>`, `decor <hole>`; `#` starts a comment.
pub fn parse_script(text: &str) -> Result<Vec<ScriptMove>, String> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let mv = match parts.as_slice() {
            ["flip", e] => ScriptMove::Flip(e.to_string()),
            ["pflip", e] => ScriptMove::PendingFlip(e.to_string()),
            ["decor", h] => ScriptMove::Decoration(h.to_string()),
            _ => {
                return Err(format!(
                    "line {}: expected flip/pflip/decor <name>, got {line:?}",
                    k + 1
                ))
            }
        };
        out.push(mv);
    }
    Ok(out)
}

/// Runs a script on `graph`: each flip is applied classically to a seeded
/// state and its quantum substitution is checked for the exact invariants.
pub fn run_script(
    graph: &FatGraph,
    moves: &[ScriptMove],
    opts: &SuiteOptions,
) -> Vec<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut state = ShearState::random(graph.clone(), &mut rng, 2.0);
    let mut out = Vec::new();
    for (k, mv) in moves.iter().enumerate() {
        let start = Instant::now();
        let (label, next, sub): (String, Result<ShearState, FlipError>, Option<_>) = match mv {
            ScriptMove::Flip(e) => (
                format!("flip {e}"),
                classical_flip(&state, e),
                Some(QuantumSubstitution::inner(&state.graph, e)),
            ),
            ScriptMove::PendingFlip(e) => (
                format!("pflip {e}"),
                classical_pending_flip(&state, e),
                Some(QuantumSubstitution::pending(&state.graph, e)),
            ),
            ScriptMove::Decoration(h) => (format!("decor {h}"), decoration_change(&state, h), None),
        };
        let tag = format!("script/{}/{}", k + 1, label.replace(' ', "-"));
        match next {
            Ok(s) => {
                if let Some(sub) = sub {
                    out.extend(invariant_reports(&tag, sub, opts));
                } else {
                    out.push(IdentityReport::new(tag, QUANTUM_ANCHOR, true).timed(start));
                }
                state = s;
            }
            Err(e) => {
                out.push(
                    IdentityReport::new(tag, QUANTUM_ANCHOR, false)
                        .with_witness(Some(e.to_string()))
                        .timed(start),
                );
                break;
            }
        }
    }
    out
}

/// Graphs checked when no file is given.
pub fn bundled_graphs() -> Vec<(String, FatGraph)> {
    let mut out: Vec<(String, FatGraph)> = (2..=5)
        .map(|n| (format!("A{n}"), spine_graph_an(n).expect("spine")))
        .collect();
    out.push(("PVI".into(), pvi_graph()));
    out.push(("move/inner".into(), move_graph(MoveKind::Inner)));
    out.push(("move/pending".into(), move_graph(MoveKind::Pending)));
    out
}

/// Antisymmetric form with entries in `-2..=2`, central face centers and,
/// for spines, `2n` edges.
pub fn validate_graph(name: &str, g: &FatGraph) -> Vec<IdentityReport> {
    let start = Instant::now();
    let f = g.skew_form();
    let n = g.n_edges();
    let mut bad = None;
    for i in 0..n {
        for j in 0..n {
            let v = f.get(i, j);
            if v != -f.get(j, i) || !(-2..=2).contains(&v) {
                bad.get_or_insert(format!("entry ({}, {}) = {v}", g.name(i), g.name(j)));
            }
        }
    }
    let mut out = vec![IdentityReport::new(
        format!("graph/{name}/skew-form"),
        GRAPH_ANCHOR,
        bad.is_none(),
    )
    .with_witness(bad)
    .timed(start)];
    let start = Instant::now();
    let mut off = None;
    for c in g.center_elements() {
        let img = f.apply(&c);
        if img.iter().any(|&x| x != 0) {
            off.get_or_insert(format!(
                "center {} pairs nontrivially",
                crate::qring::fmt_monomial(&c, g.names())
            ));
        }
    }
    out.push(
        IdentityReport::new(
            format!("graph/{name}/centers-central"),
            GRAPH_ANCHOR,
            off.is_none(),
        )
        .with_witness(off)
        .timed(start),
    );
    if let Some(m) = g.meta() {
        let ok = m.expected_edges() == n as i64;
        out.push(
            IdentityReport::new(format!("graph/{name}/edge-count"), GRAPH_ANCHOR, ok)
                .with_witness(
                    (!ok).then(|| format!("{n} edges, 6g−6+3s+2r = {}", m.expected_edges())),
                )
                .with_detail(format!(
                    "6g−6+3s+2r = {} with g={}, s={}, r={}",
                    m.expected_edges(),
                    m.g,
                    m.s,
                    m.r
                )),
        );
    }
    out
}

/// Validation failure of an unparsable or inconsistent graph file.
pub fn graph_load_failure(name: &str, err: &str) -> IdentityReport {
    IdentityReport::new(format!("graph/{name}/load"), GRAPH_ANCHOR, false)
        .with_witness(Some(err.to_string()))
}

pub fn graph_validate(graphs: &[(String, FatGraph)]) -> Vec<IdentityReport> {
    graphs
        .iter()
        .flat_map(|(n, g)| validate_graph(n, g))
        .collect()
}

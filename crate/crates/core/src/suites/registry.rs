//! Suite names, their anchors and dispatch.

use super::algebra::*;
use super::catalog::{BRAID_ANCHOR, CROSS_ANCHOR, NR_ANCHOR, PVI_ANCHOR, RMATRIX_ANCHOR};
use super::check::Checker;
use super::flips::*;
use super::mutation::mutation_report;
use super::realization::MonodromyRealization;
use super::report::IdentityReport;
use crate::fatgraph::FatGraph;

/// Suite ids with anchors, in the order they are listed and run.
pub const SUITES: [(&str, &str); 8] = [
    ("an-core", CROSS_ANCHOR),
    ("an-nelson-regge", NR_ANCHOR),
    ("an-rmatrix", RMATRIX_ANCHOR),
    ("an-braid", BRAID_ANCHOR),
    ("pvi", PVI_ANCHOR),
    ("flips-classical", CLASSICAL_ANCHOR),
    ("flips-quantum", QUANTUM_ANCHOR),
    ("graph-validate", GRAPH_ANCHOR),
];

pub fn is_suite(name: &str) -> bool {
    SUITES.iter().any(|(n, _)| *n == name)
}

/// One line per suite: `id  anchor`.
pub fn list_suites() -> String {
    SUITES
        .iter()
        .map(|(n, a)| format!("{n:<16} {a}\n"))
        .collect()
}

/// Graph files and flip scripts supplied by the caller.
#[derive(Clone, Debug, Default)]
pub struct Inputs {
    /// Parsed graphs, or the load error, by name.
    pub graphs: Vec<(String, Result<FatGraph, String>)>,
    pub script: Option<Vec<ScriptMove>>,
}

/// `an-core` plus the oracle mutation report.
pub fn an_core_with_mutations(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let mut out = an_core(opts);
    let real = MonodromyRealization::spine(4);
    let ck = Checker::new(&real.graph, &BaseEnv(&real), &opts.moduli, opts.seed);
    out.push(mutation_report(&ck, &an_core_relations(4), opts.seed));
    out
}

pub fn run_suite(name: &str, opts: &SuiteOptions, inputs: &Inputs) -> Option<Vec<IdentityReport>> {
    let reps = match name {
        "an-core" => an_core_with_mutations(opts),
        "an-nelson-regge" => an_nelson_regge(opts),
        "an-rmatrix" => an_rmatrix(opts),
        "an-braid" => an_braid(opts),
        "pvi" => pvi(opts),
        "flips-classical" => flips_classical(opts),
        "flips-quantum" => {
            let mut out = flips_quantum(opts);
            if let Some(script) = &inputs.script {
                let g = inputs
                    .graphs
                    .iter()
                    .find_map(|(_, g)| g.as_ref().ok().cloned())
                    .unwrap_or_else(|| MonodromyRealization::spine(4).graph);
                out.extend(run_script(&g, script, opts));
            }
            out
        }
        "graph-validate" => {
            if inputs.graphs.is_empty() {
                graph_validate(&bundled_graphs())
            } else {
                let mut out = Vec::new();
                for (n, g) in &inputs.graphs {
                    match g {
                        Ok(g) => out.extend(validate_graph(n, g)),
                        Err(e) => out.push(graph_load_failure(n, e)),
                    }
                }
                out
            }
        }
        _ => return None,
    };
    Some(
        reps.into_iter()
            .map(|mut r| {
                r.id = format!("{name}/{}", r.id);
                r
            })
            .collect(),
    )
}

//! Concrete realizations and the identity catalogs run by the command line.

mod algebra;
mod catalog;
mod check;
mod flips;
mod mutation;
mod realization;
mod registry;
mod relation;
mod report;

pub use algebra::*;
pub use catalog::*;
pub use check::{digest_torus, sample_params, value_norm, Checker, EnvBuilder, NUMERIC_TOL};
pub use flips::*;
pub use mutation::*;
pub use realization::{
    braid, entries_even, extract, geodesic_pair, geodesic_root, populate, populate_pvi, populate_r,
    MonodromyRealization,
};
pub use registry::*;
pub use relation::{
    eval_relation, eval_terms, nonzero_entries, one, q, sum_values, t, Env, EvalError, Relation,
    Term, Value,
};
pub use report::{Environment, IdentityReport, NumericSummary, Report, Status, REPORT_SCHEMA};

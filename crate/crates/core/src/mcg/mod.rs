//! Flips, pending flips and decoration changes: classical shear updates,
//! exact matrix identities and the quantum substitutions on the torus.

mod classical;
mod identities;
mod qidentities;
mod quantum;
mod sqrt;

pub use classical::{
    bracket_defect, classical_flip, classical_pending_flip, decoration_change, flip_jacobian,
    pending_flip_jacobian, pentagon, pentagon_defect, phi, phi_omega, ShearState,
};
pub use identities::{
    check_classical, check_exact, check_numeric, classical_catalog, eval_word, move_graph,
    ClassicalIdentity, ClassicalOutcome, ExactModel, FloatModel, MoveKind, ShearModel, Sym, Var,
};
pub use qidentities::{
    check_quantum_identity, digest, displayed_tilde_expansion, quantum_catalog, scale_rule_holds,
    tilde_expansion_mismatches, turn_balance, QuantumIdentity, QuantumOutcome, TorusModel,
};
pub use quantum::{
    classical_fraction, eval_ore_classical, QuantumSubstitution, SubstError, SubstKind,
};
pub use sqrt::{SqrtElem, SqrtRing};

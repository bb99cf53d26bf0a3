//! Quantum shear coordinates, monodromy matrices and identity checks on
//! decorated fat graphs.

pub mod fatgraph;
pub mod mcg;
pub mod oracle;
pub mod qring;
pub mod smallmat;
pub mod suites;

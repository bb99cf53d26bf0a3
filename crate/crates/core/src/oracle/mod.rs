//! Independent numeric models: root-of-unity representations of the quantum
//! torus and real evaluation at `q = 1`.

mod classical;
mod normal_form;
mod rep;

pub use classical::FloatRing;
pub use normal_form::{skew_normal_form, SkewNormalForm};
pub use rep::{ClockShiftRep, NumRing, OracleError, SparseMat, MAX_DIM};

/// Roots of unity used by default: `q = exp(4 pi i / N)`.
pub const DEFAULT_MODULI: [u32; 2] = [5, 7];

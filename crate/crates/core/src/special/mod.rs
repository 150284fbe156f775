//! Self-contained special-function kernel: real and complex zeta, zeta',
//! complex gamma, and the table of nontrivial zeros.

mod gamma;
mod zeros;
mod zeta;

pub use gamma::gamma_complex;
pub use zeros::{build_zero_table, ZeroRecord, ZeroTable, ZERO_SEEDS};
pub use zeta::{zeta_complex, zeta_prime, zeta_real};

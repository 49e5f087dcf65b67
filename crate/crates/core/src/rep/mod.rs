//! The representation ring: virtual representations and their operations.

mod ops;
mod virtual_rep;

pub use ops::{adams, alt2, decompose, ext_power, newton_powers, sym2, sym_power, tensor};
pub use virtual_rep::VirtualRep;

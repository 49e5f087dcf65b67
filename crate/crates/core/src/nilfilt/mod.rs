//! Monodromy filtration of a nilpotent operator on a rational vector space.

mod filtration;
mod matrix;

pub use filtration::{monodromy_filtration, triangle_render, FiltrationResult, NilpotentOperator};
pub use matrix::RationalMatrix;

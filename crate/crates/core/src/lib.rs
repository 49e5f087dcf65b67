//! Exact representation-theoretic and Hodge-theoretic calculations around
//! theta divisors of four-dimensional abelian varieties: weight
//! multiplicities and plethysms of classical groups, graded super
//! plethysms with σ-signs, convolution bookkeeping on the degenerate
//! Jacobian fiber, monodromy filtrations and Chern-class arithmetic.

pub mod error;
pub mod geom;
pub mod graded;
pub mod lie;
pub mod nilfilt;
pub mod perv;
pub mod rep;
pub mod report;

pub use error::{Error, Result};

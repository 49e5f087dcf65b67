//! Formal convolution calculus on the degenerate Jacobian fiber: product
//! tables, monodromy-filtration diagrams and their hypercohomology.

mod diagram;
mod hyper;
mod labels;

pub use diagram::{
    delta_pm_diagrams, diagram_square, diagram_tensor, product, psi1_delta_diagram, square, square_simple,
    FiltrationDiagram, Variant,
};
pub use hyper::{euler_check, h_delta, hyper, lr_delta_ab};
pub use labels::{FormalObject, SimpleKind, Term, GENUS};

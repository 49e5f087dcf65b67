//! Cohomologically graded representations with σ-signs: super plethysms,
//! Lefschetz packages and removal of constant shifts of `δ_X`.

mod constants;
mod lefschetz;
mod signed;
mod super_ops;

pub use constants::{
    cohomology_of_x, curve_hyper, delta_x_hyper, jacobian_theta_closed_form, jacobian_theta_via_curve,
    lefschetz_mirror, peel_constants, tau_hypercohomology, ConstantPeel, SignConvention,
};
pub use lefschetz::{expand, package_decompose, LefschetzPackage};
pub use signed::{Sign, SignedGradedRep, SlotKey};
pub use super_ops::{graded_tensor, super_alt2, super_ext, super_squares, super_sym2};

//! Root systems, weight diagrams and Weyl characters of classical groups.

mod group;
mod roots;
mod weights;

pub use group::{Family, GroupSpec, IrrepLabel, SimpleFactor, Weight};
pub use roots::RootSystem;
pub use weights::{
    dim_cap, dominant_weights, height, set_dim_cap, simple_diagram, to_dominant, weight_multiplicities,
    weyl_dim, weyl_orbit, Character, SimpleDiagram, DEFAULT_DIM_CAP,
};
pub(crate) use weights::weyl_dim_unchecked;

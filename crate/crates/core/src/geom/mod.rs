//! Intersection numbers on ppav's and theta divisors.

mod chern;
mod hodge;
mod singular;
mod stratum;

pub use chern::{theta_chi, theta_chi_odp, theta_chi_top, ChernEvaluation};
pub use hodge::{y_hodge_table, HodgeRow, HodgeTable, HodgeType, SurfaceNumbers};
pub use singular::{psi_summands, quadric_betti, two_torsion_on_theta, Skyscraper};
pub use stratum::{schottky_stratum, stratum_data, Stratum, StratumData};

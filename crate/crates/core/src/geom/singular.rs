use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Betti numbers `b_0 … b_{2m}` of a smooth quadric of dimension `m`.
pub fn quadric_betti(m: usize) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::InvalidArgument("quadric dimension must be at least 1".into()));
    }
    // the quadric sits over a double point of a d-dimensional variety, d = m+1
    let d = m + 1;
    let delta = u64::from(d % 2 == 1);
    Ok((0..=2 * m)
        .map(|j| match (j % 2, j == m) {
            (1, _) => 0,
            (_, true) => 2 * delta,
            _ => 1,
        })
        .collect())
}

/// A skyscraper at a double point with Tate twist `(twist)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skyscraper {
    pub point: usize,
    pub twist: i32,
}

impl fmt::Display for Skyscraper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist < 0 {
            write!(f, "δ_y{}(−{})", self.point + 1, -self.twist)
        } else {
            write!(f, "δ_y{}({})", self.point + 1, self.twist)
        }
    }
}

/// Summands of `ψ_Y` for a `d`-dimensional `Y` with `n` ordinary double
/// points: one skyscraper twisted by `−(d−1)/2` per point when `d` is odd.
pub fn psi_summands(d: usize, n: usize) -> Result<Vec<Skyscraper>> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if d.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let twist = -((d as i32 - 1) / 2);
    Ok((0..n).map(|point| Skyscraper { point, twist }).collect())
}

/// Number of 2-torsion points on a symmetric theta divisor, `2^{g−1}(2^g−1)`.
pub fn two_torsion_on_theta(g: u32) -> Result<u128> {
    if g == 0 || g > 60 {
        return Err(Error::InvalidArgument(format!("genus {g} out of range 1..=60")));
    }
    Ok((1u128 << (g - 1)) * ((1u128 << g) - 1))
}

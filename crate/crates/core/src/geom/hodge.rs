use serde::{Deserialize, Serialize};

use super::chern::{to_integer, ChernEvaluation};
use crate::error::{Error, Result};

/// `(h^{2,0}, h^{1,1}, h^{1,0})`, the columns of the surface table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeRow {
    pub h20: i64,
    pub h11: i64,
    pub h10: i64,
}

/// Hodge numbers in degree two, `(h^{2,0}, h^{1,1}, h^{0,2})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeType {
    pub h20: i64,
    pub h11: i64,
    pub h02: i64,
}

impl HodgeType {
    pub fn rank(&self) -> i64 {
        self.h20 + self.h11 + self.h02
    }

    fn of_row(r: &HodgeRow) -> HodgeType {
        HodgeType { h20: r.h20, h11: r.h11, h02: r.h20 }
    }

    fn minus(&self, o: &HodgeType) -> HodgeType {
        HodgeType { h20: self.h20 - o.h20, h11: self.h11 - o.h11, h02: self.h02 - o.h02 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceNumbers {
    pub chi_top: i64,
    pub chi_o: i64,
    pub b1: i64,
    pub b2: i64,
    pub hodge: HodgeRow,
}

impl SurfaceNumbers {
    /// Fills in the Hodge row from `χ_top`, `χ(O)` and `h^{1,0}`.
    fn from_invariants(chi_top: i64, chi_o: i64, h10: i64) -> SurfaceNumbers {
        let b1 = 2 * h10;
        let b2 = chi_top - 2 + 2 * b1;
        let h20 = chi_o - 1 + h10;
        SurfaceNumbers { chi_top, chi_o, b1, b2, hodge: HodgeRow { h20, h11: b2 - 2 * h20, h10 } }
    }
}

/// Hodge numbers of `Y = Θ ∩ Θ_x` and its quotient `Y⁺` on a generic
/// ppav of dimension 4, and the Hodge types of the fibres of `V_±`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeTable {
    pub x: HodgeRow,
    pub h2_x: i64,
    pub y: SurfaceNumbers,
    pub y_plus: SurfaceNumbers,
    pub v_plus: HodgeType,
    pub v_minus: HodgeType,
}

impl HodgeTable {
    pub fn rows(&self) -> [(&'static str, HodgeRow); 2] {
        [("Y", self.y.hodge), ("Y+", self.y_plus.hodge)]
    }
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn y_hodge_table() -> Result<HodgeTable> {
    const G: usize = 4;
    let x = HodgeRow { h20: binom(4, 2), h11: binom(4, 1) * binom(4, 1), h10: binom(4, 1) };
    let h2_x = binom(8, 2);

    // T_X is trivial and Y is cut out by two divisors numerically equal to Θ
    let one_plus_h = &ChernEvaluation::one(G) + &ChernEvaluation::h(G);
    let c = one_plus_h.pow(-2)?;
    let (c1, c2) = (c.part(1), c.part(2));
    let chi_top = to_integer(&c2.degree_on(2), "χ_top(Y)")? as i64;
    let c1sq = to_integer(&(&c1 * &c1).degree_on(2), "c₁²(Y)")? as i64;
    if (c1sq + chi_top) % 12 != 0 {
        return Err(Error::InexactDivision("Noether's formula"));
    }
    // H¹(Y) ≅ H¹(X)
    let y = SurfaceNumbers::from_invariants(chi_top, (c1sq + chi_top) / 12, x.h10);

    if y.chi_top % 2 != 0 || y.chi_o % 2 != 0 {
        return Err(Error::InexactDivision("étale double cover"));
    }
    // σ acts by −1 on H¹(X), so nothing survives in the quotient
    let y_plus = SurfaceNumbers::from_invariants(y.chi_top / 2, y.chi_o / 2, 0);

    let v_plus = HodgeType::of_row(&y.hodge).minus(&HodgeType::of_row(&y_plus.hodge));
    let v_minus = HodgeType::of_row(&y_plus.hodge).minus(&HodgeType::of_row(&x));
    for t in [v_plus, v_minus] {
        if t.h20 < 0 || t.h11 < 0 {
            return Err(Error::NegativeResult(format!("V_± Hodge type {t:?}")));
        }
    }
    if v_plus.rank() + v_minus.rank() + h2_x != y.b2 {
        return Err(Error::InvalidArgument("rank(V_+) + rank(V_−) + h²(X) ≠ h²(Y)".into()));
    }
    Ok(HodgeTable { x, h2_x, y, y_plus, v_plus, v_minus })
}

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{
    expand, package_decompose, super_squares, tau_hypercohomology, LefschetzPackage, Sign, SignedGradedRep,
};
use crate::lie::{GroupSpec, Weight};
use crate::perv::lr_delta_ab;
use crate::rep::VirtualRep;

/// Simply connected Mumford–Tate group of a generic theta divisor, `g = 4`.
pub const GENERIC_GROUP: &str = "Sp8xSp10";

/// One irreducible summand of a Lefschetz package `[level]_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackageEntry {
    pub level: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    pub weight: String,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableColumn {
    pub name: String,
    pub euler_char: i128,
    pub entries: Vec<PackageEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub group: String,
    pub columns: Vec<TableColumn>,
}

impl TableDoc {
    pub fn column(&self, name: &str) -> Option<&TableColumn> {
        self.columns.iter().find(|c| c.name == name)
    }
}

fn generic_group() -> GroupSpec {
    GENERIC_GROUP.parse().expect("valid group")
}

fn rep(w: &str) -> VirtualRep {
    VirtualRep::parse_irrep(GENERIC_GROUP, w).expect("valid weight")
}

/// `ℍ(δ_Θ) = (0000)[3] ⊕ (1000)[2] ⊕ (0100)[1] ⊕ ((0010) ⊕ B)[0]` with σ
/// acting by −1 on `(1000)` and `(0010)` and trivially on `B`.
pub fn generic_theta_packages() -> Vec<LefschetzPackage> {
    vec![
        LefschetzPackage::new(rep("0000|00000"), Sign::Plus, 3),
        LefschetzPackage::new(rep("1000|00000"), Sign::Minus, 2),
        LefschetzPackage::new(rep("0100|00000"), Sign::Plus, 1),
        LefschetzPackage::new(rep("0010|00000"), Sign::Minus, 0),
        LefschetzPackage::new(rep("0000|10000"), Sign::Plus, 0),
    ]
}

pub fn generic_theta_hyper() -> Result<SignedGradedRep> {
    expand(&generic_group(), &generic_theta_packages())
}

/// `ℍ(δ_+)` and `ℍ(δ_−)`: super squares of `ℍ(δ_Θ)` minus `ℍ(τ_±)`, and
/// minus the unit on the alternating side.
pub fn delta_pm_hyper() -> Result<(SignedGradedRep, SignedGradedRep)> {
    let g = generic_group();
    let (sym, alt) = super_squares(&generic_theta_hyper()?)?;
    let plus = sym.sub(&tau_hypercohomology(&g, 4, Sign::Plus)?)?;
    let minus = alt.sub(&tau_hypercohomology(&g, 4, Sign::Minus)?)?.sub(&SignedGradedRep::unit(g))?;
    for (name, h) in [("δ_+", &plus), ("δ_−", &minus)] {
        if !h.is_effective() {
            return Err(Error::NegativeResult(format!("ℍ({name}) after removing τ")));
        }
    }
    Ok((plus, minus))
}

/// Display order inside a level: larger `Sp(10)` part first, then the
/// `Sp(8)` labels in decreasing lexicographic order.
fn display_key(group: &GroupSpec, w: &Weight) -> impl Ord {
    let ranges = group.factor_ranges();
    let parts: Vec<Vec<i32>> = ranges.iter().map(|&(a, b)| w.0[a..b].to_vec()).collect();
    let boxes: Vec<i32> = parts.iter().skip(1).map(|p| p.iter().enumerate().map(|(i, x)| (i as i32 + 1) * x).sum()).collect();
    Reverse((boxes, parts.into_iter().rev().collect::<Vec<_>>()))
}

pub fn package_entries(group: &GroupSpec, pkgs: &[LefschetzPackage], signed: bool) -> Vec<PackageEntry> {
    let mut keyed = Vec::new();
    for p in pkgs {
        for (w, m) in p.base.terms() {
            let entry = PackageEntry {
                level: p.level,
                sign: signed.then_some(p.sign),
                weight: group.compact_weight(w),
                mult: *m,
            };
            keyed.push(((Reverse(p.level), display_key(group, w), p.sign), entry));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, e)| e).collect()
}

fn column(name: &str, h: &SignedGradedRep, signed: bool) -> Result<TableColumn> {
    let pkgs = package_decompose(h)?;
    Ok(TableColumn { name: name.into(), euler_char: h.euler_char(), entries: package_entries(h.group(), &pkgs, signed) })
}

/// Lefschetz packages of `ℍ(δ_±)` over `Sp(8) × Sp(10)`.
pub fn table1() -> Result<TableDoc> {
    let (plus, minus) = delta_pm_hyper()?;
    Ok(TableDoc {
        group: GENERIC_GROUP.into(),
        columns: vec![column("delta_plus", &plus, true)?, column("delta_minus", &minus, true)?],
    })
}

pub const TABLE2_LABELS: [(u8, u8); 3] = [(5, 1), (4, 2), (3, 3)];

/// Lefschetz packages of `ℍ(JC, δ_{a,b})` over `Sp(8)`.
pub fn table2() -> Result<TableDoc> {
    let columns = TABLE2_LABELS
        .iter()
        .map(|&(a, b)| column(&format!("delta_{a}_{b}"), &lr_delta_ab(a, b)?, false))
        .collect::<Result<_>>()?;
    Ok(TableDoc { group: "Sp8".into(), columns })
}

/// Rebuilds the graded representation described by a column.
pub fn column_to_graded(group: &str, col: &TableColumn) -> Result<SignedGradedRep> {
    let g: GroupSpec = group.parse()?;
    let mut pkgs = Vec::new();
    for e in &col.entries {
        let w = g.parse_weight(&e.weight)?;
        let base = VirtualRep::from_terms(g.clone(), [(w, e.mult)])?;
        pkgs.push(LefschetzPackage::new(base, e.sign.unwrap_or(Sign::Plus), e.level));
    }
    expand(&g, &pkgs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_has_euler_characteristic_24() {
        assert_eq!(generic_theta_hyper().unwrap().euler_char(), 24);
    }

    #[test]
    fn table2_columns_round_trip() {
        let t = table2().unwrap();
        let c = t.column("delta_5_1").unwrap();
        assert!(c.entries.iter().all(|e| e.level != 3));
        assert_eq!(column_to_graded(&t.group, c).unwrap(), lr_delta_ab(5, 1).unwrap());
    }
}

use std::collections::{BTreeMap, BTreeSet};

use super::{Sign, SignedGradedRep, SlotKey};
use crate::error::{Error, Result};
use crate::lie::{GroupSpec, Weight};
use crate::rep::VirtualRep;

/// A hard-Lefschetz orbit `[n]_t`: one representation repeated in degrees
/// `n, n−2, …, −n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzPackage {
    pub base: VirtualRep,
    pub sign: Sign,
    pub level: u32,
}

impl LefschetzPackage {
    pub fn new(base: VirtualRep, sign: Sign, level: u32) -> Self {
        LefschetzPackage { base, sign, level }
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> {
        let n = self.level as i32;
        (0..=n).map(move |j| n - 2 * j)
    }
}

/// Places every package in its degrees and sums.
pub fn expand(group: &GroupSpec, pkgs: &[LefschetzPackage]) -> Result<SignedGradedRep> {
    let mut out = SignedGradedRep::zero(group.clone());
    for p in pkgs {
        for d in p.degrees() {
            out.add_at(SlotKey::new(d, p.sign), &p.base, 1)?;
        }
    }
    Ok(out)
}

/// Unique decomposition into Lefschetz packages, twists ignored. The result
/// is sorted by level (highest first) then sign, one package per pair.
pub fn package_decompose(g: &SignedGradedRep) -> Result<Vec<LefschetzPackage>> {
    let g = g.forget_twists();
    let group = g.group().clone();

    let mut mult: BTreeMap<(Sign, Weight), BTreeMap<i32, i64>> = BTreeMap::new();
    for (k, v) in g.slots() {
        for (w, m) in v.terms() {
            mult.entry((k.sign, w.clone())).or_default().insert(k.degree, *m);
        }
    }

    let mut out: BTreeMap<(u32, Sign), VirtualRep> = BTreeMap::new();
    for ((sign, w), by_degree) in &mult {
        let at = |d: i32| by_degree.get(&d).copied().unwrap_or(0);
        let degrees: BTreeSet<i32> = by_degree.keys().copied().collect();
        for &d in &degrees {
            if at(-d) != at(d) {
                return Err(Error::Asymmetric(d.min(-d)));
            }
        }
        let top = degrees.iter().map(|d| d.abs()).max().unwrap_or(0);
        for n in 0..=top {
            let c = at(n) - at(n + 2);
            if c < 0 {
                return Err(Error::NegativePeel { label: format!("{}{}", group.format_weight(w), sign), degree: n });
            }
            if c > 0 {
                out.entry((n as u32, *sign))
                    .or_insert_with(|| VirtualRep::zero(group.clone()))
                    .add_scaled(&VirtualRep::from_terms(group.clone(), [(w.clone(), c)])?, 1)?;
            }
        }
    }

    let mut pkgs: Vec<LefschetzPackage> =
        out.into_iter().map(|((level, sign), base)| LefschetzPackage { base, sign, level }).collect();
    pkgs.sort_by(|a, b| b.level.cmp(&a.level).then(a.sign.cmp(&b.sign)));
    Ok(pkgs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triv() -> VirtualRep {
        VirtualRep::trivial("Sp8".parse().unwrap())
    }

    #[test]
    fn expand_shapes() {
        let g: GroupSpec = "Sp8".parse().unwrap();
        let e = expand(&g, &[LefschetzPackage::new(triv(), Sign::Plus, 3)]).unwrap();
        assert_eq!(e.degrees(), vec![-3, -1, 1, 3]);
        let e = expand(&g, &[LefschetzPackage::new(triv(), Sign::Plus, 0)]).unwrap();
        assert_eq!(e.degrees(), vec![0]);
        let p = LefschetzPackage::new(triv(), Sign::Plus, 1);
        let e = expand(&g, &[p.clone(), p]).unwrap();
        assert_eq!(e.part(1, Sign::Plus).mult(&g.zero_weight()), 2);
        assert_eq!(e.part(-1, Sign::Plus).mult(&g.zero_weight()), 2);
    }

    #[test]
    fn decompose_constant_run() {
        let g: GroupSpec = "Sp8".parse().unwrap();
        let mut h = SignedGradedRep::zero(g);
        for d in [-2, 0, 2] {
            h.add_at(SlotKey::new(d, Sign::Plus), &triv(), 1).unwrap();
        }
        let p = package_decompose(&h).unwrap();
        assert_eq!(p, vec![LefschetzPackage::new(triv(), Sign::Plus, 2)]);
    }

    #[test]
    fn detects_violations() {
        let g: GroupSpec = "Sp8".parse().unwrap();
        let mut h = SignedGradedRep::zero(g.clone());
        h.add_at(SlotKey::new(1, Sign::Plus), &triv(), 1).unwrap();
        assert!(matches!(package_decompose(&h), Err(Error::Asymmetric(-1))));

        let mut h = SignedGradedRep::zero(g);
        for d in [-2, 2] {
            h.add_at(SlotKey::new(d, Sign::Plus), &triv(), 1).unwrap();
        }
        assert!(matches!(package_decompose(&h), Err(Error::NegativePeel { degree: 0, .. })));
    }
}

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::{Character, GroupSpec, IrrepLabel, Weight};

/// Integer combination of irreducibles of one group. Zero coefficients are
/// never stored; iteration is in lexicographic order of highest weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    group: GroupSpec,
    terms: BTreeMap<Weight, i64>,
}

impl VirtualRep {
    pub fn zero(group: GroupSpec) -> Self {
        VirtualRep { group, terms: BTreeMap::new() }
    }

    pub fn trivial(group: GroupSpec) -> Self {
        let mut v = VirtualRep::zero(group);
        let z = v.group.zero_weight();
        v.terms.insert(z, 1);
        v
    }

    pub fn irrep(label: &IrrepLabel) -> Self {
        let mut v = VirtualRep::zero(label.group.clone());
        v.terms.insert(label.weight.clone(), 1);
        v
    }

    /// Parses group and a dominant weight in compact digit notation.
    pub fn parse_irrep(group: &str, weight: &str) -> Result<Self> {
        Ok(VirtualRep::irrep(&IrrepLabel::parse(group, weight)?))
    }

    pub fn from_terms(group: GroupSpec, terms: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut v = VirtualRep::zero(group);
        for (w, m) in terms {
            v.group.check_dominant(&w)?;
            v.add_term(w, m);
        }
        Ok(v)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn labels(&self) -> impl Iterator<Item = (IrrepLabel, i64)> + '_ {
        self.terms.iter().map(|(w, m)| (IrrepLabel { group: self.group.clone(), weight: w.clone() }, *m))
    }

    pub fn mult(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m >= 0)
    }

    /// Adds `m` copies of the irreducible with highest weight `w`; the weight
    /// must already be known to be dominant.
    pub(crate) fn add_term(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &VirtualRep, k: i64) -> Result<()> {
        self.group.ensure_same(&other.group)?;
        for (w, m) in &other.terms {
            self.add_term(w.clone(), k * m);
        }
        Ok(())
    }

    pub fn add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn sub(&self, other: &VirtualRep) -> Result<VirtualRep> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> VirtualRep {
        let mut out = VirtualRep::zero(self.group.clone());
        for (w, m) in &self.terms {
            out.add_term(w.clone(), k * m);
        }
        out
    }

    pub fn neg(&self) -> VirtualRep {
        self.scale(-1)
    }

    /// Virtual dimension.
    pub fn dim(&self) -> i128 {
        self.terms
            .iter()
            .map(|(w, m)| *m as i128 * crate::lie::weyl_dim_unchecked(&self.group, w) as i128)
            .sum()
    }

    /// Divides every multiplicity by `k`; fails unless all are divisible.
    pub(crate) fn div_exact(&self, k: i64, ctx: &'static str) -> Result<VirtualRep> {
        let mut out = VirtualRep::zero(self.group.clone());
        for (w, m) in &self.terms {
            if m % k != 0 {
                return Err(Error::InexactDivision(ctx));
            }
            out.add_term(w.clone(), m / k);
        }
        Ok(out)
    }

    /// Full weight character.
    pub fn character(&self) -> Result<Character> {
        let mut ch = Character::zero(self.group.clone());
        for (label, m) in self.labels() {
            ch.add_scaled(&Character::of_irrep(&label)?, m);
        }
        Ok(ch)
    }

    /// Replaces the group by an isomorphic description with the same weight layout.
    pub fn with_group(mut self, group: GroupSpec) -> Result<VirtualRep> {
        if group.factors() != self.group.factors() {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: group.to_string() });
        }
        self.group = group;
        Ok(self)
    }

    /// Embeds into `self.group × other` by tensoring with an irreducible of `other`.
    pub fn outer(&self, other: &VirtualRep) -> Result<VirtualRep> {
        let mut factors = self.group.factors().to_vec();
        factors.extend_from_slice(other.group.factors());
        let group = GroupSpec::new(factors)?;
        let mut out = VirtualRep::zero(group);
        for (w1, m1) in &self.terms {
            for (w2, m2) in &other.terms {
                let mut w = w1.0.clone();
                w.extend_from_slice(&w2.0);
                out.add_term(Weight(w), m1 * m2);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.terms.iter().enumerate() {
            let sep = if *m < 0 { " ⊖ " } else { " ⊕ " };
            if i > 0 {
                write!(f, "{sep}")?;
            } else if *m < 0 {
                write!(f, "⊖")?;
            }
            write!(f, "{}", self.group.format_weight(w))?;
            if m.abs() != 1 {
                write!(f, "^{}", m.abs())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_keeps_support_exact() {
        let a = VirtualRep::parse_irrep("Sp8", "1000").unwrap();
        let b = VirtualRep::parse_irrep("Sp8", "0100").unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.dim(), 35);
        let d = s.sub(&a).unwrap();
        assert_eq!(d, b);
        assert!(s.sub(&s).unwrap().is_zero());
        assert!(!a.sub(&b).unwrap().is_effective());
    }

    #[test]
    fn display() {
        let a = VirtualRep::parse_irrep("Sp8", "1000").unwrap();
        let b = VirtualRep::parse_irrep("Sp8", "0100").unwrap();
        let v = a.scale(2).sub(&b).unwrap();
        assert_eq!(v.to_string(), "⊖(0100) ⊕ (1000)^2");
    }

    #[test]
    fn outer_product() {
        let a = VirtualRep::trivial("Sp8".parse().unwrap());
        let b = VirtualRep::parse_irrep("Sp10", "10000").unwrap();
        let ab = a.outer(&b).unwrap();
        assert_eq!(ab.dim(), 10);
        assert_eq!(ab.to_string(), "(0000)⊠(10000)");
    }

    #[test]
    fn mismatched_groups() {
        let a = VirtualRep::trivial("Sp8".parse().unwrap());
        let b = VirtualRep::trivial("Sp10".parse().unwrap());
        assert!(matches!(a.add(&b), Err(Error::GroupMismatch { .. })));
    }
}

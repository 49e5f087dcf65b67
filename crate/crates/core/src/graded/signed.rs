use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lie::GroupSpec;
use crate::rep::VirtualRep;

/// Eigenvalue of the involution `σ = −id` on a summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    /// `(−1)^k`.
    pub fn parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn pow(self, k: usize) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(k as i64),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "σ+"),
            Sign::Minus => write!(f, "σ−"),
        }
    }
}

/// Cohomological degree, σ-sign and Tate twist of a block of summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotKey {
    pub degree: i32,
    pub sign: Sign,
    pub twist: i32,
}

impl SlotKey {
    pub fn new(degree: i32, sign: Sign) -> Self {
        SlotKey { degree, sign, twist: 0 }
    }

    pub fn twisted(degree: i32, sign: Sign, twist: i32) -> Self {
        SlotKey { degree, sign, twist }
    }

    pub fn combine(self, other: SlotKey) -> SlotKey {
        SlotKey { degree: self.degree + other.degree, sign: self.sign * other.sign, twist: self.twist + other.twist }
    }
}

/// Graded representation `⊕_ν ℍ^ν`, split by σ-sign and Tate twist.
/// Empty slots are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGradedRep {
    group: GroupSpec,
    slots: BTreeMap<SlotKey, VirtualRep>,
}

impl SignedGradedRep {
    pub fn zero(group: GroupSpec) -> Self {
        SignedGradedRep { group, slots: BTreeMap::new() }
    }

    /// Trivial representation, σ+, in degree 0.
    pub fn unit(group: GroupSpec) -> Self {
        SignedGradedRep::single(SlotKey::new(0, Sign::Plus), VirtualRep::trivial(group))
    }

    pub fn single(key: SlotKey, rep: VirtualRep) -> Self {
        let mut g = SignedGradedRep::zero(rep.group().clone());
        g.slots.insert(key, rep);
        g.slots.retain(|_, v| !v.is_zero());
        g
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn slots(&self) -> &BTreeMap<SlotKey, VirtualRep> {
        &self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn add_at(&mut self, key: SlotKey, rep: &VirtualRep, k: i64) -> Result<()> {
        self.group.ensure_same(rep.group())?;
        let slot = self.slots.entry(key).or_insert_with(|| VirtualRep::zero(self.group.clone()));
        slot.add_scaled(rep, k)?;
        if slot.is_zero() {
            self.slots.remove(&key);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &SignedGradedRep, k: i64) -> Result<()> {
        self.group.ensure_same(&other.group)?;
        for (key, rep) in &other.slots {
            self.add_at(*key, rep, k)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &SignedGradedRep) -> Result<SignedGradedRep> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn sub(&self, other: &SignedGradedRep) -> Result<SignedGradedRep> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    /// Content in degree `ν` with sign `s`, all twists merged.
    pub fn part(&self, degree: i32, sign: Sign) -> VirtualRep {
        let mut out = VirtualRep::zero(self.group.clone());
        for (k, v) in &self.slots {
            if k.degree == degree && k.sign == sign {
                out.add_scaled(v, 1).expect("same group");
            }
        }
        out
    }

    /// Content in degree `ν`, signs and twists merged.
    pub fn degree_part(&self, degree: i32) -> VirtualRep {
        self.part(degree, Sign::Plus).add(&self.part(degree, Sign::Minus)).expect("same group")
    }

    pub fn degrees(&self) -> Vec<i32> {
        let mut d: Vec<i32> = self.slots.keys().map(|k| k.degree).collect();
        d.dedup();
        d
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.slots.keys().map(|k| k.degree).min()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.slots.keys().map(|k| k.degree).max()
    }

    /// Largest `|ν|` with non-zero content.
    pub fn amplitude(&self) -> i32 {
        self.slots.keys().map(|k| k.degree.abs()).max().unwrap_or(0)
    }

    pub fn is_effective(&self) -> bool {
        self.slots.values().all(VirtualRep::is_effective)
    }

    /// Euler characteristic `Σ (−1)^ν dim ℍ^ν`; equals the super dimension.
    pub fn euler_char(&self) -> i128 {
        self.slots.iter().map(|(k, v)| if k.degree % 2 == 0 { v.dim() } else { -v.dim() }).sum()
    }

    pub fn total_dim(&self) -> i128 {
        self.slots.values().map(VirtualRep::dim).sum()
    }

    /// Applies `f` to every slot key, merging collisions.
    pub fn map_keys(&self, f: impl Fn(SlotKey) -> SlotKey) -> SignedGradedRep {
        let mut out = SignedGradedRep::zero(self.group.clone());
        for (k, v) in &self.slots {
            out.add_at(f(*k), v, 1).expect("same group");
        }
        out
    }

    pub fn forget_twists(&self) -> SignedGradedRep {
        self.map_keys(|k| SlotKey { twist: 0, ..k })
    }

    pub fn forget_signs(&self) -> SignedGradedRep {
        self.map_keys(|k| SlotKey { sign: Sign::Plus, ..k })
    }

    /// Complex shift `[m]`: degree `ν` moves to `ν − m`.
    pub fn shift(&self, m: i32) -> SignedGradedRep {
        self.map_keys(|k| SlotKey { degree: k.degree - m, ..k })
    }

    pub fn twist(&self, t: i32) -> SignedGradedRep {
        self.map_keys(|k| SlotKey { twist: k.twist + t, ..k })
    }

    pub fn with_sign(&self, s: Sign) -> SignedGradedRep {
        self.map_keys(|k| SlotKey { sign: k.sign * s, ..k })
    }

    /// Tensors every slot with a fixed representation of another group.
    pub fn outer(&self, other: &VirtualRep) -> Result<SignedGradedRep> {
        let mut slots = BTreeMap::new();
        let mut group = None;
        for (k, v) in &self.slots {
            let o = v.outer(other)?;
            group.get_or_insert_with(|| o.group().clone());
            slots.insert(*k, o);
        }
        let group = match group {
            Some(g) => g,
            None => {
                let mut f = self.group.factors().to_vec();
                f.extend_from_slice(other.group().factors());
                GroupSpec::new(f)?
            }
        };
        let mut out = SignedGradedRep { group, slots };
        out.slots.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// True when forgetting σ the content at `ν` and `−ν` agrees.
    pub fn is_degree_symmetric(&self) -> bool {
        let u = self.forget_twists().forget_signs();
        u.slots.iter().all(|(k, v)| u.slots.get(&SlotKey { degree: -k.degree, ..*k }) == Some(v))
    }
}

impl fmt::Display for SignedGradedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slots.is_empty() {
            return write!(f, "0");
        }
        for (k, v) in &self.slots {
            write!(f, "[{:>3}] {}", k.degree, k.sign)?;
            if k.twist != 0 {
                write!(f, "({})", k.twist)?;
            }
            writeln!(f, ": {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::parity(-3), Sign::Minus);
        assert_eq!(Sign::Minus.pow(4), Sign::Plus);
    }

    #[test]
    fn slot_bookkeeping() {
        let g: GroupSpec = "Sp8".parse().unwrap();
        let v = VirtualRep::parse_irrep("Sp8", "1000").unwrap();
        let mut h = SignedGradedRep::zero(g.clone());
        h.add_at(SlotKey::new(1, Sign::Minus), &v, 1).unwrap();
        h.add_at(SlotKey::new(-1, Sign::Plus), &v, 1).unwrap();
        assert!(h.is_degree_symmetric());
        assert_eq!(h.euler_char(), -16);
        assert_eq!(h.shift(1).min_degree(), Some(-2));
        h.add_at(SlotKey::new(1, Sign::Minus), &v, -1).unwrap();
        assert_eq!(h.slots().len(), 1);
        assert!(!h.is_degree_symmetric());
    }
}

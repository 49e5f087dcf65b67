use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan type of a simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

/// One simple factor `X_n` of a product of classical groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub family: Family,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::D => 2,
            _ => 1,
        };
        if rank < min {
            return Err(Error::InvalidGroup(format!("{family:?}{rank}: rank must be at least {min}")));
        }
        Ok(SimpleFactor { family, rank })
    }

    /// Symplectic group `Sp(2n)`.
    pub fn sp(two_n: usize) -> Result<Self> {
        if !two_n.is_multiple_of(2) {
            return Err(Error::InvalidGroup(format!("Sp({two_n}): odd size")));
        }
        Self::new(Family::C, two_n / 2)
    }

    /// Dimension of the defining representation.
    pub fn defining_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    /// Highest weight of the defining representation.
    pub fn standard_weight(&self) -> Vec<i32> {
        let mut w = vec![0; self.rank];
        w[0] = 1;
        w
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.defining_dim();
        match self.family {
            Family::A => write!(f, "SL({n})"),
            Family::B | Family::D => write!(f, "SO({n})"),
            Family::C => write!(f, "Sp({n})"),
        }
    }
}

/// A finite product of classical groups, in a fixed factor order.
///
/// `isogeny` is bookkeeping only (e.g. `SL(6)/μ3`); character arithmetic sees
/// the Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    factors: Vec<SimpleFactor>,
    isogeny: Option<String>,
}

impl GroupSpec {
    pub fn new(factors: Vec<SimpleFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidGroup("empty factor list".into()));
        }
        Ok(GroupSpec { factors, isogeny: None })
    }

    pub fn simple(factor: SimpleFactor) -> Self {
        GroupSpec { factors: vec![factor], isogeny: None }
    }

    pub fn with_isogeny(mut self, quotient: impl Into<String>) -> Self {
        self.isogeny = Some(quotient.into());
        self
    }

    /// `Sp(2n)`.
    pub fn sp(two_n: usize) -> Result<Self> {
        Ok(Self::simple(SimpleFactor::sp(two_n)?))
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn isogeny(&self) -> Option<&str> {
        self.isogeny.as_deref()
    }

    /// Total number of Dynkin labels.
    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// `(start, end)` index ranges of each factor inside a flat weight vector.
    pub fn factor_ranges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut start = 0;
        for f in &self.factors {
            out.push((start, start + f.rank));
            start += f.rank;
        }
        out
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(vec![0; self.rank()])
    }

    /// Parses a weight for this group.
    ///
    /// Factors are separated by `|`. Within a factor, a plain digit string
    /// such as `0010` gives one label per digit; labels of 10 or more need the
    /// delimited form `1.0.12.0` (dots or commas).
    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let parts: Vec<&str> = s.trim().trim_matches(|c| c == '(' || c == ')').split('|').collect();
        if parts.len() != self.factors.len() {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected {} factor(s) separated by '|' for {self}, found {}", self.factors.len(), parts.len()),
            });
        }
        let mut labels = Vec::with_capacity(self.rank());
        let mut offset = 0;
        for (part, factor) in parts.iter().zip(&self.factors) {
            let part_labels = parse_labels(part, offset)?;
            if part_labels.len() != factor.rank {
                return Err(Error::InvalidWeight {
                    group: self.to_string(),
                    reason: format!("factor {factor} needs {} labels, got {}", factor.rank, part_labels.len()),
                });
            }
            labels.extend(part_labels);
            offset += part.len() + 1;
        }
        let w = Weight(labels);
        self.check_weight(&w)?;
        Ok(w)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.0.len() != self.rank() {
            return Err(Error::InvalidWeight {
                group: self.to_string(),
                reason: format!("expected {} labels, got {}", self.rank(), w.0.len()),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if w.0.iter().any(|&a| a < 0) {
            return Err(Error::InvalidWeight {
                group: self.to_string(),
                reason: format!("highest weight {} has a negative label", self.format_weight(w)),
            });
        }
        Ok(())
    }

    /// Display form: `(0010)` or `(0000)⊠(10000)`.
    pub fn format_weight(&self, w: &Weight) -> String {
        self.factor_ranges()
            .iter()
            .map(|&(a, b)| {
                let slice = &w.0[a..b];
                if slice.iter().all(|x| (0..10).contains(x)) {
                    format!("({})", slice.iter().map(|x| x.to_string()).collect::<String>())
                } else {
                    format!("({})", slice.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("."))
                }
            })
            .collect::<Vec<_>>()
            .join("⊠")
    }

    /// Command-line form accepted by [`GroupSpec::parse_weight`]: `0000|10000`.
    pub fn compact_weight(&self, w: &Weight) -> String {
        self.factor_ranges()
            .iter()
            .map(|&(a, b)| {
                let slice = &w.0[a..b];
                let labels: Vec<String> = slice.iter().map(|x| x.to_string()).collect();
                match slice {
                    s if s.iter().all(|x| (0..10).contains(x)) => labels.concat(),
                    // a lone label still needs a delimiter to read as one number
                    [_] => format!("{}.", labels[0]),
                    _ => labels.join("."),
                }
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn ensure_same(&self, other: &GroupSpec) -> Result<()> {
        if self != other {
            return Err(Error::GroupMismatch { left: self.to_string(), right: other.to_string() });
        }
        Ok(())
    }
}

fn parse_labels(part: &str, offset: usize) -> Result<Vec<i32>> {
    let part = part.trim();
    if part.is_empty() {
        return Err(Error::Parse { pos: offset, msg: "empty weight".into() });
    }
    if part.contains('.') || part.contains(',') {
        part.strip_suffix(['.', ',']).unwrap_or(part).split(['.', ','])
            .enumerate()
            .map(|(i, tok)| {
                tok.trim().parse::<i32>().map_err(|_| Error::Parse {
                    pos: offset + i,
                    msg: format!("bad label {tok:?}"),
                })
            })
            .collect()
    } else {
        part.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10).map(|d| d as i32).ok_or_else(|| Error::Parse {
                    pos: offset + i,
                    msg: format!("expected a digit, found {c:?}"),
                })
            })
            .collect()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", names.join("×"))?;
        if let Some(q) = &self.isogeny {
            write!(f, "/{q}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `Sp8`, `Sp(8)`, `C4`, `SL6`, `SO10`, `A5`, ... joined by `x`,
    /// `×` or `*`, with an optional isogeny suffix such as `/mu3`.
    fn from_str(s: &str) -> Result<Self> {
        let (body, isogeny) = match s.split_once('/') {
            Some((b, q)) => (b, Some(q.trim().replace("mu", "μ"))),
            None => (s, None),
        };
        let mut factors = Vec::new();
        for tok in body.split(['x', '×', '*']) {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::InvalidGroup(format!("empty factor in {s:?}")));
            }
            factors.push(parse_factor(tok)?);
        }
        let mut g = GroupSpec::new(factors)?;
        g.isogeny = isogeny;
        Ok(g)
    }
}

fn parse_factor(tok: &str) -> Result<SimpleFactor> {
    let lower = tok.to_ascii_lowercase();
    let split = lower.find(|c: char| c.is_ascii_digit() || c == '(').ok_or_else(|| Error::InvalidGroup(tok.into()))?;
    let (name, num) = lower.split_at(split);
    let n: usize = num
        .trim_matches(|c| c == '(' || c == ')')
        .parse()
        .map_err(|_| Error::InvalidGroup(format!("bad size in {tok:?}")))?;
    match name {
        "a" => SimpleFactor::new(Family::A, n),
        "b" => SimpleFactor::new(Family::B, n),
        "c" => SimpleFactor::new(Family::C, n),
        "d" => SimpleFactor::new(Family::D, n),
        "sp" => SimpleFactor::sp(n),
        "sl" if n >= 2 => SimpleFactor::new(Family::A, n - 1),
        "so" if n % 2 == 1 && n >= 3 => SimpleFactor::new(Family::B, n / 2),
        "so" if n.is_multiple_of(2) && n >= 4 => SimpleFactor::new(Family::D, n / 2),
        _ => Err(Error::InvalidGroup(tok.into())),
    }
}

/// A weight in the fundamental-weight (Dynkin label) basis, flattened across factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn labels(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(v)
    }
}

/// An irreducible representation, named by its highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrrepLabel {
    pub group: GroupSpec,
    pub weight: Weight,
}

impl IrrepLabel {
    pub fn new(group: GroupSpec, weight: Weight) -> Result<Self> {
        group.check_dominant(&weight)?;
        Ok(IrrepLabel { group, weight })
    }

    pub fn parse(group: &str, weight: &str) -> Result<Self> {
        let group: GroupSpec = group.parse()?;
        let weight = group.parse_weight(weight)?;
        Self::new(group, weight)
    }

    pub fn trivial(group: GroupSpec) -> Self {
        let weight = group.zero_weight();
        IrrepLabel { group, weight }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group.format_weight(&self.weight))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_group_names() {
        let g: GroupSpec = "Sp8xSp10".parse().unwrap();
        assert_eq!(g.factors().len(), 2);
        assert_eq!(g.to_string(), "Sp(8)×Sp(10)");
        assert_eq!(g.rank(), 9);
        let sl: GroupSpec = "SL6/mu3".parse().unwrap();
        assert_eq!(sl.factors()[0], SimpleFactor { family: Family::A, rank: 5 });
        assert_eq!(sl.isogeny(), Some("μ3"));
        assert_eq!("SO(10)".parse::<GroupSpec>().unwrap().factors()[0].family, Family::D);
        assert_eq!("SO9".parse::<GroupSpec>().unwrap().factors()[0].family, Family::B);
        assert_eq!("C4".parse::<GroupSpec>().unwrap(), GroupSpec::sp(8).unwrap());
    }

    #[test]
    fn rejects_bad_groups() {
        assert!("D1".parse::<GroupSpec>().is_err());
        assert!("Sp7".parse::<GroupSpec>().is_err());
        assert!("E8".parse::<GroupSpec>().is_err());
        assert!("Sp8x".parse::<GroupSpec>().is_err());
        assert!(SimpleFactor::new(Family::C, 0).is_err());
    }

    #[test]
    fn parses_weights() {
        let g: GroupSpec = "Sp8xSp10".parse().unwrap();
        let w = g.parse_weight("0010|10000").unwrap();
        assert_eq!(w.0, vec![0, 0, 1, 0, 1, 0, 0, 0, 0]);
        assert_eq!(g.format_weight(&w), "(0010)⊠(10000)");
        let sp: GroupSpec = "Sp8".parse().unwrap();
        assert_eq!(sp.parse_weight("1.0.12.0").unwrap().0, vec![1, 0, 12, 0]);
        assert_eq!(sp.format_weight(&Weight(vec![1, 0, 12, 0])), "(1.0.12.0)");
        assert!(sp.parse_weight("001").is_err());
        assert!(matches!(sp.parse_weight("00a0"), Err(Error::Parse { pos: 2, .. })));
        assert!(IrrepLabel::new(sp.clone(), Weight(vec![0, -1, 0, 0])).is_err());
    }

    #[test]
    fn compact_weights_parse_back() {
        let g: GroupSpec = "Sp2xSp8".parse().unwrap();
        for w in [vec![3, 0, 0, 1, 0], vec![12, 1, 0, 11, 0]] {
            let w = Weight(w);
            assert_eq!(g.parse_weight(&g.compact_weight(&w)).unwrap(), w);
        }
        assert_eq!(g.compact_weight(&Weight(vec![12, 1, 0, 0, 0])), "12.|1000");
    }
}

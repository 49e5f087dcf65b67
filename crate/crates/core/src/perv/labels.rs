use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Genus of the Jacobian the product tables describe.
pub const GENUS: u8 = 4;

/// Simple objects on the degenerate fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleKind {
    /// The unit object, the skyscraper at the origin.
    Unit,
    /// `δ_{Θ_s}`, the theta sheaf of the singular fiber.
    DeltaThetaS,
    /// Perverse part of the convolution constituent `δ_{a,b}`.
    DeltaAB(u8, u8),
    /// `δ_X[μ]`.
    DeltaXShift(i32),
    /// `1_{±e}`: skyscraper on the two double points, swapped by σ.
    SkyPmE,
    /// `1_{±2e}`.
    SkyPm2E,
    SkySigmaPlus,
    SkySigmaMinus,
}

impl SimpleKind {
    pub fn delta_ab(a: u8, b: u8) -> Result<SimpleKind> {
        if a < b || a + b > 2 * (GENUS - 1) {
            return Err(Error::UnsupportedLabel(format!("δ_{{{a},{b}}} needs a ≥ b ≥ 0 and a+b ≤ {}", 2 * (GENUS - 1))));
        }
        Ok(SimpleKind::DeltaAB(a, b))
    }

    /// Weight of the untwisted object.
    pub fn weight(self) -> i32 {
        match self {
            SimpleKind::Unit
            | SimpleKind::SkyPmE
            | SimpleKind::SkyPm2E
            | SimpleKind::SkySigmaPlus
            | SimpleKind::SkySigmaMinus => 0,
            SimpleKind::DeltaThetaS => GENUS as i32 - 1,
            SimpleKind::DeltaAB(..) => 2 * (GENUS as i32 - 1),
            SimpleKind::DeltaXShift(mu) => GENUS as i32 + mu,
        }
    }

    pub fn name(self) -> String {
        match self {
            SimpleKind::Unit => "1".into(),
            SimpleKind::DeltaThetaS => "δ_Θs".into(),
            SimpleKind::SkyPmE => "1_±e".into(),
            SimpleKind::SkyPm2E => "1_±2e".into(),
            SimpleKind::SkySigmaPlus => "1_σ+".into(),
            SimpleKind::SkySigmaMinus => "1_σ−".into(),
            SimpleKind::DeltaAB(a, b) => format!("δ_{{{a},{b}}}"),
            SimpleKind::DeltaXShift(mu) => format!("δ_X[{mu}]"),
        }
    }

    /// Machine-readable key used in JSON.
    pub fn key(self) -> String {
        match self {
            SimpleKind::Unit => "unit".into(),
            SimpleKind::DeltaThetaS => "delta_theta_s".into(),
            SimpleKind::SkyPmE => "sky_pm_e".into(),
            SimpleKind::SkyPm2E => "sky_pm_2e".into(),
            SimpleKind::SkySigmaPlus => "sky_sigma_plus".into(),
            SimpleKind::SkySigmaMinus => "sky_sigma_minus".into(),
            SimpleKind::DeltaAB(a, b) => format!("delta_{a}_{b}"),
            SimpleKind::DeltaXShift(mu) => format!("delta_x[{mu}]"),
        }
    }
}

/// One summand: a simple object, or an opaque convolution product of
/// several, with a Tate twist `(twist)` (so `twist = −2` renders as `(−2)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    factors: Vec<SimpleKind>,
    pub twist: i32,
}

impl Term {
    pub fn simple(kind: SimpleKind) -> Term {
        Term { factors: vec![kind], twist: 0 }
    }

    pub fn twisted(kind: SimpleKind, twist: i32) -> Term {
        Term { factors: vec![kind], twist }
    }

    /// Opaque product; unit factors are dropped and the rest sorted.
    pub fn product(mut factors: Vec<SimpleKind>, twist: i32) -> Term {
        factors.retain(|k| *k != SimpleKind::Unit);
        if factors.is_empty() {
            factors.push(SimpleKind::Unit);
        }
        factors.sort();
        Term { factors, twist }
    }

    pub fn factors(&self) -> &[SimpleKind] {
        &self.factors
    }

    pub fn as_simple(&self) -> Option<SimpleKind> {
        match self.factors.as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn weight(&self) -> i32 {
        self.factors.iter().map(|k| k.weight()).sum::<i32>() - 2 * self.twist
    }

    pub fn with_twist(&self, t: i32) -> Term {
        Term { factors: self.factors.clone(), twist: self.twist + t }
    }

    fn body(&self) -> String {
        match self.factors.as_slice() {
            [k] => k.name(),
            fs => format!("({})", fs.iter().map(|k| k.name()).collect::<Vec<_>>().join(" * ")),
        }
    }
}

fn fmt_twist(t: i32) -> String {
    if t < 0 {
        format!("(−{})", -t)
    } else {
        format!("({t})")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body())?;
        if self.twist != 0 {
            write!(f, "{}", fmt_twist(self.twist))?;
        }
        Ok(())
    }
}

/// Multiset of terms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FormalObject {
    terms: BTreeMap<Term, u32>,
}

impl FormalObject {
    pub fn zero() -> Self {
        FormalObject::default()
    }

    pub fn of(kind: SimpleKind) -> Self {
        FormalObject::from_terms([(Term::simple(kind), 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Term, u32)>) -> Self {
        let mut o = FormalObject::zero();
        for (t, m) in terms {
            o.add_term(t, m);
        }
        o
    }

    pub fn terms(&self) -> &BTreeMap<Term, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: Term, m: u32) {
        if m > 0 {
            *self.terms.entry(t).or_insert(0) += m;
        }
    }

    pub fn add(&mut self, other: &FormalObject) {
        for (t, m) in &other.terms {
            self.add_term(t.clone(), *m);
        }
    }

    pub fn sum(&self, other: &FormalObject) -> FormalObject {
        let mut out = self.clone();
        out.add(other);
        out
    }

    /// Multiset difference; fails if `other` is not contained in `self`.
    pub fn difference(&self, other: &FormalObject) -> Result<FormalObject> {
        let mut out = self.clone();
        for (t, m) in &other.terms {
            let have = out.terms.get(t).copied().unwrap_or(0);
            if have < *m {
                return Err(Error::NegativeResult(format!("{t} occurs {have} times, cannot remove {m}")));
            }
            if have == *m {
                out.terms.remove(t);
            } else {
                out.terms.insert(t.clone(), have - m);
            }
        }
        Ok(out)
    }

    pub fn twist(&self, t: i32) -> FormalObject {
        FormalObject::from_terms(self.terms.iter().map(|(x, m)| (x.with_twist(t), *m)))
    }

    /// Weights of all summands, deduplicated.
    pub fn weights(&self) -> Vec<i32> {
        let mut w: Vec<i32> = self.terms.keys().map(Term::weight).collect();
        w.sort();
        w.dedup();
        w
    }
}

impl fmt::Display for FormalObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, m)| if *m == 1 { t.to_string() } else { format!("{t}^{m}") })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

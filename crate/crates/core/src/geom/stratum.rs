use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strata of the moduli space of 4-dimensional ppav's, by theta singularities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stratum {
    Smooth,
    Jacobian,
    ThetaNull,
    ThetaNullJacobian,
    Hyperelliptic,
    Decomposable,
}

impl Stratum {
    pub const ALL: [Stratum; 6] = [
        Stratum::Smooth,
        Stratum::Jacobian,
        Stratum::ThetaNull,
        Stratum::ThetaNullJacobian,
        Stratum::Hyperelliptic,
        Stratum::Decomposable,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Stratum::Smooth => "smooth",
            Stratum::Jacobian => "jacobian",
            Stratum::ThetaNull => "theta_null",
            Stratum::ThetaNullJacobian => "theta_null_jacobian",
            Stratum::Hyperelliptic => "hyperelliptic",
            Stratum::Decomposable => "decomposable",
        }
    }

    /// Letter of the case in the list of singularity types.
    pub fn letter(self) -> char {
        match self {
            Stratum::Smooth => 'a',
            Stratum::Jacobian => 'b',
            Stratum::ThetaNull => 'c',
            Stratum::ThetaNullJacobian => 'd',
            Stratum::Hyperelliptic => 'e',
            Stratum::Decomposable => 'f',
        }
    }
}

impl FromStr for Stratum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Stratum> {
        let t = s.trim().to_ascii_lowercase();
        Stratum::ALL
            .into_iter()
            .find(|x| x.id() == t || (t.len() == 1 && t.starts_with(x.letter())))
            .ok_or_else(|| Error::UnknownStratum(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumData {
    pub stratum: Stratum,
    pub locus: String,
    /// `None` when no group is attached.
    pub group: Option<String>,
    pub conjectural: bool,
    /// Dimension of the defining representation, i.e. `χ(δ_Θ)`; `None` if unknown.
    pub chi: Option<u64>,
    pub singularities: String,
}

pub fn schottky_stratum(id: &str) -> Result<StratumData> {
    Ok(stratum_data(id.parse()?))
}

pub fn stratum_data(s: Stratum) -> StratumData {
    let (locus, group, conjectural, chi, sing) = match s {
        Stratum::Smooth => ("A_4 ∖ N_4", Some("Sp(24)"), false, Some(24), "smooth theta divisor"),
        Stratum::Jacobian => ("J_4 ∖ (θ_null ∩ J_4)", Some("Sl(6)/μ_3"), false, Some(20), "two ordinary double points"),
        Stratum::ThetaNull => ("θ_null ∖ (θ_null ∩ J_4)", Some("Sp(22)"), true, Some(22), "one ordinary double point"),
        Stratum::ThetaNullJacobian => (
            "(θ_null ∩ J_4) ∖ (J_4,hyp ∪ A_4,dec)",
            Some("Sl(6)/μ_3"),
            false,
            Some(20),
            "one singularity, Hesse rank three",
        ),
        Stratum::Hyperelliptic => ("J_4,hyp ∖ A_4,dec", Some("Sp(6)"), false, None, "singular locus of dimension one"),
        Stratum::Decomposable => ("A_4,dec", None, false, None, "singular locus of dimension two"),
    };
    StratumData {
        stratum: s,
        locus: locus.into(),
        group: group.map(String::from),
        conjectural,
        chi,
        singularities: sing.into(),
    }
}

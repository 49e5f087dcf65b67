use std::collections::BTreeMap;

use super::{graded_tensor, super_ext, Sign, SignedGradedRep, SlotKey};
use crate::error::{Error, Result};
use crate::lie::{Family, GroupSpec, SimpleFactor, Weight};
use crate::rep::{self, VirtualRep};

/// Whether σ acts on `H^k(X)` by `(−1)^k` or is ignored (everything σ+).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Signed,
    Unsigned,
}

fn check_genus(genus: usize) -> Result<()> {
    if genus < 2 {
        return Err(Error::InvalidArgument(format!("genus must be at least 2, got {genus}")));
    }
    Ok(())
}

/// `Λ^0 … Λ^{2g}` of the standard representation of the first factor
/// `Sp(2g)` of `group`, extended trivially over the remaining factors.
pub fn cohomology_of_x(group: &GroupSpec, genus: usize) -> Result<Vec<VirtualRep>> {
    check_genus(genus)?;
    let first = *group.factors().first().expect("non-empty group");
    if first != SimpleFactor::new(Family::C, genus)? {
        return Err(Error::InvalidGroup(format!("{group} does not start with Sp({})", 2 * genus)));
    }
    let sp = GroupSpec::simple(first);
    let std = VirtualRep::from_terms(sp.clone(), [(Weight(first.standard_weight()), 1)])?;
    let powers = rep::newton_powers(&std, 2 * genus, true)?;
    if group.factors().len() == 1 {
        return powers.into_iter().map(|p| p.with_group(group.clone())).collect();
    }
    let rest = GroupSpec::new(group.factors()[1..].to_vec())?;
    let triv = VirtualRep::trivial(rest);
    powers.iter().map(|p| p.outer(&triv)?.with_group(group.clone())).collect()
}

/// `ℍ^•(X, δ_X[μ])`: `H^{ν+μ+g}(X)` in degree `ν`.
pub fn delta_x_hyper(group: &GroupSpec, genus: usize, mu: i32, conv: SignConvention) -> Result<SignedGradedRep> {
    let h = cohomology_of_x(group, genus)?;
    delta_x_from(&h, group, genus, mu, conv)
}

fn delta_x_from(h: &[VirtualRep], group: &GroupSpec, genus: usize, mu: i32, conv: SignConvention) -> Result<SignedGradedRep> {
    let g = genus as i32;
    let mut out = SignedGradedRep::zero(group.clone());
    for (k, rep) in h.iter().enumerate() {
        let degree = k as i32 - mu - g;
        let sign = match conv {
            SignConvention::Signed => Sign::parity(k as i64),
            SignConvention::Unsigned => Sign::Plus,
        };
        out.add_at(SlotKey::new(degree, sign), rep, 1)?;
    }
    Ok(out)
}

/// `H^k(X)` placed in degree 0 with σ acting by `(−1)^k`.
fn coefficient(h: &[VirtualRep], k: usize, conv: SignConvention) -> SignedGradedRep {
    let sign = match conv {
        SignConvention::Signed => Sign::parity(k as i64),
        SignConvention::Unsigned => Sign::Plus,
    };
    SignedGradedRep::single(SlotKey::new(0, sign), h[k].clone())
}

/// Hypercohomology of the translation-invariant part `τ_±` of `δ_Θ * δ_Θ`:
/// `⊕ H^{g−2−|μ|}(X) ⊗ δ_X[μ]`, `μ` odd for `+`, even for `−`.
pub fn tau_hypercohomology(group: &GroupSpec, genus: usize, parity: Sign) -> Result<SignedGradedRep> {
    let h = cohomology_of_x(group, genus)?;
    let g = genus as i32;
    let mut out = SignedGradedRep::zero(group.clone());
    for mu in -(g - 2)..=(g - 2) {
        let odd = mu.rem_euclid(2) == 1;
        if odd != (parity == Sign::Plus) {
            continue;
        }
        let k = (g - 2 - mu.abs()) as usize;
        let coeff = coefficient(&h, k, SignConvention::Signed);
        let pattern = delta_x_from(&h, group, genus, mu, SignConvention::Signed)?;
        out.add_scaled(&graded_tensor(&coeff, &pattern)?, 1)?;
    }
    Ok(out)
}

/// Outcome of removing constant shifts of `δ_X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantPeel {
    pub core: SignedGradedRep,
    /// `μ ≥ 0` ↦ multiplicity space `M_μ` (concentrated in degree 0) of
    /// `δ_X[μ]`, and also of `δ_X[−μ]` when `μ > 0`.
    pub shifts: BTreeMap<i32, SignedGradedRep>,
}

/// Greedily removes `M_μ ⊗ (δ_X[μ] ⊕ δ_X[−μ])` starting from the lowest degree,
/// where only `Λ^0` of the pattern survives. Twists are dropped, and so are
/// signs under [`SignConvention::Unsigned`].
pub fn peel_constants(g: &SignedGradedRep, genus: usize, conv: SignConvention) -> Result<ConstantPeel> {
    let group = g.group().clone();
    let h = cohomology_of_x(&group, genus)?;
    let gi = genus as i32;
    let mut rest = match conv {
        SignConvention::Signed => g.forget_twists(),
        SignConvention::Unsigned => g.forget_twists().forget_signs(),
    };
    let effective = rest.is_effective();
    let mut shifts = BTreeMap::new();

    let top = rest.amplitude() - gi;
    for mu in (0..=top).rev() {
        let lowest = -gi - mu;
        let mut m = SignedGradedRep::zero(group.clone());
        for sign in [Sign::Plus, Sign::Minus] {
            m.add_at(SlotKey::new(0, sign), &rest.part(lowest, sign), 1)?;
        }
        if m.is_zero() {
            continue;
        }
        let mut pattern = delta_x_from(&h, &group, genus, mu, conv)?;
        if mu > 0 {
            pattern.add_scaled(&delta_x_from(&h, &group, genus, -mu, conv)?, 1)?;
        }
        rest.add_scaled(&graded_tensor(&m, &pattern)?, -1)?;
        if effective && !rest.is_effective() {
            return Err(Error::InconsistentPeel(format!("removing shifts of δ_X[±{mu}] leaves negative multiplicities")));
        }
        shifts.insert(mu, m);
    }
    if rest.amplitude() >= gi {
        return Err(Error::InconsistentPeel(format!(
            "content survives in degree {} after removing constant shifts",
            rest.slots().keys().map(|k| k.degree).filter(|d| d.abs() >= gi).min().unwrap_or(gi)
        )));
    }
    Ok(ConstantPeel { core: rest, shifts })
}

/// `ℍ^•(JC, δ_C)` over `Sp(2g)`: trivial in degree −1, the standard
/// representation in degree 0, trivial twisted by (−1) in degree 1.
/// The σ-signs are bookkeeping only, since `δ_C` is not σ-equivariant.
pub fn curve_hyper(genus: usize) -> Result<SignedGradedRep> {
    check_genus(genus)?;
    let group = GroupSpec::sp(2 * genus)?;
    let f = group.factors()[0];
    let triv = VirtualRep::trivial(group.clone());
    let std = VirtualRep::from_terms(group.clone(), [(Weight(f.standard_weight()), 1)])?;
    let mut out = SignedGradedRep::zero(group);
    out.add_at(SlotKey::new(-1, Sign::Plus), &triv, 1)?;
    out.add_at(SlotKey::new(0, Sign::Minus), &std, 1)?;
    out.add_at(SlotKey::twisted(1, Sign::Minus, -1), &triv, 1)?;
    Ok(out)
}

/// Closed form of `ℍ^ν(JC, δ_{Θ_JC})`: `⊕_{μ ≤ n/2} sgn^{n+μ} ⊠ Λ^{n−2μ}`
/// with `n = g−1−|ν|`.
pub fn jacobian_theta_closed_form(genus: usize) -> Result<SignedGradedRep> {
    let group = GroupSpec::sp(2 * genus)?;
    let h = cohomology_of_x(&group, genus)?;
    let g = genus as i32;
    let mut out = SignedGradedRep::zero(group);
    for nu in -(g - 1)..=(g - 1) {
        let n = g - 1 - nu.abs();
        for mu in 0..=n / 2 {
            out.add_at(SlotKey::new(nu, Sign::parity((n + mu) as i64)), &h[(n - 2 * mu) as usize], 1)?;
        }
    }
    Ok(out)
}

/// Copies the signed content of degrees `ν ≤ 0` onto `−ν`, after checking
/// that the sign-forgotten content is already symmetric.
pub fn lefschetz_mirror(h: &SignedGradedRep) -> Result<SignedGradedRep> {
    let h = h.forget_twists();
    if !h.is_degree_symmetric() {
        let bad = h
            .degrees()
            .into_iter()
            .find(|&d| h.degree_part(d) != h.degree_part(-d))
            .unwrap_or(0);
        return Err(Error::Asymmetric(bad));
    }
    let mut out = SignedGradedRep::zero(h.group().clone());
    for (k, v) in h.slots() {
        if k.degree <= 0 {
            out.add_at(*k, v, 1)?;
            if k.degree < 0 {
                out.add_at(SlotKey { degree: -k.degree, ..*k }, v, 1)?;
            }
        }
    }
    Ok(out)
}

/// `ℍ^•(JC, δ_{Θ_JC})` computed as `Λ^{g−1}` of the curve, constants peeled,
/// positive degrees signed by Lefschetz symmetry.
pub fn jacobian_theta_via_curve(genus: usize) -> Result<SignedGradedRep> {
    let ext = super_ext(genus - 1, &curve_hyper(genus)?)?;
    let peeled = peel_constants(&ext, genus, SignConvention::Signed)?;
    lefschetz_mirror(&peeled.core)
}

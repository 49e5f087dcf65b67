use super::labels::{FormalObject, SimpleKind, Term, GENUS};
use crate::error::{Error, Result};
use crate::graded::{
    curve_hyper, delta_x_hyper, graded_tensor, jacobian_theta_closed_form, peel_constants, super_ext, Sign,
    SignConvention, SignedGradedRep, SlotKey,
};
use crate::lie::GroupSpec;
use crate::rep::VirtualRep;

fn sp8() -> GroupSpec {
    GroupSpec::sp(2 * GENUS as usize).expect("valid group")
}

/// `ℍ^•(JC, δ_c)` with constant shifts of `δ_JC` removed, σ ignored.
pub fn h_delta(c: usize) -> Result<SignedGradedRep> {
    if c > 2 * (GENUS as usize - 1) {
        return Err(Error::UnsupportedLabel(format!("δ_{c} lies outside 0..={}", 2 * (GENUS - 1))));
    }
    let ext = super_ext(c, &curve_hyper(GENUS as usize)?)?;
    Ok(peel_constants(&ext, GENUS as usize, SignConvention::Unsigned)?.core)
}

/// `ℍ^•(JC, δ_{a,b})` from the difference rule
/// `δ_{a,b} = δ_a * δ_b − δ_{a+1} * δ_{b−1}` up to shifts of `δ_JC`.
pub fn lr_delta_ab(a: u8, b: u8) -> Result<SignedGradedRep> {
    SimpleKind::delta_ab(a, b)?;
    let (a, b) = (a as usize, b as usize);
    if b == 0 {
        return h_delta(a);
    }
    let x = graded_tensor(&h_delta(a)?, &h_delta(b)?)?.sub(&graded_tensor(&h_delta(a + 1)?, &h_delta(b - 1)?)?)?;
    let core = peel_constants(&x, GENUS as usize, SignConvention::Unsigned)?.core;
    if !core.is_effective() {
        return Err(Error::NegativeResult(format!("δ_{{{a},{b}}} has negative multiplicities")));
    }
    if !core.is_degree_symmetric() {
        return Err(Error::Asymmetric(core.min_degree().unwrap_or(0)));
    }
    Ok(core)
}

/// Two points swapped by σ: the regular representation of `⟨σ⟩`.
fn two_points(group: &GroupSpec) -> SignedGradedRep {
    let triv = VirtualRep::trivial(group.clone());
    let mut h = SignedGradedRep::single(SlotKey::new(0, Sign::Plus), triv.clone());
    h.add_at(SlotKey::new(0, Sign::Minus), &triv, 1).expect("same group");
    h
}

fn hyper_simple(kind: SimpleKind) -> Result<SignedGradedRep> {
    let g = sp8();
    let triv = VirtualRep::trivial(g.clone());
    Ok(match kind {
        SimpleKind::Unit | SimpleKind::SkySigmaPlus => SignedGradedRep::unit(g),
        SimpleKind::SkySigmaMinus => SignedGradedRep::single(SlotKey::new(0, Sign::Minus), triv),
        SimpleKind::SkyPmE | SimpleKind::SkyPm2E => two_points(&g),
        SimpleKind::DeltaThetaS => jacobian_theta_closed_form(GENUS as usize)?,
        SimpleKind::DeltaAB(a, b) => lr_delta_ab(a, b)?,
        SimpleKind::DeltaXShift(mu) => delta_x_hyper(&g, GENUS as usize, mu, SignConvention::Signed)?,
    })
}

fn hyper_term(t: &Term) -> Result<SignedGradedRep> {
    let mut acc = SignedGradedRep::unit(sp8());
    for k in t.factors() {
        acc = graded_tensor(&acc, &hyper_simple(*k)?)?;
    }
    Ok(acc.twist(t.twist))
}

/// Hypercohomology as a graded `Sp(8)`-representation; additive, and
/// multiplicative on products by Künneth.
pub fn hyper(obj: &FormalObject) -> Result<SignedGradedRep> {
    let mut out = SignedGradedRep::zero(sp8());
    for (t, m) in obj.terms() {
        out.add_scaled(&hyper_term(t)?, *m as i64)?;
    }
    Ok(out)
}

/// Euler characteristic of the hypercohomology.
pub fn euler_check(obj: &FormalObject) -> Result<i128> {
    Ok(hyper(obj)?.euler_char())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skyscrapers() {
        let h = hyper(&FormalObject::of(SimpleKind::SkyPmE)).unwrap();
        assert_eq!(h.degree_part(0).dim(), 2);
        assert_eq!(euler_check(&FormalObject::of(SimpleKind::Unit)).unwrap(), 1);
    }

    #[test]
    fn theta_s_and_extremes() {
        assert_eq!(euler_check(&FormalObject::of(SimpleKind::DeltaThetaS)).unwrap(), 20);
        assert_eq!(h_delta(6).unwrap(), SignedGradedRep::unit(sp8()));
        assert_eq!(h_delta(0).unwrap(), SignedGradedRep::unit(sp8()));
        assert_eq!(h_delta(5).unwrap(), curve_hyper(4).unwrap().forget_twists().forget_signs());
    }

    #[test]
    fn twists_carry_through() {
        let t = FormalObject::from_terms([(Term::twisted(SimpleKind::SkySigmaMinus, -3), 1)]);
        let h = hyper(&t).unwrap();
        assert_eq!(h.slots().keys().next().unwrap().twist, -3);
    }
}

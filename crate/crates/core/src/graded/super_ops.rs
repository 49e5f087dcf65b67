use super::{Sign, SignedGradedRep, SlotKey};
use crate::error::Result;
use crate::rep::{self, VirtualRep};

/// Künneth product: degrees and twists add, signs multiply.
pub fn graded_tensor(a: &SignedGradedRep, b: &SignedGradedRep) -> Result<SignedGradedRep> {
    a.group().ensure_same(b.group())?;
    let mut out = SignedGradedRep::zero(a.group().clone());
    for (k1, v1) in a.slots() {
        for (k2, v2) in b.slots() {
            out.add_at(k1.combine(*k2), &rep::tensor(v1, v2)?, 1)?;
        }
    }
    Ok(out)
}

/// Symmetric and alternating squares in the graded (Koszul) sense.
pub fn super_squares(g: &SignedGradedRep) -> Result<(SignedGradedRep, SignedGradedRep)> {
    let mut sym = SignedGradedRep::zero(g.group().clone());
    let mut alt = SignedGradedRep::zero(g.group().clone());
    let slots: Vec<(&SlotKey, &VirtualRep)> = g.slots().iter().collect();
    for (i, (k1, v1)) in slots.iter().enumerate() {
        let diag = k1.combine(**k1);
        let (s, a) = (rep::sym2(v1)?, rep::alt2(v1)?);
        if k1.degree % 2 == 0 {
            sym.add_at(diag, &s, 1)?;
            alt.add_at(diag, &a, 1)?;
        } else {
            sym.add_at(diag, &a, 1)?;
            alt.add_at(diag, &s, 1)?;
        }
        for (k2, v2) in &slots[i + 1..] {
            let t = rep::tensor(v1, v2)?;
            let key = k1.combine(**k2);
            sym.add_at(key, &t, 1)?;
            alt.add_at(key, &t, 1)?;
        }
    }
    Ok((sym, alt))
}

pub fn super_sym2(g: &SignedGradedRep) -> Result<SignedGradedRep> {
    super_squares(g).map(|(s, _)| s)
}

pub fn super_alt2(g: &SignedGradedRep) -> Result<SignedGradedRep> {
    super_squares(g).map(|(_, a)| a)
}

/// `a`-th super exterior power: exterior powers on even slots, symmetric
/// powers on odd slots, summed over all ways to split `a` among the slots.
pub fn super_ext(a: usize, g: &SignedGradedRep) -> Result<SignedGradedRep> {
    let slots: Vec<(SlotKey, Vec<VirtualRep>)> = g
        .slots()
        .iter()
        .map(|(k, v)| {
            let even = k.degree % 2 == 0;
            // Λ^j of an honest representation vanishes past its dimension
            let stop = if even && v.is_effective() { a.min(v.dim() as usize) } else { a };
            let mut powers = rep::newton_powers(v, stop, even)?;
            powers.resize(a + 1, VirtualRep::zero(g.group().clone()));
            Ok((*k, powers))
        })
        .collect::<Result<_>>()?;
    let mut out = SignedGradedRep::zero(g.group().clone());
    let unit = VirtualRep::trivial(g.group().clone());
    compositions(&slots, a, SlotKey::new(0, Sign::Plus), unit, &mut out)?;
    Ok(out)
}

fn compositions(
    slots: &[(SlotKey, Vec<VirtualRep>)],
    left: usize,
    key: SlotKey,
    acc: VirtualRep,
    out: &mut SignedGradedRep,
) -> Result<()> {
    let Some(((k, powers), rest)) = slots.split_first() else {
        if left == 0 {
            out.add_at(key, &acc, 1)?;
        }
        return Ok(());
    };
    for (j, p) in powers.iter().enumerate().take(left + 1) {
        if p.is_zero() {
            continue;
        }
        let next = if j == 0 { acc.clone() } else { rep::tensor(&acc, p)? };
        if next.is_zero() {
            continue;
        }
        let jk = SlotKey { degree: k.degree * j as i32, sign: k.sign.pow(j), twist: k.twist * j as i32 };
        compositions(rest, left - j, key.combine(jk), next, out)?;
    }
    Ok(())
}

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use super::VirtualRep;
use crate::error::{Error, Result};
use crate::lie::{self, Character, GroupSpec, IrrepLabel, RootSystem, SimpleFactor, Weight};

type FactorDecomp = Arc<BTreeMap<Vec<i32>, i64>>;
type Cache<K> = LazyLock<RwLock<HashMap<K, FactorDecomp>>>;

static TENSOR_CACHE: Cache<(SimpleFactor, Vec<i32>, Vec<i32>)> = LazyLock::new(|| RwLock::new(HashMap::new()));
static ADAMS_CACHE: Cache<(SimpleFactor, u32, Vec<i32>)> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Repeatedly removes the irreducible whose highest weight is the highest
/// weight left in the support.
fn peel(
    mut support: HashMap<Vec<i32>, i64>,
    height: impl Fn(&[i32]) -> i64,
    diagram: impl Fn(&[i32]) -> Result<Vec<(Vec<i32>, u64)>>,
    describe: impl Fn(&[i32]) -> String,
) -> Result<BTreeMap<Vec<i32>, i64>> {
    let bound = 8 * support.len() + 64;
    let mut out = BTreeMap::new();
    for _ in 0..bound {
        let Some((top, m)) = support
            .iter()
            .max_by(|a, b| height(a.0).cmp(&height(b.0)).then_with(|| a.0.cmp(b.0)))
            .map(|(w, m)| (w.clone(), *m))
        else {
            return Ok(out);
        };
        if top.iter().any(|&x| x < 0) {
            return Err(Error::NotWeylInvariant(describe(&top)));
        }
        for (w, n) in diagram(&top)? {
            let e = support.entry(w).or_insert(0);
            *e -= m * n as i64;
        }
        support.retain(|_, v| *v != 0);
        out.insert(top, m);
    }
    Err(Error::PeelBound(bound))
}

fn decompose_simple(factor: SimpleFactor, support: HashMap<Vec<i32>, i64>) -> Result<BTreeMap<Vec<i32>, i64>> {
    let rs = RootSystem::get(factor);
    peel(
        support,
        |w| rs.height(w),
        |w| Ok(lie::simple_diagram(factor, w)?.as_ref().clone()),
        |w| format!("{w:?}"),
    )
}

/// Expands a Weyl-invariant character in irreducible characters.
pub fn decompose(ch: &Character) -> Result<VirtualRep> {
    let group = ch.group.clone();
    let support = ch.mults.iter().map(|(w, m)| (w.0.clone(), *m)).collect();
    let out = peel(
        support,
        |w| lie::height(&group, &Weight(w.to_vec())),
        |w| {
            let label = IrrepLabel { group: group.clone(), weight: Weight(w.to_vec()) };
            Ok(lie::weight_multiplicities(&label)?.into_iter().map(|(w, m)| (w.0, m)).collect())
        },
        |w| group.format_weight(&Weight(w.to_vec())),
    )?;
    let mut v = VirtualRep::zero(ch.group.clone());
    for (w, m) in out {
        v.add_term(Weight(w), m);
    }
    Ok(v)
}

fn simple_character(factor: SimpleFactor, w: &[i32]) -> Result<Vec<(Vec<i32>, u64)>> {
    Ok(lie::simple_diagram(factor, w)?.as_ref().clone())
}

fn tensor_factor(factor: SimpleFactor, a: &[i32], b: &[i32]) -> Result<FactorDecomp> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let key = (factor, a.to_vec(), b.to_vec());
    if let Some(d) = TENSOR_CACHE.read().expect("tensor cache poisoned").get(&key) {
        return Ok(d.clone());
    }
    let da = simple_character(factor, a)?;
    let db = simple_character(factor, b)?;
    let mut conv: HashMap<Vec<i32>, i64> = HashMap::with_capacity(da.len() * db.len() / 2 + 1);
    for (w1, m1) in &da {
        for (w2, m2) in &db {
            let w: Vec<i32> = w1.iter().zip(w2).map(|(x, y)| x + y).collect();
            *conv.entry(w).or_insert(0) += (m1 * m2) as i64;
        }
    }
    let d = Arc::new(decompose_simple(factor, conv)?);
    Ok(TENSOR_CACHE.write().expect("tensor cache poisoned").entry(key).or_insert(d).clone())
}

fn adams_factor(factor: SimpleFactor, k: u32, w: &[i32]) -> Result<FactorDecomp> {
    let key = (factor, k, w.to_vec());
    if let Some(d) = ADAMS_CACHE.read().expect("adams cache poisoned").get(&key) {
        return Ok(d.clone());
    }
    let scaled: HashMap<Vec<i32>, i64> = simple_character(factor, w)?
        .into_iter()
        .map(|(w, m)| (w.iter().map(|x| x * k as i32).collect(), m as i64))
        .collect();
    let d = Arc::new(decompose_simple(factor, scaled)?);
    Ok(ADAMS_CACHE.write().expect("adams cache poisoned").entry(key).or_insert(d).clone())
}

/// Outer product of per-factor decompositions into a product-group rep.
fn assemble(group: &GroupSpec, parts: Vec<FactorDecomp>) -> VirtualRep {
    let mut acc: Vec<(Vec<i32>, i64)> = vec![(Vec::new(), 1)];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for (prefix, m) in &acc {
            for (w, n) in part.iter() {
                let mut v = prefix.clone();
                v.extend_from_slice(w);
                next.push((v, m * n));
            }
        }
        acc = next;
    }
    let mut out = VirtualRep::zero(group.clone());
    for (w, m) in acc {
        out.add_term(Weight(w), m);
    }
    out
}

fn tensor_irreps(group: &GroupSpec, a: &Weight, b: &Weight) -> Result<VirtualRep> {
    let parts = group
        .factors()
        .iter()
        .zip(group.factor_ranges())
        .map(|(f, (s, e))| tensor_factor(*f, &a.0[s..e], &b.0[s..e]))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(group, parts))
}

/// Tensor product, bilinear over virtual multiplicities.
pub fn tensor(a: &VirtualRep, b: &VirtualRep) -> Result<VirtualRep> {
    a.group().ensure_same(b.group())?;
    let mut out = VirtualRep::zero(a.group().clone());
    for (w1, m1) in a.terms() {
        for (w2, m2) in b.terms() {
            out.add_scaled(&tensor_irreps(a.group(), w1, w2)?, m1 * m2)?;
        }
    }
    Ok(out)
}

/// Adams operation `ψ_k`.
pub fn adams(k: u32, v: &VirtualRep) -> Result<VirtualRep> {
    if k == 0 {
        return Err(Error::InvalidArgument("Adams operation needs k ≥ 1".into()));
    }
    if k == 1 {
        return Ok(v.clone());
    }
    let group = v.group();
    let mut out = VirtualRep::zero(group.clone());
    for (w, m) in v.terms() {
        let parts = group
            .factors()
            .iter()
            .zip(group.factor_ranges())
            .map(|(f, (s, e))| adams_factor(*f, k, &w.0[s..e]))
            .collect::<Result<Vec<_>>>()?;
        out.add_scaled(&assemble(group, parts), *m)?;
    }
    Ok(out)
}

pub fn sym2(v: &VirtualRep) -> Result<VirtualRep> {
    tensor(v, v)?.add(&adams(2, v)?)?.div_exact(2, "symmetric square")
}

pub fn alt2(v: &VirtualRep) -> Result<VirtualRep> {
    tensor(v, v)?.sub(&adams(2, v)?)?.div_exact(2, "alternating square")
}

/// `Λ^k` from Newton's identity `kΛ^k = Σ_{i=1}^k (−1)^{i−1} ψ^i Λ^{k−i}`.
pub fn ext_power(v: &VirtualRep, k: usize) -> Result<VirtualRep> {
    newton_powers(v, k, true).map(|mut p| p.pop().expect("k+1 powers"))
}

/// `S^k` from `kS^k = Σ_{i=1}^k ψ^i S^{k−i}`.
pub fn sym_power(v: &VirtualRep, k: usize) -> Result<VirtualRep> {
    newton_powers(v, k, false).map(|mut p| p.pop().expect("k+1 powers"))
}

/// All of `Λ^0 … Λ^k` (or `S^0 … S^k`).
pub fn newton_powers(v: &VirtualRep, k: usize, alternating: bool) -> Result<Vec<VirtualRep>> {
    let group = v.group().clone();
    let psi: Vec<VirtualRep> = (1..=k).map(|i| adams(i as u32, v)).collect::<Result<_>>()?;
    let mut powers = vec![VirtualRep::trivial(group.clone())];
    for n in 1..=k {
        let mut acc = VirtualRep::zero(group.clone());
        for i in 1..=n {
            let sign = if alternating && i % 2 == 0 { -1 } else { 1 };
            acc.add_scaled(&tensor(&psi[i - 1], &powers[n - i])?, sign)?;
        }
        powers.push(acc.div_exact(n as i64, "Newton identity")?);
    }
    Ok(powers)
}

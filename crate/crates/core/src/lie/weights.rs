use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, LazyLock, RwLock};

use super::group::{GroupSpec, IrrepLabel, SimpleFactor, Weight};
use super::roots::RootSystem;
use crate::error::{Error, Result};

pub const DEFAULT_DIM_CAP: u64 = 100_000;

static DIM_CAP: AtomicU64 = AtomicU64::new(DEFAULT_DIM_CAP);

/// Largest irreducible dimension for which a weight diagram will be built.
pub fn dim_cap() -> u64 {
    DIM_CAP.load(Ordering::Relaxed)
}

pub fn set_dim_cap(cap: u64) {
    DIM_CAP.store(cap, Ordering::Relaxed);
}

/// Weight diagram of one simple-factor irreducible: every weight with its multiplicity.
pub type SimpleDiagram = Vec<(Vec<i32>, u64)>;

type DiagramKey = (SimpleFactor, Vec<i32>);

static DIAGRAMS: LazyLock<RwLock<HashMap<DiagramKey, Arc<SimpleDiagram>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Weyl dimension of an irreducible of a product group.
pub fn weyl_dim(label: &IrrepLabel) -> Result<u128> {
    label.group.check_dominant(&label.weight)?;
    Ok(weyl_dim_unchecked(&label.group, &label.weight))
}

pub(crate) fn weyl_dim_unchecked(group: &GroupSpec, weight: &Weight) -> u128 {
    group
        .factors()
        .iter()
        .zip(group.factor_ranges())
        .map(|(f, (a, b))| RootSystem::get(*f).weyl_dim(&weight.0[a..b]))
        .product()
}

/// Weight diagram of a simple-factor irreducible, memoized.
pub fn simple_diagram(factor: SimpleFactor, highest: &[i32]) -> Result<Arc<SimpleDiagram>> {
    let key = (factor, highest.to_vec());
    if let Some(d) = DIAGRAMS.read().expect("diagram cache poisoned").get(&key) {
        return Ok(d.clone());
    }
    let rs = RootSystem::get(factor);
    let dim = rs.weyl_dim(highest);
    if dim > dim_cap() as u128 {
        return Err(Error::DimensionCap { dim, cap: dim_cap() });
    }
    let d = Arc::new(freudenthal(&rs, highest)?);
    Ok(DIAGRAMS.write().expect("diagram cache poisoned").entry(key).or_insert(d).clone())
}

/// All weights of `V(λ)` (without multiplicities) together with their depth
/// below `λ`, found by walking simple-root strings downward.
fn weight_support(rs: &RootSystem, highest: &[i32]) -> HashMap<Vec<i32>, u32> {
    let mut level: HashMap<Vec<i32>, u32> = HashMap::new();
    let mut queue = VecDeque::new();
    level.insert(highest.to_vec(), 0);
    queue.push_back(highest.to_vec());
    while let Some(mu) = queue.pop_front() {
        let l = level[&mu];
        for i in 0..rs.rank() {
            let top = mu[i];
            let mut nu = mu.clone();
            for k in 1..=top.max(0) {
                for (x, a) in nu.iter_mut().zip(&rs.simple_roots[i]) {
                    *x -= a;
                }
                if !level.contains_key(&nu) {
                    level.insert(nu.clone(), l + k as u32);
                    queue.push_back(nu.clone());
                }
            }
        }
    }
    level
}

/// Freudenthal's recursion on dominant weights, extended to the full diagram by
/// Weyl symmetry. Exact integer arithmetic; every division is checked.
fn freudenthal(rs: &RootSystem, highest: &[i32]) -> Result<SimpleDiagram> {
    let support = weight_support(rs, highest);
    let rho = rs.rho();
    let shift = |mu: &[i32]| mu.iter().zip(&rho).map(|(a, b)| a + b).collect::<Vec<i32>>();
    let top = {
        let s = shift(highest);
        rs.inner(&s, &s)
    };

    let mut dominant: Vec<(&Vec<i32>, u32)> =
        support.iter().filter(|(w, _)| w.iter().all(|&x| x >= 0)).map(|(w, &l)| (w, l)).collect();
    dominant.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(b.0)));

    let mut mult: HashMap<Vec<i32>, u64> = HashMap::with_capacity(dominant.len());
    for (mu, _) in dominant {
        if mu.as_slice() == highest {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num: i64 = 0;
        for alpha in &rs.positive_roots {
            let mut nu: Vec<i32> = mu.iter().zip(alpha).map(|(a, b)| a + b).collect();
            while support.contains_key(&nu) {
                let m = *mult.get(&rs.to_dominant(&nu)).ok_or(Error::InexactDivision("Freudenthal ordering"))?;
                num += m as i64 * rs.inner(&nu, alpha);
                for (x, a) in nu.iter_mut().zip(alpha) {
                    *x += a;
                }
            }
        }
        num *= 2;
        let s = shift(mu);
        let den = top - rs.inner(&s, &s);
        if den <= 0 || num % den != 0 {
            return Err(Error::InexactDivision("Freudenthal recursion"));
        }
        mult.insert(mu.clone(), (num / den) as u64);
    }

    let mut out: SimpleDiagram = support
        .into_keys()
        .map(|w| {
            let m = mult[&rs.to_dominant(&w)];
            (w, m)
        })
        .filter(|(_, m)| *m > 0)
        .collect();
    out.sort();
    Ok(out)
}

/// Full weight diagram of an irreducible of a product group; Cartesian
/// product of the factor diagrams.
pub fn weight_multiplicities(label: &IrrepLabel) -> Result<BTreeMap<Weight, u64>> {
    label.group.check_dominant(&label.weight)?;
    let dim = weyl_dim_unchecked(&label.group, &label.weight);
    if dim > dim_cap() as u128 {
        return Err(Error::DimensionCap { dim, cap: dim_cap() });
    }
    let mut acc: Vec<(Vec<i32>, u64)> = vec![(Vec::new(), 1)];
    for (f, (a, b)) in label.group.factors().iter().zip(label.group.factor_ranges()) {
        let d = simple_diagram(*f, &label.weight.0[a..b])?;
        let mut next = Vec::with_capacity(acc.len() * d.len());
        for (prefix, m) in &acc {
            for (w, n) in d.iter() {
                let mut v = prefix.clone();
                v.extend_from_slice(w);
                next.push((v, m * n));
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(|(w, m)| (Weight(w), m)).collect())
}

/// Weyl orbit of a weight of a product group; contains exactly one dominant weight.
pub fn weyl_orbit(group: &GroupSpec, weight: &Weight) -> Result<Vec<Weight>> {
    group.check_weight(weight)?;
    let mut acc: Vec<Vec<i32>> = vec![Vec::new()];
    for (f, (a, b)) in group.factors().iter().zip(group.factor_ranges()) {
        let orbit = RootSystem::get(*f).orbit(&weight.0[a..b]);
        let mut next = Vec::with_capacity(acc.len() * orbit.len());
        for prefix in &acc {
            for w in &orbit {
                let mut v = prefix.clone();
                v.extend_from_slice(w);
                next.push(v);
            }
        }
        acc = next;
    }
    let mut out: Vec<Weight> = acc.into_iter().map(Weight).collect();
    out.sort();
    Ok(out)
}

/// Dominant representative of a weight of a product group.
pub fn to_dominant(group: &GroupSpec, weight: &Weight) -> Weight {
    let mut out = Vec::with_capacity(weight.0.len());
    for (f, (a, b)) in group.factors().iter().zip(group.factor_ranges()) {
        out.extend(RootSystem::get(*f).to_dominant(&weight.0[a..b]));
    }
    Weight(out)
}

/// `(μ, ρ)` summed over factors; a linear functional that strictly increases
/// along every positive root of the product.
pub fn height(group: &GroupSpec, weight: &Weight) -> i64 {
    group
        .factors()
        .iter()
        .zip(group.factor_ranges())
        .map(|(f, (a, b))| RootSystem::get(*f).height(&weight.0[a..b]))
        .sum()
}

/// A (virtual) character: integer multiplicity on each weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub group: GroupSpec,
    pub mults: HashMap<Weight, i64>,
}

impl Character {
    pub fn zero(group: GroupSpec) -> Self {
        Character { group, mults: HashMap::new() }
    }

    pub fn of_irrep(label: &IrrepLabel) -> Result<Self> {
        let mults = weight_multiplicities(label)?.into_iter().map(|(w, m)| (w, m as i64)).collect();
        Ok(Character { group: label.group.clone(), mults })
    }

    pub fn add_scaled(&mut self, other: &Character, k: i64) {
        for (w, m) in &other.mults {
            self.add_weight(w.clone(), k * m);
        }
    }

    pub fn add_weight(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.mults.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(m);
            }
        }
    }

    pub fn dim(&self) -> i64 {
        self.mults.values().sum()
    }

    /// Pointwise product of characters (tensor product).
    pub fn convolve(&self, other: &Character) -> Result<Character> {
        self.group.ensure_same(&other.group)?;
        let mut out: HashMap<Weight, i64> = HashMap::with_capacity(self.mults.len() * 2);
        for (w1, m1) in &self.mults {
            for (w2, m2) in &other.mults {
                *out.entry(w1.add(w2)).or_insert(0) += m1 * m2;
            }
        }
        out.retain(|_, m| *m != 0);
        Ok(Character { group: self.group.clone(), mults: out })
    }

    /// Adams operation on characters: every weight multiplied by `k`.
    pub fn scale_weights(&self, k: i32) -> Character {
        Character { group: self.group.clone(), mults: self.mults.iter().map(|(w, m)| (w.scale(k), *m)).collect() }
    }

    /// Checks that multiplicities are constant on Weyl orbits.
    pub fn is_weyl_invariant(&self) -> bool {
        self.mults.iter().all(|(w, m)| self.mults.get(&to_dominant(&self.group, w)) == Some(m))
    }
}

/// Dominant weights of an irreducible with their multiplicities.
pub fn dominant_weights(label: &IrrepLabel) -> Result<Vec<(Weight, u64)>> {
    let all = weight_multiplicities(label)?;
    Ok(all.into_iter().filter(|(w, _)| w.0.iter().all(|&x| x >= 0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(g: &str, w: &str) -> IrrepLabel {
        IrrepLabel::parse(g, w).unwrap()
    }

    #[test]
    fn trivial_and_standard_dims() {
        assert_eq!(weyl_dim(&label("Sp8", "0000")).unwrap(), 1);
        assert_eq!(weyl_dim(&label("Sp10", "10000")).unwrap(), 10);
        assert_eq!(weyl_dim(&label("Sp8", "0100")).unwrap(), 27);
        assert_eq!(weyl_dim(&label("Sp8", "0010")).unwrap(), 48);
        assert_eq!(weyl_dim(&label("Sp8", "0001")).unwrap(), 42);
        assert_eq!(weyl_dim(&label("Sp8xSp10", "0000|10000")).unwrap(), 10);
    }

    #[test]
    fn standard_rep_of_sp8_has_eight_weights() {
        let m = weight_multiplicities(&label("Sp8", "1000")).unwrap();
        assert_eq!(m.len(), 8);
        assert!(m.values().all(|&x| x == 1));
    }

    #[test]
    fn sp4_second_fundamental() {
        let m = weight_multiplicities(&label("Sp4", "01")).unwrap();
        assert_eq!(m.len(), 5);
        assert_eq!(m[&Weight(vec![0, 0])], 1);
        assert_eq!(m.values().sum::<u64>(), 5);
    }

    #[test]
    fn zero_weight_diagram() {
        for g in ["Sp8", "SL3", "SO7", "SO8", "Sp8xSp10"] {
            let group: GroupSpec = g.parse().unwrap();
            let m = weight_multiplicities(&IrrepLabel::trivial(group.clone())).unwrap();
            assert_eq!(m.len(), 1);
            assert_eq!(m[&group.zero_weight()], 1);
        }
    }

    #[test]
    fn adjoint_zero_weight_is_rank() {
        // zero-weight multiplicity of the adjoint representation equals the rank
        let cases = [("SL4", "101"), ("SO7", "010"), ("Sp8", "2000"), ("SO10", "01000")];
        for (g, w) in cases {
            let l = label(g, w);
            let m = weight_multiplicities(&l).unwrap();
            assert_eq!(m[&l.group.zero_weight()] as usize, l.group.rank(), "{g}");
        }
    }

    #[test]
    fn orbits() {
        let g: GroupSpec = "Sp8".parse().unwrap();
        assert_eq!(weyl_orbit(&g, &Weight(vec![1, 0, 0, 0])).unwrap().len(), 8);
        assert_eq!(weyl_orbit(&g, &g.zero_weight()).unwrap().len(), 1);
        let a1: GroupSpec = "SL2".parse().unwrap();
        assert_eq!(weyl_orbit(&a1, &Weight(vec![2])).unwrap(), vec![Weight(vec![-2]), Weight(vec![2])]);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let big = label("Sp10", "0.0.0.0.12");
        assert!(matches!(weight_multiplicities(&big), Err(Error::DimensionCap { .. })));
    }
}

//! Independent oracles, random generators and transcribed reference data
//! shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use thetacalc::graded::{expand, LefschetzPackage, Sign, SignedGradedRep, SlotKey};
use thetacalc::lie::{weight_multiplicities, Family, GroupSpec, IrrepLabel, RootSystem, SimpleFactor, Weight};
use thetacalc::nilfilt::{FiltrationResult, RationalMatrix};
use thetacalc::perv::{FiltrationDiagram, FormalObject, SimpleKind, Term};
use thetacalc::rep::VirtualRep;

pub fn rng(seed: u64) -> ChaCha8Rng {
    <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed)
}

// ---------------------------------------------------------------- groups

pub fn random_simple_group(r: &mut ChaCha8Rng, family: Option<Family>) -> GroupSpec {
    let family = family.unwrap_or_else(|| [Family::A, Family::B, Family::C, Family::D][r.gen_range(0..4)]);
    let rank = match family {
        Family::A => r.gen_range(1..=4),
        Family::B | Family::C => r.gen_range(2..=4),
        Family::D => r.gen_range(4..=5),
    };
    GroupSpec::simple(SimpleFactor::new(family, rank).unwrap())
}

/// A random irreducible of dimension at most `max_dim`.
pub fn random_irrep(r: &mut ChaCha8Rng, group: &GroupSpec, max_dim: u128) -> VirtualRep {
    loop {
        let w: Vec<i32> = (0..group.rank()).map(|_| if r.gen_bool(0.6) { 0 } else { r.gen_range(1..=2) }).collect();
        let label = IrrepLabel::new(group.clone(), Weight(w)).unwrap();
        if thetacalc::lie::weyl_dim(&label).unwrap() <= max_dim {
            return VirtualRep::irrep(&label);
        }
    }
}

// ---------------------------------------------------------------- characters

/// Weights of an irreducible listed with multiplicity, one entry per basis vector.
pub fn weight_list(v: &VirtualRep) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for (label, m) in v.labels() {
        assert!(m > 0, "weight lists need effective input");
        for (w, k) in weight_multiplicities(&label).unwrap() {
            for _ in 0..(k as i64 * m) {
                out.push(w.0.clone());
            }
        }
    }
    out
}

pub fn character_of(v: &VirtualRep) -> BTreeMap<Vec<i32>, i64> {
    let mut out = BTreeMap::new();
    for (label, m) in v.labels() {
        for (w, k) in weight_multiplicities(&label).unwrap() {
            *out.entry(w.0).or_insert(0) += k as i64 * m;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

fn add_weights(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Character of `Λ^k` (or `S^k`) by enumerating `k`-subsets (multisets) of
/// the weight basis.
pub fn brute_power_character(v: &VirtualRep, k: usize, alternating: bool) -> BTreeMap<Vec<i32>, i64> {
    let ws = weight_list(v);
    let mut out = BTreeMap::new();
    fn rec(
        ws: &[Vec<i32>],
        start: usize,
        left: usize,
        acc: Vec<i32>,
        alternating: bool,
        out: &mut BTreeMap<Vec<i32>, i64>,
    ) {
        if left == 0 {
            *out.entry(acc).or_insert(0) += 1;
            return;
        }
        for i in start..ws.len() {
            let next = if alternating { i + 1 } else { i };
            rec(ws, next, left - 1, add_weights(&acc, &ws[i]), alternating, out);
        }
    }
    let zero = vec![0; v.group().rank()];
    rec(&ws, 0, k, zero, alternating, &mut out);
    out
}

/// Brauer–Klimyk: `V_λ ⊗ V_μ = Σ_ν mult_μ(ν) ε(w) V_{w·(λ+ν)}` on a simple group.
pub fn klimyk_tensor(a: &IrrepLabel, b: &IrrepLabel) -> VirtualRep {
    let group = a.group.clone();
    assert_eq!(group.factors().len(), 1, "oracle handles simple groups only");
    let rs = RootSystem::get(group.factors()[0]);
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in weight_multiplicities(b).unwrap() {
        let shifted: Vec<i32> = a.weight.0.iter().zip(&nu.0).map(|(x, y)| x + y + 1).collect();
        let (dom, odd) = rs.to_dominant_with_sign(&shifted);
        if dom.contains(&0) {
            continue;
        }
        let lam = Weight(dom.iter().map(|x| x - 1).collect());
        *out.entry(lam).or_insert(0) += if odd { -(m as i64) } else { m as i64 };
    }
    VirtualRep::from_terms(group, out.into_iter().filter(|(_, m)| *m != 0)).unwrap()
}

// ---------------------------------------------------------------- graded

pub fn random_signed_graded(r: &mut ChaCha8Rng, group: &GroupSpec, max_dim: u128) -> SignedGradedRep {
    let mut h = SignedGradedRep::zero(group.clone());
    for _ in 0..r.gen_range(1..=3) {
        let v = random_irrep(r, group, max_dim);
        let sign = if r.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let key = SlotKey::twisted(r.gen_range(-2..=2), sign, r.gen_range(-1..=0));
        h.add_at(key, &v, r.gen_range(1..=2)).unwrap();
    }
    h
}

/// A Lefschetz-monotone input: a random sum of packages.
pub fn random_packages(r: &mut ChaCha8Rng, group: &GroupSpec) -> (Vec<LefschetzPackage>, SignedGradedRep) {
    let pkgs: Vec<LefschetzPackage> = (0..r.gen_range(1..=4))
        .map(|_| {
            let v = random_irrep(r, group, 200).scale(r.gen_range(1..=3));
            let sign = if r.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            LefschetzPackage::new(v, sign, r.gen_range(0..=4))
        })
        .collect();
    let h = expand(group, &pkgs).unwrap();
    (pkgs, h)
}

// ---------------------------------------------------------------- nilfilt

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for k in 0..b.len() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect()
}

/// Row-reduces in place and returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Dimension of the span, inserting vectors one at a time into a reduced
/// echelon basis.
fn span_dim(vectors: &[Vec<BigRational>]) -> usize {
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { continue };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, b) in basis.iter_mut() {
            if !b[p].is_zero() {
                let f = b[p].clone();
                for (x, y) in b.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        basis.push((p, v));
    }
    basis.len()
}

/// Basis of the kernel of `a` (as column vectors written as rows).
fn kernel(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.first().map_or(0, Vec::len);
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

fn apply(a: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn inverse(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().zip(identity(n)).map(|(row, id)| row.iter().cloned().chain(id).collect()).collect();
    let pivots = rref(&mut m);
    assert_eq!(pivots.len(), n, "matrix is singular");
    assert!(pivots.iter().enumerate().all(|(i, &p)| i == p), "matrix is singular");
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Monodromy filtration from subspaces,
/// `M_k = Σ_{j ≥ max(0,−k)} N^j(ker N^{k+2j+1})`, with primitive parts
/// read off `ker N ∩ M_k`.
pub fn subspace_filtration(m: &RationalMatrix) -> FiltrationResult {
    let n = m.dim();
    let a: Vec<Vec<BigRational>> = m.rows().to_vec();
    // N^e = 0 for e ≥ n, so exponents past n repeat the last entry
    let mut powers = vec![identity(n)];
    for _ in 0..n {
        let next = mat_mul(powers.last().unwrap(), &a);
        powers.push(next);
    }
    let kernels: Vec<Vec<Vec<BigRational>>> = powers.iter().map(|p| kernel(p)).collect();
    let at = |k: usize| k.min(n);
    // N^j(ker N^e), shared between levels
    let mut images: BTreeMap<(usize, usize), Vec<Vec<BigRational>>> = BTreeMap::new();
    let mut level = |k: i32| -> Vec<Vec<BigRational>> {
        let mut vecs = Vec::new();
        for j in 0i32.max(-k)..=n as i32 {
            let e = k + 2 * j + 1;
            if e <= 0 {
                continue;
            }
            let key = (at(j as usize), at(e as usize));
            let img = images
                .entry(key)
                .or_insert_with(|| kernels[key.1].iter().map(|v| apply(&powers[key.0], v)).collect());
            vecs.extend(img.iter().cloned());
        }
        vecs
    };
    let ker_n = &kernels[at(1)];
    let bound = n as i32 + 1;
    let mut dims = BTreeMap::new();
    let mut ker_dims = BTreeMap::new();
    for k in -bound..=bound {
        let mk = level(k);
        let d = span_dim(&mk);
        let both: Vec<Vec<BigRational>> = mk.iter().chain(ker_n).cloned().collect();
        dims.insert(k, d);
        ker_dims.insert(k, d + ker_n.len() - span_dim(&both));
    }
    let mut f = FiltrationResult { dim: n, ..Default::default() };
    for k in -bound + 1..=bound {
        let g = dims[&k] - dims[&(k - 1)];
        if g > 0 {
            f.gr.insert(k, g);
        }
        let p = ker_dims[&k] - ker_dims[&(k - 1)];
        if p > 0 {
            f.primitive.insert(k, p);
        }
    }
    f
}

/// Random partition of `n` into Jordan block sizes.
pub fn random_partition(r: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut left = n;
    let mut parts = Vec::new();
    while left > 0 {
        let s = r.gen_range(1..=left);
        parts.push(s);
        left -= s;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// `P⁻¹ J P` for the Jordan matrix `J` of `blocks` and a random invertible
/// `P = L·U` with small rational entries.
pub fn random_nilpotent(r: &mut ChaCha8Rng, blocks: &[usize]) -> RationalMatrix {
    let n: usize = blocks.iter().sum();
    let mut j = vec![vec![BigRational::zero(); n]; n];
    let mut start = 0;
    for &s in blocks {
        for k in 1..s {
            j[start + k - 1][start + k] = BigRational::one();
        }
        start += s;
    }
    let mut l = identity(n);
    let mut u = identity(n);
    for i in 0..n {
        for k in 0..n {
            if r.gen_bool(0.4) {
                let x = rat(r.gen_range(-3..=3), r.gen_range(1..=3));
                if k < i {
                    l[i][k] = x;
                } else if k > i {
                    u[i][k] = x;
                }
            }
        }
    }
    let p = mat_mul(&l, &u);
    let conj = mat_mul(&mat_mul(&inverse(&p), &j), &p);
    RationalMatrix::new(conj).unwrap()
}

// ---------------------------------------------------------------- transcriptions

pub type Row = (u32, Option<Sign>, &'static str, i64);

/// Table 1 as published, δ_+ column. `S²(B)` is `(0000|20000)` and
/// `Λ²(B)` is `(0000|01000) ⊕ (0000|00000)`; σ acts trivially on `B`.
pub fn published_table1_plus() -> Vec<Row> {
    use Sign::*;
    vec![
        (3, Some(Plus), "0000|10000", 1),
        (3, Some(Minus), "0010|00000", 1),
        (2, Some(Minus), "1000|10000", 1),
        (2, Some(Plus), "1010|00000", 1),
        (2, Some(Plus), "0100|00000", 1),
        (1, Some(Plus), "0100|10000", 1),
        (1, Some(Minus), "1100|00000", 1),
        (1, Some(Minus), "1000|00000", 2),
        (1, Some(Minus), "0110|00000", 1),
        (0, Some(Plus), "0000|20000", 1),
        (0, Some(Minus), "0010|10000", 1),
        (0, Some(Plus), "2000|00000", 2),
        (0, Some(Plus), "0200|00000", 1),
        (0, Some(Plus), "0020|00000", 1),
        (0, Some(Plus), "0000|00000", 1),
    ]
}

pub fn published_table1_minus() -> Vec<Row> {
    use Sign::*;
    vec![
        (3, Some(Plus), "0000|10000", 1),
        (2, Some(Minus), "1000|10000", 1),
        (2, Some(Plus), "0100|00000", 1),
        (1, Some(Plus), "0100|10000", 1),
        (1, Some(Minus), "1100|00000", 1),
        (1, Some(Minus), "1000|00000", 1),
        // Λ²(B)
        (0, Some(Plus), "0000|01000", 1),
        (0, Some(Plus), "0000|00000", 1),
        (0, Some(Minus), "0010|10000", 1),
        (0, Some(Plus), "2000|00000", 1),
        (0, Some(Plus), "0200|00000", 1),
        (0, Some(Plus), "0000|00000", 1),
    ]
}

pub fn published_table2() -> Vec<(&'static str, Vec<Row>)> {
    vec![
        (
            "delta_5_1",
            vec![
                (2, None, "0000", 1),
                (1, None, "1000", 2),
                (0, None, "2000", 1),
                (0, None, "0100", 1),
                (0, None, "0000", 1),
            ],
        ),
        (
            "delta_4_2",
            vec![
                (3, None, "1000", 1),
                (2, None, "2000", 1),
                (2, None, "0100", 2),
                (2, None, "0000", 3),
                (1, None, "1100", 2),
                (1, None, "1000", 4),
                (1, None, "0010", 1),
                (0, None, "2000", 1),
                (0, None, "1010", 1),
                (0, None, "0200", 1),
                (0, None, "0100", 3),
                (0, None, "0000", 2),
            ],
        ),
        (
            "delta_3_3",
            vec![
                (3, None, "1000", 1),
                (3, None, "0010", 1),
                (2, None, "2000", 1),
                (2, None, "1010", 1),
                (2, None, "0100", 2),
                (2, None, "0000", 1),
                (1, None, "1100", 2),
                (1, None, "1000", 3),
                (1, None, "0110", 1),
                (1, None, "0010", 1),
                (0, None, "2000", 2),
                (0, None, "1010", 1),
                (0, None, "0200", 1),
                (0, None, "0100", 1),
                (0, None, "0020", 1),
                (0, None, "0000", 2),
            ],
        ),
    ]
}

/// Normalizes a row list: merges repeats, keyed by (level, sign, weight).
pub fn row_map(rows: &[Row]) -> BTreeMap<(u32, Option<Sign>, String), i64> {
    let mut out = BTreeMap::new();
    for (l, s, w, m) in rows {
        *out.entry((*l, *s, w.to_string())).or_insert(0) += m;
    }
    out
}

pub fn rows_to_graded(group: &str, rows: &[Row]) -> SignedGradedRep {
    let g: GroupSpec = group.parse().unwrap();
    let pkgs: Vec<LefschetzPackage> = rows
        .iter()
        .map(|(l, s, w, m)| {
            LefschetzPackage::new(VirtualRep::parse_irrep(group, w).unwrap().scale(*m), s.unwrap_or(Sign::Plus), *l)
        })
        .collect();
    expand(&g, &pkgs).unwrap()
}

/// Describes every cell where two row maps disagree.
pub fn row_diff(
    expected: &BTreeMap<(u32, Option<Sign>, String), i64>,
    actual: &BTreeMap<(u32, Option<Sign>, String), i64>,
) -> Vec<String> {
    let mut keys: Vec<_> = expected.keys().chain(actual.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let (e, a) = (expected.get(&k).copied().unwrap_or(0), actual.get(&k).copied().unwrap_or(0));
            (e != a).then(|| {
                let sign = k.1.map(|s| s.to_string()).unwrap_or_default();
                format!("[{}]_t ({}){sign}: expected {e}, computed {a}", k.0, k.2)
            })
        })
        .collect()
}

fn obj(terms: &[(SimpleKind, i32)]) -> FormalObject {
    FormalObject::from_terms(terms.iter().map(|&(k, t)| (Term::twisted(k, t), 1)))
}

fn theta_times_e(t: i32) -> FormalObject {
    FormalObject::from_terms([(Term::product(vec![SimpleKind::DeltaThetaS, SimpleKind::SkyPmE], t), 1)])
}

/// The three published monodromy diagrams: `Ψ₁(δ)`, `Ψ₁(δ_+)`, `Ψ₁(δ_−)`.
pub fn published_diagrams() -> [FiltrationDiagram; 3] {
    use SimpleKind::*;
    let mut psi = FiltrationDiagram::new(3);
    psi.add_to_row(1, &obj(&[(SkyPmE, -2)]));
    psi.add_to_row(0, &obj(&[(DeltaThetaS, 0)]));
    psi.add_to_row(-1, &obj(&[(SkyPmE, -1)]));

    let mut plus = FiltrationDiagram::new(6);
    plus.add_to_row(2, &obj(&[(SkyPm2E, -4), (SkySigmaPlus, -4)]));
    plus.add_to_row(1, &theta_times_e(-2));
    plus.add_to_row(
        0,
        &obj(&[(DeltaAB(3, 3), 0), (DeltaAB(5, 1), 0), (SkySigmaMinus, -3), (SkyPm2E, -3), (SkySigmaPlus, -3)]),
    );
    plus.add_to_row(-1, &theta_times_e(-1));
    plus.add_to_row(-2, &obj(&[(SkyPm2E, -2), (SkySigmaPlus, -2)]));

    let mut minus = FiltrationDiagram::new(6);
    minus.add_to_row(2, &obj(&[(SkySigmaMinus, -4)]));
    minus.add_to_row(1, &theta_times_e(-2));
    minus.add_to_row(0, &obj(&[(DeltaAB(4, 2), 0), (SkyPm2E, -3), (SkySigmaPlus, -3), (SkySigmaMinus, -3)]));
    minus.add_to_row(-1, &theta_times_e(-1));
    minus.add_to_row(-2, &obj(&[(SkySigmaMinus, -2)]));
    [psi, plus, minus]
}

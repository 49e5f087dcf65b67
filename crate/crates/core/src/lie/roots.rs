use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, LazyLock, RwLock};

use num_rational::Ratio;

use super::group::{Family, SimpleFactor};

/// Root datum of one simple factor, everything expressed in Dynkin labels.
///
/// `form` is an integer multiple of the invariant inner product on the
/// fundamental-weight basis; every formula that uses it is a ratio, so the
/// scale drops out.
#[derive(Debug)]
pub struct RootSystem {
    pub factor: SimpleFactor,
    /// Row `i` is the simple root `α_i` in Dynkin labels.
    pub simple_roots: Vec<Vec<i32>>,
    pub positive_roots: Vec<Vec<i32>>,
    pub form: Vec<Vec<i64>>,
    /// `(ω_i, ρ)` in the scaled form; strictly positive.
    pub height_coeffs: Vec<i64>,
}

static ROOT_SYSTEMS: LazyLock<RwLock<HashMap<SimpleFactor, Arc<RootSystem>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

impl RootSystem {
    pub fn get(factor: SimpleFactor) -> Arc<RootSystem> {
        if let Some(rs) = ROOT_SYSTEMS.read().expect("root cache poisoned").get(&factor) {
            return rs.clone();
        }
        let rs = Arc::new(RootSystem::build(factor));
        ROOT_SYSTEMS.write().expect("root cache poisoned").entry(factor).or_insert(rs).clone()
    }

    fn build(factor: SimpleFactor) -> RootSystem {
        let n = factor.rank;
        let (simple_eps, omega_eps) = epsilon_data(factor);
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();

        // α_i in Dynkin labels: <α_i, α_j^∨> = 2(α_i, α_j) / (α_j, α_j).
        let simple_roots: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let num = 2 * dot(&simple_eps[i], &simple_eps[j]);
                        let den = dot(&simple_eps[j], &simple_eps[j]);
                        debug_assert_eq!(num % den, 0);
                        (num / den) as i32
                    })
                    .collect()
            })
            .collect();
        let form: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| dot(&omega_eps[i], &omega_eps[j])).collect()).collect();
        let height_coeffs: Vec<i64> = form.iter().map(|row| row.iter().sum()).collect();

        let mut rs = RootSystem { factor, simple_roots, positive_roots: Vec::new(), form, height_coeffs };
        // Every root is W-conjugate to a simple root.
        let mut roots: HashSet<Vec<i32>> = HashSet::new();
        for a in rs.simple_roots.clone() {
            roots.extend(rs.orbit(&a));
        }
        let mut positive: Vec<Vec<i32>> = roots.into_iter().filter(|r| rs.height(r) > 0).collect();
        positive.sort();
        rs.positive_roots = positive;
        rs
    }

    pub fn rank(&self) -> usize {
        self.factor.rank
    }

    pub fn inner(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut s = 0i64;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = &self.form[i];
            let mut t = 0i64;
            for (j, &y) in b.iter().enumerate() {
                t += row[j] * y as i64;
            }
            s += x as i64 * t;
        }
        s
    }

    /// `(μ, ρ)`, strictly increasing along positive roots.
    pub fn height(&self, mu: &[i32]) -> i64 {
        mu.iter().zip(&self.height_coeffs).map(|(&m, &h)| m as i64 * h).sum()
    }

    pub fn rho(&self) -> Vec<i32> {
        vec![1; self.rank()]
    }

    /// Simple reflection `s_i(μ) = μ − <μ, α_i^∨> α_i`.
    pub fn reflect(&self, mu: &mut [i32], i: usize) {
        let c = mu[i];
        if c != 0 {
            for (m, a) in mu.iter_mut().zip(&self.simple_roots[i]) {
                *m -= c * a;
            }
        }
    }

    /// Dominant representative of the Weyl orbit of `mu`.
    pub fn to_dominant(&self, mu: &[i32]) -> Vec<i32> {
        let mut v = mu.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    /// Dominant representative together with the parity of the reflection count.
    pub fn to_dominant_with_sign(&self, mu: &[i32]) -> (Vec<i32>, bool) {
        let mut v = mu.to_vec();
        let mut odd = false;
        while let Some(i) = v.iter().position(|&x| x < 0) {
            self.reflect(&mut v, i);
            odd = !odd;
        }
        (v, odd)
    }

    /// Full Weyl orbit of `mu`.
    pub fn orbit(&self, mu: &[i32]) -> Vec<Vec<i32>> {
        let start = self.to_dominant(mu);
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                if v[i] > 0 {
                    let mut w = v.clone();
                    self.reflect(&mut w, i);
                    if seen.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(v);
        }
        out
    }

    /// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
    pub fn weyl_dim(&self, lambda: &[i32]) -> u128 {
        let rho = self.rho();
        let shifted: Vec<i32> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let mut acc = Ratio::<i128>::from_integer(1);
        for alpha in &self.positive_roots {
            let num = self.inner(&shifted, alpha) as i128;
            let den = self.inner(&rho, alpha) as i128;
            acc *= Ratio::new(num, den);
        }
        debug_assert!(acc.is_integer());
        acc.to_integer() as u128
    }
}

/// Simple roots and (scaled) fundamental weights in orthonormal ε-coordinates.
fn epsilon_data(factor: SimpleFactor) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = factor.rank;
    let unit = |len: usize, i: usize| {
        let mut v = vec![0i64; len];
        v[i] = 1;
        v
    };
    let diff = |len: usize, i: usize, j: usize| {
        let mut v = vec![0i64; len];
        v[i] = 1;
        v[j] -= 1;
        v
    };
    match factor.family {
        Family::A => {
            let len = n + 1;
            let simple = (0..n).map(|i| diff(len, i, i + 1)).collect();
            // (n+1)·ω_k, projected orthogonally to (1, …, 1).
            let omega = (1..=n)
                .map(|k| (0..len).map(|i| if i < k { (n + 1 - k) as i64 } else { -(k as i64) }).collect())
                .collect();
            (simple, omega)
        }
        Family::B => {
            let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            simple.push(unit(n, n - 1));
            let mut omega: Vec<Vec<i64>> =
                (1..n).map(|k| (0..n).map(|i| if i < k { 2 } else { 0 }).collect()).collect();
            omega.push(vec![1; n]);
            (simple, omega)
        }
        Family::C => {
            let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![0; n];
            last[n - 1] = 2;
            simple.push(last);
            let omega = (1..=n).map(|k| (0..n).map(|i| if i < k { 1 } else { 0 }).collect()).collect();
            (simple, omega)
        }
        Family::D => {
            let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![0; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            simple.push(last);
            let mut omega: Vec<Vec<i64>> =
                (1..n - 1).map(|k| (0..n).map(|i| if i < k { 2 } else { 0 }).collect()).collect();
            let mut minus = vec![1; n];
            minus[n - 1] = -1;
            omega.push(minus);
            omega.push(vec![1; n]);
            (simple, omega)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: Family, rank: usize) -> Arc<RootSystem> {
        RootSystem::get(SimpleFactor::new(family, rank).unwrap())
    }

    #[test]
    fn cartan_matrix_of_c4() {
        let c4 = rs(Family::C, 4);
        assert_eq!(c4.simple_roots[0], vec![2, -1, 0, 0]);
        assert_eq!(c4.simple_roots[2], vec![0, -1, 2, -1]);
        assert_eq!(c4.simple_roots[3], vec![0, 0, -2, 2]);
    }

    #[test]
    fn positive_root_counts() {
        // |Φ⁺| = n(n+1)/2, n², n², n(n−1) for A, B, C, D.
        for n in 1..=6 {
            assert_eq!(rs(Family::A, n).positive_roots.len(), n * (n + 1) / 2);
            assert_eq!(rs(Family::B, n).positive_roots.len(), n * n);
            assert_eq!(rs(Family::C, n).positive_roots.len(), n * n);
        }
        for n in 2..=6 {
            assert_eq!(rs(Family::D, n).positive_roots.len(), n * (n - 1));
        }
    }

    #[test]
    fn weyl_group_orders_via_regular_orbit() {
        // The orbit of ρ is regular, so its size is |W|.
        assert_eq!(rs(Family::A, 3).orbit(&[1, 1, 1]).len(), 24);
        assert_eq!(rs(Family::B, 3).orbit(&[1, 1, 1]).len(), 48);
        assert_eq!(rs(Family::C, 4).orbit(&[1, 1, 1, 1]).len(), 384);
        assert_eq!(rs(Family::D, 4).orbit(&[1, 1, 1, 1]).len(), 192);
    }

    #[test]
    fn defining_dimensions() {
        for (fam, n) in [(Family::A, 4), (Family::B, 3), (Family::C, 5), (Family::D, 4)] {
            let f = SimpleFactor::new(fam, n).unwrap();
            assert_eq!(RootSystem::get(f).weyl_dim(&f.standard_weight()), f.defining_dim() as u128);
        }
        // spin representations
        assert_eq!(rs(Family::B, 4).weyl_dim(&[0, 0, 0, 1]), 16);
        assert_eq!(rs(Family::D, 5).weyl_dim(&[0, 0, 0, 1, 0]), 16);
    }
}

use std::collections::BTreeMap;
use std::fmt::Write;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

/// A nilpotent endomorphism of `ℚ^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentOperator {
    matrix: RationalMatrix,
}

impl NilpotentOperator {
    /// Fails with [`Error::NotNilpotent`] unless `m^n = 0`.
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        let n = matrix.dim();
        let mut p = RationalMatrix::identity(n);
        for _ in 0..n {
            p = p.mul(&matrix);
            if p.is_zero() {
                break;
            }
        }
        if !p.is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(NilpotentOperator { matrix })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        NilpotentOperator::new(RationalMatrix::from_json(text)?)
    }

    /// Direct sum of Jordan blocks of the given sizes (zeros are skipped).
    pub fn from_blocks(sizes: &[usize]) -> Self {
        let n = sizes.iter().sum();
        let mut m = RationalMatrix::zero(n);
        let mut start = 0;
        for &s in sizes {
            for k in 1..s {
                m.set(start + k - 1, start + k, BigRational::one());
            }
            start += s;
        }
        NilpotentOperator { matrix: m }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `rank(N^k)` for `k = 0, 1, …` up to and including the first zero.
    pub fn power_ranks(&self) -> Vec<usize> {
        let n = self.dim();
        let mut ranks = vec![n];
        let mut p = RationalMatrix::identity(n);
        while *ranks.last().expect("non-empty") > 0 {
            p = p.mul(&self.matrix);
            ranks.push(p.rank());
        }
        ranks
    }

    /// Jordan block sizes, descending.
    pub fn block_sizes(&self) -> Vec<usize> {
        let r = self.power_ranks();
        let at = |k: usize| r.get(k).copied().unwrap_or(0);
        let mut sizes = Vec::new();
        for s in 1..r.len() {
            // blocks of size ≥ s minus blocks of size ≥ s+1
            let count = (at(s - 1) - at(s)) - (at(s) - at(s + 1));
            sizes.extend(std::iter::repeat_n(s, count));
        }
        sizes.reverse();
        sizes
    }
}

/// Dimensions of `Gr_i` and of the primitive parts `P_{−i}`, `i ≥ 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationResult {
    pub dim: usize,
    pub gr: BTreeMap<i32, usize>,
    pub primitive: BTreeMap<i32, usize>,
}

impl FiltrationResult {
    /// A block of size `s` contributes to `Gr_{s−1}, Gr_{s−3}, …, Gr_{1−s}`
    /// and to `P_{1−s}`.
    pub fn from_block_sizes(sizes: &[usize]) -> Self {
        let mut f = FiltrationResult::default();
        for &s in sizes.iter().filter(|&&s| s > 0) {
            let top = s as i32 - 1;
            for i in (-top..=top).step_by(2) {
                *f.gr.entry(i).or_insert(0) += 1;
            }
            *f.primitive.entry(-top).or_insert(0) += 1;
            f.dim += s;
        }
        f
    }

    pub fn gr(&self, i: i32) -> usize {
        self.gr.get(&i).copied().unwrap_or(0)
    }

    pub fn primitive(&self, i: i32) -> usize {
        self.primitive.get(&i).copied().unwrap_or(0)
    }

    pub fn top(&self) -> i32 {
        self.gr.keys().map(|i| i.abs()).max().unwrap_or(0)
    }

    /// `dim Gr_i = dim Gr_{−i}` and `dim Gr_{−i} = Σ_k dim P_{−i−2k}`.
    pub fn check(&self) -> Result<()> {
        let top = self.top();
        for i in 0..=top {
            if self.gr(i) != self.gr(-i) {
                return Err(Error::Asymmetric(i));
            }
            let s: usize = (0..).map(|k| -i - 2 * k).take_while(|&j| j >= -top).map(|j| self.primitive(j)).sum();
            if s != self.gr(-i) {
                return Err(Error::InvalidArgument(format!("Gr_{} has dimension {} but its primitives sum to {s}", -i, self.gr(-i))));
            }
        }
        if self.primitive.keys().any(|&i| i > 0) {
            return Err(Error::InvalidArgument("primitive part in positive degree".into()));
        }
        if self.gr.values().sum::<usize>() != self.dim {
            return Err(Error::InvalidArgument("graded pieces do not add up to the dimension".into()));
        }
        Ok(())
    }

    /// `rank(N^k) = Σ_i dim Gr_i` over the pieces `N^k` does not kill:
    /// each primitive `P_{−c}` spans a block of size `c+1`.
    pub fn rank_of_power(&self, k: usize) -> usize {
        self.primitive.iter().map(|(&c, &m)| m * ((-c) as usize + 1).saturating_sub(k)).sum()
    }
}

/// Monodromy filtration from the Jordan type of `N`.
pub fn monodromy_filtration(n: &NilpotentOperator) -> FiltrationResult {
    FiltrationResult::from_block_sizes(&n.block_sizes())
}

fn fmt_twist(k: i32) -> String {
    match k {
        0 => String::new(),
        k if k > 0 => format!("(−{k})"),
        k => format!("({})", -k),
    }
}

/// Triangle of primitive dimensions: the row `Gr_i` (weight `w+i`) shows
/// `P_{−c}(−k)` with `i = 2k − c` for each column `c`. Zero rows are skipped.
pub fn triangle_render(f: &FiltrationResult, w: i32) -> String {
    if f.dim == 0 {
        return String::new();
    }
    let top = f.top();
    let cols: Vec<i32> = f.primitive.keys().rev().map(|c| -c).collect();
    let grid: Vec<(i32, Vec<String>)> = (-top..=top)
        .rev()
        .filter(|&i| f.gr(i) > 0)
        .map(|i| {
            let cells = cols
                .iter()
                .map(|&c| {
                    if i.abs() <= c && (i + c) % 2 == 0 {
                        let k = (i + c) / 2;
                        format!("P_{}{}:{}", -c, fmt_twist(k), f.primitive(-c))
                    } else {
                        String::new()
                    }
                })
                .collect();
            (i, cells)
        })
        .collect();
    let widths: Vec<usize> =
        (0..cols.len()).map(|j| grid.iter().map(|(_, r)| r[j].chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for (i, cells) in &grid {
        let _ = write!(s, "w={:<2} Gr_{:<3}|", w + i, i);
        for (j, c) in cells.iter().enumerate() {
            let _ = write!(s, " {c}{} |", " ".repeat(widths[j] - c.chars().count()));
        }
        let _ = writeln!(s, " dim {}", f.gr(*i));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_operator() {
        let f = monodromy_filtration(&NilpotentOperator::from_blocks(&[1, 1, 1, 1, 1]));
        assert_eq!(f.gr(0), 5);
        assert_eq!(f.primitive(0), 5);
        f.check().unwrap();
    }

    #[test]
    fn block_sizes_three_and_one() {
        let f = monodromy_filtration(&NilpotentOperator::from_blocks(&[3, 1]));
        assert_eq!((f.gr(2), f.gr(0), f.gr(-2)), (1, 2, 1));
        assert_eq!((f.primitive(-2), f.primitive(0)), (1, 1));
        assert_eq!(f.gr(1), 0);
    }

    #[test]
    fn single_block_of_two() {
        let f = monodromy_filtration(&NilpotentOperator::from_blocks(&[2]));
        assert_eq!((f.gr(1), f.gr(-1), f.primitive(-1)), (1, 1, 1));
    }

    #[test]
    fn not_nilpotent() {
        let m = RationalMatrix::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(NilpotentOperator::new(m), Err(Error::NotNilpotent));
    }

    #[test]
    fn render_shapes() {
        assert_eq!(triangle_render(&FiltrationResult::default(), 0), "");
        let t = triangle_render(&FiltrationResult::from_block_sizes(&[3]), 0);
        assert_eq!(t.lines().count(), 3);
        assert!(t.lines().next().unwrap().contains("P_-2(−2):1"));
    }
}

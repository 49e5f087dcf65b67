use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Square matrix over ℚ, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    rows: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::InvalidArgument(format!("row {r} has {} entries, expected {n}", row.len())));
        }
        Ok(RationalMatrix { n, rows })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        RationalMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        RationalMatrix { n, rows: vec![vec![BigRational::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n);
        for i in 0..n {
            m.rows[i][i] = BigRational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.rows[i][j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = RationalMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    if !other.rows[k][j].is_zero() {
                        out.rows[i][j] += a * &other.rows[k][j];
                    }
                }
            }
        }
        out
    }

    /// `P⁻¹ M P`, with `P` given together with its inverse.
    pub fn conjugate(&self, p: &RationalMatrix, p_inv: &RationalMatrix) -> RationalMatrix {
        p_inv.mul(self).mul(p)
    }

    /// Rank by fraction-free (Bareiss) elimination after clearing
    /// denominators row by row.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let cols = self.n;
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][c].clone();
            for r in rank + 1..a.len() {
                for j in c + 1..cols {
                    let v = &pivot * &a[r][j] - &a[r][c] * &a[rank][j];
                    a[r][j] = v / &prev;
                }
                a[r][c] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Parses a JSON array of rows whose entries are `"p/q"` strings or integers.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse { pos: e.column(), msg: format!("line {}: {e}", e.line()) })?;
        let Value::Array(rows) = v else {
            return Err(Error::Parse { pos: 0, msg: "expected an array of rows".into() });
        };
        let n = rows.len();
        let mut out = Vec::with_capacity(n);
        for (r, row) in rows.iter().enumerate() {
            let Value::Array(entries) = row else {
                return Err(Error::Parse { pos: r * n, msg: format!("row {r} is not an array") });
            };
            let mut parsed = Vec::with_capacity(entries.len());
            for (c, e) in entries.iter().enumerate() {
                let pos = r * n + c;
                let q = match e {
                    Value::String(s) => s
                        .trim()
                        .parse::<BigRational>()
                        .map_err(|err| Error::Parse { pos, msg: format!("row {r}, column {c}: {s:?}: {err}") })?,
                    Value::Number(x) if x.is_i64() => BigRational::from_integer(x.as_i64().unwrap_or(0).into()),
                    other => {
                        return Err(Error::Parse { pos, msg: format!("row {r}, column {c}: expected \"p/q\", got {other}") })
                    }
                };
                parsed.push(q);
            }
            out.push(parsed);
        }
        RationalMatrix::new(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let m = RationalMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        assert_eq!(RationalMatrix::zero(3).rank(), 0);
    }

    #[test]
    fn json_round_trip() {
        let m = RationalMatrix::from_json(r#"[["0","1/2"],["0", 0]]"#).unwrap();
        assert_eq!(m.get(0, 1), &BigRational::new(1.into(), 2.into()));
        assert_eq!(RationalMatrix::from_json(&m.to_json().to_string()).unwrap(), m);
        assert!(matches!(RationalMatrix::from_json(r#"[["1/0"]]"#), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(RationalMatrix::from_json(r#"[["1","x"],["0","0"]]"#), Err(Error::Parse { pos: 1, .. })));
    }
}

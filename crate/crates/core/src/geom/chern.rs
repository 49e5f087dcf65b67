use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Polynomial in the theta class `h` on a `g`-dimensional ppav, truncated
/// above degree `g`. Evaluation uses `deg_X(h^g) = g!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernEvaluation {
    g: usize,
    coeffs: Vec<BigRational>,
}

impl ChernEvaluation {
    pub fn new(g: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut c: Vec<BigRational> = coeffs.into_iter().take(g + 1).collect();
        c.resize(g + 1, BigRational::zero());
        ChernEvaluation { g, coeffs: c }
    }

    pub fn constant(g: usize, c: i64) -> Self {
        ChernEvaluation::new(g, [BigRational::from_integer(c.into())])
    }

    pub fn one(g: usize) -> Self {
        ChernEvaluation::constant(g, 1)
    }

    /// The class `h = c₁(L)`.
    pub fn h(g: usize) -> Self {
        ChernEvaluation::new(g, [BigRational::zero(), BigRational::one()])
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree-`k` part, `c_k`.
    pub fn part(&self, k: usize) -> ChernEvaluation {
        let mut c = vec![BigRational::zero(); self.g + 1];
        if k <= self.g {
            c[k] = self.coeffs[k].clone();
        }
        ChernEvaluation { g: self.g, coeffs: c }
    }

    pub fn scale(&self, s: &BigRational) -> ChernEvaluation {
        ChernEvaluation { g: self.g, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Multiplicative inverse as a truncated power series.
    pub fn inverse(&self) -> Result<ChernEvaluation> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::InvalidArgument("class with zero constant term is not invertible".into()));
        }
        let mut inv = vec![BigRational::zero(); self.g + 1];
        inv[0] = c0.recip();
        for k in 1..=self.g {
            let mut s = BigRational::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -s / c0;
        }
        Ok(ChernEvaluation { g: self.g, coeffs: inv })
    }

    pub fn pow(&self, e: i32) -> Result<ChernEvaluation> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = ChernEvaluation::one(self.g);
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// `deg_X` of the top-degree part.
    pub fn degree(&self) -> BigRational {
        &self.coeffs[self.g] * BigRational::from_integer(factorial(self.g))
    }

    /// Degree on a complete intersection of `c` divisors in the class `h`.
    pub fn degree_on(&self, c: usize) -> BigRational {
        (self * &ChernEvaluation::h(self.g).pow(c as i32).expect("non-negative power")).degree()
    }
}

impl Mul for &ChernEvaluation {
    type Output = ChernEvaluation;
    fn mul(self, rhs: &ChernEvaluation) -> ChernEvaluation {
        assert_eq!(self.g, rhs.g, "classes live on different ppav's");
        let mut c = vec![BigRational::zero(); self.g + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(self.g + 1 - i) {
                c[i + j] += a * b;
            }
        }
        ChernEvaluation { g: self.g, coeffs: c }
    }
}

impl Add for &ChernEvaluation {
    type Output = ChernEvaluation;
    fn add(self, rhs: &ChernEvaluation) -> ChernEvaluation {
        assert_eq!(self.g, rhs.g, "classes live on different ppav's");
        ChernEvaluation { g: self.g, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Neg for &ChernEvaluation {
    type Output = ChernEvaluation;
    fn neg(self) -> ChernEvaluation {
        ChernEvaluation { g: self.g, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Sub for &ChernEvaluation {
    type Output = ChernEvaluation;
    fn sub(self, rhs: &ChernEvaluation) -> ChernEvaluation {
        self + &(-rhs)
    }
}

pub(crate) fn to_integer(q: &BigRational, what: &'static str) -> Result<i128> {
    if !q.is_integer() {
        return Err(Error::InexactDivision(what));
    }
    q.to_integer().to_i128().ok_or(Error::InvalidArgument(format!("{what} does not fit in 128 bits")))
}

const MAX_GENUS: usize = 30;

fn check_genus(g: usize, min: usize) -> Result<()> {
    if g < min || g > MAX_GENUS {
        return Err(Error::InvalidArgument(format!("genus must lie in {min}..={MAX_GENUS}, got {g}")));
    }
    Ok(())
}

/// Topological Euler characteristic of a smooth theta divisor:
/// `c(T_Θ) = (1+h)^{−1}`, integrated over Θ.
pub fn theta_chi_top(g: usize) -> Result<i128> {
    check_genus(g, 2)?;
    let c = (&ChernEvaluation::one(g) + &ChernEvaluation::h(g)).pow(-1)?;
    to_integer(&c.part(g - 1).degree_on(1), "χ_top(Θ)")
}

/// `χ(δ_Θ) = (−1)^{g−1} χ_top(Θ)` for a smooth theta divisor.
pub fn theta_chi(g: usize) -> Result<i128> {
    let top = theta_chi_top(g)?;
    Ok(if g.is_multiple_of(2) { -top } else { top })
}

/// `χ(δ_Θ)` when Θ has `r` ordinary double points.
pub fn theta_chi_odp(g: usize, r: u64) -> Result<i128> {
    check_genus(g, 4)?;
    Ok(theta_chi(g)? - 2 * r as i128)
}

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::{Error, Result};

/// Power series truncated at `x^order`, with exact rational coefficients.
///
/// The coefficient vector always has length `order + 1`. Binary operations on
/// series of different orders truncate to the smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[BigInt], order: usize) -> Self {
        Self::from_coeffs(
            coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
            order,
        )
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), order)
    }

    /// Expands `num / den` to order `order` by the linear recurrence
    /// `den_0 f_n = num_n - sum_{j>=1} den_j f_{n-j}`.
    pub fn from_rational(num: &Polynomial, den: &Polynomial, order: usize) -> Result<Self> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantDenominator);
        }
        let inv = d0.recip();
        let den_tail: Vec<(usize, &BigRational)> = den
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut f: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeff(n);
            for &(j, dj) in &den_tail {
                if j > n {
                    break;
                }
                acc -= dj * &f[n - j];
            }
            f.push(acc * &inv);
        }
        Ok(TruncatedSeries { coeffs: f })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Schoolbook product, `O(N^2)`; used for cross-checks only.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Formal derivative; the result has order `order - 1` (or 0).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        let coeffs = (0..=order)
            .map(|n| self.coeffs.get(n + 1).map_or_else(BigRational::zero, |c| c * int(n as i64 + 1)))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Natural logarithm of a series with constant term exactly 1, from
    /// `n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm(self.coeffs[0].to_string()));
        }
        let order = self.order();
        // sparse f (e.g. a polynomial argument) keeps this O(N * nnz)
        let support: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // track n*g_n to avoid dividing inside the inner loop
        let mut ng: Vec<BigRational> = vec![BigRational::zero(); order + 1];
        for n in 1..=order {
            let mut acc = &self.coeffs[n] * int(n as i64);
            for &(j, fj) in &support {
                if j >= n {
                    break;
                }
                let k = n - j;
                acc -= &ng[k] * fj;
            }
            ng[n] = acc;
        }
        let coeffs = ng
            .into_iter()
            .enumerate()
            .map(|(n, c)| if n == 0 { c } else { c / int(n as i64) })
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// `f(x^e)`, truncated at the same order.
    pub fn substitute_power(&self, e: usize) -> Self {
        assert!(e >= 1, "substitution exponent must be positive");
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let Some(n) = i.checked_mul(e).filter(|&n| n <= order) else { break };
            out.coeffs[n] = c.clone();
        }
        out
    }

    /// `self += c · f(x^e)`, touching only the multiples of `e`.
    pub fn add_substituted(&mut self, f: &Self, e: usize, c: &BigRational) {
        assert!(e >= 1, "substitution exponent must be positive");
        for (i, fi) in f.coeffs.iter().enumerate() {
            let n = i * e;
            if n > self.order() {
                break;
            }
            if !fi.is_zero() {
                self.coeffs[n] += fi * c;
            }
        }
    }

    /// `f / (1 - x)`: running prefix sums of the coefficients.
    pub fn geometric_prefix(&self) -> Self {
        let mut acc = BigRational::zero();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `(1 - x) f`: first differences, the inverse of [`Self::geometric_prefix`].
    pub fn first_difference(&self) -> Self {
        let coeffs = (0..=self.order())
            .map(|n| {
                if n == 0 {
                    self.coeffs[0].clone()
                } else {
                    &self.coeffs[n] - &self.coeffs[n - 1]
                }
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// All coefficients as integers, or the first non-integral index.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral { index, value: c.to_string() })
                }
            })
            .collect()
    }

    /// Like [`Self::to_integers`] but also rejects negative coefficients.
    pub fn to_counts(&self) -> Result<Vec<BigInt>> {
        let ints = self.to_integers()?;
        if let Some(index) = ints.iter().position(Signed::is_negative) {
            return Err(Error::NonIntegral { index, value: ints[index].to_string() });
        }
        Ok(ints)
    }

    /// First exponent where the two series differ, up to the smaller order.
    pub fn first_difference_with(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| format!("{c}*x^{n}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self + &rhs
    }
}

impl Sub for TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self - &rhs
    }
}

/// Integer expansion of `num / den` when `den(0) = ±1`; the fast path behind
/// coefficient extraction, where every intermediate stays in `BigInt`.
pub fn integer_rational_expansion(num: &[i64], den: &[i64], order: usize) -> Result<Vec<BigInt>> {
    let d0 = *den.first().ok_or(Error::ZeroConstantDenominator)?;
    if d0 != 1 && d0 != -1 {
        return Err(Error::InvalidArgument(format!(
            "integer expansion needs den(0) = ±1, got {d0}"
        )));
    }
    let tail: Vec<(usize, BigInt)> = den
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, BigInt::from(c)))
        .collect();
    let mut f: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = BigInt::from(*num.get(n).unwrap_or(&0));
        for (j, dj) in &tail {
            if *j > n {
                break;
            }
            acc -= dj * &f[n - j];
        }
        if d0 == -1 {
            acc = -acc;
        }
        f.push(acc);
    }
    Ok(f)
}

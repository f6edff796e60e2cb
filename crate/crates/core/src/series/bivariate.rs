use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Polynomial, TruncatedSeries};
use crate::{Error, Result};

/// Series in `x` truncated at `x^order` whose coefficients are polynomials in
/// `u`. Every `u`-polynomial attached to `x^n` has degree at most `n`: `u`
/// marks letters (or diameters), and each one carries size at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Polynomial>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries { coeffs: vec![Polynomial::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Polynomial::one();
        s
    }

    /// Builds a polynomial from `(coefficient, x-exponent, u-exponent)` terms;
    /// terms above `order` are dropped.
    pub fn from_terms(order: usize, terms: &[(i64, usize, usize)]) -> Result<Self> {
        let mut s = Self::zero(order);
        for &(c, xd, ud) in terms {
            if ud > xd {
                return Err(Error::DegreeBound { x_degree: xd, u_degree: ud });
            }
            if xd > order {
                continue;
            }
            let term = Polynomial::monomial(BigRational::from_integer(BigInt::from(c)), ud);
            s.coeffs[xd] = &s.coeffs[xd] + &term;
        }
        Ok(s)
    }

    /// Embeds a univariate series (no `u` dependence).
    pub fn from_univariate(f: &TruncatedSeries) -> Self {
        BivariateSeries {
            coeffs: f.coeffs().iter().map(|c| Polynomial::new(vec![c.clone()])).collect(),
        }
    }

    /// Expands `num / den`, where `den` has a nonzero constant `x^0 u^0`
    /// coefficient and no other `x^0` term.
    pub fn from_rational(num: &Self, den: &Self, order: usize) -> Result<Self> {
        let d0 = &den.coeffs[0];
        if d0.degree() != Some(0) {
            return Err(Error::ZeroConstantDenominator);
        }
        let inv = d0.coeff(0).recip();
        let mut f: Vec<Polynomial> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeffs.get(n).cloned().unwrap_or_default();
            for m in 1..=n.min(den.order()) {
                let dm = &den.coeffs[m];
                if !dm.is_zero() {
                    acc = &acc - &(dm * &f[n - m]);
                }
            }
            f.push(acc.scale(&inv));
        }
        let out = BivariateSeries { coeffs: f };
        out.check_degree_bound()?;
        Ok(out)
    }

    /// Wraps per-degree `u`-polynomials without checking the degree bound.
    pub(crate) fn from_x_coeffs(coeffs: Vec<Polynomial>) -> Self {
        BivariateSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The `u`-polynomial multiplying `x^n`.
    pub fn x_coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    /// Coefficient of `x^n u^k`.
    pub fn coeff(&self, n: usize, k: usize) -> BigRational {
        self.coeffs[n].coeff(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn check_degree_bound(&self) -> Result<()> {
        for (n, p) in self.coeffs.iter().enumerate() {
            if let Some(d) = p.degree().filter(|&d| d > n) {
                return Err(Error::DegreeBound { x_degree: n, u_degree: d });
            }
        }
        Ok(())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        BivariateSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BivariateSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        out
    }

    pub fn mul_univariate(&self, f: &TruncatedSeries) -> Self {
        self.mul(&Self::from_univariate(f))
    }

    /// Multiplies by `x^x_pow u^u_pow`; `u_pow <= x_pow` keeps the degree bound.
    pub fn mul_monomial(&self, x_pow: usize, u_pow: usize) -> Self {
        assert!(u_pow <= x_pow, "u-exponent may not exceed x-exponent");
        let order = self.order();
        let mut out = Self::zero(order);
        let shift = Polynomial::monomial(BigRational::from_integer(1.into()), u_pow);
        for n in 0..=order {
            if n + x_pow > order {
                break;
            }
            out.coeffs[n + x_pow] = &self.coeffs[n] * &shift;
        }
        out
    }

    /// Multiplies by `u^s`, failing if that breaks the degree bound.
    pub fn mul_u_power(&self, s: usize) -> Result<Self> {
        let shift = Polynomial::monomial(BigRational::from_integer(1.into()), s);
        let out = BivariateSeries { coeffs: self.coeffs.iter().map(|p| p * &shift).collect() };
        out.check_degree_bound()?;
        Ok(out)
    }

    /// `F(x^x_exp, u^u_exp)`, truncated at the same order.
    pub fn substitute(&self, x_exp: usize, u_exp: usize) -> Self {
        assert!(
            u_exp >= 1 && u_exp <= x_exp,
            "substitution must keep u-degree <= x-degree"
        );
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, p) in self.coeffs.iter().enumerate() {
            let m = n * x_exp;
            if m > order {
                break;
            }
            out.coeffs[m] = p.substitute_power(u_exp);
        }
        out
    }

    /// `F(x, 1)`.
    pub fn eval_u1(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.coeffs
                .iter()
                .map(|p| p.coeffs().iter().fold(BigRational::zero(), |a, c| a + c))
                .collect(),
            self.order(),
        )
    }

    /// `∂F/∂u`.
    pub fn u_derivative(&self) -> Self {
        BivariateSeries { coeffs: self.coeffs.iter().map(Polynomial::derivative).collect() }
    }

    /// `u ∂F/∂u`, mapping `u^k` to `k u^k`.
    pub fn u_times_derivative(&self) -> Self {
        self.map_u_coeffs(|k, c| c * BigRational::from_integer(BigInt::from(k)))
    }

    /// `∫_0^1 u^{-1} F(x, u) du`, mapping `u^k` to `1/k`. Requires no `u^0` term.
    pub fn integrate_u_inv(&self) -> Result<TruncatedSeries> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (n, p) in self.coeffs.iter().enumerate() {
            if !p.coeff(0).is_zero() {
                return Err(Error::NonzeroUConstant(n));
            }
            let mut acc = BigRational::zero();
            for (k, c) in p.coeffs().iter().enumerate().skip(1) {
                acc += c / BigRational::from_integer(BigInt::from(k));
            }
            out.push(acc);
        }
        Ok(TruncatedSeries::from_coeffs(out, self.order()))
    }

    /// Applies `f(k, c)` to every coefficient `c` of `u^k`.
    pub fn map_u_coeffs(&self, f: impl Fn(usize, &BigRational) -> BigRational) -> Self {
        BivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|p| Polynomial::new(p.coeffs().iter().enumerate().map(|(k, c)| f(k, c)).collect()))
                .collect(),
        }
    }

    /// First `(n, k)` where the two series differ, up to the smaller order.
    pub fn first_difference_with(&self, other: &Self) -> Option<(usize, usize)> {
        let order = self.order().min(other.order());
        (0..=order).find_map(|n| {
            let (a, b) = (&self.coeffs[n], &other.coeffs[n]);
            if a == b {
                return None;
            }
            let top = a.coeffs().len().max(b.coeffs().len());
            (0..top).find(|&k| a.coeff(k) != b.coeff(k)).map(|k| (n, k))
        })
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_count_coefficients(&self) -> bool {
        self.coeffs
            .iter()
            .flat_map(|p| p.coeffs())
            .all(|c| c.is_integer() && *c >= BigRational::zero())
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        BivariateSeries { coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect() }
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        BivariateSeries { coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect() }
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;
    fn neg(self) -> BivariateSeries {
        BivariateSeries { coeffs: self.coeffs.iter().map(|p| -p).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn integrate_termwise() {
        // u x + u^2 x^2 -> x + x^2/2
        let f = BivariateSeries::from_terms(3, &[(1, 1, 1), (1, 2, 2)]).unwrap();
        let g = f.integrate_u_inv().unwrap();
        assert_eq!(g.coeffs(), &[q(0, 1), q(1, 1), q(1, 2), q(0, 1)]);
    }

    #[test]
    fn integrate_rejects_u_constant() {
        let f = BivariateSeries::from_terms(3, &[(1, 2, 0)]).unwrap();
        assert_eq!(f.integrate_u_inv(), Err(Error::NonzeroUConstant(2)));
    }

    #[test]
    fn eval_and_derivatives() {
        // (u + u^2) x^2
        let f = BivariateSeries::from_terms(3, &[(1, 2, 1), (1, 2, 2)]).unwrap();
        assert_eq!(f.eval_u1().coeff(2), &q(2, 1));
        assert_eq!(f.u_derivative().coeff(2, 0), q(1, 1));
        assert_eq!(f.u_derivative().coeff(2, 1), q(2, 1));
        assert_eq!(f.u_times_derivative().coeff(2, 2), q(2, 1));
        assert!(BivariateSeries::zero(4).u_derivative().is_zero());
    }

    #[test]
    fn from_terms_enforces_bound() {
        assert!(BivariateSeries::from_terms(3, &[(1, 1, 2)]).is_err());
    }

    #[test]
    fn rational_expansion_of_positive_sequences() {
        // ux / (1 - x(1+u)): nonempty sequences of positive integers
        let num = BivariateSeries::from_terms(6, &[(1, 1, 1)]).unwrap();
        let den = BivariateSeries::from_terms(6, &[(1, 0, 0), (-1, 1, 0), (-1, 1, 1)]).unwrap();
        let s = BivariateSeries::from_rational(&num, &den, 6).unwrap();
        // compositions of n into k parts: C(n-1, k-1)
        assert_eq!(s.coeff(5, 2), q(4, 1));
        assert_eq!(s.coeff(6, 3), q(10, 1));
        assert_eq!(s.eval_u1().coeff(6), &q(32, 1));
        // back-multiplication recovers the numerator
        assert_eq!(s.mul(&den), num);
    }

    #[test]
    fn substitution_scales_both_variables() {
        let f = BivariateSeries::from_terms(8, &[(3, 1, 1), (5, 2, 1)]).unwrap();
        let g = f.substitute(3, 2);
        assert_eq!(g.coeff(3, 2), q(3, 1));
        assert_eq!(g.coeff(6, 2), q(5, 1));
        let h = f.mul_monomial(2, 1);
        assert_eq!(h.coeff(3, 2), q(3, 1));
    }
}

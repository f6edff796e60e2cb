//! Closed-form rational generating functions, entered verbatim and used as
//! oracles for the automaton, Burnside and configuration routes.
//!
//! Three families of displays are kept side by side where the printed form
//! and the recomputed one disagree: the printed W⁺ of oriented wheels
//! violating P3 (and with it the oriented closed-form term and the achiral
//! closed form), and the vertex-axis reflection series, whose three printed
//! displays are stored under the role each one actually plays.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::series::{integer_rational_expansion, BivariateSeries, Polynomial, TruncatedSeries};
use crate::{Error, Result};

/// A univariate rational function `num / den` with `den(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        RationalFunction { num, den }
    }

    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        TruncatedSeries::from_rational(&self.num, &self.den, order)
    }

    /// Integer expansion, after normalising `den(0)` to 1. Fails if the
    /// normalised numerator or denominator has a non-integral coefficient.
    pub fn expand_integers(&self, order: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantDenominator);
        }
        let inv = d0.recip();
        let to_i64 = |p: &Polynomial| -> Result<Vec<i64>> {
            p.scale(&inv)
                .coeffs()
                .iter()
                .enumerate()
                .map(|(index, c)| {
                    c.is_integer()
                        .then(|| c.to_integer().to_i64())
                        .flatten()
                        .ok_or_else(|| Error::NonIntegral { index, value: c.to_string() })
                })
                .collect()
        };
        integer_rational_expansion(&to_i64(&self.num)?, &to_i64(&self.den)?, order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Divides by `1 - x`.
    pub fn over_one_minus_x(&self) -> Self {
        RationalFunction { num: self.num.clone(), den: &self.den * &p(&[1, -1]) }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn product(factors: &[Polynomial]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, f| &acc * f)
}

/// `2x⁶ − 4x⁴ + 4x² − 1`, whose positive root is `1/λ`.
pub fn achiral_pole_polynomial() -> Polynomial {
    p(&[-1, 0, 4, 0, -4, 0, 2])
}

/// `1 − 4x + 4x² − 2x³`, whose real root is `1/γ`.
pub fn growth_polynomial() -> Polynomial {
    p(&[1, -4, 4, -2])
}

/// Reflection contribution to `W(x)`:
/// `x(x²−x−1)(x⁴−x²+1) / (2(1−x)(2x⁶−4x⁴+4x²−1))`.
pub fn reflection_term() -> RationalFunction {
    RationalFunction::new(
        product(&[p(&[0, 1]), p(&[-1, -1, 1]), p(&[1, 0, -1, 0, 1])]),
        product(&[p(&[2]), p(&[1, -1]), achiral_pole_polynomial()]),
    )
}

/// Wheels violating P3: `x(x⁸−2x⁷+x⁶+3x³−x²−x+1) / ((1+x)²(1−x)⁵)`.
pub fn wheels_not_p3() -> RationalFunction {
    RationalFunction::new(
        product(&[p(&[0, 1]), p(&[1, -1, -1, 3, 0, 0, 1, -2, 1])]),
        product(&[p(&[1, 1]).pow(2), p(&[1, -1]).pow(5)]),
    )
}

/// Oriented wheels violating P3 as printed:
/// `(x¹¹+3x¹⁰−3x⁹−7x⁸+4x⁷+4x⁶+4x⁵+3x⁴−2x³+x) / ((x+1)³(1−x)⁵)`.
///
/// Falls short of the enumerated counts by `x⁸/((1−x)⁴(1+x)³)`.
pub fn oriented_wheels_not_p3_printed() -> RationalFunction {
    RationalFunction::new(
        p(&[0, 1, 0, -2, 3, 4, 4, 4, -7, -3, 3, 1]),
        product(&[p(&[1, 1]).pow(3), p(&[1, -1]).pow(5)]),
    )
}

/// Oriented wheels violating P3, recomputed from the configuration sum and
/// confirmed by enumeration:
/// `x(x⁸+x⁷−7x⁶+7x⁵−3x⁴+3x³+x²−2x+1) / ((1−x)⁵(1+x))`.
pub fn oriented_wheels_not_p3() -> RationalFunction {
    RationalFunction::new(
        product(&[p(&[0, 1]), p(&[1, -2, 1, 3, -3, 7, -7, 1, 1])]),
        product(&[p(&[1, -1]).pow(5), p(&[1, 1])]),
    )
}

/// Rational part of the `P(x)` closed form:
/// `x(x²−x−1)(x⁴−x²+1)/(2(1−x)²S) − x(x⁸−2x⁷+x⁶+3x³−x²−x+1)/((1+x)²(1−x)⁶)`.
pub fn polytope_rational_part() -> RationalFunction {
    reflection_term().over_one_minus_x().sub(&wheels_not_p3().over_one_minus_x())
}

/// Rational part of the `P⁺(x)` closed form as printed.
pub fn oriented_polytope_rational_part_printed() -> RationalFunction {
    oriented_wheels_not_p3_printed().over_one_minus_x().neg()
}

/// Rational part of `P⁺(x)` with the recomputed oriented P3 term.
pub fn oriented_polytope_rational_part() -> RationalFunction {
    oriented_wheels_not_p3().over_one_minus_x().neg()
}

/// The achiral closed form as printed: `x⁵·N(x) / ((x−1)⁵ S (x+1)³)`.
pub fn achiral_printed() -> RationalFunction {
    RationalFunction::new(
        product(&[
            Polynomial::monomial(BigRational::one(), 5),
            p(&[1, 5, 4, -14, -17, 15, 23, -5, -15, -2, 4, 2]),
        ]),
        product(&[p(&[-1, 1]).pow(5), achiral_pole_polynomial(), p(&[1, 1]).pow(3)]),
    )
}

/// `2P − P⁺` as a rational function: the logarithmic parts cancel, leaving
/// `(2·reflection − 2·W_notP3 + W⁺_notP3) / (1 − x)`.
pub fn achiral() -> RationalFunction {
    let two = BigRational::from_integer(2.into());
    reflection_term()
        .scale(&two)
        .sub(&wheels_not_p3().scale(&two))
        .add(&oriented_wheels_not_p3())
        .over_one_minus_x()
}

/// `Q(x) = P⁻(x)(1−4x²+4x⁴−2x⁶) / (4x⁵(3x⁴−4x²+2))` for the printed
/// achiral form, with the pole factor cancelled so it can be evaluated at
/// `±α`.
pub fn achiral_amplitude(x: f64) -> f64 {
    // P⁻ = x⁵N / ((x−1)⁵ S (x+1)³) and 1−4x²+4x⁴−2x⁶ = −S
    let n = p(&[1, 5, 4, -14, -17, 15, 23, -5, -15, -2, 4, 2]).eval_f64(x);
    let y = (x - 1.0).powi(5) * (x + 1.0).powi(3);
    -n / (y * 4.0 * (3.0 * x.powi(4) - 4.0 * x * x + 2.0))
}

/// Bivariate polynomial from `(coefficient, x-exponent, u-exponent)` terms.
fn b(order: usize, terms: &[(i64, usize, usize)]) -> BivariateSeries {
    BivariateSeries::from_terms(order, terms).expect("closed-form factor respects the degree bound")
}

fn bprod(order: usize, factors: &[&[(i64, usize, usize)]]) -> BivariateSeries {
    factors.iter().fold(BivariateSeries::one(order), |acc, f| acc.mul(&b(order, f)))
}

fn bexpand(order: usize, num: &[&[(i64, usize, usize)]], den: &[&[(i64, usize, usize)]]) -> BivariateSeries {
    BivariateSeries::from_rational(&bprod(order, num), &bprod(order, den), order)
        .expect("closed-form denominator has constant term ±1")
}

const X_PLUS_1: &[(i64, usize, usize)] = &[(1, 1, 0), (1, 0, 0)];
const X_MINUS_1: &[(i64, usize, usize)] = &[(1, 1, 0), (-1, 0, 0)];
const UX: &[(i64, usize, usize)] = &[(1, 1, 1)];
// x⁶u⁴ − u²x⁴ − 3x⁴ + x⁶ + 3x² + u²x² − 1
const REFL_DEN: &[(i64, usize, usize)] =
    &[(1, 6, 4), (-1, 4, 2), (-3, 4, 0), (1, 6, 0), (3, 2, 0), (1, 2, 2), (-1, 0, 0)];
// x³ + u²x³ − 2x² − x + 2
const REFL_F: &[(i64, usize, usize)] = &[(1, 3, 0), (1, 3, 2), (-2, 2, 0), (-1, 1, 0), (2, 0, 0)];

/// `L₁₀(x,u) = ux²(1−x) / (1 − x(3 + u − 3x − ux + x² + u²x²))`.
pub fn l10(order: usize) -> BivariateSeries {
    bexpand(
        order,
        &[&[(1, 2, 1), (-1, 3, 1)]],
        &[&[(1, 0, 0), (-3, 1, 0), (-1, 1, 1), (3, 2, 0), (1, 2, 1), (-1, 3, 0), (-1, 3, 2)]],
    )
}

/// Rooted wheels by size and number of diameters:
/// `ux(u²x³−2ux³+2ux²−x³+4x²−5x+2) / ((u²x³−ux²−3x²+x³+3x+ux−1)(x−ux−1))`.
pub fn rooted(order: usize) -> BivariateSeries {
    bexpand(
        order,
        &[UX, &[(1, 3, 2), (-2, 3, 1), (2, 2, 1), (-1, 3, 0), (4, 2, 0), (-5, 1, 0), (2, 0, 0)]],
        &[
            &[(1, 3, 2), (-1, 2, 1), (-3, 2, 0), (1, 3, 0), (3, 1, 0), (1, 1, 1), (-1, 0, 0)],
            &[(1, 1, 0), (-1, 1, 1), (-1, 0, 0)],
        ],
    )
}

/// Rooted wheels fixed by the reflection whose axis passes through two
/// opposite vertices: `(x+1)·F·ux(1−x²+ux²) / ((x−1)·den)`.
pub fn reflection_vertex_axis(order: usize) -> BivariateSeries {
    bexpand(
        order,
        &[X_PLUS_1, REFL_F, UX, &[(1, 0, 0), (-1, 2, 0), (1, 2, 1)]],
        &[X_MINUS_1, REFL_DEN],
    )
}

/// Odd and even diameter-count parts of [`reflection_vertex_axis`]:
/// `−(x+1)²·F·ux / den` and `u²x³(x+1)·F / ((x−1)·den)`.
pub fn reflection_vertex_axis_parts(order: usize) -> (BivariateSeries, BivariateSeries) {
    let odd = bexpand(order, &[X_PLUS_1, X_PLUS_1, REFL_F, &[(-1, 1, 1)]], &[REFL_DEN]);
    let even = bexpand(order, &[&[(1, 3, 2)], X_PLUS_1, REFL_F], &[X_MINUS_1, REFL_DEN]);
    (odd, even)
}

/// Rooted wheels fixed by the reflection whose axis passes through two
/// opposite edge midpoints:
/// `ux²(ux⁴−u³x⁴−ux²−1+2x²−x⁴+u²x²−u²x⁴) / den`.
pub fn reflection_edge_axis(order: usize) -> BivariateSeries {
    bexpand(
        order,
        &[
            &[(1, 2, 1)],
            &[(1, 4, 1), (-1, 4, 3), (-1, 2, 1), (-1, 0, 0), (2, 2, 0), (-1, 4, 0), (1, 2, 2), (-1, 4, 2)],
        ],
        &[REFL_DEN],
    )
}

/// Odd and even parts of [`reflection_edge_axis`]:
/// `−x²u(x−1)(x+1)(x²+u²x²−1) / den` and `(x²−u²x²−1)u²x⁴ / den`.
pub fn reflection_edge_axis_parts(order: usize) -> (BivariateSeries, BivariateSeries) {
    let odd = bexpand(
        order,
        &[&[(-1, 2, 1)], X_MINUS_1, X_PLUS_1, &[(1, 2, 0), (1, 2, 2), (-1, 0, 0)]],
        &[REFL_DEN],
    );
    let even = bexpand(order, &[&[(1, 2, 0), (-1, 2, 2), (-1, 0, 0)], &[(1, 4, 2)]], &[REFL_DEN]);
    (odd, even)
}

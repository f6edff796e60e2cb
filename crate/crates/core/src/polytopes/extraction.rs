//! Integer-only coefficient extraction for `P` and `P⁺`.
//!
//! Write `G(x) = −ln(1 − 2x³/(1 − 2x)²)` and `H(x) = ln((1 − x)/(1 − 2x))`.
//! Then `m·G_m` is the coefficient sequence of the rational function
//! `xG′(x) = x(4 − 8x + 6x²)/(1 − 4x + 4x² − 2x³) − 4x/(1 − 2x)` and
//! `m·H_m = 2^m − 1`. With
//! `S_g(n) = Σ_{e | n, e odd} φ(e)·(n/e)G_{n/e}` and
//! `S_h(n) = Σ_{e | n} φ(e)·(n/e)H_{n/e}`, the first differences of `P` and
//! `P⁺` are
//!
//! - `4n·f_n = S_g(n) + 2·S_h(n) + n·(4K)_n`, `K = reflection − W_notP3`;
//! - `2n·f⁺_n = S_g(n) + 2·S_h(n) + 2n·K⁺_n`, `K⁺ = −W⁺_notP3`.
//!
//! Every step is a linear recurrence with constant coefficients or a divisor
//! sum, so the cost is `O(N log N)` big-integer operations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::closed_form::{self, RationalFunction};
use crate::parallel::{join, map_collect, Exec};
use crate::series::{totient_table, Polynomial};
use crate::{Error, Result};

/// Operation counts of one extraction run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtractionStats {
    pub order: usize,
    /// Big-integer additions and multiplications by small constants.
    pub operations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    /// Coefficients of `P(x)`, `x⁰..x^order`.
    pub p: Vec<BigInt>,
    /// Coefficients of `P⁺(x)`.
    pub p_plus: Vec<BigInt>,
    pub stats: ExtractionStats,
}

/// `xG′(x)` as one rational function with integer coefficients.
fn cubic_log_derivative() -> RationalFunction {
    let a = RationalFunction::new(
        Polynomial::from_ints(&[0, 4, -8, 6]),
        closed_form::growth_polynomial(),
    );
    let b = RationalFunction::new(Polynomial::from_ints(&[0, 4]), Polynomial::from_ints(&[1, -2]));
    a.sub(&b)
}

fn expansion_cost(r: &RationalFunction, order: usize) -> u64 {
    let terms = r.den.coeffs().iter().filter(|c| !c.is_zero()).count() as u64;
    terms * (order as u64 + 1)
}

/// Divisors of every `n <= order`, by sieve.
fn divisor_lists(order: usize) -> Vec<Vec<u32>> {
    let mut d = vec![Vec::new(); order + 1];
    for e in 1..=order {
        for m in (e..=order).step_by(e) {
            d[m].push(e as u32);
        }
    }
    d
}

const CHUNK: usize = 256;

pub fn extract(order: usize, exec: Exec) -> Result<Extraction> {
    let phi = totient_table(order.max(1));
    let g_rf = cubic_log_derivative();
    let k4_rf = closed_form::reflection_term()
        .sub(&closed_form::wheels_not_p3())
        .scale(&BigRational::from_integer(4.into()));
    let kp_rf = closed_form::oriented_wheels_not_p3().neg();
    let mut ops = expansion_cost(&g_rf, order) + expansion_cost(&k4_rf, order) + expansion_cost(&kp_rf, order);

    let (g, (k4, kp)) = join(
        exec,
        || g_rf.expand_integers(order),
        || join(exec, || k4_rf.expand_integers(order), || kp_rf.expand_integers(order)),
    );
    let (g, k4, kp) = (g?, k4?, kp?);
    let mut h = Vec::with_capacity(order + 1);
    let mut pow = BigInt::one();
    for _ in 0..=order {
        h.push(&pow - 1);
        pow <<= 1;
    }
    ops += order as u64 + 1;

    let divisors = divisor_lists(order);
    let chunks: Vec<(usize, usize)> = (1..=order)
        .step_by(CHUNK)
        .map(|lo| (lo, (lo + CHUNK - 1).min(order)))
        .collect();
    let sums = map_collect(exec, chunks, |(lo, hi)| {
        let mut out = Vec::with_capacity(hi - lo + 1);
        let mut ops = 0u64;
        for n in lo..=hi {
            let mut sg = BigInt::zero();
            let mut sh = BigInt::zero();
            for &e in &divisors[n] {
                let e = e as usize;
                let ph = phi[e];
                if e % 2 == 1 {
                    sg += &g[n / e] * ph;
                    ops += 1;
                }
                sh += &h[n / e] * ph;
                ops += 1;
            }
            out.push(sg + sh * 2u32);
        }
        (out, ops)
    });
    let mut common = vec![BigInt::zero()];
    for (chunk, o) in sums {
        common.extend(chunk);
        ops += o;
    }

    let assemble = |plus: bool| -> Result<Vec<BigInt>> {
        let mut acc = BigInt::zero();
        let mut out = Vec::with_capacity(order + 1);
        out.push(acc.clone());
        for n in 1..=order {
            let nb = BigInt::from(n);
            let (num, den) = if plus {
                (&common[n] + &kp[n] * &nb * 2u32, &nb * 2u32)
            } else {
                (&common[n] + &k4[n] * &nb, &nb * 4u32)
            };
            let (f, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(Error::NonIntegral { index: n, value: format!("{num}/{den}") });
            }
            acc += f;
            out.push(acc.clone());
        }
        Ok(out)
    };
    let (p, p_plus) = join(exec, || assemble(false), || assemble(true));
    ops += 4 * order as u64;
    Ok(Extraction { p: p?, p_plus: p_plus?, stats: ExtractionStats { order, operations: ops } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wheels;

    #[test]
    fn log_derivative_matches_series() {
        let n = 40;
        let g = wheels::cubic_log_series(n);
        let xg = cubic_log_derivative().expand_integers(n).unwrap();
        for m in 1..=n {
            assert_eq!(BigRational::from_integer(xg[m].clone()), g.coeff(m) * BigRational::from_integer(m.into()));
        }
    }

    #[test]
    fn first_terms() {
        let e = extract(14, Exec::Sequential).unwrap();
        let p: Vec<i64> = e.p.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(p[5..12], [1, 7, 31, 116, 379, 1133, 3210]);
        let pp: Vec<i64> = e.p_plus.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(pp[5..10], [1, 7, 38, 169, 615]);
    }

    #[test]
    fn policies_agree() {
        assert_eq!(extract(700, Exec::Sequential).unwrap(), extract(700, Exec::Parallel).unwrap());
    }
}

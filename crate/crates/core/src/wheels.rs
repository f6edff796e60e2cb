//! Wheels: labelled 2k-gons satisfying P1 and P2, up to rotation and
//! reflection (or rotation only, for oriented wheels).
//!
//! Burnside's lemma over the dihedral group of order `4k` gives
//! `4k·W_{n,k} = R_{n,k} + R⁺_{n,k} + R⁻_{n,k}` where `R` counts rooted wheels,
//! `R⁺` pairs (rooted wheel, nontrivial rotation fixing it) and `R⁻` pairs
//! (rooted wheel, reflection fixing it). Two routes to `W(x)` are provided:
//! the closed form built from logarithms, and the exact `u`-integral of the
//! bivariate Burnside sum.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::closed_form;
use crate::series::{totient_table, BivariateSeries, Polynomial, TruncatedSeries};
use crate::{automata, Error, Result};

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `R⁺ = Σ_{e odd ≥ 3} φ(e) R(x^e, u^e) + Σ_{r ≥ 1} φ(2r) u^r x^{2r} / (1 − x^{2r}(1 + u^r))`,
/// given the rooted series `r`.
pub fn rotation_wheel_series_from(r: &BivariateSeries) -> BivariateSeries {
    let order = r.order();
    let phi = totient_table(order.max(1));
    let mut out = BivariateSeries::zero(order);
    // R(x^e, u^e) has x-valuation e
    for e in (3..=order).step_by(2) {
        out = &out + &r.substitute(e, e).scale(&ratio(phi[e], 1));
    }
    for r2 in (2..=order).step_by(2) {
        let h = r2 / 2;
        let num = BivariateSeries::from_terms(order, &[(phi[r2] as i64, r2, h)]).expect("h <= 2h");
        let den = BivariateSeries::from_terms(order, &[(1, 0, 0), (-1, r2, 0), (-1, r2, h)]).expect("h <= 2h");
        out = &out + &BivariateSeries::from_rational(&num, &den, order).expect("den(0) = 1");
    }
    out
}

pub fn rotation_wheel_series(order: usize) -> BivariateSeries {
    rotation_wheel_series_from(&closed_form::rooted(order))
}

/// `R⁻ = u ∂/∂u (R⁽⁰,⁻⁾ + R⁽⁻¹,⁻⁾)`: each of the `k` reflections of either
/// axis type fixes as many sequences as its representative.
pub fn reflection_wheel_series(order: usize) -> BivariateSeries {
    (&closed_form::reflection_vertex_axis(order) + &closed_form::reflection_edge_axis(order)).u_times_derivative()
}

/// [`reflection_wheel_series`] from the automaton route.
pub fn reflection_wheel_series_automaton(order: usize) -> Result<BivariateSeries> {
    let (v, e) = automata::reflection_word_series_automaton(order)?;
    Ok((&v + &e).u_times_derivative())
}

/// `−ln(1 − 2x³/(1 − 2x)²) = −ln(1 − 4x + 4x² − 2x³) + 2 ln(1 − 2x)`.
pub fn cubic_log_series(order: usize) -> TruncatedSeries {
    let a = TruncatedSeries::from_polynomial(&closed_form::growth_polynomial(), order);
    let b = TruncatedSeries::from_polynomial(&Polynomial::from_ints(&[1, -2]), order);
    let two = ratio(2, 1);
    &b.log().expect("constant term 1").scale(&two) - &a.log().expect("constant term 1")
}

/// `H(x) = ln((1 − x)/(1 − 2x))`, coefficient `(2^n − 1)/n`.
pub fn h_series(order: usize) -> TruncatedSeries {
    let a = TruncatedSeries::from_polynomial(&Polynomial::from_ints(&[1, -1]), order);
    let b = TruncatedSeries::from_polynomial(&Polynomial::from_ints(&[1, -2]), order);
    &a.log().expect("constant term 1") - &b.log().expect("constant term 1")
}

/// Largest `e` contributing to the two totient sums at `order`: the cubic
/// term `G(x^e)` starts at `x^{3e}`, the `H(x^e)` term at `x^e`.
pub fn e_cutoffs(order: usize) -> (usize, usize) {
    (order / 3, order)
}

/// `Σ_{e odd} φ(e)/(a·e) G(x^e) + Σ_e φ(e)/(b·e) H(x^e)` with `(a, b) = (4, 2)`
/// for wheels and `(2, 1)` for oriented wheels.
pub fn wheel_log_part(order: usize, oriented: bool) -> TruncatedSeries {
    let (a, b) = if oriented { (2, 1) } else { (4, 2) };
    let g = cubic_log_series(order);
    let h = h_series(order);
    let phi = totient_table(order.max(1));
    let (eg, eh) = e_cutoffs(order);
    let mut out = TruncatedSeries::zero(order);
    for e in (1..=eg).step_by(2) {
        out.add_substituted(&g, e, &ratio(phi[e], a * e as u64));
    }
    for e in 1..=eh {
        out.add_substituted(&h, e, &ratio(phi[e], b * e as u64));
    }
    out
}

/// Wheels by size, closed-form route.
pub fn wheel_series(order: usize) -> TruncatedSeries {
    let refl = closed_form::reflection_term().expand(order).expect("den(0) = -2");
    &wheel_log_part(order, false) + &refl
}

/// Oriented wheels by size, closed-form route.
pub fn oriented_wheel_series(order: usize) -> TruncatedSeries {
    wheel_log_part(order, true)
}

/// `W = (1/4)[∫u⁻¹(R + R⁺)du + (R⁽⁰,⁻⁾ + R⁽⁻¹,⁻⁾)(x, 1)]`.
pub fn wheel_series_integral(order: usize) -> Result<TruncatedSeries> {
    let r = closed_form::rooted(order);
    let rp = rotation_wheel_series_from(&r);
    let refl = &closed_form::reflection_vertex_axis(order) + &closed_form::reflection_edge_axis(order);
    let sum = &(&r + &rp).integrate_u_inv()? + &refl.eval_u1();
    Ok(sum.scale(&ratio(1, 4)))
}

/// `W⁺ = (1/2)∫u⁻¹(R + R⁺)du`.
pub fn oriented_wheel_series_integral(order: usize) -> Result<TruncatedSeries> {
    let r = closed_form::rooted(order);
    let rp = rotation_wheel_series_from(&r);
    Ok((&r + &rp).integrate_u_inv()?.scale(&ratio(1, 2)))
}

/// Every series of the wheel stage at one order.
#[derive(Debug, Clone)]
pub struct WheelSeriesBundle {
    pub rooted: BivariateSeries,
    pub rotation: BivariateSeries,
    pub reflection: BivariateSeries,
    pub vertex_axis: BivariateSeries,
    pub edge_axis: BivariateSeries,
    pub wheels: TruncatedSeries,
    pub oriented_wheels: TruncatedSeries,
}

impl WheelSeriesBundle {
    pub fn compute(order: usize) -> Self {
        let rooted = closed_form::rooted(order);
        let rotation = rotation_wheel_series_from(&rooted);
        let vertex_axis = closed_form::reflection_vertex_axis(order);
        let edge_axis = closed_form::reflection_edge_axis(order);
        let reflection = (&vertex_axis + &edge_axis).u_times_derivative();
        WheelSeriesBundle {
            rooted,
            rotation,
            reflection,
            vertex_axis,
            edge_axis,
            wheels: wheel_series(order),
            oriented_wheels: oriented_wheel_series(order),
        }
    }

    /// `W(x, u)` with `W_{n,k} = (R + R⁺ + R⁻)_{n,k} / 4k`, failing if any
    /// entry is not an integer.
    pub fn refined_wheels(&self) -> Result<BivariateSeries> {
        let total = &(&self.rooted + &self.rotation) + &self.reflection;
        divide_by_group_order(&total, 4)
    }

    /// `W⁺(x, u)` with `W⁺_{n,k} = (R + R⁺)_{n,k} / 2k`.
    pub fn refined_oriented_wheels(&self) -> Result<BivariateSeries> {
        divide_by_group_order(&(&self.rooted + &self.rotation), 2)
    }

    /// Checks both Burnside identities and that the refined counts sum to the
    /// closed-form `W` and `W⁺`.
    pub fn check_burnside(&self) -> Result<()> {
        let w = self.refined_wheels()?.eval_u1();
        let wp = self.refined_oriented_wheels()?.eval_u1();
        for (what, a, b) in [("W", &w, &self.wheels), ("W+", &wp, &self.oriented_wheels)] {
            if let Some(index) = a.first_difference_with(b) {
                return Err(Error::RouteMismatch {
                    what: format!("Burnside {what}"),
                    index,
                    left: a.coeff(index).to_string(),
                    right: b.coeff(index).to_string(),
                });
            }
        }
        Ok(())
    }
}

fn divide_by_group_order(total: &BivariateSeries, m: i64) -> Result<BivariateSeries> {
    let out = total.map_u_coeffs(|k, c| {
        if k == 0 {
            c.clone()
        } else {
            c / BigRational::from_integer(BigInt::from(m * k as i64))
        }
    });
    for n in 0..=out.order() {
        for (k, c) in out.x_coeff(n).coeffs().iter().enumerate() {
            if !c.is_integer() || (k == 0 && !c.is_zero()) {
                return Err(Error::NonIntegral { index: n, value: format!("{c} at u^{k}") });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_counts().unwrap().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn wheel_counts_small() {
        assert_eq!(ints(&wheel_series(10)), vec![0, 1, 2, 4, 8, 16, 34, 73, 166, 391, 947]);
        assert_eq!(ints(&oriented_wheel_series(10)), vec![0, 1, 2, 4, 9, 19, 46, 107, 267, 669, 1707]);
    }

    #[test]
    fn rotation_pairs_small() {
        let rp = rotation_wheel_series(6);
        assert_eq!(rp.coeff(1, 1), int(0));
        // (1,1) is fixed by (1,+)
        assert_eq!(rp.coeff(2, 1), int(1));
        assert_eq!(rp.coeff(3, 3), int(4));
        assert!(rp.has_count_coefficients());
    }

    #[test]
    fn reflection_pairs_small() {
        let rm = reflection_wheel_series(4);
        // only (0,−) fixes (0,1) and (1,0) when k = 1
        assert_eq!(rm.eval_u1().coeff(1), &int(2));
        assert_eq!(rm.coeff(2, 1), int(4));
        assert!(BivariateSeries::zero(4).u_times_derivative().is_zero());
        assert_eq!(reflection_wheel_series_automaton(20).unwrap(), reflection_wheel_series(20));
    }

    #[test]
    fn integral_routes_match_closed_forms() {
        let n = 50;
        assert_eq!(wheel_series_integral(n).unwrap(), wheel_series(n));
        assert_eq!(oriented_wheel_series_integral(n).unwrap(), oriented_wheel_series(n));
    }

    #[test]
    fn burnside_refinement_is_integral() {
        let b = WheelSeriesBundle::compute(25);
        b.check_burnside().unwrap();
        let w = b.refined_wheels().unwrap();
        assert!(w.has_count_coefficients());
        // the 4·u∂W/∂u identity
        let lhs = w.u_times_derivative().scale(&int(4));
        assert_eq!(lhs, &(&b.rooted + &b.rotation) + &b.reflection);
    }

    #[test]
    fn oriented_between_one_and_two_times() {
        let n = 60;
        let w = wheel_series(n);
        let wp = oriented_wheel_series(n);
        for k in 0..=n {
            assert!(wp.coeff(k) >= w.coeff(k));
            assert!(wp.coeff(k) <= &(w.coeff(k) * int(2)));
        }
    }

    #[test]
    fn e_sums_are_complete() {
        let n = 40;
        let (eg, eh) = e_cutoffs(n);
        assert!(cubic_log_series(n).substitute_power(eg + 1).is_zero());
        assert!(h_series(n).substitute_power(eh + 1).is_zero());
    }

    #[test]
    fn printed_cubic_form_disagrees_at_ten() {
        // ln(1 − 2x^{3e}/(1 − 2x)^{2e}) in place of (1 − 2x^e)² changes W_10
        let n = 10;
        let phi = totient_table(n);
        let e = 3;
        let one_minus_2x = TruncatedSeries::from_polynomial(&Polynomial::from_ints(&[1, -2]), n);
        let inner = TruncatedSeries::from_polynomial(
            &(&Polynomial::from_ints(&[1, -2]).pow(2 * e as u32) - &Polynomial::monomial(int(2), 3 * e)),
            n,
        );
        let printed = &inner.log().unwrap() - &one_minus_2x.log().unwrap().scale(&int(2 * e as i64));
        let w_e = ratio(phi[e], 4 * e as u64);
        let w = &(&wheel_series(n) - &cubic_log_series(n).substitute_power(e).scale(&w_e)) - &printed.scale(&w_e);
        assert_eq!(w.coeff(9), &int(391));
        assert_eq!(w.coeff(10), &int(951));
    }
}

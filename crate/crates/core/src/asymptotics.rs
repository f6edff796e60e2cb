//! Growth constants and the convergence of exact counts to their leading
//! asymptotic forms. The only module that uses floating point.
//!
//! - `c(d+3,d) ~ γ⁴/(4(γ−1)) · γ^d/d`, `c⁺(d+3,d) ~ γ⁴/(2(γ−1)) · γ^d/d`, where
//!   `1/γ` is the real root of `1 − 4x + 4x² − 2x³`;
//! - `c⁻(d+3,d) ~ (C + (−1)^d C′) λ^d`, where `1/λ = α` is the positive root
//!   of `2x⁶ − 4x⁴ + 4x² − 1` and `C = Q(α)`, `C′ = Q(−α)`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::closed_form;
use crate::parallel::Exec;
use crate::polytopes::coefficient_table;
use crate::series::Polynomial;
use crate::{Error, Result};

/// Root of `poly` in `[lo, hi]`, to relative tolerance `tol`: bisection down
/// to a narrow bracket, then Newton steps kept inside it.
pub fn dominant_root(poly: &Polynomial, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (poly.eval_f64(a), poly.eval_f64(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
        return Err(Error::NotBracketing { lo, hi });
    }
    let tol = tol.max(f64::EPSILON);
    let dp = poly.derivative();
    for _ in 0..60 {
        let m = 0.5 * (a + b);
        let fm = poly.eval_f64(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
        } else {
            b = m;
        }
        if (b - a) <= 1e-6 * m.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..50 {
        let step = poly.eval_f64(x) / dp.eval_f64(x);
        let next = x - step;
        if !next.is_finite() || next < a || next > b {
            break;
        }
        x = next;
        if step.abs() <= tol * x.abs() {
            break;
        }
    }
    Ok(x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConstants {
    pub gamma: f64,
    pub rho: f64,
    pub alpha: f64,
    pub lambda: f64,
    pub big_c: f64,
    pub big_c_prime: f64,
    /// `γ⁴/(4(γ−1))`.
    pub c_amplitude: f64,
    /// `γ⁴/(2(γ−1))`.
    pub c_plus_amplitude: f64,
}

impl AsymptoticConstants {
    pub fn compute() -> Self {
        let rho = dominant_root(&closed_form::growth_polynomial(), 0.0, 1.0, 1e-15).expect("sign change on (0,1)");
        let alpha =
            dominant_root(&closed_form::achiral_pole_polynomial(), 0.0, 1.0, 1e-15).expect("sign change on (0,1)");
        let gamma = 1.0 / rho;
        AsymptoticConstants {
            gamma,
            rho,
            alpha,
            lambda: 1.0 / alpha,
            big_c: closed_form::achiral_amplitude(alpha),
            big_c_prime: closed_form::achiral_amplitude(-alpha),
            c_amplitude: gamma.powi(4) / (4.0 * (gamma - 1.0)),
            c_plus_amplitude: gamma.powi(4) / (2.0 * (gamma - 1.0)),
        }
    }

    /// Computed once per process.
    pub fn get() -> &'static Self {
        static CONSTANTS: OnceLock<AsymptoticConstants> = OnceLock::new();
        CONSTANTS.get_or_init(Self::compute)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Combinatorial,
    Oriented,
    Achiral,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Combinatorial, Kind::Oriented, Kind::Achiral];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Combinatorial => "combinatorial",
            Kind::Oriented => "oriented",
            Kind::Achiral => "achiral",
        }
    }
}

/// Natural log of the leading-order estimate; finite for every `d >= 2`.
pub fn ln_asymptotic_estimate(d: usize, kind: Kind) -> f64 {
    let k = AsymptoticConstants::get();
    let df = d as f64;
    match kind {
        Kind::Combinatorial => k.c_amplitude.ln() + df * k.gamma.ln() - df.ln(),
        Kind::Oriented => k.c_plus_amplitude.ln() + df * k.gamma.ln() - df.ln(),
        Kind::Achiral => {
            let sign = if d.is_multiple_of(2) { 1.0 } else { -1.0 };
            (k.big_c + sign * k.big_c_prime).ln() + df * k.lambda.ln()
        }
    }
}

/// Leading-order estimate; overflows to infinity once it leaves `f64` range.
pub fn asymptotic_estimate(d: usize, kind: Kind) -> f64 {
    ln_asymptotic_estimate(d, kind).exp()
}

/// `ln x` for a positive big integer of any size.
pub fn ln_big(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "logarithm of a non-positive count");
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().expect("64-bit mantissa").ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub d: usize,
    pub kind: Kind,
    pub exact: BigInt,
    pub estimate: f64,
    /// `exact / estimate`.
    pub ratio: f64,
    /// `|ratio − 1|`.
    pub relative_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub max_d: usize,
    pub rows: Vec<ConvergenceRow>,
    /// Per kind, the smallest `d` from which the relative error decreases
    /// strictly up to `max_d`.
    pub d0: BTreeMap<Kind, Option<usize>>,
}

impl ConvergenceReport {
    pub fn rows_of(&self, kind: Kind) -> impl Iterator<Item = &ConvergenceRow> {
        self.rows.iter().filter(move |r| r.kind == kind)
    }
}

fn row(d: usize, kind: Kind, exact: &BigInt) -> ConvergenceRow {
    let ln_est = ln_asymptotic_estimate(d, kind);
    let ratio = if exact.is_zero() { 0.0 } else { (ln_big(exact) - ln_est).exp() };
    ConvergenceRow {
        d,
        kind,
        exact: exact.clone(),
        estimate: ln_est.exp(),
        ratio,
        relative_error: (ratio - 1.0).abs(),
    }
}

/// Exact counts against their estimates for `d = 2..=max_d`.
pub fn convergence_report(max_d: usize, exec: Exec) -> Result<ConvergenceReport> {
    if max_d < 10 {
        return Err(Error::InvalidArgument(format!("max_d {max_d} < 10")));
    }
    let table = coefficient_table(max_d, exec)?;
    let mut rows = Vec::with_capacity(3 * table.len());
    for kind in Kind::ALL {
        for r in &table {
            let exact = match kind {
                Kind::Combinatorial => &r.c,
                Kind::Oriented => &r.c_plus,
                Kind::Achiral => &r.c_minus,
            };
            rows.push(row(r.d, kind, exact));
        }
    }
    let mut d0 = BTreeMap::new();
    for kind in Kind::ALL {
        let errs: Vec<(usize, f64)> =
            rows.iter().filter(|r| r.kind == kind).map(|r| (r.d, r.relative_error)).collect();
        let mut start = errs.len() - 1;
        while start > 0 && errs[start - 1].1 > errs[start].1 {
            start -= 1;
        }
        d0.insert(kind, (start + 1 < errs.len()).then(|| errs[start].0));
    }
    Ok(ConvergenceReport { max_d, rows, d0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        let k = AsymptoticConstants::get();
        assert!((k.gamma - 2.839).abs() < 1e-3);
        assert!((k.lambda - 1.6850).abs() < 5e-4);
        assert!(closed_form::growth_polynomial().eval_f64(k.rho).abs() < 1e-10);
        assert!(closed_form::achiral_pole_polynomial().eval_f64(k.alpha).abs() < 1e-10);
        let half = dominant_root(&Polynomial::from_ints(&[-1, 2]), 0.0, 1.0, 1e-12).unwrap();
        assert!((half - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_bracketing() {
        let p = Polynomial::from_ints(&[1, 0, 1]);
        assert!(matches!(dominant_root(&p, -1.0, 1.0, 1e-12), Err(Error::NotBracketing { .. })));
    }

    #[test]
    fn amplitudes() {
        let k = AsymptoticConstants::get();
        assert!((k.big_c - 12.1278).abs() < 1e-3);
        assert!((k.big_c_prime - 0.0346).abs() < 1e-3);
        assert!((k.c_plus_amplitude - 2.0 * k.c_amplitude).abs() < 1e-12);
    }

    #[test]
    fn ln_big_agrees_with_f64() {
        let x = BigInt::from(3u64).pow(500);
        assert!((ln_big(&x) - 500.0 * 3f64.ln()).abs() < 1e-9);
        let y = BigInt::from(7u64).pow(40);
        assert!((ln_big(&y) - 40.0 * 7f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn small_report_shape() {
        let r = convergence_report(10, Exec::Sequential).unwrap();
        for kind in Kind::ALL {
            assert_eq!(r.rows_of(kind).count(), 9);
        }
        assert!(convergence_report(9, Exec::Sequential).is_err());
    }
}

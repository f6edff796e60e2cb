//! Polytope counts: `P(x)`, `P⁺(x)` and `P⁻(x) = 2P(x) − P⁺(x)`.
//!
//! A reduced Gale diagram is a wheel satisfying P3 plus a centre label, so
//! the diagram series is `(W − W_notP3)/(1 − x)`. The series routes below are
//! exact but quadratic; [`coefficient_table`] uses the integer extraction of
//! [`extraction`].

pub mod extraction;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::closed_form;
use crate::halfplane::wheels_not_p3_series;
use crate::parallel::Exec;
use crate::series::TruncatedSeries;
use crate::wheels::{oriented_wheel_series, wheel_log_part, wheel_series};
use crate::{Error, Result};

pub use extraction::ExtractionStats;

/// One row of the count table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub d: usize,
    pub vertices: usize,
    pub c: BigInt,
    pub c_plus: BigInt,
    pub c_minus: BigInt,
}

impl CountRow {
    /// Builds the row for dimension `d`, deriving `c⁻ = 2c − c⁺` and checking
    /// `0 <= c⁻ <= c <= c⁺ <= 2c`.
    pub fn new(d: usize, c: BigInt, c_plus: BigInt) -> Result<Self> {
        let c_minus: BigInt = &c * 2u32 - &c_plus;
        if c_minus.is_negative() || c_minus > c || c > c_plus {
            return Err(Error::InvalidArgument(format!(
                "inconsistent counts at d={d}: c={c}, c+={c_plus}"
            )));
        }
        Ok(CountRow { d, vertices: d + 3, c, c_plus, c_minus })
    }
}

fn require_order(order: usize) -> Result<()> {
    if order < 5 {
        return Err(Error::InvalidArgument(format!("order {order} < 5")));
    }
    Ok(())
}

fn agree(what: &str, a: &TruncatedSeries, b: &TruncatedSeries) -> Result<()> {
    match a.first_difference_with(b) {
        None => Ok(()),
        Some(index) => Err(Error::RouteMismatch {
            what: what.into(),
            index,
            left: a.coeff(index).to_string(),
            right: b.coeff(index).to_string(),
        }),
    }
}

/// `P(x)` by the component route `(W − W_notP3)/(1 − x)`, checked against
/// the direct expression (logarithmic part over `1 − x` plus the rational
/// part).
pub fn polytope_series(order: usize) -> Result<TruncatedSeries> {
    require_order(order)?;
    let component = (&wheel_series(order) - &wheels_not_p3_series(false, order)).geometric_prefix();
    let direct = &wheel_log_part(order, false).geometric_prefix()
        + &closed_form::polytope_rational_part().expand(order)?;
    agree("P", &component, &direct)?;
    component.to_counts()?;
    Ok(component)
}

/// `P⁺(x) = (W⁺ − W⁺_notP3)/(1 − x)`, checked against the direct expression
/// with the recomputed oriented P3 term.
pub fn oriented_polytope_series(order: usize) -> Result<TruncatedSeries> {
    require_order(order)?;
    let component = (&oriented_wheel_series(order) - &wheels_not_p3_series(true, order)).geometric_prefix();
    let direct = &wheel_log_part(order, true).geometric_prefix()
        + &closed_form::oriented_polytope_rational_part().expand(order)?;
    agree("P+", &component, &direct)?;
    component.to_counts()?;
    Ok(component)
}

/// The printed `P⁺` closed form expanded as is. Not a count of record.
pub fn oriented_polytope_series_printed(order: usize) -> Result<TruncatedSeries> {
    Ok(&wheel_log_part(order, true).geometric_prefix()
        + &closed_form::oriented_polytope_rational_part_printed().expand(order)?)
}

/// `P⁻ = 2P − P⁺`.
pub fn achiral_series(order: usize) -> Result<TruncatedSeries> {
    let p = polytope_series(order)?;
    let pp = oriented_polytope_series(order)?;
    let pm = &p.scale(&BigRational::from_integer(2.into())) - &pp;
    pm.to_counts()?;
    Ok(pm)
}

/// The printed first terms of the achiral series, as `(exponent, coefficient)`.
pub const ACHIRAL_PRINTED_LINE: [(usize, i64); 6] = [(5, 1), (6, 7), (8, 24), (9, 62), (10, 141), (11, 287)];

/// How the printed achiral closed form relates to the identity `2P − P⁺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AchiralReport {
    pub order: usize,
    /// `2P − P⁺`, the count of record.
    pub identity: Vec<BigInt>,
    /// Expansion of the printed closed form.
    pub closed_form: Vec<BigInt>,
    /// First exponent where the closed form departs from the identity.
    pub first_difference: Option<usize>,
    /// Whether the closed form reproduces the printed first-terms line.
    pub matches_printed_line: bool,
    /// Whether the closed form equals `2P` minus the printed `P⁺` closed form.
    pub matches_printed_oriented: bool,
}

impl AchiralReport {
    pub fn matches_identity(&self) -> bool {
        self.first_difference.is_none()
    }

    pub fn summary(&self) -> Vec<String> {
        let show = |v: &[BigInt]| {
            (5..=self.order.min(11)).map(|i| format!("{}x^{i}", v[i])).collect::<Vec<_>>().join(" + ")
        };
        let mut lines = vec![
            format!("identity 2P - P+      : {}", show(&self.identity)),
            format!("closed form expansion : {}", show(&self.closed_form)),
        ];
        lines.push(match self.first_difference {
            None => "closed form equals the identity route".into(),
            Some(i) => format!(
                "closed form departs from the identity route at x^{i} ({} vs {})",
                self.closed_form[i], self.identity[i]
            ),
        });
        lines.push(format!(
            "closed form {} the printed first-terms line (24x^8, 62x^9, ...)",
            if self.matches_printed_line { "matches" } else { "does not match" }
        ));
        lines.push(format!(
            "closed form {} 2P minus the printed oriented closed form",
            if self.matches_printed_oriented { "equals" } else { "differs from" }
        ));
        lines
    }
}

pub fn achiral_report(order: usize) -> Result<AchiralReport> {
    require_order(order.max(11))?;
    let order = order.max(11);
    let identity = achiral_series(order)?.to_integers()?;
    let closed = closed_form::achiral_printed().expand(order)?;
    let closed_form = closed.to_integers()?;
    let first_difference = (0..=order).find(|&i| identity[i] != closed_form[i]);
    let matches_printed_line = ACHIRAL_PRINTED_LINE.iter().all(|&(i, c)| closed_form[i] == BigInt::from(c))
        && (5..=11).filter(|i| !ACHIRAL_PRINTED_LINE.iter().any(|&(j, _)| j == *i)).all(|i| closed_form[i] == BigInt::from(0));
    let p = polytope_series(order)?;
    let printed_plus = oriented_polytope_series_printed(order)?;
    let via_printed = &p.scale(&BigRational::from_integer(2.into())) - &printed_plus;
    let matches_printed_oriented = via_printed == closed;
    Ok(AchiralReport { order, identity, closed_form, first_difference, matches_printed_line, matches_printed_oriented })
}

/// Count table for `d = 2..=max_d` by integer extraction.
pub fn coefficient_table(max_d: usize, exec: Exec) -> Result<Vec<CountRow>> {
    Ok(coefficient_table_with_stats(max_d, exec)?.0)
}

pub fn coefficient_table_with_stats(max_d: usize, exec: Exec) -> Result<(Vec<CountRow>, ExtractionStats)> {
    if max_d < 2 {
        return Err(Error::InvalidArgument(format!("max_d {max_d} < 2")));
    }
    let e = extraction::extract(max_d + 3, exec)?;
    let rows = (2..=max_d)
        .map(|d| CountRow::new(d, e.p[d + 3].clone(), e.p_plus[d + 3].clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok((rows, e.stats))
}

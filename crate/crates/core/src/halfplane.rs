//! Wheels violating the half-plane condition P3.
//!
//! A wheel with at least five diameters always satisfies P3, so violators are
//! counted by a finite case analysis: the wheels with at most four diameters,
//! grouped by the pattern of zero labels (13 configurations), minus those
//! among them that do satisfy P3 (10 configurations, where some labels are
//! forced to be at least 2). Each configuration is counted by a Burnside
//! average over the symmetries of the 2k-gon.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::series::{Polynomial, TruncatedSeries};
use crate::{Error, Result};

/// Constraint on one label of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Zero,
    Positive,
    AtLeastTwo,
}

impl Slot {
    fn min_label(self) -> u32 {
        match self {
            Slot::Zero => 0,
            Slot::Positive => 1,
            Slot::AtLeastTwo => 2,
        }
    }

    /// Generating function of the admissible labels at `x^len`: 1, `I(x^len)`
    /// or `J(x^len)`, with `I(x) = x/(1−x)` and `J(x) = x²/(1−x)`.
    pub fn weight(self, len: usize, order: usize) -> TruncatedSeries {
        let m = self.min_label() as usize;
        let num = Polynomial::monomial(BigRational::from_integer(1.into()), m * len);
        let den = if m == 0 { Polynomial::one() } else { one_minus_x_pow(len) };
        TruncatedSeries::from_rational(&num, &den, order).expect("den(0) = 1")
    }
}

fn one_minus_x_pow(c: usize) -> Polynomial {
    &Polynomial::one() - &Polynomial::monomial(BigRational::from_integer(1.into()), c)
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::Zero => "0",
            Slot::Positive => "+",
            Slot::AtLeastTwo => "2",
        })
    }
}

/// Occupancy pattern of a 2k-gon, `1 <= k <= 4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfigurationSpec {
    slots: Vec<Slot>,
}

impl ConfigurationSpec {
    /// Rejects odd or out-of-range lengths, two opposite zeros, two adjacent
    /// zeros, and `AtLeastTwo` slots in a pattern whose minimal labelling
    /// still violates P3.
    pub fn new(slots: Vec<Slot>) -> Result<Self> {
        let len = slots.len();
        if !len.is_multiple_of(2) || !(2..=8).contains(&len) {
            return Err(Error::InvalidConfiguration(format!("length {len} is not 2k with 1 <= k <= 4")));
        }
        let k = len / 2;
        for i in 0..len {
            if slots[i] == Slot::Zero && slots[(i + 1) % len] == Slot::Zero {
                return Err(Error::InvalidConfiguration(format!("adjacent zeros at {i}")));
            }
            if slots[i] == Slot::Zero && slots[(i + k) % len] == Slot::Zero {
                return Err(Error::InvalidConfiguration(format!("opposite zeros at {i}")));
            }
        }
        let spec = ConfigurationSpec { slots };
        if spec.slots.contains(&Slot::AtLeastTwo) && !spec.minimal_satisfies_p3() {
            return Err(Error::InvalidConfiguration(format!("{spec} forces labels >= 2 but still violates P3")));
        }
        Ok(spec)
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn diameters(&self) -> usize {
        self.slots.len() / 2
    }

    /// Whether the smallest labelling of the pattern satisfies P3 (every
    /// `k−1` consecutive labels sum to at least 2).
    pub fn minimal_satisfies_p3(&self) -> bool {
        let labels: Vec<u32> = self.slots.iter().map(|s| s.min_label()).collect();
        crate::oracle::window_condition(&labels)
    }

    fn orbit(&self) -> BTreeSet<Vec<Slot>> {
        let len = self.slots.len();
        (0..len)
            .flat_map(|l| [rotate(&self.slots, l), reflect(&self.slots, l)])
            .collect()
    }
}

impl fmt::Display for ConfigurationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

fn rotate<T: Clone>(s: &[T], l: usize) -> Vec<T> {
    let n = s.len();
    (0..n).map(|j| s[(j + l) % n].clone()).collect()
}

fn reflect<T: Clone>(s: &[T], l: usize) -> Vec<T> {
    let n = s.len();
    (0..n).map(|j| s[(l + n - j) % n].clone()).collect()
}

/// Index maps of the group elements: image `b_j = a_{p[j]}`.
fn group(len: usize, oriented: bool) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (0..len).collect();
    let mut g: Vec<Vec<usize>> = (0..len).map(|l| rotate(&idx, l)).collect();
    if !oriented {
        g.extend((0..len).map(|l| reflect(&idx, l)));
    }
    g
}

/// Number of wheels (or oriented wheels) whose zero pattern is in the
/// dihedral orbit of `spec`, by size.
///
/// Burnside: for every group element `g` and every pattern `q` of the orbit
/// fixed by `g`, the labellings fixed by `g` factor over the cycles of `g`,
/// each cycle of length `c` carrying one label counted at `x^c`.
pub fn configuration_contribution(spec: &ConfigurationSpec, oriented: bool, order: usize) -> TruncatedSeries {
    let len = spec.slots.len();
    let g = group(len, oriented);
    let orbit = spec.orbit();
    let mut total = TruncatedSeries::zero(order);
    for p in &g {
        for q in &orbit {
            if (0..len).any(|j| q[p[j]] != q[j]) {
                continue;
            }
            // the fixed labellings: x^{Σ m·c} / Π (1 − x^c) over cycles with m >= 1
            let mut shift = 0;
            let mut den = Polynomial::one();
            let mut seen = vec![false; len];
            for start in 0..len {
                if seen[start] {
                    continue;
                }
                let mut c = 0;
                let mut t = start;
                while !seen[t] {
                    seen[t] = true;
                    t = p[t];
                    c += 1;
                }
                let m = q[start].min_label() as usize;
                if m > 0 {
                    shift += m * c;
                    den = &den * &one_minus_x_pow(c);
                }
            }
            if shift > order {
                continue;
            }
            let num = Polynomial::monomial(BigRational::from_integer(1.into()), shift);
            let term = TruncatedSeries::from_rational(&num, &den, order).expect("den(0) = 1");
            total = &total + &term;
        }
    }
    total.scale(&BigRational::new(BigInt::from(1), BigInt::from(g.len())))
}

fn parse(pattern: &str) -> ConfigurationSpec {
    let slots = pattern
        .chars()
        .map(|c| match c {
            '0' => Slot::Zero,
            '+' => Slot::Positive,
            '2' => Slot::AtLeastTwo,
            _ => unreachable!("pattern alphabet is 0, + and 2"),
        })
        .collect();
    ConfigurationSpec::new(slots).expect("table patterns are valid")
}

/// The 13 zero patterns of wheels with at most four diameters.
pub fn all_configurations() -> Vec<ConfigurationSpec> {
    [
        "++", "0+", "++++", "0+++", "0+0+0+", "0+0+++", "0+++++", "++++++", "0+0++0++", "0++0++++",
        "0+0+++++", "0+++++++", "++++++++",
    ]
    .into_iter()
    .map(parse)
    .collect()
}

/// The 10 configurations of wheels with at most four diameters that satisfy
/// P3. Entries 5, 7, 9 and 10 (1-based) coincide with entries 8, 10, 12 and 13
/// of [`all_configurations`].
pub fn p3_configurations() -> Vec<ConfigurationSpec> {
    [
        "2222", "020202", "0202+2", "02+++2", "++++++", "020++0++", "0++0++++", "020+++++", "0+++++++",
        "++++++++",
    ]
    .into_iter()
    .map(parse)
    .collect()
}

/// `Σ all − Σ p3`, with configurations present in both lists cancelled
/// before evaluation. `skip_p3` lists (0-based) entries of
/// [`p3_configurations`] to leave out of the subtraction.
pub fn wheels_not_p3_series_without(oriented: bool, order: usize, skip_p3: &[usize]) -> TruncatedSeries {
    let all = all_configurations();
    let sat: Vec<(usize, ConfigurationSpec)> = p3_configurations()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !skip_p3.contains(i))
        .collect();
    let mut total = TruncatedSeries::zero(order);
    for spec in &all {
        if !sat.iter().any(|(_, s)| s == spec) {
            total = &total + &configuration_contribution(spec, oriented, order);
        }
    }
    for (_, spec) in &sat {
        if !all.contains(spec) {
            total = &total - &configuration_contribution(spec, oriented, order);
        }
    }
    total
}

/// Wheels (`oriented = false`) or oriented wheels violating P3, by size.
pub fn wheels_not_p3_series(oriented: bool, order: usize) -> TruncatedSeries {
    wheels_not_p3_series_without(oriented, order, &[])
}

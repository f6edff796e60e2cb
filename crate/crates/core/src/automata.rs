//! Weighted automata over the alphabet `N² \ {(0,0)}`.
//!
//! A letter `(a, b)` records the labels of two consecutive vertices on one
//! side of a diameter. Letters fall into three classes: `B` (both labels
//! positive), `C` (first label zero) and `D` (second label zero), with size
//! generating functions `x²/(1−x)²`, `x/(1−x)` and `x/(1−x)`. Two `C`
//! letters (or two `D` letters) may not follow each other, which is what the
//! generic three-state automaton encodes.
//!
//! Every transition weight carries at least one power of `x`, so the series
//! of accepted words can be solved one `x`-degree at a time.

use std::collections::{BTreeSet, HashSet};

use crate::closed_form::RationalFunction;
use crate::series::{BivariateSeries, Polynomial};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterTag {
    B,
    C,
    D,
}

impl LetterTag {
    pub const ALL: [LetterTag; 3] = [LetterTag::B, LetterTag::C, LetterTag::D];

    /// Size generating function of the class.
    pub fn size_series(self) -> RationalFunction {
        match self {
            LetterTag::B => RationalFunction::new(
                Polynomial::from_ints(&[0, 0, 1]),
                Polynomial::from_ints(&[1, -2, 1]),
            ),
            LetterTag::C | LetterTag::D => RationalFunction::new(
                Polynomial::from_ints(&[0, 1]),
                Polynomial::from_ints(&[1, -1]),
            ),
        }
    }
}

/// A letter class together with its weight in `(x, u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LetterClass {
    pub tag: LetterTag,
    pub weight: BivariateSeries,
}

impl LetterClass {
    /// `u·w(x)`: one letter, one diameter.
    pub fn new(tag: LetterTag, order: usize) -> Self {
        Self::scaled(tag, 1, order)
    }

    /// `u²·w(x²)`: a letter read together with its mirror image.
    pub fn doubled(tag: LetterTag, order: usize) -> Self {
        Self::scaled(tag, 2, order)
    }

    /// `u^s·w(x^s)`.
    pub fn scaled(tag: LetterTag, s: usize, order: usize) -> Self {
        let w = tag.size_series().expand(order).expect("class weights have den(0) = 1");
        // w(x^s) has x-valuation at least s, so u^s keeps the degree bound
        let weight = BivariateSeries::from_univariate(&w.substitute_power(s))
            .mul_u_power(s)
            .expect("x-valuation covers the u-power");
        LetterClass { tag, weight }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transition {
    pub from: usize,
    pub class: LetterClass,
    pub to: usize,
}

/// Finite automaton whose transitions are labelled by weighted letter classes.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedAutomaton {
    states: usize,
    transitions: Vec<Transition>,
}

impl WeightedAutomaton {
    /// Builds an automaton, rejecting out-of-range states and two transitions
    /// leaving the same state on the same class.
    pub fn new(states: usize, transitions: Vec<Transition>) -> Result<Self> {
        let mut seen = HashSet::new();
        for t in &transitions {
            if t.from >= states || t.to >= states {
                return Err(Error::Automaton(format!(
                    "transition {} -> {} outside {states} states",
                    t.from, t.to
                )));
            }
            if !seen.insert((t.from, t.class.tag)) {
                return Err(Error::Automaton(format!(
                    "state {} has two {:?} transitions",
                    t.from, t.class.tag
                )));
            }
            if !t.class.weight.x_coeff(0).is_zero() {
                return Err(Error::Automaton("letter weight must have x-valuation >= 1".into()));
            }
        }
        Ok(WeightedAutomaton { states, transitions })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// The generic automaton. State 0: start or last letter `B`; state 1:
    /// last letter `C`; state 2: last letter `D`.
    pub fn generic(order: usize) -> Self {
        Self::generic_with(order, 1)
    }

    /// The generic automaton with every weight taken at `(x^s, u^s)`.
    pub fn generic_with(order: usize, s: usize) -> Self {
        let mut t = Vec::new();
        push_generic(&mut t, 0, order, s);
        Self::new(3, t).expect("generic automaton is deterministic")
    }

    /// Rooted wheels. State 0 is the start; states `1 + 3t + j` are state `j`
    /// of the generic automaton on track `t`, where the track remembers the
    /// class of the first letter (`B`, `C`, `D` for `t = 0, 1, 2`).
    pub fn rooted_wheels(order: usize) -> Self {
        let mut t = Vec::new();
        for (track, tag) in LetterTag::ALL.into_iter().enumerate() {
            t.push(Transition {
                from: 0,
                class: LetterClass::new(tag, order),
                to: 1 + 3 * track + generic_target(tag),
            });
            push_generic(&mut t, 1 + 3 * track, order, 1);
        }
        Self::new(10, t).expect("rooted automaton is deterministic")
    }

    /// Accepting states of [`Self::rooted_wheels`]: a word starting with `C`
    /// may not end with `D`, and one starting with `D` may not end with `C`.
    pub fn rooted_wheels_accepts() -> BTreeSet<usize> {
        [1, 2, 3, 4, 5, 7, 9].into_iter().collect()
    }

    /// Half-words of a wheel fixed by a vertex-axis reflection with an odd
    /// number of diameters. State 0 is the start, whose outgoing letters are
    /// counted once at `(x, u)`; every later letter is paired with its mirror
    /// and weighted at `(x², u²)`.
    pub fn mirrored_from_first_letter(order: usize) -> Self {
        let mut t = Vec::new();
        for tag in LetterTag::ALL {
            t.push(Transition { from: 0, class: LetterClass::new(tag, order), to: 1 + generic_target(tag) });
        }
        push_generic(&mut t, 1, order, 2);
        Self::new(4, t).expect("mirrored automaton is deterministic")
    }

    /// Half-words of a wheel fixed by an edge-axis reflection: the axis
    /// crosses a `B` letter, read doubled, then generic doubled letters.
    pub fn mirrored_from_axis_letter(order: usize) -> Self {
        let mut t = vec![Transition { from: 0, class: LetterClass::doubled(LetterTag::B, order), to: 1 }];
        push_generic(&mut t, 1, order, 2);
        Self::new(4, t).expect("axis automaton is deterministic")
    }

    /// Sum over words from `start` to any state of `accepts` of
    /// `x^size u^diameters`.
    ///
    /// Solves `V_i = [i ∈ accepts] + Σ_t w_t V_{to(t)}` one `x`-degree at a
    /// time; each weight has `x`-valuation at least 1, so degree `n` only
    /// reads degrees below `n`.
    pub fn solve_transfer(&self, start: usize, accepts: &BTreeSet<usize>, order: usize) -> Result<BivariateSeries> {
        if start >= self.states {
            return Err(Error::Automaton(format!("start state {start} out of range")));
        }
        Ok(self.solve_all(accepts, order)?.swap_remove(start))
    }

    /// [`Self::solve_transfer`] for every start state at once.
    pub fn solve_all(&self, accepts: &BTreeSet<usize>, order: usize) -> Result<Vec<BivariateSeries>> {
        if accepts.is_empty() {
            return Err(Error::Automaton("empty accept set".into()));
        }
        if let Some(&bad) = accepts.iter().find(|&&a| a >= self.states) {
            return Err(Error::Automaton(format!("accept state {bad} out of range")));
        }
        let mut v: Vec<Vec<Polynomial>> = vec![Vec::with_capacity(order + 1); self.states];
        for n in 0..=order {
            let mut next = vec![Polynomial::zero(); self.states];
            for (i, slot) in next.iter_mut().enumerate() {
                if n == 0 && accepts.contains(&i) {
                    *slot = Polynomial::one();
                }
            }
            for t in &self.transitions {
                let w = &t.class.weight;
                let mut acc = Polynomial::zero();
                for j in 1..=n.min(w.order()) {
                    let wj = w.x_coeff(j);
                    if !wj.is_zero() {
                        acc = &acc + &(wj * &v[t.to][n - j]);
                    }
                }
                next[t.from] = &next[t.from] + &acc;
            }
            for (i, p) in next.into_iter().enumerate() {
                v[i].push(p);
            }
        }
        Ok(v.into_iter().map(BivariateSeries::from_x_coeffs).collect())
    }
}

fn generic_target(tag: LetterTag) -> usize {
    match tag {
        LetterTag::B => 0,
        LetterTag::C => 1,
        LetterTag::D => 2,
    }
}

fn push_generic(t: &mut Vec<Transition>, base: usize, order: usize, s: usize) {
    for from in 0..3 {
        for tag in LetterTag::ALL {
            let to = generic_target(tag);
            // no CC, no DD
            if from != 0 && from == to {
                continue;
            }
            t.push(Transition { from: base + from, class: LetterClass::scaled(tag, s, order), to: base + to });
        }
    }
}

/// `L_ij`: words read by the generic automaton from state `i` ending in
/// state `j`, at weights `(x^s, u^s)`.
pub fn generic_language(i: usize, j: usize, s: usize, order: usize) -> Result<BivariateSeries> {
    WeightedAutomaton::generic_with(order, s).solve_transfer(i, &BTreeSet::from([j]), order)
}

/// Rooted wheels by size and diameters, from the rooted-wheel automaton.
pub fn rooted_wheel_series_automaton(order: usize) -> Result<BivariateSeries> {
    WeightedAutomaton::rooted_wheels(order).solve_transfer(0, &WeightedAutomaton::rooted_wheels_accepts(), order)
}

/// The four reflection word families, as `(vertex axis, edge axis)` pairs of
/// `(odd, even)` diameter-count parts.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionWords {
    pub vertex_odd: BivariateSeries,
    pub vertex_even: BivariateSeries,
    pub edge_odd: BivariateSeries,
    pub edge_even: BivariateSeries,
}

impl ReflectionWords {
    pub fn vertex_axis(&self) -> BivariateSeries {
        &self.vertex_odd + &self.vertex_even
    }

    pub fn edge_axis(&self) -> BivariateSeries {
        &self.edge_odd + &self.edge_even
    }
}

pub fn reflection_words_automaton(order: usize) -> Result<ReflectionWords> {
    let all: BTreeSet<usize> = [1, 2, 3].into();
    // a positive label on a vertex fixed by the reflection: ux²/(1−x²)
    let fixed_vertex = {
        let w = LetterTag::C.size_series().expand(order)?.substitute_power(2);
        BivariateSeries::from_univariate(&w).mul_u_power(1)?
    };
    let vertex_odd = WeightedAutomaton::mirrored_from_first_letter(order).solve_transfer(0, &all, order)?;
    let vertex_even = vertex_odd.mul(&fixed_vertex);
    let axis = WeightedAutomaton::mirrored_from_axis_letter(order);
    let edge_even = axis.solve_transfer(0, &all, order)?;
    let with_empty: BTreeSet<usize> = [0, 1, 2, 3].into();
    let edge_odd = axis.solve_transfer(0, &with_empty, order)?.mul(&fixed_vertex);
    Ok(ReflectionWords { vertex_odd, vertex_even, edge_odd, edge_even })
}

/// `(R⁽⁰,⁻⁾, R⁽⁻¹,⁻⁾)` from the automaton route.
pub fn reflection_word_series_automaton(order: usize) -> Result<(BivariateSeries, BivariateSeries)> {
    let w = reflection_words_automaton(order)?;
    Ok((w.vertex_axis(), w.edge_axis()))
}

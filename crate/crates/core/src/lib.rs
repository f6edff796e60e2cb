//! Exact enumeration of combinatorial, oriented and achiral d-polytopes with
//! d+3 vertices.
//!
//! Polytopes of this kind are in bijection with reduced Gale diagrams: labelled
//! regular 2k-gons plus a centre label. The crate counts those diagrams through
//! several independent routes that are cross-checked against each other:
//!
//! - [`automata`]: words over the alphabet N²\{(0,0)} recognised by small
//!   weighted automata, solved by transfer iteration into bivariate series.
//! - [`wheels`]: Burnside's lemma over the dihedral (or cyclic) group turns
//!   rooted, rotation and reflection wheel series into wheel counts.
//! - [`halfplane`]: a finite configuration analysis removes wheels that
//!   violate the half-plane condition.
//! - [`polytopes`]: final assembly and the `O(N log N)` coefficient extraction.
//! - [`oracle`]: brute-force enumeration used as ground truth for small sizes.
//! - [`asymptotics`]: growth constants and convergence of exact counts.
//!
//! All counting is done in exact rational arithmetic; floating point only
//! appears in [`asymptotics`].

pub mod asymptotics;
pub mod automata;
pub mod closed_form;
mod error;
pub mod halfplane;
pub mod oracle;
pub mod parallel;
pub mod polytopes;
pub mod series;
pub mod verify;
pub mod wheels;

pub use error::{Error, Result};
pub use parallel::Exec;
pub use polytopes::CountRow;

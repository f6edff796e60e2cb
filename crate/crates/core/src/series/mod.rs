//! Exact polynomial and truncated power-series arithmetic.

mod bivariate;
mod polynomial;
mod truncated;

pub use bivariate::BivariateSeries;
pub use polynomial::Polynomial;
pub use truncated::{integer_rational_expansion, TruncatedSeries};

/// Euler's totient for `1..=n`, by sieve. Index 0 is unused and holds 0.
pub fn totient_table(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

//! Closed-form lower bounds for Turán numbers.

use crate::combinatorics::binomial_signed;
use crate::covers::{sigma, tau};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;

fn uniformity(h: &Hypergraph) -> Result<usize> {
    h.uniformity()
        .ok_or_else(|| Error::InvalidArgument("H must be uniform".into()))
}

/// `C(n, r) - C(n - σ + 1, r)`, the exact value for σ-tight families at large `n`.
pub fn critical_formula(n: usize, r: usize, sigma: usize) -> u128 {
    binomial_signed(n as i64, r as u64) - binomial_signed(n as i64 - sigma as i64 + 1, r as u64)
}

/// `(σ - 1) C(n - σ + 1, r - 1)`: the size of the cross-cut construction.
pub fn bound_sigma_lower(h: &Hypergraph, n: usize) -> Result<u128> {
    let r = uniformity(h)?;
    let Some(s) = sigma(h)? else {
        return invalid("H has no cross-cut");
    };
    let s = s.value();
    Ok(s.saturating_sub(1) as u128 * binomial_signed(n as i64 - s as i64 + 1, r as u64 - 1))
}

/// `C(n-1, r-1) + ... + C(n-τ+1, r-1)`: the size of the cover construction.
pub fn bound_tau_lower(h: &Hypergraph, n: usize) -> Result<u128> {
    let r = uniformity(h)?;
    let t = tau(h)?.value();
    Ok((1..t)
        .map(|i| binomial_signed(n as i64 - i as i64, r as u64 - 1))
        .sum())
}

/// Known values of `φ(2, p)`; display only.
pub fn phi2(p: u64) -> u64 {
    if p % 2 == 1 {
        p * (p - 1)
    } else {
        (p - 1) * (p - 1) + (p - 2) / 2
    }
}

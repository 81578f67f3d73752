//! Binomial coefficients and subset enumeration.

use crate::set::{Vertex, VertexSet};

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `C(n, k)` for signed `n`, treating negative `n` as zero.
pub fn binomial_signed(n: i64, k: u64) -> u128 {
    if n < 0 {
        0
    } else {
        binomial(n as u64, k)
    }
}

/// Generalized binomial `x (x-1) ... (x-k+1) / k!` for real `x`.
pub fn binomial_real(x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (x - i as f64) / (i + 1) as f64;
    }
    acc
}

/// All `r`-subsets of `{0..n-1}` in colexicographic order.
pub fn colex_subsets(n: usize, r: usize) -> Vec<VertexSet> {
    let all = VertexSet::from_iter_lossy(0..n as Vertex);
    let mut subsets = all.subsets_of_size(r);
    subsets.sort_by(|a, b| a.as_slice().iter().rev().cmp(b.as_slice().iter().rev()));
    subsets
}

/// All `r`-subsets of `{0..n-1}` in lexicographic order.
pub fn lex_subsets(n: usize, r: usize) -> Vec<VertexSet> {
    VertexSet::from_iter_lossy(0..n as Vertex).subsets_of_size(r)
}

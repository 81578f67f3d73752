//! Shared fixtures for the benchmarks.

use hypertree::extremal::constructions::{
    complete_partite, gen_c, gen_s, linear_cycle, matching, tight_path,
};
use hypertree::Hypergraph;

/// Forbidden graphs for the oracle, with the `(n, r)` they are timed at.
pub fn oracle_cases() -> Vec<(&'static str, usize, usize, Hypergraph)> {
    vec![
        ("M2_n6", 6, 3, matching(2, 3).unwrap()),
        ("T3_n6", 6, 3, tight_path(3, 3).unwrap()),
        ("C4_n7", 7, 2, complete_partite(2, 2).unwrap()),
    ]
}

/// `(pattern, host)` pairs where a copy exists and where none does.
pub fn embed_cases() -> Vec<(&'static str, Hypergraph, Hypergraph)> {
    let c34 = linear_cycle(4, 3).unwrap();
    vec![
        ("C34_in_S10", c34.clone(), gen_s(10, 3, 2).unwrap()),
        ("C34_in_C10", c34, gen_c(10, 3, 1).unwrap()),
        (
            "T5_in_C10",
            tight_path(5, 3).unwrap(),
            gen_c(10, 3, 1).unwrap(),
        ),
    ]
}

/// Families for the cover and cross-cut solvers.
pub fn cover_cases() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("C8_3", linear_cycle(8, 3).unwrap()),
        ("M6_3", matching(6, 3).unwrap()),
        ("T12_3", tight_path(12, 3).unwrap()),
    ]
}

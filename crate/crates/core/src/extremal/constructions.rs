//! Lower-bound constructions and the standard forbidden families.
//!
//! Vertex labelling is 0-based with kernel/spine vertices first:
//!
//! * `matching(s, r)`: edge `i` is `{ir, .., ir + r - 1}`.
//! * `linear_star(p, r)`: kernel `0`, petal `i` is `{1 + i(r-1), ..}`.
//! * `linear_cycle(m, r)`: spine `a_i = i`, edge `i` is `{a_i, a_{i+1 mod m}}` plus
//!   `r - 2` private vertices numbered from `m` (for `r = 3`, `b_i = m + i`).
//! * `linear_path(m, r)`: spine `a_0..a_m = 0..m`, private vertices from `m + 1`.
//! * `tight_path(m, r)`: edge `i` is `{i, .., i + r - 1}`.
//! * `complete_partite(p, s)`: part `j` is `{js, .., js + s - 1}`.
//! * `twin_hub()`: hubs `0, 1`; `a, b, c, d = 2, 3, 4, 5`; `x_ab, x_bc, x_cd = 6, 7, 8`;
//!   `y_ab, y_bc, y_cd = 9, 10, 11`.
//! * `crossed_pairs()`: `{012, 013, 245, 345}`.

use std::collections::BTreeMap;

use crate::combinatorics::lex_subsets;
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{Vertex, VertexSet};

fn check_nrt(n: usize, r: usize, t: usize) -> Result<()> {
    if r == 0 || r > n || t > n {
        return invalid(format!("parameters out of range: n={n}, r={r}, t={t}"));
    }
    Ok(())
}

/// All `r`-subsets of `[n]` meeting `{0..t-1}`.
pub fn gen_s(n: usize, r: usize, t: usize) -> Result<Hypergraph> {
    check_nrt(n, r, t)?;
    let edges: Vec<VertexSet> = lex_subsets(n, r)
        .into_iter()
        .filter(|e| e.iter().any(|v| (v as usize) < t))
        .collect();
    Ok(Hypergraph::build(n, edges, Some(r), false)?)
}

/// All `r`-subsets of `[n]` meeting `{0..t-1}` in exactly one vertex.
pub fn gen_c(n: usize, r: usize, t: usize) -> Result<Hypergraph> {
    check_nrt(n, r, t)?;
    let edges: Vec<VertexSet> = lex_subsets(n, r)
        .into_iter()
        .filter(|e| e.iter().filter(|&v| (v as usize) < t).count() == 1)
        .collect();
    Ok(Hypergraph::build(n, edges, Some(r), false)?)
}

/// The complete `r`-graph on `n` vertices.
pub fn complete(n: usize, r: usize) -> Result<Hypergraph> {
    check_nrt(n, r, 0)?;
    Hypergraph::build(n, lex_subsets(n, r), Some(r), false)
}

fn range(start: usize, len: usize) -> impl Iterator<Item = Vertex> {
    (start as Vertex)..(start + len) as Vertex
}

pub fn matching(s: usize, r: usize) -> Result<Hypergraph> {
    if r == 0 {
        return invalid("matching needs r >= 1");
    }
    let edges: Vec<VertexSet> = (0..s).map(|i| range(i * r, r).collect()).collect();
    Hypergraph::build(s * r, edges, Some(r), false)
}

pub fn linear_star(p: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return invalid("linear star needs r >= 2");
    }
    let edges: Vec<VertexSet> = (0..p)
        .map(|i| {
            std::iter::once(0)
                .chain(range(1 + i * (r - 1), r - 1))
                .collect()
        })
        .collect();
    Hypergraph::build(1 + p * (r - 1), edges, Some(r), false)
}

pub fn linear_cycle(m: usize, r: usize) -> Result<Hypergraph> {
    if m < 3 || r < 3 {
        return invalid("linear cycle needs m >= 3 and r >= 3");
    }
    let edges: Vec<VertexSet> = (0..m)
        .map(|i| {
            [i as Vertex, ((i + 1) % m) as Vertex]
                .into_iter()
                .chain(range(m + i * (r - 2), r - 2))
                .collect()
        })
        .collect();
    Hypergraph::build(m + m * (r - 2), edges, Some(r), false)
}

/// A tree hosting the 3-uniform linear cycle: fan edges `{a_0, a_i, a_{i+1}}` for
/// `1 <= i <= m-2`, followed by the cycle itself.
pub fn linear_cycle_host(m: usize) -> Result<Hypergraph> {
    let cycle = linear_cycle(m, 3)?;
    let mut edges: Vec<VertexSet> = (1..m - 1)
        .map(|i| VertexSet::from([0, i as Vertex, i as Vertex + 1]))
        .collect();
    edges.extend(cycle.edges().iter().cloned());
    Hypergraph::build(cycle.n(), edges, Some(3), false)
}

pub fn linear_path(m: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return invalid("linear path needs r >= 2");
    }
    let edges: Vec<VertexSet> = (0..m)
        .map(|i| {
            [i as Vertex, i as Vertex + 1]
                .into_iter()
                .chain(range(m + 1 + i * (r - 2), r - 2))
                .collect()
        })
        .collect();
    Hypergraph::build(m + 1 + m * (r - 2), edges, Some(r), false)
}

pub fn tight_path(m: usize, r: usize) -> Result<Hypergraph> {
    if r == 0 || m == 0 {
        return invalid("tight path needs m, r >= 1");
    }
    let edges: Vec<VertexSet> = (0..m).map(|i| range(i, r).collect()).collect();
    Hypergraph::build(m + r - 1, edges, Some(r), false)
}

/// Complete `p`-partite `p`-graph with `s` vertices per part.
pub fn complete_partite(p: usize, s: usize) -> Result<Hypergraph> {
    if p == 0 || s == 0 {
        return invalid("complete partite graph needs p, s >= 1");
    }
    let mut edges: Vec<VertexSet> = vec![VertexSet::new()];
    for part in 0..p {
        edges = edges
            .into_iter()
            .flat_map(|e| {
                range(part * s, s).map(move |v| {
                    let mut e = e.clone();
                    e.insert(v);
                    e
                })
            })
            .collect();
    }
    Hypergraph::build(p * s, edges, Some(p), false)
}

/// The 4-graph whose minimum cross-cuts cannot be extended to a hosting tree.
pub fn twin_hub() -> Hypergraph {
    Hypergraph::new(
        12,
        [
            [0, 2, 3, 6],
            [0, 3, 4, 7],
            [0, 4, 5, 8],
            [1, 2, 3, 9],
            [1, 3, 4, 10],
            [1, 4, 5, 11],
        ],
    )
    .expect("fixed family")
}

/// Hosting 4-tree of [`twin_hub`]: `{12ab, 12bc, 12cd}` followed by the family.
pub fn twin_hub_host() -> Hypergraph {
    let mut edges = vec![
        VertexSet::from([0, 1, 2, 3]),
        VertexSet::from([0, 1, 3, 4]),
        VertexSet::from([0, 1, 4, 5]),
    ];
    edges.extend(twin_hub().edges().iter().cloned());
    Hypergraph::new(12, edges).expect("fixed family")
}

/// `{123, 124, 356, 456}`, relabelled from 0.
pub fn crossed_pairs() -> Hypergraph {
    Hypergraph::new(6, [[0, 1, 2], [0, 1, 3], [2, 4, 5], [3, 4, 5]]).expect("fixed family")
}

/// Named standard family; `params` supplies the integer parameters by name.
pub fn gen_standard(name: &str, params: &BTreeMap<String, usize>) -> Result<Hypergraph> {
    let get = |k: &str| {
        params.get(k).copied().ok_or_else(|| {
            crate::Error::InvalidArgument(format!("family {name} needs parameter {k}"))
        })
    };
    match name {
        "matching" => matching(get("s")?, get("r")?),
        "linear_star" => linear_star(get("p")?, get("r")?),
        "linear_cycle" => linear_cycle(get("m")?, get("r").unwrap_or(3)),
        "linear_cycle_host" => linear_cycle_host(get("m")?),
        "linear_path" => linear_path(get("m")?, get("r").unwrap_or(3)),
        "tight_path" => tight_path(get("m")?, get("r")?),
        "K_pp" | "complete_partite" => complete_partite(get("p")?, get("s")?),
        "complete" => complete(get("n")?, get("r")?),
        "S" => gen_s(get("n")?, get("r")?, get("t")?),
        "C" => gen_c(get("n")?, get("r")?, get("t")?),
        "twin_hub" => Ok(twin_hub()),
        "twin_hub_host" => Ok(twin_hub_host()),
        "crossed_pairs" => Ok(crossed_pairs()),
        other => invalid(format!("unknown family {other:?}")),
    }
}

/// Names accepted by [`gen_standard`].
pub const FAMILY_NAMES: &[&str] = &[
    "matching",
    "linear_star",
    "linear_cycle",
    "linear_cycle_host",
    "linear_path",
    "tight_path",
    "K_pp",
    "complete",
    "S",
    "C",
    "twin_hub",
    "twin_hub_host",
    "crossed_pairs",
];

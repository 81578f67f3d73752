use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{Vertex, VertexSet};

/// A hypergraph presented as an expansion of a smaller-uniformity base.
///
/// Copy `c` of base edge `b` is `base[b] ∪ labels[b][c]`; every label set has `k`
/// vertices and distinct copies use disjoint label sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    #[serde(skip)]
    pub base: Hypergraph,
    pub k: usize,
    /// Multiplicity `μ` of each base edge, aligned with `base.edges()`.
    pub multiplicity: Vec<usize>,
    /// Expansion vertices of each copy of each base edge.
    pub labels: Vec<Vec<VertexSet>>,
    /// Vertex count of the expanded hypergraph.
    pub n: usize,
}

impl Expansion {
    /// Expansion with fresh labels starting at `base.n()`.
    pub fn fresh(base: Hypergraph, k: usize, multiplicity: Vec<usize>) -> Result<Self> {
        if multiplicity.len() != base.len() || multiplicity.iter().any(|&m| m == 0) {
            return invalid("one positive multiplicity per base edge is required");
        }
        if !base.is_simple() {
            return invalid("expansion base must be simple; use multiplicities instead");
        }
        let mut next = base.n() as Vertex;
        let labels = multiplicity
            .iter()
            .map(|&m| {
                (0..m)
                    .map(|_| {
                        let set = (next..next + k as Vertex).collect();
                        next += k as Vertex;
                        set
                    })
                    .collect()
            })
            .collect();
        Ok(Expansion {
            base,
            k,
            multiplicity,
            labels,
            n: next as usize,
        })
    }

    /// True when every multiplicity is one.
    pub fn is_simple_expansion(&self) -> bool {
        self.multiplicity.iter().all(|&m| m == 1)
    }

    /// The reduction as a multi-hypergraph (each base edge repeated `μ` times).
    pub fn reduction(&self) -> Hypergraph {
        let edges = self
            .base
            .edges()
            .iter()
            .zip(&self.multiplicity)
            .flat_map(|(e, &m)| std::iter::repeat_n(e.clone(), m))
            .collect::<Vec<_>>();
        Hypergraph::build(self.base.n(), edges, self.base.uniformity(), true)
            .expect("base edges are valid")
    }
}

/// Every edge holds more than `k` vertices, at least `k` of which have degree one.
pub fn is_k_reducible(h: &Hypergraph, k: usize) -> bool {
    h.edges()
        .iter()
        .all(|e| e.len() > k && e.iter().filter(|&v| h.vertex_degree(v) == 1).count() >= k)
}

/// Deletes the `k` highest-id degree-1 vertices of every edge.
///
/// Expansion vertices are numbered after the base, so a fresh expansion reduces back
/// to its base exactly.
pub fn k_reduce(h: &Hypergraph, k: usize) -> Result<Expansion> {
    if !is_k_reducible(h, k) {
        return invalid(format!("hypergraph is not {k}-reducible"));
    }
    let mut index: BTreeMap<VertexSet, usize> = BTreeMap::new();
    let mut base_edges: Vec<VertexSet> = Vec::new();
    let mut multiplicity = Vec::new();
    let mut labels: Vec<Vec<VertexSet>> = Vec::new();
    for e in h.edges() {
        let removed: VertexSet = e
            .iter()
            .rev()
            .filter(|&v| h.vertex_degree(v) == 1)
            .take(k)
            .collect();
        let reduced = e.difference(&removed);
        let b = *index.entry(reduced.clone()).or_insert_with(|| {
            base_edges.push(reduced);
            multiplicity.push(0);
            labels.push(Vec::new());
            base_edges.len() - 1
        });
        multiplicity[b] += 1;
        labels[b].push(removed);
    }
    let r = h.uniformity().map(|r| r - k);
    let base = Hypergraph::build(h.n(), base_edges, r, false)?;
    Ok(Expansion {
        base,
        k,
        multiplicity,
        labels,
        n: h.n(),
    })
}

/// The expanded hypergraph.
pub fn expand(e: &Expansion) -> Hypergraph {
    let edges: Vec<VertexSet> = e
        .base
        .edges()
        .iter()
        .zip(&e.labels)
        .flat_map(|(b, copies)| copies.iter().map(move |l| b.union(l)))
        .collect();
    let r = e.base.uniformity().map(|r| r + e.k);
    Hypergraph::build(e.n, edges, r, false).expect("expansion vertices are disjoint")
}

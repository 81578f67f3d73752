use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::set::{Vertex, VertexSet};

/// A finite hypergraph on the vertex set `{0, .., n-1}`.
///
/// Edges are kept in insertion order; each edge is a canonical (sorted)
/// vertex set. When `multi` is false no edge appears twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    uniform: Option<usize>,
    multi: bool,
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    r: Option<usize>,
    #[serde(default)]
    multi: bool,
    edges: Vec<Vec<i64>>,
}

impl Hypergraph {
    /// Simple hypergraph; uniformity is inferred when all edges share a size.
    pub fn new<E, I>(n: usize, edges: I) -> Result<Self>
    where
        E: Into<VertexSet>,
        I: IntoIterator<Item = E>,
    {
        Self::build(n, edges.into_iter().map(Into::into).collect(), None, false)
    }

    /// Hypergraph that may repeat edges.
    pub fn new_multi<E, I>(n: usize, edges: I) -> Result<Self>
    where
        E: Into<VertexSet>,
        I: IntoIterator<Item = E>,
    {
        Self::build(n, edges.into_iter().map(Into::into).collect(), None, true)
    }

    /// Edgeless `r`-graph on `n` vertices.
    pub fn empty(n: usize, r: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
            uniform: Some(r),
            multi: false,
        }
    }

    /// Simple hypergraph from a list that may contain repeated edges; keeps first copies.
    pub fn from_edges_dedup<I: IntoIterator<Item = VertexSet>>(n: usize, edges: I) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let list: Vec<VertexSet> = edges
            .into_iter()
            .filter(|e| seen.insert(e.clone()))
            .collect();
        Self::build(n, list, None, false)
    }

    pub(crate) fn build(
        n: usize,
        edges: Vec<VertexSet>,
        r: Option<usize>,
        multi: bool,
    ) -> Result<Self> {
        for e in &edges {
            if let Some(m) = e.max() {
                if m as usize >= n {
                    return invalid(format!("vertex {m} out of range for n={n}"));
                }
            }
            if let Some(r) = r {
                if e.len() != r {
                    return invalid(format!("edge {e:?} has size {} but r={r}", e.len()));
                }
            }
        }
        if !multi {
            let mut seen = BTreeSet::new();
            for e in &edges {
                if !seen.insert(e) {
                    return invalid(format!("duplicate edge {e:?} in a simple hypergraph"));
                }
            }
        }
        let uniform = match r {
            Some(r) => Some(r),
            None => {
                let mut sizes = edges.iter().map(VertexSet::len);
                match sizes.next() {
                    Some(first) if sizes.all(|s| s == first) => Some(first),
                    _ => None,
                }
            }
        };
        Ok(Hypergraph {
            n,
            edges,
            uniform,
            multi,
        })
    }

    /// Same edges with a declared uniformity (used for possibly empty results).
    pub(crate) fn with_uniformity(mut self, r: Option<usize>) -> Self {
        if let Some(r) = r {
            if self.edges.iter().all(|e| e.len() == r) {
                self.uniform = Some(r);
            }
        }
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Uniformity `r`, if every edge has the same size (or declared for an empty graph).
    pub fn uniformity(&self) -> Option<usize> {
        self.uniform
    }

    pub fn allows_multi(&self) -> bool {
        self.multi
    }

    /// True when no edge is repeated.
    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<&VertexSet> = self.edges.iter().collect();
        set.len() == self.edges.len()
    }

    pub fn contains_edge(&self, e: &VertexSet) -> bool {
        self.edges.iter().any(|f| f == e)
    }

    /// Union of all edges (the vertices actually used).
    pub fn support(&self) -> VertexSet {
        VertexSet::from_iter_lossy(self.edges.iter().flat_map(|e| e.iter()))
    }

    /// Number of edges containing `v`.
    pub fn vertex_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// The same family without repeated edges (first copies kept, order preserved).
    pub fn simplified(&self) -> Hypergraph {
        let mut seen = BTreeSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert((*e).clone()))
            .cloned()
            .collect();
        Hypergraph {
            n: self.n,
            edges,
            uniform: self.uniform,
            multi: false,
        }
    }

    /// Edge set as a sorted set, for order-insensitive comparison.
    pub fn edge_set(&self) -> BTreeSet<VertexSet> {
        self.edges.iter().cloned().collect()
    }

    /// Edge multiset (edge → multiplicity).
    pub fn edge_multiset(&self) -> BTreeMap<VertexSet, usize> {
        let mut m = BTreeMap::new();
        for e in &self.edges {
            *m.entry(e.clone()).or_insert(0) += 1;
        }
        m
    }

    /// Order-insensitive equality of edge multisets (same `n` not required).
    pub fn same_edges(&self, other: &Hypergraph) -> bool {
        self.edge_multiset() == other.edge_multiset()
    }

    /// True when every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Hypergraph) -> bool {
        let theirs = other.edge_set();
        self.edges.iter().all(|e| theirs.contains(e))
    }

    /// Same edges on a larger (or equal) vertex range.
    pub fn with_n(&self, n: usize) -> Result<Hypergraph> {
        Self::build(n, self.edges.clone(), self.uniform, self.multi)
    }

    fn to_raw(&self) -> HypergraphJson {
        HypergraphJson {
            n: self.n,
            r: self.uniform,
            multi: self.multi,
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(i64::from).collect())
                .collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_raw()).expect("hypergraph serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Parses the interchange format `{"n", "r", "multi", "edges"}`.
    pub fn from_json(text: &str) -> Result<Hypergraph> {
        let raw: HypergraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_raw(raw)
    }

    pub fn from_json_value(value: serde_json::Value) -> Result<Hypergraph> {
        let raw: HypergraphJson =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: HypergraphJson) -> Result<Hypergraph> {
        let mut edges = Vec::with_capacity(raw.edges.len());
        for e in raw.edges {
            let mut vs = Vec::with_capacity(e.len());
            for v in e {
                if v < 0 || v as usize >= raw.n {
                    return Err(Error::Parse(format!(
                        "vertex {v} out of range for n={}",
                        raw.n
                    )));
                }
                vs.push(v as Vertex);
            }
            edges.push(VertexSet::from_distinct(vs).map_err(|e| Error::Parse(e.to_string()))?);
        }
        Self::build(raw.n, edges, raw.r, raw.multi).map_err(|e| match e {
            Error::InvalidArgument(m) => Error::Parse(m),
            other => other,
        })
    }
}

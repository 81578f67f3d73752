//! Hypergraph trees: recognition, certificates and certified transformations.
//!
//! A [`TreeCertificate`] is an edge ordering `E_1, .., E_m` together with a
//! parent map `α` such that every `E_i ∩ (E_1 ∪ .. ∪ E_{i-1}) ⊆ E_{α(i)}`.
//! Positions are 0-based throughout; position `0` has no parent.

mod recognize;
mod reduce;
mod transform;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{Vertex, VertexSet};

pub use recognize::find_tree_ordering;
pub use reduce::{expand, is_k_reducible, k_reduce, Expansion};
pub use transform::{
    compress, delete_crosscut, detach_limb, host_tree, r_partition, subtree_at, tighten, Limb,
};

/// Edge ordering plus parent function witnessing the running-intersection property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCertificate {
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    tight: bool,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    order: Vec<usize>,
    parent: BTreeMap<String, usize>,
    tight: bool,
}

impl TreeCertificate {
    /// Builds a certificate; `parent[i]` is the position of the parent of position `i`.
    ///
    /// The tight flag is derived from `h`; validity is not checked here (see [`verify_certificate`]).
    pub fn new(h: &Hypergraph, order: Vec<usize>, parent: Vec<Option<usize>>) -> Self {
        let mut cert = TreeCertificate {
            order,
            parent,
            tight: false,
        };
        cert.tight = verify_certificate(h, &cert)
            .map(|r| r.valid && r.tight)
            .unwrap_or(false);
        cert
    }

    /// Certificate of the empty hypergraph.
    pub fn empty() -> Self {
        TreeCertificate {
            order: Vec::new(),
            parent: Vec::new(),
            tight: true,
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Parent position of position `i` (`None` for the first position).
    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn is_tight(&self) -> bool {
        self.tight
    }

    /// Edge index sitting at position `i`.
    pub fn edge_at(&self, i: usize) -> usize {
        self.order[i]
    }

    /// Edges of `h` listed in certificate order.
    pub fn ordered_edges<'a>(&self, h: &'a Hypergraph) -> Vec<&'a VertexSet> {
        self.order.iter().map(|&i| h.edge(i)).collect()
    }

    /// Position of the first edge containing `x`.
    pub fn first_position_containing(&self, h: &Hypergraph, x: Vertex) -> Option<usize> {
        self.order.iter().position(|&e| h.edge(e).contains(x))
    }

    /// An equivalent certificate whose first edge is the one at position `root`.
    ///
    /// The parent map of a valid certificate is a join tree (the edges through any
    /// vertex form a connected subtree), so a breadth-first order from any node is
    /// again a running-intersection order.
    pub fn rerooted(&self, h: &Hypergraph, root: usize) -> Result<TreeCertificate> {
        let m = self.len();
        if root >= m {
            return invalid(format!("root position {root} out of range"));
        }
        let mut adj = vec![Vec::new(); m];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                adj[i].push(p);
                adj[p].push(i);
            }
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        let mut new_pos = vec![usize::MAX; m];
        let mut visit = vec![root];
        let mut parent_old = vec![None; m];
        new_pos[root] = 0;
        let mut head = 0;
        while head < visit.len() {
            let u = visit[head];
            head += 1;
            for &w in &adj[u] {
                if new_pos[w] == usize::MAX {
                    new_pos[w] = visit.len();
                    parent_old[w] = Some(u);
                    visit.push(w);
                }
            }
        }
        if visit.len() != m {
            return invalid("certificate parent map is not connected");
        }
        let order = visit.iter().map(|&old| self.order[old]).collect();
        let parent = visit
            .iter()
            .map(|&old| parent_old[old].map(|p| new_pos[p]))
            .collect();
        Ok(TreeCertificate::new(h, order, parent))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let parent = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i.to_string(), p)))
            .collect();
        serde_json::to_value(CertificateJson {
            order: self.order.clone(),
            parent,
            tight: self.tight,
        })
        .expect("certificate serializes")
    }

    /// Parses `{"order": [..], "parent": {"i": α(i)}, "tight": bool}`.
    ///
    /// The tight flag is recomputed against `h` rather than trusted.
    pub fn from_json_value(h: &Hypergraph, value: serde_json::Value) -> Result<TreeCertificate> {
        let raw: CertificateJson =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let mut parent = vec![None; raw.order.len()];
        for (k, p) in raw.parent {
            let i: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad position key {k:?}")))?;
            if i >= parent.len() {
                return Err(Error::Parse(format!("parent key {i} out of range")));
            }
            parent[i] = Some(p);
        }
        Ok(TreeCertificate::new(h, raw.order, parent))
    }
}

/// What the first-edge lemma says about one vertex that enters at position `position`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstEdgeFact {
    pub position: usize,
    /// A vertex of `E_i \ E_{α(i)}`.
    pub vertex: Vertex,
    /// `E_i` is the first edge containing `vertex`.
    pub is_first: bool,
    /// For each `y ∈ E_{α(i)} \ E_i`: whether no edge contains both `vertex` and `y`.
    pub separated: Vec<(Vertex, bool)>,
}

/// Result of checking a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub valid: bool,
    pub tight: bool,
    /// First position violating the running-intersection condition.
    pub failure: Option<usize>,
    pub facts: Vec<FirstEdgeFact>,
}

impl CertificateReport {
    /// True when every first-edge fact holds.
    pub fn first_edge_lemma_holds(&self) -> bool {
        self.facts
            .iter()
            .all(|f| f.is_first && f.separated.iter().all(|(_, ok)| *ok))
    }
}

fn check_shape(h: &Hypergraph, cert: &TreeCertificate) -> Result<()> {
    let m = h.len();
    if cert.order.len() != m || cert.parent.len() != m {
        return invalid(format!(
            "certificate covers {} positions, hypergraph has {m} edges",
            cert.order.len()
        ));
    }
    let mut seen = vec![false; m];
    for &e in &cert.order {
        if e >= m || std::mem::replace(&mut seen[e], true) {
            return invalid("certificate order is not a permutation of the edges");
        }
    }
    for (i, p) in cert.parent.iter().enumerate() {
        match (i, p) {
            (0, None) => {}
            (0, Some(_)) => return invalid("the first position cannot have a parent"),
            (_, None) => return invalid(format!("position {i} has no parent")),
            (_, Some(p)) if *p >= i => {
                return invalid(format!("parent {p} of position {i} is not earlier"))
            }
            _ => {}
        }
    }
    Ok(())
}

/// Checks the running-intersection condition and reports the first-edge facts.
pub fn verify_certificate(h: &Hypergraph, cert: &TreeCertificate) -> Result<CertificateReport> {
    check_shape(h, cert)?;
    let edges = cert.ordered_edges(h);
    let mut union = VertexSet::new();
    let mut failure = None;
    let mut facts = Vec::new();
    let mut tight = h.uniformity().is_some();
    for (i, e) in edges.iter().enumerate() {
        if let Some(p) = cert.parent[i] {
            let par = edges[p];
            if failure.is_none() && !e.intersection(&union).is_subset(par) {
                failure = Some(i);
            }
            if let Some(r) = h.uniformity() {
                if e.intersection(par).len() + 1 != r {
                    tight = false;
                }
            }
            for x in e.difference(par).iter() {
                let is_first = !union.contains(x);
                let separated = par
                    .difference(e)
                    .iter()
                    .map(|y| (y, !h.edges().iter().any(|f| f.contains(x) && f.contains(y))))
                    .collect();
                facts.push(FirstEdgeFact {
                    position: i,
                    vertex: x,
                    is_first,
                    separated,
                });
            }
        }
        union = union.union(e);
    }
    let valid = failure.is_none();
    Ok(CertificateReport {
        valid,
        tight: valid && tight,
        failure,
        facts,
    })
}

/// Keeps the first copy of each repeated edge; parents are redirected to first copies.
pub(crate) fn dedup_certified(
    h: &Hypergraph,
    cert: &TreeCertificate,
) -> (Hypergraph, TreeCertificate) {
    let mut first_pos: BTreeMap<&VertexSet, usize> = BTreeMap::new();
    let mut kept = Vec::new();
    let mut new_of_old = vec![0; cert.len()];
    let mut parent = Vec::new();
    for (i, &e) in cert.order.iter().enumerate() {
        let edge = h.edge(e);
        if let Some(&k) = first_pos.get(edge) {
            new_of_old[i] = k;
            continue;
        }
        let k = kept.len();
        first_pos.insert(edge, k);
        new_of_old[i] = k;
        kept.push(edge.clone());
        parent.push(cert.parent[i].map(|p| new_of_old[p]));
    }
    let g = Hypergraph::build(h.n(), kept, h.uniformity(), false).expect("subset of a valid graph");
    let order = (0..g.len()).collect();
    let cert = TreeCertificate::new(&g, order, parent);
    (g, cert)
}

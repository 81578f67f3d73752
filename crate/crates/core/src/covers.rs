//! Exact vertex-cover number, cross-cut number and minimum cross-cut enumeration.
//!
//! Both searches run on bitmasks over the support of the hypergraph (at most
//! [`MAX_SEARCH_VERTICES`](crate::MAX_SEARCH_VERTICES) vertices), relabelled in
//! increasing order so that lexicographic order on witnesses is preserved.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{mask_iter, Mask, Vertex, VertexSet, MAX_SEARCH_VERTICES};

/// A set meeting every edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub vertices: VertexSet,
    pub optimal: bool,
}

impl Cover {
    pub fn value(&self) -> usize {
        self.vertices.len()
    }
}

/// A set containing exactly one vertex of each edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CrossCut {
    pub vertices: VertexSet,
    pub optimal: bool,
}

impl CrossCut {
    /// Wraps `s` after checking it is a cross-cut of `h`; not claimed optimal.
    pub fn new(h: &Hypergraph, s: VertexSet) -> Result<Self> {
        if !is_crosscut(h, &s) {
            return invalid("not a cross-cut");
        }
        Ok(CrossCut {
            vertices: s,
            optimal: false,
        })
    }

    pub fn value(&self) -> usize {
        self.vertices.len()
    }
}

pub fn is_cover(h: &Hypergraph, s: &VertexSet) -> bool {
    h.edges().iter().all(|e| !e.is_disjoint(s))
}

pub fn is_crosscut(h: &Hypergraph, s: &VertexSet) -> bool {
    h.edges().iter().all(|e| e.intersection(s).len() == 1)
}

/// Distinct edges of `h` as masks over its relabelled support.
struct Instance {
    labels: Vec<Vertex>,
    edges: Vec<Mask>,
}

impl Instance {
    fn new(h: &Hypergraph) -> Result<Self> {
        if h.edges().iter().any(|e| e.is_empty()) {
            return invalid("the empty set is an edge");
        }
        let labels: Vec<Vertex> = h.support().iter().collect();
        if labels.len() > MAX_SEARCH_VERTICES {
            return Err(Error::TooLarge(format!(
                "cover search supports at most {MAX_SEARCH_VERTICES} vertices, got {}",
                labels.len()
            )));
        }
        let mut edges: Vec<Mask> = h
            .simplified()
            .edges()
            .iter()
            .map(|e| {
                e.iter()
                    .fold(0, |m, v| m | 1 << labels.binary_search(&v).unwrap())
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Instance { labels, edges })
    }

    fn set(&self, mask: Mask) -> VertexSet {
        mask_iter(mask).map(|i| self.labels[i as usize]).collect()
    }

    fn all(&self) -> Mask {
        match self.labels.len() {
            128 => Mask::MAX,
            k => (1 << k) - 1,
        }
    }

    /// Vertices with label above `i`.
    fn above(&self, i: usize) -> Mask {
        match i + 1 {
            128 => 0,
            j => self.all() & !((1 << j) - 1),
        }
    }
}

/// Number of pairwise disjoint edges found greedily among `open` (restricted to `avail`).
fn packing_bound(open: &[Mask], avail: Mask) -> usize {
    let mut used: Mask = 0;
    let mut count = 0;
    for &e in open {
        let e = e & avail;
        if e & used == 0 {
            used |= e;
            count += 1;
        }
    }
    count
}

fn fewest(open: &[Mask], avail: Mask) -> Mask {
    open.iter()
        .map(|&e| e & avail)
        .min_by_key(|e| e.count_ones())
        .expect("nonempty")
}

/// Is there a set of at most `k` vertices from `avail` meeting every edge of `open`?
fn cover_exists(open: &[Mask], avail: Mask, k: usize) -> bool {
    if open.is_empty() {
        return true;
    }
    if k == 0 || packing_bound(open, avail) > k {
        return false;
    }
    let e = fewest(open, avail);
    let mut avail = avail;
    for v in mask_iter(e) {
        let bit = 1 << v;
        avail &= !bit;
        let rest: Vec<Mask> = open.iter().copied().filter(|f| f & bit == 0).collect();
        if cover_exists(&rest, avail, k - 1) {
            return true;
        }
    }
    false
}

/// Visits every set `chosen ∪ X` with `X ⊆ avail`, `|X| <= k`, hitting each edge of
/// `open` exactly once, each exactly once; `visit` returns true to stop.
fn exact_search(
    open: &[Mask],
    avail: Mask,
    k: usize,
    chosen: Mask,
    visit: &mut impl FnMut(Mask) -> bool,
) -> bool {
    if open.is_empty() {
        return visit(chosen);
    }
    if k == 0 || packing_bound(open, avail) > k {
        return false;
    }
    let e = fewest(open, avail);
    let mut avail = avail;
    for v in mask_iter(e) {
        let bit = 1 << v;
        avail &= !bit;
        let (hit, rest): (Vec<Mask>, Vec<Mask>) = open.iter().partition(|&&f| f & bit != 0);
        let blocked = hit.iter().fold(0, |m, f| m | f);
        if exact_search(&rest, avail & !blocked, k - 1, chosen | bit, visit) {
            return true;
        }
    }
    false
}

/// Edges not met by `chosen`, and the vertices of met edges, or `None` if some
/// edge is met twice.
fn exact_state(edges: &[Mask], chosen: Mask) -> Option<(Vec<Mask>, Mask)> {
    let mut open = Vec::new();
    let mut blocked = 0;
    for &e in edges {
        match (e & chosen).count_ones() {
            0 => open.push(e),
            1 => blocked |= e,
            _ => return None,
        }
    }
    Some((open, blocked))
}

/// Minimum vertex cover, lexicographically least among optima.
pub fn tau(h: &Hypergraph) -> Result<Cover> {
    let inst = Instance::new(h)?;
    let all = inst.all();
    let k = (0..=inst.labels.len())
        .find(|&k| cover_exists(&inst.edges, all, k))
        .expect("the support is a cover");
    // fix vertices greedily, smallest first
    let mut chosen: Mask = 0;
    for slot in 0..k {
        let c = (0..inst.labels.len())
            .filter(|&c| chosen >> c == 0)
            .find(|&c| {
                let with = chosen | 1 << c;
                let open: Vec<Mask> = inst
                    .edges
                    .iter()
                    .copied()
                    .filter(|e| e & with == 0)
                    .collect();
                cover_exists(&open, inst.above(c), k - slot - 1)
            })
            .expect("a cover of size k extends the prefix");
        chosen |= 1 << c;
        let open: Vec<Mask> = inst
            .edges
            .iter()
            .copied()
            .filter(|e| e & chosen == 0)
            .collect();
        if open.is_empty() {
            break;
        }
    }
    Ok(Cover {
        vertices: inst.set(chosen),
        optimal: true,
    })
}

/// Minimum cross-cut, lexicographically least among optima; `None` when `h` has none.
pub fn sigma(h: &Hypergraph) -> Result<Option<CrossCut>> {
    let inst = Instance::new(h)?;
    let Some(k) = sigma_value(&inst) else {
        return Ok(None);
    };
    let mut chosen: Mask = 0;
    for slot in 0..k {
        if exact_state(&inst.edges, chosen).is_some_and(|(open, _)| open.is_empty()) {
            break;
        }
        let c = (0..inst.labels.len())
            .filter(|&c| chosen >> c == 0)
            .find(|&c| {
                let Some((open, blocked)) = exact_state(&inst.edges, chosen | 1 << c) else {
                    return false;
                };
                exact_search(
                    &open,
                    inst.above(c) & !blocked,
                    k - slot - 1,
                    0,
                    &mut |_| true,
                )
            })
            .expect("a cross-cut of size k extends the prefix");
        chosen |= 1 << c;
    }
    Ok(Some(CrossCut {
        vertices: inst.set(chosen),
        optimal: true,
    }))
}

fn sigma_value(inst: &Instance) -> Option<usize> {
    let all = inst.all();
    let m = inst.edges.len();
    if !exact_search(&inst.edges, all, m, 0, &mut |_| true) {
        return None;
    }
    (0..=m).find(|&k| exact_search(&inst.edges, all, k, 0, &mut |_| true))
}

/// All minimum cross-cuts, sorted; empty when there is none.
pub fn enumerate_min_crosscuts(h: &Hypergraph) -> Result<Vec<CrossCut>> {
    let inst = Instance::new(h)?;
    let Some(k) = sigma_value(&inst) else {
        return Ok(Vec::new());
    };
    let mut found = Vec::new();
    exact_search(&inst.edges, inst.all(), k, 0, &mut |m| {
        found.push(CrossCut {
            vertices: inst.set(m),
            optimal: true,
        });
        false
    });
    found.sort();
    Ok(found)
}

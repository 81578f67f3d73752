use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a hypergraph on `n` vertices are `0..n`.
pub type Vertex = u32;

/// Bitmask over vertex ids, used by the search kernels.
pub(crate) type Mask = u128;

/// Largest vertex count the bitmask-backed search kernels accept.
pub const MAX_SEARCH_VERTICES: usize = 128;

/// A finite set of vertices, stored as a sorted, duplicate-free list.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary (possibly unsorted, repeated) ids.
    pub fn from_iter_lossy<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Builds a set from a list that must not repeat a vertex.
    pub fn from_distinct(mut v: Vec<Vertex>) -> Result<Self> {
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("repeated vertex in {v:?}")));
        }
        Ok(VertexSet(v))
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter();
        'outer: for x in &self.0 {
            for y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|v| other.contains(*v))
                .collect(),
        )
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_iter_lossy(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    /// Replaces `from` by `to`; no-op when `from` is absent.
    pub fn replace(&self, from: Vertex, to: Vertex) -> VertexSet {
        if !self.contains(from) {
            return self.clone();
        }
        VertexSet::from_iter_lossy(self.iter().map(|v| if v == from { to } else { v }))
    }

    /// All subsets of size `k`, in lexicographic order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if k > self.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        let m = self.len();
        loop {
            out.push(VertexSet(idx.iter().map(|&i| self.0[i]).collect()));
            let mut i = k;
            while i > 0 && idx[i - 1] == i - 1 + m - k {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// All subsets (including the empty set and the set itself).
    pub fn all_subsets(&self) -> Vec<VertexSet> {
        (0..=self.len())
            .flat_map(|k| self.subsets_of_size(k))
            .collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        VertexSet::from_iter_lossy(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        VertexSet::from_iter_lossy(v)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_iter_lossy(iter)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

pub(crate) fn mask_iter(mut m: Mask) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros();
            m &= m - 1;
            Some(v)
        }
    })
}

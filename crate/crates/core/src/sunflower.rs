//! Sunflower (delta-system) search: maximum packing of pairwise-disjoint petals.

use std::collections::BTreeMap;

use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// Distinct petals `E \ D` of edges `E ⊋ D`, each with the first edge index producing it.
fn petals(f: &Hypergraph, kernel: &VertexSet) -> Vec<(VertexSet, usize)> {
    let mut seen: BTreeMap<VertexSet, usize> = BTreeMap::new();
    for (i, e) in f.edges().iter().enumerate() {
        if e.len() > kernel.len() && kernel.is_subset(e) {
            seen.entry(e.difference(kernel)).or_insert(i);
        }
    }
    let mut out: Vec<(VertexSet, usize)> = seen.into_iter().collect();
    // small petals first: they block fewer others
    out.sort_by_key(|(p, i)| (p.len(), *i));
    out
}

struct Packing<'a> {
    petals: &'a [(VertexSet, usize)],
    cap: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Packing<'_> {
    fn search(&mut self, candidates: &[usize]) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() >= self.cap {
            return;
        }
        for (pos, &c) in candidates.iter().enumerate() {
            // bound: even taking every remaining candidate cannot beat the incumbent
            if self.chosen.len() + (candidates.len() - pos) <= self.best.len() {
                return;
            }
            let petal = &self.petals[c].0;
            let rest: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&o| self.petals[o].0.is_disjoint(petal))
                .collect();
            self.chosen.push(c);
            self.search(&rest);
            self.chosen.pop();
            if self.best.len() >= self.cap {
                return;
            }
        }
    }
}

/// Up to `cap` edges forming a sunflower with kernel `kernel`, as edge indices.
/// The result is maximum among sunflowers of size at most `cap`.
pub(crate) fn max_sunflower(f: &Hypergraph, kernel: &VertexSet, cap: usize) -> Vec<usize> {
    let petals = petals(f, kernel);
    let mut p = Packing {
        petals: &petals,
        cap,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    let all: Vec<usize> = (0..petals.len()).collect();
    p.search(&all);
    let mut idx: Vec<usize> = p.best.iter().map(|&c| petals[c].1).collect();
    idx.sort_unstable();
    idx
}

//! Exact Turán numbers for tiny `n` by branch and bound.
//!
//! The `r`-subsets of `[n]` are indexed in colex order and families are bitmasks over
//! them. Every copy of `H` in the complete `r`-graph is listed once up front, so
//! adding an `r`-set only needs the copies through that set. Search includes before
//! it excludes; a node is cut when the current family plus every still-addable set,
//! minus one set per disjoint copy that would be completed, cannot beat the best.

use std::collections::HashSet;

use serde::Serialize;

use crate::combinatorics::{binomial, colex_subsets};
use crate::covers::{sigma, tau};
use crate::embedding::is_free;
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{mask_iter, Mask, Vertex, VertexSet};

use super::constructions::{gen_c, gen_s};

/// Largest universe of `r`-sets the oracle accepts.
pub const MAX_ORACLE_SETS: u128 = 128;
const MAX_PLACEMENTS: u128 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    pub witness: Hypergraph,
    /// Branch-and-bound nodes visited.
    pub nodes: u64,
    /// False when the budget ran out; `value` is then only a lower bound.
    pub certified: bool,
    /// Copies of `H` in the complete `r`-graph on `[n]`.
    pub copies: usize,
}

/// Position of `e` in the colex order of `r`-sets.
fn colex_rank(e: &VertexSet) -> usize {
    e.iter()
        .enumerate()
        .map(|(i, c)| binomial(c as u64, i as u64 + 1) as usize)
        .sum()
}

fn family_mask(f: &Hypergraph) -> Mask {
    f.edges().iter().fold(0, |m, e| m | 1 << colex_rank(e))
}

/// All copies of `h` in the complete `r`-graph on `n` vertices, as masks.
fn copies(h: &Hypergraph, n: usize) -> Result<Vec<Mask>> {
    let verts: Vec<Vertex> = h.support().iter().collect();
    let v = verts.len();
    if v > n {
        return Ok(Vec::new());
    }
    let placements: u128 = (0..v).map(|i| (n - i) as u128).product();
    if placements > MAX_PLACEMENTS {
        return Err(Error::TooLarge(format!(
            "{placements} placements of H are too many to list"
        )));
    }
    let edges: Vec<Vec<usize>> = h
        .simplified()
        .edges()
        .iter()
        .map(|e| e.iter().map(|x| verts.binary_search(&x).unwrap()).collect())
        .collect();
    let mut found = HashSet::new();
    let mut image = vec![0 as Vertex; v];
    let mut used = vec![false; n];
    fn place(
        i: usize,
        image: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
        edges: &[Vec<usize>],
        found: &mut HashSet<Mask>,
    ) {
        if i == image.len() {
            let m = edges.iter().fold(0, |m, e| {
                m | 1 << colex_rank(&e.iter().map(|&k| image[k]).collect())
            });
            found.insert(m);
            return;
        }
        for c in 0..used.len() {
            if !used[c] {
                used[c] = true;
                image[i] = c as Vertex;
                place(i + 1, image, used, edges, found);
                used[c] = false;
            }
        }
    }
    place(0, &mut image, &mut used, &edges, &mut found);
    let mut out: Vec<Mask> = found.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

struct Search<'a> {
    copies: &'a [Mask],
    universe: usize,
    best: usize,
    best_family: Mask,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl Search<'_> {
    fn upper_bound(&self, family: Mask, count: usize, undecided: Mask) -> (usize, Mask) {
        let mut blocked: Mask = 0;
        for &c in self.copies {
            let rest = c & !family;
            if rest.count_ones() == 1 {
                blocked |= rest;
            }
        }
        let avail = undecided & !blocked;
        let mut used: Mask = 0;
        let mut packed = 0;
        for &c in self.copies {
            let rest = c & !family;
            if rest & !avail == 0 && rest & used == 0 {
                used |= rest;
                packed += 1;
            }
        }
        (count + avail.count_ones() as usize - packed, avail)
    }

    fn run(&mut self, from: usize, family: Mask, count: usize) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return;
        }
        if count > self.best {
            self.best = count;
            self.best_family = family;
        }
        let undecided: Mask = if from >= 128 {
            0
        } else {
            !((1 << from) - 1) & universe_mask(self.universe)
        };
        let (bound, avail) = self.upper_bound(family, count, undecided);
        if bound <= self.best || avail == 0 {
            return;
        }
        let j = avail.trailing_zeros() as usize;
        self.run(j + 1, family | 1 << j, count + 1);
        self.run(j + 1, family, count);
    }
}

fn universe_mask(size: usize) -> Mask {
    if size == 128 {
        Mask::MAX
    } else {
        (1 << size) - 1
    }
}

/// `ex(n, H)` with a maximum `H`-free witness.
///
/// The search starts from the larger of the cover and cross-cut constructions and only
/// replaces it by a strictly larger family. With a `budget` (in nodes) that runs out,
/// the best family found is returned with `certified = false`.
pub fn turan_oracle(
    n: usize,
    r: usize,
    h: &Hypergraph,
    budget: Option<u64>,
) -> Result<OracleResult> {
    if r == 0 || r > n {
        return invalid(format!("need 1 <= r <= n, got n={n}, r={r}"));
    }
    if h.is_empty() || h.uniformity() != Some(r) {
        return invalid("H must be a nonempty r-graph");
    }
    let universe = binomial(n as u64, r as u64);
    if universe > MAX_ORACLE_SETS {
        return Err(Error::TooLarge(format!(
            "C({n},{r}) = {universe} exceeds the oracle limit of {MAX_ORACLE_SETS} sets"
        )));
    }
    let universe = universe as usize;
    let copies = copies(h, n)?;
    let contains_copy = |m: Mask| copies.iter().any(|&c| c & m == c);

    let mut seeds = Vec::new();
    let t = tau(h)?.value() - 1;
    if t <= n {
        seeds.push(family_mask(&gen_s(n, r, t)?));
    }
    if let Some(s) = sigma(h)? {
        if s.value() - 1 <= n {
            seeds.push(family_mask(&gen_c(n, r, s.value() - 1)?));
        }
    }
    // ties go to the cover construction, listed first
    let mut seed: Mask = 0;
    for m in seeds {
        if !contains_copy(m) && m.count_ones() > seed.count_ones() {
            seed = m;
        }
    }

    let mut search = Search {
        copies: &copies,
        universe,
        best: seed.count_ones() as usize,
        best_family: seed,
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.run(0, 0, 0);

    let sets = colex_subsets(n, r);
    let mut edges: Vec<VertexSet> = mask_iter(search.best_family)
        .map(|i| sets[i as usize].clone())
        .collect();
    edges.sort();
    let witness = Hypergraph::build(n, edges, Some(r), false)?;
    if !is_free(&witness, h)? {
        return Err(Error::InvalidArgument(
            "internal error: oracle witness contains H".into(),
        ));
    }
    Ok(OracleResult {
        value: witness.len(),
        witness,
        nodes: search.nodes,
        certified: !search.exhausted,
        copies: copies.len(),
    })
}

//! Random fixtures shared by unit tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::Hypergraph;
use crate::set::{Vertex, VertexSet};

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random `r`-tree with `m` edges, shuffled edge order and relabelled vertices.
///
/// Each new edge keeps a random part of a random earlier edge (exactly `r - 1`
/// vertices when `tight`) and fills up with fresh vertices.
pub(crate) fn random_tree(rng: &mut ChaCha8Rng, r: usize, m: usize, tight: bool) -> Hypergraph {
    let mut edges: Vec<VertexSet> = Vec::new();
    let mut next: Vertex = 0;
    let fresh = |k: usize, next: &mut Vertex| -> Vec<Vertex> {
        let out = (*next..*next + k as Vertex).collect();
        *next += k as Vertex;
        out
    };
    for i in 0..m {
        let mut e: Vec<Vertex> = if i == 0 {
            Vec::new()
        } else {
            let mut par: Vec<Vertex> = edges[rng.gen_range(0..i)].iter().collect();
            par.shuffle(rng);
            let keep = if tight { r - 1 } else { rng.gen_range(0..r) };
            par.truncate(keep);
            par
        };
        let missing = r - e.len();
        e.extend(fresh(missing, &mut next));
        edges.push(e.into_iter().collect());
    }
    let n = next as usize;
    let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
    perm.shuffle(rng);
    let mut edges: Vec<VertexSet> = edges
        .iter()
        .map(|e| e.iter().map(|v| perm[v as usize]).collect())
        .collect();
    edges.shuffle(rng);
    Hypergraph::build(n, edges, Some(r), false).expect("fresh vertices keep edges distinct")
}

/// Random `r`-uniform simple hypergraph on `n` vertices with edge probability `p`.
pub(crate) fn random_uniform(rng: &mut ChaCha8Rng, n: usize, r: usize, p: f64) -> Hypergraph {
    let edges: Vec<VertexSet> = crate::combinatorics::lex_subsets(n, r)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Hypergraph::build(n, edges, Some(r), false).unwrap()
}

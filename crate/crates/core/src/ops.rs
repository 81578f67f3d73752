//! Shadows, degrees, kernel degrees, links, products, complements and traces.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::{binomial_real, lex_subsets};
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{Vertex, VertexSet};
use crate::sunflower::max_sunflower;

/// Outcome of the real-valued Kruskal–Katona (Lovász) comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KkReport {
    /// Real `x >= r-1` with `C(x, r) = |F|`.
    pub x: f64,
    /// `C(x, p)`.
    pub bound: f64,
    /// `|∂_p F|`.
    pub shadow: usize,
    pub holds: bool,
}

const KK_X_TOLERANCE: f64 = 1e-9;
const KK_SLACK: f64 = 1e-6;

fn sorted_graph(n: usize, edges: BTreeSet<VertexSet>, r: Option<usize>) -> Hypergraph {
    Hypergraph::build(n, edges.into_iter().collect(), None, false)
        .expect("derived edges stay in range")
        .with_uniformity(r)
}

impl Hypergraph {
    /// The `p`-shadow: every `p`-set contained in some edge.
    pub fn shadow(&self, p: usize) -> Result<Hypergraph> {
        if p == 0 {
            return invalid("shadow size must be positive");
        }
        if let Some(e) = self.edges().iter().find(|e| e.len() < p) {
            return invalid(format!("p={p} exceeds the size of edge {e:?}"));
        }
        let out: BTreeSet<VertexSet> = self
            .edges()
            .iter()
            .flat_map(|e| e.subsets_of_size(p))
            .collect();
        Ok(sorted_graph(self.n(), out, Some(p)))
    }

    /// Number of edges containing `d`, counted with multiplicity.
    pub fn degree(&self, d: &VertexSet) -> usize {
        self.edges().iter().filter(|e| d.is_subset(e)).count()
    }

    /// Largest `s <= cap` such that some `s`-star has kernel `d`.
    pub fn kernel_degree(&self, d: &VertexSet, cap: usize) -> usize {
        if cap == 0 {
            return 0;
        }
        max_sunflower(self, d, cap).len()
    }

    /// Kernels of sunflowers of size at least `s`, optionally only those of size `p`.
    ///
    /// Only subsets of edges are candidates: a kernel of a star with nonempty
    /// petals is a proper subset of each of its edges.
    pub fn kernel_graph(&self, s: usize, p: Option<usize>) -> Result<Hypergraph> {
        if s == 0 {
            return invalid("kernel graph threshold must be positive");
        }
        let mut candidates = BTreeSet::new();
        for e in self.edges() {
            let sizes: Vec<usize> = match p {
                Some(p) if p < e.len() => vec![p],
                Some(_) => vec![],
                None => (0..e.len()).collect(),
            };
            for k in sizes {
                candidates.extend(e.subsets_of_size(k));
            }
        }
        let kept: BTreeSet<VertexSet> = candidates
            .into_iter()
            .filter(|d| self.kernel_degree(d, s) >= s)
            .collect();
        Ok(sorted_graph(self.n(), kept, p))
    }

    /// Link of `x`: `{E \ {x} : x ∈ E}`.
    pub fn link(&self, x: Vertex) -> Hypergraph {
        let out: BTreeSet<VertexSet> = self
            .edges()
            .iter()
            .filter(|e| e.contains(x))
            .map(|e| {
                let mut d = e.clone();
                d.remove(x);
                d
            })
            .collect();
        sorted_graph(
            self.n(),
            out,
            self.uniformity().map(|r| r.saturating_sub(1)),
        )
    }

    /// Common link of `a`: sets `D` disjoint from `a` with `D ∪ {v}` an edge for every `v ∈ a`.
    pub fn common_link(&self, a: &VertexSet) -> Result<Hypergraph> {
        let mut members = a.iter();
        let Some(first) = members.next() else {
            return invalid("common link needs a nonempty vertex set");
        };
        let mut acc: BTreeSet<VertexSet> = self
            .link(first)
            .edge_set()
            .into_iter()
            .filter(|d| d.is_disjoint(a))
            .collect();
        for v in members {
            let lv = self.link(v).edge_set();
            acc.retain(|d| lv.contains(d));
        }
        Ok(sorted_graph(
            self.n(),
            acc,
            self.uniformity().map(|r| r.saturating_sub(1)),
        ))
    }

    /// Complement within `C([n], r)`.
    pub fn complement(&self) -> Result<Hypergraph> {
        let Some(r) = self.uniformity() else {
            return invalid("complement needs a uniform hypergraph");
        };
        if !self.is_simple() {
            return invalid("complement needs a simple hypergraph");
        }
        let present = self.edge_set();
        let out: Vec<VertexSet> = lex_subsets(self.n(), r)
            .into_iter()
            .filter(|e| !present.contains(e))
            .collect();
        Ok(Hypergraph::build(self.n(), out, Some(r), false).expect("r-subsets of [n]"))
    }

    /// Trace on `s`: `{E ∩ S}` with duplicates and the empty set removed.
    pub fn trace(&self, s: &VertexSet) -> Hypergraph {
        let out: BTreeSet<VertexSet> = self
            .edges()
            .iter()
            .map(|e| e.intersection(s))
            .filter(|e| !e.is_empty())
            .collect();
        sorted_graph(self.n(), out, None)
    }

    /// `F - S`: the trace on the complement of `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Hypergraph {
        let keep: VertexSet = (0..self.n() as Vertex)
            .filter(|v| !s.contains(*v))
            .collect();
        self.trace(&keep)
    }

    /// Minimum degree over the `i`-shadow.
    pub fn min_shadow_degree(&self, i: usize) -> Result<usize> {
        if self.is_empty() {
            return invalid("minimum shadow degree of an empty family");
        }
        if self.edges().iter().any(|e| e.len() <= i) {
            return invalid(format!("i={i} must be smaller than every edge size"));
        }
        let sh = self.shadow(i)?;
        Ok(sh.edges().iter().map(|d| self.degree(d)).min().unwrap_or(0))
    }

    /// Compares `|∂_p F|` with `C(x, p)` where `|F| = C(x, r)`.
    pub fn kk_check(&self, p: usize) -> Result<KkReport> {
        let Some(r) = self.uniformity() else {
            return invalid("Kruskal–Katona check needs a uniform family");
        };
        if self.is_empty() || !self.is_simple() {
            return invalid("Kruskal–Katona check needs a nonempty simple family");
        }
        if p == 0 || p >= r {
            return invalid(format!("p={p} must satisfy 1 <= p <= r-1 = {}", r - 1));
        }
        let target = self.len() as f64;
        let x = solve_binomial(target, r as u32);
        let bound = binomial_real(x, p as u32);
        let shadow = self.shadow(p)?.len();
        Ok(KkReport {
            x,
            bound,
            shadow,
            holds: shadow as f64 >= bound - KK_SLACK,
        })
    }
}

/// Real `x >= r-1` with `C(x, r) = target`, by bisection.
fn solve_binomial(target: f64, r: u32) -> f64 {
    let mut lo = r as f64 - 1.0;
    let mut hi = r as f64;
    while binomial_real(hi, r) < target {
        hi = lo + 2.0 * (hi - lo);
    }
    while hi - lo > KK_X_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if binomial_real(mid, r) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `{A ∪ B : A ∈ a, B ∈ b}`, deduplicated.
pub fn product(a: &Hypergraph, b: &Hypergraph) -> Hypergraph {
    let out: BTreeSet<VertexSet> = a
        .edges()
        .iter()
        .flat_map(|x| b.edges().iter().map(move |y| x.union(y)))
        .collect();
    sorted_graph(a.n().max(b.n()), out, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    fn hg(n: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }
    fn set(v: &[u32]) -> VertexSet {
        VertexSet::from(v.to_vec())
    }
    fn edges_of(h: &Hypergraph) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = h.edges().iter().map(|e| e.as_slice().to_vec()).collect();
        v.sort();
        v
    }
    fn t3() -> Hypergraph {
        hg(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]])
    }
    fn k35() -> Hypergraph {
        Hypergraph::new(5, lex_subsets(5, 3)).unwrap()
    }
    fn m2() -> Hypergraph {
        hg(6, &[&[0, 1, 2], &[3, 4, 5]])
    }
    fn l33() -> Hypergraph {
        hg(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]])
    }

    /// Independent oracle: largest subfamily of edges forming a sunflower with kernel `d`.
    fn brute_kernel_degree(f: &Hypergraph, d: &VertexSet, cap: usize) -> usize {
        let through: Vec<&VertexSet> = f.edges().iter().filter(|e| d.is_subset(e)).collect();
        let mut best = 0;
        for mask in 0u32..(1 << through.len()) {
            let chosen: Vec<&VertexSet> = (0..through.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| through[i])
                .collect();
            let petals_ok = chosen.iter().all(|e| e.len() > d.len());
            let pairwise = chosen
                .iter()
                .enumerate()
                .all(|(i, a)| chosen[i + 1..].iter().all(|b| a.intersection(b) == *d));
            if petals_ok && pairwise {
                best = best.max(chosen.len());
            }
        }
        best.min(cap)
    }

    #[test]
    fn shadow_examples() {
        let s = t3().shadow(2).unwrap();
        assert_eq!(
            edges_of(&s),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(k35().shadow(2).unwrap().len(), 10);
        assert!(m2().shadow(3).unwrap().same_edges(&m2()));
        assert!(t3().shadow(4).is_err());
        assert!(t3().shadow(0).is_err());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(t3().degree(&set(&[2, 3])), 2);
        assert_eq!(k35().degree(&set(&[0, 1])), 3);
        assert_eq!(m2().degree(&set(&[0, 3])), 0);
        let multi = Hypergraph::new_multi(3, [vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(multi.degree(&set(&[0])), 2);
    }

    #[test]
    fn kernel_degree_examples() {
        assert_eq!(l33().kernel_degree(&set(&[0]), 5), 3);
        assert_eq!(brute_kernel_degree(&t3(), &set(&[2]), 5), 2);
        assert_eq!(t3().kernel_degree(&set(&[2]), 5), 2);
        assert_eq!(m2().kernel_degree(&set(&[0, 3]), 5), 0);
        assert_eq!(l33().kernel_degree(&set(&[0]), 2), 2);
        assert_eq!(k35().kernel_degree(&VertexSet::new(), 5), 1);
    }

    #[test]
    fn kernel_degree_matches_brute_force() {
        for f in [t3(), k35(), m2(), l33()] {
            for d in f.support().all_subsets() {
                for cap in 1..5 {
                    assert_eq!(f.kernel_degree(&d, cap), brute_kernel_degree(&f, &d, cap));
                }
            }
        }
    }

    #[test]
    fn kernel_graph_examples() {
        assert_eq!(
            edges_of(&l33().kernel_graph(3, Some(1)).unwrap()),
            vec![vec![0]]
        );
        assert!(m2().kernel_graph(2, Some(1)).unwrap().is_empty());
        assert_eq!(k35().kernel_graph(3, Some(2)).unwrap().len(), 10);
        // two disjoint edges: the empty kernel carries a 2-star
        assert_eq!(
            edges_of(&m2().kernel_graph(2, None).unwrap()),
            vec![Vec::<u32>::new()]
        );
        assert!(t3().kernel_graph(0, None).is_err());
    }

    #[test]
    fn link_and_common_link_examples() {
        assert_eq!(
            edges_of(&t3().link(2)),
            vec![vec![0, 1], vec![1, 3], vec![3, 4]]
        );
        assert_eq!(
            edges_of(&k35().common_link(&set(&[0, 1])).unwrap()),
            vec![vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert!(m2().common_link(&set(&[0, 3])).unwrap().is_empty());
        assert!(m2().common_link(&VertexSet::new()).is_err());
    }

    #[test]
    fn product_examples() {
        let a = hg(3, &[&[0]]);
        assert_eq!(
            edges_of(&product(&a, &hg(3, &[&[1, 2]]))),
            vec![vec![0, 1, 2]]
        );
        let a2 = hg(4, &[&[0], &[1]]);
        assert_eq!(
            edges_of(&product(&a2, &hg(4, &[&[2, 3]]))),
            vec![vec![0, 2, 3], vec![1, 2, 3]]
        );
        assert_eq!(edges_of(&product(&a, &hg(3, &[&[0, 1]]))), vec![vec![0, 1]]);
    }

    #[test]
    fn complement_examples() {
        assert!(k35().complement().unwrap().is_empty());
        assert!(Hypergraph::empty(5, 3)
            .complement()
            .unwrap()
            .same_edges(&k35()));
        assert_eq!(m2().complement().unwrap().len() as u128, binomial(6, 3) - 2);
        let mixed = hg(4, &[&[0, 1], &[1, 2, 3]]);
        assert!(mixed.complement().is_err());
        let multi = Hypergraph::new_multi(3, [vec![0, 1], vec![0, 1]]).unwrap();
        assert!(multi.complement().is_err());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(
            edges_of(&t3().trace(&set(&[1, 2, 3]))),
            vec![vec![1, 2], vec![1, 2, 3], vec![2, 3]]
        );
        assert_eq!(
            edges_of(&t3().remove_vertices(&set(&[2]))),
            vec![vec![0, 1], vec![1, 3], vec![3, 4]]
        );
        assert!(t3().trace(&set(&[0, 1, 2, 3, 4])).same_edges(&t3()));
        // disjoint edges vanish rather than becoming the empty set
        assert_eq!(edges_of(&m2().trace(&set(&[0]))), vec![vec![0]]);
    }

    #[test]
    fn min_shadow_degree_examples() {
        assert_eq!(t3().min_shadow_degree(2).unwrap(), 1);
        assert_eq!(k35().min_shadow_degree(2).unwrap(), 3);
        assert_eq!(m2().min_shadow_degree(1).unwrap(), 1);
        assert!(Hypergraph::empty(4, 3).min_shadow_degree(1).is_err());
        assert!(t3().min_shadow_degree(3).is_err());
    }

    /// Real root of `C(x, 3) = m` via Cardano on `y^3 - y - 6m = 0`, `y = x - 1`.
    fn cardano_x(m: f64) -> f64 {
        let half_q = 3.0 * m;
        let disc = (half_q * half_q - 1.0 / 27.0).sqrt();
        (half_q + disc).cbrt() + (half_q - disc).cbrt() + 1.0
    }

    #[test]
    fn kk_examples() {
        let k = k35().kk_check(2).unwrap();
        assert!((k.x - 5.0).abs() < 1e-8);
        assert!((k.bound - 10.0).abs() < 1e-7);
        assert_eq!(k.shadow, 10);
        assert!(k.holds);

        // frozen from the closed-form oracle
        let m = m2().kk_check(2).unwrap();
        assert!((cardano_x(2.0) - 3.434_841_368).abs() < 1e-8);
        assert!((m.x - 3.434_841_368).abs() < 1e-8);
        assert!((m.bound - 4.181_646_928).abs() < 1e-7);
        assert_eq!(m.shadow, 6);
        assert!(m.holds);

        let t = t3().kk_check(2).unwrap();
        assert!((cardano_x(3.0) - 3.747_836_837).abs() < 1e-8);
        assert!((t.x - 3.747_836_837).abs() < 1e-8);
        assert!((t.bound - 5.149_222_060).abs() < 1e-7);
        assert!(t.holds);

        assert!(t3().kk_check(3).is_err());
        assert!(Hypergraph::empty(5, 3).kk_check(1).is_err());
    }
}

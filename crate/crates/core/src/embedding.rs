//! Subhypergraph embedding: exhaustive search, the greedy tree embedding, expansion
//! embedding and sunflower search.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{mask_iter, Mask, Vertex, VertexSet, MAX_SEARCH_VERTICES};
use crate::sunflower::max_sunflower;
use crate::tree::{verify_certificate, TreeCertificate};

/// An injective partial map `V(H) -> V(F)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct EmbeddingMap(BTreeMap<Vertex, Vertex>);

impl EmbeddingMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Vertex, Vertex)>>(pairs: I) -> Result<Self> {
        let mut m = EmbeddingMap::new();
        for (a, b) in pairs {
            m.insert(a, b)?;
        }
        Ok(m)
    }

    /// Adds `a -> b`; fails if `a` is mapped elsewhere or `b` is already an image.
    pub fn insert(&mut self, a: Vertex, b: Vertex) -> Result<()> {
        match self.0.get(&a) {
            Some(&old) if old == b => return Ok(()),
            Some(&old) => return invalid(format!("{a} is already mapped to {old}")),
            None => {}
        }
        if self.0.values().any(|&v| v == b) {
            return invalid(format!("{b} is already an image"));
        }
        self.0.insert(a, b);
        Ok(())
    }

    pub fn get(&self, a: Vertex) -> Option<Vertex> {
        self.0.get(&a).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().map(|(&a, &b)| (a, b))
    }

    pub fn domain(&self) -> VertexSet {
        self.0.keys().copied().collect()
    }

    pub fn image(&self) -> VertexSet {
        self.0.values().copied().collect()
    }

    /// Image of `e`, if every vertex of `e` is mapped.
    pub fn apply(&self, e: &VertexSet) -> Option<VertexSet> {
        e.iter().map(|v| self.get(v)).collect()
    }

    /// Every fully mapped edge of `h` lands on an edge of `f`.
    pub fn is_valid_for(&self, h: &Hypergraph, f: &Hypergraph) -> bool {
        h.edges()
            .iter()
            .all(|e| self.apply(e).is_none_or(|img| f.contains_edge(&img)))
    }

    /// Maps every vertex of `V(H)` and is valid.
    pub fn is_embedding(&self, h: &Hypergraph, f: &Hypergraph) -> bool {
        h.support().iter().all(|v| self.get(v).is_some()) && self.is_valid_for(h, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "map", rename_all = "snake_case")]
pub enum EmbedOutcome {
    Found(EmbeddingMap),
    None,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbedResult {
    #[serde(flatten)]
    pub outcome: EmbedOutcome,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

impl EmbedResult {
    pub fn found(&self) -> Option<&EmbeddingMap> {
        match &self.outcome {
            EmbedOutcome::Found(m) => Some(m),
            _ => None,
        }
    }
}

/// Edge index of the host, by edge size.
struct SizeIndex {
    set: HashSet<Mask>,
    incident: Vec<Vec<Mask>>,
    degree: Vec<usize>,
}

pub(crate) struct Target {
    labels: Vec<Vertex>,
    sizes: BTreeMap<usize, SizeIndex>,
}

impl Target {
    pub(crate) fn new(f: &Hypergraph) -> Result<Self> {
        let labels: Vec<Vertex> = f.support().iter().collect();
        if labels.len() > MAX_SEARCH_VERTICES {
            return Err(Error::TooLarge(format!(
                "embedding search supports hosts with at most {MAX_SEARCH_VERTICES} vertices, got {}",
                labels.len()
            )));
        }
        let k = labels.len();
        let mut sizes: BTreeMap<usize, SizeIndex> = BTreeMap::new();
        for e in f.simplified().edges() {
            let m: Mask = e
                .iter()
                .fold(0, |m, v| m | 1 << labels.binary_search(&v).unwrap());
            let idx = sizes.entry(e.len()).or_insert_with(|| SizeIndex {
                set: HashSet::new(),
                incident: vec![Vec::new(); k],
                degree: vec![0; k],
            });
            idx.set.insert(m);
            for v in mask_iter(m) {
                idx.incident[v as usize].push(m);
                idx.degree[v as usize] += 1;
            }
        }
        Ok(Target { labels, sizes })
    }

    fn local(&self, v: Vertex) -> Option<u32> {
        self.labels.binary_search(&v).ok().map(|i| i as u32)
    }

    /// Some host edge of size `s` contains `part` and avoids `used` elsewhere.
    fn extendable(&self, s: usize, part: Mask, count: usize, used: Mask) -> bool {
        let Some(idx) = self.sizes.get(&s) else {
            return false;
        };
        if count == s {
            return idx.set.contains(&part);
        }
        if part == 0 {
            return idx.set.iter().any(|&g| g & used == 0);
        }
        let v = part.trailing_zeros() as usize;
        idx.incident[v]
            .iter()
            .any(|&g| g & part == part && g & !part & used == 0)
    }
}

struct Pattern {
    /// H-vertices in search order.
    verts: Vec<Vertex>,
    /// Edges as (size, mask over search positions).
    edges: Vec<(usize, u128)>,
    /// Edges with at least one vertex among the first `i + 1` positions.
    active: Vec<Vec<usize>>,
    domains: Vec<Mask>,
}

impl Pattern {
    /// `first` lists vertices to be placed before the degree order.
    fn new(
        h: &Hypergraph,
        target: &Target,
        first: &[Vertex],
        anchor: Option<Mask>,
    ) -> Result<Self> {
        let support = h.support();
        if support.len() > MAX_SEARCH_VERTICES {
            return Err(Error::TooLarge(format!(
                "embedding search supports patterns with at most {MAX_SEARCH_VERTICES} vertices"
            )));
        }
        let simple = h.simplified();
        let mut rest: Vec<Vertex> = support.iter().filter(|v| !first.contains(v)).collect();
        rest.sort_by_key(|&v| (std::cmp::Reverse(simple.vertex_degree(v)), v));
        let verts: Vec<Vertex> = first.iter().copied().chain(rest).collect();
        let pos = |v: Vertex| verts.iter().position(|&u| u == v).unwrap();
        let edges: Vec<(usize, u128)> = simple
            .edges()
            .iter()
            .map(|e| (e.len(), e.iter().fold(0u128, |m, v| m | 1 << pos(v))))
            .collect();
        let active = (0..verts.len())
            .map(|i| {
                let upto: u128 = if i + 1 == 128 {
                    u128::MAX
                } else {
                    (1 << (i + 1)) - 1
                };
                (0..edges.len())
                    .filter(|&j| edges[j].1 & upto != 0)
                    .collect()
            })
            .collect();
        let all: Mask = match target.labels.len() {
            128 => Mask::MAX,
            k => (1 << k) - 1,
        };
        let domains = verts
            .iter()
            .map(|&u| {
                let mut dom = all;
                if first.contains(&u) {
                    if let Some(a) = anchor {
                        dom &= a;
                    }
                }
                let mut need: BTreeMap<usize, usize> = BTreeMap::new();
                for e in simple.edges().iter().filter(|e| e.contains(u)) {
                    *need.entry(e.len()).or_default() += 1;
                }
                for (s, d) in need {
                    let ok = match target.sizes.get(&s) {
                        Some(idx) => (0..target.labels.len())
                            .filter(|&v| idx.degree[v] >= d)
                            .fold(0, |m, v| m | 1 << v),
                        None => 0,
                    };
                    dom &= ok;
                }
                dom
            })
            .collect();
        Ok(Pattern {
            verts,
            edges,
            active,
            domains,
        })
    }
}

enum Step {
    Found,
    Fail,
    Exhausted,
}

struct Search<'a> {
    target: &'a Target,
    pattern: &'a Pattern,
    img: Vec<u32>,
    used: Mask,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn consistent(&self, pos: usize) -> bool {
        self.pattern.active[pos].iter().all(|&j| {
            let (s, m) = self.pattern.edges[j];
            let mut part: Mask = 0;
            let mut count = 0;
            for p in mask_iter(m).take_while(|&p| p as usize <= pos) {
                part |= 1 << self.img[p as usize];
                count += 1;
            }
            self.target.extendable(s, part, count, self.used)
        })
    }

    fn dfs(&mut self, pos: usize) -> Step {
        if pos == self.pattern.verts.len() {
            return Step::Found;
        }
        for c in mask_iter(self.pattern.domains[pos] & !self.used) {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Step::Exhausted;
            }
            let bit = 1 << c;
            self.img[pos] = c;
            self.used |= bit;
            if self.consistent(pos) {
                match self.dfs(pos + 1) {
                    Step::Fail => {}
                    other => return other,
                }
            }
            self.used &= !bit;
        }
        Step::Fail
    }

    fn map(&self) -> EmbeddingMap {
        EmbeddingMap(
            self.pattern
                .verts
                .iter()
                .zip(&self.img)
                .map(|(&u, &c)| (u, self.target.labels[c as usize]))
                .collect(),
        )
    }
}

fn run(
    h: &Hypergraph,
    f: &Hypergraph,
    target: &Target,
    pattern: &Pattern,
    budget: Option<u64>,
    spent: u64,
) -> EmbedResult {
    let mut s = Search {
        target,
        pattern,
        img: vec![0; pattern.verts.len()],
        used: 0,
        nodes: spent,
        budget,
    };
    let outcome = match s.dfs(0) {
        Step::Found => {
            let m = s.map();
            assert!(m.is_embedding(h, f), "search returned an invalid embedding");
            EmbedOutcome::Found(m)
        }
        Step::Fail => EmbedOutcome::None,
        Step::Exhausted => EmbedOutcome::Budget,
    };
    EmbedResult {
        outcome,
        nodes: s.nodes,
    }
}

fn trivially_absent(h: &Hypergraph, f: &Hypergraph) -> bool {
    h.edges().iter().any(|e| e.is_empty()) && !f.edges().iter().any(|e| e.is_empty())
}

/// Searches for an embedding of `h` into `f`, visiting at most `budget` nodes.
///
/// H-vertices are assigned by decreasing degree (ties by id), host candidates by id.
/// After each assignment every partly mapped edge must still extend to a host edge
/// whose unmapped part avoids the vertices already used.
pub fn embed(h: &Hypergraph, f: &Hypergraph, budget: Option<u64>) -> Result<EmbedResult> {
    let target = Target::new(f)?;
    if trivially_absent(h, f) {
        return Ok(EmbedResult {
            outcome: EmbedOutcome::None,
            nodes: 0,
        });
    }
    let pattern = Pattern::new(h, &target, &[], None)?;
    Ok(run(h, f, &target, &pattern, budget, 0))
}

/// Searches for an embedding of `h` into `f` mapping some edge of `h` onto `anchor`.
pub fn embed_anchored(
    h: &Hypergraph,
    f: &Hypergraph,
    anchor: &VertexSet,
    budget: Option<u64>,
) -> Result<EmbedResult> {
    let target = Target::new(f)?;
    embed_anchored_in(h, f, &target, anchor, budget)
}

pub(crate) fn embed_anchored_in(
    h: &Hypergraph,
    f: &Hypergraph,
    target: &Target,
    anchor: &VertexSet,
    budget: Option<u64>,
) -> Result<EmbedResult> {
    let mut nodes = 0;
    let Some(anchor_mask) = anchor
        .iter()
        .map(|v| target.local(v))
        .try_fold(0 as Mask, |m, v| v.map(|v| m | 1 << v))
    else {
        return Ok(EmbedResult {
            outcome: EmbedOutcome::None,
            nodes,
        });
    };
    if !f.contains_edge(anchor) {
        return Ok(EmbedResult {
            outcome: EmbedOutcome::None,
            nodes,
        });
    }
    for e in h
        .simplified()
        .edges()
        .iter()
        .filter(|e| e.len() == anchor.len())
    {
        let first: Vec<Vertex> = e.iter().collect();
        let pattern = Pattern::new(h, target, &first, Some(anchor_mask))?;
        let res = run(h, f, target, &pattern, budget, nodes);
        nodes = res.nodes;
        if !matches!(res.outcome, EmbedOutcome::None) {
            return Ok(res);
        }
    }
    Ok(EmbedResult {
        outcome: EmbedOutcome::None,
        nodes,
    })
}

/// True when `f` contains no copy of `h`.
pub fn is_free(f: &Hypergraph, h: &Hypergraph) -> Result<bool> {
    Ok(matches!(embed(h, f, None)?.outcome, EmbedOutcome::None))
}

/// Extends a map of the first edge along a tight ordering, never backtracking.
///
/// Requires `δ_{r-1}(F) >= |V(H)| - r + 1`; each new vertex goes to the lowest-id
/// vertex completing the image of its overlap to an edge of `f`.
pub fn greedy_tree_embed(
    h: &Hypergraph,
    cert: &TreeCertificate,
    f: &Hypergraph,
    f0: &EmbeddingMap,
) -> Result<EmbeddingMap> {
    let report = verify_certificate(h, cert)?;
    if !report.valid || !report.tight {
        return invalid("a valid tight certificate is required");
    }
    let Some(r) = h.uniformity() else {
        return invalid("H must be uniform");
    };
    if h.is_empty() {
        return Ok(EmbeddingMap::new());
    }
    if f.uniformity() != Some(r) || f.is_empty() {
        return invalid("F must be a nonempty r-graph of the same uniformity");
    }
    let nv = h.support().len();
    if r > 1 {
        let delta = f.min_shadow_degree(r - 1)?;
        if delta + r < nv + 1 {
            return invalid(format!(
                "minimum (r-1)-shadow degree {delta} is below |V(H)| - r + 1 = {}",
                nv + 1 - r
            ));
        }
    } else if f.len() < nv {
        return invalid("F has fewer than |V(H)| singleton edges");
    }
    let first = h.edge(cert.edge_at(0));
    if f0.domain() != *first {
        return invalid("f0 must map exactly the first edge");
    }
    if !f.contains_edge(&f0.apply(first).unwrap()) {
        return invalid("f0 does not map the first edge onto an edge of F");
    }
    let mut map = f0.clone();
    for i in 1..cert.len() {
        let e = h.edge(cert.edge_at(i));
        let par = h.edge(cert.edge_at(cert.parent(i).expect("non-root")));
        let d = e.intersection(par);
        let image_d = map.apply(&d).expect("overlap already mapped");
        let used = map.image();
        let x = e
            .difference(&d)
            .iter()
            .next()
            .expect("tight step adds one vertex");
        let z = f
            .edges()
            .iter()
            .filter(|g| image_d.is_subset(g))
            .filter_map(|g| g.difference(&image_d).iter().next())
            .filter(|z| !used.contains(*z))
            .min()
            .ok_or_else(|| {
                Error::InvalidArgument("no extension vertex; degree bound violated".into())
            })?;
        map.insert(x, z)?;
    }
    debug_assert!(map.is_embedding(h, f));
    Ok(map)
}

/// Embeds `g` into `f` given an embedding of `g - s` into the `|V(G)|`-kernel graph of `f`.
///
/// `s` must consist of degree-1 vertices. Each edge `E` receives a host edge through
/// `f(E \ S)` whose petal avoids every base image and every earlier petal.
pub fn expansion_embed(
    g: &Hypergraph,
    s: &VertexSet,
    f: &Hypergraph,
    base: &EmbeddingMap,
) -> Result<EmbeddingMap> {
    if let Some(v) = s.iter().find(|&v| g.vertex_degree(v) > 1) {
        return invalid(format!("vertex {v} of S does not have degree 1"));
    }
    let size = g.support().len();
    let kernels: Vec<VertexSet> = g.edges().iter().map(|e| e.difference(s)).collect();
    let mut images = Vec::with_capacity(kernels.len());
    for d in &kernels {
        let img = base
            .apply(d)
            .ok_or_else(|| Error::InvalidArgument(format!("f does not map {d:?}")))?;
        if f.kernel_degree(&img, size) < size {
            return invalid(format!("kernel degree of {img:?} is below {size}"));
        }
        images.push(img);
    }
    let mut map = EmbeddingMap::new();
    for (a, b) in base.iter().filter(|(a, _)| !s.contains(*a)) {
        map.insert(a, b)?;
    }
    let mut blocked = VertexSet::from_iter_lossy(images.iter().flat_map(|i| i.iter()));
    for (e, img) in g.edges().iter().zip(&images) {
        let petal = f
            .edges()
            .iter()
            .filter(|h| h.len() == e.len() && img.is_subset(h))
            .map(|h| h.difference(img))
            .filter(|p| p.is_disjoint(&blocked))
            .min()
            .ok_or_else(|| Error::InvalidArgument(format!("no free petal for {e:?}")))?;
        for (x, y) in e.intersection(s).iter().zip(petal.iter()) {
            map.insert(x, y)?;
        }
        blocked = blocked.union(&petal);
    }
    if !map.is_embedding(g, f) {
        return invalid("base map is not an embedding of G - S");
    }
    Ok(map)
}

/// `s` edges of `f` through `d` with pairwise disjoint nonempty petals.
pub fn find_sunflower(f: &Hypergraph, d: &VertexSet, s: usize) -> Result<Option<Vec<VertexSet>>> {
    if s == 0 {
        return invalid("sunflower size must be positive");
    }
    let found = max_sunflower(f, d, s);
    if found.len() < s {
        return Ok(None);
    }
    Ok(Some(found.into_iter().map(|i| f.edge(i).clone()).collect()))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::Rng;

    use super::*;
    use crate::extremal::constructions::{
        complete, gen_c, linear_cycle, linear_star, matching, tight_path,
    };
    use crate::testutil::{random_tree, random_uniform, rng};
    use crate::tree::find_tree_ordering;

    fn set(v: &[u32]) -> VertexSet {
        VertexSet::from(v.to_vec())
    }

    fn identity(e: &VertexSet) -> EmbeddingMap {
        EmbeddingMap::from_pairs(e.iter().map(|v| (v, v))).unwrap()
    }

    /// Tries every injective map of `V(H)` into `V(F)`.
    fn naive_embeds(h: &Hypergraph, f: &Hypergraph) -> bool {
        let hv: Vec<Vertex> = h.support().iter().collect();
        let fv: Vec<Vertex> = (0..f.n() as Vertex).collect();
        fn go(
            i: usize,
            hv: &[Vertex],
            fv: &[Vertex],
            m: &mut EmbeddingMap,
            h: &Hypergraph,
            f: &Hypergraph,
        ) -> bool {
            if i == hv.len() {
                return m.is_valid_for(h, f);
            }
            for &c in fv {
                if m.image().contains(c) {
                    continue;
                }
                let mut next = m.clone();
                next.insert(hv[i], c).unwrap();
                if go(i + 1, hv, fv, &mut next, h, f) {
                    return true;
                }
            }
            false
        }
        go(0, &hv, &fv, &mut EmbeddingMap::new(), h, f)
    }

    #[test]
    fn embed_examples() {
        let m2 = matching(2, 3).unwrap();
        let k6 = complete(6, 3).unwrap();
        let r = embed(&m2, &k6, None).unwrap();
        assert!(r.found().unwrap().is_embedding(&m2, &k6));

        let c34 = linear_cycle(4, 3).unwrap();
        let c = gen_c(10, 3, 1).unwrap();
        assert_eq!(embed(&c34, &c, None).unwrap().outcome, EmbedOutcome::None);
        assert!(is_free(&c, &c34).unwrap());

        let single = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        let empty = Hypergraph::empty(5, 3);
        assert_eq!(
            embed(&single, &empty, None).unwrap().outcome,
            EmbedOutcome::None
        );
        assert!(is_free(&empty, &single).unwrap());

        let k35 = complete(5, 3).unwrap();
        assert!(!is_free(&k35, &tight_path(3, 3).unwrap()).unwrap());
    }

    #[test]
    fn budget_is_reported_separately() {
        let c34 = linear_cycle(4, 3).unwrap();
        let c = gen_c(10, 3, 1).unwrap();
        let r = embed(&c34, &c, Some(5)).unwrap();
        assert_eq!(r.outcome, EmbedOutcome::Budget);
        assert!(r.nodes > 5);
    }

    #[test]
    fn anchored_embedding_uses_the_anchor() {
        let p = tight_path(2, 3).unwrap();
        let k5 = complete(5, 3).unwrap();
        let anchor = set(&[2, 3, 4]);
        let r = embed_anchored(&p, &k5, &anchor, None).unwrap();
        let m = r.found().unwrap();
        assert!(p.edges().iter().any(|e| m.apply(e).unwrap() == anchor));
        let m2 = matching(2, 3).unwrap();
        let r = embed_anchored(&m2, &tight_path(3, 3).unwrap(), &set(&[0, 1, 2]), None).unwrap();
        assert_eq!(r.outcome, EmbedOutcome::None);
    }

    #[test]
    fn greedy_examples() {
        let k35 = complete(5, 3).unwrap();
        let p = tight_path(2, 3).unwrap();
        let c = find_tree_ordering(&p, Some(0), true).unwrap().unwrap();
        let m = greedy_tree_embed(&p, &c, &k35, &identity(&set(&[0, 1, 2]))).unwrap();
        assert!(m.is_embedding(&p, &k35));

        let t3 = tight_path(3, 3).unwrap();
        let c = find_tree_ordering(&t3, Some(0), true).unwrap().unwrap();
        let f0 = EmbeddingMap::from_pairs([(0, 4), (1, 2), (2, 0)]).unwrap();
        let m = greedy_tree_embed(&t3, &c, &k35, &f0).unwrap();
        assert!(m.is_embedding(&t3, &k35));

        let r = greedy_tree_embed(&t3, &c, &t3, &identity(&set(&[0, 1, 2])));
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
        let loose = find_tree_ordering(&matching(2, 3).unwrap(), None, false)
            .unwrap()
            .unwrap();
        assert!(greedy_tree_embed(
            &matching(2, 3).unwrap(),
            &loose,
            &k35,
            &identity(&set(&[0, 1, 2]))
        )
        .is_err());
    }

    #[test]
    fn expansion_examples() {
        let l33 = linear_star(3, 3).unwrap();
        let s = set(&[1, 2, 3, 4, 5, 6]);
        let star9 = linear_star(9, 3).unwrap();
        let base = EmbeddingMap::from_pairs([(0, 0)]).unwrap();
        let m = expansion_embed(&l33, &s, &star9, &base).unwrap();
        assert!(m.is_embedding(&l33, &star9));
        assert_eq!(m.get(0), Some(0));

        let m2 = matching(2, 3).unwrap();
        let f = matching(6, 3).unwrap();
        let m = expansion_embed(&m2, &m2.support(), &f, &EmbeddingMap::new()).unwrap();
        assert!(m.is_embedding(&m2, &f));

        let star6 = linear_star(6, 3).unwrap();
        assert_eq!(star6.kernel_degree(&set(&[0]), 7), 6);
        assert!(matches!(
            expansion_embed(&l33, &s, &star6, &base),
            Err(Error::InvalidArgument(_))
        ));
        assert!(expansion_embed(&l33, &set(&[0, 1]), &star9, &base).is_err());
    }

    #[test]
    fn sunflower_examples() {
        let l33 = linear_star(3, 3).unwrap();
        assert_eq!(
            find_sunflower(&l33, &set(&[0]), 3).unwrap().unwrap().len(),
            3
        );
        let t3 = tight_path(3, 3).unwrap();
        assert_eq!(find_sunflower(&t3, &set(&[2]), 3).unwrap(), None);
        let k35 = complete(5, 3).unwrap();
        assert_eq!(
            find_sunflower(&k35, &VertexSet::new(), 1)
                .unwrap()
                .unwrap()
                .len(),
            1
        );
        assert!(find_sunflower(&k35, &VertexSet::new(), 0).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn embed_matches_naive(seed: u64, nh in 2usize..6, nf in 3usize..8, r in 2usize..4, p in 0.1f64..0.8) {
            let mut rng = rng(seed);
            prop_assume!(r <= nh);
            let h = random_uniform(&mut rng, nh, r, 0.5);
            let f = random_uniform(&mut rng, nf, r, p);
            let res = embed(&h, &f, None).unwrap();
            let naive = naive_embeds(&h, &f);
            prop_assert_eq!(res.found().is_some(), naive);
            if let Some(m) = res.found() {
                prop_assert!(m.is_embedding(&h, &f));
            }
        }

        #[test]
        fn greedy_never_fails(seed: u64, r in 2usize..4, m in 1usize..5) {
            let mut rng = rng(seed);
            let h = random_tree(&mut rng, r, m, true);
            prop_assume!(h.support().len() <= 7);
            let need = h.support().len() + 1 - r;
            let n = h.support().len() + rng.gen_range(0..3);
            let mut f = complete(n, r).unwrap();
            // drop edges while the degree bound survives
            let mut edges = f.edges().to_vec();
            edges.shuffle(&mut rng);
            for _ in 0..edges.len() / 2 {
                let candidate: Vec<VertexSet> = edges[1..].to_vec();
                let g = Hypergraph::new(n, candidate.clone()).unwrap();
                if g.uniformity() == Some(r) && g.min_shadow_degree(r - 1).unwrap() >= need {
                    edges = candidate;
                    f = g;
                } else {
                    edges.rotate_left(1);
                }
            }
            let c = find_tree_ordering(&h, None, true).unwrap().unwrap();
            let first = h.edge(c.edge_at(0));
            let target = f.edges().choose(&mut rng).unwrap();
            let mut img: Vec<Vertex> = target.iter().collect();
            img.shuffle(&mut rng);
            let f0 = EmbeddingMap::from_pairs(first.iter().zip(img)).unwrap();
            let map = greedy_tree_embed(&h, &c, &f, &f0).unwrap();
            prop_assert!(map.is_embedding(&h, &f));
        }

        #[test]
        fn sunflower_agrees_with_kernel_degree(seed: u64, n in 2usize..8, r in 1usize..4, s in 1usize..4) {
            let mut rng = rng(seed);
            prop_assume!(r <= n);
            let f = random_uniform(&mut rng, n, r, 0.5);
            let d: VertexSet = (0..n as Vertex).filter(|_| rng.gen_bool(0.3)).collect();
            let found = find_sunflower(&f, &d, s).unwrap();
            prop_assert_eq!(found.is_some(), f.kernel_degree(&d, s) >= s);
            if let Some(edges) = found {
                for (i, a) in edges.iter().enumerate() {
                    prop_assert!(d.is_subset(a) && a.len() > d.len());
                    for b in &edges[i + 1..] {
                        prop_assert_eq!(a.intersection(b), d.clone());
                    }
                }
            }
        }
    }
}

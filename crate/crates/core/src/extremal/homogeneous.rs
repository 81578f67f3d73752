//! Homogeneous and centralized families.
//!
//! A family is checked against an `r`-partition `(X_0, .., X_{r-1})` and an intersection
//! pattern `J`, a set of proper subsets of the class indices `{0, .., r-1}`. Index sets
//! are stored as [`VertexSet`]s of class indices.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::combinatorics::binomial;
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub partition: Vec<VertexSet>,
    pub pattern: Vec<VertexSet>,
    pub threshold: usize,
    /// Every edge meets every class exactly once.
    pub partite: bool,
    /// `F[I]` has kernel degree at least `s` for every edge and every `I` in `J`.
    pub kernel_ok: bool,
    /// Every pairwise intersection `F ∩ F'` equals `F[I]` for some `I` in `J`.
    pub pattern_ok: bool,
    /// `J` is closed under intersection.
    pub closed: bool,
    pub homogeneous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Case {
    /// `|F| <= C(n, r-2)`.
    Small { size: usize, bound: u128 },
    /// Every subset of `[r] \ {a, b}` lies in `J`.
    Pair { a: usize, b: usize },
    /// `F \ F[i]` lies in no other edge and every proper `I ∋ i` has kernel degree `>= s`.
    Central { index: usize, centers: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub report: HomogeneityReport,
    /// Every case that holds, in order.
    pub cases: Vec<Case>,
    /// First holding case, reported only for homogeneous input.
    pub verdict: Option<Case>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub family: Hypergraph,
    pub partition: Vec<VertexSet>,
    pub pattern: Vec<VertexSet>,
    pub report: HomogeneityReport,
}

fn validate(f: &Hypergraph, partition: &[VertexSet], pattern: &[VertexSet]) -> Result<usize> {
    let r = partition.len();
    if r == 0 {
        return invalid("partition needs at least one class");
    }
    if let Some(u) = f.uniformity() {
        if !f.is_empty() && u != r {
            return invalid(format!(
                "partition has {r} classes but the family is {u}-uniform"
            ));
        }
    } else if !f.is_empty() {
        return invalid("family must be uniform");
    }
    let mut seen = BTreeSet::new();
    for class in partition {
        for v in class.iter() {
            if v as usize >= f.n() {
                return invalid(format!("vertex {v} out of range for n={}", f.n()));
            }
            if !seen.insert(v) {
                return invalid(format!("vertex {v} lies in two classes"));
            }
        }
    }
    for i in pattern {
        if i.len() >= r || i.max().is_some_and(|m| m as usize >= r) {
            return invalid(format!(
                "{i:?} is not a proper subset of the {r} class indices"
            ));
        }
    }
    Ok(r)
}

/// Class index of each vertex, if any.
fn class_of(n: usize, partition: &[VertexSet]) -> Vec<Option<usize>> {
    let mut out = vec![None; n];
    for (i, class) in partition.iter().enumerate() {
        for v in class.iter() {
            out[v as usize] = Some(i);
        }
    }
    out
}

/// `F[I]`.
fn project(e: &VertexSet, classes: &[Option<usize>], idx: &VertexSet) -> VertexSet {
    e.iter()
        .filter(|&v| classes[v as usize].is_some_and(|c| idx.contains(c as Vertex)))
        .collect()
}

fn is_partite(e: &VertexSet, classes: &[Option<usize>], r: usize) -> bool {
    let mut hit = vec![false; r];
    for v in e.iter() {
        match classes[v as usize] {
            Some(c) if !hit[c] => hit[c] = true,
            _ => return false,
        }
    }
    hit.iter().all(|&h| h)
}

/// Class indices where two partite edges agree.
fn agreement(a: &VertexSet, b: &VertexSet, classes: &[Option<usize>]) -> VertexSet {
    a.intersection(b)
        .iter()
        .map(|v| classes[v as usize].unwrap() as Vertex)
        .collect()
}

fn is_closed(pattern: &BTreeSet<VertexSet>) -> bool {
    pattern
        .iter()
        .all(|a| pattern.iter().all(|b| pattern.contains(&a.intersection(b))))
}

/// Edges violating the kernel-degree condition for some member of `pattern`.
fn kernel_violations(
    f: &Hypergraph,
    classes: &[Option<usize>],
    pattern: &BTreeSet<VertexSet>,
    s: usize,
) -> Vec<usize> {
    (0..f.len())
        .map(|k| {
            let e = f.edge(k);
            pattern
                .iter()
                .filter(|i| f.kernel_degree(&project(e, classes, i), s) < s)
                .count()
        })
        .collect()
}

/// Checks the three homogeneity conditions for `f` with the given partition, pattern and threshold.
pub fn homogeneous_check(
    f: &Hypergraph,
    partition: &[VertexSet],
    pattern: &[VertexSet],
    s: usize,
) -> Result<HomogeneityReport> {
    let r = validate(f, partition, pattern)?;
    let classes = class_of(f.n(), partition);
    let j: BTreeSet<VertexSet> = pattern.iter().cloned().collect();
    let partite = f.edges().iter().all(|e| is_partite(e, &classes, r));
    let closed = is_closed(&j);
    let (kernel_ok, pattern_ok) = if partite {
        let kernel_ok = kernel_violations(f, &classes, &j, s)
            .iter()
            .all(|&v| v == 0);
        let edges = f.edges();
        let pattern_ok = (0..edges.len()).all(|a| {
            (a + 1..edges.len()).all(|b| j.contains(&agreement(&edges[a], &edges[b], &classes)))
        });
        (kernel_ok, pattern_ok)
    } else {
        (false, false)
    };
    Ok(HomogeneityReport {
        partition: partition.to_vec(),
        pattern: j.into_iter().collect(),
        threshold: s,
        partite,
        kernel_ok,
        pattern_ok,
        closed,
        homogeneous: partite && kernel_ok && pattern_ok && closed,
    })
}

/// Runs [`homogeneous_check`] and lists which of the three small/pair/central cases hold.
pub fn classify(
    f: &Hypergraph,
    partition: &[VertexSet],
    pattern: &[VertexSet],
    s: usize,
) -> Result<Classification> {
    let report = homogeneous_check(f, partition, pattern, s)?;
    let r = partition.len();
    let mut cases = Vec::new();

    let bound = if r >= 2 {
        binomial(f.n() as u64, r as u64 - 2)
    } else {
        0
    };
    if f.len() as u128 <= bound {
        cases.push(Case::Small {
            size: f.len(),
            bound,
        });
    }

    let j: BTreeSet<&VertexSet> = pattern.iter().collect();
    'pairs: for a in 0..r {
        for b in a + 1..r {
            let rest: VertexSet = (0..r as Vertex)
                .filter(|&c| c as usize != a && c as usize != b)
                .collect();
            if rest.all_subsets().iter().all(|i| j.contains(i)) {
                cases.push(Case::Pair { a, b });
                break 'pairs;
            }
        }
    }

    if report.partite {
        let classes = class_of(f.n(), partition);
        let everything: VertexSet = (0..r as Vertex).collect();
        for i in 0..r {
            let centers: Vec<VertexSet> = f
                .edges()
                .iter()
                .map(|e| project(e, &classes, &VertexSet::singleton(i as Vertex)))
                .collect();
            let unique = f
                .edges()
                .iter()
                .zip(&centers)
                .all(|(e, c)| f.degree(&e.difference(c)) == 1);
            if !unique {
                continue;
            }
            let through_i: Vec<VertexSet> = everything
                .all_subsets()
                .into_iter()
                .filter(|idx| idx.len() < r && idx.contains(i as Vertex))
                .collect();
            let dense = f.edges().iter().all(|e| {
                through_i
                    .iter()
                    .all(|idx| f.kernel_degree(&project(e, &classes, idx), s) >= s)
            });
            if dense {
                let centers = centers.iter().map(|c| c.iter().next().unwrap()).collect();
                cases.push(Case::Central { index: i, centers });
                break;
            }
        }
    }

    let verdict = if report.homogeneous {
        cases.first().cloned()
    } else {
        None
    };
    Ok(Classification {
        report,
        cases,
        verdict,
    })
}

/// Whether every proper subset of each edge containing its chosen center has kernel degree `>= s`.
///
/// `centers[k]` is the center of edge `k` and must lie in it.
pub fn centralized_check(f: &Hypergraph, s: usize, centers: &[Vertex]) -> Result<bool> {
    if centers.len() != f.len() {
        return invalid(format!("{} centers for {} edges", centers.len(), f.len()));
    }
    for (e, &c) in f.edges().iter().zip(centers) {
        if !e.contains(c) {
            return invalid(format!("center {c} is not in edge {e:?}"));
        }
    }
    Ok(f.edges().iter().zip(centers).all(|(e, &c)| {
        e.all_subsets()
            .iter()
            .filter(|d| d.len() < e.len() && d.contains(c))
            .all(|d| f.kernel_degree(d, s) >= s)
    }))
}

/// Closure of `patterns` under pairwise intersection.
fn close(mut patterns: BTreeSet<VertexSet>) -> BTreeSet<VertexSet> {
    loop {
        let extra: Vec<VertexSet> = patterns
            .iter()
            .flat_map(|a| patterns.iter().map(move |b| a.intersection(b)))
            .filter(|i| !patterns.contains(i))
            .collect();
        if extra.is_empty() {
            return patterns;
        }
        patterns.extend(extra);
    }
}

fn observed_pattern(edges: &[VertexSet], classes: &[Option<usize>]) -> BTreeSet<VertexSet> {
    let mut out = BTreeSet::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            out.insert(agreement(&edges[a], &edges[b], classes));
        }
    }
    close(out)
}

/// Shrinks the partite part of `f` until it is homogeneous for the closure of its own pattern.
fn prune(
    f: &Hypergraph,
    classes: &[Option<usize>],
    r: usize,
    s: usize,
) -> Result<(Hypergraph, Vec<VertexSet>)> {
    let kept: Vec<VertexSet> = f
        .edges()
        .iter()
        .filter(|e| is_partite(e, classes, r))
        .cloned()
        .collect();
    let mut g = Hypergraph::build(f.n(), kept, Some(r), false)?;
    loop {
        let pattern = observed_pattern(g.edges(), classes);
        let bad = kernel_violations(&g, classes, &pattern, s);
        let worst = (0..bad.len())
            .filter(|&k| bad[k] > 0)
            .max_by_key(|&k| (bad[k], std::cmp::Reverse(k)));
        match worst {
            None => return Ok((g, pattern.into_iter().collect())),
            Some(k) => {
                let mut edges = g.edges().to_vec();
                edges.remove(k);
                g = Hypergraph::build(f.n(), edges, Some(r), false)?;
            }
        }
    }
}

/// Best-effort homogeneous subfamily.
///
/// Each try colours the vertices at random with `r` colours, keeps the partite edges
/// and deletes the edge with the most kernel-degree failures until the family is
/// homogeneous for the intersection closure of its observed patterns. The largest
/// survivor over `tries` attempts is returned; there is no size guarantee.
pub fn homogeneous_extract(
    f: &Hypergraph,
    s: usize,
    tries: usize,
    seed: u64,
) -> Result<Extraction> {
    let simple = f.simplified();
    let Some(r) = simple.uniformity().filter(|&r| r > 0) else {
        return invalid("family must be uniform with a known positive r");
    };
    let n = simple.n();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut best: Option<(Hypergraph, Vec<VertexSet>, Vec<VertexSet>)> = None;
    for _ in 0..tries.max(1) {
        let colour: Vec<usize> = (0..n).map(|_| rng.gen_range(0..r)).collect();
        let partition: Vec<VertexSet> = (0..r)
            .map(|c| {
                (0..n as Vertex)
                    .filter(|&v| colour[v as usize] == c)
                    .collect()
            })
            .collect();
        let classes: Vec<Option<usize>> = colour.iter().map(|&c| Some(c)).collect();
        let (g, pattern) = prune(&simple, &classes, r, s)?;
        if best.as_ref().is_none_or(|(b, _, _)| g.len() > b.len()) {
            best = Some((g, partition, pattern));
        }
    }
    let (family, partition, pattern) = best.unwrap();
    let report = homogeneous_check(&family, &partition, &pattern, s)?;
    debug_assert!(report.homogeneous);
    Ok(Extraction {
        family,
        partition,
        pattern,
        report,
    })
}

use std::collections::{BTreeMap, HashSet};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

use super::TreeCertificate;

/// Finds a tree-defining ordering of `h`, or `None` when none exists under the constraints.
///
/// * Without `require_tight`, ears are removed GYO-style (an edge whose intersection
///   with the other remaining edges lies inside one of them), lowest index first; the
///   removal sequence reversed is the ordering. The root (edge 0 unless given) is never
///   removed while others remain; for a requested root an exhaustive search backs this up.
/// * With `require_tight`, a backtracking search extends the ordering one edge at a
///   time, each new edge adding exactly one new vertex.
///
/// Repeated edges are placed after their first copy, with that copy as parent; a
/// hypergraph with repeated edges has no tight ordering.
pub fn find_tree_ordering(
    h: &Hypergraph,
    root: Option<usize>,
    require_tight: bool,
) -> Result<Option<TreeCertificate>> {
    if let Some(r) = root {
        if r >= h.len() {
            return invalid(format!("root edge {r} out of range"));
        }
    }
    if h.is_empty() {
        return Ok(Some(TreeCertificate::empty()));
    }
    // distinct edges by first occurrence
    let mut first: BTreeMap<&VertexSet, usize> = BTreeMap::new();
    let mut reps = Vec::new();
    let mut dups = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        match first.get(e) {
            Some(&f) => dups.push((i, f)),
            None => {
                first.insert(e, i);
                reps.push(i);
            }
        }
    }
    let root_rep = root.map(|r| first[h.edge(r)]);
    if require_tight {
        if !dups.is_empty() || h.uniformity().is_none() {
            return Ok(None);
        }
        if root.is_some_and(|r| r != root_rep.unwrap()) {
            return Ok(None);
        }
    }
    let base = if require_tight {
        forward_search(h, &reps, root_rep, true)?
    } else {
        // an acyclic hypergraph can be rooted at any edge; default to the first
        match gyo(h, &reps, root_rep.or(Some(reps[0]))) {
            Some(found) => Some(found),
            None if root_rep.is_some() => forward_search(h, &reps, root_rep, false)?,
            None => None,
        }
    };
    let Some((mut order, mut parent)) = base else {
        return Ok(None);
    };
    // a requested root that is a repeated copy swaps places with its first copy
    if let Some(r) = root {
        if r != root_rep.unwrap() {
            order[0] = r;
            dups.retain(|&(i, _)| i != r);
            dups.push((root_rep.unwrap(), r));
        }
    }
    for (dup, of) in dups {
        let p = order
            .iter()
            .position(|&e| e == of)
            .expect("first copy is ordered");
        order.push(dup);
        parent.push(Some(p));
    }
    let cert = TreeCertificate::new(h, order, parent);
    debug_assert!(super::verify_certificate(h, &cert).unwrap().valid);
    Ok(Some(cert))
}

/// GYO ear removal over the distinct edges `reps`.
fn gyo(
    h: &Hypergraph,
    reps: &[usize],
    root: Option<usize>,
) -> Option<(Vec<usize>, Vec<Option<usize>>)> {
    let mut remaining: Vec<usize> = reps.to_vec();
    // (removed edge, witness edge)
    let mut removed: Vec<(usize, usize)> = Vec::new();
    while remaining.len() > 1 {
        let mut found = None;
        'ears: for (k, &e) in remaining.iter().enumerate() {
            if Some(e) == root {
                continue;
            }
            let others = remaining.iter().filter(|&&o| o != e);
            let rest: VertexSet =
                VertexSet::from_iter_lossy(others.flat_map(|&o| h.edge(o).iter()));
            let inter = h.edge(e).intersection(&rest);
            for &w in &remaining {
                if w != e && inter.is_subset(h.edge(w)) {
                    found = Some((k, e, w));
                    break 'ears;
                }
            }
        }
        let (k, e, w) = found?;
        remaining.remove(k);
        removed.push((e, w));
    }
    let mut order = vec![remaining[0]];
    let mut parent = vec![None];
    for &(e, w) in removed.iter().rev() {
        let p = order
            .iter()
            .position(|&o| o == w)
            .expect("witness outlives the ear");
        order.push(e);
        parent.push(Some(p));
    }
    Some((order, parent))
}

/// Exhaustive forward construction, memoized on the set of placed edges.
fn forward_search(
    h: &Hypergraph,
    reps: &[usize],
    root: Option<usize>,
    tight: bool,
) -> Result<Option<(Vec<usize>, Vec<Option<usize>>)>> {
    if reps.len() > 128 {
        return Err(Error::TooLarge(format!(
            "exhaustive ordering search supports at most 128 distinct edges, got {}",
            reps.len()
        )));
    }
    let mut s = Forward {
        h,
        reps,
        tight,
        failed: HashSet::new(),
        order: Vec::new(),
        parent: Vec::new(),
    };
    let starts: Vec<usize> = match root {
        Some(r) => vec![reps
            .iter()
            .position(|&e| e == r)
            .expect("root is a representative")],
        None => (0..reps.len()).collect(),
    };
    for st in starts {
        s.order.push(st);
        s.parent.push(None);
        if s.extend(1u128 << st, h.edge(reps[st]).clone()) {
            let order = s.order.iter().map(|&k| reps[k]).collect();
            return Ok(Some((order, s.parent)));
        }
        s.order.clear();
        s.parent.clear();
    }
    Ok(None)
}

struct Forward<'a> {
    h: &'a Hypergraph,
    reps: &'a [usize],
    tight: bool,
    failed: HashSet<u128>,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
}

impl Forward<'_> {
    fn extend(&mut self, used: u128, union: VertexSet) -> bool {
        if self.order.len() == self.reps.len() {
            return true;
        }
        if self.failed.contains(&used) {
            return false;
        }
        for k in 0..self.reps.len() {
            if used >> k & 1 == 1 {
                continue;
            }
            let e = self.h.edge(self.reps[k]);
            let inter = e.intersection(&union);
            if self.tight && e.len() != inter.len() + 1 {
                continue;
            }
            let Some(p) = self
                .order
                .iter()
                .position(|&o| inter.is_subset(self.h.edge(self.reps[o])))
            else {
                continue;
            };
            self.order.push(k);
            self.parent.push(Some(p));
            if self.extend(used | 1 << k, union.union(e)) {
                return true;
            }
            self.order.pop();
            self.parent.pop();
        }
        self.failed.insert(used);
        false
    }
}

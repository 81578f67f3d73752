use std::collections::HashMap;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{Vertex, VertexSet};

use super::{dedup_certified, find_tree_ordering, verify_certificate, TreeCertificate};

fn require_valid(h: &Hypergraph, cert: &TreeCertificate) -> Result<()> {
    if !verify_certificate(h, cert)?.valid {
        return invalid("certificate violates the running-intersection condition");
    }
    Ok(())
}

fn require_uniform(h: &Hypergraph) -> Result<usize> {
    h.uniformity()
        .ok_or_else(|| Error::InvalidArgument("expected a uniform hypergraph".into()))
}

/// Embeds an `r`-tree into a tight `r`-tree on the same vertices, keeping the first edge.
///
/// Each edge whose overlap with its parent is smaller than `r - 1` is reached from
/// the parent by a chain of `r`-sets, swapping one vertex at a time (outgoing and
/// incoming vertices in ascending order). Every chain member brings in exactly one
/// new vertex, so the result is tight.
pub fn tighten(h: &Hypergraph, cert: &TreeCertificate) -> Result<(Hypergraph, TreeCertificate)> {
    require_uniform(h)?;
    require_valid(h, cert)?;
    let mut edges: Vec<VertexSet> = Vec::new();
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut pos_of: HashMap<VertexSet, usize> = HashMap::new();
    let mut g_pos = vec![0usize; cert.len()];

    let mut push = |set: VertexSet, par: Option<usize>, edges: &mut Vec<VertexSet>| -> usize {
        if let Some(&p) = pos_of.get(&set) {
            return p;
        }
        let p = edges.len();
        pos_of.insert(set.clone(), p);
        edges.push(set);
        parent.push(par);
        p
    };

    for (i, &ei) in cert.order().iter().enumerate() {
        let e = h.edge(ei);
        let Some(pi) = cert.parent(i) else {
            g_pos[i] = push(e.clone(), None, &mut edges);
            continue;
        };
        let par = h.edge(cert.edge_at(pi));
        let outgoing: Vec<Vertex> = par.difference(e).iter().collect();
        let incoming: Vec<Vertex> = e.difference(par).iter().collect();
        let mut cur = par.clone();
        let mut cur_pos = g_pos[pi];
        for (out, inc) in outgoing.iter().zip(&incoming) {
            cur.remove(*out);
            cur.insert(*inc);
            cur_pos = push(cur.clone(), Some(cur_pos), &mut edges);
        }
        g_pos[i] = cur_pos;
    }
    let g = Hypergraph::build(h.n(), edges, h.uniformity(), false)?;
    let order = (0..g.len()).collect();
    let cert_g = TreeCertificate::new(&g, order, parent);
    if !cert_g.is_tight() {
        return invalid("tightening chain failed to certify");
    }
    Ok((g, cert_g))
}

/// Per-vertex colour of a compatible `r`-partition, propagated along the ordering.
pub(crate) fn colouring(h: &Hypergraph, cert: &TreeCertificate) -> Result<HashMap<Vertex, usize>> {
    let r = require_uniform(h)?;
    require_valid(h, cert)?;
    let mut colour: HashMap<Vertex, usize> = HashMap::new();
    for &ei in cert.order() {
        let e = h.edge(ei);
        let used: Vec<usize> = e.iter().filter_map(|v| colour.get(&v).copied()).collect();
        let mut free = (0..r).filter(|c| !used.contains(c));
        for v in e.iter() {
            if !colour.contains_key(&v) {
                let c = free
                    .next()
                    .expect("valid certificates leave enough colours");
                colour.insert(v, c);
            }
        }
        let mut seen: Vec<usize> = e.iter().map(|v| colour[&v]).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), r, "colour conflict under a valid certificate");
    }
    Ok(colour)
}

/// A compatible `r`-partition of the vertices covered by `h`, indexed by colour.
///
/// The first edge's vertices receive colours `0..r` in ascending order; each new
/// vertex takes the smallest colour not already present in its edge.
pub fn r_partition(h: &Hypergraph, cert: &TreeCertificate) -> Result<Vec<VertexSet>> {
    let r = require_uniform(h)?;
    let colour = colouring(h, cert)?;
    let mut classes = vec![VertexSet::new(); r];
    for (v, c) in colour {
        classes[c].insert(v);
    }
    Ok(classes)
}

/// Replaces `x` by `y` in every edge; the same certificate remains valid.
///
/// Requires `x ∈ E_i \ E_α(i)` and `y ∈ E_α(i) \ E_i` for the edge at position `i`.
/// The result may repeat edges and is returned as a multi-hypergraph.
pub fn compress(
    h: &Hypergraph,
    cert: &TreeCertificate,
    i: usize,
    x: Vertex,
    y: Vertex,
) -> Result<(Hypergraph, TreeCertificate)> {
    require_valid(h, cert)?;
    if i == 0 || i >= cert.len() {
        return invalid(format!("position {i} has no parent"));
    }
    let e = h.edge(cert.edge_at(i));
    let par = h.edge(cert.edge_at(cert.parent(i).expect("non-first position")));
    if !e.contains(x) || par.contains(x) {
        return invalid(format!("vertex {x} is not in E_i \\ E_α(i)"));
    }
    if !par.contains(y) || e.contains(y) {
        return invalid(format!("vertex {y} is not in E_α(i) \\ E_i"));
    }
    let edges: Vec<VertexSet> = h.edges().iter().map(|f| f.replace(x, y)).collect();
    let out = Hypergraph::build(h.n(), edges, h.uniformity(), true)?;
    let cert_out = TreeCertificate::new(&out, cert.order().to_vec(), cert.parents().to_vec());
    Ok((out, cert_out))
}

/// Smallest hosting tree: an `r`-tree `G ⊇ H` with `V(G) = V(H)`.
///
/// Each vertex of `T` outside `H` is compressed into the same-coloured vertex of the
/// parent of the first edge containing it. When that first edge is the root, the
/// certificate is first re-rooted at an edge of `H`.
pub fn host_tree(
    h: &Hypergraph,
    t: &Hypergraph,
    cert_t: &TreeCertificate,
) -> Result<(Hypergraph, TreeCertificate)> {
    require_uniform(t)?;
    require_valid(t, cert_t)?;
    if !h.is_subgraph_of(t) {
        return invalid("H is not a subgraph of T");
    }
    if h.is_empty() {
        return Ok((
            Hypergraph::empty(h.n(), t.uniformity().unwrap()),
            TreeCertificate::empty(),
        ));
    }
    let colour = colouring(t, cert_t)?;
    let keep = h.support();
    let n = h.n().max(t.n());
    let mut cur = Hypergraph::build(n, t.edges().to_vec(), t.uniformity(), true)?;
    let mut cert = cert_t.clone();
    for x in t.support().difference(&keep).iter() {
        let Some(mut i) = cert.first_position_containing(&cur, x) else {
            continue;
        };
        if i == 0 {
            let anchor = (0..cert.len())
                .find(|&p| h.contains_edge(cur.edge(cert.edge_at(p))))
                .expect("edges of H survive compression");
            cert = cert.rerooted(&cur, anchor)?;
            i = cert
                .first_position_containing(&cur, x)
                .expect("x still present");
        }
        let par = cur.edge(cert.edge_at(cert.parent(i).expect("non-root")));
        let y = par
            .iter()
            .find(|v| colour[v] == colour[&x])
            .expect("parent edge meets every colour class");
        let (next, next_cert) = compress(&cur, &cert, i, x, y)?;
        cur = next;
        cert = next_cert;
    }
    let (g, cert_g) = dedup_certified(&cur, &cert);
    let g = g.with_n(h.n())?;
    let cert_g = TreeCertificate::new(&g, cert_g.order().to_vec(), cert_g.parents().to_vec());
    Ok((g, cert_g))
}

/// Edges through `x`, in inherited order and with inherited parents.
pub fn subtree_at(
    h: &Hypergraph,
    cert: &TreeCertificate,
    x: Vertex,
) -> Result<(Hypergraph, TreeCertificate)> {
    require_valid(h, cert)?;
    restrict(h, cert, |e| e.contains(x))
}

/// Sub-certificate on the positions whose edge satisfies `keep`.
///
/// Every kept non-first position must have a kept parent.
fn restrict(
    h: &Hypergraph,
    cert: &TreeCertificate,
    keep: impl Fn(&VertexSet) -> bool,
) -> Result<(Hypergraph, TreeCertificate)> {
    let mut new_pos = vec![None; cert.len()];
    let mut edges = Vec::new();
    let mut parent = Vec::new();
    for (i, &ei) in cert.order().iter().enumerate() {
        let e = h.edge(ei);
        if !keep(e) {
            continue;
        }
        let p = if edges.is_empty() {
            None
        } else {
            let p = cert.parent(i).and_then(|p| new_pos[p]);
            if p.is_none() {
                return invalid(format!("parent of position {i} is not retained"));
            }
            p
        };
        new_pos[i] = Some(edges.len());
        edges.push(e.clone());
        parent.push(p);
    }
    let g = Hypergraph::build(h.n(), edges, h.uniformity(), h.allows_multi())?
        .with_uniformity(h.uniformity());
    let order = (0..g.len()).collect();
    let cert_g = TreeCertificate::new(&g, order, parent);
    Ok((g, cert_g))
}

/// A detachable limb `H_w` of a tree, the remaining tree `H'`, and the joining edges.
#[derive(Clone, Debug, Serialize)]
pub struct Limb {
    /// Last cross-cut vertex to be covered along the ordering.
    pub w: Vertex,
    #[serde(skip)]
    pub limb: (Hypergraph, TreeCertificate),
    #[serde(skip)]
    pub rest: (Hypergraph, TreeCertificate),
    /// Starting edge of the limb.
    pub start: VertexSet,
    /// Parent of `start`, an edge of the remaining tree.
    pub anchor: VertexSet,
}

fn is_crosscut(h: &Hypergraph, s: &VertexSet) -> bool {
    h.edges().iter().all(|e| e.intersection(s).len() == 1)
}

/// Splits off the edges through the last-covered vertex of a cross-cut.
pub fn detach_limb(h: &Hypergraph, cert: &TreeCertificate, s: &VertexSet) -> Result<Limb> {
    require_valid(h, cert)?;
    if s.len() < 2 {
        return invalid("the cross-cut must have at least two vertices");
    }
    if !is_crosscut(h, s) {
        return invalid("S is not a cross-cut");
    }
    let first = |v: Vertex| cert.first_position_containing(h, v);
    let w = s
        .iter()
        .max_by_key(|&v| first(v).map_or(-1, |p| p as i64))
        .expect("nonempty cross-cut");
    let k = first(w).ok_or_else(|| Error::InvalidArgument(format!("{w} lies in no edge")))?;
    let start = h.edge(cert.edge_at(k)).clone();
    let anchor = h
        .edge(cert.edge_at(cert.parent(k).expect("k > 0 since |S| >= 2")))
        .clone();
    let limb = restrict(h, cert, |e| e.contains(w))?;
    let rest = restrict(h, cert, |e| !e.contains(w))?;
    Ok(Limb {
        w,
        limb,
        rest,
        start,
        anchor,
    })
}

/// Embeds `H - S` into an `(r-1)`-tree on exactly the vertices of `H - S`.
///
/// `T ⊇ H` must be a 1-reducible `r`-tree and `S` a cross-cut of `H`. The cross-cut is
/// extended by one degree-1 vertex of every `T`-edge it misses, `T` is traced on the
/// complement, short edges are padded with fresh expansion vertices, and the padded
/// tree is compressed down to `V(H - S)`.
pub fn delete_crosscut(
    h: &Hypergraph,
    t: &Hypergraph,
    cert_t: &TreeCertificate,
    s: &VertexSet,
) -> Result<(Hypergraph, TreeCertificate)> {
    let r = require_uniform(t)?;
    if r < 2 {
        return invalid("cross-cut deletion needs r >= 2");
    }
    require_valid(t, cert_t)?;
    if !h.is_subgraph_of(t) {
        return invalid("H is not a subgraph of T");
    }
    if !is_crosscut(h, s) {
        return invalid("S is not a cross-cut of H");
    }
    if !super::is_k_reducible(t, 1) {
        return invalid("T is not 1-reducible");
    }
    let mut extended = s.clone();
    for e in t.edges() {
        if e.is_disjoint(s) {
            let v = e
                .iter()
                .find(|&v| t.vertex_degree(v) == 1)
                .expect("1-reducible edges have a degree-1 vertex");
            extended.insert(v);
        }
    }
    let n = h.n().max(t.n());
    let keep: VertexSet = (0..n as Vertex)
        .filter(|v| !extended.contains(*v))
        .collect();
    let traced = t.with_n(n)?.trace(&keep);
    let traced_cert = find_tree_ordering(&traced, None, false)?
        .ok_or_else(|| Error::InvalidArgument("trace of T is not a tree".into()))?;
    // pad short edges with fresh vertices
    let mut next = n as Vertex;
    let mut padded = Vec::with_capacity(traced.len());
    for e in traced.edges() {
        let mut e = e.clone();
        while e.len() < r - 1 {
            e.insert(next);
            next += 1;
        }
        padded.push(e);
    }
    let t_prime = Hypergraph::build(next as usize, padded, Some(r - 1), false)?;
    let t_prime_cert = TreeCertificate::new(
        &t_prime,
        traced_cert.order().to_vec(),
        traced_cert.parents().to_vec(),
    );
    let reduced = h
        .remove_vertices(s)
        .with_uniformity(Some(r - 1))
        .with_n(next as usize)?;
    let (g, cert_g) = host_tree(&reduced, &t_prime, &t_prime_cert)?;
    let g = g.with_n(h.n())?;
    let cert_g = TreeCertificate::new(&g, cert_g.order().to_vec(), cert_g.parents().to_vec());
    Ok((g, cert_g))
}

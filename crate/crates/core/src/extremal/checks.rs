//! Numerical checks of the structural lemmas on concrete families.

use serde::Serialize;

use crate::covers::{sigma, tau};
use crate::embedding::{embed_anchored_in, is_free, EmbedOutcome, Target};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::tree::find_tree_ordering;

use super::constructions::{gen_c, gen_s};

/// Which lower-bound construction to certify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Construction {
    /// All `r`-sets meeting a `(τ-1)`-set.
    S,
    /// All `r`-sets meeting a `(σ-1)`-set in exactly one vertex.
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub construction: Construction,
    pub n: usize,
    pub t: usize,
    pub size: usize,
    pub free: bool,
}

/// Builds the construction for `h` on `n` vertices and searches it for a copy of `h`.
pub fn certify_construction_free(
    h: &Hypergraph,
    n: usize,
    which: Construction,
) -> Result<FreenessReport> {
    let r = h
        .uniformity()
        .ok_or_else(|| Error::InvalidArgument("H must be uniform".into()))?;
    let t = match which {
        Construction::S => tau(h)?.value(),
        Construction::C => sigma(h)?
            .ok_or_else(|| Error::InvalidArgument("H has no cross-cut".into()))?
            .value(),
    }
    .saturating_sub(1);
    let family = if r > n || t > n {
        Hypergraph::empty(n, r)
    } else {
        match which {
            Construction::S => gen_s(n, r, t)?,
            Construction::C => gen_c(n, r, t)?,
        }
    };
    let free = is_free(&family, h)?;
    Ok(FreenessReport {
        construction: which,
        n,
        t,
        size: family.len(),
        free,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

impl Inequality {
    fn new(lhs: u128, rhs: u128) -> Self {
        Inequality {
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }
}

/// `|F| <= (p - r) |∂_{r-1} F|` for an `h`-free `f`, where `h` is an `r`-tree on `p` vertices.
pub fn tree_shadow_bound_check(f: &Hypergraph, h: &Hypergraph) -> Result<Inequality> {
    let Some(r) = h.uniformity() else {
        return invalid("H must be uniform");
    };
    if find_tree_ordering(h, None, false)?.is_none() {
        return invalid("H is not a hypergraph tree");
    }
    if !f.is_empty() && f.uniformity() != Some(r) {
        return invalid("F must have the same uniformity as H");
    }
    if !is_free(f, h)? {
        return invalid("F contains H; the bound applies only to H-free families");
    }
    let p = h.support().len();
    let shadow = if f.is_empty() || r < 2 {
        0
    } else {
        f.simplified().shadow(r - 1)?.len()
    };
    Ok(Inequality::new(
        f.simplified().len() as u128,
        (p - r) as u128 * shadow as u128,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingReport {
    /// Edges of `G` in no copy of `M`.
    pub isolated: usize,
    /// Non-edges of `G`.
    pub missing: usize,
    #[serde(flatten)]
    pub inequality: Inequality,
}

/// `|G_0| <= (m - 1) |complement of G|`, where `G_0` holds the edges of `g` in no copy of `m`.
///
/// `budget` bounds each anchored copy search.
pub fn missing_vs_non_m_check(
    g: &Hypergraph,
    m: &Hypergraph,
    budget: Option<u64>,
) -> Result<MissingReport> {
    if m.len() < 2 {
        return invalid("M needs at least two edges");
    }
    let Some(r) = g.uniformity().or(m.uniformity()) else {
        return invalid("G must be uniform");
    };
    if !g.is_simple() {
        return invalid("G must be simple");
    }
    if m.uniformity() != Some(r) {
        return invalid("M must have the same uniformity as G");
    }
    if m.support().len() > g.n() {
        return invalid("M does not fit on the vertices of G");
    }
    let missing = if g.is_empty() {
        crate::combinatorics::binomial(g.n() as u64, r as u64) as usize
    } else {
        g.complement()?.len()
    };
    let target = Target::new(g)?;
    let mut isolated = 0;
    for e in g.edges() {
        match embed_anchored_in(m, g, &target, e, budget)?.outcome {
            EmbedOutcome::None => isolated += 1,
            EmbedOutcome::Found(_) => {}
            EmbedOutcome::Budget => return Err(Error::BudgetExhausted(budget.unwrap_or(0))),
        }
    }
    let inequality = Inequality::new(isolated as u128, (m.len() - 1) as u128 * missing as u128);
    Ok(MissingReport {
        isolated,
        missing,
        inequality,
    })
}

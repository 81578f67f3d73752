use std::collections::BTreeMap;
use std::path::Path;

use hypertree::covers::{enumerate_min_crosscuts, sigma as sigma_of, tau as tau_of};
use hypertree::embedding::embed as embed_search;
use hypertree::extremal::{
    bound_sigma_lower, bound_tau_lower, certify_construction_free, critical_formula, gen_standard,
    homogeneous_extract, missing_vs_non_m_check, tree_shadow_bound_check, turan_oracle,
    Construction,
};
use hypertree::tree::{find_tree_ordering, is_k_reducible, r_partition, verify_certificate};
use hypertree::Hypergraph;
use serde_json::{json, Value};

use crate::{Failure, Outcome, Prop};

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result serializes")
}

pub fn analyze(h: &Hypergraph, certify: bool) -> Result<Outcome, Failure> {
    let cert = match find_tree_ordering(h, None, true)? {
        Some(c) => Some(c),
        None => find_tree_ordering(h, None, false)?,
    };
    let tree = match &cert {
        None => Value::Null,
        Some(c) => {
            let mut t = json!({ "certificate": c.to_json_value(), "tight": c.is_tight() });
            if certify {
                t["check"] = to_value(&verify_certificate(h, c)?);
            }
            t
        }
    };
    let partition = match (&cert, h.uniformity()) {
        (Some(c), Some(_)) if !h.is_empty() => to_value(&r_partition(h, c)?),
        _ => Value::Null,
    };
    let reducible = h
        .uniformity()
        .and_then(|r| (0..=r).rev().find(|&k| is_k_reducible(h, k)));
    let cover = tau_of(h)?;
    let cut = sigma_of(h)?;
    let min_cuts: Vec<_> = if cut.is_some() {
        enumerate_min_crosscuts(h)?
    } else {
        Vec::new()
    };
    Ok(Outcome::ok(json!({
        "n": h.n(),
        "edges": h.len(),
        "r": h.uniformity(),
        "simple": h.is_simple(),
        "tree": tree,
        "tau": { "value": cover.value(), "cover": cover.vertices },
        "sigma": cut.map(|c| json!({
            "value": c.value(),
            "crosscut": c.vertices,
            "minimum_crosscuts": min_cuts.iter().map(|c| &c.vertices).collect::<Vec<_>>(),
        })),
        "reducible": reducible,
        "r_partition": partition,
    })))
}

pub fn construct(
    family: &str,
    params: &[String],
    output: Option<&Path>,
) -> Result<Outcome, Failure> {
    let mut map = BTreeMap::new();
    for p in params.iter().filter(|p| !p.trim().is_empty()) {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Failure(format!("parameter {p:?} is not key=value")))?;
        let v: usize = v
            .trim()
            .parse()
            .map_err(|_| Failure(format!("parameter {p:?} needs an integer value")))?;
        map.insert(k.trim().to_string(), v);
    }
    let h = gen_standard(family, &map)?;
    if let Some(path) = output {
        std::fs::write(path, h.to_json())
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome::ok(
        json!({ "family": family, "params": map, "hypergraph": h }),
    ))
}

pub fn embed(h: &Hypergraph, f: &Hypergraph, budget: Option<u64>) -> Result<Outcome, Failure> {
    let res = embed_search(h, f, budget)?;
    Ok(Outcome::ok(to_value(&res)))
}

pub fn sigma(h: &Hypergraph) -> Result<Outcome, Failure> {
    let results = match sigma_of(h)? {
        None => json!({ "value": null, "crosscut": null, "minimum_crosscuts": [] }),
        Some(c) => {
            let all = enumerate_min_crosscuts(h)?;
            json!({
                "value": c.value(),
                "crosscut": c.vertices,
                "minimum_crosscuts": all.iter().map(|c| &c.vertices).collect::<Vec<_>>(),
            })
        }
    };
    Ok(Outcome::ok(results))
}

pub fn tau(h: &Hypergraph) -> Result<Outcome, Failure> {
    let c = tau_of(h)?;
    Ok(Outcome::ok(
        json!({ "value": c.value(), "cover": c.vertices }),
    ))
}

pub fn turan(n: usize, r: usize, h: &Hypergraph, budget: Option<u64>) -> Result<Outcome, Failure> {
    let res = turan_oracle(n, r, h, budget)?;
    let sigma_bound = bound_sigma_lower(h, n).ok();
    let critical = sigma_of(h)?.map(|c| critical_formula(n, r, c.value()));
    Ok(Outcome::ok(json!({
        "oracle": res,
        "bounds": {
            "sigma_lower": sigma_bound,
            "tau_lower": bound_tau_lower(h, n)?,
            "critical_formula": critical,
        },
    })))
}

pub fn shadow(h: &Hypergraph, p: usize) -> Result<Outcome, Failure> {
    let s = h.shadow(p)?;
    let kk = match h.uniformity() {
        Some(r) if p >= 1 && p < r && !h.is_empty() && h.is_simple() => to_value(&h.kk_check(p)?),
        _ => Value::Null,
    };
    Ok(Outcome::ok(
        json!({ "p": p, "size": s.len(), "shadow": s, "kruskal_katona": kk }),
    ))
}

pub fn homogeneous(h: &Hypergraph, s: usize, tries: usize, seed: u64) -> Result<Outcome, Failure> {
    let out = homogeneous_extract(h, s, tries, seed)?;
    Ok(Outcome::ok(
        json!({ "size": out.family.len(), "extraction": out }),
    ))
}

pub fn verify_construction(h: &Hypergraph, n: usize, prop: Prop) -> Result<Outcome, Failure> {
    let (which, bound) = match prop {
        Prop::Cover => (Construction::S, bound_tau_lower(h, n)?),
        _ => (Construction::C, bound_sigma_lower(h, n)?),
    };
    let report = certify_construction_free(h, n, which)?;
    let passed = report.free;
    if !passed {
        eprintln!("construction {which:?} on {n} vertices contains H");
    }
    Ok(Outcome {
        results: json!({ "report": report, "lower_bound": bound }),
        passed,
    })
}

pub fn verify_tree_shadow(f: &Hypergraph, h: &Hypergraph) -> Result<Outcome, Failure> {
    let ineq = tree_shadow_bound_check(f, h)?;
    let passed = ineq.holds;
    Ok(Outcome {
        results: to_value(&ineq),
        passed,
    })
}

pub fn verify_missing(
    g: &Hypergraph,
    m: &Hypergraph,
    budget: Option<u64>,
) -> Result<Outcome, Failure> {
    let report = missing_vs_non_m_check(g, m, budget)?;
    let passed = report.inequality.holds;
    Ok(Outcome {
        results: to_value(&report),
        passed,
    })
}

pub fn verify_kk(f: &Hypergraph, p: usize) -> Result<Outcome, Failure> {
    let report = f.kk_check(p)?;
    let passed = report.holds;
    Ok(Outcome {
        results: to_value(&report),
        passed,
    })
}

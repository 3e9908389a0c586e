use std::fmt::Write as _;

use serde_json::json;

use super::IdealLattice;
use crate::linalg::{rational, Subspace};

/// Name of `ideal` as a direct sum of named components (fewest parts wins),
/// `0` / `g` for the trivial ideals, or `dim=k` when nothing matches.
pub fn label_for(ideal: &Subspace, components: &[(String, Subspace)]) -> String {
    if ideal.is_zero() {
        return "0".into();
    }
    if ideal.is_full() {
        return "g".into();
    }
    let k = components.len();
    let mut best: Option<(u32, String)> = None;
    for mask in 1u32..(1 << k) {
        let parts: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let total: usize = parts.iter().map(|&i| components[i].1.dim()).sum();
        if total != ideal.dim() {
            continue;
        }
        let Ok(sum) = parts
            .iter()
            .try_fold(Subspace::zero(ideal.ambient_dim()), |acc, &i| {
                acc.sum(&components[i].1)
            })
        else {
            continue;
        };
        if &sum != ideal {
            continue;
        }
        let count = mask.count_ones();
        if best.as_ref().is_none_or(|(c, _)| count < *c) {
            let label = parts
                .iter()
                .map(|&i| components[i].0.as_str())
                .collect::<Vec<_>>()
                .join("+");
            best = Some((count, label));
        }
    }
    best.map(|(_, l)| l)
        .unwrap_or_else(|| format!("dim={}", ideal.dim()))
}

/// Graphviz digraph of the covering relation, edges pointing upward.
pub fn to_dot(lattice: &IdealLattice, components: &[(String, Subspace)]) -> String {
    let mut out = String::from("digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, ideal) in lattice.ideals.iter().enumerate() {
        let label = label_for(ideal, components).replace('"', "\\\"");
        writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
    }
    for (i, j) in &lattice.coverings {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// JSON document listing each ideal's canonical basis as rational strings.
pub fn to_json(lattice: &IdealLattice, components: &[(String, Subspace)]) -> serde_json::Value {
    let ideals: Vec<_> = lattice
        .ideals
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let basis: Vec<Vec<String>> = s
                .basis_vectors()
                .iter()
                .map(|row| row.iter().map(rational::format).collect())
                .collect();
            json!({
                "index": i,
                "dim": s.dim(),
                "label": label_for(s, components),
                "basis": basis,
            })
        })
        .collect();
    json!({
        "count": lattice.ideals.len(),
        "status": lattice.certificate.status.label(),
        "ideals": ideals,
        "coverings": lattice.coverings,
    })
}

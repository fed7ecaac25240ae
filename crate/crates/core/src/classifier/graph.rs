//! Node enumeration, labels, arrows and graph emission.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::pattern::{validate, Slot, ZeroPattern};
use crate::error::{Error, Result};
use crate::par::Exec;

/// Prime mark used in node labels.
pub const PRIME: char = '′';

/// Unprimed labels, their patterns and the families drawn on them.
const BASE_NODES: [(&str, &str, &[&str]); 18] = [
    ("1a", "BBB|BBBBB|BBB", &["Askey-Wilson", "q-Racah"]),
    ("2a", "BBB|BBBBW|BBW", &["continuous dual q-Hahn", "dual q-Hahn"]),
    ("2b", "BBW|BBBBW|BBB", &["big q-Jacobi", "q-Hahn"]),
    ("3a", "BBB|BBBWW|BBW", &["Al-Salam-Chihara", "dual q-Krawtchouk"]),
    ("3b", "WBB|WBBBW|BBW", &["big q-Laguerre", "q^-1-Meixner", "affine q-Krawtchouk", "quantum q^-1-Krawtchouk"]),
    ("3c", "BBW|BBBBW|BBW", &["big q-Laguerre", "q^-1-Meixner", "affine q-Krawtchouk", "quantum q^-1-Krawtchouk"]),
    ("3d", "BBW|BBBWW|BBB", &["little q-Jacobi", "q-Krawtchouk"]),
    ("3e", "WBW|WBBBW|BBB", &["little q-Jacobi", "q-Krawtchouk"]),
    ("4a", "BBB|BBWWW|BBW", &["continuous big q-Hermite"]),
    ("4b", "BBW|BBBWW|BBW", &["x^n (b/x;q)_n"]),
    ("4c", "WBB|WBBWW|BBW", &["Al-Salam-Carlitz I", "q^-1-Al-Salam-Carlitz II"]),
    ("4d", "WBB|WWBBW|BBW", &["little q-Laguerre", "q^-1-Laguerre", "q^-1-Charlier"]),
    ("4e", "WBW|WBBBW|BBW", &["little q-Laguerre", "q^-1-Laguerre", "q^-1-Charlier"]),
    ("4f", "BBW|BBWWW|BBB", &["q^-1-Bessel"]),
    ("4g", "WBW|WBBWW|BBB", &["q-Bessel"]),
    ("5a", "BBW|BBWWW|BBW", &["x^n"]),
    ("5b", "WBW|WBBWW|BBW", &["x^n (1/x;q)_n"]),
    ("5c", "WBW|WWBBW|BBW", &["q^-1-Stieltjes-Wigert"]),
];

/// Families recorded on primed nodes (the `q -> 1/q` images).
const PRIMED_FAMILIES: [(&str, &[&str]); 2] = [("4f", &["q-Bessel"]), ("5c", &["Stieltjes-Wigert"])];

/// Arrows drawn in the unprimed half of the scheme.
pub const DRAWN_ARROWS: [(&str, &str); 29] = [
    ("1a", "2a"),
    ("1a", "2b"),
    ("2a", "3a"),
    ("2a", "3b"),
    ("2a", "3c"),
    ("2b", "3c"),
    ("2b", "3d"),
    ("2b", "3e"),
    ("3a", "4a"),
    ("3a", "4b"),
    ("3a", "4c"),
    ("3b", "4c"),
    ("3b", "4d"),
    ("3b", "4e"),
    ("3c", "4b"),
    ("3c", "4e"),
    ("3d", "4f"),
    ("3d", "4g"),
    ("3e", "4e"),
    ("3e", "4g"),
    ("4a", "5a"),
    ("4b", "5a"),
    ("4b", "5b"),
    ("4c", "5b"),
    ("4d", "5c"),
    ("4e", "5b"),
    ("4e", "5c"),
    ("4f", "5a"),
    ("4g", "5b"),
];

/// Arrows between the unprimed and primed halves.
pub const CROSS_ARROWS: [(&str, &str); 6] =
    [("2b", "3b′"), ("2b′", "3b"), ("3d", "4d′"), ("3d′", "4d"), ("4g", "5c′"), ("4g′", "5c")];

/// Dual pairs listed with the scheme; the self-dual nodes map to themselves.
pub const DUAL_PAIRS: [(&str, &str); 9] = [
    ("1a", "1a"),
    ("3c", "3c"),
    ("4b", "4b"),
    ("5a", "5a"),
    ("2a", "2b"),
    ("3a", "3d"),
    ("3b", "3b′"),
    ("4a", "4f"),
    ("4c", "4d′"),
];

/// Toggle the prime on a label; `'` is accepted as input for `′`.
pub fn mirror_label(label: &str) -> String {
    let label = normalize_label(label);
    match label.strip_suffix(PRIME) {
        Some(base) => base.to_string(),
        None if label == "1a" || label == "3e" => label,
        None => format!("{label}{PRIME}"),
    }
}

/// Replaces an ASCII `'` by `′`.
pub fn normalize_label(label: &str) -> String {
    label.trim().replace('\'', &PRIME.to_string())
}

/// Label table for the 34 scheme patterns.
pub fn label_table() -> BTreeMap<ZeroPattern, String> {
    let mut out = BTreeMap::new();
    for (label, code, _) in BASE_NODES {
        let p: ZeroPattern = code.parse().expect("static pattern");
        out.insert(p, label.to_string());
        out.entry(p.mirror()).or_insert_with(|| mirror_label(label));
    }
    out
}

pub fn label_of(p: &ZeroPattern) -> Option<String> {
    label_table().get(p).cloned()
}

pub fn pattern_for_label(label: &str) -> Result<ZeroPattern> {
    let label = normalize_label(label);
    label_table()
        .into_iter()
        .find(|(_, l)| *l == label)
        .map(|(p, _)| p)
        .ok_or_else(|| Error::Parse(format!("unknown node label {label:?}")))
}

pub fn families_of(label: &str) -> Vec<String> {
    let label = normalize_label(label);
    if let Some(base) = label.strip_suffix(PRIME) {
        return PRIMED_FAMILIES
            .iter()
            .find(|(l, _)| *l == base)
            .map(|(_, fams)| fams.iter().map(|s| s.to_string()).collect())
            .unwrap_or_default();
    }
    BASE_NODES
        .iter()
        .find(|(l, _, _)| *l == label)
        .map(|(_, _, fams)| fams.iter().map(|s| s.to_string()).collect())
        .unwrap_or_default()
}

/// Every candidate with `a0`, `b0` black that passes rules 1 to 5.
pub fn admissible_patterns(exec: Exec) -> BTreeSet<ZeroPattern> {
    let candidates: Vec<u32> = (0..1u32 << Slot::FLIPPABLE.len()).collect();
    exec.map(candidates, |mask| {
        let mut p = ZeroPattern::all_black();
        for (i, slot) in Slot::FLIPPABLE.iter().enumerate() {
            p.set(*slot, mask & (1 << i) != 0);
        }
        validate(&p).is_empty().then_some(p)
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Scheme nodes: admissible patterns that some parameter vector realizes.
pub fn enumerate_nodes() -> BTreeSet<ZeroPattern> {
    enumerate_nodes_with(Exec::default())
}

pub fn enumerate_nodes_with(exec: Exec) -> BTreeSet<ZeroPattern> {
    admissible_patterns(exec).into_iter().filter(ZeroPattern::realizable).collect()
}

/// Admissible patterns outside the node set, with `X-n` labels.
pub fn unlisted_patterns() -> Vec<UnlistedPattern> {
    let table = label_table();
    admissible_patterns(Exec::default())
        .into_iter()
        .filter(|p| !table.contains_key(p))
        .enumerate()
        .map(|(i, pattern)| UnlistedPattern {
            label: format!("X-{}", i + 1),
            pattern,
            realizable: pattern.realizable(),
        })
        .collect()
}

/// Targets of single flips (with cascade) that stay inside the node set.
pub fn arrows_from(p: &ZeroPattern) -> BTreeSet<ZeroPattern> {
    Slot::FLIPPABLE
        .iter()
        .filter(|s| p.get(**s))
        .map(|s| p.flip(*s))
        .filter(|t| validate(t).is_empty() && t.realizable())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeNode {
    pub label: String,
    pub pattern: ZeroPattern,
    pub families: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnlistedPattern {
    pub label: String,
    pub pattern: ZeroPattern,
    pub realizable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeGraph {
    pub nodes: Vec<SchemeNode>,
    pub arrows: Vec<(String, String)>,
    pub unlisted: Vec<UnlistedPattern>,
}

impl SchemeGraph {
    pub fn node(&self, label: &str) -> Option<&SchemeNode> {
        let label = normalize_label(label);
        self.nodes.iter().find(|n| n.label == label)
    }

    pub fn has_arrow(&self, from: &str, to: &str) -> bool {
        let key = (normalize_label(from), normalize_label(to));
        self.arrows.binary_search(&key).is_ok()
    }

    /// Labels reachable from `from` along arrows, `from` included.
    pub fn reachable(&self, from: &str) -> BTreeSet<String> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![normalize_label(from)];
        while let Some(cur) = stack.pop() {
            if seen.insert(cur.clone()) {
                stack.extend(self.arrows.iter().filter(|(s, _)| *s == cur).map(|(_, t)| t.clone()));
            }
        }
        seen
    }
}

pub fn build_graph() -> SchemeGraph {
    let table = label_table();
    let mut nodes: Vec<SchemeNode> = enumerate_nodes()
        .into_iter()
        .map(|pattern| {
            let label = table.get(&pattern).cloned().expect("every node carries a label");
            let families = families_of(&label);
            SchemeNode { label, pattern, families }
        })
        .collect();
    nodes.sort_by(|a, b| a.label.cmp(&b.label));
    let mut arrows: Vec<(String, String)> = nodes
        .iter()
        .flat_map(|n| arrows_from(&n.pattern).into_iter().map(|t| (n.label.clone(), table[&t].clone())))
        .collect();
    arrows.sort();
    arrows.dedup();
    SchemeGraph { nodes, arrows, unlisted: unlisted_patterns() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<GraphFormat> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            _ => Err(Error::Parse(format!("unknown graph format {s:?}"))),
        }
    }
}

pub fn emit(graph: &SchemeGraph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::Json => {
            let mut out = serde_json::to_vec_pretty(graph).expect("graph serializes");
            out.push(b'\n');
            out
        }
        GraphFormat::Dot => emit_dot(graph).into_bytes(),
    }
}

fn emit_dot(graph: &SchemeGraph) -> String {
    let mut s = String::new();
    s.push_str("digraph scheme {\n");
    let _ = writeln!(
        s,
        "  // {} nodes, {} arrows, {} unlisted admissible patterns",
        graph.nodes.len(),
        graph.arrows.len(),
        graph.unlisted.len()
    );
    for n in &graph.nodes {
        let _ = writeln!(s, "  \"{}\" [label=\"{}\", tooltip=\"{}\"];", n.label, n.label, n.pattern);
    }
    for (a, b) in &graph.arrows {
        let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
    }
    s.push_str("}\n");
    s
}

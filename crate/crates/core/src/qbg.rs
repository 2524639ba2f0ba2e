//! The quantum Bruhat graph.
//!
//! Edges are tested two ways: from lengths (the definition) and from the
//! circular-order criteria on windows. The criterion is used everywhere in the
//! library; the length test exists to cross-check it.

use std::fmt;

use serde_json::{json, Value};

use crate::weyl::{LieType, Letter, RootLabel, WeylElement};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Up,
    Quantum,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Up => "up",
            EdgeKind::Quantum => "quantum",
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `w -> w s_r` by the length conditions.
pub fn edge_by_length(w: &WeylElement, r: RootLabel) -> Option<EdgeKind> {
    let before = w.length() as i64;
    let after = w.apply_root(r).length() as i64;
    if after == before + 1 {
        Some(EdgeKind::Up)
    } else if after == before - 2 * r.rho_pairing(w.lie()) + 1 {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

/// `w -> w s_r` by the circular-order and sign criteria.
pub fn edge_by_criterion(w: &WeylElement, r: RootLabel) -> Option<EdgeKind> {
    let lie = w.lie();
    let n = lie.n();
    match r {
        RootLabel::Diff(i, j) => {
            let (a, b) = (w.value(Letter(i as i32)), w.value(Letter(j as i32)));
            let blocked = (i + 1..j).any(|k| lie.circ_between(a, w.value(Letter(k as i32)), b));
            if blocked {
                None
            } else if a < b {
                Some(EdgeKind::Up)
            } else {
                Some(EdgeKind::Quantum)
            }
        }
        RootLabel::Sum(i, j) => {
            let a = w.value(Letter(i as i32));
            let b = w.value(Letter(-(j as i32)));
            if a >= b || a.sign() != b.sign() {
                return None;
            }
            // positions strictly between i and j̄ in the order of [n̄]
            let between = (i + 1..=n)
                .map(|k| Letter(k as i32))
                .chain((j + 1..=n).rev().map(|k| Letter(-(k as i32))));
            let blocked = between.map(|p| w.value(p)).any(|x| a < x && x < b);
            if blocked {
                None
            } else {
                Some(EdgeKind::Up)
            }
        }
        RootLabel::Long(i) => {
            let a = w.value(Letter(i as i32));
            let blocked = (i + 1..=n).any(|k| lie.circ_between(a, w.value(Letter(k as i32)), a.bar()));
            if blocked {
                None
            } else if a.is_barred() {
                Some(EdgeKind::Quantum)
            } else {
                Some(EdgeKind::Up)
            }
        }
    }
}

/// All outgoing edges of `w`, in the order of [`LieType::positive_roots`].
pub fn qbg_edges(w: &WeylElement) -> Vec<(RootLabel, EdgeKind)> {
    w.lie()
        .positive_roots()
        .into_iter()
        .filter_map(|r| edge_by_criterion(w, r).map(|k| (r, k)))
        .collect()
}

/// The whole graph in Graphviz format; nodes are labelled by windows.
pub fn to_dot(lie: LieType) -> String {
    let elements = WeylElement::all(lie);
    let mut out = format!("digraph qbg_{} {{\n", lie.to_string().to_lowercase());
    for (id, w) in elements.iter().enumerate() {
        out.push_str(&format!("  n{id} [label=\"{w}\"];\n"));
    }
    for (id, w) in elements.iter().enumerate() {
        for (r, kind) in qbg_edges(w) {
            let target = w.apply_root(r);
            let tid = elements.binary_search(&target).expect("group is closed");
            let style = if kind == EdgeKind::Quantum { ", style=dashed" } else { "" };
            out.push_str(&format!("  n{id} -> n{tid} [label=\"{r}; {kind}\"{style}];\n"));
        }
    }
    out.push_str("}\n");
    out
}

pub fn to_json(lie: LieType) -> Value {
    let elements = WeylElement::all(lie);
    let nodes: Vec<Value> = elements
        .iter()
        .enumerate()
        .map(|(id, w)| json!({"id": id, "window": w.window_values(), "length": w.length()}))
        .collect();
    let mut edges = Vec::new();
    for (id, w) in elements.iter().enumerate() {
        for (r, kind) in qbg_edges(w) {
            let tid = elements.binary_search(&w.apply_root(r)).expect("group is closed");
            edges.push(json!({"from": id, "to": tid, "root": r.to_string(), "kind": kind.as_str()}));
        }
    }
    json!({
        "schema": "charge-lab.qbg.v1",
        "type": lie.family().to_string(),
        "n": lie.n(),
        "nodes": nodes,
        "edges": edges,
    })
}

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use thiserror::Error;

use super::Instance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DotView {
    Tree,
    Graph,
    /// The host tree with one member's vertices shaded.
    RepHighlight(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("the `{0}` view needs `{1}` in the instance")]
    MissingPiece(&'static str, &'static str),
    #[error("no member named `{0}`")]
    UnknownMember(String),
}

pub fn to_dot(inst: &Instance, view: &DotView) -> Result<String, DotError> {
    to_dot_annotated(inst, view, &BTreeMap::new())
}

/// Like [`to_dot`], with extra text shown beside the named vertices.
pub fn to_dot_annotated(
    inst: &Instance,
    view: &DotView,
    notes: &BTreeMap<String, String>,
) -> Result<String, DotError> {
    let mut out = String::new();
    match view {
        DotView::Graph => {
            let g = inst.graph.as_ref().ok_or(DotError::MissingPiece("graph", "graph"))?;
            out.push_str("graph G {\n  node [shape=circle];\n");
            for v in g.labels() {
                node_line(&mut out, v, &[], notes);
            }
            for (a, b) in g.edge_labels() {
                let _ = writeln!(out, "  {} -- {};", quote(&a), quote(&b));
            }
        }
        DotView::Tree | DotView::RepHighlight(_) => {
            let t = inst.tree.as_ref().ok_or(DotError::MissingPiece("tree", "tree"))?;
            let shaded: BTreeSet<String> = match view {
                DotView::RepHighlight(name) => {
                    let f = inst
                        .family
                        .as_ref()
                        .ok_or(DotError::MissingPiece("rep-highlight", "subtrees"))?;
                    f.member(name)
                        .ok_or_else(|| DotError::UnknownMember(name.clone()))?
                        .vertices
                        .clone()
                }
                _ => BTreeSet::new(),
            };
            let cover = inst.cover.clone().unwrap_or_default();
            out.push_str("graph T {\n  node [shape=circle, style=filled, fillcolor=white];\n");
            if let DotView::RepHighlight(name) = view {
                let _ = writeln!(out, "  label={};", quote(name));
            }
            for v in t.labels() {
                let mut attrs = Vec::new();
                if shaded.contains(v) {
                    attrs.push(("fillcolor", "gray50"));
                } else if matches!(view, DotView::RepHighlight(_)) {
                    attrs.push(("fillcolor", "gray90"));
                }
                if cover.contains(v) {
                    attrs.push(("penwidth", "2.5"));
                }
                node_line(&mut out, v, &attrs, notes);
            }
            for (a, b) in t.edges() {
                let _ = writeln!(out, "  {} -- {};", quote(&a), quote(&b));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn node_line(out: &mut String, v: &str, attrs: &[(&str, &str)], notes: &BTreeMap<String, String>) {
    let mut parts: Vec<String> = attrs.iter().map(|(k, val)| format!("{k}={val}")).collect();
    if let Some(note) = notes.get(v) {
        parts.push(format!("xlabel={}", quote(note)));
    }
    if parts.is_empty() {
        let _ = writeln!(out, "  {};", quote(v));
    } else {
        let _ = writeln!(out, "  {} [{}];", quote(v), parts.join(", "));
    }
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        match c {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}

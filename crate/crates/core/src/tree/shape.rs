use std::collections::BTreeSet;
use std::fmt;

use super::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeShape {
    Trivial,
    SingleEdge,
    Path,
    Star,
    Caterpillar,
    General,
}

impl TreeShape {
    pub fn name(self) -> &'static str {
        match self {
            TreeShape::Trivial => "trivial",
            TreeShape::SingleEdge => "single-edge",
            TreeShape::Path => "path",
            TreeShape::Star => "star",
            TreeShape::Caterpillar => "caterpillar",
            TreeShape::General => "general",
        }
    }
}

impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every shape tag that applies. `General` is reported exactly for the
/// non-caterpillars.
pub fn classify_tree(t: &Tree) -> BTreeSet<TreeShape> {
    let n = t.len();
    let degrees: Vec<usize> = (0..n).map(|i| t.adj(i).len()).collect();
    let mut tags = BTreeSet::new();
    if n == 1 {
        tags.insert(TreeShape::Trivial);
    }
    if n == 2 {
        tags.insert(TreeShape::SingleEdge);
    }
    if degrees.iter().all(|&d| d <= 2) {
        tags.insert(TreeShape::Path);
    }
    if n <= 2 || degrees.iter().any(|&d| d == n - 1) {
        tags.insert(TreeShape::Star);
    }
    // spine: what remains after deleting every vertex of degree <= 1
    let spine: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 2).collect();
    let spine_is_path = spine.iter().all(|&v| {
        t.adj(v).iter().filter(|&&u| degrees[u] >= 2).count() <= 2
    });
    if spine_is_path {
        tags.insert(TreeShape::Caterpillar);
    } else {
        tags.insert(TreeShape::General);
    }
    tags
}

/// Suppresses every degree-2 vertex, joining its two neighbours. Kept
/// vertices retain their labels and relative order.
pub fn smooth(t: &Tree) -> Tree {
    let (kept, edges) = branch_structure(t);
    let labels: Vec<String> = kept.iter().map(|&v| t.label(v).to_string()).collect();
    let edges: Vec<(String, String)> = edges
        .into_iter()
        .map(|(a, b, _)| (t.label(a).to_string(), t.label(b).to_string()))
        .collect();
    Tree::new(labels, edges).expect("smoothing a tree yields a tree")
}

/// Branch vertices (degree other than 2) in index order, and for every
/// maximal path of degree-2 vertices between two of them the endpoint
/// indices and the path length in edges.
pub(crate) fn branch_structure(t: &Tree) -> (Vec<usize>, Vec<(usize, usize, usize)>) {
    let n = t.len();
    let is_branch = |v: usize| t.adj(v).len() != 2;
    let kept: Vec<usize> = (0..n).filter(|&v| is_branch(v)).collect();
    let mut edges = Vec::new();
    for &start in &kept {
        for &first in t.adj(start) {
            let (mut prev, mut cur, mut len) = (start, first, 1);
            while !is_branch(cur) {
                let next = *t
                    .adj(cur)
                    .iter()
                    .find(|&&u| u != prev)
                    .expect("degree-2 vertex has another neighbour");
                prev = cur;
                cur = next;
                len += 1;
            }
            if start < cur {
                edges.push((start, cur, len));
            }
        }
    }
    (kept, edges)
}

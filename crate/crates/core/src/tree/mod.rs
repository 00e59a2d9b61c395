//! Host trees and the subtree families that live on them.

mod cover;
mod family;
mod iso;
mod shape;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use cover::{bushiness, is_covering_subtree, minimal_covering_subtree, BushinessReport};
pub use family::{
    classify_pair, relate, similarly_related, validate_family, FamilyViolation, Member,
    PairRelation, SubtreeFamily, ViolationReason,
};
pub use iso::{canonical_form, is_subdivision_of, tree_isomorphic, TreeClass};
pub use shape::{classify_tree, smooth, TreeShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("{vertices} vertices need {expected} edges, found {edges}")]
    EdgeCount {
        vertices: usize,
        edges: usize,
        expected: usize,
    },
    #[error("tree is not connected")]
    Disconnected,
    #[error("{0}-{1} is not a host edge")]
    NotAnEdge(String, String),
    #[error("label `{0}` is already used by the host")]
    LabelCollision(String),
    #[error("unknown member `{0}`")]
    UnknownMember(String),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex subset does not induce a subtree")]
    DisconnectedSubset,
    #[error("invalid subtree family: {0:?}")]
    InvalidFamily(Vec<FamilyViolation>),
}

/// An undirected tree over text labels. The vertex sequence is significant
/// for equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self, TreeError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(TreeError::Empty);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(TreeError::DuplicateVertex(label.clone()));
            }
        }
        let mut adj = vec![Vec::new(); labels.len()];
        let mut edge_count = 0;
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let a = *index
                .get(u)
                .ok_or_else(|| TreeError::UnknownVertex(u.to_string()))?;
            let b = *index
                .get(v)
                .ok_or_else(|| TreeError::UnknownVertex(v.to_string()))?;
            if a == b {
                return Err(TreeError::SelfLoop(u.to_string()));
            }
            if adj[a].contains(&b) {
                return Err(TreeError::DuplicateEdge(u.to_string(), v.to_string()));
            }
            adj[a].push(b);
            adj[b].push(a);
            edge_count += 1;
        }
        if edge_count + 1 != labels.len() {
            return Err(TreeError::EdgeCount {
                vertices: labels.len(),
                edges: edge_count,
                expected: labels.len() - 1,
            });
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let tree = Self { labels, index, adj };
        if tree.component_size(0, |_| true) != tree.len() {
            return Err(TreeError::Disconnected);
        }
        Ok(tree)
    }

    pub fn single(label: impl Into<String>) -> Self {
        Self::new([label.into()], Vec::<(String, String)>::new()).expect("K1 is a tree")
    }

    pub fn path<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, TreeError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let edges: Vec<(String, String)> = labels
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        Self::new(labels, edges)
    }

    pub fn star<S: Into<String>>(
        center: impl Into<String>,
        leaves: impl IntoIterator<Item = S>,
    ) -> Result<Self, TreeError> {
        let center = center.into();
        let leaves: Vec<String> = leaves.into_iter().map(Into::into).collect();
        let edges: Vec<(String, String)> = leaves
            .iter()
            .map(|l| (center.clone(), l.clone()))
            .collect();
        Self::new(std::iter::once(center).chain(leaves), edges)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; a tree has at least one vertex.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub(crate) fn adj(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, label: &str) -> Option<usize> {
        self.index_of(label).map(|i| self.adj[i].len())
    }

    pub fn neighbors<'a>(&'a self, label: &str) -> impl Iterator<Item = &'a str> + 'a {
        let nbrs: &'a [usize] = self.index_of(label).map_or(&[], |i| &self.adj[i]);
        nbrs.iter().map(move |&j| self.labels[j].as_str())
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.adj[a].contains(&b),
            _ => false,
        }
    }

    /// A vertex of degree exactly one.
    pub fn is_leaf(&self, label: &str) -> bool {
        self.degree(label) == Some(1)
    }

    pub fn leaves(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self
            .labels
            .iter()
            .filter(|l| self.is_leaf(l))
            .map(String::as_str)
            .collect();
        out.sort_unstable();
        out
    }

    /// Edges as label pairs, each pair and the whole list sorted.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for (a, nbrs) in self.adj.iter().enumerate() {
            for &b in nbrs.iter().filter(|&&b| b > a) {
                out.push(crate::graph::sorted_pair(&self.labels[a], &self.labels[b]));
            }
        }
        out.sort();
        out
    }

    fn component_size(&self, start: usize, keep: impl Fn(usize) -> bool) -> usize {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &u in &self.adj[v] {
                if !seen[u] && keep(u) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        count
    }

    /// True when `subset` is nonempty, names only host vertices, and induces
    /// a connected subgraph.
    pub fn induces_subtree<S: AsRef<str> + Ord>(&self, subset: &BTreeSet<S>) -> bool {
        let mut members = vec![false; self.len()];
        let mut first = None;
        for label in subset {
            match self.index_of(label.as_ref()) {
                Some(i) => {
                    members[i] = true;
                    first.get_or_insert(i);
                }
                None => return false,
            }
        }
        match first {
            Some(start) => self.component_size(start, |u| members[u]) == subset.len(),
            None => false,
        }
    }

    pub(crate) fn check_subtree(&self, subset: &BTreeSet<String>) -> Result<(), TreeError> {
        if subset.is_empty() {
            return Err(TreeError::EmptySubset);
        }
        if let Some(unknown) = subset.iter().find(|l| !self.contains(l)) {
            return Err(TreeError::UnknownVertex(unknown.clone()));
        }
        if !self.induces_subtree(subset) {
            return Err(TreeError::DisconnectedSubset);
        }
        Ok(())
    }

    /// The subtree induced by `subset`, vertices in host order.
    pub fn induced(&self, subset: &BTreeSet<String>) -> Result<Tree, TreeError> {
        self.check_subtree(subset)?;
        let labels: Vec<String> = self
            .labels
            .iter()
            .filter(|l| subset.contains(*l))
            .cloned()
            .collect();
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .filter(|(a, b)| subset.contains(a) && subset.contains(b))
            .collect();
        Tree::new(labels, edges)
    }

    /// Leaves of the subtree induced by `subset`: vertices with at most one
    /// neighbour inside it. A single vertex counts as a leaf.
    pub fn subtree_leaves<'s>(&self, subset: &'s BTreeSet<String>) -> Vec<&'s str> {
        subset
            .iter()
            .filter(|v| self.neighbors(v).filter(|u| subset.contains(*u)).count() <= 1)
            .map(String::as_str)
            .collect()
    }

    pub fn with_leaf(&self, attach: &str, new: &str) -> Result<Tree, TreeError> {
        let a = self
            .index_of(attach)
            .ok_or_else(|| TreeError::UnknownVertex(attach.to_string()))?;
        if self.contains(new) {
            return Err(TreeError::LabelCollision(new.to_string()));
        }
        let mut tree = self.clone();
        let x = tree.labels.len();
        tree.labels.push(new.to_string());
        tree.index.insert(new.to_string(), x);
        tree.adj.push(vec![a]);
        tree.adj[a].push(x);
        Ok(tree)
    }

    /// Replaces edge `vw` by the path `v - x - w`.
    pub fn subdivided(&self, v: &str, w: &str, x: &str) -> Result<Tree, TreeError> {
        let (a, b) = match (self.index_of(v), self.index_of(w)) {
            (Some(a), Some(b)) if self.adj[a].contains(&b) => (a, b),
            (None, _) => return Err(TreeError::UnknownVertex(v.to_string())),
            (_, None) => return Err(TreeError::UnknownVertex(w.to_string())),
            _ => return Err(TreeError::NotAnEdge(v.to_string(), w.to_string())),
        };
        if self.contains(x) {
            return Err(TreeError::LabelCollision(x.to_string()));
        }
        let mut tree = self.clone();
        let n = tree.labels.len();
        tree.labels.push(x.to_string());
        tree.index.insert(x.to_string(), n);
        tree.adj.push(vec![a, b]);
        for (from, to) in [(a, b), (b, a)] {
            let slot = tree.adj[from]
                .iter_mut()
                .find(|u| **u == to)
                .expect("edge present");
            *slot = n;
            tree.adj[from].sort_unstable();
        }
        Ok(tree)
    }

    /// Vertices of the tree center (one or two), in index order.
    pub(crate) fn centers(&self) -> Vec<usize> {
        let n = self.len();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &u in &self.adj[v] {
                    if degree[u] > 1 {
                        degree[u] -= 1;
                        if degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
                degree[v] = 0;
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        f.debug_struct("Tree")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Collision-free label source: `<base>#k` with one monotone counter shared
/// by every label it hands out.
#[derive(Debug, Clone, Default)]
pub struct FreshLabels {
    counter: usize,
}

impl FreshLabels {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn next(&mut self, base: &str, taken: impl Fn(&str) -> bool) -> String {
        loop {
            self.counter += 1;
            let label = format!("{base}#{}", self.counter);
            if !taken(&label) {
                return label;
            }
        }
    }
}

pub(crate) fn label_set<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> BTreeSet<String> {
    labels.into_iter().map(|s| s.as_ref().to_string()).collect()
}

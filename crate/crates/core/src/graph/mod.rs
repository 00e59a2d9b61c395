//! Labelled simple graphs, orientations and desk-scale recognition of the
//! hereditary classes used throughout the crate.

mod recognize;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use recognize::{
    perfect_elimination_order, recognize, recognize_with, Property, PropertyWitness, Recognition,
    RecognizeConfig, WitnessKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("edge references unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("arc {0}->{1} is not an edge of the graph")]
    ArcNotEdge(String, String),
    #[error("edge {0}-{1} is oriented in both directions")]
    DoublyOriented(String, String),
    #[error("edge {0}-{1} has no orientation")]
    UnorientedEdge(String, String),
    #[error("{vertices} vertices is out of desk-scale range (limit {limit})")]
    OutOfDeskScale { vertices: usize, limit: usize },
}

/// An undirected simple graph over text labels. The vertex sequence is
/// significant: two graphs are equal only when they list the same labels in
/// the same order and have the same edges.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut graph = Self::edgeless(vertices)?;
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let a = graph
                .index_of(u)
                .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
            let b = graph
                .index_of(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
            if a == b {
                return Err(GraphError::SelfLoop(u.to_string()));
            }
            if !graph.adj[a].insert(b) {
                return Err(GraphError::DuplicateEdge(u.to_string(), v.to_string()));
            }
            graph.adj[b].insert(a);
        }
        Ok(graph)
    }

    pub fn edgeless<V>(vertices: V) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(label.clone()));
            }
        }
        let adj = vec![BTreeSet::new(); labels.len()];
        Ok(Self { labels, index, adj })
    }

    pub fn complete<V>(vertices: V) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
    {
        Ok(Self::edgeless(vertices)?.complement())
    }

    /// Builds a graph from index pairs over an already validated label list.
    pub(crate) fn from_index_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            debug_assert_ne!(a, b);
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Self { labels, index, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
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

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn has_edge_between(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.has_edge(a, b),
            _ => false,
        }
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.range(a + 1..).map(|&b| (a, b)));
        }
        out
    }

    /// Edges as label pairs, each pair and the whole list sorted
    /// lexicographically.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| sorted_pair(&self.labels[a], &self.labels[b]))
            .collect();
        out.sort();
        out
    }

    /// Vertex indices sorted by label; the tie-break order for every search.
    pub fn label_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        order
    }

    /// Same vertex sequence, edge set replaced by the non-edges.
    pub fn complement(&self) -> Self {
        let n = self.labels.len();
        let adj = (0..n)
            .map(|a| (0..n).filter(|&b| b != a && !self.adj[a].contains(&b)).collect())
            .collect();
        Self {
            labels: self.labels.clone(),
            index: self.index.clone(),
            adj,
        }
    }

    /// Same vertex sequence with only the given edges.
    pub fn spanning_subgraph(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_index_edges(self.labels.clone(), edges)
    }

    /// True when both graphs have the same vertex labels (in any order) and
    /// the same labelled edges.
    pub fn same_labelled_graph(&self, other: &SimpleGraph) -> bool {
        let mine: BTreeSet<&String> = self.labels.iter().collect();
        let theirs: BTreeSet<&String> = other.labels.iter().collect();
        mine == theirs && self.edge_labels() == other.edge_labels()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edge_labels()
            .into_iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) fn sorted_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// An assignment of one direction to every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: SimpleGraph,
    arcs: BTreeSet<(usize, usize)>,
}

impl Orientation {
    pub fn new<S: AsRef<str>>(
        graph: SimpleGraph,
        arcs: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            let (u, v) = (u.as_ref(), v.as_ref());
            let a = graph
                .index_of(u)
                .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
            let b = graph
                .index_of(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
            if !graph.has_edge(a, b) {
                return Err(GraphError::ArcNotEdge(u.to_string(), v.to_string()));
            }
            if set.contains(&(b, a)) {
                return Err(GraphError::DoublyOriented(u.to_string(), v.to_string()));
            }
            set.insert((a, b));
        }
        Self::from_index_arcs(graph, set)
    }

    pub(crate) fn from_index_arcs(
        graph: SimpleGraph,
        arcs: BTreeSet<(usize, usize)>,
    ) -> Result<Self, GraphError> {
        for (a, b) in graph.edges() {
            let fwd = arcs.contains(&(a, b));
            let back = arcs.contains(&(b, a));
            match (fwd, back) {
                (true, true) => {
                    return Err(GraphError::DoublyOriented(
                        graph.label(a).to_string(),
                        graph.label(b).to_string(),
                    ))
                }
                (false, false) => {
                    return Err(GraphError::UnorientedEdge(
                        graph.label(a).to_string(),
                        graph.label(b).to_string(),
                    ))
                }
                _ => {}
            }
        }
        if arcs.len() != graph.edge_count() {
            let &(a, b) = arcs
                .iter()
                .find(|&&(a, b)| !graph.has_edge(a, b))
                .expect("arc count mismatch implies a non-edge arc");
            return Err(GraphError::ArcNotEdge(
                graph.label(a).to_string(),
                graph.label(b).to_string(),
            ));
        }
        Ok(Self { graph, arcs })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    /// Arcs as `(tail, head)` label pairs sorted lexicographically.
    pub fn arc_labels(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .arcs
            .iter()
            .map(|&(a, b)| (self.graph.label(a).to_string(), self.graph.label(b).to_string()))
            .collect();
        out.sort();
        out
    }
}

/// A directed 2-path `a -> b -> c` whose shortcut `a -> c` is missing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityViolation {
    pub first: String,
    pub middle: String,
    pub last: String,
}

/// Every directed 2-path of the orientation that is not closed by an arc.
pub fn is_transitive(o: &Orientation) -> Vec<TransitivityViolation> {
    transitivity_violations(o.graph.labels(), &o.arcs)
}

pub(crate) fn transitivity_violations(
    labels: &[String],
    arcs: &BTreeSet<(usize, usize)>,
) -> Vec<TransitivityViolation> {
    let mut out = Vec::new();
    for &(a, b) in arcs {
        for &(_, c) in arcs.range((b, 0)..(b + 1, 0)) {
            if c != a && !arcs.contains(&(a, c)) {
                out.push(TransitivityViolation {
                    first: labels[a].clone(),
                    middle: labels[b].clone(),
                    last: labels[c].clone(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> SimpleGraph {
        SimpleGraph::new(["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])
            .unwrap()
    }

    #[test]
    fn complement_of_c4_is_2k2() {
        let co = c4().complement();
        assert_eq!(
            co.edge_labels(),
            vec![("1".into(), "3".into()), ("2".into(), "4".into())]
        );
        assert_eq!(co.labels(), c4().labels());
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = SimpleGraph::edgeless(["a", "b", "c"]).unwrap();
        assert_eq!(g.complement().edge_count(), 3);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(
            SimpleGraph::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(GraphError::DuplicateVertex("a".into()))
        );
        assert_eq!(
            SimpleGraph::new(["a"], [("a", "z")]),
            Err(GraphError::UnknownVertex("z".into()))
        );
        assert_eq!(
            SimpleGraph::new(["a"], [("a", "a")]),
            Err(GraphError::SelfLoop("a".into()))
        );
        assert!(matches!(
            SimpleGraph::new(["a", "b"], [("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge(..))
        ));
    }

    #[test]
    fn orientation_must_cover_every_edge_once() {
        let g = c4();
        assert!(matches!(
            Orientation::new(g.clone(), [("1", "2")]),
            Err(GraphError::UnorientedEdge(..))
        ));
        assert!(matches!(
            Orientation::new(g.clone(), [("1", "3")]),
            Err(GraphError::ArcNotEdge(..))
        ));
        assert!(matches!(
            Orientation::new(g, [("1", "2"), ("2", "1")]),
            Err(GraphError::DoublyOriented(..))
        ));
    }

    #[test]
    fn transitive_orientation_of_co_p4() {
        // P4 is 1-2-3-4 with edges 12, 23, 34; its complement has 13, 14, 24.
        let p4 = SimpleGraph::new(["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "4")])
            .unwrap();
        let o = Orientation::new(p4.complement(), [("3", "1"), ("4", "1"), ("4", "2")]).unwrap();
        assert!(is_transitive(&o).is_empty());
        // 4 -> 1 -> 3 cannot close: 34 is an edge of P4, not of its complement
        let o = Orientation::new(p4.complement(), [("1", "3"), ("4", "1"), ("4", "2")]).unwrap();
        assert_eq!(
            is_transitive(&o),
            vec![TransitivityViolation {
                first: "4".into(),
                middle: "1".into(),
                last: "3".into()
            }]
        );
    }

    #[test]
    fn missing_shortcut_is_reported() {
        let g = SimpleGraph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let o = Orientation::new(g, [("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(
            is_transitive(&o),
            vec![TransitivityViolation {
                first: "a".into(),
                middle: "b".into(),
                last: "c".into()
            }]
        );
    }

    #[test]
    fn orientation_without_directed_two_path_is_transitive() {
        // a star oriented entirely into its centre
        let g = SimpleGraph::new(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])
            .unwrap();
        let o = Orientation::new(g, [("x", "c"), ("y", "c"), ("z", "c")]).unwrap();
        assert!(is_transitive(&o).is_empty());
    }
}

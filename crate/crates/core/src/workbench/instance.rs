//! The JSON interchange format.
//!
//! ```json
//! {"tree": {"vertices": [...], "edges": [[u, v], ...]},
//!  "subtrees": {"name": [v, ...], ...},
//!  "graph": {"vertices": [...], "edges": [[u, v], ...]},
//!  "mixed": {"e1": [[u, v], ...], "e2": [[tail, head], ...]},
//!  "cover": [v, ...],
//!  "meta": {...}}
//! ```
//!
//! Every key is optional. `subtrees` needs `tree`, `mixed` needs `graph`
//! (its pairs are edges of the graph's complement). Vertex lists keep their
//! order; edge, member and cover lists are sorted on write.

use std::collections::BTreeSet;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};
use crate::mixed::{MixedError, MixedPartition};
use crate::tree::{Member, SubtreeFamily, Tree, TreeError};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("tree: {0}")]
    Tree(#[from] TreeError),
    #[error("graph: {0}")]
    Graph(#[from] GraphError),
    #[error("mixed: {0}")]
    Mixed(#[from] MixedError),
    #[error("`{0}` requires `{1}`")]
    Missing(&'static str, &'static str),
    #[error("cover: {0}")]
    Cover(TreeError),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Instance {
    pub tree: Option<Tree>,
    /// Hosted on `tree`; keep the two in step with [`Instance::set_family`].
    pub family: Option<SubtreeFamily>,
    pub graph: Option<SimpleGraph>,
    /// Partition of the edges of `graph`'s complement.
    pub mixed: Option<MixedPartition>,
    pub cover: Option<BTreeSet<String>>,
    pub meta: Map<String, Value>,
}

impl Instance {
    pub fn from_family(f: SubtreeFamily) -> Self {
        let mut inst = Self::default();
        inst.set_family(f);
        inst
    }

    pub fn set_family(&mut self, f: SubtreeFamily) {
        self.tree = Some(f.host().clone());
        self.family = Some(f);
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.raw()).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Single-line JSON.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.raw()).expect("plain data serializes")
    }

    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawInstance = serde_path_to_error::deserialize(de).map_err(|e| {
            InstanceError::Schema {
                path: e.path().to_string(),
                message: e.into_inner().to_string(),
            }
        })?;
        raw.build()
    }

    fn raw(&self) -> RawInstance {
        let subtrees = self.family.as_ref().map(|f| {
            f.members()
                .iter()
                .map(|m| (m.name.clone(), m.vertices.iter().cloned().collect()))
                .collect()
        });
        RawInstance {
            tree: self.tree.as_ref().map(|t| RawGraph {
                vertices: t.labels().to_vec(),
                edges: t.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            }),
            subtrees,
            graph: self.graph.as_ref().map(|g| RawGraph {
                vertices: g.labels().to_vec(),
                edges: g.edge_labels().into_iter().map(|(a, b)| [a, b]).collect(),
            }),
            mixed: self.mixed.as_ref().map(|p| RawMixed {
                e1: p.e1_labels().into_iter().map(|(a, b)| [a, b]).collect(),
                e2: p.e2_labels().into_iter().map(|(a, b)| [a, b]).collect(),
            }),
            cover: self.cover.as_ref().map(|c| c.iter().cloned().collect()),
            meta: self.meta.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tree: Option<RawGraph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    subtrees: Option<IndexMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<RawGraph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mixed: Option<RawMixed>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cover: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    meta: Map<String, Value>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMixed {
    e1: Vec<[String; 2]>,
    e2: Vec<[String; 2]>,
}

fn pairs(list: Vec<[String; 2]>) -> Vec<(String, String)> {
    list.into_iter().map(|[a, b]| (a, b)).collect()
}

impl RawInstance {
    fn build(self) -> Result<Instance, InstanceError> {
        let tree = self
            .tree
            .map(|t| Tree::new(t.vertices, pairs(t.edges)))
            .transpose()?;
        let family = match (self.subtrees, &tree) {
            (None, _) => None,
            (Some(_), None) => return Err(InstanceError::Missing("subtrees", "tree")),
            (Some(map), Some(t)) => {
                let members = map
                    .into_iter()
                    .map(|(name, vs)| Member::new(name, vs))
                    .collect();
                Some(SubtreeFamily::unchecked(t.clone(), members))
            }
        };
        let graph = self
            .graph
            .map(|g| SimpleGraph::new(g.vertices, pairs(g.edges)))
            .transpose()?;
        let mixed = match (self.mixed, &graph) {
            (None, _) => None,
            (Some(_), None) => return Err(InstanceError::Missing("mixed", "graph")),
            (Some(m), Some(g)) => Some(MixedPartition::new(g.complement(), pairs(m.e1), pairs(m.e2))?),
        };
        let cover = match (self.cover, &tree) {
            (None, _) => None,
            (Some(_), None) => return Err(InstanceError::Missing("cover", "tree")),
            (Some(c), Some(t)) => {
                let c: BTreeSet<String> = c.into_iter().collect();
                if let Some(v) = c.iter().find(|v| !t.contains(v)) {
                    return Err(InstanceError::Cover(TreeError::UnknownVertex(v.clone())));
                }
                Some(c)
            }
        };
        Ok(Instance {
            tree,
            family,
            graph,
            mixed,
            cover,
            meta: self.meta,
        })
    }
}

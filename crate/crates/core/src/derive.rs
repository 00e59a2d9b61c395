use std::fmt;
use std::str::FromStr;

use crate::graph::SimpleGraph;
use crate::tree::{relate, PairRelation, SubtreeFamily};

/// Which pairwise relation turns into an edge of the derived graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeriveMode {
    Overlap,
    Intersection,
    Disjointness,
    Containment,
}

impl DeriveMode {
    pub const ALL: [DeriveMode; 4] = [
        DeriveMode::Overlap,
        DeriveMode::Intersection,
        DeriveMode::Disjointness,
        DeriveMode::Containment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DeriveMode::Overlap => "overlap",
            DeriveMode::Intersection => "intersection",
            DeriveMode::Disjointness => "disjointness",
            DeriveMode::Containment => "containment",
        }
    }

    pub fn admits(self, r: PairRelation) -> bool {
        match self {
            DeriveMode::Overlap => r == PairRelation::Overlap,
            DeriveMode::Intersection => r != PairRelation::Disjoint,
            DeriveMode::Disjointness => r == PairRelation::Disjoint,
            // equal members count as contained in one another
            DeriveMode::Containment => r.is_containment(),
        }
    }
}

impl fmt::Display for DeriveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeriveMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DeriveMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown derive mode `{s}`"))
    }
}

/// One vertex per member, named after it, in member order.
pub fn derive_graph(f: &SubtreeFamily, mode: DeriveMode) -> SimpleGraph {
    let members = f.members();
    let mut edges = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate().skip(i + 1) {
            if mode.admits(relate(&a.vertices, &b.vertices)) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_index_edges(members.iter().map(|m| m.name.clone()).collect(), edges)
}

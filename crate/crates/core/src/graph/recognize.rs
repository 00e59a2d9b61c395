use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{transitivity_violations, GraphError, Orientation, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Chordal,
    Cochordal,
    Comparability,
    Cocomparability,
    Interval,
    Cointerval,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Chordal,
        Property::Cochordal,
        Property::Comparability,
        Property::Cocomparability,
        Property::Interval,
        Property::Cointerval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Chordal => "chordal",
            Property::Cochordal => "cochordal",
            Property::Comparability => "comparability",
            Property::Cocomparability => "cocomparability",
            Property::Interval => "interval",
            Property::Cointerval => "cointerval",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecognizeConfig {
    /// Largest vertex count accepted by the clique-arrangement search.
    pub interval_max_vertices: usize,
}

impl Default for RecognizeConfig {
    fn default() -> Self {
        Self {
            interval_max_vertices: 12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    PerfectEliminationOrder,
    TransitiveOrientation,
    CliqueOrder,
    None,
}

/// Evidence backing a positive recognition result. For the co-classes the
/// witness refers to the complement graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyWitness {
    PerfectEliminationOrder(Vec<String>),
    TransitiveOrientation(Orientation),
    CliqueOrder(Vec<Vec<String>>),
    None,
}

impl PropertyWitness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            PropertyWitness::PerfectEliminationOrder(_) => WitnessKind::PerfectEliminationOrder,
            PropertyWitness::TransitiveOrientation(_) => WitnessKind::TransitiveOrientation,
            PropertyWitness::CliqueOrder(_) => WitnessKind::CliqueOrder,
            PropertyWitness::None => WitnessKind::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    pub holds: bool,
    pub witness: PropertyWitness,
}

impl Recognition {
    fn no() -> Self {
        Self {
            holds: false,
            witness: PropertyWitness::None,
        }
    }

    fn yes(witness: PropertyWitness) -> Self {
        Self {
            holds: true,
            witness,
        }
    }
}

pub fn recognize(g: &SimpleGraph, property: Property) -> Result<Recognition, GraphError> {
    recognize_with(g, property, &RecognizeConfig::default())
}

pub fn recognize_with(
    g: &SimpleGraph,
    property: Property,
    config: &RecognizeConfig,
) -> Result<Recognition, GraphError> {
    match property {
        Property::Chordal => Ok(chordal(g)),
        Property::Cochordal => Ok(chordal(&g.complement())),
        Property::Comparability => Ok(comparability(g)),
        Property::Cocomparability => Ok(comparability(&g.complement())),
        Property::Interval => interval(g, config),
        Property::Cointerval => interval(&g.complement(), config),
    }
}

fn chordal(g: &SimpleGraph) -> Recognition {
    match perfect_elimination_order(g) {
        Some(order) => Recognition::yes(PropertyWitness::PerfectEliminationOrder(
            order.into_iter().map(|i| g.label(i).to_string()).collect(),
        )),
        None => Recognition::no(),
    }
}

/// Repeatedly removes the label-least simplicial vertex. Returns the removal
/// order, or `None` once no remaining vertex is simplicial.
pub fn perfect_elimination_order(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let order = g.label_order();
    let mut alive = vec![true; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let next = order.iter().copied().find(|&v| {
            alive[v] && {
                let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
                nbrs.iter()
                    .enumerate()
                    .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            }
        })?;
        alive[next] = false;
        out.push(next);
    }
    Some(out)
}

fn comparability(g: &SimpleGraph) -> Recognition {
    match transitive_orientation(g) {
        Some(arcs) => Recognition::yes(PropertyWitness::TransitiveOrientation(
            Orientation::from_index_arcs(g.clone(), arcs)
                .expect("search assigns exactly one direction per edge"),
        )),
        None => Recognition::no(),
    }
}

/// Per-edge direction state for the orientation search: `Some(true)` means
/// the edge points from its smaller to its larger vertex index.
struct OrientSearch<'g> {
    g: &'g SimpleGraph,
    edge_id: Vec<Vec<Option<usize>>>,
    ends: Vec<(usize, usize)>,
    /// Edges in label order of their endpoint pairs; branching order.
    branch_order: Vec<usize>,
}

type Directions = Vec<Option<bool>>;

impl<'g> OrientSearch<'g> {
    fn new(g: &'g SimpleGraph) -> Self {
        let n = g.vertex_count();
        let ends = g.edges();
        let mut edge_id = vec![vec![None; n]; n];
        for (e, &(a, b)) in ends.iter().enumerate() {
            edge_id[a][b] = Some(e);
            edge_id[b][a] = Some(e);
        }
        let mut branch_order: Vec<usize> = (0..ends.len()).collect();
        branch_order.sort_by_key(|&e| {
            let (a, b) = ends[e];
            crate::graph::sorted_pair(g.label(a), g.label(b))
        });
        Self {
            g,
            edge_id,
            ends,
            branch_order,
        }
    }

    fn arc(&self, dirs: &Directions, a: usize, b: usize) -> Option<bool> {
        let e = self.edge_id[a][b]?;
        let (lo, _) = self.ends[e];
        dirs[e].map(|fwd| fwd == (lo == a))
    }

    /// Records `a -> b`. Returns false on a contradiction.
    fn force(&self, dirs: &mut Directions, queue: &mut Vec<(usize, usize)>, a: usize, b: usize) -> bool {
        let e = self.edge_id[a][b].expect("forced pair is an edge");
        let want = self.ends[e].0 == a;
        match dirs[e] {
            Some(d) => d == want,
            None => {
                dirs[e] = Some(want);
                queue.push((a, b));
                true
            }
        }
    }

    fn propagate(&self, dirs: &mut Directions, mut queue: Vec<(usize, usize)>) -> bool {
        let g = self.g;
        while let Some((a, b)) = queue.pop() {
            for &c in g.neighbors(a) {
                if c == b {
                    continue;
                }
                if !g.has_edge(b, c) {
                    // c -> a -> b would need the missing edge cb
                    if !self.force(dirs, &mut queue, a, c) {
                        return false;
                    }
                } else if self.arc(dirs, c, a) == Some(true) {
                    // c -> a -> b closes through cb
                    if !self.force(dirs, &mut queue, c, b) {
                        return false;
                    }
                }
            }
            for &c in g.neighbors(b) {
                if c == a {
                    continue;
                }
                if !g.has_edge(a, c) {
                    if !self.force(dirs, &mut queue, c, b) {
                        return false;
                    }
                } else if self.arc(dirs, b, c) == Some(true) && !self.force(dirs, &mut queue, a, c) {
                    return false;
                }
            }
        }
        true
    }

    fn arcs(&self, dirs: &Directions) -> BTreeSet<(usize, usize)> {
        self.ends
            .iter()
            .zip(dirs)
            .map(|(&(lo, hi), d)| if d.expect("complete assignment") { (lo, hi) } else { (hi, lo) })
            .collect()
    }

    fn search(&self, dirs: Directions) -> Option<Directions> {
        let Some(&e) = self.branch_order.iter().find(|&&e| dirs[e].is_none()) else {
            return transitivity_violations(self.g.labels(), &self.arcs(&dirs))
                .is_empty()
                .then_some(dirs);
        };
        let (lo, hi) = self.ends[e];
        let (first, second) = if self.g.label(lo) <= self.g.label(hi) {
            ((lo, hi), (hi, lo))
        } else {
            ((hi, lo), (lo, hi))
        };
        for (a, b) in [first, second] {
            let mut next = dirs.clone();
            let mut queue = Vec::new();
            if self.force(&mut next, &mut queue, a, b) && self.propagate(&mut next, queue) {
                if let Some(done) = self.search(next) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// Backtracking search for a transitive orientation; arcs as index pairs.
pub(crate) fn transitive_orientation(g: &SimpleGraph) -> Option<BTreeSet<(usize, usize)>> {
    let search = OrientSearch::new(g);
    let dirs = search.search(vec![None; search.ends.len()])?;
    Some(search.arcs(&dirs))
}

fn interval(g: &SimpleGraph, config: &RecognizeConfig) -> Result<Recognition, GraphError> {
    let n = g.vertex_count();
    if n > config.interval_max_vertices {
        return Err(GraphError::OutOfDeskScale {
            vertices: n,
            limit: config.interval_max_vertices,
        });
    }
    if perfect_elimination_order(g).is_none() {
        return Ok(Recognition::no());
    }
    let cliques = maximal_cliques(g);
    let mut arrangement = Vec::with_capacity(cliques.len());
    let mut state = vec![VertexState::Unseen; n];
    let mut used = vec![false; cliques.len()];
    if arrange(&cliques, &mut used, &mut state, &mut arrangement) {
        let order = arrangement
            .into_iter()
            .map(|c: usize| {
                let mut labels: Vec<String> = cliques[c].iter().map(|&v| g.label(v).to_string()).collect();
                labels.sort();
                labels
            })
            .collect();
        Ok(Recognition::yes(PropertyWitness::CliqueOrder(order)))
    } else {
        Ok(Recognition::no())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VertexState {
    Unseen,
    Open,
    Closed,
}

/// Places maximal cliques left to right so that every vertex occupies a
/// consecutive run.
fn arrange(
    cliques: &[Vec<usize>],
    used: &mut [bool],
    state: &mut [VertexState],
    arrangement: &mut Vec<usize>,
) -> bool {
    if arrangement.len() == cliques.len() {
        return true;
    }
    for c in 0..cliques.len() {
        if used[c] || cliques[c].iter().any(|&v| state[v] == VertexState::Closed) {
            continue;
        }
        let saved = state.to_vec();
        for (v, s) in state.iter_mut().enumerate() {
            if *s == VertexState::Open && !cliques[c].contains(&v) {
                *s = VertexState::Closed;
            }
        }
        for &v in &cliques[c] {
            state[v] = VertexState::Open;
        }
        used[c] = true;
        arrangement.push(c);
        if arrange(cliques, used, state, arrangement) {
            return true;
        }
        arrangement.pop();
        used[c] = false;
        state.copy_from_slice(&saved);
    }
    false
}

/// Bron–Kerbosch without pivoting, candidates visited in label order.
pub(crate) fn maximal_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
    fn expand(
        g: &SimpleGraph,
        current: &mut Vec<usize>,
        candidates: Vec<usize>,
        mut excluded: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if candidates.is_empty() && excluded.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut remaining = candidates;
        while let Some(&v) = remaining.first() {
            remaining.remove(0);
            current.push(v);
            let next_c: Vec<usize> = remaining.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            let next_x: Vec<usize> = excluded.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            expand(g, current, next_c, next_x, out);
            current.pop();
            excluded.push(v);
        }
    }
    let mut out = Vec::new();
    if g.vertex_count() == 0 {
        return out;
    }
    expand(g, &mut Vec::new(), g.label_order(), Vec::new(), &mut out);
    out
}

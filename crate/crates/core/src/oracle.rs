//! Exhaustive searches used as ground truth on tiny inputs.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{recognize, Property, SimpleGraph};
use crate::mixed::{verify_mixed_partition, MixedPartition};
use crate::tree::{canonical_form, tree_isomorphic, Member, SubtreeFamily, Tree};

pub const CHORDLESS_CYCLE_MAX_VERTICES: usize = 10;
pub const MIXED_SEARCH_MAX_COMPLEMENT_EDGES: usize = 8;
pub const OVERLAP_SEARCH_MAX_MEMBERS: usize = 5;
const HOST_VERTEX_CEILING: usize = 20;
const BLOCK_BITS_CEILING: usize = 30;
const CLOCK_STRIDE: u64 = 1 << 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} has size {size}, above the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("budget field `{0}` must be positive")]
    NonPositiveBudget(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_host_vertices: usize,
    pub max_members: usize,
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(
        max_host_vertices: usize,
        max_members: usize,
        time_limit: Duration,
    ) -> Result<Self, OracleError> {
        let b = Self {
            max_host_vertices,
            max_members,
            time_limit,
        };
        b.check()?;
        Ok(b)
    }

    pub fn with_time_limit(self, time_limit: Duration) -> Self {
        Self { time_limit, ..self }
    }

    fn check(&self) -> Result<(), OracleError> {
        if self.max_host_vertices == 0 {
            return Err(OracleError::NonPositiveBudget("max_host_vertices"));
        }
        if self.max_members == 0 {
            return Err(OracleError::NonPositiveBudget("max_members"));
        }
        if self.time_limit.is_zero() {
            return Err(OracleError::NonPositiveBudget("time_limit"));
        }
        if self.max_host_vertices > HOST_VERTEX_CEILING {
            return Err(OracleError::TooLarge {
                what: "host vertex budget",
                size: self.max_host_vertices,
                limit: HOST_VERTEX_CEILING,
            });
        }
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_host_vertices: 7,
            max_members: 6,
            time_limit: Duration::from_secs(30),
        }
    }
}

/// `NotFound` means the space was exhausted; `Inconclusive` means the clock
/// ran out first and says nothing about existence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound,
    Inconclusive { elapsed: Duration },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, SearchOutcome::Inconclusive { .. })
    }
}

struct Clock {
    start: Instant,
    limit: Duration,
    ticks: u64,
}

impl Clock {
    fn new(limit: Duration) -> Self {
        Self {
            start: Instant::now(),
            limit,
            ticks: 0,
        }
    }

    fn expired(&mut self) -> bool {
        self.ticks += 1;
        self.ticks.is_multiple_of(CLOCK_STRIDE) && self.start.elapsed() > self.limit
    }

    fn give_up<T>(&self) -> SearchOutcome<T> {
        SearchOutcome::Inconclusive {
            elapsed: self.start.elapsed(),
        }
    }
}

/// Every induced cycle of length at least 4, as labels starting from its
/// lowest-index vertex and continuing towards the smaller of its two
/// neighbours.
pub fn enumerate_chordless_cycles(g: &SimpleGraph) -> Result<Vec<Vec<String>>, OracleError> {
    let n = g.vertex_count();
    if n > CHORDLESS_CYCLE_MAX_VERTICES {
        return Err(OracleError::TooLarge {
            what: "graph",
            size: n,
            limit: CHORDLESS_CYCLE_MAX_VERTICES,
        });
    }
    let mut out = Vec::new();
    for s in 0..n {
        for &p1 in g.neighbors(s).iter().filter(|&&p| p > s) {
            let mut path = vec![s, p1];
            extend_induced_path(g, &mut path, &mut out);
        }
    }
    Ok(out
        .into_iter()
        .map(|c: Vec<usize>| c.into_iter().map(|i| g.label(i).to_string()).collect())
        .collect())
}

fn extend_induced_path(g: &SimpleGraph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let s = path[0];
    let last = *path.last().expect("path has a start");
    let inner = &path[1..path.len() - 1];
    let candidates: Vec<usize> = g
        .neighbors(last)
        .iter()
        .copied()
        .filter(|&v| v > s && !path.contains(&v) && inner.iter().all(|&p| !g.has_edge(p, v)))
        .collect();
    for v in candidates {
        if g.has_edge(s, v) {
            if path.len() >= 3 && path[1] < v {
                let mut cycle = path.clone();
                cycle.push(v);
                out.push(cycle);
            }
        } else {
            path.push(v);
            extend_induced_path(g, path, out);
            path.pop();
        }
    }
}

/// Tries every split of the complement's edges into `E1` (as bitmasks in
/// increasing order) and, for each cochordal `E1`, every orientation of the
/// rest, pruned by transitivity and the mixing rule. The first partition the
/// verifier accepts is returned.
pub fn search_mixed_partition(
    g: &SimpleGraph,
    budget: &SearchBudget,
) -> Result<SearchOutcome<MixedPartition>, OracleError> {
    budget.check()?;
    let base = g.complement();
    let edges = base.edges();
    let n = g.vertex_count();
    if n > budget.max_members && edges.len() > MIXED_SEARCH_MAX_COMPLEMENT_EDGES {
        return Err(OracleError::TooLarge {
            what: "graph",
            size: n,
            limit: budget.max_members,
        });
    }
    if edges.len() > BLOCK_BITS_CEILING {
        return Err(OracleError::TooLarge {
            what: "complement edge set",
            size: edges.len(),
            limit: BLOCK_BITS_CEILING,
        });
    }
    let mut clock = Clock::new(budget.time_limit);
    for mask in 0u64..(1u64 << edges.len()) {
        if clock.expired() {
            return Ok(clock.give_up());
        }
        let (e1, rest): (Vec<_>, Vec<_>) = edges
            .iter()
            .enumerate()
            .partition(|&(bit, _)| mask >> bit & 1 == 1);
        let e1: BTreeSet<(usize, usize)> = e1.into_iter().map(|(_, &e)| e).collect();
        let rest: Vec<(usize, usize)> = rest.into_iter().map(|(_, &e)| e).collect();
        let e1_graph = base.spanning_subgraph(e1.iter().copied());
        if !recognize(&e1_graph, Property::Cochordal)
            .expect("cochordal recognition has no size bound")
            .holds
        {
            continue;
        }
        let mut search = Orienter {
            n,
            e1: &e1,
            e2_edges: rest.iter().copied().collect(),
            rest: &rest,
            arc: vec![vec![false; n]; n],
            clock: &mut clock,
        };
        match search.run(0) {
            Step::Done(e2) => {
                let p = MixedPartition::from_index_blocks(base.clone(), e1, e2);
                if verify_mixed_partition(&p, None).is_valid() {
                    return Ok(SearchOutcome::Found(p));
                }
            }
            Step::Expired => return Ok(clock.give_up()),
            Step::Exhausted => {}
        }
    }
    Ok(SearchOutcome::NotFound)
}

enum Step {
    Done(BTreeSet<(usize, usize)>),
    Exhausted,
    Expired,
}

struct Orienter<'a> {
    n: usize,
    e1: &'a BTreeSet<(usize, usize)>,
    e2_edges: HashSet<(usize, usize)>,
    rest: &'a [(usize, usize)],
    arc: Vec<Vec<bool>>,
    clock: &'a mut Clock,
}

impl Orienter<'_> {
    fn in_e1(&self, a: usize, b: usize) -> bool {
        self.e1.contains(&(a.min(b), a.max(b)))
    }

    fn in_e2(&self, a: usize, b: usize) -> bool {
        self.e2_edges.contains(&(a.min(b), a.max(b)))
    }

    fn admissible(&self, u: usize, v: usize) -> bool {
        for w in 0..self.n {
            if w == u || w == v {
                continue;
            }
            if self.in_e1(v, w) && !self.in_e1(u, w) {
                return false;
            }
            if self.arc[v][w] && (!self.in_e2(u, w) || self.arc[w][u]) {
                return false;
            }
            if self.arc[w][u] && (!self.in_e2(w, v) || self.arc[v][w]) {
                return false;
            }
        }
        true
    }

    fn run(&mut self, next: usize) -> Step {
        if self.clock.expired() {
            return Step::Expired;
        }
        let Some(&(a, b)) = self.rest.get(next) else {
            let mut arcs = BTreeSet::new();
            for (u, row) in self.arc.iter().enumerate() {
                arcs.extend(row.iter().enumerate().filter(|(_, &x)| x).map(|(v, _)| (u, v)));
            }
            return Step::Done(arcs);
        };
        for (u, v) in [(a, b), (b, a)] {
            if !self.admissible(u, v) {
                continue;
            }
            self.arc[u][v] = true;
            match self.run(next + 1) {
                Step::Exhausted => {}
                done => return done,
            }
            self.arc[u][v] = false;
        }
        Step::Exhausted
    }
}

/// All trees on `1..=max_n` vertices up to isomorphism, smallest first and
/// within a size by maximum degree (so paths lead), labelled `h0`, `h1`, ... Each size is obtained by hanging a leaf on every
/// vertex of every smaller tree and keeping one tree per canonical form.
pub fn nonisomorphic_trees(max_n: usize) -> Vec<Tree> {
    let mut all = Vec::new();
    if max_n == 0 {
        return all;
    }
    let mut layer = vec![Tree::single("h0")];
    for n in 1..=max_n {
        if n > 1 {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for t in &layer {
                for attach in t.labels() {
                    let grown = t
                        .with_leaf(attach, &format!("h{}", n - 1))
                        .expect("fresh label");
                    if seen.insert(canonical_form(&grown)) {
                        next.push(grown);
                    }
                }
            }
            next.sort_by_cached_key(|t| {
                let max_degree = t.labels().iter().filter_map(|l| t.degree(l)).max();
                (max_degree, canonical_form(t))
            });
            layer = next;
        }
        all.extend(layer.iter().cloned());
    }
    all
}

/// Looks for a family whose overlap graph is `g`, over host trees of up to
/// `budget.max_host_vertices` vertices taken up to isomorphism. With
/// `cover_shape`, the family must also have a covering subtree isomorphic to
/// it. Hosts, covers and member subtrees are tried in a fixed order.
pub fn search_overlap_rep(
    g: &SimpleGraph,
    budget: &SearchBudget,
    cover_shape: Option<&Tree>,
) -> Result<SearchOutcome<SubtreeFamily>, OracleError> {
    budget.check()?;
    let k = g.vertex_count();
    let limit = OVERLAP_SEARCH_MAX_MEMBERS.min(budget.max_members);
    if k > limit {
        return Err(OracleError::TooLarge {
            what: "graph",
            size: k,
            limit,
        });
    }
    let mut clock = Clock::new(budget.time_limit);
    let shape_form = cover_shape.map(canonical_form);
    for host in nonisomorphic_trees(budget.max_host_vertices) {
        if cover_shape.is_some_and(|s| s.len() > host.len()) {
            continue;
        }
        let masks = connected_masks(&host);
        let covers: Vec<Option<u32>> = match (&shape_form, cover_shape) {
            (Some(form), Some(shape)) => masks
                .iter()
                .filter(|&&m| m.count_ones() as usize == shape.len())
                .filter(|&&m| {
                    let t = host.induced(&mask_labels(&host, m)).expect("connected mask");
                    canonical_form(&t) == *form && tree_isomorphic(&t, shape).is_some()
                })
                .map(|&m| Some(m))
                .collect(),
            _ => vec![None],
        };
        for cover in covers {
            let candidates: Vec<u32> = masks
                .iter()
                .copied()
                .filter(|&m| cover.is_none_or(|c| m & c != 0))
                .collect();
            let mut chosen = Vec::with_capacity(k);
            match assign(g, &candidates, &mut chosen, &mut clock) {
                Step::Done(_) => {
                    let members = chosen
                        .iter()
                        .enumerate()
                        .map(|(i, &m)| Member {
                            name: g.label(i).to_string(),
                            vertices: mask_labels(&host, m),
                        })
                        .collect();
                    let family = SubtreeFamily::new(host, members).expect("connected masks");
                    return Ok(SearchOutcome::Found(family));
                }
                Step::Expired => return Ok(clock.give_up()),
                Step::Exhausted => {}
            }
        }
    }
    Ok(SearchOutcome::NotFound)
}

fn overlaps(a: u32, b: u32) -> bool {
    a & b != 0 && a & !b != 0 && b & !a != 0
}

fn assign(g: &SimpleGraph, candidates: &[u32], chosen: &mut Vec<u32>, clock: &mut Clock) -> Step {
    let i = chosen.len();
    if i == g.vertex_count() {
        return Step::Done(BTreeSet::new());
    }
    for &m in candidates {
        if clock.expired() {
            return Step::Expired;
        }
        if chosen
            .iter()
            .enumerate()
            .all(|(j, &c)| overlaps(m, c) == g.has_edge(i, j))
        {
            chosen.push(m);
            match assign(g, candidates, chosen, clock) {
                Step::Exhausted => {}
                done => return done,
            }
            chosen.pop();
        }
    }
    Step::Exhausted
}

/// Vertex subsets of `host` inducing subtrees, by size and then by mask.
fn connected_masks(host: &Tree) -> Vec<u32> {
    let n = host.len();
    let mut out: Vec<u32> = (1u32..(1 << n))
        .filter(|&m| host.induces_subtree(&mask_labels(host, m)))
        .collect();
    out.sort_by_key(|&m| (m.count_ones(), m));
    out
}

fn mask_labels(host: &Tree, m: u32) -> BTreeSet<String> {
    (0..host.len())
        .filter(|&i| m >> i & 1 == 1)
        .map(|i| host.label(i).to_string())
        .collect()
}

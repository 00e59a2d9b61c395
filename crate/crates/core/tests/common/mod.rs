//! Brute-force reference implementations shared by the integration tests.
//! They deliberately avoid the library's own algorithms.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treerep::graph::SimpleGraph;
use treerep::tree::{Member, SubtreeFamily, Tree};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> SimpleGraph {
    let l = labels(n);
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits.get(k).copied().unwrap_or(false) {
                edges.push((l[a].clone(), l[b].clone()));
            }
            k += 1;
        }
    }
    SimpleGraph::new(l, edges).unwrap()
}

pub fn random_graph(n: usize, density: f64, seed: u64) -> SimpleGraph {
    let mut r = rng(seed);
    let bits: Vec<bool> = (0..n * n).map(|_| r.gen_bool(density)).collect();
    graph_from_bits(n, &bits)
}

pub fn cycle(n: usize) -> SimpleGraph {
    let l = labels(n);
    let edges: Vec<_> = (0..n).map(|i| (l[i].clone(), l[(i + 1) % n].clone())).collect();
    SimpleGraph::new(l, edges).unwrap()
}

pub fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|a| (0..n).map(|b| g.has_edge(a, b)).collect()).collect()
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle.
pub fn chordal_by_subsets(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let adj = adjacency(g);
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if vs.len() < 4 {
            continue;
        }
        let two_regular = vs
            .iter()
            .all(|&v| vs.iter().filter(|&&u| adj[v][u]).count() == 2);
        if two_regular && connected(&vs, &adj) {
            return false;
        }
    }
    true
}

fn connected(vs: &[usize], adj: &[Vec<bool>]) -> bool {
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &u in vs {
            if adj[v][u] && !seen.contains(&u) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

pub fn complement_graph(g: &SimpleGraph) -> SimpleGraph {
    let n = g.vertex_count();
    let bits: Vec<bool> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| !g.has_edge(a, b))
        .collect();
    let l: Vec<String> = g.labels().to_vec();
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits[k] {
                edges.push((l[a].clone(), l[b].clone()));
            }
            k += 1;
        }
    }
    SimpleGraph::new(l, edges).unwrap()
}

/// Index arcs: for every directed two-step path the shortcut must be an arc.
pub fn arcs_transitive(arcs: &BTreeSet<(usize, usize)>) -> bool {
    arcs.iter().all(|&(a, b)| {
        arcs.iter()
            .filter(|&&(c, _)| c == b)
            .all(|&(_, d)| a != d && arcs.contains(&(a, d)))
    })
}

/// Comparability by trying every orientation of every edge.
pub fn comparability_by_orientations(g: &SimpleGraph) -> bool {
    let edges = g.edges();
    (0u32..(1 << edges.len())).any(|mask| {
        let arcs: BTreeSet<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
            .collect();
        arcs_transitive(&arcs)
    })
}

/// Relation tag from plain set arithmetic.
pub fn relation_tag(a: &BTreeSet<String>, b: &BTreeSet<String>) -> &'static str {
    let common = a.iter().filter(|v| b.contains(*v)).count();
    match (common, common == a.len(), common == b.len()) {
        (0, _, _) => "disjoint",
        (_, true, true) => "equal",
        (_, true, false) => "first-in-second",
        (_, false, true) => "second-in-first",
        _ => "overlap",
    }
}

/// Similarity classes: overlap, disjoint, and containment in either
/// direction or equality all count alike.
pub fn relation_class(tag: &str) -> &'static str {
    match tag {
        "disjoint" => "disjoint",
        "overlap" => "overlap",
        _ => "nested",
    }
}

pub fn relation_table(f: &SubtreeFamily) -> BTreeMap<(String, String), &'static str> {
    let m = f.members();
    let mut out = BTreeMap::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            out.insert(
                (m[i].name.clone(), m[j].name.clone()),
                relation_class(relation_tag(&m[i].vertices, &m[j].vertices)),
            );
        }
    }
    out
}

/// Edge list of the overlap graph by direct pairwise comparison.
pub fn overlap_pairs(f: &SubtreeFamily) -> BTreeSet<(String, String)> {
    relation_table(f)
        .into_iter()
        .filter(|(_, c)| *c == "overlap")
        .map(|(k, _)| k)
        .collect()
}

pub fn graph_pairs(g: &SimpleGraph) -> BTreeSet<(String, String)> {
    g.edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (g.label(a).to_string(), g.label(b).to_string());
            (x.clone().min(y.clone()), x.max(y))
        })
        .collect()
}

/// Overlap pairs keyed the same way as [`graph_pairs`].
pub fn overlap_pairs_sorted(f: &SubtreeFamily) -> BTreeSet<(String, String)> {
    overlap_pairs(f)
        .into_iter()
        .map(|(a, b)| (a.clone().min(b.clone()), a.max(b)))
        .collect()
}

/// Connectivity of a vertex subset inside a tree by flood fill over edges.
pub fn subset_connected(t: &Tree, s: &BTreeSet<String>) -> bool {
    let Some(start) = s.iter().next() else { return false };
    if !s.iter().all(|v| t.contains(v)) {
        return false;
    }
    let edges = t.edges();
    let mut seen = BTreeSet::from([start.clone()]);
    loop {
        let before = seen.len();
        for (a, b) in &edges {
            if s.contains(a) && s.contains(b) && (seen.contains(a) || seen.contains(b)) {
                seen.insert(a.clone());
                seen.insert(b.clone());
            }
        }
        if seen.len() == before {
            break;
        }
    }
    seen.len() == s.len()
}

/// Every member meets `r`.
pub fn covers(f: &SubtreeFamily, r: &BTreeSet<String>) -> bool {
    f.members().iter().all(|m| m.vertices.iter().any(|v| r.contains(v)))
}

pub fn degree_map(t: &Tree) -> BTreeMap<String, usize> {
    let mut d: BTreeMap<String, usize> = t.labels().iter().map(|l| (l.clone(), 0)).collect();
    for (a, b) in t.edges() {
        *d.get_mut(&a).unwrap() += 1;
        *d.get_mut(&b).unwrap() += 1;
    }
    d
}

/// A random family on `t` with members drawn as random connected subsets.
pub fn random_family(t: &Tree, k: usize, seed: u64) -> SubtreeFamily {
    let mut r = rng(seed);
    let members = (0..k)
        .map(|i| {
            let start = t.label(r.gen_range(0..t.len())).to_string();
            let target = r.gen_range(1..=t.len());
            let mut s = BTreeSet::from([start]);
            while s.len() < target {
                let boundary: Vec<String> = t
                    .edges()
                    .into_iter()
                    .filter_map(|(a, b)| match (s.contains(&a), s.contains(&b)) {
                        (true, false) => Some(b),
                        (false, true) => Some(a),
                        _ => None,
                    })
                    .collect();
                if boundary.is_empty() {
                    break;
                }
                s.insert(boundary[r.gen_range(0..boundary.len())].clone());
            }
            Member {
                name: format!("m{i}"),
                vertices: s,
            }
        })
        .collect();
    SubtreeFamily::new(t.clone(), members).unwrap()
}

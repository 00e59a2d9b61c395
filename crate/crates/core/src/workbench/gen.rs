//! Seeded instance generators. Every function here is a pure function of its
//! parameters and seed.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::tree::{Member, SubtreeFamily, Tree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("a tree needs at least one vertex")]
    NoVertices,
    #[error("cover must be a nonempty vertex subset inducing a subtree: {0}")]
    InvalidCover(TreeError),
    #[error("cannot take {size} vertices from a tree with {available}")]
    TooManyVertices { size: usize, available: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMode {
    Free,
    /// All members share one randomly chosen vertex.
    SharedVertex,
    /// Every member meets the given subtree.
    CoveredBy(BTreeSet<String>),
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Host labels are `v1 .. vn`.
pub fn vertex_label(i: usize) -> String {
    format!("v{}", i + 1)
}

/// A uniformly random labelled tree: a random Prüfer sequence, decoded.
pub fn gen_tree(n: usize, seed: u64) -> Result<Tree, GenError> {
    let mut rng = rng_for(seed);
    random_tree(n, &mut rng)
}

fn random_tree(n: usize, rng: &mut impl Rng) -> Result<Tree, GenError> {
    if n == 0 {
        return Err(GenError::NoVertices);
    }
    let labels: Vec<String> = (0..n).map(vertex_label).collect();
    if n == 1 {
        return Ok(Tree::single(labels[0].clone()));
    }
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let edges = decode_pruefer(n, &sequence)
        .into_iter()
        .map(|(a, b)| (labels[a].clone(), labels[b].clone()));
    Ok(Tree::new(labels.clone(), edges).expect("Prüfer decoding yields a tree"))
}

pub(crate) fn decode_pruefer(n: usize, sequence: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &a in sequence {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&i| degree[i] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in sequence {
        let Reverse(u) = leaves.pop().expect("a leaf remains");
        edges.push((u, a));
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u, v));
    edges
}

/// `k` members named `t1 .. tk`, each grown from a start vertex by adding
/// random boundary neighbours up to a random target size.
pub fn gen_family(t: &Tree, k: usize, seed: u64, mode: &FamilyMode) -> Result<SubtreeFamily, GenError> {
    let mut rng = rng_for(seed);
    if let FamilyMode::CoveredBy(r) = mode {
        if r.is_empty() {
            return Err(GenError::InvalidCover(TreeError::EmptySubset));
        }
        t.check_subtree(r).map_err(GenError::InvalidCover)?;
    }
    let shared = t.label(rng.gen_range(0..t.len())).to_string();
    let cover: Vec<&String> = match mode {
        FamilyMode::CoveredBy(r) => r.iter().collect(),
        _ => Vec::new(),
    };
    let members = (0..k)
        .map(|i| {
            let start = match mode {
                FamilyMode::Free => t.label(rng.gen_range(0..t.len())).to_string(),
                FamilyMode::SharedVertex => shared.clone(),
                FamilyMode::CoveredBy(_) => cover[rng.gen_range(0..cover.len())].clone(),
            };
            let size = rng.gen_range(1..=t.len());
            Member {
                name: format!("t{}", i + 1),
                vertices: grow(t, start, size, &mut rng),
            }
        })
        .collect();
    Ok(SubtreeFamily::new(t.clone(), members).expect("grown sets are subtrees"))
}

fn grow(t: &Tree, start: String, size: usize, rng: &mut impl Rng) -> BTreeSet<String> {
    let mut set = BTreeSet::from([start]);
    while set.len() < size {
        let boundary: Vec<&str> = set
            .iter()
            .flat_map(|v| t.neighbors(v))
            .filter(|u| !set.contains(*u))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let Some(next) = boundary.choose(rng) else { break };
        let next = next.to_string();
        set.insert(next);
    }
    set
}

/// A random connected vertex subset of exactly `size` vertices.
pub fn gen_subtree(t: &Tree, size: usize, seed: u64) -> Result<BTreeSet<String>, GenError> {
    if size == 0 || size > t.len() {
        return Err(GenError::TooManyVertices {
            size,
            available: t.len(),
        });
    }
    let mut rng = rng_for(seed);
    let start = t.label(rng.gen_range(0..t.len())).to_string();
    Ok(grow(t, start, size, &mut rng))
}

/// The vertices of the path between two random vertices.
pub fn gen_path(t: &Tree, seed: u64) -> BTreeSet<String> {
    let mut rng = rng_for(seed);
    let a = rng.gen_range(0..t.len());
    let b = rng.gen_range(0..t.len());
    path_between(t, t.label(a), t.label(b))
}

fn path_between(t: &Tree, from: &str, to: &str) -> BTreeSet<String> {
    let mut parent: std::collections::HashMap<String, String> = Default::default();
    let mut stack = vec![from.to_string()];
    let mut seen = BTreeSet::from([from.to_string()]);
    while let Some(v) = stack.pop() {
        for u in t.neighbors(&v) {
            if seen.insert(u.to_string()) {
                parent.insert(u.to_string(), v.clone());
                stack.push(u.to_string());
            }
        }
    }
    let mut out = BTreeSet::from([to.to_string()]);
    let mut cur = to.to_string();
    while cur != from {
        cur = parent[&cur].clone();
        out.insert(cur.clone());
    }
    out
}

/// A tree, a random subtree of it and a family covered by that subtree, all
/// from one seed.
pub fn gen_covered_instance(
    n: usize,
    k: usize,
    cover_size: usize,
    seed: u64,
) -> Result<(SubtreeFamily, BTreeSet<String>), GenError> {
    let t = gen_tree(n, seed)?;
    let r = gen_subtree(&t, cover_size.min(n), seed.wrapping_add(1))?;
    let f = gen_family(&t, k, seed.wrapping_add(2), &FamilyMode::CoveredBy(r.clone()))?;
    Ok((f, r))
}

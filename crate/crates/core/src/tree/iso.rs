use std::collections::{BTreeMap, HashMap};

use super::shape::branch_structure;
use super::Tree;

/// Rooted view of a tree: parent links and children per vertex.
struct Rooted {
    children: Vec<Vec<usize>>,
    /// Vertices in BFS order from the root.
    order: Vec<usize>,
}

fn rooted(adj: &[Vec<usize>], root: usize) -> Rooted {
    let n = adj.len();
    let mut children = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut order = vec![root];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                children[v].push(u);
                order.push(u);
            }
        }
        i += 1;
    }
    Rooted { children, order }
}

/// AHU encodings of every rooted subtree: each vertex gets
/// `(` + sorted child encodings + `)`.
fn encodings(r: &Rooted) -> Vec<String> {
    let mut enc = vec![String::new(); r.children.len()];
    for &v in r.order.iter().rev() {
        let mut parts: Vec<&str> = r.children[v].iter().map(|&c| enc[c].as_str()).collect();
        parts.sort_unstable();
        let mut s = String::with_capacity(2 + parts.iter().map(|p| p.len()).sum::<usize>());
        s.push('(');
        for p in parts {
            s.push_str(p);
        }
        s.push(')');
        enc[v] = s;
    }
    enc
}

fn adjacency(t: &Tree) -> Vec<Vec<usize>> {
    (0..t.len()).map(|i| t.adj(i).to_vec()).collect()
}

/// Center-rooted canonical encoding; equal strings exactly for isomorphic
/// trees. Bicentral trees take the smaller of their two encodings.
pub fn canonical_form(t: &Tree) -> String {
    let adj = adjacency(t);
    t.centers()
        .into_iter()
        .map(|c| {
            let r = rooted(&adj, c);
            encodings(&r).swap_remove(c)
        })
        .min()
        .expect("a tree has a centre")
}

/// Compares canonical encodings rooted at the tree centres and, when they
/// agree, returns an explicit label mapping from `t1` to `t2`.
pub fn tree_isomorphic(t1: &Tree, t2: &Tree) -> Option<BTreeMap<String, String>> {
    if t1.len() != t2.len() {
        return None;
    }
    let (c1, c2) = (t1.centers(), t2.centers());
    if c1.len() != c2.len() {
        return None;
    }
    let (adj1, adj2) = (adjacency(t1), adjacency(t2));
    let r1 = rooted(&adj1, c1[0]);
    let e1 = encodings(&r1);
    for &root2 in &c2 {
        let r2 = rooted(&adj2, root2);
        let e2 = encodings(&r2);
        if e1[c1[0]] != e2[root2] {
            continue;
        }
        let mut mapping = BTreeMap::new();
        let mut stack = vec![(c1[0], root2)];
        while let Some((a, b)) = stack.pop() {
            mapping.insert(t1.label(a).to_string(), t2.label(b).to_string());
            let mut ka = r1.children[a].clone();
            let mut kb = r2.children[b].clone();
            ka.sort_by(|&x, &y| e1[x].cmp(&e1[y]));
            kb.sort_by(|&x, &y| e2[x].cmp(&e2[y]));
            stack.extend(ka.into_iter().zip(kb));
        }
        return Some(mapping);
    }
    None
}

/// A smoothed tree whose edges remember how many original edges they stand
/// for.
struct Weighted {
    adj: Vec<Vec<(usize, usize)>>,
}

fn weighted(t: &Tree) -> Weighted {
    let (kept, edges) = branch_structure(t);
    let position: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); kept.len()];
    for (a, b, len) in edges {
        let (a, b) = (position[&a], position[&b]);
        adj[a].push((b, len));
        adj[b].push((a, len));
    }
    Weighted { adj }
}

/// Whether `t` arises from `r` by zero or more edge subdivisions.
///
/// Subdivision keeps every branch vertex (degree other than 2) and its degree
/// and only lengthens the degree-2 paths between them, so the question is
/// whether the smoothed trees admit an isomorphism under which each path of
/// `t` is at least as long as its image path in `r`.
pub fn is_subdivision_of(t: &Tree, r: &Tree) -> bool {
    if t.len() < r.len() {
        return false;
    }
    if r.len() == 1 || t.len() == 1 {
        return t.len() == r.len();
    }
    let (wt, wr) = (weighted(t), weighted(r));
    if wt.adj.len() != wr.adj.len() {
        return false;
    }
    let plain = |w: &Weighted| -> Vec<Vec<usize>> {
        w.adj.iter().map(|n| n.iter().map(|&(u, _)| u).collect()).collect()
    };
    let (pt, pr) = (plain(&wt), plain(&wr));
    let ct = centers_of(&pt);
    let cr = centers_of(&pr);
    if ct.len() != cr.len() {
        return false;
    }
    let rr = rooted(&pr, cr[0]);
    ct.iter().any(|&root_t| {
        let rt = rooted(&pt, root_t);
        let mut memo = HashMap::new();
        dominates(&wt, &rt, &wr, &rr, root_t, cr[0], &mut memo)
    })
}

/// A set of trees closed under isomorphism, in one of the two presentations
/// supported for membership tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeClass {
    /// Every subdivision of the given tree, the tree itself included.
    SubdivisionsOf(Tree),
    /// Trees isomorphic to one of the listed trees.
    Explicit(Vec<Tree>),
}

impl TreeClass {
    pub fn contains(&self, t: &Tree) -> bool {
        match self {
            TreeClass::SubdivisionsOf(r) => is_subdivision_of(t, r),
            TreeClass::Explicit(list) => {
                let form = canonical_form(t);
                list.iter().any(|r| canonical_form(r) == form)
            }
        }
    }
}

fn centers_of(adj: &[Vec<usize>]) -> Vec<usize> {
    let labels: Vec<String> = (0..adj.len()).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for (a, nbrs) in adj.iter().enumerate() {
        for &b in nbrs.iter().filter(|&&b| b > a) {
            edges.push((labels[a].clone(), labels[b].clone()));
        }
    }
    Tree::new(labels, edges)
        .expect("smoothed structure is a tree")
        .centers()
}

fn edge_len(w: &Weighted, a: usize, b: usize) -> usize {
    w.adj[a]
        .iter()
        .find(|&&(u, _)| u == b)
        .map(|&(_, len)| len)
        .expect("rooted child is adjacent")
}

/// Whether the rooted subtree of `t` at `a` is a subdivision of the rooted
/// subtree of `r` at `b`, matching children by backtracking.
fn dominates(
    wt: &Weighted,
    rt: &Rooted,
    wr: &Weighted,
    rr: &Rooted,
    a: usize,
    b: usize,
    memo: &mut HashMap<(usize, usize), bool>,
) -> bool {
    if let Some(&known) = memo.get(&(a, b)) {
        return known;
    }
    let ka = &rt.children[a];
    let kb = &rr.children[b];
    let result = ka.len() == kb.len() && {
        let mut used = vec![false; kb.len()];
        match_children(wt, rt, wr, rr, a, b, 0, &mut used, memo)
    };
    memo.insert((a, b), result);
    result
}

#[allow(clippy::too_many_arguments)]
fn match_children(
    wt: &Weighted,
    rt: &Rooted,
    wr: &Weighted,
    rr: &Rooted,
    a: usize,
    b: usize,
    next: usize,
    used: &mut [bool],
    memo: &mut HashMap<(usize, usize), bool>,
) -> bool {
    let ka = &rt.children[a];
    if next == ka.len() {
        return true;
    }
    let child_t = ka[next];
    let len_t = edge_len(wt, a, child_t);
    for (slot, &child_r) in rr.children[b].iter().enumerate() {
        if used[slot] || edge_len(wr, b, child_r) > len_t {
            continue;
        }
        if dominates(wt, rt, wr, rr, child_t, child_r, memo) {
            used[slot] = true;
            if match_children(wt, rt, wr, rr, a, b, next + 1, used, memo) {
                return true;
            }
            used[slot] = false;
        }
    }
    false
}

//! Cochordal-mixed partitions and the constructions linking them to covered
//! subtree overlap representations.
//!
//! A partition of the edges of `base` (the complement of the represented
//! graph) into an undirected block `E1` and an oriented block `E2` is
//! cochordal-mixed when `(V, E1)` is cochordal, `E2` is transitively
//! oriented, and `u -> v` in `E2` together with `vw` in `E1` forces `uw` in
//! `E1`. A subtree family with a covering subtree `R` yields such a partition
//! with an `R`-hosted certificate for `E1`, and every partition with a
//! certificate on `R` yields a family hosted on `R` plus pendant leaves in
//! which `R` covers and is bushy.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::derive::{derive_graph, DeriveMode};
use crate::graph::{
    is_transitive, recognize, transitivity_violations, GraphError, Orientation, Property,
    SimpleGraph, TransitivityViolation,
};
use crate::tree::{
    is_covering_subtree, validate_family, FreshLabels, Member, SubtreeFamily, Tree, TreeError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MixedError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("pair {0}-{1} is not an edge of the base graph")]
    PairNotInBase(String, String),
    #[error("pair {0}-{1} appears in both blocks")]
    PairInBothBlocks(String, String),
    #[error("pair {0}-{1} is listed twice")]
    RepeatedPair(String, String),
    #[error("base edge {0}-{1} is in neither block")]
    UncoveredEdge(String, String),
    #[error("vertex subset does not cover every member")]
    NotCovering,
    #[error("arc {0}->{1} joins disjoint members")]
    DisjointArc(String, String),
    #[error("arc relation has a cycle through `{0}`")]
    CyclicArcs(String),
    #[error("orientation is not transitive: {0:?}")]
    NonTransitive(Vec<TransitivityViolation>),
    #[error("partition fails verification: {0:?}")]
    InvalidPartition(Vec<MixedViolation>),
}

/// An edge partition of `base` into `E1` (unordered) and `E2` (arcs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedPartition {
    base: SimpleGraph,
    e1: BTreeSet<(usize, usize)>,
    e2: BTreeSet<(usize, usize)>,
}

impl MixedPartition {
    pub fn new<S: AsRef<str>>(
        base: SimpleGraph,
        e1: impl IntoIterator<Item = (S, S)>,
        e2: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Self, MixedError> {
        let lookup = |u: &str| {
            base.index_of(u)
                .ok_or_else(|| MixedError::Graph(GraphError::UnknownVertex(u.to_string())))
        };
        let mut seen = BTreeSet::new();
        let mut e1_set = BTreeSet::new();
        let mut e2_set = BTreeSet::new();
        for (block, pairs) in [(1, e1.into_iter().collect::<Vec<_>>()), (2, e2.into_iter().collect())] {
            for (u, v) in pairs {
                let (u, v) = (u.as_ref(), v.as_ref());
                let (a, b) = (lookup(u)?, lookup(v)?);
                if a == b || !base.has_edge(a, b) {
                    return Err(MixedError::PairNotInBase(u.to_string(), v.to_string()));
                }
                let key = (a.min(b), a.max(b));
                if !seen.insert(key) {
                    let in_e1 = e1_set.contains(&key);
                    return Err(if in_e1 != (block == 1) {
                        MixedError::PairInBothBlocks(u.to_string(), v.to_string())
                    } else {
                        MixedError::RepeatedPair(u.to_string(), v.to_string())
                    });
                }
                if block == 1 {
                    e1_set.insert(key);
                } else {
                    e2_set.insert((a, b));
                }
            }
        }
        if let Some((a, b)) = base.edges().into_iter().find(|k| !seen.contains(k)) {
            return Err(MixedError::UncoveredEdge(
                base.label(a).to_string(),
                base.label(b).to_string(),
            ));
        }
        Ok(Self {
            base,
            e1: e1_set,
            e2: e2_set,
        })
    }

    pub(crate) fn from_index_blocks(
        base: SimpleGraph,
        e1: BTreeSet<(usize, usize)>,
        e2: BTreeSet<(usize, usize)>,
    ) -> Self {
        Self { base, e1, e2 }
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    /// `E1` pairs, each sorted, list sorted.
    pub fn e1_labels(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .e1
            .iter()
            .map(|&(a, b)| crate::graph::sorted_pair(self.base.label(a), self.base.label(b)))
            .collect();
        out.sort();
        out
    }

    /// `E2` arcs as `(tail, head)`, list sorted.
    pub fn e2_labels(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .e2
            .iter()
            .map(|&(a, b)| (self.base.label(a).to_string(), self.base.label(b).to_string()))
            .collect();
        out.sort();
        out
    }

    /// The spanning graph `(V, E1)`.
    pub fn e1_graph(&self) -> SimpleGraph {
        self.base.spanning_subgraph(self.e1.iter().copied())
    }

    /// The graph whose complement `base` is.
    pub fn represented_graph(&self) -> SimpleGraph {
        self.base.complement()
    }

    fn in_e1(&self, a: usize, b: usize) -> bool {
        self.e1.contains(&(a.min(b), a.max(b)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MixedViolation {
    /// `(V, E1)` is not cochordal.
    NotCochordal,
    /// The certificate does not represent `(V, E1)` as a disjointness graph.
    CertificateMismatch { detail: String },
    /// Certificate and recognition reached different verdicts on `(V, E1)`.
    CertificateDisagreement { certificate: bool, recognition: bool },
    NotTransitive(TransitivityViolation),
    /// `u -> v` in `E2` and `vw` in `E1` but `uw` not in `E1`.
    Mixing { u: String, v: String, w: String },
    /// Both `u -> v` and `v -> u`, or a loop.
    NotAntisymmetric { u: String, v: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedReport {
    pub violations: Vec<MixedViolation>,
}

impl MixedReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four conditions of a cochordal-mixed partition. With a
/// certificate, the `E1` verdict is the certificate's; recognition still runs
/// and any disagreement is reported as well.
pub fn verify_mixed_partition(p: &MixedPartition, e1_certificate: Option<&SubtreeFamily>) -> MixedReport {
    let mut violations = Vec::new();
    let e1_graph = p.e1_graph();
    let recognized = recognize(&e1_graph, Property::Cochordal)
        .expect("cochordal recognition has no size bound")
        .holds;
    match e1_certificate {
        None => {
            if !recognized {
                violations.push(MixedViolation::NotCochordal);
            }
        }
        Some(cert) => {
            let certified = match certificate_problem(cert, &e1_graph) {
                None => true,
                Some(detail) => {
                    violations.push(MixedViolation::CertificateMismatch { detail });
                    false
                }
            };
            if certified != recognized {
                violations.push(MixedViolation::CertificateDisagreement {
                    certificate: certified,
                    recognition: recognized,
                });
            }
        }
    }

    violations.extend(
        transitivity_violations(p.base.labels(), &p.e2)
            .into_iter()
            .map(MixedViolation::NotTransitive),
    );

    let label = |i: usize| p.base.label(i).to_string();
    for &(u, v) in &p.e2 {
        for w in 0..p.base.vertex_count() {
            if w != u && w != v && p.in_e1(v, w) && !p.in_e1(u, w) {
                violations.push(MixedViolation::Mixing {
                    u: label(u),
                    v: label(v),
                    w: label(w),
                });
            }
        }
        if u == v || p.e2.contains(&(v, u)) {
            violations.push(MixedViolation::NotAntisymmetric { u: label(u), v: label(v) });
        }
    }
    MixedReport { violations }
}

fn certificate_problem(cert: &SubtreeFamily, e1_graph: &SimpleGraph) -> Option<String> {
    let invalid = validate_family(cert);
    if !invalid.is_empty() {
        return Some(format!("certificate is not a subtree family: {invalid:?}"));
    }
    let names: BTreeSet<&str> = cert.names().collect();
    let vertices: BTreeSet<&str> = e1_graph.labels().iter().map(String::as_str).collect();
    if names != vertices || cert.len() != e1_graph.vertex_count() {
        return Some("certificate members do not match the partition's vertices".into());
    }
    let disjointness = derive_graph(cert, DeriveMode::Disjointness);
    if !disjointness.same_labelled_graph(e1_graph) {
        return Some("certificate disjointness graph differs from (V, E1)".into());
    }
    None
}

/// Members sorted by size, ties by name; `E1` takes the disjoint pairs and
/// `E2` the containments, oriented from the earlier member to the later.
/// The certificate is the family cut down to `r`, hosted on the subtree `r`
/// induces.
pub fn overlap_to_mixed(
    f: &SubtreeFamily,
    r: &BTreeSet<String>,
) -> Result<(MixedPartition, SubtreeFamily), MixedError> {
    let invalid = validate_family(f);
    if !invalid.is_empty() {
        return Err(TreeError::InvalidFamily(invalid).into());
    }
    if !is_covering_subtree(f, r)? {
        return Err(MixedError::NotCovering);
    }
    let members = f.members();
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&a, &b| {
        members[a]
            .len()
            .cmp(&members[b].len())
            .then_with(|| members[a].name.cmp(&members[b].name))
    });
    let mut rank = vec![0; members.len()];
    for (pos, &i) in order.iter().enumerate() {
        rank[i] = pos;
    }

    let base = derive_graph(f, DeriveMode::Overlap).complement();
    let mut e1 = BTreeSet::new();
    let mut e2 = BTreeSet::new();
    for (a, b) in base.edges() {
        let (ta, tb) = (&members[a].vertices, &members[b].vertices);
        if ta.is_disjoint(tb) {
            e1.insert((a, b));
        } else {
            let (first, second) = if rank[a] < rank[b] { (a, b) } else { (b, a) };
            debug_assert!(members[first].vertices.is_subset(&members[second].vertices));
            e2.insert((first, second));
        }
    }
    let partition = MixedPartition { base, e1, e2 };

    let host = f.host().induced(r)?;
    let cert_members = members
        .iter()
        .map(|m| Member {
            name: m.name.clone(),
            vertices: m.vertices.intersection(r).cloned().collect(),
        })
        .collect();
    let certificate = SubtreeFamily::new(host, cert_members)?;
    Ok((partition, certificate))
}

/// Replaces `t_i` by `t_i ∩ t_j` along every arc `i -> j` until every arc is
/// a containment. Members are processed sinks first, so each member is final
/// before any of its predecessors shrinks against it.
pub fn shrink_containments<S: AsRef<str>>(
    f: &SubtreeFamily,
    arcs: &[(S, S)],
) -> Result<SubtreeFamily, MixedError> {
    let n = f.len();
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (u, v) in arcs {
        let (u, v) = (u.as_ref(), v.as_ref());
        let a = f
            .position(u)
            .ok_or_else(|| TreeError::UnknownMember(u.to_string()))?;
        let b = f
            .position(v)
            .ok_or_else(|| TreeError::UnknownMember(v.to_string()))?;
        if a == b {
            return Err(MixedError::CyclicArcs(u.to_string()));
        }
        succ[a].insert(b);
    }
    let order = sinks_first(f, &succ)?;
    let (host, mut members) = f.clone().into_parts();

    let mut settled = false;
    for _ in 0..=n {
        for &i in &order {
            for &j in &succ[i] {
                if members[i].vertices.is_subset(&members[j].vertices) {
                    continue;
                }
                let cut: BTreeSet<String> = members[i]
                    .vertices
                    .intersection(&members[j].vertices)
                    .cloned()
                    .collect();
                if cut.is_empty() {
                    return Err(MixedError::DisjointArc(
                        members[i].name.clone(),
                        members[j].name.clone(),
                    ));
                }
                members[i].vertices = cut;
            }
        }
        settled = (0..n).all(|i| succ[i].iter().all(|&j| members[i].vertices.is_subset(&members[j].vertices)));
        if settled {
            break;
        }
    }
    debug_assert!(settled, "one sinks-first pass reaches the fixpoint");
    Ok(SubtreeFamily::unchecked(host, members))
}

/// Member indices ordered so that every arc's head precedes its tail.
fn sinks_first(f: &SubtreeFamily, succ: &[BTreeSet<usize>]) -> Result<Vec<usize>, MixedError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn visit(
        v: usize,
        succ: &[BTreeSet<usize>],
        marks: &mut [Mark],
        out: &mut Vec<usize>,
    ) -> Result<(), usize> {
        match marks[v] {
            Mark::Done => return Ok(()),
            Mark::Active => return Err(v),
            Mark::New => {}
        }
        marks[v] = Mark::Active;
        for &u in &succ[v] {
            visit(u, succ, marks, out)?;
        }
        marks[v] = Mark::Done;
        out.push(v);
        Ok(())
    }
    let mut marks = vec![Mark::New; succ.len()];
    let mut out = Vec::with_capacity(succ.len());
    for v in 0..succ.len() {
        visit(v, succ, &mut marks, &mut out)
            .map_err(|c| MixedError::CyclicArcs(f.members()[c].name.clone()))?;
    }
    Ok(out)
}

/// A family together with the cover it was built around.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BushyRepresentation {
    pub family: SubtreeFamily,
    pub cover: BTreeSet<String>,
}

/// Builds an overlap representation of the complement of `p.base()` on the
/// certificate's host `R` plus one pendant leaf per member, with `R` a bushy
/// covering subtree.
pub fn mixed_to_bushy(
    p: &MixedPartition,
    cert: &SubtreeFamily,
) -> Result<BushyRepresentation, MixedError> {
    let report = verify_mixed_partition(p, Some(cert));
    if !report.is_valid() {
        return Err(MixedError::InvalidPartition(report.violations));
    }
    let base = p.base();
    let ordered: Vec<Member> = base
        .labels()
        .iter()
        .map(|name| cert.member(name).expect("verified certificate names every vertex").clone())
        .collect();
    let ordered = SubtreeFamily::unchecked(cert.host().clone(), ordered);
    let shrunk = shrink_containments(&ordered, &p.e2_labels())?;

    let mut host: Tree = cert.host().clone();
    let mut fresh = FreshLabels::new();
    let mut pendant = Vec::with_capacity(shrunk.len());
    for m in shrunk.members() {
        let attach = m.vertices.iter().next().expect("members are nonempty");
        let x = fresh.next(&m.name, |l| host.contains(l));
        host = host.with_leaf(attach, &x)?;
        pendant.push(x);
    }
    let mut incoming: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(k, i) in &p.e2 {
        incoming.entry(i).or_default().push(k);
    }
    let members = shrunk
        .members()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let mut vertices = m.vertices.clone();
            vertices.insert(pendant[i].clone());
            for &k in incoming.get(&i).into_iter().flatten() {
                vertices.insert(pendant[k].clone());
            }
            Member {
                name: m.name.clone(),
                vertices,
            }
        })
        .collect();
    let family = SubtreeFamily::new(host, members)?;
    Ok(BushyRepresentation {
        family,
        cover: cert.host().labels().iter().cloned().collect(),
    })
}

/// For a transitive orientation of the complement of `G`: a star with one
/// leaf per vertex, and `t_i` = centre, own leaf, and the leaves of every
/// `k` with `k -> i`. The overlap graph is `G` and the centre covers.
pub fn star_rep_from_orientation(o: &Orientation) -> Result<SubtreeFamily, MixedError> {
    let bad = is_transitive(o);
    if !bad.is_empty() {
        return Err(MixedError::NonTransitive(bad));
    }
    let g = o.graph();
    let labels = g.labels();
    let center = if g.index_of("c").is_none() {
        "c".to_string()
    } else {
        FreshLabels::new().next("c", |l| g.index_of(l).is_some())
    };
    let host = Tree::star(center.clone(), labels.iter().cloned())?;
    let members = (0..labels.len())
        .map(|i| {
            let mut vertices = BTreeSet::from([center.clone(), labels[i].clone()]);
            vertices.extend(
                o.arcs()
                    .iter()
                    .filter(|&&(_, head)| head == i)
                    .map(|&(tail, _)| labels[tail].clone()),
            );
            Member {
                name: labels[i].clone(),
                vertices,
            }
        })
        .collect();
    Ok(SubtreeFamily::new(host, members)?)
}

/// The centre label used by [`star_rep_from_orientation`] for this graph.
pub fn star_center(f: &SubtreeFamily) -> Option<&str> {
    let host = f.host();
    host.labels()
        .iter()
        .find(|l| host.degree(l) == Some(host.len() - 1) && f.members().iter().all(|m| m.vertices.contains(*l)))
        .map(String::as_str)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{bushiness, label_set, Tree};

    fn graph(labels: &[&str], edges: &[(&str, &str)]) -> SimpleGraph {
        SimpleGraph::new(labels.iter().copied(), edges.iter().copied()).unwrap()
    }

    fn c4() -> SimpleGraph {
        graph(&["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])
    }

    fn no_pairs() -> Vec<(&'static str, &'static str)> {
        Vec::new()
    }

    #[test]
    fn c4_partition_with_all_arcs_is_valid() {
        let p = MixedPartition::new(c4().complement(), no_pairs(), vec![("1", "3"), ("2", "4")]).unwrap();
        assert!(verify_mixed_partition(&p, None).is_valid());
    }

    #[test]
    fn two_k2_as_e1_is_not_cochordal() {
        let p = MixedPartition::new(c4().complement(), vec![("1", "3"), ("2", "4")], no_pairs()).unwrap();
        assert_eq!(
            verify_mixed_partition(&p, None).violations,
            vec![MixedViolation::NotCochordal]
        );
    }

    #[test]
    fn missing_shortcut_fails_transitivity() {
        let base = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let p = MixedPartition::new(base, no_pairs(), vec![("a", "b"), ("b", "c")]).unwrap();
        let v = verify_mixed_partition(&p, None).violations;
        assert!(matches!(v.as_slice(), [MixedViolation::NotTransitive(_)]));
    }

    #[test]
    fn mixing_condition_is_checked() {
        // u -> v with vw in E1 but uw in E2
        let base = graph(&["u", "v", "w"], &[("u", "v"), ("v", "w"), ("u", "w")]);
        let p = MixedPartition::new(base, vec![("v", "w")], vec![("u", "v"), ("u", "w")]).unwrap();
        let v = verify_mixed_partition(&p, None).violations;
        assert!(v.contains(&MixedViolation::Mixing {
            u: "u".into(),
            v: "v".into(),
            w: "w".into()
        }));
    }

    #[test]
    fn malformed_partitions_are_rejected() {
        let base = c4().complement();
        assert!(matches!(
            MixedPartition::new(base.clone(), vec![("1", "3")], vec![("3", "1"), ("2", "4")]),
            Err(MixedError::PairInBothBlocks(..))
        ));
        assert!(matches!(
            MixedPartition::new(base.clone(), vec![("1", "2")], vec![("1", "3"), ("2", "4")]),
            Err(MixedError::PairNotInBase(..))
        ));
        assert!(matches!(
            MixedPartition::new(base, vec![("1", "3")], no_pairs()),
            Err(MixedError::UncoveredEdge(..))
        ));
    }

    fn star_c4() -> SubtreeFamily {
        let host = Tree::star("c", ["l1", "l2", "l3", "l4"]).unwrap();
        SubtreeFamily::new(
            host,
            vec![
                Member::new("1", ["c", "l1"]),
                Member::new("2", ["c", "l2"]),
                Member::new("3", ["c", "l1", "l3"]),
                Member::new("4", ["c", "l2", "l4"]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn star_c4_to_mixed() {
        let (p, cert) = overlap_to_mixed(&star_c4(), &label_set(["c"])).unwrap();
        assert!(p.e1_labels().is_empty());
        assert_eq!(
            p.e2_labels(),
            vec![("1".into(), "3".into()), ("2".into(), "4".into())]
        );
        assert!(cert.members().iter().all(|m| m.vertices == label_set(["c"])));
        assert!(verify_mixed_partition(&p, Some(&cert)).is_valid());
        assert_eq!(p.represented_graph(), c4());
    }

    #[test]
    fn pairwise_disjoint_members_put_everything_in_e1() {
        let host = Tree::path(["a", "b", "c"]).unwrap();
        let f = SubtreeFamily::new(
            host,
            vec![Member::new("x", ["a"]), Member::new("y", ["b"]), Member::new("z", ["c"])],
        )
        .unwrap();
        let all = label_set(["a", "b", "c"]);
        let (p, _) = overlap_to_mixed(&f, &all).unwrap();
        assert_eq!(p.e1_labels().len(), 3);
        assert!(p.e2_labels().is_empty());
        assert_eq!(p.represented_graph().edge_count(), 0);
    }

    #[test]
    fn non_covering_subset_is_rejected() {
        assert_eq!(
            overlap_to_mixed(&star_c4(), &label_set(["l3"])),
            Err(MixedError::NotCovering)
        );
    }

    #[test]
    fn shrink_examples() {
        let f = star_c4();
        assert_eq!(shrink_containments::<&str>(&f, &[]).unwrap(), f);

        let host = Tree::path(["a", "b", "c"]).unwrap();
        let f = SubtreeFamily::new(host, vec![Member::new("1", ["a", "b"]), Member::new("2", ["b", "c"])])
            .unwrap();
        let g = shrink_containments(&f, &[("1", "2")]).unwrap();
        assert_eq!(g.member("1").unwrap().vertices, label_set(["b"]));
        assert_eq!(
            derive_graph(&g, DeriveMode::Disjointness),
            derive_graph(&f, DeriveMode::Disjointness)
        );
    }

    #[test]
    fn shrink_rejects_disjoint_arcs_and_cycles() {
        let host = Tree::path(["a", "b", "c"]).unwrap();
        let f = SubtreeFamily::new(host, vec![Member::new("1", ["a"]), Member::new("2", ["c"])]).unwrap();
        assert_eq!(
            shrink_containments(&f, &[("1", "2")]),
            Err(MixedError::DisjointArc("1".into(), "2".into()))
        );
        assert!(matches!(
            shrink_containments(&f, &[("1", "2"), ("2", "1")]),
            Err(MixedError::CyclicArcs(_))
        ));
    }

    #[test]
    fn c4_partition_becomes_star_like_bushy_family() {
        let p = MixedPartition::new(c4().complement(), no_pairs(), vec![("1", "3"), ("2", "4")]).unwrap();
        let cert = SubtreeFamily::new(
            Tree::single("c"),
            ["1", "2", "3", "4"].iter().map(|n| Member::new(*n, ["c"])).collect(),
        )
        .unwrap();
        let rep = mixed_to_bushy(&p, &cert).unwrap();
        assert_eq!(rep.family.host().len(), 5);
        assert_eq!(derive_graph(&rep.family, DeriveMode::Overlap), c4());
        assert_eq!(rep.cover, label_set(["c"]));
        assert_eq!(is_covering_subtree(&rep.family, &rep.cover), Ok(true));
        assert!(bushiness(rep.family.host(), &rep.cover).unwrap().bushy);
    }

    #[test]
    fn single_containment_arc() {
        let base = graph(&["a", "b"], &[("a", "b")]);
        let p = MixedPartition::new(base, no_pairs(), vec![("a", "b")]).unwrap();
        let cert = SubtreeFamily::new(Tree::single("r"), vec![Member::new("a", ["r"]), Member::new("b", ["r"])])
            .unwrap();
        let rep = mixed_to_bushy(&p, &cert).unwrap();
        let a = &rep.family.member("a").unwrap().vertices;
        let b = &rep.family.member("b").unwrap().vertices;
        assert!(a.is_subset(b) && a != b);
        assert_eq!(derive_graph(&rep.family, DeriveMode::Overlap).edge_count(), 0);
    }

    #[test]
    fn mismatched_certificate_is_reported() {
        let p = MixedPartition::new(c4().complement(), no_pairs(), vec![("1", "3"), ("2", "4")]).unwrap();
        // members 1 and 2 disjoint in the certificate, but 12 is not in E1
        let cert = SubtreeFamily::new(
            Tree::path(["x", "y"]).unwrap(),
            vec![
                Member::new("1", ["x"]),
                Member::new("2", ["y"]),
                Member::new("3", ["x", "y"]),
                Member::new("4", ["x", "y"]),
            ],
        )
        .unwrap();
        let v = verify_mixed_partition(&p, Some(&cert)).violations;
        assert!(matches!(v[0], MixedViolation::CertificateMismatch { .. }));
        assert!(v.contains(&MixedViolation::CertificateDisagreement {
            certificate: false,
            recognition: true
        }));
        assert!(matches!(mixed_to_bushy(&p, &cert), Err(MixedError::InvalidPartition(_))));
    }

    #[test]
    fn star_representations() {
        let o = Orientation::new(c4().complement(), [("1", "3"), ("2", "4")]).unwrap();
        let f = star_rep_from_orientation(&o).unwrap();
        assert_eq!(f.member("3").unwrap().vertices, label_set(["c", "3", "1"]));
        assert_eq!(derive_graph(&f, DeriveMode::Overlap), c4());
        assert_eq!(star_center(&f), Some("c"));

        let k3 = SimpleGraph::complete(["a", "b", "c"]).unwrap();
        let o = Orientation::new(k3.complement(), no_pairs()).unwrap();
        let f = star_rep_from_orientation(&o).unwrap();
        assert_eq!(derive_graph(&f, DeriveMode::Overlap), k3);
        assert_ne!(star_center(&f), Some("c"));

        let p4 = graph(&["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("3", "4")]);
        let o = Orientation::new(p4.complement(), [("3", "1"), ("4", "1"), ("4", "2")]).unwrap();
        let f = star_rep_from_orientation(&o).unwrap();
        assert_eq!(derive_graph(&f, DeriveMode::Overlap), p4);

        let bad = Orientation::new(p4.complement(), [("1", "3"), ("4", "1"), ("4", "2")]).unwrap();
        assert!(matches!(star_rep_from_orientation(&bad), Err(MixedError::NonTransitive(_))));
    }
}

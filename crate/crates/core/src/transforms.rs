//! Host-tree transformations that leave every pairwise relation of a
//! subtree family intact (up to similarity): pendant-leaf addition, the
//! absorbing edge subdivision, and the normalization that drives a family
//! into the nontrivial-intersection, distinct-leaf form.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::tree::{
    validate_family, FamilyViolation, FreshLabels, Member, SubtreeFamily, Tree, TreeError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("absorb set names unknown member `{0}`")]
    UnknownMember(String),
    #[error("absorbed member `{member}` does not contain `{v}`")]
    AbsorbWithoutEndpoint { member: String, v: String },
    #[error("the host must have at least two vertices")]
    TrivialHost,
    #[error("invalid subtree family: {0:?}")]
    InvalidFamily(Vec<FamilyViolation>),
    #[error("normalization invariant broken at `{vertex}`: {detail}")]
    Invariant { vertex: String, detail: String },
}

/// One absorbing subdivision: edge `v w` becomes `v - x - w`, and `x` joins
/// every member that held both endpoints, every member named in `absorb`,
/// and every member strictly containing an absorbed one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionStep {
    pub v: String,
    pub w: String,
    pub x: String,
    pub absorb: BTreeSet<String>,
}

pub fn add_leaf(f: &SubtreeFamily, attach: &str, new: &str) -> Result<SubtreeFamily, TransformError> {
    let host = f.host().with_leaf(attach, new)?;
    Ok(SubtreeFamily::unchecked(host, f.members().to_vec()))
}

pub fn subdivide_lemma1(
    f: &SubtreeFamily,
    step: &SubdivisionStep,
) -> Result<SubtreeFamily, TransformError> {
    let host = f.host().subdivided(&step.v, &step.w, &step.x)?;
    let mut absorbed = Vec::with_capacity(step.absorb.len());
    for name in &step.absorb {
        let m = f
            .member(name)
            .ok_or_else(|| TransformError::UnknownMember(name.clone()))?;
        if !m.vertices.contains(&step.v) {
            return Err(TransformError::AbsorbWithoutEndpoint {
                member: name.clone(),
                v: step.v.clone(),
            });
        }
        absorbed.push(&m.vertices);
    }
    let members = f
        .members()
        .iter()
        .map(|m| {
            let t = &m.vertices;
            let gains = (t.contains(&step.v) && t.contains(&step.w))
                || step.absorb.contains(&m.name)
                || absorbed.iter().any(|s| s.len() < t.len() && s.is_subset(t));
            let mut out = m.clone();
            if gains {
                out.vertices.insert(step.x.clone());
            }
            out
        })
        .collect();
    Ok(SubtreeFamily::unchecked(host, members))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Property1Violation {
    /// Clause (a): the member has a single vertex.
    TrivialMember { member: String },
    /// Clause (b): the two members meet in exactly one vertex.
    SingleSharedVertex {
        first: String,
        second: String,
        vertex: String,
    },
    /// Clause (c): the vertex is a leaf of every listed member.
    SharedLeaf { vertex: String, members: Vec<String> },
}

pub fn check_property1(f: &SubtreeFamily) -> Vec<Property1Violation> {
    let mut out = Vec::new();
    let members = f.members();
    for m in members {
        if m.len() < 2 {
            out.push(Property1Violation::TrivialMember {
                member: m.name.clone(),
            });
        }
    }
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let mut shared = a.vertices.intersection(&b.vertices);
            if let (Some(only), None) = (shared.next(), shared.next()) {
                out.push(Property1Violation::SingleSharedVertex {
                    first: a.name.clone(),
                    second: b.name.clone(),
                    vertex: only.clone(),
                });
            }
        }
    }
    for (vertex, owners) in leaf_owners(f) {
        if owners.len() >= 2 {
            out.push(Property1Violation::SharedLeaf {
                vertex,
                members: owners.into_iter().map(|i| members[i].name.clone()).collect(),
            });
        }
    }
    out
}

/// Host vertex -> indices of the members it is a leaf of.
fn leaf_owners(f: &SubtreeFamily) -> BTreeMap<String, Vec<usize>> {
    let mut owners: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, m) in f.members().iter().enumerate() {
        for leaf in f.host().subtree_leaves(&m.vertices) {
            owners.entry(leaf.to_string()).or_default().push(i);
        }
    }
    owners
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TranscriptAction {
    AddLeaf { attach: String, new: String },
    /// Separates pendant-leaf preprocessing from the subdivisions.
    EndPreprocessing,
    Subdivide(SubdivisionStep),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub family: SubtreeFamily,
    /// The host after pendant-leaf preprocessing; the output host is a
    /// subdivision of this tree.
    pub preprocessed_host: Tree,
    pub transcript: Vec<TranscriptAction>,
}

/// Replays a transcript through [`add_leaf`] and [`subdivide_lemma1`].
pub fn replay(
    f: &SubtreeFamily,
    transcript: &[TranscriptAction],
) -> Result<SubtreeFamily, TransformError> {
    let mut current = f.clone();
    for action in transcript {
        current = match action {
            TranscriptAction::AddLeaf { attach, new } => add_leaf(&current, attach, new)?,
            TranscriptAction::EndPreprocessing => current,
            TranscriptAction::Subdivide(step) => subdivide_lemma1(&current, step)?,
        };
    }
    Ok(current)
}

struct Normalizer {
    family: SubtreeFamily,
    transcript: Vec<TranscriptAction>,
    fresh: FreshLabels,
}

impl Normalizer {
    fn fresh(&mut self, base: &str) -> String {
        let host = self.family.host();
        self.fresh.next(base, |l| host.contains(l))
    }

    fn subdivide(&mut self, v: &str, w: &str, x: String, absorb: BTreeSet<String>) -> Result<(), TransformError> {
        let step = SubdivisionStep {
            v: v.to_string(),
            w: w.to_string(),
            x,
            absorb,
        };
        self.family = subdivide_lemma1(&self.family, &step)?;
        self.transcript.push(TranscriptAction::Subdivide(step));
        Ok(())
    }

    fn containing(&self, vertex: &str) -> BTreeSet<String> {
        self.family
            .members()
            .iter()
            .filter(|m| m.vertices.contains(vertex))
            .map(|m| m.name.clone())
            .collect()
    }

    /// Gives each member that has `p` as a leaf its own private leaf on the
    /// `p - r` side, smallest member nearest to `p`.
    fn split_shared_leaf(&mut self, p: &str, owners: &[usize]) -> Result<(), TransformError> {
        let host = self.family.host();
        let invariant = |detail: &str| TransformError::Invariant {
            vertex: p.to_string(),
            detail: detail.to_string(),
        };
        let nbrs: Vec<String> = host.neighbors(p).map(str::to_string).collect();
        if nbrs.len() != 2 {
            return Err(invariant("shared leaf does not have degree two"));
        }
        let members = self.family.members();
        let holds = |i: usize, v: &str| members[i].vertices.contains(v);
        // every owner holds the same inner neighbour and not the outer one, r
        let r = if owners.iter().all(|&i| holds(i, &nbrs[0]) && !holds(i, &nbrs[1])) {
            nbrs[1].clone()
        } else if owners.iter().all(|&i| holds(i, &nbrs[1]) && !holds(i, &nbrs[0])) {
            nbrs[0].clone()
        } else {
            return Err(invariant("owners do not agree on the inner neighbour"));
        };
        let mut sorted: Vec<&Member> = owners.iter().map(|&i| &members[i]).collect();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.name.cmp(&b.name)));
        let sorted: Vec<String> = sorted.into_iter().map(|m| m.name.clone()).collect();
        let count = sorted.len();

        let mut w = r;
        for position in (1..=count).rev() {
            let absorb: BTreeSet<String> = if position == count {
                BTreeSet::from([sorted[count - 1].clone()])
            } else {
                sorted[position - 1..].iter().cloned().collect()
            };
            let x = self.fresh(p);
            self.subdivide(p, &w, x.clone(), absorb)?;
            w = x;
        }
        Ok(())
    }
}

/// Drives the family into the nontrivial-intersection, distinct-leaf form
/// while preserving every pairwise relation up to similarity.
///
/// 1. every host leaf lying in some member gets a new pendant leaf;
/// 2. every edge `pq` (label order, `p < q`) is subdivided twice, first
///    absorbing the members through `p`, then those through `q`;
/// 3. while some vertex is a leaf of several members, those members get
///    private subdivision vertices on its outer side.
pub fn normalize_property1(f: &SubtreeFamily) -> Result<Normalization, TransformError> {
    let violations = validate_family(f);
    if !violations.is_empty() {
        return Err(TransformError::InvalidFamily(violations));
    }
    if f.host().len() < 2 {
        return Err(TransformError::TrivialHost);
    }
    let mut norm = Normalizer {
        family: f.clone(),
        transcript: Vec::new(),
        fresh: FreshLabels::new(),
    };

    let covered_leaves: Vec<String> = f
        .host()
        .leaves()
        .into_iter()
        .filter(|l| f.members().iter().any(|m| m.vertices.contains(*l)))
        .map(str::to_string)
        .collect();
    for leaf in covered_leaves {
        let new = norm.fresh(&leaf);
        norm.family = add_leaf(&norm.family, &leaf, &new)?;
        norm.transcript.push(TranscriptAction::AddLeaf { attach: leaf, new });
    }
    norm.transcript.push(TranscriptAction::EndPreprocessing);
    let preprocessed_host = norm.family.host().clone();

    for (p, q) in preprocessed_host.edges() {
        let first = norm.fresh(&p);
        let absorb = norm.containing(&p);
        norm.subdivide(&p, &q, first.clone(), absorb)?;
        let second = norm.fresh(&q);
        let absorb = norm.containing(&q);
        norm.subdivide(&q, &first, second, absorb)?;
    }

    // each split strictly reduces the number of shared leaves
    let limit = norm.family.host().len() + 1;
    for _ in 0..limit {
        let shared = leaf_owners(&norm.family)
            .into_iter()
            .find(|(_, owners)| owners.len() >= 2);
        match shared {
            Some((p, owners)) => norm.split_shared_leaf(&p, &owners)?,
            None => {
                return Ok(Normalization {
                    family: norm.family,
                    preprocessed_host,
                    transcript: norm.transcript,
                })
            }
        }
    }
    Err(TransformError::Invariant {
        vertex: String::new(),
        detail: "shared-leaf elimination did not terminate".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{classify_pair, label_set, similarly_related, PairRelation};

    fn family(host: Tree, members: &[(&str, &[&str])]) -> SubtreeFamily {
        SubtreeFamily::new(
            host,
            members.iter().map(|(n, vs)| Member::new(*n, vs.iter())).collect(),
        )
        .unwrap()
    }

    fn relations(f: &SubtreeFamily) -> Vec<PairRelation> {
        let names: Vec<&str> = f.names().collect();
        let mut out = Vec::new();
        for a in &names {
            for b in &names {
                out.push(classify_pair(f, a, b).unwrap());
            }
        }
        out
    }

    fn step(v: &str, w: &str, x: &str, absorb: &[&str]) -> SubdivisionStep {
        SubdivisionStep {
            v: v.into(),
            w: w.into(),
            x: x.into(),
            absorb: label_set(absorb),
        }
    }

    #[test]
    fn add_leaf_to_k1() {
        let f = family(Tree::single("a"), &[("t", &["a"])]);
        let g = add_leaf(&f, "a", "b").unwrap();
        assert_eq!(g.host().len(), 2);
        assert_eq!(g.members(), f.members());
        assert!(matches!(
            add_leaf(&f, "a", "a"),
            Err(TransformError::Tree(TreeError::LabelCollision(_)))
        ));
        assert!(matches!(
            add_leaf(&f, "z", "b"),
            Err(TransformError::Tree(TreeError::UnknownVertex(_)))
        ));
    }

    #[test]
    fn subdivision_with_empty_absorb_leaves_members() {
        let f = family(Tree::path(["a", "b", "c"]).unwrap(), &[("t1", &["a"]), ("t2", &["c"])]);
        let g = subdivide_lemma1(&f, &step("a", "b", "x", &[])).unwrap();
        assert_eq!(g.members(), f.members());
        assert!(g.host().has_edge("a", "x") && g.host().has_edge("x", "b"));
    }

    #[test]
    fn absorbed_member_drags_its_supersets() {
        let f = family(Tree::path(["a", "b"]).unwrap(), &[("t1", &["a", "b"]), ("t2", &["a"])]);
        let g = subdivide_lemma1(&f, &step("a", "b", "x", &["t2"])).unwrap();
        assert_eq!(g.member("t1").unwrap().vertices, label_set(["a", "x", "b"]));
        assert_eq!(g.member("t2").unwrap().vertices, label_set(["a", "x"]));
        assert_eq!(
            classify_pair(&g, "t2", "t1"),
            Ok(PairRelation::FirstContainedProper)
        );
    }

    #[test]
    fn overlap_survives_subdivision() {
        let f = family(
            Tree::path(["a", "b", "c"]).unwrap(),
            &[("t1", &["a", "b"]), ("t2", &["b", "c"])],
        );
        let g = subdivide_lemma1(&f, &step("a", "b", "x", &[])).unwrap();
        assert_eq!(g.member("t1").unwrap().vertices, label_set(["a", "x", "b"]));
        assert_eq!(g.member("t2").unwrap().vertices, label_set(["b", "c"]));
        assert_eq!(classify_pair(&g, "t1", "t2"), Ok(PairRelation::Overlap));
    }

    #[test]
    fn step_preconditions() {
        let f = family(Tree::path(["a", "b", "c"]).unwrap(), &[("t1", &["c"])]);
        assert!(matches!(
            subdivide_lemma1(&f, &step("a", "c", "x", &[])),
            Err(TransformError::Tree(TreeError::NotAnEdge(..)))
        ));
        assert!(matches!(
            subdivide_lemma1(&f, &step("a", "b", "c", &[])),
            Err(TransformError::Tree(TreeError::LabelCollision(_)))
        ));
        assert_eq!(
            subdivide_lemma1(&f, &step("a", "b", "x", &["t1"])),
            Err(TransformError::AbsorbWithoutEndpoint {
                member: "t1".into(),
                v: "a".into()
            })
        );
        assert_eq!(
            subdivide_lemma1(&f, &step("a", "b", "x", &["t9"])),
            Err(TransformError::UnknownMember("t9".into()))
        );
    }

    #[test]
    fn property1_clauses() {
        let path = Tree::path(["a", "b", "c", "d"]).unwrap();
        let f = family(path.clone(), &[("t", &["a"])]);
        assert_eq!(
            check_property1(&f),
            vec![Property1Violation::TrivialMember { member: "t".into() }]
        );
        let f = family(path, &[("t1", &["a", "b"]), ("t2", &["b", "c"])]);
        let v = check_property1(&f);
        assert!(v.contains(&Property1Violation::SingleSharedVertex {
            first: "t1".into(),
            second: "t2".into(),
            vertex: "b".into()
        }));
        assert!(v.contains(&Property1Violation::SharedLeaf {
            vertex: "b".into(),
            members: vec!["t1".into(), "t2".into()]
        }));
    }

    #[test]
    fn normalizing_duplicate_singletons() {
        let f = family(Tree::path(["a", "b"]).unwrap(), &[("t1", &["a"]), ("t2", &["a"])]);
        let n = normalize_property1(&f).unwrap();
        assert!(check_property1(&n.family).is_empty());
        let t1 = &n.family.member("t1").unwrap().vertices;
        let t2 = &n.family.member("t2").unwrap().vertices;
        assert_ne!(t1, t2);
        assert!(t1.len() >= 2 && t2.len() >= 2);
        assert!(similarly_related(
            PairRelation::Equal,
            classify_pair(&n.family, "t1", "t2").unwrap()
        ));
    }

    #[test]
    fn normalizing_clean_family_still_subdivides() {
        // members avoid the host leaves, so preprocessing adds nothing
        let host = Tree::path(["a", "b", "c", "d", "e"]).unwrap();
        let f = family(host, &[("t1", &["b", "c"]), ("t2", &["c", "d"])]);
        let n = normalize_property1(&f).unwrap();
        assert_eq!(n.transcript[0], TranscriptAction::EndPreprocessing);
        assert_eq!(n.transcript.len(), 1 + 2 * 4);
        assert!(check_property1(&n.family).is_empty());
        assert_eq!(relations(&f), relations(&n.family));
        assert_eq!(replay(&f, &n.transcript).unwrap(), n.family);
    }

    #[test]
    fn trivial_host_is_rejected() {
        let f = family(Tree::single("a"), &[("t", &["a"])]);
        assert_eq!(normalize_property1(&f), Err(TransformError::TrivialHost));
    }
}

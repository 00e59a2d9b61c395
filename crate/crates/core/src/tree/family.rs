use std::collections::BTreeSet;

use super::{Tree, TreeError};

/// A named vertex subset of the host tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub name: String,
    pub vertices: BTreeSet<String>,
}

impl Member {
    pub fn new<S: AsRef<str>>(name: impl Into<String>, vertices: impl IntoIterator<Item = S>) -> Self {
        Self {
            name: name.into(),
            vertices: super::label_set(vertices),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// An ordered multiset of subtrees of a host tree. Names are unique; the
/// vertex sets may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeFamily {
    host: Tree,
    members: Vec<Member>,
}

impl SubtreeFamily {
    /// Builds a family and rejects it unless [`validate_family`] is clean.
    pub fn new(host: Tree, members: Vec<Member>) -> Result<Self, TreeError> {
        let family = Self::unchecked(host, members);
        let violations = validate_family(&family);
        if violations.is_empty() {
            Ok(family)
        } else {
            Err(TreeError::InvalidFamily(violations))
        }
    }

    /// Builds a family without validation, e.g. to report its violations.
    pub fn unchecked(host: Tree, members: Vec<Member>) -> Self {
        Self { host, members }
    }

    pub fn host(&self) -> &Tree {
        &self.host
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.members.iter().map(|m| m.name.as_str())
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.members.iter().position(|m| m.name == name)
    }

    pub fn member(&self, name: &str) -> Option<&Member> {
        self.members.iter().find(|m| m.name == name)
    }

    pub fn into_parts(self) -> (Tree, Vec<Member>) {
        (self.host, self.members)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationReason {
    Empty,
    UnknownVertex(String),
    Disconnected,
    DuplicateName,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyViolation {
    pub member: String,
    pub reason: ViolationReason,
}

pub fn validate_family(f: &SubtreeFamily) -> Vec<FamilyViolation> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for m in &f.members {
        let mut push = |reason| {
            out.push(FamilyViolation {
                member: m.name.clone(),
                reason,
            })
        };
        if !seen.insert(m.name.as_str()) {
            push(ViolationReason::DuplicateName);
        }
        if m.vertices.is_empty() {
            push(ViolationReason::Empty);
            continue;
        }
        let unknown: Vec<&String> = m.vertices.iter().filter(|v| !f.host.contains(v)).collect();
        for v in &unknown {
            push(ViolationReason::UnknownVertex((*v).clone()));
        }
        if unknown.is_empty() && !f.host.induces_subtree(&m.vertices) {
            push(ViolationReason::Disconnected);
        }
    }
    out
}

/// How two nonempty sets sit relative to each other. Exactly one tag holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairRelation {
    Disjoint,
    Overlap,
    FirstContainedProper,
    SecondContainedProper,
    Equal,
}

impl PairRelation {
    pub fn swapped(self) -> Self {
        match self {
            PairRelation::FirstContainedProper => PairRelation::SecondContainedProper,
            PairRelation::SecondContainedProper => PairRelation::FirstContainedProper,
            other => other,
        }
    }

    pub fn is_containment(self) -> bool {
        matches!(
            self,
            PairRelation::FirstContainedProper
                | PairRelation::SecondContainedProper
                | PairRelation::Equal
        )
    }
}

pub fn relate(a: &BTreeSet<String>, b: &BTreeSet<String>) -> PairRelation {
    let shared = a.intersection(b).count();
    if shared == 0 {
        PairRelation::Disjoint
    } else if shared == a.len() && shared == b.len() {
        PairRelation::Equal
    } else if shared == a.len() {
        PairRelation::FirstContainedProper
    } else if shared == b.len() {
        PairRelation::SecondContainedProper
    } else {
        PairRelation::Overlap
    }
}

pub fn classify_pair(f: &SubtreeFamily, i: &str, j: &str) -> Result<PairRelation, TreeError> {
    let a = f
        .member(i)
        .ok_or_else(|| TreeError::UnknownMember(i.to_string()))?;
    let b = f
        .member(j)
        .ok_or_else(|| TreeError::UnknownMember(j.to_string()))?;
    Ok(relate(&a.vertices, &b.vertices))
}

/// Agreement on disjointness and on overlap; every containment tag,
/// `Equal` included, is similar to every other.
pub fn similarly_related(r1: PairRelation, r2: PairRelation) -> bool {
    let disjoint = |r| r == PairRelation::Disjoint;
    let overlap = |r| r == PairRelation::Overlap;
    disjoint(r1) == disjoint(r2) && overlap(r1) == overlap(r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::label_set;

    fn path_abc() -> Tree {
        Tree::path(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn disconnected_member_is_reported() {
        let f = SubtreeFamily::unchecked(path_abc(), vec![Member::new("t", ["a", "c"])]);
        assert_eq!(
            validate_family(&f),
            vec![FamilyViolation {
                member: "t".into(),
                reason: ViolationReason::Disconnected
            }]
        );
    }

    #[test]
    fn valid_family_has_no_violations() {
        let f = SubtreeFamily::new(
            path_abc(),
            vec![Member::new("t1", ["a", "b"]), Member::new("t2", ["b", "c"])],
        )
        .unwrap();
        assert!(validate_family(&f).is_empty());
    }

    #[test]
    fn unknown_vertices_and_empty_members_do_not_panic() {
        let f = SubtreeFamily::unchecked(
            path_abc(),
            vec![
                Member::new("t1", ["a", "zz"]),
                Member::new("t2", Vec::<&str>::new()),
                Member::new("t1", ["a"]),
            ],
        );
        let reasons: Vec<ViolationReason> = validate_family(&f).into_iter().map(|v| v.reason).collect();
        assert_eq!(
            reasons,
            vec![
                ViolationReason::UnknownVertex("zz".into()),
                ViolationReason::Empty,
                ViolationReason::DuplicateName
            ]
        );
    }

    #[test]
    fn pair_classification() {
        let f = SubtreeFamily::new(
            path_abc(),
            vec![
                Member::new("t1", ["a", "b"]),
                Member::new("t2", ["b", "c"]),
                Member::new("t3", ["a"]),
                Member::new("t4", ["a"]),
            ],
        )
        .unwrap();
        assert_eq!(classify_pair(&f, "t1", "t2"), Ok(PairRelation::Overlap));
        assert_eq!(classify_pair(&f, "t3", "t4"), Ok(PairRelation::Equal));
        assert_eq!(classify_pair(&f, "t3", "t2"), Ok(PairRelation::Disjoint));
        assert_eq!(classify_pair(&f, "t3", "t1"), Ok(PairRelation::FirstContainedProper));
        assert_eq!(classify_pair(&f, "t1", "t3"), Ok(PairRelation::SecondContainedProper));
        assert_eq!(
            classify_pair(&f, "t1", "nope"),
            Err(TreeError::UnknownMember("nope".into()))
        );
    }

    #[test]
    fn star_containment() {
        let a = label_set(["c", "l1"]);
        let b = label_set(["c", "l1", "l3"]);
        assert_eq!(relate(&a, &b), PairRelation::FirstContainedProper);
    }

    #[test]
    fn similarity_table() {
        use PairRelation::*;
        assert!(similarly_related(Overlap, Overlap));
        assert!(similarly_related(FirstContainedProper, Equal));
        assert!(similarly_related(SecondContainedProper, FirstContainedProper));
        assert!(!similarly_related(Disjoint, Overlap));
        assert!(!similarly_related(Equal, Overlap));
        assert!(!similarly_related(Disjoint, Equal));
    }
}

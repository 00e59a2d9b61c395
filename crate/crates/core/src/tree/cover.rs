use std::collections::BTreeSet;

use super::{SubtreeFamily, Tree, TreeError};

/// Whether `r` meets every member of the family.
pub fn is_covering_subtree(f: &SubtreeFamily, r: &BTreeSet<String>) -> Result<bool, TreeError> {
    f.host().check_subtree(r)?;
    Ok(covers(f, r))
}

fn covers(f: &SubtreeFamily, r: &BTreeSet<String>) -> bool {
    f.members()
        .iter()
        .all(|m| !m.vertices.is_disjoint(r))
}

/// Shrinks the whole host by deleting, in label order, any leaf whose removal
/// keeps every member covered. The result is inclusion-minimal: every proper
/// subtree of it is reachable by leaf deletions, and coverage is monotone.
pub fn minimal_covering_subtree(f: &SubtreeFamily) -> BTreeSet<String> {
    let host = f.host();
    let mut current: BTreeSet<String> = host.labels().iter().cloned().collect();
    loop {
        if current.len() == 1 {
            return current;
        }
        let removable = host
            .subtree_leaves(&current)
            .into_iter()
            .map(str::to_string)
            .find(|leaf| {
                f.members()
                    .iter()
                    .all(|m| m.vertices.iter().any(|v| v != leaf && current.contains(v)))
            });
        match removable {
            Some(leaf) => {
                current.remove(&leaf);
            }
            None => return current,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BushinessReport {
    /// Every vertex of the subtree with its bushy flag, in label order.
    pub vertices: Vec<(String, bool)>,
    pub bushy: bool,
}

/// A vertex of `r` is bushy when all of its neighbours outside `r` are leaves
/// of `t`.
pub fn bushiness(t: &Tree, r: &BTreeSet<String>) -> Result<BushinessReport, TreeError> {
    t.check_subtree(r)?;
    let vertices: Vec<(String, bool)> = r
        .iter()
        .map(|v| {
            let ok = t
                .neighbors(v)
                .filter(|u| !r.contains(*u))
                .all(|u| t.is_leaf(u));
            (v.clone(), ok)
        })
        .collect();
    let bushy = vertices.iter().all(|(_, ok)| *ok);
    Ok(BushinessReport { vertices, bushy })
}

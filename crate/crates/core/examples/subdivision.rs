//! One absorbing subdivision: an edge gets a new middle vertex and chosen
//! members grow into it, while every pair of members keeps its relation.
//!
//! ```text
//! cargo run --example subdivision
//! ```

use std::collections::BTreeSet;

use treerep::transforms::{subdivide_lemma1, SubdivisionStep};
use treerep::tree::{classify_pair, similarly_related, Member, SubtreeFamily, Tree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = SubtreeFamily::new(
        Tree::path(["u", "v", "w", "z"])?,
        vec![
            Member::new("small", ["v"]),
            Member::new("big", ["u", "v"]),
            Member::new("right", ["w", "z"]),
        ],
    )?;
    let step = SubdivisionStep {
        v: "v".into(),
        w: "w".into(),
        x: "x".into(),
        absorb: BTreeSet::from(["small".to_string()]),
    };
    let g = subdivide_lemma1(&f, &step)?;

    println!("host edges: {:?}", g.host().edges());
    for m in g.members() {
        println!("{:<6} {:?}", m.name, m.vertices);
    }
    let names: Vec<&str> = f.names().collect();
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            let (before, after) = (classify_pair(&f, a, b)?, classify_pair(&g, a, b)?);
            println!("{a}/{b}: {before:?} -> {after:?} similar={}", similarly_related(before, after));
        }
    }
    Ok(())
}

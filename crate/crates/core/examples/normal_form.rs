//! Normalizes a random family: no single-vertex members, no two members
//! meeting in exactly one vertex, no vertex that is a leaf of two members.
//!
//! ```text
//! cargo run --example normal_form -- [seed]
//! ```

use treerep::transforms::{check_property1, normalize_property1, TranscriptAction};
use treerep::tree::is_subdivision_of;
use treerep::workbench::{gen_family, gen_tree, FamilyMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let t = gen_tree(7, seed)?;
    let f = gen_family(&t, 4, seed, &FamilyMode::Free)?;
    println!("violations before: {}", check_property1(&f).len());
    for v in check_property1(&f) {
        println!("  {v:?}");
    }

    let n = normalize_property1(&f)?;
    let leaves = n.transcript.iter().filter(|a| matches!(a, TranscriptAction::AddLeaf { .. })).count();
    println!(
        "{} pendant leaves, {} subdivisions",
        leaves,
        n.transcript.len() - leaves - 1
    );
    println!("violations after: {}", check_property1(&n.family).len());
    println!(
        "host {} -> {} vertices, subdivision of the preprocessed host: {}",
        t.len(),
        n.family.host().len(),
        is_subdivision_of(n.family.host(), &n.preprocessed_host)
    );
    for m in n.family.members() {
        println!("{:<4} {:?}", m.name, m.vertices);
    }
    Ok(())
}

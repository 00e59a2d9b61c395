//! A family covered by a subtree R is split into a cochordal-mixed partition
//! of the complement of its overlap graph, then rebuilt on R plus one pendant
//! leaf per member. The rebuilt family has the same overlap graph.
//!
//! ```text
//! cargo run --example covered_roundtrip -- [seed]
//! ```

use treerep::derive::{derive_graph, DeriveMode};
use treerep::mixed::{mixed_to_bushy, overlap_to_mixed, verify_mixed_partition};
use treerep::tree::bushiness;
use treerep::workbench::gen::gen_covered_instance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(7);
    let (f, r) = gen_covered_instance(10, 6, 3, seed)?;
    println!("cover R = {r:?}");

    let (p, cert) = overlap_to_mixed(&f, &r)?;
    println!("E1 (disjoint pairs): {:?}", p.e1_labels());
    println!("E2 (containments):   {:?}", p.e2_labels());
    println!("verifier: {}", verify_mixed_partition(&p, Some(&cert)).is_valid());

    let rep = mixed_to_bushy(&p, &cert)?;
    let before = derive_graph(&f, DeriveMode::Overlap);
    let after = derive_graph(&rep.family, DeriveMode::Overlap);
    println!("host: {} vertices, {} edges", rep.family.host().len(), rep.family.host().edges().len());
    println!("same overlap graph: {}", before.same_labelled_graph(&after));
    println!("cover bushy: {}", bushiness(rep.family.host(), &rep.cover)?.bushy);
    Ok(())
}

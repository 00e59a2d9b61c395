//! Finds an inclusion-minimal covering subtree and reports which of its
//! vertices are bushy.
//!
//! ```text
//! cargo run --example covers_and_bushiness -- [seed]
//! ```

use treerep::tree::{bushiness, is_covering_subtree, minimal_covering_subtree};
use treerep::workbench::{gen_family, gen_tree, FamilyMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let t = gen_tree(10, seed)?;
    let f = gen_family(&t, 4, seed, &FamilyMode::Free)?;
    for m in f.members() {
        println!("{:<3} {:?}", m.name, m.vertices);
    }
    let r = minimal_covering_subtree(&f);
    println!("minimal cover {r:?}, covering={}", is_covering_subtree(&f, &r)?);
    let report = bushiness(&t, &r)?;
    for (v, ok) in &report.vertices {
        println!("  {v}: {}", if *ok { "bushy" } else { "not bushy" });
    }
    println!("bushy cover: {}", report.bushy);
    Ok(())
}

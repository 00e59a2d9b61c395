//! Builds a family of subtrees on a small host and prints the four graphs
//! derived from it.
//!
//! ```text
//! cargo run --example derived_graphs
//! ```

use treerep::derive::{derive_graph, DeriveMode};
use treerep::tree::{classify_pair, Member, SubtreeFamily, Tree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let host = Tree::new(
        ["a", "b", "c", "d", "e", "f"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("c", "e"), ("e", "f")],
    )?;
    let f = SubtreeFamily::new(
        host,
        vec![
            Member::new("t1", ["a", "b", "c"]),
            Member::new("t2", ["c", "d"]),
            Member::new("t3", ["b", "c", "d", "e"]),
            Member::new("t4", ["f"]),
        ],
    )?;

    let names: Vec<&str> = f.names().collect();
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            println!("{a} vs {b}: {:?}", classify_pair(&f, a, b)?);
        }
    }
    for mode in DeriveMode::ALL {
        let g = derive_graph(&f, mode);
        println!("{:<12} {:?}", mode.name(), g.edge_labels());
    }
    Ok(())
}

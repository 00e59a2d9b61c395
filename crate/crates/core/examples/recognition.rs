//! Runs every recognizer on a few named graphs and prints the witnesses.
//!
//! ```text
//! cargo run --example recognition
//! ```

use treerep::graph::{recognize, Property, SimpleGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("P4", SimpleGraph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])?),
        ("C4", SimpleGraph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])?),
        (
            "C5",
            SimpleGraph::new(
                ["a", "b", "c", "d", "e"],
                [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
            )?,
        ),
        ("2K2", SimpleGraph::new(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])?),
        (
            "claw",
            SimpleGraph::new(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])?,
        ),
    ];
    for (name, g) in &graphs {
        println!("{name}");
        for p in Property::ALL {
            let r = recognize(g, p)?;
            println!("  {:<16} {:<5} {:?}", p.name(), r.holds, r.witness);
        }
    }
    Ok(())
}

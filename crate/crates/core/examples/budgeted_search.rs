//! Exhaustive searches with a time budget. A search that runs out of time
//! says so instead of answering no.
//!
//! ```text
//! cargo run --example budgeted_search
//! ```

use std::time::{Duration, Instant};

use treerep::graph::SimpleGraph;
use treerep::oracle::{enumerate_chordless_cycles, search_mixed_partition, search_overlap_rep, SearchBudget};
use treerep::tree::Tree;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = SimpleGraph::new(
        ["a", "b", "c", "d", "e"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
    )?;
    println!("chordless cycles: {:?}", enumerate_chordless_cycles(&c5)?);

    let roomy = SearchBudget::default();
    let start = Instant::now();
    println!("mixed partition: {:?}", search_mixed_partition(&c5, &roomy)?.found().is_some());
    println!("any representation: {:?} ({:?})", search_overlap_rep(&c5, &roomy, None)?.found().is_some(), start.elapsed());

    for limit in [Duration::from_millis(1), Duration::from_secs(30)] {
        let b = SearchBudget::new(7, 5, limit)?;
        let start = Instant::now();
        let out = search_overlap_rep(&c5, &b, Some(&Tree::single("r")))?;
        let verdict = if out.is_inconclusive() {
            "inconclusive"
        } else if out.found().is_some() {
            "found"
        } else {
            "none"
        };
        println!("single-vertex cover within {limit:?}: {verdict} after {:?}", start.elapsed());
    }
    Ok(())
}

//! The four-cycle: represented with a single vertex or an edge as cover, and
//! the edges of its complement split into a cochordal-mixed partition with
//! empty E1. The complement 2K2 is not cochordal, so E1 cannot take it all.
//!
//! ```text
//! cargo run --example four_cycle
//! ```

use std::time::Duration;

use treerep::graph::{recognize, Property, SimpleGraph};
use treerep::mixed::verify_mixed_partition;
use treerep::oracle::{search_mixed_partition, search_overlap_rep, SearchBudget, SearchOutcome};
use treerep::tree::Tree;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = SimpleGraph::new(["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])?;
    let budget = SearchBudget::default().with_time_limit(Duration::from_secs(10));

    println!("cocomparability: {}", recognize(&c4, Property::Cocomparability)?.holds);
    match search_overlap_rep(&c4, &budget, Some(&Tree::single("r")))? {
        SearchOutcome::Found(_) => println!("single-vertex cover: found"),
        other => println!("single-vertex cover: {other:?}"),
    }
    if let SearchOutcome::Found(f) = search_overlap_rep(&c4, &budget, Some(&Tree::path(["r1", "r2"])?))? {
        println!("edge cover on host {:?}", f.host().edges());
        for m in f.members() {
            println!("  {} {:?}", m.name, m.vertices);
        }
    }
    if let SearchOutcome::Found(p) = search_mixed_partition(&c4, &budget)? {
        println!("E1 {:?} E2 {:?} valid={}", p.e1_labels(), p.e2_labels(), verify_mixed_partition(&p, None).is_valid());
    }

    let two_k2 = SimpleGraph::new(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])?;
    println!("2K2 cochordal: {}", recognize(&two_k2, Property::Cochordal)?.holds);
    Ok(())
}

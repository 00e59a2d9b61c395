//! A cocomparability graph as the overlap graph of subtrees of a star, built
//! from a transitive orientation of its complement. The centre meets every
//! member.
//!
//! ```text
//! cargo run --example star_representation
//! ```

use treerep::derive::{derive_graph, DeriveMode};
use treerep::graph::{recognize, Property, PropertyWitness, SimpleGraph};
use treerep::mixed::{star_center, star_rep_from_orientation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the bull: a triangle with two pendant edges
    let g = SimpleGraph::new(
        ["a", "b", "c", "d", "e"],
        [("a", "b"), ("b", "c"), ("a", "c"), ("b", "d"), ("c", "e")],
    )?;
    let r = recognize(&g, Property::Cocomparability)?;
    let PropertyWitness::TransitiveOrientation(o) = r.witness else {
        println!("not a cocomparability graph");
        return Ok(());
    };
    println!("complement orientation: {:?}", o.arc_labels());

    let f = star_rep_from_orientation(&o)?;
    println!("centre: {:?}", star_center(&f));
    for m in f.members() {
        println!("{:<2} {:?}", m.name, m.vertices);
    }
    println!("overlap graph matches: {}", derive_graph(&f, DeriveMode::Overlap).same_labelled_graph(&g));
    Ok(())
}

//! Writes Graphviz views of a generated instance: the host, the overlap
//! graph and one member highlighted with notes on two vertices.
//!
//! ```text
//! cargo run --example dot_export > out.dot
//! ```

use std::collections::BTreeMap;

use treerep::derive::{derive_graph, DeriveMode};
use treerep::workbench::gen::gen_covered_instance;
use treerep::workbench::{to_dot, to_dot_annotated, DotView, Instance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (f, r) = gen_covered_instance(8, 3, 2, 1)?;
    let mut inst = Instance::from_family(f.clone());
    inst.graph = Some(derive_graph(&f, DeriveMode::Overlap));
    inst.cover = Some(r.clone());

    print!("{}", to_dot(&inst, &DotView::Tree)?);
    print!("{}", to_dot(&inst, &DotView::Graph)?);
    let mut notes = BTreeMap::new();
    let mut cover = r.iter();
    if let Some(u) = cover.next() {
        notes.insert(u.clone(), "u".to_string());
    }
    if let Some(v) = cover.next() {
        notes.insert(v.clone(), "v".to_string());
    }
    print!("{}", to_dot_annotated(&inst, &DotView::RepHighlight("t1".into()), &notes)?);
    Ok(())
}

//! Instances as JSON: write one out, read it back, and see how a malformed
//! document is reported.
//!
//! ```text
//! cargo run --example json_instances
//! ```

use treerep::derive::{derive_graph, DeriveMode};
use treerep::workbench::{gen_family, gen_tree, FamilyMode, Instance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = gen_tree(5, 2)?;
    let f = gen_family(&t, 2, 2, &FamilyMode::SharedVertex)?;
    let mut inst = Instance::from_family(f.clone());
    inst.graph = Some(derive_graph(&f, DeriveMode::Overlap));
    inst.meta.insert("note".into(), "shared vertex".into());

    let text = inst.to_json();
    print!("{text}");
    println!("round trip equal: {}", Instance::parse(&text)? == inst);

    let bad = r#"{"tree": {"vertices": ["a", "b"], "edges": [["a", "b", "c"]]}}"#;
    match Instance::parse(bad) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

//! With a path as the covering subtree, the rebuilt host is a caterpillar.
//!
//! ```text
//! cargo run --example caterpillar -- [count]
//! ```

use treerep::mixed::{mixed_to_bushy, overlap_to_mixed};
use treerep::tree::{classify_tree, TreeShape};
use treerep::workbench::{gen_family, gen_path, gen_tree, FamilyMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(20);
    let mut caterpillars = 0;
    for seed in 0..count {
        let t = gen_tree(12, seed)?;
        let path = gen_path(&t, seed + 1);
        let f = gen_family(&t, 5, seed + 2, &FamilyMode::CoveredBy(path.clone()))?;
        let (p, cert) = overlap_to_mixed(&f, &path)?;
        let rep = mixed_to_bushy(&p, &cert)?;
        let shapes = classify_tree(rep.family.host());
        if shapes.contains(&TreeShape::Caterpillar) {
            caterpillars += 1;
        }
        let names: Vec<&str> = shapes.iter().map(|s| s.name()).collect();
        println!("seed {seed:>3}: path of {} vertices, host {} vertices, {names:?}", path.len(), rep.family.host().len());
    }
    println!("{caterpillars}/{count} caterpillars");
    Ok(())
}

//! Closure posets with covering relations, dimension and specialness
//! annotations, and the labeled very even orbit pair of so_4, exported as
//! Graphviz DOT.
//!
//! Run with: cargo run --example closure_poset_dot

use orbitcalc::{ClosurePoset, GroupType, Result};

fn main() -> Result<()> {
    let so4: GroupType = "D2".parse()?;
    let poset = ClosurePoset::build(so4)?;
    println!(
        "// {} nodes, {} covering edges; [2,2] appears as a labeled pair",
        poset.nodes.len(),
        poset.edges.len()
    );
    print!("{}", poset.to_dot(true)?);

    // JSON export carries the same data for downstream tooling.
    let sp4: GroupType = "C2".parse()?;
    let poset = ClosurePoset::build(sp4)?;
    println!("\n// {} as JSON:", sp4.algebra_name());
    println!("{}", serde_json::to_string_pretty(&poset).expect("serializable"));
    Ok(())
}

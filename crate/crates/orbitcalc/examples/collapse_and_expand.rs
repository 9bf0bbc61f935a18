//! Collapse and expansion of partitions against the classical group types,
//! cross-checked with the brute-force oracles.
//!
//! Run with: cargo run --example collapse_and_expand

use orbitcalc::{
    collapse, collapse_oracle, enumerate_type_partitions, expansion, expansion_oracle, is_special,
    GroupType, Partition, Result,
};

fn main() -> Result<()> {
    let sp12: GroupType = "C6".parse()?;
    let p: Partition = "[3,3,3,2,1]".parse()?;

    // The collapse is the largest symplectic partition below p.
    let c = collapse(&p, sp12)?;
    println!("collapse of {p} in {sp12} ({}): {c}", sp12.algebra_name());
    assert_eq!(c, collapse_oracle(&p, sp12)?);

    // Expansion goes the other way: the smallest special partition above.
    let so5: GroupType = "B2".parse()?;
    let q: Partition = "[2,2,1]".parse()?;
    let e = expansion(&q, so5)?;
    println!("expansion of {q} in {so5} ({}): {e}", so5.algebra_name());
    assert_eq!(e, expansion_oracle(&q, so5)?);

    // Special partitions are exactly the fixed points of expansion.
    println!("\nspecial orthogonal partitions of 5:");
    for r in enumerate_type_partitions(5, so5)? {
        let tag = if is_special(&r, so5)? { "special" } else { "      " };
        println!("  {tag}  {r}");
    }

    // Collapse is idempotent and monotone; a quick demonstration.
    let top: Partition = "[5]".parse()?;
    assert_eq!(collapse(&top, so5)?, top);
    assert!(collapse(&q, so5)?.dominance_leq(&top)?);
    println!("\ncollapse of {top} is itself; everything collapses below it");
    Ok(())
}

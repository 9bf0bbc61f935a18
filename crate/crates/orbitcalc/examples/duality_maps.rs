//! The Barbasch-Vogan duality maps: both defining routes, the landing in
//! special partitions, and order reversal.
//!
//! Run with: cargo run --example duality_maps

use orbitcalc::{enumerate_type_partitions, eta, eta_both, is_special, GroupType, Result};

fn main() -> Result<()> {
    // Each case is keyed by the side the input lives on: B6 means an
    // orthogonal partition of 13, mapped into sp_12.
    for (partition, source) in [
        ("[3^3 2^2]", "B6"),
        ("[2^2 1^3]", "B3"),
        ("[2^3 1^2]", "C4"),
        ("[3^3 2^2 1]", "D7"),
    ] {
        let p = partition.parse()?;
        let src: GroupType = source.parse()?;
        let (image, alt) = eta_both(&p, src)?;
        println!(
            "eta {p} ({} side) = {image}   [routes agree: {}]",
            src.algebra_name(),
            image == alt
        );
        assert!(is_special(&image, src.dual())?);
    }

    // The map reverses the dominance order.
    let src: GroupType = "B3".parse()?;
    println!("\norder reversal on the orthogonal partitions of 7:");
    let all = enumerate_type_partitions(7, src)?;
    for p in &all {
        println!("  {p} -> {}", eta(p, src)?);
    }
    for a in &all {
        for b in &all {
            if a.dominance_leq(b)? {
                assert!(eta(b, src)?.dominance_leq(&eta(a, src)?)?);
            }
        }
    }
    println!("verified: p <= q implies eta(q) <= eta(p)");
    Ok(())
}

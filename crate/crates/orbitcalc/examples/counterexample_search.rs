//! Exhaustive search for parameters whose constructed member misses the
//! duality image. Mixed b-parities are necessary: every miss found here has
//! factors of both parities.
//!
//! Run with: cargo run --example counterexample_search

use orbitcalc::{search_counterexamples, Family, Result, SufficientClass};

fn main() -> Result<()> {
    for family in [Family::C, Family::B, Family::D] {
        let found = search_counterexamples(family, 6, None)?;
        println!("family {family}, ranks 0..=6: {} misses", found.len());
        for c in &found {
            let rel = if c.strictly_below { "<" } else { "?" };
            println!("  {}  constructed {} {rel} {}", c.psi, c.constructed, c.eta);
            assert_eq!(
                c.psi.sufficient_condition_class(),
                SufficientClass::None,
                "sufficient classes never miss"
            );
        }
        println!();
    }
    Ok(())
}

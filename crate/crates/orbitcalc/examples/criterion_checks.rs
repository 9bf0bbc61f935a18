//! The packet-member criterion on the six reference parameters: the
//! constructed partition either reaches the duality image or sits strictly
//! below it.
//!
//! Run with: cargo run --example criterion_checks

use orbitcalc::{ArthurParameter, Result};

fn main() -> Result<()> {
    for text in [
        "C6:{3^3,2^2}",
        "C3:{2^2,1^3}",
        "B6:{3^2,2^3}",
        "B4:{2^3,1^2}",
        "D7:{3^3,2^2,1}",
        "D5:{3,2^2,1^3}",
    ] {
        let psi: ArthurParameter = text.parse()?;
        let (p1, nstar) = psi.p1_and_nstar();
        let check = psi.check_expansion_form()?;
        let relation = if check.verdict {
            "=".to_string()
        } else if check.lhs.dominance_lt(&check.rhs)? {
            "<".to_string()
        } else {
            "incomparable to".to_string()
        };
        println!("{psi}");
        println!("  halved partition p1 = {p1}, n* = {nstar}");
        println!("  constructed {} {relation} image {}", check.lhs, check.rhs);
        println!("  sufficient-condition class: {}", check.class);

        // The collapse-form check always agrees on the verdict.
        let collapse_form = psi.check_criterion()?;
        assert_eq!(check.verdict, collapse_form.verdict);

        // And the constructed member never escapes above the image.
        let dom = psi.check_prop_inequality()?;
        assert!(dom.holds);
        println!();
    }
    Ok(())
}

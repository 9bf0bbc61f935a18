//! Orbit dimensions and the two exact dimension identities.
//!
//! Run with: cargo run --example orbit_dimensions

use orbitcalc::{
    dim_orbit, enumerate_type_partitions, verify_dimension_duality, verify_dimension_split,
    ArthurParameter, GroupType, Result,
};

fn main() -> Result<()> {
    let so5: GroupType = "B2".parse()?;
    println!("orbit dimensions in {}:", so5.algebra_name());
    for p in enumerate_type_partitions(5, so5)? {
        println!("  dim O_{p} = {}", dim_orbit(&p, so5)?);
    }

    // The endoscopic split identity: the codimension of the duality image
    // equals the summed codimensions over the odd/even factor split.
    let psi: ArthurParameter = "C6:{3^3,2^2}".parse()?;
    let split = psi.split_ij()?;
    println!(
        "\n{psi} splits into {} and {}",
        split.psi1, split.psi2
    );
    let id = verify_dimension_split(&psi)?;
    println!("codimension identity: {} = {} ({})", id.lhs, id.rhs, id.holds);
    assert!(id.holds);

    // The duality identity: measuring the duality image in the target gives
    // the same number as measuring the collapsed transpose at the source.
    let id = verify_dimension_duality(&psi.p_psi(), psi.dual_side())?;
    println!("duality identity:     {} = {} ({})", id.lhs, id.rhs, id.holds);
    assert!(id.holds);
    Ok(())
}

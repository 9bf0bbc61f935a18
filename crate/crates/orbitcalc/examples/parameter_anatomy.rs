//! Anatomy of a parameter: its partition, wavefront, endoscopic split,
//! dominance bound, and constructed member.
//!
//! Run with: cargo run --example parameter_anatomy

use orbitcalc::{ArthurParameter, Result};

fn main() -> Result<()> {
    let psi: ArthurParameter = "C6:{3^3,2^2}".parse()?;
    println!("parameter        {psi}");
    println!("group            {} ({})", psi.group(), psi.group().algebra_name());
    println!("p(psi)           {}", psi.p_psi());
    println!("tempered         {}", psi.is_tempered());
    println!("GL wavefront     {}", psi.gl_wavefront());
    println!("dominance bound  {}", psi.bitorsor_bound()?);

    let split = psi.split_ij()?;
    println!(
        "split            odd-b {} over {}, even-b {} over {}",
        split.psi1.p_psi(),
        split.psi1.group(),
        split.psi2.p_psi(),
        split.psi2.group()
    );

    let (p1, nstar) = psi.p1_and_nstar();
    println!("halved p1        {p1}   n* = {nstar}");
    println!("union            {}", psi.constructed_union());
    println!("constructed      {}", psi.constructed_member()?);

    // JSON encodings used by the CLI.
    println!("\nas JSON: {}", serde_json::to_string(&psi).expect("serializable"));
    Ok(())
}

//! Identity sweeps over every parameter up to a rank bound, with
//! deterministic reports.
//!
//! Run with: cargo run --example parameter_sweeps

use orbitcalc::{run_identity, Family, Identity, Result};

fn main() -> Result<()> {
    for identity in [
        Identity::Lemma41,
        Identity::Prop42,
        Identity::Thm56Equiv,
        Identity::Thm19Sufficient,
        Identity::Prop58,
    ] {
        let report = run_identity(identity, None, 7, 0, None)?;
        println!(
            "{:<24} {:>5} cases, {:>5} pass, {} failures, {} reported ({} ms)",
            report.identity,
            report.total,
            report.passes,
            report.failures.len(),
            report.reported.len(),
            report.duration_ms
        );
    }

    // Partition-level sweeps take a size bound instead of a rank bound.
    for identity in [
        Identity::CollapseOracle,
        Identity::ExpansionOracle,
        Identity::Achar,
        Identity::SpecialCharacterization,
    ] {
        let report = run_identity(identity, None, 0, 12, None)?;
        println!(
            "{:<24} {:>5} cases, {:>5} pass, {} failures, {} reported ({} ms)",
            report.identity,
            report.total,
            report.passes,
            report.failures.len(),
            report.reported.len(),
            report.duration_ms
        );
    }

    // A focused report-only run: the D-family dominance expectation.
    let report = run_identity(Identity::Prop58, Some(Family::D), 7, 0, None)?;
    println!(
        "\nD-family dominance expectation: {} cases, {} hold, {} reported findings",
        report.total,
        report.passes,
        report.reported.len()
    );
    Ok(())
}

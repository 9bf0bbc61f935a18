//! Batch CLI over the orbitcalc library: single computations, exhaustive
//! identity sweeps, counterexample search, and closure-poset export.
//!
//! Exit codes: 0 on success, 1 when a must-hold identity sweep reports a
//! failure, 2 on input errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use orbitcalc::{
    ArthurParameter, ClosurePoset, Error, Family, GroupType, Identity, Partition,
};

#[derive(Parser)]
#[command(
    name = "orbitcalc",
    about = "Exact partition calculus and verification for nilpotent orbits of classical Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a single computation and print its JSON result.
    Compute {
        #[command(subcommand)]
        kind: ComputeKind,
    },
    /// Sweep an identity exhaustively and print a JSON report.
    Verify {
        /// One of: lemma41, prop42, thm56-equiv, thm19-sufficient, prop58,
        /// collapse-oracle, expansion-oracle, achar, special-characterization.
        #[arg(long)]
        identity: String,
        /// Restrict to one family (B, C, or D); default sweeps all that apply.
        #[arg(long)]
        family: Option<String>,
        /// Rank bound for parameter sweeps.
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        /// Partition size bound for the partition-level sweeps.
        #[arg(long, default_value_t = 12)]
        max_size: u64,
        /// Worker threads; 1 forces canonical sequential order.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List parameters whose constructed member misses the duality image.
    Search {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Export the closure poset of a group as DOT or JSON.
    Hasse {
        /// Group type, e.g. C2.
        group: String,
        /// Output format: dot or json.
        #[arg(long, default_value = "dot")]
        format: String,
        /// Add dashed arrows from each orbit to its Spaltenstein dual.
        #[arg(long)]
        eta_arrows: bool,
    },
}

#[derive(Subcommand)]
enum ComputeKind {
    /// Transpose of a partition.
    Transpose { partition: String },
    /// Largest type partition of the group below the input.
    Collapse { group: String, partition: String },
    /// Smallest special type partition of the group above the input.
    Expand { group: String, partition: String },
    /// Whether the partition is special for the group.
    Special { group: String, partition: String },
    /// Duality image of a dual-side partition; reports both routes.
    Eta {
        /// Side the input lives on: soOdd, sp, or soEven.
        #[arg(long)]
        source: String,
        partition: String,
    },
    /// Orbit dimension in the group's Lie algebra.
    Dim { group: String, partition: String },
    /// Wavefront partition of the parameter's general linear representation.
    Wavefront { psi: String },
    /// Conjectured dominance bound for the parameter.
    Bound { psi: String },
    /// Constructed packet-member partition (expansion of the doubled-halves union).
    Construct { psi: String },
    /// Criterion check; orbit-level sides by default.
    Criterion {
        psi: String,
        /// Report the collapse-form sides instead.
        #[arg(long)]
        collapse_form: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn single_cap() -> u64 {
    std::env::var("ORBITCALC_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(30)
}

fn sweep_rank_cap() -> u64 {
    std::env::var("ORBITCALC_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(12)
}

fn check_single_size(size: u64) -> Result<(), Error> {
    let cap = single_cap();
    if size > cap {
        return Err(Error::Parse {
            token: size.to_string(),
            reason: format!("size exceeds the configured cap {cap} (ORBITCALC_MAX_N)"),
        });
    }
    Ok(())
}

fn check_sweep_rank(rank: u64) -> Result<(), Error> {
    let cap = sweep_rank_cap();
    if rank > cap {
        return Err(Error::Parse {
            token: rank.to_string(),
            reason: format!("rank exceeds the configured sweep cap {cap} (ORBITCALC_MAX_N)"),
        });
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let p: Partition = s.parse()?;
    check_single_size(p.size())?;
    Ok(p)
}

fn parse_group(s: &str) -> Result<GroupType, Error> {
    let g: GroupType = s.parse()?;
    check_single_size(g.partition_size())?;
    Ok(g)
}

fn parse_psi(s: &str) -> Result<ArthurParameter, Error> {
    let psi: ArthurParameter = s.parse()?;
    check_single_size(psi.p_psi().size())?;
    Ok(psi)
}

/// Maps an eta source token plus the input's size to the source group type.
fn eta_source(token: &str, size: u64) -> Result<GroupType, Error> {
    let family = match token {
        "soOdd" | "so-odd" | "B" => Family::B,
        "sp" | "C" => Family::C,
        "soEven" | "so-even" | "D" => Family::D,
        other => {
            return Err(Error::parse(
                other,
                "expected eta source soOdd, sp, or soEven",
            ))
        }
    };
    let rank = match family {
        Family::B => {
            if size % 2 == 0 {
                return Err(Error::parse(
                    token,
                    format!("soOdd input must have odd size, got {size}"),
                ));
            }
            (size - 1) / 2
        }
        Family::C | Family::D => {
            if size % 2 == 1 {
                return Err(Error::parse(
                    token,
                    format!("{token} input must have even size, got {size}"),
                ));
            }
            size / 2
        }
    };
    Ok(GroupType::new(family, rank as u32))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute { kind } => {
            let value = run_compute(kind)?;
            println!("{}", serde_json::to_string(&value).expect("valid json"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            family,
            max_n,
            max_size,
            jobs,
        } => {
            let identity: Identity = identity.parse()?;
            let family = family.map(|f| f.parse::<Family>()).transpose()?;
            if identity.uses_rank_bound() {
                check_sweep_rank(max_n as u64)?;
            } else {
                check_sweep_rank(max_size / 2)?;
            }
            let report = orbitcalc::run_identity(identity, family, max_n, max_size, jobs)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("valid json"));
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Search {
            family,
            max_n,
            jobs,
        } => {
            let family: Family = family.parse()?;
            check_sweep_rank(max_n as u64)?;
            let found = orbitcalc::search_counterexamples(family, max_n, jobs)?;
            println!("{}", serde_json::to_string_pretty(&found).expect("valid json"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hasse {
            group,
            format,
            eta_arrows,
        } => {
            let group = parse_group(&group)?;
            let poset = ClosurePoset::build(group)?;
            match format.as_str() {
                "dot" => print!("{}", poset.to_dot(eta_arrows)?),
                "json" => {
                    println!("{}", serde_json::to_string_pretty(&poset).expect("valid json"))
                }
                other => return Err(Error::parse(other, "expected format dot or json")),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_compute(kind: ComputeKind) -> Result<serde_json::Value, Error> {
    match kind {
        ComputeKind::Transpose { partition } => {
            let p = parse_partition(&partition)?;
            Ok(json!({ "result": p.transpose() }))
        }
        ComputeKind::Collapse { group, partition } => {
            let g = parse_group(&group)?;
            let p = parse_partition(&partition)?;
            Ok(json!({ "result": orbitcalc::collapse(&p, g)? }))
        }
        ComputeKind::Expand { group, partition } => {
            let g = parse_group(&group)?;
            let p = parse_partition(&partition)?;
            Ok(json!({ "result": orbitcalc::expansion(&p, g)? }))
        }
        ComputeKind::Special { group, partition } => {
            let g = parse_group(&group)?;
            let p = parse_partition(&partition)?;
            Ok(json!({ "special": orbitcalc::is_special(&p, g)? }))
        }
        ComputeKind::Eta { source, partition } => {
            let p = parse_partition(&partition)?;
            let src = eta_source(&source, p.size())?;
            let (route_a, route_b) = orbitcalc::eta_both(&p, src)?;
            let agree = route_a == route_b;
            Ok(json!({ "result": route_a, "routes_agree": agree }))
        }
        ComputeKind::Dim { group, partition } => {
            let g = parse_group(&group)?;
            let p = parse_partition(&partition)?;
            Ok(json!({ "dim": orbitcalc::dim_orbit(&p, g)? }))
        }
        ComputeKind::Wavefront { psi } => {
            let psi = parse_psi(&psi)?;
            Ok(json!({ "result": psi.gl_wavefront() }))
        }
        ComputeKind::Bound { psi } => {
            let psi = parse_psi(&psi)?;
            Ok(json!({ "result": psi.bitorsor_bound()? }))
        }
        ComputeKind::Construct { psi } => {
            let psi = parse_psi(&psi)?;
            Ok(json!({
                "result": psi.constructed_member()?,
                "union": psi.constructed_union(),
            }))
        }
        ComputeKind::Criterion { psi, collapse_form } => {
            let psi = parse_psi(&psi)?;
            let r = if collapse_form {
                psi.check_criterion()?
            } else {
                psi.check_expansion_form()?
            };
            Ok(json!({
                "verdict": r.verdict,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "class": r.class,
            }))
        }
    }
}

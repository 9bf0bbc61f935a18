//! Exhaustive identity sweeps over enumerated parameters and partitions,
//! aggregated into deterministic reports.
//!
//! Aggregation is order-independent: cases are enumerated in a canonical
//! order, checked independently (optionally in parallel), and failures are
//! collected back in enumeration order, so a report is byte-identical across
//! runs apart from its duration field.

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::arthur::{enumerate_parameters, ArthurParameter, SufficientClass};
use crate::classical::{
    collapse, collapse_oracle, enumerate_partitions, enumerate_type_partitions, expansion,
    expansion_oracle, is_special, spaltenstein_dual,
};
use crate::dimension::{verify_dimension_duality, verify_dimension_split};
use crate::duality::achar_identity_check;
use crate::error::{Error, Result};
use crate::group::{Family, GroupType};
use crate::partition::Partition;

/// The identity sweeps exposed by the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// Endoscopic dimension-split identity over all parameters.
    Lemma41,
    /// Duality dimension identity over all parameters.
    Prop42,
    /// Orbit-level and collapse-level criterion verdicts agree.
    Thm56Equiv,
    /// Parameters in a sufficient class satisfy their criterion.
    Thm19Sufficient,
    /// Constructed member is dominated by the duality image.
    Prop58,
    /// Recipe collapse equals the brute-force dominance maximum.
    CollapseOracle,
    /// Recipe expansion equals the brute-force special minimum.
    ExpansionOracle,
    /// Transpose collapse identity between the D and C families.
    Achar,
    /// Specialness agrees with its transpose-type characterizations.
    SpecialCharacterization,
}

impl Identity {
    pub fn token(&self) -> &'static str {
        match self {
            Identity::Lemma41 => "lemma41",
            Identity::Prop42 => "prop42",
            Identity::Thm56Equiv => "thm56-equiv",
            Identity::Thm19Sufficient => "thm19-sufficient",
            Identity::Prop58 => "prop58",
            Identity::CollapseOracle => "collapse-oracle",
            Identity::ExpansionOracle => "expansion-oracle",
            Identity::Achar => "achar",
            Identity::SpecialCharacterization => "special-characterization",
        }
    }

    /// Identities swept over parameters take a rank bound; the rest take a
    /// partition size bound.
    pub fn uses_rank_bound(&self) -> bool {
        matches!(
            self,
            Identity::Lemma41
                | Identity::Prop42
                | Identity::Thm56Equiv
                | Identity::Thm19Sufficient
                | Identity::Prop58
        )
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma41" => Ok(Identity::Lemma41),
            "prop42" => Ok(Identity::Prop42),
            "thm56-equiv" => Ok(Identity::Thm56Equiv),
            "thm19-sufficient" => Ok(Identity::Thm19Sufficient),
            "prop58" => Ok(Identity::Prop58),
            "collapse-oracle" => Ok(Identity::CollapseOracle),
            "expansion-oracle" => Ok(Identity::ExpansionOracle),
            "achar" => Ok(Identity::Achar),
            "special-characterization" => Ok(Identity::SpecialCharacterization),
            other => Err(Error::parse(other, "unknown identity")),
        }
    }
}

/// A failing or noteworthy case with both computed sides.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub case: String,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
    pub note: String,
}

/// Structured result of an exhaustive identity sweep.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub family: Option<Family>,
    pub max_n: Option<u32>,
    pub max_size: Option<u64>,
    pub total: u64,
    pub passes: u64,
    pub failures: Vec<Witness>,
    /// Computed findings that are reported without being asserted.
    pub reported: Vec<Witness>,
    pub duration_ms: u128,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of one case: passed, failed with a witness, or reported-only.
enum CaseOutcome {
    Pass,
    Fail(Witness),
    Reported(Witness),
}

fn run_cases<T, F>(cases: &[T], jobs: Option<usize>, check: F) -> Vec<CaseOutcome>
where
    T: Sync,
    F: Fn(&T) -> CaseOutcome + Sync + Send,
{
    match jobs {
        Some(1) => cases.iter().map(check).collect(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(|| cases.par_iter().map(&check).collect()),
        None => cases.par_iter().map(&check).collect(),
    }
}

fn error_witness(case: String, err: &Error) -> Witness {
    Witness {
        case,
        lhs: serde_json::Value::Null,
        rhs: serde_json::Value::Null,
        note: format!("error: {err}"),
    }
}

fn families_for(family: Option<Family>, identity: Identity) -> Vec<Family> {
    match family {
        Some(f) => vec![f],
        None => match identity {
            // The verdict equivalence is stated for B and C; for D the two
            // forms coincide by construction.
            Identity::Thm56Equiv => vec![Family::B, Family::C],
            _ => vec![Family::B, Family::C, Family::D],
        },
    }
}

fn parameters_up_to(family: Family, max_n: u32) -> Vec<ArthurParameter> {
    (0..=max_n)
        .flat_map(|n| enumerate_parameters(GroupType::new(family, n)))
        .collect()
}

/// Sizes compatible with the family's partition-size parity, up to the bound.
fn sizes_for(family: Family, max_size: u64) -> Vec<u64> {
    let start = match family {
        Family::B => 1,
        Family::C | Family::D => 0,
    };
    (start..=max_size).step_by(2).collect()
}

fn group_of_size(family: Family, size: u64) -> GroupType {
    let rank = match family {
        Family::B => (size - 1) / 2,
        Family::C | Family::D => size / 2,
    };
    GroupType::new(family, rank as u32)
}

/// Runs one identity sweep. `max_n` bounds the rank for parameter sweeps;
/// `max_size` bounds the partition size for the partition-level sweeps.
pub fn run_identity(
    identity: Identity,
    family: Option<Family>,
    max_n: u32,
    max_size: u64,
    jobs: Option<usize>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut outcomes: Vec<CaseOutcome> = Vec::new();

    for fam in families_for(family, identity) {
        let batch: Vec<CaseOutcome> = match identity {
            Identity::Lemma41 => {
                let cases = parameters_up_to(fam, max_n);
                run_cases(&cases, jobs, |psi| match verify_dimension_split(psi) {
                    Ok(id) if id.holds => CaseOutcome::Pass,
                    Ok(id) => CaseOutcome::Fail(Witness {
                        case: psi.to_string(),
                        lhs: json!(id.lhs),
                        rhs: json!(id.rhs),
                        note: "dimension split identity".into(),
                    }),
                    Err(e) => CaseOutcome::Fail(error_witness(psi.to_string(), &e)),
                })
            }
            Identity::Prop42 => {
                let cases = parameters_up_to(fam, max_n);
                run_cases(&cases, jobs, |psi| {
                    match verify_dimension_duality(&psi.p_psi(), psi.dual_side()) {
                        Ok(id) if id.holds => CaseOutcome::Pass,
                        Ok(id) => CaseOutcome::Fail(Witness {
                            case: psi.to_string(),
                            lhs: json!(id.lhs),
                            rhs: json!(id.rhs),
                            note: "dimension duality identity".into(),
                        }),
                        Err(e) => CaseOutcome::Fail(error_witness(psi.to_string(), &e)),
                    }
                })
            }
            Identity::Thm56Equiv => {
                let cases = parameters_up_to(fam, max_n);
                run_cases(&cases, jobs, |psi| {
                    let both = psi
                        .check_expansion_form()
                        .and_then(|e| psi.check_criterion().map(|c| (e, c)));
                    match both {
                        Ok((e, c)) if e.verdict == c.verdict => CaseOutcome::Pass,
                        Ok((e, c)) => CaseOutcome::Fail(Witness {
                            case: psi.to_string(),
                            lhs: json!({ "expansion_form": e.verdict }),
                            rhs: json!({ "collapse_form": c.verdict }),
                            note: "criterion verdicts disagree".into(),
                        }),
                        Err(err) => CaseOutcome::Fail(error_witness(psi.to_string(), &err)),
                    }
                })
            }
            Identity::Thm19Sufficient => {
                let cases: Vec<ArthurParameter> = parameters_up_to(fam, max_n)
                    .into_iter()
                    .filter(|psi| psi.sufficient_condition_class() != SufficientClass::None)
                    .collect();
                run_cases(&cases, jobs, |psi| match psi.check_criterion() {
                    Ok(r) if r.verdict => CaseOutcome::Pass,
                    Ok(r) => CaseOutcome::Fail(Witness {
                        case: psi.to_string(),
                        lhs: json!(r.lhs),
                        rhs: json!(r.rhs),
                        note: format!("classified {} but criterion fails", r.class),
                    }),
                    Err(e) => CaseOutcome::Fail(error_witness(psi.to_string(), &e)),
                })
            }
            Identity::Prop58 => {
                let cases = parameters_up_to(fam, max_n);
                run_cases(&cases, jobs, |psi| match psi.check_prop_inequality() {
                    Ok(d) if d.holds => CaseOutcome::Pass,
                    Ok(d) => {
                        let w = Witness {
                            case: psi.to_string(),
                            lhs: json!(d.constructed),
                            rhs: json!(d.bound),
                            note: "constructed member not dominated".into(),
                        };
                        if d.asserted {
                            CaseOutcome::Fail(w)
                        } else {
                            CaseOutcome::Reported(w)
                        }
                    }
                    Err(e) => CaseOutcome::Fail(error_witness(psi.to_string(), &e)),
                })
            }
            Identity::CollapseOracle => {
                let cases: Vec<(GroupType, Partition)> = sizes_for(fam, max_size)
                    .into_iter()
                    .flat_map(|size| {
                        let group = group_of_size(fam, size);
                        enumerate_partitions(size).into_iter().map(move |p| (group, p))
                    })
                    .collect();
                run_cases(&cases, jobs, |(group, p)| {
                    let pair = collapse(p, *group).and_then(|a| collapse_oracle(p, *group).map(|b| (a, b)));
                    match pair {
                        Ok((a, b)) if a == b => CaseOutcome::Pass,
                        Ok((a, b)) => CaseOutcome::Fail(Witness {
                            case: format!("collapse {p} to {group}"),
                            lhs: json!(a),
                            rhs: json!(b),
                            note: "recipe disagrees with dominance-maximum oracle".into(),
                        }),
                        Err(e) => CaseOutcome::Fail(error_witness(format!("collapse {p} to {group}"), &e)),
                    }
                })
            }
            Identity::ExpansionOracle => {
                let cases: Vec<(GroupType, Partition)> = sizes_for(fam, max_size)
                    .into_iter()
                    .flat_map(|size| {
                        let group = group_of_size(fam, size);
                        enumerate_partitions(size).into_iter().map(move |p| (group, p))
                    })
                    .collect();
                run_cases(&cases, jobs, |(group, p)| {
                    let lhs = expansion(p, *group);
                    let rhs = expansion_oracle(p, *group);
                    match (lhs, rhs) {
                        (Ok(a), Ok(b)) if a == b => CaseOutcome::Pass,
                        (Ok(a), Ok(b)) => CaseOutcome::Fail(Witness {
                            case: format!("expand {p} to {group}"),
                            lhs: json!(a),
                            rhs: json!(b),
                            note: "expansion disagrees with special-minimum oracle".into(),
                        }),
                        // Both routes must agree that no expansion exists.
                        (Err(_), Err(_)) => CaseOutcome::Pass,
                        (Ok(a), Err(e)) => CaseOutcome::Fail(Witness {
                            case: format!("expand {p} to {group}"),
                            lhs: json!(a),
                            rhs: serde_json::Value::Null,
                            note: format!("oracle errored: {e}"),
                        }),
                        (Err(e), Ok(b)) => CaseOutcome::Fail(Witness {
                            case: format!("expand {p} to {group}"),
                            lhs: serde_json::Value::Null,
                            rhs: json!(b),
                            note: format!("expansion errored: {e}"),
                        }),
                    }
                })
            }
            Identity::Achar => {
                if fam != Family::D {
                    continue;
                }
                let cases: Vec<Partition> = sizes_for(Family::D, max_size)
                    .into_iter()
                    .filter(|&s| s > 0)
                    .flat_map(|size| {
                        enumerate_partitions(size)
                            .into_iter()
                            .filter(|p| p.is_orthogonal())
                    })
                    .collect();
                run_cases(&cases, jobs, |p| match achar_identity_check(p) {
                    Ok(c) if c.holds => CaseOutcome::Pass,
                    Ok(c) => CaseOutcome::Fail(Witness {
                        case: p.to_string(),
                        lhs: json!(c.lhs),
                        rhs: json!(c.rhs),
                        note: "transpose collapse identity".into(),
                    }),
                    Err(e) => CaseOutcome::Fail(error_witness(p.to_string(), &e)),
                })
            }
            Identity::SpecialCharacterization => {
                let cases: Vec<(GroupType, Partition)> = sizes_for(fam, max_size)
                    .into_iter()
                    .flat_map(|size| {
                        let group = group_of_size(fam, size);
                        enumerate_type_partitions(size, group)
                            .expect("matching size")
                            .into_iter()
                            .map(move |p| (group, p))
                    })
                    .collect();
                run_cases(&cases, jobs, |(group, p)| {
                    check_special_characterization(*group, p)
                })
            }
        };
        outcomes.extend(batch);
    }

    let mut failures = Vec::new();
    let mut reported = Vec::new();
    let mut passes = 0u64;
    let total = outcomes.len() as u64;
    for outcome in outcomes {
        match outcome {
            CaseOutcome::Pass => passes += 1,
            CaseOutcome::Fail(w) => failures.push(w),
            CaseOutcome::Reported(w) => {
                passes += 1;
                reported.push(w);
            }
        }
    }
    Ok(VerificationReport {
        identity: identity.token().to_string(),
        family,
        max_n: identity.uses_rank_bound().then_some(max_n),
        max_size: (!identity.uses_rank_bound()).then_some(max_size),
        total,
        passes,
        failures,
        reported,
        duration_ms: start.elapsed().as_millis(),
    })
}

/// Specialness must match its transpose-type characterization: transpose
/// orthogonal for B, transpose symplectic for C and D. The weaker claim that
/// a D partition with orthogonal transpose is exactly one that is also
/// symplectic fails in general; it is computed and reported, never asserted.
fn check_special_characterization(group: GroupType, p: &Partition) -> CaseOutcome {
    let special = match is_special(p, group) {
        Ok(s) => s,
        Err(e) => return CaseOutcome::Fail(error_witness(p.to_string(), &e)),
    };
    let by_transpose = match group.family {
        Family::B => p.transpose().is_orthogonal(),
        Family::C | Family::D => p.transpose().is_symplectic(),
    };
    if special != by_transpose {
        return CaseOutcome::Fail(Witness {
            case: format!("{p} in {group}"),
            lhs: json!({ "double_dual_fixed": special }),
            rhs: json!({ "transpose_characterization": by_transpose }),
            note: "specialness characterization mismatch".into(),
        });
    }
    if group.family == Family::D {
        let literal = p.transpose().is_orthogonal() == p.is_symplectic();
        if !literal {
            return CaseOutcome::Reported(Witness {
                case: format!("{p} in {group}"),
                lhs: json!({ "transpose_orthogonal": p.transpose().is_orthogonal() }),
                rhs: json!({ "also_symplectic": p.is_symplectic() }),
                note: "transpose-orthogonality differs from bi-type membership".into(),
            });
        }
    }
    CaseOutcome::Pass
}

/// One counterexample to the orbit-level criterion equation.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub psi: ArthurParameter,
    pub constructed: Partition,
    pub eta: Partition,
    pub strictly_below: bool,
}

/// Lists every parameter of the family, up to the rank bound, whose
/// constructed member differs from the duality image.
pub fn search_counterexamples(
    family: Family,
    max_n: u32,
    jobs: Option<usize>,
) -> Result<Vec<Counterexample>> {
    let cases = parameters_up_to(family, max_n);
    let results: Vec<Option<Counterexample>> = match jobs {
        Some(1) => cases.iter().map(counterexample_of).collect(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(|| cases.par_iter().map(counterexample_of).collect()),
        None => cases.par_iter().map(counterexample_of).collect(),
    };
    Ok(results.into_iter().flatten().collect())
}

fn counterexample_of(psi: &ArthurParameter) -> Option<Counterexample> {
    let check = psi.check_expansion_form().ok()?;
    if check.verdict {
        return None;
    }
    let strictly_below = check.lhs.dominance_lt(&check.rhs).unwrap_or(false);
    Some(Counterexample {
        psi: psi.clone(),
        constructed: check.lhs,
        eta: check.rhs,
        strictly_below,
    })
}

/// Sanity helper used by the verifier: the double Spaltenstein dual of any
/// type partition is special, so duals enumerate the special set.
pub fn special_image_matches(group: GroupType) -> Result<bool> {
    let n = group.partition_size();
    let all = enumerate_type_partitions(n, group)?;
    let mut image: Vec<Partition> = Vec::new();
    for p in &all {
        let d = spaltenstein_dual(p, group)?;
        if !image.contains(&d) {
            image.push(d);
        }
    }
    for p in &all {
        let fixed = is_special(p, group)?;
        if fixed != image.contains(p) {
            return Ok(false);
        }
    }
    Ok(true)
}

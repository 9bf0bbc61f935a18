//! Partition shadows of local Arthur parameters: validation, the odd/even
//! endoscopic split, wavefront and bound partitions, the doubled-halves
//! construction, and the criterion checks comparing it against the duality
//! image.
//!
//! A parameter for group G carries the multiset of factors `(a_i, b_i)`,
//! canonically merged by `b` and sorted decreasingly; its partition
//! `p(psi) = [b_1^{a_1} ... b_r^{a_r}]` lives on the dual-group side, so it
//! is orthogonal of 2n+1 for C(n), symplectic of 2n for B(n), and orthogonal
//! of 2n for D(n).

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::classical::{collapse, expansion, is_type};
use crate::duality::eta;
use crate::error::{Error, Result};
use crate::group::{Family, GroupType};
use crate::partition::Partition;

/// The partition-level data of a local Arthur parameter for `group`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArthurParameter {
    group: GroupType,
    /// Factors `(a_i, b_i)` with distinct `b_i`, sorted by decreasing `b`.
    factors: Vec<(u64, u64)>,
}

impl ArthurParameter {
    /// Validates and canonicalizes factor data: entries must be positive,
    /// factors with equal `b` are merged, the total `sum a_i b_i` must match
    /// the group's parameter size, and the resulting partition must have the
    /// dual-group parity type.
    pub fn new(group: GroupType, factors: &[(u64, u64)]) -> Result<Self> {
        let mut merged: Vec<(u64, u64)> = Vec::new();
        for &(a, b) in factors {
            if a == 0 || b == 0 {
                return Err(Error::InvalidPartition(format!(
                    "factor ({a}, {b}) must have positive entries"
                )));
            }
            match merged.iter_mut().find(|(_, bb)| *bb == b) {
                Some((aa, _)) => *aa += a,
                None => merged.push((a, b)),
            }
        }
        merged.sort_by_key(|&(_, b)| std::cmp::Reverse(b));
        let param = ArthurParameter {
            group,
            factors: merged,
        };
        let expected = parameter_size(group);
        let p = param.p_psi();
        if p.size() != expected {
            return Err(Error::SizeMismatch {
                context: "parameter partition",
                expected,
                found: p.size(),
            });
        }
        if !is_type(&p, param.dual_side()) {
            return Err(Error::TypeMismatch {
                partition: p.to_string(),
                group: format!("{} (dual side of {group})", param.dual_side()),
            });
        }
        Ok(param)
    }

    /// Builds the parameter whose partition is `p`, reading multiplicities
    /// as the `a_i`.
    pub fn from_partition(group: GroupType, p: &Partition) -> Result<Self> {
        let factors: Vec<(u64, u64)> = p.exponents().iter().map(|&(v, m)| (m, v)).collect();
        ArthurParameter::new(group, &factors)
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    /// Factors `(a_i, b_i)` in decreasing `b` order.
    pub fn factors(&self) -> &[(u64, u64)] {
        &self.factors
    }

    /// The group type whose orbit partitions the parameter partition ranges
    /// over: the dual of `group`.
    pub fn dual_side(&self) -> GroupType {
        self.group.dual()
    }

    /// `p(psi) = [b_1^{a_1} ... b_r^{a_r}]`.
    pub fn p_psi(&self) -> Partition {
        let pairs: Vec<(u64, u64)> = self.factors.iter().map(|&(a, b)| (b, a)).collect();
        Partition::from_exponents(&pairs).unwrap_or_else(|_| Partition::empty())
    }

    /// The wavefront partition of the associated general linear
    /// representation: the transpose of `p(psi)`.
    pub fn gl_wavefront(&self) -> Partition {
        self.p_psi().transpose()
    }

    /// Tempered means every `b_i = 1`.
    pub fn is_tempered(&self) -> bool {
        self.factors.iter().all(|&(_, b)| b == 1)
    }

    /// Splits the factors by the parity of `b` into the two endoscopic
    /// sub-parameters.
    pub fn split_ij(&self) -> Result<EndoscopicSplit> {
        let odd: Vec<(u64, u64)> = self
            .factors
            .iter()
            .copied()
            .filter(|&(_, b)| b % 2 == 1)
            .collect();
        let even: Vec<(u64, u64)> = self
            .factors
            .iter()
            .copied()
            .filter(|&(_, b)| b % 2 == 0)
            .collect();
        let odd_sum: u64 = odd.iter().map(|&(a, b)| a * b).sum();
        let even_sum: u64 = even.iter().map(|&(a, b)| a * b).sum();
        if even_sum % 2 != 0 {
            return Err(Error::Internal(format!(
                "even-b factors of {self} sum to odd {even_sum}"
            )));
        }
        let n2 = (even_sum / 2) as u32;
        let (g1, g2) = match self.group.family {
            Family::C => {
                // I-side sums to 2n_1 + 1, which forces it to be nonempty.
                if odd_sum % 2 != 1 {
                    return Err(Error::Internal(format!(
                        "odd-b factors of {self} sum to even {odd_sum}"
                    )));
                }
                let n1 = ((odd_sum - 1) / 2) as u32;
                (
                    GroupType::new(Family::C, n1),
                    GroupType::new(Family::D, n2),
                )
            }
            Family::B => {
                if odd_sum % 2 != 0 {
                    return Err(Error::Internal(format!(
                        "odd-b factors of {self} sum to odd {odd_sum}"
                    )));
                }
                let n1 = (odd_sum / 2) as u32;
                (
                    GroupType::new(Family::B, n1),
                    GroupType::new(Family::B, n2),
                )
            }
            Family::D => {
                if odd_sum % 2 != 0 {
                    return Err(Error::Internal(format!(
                        "odd-b factors of {self} sum to odd {odd_sum}"
                    )));
                }
                let n1 = (odd_sum / 2) as u32;
                (
                    GroupType::new(Family::D, n1),
                    GroupType::new(Family::D, n2),
                )
            }
        };
        debug_assert_eq!(g1.rank + g2.rank, self.group.rank);
        Ok(EndoscopicSplit {
            psi1: ArthurParameter::new(g1, &odd)?,
            psi2: ArthurParameter::new(g2, &even)?,
        })
    }

    /// The conjectured dominance bound on bitorsor wavefront partitions:
    /// `(p(psi)^t)` collapsed on the dual side for B and D, and
    /// `((p(psi)^t)^-)` collapsed in the group itself for C.
    pub fn bitorsor_bound(&self) -> Result<Partition> {
        let t = self.p_psi().transpose();
        match self.group.family {
            Family::B | Family::D => collapse(&t, self.dual_side()),
            Family::C => collapse(&t.dec_min()?, self.group),
        }
    }

    /// The halved-parameter partition `p_1 = [floor(b_1/2)^{a_1} ...]^t`
    /// (zero halves dropped) and `n* = floor(sum_{b_i odd} a_i / 2)`.
    pub fn p1_and_nstar(&self) -> (Partition, u64) {
        let halves: Vec<(u64, u64)> = self
            .factors
            .iter()
            .filter(|&&(_, b)| b / 2 > 0)
            .map(|&(a, b)| (b / 2, a))
            .collect();
        let p1 = Partition::from_exponents(&halves)
            .unwrap_or_else(|_| Partition::empty())
            .transpose();
        let odd_count: u64 = self
            .factors
            .iter()
            .filter(|&&(_, b)| b % 2 == 1)
            .map(|&(a, _)| a)
            .sum();
        (p1, odd_count / 2)
    }

    /// The pre-expansion union `[p_1 p_1 e]` with the family-specific extra
    /// parts `e`: `2n*` for C, `2n*+1` for B, `(2n*-1) 1` for D. Non-positive
    /// extras are omitted; for D with `n* = 0` both extras are omitted.
    pub fn constructed_union(&self) -> Partition {
        let (p1, nstar) = self.p1_and_nstar();
        let mut u = p1.union(&p1);
        let extras: Vec<u64> = match self.group.family {
            Family::C => vec![2 * nstar],
            Family::B => vec![2 * nstar + 1],
            Family::D => {
                if nstar == 0 {
                    vec![]
                } else {
                    vec![2 * nstar - 1, 1]
                }
            }
        };
        for e in extras {
            if e > 0 {
                u = u.union(&Partition::new(vec![e]).expect("positive part"));
            }
        }
        u
    }

    /// The constructed packet-member partition: the group expansion of the
    /// union `[p_1 p_1 e]`.
    pub fn constructed_member(&self) -> Result<Partition> {
        expansion(&self.constructed_union(), self.group)
    }

    /// The collapse-form criterion equation for this family, comparing the
    /// collapsed transpose of the constructed union against the collapsed
    /// boundary adjustment of `p(psi)` (transpose collapse for D).
    pub fn check_criterion(&self) -> Result<CriterionResult> {
        let u = self.constructed_union();
        let p = self.p_psi();
        let (lhs, rhs) = match self.group.family {
            Family::C => (
                collapse(&u.transpose(), self.group)?,
                collapse(&p.dec_min()?, self.group)?,
            ),
            Family::B => (
                collapse(&u.transpose(), self.group)?,
                collapse(&p.inc_max(), self.group)?,
            ),
            Family::D => (
                expansion(&u, self.group)?,
                collapse(&p.transpose(), self.group)?,
            ),
        };
        Ok(CriterionResult {
            verdict: lhs == rhs,
            lhs,
            rhs,
            class: self.sufficient_condition_class(),
        })
    }

    /// The orbit-level form of the criterion: the expansion of the
    /// constructed union against the duality image of `p(psi)`.
    pub fn check_expansion_form(&self) -> Result<CriterionResult> {
        let lhs = self.constructed_member()?;
        let rhs = eta(&self.p_psi(), self.dual_side())?;
        Ok(CriterionResult {
            verdict: lhs == rhs,
            lhs,
            rhs,
            class: self.sufficient_condition_class(),
        })
    }

    /// Dominance of the constructed member below the duality image. Proven
    /// for families B and C; for D the verdict is computed but the caller
    /// must not assert it.
    pub fn check_prop_inequality(&self) -> Result<DominanceCheck> {
        let constructed = self.constructed_member()?;
        let bound = eta(&self.p_psi(), self.dual_side())?;
        let holds = constructed.dominance_leq(&bound)?;
        Ok(DominanceCheck {
            constructed,
            bound,
            holds,
            asserted: self.group.family != Family::D,
        })
    }

    /// Classifies the parameter against the known sufficient conditions for
    /// the criterion equation.
    pub fn sufficient_condition_class(&self) -> SufficientClass {
        let fs = &self.factors;
        let all_odd = fs.iter().all(|&(_, b)| b % 2 == 1);
        let all_even = fs.iter().all(|&(_, b)| b % 2 == 0);
        match self.group.family {
            Family::C => {
                // (i) smallest factor is exactly (1, 1) and the rest even.
                let ci = fs.last() == Some(&(1, 1))
                    && fs[..fs.len().saturating_sub(1)]
                        .iter()
                        .all(|&(_, b)| b % 2 == 0);
                if ci {
                    SufficientClass::CI
                } else if all_odd && !fs.is_empty() {
                    SufficientClass::CII
                } else {
                    SufficientClass::None
                }
            }
            Family::B => {
                let bi = matches!(fs.first(), Some(&(1, b)) if b % 2 == 0)
                    && fs[1..].iter().all(|&(_, b)| b % 2 == 1);
                if bi {
                    SufficientClass::BI
                } else if all_even || fs.is_empty() {
                    SufficientClass::BII
                } else {
                    SufficientClass::None
                }
            }
            Family::D => {
                if all_odd || all_even || fs.is_empty() {
                    SufficientClass::DSameParity
                } else {
                    SufficientClass::None
                }
            }
        }
    }
}

/// `sum a_i b_i` for a parameter of the group: 2n+1 for C(n), 2n for B(n)
/// and D(n). This is the dual group's partition size.
pub fn parameter_size(group: GroupType) -> u64 {
    group.dual().partition_size()
}

/// Every valid parameter for the group, one per dual-type partition of the
/// parameter size, in lexicographically decreasing partition order.
pub fn enumerate_parameters(group: GroupType) -> Vec<ArthurParameter> {
    let n = parameter_size(group);
    crate::classical::enumerate_type_partitions(n, group.dual())
        .expect("parameter size matches dual side")
        .into_iter()
        .map(|p| {
            ArthurParameter::from_partition(group, &p).expect("dual-type partition is valid")
        })
        .collect()
}

/// The two endoscopic sub-parameters: `psi1` collects the odd-b factors,
/// `psi2` the even-b factors, over the groups fixed by the family table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoscopicSplit {
    pub psi1: ArthurParameter,
    pub psi2: ArthurParameter,
}

/// Both sides of a criterion equation, its verdict, and the sufficient
/// condition class of the parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub verdict: bool,
    pub lhs: Partition,
    pub rhs: Partition,
    pub class: SufficientClass,
}

/// A dominance comparison `constructed <= bound`, flagged with whether the
/// result is a proven statement (`asserted`) or report-only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceCheck {
    pub constructed: Partition,
    pub bound: Partition,
    pub holds: bool,
    pub asserted: bool,
}

/// Sufficient-condition tags for the criterion equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SufficientClass {
    #[serde(rename = "C-i")]
    CI,
    #[serde(rename = "C-ii")]
    CII,
    #[serde(rename = "B-i")]
    BI,
    #[serde(rename = "B-ii")]
    BII,
    #[serde(rename = "D-same-parity")]
    DSameParity,
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for SufficientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SufficientClass::CI => "C-i",
            SufficientClass::CII => "C-ii",
            SufficientClass::BI => "B-i",
            SufficientClass::BII => "B-ii",
            SufficientClass::DSameParity => "D-same-parity",
            SufficientClass::None => "none",
        };
        write!(f, "{s}")
    }
}

impl fmt::Display for ArthurParameter {
    /// Renders as `C6:{3^3,2^2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{{", self.group)?;
        for (i, &(a, b)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if a == 1 {
                write!(f, "{b}")?;
            } else {
                write!(f, "{b}^{a}")?;
            }
        }
        write!(f, "}}")
    }
}

impl FromStr for ArthurParameter {
    type Err = Error;

    /// Parses `C6:{3^3,2^2}`: a group type, a colon, and the partition of
    /// `p(psi)` in exponent form.
    fn from_str(s: &str) -> Result<Self> {
        let (group_str, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "expected GROUP:{parts}"))?;
        let group: GroupType = group_str.parse()?;
        let rest = rest.trim();
        let inner = rest
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse(rest, "expected factors in braces"))?;
        let p: Partition = format!("[{inner}]").parse()?;
        ArthurParameter::from_partition(group, &p)
    }
}

impl Serialize for ArthurParameter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ArthurParameter", 2)?;
        st.serialize_field("group", &self.group)?;
        st.serialize_field("p_psi", &self.p_psi())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ArthurParameter {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            group: GroupType,
            p_psi: Partition,
        }
        let raw = Raw::deserialize(deserializer)?;
        ArthurParameter::from_partition(raw.group, &raw.p_psi).map_err(serde::de::Error::custom)
    }
}

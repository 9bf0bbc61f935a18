//! Type predicates, collapse and expansion, Spaltenstein duality, and
//! exhaustive enumeration of type-restricted partitions.
//!
//! The collapse is computed by the standard box-transfer recipe: while some
//! constrained-parity part has odd multiplicity, take the largest such value,
//! decrease its last occurrence by one, and add one to the first later part
//! that can absorb the box (appending a part 1 when none can). A brute-force
//! dominance-maximum oracle is kept alongside as the authority in tests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Family, GroupType};
use crate::partition::Partition;

/// Parity class of the parts constrained to even multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ParityClass {
    /// Even parts must have even multiplicity (so_m orbits).
    Orthogonal,
    /// Odd parts must have even multiplicity (sp_2n orbits).
    Symplectic,
}

impl ParityClass {
    pub(crate) fn of(family: Family) -> ParityClass {
        match family {
            Family::B | Family::D => ParityClass::Orthogonal,
            Family::C => ParityClass::Symplectic,
        }
    }

    fn satisfied_by(self, p: &Partition) -> bool {
        match self {
            ParityClass::Orthogonal => p.is_orthogonal(),
            ParityClass::Symplectic => p.is_symplectic(),
        }
    }

    /// Whether parts of this value are constrained to even multiplicity.
    fn constrains(self, value: u64) -> bool {
        match self {
            ParityClass::Orthogonal => value % 2 == 0,
            ParityClass::Symplectic => value % 2 == 1,
        }
    }
}

/// True when every even part of `p` has even multiplicity.
pub fn is_orthogonal(p: &Partition) -> bool {
    p.is_orthogonal()
}

/// True when every odd part of `p` has even multiplicity.
pub fn is_symplectic(p: &Partition) -> bool {
    p.is_symplectic()
}

/// True when `p` has the size and parity type of a nilpotent-orbit partition
/// of `group`.
pub fn is_type(p: &Partition, group: GroupType) -> bool {
    p.size() == group.partition_size() && ParityClass::of(group.family).satisfied_by(p)
}

fn require_size(p: &Partition, group: GroupType, context: &'static str) -> Result<()> {
    if p.size() != group.partition_size() {
        return Err(Error::SizeMismatch {
            context,
            expected: group.partition_size(),
            found: p.size(),
        });
    }
    Ok(())
}

fn require_type(p: &Partition, group: GroupType) -> Result<()> {
    if !is_type(p, group) {
        return Err(Error::TypeMismatch {
            partition: p.to_string(),
            group: group.to_string(),
        });
    }
    Ok(())
}

/// Box-transfer collapse within a parity class. The input size is preserved
/// and the result is the dominance-largest partition of the class below the
/// input.
pub(crate) fn collapse_by_parity(p: &Partition, class: ParityClass) -> Partition {
    let mut parts = p.parts().to_vec();
    loop {
        // Largest constrained value with odd multiplicity, with the index of
        // its last occurrence.
        let mut bad: Option<(u64, usize)> = None;
        let mut i = 0;
        while i < parts.len() {
            let v = parts[i];
            let mut j = i;
            while j + 1 < parts.len() && parts[j + 1] == v {
                j += 1;
            }
            if class.constrains(v) && (j - i + 1) % 2 == 1 {
                bad = Some((v, j));
                break;
            }
            i = j + 1;
        }
        let Some((q, last)) = bad else {
            return Partition::new(parts).expect("collapse keeps parts sorted and positive");
        };
        debug_assert!(q >= 2, "a lone constrained part 1 cannot be largest-bad");
        parts[last] = q - 1;
        match (last + 1..parts.len()).find(|&j| parts[j] < q - 1) {
            Some(j) => parts[j] += 1,
            None => parts.push(1),
        }
    }
}

/// The `group`-collapse of `p`: the largest partition of the group's type
/// dominated by `p`. Requires `p` to have the group's partition size.
pub fn collapse(p: &Partition, group: GroupType) -> Result<Partition> {
    require_size(p, group, "collapse")?;
    Ok(collapse_by_parity(p, ParityClass::of(group.family)))
}

/// Spaltenstein dual `d(p) = (p^t)` collapsed to the group's type. Defined
/// for partitions of the group's type; order-reversing on that poset.
pub fn spaltenstein_dual(p: &Partition, group: GroupType) -> Result<Partition> {
    require_type(p, group)?;
    Ok(collapse_by_parity(
        &p.transpose(),
        ParityClass::of(group.family),
    ))
}

/// A partition of the group's type is special when the double Spaltenstein
/// dual fixes it.
pub fn is_special(p: &Partition, group: GroupType) -> Result<bool> {
    let d = spaltenstein_dual(p, group)?;
    let dd = spaltenstein_dual(&d, group)?;
    Ok(&dd == p)
}

/// The `group`-expansion of `p`: the smallest special partition of the
/// group's type dominating `p`.
///
/// For an input already of the group's type this is the double Spaltenstein
/// dual. Otherwise every minimal type-correct dominator is located first and
/// the double dual is minimized over them; a special partition above `p`
/// must dominate one of the minimal dominators, so this reaches the same
/// minimum. If nothing of the group's type dominates `p` the expansion is
/// undefined.
pub fn expansion(p: &Partition, group: GroupType) -> Result<Partition> {
    require_size(p, group, "expansion")?;
    let class = ParityClass::of(group.family);
    let double_dual = |base: &Partition| {
        let d = collapse_by_parity(&base.transpose(), class);
        collapse_by_parity(&d.transpose(), class)
    };
    if class.satisfied_by(p) {
        return Ok(double_dual(p));
    }
    let candidates: Vec<Partition> = minimal_type_above(p, group)?
        .iter()
        .map(double_dual)
        .collect();
    unique_minimum(candidates, "expansion").ok_or_else(|| Error::NoDominatingPartition {
        kind: "special",
        size: p.size(),
        partition: p.to_string(),
    })?
}

/// Minimal elements of the set of type-correct partitions dominating `p`.
fn minimal_type_above(p: &Partition, group: GroupType) -> Result<Vec<Partition>> {
    let above: Vec<Partition> = enumerate_type_partitions(p.size(), group)?
        .into_iter()
        .filter(|q| p.dominance_leq_unchecked(q))
        .collect();
    Ok(above
        .iter()
        .filter(|q| {
            !above
                .iter()
                .any(|r| *q != r && r.dominance_leq_unchecked(q))
        })
        .cloned()
        .collect())
}

/// Every partition of `n`, in lexicographically decreasing order.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()).expect("generated parts are sorted"));
            return;
        }
        let hi = remaining.min(max_part);
        for next in (1..=hi).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Every partition of the group's type and size, in lexicographically
/// decreasing order. `n` must equal the group's partition size.
pub fn enumerate_type_partitions(n: u64, group: GroupType) -> Result<Vec<Partition>> {
    if n != group.partition_size() {
        return Err(Error::SizeMismatch {
            context: "type partition enumeration",
            expected: group.partition_size(),
            found: n,
        });
    }
    Ok(enumerate_partitions(n)
        .into_iter()
        .filter(|p| is_type(p, group))
        .collect())
}

fn unique_maximum(candidates: Vec<Partition>, context: &'static str) -> Option<Result<Partition>> {
    let maximal: Vec<&Partition> = candidates
        .iter()
        .filter(|q| {
            !candidates
                .iter()
                .any(|r| *q != r && q.dominance_leq_unchecked(r))
        })
        .collect();
    match maximal.as_slice() {
        [] => None,
        [one] => Some(Ok((*one).clone())),
        [a, b, ..] => Some(Err(Error::AmbiguousExtremum {
            context,
            first: a.to_string(),
            second: b.to_string(),
        })),
    }
}

fn unique_minimum(candidates: Vec<Partition>, context: &'static str) -> Option<Result<Partition>> {
    let minimal: Vec<&Partition> = candidates
        .iter()
        .filter(|q| {
            !candidates
                .iter()
                .any(|r| *q != r && r.dominance_leq_unchecked(q))
        })
        .collect();
    match minimal.as_slice() {
        [] => None,
        [one] => Some(Ok((*one).clone())),
        [a, b, ..] => Some(Err(Error::AmbiguousExtremum {
            context,
            first: a.to_string(),
            second: b.to_string(),
        })),
    }
}

/// Brute-force collapse: dominance maximum over all enumerated type
/// partitions below `p`. Errors if the maximum is not unique, which would
/// falsify the lattice property the recipe relies on.
pub fn collapse_oracle(p: &Partition, group: GroupType) -> Result<Partition> {
    require_size(p, group, "collapse oracle")?;
    let candidates: Vec<Partition> = enumerate_type_partitions(p.size(), group)?
        .into_iter()
        .filter(|q| q.dominance_leq_unchecked(p))
        .collect();
    unique_maximum(candidates, "collapse oracle")
        .ok_or_else(|| Error::Internal(format!("no type partition below {p} for {group}")))?
}

/// Brute-force expansion: dominance minimum over all special type partitions
/// above `p`. Errors on an empty candidate set or a tie.
pub fn expansion_oracle(p: &Partition, group: GroupType) -> Result<Partition> {
    require_size(p, group, "expansion oracle")?;
    let mut candidates = Vec::new();
    for q in enumerate_type_partitions(p.size(), group)? {
        if p.dominance_leq_unchecked(&q) && is_special(&q, group)? {
            candidates.push(q);
        }
    }
    unique_minimum(candidates, "expansion oracle").ok_or_else(|| Error::NoDominatingPartition {
        kind: "special",
        size: p.size(),
        partition: p.to_string(),
    })?
}

/// Label distinguishing the two very even orbits of so_{2n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VeryEvenLabel {
    I,
    II,
}

/// True for the D-family partitions that split into a labeled orbit pair:
/// all parts even (and at least one part).
pub fn is_very_even(p: &Partition, group: GroupType) -> bool {
    group.family == Family::D && !p.is_empty() && p.parts().iter().all(|&v| v % 2 == 0)
}

/// A nilpotent-orbit partition together with its group and, for very even
/// D-family partitions, the orbit label. Labels never affect dimensions or
/// collapse results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPartition {
    pub partition: Partition,
    pub group: GroupType,
    pub very_even_label: Option<VeryEvenLabel>,
}

impl OrbitPartition {
    pub fn new(
        partition: Partition,
        group: GroupType,
        very_even_label: Option<VeryEvenLabel>,
    ) -> Result<Self> {
        require_type(&partition, group)?;
        let very_even = is_very_even(&partition, group);
        if very_even != very_even_label.is_some() {
            return Err(Error::InvalidPartition(format!(
                "partition {partition} of {group} {} carry a very-even label",
                if very_even { "must" } else { "must not" }
            )));
        }
        Ok(OrbitPartition {
            partition,
            group,
            very_even_label,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(s: &str) -> GroupType {
        s.parse().unwrap()
    }

    #[test]
    fn type_predicate_examples() {
        assert!(is_type(&p(&[2, 2, 1]), g("B2")));
        assert!(is_type(&p(&[2, 1, 1]), g("C2")));
        assert!(!is_type(&p(&[3, 2]), g("D2"))); // size 5 is odd
        assert!(!is_type(&p(&[3, 2]), g("B2"))); // wrong parity type
        assert!(is_type(&Partition::empty(), g("D0")));
    }

    #[test]
    fn collapse_examples() {
        let c = collapse(&p(&[3, 3, 3, 2, 1]), g("C6")).unwrap();
        assert_eq!(c, p(&[3, 3, 2, 2, 2]));
        assert_eq!(c, collapse_oracle(&p(&[3, 3, 3, 2, 1]), g("C6")).unwrap());

        assert_eq!(
            collapse(&p(&[2, 2, 1, 1]), g("C3")).unwrap(),
            p(&[2, 2, 1, 1])
        );
        assert_eq!(
            collapse(&p(&[3, 2, 2, 1, 1]), g("B4")).unwrap(),
            p(&[3, 2, 2, 1, 1])
        );
        // Quasi-regular D collapse.
        assert_eq!(collapse(&p(&[8]), g("D4")).unwrap(), p(&[7, 1]));
        assert!(collapse(&p(&[3, 1]), g("C3")).is_err());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expansion(&p(&[3, 3, 3]), g("B4")).unwrap(), p(&[3, 3, 3]));
        assert_eq!(expansion(&p(&[2, 2, 1]), g("B2")).unwrap(), p(&[3, 1, 1]));
        assert_eq!(
            expansion(&p(&[2, 2, 1]), g("B2")).unwrap(),
            expansion_oracle(&p(&[2, 2, 1]), g("B2")).unwrap()
        );
        // Fixed point on special partitions.
        assert_eq!(expansion(&p(&[5]), g("B2")).unwrap(), p(&[5]));
        // No orthogonal partition of 4 dominates [4].
        assert!(matches!(
            expansion(&p(&[4]), g("D2")),
            Err(Error::NoDominatingPartition { .. })
        ));
        assert!(expansion(&p(&[3, 1]), g("B2")).is_err());
    }

    #[test]
    fn spaltenstein_examples() {
        assert_eq!(
            spaltenstein_dual(&p(&[2, 1, 1]), g("C2")).unwrap(),
            p(&[2, 2])
        );
        assert_eq!(spaltenstein_dual(&p(&[2, 2]), g("C2")).unwrap(), p(&[2, 2]));
        assert_eq!(
            spaltenstein_dual(&p(&[1, 1, 1, 1, 1]), g("B2")).unwrap(),
            p(&[5])
        );
        assert!(spaltenstein_dual(&p(&[3, 2]), g("B2")).is_err());
    }

    #[test]
    fn special_examples() {
        assert!(!is_special(&p(&[2, 1, 1]), g("C2")).unwrap());
        assert!(is_special(&p(&[5]), g("B2")).unwrap());
        assert!(!is_special(&p(&[2, 2, 1]), g("B2")).unwrap());
        assert!(is_special(&Partition::empty(), g("C0")).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let c2: Vec<String> = enumerate_type_partitions(4, g("C2"))
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(c2, vec!["[4]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);

        let b2: Vec<String> = enumerate_type_partitions(5, g("B2"))
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(b2, vec!["[5]", "[3,1,1]", "[2,2,1]", "[1,1,1,1,1]"]);

        let d0 = enumerate_type_partitions(0, g("D0")).unwrap();
        assert_eq!(d0, vec![Partition::empty()]);

        assert!(enumerate_type_partitions(5, g("C2")).is_err());
    }

    #[test]
    fn very_even_labels() {
        assert!(is_very_even(&p(&[2, 2]), g("D2")));
        assert!(!is_very_even(&p(&[2, 2]), g("C2")));
        assert!(!is_very_even(&p(&[3, 1]), g("D2")));
        assert!(!is_very_even(&Partition::empty(), g("D0")));

        assert!(OrbitPartition::new(p(&[2, 2]), g("D2"), Some(VeryEvenLabel::I)).is_ok());
        assert!(OrbitPartition::new(p(&[2, 2]), g("D2"), None).is_err());
        assert!(OrbitPartition::new(p(&[3, 1]), g("D2"), Some(VeryEvenLabel::I)).is_err());
    }
}

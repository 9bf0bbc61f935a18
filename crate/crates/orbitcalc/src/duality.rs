//! The three Barbasch-Vogan duality maps from dual-group partitions to group
//! partitions, each with its two defining formulas, plus the transpose
//! collapse identity relating the D and C families.
//!
//! The `source` argument names the side the input partition lives on: an
//! input of type B(n) (orthogonal of 2n+1) maps to sp_2n, an input of type
//! C(n) (symplectic of 2n) maps to so_{2n+1}, and an input of type D(n) maps
//! to so_2n.

use crate::classical::{collapse, is_type};
use crate::error::{Error, Result};
use crate::group::{Family, GroupType};
use crate::partition::Partition;

fn require_source(p: &Partition, source: GroupType) -> Result<()> {
    if !is_type(p, source) {
        let case = match source.family {
            Family::B => "duality case (i): input must be orthogonal of 2n+1",
            Family::C => "duality case (ii): input must be symplectic of 2n",
            Family::D => "duality case (iii): input must be orthogonal of 2n",
        };
        return Err(Error::Parse {
            token: p.to_string(),
            reason: format!("{case} (source {source}, size {})", source.partition_size()),
        });
    }
    Ok(())
}

/// The duality map via the collapse-then-transpose formula of each case:
/// B-source: `((p^-)_{Sp_2n})^t`; C-source: `((p^+)_{SO_{2n+1}})^t`;
/// D-source: `(p^t)_{SO_2n}`.
pub fn eta(p: &Partition, source: GroupType) -> Result<Partition> {
    require_source(p, source)?;
    let target = source.dual();
    match source.family {
        Family::B => Ok(collapse(&p.dec_min()?, target)?.transpose()),
        Family::C => Ok(collapse(&p.inc_max(), target)?.transpose()),
        Family::D => collapse(&p.transpose(), target),
    }
}

/// The duality map via the transpose-first formula of each case:
/// B-source: `((p^t)^-)_{Sp_2n}`; C-source: `((p^t)^+)_{SO_{2n+1}}`;
/// D-source identical to [`eta`]. Agreement with [`eta`] is a theorem and a
/// standing property test.
pub fn eta_alt(p: &Partition, source: GroupType) -> Result<Partition> {
    require_source(p, source)?;
    let target = source.dual();
    match source.family {
        Family::B => collapse(&p.transpose().dec_min()?, target),
        Family::C => collapse(&p.transpose().inc_max(), target),
        Family::D => collapse(&p.transpose(), target),
    }
}

/// Both duality routes at once, for callers that report route agreement.
pub fn eta_both(p: &Partition, source: GroupType) -> Result<(Partition, Partition)> {
    Ok((eta(p, source)?, eta_alt(p, source)?))
}

/// Outcome of the transpose-collapse identity
/// `(p^t)_{SO_2n} = ((p^{+-})_{Sp_2n})^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcharCheck {
    pub lhs: Partition,
    pub rhs: Partition,
    pub holds: bool,
}

/// Evaluates both routes of the identity for a partition of 2n that is
/// orthogonal or has symplectic transpose. Used as a sweep, not a
/// computation primitive.
pub fn achar_identity_check(p: &Partition) -> Result<AcharCheck> {
    let size = p.size();
    if size % 2 != 0 {
        return Err(Error::SizeMismatch {
            context: "transpose-collapse identity",
            expected: size + 1,
            found: size,
        });
    }
    if !p.is_orthogonal() && !p.transpose().is_symplectic() {
        return Err(Error::TypeMismatch {
            partition: p.to_string(),
            group: "orthogonal (or symplectic-transpose) of 2n".to_string(),
        });
    }
    let n = (size / 2) as u32;
    let lhs = collapse(&p.transpose(), GroupType::new(Family::D, n))?;
    let rhs = collapse(&p.plus_minus()?, GroupType::new(Family::C, n))?.transpose();
    let holds = lhs == rhs;
    Ok(AcharCheck { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GroupType {
        s.parse().unwrap()
    }

    #[test]
    fn eta_reference_values() {
        // Orthogonal of 13, target sp_12.
        assert_eq!(eta(&p("[3^3 2^2]"), g("B6")).unwrap(), p("[5,5,2]"));
        // Orthogonal of 7, target sp_6.
        assert_eq!(eta(&p("[2^2 1^3]"), g("B3")).unwrap(), p("[4,2]"));
        // Symplectic of 8, target so_9.
        assert_eq!(eta(&p("[2^3 1^2]"), g("C4")).unwrap(), p("[5,3,1]"));
        // Zero parameter maps to the regular partition.
        assert_eq!(eta(&p("[1^5]"), g("B2")).unwrap(), p("[4]"));
    }

    #[test]
    fn eta_alt_agrees_on_reference_values() {
        for (part, src) in [
            ("[3^3 2^2]", "B6"),
            ("[1^5]", "B2"),
            ("[2^3 1^2]", "C4"),
            ("[3^3 2^2 1]", "D7"),
        ] {
            let (a, b) = eta_both(&p(part), g(src)).unwrap();
            assert_eq!(a, b, "routes disagree on {part} over {src}");
        }
    }

    #[test]
    fn eta_d_case() {
        assert_eq!(eta(&p("[3^3 2^2 1]"), g("D7")).unwrap(), p("[5,5,3,1]"));
        assert_eq!(eta(&p("[3 2^2 1^3]"), g("D5")).unwrap(), p("[5,3,1,1]"));
    }

    #[test]
    fn eta_rejects_wrong_type() {
        // [3,2] is not orthogonal, so it is not a valid B-side input.
        assert!(eta(&p("[3,2]"), g("B2")).is_err());
        // Size mismatch against the declared source rank.
        assert!(eta(&p("[3^3 2^2]"), g("B5")).is_err());
    }

    #[test]
    fn achar_small_cases() {
        for s in ["[2,2]", "[3,3,1,1]", "[4,4,2,2]"] {
            let check = achar_identity_check(&p(s)).unwrap();
            assert!(check.holds, "identity fails on {s}: {check:?}");
        }
        assert!(achar_identity_check(&p("[3,1,1]")).is_err()); // odd size
    }
}

//! Orbit dimension formulas for the classical families and the two
//! dimension identities tying the duality image of a parameter to its
//! endoscopic split.
//!
//! All half-integer arithmetic is carried out on doubled integers; evenness
//! is asserted before halving, so a parity slip in the formulas surfaces as
//! an error instead of a silently wrong value.

use serde::Serialize;

use crate::arthur::ArthurParameter;
use crate::classical::{collapse, is_type};
use crate::duality::eta;
use crate::error::{Error, Result};
use crate::group::GroupType;
use crate::partition::Partition;

/// Dimension of the nilpotent orbit of `p` in the Lie algebra of `group`.
///
/// With `s_i = #{j : p_j >= i}`, `r_i = #{j : p_j = i}`, and k the rank:
/// sp_2k:     2k^2 + k - (1/2) sum s_i^2 - (1/2) sum_{i odd} r_i
/// so_{2k+1}: 2k^2 + k - (1/2) sum s_i^2 + (1/2) sum_{i odd} r_i
/// so_2k:     2k^2 - k - (1/2) sum s_i^2 + (1/2) sum_{i odd} r_i
pub fn dim_orbit(p: &Partition, group: GroupType) -> Result<u64> {
    if !is_type(p, group) {
        return Err(Error::TypeMismatch {
            partition: p.to_string(),
            group: group.to_string(),
        });
    }
    let stats = p.stats();
    let sum_s2: u64 = stats
        .s
        .iter()
        .map(|&s| s.checked_mul(s).expect("s_i^2 fits in u64"))
        .sum();
    let odd_r: u64 = stats
        .r
        .iter()
        .enumerate()
        .filter(|(i, _)| (i + 1) % 2 == 1)
        .map(|(_, &r)| r)
        .sum();
    let base = 2 * group.dim(); // 2 * (2k^2 +- k)
    let doubled = match group.family {
        crate::group::Family::C => base
            .checked_sub(sum_s2 + odd_r)
            .ok_or_else(|| Error::Internal(format!("negative dimension for {p} in {group}")))?,
        crate::group::Family::B | crate::group::Family::D => (base + odd_r)
            .checked_sub(sum_s2)
            .ok_or_else(|| Error::Internal(format!("negative dimension for {p} in {group}")))?,
    };
    if doubled % 2 != 0 {
        return Err(Error::Internal(format!(
            "doubled dimension of {p} in {group} is odd"
        )));
    }
    let dim = doubled / 2;
    if dim % 2 != 0 {
        return Err(Error::Internal(format!(
            "orbit dimension of {p} in {group} is odd"
        )));
    }
    Ok(dim)
}

/// Both sides of an exact integer identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionIdentity {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

/// The endoscopic dimension identity: the codimension of the duality image
/// in the group equals the sum over the odd/even split of the codimensions
/// of the collapsed transposes in the dual endoscopic algebras.
pub fn verify_dimension_split(psi: &ArthurParameter) -> Result<DimensionIdentity> {
    let group = psi.group();
    let image = eta(&psi.p_psi(), psi.dual_side())?;
    let lhs = group.dim() - dim_orbit(&image, group)?;

    let split = psi.split_ij()?;
    let mut rhs = 0u64;
    for part in [&split.psi1, &split.psi2] {
        let dual = part.group().dual();
        let collapsed = collapse(&part.p_psi().transpose(), dual)?;
        rhs += dual.dim() - dim_orbit(&collapsed, dual)?;
    }
    Ok(DimensionIdentity {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

/// The duality dimension identity: the duality image of `p` measured in the
/// target algebra has the same dimension as the collapsed transpose of `p`
/// measured on the source side.
pub fn verify_dimension_duality(p: &Partition, source: GroupType) -> Result<DimensionIdentity> {
    let target = source.dual();
    let lhs = dim_orbit(&eta(p, source)?, target)?;
    let rhs = dim_orbit(&collapse(&p.transpose(), source)?, source)?;
    Ok(DimensionIdentity {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GroupType {
        s.parse().unwrap()
    }

    fn psi(s: &str) -> ArthurParameter {
        s.parse().unwrap()
    }

    #[test]
    fn dim_examples() {
        assert_eq!(dim_orbit(&p("[1,1]"), g("C1")).unwrap(), 0);
        assert_eq!(dim_orbit(&p("[2]"), g("C1")).unwrap(), 2);
        // Minimal orbit of so_5.
        assert_eq!(dim_orbit(&p("[2,2,1]"), g("B2")).unwrap(), 4);
        assert_eq!(dim_orbit(&Partition::empty(), g("D0")).unwrap(), 0);
        assert!(dim_orbit(&p("[3,1]"), g("C2")).is_err());
    }

    #[test]
    fn regular_orbit_dimension() {
        for n in 1..=8u32 {
            for fam in [Family::B, Family::C] {
                let grp = GroupType::new(fam, n);
                let regular = collapse(
                    &Partition::new(vec![grp.partition_size()]).unwrap(),
                    grp,
                )
                .unwrap();
                assert_eq!(
                    dim_orbit(&regular, grp).unwrap(),
                    grp.dim() - n as u64,
                    "regular orbit of {grp}"
                );
            }
        }
    }

    #[test]
    fn split_identity_tempered_gives_rank() {
        for n in 1..=6u32 {
            let grp = GroupType::new(Family::C, n);
            let tempered = ArthurParameter::new(grp, &[(2 * n as u64 + 1, 1)]).unwrap();
            let id = verify_dimension_split(&tempered).unwrap();
            assert!(id.holds);
            assert_eq!(id.lhs, n as u64);
        }
    }

    #[test]
    fn split_identity_reference_cases() {
        for case in ["C6:{3^3,2^2}", "B4:{2^3,1^2}", "D7:{3^3,2^2,1}"] {
            let id = verify_dimension_split(&psi(case)).unwrap();
            assert!(id.holds, "split identity fails on {case}: {id:?}");
        }
    }

    #[test]
    fn duality_identity_reference_cases() {
        for (part, src) in [
            ("[1^5]", "B2"),
            ("[3^3 2^2]", "B6"),
            ("[2^3 1^2]", "C4"),
            ("[3 2^2 1^3]", "D5"),
        ] {
            let id = verify_dimension_duality(&p(part), g(src)).unwrap();
            assert!(id.holds, "duality identity fails on {part} over {src}: {id:?}");
        }
    }
}

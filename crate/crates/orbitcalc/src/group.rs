//! Classical group types at the partition level: family (B/C/D) and rank,
//! with the size and duality conventions used throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Classical family: B(n) = so_{2n+1}, C(n) = sp_{2n}, D(n) = so_{2n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
    D,
}

impl Family {
    /// Dual family under the Langlands dual group: B <-> C, D <-> D.
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
            Family::D => Family::D,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub const ALL: [Family; 3] = [Family::B, Family::C, Family::D];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::parse(other, "expected family B, C, or D")),
        }
    }
}

/// A classical group type: family plus rank. Rank 0 is legal and corresponds
/// to the trivial group with only the empty partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub family: Family,
    pub rank: u32,
}

impl GroupType {
    pub fn new(family: Family, rank: u32) -> Self {
        GroupType { family, rank }
    }

    /// Size of the nilpotent-orbit partitions of this Lie algebra:
    /// 2n+1 for B(n), 2n for C(n) and D(n).
    pub fn partition_size(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::B => 2 * n + 1,
            Family::C | Family::D => 2 * n,
        }
    }

    /// The dual group type (same rank, dual family).
    pub fn dual(&self) -> GroupType {
        GroupType::new(self.family.dual(), self.rank)
    }

    /// Dimension of the group: 2n^2 + n for B(n) and C(n), 2n^2 - n for D(n).
    pub fn dim(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::B | Family::C => 2 * n * n + n,
            Family::D => 2 * n * n - n,
        }
    }

    /// Lie-algebra name, e.g. `so_5`, `sp_12`.
    pub fn algebra_name(&self) -> String {
        let n = self.rank as u64;
        match self.family {
            Family::B => format!("so_{}", 2 * n + 1),
            Family::C => format!("sp_{}", 2 * n),
            Family::D => format!("so_{}", 2 * n),
        }
    }
}

/// Dimension of the group, as a free function mirroring `dim_orbit`.
pub fn dim_group(group: GroupType) -> u64 {
    group.dim()
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for GroupType {
    type Err = Error;

    /// Parses `B2`, `C5`, `D4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next() {
            Some(c) => c.to_string().parse::<Family>()?,
            None => return Err(Error::parse(s, "empty group type")),
        };
        let rank = chars
            .as_str()
            .parse::<u32>()
            .map_err(|_| Error::parse(s, "expected a rank after the family letter"))?;
        Ok(GroupType::new(family, rank))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_dims() {
        assert_eq!(GroupType::new(Family::B, 2).partition_size(), 5);
        assert_eq!(GroupType::new(Family::C, 2).partition_size(), 4);
        assert_eq!(GroupType::new(Family::D, 4).partition_size(), 8);
        assert_eq!(GroupType::new(Family::C, 3).dim(), 21);
        assert_eq!(GroupType::new(Family::B, 2).dim(), 10);
        assert_eq!(GroupType::new(Family::D, 4).dim(), 28);
        assert_eq!(GroupType::new(Family::D, 0).dim(), 0);
    }

    #[test]
    fn duality_table() {
        assert_eq!(Family::B.dual(), Family::C);
        assert_eq!(Family::C.dual(), Family::B);
        assert_eq!(Family::D.dual(), Family::D);
    }

    #[test]
    fn parse_and_display() {
        let g: GroupType = "C6".parse().unwrap();
        assert_eq!(g, GroupType::new(Family::C, 6));
        assert_eq!(g.to_string(), "C6");
        assert!("E8".parse::<GroupType>().is_err());
        assert!("C".parse::<GroupType>().is_err());
    }

    #[test]
    fn json_shape() {
        let g = GroupType::new(Family::C, 5);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"family":"C","rank":5}"#
        );
    }
}

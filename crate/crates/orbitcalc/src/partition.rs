//! Integer partitions in canonical form and the boundary operations used by
//! the collapse/expansion and duality machinery.
//!
//! A partition is stored as a weakly decreasing sequence of positive parts;
//! the empty sequence is the partition of 0. All operations re-canonicalize,
//! so values can be shared freely.

use std::fmt;
use std::str::FromStr;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of a nonnegative integer: `p_1 >= p_2 >= ... >= p_r >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and strictly positive. Unsorted or zero input is rejected, matching
    /// the convention that `[2,3]` is not a partition.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}; parts must be positive"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let mut sum: u64 = 0;
        for &p in &parts {
            sum = sum
                .checked_add(p)
                .ok_or_else(|| Error::Internal("partition size overflow".into()))?;
        }
        Ok(Partition { parts })
    }

    /// The empty partition (partition of 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts and drops zeros, then builds the partition. Used internally by
    /// operations that may disturb the ordering (e.g. decreasing the largest
    /// part).
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds `[b_1^{a_1} ... b_r^{a_r}]` from (value, multiplicity) pairs.
    pub fn from_exponents(pairs: &[(u64, u64)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(value, mult) in pairs {
            if value == 0 || mult == 0 {
                return Err(Error::InvalidPartition(format!(
                    "exponent pair ({value}, {mult}) must have positive value and multiplicity"
                )));
            }
            for _ in 0..mult {
                parts.push(value);
            }
        }
        Ok(Partition::from_unsorted(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (1-indexed), reading 0 past the end.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// Multiplicity of `value` among the parts.
    pub fn multiplicity(&self, value: u64) -> u64 {
        self.parts.iter().filter(|&&p| p == value).count() as u64
    }

    /// Run-length view: (value, multiplicity) pairs in decreasing value order.
    pub fn exponents(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Transpose (conjugate) partition: the i-th part of the result counts
    /// the parts of `self` that are `>= i`.
    pub fn transpose(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let mut cols = vec![0u64; first as usize];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Dominance order on partitions of equal size: `self <= other` iff every
    /// prefix sum of `self` is bounded by the corresponding prefix sum of
    /// `other`. Partitions of different sizes are incomparable and rejected.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return Err(Error::SizeMismatch {
                context: "dominance comparison",
                expected: a,
                found: b,
            });
        }
        Ok(self.dominance_leq_unchecked(other))
    }

    /// Prefix-sum comparison without the size guard. Callers must ensure
    /// equal sizes.
    pub(crate) fn dominance_leq_unchecked(&self, other: &Partition) -> bool {
        let k = self.parts.len().max(other.parts.len());
        let (mut sa, mut sb) = (0u64, 0u64);
        for i in 1..=k {
            sa += self.part(i);
            sb += other.part(i);
            if sa > sb {
                return false;
            }
        }
        true
    }

    /// Strict dominance: `self <= other` and `self != other`.
    pub fn dominance_lt(&self, other: &Partition) -> Result<bool> {
        Ok(self != other && self.dominance_leq(other)?)
    }

    /// `p^-`: decrease the smallest part by 1, deleting it if it reaches 0.
    pub fn dec_min(&self) -> Result<Partition> {
        let mut parts = self.parts.clone();
        match parts.pop() {
            None => Err(Error::EmptyPartition { op: "dec_min" }),
            Some(1) => Ok(Partition { parts }),
            Some(p) => {
                parts.push(p - 1);
                Ok(Partition { parts })
            }
        }
    }

    /// `p^+`: increase the largest part by 1. On the empty partition this
    /// yields `[1]`.
    pub fn inc_max(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts }
    }

    /// `p_-`: decrease the largest part by 1 and re-canonicalize.
    pub fn dec_max(&self) -> Result<Partition> {
        if self.parts.is_empty() {
            return Err(Error::EmptyPartition { op: "dec_max" });
        }
        let mut parts = self.parts.clone();
        parts[0] -= 1;
        Ok(Partition::from_unsorted(parts))
    }

    /// `p_+`: append a part equal to 1.
    pub fn append_one(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition { parts }
    }

    /// `p^{+-}`: increase the largest part by 1, then decrease the smallest
    /// part by 1. Size is preserved.
    pub fn plus_minus(&self) -> Result<Partition> {
        if self.parts.is_empty() {
            return Err(Error::EmptyPartition { op: "plus_minus" });
        }
        self.inc_max().dec_min()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Part-by-part sum, padding the shorter partition with zeros. This is
    /// the induced-orbit sum on general linear partitions.
    pub fn pointwise_sum(&self, other: &Partition) -> Partition {
        let k = self.parts.len().max(other.parts.len());
        let parts = (1..=k).map(|i| self.part(i) + other.part(i)).collect();
        // Sum of two weakly decreasing sequences is weakly decreasing.
        Partition { parts }
    }

    /// The statistics `s_i = #{j : p_j >= i}` and `r_i = #{j : p_j = i}` for
    /// `i = 1..p_1`.
    pub fn stats(&self) -> PartitionStats {
        let s = self.transpose().parts;
        let mut r = vec![0u64; s.len()];
        for i in 0..s.len() {
            let next = if i + 1 < s.len() { s[i + 1] } else { 0 };
            r[i] = s[i] - next;
        }
        PartitionStats { s, r }
    }

    /// True when every even part occurs an even number of times.
    pub fn is_orthogonal(&self) -> bool {
        self.exponents()
            .iter()
            .all(|&(v, m)| v % 2 == 1 || m % 2 == 0)
    }

    /// True when every odd part occurs an even number of times.
    pub fn is_symplectic(&self) -> bool {
        self.exponents()
            .iter()
            .all(|&(v, m)| v % 2 == 0 || m % 2 == 0)
    }
}

/// Row statistics of a partition: `s_i` counts parts `>= i` (the transpose),
/// `r_i` counts parts equal to `i`, with `r_i = s_i - s_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionStats {
    pub s: Vec<u64>,
    pub r: Vec<u64>,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,3,2,2,2]`, exponent form `[3^2 2^3]`, and mixtures of the
    /// two; entries may be separated by commas or whitespace. The surrounding
    /// brackets are optional.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner.strip_prefix('[').unwrap_or(inner);
        let inner = inner.strip_suffix(']').unwrap_or(inner);
        let mut pairs = Vec::new();
        for token in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (value, mult) = match token.split_once('^') {
                Some((v, m)) => (parse_u64(v)?, parse_u64(m)?),
                None => (parse_u64(token)?, 1),
            };
            if value == 0 {
                return Err(Error::parse(token, "partition parts must be positive"));
            }
            if mult == 0 {
                return Err(Error::parse(token, "multiplicity must be positive"));
            }
            pairs.push((value, mult));
        }
        Partition::from_exponents(&pairs).or_else(|_| Ok(Partition::empty()))
    }
}

fn parse_u64(s: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::parse(s, "expected a nonnegative integer"))
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PartsVisitor;
        impl<'de> Visitor<'de> for PartsVisitor {
            type Value = Partition;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of positive integers in decreasing order")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<u64>()? {
                    parts.push(p);
                }
                Partition::new(parts).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(PartsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent transpose oracle: count Young-diagram columns directly.
    fn transpose_by_columns(q: &Partition) -> Partition {
        let mut cols = Vec::new();
        let mut i = 1;
        loop {
            let h = q.parts().iter().filter(|&&x| x >= i).count() as u64;
            if h == 0 {
                break;
            }
            cols.push(h);
            i += 1;
        }
        Partition::new(cols).unwrap()
    }

    #[test]
    fn construction_rejects_unsorted_and_zero() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[]).transpose(), p(&[]));
        assert_eq!(p(&[2, 2, 1, 1]).transpose(), transpose_by_columns(&p(&[2, 2, 1, 1])));
        assert_eq!(p(&[2, 2, 1, 1]).transpose(), p(&[4, 2]));
        assert_eq!(p(&[3, 3, 2, 2, 2]).transpose(), transpose_by_columns(&p(&[3, 3, 2, 2, 2])));
        assert_eq!(p(&[3, 3, 2, 2, 2]).transpose(), p(&[5, 5, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2, 2]).dominance_leq(&p(&[3, 2, 1])).unwrap());
        assert!(p(&[3, 2, 1]).dominance_leq(&p(&[3, 2, 1])).unwrap());
        assert!(!p(&[3, 2, 1]).dominance_leq(&p(&[2, 2, 2])).unwrap());
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 2, 1])).is_err());
    }

    #[test]
    fn boundary_operations() {
        assert_eq!(p(&[2, 2, 1, 1, 1]).dec_min().unwrap(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[2, 2, 2]).inc_max(), p(&[3, 2, 2]));
        assert_eq!(p(&[3, 1]).dec_max().unwrap(), p(&[2, 1]));
        assert_eq!(p(&[3, 3]).dec_max().unwrap(), p(&[3, 2]));
        assert_eq!(p(&[2, 1]).append_one(), p(&[2, 1, 1]));
        assert!(p(&[]).dec_min().is_err());
        assert!(p(&[]).dec_max().is_err());
        assert_eq!(p(&[1]).dec_max().unwrap(), p(&[]));
        assert_eq!(p(&[]).inc_max(), p(&[1]));
    }

    #[test]
    fn plus_minus_examples() {
        assert_eq!(p(&[3, 3]).plus_minus().unwrap(), p(&[4, 2]));
        assert_eq!(p(&[1]).plus_minus().unwrap(), p(&[1]));
        assert_eq!(p(&[2, 2, 1, 1]).plus_minus().unwrap(), p(&[3, 2, 1]));
        assert!(p(&[]).plus_minus().is_err());
    }

    #[test]
    fn union_and_pointwise_sum() {
        assert_eq!(p(&[3]).union(&p(&[3])).union(&p(&[1])), p(&[3, 3, 1]));
        assert_eq!(p(&[2, 2]).pointwise_sum(&p(&[1])), p(&[3, 2]));
        // Induced-orbit identity instance: [1^3] + [2^2] = [3,2,2]^t.
        assert_eq!(
            p(&[1, 1, 1]).pointwise_sum(&p(&[2, 2])),
            p(&[3, 2, 2]).transpose()
        );
    }

    #[test]
    fn stats_examples() {
        let st = p(&[2, 2, 1]).stats();
        assert_eq!(st.s, vec![3, 2]);
        assert_eq!(st.r, vec![1, 2]);
        let st = p(&[]).stats();
        assert!(st.s.is_empty() && st.r.is_empty());
        let st = p(&[4]).stats();
        assert_eq!(st.s, vec![1, 1, 1, 1]);
        assert_eq!(st.r, vec![0, 0, 0, 1]);
    }

    #[test]
    fn parity_type_predicates() {
        assert!(p(&[3, 3, 2, 2, 1]).is_orthogonal());
        assert!(p(&[2, 2, 1, 1]).is_symplectic());
        assert!(!p(&[3, 1]).is_symplectic());
        assert!(p(&[]).is_orthogonal() && p(&[]).is_symplectic());
    }

    #[test]
    fn text_round_trip() {
        let q: Partition = "[3,3,2,2,2]".parse().unwrap();
        assert_eq!(q, p(&[3, 3, 2, 2, 2]));
        let q: Partition = "[3^2 2^3]".parse().unwrap();
        assert_eq!(q, p(&[3, 3, 2, 2, 2]));
        let q: Partition = " [ 5 , 3 , 1 ] ".parse().unwrap();
        assert_eq!(q, p(&[5, 3, 1]));
        let q: Partition = "[]".parse().unwrap();
        assert_eq!(q, Partition::empty());
        let q: Partition = "[2^2 1^3]".parse().unwrap();
        assert_eq!(q.to_string(), "[2,2,1,1,1]");
        assert!("[2,x]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = p(&[5, 3, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[5,3,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}

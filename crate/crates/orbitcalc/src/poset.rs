//! The dominance poset of type-restricted partitions of a fixed size, with
//! covering relations, dimension/specialness annotations, very even orbit
//! pairs for the D family, and DOT / JSON export.

use serde::Serialize;

use crate::classical::{
    enumerate_type_partitions, is_special, is_very_even, spaltenstein_dual, VeryEvenLabel,
};
use crate::dimension::dim_orbit;
use crate::error::Result;
use crate::group::GroupType;
use crate::partition::Partition;

/// One node of the closure poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetNode {
    pub partition: Partition,
    pub label: Option<VeryEvenLabel>,
    pub dim: u64,
    pub special: bool,
}

/// Dominance poset of the type partitions of `group`, with very even
/// partitions duplicated into labeled orbit pairs. Edges are covering
/// relations directed from the smaller orbit to the larger.
#[derive(Debug, Clone, Serialize)]
pub struct ClosurePoset {
    pub group: GroupType,
    pub n: u64,
    pub nodes: Vec<PosetNode>,
    /// Pairs of node indices `(lo, hi)` with `lo` covered by `hi`.
    pub edges: Vec<(usize, usize)>,
}

impl ClosurePoset {
    pub fn build(group: GroupType) -> Result<ClosurePoset> {
        let n = group.partition_size();
        let partitions = enumerate_type_partitions(n, group)?;

        // Covering relations on the underlying partitions: p is covered by q
        // when nothing lies strictly between, detected with bitset
        // intersections of strict up-sets and down-sets.
        let k = partitions.len();
        let words = k.div_ceil(64);
        let mut above = vec![vec![0u64; words]; k];
        let mut below = vec![vec![0u64; words]; k];
        for (i, p) in partitions.iter().enumerate() {
            for (j, q) in partitions.iter().enumerate() {
                if i != j && p.dominance_leq_unchecked(q) {
                    above[i][j / 64] |= 1 << (j % 64);
                    below[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        let mut covers: Vec<(usize, usize)> = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || above[i][j / 64] & (1 << (j % 64)) == 0 {
                    continue;
                }
                let between = above[i]
                    .iter()
                    .zip(&below[j])
                    .any(|(a, b)| a & b != 0);
                if !between {
                    covers.push((i, j));
                }
            }
        }

        // Materialize nodes, duplicating very even partitions; orbit labels
        // never affect dimension or specialness.
        let mut nodes = Vec::new();
        let mut node_ids: Vec<Vec<usize>> = Vec::with_capacity(k);
        for p in &partitions {
            let dim = dim_orbit(p, group)?;
            let special = is_special(p, group)?;
            let labels: &[Option<VeryEvenLabel>] = if is_very_even(p, group) {
                &[Some(VeryEvenLabel::I), Some(VeryEvenLabel::II)]
            } else {
                &[None]
            };
            let mut ids = Vec::new();
            for &label in labels {
                ids.push(nodes.len());
                nodes.push(PosetNode {
                    partition: p.clone(),
                    label,
                    dim,
                    special,
                });
            }
            node_ids.push(ids);
        }
        let mut edges = Vec::new();
        for (i, j) in covers {
            for &a in &node_ids[i] {
                for &b in &node_ids[j] {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        Ok(ClosurePoset {
            group,
            n,
            nodes,
            edges,
        })
    }

    fn node_name(&self, idx: usize) -> String {
        let node = &self.nodes[idx];
        match node.label {
            Some(VeryEvenLabel::I) => format!("{} I", node.partition),
            Some(VeryEvenLabel::II) => format!("{} II", node.partition),
            None => node.partition.to_string(),
        }
    }

    /// Graphviz DOT rendering. Special nodes are drawn with a double border;
    /// with `eta_arrows` each node also points at its Spaltenstein dual via a
    /// dashed edge.
    pub fn to_dot(&self, eta_arrows: bool) -> Result<String> {
        let mut out = String::new();
        out.push_str(&format!(
            "digraph \"{}_closure_poset\" {{\n  rankdir=BT;\n  node [shape=box];\n",
            self.group
        ));
        for (i, node) in self.nodes.iter().enumerate() {
            let peripheries = if node.special { 2 } else { 1 };
            out.push_str(&format!(
                "  n{} [label=\"{}\\ndim {}\" peripheries={}];\n",
                i,
                self.node_name(i),
                node.dim,
                peripheries
            ));
        }
        for &(lo, hi) in &self.edges {
            out.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        if eta_arrows {
            for (i, node) in self.nodes.iter().enumerate() {
                let dual = spaltenstein_dual(&node.partition, self.group)?;
                // A very even dual is drawn to the copy carrying the same
                // label; labels are otherwise immaterial.
                let j = self
                    .nodes
                    .iter()
                    .position(|m| {
                        m.partition == dual && (m.label.is_none() || m.label == node.label)
                    })
                    .or_else(|| self.nodes.iter().position(|m| m.partition == dual))
                    .expect("dual stays inside the poset");
                out.push_str(&format!("  n{i} -> n{j} [style=dashed color=gray];\n"));
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::collapse;
    use crate::group::Family;

    #[test]
    fn c2_is_a_chain() {
        let poset = ClosurePoset::build(GroupType::new(Family::C, 2)).unwrap();
        assert_eq!(poset.nodes.len(), 4);
        assert_eq!(poset.edges.len(), 3);
        let names: Vec<String> = poset
            .nodes
            .iter()
            .map(|n| n.partition.to_string())
            .collect();
        assert_eq!(names, vec!["[4]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    }

    #[test]
    fn b2_special_flags() {
        let poset = ClosurePoset::build(GroupType::new(Family::B, 2)).unwrap();
        assert_eq!(poset.nodes.len(), 4);
        for node in &poset.nodes {
            let expected = node.partition.to_string() != "[2,2,1]";
            assert_eq!(node.special, expected, "{}", node.partition);
        }
    }

    #[test]
    fn d2_very_even_pair() {
        let poset = ClosurePoset::build(GroupType::new(Family::D, 2)).unwrap();
        let labeled: Vec<&PosetNode> = poset.nodes.iter().filter(|n| n.label.is_some()).collect();
        assert_eq!(labeled.len(), 2);
        assert_eq!(labeled[0].partition.to_string(), "[2,2]");
        assert_eq!(labeled[0].dim, labeled[1].dim);
        // No edge between the two labeled copies.
        let ids: Vec<usize> = poset
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.label.is_some())
            .map(|(i, _)| i)
            .collect();
        assert!(!poset
            .edges
            .iter()
            .any(|&(a, b)| ids.contains(&a) && ids.contains(&b)));
    }

    #[test]
    fn unique_top_and_bottom() {
        for g in ["B3", "C3", "D3"] {
            let group: GroupType = g.parse().unwrap();
            let poset = ClosurePoset::build(group).unwrap();
            let sinks: Vec<usize> = (0..poset.nodes.len())
                .filter(|&i| !poset.edges.iter().any(|&(lo, _)| lo == i))
                .collect();
            let sources: Vec<usize> = (0..poset.nodes.len())
                .filter(|&i| !poset.edges.iter().any(|&(_, hi)| hi == i))
                .collect();
            // Unique bottom [1^N]; unique top = collapse of [N].
            assert_eq!(sources.len(), 1, "{g}");
            assert_eq!(sinks.len(), 1, "{g}");
            let top = collapse(
                &Partition::new(vec![group.partition_size()]).unwrap(),
                group,
            )
            .unwrap();
            assert_eq!(poset.nodes[sinks[0]].partition, top);
            assert_eq!(
                poset.nodes[sources[0]].partition,
                Partition::from_unsorted(vec![1; group.partition_size() as usize])
            );
        }
    }

    #[test]
    fn dot_output_is_wellformed() {
        let poset = ClosurePoset::build(GroupType::new(Family::D, 2)).unwrap();
        let dot = poset.to_dot(true).unwrap();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("peripheries=2"));
        assert!(dot.trim_end().ends_with('}'));
    }
}

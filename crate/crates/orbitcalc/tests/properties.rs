//! Exhaustive small-size invariants and randomized property tests for the
//! partition calculus.

use proptest::prelude::*;

use orbitcalc::{
    collapse, dim_orbit, enumerate_partitions, enumerate_type_partitions, eta, eta_both,
    is_special, is_type, spaltenstein_dual, ArthurParameter, Family, GroupType, Partition,
};

fn groups_of_size(size: u64) -> Vec<GroupType> {
    let mut out = Vec::new();
    if size % 2 == 1 {
        out.push(GroupType::new(Family::B, ((size - 1) / 2) as u32));
    } else {
        out.push(GroupType::new(Family::C, (size / 2) as u32));
        out.push(GroupType::new(Family::D, (size / 2) as u32));
    }
    out
}

#[test]
fn transpose_is_an_involution_up_to_30() {
    for n in 0..=30u64 {
        for p in enumerate_partitions(n) {
            assert_eq!(p.transpose().transpose(), p, "involution fails on {p}");
            assert_eq!(p.transpose().size(), p.size());
        }
    }
}

#[test]
fn transpose_reverses_dominance_up_to_16() {
    for n in 0..=16u64 {
        let all = enumerate_partitions(n);
        for p in &all {
            for q in &all {
                let leq = p.dominance_leq(q).unwrap();
                let rev = q.transpose().dominance_leq(&p.transpose()).unwrap();
                assert_eq!(leq, rev, "order reversal fails on {p} vs {q}");
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order_up_to_12() {
    for n in 0..=12u64 {
        let all = enumerate_partitions(n);
        for p in &all {
            assert!(p.dominance_leq(p).unwrap());
            for q in &all {
                let pq = p.dominance_leq(q).unwrap();
                let qp = q.dominance_leq(p).unwrap();
                if pq && qp {
                    assert_eq!(p, q, "antisymmetry fails on {p}, {q}");
                }
                if !pq {
                    continue;
                }
                for r in &all {
                    if q.dominance_leq(r).unwrap() {
                        assert!(p.dominance_leq(r).unwrap(), "transitivity {p} {q} {r}");
                    }
                }
            }
        }
    }
}

#[test]
fn low_and_high_boundary_ops_are_transpose_twins_up_to_20() {
    for n in 0..=20u64 {
        for p in enumerate_partitions(n) {
            assert_eq!(
                p.append_one(),
                p.transpose().inc_max().transpose(),
                "append fails on {p}"
            );
            if !p.is_empty() {
                assert_eq!(
                    p.dec_max().unwrap(),
                    p.transpose().dec_min().unwrap().transpose(),
                    "lower fails on {p}"
                );
            }
        }
    }
}

#[test]
fn induced_orbit_sum_identity_up_to_20() {
    // For q = [b_1^{a_1} ... b_r^{a_r}], the pointwise sum of the blocks
    // [a_i^{b_i}] equals q^t.
    for n in 1..=20u64 {
        for q in enumerate_partitions(n) {
            let mut sum = Partition::empty();
            for (value, mult) in q.exponents() {
                let block = Partition::from_exponents(&[(mult, value)]).unwrap();
                sum = sum.pointwise_sum(&block);
            }
            assert_eq!(sum, q.transpose(), "sum identity fails on {q}");
        }
    }
}

#[test]
fn stats_are_consistent_up_to_20() {
    for n in 0..=20u64 {
        for p in enumerate_partitions(n) {
            let st = p.stats();
            assert_eq!(st.s, p.transpose().parts().to_vec());
            for i in 0..st.s.len() {
                let next = st.s.get(i + 1).copied().unwrap_or(0);
                assert_eq!(st.r[i], st.s[i] - next);
            }
            let weighted: u64 = st.r.iter().enumerate().map(|(i, &r)| (i as u64 + 1) * r).sum();
            assert_eq!(weighted, p.size());
            assert_eq!(st.s.iter().sum::<u64>(), p.size());
        }
    }
}

#[test]
fn collapse_is_idempotent_and_monotone_up_to_14() {
    for n in 0..=14u64 {
        for group in groups_of_size(n) {
            let all = enumerate_partitions(n);
            let collapsed: Vec<Partition> =
                all.iter().map(|p| collapse(p, group).unwrap()).collect();
            for (p, c) in all.iter().zip(&collapsed) {
                assert!(is_type(c, group));
                assert!(c.dominance_leq(p).unwrap());
                assert_eq!(&collapse(c, group).unwrap(), c, "idempotence on {p}");
            }
            for (i, p) in all.iter().enumerate() {
                for (j, q) in all.iter().enumerate() {
                    if p.dominance_leq(q).unwrap() {
                        assert!(
                            collapsed[i].dominance_leq(&collapsed[j]).unwrap(),
                            "monotonicity on {p} <= {q}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn special_set_is_the_dual_image_up_to_14() {
    for n in 0..=14u64 {
        for group in groups_of_size(n) {
            let all = enumerate_type_partitions(n, group).unwrap();
            let mut image: Vec<Partition> = Vec::new();
            for p in &all {
                let d = spaltenstein_dual(p, group).unwrap();
                if !image.contains(&d) {
                    image.push(d);
                }
            }
            for p in &all {
                assert_eq!(
                    is_special(p, group).unwrap(),
                    image.contains(p),
                    "special/image mismatch for {p} in {group}"
                );
            }
        }
    }
}

#[test]
fn specialness_matches_transpose_characterizations() {
    // B (odd sizes up to 15): special <=> transpose orthogonal.
    for n in (1..=15u64).step_by(2) {
        let group = GroupType::new(Family::B, ((n - 1) / 2) as u32);
        for p in enumerate_type_partitions(n, group).unwrap() {
            assert_eq!(
                is_special(&p, group).unwrap(),
                p.transpose().is_orthogonal(),
                "B characterization on {p}"
            );
        }
    }
    // C and D (even sizes up to 16): special <=> transpose symplectic.
    for n in (0..=16u64).step_by(2) {
        for fam in [Family::C, Family::D] {
            let group = GroupType::new(fam, (n / 2) as u32);
            for p in enumerate_type_partitions(n, group).unwrap() {
                assert_eq!(
                    is_special(&p, group).unwrap(),
                    p.transpose().is_symplectic(),
                    "{fam:?} characterization on {p}"
                );
            }
        }
    }
}

#[test]
fn duality_routes_agree_up_to_17() {
    for size in 0..=17u64 {
        for source in groups_of_size(size) {
            for p in enumerate_type_partitions(size, source).unwrap() {
                let (a, b) = eta_both(&p, source).unwrap();
                assert_eq!(a, b, "routes differ on {p} over {source}");
            }
        }
    }
}

#[test]
fn duality_image_is_special_up_to_16() {
    for size in 0..=16u64 {
        for source in groups_of_size(size) {
            let target = source.dual();
            for p in enumerate_type_partitions(size, source).unwrap() {
                // The collapse of the transpose is always special on the
                // source side.
                let ct = collapse(&p.transpose(), source).unwrap();
                assert!(
                    is_special(&ct, source).unwrap(),
                    "collapsed transpose {ct} of {p} not special in {source}"
                );
                // The duality image, with its boundary adjustments, is
                // special in the target.
                let image = eta(&p, source).unwrap();
                assert!(
                    is_special(&image, target).unwrap(),
                    "duality image {image} of {p} not special in {target}"
                );
            }
        }
    }
}

#[test]
fn duality_reverses_dominance_up_to_14() {
    for size in 0..=14u64 {
        for source in groups_of_size(size) {
            let all = enumerate_type_partitions(size, source).unwrap();
            let images: Vec<Partition> =
                all.iter().map(|p| eta(p, source).unwrap()).collect();
            for (i, p) in all.iter().enumerate() {
                for (j, q) in all.iter().enumerate() {
                    if p.dominance_leq(q).unwrap() {
                        assert!(
                            images[j].dominance_leq(&images[i]).unwrap(),
                            "order reversal fails: {p} <= {q}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn symplectic_bound_equals_duality_image_up_to_rank_9() {
    // For C-family parameters the dominance bound and the duality image are
    // two spellings of the same partition.
    for n in 0..=9u32 {
        for psi in orbitcalc::arthur::enumerate_parameters(GroupType::new(Family::C, n)) {
            assert_eq!(
                psi.bitorsor_bound().unwrap(),
                eta(&psi.p_psi(), psi.dual_side()).unwrap(),
                "bound mismatch for {psi}"
            );
        }
    }
}

#[test]
fn halved_partition_shape_up_to_rank_9() {
    // p_1 is the transpose of the union of the halved blocks.
    for fam in [Family::B, Family::C, Family::D] {
        for n in 0..=9u32 {
            for psi in orbitcalc::arthur::enumerate_parameters(GroupType::new(fam, n)) {
                let mut union = Partition::empty();
                for &(a, b) in psi.factors() {
                    if b / 2 > 0 {
                        union = union.union(&Partition::from_exponents(&[(b / 2, a)]).unwrap());
                    }
                }
                let (p1, _) = psi.p1_and_nstar();
                assert_eq!(p1, union.transpose(), "shape mismatch for {psi}");
            }
        }
    }
}

#[test]
fn parameter_enumeration_matches_type_partitions() {
    for fam in [Family::B, Family::C, Family::D] {
        for n in 0..=6u32 {
            let group = GroupType::new(fam, n);
            let params = orbitcalc::arthur::enumerate_parameters(group);
            let dual = group.dual();
            let partitions = enumerate_type_partitions(dual.partition_size(), dual).unwrap();
            assert_eq!(params.len(), partitions.len());
            for (psi, p) in params.iter().zip(&partitions) {
                assert_eq!(&psi.p_psi(), p);
            }
        }
    }
}

#[test]
fn split_sums_and_groups_are_consistent_up_to_rank_8() {
    for fam in [Family::B, Family::C, Family::D] {
        for n in 0..=8u32 {
            let group = GroupType::new(fam, n);
            for psi in orbitcalc::arthur::enumerate_parameters(group) {
                let split = psi.split_ij().unwrap();
                assert!(split.psi1.factors().iter().all(|&(_, b)| b % 2 == 1));
                assert!(split.psi2.factors().iter().all(|&(_, b)| b % 2 == 0));
                assert_eq!(
                    split.psi1.group().rank + split.psi2.group().rank,
                    n,
                    "rank split for {psi}"
                );
                match fam {
                    Family::C => {
                        assert_eq!(split.psi1.group().family, Family::C);
                        assert_eq!(split.psi2.group().family, Family::D);
                    }
                    Family::B => {
                        assert_eq!(split.psi1.group().family, Family::B);
                        assert_eq!(split.psi2.group().family, Family::B);
                    }
                    Family::D => {
                        assert_eq!(split.psi1.group().family, Family::D);
                        assert_eq!(split.psi2.group().family, Family::D);
                    }
                }
            }
        }
    }
}

#[test]
fn dim_is_even_and_bounded_up_to_14() {
    for n in 0..=14u64 {
        for group in groups_of_size(n) {
            for p in enumerate_type_partitions(n, group).unwrap() {
                let d = dim_orbit(&p, group).unwrap();
                assert_eq!(d % 2, 0, "odd dimension for {p}");
                assert!(d <= group.dim());
            }
        }
    }
}

fn partition_strategy(max_part: u64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..max_len)
        .prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn prop_transpose_involution(p in partition_strategy(12, 12)) {
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn prop_text_round_trip(p in partition_strategy(30, 10)) {
        let parsed: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn prop_json_round_trip(p in partition_strategy(30, 10)) {
        let json = serde_json::to_string(&p).unwrap();
        let parsed: Partition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn prop_union_and_sum_sizes(
        a in partition_strategy(10, 8),
        b in partition_strategy(10, 8),
    ) {
        prop_assert_eq!(a.union(&b).size(), a.size() + b.size());
        prop_assert_eq!(a.pointwise_sum(&b).size(), a.size() + b.size());
    }

    #[test]
    fn prop_plus_minus_preserves_size(p in partition_strategy(10, 8)) {
        prop_assume!(!p.is_empty());
        prop_assert_eq!(p.plus_minus().unwrap().size(), p.size());
    }

    #[test]
    fn prop_collapse_result_has_type(p in partition_strategy(9, 7)) {
        for group in groups_of_size(p.size()) {
            let c = collapse(&p, group).unwrap();
            prop_assert!(is_type(&c, group));
            prop_assert!(c.dominance_leq(&p).unwrap());
        }
    }

    #[test]
    fn prop_parameter_text_round_trip(p in partition_strategy(7, 7)) {
        for source in groups_of_size(p.size()) {
            if !is_type(&p, source) {
                continue;
            }
            // Parameters for the dual of `source` have partitions of the
            // source's type.
            let psi = ArthurParameter::from_partition(source.dual(), &p).unwrap();
            let round: ArthurParameter = psi.to_string().parse().unwrap();
            prop_assert_eq!(round, psi);
        }
    }
}

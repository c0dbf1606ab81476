//! Property tests for the set-level operations: gluing, restriction,
//! refinement, and the partial order.

use proptest::prelude::*;

use vinc_core::combinatorics::{
    cliques, compare, glue, refine_to, restrict, standardize_partition, Composition, Interval,
    LabeledIntervalPartition, PartialOrderResult,
};

fn refine_by_mask(p: &LabeledIntervalPartition, cuts: u16) -> LabeledIntervalPartition {
    let mut blocks = Vec::new();
    for b in p.blocks() {
        let mut start = b.start();
        let mut len = 1;
        for x in b.start()..b.end() {
            if x <= 16 && cuts & (1 << (x - 1)) != 0 {
                blocks.push(Interval::new(start, len).unwrap());
                start = x + 1;
                len = 1;
            } else {
                len += 1;
            }
        }
        blocks.push(Interval::new(start, len).unwrap());
    }
    LabeledIntervalPartition::new(blocks).unwrap()
}

fn partition_from_masks(ground: u16, cuts: u16) -> LabeledIntervalPartition {
    let set: Vec<usize> = (1..=10).filter(|i| ground & (1 << (i - 1)) != 0).collect();
    refine_by_mask(&cliques(&set), cuts)
}

fn subset_from_mask(mask: u16) -> Vec<usize> {
    (1..=10).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

/// All refinements of a partition, by cutting every subset of the interior
/// adjacencies of its blocks.
fn all_refinements(p: &LabeledIntervalPartition) -> Vec<LabeledIntervalPartition> {
    let sites: Vec<usize> = p
        .blocks()
        .iter()
        .flat_map(|b| b.start()..b.end())
        .collect();
    let mut out = Vec::with_capacity(1 << sites.len());
    for mask in 0u32..(1 << sites.len()) {
        let mut cuts: u16 = 0;
        for (i, &x) in sites.iter().enumerate() {
            if mask & (1 << i) != 0 {
                cuts |= 1 << (x - 1);
            }
        }
        out.push(refine_by_mask(p, cuts));
    }
    out.sort_by_key(|q| q.blocks().to_vec());
    out.dedup();
    out
}

fn le(a: &LabeledIntervalPartition, b: &LabeledIntervalPartition) -> bool {
    matches!(
        compare(a, b),
        PartialOrderResult::Less | PartialOrderResult::Equal
    )
}

fn lip() -> impl Strategy<Value = LabeledIntervalPartition> {
    (0u16..1024, any::<u16>()).prop_map(|(g, c)| partition_from_masks(g, c))
}

proptest! {
    #[test]
    fn cliques_restrict_to_themselves(mask in 0u16..1024) {
        let a = subset_from_mask(mask);
        let c = cliques(&a);
        prop_assert_eq!(restrict(&c, &a), c);
    }

    #[test]
    fn standardization_ignores_gap_preserving_relabeling(
        ground in 0u16..1024,
        cuts in any::<u16>(),
        widths in proptest::collection::vec(1usize..4, 11),
    ) {
        let p = partition_from_masks(ground, cuts);
        // stretch every gap while keeping adjacency: consecutive stays
        // consecutive, separated stays separated
        let old = p.ground_set();
        let mut map = std::collections::HashMap::new();
        let mut next = 1usize;
        for (i, &x) in old.iter().enumerate() {
            if i > 0 {
                let prev = old[i - 1];
                next += if x == prev + 1 { 1 } else { 1 + widths[i % widths.len()] };
            }
            map.insert(x, next);
        }
        let blocks: Vec<Interval> = p
            .blocks()
            .iter()
            .map(|b| Interval::new(map[&b.start()], b.len()).unwrap())
            .collect();
        let relabeled = LabeledIntervalPartition::new(blocks).unwrap();
        prop_assert_eq!(standardize_partition(&relabeled), standardize_partition(&p));
    }

    #[test]
    fn glue_unit(p in lip()) {
        let e = LabeledIntervalPartition::empty();
        prop_assert_eq!(glue(&p, &e), p.clone());
        prop_assert_eq!(glue(&e, &p), p);
    }

    #[test]
    fn glue_associative(a in lip(), b in lip(), c in lip()) {
        prop_assert_eq!(glue(&glue(&a, &b), &c), glue(&a, &glue(&b, &c)));
    }

    #[test]
    fn glue_monotone(
        ground_a in 0u16..1024, cuts_a in any::<u16>(), extra_a in any::<u16>(),
        ground_b in 0u16..1024, cuts_b in any::<u16>(), extra_b in any::<u16>(),
    ) {
        // coarse partitions J, J' and refinements I <= J, I' <= J'
        let j = partition_from_masks(ground_a, cuts_a);
        let i = refine_by_mask(&j, extra_a);
        let jp = partition_from_masks(ground_b, cuts_b);
        let ip = refine_by_mask(&jp, extra_b);
        prop_assert!(le(&i, &j));
        prop_assert!(le(&ip, &jp));
        prop_assert!(le(&glue(&i, &ip), &glue(&j, &jp)));
    }

    #[test]
    fn glued_restrictions_refine_joint_restriction(
        p in lip(), mask_a in 0u16..1024, mask_b in 0u16..1024,
    ) {
        let a = subset_from_mask(mask_a);
        let b = subset_from_mask(mask_b);
        let union: Vec<usize> = subset_from_mask(mask_a | mask_b);
        let lhs = glue(&restrict(&p, &a), &restrict(&p, &b));
        prop_assert!(le(&lhs, &restrict(&p, &union)));
    }

    #[test]
    fn glue_factors_refine_restrictions(a in lip(), b in lip()) {
        let j = glue(&a, &b);
        prop_assert!(le(&a, &restrict(&j, &a.ground_set())));
        prop_assert!(le(&b, &restrict(&j, &b.ground_set())));
    }

    #[test]
    fn refine_to_is_unique_refinement(p in lip(), shape_cuts in any::<u16>()) {
        // every composition refining std(p) arises from cutting p
        let target = standardize_partition(&refine_by_mask(&p, shape_cuts));
        let got = refine_to(&p, &target).expect("target refines std(p)");
        prop_assert_eq!(standardize_partition(&got), target.clone());
        prop_assert!(le(&got, &p));
        if p.ground_size() <= 8 {
            let matching: Vec<_> = all_refinements(&p)
                .into_iter()
                .filter(|q| standardize_partition(q) == target)
                .collect();
            prop_assert_eq!(matching, vec![got]);
        }
    }

    #[test]
    fn refine_to_requires_coarser_standardization(p in lip(), other in lip()) {
        let shape = standardize_partition(&other);
        let expected = shape.refines(&standardize_partition(&p));
        prop_assert_eq!(refine_to(&p, &shape).is_some(), expected);
    }

    #[test]
    fn partial_order_properties(
        ground in 0u16..1024, cuts in any::<u16>(), e1 in any::<u16>(), e2 in any::<u16>(),
        other in lip(),
    ) {
        let k = partition_from_masks(ground, cuts);
        let j = refine_by_mask(&k, e1);
        let i = refine_by_mask(&j, e2);
        // reflexive
        prop_assert_eq!(compare(&i, &i), PartialOrderResult::Equal);
        // transitive along refinement chains
        prop_assert!(le(&i, &j));
        prop_assert!(le(&j, &k));
        prop_assert!(le(&i, &k));
        // antisymmetric
        if le(&i, &j) && le(&j, &i) {
            prop_assert_eq!(&i, &j);
        }
        // comparisons agree with the composition-level order when defined
        if compare(&i, &other) == PartialOrderResult::Less {
            prop_assert!(standardize_partition(&i).refines(&standardize_partition(&other)));
        }
    }

    #[test]
    fn composition_order_matches_partition_order(
        n in 0usize..7, cuts_s in any::<u16>(), cuts_t in any::<u16>(),
    ) {
        let full = if n == 0 {
            LabeledIntervalPartition::empty()
        } else {
            Composition::single(n).canonical_partition()
        };
        let s = standardize_partition(&refine_by_mask(&full, cuts_s));
        let t = standardize_partition(&refine_by_mask(&full, cuts_t));
        let lhs = s.partial_order(&t);
        let rhs = compare(&s.canonical_partition(), &t.canonical_partition());
        prop_assert_eq!(lhs, rhs);
    }
}

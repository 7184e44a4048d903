use std::collections::BTreeSet;

use proptest::prelude::*;
use sbia::free_algebra::{tree_children, tree_level, TreeVertex};
use sbia::partitions::{
    contains, contains_via, enumerate_all, enumerate_extensions, enumerate_extensions_via,
    induced_block, Injection,
};
use sbia::{bell, stirling2, Partition, Universe};

type Blocks = Vec<Vec<u32>>;

// Restricted growth strings over every subset of {1..n}, normalized to
// sorted blocks sorted by minimum.
fn rgs_partitions(n: u32, include_empty: bool) -> BTreeSet<Blocks> {
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let elems: Vec<u32> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        if elems.is_empty() && !include_empty {
            continue;
        }
        let mut labels = vec![0usize; elems.len()];
        loop {
            let rank = labels.iter().copied().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); rank];
            for (e, &l) in elems.iter().zip(&labels) {
                blocks[l].push(*e);
            }
            out.insert(blocks);
            // next restricted growth string: labels[i] <= 1 + max(labels[..i])
            let mut i = labels.len();
            loop {
                if i <= 1 {
                    i = 0;
                    break;
                }
                i -= 1;
                let bound = labels[..i].iter().copied().max().unwrap_or(0) + 1;
                if labels[i] < bound {
                    labels[i] += 1;
                    for l in &mut labels[i + 1..] {
                        *l = 0;
                    }
                    break;
                }
            }
            if i == 0 {
                break;
            }
        }
    }
    out
}

fn blocks_of(p: &Partition) -> Blocks {
    p.blocks().to_vec()
}

fn block_containing(blocks: &Blocks, x: u32) -> Option<&Vec<u32>> {
    blocks.iter().find(|b| b.contains(&x))
}

// Definition-level containment with X = {1..nz} a prefix of Y.
fn contains_oracle(alpha: &Blocks, nz: u32, beta: &Blocks) -> bool {
    let dom_a: BTreeSet<u32> = alpha.iter().flatten().copied().collect();
    let dom_b: BTreeSet<u32> = beta.iter().flatten().copied().collect();
    if !dom_a.is_subset(&dom_b) {
        return false;
    }
    if dom_b.iter().any(|&x| x <= nz && !dom_a.contains(&x)) {
        return false;
    }
    dom_a.iter().all(|&x| {
        dom_a.iter().all(|&y| {
            let same_a = block_containing(alpha, x) == block_containing(alpha, y);
            let same_b = block_containing(beta, x) == block_containing(beta, y);
            same_a == same_b
        })
    })
}

#[test]
fn enumeration_matches_restricted_growth_strings() {
    for n in 1..=6 {
        let ours: Vec<Blocks> = enumerate_all(Universe::new(n))
            .iter()
            .map(blocks_of)
            .collect();
        let distinct: BTreeSet<Blocks> = ours.iter().cloned().collect();
        assert_eq!(distinct.len(), ours.len(), "duplicates for n={n}");
        assert_eq!(distinct, rgs_partitions(n, false), "n={n}");
        assert_eq!(ours.len() as u64 + 1, rgs_partitions(n, true).len() as u64);
    }
}

#[test]
fn enumeration_is_sorted_by_canonical_order() {
    for n in 1..=5 {
        let all = enumerate_all(Universe::new(n));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all
            .windows(2)
            .all(|w| w[0].domain_len() <= w[1].domain_len()));
    }
}

#[test]
fn counts_match_bell_numbers() {
    // Bell numbers from the Stirling row sum, independent of the triangle.
    for n in 1..=6u32 {
        let row_sum: num_bigint::BigUint = (0..=n + 1).map(|k| stirling2(n + 1, k).unwrap()).sum();
        assert_eq!(row_sum, bell(n + 1));
        let len = enumerate_all(Universe::new(n)).len();
        assert_eq!(num_bigint::BigUint::from(len + 1), bell(n + 1));
    }
    let known = [1u32, 1, 2, 5, 15, 52, 203, 877, 4140];
    for (m, &b) in known.iter().enumerate() {
        assert_eq!(bell(m as u32), b.into());
    }
}

#[test]
fn containment_agrees_with_definition() {
    for nz in 1..=3u32 {
        for ny in nz..=4u32 {
            let subs = enumerate_all(Universe::new(nz));
            let sups = enumerate_all(Universe::new(ny));
            for a in &subs {
                for b in &sups {
                    let expected = contains_oracle(&blocks_of(a), nz, &blocks_of(b));
                    assert_eq!(
                        contains(a, b).unwrap(),
                        expected,
                        "{a} vs {b} over {nz},{ny}"
                    );
                }
            }
        }
    }
    let big = Partition::parse("1|2", Universe::new(3)).unwrap();
    assert!(contains(&big, &Partition::parse("1", Universe::new(2)).unwrap()).is_err());
}

#[test]
fn containment_is_a_partial_order_within_a_universe() {
    for n in 1..=4 {
        let all = enumerate_all(Universe::new(n));
        for a in &all {
            assert!(contains(a, a).unwrap());
            for b in &all {
                if a != b && contains(a, b).unwrap() {
                    assert!(!contains(b, a).unwrap());
                }
            }
        }
        // within a fixed universe containment is equality
        for a in &all {
            for b in &all {
                assert_eq!(contains(a, b).unwrap(), a == b);
            }
        }
    }
}

#[test]
fn containment_is_transitive_along_universe_chains() {
    for a in enumerate_all(Universe::new(2)) {
        for b in enumerate_extensions(&a, Universe::new(3)).unwrap() {
            for c in enumerate_extensions(&b, Universe::new(4)).unwrap() {
                assert!(contains(&a, &c).unwrap(), "{a} {b} {c}");
                for block in a.blocks() {
                    let via = induced_block(induced_block(block, &a, &b).unwrap(), &b, &c).unwrap();
                    assert_eq!(via, induced_block(block, &a, &c).unwrap());
                }
            }
        }
    }
}

#[test]
fn extensions_match_filtered_enumeration() {
    for nx in 1..=3u32 {
        for ny in nx..=4u32 {
            let sups = enumerate_all(Universe::new(ny));
            for a in enumerate_all(Universe::new(nx)) {
                let ext = enumerate_extensions(&a, Universe::new(ny)).unwrap();
                let filtered: Vec<Partition> = sups
                    .iter()
                    .filter(|b| contains(&a, b).unwrap())
                    .cloned()
                    .collect();
                assert_eq!(ext, filtered, "{a} to {ny}");
                if ny == nx + 1 {
                    assert_eq!(ext.len(), a.rank() + 2);
                }
            }
        }
    }
}

#[test]
fn two_step_extensions_compose() {
    for a in enumerate_all(Universe::new(2)) {
        let direct: BTreeSet<Partition> = enumerate_extensions(&a, Universe::new(4))
            .unwrap()
            .into_iter()
            .collect();
        let mut stepped = Vec::new();
        for b in enumerate_extensions(&a, Universe::new(3)).unwrap() {
            stepped.extend(enumerate_extensions(&b, Universe::new(4)).unwrap());
        }
        let stepped_set: BTreeSet<Partition> = stepped.iter().cloned().collect();
        assert_eq!(stepped.len(), stepped_set.len(), "bijection fails for {a}");
        assert_eq!(direct, stepped_set);
    }
}

#[test]
fn injections_generalize_prefix_embedding() {
    // {1,2} placed at {2,4} inside {1..4}
    let inj = Injection::new(vec![2, 4], Universe::new(4)).unwrap();
    let a = Partition::parse("1|2", Universe::new(2)).unwrap();
    let ext = enumerate_extensions_via(&a, &inj).unwrap();
    let filtered: Vec<Partition> = enumerate_all(Universe::new(4))
        .into_iter()
        .filter(|b| contains_via(&a, b, &inj).unwrap())
        .collect();
    assert_eq!(ext, filtered);
    assert_eq!(ext.len(), 17);
    for b in &ext {
        assert_ne!(b.block_of(2), b.block_of(4));
        assert!(b.block_of(2).is_some() && b.block_of(4).is_some());
    }
    assert!(Injection::new(vec![1, 1], Universe::new(3)).is_err());
}

#[test]
fn tree_children_are_one_step_extensions() {
    for level in 0..=4u32 {
        for v in tree_level(level) {
            let children: BTreeSet<Partition> =
                tree_children(&v).into_iter().map(|c| c.partition).collect();
            let expected: BTreeSet<Partition> = if v.partition.is_empty() {
                BTreeSet::from([
                    Partition::new(Universe::new(level + 1), [vec![level + 1]]).unwrap(),
                    Partition::empty(Universe::new(level + 1)),
                ])
            } else {
                enumerate_extensions(&v.partition, Universe::new(level + 1))
                    .unwrap()
                    .into_iter()
                    .collect()
            };
            assert_eq!(children, expected, "children of {v} at level {level}");
        }
    }
    assert_eq!(tree_children(&TreeVertex::root()).len(), 2);
}

fn arb_partition(max_n: u32) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..=n, n as usize).prop_map(move |labels| {
            // label 0 leaves the element out
            let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
            for (i, &l) in labels.iter().enumerate() {
                if l > 0 {
                    blocks[l as usize - 1].push(i as u32 + 1);
                }
            }
            blocks.retain(|b| !b.is_empty());
            Partition::new(Universe::new(n), blocks).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn text_form_round_trips(p in arb_partition(12)) {
        let text = p.to_string();
        prop_assert_eq!(Partition::parse(&text, p.universe()).unwrap(), p);
    }

    #[test]
    fn canonicalization_ignores_input_order(p in arb_partition(8), seed in any::<u64>()) {
        let mut blocks: Vec<Vec<u32>> = p.blocks().to_vec();
        let k = blocks.len().max(1);
        blocks.rotate_left(seed as usize % k);
        for b in &mut blocks {
            b.reverse();
        }
        prop_assert_eq!(Partition::new(p.universe(), blocks).unwrap(), p);
    }

    #[test]
    fn one_step_extension_count(p in arb_partition(7)) {
        let next = p.universe().successor();
        let ext = enumerate_extensions(&p, next).unwrap();
        prop_assert_eq!(ext.len(), p.rank() + 2);
        for b in &ext {
            prop_assert_eq!(b.restrict(p.universe()).unwrap(), p.clone());
        }
    }
}

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use whitney::engine::{
    derive_broken_circuits, enumerate_avoiding, maxmin_identity, narushima_union, reduce,
    restricted_union_size, sum_full, sum_over_chains, sum_over_maxima, sum_pruned, verify_cancellation,
    BrokenSelection, IndexedSetFamily, OrderedGroundSet,
};
use whitney::generators::{random_cancelling_instance, random_poset, random_set_family, random_subfamily};
use whitney::lattice::FiniteLattice;
use whitney::poset::FinitePoset;
use whitney::{oracle, Subset};

fn sign(a: Subset) -> i64 {
    if a.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A union-closed family of subsets of `0..4`, ordered by inclusion.
fn union_closed_poset(rng: &mut ChaCha8Rng) -> FinitePoset {
    let mut sets: BTreeSet<u64> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(0..16)).collect();
    loop {
        let grown: BTreeSet<u64> = sets
            .iter()
            .flat_map(|&a| sets.iter().map(move |&b| a | b))
            .collect();
        if grown == sets {
            break;
        }
        sets = grown;
    }
    let sets: Vec<u64> = sets.into_iter().collect();
    let labels = sets.iter().map(|s| format!("{s:04b}")).collect();
    FinitePoset::from_leq(labels, |a, b| sets[a] & sets[b] == sets[a]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pruned_sum_equals_full_sum(seed in any::<u64>(), n in 1usize..=12, k in 0usize..6, max_size in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_cancelling_instance(n, k, max_size, &mut rng).unwrap();
        let f = |a: Subset| inst.eval(a);
        prop_assert!(verify_cancellation(&f, &inst.circuits, &inst.ground).unwrap().holds());
        let broken: Vec<Subset> = derive_broken_circuits(&inst.circuits).iter().map(|b| b.set).collect();
        let full = sum_full(&f, &inst.ground).unwrap();
        prop_assert_eq!(sum_pruned(&f, &inst.ground, &broken).unwrap(), full);
        for _ in 0..3 {
            let sub = random_subfamily(&broken, &mut rng);
            prop_assert_eq!(sum_pruned(&f, &inst.ground, &sub).unwrap(), full);
            let r = reduce(&f, &inst.ground, &inst.circuits, &BrokenSelection::Subfamily(sub), false).unwrap();
            prop_assert!(r.agrees());
        }
    }

    #[test]
    fn pruning_is_monotone(seed in any::<u64>(), n in 1usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ground = OrderedGroundSet::indexed(n).unwrap();
        let mut random_sets = |m: usize| -> Vec<Subset> {
            (0..m).map(|_| Subset(rng.gen_range(1..1u64 << n))).collect()
        };
        let b1 = random_sets(3);
        let b2 = random_sets(3);
        let both: Vec<Subset> = b1.iter().chain(&b2).copied().collect();
        let small = enumerate_avoiding(&ground, &both).unwrap();
        let large = enumerate_avoiding(&ground, &b1).unwrap();
        prop_assert!(small.iter().zip(&large).all(|(s, l)| s <= l));
    }

    #[test]
    fn maxmin_holds_and_ignores_input_order(
        values in prop::collection::vec(-30i64..30, 1..9),
        seed in any::<u64>(),
    ) {
        let mut shuffled = values.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        for k in 1..=values.len() {
            let a = maxmin_identity(&values, k).unwrap();
            let b = maxmin_identity(&shuffled, k).unwrap();
            prop_assert!(a.holds(), "k = {}: {:?}", k, a);
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn restricted_union_matches_direct_union(seed in any::<u64>(), n in 2usize..=8, universe in 1usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sets: Vec<BTreeSet<usize>> = random_set_family(n, universe, 0.4, &mut rng)
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let mut broken = Vec::new();
        for _ in 0..rng.gen_range(0..4) {
            let c = rng.gen_range(1..n);
            let b = Subset(rng.gen_range(1..1u64 << c));
            broken.push((b, c));
        }
        // Grow each M_c until every intersection of its broken set lies inside.
        loop {
            let mut changed = false;
            for &(b, c) in &broken {
                let inter: BTreeSet<usize> = b
                    .iter()
                    .map(|i| sets[i].clone())
                    .reduce(|x, y| x.intersection(&y).copied().collect())
                    .unwrap();
                for u in inter {
                    changed |= sets[c].insert(u);
                }
            }
            if !changed {
                break;
            }
        }
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().copied().collect()).collect();
        let family = IndexedSetFamily::new(OrderedGroundSet::indexed(n).unwrap(), universe, lists.clone()).unwrap();
        let check = restricted_union_size(&family, &broken).unwrap();
        prop_assert!(check.holds());
        prop_assert_eq!(check.restricted, oracle::union_size(&lists).into());
    }

    #[test]
    fn chain_form_of_inclusion_exclusion(seed in any::<u64>(), universe in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let poset = union_closed_poset(&mut rng);
        // M_s = {u : g(u) ≤ s}; intersections then sit below joins.
        let g: Vec<Option<usize>> = (0..universe)
            .map(|_| rng.gen_bool(0.8).then(|| rng.gen_range(0..poset.len())))
            .collect();
        let lists: Vec<Vec<usize>> = (0..poset.len())
            .map(|s| (0..universe).filter(|&u| g[u].is_some_and(|x| poset.leq(x, s))).collect())
            .collect();
        let family = IndexedSetFamily::new(OrderedGroundSet::indexed(poset.len()).unwrap(), universe, lists.clone()).unwrap();
        let check = narushima_union(&poset, &family).unwrap();
        prop_assert_eq!(check.restricted, oracle::union_size(&lists).into());
    }

    #[test]
    fn sum_over_maxima_equals_full_sum(seed in any::<u64>(), n in 1usize..=9, p in 0.0f64..0.7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let poset = random_poset(n, p, &mut rng).unwrap();
        let weights: Vec<i64> = (0..1usize << n).map(|_| rng.gen_range(-6..=6)).collect();
        // The up-closure does not see an element below another one already present.
        let f = |a: Subset| {
            let up = a.iter().fold(Subset::EMPTY, |acc, x| acc.union(poset.up_set(x)));
            sign(a) * weights[up.bits() as usize]
        };
        let r = sum_over_maxima(&f, &poset).unwrap();
        prop_assert!(r.cancellation.as_ref().is_some_and(|c| c.holds()));
        let ground = OrderedGroundSet::indexed(n).unwrap();
        prop_assert_eq!(r.value, sum_full(&f, &ground).unwrap());
        let direct: i64 = poset.maximal_elements().subsets().map(f).sum();
        prop_assert_eq!(r.value, direct);
    }

    #[test]
    fn sum_over_chains_matches_oracle_chains(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let poset = match rng.gen_range(0..4) {
            0 => FiniteLattice::boolean(rng.gen_range(1..=3)).unwrap().poset().clone(),
            1 => FiniteLattice::divisor([12, 18, 30, 36][rng.gen_range(0..4)]).unwrap().poset().clone(),
            2 => FiniteLattice::partition(3).unwrap().poset().clone(),
            _ => union_closed_poset(&mut rng),
        };
        let n = poset.len();
        prop_assume!(n <= 12);
        let weights: Vec<i64> = (0..1usize << n).map(|_| rng.gen_range(-6..=6)).collect();
        let closure = |a: Subset| {
            let mut cur = a;
            loop {
                let mut next = cur;
                for s in cur.iter() {
                    for t in cur.iter() {
                        if !poset.comparable(s, t) {
                            next = next.with(poset.join(s, t).unwrap());
                        }
                    }
                }
                if next == cur {
                    return cur;
                }
                cur = next;
            }
        };
        let f = |a: Subset| sign(a) * weights[closure(a).bits() as usize];
        let r = sum_over_chains(&f, &poset).unwrap();
        prop_assert!(r.cancellation.as_ref().is_some_and(|c| c.holds()));
        let direct: i64 = oracle::chains(&poset)
            .unwrap()
            .iter()
            .map(|c| f(Subset::from_indices(c.iter().copied())))
            .sum();
        prop_assert_eq!(r.value, direct);
        prop_assert_eq!(Some(r.value), r.full);
    }
}

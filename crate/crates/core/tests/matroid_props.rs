use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use whitney::generators::random_graph;
use whitney::matroid::{numbered_elements, BetaMethod, CharacteristicMethod, Matroid};
use whitney::{oracle, IntPolynomial, Subset};

/// A uniform matroid, or a graphic one padded with loops and coloops.
fn matroid(seed: u64) -> Matroid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.3) {
        let n = rng.gen_range(1..=8);
        return Matroid::uniform(rng.gen_range(0..=n), n).unwrap();
    }
    let g = random_graph(rng.gen_range(2..=5), 0.5, &mut rng).unwrap();
    let m = g.edge_count();
    let loops = rng.gen_range(0..=2);
    let coloops = rng.gen_range(0..=2);
    let mut circuits: Vec<Subset> = Matroid::graphic(&g).unwrap().circuits().to_vec();
    circuits.extend((m..m + loops).map(Subset::singleton));
    Matroid::new(numbered_elements(m + loops + coloops), circuits).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circuit_maximum_is_rank_neutral(seed in any::<u64>()) {
        let m = matroid(seed);
        prop_assume!(m.len() <= 10);
        for &c in m.circuits() {
            let top = c.max().unwrap();
            for a in c.supersets_within(m.ground().all()) {
                prop_assert_eq!(m.rank(a.without(top)), m.rank(a));
            }
        }
    }

    #[test]
    fn rank_matches_oracle_and_axioms(seed in any::<u64>()) {
        let m = matroid(seed);
        prop_assume!(m.len() <= 12);
        let masks: Vec<u64> = m.circuits().iter().map(|c| c.bits()).collect();
        let table = oracle::matroid_rank_table(m.len(), &masks).unwrap();
        for a in m.ground().all().subsets() {
            prop_assert_eq!(m.rank(a), table[a.bits() as usize]);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let top = 1u64 << m.len();
        for _ in 0..20 {
            let a = Subset(rng.gen_range(0..top));
            let b = Subset(rng.gen_range(0..top));
            prop_assert!(m.rank_axioms_hold(a, b));
            prop_assert!(m.rank_axioms_hold(a, a.union(b)));
        }
    }

    #[test]
    fn characteristic_polynomial_methods_agree(seed in any::<u64>()) {
        let m = matroid(seed);
        prop_assume!(m.len() <= 14);
        let full = m.characteristic_polynomial(CharacteristicMethod::Full).unwrap();
        let heron = m.characteristic_polynomial(CharacteristicMethod::Heron).unwrap();
        prop_assert_eq!(&full.polynomial, &heron.polynomial);
        let masks: Vec<u64> = m.circuits().iter().map(|c| c.bits()).collect();
        let coeffs = oracle::characteristic_coefficients(m.len(), &masks).unwrap();
        prop_assert_eq!(&IntPolynomial::from_i64s(&coeffs), &full.polynomial);
    }

    #[test]
    fn beta_methods_agree(seed in any::<u64>()) {
        let m = matroid(seed);
        let full = m.beta_invariant(BetaMethod::Full).unwrap();
        prop_assert_eq!(&m.beta_invariant(BetaMethod::BrokenCircuit).unwrap(), &full);
        prop_assert_eq!(&m.beta_invariant(BetaMethod::Derivative).unwrap(), &full);
        prop_assert!(full >= BigInt::from(0));
    }
}

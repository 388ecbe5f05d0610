//! Matroids given by their circuits: rank, characteristic polynomial and
//! beta invariant.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::IntPolynomial;
use crate::engine::{
    derive_broken_circuits, for_each_avoiding, sum_full, CircuitFamily, OrderedGroundSet,
    DEFAULT_ENUMERATION_CAP,
};
use crate::error::{check_cap, Error, Result};
use crate::graph::{trim_counts, Graph};
use crate::subset::{Subset, MAX_ELEMENTS};

/// Largest ground set on which the circuit axioms are checked exhaustively.
pub const AXIOM_CHECK_CAP: usize = 12;
/// Largest `n` accepted by [`Matroid::uniform`].
pub const UNIFORM_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground: OrderedGroundSet,
    circuits: Vec<Subset>,
    validated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacteristicMethod {
    Full,
    Heron,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaMethod {
    Full,
    BrokenCircuit,
    Derivative,
}

/// `χ(M, x)`, with `b_k(M)` when computed from broken circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characteristic {
    pub polynomial: IntPolynomial,
    pub b: Option<Vec<u64>>,
}

impl Matroid {
    /// Checks that circuits are nonempty and pairwise incomparable and, for
    /// `|E| ≤ 12`, the elimination axiom. Larger inputs are accepted with
    /// [`Matroid::is_validated`] false.
    pub fn new(labels: Vec<String>, circuits: Vec<Subset>) -> Result<Self> {
        let ground = OrderedGroundSet::with_cap(labels, MAX_ELEMENTS)?;
        let family = CircuitFamily::new(&ground, circuits)?;
        let mut circuits = family.circuits().to_vec();
        circuits.sort();
        circuits.dedup();
        let name = |s: Subset| format!("{:?}", ground.labels_of(s));
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return Err(Error::NotAMatroid(format!(
                        "circuits {} and {} are nested",
                        name(a),
                        name(b)
                    )));
                }
            }
        }
        let validated = ground.len() <= AXIOM_CHECK_CAP;
        if validated {
            for (i, &a) in circuits.iter().enumerate() {
                for &b in &circuits[i + 1..] {
                    for e in a.intersection(b).iter() {
                        let rest = a.union(b).without(e);
                        if !circuits.iter().any(|c| c.is_subset_of(rest)) {
                            return Err(Error::NotAMatroid(format!(
                                "elimination fails for {} and {} at `{}`",
                                name(a),
                                name(b),
                                ground.labels()[e]
                            )));
                        }
                    }
                }
            }
        }
        Ok(Matroid {
            ground,
            circuits,
            validated,
        })
    }

    pub fn from_labels<S: AsRef<str>>(labels: Vec<String>, circuits: &[Vec<S>]) -> Result<Self> {
        let ground = OrderedGroundSet::with_cap(labels.clone(), MAX_ELEMENTS)?;
        let fam = CircuitFamily::from_labels(&ground, circuits)?;
        Self::new(labels, fam.circuits().to_vec())
    }

    /// `U_{r,n}`: the circuits are the `(r+1)`-subsets of `{e1, ..., en}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        check_cap("uniform matroid size", n, UNIFORM_CAP)?;
        if r > n {
            return Err(Error::InvalidInput(format!("rank {r} exceeds size {n}")));
        }
        let circuits = Subset::full(n).subsets().filter(|c| c.len() == r + 1).collect();
        Self::new(numbered_elements(n), circuits)
    }

    /// The cycle matroid of a graph.
    pub fn graphic(g: &Graph) -> Result<Self> {
        let ground = g.edge_ground()?;
        Self::new(ground.labels().to_vec(), g.cycles_edge_sets()?)
    }

    pub fn ground(&self) -> &OrderedGroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn circuit_family(&self) -> CircuitFamily {
        CircuitFamily::new(&self.ground, self.circuits.clone()).expect("validated on construction")
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        !self.circuits.iter().any(|c| c.is_subset_of(a))
    }

    /// Size of a greedily grown maximal independent subset of `A`.
    pub fn rank(&self, a: Subset) -> usize {
        let mut basis = Subset::EMPTY;
        for e in a.iter() {
            let grown = basis.with(e);
            if !self
                .circuits
                .iter()
                .any(|c| c.contains(e) && c.is_subset_of(grown))
            {
                basis = grown;
            }
        }
        basis.len()
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground.all())
    }

    fn enumeration_ground(&self) -> Result<OrderedGroundSet> {
        check_cap("matroid subsets", self.len(), DEFAULT_ENUMERATION_CAP)?;
        Ok(self.ground.clone())
    }

    /// `b_k(M)`; fails if a broken-circuit-free set is dependent, which
    /// cannot happen for a genuine matroid.
    pub fn broken_circuit_free_counts(&self) -> Result<Vec<u64>> {
        let ground = self.enumeration_ground()?;
        let broken: Vec<Subset> = derive_broken_circuits(&self.circuit_family())
            .iter()
            .map(|b| b.set)
            .collect();
        let mut counts = vec![0u64; ground.len() + 1];
        let mut dependent = None;
        for_each_avoiding(ground.len(), &broken, |a| {
            counts[a.len()] += 1;
            if dependent.is_none() && self.rank(a) != a.len() {
                dependent = Some(a);
            }
        });
        if let Some(a) = dependent {
            return Err(Error::NotAMatroid(format!(
                "broken-circuit-free set {:?} is dependent",
                self.ground.labels_of(a)
            )));
        }
        Ok(trim_counts(counts))
    }

    pub fn characteristic_polynomial(&self, method: CharacteristicMethod) -> Result<Characteristic> {
        let r = self.full_rank();
        match method {
            CharacteristicMethod::Full => {
                let ground = self.enumeration_ground()?;
                let f = |a: Subset| IntPolynomial::signed_power(a.len() % 2 == 1, r - self.rank(a));
                Ok(Characteristic {
                    polynomial: sum_full(&f, &ground)?,
                    b: None,
                })
            }
            CharacteristicMethod::Heron => {
                let b = self.broken_circuit_free_counts()?;
                let mut poly = IntPolynomial::zero();
                for (k, &bk) in b.iter().enumerate() {
                    if bk == 0 {
                        continue;
                    }
                    let term = IntPolynomial::signed_power(k % 2 == 1, r - k);
                    poly += &term.scale(&BigInt::from(bk));
                }
                Ok(Characteristic {
                    polynomial: poly,
                    b: Some(b),
                })
            }
        }
    }

    pub fn beta_invariant(&self, method: BetaMethod) -> Result<BigInt> {
        let r = self.full_rank();
        let sign = |k: usize| {
            if k.is_multiple_of(2) {
                BigInt::from(1)
            } else {
                BigInt::from(-1)
            }
        };
        match method {
            BetaMethod::Full => {
                let ground = self.enumeration_ground()?;
                let f = |a: Subset| sign(a.len()) * BigInt::from(self.rank(a));
                Ok(sign(r) * sum_full(&f, &ground)?)
            }
            BetaMethod::BrokenCircuit => {
                let b = self.broken_circuit_free_counts()?;
                let s: BigInt = b
                    .iter()
                    .enumerate()
                    .map(|(k, &bk)| sign(k) * BigInt::from(k) * BigInt::from(bk))
                    .sum();
                Ok(sign(r) * s)
            }
            BetaMethod::Derivative => {
                let chi = self
                    .characteristic_polynomial(CharacteristicMethod::Heron)?
                    .polynomial;
                Ok(sign(r + 1) * chi.derivative_eval(&BigInt::from(1)))
            }
        }
    }

    /// Rank axioms on one triple: bounds, monotonicity and submodularity.
    pub fn rank_axioms_hold(&self, a: Subset, b: Subset) -> bool {
        let (ra, rb) = (self.rank(a), self.rank(b));
        let bounded = ra <= a.len();
        let monotone = !a.is_subset_of(b) || ra <= rb;
        let submodular = self.rank(a.union(b)) + self.rank(a.intersection(b)) <= ra + rb;
        bounded && monotone && submodular
    }
}

/// Element labels `e1, ..., en`.
pub fn numbered_elements(n: usize) -> Vec<String> {
    (1..=n).map(|i| ["e", &i.to_string()].concat()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u23() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert_eq!(m.rank(Subset::from_indices([0, 1])), 2);
        assert_eq!(m.full_rank(), 2);
        let heron = m.characteristic_polynomial(CharacteristicMethod::Heron).unwrap();
        assert_eq!(heron.polynomial, IntPolynomial::from_i64s(&[2, -3, 1]));
        assert_eq!(heron.b.unwrap(), [1, 3, 2]);
        assert_eq!(
            m.characteristic_polynomial(CharacteristicMethod::Full)
                .unwrap()
                .polynomial,
            heron.polynomial
        );
        for method in [
            BetaMethod::Full,
            BetaMethod::BrokenCircuit,
            BetaMethod::Derivative,
        ] {
            assert_eq!(m.beta_invariant(method).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn loops_and_coloops() {
        let coloop = Matroid::uniform(1, 1).unwrap();
        let lp = Matroid::uniform(0, 1).unwrap();
        assert_eq!(lp.rank(Subset::singleton(0)), 0);
        for method in [
            BetaMethod::Full,
            BetaMethod::BrokenCircuit,
            BetaMethod::Derivative,
        ] {
            assert_eq!(coloop.beta_invariant(method).unwrap(), BigInt::from(1));
            assert_eq!(lp.beta_invariant(method).unwrap(), BigInt::from(0));
        }
        for method in [CharacteristicMethod::Full, CharacteristicMethod::Heron] {
            assert!(lp.characteristic_polynomial(method).unwrap().polynomial.is_zero());
        }
    }

    #[test]
    fn free_matroid() {
        let m = Matroid::uniform(4, 4).unwrap();
        let chi = m
            .characteristic_polynomial(CharacteristicMethod::Full)
            .unwrap()
            .polynomial;
        assert_eq!(chi, IntPolynomial::from_i64s(&[-1, 1]).pow(4));
    }

    #[test]
    fn graphic_matches_chromatic() {
        let k3 = Graph::complete(3).unwrap();
        let m = Matroid::graphic(&k3).unwrap();
        assert_eq!(m.circuits(), Matroid::uniform(2, 3).unwrap().circuits());
        let chi = m
            .characteristic_polynomial(CharacteristicMethod::Heron)
            .unwrap()
            .polynomial;
        let x = IntPolynomial::monomial(BigInt::from(1), 1);
        assert_eq!(&chi * &x, IntPolynomial::from_i64s(&[0, 2, -3, 1]));
        let tree = Matroid::graphic(&Graph::path(4).unwrap()).unwrap();
        assert!(tree.circuits().is_empty());
    }

    #[test]
    fn rejects_non_matroids() {
        let l = numbered_elements(3);
        assert!(matches!(
            Matroid::new(
                l.clone(),
                vec![Subset::from_indices([0, 1]), Subset::from_indices([0, 1, 2])]
            ),
            Err(Error::NotAMatroid(_))
        ));
        // {0,1} and {1,2} need a circuit inside {0,2}.
        assert!(matches!(
            Matroid::new(
                l,
                vec![Subset::from_indices([0, 1]), Subset::from_indices([1, 2])]
            ),
            Err(Error::NotAMatroid(_))
        ));
    }

    #[test]
    fn circuit_rank_invariance() {
        let m = Matroid::graphic(&Graph::complete(4).unwrap()).unwrap();
        for &c in m.circuits() {
            let top = c.max().unwrap();
            for a in c.supersets_within(m.ground().all()) {
                assert_eq!(m.rank(a.without(top)), m.rank(a));
            }
        }
    }
}

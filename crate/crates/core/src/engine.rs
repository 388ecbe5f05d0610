//! The broken-circuit engine.
//!
//! Given a linearly ordered ground set `S`, a family `𝒞` of nonempty subsets and
//! a group-valued `f` with `f(A) + f(A ∖ {max C}) = 0` whenever `C ∈ 𝒞` and
//! `C ⊆ A`, the full sum `Σ_{A ⊆ S} f(A)` equals the sum restricted to the sets
//! `A` containing no `B` from any subfamily of `{C ∖ {max C}}`. This module
//! provides both sums, the exhaustive cancellation check, the per-cardinality
//! count of avoiding sets, the poset / semilattice specialisations, the
//! maximum-minimums identity and restricted inclusion-exclusion.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binomial, GroupValue};
use crate::error::{check_cap, Error, Result};
use crate::poset::FinitePoset;
use crate::subset::{Subset, MAX_ELEMENTS};

/// Default bound on `|S|` for full enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;
/// Default bound on `|S|` for the exhaustive cancellation check.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 18;

/// A finite set whose linear order is the order of `labels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGroundSet {
    labels: Vec<String>,
    cap: usize,
}

impl OrderedGroundSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        Self::with_cap(labels, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(labels: Vec<String>, cap: usize) -> Result<Self> {
        check_cap("ground set", labels.len(), cap.min(MAX_ELEMENTS))?;
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(OrderedGroundSet { labels, cap })
    }

    /// `{0, 1, ..., n-1}` labelled by their positions.
    pub fn indexed(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn indexed_with_cap(n: usize, cap: usize) -> Result<Self> {
        Self::with_cap((0..n).map(|i| i.to_string()).collect(), cap)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        labels
            .iter()
            .try_fold(Subset::EMPTY, |acc, l| Ok(acc.with(self.index_of(l.as_ref())?)))
    }

    pub fn labels_of(&self, set: Subset) -> Vec<&str> {
        set.iter().map(|i| self.labels[i].as_str()).collect()
    }
}

/// A map from subsets of the ground set into an abelian group.
pub trait SetFunction {
    type Value: GroupValue;

    fn eval(&self, set: Subset) -> Self::Value;
}

impl<V: GroupValue, F: Fn(Subset) -> V> SetFunction for F {
    type Value = V;

    #[inline]
    fn eval(&self, set: Subset) -> V {
        self(set)
    }
}

/// A family `𝒞` of nonempty subsets of a ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    circuits: Vec<Subset>,
}

impl CircuitFamily {
    pub fn new(ground: &OrderedGroundSet, circuits: Vec<Subset>) -> Result<Self> {
        for (i, c) in circuits.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::EmptyCircuit(i));
            }
            if !c.is_subset_of(ground.all()) {
                return Err(Error::CircuitOutsideGround(i));
            }
        }
        Ok(CircuitFamily { circuits })
    }

    pub fn from_labels<S: AsRef<str>>(ground: &OrderedGroundSet, circuits: &[Vec<S>]) -> Result<Self> {
        let sets = circuits
            .iter()
            .enumerate()
            .map(|(i, c)| {
                ground.subset_of(c).map_err(|e| match e {
                    Error::UnknownLabel(_) => Error::CircuitOutsideGround(i),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, sets)
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }
}

/// `C ∖ {max C}` together with the circuit `C` it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrokenCircuit {
    pub set: Subset,
    pub witness: Subset,
}

impl BrokenCircuit {
    /// `max C`, the element whose addition completes the circuit.
    pub fn completing_element(&self) -> usize {
        self.witness.max().expect("circuits are nonempty")
    }
}

/// Broken circuits of `family`, deduplicated; the first circuit producing a
/// given broken set is kept as its witness.
pub fn derive_broken_circuits(family: &CircuitFamily) -> Vec<BrokenCircuit> {
    let mut out: Vec<BrokenCircuit> = Vec::new();
    for &c in family.circuits() {
        let top = c.max().expect("circuits are nonempty");
        let set = c.without(top);
        if !out.iter().any(|b| b.set == set) {
            out.push(BrokenCircuit { set, witness: c });
        }
    }
    out
}

/// Outcome of the exhaustive cancellation check.
#[derive(Clone, Debug, PartialEq)]
pub enum CancellationReport<V> {
    /// Every pair `(C, A)` with `C ⊆ A` cancels; `checked` pairs were tested.
    Holds { checked: u64 },
    /// `f(subset) + f(subset ∖ {max circuit}) = sum ≠ 0`.
    Violated { circuit: Subset, subset: Subset, sum: V },
}

impl<V> CancellationReport<V> {
    pub fn holds(&self) -> bool {
        matches!(self, CancellationReport::Holds { .. })
    }
}

pub fn verify_cancellation<F: SetFunction + ?Sized>(
    f: &F,
    family: &CircuitFamily,
    ground: &OrderedGroundSet,
) -> Result<CancellationReport<F::Value>> {
    verify_cancellation_with_cap(f, family, ground, DEFAULT_BRUTE_FORCE_CAP)
}

/// Checks `f(A) + f(A ∖ {max C}) = 0` for every circuit `C` and every `A ⊇ C`.
pub fn verify_cancellation_with_cap<F: SetFunction + ?Sized>(
    f: &F,
    family: &CircuitFamily,
    ground: &OrderedGroundSet,
    cap: usize,
) -> Result<CancellationReport<F::Value>> {
    check_cap("cancellation check", ground.len(), cap)?;
    let mut checked = 0u64;
    for &c in family.circuits() {
        let top = c.max().expect("circuits are nonempty");
        for a in c.supersets_within(ground.all()) {
            let sum = f.eval(a).added(&f.eval(a.without(top)));
            checked += 1;
            if !sum.is_neutral() {
                return Ok(CancellationReport::Violated {
                    circuit: c,
                    subset: a,
                    sum,
                });
            }
        }
    }
    Ok(CancellationReport::Holds { checked })
}

/// `Σ_{A ⊆ S} f(A)` by plain enumeration.
pub fn sum_full<F: SetFunction + ?Sized>(f: &F, ground: &OrderedGroundSet) -> Result<F::Value> {
    check_cap("full enumeration", ground.len(), ground.cap())?;
    let mut acc = F::Value::neutral();
    for a in ground.all().subsets() {
        acc.add_assign_ref(&f.eval(a));
    }
    Ok(acc)
}

/// `Σ f(A)` over the `A ⊆ S` that include no member of `broken`.
pub fn sum_pruned<F: SetFunction + ?Sized>(
    f: &F,
    ground: &OrderedGroundSet,
    broken: &[Subset],
) -> Result<F::Value> {
    check_cap("pruned enumeration", ground.len(), ground.cap())?;
    let mut acc = F::Value::neutral();
    for_each_avoiding(ground.len(), broken, |a| acc.add_assign_ref(&f.eval(a)));
    Ok(acc)
}

/// Counts of broken-set-avoiding subsets by cardinality, `(b_0, ..., b_|S|)`.
pub fn enumerate_avoiding(ground: &OrderedGroundSet, broken: &[Subset]) -> Result<Vec<u64>> {
    check_cap("pruned enumeration", ground.len(), ground.cap())?;
    let mut counts = vec![0u64; ground.len() + 1];
    for_each_avoiding(ground.len(), broken, |a| counts[a.len()] += 1);
    Ok(counts)
}

/// Visits every subset of `{0, ..., n-1}` that includes no member of `broken`.
///
/// Elements are decided in increasing order. A broken set is indexed by its
/// maximum, so when element `e` is considered for inclusion only the sets with
/// maximum `e` can become complete, and each costs one mask test.
pub fn for_each_avoiding(n: usize, broken: &[Subset], mut visit: impl FnMut(Subset)) {
    if broken.iter().any(|b| b.is_empty()) {
        return;
    }
    let mut by_max: Vec<Vec<Subset>> = vec![Vec::new(); n];
    for &b in broken {
        let top = b.max().expect("nonempty");
        if top < n {
            by_max[top].push(b.without(top));
        }
    }
    fn descend(pos: usize, n: usize, current: Subset, by_max: &[Vec<Subset>], visit: &mut dyn FnMut(Subset)) {
        if pos == n {
            visit(current);
            return;
        }
        descend(pos + 1, n, current, by_max, visit);
        if by_max[pos].iter().all(|rest| !rest.is_subset_of(current)) {
            descend(pos + 1, n, current.with(pos), by_max, visit);
        }
    }
    descend(0, n, Subset::EMPTY, &by_max, &mut visit);
}

/// How the cancellation hypothesis of a reduction was established.
#[derive(Clone, Debug, PartialEq)]
pub enum Condition<V> {
    /// Checked exhaustively.
    Verified,
    /// Taken on the caller's word (the ground set was above the check cap, or
    /// the caller opted out).
    Asserted,
    /// The exhaustive check failed; no restricted sum was computed.
    Violated { circuit: Subset, subset: Subset, sum: V },
}

/// Which broken circuits to prune with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrokenSelection {
    All,
    Subfamily(Vec<Subset>),
}

/// Full and restricted sums of one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<V> {
    pub condition: Condition<V>,
    pub broken: Vec<BrokenCircuit>,
    /// Present when `|S|` is within the enumeration cap.
    pub full: Option<V>,
    /// Absent only when the condition was violated.
    pub pruned: Option<V>,
}

impl<V: PartialEq> Reduction<V> {
    /// Both sums exist and agree.
    pub fn agrees(&self) -> bool {
        matches!((&self.full, &self.pruned), (Some(a), Some(b)) if a == b)
    }
}

/// Runs one reduction end to end: derives `ℬ`, checks the cancellation
/// condition (unless `assume_condition`), and computes both sums.
pub fn reduce<F: SetFunction + ?Sized>(
    f: &F,
    ground: &OrderedGroundSet,
    family: &CircuitFamily,
    selection: &BrokenSelection,
    assume_condition: bool,
) -> Result<Reduction<F::Value>> {
    let derived = derive_broken_circuits(family);
    let broken = match selection {
        BrokenSelection::All => derived,
        BrokenSelection::Subfamily(sets) => sets
            .iter()
            .map(|s| {
                derived.iter().find(|b| b.set == *s).copied().ok_or_else(|| {
                    Error::precondition(
                        "broken set must equal C ∖ {max C} for some circuit C",
                        format!("{:?} is not a broken circuit", ground.labels_of(*s)),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let condition = if assume_condition {
        Condition::Asserted
    } else {
        match verify_cancellation(f, family, ground)? {
            CancellationReport::Holds { .. } => Condition::Verified,
            CancellationReport::Violated { circuit, subset, sum } => {
                return Ok(Reduction {
                    condition: Condition::Violated { circuit, subset, sum },
                    broken,
                    full: None,
                    pruned: None,
                })
            }
        }
    };
    let sets: Vec<Subset> = broken.iter().map(|b| b.set).collect();
    let pruned = sum_pruned(f, ground, &sets)?;
    let full = sum_full(f, ground).ok();
    Ok(Reduction {
        condition,
        broken,
        full,
        pruned: Some(pruned),
    })
}

/// Result of a poset-shaped reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct PosetSum<V> {
    /// The restricted sum.
    pub value: V,
    /// The unrestricted sum, when the poset is small enough to enumerate.
    pub full: Option<V>,
    /// The cancellation check in a linear extension, when small enough.
    pub cancellation: Option<CancellationReport<V>>,
}

/// Moves `f` into the coordinates of a linear extension: position `k` of the
/// new ground set is element `order[k]` of the poset.
fn in_extension<'a, F: SetFunction + ?Sized>(
    f: &'a F,
    order: &'a [usize],
) -> impl Fn(Subset) -> F::Value + 'a {
    move |positions: Subset| {
        let original = Subset::from_indices(positions.iter().map(|k| order[k]));
        f.eval(original)
    }
}

fn position_map(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (k, &e) in order.iter().enumerate() {
        pos[e] = k;
    }
    pos
}

fn poset_reduction<F: SetFunction + ?Sized>(
    f: &F,
    poset: &FinitePoset,
    circuits: Vec<Subset>,
    broken: Vec<Subset>,
) -> Result<PosetSum<F::Value>> {
    reduction(f, poset, circuits, broken, true)
}

fn reduction<F: SetFunction + ?Sized>(
    f: &F,
    poset: &FinitePoset,
    circuits: Vec<Subset>,
    broken: Vec<Subset>,
    check: bool,
) -> Result<PosetSum<F::Value>> {
    let n = poset.len();
    let ground = OrderedGroundSet::indexed(n)?;
    let order = poset.linear_extension();
    let pos = position_map(&order);
    let to_pos = |s: Subset| Subset::from_indices(s.iter().map(|e| pos[e]));
    let g = in_extension(f, &order);
    if !check {
        let broken_pos: Vec<Subset> = broken.iter().map(|&b| to_pos(b)).collect();
        return Ok(PosetSum {
            value: sum_pruned(&g, &ground, &broken_pos)?,
            full: None,
            cancellation: None,
        });
    }
    let cancellation = if n <= DEFAULT_BRUTE_FORCE_CAP {
        let family = CircuitFamily::new(&ground, circuits.iter().map(|&c| to_pos(c)).collect())?;
        Some(verify_cancellation(&g, &family, &ground)?)
    } else {
        None
    };
    let broken_pos: Vec<Subset> = broken.iter().map(|&b| to_pos(b)).collect();
    let value = sum_pruned(&g, &ground, &broken_pos)?;
    let full = sum_full(&g, &ground).ok();
    Ok(PosetSum {
        value,
        full,
        cancellation,
    })
}

/// `Σ_{A ⊆ S_max} f(A)` for `f` cancelling on the comparable pairs of a poset.
pub fn sum_over_maxima<F: SetFunction + ?Sized>(f: &F, poset: &FinitePoset) -> Result<PosetSum<F::Value>> {
    let n = poset.len();
    let mut circuits = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if poset.lt(s, t) {
                circuits.push(Subset::from_indices([s, t]));
            }
        }
    }
    let broken: Vec<Subset> = poset
        .all()
        .difference(poset.maximal_elements())
        .iter()
        .map(Subset::singleton)
        .collect();
    poset_reduction(f, poset, circuits, broken)
}

/// `Σ f(A)` over the chains `A` of an upper semilattice, for `f` cancelling on
/// the triples `{s, t, s ∨ t}` with `s`, `t` incomparable.
pub fn sum_over_chains<F: SetFunction + ?Sized>(f: &F, poset: &FinitePoset) -> Result<PosetSum<F::Value>> {
    let (circuits, broken) = chain_circuits(poset)?;
    poset_reduction(f, poset, circuits, broken)
}

/// [`sum_over_chains`] without the brute-force cancellation check and full
/// sum; only `value` is filled in.
pub fn sum_over_chains_unchecked<F: SetFunction + ?Sized>(f: &F, poset: &FinitePoset) -> Result<F::Value> {
    let (circuits, broken) = chain_circuits(poset)?;
    Ok(reduction(f, poset, circuits, broken, false)?.value)
}

fn chain_circuits(poset: &FinitePoset) -> Result<(Vec<Subset>, Vec<Subset>)> {
    poset.check_upper_semilattice()?;
    let n = poset.len();
    let mut circuits = Vec::new();
    let mut broken = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if !poset.comparable(s, t) {
                let j = poset.join(s, t).expect("checked above");
                circuits.push(Subset::from_indices([s, t, j]));
                broken.push(Subset::from_indices([s, t]));
            }
        }
    }
    Ok((circuits, broken))
}

/// Both sides of the generalised maximum-minimums identity.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxMinIdentity<T> {
    /// `Σ_{|A| ≥ k} (-1)^{|A|-k} min_k(A)` over all subsets.
    pub lhs: T,
    /// The same sum restricted by the broken `(k+1)`-subsets.
    pub pruned: T,
    /// `C(n-1, k-1) · max`.
    pub rhs: T,
}

impl<T: PartialEq> MaxMinIdentity<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.pruned == self.rhs
    }
}

/// Largest number of values accepted by [`maxmin_identity`].
pub const MAXMIN_CAP: usize = 20;

/// Evaluates `Σ_{A ⊆ S, |A| ≥ k} (-1)^{|A|-k} min_k(x_a | a ∈ A)` by brute force
/// and through the broken-circuit reduction, next to `C(|S|-1, k-1) · max`.
pub fn maxmin_identity<T: GroupValue + Ord>(values: &[T], k: usize) -> Result<MaxMinIdentity<T>> {
    let n = values.len();
    if k == 0 || k > n {
        return Err(Error::precondition("1 ≤ k ≤ |S|", format!("k = {k}, |S| = {n}")));
    }
    check_cap("max-min values", n, MAXMIN_CAP)?;

    let kth_smallest = |a: Subset, vals: &[T]| -> T {
        let mut xs: Vec<&T> = a.iter().map(|i| &vals[i]).collect();
        xs.sort();
        xs[k - 1].clone()
    };
    let term = |a: Subset, vals: &[T]| -> T {
        if a.len() < k {
            return T::neutral();
        }
        let m = kth_smallest(a, vals);
        if (a.len() - k) % 2 == 1 {
            m.negated()
        } else {
            m
        }
    };

    let mut lhs = T::neutral();
    for a in Subset::full(n).subsets() {
        lhs.add_assign_ref(&term(a, values));
    }

    // Sort so that s < t implies x_s ≤ x_t; 𝒞 = all (k+1)-subsets.
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort();
    let ground = OrderedGroundSet::indexed(n)?;
    let circuits: Vec<Subset> = Subset::full(n).subsets().filter(|c| c.len() == k + 1).collect();
    let family = CircuitFamily::new(&ground, circuits)?;
    let broken: Vec<Subset> = derive_broken_circuits(&family).iter().map(|b| b.set).collect();
    let f = |a: Subset| term(a, &sorted);
    let pruned = sum_pruned(&f, &ground, &broken)?;

    let max = values.iter().max().expect("n ≥ k ≥ 1").clone();
    let rhs = max.times(&binomial(n - 1, k - 1));
    Ok(MaxMinIdentity { lhs, pruned, rhs })
}

/// A bitset over a universe of atoms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AtomSet {
    words: Vec<u64>,
}

impl AtomSet {
    pub fn from_atoms<I: IntoIterator<Item = usize>>(atoms: I, universe: usize) -> Self {
        let mut words = vec![0u64; universe.div_ceil(64)];
        for a in atoms {
            words[a / 64] |= 1 << (a % 64);
        }
        AtomSet { words }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_atoms(0..universe, universe)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &AtomSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn union_with(&mut self, other: &AtomSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn is_subset_of(&self, other: &AtomSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |i| bits >> i & 1 == 1)
                .map(move |i| w * 64 + i)
        })
    }
}

/// A family `{M_s}_{s ∈ S}` of finite sets of atoms indexed by an ordered set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedSetFamily {
    index: OrderedGroundSet,
    universe: usize,
    sets: Vec<AtomSet>,
}

impl IndexedSetFamily {
    /// `sets[i]` lists the atoms of `M_{labels[i]}`; atoms must be `< universe`.
    pub fn new(index: OrderedGroundSet, universe: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        if sets.len() != index.len() {
            return Err(Error::InvalidInput(format!(
                "{} sets for {} indices",
                sets.len(),
                index.len()
            )));
        }
        let mut out = Vec::with_capacity(sets.len());
        for s in sets {
            if let Some(&bad) = s.iter().find(|&&a| a >= universe) {
                return Err(Error::InvalidInput(format!(
                    "atom {bad} outside the universe of {universe}"
                )));
            }
            out.push(AtomSet::from_atoms(s, universe));
        }
        Ok(IndexedSetFamily {
            index,
            universe,
            sets: out,
        })
    }

    pub fn index(&self) -> &OrderedGroundSet {
        &self.index
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn set(&self, s: usize) -> &AtomSet {
        &self.sets[s]
    }

    /// `∩_{a ∈ A} M_a`; the whole universe for `A = ∅`.
    pub fn intersection(&self, a: Subset) -> AtomSet {
        let mut acc = AtomSet::full(self.universe);
        for i in a.iter() {
            acc.intersect_with(&self.sets[i]);
        }
        acc
    }

    /// `|∪_s M_s|`, computed directly.
    pub fn union_size(&self) -> BigInt {
        let mut acc = AtomSet::from_atoms([], self.universe);
        for s in &self.sets {
            acc.union_with(s);
        }
        BigInt::from(acc.len())
    }

    /// The inclusion-exclusion summand `(-1)^{|A|-1} |∩_{a ∈ A} M_a|`, zero at `∅`.
    pub fn term(&self, a: Subset) -> BigInt {
        if a.is_empty() {
            return BigInt::zero();
        }
        let size = BigInt::from(self.intersection(a).len());
        if a.len().is_multiple_of(2) {
            -size
        } else {
            size
        }
    }
}

/// A restricted inclusion-exclusion value next to the directly counted union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionCheck {
    pub restricted: BigInt,
    pub union_size: BigInt,
}

impl UnionCheck {
    pub fn holds(&self) -> bool {
        self.restricted == self.union_size
    }
}

/// Inclusion-exclusion over the nonempty `A` avoiding every broken set `B`,
/// where each `B` comes with a witness `c(B) > max B` such that
/// `∩_{b ∈ B} M_b ⊆ M_{c(B)}`.
pub fn restricted_union_size(family: &IndexedSetFamily, broken: &[(Subset, usize)]) -> Result<UnionCheck> {
    let n = family.index().len();
    for &(b, c) in broken {
        let Some(top) = b.max() else {
            return Err(Error::precondition(
                "broken sets are nonempty",
                "empty broken set",
            ));
        };
        if c >= n || c <= top {
            return Err(Error::precondition(
                "c(B) > max B",
                format!("witness {c} for {:?}", family.index().labels_of(b)),
            ));
        }
        if !family.intersection(b).is_subset_of(family.set(c)) {
            return Err(Error::precondition(
                "∩_{b ∈ B} M_b ⊆ M_{c(B)}",
                format!(
                    "{:?} with witness `{}`",
                    family.index().labels_of(b),
                    family.index().labels()[c]
                ),
            ));
        }
    }
    let sets: Vec<Subset> = broken.iter().map(|&(b, _)| b).collect();
    let restricted = sum_pruned(&|a: Subset| family.term(a), family.index(), &sets)?;
    Ok(UnionCheck {
        restricted,
        union_size: family.union_size(),
    })
}

/// Inclusion-exclusion over the nonempty chains of an upper semilattice with
/// `M_s ∩ M_t ⊆ M_{s ∨ t}`.
pub fn narushima_union(poset: &FinitePoset, family: &IndexedSetFamily) -> Result<UnionCheck> {
    if poset.len() != family.index().len() {
        return Err(Error::InvalidInput("poset and family sizes differ".into()));
    }
    poset.check_upper_semilattice()?;
    for s in 0..poset.len() {
        for t in s + 1..poset.len() {
            let j = poset.join(s, t).expect("checked above");
            let mut meet = family.set(s).clone();
            meet.intersect_with(family.set(t));
            if !meet.is_subset_of(family.set(j)) {
                return Err(Error::precondition(
                    "M_s ∩ M_t ⊆ M_{s ∨ t}",
                    format!("s = `{}`, t = `{}`", poset.label(s), poset.label(t)),
                ));
            }
        }
    }
    let result = sum_over_chains(&|a: Subset| family.term(a), poset)?;
    Ok(UnionCheck {
        restricted: result.value,
        union_size: family.union_size(),
    })
}

/// Sign `(-1)^{|A|}` as a big integer.
pub fn alternating(a: Subset) -> BigInt {
    if a.len().is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

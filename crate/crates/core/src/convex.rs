//! Closure systems, convex geometries and the sum over free sets.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
#[cfg(test)]
use num_traits::One;
use num_traits::Zero;

use crate::algebra::GroupValue;
use crate::engine::{
    derive_broken_circuits, for_each_avoiding, CircuitFamily, OrderedGroundSet, SetFunction,
};
use crate::error::{check_cap, Error, Result};
use crate::poset::FinitePoset;
use crate::subset::Subset;

/// Largest ground set for which hull tables are built.
pub const CLOSURE_CAP: usize = 20;

/// A family of subsets containing `S` and closed under intersection, stored
/// together with its full hull table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureSystem {
    ground: OrderedGroundSet,
    closed: Vec<bool>,
    hull: Vec<Subset>,
}

impl ClosureSystem {
    /// Validates `closed` (duplicates allowed) and tabulates `h`.
    pub fn from_closed_sets(ground: OrderedGroundSet, closed: &[Subset]) -> Result<Self> {
        let n = ground.len();
        check_cap("closure system ground set", n, CLOSURE_CAP)?;
        let all = ground.all();
        let mut is_closed = vec![false; 1 << n];
        for &c in closed {
            if !c.is_subset_of(all) {
                return Err(Error::NotAClosureSystem(format!(
                    "closed set {c:?} is not inside the ground set"
                )));
            }
            is_closed[c.bits() as usize] = true;
        }
        if !is_closed[all.bits() as usize] {
            return Err(Error::NotAClosureSystem("the ground set is not closed".into()));
        }
        // hull(A) = A when closed, otherwise the intersection of hull(A ∪ {e}).
        let mut hull = vec![Subset::EMPTY; 1 << n];
        for bits in (0..1usize << n).rev() {
            let a = Subset(bits as u64);
            hull[bits] = if is_closed[bits] {
                a
            } else {
                all.difference(a)
                    .iter()
                    .fold(all, |acc, e| acc.intersection(hull[a.with(e).bits() as usize]))
            };
        }
        for (bits, &h) in hull.iter().enumerate() {
            if !is_closed[h.bits() as usize] {
                return Err(Error::NotAClosureSystem(format!(
                    "the closed supersets of {:?} intersect in {:?}, which is not closed",
                    ground.labels_of(Subset(bits as u64)),
                    ground.labels_of(h)
                )));
            }
        }
        Ok(ClosureSystem {
            ground,
            closed: is_closed,
            hull,
        })
    }

    /// The closure system of fixpoints of `h`. `h` itself is not trusted:
    /// compare with [`ClosureSystem::agrees_with`] if it should be a hull operator.
    pub fn from_hull_fn(ground: OrderedGroundSet, h: impl Fn(Subset) -> Subset) -> Result<Self> {
        check_cap("closure system ground set", ground.len(), CLOSURE_CAP)?;
        let closed: Vec<Subset> = ground.all().subsets().filter(|&a| h(a) == a).collect();
        Self::from_closed_sets(ground, &closed)
    }

    /// The discrete geometry: every subset closed.
    pub fn discrete(ground: OrderedGroundSet) -> Result<Self> {
        Self::from_hull_fn(ground, |a| a)
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

    #[inline]
    pub fn hull(&self, a: Subset) -> Subset {
        self.hull[a.bits() as usize]
    }

    #[inline]
    pub fn is_closed(&self, a: Subset) -> bool {
        self.closed[a.bits() as usize]
    }

    pub fn closed_sets(&self) -> Vec<Subset> {
        (0..self.closed.len())
            .filter(|&b| self.closed[b])
            .map(|b| Subset(b as u64))
            .collect()
    }

    /// Whether `h(a) = self.hull(a)` for every subset.
    pub fn agrees_with(&self, h: impl Fn(Subset) -> Subset) -> bool {
        self.ground.all().subsets().all(|a| h(a) == self.hull(a))
    }

    /// Elements `a ∈ A` with `a ∉ h(A ∖ {a})`.
    pub fn extreme_points(&self, a: Subset) -> Subset {
        Subset::from_indices(a.iter().filter(|&x| !self.hull(a.without(x)).contains(x)))
    }

    /// `free[A]` for every `A`: all subsets of `A` are closed.
    fn free_table(&self) -> Vec<bool> {
        let mut free = vec![false; self.closed.len()];
        for bits in 0..free.len() {
            let a = Subset(bits as u64);
            free[bits] = self.closed[bits] && a.iter().all(|x| free[a.without(x).bits() as usize]);
        }
        free
    }
}

/// A closure system in which every closed set has a unique basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexGeometry {
    system: ClosureSystem,
}

impl ConvexGeometry {
    /// Checks `h(ex(A)) = A` for every closed `A`; a basis always contains
    /// `ex(A)`, so this is exactly uniqueness of bases.
    pub fn new(system: ClosureSystem) -> Result<Self> {
        for a in system.closed_sets() {
            let ex = system.extreme_points(a);
            if system.hull(ex) != a {
                return Err(Error::NotAConvexGeometry(format!(
                    "closed set {:?} is not the hull of its extreme points {:?}",
                    system.ground.labels_of(a),
                    system.ground.labels_of(ex)
                )));
            }
        }
        Ok(ConvexGeometry { system })
    }

    pub fn from_closed_sets(ground: OrderedGroundSet, closed: &[Subset]) -> Result<Self> {
        Self::new(ClosureSystem::from_closed_sets(ground, closed)?)
    }

    pub fn system(&self) -> &ClosureSystem {
        &self.system
    }

    pub fn ground(&self) -> &OrderedGroundSet {
        &self.system.ground
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn hull(&self, a: Subset) -> Subset {
        self.system.hull(a)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.system.is_closed(a)
    }

    /// The unique basis `A₀` of a closed set.
    pub fn basis(&self, a: Subset) -> Result<Subset> {
        if !a.is_subset_of(self.ground().all()) || !self.is_closed(a) {
            return Err(Error::NotClosed);
        }
        let ex = self.system.extreme_points(a);
        if self.hull(ex) != a {
            return Err(Error::NotAConvexGeometry(format!(
                "basis check failed for {:?}",
                self.ground().labels_of(a)
            )));
        }
        Ok(ex)
    }

    pub fn is_free(&self, a: Subset) -> bool {
        a.subsets().all(|b| self.is_closed(b))
    }

    /// All free sets, in increasing bitmask order.
    pub fn free_sets(&self) -> Vec<Subset> {
        self.system
            .free_table()
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(b, _)| Subset(b as u64))
            .collect()
    }

    /// `Σ_{A ⊆ S} (-1)^{|h(A)| - |A|}`, which counts the free sets.
    pub fn count_free_signed(&self) -> BigInt {
        let mut plus = 0u64;
        let mut minus = 0u64;
        for a in self.ground().all().subsets() {
            if (self.hull(a).len() - a.len()).is_multiple_of(2) {
                plus += 1;
            } else {
                minus += 1;
            }
        }
        BigInt::from(plus) - BigInt::from(minus)
    }

    /// `Σ (-1)^{|A|-1}` over the nonempty free sets.
    pub fn euler_characteristic_free(&self) -> Result<BigInt> {
        if self.is_empty() {
            return Err(Error::precondition("S ≠ ∅", "empty ground set"));
        }
        let mut chi = BigInt::zero();
        for a in self.free_sets() {
            if a.is_empty() {
                continue;
            }
            if a.len() % 2 == 1 {
                chi += 1;
            } else {
                chi -= 1;
            }
        }
        Ok(chi)
    }
}

/// Status of the interval-sum hypothesis of the free-set reduction.
#[derive(Clone, Debug, PartialEq)]
pub enum IntervalCondition<V> {
    Verified,
    Asserted,
    /// `Σ_{basis ⊆ I ⊆ closed} f(I) = sum ≠ 0`.
    Violated {
        closed: Subset,
        basis: Subset,
        sum: V,
    },
}

/// Both sides of the free-set reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeSetReduction<V> {
    pub condition: IntervalCondition<V>,
    pub full: V,
    /// Absent when the condition was violated.
    pub free: Option<V>,
}

impl<V: PartialEq> FreeSetReduction<V> {
    pub fn agrees(&self) -> bool {
        self.free.as_ref() == Some(&self.full)
    }
}

/// Checks `Σ_{A₀ ⊆ I ⊆ A} f(I) = 0` for every closed, non-free `A` with basis `A₀`.
pub fn check_interval_condition<F: SetFunction + ?Sized>(
    f: &F,
    cg: &ConvexGeometry,
) -> Result<IntervalCondition<F::Value>> {
    let free = cg.system.free_table();
    for a in cg.system.closed_sets() {
        if free[a.bits() as usize] {
            continue;
        }
        let a0 = cg.basis(a)?;
        let mut sum = F::Value::neutral();
        for i in a0.supersets_within(a) {
            sum.add_assign_ref(&f.eval(i));
        }
        if !sum.is_neutral() {
            return Ok(IntervalCondition::Violated {
                closed: a,
                basis: a0,
                sum,
            });
        }
    }
    Ok(IntervalCondition::Verified)
}

/// `Σ_{A ⊆ S} f(A)` next to `Σ_{A free} f(A)`.
pub fn reduce_theorem2<F: SetFunction + ?Sized>(
    f: &F,
    cg: &ConvexGeometry,
    assume_condition: bool,
) -> Result<FreeSetReduction<F::Value>> {
    let condition = if assume_condition {
        IntervalCondition::Asserted
    } else {
        check_interval_condition(f, cg)?
    };
    let mut full = F::Value::neutral();
    for a in cg.ground().all().subsets() {
        full.add_assign_ref(&f.eval(a));
    }
    let free = if matches!(condition, IntervalCondition::Violated { .. }) {
        None
    } else {
        let mut acc = F::Value::neutral();
        for a in cg.free_sets() {
            acc.add_assign_ref(&f.eval(a));
        }
        Some(acc)
    };
    Ok(FreeSetReduction {
        condition,
        full,
        free,
    })
}

/// `I ↦ (-1)^{|I|} γ(h(I))`, which always satisfies the interval condition.
pub fn hull_weighted<'a, V: GroupValue>(
    cg: &'a ConvexGeometry,
    gamma: impl Fn(Subset) -> V + 'a,
) -> impl Fn(Subset) -> V + 'a {
    move |i: Subset| {
        let v = gamma(cg.hull(i));
        if i.len() % 2 == 1 {
            v.negated()
        } else {
            v
        }
    }
}

/// The convex geometry of a broken-circuit family together with the
/// witnesses that generated it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HStar {
    pub geometry: ConvexGeometry,
    /// `(B, c(B))` pairs.
    pub broken: Vec<(Subset, usize)>,
}

/// `h*`: iterate `A ↦ A ∪ {c(B) : B ⊆ A}` to its fixpoint.
pub fn hstar_closure(a: Subset, broken: &[(Subset, usize)]) -> Subset {
    let mut cur = a;
    loop {
        let next = broken
            .iter()
            .filter(|(b, _)| b.is_subset_of(cur))
            .fold(cur, |acc, &(_, c)| acc.with(c));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Builds `h*` from explicit `(B, c(B))` pairs with `c(B) ∉ B`, `c(B) > max B`,
/// checks that it is a hull operator of a convex geometry, and that its free
/// sets are exactly the sets avoiding every `B`.
pub fn hstar_from_broken(ground: &OrderedGroundSet, broken: &[(Subset, usize)]) -> Result<HStar> {
    let n = ground.len();
    for &(b, c) in broken {
        if c >= n || b.contains(c) || b.max().is_some_and(|m| c <= m) || !b.is_subset_of(ground.all()) {
            return Err(Error::precondition(
                "c(B) ∉ B and c(B) > max B",
                format!("B = {:?}, c = {c}", ground.labels_of(b)),
            ));
        }
    }
    let h = |a: Subset| hstar_closure(a, broken);
    let system = ClosureSystem::from_hull_fn(ground.clone(), h)?;
    if !system.agrees_with(h) {
        return Err(Error::NotAClosureSystem("h* is not a hull operator".into()));
    }
    let geometry = ConvexGeometry::new(system)?;
    let sets: Vec<Subset> = broken.iter().map(|&(b, _)| b).collect();
    let mut avoiding = Vec::new();
    for_each_avoiding(n, &sets, |a| avoiding.push(a));
    avoiding.sort();
    if avoiding != geometry.free_sets() {
        return Err(Error::NotAConvexGeometry(
            "h*-free sets differ from the broken-set-avoiding sets".into(),
        ));
    }
    Ok(HStar {
        geometry,
        broken: broken.to_vec(),
    })
}

/// [`hstar_from_broken`] with every broken circuit of `family`, witnessed by
/// the maximum of its circuit.
pub fn hstar_from_circuits(ground: &OrderedGroundSet, family: &CircuitFamily) -> Result<HStar> {
    let broken: Vec<(Subset, usize)> = derive_broken_circuits(family)
        .iter()
        .map(|b| (b.set, b.completing_element()))
        .collect();
    hstar_from_broken(ground, &broken)
}

/// Intervals `{i, ..., j}` of a path on `n` points, plus `∅`.
pub fn interval_geometry(n: usize) -> Result<ConvexGeometry> {
    let ground = OrderedGroundSet::new((1..=n).map(|i| i.to_string()).collect())?;
    let mut closed = vec![Subset::EMPTY];
    for i in 0..n {
        for j in i..n {
            closed.push(Subset::from_indices(i..=j));
        }
    }
    ConvexGeometry::from_closed_sets(ground, &closed)
}

/// Down-sets of a poset.
pub fn order_ideal_geometry(poset: &FinitePoset) -> Result<ConvexGeometry> {
    let ground = OrderedGroundSet::new(poset.labels().to_vec())?;
    check_cap("closure system ground set", ground.len(), CLOSURE_CAP)?;
    let h = |a: Subset| {
        a.iter()
            .fold(Subset::EMPTY, |acc, x| acc.union(poset.down_set(x)))
    };
    ConvexGeometry::new(ClosureSystem::from_hull_fn(ground, h)?)
}

/// Vertex sets of subtrees of a tree (connected sets), plus `∅`.
/// `parent[i] < i` for every `i ≥ 1`; `parent[0]` is ignored.
pub fn subtree_geometry(parent: &[usize]) -> Result<ConvexGeometry> {
    let n = parent.len();
    for (i, &p) in parent.iter().enumerate().skip(1) {
        if p >= i {
            return Err(Error::InvalidInput(format!("parent of {i} must precede it")));
        }
    }
    let ground = OrderedGroundSet::indexed(n)?;
    check_cap("closure system ground set", n, CLOSURE_CAP)?;
    // A nonempty vertex set of a tree is connected iff exactly one of its
    // vertices has its parent outside the set.
    let connected =
        |a: Subset| a.is_empty() || a.iter().filter(|&i| i == 0 || !a.contains(parent[i])).count() == 1;
    let closed: Vec<Subset> = ground.all().subsets().filter(|&a| connected(a)).collect();
    ConvexGeometry::from_closed_sets(ground, &closed)
}

/// `p ∈ conv(pts)` in exact integer arithmetic.
fn in_convex_hull(p: (i64, i64), pts: &[(i64, i64)]) -> bool {
    fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
        (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
    }
    fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
        cross(a, b, p) == 0
            && p.0 >= a.0.min(b.0)
            && p.0 <= a.0.max(b.0)
            && p.1 >= a.1.min(b.1)
            && p.1 <= a.1.max(b.1)
    }
    let m = pts.len();
    for i in 0..m {
        if pts[i] == p {
            return true;
        }
        for j in i + 1..m {
            if on_segment(p, pts[i], pts[j]) {
                return true;
            }
            for k in j + 1..m {
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                let d1 = cross(a, b, p);
                let d2 = cross(b, c, p);
                let d3 = cross(c, a, p);
                let neg = d1 < 0 || d2 < 0 || d3 < 0;
                let pos = d1 > 0 || d2 > 0 || d3 > 0;
                if !(neg && pos) && cross(a, b, c) != 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// Convex-hull geometry of distinct planar points: `h(A)` is the set of
/// points lying in the convex hull of `A`.
pub fn planar_geometry(points: &[(i64, i64)]) -> Result<ConvexGeometry> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::InvalidInput(format!("repeated point {p:?}")));
        }
    }
    let ground = OrderedGroundSet::new(points.iter().map(|(x, y)| format!("({x},{y})")).collect())?;
    check_cap("closure system ground set", ground.len(), CLOSURE_CAP)?;
    let h = |a: Subset| {
        let pts: Vec<(i64, i64)> = a.iter().map(|i| points[i]).collect();
        Subset::from_indices((0..points.len()).filter(|&q| in_convex_hull(points[q], &pts)))
    };
    ConvexGeometry::new(ClosureSystem::from_hull_fn(ground, h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn interval_examples() {
        let g = interval_geometry(3).unwrap();
        assert_eq!(g.hull(s(&[0, 2])), s(&[0, 1, 2]));
        assert_eq!(g.hull(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(g.basis(s(&[0, 1, 2])).unwrap(), s(&[0, 2]));
        assert_eq!(g.basis(Subset::EMPTY).unwrap(), Subset::EMPTY);
        assert_eq!(g.basis(s(&[0, 2])), Err(Error::NotClosed));
        let free = g.free_sets();
        assert_eq!(
            free,
            vec![s(&[]), s(&[0]), s(&[1]), s(&[0, 1]), s(&[2]), s(&[1, 2])]
        );
        assert_eq!(g.count_free_signed(), BigInt::from(6));
        assert_eq!(g.euler_characteristic_free().unwrap(), BigInt::one());
    }

    #[test]
    fn discrete_and_tiny() {
        let d = ConvexGeometry::new(ClosureSystem::discrete(OrderedGroundSet::indexed(4).unwrap()).unwrap())
            .unwrap();
        assert_eq!(d.free_sets().len(), 16);
        assert_eq!(d.count_free_signed(), BigInt::from(16));
        let one = interval_geometry(1).unwrap();
        assert_eq!(one.free_sets(), vec![Subset::EMPTY, Subset::singleton(0)]);
        assert_eq!(one.euler_characteristic_free().unwrap(), BigInt::one());
        let zero = interval_geometry(0).unwrap();
        assert_eq!(zero.count_free_signed(), BigInt::one());
        assert!(zero.euler_characteristic_free().is_err());
    }

    #[test]
    fn closure_system_errors() {
        let g = OrderedGroundSet::indexed(3).unwrap();
        assert!(matches!(
            ClosureSystem::from_closed_sets(g.clone(), &[s(&[0])]),
            Err(Error::NotAClosureSystem(_))
        ));
        assert!(matches!(
            ClosureSystem::from_closed_sets(g.clone(), &[s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])]),
            Err(Error::NotAClosureSystem(_))
        ));
        // Closed under intersection but {0,1} has two bases {0} and {1}.
        let cs = ClosureSystem::from_closed_sets(g, &[s(&[]), s(&[0, 1]), s(&[0, 1, 2])]).unwrap();
        assert!(matches!(
            ConvexGeometry::new(cs),
            Err(Error::NotAConvexGeometry(_))
        ));
    }

    #[test]
    fn theorem2_on_interval_geometry() {
        let g = interval_geometry(4).unwrap();
        let f = hull_weighted(&g, |a: Subset| BigInt::from(a.bits() * 3 + 1));
        let r = reduce_theorem2(&f, &g, false).unwrap();
        assert_eq!(r.condition, IntervalCondition::Verified);
        assert!(r.agrees());

        let bad = |a: Subset| BigInt::from(a.len());
        let r = reduce_theorem2(&bad, &g, false).unwrap();
        assert!(matches!(r.condition, IntervalCondition::Violated { .. }));
        assert!(r.free.is_none());
    }

    #[test]
    fn hstar_k3() {
        let ground = OrderedGroundSet::new(vec!["e1".into(), "e2".into(), "e3".into()]).unwrap();
        let fam = CircuitFamily::new(&ground, vec![s(&[0, 1, 2])]).unwrap();
        let hs = hstar_from_circuits(&ground, &fam).unwrap();
        let free = hs.geometry.free_sets();
        assert_eq!(free.len(), 6);
        assert!(!free.contains(&s(&[0, 1])));
        assert!(!free.contains(&s(&[0, 1, 2])));
    }

    #[test]
    fn hstar_iterates() {
        let ground = OrderedGroundSet::new(vec!["a".into(), "b".into(), "c".into(), "d".into()]).unwrap();
        let fam = CircuitFamily::new(&ground, vec![s(&[0, 1, 2]), s(&[0, 2, 3])]).unwrap();
        let hs = hstar_from_circuits(&ground, &fam).unwrap();
        assert_eq!(hs.geometry.hull(s(&[0, 1])), s(&[0, 1, 2, 3]));
        let empty = CircuitFamily::new(&ground, vec![]).unwrap();
        let hs = hstar_from_circuits(&ground, &empty).unwrap();
        assert_eq!(hs.geometry.free_sets().len(), 16);
    }

    #[test]
    fn hstar_rejects_bad_witness() {
        let ground = OrderedGroundSet::indexed(3).unwrap();
        assert!(hstar_from_broken(&ground, &[(s(&[1, 2]), 0)]).is_err());
        assert!(hstar_from_broken(&ground, &[(s(&[0]), 0)]).is_err());
    }

    #[test]
    fn other_generators() {
        let square = planar_geometry(&[(0, 0), (4, 0), (0, 4), (4, 4), (1, 1), (2, 1)]).unwrap();
        assert_eq!(square.euler_characteristic_free().unwrap(), BigInt::one());
        assert_eq!(square.hull(s(&[0, 1, 2])), s(&[0, 1, 2, 4, 5]));
        let collinear = planar_geometry(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(collinear.hull(s(&[0, 2])), s(&[0, 1, 2]));

        let p = FinitePoset::from_relation(crate::poset::numbered(3), &[(0, 2), (1, 2)]).unwrap();
        let ideals = order_ideal_geometry(&p).unwrap();
        assert_eq!(ideals.hull(Subset::singleton(2)), s(&[0, 1, 2]));
        assert_eq!(ideals.euler_characteristic_free().unwrap(), BigInt::one());

        let path = subtree_geometry(&[0, 0, 1, 2]).unwrap();
        let interval = interval_geometry(4).unwrap();
        assert_eq!(path.free_sets(), interval.free_sets());
        let star = subtree_geometry(&[0, 0, 0, 0]).unwrap();
        assert_eq!(star.hull(s(&[1, 2])), s(&[0, 1, 2]));
    }
}

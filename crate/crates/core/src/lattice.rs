//! Finite lattices, Möbius functions and crosscut expansions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::engine::{
    sum_full, sum_pruned, verify_cancellation, CancellationReport, CircuitFamily, OrderedGroundSet,
    DEFAULT_BRUTE_FORCE_CAP,
};
use crate::error::{check_cap, Error, Result};
use crate::poset::FinitePoset;
use crate::subset::Subset;

/// Bound on `|C|` for subset enumeration over a crosscut.
pub const CROSSCUT_CAP: usize = 20;
/// Bound on the number of non-extremal elements for exhaustive crosscut search.
pub const CROSSCUT_SEARCH_CAP: usize = 20;

/// A finite lattice. Elements keep their input order; [`FiniteLattice::bottom`]
/// and [`FiniteLattice::top`] locate `0̂` and `1̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    bottom: usize,
    top: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteLattice {
    /// Builds the order generated by `covers` (`(a, b)` meaning `a ⋖ b`) and
    /// checks that every pair has a meet and a join.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        Self::from_poset(FinitePoset::from_relation(labels, covers)?)
    }

    pub fn from_cover_labels<S: AsRef<str>>(labels: Vec<String>, covers: &[(S, S)]) -> Result<Self> {
        let find = |l: &str| {
            labels
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::UnknownLabel(l.into()))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((find(a.as_ref())?, find(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_covers(labels, &pairs)
    }

    pub fn from_poset(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::InvalidInput("a lattice needs at least one element".into()));
        }
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let (Some(m), Some(j)) = (poset.meet(a, b), poset.join(a, b)) else {
                    return Err(Error::NotALattice(poset.label(a).into(), poset.label(b).into()));
                };
                meet[a][b] = m;
                meet[b][a] = m;
                join[a][b] = j;
                join[b][a] = j;
            }
        }
        let bottom = (1..n).fold(0, |acc, x| meet[acc][x]);
        let top = (1..n).fold(0, |acc, x| join[acc][x]);
        Ok(FiniteLattice {
            poset,
            bottom,
            top,
            meet,
            join,
        })
    }

    /// Subsets of `{1, ..., n}` under inclusion, labelled `∅`, `1`, `12`, ...
    pub fn boolean(n: usize) -> Result<Self> {
        check_cap("boolean lattice rank", n, 6)?;
        let label = |s: Subset| {
            if s.is_empty() {
                "∅".to_string()
            } else {
                s.iter().map(|i| (i + 1).to_string()).collect::<String>()
            }
        };
        let sets: Vec<Subset> = Subset::full(n).subsets().collect();
        let labels = sets.iter().map(|&s| label(s)).collect();
        let poset = FinitePoset::from_leq(labels, |a, b| sets[a].is_subset_of(sets[b]))?;
        Self::from_poset(poset)
    }

    /// Divisors of `n` under divisibility.
    pub fn divisor(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let divs = crate::number::divisors(n)?;
        check_cap("divisor lattice size", divs.len(), 64)?;
        let labels = divs.iter().map(|d| d.to_string()).collect();
        Self::from_poset(FinitePoset::from_leq(labels, |a, b| divs[b] % divs[a] == 0)?)
    }

    /// Set partitions of `{1, ..., n}` under refinement, labelled like `12|3`.
    pub fn partition(n: usize) -> Result<Self> {
        check_cap("partition lattice n", n, 5)?;
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        // Restricted growth strings, as lists of blocks.
        let mut parts: Vec<Vec<Subset>> = vec![vec![]];
        for x in 0..n {
            let mut next = Vec::new();
            for p in &parts {
                for i in 0..p.len() {
                    let mut q = p.clone();
                    q[i] = q[i].with(x);
                    next.push(q);
                }
                let mut q = p.clone();
                q.push(Subset::singleton(x));
                next.push(q);
            }
            parts = next;
        }
        let label = |p: &Vec<Subset>| {
            p.iter()
                .map(|b| b.iter().map(|i| (i + 1).to_string()).collect::<String>())
                .collect::<Vec<_>>()
                .join("|")
        };
        let labels = parts.iter().map(label).collect();
        let refines =
            |a: &Vec<Subset>, b: &Vec<Subset>| a.iter().all(|x| b.iter().any(|y| x.is_subset_of(*y)));
        Self::from_poset(FinitePoset::from_leq(labels, |a, b| {
            refines(&parts[a], &parts[b])
        })?)
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        Self::from_poset(FinitePoset::chain(n)?)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.poset.lt(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// `⋀A`, with `⋀∅ = 1̂`.
    pub fn meet_of(&self, a: Subset) -> usize {
        a.iter().fold(self.top, |acc, x| self.meet[acc][x])
    }

    /// `⋁A`, with `⋁∅ = 0̂`.
    pub fn join_of(&self, a: Subset) -> usize {
        a.iter().fold(self.bottom, |acc, x| self.join[acc][x])
    }

    /// Elements strictly between `0̂` and `1̂`.
    pub fn interior(&self) -> Subset {
        self.poset.all().without(self.bottom).without(self.top)
    }

    /// Whether `b` covers `a`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && (0..self.len()).all(|z| !(self.lt(a, z) && self.lt(z, b)))
    }

    pub fn atoms(&self) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&x| self.covers(self.bottom, x)))
    }

    pub fn coatoms(&self) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&x| self.covers(x, self.top)))
    }

    /// `μ_L(x) = μ(0̂, x)` for every `x`, from `Σ_{y ≤ x} μ_L(y) = δ_{0̂x}`.
    pub fn mobius_recursive(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        for x in self.poset.linear_extension() {
            mu[x] = if x == self.bottom {
                1
            } else {
                -self
                    .poset
                    .down_set(x)
                    .without(x)
                    .iter()
                    .map(|y| mu[y])
                    .sum::<i64>()
            };
        }
        mu
    }

    /// `μ(L) = μ_L(1̂)`.
    pub fn mobius(&self) -> i64 {
        self.mobius_recursive()[self.top]
    }

    fn check_nontrivial(&self) -> Result<()> {
        if self.interior().is_empty() {
            Err(Error::TrivialLattice)
        } else {
            Ok(())
        }
    }

    /// An antichain inside `L ∖ {0̂, 1̂}` meeting every maximal chain.
    pub fn is_crosscut(&self, c: Subset) -> Result<bool> {
        self.check_nontrivial()?;
        if c.is_empty() || !c.is_subset_of(self.interior()) || !self.poset.is_antichain(c) {
            return Ok(false);
        }
        // Every maximal chain meets C iff 1̂ cannot be reached from 0̂ by
        // cover steps that avoid C.
        let mut reached = Subset::singleton(self.bottom);
        let mut frontier = vec![self.bottom];
        while let Some(x) = frontier.pop() {
            for y in 0..self.len() {
                if !reached.contains(y) && !c.contains(y) && self.covers(x, y) {
                    reached = reached.with(y);
                    frontier.push(y);
                }
            }
        }
        Ok(!reached.contains(self.top))
    }

    /// Every crosscut, by exhaustive search over antichains of the interior.
    pub fn all_crosscuts(&self) -> Result<Vec<Subset>> {
        self.check_nontrivial()?;
        let interior = self.interior();
        check_cap("crosscut search", interior.len(), CROSSCUT_SEARCH_CAP)?;
        let mut out = Vec::new();
        for c in interior.subsets() {
            if self.is_crosscut(c)? {
                out.push(c);
            }
        }
        Ok(out)
    }
}

/// A crosscut `C` with a partial order `⊴` on it. Position `i` of `⊴` is the
/// `i`-th element of `C` in lattice input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crosscut {
    elements: Vec<usize>,
    order: FinitePoset,
}

impl Crosscut {
    /// `pairs` are `(c, d)` with `c ⊴ d`, given by position in `elements`.
    pub fn new(lattice: &FiniteLattice, elements: Subset, pairs: &[(usize, usize)]) -> Result<Self> {
        if !lattice.is_crosscut(elements)? {
            return Err(Error::NotACrosscut(format!(
                "{:?}",
                elements.iter().map(|x| lattice.label(x)).collect::<Vec<_>>()
            )));
        }
        check_cap("crosscut size", elements.len(), CROSSCUT_CAP)?;
        let elements: Vec<usize> = elements.iter().collect();
        let labels = elements.iter().map(|&x| lattice.label(x).to_string()).collect();
        let order = FinitePoset::from_relation(labels, pairs)?;
        Ok(Crosscut { elements, order })
    }

    /// `⊴` given by label pairs.
    pub fn from_labels<S: AsRef<str>>(
        lattice: &FiniteLattice,
        elements: &[S],
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let set = elements.iter().try_fold(Subset::EMPTY, |acc, l| {
            Ok::<_, Error>(acc.with(lattice.index_of(l.as_ref())?))
        })?;
        let positions: Vec<usize> = set.iter().collect();
        let pos = |l: &str| -> Result<usize> {
            let x = lattice.index_of(l)?;
            positions
                .iter()
                .position(|&p| p == x)
                .ok_or_else(|| Error::NotACrosscut(format!("`{l}` is not in the crosscut")))
        };
        let idx = pairs
            .iter()
            .map(|(a, b)| Ok((pos(a.as_ref())?, pos(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, set, &idx)
    }

    /// Crosscut with `⊴` the total incomparability order.
    pub fn antichain(lattice: &FiniteLattice, elements: Subset) -> Result<Self> {
        Self::new(lattice, elements, &[])
    }

    /// Crosscut with `⊴` the lattice input order of its elements.
    pub fn linear(lattice: &FiniteLattice, elements: Subset) -> Result<Self> {
        let k = elements.len();
        let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Self::new(lattice, elements, &pairs)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Lattice indices of the elements, in position order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    /// Positions as a ground set, for the engine.
    fn lattice_set(&self, a: Subset) -> Subset {
        Subset::from_indices(a.iter().map(|i| self.elements[i]))
    }
}

/// A member of `ℬ` (as crosscut positions) and its witness
/// `c(B) = min_{b ∈ B} c(B, b)` in the linear extension of `⊴`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessedSet {
    pub set: Subset,
    pub witness: usize,
}

/// The restricted crosscut sum next to the unrestricted one and to `μ(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscutSum {
    pub restricted: i64,
    pub unrestricted: i64,
    pub mobius: i64,
    /// Outcome of the exhaustive cancellation check when `|C| ≤ 18`.
    pub cancellation_holds: Option<bool>,
}

impl CrosscutSum {
    pub fn holds(&self) -> bool {
        self.restricted == self.mobius
            && self.unrestricted == self.mobius
            && self.cancellation_holds != Some(false)
    }
}

/// `f(A) = (-1)^{|A|}` if `⋀A = 0̂` (unless `atoms_mode`) and `⋁A = 1̂`, else 0.
fn crosscut_term(l: &FiniteLattice, cc: &Crosscut, a: Subset, atoms_mode: bool) -> i64 {
    let set = cc.lattice_set(a);
    let meet_ok = atoms_mode || l.meet_of(set) == l.bottom();
    if meet_ok && l.join_of(set) == l.top() {
        if a.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// `Σ_{A ⊆ C, ⋀A = 0̂, ⋁A = 1̂} (-1)^{|A|}`.
pub fn rota_crosscut(l: &FiniteLattice, cc: &Crosscut) -> Result<i64> {
    rota_crosscut_mode(l, cc, false)
}

/// [`rota_crosscut`], optionally dropping the meet condition (meant for
/// `C = A(L)`, where it is automatic).
pub fn rota_crosscut_mode(l: &FiniteLattice, cc: &Crosscut, atoms_mode: bool) -> Result<i64> {
    let ground = OrderedGroundSet::indexed_with_cap(cc.len(), CROSSCUT_CAP)?;
    sum_full(&|a: Subset| crosscut_term(l, cc, a, atoms_mode), &ground)
}

/// All nonempty `B ⊆ C` such that each `b ∈ B` has some `c ◁ b` in `C` with
/// `⋀B < c < ⋁B` (only `c < ⋁B` in `atoms_mode`).
pub fn blass_sagan_b(l: &FiniteLattice, cc: &Crosscut, atoms_mode: bool) -> Result<Vec<WitnessedSet>> {
    let k = cc.len();
    check_cap("crosscut size", k, CROSSCUT_CAP)?;
    let ext = cc.order.linear_extension();
    let mut rank = vec![0; k];
    for (r, &p) in ext.iter().enumerate() {
        rank[p] = r;
    }
    let mut out = Vec::new();
    for b in Subset::full(k).subsets().skip(1) {
        let set = cc.lattice_set(b);
        let (m, j) = (l.meet_of(set), l.join_of(set));
        let mut witness: Option<usize> = None;
        let mut all = true;
        for x in b.iter() {
            // Smallest valid c(B, x) in the linear extension.
            let best = ext.iter().copied().find(|&c| {
                let e = cc.elements[c];
                cc.order.lt(c, x) && (atoms_mode || l.lt(m, e)) && l.lt(e, j)
            });
            match best {
                None => {
                    all = false;
                    break;
                }
                Some(c) => {
                    if witness.is_none_or(|w| rank[c] < rank[w]) {
                        witness = Some(c);
                    }
                }
            }
        }
        if all {
            out.push(WitnessedSet {
                set: b,
                witness: witness.expect("B is nonempty"),
            });
        }
    }
    Ok(out)
}

/// The crosscut sum restricted by `sub` (a subfamily of `ℬ`; all of `ℬ` when
/// `None`), evaluated with the broken-circuit engine on the reversed linear
/// extension of `⊴`, so that `min C'` becomes the maximum.
pub fn blass_sagan_mu(
    l: &FiniteLattice,
    cc: &Crosscut,
    sub: Option<&[Subset]>,
    atoms_mode: bool,
) -> Result<CrosscutSum> {
    let family = blass_sagan_b(l, cc, atoms_mode)?;
    let chosen: Vec<WitnessedSet> = match sub {
        None => family.clone(),
        Some(sets) => sets
            .iter()
            .map(|s| {
                family.iter().find(|w| w.set == *s).copied().ok_or_else(|| {
                    Error::precondition(
                        "each chosen set belongs to the Blass-Sagan family",
                        format!(
                            "{:?} does not qualify",
                            s.iter().map(|i| l.label(cc.elements[i])).collect::<Vec<_>>()
                        ),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?,
    };

    let k = cc.len();
    let ext = cc.order.linear_extension();
    // Engine position p holds crosscut position ext[k - 1 - p].
    let mut pos_of = vec![0; k];
    for (r, &c) in ext.iter().enumerate() {
        pos_of[c] = k - 1 - r;
    }
    let to_engine = |s: Subset| Subset::from_indices(s.iter().map(|c| pos_of[c]));
    let from_engine = |s: Subset| Subset::from_indices(s.iter().map(|p| ext[k - 1 - p]));
    let ground = OrderedGroundSet::indexed_with_cap(k, CROSSCUT_CAP)?;
    let f = |a: Subset| crosscut_term(l, cc, from_engine(a), atoms_mode);

    let cancellation_holds = if k <= DEFAULT_BRUTE_FORCE_CAP {
        let circuits: Vec<Subset> = family.iter().map(|w| to_engine(w.set.with(w.witness))).collect();
        let fam = CircuitFamily::new(&ground, circuits)?;
        Some(matches!(
            verify_cancellation(&f, &fam, &ground)?,
            CancellationReport::Holds { .. }
        ))
    } else {
        None
    };
    let broken: Vec<Subset> = chosen.iter().map(|w| to_engine(w.set)).collect();
    let restricted = sum_pruned(&f, &ground, &broken)?;
    let unrestricted = rota_crosscut_mode(l, cc, atoms_mode)?;
    Ok(CrosscutSum {
        restricted,
        unrestricted,
        mobius: l.mobius(),
        cancellation_holds,
    })
}

/// Whether `w.set = C' ∖ {min C'}` with `C' = w.set ∪ {w.witness}` and the
/// minimum taken in the linear extension of `⊴`.
pub fn witness_is_minimum(cc: &Crosscut, w: &WitnessedSet) -> bool {
    let ext = cc.order.linear_extension();
    let circuit = w.set.with(w.witness);
    let min = ext.iter().copied().find(|&c| circuit.contains(c));
    min == Some(w.witness) && circuit.without(w.witness) == w.set
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let b3 = FiniteLattice::boolean(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.label(b3.bottom()), "∅");
        assert_eq!(b3.label(b3.top()), "123");
        let p3 = FiniteLattice::partition(3).unwrap();
        assert_eq!(p3.len(), 5);
        assert_eq!(p3.atoms().len(), 3);
        assert_eq!(FiniteLattice::partition(4).unwrap().len(), 15);
        let d30 = FiniteLattice::divisor(30).unwrap();
        assert_eq!(d30.len(), 8);
        assert_eq!(d30.atoms().len(), 3);
        assert_eq!(d30.coatoms().len(), 3);
    }

    #[test]
    fn rejects_non_lattices() {
        // Two minimal elements below a common top.
        let r = FiniteLattice::from_covers(vec!["a".into(), "b".into(), "t".into()], &[(0, 2), (1, 2)]);
        assert!(matches!(r, Err(Error::NotALattice(..))));
        // Bowtie: a, b < c, d.
        let r = FiniteLattice::from_covers(
            vec![
                "0".into(),
                "a".into(),
                "b".into(),
                "c".into(),
                "d".into(),
                "1".into(),
            ],
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        );
        assert!(matches!(r, Err(Error::NotALattice(..))));
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(FiniteLattice::boolean(3).unwrap().mobius(), -1);
        assert_eq!(FiniteLattice::divisor(12).unwrap().mobius(), 0);
        assert_eq!(FiniteLattice::partition(3).unwrap().mobius(), 2);
        assert_eq!(FiniteLattice::partition(4).unwrap().mobius(), -6);
        assert_eq!(FiniteLattice::chain(3).unwrap().mobius(), 0);
        assert_eq!(FiniteLattice::chain(1).unwrap().mobius(), 1);
    }

    #[test]
    fn crosscut_recognition() {
        let b3 = FiniteLattice::boolean(3).unwrap();
        assert!(b3.is_crosscut(b3.atoms()).unwrap());
        assert!(b3.is_crosscut(b3.coatoms()).unwrap());
        let one_atom = Subset::singleton(b3.atoms().min().unwrap());
        assert!(!b3.is_crosscut(one_atom).unwrap());
        assert!(matches!(
            FiniteLattice::chain(2).unwrap().is_crosscut(Subset::EMPTY),
            Err(Error::TrivialLattice)
        ));
        let crosscuts = FiniteLattice::boolean(2).unwrap().all_crosscuts().unwrap();
        assert_eq!(crosscuts.len(), 1);
    }

    #[test]
    fn rota_examples() {
        let b2 = FiniteLattice::boolean(2).unwrap();
        let cc = Crosscut::antichain(&b2, b2.atoms()).unwrap();
        assert_eq!(rota_crosscut(&b2, &cc).unwrap(), 1);
        let p3 = FiniteLattice::partition(3).unwrap();
        let cc = Crosscut::antichain(&p3, p3.atoms()).unwrap();
        assert_eq!(rota_crosscut(&p3, &cc).unwrap(), 2);
        let b3 = FiniteLattice::boolean(3).unwrap();
        let cc = Crosscut::antichain(&b3, b3.coatoms()).unwrap();
        assert_eq!(rota_crosscut(&b3, &cc).unwrap(), -1);
    }

    #[test]
    fn blass_sagan_family() {
        let b3 = FiniteLattice::boolean(3).unwrap();
        let anti = Crosscut::antichain(&b3, b3.atoms()).unwrap();
        assert!(blass_sagan_b(&b3, &anti, false).unwrap().is_empty());
        // In B3 the join of two atoms lies above no third atom.
        let lin = Crosscut::linear(&b3, b3.atoms()).unwrap();
        assert!(blass_sagan_b(&b3, &lin, false).unwrap().is_empty());
        let r = blass_sagan_mu(&b3, &lin, None, false).unwrap();
        assert_eq!(r.restricted, -1);
        assert!(r.holds());

        let p3 = FiniteLattice::partition(3).unwrap();
        let lin = Crosscut::linear(&p3, p3.atoms()).unwrap();
        let fam = blass_sagan_b(&p3, &lin, false).unwrap();
        assert_eq!(
            fam,
            [WitnessedSet {
                set: Subset::from_indices([1, 2]),
                witness: 0
            }]
        );
        assert!(fam.iter().all(|w| witness_is_minimum(&lin, w)));
        let r = blass_sagan_mu(&p3, &lin, None, false).unwrap();
        assert_eq!((r.restricted, r.unrestricted, r.mobius), (2, 2, 2));
        assert_eq!(r.cancellation_holds, Some(true));
        assert!(fam.iter().all(|w| w.set.len() > 1));
    }

    #[test]
    fn blass_sagan_subfamily_validation() {
        let p3 = FiniteLattice::partition(3).unwrap();
        let lin = Crosscut::linear(&p3, p3.atoms()).unwrap();
        let empty: [Subset; 0] = [];
        let r = blass_sagan_mu(&p3, &lin, Some(&empty), false).unwrap();
        assert_eq!(r.restricted, rota_crosscut(&p3, &lin).unwrap());
        let bad = [Subset::from_indices([0, 1])];
        assert!(matches!(
            blass_sagan_mu(&p3, &lin, Some(&bad), false),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn partition4_atoms() {
        let p4 = FiniteLattice::partition(4).unwrap();
        let lin = Crosscut::linear(&p4, p4.atoms()).unwrap();
        let r = blass_sagan_mu(&p4, &lin, None, false).unwrap();
        assert_eq!((r.restricted, r.unrestricted), (-6, -6));
        assert!(r.holds());
        let atoms_mode = blass_sagan_mu(&p4, &lin, None, true).unwrap();
        assert_eq!(atoms_mode.restricted, -6);
    }

    #[test]
    fn crosscut_from_labels() {
        let b3 = FiniteLattice::boolean(3).unwrap();
        let cc = Crosscut::from_labels(&b3, &["1", "2", "3"], &[("1", "2")]).unwrap();
        assert!(cc.order().lt(0, 1));
        assert!(Crosscut::from_labels(&b3, &["1", "2"], &[]).is_err());
    }
}

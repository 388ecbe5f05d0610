//! Finite partial orders on at most 64 elements.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A finite poset. `up[i]` is the set of all `j` with `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `pairs` (each `(a, b)` meaning
    /// `a ≤ b`) and rejects it if the closure is not antisymmetric.
    pub fn from_relation(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        check_labels(&labels)?;
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "relation pair ({a}, {b}) out of range"
                )));
            }
            up[a] = up[a].with(b);
        }
        // Warshall on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    /// Builds a poset from a `≤` predicate, verifying the partial-order axioms.
    pub fn from_leq(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        check_labels(&labels)?;
        let up: Vec<Subset> = (0..n)
            .map(|i| Subset::from_indices((0..n).filter(|&j| leq(i, j))))
            .collect();
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::NotAPartialOrder(format!(
                    "`{}` is not ≤ itself",
                    labels[i]
                )));
            }
            for j in up[i].iter() {
                if !up[j].is_subset_of(up[i]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "transitivity fails through `{}` ≤ `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<Subset>) -> Result<Self> {
        let n = labels.len();
        for (i, u) in up.iter().enumerate() {
            for j in u.iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAPartialOrder(format!(
                        "`{}` and `{}` are mutually related",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let mut down = alloc::vec![Subset::EMPTY; n];
        for (i, u) in up.iter().enumerate() {
            for j in u.iter() {
                down[j] = down[j].with(i);
            }
        }
        Ok(FinitePoset { labels, up, down })
    }

    /// `n` elements with `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        Self::from_leq(numbered(n), |a, b| a <= b)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_leq(numbered(n), |a, b| a == b)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{j : i ≤ j}`.
    pub fn up_set(&self, i: usize) -> Subset {
        self.up[i]
    }

    /// `{j : j ≤ i}`.
    pub fn down_set(&self, i: usize) -> Subset {
        self.down[i]
    }

    pub fn maximal_elements(&self) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&i| self.up[i].len() == 1))
    }

    pub fn minimal_elements(&self) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&i| self.down[i].len() == 1))
    }

    /// The lexicographically smallest linear extension with respect to the
    /// element input order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = Subset::EMPTY;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .find(|&i| !placed.contains(i) && self.down[i].without(i).is_subset_of(placed))
                .expect("a finite poset always has a minimal unplaced element");
            placed = placed.with(next);
            order.push(next);
        }
        order
    }

    /// Least upper bound of `a` and `b`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let uppers = self.up[a].intersection(self.up[b]);
        uppers.iter().find(|&u| uppers.is_subset_of(self.up[u]))
    }

    /// Greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lowers = self.down[a].intersection(self.down[b]);
        lowers.iter().find(|&l| lowers.is_subset_of(self.down[l]))
    }

    /// Checks that every pair has a least upper bound.
    pub fn check_upper_semilattice(&self) -> Result<()> {
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.join(a, b).is_none() {
                    return Err(Error::NotASemilattice(
                        self.labels[a].clone(),
                        self.labels[b].clone(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Whether the elements of `set` are pairwise comparable.
    pub fn is_chain(&self, set: Subset) -> bool {
        set.iter().all(|a| {
            let comparable = self.up[a].union(self.down[a]);
            set.is_subset_of(comparable)
        })
    }

    pub fn is_antichain(&self, set: Subset) -> bool {
        set.iter().all(|a| {
            let comparable = self.up[a].union(self.down[a]);
            set.intersection(comparable) == Subset::singleton(a)
        })
    }

    /// The poset with the order reversed.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// The induced sub-poset on `keep`, re-indexed in increasing order.
    pub fn restrict(&self, keep: Subset) -> FinitePoset {
        let idx: Vec<usize> = keep.iter().collect();
        let remap = |s: Subset| {
            Subset::from_indices(
                idx.iter()
                    .enumerate()
                    .filter(|(_, &old)| s.contains(old))
                    .map(|(new, _)| new),
            )
        };
        FinitePoset {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            up: idx.iter().map(|&i| remap(self.up[i])).collect(),
            down: idx.iter().map(|&i| remap(self.down[i])).collect(),
        }
    }
}

pub(crate) fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub(crate) fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::cap("poset elements", labels.len(), MAX_ELEMENTS));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn vee() -> FinitePoset {
        // s, t below top
        FinitePoset::from_relation(vec!["s".into(), "t".into(), "top".into()], &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn closure_and_maxima() {
        let p = FinitePoset::from_relation(numbered(3), &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.maximal_elements(), Subset::singleton(2));
        assert!(p.is_chain(p.all()));
    }

    #[test]
    fn cycle_is_rejected() {
        let err = FinitePoset::from_relation(numbered(2), &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotAPartialOrder(_)));
    }

    #[test]
    fn joins_in_a_vee() {
        let p = vee();
        assert_eq!(p.join(0, 1), Some(2));
        assert_eq!(p.meet(0, 1), None);
        assert!(p.check_upper_semilattice().is_ok());
        assert!(p.dual().check_upper_semilattice().is_err());
        assert!(p.is_antichain(Subset::from_indices([0, 1])));
    }

    #[test]
    fn linear_extension_prefers_input_order() {
        let p = FinitePoset::from_relation(numbered(3), &[(2, 0)]).unwrap();
        assert_eq!(p.linear_extension(), vec![1, 2, 0]);
    }

    #[test]
    fn restriction_reindexes() {
        let p = FinitePoset::chain(4).unwrap();
        let r = p.restrict(Subset::from_indices([1, 3]));
        assert_eq!(r.len(), 2);
        assert!(r.lt(0, 1));
        assert_eq!(r.label(1), "3");
    }
}

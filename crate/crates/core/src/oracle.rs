//! Naive referees for the restricted sums.
//!
//! Nothing here goes through the engines or the per-module enumeration
//! helpers: colourings are counted map by map, components are found by a local
//! flood fill, dominating sets are checked vertex by vertex, and Möbius values
//! come from the recursion on upper intervals. The point is that a bug in an
//! engine cannot be mirrored here.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;

/// Bound on `x^|V|` for colouring enumeration.
pub const COLOURING_CAP: u64 = 10_000_000;
/// Bound on `|V|` for dominating-set enumeration.
pub const DOMINATING_CAP: usize = 20;
/// Bound on the ground size for other exhaustive oracles.
pub const SUBSET_CAP: usize = 20;

fn maps_cap(x: u64, n: usize) -> Result<u64> {
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(x));
    match total {
        Some(t) if t <= COLOURING_CAP => Ok(t),
        _ => Err(crate::Error::cap(
            "colouring maps",
            usize::MAX,
            COLOURING_CAP as usize,
        )),
    }
}

/// Decodes map number `m` into a colour per vertex (base `x` digits).
fn decode(mut m: u64, x: u64, n: usize, out: &mut [u64]) {
    for slot in out.iter_mut().take(n) {
        *slot = m % x;
        m /= x;
    }
}

/// Number of proper `x`-colourings of `g`.
pub fn colourings(g: &Graph, x: u64) -> Result<u64> {
    let n = g.vertex_count();
    if x == 0 {
        return Ok(u64::from(n == 0));
    }
    let total = maps_cap(x, n)?;
    let mut colour = vec![0; n];
    let mut count = 0;
    for m in 0..total {
        decode(m, x, n, &mut colour);
        if g.edges().iter().all(|&(u, v)| colour[u] != colour[v]) {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of `x`-colourings of `h` with no monochromatic edge.
pub fn hyper_colourings(h: &Hypergraph, x: u64) -> Result<u64> {
    let n = h.vertex_count();
    if x == 0 {
        return Ok(u64::from(n == 0));
    }
    let total = maps_cap(x, n)?;
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.iter().collect()).collect();
    let mut colour = vec![0; n];
    let mut count = 0;
    for m in 0..total {
        decode(m, x, n, &mut colour);
        let proper = edges.iter().all(|e| e.iter().any(|&v| colour[v] != colour[e[0]]));
        if proper {
            count += 1;
        }
    }
    Ok(count)
}

/// `d_k(G)` for `k = 0..=|V|`: the number of `k`-subsets `A` with `N[A] = V`.
pub fn dominating(g: &Graph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    check_cap("vertices", n, DOMINATING_CAP)?;
    let mut counts = vec![0; n + 1];
    for mask in 0u64..(1 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let dominated = (0..n).all(|v| {
            inside(v)
                || g.edges()
                    .iter()
                    .any(|&(a, b)| (a == v && inside(b)) || (b == v && inside(a)))
        });
        if dominated {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Components of the graph on `vertices` whose edges are those of `edges`
/// with both ends inside, found by flood fill.
fn flood_components(n: usize, inside: impl Fn(usize) -> bool, edges: &[(usize, usize)]) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if !inside(start) || seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if inside(w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Coefficients `q[i][j]` of `Q(G, x, y)`: the number of vertex subsets of
/// size `i` whose induced subgraph has `j` components.
pub fn subgraph_components(g: &Graph) -> Result<Vec<Vec<u64>>> {
    let n = g.vertex_count();
    check_cap("vertices", n, SUBSET_CAP)?;
    let mut q = vec![vec![0; n + 1]; n + 1];
    for mask in 0u64..(1 << n) {
        let c = flood_components(n, |v| mask >> v & 1 == 1, g.edges());
        q[mask.count_ones() as usize][c] += 1;
    }
    Ok(q)
}

/// Coefficients of `P(G, x)` by deletion over edge subsets with a local
/// flood fill: `Σ_A (-1)^{|A|} x^{c(A)}`, returned lowest degree first.
pub fn chromatic_coefficients(g: &Graph) -> Result<Vec<BigInt>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    check_cap("edges", m, SUBSET_CAP)?;
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for mask in 0u64..(1 << m) {
        let chosen: Vec<(usize, usize)> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| g.edges()[i])
            .collect();
        let c = flood_components(n, |_| true, &chosen);
        if mask.count_ones() % 2 == 0 {
            coeffs[c] += 1;
        } else {
            coeffs[c] -= 1;
        }
    }
    Ok(coeffs)
}

/// `μ(0̂, 1̂)` through `μ(x, 1̂) = -Σ_{x < y} μ(y, 1̂)`, reading only the order
/// relation.
pub fn mobius(l: &FiniteLattice) -> i64 {
    let n = l.len();
    let mut mu: Vec<Option<i64>> = vec![None; n];
    // Repeatedly settle elements whose strict upper bounds are all settled.
    while mu.iter().any(Option::is_none) {
        for x in 0..n {
            if mu[x].is_some() {
                continue;
            }
            let above: Vec<usize> = (0..n).filter(|&y| y != x && l.leq(x, y)).collect();
            if above.iter().all(|&y| mu[y].is_some()) {
                mu[x] = Some(if above.is_empty() {
                    1
                } else {
                    -above.iter().map(|&y| mu[y].unwrap_or(0)).sum::<i64>()
                });
            }
        }
    }
    let bottom = (0..n)
        .find(|&x| (0..n).all(|y| l.leq(x, y)))
        .expect("lattices have a bottom");
    mu[bottom].unwrap_or(0)
}

/// `|S_1 ∪ ... ∪ S_m|` by collecting the elements.
pub fn union_size(sets: &[Vec<usize>]) -> usize {
    sets.iter().flatten().collect::<BTreeSet<_>>().len()
}

/// Every chain of `poset` (including the empty one), as sorted index lists.
pub fn chains(poset: &FinitePoset) -> Result<Vec<Vec<usize>>> {
    let n = poset.len();
    check_cap("poset size", n, SUBSET_CAP)?;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let is_chain = members
            .iter()
            .all(|&a| members.iter().all(|&b| poset.leq(a, b) || poset.leq(b, a)));
        if is_chain {
            out.push(members);
        }
    }
    Ok(out)
}

/// Rank of every subset of a matroid given by its circuits (as bitmasks), by
/// brute force over subsets.
pub fn matroid_rank_table(ground: usize, circuits: &[u64]) -> Result<Vec<usize>> {
    check_cap("matroid ground set", ground, 14)?;
    let independent = |s: u64| circuits.iter().all(|&c| c & s != c);
    let mut rank = vec![0; 1 << ground];
    for s in 0u64..(1 << ground) {
        let mut best = 0;
        let mut t = s;
        // Walk every subset of `s`.
        loop {
            if independent(t) {
                best = best.max(t.count_ones() as usize);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        rank[s as usize] = best;
    }
    Ok(rank)
}

/// `χ(M, x) = Σ_A (-1)^{|A|} x^{r(E) - r(A)}`, lowest degree first.
pub fn characteristic_coefficients(ground: usize, circuits: &[u64]) -> Result<Vec<i64>> {
    let rank = matroid_rank_table(ground, circuits)?;
    let full = rank[(1usize << ground) - 1];
    let mut coeffs = vec![0; full + 1];
    for (s, &r) in rank.iter().enumerate() {
        coeffs[full - r] += if s.count_ones() % 2 == 0 { 1 } else { -1 };
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colouring_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(colourings(&k3, 3).unwrap(), 6);
        assert_eq!(colourings(&k3, 2).unwrap(), 0);
        assert_eq!(colourings(&Graph::empty(2).unwrap(), 2).unwrap(), 4);
        assert!(colourings(&Graph::complete(12).unwrap(), 10).is_err());
    }

    #[test]
    fn hyper_colouring_examples() {
        let labels = vec!["a".into(), "b".into(), "c".into()];
        let h = Hypergraph::new(labels.clone(), vec![crate::Subset::full(3)]).unwrap();
        assert_eq!(hyper_colourings(&h, 2).unwrap(), 6);
        assert_eq!(hyper_colourings(&h, 1).unwrap(), 0);
        let e = Hypergraph::new(labels, vec![]).unwrap();
        assert_eq!(hyper_colourings(&e, 3).unwrap(), 27);
    }

    #[test]
    fn dominating_examples() {
        assert_eq!(dominating(&Graph::path(2).unwrap()).unwrap(), [0, 2, 1]);
        assert_eq!(dominating(&Graph::empty(1).unwrap()).unwrap(), [0, 1]);
        assert_eq!(dominating(&Graph::path(3).unwrap()).unwrap(), [0, 1, 3, 1]);
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(&FiniteLattice::boolean(3).unwrap()), -1);
        assert_eq!(mobius(&FiniteLattice::chain(3).unwrap()), 0);
        assert_eq!(mobius(&FiniteLattice::partition(3).unwrap()), 2);
        assert_eq!(mobius(&FiniteLattice::chain(1).unwrap()), 1);
    }

    #[test]
    fn misc() {
        assert_eq!(union_size(&[vec![0, 1], vec![1, 2]]), 3);
        let k3 = Graph::complete(3).unwrap();
        let c: Vec<i64> = chromatic_coefficients(&k3)
            .unwrap()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(c, [0, 2, -3, 1]);
        assert_eq!(chains(&FinitePoset::antichain(3).unwrap()).unwrap().len(), 4);
        // U_{2,3}: the only circuit is the whole ground set.
        assert_eq!(characteristic_coefficients(3, &[0b111]).unwrap(), [2, -3, 1]);
        let q = subgraph_components(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(q[3][1], 1);
        assert_eq!(q[2][1], 3);
    }
}

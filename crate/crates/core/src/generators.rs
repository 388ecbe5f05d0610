//! Seeded random instances for property checks.
//!
//! Every generator takes the caller's RNG, so a fixed seed reproduces the
//! instance.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::convex::{order_ideal_geometry, planar_geometry, subtree_geometry, ConvexGeometry};
use crate::engine::{CircuitFamily, OrderedGroundSet};
use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::poset::FinitePoset;
use crate::subset::Subset;

/// `G(n, p)` on vertices `1..=n`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new((1..=n).map(|i| i.to_string()).collect(), edges)
}

/// A connected graph: a random spanning tree plus `G(n, p)` edges.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(
        (1..=n).map(|i| i.to_string()).collect(),
        edges.into_iter().collect(),
    )
}

/// Edge bitmask of a graph on `n ≤ 7` vertices: pair `(u, v)`, `u < v`, gets
/// the bit `pair_index`.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn canonical(n: usize, mask: u32, perms: &[Vec<usize>]) -> u32 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0u32, |acc, (_, &(u, v))| acc | 1 << pair_index(n, p[u], p[v]))
        })
        .min()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// One representative of every isomorphism class of graphs on `n ≤ 6`
/// vertices, built by adding a vertex to each class on `n - 1` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    check_cap("vertices for isomorphism classes", n, 6)?;
    let mut classes: Vec<u32> = vec![0];
    for k in 1..=n {
        let perms = permutations(k);
        let mut seen = BTreeSet::new();
        for &mask in &classes {
            // Re-index the (k-1)-vertex mask into k-vertex pair indices.
            let mut base = 0u32;
            for u in 0..k.saturating_sub(1) {
                for v in u + 1..k - 1 {
                    if mask >> pair_index(k - 1, u, v) & 1 == 1 {
                        base |= 1 << pair_index(k, u, v);
                    }
                }
            }
            for nbrs in 0u32..1 << (k - 1) {
                let mut m = base;
                for u in 0..k - 1 {
                    if nbrs >> u & 1 == 1 {
                        m |= 1 << pair_index(k, u, k - 1);
                    }
                }
                seen.insert(canonical(k, m, &perms));
            }
        }
        classes = seen.into_iter().collect();
    }
    classes
        .into_iter()
        .map(|mask| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| mask >> pair_index(n, u, v) & 1 == 1)
                .collect();
            Graph::new((1..=n).map(|i| i.to_string()).collect(), edges)
        })
        .collect()
}

/// `m` distinct random `r`-edges on `n` vertices.
pub fn random_uniform_hypergraph(n: usize, r: usize, m: usize, rng: &mut impl Rng) -> Result<Hypergraph> {
    if r < 2 || r > n {
        return Err(Error::InvalidInput(format!("edge size {r} must lie in 2..={n}")));
    }
    let all: Vec<Subset> = Subset::full(n).subsets().filter(|s| s.len() == r).collect();
    let m = m.min(all.len());
    let edges: Vec<Subset> = all.choose_multiple(rng, m).copied().collect();
    Hypergraph::new((1..=n).map(|i| i.to_string()).collect(), edges)
}

/// A partial order on `0..n`: each pair, oriented along a random
/// permutation, is related with probability `p`, then transitively closed.
pub fn random_poset(n: usize, p: f64, rng: &mut impl Rng) -> Result<FinitePoset> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    FinitePoset::from_relation((0..n).map(|i| i.to_string()).collect(), &pairs)
}

/// Pairs `(a, b)` with `a < b` of a poset, for rebuilding it elsewhere.
pub fn relation_pairs(poset: &FinitePoset) -> Vec<(usize, usize)> {
    let n = poset.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| poset.lt(a, b))
        .collect()
}

/// An antimatroid generated by `words` random shelling orders; the closed
/// sets are the complements of its feasible sets.
pub fn random_antimatroid_geometry(n: usize, words: usize, rng: &mut impl Rng) -> Result<ConvexGeometry> {
    let ground = OrderedGroundSet::indexed(n)?;
    check_cap("closure system ground set", n, crate::convex::CLOSURE_CAP)?;
    let mut feasible = BTreeSet::new();
    feasible.insert(Subset::EMPTY);
    for _ in 0..words.max(1) {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut prefix = Subset::EMPTY;
        for &x in &order {
            prefix = prefix.with(x);
            feasible.insert(prefix);
        }
    }
    // Close under union.
    let mut family: Vec<Subset> = feasible.iter().copied().collect();
    let mut i = 0;
    while i < family.len() {
        for j in 0..i {
            let u = family[i].union(family[j]);
            if feasible.insert(u) {
                family.push(u);
            }
        }
        i += 1;
    }
    let all = ground.all();
    let closed: Vec<Subset> = feasible.iter().map(|&f| all.difference(f)).collect();
    ConvexGeometry::from_closed_sets(ground, &closed)
}

/// A random tree on `n` vertices as a parent vector.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    (0..n)
        .map(|i| if i == 0 { 0 } else { rng.gen_range(0..i) })
        .collect()
}

/// Distinct random points in `[0, span)²`.
pub fn random_points(n: usize, span: i64, rng: &mut impl Rng) -> Vec<(i64, i64)> {
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert((rng.gen_range(0..span), rng.gen_range(0..span)));
    }
    let mut pts: Vec<_> = seen.into_iter().collect();
    pts.shuffle(rng);
    pts
}

/// A convex geometry of one of the four shapes (antimatroid words, order
/// ideals, subtrees, planar points), chosen by `kind % 4`.
pub fn random_convex_geometry(n: usize, kind: usize, rng: &mut impl Rng) -> Result<ConvexGeometry> {
    match kind % 4 {
        0 => {
            let words = rng.gen_range(1..=3);
            random_antimatroid_geometry(n, words, rng)
        }
        1 => order_ideal_geometry(&random_poset(n, 0.3, rng)?),
        2 => subtree_geometry(&random_tree(n, rng)),
        _ => planar_geometry(&random_points(n, 8, rng)),
    }
}

/// Closure of `a` under "contains `C ∖ {max C}`, so add `max C`".
fn broken_closure(a: Subset, circuits: &[Subset]) -> Subset {
    let mut cur = a;
    loop {
        let next = circuits.iter().fold(cur, |acc, &c| {
            let m = c.max().expect("circuits are nonempty");
            if c.without(m).is_subset_of(acc) {
                acc.with(m)
            } else {
                acc
            }
        });
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// A ground set `0..n`, random circuits, and values `g` on the closure of
/// each subset. `f(A) = (-1)^{|A|} g(cl(A))` cancels along every circuit.
#[derive(Clone, Debug)]
pub struct CancellingInstance {
    pub ground: OrderedGroundSet,
    pub circuits: CircuitFamily,
    values: Vec<i64>,
}

impl CancellingInstance {
    pub fn eval(&self, a: Subset) -> i64 {
        let c = broken_closure(a, self.circuits.circuits());
        let v = self.values[c.bits() as usize];
        if a.len().is_multiple_of(2) {
            v
        } else {
            -v
        }
    }
}

/// `k` random circuits of sizes `2..=max_size` on `n ≤ 16` elements.
pub fn random_cancelling_instance(
    n: usize,
    k: usize,
    max_size: usize,
    rng: &mut impl Rng,
) -> Result<CancellingInstance> {
    check_cap("ground set", n, 16)?;
    let ground = OrderedGroundSet::indexed(n)?;
    let mut circuits = BTreeSet::new();
    if n >= 2 {
        for _ in 0..k {
            let size = rng.gen_range(2..=max_size.clamp(2, n));
            let mut pool: Vec<usize> = (0..n).collect();
            pool.shuffle(rng);
            circuits.insert(Subset::from_indices(pool[..size].iter().copied()));
        }
    }
    let circuits = CircuitFamily::new(&ground, circuits.into_iter().collect())?;
    let values = (0..1usize << n).map(|_| rng.gen_range(-5..=5)).collect();
    Ok(CancellingInstance {
        ground,
        circuits,
        values,
    })
}

/// `m` random subsets of `0..universe`, each element present with
/// probability `p`.
pub fn random_set_family(m: usize, universe: usize, p: f64, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    (0..m)
        .map(|_| (0..universe).filter(|_| rng.gen_bool(p)).collect())
        .collect()
}

/// A random sub-list, each item kept with probability 1/2.
pub fn random_subfamily<T: Clone>(items: &[T], rng: &mut impl Rng) -> Vec<T> {
    items.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::verify_cancellation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graph_classes() {
        let counts: Vec<usize> = (1..=5).map(|n| nonisomorphic_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
    }

    #[test]
    fn cancelling_instances_cancel() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let inst = random_cancelling_instance(8, 4, 4, &mut rng).unwrap();
            let f = |a: Subset| inst.eval(a);
            assert!(verify_cancellation(&f, &inst.circuits, &inst.ground)
                .unwrap()
                .holds());
        }
    }

    #[test]
    fn geometries_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for kind in 0..8 {
            let g = random_convex_geometry(7, kind, &mut rng).unwrap();
            assert_eq!(g.len(), 7);
        }
    }

    #[test]
    fn connected_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = random_connected_graph(6, 0.2, &mut rng).unwrap();
        assert_eq!(g.components_spanning(Subset::full(g.edge_count())), 1);
    }
}

//! Hypergraph chromatic polynomials restricted by broken circuits.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::IntPolynomial;
use crate::engine::{derive_broken_circuits, sum_full, sum_pruned, CircuitFamily, OrderedGroundSet};
use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::poset::check_labels;
use crate::subset::{Subset, MAX_ELEMENTS};

/// Bound on `|V|` for the tight-cycle search.
pub const TIGHT_CYCLE_VERTEX_CAP: usize = 12;
/// Bound on `m · n` for the rectangle grid.
pub const GRID_CAP: usize = 16;

/// A hypergraph with every edge of size at least 2; the edge order is the
/// ambient linear order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    edges: Vec<Subset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperMethod<'a> {
    Full,
    Restricted(&'a CircuitFamily),
}

/// The rectangle hypergraph of a grid together with its neighbouring-rectangle
/// triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleGrid {
    pub hypergraph: Hypergraph,
    pub circuits: CircuitFamily,
    /// `(row₁, row₂, col₁, col₂)` of each edge, in edge order.
    pub rectangles: Vec<(usize, usize, usize, usize)>,
}

impl Hypergraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Subset>) -> Result<Self> {
        check_labels(&vertices)?;
        let all = Subset::full(vertices.len());
        for (i, e) in edges.iter().enumerate() {
            if e.len() < 2 {
                return Err(Error::InvalidInput(format!(
                    "edge #{i} has fewer than 2 vertices"
                )));
            }
            if !e.is_subset_of(all) {
                return Err(Error::InvalidInput(format!("edge #{i} uses an unknown vertex")));
            }
            if edges[..i].contains(e) {
                return Err(Error::InvalidInput(format!("edge #{i} is repeated")));
            }
        }
        Ok(Hypergraph { vertices, edges })
    }

    pub fn from_labels<S: AsRef<str>>(vertices: Vec<String>, edges: &[Vec<S>]) -> Result<Self> {
        let find = |l: &str| {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::UnknownLabel(l.into()))
        };
        let sets = edges
            .iter()
            .map(|e| {
                let ix = e.iter().map(|l| find(l.as_ref())).collect::<Result<Vec<_>>>()?;
                if ix.len() != Subset::from_indices(ix.iter().copied()).len() {
                    return Err(Error::InvalidInput("edge lists a vertex twice".into()));
                }
                Ok(Subset::from_indices(ix))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, sets)
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        Self::new(
            g.vertices().to_vec(),
            g.edges()
                .iter()
                .map(|&(u, v)| Subset::from_indices([u, v]))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Subset] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as a ground set labelled `{a,b,c}`.
    pub fn edge_ground(&self) -> Result<OrderedGroundSet> {
        check_cap("hyperedge subsets", self.edge_count(), MAX_ELEMENTS)?;
        OrderedGroundSet::new(
            self.edges
                .iter()
                .map(|e| {
                    let names: Vec<&str> = e.iter().map(|v| self.vertices[v].as_str()).collect();
                    format!("{{{}}}", names.join(","))
                })
                .collect(),
        )
    }

    /// The common edge size, if every edge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    /// Components of `(V, A)`, each given as a vertex set.
    fn components(&self, a: Subset) -> Vec<Subset> {
        let mut comps: Vec<Subset> = (0..self.vertex_count()).map(Subset::singleton).collect();
        for i in a.iter() {
            let e = self.edges[i];
            let (touching, rest): (Vec<Subset>, Vec<Subset>) =
                comps.into_iter().partition(|c| !c.intersection(e).is_empty());
            comps = rest;
            comps.push(touching.into_iter().fold(Subset::EMPTY, Subset::union));
        }
        comps
    }

    /// `c(V, A)`.
    pub fn components_spanning(&self, a: Subset) -> usize {
        self.components(a).len()
    }

    /// `(-1)^{|A|} x^{c(V, A)}`.
    pub fn chromatic_term(&self, a: Subset) -> IntPolynomial {
        IntPolynomial::signed_power(a.len() % 2 == 1, self.components_spanning(a))
    }

    fn union_of(&self, c: Subset) -> Subset {
        c.iter().fold(Subset::EMPTY, |acc, i| acc.union(self.edges[i]))
    }

    /// Every edge of every circuit lies inside the union of the other edges
    /// of that circuit.
    pub fn validate_condition_a(&self, circuits: &CircuitFamily) -> bool {
        circuits.circuits().iter().all(|&c| {
            c.iter()
                .all(|i| self.edges[i].is_subset_of(self.union_of(c.without(i))))
        })
    }

    /// Every circuit contains a 2-edge, and the 2-edges form an upset of the
    /// edge order.
    pub fn validate_condition_b(&self, circuits: &CircuitFamily) -> bool {
        let first_pair = self.edges.iter().position(|e| e.len() == 2);
        let upset = match first_pair {
            None => true,
            Some(p) => self.edges[p..].iter().all(|e| e.len() == 2),
        };
        upset
            && circuits
                .circuits()
                .iter()
                .all(|&c| c.iter().any(|i| self.edges[i].len() == 2))
    }

    /// The vertices of `max C` lie in one component of `(V, C ∖ {max C})`.
    /// Both conditions rely on `C` being a cycle, which this confirms in the
    /// form the cancellation argument needs.
    pub fn validate_absorption(&self, circuits: &CircuitFamily) -> bool {
        circuits.circuits().iter().all(|&c| {
            let top = c.max().expect("circuits are nonempty");
            let e = self.edges[top];
            self.components(c.without(top))
                .iter()
                .any(|comp| e.is_subset_of(*comp))
        })
    }

    pub fn chromatic(&self, method: HyperMethod<'_>) -> Result<IntPolynomial> {
        let ground = self.edge_ground()?;
        let f = |a: Subset| self.chromatic_term(a);
        match method {
            HyperMethod::Full => sum_full(&f, &ground),
            HyperMethod::Restricted(circuits) => {
                if circuits.circuits().iter().any(|c| !c.is_subset_of(ground.all())) {
                    return Err(Error::InvalidInput("circuit refers to a missing edge".into()));
                }
                if !self.validate_condition_a(circuits) && !self.validate_condition_b(circuits) {
                    return Err(Error::precondition(
                        "circuits satisfy condition (a) or condition (b)",
                        "neither holds",
                    ));
                }
                if !self.validate_absorption(circuits) {
                    return Err(Error::precondition(
                        "the maximum edge of each circuit is absorbed by the others",
                        "some circuit is not a cycle",
                    ));
                }
                let broken: Vec<Subset> = derive_broken_circuits(circuits).iter().map(|b| b.set).collect();
                sum_pruned(&f, &ground, &broken)
            }
        }
    }

    /// Edge sets of the `l`-tight cycles with at least three edges.
    pub fn tight_cycles(&self, l: usize) -> Result<CircuitFamily> {
        let ground = self.edge_ground()?;
        let Some(r) = self.uniformity() else {
            return Err(Error::precondition("H is uniform", "edges of different sizes"));
        };
        if 2 * l < r || l >= r {
            return Err(Error::precondition("r/2 ≤ l < r", format!("r = {r}, l = {l}")));
        }
        let n = self.vertex_count();
        check_cap("tight-cycle vertices", n, TIGHT_CYCLE_VERTEX_CAP)?;
        let index: BTreeMap<Subset, usize> = self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let step = r - l;
        let mut found: Vec<Subset> = Vec::new();
        let mut k = 3;
        while k * step <= n {
            let len = k * step;
            let mut seq: Vec<usize> = Vec::with_capacity(len);
            tight_search(&index, r, step, len, n, &mut seq, &mut found);
            k += 1;
        }
        found.sort();
        found.dedup();
        CircuitFamily::new(&ground, found)
    }

    /// Axis-parallel rectangles on an `m × n` grid ordered by area, then by
    /// corners; circuits are the triples formed by two rectangles sharing a
    /// side and the rectangle they span.
    pub fn grid_rectangles(m: usize, n: usize) -> Result<RectangleGrid> {
        if m < 2 || n < 2 {
            return Err(Error::InvalidInput("grid sides must be at least 2".into()));
        }
        check_cap("grid points", m * n, GRID_CAP)?;
        let point = |i: usize, j: usize| i * n + j;
        let vertices: Vec<String> = (0..m)
            .flat_map(|i| (0..n).map(move |j| format!("({i},{j})")))
            .collect();
        let mut rects = Vec::new();
        for i1 in 0..m {
            for i2 in i1 + 1..m {
                for j1 in 0..n {
                    for j2 in j1 + 1..n {
                        rects.push((i1, i2, j1, j2));
                    }
                }
            }
        }
        rects.sort_by_key(|&(i1, i2, j1, j2)| ((i2 - i1) * (j2 - j1), i1, i2, j1, j2));
        let edges: Vec<Subset> = rects
            .iter()
            .map(|&(i1, i2, j1, j2)| {
                Subset::from_indices([point(i1, j1), point(i1, j2), point(i2, j1), point(i2, j2)])
            })
            .collect();
        let hypergraph = Hypergraph::new(vertices, edges)?;
        let ground = hypergraph.edge_ground()?;
        let e = &hypergraph.edges;
        let mut circuits = Vec::new();
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                if e[a].intersection(e[b]).len() != 2 {
                    continue;
                }
                for c in b + 1..e.len() {
                    if e[a].intersection(e[c]).len() == 2
                        && e[b].intersection(e[c]).len() == 2
                        && e[a].intersection(e[b]).intersection(e[c]).is_empty()
                    {
                        circuits.push(Subset::from_indices([a, b, c]));
                    }
                }
            }
        }
        let circuits = CircuitFamily::new(&ground, circuits)?;
        Ok(RectangleGrid {
            hypergraph,
            circuits,
            rectangles: rects,
        })
    }
}

/// Extends `seq` by distinct vertices; every completed segment (including the
/// wrap-around ones once the sequence is full) must be an edge.
fn tight_search(
    index: &BTreeMap<Subset, usize>,
    r: usize,
    step: usize,
    len: usize,
    n: usize,
    seq: &mut Vec<usize>,
    found: &mut Vec<Subset>,
) {
    let pos = seq.len();
    if pos == len {
        let k = len / step;
        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let seg = Subset::from_indices((0..r).map(|t| seq[(i * step + t) % len]));
            match index.get(&seg) {
                Some(&e) => edges.push((e, seg)),
                None => return,
            }
        }
        let set = Subset::from_indices(edges.iter().map(|&(e, _)| e));
        if set.len() != k {
            return;
        }
        let l = r - step;
        let consecutive = (0..k).all(|i| edges[i].1.intersection(edges[(i + 1) % k].1).len() == l);
        if consecutive {
            found.push(set);
        }
        return;
    }
    // Up to rotation by whole segments, the first segment start is the
    // smallest segment start.
    for v in 0..n {
        if seq.contains(&v) || (pos > 0 && pos.is_multiple_of(step) && v < seq[0]) {
            continue;
        }
        seq.push(v);
        let end = seq.len();
        let ok = end < r || !(end - r).is_multiple_of(step) || {
            let seg = Subset::from_indices(seq[end - r..].iter().copied());
            index.contains_key(&seg)
        };
        if ok {
            tight_search(index, r, step, len, n, seq, found);
        }
        seq.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn complete_uniform(n: usize, r: usize) -> Hypergraph {
        let edges = Subset::full(n).subsets().filter(|e| e.len() == r).collect();
        Hypergraph::new(labels(n), edges).unwrap()
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::from_labels(vec!["a".into(), "b".into(), "c".into()], &[vec!["a", "b", "c"]])
            .unwrap();
        let p = h.chromatic(HyperMethod::Full).unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[0, -1, 0, 1]));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(6));
    }

    #[test]
    fn graph_as_hypergraph() {
        let k3 = Graph::complete(3).unwrap();
        let h = Hypergraph::from_graph(&k3).unwrap();
        let circuits = CircuitFamily::new(&h.edge_ground().unwrap(), k3.cycles_edge_sets().unwrap()).unwrap();
        assert!(h.validate_condition_a(&circuits));
        assert!(h.validate_condition_b(&circuits));
        let expect = IntPolynomial::from_i64s(&[0, 2, -3, 1]);
        assert_eq!(h.chromatic(HyperMethod::Full).unwrap(), expect);
        assert_eq!(h.chromatic(HyperMethod::Restricted(&circuits)).unwrap(), expect);
    }

    #[test]
    fn condition_validators() {
        let h = Hypergraph::new(
            labels(4),
            vec![Subset::from_indices([0, 1]), Subset::from_indices([2, 3])],
        )
        .unwrap();
        let g = h.edge_ground().unwrap();
        let disjoint = CircuitFamily::new(&g, vec![Subset::full(2)]).unwrap();
        assert!(!h.validate_condition_a(&disjoint));
        assert!(!h.validate_absorption(&disjoint));

        // 2-edge before a 3-edge breaks the upset.
        let mixed = Hypergraph::new(
            labels(4),
            vec![
                Subset::from_indices([0, 1]),
                Subset::from_indices([1, 2, 3]),
                Subset::from_indices([0, 3]),
            ],
        )
        .unwrap();
        let fam = CircuitFamily::new(&mixed.edge_ground().unwrap(), vec![Subset::full(3)]).unwrap();
        assert!(!mixed.validate_condition_b(&fam));
        let reordered = Hypergraph::new(
            labels(4),
            vec![
                Subset::from_indices([1, 2, 3]),
                Subset::from_indices([0, 1]),
                Subset::from_indices([0, 3]),
            ],
        )
        .unwrap();
        assert!(reordered.validate_condition_b(&fam));
        assert!(reordered.validate_absorption(&fam));
        assert_eq!(
            reordered.chromatic(HyperMethod::Restricted(&fam)).unwrap(),
            reordered.chromatic(HyperMethod::Full).unwrap()
        );

        let three = complete_uniform(4, 3);
        let no_pair = CircuitFamily::new(&three.edge_ground().unwrap(), vec![Subset::full(3)]).unwrap();
        assert!(!three.validate_condition_b(&no_pair));
    }

    #[test]
    fn tight_cycles_complete_3_uniform() {
        let h = complete_uniform(5, 3);
        let fam = h.tight_cycles(2).unwrap();
        assert!(!fam.is_empty());
        assert!(h.validate_condition_a(&fam));
        assert!(h.validate_absorption(&fam));
        assert_eq!(
            h.chromatic(HyperMethod::Restricted(&fam)).unwrap(),
            h.chromatic(HyperMethod::Full).unwrap()
        );
        assert!(matches!(h.tight_cycles(1), Err(Error::Precondition { .. })));
    }

    #[test]
    fn tight_cycles_of_graphs_are_cycles() {
        let k4 = Graph::complete(4).unwrap();
        let h = Hypergraph::from_graph(&k4).unwrap();
        let fam = h.tight_cycles(1).unwrap();
        assert_eq!(fam.circuits(), k4.cycles_edge_sets().unwrap().as_slice());
    }

    #[test]
    fn grid_examples() {
        let g = Hypergraph::grid_rectangles(2, 2).unwrap();
        assert_eq!(g.hypergraph.edge_count(), 1);
        assert!(g.circuits.is_empty());

        let g = Hypergraph::grid_rectangles(2, 3).unwrap();
        assert_eq!(g.hypergraph.edge_count(), 3);
        assert_eq!(g.circuits.len(), 1);
        assert_eq!(g.circuits.circuits()[0], Subset::full(3));
        assert!(g.hypergraph.validate_condition_a(&g.circuits));
        assert_eq!(
            g.hypergraph
                .chromatic(HyperMethod::Restricted(&g.circuits))
                .unwrap(),
            g.hypergraph.chromatic(HyperMethod::Full).unwrap()
        );
        let tight = g.hypergraph.tight_cycles(2).unwrap();
        assert_eq!(tight.circuits(), g.circuits.circuits());

        let g = Hypergraph::grid_rectangles(3, 3).unwrap();
        for &c in g.circuits.circuits() {
            let top = c.max().unwrap();
            let area = |i: usize| {
                let (a, b, c, d) = g.rectangles[i];
                (b - a) * (d - c)
            };
            assert!(c.without(top).iter().all(|i| area(i) < area(top)));
        }
        assert!(Hypergraph::grid_rectangles(1, 3).is_err());
        assert!(Hypergraph::grid_rectangles(5, 4).is_err());
    }
}

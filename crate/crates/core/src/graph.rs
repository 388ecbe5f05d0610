//! Simple graphs: chromatic, subgraph component and domination polynomials.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::{BiPolynomial, IntPolynomial};
use crate::engine::{
    derive_broken_circuits, enumerate_avoiding, sum_full, sum_pruned, CircuitFamily, OrderedGroundSet,
    DEFAULT_ENUMERATION_CAP,
};
use crate::error::{check_cap, Error, Result};
use crate::poset::check_labels;
use crate::subset::{Subset, MAX_ELEMENTS};

/// Default bound on `|E|` for cycle enumeration.
pub const CYCLE_EDGE_CAP: usize = 20;
/// Bound on `|E|` when enumerating vertex sets of cycles.
pub const VERTEX_CYCLE_EDGE_CAP: usize = 36;
/// Bound on `|V|` for vertex-subset sums.
pub const VERTEX_SUM_CAP: usize = 20;

/// A finite simple graph. Vertex and edge order are the input orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Subset>,
}

/// A simple cycle, as a vertex set and an edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    pub vertices: Subset,
    pub edges: Subset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromaticMethod {
    Full,
    BrokenCircuit,
}

/// A chromatic polynomial, with the counts `b_k` of broken-circuit-free
/// `k`-edge sets when computed by the broken-circuit method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chromatic {
    pub polynomial: IntPolynomial,
    pub b: Option<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QMethod {
    Direct,
    Eq5,
    Eq6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominationMethod {
    Direct,
    Bnh,
    BnhPruned,
}

/// A graph with its degree-1 vertices moved to the end, and the singleton
/// broken neighbourhoods `{w}` of its pendant edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantOrder {
    pub graph: Graph,
    /// `order[i]` is the original index of new vertex `i`.
    pub order: Vec<usize>,
    pub broken: Vec<Subset>,
}

/// Drops trailing zeros, keeping at least one entry.
pub(crate) fn trim_counts(mut b: Vec<u64>) -> Vec<u64> {
    while b.len() > 1 && *b.last().unwrap() == 0 {
        b.pop();
    }
    b
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_labels(&vertices)?;
        let n = vertices.len();
        let mut adj = vec![Subset::EMPTY; n];
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at `{}`", vertices[u])));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidInput(format!(
                    "parallel edge `{}`-`{}`",
                    vertices[u], vertices[v]
                )));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { vertices, edges, adj })
    }

    pub fn from_labels<S: AsRef<str>>(vertices: Vec<String>, edges: &[(S, S)]) -> Result<Self> {
        let find = |l: &str| {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::UnknownLabel(l.into()))
        };
        let idx = edges
            .iter()
            .map(|(a, b)| Ok((find(a.as_ref())?, find(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, idx)
    }

    fn numbered(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::numbered(n, vec![])
    }

    /// `K_n` with edges in lexicographic order.
    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::numbered(n, edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::numbered(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput("a cycle needs at least 3 vertices".into()));
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::numbered(n, edges)
    }

    /// `K_{1,k}` with the centre first.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::numbered(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn all_vertices(&self) -> Subset {
        Subset::full(self.vertex_count())
    }

    pub fn neighbours(&self, v: usize) -> Subset {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `N_G[A]`.
    pub fn closed_neighbourhood(&self, a: Subset) -> Subset {
        a.iter().fold(a, |acc, v| acc.union(self.adj[v]))
    }

    /// Edges as a ground set labelled `u-v`.
    pub fn edge_ground(&self) -> Result<OrderedGroundSet> {
        check_cap("edge subsets", self.edge_count(), MAX_ELEMENTS)?;
        OrderedGroundSet::new(
            self.edges
                .iter()
                .map(|&(u, v)| format!("{}-{}", self.vertices[u], self.vertices[v]))
                .collect(),
        )
    }

    pub fn vertex_ground(&self) -> Result<OrderedGroundSet> {
        OrderedGroundSet::with_cap(self.vertices.clone(), VERTEX_SUM_CAP)
    }

    /// `c(V, A)`: components of the spanning subgraph with edge set `A`.
    pub fn components_spanning(&self, a: Subset) -> usize {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = n;
        for e in a.iter() {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                comps -= 1;
            }
        }
        comps
    }

    /// `c(G[A])`: components of the induced subgraph on the vertex set `A`.
    pub fn induced_components(&self, a: Subset) -> usize {
        let mut rest = a;
        let mut comps = 0;
        while let Some(start) = rest.min() {
            let mut comp = Subset::singleton(start);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |acc, v| acc.union(self.adj[v].intersection(a)));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            rest = rest.difference(comp);
            comps += 1;
        }
        comps
    }

    /// `m(G[A])`: edges of the induced subgraph.
    pub fn induced_edge_count(&self, a: Subset) -> usize {
        a.iter().map(|v| self.adj[v].intersection(a).len()).sum::<usize>() / 2
    }

    /// All simple cycles, each once, sorted.
    pub fn simple_cycles(&self, edge_cap: usize) -> Result<Vec<Cycle>> {
        check_cap(
            "cycle enumeration edges",
            self.edge_count(),
            edge_cap.min(MAX_ELEMENTS),
        )?;
        let n = self.vertex_count();
        let mut index = vec![vec![usize::MAX; n]; n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            index[u][v] = i;
            index[v][u] = i;
        }
        let mut found = Vec::new();
        // Cycles are rooted at their smallest vertex; both orientations are
        // found and removed by the dedup below.
        for start in 0..n {
            let mut stack = vec![(start, Subset::singleton(start), Subset::EMPTY)];
            while let Some((u, visited, edges)) = stack.pop() {
                for w in self.adj[u].iter() {
                    if w == start && visited.len() >= 3 {
                        found.push(Cycle {
                            vertices: visited,
                            edges: edges.with(index[u][w]),
                        });
                    } else if w > start && !visited.contains(w) {
                        stack.push((w, visited.with(w), edges.with(index[u][w])));
                    }
                }
            }
        }
        found.sort();
        found.dedup();
        Ok(found)
    }

    /// Edge sets of all simple cycles.
    pub fn cycles_edge_sets(&self) -> Result<Vec<Subset>> {
        let mut sets: Vec<Subset> = self
            .simple_cycles(CYCLE_EDGE_CAP)?
            .iter()
            .map(|c| c.edges)
            .collect();
        sets.sort();
        Ok(sets)
    }

    /// Vertex sets of all simple cycles, deduplicated.
    pub fn cycles_vertex_sets(&self) -> Result<Vec<Subset>> {
        let mut sets: Vec<Subset> = self
            .simple_cycles(VERTEX_CYCLE_EDGE_CAP)?
            .iter()
            .map(|c| c.vertices)
            .collect();
        sets.sort();
        sets.dedup();
        Ok(sets)
    }

    /// `(-1)^{|A|} x^{c(V, A)}`.
    pub fn chromatic_term(&self, a: Subset) -> IntPolynomial {
        IntPolynomial::signed_power(a.len() % 2 == 1, self.components_spanning(a))
    }

    pub fn chromatic_polynomial(&self, method: ChromaticMethod) -> Result<Chromatic> {
        let ground = self.edge_ground()?;
        check_cap("edge subsets", ground.len(), DEFAULT_ENUMERATION_CAP)?;
        let f = |a: Subset| self.chromatic_term(a);
        match method {
            ChromaticMethod::Full => Ok(Chromatic {
                polynomial: sum_full(&f, &ground)?,
                b: None,
            }),
            ChromaticMethod::BrokenCircuit => {
                let family = CircuitFamily::new(&ground, self.cycles_edge_sets()?)?;
                let broken: Vec<Subset> = derive_broken_circuits(&family).iter().map(|b| b.set).collect();
                Ok(Chromatic {
                    polynomial: sum_pruned(&f, &ground, &broken)?,
                    b: Some(trim_counts(enumerate_avoiding(&ground, &broken)?)),
                })
            }
        }
    }

    /// Whether `v` is the centre of a claw, i.e. of some `K_{1,3}` subgraph
    /// (not necessarily induced). A vertex on a triangle with a pendant
    /// neighbour already breaks the vertex-cycle cancellation, so the induced
    /// reading is too weak here.
    pub fn is_claw_centre(&self, v: usize) -> bool {
        self.adj[v].len() >= 3
    }

    /// Whether `v` lies on a cycle: two of its neighbours are joined in `G - v`.
    pub fn on_cycle(&self, v: usize) -> bool {
        let rest = self.all_vertices().without(v);
        let mut seen = Subset::EMPTY;
        for start in self.adj[v].iter() {
            if seen.contains(start) {
                return true;
            }
            let mut comp = Subset::singleton(start);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |acc, u| acc.union(self.adj[u].intersection(rest)));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            if comp.intersection(self.adj[v]).len() > 1 {
                return true;
            }
            seen = seen.union(comp);
        }
        false
    }

    /// No claw centre lies on a cycle.
    pub fn is_cyclically_claw_free(&self) -> bool {
        (0..self.vertex_count()).all(|v| !(self.is_claw_centre(v) && self.on_cycle(v)))
    }

    /// `Q(G, x, y) = Σ_{A ⊆ V} x^{|A|} y^{c(G[A])}`.
    pub fn subgraph_component_polynomial(&self) -> Result<BiPolynomial> {
        let n = self.vertex_count();
        check_cap("vertex subsets", n, VERTEX_SUM_CAP)?;
        let mut counts = vec![vec![0u64; n + 1]; n + 1];
        for a in self.all_vertices().subsets() {
            counts[a.len()][self.induced_components(a)] += 1;
        }
        let mut q = BiPolynomial::zero();
        for (i, row) in counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    q.add_term(&BigInt::from(c), i as u32, j as u32);
                }
            }
        }
        Ok(q)
    }

    /// `Q(G, -1, y)` as a polynomial in `y`.
    pub fn q_at_minus1(&self, method: QMethod) -> Result<IntPolynomial> {
        let ground = self.vertex_ground()?;
        let by_components =
            |a: Subset| IntPolynomial::signed_power(a.len() % 2 == 1, self.induced_components(a));
        match method {
            QMethod::Direct => sum_full(&by_components, &ground),
            QMethod::Eq5 | QMethod::Eq6 => {
                if !self.is_cyclically_claw_free() {
                    return Err(Error::precondition(
                        "G is cyclically claw-free",
                        "a claw centre lies on a cycle",
                    ));
                }
                let family = CircuitFamily::new(&ground, self.cycles_vertex_sets()?)?;
                let broken: Vec<Subset> = derive_broken_circuits(&family).iter().map(|b| b.set).collect();
                if method == QMethod::Eq5 {
                    sum_pruned(&by_components, &ground, &broken)
                } else {
                    let by_edges = |a: Subset| {
                        IntPolynomial::signed_power(a.len() % 2 == 1, a.len() - self.induced_edge_count(a))
                    };
                    sum_pruned(&by_edges, &ground, &broken)
                }
            }
        }
    }

    /// `d_k(G)`, the number of dominating `k`-sets, by direct check.
    fn dominating_counts(&self) -> Result<Vec<u64>> {
        let n = self.vertex_count();
        check_cap("vertex subsets", n, VERTEX_SUM_CAP)?;
        let all = self.all_vertices();
        let mut d = vec![0u64; n + 1];
        for a in all.subsets() {
            if self.closed_neighbourhood(a) == all {
                d[a.len()] += 1;
            }
        }
        Ok(d)
    }

    /// `(-1)^{|A|} (x + 1)^{|V| - |N_G[A]|}`.
    pub fn domination_term(&self, a: Subset) -> IntPolynomial {
        let k = self.vertex_count() - self.closed_neighbourhood(a).len();
        let p = IntPolynomial::from_i64s(&[1, 1]).pow(k as u32);
        if a.len() % 2 == 1 {
            -p
        } else {
            p
        }
    }

    /// `N_G[v] ∖ {v}` for every `v = max N_G[v]`, with `v`.
    pub fn broken_neighbourhoods(&self) -> Vec<(Subset, usize)> {
        (0..self.vertex_count())
            .filter(|&v| self.adj[v].max().is_none_or(|m| m < v))
            .map(|v| (self.adj[v], v))
            .collect()
    }

    fn check_no_isolated(&self) -> Result<()> {
        match (0..self.vertex_count()).find(|&v| self.adj[v].is_empty()) {
            Some(v) => Err(Error::precondition(
                "G has no isolated vertices",
                format!("`{}` is isolated", self.vertices[v]),
            )),
            None => Ok(()),
        }
    }

    pub fn domination_polynomial(&self, method: DominationMethod) -> Result<IntPolynomial> {
        match method {
            DominationMethod::Direct => {
                let d = self.dominating_counts()?;
                Ok(IntPolynomial::new(d.into_iter().map(BigInt::from).collect()))
            }
            DominationMethod::Bnh => {
                let ground = self.vertex_ground()?;
                sum_full(&|a: Subset| self.domination_term(a), &ground)
            }
            DominationMethod::BnhPruned => {
                let broken: Vec<Subset> = self.broken_neighbourhoods().iter().map(|&(b, _)| b).collect();
                self.domination_pruned(&broken)
            }
        }
    }

    /// The broken-neighbourhood sum restricted by any family of broken
    /// neighbourhoods of `G`.
    pub fn domination_pruned(&self, broken: &[Subset]) -> Result<IntPolynomial> {
        self.check_no_isolated()?;
        let known = self.broken_neighbourhoods();
        for b in broken {
            if !known.iter().any(|(k, _)| k == b) {
                return Err(Error::precondition(
                    "each pruned set is a broken neighbourhood",
                    format!("{:?} is not N[v] ∖ {{v}} for v = max N[v]", self.labels_of(*b)),
                ));
            }
        }
        let ground = self.vertex_ground()?;
        sum_pruned(&|a: Subset| self.domination_term(a), &ground, broken)
    }

    pub fn labels_of(&self, a: Subset) -> Vec<&str> {
        a.iter().map(|v| self.vertices[v].as_str()).collect()
    }

    /// The induced graph on vertices listed in `order`, re-indexed.
    pub fn reordered(&self, order: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::InvalidInput(
                    "order is not a permutation of the vertices".into(),
                ));
            }
            pos[v] = i;
        }
        if order.len() != n {
            return Err(Error::InvalidInput(
                "order is not a permutation of the vertices".into(),
            ));
        }
        Graph::new(
            order.iter().map(|&v| self.vertices[v].clone()).collect(),
            self.edges.iter().map(|&(u, v)| (pos[u], pos[v])).collect(),
        )
    }

    /// Stable reorder putting degree-1 vertices last; the neighbour `w` of
    /// each pendant vertex yields the broken neighbourhood `{w}`.
    pub fn degree1_upset_order(&self) -> Result<PendantOrder> {
        self.check_no_isolated()?;
        for &(u, v) in &self.edges {
            if self.degree(u) == 1 && self.degree(v) == 1 {
                return Err(Error::precondition(
                    "G has no isolated edges",
                    format!("`{}`-`{}` is isolated", self.vertices[u], self.vertices[v]),
                ));
            }
        }
        let n = self.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| self.degree(v) == 1);
        let graph = self.reordered(&order)?;
        let mut broken: Vec<Subset> = (0..n)
            .filter(|&v| graph.degree(v) == 1)
            .map(|v| graph.adj[v])
            .collect();
        broken.sort();
        broken.dedup();
        Ok(PendantOrder { graph, order, broken })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn validation() {
        assert!(Graph::new(vec!["a".into()], vec![(0, 0)]).is_err());
        assert!(Graph::new(vec!["a".into(), "b".into()], vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(vec!["a".into(), "a".into()], vec![]).is_err());
        let g = Graph::from_labels(vec!["a".into(), "b".into()], &[("a", "b")]).unwrap();
        assert_eq!(g.edges(), [(0, 1)]);
        assert!(Graph::from_labels(vec!["a".into()], &[("a", "z")]).is_err());
    }

    #[test]
    fn spanning_components() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.components_spanning(Subset::EMPTY), 3);
        assert_eq!(k3.components_spanning(Subset::singleton(1)), 2);
        assert_eq!(k3.components_spanning(Subset::full(3)), 1);
    }

    #[test]
    fn cycles() {
        assert!(Graph::path(5).unwrap().cycles_edge_sets().unwrap().is_empty());
        assert_eq!(
            Graph::complete(3).unwrap().cycles_edge_sets().unwrap(),
            [Subset::full(3)]
        );
        let k4 = Graph::complete(4).unwrap().cycles_edge_sets().unwrap();
        assert_eq!(k4.len(), 7);
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(Graph::complete(4).unwrap().cycles_vertex_sets().unwrap().len(), 5);
        assert_eq!(Graph::complete(5).unwrap().cycles_edge_sets().unwrap().len(), 37);
    }

    #[test]
    fn chromatic_examples() {
        let k3 = Graph::complete(3).unwrap();
        let full = k3.chromatic_polynomial(ChromaticMethod::Full).unwrap();
        let bc = k3.chromatic_polynomial(ChromaticMethod::BrokenCircuit).unwrap();
        assert_eq!(full.polynomial, poly(&[0, 2, -3, 1]));
        assert_eq!(bc.polynomial, full.polynomial);
        assert_eq!(bc.b.unwrap(), [1, 3, 2]);
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(
            e2.chromatic_polynomial(ChromaticMethod::BrokenCircuit)
                .unwrap()
                .polynomial,
            poly(&[0, 0, 1])
        );
        let k4 = Graph::complete(4).unwrap();
        for m in [ChromaticMethod::Full, ChromaticMethod::BrokenCircuit] {
            assert_eq!(
                k4.chromatic_polynomial(m).unwrap().polynomial,
                poly(&[0, -6, 11, -6, 1])
            );
        }
    }

    #[test]
    fn claw_freeness() {
        assert!(Graph::complete(3).unwrap().is_cyclically_claw_free());
        assert!(Graph::star(3).unwrap().is_cyclically_claw_free());
        // C4 on 1..4 with two pendants at vertex 1: vertex 1 is a claw centre on the cycle.
        let g = Graph::new(
            (1..=6).map(|i| i.to_string()).collect(),
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)],
        )
        .unwrap();
        assert!(g.is_claw_centre(0));
        assert!(g.on_cycle(0));
        assert!(!g.is_cyclically_claw_free());
        assert!(g.q_at_minus1(QMethod::Eq5).is_err());
        // Triangle with a pendant at vertex 2: no induced claw, but removing
        // vertex 2 from the whole set isolates the pendant.
        let paw = Graph::new(
            (1..=4).map(|i| i.to_string()).collect(),
            vec![(0, 1), (1, 2), (0, 2), (2, 3)],
        )
        .unwrap();
        assert!(paw.is_claw_centre(2));
        assert!(!paw.is_cyclically_claw_free());
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.is_cyclically_claw_free());
        let direct = c4.q_at_minus1(QMethod::Direct).unwrap();
        assert_eq!(c4.q_at_minus1(QMethod::Eq5).unwrap(), direct);
        assert_eq!(c4.q_at_minus1(QMethod::Eq6).unwrap(), direct);
        assert!(g.q_at_minus1(QMethod::Direct).is_ok());
    }

    #[test]
    fn subgraph_component_examples() {
        let one = Graph::empty(1).unwrap().subgraph_component_polynomial().unwrap();
        assert_eq!(one.to_string(), "1 + xy");
        let k3 = Graph::complete(3)
            .unwrap()
            .subgraph_component_polynomial()
            .unwrap();
        let mut expect = BiPolynomial::one();
        expect.add_term(&BigInt::from(3), 1, 1);
        expect.add_term(&BigInt::from(3), 2, 1);
        expect.add_term(&BigInt::from(1), 3, 1);
        assert_eq!(k3, expect);
        let e2 = Graph::empty(2).unwrap().subgraph_component_polynomial().unwrap();
        let mut single = BiPolynomial::one();
        single.add_term(&BigInt::from(1), 1, 1);
        assert_eq!(e2, &single * &single);
    }

    #[test]
    fn q_examples() {
        let k3 = Graph::complete(3).unwrap();
        for m in [QMethod::Direct, QMethod::Eq5, QMethod::Eq6] {
            let q = k3.q_at_minus1(m).unwrap();
            assert_eq!(q, poly(&[1, -1]));
            assert_eq!(q.eval(&BigInt::from(-1)), BigInt::from(2));
        }
        let e3 = Graph::empty(3).unwrap();
        let cube = poly(&[1, -1]).pow(3);
        for m in [QMethod::Direct, QMethod::Eq5, QMethod::Eq6] {
            assert_eq!(e3.q_at_minus1(m).unwrap(), cube);
        }
    }

    #[test]
    fn domination_examples() {
        let p2 = Graph::path(2).unwrap();
        let p3 = Graph::path(3).unwrap();
        for m in [
            DominationMethod::Direct,
            DominationMethod::Bnh,
            DominationMethod::BnhPruned,
        ] {
            assert_eq!(p2.domination_polynomial(m).unwrap(), poly(&[0, 2, 1]));
            assert_eq!(p3.domination_polynomial(m).unwrap(), poly(&[0, 1, 3, 1]));
        }
        let v = Graph::empty(1).unwrap();
        assert_eq!(
            v.domination_polynomial(DominationMethod::Direct).unwrap(),
            poly(&[0, 1])
        );
        assert_eq!(
            v.domination_polynomial(DominationMethod::Bnh).unwrap(),
            poly(&[0, 1])
        );
        assert!(matches!(
            v.domination_polynomial(DominationMethod::BnhPruned),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn closed_neighbourhood_absorbs() {
        let g = Graph::cycle(5).unwrap();
        for v in 0..5 {
            let nv = g.closed_neighbourhood(Subset::singleton(v));
            for a in nv.supersets_within(g.all_vertices()) {
                assert_eq!(g.closed_neighbourhood(a.without(v)), g.closed_neighbourhood(a));
            }
        }
    }

    #[test]
    fn pendant_order() {
        let p3 = Graph::path(3).unwrap();
        let po = p3.degree1_upset_order().unwrap();
        assert_eq!(po.order, [1, 0, 2]);
        assert_eq!(po.broken, [Subset::singleton(0)]);
        assert_eq!(
            po.graph.domination_pruned(&po.broken).unwrap(),
            poly(&[0, 1, 3, 1])
        );

        assert!(Graph::cycle(4)
            .unwrap()
            .degree1_upset_order()
            .unwrap()
            .broken
            .is_empty());

        let star = Graph::star(3).unwrap();
        let po = star.degree1_upset_order().unwrap();
        assert_eq!(po.broken, [Subset::singleton(0)]);
        assert_eq!(
            po.graph.domination_pruned(&po.broken).unwrap(),
            star.domination_polynomial(DominationMethod::Direct).unwrap()
        );

        assert!(Graph::path(2).unwrap().degree1_upset_order().is_err());
        assert!(Graph::empty(1).unwrap().degree1_upset_order().is_err());
    }
}

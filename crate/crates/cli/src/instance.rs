//! Instance files: one JSON document with a `kind` discriminator.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize};

use whitney::engine::{CircuitFamily, OrderedGroundSet, DEFAULT_ENUMERATION_CAP};
use whitney::graph::Graph;
use whitney::hypergraph::Hypergraph;
use whitney::lattice::{Crosscut, FiniteLattice};
use whitney::matroid::Matroid;
use whitney::{convex::ConvexGeometry, Subset};

use crate::error::{CliError, CliResult};

/// An element label; JSON strings and integers are both accepted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Label(pub String);

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        Ok(Label(match Raw::deserialize(d)? {
            Raw::Text(s) => s,
            Raw::Int(i) => i.to_string(),
        }))
    }
}

/// An integer written as a JSON number or a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Int(i) => Ok(Int(BigInt::from(i))),
            Raw::Text(s) => s
                .trim()
                .parse()
                .map(Int)
                .map_err(|_| serde::de::Error::custom(format!("`{s}` is not an integer"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    GroundSet(GroundSetSpec),
    Graph(GraphSpec),
    Hypergraph(HypergraphSpec),
    Matroid(MatroidSpec),
    Lattice(LatticeSpec),
    Crosscut(CrosscutSpec),
    Geometry(GeometrySpec),
    SetFamily(SetFamilySpec),
    Maxmin(MaxminSpec),
    Divisor(DivisorSpec),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::GroundSet(_) => "ground-set",
            Instance::Graph(_) => "graph",
            Instance::Hypergraph(_) => "hypergraph",
            Instance::Matroid(_) => "matroid",
            Instance::Lattice(_) => "lattice",
            Instance::Crosscut(_) => "crosscut",
            Instance::Geometry(_) => "geometry",
            Instance::SetFamily(_) => "set-family",
            Instance::Maxmin(_) => "maxmin",
            Instance::Divisor(_) => "divisor",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BrokenSpec {
    /// Only `"all"` is meaningful.
    Keyword(String),
    Sets(Vec<Vec<Label>>),
}

impl Default for BrokenSpec {
    fn default() -> Self {
        BrokenSpec::Keyword("all".into())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub set: Vec<Label>,
    pub value: Int,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FunctionSpec {
    /// `(-1)^{|A|}`.
    Alternating,
    /// The same value on every subset.
    Constant { value: Int },
    /// Listed subsets get their value; all others get `default` (0 if absent).
    Table {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        default: Option<Int>,
        values: Vec<TableEntry>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroundSetSpec {
    pub elements: Vec<Label>,
    pub circuits: Vec<Vec<Label>>,
    #[serde(default)]
    pub broken: BrokenSpec,
    pub function: FunctionSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphBody {
    pub vertices: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<Vec<Label>>>,
    /// Rectangles of an `m × n` grid instead of explicit vertices and edges.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<[usize; 2]>,
    /// Circuits as lists of 0-based edge positions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphicSource {
    /// Path of a graph instance file, relative to the matroid file.
    Path(String),
    Inline(GraphBody),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<Label>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graphic: Option<GraphicSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uniform: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeBody {
    pub elements: Vec<Label>,
    pub covers: Vec<[Label; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub elements: Vec<Label>,
    pub covers: Vec<[Label; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrosscutSpec {
    pub lattice: LatticeBody,
    pub elements: Vec<Label>,
    /// Strict relations `a ◁ b` of the auxiliary order.
    #[serde(default)]
    pub order: Vec<[Label; 2]>,
    /// A sub-family of the Blass-Sagan family; all of it when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub broken: Option<Vec<Vec<Label>>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub atoms_mode: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySpec {
    pub elements: Vec<Label>,
    pub closed: Vec<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<FunctionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    pub set: Vec<Label>,
    pub witness: Label,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFamilySpec {
    pub index: Vec<Label>,
    pub universe: Vec<Label>,
    pub sets: Vec<Vec<Label>>,
    #[serde(default)]
    pub broken: Vec<WitnessSpec>,
    /// Strict relations on the index making it an upper semilattice, for the
    /// chain form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[Label; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaxminSpec {
    pub values: Vec<Int>,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorSpec {
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

pub fn read(path: &Path) -> CliResult<Instance> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn parse(text: &str) -> CliResult<Instance> {
    Ok(serde_json::from_str(text)?)
}

pub fn strings(labels: &[Label]) -> Vec<String> {
    labels.iter().map(|l| l.0.clone()).collect()
}

pub fn labels<S: AsRef<str>>(names: &[S]) -> Vec<Label> {
    names.iter().map(|s| Label(s.as_ref().to_string())).collect()
}

fn position(all: &[Label], label: &Label) -> CliResult<usize> {
    all.iter()
        .position(|l| l == label)
        .ok_or_else(|| CliError::Core(whitney::Error::UnknownLabel(label.0.clone())))
}

pub fn subset(all: &[Label], set: &[Label]) -> CliResult<Subset> {
    let mut s = Subset::EMPTY;
    for l in set {
        s = s.with(position(all, l)?);
    }
    Ok(s)
}

fn pairs(all: &[Label], list: &[[Label; 2]]) -> CliResult<Vec<(usize, usize)>> {
    list.iter()
        .map(|[a, b]| Ok((position(all, a)?, position(all, b)?)))
        .collect()
}

/// Rejects ground sets above `--cap-elements`.
pub fn check_elements(what: &'static str, size: usize, cap: Option<usize>) -> CliResult<()> {
    match cap {
        Some(c) if size > c => Err(CliError::Core(whitney::Error::CapExceeded { what, size, cap: c })),
        _ => Ok(()),
    }
}

impl GroundSetSpec {
    pub fn ground(&self, cap: Option<usize>) -> CliResult<OrderedGroundSet> {
        check_elements("ground set", self.elements.len(), cap)?;
        Ok(OrderedGroundSet::with_cap(
            strings(&self.elements),
            cap.unwrap_or(DEFAULT_ENUMERATION_CAP),
        )?)
    }

    pub fn family(&self, ground: &OrderedGroundSet) -> CliResult<CircuitFamily> {
        Ok(CircuitFamily::from_labels(
            ground,
            &self.circuits.iter().map(|c| strings(c)).collect::<Vec<_>>(),
        )?)
    }

    /// `None` for `"all"`.
    pub fn broken_sets(&self) -> CliResult<Option<Vec<Subset>>> {
        match &self.broken {
            BrokenSpec::Keyword(k) if k == "all" => Ok(None),
            BrokenSpec::Keyword(k) => Err(CliError::schema(format!(
                "`broken` must be \"all\" or a list of sets, not `{k}`"
            ))),
            BrokenSpec::Sets(sets) => Ok(Some(
                sets.iter()
                    .map(|s| subset(&self.elements, s))
                    .collect::<CliResult<_>>()?,
            )),
        }
    }
}

/// A function on the subsets of a labelled ground set.
pub struct Function {
    kind: FunctionKind,
}

enum FunctionKind {
    Alternating,
    Constant(BigInt),
    Table {
        default: BigInt,
        values: std::collections::HashMap<u64, BigInt>,
    },
}

impl Function {
    pub fn new(spec: &FunctionSpec, elements: &[Label]) -> CliResult<Self> {
        let kind = match spec {
            FunctionSpec::Alternating => FunctionKind::Alternating,
            FunctionSpec::Constant { value } => FunctionKind::Constant(value.0.clone()),
            FunctionSpec::Table { default, values } => {
                let mut map = std::collections::HashMap::new();
                for e in values {
                    let s = subset(elements, &e.set)?;
                    if map.insert(s.bits(), e.value.0.clone()).is_some() {
                        return Err(CliError::schema(format!(
                            "table lists {:?} twice",
                            strings(&e.set)
                        )));
                    }
                }
                FunctionKind::Table {
                    default: default.as_ref().map_or_else(|| BigInt::from(0), |d| d.0.clone()),
                    values: map,
                }
            }
        };
        Ok(Function { kind })
    }

    pub fn eval(&self, a: Subset) -> BigInt {
        match &self.kind {
            FunctionKind::Alternating => whitney::engine::alternating(a),
            FunctionKind::Constant(c) => c.clone(),
            FunctionKind::Table { default, values } => values.get(&a.bits()).unwrap_or(default).clone(),
        }
    }
}

impl GraphSpec {
    pub fn from_body(body: &GraphBody) -> Self {
        GraphSpec {
            vertices: body.vertices.clone(),
            edges: body.edges.clone(),
            seed: None,
        }
    }

    pub fn from_graph(g: &Graph, seed: Option<u64>) -> Self {
        let vertices = labels(g.vertices());
        let edges = g
            .edges()
            .iter()
            .map(|&(u, v)| [vertices[u].clone(), vertices[v].clone()])
            .collect();
        GraphSpec {
            vertices,
            edges,
            seed,
        }
    }

    pub fn graph(&self, cap: Option<usize>) -> CliResult<Graph> {
        check_elements("vertices", self.vertices.len(), cap)?;
        check_elements("edges", self.edges.len(), cap)?;
        Ok(Graph::new(
            strings(&self.vertices),
            pairs(&self.vertices, &self.edges)?,
        )?)
    }
}

impl HypergraphSpec {
    pub fn from_hypergraph(h: &Hypergraph, circuits: Option<&CircuitFamily>, seed: Option<u64>) -> Self {
        let vertices = labels(h.vertices());
        let edges = h
            .edges()
            .iter()
            .map(|&e| e.iter().map(|v| vertices[v].clone()).collect())
            .collect();
        HypergraphSpec {
            vertices: Some(vertices),
            edges: Some(edges),
            grid: None,
            circuits: circuits.map(|f| f.circuits().iter().map(|c| c.iter().collect()).collect()),
            seed,
        }
    }

    /// The hypergraph and, for the grid form, its rectangle circuits.
    pub fn hypergraph(&self, cap: Option<usize>) -> CliResult<(Hypergraph, Option<CircuitFamily>)> {
        match (&self.vertices, &self.edges, self.grid) {
            (Some(vertices), Some(edges), None) => {
                check_elements("edges", edges.len(), cap)?;
                let sets = edges
                    .iter()
                    .map(|e| subset(vertices, e))
                    .collect::<CliResult<Vec<_>>>()?;
                Ok((Hypergraph::new(strings(vertices), sets)?, None))
            }
            (None, None, Some([m, n])) => {
                let grid = Hypergraph::grid_rectangles(m, n)?;
                check_elements("edges", grid.hypergraph.edge_count(), cap)?;
                Ok((grid.hypergraph, Some(grid.circuits)))
            }
            _ => Err(CliError::schema(
                "a hypergraph needs either `vertices` and `edges`, or `grid`",
            )),
        }
    }

    pub fn listed_circuits(&self, h: &Hypergraph) -> CliResult<Option<CircuitFamily>> {
        let Some(list) = &self.circuits else {
            return Ok(None);
        };
        let ground = h.edge_ground()?;
        let mut sets = Vec::new();
        for c in list {
            if let Some(&bad) = c.iter().find(|&&i| i >= h.edge_count()) {
                return Err(CliError::schema(format!(
                    "circuit refers to edge {bad}, but there are {} edges",
                    h.edge_count()
                )));
            }
            sets.push(Subset::from_indices(c.iter().copied()));
        }
        Ok(Some(CircuitFamily::new(&ground, sets)?))
    }
}

impl MatroidSpec {
    pub fn matroid(&self, base: Option<&Path>, cap: Option<usize>) -> CliResult<Matroid> {
        let m = match (&self.elements, &self.circuits, &self.graphic, self.uniform) {
            (Some(elements), Some(circuits), None, None) => {
                check_elements("matroid ground set", elements.len(), cap)?;
                let sets = circuits
                    .iter()
                    .map(|c| subset(elements, c))
                    .collect::<CliResult<Vec<_>>>()?;
                Matroid::new(strings(elements), sets)?
            }
            (None, None, Some(source), None) => {
                let spec = match source {
                    GraphicSource::Inline(body) => GraphSpec::from_body(body),
                    GraphicSource::Path(p) => {
                        let path = base
                            .and_then(Path::parent)
                            .map_or_else(|| Path::new(p).to_path_buf(), |d| d.join(p));
                        match read(&path)? {
                            Instance::Graph(g) => g,
                            other => {
                                return Err(CliError::schema(format!(
                                    "`graphic` must point to a graph instance, found `{}`",
                                    other.kind()
                                )))
                            }
                        }
                    }
                };
                let g = spec.graph(None)?;
                check_elements("matroid ground set", g.edge_count(), cap)?;
                Matroid::graphic(&g)?
            }
            (None, None, None, Some([r, n])) => {
                check_elements("matroid ground set", n, cap)?;
                Matroid::uniform(r, n)?
            }
            _ => {
                return Err(CliError::schema(
                    "a matroid needs exactly one of `elements` with `circuits`, `graphic`, or `uniform`",
                ))
            }
        };
        Ok(m)
    }
}

impl LatticeBody {
    pub fn lattice(&self) -> CliResult<FiniteLattice> {
        Ok(FiniteLattice::from_covers(
            strings(&self.elements),
            &pairs(&self.elements, &self.covers)?,
        )?)
    }

    pub fn from_lattice(l: &FiniteLattice) -> Self {
        let elements = labels(l.labels());
        let mut covers = Vec::new();
        for a in 0..l.len() {
            for b in 0..l.len() {
                if l.covers(a, b) {
                    covers.push([elements[a].clone(), elements[b].clone()]);
                }
            }
        }
        LatticeBody { elements, covers }
    }
}

impl LatticeSpec {
    pub fn body(&self) -> LatticeBody {
        LatticeBody {
            elements: self.elements.clone(),
            covers: self.covers.clone(),
        }
    }
}

impl CrosscutSpec {
    pub fn build(&self) -> CliResult<(FiniteLattice, Crosscut)> {
        let l = self.lattice.lattice()?;
        let elements = strings(&self.elements);
        let order: Vec<(String, String)> = self
            .order
            .iter()
            .map(|[a, b]| (a.0.clone(), b.0.clone()))
            .collect();
        let cc = Crosscut::from_labels(&l, &elements, &order)?;
        Ok((l, cc))
    }

    /// Requested sub-family as crosscut positions.
    pub fn broken_positions(&self, cc: &Crosscut, l: &FiniteLattice) -> CliResult<Option<Vec<Subset>>> {
        let Some(sets) = &self.broken else {
            return Ok(None);
        };
        let names: Vec<Label> = cc
            .elements()
            .iter()
            .map(|&e| Label(l.label(e).to_string()))
            .collect();
        Ok(Some(
            sets.iter().map(|s| subset(&names, s)).collect::<CliResult<_>>()?,
        ))
    }
}

impl GeometrySpec {
    pub fn ground(&self, cap: Option<usize>) -> CliResult<OrderedGroundSet> {
        check_elements("geometry ground set", self.elements.len(), cap)?;
        Ok(OrderedGroundSet::new(strings(&self.elements))?)
    }

    pub fn closed_sets(&self) -> CliResult<Vec<Subset>> {
        self.closed.iter().map(|c| subset(&self.elements, c)).collect()
    }

    pub fn geometry(&self, cap: Option<usize>) -> CliResult<ConvexGeometry> {
        Ok(ConvexGeometry::from_closed_sets(
            self.ground(cap)?,
            &self.closed_sets()?,
        )?)
    }

    pub fn from_geometry(cg: &ConvexGeometry, seed: Option<u64>) -> Self {
        let elements = labels(cg.ground().labels());
        let closed = cg
            .system()
            .closed_sets()
            .into_iter()
            .map(|c| c.iter().map(|i| elements[i].clone()).collect())
            .collect();
        GeometrySpec {
            elements,
            closed,
            function: None,
            seed,
        }
    }
}

/// Applies `--permute-order`: entries are labels or 0-based positions of
/// `items`, listing every item once in the new order.
pub fn permutation(spec: &str, names: &[String]) -> CliResult<Vec<usize>> {
    let mut order = Vec::new();
    for raw in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i = names
            .iter()
            .position(|n| n == raw)
            .or_else(|| raw.parse::<usize>().ok().filter(|&i| i < names.len()))
            .ok_or_else(|| CliError::schema(format!("`{raw}` in --permute-order names nothing")))?;
        if order.contains(&i) {
            return Err(CliError::schema(format!(
                "`{raw}` appears twice in --permute-order"
            )));
        }
        order.push(i);
    }
    if order.len() != names.len() {
        return Err(CliError::schema(format!(
            "--permute-order lists {} of {} items",
            order.len(),
            names.len()
        )));
    }
    Ok(order)
}

pub fn reorder<T: Clone>(items: &[T], order: &[usize]) -> Vec<T> {
    order.iter().map(|&i| items[i].clone()).collect()
}

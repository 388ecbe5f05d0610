//! `generate <kind>`: seeded random or named instances.

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use whitney::convex::{self, ConvexGeometry};
use whitney::engine::OrderedGroundSet;
use whitney::generators;
use whitney::hypergraph::Hypergraph;
use whitney::lattice::FiniteLattice;
use whitney::Subset;

use crate::error::{CliError, CliResult};
use crate::instance::{
    labels, BrokenSpec, CrosscutSpec, DivisorSpec, FunctionSpec, GeometrySpec, GraphBody, GraphSpec,
    GraphicSource, GroundSetSpec, HypergraphSpec, Instance, Int, Label, LatticeBody, LatticeSpec,
    MatroidSpec, MaxminSpec, SetFamilySpec, TableEntry, WitnessSpec,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    GroundSet,
    Graph,
    ConnectedGraph,
    Grid,
    UniformHypergraph,
    UniformMatroid,
    GraphicMatroid,
    BooleanLattice,
    DivisorLattice,
    PartitionLattice,
    ChainLattice,
    Crosscut,
    Geometry,
    Divisor,
    Maxmin,
    SetFamily,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Params {
    /// Main size parameter (elements, vertices, n of U(r,n), lattice order).
    #[arg(long)]
    pub n: Option<u64>,
    /// Secondary size (grid rows, circuits, edges, universe).
    #[arg(long)]
    pub m: Option<usize>,
    /// Rank of a uniform matroid, or edge size of a uniform hypergraph.
    #[arg(long)]
    pub r: Option<usize>,
    /// Edge probability for random graphs and set families.
    #[arg(long)]
    pub p: Option<f64>,
    /// k for max-min instances.
    #[arg(long)]
    pub k: Option<usize>,
    /// Geometry shape (interval, ideal, subtree, planar, antimatroid, random) or crosscut
    /// lattice (boolean, divisor, partition, chain).
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Compact single-line JSON.
    #[arg(long)]
    pub json: bool,
}

fn size(p: &Params, default: usize) -> CliResult<usize> {
    match p.n {
        None => Ok(default),
        Some(n) => usize::try_from(n).map_err(|_| CliError::schema("--n is too large")),
    }
}

fn probability(p: &Params) -> CliResult<f64> {
    let v = p.p.unwrap_or(0.5);
    if !(0.0..=1.0).contains(&v) {
        return Err(CliError::schema(format!("--p = {v} is not a probability")));
    }
    Ok(v)
}

fn limit(what: &'static str, value: usize, cap: usize) -> CliResult<()> {
    if value > cap {
        return Err(CliError::Core(whitney::Error::CapExceeded {
            what,
            size: value,
            cap,
        }));
    }
    Ok(())
}

fn lattice(l: &FiniteLattice, seed: u64) -> Instance {
    let body = LatticeBody::from_lattice(l);
    Instance::Lattice(LatticeSpec {
        elements: body.elements,
        covers: body.covers,
        seed: Some(seed),
    })
}

pub fn run(kind: Kind, p: &Params) -> CliResult<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let seed = Some(p.seed);
    let inst = match kind {
        Kind::GroundSet => {
            let n = size(p, 6)?;
            limit("generated ground set", n, 12)?;
            let ci = generators::random_cancelling_instance(n, p.m.unwrap_or(3), p.r.unwrap_or(3), &mut rng)?;
            let names = ci.ground.labels();
            let values = ci
                .ground
                .all()
                .subsets()
                .filter_map(|a| {
                    let v = ci.eval(a);
                    (v != 0).then(|| TableEntry {
                        set: labels(&crate::output::labels(names, a)),
                        value: Int(BigInt::from(v)),
                    })
                })
                .collect();
            Instance::GroundSet(GroundSetSpec {
                elements: labels(names),
                circuits: ci
                    .circuits
                    .circuits()
                    .iter()
                    .map(|&c| labels(&crate::output::labels(names, c)))
                    .collect(),
                broken: BrokenSpec::default(),
                function: FunctionSpec::Table {
                    default: None,
                    values,
                },
                seed,
            })
        }
        Kind::Graph | Kind::ConnectedGraph => {
            let n = size(p, 6)?;
            limit("graph vertices", n, 64)?;
            let g = if kind == Kind::Graph {
                generators::random_graph(n, probability(p)?, &mut rng)?
            } else {
                generators::random_connected_graph(n, probability(p)?, &mut rng)?
            };
            Instance::Graph(GraphSpec::from_graph(&g, seed))
        }
        Kind::Grid => {
            let rows = p.m.unwrap_or(2);
            let cols = size(p, 3)?;
            let grid = Hypergraph::grid_rectangles(rows, cols)?;
            Instance::Hypergraph(HypergraphSpec::from_hypergraph(
                &grid.hypergraph,
                Some(&grid.circuits),
                seed,
            ))
        }
        Kind::UniformHypergraph => {
            let n = size(p, 6)?;
            limit("hypergraph vertices", n, 64)?;
            let h = generators::random_uniform_hypergraph(n, p.r.unwrap_or(3), p.m.unwrap_or(6), &mut rng)?;
            Instance::Hypergraph(HypergraphSpec::from_hypergraph(&h, None, seed))
        }
        Kind::UniformMatroid => {
            let n = size(p, 3)?;
            let r = p.r.unwrap_or(2);
            // Validates r ≤ n and the size cap.
            whitney::matroid::Matroid::uniform(r, n)?;
            Instance::Matroid(MatroidSpec {
                elements: None,
                circuits: None,
                graphic: None,
                uniform: Some([r, n]),
                seed,
            })
        }
        Kind::GraphicMatroid => {
            let n = size(p, 5)?;
            limit("graph vertices", n, 64)?;
            let g = generators::random_connected_graph(n, probability(p)?, &mut rng)?;
            let spec = GraphSpec::from_graph(&g, None);
            Instance::Matroid(MatroidSpec {
                elements: None,
                circuits: None,
                graphic: Some(GraphicSource::Inline(GraphBody {
                    vertices: spec.vertices,
                    edges: spec.edges,
                })),
                uniform: None,
                seed,
            })
        }
        Kind::BooleanLattice => lattice(&FiniteLattice::boolean(size(p, 3)?)?, p.seed),
        Kind::DivisorLattice => lattice(&FiniteLattice::divisor(p.n.unwrap_or(12))?, p.seed),
        Kind::PartitionLattice => lattice(&FiniteLattice::partition(size(p, 3)?)?, p.seed),
        Kind::ChainLattice => lattice(&FiniteLattice::chain(size(p, 3)?)?, p.seed),
        Kind::Crosscut => crosscut(p, &mut rng)?,
        Kind::Geometry => {
            let n = size(p, 5)?;
            limit("geometry ground set", n, convex::CLOSURE_CAP)?;
            let cg: ConvexGeometry = match p.variant.as_deref().unwrap_or("random") {
                "interval" => convex::interval_geometry(n)?,
                "ideal" => convex::order_ideal_geometry(&generators::random_poset(n, 0.3, &mut rng)?)?,
                "subtree" => convex::subtree_geometry(&generators::random_tree(n, &mut rng))?,
                "planar" => convex::planar_geometry(&generators::random_points(n, 8, &mut rng))?,
                "antimatroid" => generators::random_antimatroid_geometry(n, 2, &mut rng)?,
                "random" => {
                    let shape = rng.gen_range(0..4);
                    generators::random_convex_geometry(n, shape, &mut rng)?
                }
                other => return Err(CliError::schema(format!("unknown geometry variant `{other}`"))),
            };
            Instance::Geometry(GeometrySpec::from_geometry(&cg, seed))
        }
        Kind::Divisor => {
            let n = match p.n {
                Some(n) => n,
                None => rng.gen_range(2..=1000),
            };
            whitney::number::DivisorLattice::new(n)?;
            Instance::Divisor(DivisorSpec { n, seed })
        }
        Kind::Maxmin => {
            let n = size(p, 6)?;
            limit("max-min values", n, whitney::engine::MAXMIN_CAP)?;
            if n == 0 {
                return Err(CliError::schema("--n must be positive"));
            }
            let values = (0..n)
                .map(|_| Int(BigInt::from(rng.gen_range(-20..=20))))
                .collect();
            let k = match p.k {
                Some(k) => k,
                None => rng.gen_range(1..=n),
            };
            Instance::Maxmin(MaxminSpec { values, k, seed })
        }
        Kind::SetFamily => set_family(p, &mut rng)?,
    };
    Ok(inst)
}

fn crosscut(p: &Params, rng: &mut ChaCha8Rng) -> CliResult<Instance> {
    let l = match p.variant.as_deref().unwrap_or("boolean") {
        "boolean" => FiniteLattice::boolean(size(p, 3)?)?,
        "divisor" => FiniteLattice::divisor(p.n.unwrap_or(30))?,
        "partition" => FiniteLattice::partition(size(p, 3)?)?,
        "chain" => FiniteLattice::chain(size(p, 4)?)?,
        other => return Err(CliError::schema(format!("unknown crosscut lattice `{other}`"))),
    };
    let all = l.all_crosscuts()?;
    let cut = *all
        .choose(rng)
        .ok_or_else(|| CliError::schema("this lattice has no crosscuts"))?;
    let elements: Vec<usize> = cut.iter().collect();
    let order = generators::random_poset(elements.len(), 0.4, rng)?;
    let name = |x: usize| Label(l.label(x).to_string());
    let pairs = generators::relation_pairs(&order)
        .into_iter()
        .map(|(a, b)| [name(elements[a]), name(elements[b])])
        .collect();
    Ok(Instance::Crosscut(CrosscutSpec {
        lattice: LatticeBody::from_lattice(&l),
        elements: elements.iter().map(|&e| name(e)).collect(),
        order: pairs,
        broken: None,
        atoms_mode: false,
        seed: Some(p.seed),
    }))
}

/// A random family with every valid singleton and pair broken set, each
/// witnessed by the first later index whose set contains their
/// intersection.
fn set_family(p: &Params, rng: &mut ChaCha8Rng) -> CliResult<Instance> {
    let n = size(p, 6)?;
    let universe = p.m.unwrap_or(8);
    limit("set family index", n, 20)?;
    limit("set family universe", universe, 256)?;
    let sets = generators::random_set_family(n, universe, probability(p)?, rng);
    let index = OrderedGroundSet::indexed(n)?;
    let family = whitney::engine::IndexedSetFamily::new(index, universe, sets.clone())?;
    let mut broken = Vec::new();
    for b in (0..n).flat_map(|i| (i..n).map(move |j| Subset::singleton(i).with(j))) {
        let top = b.max().expect("nonempty");
        let meet = family.intersection(b);
        if let Some(c) = (top + 1..n).find(|&c| meet.is_subset_of(family.set(c))) {
            broken.push(WitnessSpec {
                set: b.iter().map(|i| Label(format!("M{i}"))).collect(),
                witness: Label(format!("M{c}")),
            });
        }
    }
    Ok(Instance::SetFamily(SetFamilySpec {
        index: (0..n).map(|i| Label(format!("M{i}"))).collect(),
        universe: (0..universe).map(|a| Label(a.to_string())).collect(),
        sets: sets
            .iter()
            .map(|s| s.iter().map(|a| Label(a.to_string())).collect())
            .collect(),
        broken,
        order: None,
        seed: Some(p.seed),
    }))
}

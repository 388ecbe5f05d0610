//! `compute <target>`: one module operation on one instance.

use std::path::Path;

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use whitney::convex::{self, ClosureSystem, ConvexGeometry, IntervalCondition};
use whitney::engine::{
    self, derive_broken_circuits, BrokenSelection, CircuitFamily, Condition, IndexedSetFamily,
    OrderedGroundSet,
};
use whitney::graph::{ChromaticMethod, DominationMethod, Graph, QMethod, CYCLE_EDGE_CAP};
use whitney::hypergraph::HyperMethod;
use whitney::lattice::{self, FiniteLattice};
use whitney::matroid::{BetaMethod, CharacteristicMethod};
use whitney::number::{self, ComplexKind, GcdVariant, InverseMethod, Multiplicative, TotientMethod};
use whitney::poset::FinitePoset;
use whitney::Subset;

use crate::error::{CliError, CliResult};
use crate::instance::{self, permutation, reorder, strings, Function, Instance, Label};
use crate::output::{big, bipoly, float, labels, poly, rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    CoreSum,
    CoreBroken,
    CoreAvoiding,
    CoreMaxmin,
    CoreUnion,
    CoreHstar,
    GraphChromatic,
    GraphScp,
    GraphClawFree,
    GraphCycles,
    GraphDomination,
    HypergraphChromatic,
    MatroidCharacteristic,
    MatroidBeta,
    LatticeMobius,
    LatticeCrosscut,
    LatticeBlassSagan,
    GeometryVerify,
    GeometryFree,
    GeometryReduce,
    NumberMobius,
    NumberGcd,
    NumberTotient,
    NumberDirichletInverse,
    NumberZeta,
    NumberComplex,
    NumberPrimorial,
}

impl Target {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    /// Targets that read no instance file.
    fn needs_instance(self) -> bool {
        !matches!(
            self,
            Target::NumberMobius
                | Target::NumberGcd
                | Target::NumberTotient
                | Target::NumberDirichletInverse
                | Target::NumberZeta
                | Target::NumberComplex
                | Target::NumberPrimorial
        )
    }
}

#[derive(Args, Clone, Debug, Default)]
pub struct Flags {
    /// Evaluation method; the accepted names depend on the target.
    #[arg(long)]
    pub method: Option<String>,
    /// Recorded in the output; compute itself is deterministic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Refuse instances whose ground set has more than N elements (exit 3).
    #[arg(long, value_name = "N")]
    pub cap_elements: Option<usize>,
    /// For prime n, sum over L_n minus one endpoint instead of failing.
    #[arg(long)]
    pub modified_domain: bool,
    /// New linear order of the ground list, as comma-separated labels or 0-based positions.
    #[arg(long, value_name = "PERM")]
    pub permute_order: Option<String>,
    /// Compact single-line JSON.
    #[arg(long)]
    pub json: bool,
    /// Skip the exhaustive cancellation check and take the hypothesis as given.
    #[arg(long)]
    pub assume_condition: bool,
    /// Exponent for number-zeta and number-primorial.
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long)]
    pub prime_bound: Option<u64>,
    /// The integer for number-* targets when no divisor instance is given.
    #[arg(long)]
    pub n: Option<u64>,
    /// identity, power:k, liouville, totient or mobius.
    #[arg(long, default_value = "identity")]
    pub h: String,
    /// S (gcd) or T (lcm) complex for number-complex.
    #[arg(long, default_value = "S")]
    pub kind: String,
    /// Hypergraph circuits: tight:l, file or rect.
    #[arg(long)]
    pub circuits: Option<String>,
    /// Drop the meet condition in crosscut sums (for crosscuts of atoms).
    #[arg(long)]
    pub atoms_mode: bool,
}

/// A result to print, and the exit status that goes with it.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub body: Value,
    pub exit: u8,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Outcome { body, exit: 0 }
    }
}

pub fn run(target: Target, file: Option<&Path>, flags: &Flags) -> CliResult<Outcome> {
    let inst = match file {
        Some(p) => Some(instance::read(p)?),
        None if target.needs_instance() => {
            return Err(CliError::schema(format!(
                "`{}` needs an instance file",
                target.name()
            )))
        }
        None => None,
    };
    run_instance(target, inst.as_ref(), file, flags)
}

/// `compute` on an already parsed instance; `path` only resolves relative
/// references inside it.
pub fn run_instance(
    target: Target,
    inst: Option<&Instance>,
    path: Option<&Path>,
    flags: &Flags,
) -> CliResult<Outcome> {
    let mut out = dispatch(target, inst, path, flags)?;
    if let Value::Object(map) = &mut out.body {
        let mut head = serde_json::Map::new();
        head.insert("target".into(), json!(target.name()));
        if let Some(m) = &flags.method {
            head.insert("method".into(), json!(m));
        }
        head.insert("seed".into(), json!(flags.seed));
        head.append(map);
        *map = head;
    }
    Ok(out)
}

fn wrong_kind(target: Target, expected: &str, inst: Option<&Instance>) -> CliError {
    CliError::schema(format!(
        "`{}` expects a `{expected}` instance, got `{}`",
        target.name(),
        inst.map_or("none", Instance::kind)
    ))
}

fn method<'a>(flags: &'a Flags, default: &'a str, allowed: &[&str]) -> CliResult<&'a str> {
    let m = flags.method.as_deref().unwrap_or(default);
    let norm = |s: &str| s.replace('-', "_");
    allowed
        .iter()
        .find(|a| norm(a) == norm(m))
        .map(|_| m)
        .ok_or_else(|| {
            CliError::schema(format!(
                "unknown method `{m}`; expected one of {}",
                allowed.join(", ")
            ))
        })
}

fn is(m: &str, name: &str) -> bool {
    m.replace('-', "_") == name
}

/// Reorders `items` by `--permute-order`, matching against `names`.
fn permuted<T: Clone>(items: &[T], names: &[String], flags: &Flags) -> CliResult<Vec<T>> {
    match &flags.permute_order {
        None => Ok(items.to_vec()),
        Some(spec) => Ok(reorder(items, &permutation(spec, names)?)),
    }
}

fn no_permutation(flags: &Flags, target: Target) -> CliResult<()> {
    if flags.permute_order.is_some() {
        return Err(CliError::schema(format!(
            "`{}` has no ordered ground list to permute",
            target.name()
        )));
    }
    Ok(())
}

fn dispatch(
    target: Target,
    inst: Option<&Instance>,
    path: Option<&Path>,
    flags: &Flags,
) -> CliResult<Outcome> {
    use Target::*;
    match (target, inst) {
        (CoreSum | CoreBroken | CoreAvoiding | CoreHstar, Some(Instance::GroundSet(g))) => {
            let mut g = g.clone();
            g.elements = permuted(&g.elements, &strings(&g.elements), flags)?;
            core_ground_set(target, &g, flags)
        }
        (CoreMaxmin, Some(Instance::Maxmin(m))) => {
            let names: Vec<String> = (0..m.values.len()).map(|i| i.to_string()).collect();
            let values: Vec<BigInt> = permuted(&m.values, &names, flags)?
                .into_iter()
                .map(|v| v.0)
                .collect();
            instance::check_elements("max-min values", values.len(), flags.cap_elements)?;
            let r = engine::maxmin_identity(&values, m.k)?;
            Ok(Outcome::ok(json!({
                "k": m.k,
                "lhs": big(&r.lhs),
                "pruned": big(&r.pruned),
                "rhs": big(&r.rhs),
                "holds": r.holds(),
            })))
        }
        (CoreUnion, Some(Instance::SetFamily(s))) => core_union(s, flags),
        (
            GraphChromatic | GraphScp | GraphClawFree | GraphCycles | GraphDomination,
            Some(Instance::Graph(g)),
        ) => {
            let mut g = g.clone();
            if matches!(target, GraphDomination | GraphClawFree) {
                g.vertices = permuted(&g.vertices, &strings(&g.vertices), flags)?;
            } else {
                let names: Vec<String> = g.edges.iter().map(|[u, v]| format!("{}-{}", u.0, v.0)).collect();
                g.edges = permuted(&g.edges, &names, flags)?;
            }
            graph(target, &g.graph(flags.cap_elements)?, flags)
        }
        (HypergraphChromatic, Some(Instance::Hypergraph(h))) => hypergraph(h, flags),
        (MatroidCharacteristic | MatroidBeta, Some(Instance::Matroid(m))) => {
            let mut m = m.clone();
            if let Some(elements) = &m.elements {
                m.elements = Some(permuted(elements, &strings(elements), flags)?);
            } else {
                no_permutation(flags, target)?;
            }
            matroid(target, &m.matroid(path, flags.cap_elements)?, flags)
        }
        (LatticeMobius, Some(Instance::Lattice(l))) => {
            no_permutation(flags, target)?;
            instance::check_elements("lattice", l.elements.len(), flags.cap_elements)?;
            let l = l.body().lattice()?;
            let m = method(flags, "recursive", &["recursive", "oracle", "atoms"])?;
            let value = if is(m, "recursive") {
                l.mobius()
            } else if is(m, "oracle") {
                whitney::oracle::mobius(&l)
            } else {
                let cc = lattice::Crosscut::antichain(&l, l.atoms())?;
                lattice::rota_crosscut_mode(&l, &cc, true)?
            };
            Ok(Outcome::ok(json!({ "elements": l.len(), "mobius": value })))
        }
        (LatticeCrosscut | LatticeBlassSagan, Some(Instance::Crosscut(c))) => {
            let mut c = c.clone();
            c.elements = permuted(&c.elements, &strings(&c.elements), flags)?;
            instance::check_elements("crosscut", c.elements.len(), flags.cap_elements)?;
            crosscut(target, &c, flags)
        }
        (GeometryVerify | GeometryFree | GeometryReduce, Some(Instance::Geometry(g))) => {
            let mut g = g.clone();
            g.elements = permuted(&g.elements, &strings(&g.elements), flags)?;
            geometry(target, &g, flags)
        }
        (NumberMobius | NumberGcd | NumberTotient | NumberDirichletInverse | NumberComplex, inst) => {
            no_permutation(flags, target)?;
            let n = match (inst, flags.n) {
                (Some(Instance::Divisor(d)), None) => d.n,
                (None, Some(n)) => n,
                (Some(Instance::Divisor(_)), Some(_)) => {
                    return Err(CliError::schema("give either an instance file or --n, not both"))
                }
                (None, None) => {
                    return Err(CliError::schema(format!(
                        "`{}` needs --n or a divisor instance",
                        target.name()
                    )))
                }
                (other, _) => return Err(wrong_kind(target, "divisor", other)),
            };
            numbers(target, n, flags)
        }
        (NumberZeta | NumberPrimorial, None) => {
            no_permutation(flags, target)?;
            numbers(target, 0, flags)
        }
        (NumberZeta | NumberPrimorial, other) => Err(wrong_kind(target, "no", other)),
        (CoreSum | CoreBroken | CoreAvoiding | CoreHstar, other) => {
            Err(wrong_kind(target, "ground-set", other))
        }
        (CoreMaxmin, other) => Err(wrong_kind(target, "maxmin", other)),
        (CoreUnion, other) => Err(wrong_kind(target, "set-family", other)),
        (GraphChromatic | GraphScp | GraphClawFree | GraphCycles | GraphDomination, other) => {
            Err(wrong_kind(target, "graph", other))
        }
        (HypergraphChromatic, other) => Err(wrong_kind(target, "hypergraph", other)),
        (MatroidCharacteristic | MatroidBeta, other) => Err(wrong_kind(target, "matroid", other)),
        (LatticeMobius, other) => Err(wrong_kind(target, "lattice", other)),
        (LatticeCrosscut | LatticeBlassSagan, other) => Err(wrong_kind(target, "crosscut", other)),
        (GeometryVerify | GeometryFree | GeometryReduce, other) => Err(wrong_kind(target, "geometry", other)),
    }
}

fn label_sets(names: &[String], sets: impl IntoIterator<Item = Subset>) -> Vec<Vec<String>> {
    sets.into_iter().map(|s| labels(names, s)).collect()
}

fn core_ground_set(target: Target, g: &instance::GroundSetSpec, flags: &Flags) -> CliResult<Outcome> {
    let ground = g.ground(flags.cap_elements)?;
    let family = g.family(&ground)?;
    let names = ground.labels();
    let derived = derive_broken_circuits(&family);
    let selection = match g.broken_sets()? {
        None => BrokenSelection::All,
        Some(sets) => BrokenSelection::Subfamily(sets),
    };
    match target {
        Target::CoreBroken => {
            let list: Vec<Value> = derived
                .iter()
                .map(|b| json!({ "set": labels(names, b.set), "circuit": labels(names, b.witness) }))
                .collect();
            Ok(Outcome::ok(json!({ "elements": names, "broken": list })))
        }
        Target::CoreAvoiding => {
            let broken: Vec<Subset> = match &selection {
                BrokenSelection::All => derived.iter().map(|b| b.set).collect(),
                BrokenSelection::Subfamily(s) => s.clone(),
            };
            let counts = engine::enumerate_avoiding(&ground, &broken)?;
            let total: u64 = counts.iter().sum();
            Ok(Outcome::ok(json!({ "counts": counts, "total": total })))
        }
        Target::CoreHstar => {
            let h = convex::hstar_from_circuits(&ground, &family)?;
            let free = h.geometry.free_sets();
            Ok(Outcome::ok(json!({
                "closed_sets": h.geometry.system().closed_sets().len(),
                "free_sets": label_sets(names, free.iter().copied()),
                "free_equals_avoiding": true,
            })))
        }
        _ => {
            let f = Function::new(&g.function, &g.elements)?;
            let eval = |a: Subset| f.eval(a);
            let r = engine::reduce(&eval, &ground, &family, &selection, flags.assume_condition)?;
            let broken = label_sets(names, r.broken.iter().map(|b| b.set));
            let condition = match &r.condition {
                Condition::Verified => json!("verified"),
                Condition::Asserted => json!("asserted"),
                Condition::Violated { circuit, subset, sum } => {
                    let witness = json!({
                        "circuit": labels(names, *circuit),
                        "subset": labels(names, *subset),
                        "sum": big(sum),
                    });
                    return Ok(Outcome {
                        body: json!({ "condition": "violated", "violation": witness, "broken": broken }),
                        exit: 4,
                    });
                }
            };
            Ok(Outcome::ok(json!({
                "condition": condition,
                "broken": broken,
                "full": r.full.as_ref().map(big),
                "pruned": r.pruned.as_ref().map(big),
                "agrees": r.agrees(),
            })))
        }
    }
}

fn core_union(s: &instance::SetFamilySpec, flags: &Flags) -> CliResult<Outcome> {
    let index = permuted(&s.index, &strings(&s.index), flags)?;
    instance::check_elements("set family index", index.len(), flags.cap_elements)?;
    let position = |l: &Label, all: &[Label]| {
        all.iter()
            .position(|x| x == l)
            .ok_or_else(|| CliError::Core(whitney::Error::UnknownLabel(l.0.clone())))
    };
    let mut sets = Vec::new();
    for l in &index {
        let i = position(l, &s.index)?;
        let members = s.sets.get(i).ok_or_else(|| {
            CliError::schema(format!(
                "{} index labels but {} sets",
                s.index.len(),
                s.sets.len()
            ))
        })?;
        sets.push(
            members
                .iter()
                .map(|m| position(m, &s.universe))
                .collect::<CliResult<Vec<_>>>()?,
        );
    }
    if s.sets.len() != s.index.len() {
        return Err(CliError::schema(format!(
            "{} index labels but {} sets",
            s.index.len(),
            s.sets.len()
        )));
    }
    let ground = OrderedGroundSet::new(strings(&index))?;
    let family = IndexedSetFamily::new(ground, s.universe.len(), sets)?;
    let broken = s
        .broken
        .iter()
        .map(|w| Ok((instance::subset(&index, &w.set)?, position(&w.witness, &index)?)))
        .collect::<CliResult<Vec<_>>>()?;
    let r = engine::restricted_union_size(&family, &broken)?;
    let mut body = json!({
        "union_size": big(&r.union_size),
        "restricted": big(&r.restricted),
        "holds": r.holds(),
    });
    if let Some(order) = &s.order {
        let pairs = order
            .iter()
            .map(|[a, b]| Ok((position(a, &index)?, position(b, &index)?)))
            .collect::<CliResult<Vec<_>>>()?;
        let poset = FinitePoset::from_relation(strings(&index), &pairs)?;
        let chains = engine::narushima_union(&poset, &family)?;
        body["chains"] = big(&chains.restricted);
        body["holds"] = json!(r.holds() && chains.holds());
    }
    Ok(Outcome::ok(body))
}

fn edge_name(g: &Graph, e: usize) -> String {
    let (u, v) = g.edges()[e];
    format!("{}-{}", g.vertices()[u], g.vertices()[v])
}

fn graph(target: Target, g: &Graph, flags: &Flags) -> CliResult<Outcome> {
    let body = match target {
        Target::GraphChromatic => {
            let m = method(flags, "broken_circuit", &["full", "broken_circuit"])?;
            let c = g.chromatic_polynomial(if is(m, "full") {
                ChromaticMethod::Full
            } else {
                ChromaticMethod::BrokenCircuit
            })?;
            json!({ "polynomial": poly(&c.polynomial, "x"), "b": c.b })
        }
        Target::GraphScp => {
            let m = method(flags, "q", &["q", "direct", "eq5", "eq6"])?;
            if is(m, "q") {
                json!({ "polynomial": bipoly(&g.subgraph_component_polynomial()?) })
            } else {
                let qm = match m {
                    "eq5" => QMethod::Eq5,
                    "eq6" => QMethod::Eq6,
                    _ => QMethod::Direct,
                };
                json!({ "at_x": -1, "polynomial": poly(&g.q_at_minus1(qm)?, "y") })
            }
        }
        Target::GraphClawFree => {
            let bad: Vec<&str> = (0..g.vertex_count())
                .filter(|&v| g.is_claw_centre(v) && g.on_cycle(v))
                .map(|v| g.vertices()[v].as_str())
                .collect();
            json!({ "cyclically_claw_free": bad.is_empty(), "claw_centres_on_cycles": bad })
        }
        Target::GraphCycles => {
            let cycles: Vec<Value> = g
                .simple_cycles(CYCLE_EDGE_CAP)?
                .iter()
                .map(|c| {
                    json!({
                        "vertices": labels(g.vertices(), c.vertices),
                        "edges": c.edges.iter().map(|e| edge_name(g, e)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({ "count": cycles.len(), "cycles": cycles })
        }
        _ => {
            let m = method(flags, "direct", &["direct", "bnh", "bnh_pruned"])?;
            let dm = match m.replace('-', "_").as_str() {
                "bnh" => DominationMethod::Bnh,
                "bnh_pruned" => DominationMethod::BnhPruned,
                _ => DominationMethod::Direct,
            };
            json!({ "polynomial": poly(&g.domination_polynomial(dm)?, "x") })
        }
    };
    Ok(Outcome::ok(body))
}

fn hypergraph(spec: &instance::HypergraphSpec, flags: &Flags) -> CliResult<Outcome> {
    let mut spec = spec.clone();
    if let Some(edges) = &spec.edges {
        let names: Vec<String> = edges.iter().map(|e| strings(e).join("-")).collect();
        let order = match &flags.permute_order {
            Some(p) => permutation(p, &names)?,
            None => (0..edges.len()).collect(),
        };
        spec.edges = Some(reorder(edges, &order));
        if let Some(circuits) = &spec.circuits {
            let mut new_pos = vec![0; order.len()];
            for (k, &i) in order.iter().enumerate() {
                new_pos[i] = k;
            }
            spec.circuits = Some(
                circuits
                    .iter()
                    .map(|c| c.iter().map(|&i| new_pos.get(i).copied().unwrap_or(i)).collect())
                    .collect(),
            );
        }
    } else if flags.permute_order.is_some() {
        return Err(CliError::schema(
            "--permute-order needs explicit hypergraph edges",
        ));
    }
    let (h, grid) = spec.hypergraph(flags.cap_elements)?;
    let circuits: Option<CircuitFamily> = match flags.circuits.as_deref() {
        None if spec.circuits.is_some() => spec.listed_circuits(&h)?,
        None => grid,
        Some("file") => Some(
            spec.listed_circuits(&h)?
                .ok_or_else(|| CliError::schema("--circuits file, but the instance lists no circuits"))?,
        ),
        Some("rect") => {
            Some(grid.ok_or_else(|| CliError::schema("--circuits rect needs a `grid` instance"))?)
        }
        Some(other) => match other.strip_prefix("tight:").map(str::parse::<usize>) {
            Some(Ok(l)) => Some(h.tight_cycles(l)?),
            _ => {
                return Err(CliError::schema(format!(
                    "--circuits must be tight:l, file or rect, not `{other}`"
                )))
            }
        },
    };
    let default = if circuits.is_some() { "restricted" } else { "full" };
    let m = method(flags, default, &["full", "restricted"])?;
    let p = if is(m, "full") {
        h.chromatic(HyperMethod::Full)?
    } else {
        let family = circuits
            .as_ref()
            .ok_or_else(|| CliError::schema("the restricted method needs circuits (--circuits or a grid)"))?;
        h.chromatic(HyperMethod::Restricted(family))?
    };
    Ok(Outcome::ok(json!({
        "edges": h.edge_count(),
        "circuits": circuits.as_ref().map(CircuitFamily::len),
        "polynomial": poly(&p, "x"),
    })))
}

fn matroid(target: Target, m: &whitney::matroid::Matroid, flags: &Flags) -> CliResult<Outcome> {
    let body = if target == Target::MatroidCharacteristic {
        let name = method(flags, "heron", &["full", "heron", "broken_circuit"])?;
        let c = m.characteristic_polynomial(if is(name, "full") {
            CharacteristicMethod::Full
        } else {
            CharacteristicMethod::Heron
        })?;
        json!({ "rank": m.full_rank(), "polynomial": poly(&c.polynomial, "x"), "b": c.b })
    } else {
        let name = method(flags, "broken_circuit", &["full", "broken_circuit", "derivative"])?;
        let bm = match name.replace('-', "_").as_str() {
            "full" => BetaMethod::Full,
            "derivative" => BetaMethod::Derivative,
            _ => BetaMethod::BrokenCircuit,
        };
        json!({ "rank": m.full_rank(), "beta": big(&m.beta_invariant(bm)?) })
    };
    Ok(Outcome::ok(body))
}

fn crosscut(target: Target, c: &instance::CrosscutSpec, flags: &Flags) -> CliResult<Outcome> {
    let (l, cc) = c.build()?;
    let atoms_mode = c.atoms_mode || flags.atoms_mode;
    if target == Target::LatticeCrosscut {
        let value = lattice::rota_crosscut_mode(&l, &cc, atoms_mode)?;
        return Ok(Outcome::ok(
            json!({ "crosscut_sum": value, "mobius": l.mobius() }),
        ));
    }
    let names: Vec<String> = cc.elements().iter().map(|&e| l.label(e).to_string()).collect();
    let family = lattice::blass_sagan_b(&l, &cc, atoms_mode)?;
    let sub = c.broken_positions(&cc, &l)?;
    let r = lattice::blass_sagan_mu(&l, &cc, sub.as_deref(), atoms_mode)?;
    let listed: Vec<Value> = family
        .iter()
        .map(|w| json!({ "set": labels(&names, w.set), "witness": names[w.witness] }))
        .collect();
    Ok(Outcome::ok(json!({
        "family": listed,
        "restricted": r.restricted,
        "unrestricted": r.unrestricted,
        "mobius": r.mobius,
        "cancellation_holds": r.cancellation_holds,
        "holds": r.holds(),
    })))
}

fn geometry(target: Target, g: &instance::GeometrySpec, flags: &Flags) -> CliResult<Outcome> {
    if target == Target::GeometryVerify {
        return geometry_verify(g, flags);
    }
    let cg = g.geometry(flags.cap_elements)?;
    let names = cg.ground().labels();
    if target == Target::GeometryFree {
        let free = cg.free_sets();
        return Ok(Outcome::ok(json!({
            "free_sets": label_sets(names, free.iter().copied()),
            "signed_count": big(&cg.count_free_signed()),
            "euler_characteristic": big(&cg.euler_characteristic_free()?),
        })));
    }
    let spec = g
        .function
        .as_ref()
        .ok_or_else(|| CliError::schema("geometry-reduce needs a `function`"))?;
    let f = Function::new(spec, &g.elements)?;
    let eval = |a: Subset| f.eval(a);
    let r = convex::reduce_theorem2(&eval, &cg, flags.assume_condition)?;
    let condition = match &r.condition {
        IntervalCondition::Verified => json!("verified"),
        IntervalCondition::Asserted => json!("asserted"),
        IntervalCondition::Violated { closed, basis, sum } => {
            return Ok(Outcome {
                body: json!({
                    "condition": "violated",
                    "violation": {
                        "closed": labels(names, *closed),
                        "basis": labels(names, *basis),
                        "sum": big(sum),
                    },
                    "full": big(&r.full),
                }),
                exit: 4,
            })
        }
    };
    Ok(Outcome::ok(json!({
        "condition": condition,
        "full": big(&r.full),
        "free": r.free.as_ref().map(big),
        "agrees": r.agrees(),
    })))
}

/// Checks the axioms one at a time so a failure can name the axiom and a
/// witness.
fn geometry_verify(g: &instance::GeometrySpec, flags: &Flags) -> CliResult<Outcome> {
    let ground = g.ground(flags.cap_elements)?;
    let names = ground.labels().to_vec();
    let closed = g.closed_sets()?;
    let fail = |axiom: &str, witness: Value| Outcome {
        body: json!({ "valid": false, "axiom": axiom, "witness": witness }),
        exit: 1,
    };
    if !closed.contains(&ground.all()) {
        return Ok(fail("the ground set is closed", json!({ "set": names })));
    }
    for (i, &a) in closed.iter().enumerate() {
        for &b in &closed[i + 1..] {
            let c = a.intersection(b);
            if !closed.contains(&c) {
                return Ok(fail(
                    "closed sets are closed under intersection",
                    json!({ "sets": [labels(&names, a), labels(&names, b)], "intersection": labels(&names, c) }),
                ));
            }
        }
    }
    let system = ClosureSystem::from_closed_sets(ground, &closed)?;
    for a in system.closed_sets() {
        let ex = system.extreme_points(a);
        if system.hull(ex) != a {
            return Ok(fail(
                "every closed set has a unique basis",
                json!({ "closed": labels(&names, a), "extreme_points": labels(&names, ex), "hull": labels(&names, system.hull(ex)) }),
            ));
        }
    }
    let cg = ConvexGeometry::new(system)?;
    Ok(Outcome::ok(json!({
        "valid": true,
        "closed_sets": cg.system().closed_sets().len(),
        "free_sets": cg.free_sets().len(),
    })))
}

fn multiplicative(flags: &Flags) -> CliResult<Multiplicative> {
    Ok(flags.h.parse()?)
}

fn numbers(target: Target, n: u64, flags: &Flags) -> CliResult<Outcome> {
    let body = match target {
        Target::NumberMobius => {
            let m = method(flags, "classical", &["classical", "lattice", "eq12", "eq19"])?;
            let value = match m {
                "lattice" => FiniteLattice::divisor(n)?.mobius(),
                "eq12" => number::gcd_expansion(n, GcdVariant::Eq12, flags.modified_domain)?.value,
                "eq19" => number::gcd_expansion(n, GcdVariant::Eq19, flags.modified_domain)?.value,
                _ => number::classical_mobius(n)?,
            };
            json!({ "n": n, "mobius": value })
        }
        Target::NumberGcd => {
            let m = method(flags, "eq12", &["eq12", "eq19"])?;
            let variant = if m == "eq19" {
                GcdVariant::Eq19
            } else {
                GcdVariant::Eq12
            };
            let e = number::gcd_expansion(n, variant, flags.modified_domain)?;
            json!({
                "n": n,
                "value": e.value,
                "reduced": e.reduced,
                "over_coprimes": e.over_coprimes,
                "over_primes_star": e.over_primes_star,
                "over_primes_lcm": e.over_primes_lcm,
                "mobius": e.mobius,
                "cancellation_holds": e.cancellation_holds,
                "holds": e.holds(),
            })
        }
        Target::NumberTotient => {
            let h = multiplicative(flags)?;
            let m = method(
                flags,
                "product",
                &["product", "divisor_sum", "subset_sum", "chain_sum"],
            )?;
            let tm = match m.replace('-', "_").as_str() {
                "divisor_sum" => TotientMethod::DivisorSum,
                "subset_sum" => TotientMethod::SubsetSum,
                "chain_sum" => TotientMethod::ChainSum,
                _ => TotientMethod::Product,
            };
            let t = number::totient_h(n, h, tm, flags.modified_domain)?;
            json!({
                "n": n,
                "h": flags.h,
                "value": rational(&t.value),
                "product": rational(&t.product_identity.0),
                "mobius_sum": rational(&t.product_identity.1),
                "identity_holds": t.identity_holds(),
            })
        }
        Target::NumberDirichletInverse => {
            let h = multiplicative(flags)?;
            let m = method(
                flags,
                "product",
                &["product", "divisor_sum", "subset_sum", "chain_sum"],
            )?;
            let im = match m.replace('-', "_").as_str() {
                "divisor_sum" => InverseMethod::DivisorSum,
                "subset_sum" => InverseMethod::SubsetSum,
                "chain_sum" => InverseMethod::ChainSum,
                _ => InverseMethod::Product,
            };
            let v = number::dirichlet_inverse_totient(n, h, im, flags.modified_domain)?;
            json!({ "n": n, "h": flags.h, "value": rational(&v) })
        }
        Target::NumberComplex => {
            let kind = match flags.kind.as_str() {
                "S" | "s" | "gcd" => ComplexKind::S,
                "T" | "t" | "lcm" => ComplexKind::T,
                other => return Err(CliError::schema(format!("--kind must be S or T, not `{other}`"))),
            };
            let c = number::build_complex(n, kind)?;
            let bonferroni: Vec<Value> = c
                .bonferroni()
                .iter()
                .map(|&(r, t, ok)| json!({ "r": r, "truncated": t, "holds": ok }))
                .collect();
            json!({
                "n": n,
                "kind": if kind == ComplexKind::S { "S" } else { "T" },
                "vertices": c.vertices(),
                "faces": c.faces().len(),
                "dimension": c.dimension(),
                "euler_characteristic": c.euler_characteristic(),
                "bonferroni": bonferroni,
                "star_isomorphic": number::star_isomorphism(n)?,
            })
        }
        Target::NumberZeta => {
            let s = flags.s.unwrap_or(2.0);
            let bound = flags
                .prime_bound
                .ok_or_else(|| CliError::schema("number-zeta needs --prime-bound"))?;
            let z = number::zeta_reciprocal(s, bound)?;
            json!({
                "s": float(s),
                "prime_bound": bound,
                "value": float(z.value),
                "reference": z.reference.map(float),
                "error": z.error().map(float),
            })
        }
        _ => {
            let bound = flags
                .prime_bound
                .ok_or_else(|| CliError::schema("number-primorial needs --prime-bound"))?;
            let s = flags.s.unwrap_or(1.0);
            if s.fract() != 0.0 || !(1.0..=64.0).contains(&s) {
                return Err(CliError::schema(
                    "number-primorial needs an integer --s between 1 and 64",
                ));
            }
            let (subset, product) = number::zeta_primorial_exact(bound, s as u32)?;
            json!({
                "prime_bound": bound,
                "s": s as u32,
                "primorial": big(&number::primorial(bound)?),
                "subset_sum": rational(&subset),
                "product": rational(&product),
                "holds": subset == product,
            })
        }
    };
    Ok(Outcome::ok(body))
}

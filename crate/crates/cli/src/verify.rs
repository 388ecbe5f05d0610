//! `verify <suite>`: engine-versus-oracle comparisons over generated and
//! shipped instances.

use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use whitney::algebra::{BiPolynomial, GroupValue, IntPolynomial};
use whitney::convex::{self, IntervalCondition};
use whitney::engine::{
    self, derive_broken_circuits, BrokenSelection, CircuitFamily, Condition, IndexedSetFamily,
    OrderedGroundSet,
};
use whitney::error::ErrorKind;
use whitney::generators::{
    nonisomorphic_graphs, random_cancelling_instance, random_convex_geometry, random_poset,
    random_set_family, random_subfamily, random_uniform_hypergraph, relation_pairs,
};
use whitney::graph::{ChromaticMethod, DominationMethod, Graph, QMethod};
use whitney::hypergraph::{HyperMethod, Hypergraph};
use whitney::lattice::{blass_sagan_b, blass_sagan_mu, Crosscut, FiniteLattice};
use whitney::matroid::{BetaMethod, CharacteristicMethod, Matroid};
use whitney::number::{self, ComplexKind, GcdVariant, InverseMethod, Multiplicative, TotientMethod};
use whitney::{oracle, Subset};

use crate::compute::{self, Flags, Target};
use crate::error::CliError;
use crate::generate::{self, Kind, Params};
use crate::instance::{self, Function, Instance};
use crate::output::labels;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Algebra,
    #[value(alias = "core")]
    WhitneyCore,
    ConvexGeometry,
    GraphPolynomials,
    HypergraphPolynomials,
    Matroid,
    Lattice,
    NumberTheory,
    Cli,
    TestOracles,
}

/// Instances shipped in `instances/`, by file name.
pub const SHIPPED: &[(&str, &str)] = &[
    ("b3.json", include_str!("../../../instances/b3.json")),
    (
        "b3-crosscut.json",
        include_str!("../../../instances/b3-crosscut.json"),
    ),
    ("d30.json", include_str!("../../../instances/d30.json")),
    ("geometry.json", include_str!("../../../instances/geometry.json")),
    ("grid-2x3.json", include_str!("../../../instances/grid-2x3.json")),
    (
        "ground-set.json",
        include_str!("../../../instances/ground-set.json"),
    ),
    (
        "hypergraph.json",
        include_str!("../../../instances/hypergraph.json"),
    ),
    ("k3.json", include_str!("../../../instances/k3.json")),
    ("k4.json", include_str!("../../../instances/k4.json")),
    ("maxmin.json", include_str!("../../../instances/maxmin.json")),
    (
        "set-family.json",
        include_str!("../../../instances/set-family.json"),
    ),
    ("u23.json", include_str!("../../../instances/u23.json")),
];

fn shipped(name: &str) -> Result<Instance, Failure> {
    let text = SHIPPED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| fail(json!({ "missing": name })))?;
    Ok(instance::parse(text)?)
}

pub struct Ctx {
    pub seed: u64,
    pub mutant: bool,
    pub cap: Option<usize>,
}

impl Ctx {
    /// An independent stream per check, fixed by the seed.
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }

    fn fits(&self, size: usize) -> bool {
        self.cap.is_none_or(|c| size <= c)
    }
}

#[derive(Debug)]
enum Failure {
    Fail(Value),
    Cap(String),
}

fn fail(witness: Value) -> Failure {
    Failure::Fail(witness)
}

impl From<whitney::Error> for Failure {
    fn from(e: whitney::Error) -> Self {
        match e.kind() {
            ErrorKind::Cap => Failure::Cap(e.to_string()),
            _ => fail(json!({ "error": e.to_string() })),
        }
    }
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        match e {
            CliError::Core(inner) => inner.into(),
            other => fail(json!({ "error": other.to_string() })),
        }
    }
}

type CheckResult = Result<String, Failure>;

macro_rules! ensure {
    ($cond:expr, $witness:expr) => {
        let ok: bool = $cond;
        if !ok {
            return Err(fail($witness));
        }
    };
}

struct Check {
    name: &'static str,
    suite: Suite,
    /// Compares an engine against an independent oracle.
    oracle: bool,
    run: fn(&Ctx) -> CheckResult,
}

const CHECKS: &[Check] = &[
    Check {
        name: "algebra/group-axioms",
        suite: Suite::Algebra,
        oracle: false,
        run: group_axioms,
    },
    Check {
        name: "algebra/polynomial-evaluation",
        suite: Suite::Algebra,
        oracle: false,
        run: polynomial_eval,
    },
    Check {
        name: "core/maxmin",
        suite: Suite::WhitneyCore,
        oracle: true,
        run: maxmin,
    },
    Check {
        name: "core/monotone-pruning",
        suite: Suite::WhitneyCore,
        oracle: false,
        run: monotone_pruning,
    },
    Check {
        name: "core/restricted-union",
        suite: Suite::WhitneyCore,
        oracle: true,
        run: restricted_union,
    },
    Check {
        name: "core/shipped-ground-set",
        suite: Suite::WhitneyCore,
        oracle: true,
        run: shipped_ground_set,
    },
    Check {
        name: "core/shipped-instances",
        suite: Suite::WhitneyCore,
        oracle: false,
        run: shipped_core,
    },
    Check {
        name: "core/pruning-random",
        suite: Suite::WhitneyCore,
        oracle: true,
        run: pruning_random,
    },
    Check {
        name: "convex/euler-characteristic",
        suite: Suite::ConvexGeometry,
        oracle: false,
        run: euler,
    },
    Check {
        name: "convex/hstar-bridge",
        suite: Suite::ConvexGeometry,
        oracle: false,
        run: hstar_bridge,
    },
    Check {
        name: "convex/shipped-geometry",
        suite: Suite::ConvexGeometry,
        oracle: false,
        run: shipped_geometry,
    },
    Check {
        name: "convex/free-sets-random",
        suite: Suite::ConvexGeometry,
        oracle: true,
        run: free_sets_random,
    },
    Check {
        name: "graph/chromatic",
        suite: Suite::GraphPolynomials,
        oracle: true,
        run: chromatic,
    },
    Check {
        name: "graph/domination",
        suite: Suite::GraphPolynomials,
        oracle: true,
        run: domination,
    },
    Check {
        name: "graph/subgraph-component",
        suite: Suite::GraphPolynomials,
        oracle: true,
        run: scp,
    },
    Check {
        name: "hypergraph/grids",
        suite: Suite::HypergraphPolynomials,
        oracle: true,
        run: grids,
    },
    Check {
        name: "hypergraph/tight-cycles",
        suite: Suite::HypergraphPolynomials,
        oracle: true,
        run: tight,
    },
    Check {
        name: "matroid/graphic",
        suite: Suite::Matroid,
        oracle: true,
        run: graphic_matroids,
    },
    Check {
        name: "matroid/uniform",
        suite: Suite::Matroid,
        oracle: true,
        run: uniform_matroids,
    },
    Check {
        name: "lattice/blass-sagan",
        suite: Suite::Lattice,
        oracle: true,
        run: blass_sagan,
    },
    Check {
        name: "lattice/mobius",
        suite: Suite::Lattice,
        oracle: true,
        run: lattice_mobius,
    },
    Check {
        name: "lattice/shipped-crosscut",
        suite: Suite::Lattice,
        oracle: false,
        run: shipped_crosscut,
    },
    Check {
        name: "number/complexes",
        suite: Suite::NumberTheory,
        oracle: false,
        run: complexes,
    },
    Check {
        name: "number/dirichlet-inverse",
        suite: Suite::NumberTheory,
        oracle: false,
        run: inverse,
    },
    Check {
        name: "number/gcd-expansions",
        suite: Suite::NumberTheory,
        oracle: true,
        run: gcd_expansions,
    },
    Check {
        name: "number/primorial",
        suite: Suite::NumberTheory,
        oracle: false,
        run: primorial,
    },
    Check {
        name: "number/totient",
        suite: Suite::NumberTheory,
        oracle: false,
        run: totient,
    },
    Check {
        name: "number/zeta",
        suite: Suite::NumberTheory,
        oracle: false,
        run: zeta,
    },
    Check {
        name: "cli/round-trip",
        suite: Suite::Cli,
        oracle: false,
        run: round_trip,
    },
    Check {
        name: "cli/shipped-schemas",
        suite: Suite::Cli,
        oracle: false,
        run: shipped_schemas,
    },
    Check {
        name: "oracle/goldens",
        suite: Suite::TestOracles,
        oracle: true,
        run: oracle_goldens,
    },
];

fn selected(suite: Suite, check: &Check) -> bool {
    match suite {
        Suite::All => true,
        Suite::TestOracles => check.oracle,
        s => check.suite == s,
    }
}

/// Runs the suite; the report lists checks sorted by name.
pub fn run(suite: Suite, ctx: &Ctx) -> (Value, bool) {
    let mut results: Vec<(&str, Value, bool)> = CHECKS
        .par_iter()
        .filter(|c| selected(suite, c))
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)(ctx);
            let ms = start.elapsed().as_secs_f64() * 1000.0;
            let wall = json!((ms * 10.0).round() / 10.0);
            let (entry, failed) = match outcome {
                Ok(detail) => (
                    json!({ "name": c.name, "status": "pass", "detail": detail, "wall_ms": wall }),
                    false,
                ),
                Err(Failure::Cap(why)) => (
                    json!({ "name": c.name, "status": "skipped-cap", "detail": why, "wall_ms": wall }),
                    false,
                ),
                Err(Failure::Fail(witness)) => (
                    json!({ "name": c.name, "status": "fail", "witness": witness, "wall_ms": wall }),
                    true,
                ),
            };
            (c.name, entry, failed)
        })
        .collect();
    results.sort_by(|a, b| a.0.cmp(b.0));
    let failed = results.iter().filter(|r| r.2).count();
    let passed = results.iter().filter(|r| r.1["status"] == "pass").count();
    let report = json!({
        "suite": suite.to_possible_value().expect("no skipped variants").get_name(),
        "seed": ctx.seed,
        "mutant": ctx.mutant,
        "passed": passed,
        "failed": failed,
        "skipped": results.len() - passed - failed,
        "checks": results.into_iter().map(|r| r.1).collect::<Vec<_>>(),
    });
    (report, failed == 0)
}

fn small_int(rng: &mut ChaCha8Rng) -> BigInt {
    BigInt::from(rng.gen_range(-9..=9))
}

fn random_poly(rng: &mut ChaCha8Rng) -> IntPolynomial {
    let len = rng.gen_range(0..5);
    IntPolynomial::new((0..len).map(|_| small_int(rng)).collect())
}

fn random_bipoly(rng: &mut ChaCha8Rng) -> BiPolynomial {
    let mut p = BiPolynomial::zero();
    for _ in 0..rng.gen_range(0..5) {
        p.add_term(&small_int(rng), rng.gen_range(0..3), rng.gen_range(0..3));
    }
    p
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(small_int(rng), BigInt::from(rng.gen_range(1..=7)))
}

fn axioms<V: GroupValue>(a: &V, b: &V, c: &V) -> bool {
    let assoc = a.added(b).added(c) == a.added(&b.added(c));
    let comm = a.added(b) == b.added(a);
    let inverse = a.added(&a.negated()).is_neutral();
    let neutral = a.added(&V::neutral()) == *a;
    assoc && comm && inverse && neutral
}

fn group_axioms(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(1);
    let rounds = 200;
    for _ in 0..rounds {
        let (a, b, c) = (small_int(&mut rng), small_int(&mut rng), small_int(&mut rng));
        ensure!(
            axioms(&a, &b, &c),
            json!({ "type": "integer", "values": [a.to_string(), b.to_string(), c.to_string()] })
        );
        let (p, q, r) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        ensure!(
            axioms(&p, &q, &r),
            json!({ "type": "polynomial", "values": [p.to_string(), q.to_string(), r.to_string()] })
        );
        let (p, q, r) = (
            random_bipoly(&mut rng),
            random_bipoly(&mut rng),
            random_bipoly(&mut rng),
        );
        ensure!(
            axioms(&p, &q, &r),
            json!({ "type": "bivariate", "values": [p.to_string(), q.to_string(), r.to_string()] })
        );
        let (p, q, r) = (
            random_rational(&mut rng),
            random_rational(&mut rng),
            random_rational(&mut rng),
        );
        ensure!(
            axioms(&p, &q, &r),
            json!({ "type": "rational", "values": [p.to_string(), q.to_string(), r.to_string()] })
        );
    }
    Ok(format!("{rounds} triples of each type"))
}

fn polynomial_eval(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(2);
    let rounds = 200;
    for _ in 0..rounds {
        let (p, q) = (random_poly(&mut rng), random_poly(&mut rng));
        let x = small_int(&mut rng);
        let sum_ok = (&p + &q).eval(&x) == p.eval(&x) + q.eval(&x);
        let prod_ok = (&p * &q).eval(&x) == p.eval(&x) * q.eval(&x);
        ensure!(
            sum_ok && prod_ok,
            json!({ "p": p.to_string(), "q": q.to_string(), "x": x.to_string() })
        );
    }
    Ok(format!("{rounds} pairs"))
}

fn pruning_random(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(3);
    let (mut instances, mut comparisons) = (0, 0);
    for round in 0..150 {
        let n = rng.gen_range(1..=10);
        if !ctx.fits(n) {
            continue;
        }
        let k = rng.gen_range(1..=5);
        let inst = random_cancelling_instance(n, k, 4, &mut rng)?;
        let f = |a: Subset| inst.eval(a);
        let derived: Vec<Subset> = derive_broken_circuits(&inst.circuits)
            .iter()
            .map(|b| b.set)
            .collect();
        let mut selections = vec![BrokenSelection::All];
        for _ in 0..3 {
            selections.push(BrokenSelection::Subfamily(random_subfamily(&derived, &mut rng)));
        }
        for sel in &selections {
            let r = engine::reduce(&f, &inst.ground, &inst.circuits, sel, false)?;
            ensure!(
                r.condition == Condition::Verified && r.agrees(),
                json!({ "round": round, "n": n, "full": format!("{:?}", r.full), "pruned": format!("{:?}", r.pruned) })
            );
            comparisons += 1;
        }
        instances += 1;
    }
    if instances == 0 {
        return Err(Failure::Cap("every instance exceeds --cap-elements".into()));
    }
    Ok(format!("{instances} instances, {comparisons} comparisons"))
}

fn monotone_pruning(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(4);
    for round in 0..100 {
        let n = rng.gen_range(1..=10);
        let ground = OrderedGroundSet::indexed(n)?;
        let random_sets = |rng: &mut ChaCha8Rng| -> Vec<Subset> {
            (0..rng.gen_range(0..4))
                .map(|_| Subset(rng.gen_range(1..1u64 << n)))
                .collect()
        };
        let b1 = random_sets(&mut rng);
        let mut both = b1.clone();
        both.extend(random_sets(&mut rng));
        let c1 = engine::enumerate_avoiding(&ground, &b1)?;
        let c2 = engine::enumerate_avoiding(&ground, &both)?;
        ensure!(
            c2.iter().zip(&c1).all(|(a, b)| a <= b),
            json!({ "round": round, "fewer": c1, "more": c2 })
        );
    }
    Ok("100 nested pairs".into())
}

fn maxmin(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(5);
    let mut cases = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let mut values: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-20..=20))).collect();
        for k in 1..=n {
            let r = engine::maxmin_identity(&values, k)?;
            ensure!(
                r.holds(),
                json!({ "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(), "k": k })
            );
            values.shuffle(&mut rng);
            let s = engine::maxmin_identity(&values, k)?;
            ensure!(
                s == r,
                json!({ "permutation changed the result": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(), "k": k })
            );
            cases += 1;
        }
    }
    Ok(format!("{cases} (instance, k) pairs"))
}

fn restricted_union(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(6);
    let mut witnessed = 0;
    for round in 0..100 {
        let m = rng.gen_range(1..=8);
        let universe = rng.gen_range(1..=10);
        let sets = random_set_family(m, universe, 0.5, &mut rng);
        let family = IndexedSetFamily::new(OrderedGroundSet::indexed(m)?, universe, sets.clone())?;
        let mut broken = Vec::new();
        for b in Subset::full(m).subsets().skip(1).filter(|b| b.len() <= 3) {
            let top = b.max().expect("nonempty");
            let meet = family.intersection(b);
            if let Some(c) = (top + 1..m).find(|&c| meet.is_subset_of(family.set(c))) {
                if rng.gen_bool(0.7) {
                    broken.push((b, c));
                }
            }
        }
        witnessed += broken.len();
        let r = engine::restricted_union_size(&family, &broken)?;
        let direct = BigInt::from(oracle::union_size(&sets));
        ensure!(
            r.holds() && r.union_size == direct,
            json!({ "round": round, "restricted": r.restricted.to_string(), "union": direct.to_string() })
        );
    }
    Ok(format!("100 families, {witnessed} witnessed broken sets"))
}

/// The shipped ground set through the pruned sum; with the mutant, a set that is
/// not a broken circuit joins the pruning family and the sums must differ.
fn shipped_ground_set(ctx: &Ctx) -> CheckResult {
    let Instance::GroundSet(spec) = shipped("ground-set.json")? else {
        return Err(fail(json!({ "error": "ground-set.json has the wrong kind" })));
    };
    let ground = spec.ground(ctx.cap)?;
    let family = spec.family(&ground)?;
    let f = Function::new(&spec.function, &spec.elements)?;
    let eval = |a: Subset| f.eval(a);
    let full = engine::sum_full(&eval, &ground)?;
    let mut broken: Vec<Subset> = derive_broken_circuits(&family).iter().map(|b| b.set).collect();
    ensure!(
        engine::verify_cancellation(&eval, &family, &ground)?.holds(),
        json!({ "error": "cancellation fails" })
    );
    if ctx.mutant {
        let injected = ground
            .all()
            .subsets()
            .skip(1)
            .filter(|x| !broken.contains(x))
            .find(|&x| {
                let mut with = broken.clone();
                with.push(x);
                engine::sum_pruned(&eval, &ground, &with).is_ok_and(|v| v != full)
            });
        if let Some(x) = injected {
            broken.push(x);
        }
    }
    let pruned = engine::sum_pruned(&eval, &ground, &broken)?;
    if pruned != full {
        let names = ground.labels();
        let dropped = ground.all().subsets().find(|&a| {
            broken.iter().any(|b| b.is_subset_of(a))
                && !derive_broken_circuits(&family)
                    .iter()
                    .any(|b| b.set.is_subset_of(a))
                && f.eval(a) != BigInt::from(0)
        });
        return Err(fail(json!({
            "injected": broken.last().map(|&x| labels(names, x)),
            "subset": dropped.map(|a| labels(names, a)),
            "full": full.to_string(),
            "pruned": pruned.to_string(),
        })));
    }
    Ok(format!("{} broken sets, sum {full}", broken.len()))
}

fn compute_shipped(target: Target, name: &str, flags: &Flags) -> Result<Value, Failure> {
    let inst = shipped(name)?;
    let out = compute::run_instance(target, Some(&inst), None, flags)?;
    ensure!(out.exit == 0, json!({ "instance": name, "output": out.body }));
    Ok(out.body)
}

fn shipped_core(_: &Ctx) -> CheckResult {
    let flags = Flags::default();
    let m = compute_shipped(Target::CoreMaxmin, "maxmin.json", &flags)?;
    ensure!(m["holds"] == true, m);
    let u = compute_shipped(Target::CoreUnion, "set-family.json", &flags)?;
    ensure!(u["holds"] == true, u);
    let s = compute_shipped(Target::CoreSum, "ground-set.json", &flags)?;
    ensure!(s["agrees"] == true, s);
    Ok("maxmin, set-family, ground-set".into())
}

fn free_sets_random(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(7);
    let mut count = 0;
    for round in 0..80 {
        let n = rng.gen_range(1..=7);
        if !ctx.fits(n) {
            continue;
        }
        let cg = random_convex_geometry(n, round, &mut rng)?;
        let gamma: Vec<i64> = (0..1usize << n).map(|_| rng.gen_range(-5..=5)).collect();
        let f = convex::hull_weighted(&cg, |a: Subset| BigInt::from(gamma[a.bits() as usize]));
        let r = convex::reduce_theorem2(&f, &cg, false)?;
        ensure!(
            r.condition == IntervalCondition::Verified && r.agrees(),
            json!({ "round": round, "closed_sets": cg.system().closed_sets().len(), "full": r.full.to_string() })
        );
        count += 1;
    }
    Ok(format!("{count} geometries"))
}

fn euler(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(8);
    for round in 0..80 {
        let n = rng.gen_range(1..=8);
        let cg = random_convex_geometry(n, round, &mut rng)?;
        let chi = cg.euler_characteristic_free()?;
        ensure!(
            chi == BigInt::from(1),
            json!({ "round": round, "chi": chi.to_string() })
        );
    }
    Ok("80 geometries".into())
}

fn hstar_bridge(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n)? {
            let ground = g.edge_ground()?;
            let family = CircuitFamily::new(&ground, g.cycles_edge_sets()?)?;
            let h = convex::hstar_from_circuits(&ground, &family)?;
            let broken: Vec<Subset> = derive_broken_circuits(&family).iter().map(|b| b.set).collect();
            let mut avoiding = Vec::new();
            engine::for_each_avoiding(ground.len(), &broken, |a| avoiding.push(a));
            avoiding.sort();
            ensure!(
                avoiding == h.geometry.free_sets(),
                json!({ "edges": g.edge_count(), "vertices": n })
            );
            count += 1;
        }
    }
    Ok(format!("{count} graphs"))
}

fn shipped_geometry(_: &Ctx) -> CheckResult {
    let flags = Flags::default();
    let v = compute_shipped(Target::GeometryVerify, "geometry.json", &flags)?;
    ensure!(v["valid"] == true, v);
    let r = compute_shipped(Target::GeometryReduce, "geometry.json", &flags)?;
    ensure!(r["agrees"] == true, r);
    let f = compute_shipped(Target::GeometryFree, "geometry.json", &flags)?;
    ensure!(f["euler_characteristic"] == "1", f);
    Ok("verify, reduce, free".into())
}

fn graph_witness(g: &Graph) -> Value {
    json!({ "vertices": g.vertices(), "edges": g.edges() })
}

fn chromatic(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n)? {
            let full = g.chromatic_polynomial(ChromaticMethod::Full)?;
            let bc = g.chromatic_polynomial(ChromaticMethod::BrokenCircuit)?;
            ensure!(full.polynomial == bc.polynomial, graph_witness(&g));
            for x in 0..=3u64 {
                let direct = oracle::colourings(&g, x)?;
                ensure!(
                    full.polynomial.eval(&BigInt::from(x)) == BigInt::from(direct),
                    json!({ "graph": graph_witness(&g), "x": x, "oracle": direct })
                );
            }
            count += 1;
        }
    }
    let k3 = Graph::complete(3)?.chromatic_polynomial(ChromaticMethod::BrokenCircuit)?;
    ensure!(
        k3.polynomial == IntPolynomial::from_i64s(&[0, 2, -3, 1]) && k3.b == Some(vec![1, 3, 2]),
        json!({ "K3": k3.polynomial.to_string() })
    );
    Ok(format!("{count} graphs, K3 golden"))
}

fn q_oracle(g: &Graph) -> Result<IntPolynomial, Failure> {
    let q = oracle::subgraph_components(g)?;
    let mut by_y = vec![BigInt::from(0); g.vertex_count() + 1];
    for (i, row) in q.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            let c = BigInt::from(c);
            by_y[j] += if i % 2 == 0 { c } else { -c };
        }
    }
    Ok(IntPolynomial::new(by_y))
}

fn scp(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n)? {
            if !g.is_cyclically_claw_free() {
                continue;
            }
            let direct = g.q_at_minus1(QMethod::Direct)?;
            let eq5 = g.q_at_minus1(QMethod::Eq5)?;
            let eq6 = g.q_at_minus1(QMethod::Eq6)?;
            ensure!(
                direct == eq5 && eq5 == eq6 && direct == q_oracle(&g)?,
                graph_witness(&g)
            );
            count += 1;
        }
    }
    let k3 = Graph::complete(3)?.q_at_minus1(QMethod::Eq5)?;
    ensure!(
        k3 == IntPolynomial::from_i64s(&[1, -1]),
        json!({ "K3": k3.to_string() })
    );
    Ok(format!("{count} cyclically claw-free graphs, K3 golden"))
}

fn domination(_: &Ctx) -> CheckResult {
    let (mut count, mut pruned) = (0, 0);
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n)? {
            let direct = g.domination_polynomial(DominationMethod::Direct)?;
            let bnh = g.domination_polynomial(DominationMethod::Bnh)?;
            let expected =
                IntPolynomial::new(oracle::dominating(&g)?.into_iter().map(BigInt::from).collect());
            ensure!(direct == bnh && direct == expected, graph_witness(&g));
            match g.domination_polynomial(DominationMethod::BnhPruned) {
                Ok(p) => {
                    ensure!(p == direct, graph_witness(&g));
                    pruned += 1;
                }
                Err(whitney::Error::Precondition { .. }) => {}
                Err(other) => return Err(other.into()),
            }
            count += 1;
        }
    }
    Ok(format!("{count} graphs, {pruned} through the pruned method"))
}

fn hyper_check(h: &Hypergraph, circuits: &CircuitFamily) -> Result<(), Failure> {
    let full = h.chromatic(HyperMethod::Full)?;
    let restricted = h.chromatic(HyperMethod::Restricted(circuits))?;
    let direct = oracle::hyper_colourings(h, 2)?;
    let witness = json!({
        "edges": h.edges().iter().map(|&e| labels(h.vertices(), e)).collect::<Vec<_>>(),
        "full": full.to_string(),
        "restricted": restricted.to_string(),
        "oracle_at_2": direct,
    });
    ensure!(
        full == restricted && full.eval(&BigInt::from(2)) == BigInt::from(direct),
        witness
    );
    Ok(())
}

fn grids(_: &Ctx) -> CheckResult {
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let grid = Hypergraph::grid_rectangles(m, n)?;
        hyper_check(&grid.hypergraph, &grid.circuits)?;
    }
    let g23 = Hypergraph::grid_rectangles(2, 3)?;
    ensure!(
        g23.circuits.len() == 1,
        json!({ "circuits of the 2x3 grid": g23.circuits.len() })
    );
    Ok("2x2, 2x3, 3x3".into())
}

fn tight(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(9);
    let mut nonempty = 0;
    for round in 0..40 {
        let (r, l) = [(3, 2), (4, 2), (4, 3)][round % 3];
        let n = rng.gen_range(r + 1..=7);
        let m = rng.gen_range(3..=10);
        let h = random_uniform_hypergraph(n, r, m, &mut rng)?;
        let circuits = h.tight_cycles(l)?;
        hyper_check(&h, &circuits)?;
        nonempty += usize::from(!circuits.is_empty());
    }
    Ok(format!("40 hypergraphs, {nonempty} with tight cycles"))
}

fn matroid_check(m: &Matroid) -> Result<(), Failure> {
    let full = m.characteristic_polynomial(CharacteristicMethod::Full)?;
    let heron = m.characteristic_polynomial(CharacteristicMethod::Heron)?;
    let masks: Vec<u64> = m.circuits().iter().map(|c| c.bits()).collect();
    let direct = IntPolynomial::from_i64s(&oracle::characteristic_coefficients(m.len(), &masks)?);
    let b1 = m.beta_invariant(BetaMethod::Full)?;
    let b2 = m.beta_invariant(BetaMethod::BrokenCircuit)?;
    let b3 = m.beta_invariant(BetaMethod::Derivative)?;
    let witness = json!({
        "elements": m.ground().labels(),
        "circuits": m.circuits().iter().map(|&c| labels(m.ground().labels(), c)).collect::<Vec<_>>(),
    });
    ensure!(
        full.polynomial == heron.polynomial && full.polynomial == direct,
        witness
    );
    ensure!(b1 == b2 && b2 == b3, witness);
    Ok(())
}

fn uniform_matroids(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 0..=6 {
        for r in 0..=n {
            matroid_check(&Matroid::uniform(r, n)?)?;
            count += 1;
        }
    }
    let u23 = Matroid::uniform(2, 3)?;
    let chi = u23
        .characteristic_polynomial(CharacteristicMethod::Heron)?
        .polynomial;
    let beta = u23.beta_invariant(BetaMethod::BrokenCircuit)?;
    ensure!(
        chi == IntPolynomial::from_i64s(&[2, -3, 1]) && beta == BigInt::from(1),
        json!({ "U(2,3)": chi.to_string(), "beta": beta.to_string() })
    );
    Ok(format!("{count} uniform matroids, U(2,3) goldens"))
}

fn graphic_matroids(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n)? {
            matroid_check(&Matroid::graphic(&g)?)?;
            count += 1;
        }
    }
    Ok(format!("{count} graphic matroids"))
}

fn lattice_corpus() -> Result<Vec<(&'static str, FiniteLattice)>, Failure> {
    Ok(vec![
        ("B2", FiniteLattice::boolean(2)?),
        ("B3", FiniteLattice::boolean(3)?),
        ("B4", FiniteLattice::boolean(4)?),
        ("D12", FiniteLattice::divisor(12)?),
        ("D30", FiniteLattice::divisor(30)?),
        ("Pi3", FiniteLattice::partition(3)?),
        ("Pi4", FiniteLattice::partition(4)?),
    ])
}

fn lattice_mobius(_: &Ctx) -> CheckResult {
    let corpus = lattice_corpus()?;
    for (name, l) in &corpus {
        let (a, b) = (l.mobius(), oracle::mobius(l));
        ensure!(a == b, json!({ "lattice": name, "recursive": a, "oracle": b }));
    }
    let goldens = [
        (FiniteLattice::boolean(3)?, -1),
        (FiniteLattice::partition(3)?, 2),
        (FiniteLattice::partition(4)?, -6),
        (FiniteLattice::chain(3)?, 0),
    ];
    for (l, mu) in &goldens {
        ensure!(
            l.mobius() == *mu,
            json!({ "elements": l.labels(), "expected": mu, "got": l.mobius() })
        );
    }
    Ok(format!("{} lattices, 4 goldens", corpus.len()))
}

fn blass_sagan(ctx: &Ctx) -> CheckResult {
    let mut rng = ctx.rng(10);
    let (mut crosscuts, mut families) = (0, 0);
    for (name, l) in lattice_corpus()? {
        let mu = oracle::mobius(&l);
        for c in l.all_crosscuts()? {
            if !ctx.fits(c.len()) {
                continue;
            }
            crosscuts += 1;
            let modes: &[bool] = if c == l.atoms() { &[false, true] } else { &[false] };
            for trial in 0..4 {
                let order = random_poset(c.len(), [0.0, 0.3, 0.6, 1.0][trial], &mut rng)?;
                let cc = Crosscut::new(&l, c, &relation_pairs(&order))?;
                for &mode in modes {
                    let family: Vec<Subset> = blass_sagan_b(&l, &cc, mode)?.iter().map(|w| w.set).collect();
                    let mut subs = vec![None];
                    for _ in 0..2 {
                        subs.push(Some(random_subfamily(&family, &mut rng)));
                    }
                    for sub in &subs {
                        let r = blass_sagan_mu(&l, &cc, sub.as_deref(), mode)?;
                        ensure!(
                            r.holds() && r.restricted == mu,
                            json!({
                                "lattice": name,
                                "crosscut": c.iter().map(|x| l.label(x)).collect::<Vec<_>>(),
                                "order": relation_pairs(&order),
                                "atoms_mode": mode,
                                "restricted": r.restricted,
                                "mobius": mu,
                            })
                        );
                        families += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{crosscuts} crosscuts, {families} restricted sums"))
}

fn shipped_crosscut(_: &Ctx) -> CheckResult {
    let flags = Flags::default();
    let r = compute_shipped(Target::LatticeBlassSagan, "b3-crosscut.json", &flags)?;
    ensure!(r["holds"] == true && r["mobius"] == -1, r);
    let m = compute_shipped(Target::LatticeMobius, "b3.json", &flags)?;
    ensure!(m["mobius"] == -1, m);
    Ok("B3 crosscut and Möbius value".into())
}

fn gcd_expansions(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 2..=120u64 {
        let modified = number::is_prime(n);
        for variant in [GcdVariant::Eq12, GcdVariant::Eq19] {
            let e = number::gcd_expansion(n, variant, modified)?;
            ensure!(
                e.holds(),
                json!({ "n": n, "variant": format!("{variant:?}"), "value": e.value, "mobius": e.mobius })
            );
            count += 1;
        }
    }
    Ok(format!("{count} expansions"))
}

const FUNCTIONS: [&str; 5] = ["identity", "power:2", "liouville", "totient", "mobius"];

fn totient(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 1..=60u64 {
        let modified = number::is_prime(n);
        for name in FUNCTIONS {
            let h: Multiplicative = name.parse()?;
            let methods = [
                TotientMethod::Product,
                TotientMethod::DivisorSum,
                TotientMethod::SubsetSum,
                TotientMethod::ChainSum,
            ];
            let mut values = Vec::new();
            for m in methods {
                match number::totient_h(n, h, m, modified) {
                    Ok(t) => {
                        ensure!(
                            t.identity_holds(),
                            json!({ "n": n, "h": name, "identity": "fails" })
                        );
                        values.push(t.value);
                    }
                    Err(whitney::Error::Precondition { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            ensure!(
                values.windows(2).all(|w| w[0] == w[1]),
                json!({ "n": n, "h": name, "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>() })
            );
            count += usize::from(!values.is_empty());
        }
    }
    Ok(format!("{count} (n, h) pairs"))
}

fn inverse(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 1..=60u64 {
        let modified = number::is_prime(n);
        for name in FUNCTIONS {
            let h: Multiplicative = name.parse()?;
            let mut values = Vec::new();
            for m in [
                InverseMethod::Product,
                InverseMethod::DivisorSum,
                InverseMethod::SubsetSum,
                InverseMethod::ChainSum,
            ] {
                values.push(number::dirichlet_inverse_totient(n, h, m, modified)?);
            }
            ensure!(
                values.windows(2).all(|w| w[0] == w[1]),
                json!({ "n": n, "h": name, "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>() })
            );
            count += 1;
        }
    }
    Ok(format!("{count} (n, h) pairs"))
}

fn zeta(_: &Ctx) -> CheckResult {
    let z = number::zeta_reciprocal(2.0, 13)?;
    ensure!((z.value - 0.618).abs() < 1e-3, json!({ "value": z.value }));
    let reference = z.reference.unwrap_or_default();
    let mut last = 1.0;
    for bound in [2, 3, 5, 10, 100, 1000, 10_000] {
        let v = number::zeta_reciprocal(2.0, bound)?.value;
        ensure!(
            v <= last && v > reference,
            json!({ "bound": bound, "value": v, "previous": last })
        );
        last = v;
    }
    Ok(format!(
        "6/π² approached from above, error {:.2e} at 10⁴",
        last - reference
    ))
}

fn complexes(_: &Ctx) -> CheckResult {
    let mut count = 0;
    for n in 2..=120u64 {
        if number::is_prime(n) {
            continue;
        }
        // Faces are the sets with gcd > 1 (lcm < n), so χ = 1 + μ(n).
        let mu = number::classical_mobius(n)?;
        for kind in [ComplexKind::S, ComplexKind::T] {
            let c = number::build_complex(n, kind)?;
            ensure!(
                c.euler_characteristic() == 1 + mu && (mu != 0 || c.bonferroni_holds()),
                json!({ "n": n, "kind": format!("{kind:?}"), "chi": c.euler_characteristic(), "mobius": mu })
            );
            count += 1;
        }
        ensure!(
            number::star_isomorphism(n)?,
            json!({ "n": n, "star isomorphism": false })
        );
    }
    Ok(format!("{count} complexes"))
}

fn primorial(_: &Ctx) -> CheckResult {
    for bound in [2, 3, 5, 7] {
        for s in 1..=3 {
            let (subset, product) = number::zeta_primorial_exact(bound, s)?;
            ensure!(
                subset == product,
                json!({ "bound": bound, "s": s, "subset": subset.to_string(), "product": product.to_string() })
            );
        }
    }
    Ok("bounds 2..7, s = 1..3".into())
}

/// Targets exercised on each generated kind.
fn targets_for(kind: Kind) -> &'static [Target] {
    use Target::*;
    match kind {
        Kind::GroundSet => &[CoreSum, CoreBroken, CoreAvoiding, CoreHstar],
        Kind::Graph | Kind::ConnectedGraph => &[
            GraphChromatic,
            GraphScp,
            GraphDomination,
            GraphCycles,
            GraphClawFree,
        ],
        Kind::Grid | Kind::UniformHypergraph => &[HypergraphChromatic],
        Kind::UniformMatroid | Kind::GraphicMatroid => &[MatroidCharacteristic, MatroidBeta],
        Kind::BooleanLattice | Kind::DivisorLattice | Kind::PartitionLattice | Kind::ChainLattice => {
            &[LatticeMobius]
        }
        Kind::Crosscut => &[LatticeCrosscut, LatticeBlassSagan],
        Kind::Geometry => &[GeometryVerify, GeometryFree],
        Kind::Divisor => &[NumberMobius, NumberGcd],
        Kind::Maxmin => &[CoreMaxmin],
        Kind::SetFamily => &[CoreUnion],
    }
}

fn round_trip(ctx: &Ctx) -> CheckResult {
    let mut count = 0;
    for &kind in Kind::value_variants() {
        let params = Params {
            n: match kind {
                Kind::Divisor => Some(60),
                Kind::Grid => Some(3),
                _ => Some(4),
            },
            r: Some(2),
            seed: ctx.seed,
            ..Params::default()
        };
        let inst = generate::run(kind, &params)?;
        let text = serde_json::to_string(&inst).map_err(|e| fail(json!({ "serialize": e.to_string() })))?;
        let parsed = instance::parse(&text)?;
        let again =
            serde_json::to_string(&parsed).map_err(|e| fail(json!({ "serialize": e.to_string() })))?;
        ensure!(
            text == again,
            json!({ "kind": format!("{kind:?}"), "first": text, "second": again })
        );
        for &target in targets_for(kind) {
            let flags = Flags {
                seed: ctx.seed,
                modified_domain: true,
                ..Flags::default()
            };
            let direct = compute::run_instance(target, Some(&inst), None, &flags);
            let via_file = compute::run_instance(target, Some(&parsed), None, &flags);
            let show = |r: &Result<compute::Outcome, CliError>| match r {
                Ok(o) => serde_json::to_string(&o.body).unwrap_or_default(),
                Err(e) => format!("error: {e}"),
            };
            let (a, b) = (show(&direct), show(&via_file));
            ensure!(
                a == b,
                json!({ "kind": format!("{kind:?}"), "target": target.name(), "direct": a, "round_trip": b })
            );
            count += 1;
        }
    }
    Ok(format!("{count} (kind, target) pairs byte-identical"))
}

fn shipped_schemas(_: &Ctx) -> CheckResult {
    for (name, text) in SHIPPED {
        let inst = instance::parse(text)?;
        let back = serde_json::to_string(&inst)
            .map_err(|e| fail(json!({ "file": name, "error": e.to_string() })))?;
        ensure!(
            instance::parse(&back)? == inst,
            json!({ "file": name, "reserialized": back })
        );
    }
    Ok(format!("{} shipped instances", SHIPPED.len()))
}

fn oracle_goldens(_: &Ctx) -> CheckResult {
    let k3 = Graph::complete(3)?;
    let edgeless = Graph::empty(2)?;
    let triple = Hypergraph::new(vec!["a".into(), "b".into(), "c".into()], vec![Subset::full(3)])?;
    let bare = Hypergraph::new(vec!["a".into(), "b".into(), "c".into()], vec![])?;
    let checks = [
        ("colourings(K3, 3)", oracle::colourings(&k3, 3)?, 6),
        ("colourings(K3, 2)", oracle::colourings(&k3, 2)?, 0),
        ("colourings(edgeless 2, 2)", oracle::colourings(&edgeless, 2)?, 4),
        (
            "hyper_colourings(3-edge, 2)",
            oracle::hyper_colourings(&triple, 2)?,
            6,
        ),
        (
            "hyper_colourings(3-edge, 1)",
            oracle::hyper_colourings(&triple, 1)?,
            0,
        ),
        (
            "hyper_colourings(edgeless 3, 4)",
            oracle::hyper_colourings(&bare, 4)?,
            64,
        ),
    ];
    for (what, got, want) in checks {
        ensure!(
            got == want,
            json!({ "oracle": what, "got": got, "expected": want })
        );
    }
    let dominating = [
        (Graph::path(2)?, vec![0, 2, 1]),
        (Graph::path(1)?, vec![0, 1]),
        (Graph::path(3)?, vec![0, 1, 3, 1]),
    ];
    for (g, want) in dominating {
        let got = oracle::dominating(&g)?;
        ensure!(
            got == want,
            json!({ "oracle": "dominating", "graph": graph_witness(&g), "got": got })
        );
    }
    let mobius = [
        (FiniteLattice::boolean(3)?, -1),
        (FiniteLattice::chain(3)?, 0),
        (FiniteLattice::partition(3)?, 2),
    ];
    for (l, want) in mobius {
        let got = oracle::mobius(&l);
        ensure!(
            got == want,
            json!({ "oracle": "mobius", "elements": l.labels(), "got": got })
        );
    }
    Ok("13 goldens".into())
}

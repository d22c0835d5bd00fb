//! The acceptance criteria as runnable checks, shared by the `acceptance`
//! test target and the `selftest` subcommand.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::algebra::Algebra;
use crate::barcheck::{hochschild_via_bar, BarComplex};
use crate::cochains::{
    bracket, circ, circ_i, circ_i_basic, coboundary, coboundary_matrix, cocycle_basis, hochschild, is_coboundary,
    same_classes, BasicCochain, Cochain,
};
use crate::cycles::{build_cycle, compose_cycles, cycle_at_vertex, cycle_via_pullback, cycles_isomorphic, recover, stationary_cycle};
use crate::error::Result;
use crate::examples;
use crate::ext::gz_dimension_check;
use crate::gamma::{compose_bypass, GammaPath};
use crate::gen::{bypass_instance, oriented_cycle_instance, random_cochain, rng, AlgebraGenerator};
use crate::linalg::LabeledMatrix;
use crate::{Rational, Scalar};

type Q = Rational;

/// Outcome of one criterion: a short summary on success, the first failure
/// otherwise.
pub type Outcome = std::result::Result<String, String>;

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Instances per property suite.
    pub fuzz: usize,
    pub hh_algebras: usize,
    pub bracket_algebras: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { seed: 20240611, fuzz: 100, hh_algebras: 20, bracket_algebras: 10 }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub outcome: Outcome,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok() && self.elapsed <= self.limit
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let detail = match &self.outcome {
            Ok(s) if self.elapsed <= self.limit => s.clone(),
            Ok(s) => format!("{s}; over the time limit"),
            Err(e) => e.clone(),
        };
        format!(
            "[{status}] {}. {} ({:.3}s / {}s): {detail}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn(&SelftestConfig) -> Outcome,
}

pub const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, name: "HH dimensions of the five-vertex example", limit: Duration::from_secs(1), run: hh_dimensions },
    Criterion { id: 2, name: "cocycle representatives", limit: Duration::from_secs(1), run: representatives },
    Criterion { id: 3, name: "bracket identities", limit: Duration::from_secs(1), run: bracket_identities },
    Criterion { id: 4, name: "bypass compositions", limit: Duration::from_secs(1), run: bypass_compositions },
    Criterion { id: 5, name: "admissible cycles and cycles at simples", limit: Duration::from_secs(1), run: cycle_shapes },
    Criterion { id: 6, name: "composition of cycles", limit: Duration::from_secs(1), run: theorem_instance },
    Criterion { id: 7, name: "cohomology against the bar complex", limit: Duration::from_secs(30), run: bar_cohomology },
    Criterion { id: 8, name: "bracket against the bar complex", limit: Duration::from_secs(60), run: bar_bracket },
    Criterion { id: 9, name: "property suites", limit: Duration::from_secs(120), run: property_suites },
];

pub fn run_criterion(c: &Criterion, cfg: &SelftestConfig) -> CriterionResult {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| (c.run)(cfg)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    CriterionResult { id: c.id, name: c.name, outcome, elapsed: start.elapsed(), limit: c.limit }
}

pub fn run_all(cfg: &SelftestConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|c| run_criterion(c, cfg)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T>(r: Result<T>, context: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{context}: {e}"))
}

fn chi(alg: &Algebra, text: &str) -> Cochain<Q> {
    Cochain::basic(BasicCochain::parse(alg, text).expect("well-formed"))
}

fn hh_dimensions(_: &SelftestConfig) -> Outcome {
    let alg = examples::main_example();
    let dims = hochschild::<Q>(&alg, 6).dims();
    ensure!(dims == [1, 2, 1, 1, 1, 0, 0], "dims {dims:?}");
    Ok(format!("dims {dims:?}"))
}

fn representatives(_: &SelftestConfig) -> Outcome {
    let alg = examples::main_example();
    let report = hochschild::<Q>(&alg, 4);
    ensure!(
        same_classes(&alg, 1, &report.degrees[1].representatives, &[chi(&alg, "b|b"), chi(&alg, "g|g")]),
        "degree 1 classes differ from chi^b_b, chi^g_g"
    );
    for (n, text) in [(2, "b|a2 a3"), (3, "g|a1 b a4"), (4, "g|a1 a2 a3 a4")] {
        let f = chi(&alg, text);
        ensure!(coboundary(&alg, &f).is_zero(), "{text} is not a cocycle");
        ensure!(!is_coboundary(&alg, &f), "{text} is a coboundary");
        ensure!(same_classes(&alg, n, &report.degrees[n].representatives, &[f]), "{text} does not span HH^{n}");
    }
    Ok("chi^b_b, chi^g_g, f2, f3, f4".into())
}

fn bracket_identities(_: &SelftestConfig) -> Outcome {
    let alg = examples::main_example();
    let (f2, f3, f4) = (chi(&alg, "b|a2 a3"), chi(&alg, "g|a1 b a4"), chi(&alg, "g|a1 a2 a3 a4"));
    let minus_f4 = f4.scale(&Q::sign(1));
    ensure!(ok(circ_i(&alg, &f3, &f2, 2), "circ_2")? == f4, "f3 o_2 f2 != f4");
    ensure!(ok(circ(&alg, &f3, &f2), "circ")? == minus_f4, "f3 o f2 != -f4");
    let b = ok(bracket(&alg, &f3, &f2), "bracket")?;
    ensure!(b == minus_f4, "[f3, f2] = {}", b.display(alg.quiver()));
    ensure!(!is_coboundary(&alg, &b), "[f3, f2] is a coboundary");
    Ok("[f3, f2] = -f4, nonzero in HH^4".into())
}

fn bypass_compositions(_: &SelftestConfig) -> Outcome {
    let alg = examples::bypass_example();
    let q = alg.quiver();
    let u = GammaPath::parse(&alg, "a b c d e c d").expect("Gamma-path");
    let v = GammaPath::parse(&alg, "f g").expect("Gamma-path");
    let mut seen = Vec::new();
    for (s, r, expected, degree) in [(3, 5, "a b f g e c d", 7), (3, 8, "a b f g", 4), (6, 8, "a b c d e f g", 7)] {
        let w = ok(compose_bypass(&alg, &u, &v, s, r), "compose_bypass")?;
        ensure!(w.display(q) == expected && w.degree() == degree, "({s},{r}) gave {}", w.display(q));
        seen.push(w.display(q).replace(' ', ""));
    }
    Ok(seen.join(", "))
}

fn cycle_shapes(_: &SelftestConfig) -> Outcome {
    let alg = examples::main_example();
    let q = alg.quiver();
    let cases: [(&str, Vec<Vec<usize>>, &str, Vec<&str>); 3] = [
        ("b|a2 a3", vec![vec![0, 1, 2, 1, 0]], "3", vec!["e:3", "a2^-1 b a3^-1", "e:3"]),
        ("g|a1 b a4", vec![vec![0, 1, 0, 1, 0], vec![1, 1, 0, 1, 1]], "4", vec!["e:4", "b", "a1^-1 g a4^-1", "e:4"]),
        (
            "g|a1 a2 a3 a4",
            vec![vec![0, 0, 1, 1, 0], vec![0, 1, 1, 0, 0], vec![1, 1, 0, 1, 1]],
            "4",
            vec!["e:4", "a3", "a2", "a1^-1 g a4^-1", "e:4"],
        ),
    ];
    for (text, dims, vertex, row) in cases {
        let b = BasicCochain::parse(&alg, text).expect("well-formed");
        let c = ok(build_cycle::<Q>(&alg, &b), text)?;
        ensure!(c.dim_vectors() == dims, "{text}: dims {:?}", c.dim_vectors());
        let at = ok(cycle_at_vertex(&alg, &c, q.vertex(vertex).expect("vertex")), text)?;
        ensure!(at.words(q) == row, "{text}: cycle at S_{vertex} is {:?}", at.words(q));
        let seq = at.sequence();
        ensure!(seq.maps_are_morphisms(q), "{text}: cycle at S_{vertex} has non-homomorphisms");
    }
    Ok("three cycles, three anchored rows".into())
}

fn theorem_instance(_: &SelftestConfig) -> Outcome {
    let alg = examples::main_example();
    let build = |text: &str| build_cycle::<Q>(&alg, &BasicCochain::parse(&alg, text).expect("well-formed"));
    let left = ok(build("g|a1 b a4"), "left")?;
    let right = ok(build("b|a2 a3"), "right")?;
    let expected = ok(build("g|a1 a2 a3 a4"), "expected")?;
    let composed = ok(compose_cycles(&alg, &left, &right, 2), "compose")?;
    ensure!(composed.u() == expected.u() && composed.p() == expected.p(), "canonical data differ");
    ensure!(composed == expected, "realizations differ");
    Ok("Cy(a1 b a4, g) o_2 Cy(a2 a3, b) = Cy(a1 a2 a3 a4, g)".into())
}

fn compare_dims(alg: &Algebra, max: usize, label: &str) -> std::result::Result<Vec<usize>, String> {
    let bardzell = hochschild::<Q>(alg, max).dims();
    let bar = ok(hochschild_via_bar::<Q>(alg, max), label)?;
    ensure!(bardzell == bar, "{label}: Bardzell {bardzell:?} vs bar {bar:?}");
    Ok(bardzell)
}

fn bar_cohomology(cfg: &SelftestConfig) -> Outcome {
    compare_dims(&examples::main_example(), 3, "five-vertex example")?;
    let dual = compare_dims(&examples::dual_numbers(), 4, "dual numbers")?;
    ensure!(dual == [2, 1, 1, 1, 1], "dual numbers: {dual:?}");
    let algebras = AlgebraGenerator::default().generate_many(cfg.seed, cfg.hh_algebras);
    for (i, alg) in algebras.iter().enumerate() {
        compare_dims(alg, 3, &format!("random algebra #{i}"))?;
    }
    Ok(format!("2 fixed + {} random algebras agree", algebras.len()))
}

/// Every pair of cocycle basis elements in degrees 1..=3 is compared;
/// returns the number of pairs and the pairs that disagree.
fn compare_all_brackets(alg: &Algebra, label: &str) -> std::result::Result<(usize, Vec<String>), String> {
    let bar = BarComplex::new(alg);
    let mut cocycles = Vec::new();
    for n in 1..=3 {
        let zs = cocycle_basis::<Q>(alg, n);
        let lifts = ok(bar.lift_cocycles(n, &zs), label)?;
        cocycles.extend(zs.into_iter().zip(lifts));
    }
    let mut boundaries: HashMap<usize, LabeledMatrix<_, _, Q>> = HashMap::new();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for (f, lf) in &cocycles {
        for (g, lg) in &cocycles {
            let d = f.degree() + g.degree() - 1;
            let diff = bar.transported_bracket(lf, lg).sub(&ok(bracket(alg, f, g), label)?);
            let m = boundaries.entry(d).or_insert_with(|| coboundary_matrix::<Q>(alg, d - 1));
            let v = crate::cochains::to_vector(m.row_labels(), &diff);
            if !m.in_image(&v) {
                bad.push(format!("{label}: [{}, {}]", f.display(alg.quiver()), g.display(alg.quiver())));
            }
            pairs += 1;
        }
    }
    Ok((pairs, bad))
}

fn bar_bracket(cfg: &SelftestConfig) -> Outcome {
    let (mut pairs, mut bad) = compare_all_brackets(&examples::main_example(), "five-vertex example")?;
    let algebras = AlgebraGenerator::default().generate_many(cfg.seed ^ 0x8888, cfg.bracket_algebras);
    let mut bad_algebras = 0;
    for (i, alg) in algebras.iter().enumerate() {
        let (p, b) = compare_all_brackets(alg, &format!("random algebra #{i}"))?;
        pairs += p;
        bad_algebras += usize::from(!b.is_empty());
        bad.extend(b);
    }
    ensure!(
        bad.is_empty(),
        "{} of {pairs} cocycle pairs disagree, on {bad_algebras} of {} random algebras; first {}",
        bad.len(),
        algebras.len(),
        bad[0]
    );
    Ok(format!("{pairs} cocycle pairs on 1 + {} algebras", algebras.len()))
}

fn property_suites(cfg: &SelftestConfig) -> Outcome {
    let suites: [(&str, fn(&SelftestConfig) -> std::result::Result<usize, String>); 8] = [
        ("dd = 0", suite_dd),
        ("antisymmetry", suite_antisymmetry),
        ("closed formula", suite_proposition),
        ("recover", suite_recover),
        ("pullback", suite_pullback),
        ("theorem", suite_theorem),
        ("resolution", suite_gz),
        ("stationary", suite_stationary),
    ];
    let mut summary = Vec::new();
    for (name, suite) in suites {
        let count = suite(cfg).map_err(|e| format!("{name}: {e}"))?;
        ensure!(count >= cfg.fuzz, "{name}: only {count} instances");
        summary.push(format!("{name} {count}"));
    }
    Ok(summary.join(", "))
}

fn suite_dd(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 1);
    let gen = AlgebraGenerator::default();
    for i in 0..cfg.fuzz {
        let alg = gen.generate(&mut r);
        let n = r.gen_range(0..=3);
        let f = random_cochain::<Q>(&alg, n, &mut r);
        ensure!(coboundary(&alg, &coboundary(&alg, &f)).is_zero(), "instance {i}: dd f != 0");
    }
    Ok(cfg.fuzz)
}

fn suite_antisymmetry(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 2);
    let gen = AlgebraGenerator::default();
    for i in 0..cfg.fuzz {
        let alg = gen.generate(&mut r);
        let (n, m) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let f = random_cochain::<Q>(&alg, n, &mut r);
        let g = random_cochain::<Q>(&alg, m, &mut r);
        let fg = ok(bracket(&alg, &f, &g), "bracket")?;
        let gf = ok(bracket(&alg, &g, &f), "bracket")?;
        ensure!(fg == gf.scale(&-Q::sign((n - 1) * (m - 1))), "instance {i}: antisymmetry fails");
    }
    Ok(cfg.fuzz)
}

fn suite_proposition(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 3);
    let gen = AlgebraGenerator::default();
    let mut count = 0;
    let mut check = |alg: &Algebra, f: &BasicCochain, g: &BasicCochain, s: usize| -> std::result::Result<(), String> {
        let direct = ok(circ_i(alg, &Cochain::<Q>::basic(f.clone()), &Cochain::basic(g.clone()), s), "circ_i")?;
        let closed = ok(circ_i_basic(alg, f, g, s), "circ_i_basic")?
            .map(Cochain::basic)
            .unwrap_or_else(|| Cochain::zero(f.degree() + g.degree() - 1));
        ensure!(direct == closed, "{} o_{s} {}", f.display(alg.quiver()), g.display(alg.quiver()));
        count += 1;
        Ok(())
    };
    for _ in 0..cfg.fuzz {
        let inst = bypass_instance(&mut r);
        check(&inst.algebra, &inst.left(), &inst.right(), inst.s)?;
    }
    let mut random = 0;
    while random < cfg.fuzz {
        let alg = gen.generate(&mut r);
        let (n, m) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let (fs, gs) = (crate::cochains::cochain_basis(&alg, n), crate::cochains::cochain_basis(&alg, m));
        if fs.is_empty() || gs.is_empty() {
            continue;
        }
        let f = &fs[r.gen_range(0..fs.len())];
        let g = &gs[r.gen_range(0..gs.len())];
        check(&alg, f, g, r.gen_range(1..=n))?;
        random += 1;
    }
    Ok(count)
}

fn suite_recover(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 4);
    let mut count = 0;
    for _ in 0..cfg.fuzz {
        let inst = bypass_instance(&mut r);
        let alg = &inst.algebra;
        for b in [inst.left(), inst.right(), inst.composed()] {
            let c = ok(build_cycle::<Q>(alg, &b), "build_cycle")?;
            let (u, p) = ok(recover(alg, &c), "recover")?;
            ensure!(&u == b.u().path() && &p == b.p(), "recover({}) differs", b.display(alg.quiver()));
            count += 1;
        }
    }
    Ok(count)
}

fn suite_pullback(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 5);
    let mut count = 0;
    for _ in 0..cfg.fuzz {
        let inst = bypass_instance(&mut r);
        let alg = &inst.algebra;
        for b in [inst.left(), inst.right(), inst.composed()] {
            let c = ok(build_cycle::<Q>(alg, &b), "build_cycle")?;
            let pulled = ok(cycle_via_pullback::<Q>(alg, &b), "cycle_via_pullback")?;
            ensure!(cycles_isomorphic(alg.quiver(), &pulled, &c.sequence()), "{} differs", b.display(alg.quiver()));
            count += 1;
        }
    }
    Ok(count)
}

fn suite_theorem(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 6);
    for _ in 0..cfg.fuzz {
        let inst = bypass_instance(&mut r);
        let alg = &inst.algebra;
        let left = ok(build_cycle::<Q>(alg, &inst.left()), "left")?;
        let right = ok(build_cycle::<Q>(alg, &inst.right()), "right")?;
        let expected = ok(build_cycle::<Q>(alg, &inst.composed()), "expected")?;
        let composed = ok(compose_cycles(alg, &left, &right, inst.s), "compose_cycles")?;
        ensure!(composed == expected, "{} o_{} {}", inst.left().display(alg.quiver()), inst.s, inst.right().display(alg.quiver()));
    }
    Ok(cfg.fuzz)
}

fn suite_gz(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 7);
    let gen = AlgebraGenerator::default();
    for i in 0..cfg.fuzz {
        let alg = gen.generate(&mut r);
        let x = crate::quiver::Vertex(r.gen_range(0..alg.quiver().vertex_count()));
        for report in ok(gz_dimension_check::<Q>(&alg, x, 4), "gz")? {
            ensure!(report.exact && report.agrees(), "instance {i}: degree {} disagrees", report.degree);
        }
    }
    Ok(cfg.fuzz)
}

fn suite_stationary(cfg: &SelftestConfig) -> std::result::Result<usize, String> {
    let mut r = rng(cfg.seed ^ 8);
    for _ in 0..cfg.fuzz {
        let inst = oriented_cycle_instance(&mut r);
        let c = ok(stationary_cycle::<Q>(&inst.algebra, &inst.u), "stationary_cycle")?;
        ensure!(c.sequence().is_exact(), "{} is not exact", inst.u.display(inst.algebra.quiver()));
    }
    Ok(cfg.fuzz)
}

//! Subcommand execution, generic over the ground field, with text and JSON
//! renderings.

use serde::Serialize;

use hhquiver::algebra::Algebra;
use hhquiver::cochains::{bracket, circ, circ_i, hochschild, BasicCochain, Cochain};
use hhquiver::cycles::{admissible_cycle, build_cycle, compose_cycles, cycle_at_vertex, AdmissibleCycle};
use hhquiver::ext::{ext_basis, realize_extension};
use hhquiver::gamma::{compose_bypass, enumerate_gamma, gamma_horizon, GammaPath};
use hhquiver::quiver::{Path, Quiver};
use hhquiver::selftest::{run_criterion, SelftestConfig, CRITERIA};
use hhquiver::Scalar;

use crate::input::InputSpec;
use crate::CliError;

/// A command's result in both renderings.
pub struct Output {
    pub text: String,
    pub json: String,
    /// Nonzero exit status to report after printing, if any.
    pub status: Option<i32>,
}

impl Output {
    fn new<T: Serialize>(text: String, value: &T) -> Self {
        Output { text, json: serde_json::to_string_pretty(value).expect("plain data serializes"), status: None }
    }
}

#[derive(Clone, Debug)]
pub enum Task {
    Info,
    Basis,
    Gamma { degree: usize, from: Option<String>, to: Option<String> },
    Hh { max: Option<usize>, reps: bool },
    Ext { degree: usize, from: String, to: String },
    Bypass { u: String, v: String, s: usize, r: usize },
    Circ { f: String, g: String, i: Option<usize> },
    Bracket { f: String, g: String },
    Cycle { u: String, p: String, at: Option<String> },
    ComposeCycles { left: String, right: String, s: usize },
}

#[derive(Serialize)]
struct ArrowJson<'a> {
    label: &'a str,
    source: &'a str,
    target: &'a str,
}

#[derive(Serialize)]
struct InfoJson<'a> {
    field: String,
    vertices: Vec<&'a str>,
    arrows: Vec<ArrowJson<'a>>,
    relations: Vec<[&'a str; 2]>,
    dimension: usize,
    gamma_eventually_empty: bool,
    first_empty_gamma_degree: Option<usize>,
}

#[derive(Serialize)]
struct BasisJson {
    dimension: usize,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct GammaJson {
    degree: usize,
    from: Option<String>,
    to: Option<String>,
    paths: Vec<String>,
}

#[derive(Serialize)]
pub struct TermJson {
    pub coefficient: String,
    pub value: String,
    pub gamma: String,
}

#[derive(Serialize)]
struct DegreeJson {
    degree: usize,
    cochain_dim: usize,
    dim: usize,
    representatives: Option<Vec<Vec<TermJson>>>,
}

#[derive(Serialize)]
struct HhJson {
    field: String,
    max: usize,
    dims: Vec<usize>,
    degrees: Vec<DegreeJson>,
}

#[derive(Serialize)]
struct ExtGeneratorJson {
    gamma: String,
    sequence: Vec<String>,
}

#[derive(Serialize)]
struct ExtJson {
    degree: usize,
    from: String,
    to: String,
    dim: usize,
    basis: Vec<ExtGeneratorJson>,
}

#[derive(Serialize)]
struct BypassJson {
    u: String,
    v: String,
    s: usize,
    r: usize,
    result: String,
    degree: usize,
}

#[derive(Serialize)]
struct CochainJson {
    degree: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct ModuleJson {
    word: String,
    dims: Vec<usize>,
}

#[derive(Serialize)]
struct CycleJson {
    u: String,
    p: String,
    degree: usize,
    gamma: bool,
    modules: Vec<ModuleJson>,
    homology: Vec<Option<Vec<usize>>>,
    at: Option<Vec<ModuleJson>>,
}

#[derive(Serialize)]
struct ComposeJson {
    s: usize,
    left: CycleJson,
    right: CycleJson,
    result: CycleJson,
    matches_composed_data: bool,
}

#[derive(Serialize)]
struct CriterionJson {
    id: usize,
    name: &'static str,
    passed: bool,
    seconds: f64,
    limit_seconds: u64,
    detail: String,
}

#[derive(Serialize)]
struct SelftestJson {
    seed: u64,
    fuzz: usize,
    passed: bool,
    criteria: Vec<CriterionJson>,
}

fn dims_text(d: &[usize]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_gamma(alg: &Algebra, text: &str) -> Result<GammaPath, CliError> {
    Ok(GammaPath::parse(alg, text)?)
}

fn parse_basic(alg: &Algebra, text: &str) -> Result<BasicCochain, CliError> {
    Ok(BasicCochain::parse(alg, text)?)
}

pub fn cochain_terms<S: Scalar>(q: &Quiver, f: &Cochain<S>) -> Vec<TermJson> {
    f.terms()
        .map(|(b, c)| TermJson { coefficient: c.to_string(), value: q.path_to_string(b.p()), gamma: b.u().display(q) })
        .collect()
}

fn cycle_json<S: Scalar>(q: &Quiver, c: &AdmissibleCycle<S>) -> CycleJson {
    CycleJson {
        u: q.path_to_string(c.u()),
        p: q.path_to_string(c.p()),
        degree: c.degree(),
        gamma: c.is_gamma(),
        modules: c.modules().iter().map(|m| ModuleJson { word: m.word().display(q), dims: m.dim_vector().to_vec() }).collect(),
        homology: c.exactness_profile(),
        at: None,
    }
}

fn module_name(word: &str) -> String {
    match word.strip_prefix("e:") {
        Some(v) => format!("S_{v}"),
        None => format!("M({word})"),
    }
}

fn cycle_text(j: &CycleJson) -> String {
    let mut out = format!(
        "Cy({}, {}): degree {}, {}\n",
        j.u,
        j.p,
        j.degree,
        if j.gamma { "u is a Gamma-path" } else { "u is not a Gamma-path" }
    );
    let width = j.modules.iter().map(|m| m.word.len()).max().unwrap_or(0) + 5;
    for (m, h) in j.modules.iter().zip(&j.homology) {
        let h = match h {
            Some(h) if h.iter().all(|&d| d == 0) => "exact".to_owned(),
            Some(h) => format!("homology {}", dims_text(h)),
            None => "not a complex".to_owned(),
        };
        out.push_str(&format!("  {:<width$}dims {}   {h}\n", module_name(&m.word), dims_text(&m.dims)));
    }
    if let Some(row) = &j.at {
        let words: Vec<String> = row.iter().map(|m| module_name(&m.word)).collect();
        out.push_str(&format!("  cycle at the simple: {}\n", words.join(" -> ")));
    }
    out
}

pub fn execute<S: Scalar>(spec: &InputSpec, task: &Task) -> Result<Output, CliError> {
    let alg = &spec.algebra;
    let q = alg.quiver();
    let vertex = |label: &str| q.vertex(label).map_err(CliError::from);
    match task {
        Task::Info => {
            let h = gamma_horizon(alg);
            let json = InfoJson {
                field: spec.field.to_string(),
                vertices: q.vertices().map(|v| q.vertex_label(v)).collect(),
                arrows: q
                    .arrows()
                    .map(|a| ArrowJson {
                        label: q.arrow_label(a),
                        source: q.vertex_label(q.source(a)),
                        target: q.vertex_label(q.target(a)),
                    })
                    .collect(),
                relations: alg.relations().pairs().map(|(a, b)| [q.arrow_label(a), q.arrow_label(b)]).collect(),
                dimension: alg.dimension(),
                gamma_eventually_empty: h.eventually_empty,
                first_empty_gamma_degree: h.first_empty_degree,
            };
            let mut text = format!(
                "field {}\nvertices {}\narrows {}\nrelations {}\ndimension {}\n",
                json.field,
                json.vertices.join(" "),
                json.arrows.iter().map(|a| format!("{}: {} -> {}", a.label, a.source, a.target)).collect::<Vec<_>>().join(", "),
                json.relations.iter().map(|[a, b]| format!("{a} {b}")).collect::<Vec<_>>().join(", "),
                json.dimension,
            );
            text.push_str(&match h.first_empty_degree {
                Some(n) => format!("Gamma^n is empty for n >= {n}\n"),
                None => "Gamma^n is nonempty in infinitely many degrees\n".to_owned(),
            });
            Ok(Output::new(text, &json))
        }
        Task::Basis => {
            let basis: Vec<String> = alg.basis().iter().map(|p| q.path_to_string(p)).collect();
            let text = basis.iter().map(|p| format!("{p}\n")).collect();
            Ok(Output::new(text, &BasisJson { dimension: basis.len(), basis }))
        }
        Task::Gamma { degree, from, to } => {
            let from_v = from.as_deref().map(vertex).transpose()?;
            let to_v = to.as_deref().map(vertex).transpose()?;
            let paths: Vec<String> = enumerate_gamma(alg, *degree, from_v, to_v).iter().map(|w| w.display(q)).collect();
            let text = paths.iter().map(|p| format!("{p}\n")).collect();
            Ok(Output::new(text, &GammaJson { degree: *degree, from: from.clone(), to: to.clone(), paths }))
        }
        Task::Hh { max, reps } => {
            let max = max.unwrap_or(spec.max_degree);
            let report = hochschild::<S>(alg, max);
            let mut text = String::new();
            let mut degrees = Vec::new();
            for d in &report.degrees {
                text.push_str(&format!("HH^{} = {}\n", d.degree, d.dim));
                if *reps {
                    for r in &d.representatives {
                        text.push_str(&format!("    {}\n", r.display(q)));
                    }
                }
                degrees.push(DegreeJson {
                    degree: d.degree,
                    cochain_dim: d.cochain_dim,
                    dim: d.dim,
                    representatives: reps.then(|| d.representatives.iter().map(|r| cochain_terms(q, r)).collect()),
                });
            }
            Ok(Output::new(text, &HhJson { field: spec.field.to_string(), max, dims: report.dims(), degrees }))
        }
        Task::Ext { degree, from, to } => {
            let (x, y) = (vertex(from)?, vertex(to)?);
            let basis = ext_basis::<S>(alg, *degree, x, y);
            let mut generators = Vec::new();
            for class in &basis {
                let (u, _) = class.terms().next().expect("generators have one term");
                let sequence = if *degree >= 1 {
                    realize_extension::<S>(alg, u)?.iter().map(|m| m.word().display(q)).collect()
                } else {
                    Vec::new()
                };
                generators.push(ExtGeneratorJson { gamma: u.display(q), sequence });
            }
            let mut text = format!("dim Ext^{degree}(S_{from}, S_{to}) = {}\n", basis.len());
            for g in &generators {
                text.push_str(&format!("  E[{}]", g.gamma));
                if !g.sequence.is_empty() {
                    let terms: Vec<String> = g.sequence.iter().map(|w| module_name(w)).collect();
                    text.push_str(&format!(": 0 -> {} -> 0", terms.join(" -> ")));
                }
                text.push('\n');
            }
            let json =
                ExtJson { degree: *degree, from: from.clone(), to: to.clone(), dim: basis.len(), basis: generators };
            Ok(Output::new(text, &json))
        }
        Task::Bypass { u, v, s, r } => {
            let (gu, gv) = (parse_gamma(alg, u)?, parse_gamma(alg, v)?);
            let w = compose_bypass(alg, &gu, &gv, *s, *r)?;
            let json = BypassJson {
                u: gu.display(q),
                v: gv.display(q),
                s: *s,
                r: *r,
                result: w.display(q),
                degree: w.degree(),
            };
            Ok(Output::new(format!("{} (degree {})\n", json.result, json.degree), &json))
        }
        Task::Circ { f, g, i } => {
            let f = Cochain::<S>::basic(parse_basic(alg, f)?);
            let g = Cochain::<S>::basic(parse_basic(alg, g)?);
            let out = match i {
                Some(i) => circ_i(alg, &f, &g, *i)?,
                None => circ(alg, &f, &g)?,
            };
            let json = CochainJson { degree: out.degree(), terms: cochain_terms(q, &out) };
            Ok(Output::new(format!("{}\n", out.display(q)), &json))
        }
        Task::Bracket { f, g } => {
            let f = Cochain::<S>::basic(parse_basic(alg, f)?);
            let g = Cochain::<S>::basic(parse_basic(alg, g)?);
            let out = bracket(alg, &f, &g)?;
            let json = CochainJson { degree: out.degree(), terms: cochain_terms(q, &out) };
            Ok(Output::new(format!("{}\n", out.display(q)), &json))
        }
        Task::Cycle { u, p, at } => {
            let (u, p): (Path, Path) = (q.parse_path(u)?, q.parse_path(p)?);
            let c: AdmissibleCycle<S> = match GammaPath::new(alg, u.clone()) {
                Ok(w) => build_cycle(alg, &BasicCochain::new(alg, w, p)?)?,
                Err(_) => admissible_cycle(alg, &u, &p)?,
            };
            let mut json = cycle_json(q, &c);
            if let Some(label) = at {
                let row = cycle_at_vertex(alg, &c, vertex(label)?)?;
                json.at = Some(
                    row.modules
                        .iter()
                        .map(|m| ModuleJson { word: m.word().display(q), dims: m.dim_vector().to_vec() })
                        .collect(),
                );
            }
            Ok(Output::new(cycle_text(&json), &json))
        }
        Task::ComposeCycles { left, right, s } => {
            let (bl, br) = (parse_basic(alg, left)?, parse_basic(alg, right)?);
            let cl = build_cycle::<S>(alg, &bl)?;
            let cr = build_cycle::<S>(alg, &br)?;
            let result = compose_cycles(alg, &cl, &cr, *s)?;
            let expected = hhquiver::gamma::circ_path(alg, bl.u(), br.u(), *s)
                .ok()
                .and_then(|w| BasicCochain::new(alg, w, bl.p().clone()).ok())
                .and_then(|b| build_cycle::<S>(alg, &b).ok());
            let matches = expected.as_ref() == Some(&result);
            if !matches {
                return Err(CliError::Invariant(format!(
                    "composed cycle differs from Cy({}, {})",
                    q.path_to_string(result.u()),
                    q.path_to_string(result.p())
                )));
            }
            let json = ComposeJson {
                s: *s,
                left: cycle_json(q, &cl),
                right: cycle_json(q, &cr),
                result: cycle_json(q, &result),
                matches_composed_data: matches,
            };
            let text = format!("{}equals the cycle of the composed data\n", cycle_text(&json.result));
            Ok(Output::new(text, &json))
        }
    }
}

pub fn selftest(cfg: &SelftestConfig) -> Output {
    let mut text = String::new();
    let mut criteria = Vec::new();
    for c in &CRITERIA {
        let r = run_criterion(c, cfg);
        text.push_str(&r.line());
        text.push('\n');
        criteria.push(CriterionJson {
            id: r.id,
            name: r.name,
            passed: r.passed(),
            seconds: r.elapsed.as_secs_f64(),
            limit_seconds: r.limit.as_secs(),
            detail: match &r.outcome {
                Ok(s) | Err(s) => s.clone(),
            },
        });
    }
    let passed = criteria.iter().all(|c| c.passed);
    let failed = criteria.iter().filter(|c| !c.passed).count();
    text.push_str(&format!("selftest: {} of {} criteria passed\n", criteria.len() - failed, criteria.len()));
    let json = SelftestJson { seed: cfg.seed, fuzz: cfg.fuzz, passed, criteria };
    let mut out = Output::new(text, &json);
    if !passed {
        out.status = Some(crate::EXIT_INVARIANT);
    }
    out
}

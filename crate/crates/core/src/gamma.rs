//! Gamma-paths (paths all of whose consecutive arrow pairs are relations)
//! and their bypass compositions.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Path, Quiver, Vertex};

/// An element of the Gamma-set of degree `n`: a trivial path for `n = 0`,
/// an arrow for `n = 1`, and a path whose consecutive pairs all lie in the
/// ideal for `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaPath(Path);

impl GammaPath {
    pub fn new(alg: &Algebra, path: Path) -> Result<Self> {
        if is_gamma(alg, path.arrows()) {
            Ok(GammaPath(path))
        } else {
            Err(Error::NotAGammaPath(alg.quiver().path_to_string(&path)))
        }
    }

    pub fn vertex(v: Vertex) -> Self {
        GammaPath(Path::trivial(v))
    }

    pub fn parse(alg: &Algebra, text: &str) -> Result<Self> {
        GammaPath::new(alg, alg.quiver().parse_path(text)?)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn path(&self) -> &Path {
        &self.0
    }

    pub fn arrows(&self) -> &[Arrow] {
        self.0.arrows()
    }

    pub fn source(&self) -> Vertex {
        self.0.source()
    }

    pub fn target(&self) -> Vertex {
        self.0.target()
    }

    /// `i`-th arrow, 1-based.
    pub fn arrow(&self, i: usize) -> Arrow {
        self.0.arrows()[i - 1]
    }

    /// Sub-Gamma-path on arrows `start..end` (0-based, half open).
    pub fn slice(&self, q: &Quiver, start: usize, end: usize) -> GammaPath {
        GammaPath(self.0.slice(q, start, end))
    }

    pub fn display(&self, q: &Quiver) -> String {
        q.path_to_string(&self.0)
    }
}

impl fmt::Display for GammaPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.arrows())
    }
}

fn is_gamma(alg: &Algebra, arrows: &[Arrow]) -> bool {
    let q = alg.quiver();
    arrows.windows(2).all(|w| q.target(w[0]) == q.source(w[1]) && alg.relations().contains(w[0], w[1]))
}

/// The Gamma-set of degree `n`, optionally restricted by endpoints.
pub fn enumerate_gamma(alg: &Algebra, n: usize, from: Option<Vertex>, to: Option<Vertex>) -> Vec<GammaPath> {
    let q = alg.quiver();
    let keep = |p: &Path| from.is_none_or(|x| p.source() == x) && to.is_none_or(|y| p.target() == y);
    if n == 0 {
        return q.vertices().map(Path::trivial).filter(keep).map(GammaPath).collect();
    }
    // Extend along the relation graph, filtering the source at the first step.
    let mut layer: Vec<Vec<Arrow>> = q.arrows().filter(|&a| from.is_none_or(|x| q.source(a) == x)).map(|a| vec![a]).collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for w in &layer {
            let last = *w.last().unwrap();
            for b in q.arrows_from(q.target(last)) {
                if alg.relations().contains(last, b) {
                    let mut w2 = w.clone();
                    w2.push(b);
                    next.push(w2);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<GammaPath> = layer
        .into_iter()
        .map(|w| GammaPath(q.path(&w).expect("relations are composable")))
        .filter(|g| keep(&g.0))
        .collect();
    out.sort();
    out
}

/// The word `a_1 .. a_{s-1} b_1 .. b_m a_r .. a_n` if it is a path.
fn bypass_word(alg: &Algebra, u: &GammaPath, v: &GammaPath, s: usize, r: usize) -> Option<Vec<Arrow>> {
    let n = u.degree();
    if n == 0 || v.degree() == 0 || s < 1 || s > r || r > n + 1 {
        return None;
    }
    let mut word = u.arrows()[..s - 1].to_vec();
    word.extend_from_slice(v.arrows());
    word.extend_from_slice(&u.arrows()[r - 1..]);
    let q = alg.quiver();
    word.windows(2).all(|w| q.target(w[0]) == q.source(w[1])).then_some(word)
}

/// Whether `(u, v)` is an `(s, r)` Gamma-bypass. Indices satisfy
/// `1 <= s <= r <= n + 1`; `r = n + 1` means nothing of `u` is kept after `v`.
/// Out-of-range indices give `false`.
pub fn is_bypass(alg: &Algebra, u: &GammaPath, v: &GammaPath, s: usize, r: usize) -> bool {
    bypass_word(alg, u, v, s, r).is_some_and(|w| is_gamma(alg, &w))
}

pub fn compose_bypass(alg: &Algebra, u: &GammaPath, v: &GammaPath, s: usize, r: usize) -> Result<GammaPath> {
    let q = alg.quiver();
    match bypass_word(alg, u, v, s, r) {
        Some(w) if is_gamma(alg, &w) => Ok(GammaPath(q.path(&w)?)),
        _ => Err(Error::NotABypass(format!("({}, {}) at ({s}, {r})", u.display(q), v.display(q)))),
    }
}

/// `u o_s v`, the `(s, s + 1)` composition.
pub fn circ_path(alg: &Algebra, u: &GammaPath, v: &GammaPath, s: usize) -> Result<GammaPath> {
    compose_bypass(alg, u, v, s, s + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaHorizon {
    pub eventually_empty: bool,
    /// Least `n` with the Gamma-set empty in every degree `>= n`.
    pub first_empty_degree: Option<usize>,
}

/// Decides whether the Gamma-sets are eventually empty, via acyclicity of
/// the relation graph (`a -> b` iff `ab` is a relation).
pub fn gamma_horizon(alg: &Algebra) -> GammaHorizon {
    let q = alg.quiver();
    let n = q.arrow_count();
    // Longest relation chain (in arrows) ending at each arrow, by repeated relaxation.
    let mut longest = vec![1usize; n];
    for round in 0..=n {
        let mut changed = false;
        for (a, b) in alg.relations().pairs() {
            if longest[b.0] < longest[a.0] + 1 {
                longest[b.0] = longest[a.0] + 1;
                changed = true;
            }
        }
        if !changed {
            let first_empty = if n == 0 { 1 } else { longest.iter().max().unwrap() + 1 };
            return GammaHorizon { eventually_empty: true, first_empty_degree: Some(first_empty) };
        }
        if round == n {
            break;
        }
    }
    GammaHorizon { eventually_empty: false, first_empty_degree: None }
}

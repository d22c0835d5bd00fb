//! Seeded generators of random algebras, cochains and bypass instances for
//! fuzzing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, RelationSet};
use crate::barcheck::BarComplex;
use crate::cochains::{cochain_basis, BasicCochain, Cochain};
use crate::error::Result;
use crate::gamma::{circ_path, GammaPath};
use crate::quiver::{Arrow, Path, Quiver};
use crate::scalar::Scalar;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(vertices: &[String], arrows: &[(String, usize, usize)], relations: &[(usize, usize)]) -> Result<Algebra> {
    let q = Quiver::new(
        vertices.iter().map(String::as_str),
        arrows.iter().map(|(l, s, t)| (l.as_str(), vertices[*s].as_str(), vertices[*t].as_str())),
    )?;
    let rel = RelationSet::new(&q, relations.iter().map(|&(a, b)| (Arrow(a), Arrow(b))))?;
    Algebra::new(q, rel)
}

/// Random admissible monomial quadratic algebras.
#[derive(Clone, Debug)]
pub struct AlgebraGenerator {
    pub max_vertices: usize,
    pub max_arrows: usize,
    /// Probability that a composable pair of arrows is a relation.
    pub relation_density: f64,
    /// Bar labels are counted in degrees `0..=bar_degree`; algebras above
    /// `bar_limit` in total are rejected.
    pub bar_degree: usize,
    pub bar_limit: u128,
}

impl Default for AlgebraGenerator {
    fn default() -> Self {
        AlgebraGenerator { max_vertices: 5, max_arrows: 7, relation_density: 0.6, bar_degree: 4, bar_limit: 600 }
    }
}

impl AlgebraGenerator {
    /// One attempt; `None` if the draw is not admissible or too large.
    pub fn try_generate(&self, rng: &mut Rng8) -> Option<Algebra> {
        let nv = rng.gen_range(1..=self.max_vertices);
        let na = rng.gen_range(1..=self.max_arrows);
        let vertices: Vec<String> = (1..=nv).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, usize, usize)> =
            (0..na).map(|i| (format!("x{}", i + 1), rng.gen_range(0..nv), rng.gen_range(0..nv))).collect();
        let mut relations = Vec::new();
        for (i, a) in arrows.iter().enumerate() {
            for (j, b) in arrows.iter().enumerate() {
                if a.2 == b.1 && rng.gen_bool(self.relation_density) {
                    relations.push((i, j));
                }
            }
        }
        let alg = build(&vertices, &arrows, &relations).ok()?;
        let bar = BarComplex::new(&alg);
        let size: u128 = (0..=self.bar_degree).map(|n| bar.label_count(n)).sum();
        (size <= self.bar_limit).then_some(alg)
    }

    pub fn generate(&self, rng: &mut Rng8) -> Algebra {
        loop {
            if let Some(alg) = self.try_generate(rng) {
                return alg;
            }
        }
    }

    pub fn generate_many(&self, seed: u64, count: usize) -> Vec<Algebra> {
        let mut rng = rng(seed);
        (0..count).map(|_| self.generate(&mut rng)).collect()
    }
}

/// A random combination of basic cochains of degree `n` with small integer
/// coefficients; zero if there are no basic cochains.
pub fn random_cochain<S: Scalar>(alg: &Algebra, n: usize, rng: &mut Rng8) -> Cochain<S> {
    let basis = cochain_basis(alg, n);
    let mut f = Cochain::zero(n);
    if basis.is_empty() {
        return f;
    }
    let terms = rng.gen_range(1..=basis.len().min(4));
    for _ in 0..terms {
        let b = basis.choose(rng).expect("nonempty").clone();
        let c: i64 = rng.gen_range(-3..=3);
        f.add_term(b, S::from_int(c));
    }
    f
}

/// Two cycles whose composition is governed by an `(s, s + 1)`-bypass:
/// `chi^p_u` and `chi^{a_s}_v` with `v` parallel to the `s`-th arrow `a_s`.
#[derive(Clone, Debug)]
pub struct BypassInstance {
    pub algebra: Algebra,
    pub u: GammaPath,
    pub p: Path,
    pub v: GammaPath,
    pub s: usize,
}

impl BypassInstance {
    pub fn left(&self) -> BasicCochain {
        BasicCochain::new(&self.algebra, self.u.clone(), self.p.clone()).expect("parallel by construction")
    }

    pub fn right(&self) -> BasicCochain {
        let q = self.algebra.quiver();
        BasicCochain::new(&self.algebra, self.v.clone(), Path::arrow(q, self.u.arrow(self.s))).expect("parallel by construction")
    }

    /// `chi^p_{u o_s v}`.
    pub fn composed(&self) -> BasicCochain {
        let w = circ_path(&self.algebra, &self.u, &self.v, self.s).expect("bypass by construction");
        BasicCochain::new(&self.algebra, w, self.p.clone()).expect("parallel by construction")
    }
}

/// Synthesizes a bypass instance: a chain `u = a_1..a_n` with all
/// consecutive relations, a relation-free path `p` parallel to it, a chain
/// `v = b_1..b_m` parallel to `a_s` glued in by relations, plus a few random
/// extra arrows and relations that keep everything intact.
pub fn bypass_instance(rng: &mut Rng8) -> BypassInstance {
    loop {
        if let Some(inst) = try_bypass_instance(rng) {
            return inst;
        }
    }
}

fn try_bypass_instance(rng: &mut Rng8) -> Option<BypassInstance> {
    let n = rng.gen_range(2..=4);
    let m = rng.gen_range(2..=3);
    let l = rng.gen_range(1..=3);
    let s = rng.gen_range(1..=n);
    let mut vertices: Vec<String> = (0..=n).map(|i| format!("u{i}")).collect();
    let p_inner: Vec<usize> = (1..l).map(|i| push(&mut vertices, format!("p{i}"))).collect();
    let v_inner: Vec<usize> = (1..m).map(|i| push(&mut vertices, format!("v{i}"))).collect();

    let mut arrows = Vec::new();
    let u_arrows: Vec<usize> = (0..n).map(|i| push(&mut arrows, (format!("a{}", i + 1), i, i + 1))).collect();
    let chain = |arrows: &mut Vec<(String, usize, usize)>, prefix: &str, from: usize, inner: &[usize], to: usize| {
        let stops: Vec<usize> = std::iter::once(from).chain(inner.iter().copied()).chain(std::iter::once(to)).collect();
        stops.windows(2).enumerate().map(|(i, w)| push(arrows, (format!("{prefix}{}", i + 1), w[0], w[1]))).collect::<Vec<_>>()
    };
    let p_arrows = chain(&mut arrows, "c", 0, &p_inner, n);
    let v_arrows = chain(&mut arrows, "b", s - 1, &v_inner, s);
    let extra = rng.gen_range(0..=2);
    let nv = vertices.len();
    for i in 0..extra {
        let (x, y) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
        arrows.push((format!("x{}", i + 1), x, y));
    }

    let mut relations: Vec<(usize, usize)> = Vec::new();
    relations.extend(u_arrows.windows(2).map(|w| (w[0], w[1])));
    relations.extend(v_arrows.windows(2).map(|w| (w[0], w[1])));
    if s > 1 {
        relations.push((u_arrows[s - 2], v_arrows[0]));
    }
    if s < n {
        relations.push((v_arrows[m - 1], u_arrows[s]));
    }
    let forbidden: Vec<(usize, usize)> = p_arrows.windows(2).map(|w| (w[0], w[1])).collect();
    for (i, a) in arrows.iter().enumerate() {
        for (j, b) in arrows.iter().enumerate() {
            let pair = (i, j);
            if a.2 == b.1 && !relations.contains(&pair) && !forbidden.contains(&pair) && rng.gen_bool(0.3) {
                relations.push(pair);
            }
        }
    }
    let algebra = build(&vertices, &arrows, &relations).ok()?;
    let q = algebra.quiver();
    let path = |ids: &[usize]| q.path(&ids.iter().map(|&i| Arrow(i)).collect::<Vec<_>>());
    let u = GammaPath::new(&algebra, path(&u_arrows).ok()?).ok()?;
    let v = GammaPath::new(&algebra, path(&v_arrows).ok()?).ok()?;
    let p = path(&p_arrows).ok()?;
    if !algebra.is_basis_path(&p) {
        return None;
    }
    Some(BypassInstance { algebra, u, p, v, s })
}

fn push<T>(items: &mut Vec<T>, item: T) -> usize {
    items.push(item);
    items.len() - 1
}

/// An oriented cycle `u` in `Gamma^n(x, x)`.
#[derive(Clone, Debug)]
pub struct OrientedCycleInstance {
    pub algebra: Algebra,
    pub u: GammaPath,
}

/// A cycle quiver with all consecutive relations, decorated with a random
/// pendant vertex, and a closed Gamma-path of degree at least two around it.
pub fn oriented_cycle_instance(rng: &mut Rng8) -> OrientedCycleInstance {
    loop {
        let k = rng.gen_range(1..=4);
        let mut vertices: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
        let mut arrows: Vec<(String, usize, usize)> = (0..k).map(|i| (format!("z{i}"), i, (i + 1) % k)).collect();
        let mut relations: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        if rng.gen_bool(0.5) {
            let pendant = push(&mut vertices, "d".to_owned());
            let at = rng.gen_range(0..k);
            let out = rng.gen_bool(0.5);
            let e = push(&mut arrows, ("y".to_owned(), if out { at } else { pendant }, if out { pendant } else { at }));
            for i in 0..k {
                if rng.gen_bool(0.5) {
                    relations.push(if out { (i, e) } else { (e, i) });
                }
            }
        }
        let Ok(algebra) = build(&vertices, &arrows, &relations) else {
            continue;
        };
        let turns = rng.gen_range(1..=3);
        let n = k * turns;
        if n < 2 {
            continue;
        }
        let start = rng.gen_range(0..k);
        let ids: Vec<Arrow> = (0..n).map(|i| Arrow((start + i) % k)).collect();
        let Ok(path) = algebra.quiver().path(&ids) else {
            continue;
        };
        let Ok(u) = GammaPath::new(&algebra, path) else {
            continue;
        };
        return OrientedCycleInstance { algebra, u };
    }
}

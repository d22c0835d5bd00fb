//! Extensions between simple modules.
//!
//! `Ext^n(S_x, S_y)` has a basis `E_u` indexed by `u` in `Gamma^n(x, y)`;
//! classes are kept symbolically as combinations of these generators, and
//! [`realize_extension`] turns a generator into an explicit exact sequence.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::gamma::{compose_bypass, enumerate_gamma, is_bypass, GammaPath};
use crate::linalg::Matrix;
use crate::quiver::{Path, Quiver, Vertex};
use crate::scalar::Scalar;
use crate::strings::{
    hom_space, natural_map, simple_module, string_module, through_simple, Direction, RepMorphism, Representation,
    Sequence, StringModule, StringWord,
};

/// A class in `Ext^n(S_x, S_y)` as a combination of the generators `E_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass<S> {
    degree: usize,
    source: Vertex,
    target: Vertex,
    terms: BTreeMap<GammaPath, S>,
}

impl<S: Scalar> ExtClass<S> {
    pub fn zero(degree: usize, source: Vertex, target: Vertex) -> Self {
        ExtClass { degree, source, target, terms: BTreeMap::new() }
    }

    pub fn generator(u: GammaPath) -> Self {
        let mut e = Self::zero(u.degree(), u.source(), u.target());
        e.add_term(u, S::one());
        e
    }

    pub fn add_term(&mut self, u: GammaPath, c: S) {
        assert!(
            u.degree() == self.degree && u.source() == self.source && u.target() == self.target,
            "Ext generators must share degree and endpoints"
        );
        if c.is_zero() {
            return;
        }
        let sum = self.coefficient(&u) + c;
        if sum.is_zero() {
            self.terms.remove(&u);
        } else {
            self.terms.insert(u, sum);
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.degree, self.source, self.target);
        for (u, x) in &self.terms {
            out.add_term(u.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, u: &GammaPath) -> S {
        self.terms.get(u).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GammaPath, &S)> {
        self.terms.iter()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms.iter().map(|(u, c)| format!("{c} · E[{}]", u.display(q))).collect::<Vec<_>>().join(" + ")
    }
}

/// The generators `E_u`, `u` in `Gamma^n(x, y)`, in canonical order.
pub fn ext_basis<S: Scalar>(alg: &Algebra, n: usize, x: Vertex, y: Vertex) -> Vec<ExtClass<S>> {
    enumerate_gamma(alg, n, Some(x), Some(y)).into_iter().map(ExtClass::generator).collect()
}

/// `E_u: 0 -> S_y -> M(a_n) -> M(a_{n-1}) -> .. -> M(a_1) -> S_x -> 0`
/// with its natural maps, checked to be exact.
pub fn realize_extension<S: Scalar>(alg: &Algebra, u: &GammaPath) -> Result<Vec<StringModule<S>>> {
    Ok(realize_extension_with_maps(alg, u)?.0)
}

/// As [`realize_extension`], also returning the maps.
pub fn realize_extension_with_maps<S: Scalar>(
    alg: &Algebra,
    u: &GammaPath,
) -> Result<(Vec<StringModule<S>>, Vec<RepMorphism<S>>)> {
    let n = u.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let q = alg.quiver();
    let arrow_module = |i: usize| string_module::<S>(alg, &StringWord::new(alg, u.path().slice(q, i - 1, i).as_walk()).expect("arrows are strings"));
    let mut modules = vec![simple_module(alg, u.target())];
    modules.extend((1..=n).rev().map(arrow_module));
    modules.push(simple_module(alg, u.source()));

    let mut maps = Vec::with_capacity(n + 1);
    maps.push(natural_map(alg, &modules[1], 1, 1, Direction::Mono)?.1);
    for i in 1..n {
        maps.push(through_simple(alg, &modules[i], 0, &modules[i + 1], 1)?);
    }
    maps.push(natural_map(alg, &modules[n], 0, 0, Direction::Epi)?.1);

    let seq = Sequence { modules: modules.iter().map(|m| m.rep().clone()).collect(), maps: maps.clone() };
    if !seq.maps_are_morphisms(q) || !seq.is_exact() {
        return Err(Error::Invariant(format!("extension of {} is not exact", u.display(q))));
    }
    Ok((modules, maps))
}

/// The bilinear extension of `E_u (x) E_v -> E_{u o_{s,r} v}` over
/// `(s, r)` Gamma-bypasses. The result has degree `s + m + n - r`; its
/// source comes from `E` when `s > 1` and its target when `r <= n`.
pub fn splice<S: Scalar>(alg: &Algebra, e: &ExtClass<S>, f: &ExtClass<S>, s: usize, r: usize) -> Result<ExtClass<S>> {
    let (n, m) = (e.degree, f.degree);
    if s < 1 || s > r || r > n + 1 {
        return Err(Error::IndexOutOfRange { index: s.max(r), max: n + 1 });
    }
    let source = if s > 1 { e.source } else { f.source };
    let target = if r <= n { e.target } else { f.target };
    let mut out = ExtClass::zero(s + m + n - r, source, target);
    for (u, c) in &e.terms {
        for (v, d) in &f.terms {
            if is_bypass(alg, u, v, s, r) {
                out.add_term(compose_bypass(alg, u, v, s, r)?, c.clone() * d.clone());
            }
        }
    }
    Ok(out)
}

/// Projective right module `e_v A`: basis at `w` is the basis paths `v -> w`.
struct Projective {
    vertex: Vertex,
    basis: Vec<Vec<Path>>,
}

impl Projective {
    fn new(alg: &Algebra, v: Vertex) -> Self {
        let basis = alg.quiver().vertices().map(|w| alg.parallel_basis_paths(v, w)).collect();
        Projective { vertex: v, basis }
    }

    fn rep<S: Scalar>(&self, alg: &Algebra) -> Representation<S> {
        let q = alg.quiver();
        let dims = self.basis.iter().map(Vec::len).collect::<Vec<_>>();
        let maps = q
            .arrows()
            .map(|a| {
                let (s, t) = (q.source(a).0, q.target(a).0);
                let arrow = Path::arrow(q, a);
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for (c, p) in self.basis[s].iter().enumerate() {
                    if let Some(pa) = alg.multiply_paths(p, &arrow) {
                        let r = self.basis[t].iter().position(|b| b == &pa).expect("basis path");
                        m.set(r, c, S::one());
                    }
                }
                m
            })
            .collect();
        Representation::new(alg, dims, maps).expect("projectives satisfy the relations")
    }
}

/// Direct sum of projectives with per-vertex block offsets.
struct ProjectiveSum {
    summands: Vec<Projective>,
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
}

impl ProjectiveSum {
    fn new(alg: &Algebra, tops: impl IntoIterator<Item = Vertex>) -> Self {
        let nv = alg.quiver().vertex_count();
        let summands: Vec<Projective> = tops.into_iter().map(|v| Projective::new(alg, v)).collect();
        let mut dims = vec![0; nv];
        let offsets = summands
            .iter()
            .map(|p| {
                let off = dims.clone();
                for (w, b) in p.basis.iter().enumerate() {
                    dims[w] += b.len();
                }
                off
            })
            .collect();
        ProjectiveSum { summands, offsets, dims }
    }

    fn rep<S: Scalar>(&self, alg: &Algebra) -> Representation<S> {
        let q = alg.quiver();
        self.summands.iter().fold(Representation::zero(q), |acc, p| acc.direct_sum(&p.rep(alg), q))
    }

    /// The morphism sending the generator of summand `i` to the path
    /// `images[i].1` in summand `images[i].0` of `target`.
    fn morphism<S: Scalar>(&self, alg: &Algebra, target: &ProjectiveSum, images: &[(usize, Path)]) -> RepMorphism<S> {
        let nv = self.dims.len();
        let mut maps: Vec<Matrix<S>> = (0..nv).map(|w| Matrix::zeros(target.dims[w], self.dims[w])).collect();
        for (i, p) in self.summands.iter().enumerate() {
            let (j, image) = &images[i];
            let tp = &target.summands[*j];
            debug_assert_eq!(image.target(), p.vertex);
            for w in 0..nv {
                for (c, path) in p.basis[w].iter().enumerate() {
                    if let Some(prod) = alg.multiply_paths(image, path) {
                        let r = tp.basis[w].iter().position(|b| b == &prod).expect("basis path");
                        maps[w].set(target.offsets[*j][w] + r, self.offsets[i][w] + c, S::one());
                    }
                }
            }
        }
        RepMorphism::new(maps)
    }
}

/// Per-degree `Ext^l(S_x, S_y)` dimensions from the Gamma-resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GzReport {
    pub degree: usize,
    /// `(y, dimension from the hom-complex, |Gamma^l(x, y)|)`.
    pub entries: Vec<(Vertex, usize, usize)>,
    pub exact: bool,
}

impl GzReport {
    pub fn agrees(&self) -> bool {
        self.exact && self.entries.iter().all(|&(_, a, b)| a == b)
    }
}

/// Builds `P^{-l} = (+)_{p in Gamma^l(x, -)} e_{t(p)} A` with
/// `d(e_{t(b_1..b_l)}) = b_l` in the summand of `b_1..b_{l-1}`, checks that
/// it resolves `S_x` up to degree `max_len`, and computes the cohomology of
/// `Hom(P, S_y)` for every `y`.
pub fn gz_dimension_check<S: Scalar>(alg: &Algebra, x: Vertex, max_len: usize) -> Result<Vec<GzReport>> {
    let q = alg.quiver();
    let gammas: Vec<Vec<GammaPath>> = (0..=max_len + 1).map(|l| enumerate_gamma(alg, l, Some(x), None)).collect();
    let sums: Vec<ProjectiveSum> = gammas.iter().map(|g| ProjectiveSum::new(alg, g.iter().map(GammaPath::target))).collect();
    let reps: Vec<Representation<S>> = sums.iter().map(|s| s.rep(alg)).collect();
    // diffs[l]: P^{-l} -> P^{-(l-1)}, for l >= 1.
    let mut diffs: Vec<Option<RepMorphism<S>>> = vec![None];
    for l in 1..=max_len + 1 {
        let images: Vec<(usize, Path)> = gammas[l]
            .iter()
            .map(|p| {
                let prefix = p.slice(q, 0, l - 1);
                let j = gammas[l - 1].iter().position(|g| g == &prefix).expect("prefixes of Gamma-paths are Gamma-paths");
                (j, p.path().slice(q, l - 1, l))
            })
            .collect();
        diffs.push(Some(sums[l].morphism(alg, &sums[l - 1], &images)));
    }
    let simple_x = Representation::<S>::simple(q, x);
    let augmentation = {
        let mut maps: Vec<Matrix<S>> = (0..q.vertex_count()).map(|w| Matrix::zeros(simple_x.dim(Vertex(w)), reps[0].dim(Vertex(w)))).collect();
        maps[x.0].set(0, 0, S::one());
        RepMorphism::new(maps)
    };

    let mut reports = Vec::with_capacity(max_len + 1);
    for l in 0..=max_len {
        let d_in = diffs[l + 1].as_ref().unwrap();
        let (d_out, out_rep) = match &diffs[l] {
            Some(d) => (d.clone(), &reps[l - 1]),
            None => (augmentation.clone(), &simple_x),
        };
        let seq = Sequence { modules: vec![reps[l + 1].clone(), reps[l].clone(), out_rep.clone()], maps: vec![d_in.clone(), d_out] };
        let mut exact = seq.maps_are_morphisms(q) && seq.is_exact_in_middle();
        if l == 0 {
            exact &= seq.maps[1].is_surjective();
        }

        let mut entries = Vec::new();
        for y in q.vertices() {
            let sy = Representation::<S>::simple(q, y);
            let dim = hom_cohomology(q, &reps, &diffs, l, &sy);
            entries.push((y, dim, gammas[l].iter().filter(|g| g.target() == y).count()));
        }
        reports.push(GzReport { degree: l, entries, exact });
    }
    Ok(reports)
}

/// Cohomology at `Hom(P^{-l}, Y)` of `Hom(P^{-(l-1)}, Y) -> Hom(P^{-l}, Y) -> Hom(P^{-(l+1)}, Y)`.
fn hom_cohomology<S: Scalar>(
    q: &Quiver,
    reps: &[Representation<S>],
    diffs: &[Option<RepMorphism<S>>],
    l: usize,
    y: &Representation<S>,
) -> usize {
    let here = hom_space(q, &reps[l], y);
    let next = hom_space(q, &reps[l + 1], y);
    let pullback_matrix = |from: &[RepMorphism<S>], to: &[RepMorphism<S>], d: &RepMorphism<S>| -> Matrix<S> {
        // Columns: coordinates of h o d in the basis `to`.
        let flat = |f: &RepMorphism<S>| -> Vec<S> {
            f.maps().iter().flat_map(|m| (0..m.rows()).flat_map(move |r| (0..m.cols()).map(move |c| m.get(r, c).clone()))).collect()
        };
        let basis_cols: Vec<Vec<S>> = to.iter().map(flat).collect();
        let len = basis_cols.first().map_or(0, Vec::len);
        let basis = Matrix::from_rows((0..len).map(|r| basis_cols.iter().map(|c| c[r].clone()).collect()).collect());
        let cols: Vec<Vec<S>> = from
            .iter()
            .map(|h| {
                let v = flat(&h.compose(d));
                if to.is_empty() {
                    Vec::new()
                } else {
                    basis.solve(&v).expect("precomposition stays in the hom-space")
                }
            })
            .collect();
        let mut m = Matrix::zeros(to.len(), from.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    };
    let out_rank = pullback_matrix(&here, &next, diffs[l + 1].as_ref().unwrap()).rank();
    let in_rank = if l == 0 {
        0
    } else {
        let prev = hom_space(q, &reps[l - 1], y);
        pullback_matrix(&prev, &here, diffs[l].as_ref().unwrap()).rank()
    };
    here.len() - out_rank - in_rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::Rational;

    type Q = Rational;

    fn v(alg: &Algebra, label: &str) -> Vertex {
        alg.quiver().vertex(label).unwrap()
    }

    fn g(alg: &Algebra, text: &str) -> GammaPath {
        GammaPath::parse(alg, text).unwrap()
    }

    #[test]
    fn bases() {
        let alg = examples::main_example();
        let b = ext_basis::<Q>(&alg, 2, v(&alg, "2"), v(&alg, "4"));
        assert_eq!(b, vec![ExtClass::generator(g(&alg, "a2 a3"))]);
        let b = ext_basis::<Q>(&alg, 4, v(&alg, "1"), v(&alg, "5"));
        assert_eq!(b, vec![ExtClass::generator(g(&alg, "a1 a2 a3 a4"))]);
        let alg = examples::a2();
        assert!(ext_basis::<Q>(&alg, 2, v(&alg, "1"), v(&alg, "2")).is_empty());
    }

    #[test]
    fn realizations() {
        let alg = examples::main_example();
        let e = realize_extension::<Q>(&alg, &g(&alg, "a1 b a4")).unwrap();
        let dims: Vec<Vec<usize>> = e.iter().map(|m| m.dim_vector().to_vec()).collect();
        assert_eq!(
            dims,
            vec![vec![0, 0, 0, 0, 1], vec![0, 0, 0, 1, 1], vec![0, 1, 0, 1, 0], vec![1, 1, 0, 0, 0], vec![1, 0, 0, 0, 0]]
        );
        let e = realize_extension::<Q>(&alg, &g(&alg, "a2 a3")).unwrap();
        assert_eq!(e.len(), 4);
        let e = realize_extension::<Q>(&alg, &g(&alg, "g")).unwrap();
        assert_eq!(e.len(), 3);
    }

    #[test]
    fn splices() {
        let alg = examples::bypass_example();
        let u = ExtClass::<Q>::generator(g(&alg, "a b c d e c d"));
        let f = ExtClass::generator(g(&alg, "f g"));
        assert_eq!(splice(&alg, &u, &f, 3, 5).unwrap(), ExtClass::generator(g(&alg, "a b f g e c d")));
        let r = splice(&alg, &u, &f, 3, 8).unwrap();
        assert_eq!(r, ExtClass::generator(g(&alg, "a b f g")));
        assert_eq!(r.degree(), 3 + 2 + 7 - 8);
        let bc = ExtClass::generator(g(&alg, "b c"));
        assert!(splice(&alg, &u, &bc, 3, 5).unwrap().is_zero());
        // Excising and re-inserting the middle of u gives u back.
        let middle = ExtClass::generator(g(&alg, "c d e"));
        assert_eq!(splice(&alg, &u, &middle, 3, 6).unwrap(), u);
        let two = splice(&alg, &u.scale(&Q::from_int(2)), &f.scale(&Q::from_int(3)), 3, 5).unwrap();
        assert_eq!(two.coefficient(&g(&alg, "a b f g e c d")), Q::from_int(6));
    }

    #[test]
    fn resolution_dimensions() {
        let alg = examples::main_example();
        let reports = gz_dimension_check::<Q>(&alg, v(&alg, "1"), 4).unwrap();
        assert!(reports.iter().all(GzReport::agrees));
        assert!(reports[3].entries.contains(&(v(&alg, "5"), 1, 1)));
        let reports = gz_dimension_check::<Q>(&alg, v(&alg, "2"), 3).unwrap();
        assert!(reports.iter().all(GzReport::agrees));
        assert!(reports[2].entries.contains(&(v(&alg, "4"), 1, 1)));
        let alg = examples::a2();
        let reports = gz_dimension_check::<Q>(&alg, v(&alg, "1"), 3).unwrap();
        assert!(reports.iter().all(GzReport::agrees));
        assert!(reports[2..].iter().all(|r| r.entries.iter().all(|e| e.1 == 0)));
        let alg = examples::dual_numbers();
        let reports = gz_dimension_check::<Q>(&alg, Vertex(0), 4).unwrap();
        assert!(reports.iter().all(|r| r.agrees() && r.entries == vec![(Vertex(0), 1, 1)]));
    }
}

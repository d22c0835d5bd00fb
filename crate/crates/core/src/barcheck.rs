//! The reduced bar complex `(r^{(x)n}, A)` as an independent oracle.
//!
//! Nothing here is used by the production code paths. The module recomputes
//! Hochschild cohomology and the Gerstenhaber bracket on the (much larger)
//! reduced bar complex and compares them with the Bardzell complex through
//! the comparison map `mu`, whose pullback restricts a bar cochain to the
//! arrow tuples of Gamma-paths.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{Algebra, AlgebraElement};
use crate::cochains::{self, BasicCochain, Cochain};
use crate::error::{Error, Result};
use crate::gamma::{enumerate_gamma, GammaPath};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::{Path, Vertex};
use crate::scalar::Scalar;

pub const DEFAULT_LABEL_CAP: usize = 20_000;

/// A composable tuple of radical basis paths; the empty tuple at a vertex in
/// degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarTuple {
    paths: Vec<Path>,
    vertex: Vertex,
}

impl BarTuple {
    pub fn empty(v: Vertex) -> Self {
        BarTuple { paths: Vec::new(), vertex: v }
    }

    pub fn new(paths: Vec<Path>) -> Self {
        let vertex = paths.first().expect("use BarTuple::empty in degree 0").source();
        debug_assert!(paths.windows(2).all(|w| w[0].target() == w[1].source()));
        BarTuple { paths, vertex }
    }

    /// The image of a Gamma-path under `mu`.
    pub fn from_gamma(alg: &Algebra, w: &GammaPath) -> Self {
        if w.degree() == 0 {
            return BarTuple::empty(w.source());
        }
        BarTuple::new(w.arrows().iter().map(|&a| Path::arrow(alg.quiver(), a)).collect())
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn degree(&self) -> usize {
        self.paths.len()
    }

    pub fn source(&self) -> Vertex {
        self.vertex
    }

    pub fn target(&self) -> Vertex {
        self.paths.last().map_or(self.vertex, Path::target)
    }

    /// Entries `start..end`; an empty range gives the empty tuple at the
    /// vertex where it sits.
    fn range(&self, start: usize, end: usize) -> BarTuple {
        if start == end {
            let v = if start == 0 { self.vertex } else { self.paths[start - 1].target() };
            return BarTuple::empty(v);
        }
        BarTuple { paths: self.paths[start..end].to_vec(), vertex: self.paths[start].source() }
    }

    fn splice(&self, start: usize, end: usize, middle: Path) -> BarTuple {
        let mut paths = self.paths[..start].to_vec();
        paths.push(middle);
        paths.extend_from_slice(&self.paths[end..]);
        BarTuple::new(paths)
    }
}

/// A basis label of the bar cochain space: a tuple and a parallel value path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarLabel {
    pub tuple: BarTuple,
    pub value: Path,
}

/// Labels of one degree, with lookup tables.
#[derive(Debug)]
pub struct BarBasis {
    pub degree: usize,
    pub labels: Vec<BarLabel>,
    index: HashMap<BarLabel, usize>,
    tuples: Vec<BarTuple>,
}

impl BarBasis {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &BarLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn tuples(&self) -> &[BarTuple] {
        &self.tuples
    }
}

/// A bar cochain, stored as its values on tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarCochain<S> {
    degree: usize,
    values: BTreeMap<BarTuple, AlgebraElement<S>>,
}

impl<S: Scalar> BarCochain<S> {
    pub fn zero(degree: usize) -> Self {
        BarCochain { degree, values: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn evaluate(&self, t: &BarTuple) -> AlgebraElement<S> {
        self.values.get(t).cloned().unwrap_or_default()
    }

    pub fn add_value(&mut self, t: BarTuple, value: AlgebraElement<S>) {
        assert_eq!(t.degree(), self.degree, "inhomogeneous bar cochain");
        let sum = self.evaluate(&t).add(&value);
        if sum.is_zero() {
            self.values.remove(&t);
        } else {
            self.values.insert(t, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BarTuple, &AlgebraElement<S>)> {
        self.values.iter()
    }

    pub fn to_vector(&self, basis: &BarBasis) -> Vec<S> {
        let mut v = vec![S::zero(); basis.len()];
        for (t, value) in &self.values {
            for (p, c) in value.terms() {
                let label = BarLabel { tuple: t.clone(), value: p.clone() };
                v[basis.index[&label]] = c.clone();
            }
        }
        v
    }

    pub fn from_vector(basis: &BarBasis, v: &[S]) -> Self {
        let mut f = Self::zero(basis.degree);
        for (label, c) in basis.labels.iter().zip(v) {
            f.add_value(label.tuple.clone(), AlgebraElement::term(label.value.clone(), c.clone()));
        }
        f
    }
}

/// The reduced bar complex of an algebra, with cached bases.
pub struct BarComplex<'a> {
    alg: &'a Algebra,
    cap: usize,
    bases: std::sync::Mutex<HashMap<usize, Arc<BarBasis>>>,
}

impl<'a> BarComplex<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Self::with_cap(alg, DEFAULT_LABEL_CAP)
    }

    pub fn with_cap(alg: &'a Algebra, cap: usize) -> Self {
        BarComplex { alg, cap, bases: Default::default() }
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    /// Number of labels in degree `n`, computed without enumerating them.
    pub fn label_count(&self, n: usize) -> u128 {
        let q = self.alg.quiver();
        let nv = q.vertex_count();
        // counts[x][y]: composable n-tuples from x to y.
        let mut counts = vec![vec![0u128; nv]; nv];
        for v in q.vertices() {
            counts[v.0][v.0] = 1;
        }
        for _ in 0..n {
            let mut next = vec![vec![0u128; nv]; nv];
            for (x, row) in counts.iter().enumerate() {
                for (y, &c) in row.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for p in self.alg.radical_basis().filter(|p| p.source().0 == y) {
                        let z = p.target().0;
                        next[x][z] = next[x][z].saturating_add(c);
                    }
                }
            }
            counts = next;
        }
        let mut total = 0u128;
        for (x, row) in counts.iter().enumerate() {
            for (y, &c) in row.iter().enumerate() {
                let par = self.alg.parallel_basis_paths(Vertex(x), Vertex(y)).len() as u128;
                total = total.saturating_add(c.saturating_mul(par));
            }
        }
        total
    }

    pub fn basis(&self, n: usize) -> Result<Arc<BarBasis>> {
        if let Some(b) = self.bases.lock().unwrap().get(&n) {
            return Ok(b.clone());
        }
        let size = self.label_count(n);
        if size > self.cap as u128 {
            return Err(Error::SizeLimitExceeded { degree: n, size: size.min(usize::MAX as u128) as usize, limit: self.cap });
        }
        let basis = Arc::new(self.build_basis(n));
        self.bases.lock().unwrap().insert(n, basis.clone());
        Ok(basis)
    }

    fn build_basis(&self, n: usize) -> BarBasis {
        let q = self.alg.quiver();
        let mut tuples: Vec<BarTuple> = q.vertices().map(BarTuple::empty).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for t in &tuples {
                for p in self.alg.radical_basis() {
                    if t.degree() > 0 && p.source() != t.target() {
                        continue;
                    }
                    if t.degree() == 0 && p.source() != t.source() {
                        continue;
                    }
                    let mut paths = t.paths.clone();
                    paths.push(p.clone());
                    next.push(BarTuple::new(paths));
                }
            }
            tuples = next;
        }
        tuples.sort();
        let labels: Vec<BarLabel> = tuples
            .iter()
            .flat_map(|t| {
                self.alg
                    .parallel_basis_paths(t.source(), t.target())
                    .into_iter()
                    .map(move |value| BarLabel { tuple: t.clone(), value })
            })
            .collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        BarBasis { degree: n, labels, index, tuples }
    }

    /// Value of `dF` on one tuple of degree `n + 1`.
    fn coboundary_at<S: Scalar>(&self, eval: &dyn Fn(&BarTuple) -> AlgebraElement<S>, t: &BarTuple) -> AlgebraElement<S> {
        let alg = self.alg;
        let k = t.degree();
        let n = k - 1;
        let first = AlgebraElement::basis(t.paths[0].clone());
        let last = AlgebraElement::basis(t.paths[n].clone());
        let mut value = alg.multiply(&first, &eval(&t.range(1, k)));
        for j in 1..=n {
            if let Some(prod) = alg.multiply_paths(&t.paths[j - 1], &t.paths[j]) {
                value = value.add(&eval(&t.splice(j - 1, j + 1, prod)).scale(&S::sign(j)));
            }
        }
        value.add(&alg.multiply(&eval(&t.range(0, n)), &last).scale(&S::sign(n + 1)))
    }

    pub fn coboundary<S: Scalar>(&self, f: &BarCochain<S>) -> Result<BarCochain<S>> {
        let basis = self.basis(f.degree + 1)?;
        let mut out = BarCochain::zero(f.degree + 1);
        if f.is_zero() {
            return Ok(out);
        }
        let eval = |t: &BarTuple| f.evaluate(t);
        for t in basis.tuples() {
            out.add_value(t.clone(), self.coboundary_at(&eval, t));
        }
        Ok(out)
    }

    /// Matrix of the bar coboundary from degree `n` to `n + 1`, assembled
    /// one target tuple at a time.
    pub fn coboundary_matrix<S: Scalar>(&self, n: usize) -> Result<Matrix<S>> {
        let rows = self.basis(n + 1)?;
        let cols = self.basis(n)?;
        let mut by_tuple: HashMap<&BarTuple, Vec<usize>> = HashMap::new();
        for (i, l) in cols.labels.iter().enumerate() {
            by_tuple.entry(&l.tuple).or_default().push(i);
        }
        let alg = self.alg;
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for t in rows.tuples() {
            let mut put = |sub: &BarTuple, left: Option<&Path>, right: Option<&Path>, sign: S| {
                for &c in by_tuple.get(sub).map(Vec::as_slice).unwrap_or(&[]) {
                    let mut value = Some(cols.labels[c].value.clone());
                    if let Some(l) = left {
                        value = value.and_then(|v| alg.multiply_paths(l, &v));
                    }
                    if let Some(r) = right {
                        value = value.and_then(|v| alg.multiply_paths(&v, r));
                    }
                    if let Some(v) = value {
                        let row = rows.index[&BarLabel { tuple: t.clone(), value: v }];
                        m.add_at(row, c, sign.clone());
                    }
                }
            };
            put(&t.range(1, n + 1), Some(&t.paths[0]), None, S::one());
            for j in 1..=n {
                if let Some(prod) = alg.multiply_paths(&t.paths[j - 1], &t.paths[j]) {
                    put(&t.splice(j - 1, j + 1, prod), None, None, S::sign(j));
                }
            }
            put(&t.range(0, n), None, Some(&t.paths[n]), S::sign(n + 1));
        }
        Ok(m)
    }

    /// `(F o_i G)(t)` with `pi` applied to the value of `G`.
    pub fn circ_i_at<S: Scalar>(&self, f: &BarCochain<S>, g: &BarCochain<S>, i: usize, t: &BarTuple) -> AlgebraElement<S> {
        let m = g.degree;
        let inner = self.alg.radical_project(&g.evaluate(&t.range(i - 1, i + m - 1)));
        let mut value = AlgebraElement::zero();
        for (q, c) in inner.terms() {
            value = value.add(&f.evaluate(&t.splice(i - 1, i + m - 1, q.clone())).scale(c));
        }
        value
    }

    pub fn circ_at<S: Scalar>(&self, f: &BarCochain<S>, g: &BarCochain<S>, t: &BarTuple) -> AlgebraElement<S> {
        let (n, m) = (f.degree, g.degree);
        (1..=n).fold(AlgebraElement::zero(), |acc, i| {
            acc.add(&self.circ_i_at(f, g, i, t).scale(&S::sign((i - 1) * (m - 1))))
        })
    }

    pub fn bracket_at<S: Scalar>(&self, f: &BarCochain<S>, g: &BarCochain<S>, t: &BarTuple) -> AlgebraElement<S> {
        let (n, m) = (f.degree, g.degree);
        self.circ_at(f, g, t).sub(&self.circ_at(g, f, t).scale(&S::sign((n - 1) * (m - 1))))
    }

    fn check_degrees<S>(f: &BarCochain<S>, g: &BarCochain<S>) -> Result<()> {
        if f.degree == 0 || g.degree == 0 {
            return Err(Error::DegreeZero);
        }
        Ok(())
    }

    pub fn circ<S: Scalar>(&self, f: &BarCochain<S>, g: &BarCochain<S>) -> Result<BarCochain<S>> {
        Self::check_degrees(f, g)?;
        let d = f.degree + g.degree - 1;
        let mut out = BarCochain::zero(d);
        for t in self.basis(d)?.tuples() {
            out.add_value(t.clone(), self.circ_at(f, g, t));
        }
        Ok(out)
    }

    pub fn bracket<S: Scalar>(&self, f: &BarCochain<S>, g: &BarCochain<S>) -> Result<BarCochain<S>> {
        Self::check_degrees(f, g)?;
        let d = f.degree + g.degree - 1;
        let mut out = BarCochain::zero(d);
        for t in self.basis(d)?.tuples() {
            out.add_value(t.clone(), self.bracket_at(f, g, t));
        }
        Ok(out)
    }

    /// Pullback along `mu`: `w = a_1..a_n` goes to `F(a_1 (x) .. (x) a_n)`.
    pub fn restrict_via_mu<S: Scalar>(&self, f: &BarCochain<S>) -> Cochain<S> {
        self.restrict_with(f.degree, |t| f.evaluate(t))
    }

    fn restrict_with<S: Scalar>(&self, n: usize, eval: impl Fn(&BarTuple) -> AlgebraElement<S>) -> Cochain<S> {
        let mut out = Cochain::zero(n);
        for w in enumerate_gamma(self.alg, n, None, None) {
            for (p, c) in eval(&BarTuple::from_gamma(self.alg, &w)).terms() {
                let b = BasicCochain::new(self.alg, w.clone(), p.clone()).expect("values are parallel basis paths");
                out.add_term(b, c.clone());
            }
        }
        out
    }

    /// A bar cochain restricting to `f`, a bar cocycle when asked for.
    pub fn lift_along_mu<S: Scalar>(&self, f: &Cochain<S>, require_cocycle: bool) -> Result<BarCochain<S>> {
        let n = f.degree();
        let basis = self.basis(n)?;
        let bardzell = cochains::cochain_basis(self.alg, n);
        let mut restriction = Matrix::zeros(bardzell.len(), basis.len());
        for (r, b) in bardzell.iter().enumerate() {
            let label = BarLabel { tuple: BarTuple::from_gamma(self.alg, b.u()), value: b.p().clone() };
            restriction.set(r, basis.index[&label], S::one());
        }
        let mut rhs = cochains::to_vector(&bardzell, f);
        let system = if require_cocycle {
            let d = self.coboundary_matrix::<S>(n)?;
            rhs.extend(std::iter::repeat_n(S::zero(), d.rows()));
            restriction.vstack(&d)
        } else {
            restriction
        };
        let x = system.solve(&rhs).map_err(|_| Error::LiftInfeasible)?;
        Ok(BarCochain::from_vector(&basis, &x))
    }

    /// Whether the transported bracket of the cocycles `f`, `g` agrees with
    /// the closed-formula bracket up to a Bardzell coboundary.
    pub fn compare_bracket<S: Scalar>(&self, f: &Cochain<S>, g: &Cochain<S>) -> Result<bool> {
        if f.degree() == 0 || g.degree() == 0 {
            return Err(Error::DegreeZero);
        }
        let lf = self.lift_along_mu(f, true)?;
        let lg = self.lift_along_mu(g, true)?;
        let transported = self.transported_bracket(&lf, &lg);
        let closed = cochains::bracket(self.alg, f, g)?;
        Ok(cochains::is_coboundary(self.alg, &transported.sub(&closed)))
    }

    /// Lifts of several cocycles of one degree, sharing one system.
    pub fn lift_cocycles<S: Scalar>(&self, n: usize, fs: &[Cochain<S>]) -> Result<Vec<BarCochain<S>>> {
        let basis = self.basis(n)?;
        let bardzell = cochains::cochain_basis(self.alg, n);
        let mut restriction = Matrix::zeros(bardzell.len(), basis.len());
        for (r, b) in bardzell.iter().enumerate() {
            let label = BarLabel { tuple: BarTuple::from_gamma(self.alg, b.u()), value: b.p().clone() };
            restriction.set(r, basis.index[&label], S::one());
        }
        let d = self.coboundary_matrix::<S>(n)?;
        let system = restriction.vstack(&d);
        fs.iter()
            .map(|f| {
                if f.degree() != n {
                    return Err(Error::DegreeMismatch { expected: n, found: f.degree() });
                }
                let mut rhs = cochains::to_vector(&bardzell, f);
                rhs.extend(std::iter::repeat_n(S::zero(), d.rows()));
                let x = system.solve(&rhs).map_err(|_| Error::LiftInfeasible)?;
                Ok(BarCochain::from_vector(&basis, &x))
            })
            .collect()
    }

    /// The bar bracket of two bar cochains restricted along `mu`.
    pub fn transported_bracket<S: Scalar>(&self, f: &BarCochain<S>, g: &BarCochain<S>) -> Cochain<S> {
        self.restrict_with(f.degree + g.degree - 1, |t| self.bracket_at(f, g, t))
    }

    /// Dimensions of the cohomology of the bar complex in degrees `0..=max`.
    pub fn hochschild<S: Scalar>(&self, max_degree: usize) -> Result<Vec<usize>> {
        for n in 0..=max_degree + 1 {
            self.basis(n)?;
        }
        let ranks: Vec<usize> = (0..=max_degree)
            .into_par_iter()
            .map(|n| self.coboundary_matrix::<S>(n).map(|m| m.rank()))
            .collect::<Result<_>>()?;
        (0..=max_degree)
            .map(|n| {
                let dim = self.basis(n)?.len();
                let rank_in = if n == 0 { 0 } else { ranks[n - 1] };
                Ok(dim - ranks[n] - rank_in)
            })
            .collect()
    }

    /// Whether a bar cochain is a bar coboundary.
    pub fn is_coboundary<S: Scalar>(&self, f: &BarCochain<S>) -> Result<bool> {
        if f.degree == 0 {
            return Ok(f.is_zero());
        }
        let d = self.coboundary_matrix::<S>(f.degree - 1)?;
        let span = Subspace::column_span(&d);
        Ok(span.contains(&f.to_vector(&*self.basis(f.degree)?)))
    }
}

/// Cohomology dimensions via the bar complex with the default label cap.
pub fn hochschild_via_bar<S: Scalar>(alg: &Algebra, max_degree: usize) -> Result<Vec<usize>> {
    BarComplex::new(alg).hochschild::<S>(max_degree)
}

/// Pullback along `omega` in degrees 0 and 1.
///
/// `omega_0(1 (x) 1) = 1 (x) sum e_i (x) 1`, and `omega_1` sends
/// `1 (x) a_1..a_k (x) 1` to `sum_i a_1..a_{i-1} (x) a_i (x) a_{i+1}..a_k`.
pub fn omega_pullback<S: Scalar>(bar: &BarComplex<'_>, f: &Cochain<S>) -> Result<BarCochain<S>> {
    let alg = bar.algebra();
    let q = alg.quiver();
    let n = f.degree();
    if n > 1 {
        return Err(Error::DegreeMismatch { expected: 1, found: n });
    }
    let basis = bar.basis(n)?;
    let mut out = BarCochain::zero(n);
    for t in basis.tuples() {
        let value = if n == 0 {
            cochains::evaluate(f, &GammaPath::vertex(t.source()))?
        } else {
            let p = &t.paths[0];
            let mut value = AlgebraElement::zero();
            for i in 0..p.len() {
                let before = AlgebraElement::basis(p.slice(q, 0, i));
                let after = AlgebraElement::basis(p.slice(q, i + 1, p.len()));
                let arrow = GammaPath::new(alg, p.slice(q, i, i + 1))?;
                let middle = cochains::evaluate(f, &arrow)?;
                value = value.add(&alg.multiply(&alg.multiply(&before, &middle), &after));
            }
            value
        };
        out.add_value(t.clone(), value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::Rational;

    type Q = Rational;

    fn chi(alg: &Algebra, text: &str) -> Cochain<Q> {
        Cochain::basic(BasicCochain::parse(alg, text).unwrap())
    }

    #[test]
    fn basis_sizes() {
        let alg = examples::main_example();
        let bar = BarComplex::new(&alg);
        assert_eq!(bar.basis(1).unwrap().len(), 6);
        assert_eq!(bar.basis(0).unwrap().len(), 5);
        let alg = examples::dual_numbers();
        let bar = BarComplex::new(&alg);
        assert_eq!(bar.basis(2).unwrap().len(), 2);
        for n in 0..5 {
            assert_eq!(bar.label_count(n), bar.basis(n).unwrap().len() as u128);
        }
    }

    #[test]
    fn size_cap() {
        let alg = examples::main_example();
        let bar = BarComplex::with_cap(&alg, 5);
        assert!(matches!(bar.basis(1), Err(Error::SizeLimitExceeded { degree: 1, size: 6, limit: 5 })));
    }

    #[test]
    fn coboundary_dual_numbers() {
        let alg = examples::dual_numbers();
        let bar = BarComplex::new(&alg);
        let x = alg.quiver().parse_path("x").unwrap();
        let mut f = BarCochain::<Q>::zero(1);
        f.add_value(BarTuple::new(vec![x.clone()]), AlgebraElement::basis(Path::trivial(Vertex(0))));
        let df = bar.coboundary(&f).unwrap();
        let expected = AlgebraElement::term(x.clone(), Q::from_int(2));
        assert_eq!(df.evaluate(&BarTuple::new(vec![x.clone(), x])), expected);
        assert!(bar.coboundary(&BarCochain::<Q>::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn matrix_agrees_with_direct_coboundary() {
        for alg in [examples::main_example(), examples::dual_numbers(), examples::a3_no_relations(), examples::two_cycle_no_relations_truncated()] {
            let bar = BarComplex::new(&alg);
            for n in 0..3 {
                let m = bar.coboundary_matrix::<Q>(n).unwrap();
                let cols = bar.basis(n).unwrap();
                let rows = bar.basis(n + 1).unwrap();
                for j in 0..cols.len() {
                    let mut e = vec![Q::from_int(0); cols.len()];
                    e[j] = Q::from_int(1);
                    let direct = bar.coboundary(&BarCochain::from_vector(&cols, &e)).unwrap().to_vector(&rows);
                    assert_eq!(m.apply(&e), direct);
                }
                let next = bar.coboundary_matrix::<Q>(n + 1).unwrap();
                assert!(next.mul(&m).is_zero());
            }
        }
    }

    #[test]
    fn restriction_is_a_chain_map() {
        let alg = examples::two_cycle_no_relations_truncated();
        let bar = BarComplex::new(&alg);
        for n in 0..3 {
            let basis = bar.basis(n).unwrap();
            for j in 0..basis.len() {
                let mut e = vec![Q::from_int(0); basis.len()];
                e[j] = Q::from_int(1);
                let f = BarCochain::from_vector(&basis, &e);
                let lhs = bar.restrict_via_mu(&bar.coboundary(&f).unwrap());
                let rhs = cochains::coboundary(&alg, &bar.restrict_via_mu(&f));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let alg = examples::dual_numbers();
        let bar = BarComplex::new(&alg);
        let x = alg.quiver().parse_path("x").unwrap();
        let mut f = BarCochain::<Q>::zero(2);
        f.add_value(BarTuple::new(vec![x.clone(), x]), AlgebraElement::basis(Path::trivial(Vertex(0))));
        assert_eq!(bar.restrict_via_mu(&f), chi(&alg, "e:1|x x"));
    }

    #[test]
    fn lifts() {
        let alg = examples::main_example();
        let bar = BarComplex::new(&alg);
        let f2 = chi(&alg, "b|a2 a3");
        let lift = bar.lift_along_mu(&f2, true).unwrap();
        assert_eq!(bar.restrict_via_mu(&lift), f2);
        assert!(bar.coboundary(&lift).unwrap().is_zero());
        assert!(bar.lift_along_mu(&Cochain::<Q>::zero(2), true).unwrap().is_zero());

        let alg = examples::dual_numbers();
        let bar = BarComplex::new(&alg);
        let f = chi(&alg, "x|x");
        let lift = bar.lift_along_mu(&f, true).unwrap();
        assert_eq!(bar.restrict_via_mu(&lift), f);
        assert!(bar.coboundary(&lift).unwrap().is_zero());
    }

    #[test]
    fn omega_roundtrip() {
        for alg in [examples::main_example(), examples::two_cycle_no_relations_truncated(), examples::a3_no_relations()] {
            let bar = BarComplex::new(&alg);
            for n in 0..2 {
                for b in cochains::cochain_basis(&alg, n) {
                    let f = Cochain::<Q>::basic(b);
                    let lifted = omega_pullback(&bar, &f).unwrap();
                    assert_eq!(bar.restrict_via_mu(&lifted), f);
                    // omega is a chain map, so cocycles pull back to cocycles.
                    if cochains::coboundary(&alg, &f).is_zero() {
                        assert!(bar.coboundary(&lifted).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_comparison_main_example() {
        let alg = examples::main_example();
        let bar = BarComplex::new(&alg);
        let f2 = chi(&alg, "b|a2 a3");
        let f3 = chi(&alg, "g|a1 b a4");
        assert!(bar.compare_bracket(&f3, &f2).unwrap());
        assert!(bar.compare_bracket(&f3, &Cochain::zero(2)).unwrap());
    }

    #[test]
    fn bar_pi_kills_trivial_values() {
        let alg = examples::dual_numbers();
        let bar = BarComplex::new(&alg);
        let x = alg.quiver().parse_path("x").unwrap();
        let mut g = BarCochain::<Q>::zero(1);
        g.add_value(BarTuple::new(vec![x.clone()]), AlgebraElement::basis(Path::trivial(Vertex(0))));
        let mut f = BarCochain::<Q>::zero(1);
        f.add_value(BarTuple::new(vec![x.clone()]), AlgebraElement::basis(x));
        assert!(bar.circ(&f, &g).unwrap().is_zero());
        assert_eq!(bar.circ(&f, &f).unwrap(), f);
    }

    #[test]
    fn cohomology_via_bar() {
        assert_eq!(hochschild_via_bar::<Q>(&examples::main_example(), 3).unwrap(), vec![1, 2, 1, 1]);
        assert_eq!(hochschild_via_bar::<Q>(&examples::dual_numbers(), 4).unwrap(), vec![2, 1, 1, 1, 1]);
        assert_eq!(hochschild_via_bar::<Q>(&examples::a2(), 2).unwrap(), vec![1, 0, 0]);
    }
}

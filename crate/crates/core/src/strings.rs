//! Representations of the bound quiver, strings and string modules.
//!
//! Representations are right-module style: an arrow `a: x -> y` acts by a
//! matrix of shape `dim(y) x dim(x)` on column vectors, and the path `ab`
//! acts as `matrix(b) * matrix(a)`.
//!
//! A string module `M(w)` has one basis vector per walk position, numbered
//! from 0; at every vertex the basis is ordered by position. A direct step
//! `i` maps position `i` to position `i + 1`, an inverse step maps
//! position `i + 1` back to position `i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::{check_reduced, invert_walk, Quiver, Vertex, Walk};
use crate::scalar::Scalar;

/// A finite-dimensional representation of `(Q, I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<S> {
    dims: Vec<usize>,
    maps: Vec<Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix<S>>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::Invariant("representation has the wrong number of spaces or maps".into()));
        }
        for a in q.arrows() {
            let m = &maps[a.0];
            if m.rows() != dims[q.target(a).0] || m.cols() != dims[q.source(a).0] {
                return Err(Error::Invariant(format!("map of arrow {} has the wrong shape", q.arrow_label(a))));
            }
        }
        let rep = Representation { dims, maps };
        for (a, b) in alg.relations().pairs() {
            if !rep.maps[b.0].mul(&rep.maps[a.0]).is_zero() {
                return Err(Error::Invariant(format!(
                    "relation {} {} does not act as zero",
                    q.arrow_label(a),
                    q.arrow_label(b)
                )));
            }
        }
        Ok(rep)
    }

    pub fn zero(q: &Quiver) -> Self {
        Self::from_dims(q, vec![0; q.vertex_count()])
    }

    fn from_dims(q: &Quiver, dims: Vec<usize>) -> Self {
        let maps = q.arrows().map(|a| Matrix::zeros(dims[q.target(a).0], dims[q.source(a).0])).collect();
        Representation { dims, maps }
    }

    pub fn simple(q: &Quiver, x: Vertex) -> Self {
        let mut dims = vec![0; q.vertex_count()];
        dims[x.0] = 1;
        Self::from_dims(q, dims)
    }

    pub fn dim(&self, v: Vertex) -> usize {
        self.dims[v.0]
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, a: crate::quiver::Arrow) -> &Matrix<S> {
        &self.maps[a.0]
    }

    pub fn maps(&self) -> &[Matrix<S>] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn direct_sum(&self, other: &Self, q: &Quiver) -> Self {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = q.arrows().map(|a| block_diagonal(&self.maps[a.0], &other.maps[a.0])).collect();
        Representation { dims, maps }
    }

    /// The subrepresentation spanned, at each vertex, by the columns of
    /// `bases[v]`, and its inclusion. The columns must be independent and
    /// the family stable under the arrows.
    pub fn subrepresentation(&self, q: &Quiver, bases: Vec<Matrix<S>>) -> Result<(Self, RepMorphism<S>)> {
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for a in q.arrows() {
            let (s, t) = (q.source(a).0, q.target(a).0);
            let image = self.maps[a.0].mul(&bases[s]);
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for c in 0..dims[s] {
                let col: Vec<S> = (0..image.rows()).map(|r| image.get(r, c).clone()).collect();
                let x = bases[t].solve(&col).map_err(|_| Error::Invariant("subspace is not a subrepresentation".into()))?;
                for (r, value) in x.into_iter().enumerate() {
                    m.set(r, c, value);
                }
            }
            maps.push(m);
        }
        Ok((Representation { dims, maps }, RepMorphism { maps: bases }))
    }

    /// The quotient by a subrepresentation given by spanning columns, and
    /// the projection onto it.
    pub fn quotient(&self, q: &Quiver, spans: &[Matrix<S>]) -> (Self, RepMorphism<S>) {
        let mut projections = Vec::with_capacity(self.dims.len());
        let mut sections = Vec::with_capacity(self.dims.len());
        for (v, span) in spans.iter().enumerate() {
            let (p, s) = complement(span, self.dims[v]);
            projections.push(p);
            sections.push(s);
        }
        let dims: Vec<usize> = projections.iter().map(Matrix::rows).collect();
        let maps = q
            .arrows()
            .map(|a| projections[q.target(a).0].mul(&self.maps[a.0]).mul(&sections[q.source(a).0]))
            .collect();
        (Representation { dims, maps }, RepMorphism { maps: projections })
    }
}

fn block_diagonal<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            m.set(r, c, a.get(r, c).clone());
        }
    }
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            m.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
        }
    }
    m
}

fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

/// For the span of the columns of `span` inside `k^n`: a projection `P`
/// onto a complement (in coordinates of the standard vectors not in the
/// span) and a section `E` with `P E = 1`.
fn complement<S: Scalar>(span: &Matrix<S>, n: usize) -> (Matrix<S>, Matrix<S>) {
    let mut sub = Subspace::new(n);
    for c in 0..span.cols() {
        let col: Vec<S> = (0..n).map(|r| span.get(r, c).clone()).collect();
        sub.insert(&col);
    }
    let image_rank = sub.rank();
    let mut chosen = Vec::new();
    for i in 0..n {
        if sub.insert(&unit(n, i)) {
            chosen.push(i);
        }
    }
    // Columns of `basis` are: a basis of the span, then the chosen units.
    let mut basis_cols: Vec<Vec<S>> = Vec::new();
    let mut span_sub = Subspace::new(n);
    for c in 0..span.cols() {
        let col: Vec<S> = (0..n).map(|r| span.get(r, c).clone()).collect();
        if span_sub.insert(&col) {
            basis_cols.push(col);
        }
    }
    debug_assert_eq!(basis_cols.len(), image_rank);
    basis_cols.extend(chosen.iter().map(|&i| unit(n, i)));
    let basis = Matrix::from_rows((0..n).map(|r| basis_cols.iter().map(|c| c[r].clone()).collect()).collect());
    let k = chosen.len();
    let mut projection = Matrix::zeros(k, n);
    for i in 0..n {
        let coords = if n == 0 { Vec::new() } else { basis.solve(&unit(n, i)).expect("basis of k^n") };
        for j in 0..k {
            projection.set(j, i, coords[image_rank + j].clone());
        }
    }
    let mut section = Matrix::zeros(n, k);
    for (j, &i) in chosen.iter().enumerate() {
        section.set(i, j, S::one());
    }
    (projection, section)
}

/// Per-vertex linear maps between two representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism<S> {
    maps: Vec<Matrix<S>>,
}

impl<S: Scalar> RepMorphism<S> {
    pub fn new(maps: Vec<Matrix<S>>) -> Self {
        RepMorphism { maps }
    }

    pub fn zero(source: &Representation<S>, target: &Representation<S>) -> Self {
        RepMorphism { maps: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn identity(r: &Representation<S>) -> Self {
        RepMorphism { maps: r.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn at(&self, v: Vertex) -> &Matrix<S> {
        &self.maps[v.0]
    }

    pub fn maps(&self) -> &[Matrix<S>] {
        &self.maps
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Self) -> Self {
        RepMorphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| {
                let mut m = a.clone();
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        m.add_at(r, c, b.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        RepMorphism { maps }
    }

    pub fn scale(&self, k: &S) -> Self {
        let maps = self
            .maps
            .iter()
            .map(|a| {
                let mut m = a.clone();
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        m.set(r, c, a.get(r, c).clone() * k.clone());
                    }
                }
                m
            })
            .collect();
        RepMorphism { maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn shape_matches(&self, source: &Representation<S>, target: &Representation<S>) -> bool {
        self.maps.len() == source.dims.len()
            && self.maps.iter().enumerate().all(|(v, m)| m.rows() == target.dims[v] && m.cols() == source.dims[v])
    }

    pub fn is_intertwiner(&self, q: &Quiver, source: &Representation<S>, target: &Representation<S>) -> bool {
        self.shape_matches(source, target)
            && q.arrows().all(|a| {
                let (s, t) = (q.source(a).0, q.target(a).0);
                self.maps[t].mul(&source.maps[a.0]) == target.maps[a.0].mul(&self.maps[s])
            })
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(Matrix::rank).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    /// Kernel as a subrepresentation of the source, with its inclusion.
    pub fn kernel(&self, q: &Quiver, source: &Representation<S>) -> (Representation<S>, RepMorphism<S>) {
        let bases = self
            .maps
            .iter()
            .zip(&source.dims)
            .map(|(m, &d)| {
                let k = m.kernel_basis();
                Matrix::from_rows((0..d).map(|r| k.iter().map(|v| v[r].clone()).collect()).collect())
                    .with_cols(k.len())
            })
            .collect();
        source.subrepresentation(q, bases).expect("kernels are subrepresentations")
    }

    /// Cokernel as a quotient of the target, with its projection.
    pub fn cokernel(&self, q: &Quiver, target: &Representation<S>) -> (Representation<S>, RepMorphism<S>) {
        target.quotient(q, &self.maps)
    }
}

trait WithCols {
    fn with_cols(self, cols: usize) -> Self;
}

impl<S: Scalar> WithCols for Matrix<S> {
    // `from_rows` cannot infer a column count for zero rows.
    fn with_cols(self, cols: usize) -> Self {
        if self.rows() == 0 {
            Matrix::zeros(0, cols)
        } else {
            self
        }
    }
}

/// Dimension vector of the homology of `a -f-> b -g-> c` at `b`.
pub fn homology_dims<S: Scalar>(f: &RepMorphism<S>, g: &RepMorphism<S>, b: &Representation<S>) -> Vec<usize> {
    (0..b.dims.len()).map(|v| b.dims[v] - g.maps[v].rank() - f.maps[v].rank()).collect()
}

/// Homology of `a -f-> b -g-> c` at `b` as a representation; `g f` must vanish.
pub fn homology<S: Scalar>(q: &Quiver, f: &RepMorphism<S>, g: &RepMorphism<S>, b: &Representation<S>) -> Representation<S> {
    let (k, inc) = g.kernel(q, b);
    // Coordinates of the image of f inside the kernel.
    let spans = (0..b.dims.len())
        .map(|v| {
            let fm = &f.maps[v];
            let cols: Vec<Vec<S>> = (0..fm.cols())
                .map(|c| {
                    let col: Vec<S> = (0..fm.rows()).map(|r| fm.get(r, c).clone()).collect();
                    inc.maps[v].solve(&col).expect("image lies in the kernel")
                })
                .collect();
            Matrix::from_rows((0..k.dims[v]).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
                .with_cols(cols.len())
        })
        .collect::<Vec<_>>();
    k.quotient(q, &spans).0
}

/// Whether `a -f-> b -g-> c` is exact at `b`.
pub fn is_exact_at<S: Scalar>(f: &RepMorphism<S>, g: &RepMorphism<S>, b: &Representation<S>) -> bool {
    g.compose(f).is_zero() && homology_dims(f, g, b).iter().all(|&d| d == 0)
}

/// A chain of representations and morphisms, `maps[i]: modules[i] ->
/// modules[i + 1]`. A closed sequence has one more map, from the last
/// module back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence<S> {
    pub modules: Vec<Representation<S>>,
    pub maps: Vec<RepMorphism<S>>,
}

impl<S: Scalar> Sequence<S> {
    pub fn is_closed(&self) -> bool {
        !self.modules.is_empty() && self.maps.len() == self.modules.len()
    }

    fn target_index(&self, i: usize) -> usize {
        (i + 1) % self.modules.len()
    }

    /// Every map intertwines the actions of its source and target.
    pub fn maps_are_morphisms(&self, q: &Quiver) -> bool {
        let expected = if self.is_closed() { self.modules.len() } else { self.modules.len().saturating_sub(1) };
        self.maps.len() == expected
            && self
                .maps
                .iter()
                .enumerate()
                .all(|(i, f)| f.is_intertwiner(q, &self.modules[i], &self.modules[self.target_index(i)]))
    }

    /// Homology dimension vector at every module with an incoming and an
    /// outgoing map (every module of a closed sequence), or `None` where
    /// consecutive maps do not compose to zero.
    pub fn homology_profile(&self) -> Vec<Option<Vec<usize>>> {
        let n = self.modules.len();
        let positions: Vec<usize> = if self.is_closed() { (0..n).collect() } else { (1..n.saturating_sub(1)).collect() };
        positions
            .into_iter()
            .map(|i| {
                let incoming = &self.maps[(i + n - 1) % n];
                let outgoing = &self.maps[i];
                outgoing.compose(incoming).is_zero().then(|| homology_dims(incoming, outgoing, &self.modules[i]))
            })
            .collect()
    }

    /// Exact at every module with an incoming and an outgoing map.
    pub fn is_exact_in_middle(&self) -> bool {
        self.homology_profile().iter().all(|h| h.as_ref().is_some_and(|d| d.iter().all(|&x| x == 0)))
    }

    /// Exact at every interior module, with an injective first and a
    /// surjective last map when open.
    pub fn is_exact(&self) -> bool {
        let interior = self.is_exact_in_middle();
        if self.is_closed() {
            return interior;
        }
        interior
            && self.maps.first().is_none_or(RepMorphism::is_injective)
            && self.maps.last().is_none_or(RepMorphism::is_surjective)
    }
}

/// A basis of `Hom(r1, r2)`, computed as the kernel of the intertwining
/// constraints.
pub fn hom_space<S: Scalar>(q: &Quiver, r1: &Representation<S>, r2: &Representation<S>) -> Vec<RepMorphism<S>> {
    let nv = r1.dims.len();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += r1.dims[v] * r2.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * r1.dims[v] + c;
    let mut rows: Vec<Vec<S>> = Vec::new();
    for a in q.arrows() {
        let (s, t) = (q.source(a).0, q.target(a).0);
        let (m1, m2) = (&r1.maps[a.0], &r2.maps[a.0]);
        // (phi_t m1 - m2 phi_s)[i][j] = 0
        for i in 0..r2.dims[t] {
            for j in 0..r1.dims[s] {
                let mut row = vec![S::zero(); unknowns];
                for k in 0..r1.dims[t] {
                    let x = m1.get(k, j);
                    if !x.is_zero() {
                        row[var(t, i, k)] = row[var(t, i, k)].clone() + x.clone();
                    }
                }
                for k in 0..r2.dims[s] {
                    let x = m2.get(i, k);
                    if !x.is_zero() {
                        row[var(s, k, j)] = row[var(s, k, j)].clone() - x.clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns).map(|i| unit(unknowns, i)).collect()
    } else {
        Matrix::from_rows(rows).kernel_basis()
    };
    kernel
        .into_iter()
        .map(|x| {
            let maps = (0..nv)
                .map(|v| {
                    let mut m = Matrix::zeros(r2.dims[v], r1.dims[v]);
                    for r in 0..r2.dims[v] {
                        for c in 0..r1.dims[v] {
                            m.set(r, c, x[var(v, r, c)].clone());
                        }
                    }
                    m
                })
                .collect();
            RepMorphism { maps }
        })
        .collect()
}

const ISO_SIMPLEX_DEPTH: usize = 2;
const ISO_SIMPLEX_MAX_BASIS: usize = 6;
const ISO_RANDOM_TRIES: usize = 64;

/// An isomorphism `r1 -> r2`, if the search finds one.
pub fn find_iso<S: Scalar>(q: &Quiver, r1: &Representation<S>, r2: &Representation<S>) -> Option<RepMorphism<S>> {
    if r1.dims != r2.dims {
        return None;
    }
    if r1.total_dim() == 0 {
        return Some(RepMorphism::identity(r1));
    }
    let hom = hom_space(q, r1, r2);
    if hom.is_empty() {
        return None;
    }
    let combine = |coeffs: &[i64]| {
        coeffs
            .iter()
            .zip(&hom)
            .fold(RepMorphism::zero(r1, r2), |acc, (&c, h)| if c == 0 { acc } else { acc.add(&h.scale(&S::from_int(c))) })
    };
    let mut tried = 0usize;
    let mut try_coeffs = |coeffs: &[i64]| {
        tried += 1;
        let m = combine(coeffs);
        m.is_iso().then_some(m)
    };
    for i in 0..hom.len() {
        let mut c = vec![0; hom.len()];
        c[i] = 1;
        if let Some(m) = try_coeffs(&c) {
            return Some(m);
        }
    }
    if let Some(m) = try_coeffs(&vec![1; hom.len()]) {
        return Some(m);
    }
    if hom.len() <= ISO_SIMPLEX_MAX_BASIS {
        let mut c = vec![0i64; hom.len()];
        loop {
            let mut i = 0;
            while i < c.len() && c[i] == ISO_SIMPLEX_DEPTH as i64 {
                c[i] = 0;
                i += 1;
            }
            if i == c.len() {
                break;
            }
            c[i] += 1;
            if let Some(m) = try_coeffs(&c) {
                return Some(m);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..ISO_RANDOM_TRIES {
        let c: Vec<i64> = (0..hom.len()).map(|_| rng.gen_range(-50..=50)).collect();
        if let Some(m) = try_coeffs(&c) {
            return Some(m);
        }
    }
    None
}

pub fn iso_check<S: Scalar>(q: &Quiver, r1: &Representation<S>, r2: &Representation<S>) -> bool {
    find_iso(q, r1, r2).is_some()
}

/// A string of `(Q, I)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringWord {
    walk: Walk,
}

impl StringWord {
    pub fn new(alg: &Algebra, walk: Walk) -> Result<Self> {
        let q = alg.quiver();
        if !walk.is_trivial() {
            check_reduced(q, walk.steps())?;
        }
        for pair in walk.steps().windows(2) {
            let (s, t) = (pair[0], pair[1]);
            let bad = if s.is_direct() && t.is_direct() {
                alg.relations().contains(s.arrow, t.arrow)
            } else if !s.is_direct() && !t.is_direct() {
                alg.relations().contains(t.arrow, s.arrow)
            } else {
                false
            };
            if bad {
                return Err(Error::NotAString(q.walk_to_string(&walk)));
            }
        }
        Ok(StringWord { walk })
    }

    pub fn parse(alg: &Algebra, text: &str) -> Result<Self> {
        Self::new(alg, alg.quiver().parse_walk(text)?)
    }

    pub fn walk(&self) -> &Walk {
        &self.walk
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.walk.is_trivial()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn positions(&self) -> usize {
        self.walk.len() + 1
    }

    pub fn inverse(&self) -> Self {
        StringWord { walk: invert_walk(&self.walk) }
    }

    pub fn vertex_at(&self, q: &Quiver, position: usize) -> Vertex {
        self.walk.position_vertex(q, position)
    }

    /// Whether the basis vector at `position` lies outside the radical.
    pub fn is_top_position(&self, position: usize) -> bool {
        let steps = self.walk.steps();
        (position == 0 || !steps[position - 1].is_direct()) && (position == steps.len() || steps[position].is_direct())
    }

    /// Whether the basis vector at `position` is killed by every arrow.
    pub fn is_socle_position(&self, position: usize) -> bool {
        let steps = self.walk.steps();
        (position == 0 || steps[position - 1].is_direct()) && (position == steps.len() || !steps[position].is_direct())
    }

    pub fn display(&self, q: &Quiver) -> String {
        q.walk_to_string(&self.walk)
    }
}

/// `M(w)` together with its position basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringModule<S> {
    word: StringWord,
    rep: Representation<S>,
    /// Position -> (vertex, index in that vertex space).
    coords: Vec<(Vertex, usize)>,
}

impl<S: Scalar> StringModule<S> {
    pub fn word(&self) -> &StringWord {
        &self.word
    }

    pub fn rep(&self) -> &Representation<S> {
        &self.rep
    }

    pub fn coordinate(&self, position: usize) -> (Vertex, usize) {
        self.coords[position]
    }

    pub fn dim_vector(&self) -> &[usize] {
        self.rep.dim_vector()
    }

    /// The map sending the basis vector at `from` to the basis vector of
    /// `target` at `to`, and every other basis vector to zero.
    pub fn position_map(&self, from: usize, target: &Representation<S>, to: (Vertex, usize)) -> RepMorphism<S> {
        let mut f = RepMorphism::zero(&self.rep, target);
        let (v, i) = self.coords[from];
        assert_eq!(v, to.0, "position maps preserve vertices");
        f.maps[v.0].set(to.1, i, S::one());
        f
    }
}

pub fn string_module<S: Scalar>(alg: &Algebra, word: &StringWord) -> StringModule<S> {
    let q = alg.quiver();
    let mut dims = vec![0; q.vertex_count()];
    let coords: Vec<(Vertex, usize)> = (0..word.positions())
        .map(|i| {
            let v = word.vertex_at(q, i);
            dims[v.0] += 1;
            (v, dims[v.0] - 1)
        })
        .collect();
    let mut rep = Representation::from_dims(q, dims);
    for (i, step) in word.walk.steps().iter().enumerate() {
        let (from, to) = if step.is_direct() { (coords[i], coords[i + 1]) } else { (coords[i + 1], coords[i]) };
        rep.maps[step.arrow.0].set(to.1, from.1, S::one());
    }
    debug_assert!(Representation::new(alg, rep.dims.clone(), rep.maps.clone()).is_ok());
    StringModule { word: word.clone(), rep, coords }
}

pub fn simple_module<S: Scalar>(alg: &Algebra, x: Vertex) -> StringModule<S> {
    string_module(alg, &StringWord { walk: Walk::trivial(x) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Mono,
    Epi,
}

/// Whether the substring on positions `a..=b` of `u` gives a natural
/// monomorphism `M(v) -> M(u)` or epimorphism `M(u) -> M(v)`.
pub fn natural_criterion(u: &StringWord, a: usize, b: usize, direction: Direction) -> bool {
    let steps = u.walk.steps();
    let after_is_direct = (b < steps.len()).then(|| steps[b].is_direct());
    let before_is_direct = (a > 0).then(|| steps[a - 1].is_direct());
    match direction {
        Direction::Mono => after_is_direct != Some(true) && before_is_direct != Some(false),
        Direction::Epi => after_is_direct != Some(false) && before_is_direct != Some(true),
    }
}

/// The canonical inclusion `M(v) -> M(u)` or projection `M(u) -> M(v)` for
/// the substring `v` of `u` on positions `a..=b` (0-based).
pub fn natural_map<S: Scalar>(
    alg: &Algebra,
    u: &StringModule<S>,
    a: usize,
    b: usize,
    direction: Direction,
) -> Result<(StringModule<S>, RepMorphism<S>)> {
    let q = alg.quiver();
    if a > b || b >= u.word.positions() {
        return Err(Error::InvalidSelection(format!("positions {a}..={b} of {}", u.word.display(q))));
    }
    if !natural_criterion(&u.word, a, b, direction) {
        return Err(Error::CriterionFails(match direction {
            Direction::Mono => "monomorphism",
            Direction::Epi => "epimorphism",
        }));
    }
    let v = string_module::<S>(alg, &StringWord { walk: u.word.walk.sub_walk(q, a, b) });
    let map = match direction {
        Direction::Mono => {
            let mut f = RepMorphism::zero(&v.rep, &u.rep);
            for (i, &(x, k)) in v.coords.iter().enumerate() {
                f.maps[x.0].set(u.coords[a + i].1, k, S::one());
            }
            if !f.is_injective() || !f.is_intertwiner(q, &v.rep, &u.rep) {
                return Err(Error::Invariant("natural monomorphism check failed".into()));
            }
            f
        }
        Direction::Epi => {
            let mut f = RepMorphism::zero(&u.rep, &v.rep);
            for (i, &(x, k)) in v.coords.iter().enumerate() {
                f.maps[x.0].set(k, u.coords[a + i].1, S::one());
            }
            if !f.is_surjective() || !f.is_intertwiner(q, &u.rep, &v.rep) {
                return Err(Error::Invariant("natural epimorphism check failed".into()));
            }
            f
        }
    };
    Ok((v, map))
}

/// The natural map `src ->> S -> tgt` through a simple: the projection of
/// `src` onto its top summand at position `from`, followed by the inclusion
/// of that simple as the socle summand of `tgt` at position `to`.
pub fn through_simple<S: Scalar>(
    alg: &Algebra,
    src: &StringModule<S>,
    from: usize,
    tgt: &StringModule<S>,
    to: usize,
) -> Result<RepMorphism<S>> {
    let (s1, epi) = natural_map(alg, src, from, from, Direction::Epi)?;
    let (s2, mono) = natural_map(alg, tgt, to, to, Direction::Mono)?;
    if s1.rep != s2.rep {
        return Err(Error::InvalidSelection("positions lie over different vertices".into()));
    }
    Ok(mono.compose(&epi))
}

/// Dimension vectors of the top and the socle.
pub fn top_socle<S: Scalar>(q: &Quiver, r: &Representation<S>) -> (Vec<usize>, Vec<usize>) {
    let mut top = Vec::with_capacity(r.dims.len());
    let mut socle = Vec::with_capacity(r.dims.len());
    for v in q.vertices() {
        let d = r.dims[v.0];
        let incoming: Vec<&Matrix<S>> = q.arrows_to(v).map(|a| &r.maps[a.0]).collect();
        let radical = incoming.iter().fold(Matrix::zeros(d, 0), |acc, m| acc.hstack(m)).rank();
        top.push(d - radical);
        let outgoing = q.arrows_from(v).fold(Matrix::zeros(0, d), |acc, a| acc.vstack(&r.maps[a.0]));
        socle.push(d - outgoing.rank());
    }
    (top, socle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::Rational;

    type Q = Rational;

    fn module(alg: &Algebra, w: &str) -> StringModule<Q> {
        string_module(alg, &StringWord::parse(alg, w).unwrap())
    }

    #[test]
    fn dimension_vectors() {
        let alg = examples::main_example();
        let m = module(&alg, "a1^-1 g a4^-1");
        assert_eq!(m.dim_vector(), &[1, 1, 0, 1, 1]);
        let (top, socle) = top_socle(alg.quiver(), m.rep());
        assert_eq!(top, vec![1, 0, 0, 1, 0]);
        assert_eq!(socle, vec![0, 1, 0, 0, 1]);
        let m = module(&alg, "a2^-1 b a3^-1");
        assert_eq!(m.dim_vector(), &[0, 1, 2, 1, 0]);
        assert_eq!(m.rep().total_dim(), 4);
        let s = module(&alg, "e:3");
        assert_eq!(s.rep(), &Representation::simple(alg.quiver(), Vertex(2)));
    }

    #[test]
    fn string_validation() {
        let alg = examples::main_example();
        assert!(matches!(StringWord::parse(&alg, "a1 a2"), Err(Error::NotAString(_))));
        assert!(matches!(StringWord::parse(&alg, "a2^-1 a1^-1"), Err(Error::NotAString(_))));
        assert!(matches!(StringWord::parse(&alg, "a1^-1 b"), Err(Error::BrokenChain(_))));
        assert!(StringWord::parse(&alg, "b a3^-1").is_ok());
        let alg = examples::a3_no_relations();
        assert!(StringWord::parse(&alg, "a b").is_ok());
        assert!(matches!(StringWord::parse(&alg, "a a^-1"), Err(Error::NotReduced(_))));
    }

    #[test]
    fn top_socle_positions() {
        let alg = examples::main_example();
        let w = StringWord::parse(&alg, "a1^-1 g a4^-1").unwrap();
        let tops: Vec<usize> = (0..4).filter(|&i| w.is_top_position(i)).collect();
        let socles: Vec<usize> = (0..4).filter(|&i| w.is_socle_position(i)).collect();
        assert_eq!(tops, vec![1, 3]);
        assert_eq!(socles, vec![0, 2]);
    }

    #[test]
    fn natural_maps() {
        let alg = examples::main_example();
        let m = module(&alg, "a1");
        let (s, f) = natural_map(&alg, &m, 1, 1, Direction::Mono).unwrap();
        assert_eq!(s.rep(), &Representation::simple(alg.quiver(), Vertex(1)));
        assert!(f.is_injective());
        let (s, f) = natural_map(&alg, &m, 0, 0, Direction::Epi).unwrap();
        assert_eq!(s.rep(), &Representation::simple(alg.quiver(), Vertex(0)));
        assert!(f.is_surjective());
        assert!(matches!(natural_map(&alg, &m, 0, 0, Direction::Mono), Err(Error::CriterionFails(_))));

        // S_2 is a socle summand at position 0 of a1^-1 g a4^-1, S_4 a top
        // summand at position 3.
        let x = module(&alg, "a1^-1 g a4^-1");
        let (s, f) = natural_map(&alg, &x, 0, 0, Direction::Mono).unwrap();
        assert_eq!(s.dim_vector(), &[0, 1, 0, 0, 0]);
        assert_eq!(f.ranks().iter().sum::<usize>(), 1);
        let (s, f) = natural_map(&alg, &x, 3, 3, Direction::Epi).unwrap();
        assert_eq!(s.dim_vector(), &[0, 0, 0, 1, 0]);
        assert!(f.is_surjective());
        assert!(natural_map(&alg, &x, 1, 3, Direction::Mono).is_err());
        assert!(natural_map(&alg, &x, 1, 2, Direction::Epi).is_err());
        assert!(natural_map(&alg, &x, 1, 3, Direction::Epi).is_ok());
        assert!(matches!(natural_map(&alg, &x, 2, 9, Direction::Epi), Err(Error::InvalidSelection(_))));
    }

    #[test]
    fn isomorphisms() {
        let alg = examples::main_example();
        let q = alg.quiver();
        let w = StringWord::parse(&alg, "a2^-1 b a3^-1").unwrap();
        let m: StringModule<Q> = string_module(&alg, &w);
        let mi: StringModule<Q> = string_module(&alg, &w.inverse());
        assert_ne!(m.rep(), mi.rep());
        assert!(iso_check(q, m.rep(), mi.rep()));
        assert!(iso_check(q, m.rep(), m.rep()));
        assert!(!iso_check(q, &Representation::<Q>::simple(q, Vertex(0)), &Representation::simple(q, Vertex(1))));
        // Same dimension vector, different modules.
        let p = module(&alg, "a2^-1 b a3^-1");
        let s = Representation::simple(q, Vertex(1)).direct_sum(&Representation::simple(q, Vertex(2)), q);
        let s = s.direct_sum(&Representation::simple(q, Vertex(2)), q).direct_sum(&Representation::simple(q, Vertex(3)), q);
        assert_eq!(s.dim_vector(), p.dim_vector());
        assert!(!iso_check(q, p.rep(), &s));
    }

    #[test]
    fn kernels_and_cokernels() {
        let alg = examples::main_example();
        let q = alg.quiver();
        let x = module(&alg, "a1^-1 g a4^-1");
        let (_, epi) = natural_map(&alg, &x, 3, 3, Direction::Epi).unwrap();
        let (k, inc) = epi.kernel(q, x.rep());
        assert_eq!(k.dim_vector(), &[1, 1, 0, 0, 1]);
        assert!(inc.is_intertwiner(q, &k, x.rep()));
        assert!(iso_check(q, &k, module(&alg, "a1^-1 g").rep()));
        let (_, mono) = natural_map(&alg, &x, 0, 0, Direction::Mono).unwrap();
        let (c, proj) = mono.cokernel(q, x.rep());
        assert!(proj.is_surjective() && proj.is_intertwiner(q, x.rep(), &c));
        assert!(iso_check(q, &c, module(&alg, "g a4^-1").rep()));
        assert!(is_exact_at(&inc, &epi, x.rep()));
    }
}

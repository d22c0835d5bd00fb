//! Monomial quadratic algebras `kQ/I`.
//!
//! The ideal is generated by a set of composable arrow pairs. A path is
//! nonzero in the algebra iff none of its consecutive arrow pairs is a
//! relation, so the nonzero paths form a basis and the product of two basis
//! paths is either a basis path or zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::{compose_paths, Arrow, Path, Quiver, Vertex};
use crate::scalar::Scalar;

/// Composable arrow pairs generating the ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    pairs: BTreeSet<(Arrow, Arrow)>,
}

impl RelationSet {
    pub fn new(q: &Quiver, pairs: impl IntoIterator<Item = (Arrow, Arrow)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if q.target(a) != q.source(b) {
                return Err(Error::NonComposableRelation(q.arrow_label(a).into(), q.arrow_label(b).into()));
            }
            if !set.insert((a, b)) {
                return Err(Error::DuplicateRelation(q.arrow_label(a).into(), q.arrow_label(b).into()));
            }
        }
        Ok(RelationSet { pairs: set })
    }

    /// Every composable pair of arrows.
    pub fn all_length_two(q: &Quiver) -> Self {
        let pairs = q
            .arrows()
            .flat_map(|a| q.arrows().filter(move |&b| q.target(a) == q.source(b)).map(move |b| (a, b)))
            .collect();
        RelationSet { pairs }
    }

    pub fn contains(&self, a: Arrow, b: Arrow) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Arrow, Arrow)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A finite-dimensional monomial quadratic algebra with its path basis.
///
/// The algebra itself is scalar-free; the field is fixed by the scalar type
/// of the elements and cochains built over it.
#[derive(Clone, Debug)]
pub struct Algebra {
    quiver: Quiver,
    relations: RelationSet,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl Algebra {
    /// Checks admissibility and enumerates the path basis.
    pub fn new(quiver: Quiver, relations: RelationSet) -> Result<Self> {
        // Arrow-composition graph: a -> b iff ab is composable and not a relation.
        let n = quiver.arrow_count();
        let successors: Vec<Vec<Arrow>> = quiver
            .arrows()
            .map(|a| {
                quiver
                    .arrows_from(quiver.target(a))
                    .filter(|&b| !relations.contains(a, b))
                    .collect()
            })
            .collect();
        if let Some(a) = find_cycle(n, &successors) {
            return Err(Error::NonAdmissible(quiver.arrow_label(a).to_owned()));
        }

        let mut basis: Vec<Path> = quiver.vertices().map(Path::trivial).collect();
        let mut layer: Vec<Path> = quiver.arrows().map(|a| Path::arrow(&quiver, a)).collect();
        while !layer.is_empty() {
            basis.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for p in &layer {
                for &b in &successors[p.last().unwrap().0] {
                    next.push(compose_paths(p, &Path::arrow(&quiver, b)).expect("successor chains"));
                }
            }
            next.sort();
            layer = next;
        }
        basis.sort();
        let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(Algebra { quiver, relations, basis, index })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    /// Basis paths: trivial paths first, then by length, then lexicographically.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_basis_path(&self, p: &Path) -> bool {
        self.index.contains_key(p)
    }

    /// Nontrivial basis paths, spanning the radical.
    pub fn radical_basis(&self) -> impl Iterator<Item = &Path> {
        self.basis.iter().filter(|p| !p.is_trivial())
    }

    /// Product of two paths in the algebra: `None` when it vanishes.
    pub fn multiply_paths(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target() != q.source() {
            return None;
        }
        if let (Some(a), Some(b)) = (p.last(), q.first()) {
            if self.relations.contains(a, b) {
                return None;
            }
        }
        let product = compose_paths(p, q).ok()?;
        self.is_basis_path(&product).then_some(product)
    }

    /// Basis of `e_x A e_y`, in canonical order.
    pub fn parallel_basis_paths(&self, x: Vertex, y: Vertex) -> Vec<Path> {
        self.basis.iter().filter(|p| p.source() == x && p.target() == y).cloned().collect()
    }

    /// Class of an arbitrary path of the quiver: `None` if it lies in the ideal.
    pub fn reduce_path(&self, p: &Path) -> Option<Path> {
        self.is_basis_path(p).then(|| p.clone())
    }

    pub fn one<S: Scalar>(&self) -> AlgebraElement<S> {
        AlgebraElement::from_terms(self.quiver.vertices().map(|v| (Path::trivial(v), S::one())))
    }
}

// Iterative DFS; returns an arrow lying on a directed cycle.
fn find_cycle(n: usize, successors: &[Vec<Arrow>]) -> Option<Arrow> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if let Some(&Arrow(succ)) = successors[node].get(*next) {
                *next += 1;
                match mark[succ] {
                    Mark::Active => return Some(Arrow(succ)),
                    Mark::New => {
                        mark[succ] = Mark::Active;
                        stack.push((succ, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[node] = Mark::Done;
                stack.pop();
            }
        }
    }
    None
}

/// A linear combination of basis paths with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement<S> {
    terms: BTreeMap<Path, S>,
}

impl<S: Scalar> Default for AlgebraElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn basis(p: Path) -> Self {
        Self::term(p, S::one())
    }

    pub fn term(p: Path, c: S) -> Self {
        let mut e = Self::zero();
        e.add_term(p, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Path, S)>) -> Self {
        let mut e = Self::zero();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: Path, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Path) -> S {
        self.terms.get(p).cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, x)| (p.clone(), x.clone() * c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("{c}*{}", q.path_to_string(p)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Algebra {
    /// Bilinear extension of path multiplication.
    pub fn multiply<S: Scalar>(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for (p, x) in &a.terms {
            for (q, y) in &b.terms {
                if let Some(pq) = self.multiply_paths(p, q) {
                    out.add_term(pq, x.clone() * y.clone());
                }
            }
        }
        out
    }

    /// Projection onto the radical: drops trivial-path components.
    pub fn radical_project<S: Scalar>(&self, a: &AlgebraElement<S>) -> AlgebraElement<S> {
        AlgebraElement::from_terms(a.terms.iter().filter(|(p, _)| !p.is_trivial()).map(|(p, c)| (p.clone(), c.clone())))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "algebra: {} vertices, {} arrows, {} relations, dimension {}",
            self.quiver.vertex_count(),
            self.quiver.arrow_count(),
            self.relations.len(),
            self.dimension()
        )
    }
}

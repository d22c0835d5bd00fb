//! Exact linear algebra over a [`Scalar`] field.
//!
//! Pivoting is deterministic (first nonzero entry in row order), so kernel
//! bases and solutions are reproducible.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: S) {
        let slot = &mut self.data[r * self.cols + c];
        *slot = slot.clone() + value;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `self` left of `other`.
    pub fn hstack(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn echelon(&self) -> Echelon<S> {
        Echelon::new(self)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        self.echelon().kernel_basis()
    }

    pub fn in_image(&self, v: &[S]) -> bool {
        self.solve(v).is_ok()
    }

    /// Some `x` with `self * x = b`.
    pub fn solve(&self, b: &[S]) -> Result<Vec<S>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = self.hstack(&Matrix::from_rows(b.iter().map(|x| vec![x.clone()]).collect()));
        if self.rows == 0 {
            aug = Matrix::zeros(0, self.cols + 1);
        }
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![S::zero(); self.cols];
        for (i, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced.get(i, self.cols).clone();
        }
        Ok(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    pub reduced: Matrix<S>,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl<S: Scalar> Echelon<S> {
    fn new(m: &Matrix<S>) -> Self {
        let mut a = m.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..a.cols {
            if next_row == a.rows {
                break;
            }
            let Some(pr) = (next_row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            if pr != next_row {
                for c in 0..a.cols {
                    a.data.swap(pr * a.cols + c, next_row * a.cols + c);
                }
            }
            let inv = a.get(next_row, col).inverse().expect("pivot is nonzero");
            let support: Vec<usize> = (col..a.cols).filter(|&c| !a.get(next_row, c).is_zero()).collect();
            for &c in &support {
                let v = a.get(next_row, c).clone() * inv.clone();
                a.set(next_row, c, v);
            }
            for r in 0..a.rows {
                if r == next_row {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for &c in &support {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(next_row, c).clone();
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        Echelon { reduced: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One kernel vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let cols = self.reduced.cols;
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![S::zero(); cols];
                v[free] = S::one();
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.reduced.get(i, free).clone();
                }
                v
            })
            .collect()
    }
}

/// Incrementally maintained subspace with a fully reduced basis.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    dim: usize,
    basis: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> Subspace<S> {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new() }
    }

    pub fn spanned_by<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a [S]>) -> Self {
        let mut s = Self::new(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Column span of `m`.
    pub fn column_span(m: &Matrix<S>) -> Self {
        let t = m.transpose();
        Self::spanned_by(m.rows(), (0..t.rows()).map(|r| t.row(r)))
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut v = v.to_vec();
        for (p, b) in &self.basis {
            let factor = v[*p].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(v).iter().all(S::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inverse().unwrap();
        for x in r.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, b) in self.basis.iter_mut() {
            let factor = b[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, y) in b.iter_mut().zip(&r) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
        self.basis.push((p, r));
        true
    }
}

/// A matrix whose rows and columns carry labels.
#[derive(Clone, Debug)]
pub struct LabeledMatrix<R, C, S> {
    row_labels: Vec<R>,
    col_labels: Vec<C>,
    row_index: HashMap<R, usize>,
    col_index: HashMap<C, usize>,
    matrix: Matrix<S>,
}

impl<R, C, S> LabeledMatrix<R, C, S>
where
    R: Clone + Eq + Hash,
    C: Clone + Eq + Hash,
    S: Scalar,
{
    pub fn zeros(row_labels: Vec<R>, col_labels: Vec<C>) -> Self {
        let row_index: HashMap<R, usize> = row_labels.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let col_index: HashMap<C, usize> = col_labels.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        assert_eq!(row_index.len(), row_labels.len(), "row labels must be unique");
        assert_eq!(col_index.len(), col_labels.len(), "column labels must be unique");
        let matrix = Matrix::zeros(row_labels.len(), col_labels.len());
        LabeledMatrix { row_labels, col_labels, row_index, col_index, matrix }
    }

    pub fn row_labels(&self) -> &[R] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[C] {
        &self.col_labels
    }

    pub fn row_of(&self, r: &R) -> Option<usize> {
        self.row_index.get(r).copied()
    }

    pub fn col_of(&self, c: &C) -> Option<usize> {
        self.col_index.get(c).copied()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    /// Adds `value` at `(r, c)`; panics on undeclared labels.
    pub fn add(&mut self, r: &R, c: &C, value: S) {
        let (i, j) = (self.row_index[r], self.col_index[c]);
        self.matrix.add_at(i, j, value);
    }

    pub fn get(&self, r: &R, c: &C) -> S {
        self.matrix.get(self.row_index[r], self.col_index[c]).clone()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        self.matrix.kernel_basis()
    }

    pub fn in_image(&self, v: &[S]) -> bool {
        self.matrix.in_image(v)
    }

    pub fn solve(&self, b: &[S]) -> Result<Vec<S>> {
        self.matrix.solve(b)
    }
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    m.rank()
}

pub fn kernel_basis<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    m.kernel_basis()
}

pub fn in_image<S: Scalar>(m: &Matrix<S>, v: &[S]) -> bool {
    m.in_image(v)
}

pub fn solve_linear<S: Scalar>(m: &Matrix<S>, b: &[S]) -> Result<Vec<S>> {
    m.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(x: i64) -> Q {
        Q::from_int(x)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Q>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Q>::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::<Q>::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Matrix::<Fp<2>>::from_ints(&[&[1, 1], &[1, -1]]).rank(), 1);
        assert_eq!(Matrix::<Q>::from_ints(&[&[1, 1], &[1, -1]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::<Q>::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::<Q>::zeros(2, 3).kernel_basis().len(), 3);
        let k = Matrix::<Q>::from_ints(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn image_examples() {
        let m = Matrix::<Q>::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(m.in_image(&[q(0), q(0)]));
        assert!(m.in_image(&[q(1), q(2)]));
        assert!(!m.in_image(&[q(1), q(0)]));
        assert!(Matrix::<Q>::identity(2).in_image(&[q(5), q(-3)]));
        assert!(!Matrix::<Q>::zeros(2, 2).in_image(&[q(1), q(0)]));
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q(-7)];
        assert_eq!(Matrix::<Q>::identity(2).solve(&b).unwrap(), b);
        let m = Matrix::<Q>::from_ints(&[&[1, 1]]);
        let x = m.solve(&[q(2)]).unwrap();
        assert_eq!(m.apply(&x), vec![q(2)]);
        assert!(matches!(Matrix::<Q>::zeros(1, 2).solve(&[q(1)]), Err(Error::NoSolution)));
        assert!(Matrix::<Q>::zeros(0, 2).solve(&[]).is_ok());
    }

    #[test]
    fn labeled() {
        let mut m = LabeledMatrix::<&str, &str, Q>::zeros(vec!["r1", "r2"], vec!["c1", "c2", "c3"]);
        m.add(&"r1", &"c1", q(1));
        m.add(&"r2", &"c3", q(2));
        m.add(&"r2", &"c3", q(1));
        assert_eq!(m.get(&"r2", &"c3"), q(3));
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_basis().len(), 1);
    }

    #[test]
    fn subspace_membership() {
        let mut s = Subspace::<Q>::new(3);
        assert!(s.insert(&[q(1), q(1), q(0)]));
        assert!(!s.insert(&[q(2), q(2), q(0)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert!(s.contains(&[q(1), q(0), q(-1)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.rank(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r))
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in small_matrix()) {
            let m = Matrix::<Q>::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank() + kernel.len(), m.cols());
            for k in &kernel {
                prop_assert!(m.apply(k).iter().all(Zero::is_zero));
            }
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn solutions_substitute(rows in small_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
            let m = Matrix::<Q>::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            let x0: Vec<Q> = (0..m.cols()).map(|i| q(seed[i])).collect();
            let b = m.apply(&x0);
            let x = m.solve(&b).unwrap();
            prop_assert_eq!(m.apply(&x), b.clone());
            prop_assert!(Subspace::column_span(&m).contains(&b));
        }
    }
}

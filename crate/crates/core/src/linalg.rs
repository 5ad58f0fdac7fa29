//! Dense exact linear algebra over a finite field.
//!
//! Everything here is Gauss-Jordan elimination in one guise or another. The
//! central type is [`Subspace`], which always stores the reduced row echelon
//! basis of its span, so two subspaces are equal exactly when their stored
//! bases are equal entry by entry.

use crate::gf::{FiniteField, Scalar};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vectors live over different fields")]
    FieldMismatch,
    #[error("gram matrix is {rows}x{cols} but the ambient dimension is {ambient}")]
    GramShape { rows: usize, cols: usize, ambient: usize },
    #[error("row {index} has length {got}, expected {expected}")]
    RowLength { index: usize, expected: usize, got: usize },
}

/// A coordinate vector over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    field: Arc<FiniteField>,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: Arc<FiniteField>, coords: Vec<Scalar>) -> Vector {
        debug_assert!(coords.iter().all(|c| c.field() == &field));
        Vector { field, coords }
    }

    pub fn zero(field: &Arc<FiniteField>, dim: usize) -> Vector {
        Vector { field: field.clone(), coords: vec![field.zero(); dim] }
    }

    /// The i-th standard basis vector.
    pub fn unit(field: &Arc<FiniteField>, dim: usize, i: usize) -> Vector {
        let mut v = Vector::zero(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.coords[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Vector { field: self.field.clone(), coords }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Vector { field: self.field.clone(), coords }
    }

    pub fn neg(&self) -> Vector {
        Vector { field: self.field.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, k: &Scalar) -> Vector {
        Vector { field: self.field.clone(), coords: self.coords.iter().map(|a| a * k).collect() }
    }

    /// Plain dot product (no gram matrix).
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        let mut acc = self.field.zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc = &acc + &(a * b);
        }
        acc
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Iterate over every vector of k^dim, low coordinate cycling fastest.
/// Intended for brute-force enumeration of small spaces.
pub fn all_vectors(field: &Arc<FiniteField>, dim: usize) -> impl Iterator<Item = Vector> + '_ {
    let elems: Vec<Scalar> = field.elements().collect();
    let field = field.clone();
    let mut odometer = vec![0usize; dim];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let coords: Vec<Scalar> = odometer.iter().map(|&i| elems[i].clone()).collect();
        let mut carry = true;
        for digit in odometer.iter_mut() {
            if !carry {
                break;
            }
            *digit += 1;
            if *digit == elems.len() {
                *digit = 0;
            } else {
                carry = false;
            }
        }
        if carry {
            done = true;
        }
        Some(Vector { field: field.clone(), coords })
    })
}

/// A dense row-major matrix over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Arc<FiniteField>, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Arc<FiniteField>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_fn(
        field: &Arc<FiniteField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(
        field: &Arc<FiniteField>,
        cols: usize,
        rows: &[Vector],
    ) -> Result<Matrix, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.dim() != cols {
                return Err(LinalgError::RowLength { index: i, expected: cols, got: r.dim() });
            }
            if r.field() != field {
                return Err(LinalgError::FieldMismatch);
            }
            data.extend(r.coords().iter().cloned());
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector {
            field: self.field.clone(),
            coords: self.data[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn col(&self, c: usize) -> Vector {
        Vector {
            field: self.field.clone(),
            coords: (0..self.rows).map(|r| self.at(r, c).clone()).collect(),
        }
    }

    pub fn set_row(&mut self, r: usize, v: &Vector) {
        assert_eq!(v.dim(), self.cols);
        for c in 0..self.cols {
            *self.at_mut(r, c) = v.get(c).clone();
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Matrix::from_fn(&self.field, self.rows, other.cols, |r, c| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                if !self.at(r, k).is_zero() {
                    acc = &acc + &(self.at(r, k) * other.at(k, c));
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        Vector {
            field: self.field.clone(),
            coords: (0..self.rows)
                .map(|r| {
                    let mut acc = self.field.zero();
                    for c in 0..self.cols {
                        if !self.at(r, c).is_zero() {
                            acc = &acc + &(self.at(r, c) * v.get(c));
                        }
                    }
                    acc
                })
                .collect(),
        }
    }

    pub fn stack_vertical(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "stacking needs equal widths");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivots are scaled to 1 and cleared above and below, so the output is
    /// canonical for the row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, r * m.cols + k);
                }
            }
            let inv = m.at(r, c).inverse().expect("pivot is nonzero");
            for k in 0..m.cols {
                *m.at_mut(r, k) = m.at(r, k) * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for k in 0..m.cols {
                        let v = m.at(i, k) - &(&f * m.at(r, k));
                        *m.at_mut(i, k) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Right kernel {v : M v = 0} as a canonical subspace of k^cols.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = Vector::zero(&self.field, self.cols);
            v.set(free, self.field.one());
            for (i, &pc) in pivots.iter().enumerate() {
                v.set(pc, -r.at(i, free));
            }
            basis.push(v);
        }
        let m =
            Matrix::from_rows(&self.field, self.cols, &basis).expect("kernel rows are consistent");
        Subspace::from_span_matrix(&m)
    }

    /// Solve M x = b; returns one solution (free variables zero) or None.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.dim(), "right-hand side has wrong length");
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b.get(r).clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // a pivot in the augmented column means inconsistency
        }
        let mut x = Vector::zero(&self.field, self.cols);
        for (i, &c) in pivots.iter().enumerate() {
            x.set(c, red.at(i, self.cols).clone());
        }
        Some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A subspace of k^n, stored as the reduced row echelon basis of its span.
///
/// The representation is canonical: `a == b` holds exactly when the two
/// subspaces are equal as sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix, // dim() rows, ambient_dim() cols, in RREF with no zero rows
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Arc<FiniteField>, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &Arc<FiniteField>, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of a matrix.
    pub fn from_span_matrix(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref();
        let mut basis = Matrix::zeros(&r.field, pivots.len(), r.cols);
        for i in 0..pivots.len() {
            for c in 0..r.cols {
                *basis.at_mut(i, c) = r.at(i, c).clone();
            }
        }
        Subspace { basis, pivots }
    }

    pub fn from_span(
        field: &Arc<FiniteField>,
        ambient: usize,
        vectors: &[Vector],
    ) -> Result<Subspace, LinalgError> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        Ok(Subspace::from_span_matrix(&m))
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The ambient coordinates that are not pivot columns of the basis; these
    /// index a complement, and serve as coset representative coordinates for
    /// the quotient by this subspace.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduce a vector modulo this subspace: subtract basis rows until every
    /// pivot coordinate is zero. The result is the canonical coset
    /// representative; it is zero exactly when the vector lies in the subspace.
    pub fn reduce(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.ambient_dim(), "ambient dimension mismatch");
        let mut w = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !w.get(p).is_zero() {
                let f = w.get(p).clone();
                w = w.sub(&self.basis.row(i).scale(&f));
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &Vector) -> bool {
        v.dim() == self.ambient_dim() && self.reduce(v).is_zero()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient_dim() == self.ambient_dim()
            && (0..other.dim()).all(|i| self.contains_vector(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        Ok(Subspace::from_span_matrix(&self.basis.stack_vertical(&other.basis)))
    }

    /// Intersection, via the left kernel of the stacked bases: a combination
    /// sum a_i u_i = sum b_j v_j of the two bases is exactly a vector of the
    /// intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field(), self.ambient_dim()));
        }
        let stacked = self.basis.stack_vertical(&other.basis);
        let coeffs = stacked.transpose().kernel();
        let mut vectors = Vec::new();
        for i in 0..coeffs.dim() {
            let c = coeffs.basis().row(i);
            let mut v = Vector::zero(self.field(), self.ambient_dim());
            for j in 0..self.dim() {
                v = v.add(&self.basis.row(j).scale(c.get(j)));
            }
            vectors.push(v);
        }
        Subspace::from_span(self.field(), self.ambient_dim(), &vectors)
    }

    /// Orthogonal space {a : <a, v> = 0 for all v in self} with respect to the
    /// pairing <a, v> = a^T gram v.
    pub fn orthogonal(&self, gram: &Matrix) -> Result<Subspace, LinalgError> {
        if gram.rows() != gram.cols() || gram.rows() != self.ambient_dim() {
            return Err(LinalgError::GramShape {
                rows: gram.rows(),
                cols: gram.cols(),
                ambient: self.ambient_dim(),
            });
        }
        // Row i of (basis * gram^T) is (gram v_i)^T, so the orthogonal space
        // is the kernel of that matrix.
        let constraints = self.basis.mul(&gram.transpose());
        Ok(constraints.kernel())
    }

    /// Annihilator in dual coordinates: functionals (written in the dual
    /// basis) vanishing on this subspace. Computed as the kernel of the basis
    /// matrix; dim = ambient - dim(self).
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim(),
                right: other.ambient_dim(),
            });
        }
        if self.field() != other.field() {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(())
    }
}

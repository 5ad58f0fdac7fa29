//! Finite-dimensional associative unital algebras given by structure constants.
//!
//! An [`Algebra`] stores, for each pair of basis indices (i, j), the sparse
//! expansion of the product b_i * b_j. Associativity and the unit laws are
//! checked when the algebra is built, so a constructed `Algebra` is always a
//! genuine associative algebra; downstream code relies on that.
//!
//! The module also owns the JSON file format for algebras and the
//! [`SymmetrizingForm`] machinery for algebras that come with a symmetrizing
//! linear functional.

use crate::gf::{FiniteField, GfError, Scalar};
use crate::linalg::{LinalgError, Matrix, Subspace, Vector};
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structure constant index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("unit vector has length {got}, expected {expected}")]
    UnitLength { expected: usize, got: usize },
    #[error("vector has length {got}, expected {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error(
        "associativity fails on basis triple ({i},{j},{l}): (b{i}*b{j})*b{l} != b{i}*(b{j}*b{l})"
    )]
    NotAssociative { i: usize, j: usize, l: usize },
    #[error("unit law fails on basis vector {i}")]
    UnitLaw { i: usize },
    #[error("functional has length {got}, expected {expected}")]
    FunctionalLength { expected: usize, got: usize },
    #[error("functional is not symmetrizing: pi(b{i}*b{j}) != pi(b{j}*b{i})")]
    NotSymmetricForm { i: usize, j: usize },
    #[error("form is not associative on basis triple ({i},{j},{l})")]
    NotAssociativeForm { i: usize, j: usize, l: usize },
    #[error("form is degenerate: gram matrix is singular")]
    DegenerateForm,
    #[error("cannot combine algebras over different fields ({left} vs {right})")]
    MixedFields { left: String, right: String },
    #[error("matrix algebra size must be at least 1")]
    BadMatrixSize,
    #[error("malformed algebra file: {0}")]
    Json(String),
    #[error("scalar entry {0} is malformed: {1}")]
    BadScalar(String, String),
}

/// Sparse expansion of one basis product: sorted (k, coefficient) pairs.
type SparseRow = Vec<(usize, Scalar)>;

/// A finite-dimensional associative unital algebra over a finite field,
/// presented by structure constants on a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Arc<FiniteField>,
    dim: usize,
    /// Row i*dim + j holds the expansion of b_i * b_j.
    sc: Vec<SparseRow>,
    unit: Vector,
}

impl Algebra {
    /// Build and fully validate an algebra.
    ///
    /// Entries are (i, j, k, c) meaning b_i * b_j contains c * b_k; repeated
    /// (i, j, k) entries are accumulated. Validation checks every basis
    /// triple for associativity and the unit laws, so this costs O(dim^4)
    /// scalar operations.
    pub fn new(
        field: &Arc<FiniteField>,
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
        unit: Vector,
    ) -> Result<Algebra, AlgebraError> {
        if unit.dim() != dim {
            return Err(AlgebraError::UnitLength { expected: dim, got: unit.dim() });
        }
        if unit.field() != field {
            return Err(GfError::FieldMismatch {
                left: field.spec_string(),
                right: unit.field().spec_string(),
            }
            .into());
        }
        let mut dense: Vec<Vec<Scalar>> = Vec::new();
        let mut touched: Vec<(usize, usize)> = Vec::new();
        let mut table: Vec<Option<usize>> = vec![None; dim * dim];
        for &(i, j, k, ref c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::IndexOutOfRange { i, j, k, dim });
            }
            c.checked_add(&field.zero())?; // field membership
            let slot = i * dim + j;
            let idx = match table[slot] {
                Some(idx) => idx,
                None => {
                    dense.push(vec![field.zero(); dim]);
                    touched.push((i, j));
                    table[slot] = Some(dense.len() - 1);
                    dense.len() - 1
                }
            };
            dense[idx][k] = &dense[idx][k] + c;
        }
        let mut sc: Vec<SparseRow> = vec![Vec::new(); dim * dim];
        for (idx, (i, j)) in touched.into_iter().enumerate() {
            let row: SparseRow = dense[idx]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect();
            sc[i * dim + j] = row;
        }
        let a = Algebra { field: field.clone(), dim, sc, unit };
        a.validate()?;
        Ok(a)
    }

    /// Re-run the structural checks: unit laws and associativity on every
    /// basis triple. A freshly built algebra always passes; this exists so
    /// callers can double-check data they assembled themselves.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let b = self.basis_vector(i);
            if self.mul_vectors(&self.unit, &b) != b {
                return Err(AlgebraError::UnitLaw { i });
            }
            if self.mul_vectors(&b, &self.unit) != b {
                return Err(AlgebraError::UnitLaw { i });
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for l in 0..self.dim {
                    let left = self.mul_vectors(&ij, &self.basis_vector(l));
                    let right = self.mul_vectors(&self.basis_vector(i), &self.basis_product(j, l));
                    if left != right {
                        return Err(AlgebraError::NotAssociative { i, j, l });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(&self.field, self.dim, i)
    }

    /// The product b_i * b_j as a dense vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = Vector::zero(&self.field, self.dim);
        for (k, c) in &self.sc[i * self.dim + j] {
            v.set(*k, c.clone());
        }
        v
    }

    /// Multiply two elements, with input validation.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector, AlgebraError> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul_vectors(x, y))
    }

    pub(crate) fn check_element(&self, x: &Vector) -> Result<(), AlgebraError> {
        if x.dim() != self.dim {
            return Err(AlgebraError::VectorLength { expected: self.dim, got: x.dim() });
        }
        if x.field() != &self.field {
            return Err(GfError::FieldMismatch {
                left: self.field.spec_string(),
                right: x.field().spec_string(),
            }
            .into());
        }
        Ok(())
    }

    /// Internal multiplication; assumes both vectors belong to this algebra.
    pub(crate) fn mul_vectors(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            let xi = x.get(i);
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let yj = y.get(j);
                if yj.is_zero() {
                    continue;
                }
                let coef = &(xi * yj);
                for (k, c) in &self.sc[i * self.dim + j] {
                    out[*k] = &out[*k] + &(coef * c);
                }
            }
        }
        Vector::new(self.field.clone(), out)
    }

    /// x^(p^n), by n rounds of raising to the p-th power (square and multiply).
    pub fn p_power(&self, x: &Vector, n: u32) -> Result<Vector, AlgebraError> {
        self.check_element(x)?;
        let p = self.field.p();
        let mut y = x.clone();
        for _ in 0..n {
            y = self.pow_element(&y, p);
        }
        Ok(y)
    }

    fn pow_element(&self, x: &Vector, mut k: u64) -> Vector {
        let mut acc = self.unit.clone();
        let mut base = x.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_vectors(&acc, &base);
            }
            base = self.mul_vectors(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// The commutator space K(A) = span{ xy - yx }, spanned by the pairwise
    /// basis commutators.
    pub fn commutator_space(&self) -> Subspace {
        let mut gens = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let ij = self.basis_product(i, j);
                let ji = self.basis_product(j, i);
                gens.push(ij.sub(&ji));
            }
        }
        Subspace::from_span(&self.field, self.dim, &gens).expect("commutators are well-formed")
    }

    /// The center Z(A) = { x : xb = bx for every basis vector b }, computed as
    /// the kernel of the stacked commutation constraints.
    pub fn center(&self) -> Subspace {
        // For each basis index j, the map x -> x b_j - b_j x is linear with
        // matrix M_j[k][i] = sc(i,j)[k] - sc(j,i)[k]; the center is the joint
        // kernel of all of them.
        let d = self.dim;
        let mut constraints = Matrix::zeros(&self.field, d * d, d);
        for j in 0..d {
            for i in 0..d {
                for (k, c) in &self.sc[i * d + j] {
                    let r = j * d + *k;
                    *constraints.at_mut(r, i) = constraints.at(r, i) + c;
                }
                for (k, c) in &self.sc[j * d + i] {
                    let r = j * d + *k;
                    *constraints.at_mut(r, i) = constraints.at(r, i) - c;
                }
            }
        }
        constraints.kernel()
    }

    /// Attach a symmetrizing form given by the functional pi: the pairing is
    /// <a, b> = pi(ab). Checks that the induced gram matrix is symmetric
    /// (pi vanishes on commutators), associative, and invertible.
    pub fn form_from_functional(
        &self,
        pi: &LinearFunctional,
    ) -> Result<SymmetrizingForm, AlgebraError> {
        if pi.coords().dim() != self.dim {
            return Err(AlgebraError::FunctionalLength {
                expected: self.dim,
                got: pi.coords().dim(),
            });
        }
        let gram = Matrix::from_fn(&self.field, self.dim, self.dim, |i, j| {
            pi.eval(&self.basis_product(i, j))
        });
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if gram.at(i, j) != gram.at(j, i) {
                    return Err(AlgebraError::NotSymmetricForm { i, j });
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for l in 0..self.dim {
                    // <b_i b_j, b_l> vs <b_i, b_j b_l>
                    let left = pi.eval(&self.mul_vectors(&ij, &self.basis_vector(l)));
                    let right = pi
                        .eval(&self.mul_vectors(&self.basis_vector(i), &self.basis_product(j, l)));
                    if left != right {
                        return Err(AlgebraError::NotAssociativeForm { i, j, l });
                    }
                }
            }
        }
        if !gram.is_invertible() {
            return Err(AlgebraError::DegenerateForm);
        }
        Ok(SymmetrizingForm { pi: pi.clone(), gram })
    }

    /// The full matrix algebra M_m(A) on the basis e_rs (x) b_i, ordered by
    /// (r, s, i) with i fastest.
    pub fn matrix_algebra(&self, m: usize) -> Result<Algebra, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::BadMatrixSize);
        }
        let d = self.dim;
        let idx = |r: usize, s: usize, i: usize| (r * m + s) * d + i;
        let mut entries = Vec::new();
        for r in 0..m {
            for s in 0..m {
                for u in 0..m {
                    // (e_rs (x) b_i)(e_su (x) b_j) = e_ru (x) b_i b_j
                    for i in 0..d {
                        for j in 0..d {
                            for (k, c) in &self.sc[i * d + j] {
                                entries.push((
                                    idx(r, s, i),
                                    idx(s, u, j),
                                    idx(r, u, *k),
                                    c.clone(),
                                ));
                            }
                        }
                    }
                }
            }
        }
        let mut unit = Vector::zero(&self.field, m * m * d);
        for r in 0..m {
            for i in 0..d {
                unit.set(idx(r, r, i), self.unit.get(i).clone());
            }
        }
        Algebra::new(&self.field, m * m * d, &entries, unit)
    }

    /// The direct product A x B with blockwise operations.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::MixedFields {
                left: self.field.spec_string(),
                right: other.field.spec_string(),
            });
        }
        let d1 = self.dim;
        let d = d1 + other.dim;
        let mut entries = Vec::new();
        for i in 0..d1 {
            for j in 0..d1 {
                for (k, c) in &self.sc[i * d1 + j] {
                    entries.push((i, j, *k, c.clone()));
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for (k, c) in &other.sc[i * other.dim + j] {
                    entries.push((d1 + i, d1 + j, d1 + *k, c.clone()));
                }
            }
        }
        let mut unit = Vector::zero(&self.field, d);
        for i in 0..d1 {
            unit.set(i, self.unit.get(i).clone());
        }
        for i in 0..other.dim {
            unit.set(d1 + i, other.unit.get(i).clone());
        }
        Algebra::new(&self.field, d, &entries, unit)
    }

    /// All nonzero structure constants as (i, j, k, c), sorted by (i, j, k).
    pub fn sc_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.sc[i * self.dim + j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }
}

/// A linear functional on an algebra, written in dual coordinates: the i-th
/// coordinate is the value on the i-th basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctional {
    coords: Vector,
}

impl LinearFunctional {
    pub fn new(coords: Vector) -> LinearFunctional {
        LinearFunctional { coords }
    }

    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn eval(&self, x: &Vector) -> Scalar {
        self.coords.dot(x)
    }
}

/// A symmetrizing associative form <a, b> = pi(ab) with invertible gram
/// matrix; built through [`Algebra::form_from_functional`], which performs all
/// the checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizingForm {
    pi: LinearFunctional,
    gram: Matrix,
}

impl SymmetrizingForm {
    pub fn pi(&self) -> &LinearFunctional {
        &self.pi
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// <a, b> = a^T gram b.
    pub fn pairing(&self, a: &Vector, b: &Vector) -> Scalar {
        a.dot(&self.gram.mul_vec(b))
    }
}

// ---------------------------------------------------------------------------
// JSON file format
// ---------------------------------------------------------------------------

/// One scalar in a file: a plain integer for prime fields, or a little-endian
/// coefficient list over GF(p) for extension fields. Integers may be negative;
/// they are reduced mod p.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Coeffs(Vec<i64>),
}

impl ScalarRepr {
    fn to_scalar(&self, field: &Arc<FiniteField>) -> Result<Scalar, GfError> {
        match self {
            ScalarRepr::Int(v) => Ok(field.from_int(*v)),
            ScalarRepr::Coeffs(cs) => field.from_coeffs(cs),
        }
    }

    fn from_scalar(s: &Scalar) -> ScalarRepr {
        if s.field().degree() == 1 {
            ScalarRepr::Int(s.residue() as i64)
        } else {
            ScalarRepr::Coeffs(s.coeffs().iter().map(|&c| c as i64).collect())
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    field: String,
    dim: usize,
    unit: Vec<ScalarRepr>,
    #[serde(default)]
    sc: Vec<(usize, usize, usize, ScalarRepr)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pi: Option<Vec<ScalarRepr>>,
}

/// An algebra read from a file, together with its symmetrizing form when the
/// file supplied one.
#[derive(Debug, Clone)]
pub struct LoadedAlgebra {
    pub algebra: Algebra,
    pub form: Option<SymmetrizingForm>,
}

/// Parse an algebra from its JSON description and validate everything,
/// including the symmetrizing form if a `pi` entry is present.
pub fn load_json(text: &str) -> Result<LoadedAlgebra, AlgebraError> {
    load_json_opts(text, true)
}

/// Like [`load_json`] but ignore any `pi` entry; useful when only the
/// form-free invariants are wanted.
pub fn load_json_without_form(text: &str) -> Result<LoadedAlgebra, AlgebraError> {
    load_json_opts(text, false)
}

fn load_json_opts(text: &str, use_form: bool) -> Result<LoadedAlgebra, AlgebraError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| AlgebraError::Json(e.to_string()))?;
    let field = FiniteField::parse_spec(&file.field)?;
    if file.unit.len() != file.dim {
        return Err(AlgebraError::UnitLength { expected: file.dim, got: file.unit.len() });
    }
    let mut unit = Vector::zero(&field, file.dim);
    for (i, repr) in file.unit.iter().enumerate() {
        let s = repr
            .to_scalar(&field)
            .map_err(|e| AlgebraError::BadScalar(format!("unit[{i}]"), e.to_string()))?;
        unit.set(i, s);
    }
    let mut entries = Vec::with_capacity(file.sc.len());
    for (n, (i, j, k, repr)) in file.sc.iter().enumerate() {
        let s = repr
            .to_scalar(&field)
            .map_err(|e| AlgebraError::BadScalar(format!("sc[{n}]"), e.to_string()))?;
        entries.push((*i, *j, *k, s));
    }
    let algebra = Algebra::new(&field, file.dim, &entries, unit)?;
    let form = match (&file.pi, use_form) {
        (Some(pi_coords), true) => {
            if pi_coords.len() != file.dim {
                return Err(AlgebraError::FunctionalLength {
                    expected: file.dim,
                    got: pi_coords.len(),
                });
            }
            let mut coords = Vector::zero(&field, file.dim);
            for (i, repr) in pi_coords.iter().enumerate() {
                let s = repr
                    .to_scalar(&field)
                    .map_err(|e| AlgebraError::BadScalar(format!("pi[{i}]"), e.to_string()))?;
                coords.set(i, s);
            }
            Some(algebra.form_from_functional(&LinearFunctional::new(coords))?)
        }
        _ => None,
    };
    Ok(LoadedAlgebra { algebra, form })
}

/// Serialize an algebra (and optionally its functional) to the JSON file
/// format. Output is deterministic: entries are sorted by (i, j, k).
pub fn to_json(algebra: &Algebra, pi: Option<&LinearFunctional>) -> String {
    let file = AlgebraFile {
        field: algebra.field().spec_string(),
        dim: algebra.dim(),
        unit: algebra.unit().coords().iter().map(ScalarRepr::from_scalar).collect(),
        sc: algebra
            .sc_entries()
            .iter()
            .map(|(i, j, k, c)| (*i, *j, *k, ScalarRepr::from_scalar(c)))
            .collect(),
        pi: pi.map(|f| f.coords().coords().iter().map(ScalarRepr::from_scalar).collect()),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    s.push('\n');
    s
}

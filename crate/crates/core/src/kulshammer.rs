//! Commutator-power invariants in characteristic p.
//!
//! For an algebra A over GF(p^e) with commutator space K(A), the subsets
//! T_n(A) = { x | x^(p^n) is in K(A) } form an ascending chain of subspaces,
//! because x -> x^p induces an additive, p-semilinear map on A/K(A). This
//! module builds that quotient power map, computes the chain T_n and its
//! codimension sequence (which stabilizes and is a derived-equivalence
//! invariant), and — when the algebra carries a symmetrizing form — the
//! descending chain of center ideals T_n(A)^perp together with Külshammer's
//! maps xi_n and kappa_n and the center spaces P_n(Z(A)) and T_n(Z(A)).
//!
//! Kernels of semilinear maps are computed by expanding every GF(p^e)
//! coordinate into e prime-field coordinates (Frobenius is GF(p)-linear),
//! taking the kernel there, and recognizing the result as a GF(p^e)-subspace;
//! the expected dimension relation e * dim_k = dim_p is re-checked every time.

use crate::algebra::{Algebra, AlgebraError, SymmetrizingForm};
use crate::gf::{FiniteField, Scalar};
use crate::linalg::{LinalgError, Matrix, Subspace, Vector};
use crate::report::Report;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KulshammerError {
    #[error("element is not in the center")]
    NotCentral,
    #[error("this map is only defined for n >= 1")]
    PositiveIndexRequired,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// A structural fact that holds for every valid input failed to hold;
    /// indicates corrupted data or an implementation bug, never user error.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

// ---------------------------------------------------------------------------
// Quotient spaces
// ---------------------------------------------------------------------------

/// The quotient of a coordinate space k^d by a subspace U, with the non-pivot
/// coordinates of U's echelon basis serving as coset representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    modded: Subspace,
    rep_cols: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(modded: Subspace) -> QuotientSpace {
        let rep_cols = modded.complement_columns();
        QuotientSpace { modded, rep_cols }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.modded.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.modded.ambient_dim()
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.rep_cols.len()
    }

    pub fn modded(&self) -> &Subspace {
        &self.modded
    }

    pub fn rep_cols(&self) -> &[usize] {
        &self.rep_cols
    }

    /// Coordinates of the coset v + U in the representative basis.
    pub fn project(&self, v: &Vector) -> Vector {
        let reduced = self.modded.reduce(v);
        let coords = self.rep_cols.iter().map(|&c| reduced.get(c).clone()).collect();
        Vector::new(self.field().clone(), coords)
    }

    /// The canonical ambient representative of a quotient-coordinate vector.
    pub fn lift(&self, q: &Vector) -> Vector {
        assert_eq!(q.dim(), self.dim(), "quotient coordinate length mismatch");
        let mut v = Vector::zero(self.field(), self.ambient_dim());
        for (slot, &c) in self.rep_cols.iter().enumerate() {
            v.set(c, q.get(slot).clone());
        }
        v
    }

    /// The full preimage in the ambient space of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient_dim(), self.dim(), "subspace does not live in this quotient");
        let mut gens: Vec<Vector> = s.basis_vectors().iter().map(|b| self.lift(b)).collect();
        gens.extend(self.modded.basis_vectors());
        Subspace::from_span(self.field(), self.ambient_dim(), &gens)
            .expect("preimage generators are well-formed")
    }
}

// ---------------------------------------------------------------------------
// Semilinear maps
// ---------------------------------------------------------------------------

/// A self-map f of a quotient space with f(c·x) = c^(p^twist) · f(x). The
/// matrix acts on representative coordinates after the twist is applied:
/// f(x) = M · x^[p^twist] (entrywise power). The twist is stored mod e, since
/// p^e-th power is the identity on GF(p^e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilinearMap {
    quotient: QuotientSpace,
    matrix: Matrix,
    twist: usize,
}

impl SemilinearMap {
    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn twist(&self) -> usize {
        self.twist
    }

    pub fn identity(quotient: QuotientSpace) -> SemilinearMap {
        let matrix = Matrix::identity(quotient.field(), quotient.dim());
        SemilinearMap { quotient, matrix, twist: 0 }
    }

    /// Apply to quotient coordinates.
    pub fn apply(&self, q: &Vector) -> Vector {
        self.matrix.mul_vec(&frobenius_vector(q, self.twist))
    }

    /// The composite self-after-other. Twists add; the matrix of the
    /// composite is M_self · M_other^[p^(twist of self)].
    pub fn compose(&self, other: &SemilinearMap) -> SemilinearMap {
        assert_eq!(self.quotient, other.quotient, "cannot compose maps on different quotients");
        let e = self.quotient.field().degree();
        SemilinearMap {
            quotient: self.quotient.clone(),
            matrix: self.matrix.mul(&frobenius_matrix(&other.matrix, self.twist)),
            twist: (self.twist + other.twist) % e,
        }
    }

    /// The n-fold composite of this map with itself (n = 0 is the identity).
    pub fn iterate(&self, n: u32) -> SemilinearMap {
        let mut acc = SemilinearMap::identity(self.quotient.clone());
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Kernel, as a subspace of the quotient coordinate space.
    pub fn kernel(&self) -> Result<Subspace, KulshammerError> {
        semilinear_kernel(&self.matrix, self.twist)
    }

    /// Image, as a subspace of the quotient coordinate space. Because the
    /// twist permutes the coordinate space bijectively, the image is exactly
    /// the column space of the matrix.
    pub fn image(&self) -> Subspace {
        Subspace::from_span_matrix(&self.matrix.transpose())
    }
}

fn frobenius_vector(v: &Vector, twist: usize) -> Vector {
    let coords = (0..v.dim()).map(|i| v.get(i).frobenius(twist as u32)).collect();
    Vector::new(v.field().clone(), coords)
}

fn frobenius_matrix(m: &Matrix, twist: usize) -> Matrix {
    Matrix::from_fn(m.field(), m.rows(), m.cols(), |r, c| m.at(r, c).frobenius(twist as u32))
}

/// Kernel of x -> M · x^[p^twist] over GF(p^e), by prime-field linearization:
/// every coordinate is expanded into e GF(p)-coordinates along the polynomial
/// basis 1, t, ..., t^(e-1), where the map is plainly linear; the GF(p)-kernel
/// is then reassembled into GF(p^e)-vectors. The reassembled span must
/// satisfy e·dim_k(span) = dim_p(kernel) — this scalar-closure identity is
/// what makes the result a genuine GF(p^e)-subspace, and it is re-checked.
pub fn semilinear_kernel(m: &Matrix, twist: usize) -> Result<Subspace, KulshammerError> {
    let field = m.field().clone();
    let e = field.degree();
    let p = field.p();
    let prime = FiniteField::prime(p).expect("characteristic of a valid field is prime");
    let (rows, cols) = (m.rows(), m.cols());

    // Powers of the generator, t^0 .. t^(e-1).
    let t_powers: Vec<Scalar> =
        (0..e).map(|s| if s == 0 { field.one() } else { field.gen_t().pow(s as u64) }).collect();

    // Column (j, s) of the expanded matrix is the expansion of M·(t^s e_j)^[p^twist].
    let mut expanded = Matrix::zeros(&prime, rows * e, cols * e);
    for j in 0..cols {
        for (s, ts) in t_powers.iter().enumerate() {
            let twisted = ts.frobenius(twist as u32);
            for i in 0..rows {
                let entry = m.at(i, j) * &twisted;
                for (r, &digit) in entry.coeffs().iter().enumerate() {
                    *expanded.at_mut(i * e + r, j * e + s) = prime.from_int(digit as i64);
                }
            }
        }
    }

    let prime_kernel = expanded.kernel();
    let mut gens = Vec::with_capacity(prime_kernel.dim());
    for w in prime_kernel.basis_vectors() {
        let coords: Result<Vec<Scalar>, _> = (0..cols)
            .map(|j| {
                let digits: Vec<i64> = (0..e).map(|s| w.get(j * e + s).residue() as i64).collect();
                field.from_coeffs(&digits)
            })
            .collect();
        gens.push(Vector::new(field.clone(), coords.map_err(AlgebraError::from)?));
    }
    let span = Subspace::from_span(&field, cols, &gens)?;
    if span.dim() * e != prime_kernel.dim() {
        return Err(KulshammerError::Internal(format!(
            "semilinear kernel is not scalar-closed: {} * {} != {}",
            span.dim(),
            e,
            prime_kernel.dim()
        )));
    }
    Ok(span)
}

// ---------------------------------------------------------------------------
// The quotient power map and the chain T_n
// ---------------------------------------------------------------------------

/// The map x + K(A) -> x^p + K(A) on A/K(A), as a twist-1 semilinear map.
///
/// Well-definedness (x in K implies x^p in K) is asserted on a basis of K(A)
/// at construction; additivity modulo K(A) is a theorem of Külshammer's and
/// is exercised by the test suite rather than re-proved here.
pub fn power_map_on_quotient(a: &Algebra) -> Result<SemilinearMap, KulshammerError> {
    let commutators = a.commutator_space();
    for u in commutators.basis_vectors() {
        let up = a.p_power(&u, 1)?;
        if !commutators.contains_vector(&up) {
            return Err(KulshammerError::Internal(
                "p-th power map does not preserve the commutator space".into(),
            ));
        }
    }
    let quotient = QuotientSpace::new(commutators);
    let q = quotient.dim();
    let mut matrix = Matrix::zeros(quotient.field(), q, q);
    for (j, &c) in quotient.rep_cols().iter().enumerate() {
        let image = a.p_power(&a.basis_vector(c), 1)?;
        let col = quotient.project(&image);
        for i in 0..q {
            *matrix.at_mut(i, j) = col.get(i).clone();
        }
    }
    let twist = 1 % quotient.field().degree();
    Ok(SemilinearMap { quotient, matrix, twist })
}

/// The subspace T_n(A) = { x | x^(p^n) in K(A) }: for n = 0 this is K(A)
/// itself, for n >= 1 the preimage in A of the kernel of the n-th iterate of
/// the quotient power map. Ascending in n; always contains K(A).
pub fn t_n(a: &Algebra, n: u32) -> Result<Subspace, KulshammerError> {
    if n == 0 {
        return Ok(a.commutator_space());
    }
    let mu = power_map_on_quotient(a)?;
    let kernel = mu.iterate(n).kernel()?;
    Ok(mu.quotient().preimage(&kernel))
}

// ---------------------------------------------------------------------------
// Center ideals for symmetric algebras
// ---------------------------------------------------------------------------

/// The orthogonal space T_n(A)^perp with respect to the symmetrizing form: a
/// descending chain of ideals of the center, starting at Z(A) for n = 0.
/// Both facts — containment in the center and closure under multiplication
/// by the center — are re-checked on every call.
pub fn reynolds_ideal(
    a: &Algebra,
    form: &SymmetrizingForm,
    n: u32,
) -> Result<Subspace, KulshammerError> {
    let tn = t_n(a, n)?;
    let perp = tn.orthogonal(form.gram())?;
    let center = a.center();
    if !center.contains(&perp) {
        return Err(KulshammerError::Internal(
            "orthogonal of T_n is not contained in the center".into(),
        ));
    }
    for z in center.basis_vectors() {
        for r in perp.basis_vectors() {
            let product = a.multiply(&z, &r)?;
            if !perp.contains_vector(&product) {
                return Err(KulshammerError::Internal(
                    "orthogonal of T_n is not an ideal of the center".into(),
                ));
            }
        }
    }
    Ok(perp)
}

/// The element xi_n(z) determined by <xi_n(z), x>^(p^n) = <z, x^(p^n)> for
/// all x; n = 0 gives back z. The right side is linear in x (taking p^n-th
/// roots undoes the semilinearity), so evaluating it on the basis and solving
/// against the gram matrix produces xi_n(z); the defining equation is then
/// re-checked on every basis element. The span of xi_n over a center basis
/// is exactly T_n(A)^perp.
pub fn xi_n(
    a: &Algebra,
    form: &SymmetrizingForm,
    n: u32,
    z: &Vector,
) -> Result<Vector, KulshammerError> {
    if !a.center().contains_vector(z) {
        return Err(KulshammerError::NotCentral);
    }
    if n == 0 {
        return Ok(z.clone());
    }
    let d = a.dim();
    let field = a.field().clone();
    let mut rhs = Vector::zero(&field, d);
    for i in 0..d {
        let power = a.p_power(&a.basis_vector(i), n)?;
        rhs.set(i, form.pairing(z, &power).frobenius_inv(n));
    }
    // <xi, b_i> = (G^T xi)_i and the gram matrix is symmetric.
    let xi = form
        .gram()
        .solve(&rhs)
        .ok_or_else(|| KulshammerError::Internal("gram matrix failed to solve".into()))?;
    for i in 0..d {
        let lhs = form.pairing(&xi, &a.basis_vector(i)).frobenius(n);
        let want = form.pairing(z, &a.p_power(&a.basis_vector(i), n)?);
        if lhs != want {
            return Err(KulshammerError::Internal(
                "xi does not satisfy its defining equation".into(),
            ));
        }
    }
    Ok(xi)
}

/// The map kappa_n : A/K(A) -> A/K(A) determined by
/// <z, kappa_n(x)>^(p^n) = <z^(p^n), x> for all z in Z(A), n >= 1.
///
/// The pairing Z(A) x A/K(A) -> k is perfect (Z(A) is the orthogonal of
/// K(A) and the gram matrix is invertible), so each image is found by one
/// linear solve against the pairing matrix. kappa_n multiplies scalars by
/// their p^n-th root, i.e. it carries twist e - (n mod e) (mod e). The
/// defining equation is re-checked on every (center basis, representative)
/// pair. Its kernel is P_n(Z(A))^perp / K(A) and its image T_n(Z(A))^perp /
/// K(A).
pub fn kappa_map(
    a: &Algebra,
    form: &SymmetrizingForm,
    n: u32,
) -> Result<SemilinearMap, KulshammerError> {
    if n == 0 {
        return Err(KulshammerError::PositiveIndexRequired);
    }
    let field = a.field().clone();
    let e = field.degree();
    let center = a.center();
    let quotient = QuotientSpace::new(a.commutator_space());
    let m = center.dim();
    if m != quotient.dim() {
        return Err(KulshammerError::Internal(
            "center and A/K have different dimensions; the pairing cannot be perfect".into(),
        ));
    }
    let zb = center.basis_vectors();
    let reps: Vec<Vector> = quotient.rep_cols().iter().map(|&c| a.basis_vector(c)).collect();
    let pairing = Matrix::from_fn(&field, m, m, |i, j| form.pairing(&zb[i], &reps[j]));
    let z_powers: Result<Vec<Vector>, _> = zb.iter().map(|z| a.p_power(z, n)).collect();
    let z_powers = z_powers?;

    let mut matrix = Matrix::zeros(&field, m, m);
    for j in 0..m {
        let mut rhs = Vector::zero(&field, m);
        for i in 0..m {
            rhs.set(i, form.pairing(&z_powers[i], &reps[j]).frobenius_inv(n));
        }
        let col = pairing.solve(&rhs).ok_or_else(|| {
            KulshammerError::Internal("center/quotient pairing matrix is singular".into())
        })?;
        for i in 0..m {
            *matrix.at_mut(i, j) = col.get(i).clone();
        }
    }
    let map = SemilinearMap { quotient, matrix, twist: (e - (n as usize % e)) % e };
    for j in 0..m {
        let image = map.quotient.lift(&map.apply(&map.quotient.project(&reps[j])));
        for i in 0..m {
            let lhs = form.pairing(&zb[i], &image).frobenius(n);
            let want = form.pairing(&z_powers[i], &reps[j]);
            if lhs != want {
                return Err(KulshammerError::Internal(
                    "kappa does not satisfy its defining equation".into(),
                ));
            }
        }
    }
    Ok(map)
}

/// kappa_n applied to one element (given by any ambient representative);
/// returns the canonical ambient representative of the image class.
pub fn kappa_n(
    a: &Algebra,
    form: &SymmetrizingForm,
    n: u32,
    x: &Vector,
) -> Result<Vector, KulshammerError> {
    let map = kappa_map(a, form, n)?;
    let q = map.quotient();
    Ok(q.lift(&map.apply(&q.project(x))))
}

// ---------------------------------------------------------------------------
// Center power spaces
// ---------------------------------------------------------------------------

/// P_n(Z(A)) = span of { z^(p^n) | z in Z(A) }. Since the center is
/// commutative, z -> z^(p^n) is additive and semilinear, so the images of a
/// center basis already span. n = 0 returns the center itself.
pub fn p_n_center(a: &Algebra, n: u32) -> Subspace {
    let gens: Vec<Vector> = a
        .center()
        .basis_vectors()
        .iter()
        .map(|z| a.p_power(z, n).expect("center basis vectors are valid elements"))
        .collect();
    Subspace::from_span(a.field(), a.dim(), &gens).expect("powers are well-formed")
}

/// T_n(Z(A)) = { z in Z(A) | z^(p^n) = 0 }: the kernel of the p^n-power map
/// restricted to the center, computed as a semilinear kernel in center
/// coordinates and mapped back into A.
pub fn t_n_center(a: &Algebra, n: u32) -> Result<Subspace, KulshammerError> {
    let center = a.center();
    let zb = center.basis_vectors();
    let field = a.field().clone();
    let m = zb.len();
    let mut powers = Matrix::zeros(&field, a.dim(), m);
    for (j, z) in zb.iter().enumerate() {
        let zp = a.p_power(z, n)?;
        for i in 0..a.dim() {
            *powers.at_mut(i, j) = zp.get(i).clone();
        }
    }
    let coeff_kernel = semilinear_kernel(&powers, n as usize % field.degree())?;
    let gens: Vec<Vector> = coeff_kernel
        .basis_vectors()
        .iter()
        .map(|c| {
            let mut v = Vector::zero(&field, a.dim());
            for (j, z) in zb.iter().enumerate() {
                v = v.add(&z.scale(c.get(j)));
            }
            v
        })
        .collect();
    Ok(Subspace::from_span(&field, a.dim(), &gens)?)
}

// ---------------------------------------------------------------------------
// Codimension sequence
// ---------------------------------------------------------------------------

/// The sequence dim A - dim T_n(A) for n = 0, 1, 2, ... along with the first
/// index where the chain T_n stops growing (when observed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimSequence {
    pub codims: Vec<usize>,
    /// First s with T_s = T_(s+1) (the chain is then constant forever).
    /// None only when an explicit limit cut the computation off first.
    pub stab: Option<usize>,
}

/// Compute the codimension sequence. With `limit = None` the chain is
/// followed until two consecutive terms are equal as subspaces (which must
/// happen at an index <= dim A since the chain ascends); the sequence is
/// reported for n = 0 ..= max(1, s) where s is that stabilization index.
/// With an explicit limit the sequence covers n = 0 ..= limit and the
/// stabilization index is reported only if it is visible in that range.
pub fn codim_sequence(a: &Algebra, limit: Option<u32>) -> Result<CodimSequence, KulshammerError> {
    let d = a.dim();
    let mut spaces = vec![t_n(a, 0)?];
    let mu = power_map_on_quotient(a)?;
    let mut iterate = SemilinearMap::identity(mu.quotient().clone());
    let hard_stop = match limit {
        Some(l) => l as usize,
        None => d + 1,
    };
    let mut stab = None;
    for n in 1..=hard_stop {
        iterate = mu.compose(&iterate);
        let tn = mu.quotient().preimage(&iterate.kernel()?);
        let grew = tn != spaces[n - 1];
        spaces.push(tn);
        if !grew {
            if stab.is_none() {
                stab = Some(n - 1);
            }
            if limit.is_none() {
                break;
            }
        }
    }
    if limit.is_none() && stab.is_none() {
        return Err(KulshammerError::Internal(
            "ascending chain failed to stabilize within the dimension bound".into(),
        ));
    }
    let keep = match limit {
        Some(l) => l as usize + 1,
        None => std::cmp::max(1, stab.unwrap()) + 1,
    };
    spaces.truncate(keep);
    Ok(CodimSequence { codims: spaces.iter().map(|s| d - s.dim()).collect(), stab })
}

// ---------------------------------------------------------------------------
// Verifier
// ---------------------------------------------------------------------------

/// Check the defining identities of the maps above on a symmetric algebra,
/// for 1 <= n <= n_max (plus the n = 0 anchor T_0^perp = Z(A)):
/// the span of xi_n over a center basis equals T_n(A)^perp; the kernel of
/// kappa_n is P_n(Z(A))^perp / K(A); the image of kappa_n is
/// T_n(Z(A))^perp / K(A). Quotient equalities are compared via preimages.
pub fn verify_kulshammer_maps(
    a: &Algebra,
    form: &SymmetrizingForm,
    n_max: u32,
) -> Result<Report, KulshammerError> {
    let mut report = Report::new();
    let center = a.center();
    let r0 = reynolds_ideal(a, form, 0)?;
    report.push("T_0 orthogonal equals the center", r0 == center, format!("dim {}", r0.dim()));
    for n in 1..=n_max {
        let ideal = reynolds_ideal(a, form, n)?;
        let xi_span = {
            let gens: Result<Vec<Vector>, _> =
                center.basis_vectors().iter().map(|z| xi_n(a, form, n, z)).collect();
            Subspace::from_span(a.field(), a.dim(), &gens?)?
        };
        report.push(
            format!("xi_{n} spans the orthogonal of T_{n}"),
            xi_span == ideal,
            format!("dim {} vs {}", xi_span.dim(), ideal.dim()),
        );

        let kappa = kappa_map(a, form, n)?;
        let ker = kappa.quotient().preimage(&kappa.kernel()?);
        let pn_perp = p_n_center(a, n).orthogonal(form.gram())?;
        report.push(
            format!("kernel of kappa_{n} is the orthogonal of P_{n}(Z) mod commutators"),
            ker == pn_perp,
            format!("dim {} vs {}", ker.dim(), pn_perp.dim()),
        );

        let image = kappa.quotient().preimage(&kappa.image());
        let tnz_perp = t_n_center(a, n)?.orthogonal(form.gram())?;
        report.push(
            format!("image of kappa_{n} is the orthogonal of T_{n}(Z) mod commutators"),
            image == tnz_perp,
            format!("dim {} vs {}", image.dim(), tnz_perp.dim()),
        );
    }
    Ok(report)
}

//! The trivial extension A ⋉ A*: the algebra on A ⊕ A* in which the dual
//! acts as a square-zero ideal under the bimodule actions
//! (a·φ)(x) = φ(xa) and (φ·a)(x) = φ(ax), with multiplication
//! (a, φ)(b, ψ) = (ab, aψ + φb).
//!
//! The trivial extension is always a symmetric algebra via π(a, φ) = φ(1);
//! in the canonical basis (all of A first, then the dual basis) the gram
//! matrix is exactly [[0, I], [I, 0]]. This module builds the extension,
//! and provides verifiers for the structural identities that make its
//! invariants computable from the base algebra alone:
//!
//! * Z(A ⋉ A*) = Z(A) ⋉ Ann(K(A))
//! * T_n(A ⋉ A*) = T_n(A) ⋉ A* for n >= 1, and
//!   K(A ⋉ A*) = K(A) ⋉ [A, A*] at n = 0
//! * the four descriptions of the orthogonal chains T_n^perp, T_n(Z)^perp
//!   and P_n(Z)^perp of the extension in terms of annihilators over A
//! * for symmetric A, the correspondence b -> <-, b> identifying the
//!   intrinsic invariants of A with the annihilator descriptions.

use crate::algebra::{Algebra, AlgebraError, LinearFunctional, SymmetrizingForm};
use crate::kulshammer::{p_n_center, reynolds_ideal, t_n, t_n_center, KulshammerError};
use crate::linalg::{LinalgError, Matrix, Subspace, Vector};
use crate::report::Report;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrivextError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Invariants(#[from] KulshammerError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// The doubled algebra, its canonical symmetrizing form, and the block
/// embeddings. Basis order: (b_0, 0) ... (b_{d-1}, 0), (0, b_0*) ... (0, b_{d-1}*).
#[derive(Debug, Clone)]
pub struct TrivialExtension {
    base: Algebra,
    ext: Algebra,
    pi: LinearFunctional,
    form: SymmetrizingForm,
}

impl TrivialExtension {
    pub fn new(base: Algebra) -> Result<TrivialExtension, TrivextError> {
        let field = base.field().clone();
        let d = base.dim();
        let mut entries: Vec<(usize, usize, usize, _)> = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let prod = base.basis_product(i, j);
                for k in 0..d {
                    let c = prod.get(k);
                    if !c.is_zero() {
                        // (b_i, 0)(b_j, 0) = (b_i b_j, 0)
                        entries.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        // (b_i, 0)(0, b_j*) = (0, b_i b_j*) with (b_i b_j*)(b_l) = b_j*(b_l b_i),
        // so the coefficient of b_l* is the b_j-coefficient of b_l b_i.
        // (0, b_j*)(b_i, 0) = (0, b_j* b_i) with (b_j* b_i)(b_l) = b_j*(b_i b_l).
        for i in 0..d {
            for l in 0..d {
                let li = base.basis_product(l, i);
                let il = base.basis_product(i, l);
                for j in 0..d {
                    let left = li.get(j);
                    if !left.is_zero() {
                        entries.push((i, d + j, d + l, left.clone()));
                    }
                    let right = il.get(j);
                    if !right.is_zero() {
                        entries.push((d + j, i, d + l, right.clone()));
                    }
                }
            }
        }
        let mut unit = Vector::zero(&field, 2 * d);
        for i in 0..d {
            unit.set(i, base.unit().get(i).clone());
        }
        let ext = Algebra::new(&field, 2 * d, &entries, unit)?;

        // the dual block must square to zero
        for i in 0..d {
            for j in 0..d {
                if !ext.basis_product(d + i, d + j).is_zero() {
                    return Err(TrivextError::Internal(
                        "dual block of the trivial extension does not square to zero".into(),
                    ));
                }
            }
        }

        // pi(a, phi) = phi(1): pairs each dual coordinate with the unit
        let mut pi_coords = Vector::zero(&field, 2 * d);
        for i in 0..d {
            pi_coords.set(d + i, base.unit().get(i).clone());
        }
        let pi = LinearFunctional::new(pi_coords);
        let form = ext.form_from_functional(&pi)?;

        let expected = Matrix::from_fn(&field, 2 * d, 2 * d, |r, c| {
            if (r < d && c == d + r) || (r >= d && c == r - d) {
                field.one()
            } else {
                field.zero()
            }
        });
        if *form.gram() != expected {
            return Err(TrivextError::Internal(
                "gram matrix of the trivial extension is not the swap form".into(),
            ));
        }
        Ok(TrivialExtension { base, ext, pi, form })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    /// The doubled algebra itself.
    pub fn algebra(&self) -> &Algebra {
        &self.ext
    }

    pub fn pi(&self) -> &LinearFunctional {
        &self.pi
    }

    pub fn form(&self) -> &SymmetrizingForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.ext.dim()
    }

    /// The element (a, phi).
    pub fn pair(&self, a: &Vector, phi: &Vector) -> Vector {
        let d = self.base.dim();
        assert_eq!(a.dim(), d, "first component has wrong length");
        assert_eq!(phi.dim(), d, "second component has wrong length");
        let mut v = Vector::zero(self.base.field(), 2 * d);
        for i in 0..d {
            v.set(i, a.get(i).clone());
            v.set(d + i, phi.get(i).clone());
        }
        v
    }

    /// The subspace X ⋉ Y for X inside A and Y inside A* (dual coordinates).
    pub fn embed_pair(&self, first: &Subspace, second: &Subspace) -> Subspace {
        let d = self.base.dim();
        assert_eq!(first.ambient_dim(), d, "first block has wrong ambient dimension");
        assert_eq!(second.ambient_dim(), d, "second block has wrong ambient dimension");
        let zero = Vector::zero(self.base.field(), d);
        let mut gens: Vec<Vector> =
            first.basis_vectors().iter().map(|x| self.pair(x, &zero)).collect();
        gens.extend(second.basis_vectors().iter().map(|y| self.pair(&zero, y)));
        Subspace::from_span(self.base.field(), 2 * d, &gens)
            .expect("block generators are well-formed")
    }

    /// Serialize the extension (with its form) in the algebra file format.
    pub fn to_json(&self) -> String {
        crate::algebra::to_json(&self.ext, Some(&self.pi))
    }
}

/// The subspace [A, A*] of the dual spanned by all b_i·b_j* − b_j*·b_i.
/// It annihilates the center of A; for symmetric A it equals that
/// annihilator exactly.
pub fn dual_commutator(a: &Algebra) -> Subspace {
    let d = a.dim();
    let field = a.field();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            // (b_i b_j* - b_j* b_i)(b_l) = b_j*(b_l b_i) - b_j*(b_i b_l)
            let mut v = Vector::zero(field, d);
            for l in 0..d {
                let c = a.basis_product(l, i).get(j) - a.basis_product(i, l).get(j);
                v.set(l, c);
            }
            gens.push(v);
        }
    }
    Subspace::from_span(field, d, &gens).expect("dual commutators are well-formed")
}

/// Check that the center of the trivial extension is Z(A) ⋉ Ann(K(A)),
/// comparing a direct center computation on the doubled algebra against the
/// assembled block subspace.
pub fn verify_center(a: &Algebra) -> Result<Report, TrivextError> {
    let tv = TrivialExtension::new(a.clone())?;
    let lhs = tv.algebra().center();
    let rhs = tv.embed_pair(&a.center(), &a.commutator_space().annihilator());
    let mut report = Report::new();
    report.push(
        "center of the trivial extension is Z(A) x Ann(K(A))",
        lhs == rhs,
        format!("dim {} vs {}", lhs.dim(), rhs.dim()),
    );
    Ok(report)
}

/// Check the block structure of the chain T_n on the trivial extension:
/// the commutator space (n = 0) is K(A) ⋉ [A, A*], and T_n for n >= 1 is
/// T_n(A) ⋉ A*.
pub fn verify_tn_structure(a: &Algebra, n_max: u32) -> Result<Report, TrivextError> {
    let tv = TrivialExtension::new(a.clone())?;
    let ext = tv.algebra();
    let d = a.dim();
    let mut report = Report::new();

    let lhs0 = t_n(ext, 0)?;
    let rhs0 = tv.embed_pair(&a.commutator_space(), &dual_commutator(a));
    report.push(
        "commutator space of the trivial extension is K(A) x [A, A*]",
        lhs0 == rhs0,
        format!("dim {} vs {}", lhs0.dim(), rhs0.dim()),
    );

    let full_dual = Subspace::full(a.field(), d);
    for n in 1..=n_max {
        let lhs = t_n(ext, n)?;
        let rhs = tv.embed_pair(&t_n(a, n)?, &full_dual);
        report.push(
            format!("T_{n} of the trivial extension is T_{n}(A) x A*"),
            lhs == rhs,
            format!("dim {} vs {}", lhs.dim(), rhs.dim()),
        );
    }
    Ok(report)
}

/// Check the four descriptions of the orthogonal chains of the trivial
/// extension in terms of the base algebra:
///
/// 1. the orthogonal of T_0 is the center, which splits as Z(A) ⋉ Ann(K(A));
/// 2. the orthogonal of T_n (n >= 1) is 0 ⋉ Ann(T_n(A));
/// 3. the orthogonal of T_n(Z), taken modulo commutators, is
///    0 ⋉ (Ann(T_n(Z(A))) / [A, A*]);
/// 4. the orthogonal of P_n(Z), taken modulo commutators, is
///    A/K(A) ⋉ (Ann(P_n(Z(A))) / [A, A*]).
///
/// The quotient statements (3) and (4) are compared as equalities of their
/// full preimages in the doubled algebra, which is equivalent and keeps
/// every comparison inside the canonical subspace machinery.
pub fn verify_orthogonal_chains(a: &Algebra, n_max: u32) -> Result<Report, TrivextError> {
    let tv = TrivialExtension::new(a.clone())?;
    let ext = tv.algebra();
    let gram = tv.form().gram();
    let d = a.dim();
    let mut report = Report::new();

    let center_ext = ext.center();
    let t0_perp = t_n(ext, 0)?.orthogonal(gram)?;
    report.push(
        "orthogonal of T_0 equals the center of the trivial extension",
        t0_perp == center_ext,
        format!("dim {} vs {}", t0_perp.dim(), center_ext.dim()),
    );
    let center_split = tv.embed_pair(&a.center(), &a.commutator_space().annihilator());
    report.push(
        "center of the trivial extension is Z(A) x Ann(K(A))",
        center_ext == center_split,
        format!("dim {} vs {}", center_ext.dim(), center_split.dim()),
    );

    let zero_block = Subspace::zero(a.field(), d);
    let full_block = Subspace::full(a.field(), d);
    let k_ext = ext.commutator_space();
    let brackets = dual_commutator(a);
    for n in 1..=n_max {
        let lhs2 = reynolds_ideal(ext, tv.form(), n)?;
        let rhs2 = tv.embed_pair(&zero_block, &t_n(a, n)?.annihilator());
        report.push(
            format!("orthogonal of T_{n} is 0 x Ann(T_{n}(A))"),
            lhs2 == rhs2,
            format!("dim {} vs {}", lhs2.dim(), rhs2.dim()),
        );

        let lhs3 = t_n_center(ext, n)?.orthogonal(gram)?.sum(&k_ext)?;
        let rhs3 =
            tv.embed_pair(&a.commutator_space(), &t_n_center(a, n)?.annihilator().sum(&brackets)?);
        report.push(
            format!("orthogonal of T_{n}(Z) mod commutators is 0 x (Ann(T_{n}(Z(A))) mod [A, A*])"),
            lhs3 == rhs3,
            format!("preimage dim {} vs {}", lhs3.dim(), rhs3.dim()),
        );

        let lhs4 = p_n_center(ext, n).orthogonal(gram)?.sum(&k_ext)?;
        let rhs4 = tv.embed_pair(&full_block, &p_n_center(a, n).annihilator().sum(&brackets)?);
        report.push(
            format!(
                "orthogonal of P_{n}(Z) mod commutators is A/K x (Ann(P_{n}(Z(A))) mod [A, A*])"
            ),
            lhs4 == rhs4,
            format!("preimage dim {} vs {}", lhs4.dim(), rhs4.dim()),
        );
    }
    Ok(report)
}

/// The map b -> <-, b> from a symmetric algebra into its dual, as a matrix in
/// dual coordinates (column j is the functional <-, b_j>, which is exactly
/// column j of the gram matrix). The bimodule identities
/// lambda(ab) = a·lambda(b) and lambda(ba) = lambda(b)·a are re-checked on
/// every basis pair; they follow from the associativity of the form.
pub fn lambda_map(a: &Algebra, form: &SymmetrizingForm) -> Result<Matrix, TrivextError> {
    let d = a.dim();
    let gram = form.gram().clone();
    for i in 0..d {
        for j in 0..d {
            let lam_ij = gram.mul_vec(&a.basis_product(i, j));
            // a_i . lambda(b_j): value on b_l is lambda(b_j)(b_l b_i)
            let left_action = Vector::new(
                a.field().clone(),
                (0..d).map(|l| gram.col(j).dot(&a.basis_product(l, i))).collect(),
            );
            let lam_ji = gram.mul_vec(&a.basis_product(j, i));
            // lambda(b_j) . a_i: value on b_l is lambda(b_j)(b_i b_l)
            let right_action = Vector::new(
                a.field().clone(),
                (0..d).map(|l| gram.col(j).dot(&a.basis_product(i, l))).collect(),
            );
            if lam_ij != left_action || lam_ji != right_action {
                return Err(TrivextError::Internal(
                    "form-induced map into the dual is not a bimodule map".into(),
                ));
            }
        }
    }
    Ok(gram)
}

/// Image of a subspace under the form-induced map into the dual.
fn lambda_image(lambda: &Matrix, s: &Subspace) -> Subspace {
    let gens: Vec<Vector> = s.basis_vectors().iter().map(|v| lambda.mul_vec(v)).collect();
    Subspace::from_span(s.field(), s.ambient_dim(), &gens).expect("images are well-formed")
}

/// For a symmetric algebra, check that the form-induced map into the dual
/// identifies the intrinsic invariants with their annihilator counterparts:
/// K(A) with [A, A*] (which also equals Ann(Z(A))), T_n(A)^perp with
/// Ann(T_n(A)), and T_n(Z(A))^perp with Ann(T_n(Z(A))).
pub fn verify_lambda_correspondence(
    a: &Algebra,
    form: &SymmetrizingForm,
    n_max: u32,
) -> Result<Report, TrivextError> {
    let mut report = Report::new();
    let lambda = lambda_map(a, form)?;
    report.push("form-induced map into the dual is a bimodule map", true, "");

    let k_image = lambda_image(&lambda, &a.commutator_space());
    let brackets = dual_commutator(a);
    report.push(
        "lambda maps K(A) onto [A, A*]",
        k_image == brackets,
        format!("dim {} vs {}", k_image.dim(), brackets.dim()),
    );
    let ann_center = a.center().annihilator();
    report.push(
        "[A, A*] equals Ann(Z(A))",
        brackets == ann_center,
        format!("dim {} vs {}", brackets.dim(), ann_center.dim()),
    );

    for n in 0..=n_max {
        let perp_image = lambda_image(&lambda, &reynolds_ideal(a, form, n)?);
        let ann = t_n(a, n)?.annihilator();
        report.push(
            format!("lambda maps the orthogonal of T_{n} onto Ann(T_{n}(A))"),
            perp_image == ann,
            format!("dim {} vs {}", perp_image.dim(), ann.dim()),
        );
    }
    for n in 1..=n_max {
        let tnz = t_n_center(a, n)?;
        let perp_image = lambda_image(&lambda, &tnz.orthogonal(form.gram())?);
        let ann = tnz.annihilator();
        report.push(
            format!("lambda maps the orthogonal of T_{n}(Z) onto Ann(T_{n}(Z(A)))"),
            perp_image == ann,
            format!("dim {} vs {}", perp_image.dim(), ann.dim()),
        );
    }
    Ok(report)
}

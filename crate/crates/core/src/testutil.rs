//! Small example algebras shared by the unit tests.

use crate::algebra::{Algebra, LinearFunctional, SymmetrizingForm};
use crate::gf::FiniteField;
use crate::linalg::Vector;
use std::sync::Arc;

pub fn prime_field(p: u64) -> Arc<FiniteField> {
    FiniteField::prime(p).unwrap()
}

pub fn gf4() -> Arc<FiniteField> {
    FiniteField::extension(2, 2, &[1, 1, 1]).unwrap()
}

/// k[x]/(x^2) on the basis {1, x}.
pub fn dual_numbers(f: &Arc<FiniteField>) -> Algebra {
    let entries = vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())];
    Algebra::new(f, 2, &entries, Vector::unit(f, 2, 0)).unwrap()
}

/// Symmetrizing form on the dual numbers: value = coefficient of x.
pub fn dual_numbers_form(a: &Algebra) -> SymmetrizingForm {
    let pi = LinearFunctional::new(Vector::unit(a.field(), 2, 1));
    a.form_from_functional(&pi).unwrap()
}

/// The cyclic group algebra k C_n on the basis {1, g, ..., g^(n-1)}.
pub fn group_algebra(f: &Arc<FiniteField>, n: usize) -> Algebra {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            entries.push((i, j, (i + j) % n, f.one()));
        }
    }
    Algebra::new(f, n, &entries, Vector::unit(f, n, 0)).unwrap()
}

/// Symmetrizing form on a group algebra: value = coefficient of the identity.
pub fn group_algebra_form(a: &Algebra) -> SymmetrizingForm {
    let pi = LinearFunctional::new(Vector::unit(a.field(), a.dim(), 0));
    a.form_from_functional(&pi).unwrap()
}

/// Full 2x2 matrices on the basis {e11, e12, e21, e22}.
pub fn m2(f: &Arc<FiniteField>) -> Algebra {
    let entries = vec![
        (0, 0, 0, f.one()),
        (0, 1, 1, f.one()),
        (1, 2, 0, f.one()),
        (1, 3, 1, f.one()),
        (2, 0, 2, f.one()),
        (2, 1, 3, f.one()),
        (3, 2, 2, f.one()),
        (3, 3, 3, f.one()),
    ];
    let mut unit = Vector::zero(f, 4);
    unit.set(0, f.one());
    unit.set(3, f.one());
    Algebra::new(f, 4, &entries, unit).unwrap()
}

/// Trace form on the 2x2 matrix algebra.
pub fn m2_trace_form(a: &Algebra) -> SymmetrizingForm {
    let f = a.field();
    let mut coords = Vector::zero(f, 4);
    coords.set(0, f.one());
    coords.set(3, f.one());
    let pi = LinearFunctional::new(coords);
    a.form_from_functional(&pi).unwrap()
}

/// Upper triangular 2x2 matrices on the basis {e11, e22, e12}.
pub fn upper_triangular2(f: &Arc<FiniteField>) -> Algebra {
    let entries =
        vec![(0, 0, 0, f.one()), (1, 1, 1, f.one()), (0, 2, 2, f.one()), (2, 1, 2, f.one())];
    let mut unit = Vector::zero(f, 3);
    unit.set(0, f.one());
    unit.set(1, f.one());
    Algebra::new(f, 3, &entries, unit).unwrap()
}

/// k x k: two orthogonal idempotents.
pub fn product_of_fields(f: &Arc<FiniteField>) -> Algebra {
    let entries = vec![(0, 0, 0, f.one()), (1, 1, 1, f.one())];
    let mut unit = Vector::zero(f, 2);
    unit.set(0, f.one());
    unit.set(1, f.one());
    Algebra::new(f, 2, &entries, unit).unwrap()
}

/// Symmetrizing form on k x k: sum of the two coordinates.
pub fn product_of_fields_form(a: &Algebra) -> SymmetrizingForm {
    let f = a.field();
    let mut coords = Vector::zero(f, 2);
    coords.set(0, f.one());
    coords.set(1, f.one());
    let pi = LinearFunctional::new(coords);
    a.form_from_functional(&pi).unwrap()
}

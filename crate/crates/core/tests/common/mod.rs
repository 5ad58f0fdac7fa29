//! Shared corpus and random generators for the integration suites.
//!
//! Everything here is rebuilt from scratch rather than borrowed from the
//! library's internals, so the expected values in the suites stay
//! independent of the code under test.

#![allow(dead_code)]

pub mod props;

use kulshammer::algebra::{Algebra, LinearFunctional, SymmetrizingForm};
use kulshammer::gf::{FiniteField, Scalar};
use kulshammer::linalg::{Matrix, Subspace, Vector};
use kulshammer::quiver::{build_algebra, parse_quiver};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Deterministic RNG; override the seed with KULSHAMMER_TEST_SEED.
pub fn seeded_rng() -> ChaCha8Rng {
    let seed =
        std::env::var("KULSHAMMER_TEST_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0xC0FFEE);
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(p: u64) -> Arc<FiniteField> {
    FiniteField::prime(p).expect("prime field")
}

pub fn gf4() -> Arc<FiniteField> {
    FiniteField::extension(2, 2, &[1, 1, 1]).expect("GF(4)")
}

/// Smallest-modulus field of order p^e, found by scanning monic polynomials.
pub fn find_field(p: u64, e: usize) -> Arc<FiniteField> {
    if e == 1 {
        return field(p);
    }
    let mut low = vec![0u64; e];
    loop {
        let mut coeffs = low.clone();
        coeffs.push(1);
        if let Ok(f) = FiniteField::extension(p, e, &coeffs) {
            return f;
        }
        for digit in low.iter_mut() {
            *digit += 1;
            if *digit < p {
                break;
            }
            *digit = 0;
        }
        assert!(
            low.iter().any(|&d| d != 0),
            "no irreducible monic polynomial of degree {e} over GF({p})"
        );
    }
}

pub fn vec_of(f: &Arc<FiniteField>, coords: &[i64]) -> Vector {
    Vector::new(f.clone(), coords.iter().map(|&c| f.from_int(c)).collect())
}

pub fn algebra_from(
    f: &Arc<FiniteField>,
    dim: usize,
    entries: &[(usize, usize, usize, i64)],
    unit: &[i64],
) -> Algebra {
    let sc: Vec<(usize, usize, usize, Scalar)> =
        entries.iter().map(|&(i, j, k, c)| (i, j, k, f.from_int(c))).collect();
    Algebra::new(f, dim, &sc, vec_of(f, unit)).expect("corpus algebra is valid")
}

pub fn functional(a: &Algebra, coords: &[i64]) -> SymmetrizingForm {
    a.form_from_functional(&LinearFunctional::new(vec_of(a.field(), coords)))
        .expect("corpus form is symmetrizing")
}

// ---------------------------------------------------------------------------
// named algebras

/// k[x]/(x^2), basis {1, x}.
pub fn dual_numbers(f: &Arc<FiniteField>) -> Algebra {
    algebra_from(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[1, 0])
}

/// k x k with the two orthogonal idempotents as basis.
pub fn product_of_fields(f: &Arc<FiniteField>) -> Algebra {
    algebra_from(f, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)], &[1, 1])
}

/// Full 2x2 matrices, basis {e11, e12, e21, e22}.
pub fn m2(f: &Arc<FiniteField>) -> Algebra {
    algebra_from(
        f,
        4,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 2, 0, 1),
            (1, 3, 1, 1),
            (2, 0, 2, 1),
            (2, 1, 3, 1),
            (3, 2, 2, 1),
            (3, 3, 3, 1),
        ],
        &[1, 0, 0, 1],
    )
}

/// Upper-triangular n x n matrices, basis e_{ij} (i <= j) in lexicographic
/// order.
pub fn upper_triangular(f: &Arc<FiniteField>, n: usize) -> Algebra {
    let mut index = std::collections::HashMap::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i..n {
            index.insert((i, j), basis.len());
            basis.push((i, j));
        }
    }
    let mut entries = Vec::new();
    for (a, &(i, j)) in basis.iter().enumerate() {
        for (b, &(k, l)) in basis.iter().enumerate() {
            if j == k {
                entries.push((a, b, index[&(i, l)], 1));
            }
        }
    }
    let mut unit = vec![0; basis.len()];
    for i in 0..n {
        unit[index[&(i, i)]] = 1;
    }
    algebra_from(f, basis.len(), &entries, &unit)
}

/// Group algebra of the cyclic group of order n, basis {1, g, ..., g^{n-1}}.
pub fn group_algebra(f: &Arc<FiniteField>, n: usize) -> Algebra {
    let entries: Vec<(usize, usize, usize, i64)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n, 1))).collect();
    let mut unit = vec![0; n];
    unit[0] = 1;
    algebra_from(f, n, &entries, &unit)
}

pub fn quiver_algebra(text: &str) -> Algebra {
    build_algebra(&parse_quiver(text).expect("corpus quiver parses"))
}

/// One vertex, one loop, paths of length >= 2 vanish: the dual numbers.
pub const QUIVER_DUAL: &str = "vertices: v\narrows: x: v -> v\nrelations:\ncap: 2\nfield: p=2\n";

/// Two vertices joined by one arrow: the path algebra of A2.
pub const QUIVER_A2: &str = "vertices: 1 2\narrows: a: 1 -> 2\nrelations:\ncap: 2\nfield: p=2\n";

/// One loop with cube zero over GF(3): k[x]/(x^3), basis {1, x, x^2}.
pub const QUIVER_LOOP3: &str = "vertices: v\narrows: x: v -> v\nrelations:\ncap: 3\nfield: p=3\n";

pub struct CorpusItem {
    pub name: &'static str,
    pub algebra: Algebra,
    pub form: Option<SymmetrizingForm>,
}

/// The reference corpus: small algebras over GF(2), GF(3), and GF(4) with
/// hand-checkable invariants. Symmetric members carry their forms.
pub fn corpus() -> Vec<CorpusItem> {
    let f2 = field(2);
    let f3 = field(3);
    let f4 = gf4();
    let with_form = |name, algebra: Algebra, coords: &[i64]| {
        let form = functional(&algebra, coords);
        CorpusItem { name, algebra, form: Some(form) }
    };
    let bare = |name, algebra| CorpusItem { name, algebra, form: None };
    vec![
        with_form("dual_numbers_gf2", dual_numbers(&f2), &[0, 1]),
        with_form("dual_numbers_gf3", dual_numbers(&f3), &[0, 1]),
        with_form("two_fields_gf2", product_of_fields(&f2), &[1, 1]),
        with_form("two_fields_gf3", product_of_fields(&f3), &[1, 1]),
        with_form("matrices2_gf2", m2(&f2), &[1, 0, 0, 1]),
        with_form("matrices2_gf3", m2(&f3), &[1, 0, 0, 1]),
        bare("triangular2_gf2", upper_triangular(&f2, 2)),
        bare("triangular3_gf2", upper_triangular(&f2, 3)),
        with_form("cyclic2_gf2", group_algebra(&f2, 2), &[1, 0]),
        with_form("cyclic4_gf2", group_algebra(&f2, 4), &[1, 0, 0, 0]),
        bare("quiver_a2", quiver_algebra(QUIVER_A2)),
        with_form("quiver_loop_cubed", quiver_algebra(QUIVER_LOOP3), &[0, 0, 1]),
        with_form("dual_numbers_gf4", dual_numbers(&f4), &[0, 1]),
    ]
}

// ---------------------------------------------------------------------------
// random generators

pub fn random_scalar(rng: &mut ChaCha8Rng, f: &Arc<FiniteField>) -> Scalar {
    let coeffs: Vec<i64> = (0..f.degree()).map(|_| rng.random_range(0..f.p() as i64)).collect();
    f.from_coeffs(&coeffs).expect("coefficients in range")
}

pub fn random_vector(rng: &mut ChaCha8Rng, f: &Arc<FiniteField>, dim: usize) -> Vector {
    Vector::new(f.clone(), (0..dim).map(|_| random_scalar(rng, f)).collect())
}

pub fn random_field(rng: &mut ChaCha8Rng) -> Arc<FiniteField> {
    match rng.random_range(0..4) {
        0 => field(2),
        1 => field(3),
        2 => field(5),
        _ => gf4(),
    }
}

pub fn random_subspace(rng: &mut ChaCha8Rng, f: &Arc<FiniteField>, ambient: usize) -> Subspace {
    let count = rng.random_range(0..=ambient + 1);
    let gens: Vec<Vector> = (0..count).map(|_| random_vector(rng, f, ambient)).collect();
    Subspace::from_span(f, ambient, &gens).expect("spans are well-formed")
}

/// Invertible by construction: a product of elementary row operations
/// applied to the identity.
pub fn random_invertible(rng: &mut ChaCha8Rng, f: &Arc<FiniteField>, n: usize) -> Matrix {
    let mut m = Matrix::identity(f, n);
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        if i == j {
            j = (j + 1) % n;
        }
        let c = random_scalar(rng, f);
        for col in 0..n {
            let add = &c * m.at(i, col);
            *m.at_mut(j, col) = m.at(j, col) + &add;
        }
    }
    m
}

/// A random symmetric invertible gram matrix (the transpose-product of a
/// random invertible matrix).
pub fn random_gram(rng: &mut ChaCha8Rng, f: &Arc<FiniteField>, n: usize) -> Matrix {
    let m = random_invertible(rng, f, n);
    m.transpose().mul(&m)
}

/// A random valid algebra with a symmetrizing form: a direct product of
/// symmetric building blocks, sometimes blown up to a 2x2 matrix algebra.
pub fn random_symmetric_algebra(rng: &mut ChaCha8Rng) -> (Algebra, SymmetrizingForm) {
    let f = random_field(rng);
    let block = |rng: &mut ChaCha8Rng, f: &Arc<FiniteField>| -> (Algebra, Vec<i64>) {
        match rng.random_range(0..5) {
            0 => (dual_numbers(f), vec![0, 1]),
            1 => (product_of_fields(f), vec![1, 1]),
            2 => (group_algebra(f, 2), vec![1, 0]),
            3 => (m2(f), vec![1, 0, 0, 1]),
            _ => (group_algebra(f, 3), vec![1, 0, 0]),
        }
    };
    let (mut algebra, mut coords) = block(rng, &f);
    if rng.random_range(0..2) == 0 {
        let (other, other_coords) = block(rng, &f);
        algebra = algebra.direct_product(&other).expect("same field");
        coords.extend(other_coords);
    }
    if algebra.dim() <= 2 && rng.random_range(0..2) == 0 {
        // trace-style form on the blown-up algebra: pi'(e_rs (x) b) is
        // pi(b) on the diagonal blocks and zero elsewhere
        let d = algebra.dim();
        algebra = algebra.matrix_algebra(2).expect("blow-up is valid");
        let mut blown = vec![0i64; 4 * d];
        for r in 0..2 {
            for (i, &c) in coords.iter().enumerate() {
                blown[(r * 2 + r) * d + i] = c;
            }
        }
        coords = blown;
    }
    let form = functional(&algebra, &coords);
    (algebra, form)
}

/// A random valid algebra, with a form roughly half the time.
pub fn random_algebra(rng: &mut ChaCha8Rng) -> (Algebra, Option<SymmetrizingForm>) {
    if rng.random_range(0..2) == 0 {
        let (algebra, form) = random_symmetric_algebra(rng);
        (algebra, Some(form))
    } else {
        let f = random_field(rng);
        let algebra = match rng.random_range(0..3) {
            0 => upper_triangular(&f, 2),
            1 => upper_triangular(&f, 3),
            _ => upper_triangular(&f, 2).direct_product(&dual_numbers(&f)).expect("same field"),
        };
        (algebra, None)
    }
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// The same algebra expressed in the basis b'_i = b_{perm[i]}.
pub fn permute_algebra(a: &Algebra, perm: &[usize]) -> Algebra {
    let d = a.dim();
    let mut inv = vec![0; d];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let entries: Vec<(usize, usize, usize, Scalar)> =
        a.sc_entries().into_iter().map(|(u, v, m, c)| (inv[u], inv[v], inv[m], c)).collect();
    let unit =
        Vector::new(a.field().clone(), (0..d).map(|k| a.unit().get(perm[k]).clone()).collect());
    Algebra::new(a.field(), d, &entries, unit).expect("permuted algebra is valid")
}

/// Functional coordinates transported along the same permutation.
pub fn permute_coords(v: &Vector, perm: &[usize]) -> Vector {
    Vector::new(v.field().clone(), (0..v.dim()).map(|k| v.get(perm[k]).clone()).collect())
}

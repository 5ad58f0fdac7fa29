//! Randomized law checks shared by the property and acceptance suites.
//! Each runner panics with context on the first violation and returns the
//! number of cases it exercised.

use super::*;
use kulshammer::algebra::LinearFunctional;
use kulshammer::fingerprint::{compute_fingerprint, Fingerprint};

/// dim(U + V) + dim(U ∩ V) = dim U + dim V, and the lattice containments
/// that come with it.
pub fn law_dimension_formula(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    for case in 0..cases {
        let f = random_field(rng);
        let ambient = rng.random_range(1..=6);
        let u = random_subspace(rng, &f, ambient);
        let v = random_subspace(rng, &f, ambient);
        let sum = u.sum(&v).expect("same ambient");
        let meet = u.intersect(&v).expect("same ambient");
        assert_eq!(
            sum.dim() + meet.dim(),
            u.dim() + v.dim(),
            "dimension law failed in case {case} over {}",
            f.spec_string()
        );
        assert!(sum.contains(&u) && sum.contains(&v), "sum misses a summand in case {case}");
        assert!(u.contains(&meet) && v.contains(&meet), "meet escapes in case {case}");
    }
    cases
}

/// (U^⊥)^⊥ = U for a nondegenerate symmetric form.
pub fn law_double_orthogonal(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    for case in 0..cases {
        let f = random_field(rng);
        let ambient = rng.random_range(1..=5);
        let gram = random_gram(rng, &f, ambient);
        let u = random_subspace(rng, &f, ambient);
        let back = u.orthogonal(&gram).expect("gram shape").orthogonal(&gram).expect("gram shape");
        assert_eq!(back, u, "double orthogonal failed in case {case} over {}", f.spec_string());
    }
    cases
}

/// Ann(Ann(U)) = U under the coordinate pairing with the dual.
pub fn law_double_annihilator(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    for case in 0..cases {
        let f = random_field(rng);
        let ambient = rng.random_range(1..=6);
        let u = random_subspace(rng, &f, ambient);
        assert_eq!(
            u.annihilator().annihilator(),
            u,
            "double annihilator failed in case {case} over {}",
            f.spec_string()
        );
    }
    cases
}

/// The p-power map is an additive, multiplicative field automorphism with
/// the expected order and inverse — exhaustively, for every field of order
/// at most 64.
pub fn law_frobenius_exhaustive() -> usize {
    const PRIMES: [u64; 18] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];
    let mut cases = 0;
    for p in PRIMES {
        let mut e = 1;
        while p.pow(e as u32) <= 64 {
            let f = find_field(p, e);
            let elements: Vec<_> = f.elements().collect();
            for x in &elements {
                assert_eq!(
                    x.frobenius(e as u32),
                    x.clone(),
                    "order of Frobenius over {}",
                    f.spec_string()
                );
                assert_eq!(
                    x.frobenius(1).frobenius_inv(1),
                    x.clone(),
                    "Frobenius inverse over {}",
                    f.spec_string()
                );
                assert_eq!(x.pow(p), x.frobenius(1), "p-th power over {}", f.spec_string());
                cases += 1;
            }
            for x in &elements {
                for y in &elements {
                    assert_eq!(
                        (x + y).frobenius(1),
                        &x.frobenius(1) + &y.frobenius(1),
                        "additivity over {}",
                        f.spec_string()
                    );
                    assert_eq!(
                        (x * y).frobenius(1),
                        &x.frobenius(1) * &y.frobenius(1),
                        "multiplicativity over {}",
                        f.spec_string()
                    );
                    cases += 1;
                }
            }
            e += 1;
        }
    }
    cases
}

/// Fingerprints survive a serialization round trip and serialize to the
/// same bytes every time.
pub fn law_fingerprint_roundtrip(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    for case in 0..cases {
        let (algebra, form) = random_algebra(rng);
        let fp = compute_fingerprint(&algebra, form.as_ref()).expect("fingerprint computes");
        let json = fp.to_canonical_json();
        let back = Fingerprint::from_json(&json).expect("canonical output re-reads");
        assert_eq!(back, fp, "round trip failed in case {case}");
        assert_eq!(json, back.to_canonical_json(), "serialization drifted in case {case}");
    }
    cases
}

/// Re-labelling the basis of an algebra (and transporting its form along)
/// leaves the fingerprint byte-identical.
pub fn law_fingerprint_permutation(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    for case in 0..cases {
        let (algebra, form) = random_algebra(rng);
        let perm = random_permutation(rng, algebra.dim());
        let permuted = permute_algebra(&algebra, &perm);
        let permuted_form = form.as_ref().map(|f| {
            permuted
                .form_from_functional(&LinearFunctional::new(permute_coords(
                    f.pi().coords(),
                    &perm,
                )))
                .expect("transported form is symmetrizing")
        });
        let fp = compute_fingerprint(&algebra, form.as_ref()).expect("fingerprint computes");
        let fp_perm =
            compute_fingerprint(&permuted, permuted_form.as_ref()).expect("fingerprint computes");
        assert_eq!(
            fp.to_canonical_json(),
            fp_perm.to_canonical_json(),
            "permutation changed the fingerprint in case {case} (perm {perm:?})"
        );
    }
    cases
}

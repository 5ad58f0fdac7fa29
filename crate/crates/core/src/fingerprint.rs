//! Derived-equivalence fingerprints: a serializable record of the numerical
//! invariants of an algebra that are preserved by derived equivalences.
//!
//! The record collects the field, the center dimension, the dimension of
//! A/K(A), and the codimension chain dim A − dim T_n(A) together with its
//! stabilization index; for symmetric inputs it additionally records the
//! dimension chains of the generalized Reynolds ideals T_n(A)^⊥ and of the
//! orthogonals of the center power chains. Two fingerprints that differ in
//! any recorded invariant certify that the underlying algebras cannot be
//! derived equivalent; agreement is always inconclusive.
//!
//! Serialization is canonical JSON: keys sorted, deterministic bytes for a
//! given input, and a format version that readers check before trusting the
//! rest of the record.

use crate::algebra::{Algebra, SymmetrizingForm};
use crate::kulshammer::{codim_sequence, p_n_center, reynolds_ideal, t_n_center, KulshammerError};
use crate::linalg::{LinalgError, Subspace};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FingerprintError {
    #[error("fingerprint JSON is malformed: {0}")]
    Malformed(String),
    #[error("unsupported fingerprint version {found} (this reader expects {FORMAT_VERSION})")]
    UnsupportedVersion { found: u64 },
    #[error("fingerprint record is inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Invariants(#[from] KulshammerError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Ground field of the fingerprinted algebra. Only the isomorphism type
/// (characteristic and degree) is recorded, not the modulus: fingerprints
/// over the same field with different modulus choices must compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDescriptor {
    pub e: usize,
    pub p: u64,
}

/// Extra chains available when a symmetrizing form accompanies the algebra.
/// All three lists start at n = 1; entry i describes chain index i + 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetricExtras {
    /// dim P_n(Z)^⊥/K(A)
    pub pn_perp_dims: Vec<usize>,
    /// dim T_n(A)^⊥
    pub reynolds_dims: Vec<usize>,
    /// dim T_n(Z)^⊥/K(A)
    pub tnz_perp_dims: Vec<usize>,
}

/// The invariant record. Field declaration order is alphabetical so that
/// serde emits canonically sorted JSON keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fingerprint {
    /// dim Ann(T_n(A)) in the dual, for n = 1, 2, ... — equal to the
    /// codimension chain from index 1 on by rank-nullity, recorded
    /// separately because it is the chain that carries the center-module
    /// structure of the dual.
    pub ann_chain_dims: Vec<usize>,
    /// dim A − dim T_n(A) for n = 0, 1, ..., up to stabilization.
    pub codim_tn: Vec<usize>,
    /// dim A. Recorded for the reader; never compared (the dimension of an
    /// algebra is not a derived invariant, its codimension chains are).
    pub dim: usize,
    pub dim_center: usize,
    /// dim A/K(A), the degree-zero Hochschild homology.
    pub dim_hh0: usize,
    pub field: FieldDescriptor,
    /// First n with T_n = T_{n+1}; codim_tn is constant from this index on.
    pub stab: usize,
    pub symmetric_extras: Option<SymmetricExtras>,
    pub version: u32,
}

/// First n >= 0 at which the kernel chain of the p-power map on the center
/// becomes stationary. The image chain P_n(Z) stabilizes at the same index
/// by rank-nullity, so this bounds every center chain in the record.
fn center_chain_stab(a: &Algebra) -> Result<usize, FingerprintError> {
    let mut prev = t_n_center(a, 0)?;
    for n in 0..=a.dim() as u32 {
        let next = t_n_center(a, n + 1)?;
        if next == prev {
            return Ok(n as usize);
        }
        prev = next;
    }
    Err(FingerprintError::Internal("power kernel chain on the center failed to stabilize".into()))
}

fn quotient_by_commutators_dim(
    orth: &Subspace,
    commutators: &Subspace,
) -> Result<usize, FingerprintError> {
    if !orth.contains(commutators) {
        return Err(FingerprintError::Internal(
            "orthogonal of a central chain does not contain the commutator space".into(),
        ));
    }
    Ok(orth.dim() - commutators.dim())
}

/// Compute the full record. The chains are carried exactly far enough for
/// every list to end in its stable value, which is what makes comparison by
/// stable-value padding sound.
pub fn compute_fingerprint(
    a: &Algebra,
    form: Option<&SymmetrizingForm>,
) -> Result<Fingerprint, FingerprintError> {
    let seq = codim_sequence(a, None)?;
    let stab = seq
        .stab
        .ok_or_else(|| FingerprintError::Internal("auto-stabilization returned no index".into()))?;
    let codim_tn = seq.codims;
    let dim_hh0 = codim_tn[0];
    let ann_chain_dims = codim_tn[1..].to_vec();

    let symmetric_extras = match form {
        None => None,
        Some(form) => {
            let horizon = stab.max(center_chain_stab(a)?).max(1);
            let gram = form.gram();
            let commutators = a.commutator_space();
            let mut reynolds_dims = Vec::with_capacity(horizon);
            let mut pn_perp_dims = Vec::with_capacity(horizon);
            let mut tnz_perp_dims = Vec::with_capacity(horizon);
            for n in 1..=horizon as u32 {
                reynolds_dims.push(reynolds_ideal(a, form, n)?.dim());
                let pn_perp = p_n_center(a, n).orthogonal(gram)?;
                pn_perp_dims.push(quotient_by_commutators_dim(&pn_perp, &commutators)?);
                let tnz_perp = t_n_center(a, n)?.orthogonal(gram)?;
                tnz_perp_dims.push(quotient_by_commutators_dim(&tnz_perp, &commutators)?);
            }
            Some(SymmetricExtras { pn_perp_dims, reynolds_dims, tnz_perp_dims })
        }
    };

    let fp = Fingerprint {
        ann_chain_dims,
        codim_tn,
        dim: a.dim(),
        dim_center: a.center().dim(),
        dim_hh0,
        field: FieldDescriptor { e: a.field().degree(), p: a.field().p() },
        stab,
        symmetric_extras,
        version: FORMAT_VERSION,
    };
    fp.validate()?;
    Ok(fp)
}

impl Fingerprint {
    /// Internal consistency of a record, re-checked after computation and on
    /// every deserialization so corrupted files fail loudly.
    pub fn validate(&self) -> Result<(), FingerprintError> {
        let err = |msg: &str| Err(FingerprintError::Inconsistent(msg.into()));
        if self.version != FORMAT_VERSION {
            return Err(FingerprintError::UnsupportedVersion { found: self.version as u64 });
        }
        if self.codim_tn.len() < 2 {
            return err("codimension chain must carry at least indices 0 and 1");
        }
        if self.stab + 1 > self.codim_tn.len() {
            return err("stabilization index lies outside the recorded chain");
        }
        if self.codim_tn[0] != self.dim_hh0 {
            return err("index 0 of the codimension chain must equal dim_hh0");
        }
        for w in self.codim_tn[1..].windows(2) {
            if w[0] < w[1] {
                return err("codimension chain must be non-increasing from index 1");
            }
        }
        let stable = self.codim_tn[self.stab];
        if self.codim_tn[self.stab..].iter().any(|&c| c != stable) {
            return err("codimension chain must be constant from the stabilization index");
        }
        if self.ann_chain_dims != self.codim_tn[1..] {
            return err("annihilator chain must match the codimension chain from index 1");
        }
        if let Some(extras) = &self.symmetric_extras {
            let n = extras.reynolds_dims.len();
            if n == 0 {
                return err("symmetric chains must carry at least index 1");
            }
            if extras.pn_perp_dims.len() != n || extras.tnz_perp_dims.len() != n {
                return err("symmetric chains must have equal lengths");
            }
            let ann_at = |i: usize| self.ann_chain_dims[i.min(self.ann_chain_dims.len() - 1)];
            for (i, &r) in extras.reynolds_dims.iter().enumerate() {
                if r != ann_at(i) {
                    return err("Reynolds chain must match the annihilator chain");
                }
            }
        }
        Ok(())
    }

    /// Deterministic sorted-key JSON with trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("fingerprints serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Fingerprint, FingerprintError> {
        #[derive(Deserialize)]
        struct VersionProbe {
            version: u64,
        }
        let probe: VersionProbe =
            serde_json::from_str(text).map_err(|e| FingerprintError::Malformed(e.to_string()))?;
        if probe.version != FORMAT_VERSION as u64 {
            return Err(FingerprintError::UnsupportedVersion { found: probe.version });
        }
        let fp: Fingerprint =
            serde_json::from_str(text).map_err(|e| FingerprintError::Malformed(e.to_string()))?;
        fp.validate()?;
        Ok(fp)
    }
}

/// Outcome of comparing two fingerprints. A difference in any compared
/// invariant rules out derived equivalence; agreement never asserts it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    NotDistinguished,
    Distinguished { invariant: String, left: usize, right: usize },
    Incomparable { reason: String },
}

impl Verdict {
    /// Process exit code convention: 0 when nothing separates the records,
    /// 1 when they are distinguished, 2 when they cannot be compared.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::NotDistinguished => 0,
            Verdict::Distinguished { .. } => 1,
            Verdict::Incomparable { .. } => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NotDistinguished => write!(f, "not distinguished"),
            Verdict::Distinguished { invariant, left, right } => {
                write!(f, "distinguished at {invariant} ({left} vs {right})")
            }
            Verdict::Incomparable { reason } => write!(f, "incomparable ({reason})"),
        }
    }
}

/// Elementwise comparison after padding both chains to a common length with
/// their final entries. Sound because every recorded chain is eventually
/// constant and is stored through its stabilization point.
fn compare_padded(name: &str, left: &[usize], right: &[usize], offset: usize) -> Option<Verdict> {
    let len = left.len().max(right.len());
    for i in 0..len {
        let l = left[i.min(left.len() - 1)];
        let r = right[i.min(right.len() - 1)];
        if l != r {
            return Some(Verdict::Distinguished {
                invariant: format!("{name}[{}]", i + offset),
                left: l,
                right: r,
            });
        }
    }
    None
}

/// Compare every derived invariant of the two records, reporting the first
/// difference in a fixed order: field, dim_center, dim_hh0, the codimension
/// chain, then the symmetric chains when both records carry them. The raw
/// algebra dimension is deliberately not compared.
pub fn compare(left: &Fingerprint, right: &Fingerprint) -> Verdict {
    if left.field.p != right.field.p {
        return Verdict::Incomparable { reason: "different characteristic".into() };
    }
    if left.field.e != right.field.e {
        return Verdict::Incomparable { reason: "different ground field degree".into() };
    }
    if left.dim_center != right.dim_center {
        return Verdict::Distinguished {
            invariant: "dim_center".into(),
            left: left.dim_center,
            right: right.dim_center,
        };
    }
    if left.dim_hh0 != right.dim_hh0 {
        return Verdict::Distinguished {
            invariant: "dim_hh0".into(),
            left: left.dim_hh0,
            right: right.dim_hh0,
        };
    }
    if let Some(v) = compare_padded("codim_tn", &left.codim_tn, &right.codim_tn, 0) {
        return v;
    }
    if let (Some(le), Some(re)) = (&left.symmetric_extras, &right.symmetric_extras) {
        for (name, l, r) in [
            ("reynolds_dims", &le.reynolds_dims, &re.reynolds_dims),
            ("pn_perp_dims", &le.pn_perp_dims, &re.pn_perp_dims),
            ("tnz_perp_dims", &le.tnz_perp_dims, &re.tnz_perp_dims),
        ] {
            if let Some(v) = compare_padded(name, l, r, 1) {
                return v;
            }
        }
    }
    Verdict::NotDistinguished
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn dual_numbers_record() {
        let f = prime_field(2);
        let a = dual_numbers(&f);
        let form = dual_numbers_form(&a);
        let fp = compute_fingerprint(&a, Some(&form)).unwrap();
        assert_eq!(fp.dim, 2);
        assert_eq!(fp.dim_center, 2);
        assert_eq!(fp.dim_hh0, 2);
        assert_eq!(fp.codim_tn, vec![2, 1]);
        assert_eq!(fp.stab, 1);
        assert_eq!(fp.ann_chain_dims, vec![1]);
        let extras = fp.symmetric_extras.as_ref().unwrap();
        assert_eq!(extras.reynolds_dims, vec![1]);
        assert_eq!(extras.pn_perp_dims, vec![1]);
        assert_eq!(extras.tnz_perp_dims, vec![1]);
        assert_eq!(fp.field, FieldDescriptor { e: 1, p: 2 });
    }

    #[test]
    fn split_pair_of_fields_record() {
        let f = prime_field(2);
        let a = product_of_fields(&f);
        let form = product_of_fields_form(&a);
        let fp = compute_fingerprint(&a, Some(&form)).unwrap();
        assert_eq!(fp.codim_tn, vec![2, 2]);
        assert_eq!(fp.stab, 0);
        let extras = fp.symmetric_extras.as_ref().unwrap();
        assert_eq!(extras.reynolds_dims, vec![2]);
        assert_eq!(extras.pn_perp_dims, vec![0]);
        assert_eq!(extras.tnz_perp_dims, vec![2]);
    }

    #[test]
    fn full_matrix_algebra_record() {
        let f = prime_field(2);
        let a = m2(&f);
        let form = m2_trace_form(&a);
        let fp = compute_fingerprint(&a, Some(&form)).unwrap();
        assert_eq!(fp.dim, 4);
        assert_eq!(fp.dim_center, 1);
        assert_eq!(fp.dim_hh0, 1);
        assert_eq!(fp.codim_tn, vec![1, 1]);
        assert_eq!(fp.stab, 0);
        let extras = fp.symmetric_extras.as_ref().unwrap();
        assert_eq!(extras.reynolds_dims, vec![1]);
        assert_eq!(extras.pn_perp_dims, vec![0]);
        assert_eq!(extras.tnz_perp_dims, vec![1]);
    }

    #[test]
    fn cyclic_four_record_carries_the_longer_chains() {
        let f = prime_field(2);
        let a = group_algebra(&f, 4);
        let form = group_algebra_form(&a);
        let fp = compute_fingerprint(&a, Some(&form)).unwrap();
        assert_eq!(fp.codim_tn, vec![4, 2, 1]);
        assert_eq!(fp.stab, 2);
        assert_eq!(fp.ann_chain_dims, vec![2, 1]);
        let extras = fp.symmetric_extras.as_ref().unwrap();
        assert_eq!(extras.reynolds_dims, vec![2, 1]);
        assert_eq!(extras.pn_perp_dims, vec![2, 3]);
        assert_eq!(extras.tnz_perp_dims, vec![2, 1]);
    }

    #[test]
    fn form_free_record_has_no_extras() {
        let f = prime_field(2);
        let fp = compute_fingerprint(&upper_triangular2(&f), None).unwrap();
        assert!(fp.symmetric_extras.is_none());
        // T_n = K = span{e12} for every n >= 1 in the triangular algebra
        assert_eq!(fp.codim_tn, vec![2, 2]);
        assert_eq!(fp.stab, 0);
    }

    #[test]
    fn serialization_round_trips_and_is_deterministic() {
        let f = prime_field(2);
        let a = group_algebra(&f, 4);
        let form = group_algebra_form(&a);
        let fp = compute_fingerprint(&a, Some(&form)).unwrap();
        let json = fp.to_canonical_json();
        assert_eq!(Fingerprint::from_json(&json).unwrap(), fp);
        let again = compute_fingerprint(&a, Some(&form)).unwrap().to_canonical_json();
        assert_eq!(json, again);
    }

    #[test]
    fn json_keys_are_sorted() {
        let f = prime_field(2);
        let fp = compute_fingerprint(&dual_numbers(&f), None).unwrap();
        let json = fp.to_canonical_json();
        let keys: Vec<usize> = [
            "\"ann_chain_dims\"",
            "\"codim_tn\"",
            "\"dim\"",
            "\"dim_center\"",
            "\"dim_hh0\"",
            "\"field\"",
            "\"stab\"",
            "\"symmetric_extras\"",
            "\"version\"",
        ]
        .iter()
        .map(|k| json.find(k).expect("every key present"))
        .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn future_versions_are_rejected() {
        let f = prime_field(2);
        let fp = compute_fingerprint(&dual_numbers(&f), None).unwrap();
        let json = fp.to_canonical_json().replace("\"version\": 0", "\"version\": 1");
        match Fingerprint::from_json(&json) {
            Err(FingerprintError::UnsupportedVersion { found: 1 }) => {}
            other => panic!("expected a version error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_and_inconsistent_records_are_rejected() {
        assert!(matches!(Fingerprint::from_json("not json"), Err(FingerprintError::Malformed(_))));
        let f = prime_field(2);
        let fp = compute_fingerprint(&dual_numbers(&f), None).unwrap();
        // unknown key
        let json = fp.to_canonical_json().replace("\"dim\":", "\"dim_extra\": 9,\n  \"dim\":");
        assert!(matches!(Fingerprint::from_json(&json), Err(FingerprintError::Malformed(_))));
        // chain inconsistent with dim_hh0
        let json = fp.to_canonical_json().replace("\"dim_hh0\": 2", "\"dim_hh0\": 3");
        assert!(matches!(Fingerprint::from_json(&json), Err(FingerprintError::Inconsistent(_))));
    }

    #[test]
    fn local_and_split_two_dimensional_algebras_are_distinguished() {
        let f = prime_field(2);
        let local = compute_fingerprint(&dual_numbers(&f), None).unwrap();
        let split = compute_fingerprint(&product_of_fields(&f), None).unwrap();
        let verdict = compare(&local, &split);
        assert_eq!(
            verdict,
            Verdict::Distinguished { invariant: "codim_tn[1]".into(), left: 1, right: 2 }
        );
        assert_eq!(verdict.exit_code(), 1);
        assert_eq!(verdict.to_string(), "distinguished at codim_tn[1] (1 vs 2)");
        // symmetric in the distinguished/not sense
        assert!(matches!(compare(&split, &local), Verdict::Distinguished { .. }));
    }

    #[test]
    fn comparison_is_reflexive() {
        let f = prime_field(2);
        let a = group_algebra(&f, 4);
        let form = group_algebra_form(&a);
        let fp = compute_fingerprint(&a, Some(&form)).unwrap();
        assert_eq!(compare(&fp, &fp), Verdict::NotDistinguished);
        assert_eq!(compare(&fp, &fp).exit_code(), 0);
    }

    #[test]
    fn isomorphic_presentations_compare_equal() {
        // k[x]/(x^2) and the group algebra of the two-element group are the
        // same algebra in characteristic two
        let f = prime_field(2);
        let a = dual_numbers(&f);
        let b = group_algebra(&f, 2);
        let fa = compute_fingerprint(&a, Some(&dual_numbers_form(&a))).unwrap();
        let fb = compute_fingerprint(&b, Some(&group_algebra_form(&b))).unwrap();
        assert_eq!(compare(&fa, &fb), Verdict::NotDistinguished);
    }

    #[test]
    fn raw_dimension_is_never_compared() {
        let f = prime_field(2);
        let small = compute_fingerprint(&product_of_fields(&f), None).unwrap();
        let big =
            compute_fingerprint(&product_of_fields(&f).matrix_algebra(2).unwrap(), None).unwrap();
        assert_ne!(small.dim, big.dim);
        assert_eq!(compare(&small, &big), Verdict::NotDistinguished);
    }

    #[test]
    fn chains_of_different_length_are_padded_with_their_stable_values() {
        let f = prime_field(2);
        let c2 = compute_fingerprint(&group_algebra(&f, 2), None).unwrap();
        let mut longer = c2.clone();
        longer.codim_tn = vec![2, 1, 1];
        longer.ann_chain_dims = vec![1, 1];
        longer.validate().unwrap();
        assert_eq!(compare(&c2, &longer), Verdict::NotDistinguished);

        let c4 = compute_fingerprint(&group_algebra(&f, 4), None).unwrap();
        // both group algebras are commutative, so the center separates first
        assert_eq!(
            compare(&c2, &c4),
            Verdict::Distinguished { invariant: "dim_center".into(), left: 2, right: 4 }
        );
    }

    #[test]
    fn different_fields_are_incomparable() {
        let over2 = compute_fingerprint(&dual_numbers(&prime_field(2)), None).unwrap();
        let over3 = compute_fingerprint(&dual_numbers(&prime_field(3)), None).unwrap();
        let over4 = compute_fingerprint(&dual_numbers(&gf4()), None).unwrap();
        let verdict = compare(&over2, &over3);
        assert_eq!(verdict.exit_code(), 2);
        assert_eq!(verdict.to_string(), "incomparable (different characteristic)");
        assert!(matches!(compare(&over2, &over4), Verdict::Incomparable { .. }));
    }

    #[test]
    fn extras_are_only_compared_when_both_records_carry_them() {
        let f = prime_field(2);
        let a = dual_numbers(&f);
        let with_form = compute_fingerprint(&a, Some(&dual_numbers_form(&a))).unwrap();
        let without = compute_fingerprint(&a, None).unwrap();
        assert_eq!(compare(&with_form, &without), Verdict::NotDistinguished);
    }

    #[test]
    fn matrix_blowup_preserves_every_compared_invariant() {
        let f = prime_field(2);
        for a in [
            dual_numbers(&f),
            product_of_fields(&f),
            m2(&f),
            group_algebra(&f, 4),
            upper_triangular2(&f),
            dual_numbers(&gf4()),
        ] {
            let fp = compute_fingerprint(&a, None).unwrap();
            let blown = compute_fingerprint(&a.matrix_algebra(2).unwrap(), None).unwrap();
            assert_eq!(compare(&fp, &blown), Verdict::NotDistinguished, "{fp:?} vs {blown:?}");
        }
    }
}

//! C interface to the invariant toolkit.
//!
//! Algebras are held behind opaque `KulshAlgebra` handles created from
//! structure-constant JSON or quiver text. All strings are NUL-terminated
//! UTF-8. Functions that return strings allocate; release them with
//! [`kulsh_string_free`]. Every failure records a thread-local message
//! retrievable with [`kulsh_last_error`], and no panic is allowed to cross
//! the boundary.

use kulshammer::algebra::{load_json, Algebra, SymmetrizingForm};
use kulshammer::fingerprint::{compare, compute_fingerprint, Fingerprint};
use kulshammer::kulshammer::{t_n, verify_kulshammer_maps};
use kulshammer::quiver::{build_algebra, parse_quiver};
use kulshammer::report::Report;
use kulshammer::trivext::{
    verify_center, verify_lambda_correspondence, verify_orthogonal_chains, verify_tn_structure,
    TrivialExtension,
};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result of a call that can fail.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KulshStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ComputeError = 4,
    Panicked = 5,
}

/// An algebra together with its symmetrizing form, when the input carried
/// one. Opaque: create with the loaders, release with [`kulsh_algebra_free`].
pub struct KulshAlgebra {
    algebra: Algebra,
    form: Option<SymmetrizingForm>,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message.into());
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().clear());
}

fn guarded<T>(fallback: T, body: impl FnOnce() -> T) -> T {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(value) => value,
        Err(_) => {
            set_error("internal panic");
            fallback
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, KulshStatus> {
    if text.is_null() {
        set_error("null string argument");
        return Err(KulshStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        KulshStatus::InvalidUtf8
    })
}

unsafe fn read_handle<'a>(handle: *const KulshAlgebra) -> Option<&'a KulshAlgebra> {
    if handle.is_null() {
        set_error("null algebra handle");
        None
    } else {
        Some(&*handle)
    }
}

fn load_from_text(text: &str) -> Result<KulshAlgebra, String> {
    if text.trim_start().starts_with('{') {
        let loaded = load_json(text).map_err(|e| e.to_string())?;
        Ok(KulshAlgebra { algebra: loaded.algebra, form: loaded.form })
    } else {
        let quiver = parse_quiver(text).map_err(|e| e.to_string())?;
        Ok(KulshAlgebra { algebra: build_algebra(&quiver), form: None })
    }
}

/// Load an algebra from structure-constant JSON (with an optional
/// symmetrizing functional). Returns null on failure.
///
/// # Safety
/// `text` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_from_json(text: *const c_char) -> *mut KulshAlgebra {
    guarded(ptr::null_mut(), || {
        let Ok(text) = read_str(text) else { return ptr::null_mut() };
        if !text.trim_start().starts_with('{') {
            set_error("expected JSON input");
            return ptr::null_mut();
        }
        match load_from_text(text) {
            Ok(handle) => {
                clear_error();
                Box::into_raw(Box::new(handle))
            }
            Err(message) => {
                set_error(message);
                ptr::null_mut()
            }
        }
    })
}

/// Load an algebra from a quiver description. Returns null on failure.
///
/// # Safety
/// `text` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_from_quiver(text: *const c_char) -> *mut KulshAlgebra {
    guarded(ptr::null_mut(), || {
        let Ok(text) = read_str(text) else { return ptr::null_mut() };
        match parse_quiver(text) {
            Ok(quiver) => {
                clear_error();
                Box::into_raw(Box::new(KulshAlgebra {
                    algebra: build_algebra(&quiver),
                    form: None,
                }))
            }
            Err(e) => {
                set_error(e.to_string());
                ptr::null_mut()
            }
        }
    })
}

/// Release a handle returned by one of the loaders. Null is ignored.
///
/// # Safety
/// `handle` must be null or a pointer returned by a loader, and must not be
/// used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_free(handle: *mut KulshAlgebra) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Dimension of the algebra, or -1 on a null handle.
///
/// # Safety
/// `handle` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_dim(handle: *const KulshAlgebra) -> i64 {
    guarded(-1, || match read_handle(handle) {
        Some(h) => h.algebra.dim() as i64,
        None => -1,
    })
}

/// Dimension of the center, or -1 on a null handle.
///
/// # Safety
/// `handle` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_center_dim(handle: *const KulshAlgebra) -> i64 {
    guarded(-1, || match read_handle(handle) {
        Some(h) => h.algebra.center().dim() as i64,
        None => -1,
    })
}

/// Dimension of the commutator subspace, or -1 on a null handle.
///
/// # Safety
/// `handle` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_commutator_dim(handle: *const KulshAlgebra) -> i64 {
    guarded(-1, || match read_handle(handle) {
        Some(h) => h.algebra.commutator_space().dim() as i64,
        None => -1,
    })
}

/// Dimension of T_n, or -1 on failure.
///
/// # Safety
/// `handle` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_tn_dim(handle: *const KulshAlgebra, n: u32) -> i64 {
    guarded(-1, || {
        let Some(h) = read_handle(handle) else { return -1 };
        match t_n(&h.algebra, n) {
            Ok(space) => space.dim() as i64,
            Err(e) => {
                set_error(e.to_string());
                -1
            }
        }
    })
}

/// 1 when the handle carries a symmetrizing form, 0 when not, -1 on null.
///
/// # Safety
/// `handle` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kulsh_algebra_has_form(handle: *const KulshAlgebra) -> i32 {
    guarded(-1, || match read_handle(handle) {
        Some(h) => h.form.is_some() as i32,
        None => -1,
    })
}

fn string_to_c(out: String) -> *mut c_char {
    match CString::new(out) {
        Ok(s) => s.into_raw(),
        Err(_) => {
            set_error("output contained an interior NUL byte");
            ptr::null_mut()
        }
    }
}

/// Canonical fingerprint JSON of the algebra (with symmetric extras when a
/// form is present). Free with [`kulsh_string_free`]. Null on failure.
///
/// # Safety
/// `handle` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kulsh_fingerprint_json(handle: *const KulshAlgebra) -> *mut c_char {
    guarded(ptr::null_mut(), || {
        let Some(h) = read_handle(handle) else { return ptr::null_mut() };
        match compute_fingerprint(&h.algebra, h.form.as_ref()) {
            Ok(fp) => {
                clear_error();
                string_to_c(fp.to_canonical_json())
            }
            Err(e) => {
                set_error(e.to_string());
                ptr::null_mut()
            }
        }
    })
}

/// The trivial extension of the algebra, serialized with its symmetrizing
/// functional. Free with [`kulsh_string_free`]. Null on failure.
///
/// # Safety
/// `handle` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn kulsh_trivext_json(handle: *const KulshAlgebra) -> *mut c_char {
    guarded(ptr::null_mut(), || {
        let Some(h) = read_handle(handle) else { return ptr::null_mut() };
        match TrivialExtension::new(h.algebra.clone()) {
            Ok(ext) => {
                clear_error();
                string_to_c(ext.to_json())
            }
            Err(e) => {
                set_error(e.to_string());
                ptr::null_mut()
            }
        }
    })
}

fn run_verifiers(h: &KulshAlgebra, nmax: u32) -> Result<Report, String> {
    let mut report = Report::new();
    report.extend(verify_center(&h.algebra).map_err(|e| e.to_string())?);
    report.extend(verify_tn_structure(&h.algebra, nmax).map_err(|e| e.to_string())?);
    report.extend(verify_orthogonal_chains(&h.algebra, nmax).map_err(|e| e.to_string())?);
    if let Some(form) = &h.form {
        report.extend(
            verify_lambda_correspondence(&h.algebra, form, nmax).map_err(|e| e.to_string())?,
        );
        report.extend(verify_kulshammer_maps(&h.algebra, form, nmax).map_err(|e| e.to_string())?);
    }
    Ok(report)
}

/// Run the identity verifiers up to chain index `nmax`. On success writes 1
/// to `out_passed` when every identity holds, 0 otherwise.
///
/// # Safety
/// `handle` must be null or a valid handle; `out_passed` must be null or
/// point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn kulsh_verify(
    handle: *const KulshAlgebra,
    nmax: u32,
    out_passed: *mut i32,
) -> KulshStatus {
    guarded(KulshStatus::Panicked, || {
        let Some(h) = read_handle(handle) else { return KulshStatus::NullArgument };
        if out_passed.is_null() {
            set_error("null output argument");
            return KulshStatus::NullArgument;
        }
        match run_verifiers(h, nmax) {
            Ok(report) => {
                clear_error();
                *out_passed = report.passed() as i32;
                KulshStatus::Ok
            }
            Err(message) => {
                set_error(message);
                KulshStatus::ComputeError
            }
        }
    })
}

/// Compare two canonical fingerprint JSON records. On success writes the
/// verdict to `out_verdict`: 0 not distinguished, 1 distinguished, 2
/// incomparable.
///
/// # Safety
/// `left` and `right` must be valid NUL-terminated strings; `out_verdict`
/// must be null or point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn kulsh_compare_fingerprint_json(
    left: *const c_char,
    right: *const c_char,
    out_verdict: *mut i32,
) -> KulshStatus {
    guarded(KulshStatus::Panicked, || {
        let (Ok(left), Ok(right)) = (read_str(left), read_str(right)) else {
            return KulshStatus::NullArgument;
        };
        if out_verdict.is_null() {
            set_error("null output argument");
            return KulshStatus::NullArgument;
        }
        let parse = |text: &str| Fingerprint::from_json(text).map_err(|e| e.to_string());
        match (parse(left), parse(right)) {
            (Ok(lf), Ok(rf)) => {
                clear_error();
                *out_verdict = compare(&lf, &rf).exit_code();
                KulshStatus::Ok
            }
            (Err(message), _) | (_, Err(message)) => {
                set_error(message);
                KulshStatus::ParseError
            }
        }
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must be null or a pointer returned by this library, and must not
/// be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kulsh_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Copy the most recent error message on this thread into `buffer` (always
/// NUL-terminated when `capacity` > 0) and return the full message length in
/// bytes, excluding the terminator. Call with a null buffer to size one.
///
/// # Safety
/// `buffer` must be null or point to at least `capacity` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn kulsh_last_error(buffer: *mut c_char, capacity: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let message = slot.borrow();
        let bytes = message.as_bytes();
        if !buffer.is_null() && capacity > 0 {
            let copy = bytes.len().min(capacity - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buffer, copy);
            *buffer.add(copy) = 0;
        }
        bytes.len()
    })
}

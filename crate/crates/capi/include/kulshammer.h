/* C interface to the kulshammer invariant toolkit. */

#ifndef KULSHAMMER_H
#define KULSHAMMER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of a call that can fail.
 */
typedef enum KulshStatus {
  KulshStatus_Ok = 0,
  KulshStatus_NullArgument = 1,
  KulshStatus_InvalidUtf8 = 2,
  KulshStatus_ParseError = 3,
  KulshStatus_ComputeError = 4,
  KulshStatus_Panicked = 5,
} KulshStatus;

/*
 An algebra together with its symmetrizing form, when the input carried
 one. Opaque: create with the loaders, release with [`kulsh_algebra_free`].
 */
typedef struct KulshAlgebra KulshAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Load an algebra from structure-constant JSON (with an optional
 symmetrizing functional). Returns null on failure.

 # Safety
 `text` must be a valid NUL-terminated string.
 */
struct KulshAlgebra *kulsh_algebra_from_json(const char *text);

/*
 Load an algebra from a quiver description. Returns null on failure.

 # Safety
 `text` must be a valid NUL-terminated string.
 */
struct KulshAlgebra *kulsh_algebra_from_quiver(const char *text);

/*
 Release a handle returned by one of the loaders. Null is ignored.

 # Safety
 `handle` must be null or a pointer returned by a loader, and must not be
 used afterwards.
 */
void kulsh_algebra_free(struct KulshAlgebra *handle);

/*
 Dimension of the algebra, or -1 on a null handle.

 # Safety
 `handle` must be null or a valid handle.
 */
int64_t kulsh_algebra_dim(const struct KulshAlgebra *handle);

/*
 Dimension of the center, or -1 on a null handle.

 # Safety
 `handle` must be null or a valid handle.
 */
int64_t kulsh_algebra_center_dim(const struct KulshAlgebra *handle);

/*
 Dimension of the commutator subspace, or -1 on a null handle.

 # Safety
 `handle` must be null or a valid handle.
 */
int64_t kulsh_algebra_commutator_dim(const struct KulshAlgebra *handle);

/*
 Dimension of T_n, or -1 on failure.

 # Safety
 `handle` must be null or a valid handle.
 */
int64_t kulsh_algebra_tn_dim(const struct KulshAlgebra *handle, uint32_t n);

/*
 1 when the handle carries a symmetrizing form, 0 when not, -1 on null.

 # Safety
 `handle` must be null or a valid handle.
 */
int32_t kulsh_algebra_has_form(const struct KulshAlgebra *handle);

/*
 Canonical fingerprint JSON of the algebra (with symmetric extras when a
 form is present). Free with [`kulsh_string_free`]. Null on failure.

 # Safety
 `handle` must be null or a valid handle.
 */
char *kulsh_fingerprint_json(const struct KulshAlgebra *handle);

/*
 The trivial extension of the algebra, serialized with its symmetrizing
 functional. Free with [`kulsh_string_free`]. Null on failure.

 # Safety
 `handle` must be null or a valid handle.
 */
char *kulsh_trivext_json(const struct KulshAlgebra *handle);

/*
 Run the identity verifiers up to chain index `nmax`. On success writes 1
 to `out_passed` when every identity holds, 0 otherwise.

 # Safety
 `handle` must be null or a valid handle; `out_passed` must be null or
 point to writable memory.
 */
enum KulshStatus kulsh_verify(const struct KulshAlgebra *handle,
                              uint32_t nmax,
                              int32_t *out_passed);

/*
 Compare two canonical fingerprint JSON records. On success writes the
 verdict to `out_verdict`: 0 not distinguished, 1 distinguished, 2
 incomparable.

 # Safety
 `left` and `right` must be valid NUL-terminated strings; `out_verdict`
 must be null or point to writable memory.
 */
enum KulshStatus kulsh_compare_fingerprint_json(const char *left,
                                                const char *right,
                                                int32_t *out_verdict);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `text` must be null or a pointer returned by this library, and must not
 be used afterwards.
 */
void kulsh_string_free(char *text);

/*
 Copy the most recent error message on this thread into `buffer` (always
 NUL-terminated when `capacity` > 0) and return the full message length in
 bytes, excluding the terminator. Call with a null buffer to size one.

 # Safety
 `buffer` must be null or point to at least `capacity` writable bytes.
 */
size_t kulsh_last_error(char *buffer, size_t capacity);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KULSHAMMER_H */

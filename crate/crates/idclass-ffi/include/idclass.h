#ifndef IDCLASS_H
#define IDCLASS_H

/* Generated by cbindgen from crates/idclass-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum IdclassStatus {
  IdclassStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  IdclassStatus_NullArgument = 1,
  /**
   * An argument value is outside its domain (empty list, zero generator).
   */
  IdclassStatus_InvalidArgument = 2,
  /**
   * The generators do not generate a numerical semigroup (gcd > 1).
   */
  IdclassStatus_NotNumerical = 3,
  /**
   * The element is zero or not a member of the semigroup.
   */
  IdclassStatus_NotMember = 4,
  /**
   * The operation is undefined for the whole set of non-negative integers.
   */
  IdclassStatus_UndefinedForNaturals = 5,
  /**
   * A tuple violates the Apéry residue preconditions.
   */
  IdclassStatus_BadResidues = 6,
  /**
   * Two ideals belong to different semigroups.
   */
  IdclassStatus_ParentMismatch = 7,
  /**
   * The ideal has no gaps.
   */
  IdclassStatus_NoGaps = 8,
  /**
   * The addition table has not been built.
   */
  IdclassStatus_TableMissing = 9,
  /**
   * An ideal index is out of range.
   */
  IdclassStatus_IndexOutOfBounds = 10,
  /**
   * The provided buffer is smaller than the result.
   */
  IdclassStatus_BufferTooSmall = 11,
  /**
   * An internal invariant failed.
   */
  IdclassStatus_InternalError = 12,
} IdclassStatus;

/**
 * Opaque handle to a fully built ideal class monoid (addition table and
 * per-ideal classification included).
 */
typedef struct IdclassMonoid IdclassMonoid;

/**
 * Opaque handle to a numerical semigroup.
 */
typedef struct IdclassSemigroup IdclassSemigroup;

/**
 * Per-ideal classification record.
 */
typedef struct IdclassClassification {
  bool irreducible;
  bool atom;
  bool quark;
  bool prime;
  bool idempotent;
  uint64_t reduction_number;
  size_t generator_count;
} IdclassClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the numerical semigroup generated by `gens[0..len]`.
 *
 * # Safety
 * `gens` must point to `len` readable u64 values and `out` must be a valid
 * location for a pointer. On success the caller owns the handle and must
 * release it with [`idclass_semigroup_free`].
 */
enum IdclassStatus idclass_semigroup_from_generators(const uint64_t *gens,
                                                     size_t len,
                                                     struct IdclassSemigroup **out);

/**
 * Releases a semigroup handle. A null pointer is ignored.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by
 * [`idclass_semigroup_from_generators`] that has not been freed yet.
 */
void idclass_semigroup_free(struct IdclassSemigroup *s);

/**
 * Smallest positive element of the semigroup.
 *
 * # Safety
 * `s` must be a live semigroup handle; `out` must be writable.
 */
enum IdclassStatus idclass_semigroup_multiplicity(const struct IdclassSemigroup *s, uint64_t *out);

/**
 * Largest integer not in the semigroup (-1 for the naturals).
 *
 * # Safety
 * `s` must be a live semigroup handle; `out` must be writable.
 */
enum IdclassStatus idclass_semigroup_frobenius(const struct IdclassSemigroup *s, int64_t *out);

/**
 * Number of gaps.
 *
 * # Safety
 * `s` must be a live semigroup handle; `out` must be writable.
 */
enum IdclassStatus idclass_semigroup_genus(const struct IdclassSemigroup *s, uint64_t *out);

/**
 * Membership test; negative integers are never members.
 *
 * # Safety
 * `s` must be a live semigroup handle; `out` must be writable.
 */
enum IdclassStatus idclass_semigroup_contains(const struct IdclassSemigroup *s,
                                              int64_t x,
                                              bool *out);

/**
 * Minimal generating set (buffer call, see the module docs).
 *
 * # Safety
 * `s` must be a live handle; `buf` null or `cap` writable u64 slots;
 * `written` writable.
 */
enum IdclassStatus idclass_semigroup_min_generators(const struct IdclassSemigroup *s,
                                                    uint64_t *buf,
                                                    size_t cap,
                                                    size_t *written);

/**
 * Gap set (buffer call).
 *
 * # Safety
 * Same contract as [`idclass_semigroup_min_generators`].
 */
enum IdclassStatus idclass_semigroup_gaps(const struct IdclassSemigroup *s,
                                          uint64_t *buf,
                                          size_t cap,
                                          size_t *written);

/**
 * Apéry set with respect to the multiplicity (buffer call).
 *
 * # Safety
 * Same contract as [`idclass_semigroup_min_generators`].
 */
enum IdclassStatus idclass_semigroup_apery(const struct IdclassSemigroup *s,
                                           uint64_t *buf,
                                           size_t cap,
                                           size_t *written);

/**
 * Kunz coordinates (buffer call).
 *
 * # Safety
 * Same contract as [`idclass_semigroup_min_generators`].
 */
enum IdclassStatus idclass_semigroup_kunz(const struct IdclassSemigroup *s,
                                          uint64_t *buf,
                                          size_t cap,
                                          size_t *written);

/**
 * Pseudo-Frobenius numbers (buffer call); fails on the naturals.
 *
 * # Safety
 * Same contract as [`idclass_semigroup_min_generators`].
 */
enum IdclassStatus idclass_semigroup_pseudo_frobenius(const struct IdclassSemigroup *s,
                                                      uint64_t *buf,
                                                      size_t cap,
                                                      size_t *written);

/**
 * Special gaps (buffer call); fails on the naturals.
 *
 * # Safety
 * Same contract as [`idclass_semigroup_min_generators`].
 */
enum IdclassStatus idclass_semigroup_special_gaps(const struct IdclassSemigroup *s,
                                                  uint64_t *buf,
                                                  size_t cap,
                                                  size_t *written);

/**
 * Full invariant record as a JSON document. The returned string must be
 * released with [`idclass_string_free`].
 *
 * # Safety
 * `s` must be a live semigroup handle; `out` must be writable.
 */
enum IdclassStatus idclass_semigroup_report_json(const struct IdclassSemigroup *s, char **out);

/**
 * Releases a string returned by this library. A null pointer is ignored.
 *
 * # Safety
 * `text` must be null or a pointer previously returned by
 * [`idclass_semigroup_report_json`] that has not been freed yet.
 */
void idclass_string_free(char *text);

/**
 * Enumerates the ideal class monoid of `s`, builds its addition table and
 * classifies every element.
 *
 * # Safety
 * `s` must be a live semigroup handle and `out` a valid location for a
 * pointer. The caller owns the handle and must release it with
 * [`idclass_monoid_free`].
 */
enum IdclassStatus idclass_monoid_new(const struct IdclassSemigroup *s, struct IdclassMonoid **out);

/**
 * Releases a monoid handle. A null pointer is ignored.
 *
 * # Safety
 * `m` must be null or a pointer previously returned by
 * [`idclass_monoid_new`] that has not been freed yet.
 */
void idclass_monoid_free(struct IdclassMonoid *m);

/**
 * Number of ideal classes. Index 0 is the identity (the semigroup itself);
 * the largest index is the absorbing element (the naturals).
 *
 * # Safety
 * `m` must be a live monoid handle; `out` must be writable.
 */
enum IdclassStatus idclass_monoid_len(const struct IdclassMonoid *m, size_t *out);

/**
 * Index of the sum of the ideals at `i` and `j`.
 *
 * # Safety
 * `m` must be a live monoid handle; `out` must be writable.
 */
enum IdclassStatus idclass_monoid_add(const struct IdclassMonoid *m,
                                      size_t i,
                                      size_t j,
                                      size_t *out);

/**
 * Whether the ideal at `i` is below the ideal at `j` in the algebraic
 * preorder (some k exists with i + k = j).
 *
 * # Safety
 * `m` must be a live monoid handle; `out` must be writable.
 */
enum IdclassStatus idclass_monoid_preceq(const struct IdclassMonoid *m,
                                         size_t i,
                                         size_t j,
                                         bool *out);

/**
 * Whether the ideal at `i` is contained in the ideal at `j`.
 *
 * # Safety
 * `m` must be a live monoid handle; `out` must be writable.
 */
enum IdclassStatus idclass_monoid_includes(const struct IdclassMonoid *m,
                                           size_t i,
                                           size_t j,
                                           bool *out);

/**
 * Apéry tuple of the ideal at `idx` (buffer call).
 *
 * # Safety
 * `m` must be a live monoid handle; buffer contract as in the module docs.
 */
enum IdclassStatus idclass_monoid_ideal_apery(const struct IdclassMonoid *m,
                                              size_t idx,
                                              uint64_t *buf,
                                              size_t cap,
                                              size_t *written);

/**
 * Minimal generating set of the ideal at `idx` (buffer call).
 *
 * # Safety
 * `m` must be a live monoid handle; buffer contract as in the module docs.
 */
enum IdclassStatus idclass_monoid_ideal_generators(const struct IdclassMonoid *m,
                                                   size_t idx,
                                                   uint64_t *buf,
                                                   size_t cap,
                                                   size_t *written);

/**
 * Classification flags and invariants of the ideal at `idx`.
 *
 * # Safety
 * `m` must be a live monoid handle; `out` must be writable.
 */
enum IdclassStatus idclass_monoid_classification(const struct IdclassMonoid *m,
                                                 size_t idx,
                                                 struct IdclassClassification *out);

/**
 * Exact width of the inclusion order on the monoid.
 *
 * # Safety
 * `m` must be a live monoid handle; `out` must be writable.
 */
enum IdclassStatus idclass_monoid_width_inclusion(const struct IdclassMonoid *m, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IDCLASS_H */

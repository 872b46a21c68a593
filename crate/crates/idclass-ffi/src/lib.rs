//! C ABI over the idclass library.
//!
//! Semigroups and their ideal class monoids are exposed as opaque handles
//! created and destroyed by this library; every fallible call returns an
//! [`IdclassStatus`] and writes its result through out-parameters. Slice
//! results use a caller-provided buffer: call once with a null buffer to
//! query the length, then again with a buffer of that capacity.
//!
//! All functions catch panics at the boundary and turn them into
//! `IdclassStatus_InternalError`, so no unwinding crosses the ABI.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use idclass::{ClassMonoid, Classification, Error, NumericalSemigroup};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdclassStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument value is outside its domain (empty list, zero generator).
    InvalidArgument = 2,
    /// The generators do not generate a numerical semigroup (gcd > 1).
    NotNumerical = 3,
    /// The element is zero or not a member of the semigroup.
    NotMember = 4,
    /// The operation is undefined for the whole set of non-negative integers.
    UndefinedForNaturals = 5,
    /// A tuple violates the Apéry residue preconditions.
    BadResidues = 6,
    /// Two ideals belong to different semigroups.
    ParentMismatch = 7,
    /// The ideal has no gaps.
    NoGaps = 8,
    /// The addition table has not been built.
    TableMissing = 9,
    /// An ideal index is out of range.
    IndexOutOfBounds = 10,
    /// The provided buffer is smaller than the result.
    BufferTooSmall = 11,
    /// An internal invariant failed.
    InternalError = 12,
}

impl From<Error> for IdclassStatus {
    fn from(e: Error) -> IdclassStatus {
        match e {
            Error::NotNumerical { .. } => IdclassStatus::NotNumerical,
            Error::NotMember(_) => IdclassStatus::NotMember,
            Error::EmptyForNaturals => IdclassStatus::UndefinedForNaturals,
            Error::BadResidues { .. } => IdclassStatus::BadResidues,
            Error::ParentMismatch => IdclassStatus::ParentMismatch,
            Error::NoGaps => IdclassStatus::NoGaps,
            Error::TableMissing => IdclassStatus::TableMissing,
        }
    }
}

/// Opaque handle to a numerical semigroup.
pub struct IdclassSemigroup(NumericalSemigroup);

/// Opaque handle to a fully built ideal class monoid (addition table and
/// per-ideal classification included).
pub struct IdclassMonoid {
    monoid: ClassMonoid,
    classifications: Vec<Classification>,
}

/// Per-ideal classification record.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdclassClassification {
    pub irreducible: bool,
    pub atom: bool,
    pub quark: bool,
    pub prime: bool,
    pub idempotent: bool,
    pub reduction_number: u64,
    pub generator_count: usize,
}

fn guard(f: impl FnOnce() -> IdclassStatus) -> IdclassStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(IdclassStatus::InternalError)
}

/// Writes `data` into `buf` (capacity `cap`); `written` always receives the
/// full length. A null `buf` with `cap` 0 just queries the length.
fn fill_u64(buf: *mut u64, cap: usize, written: *mut usize, data: &[u64]) -> IdclassStatus {
    if written.is_null() {
        return IdclassStatus::NullArgument;
    }
    unsafe { *written = data.len() };
    if buf.is_null() {
        return if cap == 0 {
            IdclassStatus::Ok
        } else {
            IdclassStatus::NullArgument
        };
    }
    if cap < data.len() {
        return IdclassStatus::BufferTooSmall;
    }
    unsafe { std::ptr::copy_nonoverlapping(data.as_ptr(), buf, data.len()) };
    IdclassStatus::Ok
}

macro_rules! deref {
    ($ptr:expr) => {
        match unsafe { $ptr.as_ref() } {
            Some(r) => r,
            None => return IdclassStatus::NullArgument,
        }
    };
}

macro_rules! out {
    ($ptr:expr, $value:expr) => {
        match unsafe { $ptr.as_mut() } {
            Some(slot) => *slot = $value,
            None => return IdclassStatus::NullArgument,
        }
    };
}

/// Builds the numerical semigroup generated by `gens[0..len]`.
///
/// # Safety
/// `gens` must point to `len` readable u64 values and `out` must be a valid
/// location for a pointer. On success the caller owns the handle and must
/// release it with [`idclass_semigroup_free`].
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_from_generators(
    gens: *const u64,
    len: usize,
    out: *mut *mut IdclassSemigroup,
) -> IdclassStatus {
    guard(|| {
        if gens.is_null() || out.is_null() {
            return IdclassStatus::NullArgument;
        }
        let slice = unsafe { std::slice::from_raw_parts(gens, len) };
        if slice.is_empty() || slice.contains(&0) {
            return IdclassStatus::InvalidArgument;
        }
        match NumericalSemigroup::from_generators(slice) {
            Ok(s) => {
                unsafe { *out = Box::into_raw(Box::new(IdclassSemigroup(s))) };
                IdclassStatus::Ok
            }
            Err(e) => e.into(),
        }
    })
}

/// Releases a semigroup handle. A null pointer is ignored.
///
/// # Safety
/// `s` must be null or a pointer previously returned by
/// [`idclass_semigroup_from_generators`] that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_free(s: *mut IdclassSemigroup) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Smallest positive element of the semigroup.
///
/// # Safety
/// `s` must be a live semigroup handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_multiplicity(
    s: *const IdclassSemigroup,
    out: *mut u64,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        out!(out, s.0.multiplicity());
        IdclassStatus::Ok
    })
}

/// Largest integer not in the semigroup (-1 for the naturals).
///
/// # Safety
/// `s` must be a live semigroup handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_frobenius(
    s: *const IdclassSemigroup,
    out: *mut i64,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        out!(out, s.0.frobenius());
        IdclassStatus::Ok
    })
}

/// Number of gaps.
///
/// # Safety
/// `s` must be a live semigroup handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_genus(
    s: *const IdclassSemigroup,
    out: *mut u64,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        out!(out, s.0.genus());
        IdclassStatus::Ok
    })
}

/// Membership test; negative integers are never members.
///
/// # Safety
/// `s` must be a live semigroup handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_contains(
    s: *const IdclassSemigroup,
    x: i64,
    out: *mut bool,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        out!(out, s.0.contains(x));
        IdclassStatus::Ok
    })
}

/// Minimal generating set (buffer call, see the module docs).
///
/// # Safety
/// `s` must be a live handle; `buf` null or `cap` writable u64 slots;
/// `written` writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_min_generators(
    s: *const IdclassSemigroup,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        fill_u64(buf, cap, written, s.0.min_generators())
    })
}

/// Gap set (buffer call).
///
/// # Safety
/// Same contract as [`idclass_semigroup_min_generators`].
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_gaps(
    s: *const IdclassSemigroup,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        fill_u64(buf, cap, written, s.0.gaps())
    })
}

/// Apéry set with respect to the multiplicity (buffer call).
///
/// # Safety
/// Same contract as [`idclass_semigroup_min_generators`].
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_apery(
    s: *const IdclassSemigroup,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        fill_u64(buf, cap, written, s.0.apery())
    })
}

/// Kunz coordinates (buffer call).
///
/// # Safety
/// Same contract as [`idclass_semigroup_min_generators`].
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_kunz(
    s: *const IdclassSemigroup,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        fill_u64(buf, cap, written, s.0.kunz())
    })
}

/// Pseudo-Frobenius numbers (buffer call); fails on the naturals.
///
/// # Safety
/// Same contract as [`idclass_semigroup_min_generators`].
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_pseudo_frobenius(
    s: *const IdclassSemigroup,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        match s.0.pseudo_frobenius() {
            Ok(pf) => fill_u64(buf, cap, written, &pf),
            Err(e) => e.into(),
        }
    })
}

/// Special gaps (buffer call); fails on the naturals.
///
/// # Safety
/// Same contract as [`idclass_semigroup_min_generators`].
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_special_gaps(
    s: *const IdclassSemigroup,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        match s.0.special_gaps() {
            Ok(sg) => fill_u64(buf, cap, written, &sg),
            Err(e) => e.into(),
        }
    })
}

/// Full invariant record as a JSON document. The returned string must be
/// released with [`idclass_string_free`].
///
/// # Safety
/// `s` must be a live semigroup handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_semigroup_report_json(
    s: *const IdclassSemigroup,
    out: *mut *mut c_char,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        if out.is_null() {
            return IdclassStatus::NullArgument;
        }
        let doc = idclass::report::SemigroupReport::of(&s.0);
        let json = idclass::report::to_json(&doc);
        match CString::new(json) {
            Ok(text) => {
                unsafe { *out = text.into_raw() };
                IdclassStatus::Ok
            }
            Err(_) => IdclassStatus::InternalError,
        }
    })
}

/// Releases a string returned by this library. A null pointer is ignored.
///
/// # Safety
/// `text` must be null or a pointer previously returned by
/// [`idclass_semigroup_report_json`] that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn idclass_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

/// Enumerates the ideal class monoid of `s`, builds its addition table and
/// classifies every element.
///
/// # Safety
/// `s` must be a live semigroup handle and `out` a valid location for a
/// pointer. The caller owns the handle and must release it with
/// [`idclass_monoid_free`].
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_new(
    s: *const IdclassSemigroup,
    out: *mut *mut IdclassMonoid,
) -> IdclassStatus {
    guard(|| {
        let s = deref!(s);
        if out.is_null() {
            return IdclassStatus::NullArgument;
        }
        let monoid = ClassMonoid::with_table(&s.0);
        let classifications = match monoid.classify() {
            Ok(c) => c,
            Err(e) => return e.into(),
        };
        let handle = IdclassMonoid {
            monoid,
            classifications,
        };
        unsafe { *out = Box::into_raw(Box::new(handle)) };
        IdclassStatus::Ok
    })
}

/// Releases a monoid handle. A null pointer is ignored.
///
/// # Safety
/// `m` must be null or a pointer previously returned by
/// [`idclass_monoid_new`] that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_free(m: *mut IdclassMonoid) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

/// Number of ideal classes. Index 0 is the identity (the semigroup itself);
/// the largest index is the absorbing element (the naturals).
///
/// # Safety
/// `m` must be a live monoid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_len(
    m: *const IdclassMonoid,
    out: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        out!(out, m.monoid.len());
        IdclassStatus::Ok
    })
}

/// Index of the sum of the ideals at `i` and `j`.
///
/// # Safety
/// `m` must be a live monoid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_add(
    m: *const IdclassMonoid,
    i: usize,
    j: usize,
    out: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        if i >= m.monoid.len() || j >= m.monoid.len() {
            return IdclassStatus::IndexOutOfBounds;
        }
        match m.monoid.add(i, j) {
            Ok(t) => {
                out!(out, t);
                IdclassStatus::Ok
            }
            Err(e) => e.into(),
        }
    })
}

/// Whether the ideal at `i` is below the ideal at `j` in the algebraic
/// preorder (some k exists with i + k = j).
///
/// # Safety
/// `m` must be a live monoid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_preceq(
    m: *const IdclassMonoid,
    i: usize,
    j: usize,
    out: *mut bool,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        if i >= m.monoid.len() || j >= m.monoid.len() {
            return IdclassStatus::IndexOutOfBounds;
        }
        match m.monoid.preceq(i, j) {
            Ok(b) => {
                out!(out, b);
                IdclassStatus::Ok
            }
            Err(e) => e.into(),
        }
    })
}

/// Whether the ideal at `i` is contained in the ideal at `j`.
///
/// # Safety
/// `m` must be a live monoid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_includes(
    m: *const IdclassMonoid,
    i: usize,
    j: usize,
    out: *mut bool,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        if i >= m.monoid.len() || j >= m.monoid.len() {
            return IdclassStatus::IndexOutOfBounds;
        }
        out!(out, m.monoid.includes(i, j));
        IdclassStatus::Ok
    })
}

/// Apéry tuple of the ideal at `idx` (buffer call).
///
/// # Safety
/// `m` must be a live monoid handle; buffer contract as in the module docs.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_ideal_apery(
    m: *const IdclassMonoid,
    idx: usize,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        if idx >= m.monoid.len() {
            return IdclassStatus::IndexOutOfBounds;
        }
        fill_u64(buf, cap, written, m.monoid.ideal(idx).apery())
    })
}

/// Minimal generating set of the ideal at `idx` (buffer call).
///
/// # Safety
/// `m` must be a live monoid handle; buffer contract as in the module docs.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_ideal_generators(
    m: *const IdclassMonoid,
    idx: usize,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        if idx >= m.monoid.len() {
            return IdclassStatus::IndexOutOfBounds;
        }
        fill_u64(buf, cap, written, m.monoid.ideal(idx).min_generators())
    })
}

/// Classification flags and invariants of the ideal at `idx`.
///
/// # Safety
/// `m` must be a live monoid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_classification(
    m: *const IdclassMonoid,
    idx: usize,
    out: *mut IdclassClassification,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        if idx >= m.monoid.len() {
            return IdclassStatus::IndexOutOfBounds;
        }
        let c = m.classifications[idx];
        out!(
            out,
            IdclassClassification {
                irreducible: c.irreducible,
                atom: c.atom,
                quark: c.quark,
                prime: c.prime,
                idempotent: c.idempotent,
                reduction_number: c.reduction_number,
                generator_count: c.nu,
            }
        );
        IdclassStatus::Ok
    })
}

/// Exact width of the inclusion order on the monoid.
///
/// # Safety
/// `m` must be a live monoid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idclass_monoid_width_inclusion(
    m: *const IdclassMonoid,
    out: *mut usize,
) -> IdclassStatus {
    guard(|| {
        let m = deref!(m);
        out!(out, m.monoid.width_inclusion());
        IdclassStatus::Ok
    })
}

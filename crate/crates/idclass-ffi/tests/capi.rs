//! Exercises the C ABI from Rust: handle lifecycle, buffer protocol, status
//! codes and a full pass over a small monoid.

use std::ptr;

use idclass_ffi::*;

fn make(gens: &[u64]) -> *mut IdclassSemigroup {
    let mut handle: *mut IdclassSemigroup = ptr::null_mut();
    let status =
        unsafe { idclass_semigroup_from_generators(gens.as_ptr(), gens.len(), &mut handle) };
    assert_eq!(status, IdclassStatus::Ok);
    assert!(!handle.is_null());
    handle
}

#[test]
fn semigroup_lifecycle_and_invariants() {
    let s = make(&[3, 5, 7]);
    unsafe {
        let mut m = 0u64;
        assert_eq!(idclass_semigroup_multiplicity(s, &mut m), IdclassStatus::Ok);
        assert_eq!(m, 3);
        let mut f = 0i64;
        assert_eq!(idclass_semigroup_frobenius(s, &mut f), IdclassStatus::Ok);
        assert_eq!(f, 4);
        let mut g = 0u64;
        assert_eq!(idclass_semigroup_genus(s, &mut g), IdclassStatus::Ok);
        assert_eq!(g, 3);
        let mut member = true;
        assert_eq!(
            idclass_semigroup_contains(s, 4, &mut member),
            IdclassStatus::Ok
        );
        assert!(!member);
        assert_eq!(
            idclass_semigroup_contains(s, -1, &mut member),
            IdclassStatus::Ok
        );
        assert!(!member);

        // buffer protocol: query, too small, exact
        let mut needed = 0usize;
        assert_eq!(
            idclass_semigroup_gaps(s, ptr::null_mut(), 0, &mut needed),
            IdclassStatus::Ok
        );
        assert_eq!(needed, 3);
        let mut short = [0u64; 2];
        assert_eq!(
            idclass_semigroup_gaps(s, short.as_mut_ptr(), short.len(), &mut needed),
            IdclassStatus::BufferTooSmall
        );
        let mut gaps = [0u64; 3];
        assert_eq!(
            idclass_semigroup_gaps(s, gaps.as_mut_ptr(), gaps.len(), &mut needed),
            IdclassStatus::Ok
        );
        assert_eq!(gaps, [1, 2, 4]);

        let mut pf = [0u64; 2];
        assert_eq!(
            idclass_semigroup_pseudo_frobenius(s, pf.as_mut_ptr(), pf.len(), &mut needed),
            IdclassStatus::Ok
        );
        assert_eq!(pf, [2, 4]);

        idclass_semigroup_free(s);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut handle: *mut IdclassSemigroup = ptr::null_mut();
        let gens = [4u64, 6];
        assert_eq!(
            idclass_semigroup_from_generators(gens.as_ptr(), 2, &mut handle),
            IdclassStatus::NotNumerical
        );
        let zeros = [0u64];
        assert_eq!(
            idclass_semigroup_from_generators(zeros.as_ptr(), 1, &mut handle),
            IdclassStatus::InvalidArgument
        );
        assert_eq!(
            idclass_semigroup_from_generators(ptr::null(), 0, &mut handle),
            IdclassStatus::NullArgument
        );

        // the naturals have no pseudo-Frobenius numbers
        let ones = [1u64];
        assert_eq!(
            idclass_semigroup_from_generators(ones.as_ptr(), 1, &mut handle),
            IdclassStatus::Ok
        );
        let mut needed = 0usize;
        assert_eq!(
            idclass_semigroup_pseudo_frobenius(handle, ptr::null_mut(), 0, &mut needed),
            IdclassStatus::UndefinedForNaturals
        );
        let mut m = 0u64;
        assert_eq!(
            idclass_semigroup_multiplicity(ptr::null(), &mut m),
            IdclassStatus::NullArgument
        );
        idclass_semigroup_free(handle);
        idclass_semigroup_free(ptr::null_mut());
    }
}

#[test]
fn monoid_roundtrip() {
    let s = make(&[3, 5, 7]);
    unsafe {
        let mut monoid: *mut IdclassMonoid = ptr::null_mut();
        assert_eq!(idclass_monoid_new(s, &mut monoid), IdclassStatus::Ok);
        let mut n = 0usize;
        assert_eq!(idclass_monoid_len(monoid, &mut n), IdclassStatus::Ok);
        assert_eq!(n, 6);

        // identity row and absorbing row
        for j in 0..n {
            let mut t = usize::MAX;
            assert_eq!(idclass_monoid_add(monoid, 0, j, &mut t), IdclassStatus::Ok);
            assert_eq!(t, j);
            assert_eq!(
                idclass_monoid_add(monoid, n - 1, j, &mut t),
                IdclassStatus::Ok
            );
            assert_eq!(t, n - 1);
        }
        let mut t = 0usize;
        assert_eq!(
            idclass_monoid_add(monoid, n, 0, &mut t),
            IdclassStatus::IndexOutOfBounds
        );

        // the identity is idempotent but not a quark; everything contains it
        let mut c = IdclassClassification {
            irreducible: false,
            atom: false,
            quark: false,
            prime: false,
            idempotent: false,
            reduction_number: 99,
            generator_count: 0,
        };
        assert_eq!(
            idclass_monoid_classification(monoid, 0, &mut c),
            IdclassStatus::Ok
        );
        assert!(c.idempotent && !c.quark && c.reduction_number == 0);
        let mut below = false;
        for j in 0..n {
            assert_eq!(
                idclass_monoid_includes(monoid, 0, j, &mut below),
                IdclassStatus::Ok
            );
            assert!(below, "the identity sits below every ideal");
            assert_eq!(
                idclass_monoid_preceq(monoid, 0, j, &mut below),
                IdclassStatus::Ok
            );
            assert!(below);
        }

        // quark count over the whole monoid: pseudo-symmetric, so exactly two
        let mut quarks = 0;
        for i in 0..n {
            assert_eq!(
                idclass_monoid_classification(monoid, i, &mut c),
                IdclassStatus::Ok
            );
            if c.quark {
                quarks += 1;
            }
        }
        assert_eq!(quarks, 2);

        let mut width = 0usize;
        assert_eq!(
            idclass_monoid_width_inclusion(monoid, &mut width),
            IdclassStatus::Ok
        );
        assert_eq!(width, 2);

        // the apery tuple of the identity is the semigroup's own
        let mut apery = [0u64; 3];
        let mut needed = 0usize;
        assert_eq!(
            idclass_monoid_ideal_apery(monoid, 0, apery.as_mut_ptr(), 3, &mut needed),
            IdclassStatus::Ok
        );
        assert_eq!(apery, [0, 7, 5]);
        let mut gens = [0u64; 3];
        assert_eq!(
            idclass_monoid_ideal_generators(monoid, n - 1, gens.as_mut_ptr(), 3, &mut needed),
            IdclassStatus::Ok
        );
        assert_eq!(&gens[..needed], &[0, 1, 2]);

        idclass_monoid_free(monoid);
        idclass_semigroup_free(s);
    }
}

#[test]
fn json_report() {
    let s = make(&[5, 6, 8, 9]);
    unsafe {
        let mut text: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            idclass_semigroup_report_json(s, &mut text),
            IdclassStatus::Ok
        );
        let json = std::ffi::CStr::from_ptr(text).to_str().unwrap().to_owned();
        assert!(json.contains("\"genus\": 5"));
        assert!(json.contains("\"kunz\""));
        idclass_string_free(text);
        idclass_semigroup_free(s);
    }
}

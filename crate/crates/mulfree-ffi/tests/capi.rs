//! Exercises the C surface the way an external consumer links it: through
//! the exported symbols only, with handle lifecycles managed by hand.

use std::ffi::CStr;
use std::ptr;

use mulfree_ffi::{
    mf_hermite_new, mf_moments_free, mf_moments_from_coeffs, mf_moments_get, mf_poly_convolve,
    mf_poly_degree, mf_poly_free, mf_poly_heat, mf_poly_to_json, mf_string_free, MfMoments,
    MfPoly, MfStatus,
};

/// Coefficient moments `m_1 ..= m_k` of a live handle, as f64 pairs.
unsafe fn moments(p: *const MfPoly, k_max: usize) -> Vec<(f64, f64)> {
    let mut handle: *mut MfMoments = ptr::null_mut();
    assert_eq!(unsafe { mf_moments_from_coeffs(p, k_max, &mut handle) }, MfStatus::Ok);
    let mut out = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(unsafe { mf_moments_get(handle, k, &mut re, &mut im) }, MfStatus::Ok);
        out.push((re, im));
    }
    unsafe { mf_moments_free(handle) };
    out
}

fn rel_gap(a: (f64, f64), b: (f64, f64)) -> f64 {
    let diff = ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
    let scale = (b.0 * b.0 + b.1 * b.1).sqrt().max(1e-300);
    diff / scale
}

#[test]
fn heat_composition_matches_the_direct_member() {
    let n = 16;
    let mut base: *mut MfPoly = ptr::null_mut();
    assert_eq!(unsafe { mf_hermite_new(n, 0.25, 0.0, 0, &mut base) }, MfStatus::Ok);
    // The order-n heat operator at time s advances the family parameter by
    // s/n, so s = 8 moves the degree-16 member from 0.25 to exactly 0.75.
    let mut evolved: *mut MfPoly = ptr::null_mut();
    assert_eq!(unsafe { mf_poly_heat(base, 8.0, 0.0, n, &mut evolved) }, MfStatus::Ok);
    let mut direct: *mut MfPoly = ptr::null_mut();
    assert_eq!(unsafe { mf_hermite_new(n, 0.75, 0.0, 0, &mut direct) }, MfStatus::Ok);

    let lhs = unsafe { moments(evolved, 4) };
    let rhs = unsafe { moments(direct, 4) };
    for (a, b) in lhs.iter().zip(&rhs) {
        assert!(rel_gap(*a, *b) < 1e-12, "heat composition drifted: {a:?} vs {b:?}");
    }

    unsafe { mf_poly_free(base) };
    unsafe { mf_poly_free(evolved) };
    unsafe { mf_poly_free(direct) };
}

#[test]
fn convolution_adds_heat_times() {
    let n = 12;
    let mut at_half: *mut MfPoly = ptr::null_mut();
    let mut at_quarter: *mut MfPoly = ptr::null_mut();
    let mut at_sum: *mut MfPoly = ptr::null_mut();
    assert_eq!(unsafe { mf_hermite_new(n, 0.5, 0.0, 0, &mut at_half) }, MfStatus::Ok);
    assert_eq!(unsafe { mf_hermite_new(n, 0.25, 0.0, 0, &mut at_quarter) }, MfStatus::Ok);
    assert_eq!(unsafe { mf_hermite_new(n, 0.75, 0.0, 0, &mut at_sum) }, MfStatus::Ok);

    let mut convolved: *mut MfPoly = ptr::null_mut();
    assert_eq!(
        unsafe { mf_poly_convolve(at_half, at_quarter, n, &mut convolved) },
        MfStatus::Ok
    );

    let lhs = unsafe { moments(convolved, 3) };
    let rhs = unsafe { moments(at_sum, 3) };
    for (a, b) in lhs.iter().zip(&rhs) {
        assert!(rel_gap(*a, *b) < 1e-12, "semigroup drifted: {a:?} vs {b:?}");
    }

    unsafe { mf_poly_free(at_half) };
    unsafe { mf_poly_free(at_quarter) };
    unsafe { mf_poly_free(at_sum) };
    unsafe { mf_poly_free(convolved) };
}

#[test]
fn json_export_parses_in_the_host_crate() {
    let mut poly: *mut MfPoly = ptr::null_mut();
    assert_eq!(unsafe { mf_hermite_new(9, -0.5, 0.0, 0, &mut poly) }, MfStatus::Ok);
    let mut text: *mut std::os::raw::c_char = ptr::null_mut();
    assert_eq!(unsafe { mf_poly_to_json(poly, &mut text) }, MfStatus::Ok);

    let json = unsafe { CStr::from_ptr(text) }.to_str().expect("utf-8 export");
    let parsed = mulfree::Polynomial::from_json_str(json).expect("parseable export");
    assert_eq!(parsed.degree(), 9);

    let mut degree = 0usize;
    assert_eq!(unsafe { mf_poly_degree(poly, &mut degree) }, MfStatus::Ok);
    assert_eq!(degree, parsed.degree());

    unsafe { mf_string_free(text) };
    unsafe { mf_poly_free(poly) };
}

#[test]
fn error_paths_leave_out_pointers_untouched() {
    // The sentinel is never dereferenced; it only detects stray writes.
    let sentinel = 0x5eed_usize as *mut MfPoly;
    let mut out = sentinel;
    assert_eq!(
        unsafe { mf_hermite_new(0, 1.0, 0.0, 0, &mut out) },
        MfStatus::InvalidParameter
    );
    assert_eq!(out, sentinel);

    let mut degree = 7777usize;
    assert_eq!(
        unsafe { mf_poly_degree(ptr::null(), &mut degree) },
        MfStatus::NullArgument
    );
    assert_eq!(degree, 7777);
}

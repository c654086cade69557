//! C interface to the multiplicative polynomial library.
//!
//! Every object crosses the boundary as an opaque handle created by an
//! `mf_*_new`-style constructor and released by the matching `mf_*_free`.
//! Every fallible function returns an [`MfStatus`] and writes its result
//! through an out-pointer, which is touched only on `Ok`. Passing a null
//! pointer where an object is expected yields `NullArgument` instead of
//! undefined behavior; passing a dangling or already-freed handle is
//! undefined behavior, as in any C API. Internal invariant violations abort
//! the process rather than unwind across the boundary.
//!
//! The build script regenerates `include/mulfree.h` from this file.

use std::ffi::c_char;

use mulfree::limits::{mu_moments, nu_moments};
use mulfree::moments::{moments_from_coeffs, MomentSequence};
use mulfree::poly::{
    finite_free_mult_convolve, hermite_mult, laguerre_mult, mult_heat_apply,
    xdx_plus_b_power_apply, Polynomial,
};
use mulfree::roots::{find_roots, RootError, RootSet};
use mulfree::scalar::{required_bits, BigComplex, BigReal};

/// Aberth sweep budget per precision stage when the caller passes 0.
const DEFAULT_MAX_SWEEPS: usize = 800;

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MfStatus {
    /// Success; out-parameters are filled in.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A parameter lies outside the function's domain.
    InvalidParameter = 2,
    /// The root solver exhausted its sweep budget.
    NonConvergence = 3,
    /// An index exceeded the container's size.
    OutOfRange = 4,
    /// An internal cross-check between independent computation routes failed.
    NumericFailure = 5,
}

/// A polynomial with extended-precision complex coefficients.
pub struct MfPoly {
    inner: Polynomial,
}

/// A solved root set together with its residuals and solver record.
pub struct MfRoots {
    inner: RootSet,
}

/// A truncated moment sequence `m_0 ..= m_k`.
pub struct MfMoments {
    inner: MomentSequence,
}

fn leak<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Writes `value` through `out` unless `out` is null.
unsafe fn put<T>(out: *mut T, value: T) -> MfStatus {
    if out.is_null() {
        return MfStatus::NullArgument;
    }
    unsafe { out.write(value) };
    MfStatus::Ok
}

fn root_status(err: RootError) -> MfStatus {
    match err {
        RootError::NonConvergence { .. } => MfStatus::NonConvergence,
        _ => MfStatus::InvalidParameter,
    }
}

fn auto_hermite_bits(n: usize, s_mag: f64, precision_bits: u32) -> u32 {
    if precision_bits == 0 {
        required_bits(n, s_mag)
    } else {
        precision_bits
    }
}

fn auto_laguerre_bits(n: usize, b_mag: f64, c: u64, precision_bits: u32) -> u32 {
    if precision_bits == 0 {
        // Coefficient magnitudes reach binom(n,j) (n + |b|)^c; the density
        // c/n times log(2 + n + |b|) plays the role of the time magnitude.
        let density = c as f64 / n.max(1) as f64;
        required_bits(n, density * (2.0 + n as f64 + b_mag).ln())
    } else {
        precision_bits
    }
}

/// Returns a static, null-terminated description of a status code.
#[no_mangle]
pub extern "C" fn mf_status_message(status: MfStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        MfStatus::Ok => b"ok\0",
        MfStatus::NullArgument => b"a required pointer argument was null\0",
        MfStatus::InvalidParameter => b"a parameter lies outside the function's domain\0",
        MfStatus::NonConvergence => b"the root solver exhausted its sweep budget\0",
        MfStatus::OutOfRange => b"an index exceeded the container's size\0",
        MfStatus::NumericFailure => b"an internal consistency cross-check failed\0",
    };
    text.as_ptr() as *const c_char
}

/// Mantissa width sufficient for degree-`n` work at time magnitude `s_mag`.
#[no_mangle]
pub extern "C" fn mf_required_bits(n: usize, s_mag: f64) -> u32 {
    required_bits(n, s_mag)
}

/// Creates the degree-`n` member of the time-`s` heat family. Passing 0 for
/// `precision_bits` selects a degree-dependent width.
///
/// # Safety
///
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_hermite_new(
    n: usize,
    s_re: f64,
    s_im: f64,
    precision_bits: u32,
    out: *mut *mut MfPoly,
) -> MfStatus {
    if n == 0 {
        return MfStatus::InvalidParameter;
    }
    let s_mag = s_re.hypot(s_im);
    if !s_mag.is_finite() {
        return MfStatus::InvalidParameter;
    }
    let prec = auto_hermite_bits(n, s_mag, precision_bits);
    let s = BigComplex::from_f64s(s_re, s_im, prec);
    unsafe { put(out, leak(MfPoly { inner: hermite_mult(n, &s, prec) })) }
}

/// Creates the degree-`n` member of the shift family with shift `b` and
/// exponent `c`. Passing 0 for `precision_bits` selects a degree-dependent
/// width. `b = -n` is rejected for `c >= 1`.
///
/// # Safety
///
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_laguerre_new(
    n: usize,
    b_re: f64,
    b_im: f64,
    c: u64,
    precision_bits: u32,
    out: *mut *mut MfPoly,
) -> MfStatus {
    if n == 0 {
        return MfStatus::InvalidParameter;
    }
    let b_mag = b_re.hypot(b_im);
    if !b_mag.is_finite() {
        return MfStatus::InvalidParameter;
    }
    let prec = auto_laguerre_bits(n, b_mag, c, precision_bits);
    let b = BigComplex::from_f64s(b_re, b_im, prec);
    match laguerre_mult(n, &b, c, prec) {
        Ok(inner) => unsafe { put(out, leak(MfPoly { inner })) },
        Err(_) => MfStatus::InvalidParameter,
    }
}

/// Releases a polynomial handle. Null is ignored.
///
/// # Safety
///
/// `p` must be null or a handle returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn mf_poly_free(p: *mut MfPoly) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Writes the degree of `p`.
///
/// # Safety
///
/// `p` must be a live handle; `out` must be valid for writing one `usize`.
#[no_mangle]
pub unsafe extern "C" fn mf_poly_degree(p: *const MfPoly, out: *mut usize) -> MfStatus {
    let Some(poly) = (unsafe { p.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    unsafe { put(out, poly.inner.degree()) }
}

/// Order-`order` finite free multiplicative convolution of `a` and `b`.
/// Both degrees must be at most `order`.
///
/// # Safety
///
/// `a` and `b` must be live handles; `out` must be valid for writing one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_poly_convolve(
    a: *const MfPoly,
    b: *const MfPoly,
    order: usize,
    out: *mut *mut MfPoly,
) -> MfStatus {
    let (Some(a), Some(b)) = (unsafe { a.as_ref() }, unsafe { b.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    match finite_free_mult_convolve(&a.inner, &b.inner, order) {
        Ok(inner) => unsafe { put(out, leak(MfPoly { inner })) },
        Err(_) => MfStatus::InvalidParameter,
    }
}

/// Applies the order-`order` multiplicative heat operator at time `s`.
/// The degree of `p` must be at most `order`.
///
/// # Safety
///
/// `p` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_poly_heat(
    p: *const MfPoly,
    s_re: f64,
    s_im: f64,
    order: usize,
    out: *mut *mut MfPoly,
) -> MfStatus {
    let Some(poly) = (unsafe { p.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    let s = BigComplex::from_f64s(s_re, s_im, poly.inner.prec());
    match mult_heat_apply(&poly.inner, &s, order) {
        Ok(inner) => unsafe { put(out, leak(MfPoly { inner })) },
        Err(_) => MfStatus::InvalidParameter,
    }
}

/// Applies the shift operator with shift `b` and exponent `c`.
///
/// # Safety
///
/// `p` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_poly_shift(
    p: *const MfPoly,
    b_re: f64,
    b_im: f64,
    c: u64,
    out: *mut *mut MfPoly,
) -> MfStatus {
    let Some(poly) = (unsafe { p.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    let b = BigComplex::from_f64s(b_re, b_im, poly.inner.prec());
    unsafe { put(out, leak(MfPoly { inner: xdx_plus_b_power_apply(&poly.inner, &b, c) })) }
}

/// Serializes `p` as a JSON document preserving full precision. The returned
/// string belongs to the caller; release it with [`mf_string_free`].
///
/// # Safety
///
/// `p` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_poly_to_json(p: *const MfPoly, out: *mut *mut c_char) -> MfStatus {
    let Some(poly) = (unsafe { p.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    let json = poly.inner.to_json_string();
    let bytes = json.into_bytes();
    // JSON never contains interior NULs; append the terminator by hand so no
    // CString reallocation scan is needed.
    let mut buffer = Vec::with_capacity(bytes.len() + 1);
    buffer.extend_from_slice(&bytes);
    buffer.push(0);
    let boxed = buffer.into_boxed_slice();
    unsafe { put(out, Box::into_raw(boxed) as *mut c_char) }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
///
/// `s` must be null or a string returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn mf_string_free(s: *mut c_char) {
    if s.is_null() {
        return;
    }
    let mut len = 0usize;
    while unsafe { *s.add(len) } != 0 {
        len += 1;
    }
    let slice = std::ptr::slice_from_raw_parts_mut(s as *mut u8, len + 1);
    drop(unsafe { Box::from_raw(slice) });
}

/// Finds all roots of `p` with multiplicity. Passing 0 for `max_sweeps`
/// selects the default per-stage budget.
///
/// # Safety
///
/// `p` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_poly_find_roots(
    p: *const MfPoly,
    max_sweeps: usize,
    out: *mut *mut MfRoots,
) -> MfStatus {
    let Some(poly) = (unsafe { p.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    let budget = if max_sweeps == 0 { DEFAULT_MAX_SWEEPS } else { max_sweeps };
    match find_roots(&poly.inner, None, budget) {
        Ok(inner) => unsafe { put(out, leak(MfRoots { inner })) },
        Err(err) => root_status(err),
    }
}

/// Writes the number of roots in `r`.
///
/// # Safety
///
/// `r` must be a live handle; `out` must be valid for writing one `usize`.
#[no_mangle]
pub unsafe extern "C" fn mf_roots_count(r: *const MfRoots, out: *mut usize) -> MfStatus {
    let Some(roots) = (unsafe { r.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    unsafe { put(out, roots.inner.roots.len()) }
}

/// Writes root `index` and its residual, rounded to double precision.
///
/// # Safety
///
/// `r` must be a live handle; `re`, `im`, and `residual` must each be valid
/// for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn mf_roots_get(
    r: *const MfRoots,
    index: usize,
    re: *mut f64,
    im: *mut f64,
    residual: *mut f64,
) -> MfStatus {
    let Some(roots) = (unsafe { r.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    if re.is_null() || im.is_null() || residual.is_null() {
        return MfStatus::NullArgument;
    }
    let Some(root) = roots.inner.roots.get(index) else {
        return MfStatus::OutOfRange;
    };
    let (root_re, root_im) = root.to_f64s();
    unsafe {
        re.write(root_re);
        im.write(root_im);
        residual.write(roots.inner.residuals[index].to_f64());
    }
    MfStatus::Ok
}

/// Writes the precision in bits and the total Aberth sweeps of the solve.
///
/// # Safety
///
/// `r` must be a live handle; `precision_bits` and `sweeps` must each be
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn mf_roots_record(
    r: *const MfRoots,
    precision_bits: *mut u32,
    sweeps: *mut usize,
) -> MfStatus {
    let Some(roots) = (unsafe { r.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    if precision_bits.is_null() || sweeps.is_null() {
        return MfStatus::NullArgument;
    }
    unsafe {
        precision_bits.write(roots.inner.precision_bits);
        sweeps.write(roots.inner.sweeps);
    }
    MfStatus::Ok
}

/// Releases a root-set handle. Null is ignored.
///
/// # Safety
///
/// `r` must be null or a handle returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn mf_roots_free(r: *mut MfRoots) {
    if !r.is_null() {
        drop(unsafe { Box::from_raw(r) });
    }
}

/// Mean power sums `m_1 ..= m_k` of the roots of `p`, computed from the
/// coefficients by Newton's identities without solving for the roots.
///
/// # Safety
///
/// `p` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_moments_from_coeffs(
    p: *const MfPoly,
    k_max: usize,
    out: *mut *mut MfMoments,
) -> MfStatus {
    let Some(poly) = (unsafe { p.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    match moments_from_coeffs(&poly.inner, k_max) {
        Ok(inner) => unsafe { put(out, leak(MfMoments { inner })) },
        Err(_) => MfStatus::InvalidParameter,
    }
}

/// Moments `m_1 ..= m_k` of the multiplicative normal law at time `s`,
/// cross-checked across its three closed-form routes. Passing 0 for
/// `precision_bits` selects 256.
///
/// # Safety
///
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_mu_moments(
    s_re: f64,
    s_im: f64,
    k_max: usize,
    precision_bits: u32,
    out: *mut *mut MfMoments,
) -> MfStatus {
    let prec = if precision_bits == 0 { 256 } else { precision_bits };
    let s = BigComplex::from_f64s(s_re, s_im, prec);
    match mu_moments(&s, k_max, prec) {
        Ok(inner) => unsafe { put(out, leak(MfMoments { inner })) },
        Err(_) => MfStatus::NumericFailure,
    }
}

/// Moments `m_1 ..= m_k` of the multiplicative Poisson law with shift
/// density `beta` and exponent density `gamma`, cross-checked across its two
/// closed-form routes. `beta = -1` and `gamma < 0` are rejected. Passing 0
/// for `precision_bits` selects 256.
///
/// # Safety
///
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mf_nu_moments(
    beta_re: f64,
    beta_im: f64,
    gamma: f64,
    k_max: usize,
    precision_bits: u32,
    out: *mut *mut MfMoments,
) -> MfStatus {
    if gamma < 0.0 || !gamma.is_finite() {
        return MfStatus::InvalidParameter;
    }
    let prec = if precision_bits == 0 { 256 } else { precision_bits };
    let beta = BigComplex::from_f64s(beta_re, beta_im, prec);
    let gamma = BigReal::from_f64(gamma, prec);
    match nu_moments(&beta, &gamma, k_max, prec) {
        Ok(inner) => unsafe { put(out, leak(MfMoments { inner })) },
        Err(err) => match err {
            mulfree::limits::LimitError::RouteMismatch { .. } => MfStatus::NumericFailure,
            _ => MfStatus::InvalidParameter,
        },
    }
}

/// Writes the highest order `k` stored in `m`.
///
/// # Safety
///
/// `m` must be a live handle; `out` must be valid for writing one `usize`.
#[no_mangle]
pub unsafe extern "C" fn mf_moments_order(m: *const MfMoments, out: *mut usize) -> MfStatus {
    let Some(moments) = (unsafe { m.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    unsafe { put(out, moments.inner.k_max()) }
}

/// Writes moment `k` (with `m_0 = 1` at `k = 0`), rounded to double
/// precision.
///
/// # Safety
///
/// `m` must be a live handle; `re` and `im` must each be valid for writing
/// one `double`.
#[no_mangle]
pub unsafe extern "C" fn mf_moments_get(
    m: *const MfMoments,
    k: usize,
    re: *mut f64,
    im: *mut f64,
) -> MfStatus {
    let Some(moments) = (unsafe { m.as_ref() }) else {
        return MfStatus::NullArgument;
    };
    if re.is_null() || im.is_null() {
        return MfStatus::NullArgument;
    }
    if k > moments.inner.k_max() {
        return MfStatus::OutOfRange;
    }
    let (moment_re, moment_im) = moments.inner.moment(k).to_f64s();
    unsafe {
        re.write(moment_re);
        im.write(moment_im);
    }
    MfStatus::Ok
}

/// Releases a moment-sequence handle. Null is ignored.
///
/// # Safety
///
/// `m` must be null or a handle returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn mf_moments_free(m: *mut MfMoments) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn hermite(n: usize, s: f64) -> *mut MfPoly {
        let mut poly = ptr::null_mut();
        let status = unsafe { mf_hermite_new(n, s, 0.0, 0, &mut poly) };
        assert_eq!(status, MfStatus::Ok);
        poly
    }

    #[test]
    fn hermite_handle_round_trip() {
        let poly = hermite(12, -1.0);
        let mut degree = 0usize;
        assert_eq!(unsafe { mf_poly_degree(poly, &mut degree) }, MfStatus::Ok);
        assert_eq!(degree, 12);
        unsafe { mf_poly_free(poly) };
    }

    #[test]
    fn null_arguments_are_reported_not_dereferenced() {
        let mut degree = 0usize;
        assert_eq!(
            unsafe { mf_poly_degree(ptr::null(), &mut degree) },
            MfStatus::NullArgument
        );
        let poly = hermite(4, 1.0);
        assert_eq!(unsafe { mf_poly_degree(poly, ptr::null_mut()) }, MfStatus::NullArgument);
        unsafe { mf_poly_free(poly) };
        unsafe { mf_poly_free(ptr::null_mut()) };
        unsafe { mf_roots_free(ptr::null_mut()) };
        unsafe { mf_moments_free(ptr::null_mut()) };
        unsafe { mf_string_free(ptr::null_mut()) };
    }

    #[test]
    fn degenerate_shift_is_rejected() {
        let mut poly = ptr::null_mut();
        let status = unsafe { mf_laguerre_new(6, -6.0, 0.0, 2, 0, &mut poly) };
        assert_eq!(status, MfStatus::InvalidParameter);
        assert!(poly.is_null());
    }

    #[test]
    fn roots_of_the_negative_time_member_sit_on_the_circle() {
        let poly = hermite(10, -1.0);
        let mut roots = ptr::null_mut();
        assert_eq!(unsafe { mf_poly_find_roots(poly, 0, &mut roots) }, MfStatus::Ok);
        let mut count = 0usize;
        assert_eq!(unsafe { mf_roots_count(roots, &mut count) }, MfStatus::Ok);
        assert_eq!(count, 10);
        for index in 0..count {
            let (mut re, mut im, mut residual) = (0.0f64, 0.0f64, 0.0f64);
            assert_eq!(
                unsafe { mf_roots_get(roots, index, &mut re, &mut im, &mut residual) },
                MfStatus::Ok
            );
            assert!((re.hypot(im) - 1.0).abs() < 1e-12);
            assert!(residual < 1e-12);
        }
        let (mut re, mut im, mut residual) = (0.0f64, 0.0f64, 0.0f64);
        assert_eq!(
            unsafe { mf_roots_get(roots, count, &mut re, &mut im, &mut residual) },
            MfStatus::OutOfRange
        );
        let (mut bits, mut sweeps) = (0u32, 0usize);
        assert_eq!(unsafe { mf_roots_record(roots, &mut bits, &mut sweeps) }, MfStatus::Ok);
        assert!(bits >= 192);
        assert!(sweeps > 0);
        unsafe { mf_roots_free(roots) };
        unsafe { mf_poly_free(poly) };
    }

    #[test]
    fn coefficient_moments_match_the_limit_law_direction() {
        // The degree-n member at the dilated time s/n is the realization
        // whose root distribution approaches the limit law at time s; its
        // moments land within a few percent at n = 64.
        let n = 64usize;
        let poly = hermite(n, 1.0 / n as f64);
        let mut empirical = ptr::null_mut();
        assert_eq!(
            unsafe { mf_moments_from_coeffs(poly, 3, &mut empirical) },
            MfStatus::Ok
        );
        let mut order = 0usize;
        assert_eq!(unsafe { mf_moments_order(empirical, &mut order) }, MfStatus::Ok);
        assert_eq!(order, 3);

        let mut limit = ptr::null_mut();
        assert_eq!(unsafe { mf_mu_moments(1.0, 0.0, 3, 0, &mut limit) }, MfStatus::Ok);
        let (mut e_re, mut e_im) = (0.0f64, 0.0f64);
        let (mut l_re, mut l_im) = (0.0f64, 0.0f64);
        assert_eq!(unsafe { mf_moments_get(empirical, 1, &mut e_re, &mut e_im) }, MfStatus::Ok);
        assert_eq!(unsafe { mf_moments_get(limit, 1, &mut l_re, &mut l_im) }, MfStatus::Ok);
        assert!(
            (e_re - l_re).abs() < 0.05 * l_re.abs(),
            "empirical {e_re}, limit {l_re}"
        );
        assert_eq!(e_im, 0.0);
        assert_eq!(l_im, 0.0);

        let mut beyond = 0.0f64;
        assert_eq!(
            unsafe { mf_moments_get(empirical, 4, &mut beyond, &mut e_im) },
            MfStatus::OutOfRange
        );
        unsafe { mf_moments_free(empirical) };
        unsafe { mf_moments_free(limit) };
        unsafe { mf_poly_free(poly) };
    }

    #[test]
    fn poisson_moments_respect_the_domain() {
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { mf_nu_moments(-1.0, 0.0, 0.5, 4, 0, &mut out) },
            MfStatus::InvalidParameter
        );
        assert_eq!(
            unsafe { mf_nu_moments(1.0, 0.0, -0.5, 4, 0, &mut out) },
            MfStatus::InvalidParameter
        );
        assert_eq!(unsafe { mf_nu_moments(1.0, 0.0, 0.5, 4, 0, &mut out) }, MfStatus::Ok);
        unsafe { mf_moments_free(out) };
    }

    #[test]
    fn convolution_identity_via_handles() {
        // Convolving with the heat member at time 0, which is (x-1)^n,
        // reproduces the other factor up to roundoff in the binomial
        // weights.
        let p = hermite(8, 0.75);
        let identity = hermite(8, 0.0);
        let mut conv = ptr::null_mut();
        assert_eq!(
            unsafe { mf_poly_convolve(p, identity, 8, &mut conv) },
            MfStatus::Ok
        );
        let mut before = ptr::null_mut();
        let mut after = ptr::null_mut();
        assert_eq!(unsafe { mf_moments_from_coeffs(p, 3, &mut before) }, MfStatus::Ok);
        assert_eq!(unsafe { mf_moments_from_coeffs(conv, 3, &mut after) }, MfStatus::Ok);
        for k in 1..=3usize {
            let (mut b_re, mut b_im) = (0.0f64, 0.0f64);
            let (mut a_re, mut a_im) = (0.0f64, 0.0f64);
            assert_eq!(unsafe { mf_moments_get(before, k, &mut b_re, &mut b_im) }, MfStatus::Ok);
            assert_eq!(unsafe { mf_moments_get(after, k, &mut a_re, &mut a_im) }, MfStatus::Ok);
            assert!((a_re - b_re).abs() <= 1e-12 * b_re.abs(), "order {k}: {a_re} vs {b_re}");
            assert!((a_im - b_im).abs() <= 1e-12 * b_re.abs());
        }
        unsafe { mf_moments_free(before) };
        unsafe { mf_moments_free(after) };

        // The JSON export parses back into an identical-degree polynomial.
        let mut json = ptr::null_mut();
        assert_eq!(unsafe { mf_poly_to_json(p, &mut json) }, MfStatus::Ok);
        let text = unsafe { std::ffi::CStr::from_ptr(json) }.to_str().unwrap().to_owned();
        let parsed = Polynomial::from_json_str(&text).expect("round-trip parse");
        assert_eq!(parsed.degree(), 8);
        unsafe { mf_string_free(json) };
        unsafe { mf_poly_free(conv) };
        unsafe { mf_poly_free(identity) };
        unsafe { mf_poly_free(p) };
    }

    #[test]
    fn heat_application_matches_the_direct_constructor() {
        // Applying the order-n heat operator at time s*n to (x-1)^n gives
        // the degree-n member at dilation-free time s*n.
        let base = hermite(6, 0.0);
        let mut heated = ptr::null_mut();
        assert_eq!(unsafe { mf_poly_heat(base, 1.2, 0.0, 6, &mut heated) }, MfStatus::Ok);
        let mut degree = 0usize;
        assert_eq!(unsafe { mf_poly_degree(heated, &mut degree) }, MfStatus::Ok);
        assert_eq!(degree, 6);
        unsafe { mf_poly_free(heated) };
        unsafe { mf_poly_free(base) };
    }

    #[test]
    fn status_messages_are_null_terminated_ascii() {
        for status in [
            MfStatus::Ok,
            MfStatus::NullArgument,
            MfStatus::InvalidParameter,
            MfStatus::NonConvergence,
            MfStatus::OutOfRange,
            MfStatus::NumericFailure,
        ] {
            let text = unsafe { std::ffi::CStr::from_ptr(mf_status_message(status)) };
            assert!(!text.to_str().unwrap().is_empty());
        }
    }

    #[test]
    fn generated_header_declares_the_api() {
        let header = include_str!("../include/mulfree.h");
        for symbol in [
            "mf_status_message",
            "mf_required_bits",
            "mf_hermite_new",
            "mf_laguerre_new",
            "mf_poly_free",
            "mf_poly_degree",
            "mf_poly_convolve",
            "mf_poly_heat",
            "mf_poly_shift",
            "mf_poly_to_json",
            "mf_poly_find_roots",
            "mf_string_free",
            "mf_roots_count",
            "mf_roots_get",
            "mf_roots_record",
            "mf_roots_free",
            "mf_moments_from_coeffs",
            "mf_mu_moments",
            "mf_nu_moments",
            "mf_moments_order",
            "mf_moments_get",
            "mf_moments_free",
        ] {
            assert!(header.contains(symbol), "header lost {symbol}");
        }
        assert!(header.contains("MULFREE_H"));
    }
}

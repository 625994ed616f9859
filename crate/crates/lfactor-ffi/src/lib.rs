//! C ABI for the L-factor calculus.
//!
//! Conventions: every function returns an `LfStatus` code and writes its
//! result through an out-pointer; handles are opaque and freed with the
//! matching `lf_*_free`; strings are NUL-terminated UTF-8 owned by the
//! library and freed with `lf_string_free`. Rational arguments are passed
//! as numerator/denominator pairs. Panics never cross the boundary: they
//! are caught and reported as `LF_STATUS_PANIC`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lfactor::{
    alpha_classical, alpha_gl, atomize, beta_classical, closed_form_outcomes, decompose,
    gcd_corollary, product_dto, strategy_check, DiscreteSeriesParam, Error, LProduct, Rat,
    SigmaTail, Way, WayCtx,
};

// --- status codes ---

/// Result code of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArg = 1,
    /// A tail parameter list violated its validity rules.
    InvalidParam = 2,
    /// Block sizes or shifts outside the calculus domain.
    Domain = 3,
    /// A string argument was not valid UTF-8 or named nothing known.
    BadName = 4,
    /// Serialization failed.
    Json = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

fn status_of(err: &Error) -> LfStatus {
    match err {
        Error::Param(_) => LfStatus::InvalidParam,
        Error::UnknownWay(_) => LfStatus::BadName,
        _ => LfStatus::Domain,
    }
}

// --- opaque handles ---

/// Opaque handle to an exponent-weighted product of L-factors.
pub struct LfProduct(LProduct);

/// Opaque handle to a validated discrete-series tail parameter.
pub struct LfParam(DiscreteSeriesParam);

fn guarded<F: FnOnce() -> LfStatus>(body: F) -> LfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => LfStatus::Panic,
    }
}

/// Boxes `value` into `out`, which must be non-null.
fn emit<T>(out: *mut *mut T, value: T) -> LfStatus {
    if out.is_null() {
        return LfStatus::NullArg;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    LfStatus::Ok
}

fn emit_string(out: *mut *mut c_char, body: String) -> LfStatus {
    if out.is_null() {
        return LfStatus::NullArg;
    }
    match CString::new(body) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            LfStatus::Ok
        }
        Err(_) => LfStatus::Json,
    }
}

fn emit_json<T: serde::Serialize>(out: *mut *mut c_char, value: &T) -> LfStatus {
    match serde_json::to_string_pretty(value) {
        Ok(body) => emit_string(out, body),
        Err(_) => LfStatus::Json,
    }
}

/// Reads an optional parameter handle; null means the bare tail.
unsafe fn param_or_empty(param: *const LfParam) -> DiscreteSeriesParam {
    if param.is_null() {
        DiscreteSeriesParam::empty()
    } else {
        unsafe { (*param).0.clone() }
    }
}

unsafe fn utf8<'a>(text: *const c_char) -> Result<&'a str, LfStatus> {
    if text.is_null() {
        return Err(LfStatus::NullArg);
    }
    unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| LfStatus::BadName)
}

// --- version ---

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn lf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// --- tail parameters ---

/// Builds a tail parameter from `len` segment lengths and a tail kind
/// (0 generic, 1 standard, 2 trivial). `entries` may be null when `len`
/// is zero.
///
/// # Safety
/// `entries` must point to `len` readable i64 values when non-null.
#[no_mangle]
pub unsafe extern "C" fn lf_param_new(
    entries: *const i64,
    len: usize,
    tail: i32,
    out: *mut *mut LfParam,
) -> LfStatus {
    guarded(|| {
        let tail = match tail {
            0 => SigmaTail::Generic,
            1 => SigmaTail::Standard,
            2 => SigmaTail::Trivial,
            _ => return LfStatus::InvalidParam,
        };
        let list = if len == 0 {
            Vec::new()
        } else if entries.is_null() {
            return LfStatus::NullArg;
        } else {
            unsafe { std::slice::from_raw_parts(entries, len) }.to_vec()
        };
        match DiscreteSeriesParam::new(list, tail) {
            Ok(p) => emit(out, LfParam(p)),
            Err(_) => LfStatus::InvalidParam,
        }
    })
}

/// Frees a tail parameter handle; null is a no-op.
#[no_mangle]
pub extern "C" fn lf_param_free(param: *mut LfParam) {
    if !param.is_null() {
        drop(unsafe { Box::from_raw(param) });
    }
}

// --- normalizing factors ---

/// alpha_{c,a}(s; sigma_r); a null `param` means the bare tail.
#[no_mangle]
pub extern "C" fn lf_alpha_classical(
    c: i64,
    a: i64,
    param: *const LfParam,
    out: *mut *mut LfProduct,
) -> LfStatus {
    guarded(|| {
        let p = unsafe { param_or_empty(param) };
        match alpha_classical(c, a, &p) {
            Ok(product) => emit(out, LfProduct(product)),
            Err(e) => status_of(&e),
        }
    })
}

/// Rank-one right factor beta_c(s).
#[no_mangle]
pub extern "C" fn lf_beta_classical(c: i64, out: *mut *mut LfProduct) -> LfStatus {
    guarded(|| match beta_classical(c) {
        Ok(product) => emit(out, LfProduct(product)),
        Err(e) => status_of(&e),
    })
}

/// GL-block factor alpha_{(c,d),(a,b)}(s + offset), offset a rational
/// `offset_num / offset_den`.
#[no_mangle]
pub extern "C" fn lf_alpha_gl(
    c: i64,
    d: i64,
    a: i64,
    b: i64,
    offset_num: i64,
    offset_den: i64,
    out: *mut *mut LfProduct,
) -> LfStatus {
    guarded(|| {
        if offset_den == 0 {
            return LfStatus::Domain;
        }
        match alpha_gl(c, d, a, b, Rat::new(offset_num, offset_den)) {
            Ok(product) => emit(out, LfProduct(product)),
            Err(e) => status_of(&e),
        }
    })
}

// --- product algebra ---

/// Multiset union with exponent addition; exact cancellation applies.
#[no_mangle]
pub extern "C" fn lf_product_mul(
    x: *const LfProduct,
    y: *const LfProduct,
    out: *mut *mut LfProduct,
) -> LfStatus {
    guarded(|| {
        if x.is_null() || y.is_null() {
            return LfStatus::NullArg;
        }
        let product = unsafe { (*x).0.mul(&(*y).0) };
        emit(out, LfProduct(product))
    })
}

/// Negates all exponents.
#[no_mangle]
pub extern "C" fn lf_product_inverse(
    x: *const LfProduct,
    out: *mut *mut LfProduct,
) -> LfStatus {
    guarded(|| {
        if x.is_null() {
            return LfStatus::NullArg;
        }
        let product = unsafe { (*x).0.inverse() };
        emit(out, LfProduct(product))
    })
}

/// Refines every composite factor into the gated atoms.
#[no_mangle]
pub extern "C" fn lf_product_atomize(
    x: *const LfProduct,
    out: *mut *mut LfProduct,
) -> LfStatus {
    guarded(|| {
        if x.is_null() {
            return LfStatus::NullArg;
        }
        let product = atomize(unsafe { &(*x).0 });
        emit(out, LfProduct(product))
    })
}

/// Exact equality of symbol multisets; writes 1 or 0 through `eq`.
#[no_mangle]
pub extern "C" fn lf_product_eq(
    x: *const LfProduct,
    y: *const LfProduct,
    eq: *mut i32,
) -> LfStatus {
    guarded(|| {
        if x.is_null() || y.is_null() || eq.is_null() {
            return LfStatus::NullArg;
        }
        unsafe { *eq = i32::from((*x).0 == (*y).0) };
        LfStatus::Ok
    })
}

/// Serializes the product as a JSON array of factor records.
#[no_mangle]
pub extern "C" fn lf_product_to_json(
    x: *const LfProduct,
    out: *mut *mut c_char,
) -> LfStatus {
    guarded(|| {
        if x.is_null() {
            return LfStatus::NullArg;
        }
        let dto = product_dto(unsafe { &(*x).0 });
        emit_json(out, &dto)
    })
}

/// Frees a product handle; null is a no-op.
#[no_mangle]
pub extern "C" fn lf_product_free(x: *mut LfProduct) {
    if !x.is_null() {
        drop(unsafe { Box::from_raw(x) });
    }
}

/// Frees a string returned by this library; null is a no-op.
#[no_mangle]
pub extern "C" fn lf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

// --- report entry points ---

fn ctx_for(way: Way, c: i64, d: i64, a: i64, b: i64, param: DiscreteSeriesParam) -> Result<WayCtx, Error> {
    if way.is_classical() {
        WayCtx::classical(way, c, a, param)
    } else {
        WayCtx::gl(way, c, d, a, b)
    }
}

/// Decomposes a target along `way` ("cl1".."cl3", "gl1".."gl4p") and
/// returns the leftover product plus the stated-closed-form replay as JSON.
#[no_mangle]
pub extern "C" fn lf_discrepancy_json(
    way: *const c_char,
    c: i64,
    d: i64,
    a: i64,
    b: i64,
    param: *const LfParam,
    out: *mut *mut c_char,
) -> LfStatus {
    guarded(|| {
        let name = match unsafe { utf8(way) } {
            Ok(s) => s,
            Err(status) => return status,
        };
        let way = match Way::parse(name) {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        let ctx = match ctx_for(way, c, d, a, b, unsafe { param_or_empty(param) }) {
            Ok(ctx) => ctx,
            Err(e) => return status_of(&e),
        };
        let dec = match decompose(&ctx) {
            Ok(dec) => dec,
            Err(e) => return status_of(&e),
        };
        let forms = match closed_form_outcomes(&ctx) {
            Ok(rows) => rows,
            Err(e) => return status_of(&e),
        };
        let body = serde_json::json!({
            "ctx": ctx,
            "leftover": product_dto(&dec.residual),
            "closed_forms": forms,
        });
        emit_json(out, &body)
    })
}

/// Full holomorphy-strategy verdict for (c, a, sigma_r) as JSON.
#[no_mangle]
pub extern "C" fn lf_strategy_json(
    c: i64,
    a: i64,
    param: *const LfParam,
    out: *mut *mut c_char,
) -> LfStatus {
    guarded(|| {
        let p = unsafe { param_or_empty(param) };
        match strategy_check(c, a, &p) {
            Ok(report) => emit_json(out, &report),
            Err(e) => status_of(&e),
        }
    })
}

/// Inverse-product common-divisor report at rank c as JSON.
#[no_mangle]
pub extern "C" fn lf_gcd_corollary_json(c: i64, out: *mut *mut c_char) -> LfStatus {
    guarded(|| match gcd_corollary(c) {
        Ok(report) => emit_json(out, &report),
        Err(e) => status_of(&e),
    })
}

// --- tests ---

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn take_string(raw: *mut c_char) -> String {
        assert!(!raw.is_null());
        let s = unsafe { CStr::from_ptr(raw) }.to_str().unwrap().to_string();
        lf_string_free(raw);
        s
    }

    #[test]
    fn version_is_a_static_string() {
        let v = unsafe { CStr::from_ptr(lf_version()) }.to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn param_roundtrip_and_rejection() {
        let entries = [3i64, 1];
        let mut param: *mut LfParam = ptr::null_mut();
        let status = unsafe { lf_param_new(entries.as_ptr(), 2, 0, &mut param) };
        assert_eq!(status, LfStatus::Ok);
        lf_param_free(param);

        let bad = [1i64, 1];
        let mut param: *mut LfParam = ptr::null_mut();
        let status = unsafe { lf_param_new(bad.as_ptr(), 2, 0, &mut param) };
        assert_eq!(status, LfStatus::InvalidParam);
        assert!(param.is_null());

        let status = unsafe { lf_param_new(ptr::null(), 3, 0, &mut param) };
        assert_eq!(status, LfStatus::NullArg);

        let status = unsafe { lf_param_new(entries.as_ptr(), 2, 9, &mut param) };
        assert_eq!(status, LfStatus::InvalidParam);
    }

    #[test]
    fn product_algebra_cancels_exactly() {
        let mut alpha: *mut LfProduct = ptr::null_mut();
        assert_eq!(lf_alpha_classical(3, 2, ptr::null(), &mut alpha), LfStatus::Ok);

        let mut inv: *mut LfProduct = ptr::null_mut();
        assert_eq!(lf_product_inverse(alpha, &mut inv), LfStatus::Ok);
        let mut one: *mut LfProduct = ptr::null_mut();
        assert_eq!(lf_product_mul(alpha, inv, &mut one), LfStatus::Ok);

        let json = {
            let mut raw: *mut c_char = ptr::null_mut();
            assert_eq!(lf_product_to_json(one, &mut raw), LfStatus::Ok);
            take_string(raw)
        };
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 0);

        let mut atoms: *mut LfProduct = ptr::null_mut();
        assert_eq!(lf_product_atomize(alpha, &mut atoms), LfStatus::Ok);
        let mut eq = -1;
        assert_eq!(lf_product_eq(alpha, atoms, &mut eq), LfStatus::Ok);
        assert_eq!(eq, 0, "composite and refined products differ as symbol sets");

        for p in [alpha, inv, one, atoms] {
            lf_product_free(p);
        }
    }

    #[test]
    fn null_arguments_are_rejected() {
        let mut out: *mut LfProduct = ptr::null_mut();
        assert_eq!(lf_product_mul(ptr::null(), ptr::null(), &mut out), LfStatus::NullArg);
        assert_eq!(lf_beta_classical(2, ptr::null_mut()), LfStatus::NullArg);
        let mut raw: *mut c_char = ptr::null_mut();
        assert_eq!(lf_product_to_json(ptr::null(), &mut raw), LfStatus::NullArg);
    }

    #[test]
    fn domain_errors_map_to_codes() {
        let mut out: *mut LfProduct = ptr::null_mut();
        assert_eq!(lf_beta_classical(0, &mut out), LfStatus::Domain);
        assert_eq!(lf_alpha_gl(1, 1, 1, 1, 1, 0, &mut out), LfStatus::Domain);

        let mut raw: *mut c_char = ptr::null_mut();
        let way = CString::new("nope").unwrap();
        let status =
            lf_discrepancy_json(way.as_ptr(), 2, 1, 1, 1, ptr::null(), &mut raw);
        assert_eq!(status, LfStatus::BadName);
    }

    #[test]
    fn reports_serialize_with_verdicts() {
        let mut raw: *mut c_char = ptr::null_mut();
        assert_eq!(lf_strategy_json(2, 1, ptr::null(), &mut raw), LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
        assert_eq!(v["pass"], true);

        let mut raw: *mut c_char = ptr::null_mut();
        assert_eq!(lf_gcd_corollary_json(4, &mut raw), LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
        assert_eq!(v["structural_trivial"], true);

        let way = CString::new("cl1").unwrap();
        let mut raw: *mut c_char = ptr::null_mut();
        let status = lf_discrepancy_json(way.as_ptr(), 3, 1, 1, 1, ptr::null(), &mut raw);
        assert_eq!(status, LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
        assert!(v["leftover"].is_array());
        let rows = v["closed_forms"].as_array().unwrap();
        assert!(rows.iter().any(|r| r["label"] == "cl1/plain" && r["matches"] == true));
    }
}

//! C ABI for the plumbing-hom library.
//!
//! All entry points are panic-free: failures are reported through integer
//! status codes and a thread-local last-error message.  Handles are opaque;
//! create them with [`plumbing_hom_new`] and release them with
//! [`plumbing_hom_free`].  Returned strings are owned by the caller and must
//! be released with [`plumbing_hom_string_free`].

use plumbing_hom::dynkin::{from_config, from_short_name, QuiverConfig};
use plumbing_hom::parser::parse_element;
use plumbing_hom::quotient::{QuotientAlgebra, Side};
use plumbing_hom::{Error, GradedElement};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible function.
pub const PLUMBING_HOM_OK: i32 = 0;
/// Invalid argument: null pointer, bad UTF-8, out-of-range vertex, …
pub const PLUMBING_HOM_ERR_INVALID: i32 = 1;
/// Domain error from the library (bad quiver, parse failure, …).
pub const PLUMBING_HOM_ERR_DOMAIN: i32 = 2;
/// The requested composition is not composable.
pub const PLUMBING_HOM_ERR_NOT_COMPOSABLE: i32 = 3;
/// Internal panic; this is a bug, please report it.
pub const PLUMBING_HOM_ERR_INTERNAL: i32 = 4;

/// Opaque handle to a graded endomorphism algebra of a fixed ADE quiver.
pub struct PlumbingHomAlgebra {
    inner: QuotientAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn code_of(err: &Error) -> i32 {
    match err {
        Error::NotComposable(_) => PLUMBING_HOM_ERR_NOT_COMPOSABLE,
        _ => PLUMBING_HOM_ERR_DOMAIN,
    }
}

fn guarded<F: FnOnce() -> i32>(f: F) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(_) => {
            set_error("internal panic");
            PLUMBING_HOM_ERR_INTERNAL
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, i32> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(PLUMBING_HOM_ERR_INVALID);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        PLUMBING_HOM_ERR_INVALID
    })
}

/// The last error message raised on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn plumbing_hom_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Build an algebra from a quiver description: either a short name such as
/// `"A5"`, `"D4"`, `"E6"`, or a JSON object
/// `{"series": "A"|"D"|"E", "rank": n, "arrows": [[s,t], ...]}`.
/// Returns null on failure (see [`plumbing_hom_last_error`]).
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_new(spec: *const c_char) -> *mut PlumbingHomAlgebra {
    let mut out: *mut PlumbingHomAlgebra = std::ptr::null_mut();
    guarded(|| {
        let text = match read_str(spec) {
            Ok(t) => t,
            Err(code) => return code,
        };
        let quiver = if text.trim_start().starts_with('{') {
            match serde_json::from_str::<QuiverConfig>(text) {
                Ok(cfg) => from_config(&cfg),
                Err(e) => {
                    set_error(&format!("invalid quiver JSON: {e}"));
                    return PLUMBING_HOM_ERR_DOMAIN;
                }
            }
        } else {
            from_short_name(text)
        };
        match quiver.and_then(QuotientAlgebra::new) {
            Ok(inner) => {
                out = Box::into_raw(Box::new(PlumbingHomAlgebra { inner }));
                PLUMBING_HOM_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    });
    out
}

/// Release an algebra handle.  Passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_free(handle: *mut PlumbingHomAlgebra) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Release a string returned by this library.  Passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn deref<'a>(handle: *const PlumbingHomAlgebra) -> Result<&'a QuotientAlgebra, i32> {
    if handle.is_null() {
        set_error("null handle");
        return Err(PLUMBING_HOM_ERR_INVALID);
    }
    Ok(&(*handle).inner)
}

/// Number of vertices of the underlying Dynkin quiver.
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_rank(handle: *const PlumbingHomAlgebra) -> u32 {
    match deref(handle) {
        Ok(alg) => alg.quiver.rank as u32,
        Err(_) => 0,
    }
}

/// Coxeter number of the underlying diagram.
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_coxeter_number(handle: *const PlumbingHomAlgebra) -> u32 {
    match deref(handle) {
        Ok(alg) => alg.h as u32,
        Err(_) => 0,
    }
}

/// Shift exponent `N(vertex)`; the v-arrow at `vertex` has degree
/// `−N(vertex)−1`.  Vertices are 1-based.
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_shift_exponent(
    handle: *const PlumbingHomAlgebra,
    vertex: u32,
    out: *mut u64,
) -> i32 {
    guarded(|| {
        let alg = match deref(handle) {
            Ok(a) => a,
            Err(code) => return code,
        };
        if out.is_null() {
            set_error("null output pointer");
            return PLUMBING_HOM_ERR_INVALID;
        }
        let v = vertex as usize;
        if v < 1 || v > alg.quiver.rank {
            set_error("vertex out of range");
            return PLUMBING_HOM_ERR_INVALID;
        }
        *out = alg.shifts[v - 1] as u64;
        PLUMBING_HOM_OK
    })
}

/// Graded hom dimension from `from` to `to` in degree `degree`.
/// `side` is 0 for the wrapped algebra, 1 for the quotient (Rabinowitz)
/// algebra.  Vertices are 1-based.
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_dim(
    handle: *const PlumbingHomAlgebra,
    from: u32,
    to: u32,
    degree: i64,
    side: i32,
    out: *mut u64,
) -> i32 {
    guarded(|| {
        let alg = match deref(handle) {
            Ok(a) => a,
            Err(code) => return code,
        };
        if out.is_null() {
            set_error("null output pointer");
            return PLUMBING_HOM_ERR_INVALID;
        }
        let (f, t) = (from as usize, to as usize);
        let n = alg.quiver.rank;
        if f < 1 || f > n || t < 1 || t > n {
            set_error("vertex out of range");
            return PLUMBING_HOM_ERR_INVALID;
        }
        let side = match side {
            0 => Side::Wrapped,
            1 => Side::Quotient,
            _ => {
                set_error("side must be 0 (wrapped) or 1 (quotient)");
                return PLUMBING_HOM_ERR_INVALID;
            }
        };
        *out = alg.dim(f, t, degree, side) as u64;
        PLUMBING_HOM_OK
    })
}

/// Evaluate a product expression — e.g. `"v_inv(1) * v(1)"` or
/// `"u(2,3) u(3,2)"` — and write its canonical form as a newly allocated
/// string to `*out` (release with [`plumbing_hom_string_free`]).
#[no_mangle]
pub unsafe extern "C" fn plumbing_hom_eval(
    handle: *const PlumbingHomAlgebra,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let alg = match deref(handle) {
            Ok(a) => a,
            Err(code) => return code,
        };
        if out.is_null() {
            set_error("null output pointer");
            return PLUMBING_HOM_ERR_INVALID;
        }
        let text = match read_str(expr) {
            Ok(t) => t,
            Err(code) => return code,
        };
        let result = parse_element(alg, text)
            .and_then(|path| alg.canonical_form(&GradedElement::from_path(path)));
        match result {
            Ok(elem) => {
                let display = alg.display(&elem).replace('\0', " ");
                *out = CString::new(display).unwrap_or_default().into_raw();
                PLUMBING_HOM_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

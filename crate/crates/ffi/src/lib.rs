//! C interface to ptegkit.
//!
//! Models are opaque handles created by [`ptegkit_model_parse`] and released
//! with [`ptegkit_model_free`]. Every fallible call returns a
//! [`PtegStatus`]; on failure [`ptegkit_last_error`] describes what went
//! wrong. Strings handed out by the library must be released with
//! [`ptegkit_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ptegkit::cli::ModelFile;
use ptegkit::ncp::{feasible_at, positive_circuit_at};
use ptegkit::pteg::{normalize, period_set, pic_reduction, synthesize, Mode, Normalized};
use ptegkit::rational::{format_rational, parse_rational, Rational};
use serde_json::json;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtegStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidModel = 4,
    InvalidArgument = 5,
    Infeasible = 6,
    Panic = 7,
}

/// Opaque handle to a validated, normalized model.
pub struct PtegModel {
    norm: Normalized,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: PtegStatus, msg: impl Into<String>) -> PtegStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> PtegStatus) -> PtegStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(PtegStatus::Panic, "internal error"),
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, PtegStatus> {
    if s.is_null() {
        return Err(fail(PtegStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(PtegStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_lambda(s: *const c_char) -> Result<Rational, PtegStatus> {
    let text = read_str(s, "lambda")?;
    parse_rational(text).map_err(|e| fail(PtegStatus::InvalidArgument, format!("lambda: {e}")))
}

unsafe fn model<'a>(m: *const PtegModel) -> Result<&'a PtegModel, PtegStatus> {
    m.as_ref().ok_or_else(|| fail(PtegStatus::NullArgument, "model is null"))
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> PtegStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            PtegStatus::Ok
        }
        Err(_) => fail(PtegStatus::Panic, "result contains a nul byte"),
    }
}

fn status_of(r: Result<PtegStatus, PtegStatus>) -> PtegStatus {
    r.unwrap_or_else(|s| s)
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ptegkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ptegkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a TOML model, normalizing markings above one.
///
/// # Safety
/// `toml` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ptegkit_model_parse(toml: *const c_char, out: *mut *mut PtegModel) -> PtegStatus {
    guard(|| {
        status_of((|| {
            if out.is_null() {
                return Err(fail(PtegStatus::NullArgument, "out is null"));
            }
            let text = read_str(toml, "toml")?;
            let spec = ModelFile::parse(text)
                .and_then(|m| m.to_spec())
                .map_err(|e| fail(PtegStatus::ParseError, e.to_string()))?;
            let norm = normalize(&spec).map_err(|e| fail(PtegStatus::InvalidModel, e.to_string()))?;
            *out = Box::into_raw(Box::new(PtegModel { norm }));
            Ok(PtegStatus::Ok)
        })())
    })
}

/// Releases a model. Null is ignored.
///
/// # Safety
/// `m` must come from [`ptegkit_model_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ptegkit_model_free(m: *mut PtegModel) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of transitions after normalization.
///
/// # Safety
/// `m` must be a live model and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ptegkit_model_transition_count(m: *const PtegModel, out: *mut usize) -> PtegStatus {
    guard(|| {
        status_of((|| {
            let m = model(m)?;
            if out.is_null() {
                return Err(fail(PtegStatus::NullArgument, "out is null"));
            }
            *out = m.norm.pteg.n();
            Ok(PtegStatus::Ok)
        })())
    })
}

/// Period set of `d`-periodic trajectories as text, e.g. `[7/2, 4]`,
/// `[0, inf)` or `empty`. `tensor` selects the `dn×dn` computation.
///
/// # Safety
/// `m` must be a live model and `out` a valid pointer; free the result with
/// [`ptegkit_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ptegkit_period_set(
    m: *const PtegModel,
    d: u32,
    tensor: bool,
    out: *mut *mut c_char,
) -> PtegStatus {
    guard(|| {
        status_of((|| {
            let m = model(m)?;
            if out.is_null() {
                return Err(fail(PtegStatus::NullArgument, "out is null"));
            }
            let mode = if tensor { Mode::Tensor } else { Mode::Theorem2 };
            let set = period_set(&m.norm.pteg, d as usize, mode)
                .map_err(|e| fail(PtegStatus::InvalidArgument, e.to_string()))?;
            Ok(give_string(out, set.to_string()))
        })())
    })
}

/// Whether `lambda` (a rational string) is an admissible period.
///
/// # Safety
/// `m` must be a live model, `lambda` nul-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ptegkit_feasible_at(m: *const PtegModel, lambda: *const c_char, out: *mut bool) -> PtegStatus {
    guard(|| {
        status_of((|| {
            let m = model(m)?;
            let lambda = read_lambda(lambda)?;
            if out.is_null() {
                return Err(fail(PtegStatus::NullArgument, "out is null"));
            }
            *out = feasible_at(&pic_reduction(&m.norm.pteg), &lambda);
            Ok(PtegStatus::Ok)
        })())
    })
}

/// Synthesizes the `d`-periodic trajectory for `u = 0` and writes its seed
/// `x(0) … x(d−1)` as JSON: `{"d": .., "lambda": "..", "transitions": [..],
/// "seed": [["p/q", ..], ..]}`. Returns `INFEASIBLE` with a witness circuit
/// in the error message when `lambda` is not a period.
///
/// # Safety
/// `m` must be a live model, `lambda` nul-terminated and `out` valid; free
/// the result with [`ptegkit_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ptegkit_synthesize_json(
    m: *const PtegModel,
    d: u32,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> PtegStatus {
    guard(|| {
        status_of((|| {
            let m = model(m)?;
            let lambda = read_lambda(lambda)?;
            if out.is_null() {
                return Err(fail(PtegStatus::NullArgument, "out is null"));
            }
            if d == 0 {
                return Err(fail(PtegStatus::InvalidArgument, "d must be at least 1"));
            }
            let p = &m.norm.pteg;
            if let Some(c) = positive_circuit_at(&pic_reduction(p), &lambda) {
                let names: Vec<&str> = c.nodes().iter().map(|&k| p.names()[k].as_str()).collect();
                return Err(fail(
                    PtegStatus::Infeasible,
                    format!("positive circuit through {}", names.join(", ")),
                ));
            }
            let u = vec![Rational::from_integer(0.into()); d as usize * p.n()];
            let t = synthesize(p, d as usize, &lambda, &u).map_err(|e| fail(PtegStatus::Infeasible, e.to_string()))?;
            let seed: Vec<Vec<String>> = t
                .seed()
                .iter()
                .map(|x| x.iter().map(format_rational).collect())
                .collect();
            let doc = json!({
                "d": d,
                "lambda": format_rational(&lambda),
                "transitions": p.names(),
                "seed": seed,
            });
            Ok(give_string(out, doc.to_string()))
        })())
    })
}

//! C ABI over `affchar`.
//!
//! Inputs and structured outputs are JSON strings in the same formats as the
//! command-line tool. Every fallible call returns an [`AffStatus`]; on failure
//! [`aff_last_error`] describes the cause. Strings handed out by the library
//! are released with [`aff_string_free`], handles with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use affchar::character::repjson::{parse_rep, rep_to_json};
use affchar::character::volume::vol_sign;
use affchar::character::{AffineRep, Character, PeriodVector, VolSign};
use affchar::dynamics::jorgensen::{jorgensen_row, Verdict};
use affchar::dynamics::walk::parse_moves;
use affchar::dynamics::{random_walk, WalkConfig};
use affchar::orbit::classify;
use affchar::surface::polygon::PolygonSurface;
use affchar::surface::{haupt_check, holonomy, parse_surface, realize, surface_svg, surface_to_json};
use affchar::Error;
use serde_json::json;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffStatus {
    Ok = 0,
    /// Malformed or mathematically invalid input.
    Invalid = 1,
    Unsupported = 2,
    NegativeVolume = 3,
    CertificateFailure = 4,
    Numeric = 5,
    NullPointer = 6,
    /// A string argument was not UTF-8.
    Utf8 = 7,
    /// An internal panic was caught at the boundary.
    Panic = 8,
}

impl From<&Error> for AffStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Unsupported(_) => AffStatus::Unsupported,
            Error::NegativeVolume => AffStatus::NegativeVolume,
            Error::CertificateFailure(_) => AffStatus::CertificateFailure,
            Error::Numeric(_) => AffStatus::Numeric,
            _ => AffStatus::Invalid,
        }
    }
}

/// A character with an optional cocycle.
pub struct AffRep {
    character: Character,
    rep: Option<AffineRep>,
}

/// A polygon surface with affine gluings.
pub struct AffSurface(PolygonSurface);

struct Failure {
    status: AffStatus,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { status: (&e).into(), kind: e.kind(), message: e.to_string() }
    }
}

impl Failure {
    fn new(status: AffStatus, kind: &'static str, message: impl Into<String>) -> Self {
        Failure { status, kind, message: message.into() }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(f: &Failure) {
    let text = json!({ "reason": f.kind, "message": f.message, "status": f.status as i32 }).to_string();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

/// Run `body`, record any failure, and turn panics into [`AffStatus::Panic`].
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> AffStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<&str>().map(|s| s.to_string()).or_else(|| p.downcast_ref::<String>().cloned()).unwrap_or_default();
        Err(Failure::new(AffStatus::Panic, "Panic", msg))
    });
    match outcome {
        Ok(()) => AffStatus::Ok,
        Err(f) => {
            set_last_error(&f);
            f.status
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(AffStatus::NullPointer, "NullPointer", format!("{} is null", what)));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::new(AffStatus::Utf8, "Utf8", format!("{} is not UTF-8", what)))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(AffStatus::NullPointer, "NullPointer", format!("{} is null", what)))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(AffStatus::NullPointer, "NullPointer", "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::new(AffStatus::Invalid, "Invalid", "output contains a NUL byte"))?;
    put(out, c.into_raw())
}

fn needs_cocycle(r: &AffRep) -> Result<&AffineRep, Failure> {
    r.rep.as_ref().ok_or_else(|| Error::Invalid("representation has no cocycle".into()).into())
}

/// JSON description of the most recent failure on this thread, or null.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn aff_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn aff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a rep.json document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_from_json(json: *const c_char, out: *mut *mut AffRep) -> AffStatus {
    guard(|| {
        let parsed = parse_rep(str_arg(json, "json")?)?;
        put(out, Box::into_raw(Box::new(AffRep { character: parsed.character, rep: parsed.rep })))
    })
}

/// # Safety
/// `rep` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_free(rep: *mut AffRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_genus(rep: *const AffRep, out: *mut usize) -> AffStatus {
    guard(|| put(out, ref_arg(rep, "rep")?.character.genus()))
}

/// Serialize back to rep.json. Fails when the handle has no cocycle.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_to_json(rep: *const AffRep, out: *mut *mut c_char) -> AffStatus {
    guard(|| {
        let v = rep_to_json(needs_cocycle(ref_arg(rep, "rep")?)?)?;
        put_string(out, v.to_string())
    })
}

/// Orbit-closure descriptor of the linear part, as JSON.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_classify(rep: *const AffRep, out: *mut *mut c_char) -> AffStatus {
    guard(|| {
        let chr = &ref_arg(rep, "rep")?.character;
        let c = classify(chr)?;
        put_string(out, c.to_json(chr.symbols()).to_string())
    })
}

/// Sign of the volume of a Euclidean representation: 1, 0 or −1.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_volume_sign(rep: *const AffRep, out: *mut i32) -> AffStatus {
    guard(|| {
        let sign = match vol_sign(needs_cocycle(ref_arg(rep, "rep")?)?)? {
            VolSign::Positive => 1,
            VolSign::Null => 0,
            VolSign::Negative => -1,
        };
        put(out, sign)
    })
}

/// Seeded random walk; writes the summary report as JSON.
/// `moves` is `catalog`, `torelli` or a comma-separated list of labels.
///
/// # Safety
/// `rep` must be a live handle, `moves` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_walk(rep: *const AffRep, moves: *const c_char, steps: u64, seed: u64, out: *mut *mut c_char) -> AffStatus {
    guard(|| {
        let r = ref_arg(rep, "rep")?;
        let cfg = WalkConfig { steps, seed, moves: parse_moves(r.character.genus(), str_arg(moves, "moves")?)?, trace: false };
        let report = random_walk(&r.character, r.rep.as_ref().map(AffineRep::cocycle), &cfg)?;
        put_string(out, serde_json::to_string(&report).expect("serializable"))
    })
}

/// Build a polygon surface whose holonomy is conjugate to the representation.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_rep_realize(rep: *const AffRep, out: *mut *mut AffSurface) -> AffStatus {
    guard(|| {
        let r = realize(needs_cocycle(ref_arg(rep, "rep")?)?)?;
        put(out, Box::into_raw(Box::new(AffSurface(r.surface))))
    })
}

/// Parse a surface.json document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_surface_from_json(json: *const c_char, out: *mut *mut AffSurface) -> AffStatus {
    guard(|| {
        let s = parse_surface(str_arg(json, "json")?)?;
        s.validate()?;
        put(out, Box::into_raw(Box::new(AffSurface(s))))
    })
}

/// # Safety
/// `surface` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn aff_surface_free(surface: *mut AffSurface) {
    if !surface.is_null() {
        drop(Box::from_raw(surface));
    }
}

/// # Safety
/// `surface` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_surface_to_json(surface: *const AffSurface, out: *mut *mut c_char) -> AffStatus {
    guard(|| put_string(out, surface_to_json(&ref_arg(surface, "surface")?.0)?.to_string()))
}

/// # Safety
/// `surface` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_surface_svg(surface: *const AffSurface, out: *mut *mut c_char) -> AffStatus {
    guard(|| put_string(out, surface_svg(&ref_arg(surface, "surface")?.0)))
}

/// # Safety
/// `surface` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_surface_genus(surface: *const AffSurface, out: *mut usize) -> AffStatus {
    guard(|| put(out, ref_arg(surface, "surface")?.0.genus()?))
}

/// Holonomy of the surface in its marking, as a new representation handle.
///
/// # Safety
/// `surface` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_surface_holonomy(surface: *const AffSurface, out: *mut *mut AffRep) -> AffStatus {
    guard(|| {
        let h = holonomy(&ref_arg(surface, "surface")?.0)?;
        let rep = AffRep { character: h.rep.character().clone(), rep: Some(h.rep) };
        put(out, Box::into_raw(Box::new(rep)))
    })
}

/// Admissibility of a period vector given as periods.json; writes
/// `{"accepted", "volume"}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_haupt_check(json: *const c_char, out: *mut *mut c_char) -> AffStatus {
    guard(|| {
        #[derive(serde::Deserialize)]
        struct Periods {
            periods: Vec<affchar::character::repjson::ValueJson>,
            #[serde(default)]
            symbols: Vec<String>,
            symbol_values: Option<Vec<f64>>,
        }
        let p: Periods = serde_json::from_str(str_arg(json, "json")?).map_err(|e| Error::Invalid(format!("periods.json: {}", e)))?;
        let syms = affchar::character::repjson::symbols_from(&p.symbols, p.symbol_values.as_deref())?;
        let values = p.periods.iter().map(|v| v.parse_with(&syms)).collect::<affchar::Result<Vec<_>>>()?;
        let verdict = haupt_check(&PeriodVector(values), &syms)?;
        put_string(out, json!({ "accepted": verdict.accepted(), "volume": verdict.volume.display(&syms) }).to_string())
    })
}

/// Smallest scalar discreteness product over pairs of nontrivial n-th roots
/// of unity. `witness` is 1 when the product certifies non-discreteness.
/// For n = 1 there is no pair: `value` is NaN and `witness` 0.
///
/// # Safety
/// `value` and `witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_jorgensen_row(n: u32, value: *mut f64, witness: *mut i32) -> AffStatus {
    guard(|| {
        if n == 0 {
            return Err(Error::Invalid("n must be positive".into()).into());
        }
        let row = jorgensen_row(n);
        put(value, row.value.unwrap_or(f64::NAN))?;
        put(witness, i32::from(row.verdict == Verdict::WitnessNondiscrete))
    })
}

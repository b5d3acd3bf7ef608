//! C ABI for the fusion-torsion engine.
//!
//! Rings are opaque `FtProvider` handles built from the same spec strings
//! the CLI accepts. Analyses return versioned JSON documents through an
//! out-parameter; every returned string must be released with
//! `ft_string_free`. Functions return an `FtStatus`; on failure
//! `ft_last_error_message` describes the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use fusion_torsion::component::{identity_component_report, ComponentBounds};
use fusion_torsion::fusion::{check_axioms, AxiomOptions, Budget, FusionProvider};
use fusion_torsion::providers::parse_provider;
use fusion_torsion::report::to_canonical_json;
use fusion_torsion::torsion::{n_sequence_cocommutative, torsion_subcategory};
use fusion_torsion::uq::{uq_verify, Branch};
use fusion_torsion::FusionError;

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownLabel = 4,
    AxiomViolations = 5,
    BadParameter = 6,
    Unsupported = 7,
    Computation = 8,
    Io = 9,
    Panic = 10,
}

/// Opaque handle to a fusion ring.
pub struct FtProvider {
    ring: Arc<dyn FusionProvider>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(err: &FusionError) -> FtStatus {
    match err {
        FusionError::Parse { .. } => FtStatus::Parse,
        FusionError::UnknownLabel(_) => FtStatus::UnknownLabel,
        FusionError::AxiomViolations(_) => FtStatus::AxiomViolations,
        FusionError::BadParameter(_) => FtStatus::BadParameter,
        FusionError::UnsupportedProvider(_) | FusionError::NotFinite => FtStatus::Unsupported,
        FusionError::Io(_) => FtStatus::Io,
        _ => FtStatus::Computation,
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guarded(f: impl FnOnce() -> Result<(), (FtStatus, String)>) -> FtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FtStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FtStatus::Panic
        }
    }
}

fn fail(e: FusionError) -> (FtStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (FtStatus, String)> {
    if p.is_null() {
        return Err((FtStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (FtStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn budget_arg(p: *const c_char) -> Result<Budget, (FtStatus, String)> {
    if p.is_null() {
        return Ok(Budget::default());
    }
    Budget::default().with_overrides(str_arg(p, "budget")?).map_err(fail)
}

unsafe fn provider_arg<'a>(p: *const FtProvider) -> Result<&'a FtProvider, (FtStatus, String)> {
    p.as_ref().ok_or((FtStatus::NullPointer, "provider is null".into()))
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), (FtStatus, String)> {
    if out.is_null() {
        return Err((FtStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(text).map_err(|_| (FtStatus::Computation, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_json<T: serde::Serialize>(out: *mut *mut c_char, command: &str, report: &T) -> Result<(), (FtStatus, String)> {
    let text = to_canonical_json(command, report).map_err(|e| fail(e.into()))?;
    write_string(out, text)
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn ft_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn ft_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ft_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a ring from a spec such as `uqsu11` or `free(so3,word:Z2)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ft_provider_new(spec: *const c_char, out: *mut *mut FtProvider) -> FtStatus {
    guarded(|| {
        if out.is_null() {
            return Err((FtStatus::NullPointer, "output pointer is null".into()));
        }
        let ring = parse_provider(str_arg(spec, "spec")?).map_err(fail)?;
        *out = Box::into_raw(Box::new(FtProvider { ring }));
        Ok(())
    })
}

/// Releases a ring handle. Null is ignored.
///
/// # Safety
/// `p` must come from `ft_provider_new` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ft_provider_free(p: *mut FtProvider) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical name of the ring.
///
/// # Safety
/// `p` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ft_provider_name(p: *const FtProvider, out: *mut *mut c_char) -> FtStatus {
    guarded(|| write_string(out, provider_arg(p)?.ring.name()))
}

/// `u ⊗ v` as JSON.
///
/// # Safety
/// `p` must be a live handle; `u`, `v` NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ft_decompose(p: *const FtProvider, u: *const c_char, v: *const c_char, out: *mut *mut c_char) -> FtStatus {
    guarded(|| {
        let ring = &provider_arg(p)?.ring;
        let a = ring.parse_label(str_arg(u, "u")?).map_err(fail)?;
        let b = ring.parse_label(str_arg(v, "v")?).map_err(fail)?;
        let d = ring.decompose(&a, &b).map_err(fail)?;
        write_json(out, "decompose", &d)
    })
}

/// Axiom check over `labels` enumerated irreducibles and `triples` random
/// associativity triples. A report with violations is still `FT_STATUS_OK`.
///
/// # Safety
/// `p` must be a live handle; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ft_check_axioms(p: *const FtProvider, labels: usize, triples: usize, seed: u64, out: *mut *mut c_char) -> FtStatus {
    guarded(|| {
        let ring = &provider_arg(p)?.ring;
        let budget = Budget {
            max_irreducibles: labels,
            ..Budget::default()
        };
        budget.validate().map_err(fail)?;
        let report = check_axioms(ring.as_ref(), &budget, AxiomOptions { seed, triples });
        write_json(out, "axioms", &report)
    })
}

/// Torsion set of the ring. `budget` may be null (defaults) or
/// `key=value,...`.
///
/// # Safety
/// `p` must be a live handle; `budget` null or NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ft_torsion_report(p: *const FtProvider, budget: *const c_char, out: *mut *mut c_char) -> FtStatus {
    guarded(|| {
        let ring = &provider_arg(p)?.ring;
        let report = torsion_subcategory(ring.as_ref(), &budget_arg(budget)?).map_err(fail)?;
        write_json(out, "torsion", &report)
    })
}

/// Identity-component report with default probe bounds.
///
/// # Safety
/// `p` must be a live handle; `budget` null or NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ft_component_report(p: *const FtProvider, budget: *const c_char, out: *mut *mut c_char) -> FtStatus {
    guarded(|| {
        let ring = &provider_arg(p)?.ring;
        let report =
            identity_component_report(ring.as_ref(), &ComponentBounds::default(), &budget_arg(budget)?).map_err(fail)?;
        write_json(out, "component", &report)
    })
}

/// N-sequence of a finite group or word group.
///
/// # Safety
/// `p` must be a live handle; `budget` null or NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ft_nsequence(p: *const FtProvider, max_stage: usize, exponent_bound: u64, budget: *const c_char, out: *mut *mut c_char) -> FtStatus {
    guarded(|| {
        let ring = &provider_arg(p)?.ring;
        let report = n_sequence_cocommutative(ring.as_ref(), max_stage, exponent_bound, &budget_arg(budget)?).map_err(fail)?;
        write_json(out, "nsequence", &report)
    })
}

/// Numeric su(1,1) checks at `q < 0`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ft_uq_verify(q: f64, nmax: usize, fusion_nmax: usize, out: *mut *mut c_char) -> FtStatus {
    guarded(|| {
        let report = uq_verify(q, nmax, fusion_nmax, Branch::Positive).map_err(fail)?;
        write_json(out, "uqverify", &report)
    })
}

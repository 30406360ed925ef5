//! C ABI over `chern-bounds`.
//!
//! Manifolds and reports are opaque handles owned by the caller and released
//! with `cb_manifold_free` / `cb_report_free`. Every fallible call returns a
//! [`CbStatus`]; on failure a message is available from
//! `cb_last_error_message` on the same thread. Strings returned through
//! `char **` out-parameters must be released with `cb_string_free`.
//!
//! The generated header lives in `include/chern_bounds.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chern_bounds::report::{analyze_json, chern_json, to_json_string};
use chern_bounds::{
    analyze, max_independent_count, min_target_tri, parse_manifold, ExprError, ManifoldProduct,
    ObstructionReport, Rule,
};

/// Status codes. The values 2 to 4 agree with the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    InvalidArgument = 1,
    Parse = 2,
    Catalog = 3,
    Internal = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Which result was used to establish a bound.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbRule {
    ImmersionTransversality = 0,
    IndependentTransversality = 1,
    OrientableImmersion4kPlus2 = 2,
    VanishingDualPontryagin = 3,
    OrientableIndependent4kPlus2 = 4,
    VanishingTopPontryagin = 5,
    Parallelizable = 6,
    OrientableThreeManifold = 7,
    ComplementChernClass = 8,
    KernelChernClass = 9,
}

impl From<Rule> for CbRule {
    fn from(rule: Rule) -> Self {
        match rule {
            Rule::ImmersionTransversality => CbRule::ImmersionTransversality,
            Rule::IndependentTransversality => CbRule::IndependentTransversality,
            Rule::OrientableImmersion4kPlus2 => CbRule::OrientableImmersion4kPlus2,
            Rule::VanishingDualPontryagin => CbRule::VanishingDualPontryagin,
            Rule::OrientableIndependent4kPlus2 => CbRule::OrientableIndependent4kPlus2,
            Rule::VanishingTopPontryagin => CbRule::VanishingTopPontryagin,
            Rule::Parallelizable => CbRule::Parallelizable,
            Rule::OrientableThreeManifold => CbRule::OrientableThreeManifold,
            Rule::ComplementChernClass => CbRule::ComplementChernClass,
            Rule::KernelChernClass => CbRule::KernelChernClass,
        }
    }
}

/// Plain-data summary of a report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CbBounds {
    pub dimension: u32,
    pub orientable: bool,
    pub parallelizable: bool,
    pub tri_min_n: u32,
    pub tri_min_rule: CbRule,
    pub tri_exist_n: u32,
    pub tri_exist_rule: CbRule,
    pub tri_optimal: bool,
    pub indep_max_n: u32,
    pub indep_max_rule: CbRule,
    pub indep_exist_n: u32,
    pub indep_exist_rule: CbRule,
    pub indep_optimal: bool,
}

/// Opaque product manifold.
pub struct CbManifold(ManifoldProduct);

/// Opaque analysis result.
pub struct CbReport(ObstructionReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: CbStatus,
    message: String,
}

impl Failure {
    fn new(status: CbStatus, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }
}

fn set_last_error(message: String) {
    // Interior NULs cannot cross the boundary; replace them.
    let c = CString::new(message.replace('\0', "\\0")).expect("NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            CbStatus::Ok
        }
        Ok(Err(f)) => {
            set_last_error(f.message);
            f.status
        }
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {what}"));
            CbStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(CbStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure::new(CbStatus::NullPointer, format!("{what} is NULL")))
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Failure::new(CbStatus::Internal, e.to_string()))
}

/// Parses `expression` (NUL-terminated UTF-8) and stores a new manifold in
/// `*out`. `*out` is left untouched on failure.
///
/// # Safety
/// `expression` must be NULL or a valid C string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cb_manifold_parse(expression: *const c_char, out: *mut *mut CbManifold) -> CbStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if expression.is_null() {
            return Err(Failure::new(CbStatus::NullPointer, "expression is NULL"));
        }
        let source = CStr::from_ptr(expression)
            .to_str()
            .map_err(|e| Failure::new(CbStatus::InvalidUtf8, e.to_string()))?;
        let manifold = parse_manifold(source).map_err(|e| match e {
            ExprError::Parse(p) => Failure::new(CbStatus::Parse, p.to_string()),
            ExprError::Catalog(c) => Failure::new(CbStatus::Catalog, c.to_string()),
        })?;
        *out = Box::into_raw(Box::new(CbManifold(manifold)));
        Ok(())
    })
}

/// Releases a manifold. NULL is ignored.
///
/// # Safety
/// `manifold` must be NULL or a handle from `cb_manifold_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_manifold_free(manifold: *mut CbManifold) {
    if !manifold.is_null() {
        drop(Box::from_raw(manifold));
    }
}

/// Real dimension of `manifold`, or 0 for NULL.
///
/// # Safety
/// `manifold` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_manifold_dimension(manifold: *const CbManifold) -> u32 {
    manifold.as_ref().map_or(0, |m| m.0.dimension())
}

/// Writes `c(C (x) TM)` as text, e.g. `1 - 3*a1^2`, into `*out`.
///
/// # Safety
/// `manifold` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_manifold_chern_class(manifold: *const CbManifold, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let m = deref(manifold, "manifold")?;
        let out = out_ptr(out, "out")?;
        *out = into_c_string(m.0.chern_class().to_string())?;
        Ok(())
    })
}

/// Writes the JSON document printed by `chern-bounds chern --format json`.
///
/// # Safety
/// `manifold` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_manifold_chern_json(manifold: *const CbManifold, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let m = deref(manifold, "manifold")?;
        let out = out_ptr(out, "out")?;
        let chern = m.0.chern_class();
        let inverse = chern
            .invert()
            .map_err(|e| Failure::new(CbStatus::Internal, e.to_string()))?;
        *out = into_c_string(to_json_string(&chern_json(&m.0, chern, &inverse)))?;
        Ok(())
    })
}

/// Runs the full analysis and stores a new report in `*out`.
///
/// # Safety
/// `manifold` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_analyze(manifold: *const CbManifold, out: *mut *mut CbReport) -> CbStatus {
    guard(|| {
        let m = deref(manifold, "manifold")?;
        let out = out_ptr(out, "out")?;
        let report = analyze(&m.0).map_err(|e| Failure::new(CbStatus::Internal, e.to_string()))?;
        *out = Box::into_raw(Box::new(CbReport(report)));
        Ok(())
    })
}

/// Releases a report. NULL is ignored.
///
/// # Safety
/// `report` must be NULL or a handle from `cb_analyze` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_report_free(report: *mut CbReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Copies the numeric part of `report` into `*out`.
///
/// # Safety
/// `report` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_report_bounds(report: *const CbReport, out: *mut CbBounds) -> CbStatus {
    guard(|| {
        let r = &deref(report, "report")?.0;
        let out = out_ptr(out, "out")?;
        *out = CbBounds {
            dimension: r.dimension,
            orientable: r.orientable,
            parallelizable: r.parallelizable,
            tri_min_n: r.tri_min_n.value,
            tri_min_rule: r.tri_min_n.rule.into(),
            tri_exist_n: r.tri_exist_n.value,
            tri_exist_rule: r.tri_exist_n.rule.into(),
            tri_optimal: r.tri_optimal,
            indep_max_n: r.indep_max_n.value,
            indep_max_rule: r.indep_max_n.rule.into(),
            indep_exist_n: r.indep_exist_n.value,
            indep_exist_rule: r.indep_exist_n.rule.into(),
            indep_optimal: r.indep_optimal,
        };
        Ok(())
    })
}

/// Writes the JSON document printed by `chern-bounds analyze --format json`.
///
/// # Safety
/// `report` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_report_to_json(report: *const CbReport, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let r = deref(report, "report")?;
        let out = out_ptr(out, "out")?;
        *out = into_c_string(to_json_string(&analyze_json(&r.0)))?;
        Ok(())
    })
}

/// Generic bound `floor(3n/2)` for totally real immersions of an
/// `n`-manifold, found by scanning the codimension inequality.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_min_target_tri(n: u32, out: *mut u32) -> CbStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if n == 0 {
            return Err(Failure::new(CbStatus::InvalidArgument, "dimension must be positive"));
        }
        *out = min_target_tri(n);
        Ok(())
    })
}

/// Generic bound `floor((n+1)/2)` for independent functions on an
/// `n`-manifold.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_max_independent_count(n: u32, out: *mut u32) -> CbStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if n == 0 {
            return Err(Failure::new(CbStatus::InvalidArgument, "dimension must be positive"));
        }
        *out = max_independent_count(n);
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Valid until the next call into the library on this
/// thread; do not free.
#[no_mangle]
pub extern "C" fn cb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn cb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use chern_bounds_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { cb_string_free(p) };
    s
}

fn last_error() -> Option<String> {
    let p = cb_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn parse(expr: &str) -> Result<*mut CbManifold, CbStatus> {
    let c = CString::new(expr).unwrap();
    let mut out = ptr::null_mut();
    match unsafe { cb_manifold_parse(c.as_ptr(), &mut out) } {
        CbStatus::Ok => Ok(out),
        status => {
            assert!(out.is_null());
            Err(status)
        }
    }
}

#[test]
fn analyze_round_trip() {
    let m = parse("CP2^2 x RP2 x S1").unwrap();
    assert_eq!(unsafe { cb_manifold_dimension(m) }, 11);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cb_analyze(m, &mut report) }, CbStatus::Ok);
    assert!(last_error().is_none());

    let mut b = std::mem::MaybeUninit::<CbBounds>::uninit();
    assert_eq!(unsafe { cb_report_bounds(report, b.as_mut_ptr()) }, CbStatus::Ok);
    let b = unsafe { b.assume_init() };
    assert_eq!((b.tri_min_n, b.tri_exist_n, b.tri_optimal), (16, 16, true));
    assert_eq!((b.indep_max_n, b.indep_exist_n, b.indep_optimal), (6, 6, true));
    assert_eq!(b.tri_exist_rule, CbRule::ImmersionTransversality);
    assert!(!b.orientable && !b.parallelizable);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cb_report_to_json(report, &mut json) }, CbStatus::Ok);
    let golden = include_str!("../../core/tests/golden/analyze_cp2x2_rp2_s1.json");
    assert_eq!(take_string(json), golden);

    unsafe {
        cb_report_free(report);
        cb_manifold_free(m);
    }
}

#[test]
fn chern_class_strings() {
    let m = parse("CP2").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cb_manifold_chern_class(m, &mut s) }, CbStatus::Ok);
    assert_eq!(take_string(s), "1 - 3*a1^2");
    assert_eq!(unsafe { cb_manifold_chern_json(m, &mut s) }, CbStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["inverse_class"][1]["coefficient"], 3);
    unsafe { cb_manifold_free(m) };
}

#[test]
fn second_rule_through_abi() {
    let m = parse("S4").unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cb_analyze(m, &mut report) }, CbStatus::Ok);
    let mut b = std::mem::MaybeUninit::<CbBounds>::uninit();
    assert_eq!(unsafe { cb_report_bounds(report, b.as_mut_ptr()) }, CbStatus::Ok);
    let b = unsafe { b.assume_init() };
    assert_eq!((b.tri_exist_n, b.tri_exist_rule), (5, CbRule::VanishingDualPontryagin));
    unsafe {
        cb_report_free(report);
        cb_manifold_free(m);
    }
}

#[test]
fn error_codes_and_messages() {
    assert_eq!(parse("CP2 ^"), Err(CbStatus::Parse));
    assert!(last_error().unwrap().contains("offset 5"));
    assert_eq!(parse("RP4"), Err(CbStatus::Catalog));
    assert!(last_error().unwrap().contains("RP4"));
    assert_eq!(parse("S1^100"), Err(CbStatus::Catalog));

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cb_manifold_parse(ptr::null(), &mut out) }, CbStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { cb_manifold_parse(bad.as_ptr().cast(), &mut out) }, CbStatus::InvalidUtf8);
    let ok = CString::new("CP1").unwrap();
    assert_eq!(unsafe { cb_manifold_parse(ok.as_ptr(), ptr::null_mut()) }, CbStatus::NullPointer);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cb_analyze(ptr::null(), &mut report) }, CbStatus::NullPointer);
    assert_eq!(unsafe { cb_report_to_json(ptr::null(), &mut out.cast()) }, CbStatus::NullPointer);
    assert_eq!(unsafe { cb_manifold_dimension(ptr::null()) }, 0);

    // Success clears the message.
    let m = parse("CP1").unwrap();
    assert!(last_error().is_none());
    unsafe {
        cb_manifold_free(m);
        cb_manifold_free(ptr::null_mut());
        cb_report_free(ptr::null_mut());
        cb_string_free(ptr::null_mut());
    }
}

#[test]
fn generic_bounds() {
    let mut v = 0;
    for n in 1..=100 {
        assert_eq!(unsafe { cb_min_target_tri(n, &mut v) }, CbStatus::Ok);
        assert_eq!(v, 3 * n / 2);
        assert_eq!(unsafe { cb_max_independent_count(n, &mut v) }, CbStatus::Ok);
        assert_eq!(v, (n + 1) / 2);
    }
    assert_eq!(unsafe { cb_min_target_tri(0, &mut v) }, CbStatus::InvalidArgument);
    assert_eq!(unsafe { cb_max_independent_count(0, &mut v) }, CbStatus::InvalidArgument);
    assert_eq!(unsafe { cb_min_target_tri(3, ptr::null_mut()) }, CbStatus::NullPointer);
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(cb_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/chern_bounds.h");
    for name in [
        "cb_manifold_parse",
        "cb_manifold_free",
        "cb_manifold_dimension",
        "cb_manifold_chern_class",
        "cb_manifold_chern_json",
        "cb_analyze",
        "cb_report_free",
        "cb_report_bounds",
        "cb_report_to_json",
        "cb_min_target_tri",
        "cb_max_independent_count",
        "cb_string_free",
        "cb_last_error_message",
        "cb_version",
        "typedef struct CbManifold CbManifold",
        "typedef struct CbReport CbReport",
        "CB_STATUS_CATALOG = 3",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

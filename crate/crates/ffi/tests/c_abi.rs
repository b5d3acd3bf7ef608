use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use fusion_torsion_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ft_string_free(s) };
    text
}

fn provider(spec: &str) -> *mut FtProvider {
    let spec = CString::new(spec).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ft_provider_new(spec.as_ptr(), &mut p) }, FtStatus::Ok);
    p
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn provider_lifecycle_and_name() {
    let p = provider("free(so3,word:Z2)");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ft_provider_name(p, &mut out) }, FtStatus::Ok);
    assert_eq!(take(out), "free(so3,word:Z2)");
    unsafe { ft_provider_free(p) };
    unsafe { ft_provider_free(ptr::null_mut()) };
    unsafe { ft_string_free(ptr::null_mut()) };
}

#[test]
fn parse_errors_set_the_message() {
    let spec = CString::new("free(so3,").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ft_provider_new(spec.as_ptr(), &mut p) }, FtStatus::Parse);
    assert!(p.is_null());
    let msg = unsafe { CStr::from_ptr(ft_last_error_message()) }.to_str().unwrap();
    assert!(msg.contains("position 9"), "{msg}");
    assert_eq!(unsafe { ft_provider_new(ptr::null(), &mut p) }, FtStatus::NullPointer);
}

#[test]
fn decompose_returns_json() {
    let p = provider("so3");
    let (u, v) = (CString::new("v1").unwrap(), CString::new("v1").unwrap());
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ft_decompose(p, u.as_ptr(), v.as_ptr(), &mut out) }, FtStatus::Ok);
    let doc = json(&take(out));
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["report"].as_array().unwrap().len(), 3);
    let bad = CString::new("w7").unwrap();
    assert_eq!(unsafe { ft_decompose(p, bad.as_ptr(), v.as_ptr(), &mut out) }, FtStatus::UnknownLabel);
    unsafe { ft_provider_free(p) };
}

#[test]
fn analyses_round_trip() {
    let p = provider("uqsu11");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ft_component_report(p, ptr::null(), &mut out) }, FtStatus::Ok);
    let doc = json(&take(out));
    assert_eq!(doc["report"]["verdict"], "normal_with_finite_component_group");
    assert_eq!(doc["report"]["component_group_order"], 2);

    let budget = CString::new("max_irreducibles=20").unwrap();
    assert_eq!(unsafe { ft_torsion_report(p, budget.as_ptr(), &mut out) }, FtStatus::Ok);
    let doc = json(&take(out));
    assert_eq!(doc["report"]["torsion_set"]["labels"], serde_json::json!(["iota", "iota-1"]));

    assert_eq!(unsafe { ft_check_axioms(p, 30, 200, 7, &mut out) }, FtStatus::Ok);
    assert_eq!(json(&take(out))["report"]["violations"], serde_json::json!([]));

    let bogus = CString::new("frobs=3").unwrap();
    assert_eq!(unsafe { ft_torsion_report(p, bogus.as_ptr(), &mut out) }, FtStatus::BadParameter);
    assert_eq!(unsafe { ft_nsequence(p, 4, 64, ptr::null(), &mut out) }, FtStatus::Unsupported);
    unsafe { ft_provider_free(p) };

    let g = provider("word:Z2*Z2");
    assert_eq!(unsafe { ft_nsequence(g, 8, 64, ptr::null(), &mut out) }, FtStatus::Ok);
    assert_eq!(json(&take(out))["report"]["degree"], 1);
    unsafe { ft_provider_free(g) };
}

#[test]
fn uq_verify_over_the_abi() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ft_uq_verify(-0.5, 3, 2, &mut out) }, FtStatus::Ok);
    assert_eq!(json(&take(out))["report"]["pass"], true);
    assert_eq!(unsafe { ft_uq_verify(0.5, 3, 2, &mut out) }, FtStatus::BadParameter);
    assert_eq!(unsafe { ft_uq_verify(-0.5, 3, 2, ptr::null_mut()) }, FtStatus::NullPointer);
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(ft_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/fusion_torsion.h");
    for name in [
        "typedef struct FtProvider FtProvider",
        "FT_STATUS_OK = 0",
        "ft_provider_new",
        "ft_provider_free",
        "ft_provider_name",
        "ft_decompose",
        "ft_check_axioms",
        "ft_torsion_report",
        "ft_component_report",
        "ft_nsequence",
        "ft_uq_verify",
        "ft_string_free",
        "ft_last_error_message",
        "ft_version",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use thetacalc_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(tc_last_error_message()) }.to_str().unwrap().to_string()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    tc_string_free(p);
    s
}

#[test]
fn weyl_dimensions() {
    let mut d = 0u64;
    unsafe {
        assert_eq!(tc_weyl_dim(c("Sp10").as_ptr(), c("10000").as_ptr(), &mut d), TcStatus::Ok);
        assert_eq!(d, 10);
        assert_eq!(tc_weyl_dim(c("Sp8xSp10").as_ptr(), c("0000|01000").as_ptr(), &mut d), TcStatus::Ok);
        assert_eq!(d, 44);
    }
    assert_eq!(last_error(), "");
}

#[test]
fn rep_handles() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(tc_rep_parse(c("Sp8").as_ptr(), c("1000").as_ptr(), &mut v), TcStatus::Ok);
        let (mut s, mut a, mut t) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(tc_rep_sym2(v, &mut s), TcStatus::Ok);
        assert_eq!(tc_rep_alt2(v, &mut a), TcStatus::Ok);
        assert_eq!(tc_rep_tensor(v, v, &mut t), TcStatus::Ok);
        let dim = |r| {
            let mut d = 0i64;
            assert_eq!(tc_rep_dim(r, &mut d), TcStatus::Ok);
            d
        };
        assert_eq!((dim(s), dim(a), dim(t)), (36, 28, 64));

        let mut json = ptr::null_mut();
        assert_eq!(tc_rep_json(a, &mut json), TcStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["group"], "Sp(8)");
        assert_eq!(doc["terms"].as_array().unwrap().len(), 2);

        for r in [v, s, a, t] {
            tc_rep_free(r);
        }
        tc_rep_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut d = 0u64;
        assert_eq!(tc_weyl_dim(c("Sp9").as_ptr(), c("1000").as_ptr(), &mut d), TcStatus::InvalidInput);
        assert!(!last_error().is_empty());
        assert_eq!(tc_weyl_dim(ptr::null(), c("1000").as_ptr(), &mut d), TcStatus::NullPointer);
        assert_eq!(tc_weyl_dim(c("Sp8").as_ptr(), c("1000").as_ptr(), ptr::null_mut()), TcStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(tc_weyl_dim(bad.as_ptr().cast(), c("1000").as_ptr(), &mut d), TcStatus::InvalidUtf8);

        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        assert_eq!(tc_rep_parse(c("Sp8").as_ptr(), c("1000").as_ptr(), &mut a), TcStatus::Ok);
        assert_eq!(tc_rep_parse(c("Sp10").as_ptr(), c("10000").as_ptr(), &mut b), TcStatus::Ok);
        let mut t = ptr::null_mut();
        assert_eq!(tc_rep_tensor(a, b, &mut t), TcStatus::InvalidInput);
        assert!(last_error().contains("mismatch"), "{}", last_error());
        assert!(t.is_null());
        tc_rep_free(a);
        tc_rep_free(b);

        let mut chi = 0i64;
        assert_eq!(tc_theta_chi(0, 0, &mut chi), TcStatus::InvalidInput);
    }
}

#[test]
fn euler_characteristics() {
    let mut chi = 0i64;
    unsafe {
        assert_eq!(tc_theta_chi(4, 0, &mut chi), TcStatus::Ok);
        assert_eq!(chi, 24);
        assert_eq!(tc_theta_chi(4, 2, &mut chi), TcStatus::Ok);
        assert_eq!(chi, 20);
    }
}

#[test]
fn documents_match_the_library() {
    type Doc = unsafe extern "C" fn(*mut *mut c_char) -> TcStatus;
    type Cmd = fn() -> thetacalc::Result<thetacalc::report::Report>;
    let cases: [(Doc, Cmd); 4] = [
        (tc_table1_json, thetacalc::report::cmd_table1),
        (tc_table2_json, thetacalc::report::cmd_table2),
        (tc_diagrams_json, thetacalc::report::cmd_diagrams),
        (tc_hodge_json, thetacalc::report::cmd_hodge),
    ];
    for (f, g) in cases {
        let mut s = ptr::null_mut();
        unsafe {
            assert_eq!(f(&mut s), TcStatus::Ok);
            assert_eq!(take_string(s), g().unwrap().doc.to_canonical_json());
            assert_eq!(f(ptr::null_mut()), TcStatus::NullPointer);
        }
    }
}

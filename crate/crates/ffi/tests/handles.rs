use std::ffi::{CStr, CString};
use std::ptr;

use preference_surfaces_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { ps_string_free(s) };
    text
}

fn model(kind: &str) -> *mut PsComplex {
    let kind = CString::new(kind).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { ps_model_build(kind.as_ptr(), &mut c) }, PsStatus::Ok);
    c
}

#[test]
fn four_models_classify() {
    let expect = [
        ("valid-unrealised", "Annulus", (6, 12, 6), true),
        ("valid-realised", "Sphere", (6, 12, 8), true),
        ("contradictory-unrealised", "KleinBottle", (3, 9, 6), false),
        ("contradictory-realised", "ProjectivePlane", (3, 6, 4), false),
    ];
    for (kind, tag, counts, orientable) in expect {
        let c = model(kind);
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { ps_complex_classify(c, &mut out) }, PsStatus::Ok);
        assert_eq!(take(out), tag);
        let (mut v, mut e, mut f) = (0, 0, 0);
        assert_eq!(unsafe { ps_complex_counts(c, &mut v, &mut e, &mut f) }, PsStatus::Ok);
        assert_eq!((v, e, f), counts);
        let mut o = !orientable;
        assert_eq!(unsafe { ps_complex_is_orientable(c, &mut o) }, PsStatus::Ok);
        assert_eq!(o, orientable);
        let mut connected = orientable;
        assert_eq!(unsafe { ps_complex_double_cover_connected(c, &mut connected) }, PsStatus::Ok);
        assert_eq!(connected, !orientable);
        unsafe { ps_complex_free(c) };
    }
}

#[test]
fn json_round_trip_through_handles() {
    let c = model("contradictory-unrealised");
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { ps_complex_export(c, PsFormat::Json, &mut json) }, PsStatus::Ok);
    let text = CString::new(take(json)).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { ps_complex_from_json(text.as_ptr(), &mut d) }, PsStatus::Ok);
    let mut chi = 99;
    assert_eq!(unsafe { ps_complex_euler_characteristic(d, &mut chi) }, PsStatus::Ok);
    assert_eq!(chi, 0);
    let mut off = ptr::null_mut();
    assert_eq!(unsafe { ps_complex_export(d, PsFormat::Off, &mut off) }, PsStatus::Ok);
    assert!(take(off).starts_with("OFF\n3 6 0\n"));
    unsafe {
        ps_complex_free(c);
        ps_complex_free(d);
    }
}

#[test]
fn puncture_projective_plane_gives_mobius() {
    let kind = CString::new("contradictory-realised").unwrap();
    let removals = CString::new("2<3<1").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { ps_model_puncture(kind.as_ptr(), removals.as_ptr(), &mut c) }, PsStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ps_complex_classify(c, &mut out) }, PsStatus::Ok);
    assert_eq!(take(out), "MobiusStrip");
    let mut b = 0;
    assert_eq!(unsafe { ps_complex_boundary_count(c, &mut b) }, PsStatus::Ok);
    assert_eq!(b, 1);
    unsafe { ps_complex_free(c) };
}

#[test]
fn errors_set_status_and_message() {
    let bogus = CString::new("bogus").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { ps_model_build(bogus.as_ptr(), &mut c) }, PsStatus::InvalidArgument);
    assert!(c.is_null());
    assert!(take(ps_last_error()).contains("bogus"));

    assert_eq!(unsafe { ps_model_build(ptr::null(), &mut c) }, PsStatus::NullPointer);
    assert_eq!(unsafe { ps_complex_classify(ptr::null(), &mut ptr::null_mut()) }, PsStatus::NullPointer);

    let kind = CString::new("contradictory-realised").unwrap();
    let cycle = CString::new("1<2<3<1").unwrap();
    assert_eq!(unsafe { ps_model_puncture(kind.as_ptr(), cycle.as_ptr(), &mut c) }, PsStatus::DomainError);

    let bad = CString::new(vec![0xffu8, 0x41]).unwrap();
    assert_eq!(unsafe { ps_model_build(bad.as_ptr(), &mut c) }, PsStatus::InvalidUtf8);

    let ok = model("valid-realised");
    assert!(ps_last_error().is_null());
    unsafe { ps_complex_free(ok) };
}

#[test]
fn arrow_check_through_handles() {
    let spec = CString::new("pairwise-majority").unwrap();
    let mut swf = ptr::null_mut();
    assert_eq!(unsafe { ps_swf_from_spec(spec.as_ptr(), 3, 3, &mut swf) }, PsStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ps_arrow_check(swf, PsDomain::Native, &mut out) }, PsStatus::Ok);
    let text = take(out);
    assert!(text.contains("\"orientable\": false"));
    assert!(text.contains("\"theorem_holds\": true"));
    unsafe { ps_swf_free(swf) };

    let spec = CString::new("dictator:7").unwrap();
    assert_eq!(unsafe { ps_swf_from_spec(spec.as_ptr(), 3, 2, &mut swf) }, PsStatus::DomainError);
}

#[test]
fn table1_json_passes() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ps_table1_json(&mut out) }, PsStatus::Ok);
    assert!(take(out).contains("\"pass\": true"));
}

//! C ABI over the preference-surfaces library.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `_free` function. Every call returns a
//! [`PsStatus`]; on failure `ps_last_error` describes what went wrong on the
//! calling thread. Strings returned by the library are released with
//! [`ps_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use preference_surfaces::complex::DeltaComplex;
use preference_surfaces::models::{arrow_check, build_model, punctured_variant, table1_report, ModelKind};
use preference_surfaces::preferences::{AlternativeSet, StrictRelation};
use preference_surfaces::social_choice::{Domain, ProfileSpace, SocialWelfareFunction};

/// Result of every exported call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    /// The library rejected the input; see `ps_last_error`.
    DomainError = 4,
    Panic = 5,
}

/// Output format for [`ps_complex_export`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsFormat {
    Json = 0,
    Off = 1,
    Dot = 2,
}

/// Profile domain for [`ps_arrow_check`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsDomain {
    /// The function's own domain.
    Native = 0,
    Weak = 1,
    Strict = 2,
}

/// Opaque delta complex.
pub struct PsComplex(DeltaComplex);

/// Opaque social welfare function.
pub struct PsSwf(SocialWelfareFunction);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn guard(f: impl FnOnce() -> Result<(), (PsStatus, String)>) -> PsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PsStatus::Panic
        }
    }
}

type Fail = (PsStatus, String);

fn domain<E: std::fmt::Display>(e: E) -> Fail {
    (PsStatus::DomainError, e.to_string())
}

fn invalid<E: std::fmt::Display>(e: E) -> Fail {
    (PsStatus::InvalidArgument, e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err((PsStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (PsStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| (PsStatus::NullPointer, format!("{name} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err((PsStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes replaced").into_raw()
}

/// Message for the last failed call on this thread, or null. Free with `ps_string_free`.
#[no_mangle]
pub extern "C" fn ps_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds one of the four models, e.g. `"contradictory-realised"`.
///
/// # Safety
/// `kind` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_model_build(kind: *const c_char, out: *mut *mut PsComplex) -> PsStatus {
    guard(|| {
        let kind: ModelKind = read_str(kind, "kind")?.parse().map_err(invalid)?;
        let model = build_model(kind).map_err(domain)?;
        write_out(out, Box::into_raw(Box::new(PsComplex(model.complex))))
    })
}

/// Builds a model with the faces of the listed preferences removed.
/// `removals` is comma separated, e.g. `"1<2<3,1<2<3<1"`.
///
/// # Safety
/// `kind` and `removals` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_model_puncture(
    kind: *const c_char,
    removals: *const c_char,
    out: *mut *mut PsComplex,
) -> PsStatus {
    guard(|| {
        let kind: ModelKind = read_str(kind, "kind")?.parse().map_err(invalid)?;
        let removals = read_str(removals, "removals")?
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<StrictRelation>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(invalid)?;
        let model = punctured_variant(kind, &removals).map_err(domain)?;
        write_out(out, Box::into_raw(Box::new(PsComplex(model.complex))))
    })
}

/// Reads a complex from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_from_json(json: *const c_char, out: *mut *mut PsComplex) -> PsStatus {
    guard(|| {
        let c = DeltaComplex::from_json(read_str(json, "json")?).map_err(domain)?;
        write_out(out, Box::into_raw(Box::new(PsComplex(c))))
    })
}

/// # Safety
/// `c` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_free(c: *mut PsComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Vertex, edge and face counts.
///
/// # Safety
/// `c` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_counts(
    c: *const PsComplex,
    vertices: *mut usize,
    edges: *mut usize,
    faces: *mut usize,
) -> PsStatus {
    guard(|| {
        let c = &handle(c, "complex")?.0;
        write_out(vertices, c.vertex_count())?;
        write_out(edges, c.edge_count())?;
        write_out(faces, c.face_count())
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_euler_characteristic(c: *const PsComplex, out: *mut i64) -> PsStatus {
    guard(|| write_out(out, handle(c, "complex")?.0.euler_characteristic()))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_is_orientable(c: *const PsComplex, out: *mut bool) -> PsStatus {
    guard(|| write_out(out, handle(c, "complex")?.0.is_orientable().map_err(domain)?))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_boundary_count(c: *const PsComplex, out: *mut usize) -> PsStatus {
    guard(|| write_out(out, handle(c, "complex")?.0.boundary_components().map_err(domain)?.len()))
}

/// Whether the orientation double cover is connected.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_double_cover_connected(c: *const PsComplex, out: *mut bool) -> PsStatus {
    guard(|| {
        let cover = handle(c, "complex")?.0.orientation_double_cover().map_err(domain)?;
        write_out(out, cover.is_connected())
    })
}

/// Surface name such as `"ProjectivePlane"`. Free with `ps_string_free`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_classify(c: *const PsComplex, out: *mut *mut c_char) -> PsStatus {
    guard(|| {
        let s = handle(c, "complex")?.0.classify().map_err(domain)?;
        write_out(out, into_c(s.tag.to_string()))
    })
}

/// JSON, OFF or DOT text. Free with `ps_string_free`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_complex_export(c: *const PsComplex, format: PsFormat, out: *mut *mut c_char) -> PsStatus {
    guard(|| {
        let c = &handle(c, "complex")?.0;
        let text = match format {
            PsFormat::Json => c.to_json(),
            PsFormat::Off => c.to_off(),
            PsFormat::Dot => c.to_dot(),
        };
        write_out(out, into_c(text))
    })
}

/// Parses `"pairwise-majority"`, `"dictator:<i>"` or `"table:<path>"` over the
/// first `alternatives` alternatives.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_swf_from_spec(
    spec: *const c_char,
    alternatives: usize,
    individuals: usize,
    out: *mut *mut PsSwf,
) -> PsStatus {
    guard(|| {
        let set = AlternativeSet::first(alternatives).map_err(invalid)?;
        let swf = SocialWelfareFunction::from_spec(read_str(spec, "spec")?, set, individuals).map_err(domain)?;
        write_out(out, Box::into_raw(Box::new(PsSwf(swf))))
    })
}

/// # Safety
/// `s` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ps_swf_free(s: *mut PsSwf) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Runs the Arrow orientability check on the first three alternatives and
/// returns the verdict as JSON. Free with `ps_string_free`.
///
/// # Safety
/// `swf` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_arrow_check(swf: *const PsSwf, domain_choice: PsDomain, out: *mut *mut c_char) -> PsStatus {
    guard(|| {
        let swf = &handle(swf, "swf")?.0;
        let d = match domain_choice {
            PsDomain::Native => swf.native_domain(),
            PsDomain::Weak => Domain::Weak,
            PsDomain::Strict => Domain::Strict,
        };
        let space = ProfileSpace::new(swf.alternatives().clone(), swf.individuals(), d).map_err(domain)?;
        let triple = AlternativeSet::new(swf.alternatives().members().iter().copied().take(3).collect()).map_err(invalid)?;
        let verdict = arrow_check(swf, &space, &triple).map_err(domain)?;
        write_out(out, into_c(verdict.to_json()))
    })
}

/// The four-model table as JSON. Free with `ps_string_free`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_table1_json(out: *mut *mut c_char) -> PsStatus {
    guard(|| write_out(out, into_c(table1_report().to_json())))
}

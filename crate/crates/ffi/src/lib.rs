//! C interface to `thetacalc`.
//!
//! Every function returns a [`TcStatus`]; results come back through out
//! parameters. On failure a message is kept per thread and can be read with
//! [`tc_last_error_message`]. Strings handed out by the library must be
//! released with [`tc_string_free`], representations with [`tc_rep_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use thetacalc::geom::{theta_chi, theta_chi_odp};
use thetacalc::lie::{weyl_dim, IrrepLabel};
use thetacalc::report::{canonical_json, cmd_diagrams, cmd_hodge, cmd_table1, cmd_table2, parse_rep, rep_doc, Report};
use thetacalc::rep::{self, VirtualRep};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed input: bad group, weight, genus, or a value out of range.
    InvalidInput = 3,
    /// A computed result violated an internal invariant.
    Invariant = 4,
    /// The library panicked; the message holds the panic payload.
    Panic = 5,
}

/// A virtual representation of a reductive group. Opaque.
pub struct TcRep {
    inner: VirtualRep,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(TcStatus, String);

impl From<thetacalc::Error> for Failure {
    fn from(e: thetacalc::Error) -> Self {
        let status = if e.is_input_error() { TcStatus::InvalidInput } else { TcStatus::Invariant };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            TcStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(TcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(TcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_rep<'a>(p: *const TcRep, what: &str) -> Result<&'a VirtualRep, Failure> {
    p.as_ref().map(|r| &r.inner).ok_or_else(|| Failure(TcStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(TcStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(TcStatus::Invariant, "output contains a NUL byte".into()))
}

fn boxed(v: VirtualRep) -> *mut TcRep {
    Box::into_raw(Box::new(TcRep { inner: v }))
}

/// Message of the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn tc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Dimension of the irreducible representation with highest weight
/// `weight` (compact digits, e.g. `"0010"`) of `group` (e.g. `"Sp8xSp10"`).
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_weyl_dim(group: *const c_char, weight: *const c_char, out: *mut u64) -> TcStatus {
    guard(|| {
        let label = IrrepLabel::parse(read_str(group, "group")?, read_str(weight, "weight")?)?;
        let d = weyl_dim(&label)?;
        let d = u64::try_from(d).map_err(|_| Failure(TcStatus::InvalidInput, format!("dimension {d} overflows u64")))?;
        write(out, d)
    })
}

/// Parses a virtual representation such as `"1000+2*0000"`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rep_parse(group: *const c_char, spec: *const c_char, out: *mut *mut TcRep) -> TcStatus {
    guard(|| {
        let v = parse_rep(read_str(group, "group")?, read_str(spec, "spec")?)?;
        write(out, boxed(v))
    })
}

/// Releases a representation. Null is ignored.
///
/// # Safety
/// `rep` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_rep_free(rep: *mut TcRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Virtual dimension.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rep_dim(rep: *const TcRep, out: *mut i64) -> TcStatus {
    guard(|| {
        let d = read_rep(rep, "rep")?.dim();
        let d = i64::try_from(d).map_err(|_| Failure(TcStatus::InvalidInput, format!("dimension {d} overflows i64")))?;
        write(out, d)
    })
}

/// Tensor product.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rep_tensor(a: *const TcRep, b: *const TcRep, out: *mut *mut TcRep) -> TcStatus {
    guard(|| {
        let v = rep::tensor(read_rep(a, "a")?, read_rep(b, "b")?)?;
        write(out, boxed(v))
    })
}

/// Symmetric square.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rep_sym2(a: *const TcRep, out: *mut *mut TcRep) -> TcStatus {
    guard(|| write(out, boxed(rep::sym2(read_rep(a, "a")?)?)))
}

/// Alternating square.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rep_alt2(a: *const TcRep, out: *mut *mut TcRep) -> TcStatus {
    guard(|| write(out, boxed(rep::alt2(read_rep(a, "a")?)?)))
}

/// Decomposition as JSON: group, dimension and the list of
/// `{weight, mult}` terms. Free the string with [`tc_string_free`].
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rep_json(rep: *const TcRep, out: *mut *mut c_char) -> TcStatus {
    guard(|| {
        let doc = rep_doc(read_rep(rep, "rep")?);
        write(out, to_c_string(canonical_json(&doc))?)
    })
}

/// Topological Euler characteristic of a theta divisor of a `g`-dimensional
/// ppav with `r` ordinary double points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_theta_chi(g: u32, r: u64, out: *mut i64) -> TcStatus {
    guard(|| {
        let g = g as usize;
        let chi = if r == 0 { theta_chi(g)? } else { theta_chi_odp(g, r)? };
        let chi = i64::try_from(chi).map_err(|_| Failure(TcStatus::InvalidInput, format!("{chi} overflows i64")))?;
        write(out, chi)
    })
}

unsafe fn report_json(f: fn() -> thetacalc::Result<Report>, out: *mut *mut c_char) -> TcStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(TcStatus::NullPointer, "output pointer is null".into()));
        }
        write(out, to_c_string(f()?.doc.to_canonical_json())?)
    })
}

/// Canonical JSON of the first product table. Free with [`tc_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_table1_json(out: *mut *mut c_char) -> TcStatus {
    report_json(cmd_table1, out)
}

/// Canonical JSON of the second product table. Free with [`tc_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_table2_json(out: *mut *mut c_char) -> TcStatus {
    report_json(cmd_table2, out)
}

/// Canonical JSON of the three nearby-cycle diagrams. Free with [`tc_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_diagrams_json(out: *mut *mut c_char) -> TcStatus {
    report_json(cmd_diagrams, out)
}

/// Canonical JSON of the Hodge table. Free with [`tc_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_hodge_json(out: *mut *mut c_char) -> TcStatus {
    report_json(cmd_hodge, out)
}

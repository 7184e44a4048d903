//! C ABI over the `sbia` crate.
//!
//! Terms and normal forms are opaque heap handles released with their
//! `*_free` function. Every fallible call returns an [`SbiaStatus`] and
//! writes its result through an out-pointer; on failure a message is
//! available from [`sbia_last_error`] on the same thread. Strings returned
//! by the library are released with [`sbia_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use sbia::{free_algebra, models, normal_forms, terms, Error, NormalForm, Term, Universe};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbiaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UniverseMismatch = 4,
    InvalidArgument = 5,
    Panic = 6,
}

/// Opaque term handle.
pub struct SbiaTerm(Term);

/// Opaque normal-form handle.
pub struct SbiaNormalForm(NormalForm);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(err: &Error) -> SbiaStatus {
    match err {
        Error::Parse { .. } => SbiaStatus::Parse,
        Error::UniverseMismatch { .. } | Error::VariableOutsideUniverse { .. } => {
            SbiaStatus::UniverseMismatch
        }
        _ => SbiaStatus::InvalidArgument,
    }
}

fn guard(body: impl FnOnce() -> Result<(), SbiaStatus>) -> SbiaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SbiaStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            SbiaStatus::Panic
        }
    }
}

fn fail(err: Error) -> SbiaStatus {
    set_error(err.to_string());
    status_of(&err)
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, SbiaStatus> {
    if text.is_null() {
        set_error("null string argument");
        return Err(SbiaStatus::NullPointer);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        SbiaStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, SbiaStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        SbiaStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), SbiaStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(SbiaStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn to_c_string(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .expect("interior NULs removed")
        .into_raw()
}

fn universe(n: u32) -> Result<Universe, SbiaStatus> {
    if n == 0 {
        set_error("at least one generator is required");
        return Err(SbiaStatus::InvalidArgument);
    }
    Ok(Universe::new(n))
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sbia_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sbia_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a term such as `"x1 ^ (x2 v x3)"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_term_parse(
    text: *const c_char,
    out: *mut *mut SbiaTerm,
) -> SbiaStatus {
    guard(|| {
        let term = terms::parse(read_str(text)?).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(SbiaTerm(term))))
    })
}

/// Prints a term in the ASCII syntax accepted by [`sbia_term_parse`].
///
/// # Safety
/// `term` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_term_to_string(
    term: *const SbiaTerm,
    out: *mut *mut c_char,
) -> SbiaStatus {
    guard(|| {
        let t = deref(term)?;
        write_out(out, to_c_string(t.0.to_string()))
    })
}

/// # Safety
/// `term` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sbia_term_free(term: *mut SbiaTerm) {
    if !term.is_null() {
        drop(Box::from_raw(term));
    }
}

/// Normal form of `term` over `x1 … xn`.
///
/// # Safety
/// `term` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_normalize(
    term: *const SbiaTerm,
    n: u32,
    out: *mut *mut SbiaNormalForm,
) -> SbiaStatus {
    guard(|| {
        let t = deref(term)?;
        let nf = normal_forms::normalize(&t.0, universe(n)?).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(SbiaNormalForm(nf))))
    })
}

/// Normal form of the generator `x` over `x1 … xn`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_generator(
    x: u32,
    n: u32,
    out: *mut *mut SbiaNormalForm,
) -> SbiaStatus {
    guard(|| {
        let nf = NormalForm::generator(x, universe(n)?).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(SbiaNormalForm(nf))))
    })
}

/// # Safety
/// `nf` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_free(nf: *mut SbiaNormalForm) {
    if !nf.is_null() {
        drop(Box::from_raw(nf));
    }
}

unsafe fn binary_op(
    a: *const SbiaNormalForm,
    b: *const SbiaNormalForm,
    out: *mut *mut SbiaNormalForm,
    op: fn(&NormalForm, &NormalForm) -> sbia::Result<NormalForm>,
) -> SbiaStatus {
    guard(|| {
        let r = op(&deref(a)?.0, &deref(b)?.0).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(SbiaNormalForm(r))))
    })
}

/// `a ∧ b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_meet(
    a: *const SbiaNormalForm,
    b: *const SbiaNormalForm,
    out: *mut *mut SbiaNormalForm,
) -> SbiaStatus {
    binary_op(a, b, out, NormalForm::meet)
}

/// `a ∨ b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_join(
    a: *const SbiaNormalForm,
    b: *const SbiaNormalForm,
    out: *mut *mut SbiaNormalForm,
) -> SbiaStatus {
    binary_op(a, b, out, NormalForm::join)
}

/// `a ∖ b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_diff(
    a: *const SbiaNormalForm,
    b: *const SbiaNormalForm,
    out: *mut *mut SbiaNormalForm,
) -> SbiaStatus {
    binary_op(a, b, out, NormalForm::diff)
}

/// `a ⊓ b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_isect(
    a: *const SbiaNormalForm,
    b: *const SbiaNormalForm,
    out: *mut *mut SbiaNormalForm,
) -> SbiaStatus {
    binary_op(a, b, out, NormalForm::isect)
}

/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_equal(
    a: *const SbiaNormalForm,
    b: *const SbiaNormalForm,
    out: *mut bool,
) -> SbiaStatus {
    guard(|| {
        let (a, b) = (deref(a)?, deref(b)?);
        if a.0.universe() != b.0.universe() {
            return Err(fail(Error::UniverseMismatch {
                left: a.0.universe().size(),
                right: b.0.universe().size(),
            }));
        }
        write_out(out, a.0 == b.0)
    })
}

/// Natural partial order `a ≤ b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_leq(
    a: *const SbiaNormalForm,
    b: *const SbiaNormalForm,
    out: *mut bool,
) -> SbiaStatus {
    guard(|| {
        let r = deref(a)?.0.leq(&deref(b)?.0).map_err(fail)?;
        write_out(out, r)
    })
}

/// Number of clauses (atoms below the element).
///
/// # Safety
/// `nf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_len(nf: *const SbiaNormalForm, out: *mut usize) -> SbiaStatus {
    guard(|| write_out(out, deref(nf)?.0.len()))
}

/// Clause text such as `"1*0 v 12*0"`, or `"0"`.
///
/// # Safety
/// `nf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_to_string(
    nf: *const SbiaNormalForm,
    out: *mut *mut c_char,
) -> SbiaStatus {
    guard(|| write_out(out, to_c_string(deref(nf)?.0.to_string())))
}

/// # Safety
/// `nf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_to_json(
    nf: *const SbiaNormalForm,
    out: *mut *mut c_char,
) -> SbiaStatus {
    guard(|| write_out(out, to_c_string(deref(nf)?.0.to_json())))
}

/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_nf_from_json(
    json: *const c_char,
    out: *mut *mut SbiaNormalForm,
) -> SbiaStatus {
    guard(|| {
        let nf = NormalForm::from_json(read_str(json)?).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(SbiaNormalForm(nf))))
    })
}

/// Equality of two terms given as text, decided by normal forms.
///
/// # Safety
/// `lhs`, `rhs` must be NUL-terminated strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_terms_equal(
    lhs: *const c_char,
    rhs: *const c_char,
    n: u32,
    out: *mut bool,
) -> SbiaStatus {
    guard(|| {
        let u = universe(n)?;
        let a = terms::parse(read_str(lhs)?).map_err(fail)?;
        let b = terms::parse(read_str(rhs)?).map_err(fail)?;
        let ea = normal_forms::normalize(&a, u).map_err(fail)?;
        let eb = normal_forms::normalize(&b, u).map_err(fail)?;
        write_out(out, ea == eb)
    })
}

/// Equality of two terms given as text, decided by exhaustive evaluation
/// in `(n+1)_L`.
///
/// # Safety
/// `lhs`, `rhs` must be NUL-terminated strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_oracle_equal(
    lhs: *const c_char,
    rhs: *const c_char,
    n: u32,
    out: *mut bool,
) -> SbiaStatus {
    guard(|| {
        universe(n)?;
        let a = terms::parse(read_str(lhs)?).map_err(fail)?;
        let b = terms::parse(read_str(rhs)?).map_err(fail)?;
        write_out(out, models::oracle_equal(&a, &b, n).map_err(fail)?)
    })
}

/// Counting data of the free algebra on `n` generators, as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sbia_stats_json(n: u32, out: *mut *mut c_char) -> SbiaStatus {
    guard(|| {
        let s = free_algebra::stats(n).map_err(fail)?;
        write_out(out, to_c_string(s.to_json()))
    })
}

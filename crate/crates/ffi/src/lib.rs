//! C interface to `coxbool`.
//!
//! Graphs and group elements are opaque heap handles released with their
//! `_free` function. Every fallible call returns a [`CoxStatus`]; on failure
//! the message is available from [`cox_last_error`] on the same thread.
//! Exact integers cross the boundary as NUL-terminated decimal strings that
//! the caller releases with [`cox_string_free`].

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use coxbool::{
    count_above, count_above_descent_set, count_by_size, global_rank_count, CoxeterGraph,
    CoxeterType, Error, Family, GeneratorId, GroupElement,
};

/// Result of an FFI call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    SizeLimit = 4,
    Unsupported = 5,
    Internal = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque Coxeter graph.
pub struct CoxGraph {
    inner: CoxeterGraph,
}

/// Opaque element of a finite Coxeter group.
pub struct CoxElement {
    inner: GroupElement,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CoxStatus {
    match e {
        Error::Parse(_) | Error::InvalidElement(_) => CoxStatus::Parse,
        Error::SizeLimit { .. } => CoxStatus::SizeLimit,
        Error::Unsupported(_) => CoxStatus::Unsupported,
        Error::Internal(_) => CoxStatus::Internal,
        Error::InvalidRank { .. } | Error::Domain(_) | Error::InvalidMatrix(_) => {
            CoxStatus::InvalidArgument
        }
    }
}

/// Runs `f`, converting errors and panics to a status and recording the message.
fn guard(f: impl FnOnce() -> Result<(), (CoxStatus, String)>) -> CoxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CoxStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside coxbool");
            CoxStatus::Panic
        }
    }
}

fn lib<T>(r: coxbool::Result<T>) -> Result<T, (CoxStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (CoxStatus, String) {
    (CoxStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CoxStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CoxStatus::Parse, format!("{what} is not UTF-8")))
}

fn family_of(text: &str) -> Result<Family, (CoxStatus, String)> {
    lib(text.parse::<Family>())
}

/// # Safety
/// `out` is null or writable.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (CoxStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).expect("decimal digits").into_raw();
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn cox_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Coxeter graph of a named family (`"A"`, `"C"`, `"D"`, `"AffA"`, ...).
///
/// # Safety
/// `family` is a valid C string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_new(
    family: *const c_char,
    n: usize,
    out: *mut *mut CoxGraph,
) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f = family_of(read_str(family, "family")?)?;
        let g = lib(lib(CoxeterType::new(f, n))?.graph())?;
        *out = Box::into_raw(Box::new(CoxGraph { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `g` is null or a handle from [`cox_graph_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_free(g: *mut CoxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_vertex_count(g: *const CoxGraph, out: *mut usize) -> CoxStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = g.inner.vertex_count();
        Ok(())
    })
}

/// Number of independent sets of size `k`, as a decimal string.
///
/// # Safety
/// `g` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_independent_count(
    g: *const CoxGraph,
    k: usize,
    out: *mut *mut c_char,
) -> CoxStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        write_string(out, count_by_size(&g.inner).count(k).to_string())
    })
}

/// Independent-set total of the graph with the generators `descents[0..len]`
/// removed, as a decimal string.
///
/// # Safety
/// `g` is a valid handle; `descents` points to `len` readable values (or is
/// null with `len == 0`); `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_count_above_descents(
    g: *const CoxGraph,
    descents: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> CoxStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let ids: &[usize] = match (descents.is_null(), len) {
            (_, 0) => &[],
            (true, _) => return Err(null("descents")),
            (false, _) => std::slice::from_raw_parts(descents, len),
        };
        let set: BTreeSet<GeneratorId> = ids.iter().copied().map(GeneratorId).collect();
        write_string(
            out,
            lib(count_above_descent_set(&g.inner, &set))?.to_string(),
        )
    })
}

/// Parses one-line notation for an element of A, C or D of rank `n`.
///
/// # Safety
/// `family` and `text` are valid C strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_element_parse(
    family: *const c_char,
    n: usize,
    text: *const c_char,
    out: *mut *mut CoxElement,
) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f = family_of(read_str(family, "family")?)?;
        let e = lib(GroupElement::parse(f, n, read_str(text, "text")?))?;
        *out = Box::into_raw(Box::new(CoxElement { inner: e }));
        Ok(())
    })
}

/// # Safety
/// `e` is null or a handle from [`cox_element_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cox_element_free(e: *mut CoxElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `e` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_element_length(e: *const CoxElement, out: *mut usize) -> CoxStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = e.inner.length();
        Ok(())
    })
}

/// Writes the 0-based ids of the right descents into `buf[0..cap]` and their
/// number into `out_len`. With a short buffer, `out_len` still receives the
/// required size and the call returns `BufferTooSmall`.
///
/// # Safety
/// `e` is a valid handle; `buf` has room for `cap` values (or is null with
/// `cap == 0`); `out_len` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_element_descents(
    e: *const CoxElement,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> CoxStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        let out_len = out_len.as_mut().ok_or_else(|| null("out_len"))?;
        let des: Vec<usize> = e.inner.descent_set().into_iter().map(|s| s.0).collect();
        *out_len = des.len();
        if des.len() > cap {
            return Err((
                CoxStatus::BufferTooSmall,
                format!("need room for {} descents, got {cap}", des.len()),
            ));
        }
        if !des.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            std::slice::from_raw_parts_mut(buf, des.len()).copy_from_slice(&des);
        }
        Ok(())
    })
}

/// Number of Boolean intervals with minimum `e`, as a decimal string.
///
/// # Safety
/// `e` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_element_count_above(
    e: *const CoxElement,
    out: *mut *mut c_char,
) -> CoxStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        write_string(out, lib(count_above(&e.inner))?.to_string())
    })
}

/// One-line notation of `e`.
///
/// # Safety
/// `e` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_element_to_string(
    e: *const CoxElement,
    out: *mut *mut c_char,
) -> CoxStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        write_string(out, e.inner.to_text())
    })
}

/// Number of rank-`k` Boolean intervals in the weak order of A, C or D of
/// rank `n`, as a decimal string.
///
/// # Safety
/// `family` is a valid C string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cox_global_rank_count(
    family: *const c_char,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> CoxStatus {
    guard(|| {
        let f = family_of(read_str(family, "family")?)?;
        write_string(out, lib(global_rank_count(f, n, k))?.to_string())
    })
}

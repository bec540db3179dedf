//! C ABI over `pathpart`.
//!
//! Handles are opaque pointers created by `*_from_json` and released by the
//! matching `*_free`. Every fallible call returns a [`PpStatus`]; on failure
//! [`pp_last_error`] describes the problem. Strings returned through out
//! parameters must be released with [`pp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use pathpart::analysis::{recover_check, AnalysisBounds};
use pathpart::decpart::{build, DecGraph};
use pathpart::graph::SearchLimits;
use pathpart::io::{decgraph_from_value, handle_from_value, AnyHandle};
use pathpart::morphisms::aut_group;
use pathpart::partial::{check_axioms, Bounds, PartialGroup};
use pathpart::{with_handle, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON or word literal.
    Parse = 3,
    /// Well-formed input describing an invalid object.
    Invalid = 4,
    /// The word is not in the domain.
    NotInDomain = 5,
    /// A search or enumeration limit was reached.
    Limit = 6,
    /// Internal panic; the handle should not be reused.
    Internal = 7,
}

/// A decorated graph.
pub struct PpDecGraph {
    inner: DecGraph,
}

/// A partial group of any supported kind.
pub struct PpPartial {
    inner: AnyHandle,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> PpStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => PpStatus::Parse,
        Error::NotInDomain(_) => PpStatus::NotInDomain,
        Error::SearchLimit(_) | Error::EnumerationLimit(_) => PpStatus::Limit,
        _ => PpStatus::Invalid,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (PpStatus, String)>) -> PpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PpStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            PpStatus::Internal
        }
    }
}

fn lib(e: Error) -> (PpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (PpStatus, String) {
    (PpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, (PpStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (PpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (PpStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn json(s: *const c_char) -> Result<serde_json::Value, (PpStatus, String)> {
    serde_json::from_str(text(s, "json")?).map_err(|e| {
        (
            PpStatus::Parse,
            format!("line {}, column {}: {e}", e.line(), e.column()),
        )
    })
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn pp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread. Valid until the next call
/// that fails.
#[no_mangle]
pub extern "C" fn pp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a decorated graph.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_decgraph_from_json(
    json_text: *const c_char,
    out_graph: *mut *mut PpDecGraph,
) -> PpStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        let dg = decgraph_from_value(&json(json_text)?).map_err(lib)?;
        *slot = Box::into_raw(Box::new(PpDecGraph { inner: dg }));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from [`pp_decgraph_from_json`].
#[no_mangle]
pub unsafe extern "C" fn pp_decgraph_free(g: *mut PpDecGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a handle spec (any kind).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_from_json(
    json_text: *const c_char,
    out_partial: *mut *mut PpPartial,
) -> PpStatus {
    guard(|| {
        let slot = out(out_partial, "out_partial")?;
        let h = handle_from_value(&json(json_text)?).map_err(lib)?;
        *slot = Box::into_raw(Box::new(PpPartial { inner: h }));
        Ok(())
    })
}

/// The partial group of a decorated graph. The graph stays owned by the
/// caller.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_build(
    g: *const PpDecGraph,
    out_partial: *mut *mut PpPartial,
) -> PpStatus {
    guard(|| {
        let slot = out(out_partial, "out_partial")?;
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let h = AnyHandle::Dec(build(g.inner.clone()));
        *slot = Box::into_raw(Box::new(PpPartial { inner: h }));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a partial-group handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_free(p: *mut PpPartial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn partial<'a>(p: *const PpPartial) -> Result<&'a AnyHandle, (PpStatus, String)> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null("partial group"))
}

/// Whether `elem` (element text, e.g. `"a b.2"`) is an element.
///
/// # Safety
/// Pointers must be valid; `elem` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_contains(
    p: *const PpPartial,
    elem: *const c_char,
    out_result: *mut bool,
) -> PpStatus {
    guard(|| {
        let h = partial(p)?;
        let s = text(elem, "elem")?;
        let slot = out(out_result, "out_result")?;
        *slot = with_handle!(h, q => match q.parse_elem_text(s) {
            Ok(e) => q.contains(&e),
            Err(Error::Parse(m)) => return Err((PpStatus::Parse, m)),
            Err(Error::UnknownVertex(m)) => return Err((PpStatus::Parse, format!("unknown vertex {m}"))),
            Err(_) => false,
        });
        Ok(())
    })
}

/// Whether `word` (elements separated by `|`) lies in the domain.
///
/// # Safety
/// Pointers must be valid; `word` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_in_domain(
    p: *const PpPartial,
    word: *const c_char,
    out_result: *mut bool,
) -> PpStatus {
    guard(|| {
        let h = partial(p)?;
        let s = text(word, "word")?;
        let slot = out(out_result, "out_result")?;
        *slot = with_handle!(h, q => q.in_domain(&q.parse_word_text(s).map_err(lib)?));
        Ok(())
    })
}

/// Product of `word`; the returned text must be freed with
/// [`pp_string_free`]. Fails with `NotInDomain` outside the domain.
///
/// # Safety
/// Pointers must be valid; `word` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_product(
    p: *const PpPartial,
    word: *const c_char,
    out_text: *mut *mut c_char,
) -> PpStatus {
    guard(|| {
        let h = partial(p)?;
        let s = text(word, "word")?;
        let slot = out(out_text, "out_text")?;
        let prod = with_handle!(h, q => {
            let w = q.parse_word_text(s).map_err(lib)?;
            q.format_elem(&q.product(&w).map_err(lib)?)
        });
        *slot = CString::new(prod)
            .map_err(|_| (PpStatus::Internal, "nul in element text".to_string()))?
            .into_raw();
        Ok(())
    })
}

/// Number of elements of size at most `max_size`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_element_count(
    p: *const PpPartial,
    max_size: usize,
    out_count: *mut usize,
) -> PpStatus {
    guard(|| {
        let h = partial(p)?;
        let slot = out(out_count, "out_count")?;
        *slot = with_handle!(h, q => q.elements(max_size).len());
        Ok(())
    })
}

/// Checks the axioms up to the bounds; `out_passed` is false on a
/// violation. Fails with `Limit` if the enumeration cap is reached.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pp_partial_check_axioms(
    p: *const PpPartial,
    max_elem_size: usize,
    max_word_len: usize,
    out_passed: *mut bool,
) -> PpStatus {
    guard(|| {
        let h = partial(p)?;
        let slot = out(out_passed, "out_passed")?;
        let bounds = Bounds::new(max_elem_size, max_word_len);
        let (passed, complete) = with_handle!(h, q => {
            let r = check_axioms(q, &bounds);
            (r.all_passed(), r.complete)
        });
        if !complete && passed {
            return Err((PpStatus::Limit, "domain-word cap reached".into()));
        }
        *slot = passed;
        Ok(())
    })
}

/// Order of the automorphism group of a decorated graph.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pp_decgraph_aut_order(
    g: *const PpDecGraph,
    out_order: *mut usize,
) -> PpStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let slot = out(out_order, "out_order")?;
        *slot = aut_group(&g.inner, &SearchLimits::default())
            .map_err(lib)?
            .order();
        Ok(())
    })
}

/// Whether the graph is recovered from its partial group using elements
/// of size at most `max_elem_size`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pp_decgraph_recover(
    g: *const PpDecGraph,
    max_elem_size: usize,
    out_found: *mut bool,
) -> PpStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let slot = out(out_found, "out_found")?;
        let b = AnalysisBounds {
            max_elem_size,
            ..AnalysisBounds::default()
        };
        *slot = recover_check(&g.inner, &b, &SearchLimits::default())
            .map_err(lib)?
            .iso
            .is_some();
        Ok(())
    })
}

//! C interface to the oscillating-tableaux library.
//!
//! Objects live behind opaque handles created by `*_parse` or by a mapping
//! function and released with the matching `*_free`. Every fallible function
//! returns an [`OsctabStatus`]; on failure the message is available from
//! [`osctab_last_error`] on the same thread. Strings handed out by the
//! library must be released with [`osctab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use oscillating_tableaux::bijection::{
    gen_oscillating_to_ssyt, oscillating_to_syt, ssyt_to_gen_oscillating, syt_to_oscillating,
    GeneralizedOscillatingTableau, OscillatingTableau,
};
use oscillating_tableaux::counting::{bessel_count, count_oscillating, count_syt};
use oscillating_tableaux::{Error, SemistandardTableau, StandardTableau};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OsctabStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text could not be parsed.
    Parse = 3,
    /// Input violated a precondition (bounds, shapes, chain steps).
    Invalid = 4,
    /// An internal invariant failed; please report.
    Internal = 5,
}

/// Standard tableau.
pub struct OsctabSyt(StandardTableau);
/// Oscillating tableau.
pub struct OsctabOsc(OscillatingTableau);
/// Semistandard tableau.
pub struct OsctabSsyt(SemistandardTableau);
/// Generalized oscillating tableau (alternating vertical-strip steps).
pub struct OsctabGenOsc(GeneralizedOscillatingTableau);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn status_of(e: &Error) -> OsctabStatus {
    match e {
        Error::Parse { .. } | Error::InvalidPartition(_) => OsctabStatus::Parse,
        _ => OsctabStatus::Invalid,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (OsctabStatus, String)>) -> OsctabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OsctabStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            OsctabStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (OsctabStatus, String) {
    (status_of(&e), e.to_string())
}

/// # Safety
/// `text` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, (OsctabStatus, String)> {
    if text.is_null() {
        return Err((OsctabStatus::NullArgument, "null input string".into()));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| (OsctabStatus::InvalidUtf8, e.to_string()))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (OsctabStatus, String)> {
    if out.is_null() {
        return Err((OsctabStatus::NullArgument, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (OsctabStatus, String)> {
    if out.is_null() {
        return Err((OsctabStatus::NullArgument, "null output pointer".into()));
    }
    *out = CString::new(s)
        .expect("library text has no nul bytes")
        .into_raw();
    Ok(())
}

/// # Safety
/// `h` must be null or a live handle of type `T`.
unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, (OsctabStatus, String)> {
    h.as_ref()
        .ok_or_else(|| (OsctabStatus::NullArgument, "null handle".into()))
}

/// Message of the last failure on this thread, or null. The string must be
/// released with [`osctab_string_free`].
#[no_mangle]
pub extern "C" fn osctab_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn osctab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
unsafe fn parse_into<T, H>(text: *const c_char, out: *mut *mut H, wrap: fn(T) -> H) -> OsctabStatus
where
    T: std::str::FromStr<Err = Error>,
{
    guard(|| {
        let v: T = read_str(text)?.parse().map_err(lib_err)?;
        put(out, wrap(v))
    })
}

/// # Safety
/// `h` must be a live handle and `out` valid for writes.
unsafe fn render<H>(h: *const H, out: *mut *mut c_char, text: fn(&H) -> String) -> OsctabStatus {
    guard(|| put_string(out, text(handle(h)?)))
}

/// # Safety
/// `h` must be null or a live handle, not used afterwards.
unsafe fn release<H>(h: *mut H) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Parses a standard tableau (rows of entries, one row per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_syt_parse(
    text: *const c_char,
    out: *mut *mut OsctabSyt,
) -> OsctabStatus {
    parse_into(text, out, OsctabSyt)
}

/// Canonical text form, newline-terminated.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_syt_to_string(
    h: *const OsctabSyt,
    out: *mut *mut c_char,
) -> OsctabStatus {
    render(h, out, |h| h.0.to_string())
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn osctab_syt_free(h: *mut OsctabSyt) {
    release(h)
}

/// Parses an oscillating tableau (one bracketed partition per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_osc_parse(
    text: *const c_char,
    out: *mut *mut OsctabOsc,
) -> OsctabStatus {
    parse_into(text, out, OsctabOsc)
}

/// Canonical text form, newline-terminated.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_osc_to_string(
    h: *const OsctabOsc,
    out: *mut *mut c_char,
) -> OsctabStatus {
    render(h, out, |h| h.0.to_string())
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn osctab_osc_free(h: *mut OsctabOsc) {
    release(h)
}

/// Parses a semistandard tableau; the alphabet is its largest entry.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_ssyt_parse(
    text: *const c_char,
    out: *mut *mut OsctabSsyt,
) -> OsctabStatus {
    parse_into(text, out, OsctabSsyt)
}

/// Canonical text form, newline-terminated.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_ssyt_to_string(
    h: *const OsctabSsyt,
    out: *mut *mut c_char,
) -> OsctabStatus {
    render(h, out, |h| h.0.to_string())
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn osctab_ssyt_free(h: *mut OsctabSsyt) {
    release(h)
}

/// Parses a generalized oscillating tableau (one partition per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_gen_osc_parse(
    text: *const c_char,
    out: *mut *mut OsctabGenOsc,
) -> OsctabStatus {
    parse_into(text, out, OsctabGenOsc)
}

/// Canonical text form, newline-terminated.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_gen_osc_to_string(
    h: *const OsctabGenOsc,
    out: *mut *mut c_char,
) -> OsctabStatus {
    render(h, out, |h| h.0.to_string())
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn osctab_gen_osc_free(h: *mut OsctabGenOsc) {
    release(h)
}

/// Standard tableau with columns at most `2k` long to oscillating tableau
/// with at most `k` columns.
///
/// # Safety
/// `t` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_syt_to_oscillating(
    t: *const OsctabSyt,
    k: usize,
    out: *mut *mut OsctabOsc,
) -> OsctabStatus {
    guard(|| {
        let o = syt_to_oscillating(&handle(t)?.0, k).map_err(lib_err)?;
        put(out, OsctabOsc(o))
    })
}

/// # Safety
/// `o` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_oscillating_to_syt(
    o: *const OsctabOsc,
    out: *mut *mut OsctabSyt,
) -> OsctabStatus {
    guard(|| {
        let t = oscillating_to_syt(&handle(o)?.0).map_err(lib_err)?;
        put(out, OsctabSyt(t))
    })
}

/// Number of steps of an oscillating tableau, or 0 for null.
///
/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osctab_osc_len(o: *const OsctabOsc) -> usize {
    o.as_ref().map_or(0, |o| o.0.len())
}

/// # Safety
/// `t` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_ssyt_to_gen_oscillating(
    t: *const OsctabSsyt,
    k: usize,
    out: *mut *mut OsctabGenOsc,
) -> OsctabStatus {
    guard(|| {
        let o = ssyt_to_gen_oscillating(&handle(t)?.0, k).map_err(lib_err)?;
        put(out, OsctabGenOsc(o))
    })
}

/// # Safety
/// `o` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_gen_oscillating_to_ssyt(
    o: *const OsctabGenOsc,
    out: *mut *mut OsctabSsyt,
) -> OsctabStatus {
    guard(|| {
        let t = gen_oscillating_to_ssyt(&handle(o)?.0).map_err(lib_err)?;
        put(out, OsctabSsyt(t))
    })
}

/// Number of oscillating tableaux of length `n`, at most `k` columns, ending
/// at a column of height `m`, as a decimal string.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_count_oscillating(
    n: usize,
    k: usize,
    m: usize,
    out: *mut *mut c_char,
) -> OsctabStatus {
    guard(|| put_string(out, count_oscillating(n, k, m).to_string()))
}

/// Standard tableaux of size `n` with columns at most `max_col_len` long and
/// `odd_cols` odd columns, as a decimal string.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_count_syt(
    n: usize,
    max_col_len: usize,
    odd_cols: usize,
    out: *mut *mut c_char,
) -> OsctabStatus {
    guard(|| put_string(out, count_syt(n, max_col_len, odd_cols).to_string()))
}

/// Same count as [`osctab_count_oscillating`], from the Bessel determinant.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn osctab_bessel_count(
    n: usize,
    k: usize,
    m: usize,
    out: *mut *mut c_char,
) -> OsctabStatus {
    guard(|| {
        let v = bessel_count(n, k, m).map_err(lib_err)?;
        put_string(out, v.to_string())
    })
}

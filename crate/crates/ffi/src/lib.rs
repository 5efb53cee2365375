//! C ABI over `cpcode`.
//!
//! Codes and decoder lists are opaque heap handles released with their
//! `_free` function. Complex words cross the boundary as interleaved
//! `re, im` doubles of length `2 n`. Every entry point returns a
//! [`CpcStatus`]; panics are caught and reported as `Panic`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use cpcode::analysis::EvaluationCode;
use cpcode::codebook::cp_encode;
use cpcode::list::{cp_list_decode_with, gs_params, ListOptions};
use cpcode::unique::cp_decode;
use cpcode::{CodeParams, ComplexWord, Error, Polynomial};
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpcStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    DecodeFailure = 3,
    BufferTooSmall = 4,
    NotInMessageSpace = 5,
    Internal = 6,
    Panic = 7,
}

impl From<&Error> for CpcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DecodingFailure(_) => CpcStatus::DecodeFailure,
            Error::NotInMessageSpace => CpcStatus::NotInMessageSpace,
            Error::Internal(_) => CpcStatus::Internal,
            _ => CpcStatus::InvalidArgument,
        }
    }
}

/// A CP code over a prime or prime-power field.
pub struct CpcCode {
    params: CodeParams,
}

/// Messages returned by the list decoder.
pub struct CpcList {
    items: Vec<Vec<u32>>,
}

/// Guruswami-Sudan parameters for `(n, k, s)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CpcGsParams {
    pub c: usize,
    pub tau: usize,
    /// Negative when no word is decodable.
    pub t: i64,
    pub ell: usize,
}

fn guard(f: impl FnOnce() -> CpcStatus) -> CpcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CpcStatus::Panic)
}

fn complex_word(data: *const f64, len: usize, n: usize) -> Result<ComplexWord, CpcStatus> {
    if data.is_null() {
        return Err(CpcStatus::NullPointer);
    }
    if len != 2 * n {
        return Err(CpcStatus::InvalidArgument);
    }
    // SAFETY: caller guarantees `data` points to `len` readable doubles.
    let v = unsafe { slice::from_raw_parts(data, len) };
    Ok(ComplexWord(v.chunks_exact(2).map(|c| Complex64::new(c[0], c[1])).collect()))
}

/// Copies `src` into a caller buffer, reporting the required length in `written`.
fn copy_out(src: &[u32], out: *mut u32, cap: usize, written: *mut usize) -> CpcStatus {
    if written.is_null() {
        return CpcStatus::NullPointer;
    }
    // SAFETY: non-null checked above; caller owns the pointee.
    unsafe { *written = src.len() };
    if src.len() > cap {
        return CpcStatus::BufferTooSmall;
    }
    if !src.is_empty() {
        if out.is_null() {
            return CpcStatus::NullPointer;
        }
        // SAFETY: `out` has room for `cap >= src.len()` elements.
        unsafe { ptr::copy_nonoverlapping(src.as_ptr(), out, src.len()) };
    }
    CpcStatus::Ok
}

/// Creates the CP code of length `q - 1` with messages of degree at most `k`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn cpc_code_new(q: u32, k: usize, out: *mut *mut CpcCode) -> CpcStatus {
    guard(|| {
        if out.is_null() {
            return CpcStatus::NullPointer;
        }
        match CodeParams::new(q, k) {
            Ok(params) => {
                *out = Box::into_raw(Box::new(CpcCode { params }));
                CpcStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// # Safety
/// `code` must be null or a handle from [`cpc_code_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cpc_code_free(code: *mut CpcCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Code length `n`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cpc_code_length(code: *const CpcCode) -> usize {
    code.as_ref().map_or(0, |c| c.params.n())
}

/// Encodes `f` (coefficients, constant term first) into `2 n` interleaved doubles.
///
/// # Safety
/// `coeffs` must hold `len` values and `out` must hold `out_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn cpc_cp_encode(
    code: *const CpcCode,
    coeffs: *const u32,
    len: usize,
    out: *mut f64,
    out_len: usize,
) -> CpcStatus {
    guard(|| {
        let Some(code) = code.as_ref() else { return CpcStatus::NullPointer };
        if (coeffs.is_null() && len > 0) || out.is_null() {
            return CpcStatus::NullPointer;
        }
        let n = code.params.n();
        if out_len < 2 * n {
            return CpcStatus::BufferTooSmall;
        }
        let c = if len == 0 { &[][..] } else { slice::from_raw_parts(coeffs, len) };
        let f = match Polynomial::from_coeffs(code.params.field(), c.to_vec()) {
            Ok(f) => f,
            Err(e) => return (&e).into(),
        };
        match cp_encode(&f, &code.params) {
            Ok(w) => {
                let dst = slice::from_raw_parts_mut(out, 2 * n);
                for (pair, z) in dst.chunks_exact_mut(2).zip(&w.0) {
                    pair[0] = z.re;
                    pair[1] = z.im;
                }
                CpcStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Unique decoding. On success the message is written to `coeffs_out` and its
/// length to `written`; `corrected` (optional) receives the error count.
///
/// # Safety
/// `word` must hold `word_len` doubles, `coeffs_out` `cap` values; `written`
/// must be valid and `corrected` null or valid.
#[no_mangle]
pub unsafe extern "C" fn cpc_cp_decode(
    code: *const CpcCode,
    word: *const f64,
    word_len: usize,
    coeffs_out: *mut u32,
    cap: usize,
    written: *mut usize,
    corrected: *mut usize,
) -> CpcStatus {
    guard(|| {
        let Some(code) = code.as_ref() else { return CpcStatus::NullPointer };
        let w = match complex_word(word, word_len, code.params.n()) {
            Ok(w) => w,
            Err(s) => return s,
        };
        match cp_decode(&w, &code.params) {
            Ok(r) => {
                if let Some(c) = corrected.as_mut() {
                    *c = r.corrected_errors;
                }
                copy_out(r.message.coeffs(), coeffs_out, cap, written)
            }
            Err(e) => (&e).into(),
        }
    })
}

/// List decoding with multiplicity `s`; the handle is written to `out`.
///
/// # Safety
/// `word` must hold `word_len` doubles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cpc_cp_list_decode(
    code: *const CpcCode,
    word: *const f64,
    word_len: usize,
    s: usize,
    out: *mut *mut CpcList,
) -> CpcStatus {
    guard(|| {
        let Some(code) = code.as_ref() else { return CpcStatus::NullPointer };
        if out.is_null() {
            return CpcStatus::NullPointer;
        }
        let w = match complex_word(word, word_len, code.params.n()) {
            Ok(w) => w,
            Err(s) => return s,
        };
        match cp_list_decode_with(&w, s, &code.params, &ListOptions::default()) {
            Ok(res) => {
                let items = res.list.iter().map(|f| f.coeffs().to_vec()).collect();
                *out = Box::into_raw(Box::new(CpcList { items }));
                CpcStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Number of messages in a list, or 0 for a null handle.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cpc_list_len(list: *const CpcList) -> usize {
    list.as_ref().map_or(0, |l| l.items.len())
}

/// Copies message `index` into `coeffs_out`.
///
/// # Safety
/// `list` must be live, `coeffs_out` must hold `cap` values, `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cpc_list_get(
    list: *const CpcList,
    index: usize,
    coeffs_out: *mut u32,
    cap: usize,
    written: *mut usize,
) -> CpcStatus {
    guard(|| {
        let Some(list) = list.as_ref() else { return CpcStatus::NullPointer };
        match list.items.get(index) {
            Some(item) => copy_out(item, coeffs_out, cap, written),
            None => CpcStatus::InvalidArgument,
        }
    })
}

/// # Safety
/// `list` must be null or a handle from [`cpc_cp_list_decode`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cpc_list_free(list: *mut CpcList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cpc_gs_params(n: usize, k: usize, s: usize, out: *mut CpcGsParams) -> CpcStatus {
    guard(|| {
        let Some(out) = out.as_mut() else { return CpcStatus::NullPointer };
        match gs_params(n, k, s) {
            Ok(p) => {
                *out = CpcGsParams { c: p.c, tau: p.tau, t: p.t, ell: p.ell };
                CpcStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Exhaustive minimum distance of the code's field image.
///
/// # Safety
/// `code` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cpc_min_distance(code: *const CpcCode, out: *mut usize) -> CpcStatus {
    guard(|| {
        let (Some(code), Some(out)) = (code.as_ref(), out.as_mut()) else { return CpcStatus::NullPointer };
        match EvaluationCode::cp_code(&code.params).min_distance(cpcode::analysis::ENUMERATION_BUDGET) {
            Ok(d) => {
                *out = d;
                CpcStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn cpc_status_message(status: CpcStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        CpcStatus::Ok => b"ok\0",
        CpcStatus::InvalidArgument => b"invalid argument\0",
        CpcStatus::NullPointer => b"null pointer\0",
        CpcStatus::DecodeFailure => b"decoding failure\0",
        CpcStatus::BufferTooSmall => b"buffer too small\0",
        CpcStatus::NotInMessageSpace => b"message not in the message space\0",
        CpcStatus::Internal => b"internal error\0",
        CpcStatus::Panic => b"panic caught at the C boundary\0",
    };
    s.as_ptr().cast()
}

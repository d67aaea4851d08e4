//! C ABI for the dupfree library.
//!
//! Words are opaque handles created by `df_word_parse` (or returned by
//! operations) and released with `df_word_free`. Strings returned through
//! out-parameters are NUL-terminated, allocated by this library, and must
//! be released with `df_string_free`. Every function reports a `DfStatus`;
//! out-parameters are written only on `DF_STATUS_OK` unless documented
//! otherwise.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use dupfree::decode::DecodeResult;
use dupfree::verify::ConeOptions;
use dupfree::{
    apply_duplication, count_code, decode_bruteforce, decode_equal_length, decode_uniform,
    extract_disjoint_duplications, is_codeword, negative_control, phi, phi_inverse, rate,
    sample_corruption, verify_theorem, Alphabet, ChannelModel, DupEvent, Error, LenSet, LengthSpec,
    Word,
};

/// Opaque handle to a word over `Z_q`.
pub struct DfWord {
    inner: Word,
}

/// Result codes for every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A parameter combination outside an operation's domain.
    InvalidArgument = 2,
    /// Text could not be parsed as a word.
    ParseError = 3,
    /// A rule was applied to a word shorter than it requires.
    WordTooShort = 4,
    /// The requested factor is not a square.
    NotASquare = 5,
    /// The separation requirement on L failed.
    SeparationViolation = 6,
    /// The requested disjoint blocks cannot fit.
    InfeasiblePlan = 7,
    /// A plan does not decompose the word it is applied to.
    MalformedPlan = 8,
    /// A configured budget was exceeded.
    ResourceLimit = 9,
    /// The rate of an empty code is undefined.
    EmptyCode = 10,
    /// Decoding found no candidate codeword.
    NoCandidate = 11,
    /// Decoding found more than one candidate codeword.
    Ambiguous = 12,
    /// An output buffer is too small; the required size was reported.
    BufferTooSmall = 13,
}

/// Corruption models exposed over the ABI.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfModel {
    Unrestricted = 0,
    Disjoint = 1,
    EqualLength = 2,
    DisjointEqualLength = 3,
}

impl From<DfModel> for ChannelModel {
    fn from(m: DfModel) -> ChannelModel {
        match m {
            DfModel::Unrestricted => ChannelModel::Unrestricted,
            DfModel::Disjoint => ChannelModel::Disjoint,
            DfModel::EqualLength => ChannelModel::EqualLength,
            DfModel::DisjointEqualLength => ChannelModel::DisjointEqualLength,
        }
    }
}

fn status_of(e: &Error) -> DfStatus {
    match e {
        Error::ParseWord { .. } => DfStatus::ParseError,
        Error::WordTooShort { .. } => DfStatus::WordTooShort,
        Error::NotASquare { .. } => DfStatus::NotASquare,
        Error::SeparationViolation { .. } => DfStatus::SeparationViolation,
        Error::InfeasiblePlan { .. } => DfStatus::InfeasiblePlan,
        Error::MalformedPlan => DfStatus::MalformedPlan,
        Error::ResourceLimit { .. } => DfStatus::ResourceLimit,
        Error::EmptyCode => DfStatus::EmptyCode,
        _ => DfStatus::InvalidArgument,
    }
}

/// A short static description of a status code.
#[no_mangle]
pub extern "C" fn df_status_message(status: DfStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        DfStatus::Ok => b"ok\0",
        DfStatus::NullArgument => b"required pointer argument was NULL\0",
        DfStatus::InvalidArgument => b"invalid argument\0",
        DfStatus::ParseError => b"cannot parse word\0",
        DfStatus::WordTooShort => b"word too short for this operation\0",
        DfStatus::NotASquare => b"factor is not a square\0",
        DfStatus::SeparationViolation => b"length set violates the separation requirement\0",
        DfStatus::InfeasiblePlan => b"disjoint blocks cannot fit\0",
        DfStatus::MalformedPlan => b"plan does not decompose the word\0",
        DfStatus::ResourceLimit => b"configured budget exceeded\0",
        DfStatus::EmptyCode => b"rate of an empty code is undefined\0",
        DfStatus::NoCandidate => b"no candidate codeword\0",
        DfStatus::Ambiguous => b"more than one candidate codeword\0",
        DfStatus::BufferTooSmall => b"output buffer too small\0",
    };
    msg.as_ptr() as *const c_char
}

unsafe fn set_out<T>(out: *mut T, value: T) {
    if !out.is_null() {
        ptr::write(out, value);
    }
}

fn lengths_from_raw(ptr: *const usize, len: usize) -> Result<LenSet, DfStatus> {
    if len == 0 {
        return Ok(LenSet::new());
    }
    if ptr.is_null() {
        return Err(DfStatus::NullArgument);
    }
    let slice = unsafe { std::slice::from_raw_parts(ptr, len) };
    Ok(slice.iter().copied().collect())
}

/// Parses a word from its text form (digits for `q <= 10`, comma-separated
/// integers otherwise). On success writes a new handle to `out`.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_word_parse(
    text: *const c_char,
    q: u32,
    out: *mut *mut DfWord,
) -> DfStatus {
    if text.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(t) => t,
        Err(_) => return DfStatus::ParseError,
    };
    let alphabet = match Alphabet::new(q) {
        Ok(a) => a,
        Err(e) => return status_of(&e),
    };
    match Word::parse(text, alphabet) {
        Ok(word) => {
            set_out(out, Box::into_raw(Box::new(DfWord { inner: word })));
            DfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Formats a word into a newly allocated NUL-terminated string.
///
/// # Safety
/// `word` must be a live handle; `out` must be valid. Release the string
/// with `df_string_free`.
#[no_mangle]
pub unsafe extern "C" fn df_word_to_text(word: *const DfWord, out: *mut *mut c_char) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    let text = (*word).inner.to_text();
    match CString::new(text) {
        Ok(c) => {
            set_out(out, c.into_raw());
            DfStatus::Ok
        }
        Err(_) => DfStatus::InvalidArgument,
    }
}

/// Number of letters; zero for NULL.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn df_word_len(word: *const DfWord) -> usize {
    if word.is_null() {
        0
    } else {
        (*word).inner.len()
    }
}

/// Alphabet size of a word; zero for NULL.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn df_word_alphabet_size(word: *const DfWord) -> u32 {
    if word.is_null() {
        0
    } else {
        (*word).inner.alphabet().size()
    }
}

/// Copies the letters of a word into `buf`. Writes the letter count to
/// `count`; returns `BufferTooSmall` when `cap` is insufficient (the
/// count is still written, letting callers size a second call).
///
/// # Safety
/// `word` must be a live handle; `buf` must hold `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn df_word_letters(
    word: *const DfWord,
    buf: *mut u32,
    cap: usize,
    count: *mut usize,
) -> DfStatus {
    if word.is_null() || count.is_null() {
        return DfStatus::NullArgument;
    }
    let letters = (*word).inner.letters();
    set_out(count, letters.len());
    if letters.is_empty() {
        return DfStatus::Ok;
    }
    if cap < letters.len() {
        return DfStatus::BufferTooSmall;
    }
    if buf.is_null() {
        return DfStatus::NullArgument;
    }
    ptr::copy_nonoverlapping(letters.as_ptr(), buf, letters.len());
    DfStatus::Ok
}

/// Releases a word handle. NULL is ignored.
///
/// # Safety
/// `word` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn df_word_free(word: *mut DfWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn df_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Applies one tandem duplication (`uvw -> uvvw`, `|u| = prefix_len`,
/// `|v| = dup_len`) and writes the result handle to `out`.
///
/// # Safety
/// `word` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_apply_duplication(
    word: *const DfWord,
    prefix_len: usize,
    dup_len: usize,
    out: *mut *mut DfWord,
) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    match apply_duplication(&(*word).inner, DupEvent::new(prefix_len, dup_len)) {
        Ok(z) => {
            set_out(out, Box::into_raw(Box::new(DfWord { inner: z })));
            DfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Whether the word contains no square with half-length in `forbidden`.
///
/// # Safety
/// `word` must be a live handle; `forbidden` must hold `forbidden_len`
/// entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_is_codeword(
    word: *const DfWord,
    forbidden: *const usize,
    forbidden_len: usize,
    out: *mut bool,
) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    let f = match lengths_from_raw(forbidden, forbidden_len) {
        Ok(f) => f,
        Err(s) => return s,
    };
    set_out(out, is_codeword(&(*word).inner, &f));
    DfStatus::Ok
}

/// Counts the duplication-free code of length `n` over `Z_q`.
///
/// # Safety
/// `forbidden` must hold `forbidden_len` entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_count_code(
    n: usize,
    q: u32,
    forbidden: *const usize,
    forbidden_len: usize,
    out: *mut u64,
) -> DfStatus {
    if out.is_null() {
        return DfStatus::NullArgument;
    }
    let alphabet = match Alphabet::new(q) {
        Ok(a) => a,
        Err(e) => return status_of(&e),
    };
    let f = match lengths_from_raw(forbidden, forbidden_len) {
        Ok(f) => f,
        Err(s) => return s,
    };
    set_out(out, count_code(n, alphabet, &f));
    DfStatus::Ok
}

/// The code rate `(1/n) log_q(code_size)`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_rate(code_size: u64, n: usize, q: u32, out: *mut f64) -> DfStatus {
    if out.is_null() {
        return DfStatus::NullArgument;
    }
    match rate(code_size, n, q) {
        Ok(r) => {
            set_out(out, r);
            DfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The difference transform of `word` for length `l`.
///
/// # Safety
/// `word` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_phi(word: *const DfWord, l: usize, out: *mut *mut DfWord) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    match phi(&(*word).inner, l) {
        Ok(y) => {
            set_out(out, Box::into_raw(Box::new(DfWord { inner: y })));
            DfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The inverse transform of `word` for length `l`.
///
/// # Safety
/// `word` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_phi_inverse(
    word: *const DfWord,
    l: usize,
    out: *mut *mut DfWord,
) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    match phi_inverse(&(*word).inner, l) {
        Ok(x) => {
            set_out(out, Box::into_raw(Box::new(DfWord { inner: x })));
            DfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Greedy extraction of disjoint duplications of length `l`; writes the
/// 1-based span bounds into `starts`/`ends` and the span count to `count`.
/// When `cap` is too small the count is still written and the status is
/// `BufferTooSmall`.
///
/// # Safety
/// `word` must be a live handle; `starts` and `ends` must hold `cap`
/// entries; `count` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_extract_disjoint_duplications(
    word: *const DfWord,
    l: usize,
    starts: *mut usize,
    ends: *mut usize,
    cap: usize,
    count: *mut usize,
) -> DfStatus {
    if word.is_null() || count.is_null() {
        return DfStatus::NullArgument;
    }
    let spans = match extract_disjoint_duplications(&(*word).inner, l) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    set_out(count, spans.len());
    if spans.is_empty() {
        return DfStatus::Ok;
    }
    if cap < spans.len() {
        return DfStatus::BufferTooSmall;
    }
    if starts.is_null() || ends.is_null() {
        return DfStatus::NullArgument;
    }
    for (i, span) in spans.iter().enumerate() {
        ptr::write(starts.add(i), span.start());
        ptr::write(ends.add(i), span.end());
    }
    DfStatus::Ok
}

fn decode_result_to_ffi(result: DecodeResult, out: *mut *mut DfWord) -> DfStatus {
    match result {
        DecodeResult::Unique { codeword, .. } => {
            unsafe { set_out(out, Box::into_raw(Box::new(DfWord { inner: codeword }))) };
            DfStatus::Ok
        }
        DecodeResult::Ambiguous { .. } => DfStatus::Ambiguous,
        DecodeResult::NoCandidate => DfStatus::NoCandidate,
    }
}

/// Decodes a word corrupted by duplications of the known length `l` back
/// to the length-`n` codeword. `Ok` means a unique decode; the handle is
/// written to `out`.
///
/// # Safety
/// `word` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_decode_uniform(
    word: *const DfWord,
    l: usize,
    n: usize,
    out: *mut *mut DfWord,
) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    match decode_uniform(&(*word).inner, l, n) {
        Ok(result) => decode_result_to_ffi(result, out),
        Err(e) => status_of(&e),
    }
}

/// Decodes under the equal-length model, trying every length in L. On
/// success also reports which length decoded via `length_used` (may be
/// NULL).
///
/// # Safety
/// `word` must be a live handle; `lengths` must hold `lengths_len`
/// entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_decode_equal_length(
    word: *const DfWord,
    lengths: *const usize,
    lengths_len: usize,
    n: usize,
    out: *mut *mut DfWord,
    length_used: *mut usize,
) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    let l = match lengths_from_raw(lengths, lengths_len) {
        Ok(l) => l,
        Err(s) => return s,
    };
    let spec = match LengthSpec::new(l, ChannelModel::EqualLength) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    match decode_equal_length(&(*word).inner, &spec, n) {
        Ok(DecodeResult::Unique {
            codeword,
            length_used: used,
        }) => {
            if let Some(used) = used {
                set_out(length_used, used);
            }
            set_out(out, Box::into_raw(Box::new(DfWord { inner: codeword })));
            DfStatus::Ok
        }
        Ok(DecodeResult::Ambiguous { .. }) => DfStatus::Ambiguous,
        Ok(DecodeResult::NoCandidate) => DfStatus::NoCandidate,
        Err(e) => status_of(&e),
    }
}

/// Exhaustive decode for the disjoint models (`Disjoint` or
/// `DisjointEqualLength`), bounded by `budget` search nodes.
///
/// # Safety
/// `word` must be a live handle; `lengths` must hold `lengths_len`
/// entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_decode_bruteforce(
    word: *const DfWord,
    lengths: *const usize,
    lengths_len: usize,
    n: usize,
    model: DfModel,
    budget: usize,
    out: *mut *mut DfWord,
) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    let l = match lengths_from_raw(lengths, lengths_len) {
        Ok(l) => l,
        Err(s) => return s,
    };
    let channel_model = ChannelModel::from(model);
    let spec = match LengthSpec::new(l, channel_model) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    match decode_bruteforce(&(*word).inner, &spec, n, channel_model, budget) {
        Ok(result) => decode_result_to_ffi(result, out),
        Err(e) => status_of(&e),
    }
}

/// Draws a corruption with `t` duplications under `model`, deterministic
/// in the seed, and writes the corrupted word to `out`.
///
/// # Safety
/// `word` must be a live handle; `lengths` must hold `lengths_len`
/// entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn df_sample_corruption(
    word: *const DfWord,
    model: DfModel,
    lengths: *const usize,
    lengths_len: usize,
    t: usize,
    seed: u64,
    out: *mut *mut DfWord,
) -> DfStatus {
    if word.is_null() || out.is_null() {
        return DfStatus::NullArgument;
    }
    let l = match lengths_from_raw(lengths, lengths_len) {
        Ok(l) => l,
        Err(s) => return s,
    };
    match sample_corruption(&(*word).inner, model.into(), &l, t, seed) {
        Ok((z, _)) => {
            set_out(out, Box::into_raw(Box::new(DfWord { inner: z })));
            DfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Exhaustively verifies one construction (`theorem` in 1..=3) at bounded
/// scale, or the negative control when `theorem` is 0. Writes whether the
/// check passed to `passed` and, when `report` is non-NULL, the stable
/// text report.
///
/// `max_events = 0` leaves the per-derivation event count unbounded.
///
/// # Safety
/// `lengths` must hold `lengths_len` entries; `passed` must be valid;
/// `report`, if non-NULL, receives a string to release with
/// `df_string_free`.
#[no_mangle]
pub unsafe extern "C" fn df_verify(
    theorem: u32,
    n: usize,
    q: u32,
    lengths: *const usize,
    lengths_len: usize,
    max_len: usize,
    max_events: usize,
    cap: usize,
    seed: u64,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> DfStatus {
    if passed.is_null() {
        return DfStatus::NullArgument;
    }
    let alphabet = match Alphabet::new(q) {
        Ok(a) => a,
        Err(e) => return status_of(&e),
    };
    let l = match lengths_from_raw(lengths, lengths_len) {
        Ok(l) => l,
        Err(s) => return s,
    };
    let opts = ConeOptions::new(max_len)
        .with_max_events(if max_events == 0 {
            None
        } else {
            Some(max_events)
        })
        .with_member_cap(cap);
    let result = if theorem == 0 {
        negative_control(n, alphabet, &l, &opts, seed)
    } else {
        verify_theorem(theorem as u8, n, alphabet, &l, &opts, seed)
    };
    match result {
        Ok(r) => {
            set_out(passed, r.passed());
            if !report.is_null() {
                match CString::new(r.to_text()) {
                    Ok(c) => set_out(report, c.into_raw()),
                    Err(_) => return DfStatus::InvalidArgument,
                }
            }
            DfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn parse(text: &str, q: u32) -> *mut DfWord {
        let c = CString::new(text).unwrap();
        let mut out: *mut DfWord = ptr::null_mut();
        assert_eq!(df_word_parse(c.as_ptr(), q, &mut out), DfStatus::Ok);
        assert!(!out.is_null());
        out
    }

    unsafe fn text_of(w: *const DfWord) -> String {
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(df_word_to_text(w, &mut s), DfStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_string();
        df_string_free(s);
        text
    }

    #[test]
    fn parse_format_round_trip() {
        unsafe {
            let w = parse("054213", 6);
            assert_eq!(df_word_len(w), 6);
            assert_eq!(df_word_alphabet_size(w), 6);
            assert_eq!(text_of(w), "054213");
            df_word_free(w);
        }
    }

    #[test]
    fn null_arguments_are_rejected() {
        unsafe {
            let mut out: *mut DfWord = ptr::null_mut();
            assert_eq!(
                df_word_parse(ptr::null(), 6, &mut out),
                DfStatus::NullArgument
            );
            assert_eq!(df_word_len(ptr::null()), 0);
            let c = CString::new("01").unwrap();
            assert_eq!(
                df_word_parse(c.as_ptr(), 6, ptr::null_mut()),
                DfStatus::NullArgument
            );
            df_word_free(ptr::null_mut());
            df_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn duplication_and_transform() {
        unsafe {
            let x = parse("054213", 6);
            let mut z: *mut DfWord = ptr::null_mut();
            assert_eq!(df_apply_duplication(x, 1, 2, &mut z), DfStatus::Ok);
            assert_eq!(text_of(z), "05454213");

            let mut y: *mut DfWord = ptr::null_mut();
            assert_eq!(df_phi(x, 2, &mut y), DfStatus::Ok);
            assert_eq!(text_of(y), "054331");

            let mut back: *mut DfWord = ptr::null_mut();
            assert_eq!(df_phi_inverse(y, 2, &mut back), DfStatus::Ok);
            assert_eq!(text_of(back), "054213");

            assert_eq!(
                df_apply_duplication(x, 6, 1, &mut z),
                DfStatus::WordTooShort
            );

            df_word_free(x);
            df_word_free(z);
            df_word_free(y);
            df_word_free(back);
        }
    }

    #[test]
    fn letters_buffer_protocol() {
        unsafe {
            let w = parse("0102", 3);
            let mut count = 0usize;
            assert_eq!(
                df_word_letters(w, ptr::null_mut(), 0, &mut count),
                DfStatus::BufferTooSmall
            );
            assert_eq!(count, 4);
            let mut buf = vec![0u32; count];
            assert_eq!(
                df_word_letters(w, buf.as_mut_ptr(), buf.len(), &mut count),
                DfStatus::Ok
            );
            assert_eq!(buf, vec![0, 1, 0, 2]);
            df_word_free(w);
        }
    }

    #[test]
    fn codeword_count_and_rate() {
        unsafe {
            let w = parse("054213", 6);
            let forbidden = [2usize];
            let mut ok = false;
            assert_eq!(
                df_is_codeword(w, forbidden.as_ptr(), 1, &mut ok),
                DfStatus::Ok
            );
            assert!(ok);
            df_word_free(w);

            let f = [1usize];
            let mut count = 0u64;
            assert_eq!(df_count_code(3, 2, f.as_ptr(), 1, &mut count), DfStatus::Ok);
            assert_eq!(count, 2);

            let mut r = 0f64;
            assert_eq!(df_rate(2, 3, 2, &mut r), DfStatus::Ok);
            assert!((r - 1.0 / 3.0).abs() < 1e-12);
            assert_eq!(df_rate(0, 3, 2, &mut r), DfStatus::EmptyCode);
        }
    }

    #[test]
    fn extraction_spans() {
        unsafe {
            let z = parse("054545421313", 6);
            let mut count = 0usize;
            assert_eq!(
                df_extract_disjoint_duplications(
                    z,
                    2,
                    ptr::null_mut(),
                    ptr::null_mut(),
                    0,
                    &mut count
                ),
                DfStatus::BufferTooSmall
            );
            assert_eq!(count, 2);
            let mut starts = vec![0usize; count];
            let mut ends = vec![0usize; count];
            assert_eq!(
                df_extract_disjoint_duplications(
                    z,
                    2,
                    starts.as_mut_ptr(),
                    ends.as_mut_ptr(),
                    count,
                    &mut count
                ),
                DfStatus::Ok
            );
            assert_eq!(starts, vec![2, 9]);
            assert_eq!(ends, vec![5, 12]);
            df_word_free(z);
        }
    }

    #[test]
    fn decoding_round_trips() {
        unsafe {
            let z = parse("054545421313", 6);
            let mut x: *mut DfWord = ptr::null_mut();
            assert_eq!(df_decode_uniform(z, 2, 6, &mut x), DfStatus::Ok);
            assert_eq!(text_of(x), "054213");
            df_word_free(x);

            let lengths = [2usize, 5];
            let mut x2: *mut DfWord = ptr::null_mut();
            let mut used = 0usize;
            assert_eq!(
                df_decode_equal_length(z, lengths.as_ptr(), 2, 6, &mut x2, &mut used),
                DfStatus::Ok
            );
            assert_eq!(text_of(x2), "054213");
            assert_eq!(used, 2);
            df_word_free(x2);

            // Separation violation surfaces as a status.
            let bad = [2usize, 3];
            let mut x3: *mut DfWord = ptr::null_mut();
            assert_eq!(
                df_decode_equal_length(z, bad.as_ptr(), 2, 6, &mut x3, ptr::null_mut()),
                DfStatus::SeparationViolation
            );

            df_word_free(z);
        }
    }

    #[test]
    fn bruteforce_and_sampling() {
        unsafe {
            let x = parse("054213", 6);
            let lengths = [2usize];
            let mut z: *mut DfWord = ptr::null_mut();
            assert_eq!(
                df_sample_corruption(x, DfModel::Disjoint, lengths.as_ptr(), 1, 2, 11, &mut z),
                DfStatus::Ok
            );
            assert_eq!(df_word_len(z), 10);

            let mut back: *mut DfWord = ptr::null_mut();
            assert_eq!(
                df_decode_bruteforce(
                    z,
                    lengths.as_ptr(),
                    1,
                    6,
                    DfModel::Disjoint,
                    1_000_000,
                    &mut back
                ),
                DfStatus::Ok
            );
            assert_eq!(text_of(back), "054213");

            df_word_free(x);
            df_word_free(z);
            df_word_free(back);
        }
    }

    #[test]
    fn verify_over_ffi() {
        unsafe {
            let lengths = [2usize];
            let mut passed = false;
            let mut report: *mut c_char = ptr::null_mut();
            assert_eq!(
                df_verify(
                    2,
                    5,
                    3,
                    lengths.as_ptr(),
                    1,
                    11,
                    0,
                    10_000_000,
                    0,
                    &mut passed,
                    &mut report
                ),
                DfStatus::Ok
            );
            assert!(passed);
            let text = CStr::from_ptr(report).to_str().unwrap();
            assert!(text.starts_with("check: theorem-2"));
            assert!(text.contains("result: pass"));
            df_string_free(report);

            // Negative control over the full space.
            let lengths = [1usize, 2];
            assert_eq!(
                df_verify(
                    0,
                    4,
                    2,
                    lengths.as_ptr(),
                    2,
                    8,
                    0,
                    10_000_000,
                    0,
                    &mut passed,
                    ptr::null_mut()
                ),
                DfStatus::Ok
            );
            assert!(passed);
        }
    }

    #[test]
    fn status_messages_exist() {
        unsafe {
            for status in [
                DfStatus::Ok,
                DfStatus::NoCandidate,
                DfStatus::ResourceLimit,
                DfStatus::BufferTooSmall,
            ] {
                let msg = df_status_message(status);
                assert!(!msg.is_null());
                assert!(!CStr::from_ptr(msg).to_str().unwrap().is_empty());
            }
        }
    }

    #[test]
    fn generated_header_covers_the_surface() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("include")
            .join("dupfree.h");
        let text = std::fs::read_to_string(&header).expect("header generated at build time");
        for symbol in [
            "df_word_parse",
            "df_word_free",
            "df_decode_uniform",
            "df_decode_equal_length",
            "df_decode_bruteforce",
            "df_sample_corruption",
            "df_verify",
            "DfStatus",
            "DfModel",
            "DfWord",
        ] {
            assert!(text.contains(symbol), "header is missing {}", symbol);
        }

        // The header must stand alone as C.
        let check = std::process::Command::new("cc")
            .args(["-x", "c", "-std=c99", "-fsyntax-only"])
            .arg(&header)
            .status();
        match check {
            Ok(status) => assert!(status.success(), "header does not compile as C99"),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                eprintln!("cc not found; skipped header syntax check");
            }
            Err(e) => panic!("could not run cc: {}", e),
        }
    }
}

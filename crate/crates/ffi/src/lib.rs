//! C ABI for `gridpal`.
//!
//! Words cross the boundary as opaque [`GridpalWord`] handles created by
//! [`gridpal_word_parse`] or [`gridpal_construct`] and released with
//! [`gridpal_word_free`]. Every fallible function returns a
//! [`GridpalStatus`] and writes its result through an out-pointer; on failure
//! [`gridpal_last_error_message`] describes the error. Strings returned by
//! the library must be released with [`gridpal_string_free`].
//!
//! The header `include/gridpal.h` is regenerated by the build script.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gridpal::bounds::{self, ConstructFamily};
use gridpal::palindromes::{self, FactorKind};
use gridpal::search::{self, Objective, SearchConfig};
use gridpal::{Error, Word2D};

/// Opaque two-dimensional word.
pub struct GridpalWord(Word2D);

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridpalStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Shape = 5,
    NotPalindrome = 6,
    BudgetExceeded = 7,
    Panic = 8,
}

pub const GRIDPAL_KIND_PAL2D: u32 = 0;
pub const GRIDPAL_KIND_HV: u32 = 1;
pub const GRIDPAL_KIND_HORIZONTAL: u32 = 2;
pub const GRIDPAL_KIND_VERTICAL: u32 = 3;
pub const GRIDPAL_KIND_TRIVIAL: u32 = 4;

pub const GRIDPAL_FAMILY_BINARY_MIN: u32 = 0;
pub const GRIDPAL_FAMILY_Q_MIN: u32 = 1;
pub const GRIDPAL_FAMILY_Q3_NONTRIVIAL: u32 = 2;
pub const GRIDPAL_FAMILY_Q_NONTRIVIAL: u32 = 3;

pub const GRIDPAL_OBJECTIVE_MAX: u32 = 0;
pub const GRIDPAL_OBJECTIVE_MIN: u32 = 1;

/// First occurrence of the forbidden pattern, 1-based inclusive bounds.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GridpalPattern {
    pub i1: usize,
    pub i2: usize,
    pub j1: usize,
    pub j2: usize,
    /// Unicode scalar values of the differing corner symbols.
    pub x: u32,
    pub y: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GridpalStatus {
    match e {
        Error::Parse { .. } => GridpalStatus::Parse,
        Error::RowMismatch { .. }
        | Error::ColumnMismatch { .. }
        | Error::OutOfRange { .. }
        | Error::EmptyWord(_)
        | Error::NotRectangular(_)
        | Error::ShapeMismatch(_)
        | Error::Degenerate { .. } => GridpalStatus::Shape,
        Error::NotHvPalindrome | Error::NotPalindrome => GridpalStatus::NotPalindrome,
        Error::BudgetExceeded { .. } => GridpalStatus::BudgetExceeded,
        _ => GridpalStatus::InvalidArgument,
    }
}

fn fail(status: GridpalStatus, msg: impl Into<String>) -> GridpalStatus {
    set_last_error(msg.into());
    status
}

/// Runs `f`, converting library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), GridpalStatus>) -> GridpalStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GridpalStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(GridpalStatus::Panic, "internal panic"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, GridpalStatus>;
}

impl<T> OrStatus<T> for gridpal::Result<T> {
    fn or_status(self) -> Result<T, GridpalStatus> {
        self.map_err(|e| fail(status_of(&e), e.to_string()))
    }
}

unsafe fn word_ref<'a>(w: *const GridpalWord) -> Result<&'a Word2D, GridpalStatus> {
    w.as_ref()
        .map(|w| &w.0)
        .ok_or_else(|| fail(GridpalStatus::NullPointer, "null word handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), GridpalStatus> {
    if out.is_null() {
        return Err(fail(GridpalStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn factor_kind(kind: u32) -> Result<FactorKind, GridpalStatus> {
    match kind {
        GRIDPAL_KIND_PAL2D => Ok(FactorKind::Pal2d),
        GRIDPAL_KIND_HV => Ok(FactorKind::Hv),
        GRIDPAL_KIND_HORIZONTAL => Ok(FactorKind::Horizontal),
        GRIDPAL_KIND_VERTICAL => Ok(FactorKind::Vertical),
        GRIDPAL_KIND_TRIVIAL => Ok(FactorKind::Trivial),
        k => Err(fail(
            GridpalStatus::InvalidArgument,
            format!("unknown factor kind {k}"),
        )),
    }
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn gridpal_status_name(status: GridpalStatus) -> *const c_char {
    let s: &'static CStr = match status {
        GridpalStatus::Ok => c"ok",
        GridpalStatus::NullPointer => c"null pointer",
        GridpalStatus::InvalidUtf8 => c"invalid UTF-8",
        GridpalStatus::Parse => c"parse error",
        GridpalStatus::InvalidArgument => c"invalid argument",
        GridpalStatus::Shape => c"shape error",
        GridpalStatus::NotPalindrome => c"not a palindrome",
        GridpalStatus::BudgetExceeded => c"budget exceeded",
        GridpalStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message for the most recent failure on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gridpal_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses grid text (one row per line) into a new handle.
#[no_mangle]
pub unsafe extern "C" fn gridpal_word_parse(
    text: *const c_char,
    out: *mut *mut GridpalWord,
) -> GridpalStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(GridpalStatus::NullPointer, "null text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(GridpalStatus::InvalidUtf8, e.to_string()))?;
        let word = Word2D::parse_grid(text).or_status()?;
        write_out(out, Box::into_raw(Box::new(GridpalWord(word))))
    })
}

/// Releases a handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gridpal_word_free(word: *mut GridpalWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gridpal_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn gridpal_word_shape(
    word: *const GridpalWord,
    rows: *mut usize,
    cols: *mut usize,
) -> GridpalStatus {
    guard(|| {
        let w = word_ref(word)?;
        write_out(rows, w.rows())?;
        write_out(cols, w.cols())
    })
}

/// Grid text of the word, newline-terminated rows.
#[no_mangle]
pub unsafe extern "C" fn gridpal_word_to_grid(
    word: *const GridpalWord,
    out: *mut *mut c_char,
) -> GridpalStatus {
    guard(|| {
        let w = word_ref(word)?;
        let s = CString::new(w.to_grid())
            .map_err(|_| fail(GridpalStatus::InvalidArgument, "word contains NUL"))?;
        write_out(out, s.into_raw())
    })
}

#[no_mangle]
pub unsafe extern "C" fn gridpal_is_palindrome_2d(
    word: *const GridpalWord,
    out: *mut bool,
) -> GridpalStatus {
    guard(|| write_out(out, palindromes::is_palindrome_2d(word_ref(word)?)))
}

#[no_mangle]
pub unsafe extern "C" fn gridpal_is_hv_palindrome(
    word: *const GridpalWord,
    out: *mut bool,
) -> GridpalStatus {
    guard(|| write_out(out, palindromes::is_hv_palindrome(word_ref(word)?)))
}

/// Number of distinct palindromic factors of the given `GRIDPAL_KIND_*`.
#[no_mangle]
pub unsafe extern "C" fn gridpal_count_factors(
    word: *const GridpalWord,
    kind: u32,
    out: *mut usize,
) -> GridpalStatus {
    guard(|| {
        let w = word_ref(word)?;
        let n = palindromes::count_palindromic_factors(w, factor_kind(kind)?).or_status()?;
        write_out(out, n)
    })
}

/// Sets `found` and, when true, fills `out` with the first occurrence.
#[no_mangle]
pub unsafe extern "C" fn gridpal_find_pattern(
    word: *const GridpalWord,
    found: *mut bool,
    out: *mut GridpalPattern,
) -> GridpalStatus {
    guard(|| {
        let occ = palindromes::find_forbidden_pattern(word_ref(word)?);
        write_out(found, occ.is_some())?;
        if let Some(o) = occ {
            write_out(
                out,
                GridpalPattern {
                    i1: o.i1,
                    i2: o.i2,
                    j1: o.j1,
                    j2: o.j2,
                    x: o.x.0 as u32,
                    y: o.y.0 as u32,
                },
            )?;
        }
        Ok(())
    })
}

/// Sizes of the conjugacy class and of its palindromic and HV members.
#[no_mangle]
pub unsafe extern "C" fn gridpal_conjugates(
    word: *const GridpalWord,
    class_size: *mut usize,
    pal_count: *mut usize,
    hv_count: *mut usize,
) -> GridpalStatus {
    guard(|| {
        let r = gridpal::conjugacy::pal_conjugates(word_ref(word)?).or_status()?;
        write_out(class_size, r.class_members.len())?;
        write_out(pal_count, r.pal_members.len())?;
        write_out(hv_count, r.hv_members.len())
    })
}

/// Upper bound on distinct HV-palindromic factors of an `m`-by-`n` word.
#[no_mangle]
pub unsafe extern "C" fn gridpal_max_hv_bound(m: usize, n: usize, out: *mut u64) -> GridpalStatus {
    guard(|| write_out(out, bounds::max_hv_bound(m, n).or_status()?))
}

/// Builds a `GRIDPAL_FAMILY_*` construction with the given periods.
#[no_mangle]
pub unsafe extern "C" fn gridpal_construct(
    family: u32,
    q: usize,
    periods_rows: usize,
    periods_cols: usize,
    out: *mut *mut GridpalWord,
) -> GridpalStatus {
    guard(|| {
        let family = match family {
            GRIDPAL_FAMILY_BINARY_MIN => ConstructFamily::BinaryMin,
            GRIDPAL_FAMILY_Q_MIN => ConstructFamily::QMin,
            GRIDPAL_FAMILY_Q3_NONTRIVIAL => ConstructFamily::Q3Nontrivial,
            GRIDPAL_FAMILY_Q_NONTRIVIAL => ConstructFamily::QNontrivial,
            f => {
                return Err(fail(
                    GridpalStatus::InvalidArgument,
                    format!("unknown family {f}"),
                ))
            }
        };
        let w = family.build(q, periods_rows, periods_cols).or_status()?;
        write_out(out, Box::into_raw(Box::new(GridpalWord(w))))
    })
}

/// Exhaustive optimum of the factor count over all `q`-ary `m`-by-`n`
/// words. `kind` must be `GRIDPAL_KIND_PAL2D` or `GRIDPAL_KIND_HV`; a zero
/// `budget` selects the library default.
#[no_mangle]
pub unsafe extern "C" fn gridpal_search_optimum(
    q: usize,
    m: usize,
    n: usize,
    kind: u32,
    objective: u32,
    budget: u64,
    threads: usize,
    out: *mut usize,
) -> GridpalStatus {
    guard(|| {
        let kind = factor_kind(kind)?;
        let objective = match objective {
            GRIDPAL_OBJECTIVE_MAX => Objective::Max,
            GRIDPAL_OBJECTIVE_MIN => Objective::Min,
            o => {
                return Err(fail(
                    GridpalStatus::InvalidArgument,
                    format!("unknown objective {o}"),
                ))
            }
        };
        let config = SearchConfig {
            budget: if budget == 0 {
                bounds::DEFAULT_BUDGET
            } else {
                budget
            },
            witnesses: 1,
            threads: threads.max(1),
        };
        let r = search::exhaustive_extremum(q, m, n, kind, objective, &config).or_status()?;
        write_out(out, r.optimum)
    })
}

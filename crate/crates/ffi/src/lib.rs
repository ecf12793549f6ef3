//! C ABI over the `irredundant` crate.
//!
//! Families and solutions are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`IrrStatus`]; out-parameters are written only on `IRR_STATUS_OK`.
//! Panics never cross the boundary.
//!
//! The header `include/irredundant.h` is regenerated by the build script.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use irredundant::analysis::is_irredundant;
use irredundant::cli::{format_solution, parse_instance};
use irredundant::gen::random_family;
use irredundant::{solve, Error, Family, Interval, Solution};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrrStatus {
    Ok = 0,
    NullPointer = 1,
    EmptyInterval = 2,
    OutOfRange = 3,
    ParseError = 4,
    InvalidUtf8 = 5,
    Inconsistent = 6,
    IndexOutOfBounds = 7,
    Panic = 8,
}

impl From<&Error> for IrrStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::EmptyInterval { .. } => IrrStatus::EmptyInterval,
            Error::OutOfRange { .. } => IrrStatus::OutOfRange,
            Error::Parse { .. } => IrrStatus::ParseError,
            Error::Inconsistent { .. }
            | Error::NotBad { .. }
            | Error::NotStaggered { .. }
            | Error::OracleGuard { .. } => IrrStatus::Inconsistent,
        }
    }
}

/// Opaque multiset of intervals on `[0, n)`.
pub struct IrrFamily {
    inner: Family,
}

/// Opaque solver output.
pub struct IrrSolution {
    inner: Solution,
    postorder: Vec<(usize, Interval)>,
}

fn guard<F: FnOnce() -> IrrStatus>(body: F) -> IrrStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(IrrStatus::Panic)
}

fn write_pair(iv: &Interval, lo: *mut usize, hi: *mut usize) -> IrrStatus {
    if lo.is_null() || hi.is_null() {
        return IrrStatus::NullPointer;
    }
    // SAFETY: both pointers checked non-null; the caller provides writable storage.
    unsafe {
        *lo = iv.lo();
        *hi = iv.hi();
    }
    IrrStatus::Ok
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn irr_status_message(status: IrrStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        IrrStatus::Ok => c"ok",
        IrrStatus::NullPointer => c"null pointer argument",
        IrrStatus::EmptyInterval => c"interval is empty (lo >= hi)",
        IrrStatus::OutOfRange => c"interval exceeds the ground set",
        IrrStatus::ParseError => c"malformed instance text",
        IrrStatus::InvalidUtf8 => c"instance text is not valid UTF-8",
        IrrStatus::Inconsistent => c"internal consistency failure",
        IrrStatus::IndexOutOfBounds => c"index out of bounds",
        IrrStatus::Panic => c"unexpected panic",
    };
    msg.as_ptr()
}

/// New empty family on `[0, n)`.
#[no_mangle]
pub extern "C" fn irr_family_new(n: usize) -> *mut IrrFamily {
    Box::into_raw(Box::new(IrrFamily {
        inner: Family::empty(n),
    }))
}

/// `m` random intervals on `[0, n)`; null when `n == 0`.
#[no_mangle]
pub extern "C" fn irr_family_random(m: usize, n: usize, seed: u64) -> *mut IrrFamily {
    if n == 0 {
        return ptr::null_mut();
    }
    catch_unwind(|| random_family(m, n, seed))
        .map(|inner| Box::into_raw(Box::new(IrrFamily { inner })))
        .unwrap_or(ptr::null_mut())
}

/// Parses instance text (`n` on the first line, then `lo hi` per line).
///
/// # Safety
/// `text` must be null or a valid NUL-terminated string; `out` must be null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn irr_family_parse(
    text: *const c_char,
    out: *mut *mut IrrFamily,
) -> IrrStatus {
    if text.is_null() || out.is_null() {
        return IrrStatus::NullPointer;
    }
    guard(|| {
        // SAFETY: non-null and NUL-terminated per the contract above.
        let Ok(text) = (unsafe { CStr::from_ptr(text) }).to_str() else {
            return IrrStatus::InvalidUtf8;
        };
        match parse_instance(text) {
            Ok(inner) => {
                // SAFETY: out checked non-null.
                unsafe { *out = Box::into_raw(Box::new(IrrFamily { inner })) };
                IrrStatus::Ok
            }
            Err(e) => IrrStatus::from(&e),
        }
    })
}

/// Adds one occurrence of `[lo, hi)`.
///
/// # Safety
/// `family` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn irr_family_push(
    family: *mut IrrFamily,
    lo: usize,
    hi: usize,
) -> IrrStatus {
    // SAFETY: null or a live, exclusively borrowed handle per the contract.
    let Some(family) = (unsafe { family.as_mut() }) else {
        return IrrStatus::NullPointer;
    };
    match Interval::new(lo, hi).and_then(|iv| family.inner.insert(iv)) {
        Ok(()) => IrrStatus::Ok,
        Err(e) => IrrStatus::from(&e),
    }
}

/// Ground-set size; 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn irr_family_n(family: *const IrrFamily) -> usize {
    unsafe { family.as_ref() }.map_or(0, |f| f.inner.n())
}

/// Number of members with multiplicity; 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn irr_family_len(family: *const IrrFamily) -> usize {
    unsafe { family.as_ref() }.map_or(0, |f| f.inner.len())
}

/// Member `index` in canonical order (right endpoint, then left).
///
/// # Safety
/// `family` must be null or a live handle; `lo` and `hi` null or writable.
#[no_mangle]
pub unsafe extern "C" fn irr_family_get(
    family: *const IrrFamily,
    index: usize,
    lo: *mut usize,
    hi: *mut usize,
) -> IrrStatus {
    let Some(family) = (unsafe { family.as_ref() }) else {
        return IrrStatus::NullPointer;
    };
    match family.inner.members().get(index) {
        Some(iv) => write_pair(iv, lo, hi),
        None => IrrStatus::IndexOutOfBounds,
    }
}

/// New handle holding the left-to-right reflection of `family`.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn irr_family_mirror(family: *const IrrFamily) -> *mut IrrFamily {
    match unsafe { family.as_ref() } {
        Some(f) => Box::into_raw(Box::new(IrrFamily {
            inner: f.inner.mirror(),
        })),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `family` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn irr_family_free(family: *mut IrrFamily) {
    if !family.is_null() {
        // SAFETY: the handle came from Box::into_raw and is freed once.
        drop(unsafe { Box::from_raw(family) });
    }
}

/// Decides irredundancy by scanning every window. Quadratic in `n` windows.
///
/// # Safety
/// `family` must be null or a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn irr_is_irredundant(family: *const IrrFamily, out: *mut bool) -> IrrStatus {
    let Some(family) = (unsafe { family.as_ref() }) else {
        return IrrStatus::NullPointer;
    };
    if out.is_null() {
        return IrrStatus::NullPointer;
    }
    guard(|| {
        let answer = is_irredundant(&family.inner);
        unsafe { *out = answer };
        IrrStatus::Ok
    })
}

/// Runs the reduction and the tree extraction.
///
/// # Safety
/// `family` must be null or a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn irr_solve(
    family: *const IrrFamily,
    out: *mut *mut IrrSolution,
) -> IrrStatus {
    let Some(family) = (unsafe { family.as_ref() }) else {
        return IrrStatus::NullPointer;
    };
    if out.is_null() {
        return IrrStatus::NullPointer;
    }
    guard(|| match solve(&family.inner) {
        Ok(inner) => {
            let postorder = inner.tree().postorder();
            unsafe { *out = Box::into_raw(Box::new(IrrSolution { inner, postorder })) };
            IrrStatus::Ok
        }
        Err(e) => IrrStatus::from(&e),
    })
}

/// Size of the minimum generating family.
///
/// # Safety
/// `solution` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_generator_count(solution: *const IrrSolution) -> usize {
    unsafe { solution.as_ref() }.map_or(0, |s| s.inner.generators().len())
}

/// Generator `index` in canonical order.
///
/// # Safety
/// `solution` must be null or a live handle; `lo` and `hi` null or writable.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_generator(
    solution: *const IrrSolution,
    index: usize,
    lo: *mut usize,
    hi: *mut usize,
) -> IrrStatus {
    let Some(solution) = (unsafe { solution.as_ref() }) else {
        return IrrStatus::NullPointer;
    };
    match solution.inner.generators().members().get(index) {
        Some(iv) => write_pair(iv, lo, hi),
        None => IrrStatus::IndexOutOfBounds,
    }
}

/// Number of reduced minimal bad intervals.
///
/// # Safety
/// `solution` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_reduced_count(solution: *const IrrSolution) -> usize {
    unsafe { solution.as_ref() }.map_or(0, |s| s.inner.reduced().len())
}

/// Reduced interval `index` in canonical order.
///
/// # Safety
/// `solution` must be null or a live handle; `lo` and `hi` null or writable.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_reduced(
    solution: *const IrrSolution,
    index: usize,
    lo: *mut usize,
    hi: *mut usize,
) -> IrrStatus {
    let Some(solution) = (unsafe { solution.as_ref() }) else {
        return IrrStatus::NullPointer;
    };
    match solution.inner.reduced().get(index) {
        Some(iv) => write_pair(iv, lo, hi),
        None => IrrStatus::IndexOutOfBounds,
    }
}

/// Size of the maximum irredundant subfamily.
///
/// # Safety
/// `solution` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_irredundant_count(solution: *const IrrSolution) -> usize {
    unsafe { solution.as_ref() }.map_or(0, |s| s.postorder.len())
}

/// Entry `index` of the irredundant sequence: the node point `x` and its
/// interval, in postorder.
///
/// # Safety
/// `solution` must be null or a live handle; `x`, `lo` and `hi` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_irredundant(
    solution: *const IrrSolution,
    index: usize,
    x: *mut usize,
    lo: *mut usize,
    hi: *mut usize,
) -> IrrStatus {
    let Some(solution) = (unsafe { solution.as_ref() }) else {
        return IrrStatus::NullPointer;
    };
    if x.is_null() {
        return IrrStatus::NullPointer;
    }
    match solution.postorder.get(index) {
        Some((point, iv)) => {
            let status = write_pair(iv, lo, hi);
            if status == IrrStatus::Ok {
                unsafe { *x = *point };
            }
            status
        }
        None => IrrStatus::IndexOutOfBounds,
    }
}

/// The CLI result block for this solution, headed by `source`. Release the
/// string with [`irr_string_free`]. Null on bad arguments.
///
/// # Safety
/// `solution` must be null or a live handle; `source` null or a valid
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_format(
    solution: *const IrrSolution,
    source: *const c_char,
) -> *mut c_char {
    let Some(solution) = (unsafe { solution.as_ref() }) else {
        return ptr::null_mut();
    };
    if source.is_null() {
        return ptr::null_mut();
    }
    let Ok(source) = (unsafe { CStr::from_ptr(source) }).to_str() else {
        return ptr::null_mut();
    };
    CString::new(format_solution(source, &solution.inner))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn irr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `solution` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn irr_solution_free(solution: *mut IrrSolution) {
    if !solution.is_null() {
        drop(unsafe { Box::from_raw(solution) });
    }
}

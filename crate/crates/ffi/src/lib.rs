//! C ABI over `clstab`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`ClstabStatus`]; on failure the message is available from
//! [`clstab_last_error`] on the same thread. Strings handed out are
//! NUL-terminated and freed with [`clstab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use clstab::clbasis::{self, Normalization};
use clstab::cli;
use clstab::fock::FockVector;
use clstab::pop::{enumerate_pops, Pop, PopFilter};
use clstab::rootdata::FiniteWeight;
use clstab::translate;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClstabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    OutOfRange = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClstabNormalization {
    Divided = 0,
    Plain = 1,
}

impl From<ClstabNormalization> for Normalization {
    fn from(n: ClstabNormalization) -> Self {
        match n {
            ClstabNormalization::Divided => Normalization::Divided,
            ClstabNormalization::Plain => Normalization::Plain,
        }
    }
}

/// A partition overlaid pattern.
pub struct ClstabPop(Pop);

/// An ordered list of POPs.
pub struct ClstabPopList(Vec<Pop>);

/// A vector in one sector of the level-one Fock space.
pub struct ClstabVector(FockVector);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

struct Fail(ClstabStatus, String);

impl From<clstab::Error> for Fail {
    fn from(e: clstab::Error) -> Self {
        let code = match e {
            clstab::Error::OutOfRange(_) => ClstabStatus::OutOfRange,
            _ => ClstabStatus::InvalidInput,
        };
        Fail(code, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ClstabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ClstabStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            ClstabStatus::Panic
        }
    }
}

fn non_null<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    // SAFETY: the caller passes either null or a live object of type T
    unsafe { p.as_ref() }.ok_or_else(|| Fail(ClstabStatus::NullPointer, "null pointer".into()))
}

fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    // SAFETY: as above, for a writable slot
    unsafe { p.as_mut() }.ok_or_else(|| Fail(ClstabStatus::NullPointer, "null output pointer".into()))
}

fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(ClstabStatus::NullPointer, "null string".into()));
    }
    // SAFETY: non-null and NUL-terminated per the contract
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|e| Fail(ClstabStatus::InvalidUtf8, e.to_string()))
}

fn slice_arg<'a, T>(p: *const T, len: usize) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Fail(ClstabStatus::NullPointer, "null array".into()));
    }
    // SAFETY: `len` readable elements per the contract
    Ok(unsafe { std::slice::from_raw_parts(p, len) })
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(ClstabStatus::InvalidInput, msg.into())
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call; do not free.
#[no_mangle]
pub extern "C" fn clstab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn clstab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a POP from its JSON form, e.g.
/// `{"rows":[[1],[2,0]],"overlay":{"1,1":[1]}}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_parse(json: *const c_char, out: *mut *mut ClstabPop) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let p: Pop = serde_json::from_str(str_arg(json)?).map_err(|e| invalid(e.to_string()))?;
        *out = Box::into_raw(Box::new(ClstabPop(p)));
        Ok(())
    })
}

/// # Safety
/// `pop` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_free(pop: *mut ClstabPop) {
    if !pop.is_null() {
        drop(Box::from_raw(pop));
    }
}

/// # Safety
/// `pop` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_to_json(pop: *const ClstabPop, out: *mut *mut c_char) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let p = non_null(pop)?;
        *out = give_string(serde_json::to_string(&p.0).map_err(|e| invalid(e.to_string()))?);
        Ok(())
    })
}

/// # Safety
/// `pop` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_rank(pop: *const ClstabPop, out: *mut usize) -> ClstabStatus {
    guard(|| {
        *out_ptr(out)? = non_null(pop)?.0.rank();
        Ok(())
    })
}

/// # Safety
/// `pop` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_depth(pop: *const ClstabPop, out: *mut i64) -> ClstabStatus {
    guard(|| {
        *out_ptr(out)? = non_null(pop)?.0.total_depth();
        Ok(())
    })
}

/// # Safety
/// `pop` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_is_stable(pop: *const ClstabPop, out: *mut bool) -> ClstabStatus {
    guard(|| {
        *out_ptr(out)? = non_null(pop)?.0.is_stable();
        Ok(())
    })
}

/// The shifted POP `P^k` as a new handle.
///
/// # Safety
/// `pop` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_shift(pop: *const ClstabPop, k: i64, out: *mut *mut ClstabPop) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        if k < 0 {
            return Err(invalid("shift must be nonnegative"));
        }
        *out = Box::into_raw(Box::new(ClstabPop(non_null(pop)?.0.shift(k))));
        Ok(())
    })
}

/// All POPs with bounding sequence `lambda[0..len]`. A negative `depth`
/// means no depth filter.
///
/// # Safety
/// `lambda` must point at `len` integers and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pops_enumerate(
    lambda: *const i64,
    len: usize,
    depth: i64,
    out: *mut *mut ClstabPopList,
) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let seq = slice_arg(lambda, len)?;
        let filter = PopFilter { weight: None, depth: (depth >= 0).then_some(depth) };
        *out = Box::into_raw(Box::new(ClstabPopList(enumerate_pops(seq, &filter)?)));
        Ok(())
    })
}

/// # Safety
/// `list` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_list_len(list: *const ClstabPopList, out: *mut usize) -> ClstabStatus {
    guard(|| {
        *out_ptr(out)? = non_null(list)?.0.len();
        Ok(())
    })
}

/// A copy of entry `index`; the list keeps its own.
///
/// # Safety
/// `list` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_list_get(
    list: *const ClstabPopList,
    index: usize,
    out: *mut *mut ClstabPop,
) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let p = non_null(list)?.0.get(index).ok_or(clstab::Error::OutOfRange(index))?;
        *out = Box::into_raw(Box::new(ClstabPop(p.clone())));
        Ok(())
    })
}

/// # Safety
/// `list` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn clstab_pop_list_free(list: *mut ClstabPopList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// The vector `v_{P^k}` attached to a POP.
///
/// # Safety
/// `pop` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_cl_vector(
    pop: *const ClstabPop,
    k: i64,
    norm: ClstabNormalization,
    out: *mut *mut ClstabVector,
) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let v = clbasis::cl_vector(&non_null(pop)?.0, k, norm.into())?;
        *out = Box::into_raw(Box::new(ClstabVector(v)));
        Ok(())
    })
}

/// Applies the translation by the root-lattice element with simple-root
/// coordinates `coords[0..len]`; `len` must equal the rank.
///
/// # Safety
/// `v` must be a live handle, `coords` point at `len` integers and `out` be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_vector_translate(
    v: *const ClstabVector,
    coords: *const i64,
    len: usize,
    out: *mut *mut ClstabVector,
) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let v = &non_null(v)?.0;
        let n = slice_arg(coords, len)?;
        if n.len() != v.rank() {
            return Err(clstab::Error::RankMismatch(n.len(), v.rank()).into());
        }
        let beta = FiniteWeight::from_root_coords(v.rank(), n);
        *out = Box::into_raw(Box::new(ClstabVector(translate::translate_q(&beta, v)?)));
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_vector_equal(
    a: *const ClstabVector,
    b: *const ClstabVector,
    out: *mut bool,
) -> ClstabStatus {
    guard(|| {
        *out_ptr(out)? = non_null(a)?.0 == non_null(b)?.0;
        Ok(())
    })
}

/// # Safety
/// `v` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_vector_is_zero(v: *const ClstabVector, out: *mut bool) -> ClstabStatus {
    guard(|| {
        *out_ptr(out)? = non_null(v)?.0.is_zero();
        Ok(())
    })
}

/// One line per term, as in `clstab dump vector`.
///
/// # Safety
/// `v` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_vector_to_string(v: *const ClstabVector, out: *mut *mut c_char) -> ClstabStatus {
    guard(|| {
        *out_ptr(out)? = give_string(non_null(v)?.0.dump());
        Ok(())
    })
}

/// # Safety
/// `v` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn clstab_vector_free(v: *mut ClstabVector) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Runs a command-line invocation (without the program name) and returns
/// its report lines joined by newlines. `exit_code` receives 0 when every
/// check passed and 1 otherwise. File options such as `--out` are ignored.
///
/// # Safety
/// `argv` must point at `argc` NUL-terminated strings; `out` and
/// `exit_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clstab_run(
    argv: *const *const c_char,
    argc: usize,
    out: *mut *mut c_char,
    exit_code: *mut i32,
) -> ClstabStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let exit_code = out_ptr(exit_code)?;
        let mut args = vec!["clstab".to_string()];
        for &a in slice_arg(argv, argc)? {
            args.push(str_arg(a)?.to_string());
        }
        let cfg = cli::parse_config(&args).map_err(|e| invalid(e.to_string()))?;
        let (lines, ok) = cli::execute(&cfg)?;
        *out = give_string(lines.join("\n"));
        *exit_code = if ok { 0 } else { 1 };
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn errors_are_reported() {
        let mut p = ptr::null_mut();
        let bad = CString::new("{").unwrap();
        let st = unsafe { clstab_pop_parse(bad.as_ptr(), &mut p) };
        assert_eq!(st, ClstabStatus::InvalidInput);
        assert!(p.is_null());
        let msg = unsafe { CStr::from_ptr(clstab_last_error()) };
        assert!(!msg.to_bytes().is_empty());
        assert_eq!(unsafe { clstab_pop_parse(ptr::null(), &mut p) }, ClstabStatus::NullPointer);
    }
}

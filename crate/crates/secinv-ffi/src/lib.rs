//! C ABI over the secinv kernel.
//!
//! All functions return a status code from `SecinvStatus`; results are
//! passed through out-parameters. Handles are opaque and must be
//! released with the matching `_free` function. After any non-zero
//! status, `secinv_last_error` returns a description of the failure.
//! The API is not thread-safe per handle; distinct handles may be used
//! from distinct threads. Strings are UTF-8 and NUL-terminated.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use secinv::error::Error;
use secinv::group::{validate_primaries, GroupRepresentation, PrimarySystem};
use secinv::molien::MolienProfile;
use secinv::problem::ProblemFile;
use secinv::secondary::{
    compute_secondaries, irreducible_only, Algorithm, SecondaryOptions, SecondaryResult,
};

/// Status codes returned by every API function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecinvStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null, or a handle was invalid.
    NullArgument = 1,
    /// The input text could not be parsed.
    ParseError = 2,
    /// The input parsed but failed validation (bad primaries, singular
    /// matrix, inconsistent dimensions, ...).
    InvalidInput = 3,
    /// A resource cap was hit (group closure cap, degree cap).
    ResourceLimit = 4,
    /// An internal invariant was violated (a bug; please report).
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> SecinvStatus {
    match err {
        Error::Parse { .. } | Error::UnknownVariable(_) | Error::Problem(_) => {
            SecinvStatus::ParseError
        }
        Error::GroupTooLarge { .. } | Error::DegreeCapOverrun { .. } => {
            SecinvStatus::ResourceLimit
        }
        _ => SecinvStatus::InvalidInput,
    }
}

fn fail(err: Error) -> SecinvStatus {
    let code = status_of(&err);
    set_error(&err.to_string());
    code
}

fn guard<F: FnOnce() -> SecinvStatus>(f: F) -> SecinvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(_) => {
            set_error("internal panic");
            SecinvStatus::Internal
        }
    }
}

/// Copy the last error message into `buf` (truncating to `cap` bytes
/// including the terminating NUL). Returns the untruncated length.
///
/// # Safety
/// `buf` must point to at least `cap` writable bytes, or be null.
#[no_mangle]
pub unsafe extern "C" fn secinv_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow();
        let bytes = msg.as_bytes_with_nul();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap);
            std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n - 1) = 0;
        }
        bytes.len() - 1
    })
}

/// A parsed and validated problem: closed group plus primary system.
pub struct SecinvProblem {
    names: Vec<String>,
    group: GroupRepresentation,
    primaries: Option<PrimarySystem>,
}

/// A finished secondary-invariant computation.
pub struct SecinvResult {
    names: Vec<String>,
    result: SecondaryResult,
    elapsed_ms: u64,
    flat: Vec<(u32, usize)>, // (degree, index within level) per label
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, SecinvStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(SecinvStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        SecinvStatus::ParseError
    })
}

/// Parse a problem file (same format as the CLI), close the group, and
/// validate the primaries if any are given.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn secinv_problem_parse(
    text: *const c_char,
    out: *mut *mut SecinvProblem,
) -> SecinvStatus {
    if out.is_null() {
        set_error("null out-parameter");
        return SecinvStatus::NullArgument;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(code) => return code,
    };
    guard(|| {
        let pf = match ProblemFile::parse(text) {
            Ok(pf) => pf,
            Err(e) => return fail(e),
        };
        let group = match pf.close_group() {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        let primaries = if pf.primaries.is_empty() {
            None
        } else {
            match validate_primaries(&pf.primaries, &group) {
                Ok(s) => Some(s),
                Err(e) => return fail(e),
            }
        };
        let handle = Box::new(SecinvProblem {
            names: pf.variables,
            group,
            primaries,
        });
        *out = Box::into_raw(handle);
        SecinvStatus::Ok
    })
}

/// Load a built-in example (1-9; 9 has no primaries).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn secinv_problem_builtin(
    number: usize,
    out: *mut *mut SecinvProblem,
) -> SecinvStatus {
    if out.is_null() {
        set_error("null out-parameter");
        return SecinvStatus::NullArgument;
    }
    guard(|| {
        let inst = match secinv::examples::instance(number) {
            Ok(i) => i,
            Err(e) => return fail(e),
        };
        let group = match GroupRepresentation::close(inst.generators.clone()) {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        let order = secinv::monomial::MonomialOrder::DegRevLex;
        let primaries = if inst.has_primaries() {
            let polys = match inst.parse_primaries(order) {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            match validate_primaries(&polys, &group) {
                Ok(s) => Some(s),
                Err(e) => return fail(e),
            }
        } else {
            None
        };
        let handle = Box::new(SecinvProblem {
            names: inst.variable_names(),
            group,
            primaries,
        });
        *out = Box::into_raw(handle);
        SecinvStatus::Ok
    })
}

/// Release a problem handle. Null is ignored.
///
/// # Safety
/// `p` must be a pointer previously returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn secinv_problem_free(p: *mut SecinvProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Order of the closed group.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_group_order(
    p: *const SecinvProblem,
    out: *mut u64,
) -> SecinvStatus {
    if p.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    *out = (*p).group.order() as u64;
    SecinvStatus::Ok
}

/// Expected number of secondary invariants (product of primary degrees
/// over the group order). Fails when the problem has no primaries.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_expected_total(
    p: *const SecinvProblem,
    out: *mut u64,
) -> SecinvStatus {
    if p.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    let problem = &*p;
    guard(|| {
        let system = match &problem.primaries {
            Some(s) => s,
            None => {
                return fail(Error::InvalidPrimaries(
                    "problem has no primary invariants".into(),
                ))
            }
        };
        match MolienProfile::compute(&problem.group, system.degrees()) {
            Ok(profile) => {
                use std::convert::TryFrom;
                match u64::try_from(&profile.total) {
                    Ok(v) => {
                        *out = v;
                        SecinvStatus::Ok
                    }
                    Err(_) => fail(Error::Problem("total exceeds u64".into())),
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// Algorithm selector for `secinv_compute`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecinvAlgorithm {
    Basic = 0,
    Refined = 1,
    New = 2,
    Improved = 3,
}

/// Run the secondary-invariant search. With `irreducible_only_flag`
/// non-zero, reducible invariants are kept as normal forms (the
/// algorithm argument is ignored and the improved strategy is used).
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_compute(
    p: *const SecinvProblem,
    algorithm: SecinvAlgorithm,
    irreducible_only_flag: i32,
    threads: usize,
    out: *mut *mut SecinvResult,
) -> SecinvStatus {
    if p.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    let problem = &*p;
    guard(|| {
        let system = match &problem.primaries {
            Some(s) => s,
            None => {
                return fail(Error::InvalidPrimaries(
                    "problem has no primary invariants".into(),
                ))
            }
        };
        let opts = SecondaryOptions {
            algorithm: match algorithm {
                SecinvAlgorithm::Basic => Algorithm::Basic,
                SecinvAlgorithm::Refined => Algorithm::Refined,
                SecinvAlgorithm::New => Algorithm::New,
                SecinvAlgorithm::Improved => Algorithm::Improved,
            },
            threads: threads.max(1),
            ..SecondaryOptions::default()
        };
        let start = Instant::now();
        let outcome = if irreducible_only_flag != 0 {
            irreducible_only(system, &problem.group, opts)
        } else {
            compute_secondaries(system, &problem.group, opts)
        };
        match outcome {
            Ok(result) => {
                let mut flat = Vec::new();
                for level in &result.levels {
                    for i in 0..level.invariants.len() {
                        flat.push((level.degree, i));
                    }
                }
                let handle = Box::new(SecinvResult {
                    names: problem.names.clone(),
                    result,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                    flat,
                });
                *out = Box::into_raw(handle);
                SecinvStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Release a result handle. Null is ignored.
///
/// # Safety
/// `r` must be a pointer previously returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn secinv_result_free(r: *mut SecinvResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Total number of secondary invariants found.
///
/// # Safety
/// `r` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_result_total(
    r: *const SecinvResult,
    out: *mut usize,
) -> SecinvStatus {
    if r.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    *out = (*r).result.total_secondaries();
    SecinvStatus::Ok
}

/// Number of irreducible secondary invariants.
///
/// # Safety
/// `r` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_result_irreducible_total(
    r: *const SecinvResult,
    out: *mut usize,
) -> SecinvStatus {
    if r.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    *out = (*r).result.total_irreducibles();
    SecinvStatus::Ok
}

/// Largest degree carrying a secondary invariant.
///
/// # Safety
/// `r` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_result_max_degree(
    r: *const SecinvResult,
    out: *mut u32,
) -> SecinvStatus {
    if r.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    *out = (*r).result.max_secondary_degree();
    SecinvStatus::Ok
}

/// Wall-clock duration of the computation in milliseconds.
///
/// # Safety
/// `r` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_result_elapsed_ms(
    r: *const SecinvResult,
    out: *mut u64,
) -> SecinvStatus {
    if r.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    *out = (*r).elapsed_ms;
    SecinvStatus::Ok
}

/// Degree and irreducibility of the invariant with the given label
/// (labels run 0..total in degree order).
///
/// # Safety
/// All pointer arguments must be valid or null as documented.
#[no_mangle]
pub unsafe extern "C" fn secinv_result_invariant_info(
    r: *const SecinvResult,
    label: usize,
    degree_out: *mut u32,
    irreducible_out: *mut i32,
) -> SecinvStatus {
    if r.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    let res = &*r;
    let Some(&(degree, idx)) = res.flat.get(label) else {
        set_error("invariant label out of range");
        return SecinvStatus::InvalidInput;
    };
    let level = res
        .result
        .levels
        .iter()
        .find(|l| l.degree == degree)
        .expect("flat index consistent");
    if !degree_out.is_null() {
        *degree_out = degree;
    }
    if !irreducible_out.is_null() {
        *irreducible_out = level.invariants[idx].irreducible as i32;
    }
    SecinvStatus::Ok
}

/// Render the invariant with the given label as text. The returned
/// string must be released with `secinv_string_free`.
///
/// # Safety
/// `r` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn secinv_result_invariant_text(
    r: *const SecinvResult,
    label: usize,
    out: *mut *mut c_char,
) -> SecinvStatus {
    if r.is_null() || out.is_null() {
        set_error("null argument");
        return SecinvStatus::NullArgument;
    }
    let res = &*r;
    let Some(&(degree, idx)) = res.flat.get(label) else {
        set_error("invariant label out of range");
        return SecinvStatus::InvalidInput;
    };
    guard(|| {
        let level = res
            .result
            .levels
            .iter()
            .find(|l| l.degree == degree)
            .expect("flat index consistent");
        let text = format!("{}", level.invariants[idx].poly.display(&res.names));
        match CString::new(text) {
            Ok(c) => {
                *out = c.into_raw();
                SecinvStatus::Ok
            }
            Err(_) => {
                set_error("polynomial text contains NUL");
                SecinvStatus::Internal
            }
        }
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn secinv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

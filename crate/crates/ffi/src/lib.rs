//! C interface to permeq.
//!
//! Objects are opaque handles owned by the caller and released with the
//! matching `*_free` function. Every fallible call returns a [`PermeqStatus`];
//! on failure, [`permeq_last_error`] describes what went wrong on the calling
//! thread. Strings returned by the library are freed with
//! [`permeq_string_free`]. Points are 1-based, as in cycle notation.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use permeq::{
    b1_construct, b2_all_solutions, certify_a1, certify_a2, certify_a3_cyclic, enumerate_naive,
    enumerate_pruned, format_cycles, parse_cycles_inferred, solve_star, square_roots_all,
    Certificate, Error, Guards, Permutation, SolutionSet, Strategy, Verdict,
};

/// A permutation of `{1, ..., n}`.
pub struct PermeqPermutation(Permutation);

/// A verified, sorted set of solutions.
pub struct PermeqSolutionSet(SolutionSet);

/// A replayable triviality certificate.
pub struct PermeqCertificate(Certificate);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermeqStatus {
    Ok = 0,
    NullPointer = 1,
    /// Parse errors, invalid arguments, unmet preconditions.
    InvalidInput = 2,
    /// A degree guard was exceeded.
    Guard = 3,
    /// A result failed its own check. Always a library bug.
    Verification = 4,
    OutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermeqVerdict {
    OnlyTrivial = 0,
    Inconclusive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermeqTheorem {
    A1 = 1,
    A2 = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PermeqStatus {
    match e {
        Error::GuardExceeded { .. } => PermeqStatus::Guard,
        Error::Verification(_) => PermeqStatus::Verification,
        _ => PermeqStatus::InvalidInput,
    }
}

/// Runs `f` behind the boundary: panics become `Panic`, errors are recorded.
fn guarded<F>(f: F) -> PermeqStatus
where
    F: FnOnce() -> Result<(), (PermeqStatus, String)> + UnwindSafe,
{
    clear_error();
    match catch_unwind(f) {
        Ok(Ok(())) => PermeqStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            PermeqStatus::Panic
        }
    }
}

type Fallible<T> = Result<T, (PermeqStatus, String)>;

fn lib<T>(r: permeq::Result<T>) -> Fallible<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn arg<'a, T>(p: *const T, name: &str) -> Fallible<&'a T> {
    p.as_ref()
        .ok_or_else(|| (PermeqStatus::NullPointer, format!("{name} is null")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Fallible<()> {
    if out.is_null() {
        return Err((PermeqStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn guards() -> Fallible<Guards> {
    lib(Guards::from_env())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn permeq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn permeq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses cycle notation such as `(1,2,3)(4,5)`. `degree = 0` takes the
/// largest point mentioned.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_parse(
    text: *const c_char,
    degree: usize,
    out: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| {
        if text.is_null() {
            return Err((PermeqStatus::NullPointer, "text is null".into()));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (PermeqStatus::InvalidInput, "text is not UTF-8".into()))?;
        let degree = (degree > 0).then_some(degree);
        let p = lib(parse_cycles_inferred(text, degree))?;
        put(out, PermeqPermutation(p))
    })
}

/// Builds a permutation from its images `images[0..n]` (1-based values).
///
/// # Safety
/// `images` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_from_images(
    images: *const usize,
    n: usize,
    out: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| {
        if images.is_null() {
            return Err((PermeqStatus::NullPointer, "images is null".into()));
        }
        let slice = std::slice::from_raw_parts(images, n);
        let p = lib(Permutation::from_images(slice))?;
        put(out, PermeqPermutation(p))
    })
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_free(p: *mut PermeqPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of `p`, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_degree(p: *const PermeqPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.degree())
}

/// Writes the 1-based image table of `p` into `buf`, which holds `len` values.
///
/// # Safety
/// `p` must be a live handle; `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_images(
    p: *const PermeqPermutation,
    buf: *mut usize,
    len: usize,
) -> PermeqStatus {
    guarded(|| {
        let p = arg(p, "permutation")?;
        if buf.is_null() {
            return Err((PermeqStatus::NullPointer, "buffer is null".into()));
        }
        if len < p.0.degree() {
            return Err((
                PermeqStatus::OutOfRange,
                format!("buffer holds {len} values, degree is {}", p.0.degree()),
            ));
        }
        for (i, v) in p.0.images().into_iter().enumerate() {
            *buf.add(i) = v;
        }
        Ok(())
    })
}

/// Canonical cycle notation; free with [`permeq_string_free`]. Null on a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_format(p: *const PermeqPermutation) -> *mut c_char {
    match p.as_ref() {
        Some(p) => owned_string(format_cycles(&p.0)),
        None => ptr::null_mut(),
    }
}

/// `out = a ∘ b` (apply `b` first).
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_compose(
    a: *const PermeqPermutation,
    b: *const PermeqPermutation,
    out: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| {
        let (a, b) = (arg(a, "a")?, arg(b, "b")?);
        put(out, PermeqPermutation(lib(a.0.compose(&b.0))?))
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_inverse(
    p: *const PermeqPermutation,
    out: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| put(out, PermeqPermutation(arg(p, "permutation")?.0.inverse())))
}

/// `out = p^k`; negative `k` gives powers of the inverse.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_power(
    p: *const PermeqPermutation,
    k: i64,
    out: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| put(out, PermeqPermutation(arg(p, "permutation")?.0.power(k))))
}

/// `out = tau ∘ p ∘ tau⁻¹`.
///
/// # Safety
/// `p`, `tau` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_conjugate(
    p: *const PermeqPermutation,
    tau: *const PermeqPermutation,
    out: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| {
        let (p, tau) = (arg(p, "permutation")?, arg(tau, "tau")?);
        put(out, PermeqPermutation(lib(p.0.conjugate(&tau.0))?))
    })
}

/// Order of `p`; `OutOfRange` if it does not fit in 64 bits.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_perm_order(
    p: *const PermeqPermutation,
    out: *mut u64,
) -> PermeqStatus {
    guarded(|| {
        let order = arg(p, "permutation")?.0.order();
        let order = u64::try_from(order).map_err(|_| {
            (
                PermeqStatus::OutOfRange,
                format!("order {order} exceeds 64 bits"),
            )
        })?;
        if out.is_null() {
            return Err((PermeqStatus::NullPointer, "output pointer is null".into()));
        }
        *out = order;
        Ok(())
    })
}

unsafe fn with_set<F>(
    alpha: *const PermeqPermutation,
    out: *mut *mut PermeqSolutionSet,
    f: F,
) -> PermeqStatus
where
    F: FnOnce(&Permutation, &Guards) -> permeq::Result<SolutionSet> + UnwindSafe,
{
    guarded(|| {
        let alpha = arg(alpha, "alpha")?;
        let guards = guards()?;
        let set = lib(f(&alpha.0, &guards))?;
        put(out, PermeqSolutionSet(set))
    })
}

/// Every `y` with `alpha ∘ y ∘ alpha⁻¹ = y^k`, by scanning `S_n`.
///
/// # Safety
/// `alpha` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_enumerate_naive(
    alpha: *const PermeqPermutation,
    k: u32,
    out: *mut *mut PermeqSolutionSet,
) -> PermeqStatus {
    with_set(alpha, out, move |a, g| enumerate_naive(a, k, g))
}

/// Every `y` with `alpha ∘ y ∘ alpha⁻¹ = y²`, by the pruned search.
///
/// # Safety
/// `alpha` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_enumerate_pruned(
    alpha: *const PermeqPermutation,
    out: *mut *mut PermeqSolutionSet,
) -> PermeqStatus {
    with_set(alpha, out, enumerate_pruned)
}

/// Every `x` with `alpha ∘ x = x ∘ alpha ∘ x ∘ alpha`.
///
/// # Safety
/// `alpha` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_solve_star(
    alpha: *const PermeqPermutation,
    out: *mut *mut PermeqSolutionSet,
) -> PermeqStatus {
    with_set(alpha, out, |a, g| solve_star(a, Strategy::Auto, g))
}

/// Every `x` with `x ∘ x = sigma`; possibly empty.
///
/// # Safety
/// `sigma` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_square_roots(
    sigma: *const PermeqPermutation,
    out: *mut *mut PermeqSolutionSet,
) -> PermeqStatus {
    with_set(sigma, out, square_roots_all)
}

/// All solutions for a single `n`-cycle with `n = p·2^m`, by construction.
///
/// # Safety
/// `alpha` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_b2_all_solutions(
    alpha: *const PermeqPermutation,
    out: *mut *mut PermeqSolutionSet,
) -> PermeqStatus {
    with_set(alpha, out, |a, _| b2_all_solutions(a))
}

/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_set_free(set: *mut PermeqSolutionSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Number of members, or 0 for a null handle.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_set_len(set: *const PermeqSolutionSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// A copy of member `index` in canonical order.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_set_get(
    set: *const PermeqSolutionSet,
    index: usize,
    out: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| {
        let set = arg(set, "set")?;
        let y = set.0.solutions().get(index).ok_or_else(|| {
            (
                PermeqStatus::OutOfRange,
                format!("index {index} out of range for {} solutions", set.0.len()),
            )
        })?;
        put(out, PermeqPermutation(y.clone()))
    })
}

fn json_string<T: serde::Serialize>(value: &T) -> *mut c_char {
    match serde_json::to_string(value) {
        Ok(s) => owned_string(s),
        Err(e) => {
            set_error(format!("JSON serialization failed: {e}"));
            ptr::null_mut()
        }
    }
}

/// The set as JSON: `{equation, degree, method, stats, count, solutions}`.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_set_to_json(set: *const PermeqSolutionSet) -> *mut c_char {
    match set.as_ref() {
        Some(s) => json_string(&s.0),
        None => ptr::null_mut(),
    }
}

/// Checks the hypotheses of `theorem` for `alpha`.
///
/// # Safety
/// `alpha` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_certify(
    alpha: *const PermeqPermutation,
    theorem: PermeqTheorem,
    out: *mut *mut PermeqCertificate,
) -> PermeqStatus {
    guarded(|| {
        let alpha = arg(alpha, "alpha")?;
        let cert = match theorem {
            PermeqTheorem::A1 => certify_a1(&alpha.0),
            PermeqTheorem::A2 => certify_a2(&alpha.0),
        };
        put(out, PermeqCertificate(cert))
    })
}

/// Certificate for the `n`-cycle from the odd prime divisors of `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_certify_cyclic(
    n: usize,
    out: *mut *mut PermeqCertificate,
) -> PermeqStatus {
    guarded(|| put(out, PermeqCertificate(lib(certify_a3_cyclic(n))?)))
}

/// # Safety
/// `cert` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_cert_verdict(cert: *const PermeqCertificate) -> PermeqVerdict {
    match cert.as_ref().map(|c| c.0.verdict) {
        Some(Verdict::OnlyTrivial) => PermeqVerdict::OnlyTrivial,
        _ => PermeqVerdict::Inconclusive,
    }
}

/// Re-derives the verdict from the certificate's own records.
///
/// # Safety
/// `cert` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_cert_replay(cert: *const PermeqCertificate) -> PermeqStatus {
    guarded(|| {
        let cert = arg(cert, "certificate")?;
        let verdict = lib(cert.0.replay())?;
        if verdict != cert.0.verdict {
            return Err((
                PermeqStatus::Verification,
                "replay changed the verdict".into(),
            ));
        }
        Ok(())
    })
}

/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_cert_to_json(cert: *const PermeqCertificate) -> *mut c_char {
    match cert.as_ref() {
        Some(c) => json_string(&c.0),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permeq_cert_free(cert: *mut PermeqCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// The `n`-cycle `beta` and its solution `y` made of `n/p` cycles of length `p`.
///
/// # Safety
/// `out_beta` and `out_y` must be writable.
#[no_mangle]
pub unsafe extern "C" fn permeq_b1_construct(
    n: usize,
    p: usize,
    out_beta: *mut *mut PermeqPermutation,
    out_y: *mut *mut PermeqPermutation,
) -> PermeqStatus {
    guarded(|| {
        if out_beta.is_null() || out_y.is_null() {
            return Err((PermeqStatus::NullPointer, "output pointer is null".into()));
        }
        let inst = lib(b1_construct(n, p))?;
        put(out_beta, PermeqPermutation(inst.beta))?;
        put(out_y, PermeqPermutation(inst.y))
    })
}

//! C interface to the correlation library. Scalar results are written
//! through out-pointers and every call returns an [`RcStatus`]; list
//! results are returned as opaque handles with accessor and free
//! functions. Pointer arguments are rejected when null or misaligned.
//! The most recent error message of the calling thread is available
//! from [`rc_last_error`].
//!
//! Enum arguments must hold the values declared in the generated header;
//! passing any other value is undefined behavior.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use relcorr::{
    bell_mermin, chsh, find_local_extrema, sweep_x, verify_equivalence, Backend, Correlator,
    Direction, Error, ExtremumKind, MomentumConfig, MomentumFamily, Spin, SpinOperator,
};

/// Outcome of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcStatus {
    /// The call succeeded and all out-pointers were written.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was rejected; see `rc_last_error`.
    InvalidArgument = 2,
    /// No closed form covers the request; retry with the oracle backend.
    ClosedFormUnavailable = 3,
    /// The computation produced a non-finite value or panicked.
    Numerical = 4,
    /// An index was outside the bounds of a handle.
    OutOfRange = 5,
}

/// Spin of each particle of the pair.
#[repr(C)]
#[derive(Clone, Copy)]
pub enum RcSpin {
    Half = 0,
    One = 1,
}

/// Which relativistic spin observable to correlate.
#[repr(C)]
#[derive(Clone, Copy)]
pub enum RcOperator {
    NewtonWigner = 0,
    Czachor = 1,
}

/// Evaluation strategy.
#[repr(C)]
#[derive(Clone, Copy)]
pub enum RcBackend {
    ClosedForm = 0,
    Oracle = 1,
    /// Closed form when one exists, oracle otherwise.
    Auto = 2,
}

/// Momentum family of the pair.
#[repr(C)]
#[derive(Clone, Copy)]
pub enum RcMomenta {
    /// Boosted pair with back-to-back transverse momenta.
    Boosted = 0,
    /// Center-of-mass pair moving along a supplied axis.
    CenterOfMass = 1,
}

/// Kind of a located extremum.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcExtremumKind {
    Max = 0,
    Min = 1,
}

/// Opaque result of a correlation sweep over x.
pub struct RcSweep {
    points: Vec<(f64, f64)>,
}

/// Opaque list of located extrema.
pub struct RcExtrema {
    entries: Vec<(f64, f64, RcExtremumKind)>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let stored = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = stored);
}

fn fail(err: &Error) -> RcStatus {
    set_error(&err.to_string());
    match err {
        Error::ClosedFormUnavailable(_) => RcStatus::ClosedFormUnavailable,
        Error::NonFiniteValue(_) => RcStatus::Numerical,
        _ => RcStatus::InvalidArgument,
    }
}

fn guarded(body: impl FnOnce() -> RcStatus) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic during evaluation");
            RcStatus::Numerical
        }
    }
}

/// Version of this library as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the most recent error on the calling thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn check_ptr<T>(ptr: *const T, name: &str) -> Result<(), RcStatus> {
    if ptr.is_null() {
        set_error(&format!("{name} must not be null"));
        return Err(RcStatus::NullPointer);
    }
    if !ptr.is_aligned() {
        set_error(&format!("{name} is misaligned for its type"));
        return Err(RcStatus::InvalidArgument);
    }
    Ok(())
}

unsafe fn read_direction(ptr: *const f64, name: &str) -> Result<Direction, RcStatus> {
    check_ptr(ptr, name)?;
    let v = std::slice::from_raw_parts(ptr, 3);
    Direction::normalized(v[0], v[1], v[2]).map_err(|e| {
        set_error(&format!("{name}: {e}"));
        RcStatus::InvalidArgument
    })
}

unsafe fn build_correlator(
    spin: RcSpin,
    operator: RcOperator,
    backend: RcBackend,
    momenta: RcMomenta,
    n: *const f64,
    x: f64,
    mass: f64,
) -> Result<Correlator, RcStatus> {
    let family = match momenta {
        RcMomenta::Boosted => MomentumFamily::Boosted,
        RcMomenta::CenterOfMass => MomentumFamily::CenterOfMass {
            axis: read_direction(n, "n")?,
        },
    };
    let spin = match spin {
        RcSpin::Half => Spin::Half,
        RcSpin::One => Spin::One,
    };
    let operator = match operator {
        RcOperator::NewtonWigner => SpinOperator::NewtonWigner,
        RcOperator::Czachor => SpinOperator::Czachor,
    };
    let config = MomentumConfig { family, x, mass };
    Ok(match backend {
        RcBackend::ClosedForm => Correlator::new(spin, operator, Backend::ClosedForm, config),
        RcBackend::Oracle => Correlator::new(spin, operator, Backend::Oracle, config),
        RcBackend::Auto => Correlator::with_best_backend(spin, operator, config),
    })
}

/// Correlation of two spin measurements along `a` and `b`.
///
/// For `RC_MOMENTA_CENTER_OF_MASS` the pair axis `n` must point to three
/// doubles; it is ignored otherwise and may be null.
///
/// # Safety
/// `a` and `b` must point to three doubles and `out` to one.
#[no_mangle]
pub unsafe extern "C" fn rc_correlation(
    spin: RcSpin,
    operator: RcOperator,
    backend: RcBackend,
    momenta: RcMomenta,
    n: *const f64,
    x: f64,
    mass: f64,
    a: *const f64,
    b: *const f64,
    out: *mut f64,
) -> RcStatus {
    if let Err(status) = check_ptr(out.cast_const(), "out") {
        return status;
    }
    guarded(|| {
        let a = match read_direction(a, "a") {
            Ok(d) => d,
            Err(status) => return status,
        };
        let b = match read_direction(b, "b") {
            Ok(d) => d,
            Err(status) => return status,
        };
        let correlator = match build_correlator(spin, operator, backend, momenta, n, x, mass) {
            Ok(c) => c,
            Err(status) => return status,
        };
        match correlator.correlation(&a, &b) {
            Ok(value) => {
                *out = value;
                RcStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// CHSH combination |C(a,b) - C(a,d) + C(c,b) + C(c,d)| and its
/// violation flag (1 when the value exceeds the classical bound 2).
///
/// # Safety
/// Direction arguments must point to three doubles each; `value` and
/// `violated` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn rc_chsh(
    spin: RcSpin,
    operator: RcOperator,
    backend: RcBackend,
    momenta: RcMomenta,
    n: *const f64,
    x: f64,
    mass: f64,
    a: *const f64,
    b: *const f64,
    c: *const f64,
    d: *const f64,
    value: *mut f64,
    violated: *mut i32,
) -> RcStatus {
    if let Err(status) = check_ptr(value.cast_const(), "value")
        .and_then(|()| check_ptr(violated.cast_const(), "violated"))
    {
        return status;
    }
    guarded(|| {
        let dirs: Result<Vec<Direction>, RcStatus> = [(a, "a"), (b, "b"), (c, "c"), (d, "d")]
            .into_iter()
            .map(|(ptr, name)| read_direction(ptr, name))
            .collect();
        let dirs = match dirs {
            Ok(d) => d,
            Err(status) => return status,
        };
        let correlator = match build_correlator(spin, operator, backend, momenta, n, x, mass) {
            Ok(c) => c,
            Err(status) => return status,
        };
        match chsh(&correlator, &dirs[0], &dirs[1], &dirs[2], &dirs[3]) {
            Ok(result) => {
                *value = result.value;
                *violated = i32::from(result.violated);
                RcStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Bell-Mermin combination C(a,b) + C(b,c) + C(c,a) for spin-1 pairs and
/// its violation flag (1 when the value exceeds the classical bound 1).
///
/// # Safety
/// Direction arguments must point to three doubles each; `value` and
/// `violated` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn rc_bell_mermin(
    spin: RcSpin,
    operator: RcOperator,
    backend: RcBackend,
    momenta: RcMomenta,
    n: *const f64,
    x: f64,
    mass: f64,
    a: *const f64,
    b: *const f64,
    c: *const f64,
    value: *mut f64,
    violated: *mut i32,
) -> RcStatus {
    if let Err(status) = check_ptr(value.cast_const(), "value")
        .and_then(|()| check_ptr(violated.cast_const(), "violated"))
    {
        return status;
    }
    guarded(|| {
        let dirs: Result<Vec<Direction>, RcStatus> = [(a, "a"), (b, "b"), (c, "c")]
            .into_iter()
            .map(|(ptr, name)| read_direction(ptr, name))
            .collect();
        let dirs = match dirs {
            Ok(d) => d,
            Err(status) => return status,
        };
        let correlator = match build_correlator(spin, operator, backend, momenta, n, x, mass) {
            Ok(c) => c,
            Err(status) => return status,
        };
        match bell_mermin(&correlator, &dirs[0], &dirs[1], &dirs[2]) {
            Ok(result) => {
                *value = result.value;
                *violated = i32::from(result.violated);
                RcStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Correlation of `a` and `b` on a uniform inclusive x grid. On success
/// `*out` owns a handle that must be released with `rc_sweep_free`.
///
/// # Safety
/// `a` and `b` must point to three doubles and `out` to a writable
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rc_sweep_correlation(
    spin: RcSpin,
    operator: RcOperator,
    backend: RcBackend,
    momenta: RcMomenta,
    n: *const f64,
    mass: f64,
    a: *const f64,
    b: *const f64,
    x_min: f64,
    x_max: f64,
    steps: usize,
    out: *mut *mut RcSweep,
) -> RcStatus {
    if let Err(status) = check_ptr(out.cast_const(), "out") {
        return status;
    }
    guarded(|| {
        let a = match read_direction(a, "a") {
            Ok(d) => d,
            Err(status) => return status,
        };
        let b = match read_direction(b, "b") {
            Ok(d) => d,
            Err(status) => return status,
        };
        let result = sweep_x(
            "correlation",
            |x| match build_correlator(spin, operator, backend, momenta, n, x, mass) {
                Ok(c) => c.correlation(&a, &b),
                Err(_) => Err(Error::InvalidArgument("bad sweep configuration".into())),
            },
            x_min,
            x_max,
            steps,
        );
        match result {
            Ok(sweep) => {
                let points = sweep.points.iter().map(|p| (p.x, p.value)).collect();
                *out = Box::into_raw(Box::new(RcSweep { points }));
                RcStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Number of points held by a sweep handle; 0 for null.
///
/// # Safety
/// `sweep` must be null or a live handle from `rc_sweep_correlation`.
#[no_mangle]
pub unsafe extern "C" fn rc_sweep_len(sweep: *const RcSweep) -> usize {
    if check_ptr(sweep, "sweep").is_err() {
        return 0;
    }
    (*sweep).points.len()
}

/// Reads one grid point out of a sweep handle.
///
/// # Safety
/// `sweep` must be a live handle; `x` and `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_sweep_point(
    sweep: *const RcSweep,
    index: usize,
    x: *mut f64,
    value: *mut f64,
) -> RcStatus {
    if let Err(status) = check_ptr(sweep, "sweep")
        .and_then(|()| check_ptr(x.cast_const(), "x"))
        .and_then(|()| check_ptr(value.cast_const(), "value"))
    {
        return status;
    }
    let points: &[(f64, f64)] = &(*sweep).points;
    match points.get(index) {
        Some(&(px, pv)) => {
            *x = px;
            *value = pv;
            RcStatus::Ok
        }
        None => {
            set_error(&format!(
                "index {index} out of range for sweep of {} points",
                points.len()
            ));
            RcStatus::OutOfRange
        }
    }
}

/// Releases a sweep handle. Null is ignored.
///
/// # Safety
/// `sweep` must be null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rc_sweep_free(sweep: *mut RcSweep) {
    if !sweep.is_null() {
        drop(Box::from_raw(sweep));
    }
}

/// Locates interior extrema of the correlation of `a` and `b` in x.
/// Uses the closed form when one exists and the oracle otherwise. On
/// success `*out` owns a handle that must be released with
/// `rc_extrema_free`.
///
/// # Safety
/// `a` and `b` must point to three doubles and `out` to a writable
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rc_find_extrema(
    spin: RcSpin,
    operator: RcOperator,
    momenta: RcMomenta,
    n: *const f64,
    mass: f64,
    a: *const f64,
    b: *const f64,
    x_min: f64,
    x_max: f64,
    coarse_steps: usize,
    x_tol: f64,
    out: *mut *mut RcExtrema,
) -> RcStatus {
    if out.is_null() {
        set_error("out must not be null");
        return RcStatus::NullPointer;
    }
    guarded(|| {
        let a = match read_direction(a, "a") {
            Ok(d) => d,
            Err(status) => return status,
        };
        let b = match read_direction(b, "b") {
            Ok(d) => d,
            Err(status) => return status,
        };
        let result = find_local_extrema(
            |x| match build_correlator(spin, operator, RcBackend::Auto, momenta, n, x, mass) {
                Ok(c) => c.correlation(&a, &b),
                Err(_) => Err(Error::InvalidArgument("bad extremum configuration".into())),
            },
            x_min,
            x_max,
            coarse_steps,
            x_tol,
        );
        match result {
            Ok(extrema) => {
                let entries = extrema
                    .iter()
                    .map(|e| {
                        let kind = match e.kind {
                            ExtremumKind::Max => RcExtremumKind::Max,
                            ExtremumKind::Min => RcExtremumKind::Min,
                        };
                        (e.x_star, e.value, kind)
                    })
                    .collect();
                *out = Box::into_raw(Box::new(RcExtrema { entries }));
                RcStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Number of extrema held by a handle; 0 for null.
///
/// # Safety
/// `extrema` must be null or a live handle from `rc_find_extrema`.
#[no_mangle]
pub unsafe extern "C" fn rc_extrema_len(extrema: *const RcExtrema) -> usize {
    if check_ptr(extrema, "extrema").is_err() {
        return 0;
    }
    (*extrema).entries.len()
}

/// Reads one extremum out of a handle.
///
/// # Safety
/// `extrema` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_extrema_get(
    extrema: *const RcExtrema,
    index: usize,
    x_star: *mut f64,
    value: *mut f64,
    kind: *mut RcExtremumKind,
) -> RcStatus {
    if let Err(status) = check_ptr(extrema, "extrema")
        .and_then(|()| check_ptr(x_star.cast_const(), "x_star"))
        .and_then(|()| check_ptr(value.cast_const(), "value"))
        .and_then(|()| check_ptr(kind.cast_const(), "kind"))
    {
        return status;
    }
    let entries: &[(f64, f64, RcExtremumKind)] = &(*extrema).entries;
    match entries.get(index) {
        Some(&(ex, ev, ek)) => {
            *x_star = ex;
            *value = ev;
            *kind = ek;
            RcStatus::Ok
        }
        None => {
            set_error(&format!(
                "index {index} out of range for {} extrema",
                entries.len()
            ));
            RcStatus::OutOfRange
        }
    }
}

/// Releases an extrema handle. Null is ignored.
///
/// # Safety
/// `extrema` must be null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rc_extrema_free(extrema: *mut RcExtrema) {
    if !extrema.is_null() {
        drop(Box::from_raw(extrema));
    }
}

/// Cross-checks every closed form against the trace evaluation on
/// seeded random configurations. Writes the largest discrepancy seen
/// and 1 into `passed` when it stays below the 1e-10 gate.
///
/// # Safety
/// `max_discrepancy` and `passed` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn rc_verify_equivalence(
    samples: usize,
    x_min: f64,
    x_max: f64,
    seed: u64,
    max_discrepancy: *mut f64,
    passed: *mut i32,
) -> RcStatus {
    if let Err(status) = check_ptr(max_discrepancy.cast_const(), "max_discrepancy")
        .and_then(|()| check_ptr(passed.cast_const(), "passed"))
    {
        return status;
    }
    guarded(|| match verify_equivalence(samples, (x_min, x_max), seed) {
        Ok(report) => {
            *max_discrepancy = report.max_discrepancy;
            *passed = i32::from(report.passed);
            RcStatus::Ok
        }
        Err(err) => fail(&err),
    })
}

//! C ABI for the `suris` library.
//!
//! Every entry point returns a [`SurisStatus`]; values come back through out
//! pointers. Handles are opaque and owned by the caller until passed to the
//! matching `_free`. No panic crosses the boundary. On failure the message is
//! kept per thread and read with [`suris_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use suris::heteroclinic::{lobe_area_numeric, FinderOptions, LobeAreaRecord, Orientation};
use suris::melnikov::{anti_integrable_area, critical_points, melnikov_l};
use suris::numerics::{gamma_eval, GammaEval};
use suris::surismap::{invariant, map_forward, map_inverse, potential, MapParams, PhasePoint};
use suris::{Error, Precision, Real};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurisStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    InvalidPrecision = 5,
    NonConvergence = 6,
    InadmissibleEpsilon = 7,
    NoSignChange = 8,
    TailNonConvergence = 9,
    Verification = 10,
    Config = 11,
    BufferTooSmall = 12,
    Panic = 13,
}

impl From<&Error> for SurisStatus {
    fn from(err: &Error) -> Self {
        match err {
            Error::Domain { .. } => SurisStatus::Domain,
            Error::InvalidPrecision { .. } => SurisStatus::InvalidPrecision,
            Error::Parse { .. } => SurisStatus::Parse,
            Error::NonConvergence { .. } => SurisStatus::NonConvergence,
            Error::InadmissibleEpsilon { .. } => SurisStatus::InadmissibleEpsilon,
            Error::NoSignChange { .. } => SurisStatus::NoSignChange,
            Error::TailNonConvergence { .. } => SurisStatus::TailNonConvergence,
            Error::Verification { .. } => SurisStatus::Verification,
            Error::Config { .. } => SurisStatus::Config,
        }
    }
}

/// Sign of the lobe action difference.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurisOrientation {
    Positive = 1,
    Negative = -1,
    Degenerate = 0,
}

/// Map parameters at a fixed precision.
pub struct SurisMap {
    params: MapParams,
}

/// A measured lobe area.
pub struct SurisLobe {
    record: LobeAreaRecord,
}

/// `Gamma(nu)` by its three routes.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SurisGamma {
    pub nu: f64,
    pub series: f64,
    pub elliptic: f64,
    pub asymptotic: f64,
    pub terms: u64,
}

impl From<GammaEval> for SurisGamma {
    fn from(g: GammaEval) -> Self {
        SurisGamma {
            nu: g.nu.to_f64(),
            series: g.gamma.to_f64(),
            elliptic: g.gamma_elliptic.to_f64(),
            asymptotic: g.gamma_asymptotic.to_f64(),
            terms: g.terms_used as u64,
        }
    }
}

/// Critical points of the Melnikov series and its gap `L(theta_q) - L(theta_p)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SurisMelnikovGap {
    pub theta_q: f64,
    pub theta_p: f64,
    pub l_q: f64,
    pub l_p: f64,
    pub gap: f64,
}

/// Lobe-area record rounded to doubles. `rel_err` is NaN when `eps = 0`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SurisLobeSummary {
    pub delta: f64,
    pub eps: f64,
    pub nu: f64,
    pub area_numeric: f64,
    pub melnikov_area: f64,
    pub asymptotic_area: f64,
    pub anti_integrable_area: f64,
    pub rel_err: f64,
    pub tail_bound: f64,
    pub orientation: SurisOrientation,
    pub digits: u32,
    pub tail_terms: u64,
}

/// Selects a full-precision field of a [`SurisLobe`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurisLobeField {
    Delta = 0,
    Eps = 1,
    Nu = 2,
    AreaNumeric = 3,
    MelnikovArea = 4,
    AsymptoticArea = 5,
    AntiIntegrableArea = 6,
    RelErr = 7,
    TailBound = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

struct Failure(SurisStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure((&err).into(), err.to_string())
    }
}

fn null(name: &str) -> Failure {
    Failure(SurisStatus::NullPointer, format!("{name} is null"))
}

/// Runs `body` with panics and errors turned into a status and a message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SurisStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            SurisStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(&format!("internal panic: {message}"));
            SurisStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` is null or points to a NUL-terminated string.
unsafe fn text<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Failure(SurisStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

/// # Safety
/// `ptr` is null or valid for reads as `T`.
unsafe fn borrow<'a, T>(ptr: *const T, name: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| null(name))
}

/// # Safety
/// `ptr` is null or valid for writes as `T`.
unsafe fn put<T>(ptr: *mut T, name: &str, value: T) -> Result<(), Failure> {
    if ptr.is_null() {
        return Err(null(name));
    }
    ptr.write(value);
    Ok(())
}

fn finite(value: f64, name: &str) -> Result<f64, Failure> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Failure(
            SurisStatus::Domain,
            format!("{name} is not finite"),
        ))
    }
}

impl SurisMap {
    fn real(&self, value: f64, name: &str) -> Result<Real, Failure> {
        Ok(self.params.precision().real(finite(value, name)?))
    }

    fn point(&self, theta: f64, r: f64) -> Result<PhasePoint, Failure> {
        Ok(PhasePoint::new(
            self.real(theta, "theta")?,
            self.real(r, "r")?,
        ))
    }
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn suris_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn suris_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn suris_status_name(status: SurisStatus) -> *const c_char {
    let name: &'static str = match status {
        SurisStatus::Ok => "ok\0",
        SurisStatus::NullPointer => "null_pointer\0",
        SurisStatus::InvalidUtf8 => "invalid_utf8\0",
        SurisStatus::Parse => "parse\0",
        SurisStatus::Domain => "domain\0",
        SurisStatus::InvalidPrecision => "invalid_precision\0",
        SurisStatus::NonConvergence => "non_convergence\0",
        SurisStatus::InadmissibleEpsilon => "inadmissible_epsilon\0",
        SurisStatus::NoSignChange => "no_sign_change\0",
        SurisStatus::TailNonConvergence => "tail_non_convergence\0",
        SurisStatus::Verification => "verification\0",
        SurisStatus::Config => "config\0",
        SurisStatus::BufferTooSmall => "buffer_too_small\0",
        SurisStatus::Panic => "panic\0",
    };
    name.as_ptr().cast()
}

/// Creates a map from decimal `delta` in (0, 1) and `eps >= 0` at `digits`
/// decimal digits (at least 30).
///
/// # Safety
/// `delta` and `eps` are NUL-terminated strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_new(
    delta: *const c_char,
    eps: *const c_char,
    digits: u32,
    out: *mut *mut SurisMap,
) -> SurisStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        out.write(ptr::null_mut());
        let precision = Precision::new(digits)?;
        let params = MapParams::from_decimal(text(delta, "delta")?, text(eps, "eps")?, precision)?;
        out.write(Box::into_raw(Box::new(SurisMap { params })));
        Ok(())
    })
}

/// Releases a map; null is ignored.
///
/// # Safety
/// `map` came from [`suris_map_new`] and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn suris_map_free(map: *mut SurisMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// The saddle multiplier `nu`.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_nu(map: *const SurisMap, out: *mut f64) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        put(out, "out", map.params.nu().to_f64())
    })
}

/// One forward step of the perturbed map on the lift.
///
/// # Safety
/// `map` is a live handle; output pointers are writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_forward(
    map: *const SurisMap,
    theta: f64,
    r: f64,
    theta_out: *mut f64,
    r_out: *mut f64,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        let image = map_forward(&map.params, &map.point(theta, r)?);
        put(theta_out, "theta_out", image.theta.to_f64())?;
        put(r_out, "r_out", image.r.to_f64())
    })
}

/// One inverse step of the perturbed map on the lift.
///
/// # Safety
/// `map` is a live handle; output pointers are writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_inverse(
    map: *const SurisMap,
    theta: f64,
    r: f64,
    theta_out: *mut f64,
    r_out: *mut f64,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        let image = map_inverse(&map.params, &map.point(theta, r)?);
        put(theta_out, "theta_out", image.theta.to_f64())?;
        put(r_out, "r_out", image.r.to_f64())
    })
}

/// The integral `I(theta, r)` of the unperturbed map.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_invariant(
    map: *const SurisMap,
    theta: f64,
    r: f64,
    out: *mut f64,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        put(
            out,
            "out",
            invariant(&map.params, &map.point(theta, r)?).to_f64(),
        )
    })
}

/// The unperturbed potential `V(theta)`.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_potential(
    map: *const SurisMap,
    theta: f64,
    out: *mut f64,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        put(
            out,
            "out",
            potential(&map.params, &map.real(theta, "theta")?).to_f64(),
        )
    })
}

/// `Gamma` at the map's `nu`.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_gamma(
    map: *const SurisMap,
    out: *mut SurisGamma,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        put(out, "out", gamma_eval(map.params.nu())?.into())
    })
}

/// The Melnikov series `L(theta)` for `|theta| < 1/2`.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_melnikov_l(
    map: *const SurisMap,
    theta: f64,
    out: *mut f64,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        let value = melnikov_l(map.params.nu(), &map.real(theta, "theta")?)?;
        put(out, "out", value.to_f64())
    })
}

/// Critical points and gap of the Melnikov series.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_melnikov_gap(
    map: *const SurisMap,
    out: *mut SurisMelnikovGap,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        let nu = map.params.nu();
        let crit = critical_points(nu)?;
        let l_q = melnikov_l(nu, &crit.theta_q)?;
        let l_p = melnikov_l(nu, &crit.theta_p)?;
        put(
            out,
            "out",
            SurisMelnikovGap {
                theta_q: crit.theta_q.to_f64(),
                theta_p: crit.theta_p.to_f64(),
                gap: (&l_q - &l_p).to_f64(),
                l_q: l_q.to_f64(),
                l_p: l_p.to_f64(),
            },
        )
    })
}

/// Lobe area in the anti-integrable limit at the map's `eps`.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_anti_integrable(
    map: *const SurisMap,
    out: *mut f64,
) -> SurisStatus {
    guard(|| {
        let map = borrow(map, "map")?;
        put(out, "out", anti_integrable_area(&map.params)?.to_f64())
    })
}

/// Measures the lobe area by the symmetric-orbit finder with default options.
///
/// # Safety
/// `map` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_map_lobe_area(
    map: *const SurisMap,
    out: *mut *mut SurisLobe,
) -> SurisStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        out.write(ptr::null_mut());
        let map = borrow(map, "map")?;
        let record = lobe_area_numeric(&map.params, &FinderOptions::default())?;
        out.write(Box::into_raw(Box::new(SurisLobe { record })));
        Ok(())
    })
}

/// Releases a lobe record; null is ignored.
///
/// # Safety
/// `lobe` came from [`suris_map_lobe_area`] and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn suris_lobe_free(lobe: *mut SurisLobe) {
    if !lobe.is_null() {
        drop(Box::from_raw(lobe));
    }
}

/// The lobe record rounded to doubles.
///
/// # Safety
/// `lobe` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_lobe_summary(
    lobe: *const SurisLobe,
    out: *mut SurisLobeSummary,
) -> SurisStatus {
    guard(|| {
        let rec = &borrow(lobe, "lobe")?.record;
        let orientation = match rec.orientation {
            Orientation::Positive => SurisOrientation::Positive,
            Orientation::Negative => SurisOrientation::Negative,
            Orientation::Degenerate => SurisOrientation::Degenerate,
        };
        put(
            out,
            "out",
            SurisLobeSummary {
                delta: rec.delta.to_f64(),
                eps: rec.eps.to_f64(),
                nu: rec.nu.to_f64(),
                area_numeric: rec.area_numeric.to_f64(),
                melnikov_area: rec.melnikov_area.to_f64(),
                asymptotic_area: rec.asymptotic_area.to_f64(),
                anti_integrable_area: rec.anti_integrable_area.to_f64(),
                rel_err: rec.rel_err.as_ref().map_or(f64::NAN, Real::to_f64),
                tail_bound: rec.tail_bound.to_f64(),
                orientation,
                digits: rec.digits,
                tail_terms: rec.tail_terms as u64,
            },
        )
    })
}

/// Writes one field of the record as a NUL-terminated decimal at the
/// record's precision. `needed` (optional) receives the buffer size required,
/// including the NUL; a short buffer gives `BufferTooSmall` and is left
/// untouched. `RelErr` at `eps = 0` is the empty string.
///
/// # Safety
/// `lobe` is a live handle; `buf` is null or writable for `len` bytes;
/// `needed` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn suris_lobe_decimal(
    lobe: *const SurisLobe,
    field: SurisLobeField,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> SurisStatus {
    guard(|| {
        let rec = &borrow(lobe, "lobe")?.record;
        let value = match field {
            SurisLobeField::Delta => Some(&rec.delta),
            SurisLobeField::Eps => Some(&rec.eps),
            SurisLobeField::Nu => Some(&rec.nu),
            SurisLobeField::AreaNumeric => Some(&rec.area_numeric),
            SurisLobeField::MelnikovArea => Some(&rec.melnikov_area),
            SurisLobeField::AsymptoticArea => Some(&rec.asymptotic_area),
            SurisLobeField::AntiIntegrableArea => Some(&rec.anti_integrable_area),
            SurisLobeField::RelErr => rec.rel_err.as_ref(),
            SurisLobeField::TailBound => Some(&rec.tail_bound),
        };
        let text = value.map_or_else(String::new, |v| v.to_decimal(rec.digits));
        let size = text.len() + 1;
        if !needed.is_null() {
            needed.write(size);
        }
        if buf.is_null() || len < size {
            return Err(Failure(
                SurisStatus::BufferTooSmall,
                format!("buffer of {len} bytes, {size} needed"),
            ));
        }
        ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
        buf.add(text.len()).write(0);
        Ok(())
    })
}

/// `Gamma(nu)` for a decimal `nu` in (0, 1) at `digits` digits.
///
/// # Safety
/// `nu` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn suris_gamma(
    nu: *const c_char,
    digits: u32,
    out: *mut SurisGamma,
) -> SurisStatus {
    guard(|| {
        let precision = Precision::new(digits)?;
        let nu = precision.parse(text(nu, "nu")?)?;
        put(out, "out", gamma_eval(&nu)?.into())
    })
}

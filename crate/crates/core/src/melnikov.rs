//! The Melnikov series `L(theta) = sum_t P(h^t(theta))` for `P = cos^2(pi theta)`,
//! its derivatives and critical points, and the two closed-form lobe areas.
//!
//! Along the connection `P(h^t(theta)) = alpha_t = 4 w_t / (1 + w_t)^2` with
//! `w_t = nu^(2t) c^2` and `c = (1 - z) / (1 + z)`, `z = tan(pi theta / 2)`.
//! Writing `u = log w_t` gives `alpha_t = sech^2(u/2)`, which is how the sums
//! and their derivatives are evaluated.

use crate::connection::ConnectionMap;
use crate::error::{Error, Result};
use crate::numerics::{dilog, gamma_series};
use crate::real::Real;
use crate::surismap::{perturbation, MapParams};

const GUARD_DIGITS: u32 = 4;
/// Safety cap on the number of terms on each side of the peak.
const MAX_SIDE_TERMS: usize = 1_000_000;
const NEWTON_STEPS: usize = 8;

/// Which of the two equivalent indexings of `alpha_t` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Right-moving `h`: `w_t = nu^(2t) ((1 - z) / (1 + z))^2`.
    Dynamical,
    /// The reversed indexing `t -> -t`: `w_t = nu^(-2t) ((1 - z) / (1 + z))^2`.
    Reversed,
}

/// `alpha_t(z) = 4 nu^(2t) (1 - z^2)^2 / ((1 + z)^2 + nu^(2t) (1 - z)^2)^2` in the
/// dynamical orientation, or the same with `t -> -t`.
pub fn alpha_term(nu: &Real, t: i64, z: &Real, orientation: Orientation) -> Real {
    let t = match orientation {
        Orientation::Dynamical => t,
        Orientation::Reversed => -t,
    };
    let q = nu.square().powi(t as i32);
    let plus = (1 + z).square();
    let minus = (1 - z).square();
    let numerator = &q * (1 - z.square()).square() * 4;
    numerator / (plus + q * minus).square()
}

/// Sums of the three term families needed for `L`, `L'` and `L''`.
struct TermSums {
    alpha: Real,
    /// `sum d alpha / du = -sum alpha tanh(u/2)`.
    first: Real,
    /// `sum d^2 alpha / du^2 = sum alpha tanh^2(u/2) - alpha^2 / 2`.
    second: Real,
}

/// `c = (1 - tan(pi theta/2)) / (1 + tan(pi theta/2)) = tan(pi/4 - pi theta/2)`.
fn ratio_c(theta: &Real) -> Real {
    let z = (theta * theta.pi_like() / 2).tan();
    (1 - &z) / (1 + z)
}

fn check_open(function: &'static str, theta: &Real) -> Result<()> {
    if !theta.is_finite() || theta.abs() >= 0.5 {
        return Err(Error::domain(function, theta, "(-1/2, 1/2)"));
    }
    Ok(())
}

fn check_nu(function: &'static str, nu: &Real) -> Result<()> {
    if *nu <= 0 || *nu >= 1 {
        return Err(Error::domain(function, nu, "(0, 1)"));
    }
    Ok(())
}

/// Two-sided sum over `t` started at the peak of `alpha_t`, where `w_t` is
/// closest to 1, and continued outward until terms fall below tolerance.
/// Away from the peak the terms decay like `nu^(2|t|)`.
fn term_sums(nu: &Real, theta: &Real, want_derivatives: bool) -> Result<TermSums> {
    let target = nu.precision().max(theta.precision());
    let work = target.with_guard(GUARD_DIGITS);
    let nu = nu.to_precision(work);
    let theta = theta.to_precision(work);
    let q = nu.square();
    let c2 = ratio_c(&theta).square();
    let peak = (-(c2.ln() / q.ln())).to_f64().round();
    if !peak.is_finite() || peak.abs() > 1e9 {
        return Err(Error::domain("melnikov", &theta, "(-1/2, 1/2)"));
    }
    let peak = peak as i64;
    let w0 = q.powi(peak as i32) * c2;
    let tol = work.tolerance(0);

    let mut sums = TermSums {
        alpha: work.zero(),
        first: work.zero(),
        second: work.zero(),
    };
    let add = |sums: &mut TermSums, w: &Real| -> Real {
        let alpha = w * 4 / (1 + w).square();
        if want_derivatives {
            let tanh = (w - 1) / (w + 1);
            sums.first -= &alpha * &tanh;
            sums.second += &alpha * tanh.square() - alpha.square() / 2;
        }
        sums.alpha += &alpha;
        alpha
    };
    add(&mut sums, &w0);
    let q_inv = q.recip();
    for step in [&q, &q_inv] {
        let mut w = w0.clone();
        let mut count = 0usize;
        loop {
            w *= step;
            let alpha = add(&mut sums, &w);
            count += 1;
            if alpha < &tol * (1 + sums.alpha.abs()) {
                break;
            }
            if count > MAX_SIDE_TERMS {
                return Err(Error::NonConvergence {
                    what: "melnikov series",
                    limit: MAX_SIDE_TERMS,
                });
            }
        }
    }
    Ok(TermSums {
        alpha: sums.alpha.to_precision(target),
        first: sums.first.to_precision(target),
        second: sums.second.to_precision(target),
    })
}

/// `L(theta)` on `(-1/2, 1/2)`.
pub fn melnikov_l(nu: &Real, theta: &Real) -> Result<Real> {
    check_nu("melnikov_l", nu)?;
    check_open("melnikov_l", theta)?;
    Ok(term_sums(nu, theta, false)?.alpha)
}

/// `L(theta)` summed term by term in a chosen orientation. Slower than
/// [`melnikov_l`]; both orientations give the same two-sided sum.
pub fn melnikov_l_alpha(nu: &Real, theta: &Real, orientation: Orientation) -> Result<Real> {
    check_nu("melnikov_l_alpha", nu)?;
    check_open("melnikov_l_alpha", theta)?;
    let z = (theta * theta.pi_like() / 2).tan();
    let peak = (-(ratio_c(theta).square().ln() / nu.square().ln()))
        .to_f64()
        .round() as i64;
    let peak = match orientation {
        Orientation::Dynamical => peak,
        Orientation::Reversed => -peak,
    };
    let tol = nu.precision().tolerance(0);
    let mut sum = alpha_term(nu, peak, &z, orientation);
    for direction in [1i64, -1] {
        let mut t = peak;
        loop {
            t += direction;
            let term = alpha_term(nu, t, &z, orientation);
            let small = term < &tol * (1 + sum.abs());
            sum += term;
            if small {
                break;
            }
        }
    }
    Ok(sum)
}

/// `L(theta)` from iterating `h` (or `h^-1` when `orientation` is reversed) and
/// summing `P` along the orbit.
pub fn melnikov_l_iterated(nu: &Real, theta: &Real, orientation: Orientation) -> Result<Real> {
    check_nu("melnikov_l_iterated", nu)?;
    check_open("melnikov_l_iterated", theta)?;
    let h = ConnectionMap::new(nu.clone())?;
    let tol = nu.precision().tolerance(0);
    let mut sum = perturbation(theta);
    for forward in [true, false] {
        let mut point = theta.clone();
        let mut count = 0usize;
        let moving_right = forward == (orientation == Orientation::Dynamical);
        loop {
            point = if moving_right {
                h.h(&point)?
            } else {
                h.h_inv(&point)?
            };
            let term = perturbation(&point);
            sum += &term;
            count += 1;
            // Terms only decay once the orbit has passed the peak at theta = 0.
            let outward = if moving_right { point > 0 } else { point < 0 };
            if outward && term < &tol * (1 + sum.abs()) {
                break;
            }
            if count > MAX_SIDE_TERMS {
                return Err(Error::NonConvergence {
                    what: "melnikov iteration",
                    limit: MAX_SIDE_TERMS,
                });
            }
        }
    }
    Ok(sum)
}

/// `u'(theta) = -2 pi / cos(pi theta)` and `u''(theta) = -2 pi^2 sin(pi theta) / cos^2(pi theta)`.
fn u_derivatives(theta: &Real) -> (Real, Real) {
    let pi = theta.pi_like();
    let c = theta.cos_pi();
    let s = theta.sin_pi();
    let d1 = -(&pi * 2) / &c;
    let d2 = -(pi.square() * 2 * s) / c.square();
    (d1, d2)
}

/// `L'(theta)`, differentiated term by term.
pub fn melnikov_d1(nu: &Real, theta: &Real) -> Result<Real> {
    check_nu("melnikov_d1", nu)?;
    check_open("melnikov_d1", theta)?;
    let sums = term_sums(nu, theta, true)?;
    let (u1, _) = u_derivatives(theta);
    Ok(sums.first * u1)
}

/// `L''(theta)`, differentiated term by term. At `theta = 0` this equals
/// `-2 pi^2 Gamma_0(nu^2)`.
pub fn melnikov_d2(nu: &Real, theta: &Real) -> Result<Real> {
    check_nu("melnikov_d2", nu)?;
    check_open("melnikov_d2", theta)?;
    let sums = term_sums(nu, theta, true)?;
    let (u1, u2) = u_derivatives(theta);
    Ok(sums.second * u1.square() + sums.first * u2)
}

/// The principal critical points of `L`.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoints {
    /// Maximum, always 0.
    pub theta_q: Real,
    /// Minimum, `(2/pi) atan((1 - sqrt(nu)) / (1 + sqrt(nu)))`.
    pub theta_p: Real,
}

/// Closed-form critical points, checked against `L'` and `L''` and polished by
/// Newton's method.
pub fn critical_points(nu: &Real) -> Result<CriticalPoints> {
    check_nu("critical_points", nu)?;
    let precision = nu.precision();
    let root = nu.sqrt();
    let closed = ((1 - &root) / (1 + root)).atan() * 2 / nu.pi_like();
    let theta_q = precision.zero();

    let derivative_tol = precision.tolerance(4);
    let d1_q = melnikov_d1(nu, &theta_q)?;
    if d1_q.abs() > derivative_tol {
        return Err(Error::Verification {
            detail: format!("L'(0) = {} is not zero", d1_q.to_decimal(6)),
        });
    }
    if melnikov_d2(nu, &theta_q)? >= 0 {
        return Err(Error::Verification {
            detail: "L''(0) is not negative".into(),
        });
    }

    let mut theta = closed.clone();
    for _ in 0..NEWTON_STEPS {
        let d1 = melnikov_d1(nu, &theta)?;
        let d2 = melnikov_d2(nu, &theta)?;
        if d2 <= 0 {
            return Err(Error::Verification {
                detail: format!("L'' is not positive at theta_p = {}", theta.to_decimal(12)),
            });
        }
        let step = d1 / d2;
        theta -= &step;
        if step.abs() <= precision.tolerance(0) {
            break;
        }
    }
    if (&theta - &closed).abs() > precision.tolerance(2) {
        return Err(Error::Verification {
            detail: format!(
                "Newton polish moved theta_p from {} to {}",
                closed.to_decimal(12),
                theta.to_decimal(12)
            ),
        });
    }
    Ok(CriticalPoints {
        theta_q,
        theta_p: closed,
    })
}

/// A sampled Melnikov function with its critical values.
#[derive(Clone, Debug)]
pub struct MelnikovProfile {
    pub nu: Real,
    pub thetas: Vec<Real>,
    pub values: Vec<Real>,
    /// True where `theta = +-1/2`, on which `L` is extended by 0.
    pub endpoint: Vec<bool>,
    pub theta_q: Real,
    pub theta_p: Real,
    pub l_q: Real,
    pub l_p: Real,
    pub gap: Real,
}

/// Samples `L` at `points` equally spaced angles covering `[-1/2, 1/2]`.
pub fn melnikov_profile(nu: &Real, points: usize) -> Result<MelnikovProfile> {
    check_nu("melnikov_profile", nu)?;
    let precision = nu.precision();
    let crit = critical_points(nu)?;
    let l_q = melnikov_l(nu, &crit.theta_q)?;
    let l_p = melnikov_l(nu, &crit.theta_p)?;
    let gap = &l_q - &l_p;

    let mut thetas = Vec::with_capacity(points);
    let mut values = Vec::with_capacity(points);
    let mut endpoint = Vec::with_capacity(points);
    for i in 0..points {
        let theta = if points == 1 {
            precision.zero()
        } else {
            precision.ratio(i as i64, points as i64 - 1) - precision.ratio(1, 2)
        };
        let at_end = theta.abs() >= 0.5;
        let value = if at_end {
            precision.zero()
        } else {
            melnikov_l(nu, &theta)?
        };
        thetas.push(theta);
        values.push(value);
        endpoint.push(at_end);
    }
    Ok(MelnikovProfile {
        nu: nu.clone(),
        thetas,
        values,
        endpoint,
        theta_q: crit.theta_q,
        theta_p: crit.theta_p,
        l_q,
        l_p,
        gap,
    })
}

/// First-order lobe area `eps (L(theta_q) - L(theta_p))`.
pub fn lobe_area_first_order(params: &MapParams) -> Result<Real> {
    if params.eps().is_zero() {
        return Ok(params.eps().clone());
    }
    let nu = params.nu();
    let crit = critical_points(nu)?;
    let gap = melnikov_l(nu, &crit.theta_q)? - melnikov_l(nu, &crit.theta_p)?;
    Ok(params.eps() * gap)
}

/// `eps Gamma(nu)`, the closed form of [`lobe_area_first_order`].
pub fn melnikov_area(params: &MapParams) -> Result<Real> {
    Ok(params.eps() * gamma_series(params.nu())?)
}

/// Lobe area in the anti-integrable limit,
/// `eps - 1/4 - (1/pi^2) (dilog(1 + delta) - dilog(1 - delta))`.
pub fn anti_integrable_area(params: &MapParams) -> Result<Real> {
    let delta = params.delta();
    let work = params.precision().with_guard(GUARD_DIGITS);
    let d = delta.to_precision(work);
    let bracket = dilog(&(1 + &d))? - dilog(&(1 - &d))?;
    let value = params.eps().to_precision(work) - work.ratio(1, 4) - bracket / work.pi().square();
    Ok(value.to_precision(params.precision()))
}

/// [`anti_integrable_area`] without the `eps` term.
pub fn anti_integrable_offset(params: &MapParams) -> Result<Real> {
    anti_integrable_area(&params.integrable())
}

//! The circle diffeomorphism `h` carrying the integrable dynamics along the
//! upper saddle connection, and the two separatrix graphs.
//!
//! `h` is right-moving: `-1/2` repels with multiplier `1/nu` and `+1/2`
//! attracts with multiplier `nu`. All powers share one closed form,
//! `h^t(theta) = theta + (2/pi) atan(s_t cos(pi theta) / (1 + s_t sin(pi theta)))`
//! with `s_t = (1 - nu^t) / (1 + nu^t)`, so `s_1 = sqrt(delta)` and
//! `s_{-t} = -s_t`.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::surismap::MapParams;

/// Angles outside `[-1/2, 1/2]` by more than this many ulps-worth are rejected.
const DOMAIN_SLACK_SHIFT: i32 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionMap {
    nu: Real,
    sqrt_delta: Real,
}

impl ConnectionMap {
    /// Requires `0 < nu < 1`.
    pub fn new(nu: Real) -> Result<Self> {
        if nu <= 0 || nu >= 1 {
            return Err(Error::domain("ConnectionMap::new", &nu, "(0, 1)"));
        }
        let sqrt_delta = (1 - &nu) / (1 + &nu);
        Ok(ConnectionMap { nu, sqrt_delta })
    }

    pub fn from_params(params: &MapParams) -> Self {
        ConnectionMap {
            nu: params.nu().clone(),
            sqrt_delta: params.sqrt_delta().clone(),
        }
    }

    pub fn nu(&self) -> &Real {
        &self.nu
    }

    /// One step of the right-moving dynamics.
    pub fn h(&self, theta: &Real) -> Result<Real> {
        check_angle("ConnectionMap::h", theta)?;
        Ok(shift(&self.sqrt_delta, theta))
    }

    /// `h^-1`, the same closed form with `sqrt(delta) -> -sqrt(delta)`.
    pub fn h_inv(&self, theta: &Real) -> Result<Real> {
        check_angle("ConnectionMap::h_inv", theta)?;
        Ok(shift(&-&self.sqrt_delta, theta))
    }

    /// `h^t` in one evaluation.
    pub fn pow(&self, t: i64, theta: &Real) -> Result<Real> {
        check_angle("ConnectionMap::pow", theta)?;
        if t == 0 {
            return Ok(theta.clone());
        }
        let w = self.nu.powi(t.unsigned_abs().min(i32::MAX as u64) as i32);
        let s = (1 - &w) / (1 + w);
        Ok(if t > 0 {
            shift(&s, theta)
        } else {
            shift(&-s, theta)
        })
    }

    /// `chi+(theta) = theta - h^-1(theta) >= 0`, the momentum on the upper separatrix.
    pub fn chi_plus(&self, theta: &Real) -> Result<Real> {
        Ok(theta - self.h_inv(theta)?)
    }

    /// `chi-(theta) = theta - h(theta) <= 0`, the momentum on the lower separatrix.
    pub fn chi_minus(&self, theta: &Real) -> Result<Real> {
        Ok(theta - self.h(theta)?)
    }
}

fn check_angle(function: &'static str, theta: &Real) -> Result<()> {
    let slack = theta.precision().tolerance(DOMAIN_SLACK_SHIFT);
    if !theta.is_finite() || theta.abs() > 0.5 + slack {
        return Err(Error::domain(function, theta, "[-1/2, 1/2]"));
    }
    Ok(())
}

/// `theta + (2/pi) atan(s cos(pi theta) / (1 + s sin(pi theta)))`; the
/// denominator stays positive for `|s| < 1`.
fn shift(s: &Real, theta: &Real) -> Real {
    let pi = theta.pi_like();
    let angle = theta * &pi;
    let y = s * angle.cos();
    let x = 1 + s * angle.sin();
    theta + y.atan2(&x) * 2 / pi
}

/// `h(theta)` for the map with multiplier `nu`.
pub fn h_conn(nu: &Real, theta: &Real) -> Result<Real> {
    ConnectionMap::new(nu.clone())?.h(theta)
}

pub fn h_conn_inv(nu: &Real, theta: &Real) -> Result<Real> {
    ConnectionMap::new(nu.clone())?.h_inv(theta)
}

pub fn h_conn_pow(nu: &Real, t: i64, theta: &Real) -> Result<Real> {
    ConnectionMap::new(nu.clone())?.pow(t, theta)
}

pub fn chi_plus(params: &MapParams, theta: &Real) -> Result<Real> {
    ConnectionMap::from_params(params).chi_plus(theta)
}

pub fn chi_minus(params: &MapParams, theta: &Real) -> Result<Real> {
    ConnectionMap::from_params(params).chi_minus(theta)
}

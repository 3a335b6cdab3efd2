//! Real dilogarithm.
//!
//! The map potential and the anti-integrable area are written with
//! `dilog(x) = integral_1^x log(z) / (1 - z) dz`, which equals `Li2(1 - x)` for
//! the usual power-series dilogarithm `Li2(u) = sum u^k / k^2`. The series is
//! only summed for `|u| <= 1/2`; reflection, Landen and inversion identities
//! bring every other real argument into that disk.

use crate::error::{Error, Result};
use crate::real::Real;

const GUARD_DIGITS: u32 = 4;

/// `dilog(x) = Li2(1 - x)` for `x > 0`.
pub fn dilog(x: &Real) -> Result<Real> {
    if *x <= 0 {
        return Err(Error::domain("dilog", x, "(0, inf)"));
    }
    let target = x.precision();
    let x = x.to_precision(target.with_guard(GUARD_DIGITS));
    let value = if x <= 0.5 {
        // Li2(1-x) = pi^2/6 - ln(x) ln(1-x) - Li2(x), without forming 1 - x first.
        zeta2(&x) - x.ln() * (1 - &x).ln() - li2_series(&x)
    } else {
        li2_real(&(1 - &x))
    };
    Ok(value.to_precision(target))
}

/// Real-branch `Li2(u)` for `u <= 1`.
pub fn li2(u: &Real) -> Result<Real> {
    if *u > 1 {
        return Err(Error::domain("li2", u, "(-inf, 1]"));
    }
    let target = u.precision();
    let u = u.to_precision(target.with_guard(GUARD_DIGITS));
    Ok(li2_real(&u).to_precision(target))
}

fn zeta2(like: &Real) -> Real {
    like.pi_like().square() / 6
}

fn li2_real(u: &Real) -> Real {
    if u.is_zero() {
        return u.zero_like();
    }
    if *u == 1 {
        return zeta2(u);
    }
    if *u < -1 {
        // Inversion: Li2(u) = -pi^2/6 - ln^2(-u)/2 - Li2(1/u).
        let neg = -u;
        return -zeta2(u) - neg.ln().square() / 2 - li2_real(&u.recip());
    }
    if *u < -0.5 {
        // Landen: Li2(u) = -Li2(u/(u-1)) - ln^2(1-u)/2, with u/(u-1) in (1/3, 1/2].
        let w = u / (u - 1);
        return -li2_series(&w) - (1 - u).ln().square() / 2;
    }
    if *u <= 0.5 {
        return li2_series(u);
    }
    // Reflection: Li2(u) = pi^2/6 - ln(u) ln(1-u) - Li2(1-u).
    let v = 1 - u;
    zeta2(u) - u.ln() * v.ln() - li2_series(&v)
}

/// Power series for `|u| <= 1/2`; terms shrink at least as fast as `2^-k`.
fn li2_series(u: &Real) -> Real {
    let tol = u.precision().tolerance(0);
    let mut power = u.clone();
    let mut sum = u.clone();
    let mut k: u32 = 1;
    loop {
        k += 1;
        power *= u;
        let term = &power / (k as f64 * k as f64);
        let small = term.abs() <= &tol * (1 + sum.abs());
        sum += term;
        if small || power.is_zero() {
            return sum;
        }
    }
}

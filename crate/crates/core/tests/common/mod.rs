//! Independent oracles shared by the integration tests: tanh-sinh quadrature
//! over `Real`, and plain brute-force evaluations of the series.
#![allow(dead_code)]

use suris::{Precision, Real};

pub const DIGITS: u32 = 40;

pub fn p() -> Precision {
    Precision::new(DIGITS).unwrap()
}

pub fn r(value: f64) -> Real {
    p().real(value)
}

/// `Real` from a decimal literal at the test precision.
pub fn dec(text: &str) -> Real {
    p().parse(text).unwrap()
}

pub fn rel(a: &Real, b: &Real) -> Real {
    ((a - b) / b).abs()
}

/// Tanh-sinh quadrature of `f` over `[a, b]` to about `digits` digits.
///
/// Nodes are placed through the complement `1 - tanh(u) = e^-u / cosh(u)` so
/// that no node lands on an endpoint.
pub fn quad<F: Fn(&Real) -> Real>(f: F, a: &Real, b: &Real, digits: u32) -> Real {
    let work = Precision::new(digits + 15).unwrap();
    let a = a.to_precision(work);
    let b = b.to_precision(work);
    let half = (&b - &a) / 2;
    let pi_half = work.pi() / 2;
    let t_max =
        (2.0 * (work.digits() as f64) * std::f64::consts::LN_10 / std::f64::consts::PI).ln() + 0.5;
    let tol = work.pow10(-(digits as i32) - 3);

    let mut previous: Option<Real> = None;
    let mut h = 0.5f64;
    for _ in 0..14 {
        let n = (t_max / h).ceil() as i64;
        let mut sum = work.zero();
        for k in -n..=n {
            let t = work.real(k as f64 * h);
            let u = &pi_half * t.sinh();
            let cosh_u = u.cosh();
            let weight = &pi_half * t.cosh() / cosh_u.square();
            let complement = (-u.abs()).exp() / &cosh_u;
            if complement.is_zero() {
                continue;
            }
            let x = if k >= 0 {
                &b - &half * &complement
            } else {
                &a + &half * &complement
            };
            sum += weight * f(&x);
        }
        let estimate = sum * &half * h;
        if let Some(prev) = &previous {
            if (&estimate - prev).abs() <= &tol * (1 + estimate.abs()) {
                return estimate.to_precision(Precision::new(digits).unwrap());
            }
        }
        previous = Some(estimate);
        h /= 2.0;
    }
    panic!("tanh-sinh quadrature did not converge");
}

/// `K(x) = (2/pi) integral_0^{pi/2} dt / sqrt(1 - x sin^2 t)`.
pub fn k_quad(x: &Real) -> Real {
    let zero = x.zero_like();
    let top = x.pi_like() / 2;
    let integral = quad(
        |t| (1 - x * t.sin().square()).sqrt().recip(),
        &zero,
        &top,
        x.precision().digits(),
    );
    integral * 2 / x.pi_like()
}

/// `dilog(x) = integral_1^x log z / (1 - z) dz`, integrated in `s = z - 1`
/// so that nodes crowding the removable point `z = 1` stay exact.
pub fn dilog_quad(x: &Real) -> Real {
    let zero = x.zero_like();
    let f = |s: &Real| {
        if s.is_zero() {
            -s.one_like()
        } else {
            -((1 + s).ln() / s)
        }
    };
    let digits = x.precision().digits();
    let end = x - 1;
    if end >= 0 {
        quad(f, &zero, &end, digits)
    } else {
        -quad(f, &end, &zero, digits)
    }
}

/// `V_delta(theta) = -(2/pi) integral_0^theta atan(delta sin 2 pi t / (1 + delta cos 2 pi t)) dt`.
pub fn potential_quad(delta: &Real, theta: &Real) -> Real {
    if theta.is_zero() {
        return theta.zero_like();
    }
    let pi = delta.pi_like();
    let f = |t: &Real| {
        let angle = t * &pi * 2;
        (delta * angle.sin()).atan2(&(1 + delta * angle.cos()))
    };
    let zero = theta.zero_like();
    let integral = quad(f, &zero, theta, delta.precision().digits());
    -(integral * 2 / &pi)
}

/// Sums `terms(k)` for `k = 1, 2, ...` until the term magnitude stays below
/// `10^-(digits + 10)` for three consecutive terms.
fn brute_sum<F: Fn(u64) -> Real>(start: Real, terms: F) -> Real {
    let tol = start
        .precision()
        .pow10(-(start.precision().digits() as i32) - 10);
    let mut sum = start;
    let mut small = 0;
    let mut k = 1u64;
    while small < 3 {
        let t = terms(k);
        small = if t.abs() < tol { small + 1 } else { 0 };
        sum += t;
        k += 1;
    }
    sum
}

/// `1 + 8 sum (-1)^k k nu^k / (1 + nu^k)`, summed with 60 extra digits.
pub fn gamma_brute(nu: &Real) -> Real {
    let work = Precision::new(nu.precision().digits() + 60).unwrap();
    let q = nu.to_precision(work);
    let sum = brute_sum(work.one(), |k| {
        let power = q.powi(k as i32);
        let sign = if k % 2 == 1 { -1 } else { 1 };
        power.clone() * (8 * sign) * (k as f64) / (1 + power)
    });
    sum.to_precision(nu.precision())
}

/// `Gamma_0` from its rearranged series, with 60 extra digits.
pub fn gamma0_brute(nu: &Real) -> Real {
    let work = Precision::new(nu.precision().digits() + 60).unwrap();
    let q = nu.to_precision(work);
    let sum = brute_sum(work.one(), |k| {
        let power = q.powi(k as i32);
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let kk = work.real(k as f64);
        power.clone() * kk.square() * kk * (16 * sign) / (1 - power)
    });
    sum.to_precision(nu.precision())
}

/// `L(0) = 1 + 8 sum_{t>=1} nu^(2t) / (1 + nu^(2t))^2`.
pub fn l_at_zero(nu: &Real) -> Real {
    let q = nu.square();
    brute_sum(nu.one_like(), |t| {
        let w = q.powi(t as i32);
        &w * 8 / (1 + &w).square()
    })
}

/// `L(theta_p) = 8 sum_{t>=0} nu^(2t+1) / (1 + nu^(2t+1))^2`.
pub fn l_at_theta_p(nu: &Real) -> Real {
    let q = nu.square();
    let first = nu * 8 / (1 + nu).square();
    brute_sum(first, |t| {
        let w = q.powi(t as i32) * nu;
        &w * 8 / (1 + &w).square()
    })
}

/// `nu = (1 - sqrt(delta)) / (1 + sqrt(delta))`, recomputed from scratch.
pub fn nu_of(delta: &Real) -> Real {
    let s = delta.sqrt();
    (1 - &s) / (1 + s)
}

/// Equally spaced interior points `lo + (hi - lo) i / (n + 1)`, `i = 1..=n`.
pub fn interior_grid(lo: f64, hi: f64, n: usize) -> Vec<Real> {
    (1..=n)
        .map(|i| p().real(lo) + (p().real(hi) - p().real(lo)) * (i as f64) / ((n + 1) as f64))
        .collect()
}

/// The nine points `0.1, 0.2, ..., 0.9`, exact tenths.
pub fn tenths() -> Vec<Real> {
    (1..=9).map(|i| p().ratio(i, 10)).collect()
}

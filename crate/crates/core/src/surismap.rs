//! The Suris standard map, its `cos^2` perturbation, and the associated
//! invariant, generating function and reversor.
//!
//! The map acts on the cylinder as
//! `r' = r + W'(theta)`, `theta' = theta + r'`, with total potential
//! `W = V_delta + eps P` where `P(theta) = cos^2(pi theta)` and
//! `V_delta(theta) = -(2/pi) integral_0^theta atan(delta sin 2 pi t / (1 + delta cos 2 pi t)) dt`.

use crate::error::{Error, Result};
use crate::numerics::nu_from_delta;
use crate::real::{Precision, Real};

/// Extra digits for the potential series, whose rotation recurrence and long
/// alternating sum lose a few digits at `delta` close to 1.
const POTENTIAL_GUARD_DIGITS: u32 = 6;

/// Parameters `(delta, eps)` of the perturbed map with the derived multiplier `nu`.
#[derive(Clone, Debug, PartialEq)]
pub struct MapParams {
    delta: Real,
    eps: Real,
    sqrt_delta: Real,
    nu: Real,
}

impl MapParams {
    /// Requires `0 < delta < 1` and `eps >= 0`. The precision of `delta` is
    /// the working precision; `eps` is brought to it.
    pub fn new(delta: Real, eps: Real) -> Result<Self> {
        if delta <= 0 || delta >= 1 {
            return Err(Error::domain("MapParams::new", &delta, "0 < delta < 1"));
        }
        if !eps.is_finite() || eps.is_sign_negative() && !eps.is_zero() {
            return Err(Error::domain("MapParams::new", &eps, "eps >= 0"));
        }
        let eps = eps.to_precision(delta.precision());
        let sqrt_delta = delta.sqrt();
        let nu = nu_from_delta(&delta)?;
        Ok(MapParams {
            delta,
            eps,
            sqrt_delta,
            nu,
        })
    }

    /// Parses decimal literals at the given precision.
    pub fn from_decimal(delta: &str, eps: &str, precision: Precision) -> Result<Self> {
        MapParams::new(precision.parse(delta)?, precision.parse(eps)?)
    }

    /// The same `delta` with `eps = 0`.
    pub fn integrable(&self) -> MapParams {
        MapParams {
            eps: self.delta.zero_like(),
            ..self.clone()
        }
    }

    pub fn delta(&self) -> &Real {
        &self.delta
    }

    pub fn eps(&self) -> &Real {
        &self.eps
    }

    pub fn sqrt_delta(&self) -> &Real {
        &self.sqrt_delta
    }

    pub fn nu(&self) -> &Real {
        &self.nu
    }

    pub fn precision(&self) -> Precision {
        self.delta.precision()
    }
}

/// A point `(theta, r)` of the cylinder.
///
/// Angles are kept in the chart `[-1/2, 3/2)`, wide enough to hold both
/// saddles `theta = -1/2` and `theta = 1/2` without wrapping. Points already in
/// the chart are left untouched, so [`PhasePoint::canonical`] is idempotent.
#[derive(Clone, Debug, PartialEq)]
pub struct PhasePoint {
    pub theta: Real,
    pub r: Real,
}

impl PhasePoint {
    pub fn new(theta: Real, r: Real) -> Self {
        PhasePoint { theta, r }
    }

    pub fn canonical(&self) -> PhasePoint {
        PhasePoint {
            theta: canonical_angle(&self.theta),
            r: self.r.clone(),
        }
    }

    /// Distance with the angle compared modulo 1 (max norm).
    pub fn distance_mod1(&self, other: &PhasePoint) -> Real {
        let d = &self.theta - &other.theta;
        let wrapped = &d - (&d + 0.5).floor();
        wrapped.abs().max(&(&self.r - &other.r).abs())
    }
}

fn canonical_angle(theta: &Real) -> Real {
    if *theta < -0.5 {
        theta - (theta + 0.5).floor()
    } else if *theta >= 1.5 {
        theta - (theta - 0.5).floor()
    } else {
        theta.clone()
    }
}

/// The two hyperbolic fixed points, fixed for every admissible `(delta, eps)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoints {
    pub z_a: PhasePoint,
    pub z_b: PhasePoint,
}

impl FixedPoints {
    pub fn new(precision: Precision) -> Self {
        FixedPoints {
            z_a: PhasePoint::new(precision.ratio(-1, 2), precision.zero()),
            z_b: PhasePoint::new(precision.ratio(1, 2), precision.zero()),
        }
    }
}

/// `V_delta(theta) = (1/pi^2) sum_{k>=1} (-delta)^k (1 - cos 2 pi k theta) / k^2`.
///
/// This real cosine series follows from the dilogarithm form of the potential
/// and converges like `delta^k`.
pub fn potential(params: &MapParams, theta: &Real) -> Real {
    let target = params.precision();
    let work = target.with_guard(POTENTIAL_GUARD_DIGITS);
    let theta = theta.to_precision(work);
    let delta = params.delta.to_precision(work);
    let pi = work.pi();
    let angle = &theta * &pi * 2;
    let (c1, s1) = (angle.cos(), angle.sin());
    let tol = work.tolerance(0);

    let (mut c, mut s) = (c1.clone(), s1.clone());
    let mut power = -&delta;
    let mut sum = work.zero();
    let mut k: u32 = 1;
    loop {
        let weight = &power / (k as f64 * k as f64);
        sum += &weight * (1 - &c);
        if weight.abs() * 2 < tol {
            break;
        }
        k += 1;
        power *= -&delta;
        let next_c = &c * &c1 - &s * &s1;
        s = &s * &c1 + &c * &s1;
        c = next_c;
    }
    (sum / pi.square()).to_precision(target)
}

/// `P(theta) = cos^2(pi theta)`.
pub fn perturbation(theta: &Real) -> Real {
    theta.cos_pi().square()
}

/// `V'_delta(theta) = -(2/pi) atan(delta sin 2 pi theta / (1 + delta cos 2 pi theta))`,
/// plus `eps P'(theta) = -eps pi sin 2 pi theta` when `perturbed`.
pub fn dpotential(params: &MapParams, theta: &Real, perturbed: bool) -> Real {
    let pi = theta.pi_like();
    let angle = theta * &pi * 2;
    let (c, s) = (angle.cos(), angle.sin());
    let y = &params.delta * &s;
    let x = 1 + &params.delta * c;
    let mut value = -(y.atan2(&x) * 2 / &pi);
    if perturbed && !params.eps.is_zero() {
        value -= &params.eps * pi * s;
    }
    value
}

/// Second derivative of the potential, `V'' (+ eps P'')`.
pub fn d2potential(params: &MapParams, theta: &Real, perturbed: bool) -> Real {
    let pi = theta.pi_like();
    let c = (theta * &pi * 2).cos();
    let d = &params.delta;
    let d2 = d.square();
    let mut value = -((d * &c + &d2) * 4) / (1 + d * &c * 2 + d2);
    if perturbed && !params.eps.is_zero() {
        value -= &params.eps * pi.square() * 2 * c;
    }
    value
}

/// Total force `W'(theta) = V'(theta) + eps P'(theta)`.
pub fn force(params: &MapParams, theta: &Real) -> Real {
    dpotential(params, theta, true)
}

/// One forward step on the lift (no angle wrapping).
pub fn step_lift(params: &MapParams, theta: &Real, r: &Real) -> (Real, Real) {
    let r_next = r + force(params, theta);
    let theta_next = theta + &r_next;
    (theta_next, r_next)
}

/// One backward step on the lift.
pub fn step_back_lift(params: &MapParams, theta: &Real, r: &Real) -> (Real, Real) {
    let theta_prev = theta - r;
    let r_prev = r - force(params, &theta_prev);
    (theta_prev, r_prev)
}

/// `f(theta, r) = (theta + r', r')` with `r' = r + W'(theta)`.
pub fn map_forward(params: &MapParams, z: &PhasePoint) -> PhasePoint {
    let (theta, r) = step_lift(params, &z.theta, &z.r);
    PhasePoint::new(theta, r).canonical()
}

/// `f^-1(theta', r') = (theta' - r', r' - W'(theta' - r'))`.
pub fn map_inverse(params: &MapParams, z: &PhasePoint) -> PhasePoint {
    let (theta, r) = step_back_lift(params, &z.theta, &z.r);
    PhasePoint::new(theta, r).canonical()
}

/// A real 2x2 matrix, rows indexed by `(theta', r')`, columns by `(theta, r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jacobian(pub [[Real; 2]; 2]);

impl Jacobian {
    pub fn det(&self) -> Real {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn trace(&self) -> Real {
        &self.0[0][0] + &self.0[1][1]
    }

    /// Real eigenvalues `(small, large)`, or `None` when they are complex.
    pub fn real_eigenvalues(&self) -> Option<(Real, Real)> {
        let t = self.trace();
        let disc = t.square() - self.det() * 4;
        if disc.is_sign_negative() && !disc.is_zero() {
            return None;
        }
        let root = disc.sqrt();
        Some(((&t - &root) / 2, (t + root) / 2))
    }
}

/// `[[1 + W'', 1], [W'', 1]]`, determinant 1.
pub fn jacobian(params: &MapParams, z: &PhasePoint) -> Jacobian {
    let w2 = d2potential(params, &z.theta, true);
    let one = w2.one_like();
    Jacobian([[&one + &w2, one.clone()], [w2, one]])
}

/// `I_delta(theta, r) = cos(pi r) + delta cos(pi (2 theta - r))`, conserved when `eps = 0`.
pub fn invariant(params: &MapParams, z: &PhasePoint) -> Real {
    let second = (&z.theta * 2 - &z.r).cos_pi();
    z.r.cos_pi() + &params.delta * second
}

/// `S(theta, theta') = (theta' - theta)^2 / 2 + V_delta(theta) + eps cos^2(pi theta)`,
/// on lifted coordinates.
pub fn gen_action(params: &MapParams, theta: &Real, theta_next: &Real) -> Real {
    let kinetic = (theta_next - theta).square() / 2;
    let mut value = kinetic + potential(params, theta);
    if !params.eps.is_zero() {
        value += &params.eps * perturbation(theta);
    }
    value
}

/// `R(theta, r) = (-theta, r + W'(theta))`, an involution with `R f R = f^-1`.
pub fn reversor(params: &MapParams, z: &PhasePoint) -> PhasePoint {
    PhasePoint::new(-&z.theta, &z.r + force(params, &z.theta)).canonical()
}

/// The two symmetry lines searched for heteroclinic orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryLine {
    /// `Fix(R) = {theta = 0}`.
    R,
    /// `Fix(f R) = {r = 2 theta}`.
    FR,
}

impl SymmetryLine {
    pub fn name(self) -> &'static str {
        match self {
            SymmetryLine::R => "R",
            SymmetryLine::FR => "fR",
        }
    }
}

/// Signed residual vanishing on the symmetry line: `theta` for `R`,
/// `r - 2 theta` for `f R`.
pub fn symmetry_residual(z: &PhasePoint, line: SymmetryLine) -> Real {
    match line {
        SymmetryLine::R => z.theta.clone(),
        SymmetryLine::FR => &z.r - &z.theta * 2,
    }
}

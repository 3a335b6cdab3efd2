//! Principal symmetric heteroclinic orbits of the perturbed map and the lobe
//! area as their action difference.
//!
//! The unstable manifold of `z_a = (-1/2, 0)` is seeded linearly,
//! `z(eta) = z_a + eta E^u`, and marched forward on the lift. The first iterate
//! `t_c` at which the symmetry residual changes sign fixes the branch; `eta` is
//! then bisected over one multiplier period `[eta_0 / lambda, eta_0]` until
//! `f^{t_c}(z(eta))` lies on the line. The second half of the orbit is the
//! reflection of the first.
//!
//! Backward tails use the linear manifold points `z_a + eta lambda^-k E^u`:
//! iterating the inverse map from the seed would amplify its `O(eta^2)`
//! distance from the manifold by `lambda^k`.

use crate::error::{Error, Result};
use crate::melnikov::{anti_integrable_area, melnikov_area};
use crate::numerics::gamma_asymptotic;
use crate::real::{Precision, Real};
use crate::surismap::{
    d2potential, gen_action, jacobian, step_lift, symmetry_residual, FixedPoints, MapParams,
    PhasePoint, SymmetryLine,
};

/// Largest perturbation for which the finder runs.
pub const MAX_EPS: f64 = 0.2;

/// Default location tolerance on the symmetry residual.
pub const DEFAULT_RHO: f64 = 1e-19;

/// The expanding eigen-direction at `z_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnstableDirection {
    /// Eigenvalue `lambda > 1`; equals `1/nu` when `eps = 0`.
    pub eigenvalue: Real,
    /// Unit vector `(d theta, d r)` with `d r > 0`.
    pub vector: PhasePoint,
}

pub fn unstable_direction(params: &MapParams) -> Result<UnstableDirection> {
    let fixed = FixedPoints::new(params.precision());
    let j = jacobian(params, &fixed.z_a);
    let (_, lambda) = j.real_eigenvalues().ok_or_else(|| Error::Verification {
        detail: "saddle z_a has complex multipliers".into(),
    })?;
    // First row: (J00 - lambda) x + J01 y = 0 with J01 = 1.
    let slope = &lambda - &j.0[0][0];
    let norm = (1 + slope.square()).sqrt();
    let mut vector = PhasePoint::new(norm.recip(), slope / &norm);
    if vector.r.is_sign_negative() {
        vector = PhasePoint::new(-vector.theta, -vector.r);
    }
    Ok(UnstableDirection {
        eigenvalue: lambda,
        vector,
    })
}

/// Tuning knobs for [`find_symmetric_orbit`]. `None` fields take
/// precision-dependent defaults.
#[derive(Clone, Debug, Default)]
pub struct FinderOptions {
    /// Initial seed offset, default `10^(-digits/5)`.
    pub eta0: Option<Real>,
    /// Residual tolerance, default [`DEFAULT_RHO`].
    pub rho: Option<Real>,
    /// Backward tail cut `|theta + 1/2|`, default `10^(-digits/2)`.
    pub tail_tol: Option<Real>,
    /// Bisection step limit, default 4 x working bits.
    pub max_bisections: Option<usize>,
    /// Limit on forward iterates while looking for the crossing.
    pub max_iterates: Option<usize>,
}

#[derive(Clone, Debug)]
struct ResolvedOptions {
    eta0: Real,
    rho: Real,
    tail_tol: Real,
    max_bisections: usize,
    max_iterates: usize,
}

impl FinderOptions {
    fn resolve(&self, precision: Precision) -> ResolvedOptions {
        let digits = precision.digits() as i32;
        ResolvedOptions {
            eta0: self
                .eta0
                .clone()
                .unwrap_or_else(|| precision.pow10(-(digits / 5))),
            rho: self
                .rho
                .clone()
                .unwrap_or_else(|| precision.real(DEFAULT_RHO)),
            tail_tol: self
                .tail_tol
                .clone()
                .unwrap_or_else(|| precision.pow10(-(digits / 2))),
            max_bisections: self.max_bisections.unwrap_or(4 * precision.bits() as usize),
            max_iterates: self.max_iterates.unwrap_or(10_000),
        }
    }
}

/// A heteroclinic orbit from `z_a` to `z_b` anchored on a symmetry line.
///
/// `points[i]` is the lifted angle at index `first_index + i`; index 0 is the
/// anchor. Outside the stored range the orbit sits at `-1/2` (before) or
/// `+1/2` (after).
#[derive(Clone, Debug)]
pub struct SymmetricOrbit {
    pub line: SymmetryLine,
    pub eta: Real,
    pub t_c: usize,
    pub first_index: i64,
    pub points: Vec<Real>,
    pub anchor: PhasePoint,
    pub residual: Real,
    pub bisection_steps: usize,
}

impl SymmetricOrbit {
    pub fn last_index(&self) -> i64 {
        self.first_index + self.points.len() as i64 - 1
    }

    /// Lifted angle at any index.
    pub fn theta(&self, t: i64) -> Real {
        let precision = self.anchor.theta.precision();
        if t < self.first_index {
            precision.ratio(-1, 2)
        } else if t > self.last_index() {
            precision.ratio(1, 2)
        } else {
            self.points[(t - self.first_index) as usize].clone()
        }
    }

    /// Phase point at an index inside the stored range, `r^t = theta^t - theta^{t-1}`.
    pub fn point(&self, t: i64) -> PhasePoint {
        let theta = self.theta(t);
        let r = &theta - self.theta(t - 1);
        PhasePoint::new(theta, r)
    }
}

fn check_eps(params: &MapParams) -> Result<()> {
    if *params.eps() > MAX_EPS {
        return Err(Error::InadmissibleEpsilon {
            eps: params.eps().to_decimal(6),
            limit: format!("{MAX_EPS}"),
        });
    }
    Ok(())
}

fn seed(z_a: &PhasePoint, dir: &UnstableDirection, eta: &Real) -> PhasePoint {
    PhasePoint::new(
        &z_a.theta + eta * &dir.vector.theta,
        &z_a.r + eta * &dir.vector.r,
    )
}

fn iterate(params: &MapParams, z: &PhasePoint, steps: usize) -> PhasePoint {
    let (mut theta, mut r) = (z.theta.clone(), z.r.clone());
    for _ in 0..steps {
        (theta, r) = step_lift(params, &theta, &r);
    }
    PhasePoint::new(theta, r)
}

/// Locates the principal symmetric orbit on `line`.
pub fn find_symmetric_orbit(
    params: &MapParams,
    line: SymmetryLine,
    opts: &FinderOptions,
) -> Result<SymmetricOrbit> {
    check_eps(params)?;
    let precision = params.precision();
    let opts = opts.resolve(precision);
    let dir = unstable_direction(params)?;
    let lambda = &dir.eigenvalue;
    let z_a = FixedPoints::new(precision).z_a;

    // March from the seed until the residual changes sign.
    let start = seed(&z_a, &dir, &opts.eta0);
    let initial_sign = symmetry_residual(&start, line).signum();
    if initial_sign == 0 {
        return Err(Error::NoSignChange {
            detail: "seed lies on the symmetry line".into(),
        });
    }
    let mut z = start;
    let mut t_c = 0usize;
    loop {
        if t_c >= opts.max_iterates {
            return Err(Error::NoSignChange {
                detail: format!("no crossing within {} iterates", opts.max_iterates),
            });
        }
        z = iterate(params, &z, 1);
        t_c += 1;
        if !z.theta.is_finite() || z.theta.abs() > 2 {
            return Err(Error::NoSignChange {
                detail: format!("orbit left the resonance after {t_c} iterates"),
            });
        }
        if symmetry_residual(&z, line).signum() != initial_sign {
            break;
        }
    }

    let g = |eta: &Real| symmetry_residual(&iterate(params, &seed(&z_a, &dir, eta), t_c), line);
    let hi_sign = g(&opts.eta0).signum();
    let mut hi = opts.eta0.clone();
    let mut lo = &hi / lambda;
    if g(&lo).signum() == hi_sign {
        lo = &lo / lambda;
        if g(&lo).signum() == hi_sign {
            return Err(Error::NoSignChange {
                detail: format!(
                    "residual keeps sign {hi_sign} on [eta0 / lambda^2, eta0] with t_c = {t_c}"
                ),
            });
        }
    }

    let mut steps = 0usize;
    let (eta, residual) = loop {
        let mid = (&lo + &hi) / 2;
        let value = g(&mid);
        if value.abs() <= opts.rho {
            break (mid, value);
        }
        steps += 1;
        if steps > opts.max_bisections || mid == lo || mid == hi {
            return Err(Error::NonConvergence {
                what: "symmetric orbit bisection",
                limit: opts.max_bisections,
            });
        }
        if value.signum() == hi_sign {
            hi = mid;
        } else {
            lo = mid;
        }
    };

    // Half orbit: linear backward tail, then the exact forward iterates of the seed.
    let mut backward = Vec::new();
    let mut offset = eta.clone();
    loop {
        offset = &offset / lambda;
        let p = seed(&z_a, &dir, &offset);
        if (&p.theta - &z_a.theta).abs() < opts.tail_tol {
            break;
        }
        backward.push(p.theta);
    }
    backward.reverse();
    let mut half = backward;
    let mut point = seed(&z_a, &dir, &eta);
    half.push(point.theta.clone());
    for _ in 0..t_c {
        point = iterate(params, &point, 1);
        half.push(point.theta.clone());
    }
    let anchor = point;

    // half[i] has index i - (len - 1), ending at the anchor with index 0.
    let n = half.len() as i64 - 1;
    let mut points = half.clone();
    let mirrored = half.iter().rev().map(|theta| -theta);
    match line {
        SymmetryLine::R => points.extend(mirrored.skip(1)),
        SymmetryLine::FR => points.extend(mirrored.skip(2)),
    }
    Ok(SymmetricOrbit {
        line,
        eta,
        t_c,
        first_index: -n,
        points,
        anchor,
        residual,
        bisection_steps: steps,
    })
}

/// Action-difference sum `sum_t S(q^t, q^{t+1}) - S(p^t, p^{t+1})`.
#[derive(Clone, Debug)]
pub struct ActionDifference {
    pub value: Real,
    /// Indices `t` summed over.
    pub terms: usize,
    /// Largest paired term at the two ends of the summation range.
    pub edge_term: Real,
}

/// Pairs the two orbits index by index. `shift_q` re-anchors `q` as `q^{t+shift_q}`.
pub fn action_difference(
    params: &MapParams,
    q: &SymmetricOrbit,
    p: &SymmetricOrbit,
    shift_q: i64,
) -> ActionDifference {
    let lo = (q.first_index - shift_q).min(p.first_index) - 1;
    let hi = (q.last_index() - shift_q).max(p.last_index());
    let mut sum = params.precision().zero();
    let mut edge = params.precision().zero();
    for t in lo..=hi {
        let sq = gen_action(params, &q.theta(t + shift_q), &q.theta(t + shift_q + 1));
        let sp = gen_action(params, &p.theta(t), &p.theta(t + 1));
        let term = sq - sp;
        if t <= lo + 1 || t >= hi - 1 {
            edge = edge.max(&term.abs());
        }
        sum += term;
    }
    ActionDifference {
        value: sum,
        terms: (hi - lo + 1) as usize,
        edge_term: edge,
    }
}

/// Sign of the action sum, which records the lobe's orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
    Degenerate,
}

impl Orientation {
    fn of(value: &Real) -> Self {
        match value.signum() {
            1 => Orientation::Positive,
            -1 => Orientation::Negative,
            _ => Orientation::Degenerate,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Positive => "positive",
            Orientation::Negative => "negative",
            Orientation::Degenerate => "degenerate",
        }
    }
}

/// One `(delta, eps)` lobe-area result.
#[derive(Clone, Debug)]
pub struct LobeAreaRecord {
    pub delta: Real,
    pub eps: Real,
    pub nu: Real,
    /// `|A|`.
    pub area_numeric: Real,
    pub orientation: Orientation,
    /// `eps Gamma(nu)`.
    pub melnikov_area: Real,
    /// `eps Gamma_asymptotic(nu)`.
    pub asymptotic_area: Real,
    pub anti_integrable_area: Real,
    /// `|A - eps Gamma| / (eps Gamma)`, undefined at `eps = 0`.
    pub rel_err: Option<Real>,
    pub digits: u32,
    pub tail_terms: usize,
    /// Bound on the action omitted by cutting the tails.
    pub tail_bound: Real,
}

impl LobeAreaRecord {
    /// `A / eps`, undefined at `eps = 0`.
    pub fn area_over_eps(&self) -> Option<Real> {
        (!self.eps.is_zero()).then(|| &self.area_numeric / &self.eps)
    }
}

/// The two principal orbits for `params`, `q` on `Fix(R)` and `p` on `Fix(fR)`.
pub fn principal_orbits(
    params: &MapParams,
    opts: &FinderOptions,
) -> Result<(SymmetricOrbit, SymmetricOrbit)> {
    let q = find_symmetric_orbit(params, SymmetryLine::R, opts)?;
    let p = find_symmetric_orbit(params, SymmetryLine::FR, opts)?;
    Ok((q, p))
}

/// Measures the lobe area as an action difference and compares it with the
/// closed-form predictions.
pub fn lobe_area_numeric(params: &MapParams, opts: &FinderOptions) -> Result<LobeAreaRecord> {
    let precision = params.precision();
    let resolved = opts.resolve(precision);
    let (q, p) = principal_orbits(params, opts)?;
    let diff = action_difference(params, &q, &p, 0);

    let scale = 1 + diff.value.abs();
    if diff.edge_term > precision.pow10(-(precision.digits() as i32 / 2)) * &scale {
        return Err(Error::TailNonConvergence {
            detail: format!(
                "paired action term {} at the tail cut",
                diff.edge_term.to_decimal(6)
            ),
        });
    }

    // Each of the four cut tails deviates from its saddle by at most tail_tol
    // and contracts by nu per step; an action term is quadratic in the deviation.
    let fixed = FixedPoints::new(precision);
    let curvature = 2 + d2potential(params, &fixed.z_a.theta, true).abs();
    let nu = params.nu();
    let tail_bound = resolved.tail_tol.square() * curvature * 4 / (1 - nu.square());

    let melnikov = melnikov_area(params)?;
    let rel_err =
        (!params.eps().is_zero()).then(|| ((diff.value.abs() - &melnikov) / &melnikov).abs());
    Ok(LobeAreaRecord {
        delta: params.delta().clone(),
        eps: params.eps().clone(),
        nu: nu.clone(),
        area_numeric: diff.value.abs(),
        orientation: Orientation::of(&diff.value),
        melnikov_area: melnikov,
        asymptotic_area: params.eps() * gamma_asymptotic(nu)?,
        anti_integrable_area: anti_integrable_area(params)?,
        rel_err,
        digits: precision.digits(),
        tail_terms: diff.terms,
        tail_bound,
    })
}

//! Normalized complete elliptic integral `K` and the nome map `H`.
//!
//! `K(x) = (2/pi) * integral_0^{pi/2} dt / sqrt(1 - x sin^2 t)`, so `K(0) = 1`,
//! and `H(x) = exp(-pi K(1-x) / K(x))` is an increasing diffeomorphism of
//! `(0, 1)`. Both the modulus and its complement are stored so that arguments
//! near 1 keep full relative accuracy in `1 - x`.

use crate::error::{Error, Result};
use crate::real::Real;

const AGM_MAX_STEPS: usize = 256;
const BRACKET_MAX_HALVINGS: usize = 100_000;

/// A parameter `x` in `[0, 1)` together with `1 - x`.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticModulus {
    x: Real,
    complement: Real,
}

impl EllipticModulus {
    /// Accepts `0 <= x < 1`.
    pub fn new(x: Real) -> Result<Self> {
        if x.is_sign_negative() && !x.is_zero() || x >= 1 {
            return Err(Error::domain("EllipticModulus::new", &x, "[0, 1)"));
        }
        let complement = 1 - &x;
        Ok(EllipticModulus { x, complement })
    }

    /// Builds the modulus from `y = 1 - x`, accepting `0 < y <= 1`.
    pub fn from_complement(y: Real) -> Result<Self> {
        if y <= 0 || y > 1 {
            return Err(Error::domain(
                "EllipticModulus::from_complement",
                &y,
                "(0, 1]",
            ));
        }
        let x = 1 - &y;
        Ok(EllipticModulus { x, complement: y })
    }

    pub fn x(&self) -> &Real {
        &self.x
    }

    pub fn complement(&self) -> &Real {
        &self.complement
    }

    /// `x -> 1 - x`. Fails when `x = 0`, whose complement 1 is not admissible.
    pub fn reflect(&self) -> Result<Self> {
        if self.x.is_zero() {
            return Err(Error::domain("EllipticModulus::reflect", &self.x, "(0, 1)"));
        }
        Ok(EllipticModulus {
            x: self.complement.clone(),
            complement: self.x.clone(),
        })
    }
}

/// Arithmetic-geometric mean of two positive numbers.
pub fn agm(a: &Real, b: &Real) -> Real {
    let precision = a.precision().max(b.precision());
    let tol = precision.tolerance(-1);
    let (mut a, mut b) = (a.clone(), b.clone());
    for _ in 0..AGM_MAX_STEPS {
        if (&a - &b).abs() <= &tol * &a {
            break;
        }
        let next_a = (&a + &b) / 2;
        b = (&a * &b).sqrt();
        a = next_a;
    }
    // One more arithmetic mean settles the last quadratically small gap.
    (a + b) / 2
}

/// Normalized complete elliptic integral of the first kind, `K(0) = 1`.
///
/// `K(x) = 1 / AGM(1, sqrt(1 - x))`.
pub fn ellip_k(m: &EllipticModulus) -> Real {
    let one = m.complement.one_like();
    agm(&one, &m.complement.sqrt()).recip()
}

/// `H(x) = exp(-pi K(1-x) / K(x))` for `0 < x < 1`.
pub fn h_map(m: &EllipticModulus) -> Result<Real> {
    if m.x.is_zero() {
        return Err(Error::domain("h_map", &m.x, "(0, 1)"));
    }
    let k = ellip_k(m);
    let k_reflected = ellip_k(&m.reflect()?);
    Ok((-(m.x.pi_like() * k_reflected / k)).exp())
}

/// Inverse of [`h_map`] on `(0, 1)`.
///
/// Values of `nu` above `exp(-pi)` are mapped through the functional equation
/// `log H(x) log H(1-x) = pi^2`, so the search always runs on `x <= 1/2` and the
/// complement of a modulus near 1 is found with full relative precision.
pub fn h_inv(nu: &Real) -> Result<EllipticModulus> {
    if *nu <= 0 || *nu >= 1 {
        return Err(Error::domain("h_inv", nu, "(0, 1)"));
    }
    let pi = nu.pi_like();
    let symmetric = (-&pi).exp();
    if *nu <= symmetric {
        EllipticModulus::new(invert_lower_half(nu)?)
    } else {
        let dual = (pi.square() / nu.ln()).exp();
        EllipticModulus::from_complement(invert_lower_half(&dual)?)
    }
}

/// Solves `H(x) = nu` for `x` in `(0, 1/2]`, given `0 < nu <= exp(-pi)`.
///
/// Bisection on a bracket refined to relative width `10^(2 - digits)`.
/// `H(x) >= x/16` gives the upper end; the lower end is halved until it
/// brackets.
fn invert_lower_half(nu: &Real) -> Result<Real> {
    let precision = nu.precision();
    let eval = |x: &Real| -> Result<Real> { h_map(&EllipticModulus::new(x.clone())?) };

    let half = precision.ratio(1, 2);
    let mut hi = (nu * 16).min(&half);
    let mut lo = &hi / 2;
    let mut halvings = 0;
    while eval(&lo)? > *nu {
        lo /= 2;
        halvings += 1;
        if halvings > BRACKET_MAX_HALVINGS {
            return Err(Error::NonConvergence {
                what: "h_inv bracket",
                limit: BRACKET_MAX_HALVINGS,
            });
        }
    }
    let width = precision.tolerance(2);
    let limit = 4 * precision.bits() as usize + 64;
    for _ in 0..limit {
        if &hi - &lo <= &width * &hi {
            return Ok((lo + hi) / 2);
        }
        let mid = (&lo + &hi) / 2;
        if eval(&mid)? > *nu {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::NonConvergence {
        what: "h_inv bisection",
        limit,
    })
}

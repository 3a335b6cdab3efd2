//! Special functions behind the lobe-area formula.

pub mod dilog;
pub mod elliptic;
pub mod gamma;

pub use dilog::{dilog, li2};
pub use elliptic::{agm, ellip_k, h_inv, h_map, EllipticModulus};
pub use gamma::{
    area_asymptotic_delta, gamma0_series, gamma0_tsum, gamma_asymptotic, gamma_at_delta,
    gamma_elliptic, gamma_eval, gamma_series, gamma_series_terms, nu_from_delta,
    sqrt_delta_from_nu, GammaEval, SeriesSum, MAX_SERIES_TERMS,
};

//! Extended-precision computations for the perturbed Suris standard map:
//! the integrable map and its saddle connection, the Melnikov series and the
//! lobe-area function `Gamma(nu)`, and a symmetric-orbit finder that measures
//! the lobe area directly as an action difference.

pub mod cli;
pub mod connection;
pub mod error;
pub mod heteroclinic;
pub mod melnikov;
pub mod numerics;
pub mod real;
pub mod surismap;

pub use error::{Error, Result};
pub use real::{Precision, Real};

//! Exact q-Eulerian polynomials, hook-factorization bijections, and
//! exhaustive verification of the symmetric q-Eulerian identities.

pub mod cli;
pub mod error;
pub mod eulerian;
pub mod hookmaps;
pub mod notation;
pub mod permstats;
pub mod polyring;
pub mod qfunctions;
pub mod verifier;

pub use error::{Error, Result};

//! Exact computation and verification of Gauss congruences, q-Gauss
//! congruences and cyclic sieving phenomena over ranked semigroups.

pub mod arith;
pub mod error;
pub mod gaussseq;
pub mod objects;
pub mod qgauss;
pub mod qpoly;
pub mod report;
pub mod semigroup;
pub mod tubings;

pub use error::{Error, Result};

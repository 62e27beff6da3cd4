//! Clifford-Hermite and Clifford-Gegenbauer polynomials, Cauchy-Kowalevski
//! extensions and the Fueter transform in odd dimensions, with closed-form
//! generating functions and the machinery to cross-check them.

pub mod ckseries;
pub mod cli;
pub mod classical;
pub mod clifford;
pub mod corollary;
pub mod error;
pub mod fueter;
pub mod grid;
pub mod linalg;
pub mod mvpoly;
pub mod radial;
pub mod report;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};

//! Certified spectral bounds for the Neumann Laplacian on parallelograms.
//!
//! The library computes Neumann eigenvalues of the parallelogram spanned by
//! `(1, 0)` and `(c, d)` through a cosine-basis Galerkin discretization,
//! evaluates two closed-form upper bounds for the third eigenvalue (a
//! five-function Rayleigh-Ritz bound and Kröger's diameter bound), and
//! machine-checks the region decomposition and polynomial certificates that
//! together establish
//!
//! ```text
//! mu_3(Omega) |dOmega|^2 <= 36 pi^2,
//! ```
//!
//! with equality exactly for the rectangle whose sides have ratio 2:1.
//!
//! Non-rational claims are certified with outward-rounded interval
//! arithmetic; polynomial identities are checked in exact big-rational
//! arithmetic.

pub mod bounds_regions;
pub mod certificates;
pub mod error;
pub mod galerkin;
pub mod geometry;
pub mod numerics;
pub mod rayleigh_ritz;

pub use error::{Error, Result};

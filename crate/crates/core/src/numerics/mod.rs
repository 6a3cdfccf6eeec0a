//! Certified arithmetic kernel: outward-rounded intervals, exact rationals
//! and rational polynomials, interval polynomials, small and dense symmetric
//! eigensolvers, the first Bessel zero, and the derived constants used by
//! the bound machinery.

mod bessel;
mod constants;
mod interval;
mod interval_poly;
mod jacobi;
mod rational;
mod sym2;

pub use bessel::{bessel_j0_first_zero, j0_enclosure};
pub use constants::{constants, Constants};
pub use interval::{Interval, Tristate};
pub use interval_poly::IntervalPolynomial;
pub use jacobi::{dense_sym_eigen, SymmetricMatrix};
pub use rational::{rat, Rational, RationalPolynomial};
pub use sym2::SymMatrix2;

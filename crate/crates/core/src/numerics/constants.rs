//! Derived constant enclosures shared by the bound and certificate layers.
//!
//! pi is seeded from a 30-digit rational enclosure; every other quantity is
//! derived from pi and the Bessel-zero enclosure purely by interval
//! arithmetic, so there is a single source of truth for each constant.

use crate::error::{Error, Result};
use crate::numerics::bessel::bessel_j0_first_zero;
use crate::numerics::rational::{rational_to_interval, Rational};
use crate::numerics::Interval;
use num::BigInt;
use std::sync::OnceLock;

/// Enclosures of pi, the first J0 zero, and the two region constants
/// `c_star = 2 (2 j01 + pi)^2 / (9 pi^2) - 1` and
/// `r_star = sqrt(1 - c_star^2) - sqrt(1/4 - c_star^2)`.
#[derive(Debug, Clone)]
pub struct Constants {
    pub pi: Interval,
    pub j01: Interval,
    pub c_star: Interval,
    pub r_star: Interval,
}

impl Constants {
    /// Compute all enclosures from scratch.
    pub fn new() -> Constants {
        Constants::from_enclosures(pi_seed(), bessel_j0_first_zero())
            .expect("default constants are constructible")
    }

    /// Derive `c_star` and `r_star` from the given pi and j01 enclosures.
    pub fn from_enclosures(pi: Interval, j01: Interval) -> Result<Constants> {
        let two = Interval::from_int(2);
        let nine = Interval::from_int(9);
        let one = Interval::ONE;
        let quarter = Interval::point(0.25);

        let s = two * j01 + pi;
        let c_star = (two * s.square())
            .div(nine * pi.square())
            .map_err(|e| Error::ConstantDerivation(e.to_string()))?
            - one;
        let c2 = c_star.square();
        let under_a = one - c2;
        let under_b = quarter - c2;
        if under_a.lo() < 0.0 || under_b.lo() < 0.0 {
            return Err(Error::ConstantDerivation(
                "c_star enclosure too wide for r_star square roots".into(),
            ));
        }
        let r_star = under_a.sqrt().unwrap() - under_b.sqrt().unwrap();
        Ok(Constants {
            pi,
            j01,
            c_star,
            r_star,
        })
    }

    /// Re-derive everything from an artificially inflated pi enclosure.
    /// Used to check that enclosure-based certificates degrade to
    /// UNDETERMINED rather than flipping to FAIL when precision is lost.
    pub fn widened(&self, pi_pad: f64) -> Result<Constants> {
        Constants::from_enclosures(self.pi.inflated(pi_pad), self.j01)
    }

    pub fn pi_squared(&self) -> Interval {
        self.pi.square()
    }

    pub fn pi_fourth(&self) -> Interval {
        self.pi.square().square()
    }
}

impl Default for Constants {
    fn default() -> Constants {
        Constants::new()
    }
}

fn pi_seed() -> Interval {
    // 3.141592653589793238462643383279 < pi < 3.141592653589793238462643383280
    let scale = BigInt::from(10u8).pow(30);
    let lo_digits: BigInt = "3141592653589793238462643383279".parse().unwrap();
    let lo = Rational::new(lo_digits.clone(), scale.clone());
    let hi = Rational::new(lo_digits + 1, scale);
    let lo_enc = rational_to_interval(&lo);
    let hi_enc = rational_to_interval(&hi);
    Interval::new(lo_enc.lo(), hi_enc.hi())
}

/// Shared default constants, computed once.
pub fn constants() -> &'static Constants {
    static CONSTANTS: OnceLock<Constants> = OnceLock::new();
    CONSTANTS.get_or_init(Constants::new)
}

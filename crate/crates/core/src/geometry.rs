//! Parallelogram parametrization and scale-invariant target functional.
//!
//! The domain is the open parallelogram spanned by `(1, 0)` and `(c, d)`
//! with `c >= 0`, `d > 0`, `c^2 + d^2 <= 1`; any parallelogram can be
//! brought into this normal form by scaling, rigid motion and reflection,
//! under which `mu_3 |dOmega|^2` is invariant.

use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

// Tolerance for the unit-disk constraint so that polar conversions at
// r = 1 survive rounding of cos^2 + sin^2.
const DISK_SLACK: f64 = 1e-12;

/// Shear `c` and height `d` of the parallelogram `Omega_{c,d}` with
/// vertices (0,0), (c,d), (c+1,d), (1,0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParallelogramParams {
    c: f64,
    d: f64,
}

impl ParallelogramParams {
    pub fn new(c: f64, d: f64) -> Result<ParallelogramParams> {
        if !c.is_finite() || !d.is_finite() {
            return Err(Error::invalid("c and d must be finite"));
        }
        if c < 0.0 {
            return Err(Error::invalid(format!("shear c = {c} violates c >= 0")));
        }
        if d <= 0.0 {
            return Err(Error::invalid(format!("height d = {d} violates d > 0")));
        }
        if c * c + d * d > 1.0 + DISK_SLACK {
            return Err(Error::invalid(format!(
                "(c, d) = ({c}, {d}) violates c^2 + d^2 <= 1"
            )));
        }
        Ok(ParallelogramParams { c, d })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// Polar form `(r, theta)` with `c = r cos(theta)`, `d = r sin(theta)`.
    /// A rectangle (`c = 0`) maps to `theta = pi/2` exactly.
    pub fn to_polar(&self) -> PolarPoint {
        let r = f64::hypot(self.c, self.d).min(1.0);
        let theta = if self.c == 0.0 {
            FRAC_PI_2
        } else {
            f64::atan2(self.d, self.c)
        };
        PolarPoint { r, theta }
    }

    /// Perimeter `2 (1 + sqrt(c^2 + d^2))`, always in (2, 4].
    pub fn perimeter(&self) -> f64 {
        2.0 * (1.0 + f64::hypot(self.c, self.d))
    }

    /// Diameter `sqrt((1 + c)^2 + d^2)`, always in (1, 2].
    pub fn diameter(&self) -> f64 {
        f64::hypot(1.0 + self.c, self.d)
    }

    /// Shear map `Phi(x, y) = (x + y c / d, y)` from the rectangle
    /// `[0,1] x [0,d]` onto the closed parallelogram.
    pub fn transform_point(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        if !(0.0..=1.0).contains(&x) || !(0.0..=self.d).contains(&y) {
            return Err(Error::invalid(format!(
                "({x}, {y}) lies outside the rectangle [0,1] x [0,{}]",
                self.d
            )));
        }
        Ok((x + y * self.c / self.d, y))
    }

    /// The scale-invariant functional `mu3 * perimeter^2`.
    pub fn scale_invariant_target(&self, mu3: f64) -> Result<f64> {
        if mu3.is_nan() || mu3 < 0.0 {
            return Err(Error::invalid(format!("mu3 = {mu3} must be nonnegative")));
        }
        let p = self.perimeter();
        Ok(mu3 * p * p)
    }
}

/// Polar coordinates on the parameter quarter-disk:
/// `r in (0, 1]`, `theta in (0, pi/2]` radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarPoint {
    r: f64,
    theta: f64,
}

impl PolarPoint {
    pub fn new(r: f64, theta: f64) -> Result<PolarPoint> {
        if !r.is_finite() || !theta.is_finite() {
            return Err(Error::invalid("r and theta must be finite"));
        }
        if r <= 0.0 || r > 1.0 {
            return Err(Error::invalid(format!("radius r = {r} outside (0, 1]")));
        }
        if theta <= 0.0 || theta > FRAC_PI_2 {
            return Err(Error::invalid(format!(
                "angle theta = {theta} outside (0, pi/2]"
            )));
        }
        Ok(PolarPoint { r, theta })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Cartesian parameters. `theta = pi/2` produces `c = 0` through an
    /// explicit branch instead of relying on `cos(pi/2)` rounding.
    pub fn to_params(&self) -> ParallelogramParams {
        if self.theta == FRAC_PI_2 {
            ParallelogramParams { c: 0.0, d: self.r }
        } else {
            ParallelogramParams {
                c: self.r * self.theta.cos(),
                d: self.r * self.theta.sin(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn polar_to_cartesian_on_axis() {
        let p = PolarPoint::new(0.5, FRAC_PI_2).unwrap();
        let q = p.to_params();
        assert_eq!((q.c(), q.d()), (0.0, 0.5));
    }

    #[test]
    fn cartesian_to_polar() {
        let q = ParallelogramParams::new(0.3, 0.4).unwrap();
        let p = q.to_polar();
        assert!((p.r() - 0.5).abs() < 1e-15);
        assert!((p.theta() - f64::atan2(0.4, 0.3)).abs() < 1e-15);
    }

    #[test]
    fn round_trip_within_tolerance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let r = rng.gen_range(1e-3..1.0);
            let theta = rng.gen_range(1e-3..FRAC_PI_2);
            let p = PolarPoint::new(r, theta).unwrap();
            let back = p.to_params().to_polar();
            assert!((back.r() - r).abs() < 1e-14);
            assert!((back.theta() - theta).abs() < 1e-14);
        }
    }

    #[test]
    fn perimeter_examples() {
        assert_eq!(ParallelogramParams::new(0.0, 0.5).unwrap().perimeter(), 3.0);
        assert_eq!(ParallelogramParams::new(0.3, 0.4).unwrap().perimeter(), 3.0);
        assert_eq!(ParallelogramParams::new(0.0, 1.0).unwrap().perimeter(), 4.0);
    }

    #[test]
    fn diameter_examples() {
        let a = ParallelogramParams::new(0.0, 0.5).unwrap();
        assert!((a.diameter() - (5.0f64).sqrt() / 2.0).abs() < 1e-15);
        let b = ParallelogramParams::new(0.0, 1.0).unwrap();
        assert!((b.diameter() - std::f64::consts::SQRT_2).abs() < 1e-15);
        let c = ParallelogramParams::new(0.6, 0.8).unwrap();
        assert!((c.diameter() - (3.2f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn transform_maps_corners_to_vertices() {
        let q = ParallelogramParams::new(0.3, 0.4).unwrap();
        assert_eq!(q.transform_point(0.0, 0.0).unwrap(), (0.0, 0.0));
        assert_eq!(q.transform_point(1.0, 0.0).unwrap(), (1.0, 0.0));
        assert_eq!(q.transform_point(0.0, 0.4).unwrap(), (0.3, 0.4));
        assert_eq!(q.transform_point(1.0, 0.4).unwrap(), (1.3, 0.4));
        assert!(q.transform_point(1.2, 0.1).is_err());
        assert!(q.transform_point(0.5, 0.5).is_err());
    }

    #[test]
    fn target_examples() {
        let half = ParallelogramParams::new(0.0, 0.5).unwrap();
        let t = half.scale_invariant_target(4.0 * PI * PI).unwrap();
        assert!((t - 36.0 * PI * PI).abs() < 1e-10);

        let square = ParallelogramParams::new(0.0, 1.0).unwrap();
        let t = square.scale_invariant_target(PI * PI).unwrap();
        assert!((t - 16.0 * PI * PI).abs() < 1e-10);

        assert_eq!(half.scale_invariant_target(0.0).unwrap(), 0.0);
        assert!(half.scale_invariant_target(-1.0).is_err());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(ParallelogramParams::new(-0.1, 0.5).is_err());
        assert!(ParallelogramParams::new(0.1, 0.0).is_err());
        assert!(ParallelogramParams::new(0.9, 0.5).is_err());
        assert!(PolarPoint::new(0.0, 1.0).is_err());
        assert!(PolarPoint::new(0.5, 0.0).is_err());
        assert!(PolarPoint::new(0.5, 2.0).is_err());
        assert!(PolarPoint::new(1.1, 1.0).is_err());
    }

    #[test]
    fn range_invariants_hold_on_random_params() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let c: f64 = rng.gen_range(0.0..1.0);
            let d: f64 = rng.gen_range(0.001..1.0);
            if c * c + d * d > 1.0 {
                continue;
            }
            let q = ParallelogramParams::new(c, d).unwrap();
            assert!(q.perimeter() > 2.0 && q.perimeter() <= 4.0 + 1e-12);
            assert!(q.diameter() > 1.0 && q.diameter() <= 2.0 + 1e-12);
        }
    }
}

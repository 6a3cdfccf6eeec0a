//! 2x2 symmetric matrices with closed-form eigenvalues.

/// Symmetric 2x2 matrix `[[a11, a12], [a12, a22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMatrix2 {
    pub a11: f64,
    pub a12: f64,
    pub a22: f64,
}

impl SymMatrix2 {
    pub fn new(a11: f64, a12: f64, a22: f64) -> SymMatrix2 {
        SymMatrix2 { a11, a12, a22 }
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a12
    }

    /// Eigenvalues in ascending order, via the trace/determinant closed form
    /// with the discriminant evaluated as `hypot(a11 - a22, 2 a12)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * (self.a11 + self.a22);
        let half_gap = 0.5 * f64::hypot(self.a11 - self.a22, 2.0 * self.a12);
        (mean - half_gap, mean + half_gap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn diagonal_matrix() {
        let (l1, l2) = SymMatrix2::new(1.0, 0.0, 2.0).eigenvalues();
        assert_eq!((l1, l2), (1.0, 2.0));
    }

    #[test]
    fn off_diagonal_reflection() {
        let (l1, l2) = SymMatrix2::new(0.0, 1.0, 0.0).eigenvalues();
        assert_eq!((l1, l2), (-1.0, 1.0));
    }

    #[test]
    fn rectangle_l_block() {
        // L at (c,d) = (0, 1/2) is diag(pi^2, 4 pi^2)
        let (l1, l2) = SymMatrix2::new(PI * PI, 0.0, 4.0 * PI * PI).eigenvalues();
        assert!((l1 - PI * PI).abs() < 1e-12);
        assert!((l2 - 4.0 * PI * PI).abs() < 1e-12);
    }

    #[test]
    fn ordering_is_ascending() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let m = SymMatrix2::new(
                rng.gen_range(-1e3..1e3),
                rng.gen_range(-1e3..1e3),
                rng.gen_range(-1e3..1e3),
            );
            let (l1, l2) = m.eigenvalues();
            assert!(l1 <= l2);
            // trace and determinant reproduce to rounding accuracy
            assert!((l1 + l2 - m.trace()).abs() <= 1e-9);
        }
    }
}

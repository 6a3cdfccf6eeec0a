//! Five-function Rayleigh-Ritz machinery.
//!
//! The trial space spanned by the first five rectangle eigenfunctions turns
//! the transported form into a 5x5 matrix with block structure
//! `diag(0, L, M)`; consequently `mu_3 <= lambda_2(L + M) =
//! min(lambda_2(L), lambda_1(M))`, with both block eigenvalues available in
//! closed form.

use crate::galerkin::{form_matrix, GalerkinSpec};
use crate::geometry::ParallelogramParams;
use crate::numerics::{SymMatrix2, SymmetricMatrix};
use std::f64::consts::PI;

/// `L_{c,d} = [[pi^2 (1 + c^2/d^2), -8c/d^2], [-8c/d^2, pi^2/d^2]]`.
pub fn matrix_l(q: &ParallelogramParams) -> SymMatrix2 {
    let (c, d) = (q.c(), q.d());
    let d2 = d * d;
    SymMatrix2::new(PI * PI * (1.0 + c * c / d2), -8.0 * c / d2, PI * PI / d2)
}

/// `M_{c,d}` with diagonal `(pi^2 (1 + c^2/d^2) + pi^2/d^2,
/// 4 pi^2 (1 + c^2/d^2))` and off-diagonal `-32 sqrt(2) c / (3 d^2)`.
pub fn matrix_m(q: &ParallelogramParams) -> SymMatrix2 {
    let (c, d) = (q.c(), q.d());
    let d2 = d * d;
    let base = PI * PI * (1.0 + c * c / d2);
    SymMatrix2::new(
        base + PI * PI / d2,
        -32.0 * std::f64::consts::SQRT_2 * c / (3.0 * d2),
        4.0 * base,
    )
}

/// Closed-form `lambda_2(L_{c,d}) =
/// (pi^2 (c^2 + d^2 + 1) + sqrt(pi^4 (c^2 + d^2 - 1)^2 + 256 c^2)) / (2 d^2)`.
pub fn lambda2_l(q: &ParallelogramParams) -> f64 {
    let (c, d) = (q.c(), q.d());
    let (c2, d2) = (c * c, d * d);
    let pi2 = PI * PI;
    let disc = pi2 * pi2 * (c2 + d2 - 1.0) * (c2 + d2 - 1.0) + 256.0 * c2;
    (pi2 * (c2 + d2 + 1.0) + disc.sqrt()) / (2.0 * d2)
}

/// Closed-form `lambda_1(M_{c,d}) =
/// (3 pi^2 (5 c^2 + 5 d^2 + 1) - sqrt(9 pi^4 (3 c^2 + 3 d^2 - 1)^2 + 8192 c^2)) / (6 d^2)`.
pub fn lambda1_m(q: &ParallelogramParams) -> f64 {
    let (c, d) = (q.c(), q.d());
    let (c2, d2) = (c * c, d * d);
    let pi2 = PI * PI;
    let t = 3.0 * (c2 + d2) - 1.0;
    let disc = 9.0 * pi2 * pi2 * t * t + 8192.0 * c2;
    (3.0 * pi2 * (5.0 * (c2 + d2) + 1.0) - disc.sqrt()) / (6.0 * d2)
}

/// The Rayleigh-Ritz bound `mu_3(Omega_{c,d}) <= min(lambda_2(L), lambda_1(M))`.
pub fn mu3_upper_bound(q: &ParallelogramParams) -> f64 {
    lambda2_l(q).min(lambda1_m(q))
}

/// The assembled 5x5 trial matrix together with its blocks and the bound.
#[derive(Debug, Clone)]
pub struct TrialMatrixReport {
    pub l_block: SymMatrix2,
    pub m_block: SymMatrix2,
    pub a: SymmetricMatrix,
    pub lambda2_l: f64,
    pub lambda1_m: f64,
    pub bound: f64,
}

/// Mode pairs of the five trial functions, in order: constant, cos(pi x),
/// cos(pi y/d), cos(pi x) cos(pi y/d), cos(2 pi x).
pub const TRIAL_MODES: [(usize, usize); 5] = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)];

/// Assemble the 5x5 trial matrix by restricting the Galerkin stiffness
/// matrix to the five trial modes. Reusing the general entry generator makes
/// the closed-form entries of `L` and `M` cross-validation targets rather
/// than duplicated formulas.
pub fn assemble_trial_a(q: &ParallelogramParams) -> TrialMatrixReport {
    let spec = GalerkinSpec::new(2, 2).expect("static cutoff is valid");
    let full = form_matrix(q, &spec);
    let indices: Vec<usize> = TRIAL_MODES
        .iter()
        .map(|&(m, n)| spec.index_of(m, n))
        .collect();
    let a = full.submatrix(&indices);
    let l2 = lambda2_l(q);
    let m1 = lambda1_m(q);
    TrialMatrixReport {
        l_block: matrix_l(q),
        m_block: matrix_m(q),
        a,
        lambda2_l: l2,
        lambda1_m: m1,
        bound: l2.min(m1),
    }
}

impl TrialMatrixReport {
    /// Largest deviation of `a` from `diag(0, L, M)`.
    pub fn block_residual(&self) -> f64 {
        let mut expected = SymmetricMatrix::zeros(5);
        expected.set(1, 1, self.l_block.a11);
        expected.set(1, 2, self.l_block.a12);
        expected.set(2, 1, self.l_block.a12);
        expected.set(2, 2, self.l_block.a22);
        expected.set(3, 3, self.m_block.a11);
        expected.set(3, 4, self.m_block.a12);
        expected.set(4, 3, self.m_block.a12);
        expected.set(4, 4, self.m_block.a22);
        let mut worst = 0.0_f64;
        for i in 0..5 {
            for j in 0..5 {
                worst = worst.max((self.a.get(i, j) - expected.get(i, j)).abs());
            }
        }
        worst
    }
}

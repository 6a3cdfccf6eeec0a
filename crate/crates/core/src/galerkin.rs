//! Galerkin discretization of the transported Neumann form on the rectangle.
//!
//! The quadratic form
//! `h[u] = int (1 + c^2/d^2) |u_x|^2 + |u_y|^2 - (2c/d) u_x u_y`
//! over `[0,1] x [0,d]` is assembled in the orthonormal cosine tensor basis
//! `phi_{m,n}(x, y) = e_m(x) f_n(y)` with `e_0 = 1`, `e_m = sqrt(2) cos(m pi x)`
//! and `f_n` scaled likewise on `[0, d]`. All entries are closed-form
//! trigonometric integrals; the mass matrix is the identity, so eigenvalues
//! of the stiffness matrix are min-max upper bounds for the Neumann
//! eigenvalues of the sheared parallelogram.

use crate::error::{Error, Result};
use crate::geometry::ParallelogramParams;
use crate::numerics::{dense_sym_eigen, SymmetricMatrix};
use serde::Serialize;
use std::f64::consts::PI;

const MAX_BASIS: usize = 10_000;

/// Frequency cutoffs of the trial space: x-modes `0..=max_mx`,
/// y-modes `0..=max_my`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GalerkinSpec {
    max_mx: usize,
    max_my: usize,
}

impl GalerkinSpec {
    pub fn new(max_mx: usize, max_my: usize) -> Result<GalerkinSpec> {
        if max_mx < 2 || max_my < 2 {
            return Err(Error::invalid(format!(
                "cutoffs ({max_mx}, {max_my}) must both be >= 2"
            )));
        }
        let size = (max_mx + 1) * (max_my + 1);
        if size > MAX_BASIS {
            return Err(Error::invalid(format!(
                "basis size {size} exceeds the {MAX_BASIS} cap"
            )));
        }
        Ok(GalerkinSpec { max_mx, max_my })
    }

    /// Square cutoff `(n, n)`.
    pub fn square(n: usize) -> Result<GalerkinSpec> {
        GalerkinSpec::new(n, n)
    }

    pub fn max_mx(&self) -> usize {
        self.max_mx
    }

    pub fn max_my(&self) -> usize {
        self.max_my
    }

    pub fn basis_size(&self) -> usize {
        (self.max_mx + 1) * (self.max_my + 1)
    }

    /// Row-major (m-major) position of the mode pair `(m, n)`.
    pub fn index_of(&self, m: usize, n: usize) -> usize {
        debug_assert!(m <= self.max_mx && n <= self.max_my);
        m * (self.max_my + 1) + n
    }

    fn mode_of(&self, idx: usize) -> (usize, usize) {
        (idx / (self.max_my + 1), idx % (self.max_my + 1))
    }
}

/// Ascending Galerkin eigenvalue approximations with their truncation
/// metadata. Each value is an upper bound for the corresponding Neumann
/// eigenvalue of the parallelogram.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub spec: GalerkinSpec,
    pub params: ParallelogramParams,
}

/// `int_0^1 e_a'(x) e_b(x) dx` for the orthonormal cosine family on [0,1].
///
/// Nonzero only for `a >= 1` with `a + b` odd:
/// `-2 sqrt(2)` for `b = 0`, else `-4 a^2 / (a^2 - b^2)`.
fn cosine_coupling(a: usize, b: usize) -> f64 {
    if a == 0 || (a + b).is_multiple_of(2) {
        return 0.0;
    }
    if b == 0 {
        -2.0 * std::f64::consts::SQRT_2
    } else {
        let (a2, b2) = ((a * a) as f64, (b * b) as f64);
        -4.0 * a2 / (a2 - b2)
    }
}

/// Stiffness matrix of the transported form in the cosine tensor basis.
///
/// Diagonal: `(1 + c^2/d^2) pi^2 m^2 + pi^2 n^2 / d^2`. Off-diagonal
/// entries couple `(m, n)` to `(k, l)` only when both `m + k` and `n + l`
/// are odd and equal `-(c/d^2) (B(m,k) B(l,n) + B(k,m) B(n,l))` with `B`
/// the 1D coupling integral above. No numerical quadrature is involved.
pub fn form_matrix(q: &ParallelogramParams, s: &GalerkinSpec) -> SymmetricMatrix {
    let n_basis = s.basis_size();
    let (c, d) = (q.c(), q.d());
    let coeff_x = (1.0 + c * c / (d * d)) * PI * PI;
    let coeff_y = PI * PI / (d * d);
    let cross = -c / (d * d);

    let mut a = SymmetricMatrix::zeros(n_basis);
    for i in 0..n_basis {
        let (m, n) = s.mode_of(i);
        a.set(i, i, coeff_x * (m * m) as f64 + coeff_y * (n * n) as f64);
        if c == 0.0 {
            continue; // rectangle: the form is diagonal in this basis
        }
        for j in (i + 1)..n_basis {
            let (k, l) = s.mode_of(j);
            if (m + k) % 2 == 0 || (n + l) % 2 == 0 {
                continue;
            }
            let v = cross
                * (cosine_coupling(m, k) * cosine_coupling(l, n)
                    + cosine_coupling(k, m) * cosine_coupling(n, l));
            a.set(i, j, v);
            a.set(j, i, v);
        }
    }
    a
}

/// First `k` Galerkin eigenvalues of `Omega_{c,d}` at the given cutoff.
///
/// The stiffness matrix decouples exactly into the two parity classes of
/// `m + n` (couplings flip both parities), so each block is diagonalized
/// separately with the dense Jacobi solver and the spectra are merged.
pub fn neumann_spectrum(q: &ParallelogramParams, s: &GalerkinSpec, k: usize) -> Result<Spectrum> {
    let n_basis = s.basis_size();
    if k > n_basis {
        return Err(Error::TooManyEigenvalues {
            requested: k,
            available: n_basis,
        });
    }
    let a = form_matrix(q, s);
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for i in 0..n_basis {
        let (m, n) = s.mode_of(i);
        if (m + n) % 2 == 0 {
            even.push(i);
        } else {
            odd.push(i);
        }
    }
    let mut values = dense_sym_eigen(&a.submatrix(&even), even.len())?;
    values.extend(dense_sym_eigen(&a.submatrix(&odd), odd.len())?);
    values.sort_by(f64::total_cmp);
    values.truncate(k);
    Ok(Spectrum {
        values,
        spec: *s,
        params: *q,
    })
}

/// First `k` exact Neumann eigenvalues of the rectangle `[0,1] x [0,d]`:
/// the values `pi^2 m^2 + pi^2 n^2 / d^2` sorted with multiplicity.
pub fn rectangle_exact_eigenvalues(d: f64, k: usize) -> Result<Vec<f64>> {
    if !(d > 0.0 && d <= 1.0) {
        return Err(Error::invalid(format!(
            "rectangle height d = {d} outside (0, 1]"
        )));
    }
    // Modes up to k in each direction already contain the k smallest values.
    let mut values = Vec::with_capacity((k + 1) * (k + 1));
    for m in 0..=k {
        for n in 0..=k {
            values.push(PI * PI * (m * m) as f64 + PI * PI * (n * n) as f64 / (d * d));
        }
    }
    values.sort_by(f64::total_cmp);
    values.truncate(k);
    Ok(values)
}

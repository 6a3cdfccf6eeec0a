//! Dense symmetric eigensolver: cyclic Jacobi rotations with a fixed
//! row-major sweep order, so results are deterministic.

use crate::error::{Error, Result};

/// Dense square matrix stored row-major, used for symmetric spectral work.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> SymmetricMatrix {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: &[&[f64]]) -> SymmetricMatrix {
        let n = rows.len();
        let mut m = SymmetricMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn off_diagonal_frobenius(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j) * self.get(i, j);
                }
            }
        }
        s.sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Extract the principal submatrix on the given indices, in order.
    pub fn submatrix(&self, indices: &[usize]) -> SymmetricMatrix {
        let k = indices.len();
        let mut m = SymmetricMatrix::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    fn check_symmetric(&self) -> Result<()> {
        let scale = self.frobenius().max(1.0);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let dev = (self.get(i, j) - self.get(j, i)).abs();
                if dev > 1e-12 * scale {
                    return Err(Error::NotSymmetric {
                        i,
                        j,
                        deviation: dev,
                    });
                }
            }
        }
        Ok(())
    }
}

const MAX_SWEEPS: usize = 50;

/// First `k` eigenvalues, ascending, of a symmetric matrix.
///
/// The input must be symmetric to `1e-12` relative tolerance. The returned
/// values come from cyclic Jacobi sweeps run until the off-diagonal
/// Frobenius norm falls below `1e-14` times the Frobenius norm of the input
/// (well inside the documented `1e-12` residual contract).
pub fn dense_sym_eigen(m: &SymmetricMatrix, k: usize) -> Result<Vec<f64>> {
    let n = m.n();
    if k > n {
        return Err(Error::TooManyEigenvalues {
            requested: k,
            available: n,
        });
    }
    m.check_symmetric()?;
    let mut a = m.clone();
    let norm = a.frobenius();
    if norm == 0.0 {
        return Ok(vec![0.0; k]);
    }
    let target = 1e-14 * norm;
    let skip_eps = f64::EPSILON * norm / (n as f64);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if a.off_diagonal_frobenius() <= target {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                rotate(&mut a, p, q, skip_eps);
            }
        }
    }
    if !converged && a.off_diagonal_frobenius() > 1e-12 * norm {
        return Err(Error::EigenNoConvergence {
            residual: a.off_diagonal_frobenius(),
        });
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eigs.sort_by(|x, y| x.total_cmp(y));
    eigs.truncate(k);
    Ok(eigs)
}

#[inline]
fn rotate(a: &mut SymmetricMatrix, p: usize, q: usize, skip_eps: f64) {
    let apq = a.get(p, q);
    if apq.abs() <= skip_eps {
        // Annihilating negligible entries only spreads rounding noise.
        a.set(p, q, 0.0);
        a.set(q, p, 0.0);
        return;
    }
    let theta = 0.5 * (a.get(q, q) - a.get(p, p)) / apq;
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    let n = a.n();
    let h = t * apq;
    a.set(p, p, a.get(p, p) - h);
    a.set(q, q, a.get(q, q) + h);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);
    for j in 0..n {
        if j == p || j == q {
            continue;
        }
        let g = a.get(j, p);
        let h = a.get(j, q);
        let gp = g - s * (h + g * tau);
        let hq = h + s * (g - h * tau);
        a.set(j, p, gp);
        a.set(p, j, gp);
        a.set(j, q, hq);
        a.set(q, j, hq);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_spectrum() {
        let mut m = SymmetricMatrix::zeros(3);
        for i in 0..3 {
            m.set(i, i, 1.0);
        }
        assert_eq!(dense_sym_eigen(&m, 3).unwrap(), vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_is_sorted() {
        let mut m = SymmetricMatrix::zeros(3);
        m.set(0, 0, 3.0);
        m.set(1, 1, 1.0);
        m.set(2, 2, 2.0);
        assert_eq!(dense_sym_eigen(&m, 3).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn rejects_non_symmetric() {
        let mut m = SymmetricMatrix::zeros(2);
        m.set(0, 1, 1.0);
        m.set(1, 0, 2.0);
        assert!(matches!(
            dense_sym_eigen(&m, 2),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn rejects_oversized_request() {
        let m = SymmetricMatrix::zeros(2);
        assert!(matches!(
            dense_sym_eigen(&m, 3),
            Err(Error::TooManyEigenvalues { .. })
        ));
    }

    #[test]
    fn agrees_with_closed_form_on_2x2() {
        use crate::numerics::SymMatrix2;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let (a11, a12, a22) = (
                rng.gen_range(-1e3..1e3),
                rng.gen_range(-1e3..1e3),
                rng.gen_range(-1e3..1e3),
            );
            let mut m = SymmetricMatrix::zeros(2);
            m.set(0, 0, a11);
            m.set(0, 1, a12);
            m.set(1, 0, a12);
            m.set(1, 1, a22);
            let eig = dense_sym_eigen(&m, 2).unwrap();
            let (l1, l2) = SymMatrix2::new(a11, a12, a22).eigenvalues();
            assert!((eig[0] - l1).abs() < 1e-12, "{} vs {}", eig[0], l1);
            assert!((eig[1] - l2).abs() < 1e-12);
        }
    }

    #[test]
    fn output_is_non_decreasing() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let n = rng.gen_range(2..12);
            let mut m = SymmetricMatrix::zeros(n);
            for i in 0..n {
                for j in i..n {
                    let v = rng.gen_range(-10.0..10.0);
                    m.set(i, j, v);
                    m.set(j, i, v);
                }
            }
            let eig = dense_sym_eigen(&m, n).unwrap();
            assert!(eig.windows(2).all(|w| w[0] <= w[1]));
            // residual contract on the trace
            let trace: f64 = (0..n).map(|i| m.get(i, i)).sum();
            assert!((eig.iter().sum::<f64>() - trace).abs() <= 1e-10 * m.frobenius().max(1.0));
        }
    }
}

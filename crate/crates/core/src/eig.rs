//! Cyclic Jacobi diagonalization for complex Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal entry: the entry's phase is
//! absorbed first so the active 2x2 block becomes real symmetric, then the
//! classical Jacobi angle is applied. Off-diagonal mass decreases
//! monotonically, so the iteration converges for every Hermitian input.

use num_complex::Complex;
use num_traits::Float;

use crate::cplx::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::cast;

/// Relative Hermiticity tolerance on the input.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Convergence target for the off-diagonal Frobenius mass, relative to `||A||`.
pub const OFFDIAG_TOL: f64 = 1e-13;
/// Sweep cap.
pub const MAX_SWEEPS: usize = 60;

/// Eigenvalues (ascending) and a unitary `V` with `V^H A V` diagonal.
///
/// Columns of `V` are eigenvectors; each column's largest-magnitude entry is
/// normalized to be real positive.
pub fn hermitian_eig<T: Float>(a: &CMatrix<T>) -> Result<(Vec<T>, CMatrix<T>)> {
    assert_eq!(a.rows, a.cols, "hermitian_eig needs a square matrix");
    let n = a.rows;
    let scale = a.frobenius();
    let herm_tol = cast::<T>(HERMITIAN_TOL) * (T::one() + scale);
    let defect = a.hermitian_defect();
    if defect > herm_tol {
        return Err(Error::NotHermitian {
            defect: defect.to_f64().unwrap_or(f64::NAN),
            tol: herm_tol.to_f64().unwrap_or(f64::NAN),
        });
    }

    // symmetrize before iterating
    let ah = a.conj_transpose();
    let mut m = a.clone();
    let half = cast::<T>(0.5);
    for (x, y) in m.data.iter_mut().zip(&ah.data) {
        *x = (*x + *y).scale(half);
    }

    let mut v = CMatrix::<T>::identity(n);
    if scale == T::zero() || n < 2 {
        let evals = (0..n).map(|i| m[(i, i)].re).collect();
        return Ok(sort_and_normalize(evals, v));
    }

    let target = cast::<T>(OFFDIAG_TOL) * scale;
    let skip = T::epsilon() * scale;
    let mut achieved = off_diagonal_mass(&m);
    for _sweep in 0..MAX_SWEEPS {
        if achieved <= target {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r <= skip {
                    continue;
                }
                let phase = apq.unscale(r); // e^{i phi}
                let alpha = m[(p, p)].re;
                let gamma = m[(q, q)].re;
                let theta = (gamma - alpha) / (r + r);
                let t = if theta >= T::zero() {
                    T::one() / (theta + (theta * theta + T::one()).sqrt())
                } else {
                    -T::one() / (-theta + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                // column update: G has G_pp=c, G_pq=s, G_qp=-s*e^{-i phi}, G_qq=c*e^{-i phi}
                let ephase = phase.conj();
                for i in 0..n {
                    let aip = m[(i, p)];
                    let aiq = m[(i, q)] * ephase;
                    m[(i, p)] = aip.scale(c) - aiq.scale(s);
                    m[(i, q)] = aip.scale(s) + aiq.scale(c);
                }
                // row update with G^H
                for jj in 0..n {
                    let apj = m[(p, jj)];
                    let aqj = m[(q, jj)] * phase;
                    m[(p, jj)] = apj.scale(c) - aqj.scale(s);
                    m[(q, jj)] = apj.scale(s) + aqj.scale(c);
                }
                // force the annihilated pair and real diagonal
                m[(p, q)] = Complex::new(T::zero(), T::zero());
                m[(q, p)] = Complex::new(T::zero(), T::zero());
                m[(p, p)] = Complex::new(m[(p, p)].re, T::zero());
                m[(q, q)] = Complex::new(m[(q, q)].re, T::zero());

                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)] * ephase;
                    v[(i, p)] = vip.scale(c) - viq.scale(s);
                    v[(i, q)] = vip.scale(s) + viq.scale(c);
                }
            }
        }
        achieved = off_diagonal_mass(&m);
    }
    if achieved > target {
        return Err(Error::NoConvergence {
            offdiag: achieved.to_f64().unwrap_or(f64::NAN),
            sweeps: MAX_SWEEPS,
        });
    }

    let evals: Vec<T> = (0..n).map(|i| m[(i, i)].re).collect();
    Ok(sort_and_normalize(evals, v))
}

fn off_diagonal_mass<T: Float>(m: &CMatrix<T>) -> T {
    let n = m.rows;
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = acc + m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn sort_and_normalize<T: Float>(evals: Vec<T>, v: CMatrix<T>) -> (Vec<T>, CMatrix<T>) {
    let n = evals.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).unwrap());

    let mut sorted = Vec::with_capacity(n);
    let mut vs = CMatrix::<T>::zeros(n, n);
    for (newj, &oldj) in order.iter().enumerate() {
        sorted.push(evals[oldj]);
        // phase: largest-magnitude entry becomes real positive
        let mut best = 0usize;
        let mut bestmag = T::zero();
        for i in 0..n {
            let mag = v[(i, oldj)].norm();
            if mag > bestmag {
                bestmag = mag;
                best = i;
            }
        }
        let phase = if bestmag > T::zero() {
            v[(best, oldj)].unscale(bestmag).conj()
        } else {
            Complex::new(T::one(), T::zero())
        };
        for i in 0..n {
            vs[(i, newj)] = v[(i, oldj)] * phase;
        }
    }
    (sorted, vs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    /// Closed-form eigenvalues of a 2x2 Hermitian matrix.
    fn eig2_oracle(a: &CMatrix<f64>) -> (f64, f64) {
        let tr = a[(0, 0)].re + a[(1, 1)].re;
        let det = a[(0, 0)].re * a[(1, 1)].re - a[(0, 1)].norm_sqr();
        let d = (tr * tr - 4.0 * det).max(0.0).sqrt();
        ((tr - d) / 2.0, (tr + d) / 2.0)
    }

    fn check_decomposition(a: &CMatrix<f64>) {
        let (evals, v) = hermitian_eig(a).unwrap();
        let n = a.rows;
        // V^H A V = diag
        let d = v.conj_transpose().matmul(a).matmul(&v);
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { c(evals[i], 0.0) } else { c(0.0, 0.0) };
                assert!(
                    (d[(i, j)] - expect).norm() <= 1e-10 * (1.0 + a.frobenius()),
                    "residual at ({i},{j})"
                );
            }
        }
        // unitarity
        let vv = v.conj_transpose().matmul(&v);
        assert!(vv.sub(&CMatrix::identity(n)).frobenius() < 1e-10);
        // ascending
        for w in evals.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn diagonal_input() {
        let a = CMatrix::from_rows(&[vec![c(3.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]]);
        let (evals, _) = hermitian_eig(&a).unwrap();
        assert_eq!(evals, vec![1.0, 3.0]);
        check_decomposition(&a);
    }

    #[test]
    fn real_symmetric_swap() {
        let a = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]);
        let (evals, _) = hermitian_eig(&a).unwrap();
        assert!((evals[0] + 1.0).abs() < 1e-12 && (evals[1] - 1.0).abs() < 1e-12);
        check_decomposition(&a);
    }

    #[test]
    fn complex_offdiagonal() {
        let a = CMatrix::from_rows(&[vec![c(2.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(2.0, 0.0)]]);
        let (evals, _) = hermitian_eig(&a).unwrap();
        assert!((evals[0] - 1.0).abs() < 1e-12 && (evals[1] - 3.0).abs() < 1e-12);
        let (lo, hi) = eig2_oracle(&a);
        assert!((evals[0] - lo).abs() < 1e-12 && (evals[1] - hi).abs() < 1e-12);
        check_decomposition(&a);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(2.0, 0.0), c(0.0, 0.0)]]);
        assert!(matches!(hermitian_eig(&a), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn zero_matrix() {
        let a = CMatrix::<f64>::zeros(3, 3);
        let (evals, v) = hermitian_eig(&a).unwrap();
        assert_eq!(evals, vec![0.0; 3]);
        assert_eq!(v, CMatrix::identity(3));
    }

    #[test]
    fn random_5x5_matches_oracle_residual() {
        // deterministic pseudo-random Hermitian fill
        let n = 5;
        let mut a = CMatrix::<f64>::zeros(n, n);
        let mut x = 0.5f64;
        let mut next = || {
            x = (x * 16807.0 + 0.31).fract();
            x - 0.5
        };
        for i in 0..n {
            for j in i..n {
                if i == j {
                    a[(i, j)] = c(next(), 0.0);
                } else {
                    let z = c(next(), next());
                    a[(i, j)] = z;
                    a[(j, i)] = z.conj();
                }
            }
        }
        check_decomposition(&a);
    }
}

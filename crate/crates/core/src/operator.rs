//! Bicomplex-linear operators as dense matrices.
//!
//! An operator splits entrywise into two complex matrices acting on the
//! idempotent components. Self-adjoint operators have Hermitian components,
//! and the spectral decomposition diagonalizes each component with the Jacobi
//! solver, then joins the results back into a bicomplex unitary and a
//! hyperbolic diagonal.

use num_complex::Complex;
use num_traits::Float;

use crate::cplx::CMatrix;
use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::scalar::{cast, Bicomplex, Hyperbolic, IdempotentPair};
use crate::vector::BCVector;

/// Relative tolerance of the self-adjointness test.
pub const SELF_ADJOINT_TOL: f64 = 1e-12;
/// Residual bound factor of the spectral reconstruction.
pub const SPECTRAL_RESIDUAL_TOL: f64 = 1e-10;

/// A square matrix over the bicomplex ring, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct BCMatrix<T> {
    n: usize,
    entries: Vec<Bicomplex<T>>,
}

impl<T: Float> BCMatrix<T> {
    pub fn new(n: usize, entries: Vec<Bicomplex<T>>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: n * n,
            });
        }
        Ok(BCMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        BCMatrix {
            n,
            entries: vec![Bicomplex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Bicomplex::one();
        }
        m
    }

    /// Diagonal matrix with a constant bicomplex entry.
    pub fn diag_const(n: usize, w: Bicomplex<T>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = w;
        }
        m
    }

    pub fn diag(values: &[Bicomplex<T>]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n);
        for (i, w) in values.iter().enumerate() {
            m[(i, i)] = *w;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Bicomplex<T>] {
        &self.entries
    }

    /// Matrix-vector product over the bicomplex ring.
    pub fn apply(&self, x: &BCVector<T>) -> Result<BCVector<T>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: x.len(),
            });
        }
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut acc = Bicomplex::zero();
            for j in 0..self.n {
                acc += self[(i, j)] * x.entries[j];
            }
            out.push(acc);
        }
        Ok(BCVector::new(out))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                for j in 0..n {
                    m[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(m)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(BCMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(BCMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a - *b)
                .collect(),
        })
    }

    /// Entrywise star-conjugate of the transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(j, i)] = self[(i, j)].conj_star();
            }
        }
        m
    }

    /// Frobenius-style real norm: `sqrt((||T1||_F^2 + ||T2||_F^2)/2)`, which
    /// equals the root of the summed squared moduli of the entries.
    pub fn norm_real(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, w| {
                let m = w.modulus();
                acc + m * m
            })
            .sqrt()
    }

    /// `||T - T*||_X <= tol * (1 + ||T||_X)`.
    pub fn is_self_adjoint(&self) -> bool {
        self.self_adjoint_defect() <= cast::<T>(SELF_ADJOINT_TOL) * (T::one() + self.norm_real())
    }

    pub fn self_adjoint_defect(&self) -> T {
        self.sub(&self.adjoint()).expect("same dimension").norm_real()
    }

    /// Entrywise idempotent split into the two complex component matrices.
    pub fn split(&self) -> (CMatrix<T>, CMatrix<T>) {
        let n = self.n;
        let mut a1 = CMatrix::zeros(n, n);
        let mut a2 = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let p = self[(i, j)].idempotent_split();
                a1[(i, j)] = p.w1;
                a2[(i, j)] = p.w2;
            }
        }
        (a1, a2)
    }

    /// Entrywise idempotent join; the inverse of [`BCMatrix::split`].
    pub fn join(a1: &CMatrix<T>, a2: &CMatrix<T>) -> Result<Self> {
        if (a1.rows, a1.cols) != (a2.rows, a2.cols) || a1.rows != a1.cols {
            return Err(Error::DimensionMismatch {
                left: a1.rows,
                right: a2.rows,
            });
        }
        let n = a1.rows;
        let entries = a1
            .data
            .iter()
            .zip(&a2.data)
            .map(|(w1, w2)| IdempotentPair::new(*w1, *w2).join())
            .collect();
        Ok(BCMatrix { n, entries })
    }
}

impl<T> std::ops::Index<(usize, usize)> for BCMatrix<T> {
    type Output = Bicomplex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Bicomplex<T> {
        &self.entries[i * self.n + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for BCMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Bicomplex<T> {
        &mut self.entries[i * self.n + j]
    }
}

/// Result of diagonalizing a self-adjoint bicomplex operator:
/// `U T U* = diag(M)` with `U` bicomplex-unitary and `M` hyperbolic.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition<T> {
    pub u: BCMatrix<T>,
    /// Hyperbolic eigenvalues; the i-th pairs the i-th ascending eigenvalue
    /// of each component.
    pub eigenvalues: Vec<Hyperbolic<T>>,
    pub spectrum1: Vec<T>,
    pub spectrum2: Vec<T>,
    pub residual: T,
}

impl<T: Float> SpectralDecomposition<T> {
    /// The diagonal operator carrying the hyperbolic eigenvalues.
    pub fn diagonal(&self) -> BCMatrix<T> {
        BCMatrix::diag(
            &self
                .eigenvalues
                .iter()
                .map(|h| h.embed())
                .collect::<Vec<_>>(),
        )
    }
}

/// Diagonalizes a self-adjoint operator through its idempotent components.
pub fn spectral_decompose<T: Float>(t: &BCMatrix<T>) -> Result<SpectralDecomposition<T>> {
    if !t.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint {
            defect: t.self_adjoint_defect().to_f64().unwrap_or(f64::NAN),
            tol: (cast::<T>(SELF_ADJOINT_TOL) * (T::one() + t.norm_real()))
                .to_f64()
                .unwrap_or(f64::NAN),
        });
    }
    let (t1, t2) = t.split();
    let (ev1, v1) = hermitian_eig(&t1)?;
    let (ev2, v2) = hermitian_eig(&t2)?;
    let u = BCMatrix::join(&v1.conj_transpose(), &v2.conj_transpose())?;

    let eigenvalues: Vec<Hyperbolic<T>> = ev1
        .iter()
        .zip(&ev2)
        .map(|(&a1, &a2)| Hyperbolic::from_e_coords(a1, a2))
        .collect();

    // residual of U T U* - diag(M), computed per component
    let r1 = reconstruction_defect(&t1, &v1, &ev1);
    let r2 = reconstruction_defect(&t2, &v2, &ev2);
    let residual = ((r1 * r1 + r2 * r2) * cast::<T>(0.5)).sqrt();

    Ok(SpectralDecomposition {
        u,
        eigenvalues,
        spectrum1: ev1,
        spectrum2: ev2,
        residual,
    })
}

fn reconstruction_defect<T: Float>(a: &CMatrix<T>, v: &CMatrix<T>, evals: &[T]) -> T {
    let mut d = v.conj_transpose().matmul(a).matmul(v);
    for (i, &lambda) in evals.iter().enumerate() {
        d[(i, i)] = d[(i, i)] - Complex::new(lambda, T::zero());
    }
    d.frobenius()
}

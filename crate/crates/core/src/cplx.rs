//! Internal helpers for dense complex vectors and matrices.

use num_complex::Complex;
use num_traits::Float;

/// `sum_i a_i * conj(b_i)` — linear in the first slot.
pub fn cinner<T: Float>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (x, y)| {
            acc + *x * y.conj()
        })
}

pub fn cnorm<T: Float>(a: &[Complex<T>]) -> T {
    a.iter()
        .fold(T::zero(), |acc, x| acc + x.norm_sqr())
        .sqrt()
}

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex<T>>,
}

impl<T: Float> CMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        CMatrix { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut m = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    m[(i, j)] = m[(i, j)] + a * other[(k, j)];
                }
            }
        }
        m
    }

    pub fn matvec(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                        acc + *a * *b
                    })
            })
            .collect()
    }

    pub fn frobenius(&self) -> T {
        cnorm(&self.data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    /// Hermiticity defect `max |A - A^H|` entrywise-accumulated in Frobenius norm.
    pub fn hermitian_defect(&self) -> T {
        self.sub(&self.conj_transpose()).frobenius()
    }

    /// Spectral-norm estimate by power iteration on `A^H A`.
    pub fn spectral_norm_estimate(&self, iters: usize) -> T {
        if self.rows == 0 || self.cols == 0 {
            return T::zero();
        }
        let ah = self.conj_transpose();
        let mut v: Vec<Complex<T>> = (0..self.cols)
            .map(|i| {
                Complex::new(
                    T::one() + T::from(i % 3).unwrap(),
                    T::from((i * 7 % 5) as f64 * 0.25).unwrap(),
                )
            })
            .collect();
        let mut sigma = T::zero();
        for _ in 0..iters {
            let n = cnorm(&v);
            if n == T::zero() {
                return T::zero();
            }
            for x in v.iter_mut() {
                *x = x.unscale(n);
            }
            let av = self.matvec(&v);
            sigma = cnorm(&av);
            v = ah.matvec(&av);
        }
        sigma
    }
}

impl<T> std::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

/// Modified Gram-Schmidt with one reorthogonalization pass.
///
/// Columns whose residual drops below `tol * scale` are dropped, where `scale`
/// is the largest input column norm. Returns the orthonormal basis.
pub fn gram_schmidt<T: Float>(vecs: &[Vec<Complex<T>>], tol: T) -> Vec<Vec<Complex<T>>> {
    let scale = vecs
        .iter()
        .map(|v| cnorm(v))
        .fold(T::zero(), |a, b| if b > a { b } else { a });
    if scale == T::zero() {
        return Vec::new();
    }
    let mut basis: Vec<Vec<Complex<T>>> = Vec::new();
    for v in vecs {
        let mut w = v.clone();
        for _pass in 0..2 {
            for b in &basis {
                let c = cinner(&w, b);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi = *wi - c * *bi;
                }
            }
        }
        let n = cnorm(&w);
        if n > tol * scale {
            for x in w.iter_mut() {
                *x = x.unscale(n);
            }
            basis.push(w);
        }
    }
    basis
}

/// Numerical rank via Gram-Schmidt with relative tolerance `tol`.
pub fn rank<T: Float>(vecs: &[Vec<Complex<T>>], tol: T) -> usize {
    gram_schmidt(vecs, tol).len()
}

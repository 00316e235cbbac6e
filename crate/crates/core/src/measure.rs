//! Atomic spectral measures and the multiplication-operator normal form.
//!
//! A cyclic vector of a self-adjoint operator induces one atomic probability
//! measure per idempotent component: atoms at the component eigenvalues,
//! weights given by squared eigenvector overlaps. The induced unitary carries
//! the component space onto L^2 of that measure, where the operator acts as
//! multiplication by the atom.
//!
//! Alongside, a midpoint-quadrature discretization of bicomplex L^2[a,b]
//! realizes the function-space formulas at a fixed grid.

use num_complex::Complex;
use num_traits::Float;

use crate::cplx::CMatrix;
use crate::cyclic::is_cyclic;
use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::operator::{BCMatrix, SELF_ADJOINT_TOL};
use crate::scalar::{cast, Bicomplex};
use crate::vector::BCVector;

/// Weights below this are treated as vanishing overlaps (non-cyclic input).
pub const WEIGHT_TOL: f64 = 1e-12;
/// Default quadrature resolution.
pub const DEFAULT_GRID: usize = 256;

/// Per-component atomic probability measures.
#[derive(Clone, Debug)]
pub struct AtomicMeasurePair<T> {
    pub atoms1: Vec<T>,
    pub weights1: Vec<T>,
    pub atoms2: Vec<T>,
    pub weights2: Vec<T>,
}

impl<T: Float> AtomicMeasurePair<T> {
    pub fn weight_sums(&self) -> (T, T) {
        (
            self.weights1.iter().fold(T::zero(), |a, &b| a + b),
            self.weights2.iter().fold(T::zero(), |a, &b| a + b),
        )
    }

    /// `sum_i w_i * atom_i^m` for one component.
    pub fn moment(&self, component: u8, m: u32) -> T {
        let (atoms, weights) = if component == 1 {
            (&self.atoms1, &self.weights1)
        } else {
            (&self.atoms2, &self.weights2)
        };
        atoms
            .iter()
            .zip(weights)
            .fold(T::zero(), |acc, (&a, &w)| acc + w * a.powi(m as i32))
    }
}

/// Bicomplex-valued function sampled on a uniform midpoint grid over `[a, b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BCFunctionSamples<T> {
    pub a: T,
    pub b: T,
    pub values: Vec<Bicomplex<T>>,
}

impl<T: Float> BCFunctionSamples<T> {
    pub fn from_values(a: T, b: T, values: Vec<Bicomplex<T>>) -> Self {
        BCFunctionSamples { a, b, values }
    }

    pub fn from_fn(a: T, b: T, n: usize, f: impl Fn(T) -> Bicomplex<T>) -> Self {
        let values = Self::grid_points(a, b, n).into_iter().map(f).collect();
        BCFunctionSamples { a, b, values }
    }

    pub fn grid_points(a: T, b: T, n: usize) -> Vec<T> {
        let h = (b - a) / cast::<T>(n as f64);
        (0..n)
            .map(|q| a + h * (cast::<T>(q as f64) + cast::<T>(0.5)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Quadrature weight `(b - a) / N`.
    pub fn weight(&self) -> T {
        (self.b - self.a) / cast::<T>(self.len() as f64)
    }

    fn same_grid(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.len() == other.len()
    }

    /// Samplewise idempotent split into the component functions `(u, v)`.
    pub fn decompose(&self) -> (Vec<Complex<T>>, Vec<Complex<T>>) {
        let mut u = Vec::with_capacity(self.len());
        let mut v = Vec::with_capacity(self.len());
        for w in &self.values {
            let p = w.idempotent_split();
            u.push(p.w1);
            v.push(p.w2);
        }
        (u, v)
    }

    /// `sum_q weight * f(t_q) * conj_star(g(t_q))`.
    pub fn l2_inner(&self, other: &Self) -> Result<Bicomplex<T>> {
        if !self.same_grid(other) {
            return Err(Error::GridMismatch);
        }
        let mut acc = Bicomplex::zero();
        for (f, g) in self.values.iter().zip(&other.values) {
            acc += *f * g.conj_star();
        }
        Ok(acc.scale(self.weight()))
    }

    /// `||f||_X = sqrt(integral of |f|^2)`, the quadruple-integrand form.
    pub fn norm_real(&self) -> T {
        let s = self.values.iter().fold(T::zero(), |acc, w| {
            let m = w.modulus();
            acc + m * m
        });
        (s * self.weight()).sqrt()
    }
}

/// A diagonal multiplication operator on function samples.
#[derive(Clone, Debug)]
pub struct MultiplicationOperator<T> {
    pub symbol: BCFunctionSamples<T>,
}

impl<T: Float> MultiplicationOperator<T> {
    pub fn new(symbol: BCFunctionSamples<T>) -> Self {
        MultiplicationOperator { symbol }
    }

    /// The canonical operator: multiplication by `t` on `[a, b]`.
    pub fn canonical(a: T, b: T, n: usize) -> Self {
        MultiplicationOperator {
            symbol: BCFunctionSamples::from_fn(a, b, n, Bicomplex::from_real),
        }
    }

    pub fn apply(&self, f: &BCFunctionSamples<T>) -> Result<BCFunctionSamples<T>> {
        if !self.symbol.same_grid(f) {
            return Err(Error::GridMismatch);
        }
        Ok(BCFunctionSamples {
            a: f.a,
            b: f.b,
            values: self
                .symbol
                .values
                .iter()
                .zip(&f.values)
                .map(|(s, v)| *s * *v)
                .collect(),
        })
    }

    /// Multiplication by the star-conjugate symbol.
    pub fn adjoint(&self) -> Self {
        MultiplicationOperator {
            symbol: BCFunctionSamples {
                a: self.symbol.a,
                b: self.symbol.b,
                values: self.symbol.values.iter().map(|w| w.conj_star()).collect(),
            },
        }
    }

    /// Self-adjoint iff the symbol is star-fixed (hyperbolic-valued) at every
    /// sample.
    pub fn is_self_adjoint(&self) -> bool {
        let tol = cast::<T>(SELF_ADJOINT_TOL);
        self.symbol.values.iter().all(|w| {
            (*w - w.conj_star()).modulus() <= tol * (T::one() + w.modulus())
        })
    }
}

/// The spectral measure of a cyclic vector: atoms at the component
/// eigenvalues, weights `|<u_i, w_c>|^2`.
pub fn cyclic_measure<T: Float>(
    t: &BCMatrix<T>,
    w: &BCVector<T>,
) -> Result<AtomicMeasurePair<T>> {
    Ok(unitary_to_l2(t, w)?.measure)
}

/// The explicit unitary onto L^2 of the spectral measure, per component.
#[derive(Clone, Debug)]
pub struct L2Representation<T> {
    /// Row `i` of `u_c` evaluates a component vector at atom `lambda_i`.
    pub u1: CMatrix<T>,
    pub u2: CMatrix<T>,
    pub measure: AtomicMeasurePair<T>,
    /// The normalized cyclic vector actually used.
    pub cyclic: BCVector<T>,
}

impl<T: Float> L2Representation<T> {
    /// L^2(mu_c) inner product of two functions on the atoms.
    pub fn l2_inner_atoms(&self, component: u8, f: &[Complex<T>], g: &[Complex<T>]) -> Complex<T> {
        let weights = if component == 1 {
            &self.measure.weights1
        } else {
            &self.measure.weights2
        };
        f.iter()
            .zip(g)
            .zip(weights)
            .fold(Complex::new(T::zero(), T::zero()), |acc, ((x, y), &w)| {
                acc + (*x * y.conj()).scale(w)
            })
    }
}

/// Builds the measure and the component unitaries for a cyclic vector.
///
/// The candidate vector is normalized per component first; a component that
/// cannot be normalized is rejected, mirroring the non-null-vector
/// requirement of the construction.
pub fn unitary_to_l2<T: Float>(t: &BCMatrix<T>, w: &BCVector<T>) -> Result<L2Representation<T>> {
    if !t.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint {
            defect: t.self_adjoint_defect().to_f64().unwrap_or(f64::NAN),
            tol: (cast::<T>(SELF_ADJOINT_TOL) * (T::one() + t.norm_real()))
                .to_f64()
                .unwrap_or(f64::NAN),
        });
    }
    let n = t.dim();
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: w.len(),
        });
    }
    let (mut w1, mut w2) = {
        let (c1, c2) = w.split();
        (c1.entries, c2.entries)
    };
    for (component, wc) in [(1u8, &mut w1), (2u8, &mut w2)] {
        let nc = crate::cplx::cnorm(wc);
        if nc <= cast::<T>(WEIGHT_TOL) {
            return Err(Error::ZeroComponent { component });
        }
        for x in wc.iter_mut() {
            *x = x.unscale(nc);
        }
    }
    let wn = BCVector::join(&w1, &w2)?;
    let report = is_cyclic(t, &wn)?;
    if !report.cyclic {
        return Err(Error::NotCyclic {
            rank1: report.rank1,
            rank2: report.rank2,
            n,
        });
    }

    let (t1, t2) = t.split();
    let (ev1, v1) = hermitian_eig(&t1)?;
    let (ev2, v2) = hermitian_eig(&t2)?;

    let build = |evals: &[T], v: &CMatrix<T>, wc: &[Complex<T>]| -> Result<(Vec<T>, Vec<T>, CMatrix<T>)> {
        let tol = cast::<T>(WEIGHT_TOL);
        let mut weights = Vec::with_capacity(n);
        let mut u = CMatrix::zeros(n, n);
        for i in 0..n {
            // overlap d_i = u_i^H w_c
            let mut d = Complex::new(T::zero(), T::zero());
            for jj in 0..n {
                d = d + v[(jj, i)].conj() * wc[jj];
            }
            let weight = d.norm_sqr();
            if weight < tol {
                // vanishing overlap: the vector misses this eigendirection
                return Err(Error::NotCyclic {
                    rank1: report.rank1,
                    rank2: report.rank2,
                    n,
                });
            }
            weights.push(weight);
            // row i of U: (U h)(lambda_i) = <u_i, h> / <u_i, w_c>
            for jj in 0..n {
                u[(i, jj)] = v[(jj, i)].conj() / d;
            }
        }
        Ok((evals.to_vec(), weights, u))
    };

    let (atoms1, weights1, u1) = build(&ev1, &v1, &w1)?;
    let (atoms2, weights2, u2) = build(&ev2, &v2, &w2)?;

    Ok(L2Representation {
        u1,
        u2,
        measure: AtomicMeasurePair {
            atoms1,
            weights1,
            atoms2,
            weights2,
        },
        cyclic: wn,
    })
}

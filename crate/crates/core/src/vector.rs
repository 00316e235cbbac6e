//! Finite-dimensional bicomplex-module vectors.
//!
//! A `BCVector` lives in the free module over the bicomplex ring. Its two
//! idempotent components are ordinary complex vectors; the bicomplex inner
//! product, the hyperbolic norm and the real norm are all computed through
//! that split.

use num_complex::Complex;
use num_traits::Float;

use crate::cplx::{cinner, cnorm, gram_schmidt};
use crate::error::{Error, Result};
use crate::scalar::{cast, Bicomplex, Hyperbolic, IdempotentPair};

/// Tolerance for dropping dependent vectors during componentwise
/// orthonormalization, relative to the leading Gram-Schmidt norm.
pub const ORTHONORMALIZE_TOL: f64 = 1e-10;

/// Which idempotent component a complex vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    One,
    Two,
}

/// A vector over the bicomplex ring.
#[derive(Clone, Debug, PartialEq)]
pub struct BCVector<T> {
    pub entries: Vec<Bicomplex<T>>,
}

/// One idempotent component of a `BCVector`: a complex vector with its tag.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentVector<T> {
    pub entries: Vec<Complex<T>>,
    pub component: Component,
}

impl<T: Float> BCVector<T> {
    pub fn new(entries: Vec<Bicomplex<T>>) -> Self {
        BCVector { entries }
    }

    pub fn zeros(n: usize) -> Self {
        BCVector {
            entries: vec![Bicomplex::zero(); n],
        }
    }

    /// Standard basis vector `e_i` of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.entries[i] = Bicomplex::one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entrywise idempotent split into the two component vectors.
    pub fn split(&self) -> (ComponentVector<T>, ComponentVector<T>) {
        let mut c1 = Vec::with_capacity(self.len());
        let mut c2 = Vec::with_capacity(self.len());
        for w in &self.entries {
            let p = w.idempotent_split();
            c1.push(p.w1);
            c2.push(p.w2);
        }
        (
            ComponentVector {
                entries: c1,
                component: Component::One,
            },
            ComponentVector {
                entries: c2,
                component: Component::Two,
            },
        )
    }

    /// Entrywise idempotent join; the inverse of [`BCVector::split`].
    pub fn join(c1: &[Complex<T>], c2: &[Complex<T>]) -> Result<Self> {
        if c1.len() != c2.len() {
            return Err(Error::DimensionMismatch {
                left: c1.len(),
                right: c2.len(),
            });
        }
        Ok(BCVector {
            entries: c1
                .iter()
                .zip(c2)
                .map(|(w1, w2)| IdempotentPair::new(*w1, *w2).join())
                .collect(),
        })
    }

    /// Bicomplex inner product `sum_i x_i * conj_star(y_i)`, linear in the
    /// first slot, star-Hermitian in the second.
    pub fn inner(&self, other: &Self) -> Result<Bicomplex<T>> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let mut acc = Bicomplex::zero();
        for (x, y) in self.entries.iter().zip(&other.entries) {
            acc += *x * y.conj_star();
        }
        Ok(acc)
    }

    /// Hyperbolic norm `e1*||x1|| + e2*||x2||`.
    pub fn norm_hyperbolic(&self) -> Hyperbolic<T> {
        let (c1, c2) = self.split();
        Hyperbolic::from_e_coords(cnorm(&c1.entries), cnorm(&c2.entries))
    }

    /// Real norm `sqrt((||x1||^2 + ||x2||^2) / 2)`.
    pub fn norm_real(&self) -> T {
        let (c1, c2) = self.split();
        let n1 = cnorm(&c1.entries);
        let n2 = cnorm(&c2.entries);
        ((n1 * n1 + n2 * n2) * cast::<T>(0.5)).sqrt()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(BCVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-Bicomplex::one()))
    }

    /// Scalar multiple `alpha * x` over the bicomplex ring.
    pub fn scale(&self, alpha: Bicomplex<T>) -> Self {
        BCVector {
            entries: self.entries.iter().map(|x| alpha * *x).collect(),
        }
    }
}

/// The pair of orthonormal component bases produced by
/// [`orthonormalize_componentwise`]. The two cardinalities may differ when a
/// component family is degenerate.
#[derive(Clone, Debug)]
pub struct ComponentBases<T> {
    pub basis1: Vec<Vec<Complex<T>>>,
    pub basis2: Vec<Vec<Complex<T>>>,
}

/// Runs Gram-Schmidt independently in each idempotent component.
///
/// Component vectors that collapse below the rank tolerance are dropped, so
/// the two bases may have different sizes.
pub fn orthonormalize_componentwise<T: Float>(vs: &[BCVector<T>]) -> ComponentBases<T> {
    let tol = cast::<T>(ORTHONORMALIZE_TOL);
    let c1: Vec<Vec<Complex<T>>> = vs.iter().map(|v| v.split().0.entries).collect();
    let c2: Vec<Vec<Complex<T>>> = vs.iter().map(|v| v.split().1.entries).collect();
    ComponentBases {
        basis1: gram_schmidt(&c1, tol),
        basis2: gram_schmidt(&c2, tol),
    }
}

impl<T: Float> ComponentVector<T> {
    /// Standard complex inner product of the component space, linear in the
    /// first slot.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        cinner(&self.entries, &other.entries)
    }

    pub fn norm(&self) -> T {
        cnorm(&self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type B = Bicomplex<f64>;

    fn v(entries: Vec<B>) -> BCVector<f64> {
        BCVector::new(entries)
    }

    #[test]
    fn split_known_values() {
        let x = v(vec![B::one(), B::unit_k()]);
        let (c1, c2) = x.split();
        assert_eq!(c1.entries, vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)]);
        assert_eq!(c2.entries, vec![Complex::new(1.0, 0.0), Complex::new(-1.0, 0.0)]);

        let x = v(vec![B::unit_i() + B::unit_j(), B::zero()]);
        let (c1, c2) = x.split();
        assert!(c1.entries.iter().all(|z| z.norm() < 1e-15));
        assert!((c2.entries[0] - Complex::new(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn split_join_round_trip() {
        let x = v(vec![B::new(0.1, 0.2, 0.3, 0.4), B::new(-1.0, 2.0, -3.0, 4.0)]);
        let (c1, c2) = x.split();
        let back = BCVector::join(&c1.entries, &c2.entries).unwrap();
        for (a, b) in x.entries.iter().zip(&back.entries) {
            assert!((*a - *b).modulus() < 1e-15);
        }
    }

    #[test]
    fn join_length_mismatch() {
        let err = BCVector::<f64>::join(&[Complex::new(1.0, 0.0)], &[]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 1, right: 0 });
    }

    #[test]
    fn inner_of_basis_vector_is_one() {
        let x = BCVector::<f64>::basis(3, 1);
        let r = x.inner(&x).unwrap();
        assert!((r - B::one()).modulus() < 1e-15);
    }

    #[test]
    fn inner_of_e1_vector_is_e1() {
        let x = v(vec![B::e1()]);
        let r = x.inner(&x).unwrap();
        assert!((r - B::e1()).modulus() < 1e-15);
        // a hyperbolic zero divisor, still in D+
        assert!(r.as_hyperbolic(1e-12).unwrap().is_nonneg());
        assert!(r.is_zero_divisor());
    }

    #[test]
    fn inner_splits_into_component_inner_products() {
        let x = v(vec![B::new(1.0, 2.0, 0.5, -1.0), B::new(0.0, 1.0, 1.0, 0.0)]);
        let y = v(vec![B::new(-0.5, 0.3, 2.0, 1.0), B::new(1.0, 0.0, 0.0, 1.0)]);
        let p = x.inner(&y).unwrap().idempotent_split();
        let (x1, x2) = x.split();
        let (y1, y2) = y.split();
        assert!((p.w1 - x1.inner(&y1)).norm() < 1e-12);
        assert!((p.w2 - x2.inner(&y2)).norm() < 1e-12);
    }

    #[test]
    fn hyperbolic_norm_values() {
        assert_eq!(BCVector::<f64>::zeros(3).norm_hyperbolic(), Hyperbolic::zero());

        let x = v(vec![B::e1()]);
        let (a1, a2) = x.norm_hyperbolic().e_coords();
        assert!((a1 - 1.0).abs() < 1e-15 && a2.abs() < 1e-15);

        let x = v(vec![B::one(), B::unit_k()]);
        let (a1, a2) = x.norm_hyperbolic().e_coords();
        assert!((a1 - 2f64.sqrt()).abs() < 1e-15);
        assert!((a2 - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn real_norm_values_and_relation() {
        assert!((v(vec![B::one()]).norm_real() - 1.0).abs() < 1e-15);
        assert!((v(vec![B::e1()]).norm_real() - 1.0 / 2f64.sqrt()).abs() < 1e-15);

        let x = v(vec![B::new(0.3, -0.7, 1.1, 0.2), B::new(2.0, 0.1, -0.4, 0.9)]);
        let lhs = x.norm_hyperbolic().modulus();
        assert!((lhs - x.norm_real()).abs() <= 1e-12 * (1.0 + x.norm_real()));
    }

    #[test]
    fn nonzero_vector_with_zero_divisor_norm() {
        let x = v(vec![B::e1()]);
        let (_, a2) = x.norm_hyperbolic().e_coords();
        assert_eq!(a2, 0.0);
        // inner(x,x) = 0 still implies x = 0
        let z = BCVector::<f64>::zeros(2);
        assert!((z.inner(&z).unwrap()).modulus() == 0.0);
    }

    #[test]
    fn orthonormalize_scaled_vector() {
        let u = v(vec![B::one(), B::unit_i()]).scale(B::from_real(2.0));
        let b = orthonormalize_componentwise(&[u]);
        assert_eq!(b.basis1.len(), 1);
        assert_eq!(b.basis2.len(), 1);
        assert!((cnorm(&b.basis1[0]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn orthonormalize_dependent_input() {
        let u = v(vec![B::one(), B::unit_j()]);
        let b = orthonormalize_componentwise(&[u.clone(), u]);
        assert_eq!(b.basis1.len(), 1);
        assert_eq!(b.basis2.len(), 1);
    }

    #[test]
    fn orthonormalize_matches_classical_gram_schmidt() {
        let vs = [
            v(vec![B::one(), B::zero()]),
            v(vec![B::one(), B::one()]),
        ];
        let b = orthonormalize_componentwise(&vs);
        // classical result on [[1,0],[1,1]] is the standard basis
        for basis in [&b.basis1, &b.basis2] {
            assert_eq!(basis.len(), 2);
            assert!((basis[0][0] - Complex::new(1.0, 0.0)).norm() < 1e-12);
            assert!(basis[0][1].norm() < 1e-12);
            assert!(basis[1][0].norm() < 1e-12);
            assert!((basis[1][1] - Complex::new(1.0, 0.0)).norm() < 1e-12);
        }
    }
}

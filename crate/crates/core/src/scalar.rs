//! Bicomplex and hyperbolic scalars.
//!
//! A bicomplex number is `w = x0 + i*x1 + j*x2 + k*x3` with `i^2 = j^2 = -1`,
//! `ij = ji = k`, `k^2 = 1`. Equivalently `w = z1 + z2*j` with `z1, z2` complex
//! in `i`. The idempotents `e1 = (1+k)/2`, `e2 = (1-k)/2` split the ring into
//! two complex lines: `w = w1*e1 + w2*e2` with `w1 = z1 - i*z2`, `w2 = z1 + i*z2`.
//!
//! Canonical storage is the real quadruple `(x0, x1, x2, x3)`; the idempotent
//! pair is a derived view.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};

/// Relative threshold for zero-divisor and invertibility decisions.
pub const ZERO_DIVISOR_REL_TOL: f64 = 1e-14;

/// Absolute threshold for the hyperbolic partial order.
pub const HYPERBOLIC_ORDER_TOL: f64 = 1e-12;

#[inline]
pub(crate) fn cast<T: Float>(x: f64) -> T {
    T::from(x).unwrap()
}

/// A bicomplex scalar stored as the real quadruple of `w = x0 + i*x1 + j*x2 + k*x3`.
#[derive(Clone, Copy, PartialEq)]
pub struct Bicomplex<T> {
    pub x0: T,
    pub x1: T,
    pub x2: T,
    pub x3: T,
}

/// The C(i) coordinates of a bicomplex scalar along `e1` and `e2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdempotentPair<T> {
    pub w1: Complex<T>,
    pub w2: Complex<T>,
}

/// A hyperbolic scalar `h = h1 + k*h2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hyperbolic<T> {
    pub h1: T,
    pub h2: T,
}

/// Outcome of comparing two hyperbolic numbers under the componentwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperbolicOrder {
    Equal,
    Less,
    Greater,
    Incomparable,
}

impl<T: Float> Bicomplex<T> {
    #[inline]
    pub fn new(x0: T, x1: T, x2: T, x3: T) -> Self {
        Bicomplex { x0, x1, x2, x3 }
    }

    /// Builds `z1 + z2*j` from the complex pair.
    #[inline]
    pub fn from_complex_pair(z1: Complex<T>, z2: Complex<T>) -> Self {
        Bicomplex::new(z1.re, z1.im, z2.re, z2.im)
    }

    #[inline]
    pub fn z1(&self) -> Complex<T> {
        Complex::new(self.x0, self.x1)
    }

    #[inline]
    pub fn z2(&self) -> Complex<T> {
        Complex::new(self.x2, self.x3)
    }

    #[inline]
    pub fn zero() -> Self {
        Bicomplex::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    #[inline]
    pub fn one() -> Self {
        Bicomplex::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    #[inline]
    pub fn from_real(x: T) -> Self {
        Bicomplex::new(x, T::zero(), T::zero(), T::zero())
    }

    /// Embeds a C(i) scalar.
    #[inline]
    pub fn from_complex(z: Complex<T>) -> Self {
        Bicomplex::new(z.re, z.im, T::zero(), T::zero())
    }

    /// The imaginary unit `i`.
    #[inline]
    pub fn unit_i() -> Self {
        Bicomplex::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    /// The imaginary unit `j`.
    #[inline]
    pub fn unit_j() -> Self {
        Bicomplex::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    /// The hyperbolic unit `k = ij`.
    #[inline]
    pub fn unit_k() -> Self {
        Bicomplex::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// `e1 = (1+k)/2`.
    #[inline]
    pub fn e1() -> Self {
        let h = cast::<T>(0.5);
        Bicomplex::new(h, T::zero(), T::zero(), h)
    }

    /// `e2 = (1-k)/2`.
    #[inline]
    pub fn e2() -> Self {
        let h = cast::<T>(0.5);
        Bicomplex::new(h, T::zero(), T::zero(), -h)
    }

    /// Bar-conjugation: conjugate `z1` and `z2`.
    #[inline]
    pub fn conj_bar(&self) -> Self {
        Bicomplex::new(self.x0, -self.x1, self.x2, -self.x3)
    }

    /// Plus-conjugation: `z1 - z2*j`.
    #[inline]
    pub fn conj_plus(&self) -> Self {
        Bicomplex::new(self.x0, self.x1, -self.x2, -self.x3)
    }

    /// Star-conjugation: `conj(z1) - conj(z2)*j`; fixes `e1`, `e2` and `k`.
    #[inline]
    pub fn conj_star(&self) -> Self {
        Bicomplex::new(self.x0, -self.x1, -self.x2, self.x3)
    }

    /// The idempotent coordinates `(z1 - i*z2, z1 + i*z2)`.
    #[inline]
    pub fn idempotent_split(&self) -> IdempotentPair<T> {
        let i = Complex::new(T::zero(), T::one());
        let z1 = self.z1();
        let iz2 = i * self.z2();
        IdempotentPair {
            w1: z1 - iz2,
            w2: z1 + iz2,
        }
    }

    /// `|w| = sqrt((|w1|^2 + |w2|^2) / 2) = sqrt(x0^2 + x1^2 + x2^2 + x3^2)`.
    #[inline]
    pub fn modulus(&self) -> T {
        (self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// True iff exactly one idempotent component is numerically zero.
    pub fn is_zero_divisor(&self) -> bool {
        let p = self.idempotent_split();
        let tol = cast::<T>(ZERO_DIVISOR_REL_TOL) * self.modulus();
        let z1 = p.w1.norm() <= tol;
        let z2 = p.w2.norm() <= tol;
        (z1 != z2) && self.modulus() > T::zero()
    }

    /// Componentwise reciprocal in the idempotent coordinates.
    ///
    /// Fails on zero and on zero divisors, naming the vanishing component.
    pub fn invert(&self) -> Result<Self> {
        let p = self.idempotent_split();
        let tol = cast::<T>(ZERO_DIVISOR_REL_TOL) * self.modulus();
        if p.w1.norm() <= tol {
            return Err(Error::NotInvertible { component: 1 });
        }
        if p.w2.norm() <= tol {
            return Err(Error::NotInvertible { component: 2 });
        }
        Ok(IdempotentPair {
            w1: p.w1.inv(),
            w2: p.w2.inv(),
        }
        .join())
    }

    /// Extracts the hyperbolic part when `x1` and `x2` vanish to within `tol`
    /// relative to the modulus.
    pub fn as_hyperbolic(&self, tol: T) -> Option<Hyperbolic<T>> {
        let scale = T::one() + self.modulus();
        if self.x1.abs() <= tol * scale && self.x2.abs() <= tol * scale {
            Some(Hyperbolic::new(self.x0, self.x3))
        } else {
            None
        }
    }

    #[inline]
    pub fn scale(&self, s: T) -> Self {
        Bicomplex::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl<T: Float> IdempotentPair<T> {
    #[inline]
    pub fn new(w1: Complex<T>, w2: Complex<T>) -> Self {
        IdempotentPair { w1, w2 }
    }

    /// `w1*e1 + w2*e2`, the exact inverse of the split.
    #[inline]
    pub fn join(&self) -> Bicomplex<T> {
        let half = cast::<T>(0.5);
        let i = Complex::new(T::zero(), T::one());
        let z1 = (self.w1 + self.w2).scale(half);
        let z2 = (i * (self.w1 - self.w2)).scale(half);
        Bicomplex::from_complex_pair(z1, z2)
    }
}

impl<T: Float> Hyperbolic<T> {
    #[inline]
    pub fn new(h1: T, h2: T) -> Self {
        Hyperbolic { h1, h2 }
    }

    #[inline]
    pub fn zero() -> Self {
        Hyperbolic::new(T::zero(), T::zero())
    }

    /// Builds `a1*e1 + a2*e2`.
    #[inline]
    pub fn from_e_coords(a1: T, a2: T) -> Self {
        let half = cast::<T>(0.5);
        Hyperbolic::new((a1 + a2) * half, (a1 - a2) * half)
    }

    /// The coordinates `(h1 + h2, h1 - h2)` along `e1`, `e2`.
    #[inline]
    pub fn e_coords(&self) -> (T, T) {
        (self.h1 + self.h2, self.h1 - self.h2)
    }

    /// Membership in `D+`: both e-coordinates `>= -tol`.
    pub fn is_nonneg(&self) -> bool {
        let tol = cast::<T>(HYPERBOLIC_ORDER_TOL);
        let (a1, a2) = self.e_coords();
        a1 >= -tol && a2 >= -tol
    }

    /// Componentwise partial order on the e-coordinates.
    pub fn compare(&self, other: &Self) -> HyperbolicOrder {
        let tol = cast::<T>(HYPERBOLIC_ORDER_TOL);
        let (a1, a2) = self.e_coords();
        let (b1, b2) = other.e_coords();
        let le = a1 <= b1 + tol && a2 <= b2 + tol;
        let ge = a1 + tol >= b1 && a2 + tol >= b2;
        match (le, ge) {
            (true, true) => HyperbolicOrder::Equal,
            (true, false) => HyperbolicOrder::Less,
            (false, true) => HyperbolicOrder::Greater,
            (false, false) => HyperbolicOrder::Incomparable,
        }
    }

    /// Embeds into the bicomplex ring with `x1 = x2 = 0`.
    #[inline]
    pub fn embed(&self) -> Bicomplex<T> {
        Bicomplex::new(self.h1, T::zero(), T::zero(), self.h2)
    }

    #[inline]
    pub fn modulus(&self) -> T {
        self.embed().modulus()
    }
}

impl<T: Float> Add for Bicomplex<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Bicomplex::new(
            self.x0 + rhs.x0,
            self.x1 + rhs.x1,
            self.x2 + rhs.x2,
            self.x3 + rhs.x3,
        )
    }
}

impl<T: Float> Sub for Bicomplex<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Bicomplex::new(
            self.x0 - rhs.x0,
            self.x1 - rhs.x1,
            self.x2 - rhs.x2,
            self.x3 - rhs.x3,
        )
    }
}

impl<T: Float> Neg for Bicomplex<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Bicomplex::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl<T: Float> Mul for Bicomplex<T> {
    type Output = Self;
    /// `(z1 + z2 j)(y1 + y2 j) = (z1 y1 - z2 y2) + (z1 y2 + z2 y1) j`.
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let (a1, a2) = (self.z1(), self.z2());
        let (b1, b2) = (rhs.z1(), rhs.z2());
        Bicomplex::from_complex_pair(a1 * b1 - a2 * b2, a1 * b2 + a2 * b1)
    }
}

impl<T: Float> AddAssign for Bicomplex<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Float> SubAssign for Bicomplex<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Float> MulAssign for Bicomplex<T> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<T: fmt::Debug> fmt::Debug for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Bicomplex({:?} + {:?}i + {:?}j + {:?}k)",
            self.x0, self.x1, self.x2, self.x3
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type B = Bicomplex<f64>;

    fn assert_close(a: B, b: B, tol: f64) {
        assert!((a - b).modulus() <= tol, "{a:?} vs {b:?}");
    }

    /// Multiplication oracle working directly on the quadruple with the unit
    /// table i^2 = j^2 = -1, ij = ji = k, k^2 = 1, ik = -j, jk = -i.
    fn quadruple_mul(a: B, b: B) -> B {
        let (a0, a1, a2, a3) = (a.x0, a.x1, a.x2, a.x3);
        let (b0, b1, b2, b3) = (b.x0, b.x1, b.x2, b.x3);
        B::new(
            a0 * b0 - a1 * b1 - a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )
    }

    #[test]
    fn i_times_j_is_k() {
        assert_close(B::unit_i() * B::unit_j(), B::unit_k(), 0.0);
    }

    #[test]
    fn idempotents_annihilate() {
        assert_close(B::e1() * B::e2(), B::zero(), 0.0);
        assert_close(B::e1() * B::e1(), B::e1(), 1e-15);
        assert_close(B::e2() * B::e2(), B::e2(), 1e-15);
        assert_close(B::e1() + B::e2(), B::one(), 0.0);
    }

    #[test]
    fn one_plus_k_times_one_minus_k_vanishes() {
        let a = B::one() + B::unit_k();
        let b = B::one() - B::unit_k();
        assert_close(a * b, B::zero(), 1e-15);
        assert_close(quadruple_mul(a, b), B::zero(), 0.0);
    }

    #[test]
    fn mul_matches_quadruple_oracle() {
        let a = B::new(0.3, -1.2, 0.7, 2.5);
        let b = B::new(-0.9, 0.4, 1.1, -0.6);
        assert_close(a * b, quadruple_mul(a, b), 1e-14);
    }

    #[test]
    fn star_fixes_idempotents_and_k() {
        assert_close(B::e1().conj_star(), B::e1(), 0.0);
        assert_close(B::e2().conj_star(), B::e2(), 0.0);
        assert_close(B::unit_k().conj_star(), B::unit_k(), 0.0);
        assert_close(B::from_real(3.5).conj_star(), B::from_real(3.5), 0.0);
    }

    #[test]
    fn conjugations_are_involutions_and_star_is_bar_plus() {
        let w = B::new(1.0, -2.0, 0.5, 3.0);
        assert_close(w.conj_bar().conj_bar(), w, 0.0);
        assert_close(w.conj_plus().conj_plus(), w, 0.0);
        assert_close(w.conj_star().conj_star(), w, 0.0);
        assert_close(w.conj_plus().conj_bar(), w.conj_star(), 0.0);
    }

    #[test]
    fn split_known_values() {
        let one = Complex::new(1.0, 0.0);
        let p = B::one().idempotent_split();
        assert_eq!((p.w1, p.w2), (one, one));

        let p = B::unit_k().idempotent_split();
        assert_eq!((p.w1, p.w2), (one, -one));

        // i + j splits to (0, 2i)
        let p = (B::unit_i() + B::unit_j()).idempotent_split();
        assert!((p.w1 - Complex::new(0.0, 0.0)).norm() < 1e-15);
        assert!((p.w2 - Complex::new(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn join_known_values() {
        let one = Complex::new(1.0, 0.0);
        assert_close(IdempotentPair::new(one, one).join(), B::one(), 0.0);
        // 2i*e1 = i + ik = i - j
        let j = IdempotentPair::new(Complex::new(0.0, 2.0), Complex::new(0.0, 0.0)).join();
        assert_close(j, B::new(0.0, 1.0, -1.0, 0.0), 1e-15);
    }

    #[test]
    fn split_join_round_trip() {
        let w = B::new(0.1, -0.2, 0.3, -0.4);
        assert_close(w.idempotent_split().join(), w, 1e-16);
    }

    #[test]
    fn modulus_values() {
        assert_eq!(B::zero().modulus(), 0.0);
        assert!((B::unit_k().modulus() - 1.0).abs() < 1e-15);
        assert!((B::e1().modulus() - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        // section-1 form sqrt((|w1|^2+|w2|^2)/2) agrees with the quadruple form
        let w = B::new(1.0, 2.0, 3.0, 4.0);
        let p = w.idempotent_split();
        let m1 = ((p.w1.norm_sqr() + p.w2.norm_sqr()) / 2.0).sqrt();
        assert!((m1 - w.modulus()).abs() <= 1e-12 * w.modulus());
    }

    #[test]
    fn zero_divisors() {
        assert!(B::e1().is_zero_divisor());
        assert!(B::e2().is_zero_divisor());
        assert!(!B::zero().is_zero_divisor());
        assert!(!B::one().is_zero_divisor());
        assert!(!B::unit_k().is_zero_divisor());
        // constructive witness: w * complementary idempotent = 0
        assert_close(B::e1() * B::e2(), B::zero(), 0.0);
    }

    #[test]
    fn invert_values() {
        assert_close(B::unit_k().invert().unwrap(), B::unit_k(), 1e-15);
        // 2e1 + 4e2 inverts to e1/2 + e2/4
        let w = B::e1().scale(2.0) + B::e2().scale(4.0);
        let expected = B::e1().scale(0.5) + B::e2().scale(0.25);
        assert_close(w.invert().unwrap(), expected, 1e-15);
        assert_close(w * w.invert().unwrap(), B::one(), 1e-12);
        assert_eq!(
            B::e1().invert().unwrap_err(),
            Error::NotInvertible { component: 2 }
        );
        assert_eq!(
            B::zero().invert().unwrap_err(),
            Error::NotInvertible { component: 1 }
        );
    }

    #[test]
    fn hyperbolic_order() {
        let e1 = Hyperbolic::from_e_coords(1.0, 0.0);
        let e2 = Hyperbolic::from_e_coords(0.0, 1.0);
        assert!(e1.is_nonneg());
        assert!(!Hyperbolic::new(-1.0, 0.0).is_nonneg());
        assert_eq!(e1.compare(&e2), HyperbolicOrder::Incomparable);
        assert_eq!(
            Hyperbolic::new(0.0, 0.0).compare(&e1),
            HyperbolicOrder::Less
        );
        assert_eq!(e1.compare(&e1), HyperbolicOrder::Equal);
        assert_eq!(
            Hyperbolic::new(2.0, 0.0).compare(&Hyperbolic::new(1.0, 0.0)),
            HyperbolicOrder::Greater
        );
    }

    #[test]
    fn hyperbolic_embed_round_trip() {
        let h = Hyperbolic::new(1.5, -0.5);
        let w = h.embed();
        assert_eq!(w.x1, 0.0);
        assert_eq!(w.x2, 0.0);
        assert_eq!(w.as_hyperbolic(1e-12).unwrap(), h);
    }

    #[test]
    fn w_star_w_is_nonneg_hyperbolic() {
        let w = B::new(0.7, -1.3, 2.1, 0.4);
        let p = (w * w.conj_star()).as_hyperbolic(1e-12).unwrap();
        assert!(p.is_nonneg());
        let (a1, a2) = p.e_coords();
        let s = w.idempotent_split();
        assert!((a1 - s.w1.norm_sqr()).abs() < 1e-12);
        assert!((a2 - s.w2.norm_sqr()).abs() < 1e-12);
    }
}

//! Krylov spans, cyclic vectors, and the cyclic direct-sum decomposition.
//!
//! A vector is cyclic for an operator when its Krylov span fills the whole
//! space; over the bicomplex ring this happens exactly when it does in both
//! idempotent components. When no single cyclic vector exists, the space
//! still splits into mutually orthogonal invariant blocks each of which is
//! cyclic, found here by a per-component deflation loop.

use num_complex::Complex;
use num_traits::Float;

use crate::cplx::{cinner, cnorm, CMatrix};
use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::operator::{BCMatrix, SELF_ADJOINT_TOL};
use crate::scalar::{cast, Bicomplex};
use crate::vector::BCVector;

/// Relative tolerance for every rank decision.
pub const RANK_TOL: f64 = 1e-10;
/// Relative eigenvalue-gap threshold for spectrum simplicity.
pub const SIMPLE_GAP_TOL: f64 = 1e-10;

/// Per-component Krylov matrices `[w, Tw, ..., T^(depth-1) w]`.
pub fn krylov_matrix<T: Float>(
    t: &BCMatrix<T>,
    w: &BCVector<T>,
    depth: usize,
) -> Result<(CMatrix<T>, CMatrix<T>)> {
    assert!(depth >= 1, "depth must be at least 1");
    if w.len() != t.dim() {
        return Err(Error::DimensionMismatch {
            left: t.dim(),
            right: w.len(),
        });
    }
    let (t1, t2) = t.split();
    let (w1, w2) = w.split();
    Ok((
        component_krylov(&t1, &w1.entries, depth),
        component_krylov(&t2, &w2.entries, depth),
    ))
}

fn component_krylov<T: Float>(a: &CMatrix<T>, w: &[Complex<T>], depth: usize) -> CMatrix<T> {
    let n = w.len();
    let mut m = CMatrix::zeros(n, depth);
    let mut v = w.to_vec();
    for j in 0..depth {
        if j > 0 {
            v = a.matvec(&v);
        }
        for i in 0..n {
            m[(i, j)] = v[i];
        }
    }
    m
}

/// Numerical rank of the Krylov span `{w, Aw, ..., A^(depth-1) w}`.
///
/// Each new direction is orthonormalized against the running basis, so powers
/// of `A` never appear explicitly and column scales stay bounded.
pub fn krylov_rank<T: Float>(a: &CMatrix<T>, w: &[Complex<T>], depth: usize) -> usize {
    let tol = cast::<T>(RANK_TOL);
    let mut basis: Vec<Vec<Complex<T>>> = Vec::new();
    let n0 = cnorm(w);
    if n0 <= tol {
        return 0;
    }
    let mut v: Vec<Complex<T>> = w.iter().map(|x| x.unscale(n0)).collect();
    for step in 0..depth {
        if step > 0 {
            v = a.matvec(&v);
        }
        let scale = cnorm(&v).max(T::one());
        for _pass in 0..2 {
            for b in &basis {
                let c = cinner(&v, b);
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = *vi - c * *bi;
                }
            }
        }
        let r = cnorm(&v);
        if r <= tol * scale {
            break; // Krylov space closed
        }
        for x in v.iter_mut() {
            *x = x.unscale(r);
        }
        basis.push(v.clone());
    }
    basis.len()
}

/// Outcome of the cyclicity test, with the per-component Krylov ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicityReport {
    pub cyclic: bool,
    pub rank1: usize,
    pub rank2: usize,
}

/// Cyclic over the bicomplex module iff cyclic in both components.
pub fn is_cyclic<T: Float>(t: &BCMatrix<T>, w: &BCVector<T>) -> Result<CyclicityReport> {
    let n = t.dim();
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: w.len(),
        });
    }
    let (t1, t2) = t.split();
    let (w1, w2) = w.split();
    let rank1 = krylov_rank(&t1, &w1.entries, n);
    let rank2 = krylov_rank(&t2, &w2.entries, n);
    Ok(CyclicityReport {
        cyclic: rank1 == n && rank2 == n,
        rank1,
        rank2,
    })
}

fn require_self_adjoint<T: Float>(t: &BCMatrix<T>) -> Result<()> {
    if t.is_self_adjoint() {
        Ok(())
    } else {
        Err(Error::NotSelfAdjoint {
            defect: t.self_adjoint_defect().to_f64().unwrap_or(f64::NAN),
            tol: (cast::<T>(SELF_ADJOINT_TOL) * (T::one() + t.norm_real()))
                .to_f64()
                .unwrap_or(f64::NAN),
        })
    }
}

fn spectrum_is_simple<T: Float>(evals: &[T], scale: T) -> bool {
    let gap = cast::<T>(SIMPLE_GAP_TOL) * (T::one() + scale);
    evals.windows(2).all(|w| w[1] - w[0] > gap)
}

/// Searches for a cyclic vector of a self-adjoint operator.
///
/// One exists iff both component spectra are simple; in that case the sum of
/// the eigenvectors in each component is cyclic.
pub fn find_cyclic_vector<T: Float>(t: &BCMatrix<T>) -> Result<Option<BCVector<T>>> {
    require_self_adjoint(t)?;
    let n = t.dim();
    let (t1, t2) = t.split();
    let (ev1, v1) = hermitian_eig(&t1)?;
    let (ev2, v2) = hermitian_eig(&t2)?;
    let scale = t.norm_real();
    if !spectrum_is_simple(&ev1, scale) || !spectrum_is_simple(&ev2, scale) {
        return Ok(None);
    }
    let sum_cols = |v: &CMatrix<T>| -> Vec<Complex<T>> {
        (0..n)
            .map(|i| {
                (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                    acc + v[(i, j)]
                })
            })
            .collect()
    };
    let w = BCVector::join(&sum_cols(&v1), &sum_cols(&v2))?;
    let nr = w.norm_real();
    let w = w.scale(Bicomplex::from_real(T::one() / nr));
    Ok(Some(w))
}

/// One invariant cyclic block in one idempotent component.
#[derive(Clone, Debug)]
pub struct ComponentBlock<T> {
    /// Orthonormal basis of the block.
    pub basis: Vec<Vec<Complex<T>>>,
    /// The seed vector whose Krylov span is the block (first basis vector).
    pub seed: Vec<Complex<T>>,
}

impl<T: Float> ComponentBlock<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Restriction `B^H A B` of a component operator to the block.
    pub fn restriction(&self, a: &CMatrix<T>) -> CMatrix<T> {
        let d = self.basis.len();
        let mut m = CMatrix::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let ab = a.matvec(b);
            for (i, bi) in self.basis.iter().enumerate() {
                m[(i, j)] = cinner(&ab, bi);
            }
        }
        m
    }
}

/// The finite-dimensional cyclic direct-sum decomposition.
///
/// The two component block lists may have different lengths; the `blocks`
/// accessor pairs them by index, padding the shorter side with empty blocks.
#[derive(Clone, Debug)]
pub struct CyclicDecomposition<T> {
    pub blocks1: Vec<ComponentBlock<T>>,
    pub blocks2: Vec<ComponentBlock<T>>,
}

impl<T: Float> CyclicDecomposition<T> {
    pub fn num_blocks(&self) -> usize {
        self.blocks1.len().max(self.blocks2.len())
    }

    /// Component dimensions of block `b` (0 where a component has no block).
    pub fn block_dims(&self, b: usize) -> (usize, usize) {
        (
            self.blocks1.get(b).map_or(0, |x| x.dim()),
            self.blocks2.get(b).map_or(0, |x| x.dim()),
        )
    }

    /// Joined bicomplex cyclic vector of block `b` (zero component where the
    /// component has no block).
    pub fn cyclic_vector(&self, b: usize, n: usize) -> BCVector<T> {
        let zero = vec![Complex::new(T::zero(), T::zero()); n];
        let s1 = self.blocks1.get(b).map_or(zero.clone(), |x| x.seed.clone());
        let s2 = self.blocks2.get(b).map_or(zero, |x| x.seed.clone());
        BCVector::join(&s1, &s2).expect("component seeds share the ambient dimension")
    }

    pub fn dims_sum(&self) -> (usize, usize) {
        (
            self.blocks1.iter().map(|b| b.dim()).sum(),
            self.blocks2.iter().map(|b| b.dim()).sum(),
        )
    }
}

/// Splits the space into mutually orthogonal T-invariant cyclic blocks,
/// independently in each idempotent component.
///
/// Deflation: seed with the first standard-basis vector not yet captured,
/// grow its Krylov span by orthonormalized application of the component
/// operator, remove the block, repeat until the component is exhausted.
pub fn cyclic_direct_sum<T: Float>(t: &BCMatrix<T>) -> Result<CyclicDecomposition<T>> {
    require_self_adjoint(t)?;
    let (t1, t2) = t.split();
    Ok(CyclicDecomposition {
        blocks1: component_deflation(&t1),
        blocks2: component_deflation(&t2),
    })
}

fn component_deflation<T: Float>(a: &CMatrix<T>) -> Vec<ComponentBlock<T>> {
    let n = a.rows;
    let tol = cast::<T>(RANK_TOL);
    let mut captured: Vec<Vec<Complex<T>>> = Vec::new();
    let mut blocks = Vec::new();
    let mut next_seed = 0usize;
    while captured.len() < n {
        // first standard-basis vector with mass outside the captured span
        let mut seed: Option<Vec<Complex<T>>> = None;
        while next_seed < n {
            let mut e = vec![Complex::new(T::zero(), T::zero()); n];
            e[next_seed] = Complex::new(T::one(), T::zero());
            next_seed += 1;
            let r = project_out(&mut e, &captured);
            if r > tol {
                for x in e.iter_mut() {
                    *x = x.unscale(r);
                }
                seed = Some(e);
                break;
            }
        }
        let seed = match seed {
            Some(s) => s,
            None => break, // numerically exhausted
        };
        let mut block = vec![seed.clone()];
        loop {
            let mut v = a.matvec(block.last().unwrap());
            let scale = cnorm(&v).max(T::one());
            project_out(&mut v, &captured);
            let r = project_out(&mut v, &block);
            if r <= tol * scale {
                break;
            }
            for x in v.iter_mut() {
                *x = x.unscale(r);
            }
            block.push(v);
        }
        captured.extend(block.iter().cloned());
        blocks.push(ComponentBlock { basis: block, seed });
    }
    blocks
}

/// Orthogonalizes `v` against `basis` (two passes); returns the residual norm.
fn project_out<T: Float>(v: &mut [Complex<T>], basis: &[Vec<Complex<T>>]) -> T {
    for _pass in 0..2 {
        for b in basis {
            let c = cinner(v, b);
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi = *vi - c * *bi;
            }
        }
    }
    cnorm(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    type B = Bicomplex<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn embed_diag(values: &[f64]) -> BCMatrix<f64> {
        BCMatrix::diag(&values.iter().map(|&x| B::from_real(x)).collect::<Vec<_>>())
    }

    #[test]
    fn krylov_depth_one_is_the_split() {
        let t = BCMatrix::<f64>::identity(2);
        let w = BCVector::new(vec![B::one(), B::unit_k()]);
        let (k1, k2) = krylov_matrix(&t, &w, 1).unwrap();
        let (w1, w2) = w.split();
        assert_eq!(k1.col(0), w1.entries);
        assert_eq!(k2.col(0), w2.entries);
    }

    #[test]
    fn krylov_identity_is_rank_one() {
        let t = BCMatrix::<f64>::identity(2);
        let w = BCVector::new(vec![B::one(), B::from_real(2.0)]);
        let (k1, _) = krylov_matrix(&t, &w, 3).unwrap();
        assert_eq!(k1.col(0), k1.col(1));
        let (t1, _) = t.split();
        let (w1, _) = w.split();
        assert_eq!(krylov_rank(&t1, &w1.entries, 3), 1);
    }

    #[test]
    fn krylov_vandermonde() {
        let a = CMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(2.0, 0.0)]]);
        let w = vec![c(1.0, 0.0), c(1.0, 0.0)];
        let m = component_krylov(&a, &w, 2);
        assert_eq!(m.row(0), &[c(1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(m.row(1), &[c(1.0, 0.0), c(2.0, 0.0)]);
        assert_eq!(krylov_rank(&a, &w, 2), 2);
    }

    #[test]
    fn is_cyclic_examples() {
        // identity: Krylov span is a line
        let t = BCMatrix::<f64>::identity(2);
        let w = BCVector::new(vec![B::one(), B::one()]);
        let r = is_cyclic(&t, &w).unwrap();
        assert!(!r.cyclic);
        assert_eq!((r.rank1, r.rank2), (1, 1));

        // diag(1,2) with w=(1,1): cyclic in both components
        let t = embed_diag(&[1.0, 2.0]);
        let r = is_cyclic(&t, &w).unwrap();
        assert!(r.cyclic);

        // component 2 has a repeated eigenvalue: fails there
        let a1 = CMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(2.0, 0.0)]]);
        let a2 = CMatrix::from_rows(&[vec![c(3.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(3.0, 0.0)]]);
        let t = BCMatrix::join(&a1, &a2).unwrap();
        let r = is_cyclic(&t, &w).unwrap();
        assert!(!r.cyclic);
        assert_eq!(r.rank1, 2);
        assert_eq!(r.rank2, 1);
    }

    #[test]
    fn find_cyclic_vector_examples() {
        assert!(find_cyclic_vector(&BCMatrix::<f64>::identity(3))
            .unwrap()
            .is_none());

        let t = embed_diag(&[1.0, 2.0]);
        let w = find_cyclic_vector(&t).unwrap().unwrap();
        assert!(is_cyclic(&t, &w).unwrap().cyclic);
        assert!((w.norm_real() - 1.0).abs() < 1e-12);
        let (w1, w2) = w.split();
        assert!(w1.entries.iter().all(|z| z.norm() > 1e-8));
        assert!(w2.entries.iter().all(|z| z.norm() > 1e-8));

        // diag(e1+2e2, 2e1+e2): both component spectra {1,2}
        let t = BCMatrix::diag(&[
            B::e1() + B::e2().scale(2.0),
            B::e1().scale(2.0) + B::e2(),
        ]);
        let w = find_cyclic_vector(&t).unwrap().unwrap();
        assert!(is_cyclic(&t, &w).unwrap().cyclic);
    }

    #[test]
    fn cyclic_direct_sum_simple_spectrum_is_one_block() {
        // tridiagonal with nonzero off-diagonals: e_0 is cyclic, spectrum simple
        let rows = [
            [2.0, 1.0, 0.0],
            [1.0, 3.0, 1.0],
            [0.0, 1.0, 4.0],
        ];
        let mut t = BCMatrix::<f64>::zeros(3);
        for i in 0..3 {
            for j in 0..3 {
                t[(i, j)] = B::from_real(rows[i][j]);
            }
        }
        let d = cyclic_direct_sum(&t).unwrap();
        assert_eq!(d.blocks1.len(), 1);
        assert_eq!(d.blocks2.len(), 1);
        assert_eq!(d.dims_sum(), (3, 3));
    }

    #[test]
    fn cyclic_direct_sum_identity_is_all_lines() {
        let d = cyclic_direct_sum(&BCMatrix::<f64>::identity(3)).unwrap();
        assert_eq!(d.blocks1.len(), 3);
        assert_eq!(d.blocks2.len(), 3);
        assert!(d.blocks1.iter().all(|b| b.dim() == 1));
        assert_eq!(d.dims_sum(), (3, 3));
    }

    #[test]
    fn cyclic_direct_sum_with_multiplicity() {
        // component 1 = diag(1,1,2): two blocks of dims 2 and 1
        let a1 = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)],
        ]);
        let blocks = component_deflation(&a1);
        // seed e0 has eigen-support {1}: block dim 1; then e1 dim 1; then e2 dim 1
        // (diagonal operator: every Krylov space of a basis vector is a line)
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks.iter().map(|b| b.dim()).sum::<usize>(), 3);

        // a rotated copy with genuine 2-dimensional cyclic blocks
        let h = CMatrix::from_rows(&[
            vec![c(1.5, 0.0), c(0.5, 0.0), c(0.0, 0.0)],
            vec![c(0.5, 0.0), c(1.5, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ]);
        // spectrum {1, 2, 1}: eigenvalue 1 has multiplicity 2
        let blocks = component_deflation(&h);
        assert_eq!(blocks.iter().map(|b| b.dim()).sum::<usize>(), 3);
        assert!(blocks.len() >= 2);
        // every block restriction is cyclic from its seed coordinates e_0
        for b in &blocks {
            let r = b.restriction(&h);
            let mut e0 = vec![c(0.0, 0.0); b.dim()];
            e0[0] = c(1.0, 0.0);
            assert_eq!(krylov_rank(&r, &e0, b.dim()), b.dim());
        }
    }
}

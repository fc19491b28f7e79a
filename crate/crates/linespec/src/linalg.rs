//! Shared dense linear algebra helpers.
//!
//! nalgebra supplies the matrix/vector types used throughout the crate; the
//! Hermitian eigendecomposition is delegated to faer, which is substantially
//! faster on the 50-200 dimensional problems this crate works at. Everything
//! here assumes column-major dense complex matrices.

use crate::error::{Error, Result};
use faer::Side;
use nalgebra::{DMatrix, DVector};

pub type C64 = num_complex::Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Maximum entrywise asymmetry |H - H^H| of a square matrix.
pub fn hermitian_drift(h: &CMat) -> f64 {
    let n = h.nrows();
    let mut drift = 0.0f64;
    for j in 0..n {
        for i in 0..=j {
            let d = (h[(i, j)] - h[(j, i)].conj()).norm();
            if d > drift {
                drift = d;
            }
        }
    }
    drift
}

/// Symmetrize in place: H <- (H + H^H)/2.
pub fn symmetrize(h: &mut CMat) {
    let n = h.nrows();
    for j in 0..n {
        for i in 0..j {
            let avg = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
            h[(i, j)] = avg;
            h[(j, i)] = avg.conj();
        }
        h[(j, j)] = C64::new(h[(j, j)].re, 0.0);
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues in ascending order together with the matrix of
/// eigenvectors (column k pairs with eigenvalue k). The input is symmetrized
/// first so callers may pass matrices with rounding-level asymmetry.
pub fn hermitian_eig(h: &CMat) -> Result<(DVector<f64>, CMat)> {
    let n = h.nrows();
    if n != h.ncols() {
        return Err(Error::dim(format!("eig of non-square {}x{}", n, h.ncols())));
    }
    let mut fm = faer::Mat::<C64>::zeros(n, n);
    for j in 0..n {
        for i in 0..n {
            fm[(i, j)] = if i == j {
                C64::new(h[(i, i)].re, 0.0)
            } else {
                (h[(i, j)] + h[(j, i)].conj()) * 0.5
            };
        }
    }
    let eig = fm
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Linalg(format!("hermitian eigendecomposition failed: {e:?}")))?;
    let s = eig.S().column_vector();
    let vals = DVector::from_fn(n, |i, _| s[i].re);
    let u = eig.U();
    let vecs = CMat::from_fn(n, n, |i, j| u[(i, j)]);
    Ok((vals, vecs))
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(h: &CMat) -> Result<DVector<f64>> {
    Ok(hermitian_eig(h)?.0)
}

/// Real inner product <A, B>_R = Re tr(A^H B).
pub fn inner_real(a: &CMat, b: &CMat) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x.conj() * y).re)
        .sum()
}

/// Frobenius norm of the difference of two equally sized matrices.
pub fn frob_diff(a: &CMat, b: &CMat) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Minimum-norm least squares solution of a real system via SVD.
///
/// Returns the solution together with the numerical rank at the given
/// relative cutoff.
pub fn lstsq_real(a: &DMatrix<f64>, b: &DVector<f64>, rel_cutoff: f64) -> Result<(DVector<f64>, usize)> {
    let (m, n) = a.shape();
    if b.len() != m {
        return Err(Error::dim("lstsq rhs length mismatch"));
    }
    let fa = faer::Mat::<f64>::from_fn(m, n, |i, j| a[(i, j)]);
    let svd = fa
        .svd()
        .map_err(|e| Error::Linalg(format!("real SVD failed: {e:?}")))?;
    let s = svd.S().column_vector();
    let k = m.min(n);
    let smax = if k > 0 { s[0] } else { 0.0 };
    let cutoff = rel_cutoff * smax;
    let u = svd.U();
    let v = svd.V();
    let mut x = DVector::<f64>::zeros(n);
    let mut rank = 0;
    for r in 0..k {
        if s[r] > cutoff && s[r] > 0.0 {
            rank += 1;
            let mut ub = 0.0;
            for i in 0..m {
                ub += u[(i, r)] * b[i];
            }
            let coef = ub / s[r];
            for j in 0..n {
                x[j] += coef * v[(j, r)];
            }
        }
    }
    Ok((x, rank))
}

/// Minimum-norm least squares solution of a complex system via SVD.
pub fn lstsq_complex(a: &CMat, b: &CVec, rel_cutoff: f64) -> Result<(CVec, usize)> {
    let (m, n) = a.shape();
    if b.len() != m {
        return Err(Error::dim("lstsq rhs length mismatch"));
    }
    let fa = faer::Mat::<C64>::from_fn(m, n, |i, j| a[(i, j)]);
    let svd = fa
        .svd()
        .map_err(|e| Error::Linalg(format!("complex SVD failed: {e:?}")))?;
    let s = svd.S().column_vector();
    let k = m.min(n);
    let smax = if k > 0 { s[0].re } else { 0.0 };
    let cutoff = rel_cutoff * smax;
    let u = svd.U();
    let v = svd.V();
    let mut x = CVec::zeros(n);
    let mut rank = 0;
    for r in 0..k {
        let sr = s[r].re;
        if sr > cutoff && sr > 0.0 {
            rank += 1;
            let mut ub = C64::new(0.0, 0.0);
            for i in 0..m {
                ub += u[(i, r)].conj() * b[i];
            }
            let coef = ub / sr;
            for j in 0..n {
                x[j] += coef * v[(j, r)];
            }
        }
    }
    Ok((x, rank))
}

/// Singular values of a complex matrix, descending.
pub fn singular_values(a: &CMat) -> Result<Vec<f64>> {
    let (m, n) = a.shape();
    let fa = faer::Mat::<C64>::from_fn(m, n, |i, j| a[(i, j)]);
    let svd = fa
        .svd()
        .map_err(|e| Error::Linalg(format!("complex SVD failed: {e:?}")))?;
    let s = svd.S().column_vector();
    Ok((0..m.min(n)).map(|i| s[i].re).collect())
}

pub fn all_finite_mat(m: &CMat) -> bool {
    m.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

pub fn all_finite_vec(v: &CVec) -> bool {
    v.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

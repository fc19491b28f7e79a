//! Hermitian Toeplitz operator T(u), its adjoint, PSD projection, and the
//! Vandermonde decomposition via Prony's annihilating filter.
//!
//! T(u) is parameterized by its first row u (u_1 real): entry (j, k) equals
//! u_{k-j+1} above the diagonal and the conjugate below. A PSD T(u) of rank
//! r <= M-1 factors uniquely as A(f) diag(p) A(f)^H with unit-modulus
//! steering columns; the factorization is recovered here by solving the
//! annihilating-filter system over the two-sided moment sequence
//! b_m = sum_k p_k theta_k^m, theta_k = e^{-i 2 pi f_k}, rooting the filter
//! polynomial, and fitting the powers by nonnegative least squares.

use crate::error::{Error, Result};
use crate::linalg::{self, C64, CMat, CVec};
use crate::nnls::nnls;
use crate::roots::polynomial_roots;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Tolerance on Im(u_1) relative to the parameter scale.
const U1_IMAG_TOL: f64 = 1e-9;

/// Default relative eigenvalue threshold for numerical rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-6;

/// Angular distance (radians) below which Prony roots are merged.
const ROOT_MERGE_TOL: f64 = 1e-9;

/// First-row parameter of a Hermitian Toeplitz matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToeplitzParam(CVec);

impl ToeplitzParam {
    pub fn new(u: CVec) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::domain("Toeplitz parameter must be nonempty"));
        }
        let scale = u.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        if u[0].im.abs() > U1_IMAG_TOL * (1.0 + scale) {
            return Err(Error::domain(format!(
                "Im(u_1) = {:.3e} beyond tolerance",
                u[0].im
            )));
        }
        let mut u = u;
        u[0] = C64::new(u[0].re, 0.0);
        Ok(ToeplitzParam(u))
    }

    pub fn zeros(m: usize) -> Self {
        ToeplitzParam(CVec::zeros(m))
    }

    /// Parameter of T(u) = sum_k p_k a(f_k) a(f_k)^H:
    /// u_m = sum_k p_k e^{-i 2 pi f_k (m-1)}.
    pub fn from_components(freqs: &[f64], powers: &[f64], m: usize) -> Result<Self> {
        if freqs.len() != powers.len() {
            return Err(Error::dim("freqs and powers must have equal length"));
        }
        let mut u = CVec::zeros(m);
        for (f, p) in freqs.iter().zip(powers.iter()) {
            for j in 0..m {
                u[j] += C64::from_polar(*p, -TAU * f * j as f64);
            }
        }
        ToeplitzParam::new(u)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_vec(&self) -> &CVec {
        &self.0
    }

    /// Dense M x M Hermitian Toeplitz matrix.
    pub fn matrix(&self) -> CMat {
        let m = self.len();
        CMat::from_fn(m, m, |i, j| {
            if j >= i {
                self.0[j - i]
            } else {
                self.0[i - j].conj()
            }
        })
    }

    /// Scale the parameter (and hence T(u)) by a real factor.
    pub fn scaled(&self, c: f64) -> Self {
        ToeplitzParam(self.0.map(|v| v * c))
    }
}

/// Adjoint of the Toeplitz operator: the unique T*(W) with
/// <T(u), W>_R = <u, T*(W)>_R for all u.
///
/// Componentwise: (T*(W))_1 = tr(W) and (T*(W))_m = 2 sum of the entries on
/// the (m-1)-th superdiagonal for m >= 2.
pub fn toeplitz_adjoint(w: &CMat) -> Result<CVec> {
    let m = w.nrows();
    if m != w.ncols() {
        return Err(Error::dim("adjoint requires a square matrix"));
    }
    let drift = linalg::hermitian_drift(w);
    let scale = w.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if drift > 1e-8 * (1.0 + scale) {
        return Err(Error::NonHermitian {
            drift,
            tol: 1e-8 * (1.0 + scale),
        });
    }
    let mut v = CVec::zeros(m);
    for d in 0..m {
        let mut s = C64::new(0.0, 0.0);
        for j in 0..m - d {
            s += w[(j, j + d)];
        }
        v[d] = if d == 0 { C64::new(s.re, 0.0) } else { 2.0 * s };
    }
    Ok(v)
}

/// Projection onto the Hermitian PSD cone in Frobenius norm: symmetrize,
/// eigendecompose, clamp negative eigenvalues to zero.
pub fn psd_project(h: &CMat) -> Result<CMat> {
    let (vals, vecs) = linalg::hermitian_eig(h)?;
    let n = h.nrows();
    let n_neg = vals.iter().filter(|&&v| v < 0.0).count();
    if n_neg == 0 {
        // Already PSD; return the symmetrized input.
        let mut out = h.clone();
        linalg::symmetrize(&mut out);
        return Ok(out);
    }
    // Reconstruct from whichever side has fewer terms.
    if n_neg >= n / 2 {
        let mut out = CMat::zeros(n, n);
        for k in 0..n {
            if vals[k] > 0.0 {
                let v = vecs.column(k);
                let vk = CVec::from_column_slice(v.as_slice());
                out.gerc(C64::new(vals[k], 0.0), &vk, &vk, C64::new(1.0, 0.0));
            }
        }
        linalg::symmetrize(&mut out);
        Ok(out)
    } else {
        let mut out = h.clone();
        linalg::symmetrize(&mut out);
        for k in 0..n {
            if vals[k] < 0.0 {
                let v = vecs.column(k);
                let vk = CVec::from_column_slice(v.as_slice());
                out.gerc(C64::new(-vals[k], 0.0), &vk, &vk, C64::new(1.0, 0.0));
            }
        }
        linalg::symmetrize(&mut out);
        Ok(out)
    }
}

/// Result of the Vandermonde decomposition T(u) = A(f) diag(p) A(f)^H.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VandermondeResult {
    /// Recovered frequencies in [0, 1), ascending.
    pub freqs: Vec<f64>,
    /// Matching positive weights.
    pub powers: Vec<f64>,
    /// Numerical rank used for the annihilating filter.
    pub rank: usize,
    /// Frobenius mismatch ||T(u) - A diag(p) A^H||_F.
    pub residual: f64,
    /// Set when the filter system was poorly conditioned.
    pub ill_conditioned: bool,
}

/// Vandermonde decomposition of a PSD, rank-deficient T(u) by Prony's method.
///
/// The numerical rank is r = #{lambda_i > rank_tol * lambda_max}; r = M is an
/// error (shift by the minimum eigenvalue first). The annihilating filter is
/// solved in least squares over all available windows of the moment sequence
/// and the powers over all 2M-1 equations by nonnegative least squares.
pub fn vandermonde_decompose(u: &ToeplitzParam, rank_tol: f64) -> Result<VandermondeResult> {
    let m = u.len();
    let t = u.matrix();
    let vals = linalg::hermitian_eigenvalues(&t)?;
    let lam_max = vals[m - 1];
    if lam_max <= 0.0 {
        // The zero matrix (or numerically indistinguishable from it).
        let tnorm = t.norm();
        if vals[0] < -rank_tol.max(1e-12) * tnorm.max(1.0) {
            return Err(Error::NotPsd {
                min_eig: vals[0],
                tol: rank_tol * tnorm,
            });
        }
        return Ok(VandermondeResult {
            freqs: Vec::new(),
            powers: Vec::new(),
            rank: 0,
            residual: tnorm,
            ill_conditioned: false,
        });
    }
    if vals[0] < -rank_tol * lam_max {
        return Err(Error::NotPsd {
            min_eig: vals[0],
            tol: rank_tol * lam_max,
        });
    }
    let rank = vals.iter().filter(|&&v| v > rank_tol * lam_max).count();
    if rank == m {
        return Err(Error::FullRank { rank });
    }
    if rank == 0 {
        return Ok(VandermondeResult {
            freqs: Vec::new(),
            powers: Vec::new(),
            rank: 0,
            residual: t.norm(),
            ill_conditioned: false,
        });
    }

    // Two-sided moment sequence b_m, m = -(M-1)..(M-1).
    let b = |mm: i64| -> C64 {
        if mm >= 0 {
            u.as_vec()[mm as usize]
        } else {
            u.as_vec()[(-mm) as usize].conj()
        }
    };

    // Annihilating filter h (h_0 = 1): sum_k h_k b_{m-k} = -b_m for all m
    // with every index in range.
    let r = rank;
    let n_eq = 2 * m - 1 - r;
    let mut mat = CMat::zeros(n_eq, r);
    let mut rhs = CVec::zeros(n_eq);
    for (row, mm) in ((1 - m as i64 + r as i64)..=(m as i64 - 1)).enumerate() {
        for k in 1..=r {
            mat[(row, k - 1)] = b(mm - k as i64);
        }
        rhs[row] = -b(mm);
    }
    let svals = linalg::singular_values(&mat)?;
    let smax = svals.first().copied().unwrap_or(0.0);
    let smin = svals.last().copied().unwrap_or(0.0);
    let ill_conditioned = smin <= 1e-12 * smax;
    let (h, _) = linalg::lstsq_complex(&mat, &rhs, 1e-13)?;

    // Roots of z^r H(z) = h_r + h_{r-1} z + ... + h_1 z^{r-1} + z^r, in
    // ascending order: coefficient of z^j is h_{r-j} (h_0 = 1).
    let mut coeffs_asc = vec![C64::new(0.0, 0.0); r + 1];
    for (j, c) in coeffs_asc.iter_mut().enumerate() {
        *c = if j == r { C64::new(1.0, 0.0) } else { h[r - 1 - j] };
    }
    let roots = polynomial_roots(&coeffs_asc);

    // Keep angles only (radial projection to the unit circle); degenerate
    // zero roots cannot carry a frequency and are dropped.
    let mut degenerate = false;
    let mut angles: Vec<f64> = Vec::with_capacity(roots.len());
    for z in &roots {
        if z.norm() < 1e-12 {
            degenerate = true;
            continue;
        }
        angles.push(z.arg());
    }

    // Merge angularly indistinguishable roots.
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut merged: Vec<f64> = Vec::with_capacity(angles.len());
    for ang in angles {
        match merged.last() {
            Some(&last) if (ang - last).abs() < ROOT_MERGE_TOL => {}
            _ => merged.push(ang),
        }
    }
    // Wrap-around pair at +/- pi.
    if merged.len() >= 2 {
        let first = merged[0];
        let last = *merged.last().unwrap();
        if (first + TAU - last).abs() < ROOT_MERGE_TOL {
            merged.pop();
        }
    }

    let mut freqs: Vec<f64> = merged
        .into_iter()
        .map(|ang| (-ang / TAU).rem_euclid(1.0))
        .collect();
    freqs.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Powers from all 2M-1 moment equations, stacked into a real system.
    let k = freqs.len();
    let rows = 2 * m - 1;
    let mut a_re = DMatrix::<f64>::zeros(2 * rows, k);
    let mut b_re = DVector::<f64>::zeros(2 * rows);
    for (row, mm) in ((1 - m as i64)..=(m as i64 - 1)).enumerate() {
        for (col, f) in freqs.iter().enumerate() {
            let tkm = C64::from_polar(1.0, -TAU * f * mm as f64);
            a_re[(row, col)] = tkm.re;
            a_re[(rows + row, col)] = tkm.im;
        }
        let bm = b(mm);
        b_re[row] = bm.re;
        b_re[rows + row] = bm.im;
    }
    let p = nnls(&a_re, &b_re);

    let mut out_freqs = Vec::with_capacity(k);
    let mut out_powers = Vec::with_capacity(k);
    for (col, f) in freqs.iter().enumerate() {
        if p[col] > 0.0 {
            out_freqs.push(*f);
            out_powers.push(p[col]);
        }
    }

    let recon = ToeplitzParam::from_components(&out_freqs, &out_powers, m)?;
    let residual = linalg::frob_diff(&t, &recon.matrix());

    Ok(VandermondeResult {
        freqs: out_freqs,
        powers: out_powers,
        rank,
        residual,
        ill_conditioned: ill_conditioned || degenerate,
    })
}

/// Shift away the minimum eigenvalue: returns (u - delta e_1, delta) with
/// delta = lambda_min(T(u)), so the shifted matrix is PSD and rank deficient.
pub fn min_eig_shift(u: &ToeplitzParam) -> Result<(ToeplitzParam, f64)> {
    let vals = linalg::hermitian_eigenvalues(&u.matrix())?;
    let delta = vals[0];
    let mut shifted = u.as_vec().clone();
    shifted[0] -= C64::new(delta, 0.0);
    Ok((ToeplitzParam::new(shifted)?, delta))
}

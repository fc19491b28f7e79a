//! Nonnegative least squares by the Lawson-Hanson active set method.
//!
//! Solves min ||A x - b||_2 subject to x >= 0 for modest sizes (the power
//! recovery step of the Vandermonde decomposition uses a few hundred rows and
//! up to M-1 columns).

use nalgebra::{DMatrix, DVector};

const MAX_OUTER_FACTOR: usize = 10;

pub fn nnls(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    let (m, n) = a.shape();
    debug_assert_eq!(m, b.len());
    let mut x = DVector::<f64>::zeros(n);
    if n == 0 {
        return x;
    }
    let mut passive = vec![false; n];
    let scale = a.amax().max(1e-300) * b.amax().max(1e-300);
    let tol = 1e-12 * scale.max(1e-300) * (m.max(n) as f64);

    let mut resid = b - a * &x;
    for _ in 0..MAX_OUTER_FACTOR * n {
        // Gradient of 1/2||Ax-b||^2 is -A^T r; pick the most negative over
        // the active set.
        let w = a.transpose() * &resid;
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if !passive[j] && w[j] > tol {
                if best.map_or(true, |(_, v)| w[j] > v) {
                    best = Some((j, w[j]));
                }
            }
        }
        let Some((enter, _)) = best else { break };
        passive[enter] = true;

        loop {
            let idx: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
            let sub = a.select_columns(idx.iter());
            let sol = lstsq(&sub, b);
            if sol.iter().all(|&v| v > 0.0) {
                x.fill(0.0);
                for (k, &j) in idx.iter().enumerate() {
                    x[j] = sol[k];
                }
                break;
            }
            // Step toward the subproblem solution until the first passive
            // variable hits zero, then drop it.
            let mut alpha = f64::INFINITY;
            for (k, &j) in idx.iter().enumerate() {
                if sol[k] <= 0.0 {
                    let step = x[j] / (x[j] - sol[k]);
                    if step < alpha {
                        alpha = step;
                    }
                }
            }
            if !alpha.is_finite() {
                alpha = 0.0;
            }
            for (k, &j) in idx.iter().enumerate() {
                x[j] += alpha * (sol[k] - x[j]);
                if x[j] <= tol.max(1e-300) {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
            if !passive.iter().any(|&p| p) {
                break;
            }
        }
        resid = b - a * &x;
    }
    x
}

fn lstsq(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    crate::linalg::lstsq_real(a, b, 1e-13)
        .map(|(x, _)| x)
        .unwrap_or_else(|_| DVector::zeros(a.ncols()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_nonnegative_solution_exactly() {
        let a = DMatrix::from_row_slice(4, 3, &[
            1.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, //
            0.0, 0.0, 1.0, //
            1.0, 1.0, 1.0,
        ]);
        let x_true = DVector::from_vec(vec![2.0, 0.5, 3.0]);
        let b = &a * &x_true;
        let x = nnls(&a, &b);
        assert!((x - x_true).amax() < 1e-10);
    }

    #[test]
    fn clamps_negative_component() {
        // Unconstrained solution is x = (-1, 2); NNLS must zero the first.
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1.0]);
        let b = DVector::from_vec(vec![-1.0, 2.0]);
        let x = nnls(&a, &b);
        assert_eq!(x[0], 0.0);
        assert!((x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn randomized_instances_match_projection_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for trial in 0..50 {
            let m = 8 + (trial % 5);
            let n = 3 + (trial % 4);
            let a = DMatrix::from_fn(m, n, |_, _| rng.gen::<f64>() - 0.3);
            let x_true = DVector::from_fn(n, |i, _| {
                if i % 2 == 0 {
                    rng.gen::<f64>() * 2.0
                } else {
                    0.0
                }
            });
            let b = &a * &x_true;
            let x = nnls(&a, &b);
            // The fit must be at least as good as the generating point and
            // feasible.
            assert!(x.iter().all(|&v| v >= 0.0));
            let r_x = (&a * &x - &b).norm();
            assert!(r_x < 1e-8 * b.norm().max(1.0), "residual {r_x}");
        }
    }
}


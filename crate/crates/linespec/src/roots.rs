//! Polynomial root finding by the Aberth-Ehrlich method.
//!
//! Used for the annihilating-filter roots in the Vandermonde decomposition and
//! for the root-MUSIC noise-spectrum polynomial, both of which have roots on
//! or near the unit circle at degrees up to a few hundred. Starting points
//! follow Bini's rule (radii from the upper convex hull of the coefficient
//! log-magnitudes), updates are simultaneous Newton corrections with the
//! Aberth repulsion term applied Gauss-Seidel style.

use crate::linalg::C64;

const CONVERGE_EPS: f64 = 1e-13;
const MAX_SWEEPS: usize = 600;

/// All complex roots of c[0] + c[1] z + ... + c[n] z^n.
///
/// Leading coefficients that vanish relative to the largest coefficient are
/// trimmed; zero trailing coefficients contribute exact roots at the origin.
/// Returns an empty vector for constant (or identically zero) polynomials.
pub fn polynomial_roots(coeffs: &[C64]) -> Vec<C64> {
    let max_mag = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max_mag == 0.0 {
        return Vec::new();
    }
    // Trim only structural zeros; tiny-but-nonzero end coefficients encode
    // genuine far-out (or near-origin) roots the caller may discard itself.
    let tiny = max_mag * 1e-250;

    let mut hi = coeffs.len() - 1;
    while hi > 0 && coeffs[hi].norm() <= tiny {
        hi -= 1;
    }
    let mut lo = 0;
    while lo < hi && coeffs[lo].norm() <= tiny {
        lo += 1;
    }
    let mut roots = vec![C64::new(0.0, 0.0); lo];
    let c: Vec<C64> = coeffs[lo..=hi].iter().map(|x| x / max_mag).collect();
    let n = c.len() - 1;
    if n == 0 {
        return roots;
    }
    if n == 1 {
        roots.push(-c[0] / c[1]);
        return roots;
    }
    if n == 2 {
        roots.extend(quadratic_roots(c[0], c[1], c[2]));
        return roots;
    }

    let mut z = bini_start_points(&c);
    let rev: Vec<C64> = c.iter().rev().cloned().collect();
    let mut done = vec![false; n];

    for _ in 0..MAX_SWEEPS {
        let mut all_done = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let zi = z[i];
            let newton = newton_correction(&c, &rev, zi);
            let newton = match newton {
                Some(nc) => nc,
                None => {
                    // Derivative vanished away from a root; nudge and retry
                    // next sweep.
                    z[i] = zi + C64::new(1e-6, 1e-6) * (1.0 + zi.norm());
                    all_done = false;
                    continue;
                }
            };
            if newton.norm() <= CONVERGE_EPS * (1.0 + zi.norm()) {
                done[i] = true;
                continue;
            }
            let mut repulsion = C64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = zi - z[j];
                    if d.norm() > 1e-300 {
                        repulsion += C64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = C64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-12 {
                newton / denom
            } else {
                newton
            };
            z[i] = zi - step;
            if step.norm() <= CONVERGE_EPS * (1.0 + z[i].norm()) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }

    roots.extend(z);
    roots
}

/// Stable quadratic formula for c0 + c1 z + c2 z^2.
fn quadratic_roots(c0: C64, c1: C64, c2: C64) -> [C64; 2] {
    let disc = (c1 * c1 - 4.0 * c2 * c0).sqrt();
    // Pick the sign that avoids cancellation in -c1 +/- disc.
    let q = if (c1 + disc).norm() >= (c1 - disc).norm() {
        -0.5 * (c1 + disc)
    } else {
        -0.5 * (c1 - disc)
    };
    let r1 = q / c2;
    let r2 = if q.norm() > 0.0 { c0 / q } else { -c1 / c2 - r1 };
    [r1, r2]
}

/// Newton correction p(z)/p'(z), evaluated through the reversed polynomial
/// when |z| > 1 to avoid overflow. None when the derivative vanishes while
/// p(z) does not.
fn newton_correction(c: &[C64], rev: &[C64], z: C64) -> Option<C64> {
    let n = c.len() - 1;
    if z.norm() <= 1.0 {
        let (p, dp) = horner_with_derivative(c, z);
        if p.norm() == 0.0 {
            return Some(C64::new(0.0, 0.0));
        }
        if dp.norm() == 0.0 {
            return None;
        }
        Some(p / dp)
    } else {
        // p(z) = z^n q(1/z) with q the reversed polynomial; then
        // p/p' = z q(w) / (n q(w) - w q'(w)), w = 1/z.
        let w = C64::new(1.0, 0.0) / z;
        let (q, dq) = horner_with_derivative(rev, w);
        if q.norm() == 0.0 {
            return Some(C64::new(0.0, 0.0));
        }
        let denom = q * (n as f64) - w * dq;
        if denom.norm() == 0.0 {
            return None;
        }
        Some(z * q / denom)
    }
}

fn horner_with_derivative(c: &[C64], z: C64) -> (C64, C64) {
    let mut p = c[c.len() - 1];
    let mut dp = C64::new(0.0, 0.0);
    for k in (0..c.len() - 1).rev() {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    (p, dp)
}

/// Bini starting points: radii from the slopes of the upper convex hull of
/// (k, ln|c_k|), angles spread per hull segment with a fixed offset.
fn bini_start_points(c: &[C64]) -> Vec<C64> {
    let n = c.len() - 1;
    let logs: Vec<f64> = c
        .iter()
        .map(|x| {
            let m = x.norm();
            if m > 0.0 {
                m.ln()
            } else {
                f64::NEG_INFINITY
            }
        })
        .collect();

    // Upper convex hull by monotone chain over (k, logs[k]).
    let mut hull: Vec<usize> = Vec::new();
    for k in 0..=n {
        if logs[k].is_infinite() {
            continue;
        }
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b as f64 - a as f64) * (logs[k] - logs[a])
                - (k as f64 - a as f64) * (logs[b] - logs[a]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(k);
    }

    let mut z = Vec::with_capacity(n);
    let sigma = 0.7;
    for seg in hull.windows(2) {
        let (k0, k1) = (seg[0], seg[1]);
        let m = k1 - k0;
        let r = ((c[k0].norm() / c[k1].norm()).powf(1.0 / m as f64)).clamp(1e-8, 1e8);
        for j in 0..m {
            let ang = 2.0 * std::f64::consts::PI * (j as f64 / m as f64 + k1 as f64 / n as f64)
                + sigma;
            z.push(C64::from_polar(r, ang));
        }
    }
    // Degenerate hulls (single vertex) fall back to the unit circle.
    while z.len() < n {
        let j = z.len();
        let ang = 2.0 * std::f64::consts::PI * j as f64 / n as f64 + sigma;
        z.push(C64::from_polar(1.0, ang));
    }
    z.truncate(n);
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_from_roots(roots: &[C64]) -> Vec<C64> {
        let mut c = vec![C64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![C64::new(0.0, 0.0); c.len() + 1];
            for (k, ck) in c.iter().enumerate() {
                next[k + 1] += ck;
                next[k] -= ck * r;
            }
            c = next;
        }
        c
    }

    fn assert_root_set_close(found: &[C64], expected: &[C64], tol: f64) {
        assert_eq!(found.len(), expected.len());
        let mut used = vec![false; expected.len()];
        for f in found {
            let mut best = (f64::INFINITY, 0usize);
            for (j, e) in expected.iter().enumerate() {
                if !used[j] {
                    let d = (f - e).norm();
                    if d < best.0 {
                        best = (d, j);
                    }
                }
            }
            assert!(best.0 < tol, "root {f} off by {:.3e}", best.0);
            used[best.1] = true;
        }
    }

    #[test]
    fn roots_of_unity() {
        let n = 16;
        let mut c = vec![C64::new(0.0, 0.0); n + 1];
        c[0] = C64::new(-1.0, 0.0);
        c[n] = C64::new(1.0, 0.0);
        let roots = polynomial_roots(&c);
        let expected: Vec<C64> = (0..n)
            .map(|k| C64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect();
        assert_root_set_close(&roots, &expected, 1e-10);
    }

    #[test]
    fn separated_unit_circle_roots_moderate_degree() {
        // Jittered grid on the circle, separation ~ 1/n. Constructing the
        // coefficients already perturbs the roots by ~1e-6 at this degree,
        // so accuracy is asserted through the polynomial residual: the found
        // roots must be far better zeros than the nominal ones.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let n = 48;
        let expected: Vec<C64> = (0..n)
            .map(|k| {
                let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.8 * rng.gen::<f64>())
                    / n as f64;
                C64::from_polar(1.0, ang)
            })
            .collect();
        let c = poly_from_roots(&expected);
        let roots = polynomial_roots(&c);
        assert_eq!(roots.len(), n);
        let horner = |z: C64| {
            let mut p = c[n];
            for k in (0..n).rev() {
                p = p * z + c[k];
            }
            p
        };
        for z in &roots {
            assert!(horner(*z).norm() < 1e-11, "large residual at {z}");
        }
        // All nominal roots are located to within the construction error.
        assert_root_set_close(&roots, &expected, 1e-5);
    }

    #[test]
    fn mixed_radii_roots() {
        let expected = vec![
            C64::new(0.01, 0.0),
            C64::new(0.0, 5.0),
            C64::new(-3.0, 1.0),
            C64::new(0.5, -0.5),
            C64::new(100.0, 0.0),
        ];
        let c = poly_from_roots(&expected);
        let roots = polynomial_roots(&c);
        assert_root_set_close(&roots, &expected, 1e-7);
    }

    #[test]
    fn trailing_zero_coefficients_give_origin_roots() {
        // z^2 (z - 2)
        let c = vec![
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(-2.0, 0.0),
            C64::new(1.0, 0.0),
        ];
        let roots = polynomial_roots(&c);
        let expected = vec![
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(2.0, 0.0),
        ];
        assert_root_set_close(&roots, &expected, 1e-12);
    }

    #[test]
    fn constant_polynomial_has_no_roots() {
        assert!(polynomial_roots(&[C64::new(3.0, 0.0)]).is_empty());
        assert!(polynomial_roots(&[]).is_empty());
    }
}



//! Numerical integration: Gauss-Legendre and Gauss-Hermite rules generated
//! by Newton iteration on the orthogonal-polynomial recurrences, an adaptive
//! bisection integrator with a two-order error estimate, and a semi-infinite
//! transform for improper integrals.

use crate::specfun::Error;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// Roots of P_n found by Newton from the Chebyshev-like initial guesses
/// cos(pi (i + 0.75) / (n + 0.5)); weights w = 2 / ((1 - x^2) P_n'(x)^2).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) as f64 * z * p2 - j as f64 * p3) / (j + 1) as f64;
            }
            let pp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() < 1e-15 {
                let weight = 2.0 / ((1.0 - z * z) * pp * pp);
                x[i] = -z;
                x[n - 1 - i] = z;
                w[i] = weight;
                w[n - 1 - i] = weight;
                break;
            }
        }
    }
    (x, w)
}

/// Nodes and weights of the n-point Gauss-Hermite rule
/// (weight exp(-x^2) on the whole line).
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = (n + 1) / 2;
    let mut z = 0.0;
    let mut z_prev = 0.0;
    let mut z_prev2 = 0.0;
    for i in 0..m {
        // standard initial guesses, largest root first
        z = match i {
            0 => {
                let an = (2 * n + 1) as f64;
                an.sqrt() - 1.85575 * an.powf(-1.0 / 6.0)
            }
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * z_prev2,
            3 => 1.91 * z - 0.91 * z_prev2,
            _ => 2.0 * z - z_prev2,
        };
        let mut pp = 0.0;
        for _ in 0..200 {
            // orthonormal Hermite recurrence
            let mut p1 = std::f64::consts::PI.powf(-0.25);
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = z * (2.0 / (j as f64 + 1.0)).sqrt() * p2
                    - (j as f64 / (j as f64 + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * n as f64).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() < 1e-14 {
                break;
            }
        }
        z_prev2 = z_prev;
        z_prev = z;
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

fn gl_cached() -> &'static ((Vec<f64>, Vec<f64>), (Vec<f64>, Vec<f64>)) {
    use std::sync::OnceLock;
    static RULES: OnceLock<((Vec<f64>, Vec<f64>), (Vec<f64>, Vec<f64>))> = OnceLock::new();
    RULES.get_or_init(|| (gauss_legendre(16), gauss_legendre(32)))
}

fn eval_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let ((x16, w16), (x32, w32)) = gl_cached();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s16 = 0.0;
    for (xi, wi) in x16.iter().zip(w16) {
        s16 += wi * f(c + h * xi);
    }
    let mut s32 = 0.0;
    for (xi, wi) in x32.iter().zip(w32) {
        s32 += wi * f(c + h * xi);
    }
    let v16 = s16 * h;
    let v32 = s32 * h;
    Panel { a, b, value: v32, err: (v32 - v16).abs().max(f64::EPSILON * v32.abs()) }
}

/// Adaptive integration of `f` over the finite interval [a, b] to an
/// absolute error target, splitting the worst panel first. The error
/// estimate on each panel is the difference between nested 16- and 32-point
/// Gauss-Legendre values.
pub fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, abs_tol: f64) -> Result<QuadResult, Error> {
    const MAX_PANELS: usize = 4000;
    let mut panels = vec![eval_panel(f, a, b)];
    let mut evals = 48;
    loop {
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        if total_err <= abs_tol || panels.len() >= MAX_PANELS {
            let value = panels.iter().map(|p| p.value).sum();
            if total_err > abs_tol {
                return Err(Error::AccuracyNotReached { achieved: total_err, target: abs_tol });
            }
            return Ok(QuadResult { value, err_estimate: total_err, evaluations: evals });
        }
        // split the worst panel
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).unwrap())
            .unwrap();
        let Panel { a, b, .. } = panels.swap_remove(idx);
        let mid = 0.5 * (a + b);
        panels.push(eval_panel(f, a, mid));
        panels.push(eval_panel(f, mid, b));
        evals += 96;
    }
}

/// Adaptive integration of `f` over (0, inf) through the substitution
/// x = scale * t / (1 - t), t in (0, 1). `scale` should sit near the bulk of
/// the integrand's mass (it maps to t = 1/2).
pub fn semi_infinite<F: Fn(f64) -> f64>(f: &F, scale: f64, abs_tol: f64) -> Result<QuadResult, Error> {
    assert!(scale > 0.0 && scale.is_finite());
    let g = |t: f64| {
        let one_minus = 1.0 - t;
        let x = scale * t / one_minus;
        if !x.is_finite() {
            return 0.0;
        }
        let jac = scale / (one_minus * one_minus);
        let v = f(x) * jac;
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    adaptive(&g, 0.0, 1.0, abs_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gauss_legendre_rule_sanity() {
        let (x, w) = gauss_legendre(16);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let sum_x2: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi * xi).sum();
        assert!((sum_x2 - 2.0 / 3.0).abs() < 1e-14);
        // degree-30 polynomial is integrated exactly by the 16-point rule
        let sum_x30: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(30)).sum();
        assert!(((sum_x30 - 2.0 / 31.0) / (2.0 / 31.0)).abs() < 1e-12);
    }

    #[test]
    fn gauss_hermite_rule_sanity() {
        let (x, w) = gauss_hermite(64);
        let s0: f64 = w.iter().sum();
        let s2: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi * xi).sum();
        let s4: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(4)).sum();
        let sqrt_pi = PI.sqrt();
        assert!(((s0 - sqrt_pi) / sqrt_pi).abs() < 1e-13, "sum w = {s0}");
        assert!(((s2 - sqrt_pi / 2.0) / sqrt_pi).abs() < 1e-13);
        assert!(((s4 - 0.75 * sqrt_pi) / sqrt_pi).abs() < 1e-13);
        // an analytic non-polynomial: int exp(-x^2) cos(2x) = sqrt(pi) e^{-1}
        let sc: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * (2.0 * xi).cos()).sum();
        assert!(((sc - sqrt_pi * (-1.0f64).exp()) / sc).abs() < 1e-12);
    }

    #[test]
    fn adaptive_known_integrals() {
        let r = adaptive(&|x: f64| x.sin(), 0.0, PI, 1e-12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-11);
        // integrable endpoint singularity
        let r = adaptive(&|x: f64| x.powf(-0.4), 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value - 1.0 / 0.6).abs() < 2e-9, "got {}", r.value);
    }

    #[test]
    fn semi_infinite_known_integrals() {
        // int_0^inf e^{-x} = 1
        let r = semi_infinite(&|x: f64| (-x).exp(), 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11);
        // int_0^inf x^3 e^{-x} = 6, bulk near x = 3
        let r = semi_infinite(&|x: f64| x.powi(3) * (-x).exp(), 3.0, 1e-11).unwrap();
        assert!((r.value - 6.0).abs() < 1e-9);
        // Gaussian bump far from the scale point still found by subdivision
        let r = semi_infinite(&|x: f64| (-(x - 50.0) * (x - 50.0) / 2.0).exp(), 5.0, 1e-10).unwrap();
        assert!(((r.value - (2.0 * PI).sqrt()) / r.value).abs() < 1e-8);
    }
}

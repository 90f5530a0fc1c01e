//! Modified Bessel functions of the second kind, orders 0, 1, 2.
//!
//! For x < 2 the ascending series (A&S 9.6.11) are used:
//!
//! ```text
//! K0(x) = -ln(x/2) I0(x) + sum_k psi(k+1) (x^2/4)^k / (k!)^2
//! K1(x) = 1/x + ln(x/2) I1(x)
//!         - (x/4) sum_k [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
//! ```
//!
//! For x >= 2 the integral representation K_nu(x) = int_0^inf
//! exp(-x cosh t) cosh(nu t) dt is mapped through cosh t = 1 + w^2/x onto
//! the Gauss-Hermite weight:
//!
//! ```text
//! K0(x) = e^-x int e^{-w^2} (w^2 + 2x)^{-1/2} dw
//! K1(x) = e^-x int e^{-w^2} (1 + w^2/x) (w^2 + 2x)^{-1/2} dw
//! ```
//!
//! where the integrals run over the whole line; a fixed 64-point rule is
//! machine-precise there (the integrand's complex singularities sit at
//! +-i sqrt(2x), at least 2i away from the real axis).
//!
//! K2 comes from the three-term recurrence K2 = K0 + (2/x) K1.

use super::Error;
use crate::quad::gauss_hermite;
use std::sync::OnceLock;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const SERIES_MAX_X: f64 = 2.0;

fn hermite_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_hermite(64))
}

fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0; // (x^2/4)^k / (k!)^2
    let mut psi = -EULER_GAMMA; // psi(k+1)
    let mut i0 = 0.0;
    let mut s = 0.0;
    for k in 0..64 {
        i0 += term;
        s += psi * term;
        let kf = (k + 1) as f64;
        term *= q / (kf * kf);
        psi += 1.0 / kf;
        if term * (1.0 + psi.abs()) < 1e-18 * (i0 + s.abs()) {
            break;
        }
    }
    -(0.5 * x).ln() * i0 + s
}

fn k1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0; // (x^2/4)^k / (k! (k+1)!)
    let mut psi_a = -EULER_GAMMA; // psi(k+1)
    let mut psi_b = 1.0 - EULER_GAMMA; // psi(k+2)
    let mut i1 = 0.0;
    let mut s = 0.0;
    for k in 0..64 {
        i1 += term;
        s += (psi_a + psi_b) * term;
        let kf = (k + 1) as f64;
        term *= q / (kf * (kf + 1.0));
        psi_a += 1.0 / kf;
        psi_b += 1.0 / (kf + 1.0);
        if term * (1.0 + psi_a.abs() + psi_b.abs()) < 1e-18 * (i1 + s.abs()) {
            break;
        }
    }
    1.0 / x + (0.5 * x).ln() * (0.5 * x) * i1 - 0.25 * x * s
}

fn k0_large(x: f64) -> f64 {
    let (nodes, weights) = hermite_rule();
    let mut s = 0.0;
    for (wi, wg) in nodes.iter().zip(weights) {
        s += wg / (wi * wi + 2.0 * x).sqrt();
    }
    (-x).exp() * s
}

fn k1_large(x: f64) -> f64 {
    let (nodes, weights) = hermite_rule();
    let mut s = 0.0;
    for (wi, wg) in nodes.iter().zip(weights) {
        s += wg * (1.0 + wi * wi / x) / (wi * wi + 2.0 * x).sqrt();
    }
    (-x).exp() * s
}

pub(crate) fn k0(x: f64) -> f64 {
    if x < SERIES_MAX_X {
        k0_series(x)
    } else {
        k0_large(x)
    }
}

pub(crate) fn k1(x: f64) -> f64 {
    if x < SERIES_MAX_X {
        k1_series(x)
    } else {
        k1_large(x)
    }
}

/// Modified Bessel function of the second kind K_nu(x) for nu in {0, 1, 2}
/// and x > 0, with relative error below 1e-10 (in practice near machine
/// precision).
pub fn bessel_k(order: u32, x: f64) -> Result<f64, Error> {
    if !(x > 0.0) {
        return Err(Error::Domain { func: "bessel_k", arg: x });
    }
    match order {
        0 => Ok(k0(x)),
        1 => Ok(k1(x)),
        2 => Ok(k0(x) + 2.0 / x * k1(x)),
        _ => Err(Error::Domain { func: "bessel_k(order)", arg: order as f64 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive;

    fn assert_rel(actual: f64, expected: f64, tol: f64) {
        let err = ((actual - expected) / expected).abs();
        assert!(err <= tol, "got {actual:e}, expected {expected:e} (rel {err:e})");
    }

    // 50-digit reference values truncated to f64
    const TABLE: &[(f64, f64, f64, f64)] = &[
        (0.01, 4.7212447301610950, 99.973894118296248, 19999.500068389411),
        (0.1, 2.4270690247020166, 9.8538447808706061, 199.50396464211414),
        (0.5, 0.92441907122766586, 1.6564411200033009, 7.5501835512408694),
        (1.0, 0.42102443824070833, 0.60190723019723457, 1.6248388986351775),
        (1.9, 0.12884597927604748, 0.15966015303266761, 0.29690929825780286),
        (2.0, 0.11389387274953344, 0.13986588181652243, 0.25375975456605586),
        (2.1, 0.10078374088996695, 0.12274641153350791, 0.21768508520759353),
        (3.5, 0.019598897170368489, 0.022239392925923834, 0.032307121699467823),
        (5.0, 0.0036910983340425943, 0.0040446134454521642, 0.0053089437122234600),
        (10.0, 1.7780062316167652e-5, 1.8648773453825585e-5, 2.1509817006932769e-5),
        (30.0, 2.1324774964630564e-14, 2.1677320018915494e-14, 2.2769929632558263e-14),
        (50.0, 3.4101677497894955e-23, 3.4441022267175556e-23, 3.5479318388581977e-23),
    ];

    #[test]
    fn reference_table() {
        for &(x, r0, r1, r2) in TABLE {
            assert_rel(bessel_k(0, x).unwrap(), r0, 1e-12);
            assert_rel(bessel_k(1, x).unwrap(), r1, 1e-12);
            assert_rel(bessel_k(2, x).unwrap(), r2, 1e-12);
        }
    }

    #[test]
    fn k0_at_one_vs_integral_representation() {
        // independent oracle: K0(1) = int_0^inf exp(-cosh t) dt by adaptive
        // quadrature (truncated where exp(-cosh t) underflows)
        let oracle = adaptive(&|t: f64| (-t.cosh()).exp(), 0.0, 8.0, 1e-13).unwrap();
        assert_rel(bessel_k(0, 1.0).unwrap(), oracle.value, 1e-11);
        assert_rel(oracle.value, 0.4210244382, 1e-9);
    }

    #[test]
    fn recurrence_identity() {
        // K2(x) - K0(x) = (2/x) K1(x) to 1e-9 relative over [0.01, 30]
        let mut x = 0.01;
        while x <= 30.0 {
            let k0v = bessel_k(0, x).unwrap();
            let k1v = bessel_k(1, x).unwrap();
            let k2v = bessel_k(2, x).unwrap();
            assert_rel(k2v - k0v, 2.0 / x * k1v, 1e-9);
            x *= 1.37;
        }
    }

    #[test]
    fn asymptotic_envelope_at_50() {
        // K0(x) ~ sqrt(pi/(2x)) e^{-x} (1 - 1/(8x) + ...)
        let x = 50.0;
        let lead = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
        assert_rel(bessel_k(0, x).unwrap(), lead * (1.0 - 1.0 / (8.0 * x)), 1e-4);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(bessel_k(0, 0.0), Err(Error::Domain { .. })));
        assert!(matches!(bessel_k(1, -2.0), Err(Error::Domain { .. })));
        assert!(matches!(bessel_k(3, 1.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn series_quadrature_seam_is_smooth() {
        // both branches agree in a band around the switch point
        for &x in &[1.995, 1.999, 2.0, 2.001, 2.2] {
            assert_rel(k0_series(x), k0_large(x), 1e-12);
            assert_rel(k1_series(x), k1_large(x), 1e-12);
        }
    }
}

//! The three fixed Meijer-G instances behind the single-reflector capacity.
//!
//! Each instance is defined by its Mellin-Barnes integral
//!
//! ```text
//! G(z) = 1/(2 pi i) int_L F(s) z^s ds,   F(s) = prod Gamma(u_j + e_j s)^p_j
//! ```
//!
//! with L a vertical line separating the left pole chains (from the upper
//! parameters) from the right chains (from the lower parameters). The three
//! instances are the closed forms of the integrals
//! `int_0^inf K_nu(sqrt(x/rho)) ln(1 + rho x) x^(nu mod 2 ? -1/2 : 0) dx`
//! for nu = 0, 1, 2; all of them have repeated lower parameters, so their
//! small-z expansions are logarithmic.
//!
//! Two evaluation paths, selected by the argument:
//!
//! - `z >= 0.05`: direct quadrature along the vertical line (complex
//!   log-Gamma, composite Gauss-Legendre panels, truncation where the
//!   integrand drops below `rel_tol` times its peak). The integrand decays
//!   like exp(-2 pi |Im s|) for every instance.
//! - `z < 0.05`: the residue series over the right pole chains. Poles have
//!   order up to three; an order-r residue contributes
//!   z^s0 times a degree-(r-1) polynomial in ln z whose coefficients come
//!   from the local expansion ln g(s0 + eps) = ln g0 + D1 eps + D2 eps^2 of
//!   the regular part (digamma/trigamma values). The line quadrature loses
//!   roughly (s_min - sigma) * log10(1/z) digits to oscillatory cancellation
//!   as z -> 0, which is why it is not used there.
//!
//! Both paths are cross-checked against each other in the tests on an
//! overlap band, and against 50-digit reference values.

use num_complex::Complex64;
use std::sync::OnceLock;

use super::gamma::{digamma_unchecked, gamma_unchecked, ln_gamma_complex};
use super::{trigamma, Error, SeriesControl};
use crate::quad::gauss_legendre;

/// One Gamma factor Gamma(offset + slope * s)^power of a Mellin-Barnes
/// integrand; slope is +-1 and power +-1 for the instances used here.
#[derive(Debug, Clone, Copy)]
struct GammaFactor {
    offset: f64,
    slope: f64,
    power: i32,
}

/// The three admissible Meijer-G kernels.
///
/// Each one is the Mellin-Barnes closed form of a Bessel-K log integral:
/// `K0LogKernel` pairs with K0, `K1LogKernel` with K1 (carrying the extra
/// x^-1/2), `K2LogKernel` with K2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeijerGKind {
    /// G^{3,1}_{1,3}(z | -1; -1, -1, 0)
    K0LogKernel,
    /// G^{3,1}_{1,3}(z | -1/2; -1/2, -1/2, -1/2)
    K1LogKernel,
    /// G^{4,1}_{2,4}(z | -1, 0; -1, -1, -1, 1)
    K2LogKernel,
}

impl MeijerGKind {
    fn factors(self) -> &'static [GammaFactor] {
        const F: f64 = -1.0;
        match self {
            // Gamma(-1-s)^2 Gamma(-s) Gamma(2+s)
            MeijerGKind::K0LogKernel => &[
                GammaFactor { offset: -1.0, slope: F, power: 1 },
                GammaFactor { offset: -1.0, slope: F, power: 1 },
                GammaFactor { offset: 0.0, slope: F, power: 1 },
                GammaFactor { offset: 2.0, slope: 1.0, power: 1 },
            ],
            // Gamma(-1/2-s)^3 Gamma(3/2+s)
            MeijerGKind::K1LogKernel => &[
                GammaFactor { offset: -0.5, slope: F, power: 1 },
                GammaFactor { offset: -0.5, slope: F, power: 1 },
                GammaFactor { offset: -0.5, slope: F, power: 1 },
                GammaFactor { offset: 1.5, slope: 1.0, power: 1 },
            ],
            // Gamma(-1-s)^3 Gamma(1-s) Gamma(2+s) / Gamma(-s)
            MeijerGKind::K2LogKernel => &[
                GammaFactor { offset: -1.0, slope: F, power: 1 },
                GammaFactor { offset: -1.0, slope: F, power: 1 },
                GammaFactor { offset: -1.0, slope: F, power: 1 },
                GammaFactor { offset: 1.0, slope: F, power: 1 },
                GammaFactor { offset: 2.0, slope: 1.0, power: 1 },
                GammaFactor { offset: 0.0, slope: F, power: -1 },
            ],
        }
    }

    /// Default abscissa of the integration line, strictly between the pole
    /// chains, and the admissible open interval for overrides.
    fn contour(self) -> (f64, f64, f64) {
        match self {
            MeijerGKind::K0LogKernel => (-1.5, -2.0, -1.0),
            MeijerGKind::K1LogKernel => (-1.0, -1.5, -0.5),
            MeijerGKind::K2LogKernel => (-1.5, -2.0, -1.0),
        }
    }

    /// Start of the right pole chains (all chains are integer-spaced from
    /// the smallest lower parameter).
    fn chain_start(self) -> f64 {
        match self {
            MeijerGKind::K1LogKernel => -0.5,
            _ => -1.0,
        }
    }
}

/// A Meijer-G instance: one of the three fixed kernels at a positive
/// argument. Arbitrary parameter lists are deliberately not representable.
#[derive(Debug, Clone, Copy)]
pub struct MeijerGInstance {
    pub kind: MeijerGKind,
    pub argument: f64,
}

impl MeijerGInstance {
    pub fn new(kind: MeijerGKind, argument: f64) -> Result<Self, Error> {
        if !(argument > 0.0 && argument.is_finite()) {
            return Err(Error::Domain { func: "meijer_g(argument)", arg: argument });
        }
        Ok(Self { kind, argument })
    }
}

/// Below this argument the line quadrature gives way to the residue series.
const MB_MIN_Z: f64 = 0.05;

/// Evaluate the instance. Accuracy target: 1e-8 relative over
/// z in [1e-8, 10]; in practice both paths deliver close to machine
/// precision on their domains.
pub fn meijer_g(instance: MeijerGInstance, ctrl: &SeriesControl) -> Result<f64, Error> {
    ctrl.validate()?;
    if instance.argument < MB_MIN_Z {
        residue_series(instance.kind, instance.argument, ctrl)
    } else {
        let eval = mb_contour(instance.kind, instance.argument, ctrl)?;
        let target = 1e-8 * eval.value.abs();
        if eval.err_estimate > target.max(1e-300) {
            return Err(Error::AccuracyNotReached {
                achieved: eval.err_estimate / eval.value.abs().max(f64::MIN_POSITIVE),
                target: 1e-8,
            });
        }
        Ok(eval.value)
    }
}

// ---------------------------------------------------------------------------
// Mellin-Barnes line quadrature
// ---------------------------------------------------------------------------

/// Outcome of the contour quadrature: the real value, the tiny imaginary
/// residue left by the numerical line integral, and a two-resolution error
/// estimate.
#[derive(Debug, Clone, Copy)]
pub struct MbEval {
    pub value: f64,
    pub imag_residual: f64,
    pub err_estimate: f64,
}

fn log_integrand(factors: &[GammaFactor], s: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for f in factors {
        let lg = ln_gamma_complex(Complex64::new(f.offset, 0.0) + f.slope * s);
        acc += f.power as f64 * lg;
    }
    acc
}

fn gl16() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(16))
}

fn mb_pass(kind: MeijerGKind, z: f64, sigma: f64, t_max: f64, panels: usize) -> Complex64 {
    let factors = kind.factors();
    let ln_z = z.ln();
    let (xg, wg) = gl16();
    let mut total = Complex64::new(0.0, 0.0);
    let width = 2.0 * t_max / panels as f64;
    for p in 0..panels {
        let a = -t_max + p as f64 * width;
        let c = a + 0.5 * width;
        let mut acc = Complex64::new(0.0, 0.0);
        for (xi, wi) in xg.iter().zip(wg) {
            let t = c + 0.5 * width * xi;
            let s = Complex64::new(sigma, t);
            let v = (log_integrand(factors, s) + s * ln_z).exp();
            acc += *wi * v;
        }
        total += acc * (0.5 * width);
    }
    total / (2.0 * std::f64::consts::PI)
}

/// Vertical-line Mellin-Barnes quadrature of the instance at `z`.
///
/// The line Re s = sigma is cut off where the integrand magnitude falls
/// below `rel_tol` times its peak (the Gamma products decay like
/// exp(-2 pi |t|)), then covered by 16-point Gauss-Legendre panels. The
/// error estimate compares the full-resolution pass with a half-resolution
/// one.
pub fn mb_contour(kind: MeijerGKind, z: f64, ctrl: &SeriesControl) -> Result<MbEval, Error> {
    ctrl.validate()?;
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::Domain { func: "mb_contour", arg: z });
    }
    let (default_shift, lo, hi) = kind.contour();
    let sigma = ctrl.contour_shift.unwrap_or(default_shift);
    if !(sigma > lo && sigma < hi) {
        return Err(Error::InvalidControl(format!(
            "contour_shift {sigma} outside the pole-free band ({lo}, {hi})"
        )));
    }
    let factors = kind.factors();
    let ln_z = z.ln();
    let mag = |t: f64| -> f64 {
        let s = Complex64::new(sigma, t);
        (log_integrand(factors, s) + s * ln_z).re
    };
    let peak = mag(0.0);
    let cut = ctrl.rel_tol.ln() - 10.0f64.ln(); // one extra decade of margin
    let mut t_max = 2.0;
    while mag(t_max) - peak > cut && t_max < 80.0 {
        t_max += 1.0;
    }
    let panels = (ctrl.contour_points / 16).max(8);
    let full = mb_pass(kind, z, sigma, t_max, panels);
    let half = mb_pass(kind, z, sigma, t_max, (panels / 2).max(4));
    Ok(MbEval {
        value: full.re,
        imag_residual: full.im,
        err_estimate: (full - half).norm(),
    })
}

// ---------------------------------------------------------------------------
// Residue series (logarithmic small-z expansion)
// ---------------------------------------------------------------------------

const TRIGAMMA_ONE: f64 = 1.644_934_066_848_226_4; // pi^2/6

/// Sum of the residues of F(s) z^s over the right pole chains, negated
/// (clockwise closure). Converges for every z > 0 since p < q; used for
/// small z where the line quadrature cancels catastrophically.
pub fn residue_series(kind: MeijerGKind, z: f64, ctrl: &SeriesControl) -> Result<f64, Error> {
    ctrl.validate()?;
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::Domain { func: "residue_series", arg: z });
    }
    let factors = kind.factors();
    let ln_z = z.ln();
    let mut total = 0.0_f64;
    let mut consecutive_small = 0;
    let mut last_rel = f64::INFINITY;
    for k in 0..ctrl.max_terms {
        let s0 = kind.chain_start() + k as f64;
        // local expansion of the regular part g at s0:
        //   g(s0 + eps) = g0 exp(D1 eps + D2 eps^2 + ...)
        let mut order: i32 = 0;
        let mut g0 = 1.0_f64;
        let mut d1 = 0.0_f64;
        let mut d2 = 0.0_f64;
        for f in factors {
            let x0 = f.offset + f.slope * s0;
            let neg = -x0;
            if neg >= -1e-9 && (neg - neg.round()).abs() < 1e-9 {
                // Gamma factor at a pole: Gamma(x) = R(x) / (x + m) with
                // R(-m) = (-1)^m / m!, (ln R)'(-m) = psi(m+1),
                // (ln R)''(-m) = psi'(1) + H_m^(2)
                let m = neg.round() as u32;
                let mut r_m = 1.0;
                let mut h2 = 0.0;
                for j in 1..=m {
                    r_m /= -(j as f64);
                    h2 += 1.0 / (j as f64 * j as f64);
                }
                let lr1 = digamma_unchecked(m as f64 + 1.0);
                let lr2 = (TRIGAMMA_ONE + h2) / 2.0;
                if f.power == 1 {
                    order += 1;
                    g0 *= r_m / f.slope;
                    d1 += f.slope * lr1;
                    d2 += lr2; // slope^2 = 1
                } else {
                    order -= 1;
                    g0 *= f.slope / r_m;
                    d1 -= f.slope * lr1;
                    d2 -= lr2;
                }
            } else {
                let g = gamma_unchecked_signed(x0);
                g0 *= match f.power {
                    1 => g,
                    _ => 1.0 / g,
                };
                let psi = digamma_signed(x0);
                d1 += f.power as f64 * f.slope * psi;
                d2 += f.power as f64 * trigamma_signed(x0) / 2.0;
            }
        }
        if order <= 0 {
            continue;
        }
        let residue = match order {
            1 => g0,
            2 => g0 * (ln_z + d1),
            3 => g0 * (0.5 * ln_z * ln_z + d1 * ln_z + d2 + 0.5 * d1 * d1),
            _ => {
                return Err(Error::InvalidControl(format!(
                    "unexpected pole order {order} at s0 = {s0}"
                )))
            }
        };
        let term = -residue * z.powf(s0);
        total += term;
        last_rel = term.abs() / total.abs().max(f64::MIN_POSITIVE);
        if k >= 1 && last_rel < ctrl.rel_tol {
            consecutive_small += 1;
            if consecutive_small >= 3 {
                return Ok(total);
            }
        } else {
            consecutive_small = 0;
        }
    }
    Err(Error::NoConvergence { max_terms: ctrl.max_terms, last_rel })
}

// Gamma/digamma/trigamma continued to negative non-integer arguments via
// the reflection formulas; the residue series needs them at regular points
// only.
fn gamma_unchecked_signed(x: f64) -> f64 {
    if x > 0.0 {
        gamma_unchecked(x)
    } else {
        let s = (std::f64::consts::PI * x).sin();
        std::f64::consts::PI / (s * gamma_unchecked(1.0 - x))
    }
}

fn digamma_signed(x: f64) -> f64 {
    if x > 0.0 {
        digamma_unchecked(x)
    } else {
        // psi(x) = psi(1-x) - pi cot(pi x)
        let pi = std::f64::consts::PI;
        digamma_unchecked(1.0 - x) - pi / (pi * x).tan()
    }
}

fn trigamma_signed(x: f64) -> f64 {
    if x > 0.0 {
        trigamma(x).expect("positive argument")
    } else {
        // psi'(x) + psi'(1-x) = pi^2 / sin^2(pi x)
        let pi = std::f64::consts::PI;
        let s = (pi * x).sin();
        pi * pi / (s * s) - trigamma(1.0 - x).expect("positive argument")
    }
}

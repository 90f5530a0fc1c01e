//! Statistical model of the equivalent end-to-end channel
//! `A = sum_{i=1}^N |h_i| |g_i|`.
//!
//! `|h_i|` and `|g_i|` are independent Rayleigh magnitudes with density
//! `f(x) = x exp(-x^2/2)`, so `E|h| = sqrt(pi/2)` and `E|h|^2 = 2`. Each
//! product term then has mean `pi/2` and variance `4 (1 - pi^2/16)`, and for
//! `N = 1` the product follows the double-Rayleigh law `f(x) = x K0(x)`.
//!
//! For general `N` the density of `A` is approximated by the first term of
//! its Laguerre expansion, a Gamma-type density with matched mean and
//! variance:
//!
//! ```text
//! f_A(x) = x^a exp(-x/b) / (b^(a+1) Gamma(a+1)),
//! a = k1^2/k2 - 1,  b = k2/k1,  k1 = N pi/2,  k2 = 4N (1 - pi^2/16)
//! ```
//!
//! so that `(a+1) b = k1 = E[A]` and `(a+1) b^2 = k2 = V[A]` exactly. The
//! fit is exact in its first two moments for every `N` but remains an
//! approximation in shape; `sample_a` draws from the exact law.

use rand::Rng;

use crate::specfun::{self, gamma_p, Error};

/// The experiment's independent variables: the number of reflecting units
/// and the transmit SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    n_units: u32,
    rho_t_db: f64,
}

impl SystemConfig {
    pub fn new(n_units: u32, rho_t_db: f64) -> Result<Self, Error> {
        if n_units < 1 {
            return Err(Error::Domain { func: "SystemConfig(n_units)", arg: n_units as f64 });
        }
        if !rho_t_db.is_finite() {
            return Err(Error::Domain { func: "SystemConfig(rho_t_db)", arg: rho_t_db });
        }
        Ok(Self { n_units, rho_t_db })
    }

    pub fn n_units(&self) -> u32 {
        self.n_units
    }

    pub fn rho_t_db(&self) -> f64 {
        self.rho_t_db
    }

    /// Transmit SNR as a dimensionless power ratio, `10^(dB/10)`.
    pub fn rho_t_linear(&self) -> f64 {
        10.0_f64.powf(self.rho_t_db / 10.0)
    }
}

/// Parameters of the Gamma (first-term Laguerre) fit of the density of `A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaFitParams {
    /// Shape minus one; `a + 1 = k1^2 / k2`.
    pub a: f64,
    /// Scale; `b = k2 / k1`.
    pub b: f64,
    /// First moment of `A`.
    pub k1: f64,
    /// Variance of `A`.
    pub k2: f64,
}

impl GammaFitParams {
    /// Moment-matched fit for an arbitrary positive-mean, positive-variance
    /// law. `fit_params` is the channel-specific entry point.
    pub fn from_moments(mean: f64, variance: f64) -> Result<Self, Error> {
        if !(mean > 0.0) {
            return Err(Error::Domain { func: "GammaFitParams(mean)", arg: mean });
        }
        if !(variance > 0.0) {
            return Err(Error::Domain { func: "GammaFitParams(variance)", arg: variance });
        }
        Ok(Self {
            a: mean * mean / variance - 1.0,
            b: variance / mean,
            k1: mean,
            k2: variance,
        })
    }
}

/// Exact mean and variance of `A`: `(N pi/2, 4N (1 - pi^2/16))`.
///
/// Each double-Rayleigh term contributes mean `pi/2` and variance
/// `E[W^2] - E[W]^2 = 4 - pi^2/4`; both scale linearly in `N` by
/// independence.
pub fn moments(cfg: &SystemConfig) -> (f64, f64) {
    let n = cfg.n_units() as f64;
    let pi = std::f64::consts::PI;
    (n * pi / 2.0, 4.0 * n * (1.0 - pi * pi / 16.0))
}

/// Gamma-fit parameters for the configured number of reflecting units.
///
/// `a > 0` for every `N >= 1` (`a ~= 1.61 N - 1 >= 0.61`), so the fitted
/// density is finite at the origin.
pub fn fit_params(cfg: &SystemConfig) -> GammaFitParams {
    let (mean, variance) = moments(cfg);
    let p = GammaFitParams::from_moments(mean, variance).expect("positive moments");
    debug_assert!(p.a > 0.0);
    p
}

/// Fitted density of `A` at `x >= 0`, evaluated in log space so large-`N`
/// shapes do not overflow.
pub fn pdf_a(params: &GammaFitParams, x: f64) -> Result<f64, Error> {
    if x < 0.0 {
        return Err(Error::Domain { func: "pdf_a", arg: x });
    }
    if x == 0.0 {
        // x^a kills the density at the origin for a > 0
        return Ok(if params.a > 0.0 {
            0.0
        } else if params.a == 0.0 {
            1.0 / params.b
        } else {
            f64::INFINITY
        });
    }
    let ln = params.a * x.ln() - x / params.b
        - (params.a + 1.0) * params.b.ln()
        - specfun::ln_gamma(params.a + 1.0)?;
    Ok(ln.exp())
}

/// CDF of the fitted law: the regularized lower incomplete gamma
/// `P(a+1, x/b)`.
pub fn cdf_a(params: &GammaFitParams, x: f64) -> Result<f64, Error> {
    if x < 0.0 {
        return Err(Error::Domain { func: "cdf_a", arg: x });
    }
    gamma_p(params.a + 1.0, x / params.b)
}

/// Exact double-Rayleigh density of `A` for a single reflecting unit:
/// `f(x) = x K0(x)`.
pub fn pdf_a_single(x: f64) -> Result<f64, Error> {
    if x < 0.0 {
        return Err(Error::Domain { func: "pdf_a_single", arg: x });
    }
    if x == 0.0 {
        // x K0(x) -> -x ln(x/2) -> 0
        return Ok(0.0);
    }
    Ok(x * specfun::bessel_k(0, x)?)
}

/// Exact single-unit CDF: `int_0^x t K0(t) dt = 1 - x K1(x)`.
pub fn cdf_a_single(x: f64) -> Result<f64, Error> {
    if x < 0.0 {
        return Err(Error::Domain { func: "cdf_a_single", arg: x });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 - x * specfun::bessel_k(1, x)?)
}

/// One exact draw of `A`: the sum of `N` products of two inverse-transform
/// Rayleigh magnitudes `sqrt(-2 ln(1 - u))`. Consumes exactly `2 N` uniform
/// doubles from `rng`, which keeps the stream position of every sample
/// index computable (the Monte Carlo module relies on that).
pub fn sample_a<R: Rng + ?Sized>(cfg: &SystemConfig, rng: &mut R) -> f64 {
    let mut sum = 0.0;
    for _ in 0..cfg.n_units() {
        let h = rayleigh(rng);
        let g = rayleigh(rng);
        sum += h * g;
    }
    sum
}

#[inline]
fn rayleigh<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // u in [0, 1): ln(1-u) is finite, and the tail truncation at
    // sqrt(-2 ln 2^-53) ~= 8.57 carries ~1e-16 probability mass
    let u: f64 = rng.random();
    (-2.0 * (1.0 - u).ln()).sqrt()
}

//! From-scratch special-function layer: Gamma family, modified Bessel K,
//! generalized hypergeometric series, and the three fixed Meijer-G instances
//! needed by the single-reflector capacity.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! any number of threads.

mod bessel;
mod gamma;
mod hyper;
mod meijer;

pub use bessel::bessel_k;
pub use gamma::{digamma, gamma_fn, gamma_p, ln_gamma, ln_gamma_complex, pochhammer, trigamma};
pub use hyper::{pfq, PFQParams};
pub use meijer::{meijer_g, mb_contour, residue_series, MbEval, MeijerGInstance, MeijerGKind};

/// Truncation and tolerance policy shared by the series and contour
/// evaluators.
#[derive(Debug, Clone)]
pub struct SeriesControl {
    /// Relative tolerance for series truncation and contour error targets.
    pub rel_tol: f64,
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
    /// Point budget for Mellin-Barnes contour quadrature.
    pub contour_points: usize,
    /// Real abscissa of the integration line; `None` picks the documented
    /// per-instance default.
    pub contour_shift: Option<f64>,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_terms: 10_000,
            contour_points: 2_000,
            contour_shift: None,
        }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidControl(format!(
                "rel_tol must be in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.max_terms < 1 {
            return Err(Error::InvalidControl("max_terms must be >= 1".into()));
        }
        if self.contour_points < 16 {
            return Err(Error::InvalidControl(format!(
                "contour_points must be >= 16, got {}",
                self.contour_points
            )));
        }
        Ok(())
    }
}

/// Errors raised by the numerical layer.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("domain error in {func}: argument {arg}")]
    Domain { func: &'static str, arg: f64 },
    #[error("overflow in {func}: argument {arg} exceeds the representable range")]
    Overflow { func: &'static str, arg: f64 },
    #[error("series did not converge within {max_terms} terms (last relative term {last_rel:.3e})")]
    NoConvergence { max_terms: usize, last_rel: f64 },
    #[error("requested accuracy not reached: achieved {achieved:.3e}, target {target:.3e}")]
    AccuracyNotReached { achieved: f64, target: f64 },
    #[error("invalid control parameter: {0}")]
    InvalidControl(String),
}

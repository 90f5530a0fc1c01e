//! Generalized hypergeometric series pFq by direct summation.
//!
//! Every instance used by the capacity formulas has p <= q (entire
//! functions) and a small negative argument in the high-SNR regime, so the
//! plain power series with a guarded stopping rule is the right tool. The
//! stopping rule requires three consecutive terms below `rel_tol` times the
//! partial sum, which protects against the alternating-series false stop.

use super::{Error, SeriesControl};

/// Parameters of a generalized hypergeometric series
/// pFq(a_1..a_p; b_1..b_q; z).
#[derive(Debug, Clone)]
pub struct PFQParams {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub argument: f64,
}

impl PFQParams {
    pub fn new(upper: Vec<f64>, lower: Vec<f64>, argument: f64) -> Result<Self, Error> {
        for &b in &lower {
            // poles of the series denominators
            if b <= 0.0 && (b - b.round()).abs() < 1e-12 {
                return Err(Error::Domain { func: "pfq(lower parameter)", arg: b });
            }
        }
        Ok(Self { upper, lower, argument })
    }
}

/// Sum of the pFq series: sum_k [prod (a_i)_k / prod (b_j)_k] z^k / k!.
pub fn pfq(params: &PFQParams, ctrl: &SeriesControl) -> Result<f64, Error> {
    ctrl.validate()?;
    let z = params.argument;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    if z == 0.0 {
        return Ok(1.0);
    }
    let mut consecutive_small = 0;
    let mut last_rel = f64::INFINITY;
    for k in 0..ctrl.max_terms {
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for &a in &params.upper {
            ratio *= a + kf;
        }
        for &b in &params.lower {
            ratio /= b + kf;
        }
        term *= ratio;
        sum += term;
        last_rel = term.abs() / sum.abs().max(f64::MIN_POSITIVE);
        if last_rel < ctrl.rel_tol {
            consecutive_small += 1;
            if consecutive_small >= 3 {
                return Ok(sum);
            }
        } else {
            consecutive_small = 0;
        }
    }
    Err(Error::NoConvergence { max_terms: ctrl.max_terms, last_rel })
}

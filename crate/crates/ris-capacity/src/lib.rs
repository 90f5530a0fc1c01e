//! Ergodic capacity of RIS-assisted wireless links.
//!
//! A source talks to a destination through a reconfigurable intelligent
//! surface with `N` reflecting units. With optimal per-unit phase alignment
//! the end-to-end channel is `A = sum_i |h_i||g_i|`, a sum of double-Rayleigh
//! products, and the ergodic capacity is `E[log2(1 + rho_t A^2)]` in
//! bits/s/Hz.
//!
//! The crate provides, and cross-validates against each other:
//!
//! - a Gamma (first-term Laguerre) fit of the density of `A` and its exact
//!   moments ([`channel`]),
//! - a closed-form capacity expression plus high-SNR and high-N
//!   approximations built on generalized hypergeometric series
//!   ([`capacity`]),
//! - an exact single-reflector capacity via three fixed Meijer-G instances
//!   ([`capacity::ec_single_ru`]),
//! - an adaptive-quadrature oracle that is authoritative whenever a closed
//!   form is numerically fragile ([`capacity::ec_quadrature`]),
//! - a deterministic, seedable Monte Carlo estimator whose results do not
//!   depend on the worker count ([`montecarlo`]).
//!
//! All special functions (Gamma family, modified Bessel K, pFq series, the
//! Meijer-G instances) are implemented from scratch in [`specfun`].
//!
//! The `ris-capacity` binary exposes the same functionality as the `eval`,
//! `sweep`, `pdf` and `claims` subcommands; see [`cli`]. Runnable
//! walkthroughs live in `examples/`.

pub mod capacity;
pub mod channel;
pub mod cli;
pub mod montecarlo;
pub mod quad;
pub mod specfun;

pub use capacity::{CapacityResult, Method};
pub use channel::{GammaFitParams, SystemConfig};
pub use montecarlo::{McConfig, McEstimate};
pub use specfun::SeriesControl;

//! Empirical density of the equivalent channel against the Gamma fit, and
//! against the exact double-Rayleigh law for a single reflecting unit.
//!
//! ```bash
//! cargo run --example channel_pdf_compare
//! ```

use ris_capacity::channel::{self, SystemConfig};
use ris_capacity::montecarlo::{estimate_pdf, McConfig};

fn main() {
    let cfg = SystemConfig::new(1, 0.0).unwrap();
    let mc = McConfig {
        samples: 1_000_000,
        seed: 99,
        workers: 4,
        histogram_bins: 24,
        histogram_range: Some(6.0),
    };
    let hist = estimate_pdf(&cfg, &mc).unwrap();
    let params = channel::fit_params(&cfg);

    println!("density of A, N = 1 ({} samples):\n", mc.samples);
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>8}",
        "x", "empirical", "exact xK0(x)", "Gamma fit", "emp/SE"
    );
    for bin in &hist.bins {
        let exact = channel::pdf_a_single(bin.center).unwrap();
        let fit = channel::pdf_a(&params, bin.center).unwrap();
        let z = if bin.std_err > 0.0 {
            (bin.density - exact) / bin.std_err
        } else {
            0.0
        };
        println!(
            "{:>8.3} {:>12.5} {:>12.5} {:>12.5} {:>8.2}",
            bin.center, bin.density, exact, fit, z
        );
    }
    println!(
        "\nThe histogram tracks the exact law within sampling noise; the\n\
         moment-matched Gamma fit is close but visibly off in the left tail\n\
         (it is a first-term Laguerre approximation). Its shape error\n\
         shrinks as N grows:"
    );
    for n in [4u32, 16, 64] {
        let c = SystemConfig::new(n, 0.0).unwrap();
        let (mean, var) = channel::moments(&c);
        println!(
            "  N = {n:<3}: E[A] = {mean:8.4}, V[A] = {var:8.4}, fit (a, b) = ({:.4}, {:.4})",
            channel::fit_params(&c).a,
            channel::fit_params(&c).b
        );
    }
}

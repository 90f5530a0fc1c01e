//! Evaluate the ergodic capacity of one configuration with every
//! applicable method and show how the routes agree.
//!
//! ```bash
//! cargo run --example eval_single_point
//! ```

use ris_capacity::capacity::{
    ec_closed_form, ec_high_snr, ec_high_snr_high_n, ec_quadrature, CapacityResult,
};
use ris_capacity::montecarlo::{estimate_ec, McConfig};
use ris_capacity::{Method, SeriesControl, SystemConfig};

fn main() {
    let cfg = SystemConfig::new(4, 10.0).unwrap();
    let ctrl = SeriesControl::default();

    let mut rows: Vec<CapacityResult> = vec![
        ec_closed_form(&cfg, &ctrl).unwrap(),
        ec_high_snr(&cfg).unwrap(),
        ec_high_snr_high_n(&cfg),
        ec_quadrature(&cfg, &ctrl).unwrap(),
    ];
    let mc = McConfig { samples: 2_000_000, seed: 7, workers: 4, ..Default::default() };
    let est = estimate_ec(&cfg, &mc).unwrap();
    rows.push(CapacityResult {
        value: est.point,
        method: Method::MonteCarlo,
        err_estimate: est.std_err,
        fallback_used: false,
    });

    println!(
        "ergodic capacity, N = {} reflecting units, transmit SNR = {} dB\n",
        cfg.n_units(),
        cfg.rho_t_db()
    );
    println!("{:<12} {:>16} {:>13} {:>9}", "method", "EC [bits/s/Hz]", "err estimate", "fallback");
    for r in &rows {
        println!(
            "{:<12} {:>16.10} {:>13.2e} {:>9}",
            r.method.to_string(),
            r.value,
            r.err_estimate,
            r.fallback_used
        );
    }
    println!(
        "\nNote: the Monte Carlo row carries real sampling noise (its error\n\
         column is a standard error); the analytic rows agree to ~1e-13 and\n\
         the high-SNR forms sit within their documented approximation gap."
    );
}

//! Convergence of the two approximations toward the full closed form:
//! the high-SNR form as the SNR grows, and the high-SNR-high-N form as
//! the number of reflecting units grows.
//!
//! ```bash
//! cargo run --example high_snr_convergence
//! ```

use ris_capacity::capacity::{
    ec_closed_form, ec_high_snr, ec_high_snr_high_n, high_snr_term_log_magnitudes,
};
use ris_capacity::channel::fit_params;
use ris_capacity::{SeriesControl, SystemConfig};

fn main() {
    let ctrl = SeriesControl::default();

    println!("high-SNR approximation error at N = 4 (drops the pFq factors):");
    println!("{:>7} {:>14} {:>14} {:>12}", "snr_db", "closed", "high-snr", "rel err");
    for db in [0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0] {
        let cfg = SystemConfig::new(4, db).unwrap();
        let c = ec_closed_form(&cfg, &ctrl).unwrap().value;
        let h = ec_high_snr(&cfg).unwrap().value;
        println!("{db:>7.1} {c:>14.8} {h:>14.8} {:>12.2e}", ((h - c) / c).abs());
    }

    println!("\nhigh-SNR-high-N approximation error at 20 dB (also drops csc/sec):");
    println!("{:>5} {:>14} {:>14} {:>12}", "N", "closed", "high-snr-n", "rel err");
    for n in [2u32, 4, 8, 16, 50, 100] {
        let cfg = SystemConfig::new(n, 20.0).unwrap();
        let c = ec_closed_form(&cfg, &ctrl).unwrap().value;
        let h = ec_high_snr_high_n(&cfg).value;
        println!("{n:>5} {c:>14.8} {h:>14.8} {:>12.2e}", ((h - c) / c).abs());
    }

    println!(
        "\nthe dropped csc/sec terms vanish factorially in N \
         (log10 magnitudes at 10 dB):"
    );
    print!("  ");
    for n in [8u32, 16, 32, 64, 128] {
        let p = fit_params(&SystemConfig::new(n, 10.0).unwrap());
        let (b1, b2) = high_snr_term_log_magnitudes(&p, 10.0);
        print!("N={n}: ({:.0}, {:.0})  ", b1 / std::f64::consts::LN_10, b2 / std::f64::consts::LN_10);
    }
    println!();
}

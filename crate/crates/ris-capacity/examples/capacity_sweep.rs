//! Capacity-versus-SNR curves for several reflecting-unit counts, the
//! table behind the usual "EC vs transmit SNR" figure. Doubling N lifts
//! the whole curve by about 2 bits/s/Hz.
//!
//! ```bash
//! cargo run --example capacity_sweep
//! ```

use ris_capacity::capacity::ec_closed_form;
use ris_capacity::{SeriesControl, SystemConfig};

fn main() {
    let ctrl = SeriesControl::default();
    let n_list = [1u32, 2, 10, 25, 50, 100];
    let snrs: Vec<f64> = (-2..=6).map(|k| 5.0 * k as f64).collect();

    print!("{:>8}", "snr_db");
    for n in n_list {
        print!("  N={n:<6}");
    }
    println!();
    for &snr in &snrs {
        print!("{snr:>8.1}");
        for n in n_list {
            let cfg = SystemConfig::new(n, snr).unwrap();
            let ec = ec_closed_form(&cfg, &ctrl).unwrap();
            print!("  {:<8.4}", ec.value);
        }
        println!();
    }

    println!("\ngain per doubling of N at 20 dB:");
    for (lo, hi) in [(25u32, 50u32), (50, 100)] {
        let e_lo = ec_closed_form(&SystemConfig::new(lo, 20.0).unwrap(), &ctrl).unwrap().value;
        let e_hi = ec_closed_form(&SystemConfig::new(hi, 20.0).unwrap(), &ctrl).unwrap().value;
        println!("  N {lo:>3} -> {hi:<3}: +{:.3} bits/s/Hz", e_hi - e_lo);
    }
    println!("\n(The `sweep` subcommand exports the same grid as CSV or JSON.)");
}

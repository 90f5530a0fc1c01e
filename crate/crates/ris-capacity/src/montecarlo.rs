//! Seeded Monte Carlo estimation of the ergodic capacity and of the
//! empirical density of the equivalent channel `A`.
//!
//! Determinism contract: identical `(seed, samples)` give bit-identical
//! results for ANY worker count. Sample index `i` always reads the ChaCha12
//! keystream at word position `i * 4N` (one `f64` consumes two 32-bit
//! words, one draw of `A` consumes `2N` doubles), so the value of sample
//! `i` is a pure function of `(seed, i)`. Work is split into fixed blocks
//! of consecutive indices; block partials are reduced in block order
//! regardless of which worker produced them.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::channel::{self, SystemConfig};

const BLOCK: u64 = 8192;

/// Monte Carlo run controls.
#[derive(Debug, Clone, PartialEq)]
pub struct McConfig {
    /// Number of independent draws of `A`.
    pub samples: u64,
    /// Seed of the ChaCha12 keystream.
    pub seed: u64,
    /// Worker threads; does not affect results, only wall time.
    pub workers: usize,
    /// Histogram resolution for [`estimate_pdf`].
    pub histogram_bins: usize,
    /// Upper edge of the histogram; `None` defaults to
    /// `mean + 8 sqrt(variance)` from the analytic moments.
    pub histogram_range: Option<f64>,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            samples: 1_000_000,
            seed: 0,
            workers: 1,
            histogram_bins: 200,
            histogram_range: None,
        }
    }
}

impl McConfig {
    pub fn validate(&self) -> Result<(), crate::specfun::Error> {
        if self.samples < 1 {
            return Err(crate::specfun::Error::InvalidControl("samples must be >= 1".into()));
        }
        if self.workers < 1 {
            return Err(crate::specfun::Error::InvalidControl("workers must be >= 1".into()));
        }
        if self.histogram_bins < 2 {
            return Err(crate::specfun::Error::InvalidControl(
                "histogram_bins must be >= 2".into(),
            ));
        }
        Ok(())
    }
}

/// A Monte Carlo point estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    /// Estimated EC in bits/s/Hz.
    pub point: f64,
    /// Standard error of the mean.
    pub std_err: f64,
    pub samples_used: u64,
}

/// One bin of the empirical density.
#[derive(Debug, Clone, Copy)]
pub struct PdfBin {
    pub center: f64,
    pub density: f64,
    /// Binomial standard error of the bin density.
    pub std_err: f64,
}

/// Normalized histogram of `A`.
#[derive(Debug, Clone)]
pub struct PdfHistogram {
    pub bins: Vec<PdfBin>,
    pub bin_width: f64,
    pub samples_used: u64,
    /// Draws that fell beyond the range (left out of the normalization).
    pub out_of_range: u64,
}

// Per-block accumulator; merged in block order so the reduction is
// associative-in-practice and independent of scheduling.
#[derive(Clone)]
struct BlockAcc {
    sum: f64,
    sum_sq: f64,
    counts: Vec<u64>,
    out_of_range: u64,
}

fn run_blocks<F>(cfg: &SystemConfig, mc: &McConfig, bins: usize, x_max: f64, map: F) -> Vec<BlockAcc>
where
    F: Fn(f64) -> f64 + Sync,
{
    let n_blocks = mc.samples.div_ceil(BLOCK);
    let words_per_sample = 4u128 * cfg.n_units() as u128;
    let mut results: Vec<Option<BlockAcc>> = vec![None; n_blocks as usize];
    let workers = mc.workers.min(n_blocks as usize).max(1);

    let process_block = |block: u64| -> BlockAcc {
        let mut rng = ChaCha12Rng::seed_from_u64(mc.seed);
        rng.set_word_pos(block as u128 * BLOCK as u128 * words_per_sample);
        let lo = block * BLOCK;
        let hi = (lo + BLOCK).min(mc.samples);
        let mut acc = BlockAcc {
            sum: 0.0,
            sum_sq: 0.0,
            counts: vec![0u64; bins],
            out_of_range: 0,
        };
        let inv_width = bins as f64 / x_max;
        for _ in lo..hi {
            let a = channel::sample_a(cfg, &mut rng);
            let v = map(a);
            acc.sum += v;
            acc.sum_sq += v * v;
            if a < x_max {
                acc.counts[(a * inv_width) as usize] += 1;
            } else {
                acc.out_of_range += 1;
            }
        }
        acc
    };

    if workers == 1 {
        for (b, slot) in results.iter_mut().enumerate() {
            *slot = Some(process_block(b as u64));
        }
    } else {
        let next = std::sync::atomic::AtomicU64::new(0);
        let slots = std::sync::Mutex::new(&mut results);
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let b = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if b >= n_blocks {
                        break;
                    }
                    let acc = process_block(b);
                    slots.lock().unwrap()[b as usize] = Some(acc);
                });
            }
        });
    }
    results.into_iter().map(|r| r.expect("block computed")).collect()
}

/// Sample-mean estimate of `E[log2(1 + rho_t A^2)]`.
pub fn estimate_ec(cfg: &SystemConfig, mc: &McConfig) -> Result<McEstimate, crate::specfun::Error> {
    mc.validate()?;
    let rho = cfg.rho_t_linear();
    let (mean, var) = channel::moments(cfg);
    let x_max = mc.histogram_range.unwrap_or(mean + 8.0 * var.sqrt());
    let blocks = run_blocks(cfg, mc, 1, x_max, |a| (1.0 + rho * a * a).log2());
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for b in &blocks {
        sum += b.sum;
        sum_sq += b.sum_sq;
    }
    let n = mc.samples as f64;
    let point = sum / n;
    let sample_var = ((sum_sq - n * point * point) / (n - 1.0).max(1.0)).max(0.0);
    Ok(McEstimate {
        point,
        std_err: (sample_var / n).sqrt(),
        samples_used: mc.samples,
    })
}

/// Normalized histogram of `A` over `[0, x_max)`.
///
/// Densities integrate to one up to the (analytically negligible,
/// < 1e-4) mass beyond the default range.
pub fn estimate_pdf(cfg: &SystemConfig, mc: &McConfig) -> Result<PdfHistogram, crate::specfun::Error> {
    mc.validate()?;
    let (mean, var) = channel::moments(cfg);
    let x_max = mc.histogram_range.unwrap_or(mean + 8.0 * var.sqrt());
    if !(x_max > 0.0) {
        return Err(crate::specfun::Error::InvalidControl(format!(
            "histogram range must be positive, got {x_max}"
        )));
    }
    let bins = mc.histogram_bins;
    let blocks = run_blocks(cfg, mc, bins, x_max, |_| 0.0);
    let mut counts = vec![0u64; bins];
    let mut out_of_range = 0u64;
    for b in &blocks {
        out_of_range += b.out_of_range;
        for (total, c) in counts.iter_mut().zip(&b.counts) {
            *total += c;
        }
    }
    let n = mc.samples as f64;
    let width = x_max / bins as f64;
    let bins_out = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let p = c as f64 / n;
            PdfBin {
                center: (i as f64 + 0.5) * width,
                density: p / width,
                std_err: (p * (1.0 - p) / n).sqrt() / width,
            }
        })
        .collect();
    Ok(PdfHistogram {
        bins: bins_out,
        bin_width: width,
        samples_used: mc.samples,
        out_of_range,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u32, db: f64) -> SystemConfig {
        SystemConfig::new(n, db).unwrap()
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let c = cfg(4, 10.0);
        let base = McConfig { samples: 100_000, seed: 42, workers: 1, ..Default::default() };
        let e1 = estimate_ec(&c, &base).unwrap();
        for workers in [2usize, 4, 7] {
            let e = estimate_ec(&c, &McConfig { workers, ..base.clone() }).unwrap();
            assert_eq!(e1.point.to_bits(), e.point.to_bits());
            assert_eq!(e1.std_err.to_bits(), e.std_err.to_bits());
        }
        let h1 = estimate_pdf(&c, &base).unwrap();
        let h4 = estimate_pdf(&c, &McConfig { workers: 4, ..base }).unwrap();
        for (b1, b4) in h1.bins.iter().zip(&h4.bins) {
            assert_eq!(b1.density.to_bits(), b4.density.to_bits());
        }
    }

    #[test]
    fn repeated_runs_are_bit_identical() {
        let c = cfg(2, 5.0);
        let mc = McConfig { samples: 50_000, seed: 7, workers: 3, ..Default::default() };
        let a = estimate_ec(&c, &mc).unwrap();
        let b = estimate_ec(&c, &mc).unwrap();
        assert_eq!(a.point.to_bits(), b.point.to_bits());
    }

    #[test]
    fn zero_snr_limit() {
        // rho -> 0 makes the integrand identically ~0
        let c = cfg(2, -300.0);
        let mc = McConfig { samples: 10_000, seed: 1, ..Default::default() };
        let e = estimate_ec(&c, &mc).unwrap();
        assert!(e.point < 1e-25, "point = {}", e.point);
        assert!(e.std_err < 1e-25);
    }

    #[test]
    fn sqrt_n_error_scaling() {
        let c = cfg(1, 10.0);
        let small = estimate_ec(&c, &McConfig { samples: 10_000, seed: 3, ..Default::default() })
            .unwrap();
        let large = estimate_ec(&c, &McConfig { samples: 1_000_000, seed: 3, ..Default::default() })
            .unwrap();
        let ratio = small.std_err / large.std_err;
        assert!(
            (ratio - 10.0).abs() <= 2.0,
            "expected ~10x std_err shrink, got {ratio}"
        );
    }

    #[test]
    fn histogram_mass_and_mean_shift() {
        let mc = McConfig { samples: 200_000, seed: 11, workers: 2, ..Default::default() };
        let mut prev_mean = 0.0;
        for n in [1u32, 2, 4] {
            let h = estimate_pdf(&cfg(n, 0.0), &mc).unwrap();
            let mass: f64 = h.bins.iter().map(|b| b.density * h.bin_width).sum();
            assert!((mass - 1.0).abs() < 1e-3, "mass {mass}");
            let mean: f64 =
                h.bins.iter().map(|b| b.center * b.density * h.bin_width).sum();
            assert!(mean > prev_mean, "histogram mean must shift right with N");
            prev_mean = mean;
        }
    }

    #[test]
    fn estimate_agrees_with_exact_single_unit_mean() {
        // E[A] at N=1 is pi/2; reuse the histogram to integrate x f(x)
        let mc = McConfig { samples: 1_000_000, seed: 13, workers: 4, ..Default::default() };
        let h = estimate_pdf(&cfg(1, 0.0), &mc).unwrap();
        let mean: f64 = h.bins.iter().map(|b| b.center * b.density * h.bin_width).sum();
        assert!((mean - std::f64::consts::PI / 2.0).abs() < 5e-3, "mean {mean}");
    }
}

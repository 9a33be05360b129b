//! MLD vs SMD wall-clock comparison on the rank-one fixtures.
//!
//! Decodes run one at a time on the calling thread so the two decoders see the
//! same conditions. Absolute times depend on the machine; the ratio is the
//! number to look at.

use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::decode::{mld_decode, smd_decode};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::quaternion::RealQuaternion;

/// Noise level used for benchmark inputs.
pub const BENCH_SIGMA: f64 = 0.05;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub q: i64,
    pub code_size: usize,
    pub mld_us: f64,
    pub smd_us: f64,
    pub speedup: f64,
}

/// Mean per-decode time of MLD and SMD over `trials` noisy codewords for each `q`.
pub fn run_benchmark(qs: &[i64], n: usize, trials: usize, seed: u64) -> Result<Vec<BenchRow>> {
    if trials == 0 {
        return Err(Error::InvalidSpec("trials must be at least 1".into()));
    }
    let normal = Normal::new(0.0, BENCH_SIGMA).expect("positive sigma");
    qs.iter()
        .map(|&q| {
            let code = fixtures::rank_one(q, n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ q as u64);
            let inputs: Vec<Vec<RealQuaternion>> = (0..trials)
                .map(|_| {
                    code.random_point(&mut rng, 0)
                        .to_real()
                        .into_iter()
                        .map(|x| x + RealQuaternion(std::array::from_fn(|_| normal.sample(&mut rng))))
                        .collect()
                })
                .collect();
            // Warm-up so the first timed call does not pay for cold caches.
            smd_decode(&inputs[0], &code)?;
            mld_decode(&inputs[0], &code)?;

            let start = Instant::now();
            for y in &inputs {
                std::hint::black_box(mld_decode(y, &code)?);
            }
            let mld_us = start.elapsed().as_secs_f64() * 1e6 / trials as f64;
            let start = Instant::now();
            for y in &inputs {
                std::hint::black_box(smd_decode(y, &code)?);
            }
            let smd_us = start.elapsed().as_secs_f64() * 1e6 / trials as f64;
            Ok(BenchRow { q, code_size: code.len(), mld_us, smd_us, speedup: mld_us / smd_us })
        })
        .collect()
}

pub fn bench_to_csv(rows: &[BenchRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn write_bench(rows: &[BenchRow], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, bench_to_csv(rows)?)?;
    Ok(())
}

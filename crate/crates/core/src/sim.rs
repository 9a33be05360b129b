//! AWGN Monte Carlo harness.
//!
//! Each trial draws a codeword, adds i.i.d. `N(0, σ²)` noise on all `4n` real
//! coordinates and decodes. A word error is any mismatch of the exact lattice
//! points. Trial `t` at sigma index `s` uses ChaCha8 seeded with the master
//! seed on stream `(s << 32) | t`, so results do not depend on scheduling.

use std::f64::consts::{E, PI};
use std::path::{Path, PathBuf};
use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{LatticePoint, PiACode};
use crate::decode::{mld_decode, smd_decode};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::quaternion::{HurwitzInt, RealQuaternion};
use crate::spec_file::{CodeSpecDoc, LevelDoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoder {
    Mld,
    Smd,
}

impl Decoder {
    pub fn name(self) -> &'static str {
        match self {
            Decoder::Mld => "mld",
            Decoder::Smd => "smd",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecoderSelection {
    Smd,
    Mld,
    #[default]
    Both,
}

impl DecoderSelection {
    pub fn decoders(self) -> Vec<Decoder> {
        match self {
            DecoderSelection::Smd => vec![Decoder::Smd],
            DecoderSelection::Mld => vec![Decoder::Mld],
            DecoderSelection::Both => vec![Decoder::Mld, Decoder::Smd],
        }
    }
}

/// Rank-one fixture reference: `{"q": 15, "n": 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRef {
    pub q: i64,
    pub n: usize,
}

/// Simulation configuration.
///
/// The code comes from exactly one of: inline code-spec fields (`primes`,
/// `n`, `levels`, optional `irreducibles`), `code_file`, or `fixture`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibles: Option<Vec<HurwitzInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<LevelDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code_file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<FixtureRef>,

    pub sigmas: Vec<f64>,
    pub trials: u64,
    #[serde(default)]
    pub decoder: DecoderSelection,
    #[serde(default)]
    pub seed: u64,
    /// Half-width of the random `qℋⁿ` translate box (0 = no translate).
    #[serde(default)]
    pub translate_box: u32,
    /// Record decode times. Off by default so the CSV is reproducible byte for byte.
    #[serde(default)]
    pub timing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
}

impl SimConfig {
    /// Config for a ready-built fixture with default options.
    pub fn for_fixture(q: i64, n: usize, sigmas: Vec<f64>, trials: u64, seed: u64) -> Self {
        SimConfig {
            primes: None,
            n: None,
            irreducibles: None,
            levels: None,
            code_file: None,
            fixture: Some(FixtureRef { q, n }),
            sigmas,
            trials,
            decoder: DecoderSelection::Both,
            seed,
            translate_box: 0,
            timing: false,
            workers: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Loads a config; a relative `code_file` resolves against the config's directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut cfg = Self::from_json(&std::fs::read_to_string(path)?)?;
        if let (Some(file), Some(dir)) = (&cfg.code_file, path.parent()) {
            if file.is_relative() {
                cfg.code_file = Some(dir.join(file));
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidSpec("trials must be at least 1".into()));
        }
        if self.sigmas.is_empty() {
            return Err(Error::InvalidSpec("empty sigma list".into()));
        }
        if let Some(s) = self.sigmas.iter().find(|s| !(s.is_finite() && **s > 0.0)) {
            return Err(Error::InvalidSpec(format!("sigma {s} must be positive")));
        }
        if self.workers == Some(0) {
            return Err(Error::InvalidSpec("workers must be at least 1".into()));
        }
        Ok(())
    }

    pub fn build_code(&self) -> Result<PiACode> {
        let inline = self.primes.is_some() || self.levels.is_some() || self.n.is_some();
        match (inline, &self.code_file, &self.fixture) {
            (true, None, None) => {
                let missing = || Error::InvalidSpec("inline code needs primes, n and levels".into());
                CodeSpecDoc {
                    primes: self.primes.clone().ok_or_else(missing)?,
                    n: self.n.ok_or_else(missing)?,
                    irreducibles: self.irreducibles.clone(),
                    levels: self.levels.clone().ok_or_else(missing)?,
                }
                .build()
            }
            (false, Some(file), None) => CodeSpecDoc::load(file)?.build(),
            (false, None, Some(f)) => fixtures::rank_one(f.q, f.n),
            (false, None, None) => Err(Error::InvalidSpec("no code given".into())),
            _ => Err(Error::InvalidSpec("give exactly one of inline code, code_file, fixture".into())),
        }
    }
}

/// One aggregated row of the results CSV.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimRecord {
    pub decoder: Decoder,
    pub q: i64,
    pub n: usize,
    pub sigma: f64,
    pub nvnr_db: f64,
    pub trials: u64,
    pub errors: u64,
    pub wer: f64,
    pub wer_lo: f64,
    pub wer_hi: f64,
    pub mean_decode_us: f64,
    pub seed: u64,
}

pub const CSV_HEADER: &str = "decoder,q,n,sigma,nvnr_db,trials,errors,wer,wer_lo,wer_hi,mean_decode_us,seed";

/// `10·log₁₀(vol^{2/(4n)} / (2πe·σ²))`: distance above the Poltyrev limit.
pub fn nvnr_db(volume: f64, n: usize, sigma: f64) -> f64 {
    10.0 * (volume.powf(2.0 / (4 * n) as f64) / (2.0 * PI * E * sigma * sigma)).log10()
}

/// Inverse of [`nvnr_db`] in `σ`.
pub fn sigma_for_nvnr_db(volume: f64, n: usize, db: f64) -> f64 {
    (volume.powf(2.0 / (4 * n) as f64) / (2.0 * PI * E * 10f64.powf(db / 10.0))).sqrt()
}

/// Wilson score interval at 95%.
pub fn wilson_interval(errors: u64, trials: u64) -> (f64, f64) {
    const Z: f64 = 1.959_963_984_540_054;
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = errors as f64 / n;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let lo = if errors == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if errors == trials { 1.0 } else { (center + half).min(1.0) };
    (lo, hi)
}

/// Per-decoder outcome of one trial.
#[derive(Clone, Debug)]
pub struct DecodeOutcome {
    pub decoder: Decoder,
    pub decoded: LatticePoint,
    pub error: bool,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub transmitted: LatticePoint,
    pub received: Vec<RealQuaternion>,
    pub outcomes: Vec<DecodeOutcome>,
}

/// RNG for trial `trial` at sigma index `sigma_index`.
pub fn trial_rng(seed: u64, sigma_index: usize, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((sigma_index as u64) << 32) | (trial & 0xffff_ffff));
    rng
}

/// One channel use: transmit, add noise, decode with every listed decoder.
pub fn awgn_trial(
    code: &PiACode,
    sigma: f64,
    rng: &mut ChaCha8Rng,
    decoders: &[Decoder],
    translate_box: u32,
) -> Result<TrialOutcome> {
    let normal = Normal::new(0.0, sigma).map_err(|e| Error::InvalidSpec(e.to_string()))?;
    let transmitted = code.random_point(rng, translate_box);
    let received: Vec<RealQuaternion> = transmitted
        .to_real()
        .into_iter()
        .map(|x| x + RealQuaternion(std::array::from_fn(|_| normal.sample(rng))))
        .collect();
    let outcomes = decoders
        .iter()
        .map(|&d| {
            let r = match d {
                Decoder::Mld => mld_decode(&received, code)?,
                Decoder::Smd => smd_decode(&received, code)?,
            };
            Ok(DecodeOutcome { decoder: d, error: r.point != transmitted, decoded: r.point, elapsed: r.elapsed })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TrialOutcome { transmitted, received, outcomes })
}

/// Runs the sweep on an already built code.
pub fn simulate_code(code: &PiACode, cfg: &SimConfig) -> Result<Vec<SimRecord>> {
    cfg.validate()?;
    let decoders = cfg.decoder.decoders();
    let run = || -> Result<Vec<SimRecord>> {
        let mut records = Vec::new();
        for (si, &sigma) in cfg.sigmas.iter().enumerate() {
            // (errors, micros) per decoder, summed over trials.
            let totals = (0..cfg.trials)
                .into_par_iter()
                .map(|t| -> Result<Vec<(u64, u128)>> {
                    let mut rng = trial_rng(cfg.seed, si, t);
                    let out = awgn_trial(code, sigma, &mut rng, &decoders, cfg.translate_box)?;
                    Ok(out.outcomes.iter().map(|o| (o.error as u64, o.elapsed.as_nanos())).collect::<Vec<_>>())
                })
                .try_reduce(
                    || vec![(0u64, 0u128); decoders.len()],
                    |a, b| Ok(a.iter().zip(&b).map(|(x, y)| (x.0 + y.0, x.1 + y.1)).collect()),
                )?;
            for (&decoder, &(errors, nanos)) in decoders.iter().zip(&totals) {
                let (wer_lo, wer_hi) = wilson_interval(errors, cfg.trials);
                records.push(SimRecord {
                    decoder,
                    q: code.q(),
                    n: code.n(),
                    sigma,
                    nvnr_db: nvnr_db(code.lattice_volume(), code.n(), sigma),
                    trials: cfg.trials,
                    errors,
                    wer: errors as f64 / cfg.trials as f64,
                    wer_lo,
                    wer_hi,
                    mean_decode_us: if cfg.timing { nanos as f64 / 1e3 / cfg.trials as f64 } else { 0.0 },
                    seed: cfg.seed,
                });
            }
        }
        records.sort_by(|a, b| a.decoder.cmp(&b.decoder).then(a.sigma.total_cmp(&b.sigma)));
        Ok(records)
    };
    match cfg.workers {
        None => run(),
        Some(w) => {
            rayon::ThreadPoolBuilder::new().num_threads(w).build().map_err(|e| Error::Io(e.to_string()))?.install(run)
        }
    }
}

/// Builds the configured code and runs the sweep.
pub fn run_simulation(cfg: &SimConfig) -> Result<Vec<SimRecord>> {
    cfg.validate()?;
    simulate_code(&cfg.build_code()?, cfg)
}

pub fn records_to_csv(records: &[SimRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn write_records(records: &[SimRecord], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, records_to_csv(records)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_bounds() {
        assert_eq!(wilson_interval(0, 1000).0, 0.0);
        let (lo, hi) = wilson_interval(0, 1000);
        assert!(hi > 0.0 && hi < 0.004);
        let (lo2, hi2) = wilson_interval(500, 1000);
        assert!(lo2 < 0.5 && hi2 > 0.5);
        assert!((0.5 - lo2 - (hi2 - 0.5)).abs() < 1e-12);
        assert!(lo <= hi);
    }

    #[test]
    fn nvnr_roundtrip() {
        let vol = 81.0 / 4.0;
        let s = sigma_for_nvnr_db(vol, 2, 12.0);
        assert!((nvnr_db(vol, 2, s) - 12.0).abs() < 1e-12);
        // vol^{1/4} / (2πe·0.01) by hand.
        let expect = 10.0 * ((20.25f64).powf(0.25) / (2.0 * PI * E * 0.01)).log10();
        assert!((nvnr_db(vol, 2, 0.1) - expect).abs() < 1e-12);
    }

    #[test]
    fn header_matches() {
        let cfg = SimConfig::for_fixture(3, 2, vec![0.01], 3, 1);
        let csv = records_to_csv(&run_simulation(&cfg).unwrap()).unwrap();
        assert_eq!(csv.lines().next().unwrap(), CSV_HEADER);
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn config_validation() {
        let mut cfg = SimConfig::for_fixture(3, 2, vec![0.1], 0, 1);
        assert!(run_simulation(&cfg).is_err());
        cfg.trials = 1;
        cfg.sigmas = vec![-1.0];
        assert!(run_simulation(&cfg).is_err());
        cfg.sigmas = vec![0.1];
        cfg.primes = Some(vec![3]);
        assert!(run_simulation(&cfg).is_err());
    }
}

//! JSON code-specification documents and build reports.
//!
//! ```json
//! {"primes": [3], "n": 2,
//!  "levels": [{"prime": 3, "side": "pi",    "generator": [[[2,0,0,0],[0,0,0,0]]]},
//!             {"prime": 3, "side": "pibar", "generator": [[[2,0,0,0],[2,0,0,0]]]}]}
//! ```
//!
//! Generator entries are doubled quadruples. An optional `"irreducibles"`
//! array pins the `π` used for each prime (same order as `"primes"`).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::code::{build_code, LevelCodeSpec, PiACode, Side};
use crate::crt::{build_crt_context, CrtContext, IrreducibleFactor};
use crate::error::{Error, Result};
use crate::quaternion::HurwitzInt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub prime: i64,
    pub side: Side,
    pub generator: Vec<Vec<HurwitzInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecDoc {
    pub primes: Vec<i64>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibles: Option<Vec<HurwitzInt>>,
    pub levels: Vec<LevelDoc>,
}

impl CodeSpecDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn context(&self) -> Result<CrtContext> {
        match &self.irreducibles {
            None => build_crt_context(&self.primes),
            Some(pis) => {
                if pis.len() != self.primes.len() {
                    return Err(Error::LengthMismatch { expected: self.primes.len(), got: pis.len() });
                }
                let factors = self
                    .primes
                    .iter()
                    .zip(pis)
                    .map(|(p, pi)| IrreducibleFactor::with_pi(*p, *pi))
                    .collect::<Result<Vec<_>>>()?;
                CrtContext::with_factors(factors)
            }
        }
    }

    pub fn build(&self) -> Result<PiACode> {
        let ctx = self.context()?;
        let specs = self
            .levels
            .iter()
            .map(|l| {
                let level = ctx
                    .level_index(l.prime)
                    .ok_or_else(|| Error::InvalidSpec(format!("level prime {} not in primes", l.prime)))?;
                LevelCodeSpec::new(level, l.side, self.n, l.generator.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        build_code(&ctx, specs)
    }
}

/// Summary emitted by the `build` command.
#[derive(Clone, Debug, Serialize)]
pub struct BuildReport {
    pub q: i64,
    pub n: usize,
    pub size: usize,
    pub level_sizes: Vec<LevelSize>,
    pub volume: f64,
    pub d_min: f64,
    pub d_min_sq: i64,
    pub d_min_exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelSize {
    pub prime: i64,
    pub side: Side,
    pub rank: usize,
    pub size: usize,
}

impl BuildReport {
    pub fn new(code: &PiACode) -> Self {
        let d = code.min_distance();
        BuildReport {
            q: code.q(),
            n: code.n(),
            size: code.len(),
            level_sizes: code
                .levels()
                .iter()
                .map(|l| LevelSize {
                    prime: code.ctx().levels()[l.spec().level].p(),
                    side: l.spec().side,
                    rank: l.spec().rank(),
                    size: l.len(),
                })
                .collect(),
            volume: code.lattice_volume(),
            d_min: d.value(),
            d_min_sq: d.squared,
            d_min_exact: d.exact,
        }
    }
}

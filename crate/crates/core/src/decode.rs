//! Serial modulo decoding (SMD) and exhaustive maximum-likelihood decoding.
//!
//! SMD walks the prime levels in context order. At each level it reduces the
//! running received word modulo `ℋπ_j`, decodes the `π` side exhaustively,
//! subtracts the re-encoded contribution `ν_jζ_jγ_j·(ĉ·π̄_j)`, and repeats for
//! the `π̄` side. What is left is the noise plus a `qℋⁿ` vector.
//!
//! All the subtracted terms are exact Hurwitz vectors, so the decoded lattice
//! point is assembled exactly; floating point is only used for distances.

use std::time::{Duration, Instant};

use crate::code::{LatticePoint, LevelCode, PiACode, Side};
use crate::error::{Error, Result};
use crate::quantize::{round_real, Reduce};
use crate::quaternion::{HurwitzInt, RealQuaternion};
use crate::residues::Modulus;

/// Outcome of one decode.
#[derive(Clone, Debug)]
pub struct DecodeResult {
    pub point: LatticePoint,
    /// Decoded level codewords, indexed `2j + side` (empty for MLD).
    pub per_level_messages: Vec<Vec<HurwitzInt>>,
    /// `ŵ = y − x̂` in `ℝ⁴ⁿ`.
    pub residual_noise: Vec<RealQuaternion>,
    pub elapsed: Duration,
}

/// `Σ_i ‖(y_i − c_i) mod modulus‖²`.
pub fn wrapped_distance_sq(y: &[RealQuaternion], c: &[HurwitzInt], modulus: &Modulus) -> f64 {
    debug_assert_eq!(y.len(), c.len());
    y.iter().zip(c).map(|(y, c)| modulus.reduce_real(&(*y - c.to_real())).norm_sq()).sum()
}

/// Exhaustive nearest codeword of one level code under its left-ideal metric.
/// Returns the codeword ordinal; ties go to the lower ordinal.
pub fn level_decode(y: &[RealQuaternion], level: &LevelCode) -> usize {
    nearest(y, level.codewords(), &Modulus::LeftIdeal(level.ideal()))
}

fn nearest(y: &[RealQuaternion], codewords: &[Vec<HurwitzInt>], modulus: &Modulus) -> usize {
    let mut best = (f64::INFINITY, 0);
    for (i, c) in codewords.iter().enumerate() {
        let d = wrapped_distance_sq(y, c, modulus);
        if d < best.0 {
            best = (d, i);
        }
    }
    best.1
}

fn check_len(y: &[RealQuaternion], code: &PiACode) -> Result<()> {
    if y.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), got: y.len() });
    }
    if code.is_empty() {
        return Err(Error::EmptyCodebook);
    }
    Ok(())
}

/// Exact ML decoding for `C + qℋⁿ`: nearest codeword under the `qℋⁿ`-wrapped
/// metric, then the nearest translate of that codeword.
pub fn mld_decode(y: &[RealQuaternion], code: &PiACode) -> Result<DecodeResult> {
    check_len(y, code)?;
    let start = Instant::now();
    let q = code.q();
    let best = nearest(y, code.codewords(), &Modulus::TwoSided(q));
    let c = &code.codewords()[best];
    let point: Vec<HurwitzInt> =
        y.iter().zip(c).map(|(y, c)| *c + round_real(&(*y - c.to_real()).scale(1.0 / q as f64)).scale(q)).collect();
    let residual_noise = y.iter().zip(&point).map(|(y, x)| *y - x.to_real()).collect();
    Ok(DecodeResult {
        point: LatticePoint(point),
        per_level_messages: Vec::new(),
        residual_noise,
        elapsed: start.elapsed(),
    })
}

/// Serial modulo decoder.
pub fn smd_decode(y: &[RealQuaternion], code: &PiACode) -> Result<DecodeResult> {
    let order: Vec<usize> = (0..code.ctx().levels().len()).collect();
    smd_decode_ordered(y, code, &order)
}

/// [`smd_decode`] with an explicit level processing order.
pub fn smd_decode_ordered(y: &[RealQuaternion], code: &PiACode, order: &[usize]) -> Result<DecodeResult> {
    check_len(y, code)?;
    let k = code.ctx().levels().len();
    let mut seen = vec![false; k];
    for &j in order {
        if j >= k || std::mem::replace(&mut seen[j], true) {
            return Err(Error::InvalidSpec(format!("bad level order {order:?}")));
        }
    }
    if order.len() != k {
        return Err(Error::LengthMismatch { expected: k, got: order.len() });
    }

    let start = Instant::now();
    let q = code.q();
    let inv_q = 1.0 / q as f64;
    // Exact lattice part removed so far; `running = y − removed` throughout.
    let mut removed: Vec<HurwitzInt> = y.iter().map(|v| round_real(&v.scale(inv_q)).scale(q)).collect();
    let mut running: Vec<RealQuaternion> = y.iter().zip(&removed).map(|(v, r)| *v - r.to_real()).collect();
    let mut messages = vec![Vec::new(); 2 * k];

    for &j in order {
        let f = &code.ctx().levels()[j];
        let coeff = code.ctx().level_coefficient(j);
        for side in [Side::Pi, Side::PiBar] {
            let level = code.level(j, side);
            let ideal = level.ideal();
            let reduced: Vec<RealQuaternion> = running.iter().map(|v| v.mod_left_ideal(&ideal)).collect();
            let word = &level.codewords()[level_decode(&reduced, level)];
            let partner = match side {
                Side::Pi => f.pi_bar(),
                Side::PiBar => f.pi(),
            };
            for ((r, v), c) in removed.iter_mut().zip(running.iter_mut()).zip(word) {
                let term = (*c * partner).scale(coeff);
                *r = *r + term;
                *v = *v - term.to_real();
            }
            messages[2 * j + side.slot()] = word.clone();
        }
    }

    for (r, v) in removed.iter_mut().zip(running.iter_mut()) {
        let wrap = round_real(&v.scale(inv_q)).scale(q);
        *r = *r + wrap;
        *v = *v - wrap.to_real();
    }
    Ok(DecodeResult {
        point: LatticePoint(removed),
        per_level_messages: messages,
        residual_noise: running,
        elapsed: start.elapsed(),
    })
}

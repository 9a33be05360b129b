//! Multilevel Construction π_A codes over the Hurwitz order.
//!
//! Each prime level `p_j` carries two linear codes, one over `ℋ/ℋπ_j` and one
//! over `ℋ/ℋπ̄_j`. Their Cartesian product is glued into `(ℋ/qℋ)ⁿ` by the CRT
//! combiner, and the lattice is `C + qℋⁿ`.
//!
//! Generators are stored as rows and messages multiply from the right:
//! `codeword_i = Σ_l g_{l,i} · u_l`. For a left ideal `ℋπ`,
//! `g·(u + hπ) = g·u + (gh)π`, so the codeword depends only on the class of
//! `u`, and each level code is an additive subgroup of `(ℋ/ℋπ)ⁿ`.

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crt::{phi_combine_unchecked, CrtContext};
use crate::error::{Error, Result};
use crate::quantize::Reduce;
use crate::quaternion::{HurwitzInt, RealQuaternion};
use crate::residues::{enumerate_residues, Modulus};

/// Which left ideal of a prime level a code lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Codes over `ℋ/ℋπ`.
    Pi,
    /// Codes over `ℋ/ℋπ̄`.
    PiBar,
}

impl Side {
    pub fn slot(self) -> usize {
        match self {
            Side::Pi => 0,
            Side::PiBar => 1,
        }
    }
}

/// Generator of one level code: `m` rows of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCodeSpec {
    pub level: usize,
    pub side: Side,
    pub generator: Vec<Vec<HurwitzInt>>,
    n: usize,
}

impl LevelCodeSpec {
    pub fn new(level: usize, side: Side, n: usize, generator: Vec<Vec<HurwitzInt>>) -> Result<Self> {
        if let Some(row) = generator.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: row.len() });
        }
        if generator.len() > n {
            return Err(Error::InvalidSpec(format!("rank {} exceeds block length {n}", generator.len())));
        }
        Ok(LevelCodeSpec { level, side, generator, n })
    }

    /// The zero code (no generator rows).
    pub fn zero(level: usize, side: Side, n: usize) -> Self {
        LevelCodeSpec { level, side, generator: Vec::new(), n }
    }

    /// The full space `(ℋ/ℋπ)ⁿ`.
    pub fn full(level: usize, side: Side, n: usize) -> Self {
        let generator =
            (0..n).map(|r| (0..n).map(|c| if r == c { HurwitzInt::ONE } else { HurwitzInt::ZERO }).collect()).collect();
        LevelCodeSpec { level, side, generator, n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.generator.len()
    }
}

/// All codewords `Σ_l g_l·u_l` over `u ∈ (ℋ/ideal)^m`, canonical and sorted.
pub fn enumerate_level_code(spec: &LevelCodeSpec, ideal: &HurwitzInt) -> Result<Vec<Vec<HurwitzInt>>> {
    let modulus = Modulus::LeftIdeal(*ideal);
    let residues = enumerate_residues(modulus)?;
    let rows: Vec<Vec<HurwitzInt>> =
        spec.generator.iter().map(|r| r.iter().map(|g| modulus.reduce(g)).collect()).collect();
    let base = residues.len();
    let m = rows.len();
    let total = base.checked_pow(m as u32).ok_or(Error::Overflow("level code size"))?;
    let mut words: Vec<Vec<HurwitzInt>> = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut word = vec![HurwitzInt::ZERO; spec.n];
            for row in &rows {
                let u = residues.elements()[idx % base];
                idx /= base;
                for (w, g) in word.iter_mut().zip(row) {
                    *w = *w + *g * u;
                }
            }
            word.iter().map(|w| modulus.reduce(w)).collect()
        })
        .collect();
    words.par_sort_unstable();
    words.dedup();
    Ok(words)
}

/// One enumerated level code together with its ideal.
#[derive(Clone, Debug)]
pub struct LevelCode {
    spec: LevelCodeSpec,
    ideal: HurwitzInt,
    codewords: Vec<Vec<HurwitzInt>>,
}

impl LevelCode {
    pub fn spec(&self) -> &LevelCodeSpec {
        &self.spec
    }

    /// The generator of the left ideal this code is reduced modulo.
    pub fn ideal(&self) -> HurwitzInt {
        self.ideal
    }

    pub fn codewords(&self) -> &[Vec<HurwitzInt>] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }
}

/// A point of `Hⁿ`, i.e. of `ℝ⁴ⁿ` through `(a,b,c,d) ↦ a+bi+cj+dk` per block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint(pub Vec<HurwitzInt>);

impl LatticePoint {
    pub fn zero(n: usize) -> Self {
        LatticePoint(vec![HurwitzInt::ZERO; n])
    }

    pub fn to_real(&self) -> Vec<RealQuaternion> {
        self.0.iter().map(|h| h.to_real()).collect()
    }

    /// Squared Euclidean norm in `ℝ⁴ⁿ`; always an integer.
    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|h| h.norm()).sum()
    }
}

/// Minimum distance with a flag telling whether it is exact or an upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinDistance {
    pub squared: i64,
    pub exact: bool,
}

impl MinDistance {
    pub fn value(&self) -> f64 {
        (self.squared as f64).sqrt()
    }
}

/// A built Construction π_A code.
#[derive(Clone, Debug)]
pub struct PiACode {
    ctx: CrtContext,
    n: usize,
    /// Indexed `2·level + side.slot()`.
    levels: Vec<LevelCode>,
    codewords: Vec<Vec<HurwitzInt>>,
    index: HashMap<Vec<HurwitzInt>, usize>,
}

/// Builds the combined codebook from `2k` level specs (any order).
pub fn build_code(ctx: &CrtContext, specs: Vec<LevelCodeSpec>) -> Result<PiACode> {
    let k = ctx.levels().len();
    if specs.len() != 2 * k {
        return Err(Error::LengthMismatch { expected: 2 * k, got: specs.len() });
    }
    let n = specs[0].n;
    let mut slots: Vec<Option<LevelCodeSpec>> = vec![None; 2 * k];
    for spec in specs {
        if spec.n != n {
            return Err(Error::InvalidSpec(format!("level {} has n = {}, expected {n}", spec.level, spec.n)));
        }
        if spec.level >= k {
            return Err(Error::InvalidSpec(format!("level {} out of range", spec.level)));
        }
        let slot = 2 * spec.level + spec.side.slot();
        if slots[slot].is_some() {
            return Err(Error::InvalidSpec(format!("level {} {:?} given twice", spec.level, spec.side)));
        }
        slots[slot] = Some(spec);
    }
    let levels = slots
        .into_iter()
        .map(|s| {
            let spec = s.expect("every slot filled once");
            let f = &ctx.levels()[spec.level];
            let ideal = match spec.side {
                Side::Pi => f.pi(),
                Side::PiBar => f.pi_bar(),
            };
            let codewords = enumerate_level_code(&spec, &ideal)?;
            Ok(LevelCode { spec, ideal, codewords })
        })
        .collect::<Result<Vec<_>>>()?;

    let sizes: Vec<usize> = levels.iter().map(|l| l.len()).collect();
    let total =
        sizes.iter().try_fold(1usize, |acc, s| acc.checked_mul(*s)).ok_or(Error::Overflow("combined code size"))?;
    let mut codewords: Vec<Vec<HurwitzInt>> =
        (0..total).into_par_iter().map(|idx| combine_indices(ctx, &levels, n, &mixed_radix(idx, &sizes))).collect();
    codewords.par_sort_unstable();
    codewords.dedup();
    if codewords.len() != total {
        return Err(Error::Invariant(format!("CRT combine not injective: {} of {total}", codewords.len())));
    }
    let index = codewords.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    Ok(PiACode { ctx: ctx.clone(), n, levels, codewords, index })
}

fn mixed_radix(mut idx: usize, sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .map(|s| {
            let d = idx % s;
            idx /= s;
            d
        })
        .collect()
}

fn combine_indices(ctx: &CrtContext, levels: &[LevelCode], n: usize, picks: &[usize]) -> Vec<HurwitzInt> {
    let mut residues = vec![HurwitzInt::ZERO; levels.len()];
    (0..n)
        .map(|i| {
            for (slot, (level, pick)) in levels.iter().zip(picks).enumerate() {
                residues[slot] = level.codewords[*pick][i];
            }
            phi_combine_unchecked(&residues, ctx)
        })
        .collect()
}

impl PiACode {
    pub fn ctx(&self) -> &CrtContext {
        &self.ctx
    }

    pub fn q(&self) -> i64 {
        self.ctx.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    /// Codewords in ascending canonical order.
    pub fn codewords(&self) -> &[Vec<HurwitzInt>] {
        &self.codewords
    }

    pub fn levels(&self) -> &[LevelCode] {
        &self.levels
    }

    pub fn level(&self, j: usize, side: Side) -> &LevelCode {
        &self.levels[2 * j + side.slot()]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    /// Ordinal of a canonical codeword.
    pub fn ordinal(&self, canonical: &[HurwitzInt]) -> Option<usize> {
        self.index.get(canonical).copied()
    }

    /// Canonical reduction of a Hurwitz vector modulo `qℋⁿ`.
    pub fn reduce(&self, x: &[HurwitzInt]) -> Vec<HurwitzInt> {
        x.iter().map(|h| h.mod_two_sided(self.q())).collect()
    }

    /// `x mod qℋⁿ ∈ C`.
    pub fn is_lattice_member(&self, x: &LatticePoint) -> bool {
        x.0.len() == self.n && self.index.contains_key(&self.reduce(&x.0))
    }

    /// `(q⁴/2)ⁿ / |C|`: the volume of `qℋⁿ` shared among the codewords.
    pub fn lattice_volume(&self) -> f64 {
        let cell = (self.q() as f64).powi(4) / 2.0;
        cell.powi(self.n as i32) / self.len() as f64
    }

    /// Exact minimum distance.
    ///
    /// `qℋⁿ` is a coordinatewise product, so the shortest vector of a coset
    /// `c + qℋⁿ` is the centered representative of `c`; the zero coset adds the
    /// shortest nonzero vectors of `qℋ`, of squared norm `q²`.
    pub fn min_distance(&self) -> MinDistance {
        let q = self.q();
        let best = self
            .codewords
            .par_iter()
            .filter(|c| c.iter().any(|h| !h.is_zero()))
            .map(|c| c.iter().map(|h| h.norm()).sum::<i64>())
            .min()
            .unwrap_or(i64::MAX);
        MinDistance { squared: best.min(q * q), exact: true }
    }

    /// Combines one codeword per level (indices into the level codebooks).
    pub fn combine_level_words(&self, picks: &[usize]) -> Result<LatticePoint> {
        if picks.len() != self.levels.len() {
            return Err(Error::LengthMismatch { expected: self.levels.len(), got: picks.len() });
        }
        if let Some((l, p)) = self.levels.iter().zip(picks).find(|(l, p)| **p >= l.len()) {
            return Err(Error::InvalidSpec(format!("codeword index {p} out of range {}", l.len())));
        }
        Ok(LatticePoint(combine_indices(&self.ctx, &self.levels, self.n, picks)))
    }

    /// Encodes per-level messages: `messages[2j + side]` holds the `m` right
    /// scalars for that level code.
    pub fn encode(&self, messages: &[Vec<HurwitzInt>]) -> Result<LatticePoint> {
        if messages.len() != self.levels.len() {
            return Err(Error::LengthMismatch { expected: self.levels.len(), got: messages.len() });
        }
        let mut residues = vec![vec![HurwitzInt::ZERO; self.n]; self.levels.len()];
        for ((level, msg), out) in self.levels.iter().zip(messages).zip(residues.iter_mut()) {
            if msg.len() != level.spec.rank() {
                return Err(Error::LengthMismatch { expected: level.spec.rank(), got: msg.len() });
            }
            for (u, row) in msg.iter().zip(&level.spec.generator) {
                for (o, g) in out.iter_mut().zip(row) {
                    *o = *o + *g * *u;
                }
            }
            for o in out.iter_mut() {
                *o = o.mod_left_ideal(&level.ideal);
            }
        }
        let coords = (0..self.n)
            .map(|i| {
                let r: Vec<HurwitzInt> = residues.iter().map(|v| v[i]).collect();
                phi_combine_unchecked(&r, &self.ctx)
            })
            .collect();
        Ok(LatticePoint(coords))
    }

    /// Uniform codeword, optionally shifted by a random `qℋⁿ` vector whose
    /// quotient coordinates lie in `[-translate_box, translate_box]`.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R, translate_box: u32) -> LatticePoint {
        let picks: Vec<usize> = self.levels.iter().map(|l| rng.gen_range(0..l.len())).collect();
        let mut x = LatticePoint(combine_indices(&self.ctx, &self.levels, self.n, &picks));
        if translate_box > 0 {
            let b = 2 * translate_box as i64;
            for h in x.0.iter_mut() {
                let odd = rng.gen_bool(0.5) as i64;
                let d = std::array::from_fn(|_| 2 * rng.gen_range(-b / 2..=b / 2) + odd);
                *h = *h + HurwitzInt::from_doubled(d).expect("uniform parity").scale(self.q());
            }
        }
        x
    }

    /// Deterministic [`PiACode::random_point`] from a seed.
    pub fn random_codeword(&self, seed: u64) -> LatticePoint {
        self.random_point(&mut ChaCha8Rng::seed_from_u64(seed), 0)
    }

    /// Set of canonical codewords, for set comparisons in checks.
    pub fn codeword_set(&self) -> HashSet<Vec<HurwitzInt>> {
        self.codewords.iter().cloned().collect()
    }
}

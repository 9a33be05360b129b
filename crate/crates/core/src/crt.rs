//! Prime splitting `ℋ/pℋ ≅ ℋ/ℋπ × ℋ/ℋπ̄` and its multi-prime extension
//! `ℋ/qℋ ≅ Π_j ℋ/ℋπ_j × ℋ/ℋπ̄_j`.
//!
//! Combiners always place the residue on the left of the conjugate factor,
//! `γ·(r₁·π̄ + r₂·π)`. Right multiplication is the only form that is well
//! defined on cosets of the left ideals `ℋπ`: `(r + hπ)·π̄ = rπ̄ + hp`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantize::Reduce;
use crate::quaternion::HurwitzInt;

pub(crate) fn is_odd_prime(p: i64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `m` in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (g, s, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| s.rem_euclid(m))
}

/// An odd prime `p` with an irreducible `π` of norm `p` and the combiner `γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactor {
    p: i64,
    pi: HurwitzInt,
    gamma: i64,
}

impl IrreducibleFactor {
    /// Uses the given `π`; requires `Nrm(π) = p` and `2·Re(π)` invertible mod `p`.
    pub fn with_pi(p: i64, pi: HurwitzInt) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if pi.norm() != p {
            return Err(Error::Invariant(format!("Nrm({}) = {} but p = {p}", pi.pretty(), pi.norm())));
        }
        let gamma = mod_inverse(pi.doubled_re(), p)
            .ok_or_else(|| Error::Invariant(format!("2Re({}) not invertible mod {p}", pi.pretty())))?;
        Ok(IrreducibleFactor { p, pi, gamma })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn pi(&self) -> HurwitzInt {
        self.pi
    }

    pub fn pi_bar(&self) -> HurwitzInt {
        self.pi.conj()
    }

    /// `2·Re(π)`.
    pub fn doubled_re(&self) -> i64 {
        self.pi.doubled_re()
    }

    /// `γ` with `γ·2Re(π) ≡ 1 (mod p)`.
    pub fn gamma(&self) -> i64 {
        self.gamma
    }
}

/// Deterministic irreducible search.
///
/// Looks for a Lipschitz point `re + bi + cj + dk` of norm `p` with `re = 1`,
/// then `re = 2`, and `b, c, d ≥ 0`. Among the candidates the triple `(b, c, d)`
/// is taken lexicographically smallest with `0` ranked above every positive
/// value, so nonzero parts come first in ascending order (`1+i+j`, `1+i+j+2k`,
/// `2+3i+4j`).
pub fn find_irreducible(p: i64) -> Result<IrreducibleFactor> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let bound = (p as f64).sqrt().ceil() as i64;
    let key = |v: i64| if v == 0 { i64::MAX } else { v };
    for re in [1, 2] {
        let best = (0..=bound)
            .flat_map(|b| (0..=bound).flat_map(move |c| (0..=bound).map(move |d| (b, c, d))))
            .filter(|(b, c, d)| re * re + b * b + c * c + d * d == p)
            .min_by_key(|&(b, c, d)| (key(b), key(c), key(d)));
        if let Some((b, c, d)) = best {
            return IrreducibleFactor::with_pi(p, HurwitzInt::lipschitz(re, b, c, d));
        }
    }
    // Unreachable: p − 1 or p − 4 is a sum of three squares for every odd prime.
    Err(Error::Invariant(format!("no irreducible of norm {p} found")))
}

/// `a ↦ (a mod ℋπ, a mod ℋπ̄)`.
pub fn psi_split(a: &HurwitzInt, f: &IrreducibleFactor) -> (HurwitzInt, HurwitzInt) {
    (a.mod_left_ideal(&f.pi()), a.mod_left_ideal(&f.pi_bar()))
}

/// `γ·(r₁·π̄ + r₂·π) mod pℋ`, the inverse of [`psi_split`].
pub fn psi_combine(r1: &HurwitzInt, r2: &HurwitzInt, f: &IrreducibleFactor) -> HurwitzInt {
    combine_with(r1, r2, f.p, f.pi, f.gamma)
}

/// Combiner on raw parts; lets the self-test probe corrupted `γ` values.
pub fn combine_with(r1: &HurwitzInt, r2: &HurwitzInt, p: i64, pi: HurwitzInt, gamma: i64) -> HurwitzInt {
    (*r1 * pi.conj() + *r2 * pi).scale(gamma).mod_two_sided(p)
}

/// Ordered prime levels with the integer CRT data `ν_j = q/p_j` and `ζ_j`,
/// `Σ ν_j ζ_j = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CrtContextDoc", into = "CrtContextDoc")]
pub struct CrtContext {
    levels: Vec<IrreducibleFactor>,
    q: i64,
    nu: Vec<i64>,
    zeta: Vec<i64>,
    /// `ν_j ζ_j γ_j mod q`, the per-level scale in the combiner.
    coeff: Vec<i64>,
}

/// Builds the context for the given distinct odd primes, using
/// [`find_irreducible`] for each level. Levels are sorted ascending.
pub fn build_crt_context(primes: &[i64]) -> Result<CrtContext> {
    let factors = primes.iter().map(|&p| find_irreducible(p)).collect::<Result<Vec<_>>>()?;
    CrtContext::with_factors(factors)
}

impl CrtContext {
    pub fn with_factors(mut levels: Vec<IrreducibleFactor>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidSpec("at least one prime level is required".into()));
        }
        levels.sort_by_key(|f| f.p);
        for w in levels.windows(2) {
            if w[0].p == w[1].p {
                return Err(Error::RepeatedPrime(w[0].p));
            }
        }
        let q = levels.iter().try_fold(1i64, |acc, f| acc.checked_mul(f.p)).ok_or(Error::Overflow("q"))?;
        let nu: Vec<i64> = levels.iter().map(|f| q / f.p).collect();
        // ζ_j = ν_j⁻¹ mod p_j for all but the last level, which absorbs the rest.
        let k = levels.len();
        let mut zeta = Vec::with_capacity(k);
        let mut acc = 0i64;
        for j in 0..k - 1 {
            let z = mod_inverse(nu[j], levels[j].p).expect("ν_j coprime to p_j");
            acc += nu[j] * z;
            zeta.push(z);
        }
        let rest = 1 - acc;
        debug_assert_eq!(rest % nu[k - 1], 0);
        zeta.push(rest / nu[k - 1]);
        let coeff = (0..k)
            .map(|j| (nu[j] as i128 * zeta[j] as i128 * levels[j].gamma as i128).rem_euclid(q as i128) as i64)
            .collect();
        Ok(CrtContext { levels, q, nu, zeta, coeff })
    }

    pub fn levels(&self) -> &[IrreducibleFactor] {
        &self.levels
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn primes(&self) -> Vec<i64> {
        self.levels.iter().map(|f| f.p).collect()
    }

    pub fn nu(&self) -> &[i64] {
        &self.nu
    }

    pub fn zeta(&self) -> &[i64] {
        &self.zeta
    }

    /// `ν_j ζ_j γ_j mod q` for level `j`.
    pub fn level_coefficient(&self, j: usize) -> i64 {
        self.coeff[j]
    }

    pub fn level_index(&self, p: i64) -> Option<usize> {
        self.levels.iter().position(|f| f.p == p)
    }
}

/// `a ↦ (a mod ℋπ₁, a mod ℋπ̄₁, …, a mod ℋπ_k, a mod ℋπ̄_k)`.
pub fn phi_split(a: &HurwitzInt, ctx: &CrtContext) -> Vec<HurwitzInt> {
    ctx.levels
        .iter()
        .flat_map(|f| {
            let (r1, r2) = psi_split(a, f);
            [r1, r2]
        })
        .collect()
}

/// `Σ_j ν_jζ_jγ_j·(a_j⁽¹⁾·π̄_j + a_j⁽²⁾·π_j) mod qℋ`.
pub fn phi_combine(residues: &[HurwitzInt], ctx: &CrtContext) -> Result<HurwitzInt> {
    if residues.len() != 2 * ctx.levels.len() {
        return Err(Error::LengthMismatch { expected: 2 * ctx.levels.len(), got: residues.len() });
    }
    Ok(phi_combine_unchecked(residues, ctx))
}

pub(crate) fn phi_combine_unchecked(residues: &[HurwitzInt], ctx: &CrtContext) -> HurwitzInt {
    let mut sum = HurwitzInt::ZERO;
    for (j, f) in ctx.levels.iter().enumerate() {
        let (r1, r2) = (residues[2 * j], residues[2 * j + 1]);
        let term = (r1 * f.pi_bar() + r2 * f.pi()).scale(ctx.coeff[j]);
        sum = (sum + term).mod_two_sided(ctx.q);
    }
    sum
}

#[derive(Serialize, Deserialize)]
struct LevelDoc {
    p: i64,
    pi: HurwitzInt,
    gamma: i64,
}

#[derive(Serialize, Deserialize)]
struct CrtContextDoc {
    primes: Vec<i64>,
    q: i64,
    levels: Vec<LevelDoc>,
    nu: Vec<i64>,
    zeta: Vec<i64>,
}

impl From<CrtContext> for CrtContextDoc {
    fn from(c: CrtContext) -> Self {
        CrtContextDoc {
            primes: c.primes(),
            q: c.q,
            levels: c.levels.iter().map(|f| LevelDoc { p: f.p, pi: f.pi, gamma: f.gamma }).collect(),
            nu: c.nu,
            zeta: c.zeta,
        }
    }
}

impl TryFrom<CrtContextDoc> for CrtContext {
    type Error = Error;

    fn try_from(doc: CrtContextDoc) -> Result<Self> {
        let factors = doc.levels.iter().map(|l| IrreducibleFactor::with_pi(l.p, l.pi)).collect::<Result<Vec<_>>>()?;
        let ctx = CrtContext::with_factors(factors)?;
        let gammas: Vec<i64> = doc.levels.iter().map(|l| l.gamma).collect();
        let expected: Vec<i64> = ctx.levels.iter().map(|f| f.gamma).collect();
        if ctx.primes() != doc.primes
            || ctx.q != doc.q
            || gammas != expected
            || ctx.nu != doc.nu
            || ctx.zeta != doc.zeta
        {
            return Err(Error::InvalidSpec("stored CRT data disagrees with recomputation".into()));
        }
        Ok(ctx)
    }
}

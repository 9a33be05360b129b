//! Cross-ring decoding-complexity comparison for constellations of size `q⁴ⁿ`
//! in `ℝ⁴ⁿ`, built by Construction π_A over `ℤ`, `ℤ[i]`, `ℤ[ω]` and `ℋ`.
//!
//! A multilevel decoder is dominated by its largest level, so the proxy is
//! `|C_max|·log₂|C_max|`. Per prime `p` of `q`:
//!
//! | ring  | split                         | not split      |
//! |-------|-------------------------------|----------------|
//! | ℤ     | –                             | `p^{4n}`       |
//! | ℤ[i]  | `p^{2n}` (`p ≡ 1 mod 4`)      | `p^{4n}`       |
//! | ℤ[ω]  | `p^{2n}` (`p ≡ 1 mod 3`)      | `p^{4n}`       |
//! | ℋ     | `p^{2n}` (every odd `p`)      | –              |
//!
//! Ramified primes (2 in `ℤ[i]`, 3 in `ℤ[ω]`) count as not split.

use std::fmt;

use serde::Serialize;

use crate::crt::{find_irreducible, is_odd_prime};
use crate::error::{Error, Result};
use crate::fixtures::odd_squarefree_factors;
use crate::quaternion::HurwitzInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Ring {
    Integers,
    Gaussian,
    Eisenstein,
    Hurwitz,
}

impl Ring {
    pub const ALL: [Ring; 4] = [Ring::Integers, Ring::Gaussian, Ring::Eisenstein, Ring::Hurwitz];

    pub fn symbol(self) -> &'static str {
        match self {
            Ring::Integers => "Z",
            Ring::Gaussian => "Z[i]",
            Ring::Eisenstein => "Z[w]",
            Ring::Hurwitz => "H",
        }
    }

    /// Code length over this ring for real dimension `4n`.
    pub fn native_length(self, n: u32) -> u32 {
        match self {
            Ring::Integers => 4 * n,
            Ring::Gaussian | Ring::Eisenstein => 2 * n,
            Ring::Hurwitz => n,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Splitting {
    Splits,
    NonSplits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitClass {
    pub ring: Ring,
    pub p: i64,
    pub class: Splitting,
}

pub fn split_class(ring: Ring, p: i64) -> SplitClass {
    let splits = match ring {
        Ring::Integers => false,
        Ring::Gaussian => p % 4 == 1,
        Ring::Eisenstein => p % 3 == 1,
        Ring::Hurwitz => p % 2 == 1,
    };
    SplitClass { ring, p, class: if splits { Splitting::Splits } else { Splitting::NonSplits } }
}

/// `a + bi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub a: i64,
    pub b: i64,
}

impl GaussianInt {
    pub fn norm(&self) -> i64 {
        self.a * self.a + self.b * self.b
    }

    pub fn conj(&self) -> Self {
        GaussianInt { a: self.a, b: -self.b }
    }
}

/// `a + bω` with `ω = (−1 + √−3)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub fn norm(&self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// `a + bω̄ = (a − b) − bω`.
    pub fn conj(&self) -> Self {
        EisensteinInt { a: self.a - self.b, b: -self.b }
    }
}

fn fmt_binomial(f: &mut fmt::Formatter<'_>, a: i64, b: i64, unit: &str) -> fmt::Result {
    match (a, b) {
        (a, 0) => write!(f, "{a}"),
        (0, b) => write!(f, "{b}{unit}"),
        (a, b) if b < 0 => write!(f, "{a}-{}{unit}", -b),
        (a, b) => write!(f, "{a}+{b}{unit}"),
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_binomial(f, self.a, self.b, "i")
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_binomial(f, self.a, self.b, "w")
    }
}

/// Lexicographically smallest `(a, b)`, `a ≥ 1`, `b ≥ 0`, with `a² + b² = p`.
pub fn find_gaussian_factor(p: i64) -> Option<GaussianInt> {
    if split_class(Ring::Gaussian, p).class != Splitting::Splits {
        return None;
    }
    let r = (p as f64).sqrt() as i64 + 1;
    (1..=r).flat_map(|a| (0..=r).map(move |b| GaussianInt { a, b })).find(|g| g.norm() == p)
}

/// Lexicographically smallest `(a, b)`, `a ≥ 1`, `b ≥ 0`, with `a² − ab + b² = p`.
pub fn find_eisenstein_factor(p: i64) -> Option<EisensteinInt> {
    if split_class(Ring::Eisenstein, p).class != Splitting::Splits {
        return None;
    }
    let r = 2 * (p as f64).sqrt() as i64 + 2;
    (1..=r).flat_map(|a| (0..=r).map(move |b| EisensteinInt { a, b })).find(|e| e.norm() == p)
}

fn level_sizes(ring: Ring, p: i64, n: u32) -> Vec<u128> {
    let p = p as u128;
    match ring {
        Ring::Integers => vec![p.pow(4 * n)],
        Ring::Hurwitz => vec![p.pow(2 * n); 2],
        Ring::Gaussian | Ring::Eisenstein => match split_class(ring, p as i64).class {
            Splitting::Splits => vec![p.pow(2 * n); 2],
            Splitting::NonSplits => vec![p.pow(4 * n)],
        },
    }
}

/// Residue-ring size of each level component of one prime.
fn residue_sizes(ring: Ring, p: i64) -> Vec<u128> {
    let p = p as u128;
    match ring {
        Ring::Integers => vec![p],
        Ring::Hurwitz => vec![p * p; 2],
        Ring::Gaussian | Ring::Eisenstein => match split_class(ring, p as i64).class {
            Splitting::Splits => vec![p; 2],
            Splitting::NonSplits => vec![p * p],
        },
    }
}

/// Largest level-code cardinality for a constellation in `ℝ⁴ⁿ`.
///
/// With `ranks = None` every level code is the full space. Otherwise `ranks`
/// lists one rank per level component in prime order (two for a split prime,
/// one otherwise) and the level size is `|residue ring|^rank`.
pub fn max_level_cardinality(primes: &[i64], n: u32, ring: Ring, ranks: Option<&[u32]>) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::RepeatedPrime(w[0]));
        }
    }
    if let Some(&p) = sorted.iter().find(|&&p| !is_odd_prime(p)) {
        return Err(Error::NotOddPrime(p));
    }
    match ranks {
        None => Ok(sorted.iter().flat_map(|&p| level_sizes(ring, p, n)).max().unwrap_or(1)),
        Some(ranks) => {
            let sizes: Vec<u128> = sorted.iter().flat_map(|&p| residue_sizes(ring, p)).collect();
            if sizes.len() != ranks.len() {
                return Err(Error::LengthMismatch { expected: sizes.len(), got: ranks.len() });
            }
            let limit = ring.native_length(n);
            if let Some(r) = ranks.iter().find(|&&r| r > limit) {
                return Err(Error::InvalidSpec(format!("rank {r} exceeds code length {limit} over {ring}")));
            }
            Ok(sizes.iter().zip(ranks).map(|(s, r)| s.pow(*r)).max().unwrap_or(1))
        }
    }
}

/// `|C|·log₂|C|`.
pub fn complexity_value(cmax: u128) -> f64 {
    let c = cmax as f64;
    c * c.log2()
}

#[derive(Clone, Debug, Serialize)]
pub struct RingComplexity {
    pub ring: Ring,
    pub cmax: u128,
    pub complexity: f64,
    /// Every prime factor of `q` splits in this ring.
    pub fully_split: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexityRow {
    pub q: i64,
    pub n: u32,
    pub rings: Vec<RingComplexity>,
}

impl ComplexityRow {
    pub fn get(&self, ring: Ring) -> &RingComplexity {
        self.rings.iter().find(|r| r.ring == ring).expect("all rings present")
    }

    /// Largest prime factor of `q`.
    pub fn max_prime(&self) -> i64 {
        *odd_squarefree_factors(self.q).expect("validated").last().expect("nonempty")
    }
}

pub fn complexity_row(q: i64, n: u32) -> Result<ComplexityRow> {
    let primes = odd_squarefree_factors(q)?;
    let rings = Ring::ALL
        .iter()
        .map(|&ring| {
            let cmax = max_level_cardinality(&primes, n, ring, None)?;
            Ok(RingComplexity {
                ring,
                cmax,
                complexity: complexity_value(cmax),
                fully_split: primes.iter().all(|&p| split_class(ring, p).class == Splitting::Splits),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let row = ComplexityRow { q, n, rings };
    let h = row.get(Ring::Hurwitz).cmax;
    let ok =
        h < row.get(Ring::Integers).cmax && h <= row.get(Ring::Gaussian).cmax && h <= row.get(Ring::Eisenstein).cmax;
    if !ok {
        return Err(Error::Invariant(format!("complexity ordering violated for q = {q}")));
    }
    Ok(row)
}

/// Rows for plotting `|C_max|` and `|C_max| log₂ |C_max|` against `q`.
pub fn complexity_table(qs: &[i64], n: u32) -> Result<Vec<ComplexityRow>> {
    qs.iter().map(|&q| complexity_row(q, n)).collect()
}

/// One factor in a factorization row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingFactor {
    /// A rational prime left unsplit.
    Prime(i64),
    Gaussian(GaussianInt),
    Eisenstein(EisensteinInt),
    Hurwitz(HurwitzInt),
}

impl RingFactor {
    /// Norm in the ring the factor lives in (`p²` for an unsplit prime).
    pub fn norm(&self) -> i64 {
        match self {
            RingFactor::Prime(p) => p * p,
            RingFactor::Gaussian(g) => g.norm(),
            RingFactor::Eisenstein(e) => e.norm(),
            RingFactor::Hurwitz(h) => h.norm(),
        }
    }
}

impl fmt::Display for RingFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingFactor::Prime(p) => write!(f, "{p}"),
            RingFactor::Gaussian(g) => write!(f, "({g})"),
            RingFactor::Eisenstein(e) => write!(f, "({e})"),
            RingFactor::Hurwitz(h) => write!(f, "({})", h.pretty()),
        }
    }
}

/// A factorization row as published, kept verbatim for comparison.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceRow {
    pub q: i64,
    pub ring: Ring,
    pub factors: &'static [RingFactor],
}

macro_rules! h {
    ($a:expr, $b:expr, $c:expr, $d:expr) => {
        RingFactor::Hurwitz(HurwitzInt::lipschitz_const($a, $b, $c, $d))
    };
}
macro_rules! g {
    ($a:expr, $b:expr) => {
        RingFactor::Gaussian(GaussianInt { a: $a, b: $b })
    };
}
macro_rules! e {
    ($a:expr, $b:expr) => {
        RingFactor::Eisenstein(EisensteinInt { a: $a, b: $b })
    };
}

/// Published factorizations of constellations in `ℝ⁴`, one row per listed ring.
pub const REFERENCE_TABLE: &[ReferenceRow] = &[
    ReferenceRow { q: 3, ring: Ring::Hurwitz, factors: &[h!(1, 1, 1, 0), h!(1, -1, -1, 0)] },
    ReferenceRow { q: 5, ring: Ring::Gaussian, factors: &[g!(1, 2), g!(1, -2)] },
    ReferenceRow { q: 5, ring: Ring::Hurwitz, factors: &[h!(1, 2, 0, 0), h!(1, -2, 0, 0)] },
    ReferenceRow { q: 7, ring: Ring::Eisenstein, factors: &[e!(1, 3), e!(-2, -3)] },
    ReferenceRow { q: 7, ring: Ring::Hurwitz, factors: &[h!(1, 1, 1, 2), h!(1, -1, -1, -2)] },
    ReferenceRow { q: 11, ring: Ring::Hurwitz, factors: &[h!(1, 1, 3, 0), h!(1, -1, -3, 0)] },
    ReferenceRow { q: 13, ring: Ring::Gaussian, factors: &[g!(2, 3), g!(2, -3)] },
    ReferenceRow { q: 13, ring: Ring::Eisenstein, factors: &[e!(1, 4), e!(-3, -4)] },
    ReferenceRow { q: 13, ring: Ring::Hurwitz, factors: &[h!(1, 2, 2, 2), h!(1, -2, -2, -2)] },
    ReferenceRow { q: 15, ring: Ring::Gaussian, factors: &[RingFactor::Prime(3), g!(1, 2), g!(1, -2)] },
    ReferenceRow {
        q: 15,
        ring: Ring::Hurwitz,
        factors: &[h!(1, 1, 1, 0), h!(1, -1, -1, 0), h!(1, 2, 0, 0), h!(1, -2, 0, 0)],
    },
    ReferenceRow { q: 17, ring: Ring::Gaussian, factors: &[g!(1, 4), g!(1, -4)] },
    ReferenceRow { q: 17, ring: Ring::Hurwitz, factors: &[h!(1, 4, 0, 0), h!(1, -4, 0, 0)] },
    ReferenceRow { q: 19, ring: Ring::Eisenstein, factors: &[e!(2, 5), e!(-3, -5)] },
    ReferenceRow { q: 19, ring: Ring::Hurwitz, factors: &[h!(1, 1, 1, 4), h!(1, -1, -1, -4)] },
    ReferenceRow {
        q: 21,
        ring: Ring::Hurwitz,
        factors: &[h!(1, 1, 1, 0), h!(1, -1, -1, 0), h!(1, 1, 1, 2), h!(1, -1, -1, -2)],
    },
    ReferenceRow { q: 23, ring: Ring::Hurwitz, factors: &[h!(1, 2, 2, 3), h!(1, -2, -2, -3)] },
    ReferenceRow { q: 29, ring: Ring::Gaussian, factors: &[g!(2, 5), g!(2, -5)] },
    ReferenceRow { q: 29, ring: Ring::Hurwitz, factors: &[h!(2, 3, 4, 0), h!(2, -3, -4, 0)] },
    ReferenceRow { q: 31, ring: Ring::Eisenstein, factors: &[e!(1, 6), e!(-5, -6)] },
    ReferenceRow { q: 31, ring: Ring::Hurwitz, factors: &[h!(1, 1, 2, 5), h!(1, -1, -2, -5)] },
    ReferenceRow {
        q: 33,
        ring: Ring::Hurwitz,
        factors: &[h!(1, 1, 1, 0), h!(1, -1, -1, 0), h!(1, 1, 3, 0), h!(1, -1, -3, 0)],
    },
    ReferenceRow { q: 35, ring: Ring::Gaussian, factors: &[RingFactor::Prime(7), g!(1, 2), g!(1, -2)] },
    ReferenceRow { q: 35, ring: Ring::Eisenstein, factors: &[RingFactor::Prime(5), e!(1, 3), e!(-2, -3)] },
    ReferenceRow {
        q: 35,
        ring: Ring::Hurwitz,
        factors: &[h!(1, 2, 0, 0), h!(1, -2, 0, 0), h!(1, 1, 1, 2), h!(1, -1, -1, -2)],
    },
    ReferenceRow { q: 37, ring: Ring::Gaussian, factors: &[g!(1, 6), g!(1, -6)] },
    ReferenceRow { q: 37, ring: Ring::Eisenstein, factors: &[e!(3, 7), e!(-4, -7)] },
    ReferenceRow { q: 37, ring: Ring::Hurwitz, factors: &[h!(1, 2, 4, 4), h!(1, -2, -4, -4)] },
    ReferenceRow { q: 39, ring: Ring::Gaussian, factors: &[RingFactor::Prime(3), g!(2, 3), g!(2, -3)] },
    ReferenceRow {
        q: 39,
        ring: Ring::Hurwitz,
        factors: &[h!(1, 1, 1, 0), h!(1, -1, -1, 0), h!(1, 2, 2, 2), h!(1, -2, -2, -2)],
    },
];

/// The distinct `q` values of [`REFERENCE_TABLE`].
pub fn reference_qs() -> Vec<i64> {
    let mut qs: Vec<i64> = REFERENCE_TABLE.iter().map(|r| r.q).collect();
    qs.dedup();
    qs
}

/// Multiset of norms a correct factorization of `q` over `ring` must have.
fn expected_norms(q: i64, ring: Ring) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for p in odd_squarefree_factors(q)? {
        match split_class(ring, p).class {
            Splitting::Splits => out.extend([p, p]),
            Splitting::NonSplits => out.push(p * p),
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn sorted_text(factors: &[RingFactor]) -> Vec<String> {
    let mut v: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    v.sort();
    v
}

fn sorted_norms(factors: &[RingFactor]) -> Vec<i64> {
    let mut v: Vec<i64> = factors.iter().map(|f| f.norm()).collect();
    v.sort_unstable();
    v
}

/// How our factorization compares with the published row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ReferenceMatch {
    /// Published factors are exactly the computed ones.
    Matches,
    /// Same norms, different factors (associates or another choice of `π`).
    SameNorms,
    /// Published factors have the wrong norms.
    NormMismatch { published: Vec<i64>, expected: Vec<i64> },
    /// The published table has no row for this ring.
    Absent,
}

#[derive(Clone, Debug)]
pub struct FactorRow {
    pub q: i64,
    pub ring: Ring,
    pub factors: Vec<RingFactor>,
    pub cmax: u128,
    pub complexity: f64,
    pub reference: ReferenceMatch,
}

impl FactorRow {
    pub fn norms(&self) -> Vec<i64> {
        self.factors.iter().map(|f| f.norm()).collect()
    }

    pub fn factors_text(&self) -> String {
        self.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("")
    }
}

fn factorize(q: i64, ring: Ring) -> Result<Vec<RingFactor>> {
    let mut out = Vec::new();
    for p in odd_squarefree_factors(q)? {
        match ring {
            Ring::Integers => out.push(RingFactor::Prime(p)),
            Ring::Hurwitz => {
                let f = find_irreducible(p)?;
                out.extend([RingFactor::Hurwitz(f.pi()), RingFactor::Hurwitz(f.pi_bar())]);
            }
            Ring::Gaussian => match find_gaussian_factor(p) {
                Some(g) => out.extend([RingFactor::Gaussian(g), RingFactor::Gaussian(g.conj())]),
                None => out.push(RingFactor::Prime(p)),
            },
            Ring::Eisenstein => match find_eisenstein_factor(p) {
                Some(e) => out.extend([RingFactor::Eisenstein(e), RingFactor::Eisenstein(e.conj())]),
                None => out.push(RingFactor::Prime(p)),
            },
        }
    }
    Ok(out)
}

/// Factorizations over `ℤ[i]`, `ℤ[ω]` and `ℋ` for each `q` (a ring is listed
/// when at least one prime factor splits in it), compared with
/// [`REFERENCE_TABLE`]. Every emitted factor is norm-checked.
pub fn factor_table(qs: &[i64]) -> Result<Vec<FactorRow>> {
    let mut rows = Vec::new();
    for &q in qs {
        let primes = odd_squarefree_factors(q)?;
        for ring in [Ring::Gaussian, Ring::Eisenstein, Ring::Hurwitz] {
            if !primes.iter().any(|&p| split_class(ring, p).class == Splitting::Splits) {
                continue;
            }
            let factors = factorize(q, ring)?;
            let expected = expected_norms(q, ring)?;
            if sorted_norms(&factors) != expected {
                return Err(Error::Invariant(format!("computed {ring} factors of {q} have wrong norms")));
            }
            let reference = match REFERENCE_TABLE.iter().find(|r| r.q == q && r.ring == ring) {
                None => ReferenceMatch::Absent,
                Some(r) => {
                    let published = sorted_norms(r.factors);
                    if sorted_text(r.factors) == sorted_text(&factors) {
                        ReferenceMatch::Matches
                    } else if published == expected {
                        ReferenceMatch::SameNorms
                    } else {
                        ReferenceMatch::NormMismatch { published, expected }
                    }
                }
            };
            let cmax = max_level_cardinality(&primes, 1, ring, None)?;
            rows.push(FactorRow { q, ring, factors, cmax, complexity: complexity_value(cmax), reference });
        }
    }
    Ok(rows)
}

/// CSV rendering with header `q,ring,factors,norms,Cmax,complexity,matches_reference`.
pub fn factor_table_csv(rows: &[FactorRow]) -> String {
    let mut out = String::from("q,ring,factors,norms,Cmax,complexity,matches_reference\n");
    for r in rows {
        let norms = r.norms().iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" ");
        let m = match &r.reference {
            ReferenceMatch::Matches => "yes".to_string(),
            ReferenceMatch::SameNorms => "norms only".to_string(),
            ReferenceMatch::NormMismatch { published, .. } => format!("no (published norms {published:?})"),
            ReferenceMatch::Absent => "absent".to_string(),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{:.3},\"{}\"\n",
            r.q,
            r.ring,
            r.factors_text(),
            norms,
            r.cmax,
            r.complexity,
            m.replace('"', "'")
        ));
    }
    out
}

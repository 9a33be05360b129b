//! Exhaustive invariant suites, runnable from the CLI as `pia selftest`.
//!
//! [`Faults`] lets tests corrupt `γ` or the quantizer tie rule and confirm the
//! matching suite turns red.

use std::fmt;

use rayon::prelude::*;

use crate::code::LatticePoint;
use crate::complexity::{complexity_table, reference_qs};
use crate::crt::{build_crt_context, combine_with, find_irreducible, phi_combine, phi_split, psi_combine, psi_split};
use crate::decode::{mld_decode, smd_decode};
use crate::fixtures;
use crate::quantize::{round_rational_with, TieRule};
use crate::quaternion::{HurwitzInt, RationalQuaternion};
use crate::residues::{enumerate_residues, Modulus};

/// Deliberate corruptions for fault-injection runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Faults {
    pub gamma_offset: i64,
    pub tie_rule: TieRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    /// Violated invariant and a minimal witness.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct SelftestReport {
    pub suites: Vec<SuiteReport>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            match &s.failure {
                None => writeln!(f, "PASS  {:<22} {} checks", s.name, s.checked)?,
                Some(why) => writeln!(f, "FAIL  {:<22} {why}", s.name)?,
            }
        }
        Ok(())
    }
}

type Outcome = Result<usize, String>;

fn suite(name: &'static str, body: impl FnOnce() -> Outcome) -> SuiteReport {
    match body() {
        Ok(checked) => SuiteReport { name, checked, failure: None },
        Err(why) => SuiteReport { name, checked: 0, failure: Some(why) },
    }
}

fn residues(m: Modulus) -> Result<Vec<HurwitzInt>, String> {
    enumerate_residues(m).map(|r| r.elements().to_vec()).map_err(|e| e.to_string())
}

/// The combiner with `γ` inverts the split for `p ∈ {3, 5, 7}`.
fn gamma_suite(faults: &Faults) -> Outcome {
    let mut checked = 0;
    for p in [3, 5, 7] {
        let f = find_irreducible(p).map_err(|e| e.to_string())?;
        let gamma = (f.gamma() + faults.gamma_offset).rem_euclid(p);
        if (gamma * f.doubled_re()).rem_euclid(p) != 1 {
            return Err(format!("gamma·2Re(pi) != 1 mod p, witness p = {p}"));
        }
        for a in residues(Modulus::TwoSided(p))? {
            let (r1, r2) = psi_split(&a, &f);
            if combine_with(&r1, &r2, p, f.pi(), gamma) != a {
                return Err(format!("combiner does not invert the split, witness p = {p}, a = {a}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Rounding is idempotent and commutes with Hurwitz translations, on a grid
/// that contains every integer/half-integer tie.
fn quantizer_suite(faults: &Faults) -> Outcome {
    let shifts = [HurwitzInt::ONE, HurwitzInt::I, HurwitzInt::OMEGA, -HurwitzInt::OMEGA.conj()];
    let grid: Vec<[i64; 4]> =
        (0..4usize.pow(4)).map(|m| std::array::from_fn(|i| ((m >> (2 * i)) & 3) as i64)).collect();
    let round = |x: &RationalQuaternion| round_rational_with(x, faults.tie_rule);
    let mut checked = 0;
    for num in &grid {
        let x = RationalQuaternion::new(*num, 4);
        let r = round(&x);
        if round(&RationalQuaternion::from(r)) != r {
            return Err(format!("round(round(x)) != round(x), witness x = {num:?}/4"));
        }
        for h in shifts {
            let d = h.doubled();
            let shifted = RationalQuaternion::new(std::array::from_fn(|i| num[i] + 2 * d[i]), 4);
            if round(&shifted) != r + h {
                return Err(format!("round(x + h) != round(x) + h, witness x = {num:?}/4, h = {h}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn psi_suite() -> Outcome {
    let mut checked = 0;
    for p in [3, 5, 7] {
        let f = find_irreducible(p).map_err(|e| e.to_string())?;
        for a in residues(Modulus::TwoSided(p))? {
            let (r1, r2) = psi_split(&a, &f);
            if psi_combine(&r1, &r2, &f) != a {
                return Err(format!("Psi roundtrip failed, witness p = {p}, a = {a}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn phi_suite() -> Outcome {
    let mut checked = 0;
    for primes in [[3, 5], [3, 7]] {
        let ctx = build_crt_context(&primes).map_err(|e| e.to_string())?;
        let all = residues(Modulus::TwoSided(ctx.q()))?;
        let bad = all.par_iter().find_any(|a| phi_combine(&phi_split(a, &ctx), &ctx).ok() != Some(**a));
        if let Some(a) = bad {
            return Err(format!("phi roundtrip failed, witness q = {}, a = {a}", ctx.q()));
        }
        checked += all.len();
    }
    Ok(checked)
}

fn residue_suite() -> Outcome {
    let mut checked = 0;
    for p in [3, 5, 7, 11, 13] {
        let f = find_irreducible(p).map_err(|e| e.to_string())?;
        let n = residues(Modulus::LeftIdeal(f.pi()))?.len();
        if n as i64 != p * p {
            return Err(format!("|H/H pi| = {n}, expected {}, witness p = {p}", p * p));
        }
        checked += 1;
    }
    for q in [3, 5] {
        let n = residues(Modulus::TwoSided(q))?.len();
        if n as i64 != q.pow(4) {
            return Err(format!("|H/qH| = {n}, expected {}, witness q = {q}", q.pow(4)));
        }
        checked += 1;
    }
    Ok(checked)
}

fn example_suite() -> Outcome {
    let code = fixtures::q3_code().map_err(|e| e.to_string())?;
    if code.len() != 81 || code.level_sizes() != [9, 9] {
        return Err(format!("|C| = {}, level sizes {:?}", code.len(), code.level_sizes()));
    }
    let g = [HurwitzInt::ONE, -HurwitzInt::lipschitz(1, 1, 1, 0)];
    let span: std::collections::HashSet<Vec<HurwitzInt>> =
        residues(Modulus::TwoSided(3))?.iter().map(|u| code.reduce(&[*u * g[0], *u * g[1]])).collect();
    if span != code.codeword_set() {
        return Err("code differs from the left span of (1, -1-i-j)".into());
    }
    if (code.lattice_volume() - 81.0 / 4.0).abs() > 1e-12 {
        return Err(format!("volume {} != 81/4", code.lattice_volume()));
    }
    Ok(code.len())
}

fn decoder_suite() -> Outcome {
    let mut checked = 0;
    for (q, n) in [(3, 2), (15, 2)] {
        let code = fixtures::rank_one(q, n).map_err(|e| e.to_string())?;
        for seed in 0..20 {
            let x: LatticePoint = code.random_codeword(seed);
            let y = x.to_real();
            for (name, r) in [("smd", smd_decode(&y, &code)), ("mld", mld_decode(&y, &code))] {
                let r = r.map_err(|e| e.to_string())?;
                if r.point != x {
                    return Err(format!("{name} missed a noiseless word, witness q = {q}, seed = {seed}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn ordering_suite() -> Outcome {
    let qs = reference_qs();
    complexity_table(&qs, 1).map_err(|e| e.to_string())?;
    Ok(qs.len())
}

pub fn run_selftest() -> SelftestReport {
    run_selftest_with(&Faults::default())
}

pub fn run_selftest_with(faults: &Faults) -> SelftestReport {
    SelftestReport {
        suites: vec![
            suite("gamma", || gamma_suite(faults)),
            suite("quantizer", || quantizer_suite(faults)),
            suite("psi-roundtrip", psi_suite),
            suite("phi-roundtrip", phi_suite),
            suite("residue-counts", residue_suite),
            suite("rank-one-q3", example_suite),
            suite("decoder-zero-noise", decoder_suite),
            suite("complexity-orderings", ordering_suite),
        ],
    }
}

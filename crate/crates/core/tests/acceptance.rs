//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails. Runs without the libtest harness.

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hurwitz_pia::bench::run_benchmark;
use hurwitz_pia::complexity::{
    complexity_table, factor_table, find_eisenstein_factor, find_gaussian_factor, max_level_cardinality, reference_qs,
    ComplexityRow, ReferenceMatch, Ring, REFERENCE_TABLE,
};
use hurwitz_pia::matrix_rep::MatrixRepContext;
use hurwitz_pia::sim::{sigma_for_nvnr_db, simulate_code, Decoder, SimConfig};
use hurwitz_pia::{
    build_crt_context, enumerate_residues, find_irreducible, fixtures, mld_decode, phi_combine, phi_split, psi_combine,
    psi_split, smd_decode, HurwitzInt, Modulus, RealQuaternion,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < budget, format!("{what} took {t:.2?}, budget {budget:?}"))?;
    Ok(t)
}

fn random_hurwitz(rng: &mut ChaCha8Rng, r: i64) -> HurwitzInt {
    let odd = rng.gen_bool(0.5) as i64;
    HurwitzInt::from_doubled(std::array::from_fn(|_| 2 * rng.gen_range(-r..=r) + odd)).unwrap()
}

fn odd_primes_to(n: i64) -> Vec<i64> {
    (3..=n).step_by(2).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

fn c1_arithmetic() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
    for _ in 0..10_000 {
        let (a, b) = (random_hurwitz(&mut rng, 1000), random_hurwitz(&mut rng, 1000));
        let ab = a.checked_mul(&b).ok_or("overflow")?;
        ensure(ab.norm() == a.norm() * b.norm(), format!("Nrm(ab) != Nrm(a)Nrm(b) for {a}, {b}"))?;
        ensure(a * a.conj() == HurwitzInt::integer(a.norm()), format!("a·conj(a) != Nrm(a) for {a}"))?;
        ensure(HurwitzInt::from_doubled(ab.doubled()).is_ok(), format!("parity lost in {a}·{b}"))?;
    }
    let t = within(start, Duration::from_secs(1), "10^4 pairs")?;
    Ok(format!("10^4 pairs, 0 failures, {t:.2?}"))
}

fn c2_factorization() -> Verdict {
    let start = Instant::now();
    let primes = odd_primes_to(50);
    for &p in &primes {
        let f = find_irreducible(p).map_err(|e| e.to_string())?;
        let re = f.doubled_re();
        ensure(f.pi().norm() == p, format!("Nrm(pi) != {p}"))?;
        ensure(re == 2 || re == 4, format!("Re(pi) not in {{1,2}} for p = {p}"))?;
        ensure((f.gamma() * re).rem_euclid(p) == 1, format!("gamma·2Re(pi) != 1 mod {p}"))?;
        ensure(find_gaussian_factor(p).is_some() == (p % 4 == 1), format!("Z[i] availability wrong for {p}"))?;
        ensure(find_eisenstein_factor(p).is_some() == (p % 3 == 1), format!("Z[w] availability wrong for {p}"))?;
    }
    let rows = factor_table(&reference_qs()).map_err(|e| e.to_string())?;
    let mut flagged = Vec::new();
    for r in rows.iter().filter(|r| r.ring == Ring::Hurwitz) {
        match (&r.reference, r.q) {
            (ReferenceMatch::NormMismatch { published, .. }, 23) => {
                ensure(published == &vec![18, 18], format!("q = 23 published norms {published:?}"))?;
                flagged.push(23);
            }
            (ReferenceMatch::Matches | ReferenceMatch::SameNorms, q) if q != 23 => {}
            (m, q) => return Err(format!("Hurwitz row q = {q}: {m:?}")),
        }
    }
    ensure(flagged == [23], "q = 23 norm mismatch not flagged")?;
    for row in REFERENCE_TABLE.iter().filter(|r| r.ring != Ring::Hurwitz) {
        ensure(
            rows.iter().any(|r| r.q == row.q && r.ring == row.ring),
            format!("{} listed for q = {} but unavailable by the splitting rule", row.ring, row.q),
        )?;
    }
    let extra: Vec<String> = rows
        .iter()
        .filter(|r| r.reference == ReferenceMatch::Absent)
        .map(|r| format!("{} for q = {}", r.ring, r.q))
        .collect();
    let t = within(start, Duration::from_secs(1), "factorization checks")?;
    Ok(format!(
        "{} primes; q = 23 flagged (18 != 23); available but unlisted: {}; {t:.2?}",
        primes.len(),
        extra.join(", ")
    ))
}

fn c3_crt() -> Verdict {
    let start = Instant::now();
    let mut total = 0;
    for p in [3, 5, 7] {
        let f = find_irreducible(p).map_err(|e| e.to_string())?;
        let all = enumerate_residues(Modulus::TwoSided(p)).map_err(|e| e.to_string())?;
        ensure(all.len() as i64 == p.pow(4), format!("|H/{p}H| = {}", all.len()))?;
        for a in all.elements() {
            let (r1, r2) = psi_split(a, &f);
            ensure(psi_combine(&r1, &r2, &f) == *a, format!("Psi roundtrip failed at p = {p}, a = {a}"))?;
        }
        total += all.len();
    }
    let ctx = build_crt_context(&[3, 5]).map_err(|e| e.to_string())?;
    let all = enumerate_residues(Modulus::TwoSided(15)).map_err(|e| e.to_string())?;
    ensure(all.len() == 50625, "|H/15H| != 50625")?;
    let bad = all.elements().par_iter().filter(|a| phi_combine(&phi_split(a, &ctx), &ctx).ok() != Some(**a)).count();
    ensure(bad == 0, format!("phi roundtrip failed on {bad} residues"))?;
    let t = within(start, Duration::from_secs(30), "CRT roundtrips")?;
    Ok(format!("Psi {total} residues, phi 50625 residues, 0 failures, {t:.2?}"))
}

fn c4_example() -> Verdict {
    let code = fixtures::q3_code().map_err(|e| e.to_string())?;
    ensure(code.len() == 81, format!("|C| = {}", code.len()))?;
    ensure(code.level_sizes() == [9, 9], format!("level sizes {:?}", code.level_sizes()))?;
    let g = [HurwitzInt::ONE, "-1-i-j".parse::<HurwitzInt>().unwrap()];
    let units = enumerate_residues(Modulus::TwoSided(3)).map_err(|e| e.to_string())?;
    let span: HashSet<Vec<HurwitzInt>> =
        units.elements().iter().map(|u| code.reduce(&[*u * g[0], *u * g[1]])).collect();
    ensure(span == code.codeword_set(), "C differs from the left span of (1, -1-i-j)")?;
    Ok("|C| = 81, |C1| = |C2| = 9, C = left span of (1, -1-i-j)".into())
}

fn c5_residues() -> Verdict {
    let mut parts = Vec::new();
    for p in [3, 5, 7, 11, 13] {
        let pi = find_irreducible(p).map_err(|e| e.to_string())?.pi();
        let n = enumerate_residues(Modulus::LeftIdeal(pi)).map_err(|e| e.to_string())?.len() as i64;
        ensure(n == p * p, format!("|H/H pi| = {n} for p = {p}"))?;
        parts.push(format!("{p}:{n}"));
    }
    for q in [3, 5] {
        let n = enumerate_residues(Modulus::TwoSided(q)).map_err(|e| e.to_string())?.len() as i64;
        ensure(n == q.pow(4), format!("|H/qH| = {n} for q = {q}"))?;
        parts.push(format!("q{q}:{n}"));
    }
    Ok(parts.join(" "))
}

fn noisy(x: &[RealQuaternion], w: &[f64]) -> Vec<RealQuaternion> {
    x.iter().enumerate().map(|(i, v)| *v + RealQuaternion(std::array::from_fn(|k| w[4 * i + k]))).collect()
}

fn c6_decoders() -> Verdict {
    let code = fixtures::rank_one(15, 2).map_err(|e| e.to_string())?;
    let dmin = code.min_distance();
    ensure(dmin.exact, "d_min not certified")?;
    let radius = dmin.value() / 2.0;
    let trials = 1000u64;

    let noiseless = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let x = code.random_codeword(t);
            let y = x.to_real();
            smd_decode(&y, &code).unwrap().point == x && mld_decode(&y, &code).unwrap().point == x
        })
        .count();
    ensure(noiseless == trials as usize, format!("noiseless recovery {noiseless}/{trials}"))?;

    let inside = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let mut rng = ChaCha8Rng::seed_from_u64(0xB000 + t);
            let x = code.random_point(&mut rng, 0);
            let g: Vec<f64> = (0..8).map(|_| StandardNormal.sample(&mut rng)).collect();
            let len = g.iter().map(|v| v * v).sum::<f64>().sqrt();
            let r = 0.999 * radius * rng.gen::<f64>();
            let w: Vec<f64> = g.iter().map(|v| v * r / len).collect();
            mld_decode(&noisy(&x.to_real(), &w), &code).unwrap().point == x
        })
        .count();
    ensure(inside == trials as usize, format!("MLD inside d_min/2 recovered {inside}/{trials}"))?;

    let agree = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let mut rng = ChaCha8Rng::seed_from_u64(0xC000 + t);
            let x = code.random_point(&mut rng, 0);
            let w: Vec<f64> = (0..8).map(|_| 0.05 * Distribution::<f64>::sample(&StandardNormal, &mut rng)).collect();
            let y = noisy(&x.to_real(), &w);
            smd_decode(&y, &code).unwrap().point == mld_decode(&y, &code).unwrap().point
        })
        .count();
    let rate = agree as f64 / trials as f64;
    ensure(rate >= 0.99, format!("SMD/MLD agreement {rate}"))?;
    Ok(format!(
        "noiseless {noiseless}/{trials}; d_min^2 = {}; MLD inside d_min/2 {inside}/{trials}; agreement {:.1}%",
        dmin.squared,
        100.0 * rate
    ))
}

fn c7_table1() -> Verdict {
    let start = Instant::now();
    let qs = [5, 7, 11, 13, 15];
    let mut runs = Vec::new();
    for seed in [1, 2] {
        let rows = run_benchmark(&qs, 2, 200, seed).map_err(|e| e.to_string())?;
        let s: Vec<f64> = rows.iter().map(|r| r.speedup).collect();
        ensure(s.iter().all(|&v| v > 1.0), format!("speedup <= 1 in run {seed}: {s:?}"))?;
        ensure(s.windows(2).all(|w| w[0] < w[1]), format!("speedups not increasing in run {seed}: {s:?}"))?;
        runs.push(s);
    }
    for q in [3, 17] {
        let size = fixtures::rank_one(q, 2).map_err(|e| e.to_string())?.len();
        ensure(size as i64 == q.pow(4), format!("|C| = {size} for q = {q}"))?;
    }
    let t = within(start, Duration::from_secs(600), "benchmark")?;
    let fmt = |s: &Vec<f64>| s.iter().map(|v| format!("{v:.1}")).collect::<Vec<_>>().join(" < ");
    Ok(format!("run 1: {}; run 2: {}; {t:.1?}", fmt(&runs[0]), fmt(&runs[1])))
}

fn reference_rows() -> Result<Vec<ComplexityRow>, String> {
    complexity_table(&reference_qs(), 1).map_err(|e| e.to_string())
}

/// Orderings, the "only if" direction of the equality conditions, and the
/// mixed-rank values.
fn c8a_orderings() -> Verdict {
    for row in reference_rows()? {
        let h = row.get(Ring::Hurwitz).complexity;
        let (z, g, e) = (
            row.get(Ring::Integers).complexity,
            row.get(Ring::Gaussian).complexity,
            row.get(Ring::Eisenstein).complexity,
        );
        let pmax = row.max_prime();
        ensure(h < z && h <= g && h <= e, format!("ordering broken at q = {}", row.q))?;
        ensure(h != g || pmax % 4 == 1, format!("H = Z[i] at q = {} with largest prime {pmax}", row.q))?;
        ensure(h != e || pmax % 3 == 1, format!("H = Z[w] at q = {} with largest prime {pmax}", row.q))?;
    }
    let h = max_level_cardinality(&[5], 2, Ring::Hurwitz, Some(&[1, 2])).map_err(|e| e.to_string())?;
    let g = max_level_cardinality(&[5], 4, Ring::Gaussian, Some(&[3, 3])).map_err(|e| e.to_string())?;
    ensure(h == 625 && g == 125, format!("mixed-rank values {h}, {g}"))?;
    Ok("H < Z, H <= Z[i], H <= Z[w] on all 16 q; equality implies the congruence; 5^4 and 5^3 reproduced".into())
}

/// The equality conditions read as "if and only if".
fn c8b_equality_iff() -> Verdict {
    let mut counter = Vec::new();
    for row in reference_rows()? {
        let h = row.get(Ring::Hurwitz).complexity;
        let pmax = row.max_prime();
        for (ring, m) in [(Ring::Gaussian, 4), (Ring::Eisenstein, 3)] {
            let eq = h == row.get(ring).complexity;
            if eq != (pmax % m == 1) {
                counter.push(format!(
                    "q={} {ring}: H={} vs {}",
                    row.q,
                    row.get(Ring::Hurwitz).cmax,
                    row.get(ring).cmax
                ));
            }
        }
    }
    ensure(counter.is_empty(), format!("counterexamples: {}", counter.join("; ")))?;
    Ok("equality exactly at the stated congruences".into())
}

fn c9_volume() -> Verdict {
    let code = fixtures::q3_code().map_err(|e| e.to_string())?;
    let vol = code.lattice_volume();
    ensure((vol - 81.0 / 4.0).abs() < 1e-12, format!("volume {vol}"))?;
    let modulus = Modulus::TwoSided(3);
    let mut parts = Vec::new();
    for s in [24i64, 48] {
        // Hurwitz points of [0, S)^4 tallied by class modulo 3H.
        let tally: HashMap<HurwitzInt, u64> = (0..2 * s)
            .into_par_iter()
            .fold(HashMap::new, |mut m, d0| {
                for d1 in 0..2 * s {
                    for d2 in 0..2 * s {
                        for d3 in 0..2 * s {
                            if let Ok(h) = HurwitzInt::from_doubled([d0, d1, d2, d3]) {
                                *m.entry(modulus.reduce(&h)).or_insert(0u64) += 1;
                            }
                        }
                    }
                }
                m
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });
        let count: f64 = code.codewords().iter().map(|c| (tally[&c[0]] * tally[&c[1]]) as f64).sum();
        let ratio = count * vol / (s as f64).powi(8);
        ensure((ratio - 1.0).abs() <= 0.02, format!("S = {s}: count·vol/S^8 = {ratio}"))?;
        parts.push(format!("S={s}: {ratio:.4}"));
    }
    Ok(format!("vol = 81/4; count·vol/S^8 {}", parts.join(", ")))
}

fn c10_matrix_rep() -> Verdict {
    let ctx = MatrixRepContext::new(5).map_err(|e| e.to_string())?;
    let all = enumerate_residues(Modulus::TwoSided(5)).map_err(|e| e.to_string())?;
    let els = all.elements();
    let reps: Vec<_> = els.iter().map(|x| ctx.rep(x)).collect();
    ensure(reps.iter().collect::<HashSet<_>>().len() == 625, "rho not injective on H/5H")?;
    ensure(ctx.rep(&HurwitzInt::ONE) == [[1, 0], [0, 1]], "rho(1) != I")?;
    let bad = (0..els.len())
        .into_par_iter()
        .filter(|&i| {
            els.iter().zip(&reps).any(|(y, ry)| {
                ctx.rep(&(els[i] * *y)) != ctx.mul(&reps[i], ry) || ctx.rep(&(els[i] + *y)) != ctx.add(&reps[i], ry)
            })
        })
        .count();
    ensure(bad == 0, format!("homomorphism fails for {bad} left factors mod 5"))?;
    let c13 = MatrixRepContext::new(13).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xD13);
    for _ in 0..1000 {
        let (x, y) = (random_hurwitz(&mut rng, 50), random_hurwitz(&mut rng, 50));
        ensure(
            c13.rep(&(x * y)) == c13.mul(&c13.rep(&x), &c13.rep(&y)),
            format!("rho not multiplicative at {x}, {y}"),
        )?;
    }
    Ok(format!("injective on 625 residues, 390625 pairs mod 5, 1000 pairs mod 13 (a, b) = {:?}", ctx.ab()))
}

fn c11_nvnr() -> Verdict {
    let code = fixtures::q3_code().map_err(|e| e.to_string())?;
    let vol = code.lattice_volume();
    let dbs = [0.0, 3.0, 6.0, 9.0, 12.0];
    let sigmas: Vec<f64> = dbs.iter().map(|&d| sigma_for_nvnr_db(vol, 2, d)).collect();
    let cfg = SimConfig::for_fixture(3, 2, sigmas, 10_000, 2024);
    let records = simulate_code(&code, &cfg).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for dec in [Decoder::Mld, Decoder::Smd] {
        let mut rs: Vec<_> = records.iter().filter(|r| r.decoder == dec).collect();
        rs.sort_by(|a, b| a.nvnr_db.total_cmp(&b.nvnr_db));
        for w in rs.windows(2) {
            ensure(
                w[1].wer <= w[0].wer || w[1].wer_lo <= w[0].wer_hi,
                format!("{} WER rises from {} to {} dB", dec.name(), w[0].nvnr_db, w[1].nvnr_db),
            )?;
        }
        let last = rs.last().unwrap();
        ensure(
            last.nvnr_db >= 12.0 - 1e-9 && last.errors == 0,
            format!("{} has {} errors at 12 dB", dec.name(), last.errors),
        )?;
        parts.push(format!(
            "{}: {}",
            dec.name(),
            rs.iter().map(|r| format!("{:.4}", r.wer)).collect::<Vec<_>>().join(" ")
        ));
    }
    Ok(format!("WER at 0/3/6/9/12 dB, 10^4 trials: {}", parts.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1  arithmetic exactness", c1_arithmetic),
        ("2  factorization table", c2_factorization),
        ("3  CRT bijection", c3_crt),
        ("4  rank-one q=3 example", c4_example),
        ("5  residue counts", c5_residues),
        ("6  decoder correctness", c6_decoders),
        ("7  MLD/SMD speedup trend", c7_table1),
        ("8a complexity orderings", c8a_orderings),
        ("8b equality iff congruence", c8b_equality_iff),
        ("9  volume identity", c9_volume),
        ("10 matrix representation", c10_matrix_rep),
        ("11 WER vs NVNR", c11_nvnr),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

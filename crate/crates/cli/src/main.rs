use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hurwitz_pia::complexity::{self, ReferenceMatch, Ring};
use hurwitz_pia::spec_file::{BuildReport, CodeSpecDoc};
use hurwitz_pia::{bench, selftest, sim};
use hurwitz_pia::{build_crt_context, enumerate_residues, find_irreducible, fixtures, phi_combine, phi_split, Modulus};

#[derive(Parser)]
#[command(name = "pia", version, about = "Hurwitz-integer lattice codes: factor, build, decode, simulate")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    H,
    Gaussian,
    Eisenstein,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factor an odd prime over the Hurwitz, Gaussian or Eisenstein integers.
    Factor {
        #[arg(long)]
        prime: i64,
        #[arg(long, value_enum, default_value = "h")]
        ring: RingArg,
    },
    /// Factorization table for each q, compared with the published one.
    Tables {
        #[arg(long, value_delimiter = ',', required = true)]
        qs: Vec<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest level size and decoding complexity per ring.
    Complexity {
        #[arg(long, value_delimiter = ',', required = true)]
        qs: Vec<i64>,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Exhaustive CRT roundtrip over all of H/qH.
    Crtcheck {
        #[arg(long)]
        q: i64,
    },
    /// Build a code from a JSON spec and report its parameters.
    Build {
        #[arg(long)]
        spec: PathBuf,
    },
    /// AWGN word-error-rate sweep.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// MLD vs SMD timing on the rank-one fixtures.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        qs: Vec<i64>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the built-in invariant suites.
    Selftest,
}

fn main() -> Result<()> {
    match Cli::parse().cmd {
        Cmd::Factor { prime, ring } => factor(prime, ring)?,
        Cmd::Tables { qs, out } => {
            let rows = complexity::factor_table(&qs)?;
            for r in &rows {
                let note = match &r.reference {
                    ReferenceMatch::Matches => "matches".to_string(),
                    ReferenceMatch::SameNorms => "same norms as reference".to_string(),
                    ReferenceMatch::Absent => "not listed in reference table".to_string(),
                    ReferenceMatch::NormMismatch { published, expected } => {
                        format!("MISMATCH: reference norms {published:?}, expected {expected:?}")
                    }
                };
                println!("{:>3}  {:<5} {:<44} Cmax={:<6} {}", r.q, r.ring.symbol(), r.factors_text(), r.cmax, note);
            }
            if let Some(out) = out {
                std::fs::write(&out, complexity::factor_table_csv(&rows))
                    .with_context(|| format!("writing {}", out.display()))?;
            }
        }
        Cmd::Complexity { qs, n } => {
            println!("q,n,ring,Cmax,complexity");
            for row in complexity::complexity_table(&qs, n)? {
                for r in &row.rings {
                    println!("{},{},{},{},{:.3}", row.q, n, r.ring, r.cmax, r.complexity);
                }
            }
        }
        Cmd::Crtcheck { q } => {
            let ctx = build_crt_context(&fixtures::odd_squarefree_factors(q)?)?;
            let start = Instant::now();
            let all = enumerate_residues(Modulus::TwoSided(q))?;
            let mut failures = 0usize;
            for a in all.elements() {
                if phi_combine(&phi_split(a, &ctx), &ctx)? != *a {
                    if failures == 0 {
                        eprintln!("first failure: {a}");
                    }
                    failures += 1;
                }
            }
            println!("q = {q}: {} residues, {failures} failures, {:.2?}", all.len(), start.elapsed());
            if failures > 0 {
                bail!("CRT roundtrip failed on {failures} residues");
            }
        }
        Cmd::Build { spec } => {
            let doc = CodeSpecDoc::load(&spec).with_context(|| format!("reading {}", spec.display()))?;
            let report = BuildReport::new(&doc.build()?);
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Cmd::Simulate { config, out } => {
            let cfg = sim::SimConfig::load(&config).with_context(|| format!("reading {}", config.display()))?;
            let records = sim::run_simulation(&cfg)?;
            sim::write_records(&records, &out)?;
            for r in &records {
                println!(
                    "{} sigma={:.4} nvnr={:+.2}dB wer={:.4} [{:.4}, {:.4}]",
                    r.decoder.name(),
                    r.sigma,
                    r.nvnr_db,
                    r.wer,
                    r.wer_lo,
                    r.wer_hi
                );
            }
        }
        Cmd::Bench { qs, n, trials, seed, out } => {
            let rows = bench::run_benchmark(&qs, n, trials, seed)?;
            bench::write_bench(&rows, &out)?;
            for r in &rows {
                println!(
                    "q={:<3} |C|={:<8} mld={:>12.1}us smd={:>8.1}us speedup={:.1}",
                    r.q, r.code_size, r.mld_us, r.smd_us, r.speedup
                );
            }
        }
        Cmd::Selftest => {
            let report = selftest::run_selftest();
            print!("{report}");
            if !report.all_passed() {
                bail!("self-test failed");
            }
        }
    }
    Ok(())
}

fn factor(p: i64, ring: RingArg) -> Result<()> {
    match ring {
        RingArg::H => {
            let f = find_irreducible(p)?;
            println!("pi = {}", f.pi().pretty());
            println!("pi_bar = {}", f.pi_bar().pretty());
            println!("norm = {}", f.pi().norm());
            println!("gamma = {}", f.gamma());
        }
        RingArg::Gaussian => match complexity::find_gaussian_factor(p) {
            Some(g) => println!("{p} = ({g})({})", g.conj()),
            None => println!("{p} stays prime in {}", Ring::Gaussian),
        },
        RingArg::Eisenstein => match complexity::find_eisenstein_factor(p) {
            Some(e) => println!("{p} = ({e})({})", e.conj()),
            None => println!("{p} stays prime in {}", Ring::Eisenstein),
        },
    }
    Ok(())
}

//! MLD vs SMD decode time on the rank-one codes.

use hurwitz_pia::bench::run_benchmark;

fn main() -> hurwitz_pia::Result<()> {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    for r in run_benchmark(&[3, 5, 7, 11], 2, trials, 1)? {
        println!(
            "q = {:>2}  |C| = {:>6}  mld {:>9.1} us  smd {:>6.1} us  x{:.1}",
            r.q, r.code_size, r.mld_us, r.smd_us, r.speedup
        );
    }
    Ok(())
}

//! Word error rate against noise level, written as CSV to stdout.

use hurwitz_pia::sim::{records_to_csv, run_simulation, SimConfig};

fn main() -> hurwitz_pia::Result<()> {
    let mut cfg = SimConfig::for_fixture(3, 2, vec![0.2, 0.3, 0.4, 0.5], 2000, 11);
    cfg.translate_box = 2;
    print!("{}", records_to_csv(&run_simulation(&cfg)?)?);
    Ok(())
}

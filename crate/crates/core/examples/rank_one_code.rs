//! A two-level code over q = 3 loaded from JSON: size, volume, distance and encoding.

use hurwitz_pia::spec_file::CodeSpecDoc;
use hurwitz_pia::HurwitzInt;

fn main() -> hurwitz_pia::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/rank_one_q3.json");
    let code = CodeSpecDoc::load(path)?.build()?;
    println!("|C| = {}, level sizes {:?}", code.len(), code.level_sizes());
    println!("volume = {}", code.lattice_volume());
    let d = code.min_distance();
    println!("d_min^2 = {} (exact: {})", d.squared, d.exact);

    // One message per level component, taken modulo the level ideal.
    let messages = vec![vec!["1+i".parse::<HurwitzInt>()?], vec![HurwitzInt::J]];
    let x = code.encode(&messages)?;
    let show = |v: &[HurwitzInt]| v.iter().map(|h| format!("{:>22}", h.pretty())).collect::<String>();
    println!("encode(1+i, j) = {}", show(&x.0));
    println!("lattice member: {}", code.is_lattice_member(&x));

    for w in code.codewords().iter().take(6) {
        println!("  {}", show(w));
    }
    println!("  ...");
    Ok(())
}

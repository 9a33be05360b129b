//! Factorization rows and largest level sizes per ring.

use hurwitz_pia::complexity::{complexity_table, factor_table, max_level_cardinality, Ring};

fn main() -> hurwitz_pia::Result<()> {
    let qs = [15, 21, 29, 35, 65];
    for r in factor_table(&qs)? {
        println!("{:>3} {:<5} {:<40} Cmax = {:<5} {:?}", r.q, r.ring, r.factors_text(), r.cmax, r.reference);
    }
    println!("\nq   Z        Z[i]     Z[w]     H");
    for row in complexity_table(&qs, 1)? {
        let c: Vec<String> = Ring::ALL.iter().map(|&ring| format!("{:<8}", row.get(ring).cmax)).collect();
        println!("{:<3} {}", row.q, c.join(" "));
    }
    // Restricted ranks: per split component over the Gaussian integers.
    println!("\nq = 5, n = 2 over H, ranks (1, 2): {}", max_level_cardinality(&[5], 2, Ring::Hurwitz, Some(&[1, 2]))?);
    println!(
        "q = 5, length 8 over Z[i], ranks (3, 3): {}",
        max_level_cardinality(&[5], 4, Ring::Gaussian, Some(&[3, 3]))?
    );
    Ok(())
}

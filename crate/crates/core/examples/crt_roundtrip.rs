//! Splitting residues modulo q = 15 into per-level pieces and back.

use hurwitz_pia::{
    build_crt_context, enumerate_residues, find_irreducible, phi_combine, phi_split, psi_combine, psi_split,
    HurwitzInt, Modulus, Reduce,
};

fn main() -> hurwitz_pia::Result<()> {
    for p in [3, 5, 7, 29] {
        let f = find_irreducible(p)?;
        println!("p = {p:>2}: pi = {:<10} pi_bar = {:<10} gamma = {}", f.pi().pretty(), f.pi_bar().pretty(), f.gamma());
    }

    let f = find_irreducible(5)?;
    let a = "2-i+2j+k".parse::<HurwitzInt>()?.mod_two_sided(5);
    let (r1, r2) = psi_split(&a, &f);
    let back = psi_combine(&r1, &r2, &f);
    println!("\n{} mod 5 splits as ({}, {}) and recombines to {}", a.pretty(), r1.pretty(), r2.pretty(), back.pretty());

    let ctx = build_crt_context(&[3, 5])?;
    println!("\nq = {}, nu = {:?}, zeta = {:?}", ctx.q(), ctx.nu(), ctx.zeta());
    let all = enumerate_residues(Modulus::TwoSided(ctx.q()))?;
    let mut bad = 0;
    for x in all.elements() {
        if phi_combine(&phi_split(x, &ctx), &ctx)? != *x {
            bad += 1;
        }
    }
    println!("roundtrip over all {} residues: {bad} failures", all.len());
    Ok(())
}

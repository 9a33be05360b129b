//! Hurwitz integers mod p as 2x2 matrices over F_p.

use hurwitz_pia::matrix_rep::{matrix_rep, MatrixRepContext};
use hurwitz_pia::HurwitzInt;

fn main() -> hurwitz_pia::Result<()> {
    let ctx = MatrixRepContext::new(5)?;
    println!("p = 5, (a, b) = {:?}", ctx.ab());
    let x: HurwitzInt = "1+2i+j".parse()?;
    let y: HurwitzInt = "1/2-1/2i+1/2j+3/2k".parse()?;
    for (name, h) in [("i", HurwitzInt::I), ("j", HurwitzInt::J), ("x", x), ("y", y), ("x·y", x * y)] {
        println!("{name:>3} -> {:?}", matrix_rep(&h, &ctx));
    }
    let prod = ctx.mul(&matrix_rep(&x, &ctx), &matrix_rep(&y, &ctx));
    println!("M(x)·M(y) = {prod:?}, equals M(x·y): {}", prod == matrix_rep(&(x * y), &ctx));
    Ok(())
}

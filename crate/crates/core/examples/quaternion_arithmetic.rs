//! Exact Hurwitz arithmetic: products, norms, rounding and the Euclidean algorithm.

use hurwitz_pia::{divides, gcd_bezout, round_rational, DivSide, HurwitzInt, RationalQuaternion, Reduce};

fn main() -> hurwitz_pia::Result<()> {
    let a: HurwitzInt = "1+i+j".parse()?;
    let b: HurwitzInt = "1/2+1/2i-1/2j+3/2k".parse()?;
    println!("a = {}, b = {}", a.pretty(), b.pretty());
    println!("a·b = {}   b·a = {}", (a * b).pretty(), (b * a).pretty());
    println!("N(a·b) = {} = N(a)·N(b) = {}·{}", (a * b).norm(), a.norm(), b.norm());

    // Nearest Hurwitz integer to a rational quaternion, e.g. the quotient a/b.
    let x = RationalQuaternion::right_quotient(&a, &b)?;
    println!("a·b^-1 = {x:?} rounds to {}", round_rational(&x).pretty());

    // Reductions modulo 3H and modulo the left ideal H·a.
    let c: HurwitzInt = "7-4i+5j+3k".parse()?;
    println!("{} mod 3H = {}", c.pretty(), c.mod_two_sided(3).pretty());
    println!("{} mod H(1+i+j) = {}", c.pretty(), c.mod_left_ideal(&a).pretty());

    let delta = a * HurwitzInt::lipschitz(-1, 0, 1, 0);
    let show = |c: Option<HurwitzInt>| c.map_or("no".to_string(), |c| format!("yes, cofactor {}", c.pretty()));
    println!("a divides {} on the left: {}", delta.pretty(), show(divides(&a, &delta, DivSide::Left)?));
    println!("a divides {} on the right: {}", delta.pretty(), show(divides(&a, &delta, DivSide::Right)?));

    let g = gcd_bezout(&HurwitzInt::integer(21), &"2+3i+4j".parse()?)?;
    println!("gcd(21, 2+3i+4j) = {} = ({})·21 + ({})·(2+3i+4j)", g.gcd.pretty(), g.mu.pretty(), g.nu.pretty());
    println!("remainder norms: {:?}", g.remainder_norms);
    Ok(())
}

//! Ready-made codes used by the examples, benchmarks and self-test.

use crate::code::{build_code, LevelCodeSpec, PiACode, Side};
use crate::crt::{build_crt_context, is_odd_prime, CrtContext};
use crate::error::{Error, Result};
use crate::quaternion::HurwitzInt;

/// Distinct odd prime factors of a square-free odd `q`.
pub fn odd_squarefree_factors(q: i64) -> Result<Vec<i64>> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::InvalidSpec(format!("q = {q} must be odd and at least 3")));
    }
    let mut rest = q;
    let mut out = Vec::new();
    let mut d = 3;
    while d * d <= rest {
        if rest % d == 0 {
            rest /= d;
            if rest % d == 0 {
                return Err(Error::RepeatedPrime(d));
            }
            out.push(d);
        }
        d += 2;
    }
    if rest > 1 {
        debug_assert!(is_odd_prime(rest));
        out.push(rest);
    }
    Ok(out)
}

/// Rank-one level codes on every level: `(1, 0, …, 0)` on the `π` side and
/// `(1, 1, …, 1)` on the `π̄` side. The combined code has rank one over
/// `ℋ/qℋ` and `q⁴` codewords.
pub fn rank_one_specs(ctx: &CrtContext, n: usize) -> Vec<LevelCodeSpec> {
    let e1: Vec<HurwitzInt> = (0..n).map(|i| if i == 0 { HurwitzInt::ONE } else { HurwitzInt::ZERO }).collect();
    let ones = vec![HurwitzInt::ONE; n];
    (0..ctx.levels().len())
        .flat_map(|j| {
            [
                LevelCodeSpec::new(j, Side::Pi, n, vec![e1.clone()]).expect("row length n"),
                LevelCodeSpec::new(j, Side::PiBar, n, vec![ones.clone()]).expect("row length n"),
            ]
        })
        .collect()
}

/// Rank-one benchmark code for `q` with block length `n`.
pub fn rank_one(q: i64, n: usize) -> Result<PiACode> {
    let ctx = build_crt_context(&odd_squarefree_factors(q)?)?;
    build_code(&ctx, rank_one_specs(&ctx, n))
}

/// `q = 3`, `n = 2`, `π = 1+i+j`, `G₁ = (1, 0)`, `G₂ = (1, 1)`.
pub fn q3_code() -> Result<PiACode> {
    rank_one(3, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors() {
        assert_eq!(odd_squarefree_factors(105).unwrap(), vec![3, 5, 7]);
        assert_eq!(odd_squarefree_factors(17).unwrap(), vec![17]);
        assert_eq!(odd_squarefree_factors(45), Err(Error::RepeatedPrime(3)));
        assert!(odd_squarefree_factors(10).is_err());
    }

    #[test]
    fn q3_code_uses_the_expected_irreducible() {
        let code = q3_code().unwrap();
        assert_eq!(code.ctx().levels()[0].pi(), "1+i+j".parse().unwrap());
        assert_eq!(code.len(), 81);
    }
}

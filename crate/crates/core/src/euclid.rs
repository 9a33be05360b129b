//! Divisibility and the right-divisor Euclidean algorithm in the Hurwitz order.

use crate::error::{Error, Result};
use crate::quantize::round_rational;
use crate::quaternion::{HurwitzInt, RationalQuaternion};

/// Which side the divisor sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivSide {
    /// `β` left-divides `α`: `α = βγ`.
    Left,
    /// `β` right-divides `α`: `α = γβ`.
    Right,
}

/// Returns the cofactor `γ` when `β` divides `α` on the requested side.
pub fn divides(beta: &HurwitzInt, alpha: &HurwitzInt, side: DivSide) -> Result<Option<HurwitzInt>> {
    if beta.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let quotient = match side {
        DivSide::Left => RationalQuaternion::left_quotient(beta, alpha)?,
        DivSide::Right => RationalQuaternion::right_quotient(alpha, beta)?,
    };
    Ok(quotient.to_hurwitz())
}

/// Output of [`gcd_bezout`]: `mu·α + nu·β = gcd`, with `α, β ∈ ℋ·gcd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bezout {
    pub gcd: HurwitzInt,
    pub mu: HurwitzInt,
    pub nu: HurwitzInt,
    /// Norms of the remainder sequence, starting with `Nrm(α), Nrm(β)`.
    pub remainder_norms: Vec<i64>,
}

/// Greatest common right divisor with left Bézout coefficients.
///
/// Each step divides with remainder, `r = a − ⌊a·b̄/Nrm(b)⌉·b`, which halves the
/// norm at least. The result is normalized by the left unit that makes the
/// doubled quadruple of the gcd lexicographically largest.
pub fn gcd_bezout(alpha: &HurwitzInt, beta: &HurwitzInt) -> Result<Bezout> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::ZeroGcd);
    }
    // Rows carry (remainder, x, y) with remainder = x·α + y·β.
    let mut prev = (*alpha, HurwitzInt::ONE, HurwitzInt::ZERO);
    let mut cur = (*beta, HurwitzInt::ZERO, HurwitzInt::ONE);
    let mut remainder_norms = vec![alpha.norm(), beta.norm()];
    while !cur.0.is_zero() {
        let q = round_rational(&RationalQuaternion::right_quotient(&prev.0, &cur.0)?);
        let next = (prev.0 - q * cur.0, prev.1 - q * cur.1, prev.2 - q * cur.2);
        let n = next.0.norm();
        assert!(2 * n <= cur.0.norm(), "Euclid descent failed: {} -> {}", cur.0.norm(), n);
        remainder_norms.push(n);
        prev = cur;
        cur = next;
    }
    let (gcd, mu, nu) = prev;
    let unit = HurwitzInt::units().into_iter().max_by_key(|u| (*u * gcd).doubled()).expect("24 units");
    Ok(Bezout { gcd: unit * gcd, mu: unit * mu, nu: unit * nu, remainder_norms })
}

//! Nearest-point quantization onto the Hurwitz order (the D4* lattice) and the
//! centered reductions modulo `qℋ` and modulo left ideals `ℋπ`.
//!
//! The quantizer compares the best all-integer candidate with the best
//! all-half-integer candidate. Among equidistant minimizers the one with the
//! lexicographically smallest doubled quadruple wins. That rule commutes with
//! translation by any Hurwitz integer, so reducing two representatives of the
//! same coset always lands on the same canonical value.

use crate::error::{Error, Result};
use crate::quaternion::{HurwitzInt, RationalQuaternion, RealQuaternion};

/// How equidistant candidates are resolved.
///
/// Only [`TieRule::LexMin`] is translation-invariant. The other rule exists so
/// the self-test can demonstrate that a broken tie-break is caught.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieRule {
    #[default]
    LexMin,
    /// Broken on purpose: on an integer/half-integer tie, take the half-integer point.
    PreferHalfInteger,
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

/// Exact nearest Hurwitz integer to a rational quaternion.
pub fn round_rational(x: &RationalQuaternion) -> HurwitzInt {
    round_rational_with(x, TieRule::LexMin)
}

pub fn round_rational_with(x: &RationalQuaternion, rule: TieRule) -> HurwitzInt {
    let den = x.den() as i128;
    let num = x.numerators().map(|n| n as i128);
    // Doubled coordinates of both candidates; per-coordinate ties round down.
    let int_cand = num.map(|n| 2 * ceil_div(2 * n - den, 2 * den));
    let half_cand = num.map(|n| 2 * ceil_div(n - den, den) + 1);
    // Squared distances scaled by (2·den)².
    let dist = |c: &[i128; 4]| -> i128 { num.iter().zip(c.iter()).map(|(n, c)| (2 * n - c * den).pow(2)).sum() };
    let (di, dh) = (dist(&int_cand), dist(&half_cand));
    let pick = match di.cmp(&dh) {
        std::cmp::Ordering::Less => int_cand,
        std::cmp::Ordering::Greater => half_cand,
        std::cmp::Ordering::Equal => match rule {
            TieRule::LexMin => int_cand.min(half_cand),
            TieRule::PreferHalfInteger => half_cand,
        },
    };
    let d = pick.map(|v| i64::try_from(v).expect("overflow in round_rational"));
    HurwitzInt::from_doubled(d).expect("candidate parity")
}

/// Nearest Hurwitz integer to a real quaternion (same tie rule as the exact path).
pub fn round_real(x: &RealQuaternion) -> HurwitzInt {
    round_real_with(x, TieRule::LexMin)
}

pub fn round_real_with(x: &RealQuaternion, rule: TieRule) -> HurwitzInt {
    debug_assert!(x.is_finite(), "non-finite quaternion {x:?}");
    let int_cand = x.0.map(|v| 2.0 * (v - 0.5).ceil());
    let half_cand = x.0.map(|v| 2.0 * (v - 1.0).ceil() + 1.0);
    let dist = |c: &[f64; 4]| -> f64 { x.0.iter().zip(c).map(|(v, c)| (v - c / 2.0).powi(2)).sum() };
    let (di, dh) = (dist(&int_cand), dist(&half_cand));
    let to_int = |c: [f64; 4]| c.map(|v| v as i64);
    let (a, b) = (to_int(int_cand), to_int(half_cand));
    let pick = if di < dh {
        a
    } else if dh < di {
        b
    } else {
        match rule {
            TieRule::LexMin => a.min(b),
            TieRule::PreferHalfInteger => b,
        }
    };
    HurwitzInt::from_doubled(pick).expect("candidate parity")
}

/// Centered reduction modulo the two-sided ideal `qℋ` and the left ideal `ℋπ`.
pub trait Reduce: Sized {
    /// `x − q·⌊x/q⌉`, landing in the Voronoi cell of `qℋ` around the origin.
    fn mod_two_sided(&self, q: i64) -> Self {
        self.mod_two_sided_with(q, TieRule::LexMin)
    }

    fn mod_two_sided_with(&self, q: i64, rule: TieRule) -> Self;

    /// `x − ⌊x·π̄/Nrm(π)⌉·π`, the exact closest-point reduction modulo `{hπ}`.
    fn mod_left_ideal(&self, pi: &HurwitzInt) -> Self;
}

impl Reduce for HurwitzInt {
    fn mod_two_sided_with(&self, q: i64, rule: TieRule) -> Self {
        assert!(q >= 1, "modulus must be positive");
        let h = round_rational_with(&RationalQuaternion::new(self.doubled(), 2 * q), rule);
        *self - h.scale(q)
    }

    fn mod_left_ideal(&self, pi: &HurwitzInt) -> Self {
        let quotient = RationalQuaternion::right_quotient(self, pi).expect("mod_left_ideal by zero");
        *self - round_rational(&quotient) * *pi
    }
}

impl Reduce for RealQuaternion {
    fn mod_two_sided_with(&self, q: i64, rule: TieRule) -> Self {
        assert!(q >= 1, "modulus must be positive");
        let h = round_real_with(&self.scale(1.0 / q as f64), rule);
        *self - h.to_real().scale(q as f64)
    }

    fn mod_left_ideal(&self, pi: &HurwitzInt) -> Self {
        let n = pi.norm();
        assert!(n > 0, "mod_left_ideal by zero");
        let h = round_real(&(*self * pi.conj().to_real()).scale(1.0 / n as f64));
        *self - (h * *pi).to_real()
    }
}

/// Fallible form of [`Reduce::mod_left_ideal`] for exact inputs.
pub fn try_mod_left_ideal(x: &HurwitzInt, pi: &HurwitzInt) -> Result<HurwitzInt> {
    if pi.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(x.mod_left_ideal(pi))
}

//! Hurwitz quaternion integers and their rational and real companions.
//!
//! A [`HurwitzInt`] is stored by its *doubled* coordinates `(d0, d1, d2, d3)`,
//! representing `(d0 + d1 i + d2 j + d3 k) / 2`. All four doubled coordinates
//! share a parity: all even gives a Lipschitz point, all odd a half-integer
//! point. Every operation on this type is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hamilton product on raw integer quadruples (`ij = k = -ji`).
fn hamilton(a: [i64; 4], b: [i64; 4]) -> Option<[i64; 4]> {
    let p = |x: i64, y: i64| x.checked_mul(y);
    let r0 = p(a[0], b[0])?.checked_sub(p(a[1], b[1])?)?.checked_sub(p(a[2], b[2])?)?.checked_sub(p(a[3], b[3])?)?;
    let r1 = p(a[0], b[1])?.checked_add(p(a[1], b[0])?)?.checked_add(p(a[2], b[3])?)?.checked_sub(p(a[3], b[2])?)?;
    let r2 = p(a[0], b[2])?.checked_sub(p(a[1], b[3])?)?.checked_add(p(a[2], b[0])?)?.checked_add(p(a[3], b[1])?)?;
    let r3 = p(a[0], b[3])?.checked_add(p(a[1], b[2])?)?.checked_sub(p(a[2], b[1])?)?.checked_add(p(a[3], b[0])?)?;
    Some([r0, r1, r2, r3])
}

/// Exact Hurwitz quaternion integer in doubled coordinates.
///
/// The derived ordering is lexicographic on the doubled quadruple; it is the
/// order used by every deterministic tie-break in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HurwitzInt {
    d: [i64; 4],
}

impl HurwitzInt {
    pub const ZERO: HurwitzInt = HurwitzInt { d: [0, 0, 0, 0] };
    pub const ONE: HurwitzInt = HurwitzInt { d: [2, 0, 0, 0] };
    pub const I: HurwitzInt = HurwitzInt { d: [0, 2, 0, 0] };
    pub const J: HurwitzInt = HurwitzInt { d: [0, 0, 2, 0] };
    pub const K: HurwitzInt = HurwitzInt { d: [0, 0, 0, 2] };
    /// `ω = (1 + i + j + k) / 2`.
    pub const OMEGA: HurwitzInt = HurwitzInt { d: [1, 1, 1, 1] };

    /// Builds from doubled coordinates, rejecting mixed parity.
    pub fn from_doubled(d: [i64; 4]) -> Result<Self> {
        let parity = d[0].rem_euclid(2);
        if d.iter().any(|x| x.rem_euclid(2) != parity) {
            return Err(Error::MixedParity(d));
        }
        Ok(HurwitzInt { d })
    }

    /// The Lipschitz point `a + bi + cj + dk`.
    pub fn lipschitz(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::lipschitz_const(a, b, c, d)
    }

    pub const fn lipschitz_const(a: i64, b: i64, c: i64, d: i64) -> Self {
        HurwitzInt { d: [2 * a, 2 * b, 2 * c, 2 * d] }
    }

    /// The rational integer `n`.
    pub fn integer(n: i64) -> Self {
        Self::lipschitz(n, 0, 0, 0)
    }

    pub fn doubled(&self) -> [i64; 4] {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d == [0; 4]
    }

    /// True for all-integer (Lipschitz) points.
    pub fn is_lipschitz(&self) -> bool {
        self.d[0] % 2 == 0
    }

    /// Twice the real part.
    pub fn doubled_re(&self) -> i64 {
        self.d[0]
    }

    pub fn conj(&self) -> Self {
        HurwitzInt { d: [self.d[0], -self.d[1], -self.d[2], -self.d[3]] }
    }

    /// Reduced norm `a·ā`, always a nonnegative integer.
    pub fn norm(&self) -> i64 {
        let s: i64 = self.d.iter().map(|x| x * x).sum();
        debug_assert_eq!(s % 4, 0);
        s / 4
    }

    /// `(ā, Nrm(a))`.
    pub fn conj_nrm(&self) -> (Self, i64) {
        (self.conj(), self.norm())
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// The 24 units of the Hurwitz order, in ascending doubled-lex order.
    pub fn units() -> Vec<HurwitzInt> {
        let mut out = Vec::with_capacity(24);
        for axis in 0..4 {
            for s in [-2, 2] {
                let mut d = [0; 4];
                d[axis] = s;
                out.push(HurwitzInt { d });
            }
        }
        for mask in 0..16u32 {
            let d = std::array::from_fn(|b| if mask >> b & 1 == 1 { -1 } else { 1 });
            out.push(HurwitzInt { d });
        }
        out.sort();
        out
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        let mut d = [0; 4];
        for (t, (a, b)) in d.iter_mut().zip(self.d.iter().zip(rhs.d.iter())) {
            *t = a.checked_add(*b)?;
        }
        Some(HurwitzInt { d })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(&-*rhs)
    }

    /// Exact Hamilton product.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let raw = hamilton(self.d, rhs.d)?;
        // (A/2)(B/2) = (AB/2)/2: halving must be exact by closure of the order.
        assert!(raw.iter().all(|x| x % 2 == 0), "Hurwitz product not closed: {:?} * {:?}", self.d, rhs.d);
        Some(HurwitzInt { d: raw.map(|x| x / 2) })
    }

    /// Multiplication by a rational integer.
    pub fn scale(&self, k: i64) -> Self {
        HurwitzInt { d: self.d.map(|x| x.checked_mul(k).expect("overflow in HurwitzInt::scale")) }
    }

    pub fn to_real(&self) -> RealQuaternion {
        RealQuaternion(self.d.map(|x| x as f64 / 2.0))
    }

    pub fn to_rational(&self) -> RationalQuaternion {
        RationalQuaternion::new(self.d, 2)
    }

    /// Compact form that omits zero terms and unit coefficients (`1+i+j`).
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (idx, &d) in self.d.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let unit = ["", "i", "j", "k"][idx];
            let mag = d.abs();
            let coef = if mag % 2 == 1 {
                format!("{mag}/2")
            } else if mag == 2 && idx > 0 {
                String::new()
            } else {
                (mag / 2).to_string()
            };
            if d < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&coef);
            out.push_str(unit);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for HurwitzInt {
    type Output = HurwitzInt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("overflow in HurwitzInt addition")
    }
}

impl Sub for HurwitzInt {
    type Output = HurwitzInt;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("overflow in HurwitzInt subtraction")
    }
}

impl Neg for HurwitzInt {
    type Output = HurwitzInt;
    fn neg(self) -> Self {
        HurwitzInt { d: self.d.map(|x| -x) }
    }
}

impl Mul for HurwitzInt {
    type Output = HurwitzInt;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("overflow in HurwitzInt multiplication")
    }
}

fn fmt_half(d: i64) -> String {
    if d % 2 == 0 {
        (d.abs() / 2).to_string()
    } else {
        format!("{}/2", d.abs())
    }
}

/// Canonical text form `a+bi+cj+dk`, all four terms present, halves written
/// as `n/2` (for example `3/2-1/2i+5/2j-9/2k`).
impl fmt::Display for HurwitzInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d[0] < 0 {
            f.write_str("-")?;
        }
        f.write_str(&fmt_half(self.d[0]))?;
        for (d, unit) in self.d[1..].iter().zip(["i", "j", "k"]) {
            f.write_str(if *d < 0 { "-" } else { "+" })?;
            f.write_str(&fmt_half(*d))?;
            f.write_str(unit)?;
        }
        Ok(())
    }
}

impl fmt::Debug for HurwitzInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({self})")
    }
}

/// Parses the canonical text form and the usual shorthands (`1+i+j`, `-k`,
/// `1/2+1/2i+1/2j+1/2k`). Coefficients are integers or halves.
impl FromStr for HurwitzInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err());
        }
        let mut doubled: [Option<i64>; 4] = [None; 4];
        let bytes = text.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(err());
            }
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            let coef = &text[start..pos];
            let slot = match bytes.get(pos) {
                Some(b'i') => 1,
                Some(b'j') => 2,
                Some(b'k') => 3,
                _ => 0,
            };
            if slot != 0 {
                pos += 1;
            }
            let twice = if coef.is_empty() {
                if slot == 0 {
                    return Err(err());
                }
                2
            } else if let Some((num, den)) = coef.split_once('/') {
                let num: i64 = num.parse().map_err(|_| err())?;
                match den {
                    "1" => 2 * num,
                    "2" => num,
                    _ => return Err(err()),
                }
            } else {
                2 * coef.parse::<i64>().map_err(|_| err())?
            };
            if doubled[slot].replace(sign * twice).is_some() {
                return Err(err());
            }
        }
        HurwitzInt::from_doubled(doubled.map(|d| d.unwrap_or(0)))
    }
}

impl Serialize for HurwitzInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.d.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HurwitzInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let d = <[i64; 4]>::deserialize(deserializer)?;
        HurwitzInt::from_doubled(d).map_err(serde::de::Error::custom)
    }
}

/// Exact rational quaternion `(n0 + n1 i + n2 j + n3 k) / den`, kept in
/// lowest shared terms with `den > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RationalQuaternion {
    num: [i64; 4],
    den: i64,
}

impl RationalQuaternion {
    pub fn new(num: [i64; 4], den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = den.signum();
        let g = num.iter().fold(den.abs(), |g, x| g.gcd(x));
        RationalQuaternion { num: num.map(|x| sign * x / g), den: den.abs() / g }
    }

    pub fn numerators(&self) -> [i64; 4] {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// `Some` when the value lies in the Hurwitz order.
    pub fn to_hurwitz(&self) -> Option<HurwitzInt> {
        match self.den {
            1 => Some(HurwitzInt { d: self.num.map(|x| 2 * x) }),
            2 => HurwitzInt::from_doubled(self.num).ok(),
            _ => None,
        }
    }

    pub fn to_real(&self) -> RealQuaternion {
        RealQuaternion(self.num.map(|x| x as f64 / self.den as f64))
    }

    /// `a · b̄ / Nrm(b)`, i.e. `a b⁻¹`.
    pub fn right_quotient(a: &HurwitzInt, b: &HurwitzInt) -> Result<Self> {
        let (bc, n) = b.conj_nrm();
        if n == 0 {
            return Err(Error::ZeroDivisor);
        }
        let prod = a.checked_mul(&bc).ok_or(Error::Overflow("right_quotient"))?;
        Ok(RationalQuaternion::new(prod.doubled(), 2 * n))
    }

    /// `b̄ · a / Nrm(b)`, i.e. `b⁻¹ a`.
    pub fn left_quotient(b: &HurwitzInt, a: &HurwitzInt) -> Result<Self> {
        let (bc, n) = b.conj_nrm();
        if n == 0 {
            return Err(Error::ZeroDivisor);
        }
        let prod = bc.checked_mul(a).ok_or(Error::Overflow("left_quotient"))?;
        Ok(RationalQuaternion::new(prod.doubled(), 2 * n))
    }
}

impl From<HurwitzInt> for RationalQuaternion {
    fn from(h: HurwitzInt) -> Self {
        h.to_rational()
    }
}

/// Real quaternion, one 4-dimensional block of a channel-domain vector.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct RealQuaternion(pub [f64; 4]);

impl RealQuaternion {
    pub const ZERO: RealQuaternion = RealQuaternion([0.0; 4]);

    pub fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        RealQuaternion([x0, x1, x2, x3])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn scale(&self, k: f64) -> Self {
        RealQuaternion(self.0.map(|x| x * k))
    }
}

impl Add for RealQuaternion {
    type Output = RealQuaternion;
    fn add(self, rhs: Self) -> Self {
        RealQuaternion(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for RealQuaternion {
    type Output = RealQuaternion;
    fn sub(self, rhs: Self) -> Self {
        RealQuaternion(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for RealQuaternion {
    type Output = RealQuaternion;
    fn neg(self) -> Self {
        RealQuaternion(self.0.map(|x| -x))
    }
}

impl Mul for RealQuaternion {
    type Output = RealQuaternion;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (self.0, rhs.0);
        RealQuaternion([
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ])
    }
}

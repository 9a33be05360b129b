//! The representation `ℋ/pℋ → M₂(𝔽_p)`:
//!
//! ```text
//! x0 + x1 i + x2 j + x3 k ↦ [ x0 + x2 a − x3 b   −x1 + x2 b + x3 a ]
//!                          [ x1 + x2 b + x3 a    x0 − x2 a + x3 b ]
//! ```
//!
//! with `a² + b² + 1 ≡ 0 (mod p)`. Half-integer coordinates are mapped through
//! `2⁻¹ mod p`.

use crate::crt::{is_odd_prime, mod_inverse};
use crate::error::{Error, Result};
use crate::quaternion::HurwitzInt;

pub type Mat2 = [[i64; 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixRepContext {
    p: i64,
    a: i64,
    b: i64,
    half: i64,
}

impl MatrixRepContext {
    /// Finds the lexicographically first `(a, b) ∈ [0, p)²` with `a² + b² + 1 ≡ 0`.
    pub fn new(p: i64) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let (a, b) = (0..p)
            .flat_map(|a| (0..p).map(move |b| (a, b)))
            .find(|(a, b)| (a * a + b * b + 1) % p == 0)
            .ok_or_else(|| Error::Invariant(format!("no a² + b² + 1 ≡ 0 mod {p}")))?;
        Self::with_ab(p, a, b)
    }

    pub fn with_ab(p: i64, a: i64, b: i64) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if (a * a + b * b + 1).rem_euclid(p) != 0 {
            return Err(Error::Invariant(format!("{a}² + {b}² + 1 ≢ 0 mod {p}")));
        }
        let half = mod_inverse(2, p).expect("p odd");
        Ok(MatrixRepContext { p, a: a.rem_euclid(p), b: b.rem_euclid(p), half })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn ab(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    pub fn rep(&self, x: &HurwitzInt) -> Mat2 {
        let p = self.p;
        let [x0, x1, x2, x3] = x.doubled().map(|d| (d.rem_euclid(p) * self.half) % p);
        let (a, b) = (self.a, self.b);
        let m = |v: i64| v.rem_euclid(p);
        [[m(x0 + x2 * a - x3 * b), m(-x1 + x2 * b + x3 * a)], [m(x1 + x2 * b + x3 * a), m(x0 - x2 * a + x3 * b)]]
    }

    pub fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        std::array::from_fn(|r| std::array::from_fn(|c| (x[r][0] * y[0][c] + x[r][1] * y[1][c]).rem_euclid(self.p)))
    }

    pub fn add(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        std::array::from_fn(|r| std::array::from_fn(|c| (x[r][c] + y[r][c]).rem_euclid(self.p)))
    }
}

/// `ρ(x)` under the given context.
pub fn matrix_rep(x: &HurwitzInt, ctx: &MatrixRepContext) -> Mat2 {
    ctx.rep(x)
}

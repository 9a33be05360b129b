//! Multilevel lattice codes over the Hurwitz quaternion integers.
//!
//! The crate covers exact Hurwitz arithmetic ([`quaternion`], [`quantize`],
//! [`euclid`]), the CRT decomposition of `ℋ/qℋ` into prime levels ([`crt`],
//! [`residues`], [`matrix_rep`]), Construction π_A codes ([`code`],
//! [`spec_file`]), serial and exhaustive decoders ([`decode`]), cross-ring
//! complexity tables ([`complexity`]) and the simulation and benchmark
//! harnesses ([`sim`], [`bench`], [`selftest`]).
//!
//! ```
//! use hurwitz_pia::{fixtures, smd_decode};
//!
//! let code = fixtures::q3_code().unwrap();
//! assert_eq!(code.len(), 81);
//! let x = code.random_codeword(1);
//! assert_eq!(smd_decode(&x.to_real(), &code).unwrap().point, x);
//! ```

pub mod bench;
pub mod code;
pub mod complexity;
pub mod crt;
pub mod decode;
pub mod error;
pub mod euclid;
pub mod fixtures;
pub mod matrix_rep;
pub mod quantize;
pub mod quaternion;
pub mod residues;
pub mod selftest;
pub mod sim;
pub mod spec_file;

pub use code::{build_code, LatticePoint, LevelCodeSpec, PiACode, Side};
pub use crt::{
    build_crt_context, find_irreducible, phi_combine, phi_split, psi_combine, psi_split, CrtContext, IrreducibleFactor,
};
pub use decode::{mld_decode, smd_decode, DecodeResult};
pub use error::{Error, Result};
pub use euclid::{divides, gcd_bezout, Bezout, DivSide};
pub use quantize::{round_rational, round_real, Reduce, TieRule};
pub use quaternion::{HurwitzInt, RationalQuaternion, RealQuaternion};
pub use residues::{enumerate_residues, Modulus, ResidueSystem};

//! Complete residue systems modulo `qℋ` and modulo left ideals `ℋπ`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantize::Reduce;
use crate::quaternion::{HurwitzInt, RealQuaternion};

/// The lattice a residue is taken modulo.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Modulus {
    /// The two-sided ideal `qℋ`.
    TwoSided(i64),
    /// The left ideal `ℋπ = {hπ}`.
    LeftIdeal(HurwitzInt),
}

impl Modulus {
    pub fn reduce(&self, x: &HurwitzInt) -> HurwitzInt {
        match self {
            Modulus::TwoSided(q) => x.mod_two_sided(*q),
            Modulus::LeftIdeal(pi) => x.mod_left_ideal(pi),
        }
    }

    pub fn reduce_real(&self, x: &RealQuaternion) -> RealQuaternion {
        match self {
            Modulus::TwoSided(q) => x.mod_two_sided(*q),
            Modulus::LeftIdeal(pi) => x.mod_left_ideal(pi),
        }
    }

    /// Number of cosets: `q⁴` or `Nrm(π)²`.
    pub fn class_count(&self) -> usize {
        match self {
            Modulus::TwoSided(q) => (*q as usize).pow(4),
            Modulus::LeftIdeal(pi) => (pi.norm() as usize).pow(2),
        }
    }
}

/// Canonical coset representatives, sorted, with an ordinal lookup.
#[derive(Clone, Debug, Serialize)]
pub struct ResidueSystem {
    modulus: Modulus,
    elements: Vec<HurwitzInt>,
    #[serde(skip)]
    index: HashMap<HurwitzInt, usize>,
}

impl ResidueSystem {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn elements(&self) -> &[HurwitzInt] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Ordinal of the class containing `x`.
    pub fn ordinal(&self, x: &HurwitzInt) -> usize {
        self.index[&self.modulus.reduce(x)]
    }

    pub fn contains_canonical(&self, x: &HurwitzInt) -> bool {
        self.index.contains_key(x)
    }
}

/// Enumerates a residue system by reducing every Hurwitz point of a bounding
/// box and deduplicating. The box is a fundamental domain of `qℤ⁴` for the
/// two-sided case and covers the Voronoi cell of `ℋπ` for the left-ideal case.
pub fn enumerate_residues(modulus: Modulus) -> Result<ResidueSystem> {
    let (lo, hi) = match modulus {
        Modulus::TwoSided(q) if q >= 1 => (0, 2 * q - 1),
        Modulus::LeftIdeal(pi) if pi.norm() > 0 => {
            let r = 4 * (pi.norm() as f64).sqrt().ceil() as i64;
            (-r, r)
        }
        _ => return Err(Error::InvalidSpec(format!("bad modulus {modulus:?}"))),
    };
    let mut elements: Vec<HurwitzInt> = (lo..=hi)
        .into_par_iter()
        .flat_map_iter(|d0| {
            (lo..=hi).flat_map(move |d1| {
                (lo..=hi).flat_map(move |d2| {
                    (lo..=hi).filter_map(move |d3| {
                        HurwitzInt::from_doubled([d0, d1, d2, d3]).ok().map(|x| modulus.reduce(&x))
                    })
                })
            })
        })
        .collect();
    elements.par_sort_unstable();
    elements.dedup();
    if elements.len() != modulus.class_count() {
        return Err(Error::Invariant(format!(
            "{modulus:?}: enumerated {} classes, expected {}",
            elements.len(),
            modulus.class_count()
        )));
    }
    let index = elements.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    Ok(ResidueSystem { modulus, elements, index })
}

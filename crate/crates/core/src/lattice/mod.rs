//! Coordinate subtori of `T⁶`, exact integer linear algebra and finitely
//! generated abelian groups.

mod complement;
mod group;
mod matrix;
mod subtorus;

pub use complement::{
    complement_betti, complement_homology, compute_complement_homology,
    cycle_intersection_matrix, find_dual_torus, intersection_matrix, is_dual_torus,
    lifted_three_tori, two_torus_intersection_matrix, ComplementHomology, DUAL_TORUS_VALUES,
};
pub use group::{quotient_group, AbelianGroup};
pub use matrix::{snf, IntegerMatrix, SnfResult};
pub use subtorus::{
    circle_class, embedded_tori, essential_three_tori, intersect, CoordinateSubtorus,
    EmbeddedTorus, Intersection, Root8, AMBIENT_DIM, PARAMETER_LABELS,
};

use num::{BigInt, ToPrimitive};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("coordinate {0} is outside 1..=6")]
    InvalidCoordinate(usize),
    #[error("free and fixed coordinates do not partition 1..=6")]
    NotPartition,
    #[error("expected dimension {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("circle {circle} is not contained in {torus}")]
    NotContained { circle: String, torus: String },
    #[error("{cycle} meets {torus} non-transversely")]
    NonTransverse { cycle: String, torus: String },
    #[error("no dual torus for {0}")]
    NoDualTorus(String),
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("not a divisibility chain of factors >= 2: [{0}]")]
    NotInvariantFactors(String),
}

/// A big integer in JSON: a number when it fits in `i64`, else a string.
pub(crate) struct JsonInt<'a>(pub &'a BigInt);

impl serde::Serialize for JsonInt<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.collect_str(self.0),
        }
    }
}

pub(crate) fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(JsonInt))
}

/// Reads what [`JsonInt`] writes.
pub(crate) struct ParsedInt(pub BigInt);

impl<'de> serde::Deserialize<'de> for ParsedInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Small(i64),
            Big(String),
        }
        match Repr::deserialize(d)? {
            Repr::Small(v) => Ok(ParsedInt(BigInt::from(v))),
            Repr::Big(s) => s.parse().map(ParsedInt).map_err(serde::de::Error::custom),
        }
    }
}

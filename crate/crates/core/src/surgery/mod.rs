//! Surgery descriptors on the four embedded tori, the first homology of the
//! result, and the invariants read off from it.

mod descriptor;
mod homology;
mod obstruction;
mod sl2z;
mod sweep;

pub use descriptor::{Surgery, SurgeryDescriptor, NUM_SURGERIES};
pub use homology::{
    b2_upper_bound, b3_upper_bound, euler_characteristic, h1, relation_classes, report,
    SurgeryReport,
};
pub use obstruction::{
    min_product_b2, minimal_product, product_obstruction, ProductCandidate, ProductStatus,
};
pub use sl2z::SL2Z;
pub use sweep::{realize, sweep, InvariantClass, SweepClass, SweepGrid};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SurgeryError {
    #[error("twist has determinant {det}, expected 1")]
    Determinant { det: i128 },
    #[error("product bound needs b1(M) in {{0, 1}}, got {0}")]
    ProductRank(usize),
}

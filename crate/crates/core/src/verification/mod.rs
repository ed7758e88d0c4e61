//! Named end-to-end checks of the symplectic constructions on the surgery
//! neighbourhood. Failures are reported claim by claim, never raised.

mod canonical;
mod extension;
pub mod model;
mod report;

pub use canonical::{
    circle_points, positivity_samples, verify_trivial_canonical_class,
    verify_trivial_canonical_class_with, CanonicalInputs,
};
pub use extension::{verify_symplectic_extension, verify_symplectic_extension_with, ExtensionInputs};
pub use model::SurgeryParam;
pub use report::{Claim, IdentityReport, Residual};

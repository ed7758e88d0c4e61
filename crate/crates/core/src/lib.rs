//! Coisotropic Luttinger surgery on the 6-torus, computed exactly.
//!
//! * [`exterior`]: symbolic exterior algebra over rational functions.
//! * [`verification`]: symplectic and canonical-class identities as reports.
//! * [`lattice`]: coordinate subtori of `T⁶`, Smith normal form, abelian groups.
//! * [`surgery`]: surgery descriptors, first homology and Betti bounds.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod exterior;
pub mod lattice;
pub mod surgery;
pub mod verification;

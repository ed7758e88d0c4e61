//! Arithmetic showing that the surgered manifolds with small `b₁` are not
//! products `M⁴ × T²`.

use serde::{Deserialize, Serialize};

use super::SurgeryError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductStatus {
    Obstructed,
    Unknown,
}

/// Invariants of a spin product `M × T²` with `c₁ = 0`, `b₁(M) = r` and
/// signature `−16n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProductCandidate {
    pub r: usize,
    pub n: usize,
    pub b_plus: i64,
    pub b_minus: i64,
    pub b2_m: i64,
    pub b2_x: i64,
}

impl ProductCandidate {
    /// `b⁺ = 4n + r − 1` from `c₁² = 2e + 3σ = 0` and Rohlin; `None` when
    /// `b⁺ < 1`, which a symplectic `M` cannot have.
    pub fn new(r: usize, n: usize) -> Option<Self> {
        let (ri, ni) = (r as i64, n as i64);
        let b_plus = 4 * ni + ri - 1;
        if b_plus < 1 {
            return None;
        }
        // Rohlin: σ = b⁺ − b⁻ = −16n.
        let b_minus = b_plus + 16 * ni;
        // c₁² = 0: b⁻ = 5b⁺ + 4 − 4r.
        debug_assert_eq!(b_minus, 5 * b_plus + 4 - 4 * ri);
        let b2_m = b_plus + b_minus;
        // Künneth with T²: b₂(M) + b₁(M)·b₁(T²) + b₂(T²).
        let b2_x = b2_m + 2 * ri + 1;
        Some(ProductCandidate {
            r,
            n,
            b_plus,
            b_minus,
            b2_m,
            b2_x,
        })
    }

    /// The two expressions for `b⁻` agree.
    pub fn is_consistent(&self) -> bool {
        self.b_minus == 5 * self.b_plus + 4 - 4 * self.r as i64
            && self.b_plus - self.b_minus == -16 * self.n as i64
    }
}

/// The smallest-`n` admissible product for `b₁(M) = r`.
pub fn minimal_product(r: usize) -> Result<ProductCandidate, SurgeryError> {
    if r > 1 {
        return Err(SurgeryError::ProductRank(r));
    }
    Ok((0..)
        .find_map(|n| ProductCandidate::new(r, n))
        .expect("b+ grows with n"))
}

/// Least `b₂(M × T²)` over admissible spin `M` with `b₁(M) = r`.
pub fn min_product_b2(r: usize) -> Result<i64, SurgeryError> {
    minimal_product(r).map(|c| c.b2_x)
}

/// `Obstructed` when `b₁ ∈ {2, 3}` and even the smallest product has more
/// second homology than `b2_upper` allows. Never claims a product exists.
pub fn product_obstruction(b1: usize, b2_upper: usize) -> ProductStatus {
    if !(2..=3).contains(&b1) {
        return ProductStatus::Unknown;
    }
    match min_product_b2(b1 - 2) {
        Ok(min) if (b2_upper as i64) < min => ProductStatus::Obstructed,
        _ => ProductStatus::Unknown,
    }
}

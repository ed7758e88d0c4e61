//! First homology of the surgered manifold and the bounds that follow.

use num::BigInt;
use serde::{Deserialize, Serialize};

use super::descriptor::{SurgeryDescriptor, NUM_SURGERIES};
use super::obstruction::{product_obstruction, ProductStatus};
use super::SL2Z;
use crate::lattice::{
    complement_betti, embedded_tori, quotient_group, snf, AbelianGroup, IntegerMatrix, AMBIENT_DIM,
};

/// Rank of `H₁(S¹ × T⁴)` on the basis `(μ, z, w, σ₁, σ₂)`.
const BOUNDARY_RANK: usize = 5;

/// Class of the attaching circle `ψ_k(∂D² × {pt})`: `μ + k·w`.
fn attaching_circle(k: i64) -> IntegerMatrix {
    IntegerMatrix::from_rows(BOUNDARY_RANK, &[vec![1, 0, k, 0, 0]]).expect("five entries")
}

/// Pushforward of the twist on row vectors: `z ↦ p z + r w`, `w ↦ q z + s w`.
fn twist_pushforward(tau: &SL2Z) -> IntegerMatrix {
    let (p, q, r, s) = tau.entries();
    IntegerMatrix::from_rows(
        BOUNDARY_RANK,
        &[
            vec![1, 0, 0, 0, 0],
            vec![0, p, r, 0, 0],
            vec![0, q, s, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
        ],
    )
    .expect("five entries")
}

/// Pushforward into `H₁(T⁶ \ N) = Z⁶`: the meridian bounds, each circle
/// parameter goes to the coordinate the embedding assigns it.
fn embedding_pushforward(labels: [usize; 4]) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(BOUNDARY_RANK, AMBIENT_DIM);
    for (slot, coord) in labels.iter().enumerate() {
        m[(slot + 1, coord - 1)] = BigInt::from(1);
    }
    m
}

/// Row `i` is the class in `Z⁶` of the circle that bounds after surgery `i`.
pub fn relation_classes(d: &SurgeryDescriptor) -> IntegerMatrix {
    let tori = embedded_tori();
    let mut rows = IntegerMatrix::zeros(0, AMBIENT_DIM);
    for (surgery, torus) in d.surgeries.iter().zip(&tori) {
        let row = attaching_circle(surgery.k)
            .mul(&twist_pushforward(&surgery.tau))
            .and_then(|v| v.mul(&embedding_pushforward(torus.labels())))
            .and_then(|v| rows.stack(&v))
            .expect("shapes agree");
        rows = row;
    }
    rows
}

pub fn h1(d: &SurgeryDescriptor) -> AbelianGroup {
    quotient_group(AMBIENT_DIM, &relation_classes(d)).expect("six columns")
}

/// `χ(T⁶) = Σ (−1)^j C(6, j)`; surgery does not change it.
pub fn euler_characteristic() -> i64 {
    let mut binom = 1i64;
    let mut chi = 0i64;
    for j in 0..=AMBIENT_DIM as i64 {
        chi += if j % 2 == 0 { binom } else { -binom };
        binom = binom * (AMBIENT_DIM as i64 - j) / (j + 1);
    }
    chi
}

/// `b₂ ≤ b₂(T⁶ \ N) + 4 − rank(relations)`.
pub fn b2_upper_bound(relation_rank: usize) -> usize {
    let (_, b2_complement) = complement_betti().expect("standard catalog is consistent");
    b2_complement + NUM_SURGERIES - relation_rank
}

/// From `χ = 2 − 2b₁ + 2b₂ − b₃`: `b₃ = 2 − 2b₁ + 2b₂ − χ ≤ 2 − 2b₁ + 2·b₂_upper − χ`.
pub fn b3_upper_bound(b1: usize, b2_upper: usize) -> usize {
    let v = 2 - 2 * b1 as i64 + 2 * b2_upper as i64 - euler_characteristic();
    v.max(0) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgeryReport {
    pub descriptor: SurgeryDescriptor,
    pub h1: AbelianGroup,
    pub b1: usize,
    pub bound_b2: usize,
    pub bound_b3: usize,
    pub euler: i64,
    pub kahler_obstructed: bool,
    pub product_status: ProductStatus,
    pub relations: IntegerMatrix,
}

pub fn report(d: &SurgeryDescriptor) -> SurgeryReport {
    let relations = relation_classes(d);
    let h1 = quotient_group(AMBIENT_DIM, &relations).expect("six columns");
    let b1 = h1.rank();
    let bound_b2 = b2_upper_bound(snf(&relations).rank());
    SurgeryReport {
        descriptor: *d,
        b1,
        bound_b2,
        bound_b3: b3_upper_bound(b1, bound_b2),
        euler: euler_characteristic(),
        kahler_obstructed: b1 % 2 == 1,
        product_status: product_obstruction(b1, bound_b2),
        h1,
        relations,
    }
}

impl SurgeryReport {
    /// `H1 = …; b1 = …; b2 <= …; b3 <= …; non-Kahler: …; product-obstructed: …`.
    /// Even `b₁` gives no Kähler verdict either way.
    pub fn summary_line(&self) -> String {
        format!(
            "H1 = {}; b1 = {}; b2 <= {}; b3 <= {}; non-Kahler: {}; product-obstructed: {}",
            self.h1,
            self.b1,
            self.bound_b2,
            self.bound_b3,
            if self.kahler_obstructed { "yes" } else { "unknown" },
            match self.product_status {
                ProductStatus::Obstructed => "yes",
                ProductStatus::Unknown => "unknown",
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surgery::Surgery;

    fn row(m: &IntegerMatrix, i: usize) -> Vec<i64> {
        m.row(i).iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn untwisted_relations_are_diagonal() {
        let m = relation_classes(&SurgeryDescriptor::untwisted([2, 3, 4, 5]));
        assert_eq!(row(&m, 0), vec![0, 0, 2, 0, 0, 0]);
        assert_eq!(row(&m, 3), vec![0, 0, 0, 0, 0, 5]);
        assert!(relation_classes(&SurgeryDescriptor::untwisted([0; 4])).is_zero());
    }

    #[test]
    fn twisted_row() {
        let mut d = SurgeryDescriptor::untwisted([0; 4]);
        d.surgeries[0] = Surgery::new(2, SL2Z::new(1, 1, 0, 1).unwrap());
        assert_eq!(row(&relation_classes(&d), 0), vec![0, 2, 2, 0, 0, 0]);
    }

    #[test]
    fn headline_family() {
        let r = report(&SurgeryDescriptor::untwisted([0, 5, 1, 1]));
        assert_eq!(
            r.summary_line(),
            "H1 = Z^3 + Z/5; b1 = 3; b2 <= 18; b3 <= 32; non-Kahler: yes; product-obstructed: yes"
        );
        assert_eq!(r.euler, 0);
    }

    #[test]
    fn unsurgered_torus() {
        let r = report(&SurgeryDescriptor::untwisted([0; 4]));
        assert_eq!(r.h1, AbelianGroup::free(6));
        assert_eq!((r.b1, r.bound_b2, r.bound_b3), (6, 21, 32));
        assert!(!r.kahler_obstructed);
        assert_eq!(r.product_status, ProductStatus::Unknown);
    }

    #[test]
    fn mixed_torsion_normal_form() {
        let g = h1(&SurgeryDescriptor::untwisted([2, 3, 0, 0]));
        assert_eq!(g.to_string(), "Z^4 + Z/6");
        let r = report(&SurgeryDescriptor::untwisted([1, 1, 1, 1]));
        assert_eq!(r.h1, AbelianGroup::free(2));
        assert_eq!(r.product_status, ProductStatus::Obstructed);
    }

    #[test]
    fn report_json_round_trip() {
        let r = report(&SurgeryDescriptor::untwisted([0, 5, 1, 1]));
        let text = serde_json::to_string(&r).unwrap();
        let back: SurgeryReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

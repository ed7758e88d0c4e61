//! Homology of the complement of the four embedded tori, assembled from
//! transverse intersections of coordinate subtori.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num::BigInt;
use serde::Serialize;

use super::matrix::{snf, IntegerMatrix};
use super::subtorus::{
    circle_class, embedded_tori, essential_three_tori, intersect, CoordinateSubtorus,
    EmbeddedTorus, Intersection, Root8, AMBIENT_DIM,
};
use super::LatticeError;

/// Row `j` concatenates the `H₁` classes of `cycles[j] ∩ tori[i]` over `i`,
/// with a zero block where they miss.
pub fn intersection_matrix(
    cycles: &[CoordinateSubtorus],
    tori: &[EmbeddedTorus],
) -> Result<IntegerMatrix, LatticeError> {
    let mut m = IntegerMatrix::zeros(cycles.len(), 4 * tori.len());
    for (j, cycle) in cycles.iter().enumerate() {
        for (i, torus) in tori.iter().enumerate() {
            match intersect(cycle, torus.torus()) {
                Intersection::Empty => {}
                Intersection::NonTransverse => {
                    return Err(LatticeError::NonTransverse {
                        cycle: cycle.to_string(),
                        torus: torus.name().to_string(),
                    })
                }
                Intersection::Transverse(circle) => {
                    for (slot, v) in circle_class(&circle, torus)?.iter().enumerate() {
                        m[(j, 4 * i + slot)] = BigInt::from(*v);
                    }
                }
            }
        }
    }
    Ok(m)
}

/// The 10 × 16 matrix of the essential 3-tori against the embedded tori.
pub fn cycle_intersection_matrix() -> Result<IntegerMatrix, LatticeError> {
    intersection_matrix(&essential_three_tori(), &embedded_tori())
}

/// Values a dual torus may freeze its coordinates at, in search order.
pub const DUAL_TORUS_VALUES: [Root8; 5] = [
    Root8::ONE,
    Root8::P,
    Root8::I,
    Root8::MINUS_ONE,
    Root8::MINUS_I,
];

/// A 2-torus with values from [`DUAL_TORUS_VALUES`] meeting `tori[index]` in
/// one transverse point and missing every other torus.
pub fn is_dual_torus(candidate: &CoordinateSubtorus, tori: &[EmbeddedTorus], index: usize) -> bool {
    if candidate.dimension() != 2
        || !candidate.fixed().values().all(|v| DUAL_TORUS_VALUES.contains(v))
    {
        return false;
    }
    tori.iter().enumerate().all(|(j, e)| match intersect(candidate, e.torus()) {
        Intersection::Transverse(point) => j == index && point.dimension() == 0,
        Intersection::Empty => j != index,
        Intersection::NonTransverse => false,
    })
}

/// Exhaustive search; the least solution ordered by free set, then by the
/// fixed values coordinate by coordinate in [`DUAL_TORUS_VALUES`] order.
pub fn find_dual_torus(tori: &[EmbeddedTorus], index: usize) -> Result<CoordinateSubtorus, LatticeError> {
    for a in 1..=AMBIENT_DIM {
        for b in a + 1..=AMBIENT_DIM {
            let rest: Vec<usize> = (1..=AMBIENT_DIM).filter(|&c| c != a && c != b).collect();
            let n = DUAL_TORUS_VALUES.len();
            for code in 0..n.pow(rest.len() as u32) {
                let mut digits = Vec::with_capacity(rest.len());
                let mut c = code;
                for _ in 0..rest.len() {
                    digits.push(c % n);
                    c /= n;
                }
                digits.reverse();
                let fixed = rest.iter().zip(&digits).map(|(&coord, &d)| (coord, DUAL_TORUS_VALUES[d]));
                let candidate = CoordinateSubtorus::new([a, b], fixed)?;
                if is_dual_torus(&candidate, tori, index) {
                    return Ok(candidate);
                }
            }
        }
    }
    Err(LatticeError::NoDualTorus(
        tori.get(index).map(|t| t.name().to_string()).unwrap_or_else(|| index.to_string()),
    ))
}

/// The ten 3-tori missing the first circle, frozen there at `p`: they avoid
/// every embedded torus and so lift to the complement.
pub fn lifted_three_tori() -> Vec<CoordinateSubtorus> {
    let mut out = Vec::new();
    for a in 2..=AMBIENT_DIM {
        for b in a + 1..=AMBIENT_DIM {
            for c in b + 1..=AMBIENT_DIM {
                let fixed = (1..=AMBIENT_DIM)
                    .filter(|x| ![a, b, c].contains(x))
                    .map(|x| (x, if x == 1 { Root8::P } else { Root8::MINUS_ONE }));
                out.push(CoordinateSubtorus::new([a, b, c], fixed).expect("partition"));
            }
        }
    }
    out
}

/// Intersection numbers of the fifteen coordinate 2-tori with each embedded
/// torus: one exactly when the free sets span.
pub fn two_torus_intersection_matrix(tori: &[EmbeddedTorus]) -> IntegerMatrix {
    let mut pairs = Vec::new();
    for a in 1..=AMBIENT_DIM {
        for b in a + 1..=AMBIENT_DIM {
            pairs.push([a, b]);
        }
    }
    IntegerMatrix::from_fn(pairs.len(), tori.len(), |r, i| {
        let span: BTreeSet<usize> = tori[i].torus().free().iter().chain(&pairs[r]).copied().collect();
        BigInt::from((span.len() == AMBIENT_DIM) as i64)
    })
}

/// Everything the Betti numbers of the complement are derived from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementHomology {
    pub cycle_matrix: IntegerMatrix,
    pub cycle_rank: usize,
    #[serde(serialize_with = "super::serialize_bigints")]
    pub cycle_invariant_factors: Vec<BigInt>,
    /// `16 − cycle_rank`.
    pub cokernel_rank: usize,
    pub dual_tori: Vec<CoordinateSubtorus>,
    /// The complementary ten 3-tori miss every embedded torus, so the image
    /// of `H₃(T⁶)` has rank at most ten.
    pub lifted_cycles_disjoint: bool,
    pub two_torus_rank: usize,
    pub b1: usize,
    pub b2: usize,
}

pub fn compute_complement_homology(
    cycles: &[CoordinateSubtorus],
    tori: &[EmbeddedTorus],
) -> Result<ComplementHomology, LatticeError> {
    let cycle_matrix = intersection_matrix(cycles, tori)?;
    let s = snf(&cycle_matrix);
    let cycle_rank = s.rank();
    let cokernel_rank = cycle_matrix.cols() - cycle_rank;
    let dual_tori = (0..tori.len())
        .map(|i| find_dual_torus(tori, i))
        .collect::<Result<Vec<_>, _>>()?;

    let lifted = lifted_three_tori();
    let mut frees: BTreeSet<Vec<usize>> = cycles.iter().map(|c| c.free().iter().copied().collect()).collect();
    frees.extend(lifted.iter().map(|c| c.free().iter().copied().collect::<Vec<_>>()));
    let lifted_cycles_disjoint = frees.len() == 20
        && lifted
            .iter()
            .all(|c| tori.iter().all(|e| intersect(c, e.torus()) == Intersection::Empty));

    let two_torus_rank = snf(&two_torus_intersection_matrix(tori)).rank();
    let b1 = AMBIENT_DIM;
    let b2 = cokernel_rank + AMBIENT_DIM * (AMBIENT_DIM - 1) / 2 - two_torus_rank;
    Ok(ComplementHomology {
        cycle_matrix,
        cycle_rank,
        cycle_invariant_factors: s.invariant_factors(),
        cokernel_rank,
        dual_tori,
        lifted_cycles_disjoint,
        two_torus_rank,
        b1,
        b2,
    })
}

/// The cached computation for the standard catalog.
pub fn complement_homology() -> Result<&'static ComplementHomology, LatticeError> {
    static CACHE: OnceLock<Result<ComplementHomology, LatticeError>> = OnceLock::new();
    CACHE
        .get_or_init(|| compute_complement_homology(&essential_three_tori(), &embedded_tori()))
        .as_ref()
        .map_err(Clone::clone)
}

/// `(b₁, b₂)` of the complement of the embedded tori in `T⁶`.
pub fn complement_betti() -> Result<(usize, usize), LatticeError> {
    complement_homology().map(|h| (h.b1, h.b2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(m: &IntegerMatrix, j: usize) -> Vec<i64> {
        m.row(j).iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn known_rows() {
        let m = cycle_intersection_matrix().unwrap();
        assert_eq!((m.rows(), m.cols()), (10, 16));
        let mut first = vec![0; 16];
        first[0] = 1;
        assert_eq!(row(&m, 0), first);
        let mut fifth = vec![0; 16];
        fifth[7] = 1;
        fifth[10] = 1;
        assert_eq!(row(&m, 4), fifth);
    }

    #[test]
    fn betti_numbers() {
        let h = complement_homology().unwrap();
        assert_eq!(h.cycle_rank, 10);
        assert!(h.cycle_invariant_factors.iter().all(|d| d == &BigInt::from(1)));
        assert_eq!(h.cokernel_rank, 6);
        assert_eq!(h.two_torus_rank, 4);
        assert!(h.lifted_cycles_disjoint);
        assert_eq!(complement_betti().unwrap(), (6, 17));
    }

    #[test]
    fn dual_tori() {
        let tori = embedded_tori();
        let minus_one_t1 = CoordinateSubtorus::with_constant(&[1, 4], Root8::MINUS_ONE).unwrap();
        assert!(is_dual_torus(&minus_one_t1, &tori, 0));
        assert!(!is_dual_torus(&minus_one_t1, &tori, 1));
        for i in 0..4 {
            let t = find_dual_torus(&tori, i).unwrap();
            assert!(is_dual_torus(&t, &tori, i), "{}", t);
        }
        let t1 = find_dual_torus(&tori, 0).unwrap();
        assert_eq!(t1.free().iter().copied().collect::<Vec<_>>(), vec![1, 4]);
    }
}

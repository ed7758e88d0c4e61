use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::descriptor::{Surgery, SurgeryDescriptor, NUM_SURGERIES};
use super::homology::report;
use super::obstruction::ProductStatus;
use super::SL2Z;
use crate::lattice::AbelianGroup;

/// `k_i = d_i` with trivial twists; `H₁ ≅ Z² ⊕ Z/d₁ ⊕ … ⊕ Z/d₄`.
pub fn realize(d: [u32; NUM_SURGERIES]) -> SurgeryDescriptor {
    SurgeryDescriptor::untwisted(d.map(i64::from))
}

/// Grid of descriptors: slot `i` takes every `k` in `k_ranges[i]` and every
/// twist in `taus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepGrid {
    pub k_ranges: [RangeInclusive<i64>; NUM_SURGERIES],
    pub taus: Vec<SL2Z>,
}

impl SweepGrid {
    pub fn uniform(k: RangeInclusive<i64>, taus: Vec<SL2Z>) -> Self {
        SweepGrid {
            k_ranges: [k.clone(), k.clone(), k.clone(), k],
            taus,
        }
    }

    fn slot_choices(&self, slot: usize) -> Vec<Surgery> {
        let mut taus = self.taus.clone();
        taus.sort();
        taus.dedup();
        self.k_ranges[slot]
            .clone()
            .flat_map(|k| taus.iter().map(move |t| Surgery::new(k, *t)))
            .collect()
    }

    /// Every descriptor of the grid, in lexicographic order.
    pub fn descriptors(&self) -> Vec<SurgeryDescriptor> {
        let choices: Vec<Vec<Surgery>> = (0..NUM_SURGERIES).map(|i| self.slot_choices(i)).collect();
        if choices.iter().any(Vec::is_empty) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx = [0usize; NUM_SURGERIES];
        loop {
            out.push(SurgeryDescriptor::new(std::array::from_fn(|i| choices[i][idx[i]])));
            let mut slot = NUM_SURGERIES;
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                idx[slot] += 1;
                if idx[slot] < choices[slot].len() {
                    break;
                }
                idx[slot] = 0;
            }
        }
    }
}

/// What the sweep groups by.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantClass {
    pub h1: AbelianGroup,
    pub b1: usize,
    pub kahler_obstructed: bool,
    pub product_status: ProductStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepClass {
    #[serde(flatten)]
    pub class: InvariantClass,
    /// Lexicographically least descriptor in the class.
    pub representative: SurgeryDescriptor,
    pub count: u64,
}

/// Group the grid by invariant class, one entry per class, ordered by
/// representative.
pub fn sweep(grid: &SweepGrid) -> Vec<SweepClass> {
    let mut classes: BTreeMap<InvariantClass, (SurgeryDescriptor, u64)> = BTreeMap::new();
    for d in grid.descriptors() {
        let r = report(&d);
        let key = InvariantClass {
            h1: r.h1,
            b1: r.b1,
            kahler_obstructed: r.kahler_obstructed,
            product_status: r.product_status,
        };
        classes
            .entry(key)
            .and_modify(|(rep, n)| {
                *n += 1;
                if d < *rep {
                    *rep = d;
                }
            })
            .or_insert((d, 1));
    }
    let mut out: Vec<SweepClass> = classes
        .into_iter()
        .map(|(class, (representative, count))| SweepClass {
            class,
            representative,
            count,
        })
        .collect();
    out.sort_by_key(|c| c.representative);
    out
}

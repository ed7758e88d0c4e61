use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::LatticeError;

/// Number of circle factors in the ambient torus.
pub const AMBIENT_DIM: usize = 6;

/// An eighth root of unity `e^{iπm/4}`, stored as `m mod 8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root8(u8);

impl Root8 {
    pub const ONE: Root8 = Root8(0);
    /// The primitive root `p = e^{iπ/4}`.
    pub const P: Root8 = Root8(1);
    pub const I: Root8 = Root8(2);
    pub const MINUS_ONE: Root8 = Root8(4);
    pub const MINUS_I: Root8 = Root8(6);

    pub fn new(exponent: i64) -> Self {
        Root8(exponent.rem_euclid(8) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn inverse(self) -> Self {
        Root8::new(-(self.0 as i64))
    }
}

impl std::ops::Mul for Root8 {
    type Output = Root8;
    fn mul(self, rhs: Root8) -> Root8 {
        Root8((self.0 + rhs.0) % 8)
    }
}

impl fmt::Display for Root8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("1"),
            1 => f.write_str("p"),
            2 => f.write_str("i"),
            4 => f.write_str("-1"),
            6 => f.write_str("-i"),
            m => write!(f, "p^{}", m),
        }
    }
}

impl Serialize for Root8 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Some coordinates of `T⁶` range over the circle, the rest are frozen at
/// roots of unity. Coordinates are numbered `1..=6`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoordinateSubtorus {
    free: BTreeSet<usize>,
    fixed: BTreeMap<usize, Root8>,
}

impl CoordinateSubtorus {
    pub fn new(
        free: impl IntoIterator<Item = usize>,
        fixed: impl IntoIterator<Item = (usize, Root8)>,
    ) -> Result<Self, LatticeError> {
        let free: BTreeSet<usize> = free.into_iter().collect();
        let fixed: BTreeMap<usize, Root8> = fixed.into_iter().collect();
        for &c in free.iter().chain(fixed.keys()) {
            if !(1..=AMBIENT_DIM).contains(&c) {
                return Err(LatticeError::InvalidCoordinate(c));
            }
        }
        if free.iter().any(|c| fixed.contains_key(c)) || free.len() + fixed.len() != AMBIENT_DIM {
            return Err(LatticeError::NotPartition);
        }
        Ok(CoordinateSubtorus { free, fixed })
    }

    /// Free on `free`, every other coordinate frozen at `value`.
    pub fn with_constant(free: &[usize], value: Root8) -> Result<Self, LatticeError> {
        let fixed: Vec<(usize, Root8)> = (1..=AMBIENT_DIM)
            .filter(|c| !free.contains(c))
            .map(|c| (c, value))
            .collect();
        CoordinateSubtorus::new(free.iter().copied(), fixed)
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    pub fn free(&self) -> &BTreeSet<usize> {
        &self.free
    }

    pub fn fixed(&self) -> &BTreeMap<usize, Root8> {
        &self.fixed
    }

    pub fn fixed_value(&self, coordinate: usize) -> Option<Root8> {
        self.fixed.get(&coordinate).copied()
    }

    /// Every point of `self` lies in `other`.
    pub fn is_contained_in(&self, other: &CoordinateSubtorus) -> bool {
        self.free.is_subset(&other.free)
            && other
                .fixed
                .iter()
                .all(|(c, v)| self.fixed.get(c) == Some(v))
    }
}

impl fmt::Display for CoordinateSubtorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=AMBIENT_DIM)
            .map(|c| match self.fixed.get(&c) {
                Some(v) => v.to_string(),
                None => "S1".to_string(),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// How two coordinate subtori meet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "torus", rename_all = "snake_case")]
pub enum Intersection {
    Empty,
    NonTransverse,
    Transverse(CoordinateSubtorus),
}

/// Empty on a conflicting fixed value, non-transverse when the free sets do
/// not span, otherwise the common subtorus.
pub fn intersect(a: &CoordinateSubtorus, b: &CoordinateSubtorus) -> Intersection {
    for (c, v) in &a.fixed {
        if let Some(w) = b.fixed.get(c) {
            if v != w {
                return Intersection::Empty;
            }
        }
    }
    if a.free.union(&b.free).count() != AMBIENT_DIM {
        return Intersection::NonTransverse;
    }
    let free: BTreeSet<usize> = a.free.intersection(&b.free).copied().collect();
    let mut fixed = a.fixed.clone();
    fixed.extend(b.fixed.iter().map(|(c, v)| (*c, *v)));
    Intersection::Transverse(CoordinateSubtorus { free, fixed })
}

/// Circle parameters of an embedded `T² × T²`, in order.
pub const PARAMETER_LABELS: [&str; 4] = ["z", "w", "s1", "s2"];

/// A 4-dimensional coordinate subtorus with its circle factors labelled
/// `(z, w, σ₁, σ₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddedTorus {
    name: String,
    torus: CoordinateSubtorus,
    /// `labels[j]` is the coordinate carrying parameter `j`.
    labels: [usize; 4],
}

impl EmbeddedTorus {
    pub fn new(
        name: &str,
        torus: CoordinateSubtorus,
        labels: [usize; 4],
    ) -> Result<Self, LatticeError> {
        if torus.dimension() != 4 {
            return Err(LatticeError::Dimension {
                expected: 4,
                found: torus.dimension(),
            });
        }
        let assigned: BTreeSet<usize> = labels.iter().copied().collect();
        if &assigned != torus.free() {
            return Err(LatticeError::NotPartition);
        }
        Ok(EmbeddedTorus {
            name: name.to_string(),
            torus,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn torus(&self) -> &CoordinateSubtorus {
        &self.torus
    }

    pub fn labels(&self) -> [usize; 4] {
        self.labels
    }

    /// The coordinate carrying the `w` circle.
    pub fn w_coordinate(&self) -> usize {
        self.labels[1]
    }
}

/// The four disjoint embedded tori, distinguished by their first coordinate
/// `1, i, −1, −i`.
pub fn embedded_tori() -> Vec<EmbeddedTorus> {
    let spec: [(&str, Root8, usize, [usize; 4]); 4] = [
        ("e1", Root8::ONE, 4, [2, 3, 5, 6]),
        ("e2", Root8::I, 3, [2, 4, 5, 6]),
        ("e3", Root8::MINUS_ONE, 6, [2, 5, 3, 4]),
        ("e4", Root8::MINUS_I, 5, [2, 6, 3, 4]),
    ];
    spec.iter()
        .map(|(name, first, other, labels)| {
            let torus = CoordinateSubtorus::new(labels.iter().copied(), [(1, *first), (*other, Root8::ONE)])
                .expect("catalog is a partition");
            EmbeddedTorus::new(name, torus, *labels).expect("catalog labels match")
        })
        .collect()
}

/// The ten 3-tori through the first circle, all other coordinates at `−1`.
pub fn essential_three_tori() -> Vec<CoordinateSubtorus> {
    let frees: [[usize; 3]; 10] = [
        [1, 2, 4],
        [1, 2, 3],
        [1, 2, 6],
        [1, 2, 5],
        [1, 3, 6],
        [1, 3, 5],
        [1, 3, 4],
        [1, 4, 5],
        [1, 4, 6],
        [1, 5, 6],
    ];
    frees
        .iter()
        .map(|f| CoordinateSubtorus::with_constant(f, Root8::MINUS_ONE).expect("valid free set"))
        .collect()
}

/// `H₁` class of a coordinate circle inside an embedded torus: the unit
/// vector of the parameter carried by its free coordinate.
pub fn circle_class(circle: &CoordinateSubtorus, torus: &EmbeddedTorus) -> Result<[i64; 4], LatticeError> {
    if circle.dimension() != 1 {
        return Err(LatticeError::Dimension {
            expected: 1,
            found: circle.dimension(),
        });
    }
    if !circle.is_contained_in(torus.torus()) {
        return Err(LatticeError::NotContained {
            circle: circle.to_string(),
            torus: torus.name().to_string(),
        });
    }
    let c = *circle.free().iter().next().expect("one free coordinate");
    let mut class = [0; 4];
    let slot = torus.labels.iter().position(|&l| l == c).expect("free coordinate is labelled");
    class[slot] = 1;
    Ok(class)
}

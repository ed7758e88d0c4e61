use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{snf, IntegerMatrix};
use super::{JsonInt, LatticeError, ParsedInt};

/// `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_m` with `2 ≤ t₁ | t₂ | … | t_m`. The normal form
/// is unique, so derived equality is group isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// From a list that is already a divisibility chain of factors `≥ 2`.
    pub fn from_invariant_factors(rank: usize, torsion: Vec<BigInt>) -> Result<Self, LatticeError> {
        let two = BigInt::from(2);
        for (i, t) in torsion.iter().enumerate() {
            if t < &two || (i > 0 && !t.is_multiple_of(&torsion[i - 1])) {
                return Err(LatticeError::NotInvariantFactors(
                    torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", "),
                ));
            }
        }
        Ok(AbelianGroup { rank, torsion })
    }

    /// `Z^rank ⊕ ⊕ Z/nᵢ` for arbitrary orders: `0` adds a free summand, `±1`
    /// is trivial. Normalised through the prime-power decomposition.
    pub fn from_cyclic_orders(rank: usize, orders: &[BigInt]) -> Self {
        let mut rank = rank;
        let mut powers: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
        for n in orders {
            if n.is_zero() {
                rank += 1;
                continue;
            }
            for (p, e) in factorize(&n.abs()) {
                powers.entry(p).or_default().push(e);
            }
        }
        let len = powers.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); len];
        for (p, mut exps) in powers {
            exps.sort_unstable();
            let offset = len - exps.len();
            for (i, e) in exps.into_iter().enumerate() {
                torsion[offset + i] *= num::pow(p.clone(), e as usize);
            }
        }
        AbelianGroup { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

/// Trial division; the orders met here are small.
fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{}", t)));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            rank: usize,
            torsion: Vec<JsonInt<'a>>,
        }
        Repr {
            rank: self.rank,
            torsion: self.torsion.iter().map(JsonInt).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            rank: usize,
            torsion: Vec<ParsedInt>,
        }
        let r = Repr::deserialize(d)?;
        let torsion = r.torsion.into_iter().map(|t| t.0).collect();
        AbelianGroup::from_invariant_factors(r.rank, torsion).map_err(serde::de::Error::custom)
    }
}

/// `Z^n` modulo the row span of `relations`.
pub fn quotient_group(ambient_rank: usize, relations: &IntegerMatrix) -> Result<AbelianGroup, LatticeError> {
    if relations.cols() != ambient_rank {
        return Err(LatticeError::Shape {
            expected: ambient_rank,
            found: relations.cols(),
        });
    }
    let factors = snf(relations).invariant_factors();
    let rank = ambient_rank - factors.len();
    let torsion: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
    Ok(AbelianGroup { rank, torsion })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn empty_relations_give_free_group() {
        let g = quotient_group(6, &IntegerMatrix::zeros(0, 6)).unwrap();
        assert_eq!(g, AbelianGroup::free(6));
        assert_eq!(g.to_string(), "Z^6");
    }

    #[test]
    fn diagonal_relations() {
        let rows = vec![
            vec![0, 0, 2, 0, 0, 0],
            vec![0, 0, 0, 3, 0, 0],
            vec![0, 0, 0, 0, 4, 0],
            vec![0, 0, 0, 0, 0, 5],
        ];
        let g = quotient_group(6, &IntegerMatrix::from_rows(6, &rows).unwrap()).unwrap();
        assert_eq!(g, AbelianGroup::from_invariant_factors(2, big(&[2, 60])).unwrap());
        assert_eq!(g, AbelianGroup::from_cyclic_orders(2, &big(&[2, 3, 4, 5])));
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/60");
    }

    #[test]
    fn single_row() {
        let rel = IntegerMatrix::from_rows(6, &[vec![0, 2, 2, 0, 0, 0]]).unwrap();
        let g = quotient_group(6, &rel).unwrap();
        assert_eq!(g.to_string(), "Z^5 + Z/2");
    }

    #[test]
    fn wrong_width_rejected() {
        assert!(matches!(
            quotient_group(6, &IntegerMatrix::zeros(1, 5)),
            Err(LatticeError::Shape { expected: 6, found: 5 })
        ));
    }

    #[test]
    fn cyclic_orders_normalize() {
        let g = AbelianGroup::from_cyclic_orders(0, &big(&[0, 1, -6, 4, 9]));
        assert_eq!(g, AbelianGroup::from_invariant_factors(1, big(&[6, 36])).unwrap());
        assert_eq!(AbelianGroup::from_cyclic_orders(0, &[]).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let g = AbelianGroup::from_invariant_factors(3, big(&[5])).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"rank":3,"torsion":[5]}"#);
        assert_eq!(serde_json::from_str::<AbelianGroup>(&text).unwrap(), g);
        assert!(serde_json::from_str::<AbelianGroup>(r#"{"rank":0,"torsion":[4,2]}"#).is_err());
        let huge = AbelianGroup::from_invariant_factors(0, vec![BigInt::from(10).pow(30u32)]).unwrap();
        let text = serde_json::to_string(&huge).unwrap();
        assert!(text.contains('"'));
        assert_eq!(serde_json::from_str::<AbelianGroup>(&text).unwrap(), huge);
    }
}

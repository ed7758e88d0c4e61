//! Oracles shared by the integration tests. Nothing here calls the library's
//! own normal-form or elimination code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use luttinger::surgery::SL2Z;
use num::{BigInt, BigRational, Integer, Zero};
use rand::Rng;

/// Leibniz expansion of a square determinant.
pub fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
    fn go(m: &[Vec<BigInt>], row: usize, used: &mut Vec<bool>, sign: i64) -> BigInt {
        if row == m.len() {
            return BigInt::from(sign);
        }
        let mut total = BigInt::zero();
        let mut s = sign;
        for col in 0..m.len() {
            if used[col] {
                continue;
            }
            if !m[row][col].is_zero() {
                used[col] = true;
                total += &m[row][col] * go(m, row + 1, used, s);
                used[col] = false;
            }
            s = -s;
        }
        total
    }
    go(m, 0, &mut vec![false; m.len()], 1)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all k×k minors.
pub fn determinantal_divisor(m: &[Vec<BigInt>], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(m.len(), k) {
        for cs in subsets(m[0].len(), k) {
            let minor: Vec<Vec<BigInt>> =
                rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            g = g.gcd(&leibniz(&minor));
        }
    }
    g
}

pub fn rank_over_q(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for j in 0..cols {
                    let v = &f * &a[rank][j];
                    a[r][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Invariant factors (> 1) from determinantal divisors.
pub fn invariant_factors_by_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let r = rank_over_q(m);
    let mut prev = BigInt::from(1);
    let mut out = Vec::new();
    for k in 1..=r {
        let dk = determinantal_divisor(m, k);
        let f = &dk / &prev;
        if f > BigInt::from(1) {
            out.push(f);
        }
        prev = dk;
    }
    out
}

/// `(rank, invariant factors)` of `Z^rank ⊕ ⊕ Z/orders`, through prime powers.
pub fn normal_form_of_cyclics(rank: usize, orders: &[u64]) -> (usize, Vec<BigInt>) {
    let mut rank = rank;
    let mut powers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &n in orders {
        if n == 0 {
            rank += 1;
            continue;
        }
        let mut n = n;
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                let mut pk = 1;
                while n % p == 0 {
                    n /= p;
                    pk *= p;
                }
                powers.entry(p).or_default().push(pk);
            }
            p += 1;
        }
    }
    let len = powers.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![BigInt::from(1); len];
    for list in powers.values_mut() {
        list.sort_unstable();
        // Largest powers go to the last factors.
        for (i, pk) in list.iter().rev().enumerate() {
            factors[len - 1 - i] *= *pk;
        }
    }
    (rank, factors)
}

/// Uniform over `SL(2, Z)` matrices with entries in `[-bound, bound]`.
pub fn bounded_twist(rng: &mut impl Rng, bound: i64) -> SL2Z {
    loop {
        let [p, q, r, s] = [0; 4].map(|_| rng.gen_range(-bound..=bound));
        if let Ok(t) = SL2Z::new(p, q, r, s) {
            return t;
        }
    }
}

/// A nontrivial word in S and T.
pub fn random_twist(rng: &mut impl Rng) -> SL2Z {
    let s = SL2Z::new(0, -1, 1, 0).unwrap();
    let t = SL2Z::new(1, 1, 0, 1).unwrap();
    let mut tau = SL2Z::identity();
    while tau.is_identity() {
        for _ in 0..rng.gen_range(1..6) {
            let step = match rng.gen_range(0..3) {
                0 => s,
                1 => t,
                _ => t.inverse(),
            };
            tau = tau.checked_mul(&step).unwrap();
        }
    }
    tau
}

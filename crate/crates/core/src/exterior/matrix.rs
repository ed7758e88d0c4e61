use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::coefficient::{Coefficient, Substitution};
use super::form::Region;
use super::poly::Symbol;
use super::scalar::Scalar;
use super::ExteriorError;

/// Square matrix over [`Coefficient`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMatrix {
    n: usize,
    entries: Vec<Coefficient>,
}

impl CoefficientMatrix {
    pub fn zero(n: usize) -> Self {
        CoefficientMatrix {
            n,
            entries: vec![Coefficient::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CoefficientMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, Coefficient::one());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Coefficient) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        CoefficientMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Coefficient) {
        self.entries[i * self.n + j] = c;
    }

    pub fn transpose(&self) -> Self {
        CoefficientMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|c| c.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn map(&self, mut f: impl FnMut(&Coefficient) -> Coefficient) -> Self {
        CoefficientMatrix {
            n: self.n,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn substitute(&self, sub: &Substitution) -> Result<Self, ExteriorError> {
        let entries = self
            .entries
            .iter()
            .map(|c| c.substitute(sub))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CoefficientMatrix { n: self.n, entries })
    }

    pub fn in_region(&self, region: Region) -> Result<Self, ExteriorError> {
        self.substitute(&region.substitution())
    }

    pub fn evaluate(&self, values: &BTreeMap<Symbol, Scalar>) -> Result<Vec<Vec<Scalar>>, ExteriorError> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).evaluate(values)).collect())
            .collect()
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = CoefficientMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p_inv = a.get(col, col).inv()?;
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Coefficient {
        let n = self.n;
        let mut a = self.clone();
        let mut det = Coefficient::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Coefficient::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det = &det * &p;
            let p_inv = p.inv().expect("nonzero pivot");
            for r in (col + 1)..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col) * &p_inv;
                a.sub_row_multiple(r, col, &factor);
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Coefficient) {
        for j in 0..self.n {
            let v = self.get(r, j) * c;
            self.set(r, j, v);
        }
    }

    /// `row[target] -= factor * row[source]`
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Coefficient) {
        for j in 0..self.n {
            if self.get(source, j).is_zero() {
                continue;
            }
            let v = self.get(target, j) - &(factor * self.get(source, j));
            self.set(target, j, v);
        }
    }
}

impl<'a> Mul<&'a CoefficientMatrix> for &'a CoefficientMatrix {
    type Output = CoefficientMatrix;
    fn mul(self, rhs: &CoefficientMatrix) -> CoefficientMatrix {
        assert_eq!(self.n, rhs.n);
        CoefficientMatrix::from_fn(self.n, |i, j| {
            let mut acc = Coefficient::zero();
            for l in 0..self.n {
                let (a, b) = (self.get(i, l), rhs.get(l, j));
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        })
    }
}

impl<'a> Add<&'a CoefficientMatrix> for &'a CoefficientMatrix {
    type Output = CoefficientMatrix;
    fn add(self, rhs: &CoefficientMatrix) -> CoefficientMatrix {
        assert_eq!(self.n, rhs.n);
        CoefficientMatrix::from_fn(self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl<'a> Sub<&'a CoefficientMatrix> for &'a CoefficientMatrix {
    type Output = CoefficientMatrix;
    fn sub(self, rhs: &CoefficientMatrix) -> CoefficientMatrix {
        assert_eq!(self.n, rhs.n);
        CoefficientMatrix::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &CoefficientMatrix {
    type Output = CoefficientMatrix;
    fn neg(self) -> CoefficientMatrix {
        self.map(|c| -c)
    }
}

/// One row per line, entries separated by `, `.
impl fmt::Display for CoefficientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Leading principal minors of an exact scalar matrix.
pub fn leading_principal_minors(m: &[Vec<Scalar>]) -> Vec<Scalar> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<Scalar>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            scalar_determinant(sub)
        })
        .collect()
}

pub fn scalar_determinant(mut a: Vec<Vec<Scalar>>) -> Scalar {
    let n = a.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det = &det * &a[col][col];
        let p_inv = a[col][col].inv().expect("nonzero pivot");
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &p_inv;
            for j in col..n {
                let v = &a[r][j] - &(&factor * &a[col][j]);
                a[r][j] = v;
            }
        }
    }
    det
}

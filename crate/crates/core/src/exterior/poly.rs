//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! The symbol list is fixed: `x, y` are the disk coordinates, `k` the surgery
//! parameter, `f` the radial bump profile and `p, q, r, s` are reserved for
//! SL(2,Z) entries. Monomials are compared lexicographically on exponent
//! vectors in that order, so `x` is the most significant variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::scalar::Scalar;

pub const NUM_SYMBOLS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X,
    Y,
    K,
    F,
    P,
    Q,
    R,
    S,
}

impl Symbol {
    pub const ALL: [Symbol; NUM_SYMBOLS] = [
        Symbol::X,
        Symbol::Y,
        Symbol::K,
        Symbol::F,
        Symbol::P,
        Symbol::Q,
        Symbol::R,
        Symbol::S,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::X => "x",
            Symbol::Y => "y",
            Symbol::K => "k",
            Symbol::F => "f",
            Symbol::P => "p",
            Symbol::Q => "q",
            Symbol::R => "r",
            Symbol::S => "s",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`Symbol::index`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u16; NUM_SYMBOLS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NUM_SYMBOLS])
    }

    pub fn var(sym: Symbol) -> Self {
        let mut e = [0; NUM_SYMBOLS];
        e[sym.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self, sym: Symbol) -> u16 {
        self.0[sym.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            if *a < *b {
                return None;
            }
            *a -= *b;
        }
        Some(Monomial(e))
    }

    fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for sym in Symbol::ALL {
            let e = self.degree(sym);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", sym)?;
            } else {
                write!(f, "{}^{}", sym, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn constant(c: Scalar) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(sym: Symbol) -> Self {
        Polynomial::term(Scalar::one(), Monomial::var(sym))
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::constant(Scalar::from_int(n))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest monomial in lexicographic order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.terms.keys().any(|m| m.degree(sym) > 0)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `sym`.
    pub fn derivative(&self, sym: Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.degree(sym);
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.0[sym.index()] -= 1;
            out.add_term(n, c * &Scalar::from_int(e as i64));
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. With a single divisor, lexicographic reduction has a zero
    /// remainder exactly when the divisor divides.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m)?;
            let qc = c * &lead_inv;
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, m| acc.gcd(m)))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (n, c) in &self.terms {
            terms.insert(n.div(m)?, c.clone());
        }
        Some(Polynomial { terms })
    }

    /// Evaluate every symbol from `values`; symbols without a value are an error.
    pub fn evaluate(&self, values: &dyn Fn(Symbol) -> Option<Scalar>) -> Option<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for sym in Symbol::ALL {
                let e = m.degree(sym);
                if e > 0 {
                    t = &t * &values(sym)?.pow(e as u32);
                }
            }
            acc += &t;
        }
        Some(acc)
    }

    pub fn map_coefficients(&self, g: impl Fn(&Scalar) -> Scalar) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, g(c));
        }
        out
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }
}

impl From<Scalar> for Polynomial {
    fn from(c: Scalar) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.clone().neg()
    }
}

/// Terms are printed leading term first.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative_real = c.is_real() && c.re() < &num::BigRational::zero();
            let mag = if negative_real { -c } else { c.clone() };
            if idx == 0 {
                if negative_real {
                    f.write_str("-")?;
                }
            } else if negative_real {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(Symbol::X)
    }
    fn y() -> Polynomial {
        Polynomial::var(Symbol::Y)
    }

    #[test]
    fn exact_division() {
        let rho = &(&x() * &x()) + &(&y() * &y());
        let prod = &rho * &(&x() - &Polynomial::from_int(3));
        assert_eq!(prod.div_exact(&rho).unwrap(), &x() - &Polynomial::from_int(3));
        assert!(x().div_exact(&rho).is_none());
        assert!((&rho + &Polynomial::one()).div_exact(&rho).is_none());
    }

    #[test]
    fn derivative_of_square() {
        let p = &(&x() * &x()) * &y();
        assert_eq!(p.derivative(Symbol::X), &Polynomial::from_int(2) * &(&x() * &y()));
        assert!(p.derivative(Symbol::K).is_zero());
    }

    #[test]
    fn display_leading_first() {
        let p = &(&(&x() * &x()) - &y()) + &Polynomial::from_int(2);
        assert_eq!(p.to_string(), "x^2 - y + 2");
        let q = -(&Polynomial::var(Symbol::K) * &y());
        assert_eq!(q.to_string(), "-y*k");
    }

    #[test]
    fn evaluate_point() {
        let p = &(&x() * &x()) + &(&y() * &y());
        let v = p
            .evaluate(&|s| match s {
                Symbol::X => Some(Scalar::from_int(3)),
                Symbol::Y => Some(Scalar::from_int(4)),
                _ => None,
            })
            .unwrap();
        assert_eq!(v, Scalar::from_int(25));
        assert!(Polynomial::var(Symbol::K).evaluate(&|_| None).is_none());
    }
}

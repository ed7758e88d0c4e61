//! Rational functions in the coefficient symbols.
//!
//! The denominator is kept as a product of monic polynomial factors with
//! multiplicities. Numerators are trial-divided by each factor after every
//! operation, which keeps region substitutions such as `f ↦ 1/(x²+y²)` from
//! piling up spurious powers. Equality never relies on full reduction: two
//! coefficients are equal iff cross-multiplication gives zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::poly::{Polynomial, Symbol};
use super::scalar::Scalar;
use super::ExteriorError;

/// Simultaneous replacement of symbols by coefficients.
pub type Substitution = BTreeMap<Symbol, Coefficient>;

#[derive(Clone, Debug)]
pub struct Coefficient {
    num: Polynomial,
    /// Monic, non-constant factors with positive multiplicity.
    den: BTreeMap<Polynomial, u32>,
}

impl Coefficient {
    pub fn from_poly(num: Polynomial) -> Self {
        Coefficient {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn from_scalar(c: Scalar) -> Self {
        Coefficient::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Coefficient::from_poly(Polynomial::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Coefficient::from_scalar(Scalar::ratio(num, den))
    }

    pub fn var(sym: Symbol) -> Self {
        Coefficient::from_poly(Polynomial::var(sym))
    }

    pub fn i() -> Self {
        Coefficient::from_scalar(Scalar::i())
    }

    /// `num / den`; fails when `den` is the zero polynomial.
    pub fn fraction(num: Polynomial, den: Polynomial) -> Result<Self, ExteriorError> {
        if den.is_zero() {
            return Err(ExteriorError::ZeroDenominator);
        }
        let lc = den.leading_coefficient().cloned().expect("nonzero");
        let lc_inv = lc.inv().expect("nonzero scalar");
        let num = num.scale(&lc_inv);
        let den = den.scale(&lc_inv);
        if den.is_constant() {
            return Ok(Coefficient::from_poly(num));
        }
        let mut factors = BTreeMap::new();
        factors.insert(den, 1);
        Ok(Coefficient { num, den: factors }.normalized())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// The expanded denominator polynomial.
    pub fn denominator(&self) -> Polynomial {
        expand(&self.den)
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&Polynomial, u32)> {
        self.den.iter().map(|(p, e)| (p, *e))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.num.contains(sym) || self.den.keys().any(|p| p.contains(sym))
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut cleared = Vec::new();
        for (base, exp) in self.den.iter_mut() {
            while *exp > 0 {
                match self.num.div_exact(base) {
                    Some(q) => {
                        self.num = q;
                        *exp -= 1;
                    }
                    None => break,
                }
            }
            if *exp == 0 {
                cleared.push(base.clone());
            }
        }
        for b in cleared {
            self.den.remove(&b);
        }
        self
    }

    pub fn scale(&self, c: &Scalar) -> Coefficient {
        Coefficient {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .normalized()
    }

    pub fn inv(&self) -> Option<Coefficient> {
        if self.num.is_zero() {
            return None;
        }
        Coefficient::fraction(expand(&self.den), self.num.clone()).ok()
    }

    pub fn try_div(&self, rhs: &Coefficient) -> Result<Coefficient, ExteriorError> {
        let inv = rhs.inv().ok_or(ExteriorError::ZeroDenominator)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, exp: u32) -> Coefficient {
        let mut acc = Coefficient::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative by the quotient rule.
    pub fn derivative(&self, sym: Symbol) -> Coefficient {
        let mut out = Coefficient {
            num: self.num.derivative(sym),
            den: self.den.clone(),
        }
        .normalized();
        for (base, exp) in &self.den {
            let dg = base.derivative(sym);
            if dg.is_zero() {
                continue;
            }
            let mut den = self.den.clone();
            *den.get_mut(base).unwrap() += 1;
            let term = Coefficient {
                num: &(&self.num * &dg) * &Polynomial::from_int(*exp as i64),
                den,
            }
            .normalized();
            out = &out - &term;
        }
        out
    }

    /// Simultaneous substitution of symbols; fails if a denominator factor
    /// becomes zero.
    pub fn substitute(&self, sub: &Substitution) -> Result<Coefficient, ExteriorError> {
        if sub.is_empty() || !sub.keys().any(|s| self.contains(*s)) {
            return Ok(self.clone());
        }
        let mut result = substitute_poly(&self.num, sub);
        for (base, exp) in &self.den {
            let b = substitute_poly(base, sub);
            if b.is_zero() {
                return Err(ExteriorError::ZeroDenominator);
            }
            let inv = b.inv().ok_or(ExteriorError::ZeroDenominator)?;
            result = &result * &inv.pow(*exp);
        }
        Ok(result)
    }

    /// Evaluate at a point; every symbol present must be assigned.
    pub fn evaluate(&self, values: &BTreeMap<Symbol, Scalar>) -> Result<Scalar, ExteriorError> {
        let lookup = |s: Symbol| values.get(&s).cloned();
        let missing = || {
            Symbol::ALL
                .into_iter()
                .find(|s| self.contains(*s) && !values.contains_key(s))
                .map(ExteriorError::UnassignedSymbol)
                .unwrap_or(ExteriorError::ZeroDenominator)
        };
        let num = self.num.evaluate(&lookup).ok_or_else(missing)?;
        let mut den = Scalar::one();
        for (base, exp) in &self.den {
            let b = base.evaluate(&lookup).ok_or_else(missing)?;
            den = &den * &b.pow(*exp);
        }
        let inv = den.inv().ok_or(ExteriorError::ZeroDenominator)?;
        Ok(&num * &inv)
    }
}

fn expand(den: &BTreeMap<Polynomial, u32>) -> Polynomial {
    den.iter()
        .fold(Polynomial::one(), |acc, (p, e)| &acc * &p.pow(*e))
}

fn substitute_poly(p: &Polynomial, sub: &Substitution) -> Coefficient {
    let mut acc = Coefficient::zero();
    for (m, c) in p.terms() {
        let mut t = Coefficient::from_scalar(c.clone());
        for sym in Symbol::ALL {
            let e = m.degree(sym) as u32;
            if e == 0 {
                continue;
            }
            let base = sub
                .get(&sym)
                .cloned()
                .unwrap_or_else(|| Coefficient::var(sym));
            t = &t * &base.pow(e);
        }
        acc = &acc + &t;
    }
    acc
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Coefficient::from_poly(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Coefficient {
    fn one() -> Self {
        Coefficient::from_poly(Polynomial::one())
    }
}

impl From<Polynomial> for Coefficient {
    fn from(p: Polynomial) -> Self {
        Coefficient::from_poly(p)
    }
}

impl From<Scalar> for Coefficient {
    fn from(c: Scalar) -> Self {
        Coefficient::from_scalar(c)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl PartialEq for Coefficient {
    fn eq(&self, other: &Coefficient) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        (&self.num * &expand(&other.den)) == (&other.num * &expand(&self.den))
    }
}

impl Eq for Coefficient {}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        if self.den == rhs.den {
            return Coefficient {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .normalized();
        }
        let mut lcm = self.den.clone();
        for (b, e) in &rhs.den {
            let slot = lcm.entry(b.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        let lift = |c: &Coefficient| {
            let mut factor = Polynomial::one();
            for (b, e) in &lcm {
                let have = c.den.get(b).copied().unwrap_or(0);
                factor = &factor * &b.pow(e - have);
            }
            &c.num * &factor
        };
        Coefficient {
            num: &lift(self) + &lift(rhs),
            den: lcm.clone(),
        }
        .normalized()
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Coefficient::zero();
        }
        let mut den = self.den.clone();
        for (b, e) in &rhs.den {
            *den.entry(b.clone()).or_insert(0) += e;
        }
        Coefficient {
            num: &self.num * &rhs.num,
            den,
        }
        .normalized()
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        f.write_str("/")?;
        let single = self.den.len() == 1;
        if !single {
            f.write_str("(")?;
        }
        for (idx, (base, exp)) in self.den.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            let wrap = base.num_terms() > 1 || *exp > 1;
            if wrap {
                write!(f, "({})", base)?;
            } else {
                write!(f, "{}", base)?;
            }
            if *exp > 1 {
                write!(f, "^{}", exp)?;
            }
        }
        if !single {
            f.write_str(")")?;
        }
        Ok(())
    }
}

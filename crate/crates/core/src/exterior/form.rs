//! Differential forms on the coordinate coframe with rational-function
//! coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, BitXor, Neg, Sub};

use num::{One, Zero};

use super::coefficient::{Coefficient, Substitution};
use super::poly::Symbol;
use super::ExteriorError;

/// Dimension of the coordinate model `D² × T² × T²`.
pub const DIM: usize = 6;

/// Coordinate 1-forms in their fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    Y,
    Z,
    W,
    S1,
    S2,
}

impl Gen {
    pub const ALL: [Gen; DIM] = [Gen::X, Gen::Y, Gen::Z, Gen::W, Gen::S1, Gen::S2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        GEN_NAMES[self.index()]
    }
}

const GEN_NAMES: [&str; DIM] = ["dx", "dy", "dz", "dw", "ds1", "ds2"];

/// Coefficient symbols that are coordinates, paired with their 1-form.
const COORDINATE_SYMBOLS: [(Symbol, usize); 2] = [(Symbol::X, 0), (Symbol::Y, 1)];

/// Which part of the disk a computation lives on; selects the value of `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Region {
    /// `√(x²+y²) ≤ ε/3`, where `f = 0`.
    Inner,
    /// The interpolation annulus, where `f` stays abstract.
    Middle,
    /// `√(x²+y²) ≥ 2ε/3`, where `f = 1/(x²+y²)`.
    Outer,
}

impl Region {
    pub const ALL: [Region; 3] = [Region::Inner, Region::Middle, Region::Outer];

    pub fn substitution(self) -> Substitution {
        let mut sub = Substitution::new();
        match self {
            Region::Inner => {
                sub.insert(Symbol::F, Coefficient::zero());
            }
            Region::Middle => {}
            Region::Outer => {
                sub.insert(Symbol::F, radial_inverse());
            }
        }
        sub
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::Inner => "inner",
            Region::Middle => "middle",
            Region::Outer => "outer",
        };
        f.write_str(s)
    }
}

/// `1/(x²+y²)`.
pub fn radial_inverse() -> Coefficient {
    let x = Coefficient::var(Symbol::X);
    let y = Coefficient::var(Symbol::Y);
    (&(&x * &x) + &(&y * &y)).inv().expect("x^2 + y^2 is nonzero")
}

/// A basis element `e_{i1} ∧ … ∧ e_{ik}` with `i1 < … < ik`, stored as a bit set.
/// Ordered by degree, then lexicographically on the index list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Blade(u32);

impl Blade {
    pub fn empty() -> Self {
        Blade(0)
    }

    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if bits & (1 << i) != 0 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(Blade(bits))
    }

    pub fn from_gens(gens: &[Gen]) -> Option<Self> {
        let idx: Vec<usize> = gens.iter().map(|g| g.index()).collect();
        Blade::from_indices(&idx)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    /// Sign of `self ∧ other` relative to the sorted blade, or `None` when they
    /// share a generator.
    fn wedge_sign(self, other: Blade) -> Option<i64> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        for j in other.indices() {
            swaps += (self.0 >> (j + 1)).count_ones();
        }
        Some(if swaps.is_multiple_of(2) { 1 } else { -1 })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Blade) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Blade) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<Blade, Coefficient>,
}

impl Form {
    pub fn zero(dim: usize) -> Self {
        Form {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Degree-0 form.
    pub fn function(dim: usize, c: Coefficient) -> Self {
        Form::monomial(dim, Blade::empty(), c)
    }

    pub fn monomial(dim: usize, blade: Blade, c: Coefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(blade, c);
        }
        Form { dim, terms }
    }

    /// A coordinate 1-form of the six-dimensional model.
    pub fn d(g: Gen) -> Self {
        Form::monomial(DIM, Blade(1 << g.index()), Coefficient::one())
    }

    /// The 1-form `e_i` in dimension `dim`.
    pub fn generator(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        Form::monomial(dim, Blade(1 << i), Coefficient::one())
    }

    /// `Σ cᵢ dgᵢ` in the six-dimensional model.
    pub fn one_form(parts: &[(Gen, Coefficient)]) -> Self {
        let mut out = Form::zero(DIM);
        for (g, c) in parts {
            out = &out + &Form::d(*g).scale(c);
        }
        out
    }

    /// Volume form `dx∧dz∧dw∧dy∧ds1∧ds2`, which equals `dx∧dy∧dz∧dw∧ds1∧ds2`.
    pub fn volume() -> Self {
        Form::monomial(DIM, Blade((1 << DIM) - 1), Coefficient::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: Blade) -> Coefficient {
        self.terms.get(&blade).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Coefficient on `dg_{i1} ∧ … ∧ dg_{ik}` in the order given (sign included).
    pub fn coefficient_on(&self, gens: &[Gen]) -> Coefficient {
        let idx: Vec<usize> = gens.iter().map(|g| g.index()).collect();
        let Some(blade) = Blade::from_indices(&idx) else {
            return Coefficient::zero();
        };
        let mut sign = 1i64;
        for i in 0..idx.len() {
            for j in (i + 1)..idx.len() {
                if idx[i] > idx[j] {
                    sign = -sign;
                }
            }
        }
        let c = self.coefficient(blade);
        if sign < 0 {
            -c
        } else {
            c
        }
    }

    /// Degree if every term has the same degree; zero form reports `None`.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|b| b.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|b| b.degree() == degree)
    }

    pub fn scale(&self, c: &Coefficient) -> Form {
        let mut out = Form::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (b, a) in &self.terms {
            out.add_term(*b, a * c);
        }
        out
    }

    fn add_term(&mut self, blade: Blade, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&blade) {
            Some(prev) => &prev + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(blade, sum);
        }
    }

    fn check_dim(&self, other: &Form) -> Result<(), ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::GeneratorMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.check_dim(other)?;
        let mut out = Form::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(sign) = a.wedge_sign(*b) {
                    let c = ca * cb;
                    let c = if sign < 0 { -c } else { c };
                    out.add_term(Blade(a.0 | b.0), c);
                }
            }
        }
        Ok(out)
    }

    /// `self ∧ … ∧ self` (`n` factors); `n = 0` gives the constant 1.
    pub fn wedge_power(&self, n: u32) -> Form {
        let mut acc = Form::function(self.dim, Coefficient::one());
        for _ in 0..n {
            acc = &acc ^ self;
        }
        acc
    }

    pub fn substitute(&self, sub: &Substitution) -> Result<Form, ExteriorError> {
        let mut out = Form::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, c.substitute(sub)?);
        }
        Ok(out)
    }

    pub fn in_region(&self, region: Region) -> Result<Form, ExteriorError> {
        self.substitute(&region.substitution())
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.terms.values().any(|c| c.contains(sym))
    }

    /// Exterior derivative. Coefficients depend on the base coordinates only;
    /// `f` is resolved by the region, and stays underivable in the middle.
    pub fn exterior_derivative(&self, region: Region) -> Result<Form, ExteriorError> {
        if region == Region::Middle && self.contains(Symbol::F) {
            return Err(ExteriorError::AbstractFunction);
        }
        let resolved = self.in_region(region)?;
        let mut out = Form::zero(self.dim);
        for (blade, c) in &resolved.terms {
            for (sym, gen) in COORDINATE_SYMBOLS {
                if gen >= self.dim {
                    continue;
                }
                let dc = c.derivative(sym);
                if dc.is_zero() {
                    continue;
                }
                let g = Blade(1 << gen);
                if let Some(sign) = g.wedge_sign(*blade) {
                    let dc = if sign < 0 { -dc } else { dc };
                    out.add_term(Blade(g.0 | blade.0), dc);
                }
            }
        }
        Ok(out)
    }

    fn generator_name(&self, i: usize) -> String {
        if self.dim == DIM {
            GEN_NAMES[i].to_string()
        } else {
            format!("e{}", i + 1)
        }
    }
}

impl<'a> Add<&'a Form> for &'a Form {
    type Output = Form;
    /// Panics on mismatched dimensions; use [`Form::try_add`] otherwise.
    fn add(self, rhs: &Form) -> Form {
        self.try_add(rhs).expect("forms over different generator lists")
    }
}

impl Add for Form {
    type Output = Form;
    fn add(self, rhs: Form) -> Form {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Form> for &'a Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self + &(-rhs)
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(self, rhs: Form) -> Form {
        &self - &rhs
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

/// `a ^ b` is the wedge product. Panics on mismatched dimensions.
impl<'a> BitXor<&'a Form> for &'a Form {
    type Output = Form;
    fn bitxor(self, rhs: &Form) -> Form {
        self.wedge(rhs).expect("forms over different generator lists")
    }
}

impl BitXor for Form {
    type Output = Form;
    fn bitxor(self, rhs: Form) -> Form {
        &self ^ &rhs
    }
}

/// Canonical text: `coefficient * dg1^…^dgk` terms joined by `+`, blades in
/// ascending order.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (blade, c)) in self.terms.iter().enumerate() {
            let mut text = c.to_string();
            let wrap = c.numerator().num_terms() > 1 || !c.is_polynomial();
            let mut negative = false;
            if wrap {
                text = format!("({})", text);
            } else if let Some(rest) = text.strip_prefix('-') {
                negative = true;
                text = rest.to_string();
            }
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            f.write_str(&text)?;
            if blade.degree() > 0 {
                let names: Vec<String> =
                    blade.indices().into_iter().map(|i| self.generator_name(i)).collect();
                write!(f, " * {}", names.join("^"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_generator_vanishes() {
        assert!((&Form::d(Gen::X) ^ &Form::d(Gen::X)).is_zero());
    }

    #[test]
    fn even_factors_commute() {
        let a = &Form::d(Gen::X) ^ &Form::d(Gen::Z);
        let b = &Form::d(Gen::W) ^ &Form::d(Gen::Y);
        let ab = &a ^ &b;
        assert_eq!(ab, &b ^ &a);
        assert_eq!(
            ab.coefficient_on(&[Gen::X, Gen::Z, Gen::W, Gen::Y]),
            Coefficient::one()
        );
        // dx dz dw dy is an even permutation of dx dy dz dw.
        assert_eq!(
            ab.coefficient_on(&[Gen::X, Gen::Y, Gen::Z, Gen::W]),
            Coefficient::one()
        );
    }

    #[test]
    fn mismatched_dimensions() {
        let a = Form::generator(4, 0);
        let b = Form::d(Gen::X);
        assert_eq!(
            a.wedge(&b).unwrap_err(),
            ExteriorError::GeneratorMismatch { left: 4, right: 6 }
        );
    }

    #[test]
    fn derivative_of_x_dy() {
        let form = Form::d(Gen::Y).scale(&Coefficient::var(Symbol::X));
        let d = form.exterior_derivative(Region::Inner).unwrap();
        assert_eq!(d, &Form::d(Gen::X) ^ &Form::d(Gen::Y));
        let closed = &Form::d(Gen::X) ^ &Form::d(Gen::Y);
        assert!(closed.exterior_derivative(Region::Outer).unwrap().is_zero());
    }

    #[test]
    fn middle_region_refuses_abstract_f() {
        let form = Form::d(Gen::Y).scale(&Coefficient::var(Symbol::F));
        assert_eq!(
            form.exterior_derivative(Region::Middle).unwrap_err(),
            ExteriorError::AbstractFunction
        );
    }

    #[test]
    fn display() {
        let k = Coefficient::var(Symbol::K);
        let y = Coefficient::var(Symbol::Y);
        let form = &(&Form::d(Gen::X) ^ &Form::d(Gen::Z))
            - &(&Form::d(Gen::X) ^ &Form::d(Gen::Y)).scale(&(&k * &y));
        assert_eq!(form.to_string(), "-y*k * dx^dy + 1 * dx^dz");
    }
}

//! Almost complex structures acting on 1-forms, and their compatibility with
//! a 2-form.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use super::coefficient::Coefficient;
use super::form::{Blade, Form, Region};
use super::matrix::{leading_principal_minors, CoefficientMatrix};
use super::poly::Symbol;
use super::scalar::Scalar;
use super::ExteriorError;

/// A linear operator on 1-forms. Column `j` of the matrix holds the
/// coefficients of `J(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplexOperator {
    matrix: CoefficientMatrix,
}

impl AlmostComplexOperator {
    pub fn from_matrix(matrix: &CoefficientMatrix) -> Self {
        AlmostComplexOperator {
            matrix: matrix.clone(),
        }
    }

    /// Build from the images `J(e_0), …, J(e_{n-1})`.
    pub fn from_images(images: &[Form]) -> Result<Self, ExteriorError> {
        let n = images.len();
        for img in images {
            if img.dim() != n {
                return Err(ExteriorError::GeneratorMismatch {
                    left: n,
                    right: img.dim(),
                });
            }
            if !img.is_homogeneous_of(1) {
                return Err(ExteriorError::NotDegreeOne);
            }
        }
        let matrix = CoefficientMatrix::from_fn(n, |i, j| {
            images[j].coefficient(Blade::from_indices(&[i]).unwrap())
        });
        Ok(AlmostComplexOperator { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &CoefficientMatrix {
        &self.matrix
    }

    pub fn image(&self, j: usize) -> Form {
        let n = self.dim();
        let mut out = Form::zero(n);
        for i in 0..n {
            out = &out + &Form::generator(n, i).scale(self.matrix.get(i, j));
        }
        out
    }

    /// Apply to a 1-form.
    pub fn apply(&self, form: &Form) -> Result<Form, ExteriorError> {
        if form.dim() != self.dim() {
            return Err(ExteriorError::GeneratorMismatch {
                left: self.dim(),
                right: form.dim(),
            });
        }
        if !form.is_homogeneous_of(1) {
            return Err(ExteriorError::NotDegreeOne);
        }
        let mut out = Form::zero(self.dim());
        for (blade, c) in form.terms() {
            let j = blade.indices()[0];
            out = &out + &self.image(j).scale(c);
        }
        Ok(out)
    }

    /// `J·J`.
    pub fn square(&self) -> CoefficientMatrix {
        &self.matrix * &self.matrix
    }

    pub fn is_almost_complex(&self) -> bool {
        self.square() == -&CoefficientMatrix::identity(self.dim())
    }

    /// The induced operator on vector fields, `(Jα)(v) = α(J v)`.
    pub fn on_vectors(&self) -> CoefficientMatrix {
        self.matrix.transpose()
    }

    pub fn in_region(&self, region: Region) -> Result<Self, ExteriorError> {
        Ok(AlmostComplexOperator {
            matrix: self.matrix.in_region(region)?,
        })
    }

    /// Canonical text: one `J(dg) = …` line per generator.
    pub fn describe(&self) -> String {
        let n = self.dim();
        let names: Vec<String> = (0..n).map(|i| generator_label(n, i)).collect();
        let mut out = String::new();
        for (j, name) in names.iter().enumerate() {
            out.push_str(&format!("J({}) = {}\n", name, self.image(j)));
        }
        out
    }
}

fn generator_label(n: usize, i: usize) -> String {
    Form::generator(n, i).to_string().trim_start_matches("1 * ").to_string()
}

impl fmt::Display for AlmostComplexOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Antisymmetric matrix `Ω[a][b] = ω(∂_a, ∂_b)` of a 2-form.
pub fn form_matrix(omega: &Form) -> Result<CoefficientMatrix, ExteriorError> {
    if !omega.is_homogeneous_of(2) {
        return Err(ExteriorError::DegreeMismatch {
            expected: 2,
            found: omega.degree().unwrap_or(0),
        });
    }
    let mut m = CoefficientMatrix::zero(omega.dim());
    for (blade, c) in omega.terms() {
        let idx = blade.indices();
        m.set(idx[0], idx[1], c.clone());
        m.set(idx[1], idx[0], -c);
    }
    Ok(m)
}

/// Exact rational assignment of coefficient symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct SamplePoint {
    values: BTreeMap<Symbol, BigRational>,
}

impl SamplePoint {
    pub fn new() -> Self {
        SamplePoint::default()
    }

    pub fn with(mut self, sym: Symbol, value: BigRational) -> Self {
        self.values.insert(sym, value);
        self
    }

    pub fn get(&self, sym: Symbol) -> Option<&BigRational> {
        self.values.get(&sym)
    }

    pub fn scalars(&self) -> BTreeMap<Symbol, Scalar> {
        self.values
            .iter()
            .map(|(s, v)| (*s, Scalar::real(v.clone())))
            .collect()
    }

    fn radius_squared(&self) -> Option<BigRational> {
        let x = self.get(Symbol::X)?;
        let y = self.get(Symbol::Y)?;
        Some(x * x + y * y)
    }
}

impl fmt::Display for SamplePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(s, v)| format!("{}={}", s, v))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleCheck {
    pub point: SamplePoint,
    pub minors: Vec<Scalar>,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub region: Region,
    /// `Jᵀ Ω J − Ω` with `J` acting on vectors.
    pub invariance_residual: CoefficientMatrix,
    /// `G − Gᵀ` for `G = Ω J`.
    pub symmetry_residual: CoefficientMatrix,
    pub samples: Vec<SampleCheck>,
}

impl CompatibilityReport {
    pub fn invariant(&self) -> bool {
        self.invariance_residual.is_zero()
    }

    pub fn symmetric(&self) -> bool {
        self.symmetry_residual.is_zero()
    }

    pub fn positive(&self) -> bool {
        self.samples.iter().all(|s| s.positive)
    }

    pub fn passed(&self) -> bool {
        self.invariant() && self.symmetric() && self.positive()
    }
}

/// Check that `omega(J·, J·) = omega` and that `g(u, v) = omega(u, J v)` is a
/// symmetric form, positive definite at each sample.
///
/// The symbolic parts run on the region-resolved matrices. In the middle
/// region each sample must assign `f` a value in `[0, 1/(x²+y²)]`.
pub fn compatibility_check(
    op: &AlmostComplexOperator,
    omega: &Form,
    region: Region,
    samples: &[SamplePoint],
) -> Result<CompatibilityReport, ExteriorError> {
    let omega_m = form_matrix(omega)?.in_region(region)?;
    let j = op.in_region(region)?.on_vectors();
    let invariance_residual = &(&j.transpose() * &(&omega_m * &j)) - &omega_m;
    let g = &omega_m * &j;
    let symmetry_residual = &g - &g.transpose();

    let mut checks = Vec::with_capacity(samples.len());
    for point in samples {
        if region == Region::Middle {
            let rho = point.radius_squared().ok_or(ExteriorError::UnassignedSymbol(Symbol::X))?;
            if rho.is_zero() {
                return Err(ExteriorError::ZeroDenominator);
            }
            let f = point.get(Symbol::F).ok_or(ExteriorError::UnassignedSymbol(Symbol::F))?;
            if f.is_negative() || f * &rho > BigRational::one() {
                return Err(ExteriorError::InvalidSample(point.to_string()));
            }
        }
        let values = g.evaluate(&point.scalars())?;
        let minors = leading_principal_minors(&values);
        let positive = minors
            .iter()
            .all(|m| m.is_real() && m.re().is_positive());
        checks.push(SampleCheck {
            point: point.clone(),
            minors,
            positive,
        });
    }
    Ok(CompatibilityReport {
        region,
        invariance_residual,
        symmetry_residual,
        samples: checks,
    })
}

/// `α − i·J(α)`, the (1,0)-part of a real 1-form up to a factor.
pub fn holomorphic_part(op: &AlmostComplexOperator, alpha: &Form) -> Result<Form, ExteriorError> {
    Ok(alpha - &op.apply(alpha)?.scale(&Coefficient::i()))
}

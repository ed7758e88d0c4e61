use num::Zero;

use super::coefficient::Substitution;
use super::form::{Blade, Form};
use super::matrix::CoefficientMatrix;
use super::operator::AlmostComplexOperator;
use super::ExteriorError;

/// Pullback data of a map that is linear on the coframe: an image 1-form for
/// each generator and an optional substitution applied to coefficients first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoframeMap {
    images: Vec<Form>,
    substitution: Substitution,
    matrix: CoefficientMatrix,
}

impl CoframeMap {
    pub fn new(images: Vec<Form>, substitution: Substitution) -> Result<Self, ExteriorError> {
        let dim = images.len();
        for img in &images {
            if img.dim() != dim {
                return Err(ExteriorError::GeneratorMismatch {
                    left: dim,
                    right: img.dim(),
                });
            }
            if !img.is_homogeneous_of(1) {
                return Err(ExteriorError::NotDegreeOne);
            }
        }
        let matrix = CoefficientMatrix::from_fn(dim, |i, j| {
            images[j].coefficient(Blade::from_indices(&[i]).unwrap())
        });
        if matrix.determinant().is_zero() {
            return Err(ExteriorError::Singular);
        }
        Ok(CoframeMap {
            images,
            substitution,
            matrix,
        })
    }

    pub fn identity(dim: usize) -> Self {
        CoframeMap::new(
            (0..dim).map(|i| Form::generator(dim, i)).collect(),
            Substitution::new(),
        )
        .expect("identity is invertible")
    }

    /// Maps each generator to the matrix column; column `j` holds the image of
    /// generator `j`.
    pub fn from_matrix(matrix: &CoefficientMatrix) -> Result<Self, ExteriorError> {
        let dim = matrix.size();
        let images = (0..dim)
            .map(|j| {
                let mut img = Form::zero(dim);
                for i in 0..dim {
                    img = &img + &Form::generator(dim, i).scale(matrix.get(i, j));
                }
                img
            })
            .collect();
        CoframeMap::new(images, Substitution::new())
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &Form {
        &self.images[i]
    }

    pub fn substitution(&self) -> &Substitution {
        &self.substitution
    }

    /// Column `j` holds the coefficients of the image of generator `j`.
    pub fn matrix(&self) -> &CoefficientMatrix {
        &self.matrix
    }

    pub fn pullback(&self, form: &Form) -> Result<Form, ExteriorError> {
        if form.dim() != self.dim() {
            return Err(ExteriorError::GeneratorMismatch {
                left: self.dim(),
                right: form.dim(),
            });
        }
        let mut out = Form::zero(self.dim());
        for (blade, c) in form.terms() {
            let mut term = Form::function(self.dim(), c.substitute(&self.substitution)?);
            for i in blade.indices() {
                term = term.wedge(&self.images[i])?;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// `outer ∘ inner` as a map of spaces, so that
    /// `compose(outer, inner).pullback(η) == inner.pullback(outer.pullback(η))`.
    pub fn compose(outer: &CoframeMap, inner: &CoframeMap) -> Result<CoframeMap, ExteriorError> {
        let images = outer
            .images
            .iter()
            .map(|img| inner.pullback(img))
            .collect::<Result<Vec<_>, _>>()?;
        let mut substitution = Substitution::new();
        for (sym, value) in &outer.substitution {
            substitution.insert(*sym, value.substitute(&inner.substitution)?);
        }
        for (sym, value) in &inner.substitution {
            substitution.entry(*sym).or_insert_with(|| value.clone());
        }
        CoframeMap::new(images, substitution)
    }

    /// Inverse of a substitution-free map.
    pub fn inverse(&self) -> Result<CoframeMap, ExteriorError> {
        if !self.substitution.is_empty() {
            return Err(ExteriorError::Singular);
        }
        let inv = self.matrix.inverse().ok_or(ExteriorError::Singular)?;
        CoframeMap::from_matrix(&inv)
    }

    /// `φ* ∘ J ∘ (φ*)⁻¹` on 1-forms, after substituting into `J`'s entries.
    pub fn pullback_operator(
        &self,
        op: &AlmostComplexOperator,
    ) -> Result<AlmostComplexOperator, ExteriorError> {
        let j = op.matrix().substitute(&self.substitution)?;
        let inv = self.matrix.inverse().ok_or(ExteriorError::Singular)?;
        Ok(AlmostComplexOperator::from_matrix(
            &(&(&self.matrix * &j) * &inv),
        ))
    }
}

//! The local model `D²_ε × T² × T²` with coordinates `(x, y, z, w, σ₁, σ₂)`:
//! its symplectic form, the surgery twist, the almost complex structures and
//! the sections of the canonical bundle.

use std::fmt;

use num::One;
use serde::Serialize;

use crate::exterior::{
    AlmostComplexOperator, Coefficient, CoframeMap, ExteriorError, Form, Gen, Substitution,
    Symbol, DIM,
};
use crate::surgery::SL2Z;

/// The surgery coefficient `k`, either a concrete integer or the ring symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum SurgeryParam {
    #[default]
    Symbolic,
    Integer(i64),
}

impl SurgeryParam {
    pub fn coefficient(self) -> Coefficient {
        match self {
            SurgeryParam::Symbolic => Coefficient::var(Symbol::K),
            SurgeryParam::Integer(n) => Coefficient::from_int(n),
        }
    }

    /// Values of `k` used when sampling numerically.
    pub fn sample_values(self) -> Vec<i64> {
        match self {
            SurgeryParam::Symbolic => (-3..=3).collect(),
            SurgeryParam::Integer(n) => vec![n],
        }
    }
}

impl fmt::Display for SurgeryParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryParam::Symbolic => f.write_str("symbolic"),
            SurgeryParam::Integer(n) => write!(f, "{}", n),
        }
    }
}

impl std::str::FromStr for SurgeryParam {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "symbolic" {
            return Ok(SurgeryParam::Symbolic);
        }
        s.parse::<i64>()
            .map(SurgeryParam::Integer)
            .map_err(|_| format!("expected an integer or `symbolic`, got `{}`", s))
    }
}

impl Serialize for SurgeryParam {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            SurgeryParam::Symbolic => ser.serialize_str("symbolic"),
            SurgeryParam::Integer(n) => ser.serialize_i64(*n),
        }
    }
}

fn d(g: Gen) -> Form {
    Form::d(g)
}

fn var(s: Symbol) -> Coefficient {
    Coefficient::var(s)
}

/// `ω = dx∧dz + dw∧dy + dσ₁∧dσ₂`.
pub fn omega() -> Form {
    &(&(&d(Gen::X) ^ &d(Gen::Z)) + &(&d(Gen::W) ^ &d(Gen::Y))) + &(&d(Gen::S1) ^ &d(Gen::S2))
}

/// `α = −k·y·f dx∧dy`.
pub fn alpha(k: SurgeryParam) -> Form {
    let c = -&(&(&k.coefficient() * &var(Symbol::Y)) * &var(Symbol::F));
    (&d(Gen::X) ^ &d(Gen::Y)).scale(&c)
}

/// `ω̃ = ω + α`; the same 2-form is the `ω_k` paired with `J_k`.
pub fn omega_tilde(k: SurgeryParam) -> Form {
    &omega() + &alpha(k)
}

/// `dθ = (x dy − y dx)/(x² + y²)`.
pub fn angular_form() -> Form {
    let rho_inv = crate::exterior::radial_inverse();
    let x = &var(Symbol::X) * &rho_inv;
    let y = &var(Symbol::Y) * &rho_inv;
    Form::one_form(&[(Gen::Y, x), (Gen::X, -&y)])
}

/// `r dr = x dx + y dy`.
pub fn radial_form() -> Form {
    Form::one_form(&[(Gen::X, var(Symbol::X)), (Gen::Y, var(Symbol::Y))])
}

/// The gluing map `(re^{iθ}, z, w, σ) ↦ (re^{iθ}, z, w + kθ, σ)` as a coframe
/// map: every generator is fixed except `dw ↦ dw + k dθ`.
pub fn twist_map(k: SurgeryParam) -> CoframeMap {
    let mut images: Vec<Form> = Gen::ALL.iter().map(|g| d(*g)).collect();
    images[Gen::W.index()] = &d(Gen::W) + &angular_form().scale(&k.coefficient());
    CoframeMap::new(images, Substitution::new()).expect("shear is invertible")
}

/// `τ*`: `dz ↦ p dz + r dw`, `dw ↦ q dz + s dw`, all else fixed.
pub fn sl2_map(tau: &SL2Z) -> CoframeMap {
    let (p, q, r, s) = tau.entries();
    let mut images: Vec<Form> = Gen::ALL.iter().map(|g| d(*g)).collect();
    images[Gen::Z.index()] = Form::one_form(&[(Gen::Z, p.into()), (Gen::W, r.into())]);
    images[Gen::W.index()] = Form::one_form(&[(Gen::Z, q.into()), (Gen::W, s.into())]);
    CoframeMap::new(images, Substitution::new()).expect("determinant one")
}

/// The almost complex structure `J_k` on 1-forms, with `a = kyf`, `b = kxf`:
///
/// ```text
/// J(dx)  = −dz                      J(dz)  = dx
/// J(dy)  = dw − a dx + b dy
/// J(dw)  = −(1 + b²) dy + ab dx − a dz − b dw
/// J(dσ₁) = −dσ₂                     J(dσ₂) = dσ₁
/// ```
pub fn j_operator(k: SurgeryParam) -> AlmostComplexOperator {
    j_operator_from_table(k, true)
}

/// `J_k` with the `k²x²f²` term optionally left out of `J(dw)`.
pub(crate) fn j_operator_from_table(k: SurgeryParam, include_b_squared: bool) -> AlmostComplexOperator {
    let kc = k.coefficient();
    let f = var(Symbol::F);
    let a = &(&kc * &var(Symbol::Y)) * &f;
    let b = &(&kc * &var(Symbol::X)) * &f;
    let one = Coefficient::one();
    let dy_coeff = if include_b_squared {
        -&(&one + &(&b * &b))
    } else {
        -&one
    };
    let mut images = vec![Form::zero(DIM); DIM];
    images[Gen::X.index()] = -&d(Gen::Z);
    images[Gen::Z.index()] = d(Gen::X);
    images[Gen::Y.index()] = Form::one_form(&[(Gen::W, one.clone()), (Gen::X, -&a), (Gen::Y, b.clone())]);
    images[Gen::W.index()] = Form::one_form(&[
        (Gen::Y, dy_coeff),
        (Gen::X, &a * &b),
        (Gen::Z, -&a),
        (Gen::W, -&b),
    ]);
    images[Gen::S1.index()] = -&d(Gen::S2);
    images[Gen::S2.index()] = d(Gen::S1);
    AlmostComplexOperator::from_images(&images).expect("six 1-forms")
}

/// `s_0 = (dx + i dz)∧(dw + i dy)∧(dσ₁ + i dσ₂)`.
pub fn flat_section() -> Form {
    let i = Coefficient::i();
    let a = Form::one_form(&[(Gen::X, Coefficient::one()), (Gen::Z, i.clone())]);
    let b = Form::one_form(&[(Gen::W, Coefficient::one()), (Gen::Y, i.clone())]);
    let c = Form::one_form(&[(Gen::S1, Coefficient::one()), (Gen::S2, i)]);
    &(&a ^ &b) ^ &c
}

/// `s_k = s_0 + k f (x dx∧dy + i(y dx∧dz − x dy∧dz))∧(dσ₁ + i dσ₂)`.
pub fn canonical_section(k: SurgeryParam) -> Form {
    let i = Coefficient::i();
    let x = var(Symbol::X);
    let y = var(Symbol::Y);
    let two_form = &(&(&d(Gen::X) ^ &d(Gen::Y)).scale(&x)
        + &(&d(Gen::X) ^ &d(Gen::Z)).scale(&(&i * &y)))
        - &(&d(Gen::Y) ^ &d(Gen::Z)).scale(&(&i * &x));
    let kf = &k.coefficient() * &var(Symbol::F);
    let c = Form::one_form(&[(Gen::S1, Coefficient::one()), (Gen::S2, i)]);
    &flat_section() + &(&two_form ^ &c).scale(&kf)
}

/// `(α₁ − iJα₁)∧(α₂ − iJα₂)∧(α₃ − iJα₃)`.
pub fn section_from_operator(
    op: &AlmostComplexOperator,
    factors: [&Form; 3],
) -> Result<Form, ExteriorError> {
    let mut acc = Form::function(DIM, Coefficient::one());
    for alpha in factors {
        acc = acc.wedge(&crate::exterior::holomorphic_part(op, alpha)?)?;
    }
    Ok(acc)
}

/// `1 + i·k·x·f`, the ratio between the operator-built section and `s_k`.
pub fn section_ratio(k: SurgeryParam) -> Coefficient {
    let ikxf = &(&(&Coefficient::i() * &k.coefficient()) * &var(Symbol::X)) * &var(Symbol::F);
    &Coefficient::one() + &ikxf
}

/// `ω³ = 6·vol`, computed rather than asserted.
pub fn omega_cubed() -> Form {
    omega().wedge_power(3)
}

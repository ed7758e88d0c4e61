//! The almost complex structure `J_k`, its compatibility with `ω_k`, and the
//! nowhere-zero section `s_k` of the canonical bundle, optionally twisted by
//! an `SL(2, Z)` change of the `(z, w)` coordinates.

use num::{BigRational, BigInt, One, Zero};

use super::model::{self, SurgeryParam};
use super::report::{Claim, IdentityReport, Residual};
use crate::exterior::{
    compatibility_check, holomorphic_part, AlmostComplexOperator, Coefficient, CoefficientMatrix,
    CoframeMap, ExteriorError, Form, Gen, Region, SamplePoint, Symbol, DIM,
};
use crate::surgery::SL2Z;

/// The untwisted objects under test; corrupted versions drive the negative
/// controls.
#[derive(Clone, Debug)]
pub struct CanonicalInputs {
    pub j_k: AlmostComplexOperator,
    pub omega_k: Form,
    pub s_k: Form,
}

impl CanonicalInputs {
    pub fn standard(k: SurgeryParam) -> Self {
        CanonicalInputs {
            j_k: model::j_operator(k),
            omega_k: model::omega_tilde(k),
            s_k: model::canonical_section(k),
        }
    }

    /// `J_k` with the `k²x²f²` term missing from `J(dw)`.
    pub fn with_dropped_quadratic_term(k: SurgeryParam) -> Self {
        CanonicalInputs {
            j_k: model::j_operator_from_table(k, false),
            ..CanonicalInputs::standard(k)
        }
    }
}

/// Points on the circle of radius 3/4 used for the positivity samples.
pub fn circle_points() -> Vec<(BigRational, BigRational)> {
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let mut pts = Vec::new();
    for s in [1, -1] {
        pts.push((r(3 * s, 4), r(0, 1)));
        pts.push((r(0, 1), r(3 * s, 4)));
    }
    for sx in [1, -1] {
        for sy in [1, -1] {
            pts.push((r(9 * sx, 20), r(12 * sy, 20)));
        }
    }
    pts
}

/// 8 circle points × the `k` values of `k` × `f ∈ {0, 1/(2ρ), 1/ρ}`.
pub fn positivity_samples(k: SurgeryParam) -> Vec<SamplePoint> {
    let mut out = Vec::new();
    for (x, y) in circle_points() {
        let rho = &x * &x + &y * &y;
        let f_max = BigRational::one() / &rho;
        let fs = [
            BigRational::zero(),
            &f_max / BigRational::from_integer(BigInt::from(2)),
            f_max.clone(),
        ];
        for kv in k.sample_values() {
            for f in &fs {
                out.push(
                    SamplePoint::new()
                        .with(Symbol::X, x.clone())
                        .with(Symbol::Y, y.clone())
                        .with(Symbol::K, BigRational::from_integer(BigInt::from(kv)))
                        .with(Symbol::F, f.clone()),
                );
            }
        }
    }
    out
}

pub fn verify_trivial_canonical_class(k: SurgeryParam, tau: &SL2Z) -> IdentityReport {
    verify_trivial_canonical_class_with(k, tau, &CanonicalInputs::standard(k))
}

pub fn verify_trivial_canonical_class_with(
    k: SurgeryParam,
    tau: &SL2Z,
    inputs: &CanonicalInputs,
) -> IdentityReport {
    let mut report = IdentityReport::new("trivial-canonical-class");
    report.parameter("k", k);
    report.parameter("tau", tau);

    let twist = model::sl2_map(tau);
    let twist_inv = twist.inverse().expect("determinant one");
    let middle = Some(Region::Middle);
    let outer = Some(Region::Outer);

    let flat = CanonicalInputs::standard(SurgeryParam::Integer(0));
    let twisted = (|| -> Result<_, ExteriorError> {
        let j = twist.pullback_operator(&inputs.j_k)?;
        let omega = twist.pullback(&inputs.omega_k)?;
        let s = twist.pullback(&inputs.s_k)?;
        let j0 = twist.pullback_operator(&flat.j_k)?;
        let omega0 = twist.pullback(&flat.omega_k)?;
        let s0 = twist.pullback(&flat.s_k)?;
        let gauge = CoframeMap::compose(
            &CoframeMap::compose(&twist_inv, &model::twist_map(k))?,
            &twist,
        )?;
        Ok((j, omega, s, j0, omega0, s0, gauge))
    })();
    let (j, omega, s, j0, omega0, s0, gauge) = match twisted {
        Ok(t) => t,
        Err(e) => {
            report.push(Claim::fails("twist", None, Residual::Text(e.to_string())));
            return report;
        }
    };
    report.object("J", j.describe());
    report.object("omega", &omega);
    report.object("s", &s);

    report.push(Claim::zero_matrix(
        "almost-complex",
        middle,
        Ok(&j.square() + &CoefficientMatrix::identity(DIM)),
    ));

    match compatibility_check(&j, &omega, Region::Middle, &positivity_samples(k)) {
        Ok(c) => {
            report.push(Claim::zero_matrix(
                "compatible-invariant",
                middle,
                Ok(c.invariance_residual.clone()),
            ));
            report.push(Claim::zero_matrix(
                "compatible-symmetric",
                middle,
                Ok(c.symmetry_residual.clone()),
            ));
            let bad: Vec<String> = c
                .samples
                .iter()
                .filter(|s| !s.positive)
                .map(|s| format!("{}: minors {:?}", s.point, s.minors.iter().map(|m| m.to_string()).collect::<Vec<_>>()))
                .collect();
            let check = if bad.is_empty() {
                if c.samples.is_empty() {
                    Some("no samples".to_string())
                } else {
                    None
                }
            } else {
                Some(bad.join("\n"))
            };
            report.push(Claim::from_check("compatible-positive", middle, Ok(check)));
        }
        Err(e) => report.push(Claim::fails("compatible", middle, Residual::Text(e.to_string()))),
    }

    report.push(Claim::from_check("section-type", middle, section_type(&j, &s)));
    let factors = [Gen::X, Gen::W, Gen::S1].map(|g| twist.pullback(&Form::d(g)));
    let built = (|| -> Result<Form, ExteriorError> {
        let [a, b, c] = factors.clone();
        let (a, b, c) = (a?, b?, c?);
        let product = model::section_from_operator(&j, [&a, &b, &c])?;
        Ok(&product - &s.scale(&model::section_ratio(k)))
    })();
    report.push(Claim::zero_form("section-from-operator", middle, built));
    let unit = twist_inv.pullback(&s).map(|u| {
        let c = u.coefficient_on(&[Gen::X, Gen::W, Gen::S1]);
        if c == Coefficient::one() {
            None
        } else {
            Some(format!("coefficient on dx^dw^ds1 is {}", c))
        }
    });
    report.push(Claim::from_check("section-unit-coefficient", middle, unit));

    report.push(Claim::zero_matrix(
        "gauge-operator",
        outer,
        (|| {
            let pulled = gauge.pullback_operator(&j0)?;
            Ok(pulled.matrix() - j.in_region(Region::Outer)?.matrix())
        })(),
    ));
    report.push(Claim::zero_form(
        "gauge-form",
        outer,
        (|| Ok(&gauge.pullback(&omega0)? - &omega.in_region(Region::Outer)?))(),
    ));
    report.push(Claim::zero_form(
        "gauge-section",
        outer,
        (|| Ok(&gauge.pullback(&s0)? - &s.in_region(Region::Outer)?))(),
    ));

    let base = model::omega();
    report.push(Claim::zero_form(
        "twist-preserves-omega",
        None,
        twist.pullback(&base).map(|t| &t - &base),
    ));
    let cube = model::omega_cubed();
    report.push(Claim::zero_form(
        "twist-preserves-volume",
        None,
        twist.pullback(&cube).map(|t| &t - &cube),
    ));
    report
}

/// `s ∧ (e − iJe) = 0` for every generator `e`, i.e. `s` has type (3,0).
fn section_type(j: &AlmostComplexOperator, s: &Form) -> Result<Option<String>, ExteriorError> {
    for g in Gen::ALL {
        let r = s.wedge(&holomorphic_part(j, &Form::d(g))?)?;
        if !r.is_zero() {
            return Ok(Some(format!("s ^ ({} - iJ{}) = {}", g.name(), g.name(), r)));
        }
    }
    Ok(None)
}

//! The closed 2-form `ω̃ = ω + α` on the surgery neighbourhood.

use num::Zero;

use super::model::{self, SurgeryParam};
use super::report::{Claim, IdentityReport};
use crate::exterior::{
    radial_inverse, Blade, Coefficient, CoframeMap, ExteriorError, Form, Gen, Region, Symbol, DIM,
};

/// The objects under test. [`ExtensionInputs::standard`] builds the correct
/// ones; tests swap in corrupted versions to see the check fail.
#[derive(Clone, Debug)]
pub struct ExtensionInputs {
    pub omega_tilde: Form,
    pub twist: CoframeMap,
}

impl ExtensionInputs {
    pub fn standard(k: SurgeryParam) -> Self {
        ExtensionInputs {
            omega_tilde: model::omega_tilde(k),
            twist: model::twist_map(k),
        }
    }

    /// `ω − α` in place of `ω + α`.
    pub fn with_flipped_alpha(k: SurgeryParam) -> Self {
        ExtensionInputs {
            omega_tilde: &model::omega() - &model::alpha(k),
            twist: model::twist_map(k),
        }
    }
}

pub fn verify_symplectic_extension(k: SurgeryParam) -> IdentityReport {
    verify_symplectic_extension_with(k, &ExtensionInputs::standard(k))
}

pub fn verify_symplectic_extension_with(k: SurgeryParam, inputs: &ExtensionInputs) -> IdentityReport {
    let mut report = IdentityReport::new("symplectic-extension");
    report.parameter("k", k);
    report.object("omega_tilde", &inputs.omega_tilde);

    let omega = model::omega();
    let kc = k.coefficient();
    let x = Coefficient::var(Symbol::X);
    let y = Coefficient::var(Symbol::Y);
    let rho_inv = radial_inverse();
    let outer = Some(Region::Outer);
    let inner = Some(Region::Inner);
    let middle = Some(Region::Middle);

    let dtheta = model::angular_form();
    report.push(Claim::zero_form(
        "angular-form-closed",
        outer,
        dtheta.exterior_derivative(Region::Outer),
    ));
    report.push(Claim::zero_form(
        "angular-form-normalized",
        outer,
        model::radial_form()
            .wedge(&dtheta)
            .map(|v| &v - &(&Form::d(Gen::X) ^ &Form::d(Gen::Y))),
    ));

    // Pullback of each generator against the literal shear formula.
    let shear = Form::one_form(&[
        (Gen::W, Coefficient::from_int(1)),
        (Gen::Y, &(&kc * &x) * &rho_inv),
        (Gen::X, -&(&(&kc * &y) * &rho_inv)),
    ]);
    let generator_residual = Gen::ALL
        .iter()
        .map(|g| {
            let expected = if *g == Gen::W { shear.clone() } else { Form::d(*g) };
            inputs.twist.pullback(&Form::d(*g)).map(|img| &img - &expected)
        })
        .try_fold(Form::zero(DIM), |acc, r| r.map(|r| &acc + &r));
    report.push(Claim::zero_form("coframe-pullback", outer, generator_residual));

    let pulled_omega = inputs.twist.pullback(&omega);
    let expected = &omega - &(&Form::d(Gen::X) ^ &Form::d(Gen::Y)).scale(&(&(&kc * &y) * &rho_inv));
    report.push(Claim::zero_form(
        "pullback-of-omega",
        outer,
        pulled_omega.clone().map(|p| &p - &expected),
    ));

    report.push(Claim::zero_form(
        "matches-omega-inside",
        inner,
        inputs.omega_tilde.in_region(Region::Inner).map(|w| &w - &omega),
    ));
    report.push(Claim::zero_form(
        "matches-pullback-outside",
        outer,
        pulled_omega.and_then(|p| Ok(&inputs.omega_tilde.in_region(Region::Outer)? - &p)),
    ));

    for region in [Region::Inner, Region::Outer] {
        report.push(Claim::zero_form(
            "closed",
            Some(region),
            inputs.omega_tilde.exterior_derivative(region),
        ));
    }
    report.push(Claim::from_check(
        "closed",
        middle,
        closed_for_radial_f(&inputs.omega_tilde),
    ));

    let alpha = &inputs.omega_tilde - &omega;
    report.push(Claim::zero_form("alpha-squared-vanishes", middle, alpha.wedge(&alpha)));
    report.push(Claim::zero_form(
        "omega-squared-alpha-vanishes",
        middle,
        omega.wedge(&omega).and_then(|w| w.wedge(&alpha)),
    ));
    let cube = model::omega_cubed();
    report.push(Claim::zero_form(
        "top-power-preserved",
        middle,
        Ok(&inputs.omega_tilde.wedge_power(3) - &cube),
    ));
    report.push(Claim::zero_form(
        "top-power-nondegenerate",
        None,
        Ok(&cube - &Form::volume().scale(&Coefficient::from_int(6))),
    ));
    report
}

/// Closedness with `f` an arbitrary function of `(x, y)`: terms involving `f`
/// must sit on blades containing `dx∧dy`, so that `df∧·` kills them, and the
/// remaining derivative with `f` held fixed must vanish.
fn closed_for_radial_f(form: &Form) -> Result<Option<String>, ExteriorError> {
    let planar = Blade::from_gens(&[Gen::X, Gen::Y]).expect("two generators");
    let mut held = Form::zero(form.dim());
    for (blade, c) in form.terms() {
        if !c.derivative(Symbol::F).is_zero() && !contains_blade(*blade, planar) {
            return Ok(Some(format!(
                "f-dependent coefficient {} on {} has a nonzero df-term",
                c,
                Form::monomial(form.dim(), *blade, Coefficient::from_int(1))
            )));
        }
        for (sym, g) in [(Symbol::X, Gen::X), (Symbol::Y, Gen::Y)] {
            let dc = c.derivative(sym);
            if dc.is_zero() {
                continue;
            }
            let term = Form::monomial(form.dim(), *blade, dc);
            held = held.try_add(&Form::d(g).wedge(&term)?)?;
        }
    }
    if held.is_zero() {
        Ok(None)
    } else {
        Ok(Some(format!("d with f held fixed: {}", held)))
    }
}

fn contains_blade(outer: Blade, inner: Blade) -> bool {
    let o = outer.indices();
    inner.indices().iter().all(|i| o.contains(i))
}

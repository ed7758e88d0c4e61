use luttinger::exterior::{
    radial_inverse, Blade, Coefficient, CoframeMap, Form, Gen, Region, Substitution, Symbol, DIM,
};
use luttinger::verification::model;
use num::{One, Zero};
use proptest::prelude::*;

fn var(s: Symbol) -> Coefficient {
    Coefficient::var(s)
}

/// Small polynomial in x, y, k, optionally over x² + y².
fn coefficient() -> impl Strategy<Value = Coefficient> {
    (
        prop::collection::vec((-3i64..=3, 0u32..=2, 0u32..=2, 0u32..=1), 1..=3),
        any::<bool>(),
    )
        .prop_map(|(terms, radial)| {
            let mut c = Coefficient::zero();
            for (a, ex, ey, ek) in terms {
                let t = &(&Coefficient::from_int(a) * &var(Symbol::X).pow(ex))
                    * &(&var(Symbol::Y).pow(ey) * &var(Symbol::K).pow(ek));
                c = &c + &t;
            }
            if radial {
                c = &c * &radial_inverse();
            }
            c
        })
}

fn one_form() -> impl Strategy<Value = Form> {
    prop::collection::vec(coefficient(), DIM).prop_map(|cs| {
        let parts: Vec<(Gen, Coefficient)> = Gen::ALL.iter().copied().zip(cs).collect();
        Form::one_form(&parts)
    })
}

fn homogeneous(degree: usize) -> impl Strategy<Value = Form> {
    prop::collection::vec(one_form(), degree).prop_map(move |fs| {
        let mut acc = Form::function(DIM, Coefficient::one());
        for f in fs {
            acc = &acc ^ &f;
        }
        acc
    })
}

/// A coframe map without substitution and with unit diagonal shear, so it is
/// always invertible.
fn shear_map() -> impl Strategy<Value = CoframeMap> {
    prop::collection::vec((0usize..DIM, 0usize..DIM, coefficient()), 0..=3).prop_map(|shears| {
        let mut images: Vec<Form> = Gen::ALL.iter().map(|g| Form::d(*g)).collect();
        for (i, j, c) in shears {
            if i < j {
                images[j] = &images[j] + &Form::generator(DIM, i).scale(&c);
            }
        }
        CoframeMap::new(images, Substitution::new()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coefficient_ring_laws(a in coefficient(), b in coefficient(), c in coefficient()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if let Some(inv) = a.inv() {
            prop_assert_eq!(&a * &inv, Coefficient::one());
        }
    }

    #[test]
    fn wedge_graded_commutative(a in homogeneous(1), b in homogeneous(2), c in homogeneous(1)) {
        prop_assert_eq!(&a ^ &b, &b ^ &a);
        prop_assert_eq!(&a ^ &c, -&(&c ^ &a));
        prop_assert!((&a ^ &a).is_zero());
        prop_assert_eq!(&(&a ^ &b) ^ &c, &a ^ &(&b ^ &c));
    }

    #[test]
    fn pullback_is_functorial(f in shear_map(), g in shear_map(), eta in homogeneous(2), xi in homogeneous(1)) {
        let composed = CoframeMap::compose(&f, &g).unwrap();
        prop_assert_eq!(composed.pullback(&eta).unwrap(), g.pullback(&f.pullback(&eta).unwrap()).unwrap());
        let wedge = &eta ^ &xi;
        prop_assert_eq!(f.pullback(&wedge).unwrap(), &f.pullback(&eta).unwrap() ^ &f.pullback(&xi).unwrap());
        prop_assert_eq!(f.inverse().unwrap().pullback(&f.pullback(&eta).unwrap()).unwrap(), eta);
    }

    #[test]
    fn d_squared_vanishes(eta in homogeneous(1), outer in any::<bool>()) {
        let region = if outer { Region::Outer } else { Region::Inner };
        let scaled = eta.scale(&var(Symbol::F));
        let once = scaled.exterior_derivative(region).unwrap();
        prop_assert!(once.exterior_derivative(region).unwrap().is_zero());
    }

    #[test]
    fn leibniz_rule(a in homogeneous(1), b in homogeneous(1)) {
        let region = Region::Inner;
        let lhs = (&a ^ &b).exterior_derivative(region).unwrap();
        let rhs = &(&a.exterior_derivative(region).unwrap() ^ &b) - &(&a ^ &b.exterior_derivative(region).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

/// Sign of the permutation sorting `seq`, or 0 on a repeat.
fn permutation_sign(seq: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

#[test]
fn omega_cubed_matches_brute_force() {
    // ω as (index pair, coefficient): dx∧dz + dw∧dy + dσ₁∧dσ₂.
    let terms: [([usize; 2], i64); 3] = [([0, 2], 1), ([3, 1], 1), ([4, 5], 1)];
    let mut total = 0;
    for a in &terms {
        for b in &terms {
            for c in &terms {
                let seq = [a.0[0], a.0[1], b.0[0], b.0[1], c.0[0], c.0[1]];
                total += a.1 * b.1 * c.1 * permutation_sign(&seq);
            }
        }
    }
    assert_eq!(total, 6);
    let cube = model::omega_cubed();
    let vol = Blade::from_indices(&[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(cube.coefficient(vol), Coefficient::from_int(total));
    assert_eq!(cube, Form::volume().scale(&Coefficient::from_int(6)));
}

#[test]
fn generic_two_form_cube_matches_brute_force() {
    let pairs = [([0usize, 1usize], 2i64), ([2, 3], -1), ([4, 5], 3), ([0, 3], 5), ([1, 4], -2)];
    let mut form = Form::zero(DIM);
    for (p, c) in &pairs {
        let b = Blade::from_indices(p).unwrap();
        form = &form + &Form::monomial(DIM, b, Coefficient::from_int(*c));
    }
    let mut expected = 0;
    for a in &pairs {
        for b in &pairs {
            for c in &pairs {
                let seq = [a.0[0], a.0[1], b.0[0], b.0[1], c.0[0], c.0[1]];
                expected += a.1 * b.1 * c.1 * permutation_sign(&seq);
            }
        }
    }
    let vol = Blade::from_indices(&[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(form.wedge_power(3).coefficient(vol), Coefficient::from_int(expected));
}

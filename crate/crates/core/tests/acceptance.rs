//! Acceptance suite: one PASS/FAIL line per criterion, then a single verdict.
//!
//! Lines go straight to the process stdout so they show without
//! `--nocapture`.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use luttinger::cli::cycle_certificate;
use luttinger::lattice::{
    complement_betti, compute_complement_homology, embedded_tori, essential_three_tori,
    is_dual_torus, snf, AbelianGroup, CoordinateSubtorus, EmbeddedTorus, IntegerMatrix, Root8,
};
use luttinger::exterior::Region;
use luttinger::surgery::{
    h1, min_product_b2, product_obstruction, realize, relation_classes, report, ProductStatus,
    Surgery, SurgeryDescriptor, SL2Z,
};
use luttinger::verification::{
    verify_symplectic_extension_with, verify_trivial_canonical_class_with, CanonicalInputs,
    ExtensionInputs, IdentityReport, SurgeryParam,
};
use num::{BigInt, Integer, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    bounded_twist, determinantal_divisor, invariant_factors_by_minors, normal_form_of_cyclics,
    random_twist, rank_over_q,
};

/// Every comparison is exact: integers, rationals and symbolic residuals
/// must agree with zero difference.
const TOLERANCE: &str = "exact";
const FAMILY_BUDGET: Duration = Duration::from_secs(1);
const REALIZATION_BUDGET: Duration = Duration::from_secs(5);
const SEED: u64 = 0x5eed;
const RANDOM_DESCRIPTORS: usize = 1000;
const RANDOM_TWISTS: usize = 20;
const RANDOM_MATRICES: usize = 500;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn check(failures: Vec<String>, summary: impl Into<String>) -> Self {
        if failures.is_empty() {
            Outcome { passed: true, detail: summary.into() }
        } else {
            Outcome { passed: false, detail: failures.join("; ") }
        }
    }
}

fn group_of(d: &SurgeryDescriptor) -> (usize, Vec<BigInt>) {
    let g = h1(d);
    (g.rank(), g.torsion().to_vec())
}

fn family() -> Outcome {
    let start = Instant::now();
    let reports: Vec<_> = (2..=50u32).map(|n| (n, report(&realize([0, n, 1, 1])))).collect();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    for (n, r) in &reports {
        let expected = AbelianGroup::from_invariant_factors(3, vec![BigInt::from(*n)]).unwrap();
        let ok = r.h1 == expected
            && r.b1 == 3
            && r.bound_b2 == 18
            && r.bound_b3 == 32
            && r.euler == 0
            && r.kahler_obstructed
            && r.product_status == ProductStatus::Obstructed;
        if !ok {
            failures.push(format!("n = {n}: {}", r.summary_line()));
        }
    }
    let distinct: BTreeSet<_> = reports.iter().map(|(_, r)| r.h1.clone()).collect();
    if distinct.len() != reports.len() {
        failures.push(format!("only {} distinct groups", distinct.len()));
    }
    if elapsed > FAMILY_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {FAMILY_BUDGET:?}"));
    }
    Outcome::check(failures, format!("n = 2..50, 49 distinct groups, b1 = 3, b2 <= 18, b3 <= 32 in {elapsed:?}"))
}

fn realization() -> Outcome {
    let mut cases = Vec::new();
    for a in 0..=6u32 {
        for b in 0..=6 {
            for c in 0..=6 {
                for d in 0..=6 {
                    cases.push([a, b, c, d]);
                }
            }
        }
    }
    let start = Instant::now();
    let computed: Vec<_> = cases.iter().map(|&o| (o, realize(o))).map(|(o, d)| (o, d, group_of(&d))).collect();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    for (orders, d, got) in &computed {
        let target = normal_form_of_cyclics(2, &orders.map(u64::from));
        let rel = relation_classes(d).to_rows();
        let by_minors = (6 - rank_over_q(&rel), invariant_factors_by_minors(&rel));
        if *got != target || by_minors != target {
            failures.push(format!("{orders:?}: got {got:?}, expected {target:?}"));
        }
    }
    if elapsed > REALIZATION_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {REALIZATION_BUDGET:?}"));
    }
    Outcome::check(failures, format!("{} targets isomorphic by independent normal forms in {elapsed:?}", cases.len()))
}

/// Surgery `i` kills `k_i (q_i e₂ + s_i e_{3+i})`.
fn closed_form(d: &SurgeryDescriptor) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = d
        .surgeries
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut row = vec![0; 6];
            row[1] += s.k * s.tau.q();
            row[2 + i] += s.k * s.tau.s();
            row
        })
        .collect();
    IntegerMatrix::from_rows(6, &rows).unwrap()
}

fn closed_form_agreement(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = Vec::new();
    for _ in 0..RANDOM_DESCRIPTORS {
        let d = SurgeryDescriptor::new([0; 4].map(|_| Surgery::new(rng.gen_range(-9..=9), bounded_twist(rng, 9))));
        if relation_classes(&d) != closed_form(&d) {
            failures.push(d.to_string());
        }
    }
    Outcome::check(failures, format!("{RANDOM_DESCRIPTORS} random descriptors, |k|, |tau| <= 9"))
}

fn minus_one_dual_torus() -> CoordinateSubtorus {
    let m = Root8::MINUS_ONE;
    CoordinateSubtorus::new([1, 4], [(2, m), (3, m), (5, m), (6, m)]).unwrap()
}

fn cycle_certificate_checks(cycles: &[CoordinateSubtorus], tori: &[EmbeddedTorus]) -> Outcome {
    let h = match compute_complement_homology(cycles, tori) {
        Ok(h) => h,
        Err(e) => return Outcome { passed: false, detail: e.to_string() },
    };
    let mut failures = Vec::new();
    if h.cycle_rank != 10 {
        failures.push(format!("rank {}", h.cycle_rank));
    }
    if h.cycle_invariant_factors.len() != 10 || !h.cycle_invariant_factors.iter().all(One::is_one) {
        failures.push(format!("invariant factors {:?}", h.cycle_invariant_factors));
    }
    if h.cokernel_rank != 6 {
        failures.push(format!("cokernel rank {}", h.cokernel_rank));
    }
    if (h.b1, h.b2) != (6, 17) {
        failures.push(format!("betti ({}, {})", h.b1, h.b2));
    }
    if h.dual_tori.len() != 4 || !h.dual_tori.iter().enumerate().all(|(i, t)| is_dual_torus(t, tori, i)) {
        failures.push("dual tori".into());
    }
    if !is_dual_torus(&minus_one_dual_torus(), tori, 0) {
        failures.push(format!("{} is not dual to e1", minus_one_dual_torus()));
    }
    Outcome::check(failures, "rank 10, unit invariant factors, cokernel rank 6, (b1, b2) = (6, 17), dual tori found")
}

fn cycle_certificate_accepted() -> Outcome {
    let mut out = cycle_certificate_checks(&essential_three_tori(), &embedded_tori());
    if complement_betti() != Ok((6, 17)) {
        out = Outcome { passed: false, detail: format!("complement_betti() = {:?}", complement_betti()) };
    }
    out
}

fn extension_checks(inputs: &ExtensionInputs) -> Outcome {
    let r = verify_symplectic_extension_with(SurgeryParam::Symbolic, inputs);
    let mut failures: Vec<String> = r.failures().map(describe_claim).collect();
    for (label, region) in [
        ("closed", Region::Inner),
        ("closed", Region::Outer),
        ("closed", Region::Middle),
        ("top-power-preserved", Region::Middle),
        ("matches-omega-inside", Region::Inner),
        ("matches-pullback-outside", Region::Outer),
    ] {
        if !r.claims.iter().any(|c| c.label == label && c.region == Some(region)) {
            failures.push(format!("{label} [{region}] not checked"));
        }
    }
    Outcome::check(failures, format!("{} claims, zero residuals", r.claims.len()))
}

fn describe_claim(c: &luttinger::verification::Claim) -> String {
    match c.region {
        Some(r) => format!("{} [{r}]", c.label),
        None => c.label.clone(),
    }
}

const CANONICAL_LABELS: [&str; 12] = [
    "almost-complex",
    "compatible-invariant",
    "compatible-symmetric",
    "compatible-positive",
    "section-type",
    "section-from-operator",
    "section-unit-coefficient",
    "gauge-operator",
    "gauge-form",
    "gauge-section",
    "twist-preserves-omega",
    "twist-preserves-volume",
];

fn canonical_report(tau: &SL2Z, inputs: &CanonicalInputs) -> IdentityReport {
    verify_trivial_canonical_class_with(SurgeryParam::Symbolic, tau, inputs)
}

/// Failing claims per configuration, with every expected claim present.
fn canonical_failures(taus: &[SL2Z], inputs: &CanonicalInputs) -> BTreeSet<(String, String)> {
    let mut failed = BTreeSet::new();
    for tau in taus {
        let r = canonical_report(tau, inputs);
        for label in CANONICAL_LABELS {
            match r.claim(label) {
                Some(c) if c.passed => {}
                Some(c) => {
                    failed.insert((tau.to_string(), describe_claim(c)));
                }
                None => {
                    failed.insert((tau.to_string(), format!("{label} missing")));
                }
            }
        }
        for c in r.failures() {
            failed.insert((tau.to_string(), describe_claim(c)));
        }
    }
    failed
}

fn canonical_class(rng: &mut ChaCha8Rng) -> Outcome {
    let mut taus = vec![SL2Z::identity()];
    while taus.len() <= RANDOM_TWISTS {
        let tau = random_twist(rng);
        if !taus.contains(&tau) {
            taus.push(tau);
        }
    }
    let failed = canonical_failures(&taus, &CanonicalInputs::standard(SurgeryParam::Symbolic));
    let configs: BTreeSet<&str> = failed.iter().map(|(t, _)| t.as_str()).collect();
    let labels: BTreeSet<&str> = failed.iter().map(|(_, l)| l.as_str()).collect();
    if failed.is_empty() {
        return Outcome {
            passed: true,
            detail: format!("identity and {RANDOM_TWISTS} distinct twists, all claims, positivity at 8 points x 7 k x 3 f"),
        };
    }
    let volume_ok = !labels.iter().any(|l| l.starts_with("twist-preserves-volume"));
    Outcome {
        passed: false,
        detail: format!(
            "{} of {} configurations fail {:?}; every other claim holds{}. \
             Pulling back dx^dz + dw^dy by a twist of (z, w) with (x, y) fixed leaves it \
             unchanged only for the identity; the determinant-one condition preserves the \
             top power instead",
            configs.len(),
            taus.len(),
            labels,
            if volume_ok { ", twist-preserves-volume holds everywhere" } else { "" },
        ),
    }
}

fn product_arithmetic() -> Outcome {
    let mut failures = Vec::new();
    let checks = [
        ("product_obstruction(2, 18) = obstructed", product_obstruction(2, 18) == ProductStatus::Obstructed),
        ("min_product_b2(0) = 23", min_product_b2(0) == Ok(23)),
        ("product_obstruction(3, 18) = obstructed", product_obstruction(3, 18) == ProductStatus::Obstructed),
        ("min_product_b2(1) = 27", min_product_b2(1) == Ok(27)),
        ("product_obstruction(6, 21) = unknown", product_obstruction(6, 21) == ProductStatus::Unknown),
    ];
    for (name, ok) in checks {
        if !ok {
            failures.push(name.to_string());
        }
    }
    Outcome::check(failures, "minimal products 23 and 27; 6-torus control unknown")
}

fn snf_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = Vec::new();
    for _ in 0..RANDOM_MATRICES {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = IntegerMatrix::from_rows(c, &rows).unwrap();
        let res = snf(&m);
        let mut problems = Vec::new();
        if res.u.mul(&m).and_then(|um| um.mul(&res.v)).ok() != Some(res.d.clone()) {
            problems.push("U M V != D");
        }
        if res.u.determinant().map(|d| d.abs()) != Ok(BigInt::one())
            || res.v.determinant().map(|d| d.abs()) != Ok(BigInt::one())
        {
            problems.push("not unimodular");
        }
        let off_diagonal = (0..r).any(|i| (0..c).any(|j| i != j && !res.d[(i, j)].is_zero()));
        if off_diagonal {
            problems.push("not diagonal");
        }
        let diag = res.diagonal();
        let chain = diag.iter().all(|d| !d.is_negative())
            && diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) });
        if !chain {
            problems.push("not a divisibility chain");
        }
        let big = m.to_rows();
        let mut prefix = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            prefix *= d;
            if prefix != determinantal_divisor(&big, k + 1) {
                problems.push("minor gcd mismatch");
                break;
            }
        }
        if !problems.is_empty() {
            failures.push(format!("{rows:?}: {}", problems.join(", ")));
        }
    }
    Outcome::check(failures, format!("{RANDOM_MATRICES} random matrices up to 6x6, entries in [-9, 9]"))
}

fn corrupted_w8() -> Vec<CoordinateSubtorus> {
    let mut cycles = essential_three_tori();
    let w8 = &cycles[7];
    let fixed: Vec<(usize, Root8)> =
        w8.fixed().iter().map(|(&c, &v)| (c, if c == 3 { Root8::ONE } else { v })).collect();
    cycles[7] = CoordinateSubtorus::new(w8.free().iter().copied(), fixed).unwrap();
    cycles
}

fn negative_controls() -> Outcome {
    let k = SurgeryParam::Symbolic;
    let mut failures = Vec::new();
    let mut caught = Vec::new();

    let flipped = extension_checks(&ExtensionInputs::with_flipped_alpha(k));
    if flipped.passed {
        failures.push("flipped alpha passes the extension checks".to_string());
    } else {
        caught.push(format!("alpha sign flip -> {}", flipped.detail));
    }

    let id = [SL2Z::identity()];
    let clean = canonical_failures(&id, &CanonicalInputs::standard(k));
    let dropped = canonical_failures(&id, &CanonicalInputs::with_dropped_quadratic_term(k));
    let new: Vec<String> = dropped.difference(&clean).map(|(_, l)| l.clone()).collect();
    if new.is_empty() {
        failures.push("dropped quadratic term passes the canonical-class checks".to_string());
    } else {
        caught.push(format!("dropped k^2 x^2 f^2 -> {}", new.join(", ")));
    }

    let bad = corrupted_w8();
    let certificate = cycle_certificate_checks(&bad, &embedded_tori());
    let mut sink = Vec::new();
    let exit = cycle_certificate(&bad, &embedded_tori(), true, &mut sink);
    if certificate.passed || exit == 0 {
        failures.push("wrong W8 fixed value passes the cycle certificate".to_string());
    } else {
        caught.push(format!("W8 coordinate 3 -> 1 -> {} (exit {exit})", certificate.detail));
    }
    Outcome::check(failures, caught.join("; "))
}

fn determinism() -> Outcome {
    let mut failures = Vec::new();
    for args in [&["lemma6", "--json"][..], &["verify-forms", "--k", "symbolic", "--json"]] {
        let run = || Command::new(env!("CARGO_BIN_EXE_luttinger")).args(args).output().unwrap();
        let (a, b) = (run(), run());
        if a.stdout != b.stdout || a.stdout.is_empty() || a.status.code() != Some(0) {
            failures.push(format!("{args:?} differs between runs"));
        }
    }
    Outcome::check(failures, "lemma6 --json and verify-forms --k symbolic --json byte-identical")
}

type Criterion = (&'static str, Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>);

#[test]
fn acceptance() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let criteria: Vec<Criterion> = vec![
        ("realize(0, n, 1, 1) family invariants", Box::new(|_| family())),
        ("diagonal realization up to isomorphism", Box::new(|_| realization())),
        ("pushforward relations equal the closed form", Box::new(closed_form_agreement)),
        ("essential 3-torus certificate", Box::new(|_| cycle_certificate_accepted())),
        ("symplectic extension, symbolic k", Box::new(|_| extension_checks(&ExtensionInputs::standard(SurgeryParam::Symbolic)))),
        ("trivial canonical class, identity and random twists", Box::new(canonical_class)),
        ("product obstruction arithmetic", Box::new(|_| product_arithmetic())),
        ("Smith normal form properties", Box::new(snf_suite)),
        ("negative controls are caught", Box::new(|_| negative_controls())),
        ("deterministic CLI output", Box::new(|_| determinism())),
    ];

    let stdout = std::io::stdout();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let outcome = run(&mut rng);
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        let mut lock = stdout.lock();
        let _ = writeln!(lock, "{verdict} {:>2}. {name} (tolerance: {TOLERANCE}): {}", i + 1, outcome.detail);
        let _ = lock.flush();
        if !outcome.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

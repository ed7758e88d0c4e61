//! Command-line front end. [`run`] never exits the process; it returns the
//! exit code: 0 success, 1 a check failed, 2 bad input.

mod args;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use serde::Serialize;

pub use args::{Cli, Command};
use args::{DescriptorArgs, RealizeArgs, SweepArgs, VerifyArgs};

use crate::lattice::{
    compute_complement_homology, embedded_tori, essential_three_tori, is_dual_torus,
    AbelianGroup, ComplementHomology, CoordinateSubtorus, EmbeddedTorus, LatticeError,
};
use crate::surgery::{
    min_product_b2, realize, report, sweep, Surgery, SurgeryDescriptor, SweepGrid, SL2Z,
    NUM_SURGERIES,
};
use crate::verification::{
    verify_symplectic_extension, verify_symplectic_extension_with,
    verify_trivial_canonical_class, verify_trivial_canonical_class_with, CanonicalInputs,
    ExtensionInputs, IdentityReport, SurgeryParam,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Bad input, reported with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn field(field: &str, message: impl Into<String>) -> InputError {
    InputError::Field {
        field: field.to_string(),
        message: message.into(),
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::H1(a) => cmd_h1(&a, out),
        Command::Report(a) => cmd_report(&a, out),
        Command::Realize(a) => cmd_realize(&a, out),
        Command::VerifyForms(a) => cmd_verify_forms(&a, out),
        Command::Lemma6(a) => Ok(cycle_certificate(&essential_three_tori(), &embedded_tori(), a.json, out)),
        Command::Sweep(a) => cmd_sweep(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_INPUT
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    let _ = writeln!(out, "{}", text);
}

fn read_file(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_ints(name: &str, text: &str, expected: usize) -> Result<Vec<i64>, InputError> {
    let values: Result<Vec<i64>, _> = text.split(',').map(|s| s.trim().parse::<i64>()).collect();
    match values {
        Ok(v) if v.len() == expected => Ok(v),
        _ => Err(field(
            name,
            format!("expected {} comma-separated integers, got `{}`", expected, text),
        )),
    }
}

fn parse_twist(name: &str, text: &str) -> Result<SL2Z, InputError> {
    let v = parse_ints(name, text, 4)?;
    SL2Z::new(v[0], v[1], v[2], v[3]).map_err(|e| field(name, e.to_string()))
}

/// From `--descriptor`, or from `--k` and `--tau i:p,q,r,s`.
pub fn descriptor_from_args(a: &DescriptorArgs) -> Result<SurgeryDescriptor, InputError> {
    if let Some(path) = &a.descriptor {
        let text = read_file(path)?;
        return SurgeryDescriptor::from_json(&text).map_err(|e| field("descriptor", e.to_string()));
    }
    let Some(k) = &a.k else {
        return Err(field("--k", "required unless --descriptor is given"));
    };
    let ks = parse_ints("--k", k, NUM_SURGERIES)?;
    let mut d = SurgeryDescriptor::untwisted([ks[0], ks[1], ks[2], ks[3]]);
    for spec in &a.tau {
        let (slot, entries) = spec
            .split_once(':')
            .ok_or_else(|| field("--tau", format!("expected i:p,q,r,s, got `{}`", spec)))?;
        let i: usize = slot
            .trim()
            .parse()
            .ok()
            .filter(|i| (1..=NUM_SURGERIES).contains(i))
            .ok_or_else(|| field("--tau", format!("surgery index must be 1-4, got `{}`", slot)))?;
        let tau = parse_twist(&format!("--tau {}", i), entries)?;
        d.surgeries[i - 1] = Surgery::new(d.surgeries[i - 1].k, tau);
    }
    Ok(d)
}

fn cmd_h1(a: &DescriptorArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let r = report(&descriptor_from_args(a)?);
    if a.json {
        emit_json(out, &r);
    } else {
        let _ = writeln!(out, "{}", r.summary_line());
    }
    Ok(EXIT_OK)
}

fn cmd_report(a: &DescriptorArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let r = report(&descriptor_from_args(a)?);
    if a.json {
        emit_json(out, &r);
        return Ok(EXIT_OK);
    }
    let _ = writeln!(out, "descriptor: {}", r.descriptor);
    let _ = write!(out, "relations (rows in Z^6):\n{}", r.relations);
    let _ = writeln!(out, "H1 = {}", r.h1);
    let _ = writeln!(out, "b1 = {}", r.b1);
    let _ = writeln!(out, "b2 <= {} (= 15 + b1)", r.bound_b2);
    let _ = writeln!(out, "b3 <= {} (from euler = 2 - 2 b1 + 2 b2 - b3)", r.bound_b3);
    let _ = writeln!(out, "euler = {}", r.euler);
    let _ = writeln!(
        out,
        "Kahler: {}",
        if r.kahler_obstructed { "obstructed (b1 odd)" } else { "no verdict (b1 even)" }
    );
    let product = match (r.b1, r.product_status) {
        (2..=3, crate::surgery::ProductStatus::Obstructed) => format!(
            "obstructed (any M x T^2 has b2 >= {} > {})",
            min_product_b2(r.b1 - 2).expect("b1 - 2 is 0 or 1"),
            r.bound_b2
        ),
        _ => "no verdict".to_string(),
    };
    let _ = writeln!(out, "product M^4 x T^2: {}", product);
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Realization {
    descriptor: SurgeryDescriptor,
    h1: AbelianGroup,
    target: AbelianGroup,
    isomorphic: bool,
}

fn cmd_realize(a: &RealizeArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let d = [a.d[0], a.d[1], a.d[2], a.d[3]];
    let descriptor = realize(d);
    let h1 = report(&descriptor).h1;
    let orders: Vec<num::BigInt> = d.iter().map(|&v| v.into()).collect();
    let target = AbelianGroup::from_cyclic_orders(2, &orders);
    let isomorphic = h1 == target;
    let r = Realization {
        descriptor,
        h1,
        target,
        isomorphic,
    };
    if a.json {
        emit_json(out, &r);
    } else {
        let _ = writeln!(out, "{}", r.descriptor.to_json());
        let _ = writeln!(
            out,
            "H1 = {}; target = {}; isomorphic: {}",
            r.h1,
            r.target,
            if isomorphic { "yes" } else { "no" }
        );
    }
    Ok(if isomorphic { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct ControlOutcome {
    name: String,
    caught: bool,
    failed_claims: Vec<String>,
}

#[derive(Serialize)]
struct FormsOutput {
    passed: bool,
    reports: Vec<IdentityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    negative_controls: Option<Vec<ControlOutcome>>,
}

/// Corrupted inputs that each must make at least one claim fail. Run at
/// symbolic `k`, where every corruption is visible.
pub fn negative_control_reports() -> Vec<(String, IdentityReport)> {
    let k = SurgeryParam::Symbolic;
    vec![
        (
            "alpha-sign-flip".to_string(),
            verify_symplectic_extension_with(k, &ExtensionInputs::with_flipped_alpha(k)),
        ),
        (
            "dropped-quadratic-term".to_string(),
            verify_trivial_canonical_class_with(
                k,
                &SL2Z::identity(),
                &CanonicalInputs::with_dropped_quadratic_term(k),
            ),
        ),
    ]
}

fn cmd_verify_forms(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let tau = match &a.tau {
        Some(t) => parse_twist("--tau", t)?,
        None => SL2Z::identity(),
    };
    let reports = vec![
        verify_symplectic_extension(a.k),
        verify_trivial_canonical_class(a.k, &tau),
    ];
    let controls = a.negative_controls.then(|| {
        negative_control_reports()
            .into_iter()
            .map(|(name, r)| ControlOutcome {
                name,
                caught: !r.passed,
                failed_claims: r.failures().map(|c| c.label.clone()).collect(),
            })
            .collect::<Vec<_>>()
    });
    let passed = reports.iter().all(|r| r.passed)
        && controls.as_ref().is_none_or(|c| c.iter().all(|c| c.caught));
    let output = FormsOutput {
        passed,
        reports,
        negative_controls: controls,
    };
    if a.json {
        emit_json(out, &output);
    } else {
        for r in &output.reports {
            let _ = write!(out, "{}", r);
            for (name, text) in &r.objects {
                let _ = writeln!(out, "  {}:", name);
                for line in text.lines() {
                    let _ = writeln!(out, "    {}", line);
                }
            }
        }
        if let Some(controls) = &output.negative_controls {
            let _ = writeln!(out, "negative controls (k symbolic):");
            for c in controls {
                let _ = writeln!(
                    out,
                    "  {} {}: failing claims [{}]",
                    if c.caught { "caught" } else { "MISSED" },
                    c.name,
                    c.failed_claims.join(", ")
                );
            }
        }
        let _ = writeln!(out, "overall: {}", if passed { "PASS" } else { "FAIL" });
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct CycleCertificate<'a> {
    passed: bool,
    checks: Vec<(&'static str, bool)>,
    #[serde(flatten)]
    homology: &'a ComplementHomology,
}

#[derive(Serialize)]
struct CycleFailure {
    passed: bool,
    error: String,
}

/// The intersection-matrix certificate for a given catalog: exit 0 when the
/// rank, invariant factors, dual tori and complement Betti numbers all match.
pub fn cycle_certificate(
    cycles: &[CoordinateSubtorus],
    tori: &[EmbeddedTorus],
    json: bool,
    out: &mut dyn Write,
) -> i32 {
    let homology = match compute_complement_homology(cycles, tori) {
        Ok(h) => h,
        Err(e) => return certificate_error(e, json, out),
    };
    let h = &homology;
    let checks = vec![
        ("rank is 10", h.cycle_rank == 10),
        (
            "invariant factors all 1",
            h.cycle_invariant_factors.len() == 10 && h.cycle_invariant_factors.iter().all(|d| *d == 1.into()),
        ),
        ("cokernel rank is 6", h.cokernel_rank == 6),
        (
            "dual tori valid",
            h.dual_tori.iter().enumerate().all(|(i, t)| is_dual_torus(t, tori, i)),
        ),
        ("lifted 3-tori miss the embedded tori", h.lifted_cycles_disjoint),
        ("complement betti (6, 17)", (h.b1, h.b2) == (6, 17)),
    ];
    let passed = checks.iter().all(|(_, ok)| *ok);
    if json {
        emit_json(
            out,
            &CycleCertificate {
                passed,
                checks,
                homology: h,
            },
        );
    } else {
        let _ = write!(
            out,
            "cycle intersection matrix ({} x {}):\n{}",
            h.cycle_matrix.rows(),
            h.cycle_matrix.cols(),
            h.cycle_matrix
        );
        let factors: Vec<String> = h.cycle_invariant_factors.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(out, "rank: {}", h.cycle_rank);
        let _ = writeln!(out, "invariant factors: {}", factors.join(" "));
        let _ = writeln!(out, "cokernel rank: {}", h.cokernel_rank);
        let _ = writeln!(out, "dual tori:");
        for (t, e) in h.dual_tori.iter().zip(tori) {
            let _ = writeln!(out, "  {}: {}", e.name(), t);
        }
        let _ = writeln!(out, "2-torus intersection rank: {}", h.two_torus_rank);
        let _ = writeln!(out, "complement: b1 = {}, b2 = {}", h.b1, h.b2);
        for (name, ok) in &checks {
            let _ = writeln!(out, "{} {}", if *ok { "ok  " } else { "FAIL" }, name);
        }
        let _ = writeln!(out, "overall: {}", if passed { "PASS" } else { "FAIL" });
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn certificate_error(e: LatticeError, json: bool, out: &mut dyn Write) -> i32 {
    if json {
        emit_json(
            out,
            &CycleFailure {
                passed: false,
                error: e.to_string(),
            },
        );
    } else {
        let _ = writeln!(out, "FAIL {}", e);
        let _ = writeln!(out, "overall: FAIL");
    }
    EXIT_FAILED
}

fn read_taus(path: &Path) -> Result<Vec<SL2Z>, InputError> {
    let text = read_file(path)?;
    let raw: Vec<[[i64; 2]; 2]> =
        serde_json::from_str(&text).map_err(|e| field("--tau-file", e.to_string()))?;
    raw.into_iter()
        .enumerate()
        .map(|(i, m)| SL2Z::try_from(m).map_err(|e| field(&format!("--tau-file entry {}", i), e.to_string())))
        .collect()
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    for &slot in &a.vary {
        if !(1..=NUM_SURGERIES).contains(&slot) {
            return Err(field("--vary", format!("slot must be 1-4, got {}", slot)));
        }
    }
    let taus = match &a.tau_file {
        Some(p) => read_taus(p)?,
        None => vec![SL2Z::identity()],
    };
    let k_ranges = std::array::from_fn(|i| {
        if a.vary.contains(&(i + 1)) {
            a.k_min..=a.k_max
        } else {
            a.fixed_k..=a.fixed_k
        }
    });
    let classes = sweep(&SweepGrid { k_ranges, taus });
    let mut lines = String::new();
    for c in &classes {
        lines.push_str(&serde_json::to_string(c).expect("sweep serializes"));
        lines.push('\n');
    }
    match &a.out {
        Some(path) => {
            std::fs::write(path, &lines).map_err(|source| InputError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let _ = writeln!(out, "{:>8}  {:<24} {:>3}  {:<10} {:<10} representative", "count", "H1", "b1", "non-Kahler", "product");
            for c in &classes {
                let _ = writeln!(
                    out,
                    "{:>8}  {:<24} {:>3}  {:<10} {:<10} {}",
                    c.count,
                    c.class.h1.to_string(),
                    c.class.b1,
                    if c.class.kahler_obstructed { "yes" } else { "unknown" },
                    match c.class.product_status {
                        crate::surgery::ProductStatus::Obstructed => "obstructed",
                        crate::surgery::ProductStatus::Unknown => "unknown",
                    },
                    c.representative
                );
            }
            let _ = writeln!(out, "{} classes", classes.len());
        }
        None => {
            let _ = out.write_all(lines.as_bytes());
        }
    }
    Ok(EXIT_OK)
}

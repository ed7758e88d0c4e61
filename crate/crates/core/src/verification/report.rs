use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::exterior::{CoefficientMatrix, ExteriorError, Form, Region};

/// What was left over when a claim was checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Form(Form),
    Matrix(CoefficientMatrix),
    Text(String),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Form(form) => write!(f, "{}", form),
            Residual::Matrix(m) => write!(f, "{}", m),
            Residual::Text(t) => f.write_str(t),
        }
    }
}

/// One checked identity. `residual` is `None` exactly when it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub label: String,
    #[serde(serialize_with = "ser_region")]
    pub region: Option<Region>,
    pub passed: bool,
    #[serde(serialize_with = "ser_residual")]
    pub residual: Option<Residual>,
}

fn ser_region<S: serde::Serializer>(r: &Option<Region>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_residual<S: serde::Serializer>(r: &Option<Residual>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(r.to_string().trim_end()),
        None => s.serialize_none(),
    }
}

impl Claim {
    pub fn holds(label: &str, region: Option<Region>) -> Self {
        Claim {
            label: label.to_string(),
            region,
            passed: true,
            residual: None,
        }
    }

    pub fn fails(label: &str, region: Option<Region>, residual: Residual) -> Self {
        Claim {
            label: label.to_string(),
            region,
            passed: false,
            residual: Some(residual),
        }
    }

    /// Passes when `residual` is the zero form.
    pub fn zero_form(label: &str, region: Option<Region>, residual: Result<Form, ExteriorError>) -> Self {
        match residual {
            Ok(r) if r.is_zero() => Claim::holds(label, region),
            Ok(r) => Claim::fails(label, region, Residual::Form(r)),
            Err(e) => Claim::fails(label, region, Residual::Text(e.to_string())),
        }
    }

    /// Passes when `residual` is the zero matrix.
    pub fn zero_matrix(
        label: &str,
        region: Option<Region>,
        residual: Result<CoefficientMatrix, ExteriorError>,
    ) -> Self {
        match residual {
            Ok(r) if r.is_zero() => Claim::holds(label, region),
            Ok(r) => Claim::fails(label, region, Residual::Matrix(r)),
            Err(e) => Claim::fails(label, region, Residual::Text(e.to_string())),
        }
    }

    /// Passes when `check` returns `Ok(None)`.
    pub fn from_check(
        label: &str,
        region: Option<Region>,
        check: Result<Option<String>, ExteriorError>,
    ) -> Self {
        match check {
            Ok(None) => Claim::holds(label, region),
            Ok(Some(why)) => Claim::fails(label, region, Residual::Text(why)),
            Err(e) => Claim::fails(label, region, Residual::Text(e.to_string())),
        }
    }
}

/// A named batch of claims plus the canonical text of the objects checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub check: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub passed: bool,
    pub claims: Vec<Claim>,
    pub objects: BTreeMap<String, String>,
}

impl IdentityReport {
    pub fn new(check: &str) -> Self {
        IdentityReport {
            check: check.to_string(),
            parameters: BTreeMap::new(),
            passed: true,
            claims: Vec::new(),
            objects: BTreeMap::new(),
        }
    }

    pub fn parameter(&mut self, name: &str, value: impl Serialize) {
        self.parameters.insert(
            name.to_string(),
            serde_json::to_value(value).expect("parameters serialize"),
        );
    }

    pub fn object(&mut self, name: &str, text: impl fmt::Display) {
        self.objects.insert(name.to_string(), text.to_string());
    }

    pub fn push(&mut self, claim: Claim) {
        self.passed &= claim.passed;
        self.claims.push(claim);
    }

    pub fn claim(&self, label: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.label == label)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{}={}", k, v))
            .collect();
        writeln!(
            f,
            "{} ({}): {}",
            self.check,
            params.join(", "),
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for c in &self.claims {
            let region = c.region.map(|r| format!(" [{}]", r)).unwrap_or_default();
            writeln!(
                f,
                "  {} {}{}",
                if c.passed { "ok  " } else { "FAIL" },
                c.label,
                region
            )?;
            if let Some(r) = &c.residual {
                for line in r.to_string().lines() {
                    writeln!(f, "       {}", line)?;
                }
            }
        }
        Ok(())
    }
}

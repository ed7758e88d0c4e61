use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::verification::SurgeryParam;

#[derive(Debug, Parser)]
#[command(
    name = "luttinger",
    version,
    about = "Exact computations for coisotropic Luttinger surgery on the 6-torus"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First homology, Betti bounds and obstructions, on one line.
    H1(DescriptorArgs),
    /// Full invariant report with the relation matrix and the arithmetic behind it.
    Report(DescriptorArgs),
    /// Descriptor with H1 = Z^2 + Z/d1 + Z/d2 + Z/d3 + Z/d4, checked against that target.
    Realize(RealizeArgs),
    /// Symbolic checks of the symplectic form, almost complex structure and canonical section.
    VerifyForms(VerifyArgs),
    /// Intersection matrix of the essential 3-tori, dual tori and Betti numbers of the complement.
    Lemma6(JsonFlag),
    /// Group a grid of descriptors by invariant class.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct JsonFlag {
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DescriptorArgs {
    /// Descriptor JSON file: {"surgeries": [{"k": int, "tau": [[p, q], [r, s]]}, x4]}.
    #[arg(long, conflicts_with_all = ["k", "tau"])]
    pub descriptor: Option<PathBuf>,
    /// Surgery coefficients k1,k2,k3,k4.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Twist for surgery i as i:p,q,r,s (repeatable; default identity).
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Vec<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RealizeArgs {
    /// Target cyclic orders d1 d2 d3 d4 (0 gives a free summand).
    #[arg(num_args = 4, required = true, value_names = ["D1", "D2", "D3", "D4"])]
    pub d: Vec<u32>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Surgery coefficient: an integer or `symbolic`.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub k: SurgeryParam,
    /// Twist p,q,r,s applied to the canonical-class check.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
    /// Also run deliberately corrupted inputs (at symbolic k) and require them to fail.
    #[arg(long)]
    pub negative_controls: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k_min: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub k_max: i64,
    /// JSON array of twists [[p, q], [r, s]]; default identity only.
    #[arg(long)]
    pub tau_file: Option<PathBuf>,
    /// Write JSON lines here and print a summary table; without it the JSON
    /// lines go to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Slots (1-4) that range over [k-min, k-max]; the others use --fixed-k.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
    pub vary: Vec<usize>,
    /// Coefficient for slots not listed in --vary.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub fixed_k: i64,
}

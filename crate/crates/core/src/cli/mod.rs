//! Command-line front end: dataset ingestion, `analyze` and `witness`.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a bound fails
//! although its hypothesis passed (`analyze`) or when a sweep does not
//! reach its constant (`witness`).

mod analyze;
mod dataset;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use analyze::{analyze, AnalysisReport, AnalyzeOptions, ConditionSummary, DatasetSummary, Parameters, Skipped};
pub use dataset::{parse_csv, parse_dataset, parse_json, DataFormat};

use crate::bounds::{BandProductForm, DmReading, KmVariant};
use crate::conditions::{Band, Disk};
use crate::data::ComplexScalar;
use crate::error::{Error, Result};
use crate::report::TolerancePolicy;
use crate::witnesses::{default_schedule, geometric_schedule, sharpness_sweep, SweepResult, Theorem};

/// Largest acceptable `|last estimate − constant|` for `witness`.
pub const WITNESS_GAP_TOL: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(name = "rcbs", version, about = "Reverse Cauchy-Bunyakovsky-Schwarz bounds for weighted complex data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit parameters, check hypotheses and evaluate every applicable bound.
    Analyze(AnalyzeArgs),
    /// Sweep a theorem's extremal configuration toward its sharp constant.
    Witness(WitnessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KmArg {
    Literal,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Thm31Form {
    Half,
    Quarter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DmArg {
    BOverA,
    AOverB,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Dataset file (CSV or JSON).
    pub path: PathBuf,
    /// Input format; by default `.json` files are JSON and anything else CSV.
    #[arg(long, value_enum)]
    pub input_format: Option<DataFormat>,
    /// Disk center, `RE[,IM]`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "radius")]
    pub alpha: Option<ComplexScalar>,
    /// Disk radius.
    #[arg(long, requires = "alpha")]
    pub radius: Option<f64>,
    /// Lower band endpoint, `RE[,IM]`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "gamma_upper")]
    pub gamma: Option<ComplexScalar>,
    /// Upper band endpoint, `RE[,IM]`.
    #[arg(long = "Gamma", value_parser = parse_complex, allow_hyphen_values = true, requires = "gamma")]
    pub gamma_upper: Option<ComplexScalar>,
    /// Fit every parameter that is not overridden (the default).
    #[arg(long)]
    pub fit: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Relative tolerance for "the bound holds".
    #[arg(long, env = "RCBS_TOL")]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value = "corrected")]
    pub km_variant: KmArg,
    #[arg(long = "thm31-form", value_enum, default_value = "quarter")]
    pub thm31_form: Thm31Form,
    /// Reading of the band in the generalized Diaz-Metcalf bound.
    #[arg(long, value_enum, default_value = "b-over-a")]
    pub dm_reading: DmArg,
    /// Evaluate the normalized-weight bounds on the raw weights.
    #[arg(long)]
    pub raw_weights: bool,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    /// thm21, thm22, thm24, thm51, thm61, thm62 or thm52.
    pub theorem: String,
    /// Geometric schedule `LO,HI,POINTS`, swept from HI down to LO.
    #[arg(long)]
    pub sweep: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

/// `RE` or `RE,IM`.
pub fn parse_complex(s: &str) -> std::result::Result<ComplexScalar, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("not a number: '{t}'"));
    match parts.as_slice() {
        [re] => Ok(ComplexScalar::new(num(re)?, 0.0)),
        [re, im] => Ok(ComplexScalar::new(num(re)?, num(im)?)),
        _ => Err(format!("expected RE or RE,IM, got '{s}'")),
    }
}

impl AnalyzeArgs {
    pub fn options(&self) -> Result<AnalyzeOptions> {
        let mut policy = TolerancePolicy::default();
        if let Some(tol) = self.tol {
            policy = policy.with_verify_tol(tol)?;
        }
        policy.normalize_weights = !self.raw_weights;
        let disk = match (self.alpha, self.radius) {
            (Some(alpha), Some(r)) => Some(Disk::new(alpha, r)?),
            _ => None,
        };
        let band = match (self.gamma, self.gamma_upper) {
            (Some(lo), Some(hi)) => Some(Band::new(lo, hi)?),
            _ => None,
        };
        Ok(AnalyzeOptions {
            policy,
            disk,
            band,
            km_variant: match self.km_variant {
                KmArg::Literal => KmVariant::Literal,
                KmArg::Corrected => KmVariant::BSquaredCorrected,
            },
            band_product_form: match self.thm31_form {
                Thm31Form::Half => BandProductForm::LiteralHalf,
                Thm31Form::Quarter => BandProductForm::CorrectedQuarter,
            },
            dm_reading: match self.dm_reading {
                DmArg::BOverA => DmReading::BOverA,
                DmArg::AOverB => DmReading::AOverB,
            },
        })
    }
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<AnalysisReport> {
    let opts = args.options()?;
    let format = args.input_format.unwrap_or_else(|| DataFormat::from_path(&args.path));
    let ds = parse_dataset(&args.path, format)?;
    analyze(&ds, &opts)
}

pub fn cmd_witness(args: &WitnessArgs) -> Result<SweepResult> {
    let theorem: Theorem = args.theorem.parse()?;
    let schedule = match &args.sweep {
        None => default_schedule(),
        Some(spec) => {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            let [lo, hi, points] = parts.as_slice() else {
                return Err(Error::InvalidParams(format!("--sweep expects LO,HI,POINTS, got '{spec}'")));
            };
            let bad = |what: &str| Error::InvalidParams(format!("--sweep: bad {what} in '{spec}'"));
            geometric_schedule(
                lo.parse().map_err(|_| bad("LO"))?,
                hi.parse().map_err(|_| bad("HI"))?,
                points.parse().map_err(|_| bad("POINTS"))?,
            )?
        }
    };
    sharpness_sweep(theorem, &schedule)
}

pub fn sweep_text(s: &SweepResult) -> String {
    let mut out = format!("{} (sharp constant {})\n", s.theorem, s.expected_constant);
    out.push_str(&format!("{:>24}  {:>24}\n", "parameter", "estimate"));
    for (e, est) in s.schedule.iter().zip(&s.estimates) {
        out.push_str(&format!("{e:>24.16e}  {est:>24.16e}\n"));
    }
    out.push_str(&format!("limit gap {:.16e}\n", s.limit_gap));
    out
}

/// Run a parsed command line, writing to the given streams. Returns the
/// process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Analyze(args) => cmd_analyze(args).and_then(|report| {
            let rendered = match args.format {
                OutputFormat::Json => report.to_json()? + "\n",
                OutputFormat::Text => report.to_text(),
            };
            out.write_all(rendered.as_bytes())?;
            let violations = report.violations();
            for v in &violations {
                writeln!(err, "error: {} fails although its hypothesis holds (slack {:e})", v.bound_id, v.slack)?;
            }
            Ok(if violations.is_empty() { 0 } else { 2 })
        }),
        Command::Witness(args) => cmd_witness(args).and_then(|sweep| {
            let rendered = match args.format {
                OutputFormat::Json => serde_json::to_string_pretty(&sweep)
                    .map_err(|e| Error::InvalidParams(e.to_string()))?
                    + "\n",
                OutputFormat::Text => sweep_text(&sweep),
            };
            out.write_all(rendered.as_bytes())?;
            Ok(if sweep.limit_gap < WITNESS_GAP_TOL { 0 } else { 2 })
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

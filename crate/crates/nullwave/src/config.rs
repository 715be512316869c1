//! Command-line flags, the JSON config file, and their merge.
//!
//! Every knob may come from a flag or from the `--config` JSON object (keys
//! spelled like the flags, e.g. `"eval-points"`). Flags win.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use nullwave_core::design::{default_grid_size, AxisKind};
use nullwave_core::golay::{generate_golay_pair, GolayPair};
use nullwave_core::snropt::{HcdConfig, Optimizer};
use nullwave_core::Complex64;
use serde::Deserialize;

use crate::error::{CliError, CliResult};
use crate::io;

pub const OUT_ENV: &str = "NULLWAVE_OUT";

#[derive(Debug, Parser)]
#[command(name = "nullwave", version, about = "Doppler/delay resilient Golay pulse-train design")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Design (p, w) by the null-space method and write it as JSON.
    Design(DesignCmd),
    /// Ambiguity map, Doppler profile and PRSL of a design file.
    Evaluate(EvaluateCmd),
    /// NS design against the BD and PTM baselines on one evaluation grid.
    Compare(CompareCmd),
    /// SNR ratio versus N for each optimizer and BD.
    SnrSweep(SweepCmd),
    /// Four polarimetric channel maps and output matrices of a design file.
    Polar(PolarCmd),
    /// Write a Golay complementary pair as JSON.
    GolayGen(GolayCmd),
    /// Regenerate every figure dataset into a timestamped directory.
    Repro(ReproCmd),
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// JSON config file; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory (default: $NULLWAVE_OUT, else the current directory).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Seed for every randomized path.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GridArgs {
    /// Number of pulses N.
    #[arg(long)]
    pub n: Option<usize>,
    /// Resilience interval [lo, hi] in radians.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub interval: Option<Vec<f64>>,
    /// Number of grid angles M (default N − 1).
    #[arg(long)]
    pub m: Option<usize>,
    /// Axis: doppler or delay.
    #[arg(long)]
    pub kind: Option<String>,
    /// Relative rank tolerance for the null space.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OptArgs {
    /// first-basis, bs or hcd.
    #[arg(long)]
    pub optimizer: Option<String>,
    /// HCD restarts (default 20); restart 0 starts from the BS vertex.
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Maximum HCD sweeps per restart (default 100).
    #[arg(long)]
    pub sweeps: Option<usize>,
    /// HCD stops a restart once the step norm is at most this (default 1e-6).
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct EvalArgs {
    /// Built-in pair: `fixture64` or `golay:<log2 length>`.
    #[arg(long, conflicts_with = "pair_file")]
    pub pair: Option<String>,
    /// Pair JSON file `{"x": [...], "y": [...]}`.
    #[arg(long)]
    pub pair_file: Option<PathBuf>,
    /// Number of uniform evaluation angles.
    #[arg(long)]
    pub eval_points: Option<usize>,
    /// Evaluation interval [lo, hi] in radians.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub eval_interval: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct DesignCmd {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub opt: OptArgs,
}

#[derive(Debug, Args)]
pub struct EvaluateCmd {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Design JSON written by `design` (or a baseline file).
    #[arg(long)]
    pub design: Option<PathBuf>,
    #[command(flatten)]
    pub eval: EvalArgs,
}

#[derive(Debug, Args)]
pub struct CompareCmd {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub opt: OptArgs,
    #[command(flatten)]
    pub eval: EvalArgs,
}

#[derive(Debug, Args)]
pub struct SweepCmd {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub opt: OptArgs,
    /// Pulse counts, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    /// Methods, comma separated: first-basis, bs, hcd, bd.
    #[arg(long, value_delimiter = ',')]
    pub methods: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct PolarCmd {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Design JSON written by `design` (or a baseline file).
    #[arg(long)]
    pub design: Option<PathBuf>,
    #[command(flatten)]
    pub eval: EvalArgs,
    /// Scattering matrix as eight numbers: VV VH HV HH, each re im.
    #[arg(long, num_args = 8, allow_negative_numbers = true)]
    pub h: Option<Vec<f64>>,
    /// Output-matrix sample `lag,angle`; repeatable.
    #[arg(long)]
    pub at: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GolayCmd {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Length 2^log2 by recursive doubling.
    #[arg(long, conflicts_with = "fixture")]
    pub log2: Option<u32>,
    /// The built-in length-64 pair.
    #[arg(long)]
    pub fixture: bool,
}

#[derive(Debug, Args)]
pub struct ReproCmd {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub opt: OptArgs,
    /// Angles per map axis (metrics use --eval-points).
    #[arg(long)]
    pub map_points: Option<usize>,
    /// Angles for Doppler profiles and PRSL curves.
    #[arg(long)]
    pub eval_points: Option<usize>,
    /// Directory name under --out instead of the timestamp.
    #[arg(long)]
    pub label: Option<String>,
}

/// Schema of the `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub n: Option<usize>,
    pub interval: Option<[f64; 2]>,
    pub m: Option<usize>,
    pub kind: Option<String>,
    pub tol: Option<f64>,
    pub optimizer: Option<String>,
    pub restarts: Option<usize>,
    pub sweeps: Option<usize>,
    pub eps: Option<f64>,
    pub design: Option<PathBuf>,
    pub pair: Option<String>,
    pub pair_file: Option<PathBuf>,
    pub eval_points: Option<usize>,
    pub eval_interval: Option<[f64; 2]>,
    pub ns: Option<Vec<usize>>,
    pub methods: Option<Vec<String>>,
    pub h: Option<[f64; 8]>,
    pub at: Option<Vec<String>>,
    pub map_points: Option<usize>,
    pub label: Option<String>,
}

impl FileConfig {
    pub fn load(common: &CommonArgs) -> CliResult<Self> {
        match &common.config {
            Some(path) => io::read_json(path),
            None => Ok(Self::default()),
        }
    }
}

fn pair_of(v: Option<Vec<f64>>, name: &str) -> CliResult<Option<[f64; 2]>> {
    match v {
        None => Ok(None),
        Some(v) if v.len() == 2 => Ok(Some([v[0], v[1]])),
        Some(_) => Err(CliError::validation(format!("--{name} takes two numbers"))),
    }
}

fn check_interval(name: &str, [lo, hi]: [f64; 2]) -> CliResult<(f64, f64)> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(CliError::validation(format!(
            "{name} must be finite with lo <= hi, got [{lo}, {hi}]"
        )));
    }
    Ok((lo, hi))
}

pub fn output_dir(common: &CommonArgs, file: &FileConfig) -> PathBuf {
    common
        .out
        .clone()
        .or_else(|| file.out.clone())
        .or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

pub fn seed(common: &CommonArgs, file: &FileConfig) -> u64 {
    common.seed.or(file.seed).unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub n: usize,
    pub lo: f64,
    pub hi: f64,
    pub m: usize,
    pub kind: AxisKind,
    pub tol: Option<f64>,
}

impl GridSpec {
    pub fn resolve(args: &GridArgs, file: &FileConfig) -> CliResult<Self> {
        let n = args
            .n
            .or(file.n)
            .ok_or_else(|| CliError::validation("--n is required"))?;
        let spec = Self::resolve_for(n, args, file)?;
        Ok(spec)
    }

    /// Same as [`resolve`](Self::resolve) with `N` supplied by the caller
    /// (sweeps); `M` then defaults per N unless fixed explicitly.
    pub fn resolve_for(n: usize, args: &GridArgs, file: &FileConfig) -> CliResult<Self> {
        if n < 2 {
            return Err(CliError::validation(format!("N must be at least 2, got {n}")));
        }
        let interval = pair_of(args.interval.clone(), "interval")?
            .or(file.interval)
            .unwrap_or([0.0, 2.0]);
        let (lo, hi) = check_interval("interval", interval)?;
        let m = args.m.or(file.m).unwrap_or_else(|| default_grid_size(n));
        if m == 0 {
            return Err(CliError::validation("M must be at least 1"));
        }
        let kind_name = args.kind.clone().or_else(|| file.kind.clone());
        let kind = match kind_name {
            None => AxisKind::Doppler,
            Some(k) => AxisKind::parse(&k)
                .ok_or_else(|| CliError::validation(format!("unknown --kind {k:?}")))?,
        };
        let tol = args.tol.or(file.tol);
        if let Some(t) = tol {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(CliError::validation("--tol must be finite and nonnegative"));
            }
        }
        Ok(Self {
            n,
            lo,
            hi,
            m,
            kind,
            tol,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptSpec {
    pub optimizer: Optimizer,
    pub hcd: HcdConfig,
}

impl OptSpec {
    pub fn resolve(args: &OptArgs, file: &FileConfig, seed: u64) -> CliResult<Self> {
        let name = args
            .optimizer
            .clone()
            .or_else(|| file.optimizer.clone())
            .unwrap_or_else(|| Optimizer::FirstBasis.as_str().to_string());
        let optimizer = Optimizer::parse(&name)
            .ok_or_else(|| CliError::validation(format!("unknown --optimizer {name:?}")))?;
        let defaults = HcdConfig::default();
        let hcd = HcdConfig {
            restarts: args.restarts.or(file.restarts).unwrap_or(defaults.restarts),
            sweeps: args.sweeps.or(file.sweeps).unwrap_or(defaults.sweeps),
            eps: args.eps.or(file.eps).unwrap_or(defaults.eps),
            seed,
        };
        if hcd.restarts == 0 || hcd.sweeps == 0 {
            return Err(CliError::validation("--restarts and --sweeps must be positive"));
        }
        if hcd.eps.is_nan() || hcd.eps <= 0.0 {
            return Err(CliError::validation("--eps must be positive"));
        }
        Ok(Self { optimizer, hcd })
    }
}

#[derive(Debug, Clone)]
pub struct EvalSpec {
    pub pair: GolayPair,
    pub points: usize,
    pub interval: Option<(f64, f64)>,
}

pub fn builtin_pair(name: &str) -> CliResult<GolayPair> {
    if name == "fixture64" {
        return Ok(GolayPair::fixture64());
    }
    let log2 = name
        .strip_prefix("golay:")
        .and_then(|m| m.parse::<u32>().ok())
        .filter(|&m| m <= 20)
        .ok_or_else(|| {
            CliError::validation(format!(
                "unknown --pair {name:?}; use fixture64 or golay:<log2 length up to 20>"
            ))
        })?;
    Ok(generate_golay_pair(log2))
}

impl EvalSpec {
    pub fn resolve(args: &EvalArgs, file: &FileConfig) -> CliResult<Self> {
        let pair = if let Some(name) = &args.pair {
            builtin_pair(name)?
        } else if let Some(path) = &args.pair_file {
            io::read_pair(path)?
        } else if let Some(name) = &file.pair {
            builtin_pair(name)?
        } else if let Some(path) = &file.pair_file {
            io::read_pair(path)?
        } else {
            GolayPair::fixture64()
        };
        let points = args
            .eval_points
            .or(file.eval_points)
            .unwrap_or(nullwave_core::ambiguity::DEFAULT_EVAL_POINTS);
        if points == 0 {
            return Err(CliError::validation("--eval-points must be at least 1"));
        }
        let interval = pair_of(args.eval_interval.clone(), "eval-interval")?
            .or(file.eval_interval)
            .map(|iv| check_interval("eval-interval", iv))
            .transpose()?;
        Ok(Self {
            pair,
            points,
            interval,
        })
    }

    pub fn interval_or(&self, fallback: (f64, f64)) -> (f64, f64) {
        self.interval.unwrap_or(fallback)
    }
}

pub const FULL_INTERVAL: (f64, f64) = (0.0, PI);

pub fn design_path(flag: &Option<PathBuf>, file: &FileConfig) -> CliResult<PathBuf> {
    flag.clone()
        .or_else(|| file.design.clone())
        .ok_or_else(|| CliError::validation("--design is required"))
}

pub fn scattering(flag: &Option<Vec<f64>>, file: &FileConfig) -> CliResult<[Complex64; 4]> {
    let raw: Vec<f64> = match (flag, file.h) {
        (Some(v), _) => v.clone(),
        (None, Some(h)) => h.to_vec(),
        (None, None) => vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
    };
    if raw.len() != 8 || raw.iter().any(|v| !v.is_finite()) {
        return Err(CliError::validation("--h takes eight finite numbers"));
    }
    Ok([
        Complex64::new(raw[0], raw[1]),
        Complex64::new(raw[2], raw[3]),
        Complex64::new(raw[4], raw[5]),
        Complex64::new(raw[6], raw[7]),
    ])
}

/// Parses `lag,angle` samples.
pub fn sample_points(flag: &[String], file: &FileConfig) -> CliResult<Vec<(isize, f64)>> {
    let raw: Vec<String> = if !flag.is_empty() {
        flag.to_vec()
    } else {
        file.at.clone().unwrap_or_else(|| vec!["0,0".to_string()])
    };
    raw.iter()
        .map(|s| {
            let (k, t) = s
                .split_once(',')
                .ok_or_else(|| CliError::validation(format!("--at {s:?}: expected lag,angle")))?;
            let k = k
                .trim()
                .parse::<isize>()
                .map_err(|_| CliError::validation(format!("--at {s:?}: bad lag")))?;
            let t = t
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|t| t.is_finite())
                .ok_or_else(|| CliError::validation(format!("--at {s:?}: bad angle")))?;
            Ok((k, t))
        })
        .collect()
}

pub fn ensure_dir(path: &Path) -> CliResult<()> {
    std::fs::create_dir_all(path).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: FileConfig =
            serde_json::from_str(r#"{"n": 16, "interval": [0, 1], "eval-points": 11}"#).unwrap();
        let args = GridArgs {
            n: Some(24),
            ..Default::default()
        };
        let spec = GridSpec::resolve(&args, &file).unwrap();
        assert_eq!(spec.n, 24);
        assert_eq!((spec.lo, spec.hi), (0.0, 1.0));
        assert_eq!(spec.m, 23);
        let eval = EvalSpec::resolve(&EvalArgs::default(), &file).unwrap();
        assert_eq!(eval.points, 11);
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        assert!(serde_json::from_str::<FileConfig>(r#"{"npulses": 3}"#).is_err());
    }

    #[test]
    fn grid_validation() {
        let file = FileConfig::default();
        let bad = GridArgs {
            n: Some(8),
            interval: Some(vec![2.0, 1.0]),
            ..Default::default()
        };
        assert!(GridSpec::resolve(&bad, &file).is_err());
        let one = GridArgs {
            n: Some(1),
            ..Default::default()
        };
        assert!(GridSpec::resolve(&one, &file).is_err());
        assert!(GridSpec::resolve(&GridArgs::default(), &file).is_err());
    }

    #[test]
    fn builtin_pairs() {
        assert_eq!(builtin_pair("fixture64").unwrap().len(), 64);
        assert_eq!(builtin_pair("golay:3").unwrap().len(), 8);
        assert!(builtin_pair("golay:x").is_err());
    }

    #[test]
    fn sample_point_parsing() {
        let pts = sample_points(&["3, 0.5".into(), "-2,1e-1".into()], &FileConfig::default()).unwrap();
        assert_eq!(pts, vec![(3, 0.5), (-2, 0.1)]);
        assert!(sample_points(&["3".into()], &FileConfig::default()).is_err());
    }
}

//! On-disk formats: design and pair JSON, ambiguity-map CSV with JSON
//! sidecars, two-column metric CSVs.
//!
//! CSV floats use `{:.16e}` (17 significant digits); JSON floats use
//! serde_json's shortest round-trip representation. Both read back to the
//! identical `f64`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nullwave_core::ambiguity::AmbiguityMap;
use nullwave_core::baselines::BaselineDesign;
use nullwave_core::design::{AxisKind, ResidualReport, WaveformDesign};
use nullwave_core::golay::{BiphaseSequence, GolayPair};
use nullwave_core::snropt::OptimizerReport;
use nullwave_core::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const SCHEME_NS: &str = "NS";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidualJson {
    pub null: f64,
    pub mainlobe: f64,
    pub null_ok: bool,
    pub mainlobe_ok: bool,
}

impl From<ResidualReport> for ResidualJson {
    fn from(r: ResidualReport) -> Self {
        Self {
            null: r.null_residual,
            mainlobe: r.mainlobe_residual,
            null_ok: r.null_ok,
            mainlobe_ok: r.mainlobe_ok,
        }
    }
}

/// Serialized `(p, w)` with the grid it was designed against.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignFile {
    /// `NS` for null-space designs, `BD` or `PTM` for baselines.
    pub scheme: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<[f64; 2]>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimizer: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snr_ratio: Option<f64>,
    pub p: Vec<i8>,
    pub w: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<ResidualJson>,
}

impl DesignFile {
    pub fn from_design(
        design: &WaveformDesign,
        optimizer: &str,
        report: ResidualReport,
        snr_ratio: f64,
    ) -> Self {
        let (lo, hi) = design.grid.interval();
        Self {
            scheme: SCHEME_NS.to_string(),
            n: design.pulses(),
            kind: design.kind().as_str().to_string(),
            interval: Some([lo, hi]),
            m: Some(design.grid.len()),
            optimizer: Some(optimizer.to_string()),
            snr_ratio: Some(snr_ratio),
            p: design.p.clone(),
            w: design.w.iter().map(|c| [c.re, c.im]).collect(),
            residual: Some(report.into()),
        }
    }

    pub fn from_baseline(design: &BaselineDesign, snr_ratio: f64) -> Self {
        Self {
            scheme: design.scheme.as_str().to_string(),
            n: design.p.len(),
            kind: AxisKind::Doppler.as_str().to_string(),
            interval: None,
            m: None,
            optimizer: None,
            snr_ratio: Some(snr_ratio),
            p: design.p.clone(),
            w: design.w.iter().map(|c| [c.re, c.im]).collect(),
            residual: None,
        }
    }

    pub fn weights(&self) -> Vec<Complex64> {
        self.w.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
    }

    pub fn axis(&self) -> CliResult<AxisKind> {
        AxisKind::parse(&self.kind)
            .ok_or_else(|| CliError::validation(format!("unknown axis kind {:?}", self.kind)))
    }

    /// Structural checks that serde cannot express.
    pub fn check(&self) -> CliResult<()> {
        if self.n == 0 {
            return Err(CliError::validation("design has N = 0"));
        }
        if self.p.len() != self.n || self.w.len() != self.n {
            return Err(CliError::validation(format!(
                "design declares N = {} but has {} schedule entries and {} weights",
                self.n,
                self.p.len(),
                self.w.len()
            )));
        }
        if let Some(i) = self.p.iter().position(|&s| s != 1 && s != -1) {
            return Err(CliError::validation(format!(
                "p[{i}] = {} is not ±1",
                self.p[i]
            )));
        }
        if let Some(i) = self.w.iter().position(|c| !c[0].is_finite() || !c[1].is_finite()) {
            return Err(CliError::validation(format!("w[{i}] is not finite")));
        }
        self.axis()?;
        if let Some([lo, hi]) = self.interval {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(CliError::validation(format!("invalid interval [{lo}, {hi}]")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl PairFile {
    pub fn from_pair(pair: &GolayPair) -> Self {
        let widen = |s: &BiphaseSequence| s.iter().map(i64::from).collect();
        Self {
            x: widen(pair.x()),
            y: widen(pair.y()),
        }
    }

    pub fn to_pair(&self) -> CliResult<GolayPair> {
        let x = BiphaseSequence::from_values(&self.x)?;
        let y = BiphaseSequence::from_values(&self.y)?;
        Ok(GolayPair::new(x, y)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizerJson {
    pub optimizer: String,
    pub lambda: Vec<[f64; 2]>,
    pub traces: Vec<Vec<f64>>,
    pub best_restart: usize,
    pub objective: f64,
    pub snr_ratio: f64,
    pub restarts: usize,
    pub sweeps: usize,
    pub eps: f64,
    pub seed: u64,
}

impl OptimizerJson {
    pub fn new(report: &OptimizerReport, cfg: &nullwave_core::snropt::HcdConfig) -> Self {
        Self {
            optimizer: "hcd".into(),
            lambda: report.lambda.iter().map(|c| [c.re, c.im]).collect(),
            traces: report.traces.clone(),
            best_restart: report.best_restart,
            objective: report.objective,
            snr_ratio: report.snr_ratio,
            restarts: cfg.restarts,
            sweeps: cfg.sweeps,
            eps: cfg.eps,
            seed: cfg.seed,
        }
    }
}

/// Metadata written next to every map CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapSidecar {
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub kind: String,
    pub interval: [f64; 2],
    pub normalization_peak: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel: Option<String>,
}

impl MapSidecar {
    pub fn new(map: &AmbiguityMap, normalization_peak: f64, channel: Option<&str>) -> Self {
        let angles = map.angles();
        let lo = angles.first().copied().unwrap_or(0.0);
        let hi = angles.last().copied().unwrap_or(0.0);
        Self {
            l: map.code_len(),
            n: map.pulses(),
            kind: map.kind().as_str().to_string(),
            interval: [lo, hi],
            normalization_peak,
            channel: channel.map(str::to_string),
        }
    }
}

pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

pub fn fmt_complex(c: Complex64) -> String {
    format!("{}{}j", fmt_f64(c.re), signed(c.im))
}

fn signed(v: f64) -> String {
    let s = fmt_f64(v);
    if s.starts_with('-') { s } else { format!("+{s}") }
}

/// Parses `re±imj` as written by [`fmt_complex`].
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let body = s.strip_suffix('j')?;
    // The imaginary sign is the last `+`/`-` not directly after an exponent marker.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'e')?;
    let re = body[..split].parse().ok()?;
    let im = body[split..].trim_start_matches('+').parse().ok()?;
    Some(Complex64::new(re, im))
}

fn map_csv(map: &AmbiguityMap, cell: impl Fn(usize) -> String) -> String {
    let width = map.angles().len();
    let mut out = String::from("lag");
    for &a in map.angles() {
        out.push(',');
        out.push_str(&fmt_f64(a));
    }
    out.push('\n');
    for (row, lag) in map.lags().enumerate() {
        let _ = write!(out, "{lag}");
        for col in 0..width {
            out.push(',');
            out.push_str(&cell(row * width + col));
        }
        out.push('\n');
    }
    out
}

/// Complex map CSV: header `lag,θ_0,θ_1,…`, one row per lag.
pub fn complex_map_csv(map: &AmbiguityMap) -> String {
    let values = map.values();
    map_csv(map, |i| fmt_complex(values[i]))
}

/// `20·log10(|A|/reference)` in the same layout.
pub fn db_map_csv(map: &AmbiguityMap, reference: f64) -> String {
    let db = map.db_view(reference);
    map_csv(map, |i| fmt_f64(db[i]))
}

pub fn two_column_csv(header: (&str, &str), xs: &[f64], ys: &[f64]) -> String {
    let mut out = format!("{},{}\n", header.0, header.1);
    for (x, y) in xs.iter().zip(ys) {
        let _ = writeln!(out, "{},{}", fmt_f64(*x), fmt_f64(*y));
    }
    out
}

pub fn write_text(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
        }
    }
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::validation(format!("serializing {}: {e}", path.display())))?;
    text.push('\n');
    write_text(path, &text)
}

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Parses JSON, reporting the file and line/column on failure.
pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

pub fn read_design(path: &Path) -> CliResult<DesignFile> {
    let design: DesignFile = read_json(path)?;
    design
        .check()
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    Ok(design)
}

pub fn read_pair(path: &Path) -> CliResult<GolayPair> {
    let file: PairFile = read_json(path)?;
    file.to_pair()
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

/// Writes `<stem>.csv`, `<stem>_db.csv` and `<stem>.json` for one map.
pub fn write_map(
    dir: &Path,
    stem: &str,
    map: &AmbiguityMap,
    reference: f64,
    channel: Option<&str>,
    complex: bool,
) -> CliResult<()> {
    if complex {
        write_text(&dir.join(format!("{stem}.csv")), &complex_map_csv(map))?;
    }
    write_text(&dir.join(format!("{stem}_db.csv")), &db_map_csv(map, reference))?;
    write_json(
        &dir.join(format!("{stem}.json")),
        &MapSidecar::new(map, reference, channel),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_format_round_trips() {
        for c in [
            Complex64::new(1.0, -2.5e-300),
            Complex64::new(-0.0, 0.0),
            Complex64::new(-3.25e17, 7.0e-9),
            Complex64::new(std::f64::consts::PI, -std::f64::consts::E),
        ] {
            let s = fmt_complex(c);
            let back = parse_complex(&s).unwrap();
            assert_eq!(back, c, "{s}");
        }
        assert_eq!(fmt_complex(Complex64::new(1.0, 2.0)), "1.0000000000000000e0+2.0000000000000000e0j");
    }

    #[test]
    fn f64_format_is_lossless() {
        for v in [0.1, 1.0 / 3.0, 2.0f64.sqrt(), 1e-310, f64::MAX] {
            assert_eq!(fmt_f64(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(fmt_f64(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn design_file_rejects_bad_schedule() {
        let mut d = DesignFile {
            scheme: "NS".into(),
            n: 2,
            kind: "doppler".into(),
            interval: Some([0.0, 1.0]),
            m: Some(1),
            optimizer: None,
            snr_ratio: None,
            p: vec![1, 0],
            w: vec![[1.0, 0.0], [1.0, 0.0]],
            residual: None,
        };
        assert!(d.check().is_err());
        d.p = vec![1, -1];
        assert!(d.check().is_ok());
        d.w.pop();
        assert!(d.check().is_err());
    }
}

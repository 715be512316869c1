use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use nullwave_core::ambiguity::{
    delay_ambiguity, discrete_ambiguity, sidelobe_metrics, uniform_angles, AmbiguityMap,
    SidelobeMetrics,
};
use nullwave_core::baselines::{binomial_design, ptm_schedule, BaselineDesign};
use nullwave_core::design::{
    build_design_matrix, null_space, validate_design, AxisKind, ResilienceGrid,
};
use nullwave_core::golay::{autocorrelation, generate_golay_pair, GolayPair};
use nullwave_core::polarimetric::{output_matrix, polarimetric_ambiguities, ScatteringMatrix};
use nullwave_core::snropt::{optimize_design, snr_ratio, Optimizer};
use nullwave_core::Complex64;
use serde::Serialize;

use crate::config::{
    design_path, ensure_dir, output_dir, sample_points, scattering, seed, Cli, Command,
    CompareCmd, DesignCmd, EvalSpec, EvaluateCmd, FileConfig, GolayCmd,
    GridArgs, GridSpec, OptSpec, PolarCmd, ReproCmd, SweepCmd, FULL_INTERVAL,
};
use crate::error::{CliError, CliResult};
use crate::io::{self, DesignFile, OptimizerJson, PairFile};

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Design(cmd) => cmd_design(cmd),
        Command::Evaluate(cmd) => cmd_evaluate(cmd),
        Command::Compare(cmd) => cmd_compare(cmd),
        Command::SnrSweep(cmd) => cmd_snr_sweep(cmd),
        Command::Polar(cmd) => cmd_polar(cmd),
        Command::GolayGen(cmd) => cmd_golay_gen(cmd),
        Command::Repro(cmd) => cmd_repro(cmd),
    }
}

/// A null-space design together with its serialized form.
pub struct NsOutcome {
    pub file: DesignFile,
    pub nullity: usize,
    pub optimizer: Option<OptimizerJson>,
}

/// Grid → matrix → null space → optimizer → validated design.
pub fn ns_design(grid: &GridSpec, opt: &OptSpec) -> CliResult<NsOutcome> {
    if grid.m >= grid.n {
        eprintln!(
            "warning: M = {} >= N = {}; a null space exists only if the grid is rank deficient",
            grid.m, grid.n
        );
    }
    let rgrid = ResilienceGrid::uniform(grid.lo, grid.hi, grid.m, grid.kind)?;
    let matrix = build_design_matrix(&rgrid, grid.n)?;
    let basis = null_space(&matrix, grid.tol)?;
    let (design, report) = optimize_design(&matrix, &basis, opt.optimizer, &opt.hcd)?;
    let residual = validate_design(&design.p, &design.w, &matrix)?;
    if !residual.is_valid() {
        return Err(CliError::validation(format!(
            "design fails validation: ‖E(p∘w)‖/‖w‖ = {:e}, ‖Ew‖/‖w‖ = {:e}",
            residual.null_residual, residual.mainlobe_residual
        )));
    }
    let ratio = snr_ratio(&design.w)?;
    Ok(NsOutcome {
        file: DesignFile::from_design(&design, opt.optimizer.as_str(), residual, ratio),
        nullity: basis.nullity(),
        optimizer: report.map(|r| OptimizerJson::new(&r, &opt.hcd)),
    })
}

fn baseline_file(d: &BaselineDesign) -> CliResult<DesignFile> {
    Ok(DesignFile::from_baseline(d, snr_ratio(&d.w)?))
}

/// Re-checks a design that records its grid; baselines carry none.
pub fn revalidate(file: &DesignFile) -> CliResult<()> {
    let (Some([lo, hi]), Some(m)) = (file.interval, file.m) else {
        return Ok(());
    };
    let grid = ResilienceGrid::uniform(lo, hi, m, file.axis()?)?;
    let matrix = build_design_matrix(&grid, file.n)?;
    let report = validate_design(&file.p, &file.weights(), &matrix)?;
    if !report.is_valid() {
        return Err(CliError::validation(format!(
            "design fails re-validation on its grid: ‖E(p∘w)‖/‖w‖ = {:e}, ‖Ew‖/‖w‖ = {:e}",
            report.null_residual, report.mainlobe_residual
        )));
    }
    Ok(())
}

pub fn ambiguity_of(file: &DesignFile, pair: &GolayPair, angles: &[f64]) -> CliResult<AmbiguityMap> {
    let w = file.weights();
    Ok(match file.axis()? {
        AxisKind::Doppler => discrete_ambiguity(pair, &file.p, &w, angles)?,
        AxisKind::Delay => delay_ambiguity(pair, &file.p, &w, angles)?,
    })
}

#[derive(Serialize)]
struct MetricsSummary<'a> {
    scheme: &'a str,
    kind: &'a str,
    eval_interval: [f64; 2],
    points: usize,
    mainlobe_peak: f64,
    max_prsl_db: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_prsl_db_in_design_interval: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    snr_ratio: Option<f64>,
}

fn max_within(metrics: &SidelobeMetrics, interval: Option<[f64; 2]>) -> Option<f64> {
    let [lo, hi] = interval?;
    let slack = 1e-12 * (1.0 + hi.abs());
    let v = metrics
        .angles
        .iter()
        .zip(&metrics.prsl_db)
        .filter(|(&a, _)| a >= lo - slack && a <= hi + slack)
        .map(|(_, &v)| v)
        .fold(f64::NEG_INFINITY, f64::max);
    Some(v)
}

fn write_metrics(dir: &Path, suffix: &str, metrics: &SidelobeMetrics) -> CliResult<()> {
    io::write_text(
        &dir.join(format!("doppler_profile{suffix}.csv")),
        &io::two_column_csv(("angle", "magnitude"), &metrics.angles, &metrics.doppler_profile),
    )?;
    io::write_text(
        &dir.join(format!("prsl{suffix}.csv")),
        &io::two_column_csv(("angle", "prsl_db"), &metrics.angles, &metrics.prsl_db),
    )?;
    io::write_text(
        &dir.join(format!("relative_prsl{suffix}.csv")),
        &io::two_column_csv(
            ("angle", "relative_prsl_db"),
            &metrics.angles,
            &metrics.relative_prsl_db,
        ),
    )
}

/// Map, metrics and summary for one design into `dir`.
fn evaluate_into(
    dir: &Path,
    suffix: &str,
    file: &DesignFile,
    pair: &GolayPair,
    angles: &[f64],
    complex_map: bool,
) -> CliResult<SidelobeMetrics> {
    let map = ambiguity_of(file, pair, angles)?;
    let metrics = sidelobe_metrics(&map)?;
    io::write_map(dir, &format!("af{suffix}"), &map, map.peak_magnitude(), None, complex_map)?;
    write_metrics(dir, suffix, &metrics)?;
    let summary = MetricsSummary {
        scheme: &file.scheme,
        kind: &file.kind,
        eval_interval: [angles[0], angles[angles.len() - 1]],
        points: angles.len(),
        mainlobe_peak: metrics.mainlobe_peak,
        max_prsl_db: metrics.max_prsl_db(),
        max_prsl_db_in_design_interval: max_within(&metrics, file.interval),
        snr_ratio: file.snr_ratio,
    };
    io::write_json(&dir.join(format!("metrics{suffix}.json")), &summary)?;
    Ok(metrics)
}

fn cmd_design(cmd: DesignCmd) -> CliResult<()> {
    let file = FileConfig::load(&cmd.common)?;
    let grid = GridSpec::resolve(&cmd.grid, &file)?;
    let opt = OptSpec::resolve(&cmd.opt, &file, seed(&cmd.common, &file))?;
    let out = output_dir(&cmd.common, &file);
    let outcome = ns_design(&grid, &opt)?;
    io::write_json(&out.join("design.json"), &outcome.file)?;
    if let Some(report) = &outcome.optimizer {
        io::write_json(&out.join("optimizer.json"), report)?;
    }
    let res = outcome.file.residual.expect("NS designs carry residuals");
    println!(
        "design: N={} M={} interval=[{}, {}] kind={} nullity={} optimizer={} snr_ratio={:.6} null_residual={:.3e} mainlobe_residual={:.3e}",
        grid.n,
        grid.m,
        grid.lo,
        grid.hi,
        grid.kind,
        outcome.nullity,
        opt.optimizer.as_str(),
        outcome.file.snr_ratio.unwrap_or(f64::NAN),
        res.null,
        res.mainlobe
    );
    println!("wrote {}", out.join("design.json").display());
    Ok(())
}

fn eval_angles(eval: &EvalSpec, fallback: (f64, f64)) -> Vec<f64> {
    let (lo, hi) = eval.interval_or(fallback);
    uniform_angles(lo, hi, eval.points)
}

fn design_interval(file: &DesignFile) -> (f64, f64) {
    file.interval.map(|[lo, hi]| (lo, hi)).unwrap_or(FULL_INTERVAL)
}

fn cmd_evaluate(cmd: EvaluateCmd) -> CliResult<()> {
    let cfg = FileConfig::load(&cmd.common)?;
    let design = io::read_design(&design_path(&cmd.design, &cfg)?)?;
    revalidate(&design)?;
    let eval = EvalSpec::resolve(&cmd.eval, &cfg)?;
    let out = output_dir(&cmd.common, &cfg);
    let angles = eval_angles(&eval, design_interval(&design));
    let metrics = evaluate_into(&out, "", &design, &eval.pair, &angles, true)?;
    println!(
        "evaluate: scheme={} L={} points={} max_prsl_db={:.3}",
        design.scheme,
        eval.pair.len(),
        angles.len(),
        metrics.max_prsl_db()
    );
    Ok(())
}

fn cmd_compare(cmd: CompareCmd) -> CliResult<()> {
    let cfg = FileConfig::load(&cmd.common)?;
    let grid = GridSpec::resolve(&cmd.grid, &cfg)?;
    let opt = OptSpec::resolve(&cmd.opt, &cfg, seed(&cmd.common, &cfg))?;
    let eval = EvalSpec::resolve(&cmd.eval, &cfg)?;
    let out = output_dir(&cmd.common, &cfg);
    let angles = eval_angles(&eval, FULL_INTERVAL);
    compare_into(&out, &grid, &opt, &eval.pair, &angles, false)?;
    Ok(())
}

/// NS, BD and PTM side by side, plus combined plot-ready tables.
fn compare_into(
    dir: &Path,
    grid: &GridSpec,
    opt: &OptSpec,
    pair: &GolayPair,
    angles: &[f64],
    complex_map: bool,
) -> CliResult<()> {
    let ns = ns_design(grid, opt)?;
    let designs = [
        ("ns", ns.file),
        ("bd", baseline_file(&binomial_design(grid.n)?)?),
        ("ptm", baseline_file(&ptm_schedule(grid.n)?)?),
    ];
    let mut all = Vec::new();
    for (tag, file) in &designs {
        io::write_json(&dir.join(format!("design_{tag}.json")), file)?;
        let m = evaluate_into(dir, &format!("_{tag}"), file, pair, angles, complex_map)?;
        println!(
            "compare: {:<3} snr_ratio={:.6} max_prsl_db={:.3}",
            file.scheme,
            file.snr_ratio.unwrap_or(f64::NAN),
            m.max_prsl_db()
        );
        all.push(m);
    }
    let table = |pick: fn(&SidelobeMetrics) -> &Vec<f64>| {
        let mut s = String::from("angle,NS,BD,PTM\n");
        for (i, &a) in angles.iter().enumerate() {
            let _ = write!(s, "{}", io::fmt_f64(a));
            for m in &all {
                let _ = write!(s, ",{}", io::fmt_f64(pick(m)[i]));
            }
            s.push('\n');
        }
        s
    };
    io::write_text(&dir.join("prsl_compare.csv"), &table(|m| &m.prsl_db))?;
    io::write_text(&dir.join("doppler_compare.csv"), &table(|m| &m.doppler_profile))
}

pub const SWEEP_METHODS: [&str; 4] = ["first-basis", "bs", "hcd", "bd"];

#[derive(Serialize)]
struct SweepHcd {
    #[serde(rename = "N")]
    n: usize,
    report: OptimizerJson,
}

/// One row per `(N, method)`; failed cells are left empty.
pub fn snr_sweep(
    ns: &[usize],
    methods: &[String],
    grid_args: &GridArgs,
    cfg: &FileConfig,
    opt: &OptSpec,
) -> CliResult<(String, String)> {
    for m in methods {
        if !SWEEP_METHODS.contains(&m.as_str()) {
            return Err(CliError::validation(format!(
                "unknown method {m:?}; expected one of {}",
                SWEEP_METHODS.join(", ")
            )));
        }
    }
    let mut csv = String::from("N,method,snr_ratio\n");
    let mut hcd_reports = Vec::new();
    for &n in ns {
        for method in methods {
            let cell = if method == "bd" {
                binomial_design(n)
                    .map_err(CliError::from)
                    .and_then(|d| Ok(snr_ratio(&d.w)?))
            } else {
                let optimizer = Optimizer::parse(method).expect("checked above");
                let spec = OptSpec {
                    optimizer,
                    hcd: opt.hcd,
                };
                GridSpec::resolve_for(n, grid_args, cfg)
                    .and_then(|g| ns_design(&g, &spec))
                    .map(|o| {
                        if let Some(report) = o.optimizer {
                            hcd_reports.push(SweepHcd { n, report });
                        }
                        o.file.snr_ratio.unwrap_or(f64::NAN)
                    })
            };
            match cell {
                Ok(v) => {
                    let _ = writeln!(csv, "{n},{method},{}", io::fmt_f64(v));
                }
                Err(e) => {
                    eprintln!("snr-sweep: N={n} {method}: {e}");
                    let _ = writeln!(csv, "{n},{method},");
                }
            }
        }
    }
    let mut json = serde_json::to_string_pretty(&hcd_reports)
        .map_err(|e| CliError::validation(e.to_string()))?;
    json.push('\n');
    Ok((csv, json))
}

fn sweep_lists(cmd_ns: &Option<Vec<usize>>, cmd_methods: &Option<Vec<String>>, cfg: &FileConfig) -> (Vec<usize>, Vec<String>) {
    let ns = cmd_ns
        .clone()
        .or_else(|| cfg.ns.clone())
        .unwrap_or_else(|| vec![8, 16, 24, 32, 40, 48]);
    let methods = cmd_methods
        .clone()
        .or_else(|| cfg.methods.clone())
        .unwrap_or_else(|| SWEEP_METHODS.iter().map(|s| s.to_string()).collect());
    (ns, methods)
}

fn cmd_snr_sweep(cmd: SweepCmd) -> CliResult<()> {
    let cfg = FileConfig::load(&cmd.common)?;
    let opt = OptSpec::resolve(&cmd.opt, &cfg, seed(&cmd.common, &cfg))?;
    let (ns, methods) = sweep_lists(&cmd.ns, &cmd.methods, &cfg);
    let out = output_dir(&cmd.common, &cfg);
    let (csv, json) = snr_sweep(&ns, &methods, &cmd.grid, &cfg, &opt)?;
    io::write_text(&out.join("snr_sweep.csv"), &csv)?;
    io::write_text(&out.join("snr_sweep_hcd.json"), &json)?;
    print!("{csv}");
    Ok(())
}

#[derive(Serialize)]
struct OutputSample {
    lag: isize,
    angle: f64,
    #[serde(rename = "U")]
    u: [[[f64; 2]; 2]; 2],
}

#[derive(Serialize)]
struct OutputMatrices {
    #[serde(rename = "H")]
    h: [[[f64; 2]; 2]; 2],
    samples: Vec<OutputSample>,
}

fn as_pairs(m: [[Complex64; 2]; 2]) -> [[[f64; 2]; 2]; 2] {
    m.map(|row| row.map(|c| [c.re, c.im]))
}

#[allow(clippy::too_many_arguments)]
fn polar_into(
    dir: &Path,
    suffix: &str,
    design: &DesignFile,
    pair: &GolayPair,
    angles: &[f64],
    h: &ScatteringMatrix,
    points: &[(isize, f64)],
    complex_map: bool,
) -> CliResult<f64> {
    let w = design.weights();
    let amb = polarimetric_ambiguities(pair, &design.p, &w, angles)?;
    let peak = amb.mainlobe_peak();
    let mut worst_cross = 0.0f64;
    for (name, map) in amb.channels() {
        io::write_map(dir, &format!("polar_{name}{suffix}"), map, peak, Some(name), complex_map)?;
        if name == "VH" || name == "HV" {
            worst_cross = worst_cross.max(map.peak_magnitude());
        }
    }
    let mut samples = Vec::with_capacity(points.len());
    for &(lag, angle) in points {
        let at = polarimetric_ambiguities(pair, &design.p, &w, &[angle])?;
        let u = output_matrix(h, &at, lag, 0)?;
        samples.push(OutputSample {
            lag,
            angle,
            u: as_pairs(u),
        });
    }
    io::write_json(
        &dir.join(format!("output_matrix{suffix}.json")),
        &OutputMatrices {
            h: as_pairs(h.as_array()),
            samples,
        },
    )?;
    Ok(20.0 * (worst_cross / peak).log10())
}

fn cmd_polar(cmd: PolarCmd) -> CliResult<()> {
    let cfg = FileConfig::load(&cmd.common)?;
    let design = io::read_design(&design_path(&cmd.design, &cfg)?)?;
    revalidate(&design)?;
    let eval = EvalSpec::resolve(&cmd.eval, &cfg)?;
    let [vv, vh, hv, hh] = scattering(&cmd.h, &cfg)?;
    let h = ScatteringMatrix { vv, vh, hv, hh };
    let points = sample_points(&cmd.at, &cfg)?;
    let out = output_dir(&cmd.common, &cfg);
    let angles = eval_angles(&eval, design_interval(&design));
    let cross_db = polar_into(&out, "", &design, &eval.pair, &angles, &h, &points, true)?;
    println!(
        "polar: scheme={} points={} max_cross_channel_db={:.3}",
        design.scheme,
        angles.len(),
        cross_db
    );
    Ok(())
}

fn cmd_golay_gen(cmd: GolayCmd) -> CliResult<()> {
    let cfg = FileConfig::load(&cmd.common)?;
    let out = output_dir(&cmd.common, &cfg);
    let pair = if cmd.fixture {
        GolayPair::fixture64()
    } else {
        let m = cmd.log2.unwrap_or(6);
        if m > 20 {
            return Err(CliError::validation("--log2 must be at most 20"));
        }
        generate_golay_pair(m)
    };
    let cx = autocorrelation(pair.x());
    let cy = autocorrelation(pair.y());
    let mut csv = String::from("lag,Cx,Cy,sum\n");
    for ((lag, a), &b) in cx.entries().zip(cy.values()) {
        let _ = writeln!(csv, "{lag},{a},{b},{}", a + b);
    }
    io::write_json(&out.join("pair.json"), &PairFile::from_pair(&pair))?;
    io::write_text(&out.join("pair_correlation.csv"), &csv)?;
    println!(
        "golay-gen: L={} complementary={}",
        pair.len(),
        pair.is_complementary()
    );
    Ok(())
}

#[derive(Serialize)]
struct ReproManifest {
    pair: &'static str,
    eval_points: usize,
    map_points: usize,
    optimizer_restarts: usize,
    optimizer_sweeps: usize,
    optimizer_eps: f64,
    seed: u64,
    figures: Vec<(&'static str, &'static str)>,
}

fn cmd_repro(cmd: ReproCmd) -> CliResult<()> {
    let cfg = FileConfig::load(&cmd.common)?;
    let opt = OptSpec::resolve(&cmd.opt, &cfg, seed(&cmd.common, &cfg))?;
    let label = cmd
        .label
        .clone()
        .or_else(|| cfg.label.clone())
        .unwrap_or_else(|| format!("repro-{}", chrono::Utc::now().format("%Y%m%dT%H%M%SZ")));
    let root = output_dir(&cmd.common, &cfg).join(label);
    let eval_points = cmd
        .eval_points
        .or(cfg.eval_points)
        .unwrap_or(nullwave_core::ambiguity::DEFAULT_EVAL_POINTS);
    let map_points = cmd.map_points.or(cfg.map_points).unwrap_or(401);
    if eval_points == 0 || map_points == 0 {
        return Err(CliError::validation("point counts must be positive"));
    }
    repro_into(&root, &opt, eval_points, map_points)?;
    println!("repro: wrote {}", root.display());
    Ok(())
}

/// The full figure pipeline at N = 48 with the length-64 fixture.
pub fn repro_into(root: &Path, opt: &OptSpec, eval_points: usize, map_points: usize) -> CliResult<()> {
    ensure_dir(root)?;
    let pair = GolayPair::fixture64();
    let first = OptSpec {
        optimizer: Optimizer::FirstBasis,
        hcd: opt.hcd,
    };
    let spec = |lo, hi| GridSpec {
        n: 48,
        lo,
        hi,
        m: 47,
        kind: AxisKind::Doppler,
        tol: None,
    };
    let sub = |name: &str| -> CliResult<PathBuf> {
        let d = root.join(name);
        ensure_dir(&d)?;
        Ok(d)
    };
    let map_angles = uniform_angles(FULL_INTERVAL.0, FULL_INTERVAL.1, map_points);
    let metric_angles = uniform_angles(FULL_INTERVAL.0, FULL_INTERVAL.1, eval_points);

    let ns2 = ns_design(&spec(0.0, 2.0), &first)?.file;
    let nspi = ns_design(&spec(FULL_INTERVAL.0, FULL_INTERVAL.1), &first)?.file;
    let bd = baseline_file(&binomial_design(48)?)?;

    let fig1 = sub("fig01_schedule")?;
    io::write_json(&fig1.join("design.json"), &ns2)?;
    let mut schedule = String::from("n,p,abs_w\n");
    for (n, (&p, w)) in ns2.p.iter().zip(ns2.weights()).enumerate() {
        let _ = writeln!(schedule, "{n},{p},{}", io::fmt_f64(w.norm()));
    }
    io::write_text(&fig1.join("schedule.csv"), &schedule)?;

    for (dir, tag, file) in [
        ("fig02_af_ns_0_2", "ns_0_2", &ns2),
        ("fig03_af_ns_0_pi", "ns_0_pi", &nspi),
        ("fig04_af_bd", "bd", &bd),
    ] {
        let d = sub(dir)?;
        io::write_json(&d.join("design.json"), file)?;
        let map = ambiguity_of(file, &pair, &map_angles)?;
        io::write_map(&d, &format!("af_{tag}"), &map, map.peak_magnitude(), None, false)?;
    }

    let fig5 = sub("fig05_doppler_profile")?;
    let fig6 = sub("fig06_prsl")?;
    for (tag, file) in [("ns_0_2", &ns2), ("ns_0_pi", &nspi), ("bd", &bd)] {
        let m = sidelobe_metrics(&ambiguity_of(file, &pair, &metric_angles)?)?;
        io::write_text(
            &fig5.join(format!("doppler_profile_{tag}.csv")),
            &io::two_column_csv(("angle", "magnitude"), &m.angles, &m.doppler_profile),
        )?;
        io::write_text(
            &fig6.join(format!("prsl_{tag}.csv")),
            &io::two_column_csv(("angle", "prsl_db"), &m.angles, &m.prsl_db),
        )?;
    }

    let fig7 = sub("fig07_snr")?;
    let methods: Vec<String> = SWEEP_METHODS.iter().map(|s| s.to_string()).collect();
    let grid_args = GridArgs {
        interval: Some(vec![0.0, 2.0]),
        ..Default::default()
    };
    let (csv, json) = snr_sweep(
        &[8, 16, 24, 32, 40, 48],
        &methods,
        &grid_args,
        &FileConfig::default(),
        opt,
    )?;
    io::write_text(&fig7.join("snr_sweep.csv"), &csv)?;
    io::write_text(&fig7.join("snr_sweep_hcd.json"), &json)?;

    let h = ScatteringMatrix::identity();
    for (dir, file) in [
        ("fig08_polar_ns_0_2", &ns2),
        ("fig09_polar_ns_0_pi", &nspi),
        ("fig10_polar_bd", &bd),
    ] {
        let d = sub(dir)?;
        polar_into(&d, "", file, &pair, &map_angles, &h, &[(0, 0.0)], false)?;
    }

    let manifest = ReproManifest {
        pair: "fixture64",
        eval_points,
        map_points,
        optimizer_restarts: opt.hcd.restarts,
        optimizer_sweeps: opt.hcd.sweeps,
        optimizer_eps: opt.hcd.eps,
        seed: opt.hcd.seed,
        figures: vec![
            ("fig01_schedule", "p_n and |w_n| of the N=48 design on [0,2]"),
            ("fig02_af_ns_0_2", "ambiguity map, NS design on [0,2]"),
            ("fig03_af_ns_0_pi", "ambiguity map, NS design on [0,pi]"),
            ("fig04_af_bd", "ambiguity map, binomial design"),
            ("fig05_doppler_profile", "|A(0,theta)| for NS and BD"),
            ("fig06_prsl", "peak range sidelobe level for NS and BD"),
            ("fig07_snr", "SNR ratio versus N per method"),
            ("fig08_polar_ns_0_2", "polarimetric channels, NS design on [0,2]"),
            ("fig09_polar_ns_0_pi", "polarimetric channels, NS design on [0,pi]"),
            ("fig10_polar_bd", "polarimetric channels, binomial design"),
        ],
    };
    io::write_json(&root.join("manifest.json"), &manifest)
}

//! Doppler/delay Vandermonde design matrices, their null space, and the
//! null-space (NS) extraction of the transmit schedule `p` and receiver
//! weights `w`.
//!
//! The sidelobe-generating term `f_z(θ) = Σ z_n e^{jnθ}` with `z = p∘w`
//! vanishes on every grid angle exactly when `E·z = 0`. Any nonzero `ẑ` in the
//! null space splits elementwise into `p_n = sign(Re ẑ_n)` and `w_n = p_n·ẑ_n`.

use alloc::vec::Vec;
use core::fmt;
use num_complex::Complex64;

use crate::linalg::{cis, jacobi_svd, norm2};
use crate::{Error, Result};

/// Relative residual bound for `‖E(p∘w)‖₂ ≤ tol·‖w‖₂`.
pub const NULL_RESIDUAL_TOL: f64 = 1e-10;
/// Minimum relative `‖E·w‖₂/‖w‖₂` for a nonvanishing mainlobe.
pub const MAINLOBE_MIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisKind {
    Doppler,
    Delay,
}

impl AxisKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AxisKind::Doppler => "doppler",
            AxisKind::Delay => "delay",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "doppler" | "Doppler" => Some(AxisKind::Doppler),
            "delay" | "Delay" => Some(AxisKind::Delay),
            _ => None,
        }
    }
}

impl fmt::Display for AxisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sample angles (radians) on which the sidelobe term is forced to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ResilienceGrid {
    samples: Vec<f64>,
    kind: AxisKind,
    lo: f64,
    hi: f64,
}

impl ResilienceGrid {
    /// `θ_m = lo + m·(hi − lo)/(M − 1)`, `m = 0..M−1`. `M = 1` gives `{lo}`.
    pub fn uniform(lo: f64, hi: f64, m: usize, kind: AxisKind) -> Result<Self> {
        check_interval(lo, hi)?;
        if m == 0 {
            return Err(Error::InvalidParameter {
                name: "M",
                reason: "grid needs at least one sample",
            });
        }
        let samples = if m == 1 {
            alloc::vec![lo]
        } else {
            let step = (hi - lo) / (m - 1) as f64;
            (0..m)
                .map(|i| if i == m - 1 { hi } else { lo + i as f64 * step })
                .collect()
        };
        Ok(Self {
            samples,
            kind,
            lo,
            hi,
        })
    }

    /// Arbitrary samples; sorted ascending, interval taken as their hull.
    pub fn from_samples(mut samples: Vec<f64>, kind: AxisKind) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidParameter {
                name: "samples",
                reason: "grid needs at least one sample",
            });
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "samples",
                reason: "grid samples must be finite",
            });
        }
        samples.sort_by(f64::total_cmp);
        let lo = samples[0];
        let hi = samples[samples.len() - 1];
        Ok(Self {
            samples,
            kind,
            lo,
            hi,
        })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Number of requested samples `M`, duplicates included.
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn kind(&self) -> AxisKind {
        self.kind
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    /// Samples with exact duplicates removed (a degenerate `lo = hi` interval
    /// collapses to one constraint).
    pub fn distinct_samples(&self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::with_capacity(self.samples.len());
        for &s in &self.samples {
            if out.last() != Some(&s) {
                out.push(s);
            }
        }
        out
    }
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidParameter {
            name: "interval",
            reason: "endpoints must be finite",
        });
    }
    if lo > hi {
        return Err(Error::InvalidParameter {
            name: "interval",
            reason: "lower endpoint exceeds upper endpoint",
        });
    }
    Ok(())
}

/// `M × N` matrix with entries `e^{j·n·θ_m}` (`E` on a Doppler grid, `T` on a
/// delay grid).
#[derive(Debug, Clone)]
pub struct DesignMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
    grid: ResilienceGrid,
}

pub fn build_design_matrix(grid: &ResilienceGrid, pulses: usize) -> Result<DesignMatrix> {
    if pulses < 2 {
        return Err(Error::TooFewPulses(pulses));
    }
    let angles = grid.distinct_samples();
    let rows = angles.len();
    let mut entries = Vec::with_capacity(rows * pulses);
    for &theta in &angles {
        entries.extend((0..pulses).map(|n| cis(n as f64 * theta)));
    }
    Ok(DesignMatrix {
        rows,
        cols: pulses,
        entries,
        grid: grid.clone(),
    })
}

impl DesignMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn pulses(&self) -> usize {
        self.cols
    }

    pub fn grid(&self) -> &ResilienceGrid {
        &self.grid
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn apply(&self, z: &[Complex64]) -> Result<Vec<Complex64>> {
        if z.len() != self.cols {
            return Err(Error::LengthMismatch {
                left: z.len(),
                right: self.cols,
            });
        }
        Ok(self
            .entries
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(z).map(|(e, v)| e * v).sum())
            .collect())
    }

    /// `‖E·z‖₂`.
    pub fn residual(&self, z: &[Complex64]) -> Result<f64> {
        Ok(norm2(&self.apply(z)?))
    }
}

/// Orthonormal basis `Z = [z_1 … z_U]` of the numerical null space.
#[derive(Debug, Clone)]
pub struct NullSpaceBasis {
    pulses: usize,
    columns: Vec<Vec<Complex64>>,
    singular_values: Vec<f64>,
    rank: usize,
}

impl NullSpaceBasis {
    pub fn nullity(&self) -> usize {
        self.columns.len()
    }

    pub fn pulses(&self) -> usize {
        self.pulses
    }

    pub fn columns(&self) -> &[Vec<Complex64>] {
        &self.columns
    }

    pub fn column(&self, u: usize) -> &[Complex64] {
        &self.columns[u]
    }

    /// Numerical rank of the matrix the basis was computed from.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All singular values, descending.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    /// `Z·λ`.
    pub fn combine(&self, lambda: &[Complex64]) -> Result<Vec<Complex64>> {
        if lambda.len() != self.columns.len() {
            return Err(Error::LengthMismatch {
                left: lambda.len(),
                right: self.columns.len(),
            });
        }
        let mut out = alloc::vec![Complex64::new(0.0, 0.0); self.pulses];
        for (col, &l) in self.columns.iter().zip(lambda) {
            for (o, &c) in out.iter_mut().zip(col) {
                *o += c * l;
            }
        }
        Ok(out)
    }

    /// Builds a basis from caller-supplied columns (no orthonormality check).
    pub fn from_columns(columns: Vec<Vec<Complex64>>) -> Result<Self> {
        let pulses = columns.first().map(Vec::len).unwrap_or(0);
        if let Some(bad) = columns.iter().find(|c| c.len() != pulses) {
            return Err(Error::LengthMismatch {
                left: bad.len(),
                right: pulses,
            });
        }
        Ok(Self {
            pulses,
            rank: pulses.saturating_sub(columns.len()),
            columns,
            singular_values: Vec::new(),
        })
    }
}

/// Default relative rank threshold `max(M, N)·ε`.
pub fn default_rank_tolerance(rows: usize, cols: usize) -> f64 {
    rows.max(cols) as f64 * f64::EPSILON
}

/// Numerical null space: right singular vectors whose singular values fall
/// at or below `tol·σ_max` (`tol` defaults to [`default_rank_tolerance`]).
/// Columns keep the descending singular-value order of the decomposition.
pub fn null_space(matrix: &DesignMatrix, tol: Option<f64>) -> Result<NullSpaceBasis> {
    let tol = tol.unwrap_or_else(|| default_rank_tolerance(matrix.rows, matrix.cols));
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: "rank tolerance must be nonnegative",
        });
    }
    let svd = jacobi_svd(&matrix.entries, matrix.rows, matrix.cols);
    let sigma_max = svd.order.first().map(|s| s.0).unwrap_or(0.0);
    let cutoff = tol * sigma_max;
    // Wide matrices have at most `rows` nonzero singular values.
    let rank_cap = matrix.rows.min(matrix.cols);
    let rank = svd
        .order
        .iter()
        .take(rank_cap)
        .filter(|(s, _)| *s > cutoff)
        .count();
    let columns: Vec<Vec<Complex64>> = svd.order[rank..]
        .iter()
        .map(|&(_, j)| svd.v[j].clone())
        .collect();
    if columns.is_empty() {
        return Err(Error::EmptyNullSpace {
            rows: matrix.rows,
            cols: matrix.cols,
        });
    }
    Ok(NullSpaceBasis {
        pulses: matrix.cols,
        columns,
        singular_values: svd.order.iter().map(|s| s.0).collect(),
        rank,
    })
}

/// Elementwise split of `ẑ` into `p ∈ {±1}^N` and `w` with `p∘w = ẑ`.
/// `Re ẑ_n = 0` takes the `+1` branch.
pub fn extract_design(z_hat: &[Complex64]) -> Result<(Vec<i8>, Vec<Complex64>)> {
    if z_hat.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(z_hat
        .iter()
        .map(|&z| if z.re >= 0.0 { (1i8, z) } else { (-1i8, -z) })
        .unzip())
}

/// Transmit schedule plus receiver weights nulling a resilience grid.
#[derive(Debug, Clone)]
pub struct WaveformDesign {
    pub p: Vec<i8>,
    pub w: Vec<Complex64>,
    pub grid: ResilienceGrid,
    /// `‖E(p∘w)‖₂ / ‖w‖₂`.
    pub residual: f64,
}

impl WaveformDesign {
    pub fn pulses(&self) -> usize {
        self.p.len()
    }

    pub fn kind(&self) -> AxisKind {
        self.grid.kind()
    }

    /// `z = p∘w`.
    pub fn schedule_product(&self) -> Vec<Complex64> {
        hadamard(&self.p, &self.w)
    }
}

pub(crate) fn hadamard(p: &[i8], w: &[Complex64]) -> Vec<Complex64> {
    p.iter()
        .zip(w)
        .map(|(&s, &v)| if s >= 0 { v } else { -v })
        .collect()
}

/// Splits `ẑ` and records the relative residual against `matrix`.
pub fn design_from_vector(matrix: &DesignMatrix, z_hat: &[Complex64]) -> Result<WaveformDesign> {
    let (p, w) = extract_design(z_hat)?;
    let residual = matrix.residual(&hadamard(&p, &w))? / norm2(&w);
    Ok(WaveformDesign {
        p,
        w,
        grid: matrix.grid().clone(),
        residual,
    })
}

/// Null-space algorithm: grid → matrix → null space → first basis column →
/// `(p, w)`. `M ≥ N` is attempted and fails with
/// [`Error::EmptyNullSpace`] when the matrix has full column rank.
pub fn design_ns(
    pulses: usize,
    lo: f64,
    hi: f64,
    m: usize,
    kind: AxisKind,
) -> Result<WaveformDesign> {
    let grid = ResilienceGrid::uniform(lo, hi, m, kind)?;
    let matrix = build_design_matrix(&grid, pulses)?;
    let basis = null_space(&matrix, None)?;
    design_from_vector(&matrix, basis.column(0))
}

/// Default grid size `M = N − 1`.
pub fn default_grid_size(pulses: usize) -> usize {
    pulses.saturating_sub(1).max(1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    /// `‖E(p∘w)‖₂ / ‖w‖₂`.
    pub null_residual: f64,
    /// `‖E·w‖₂ / ‖w‖₂`.
    pub mainlobe_residual: f64,
    /// `p∘w` is in the null space within [`NULL_RESIDUAL_TOL`].
    pub null_ok: bool,
    /// `w` itself is outside the null space by more than [`MAINLOBE_MIN`].
    pub mainlobe_ok: bool,
}

impl ResidualReport {
    pub fn is_valid(&self) -> bool {
        self.null_ok && self.mainlobe_ok
    }
}

pub fn validate_design(
    p: &[i8],
    w: &[Complex64],
    matrix: &DesignMatrix,
) -> Result<ResidualReport> {
    if p.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: w.len(),
        });
    }
    let w_norm = norm2(w);
    if w_norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let null_residual = matrix.residual(&hadamard(p, w))? / w_norm;
    let mainlobe_residual = matrix.residual(w)? / w_norm;
    Ok(ResidualReport {
        null_residual,
        mainlobe_residual,
        null_ok: null_residual <= NULL_RESIDUAL_TOL,
        mainlobe_ok: mainlobe_residual > MAINLOBE_MIN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::inner;
    use alloc::vec;
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn uniform_grid_endpoints() {
        let g = ResilienceGrid::uniform(0.0, 2.0, 47, AxisKind::Doppler).unwrap();
        assert_eq!(g.len(), 47);
        assert_eq!(g.samples()[0], 0.0);
        assert_eq!(g.samples()[46], 2.0);
        assert!((g.samples()[1] - 2.0 / 46.0).abs() < 1e-15);
        assert!(g.samples().windows(2).all(|w| w[0] < w[1]));
        assert!(ResilienceGrid::uniform(1.0, 0.0, 3, AxisKind::Doppler).is_err());
        assert!(ResilienceGrid::uniform(0.0, 1.0, 0, AxisKind::Doppler).is_err());
    }

    #[test]
    fn degenerate_interval_collapses() {
        let g = ResilienceGrid::uniform(0.5, 0.5, 4, AxisKind::Doppler).unwrap();
        assert_eq!(g.distinct_samples(), vec![0.5]);
        let e = build_design_matrix(&g, 3).unwrap();
        assert_eq!(e.rows(), 1);
    }

    #[test]
    fn small_design_matrices() {
        let g = ResilienceGrid::from_samples(vec![0.0], AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&g, 2).unwrap();
        assert_eq!(e.entries(), &[c(1.0, 0.0), c(1.0, 0.0)]);

        let g = ResilienceGrid::from_samples(vec![PI], AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&g, 3).unwrap();
        let expect = [1.0, -1.0, 1.0];
        for (n, &x) in expect.iter().enumerate() {
            assert!((e.entry(0, n) - c(x, 0.0)).norm() < 1e-15);
        }
        assert_eq!(build_design_matrix(&g, 1).unwrap_err(), Error::TooFewPulses(1));
    }

    #[test]
    fn paper_scale_matrix_entries() {
        let g = ResilienceGrid::uniform(0.0, 2.0, 47, AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&g, 48).unwrap();
        assert_eq!((e.rows(), e.pulses()), (47, 48));
        for m in 0..47 {
            assert_eq!(e.entry(m, 0), c(1.0, 0.0));
            for n in 0..48 {
                let expect = Complex64::cis(n as f64 * 2.0 * m as f64 / 46.0);
                assert!((e.entry(m, n) - expect).norm() < 1e-13);
                assert!((e.entry(m, n).norm() - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn single_constraint_null_space() {
        let g = ResilienceGrid::from_samples(vec![0.0], AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&g, 2).unwrap();
        let basis = null_space(&e, None).unwrap();
        assert_eq!(basis.nullity(), 1);
        let z = basis.column(0);
        // Multiple of [1, -1]/sqrt(2).
        assert!((z[0] + z[1]).norm() < 1e-15);
        assert!((z[0].norm() - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn full_rank_square_is_empty() {
        // Distinct angles, M = N: full rank.
        let g = ResilienceGrid::uniform(0.0, 1.0, 4, AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&g, 4).unwrap();
        assert_eq!(
            null_space(&e, None).unwrap_err(),
            Error::EmptyNullSpace { rows: 4, cols: 4 }
        );
    }

    #[test]
    fn nullity_for_well_conditioned_grid() {
        for (n, m) in [(4usize, 3usize), (6, 3), (8, 5), (5, 1)] {
            let g = ResilienceGrid::uniform(0.0, 2.0, m, AxisKind::Doppler).unwrap();
            let e = build_design_matrix(&g, n).unwrap();
            let basis = null_space(&e, None).unwrap();
            assert_eq!(basis.nullity(), n - m, "N={n} M={m}");
            for (i, zi) in basis.columns().iter().enumerate() {
                let r = e.residual(zi).unwrap();
                assert!(r <= 1e-12, "N={n} M={m} residual {r:e}");
                for (j, zj) in basis.columns().iter().enumerate() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((inner(zi, zj) - c(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn paper_scale_null_space_residual() {
        let g = ResilienceGrid::uniform(0.0, 2.0, 47, AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&g, 48).unwrap();
        let basis = null_space(&e, None).unwrap();
        assert!(basis.nullity() >= 1);
        for z in basis.columns() {
            assert!(e.residual(z).unwrap() <= 1e-10);
        }
    }

    #[test]
    fn extract_elementwise() {
        let (p, w) = extract_design(&[c(0.5, 0.0), c(-0.3, 0.1)]).unwrap();
        assert_eq!(p, vec![1, -1]);
        assert_eq!(w, vec![c(0.5, 0.0), c(0.3, -0.1)]);

        let (p, w) = extract_design(&[c(0.0, 0.4)]).unwrap();
        assert_eq!(p, vec![1]);
        assert_eq!(w, vec![c(0.0, 0.4)]);

        assert_eq!(
            extract_design(&[c(0.0, 0.0), c(0.0, 0.0)]).unwrap_err(),
            Error::ZeroVector
        );
        // A zero entry among nonzero ones is allowed and takes p = +1.
        let (p, _) = extract_design(&[c(0.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert_eq!(p, vec![1, -1]);
    }

    #[test]
    fn small_ns_design_residual() {
        let d = design_ns(4, 0.0, 1.0, 3, AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&d.grid, 4).unwrap();
        let w_norm = norm2(&d.w);
        assert!(e.residual(&d.schedule_product()).unwrap() <= 1e-10 * w_norm);
        let report = validate_design(&d.p, &d.w, &e).unwrap();
        assert!(report.is_valid(), "{report:?}");
    }

    #[test]
    fn m_at_least_n_fails() {
        assert!(matches!(
            design_ns(4, 0.0, 1.0, 5, AxisKind::Doppler),
            Err(Error::EmptyNullSpace { rows: 5, cols: 4 })
        ));
    }

    #[test]
    fn validate_flags_mainlobe_violation() {
        let g = ResilienceGrid::uniform(0.0, 1.0, 3, AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&g, 4).unwrap();
        let basis = null_space(&e, None).unwrap();
        let w = basis.column(0).to_vec();
        let report = validate_design(&[1, 1, 1, 1], &w, &e).unwrap();
        assert!(report.null_ok);
        assert!(!report.mainlobe_ok);
        assert!(!report.is_valid());
    }
}

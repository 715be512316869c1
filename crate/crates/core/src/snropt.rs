//! SNR factor `‖w‖₁²/‖w‖₂²` and its maximization over the null space.
//!
//! Every candidate is a combination `Z·λ` of null-space basis columns, so the
//! Doppler (or delay) constraint holds by construction, and the `p/w` split
//! preserves both norms: `‖Zλ‖ = ‖p∘w‖ = ‖w‖`. Two optimizers are provided:
//!
//! - basis selection: the column with the largest 1-norm;
//! - heuristic coordinate descent (HCD): cyclic per-coordinate minimization of
//!   `g(λ) = ‖Zλ‖₂²/‖Zλ‖₁²` over complex `λ`, reverting any coordinate step
//!   that fails to strictly decrease `g`, with random restarts.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::design::{design_from_vector, DesignMatrix, NullSpaceBasis, WaveformDesign};
use crate::linalg::{norm1, norm2, polar};
use crate::{Error, Result};

/// `(Σ|w_n|)² / Σ|w_n|²`, in `[1, N]`.
pub fn snr_ratio(w: &[Complex64]) -> Result<f64> {
    let l2_sq: f64 = w.iter().map(|c| c.norm_sqr()).sum();
    if l2_sq == 0.0 {
        return Err(Error::ZeroVector);
    }
    let l1 = norm1(w);
    Ok(l1 * l1 / l2_sq)
}

/// `g(λ) = ‖Zλ‖₂² / ‖Zλ‖₁²`; `+∞` when `Zλ = 0`.
pub fn objective(basis: &NullSpaceBasis, lambda: &[Complex64]) -> Result<f64> {
    Ok(ratio_objective(&basis.combine(lambda)?))
}

fn fast_abs(c: Complex64) -> f64 {
    libm::sqrt(c.re * c.re + c.im * c.im)
}

fn ratio_objective(v: &[Complex64]) -> f64 {
    let mut l1 = 0.0;
    let mut l2 = 0.0;
    for c in v {
        let sq = c.re * c.re + c.im * c.im;
        l2 += sq;
        l1 += libm::sqrt(sq);
    }
    if l1 == 0.0 {
        f64::INFINITY
    } else {
        l2 / (l1 * l1)
    }
}

/// Index of the basis column with the largest 1-norm (lowest index on ties).
pub fn basis_selection(basis: &NullSpaceBasis) -> Result<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (u, col) in basis.columns().iter().enumerate() {
        let n1 = norm1(col);
        if best.is_none_or(|(_, b)| n1 > b) {
            best = Some((u, n1));
        }
    }
    best.map(|(u, _)| u).ok_or(Error::EmptyNullSpace {
        rows: basis.rank(),
        cols: basis.pulses(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcdConfig {
    /// Number of restarts `I`; restart 0 starts at the basis-selection vertex.
    pub restarts: usize,
    /// Maximum sweeps `K` per restart.
    pub sweeps: usize,
    /// Stop a restart once `‖λ^(k) − λ^(k−1)‖₂ ≤ eps`.
    pub eps: f64,
    pub seed: u64,
}

impl Default for HcdConfig {
    fn default() -> Self {
        Self {
            restarts: 20,
            sweeps: 100,
            eps: 1e-6,
            seed: 0,
        }
    }
}

impl HcdConfig {
    fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidParameter {
                name: "restarts",
                reason: "at least one restart is required",
            });
        }
        if self.sweeps == 0 {
            return Err(Error::InvalidParameter {
                name: "sweeps",
                reason: "at least one sweep is required",
            });
        }
        if self.eps.is_nan() || self.eps <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "eps",
                reason: "tolerance must be positive",
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerReport {
    /// Winning combination vector.
    pub lambda: Vec<Complex64>,
    /// Objective `g` at the start and after every sweep, one trace per restart.
    pub traces: Vec<Vec<f64>>,
    pub best_restart: usize,
    /// `g` at the winner.
    pub objective: f64,
    /// `snr_ratio` of the weights extracted from `Z·λ`.
    pub snr_ratio: f64,
}

const PHASES: usize = 32;
const MAGNITUDES: usize = 16;
const GOLDEN_STEPS: usize = 24;
const MAX_REFINE_ROUNDS: usize = 16;
const REFINE_REL_TOL: f64 = 1e-10;

/// Per-coordinate search state: `base = Zλ − z_u·λ_u`.
struct Coordinate<'a> {
    base: &'a [Complex64],
    column: &'a [Complex64],
    scratch: Vec<Complex64>,
}

impl Coordinate<'_> {
    fn eval(&mut self, t: Complex64) -> f64 {
        for ((s, &b), &z) in self.scratch.iter_mut().zip(self.base).zip(self.column) {
            *s = b + z * t;
        }
        ratio_objective(&self.scratch)
    }

    /// Golden-section search of `f(center + s·dir)` for `s ∈ [-h, h]`.
    fn golden(&mut self, center: Complex64, dir: Complex64, h: f64) -> (Complex64, f64) {
        const INV_PHI: f64 = 0.618_033_988_749_894_8;
        let mut a = -h;
        let mut b = h;
        let mut c = b - INV_PHI * (b - a);
        let mut d = a + INV_PHI * (b - a);
        let mut fc = self.eval(center + dir * c);
        let mut fd = self.eval(center + dir * d);
        for _ in 0..GOLDEN_STEPS {
            if fc < fd {
                b = d;
                d = c;
                fd = fc;
                c = b - INV_PHI * (b - a);
                fc = self.eval(center + dir * c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + INV_PHI * (b - a);
                fd = self.eval(center + dir * d);
            }
        }
        if fc < fd {
            (center + dir * c, fc)
        } else {
            (center + dir * d, fd)
        }
    }

    /// Coarse phase × magnitude grid around the incumbent, then alternating
    /// golden-section refinement on the real and imaginary parts.
    fn minimize(&mut self, incumbent: Complex64, reference: f64) -> (Complex64, f64) {
        let mut best_t = incumbent;
        let mut best_f = self.eval(incumbent);
        let mut consider = |t: Complex64, this: &mut Self| {
            let f = this.eval(t);
            if f < best_f {
                best_f = f;
                best_t = t;
            }
        };
        consider(Complex64::new(0.0, 0.0), self);
        for i in 0..MAGNITUDES {
            let exponent = -2.0 + 4.0 * i as f64 / (MAGNITUDES - 1) as f64;
            let radius = reference * libm::pow(10.0, exponent);
            for k in 0..PHASES {
                let phase = 2.0 * PI * k as f64 / PHASES as f64;
                consider(polar(radius, phase), self);
            }
        }

        let mut h = 0.25 * fast_abs(best_t).max(reference);
        for _ in 0..MAX_REFINE_ROUNDS {
            let start = best_f;
            for dir in [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)] {
                let (t, f) = self.golden(best_t, dir, h);
                if f < best_f {
                    best_f = f;
                    best_t = t;
                }
            }
            let gain = start - best_f;
            if gain.is_nan() || gain <= REFINE_REL_TOL * start {
                break;
            }
            h *= 0.5;
        }
        (best_t, best_f)
    }
}

fn random_lambda(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Complex64> {
    (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
        })
        .collect()
}

struct RestartOutcome {
    lambda: Vec<Complex64>,
    trace: Vec<f64>,
    objective: f64,
}

fn run_restart(basis: &NullSpaceBasis, mut lambda: Vec<Complex64>, cfg: &HcdConfig) -> Result<RestartOutcome> {
    let dim = basis.nullity();
    let mut v = basis.combine(&lambda)?;
    let scale = norm2(&v);
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut g = ratio_objective(&v);
    let mut trace = vec![g];
    let mut base = vec![Complex64::new(0.0, 0.0); basis.pulses()];

    for _ in 0..cfg.sweeps {
        let previous = lambda.clone();
        let mut changed = false;
        for u in 0..dim {
            let column = basis.column(u);
            for ((b, &vn), &zn) in base.iter_mut().zip(&v).zip(column) {
                *b = vn - zn * lambda[u];
            }
            let reference = fast_abs(lambda[u]).max(norm2(&lambda) / libm::sqrt(dim as f64));
            let mut coord = Coordinate {
                base: &base,
                column,
                scratch: vec![Complex64::new(0.0, 0.0); base.len()],
            };
            let (t, f) = coord.minimize(lambda[u], reference);
            // Revert unless the step strictly decreases the objective.
            if f < g {
                lambda[u] = t;
                for ((vn, &b), &zn) in v.iter_mut().zip(&base).zip(column) {
                    *vn = b + zn * t;
                }
                g = ratio_objective(&v);
                changed = true;
            }
        }
        if !changed {
            trace.push(g);
            break;
        }
        // Rescale so ‖Zλ‖₂ = 1; skipped if rounding would raise g.
        let inv = 1.0 / norm2(&v);
        let scaled_v: Vec<Complex64> = v.iter().map(|c| c * inv).collect();
        let scaled_g = ratio_objective(&scaled_v);
        if scaled_g <= g {
            v = scaled_v;
            g = scaled_g;
            for l in lambda.iter_mut() {
                *l *= inv;
            }
        }
        trace.push(g);
        let step: Vec<Complex64> = lambda.iter().zip(&previous).map(|(a, b)| a - b).collect();
        if norm2(&step) <= cfg.eps {
            break;
        }
    }
    Ok(RestartOutcome {
        lambda,
        trace,
        objective: g,
    })
}

/// Heuristic coordinate descent over `λ ∈ ℂ^U`.
///
/// Restart 0 is seeded at the basis-selection vertex `e_{u*}`; the remaining
/// restarts draw `λ^(0)` from a standard complex Gaussian using a ChaCha8
/// stream per restart index, so results depend only on `cfg.seed`.
pub fn hcd(basis: &NullSpaceBasis, cfg: &HcdConfig) -> Result<OptimizerReport> {
    cfg.validate()?;
    let dim = basis.nullity();
    let vertex_index = basis_selection(basis)?;
    let mut vertex = vec![Complex64::new(0.0, 0.0); dim];
    vertex[vertex_index] = Complex64::new(1.0, 0.0);

    let mut traces = Vec::with_capacity(cfg.restarts);
    let mut best: Option<(f64, usize, Vec<Complex64>)> = None;
    for restart in 0..cfg.restarts {
        let init = if restart == 0 {
            vertex.clone()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(restart as u64);
            let mut l = random_lambda(&mut rng, dim);
            let inv = 1.0 / norm2(&l);
            l.iter_mut().for_each(|c| *c *= inv);
            l
        };
        let outcome = run_restart(basis, init, cfg)?;
        traces.push(outcome.trace);
        if best.as_ref().is_none_or(|(g, _, _)| outcome.objective < *g) {
            best = Some((outcome.objective, restart, outcome.lambda));
        }
    }
    let (mut objective_value, mut best_restart, mut lambda) =
        best.expect("at least one restart runs");

    let mut snr = snr_ratio(&basis.combine(&lambda)?)?;
    let vertex_snr = snr_ratio(basis.column(vertex_index))?;
    // Rounding can leave a converged restart an ulp below the vertex.
    if snr < vertex_snr {
        lambda = vertex;
        best_restart = 0;
        snr = vertex_snr;
        objective_value = ratio_objective(basis.column(vertex_index));
    }
    Ok(OptimizerReport {
        lambda,
        traces,
        best_restart,
        objective: objective_value,
        snr_ratio: snr,
    })
}

/// `ẑ = Z·λ` split into `(p, w)` against `matrix`.
pub fn design_from_lambda(
    matrix: &DesignMatrix,
    basis: &NullSpaceBasis,
    lambda: &[Complex64],
) -> Result<WaveformDesign> {
    let z_hat = basis.combine(lambda)?;
    if z_hat.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
        return Err(Error::ZeroVector);
    }
    design_from_vector(matrix, &z_hat)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Optimizer {
    /// First null-space basis column.
    FirstBasis,
    /// Column with the largest 1-norm.
    BasisSelection,
    /// Heuristic coordinate descent.
    Hcd,
}

impl Optimizer {
    pub fn as_str(self) -> &'static str {
        match self {
            Optimizer::FirstBasis => "first-basis",
            Optimizer::BasisSelection => "bs",
            Optimizer::Hcd => "hcd",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "first-basis" => Some(Optimizer::FirstBasis),
            "bs" => Some(Optimizer::BasisSelection),
            "hcd" => Some(Optimizer::Hcd),
            _ => None,
        }
    }
}

/// Picks `ẑ` from the null space with the chosen optimizer.
pub fn optimize_design(
    matrix: &DesignMatrix,
    basis: &NullSpaceBasis,
    optimizer: Optimizer,
    cfg: &HcdConfig,
) -> Result<(WaveformDesign, Option<OptimizerReport>)> {
    match optimizer {
        Optimizer::FirstBasis => Ok((design_from_vector(matrix, basis.column(0))?, None)),
        Optimizer::BasisSelection => {
            let u = basis_selection(basis)?;
            Ok((design_from_vector(matrix, basis.column(u))?, None))
        }
        Optimizer::Hcd => {
            let report = hcd(basis, cfg)?;
            let design = design_from_lambda(matrix, basis, &report.lambda)?;
            Ok((design, Some(report)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{build_design_matrix, null_space, AxisKind, ResilienceGrid};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    #[test]
    fn snr_ratio_cases() {
        assert_eq!(snr_ratio(&real(&[1.0; 6])).unwrap(), 6.0);
        assert_eq!(snr_ratio(&real(&[0.0, 2.5, 0.0])).unwrap(), 1.0);
        assert!((snr_ratio(&real(&[1.0, 3.0, 3.0, 1.0])).unwrap() - 3.2).abs() < 1e-15);
        assert_eq!(snr_ratio(&real(&[0.0, 0.0])).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn basis_selection_picks_largest_l1() {
        // Unit 2-norm columns [a, b, b] with 1-norm a + 2b = l1.
        let col = |l1: f64| {
            let b = (4.0 * l1 - libm::sqrt(16.0 * l1 * l1 - 24.0 * (l1 * l1 - 1.0))) / 12.0;
            let v = real(&[l1 - 2.0 * b, b, b]);
            assert!((norm2(&v) - 1.0).abs() < 1e-12 && (norm1(&v) - l1).abs() < 1e-12);
            v
        };
        let basis = NullSpaceBasis::from_columns(vec![col(1.2), col(1.5)]).unwrap();
        assert_eq!(basis_selection(&basis).unwrap(), 1);
        let single = NullSpaceBasis::from_columns(vec![col(1.2)]).unwrap();
        assert_eq!(basis_selection(&single).unwrap(), 0);
        let tie = NullSpaceBasis::from_columns(vec![col(1.3), col(1.3)]).unwrap();
        assert_eq!(basis_selection(&tie).unwrap(), 0);
        let empty = NullSpaceBasis::from_columns(vec![]).unwrap();
        assert!(basis_selection(&empty).is_err());
    }

    fn small_problem() -> (DesignMatrix, NullSpaceBasis) {
        let grid = ResilienceGrid::uniform(0.0, 1.0, 4, AxisKind::Doppler).unwrap();
        let e = build_design_matrix(&grid, 10).unwrap();
        let z = null_space(&e, None).unwrap();
        (e, z)
    }

    #[test]
    fn objective_is_scale_invariant() {
        let (_, z) = small_problem();
        let lambda: Vec<Complex64> = (0..z.nullity()).map(|u| c(u as f64 + 0.5, -0.2)).collect();
        let g = objective(&z, &lambda).unwrap();
        let scaled: Vec<Complex64> = lambda.iter().map(|l| l * c(-3.0, 1.7)).collect();
        assert!((objective(&z, &scaled).unwrap() - g).abs() < 1e-14);
    }

    #[test]
    fn hcd_dominates_bs_and_traces_decrease() {
        let (e, z) = small_problem();
        let cfg = HcdConfig {
            restarts: 5,
            ..HcdConfig::default()
        };
        let report = hcd(&z, &cfg).unwrap();
        let bs = snr_ratio(z.column(basis_selection(&z).unwrap())).unwrap();
        assert!(report.snr_ratio >= bs);
        for trace in &report.traces {
            assert!(trace.windows(2).all(|w| w[1] <= w[0]), "{trace:?}");
        }
        let design = design_from_lambda(&e, &z, &report.lambda).unwrap();
        assert!(design.residual <= 1e-10);
        assert!((snr_ratio(&design.w).unwrap() - report.snr_ratio).abs() < 1e-12);
    }

    #[test]
    fn hcd_is_deterministic() {
        let (_, z) = small_problem();
        let cfg = HcdConfig {
            restarts: 3,
            seed: 7,
            ..HcdConfig::default()
        };
        assert_eq!(hcd(&z, &cfg).unwrap(), hcd(&z, &cfg).unwrap());
    }

    #[test]
    fn hcd_rejects_bad_config() {
        let (_, z) = small_problem();
        for cfg in [
            HcdConfig { restarts: 0, ..HcdConfig::default() },
            HcdConfig { sweeps: 0, ..HcdConfig::default() },
            HcdConfig { eps: 0.0, ..HcdConfig::default() },
        ] {
            assert!(matches!(hcd(&z, &cfg), Err(Error::InvalidParameter { .. })));
        }
    }

    #[test]
    fn unit_vector_lambda_matches_extract() {
        let (e, z) = small_problem();
        let mut lambda = vec![c(0.0, 0.0); z.nullity()];
        lambda[1] = c(1.0, 0.0);
        let a = design_from_lambda(&e, &z, &lambda).unwrap();
        let b = design_from_vector(&e, z.column(1)).unwrap();
        assert_eq!(a.p, b.p);
        assert_eq!(a.w, b.w);
        let zero = vec![c(0.0, 0.0); z.nullity()];
        assert_eq!(design_from_lambda(&e, &z, &zero).unwrap_err(), Error::ZeroVector);
    }
}

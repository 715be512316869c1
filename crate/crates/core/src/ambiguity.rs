//! Discrete cross-ambiguity functions and sidelobe metrics.
//!
//! For a pair `(x, y)`, schedule `p` and weights `w`:
//!
//! ```text
//! A(k, θ) = ½[C_x[k] + C_y[k]]·Σ w_n e^{jnθ} + ½[C_x[k] − C_y[k]]·Σ p_n w_n e^{jnθ}
//! ```
//!
//! The delay-axis function `B(i, α)` has the same form with the angle read as
//! a time shift.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::design::{hadamard, AxisKind};
use crate::golay::{autocorrelation, CorrelationProfile, GolayPair};
use crate::linalg::{cabs, cis};
use crate::{Error, Result};

/// Default number of evaluation angles for maps and metrics.
pub const DEFAULT_EVAL_POINTS: usize = 2001;

/// `count` equispaced angles over `[lo, hi]`; a single point yields `[lo]`.
pub fn uniform_angles(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => alloc::vec![lo],
        _ => {
            let step = (hi - lo) / (count - 1) as f64;
            (0..count)
                .map(|i| if i == count - 1 { hi } else { lo + i as f64 * step })
                .collect()
        }
    }
}

/// `f_z(θ) = Σ_n z_n e^{jnθ}` at each angle.
pub fn key_term(z: &[Complex64], angles: &[f64]) -> Vec<Complex64> {
    angles
        .iter()
        .map(|&theta| {
            z.iter()
                .enumerate()
                .map(|(n, &zn)| zn * cis(n as f64 * theta))
                .sum()
        })
        .collect()
}

/// Complex ambiguity values over lags `[-(L-1), L-1]` × evaluation angles.
#[derive(Debug, Clone, PartialEq)]
pub struct AmbiguityMap {
    kind: AxisKind,
    code_len: usize,
    pulses: usize,
    angles: Vec<f64>,
    /// Row-major: one row per lag, ascending.
    values: Vec<Complex64>,
}

impl AmbiguityMap {
    pub(crate) fn from_rows(
        kind: AxisKind,
        code_len: usize,
        pulses: usize,
        angles: Vec<f64>,
        values: Vec<Complex64>,
    ) -> Self {
        debug_assert_eq!(values.len(), (2 * code_len - 1) * angles.len());
        Self {
            kind,
            code_len,
            pulses,
            angles,
            values,
        }
    }

    pub fn kind(&self) -> AxisKind {
        self.kind
    }

    /// Code length `L`.
    pub fn code_len(&self) -> usize {
        self.code_len
    }

    /// Pulse count `N`.
    pub fn pulses(&self) -> usize {
        self.pulses
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn max_lag(&self) -> isize {
        self.code_len as isize - 1
    }

    pub fn lags(&self) -> impl Iterator<Item = isize> {
        let m = self.max_lag();
        -m..=m
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Values at lag `k` for every angle.
    pub fn row(&self, lag: isize) -> Result<&[Complex64]> {
        let offset = lag + self.max_lag();
        if offset < 0 || offset > 2 * self.max_lag() {
            return Err(Error::OutOfRange {
                what: "lag",
                index: lag as i64,
            });
        }
        let width = self.angles.len();
        let start = offset as usize * width;
        Ok(&self.values[start..start + width])
    }

    pub fn get(&self, lag: isize, angle_index: usize) -> Result<Complex64> {
        if angle_index >= self.angles.len() {
            return Err(Error::OutOfRange {
                what: "angle index",
                index: angle_index as i64,
            });
        }
        Ok(self.row(lag)?[angle_index])
    }

    /// `max |A(k, θ)|` over the whole map.
    pub fn peak_magnitude(&self) -> f64 {
        self.values.iter().map(|v| cabs(*v)).fold(0.0, f64::max)
    }

    /// `20·log10(|A| / reference)` for each cell, same layout as `values`.
    pub fn db_view(&self, reference: f64) -> Vec<f64> {
        self.values
            .iter()
            .map(|v| 20.0 * libm::log10(cabs(*v) / reference))
            .collect()
    }

    /// dB view normalized to the map's own global maximum (0 dB).
    pub fn db_normalized(&self) -> Result<Vec<f64>> {
        let peak = self.peak_magnitude();
        if peak == 0.0 {
            return Err(Error::ZeroMap);
        }
        Ok(self.db_view(peak))
    }

    pub(crate) fn with_kind(mut self, kind: AxisKind) -> Self {
        self.kind = kind;
        self
    }
}

fn check_inputs(pair: &GolayPair, p: &[i8], w: &[Complex64]) -> Result<()> {
    if p.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: w.len(),
        });
    }
    if w.is_empty() {
        return Err(Error::InvalidParameter {
            name: "w",
            reason: "at least one pulse is required",
        });
    }
    if let Some(index) = p.iter().position(|&s| s != 1 && s != -1) {
        return Err(Error::InvalidChip {
            index,
            value: p[index] as i64,
        });
    }
    debug_assert_eq!(pair.x().len(), pair.y().len());
    Ok(())
}

/// Two-term map `½(a+b)·Σw e^{jnθ} + ½(a−b)·Σpw e^{jnθ}` from two profiles.
pub(crate) fn two_term_map(
    kind: AxisKind,
    first: &CorrelationProfile,
    second: &CorrelationProfile,
    p: &[i8],
    w: &[Complex64],
    angles: &[f64],
) -> AmbiguityMap {
    let code_len = first.sequence_len();
    let sum_w = key_term(w, angles);
    let sum_z = key_term(&hadamard(p, w), angles);
    let mut values = Vec::with_capacity((2 * code_len - 1) * angles.len());
    for ((_, a), &b) in first.entries().zip(second.values()) {
        let even = 0.5 * (a + b) as f64;
        let odd = 0.5 * (a - b) as f64;
        values.extend(sum_w.iter().zip(&sum_z).map(|(sw, sz)| sw * even + sz * odd));
    }
    AmbiguityMap::from_rows(kind, code_len, w.len(), angles.to_vec(), values)
}

/// Direct two-term evaluation of `A(k, θ)`.
pub fn discrete_ambiguity(
    pair: &GolayPair,
    p: &[i8],
    w: &[Complex64],
    angles: &[f64],
) -> Result<AmbiguityMap> {
    check_inputs(pair, p, w)?;
    let cx = autocorrelation(pair.x());
    let cy = autocorrelation(pair.y());
    Ok(two_term_map(AxisKind::Doppler, &cx, &cy, p, w, angles))
}

/// Delay-axis `B(i, α)`: same two-term structure, axis labelled as delay.
pub fn delay_ambiguity(
    pair: &GolayPair,
    p: &[i8],
    w: &[Complex64],
    angles: &[f64],
) -> Result<AmbiguityMap> {
    Ok(discrete_ambiguity(pair, p, w, angles)?.with_kind(AxisKind::Delay))
}

/// Closed form valid for complementary pairs: lag 0 is `L·Σ w_n e^{jnθ}`,
/// every other lag is `½(C_x[k] − C_y[k])·f_{p∘w}(θ)`.
pub fn ambiguity_closed_form(
    pair: &GolayPair,
    p: &[i8],
    w: &[Complex64],
    angles: &[f64],
) -> Result<AmbiguityMap> {
    check_inputs(pair, p, w)?;
    if !pair.is_complementary() {
        return Err(Error::NotGolayPair);
    }
    let code_len = pair.len();
    let cx = autocorrelation(pair.x());
    let cy = autocorrelation(pair.y());
    let mainlobe = key_term(w, angles);
    let sidelobe = key_term(&hadamard(p, w), angles);
    let mut values = Vec::with_capacity((2 * code_len - 1) * angles.len());
    for ((lag, a), &b) in cx.entries().zip(cy.values()) {
        if lag == 0 {
            let scale = code_len as f64;
            values.extend(mainlobe.iter().map(|v| v * scale));
        } else {
            let odd = 0.5 * (a - b) as f64;
            values.extend(sidelobe.iter().map(|v| v * odd));
        }
    }
    Ok(AmbiguityMap::from_rows(
        AxisKind::Doppler,
        code_len,
        w.len(),
        angles.to_vec(),
        values,
    ))
}

/// Per-angle mainlobe and peak range sidelobe levels.
#[derive(Debug, Clone, PartialEq)]
pub struct SidelobeMetrics {
    pub angles: Vec<f64>,
    /// `|A(0, θ)|`.
    pub doppler_profile: Vec<f64>,
    /// `20·log10(max_{k≠0}|A(k,θ)| / max_θ'|A(0,θ')|)`.
    pub prsl_db: Vec<f64>,
    /// `20·log10(max_{k≠0}|A(k,θ)| / |A(0,θ)|)`.
    pub relative_prsl_db: Vec<f64>,
    /// `max_θ |A(0, θ)|`, the PRSL reference.
    pub mainlobe_peak: f64,
}

impl SidelobeMetrics {
    pub fn max_prsl_db(&self) -> f64 {
        self.prsl_db.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Sidelobe metrics; lag 0 is excluded from the sidelobe maximum by index.
pub fn sidelobe_metrics(map: &AmbiguityMap) -> Result<SidelobeMetrics> {
    if map.peak_magnitude() == 0.0 {
        return Err(Error::ZeroMap);
    }
    let width = map.angles.len();
    let doppler_profile: Vec<f64> = map.row(0)?.iter().map(|v| cabs(*v)).collect();
    let mut peak_sidelobe = alloc::vec![0.0f64; width];
    for lag in map.lags().filter(|&k| k != 0) {
        for (acc, v) in peak_sidelobe.iter_mut().zip(map.row(lag)?) {
            *acc = acc.max(cabs(*v));
        }
    }
    let mainlobe_peak = doppler_profile.iter().copied().fold(0.0, f64::max);
    let prsl_db = peak_sidelobe
        .iter()
        .map(|&s| 20.0 * libm::log10(s / mainlobe_peak))
        .collect();
    let relative_prsl_db = peak_sidelobe
        .iter()
        .zip(&doppler_profile)
        .map(|(&s, &m)| 20.0 * libm::log10(s / m))
        .collect();
    Ok(SidelobeMetrics {
        angles: map.angles.clone(),
        doppler_profile,
        prsl_db,
        relative_prsl_db,
        mainlobe_peak,
    })
}

//! Fully polarimetric (V/H) extension with an Alamouti-structured schedule.
//!
//! The vertical antenna sends `s_x` when `p_n = +1` and `−s̃_y` otherwise; the
//! horizontal antenna sends `s_y` or `s̃_x` in the same PRI (`~` is
//! reversal). The four discrete cross-ambiguity channels are
//!
//! ```text
//! VV = ½[C_x + C_y]·Σw e^{jnθ} + ½[C_x − C_y]·f_z(θ)
//! HH = ½[C_x + C_y]·Σw e^{jnθ} − ½[C_x − C_y]·f_z(θ)
//! VH = C_xy[k]·f_z(θ)
//! HV = C_yx[k]·f_z(θ)
//! ```
//!
//! with `z = p∘w`, so one null-space condition clears the co-channel
//! sidelobes and both cross channels.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::ambiguity::{discrete_ambiguity, key_term, AmbiguityMap};
use crate::design::{hadamard, AxisKind};
use crate::golay::{autocorrelation, cross_correlation, reverse, CorrelationProfile, GolayPair};
use crate::linalg::{cabs, norm2};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringMatrix {
    pub vv: Complex64,
    pub vh: Complex64,
    pub hv: Complex64,
    pub hh: Complex64,
}

impl ScatteringMatrix {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            vv: one,
            vh: zero,
            hv: zero,
            hh: one,
        }
    }

    pub fn as_array(&self) -> [[Complex64; 2]; 2] {
        [[self.vv, self.vh], [self.hv, self.hh]]
    }
}

/// The four channel maps over common lag × angle axes.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarimetricAmbiguity {
    pub vv: AmbiguityMap,
    pub vh: AmbiguityMap,
    pub hv: AmbiguityMap,
    pub hh: AmbiguityMap,
}

impl PolarimetricAmbiguity {
    pub fn channels(&self) -> [(&'static str, &AmbiguityMap); 4] {
        [
            ("VV", &self.vv),
            ("VH", &self.vh),
            ("HV", &self.hv),
            ("HH", &self.hh),
        ]
    }

    /// `max_θ |VV(0, θ)|`, the common reference for all four channels.
    pub fn mainlobe_peak(&self) -> f64 {
        self.vv
            .row(0)
            .map(|r| r.iter().map(|v| cabs(*v)).fold(0.0, f64::max))
            .unwrap_or(0.0)
    }
}

fn scaled_rows(
    kind: AxisKind,
    profile: &CorrelationProfile,
    f: &[Complex64],
    pulses: usize,
    angles: &[f64],
) -> AmbiguityMap {
    let mut values = Vec::with_capacity(profile.values().len() * f.len());
    for &c in profile.values() {
        let c = c as f64;
        values.extend(f.iter().map(|v| v * c));
    }
    AmbiguityMap::from_rows(kind, profile.sequence_len(), pulses, angles.to_vec(), values)
}

fn check(pair: &GolayPair, p: &[i8], w: &[Complex64]) -> Result<()> {
    if p.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: w.len(),
        });
    }
    if pair.x().len() != pair.y().len() {
        return Err(Error::LengthMismatch {
            left: pair.x().len(),
            right: pair.y().len(),
        });
    }
    Ok(())
}

/// VV, HH from the two-term forms; VH, HV from the reduced single-term forms.
pub fn polarimetric_ambiguities(
    pair: &GolayPair,
    p: &[i8],
    w: &[Complex64],
    angles: &[f64],
) -> Result<PolarimetricAmbiguity> {
    check(pair, p, w)?;
    let vv = discrete_ambiguity(pair, p, w, angles)?;
    let flipped: Vec<i8> = p.iter().map(|&s| -s).collect();
    // Negating p flips the sign of the second term only.
    let hh = discrete_ambiguity(pair, &flipped, w, angles)?;
    let f = key_term(&hadamard(p, w), angles);
    let cxy = cross_correlation(pair.x(), pair.y())?;
    let cyx = cross_correlation(pair.y(), pair.x())?;
    let vh = scaled_rows(AxisKind::Doppler, &cxy, &f, w.len(), angles);
    let hv = scaled_rows(AxisKind::Doppler, &cyx, &f, w.len(), angles);
    Ok(PolarimetricAmbiguity { vv, vh, hv, hh })
}

/// Cross channels from their unreduced two-term forms:
///
/// ```text
/// VH = ½[C_xy − C_ỹx̃]·Σw e^{jnθ} + ½[C_xy + C_ỹx̃]·f_z(θ)
/// HV = ½[C_yx − C_x̃ỹ]·Σw e^{jnθ} + ½[C_yx + C_x̃ỹ]·f_z(θ)
/// ```
///
/// Used to check the reduction to `C_xy·f_z` and `C_yx·f_z` numerically.
pub fn cross_channels_unreduced(
    pair: &GolayPair,
    p: &[i8],
    w: &[Complex64],
    angles: &[f64],
) -> Result<(AmbiguityMap, AmbiguityMap)> {
    check(pair, p, w)?;
    let xr = reverse(pair.x());
    let yr = reverse(pair.y());
    let cxy = cross_correlation(pair.x(), pair.y())?;
    let cyx = cross_correlation(pair.y(), pair.x())?;
    let cyr_xr = cross_correlation(&yr, &xr)?;
    let cxr_yr = cross_correlation(&xr, &yr)?;
    let sum_w = key_term(w, angles);
    let sum_z = key_term(&hadamard(p, w), angles);
    let cross = |direct: &CorrelationProfile, reversed: &CorrelationProfile| {
        let mut values = Vec::with_capacity(direct.values().len() * angles.len());
        for (&a, &b) in direct.values().iter().zip(reversed.values()) {
            let odd = 0.5 * (a - b) as f64;
            let even = 0.5 * (a + b) as f64;
            values.extend(sum_w.iter().zip(&sum_z).map(|(sw, sz)| sw * odd + sz * even));
        }
        AmbiguityMap::from_rows(AxisKind::Doppler, pair.len(), w.len(), angles.to_vec(), values)
    };
    Ok((cross(&cxy, &cyr_xr), cross(&cyx, &cxr_yr)))
}

/// HH from its own two-term form with an explicit minus on the second term.
pub fn hh_unreduced(
    pair: &GolayPair,
    p: &[i8],
    w: &[Complex64],
    angles: &[f64],
) -> Result<AmbiguityMap> {
    check(pair, p, w)?;
    let cx = autocorrelation(pair.x());
    let cy = autocorrelation(pair.y());
    let sum_w = key_term(w, angles);
    let sum_z = key_term(&hadamard(p, w), angles);
    let mut values = Vec::with_capacity(cx.values().len() * angles.len());
    for (&a, &b) in cx.values().iter().zip(cy.values()) {
        let even = 0.5 * (a + b) as f64;
        let odd = 0.5 * (a - b) as f64;
        values.extend(sum_w.iter().zip(&sum_z).map(|(sw, sz)| sw * even - sz * odd));
    }
    Ok(AmbiguityMap::from_rows(
        AxisKind::Doppler,
        pair.len(),
        w.len(),
        angles.to_vec(),
        values,
    ))
}

/// `U = H · [[VV, VH], [HV, HH]]` at one `(lag, angle index)`.
pub fn output_matrix(
    h: &ScatteringMatrix,
    amb: &PolarimetricAmbiguity,
    lag: isize,
    angle_index: usize,
) -> Result<[[Complex64; 2]; 2]> {
    let a = [
        [amb.vv.get(lag, angle_index)?, amb.vh.get(lag, angle_index)?],
        [amb.hv.get(lag, angle_index)?, amb.hh.get(lag, angle_index)?],
    ];
    let hm = h.as_array();
    let mut u = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (i, row) in u.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = hm[i][0] * a[0][j] + hm[i][1] * a[1][j];
        }
    }
    Ok(u)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullCheck {
    pub holds: bool,
    /// `max_θ |Σ p_n w_n e^{jnθ}| / ‖w‖₂` over the grid.
    pub residual: f64,
}

/// Whether `Σ p_n w_n e^{jnθ}` vanishes (relative to `‖w‖₂`, within `tol`) at
/// every grid angle; this single condition clears the co-channel sidelobes
/// and both cross channels.
pub fn theorem4_check(p: &[i8], w: &[Complex64], grid: &[f64], tol: f64) -> Result<NullCheck> {
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
    let residual = key_term(&hadamard(p, w), grid)
        .iter()
        .map(|v| cabs(*v))
        .fold(0.0, f64::max)
        / w_norm;
    Ok(NullCheck {
        holds: residual <= tol,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambiguity::uniform_angles;
    use crate::golay::generate_golay_pair;
    use alloc::vec;

    fn ones(n: usize) -> Vec<Complex64> {
        vec![Complex64::new(1.0, 0.0); n]
    }

    #[test]
    fn static_alamouti_cancellation() {
        let pair = GolayPair::fixture64();
        let p: Vec<i8> = (0..8).map(|n| if n % 2 == 0 { 1 } else { -1 }).collect();
        let amb = polarimetric_ambiguities(&pair, &p, &ones(8), &[0.0]).unwrap();
        assert!(amb.vh.values().iter().all(|v| v.norm() == 0.0));
        assert!(amb.hv.values().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn hh_is_vv_with_flipped_schedule() {
        let pair = generate_golay_pair(4);
        let p = [1, -1, -1, 1, 1];
        let w: Vec<Complex64> = (0..5).map(|n| Complex64::new(1.0 + n as f64, -0.3)).collect();
        let angles = uniform_angles(0.0, 3.0, 13);
        let amb = polarimetric_ambiguities(&pair, &p, &w, &angles).unwrap();
        let flipped: Vec<i8> = p.iter().map(|s| -s).collect();
        let vv_flipped = discrete_ambiguity(&pair, &flipped, &w, &angles).unwrap();
        assert_eq!(amb.hh, vv_flipped);
        let hh = hh_unreduced(&pair, &p, &w, &angles).unwrap();
        let scale = amb.vv.peak_magnitude();
        for (a, b) in hh.values().iter().zip(amb.hh.values()) {
            assert!((a - b).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn output_matrix_trivial() {
        let pair = generate_golay_pair(2);
        let amb = polarimetric_ambiguities(&pair, &[1, -1], &ones(2), &[0.0, 1.0]).unwrap();
        let zero = ScatteringMatrix {
            vv: Complex64::new(0.0, 0.0),
            vh: Complex64::new(0.0, 0.0),
            hv: Complex64::new(0.0, 0.0),
            hh: Complex64::new(0.0, 0.0),
        };
        let u = output_matrix(&zero, &amb, 0, 1).unwrap();
        assert!(u.iter().flatten().all(|c| c.norm() == 0.0));
        let u = output_matrix(&ScatteringMatrix::identity(), &amb, 1, 0).unwrap();
        assert_eq!(u[0][1], amb.vh.get(1, 0).unwrap());
        assert!(output_matrix(&zero, &amb, 4, 0).is_err());
        assert!(output_matrix(&zero, &amb, 0, 2).is_err());
    }

    #[test]
    fn theorem4_trivial_cases() {
        let r = theorem4_check(&[1; 4], &ones(4), &[0.0], 1e-10).unwrap();
        assert!(!r.holds);
        assert!((r.residual - 2.0).abs() < 1e-15); // N / ‖w‖₂ = 4 / 2
    }
}

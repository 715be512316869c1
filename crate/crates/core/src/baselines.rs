//! Reference schedules: binomial design (BD) and Prouhet–Thue–Morse (PTM).

use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineScheme {
    Binomial,
    Ptm,
}

impl BaselineScheme {
    pub fn as_str(self) -> &'static str {
        match self {
            BaselineScheme::Binomial => "BD",
            BaselineScheme::Ptm => "PTM",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "BD" | "bd" => Some(BaselineScheme::Binomial),
            "PTM" | "ptm" => Some(BaselineScheme::Ptm),
            _ => None,
        }
    }
}

impl fmt::Display for BaselineScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BaselineDesign {
    pub scheme: BaselineScheme,
    pub p: Vec<i8>,
    pub w: Vec<Complex64>,
}

/// Row `n` of Pascal's triangle, exact.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut current = BigUint::from(1u32);
    row.push(current.clone());
    for k in 0..n {
        current = current * BigUint::from(n - k) / BigUint::from(k + 1);
        row.push(current.clone());
    }
    row
}

/// `w_n = C(N−1, n)`, `p_n = (−1)^n` (starting with `+1`).
pub fn binomial_design(pulses: usize) -> Result<BaselineDesign> {
    if pulses < 2 {
        return Err(Error::TooFewPulses(pulses));
    }
    let w = binomial_row(pulses - 1)
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0))
        .collect();
    let p = (0..pulses).map(|n| if n % 2 == 0 { 1 } else { -1 }).collect();
    Ok(BaselineDesign {
        scheme: BaselineScheme::Binomial,
        p,
        w,
    })
}

/// `+1` when the binary digit sum of `n` is even.
pub fn thue_morse_sign(n: usize) -> i8 {
    if n.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Length-`N` prefix of the Thue–Morse sequence with unit weights.
pub fn ptm_schedule(pulses: usize) -> Result<BaselineDesign> {
    if pulses < 1 {
        return Err(Error::InvalidParameter {
            name: "N",
            reason: "at least one pulse is required",
        });
    }
    Ok(BaselineDesign {
        scheme: BaselineScheme::Ptm,
        p: (0..pulses).map(thue_morse_sign).collect(),
        w: alloc::vec![Complex64::new(1.0, 0.0); pulses],
    })
}

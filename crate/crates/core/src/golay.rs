//! Biphase sequences, Golay complementary pairs and aperiodic correlations.
//!
//! Correlations of ±1 sequences are computed in exact `i64` arithmetic, so the
//! complementarity identity `C_x[k] + C_y[k] = 2L·δ_k` is checked without any
//! tolerance.

use alloc::vec::Vec;
use core::ops::Index;

use crate::{Error, Result};

/// A non-empty sequence over `{+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiphaseSequence(Vec<i8>);

impl BiphaseSequence {
    pub fn new(elements: Vec<i8>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((index, &value)) = elements
            .iter()
            .enumerate()
            .find(|(_, &v)| v != 1 && v != -1)
        {
            return Err(Error::InvalidChip {
                index,
                value: value as i64,
            });
        }
        Ok(Self(elements))
    }

    /// Builds a sequence from wide integers, e.g. values parsed from JSON.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, &v)| v != 1 && v != -1)
        {
            return Err(Error::InvalidChip { index, value });
        }
        Self::new(values.iter().map(|&v| v as i8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = i8> + '_ {
        self.0.iter().copied()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|&v| -v).collect())
    }

    fn concat(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Self(out)
    }
}

impl Index<usize> for BiphaseSequence {
    type Output = i8;

    fn index(&self, index: usize) -> &i8 {
        &self.0[index]
    }
}

/// Aperiodic correlation values over lags `k ∈ [-(L-1), L-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    len: usize,
    values: Vec<i64>,
}

impl CorrelationProfile {
    /// Sequence length `L` the profile was computed from.
    pub fn sequence_len(&self) -> usize {
        self.len
    }

    pub fn max_lag(&self) -> isize {
        self.len as isize - 1
    }

    /// Value at lag `k`; zero outside `[-(L-1), L-1]`.
    pub fn get(&self, lag: isize) -> i64 {
        let offset = lag + self.max_lag();
        if offset < 0 || offset as usize >= self.values.len() {
            0
        } else {
            self.values[offset as usize]
        }
    }

    /// Values ordered from lag `-(L-1)` up to `L-1`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `(lag, value)` pairs in ascending lag order.
    pub fn entries(&self) -> impl Iterator<Item = (isize, i64)> + '_ {
        let max_lag = self.max_lag();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (i as isize - max_lag, v))
    }
}

fn correlate(a: &[i8], b: &[i8]) -> CorrelationProfile {
    let len = a.len();
    let max_lag = len as isize - 1;
    let values = (-max_lag..=max_lag)
        .map(|lag| {
            let (a_start, b_start) = if lag >= 0 {
                (0, lag as usize)
            } else {
                ((-lag) as usize, 0)
            };
            let count = len - lag.unsigned_abs();
            a[a_start..a_start + count]
                .iter()
                .zip(&b[b_start..b_start + count])
                .map(|(&u, &v)| (u as i64) * (v as i64))
                .sum()
        })
        .collect();
    CorrelationProfile { len, values }
}

/// `C_s[k] = Σ_l s[l]·s[l+k]`.
pub fn autocorrelation(s: &BiphaseSequence) -> CorrelationProfile {
    correlate(s.as_slice(), s.as_slice())
}

/// `C_ab[k] = Σ_l a[l]·b[l+k]`.
pub fn cross_correlation(a: &BiphaseSequence, b: &BiphaseSequence) -> Result<CorrelationProfile> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(correlate(a.as_slice(), b.as_slice()))
}

pub fn is_golay_pair(x: &BiphaseSequence, y: &BiphaseSequence) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let two_l = 2 * x.len() as i64;
    let cx = autocorrelation(x);
    let cy = autocorrelation(y);
    let complementary = cx
        .entries()
        .zip(cy.values())
        .all(|((lag, a), &b)| a + b == if lag == 0 { two_l } else { 0 });
    Ok(complementary)
}

pub fn reverse(s: &BiphaseSequence) -> BiphaseSequence {
    BiphaseSequence(s.0.iter().rev().copied().collect())
}

/// A pair of equal-length biphase sequences, normally complementary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolayPair {
    x: BiphaseSequence,
    y: BiphaseSequence,
}

impl GolayPair {
    /// Validates equal length and exact complementarity.
    pub fn new(x: BiphaseSequence, y: BiphaseSequence) -> Result<Self> {
        if !is_golay_pair(&x, &y)? {
            return Err(Error::NotGolayPair);
        }
        Ok(Self { x, y })
    }

    /// Only checks equal lengths. The direct ambiguity form is valid for any
    /// such pair; the closed forms re-check complementarity.
    pub fn new_unchecked(x: BiphaseSequence, y: BiphaseSequence) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: y.len(),
            });
        }
        Ok(Self { x, y })
    }

    /// The length-64 pair used throughout the published experiments.
    pub fn fixture64() -> Self {
        Self {
            x: BiphaseSequence(FIXTURE64_X.to_vec()),
            y: BiphaseSequence(FIXTURE64_Y.to_vec()),
        }
    }

    pub fn x(&self) -> &BiphaseSequence {
        &self.x
    }

    pub fn y(&self) -> &BiphaseSequence {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_complementary(&self) -> bool {
        matches!(is_golay_pair(&self.x, &self.y), Ok(true))
    }
}

/// Recursive doubling `(x, y) → (x‖y, x‖−y)` seeded by `([1], [1])`.
pub fn generate_golay_pair(log2_length: u32) -> GolayPair {
    let mut x = BiphaseSequence(alloc::vec![1]);
    let mut y = BiphaseSequence(alloc::vec![1]);
    for _ in 0..log2_length {
        let next_x = x.concat(&y);
        let next_y = x.concat(&y.negated());
        x = next_x;
        y = next_y;
    }
    GolayPair { x, y }
}

pub const FIXTURE64_X: [i8; 64] = [
    1, 1, 1, -1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, -1, 1, //
    1, 1, 1, -1, -1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1, //
    1, 1, 1, -1, 1, 1, -1, 1, -1, -1, -1, 1, -1, -1, 1, -1, //
    -1, -1, -1, 1, 1, 1, -1, 1, 1, 1, 1, -1, -1, -1, 1, -1,
];

pub const FIXTURE64_Y: [i8; 64] = [
    1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 1, 1, 1, -1, -1, -1, //
    1, -1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, -1, 1, 1, 1, 1, -1, 1, //
    1, 1, -1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -1, //
    -1, 1, -1, -1, -1, 1, -1, 1, 1, -1, 1, 1, 1,
];

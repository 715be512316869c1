//! Small dense complex linear algebra: a one-sided (Hestenes) Jacobi SVD and
//! vector norms.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

// Float math goes through libm explicitly: num-traits switches to std when
// another crate in the build enables its `std` feature, and the null basis of
// an ill-conditioned grid is sensitive at the ulp level.

/// `|c|` via libm.
pub(crate) fn cabs(c: Complex64) -> f64 {
    libm::hypot(c.re, c.im)
}

/// `e^{jt}` via libm.
pub(crate) fn cis(t: f64) -> Complex64 {
    let (s, c) = libm::sincos(t);
    Complex64::new(c, s)
}

/// `r·e^{jt}` via libm.
pub(crate) fn polar(r: f64, t: f64) -> Complex64 {
    cis(t) * r
}

pub(crate) fn norm1(v: &[Complex64]) -> f64 {
    v.iter().map(|c| cabs(*c)).sum()
}

pub(crate) fn norm2(v: &[Complex64]) -> f64 {
    libm::sqrt(v.iter().map(|c| c.norm_sqr()).sum())
}

pub(crate) fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Right singular structure of an `rows × cols` matrix.
pub(crate) struct Svd {
    /// Singular values paired with column indices of `v`, sorted descending.
    pub order: Vec<(f64, usize)>,
    /// Columns of the `cols × cols` unitary factor.
    pub v: Vec<Vec<Complex64>>,
}

const MAX_SWEEPS: usize = 80;

/// One-sided Jacobi on the columns of `a` (row-major, `rows × cols`).
///
/// Rotations are applied on the right, so `A·V` keeps orthogonalizing while
/// `V` stays unitary. Works for wide matrices directly: the full `cols × cols`
/// factor is produced, and the surplus columns of `A·V` collapse to zero.
pub(crate) fn jacobi_svd(a: &[Complex64], rows: usize, cols: usize) -> Svd {
    debug_assert_eq!(a.len(), rows * cols);
    let mut g: Vec<Vec<Complex64>> = (0..cols)
        .map(|j| (0..rows).map(|i| a[i * cols + j]).collect())
        .collect();
    let mut v: Vec<Vec<Complex64>> = (0..cols)
        .map(|j| {
            let mut col = vec![Complex64::new(0.0, 0.0); cols];
            col[j] = Complex64::new(1.0, 0.0);
            col
        })
        .collect();

    let threshold = f64::EPSILON;
    // Columns at or below this squared norm are already numerical zeros;
    // rotating them only amplifies rounding in the phase factor.
    let frobenius_sq: f64 = a.iter().map(|c| c.norm_sqr()).sum();
    let negligible = 1e-30 * frobenius_sq;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let alpha: f64 = g[p].iter().map(|c| c.norm_sqr()).sum();
                let beta: f64 = g[q].iter().map(|c| c.norm_sqr()).sum();
                let gamma = inner(&g[p], &g[q]);
                let gamma_abs = cabs(gamma);
                if alpha.min(beta) <= negligible
                    || gamma_abs == 0.0
                    || gamma_abs <= threshold * libm::sqrt(alpha * beta)
                {
                    continue;
                }
                rotated = true;
                // Rotate q by the phase of gamma so the 2x2 Gram block is real.
                let phase = (gamma / gamma_abs).conj();
                let zeta = (beta - alpha) / (2.0 * gamma_abs);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + libm::sqrt(1.0 + zeta * zeta))
                } else {
                    -1.0 / (-zeta + libm::sqrt(1.0 + zeta * zeta))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                rotate(&mut g, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<(f64, usize)> = g
        .iter()
        .enumerate()
        .map(|(j, col)| (norm2(col), j))
        .collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    Svd { order, v }
}

fn rotate(cols: &mut [Vec<Complex64>], p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    let (head, tail) = cols.split_at_mut(q);
    let col_p = &mut head[p];
    let col_q = &mut tail[0];
    for (x, y) in col_p.iter_mut().zip(col_q.iter_mut()) {
        let yq = *y * phase;
        let new_p = *x * c - yq * s;
        let new_q = *x * s + yq * c;
        *x = new_p;
        *y = new_q;
    }
}

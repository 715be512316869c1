use nullwave_core::ambiguity::{
    ambiguity_closed_form, delay_ambiguity, discrete_ambiguity, key_term, sidelobe_metrics,
    uniform_angles, DEFAULT_EVAL_POINTS,
};
use nullwave_core::baselines::{binomial_design, binomial_row, ptm_schedule};
use nullwave_core::design::{
    build_design_matrix, design_ns, null_space, validate_design, AxisKind, ResilienceGrid,
};
use nullwave_core::golay::GolayPair;
use nullwave_core::polarimetric::{
    cross_channels_unreduced, output_matrix, polarimetric_ambiguities, theorem4_check,
    ScatteringMatrix,
};
use nullwave_core::snropt::snr_ratio;
use nullwave_core::Complex64;
use num_traits::ToPrimitive;
use std::f64::consts::PI;

fn z_of(p: &[i8], w: &[Complex64]) -> Vec<Complex64> {
    p.iter().zip(w).map(|(&s, &v)| v * s as f64).collect()
}

#[test]
fn null_space_matches_nalgebra_svd() {
    let grid = ResilienceGrid::uniform(0.0, 2.0, 9, AxisKind::Doppler).unwrap();
    let e = build_design_matrix(&grid, 14).unwrap();
    let basis = null_space(&e, None).unwrap();
    assert_eq!(basis.nullity(), 5);

    let dm = nalgebra::DMatrix::from_fn(e.rows(), e.pulses(), |i, j| {
        let c = e.entry(i, j);
        nalgebra::Complex::new(c.re, c.im)
    });
    let mut ours = basis.singular_values().to_vec();
    ours.truncate(e.rows());
    let mut theirs: Vec<f64> = dm.singular_values().iter().copied().collect();
    theirs.sort_by(|a, b| b.total_cmp(a));
    for (a, b) in ours.iter().zip(&theirs) {
        approx::assert_relative_eq!(a, b, epsilon = 1e-12, max_relative = 1e-10);
    }

    // Every column is annihilated and the columns are orthonormal.
    for (u, col) in basis.columns().iter().enumerate() {
        assert!(e.residual(col).unwrap() < 1e-12);
        for (v, other) in basis.columns().iter().enumerate() {
            let ip: Complex64 = col.iter().zip(other).map(|(a, b)| a.conj() * b).sum();
            let expect = if u == v { 1.0 } else { 0.0 };
            assert!((ip - expect).norm() < 1e-12);
        }
    }
}

#[test]
fn bd_key_term_closed_form() {
    let angles = uniform_angles(0.0, PI, 101);
    for n in [4usize, 16, 48] {
        let d = binomial_design(n).unwrap();
        let f = key_term(&z_of(&d.p, &d.w), &angles);
        for (&t, v) in angles.iter().zip(&f) {
            let expect = (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, t)).powi(n as i32 - 1);
            // Relative to ‖z‖₁ = 2^(N−1), the only scale the alternating sum
            // can resolve: the value itself is far below its rounding error.
            let mass: f64 = d.w.iter().map(|c| c.re).sum();
            assert!(
                (v - expect).norm() <= 1e-10 * mass,
                "N={n} θ={t}: {v} vs {expect}"
            );
        }
    }
}

/// Order-`q` central difference quotient of `f_z` at 0 with step `h`.
///
/// The central difference of `e^{jnθ}` at 0 is exactly `(2j·sin(nh/2))^q`,
/// so it is applied term by term rather than by differencing samples of
/// `f_z` that cancel far below double precision.
fn central_difference(z: &[Complex64], q: usize, h: f64) -> Complex64 {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (k, zn) in z.iter().enumerate() {
        let factor = Complex64::new(0.0, 2.0 * (k as f64 * h / 2.0).sin() / h).powi(q as i32);
        let term = zn * factor;
        re.push(term.re);
        im.push(term.im);
    }
    Complex64::new(neumaier(&re), neumaier(&im))
}

#[test]
fn bd_null_order_at_zero() {
    let h = 1e-3;
    for n in 3..=12usize {
        let d = binomial_design(n).unwrap();
        let z = z_of(&d.p, &d.w);
        // f_z = (1 − e^{jθ})^(N−1): the first nonvanishing derivative at 0 has
        // magnitude (N−1)!, which sets the scale for the vanishing ones.
        let leading = central_difference(&z, n - 1, h).norm();
        let factorial: f64 = (1..n).map(|k| k as f64).product();
        assert!((leading - factorial).abs() <= 1e-2 * factorial, "N={n}: {leading}");
        for q in 0..=(n - 2) {
            let coarse = central_difference(&z, q, h).norm();
            assert!(coarse <= 1e-4 * leading, "N={n} order {q}: {coarse}");
            // A true zero: the quotient is pure O(h²) truncation.
            let fine = central_difference(&z, q, h / 10.0).norm();
            assert!(fine <= 0.011 * coarse + 1e-12 * leading, "N={n} order {q}");
        }
    }
}

fn neumaier(xs: &[f64]) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for &x in xs {
        let t = sum + x;
        comp += if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
        sum = t;
    }
    sum + comp
}

#[test]
fn bd_snr_closed_form() {
    for n in [2usize, 8, 24, 48, 70] {
        let d = binomial_design(n).unwrap();
        let central = binomial_row(2 * n - 2)[n - 1].to_f64().unwrap();
        let expect = 4f64.powi(n as i32 - 1) / central;
        let got = snr_ratio(&d.w).unwrap();
        assert!((got - expect).abs() <= 1e-12 * expect, "N={n}");
    }
}

#[test]
fn ptm_near_zero_doppler() {
    let pair = GolayPair::fixture64();
    let d = ptm_schedule(48).unwrap();
    let angles = uniform_angles(0.0, 0.1, 201);
    let map = discrete_ambiguity(&pair, &d.p, &d.w, &angles).unwrap();
    let m = sidelobe_metrics(&map).unwrap();
    assert!(m.max_prsl_db() <= -60.0, "{}", m.max_prsl_db());
}

#[test]
fn prsl_invariant_to_global_sign_of_p() {
    let pair = GolayPair::fixture64();
    let d = binomial_design(20).unwrap();
    let flipped: Vec<i8> = d.p.iter().map(|s| -s).collect();
    let angles = uniform_angles(0.0, PI, 301);
    let a = sidelobe_metrics(&discrete_ambiguity(&pair, &d.p, &d.w, &angles).unwrap()).unwrap();
    let b = sidelobe_metrics(&discrete_ambiguity(&pair, &flipped, &d.w, &angles).unwrap()).unwrap();
    assert_eq!(a.prsl_db, b.prsl_db);
}

#[test]
fn ns_design_suppresses_on_grid_and_interval() {
    let pair = GolayPair::fixture64();
    let design = design_ns(48, 0.0, 2.0, 47, AxisKind::Doppler).unwrap();
    let e = build_design_matrix(&design.grid, 48).unwrap();
    let report = validate_design(&design.p, &design.w, &e).unwrap();
    assert!(report.is_valid(), "{report:?}");
    assert!(design.p.iter().any(|&s| s > 0) && design.p.iter().any(|&s| s < 0));

    let grid = design.grid.samples().to_vec();
    let map = discrete_ambiguity(&pair, &design.p, &design.w, &grid).unwrap();
    let peak = sidelobe_metrics(&map).unwrap().mainlobe_peak;
    for lag in map.lags().filter(|&k| k != 0) {
        for v in map.row(lag).unwrap() {
            assert!(v.norm() <= 1e-9 * peak);
        }
    }

    let angles = uniform_angles(0.0, 2.0, DEFAULT_EVAL_POINTS);
    let m = sidelobe_metrics(&discrete_ambiguity(&pair, &design.p, &design.w, &angles).unwrap())
        .unwrap();
    assert!(m.max_prsl_db() <= -80.0, "{}", m.max_prsl_db());
}

#[test]
fn bd_prsl_rises_at_large_doppler() {
    let pair = GolayPair::fixture64();
    let d = binomial_design(48).unwrap();
    let angles = uniform_angles(0.0, PI, 629);
    let m = sidelobe_metrics(&discrete_ambiguity(&pair, &d.p, &d.w, &angles).unwrap()).unwrap();
    let at = |t: f64| {
        let i = angles
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - t).abs().total_cmp(&(b.1 - t).abs()))
            .unwrap()
            .0;
        m.prsl_db[i]
    };
    assert!(at(0.5) <= -60.0);
    assert!(at(2.6) > -40.0);
    assert!(at(3.1) > at(2.2));
}

#[test]
fn delay_axis_relabels_identically() {
    let pair = GolayPair::fixture64();
    let design = design_ns(48, 0.0, 2.0, 47, AxisKind::Delay).unwrap();
    assert_eq!(design.kind(), AxisKind::Delay);
    let angles = uniform_angles(0.0, 2.0, 257);
    let a = discrete_ambiguity(&pair, &design.p, &design.w, &angles).unwrap();
    let b = delay_ambiguity(&pair, &design.p, &design.w, &angles).unwrap();
    assert_eq!(a.values(), b.values());
    assert_eq!(b.kind(), AxisKind::Delay);
    let closed = ambiguity_closed_form(&pair, &design.p, &design.w, &angles).unwrap();
    let scale = a.peak_magnitude();
    for (x, y) in a.values().iter().zip(closed.values()) {
        assert!((x - y).norm() <= 1e-12 * scale);
    }
}

#[test]
fn polarimetric_reductions_and_suppression() {
    let pair = GolayPair::fixture64();
    let design = design_ns(48, 0.0, 2.0, 47, AxisKind::Doppler).unwrap();
    let grid = design.grid.samples().to_vec();
    let amb = polarimetric_ambiguities(&pair, &design.p, &design.w, &grid).unwrap();
    let peak = amb.mainlobe_peak();

    let (vh, hv) = cross_channels_unreduced(&pair, &design.p, &design.w, &grid).unwrap();
    for (a, b) in vh.values().iter().zip(amb.vh.values()) {
        assert!((a - b).norm() <= 1e-12 * peak);
    }
    for (a, b) in hv.values().iter().zip(amb.hv.values()) {
        assert!((a - b).norm() <= 1e-12 * peak);
    }

    for (name, map) in amb.channels() {
        for lag in map.lags() {
            let cross = name == "VH" || name == "HV";
            if lag == 0 && !cross {
                continue;
            }
            for v in map.row(lag).unwrap() {
                assert!(v.norm() <= 1e-9 * peak, "{name} lag {lag}");
            }
        }
    }

    let check = theorem4_check(&design.p, &design.w, &grid, 1e-10).unwrap();
    assert!(check.holds, "{}", check.residual);

    // Grid includes θ = 0: U is H up to the common scalar L·Σw.
    let h = ScatteringMatrix {
        vv: Complex64::new(0.8, 0.1),
        vh: Complex64::new(-0.2, 0.3),
        hv: Complex64::new(0.05, -0.4),
        hh: Complex64::new(1.1, 0.0),
    };
    let u = output_matrix(&h, &amb, 0, 0).unwrap();
    let scalar = amb.vv.get(0, 0).unwrap();
    let hm = h.as_array();
    for i in 0..2 {
        for j in 0..2 {
            assert!((u[i][j] - hm[i][j] * scalar).norm() <= 1e-9 * peak);
        }
    }
    let u = output_matrix(&ScatteringMatrix::identity(), &amb, 5, 10).unwrap();
    assert!(u.iter().flatten().all(|c| c.norm() <= 1e-9 * peak));
}

#[test]
fn binomial_design_passes_null_check_at_zero() {
    let d = binomial_design(10).unwrap();
    assert!(theorem4_check(&d.p, &d.w, &[0.0], 1e-12).unwrap().holds);
}

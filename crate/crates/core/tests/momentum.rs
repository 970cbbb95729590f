use std::f64::consts::PI;

use aisw_core::model::wavenumber_q;
use aisw_core::momentum::{
    component_integrals, momentum_density, numeric_fourier_oracle, peak_partition, phi_components,
    sample_momentum_density,
};
use aisw_core::wavefunction::{eval_psi, region_probabilities};
use aisw_core::{solve_spectrum, solve_state, tune_all, Constants64, Eigenstate64, Regime, Well64};
use num_complex::Complex64;

fn tuned_states() -> Vec<(Eigenstate64, Well64)> {
    tune_all(3.0, 3.0, 9, &Constants64::default())
        .unwrap()
        .into_iter()
        .map(|t| {
            let w = Well64::new(3.0, 3.0, t.v0).unwrap();
            (solve_state(&w, t.n).unwrap(), w)
        })
        .collect()
}

// Fixed-grid composite Simpson of (2πħ)^(-1/2) ∫ ψ e^(-ipx/ħ) dx.
fn simpson_fourier(s: &Eigenstate64, w: &Well64, p: f64) -> Complex64 {
    let hbar = w.constants().hbar();
    let segment = |lo: f64, hi: f64| {
        let n = 8000;
        let h = (hi - lo) / n as f64;
        let f = |x: f64| Complex64::from_polar(eval_psi(s, w, x).unwrap(), -p * x / hbar);
        let mut acc = f(lo) + f(hi);
        for i in 1..n {
            acc += f(lo + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        acc * (h / 3.0)
    };
    (segment(-w.a(), 0.0) + segment(0.0, w.b())) / (2.0 * PI * hbar).sqrt()
}

fn local_maxima(xs: &[f64], ys: &[f64]) -> Vec<(f64, f64)> {
    (1..ys.len() - 1)
        .filter(|&i| ys[i] > ys[i - 1] && ys[i] >= ys[i + 1])
        .map(|i| (xs[i], ys[i]))
        .collect()
}

fn nearest(maxima: &[(f64, f64)], target: f64) -> (f64, f64) {
    *maxima
        .iter()
        .min_by(|l, r| (l.0 - target).abs().total_cmp(&(r.0 - target).abs()))
        .unwrap()
}

#[test]
fn fourier_oracle_agrees_with_fixed_grid() {
    let w33 = Well64::new(3.0, 3.0, 33.0).unwrap();
    let mut cases: Vec<(Eigenstate64, Well64)> = solve_spectrum(&w33, 9)
        .unwrap()
        .states
        .into_iter()
        .map(|s| (s, w33))
        .collect();
    cases.extend(tuned_states());
    for (s, w) in cases {
        for p in [-7.5, -2.0, 0.0, 0.4, 3.3, 6.1] {
            let diff = (numeric_fourier_oracle(&s, &w, p) - simpson_fourier(&s, &w, p)).norm();
            assert!(diff < 1e-10, "{:?} n={} p={p}: {diff}", s.regime, s.n);
        }
    }
}

#[test]
fn closed_form_matches_oracle() {
    for (s, w) in tuned_states() {
        let pk = s.k;
        for i in 0..=120 {
            let p = -3.0 * pk + 6.0 * pk * i as f64 / 120.0;
            let amp = phi_components(&s, &w, p).unwrap();
            assert_eq!(amp.total, amp.phi_plus + amp.phi_minus + amp.phi_zero);
            assert!((amp.total - numeric_fourier_oracle(&s, &w, p)).norm() < 1e-8);
        }
    }
}

#[test]
fn special_points() {
    for (s, w) in tuned_states() {
        let pref = s.a_coeff() / (2.0 * PI).sqrt();
        let plus = phi_components(&s, &w, -s.k).unwrap().phi_plus.norm();
        let minus = phi_components(&s, &w, s.k).unwrap().phi_minus.norm();
        assert!((plus - pref * 1.5).abs() < 1e-14 && (minus - pref * 1.5).abs() < 1e-14);

        // φ₀(0) against direct quadrature of ψ over the step
        let m = 4000;
        let h = w.b() / m as f64;
        let mut acc = eval_psi(&s, &w, f64::MIN_POSITIVE).unwrap();
        for i in 1..m {
            acc += eval_psi(&s, &w, i as f64 * h).unwrap() * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let step = acc * h / 3.0 / (2.0 * PI).sqrt();
        let zero = phi_components(&s, &w, 0.0).unwrap().phi_zero;
        assert!((zero.re - step).abs() < 1e-12 && zero.im == 0.0);
        assert!((zero.re - pref * (s.k * 3.0).sin() * 1.5).abs() < 1e-14);
    }
}

#[test]
fn hermitian_and_even_density() {
    let mut cases = tuned_states();
    for v0 in [0.0, 33.0] {
        let w = Well64::new(3.0, 3.0, v0).unwrap();
        cases.extend(
            solve_spectrum(&w, 9)
                .unwrap()
                .states
                .into_iter()
                .map(|s| (s, w)),
        );
    }
    for (s, w) in cases {
        for p in [0.2, 1.1, 3.7, 8.4] {
            let (l, r) = (
                numeric_fourier_oracle(&s, &w, -p),
                numeric_fourier_oracle(&s, &w, p),
            );
            assert!((l - r.conj()).norm() < 1e-10);
            assert!((l.norm() - r.norm()).abs() < 1e-10);
        }
    }
}

#[test]
fn component_integrals_are_consistent() {
    let states = tuned_states();
    for (s, w) in &states {
        let c = component_integrals(s, w).unwrap();
        assert!((c.total() - 1.0).abs() < 1e-12);
        assert!((c.i_zero - region_probabilities(s, w).1).abs() < 1e-12);
        assert_eq!(c.cross_zero, 0.0);
    }
    // the ± interference integral shrinks like 1/(ka)^2; 2.0e-3 at n = 6, below 1e-3 from n = 9
    let cross: Vec<f64> = states
        .iter()
        .map(|(s, w)| component_integrals(s, w).unwrap().cross_pm)
        .collect();
    for pair in cross.windows(2) {
        assert!(pair[1].abs() < pair[0].abs());
    }
    assert!((cross[5] - 1.988e-3).abs() < 1e-6);
    assert!(cross[8].abs() < 1e-3);
}

#[test]
fn cross_pm_against_direct_integral() {
    // Parseval: the ± interference is the -A²cos(2k(x+a))/2 part of A²sin²(k(x+a)) on the left
    let (s, w) = &tuned_states()[5];
    let (a, k, amp) = (w.a(), s.k, s.a_coeff());
    let m = 20_000;
    let h = a / m as f64;
    let f = |x: f64| -0.5 * amp * amp * (2.0 * k * (x + a)).cos();
    let mut acc = f(-a) + f(0.0);
    for i in 1..m {
        acc += f(-a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    let direct = acc * h / 3.0;
    let closed = component_integrals(s, w).unwrap().cross_pm;
    assert!((direct - closed).abs() < 1e-12, "{direct} {closed}");
}

#[test]
fn interference_at_origin_alternates() {
    let signs: Vec<bool> = tuned_states()
        .iter()
        .map(|(s, w)| phi_components(s, w, 0.0).unwrap().zero_cross_term() > 0.0)
        .collect();
    assert!(signs[0]);
    for pair in signs.windows(2) {
        assert_ne!(pair[0], pair[1]);
    }
}

#[test]
fn central_peak_alternates_with_parity() {
    for (s, w) in tuned_states() {
        // central region |p| < ħk/2; flanking maxima may sit on the ±ħk peaks themselves
        let edge = 1.5 * s.k;
        let n = 1201;
        let xs: Vec<f64> = (0..n)
            .map(|i| -edge + 2.0 * edge * i as f64 / (n - 1) as f64)
            .collect();
        let ys: Vec<f64> = xs.iter().map(|&p| momentum_density(&s, &w, p)).collect();
        let mid = n / 2;
        let top = xs
            .iter()
            .zip(&ys)
            .filter(|(p, _)| p.abs() < s.k / 2.0)
            .map(|(_, y)| *y)
            .fold(f64::MIN, f64::max);
        if s.n % 2 == 1 {
            assert_eq!(ys[mid], top, "n = {}", s.n);
        } else {
            assert!(
                ys[mid] < ys[mid - 1] && ys[mid] < ys[mid + 1],
                "n = {}",
                s.n
            );
            let flanks = local_maxima(&xs, &ys);
            assert!(
                flanks.iter().any(|m| m.0 < 0.0) && flanks.iter().any(|m| m.0 > 0.0),
                "n = {}",
                s.n
            );
        }
    }
}

#[test]
fn partition_is_symmetric_and_tracks_step_probability() {
    for (s, w) in tuned_states() {
        let part = peak_partition(&s, &w).unwrap();
        assert!((part.left - part.right).abs() < 1e-10);
        assert!((part.total() - 1.0).abs() < 1e-3);
        if s.n >= 6 {
            assert!((part.center - region_probabilities(&s, &w).1).abs() <= 0.02);
        }
    }
}

#[test]
fn sampled_grid_integrates_to_one() {
    for (s, w) in tuned_states() {
        let d = sample_momentum_density(&s, &w, 3.0 * s.k, 4001).unwrap();
        assert!(
            (d.integral() - 1.0).abs() < 0.02,
            "n = {}: {}",
            s.n,
            d.integral()
        );
        for i in 0..d.len() {
            assert_eq!(d.abscissae[i], -d.abscissae[d.len() - 1 - i]);
            assert_eq!(d.values[i], d.values[d.len() - 1 - i]);
        }
    }
}

#[test]
fn below_states_have_two_peaks_near_k() {
    let w = Well64::new(3.0, 3.0, 33.0).unwrap();
    let states = solve_spectrum(&w, 5).unwrap().states;
    let grid = |s: &Eigenstate64| {
        let pmax = 3.0 * s.k;
        let xs: Vec<f64> = (0..=400)
            .map(|i| -pmax + 2.0 * pmax * i as f64 / 400.0)
            .collect();
        let ys: Vec<f64> = xs.iter().map(|&p| momentum_density(s, &w, p)).collect();
        (xs, ys)
    };

    // ground state: one broad peak at the origin
    let (xs, ys) = grid(&states[0]);
    let maxima = local_maxima(&xs, &ys);
    assert_eq!(maxima.len(), 1);
    assert!(maxima[0].0.abs() < 1e-9);

    let lobe = PI / w.a();
    let mut last = 0.0;
    for s in &states[1..] {
        assert_eq!(s.regime, Regime::Below);
        let (xs, ys) = grid(s);
        let mut maxima = local_maxima(&xs, &ys);
        maxima.sort_by(|l, r| r.1.total_cmp(&l.1));
        let (p0, p1) = (maxima[0].0, maxima[1].0);
        assert!((p0 + p1).abs() < 1e-9, "n = {}", s.n);
        assert!(
            (p0.abs() - s.k).abs() < lobe,
            "n = {}: {p0} vs {}",
            s.n,
            s.k
        );
        assert!(p0.abs() > last);
        last = p0.abs();
    }
}

#[test]
fn above_states_have_peaks_near_q_and_k() {
    let w = Well64::new(3.0, 3.0, 33.0).unwrap();
    for s in solve_spectrum(&w, 9)
        .unwrap()
        .states
        .iter()
        .filter(|s| s.regime == Regime::Above)
    {
        let q = wavenumber_q(s.energy, &w).unwrap();
        let pmax = 1.5 * s.k;
        let n = 601;
        let xs: Vec<f64> = (0..n)
            .map(|i| -pmax + 2.0 * pmax * i as f64 / (n - 1) as f64)
            .collect();
        let ys: Vec<f64> = xs.iter().map(|&p| momentum_density(s, &w, p)).collect();
        let maxima = local_maxima(&xs, &ys);
        for (target, lobe) in [(s.k, PI / w.a()), (q, PI / w.b())] {
            for sign in [-1.0, 1.0] {
                let (p, _) = nearest(&maxima, sign * target);
                assert!(
                    (p - sign * target).abs() < lobe,
                    "n={} target {target}: {p}",
                    s.n
                );
            }
        }
        let q_peak = nearest(&maxima, q).1;
        let k_peak = nearest(&maxima, s.k).1;
        assert!(q_peak > k_peak, "n = {}", s.n);
    }
}

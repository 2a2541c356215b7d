//! The physics applications computed along independent routes.

use r2reduce::applications::*;
use r2reduce::quadrature::Tolerance;
use r2reduce::reducer::direct_2d;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn tight() -> Tolerance {
    Tolerance::new(1e-11, 1e-300, 20_000_000).unwrap()
}

#[test]
fn yukawa_closed_form_against_oracle() {
    let s = YukawaPairSpec::new(1.0, 2.0, 1.0).unwrap();
    let closed = yukawa_pair(&s).unwrap();
    let oracle = yukawa_pair_oracle(&s, &tight()).unwrap();
    assert!(oracle.converged);
    assert!(rel(oracle.value.re, closed) < 1e-6, "{} vs {closed}", oracle.value.re);
}

#[test]
fn yukawa_routes_agree_on_random_specs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let eta1 = rng.gen_range(0.3..3.0);
        let eta2 = rng.gen_range(0.3..3.0);
        let x2 = rng.gen_range(0.2..3.0);
        let s = YukawaPairSpec::new(eta1, eta2, x2).unwrap();
        let closed = yukawa_pair(&s).unwrap();
        let reduced = yukawa_pair_reduced(&s, &tight()).unwrap();
        let oracle = yukawa_pair_oracle(&s, &tight()).unwrap();
        assert!(reduced.converged && oracle.converged);
        assert!(rel(reduced.value.re, closed) < 1e-8, "{s:?}: reduced {} closed {closed}", reduced.value.re);
        assert!(rel(oracle.value.re, closed) < 1e-6, "{s:?}: oracle {} closed {closed}", oracle.value.re);
        assert!(rel(reduced.value.re, oracle.value.re) < 1e-6);
    }
}

#[test]
fn exponent_choice_invariance() {
    for (eta1, eta2, x2) in [(1.0, 2.0, 1.0), (0.7, 0.4, 2.5), (1.5, 1.5, 0.5)] {
        let s = YukawaPairSpec::new(eta1, eta2, x2).unwrap();
        let (p, f) = yukawa_instance(&s);
        let (pa, fa) = yukawa_instance_alternate(&s);
        let main = reduce_instance(&p, &f, &tight()).unwrap().value.re;
        let alt = reduce_instance(&pa, &fa, &tight()).unwrap().value.re;
        assert!(rel(alt, main) < 1e-8, "{s:?}: {alt} vs {main}");
        let alt_oracle = direct_2d(&pa, &fa, &tight()).unwrap().value.re;
        assert!(rel(alt_oracle, main) < 1e-6);
    }
}

#[test]
fn equal_etas_through_catalog() {
    let s = YukawaPairSpec::new(1.3, 1.3, 0.8).unwrap();
    let r = yukawa_pair_reduced(&s, &tight()).unwrap();
    assert!(rel(r.value.re, yukawa_pair_equal(1.3, 0.8).unwrap()) < 1e-9);
}

fn grid() -> Vec<FourierSpec> {
    let mut out = Vec::new();
    for k in [0.5, 1.0, 2.0] {
        for ratio in [0.5, 1.0, 2.0] {
            for x2 in [0.5, 1.0, 2.0] {
                let eta1 = 1.0;
                out.push(FourierSpec::new(k, 0.0, eta1, ratio * eta1, x2).unwrap());
                out.push(FourierSpec::new(k, 0.5 * k * x2, eta1, ratio * eta1, x2).unwrap());
            }
        }
    }
    out
}

#[test]
fn fourier_parametrizations_agree_on_grid() {
    let tol = Tolerance::default();
    for s in grid() {
        let e = fourier_pair_erfi(&s, &tol).unwrap();
        let t = fourier_pair_tau(&s, &tol).unwrap();
        assert!(e.converged && t.converged, "{s:?}");
        let d = (e.value - t.value).norm() / t.value.norm();
        assert!(d < 1e-6, "{s:?}: erfi {} tau {}", e.value, t.value);
    }
}

#[test]
fn fourier_erfi_against_oracle() {
    let s = FourierSpec::new(1.0, 0.5, 1.0, 2.0, 1.0).unwrap();
    let (p, f) = fourier_instance(&s);
    let oracle = direct_2d(&p, &f, &tight()).unwrap();
    let e = fourier_pair_erfi(&s, &Tolerance::default()).unwrap();
    assert!((e.value - oracle.value).norm() < 1e-6 * oracle.value.norm());
}

#[test]
fn fourier_small_k_limit() {
    let s = FourierSpec::new(1e-3, 0.0, 1.0, 2.0, 1.0).unwrap();
    let e = fourier_pair_erfi(&s, &Tolerance::default()).unwrap();
    let y = yukawa_pair(&s.pair()).unwrap();
    assert!(rel(e.value.re, y) < 1e-3);
    let below = FourierSpec::new(1e-4, 0.0, 1.0, 2.0, 1.0).unwrap();
    assert!(rel(fourier_pair_erfi(&below, &Tolerance::default()).unwrap().value.re, y) < 1e-3);
}

#[test]
fn fourier_real_without_phase() {
    let s = FourierSpec::new(1.0, 0.0, 1.0, 0.5, 1.0).unwrap();
    let e = fourier_pair_erfi(&s, &Tolerance::default()).unwrap();
    assert!(e.value.im.abs() < 1e-12 * e.value.re.abs());
}

#[test]
fn fourier_hermiticity() {
    let tol = Tolerance::default();
    let s = FourierSpec::new(1.5, 0.9, 0.8, 1.7, 1.2).unwrap();
    let flipped = FourierSpec { k_dot_x2: -0.9, ..s };
    for route in [fourier_pair_erfi, fourier_pair_tau] {
        let a = route(&s, &tol).unwrap().value;
        let b = route(&flipped, &tol).unwrap().value;
        assert!((a.conj() - b).norm() < 1e-10 * a.norm());
    }
}

#[test]
fn cheshire_derivative_matches_finite_difference() {
    let tol = Tolerance::default();
    let k_f = 1.3;
    let x2 = 1.4;
    let k_dot_x2 = 0.3 * 0.5 * k_f * x2;
    let analytic = cheshire_overlap(k_f, k_dot_x2, x2, &tol).unwrap().value;
    let at = |eta2: f64| {
        let s = FourierSpec::new(0.5 * k_f, k_dot_x2, 1.0, eta2, x2).unwrap();
        fourier_pair_tau(&s, &tol).unwrap().value
    };
    let h = 1e-5;
    let fd = -(at(0.5 + h) - at(0.5 - h)) / (2.0 * h) * (0.5f64).powf(1.5) / std::f64::consts::PI;
    assert!((analytic - fd).norm() < 1e-7 * analytic.norm(), "{analytic} vs {fd}");
}

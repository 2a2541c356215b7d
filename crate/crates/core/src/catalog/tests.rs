use super::*;
use crate::specfun::bessel_k;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn pq(n: i32, m: i32, nu: i32, p: f64, q: f64) -> Params {
    Params {
        p,
        q,
        ..Params::with_triple(n, m, nu)
    }
}

#[test]
fn registry_ids_unique_and_large_enough() {
    let rules = list_rules();
    assert!(rules.len() >= 20);
    for (i, r) in rules.iter().enumerate() {
        assert!(rules[i + 1..].iter().all(|s| s.id != r.id), "duplicate {}", r.id);
    }
    let e1 = rules.iter().find(|r| r.id == "E1-pbm-corrected").unwrap();
    assert_eq!(e1.triple, "(0,0,1)");
    let k1 = rules.iter().find(|r| r.id == "K1-111").unwrap();
    assert_eq!(k1.triple, "(1,1,1)");
}

#[test]
fn no_free_p_tilde_rule() {
    // the (3−ν,4−ν,ν) reduction with free p is not in the catalog: only the
    // tilde form with pinned p is
    for r in registry().iter().filter(|r| r.pattern == (TriplePattern::NuFamily { n0: 3, m0: 4 })) {
        assert!(r.tilde);
        assert!(!r.coefficients.contains(&Coef::P));
    }
}

#[test]
fn lookup_examples() {
    assert_eq!(lookup_rule(Triple::new(0, 0, 1), Family::PositiveExp).unwrap().id, "E1-pbm-corrected");
    assert_eq!(lookup_rule(Triple::new(2, 2, 0), Family::PositiveExp).unwrap().id, "K2-220");
    assert!(lookup_rule(Triple::new(9, 9, 9), Family::PositiveExp).is_none());
    assert_eq!(lookup_rule(Triple::new(1, 4, 2), Family::MixedTilde), None);
    assert_eq!(lookup_rule(Triple::new(-1, 2, 2), Family::MixedTilde).unwrap().id, "T2");
}

#[test]
fn aliases_resolve_to_trusted_entries() {
    assert_eq!(find_rule("E1").unwrap().id, "E1-pbm-corrected");
    assert_eq!(find_rule("T2").unwrap().status, Status::Trusted);
    assert_eq!(find_rule("T2-as-printed").unwrap().status, Status::AsPrinted);
    assert!(matches!(find_rule("Z9"), Err(Error::UnknownRule(_))));
}

#[test]
fn kernel_weight_examples() {
    let e1 = find_rule("E1").unwrap();
    let w = kernel_weight(e1, &pq(0, 0, 1, 1.0, 1.0), 0.25).unwrap();
    let want = 2.0 * std::f64::consts::PI.sqrt() * (-1f64).exp();
    assert!(rel(w.re, want) < 1e-14);
    // 2√π/e = 1.3040987; the 1.3040728 sometimes quoted is a rounding slip
    assert!((w.re - 1.304_098_7).abs() < 1e-7);

    let k1 = find_rule("K1").unwrap();
    let w = kernel_weight(k1, &pq(1, 1, 1, 1.0, 1.0), 1.0).unwrap();
    let want = 2.0 * (-2f64).exp() * bessel_k(0, 2.0).unwrap();
    assert!(rel(w.re, want) < 1e-14);
    assert!((w.re - 0.030_827_8).abs() < 1e-7);

    let n5 = find_rule("N5").unwrap();
    let p = Params {
        a: 2.0,
        b: 1.0,
        ..Params::with_triple(2, 2, 2)
    };
    let w = kernel_weight(n5, &p, 1.0).unwrap();
    assert!((w.re - 0.232_544_2).abs() < 1e-7);
    let printed = kernel_weight(find_rule("N5-222-as-printed").unwrap(), &p, 1.0).unwrap();
    assert_eq!(w, printed);
}

#[test]
fn applicability_messages() {
    let e1 = find_rule("E1").unwrap();
    let err = kernel_weight(e1, &pq(0, 0, 1, 0.0, 1.0), 1.0).unwrap_err();
    assert!(err.to_string().contains("requires p>0"), "{err}");
    let err = e1.check_applicable(&pq(1, 0, 1, 1.0, 1.0)).unwrap_err();
    assert!(err.to_string().contains("triple"));
    let mut p = pq(0, 0, 1, 1.0, 1.0);
    p.a = 1.0;
    assert!(e1.check_applicable(&p).unwrap_err().to_string().contains("requires a=0"));
    assert!(kernel_weight(e1, &pq(0, 0, 1, 1.0, 1.0), 0.0).is_err());
}

#[test]
fn reduce_e1_example() {
    let e1 = find_rule("E1").unwrap();
    let r = reduce_to_1d(e1, &pq(0, 0, 1, 1.0, 1.0), &TestIntegrand::new(0.0, 1.0), &Tolerance::default()).unwrap();
    let want = 2.0 * std::f64::consts::PI.sqrt() / 5.0;
    assert!(r.converged);
    assert!(rel(r.value.re, want) < 1e-12);
    assert!((r.value.re - 0.708_981_5).abs() < 1e-7);
}

#[test]
fn convergence_floor_enforced() {
    let k3 = find_rule("K3").unwrap();
    let err = reduce_to_1d(k3, &pq(4, 0, 0, 1.0, 1.0), &TestIntegrand::new(1.0, 0.0), &Tolerance::default());
    assert!(matches!(err, Err(Error::BelowConvergenceFloor { .. })));
    assert!(reduce_to_1d(k3, &pq(4, 0, 0, 1.0, 1.0), &TestIntegrand::new(1.2, 0.0), &Tolerance::default()).is_ok());
}

#[test]
fn n6_reduces_to_gamma_ratio_integral() {
    // n=m=4, ν=0: Γ(1)Γ(1)/Γ(2) = 1, kernel t^{−3} e^{−t−1/(4t)}, f = t^{3/2}
    let n6 = find_rule("N6").unwrap();
    let p = Params {
        a: 0.25,
        b: 0.25,
        c: 1.0,
        ..Params::with_triple(4, 4, 0)
    };
    let r = reduce_to_1d(n6, &p, &TestIntegrand::new(1.5, 0.0), &Tolerance::default()).unwrap();
    // ∫ t^{−3/2} e^{−t−1/(4t)} dt = √π/√(1/4) · e^{−2·√(1/4)} = 2√π e^{−1}
    let want = 2.0 * std::f64::consts::PI.sqrt() * (-1f64).exp();
    assert!(rel(r.value.re, want) < 1e-11, "{} vs {want}", r.value.re);
}

#[test]
fn g1_kummer_matches_bessel_simplification() {
    use crate::specfun::{gamma, kummer_via_bessel_auto};
    // m = n ± 2M makes B − 2A an integer
    for (n, m, nu) in [(4, 4, 0), (2, 4, 1), (4, 2, 1), (1, 5, 2), (3, 3, 3), (6, 2, 2)] {
        let p = Params {
            a: 1.3,
            b: 0.4,
            c: 0.7,
            h: Complex64::new(0.6, 0.0),
            ..Params::with_triple(n, m, nu)
        };
        let rule = find_rule("G1").unwrap();
        let (nf, mf, nuf) = (n as f64, m as f64, nu as f64);
        let a = 0.5 * (nf + nuf - 2.0);
        let b = 0.5 * (mf + nf + 2.0 * nuf - 4.0);
        for &t in &[0.2, 1.0, 3.0] {
            let w = kernel_weight(rule, &p, t).unwrap().re;
            let z = -(p.a - p.b + p.h.re * t) / t;
            let Some(Ok(f)) = kummer_via_bessel_auto(a, b, z) else {
                continue;
            };
            let pre = gamma(0.5 * (mf + nuf - 2.0)).unwrap() * gamma(a).unwrap() / gamma(b).unwrap();
            let alt = pre * t.powf(0.5 * (2.0 - mf - nf - nuf)) * (-p.b / t - p.c * t).exp() * f;
            assert!(rel(w, alt) < 1e-9, "({n},{m},{nu}) t={t}: {w} vs {alt}");
        }
    }
}

#[test]
fn descriptors_serialize() {
    let json = serde_json::to_string(&list_rules()).unwrap();
    let back: Vec<RuleDescriptor> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, list_rules());
    assert!(json.contains("\"family\":\"positive-exp\""));
}

#[test]
fn family_names_round_trip() {
    for f in Family::ALL {
        assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
    }
    assert!("nope".parse::<Family>().is_err());
}

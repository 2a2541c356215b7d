use num_complex::Complex64;

use super::{Coef, Family, KernelTerm, Params, ReductionRule, Special, Status, Triple, TriplePattern};
use crate::error::Result;
use crate::specfun::gamma;

const SQRT_PI: f64 = 1.772_453_850_905_516;

const PQ: &[Coef] = &[Coef::C, Coef::P, Coef::Q];
const AB: &[Coef] = &[Coef::A, Coef::B, Coef::C];
const ABH: &[Coef] = &[Coef::A, Coef::B, Coef::C, Coef::H];
const ABHJ: &[Coef] = &[Coef::A, Coef::B, Coef::C, Coef::H, Coef::J];

fn fixed(n: i32, m: i32, nu: i32) -> TriplePattern {
    TriplePattern::Fixed {
        triple: Triple::new(n, m, nu),
    }
}

fn ensure(cond: bool, msg: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn minus_infinity(_: &Params) -> f64 {
    f64::NEG_INFINITY
}

// ---- positive exponents: p, q > 0 -------------------------------------

fn check_pq(p: &Params) -> std::result::Result<(), String> {
    ensure(p.p > 0.0, "requires p>0")?;
    ensure(p.q > 0.0, "requires q>0")
}

fn lambda(p: &Params) -> f64 {
    let s = p.p.sqrt() + p.q.sqrt();
    s * s
}

fn e_term(p: &Params, coeff: f64, alpha: f64) -> KernelTerm {
    KernelTerm::elementary(coeff, alpha, lambda(p) + p.c, 0.0)
}

fn e1_coeff(p: &Params) -> f64 {
    SQRT_PI * (p.p.sqrt() + p.q.sqrt()) / (p.p * p.q).sqrt()
}

fn e1(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![e_term(p, e1_coeff(p), 0.0)])
}

fn e1_uncorrected(p: &Params) -> Result<Vec<KernelTerm>> {
    let coeff = SQRT_PI / (p.p * p.q * (p.p + p.q)).sqrt();
    Ok(vec![e_term(p, coeff, 0.0)])
}

fn e2(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![e_term(p, e1_coeff(p), -0.5)])
}

fn e3_terms(p: &Params, shift: f64) -> Vec<KernelTerm> {
    let (sp, sq) = (p.p.sqrt(), p.q.sqrt());
    vec![
        e_term(p, SQRT_PI * lambda(p) / (p.p * sq), 0.5 + shift),
        e_term(p, SQRT_PI / (2.0 * p.p * sp), -0.5 + shift),
    ]
}

fn e3(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(e3_terms(p, 0.0))
}

fn e3_printed(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(e3_terms(p, 0.5))
}

fn e4(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![e_term(p, SQRT_PI / p.q.sqrt(), -1.5)])
}

fn e5(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![
        e_term(p, SQRT_PI / (2.0 * p.q * p.q.sqrt()), -2.5),
        e_term(p, SQRT_PI * p.p.sqrt() / p.q, -1.5),
    ])
}

fn k_term(p: &Params, coeff: f64, alpha: f64, order: u32) -> KernelTerm {
    let scale = 2.0 * (p.p * p.q).sqrt();
    KernelTerm::new(coeff, alpha, p.p + p.q + p.c, 0.0, Special::BesselK { order, scale })
}

fn k1(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![k_term(p, 2.0, -0.5, 0)])
}

fn k2(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![k_term(p, 2.0, -1.0, 0)])
}

fn k3(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![k_term(p, 2.0 * (p.p / p.q).sqrt(), -1.0, 1)])
}

fn k4(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![k_term(p, 2.0 * (p.p / p.q).sqrt(), -1.5, 1)])
}

fn k5(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![k_term(p, 2.0 * p.p / p.q, -1.5, 2)])
}

fn k6(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(vec![
        k_term(p, 2.0, 0.5, 0),
        k_term(p, 2.0 * (p.q / p.p).sqrt(), 0.5, 1),
    ])
}

fn k7(p: &Params) -> Result<Vec<KernelTerm>> {
    let (sp, sq) = (p.p.sqrt(), p.q.sqrt());
    Ok(vec![
        k_term(p, 2.0 * (p.p + p.q) / p.p, 1.5, 0),
        k_term(p, 4.0 * sq / sp, 1.5, 1),
        k_term(p, 2.0 * sq / (p.p * sp), 0.5, 1),
    ])
}

// ---- inverse exponents: a, b > 0 ----------------------------------------

fn check_ab_distinct(p: &Params) -> std::result::Result<(), String> {
    ensure(p.a > 0.0, "requires a>0")?;
    ensure(p.b > 0.0, "requires b>0")?;
    ensure(p.a != p.b, "requires a!=b (use N6 for a=b)")
}

fn check_a_gt_b(p: &Params) -> std::result::Result<(), String> {
    ensure(p.b >= 0.0, "requires b>=0")?;
    ensure(p.a > p.b, "requires a>b")
}

fn n1(p: &Params) -> Result<Vec<KernelTerm>> {
    let d = p.a - p.b;
    Ok(vec![
        KernelTerm::elementary(1.0 / (d * d), -0.5, p.c, p.a),
        KernelTerm::elementary(1.0 / d, -1.5, p.c, p.b),
        KernelTerm::elementary(-1.0 / (d * d), -0.5, p.c, p.b),
    ])
}

fn n2(p: &Params) -> Result<Vec<KernelTerm>> {
    let d = p.a - p.b;
    let (d2, d3) = (d * d, d * d * d);
    Ok(vec![
        KernelTerm::elementary(1.0 / d2, -1.5, p.c, p.b),
        KernelTerm::elementary(-2.0 / d3, -0.5, p.c, p.b),
        KernelTerm::elementary(1.0 / d2, -1.5, p.c, p.a),
        KernelTerm::elementary(2.0 / d3, -0.5, p.c, p.a),
    ])
}

fn n3(p: &Params) -> Result<Vec<KernelTerm>> {
    let d = p.a - p.b;
    let erf = Special::ErfOfInvSqrt { amount: d };
    Ok(vec![
        KernelTerm::new(SQRT_PI / d.sqrt(), -1.5, p.c, p.b, erf),
        KernelTerm::new(-0.5 * SQRT_PI / (d * d.sqrt()), -0.5, p.c, p.b, erf),
        KernelTerm::elementary(1.0 / d, -1.0, p.c, p.a),
    ])
}

fn n3_floor(p: &Params) -> f64 {
    if p.b > 0.0 {
        f64::NEG_INFINITY
    } else {
        0.5
    }
}

fn n4(p: &Params) -> Result<Vec<KernelTerm>> {
    let d = p.a - p.b;
    let erf = Special::ErfOfInvSqrt { amount: d };
    Ok(vec![KernelTerm::new(SQRT_PI / d.sqrt(), -1.0, p.c, p.b, erf)])
}

fn n4_floor(p: &Params) -> f64 {
    if p.b > 0.0 {
        f64::NEG_INFINITY
    } else {
        0.0
    }
}

fn n5_terms(p: &Params, alpha: f64) -> Vec<KernelTerm> {
    let d = p.a - p.b;
    vec![
        KernelTerm::elementary(1.0 / d, alpha, p.c, p.b),
        KernelTerm::elementary(-1.0 / d, alpha, p.c, p.a),
    ]
}

fn n5(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(n5_terms(p, -1.0))
}

fn n5_printed(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(n5_terms(p, -1.5))
}

fn check_gamma_ratio_exponents(p: &Params) -> std::result::Result<(), String> {
    ensure(p.m + p.nu > 2, "requires m+nu>2")?;
    ensure(p.n + p.nu > 2, "requires n+nu>2")
}

fn gamma_ratio(p: &Params) -> Result<f64> {
    let (n, m, nu) = (p.n as f64, p.m as f64, p.nu as f64);
    Ok(gamma(0.5 * (m + nu - 2.0))? * gamma(0.5 * (n + nu - 2.0))? / gamma(0.5 * (m + n + 2.0 * nu - 4.0))?)
}

fn check_n6(p: &Params) -> std::result::Result<(), String> {
    check_gamma_ratio_exponents(p)?;
    ensure(p.b > 0.0, "requires b>0")?;
    ensure(p.a == p.b, "requires a=b")
}

fn n6(p: &Params) -> Result<Vec<KernelTerm>> {
    let alpha = 0.5 * (2 - p.m - p.n - p.nu) as f64;
    Ok(vec![KernelTerm::elementary(gamma_ratio(p)?, alpha, p.c, p.b)])
}

// ---- tilde family: p pinned by a − b, q = 0 -----------------------------

/// Exponent −(2a−b)/t shared by every term, and its erfc-form counterpart
/// −(2a−b)/t + 4(a−b)/t, which carries erfc(2√(a−b)/√t) instead of erfcx.
fn tilde_gammas(p: &Params) -> (f64, f64) {
    let g = 2.0 * p.a - p.b;
    (g, g - 4.0 * (p.a - p.b))
}

fn nu_power(p: &Params, k: f64) -> f64 {
    0.5 * p.nu as f64 + k
}

fn t1(p: &Params) -> Result<Vec<KernelTerm>> {
    let d = p.a - p.b;
    let (g, ge) = tilde_gammas(p);
    let coeff = SQRT_PI / (2.0 * d.sqrt());
    let alpha = nu_power(p, -2.0);
    Ok(vec![
        KernelTerm::elementary(coeff, alpha, p.c, g),
        KernelTerm::new(-coeff, alpha, p.c, ge, Special::ErfcOfInvSqrt { amount: d }),
    ])
}

fn t2_terms(p: &Params, coeff: f64) -> Vec<KernelTerm> {
    let d = p.a - p.b;
    let (g, ge) = tilde_gammas(p);
    let alpha = nu_power(p, -1.0);
    vec![
        KernelTerm::new(coeff, alpha, p.c, ge, Special::ErfcOfInvSqrt { amount: d }),
        KernelTerm::elementary(coeff, alpha, p.c, g),
    ]
}

fn t2(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(t2_terms(p, SQRT_PI / (2.0 * (p.a - p.b).sqrt())))
}

fn t2_printed(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(t2_terms(p, SQRT_PI / (p.a - p.b).sqrt()))
}

fn t3(p: &Params) -> Result<Vec<KernelTerm>> {
    let d = p.a - p.b;
    let (_, ge) = tilde_gammas(p);
    let erfc = Special::ErfcOfInvSqrt { amount: d };
    Ok(vec![KernelTerm::new(SQRT_PI / d.sqrt(), nu_power(p, -2.0), p.c, ge, erfc)])
}

fn t3_printed(p: &Params) -> Result<Vec<KernelTerm>> {
    // erfc multiplies e^{−(2a−b)/t} directly, without the e^{4(a−b)/t}
    let d = p.a - p.b;
    let (g, _) = tilde_gammas(p);
    let erfc = Special::ErfcOfInvSqrt { amount: d };
    Ok(vec![KernelTerm::new(SQRT_PI / d.sqrt(), nu_power(p, -2.0), p.c, g, erfc)])
}

fn t4_terms(p: &Params, shift: f64) -> Vec<KernelTerm> {
    let d = p.a - p.b;
    let sd = d.sqrt();
    let (g, ge) = tilde_gammas(p);
    let erfc = Special::ErfcOfInvSqrt { amount: d };
    vec![
        KernelTerm::new(2.0 * SQRT_PI / sd, nu_power(p, -3.0) + shift, p.c, ge, erfc),
        KernelTerm::new(-SQRT_PI / (4.0 * d * sd), nu_power(p, -2.0) + shift, p.c, ge, erfc),
        KernelTerm::elementary(SQRT_PI / (4.0 * d * sd), nu_power(p, -2.0) + shift, p.c, g),
        KernelTerm::elementary(-1.0 / d, nu_power(p, -2.5) + shift, p.c, g),
    ]
}

fn t4(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(t4_terms(p, 0.0))
}

fn t4_printed(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(t4_terms(p, nu_power(p, -2.0)))
}

fn t5_terms(p: &Params, scale: f64) -> Vec<KernelTerm> {
    let d = p.a - p.b;
    let sd = d.sqrt();
    let (g, ge) = tilde_gammas(p);
    let erfc = Special::ErfcOfInvSqrt { amount: d };
    let k = scale / (4.0 * d * sd);
    vec![
        KernelTerm::elementary(k * SQRT_PI, nu_power(p, 0.0), p.c, g),
        KernelTerm::elementary(k * 4.0 * sd, nu_power(p, -0.5), p.c, g),
        KernelTerm::new(-k * SQRT_PI * 4.0 * d, nu_power(p, -1.0), p.c, ge, erfc),
        KernelTerm::new(k * SQRT_PI, nu_power(p, 0.0), p.c, ge, erfc),
    ]
}

fn t5(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(t5_terms(p, 1.0))
}

fn t5_printed(p: &Params) -> Result<Vec<KernelTerm>> {
    Ok(t5_terms(p, 2.0))
}

// ---- general h ------------------------------------------------------------

fn check_g1(p: &Params) -> std::result::Result<(), String> {
    check_gamma_ratio_exponents(p)?;
    ensure(p.h.im == 0.0, "requires real h")?;
    ensure(p.h.re >= 0.0, "requires h>=0")?;
    ensure(p.b >= 0.0, "requires b>=0")?;
    ensure(p.a >= p.b, "requires a>=b")?;
    ensure(p.a > p.b || p.h.re > 0.0, "requires a>b or h>0")
}

fn g1(p: &Params) -> Result<Vec<KernelTerm>> {
    let (n, m, nu) = (p.n as f64, p.m as f64, p.nu as f64);
    let special = Special::Kummer {
        a: 0.5 * (n + nu - 2.0),
        b: 0.5 * (m + n + 2.0 * nu - 4.0),
        shift: p.a - p.b,
        slope: p.h.re,
    };
    let alpha = 0.5 * (2.0 - m - n - nu);
    Ok(vec![KernelTerm::new(gamma_ratio(p)?, alpha, p.c, p.b, special)])
}

fn g1_floor(p: &Params) -> f64 {
    if p.b > 0.0 {
        f64::NEG_INFINITY
    } else if p.a > 0.0 {
        0.5 * p.m as f64 - 1.0
    } else {
        0.5 * (p.m + p.n + p.nu) as f64 - 2.0
    }
}

// ---- r-integral -----------------------------------------------------------

fn check_r1(p: &Params) -> std::result::Result<(), String> {
    check_gamma_ratio_exponents(p)?;
    ensure(p.a > 0.0, "requires a>0")?;
    ensure(p.b > 0.0, "requires b>0")
}

fn r1(p: &Params) -> Result<Vec<KernelTerm>> {
    let special = Special::RIntegral {
        alpha: 0.5 * (p.n + p.nu) as f64 - 2.0,
        beta: 0.5 * (p.m + p.nu) as f64 - 2.0,
        a: p.a,
        b: p.b,
        j: p.j,
        h: p.h,
    };
    Ok(vec![KernelTerm {
        coeff: Complex64::new(1.0, 0.0),
        alpha: -0.5 * p.m as f64,
        beta: Complex64::new(p.c, 0.0),
        gamma: Complex64::new(0.0, 0.0),
        special,
    }])
}

fn check_r1_erfi(p: &Params) -> std::result::Result<(), String> {
    ensure(p.j > 0.0, "requires j>0")?;
    ensure(p.a > 0.0, "requires a>0")?;
    ensure(p.b > 0.0, "requires b>0")
}

fn r1_erfi(p: &Params) -> Result<Vec<KernelTerm>> {
    let i = Complex64::new(0.0, 1.0);
    let scale = SQRT_PI / (2.0 * p.j.sqrt());
    let alpha = -0.5 * p.m as f64 - 0.5;
    let c = Complex64::new(p.c, 0.0);
    let d = p.a - p.b;
    let special = |offset: f64| Special::ErfiAffine {
        offset: Complex64::new(offset, 0.0),
        slope: p.h,
        j: p.j,
    };
    Ok(vec![
        KernelTerm {
            coeff: i * scale,
            alpha,
            beta: c,
            gamma: Complex64::new(p.b, 0.0),
            special: special(d + p.j),
        },
        KernelTerm {
            coeff: -i * scale * (-p.h).exp(),
            alpha,
            beta: c,
            gamma: Complex64::new(p.a, 0.0),
            special: special(d - p.j),
        },
    ])
}

macro_rules! rule {
    ($id:expr, $alias:expr, $family:expr, $pattern:expr, $coefs:expr, $tilde:expr, $status:expr,
     $note:expr, $check:expr, $kernel:expr, $floor:expr) => {
        ReductionRule {
            id: $id,
            alias: $alias,
            family: $family,
            pattern: $pattern,
            coefficients: $coefs,
            tilde: $tilde,
            status: $status,
            note: $note,
            check: $check,
            kernel: $kernel,
            floor: $floor,
        }
    };
}

fn floor_const<const TWICE: i32>(_: &Params) -> f64 {
    0.5 * TWICE as f64
}

pub(super) fn all() -> Vec<ReductionRule> {
    use Family::*;
    use Status::*;
    let nu_family = |n0, m0| TriplePattern::NuFamily { n0, m0 };
    let general = TriplePattern::General;
    vec![
        rule!("E1-pbm-corrected", "E1", PositiveExp, fixed(0, 0, 1), PQ, false, Trusted,
            "1/sqrt(x+y) weight; exponential kernel with coefficient sqrt(pi)(sqrt p+sqrt q)/sqrt(pq)",
            check_pq, e1, floor_const::<-2>),
        rule!("E2-110", "E2", PositiveExp, fixed(1, 1, 0), PQ, false, Trusted,
            "1/sqrt(xy) weight; the E1 kernel times t^(-1/2)",
            check_pq, e2, floor_const::<-1>),
        rule!("E3-m110", "E3", PositiveExp, fixed(-1, 1, 0), PQ, false, Trusted,
            "sqrt(x/y) weight; two exponential terms in t^(1/2) and t^(-1/2)",
            check_pq, e3, floor_const::<-1>),
        rule!("E4-310", "E4", PositiveExp, fixed(3, 1, 0), PQ, false, Trusted,
            "x^(-3/2) y^(-1/2) weight; single exponential term in t^(-3/2)",
            check_pq, e4, floor_const::<1>),
        rule!("E5-5m10", "E5", PositiveExp, fixed(5, -1, 0), PQ, false, Trusted,
            "x^(-5/2) y^(1/2) weight; (1+2 sqrt(pq) t) polynomial factor",
            check_pq, e5, floor_const::<3>),
        rule!("K1-111", "K1", PositiveExp, fixed(1, 1, 1), PQ, false, Trusted,
            "m+nu=2 with equal powers; K0 kernel with t^(-1/2)",
            check_pq, k1, floor_const::<-1>),
        rule!("K2-220", "K2", PositiveExp, fixed(2, 2, 0), PQ, false, Trusted,
            "1/(xy) weight; K0 kernel with t^(-1)",
            check_pq, k2, floor_const::<0>),
        rule!("K3-400", "K3", PositiveExp, fixed(4, 0, 0), PQ, false, Trusted,
            "x^(-2) weight; K1 kernel, mirror of (0,4,0) under p<->q",
            check_pq, k3, floor_const::<2>),
        rule!("K4-51m1", "K4", PositiveExp, fixed(5, 1, -1), PQ, false, Trusted,
            "K1 kernel with t^(-3/2)",
            check_pq, k4, floor_const::<3>),
        rule!("K5-7m1m1", "K5", PositiveExp, fixed(7, -1, -1), PQ, false, Trusted,
            "K2 kernel with t^(-3/2) and coefficient 2p/q",
            check_pq, k5, floor_const::<5>),
        rule!("K6-m111", "K6", PositiveExp, fixed(-1, 1, 1), PQ, false, Trusted,
            "sqrt(p) K0 + sqrt(q) K1 combination with t^(1/2)",
            check_pq, k6, floor_const::<-1>),
        rule!("K7-m311", "K7", PositiveExp, fixed(-3, 1, 1), PQ, false, Trusted,
            "(p+q)t-weighted K0 and K1 combination; equals minus the p-derivative of K6",
            check_pq, k7, floor_const::<-1>),
        rule!("N1-133", "N1", InverseExp, fixed(1, 3, 3), AB, false, Trusted,
            "inverse exponents, three elementary terms with (a-b)^-2 and (a-b)^-1",
            check_ab_distinct, n1, minus_infinity),
        rule!("N2-333", "N2", InverseExp, fixed(3, 3, 3), AB, false, Trusted,
            "inverse exponents, (a-b)^-3 combination of e^(-a/t) and e^(-b/t)",
            check_ab_distinct, n2, minus_infinity),
        rule!("N3-033", "N3", InverseExp, fixed(0, 3, 3), AB, false, Trusted,
            "erf(sqrt((a-b)/t)) kernel plus an elementary e^(-a/t) term",
            check_a_gt_b, n3, n3_floor),
        rule!("N4-122", "N4", InverseExp, fixed(1, 2, 2), AB, false, Trusted,
            "single erf(sqrt((a-b)/t)) term with t^(-1)",
            check_a_gt_b, n4, n4_floor),
        rule!("N5-222", "N5", InverseExp, fixed(2, 2, 2), AB, false, Trusted,
            "1/(xy(x+y)) weight; (e^(-b/t)-e^(-a/t))/((a-b) t)",
            check_ab_distinct, n5, minus_infinity),
        rule!("N6-aeqb", "N6", InverseExp, general, AB, false, Trusted,
            "a=b limit for any m+nu>2, n+nu>2; gamma-function ratio times a single power",
            check_n6, n6, minus_infinity),
        rule!("T1", "T1", MixedTilde, nu_family(3, 4), AB, true, Trusted,
            "tilde weight; 1 - e^(4(a-b)/t) erfc(2 sqrt((a-b)/t)) kernel",
            check_a_gt_b, t1, minus_infinity),
        rule!("T2", "T2", MixedTilde, nu_family(1, 4), AB, true, Trusted,
            "tilde weight; erfcx + 1 kernel with t^(nu/2-1)",
            check_a_gt_b, t2, minus_infinity),
        rule!("T3", "T3", MixedTilde, nu_family(1, 6), AB, true, Trusted,
            "tilde weight; single scaled-erfc term with t^(nu/2-2)",
            check_a_gt_b, t3, minus_infinity),
        rule!("T4", "T4", MixedTilde, nu_family(1, 8), AB, true, Trusted,
            "tilde weight; four terms with (a-b)^-2 prefactor",
            check_a_gt_b, t4, minus_infinity),
        rule!("T5", "T5", MixedTilde, nu_family(-1, 6), AB, true, Trusted,
            "tilde weight; four terms with (a-b)^(-3/2) prefactor",
            check_a_gt_b, t5, minus_infinity),
        rule!("G1-general", "G1", GeneralH, general, ABH, false, Trusted,
            "any m+nu>2, n+nu>2 with h: gamma ratio times 1F1(A;B;-(a-b+ht)/t)",
            check_g1, g1, g1_floor),
        rule!("R1-rint", "R1", RIntegral, general, ABHJ, false, Trusted,
            "j/(x+y) term: finite r-integral inner factor evaluated numerically",
            check_r1, r1, minus_infinity),
        rule!("R1-erfi", "R1E", RIntegral, nu_family(4, 4), ABHJ, false, Trusted,
            "m+nu=n+nu=4 with j>0: closed erfi-difference kernel via the Faddeeva function",
            check_r1_erfi, r1_erfi, minus_infinity),
        rule!("E1-uncorrected-pbm", "E1U", PositiveExp, fixed(0, 0, 1), PQ, false, Erratum,
            "the E1 reduction with the table's original coefficient sqrt(pi)/sqrt(pq(p+q))",
            check_pq, e1_uncorrected, floor_const::<-2>),
        rule!("E3-m110-as-printed", "E3", PositiveExp, fixed(-1, 1, 0), PQ, false, AsPrinted,
            "E3 with the published powers t^1 and t^0",
            check_pq, e3_printed, floor_const::<-2>),
        rule!("N5-222-as-printed", "N5", InverseExp, fixed(2, 2, 2), AB, false, AsPrinted,
            "N5 with the published power t^(-3/2)",
            check_ab_distinct, n5_printed, minus_infinity),
        rule!("T2-as-printed", "T2", MixedTilde, nu_family(1, 4), AB, true, AsPrinted,
            "T2 with the published overall factor, twice the corrected kernel",
            check_a_gt_b, t2_printed, minus_infinity),
        rule!("T3-as-printed", "T3", MixedTilde, nu_family(1, 6), AB, true, AsPrinted,
            "T3 with plain erfc in place of e^(4(a-b)/t) erfc",
            check_a_gt_b, t3_printed, minus_infinity),
        rule!("T4-as-printed", "T4", MixedTilde, nu_family(1, 8), AB, true, AsPrinted,
            "T4 with the published extra factor t^(nu/2-2)",
            check_a_gt_b, t4_printed, minus_infinity),
        rule!("T5-as-printed", "T5", MixedTilde, nu_family(-1, 6), AB, true, AsPrinted,
            "T5 with the published overall factor, twice the corrected kernel",
            check_a_gt_b, t5_printed, minus_infinity),
    ]
}

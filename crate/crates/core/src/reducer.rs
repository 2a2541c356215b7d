//! Normalization onto catalog rules, the two-dimensional oracle, and
//! verification records comparing the two sides of each reduction.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{
    find_rule, reduce_to_1d, registry, Family, Params, ReductionRule, TestIntegrand, Triple, TriplePattern,
};
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_quadrant, try_integrate_strip, Node, QuadResult, Tolerance};

/// Shifts by δ = twice_delta/2: (n − 2δ, m − 2δ, ν + 2δ). The integral is
/// unchanged when f(t) is replaced by t^{−δ} f(t).
pub fn shift_power(triple: Triple, twice_delta: i32) -> Triple {
    Triple::new(triple.n - twice_delta, triple.m - twice_delta, triple.nu + twice_delta)
}

/// Applies [`shift_power`] to an instance together with the compensating
/// change of f.
pub fn shift_instance(params: &Params, f: &TestIntegrand, twice_delta: i32) -> (Params, TestIntegrand) {
    let t = shift_power(params.triple(), twice_delta);
    let params = Params {
        n: t.n,
        m: t.m,
        nu: t.nu,
        ..*params
    };
    let f = TestIntegrand {
        mu: f.mu - 0.5 * twice_delta as f64,
        ..*f
    };
    (params, f)
}

/// x ↔ y: swaps n ↔ m, a ↔ b, p ↔ q. Only an identity of the integral when
/// h = 0 and the tilde factor is off.
pub fn mirror(params: &Params) -> Option<Params> {
    if params.h.norm() != 0.0 || params.tilde {
        return None;
    }
    Some(Params {
        n: params.m,
        m: params.n,
        a: params.b,
        b: params.a,
        p: params.q,
        q: params.p,
        ..*params
    })
}

/// Shifts tried after the exact triple, in order.
pub const SHIFT_ORDER: [i32; 8] = [1, -1, 2, -2, 3, -3, 4, -4];

/// A matched instance: evaluating `rule` on (`params`, `f`) gives the
/// original integral.
#[derive(Debug, Clone, Copy)]
pub struct Normalized {
    pub rule: &'static ReductionRule,
    pub params: Params,
    pub f: TestIntegrand,
    pub twice_delta: i32,
    pub mirrored: bool,
}

/// Finds a trusted rule for the instance: the exact triple first, then the
/// shifts of [`SHIFT_ORDER`], then the same sequence on the mirrored
/// instance. Within one candidate triple, fixed-triple rules win over
/// ν-families, which win over general rules; ties go to registry order.
pub fn normalize(params: &Params, f: &TestIntegrand) -> Option<Normalized> {
    let mut ranked: Vec<&'static ReductionRule> = registry().iter().filter(|r| !r.flagged()).collect();
    ranked.sort_by_key(|r| r.pattern.rank());
    let bases = std::iter::once((*params, false)).chain(mirror(params).map(|m| (m, true)));
    for (base, mirrored) in bases {
        for twice_delta in std::iter::once(0).chain(SHIFT_ORDER) {
            let (p, g) = shift_instance(&base, f, twice_delta);
            for &rule in &ranked {
                if rule.is_applicable(&p) && g.mu > rule.mu_min(&p) {
                    return Some(Normalized {
                        rule,
                        params: p,
                        f: g,
                        twice_delta,
                        mirrored,
                    });
                }
            }
        }
    }
    None
}

/// Rejects instances whose double integral diverges, by power counting at
/// the axes, the origin and infinity after exponential cut-offs.
pub fn check_convergence(params: &Params, f: &TestIntegrand) -> Result<()> {
    let (n, m, nu) = (params.n as f64, params.m as f64, params.nu as f64);
    let tilde_cut = params.tilde && params.a > params.b;
    let fail = |msg: &str| Err(Error::Divergent(msg.to_string()));
    if f.coeff == 0.0 {
        return Ok(());
    }
    if !(params.p > 0.0 || tilde_cut || n + nu > 2.0) {
        return fail("x -> infinity: needs p>0 or n+nu>2");
    }
    if !(params.q > 0.0 || m + nu > 2.0) {
        return fail("y -> infinity: needs q>0 or m+nu>2");
    }
    let radial_decay = params.p > 0.0 || params.q > 0.0 || params.c + f.sigma > 0.0;
    if !radial_decay && 0.5 * (n + m + nu) - f.mu <= 2.0 {
        return fail("x, y -> infinity: needs exponential decay or (n+m+nu)/2 - mu > 2");
    }
    if !(params.a > 0.0 || tilde_cut || f.mu - 0.5 * n > -1.0) {
        return fail("x -> 0: needs a>0 or mu - n/2 > -1");
    }
    if !(params.b > 0.0 || tilde_cut || f.mu - 0.5 * m > -1.0) {
        return fail("y -> 0: needs b>0 or mu - m/2 > -1");
    }
    let origin_cut = params.a > 0.0 || params.b > 0.0 || params.j > 0.0 || tilde_cut;
    if !origin_cut && f.mu - 0.5 * (n + m + nu) <= -2.0 {
        return fail("x, y -> 0: needs an inverse exponent or mu - (n+m+nu)/2 > -2");
    }
    Ok(())
}

// p·e^{lx} without 0·∞ when the variable overflows
fn linear(p: f64, lx: f64) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        p * lx.exp()
    }
}

/// The left-hand side by brute-force quadrature over the quadrant.
pub fn direct_2d(params: &Params, f: &TestIntegrand, tol: &Tolerance) -> Result<QuadResult> {
    check_convergence(params, f)?;
    if f.coeff == 0.0 {
        return Ok(QuadResult {
            value: Complex64::new(0.0, 0.0),
            abs_error_estimate: 0.0,
            evaluations: 0,
            converged: true,
        });
    }
    let p = *params;
    let g = *f;
    let (hn, hm, hnu) = (0.5 * p.n as f64, 0.5 * p.m as f64, 0.5 * p.nu as f64);
    let d = p.a - p.b;
    let complex_h = p.h.norm() != 0.0;
    let finish = move |log: f64, h_weight: f64| {
        if complex_h {
            (Complex64::new(log, 0.0) - p.h * h_weight).exp()
        } else {
            Complex64::new(log.exp(), 0.0)
        }
    };
    let mut r = if p.tilde {
        // in t = xy/(x+y), ρ = x/(x+y) the extra exponential is e^{−d/(t(1−ρ))}
        // and stays clear of the Cartesian inner integral's tails
        try_integrate_strip(
            move |t: f64, node: &Node| {
                let (lt, lr, lo) = (t.ln(), node.lo_dist.ln(), node.hi_dist.ln());
                let (lx, ly, ls) = (lt - lo, lt - lr, lt - lr - lo);
                let log = -hn * lx - hm * ly - hnu * ls + g.log_shape(t)
                    - p.a * node.hi_dist / t
                    - p.b * node.lo_dist / t
                    - p.c * t
                    - p.j * node.lo_dist * node.hi_dist / t
                    - linear(p.p, lx)
                    - linear(p.q, ly)
                    - d / (t * node.hi_dist)
                    + lt
                    - 2.0 * (lr + lo);
                Ok(finish(log, node.hi_dist))
            },
            tol,
        )?
    } else {
        try_integrate_quadrant(
            move |x: f64, y: f64| {
                let s = x + y;
                let t = x * y / s;
                let (lx, ly, ls) = (x.ln(), y.ln(), s.ln());
                // t underflows near the corner before its logarithm does
                let log = -hn * lx - hm * ly - hnu * ls + g.mu * (lx + ly - ls) - g.sigma * t
                    - p.a / x
                    - p.b / y
                    - p.c * t
                    - p.j / s
                    - p.p * x
                    - p.q * y;
                Ok(finish(log, y / s))
            },
            tol,
        )?
    };
    r.value *= f.coeff;
    r.abs_error_estimate *= f.coeff.abs();
    Ok(r)
}

/// Tolerances for one verification: the pass criterion and the requested
/// accuracies of the oracle and of the reduced side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifySettings {
    pub compare: Tolerance,
    pub oracle: Tolerance,
    pub reduced: Tolerance,
}

impl Default for VerifySettings {
    fn default() -> Self {
        VerifySettings {
            compare: Tolerance {
                rel: 1e-6,
                abs: 1e-15,
                max_evaluations: 0,
            },
            oracle: Tolerance {
                rel: 1e-10,
                abs: 1e-300,
                max_evaluations: 20_000_000,
            },
            reduced: Tolerance {
                rel: 1e-12,
                abs: 1e-300,
                max_evaluations: 2_000_000,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub rule_id: String,
    pub seed: Option<u64>,
    pub params: Params,
    pub f: TestIntegrand,
    pub lhs: Option<QuadResult>,
    pub rhs: Option<QuadResult>,
    pub abs_diff: Option<f64>,
    pub rel_diff: Option<f64>,
    pub tol: Tolerance,
    pub pass: bool,
    pub reason: Option<String>,
}

impl VerificationRecord {
    /// rhs/lhs, when both sides exist.
    pub fn ratio(&self) -> Option<Complex64> {
        Some(self.rhs?.value / self.lhs?.value)
    }

    pub fn oracle_failed(&self) -> bool {
        match self.lhs {
            Some(l) => !l.converged,
            None => self.reason.as_deref().is_some_and(|r| r.starts_with("oracle")),
        }
    }

    pub const CSV_HEADER: &'static str = "rule_id,seed,n,m,nu,a,b,c,h_re,h_im,j,p,q,tilde,f_coeff,f_mu,f_sigma,\
lhs_re,lhs_im,lhs_err,lhs_evals,lhs_converged,rhs_re,rhs_im,rhs_err,rhs_evals,rhs_converged,\
abs_diff,rel_diff,tol_rel,tol_abs,pass,reason";

    pub fn csv_row(&self) -> String {
        let mut s = String::new();
        let p = &self.params;
        let num = |x: f64| format_number(x);
        let _ = write!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.rule_id,
            self.seed.map(|v| v.to_string()).unwrap_or_default(),
            p.n,
            p.m,
            p.nu,
            num(p.a),
            num(p.b),
            num(p.c),
            num(p.h.re),
            num(p.h.im),
            num(p.j),
            num(p.p),
            num(p.q),
            p.tilde,
            num(self.f.coeff),
            num(self.f.mu),
            num(self.f.sigma)
        );
        for side in [self.lhs, self.rhs] {
            match side {
                Some(r) => {
                    let _ = write!(
                        s,
                        ",{},{},{},{},{}",
                        num(r.value.re),
                        num(r.value.im),
                        num(r.abs_error_estimate),
                        r.evaluations,
                        r.converged
                    );
                }
                None => s.push_str(",,,,,"),
            }
        }
        let opt = |x: Option<f64>| x.map(format_number).unwrap_or_default();
        let reason = self.reason.as_deref().unwrap_or("").replace('"', "\"\"");
        let _ = write!(
            s,
            ",{},{},{},{},{},\"{}\"",
            opt(self.abs_diff),
            opt(self.rel_diff),
            num(self.tol.rel),
            num(self.tol.abs),
            self.pass,
            reason
        );
        s
    }
}

/// Decimal with 15 significant digits.
pub fn format_number(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..15).contains(&e) {
        let decimals = (14 - e).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.14e}")
    }
}

fn compare(rule_id: &str, params: &Params, f: &TestIntegrand, lhs: QuadResult, rhs: QuadResult, tol: &Tolerance) -> VerificationRecord {
    let abs_diff = (lhs.value - rhs.value).norm();
    let scale = lhs.value.norm();
    let rel_diff = if scale > 0.0 {
        abs_diff / scale
    } else if abs_diff == 0.0 {
        0.0
    } else {
        f64::MAX
    };
    let within = abs_diff <= tol.abs || rel_diff <= tol.rel;
    let reason = if !lhs.converged {
        Some("oracle did not converge".to_string())
    } else if !rhs.converged {
        Some("reduced integral did not converge".to_string())
    } else if !within {
        Some("sides disagree".to_string())
    } else {
        None
    };
    VerificationRecord {
        rule_id: rule_id.to_string(),
        seed: None,
        params: *params,
        f: *f,
        lhs: Some(lhs),
        rhs: Some(rhs),
        abs_diff: Some(abs_diff),
        rel_diff: Some(rel_diff),
        tol: *tol,
        pass: within && lhs.converged && rhs.converged,
        reason,
    }
}

/// Evaluates both sides of `rule` on the instance. Unknown rules are an
/// error; every other failure is reported inside a failed record.
pub fn verify(rule_id: &str, params: &Params, f: &TestIntegrand, settings: &VerifySettings) -> Result<VerificationRecord> {
    let rule = find_rule(rule_id)?;
    let failed = |reason: String, lhs: Option<QuadResult>| VerificationRecord {
        rule_id: rule.id.to_string(),
        seed: None,
        params: *params,
        f: *f,
        lhs,
        rhs: None,
        abs_diff: None,
        rel_diff: None,
        tol: settings.compare,
        pass: false,
        reason: Some(reason),
    };
    if let Err(e) = rule.check_applicable(params) {
        return Ok(failed(e.to_string(), None));
    }
    let lhs = match direct_2d(params, f, &settings.oracle) {
        Ok(l) => l,
        Err(e) => return Ok(failed(format!("oracle: {e}"), None)),
    };
    let rhs = match reduce_to_1d(rule, params, f, &settings.reduced) {
        Ok(r) => r,
        Err(e) => return Ok(failed(format!("reduced: {e}"), Some(lhs))),
    };
    Ok(compare(rule.id, params, f, lhs, rhs, &settings.compare))
}

/// Central-difference check of the relation between K7 and the p-derivative
/// of K6.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivativeReport {
    pub step: f64,
    pub k7: f64,
    /// (K6(p+step) − K6(p−step)) / (2 step)
    pub derivative: f64,
    pub derivative_half_step: f64,
    /// |derivative − sign·k7| / |k7| for the matching sign
    pub residual: f64,
    pub residual_half_step: f64,
    /// |derivative + sign·k7| / |k7|: the other sign's residual
    pub residual_other_sign: f64,
    /// +1 if K7 = ∂K6/∂p, −1 if K7 = −∂K6/∂p
    pub sign: i32,
}

pub fn derivative_check_k7(params: &Params, f: &TestIntegrand, step: f64, tol: &Tolerance) -> Result<DerivativeReport> {
    let k6 = find_rule("K6-m111")?;
    let k7 = find_rule("K7-m311")?;
    let at = |p: f64, triple: (i32, i32, i32), rule: &ReductionRule| -> Result<f64> {
        let q = Params {
            n: triple.0,
            m: triple.1,
            nu: triple.2,
            p,
            ..*params
        };
        let r = reduce_to_1d(rule, &q, f, tol)?;
        if !r.converged {
            return Err(Error::Parameter(format!("{} did not converge at p = {p}", rule.id)));
        }
        Ok(r.value.re)
    };
    if !(step > 0.0 && step < params.p) {
        return Err(Error::Parameter(format!("step {step} must lie in (0, p)")));
    }
    let k7_value = at(params.p, (-3, 1, 1), k7)?;
    let fd = |h: f64| -> Result<f64> {
        Ok((at(params.p + h, (-1, 1, 1), k6)? - at(params.p - h, (-1, 1, 1), k6)?) / (2.0 * h))
    };
    let d1 = fd(step)?;
    let d2 = fd(0.5 * step)?;
    let plus = (d1 - k7_value).abs() / k7_value.abs();
    let minus = (d1 + k7_value).abs() / k7_value.abs();
    let sign = if plus <= minus { 1 } else { -1 };
    let s = sign as f64;
    Ok(DerivativeReport {
        step,
        k7: k7_value,
        derivative: d1,
        derivative_half_step: d2,
        residual: plus.min(minus),
        residual_half_step: (d2 - s * k7_value).abs() / k7_value.abs(),
        residual_other_sign: plus.max(minus),
        sign,
    })
}

// ---- seeded sweeps --------------------------------------------------------

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-case seed derived from the sweep seed, the rule and the case index.
pub fn case_seed(seed: u64, rule_id: &str, index: usize) -> u64 {
    splitmix(seed ^ splitmix(fnv1a(rule_id) ^ splitmix(index as u64)))
}

fn log_uniform(rng: &mut ChaCha8Rng) -> f64 {
    (0.1f64.ln() + rng.gen::<f64>() * 100f64.ln()).exp()
}

/// Two log-uniform coefficients, ordered a > b and at least 5% apart so the
/// (a−b)^{−k} prefactors do not swamp the comparison in cancellation.
fn separated_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    loop {
        let (x, y) = (log_uniform(rng), log_uniform(rng));
        let (hi, lo) = if x > y { (x, y) } else { (y, x) };
        if hi - lo >= 0.05 * hi {
            return (hi, lo);
        }
    }
}

/// The (n, m, ν, h, a=b) points cycled through by G1 sweeps.
pub const G1_GRID: [(i32, i32, i32, f64, bool); 10] = [
    (4, 4, 0, 0.0, false),
    (4, 4, 0, 1.0, false),
    (1, 1, 3, 1.0, true),
    (2, 4, 1, 0.3, false),
    (3, 5, 0, 2.0, false),
    (6, 2, 2, 0.0, false),
    (2, 2, 2, 1.5, true),
    (0, 6, 3, 0.7, false),
    (5, 3, 1, 0.0, false),
    (3, 3, 3, 0.5, false),
];

/// Triples cycled through by N6 and R1 sweeps.
const GENERAL_TRIPLES: [(i32, i32, i32); 5] = [(4, 4, 0), (1, 1, 3), (2, 4, 1), (3, 5, 0), (6, 2, 2)];

/// One random instance of `rule`, deterministic in (seed, rule, index).
pub fn sample_case(rule: &ReductionRule, seed: u64, index: usize) -> (Params, TestIntegrand) {
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, rule.id, index));
    let triple = match rule.pattern {
        TriplePattern::Fixed { triple } => triple,
        TriplePattern::NuFamily { n0, m0 } => {
            let nu = (index % 3) as i32;
            Triple::new(n0 - nu, m0 - nu, nu)
        }
        TriplePattern::General => {
            let (n, m, nu) = if rule.family == Family::GeneralH {
                let g = G1_GRID[index % G1_GRID.len()];
                (g.0, g.1, g.2)
            } else {
                GENERAL_TRIPLES[index % GENERAL_TRIPLES.len()]
            };
            Triple::new(n, m, nu)
        }
    };
    let mut p = Params::with_triple(triple.n, triple.m, triple.nu);
    p.tilde = rule.tilde;
    p.c = log_uniform(&mut rng);
    match rule.family {
        Family::PositiveExp => {
            p.p = log_uniform(&mut rng);
            p.q = log_uniform(&mut rng);
        }
        Family::InverseExp | Family::MixedTilde => {
            let (hi, lo) = separated_pair(&mut rng);
            if rule.id.starts_with("N6") {
                p.a = hi;
                p.b = hi;
            } else if rule.is_applicable(&Params { a: lo, b: hi, ..p }) && rng.gen::<bool>() {
                p.a = lo;
                p.b = hi;
            } else {
                p.a = hi;
                p.b = lo;
            }
        }
        Family::GeneralH => {
            let g = G1_GRID[index % G1_GRID.len()];
            let (hi, lo) = separated_pair(&mut rng);
            p.a = hi;
            p.b = if g.4 { hi } else { lo };
            p.h = Complex64::new(g.3, 0.0);
        }
        Family::RIntegral => {
            let (x, y) = (log_uniform(&mut rng), log_uniform(&mut rng));
            p.a = x;
            p.b = y;
            p.j = log_uniform(&mut rng);
            let kappa = log_uniform(&mut rng);
            p.h = if index % 2 == 0 {
                Complex64::new(0.0, kappa)
            } else {
                Complex64::new(kappa, 0.0)
            };
        }
    }
    let floor = rule.mu_min(&p);
    let mu = if floor.is_finite() {
        floor + 0.5 + 2.5 * rng.gen::<f64>()
    } else {
        -1.0 + 3.0 * rng.gen::<f64>()
    };
    let sigma = 2.0 * rng.gen::<f64>();
    (p, TestIntegrand::new(mu, sigma))
}

/// Rules selected by a comma-separated list of ids or aliases, or "all" for
/// every trusted rule.
pub fn select_rules(spec: &str) -> Result<Vec<&'static ReductionRule>> {
    if spec == "all" {
        return Ok(registry().iter().filter(|r| !r.flagged()).collect());
    }
    spec.split(',').map(|s| find_rule(s.trim())).collect()
}

/// `samples` records per rule, in (rule, index) order regardless of how the
/// work is scheduled.
pub fn sweep(rules: &[&'static ReductionRule], samples: usize, seed: u64, settings: &VerifySettings) -> Vec<VerificationRecord> {
    let cases: Vec<(&ReductionRule, usize)> = rules
        .iter()
        .flat_map(|&r| (0..samples).map(move |i| (r, i)))
        .collect();
    cases
        .par_iter()
        .map(|&(rule, index)| {
            let (params, f) = sample_case(rule, seed, index);
            let mut rec = verify(rule.id, &params, &f, settings).expect("rule from the registry");
            rec.seed = Some(case_seed(seed, rule.id, index));
            rec
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_examples() {
        assert_eq!(shift_power(Triple::new(0, 0, 1), -1), Triple::new(1, 1, 0));
        assert_eq!(shift_power(Triple::new(4, 0, 0), 4), Triple::new(0, -4, 4));
        assert_eq!(shift_power(Triple::new(3, -2, 5), 0), Triple::new(3, -2, 5));
    }

    #[test]
    fn normalize_examples() {
        let mut p = Params::with_triple(1, 1, 0);
        p.p = 1.0;
        p.q = 2.0;
        let n = normalize(&p, &TestIntegrand::new(1.0, 0.5)).unwrap();
        assert_eq!(n.rule.id, "E2-110");
        assert_eq!(n.twice_delta, 0);

        let mut p = Params::with_triple(0, 4, 0);
        p.p = 1.0;
        p.q = 2.0;
        let n = normalize(&p, &TestIntegrand::new(2.5, 0.0)).unwrap();
        assert_eq!(n.rule.id, "K3-400");
        assert!(n.mirrored);
        assert_eq!((n.params.p, n.params.q), (2.0, 1.0));

        let mut p = Params::with_triple(9, 9, 9);
        p.p = 1.0;
        p.q = 1.0;
        assert!(normalize(&p, &TestIntegrand::new(0.0, 1.0)).is_none());
    }

    #[test]
    fn shifted_triple_reaches_e2() {
        // (2,2,-1) is E2 shifted by δ = −1/2
        let mut p = Params::with_triple(2, 2, -1);
        p.p = 1.0;
        p.q = 4.0;
        let n = normalize(&p, &TestIntegrand::new(0.5, 0.0)).unwrap();
        assert_eq!(n.rule.id, "E2-110");
        assert_eq!(n.twice_delta, 1);
        assert_eq!(n.f.mu, 0.0);
    }

    #[test]
    fn divergent_instances_rejected() {
        let p = Params::with_triple(0, 0, 1);
        let err = direct_2d(&p, &TestIntegrand::new(0.0, 0.0), &Tolerance::quadrant()).unwrap_err();
        assert!(matches!(err, Error::Divergent(_)));
    }

    #[test]
    fn zero_integrand() {
        let mut p = Params::with_triple(0, 0, 1);
        p.p = 1.0;
        p.q = 1.0;
        let f = TestIntegrand {
            coeff: 0.0,
            mu: 0.0,
            sigma: 1.0,
        };
        let r = direct_2d(&p, &f, &Tolerance::quadrant()).unwrap();
        assert_eq!(r.value.norm(), 0.0);
    }

    #[test]
    fn number_format_has_fifteen_digits() {
        assert_eq!(format_number(0.708_981_540_362_782_2), "0.708981540362782");
        assert_eq!(format_number(1234.5), "1234.50000000000");
        assert_eq!(format_number(1.5e-9), "1.50000000000000e-9");
    }

    #[test]
    fn case_seeds_differ() {
        assert_ne!(case_seed(42, "E1", 0), case_seed(42, "E1", 1));
        assert_ne!(case_seed(42, "E1", 0), case_seed(42, "E2", 0));
        assert_eq!(case_seed(7, "K1", 3), case_seed(7, "K1", 3));
    }
}

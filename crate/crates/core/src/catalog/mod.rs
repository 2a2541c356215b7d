//! The reduction catalog: exponent triples and coefficient patterns mapped to
//! one-dimensional weight kernels w(t), with R₂ = ∫₀^∞ f(t) w(t) dt.

mod rules;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_half_line, try_integrate_interval_endpoints, QuadResult, Tolerance};
use crate::specfun::{bessel_k_scaled, erf, erfcx, faddeeva, gamma, kummer_1f1_scaled};

/// Exponent triple (n, m, ν): the integrand carries x^{−n/2} y^{−m/2} (x+y)^{−ν/2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub n: i32,
    pub m: i32,
    pub nu: i32,
}

impl Triple {
    pub const fn new(n: i32, m: i32, nu: i32) -> Self {
        Triple { n, m, nu }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.m, self.nu)
    }
}

/// One R₂ instance:
///
/// ∬ x^{−n/2} y^{−m/2} (x+y)^{−ν/2} f(xy/(x+y))
///   · exp(−a/x − b/y − c·xy/(x+y) − h·y/(x+y) − j/(x+y) − px − qy) dx dy.
///
/// With `tilde` set the integrand gains exp(−(a−b)(x+y)²/(x y²)) and p, q
/// must be zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub n: i32,
    pub m: i32,
    pub nu: i32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub h: Complex64,
    pub j: f64,
    pub p: f64,
    pub q: f64,
    #[serde(default)]
    pub tilde: bool,
}

impl Params {
    /// All coefficients zero.
    pub fn with_triple(n: i32, m: i32, nu: i32) -> Self {
        Params {
            n,
            m,
            nu,
            a: 0.0,
            b: 0.0,
            c: 0.0,
            h: Complex64::new(0.0, 0.0),
            j: 0.0,
            p: 0.0,
            q: 0.0,
            tilde: false,
        }
    }

    pub fn triple(&self) -> Triple {
        Triple::new(self.n, self.m, self.nu)
    }

    pub fn coefficient(&self, c: Coef) -> Complex64 {
        let r = |x: f64| Complex64::new(x, 0.0);
        match c {
            Coef::A => r(self.a),
            Coef::B => r(self.b),
            Coef::C => r(self.c),
            Coef::H => self.h,
            Coef::J => r(self.j),
            Coef::P => r(self.p),
            Coef::Q => r(self.q),
        }
    }
}

/// f(t) = coeff·t^μ·e^{−σt}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestIntegrand {
    pub coeff: f64,
    pub mu: f64,
    pub sigma: f64,
}

impl TestIntegrand {
    pub fn new(mu: f64, sigma: f64) -> Self {
        TestIntegrand {
            coeff: 1.0,
            mu,
            sigma,
        }
    }

    /// μ ln t − σ t: the logarithm of f without its coefficient.
    pub fn log_shape(&self, t: f64) -> f64 {
        self.mu * t.ln() - self.sigma * t
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeff * self.log_shape(t).exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PositiveExp,
    InverseExp,
    MixedTilde,
    GeneralH,
    RIntegral,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::PositiveExp,
        Family::InverseExp,
        Family::MixedTilde,
        Family::GeneralH,
        Family::RIntegral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::PositiveExp => "positive-exp",
            Family::InverseExp => "inverse-exp",
            Family::MixedTilde => "mixed-tilde",
            Family::GeneralH => "general-h",
            Family::RIntegral => "r-integral",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown family {s}")))
    }
}

/// Trusted rules are verified against the oracle. AsPrinted entries reproduce
/// a published kernel that the oracle contradicts; Erratum marks a known-wrong
/// published coefficient kept for demonstration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Trusted,
    AsPrinted,
    Erratum,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Trusted => "trusted",
            Status::AsPrinted => "as-printed",
            Status::Erratum => "erratum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coef {
    A,
    B,
    C,
    H,
    J,
    P,
    Q,
}

impl Coef {
    pub const ALL: [Coef; 7] = [Coef::A, Coef::B, Coef::C, Coef::H, Coef::J, Coef::P, Coef::Q];

    pub fn name(self) -> &'static str {
        match self {
            Coef::A => "a",
            Coef::B => "b",
            Coef::C => "c",
            Coef::H => "h",
            Coef::J => "j",
            Coef::P => "p",
            Coef::Q => "q",
        }
    }
}

/// Which triples a rule accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TriplePattern {
    Fixed { triple: Triple },
    /// (n0 − ν, m0 − ν, ν) for any integer ν.
    NuFamily { n0: i32, m0: i32 },
    /// Any triple; the rule's predicate carries the constraints.
    General,
}

impl TriplePattern {
    pub fn matches(&self, t: Triple) -> bool {
        match *self {
            TriplePattern::Fixed { triple } => triple == t,
            TriplePattern::NuFamily { n0, m0 } => t.n == n0 - t.nu && t.m == m0 - t.nu,
            TriplePattern::General => true,
        }
    }

    /// Search priority: concrete patterns win over broader ones.
    pub fn rank(&self) -> u8 {
        match self {
            TriplePattern::Fixed { .. } => 0,
            TriplePattern::NuFamily { .. } => 1,
            TriplePattern::General => 2,
        }
    }
}

impl fmt::Display for TriplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TriplePattern::Fixed { triple } => write!(f, "{triple}"),
            TriplePattern::NuFamily { n0, m0 } => {
                let part = |k: i32| {
                    if k == 0 {
                        "-nu".to_string()
                    } else {
                        format!("{k}-nu")
                    }
                };
                write!(f, "({},{},nu)", part(n0), part(m0))
            }
            TriplePattern::General => f.write_str("general"),
        }
    }
}

/// Non-elementary factor of a kernel term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Special {
    None,
    /// K_order(scale·t)
    BesselK { order: u32, scale: f64 },
    /// erf(√(amount/t))
    ErfOfInvSqrt { amount: f64 },
    /// erfc(2√amount/√t)
    ErfcOfInvSqrt { amount: f64 },
    /// ₁F₁(a; b; −(shift + slope·t)/t)
    Kummer { a: f64, b: f64, shift: f64, slope: f64 },
    /// w(−Z) with Z = (offset + slope·t)/(2√(j t)); see [`KernelTerm`].
    ErfiAffine { offset: Complex64, slope: Complex64, j: f64 },
    /// t^{−alpha−1} ∫₀¹ ρ^alpha (1−ρ)^beta exp(−[(1−ρ)b + ρa + jρ(1−ρ)]/t − ρh) dρ
    RIntegral { alpha: f64, beta: f64, a: f64, b: f64, j: f64, h: Complex64 },
}

/// coeff·t^alpha·e^{−beta·t − gamma/t}·special(t).
///
/// ErfiAffine terms come in pairs sharing Im Z. When Im Z > 0 the factor is
/// taken as −w(Z) instead of w(−Z) = 2e^{−Z²} − w(Z): the Gaussian parts of
/// the pair cancel exactly, and dropping them avoids a catastrophic
/// subtraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelTerm {
    pub coeff: Complex64,
    pub alpha: f64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub special: Special,
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl KernelTerm {
    pub fn new(coeff: f64, alpha: f64, beta: f64, gamma: f64, special: Special) -> Self {
        KernelTerm {
            coeff: real(coeff),
            alpha,
            beta: real(beta),
            gamma: real(gamma),
            special,
        }
    }

    pub fn elementary(coeff: f64, alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::new(coeff, alpha, beta, gamma, Special::None)
    }

    /// Term value at t times e^{extra_log}. Exponents are combined before
    /// exponentiation so large and small factors can offset each other.
    pub fn eval_scaled(&self, t: f64, extra_log: f64, tol: &Tolerance) -> Result<Complex64> {
        let log = real(self.alpha * t.ln() + extra_log) - self.beta * t - self.gamma / t;
        let v = match self.special {
            Special::None => log.exp(),
            Special::BesselK { order, scale } => {
                let x = scale * t;
                let k = bessel_k_scaled(order, x)?;
                if k.is_finite() {
                    (log - x).exp() * k
                } else {
                    // x tiny enough that K_n(x) overflows: K_n ≈ ½Γ(n)(2/x)^n
                    let lk = (0.5 * gamma(order as f64)?).ln() + order as f64 * (2.0 / x).ln();
                    (log - x + lk).exp()
                }
            }
            Special::ErfOfInvSqrt { amount } => log.exp() * erf((amount / t).sqrt()),
            Special::ErfcOfInvSqrt { amount } => {
                let u = 2.0 * (amount / t).sqrt();
                (log - u * u).exp() * erfcx(u)
            }
            Special::Kummer { a, b, shift, slope } => {
                let (mantissa, scale) = kummer_1f1_scaled(a, b, -(shift + slope * t) / t)?;
                (log + scale).exp() * mantissa
            }
            Special::ErfiAffine { offset, slope, j } => {
                let z = (offset + slope * t) / (2.0 * (j * t).sqrt());
                let w = if z.im > 0.0 { -faddeeva(z)? } else { faddeeva(-z)? };
                log.exp() * w
            }
            Special::RIntegral {
                alpha,
                beta,
                a,
                b,
                j,
                h,
            } => {
                let inner = r_integral(t, alpha, beta, a, b, j, h, tol)?;
                (log - real((alpha + 1.0) * t.ln())).exp() * inner
            }
        };
        Ok(self.coeff * v)
    }
}

#[allow(clippy::too_many_arguments)]
fn r_integral(
    t: f64,
    alpha: f64,
    beta: f64,
    a: f64,
    b: f64,
    j: f64,
    h: Complex64,
    tol: &Tolerance,
) -> Result<Complex64> {
    let inner_tol = Tolerance {
        rel: (tol.rel / 10.0).max(1e-14),
        abs: tol.abs / 10.0,
        max_evaluations: tol.max_evaluations,
    };
    let r = try_integrate_interval_endpoints(
        |node| {
            let rho = node.x;
            let (lo, hi) = (node.lo_dist, node.hi_dist);
            let log = real(alpha * lo.ln() + beta * hi.ln() - (hi * b + rho * a + j * lo * hi) / t)
                - h * rho;
            Ok(log.exp())
        },
        0.0,
        1.0,
        &inner_tol,
    )?;
    Ok(r.value)
}

/// Sum of the terms at t, times e^{extra_log}.
pub fn eval_terms(terms: &[KernelTerm], t: f64, extra_log: f64, tol: &Tolerance) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for term in terms {
        sum += term.eval_scaled(t, extra_log, tol)?;
    }
    Ok(sum)
}

type Check = fn(&Params) -> std::result::Result<(), String>;
type Builder = fn(&Params) -> Result<Vec<KernelTerm>>;
type Floor = fn(&Params) -> f64;

/// One catalog entry.
pub struct ReductionRule {
    pub id: &'static str,
    /// Short name accepted wherever an id is ("E1", "K7", ...).
    pub alias: &'static str,
    pub family: Family,
    pub pattern: TriplePattern,
    /// Coefficients that may be nonzero; the rest must vanish.
    pub coefficients: &'static [Coef],
    pub tilde: bool,
    pub status: Status,
    pub note: &'static str,
    check: Check,
    kernel: Builder,
    floor: Floor,
}

impl fmt::Debug for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductionRule")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("pattern", &self.pattern)
            .field("status", &self.status)
            .finish()
    }
}

impl PartialEq for ReductionRule {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl ReductionRule {
    pub fn flagged(&self) -> bool {
        self.status != Status::Trusted
    }

    fn not_applicable(&self, predicate: impl Into<String>) -> Error {
        Error::NotApplicable {
            rule: self.id.to_string(),
            predicate: predicate.into(),
        }
    }

    /// Checks the triple, the coefficient pattern and the rule's own
    /// predicate.
    pub fn check_applicable(&self, params: &Params) -> Result<()> {
        if !self.pattern.matches(params.triple()) {
            return Err(self.not_applicable(format!(
                "requires triple {}, got {}",
                self.pattern,
                params.triple()
            )));
        }
        if params.tilde != self.tilde {
            let want = if self.tilde { "on" } else { "off" };
            return Err(self.not_applicable(format!("requires the tilde factor {want}")));
        }
        for c in Coef::ALL {
            let v = params.coefficient(c);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(self.not_applicable(format!("requires finite {}", c.name())));
            }
            if c != Coef::H && v.re < 0.0 {
                return Err(self.not_applicable(format!("requires {}>=0", c.name())));
            }
            if !self.coefficients.contains(&c) && v.norm() != 0.0 {
                return Err(self.not_applicable(format!("requires {}=0", c.name())));
            }
        }
        (self.check)(params).map_err(|p| self.not_applicable(p))
    }

    pub fn is_applicable(&self, params: &Params) -> bool {
        self.check_applicable(params).is_ok()
    }

    /// f = t^μ·(…) needs μ > mu_min for the reduced integral to converge at
    /// t → 0; −∞ when every term is cut off exponentially there.
    pub fn mu_min(&self, params: &Params) -> f64 {
        (self.floor)(params)
    }

    pub fn kernel(&self, params: &Params) -> Result<Vec<KernelTerm>> {
        self.check_applicable(params)?;
        (self.kernel)(params)
    }

    pub fn descriptor(&self) -> RuleDescriptor {
        RuleDescriptor {
            id: self.id.to_string(),
            alias: self.alias.to_string(),
            triple: self.pattern.to_string(),
            family: self.family,
            coefficient_pattern: self.coefficients.iter().map(|c| c.name().to_string()).collect(),
            tilde: self.tilde,
            status: self.status,
            note: self.note.to_string(),
        }
    }
}

/// Serializable summary of a rule, as printed by `list`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleDescriptor {
    pub id: String,
    pub alias: String,
    pub triple: String,
    pub family: Family,
    pub coefficient_pattern: Vec<String>,
    pub tilde: bool,
    pub status: Status,
    pub note: String,
}

static REGISTRY: OnceLock<Vec<ReductionRule>> = OnceLock::new();

/// Every rule, in a fixed order.
pub fn registry() -> &'static [ReductionRule] {
    REGISTRY.get_or_init(rules::all)
}

pub fn list_rules() -> Vec<RuleDescriptor> {
    registry().iter().map(ReductionRule::descriptor).collect()
}

/// Rule by id or alias. An alias shared with flagged entries resolves to the
/// trusted one.
pub fn find_rule(name: &str) -> Result<&'static ReductionRule> {
    let rules = registry();
    rules
        .iter()
        .find(|r| r.id == name)
        .or_else(|| rules.iter().find(|r| r.alias == name && !r.flagged()))
        .or_else(|| rules.iter().find(|r| r.alias == name))
        .ok_or_else(|| Error::UnknownRule(name.to_string()))
}

/// The trusted rule of `family` whose pattern matches `triple` most
/// specifically.
pub fn lookup_rule(triple: Triple, family: Family) -> Option<&'static ReductionRule> {
    registry()
        .iter()
        .filter(|r| !r.flagged() && r.family == family && r.pattern.matches(triple))
        .min_by_key(|r| r.pattern.rank())
}

/// w(t) for the given instance.
pub fn kernel_weight(rule: &ReductionRule, params: &Params, t: f64) -> Result<Complex64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain {
            function: "kernel_weight",
            value: t,
            requirement: "t > 0",
        });
    }
    let terms = rule.kernel(params)?;
    eval_terms(&terms, t, 0.0, &Tolerance::default())
}

/// Checks μ against the rule's floor.
pub fn check_floor(rule: &ReductionRule, params: &Params, f: &TestIntegrand) -> Result<()> {
    let mu_min = rule.mu_min(params);
    if f.mu > mu_min {
        Ok(())
    } else {
        Err(Error::BelowConvergenceFloor {
            rule: rule.id.to_string(),
            mu: f.mu,
            mu_min,
        })
    }
}

/// ∫₀^∞ f(t) w(t) dt.
pub fn reduce_to_1d(
    rule: &ReductionRule,
    params: &Params,
    f: &TestIntegrand,
    tol: &Tolerance,
) -> Result<QuadResult> {
    let terms = rule.kernel(params)?;
    check_floor(rule, params, f)?;
    let decay = terms.iter().all(|t| t.beta.re > 0.0) || f.sigma > 0.0;
    if !decay {
        return Err(Error::Divergent(format!(
            "{}: no exponential decay at large t (needs c>0 or sigma>0)",
            rule.id
        )));
    }
    if f.coeff == 0.0 {
        return Ok(QuadResult {
            value: Complex64::new(0.0, 0.0),
            abs_error_estimate: 0.0,
            evaluations: 0,
            converged: true,
        });
    }
    let mut r = try_integrate_half_line(|t| eval_terms(&terms, t, f.log_shape(t), tol), tol)?;
    r.value *= f.coeff;
    r.abs_error_estimate *= f.coeff.abs();
    Ok(r)
}

#[cfg(test)]
mod tests;

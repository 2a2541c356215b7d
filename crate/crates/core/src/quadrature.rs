//! Double-exponential quadrature on [0, ∞), on finite intervals and on the
//! positive quadrant.
//!
//! Each rule is a trapezoid sum in a variable u after a map that makes the
//! integrand decay double-exponentially in |u|. Levels halve the step, reusing
//! earlier nodes; the error estimate is the change between successive levels.

use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const INITIAL_STEP: f64 = 0.5;
const MIN_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 12;
const U_MAX: f64 = 6.5;
const MIN_REACH: f64 = 3.0;
const TAIL_CUTOFF: f64 = 1e-18;

/// Values a quadrature rule can accumulate.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn magnitude(self) -> f64;
    fn finite(self) -> bool;
    fn to_complex(self) -> Complex64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
    fn finite(self) -> bool {
        self.is_finite()
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
    fn finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn to_complex(self) -> Complex64 {
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_evaluations: u64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-10,
            abs: 1e-14,
            max_evaluations: 2_000_000,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64, max_evaluations: u64) -> Result<Self> {
        if !(rel >= 1e-14 && rel.is_finite()) {
            return Err(Error::Parameter(format!("relative tolerance {rel} must be >= 1e-14")));
        }
        if !(abs > 0.0 && abs.is_finite()) {
            return Err(Error::Parameter(format!("absolute tolerance {abs} must be > 0")));
        }
        if max_evaluations == 0 {
            return Err(Error::Parameter("max_evaluations must be positive".into()));
        }
        Ok(Tolerance {
            rel,
            abs,
            max_evaluations,
        })
    }

    /// Default budget for the two-dimensional oracle.
    pub fn quadrant() -> Self {
        Tolerance {
            max_evaluations: 100_000_000,
            ..Tolerance::default()
        }
    }

    fn target(&self, magnitude: f64) -> f64 {
        self.abs.max(self.rel * magnitude)
    }

    fn tightened(&self, factor: f64) -> Self {
        Tolerance {
            rel: (self.rel / factor).max(1e-15),
            abs: self.abs / factor,
            max_evaluations: self.max_evaluations,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
}

/// A quadrature node: abscissa, weight, and the distances to the lower and
/// upper ends of the interval (computed without cancellation).
#[derive(Debug, Clone, Copy)]
pub struct Node {
    pub x: f64,
    pub weight: f64,
    pub lo_dist: f64,
    pub hi_dist: f64,
}

trait Mapping {
    fn node(&self, u: f64) -> Option<Node>;
}

struct HalfLine;

impl Mapping for HalfLine {
    fn node(&self, u: f64) -> Option<Node> {
        let s = FRAC_PI_2 * u.sinh();
        let x = s.exp();
        let weight = x * FRAC_PI_2 * u.cosh();
        if x == 0.0 || !x.is_finite() || !weight.is_finite() || weight == 0.0 {
            return None;
        }
        Some(Node {
            x,
            weight,
            lo_dist: x,
            hi_dist: f64::INFINITY,
        })
    }
}

struct Interval {
    lo: f64,
    hi: f64,
}

impl Mapping for Interval {
    fn node(&self, u: f64) -> Option<Node> {
        let half = 0.5 * (self.hi - self.lo);
        let v = FRAC_PI_2 * u.sinh();
        let e = (-2.0 * v.abs()).exp();
        // 1 − tanh|v| and 1 − tanh²v in terms of e = e^{−2|v|}
        let near = half * 2.0 * e / (1.0 + e);
        let weight = half * FRAC_PI_2 * u.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if near == 0.0 || weight == 0.0 {
            return None;
        }
        let far = 2.0 * half - near;
        Some(if u >= 0.0 {
            Node {
                x: self.hi - near,
                weight,
                lo_dist: far,
                hi_dist: near,
            }
        } else {
            Node {
                x: self.lo + near,
                weight,
                lo_dist: near,
                hi_dist: far,
            }
        })
    }
}

struct Outcome<T> {
    value: T,
    error: f64,
    evaluations: u64,
    converged: bool,
    step: f64,
}

fn term<T, M, F>(map: &M, f: &mut F, u: f64, evaluations: &mut u64) -> Result<Option<T>>
where
    T: QuadValue,
    M: Mapping,
    F: FnMut(&Node) -> Result<T>,
{
    let Some(node) = map.node(u) else {
        return Ok(None);
    };
    let v = f(&node)?;
    *evaluations += 1;
    if !v.finite() {
        return Err(Error::NonFinite { at: node.x });
    }
    Ok(Some(v * node.weight))
}

/// Adds the nodes start, start + stride, … . Every node with |u| ≤ `reach`
/// is taken; beyond that the sweep stops once the terms become negligible
/// against the running sum or the map runs out of representable abscissae.
/// Returns the last |u| visited.
fn sweep<T, M, F>(
    map: &M,
    f: &mut F,
    start: f64,
    stride: f64,
    reach: f64,
    raw: &mut T,
    evaluations: &mut u64,
) -> Result<f64>
where
    T: QuadValue,
    M: Mapping,
    F: FnMut(&Node) -> Result<T>,
{
    let mut quiet = 0;
    let mut u = start;
    let mut extent = 0.0;
    while u.abs() <= U_MAX {
        let Some(t) = term(map, f, u, evaluations)? else {
            break;
        };
        extent = u.abs();
        *raw = *raw + t;
        let total = raw.magnitude();
        if u.abs() > reach && total > 0.0 && t.magnitude() <= TAIL_CUTOFF * total {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        u += stride;
    }
    Ok(extent)
}

fn de_rule<T, M, F>(map: &M, mut f: F, tol: &Tolerance) -> Result<Outcome<T>>
where
    T: QuadValue,
    M: Mapping,
    F: FnMut(&Node) -> Result<T>,
{
    let mut evaluations = 0u64;
    let mut raw = T::zero();
    let mut h = INITIAL_STEP;
    if let Some(t) = term(map, &mut f, 0.0, &mut evaluations)? {
        raw = raw + t;
    }
    // a peak can sit far from the centre, so the coarse level always spans
    // |u| ≤ MIN_REACH; later levels fill in everything the coarse one covered
    let right = sweep(map, &mut f, h, h, MIN_REACH, &mut raw, &mut evaluations)?;
    let left = sweep(map, &mut f, -h, -h, MIN_REACH, &mut raw, &mut evaluations)?;
    let mut estimate = raw * h;
    let mut error = f64::INFINITY;

    for level in 1..=MAX_LEVEL {
        if evaluations >= tol.max_evaluations {
            break;
        }
        h *= 0.5;
        // the new nodes are the odd multiples of the halved step
        sweep(map, &mut f, h, 2.0 * h, right, &mut raw, &mut evaluations)?;
        sweep(map, &mut f, -h, -2.0 * h, left, &mut raw, &mut evaluations)?;
        let next = raw * h;
        error = (next - estimate).magnitude();
        estimate = next;
        if level >= MIN_LEVEL && error <= tol.target(estimate.magnitude()) {
            return Ok(Outcome {
                value: estimate,
                error,
                evaluations,
                converged: true,
                step: h,
            });
        }
    }
    Ok(Outcome {
        value: estimate,
        error,
        evaluations,
        converged: false,
        step: h,
    })
}

fn finish<T: QuadValue>(o: Outcome<T>) -> QuadResult {
    QuadResult {
        value: o.value.to_complex(),
        abs_error_estimate: o.error,
        evaluations: o.evaluations,
        converged: o.converged,
    }
}

/// ∫₀^∞ f(t) dt. The integrand is never evaluated at t = 0.
pub fn integrate_half_line<T, F>(mut f: F, tol: &Tolerance) -> Result<QuadResult>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    try_integrate_half_line(|t| Ok(f(t)), tol)
}

/// As [`integrate_half_line`] for integrands that can fail.
pub fn try_integrate_half_line<T, F>(mut f: F, tol: &Tolerance) -> Result<QuadResult>
where
    T: QuadValue,
    F: FnMut(f64) -> Result<T>,
{
    de_rule(&HalfLine, |n| f(n.x), tol).map(finish)
}

/// ∫_lo^hi f(x) dx; endpoints are never evaluated.
pub fn integrate_interval<T, F>(mut f: F, lo: f64, hi: f64, tol: &Tolerance) -> Result<QuadResult>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    try_integrate_interval_endpoints(|n| Ok(f(n.x)), lo, hi, tol)
}

/// ∫_lo^hi with the integrand given the full node, so that factors like
/// (hi − x)^{−1/2} can use `hi_dist` instead of a cancelling subtraction.
pub fn try_integrate_interval_endpoints<T, F>(
    f: F,
    lo: f64,
    hi: f64,
    tol: &Tolerance,
) -> Result<QuadResult>
where
    T: QuadValue,
    F: FnMut(&Node) -> Result<T>,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Parameter(format!("integration interval [{lo}, {hi}]")));
    }
    de_rule(&Interval { lo, hi }, f, tol).map(finish)
}

/// ∬ over x, y > 0 as an iterated integral: outer in x, inner in y with the
/// inner tolerance ten times tighter.
pub fn integrate_quadrant<T, F>(f: F, tol: &Tolerance) -> Result<QuadResult>
where
    T: QuadValue,
    F: Fn(f64, f64) -> T,
{
    try_integrate_quadrant(|x, y| Ok(f(x, y)), tol)
}

/// As [`integrate_quadrant`] for integrands that can fail.
pub fn try_integrate_quadrant<T, F>(f: F, tol: &Tolerance) -> Result<QuadResult>
where
    T: QuadValue,
    F: Fn(f64, f64) -> Result<T>,
{
    iterated(&HalfLine, &HalfLine, |x, n| f(x, n.x), tol)
}

/// ∫₀^∞ dt ∫₀¹ dρ f(t, ρ). The inner integrand receives the full node so it
/// can use the endpoint distances ρ and 1 − ρ directly.
pub fn try_integrate_strip<T, F>(f: F, tol: &Tolerance) -> Result<QuadResult>
where
    T: QuadValue,
    F: Fn(f64, &Node) -> Result<T>,
{
    iterated(&HalfLine, &Interval { lo: 0.0, hi: 1.0 }, f, tol)
}

fn iterated<T, O, I, F>(outer_map: &O, inner_map: &I, f: F, tol: &Tolerance) -> Result<QuadResult>
where
    T: QuadValue,
    O: Mapping,
    I: Mapping,
    F: Fn(f64, &Node) -> Result<T>,
{
    let inner_tol = tol.tightened(10.0);
    let mut inner_evaluations = 0u64;
    let mut inner_error = 0.0;
    let mut all_inner_converged = true;
    let mut out_of_budget = false;
    let outer = de_rule(
        outer_map,
        |node| {
            if inner_evaluations >= tol.max_evaluations {
                out_of_budget = true;
                return Ok(Complex64::new(0.0, 0.0));
            }
            let inner = de_rule(inner_map, |n| f(node.x, n), &inner_tol)?;
            inner_evaluations += inner.evaluations;
            all_inner_converged &= inner.converged;
            inner_error += node.weight * inner.error;
            Ok(inner.value.to_complex())
        },
        tol,
    )?;
    // every outer node enters the final trapezoid sum with the final step
    let inner_contrib = outer.step * inner_error;
    let error = outer.error + inner_contrib;
    // inner rules that stall far out in the tails, where the integrand is
    // below the outer tolerance, do not spoil the result
    let inner_ok = all_inner_converged || inner_contrib <= tol.target(outer.value.magnitude());
    Ok(QuadResult {
        value: outer.value,
        abs_error_estimate: error,
        evaluations: inner_evaluations,
        converged: outer.converged && inner_ok && !out_of_budget,
    })
}

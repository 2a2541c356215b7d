//! Confluent hypergeometric function ₁F₁(A; B; z), its Bessel-I and Laguerre
//! reductions, and the generalized Laguerre polynomials.

use num_complex::Complex64;

use super::bessel::bessel_i;
use super::gamma::{gamma, pochhammer};
use crate::error::{Error, Result};

const ASYMPTOTIC_FROM: f64 = 50.0;
const RICHARDSON_STEP: f64 = 0.05;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn check_b(b: f64) -> Result<()> {
    if is_nonpositive_integer(b) {
        Err(Error::Parameter(format!(
            "1F1 lower parameter B = {b} is a non-positive integer"
        )))
    } else if !b.is_finite() {
        Err(Error::Parameter(format!("1F1 lower parameter B = {b}")))
    } else {
        Ok(())
    }
}

fn polynomial(a: f64, b: f64, x: f64) -> f64 {
    // a = −N: finite sum of N+1 terms
    let n = (-a) as u32;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (a + kf) * x / ((b + kf) * (kf + 1.0));
        sum += term;
    }
    sum
}

fn taylor(a: f64, b: f64, x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..5_000 {
        let kf = k as f64;
        term *= (a + kf) * x / ((b + kf) * (kf + 1.0));
        sum += term;
        let ratio = ((a + kf + 1.0) * x / ((b + kf + 1.0) * (kf + 2.0))).abs();
        if term.abs() <= 1e-17 * sum.abs() && ratio < 0.5 {
            break;
        }
    }
    sum
}

/// Large positive x: e^x x^{a−b} Γ(b)/Γ(a) Σ (b−a)_k (1−a)_k / (k! x^k),
/// returned as (mantissa, log scale). None if the series cannot reach full
/// precision before it starts to diverge.
fn asymptotic(a: f64, b: f64, x: f64) -> Option<(f64, f64)> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut converged = false;
    for k in 0..200 {
        let kf = k as f64;
        let next = term * (b - a + kf) * (1.0 - a + kf) / ((kf + 1.0) * x);
        if next.abs() > term.abs() && k > 0 {
            break;
        }
        term = next;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    let prefactor = gamma(b).ok()? / gamma(a).ok()?;
    Some((prefactor * sum, x + (a - b) * x.ln()))
}

fn positive_argument(a: f64, b: f64, x: f64) -> (f64, f64) {
    if is_nonpositive_integer(a) {
        return (polynomial(a, b, x), 0.0);
    }
    if x > ASYMPTOTIC_FROM.max(4.0 * (a.abs() + b.abs())) {
        if let Some(v) = asymptotic(a, b, x) {
            return v;
        }
    }
    (taylor(a, b, x), 0.0)
}

/// ₁F₁(a; b; x) for real x as (mantissa, log scale): the value is
/// mantissa·e^{log scale}. Negative x goes through Kummer's transformation
/// ₁F₁(a; b; x) = e^x ₁F₁(b−a; b; −x), which keeps the series positive.
pub fn kummer_1f1_scaled(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    check_b(b)?;
    if !a.is_finite() || !x.is_finite() {
        return Err(Error::Parameter(format!("1F1 arguments a = {a}, x = {x}")));
    }
    if x == 0.0 || a == 0.0 {
        return Ok((1.0, 0.0));
    }
    if is_nonpositive_integer(a) {
        return Ok((polynomial(a, b, x), 0.0));
    }
    if x < 0.0 {
        let (m, l) = positive_argument(b - a, b, -x);
        return Ok((m, l + x));
    }
    Ok(positive_argument(a, b, x))
}

/// ₁F₁(a; b; x) for real x.
pub fn kummer_1f1_real(a: f64, b: f64, x: f64) -> Result<f64> {
    let (m, l) = kummer_1f1_scaled(a, b, x)?;
    let v = m * l.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("kummer_1f1"))
    }
}

fn taylor_complex(a: f64, b: f64, z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..5_000 {
        let kf = k as f64;
        term *= z * ((a + kf) / ((b + kf) * (kf + 1.0)));
        sum += term;
        let ratio = ((a + kf + 1.0) / ((b + kf + 1.0) * (kf + 2.0))).abs() * z.norm();
        if term.norm() <= 1e-17 * sum.norm() && ratio < 0.5 {
            break;
        }
    }
    sum
}

/// ₁F₁(a; b; z) for complex z. Real z is routed through the real
/// evaluator; otherwise Taylor summation after moving z into Re z ≥ 0.
/// Accuracy degrades gradually once |z| exceeds about 50.
pub fn kummer_1f1(a: f64, b: f64, z: Complex64) -> Result<Complex64> {
    check_b(b)?;
    if z.im == 0.0 {
        return kummer_1f1_real(a, b, z.re).map(|v| Complex64::new(v, 0.0));
    }
    let v = if z.re < 0.0 {
        z.exp() * taylor_complex(b - a, b, -z)
    } else {
        taylor_complex(a, b, z)
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("kummer_1f1"))
    }
}

/// Generalized Laguerre polynomial L_M^α(z) by the three-term recurrence.
pub fn laguerre_gen(m: u32, alpha: f64, z: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - z;
    for k in 1..m {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - z) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// (z/4)^α I_ν(z/2) for real z ≠ 0 when α + ν = k is an integer: the product is
/// (z/4)^k times an even power series, hence real for either sign of z.
fn scaled_bessel(alpha: f64, nu: f64, z: f64) -> Result<f64> {
    let k = (alpha + nu).round();
    let sign = if z < 0.0 && (k as i64) % 2 != 0 { -1.0 } else { 1.0 };
    let x = z.abs();
    Ok(sign * (0.25 * x).powf(alpha) * bessel_i(nu, 0.5 * x)?)
}

/// Γ(s)·(2s)_k·(s+k) with s = A−M−1/2, written so that s = 0 is exact.
fn gamma_weight(s: f64, k: u32) -> Result<f64> {
    if s == 0.0 {
        // Γ(s)·s → 1 and Γ(s)·(2s)_k → 2·(1)_{k−1}
        return Ok(if k == 0 {
            1.0
        } else {
            2.0 * pochhammer(1.0, k - 1) * k as f64
        });
    }
    Ok(gamma(s)? * pochhammer(2.0 * s, k) * (s + k as f64))
}

fn minus_form_regular(a: f64, m: u32, z: f64) -> Result<f64> {
    let s = a - m as f64 - 0.5;
    let alpha = m as f64 - a + 0.5;
    let mut sum = 0.0;
    for k in 0..=m {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let num = sign * pochhammer(-(m as f64), k) * gamma_weight(s, k)?;
        let den = pochhammer(2.0 * a - m as f64, k) * pochhammer(1.0, k);
        let nu = a + k as f64 - m as f64 - 0.5;
        sum += num / den * scaled_bessel(alpha, nu, z)?;
    }
    Ok((0.5 * z).exp() * sum)
}

/// ₁F₁(A; 2A−M; z) through its finite Bessel-I sum. At A−M−1/2 ∈ {−1, −2, …}
/// the printed form has a removable singularity; the value there is the limit
/// in A, obtained by Richardson extrapolation of symmetric offsets.
pub fn kummer_via_bessel_minus(a: f64, m: u32, z: f64) -> Result<f64> {
    check_b(2.0 * a - m as f64)?;
    if z == 0.0 {
        return Ok(1.0);
    }
    let s = a - m as f64 - 0.5;
    if is_nonpositive_integer(s) && s < 0.0 {
        let sym = |e: f64| -> Result<f64> {
            Ok(0.5 * (minus_form_regular(a + e, m, z)? + minus_form_regular(a - e, m, z)?))
        };
        // even in the offset, so three levels remove the e², e⁴ and e⁶ terms
        let eps = RICHARDSON_STEP;
        let f = [sym(eps)?, sym(0.5 * eps)?, sym(0.25 * eps)?, sym(0.125 * eps)?];
        let r1: Vec<f64> = f.windows(2).map(|w| (4.0 * w[1] - w[0]) / 3.0).collect();
        let r2: Vec<f64> = r1.windows(2).map(|w| (16.0 * w[1] - w[0]) / 15.0).collect();
        return Ok((64.0 * r2[1] - r2[0]) / 63.0);
    }
    minus_form_regular(a, m, z)
}

/// ₁F₁(A; 2A; z) = e^{z/2} Γ(A+1/2) (|z|/4)^{1/2−A} I_{A−1/2}(|z|/2) for real z,
/// which is the principal-branch value of the complex form.
pub fn kummer_via_bessel(a: f64, z: f64) -> Result<f64> {
    check_b(2.0 * a)?;
    if z == 0.0 {
        return Ok(1.0);
    }
    let nu = a - 0.5;
    Ok((0.5 * z).exp() * gamma(a + 0.5)? * scaled_bessel(-nu, nu, z)?)
}

/// ₁F₁(A; 2A+M; z) through its finite Bessel-I sum.
pub fn kummer_via_bessel_plus(a: f64, m: u32, z: f64) -> Result<f64> {
    check_b(2.0 * a + m as f64)?;
    if z == 0.0 {
        return Ok(1.0);
    }
    let alpha = 0.5 - a;
    let mut sum = 0.0;
    for k in 0..=m {
        let num = pochhammer(-(m as f64), k) * pochhammer(2.0 * a - 1.0, k);
        let nu = a + k as f64 - 0.5;
        let den = pochhammer(2.0 * a + m as f64, k) * pochhammer(1.0, k);
        sum += num / den * nu * scaled_bessel(alpha, nu, z)?;
    }
    Ok(gamma(a - 0.5)? * (0.5 * z).exp() * sum)
}

/// ₁F₁(A; A−M; z) = (−1)^M e^z M! L_M^{A−M−1}(−z) / (1−A)_M.
pub fn kummer_via_laguerre(a: f64, m: u32, z: f64) -> Result<f64> {
    check_b(a - m as f64)?;
    let denom = pochhammer(1.0 - a, m);
    if denom == 0.0 {
        return Err(Error::Parameter(format!(
            "Laguerre form undefined: (1−A)_M vanishes for A = {a}, M = {m}"
        )));
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * z.exp() * pochhammer(1.0, m) * laguerre_gen(m, a - m as f64 - 1.0, -z) / denom)
}

/// Routes ₁F₁(A; B; z) to a Bessel-I form when B − 2A is an integer; None otherwise.
pub fn kummer_via_bessel_auto(a: f64, b: f64, z: f64) -> Option<Result<f64>> {
    let diff = b - 2.0 * a;
    if (diff - diff.round()).abs() > 1e-12 {
        return None;
    }
    let d = diff.round() as i64;
    Some(match d {
        0 => kummer_via_bessel(a, z),
        d if d > 0 => kummer_via_bessel_plus(a, d as u32, z),
        d => kummer_via_bessel_minus(a, (-d) as u32, z),
    })
}

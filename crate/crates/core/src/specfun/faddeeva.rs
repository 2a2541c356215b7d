//! Faddeeva function w(z) = e^{−z²} erfc(−iz) and the error functions built on it.
//!
//! Upper half plane: Laplace continued fraction far from the origin, otherwise a
//! Taylor walk down the line Re z = const using w' = −2zw + 2i/√π, starting from
//! a point where the continued fraction is accurate. Walking towards the real
//! axis is the stable direction for that ODE. The lower half plane follows from
//! w(z) = 2e^{−z²} − w(−z).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const CF_RADIUS: f64 = 8.0;
const CF_DEPTH: usize = 60;
const WALK_STEP: f64 = 0.25;
const EXP_LIMIT: f64 = 708.0;

fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function: "faddeeva",
            value: if z.re.is_finite() { z.im } else { z.re },
            requirement: "finite argument",
        })
    }
}

fn continued_fraction(z: Complex64) -> Complex64 {
    let mut t = z;
    for k in (1..=CF_DEPTH).rev() {
        t = z - 0.5 * k as f64 / t;
    }
    Complex64::i() / (PI.sqrt() * t)
}

fn taylor_step(z0: Complex64, w0: Complex64, dz: Complex64) -> Complex64 {
    let two_i_over_sqrt_pi = Complex64::new(0.0, FRAC_2_SQRT_PI);
    let mut c_prev = w0;
    let mut c = -2.0 * z0 * w0 + two_i_over_sqrt_pi;
    let mut sum = w0 + c * dz;
    let mut pow = dz;
    let mut small = 0;
    for n in 1..120 {
        let next = -2.0 * (z0 * c + c_prev) / (n as f64 + 1.0);
        c_prev = c;
        c = next;
        pow *= dz;
        let term = c * pow;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            small += 1;
            if small == 2 {
                break;
            }
        } else {
            small = 0;
        }
    }
    sum
}

fn upper(z: Complex64) -> Complex64 {
    if z.norm() >= CF_RADIUS {
        return continued_fraction(z);
    }
    let x = z.re;
    let y_start = (CF_RADIUS * CF_RADIUS - x * x).max(0.0).sqrt() + 0.5;
    let steps = ((y_start - z.im) / WALK_STEP).ceil().max(1.0) as usize;
    let h = (y_start - z.im) / steps as f64;
    let dz = Complex64::new(0.0, -h);
    let mut zk = Complex64::new(x, y_start);
    let mut w = continued_fraction(zk);
    for _ in 0..steps {
        w = taylor_step(zk, w, dz);
        zk += dz;
    }
    w
}

/// w(z) = e^{−z²} erfc(−iz).
pub fn faddeeva(z: Complex64) -> Result<Complex64> {
    faddeeva_scaled(z, Complex64::new(0.0, 0.0))
}

/// e^{log_prefactor}·w(z), with the exponentials combined before they are
/// taken so that a large e^{−z²} in the lower half plane can be offset by the
/// prefactor.
pub fn faddeeva_scaled(z: Complex64, log_prefactor: Complex64) -> Result<Complex64> {
    check_finite(z)?;
    check_finite(log_prefactor)?;
    if z.im >= 0.0 {
        let w = upper(z);
        return finite_or_overflow(scaled_product(log_prefactor, w));
    }
    let reflected = upper(-z);
    let gauss = log_prefactor - z * z;
    if gauss.re > EXP_LIMIT {
        return Err(Error::Overflow("faddeeva"));
    }
    let value = 2.0 * gauss.exp() - scaled_product(log_prefactor, reflected);
    finite_or_overflow(value)
}

fn scaled_product(log_prefactor: Complex64, w: Complex64) -> Complex64 {
    if log_prefactor.re.abs() < 600.0 {
        log_prefactor.exp() * w
    } else {
        (log_prefactor + w.ln()).exp()
    }
}

fn finite_or_overflow(v: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("faddeeva"))
    }
}

fn erf_series(z: Complex64) -> Complex64 {
    // Maclaurin series, used where |z| is small enough that 1 − e^{−z²}w(iz)
    // would cancel
    let z2 = z * z;
    let mut term = z;
    let mut sum = z;
    for k in 1..60 {
        term *= -z2 / k as f64;
        let add = term / (2 * k + 1) as f64;
        sum += add;
        if add.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    FRAC_2_SQRT_PI * sum
}

/// erf of a complex argument.
pub fn erf_complex(z: Complex64) -> Result<Complex64> {
    check_finite(z)?;
    if z.im == 0.0 {
        return Ok(Complex64::new(erf(z.re), 0.0));
    }
    if z.re == 0.0 {
        return Ok(Complex64::new(0.0, erfi_real(z.im)?));
    }
    if z.norm() < 0.5 {
        return Ok(erf_series(z));
    }
    if z.re < 0.0 {
        return erf_complex(-z).map(|v| -v);
    }
    // erf z = 1 − e^{−z²} w(iz), and iz lies in the upper half plane here
    let iz = Complex64::i() * z;
    let tail = faddeeva_scaled(iz, -z * z)?;
    Ok(1.0 - tail)
}

fn erfi_real(x: f64) -> Result<f64> {
    if x.abs() < 0.5 {
        return Ok(erf_series(Complex64::new(0.0, x)).im);
    }
    // w(x) = e^{−x²} + i·erfi(x)·e^{−x²} on the real axis
    if x * x > EXP_LIMIT {
        return Err(Error::Overflow("erfi"));
    }
    let w = upper(Complex64::new(x, 0.0));
    Ok((x * x).exp() * w.im)
}

/// erfi(z) = −i·erf(iz).
pub fn erfi(z: Complex64) -> Result<Complex64> {
    let v = erf_complex(Complex64::i() * z)?;
    Ok(-Complex64::i() * v)
}

fn erf_positive_series(x: f64) -> f64 {
    // erf x = (2/√π) e^{−x²} Σ 2^k x^{2k+1}/(2k+1)!!, all terms positive
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    for k in 1..200 {
        term *= 2.0 * x2 / (2 * k + 1) as f64;
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    FRAC_2_SQRT_PI * (-x2).exp() * sum
}

/// Scaled complementary error function e^{x²} erfc(x).
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    // below 1 the continued fraction in `upper` loses a few ulps, while
    // 1 − erf(x) ≥ 0.157 cancels nothing
    if x < 1.0 {
        if x < -26.5 {
            return f64::INFINITY;
        }
        return (x * x).exp() * (1.0 - erf(x));
    }
    upper(Complex64::new(0.0, x)).re
}

pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 0.0 {
        return -erf(-x);
    }
    if x < 2.5 {
        erf_positive_series(x)
    } else {
        1.0 - erfc(x)
    }
}

pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 1.0 {
        return 1.0 - erf(x);
    }
    if x > 27.3 {
        return 0.0;
    }
    (-x * x).exp() * erfcx(x)
}

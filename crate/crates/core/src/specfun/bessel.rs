//! Modified Bessel functions: K of order 0, 1, 2 and I of real order.

use std::f64::consts::PI;

use super::gamma::{digamma_int, rgamma};
use crate::error::{Error, Result};

const SERIES_LIMIT: f64 = 2.0;

fn check_positive(function: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function,
            value: x,
            requirement: "x > 0",
        })
    }
}

/// (K0, K1) by the logarithmic power series, for x ≤ 2.
fn k01_series(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let log_half = (0.5 * x).ln();
    let (mut i0, mut i1) = (0.0, 0.0);
    let (mut s0, mut s1) = (0.0, 0.0);
    // term0 = q^k/(k!)², term1 = q^k/(k!(k+1)!)
    let mut term0 = 1.0;
    let mut term1 = 1.0;
    for k in 0..60u32 {
        let psi1 = digamma_int(k + 1);
        let psi2 = digamma_int(k + 2);
        i0 += term0;
        i1 += term1;
        s0 += psi1 * term0;
        s1 += (psi1 + psi2) * term1;
        let kf = k as f64 + 1.0;
        term0 *= q / (kf * kf);
        term1 *= q / (kf * (kf + 1.0));
        if term0 < 1e-18 * i0 {
            break;
        }
    }
    let i1 = 0.5 * x * i1;
    let k0 = -log_half * i0 + s0;
    let k1 = 1.0 / x + log_half * i1 - 0.25 * x * s1;
    (k0, k1)
}

/// (e^x K0, e^x K1) by Steed's continued fraction (Temme's CF2), for x > 2.
fn k01_scaled_cf(x: f64) -> (f64, f64) {
    if x > 1e6 {
        // the continued fraction's recurrences overflow; three terms of the
        // asymptotic series are exact to rounding here
        let r = (PI / (2.0 * x)).sqrt();
        let y = 1.0 / (8.0 * x);
        let k0 = r * (1.0 - y + 4.5 * y * y);
        let k1 = r * (1.0 + 3.0 * y - 7.5 * y * y);
        return (k0, k1);
    }
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..10_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    let h = a1 * h;
    let k0 = (PI / (2.0 * x)).sqrt() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

fn k_from_pair(order: u32, x: f64, k0: f64, k1: f64) -> Result<f64> {
    match order {
        0 => Ok(k0),
        1 => Ok(k1),
        2 => Ok(k0 + 2.0 * k1 / x),
        _ => Err(Error::Parameter(format!(
            "bessel_k supports orders 0, 1, 2; got {order}"
        ))),
    }
}

/// Macdonald function K_order(x) for order ∈ {0, 1, 2}.
pub fn bessel_k(order: u32, x: f64) -> Result<f64> {
    check_positive("bessel_k", x)?;
    if x <= SERIES_LIMIT {
        let (k0, k1) = k01_series(x);
        k_from_pair(order, x, k0, k1)
    } else {
        let (k0, k1) = k01_scaled_cf(x);
        let e = (-x).exp();
        k_from_pair(order, x, k0 * e, k1 * e)
    }
}

/// e^x K_order(x), finite for large x where K itself underflows.
pub fn bessel_k_scaled(order: u32, x: f64) -> Result<f64> {
    check_positive("bessel_k_scaled", x)?;
    if x <= SERIES_LIMIT {
        let (k0, k1) = k01_series(x);
        let e = x.exp();
        k_from_pair(order, x, k0 * e, k1 * e)
    } else {
        let (k0, k1) = k01_scaled_cf(x);
        k_from_pair(order, x, k0, k1)
    }
}

/// I_ν(x) for real order by its power series; negative integer orders use I_{−n} = I_n.
pub fn bessel_i(order: f64, x: f64) -> Result<f64> {
    check_positive("bessel_i", x)?;
    let order = if order < 0.0 && order == order.floor() {
        -order
    } else {
        order
    };
    let q = 0.25 * x * x;
    // negative integer orders were folded above, so no denominator vanishes
    let mut term = (0.5 * x).powf(order) * rgamma(order + 1.0);
    let mut sum = term;
    for k in 1..2_000 {
        let kf = k as f64;
        term *= q / (kf * (kf + order));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() && kf > q.sqrt() {
            break;
        }
    }
    if !sum.is_finite() {
        return Err(Error::Overflow("bessel_i"));
    }
    Ok(sum)
}

/// K_{n+1/2}(x) in closed form.
fn k_half(n: u32, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut coeff = 1.0; // (n+k)!/(k!(n−k)!)
    for k in 0..=n {
        sum += coeff / (2.0 * x).powi(k as i32);
        let kf = k as f64;
        let nf = n as f64;
        coeff *= (nf + kf + 1.0) * (nf - kf) / (kf + 1.0);
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() * sum
}

/// I_{n+1/2}(x) for large x from the elementary closed form.
fn i_half_large(n: u32, x: f64) -> f64 {
    let mut plus = 0.0;
    let mut minus = 0.0;
    let mut coeff = 1.0;
    for k in 0..=n {
        let p = coeff / (2.0 * x).powi(k as i32);
        plus += if k % 2 == 0 { p } else { -p };
        minus += p;
        let kf = k as f64;
        let nf = n as f64;
        coeff *= (nf + kf + 1.0) * (nf - kf) / (kf + 1.0);
    }
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    (x.exp() * plus + sign * (-x).exp() * minus) / (2.0 * PI * x).sqrt()
}

/// I_{two_order/2}(x) for odd two_order.
pub fn bessel_i_half(two_order: i32, x: f64) -> Result<f64> {
    check_positive("bessel_i_half", x)?;
    if two_order % 2 == 0 {
        return Err(Error::Parameter(format!(
            "bessel_i_half needs an odd doubled order, got {two_order}"
        )));
    }
    if two_order > 0 {
        let n = ((two_order - 1) / 2) as u32;
        if x > 40.0 {
            return Ok(i_half_large(n, x));
        }
        return bessel_i(0.5 * two_order as f64, x);
    }
    // I_{−n−1/2} = I_{n+1/2} + (−1)^n (2/π) K_{n+1/2}
    let n = ((-two_order - 1) / 2) as u32;
    let ip = bessel_i_half(2 * n as i32 + 1, x)?;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(ip + sign * (2.0 / PI) * k_half(n, x))
}

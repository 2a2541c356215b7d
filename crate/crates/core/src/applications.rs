//! Two-center Yukawa and hydrogenic overlaps and their Fourier transforms.
//!
//! Each product of potentials is written through the Gaussian transform
//! e^{−ηr}/r = π^{−1/2}∫₀^∞ ρ^{−1/2} e^{−r²ρ−η²/(4ρ)} dρ, the spatial integral
//! is done in closed form, and what is left is an R₂ instance at (4,4,0) with
//! a = η₁²/4, b = η₂²/4, c = x₂², f(t) = √π·t^{3/2}.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::{find_rule, reduce_to_1d, Params, TestIntegrand};
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_interval_endpoints, QuadResult, Tolerance};
use crate::reducer::{direct_2d, normalize};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Below this fraction of max(η₁, η₂) the erfi kernel is traded for the τ-form.
pub const SMALL_K: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct YukawaPairSpec {
    pub eta1: f64,
    pub eta2: f64,
    /// Distance between the two centers.
    pub x2: f64,
}

impl YukawaPairSpec {
    pub fn new(eta1: f64, eta2: f64, x2: f64) -> Result<Self> {
        check_eta("eta1", eta1)?;
        check_eta("eta2", eta2)?;
        if !(x2.is_finite() && x2 >= 0.0) {
            return Err(domain("x2", x2, "finite and >= 0"));
        }
        Ok(YukawaPairSpec { eta1, eta2, x2 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourierSpec {
    pub k: f64,
    /// The scalar product k·x₂, i.e. k·x₂·cos θ.
    pub k_dot_x2: f64,
    pub eta1: f64,
    pub eta2: f64,
    pub x2: f64,
}

impl FourierSpec {
    pub fn new(k: f64, k_dot_x2: f64, eta1: f64, eta2: f64, x2: f64) -> Result<Self> {
        YukawaPairSpec::new(eta1, eta2, x2)?;
        if !(k.is_finite() && k >= 0.0) {
            return Err(domain("k", k, "finite and >= 0"));
        }
        // a little slack so that k·x₂ computed as k*x2 itself is accepted
        if !k_dot_x2.is_finite() || k_dot_x2.abs() > k * x2 * (1.0 + 4.0 * f64::EPSILON) {
            return Err(domain("k_dot_x2", k_dot_x2, "|k.x2| <= k*x2"));
        }
        Ok(FourierSpec {
            k,
            k_dot_x2,
            eta1,
            eta2,
            x2,
        })
    }

    pub fn pair(&self) -> YukawaPairSpec {
        YukawaPairSpec {
            eta1: self.eta1,
            eta2: self.eta2,
            x2: self.x2,
        }
    }
}

fn domain(function: &'static str, value: f64, requirement: &'static str) -> Error {
    Error::Domain {
        function,
        value,
        requirement,
    }
}

fn check_eta(name: &'static str, eta: f64) -> Result<()> {
    if eta.is_finite() && eta > 0.0 {
        Ok(())
    } else {
        Err(domain(name, eta, "finite and > 0"))
    }
}

fn check_distinct(spec: &YukawaPairSpec) -> Result<()> {
    if spec.x2 <= 0.0 {
        return Err(domain("x2", spec.x2, "> 0"));
    }
    if spec.eta1 == spec.eta2 {
        return Err(domain("eta2", spec.eta2, "distinct from eta1 (use the equal form)"));
    }
    Ok(())
}

/// ∫ e^{−η₁r}/r · e^{−η₂|r−x₂|}/|r−x₂| d³r in closed form.
pub fn yukawa_pair(spec: &YukawaPairSpec) -> Result<f64> {
    check_distinct(spec)?;
    let (e1, e2, x) = (spec.eta1, spec.eta2, spec.x2);
    // e^{−xη₁} − e^{−xη₂} = e^{−xη₁}(1 − e^{−x(η₂−η₁)}) keeps digits when η₁ ≈ η₂
    let diff = -(-x * e1).exp() * (-x * (e2 - e1)).exp_m1();
    Ok(4.0 * PI * diff / (x * (e2 - e1) * (e2 + e1)))
}

/// The η₁ = η₂ = η limit of [`yukawa_pair`]: 2π e^{−x₂η}/η.
pub fn yukawa_pair_equal(eta: f64, x2: f64) -> Result<f64> {
    check_eta("eta", eta)?;
    if !(x2.is_finite() && x2 >= 0.0) {
        return Err(domain("x2", x2, "finite and >= 0"));
    }
    Ok(2.0 * PI * (-x2 * eta).exp() / eta)
}

/// 1s orbital η₁^{3/2}e^{−η₁r}/√π against a Yukawa potential at distance x₂.
pub fn hydrogenic_pair(spec: &YukawaPairSpec) -> Result<f64> {
    check_distinct(spec)?;
    let (e1, e2, x) = (spec.eta1, spec.eta2, spec.x2);
    let d = e1 * e1 - e2 * e2;
    let bracket = (-e2 * x).exp() / x - (d / (2.0 * e1) + 1.0 / x) * (-e1 * x).exp();
    Ok(8.0 * SQRT_PI * e1.powf(2.5) / (d * d) * bracket)
}

/// The η₁ = η₂ = η limit of [`hydrogenic_pair`].
pub fn hydrogenic_pair_equal(eta: f64, x2: f64) -> Result<f64> {
    check_eta("eta", eta)?;
    Ok(SQRT_PI * (1.0 + x2 * eta) / eta.sqrt() * (-eta * x2).exp())
}

/// −(η₁^{3/2}/√π)·∂/∂η₁ of [`yukawa_pair`] by a central difference with
/// relative step 1e-5; a check on [`hydrogenic_pair`].
pub fn hydrogenic_pair_fd(spec: &YukawaPairSpec) -> Result<f64> {
    let h = 1e-5 * spec.eta1;
    let up = yukawa_pair(&YukawaPairSpec {
        eta1: spec.eta1 + h,
        ..*spec
    })?;
    let down = yukawa_pair(&YukawaPairSpec {
        eta1: spec.eta1 - h,
        ..*spec
    })?;
    Ok(-spec.eta1.powf(1.5) / SQRT_PI * (up - down) / (2.0 * h))
}

/// The R₂ instance whose value is the Yukawa pair overlap.
pub fn yukawa_instance(spec: &YukawaPairSpec) -> (Params, TestIntegrand) {
    let params = Params {
        a: 0.25 * spec.eta1 * spec.eta1,
        b: 0.25 * spec.eta2 * spec.eta2,
        c: spec.x2 * spec.x2,
        ..Params::with_triple(4, 4, 0)
    };
    let f = TestIntegrand {
        coeff: SQRT_PI,
        mu: 1.5,
        sigma: 0.0,
    };
    (params, f)
}

/// The same overlap written at (1,1,3) with f = √π·t⁰.
pub fn yukawa_instance_alternate(spec: &YukawaPairSpec) -> (Params, TestIntegrand) {
    let (params, f) = yukawa_instance(spec);
    (
        Params {
            n: 1,
            m: 1,
            nu: 3,
            ..params
        },
        TestIntegrand { mu: 0.0, ..f },
    )
}

/// Reduces an instance through the catalog, shifting or mirroring as needed.
pub fn reduce_instance(params: &Params, f: &TestIntegrand, tol: &Tolerance) -> Result<QuadResult> {
    let found = normalize(params, f).ok_or_else(|| Error::NotApplicable {
        rule: "catalog".into(),
        predicate: format!("no trusted rule for {}", params.triple()),
    })?;
    reduce_to_1d(found.rule, &found.params, &found.f, tol)
}

/// [`yukawa_pair`] through the reduction catalog.
pub fn yukawa_pair_reduced(spec: &YukawaPairSpec, tol: &Tolerance) -> Result<QuadResult> {
    let (params, f) = yukawa_instance(spec);
    reduce_instance(&params, &f, tol)
}

/// [`yukawa_pair`] by direct quadrature of the 2D representation.
pub fn yukawa_pair_oracle(spec: &YukawaPairSpec, tol: &Tolerance) -> Result<QuadResult> {
    let (params, f) = yukawa_instance(spec);
    direct_2d(&params, &f, tol)
}

/// The R₂ instance for the Fourier transform of the Yukawa pair.
pub fn fourier_instance(spec: &FourierSpec) -> (Params, TestIntegrand) {
    let (params, f) = yukawa_instance(&spec.pair());
    let params = Params {
        h: Complex64::new(0.0, spec.k_dot_x2),
        j: 0.25 * spec.k * spec.k,
        ..params
    };
    (params, f)
}

/// S₁(k) through the erfi-difference kernel. Falls back to
/// [`fourier_pair_tau`] when k < 1e-3·max(η₁, η₂), where the kernel's two
/// terms become large and nearly equal.
pub fn fourier_pair_erfi(spec: &FourierSpec, tol: &Tolerance) -> Result<QuadResult> {
    if spec.k < SMALL_K * spec.eta1.max(spec.eta2) {
        return fourier_pair_tau(spec, tol);
    }
    let (params, f) = fourier_instance(spec);
    let rule = find_rule("R1-erfi")?;
    reduce_to_1d(rule, &params, &f, tol)
}

fn tau_length(spec: &FourierSpec, tau: f64, one_minus_tau: f64) -> f64 {
    (one_minus_tau * (spec.k * spec.k * tau + spec.eta2 * spec.eta2) + spec.eta1 * spec.eta1 * tau).sqrt()
}

/// S₁(k) as 2π∫₀¹ e^{−ik·x₂τ} e^{−x₂L}/L dτ with
/// L² = (1−τ)(k²τ+η₂²) + η₁²τ.
pub fn fourier_pair_tau(spec: &FourierSpec, tol: &Tolerance) -> Result<QuadResult> {
    let s = *spec;
    let mut r = try_integrate_interval_endpoints(
        |node| {
            let l = tau_length(&s, node.x, node.hi_dist);
            let phase = Complex64::new(-s.x2 * l, -s.k_dot_x2 * node.x);
            Ok(phase.exp() / l)
        },
        0.0,
        1.0,
        tol,
    )?;
    r.value *= 2.0 * PI;
    r.abs_error_estimate *= 2.0 * PI;
    Ok(r)
}

/// −∂/∂η₂ of [`fourier_pair_tau`], differentiated under the integral.
pub fn fourier_pair_tau_d_eta2(spec: &FourierSpec, tol: &Tolerance) -> Result<QuadResult> {
    let s = *spec;
    let mut r = try_integrate_interval_endpoints(
        |node| {
            let l = tau_length(&s, node.x, node.hi_dist);
            let phase = Complex64::new(-s.x2 * l, -s.k_dot_x2 * node.x);
            Ok(phase.exp() * ((s.x2 * l + 1.0) * node.hi_dist * s.eta2 / (l * l * l)))
        },
        0.0,
        1.0,
        tol,
    )?;
    r.value *= 2.0 * PI;
    r.abs_error_estimate *= 2.0 * PI;
    Ok(r)
}

/// Overlap of a 1s orbital (η₁ = 1) with a 2s-like function obtained as
/// −∂/∂η₂ at η₂ = 1/2, in momentum space at k = k_f/2:
/// η₁^{3/2}η₂^{3/2}/π · (−∂S₁/∂η₂).
pub fn cheshire_overlap(k_f: f64, k_dot_x2: f64, x2: f64, tol: &Tolerance) -> Result<QuadResult> {
    let (eta1, eta2) = (1.0, 0.5);
    let spec = FourierSpec::new(0.5 * k_f, k_dot_x2, eta1, eta2, x2)?;
    let mut r = fourier_pair_tau_d_eta2(&spec, tol)?;
    let scale = (eta1 * eta2).powf(1.5) / PI;
    r.value *= scale;
    r.abs_error_estimate *= scale;
    Ok(r)
}

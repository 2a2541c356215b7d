//! Special functions used by the reduction kernels.

mod bessel;
mod faddeeva;
mod gamma;
mod kummer;

pub use bessel::{bessel_i, bessel_i_half, bessel_k, bessel_k_scaled};
pub use faddeeva::{erf, erf_complex, erfc, erfcx, erfi, faddeeva, faddeeva_scaled};
pub use gamma::{gamma, pochhammer, rgamma};
pub use kummer::{
    kummer_1f1, kummer_1f1_real, kummer_1f1_scaled, kummer_via_bessel, kummer_via_bessel_auto,
    kummer_via_bessel_minus, kummer_via_bessel_plus, kummer_via_laguerre, laguerre_gen,
};

pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex division that reports a zero divisor instead of producing NaN.
pub fn checked_div(num: Complex64, den: Complex64) -> Result<Complex64> {
    if den.re == 0.0 && den.im == 0.0 {
        Err(Error::DivisionByZero)
    } else {
        Ok(num / den)
    }
}

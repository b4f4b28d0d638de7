//! Principal-branch log-Gamma via the g=7, 9-coefficient Lanczos approximation.
//! Arguments left of Re z = 1/2 are shifted up with the recurrence, which keeps
//! the principal branch on the cut plane.

use crate::error::{Error, Result};
use crate::types::{c64, C64};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn gamma_ln_right(z: C64) -> C64 {
    // Re z >= 0.5
    let zm1 = z - 1.0;
    let mut acc = c64(LANCZOS[0], 0.0);
    for (i, &ci) in LANCZOS.iter().enumerate().skip(1) {
        acc += ci / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// Principal branch of log Gamma(z). Pole arguments (z a non-positive integer
/// to tolerance 1e-14) are rejected.
pub fn gamma_ln(z: C64) -> Result<C64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NonFinite("gamma_ln"));
    }
    if z.im.abs() < 1e-14 && z.re <= 1e-14 && (z.re - z.re.round()).abs() < 1e-14 {
        return Err(Error::PoleOfGamma(format!("{z}")));
    }
    if z.re >= 0.5 {
        return Ok(gamma_ln_right(z));
    }
    let n = (0.5 - z.re).ceil() as usize;
    let mut corr = c64(0.0, 0.0);
    let mut w = z;
    for _ in 0..n {
        corr += w.ln();
        w += 1.0;
    }
    Ok(gamma_ln_right(w) - corr)
}

/// Gamma(z) itself; fine for the moderate arguments used here.
pub fn gamma(z: C64) -> Result<C64> {
    Ok(gamma_ln(z)?.exp())
}

/// 1/Gamma(z): entire; returns 0 at the poles of Gamma.
pub fn gamma_recip(z: C64) -> C64 {
    match gamma_ln(z) {
        Ok(lg) => (-lg).exp(),
        Err(_) => c64(0.0, 0.0),
    }
}

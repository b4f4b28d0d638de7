//! Associated Legendre functions through their hypergeometric representations:
//! the second kind Q^mu_nu on (1, inf) in the real (Hobson) normalization, the
//! first kind P^mu_nu on (1, inf), and the Ferrers function of the first kind
//! on (-1, 1). Degrees are complex, orders integer (which is all the model
//! geometry produces).

use super::gamma::gamma_ln;
use super::hyp2f1::hyp2f1;
use crate::error::{Error, Result};
use crate::types::{c64, C64};

/// Q^mu_nu(x) on x > 1, real normalization (Q_0(x) = artanh(1/x)):
///   sqrt(pi) Gamma(nu+mu+1) (x^2-1)^{mu/2}
///   / (2^{nu+1} Gamma(nu+3/2) x^{nu+mu+1}) * F((nu+mu+2)/2, (nu+mu+1)/2; nu+3/2; x^{-2})
pub fn legendre_q(nu: C64, mu: i32, x: f64) -> Result<C64> {
    if x <= 1.0 {
        return Err(Error::DomainError(format!("legendre_q needs x > 1, got {x}")));
    }
    let muc = c64(mu as f64, 0.0);
    let num = gamma_ln(nu + muc + 1.0)
        .map_err(|_| Error::DegeneracyError(format!("Gamma(nu+mu+1) pole at nu={nu}, mu={mu}")))?;
    let den = gamma_ln(nu + 1.5)
        .map_err(|_| Error::DegeneracyError(format!("Gamma(nu+3/2) pole at nu={nu}")))?;
    let xc = c64(x, 0.0);
    let pref = (0.5 * std::f64::consts::PI.ln() + num - den
        - (nu + 1.0) * (2.0f64).ln()
        - (nu + muc + 1.0) * xc.ln())
        .exp()
        * c64(x * x - 1.0, 0.0).powc(0.5 * muc);
    let f = hyp2f1(
        0.5 * (nu + muc + 2.0),
        0.5 * (nu + muc + 1.0),
        nu + 1.5,
        c64(1.0 / (x * x), 0.0),
    )?;
    Ok(pref * f)
}

/// P^mu_nu(x) on x > 1:
///   ((x+1)/(x-1))^{mu/2} / Gamma(1-mu) * F(-nu, nu+1; 1-mu; (1-x)/2)
/// For positive integer order the 1/Gamma pole is resolved by lowering with
/// the standard shift P^{m} = (connection through negative order).
pub fn legendre_p_x(nu: C64, mu: i32, x: f64) -> Result<C64> {
    if x <= 1.0 {
        return Err(Error::DomainError(format!("legendre_p_x needs x > 1, got {x}")));
    }
    if mu > 0 {
        // P^{m}_nu = Gamma(nu+m+1)/Gamma(nu-m+1) * P^{-m}_nu  (integer order)
        let m = c64(mu as f64, 0.0);
        let ratio = (gamma_ln(nu + m + 1.0)? - gamma_ln(nu - m + 1.0)?).exp();
        return Ok(ratio * legendre_p_x(nu, -mu, x)?);
    }
    let muc = c64(mu as f64, 0.0);
    let pref = c64((x + 1.0) / (x - 1.0), 0.0).powc(0.5 * muc)
        / (gamma_ln(1.0 - muc)?).exp();
    let f = hyp2f1(-nu, nu + 1.0, 1.0 - muc, c64(0.5 * (1.0 - x), 0.0))?;
    Ok(pref * f)
}

/// Ferrers function of the first kind on -1 < x < 1 with complex order:
///   ((1+x)/(1-x))^{mu/2} / Gamma(1-mu) * F(-nu, nu+1; 1-mu; (1-x)/2)
pub fn ferrers_p(nu: C64, mu: C64, x: f64) -> Result<C64> {
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::DomainError(format!("ferrers_p needs -1 < x < 1, got {x}")));
    }
    let pref = c64((1.0 + x) / (1.0 - x), 0.0).powc(0.5 * mu) / (gamma_ln(1.0 - mu)?).exp();
    let f = hyp2f1(-nu, nu + 1.0, 1.0 - mu, c64(0.5 * (1.0 - x), 0.0))?;
    Ok(pref * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::I;

    #[test]
    fn q_closed_forms() {
        // Q_0(x) = (1/2) ln((x+1)/(x-1))
        let q0 = legendre_q(c64(0.0, 0.0), 0, 2.0).unwrap();
        assert!((q0 - c64(0.5 * 3.0f64.ln(), 0.0)).norm() < 1e-13, "{q0}");
        // Q_1(x) = (x/2) ln((x+1)/(x-1)) - 1
        let q1 = legendre_q(c64(1.0, 0.0), 0, 2.0).unwrap();
        assert!((q1 - c64(3.0f64.ln() - 1.0, 0.0)).norm() < 1e-13, "{q1}");
    }

    #[test]
    fn q_frozen_complex_degree() {
        // reference from a 40-digit evaluation of the same normalization
        let q = legendre_q(c64(-0.5, 1.3), 2, 1.8).unwrap();
        let reference = c64(2.5430283621937480227, -1.3431309152527694098);
        assert!((q - reference).norm() < 5e-12 * reference.norm(), "{q}");
    }

    #[test]
    fn q_domain_error() {
        assert!(legendre_q(c64(0.0, 0.0), 0, 0.9).is_err());
    }

    #[test]
    fn q_degenerate_prefactor() {
        // nu + mu + 1 = 0 => Gamma pole
        assert!(matches!(
            legendre_q(c64(-3.0, 0.0), 2, 1.5),
            Err(Error::DegeneracyError(_))
        ));
    }

    /// The Legendre ODE residual with exact derivatives from the degree
    /// recurrence (1-x^2) w' = (mu-nu-1) w_{nu+1} + (nu+1) x w_nu, which holds
    /// for both kinds on (1, inf). Uses only function values at nu, nu+1, nu+2.
    fn ode_residual_exact(nu: C64, mu: i32, x: f64, f: impl Fn(C64, f64) -> C64) -> f64 {
        let muc = c64(mu as f64, 0.0);
        let omx2 = 1.0 - x * x;
        let w0 = f(nu, x);
        let w1 = f(nu + 1.0, x);
        let w2 = f(nu + 2.0, x);
        let d0 = ((muc - nu - 1.0) * w1 + (nu + 1.0) * x * w0) / omx2;
        let d1 = ((muc - nu - 2.0) * w2 + (nu + 2.0) * x * w1) / omx2;
        // (1-x^2) w'' - 2x w' = (mu-nu-1) w1' + (nu+1)(w0 + x w0')
        let res = (muc - nu - 1.0) * d1 + (nu + 1.0) * (w0 + x * d0)
            + (nu * (nu + 1.0) - muc * muc / omx2) * w0;
        res.norm() / w0.norm().max(1.0)
    }

    #[test]
    fn derivative_recurrence_sanity() {
        // check the recurrence against central differences at a benign point
        let nu = c64(-0.5, 1.3);
        let x = 2.5;
        let h = 1e-5;
        let fd = (legendre_q(nu, 2, x + h).unwrap() - legendre_q(nu, 2, x - h).unwrap()) / (2.0 * h);
        let muc = c64(2.0, 0.0);
        let rec = ((muc - nu - 1.0) * legendre_q(nu + 1.0, 2, x).unwrap()
            + (nu + 1.0) * x * legendre_q(nu, 2, x).unwrap())
            / (1.0 - x * x);
        assert!((fd - rec).norm() < 1e-8 * rec.norm().max(1.0), "{fd} vs {rec}");
    }

    #[test]
    fn q_satisfies_ode() {
        let nu = c64(-0.5, 1.3);
        for &x in &[1.1, 1.6, 2.4, 3.7, 5.0] {
            let r = ode_residual_exact(nu, 2, x, |n, t| legendre_q(n, 2, t).unwrap());
            assert!(r < 1e-8, "x={x}: residual {r}");
        }
    }

    #[test]
    fn p_satisfies_ode_and_is_regular() {
        let nu = -0.5 * c64(1.0, 0.0) + I * 1.1;
        for &x in &[1.05, 1.5, 3.0] {
            let r = ode_residual_exact(nu, -1, x, |n, t| legendre_p_x(n, -1, t).unwrap());
            assert!(r < 1e-8, "x={x}: residual {r}");
        }
        // near x = 1, P^{-k} ~ ((x-1)/2)^{k/2}/k! -> 0
        let p = legendre_p_x(nu, -2, 1.0 + 1e-6).unwrap();
        assert!(p.norm() < 1e-6);
    }

    #[test]
    fn ferrers_satisfies_ode() {
        let nu = c64(1.5, 0.0); // k = 2 belt degree
        let mu = I * 1.3;
        let h = 1e-3;
        for &x in &[-0.7, -0.2, 0.3, 0.8] {
            let f = |t: f64| ferrers_p(nu, mu, t).unwrap();
            let um2 = f(x - 2.0 * h);
            let um1 = f(x - h);
            let u0 = f(x);
            let up1 = f(x + h);
            let up2 = f(x + 2.0 * h);
            let d1 = (um2 - 8.0 * um1 + 8.0 * up1 - up2) / (12.0 * h);
            let d2 = (-um2 + 16.0 * um1 - 30.0 * u0 + 16.0 * up1 - up2) / (12.0 * h * h);
            let res = (1.0 - x * x) * d2 - 2.0 * x * d1
                + (nu * (nu + 1.0) - mu * mu / (1.0 - x * x)) * u0;
            assert!(res.norm() / u0.norm().max(1.0) < 1e-7, "x={x}");
        }
    }
}

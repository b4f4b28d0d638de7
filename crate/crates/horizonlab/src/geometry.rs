//! Exact model spaces at d = 2 and the per-mode coefficient assembly of the
//! spectral-parameter family P_k(sigma) on the boundary sphere.
//!
//! The model family of boundary metrics, in the even coordinate v, is
//!   g = dv^2 / (4 v^2 (1-v^2)) + (f(v)/v) dphi^2
//! on each region (Riemannian on the caps v > 0, Lorentzian on the belt
//! v < 0), with angular warp f; the exact model is f(v) = (1-v)/2. The mode
//! operator is obtained by conjugating the regional Laplace/wave operators
//! (with spectral mass sigma^2 + 1/4) by x^{i sigma + 1/2}, x = sqrt(|v|),
//! and dividing by x^{i sigma + 5/2}. Both regional routes extend to the
//! single analytic coefficient family hard-coded below.

use crate::error::{Error, Result};
use crate::series::PSeries;
use crate::types::{c64, C64, ModeIndex, SigmaParam, I};

/// Angular warp profile f(v). Admissible profiles are positive on (-1,1),
/// close the caps smoothly (f(1) = 0, f'(1) = -1/2) and keep the equator
/// nondegenerate (f(-1) > 0).
#[derive(Debug, Clone, PartialEq)]
pub enum MetricProfile {
    Exact,
    Poly(Vec<f64>),
}

impl MetricProfile {
    pub fn f(&self, v: f64) -> f64 {
        match self {
            MetricProfile::Exact => 0.5 * (1.0 - v),
            MetricProfile::Poly(c) => c.iter().rev().fold(0.0, |acc, &a| acc * v + a),
        }
    }

    pub fn fprime(&self, v: f64) -> f64 {
        match self {
            MetricProfile::Exact => -0.5,
            MetricProfile::Poly(c) => {
                let mut acc = 0.0;
                for (i, &a) in c.iter().enumerate().skip(1).rev() {
                    acc = acc * v + i as f64 * a;
                }
                acc
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = 401;
        for j in 1..n {
            let v = -1.0 + 2.0 * j as f64 / n as f64;
            if self.f(v) <= 0.0 {
                return Err(Error::InvalidProfile(format!("f({v}) = {} <= 0", self.f(v))));
            }
        }
        if self.f(1.0).abs() > 1e-12 {
            return Err(Error::InvalidProfile(format!("f(1) = {} != 0", self.f(1.0))));
        }
        if (self.fprime(1.0) + 0.5).abs() > 1e-12 {
            return Err(Error::InvalidProfile(format!(
                "f'(1) = {} != -1/2 (conic pole)",
                self.fprime(1.0)
            )));
        }
        if self.f(-1.0) <= 0.0 {
            return Err(Error::InvalidProfile("f(-1) <= 0 (degenerate equator)".into()));
        }
        Ok(())
    }

    /// Taylor coefficients of f at v = 0, length `n`.
    fn series_at_zero(&self, n: usize) -> PSeries {
        match self {
            MetricProfile::Exact => PSeries::from_poly(&[0.5, -0.5], n),
            MetricProfile::Poly(c) => PSeries::from_poly(c, n),
        }
    }

    /// Coefficients of f as a polynomial in w, where v = 1 - 2w.
    fn series_in_w(&self, n: usize) -> PSeries {
        match self {
            MetricProfile::Exact => PSeries::from_poly(&[0.0, 1.0], n),
            MetricProfile::Poly(c) => {
                // substitute v = 1 - 2w by Horner in the polynomial ring
                let mut acc = PSeries::zero(n);
                let vpoly = PSeries::from_poly(&[1.0, -2.0], n);
                for &a in c.iter().rev() {
                    acc = acc.mul(&vpoly);
                    acc.c[0] += c64(a, 0.0);
                }
                acc
            }
        }
    }
}

/// Frobenius input data for an expansion point: the ODE is
///   z A(z) u'' + B(z) u' + (C(z)/z) u = 0
/// with A, B, C analytic at z = 0 and indicial polynomial
///   p(s) = A0 s(s-1) + B0 s + C0.
#[derive(Debug, Clone)]
pub struct SingularPointData {
    pub a: PSeries,
    pub b: PSeries,
    pub c: PSeries,
}

/// The per-mode coefficient functions of P_k(sigma) in the three
/// representations used downstream: v-form (for horizon expansions), w-form
/// at the sphere poles, and theta-form for numerical integration.
#[derive(Debug, Clone)]
pub struct ModeCoefficients {
    pub sp: SigmaParam,
    pub k: ModeIndex,
    pub profile: MetricProfile,
}

impl ModeCoefficients {
    pub fn c2(&self, v: f64) -> C64 {
        c64(4.0 * v * (1.0 - v * v), 0.0)
    }

    pub fn c1(&self, v: f64) -> C64 {
        let s = self.sp.sigma;
        let q = self.profile.fprime(v) / self.profile.f(v);
        4.0 * I * s * (1.0 - v * v) + 4.0 * (1.0 - 2.0 * v * v) + 2.0 * v * (1.0 - v * v) * q
    }

    pub fn c0(&self, v: f64) -> C64 {
        let s = self.sp.sigma;
        let k2 = (self.k.0 * self.k.0) as f64;
        let f = self.profile.f(v);
        let q = self.profile.fprime(v) / f;
        let e = (1.0 - v * v) * q;
        s * s * v - I * s * (2.0 * v - e) - 0.75 * v + 0.5 * e - k2 / f
    }

    /// theta-form leading coefficient: a(theta) = cos 2 theta.
    pub fn a_theta(&self, theta: f64) -> C64 {
        c64((2.0 * theta).cos(), 0.0)
    }

    /// theta-form drift, smooth through the equator:
    /// b(theta) = -sin(2 theta) (2 i sigma + 2 + v f'/f).
    pub fn b_theta(&self, theta: f64) -> C64 {
        let v = (2.0 * theta).cos();
        let q = self.profile.fprime(v) / self.profile.f(v);
        -(2.0 * theta).sin() * (2.0 * I * self.sp.sigma + 2.0 + v * q)
    }

    pub fn c_theta(&self, theta: f64) -> C64 {
        self.c0((2.0 * theta).cos())
    }

    /// Apply the operator in theta form given (u, u', u'') at theta.
    pub fn apply_theta(&self, theta: f64, u: C64, du: C64, ddu: C64) -> C64 {
        self.a_theta(theta) * ddu + self.b_theta(theta) * du + self.c_theta(theta) * u
    }

    /// Frobenius data at a horizon (expansion variable v).
    pub fn horizon_data(&self, order: usize) -> SingularPointData {
        let n = order + 4;
        let s = self.sp.sigma;
        let k2 = c64((self.k.0 * self.k.0) as f64, 0.0);
        let fser = self.profile.series_at_zero(n);
        let fp = fser.derivative();
        let v = PSeries::x(n);
        let one = PSeries::constant(c64(1.0, 0.0), n);
        let v2 = v.mul(&v);
        let omv2 = one.sub(&v2); // 1 - v^2
        let q = fp.div(&fser); // f'/f
        // A = c2 / v = 4 (1 - v^2)
        let a = omv2.scale(c64(4.0, 0.0));
        // B = c1
        let b = omv2
            .scale(4.0 * I * s)
            .add(&one.sub(&v2.scale(c64(2.0, 0.0))).scale(c64(4.0, 0.0)))
            .add(&v.mul(&omv2).mul(&q).scale(c64(2.0, 0.0)));
        // C = v * c0
        let e = omv2.mul(&q);
        let c0 = v
            .scale(s * s)
            .sub(&v.scale(c64(2.0, 0.0)).sub(&e).scale(I * s))
            .sub(&v.scale(c64(0.75, 0.0)))
            .add(&e.scale(c64(0.5, 0.0)))
            .sub(&one.div(&fser).scale(k2));
        let c = c0.shift_up();
        SingularPointData { a, b, c }
    }

    /// Frobenius data at a sphere pole (expansion variable w = (1-v)/2,
    /// the same for both poles since the coefficients depend on v only).
    pub fn pole_data(&self, order: usize) -> SingularPointData {
        let n = order + 4;
        let s = self.sp.sigma;
        let k2 = c64((self.k.0 * self.k.0) as f64, 0.0);
        let w = PSeries::x(n);
        let one = PSeries::constant(c64(1.0, 0.0), n);
        let v = one.sub(&w.scale(c64(2.0, 0.0))); // v = 1 - 2w
        let fw = self.profile.series_in_w(n); // f as series in w, = w * fhat
        let fhat = fw.shift_down();
        let fpw = fw.derivative().scale(c64(-0.5, 0.0)); // df/dv as w-series
        // E = (1 - v^2) f'/f = 4 (1 - w) f'_w / fhat
        let omw = one.sub(&w);
        let e = omw.mul(&fpw).div(&fhat).scale(c64(4.0, 0.0));
        // A_w: a_w = c2/4 = v(1-v^2) = 4 w (1-w)(1-2w); divided by w:
        let a = omw.mul(&v).scale(c64(4.0, 0.0));
        // B_w = -c1/2 with c1 assembled in w
        let omv2 = w.mul(&omw).scale(c64(4.0, 0.0)); // 1 - v^2 = 4w(1-w)
        let v2 = v.mul(&v);
        let c1w = omv2
            .scale(4.0 * I * s)
            .add(&one.sub(&v2.scale(c64(2.0, 0.0))).scale(c64(4.0, 0.0)))
            .add(&v.mul(&e).scale(c64(2.0, 0.0)));
        let b = c1w.scale(c64(-0.5, 0.0));
        // C_w = w * c0(v(w)) = w * (regular part) - k^2 / fhat
        let reg = v
            .scale(s * s)
            .sub(&v.scale(c64(2.0, 0.0)).sub(&e).scale(I * s))
            .sub(&v.scale(c64(0.75, 0.0)))
            .add(&e.scale(c64(0.5, 0.0)));
        let c = reg.shift_up().sub(&one.div(&fhat).scale(k2));
        SingularPointData { a, b, c }
    }

    /// Independent regional assembly at a sample v: conjugate the intrinsic
    /// cap/belt operator through its proper coordinate and read off
    /// (c2, c1, c0) by applying it to 1, (v - v0), (v - v0)^2. Returns the
    /// maximum relative deviation from the closed-form family.
    pub fn regional_deviation(&self, v0: f64) -> f64 {
        let got = if v0 > 0.0 {
            self.assemble_cap_side(v0)
        } else {
            self.assemble_belt_side(v0)
        };
        let want = [self.c2(v0), self.c1(v0), self.c0(v0)];
        let scale = want.iter().map(|z| z.norm()).fold(1.0, f64::max);
        got.iter()
            .zip(want.iter())
            .map(|(g, w)| (g - w).norm())
            .fold(0.0, f64::max)
            / scale
    }

    /// Cap-side route: v = sech(2s), metric ds^2 + C(s) dphi^2 with
    /// C = f(v)/v; operator Delta_k + sigma^2 + 1/4 conjugated by
    /// x^{i sigma + 1/2}, x^2 = v.
    fn assemble_cap_side(&self, v0: f64) -> [C64; 3] {
        let s0 = 0.5 * (1.0 / v0).acosh();
        let s = self.sp.sigma;
        let k2 = (self.k.0 * self.k.0) as f64;
        // jets of v(s): vdot = -2 v tanh 2s, vddot = -2 vdot tanh 2s - 4 v sech^2 2s
        let th = (2.0 * s0).tanh();
        let v = v0;
        let vd = -2.0 * v * th;
        let vdd = -2.0 * vd * th - 4.0 * v * (v * v); // sech^2 2s = v^2
        // weight phi(s) = v^{p}, p = (i sigma + 1/2)/2 ; phi'/phi = p vd/v
        let p = (I * s + 0.5) * 0.5;
        let lphi1 = p * (vd / v);
        let lphi2 = p * (vdd / v - (vd / v) * (vd / v)) + lphi1 * lphi1;
        // C(s) = f(v)/v; C'/(2C) = (f'/f - 1/v) vd / 2
        let f = self.profile.f(v);
        let fp = self.profile.fprime(v);
        let drift = 0.5 * (fp / f - 1.0 / v) * vd;
        let mass = s * s + 0.25;
        let cang = f / v;
        // apply L = d^2/ds^2 + drift d/ds - k^2/C + mass to phi * p_j(v(s)),
        // then multiply by v^{-p-1} (the x^{i tsig - 2} weight over x^{-i tsig}).
        let mut out = [c64(0.0, 0.0); 3];
        for (j, slot) in out.iter_mut().enumerate() {
            // p_j(v) = (v - v0)^j : values/derivatives in v at v0
            let (pj, pjp, pjpp) = match j {
                0 => (1.0, 0.0, 0.0),
                1 => (0.0, 1.0, 0.0),
                _ => (0.0, 0.0, 2.0),
            };
            // d/ds of p_j(v(s)):
            let pd = pjp * vd;
            let pdd = pjpp * vd * vd + pjp * vdd;
            // u = phi * p ; u'' + drift u' + (mass - k^2/C) u, all over phi:
            let val = (lphi2 * pj + 2.0 * lphi1 * pd + pdd)
                + drift * (lphi1 * pj + pd)
                + (mass - k2 / cang) * pj;
            *slot = val / v;
        }
        [0.5 * out[2], out[1], out[0]]
    }

    /// Belt-side route: v = -sech(2t); metric dt^2 - C dphi^2 with
    /// C = -f(v)/v; operator -(Box_k + sigma^2 + 1/4) conjugated the same way.
    fn assemble_belt_side(&self, v0: f64) -> [C64; 3] {
        let t0 = 0.5 * (-1.0 / v0).acosh();
        let s = self.sp.sigma;
        let k2 = (self.k.0 * self.k.0) as f64;
        let th = (2.0 * t0).tanh();
        let v = v0;
        let vd = -2.0 * v * th;
        let vdd = -2.0 * vd * th - 4.0 * v * (v * v);
        let p = (I * s + 0.5) * 0.5;
        let av = -v; // |v|
        let lphi1 = p * (vd / v);
        let lphi2 = p * (vdd / v - (vd / v) * (vd / v)) + lphi1 * lphi1;
        let f = self.profile.f(v);
        let fp = self.profile.fprime(v);
        let cang = -f / v;
        let drift = 0.5 * (fp / f - 1.0 / v) * vd; // C'/2C, same expression
        let mass = s * s + 0.25;
        let mut out = [c64(0.0, 0.0); 3];
        for (j, slot) in out.iter_mut().enumerate() {
            let (pj, pjp, pjpp) = match j {
                0 => (1.0, 0.0, 0.0),
                1 => (0.0, 1.0, 0.0),
                _ => (0.0, 0.0, 2.0),
            };
            let pd = pjp * vd;
            let pdd = pjpp * vd * vd + pjp * vdd;
            // Box_k u = u'' + drift u' + (k^2/C) u  (Lorentzian, angular sign flip)
            let val = (lphi2 * pj + 2.0 * lphi1 * pd + pdd)
                + drift * (lphi1 * pj + pd)
                + (k2 / cang + mass) * pj;
            *slot = -val / av;
        }
        [0.5 * out[2], out[1], out[0]]
    }
}

/// Assemble the per-mode coefficients, verifying that the two one-sided
/// regional routes agree with the single analytic family near v = 0.
pub fn mode_coefficients(
    sp: SigmaParam,
    k: ModeIndex,
    profile: &MetricProfile,
) -> Result<ModeCoefficients> {
    profile.validate()?;
    let mc = ModeCoefficients { sp, k, profile: profile.clone() };
    let mut worst: f64 = 0.0;
    for &v in &[-0.2, -0.12, -0.05, -0.02, 0.02, 0.05, 0.12, 0.2] {
        worst = worst.max(mc.regional_deviation(v));
    }
    if worst > 1e-10 {
        return Err(Error::SmoothnessMismatch(worst));
    }
    Ok(mc)
}

/// Indicial roots of the horizon expansion, exactly {0, -i*sigma} when the
/// assembly invariants hold.
pub fn horizon_indicial_roots(mc: &ModeCoefficients) -> (C64, C64) {
    let data = mc.horizon_data(4);
    let a0 = data.a.c[0];
    let b0 = data.b.c[0];
    // p(s) = a0 s(s-1) + b0 s  (c0 term vanishes at a horizon)
    let s2 = (a0 - b0) / a0;
    (c64(0.0, 0.0), s2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp13() -> SigmaParam {
        SigmaParam::real(1.3)
    }

    #[test]
    fn exact_profile_valid() {
        MetricProfile::Exact.validate().unwrap();
    }

    fn warped() -> MetricProfile {
        // f = (1-v)/2 + eps (1-v)^2 (1 + v/3):
        // expand: (1-v)^2 (1+v/3) = 1 - 5v/3 + v^2/3 + v^3/3 ... compute exactly below
        let eps = 0.05;
        // (1-v)^2 = 1 - 2v + v^2 ; times (1 + v/3):
        // 1 + v/3 - 2v - 2v^2/3 + v^2 + v^3/3 = 1 - 5v/3 + v^2/3 + v^3/3
        let base = [0.5, -0.5, 0.0, 0.0];
        let pert = [1.0, -5.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0];
        let c: Vec<f64> = base.iter().zip(pert.iter()).map(|(b, p)| b + eps * p).collect();
        MetricProfile::Poly(c)
    }

    #[test]
    fn warped_profile_valid() {
        warped().validate().unwrap();
    }

    #[test]
    fn bad_profiles_rejected() {
        assert!(MetricProfile::Poly(vec![1.0]).validate().is_err()); // f(1) != 0
        assert!(MetricProfile::Poly(vec![0.5, -0.5, 0.1]).validate().is_err()); // f'(1)
    }

    #[test]
    fn normal_form_values() {
        let mc = mode_coefficients(sp13(), ModeIndex(2), &MetricProfile::Exact).unwrap();
        // c2(0) = 0, c2'(0) = 4
        assert!(mc.c2(0.0).norm() < 1e-15);
        let d = (mc.c2(1e-7) - mc.c2(-1e-7)) / 2e-7;
        assert!((d - c64(4.0, 0.0)).norm() < 1e-6);
        // c1(0) = 4 (i sigma + 1)
        assert!((mc.c1(0.0) - 4.0 * (I * c64(1.3, 0.0) + 1.0)).norm() < 1e-13);
    }

    #[test]
    fn indicial_roots_exact() {
        for &k in &[0, 1, 3] {
            let mc = mode_coefficients(sp13(), ModeIndex(k), &MetricProfile::Exact).unwrap();
            let (s1, s2) = horizon_indicial_roots(&mc);
            assert!(s1.norm() < 1e-14);
            assert!((s2 + I * c64(1.3, 0.0)).norm() < 1e-12, "s2 = {s2}");
        }
    }

    #[test]
    fn frozen_c0_table() {
        // frozen from an independent symbolic expansion of the regional
        // conjugation identities (sigma = 1.3, k = 2, exact model)
        let mc = mode_coefficients(sp13(), ModeIndex(2), &MetricProfile::Exact).unwrap();
        let table = [
            (-0.85, c64(-5.19832432432432432, 2.015)),
            (-0.6, c64(-5.764, 1.04)),
            (-0.35, c64(-6.57992592592592593, 0.065)),
            (-0.12, c64(-7.69565714285714286, -0.832)),
            (0.12, c64(-9.53810909090909091, -1.768)),
            (0.35, c64(-12.6536923076923077, -2.665)),
            (0.6, c64(-20.236, -3.64)),
            (0.85, c64(-53.4593333333333333, -4.615)),
        ];
        for (v, want) in table {
            let got = mc.c0(v);
            assert!((got - want).norm() < 1e-10 * want.norm(), "v={v}: {got} vs {want}");
        }
    }

    #[test]
    fn regional_routes_agree_warped() {
        let mc = mode_coefficients(sp13(), ModeIndex(3), &warped()).unwrap();
        for &v in &[-0.18, -0.07, 0.07, 0.18] {
            assert!(mc.regional_deviation(v) < 1e-10, "v={v}");
        }
    }

    #[test]
    fn reflection_symmetry_k0() {
        // theta -> pi - theta maps onto the same v; the theta-form
        // coefficients must agree on mirrored samples.
        let mc = mode_coefficients(sp13(), ModeIndex(0), &MetricProfile::Exact).unwrap();
        for &th in &[0.4, 0.9, 1.3] {
            let m = std::f64::consts::PI - th;
            assert!((mc.a_theta(th) - mc.a_theta(m)).norm() < 1e-12);
            assert!((mc.b_theta(th) + mc.b_theta(m)).norm() < 1e-12); // odd
            assert!((mc.c_theta(th) - mc.c_theta(m)).norm() < 1e-12);
        }
    }

    #[test]
    fn pole_indicial_is_half_k() {
        let mc = mode_coefficients(sp13(), ModeIndex(3), &MetricProfile::Exact).unwrap();
        let d = mc.pole_data(8);
        // p(s) = A0 s(s-1) + B0 s + C0 = 4 s^2 - k^2
        let a0 = d.a.c[0];
        let b0 = d.b.c[0];
        let c0 = d.c.c[0];
        assert!((a0 - c64(4.0, 0.0)).norm() < 1e-13);
        assert!((b0 - c64(4.0, 0.0)).norm() < 1e-13);
        assert!((c0 - c64(-9.0, 0.0)).norm() < 1e-13);
    }
}

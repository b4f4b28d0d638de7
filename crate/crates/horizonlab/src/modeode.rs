//! Regular-singular machinery for the mode ODE on [0, pi]: Frobenius
//! expansions at the horizons (v = 0) and sphere poles (w = sin^2 theta = 0),
//! adaptive integration across the regular interior, branch transmission
//! across v = 0, and the global 6x6 connection system.

use crate::cheb::{cc_nodes, ChebFn};
use crate::error::{Error, Result};
use crate::geometry::{ModeCoefficients, SingularPointData};
use crate::linalg::{CMatrix, Lu};
use crate::types::{c64, Branch, C64, I};

/// Standoff from each horizon, measured in v.
pub const STANDOFF_V: f64 = 1e-2;
/// Standoff from the sphere poles, measured in 1 - v.
pub const STANDOFF_POLE: f64 = 1e-2;
/// Frobenius truncation order.
pub const FROBENIUS_ORDER: usize = 30;

/// Truncated Frobenius solution z^s (a_0 + a_1 z + ... + a_J z^J) of
///   z A(z) u'' + B(z) u' + (C(z)/z) u = 0.
#[derive(Debug, Clone)]
pub struct FrobeniusSolution {
    pub exponent: C64,
    pub coeffs: Vec<C64>,
    pub order: usize,
    pub validity_radius: f64,
    data: SingularPointData,
}

impl FrobeniusSolution {
    /// Solve the recurrence for the given indicial exponent.
    pub fn expand(data: &SingularPointData, exponent: C64, order: usize) -> Result<FrobeniusSolution> {
        let a = &data.a.c;
        let b = &data.b.c;
        let cc = &data.c.c;
        let p = |x: C64| a[0] * x * (x - 1.0) + b[0] * x + cc[0];
        let mut coeffs = vec![c64(1.0, 0.0)];
        let scale = a[0].norm() + b[0].norm() + cc[0].norm();
        for n in 1..=order {
            let denom = p(exponent + n as f64);
            if denom.norm() < 1e-12 * scale {
                return Err(Error::RecurrenceBreakdown(denom.norm()));
            }
            let mut rhs = c64(0.0, 0.0);
            for m in 1..=n {
                let j = n - m;
                let sj = exponent + j as f64;
                let am = if m < a.len() { a[m] } else { c64(0.0, 0.0) };
                let bm = if m < b.len() { b[m] } else { c64(0.0, 0.0) };
                let cm = if m < cc.len() { cc[m] } else { c64(0.0, 0.0) };
                rhs += (am * sj * (sj - 1.0) + bm * sj + cm) * coeffs[j];
            }
            coeffs.push(-rhs / denom);
        }
        // ratio test on the tail
        let mut r: f64 = f64::INFINITY;
        for j in (order.saturating_sub(6))..order {
            let num = coeffs[j].norm();
            let den = coeffs[j + 1].norm();
            if den > 1e-290 && num > 1e-290 {
                r = r.min(num / den);
            }
        }
        if !r.is_finite() {
            r = 1.0;
        }
        Ok(FrobeniusSolution {
            exponent,
            coeffs,
            order,
            validity_radius: r.min(1.0),
            data: data.clone(),
        })
    }

    /// The analytic part a_0 + a_1 z + ... and its derivative at z.
    pub fn series_part(&self, z: f64) -> (C64, C64) {
        let mut s = c64(0.0, 0.0);
        let mut d = c64(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            d = d * z + s;
            s = s * z + a;
        }
        (s, d)
    }

    /// ODE residual of the truncated series at z, relative to the magnitude of
    /// the analytic part.
    pub fn residual(&self, z: f64) -> f64 {
        let mut s1 = c64(0.0, 0.0);
        let mut d1 = c64(0.0, 0.0);
        let mut d2 = c64(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            d2 = d2 * z + 2.0 * d1;
            d1 = d1 * z + s1;
            s1 = s1 * z + a;
        }
        let e = self.exponent;
        let zc = c64(z, 0.0);
        // u = z^e S;  z^{1-e} * [components]:
        let u0 = s1;
        let u1 = e * s1 + zc * d1;
        let u2 = e * (e - 1.0) * s1 + 2.0 * e * zc * d1 + zc * zc * d2;
        let av = self.data.a.eval(zc);
        let bv = self.data.b.eval(zc);
        let cv = self.data.c.eval(zc);
        let res = av * u2 + bv * u1 + cv * u0;
        res.norm() / (s1.norm().max(1e-300))
    }
}

/// A solution sampled on a strictly increasing theta grid with derivative.
#[derive(Debug, Clone)]
pub struct SolutionSample {
    pub grid: Vec<f64>,
    pub u: Vec<C64>,
    pub du: Vec<C64>,
}

impl SolutionSample {
    pub fn zeros_like(grid: &[f64]) -> Self {
        SolutionSample {
            grid: grid.to_vec(),
            u: vec![c64(0.0, 0.0); grid.len()],
            du: vec![c64(0.0, 0.0); grid.len()],
        }
    }

    pub fn axpy(&mut self, alpha: C64, other: &SolutionSample) {
        for i in 0..self.u.len() {
            self.u[i] += alpha * other.u[i];
            self.du[i] += alpha * other.du[i];
        }
    }
}

/// Coefficient of |v|^{-i sigma} on the v < 0 side when the v > 0 side is
/// normalized to v^{-i sigma}: the boundary value of (v +- i0)^{-i sigma}.
pub fn transmission_coefficient(branch: Branch, sigma: C64) -> C64 {
    let factor = std::f64::consts::PI * I * (-I * sigma); // pi * sigma, complex-safe
    match branch {
        Branch::PlusI0 => factor.exp(),
        Branch::MinusI0 => (-factor).exp(),
    }
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) adaptive integration of the mode ODE in theta form.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct State {
    u: C64,
    du: C64,
}

fn rhs(mc: &ModeCoefficients, theta: f64, y: State) -> State {
    let a = mc.a_theta(theta);
    let b = mc.b_theta(theta);
    let c = mc.c_theta(theta);
    State { u: y.du, du: -(b * y.du + c * y.u) / a }
}

const DP_C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const DP_A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const DP_B5: [f64; 7] =
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const DP_B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Integrate from `from` to `to` (either direction), returning samples at the
/// output points (which must lie between the endpoints, inclusive). Output is
/// always in increasing theta order.
pub fn integrate_homogeneous(
    mc: &ModeCoefficients,
    from: f64,
    init: (C64, C64),
    to: f64,
    tol: f64,
    outputs: &[f64],
) -> Result<SolutionSample> {
    let dir = if to >= from { 1.0 } else { -1.0 };
    let mut pts: Vec<f64> = outputs.to_vec();
    pts.sort_by(|a, b| {
        if dir > 0.0 {
            a.partial_cmp(b).unwrap()
        } else {
            b.partial_cmp(a).unwrap()
        }
    });
    let mut out_u = Vec::with_capacity(pts.len());
    let mut out_du = Vec::with_capacity(pts.len());

    let mut th = from;
    let mut y = State { u: init.0, du: init.1 };
    let mut h: f64 = dir * 1e-3;
    let span = (to - from).abs();
    let mut idx = 0usize;

    while idx < pts.len() && (pts[idx] - th).abs() < 1e-13 {
        out_u.push(y.u);
        out_du.push(y.du);
        idx += 1;
    }

    let mut steps = 0usize;
    while dir * (to - th) > 1e-14 && steps < 2_000_000 {
        steps += 1;
        let next_target = if idx < pts.len() { pts[idx] } else { to };
        let limit = dir * (next_target - th);
        if limit > 0.0 && h.abs() > limit {
            h = dir * limit;
        }
        if h.abs() > span {
            h = dir * span;
        }
        let mut k = [State { u: c64(0.0, 0.0), du: c64(0.0, 0.0) }; 7];
        k[0] = rhs(mc, th, y);
        for s in 1..7 {
            let mut ys = y;
            for (j, kj) in k.iter().enumerate().take(s) {
                ys.u += h * DP_A[s][j] * kj.u;
                ys.du += h * DP_A[s][j] * kj.du;
            }
            k[s] = rhs(mc, th + DP_C[s] * h, ys);
        }
        let mut y5 = y;
        let mut y4 = y;
        for (j, kj) in k.iter().enumerate() {
            y5.u += h * DP_B5[j] * kj.u;
            y5.du += h * DP_B5[j] * kj.du;
            y4.u += h * DP_B4[j] * kj.u;
            y4.du += h * DP_B4[j] * kj.du;
        }
        let sc_u = 1e-30 + y.u.norm().max(y5.u.norm());
        let sc_du = 1e-30 + y.du.norm().max(y5.du.norm());
        let err = ((y5.u - y4.u).norm() / sc_u).max((y5.du - y4.du).norm() / sc_du);
        if err <= tol {
            th += h;
            y = y5;
            while idx < pts.len() && (pts[idx] - th).abs() < 1e-13 {
                out_u.push(y.u);
                out_du.push(y.du);
                idx += 1;
            }
        }
        let fac = (0.9 * (tol / err.max(1e-300)).powf(0.2)).clamp(0.2, 5.0);
        h *= fac;
        if h.abs() < 1e-13 {
            return Err(Error::StepFailure(th));
        }
    }
    while idx < pts.len() && (pts[idx] - to).abs() < 1e-12 {
        out_u.push(y.u);
        out_du.push(y.du);
        idx += 1;
    }
    if idx < pts.len() {
        return Err(Error::StepFailure(to));
    }
    if dir < 0.0 {
        out_u.reverse();
        out_du.reverse();
        pts.reverse();
    }
    Ok(SolutionSample { grid: pts, u: out_u, du: out_du })
}

// ---------------------------------------------------------------------------
// Horizon-chart basis functions and endpoint expansions.
// ---------------------------------------------------------------------------

/// The local basis at a horizon: Phi carries the v^{-i sigma} branch, Psi the
/// analytic one; both series are valid on either side of v = 0.
#[derive(Debug, Clone)]
pub struct HorizonBasis {
    pub phi: FrobeniusSolution,
    pub psi: FrobeniusSolution,
    sigma: C64,
}

impl HorizonBasis {
    pub fn build(mc: &ModeCoefficients) -> Result<HorizonBasis> {
        let margin = mc.sp.indicial_margin();
        if margin < 1e-8 {
            return Err(Error::IndicialResonance(margin));
        }
        let data = mc.horizon_data(FROBENIUS_ORDER);
        let phi = FrobeniusSolution::expand(&data, -I * mc.sp.sigma, FROBENIUS_ORDER)?;
        let psi = FrobeniusSolution::expand(&data, c64(0.0, 0.0), FROBENIUS_ORDER)?;
        Ok(HorizonBasis { phi, psi, sigma: mc.sp.sigma })
    }

    /// (value, d/dtheta) of |v|^{-i sigma} Phi(v) at theta, where v = cos 2 theta.
    pub fn sing_at(&self, theta: f64) -> (C64, C64) {
        let v = (2.0 * theta).cos();
        let vp = -2.0 * (2.0 * theta).sin();
        let (s, d) = self.phi.series_part(v);
        let pw = (-I * self.sigma * v.abs().ln()).exp();
        let value = pw * s;
        let dv = pw * ((-I * self.sigma / v) * s + d);
        (value, dv * vp)
    }

    /// (value, d/dtheta) of Psi(v) at theta.
    pub fn smth_at(&self, theta: f64) -> (C64, C64) {
        let v = (2.0 * theta).cos();
        let vp = -2.0 * (2.0 * theta).sin();
        let (s, d) = self.psi.series_part(v);
        (s, d * vp)
    }

    /// Expand (u, u') at theta as x_sing * sing + x_smth * smth.
    pub fn expand(&self, theta: f64, u: C64, du: C64) -> (C64, C64) {
        let (s0, s1) = self.sing_at(theta);
        let (p0, p1) = self.smth_at(theta);
        let det = s0 * p1 - s1 * p0;
        let x1 = (u * p1 - du * p0) / det;
        let x2 = (s0 * du - s1 * u) / det;
        (x1, x2)
    }
}

/// The regular solution at a sphere pole: w^{|k|/2}(1 + ...) in w = sin^2 theta.
#[derive(Debug, Clone)]
pub struct PoleSolution {
    pub series: FrobeniusSolution,
    pub half_k: f64,
}

impl PoleSolution {
    pub fn build(mc: &ModeCoefficients) -> Result<PoleSolution> {
        let data = mc.pole_data(FROBENIUS_ORDER);
        let kk = mc.k.abs() as f64;
        let series = FrobeniusSolution::expand(&data, c64(0.5 * kk, 0.0), FROBENIUS_ORDER)?;
        Ok(PoleSolution { series, half_k: 0.5 * kk })
    }

    /// (value, d/dtheta) at theta (valid near either pole).
    pub fn at(&self, theta: f64) -> (C64, C64) {
        let w = theta.sin().powi(2);
        let wp = (2.0 * theta).sin();
        let (s, d) = self.series.series_part(w);
        let pw = w.powf(self.half_k);
        let value = pw * s;
        let dw = if self.half_k == 0.0 { pw * d } else { pw * (self.half_k / w * s + d) };
        (value, dw * wp)
    }
}

// ---------------------------------------------------------------------------
// Region geometry and bases.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    CapPlus,
    Belt,
    CapMinus,
}

pub const REGIONS: [Region; 3] = [Region::CapPlus, Region::Belt, Region::CapMinus];

pub fn region_index(r: Region) -> usize {
    match r {
        Region::CapPlus => 0,
        Region::Belt => 1,
        Region::CapMinus => 2,
    }
}

/// Handoff angles bounding the numerically integrated part of each region.
#[derive(Debug, Clone, Copy)]
pub struct Charts {
    pub pole_plus: f64,
    pub cap_plus_h: f64,
    pub belt_plus: f64,
    pub belt_minus: f64,
    pub cap_minus_h: f64,
    pub pole_minus: f64,
}

impl Charts {
    pub fn standard() -> Charts {
        let pole = 0.5 * (1.0f64 - STANDOFF_POLE).acos();
        let caph = 0.5 * STANDOFF_V.acos();
        let belth = 0.5 * (-STANDOFF_V).acos();
        Charts {
            pole_plus: pole,
            cap_plus_h: caph,
            belt_plus: belth,
            belt_minus: std::f64::consts::PI - belth,
            cap_minus_h: std::f64::consts::PI - caph,
            pole_minus: std::f64::consts::PI - pole,
        }
    }

    pub fn span(&self, r: Region) -> (f64, f64) {
        match r {
            Region::CapPlus => (self.pole_plus, self.cap_plus_h),
            Region::Belt => (self.belt_plus, self.belt_minus),
            Region::CapMinus => (self.cap_minus_h, self.pole_minus),
        }
    }
}

/// Everything (sigma, k)-specific that the four inverses share: local
/// expansions, sampled basis solutions per region, endpoint expansions and the
/// belt transfer matrix.
pub struct RegionBases {
    pub mc: ModeCoefficients,
    pub charts: Charts,
    pub horizon: HorizonBasis,
    pub pole: PoleSolution,
    pub grids: [Vec<f64>; 3],
    /// cap+: [u_reg, w_smth]; belt: [w_sing+, w_smth+]; cap-: [w_smth-, u_reg-]
    pub samples: [[SolutionSample; 2]; 3],
    /// expansions of the pole-regular cap solutions in the horizon bases
    pub e_plus: [C64; 2],
    pub e_minus: [C64; 2],
    /// belt transfer: columns = S+ basis functions expressed in the S- basis
    pub t_belt: [[C64; 2]; 2],
}

const INT_TOL: f64 = 1e-12;

fn grid_sizes(k_abs: i32) -> [usize; 3] {
    let belt = (160 + 14 * k_abs.max(0) as usize).min(420);
    [110, belt, 110]
}

impl RegionBases {
    pub fn build(mc: &ModeCoefficients) -> Result<RegionBases> {
        let charts = Charts::standard();
        let horizon = HorizonBasis::build(mc)?;
        let pole = PoleSolution::build(mc)?;
        let sizes = grid_sizes(mc.k.abs());
        let spans = [
            charts.span(Region::CapPlus),
            charts.span(Region::Belt),
            charts.span(Region::CapMinus),
        ];
        let grids: [Vec<f64>; 3] = [
            cc_nodes(sizes[0], spans[0].0, spans[0].1),
            cc_nodes(sizes[1], spans[1].0, spans[1].1),
            cc_nodes(sizes[2], spans[2].0, spans[2].1),
        ];

        // cap+: u_reg from the pole outward, w_smth from the horizon inward
        let (p0, p1) = pole.at(charts.pole_plus);
        let ureg_p =
            integrate_homogeneous(mc, charts.pole_plus, (p0, p1), charts.cap_plus_h, INT_TOL, &grids[0])?;
        let (s0, s1) = horizon.smth_at(charts.cap_plus_h);
        let wsm_p =
            integrate_homogeneous(mc, charts.cap_plus_h, (s0, s1), charts.pole_plus, INT_TOL, &grids[0])?;
        let n0 = grids[0].len();
        let e_plus = {
            let (x1, x2) = horizon.expand(charts.cap_plus_h, ureg_p.u[n0 - 1], ureg_p.du[n0 - 1]);
            [x1, x2]
        };

        // belt: both S+ horizon-basis functions across to S-
        let (b0, b1) = horizon.sing_at(charts.belt_plus);
        let wsing_b =
            integrate_homogeneous(mc, charts.belt_plus, (b0, b1), charts.belt_minus, INT_TOL, &grids[1])?;
        let (c0v, c1v) = horizon.smth_at(charts.belt_plus);
        let wsm_b =
            integrate_homogeneous(mc, charts.belt_plus, (c0v, c1v), charts.belt_minus, INT_TOL, &grids[1])?;
        let n1 = grids[1].len();
        let t_belt = {
            let (x11, x21) =
                horizon.expand(charts.belt_minus, wsing_b.u[n1 - 1], wsing_b.du[n1 - 1]);
            let (x12, x22) = horizon.expand(charts.belt_minus, wsm_b.u[n1 - 1], wsm_b.du[n1 - 1]);
            [[x11, x12], [x21, x22]]
        };

        // cap-: w_smth from the horizon outward, u_reg- from the pole inward
        let (q0, q1) = horizon.smth_at(charts.cap_minus_h);
        let wsm_m =
            integrate_homogeneous(mc, charts.cap_minus_h, (q0, q1), charts.pole_minus, INT_TOL, &grids[2])?;
        let (r0, r1) = pole.at(charts.pole_minus);
        let ureg_m =
            integrate_homogeneous(mc, charts.pole_minus, (r0, r1), charts.cap_minus_h, INT_TOL, &grids[2])?;
        let e_minus = {
            let (x1, x2) = horizon.expand(charts.cap_minus_h, ureg_m.u[0], ureg_m.du[0]);
            [x1, x2]
        };

        Ok(RegionBases {
            mc: mc.clone(),
            charts,
            horizon,
            pole,
            grids,
            samples: [[ureg_p, wsm_p], [wsing_b, wsm_b], [wsm_m, ureg_m]],
            e_plus,
            e_minus,
            t_belt,
        })
    }
}

// ---------------------------------------------------------------------------
// The 6x6 connection system.
// ---------------------------------------------------------------------------

/// The assembled connection matrix for a branch choice, acting on the
/// coefficient vector (c1, c2, b1, b2, d1, d2): cap+/belt/cap- coefficients in
/// the local (singular, smooth) horizon bases.
pub struct ConnectionMatrix {
    pub matrix: CMatrix,
    pub lu: Lu,
    pub det: C64,
}

/// Recover the two-sided data (a+, a-) at a horizon from the cap-side and
/// belt-side singular coefficients:
///   csing = a+ + a-,   bsing = e^{pi sigma} a+ + e^{-pi sigma} a-.
pub fn data_from_sides(sigma: C64, csing: C64, bsing: C64) -> (C64, C64) {
    let ep = transmission_coefficient(Branch::PlusI0, sigma);
    let em = transmission_coefficient(Branch::MinusI0, sigma);
    let det = em - ep;
    let ap = (em * csing - bsing) / det;
    let am = (bsing - ep * csing) / det;
    (ap, am)
}

pub fn build_connection(bases: &RegionBases, branch: crate::types::BranchLabel) -> ConnectionMatrix {
    let sg = bases.mc.sp.sigma;
    let ep = transmission_coefficient(Branch::PlusI0, sg);
    let em = transmission_coefficient(Branch::MinusI0, sg);
    let delta = em - ep;
    let z = c64(0.0, 0.0);
    let one = c64(1.0, 0.0);
    let t = &bases.t_belt;

    let mut rows: Vec<Vec<C64>> = Vec::with_capacity(6);
    // regularity at theta = 0: (c1, c2) parallel to e_plus
    rows.push(vec![-bases.e_plus[1], bases.e_plus[0], z, z, z, z]);
    // regularity at theta = pi
    rows.push(vec![z, z, z, z, -bases.e_minus[1], bases.e_minus[0]]);
    // smooth matching at S+: c2 - b2 = 0
    rows.push(vec![z, one, z, -one, z, z]);
    // smooth matching at S-: (T b)_2 - d2 = 0
    rows.push(vec![z, z, t[1][0], t[1][1], z, -one]);
    match (branch.plus, branch.minus) {
        (true, false) => {
            // advanced: both singular coefficients vanish at S+
            rows.push(vec![one, z, z, z, z, z]);
            rows.push(vec![z, z, one, z, z, z]);
        }
        (false, true) => {
            // retarded: both vanish at S-
            rows.push(vec![z, z, z, z, one, z]);
            rows.push(vec![z, z, t[0][0], t[0][1], z, z]);
        }
        (false, false) => {
            // Feynman: the (v-i0) branch is absent at both horizons
            // a-(S+) = (b1 - e^{pi s} c1)/delta
            rows.push(vec![-ep / delta, z, one / delta, z, z, z]);
            rows.push(vec![z, z, t[0][0] / delta, t[0][1] / delta, -ep / delta, z]);
        }
        (true, true) => {
            // anti-Feynman: the (v+i0) branch is absent at both horizons
            rows.push(vec![em / delta, z, -one / delta, z, z, z]);
            rows.push(vec![z, z, -t[0][0] / delta, -t[0][1] / delta, em / delta, z]);
        }
    }
    let matrix = CMatrix::from_rows(&rows);
    let lu = Lu::new(&matrix);
    let det = lu.det();
    ConnectionMatrix { matrix, lu, det }
}

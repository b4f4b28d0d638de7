//! Chebyshev machinery on Clenshaw-Curtis grids: interpolation, spectral
//! differentiation, cumulative integration and quadrature weights. All
//! transforms are direct O(N^2) sums; grids here stay small.

use crate::types::C64;

/// Chebyshev-Gauss-Lobatto nodes mapped to [a, b], returned increasing.
pub fn cc_nodes(n: usize, a: f64, b: f64) -> Vec<f64> {
    assert!(n >= 2);
    let m = n - 1;
    (0..n)
        .map(|j| {
            let x = (std::f64::consts::PI * (m - j) as f64 / m as f64).cos();
            0.5 * (a + b) + 0.5 * (b - a) * x
        })
        .collect()
}

/// Clenshaw-Curtis quadrature weights on the same nodes (exact for degree n-1).
pub fn cc_weights(n: usize, a: f64, b: f64) -> Vec<f64> {
    let m = n - 1;
    let mut w = vec![0.0; n];
    for j in 0..n {
        let theta = std::f64::consts::PI * j as f64 / m as f64;
        let mut s = 1.0;
        for k in 1..=(m / 2) {
            let factor = if 2 * k == m { 1.0 } else { 2.0 };
            s -= factor * (2.0 * k as f64 * theta).cos() / ((4 * k * k - 1) as f64);
        }
        let cj = if j == 0 || j == m { 1.0 } else { 2.0 };
        w[m - j] = cj * s / m as f64;
    }
    let scale = 0.5 * (b - a);
    w.iter_mut().for_each(|x| *x *= scale);
    w
}

/// Chebyshev coefficients of the interpolant through values on `cc_nodes(n,a,b)`.
pub fn cheb_coeffs(values: &[C64]) -> Vec<C64> {
    let n = values.len();
    let m = n - 1;
    let mut c = vec![C64::new(0.0, 0.0); n];
    for (k, ck) in c.iter_mut().enumerate() {
        let mut s = C64::new(0.0, 0.0);
        for j in 0..n {
            // node order is increasing x: values[j] sits at cos(pi (m-j)/m)
            let theta = std::f64::consts::PI * (m - j) as f64 / m as f64;
            let vj = values[j];
            let wj = if j == 0 || j == m { 0.5 } else { 1.0 };
            s += wj * vj * (k as f64 * theta).cos();
        }
        *ck = s * 2.0 / m as f64;
    }
    c[0] *= 0.5;
    c[m] *= 0.5;
    c
}

/// Evaluate a Chebyshev series at x in [a, b] (Clenshaw recurrence).
pub fn cheb_eval(coeffs: &[C64], a: f64, b: f64, x: f64) -> C64 {
    let t = (2.0 * x - a - b) / (b - a);
    let mut b1 = C64::new(0.0, 0.0);
    let mut b2 = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        let tmp = b1;
        b1 = 2.0 * t * b1 - b2 + c;
        b2 = tmp;
    }
    b1 - t * b2
}

/// Coefficients of the derivative series (on [a,b]).
pub fn cheb_diff_coeffs(coeffs: &[C64], a: f64, b: f64) -> Vec<C64> {
    let n = coeffs.len();
    let mut d = vec![C64::new(0.0, 0.0); n];
    if n < 2 {
        return d;
    }
    d[n - 1] = C64::new(0.0, 0.0);
    d[n - 2] = 2.0 * (n - 1) as f64 * coeffs[n - 1];
    for k in (0..n.saturating_sub(2)).rev() {
        d[k] = d[k + 2] + 2.0 * (k + 1) as f64 * coeffs[k + 1];
    }
    d[0] *= 0.5;
    let scale = 2.0 / (b - a);
    d.iter_mut().for_each(|c| *c *= scale);
    d
}

/// Coefficients of the antiderivative vanishing at x = a.
pub fn cheb_antiderivative_coeffs(coeffs: &[C64], a: f64, b: f64) -> Vec<C64> {
    let n = coeffs.len();
    let scale = 0.5 * (b - a);
    let mut ad = vec![C64::new(0.0, 0.0); n + 1];
    for k in 1..=n {
        let ck = coeffs[k - 1];
        // integral of T_{k-1}
        match k - 1 {
            0 => ad[1] += ck,
            1 => ad[0] += 0.25 * ck * 2.0, // T1 integrates to T2/4 + const; handled below
            _ => {}
        }
    }
    // standard recurrence: A_k = (c_{k-1} - c_{k+1}) / (2k), k >= 1
    let c = |idx: usize| -> C64 {
        if idx < n {
            coeffs[idx]
        } else {
            C64::new(0.0, 0.0)
        }
    };
    for k in 1..=n {
        let mut v = c(k - 1) - c(k + 1);
        if k == 1 {
            v = 2.0 * c(0) - c(2);
        }
        ad[k] = v / (2.0 * k as f64);
    }
    ad.iter_mut().for_each(|x| *x *= scale);
    // fix the constant so the antiderivative vanishes at x = a (t = -1)
    let mut at_a = C64::new(0.0, 0.0);
    let mut sign = 1.0;
    for (k, &akk) in ad.iter().enumerate() {
        if k == 0 {
            continue;
        }
        sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        at_a += sign * akk;
    }
    let _ = sign;
    ad[0] = -at_a;
    ad
}

/// A sampled complex function on a Clenshaw-Curtis grid with its Chebyshev
/// representation, supporting evaluation, differentiation and integration.
#[derive(Debug, Clone)]
pub struct ChebFn {
    pub a: f64,
    pub b: f64,
    pub values: Vec<C64>,
    pub coeffs: Vec<C64>,
}

impl ChebFn {
    pub fn from_values(a: f64, b: f64, values: Vec<C64>) -> Self {
        let coeffs = cheb_coeffs(&values);
        ChebFn { a, b, values, coeffs }
    }

    pub fn from_fn(a: f64, b: f64, n: usize, f: impl Fn(f64) -> C64) -> Self {
        let nodes = cc_nodes(n, a, b);
        let values = nodes.iter().map(|&x| f(x)).collect();
        Self::from_values(a, b, values)
    }

    pub fn eval(&self, x: f64) -> C64 {
        cheb_eval(&self.coeffs, self.a, self.b, x)
    }

    pub fn derivative(&self) -> ChebFn {
        let dc = cheb_diff_coeffs(&self.coeffs, self.a, self.b);
        let nodes = cc_nodes(self.values.len(), self.a, self.b);
        let values = nodes.iter().map(|&x| cheb_eval(&dc, self.a, self.b, x)).collect();
        ChebFn { a: self.a, b: self.b, values, coeffs: dc }
    }

    /// Antiderivative vanishing at the left endpoint.
    pub fn cumulative(&self) -> ChebFn {
        let ac = cheb_antiderivative_coeffs(&self.coeffs, self.a, self.b);
        let nodes = cc_nodes(self.values.len(), self.a, self.b);
        let values = nodes.iter().map(|&x| cheb_eval(&ac, self.a, self.b, x)).collect();
        ChebFn { a: self.a, b: self.b, values, coeffs: ac }
    }

    pub fn integral(&self) -> C64 {
        let w = cc_weights(self.values.len(), self.a, self.b);
        self.values.iter().zip(w.iter()).map(|(&v, &wi)| v * wi).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::c64;

    #[test]
    fn quadrature_exactness() {
        let n = 33;
        let w = cc_weights(n, 0.0, 2.0);
        let x = cc_nodes(n, 0.0, 2.0);
        let s: f64 = x.iter().zip(w.iter()).map(|(&xi, &wi)| xi.powi(7) * wi).sum();
        assert!((s - 2.0f64.powi(8) / 8.0).abs() < 1e-12, "got {s}");
        let s2: f64 = x.iter().zip(w.iter()).map(|(&xi, &wi)| (3.0 * xi).sin() * wi).sum();
        let exact = (1.0 - (6.0f64).cos()) / 3.0;
        assert!((s2 - exact).abs() < 1e-12);
    }

    #[test]
    fn interp_diff_cumulative() {
        let f = |x: f64| c64((2.0 * x).sin() * x, (1.5 * x).cos());
        let df = |x: f64| {
            c64(
                2.0 * (2.0 * x).cos() * x + (2.0 * x).sin(),
                -1.5 * (1.5 * x).sin(),
            )
        };
        let g = ChebFn::from_fn(-0.3, 1.1, 48, f);
        assert!((g.eval(0.4) - f(0.4)).norm() < 1e-13);
        let gd = g.derivative();
        assert!((gd.eval(0.4) - df(0.4)).norm() < 1e-10);
        let gc = g.cumulative();
        assert!((gc.eval(-0.3)).norm() < 1e-13);
        // compare cumulative at b with direct quadrature
        assert!((gc.eval(1.1) - g.integral()).norm() < 1e-12);
    }
}

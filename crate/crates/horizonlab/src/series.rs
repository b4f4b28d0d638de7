//! Truncated power-series arithmetic used to Taylor-expand the mode-operator
//! coefficient functions at singular points.

use crate::types::C64;

#[derive(Debug, Clone)]
pub struct PSeries {
    pub c: Vec<C64>,
}

impl PSeries {
    pub fn zero(order: usize) -> Self {
        PSeries { c: vec![C64::new(0.0, 0.0); order] }
    }

    pub fn constant(v: C64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.c[0] = v;
        s
    }

    /// x (the identity) truncated to `order` terms.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.c[1] = C64::new(1.0, 0.0);
        }
        s
    }

    pub fn from_coeffs(c: Vec<C64>) -> Self {
        PSeries { c }
    }

    /// Real polynomial in ascending coefficients, truncated/padded to order.
    pub fn from_poly(p: &[f64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, &a) in p.iter().enumerate().take(order) {
            s.c[i] = C64::new(a, 0.0);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }

    pub fn add(&self, other: &PSeries) -> PSeries {
        let n = self.order().min(other.order());
        PSeries { c: (0..n).map(|i| self.c[i] + other.c[i]).collect() }
    }

    pub fn sub(&self, other: &PSeries) -> PSeries {
        let n = self.order().min(other.order());
        PSeries { c: (0..n).map(|i| self.c[i] - other.c[i]).collect() }
    }

    pub fn scale(&self, f: C64) -> PSeries {
        PSeries { c: self.c.iter().map(|&a| a * f).collect() }
    }

    pub fn mul(&self, other: &PSeries) -> PSeries {
        let n = self.order().min(other.order());
        let mut out = PSeries::zero(n);
        for i in 0..n {
            for j in 0..(n - i) {
                let v = self.c[i] * other.c[j];
                out.c[i + j] += v;
            }
        }
        out
    }

    /// Division; panics if the divisor has (numerically) zero constant term.
    pub fn div(&self, other: &PSeries) -> PSeries {
        let n = self.order().min(other.order());
        assert!(
            other.c[0].norm() > 1e-300,
            "series division by series with zero constant term"
        );
        let mut out = PSeries::zero(n);
        for i in 0..n {
            let mut s = self.c[i];
            for j in 0..i {
                s -= out.c[j] * other.c[i - j];
            }
            out.c[i] = s / other.c[0];
        }
        out
    }

    /// Drop the constant term and shift down: (f - f(0))/x.
    pub fn shift_down(&self) -> PSeries {
        let mut c = self.c[1..].to_vec();
        c.push(C64::new(0.0, 0.0));
        PSeries { c }
    }

    /// Multiply by x: shift coefficients up, dropping the last.
    pub fn shift_up(&self) -> PSeries {
        let mut c = vec![C64::new(0.0, 0.0)];
        c.extend_from_slice(&self.c[..self.order() - 1]);
        PSeries { c }
    }

    pub fn eval(&self, x: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Derivative series.
    pub fn derivative(&self) -> PSeries {
        let n = self.order();
        let mut out = PSeries::zero(n);
        for i in 1..n {
            out.c[i - 1] = self.c[i] * i as f64;
        }
        out
    }
}

//! Dense complex linear algebra for the small systems used here (n <= 16):
//! LU with partial pivoting, determinant, solve, and a Jacobi eigensolver for
//! Hermitian matrices.

use crate::types::C64;

#[derive(Debug, Clone)]
pub struct CMatrix {
    pub n: usize,
    pub m: usize,
    pub data: Vec<C64>, // row major
}

impl CMatrix {
    pub fn zeros(n: usize, m: usize) -> Self {
        CMatrix { n, m, data: vec![C64::new(0.0, 0.0); n * m] }
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let n = rows.len();
        let m = rows[0].len();
        let mut data = Vec::with_capacity(n * m);
        for r in rows {
            assert_eq!(r.len(), m);
            data.extend_from_slice(r);
        }
        CMatrix { n, m, data }
    }

    pub fn at(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.m + j] = v;
    }

    pub fn conj_transpose(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.m, self.n);
        for i in 0..self.n {
            for j in 0..self.m {
                out.set(j, i, self.at(i, j).conj());
            }
        }
        out
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.m, other.n);
        let mut out = CMatrix::zeros(self.n, other.m);
        for i in 0..self.n {
            for k in 0..self.m {
                let a = self.at(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.m {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// LU factorization with partial pivoting.
pub struct Lu {
    lu: CMatrix,
    piv: Vec<usize>,
    pub sign: f64,
    singular: bool,
}

impl Lu {
    pub fn new(a: &CMatrix) -> Lu {
        assert_eq!(a.n, a.m);
        let n = a.n;
        let mut lu = a.clone();
        let mut piv: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut singular = false;
        for col in 0..n {
            let mut pmax = col;
            let mut vmax = lu.at(col, col).norm();
            for r in (col + 1)..n {
                let v = lu.at(r, col).norm();
                if v > vmax {
                    vmax = v;
                    pmax = r;
                }
            }
            if vmax == 0.0 {
                singular = true;
                continue;
            }
            if pmax != col {
                for j in 0..n {
                    let tmp = lu.at(col, j);
                    lu.set(col, j, lu.at(pmax, j));
                    lu.set(pmax, j, tmp);
                }
                piv.swap(col, pmax);
                sign = -sign;
            }
            let d = lu.at(col, col);
            for r in (col + 1)..n {
                let f = lu.at(r, col) / d;
                lu.set(r, col, f);
                for j in (col + 1)..n {
                    let v = lu.at(r, j) - f * lu.at(col, j);
                    lu.set(r, j, v);
                }
            }
        }
        Lu { lu, piv, sign, singular }
    }

    pub fn det(&self) -> C64 {
        if self.singular {
            return C64::new(0.0, 0.0);
        }
        let mut d = C64::new(self.sign, 0.0);
        for i in 0..self.lu.n {
            d *= self.lu.at(i, i);
        }
        d
    }

    pub fn is_singular(&self, tol: f64) -> bool {
        if self.singular {
            return true;
        }
        (0..self.lu.n).any(|i| self.lu.at(i, i).norm() < tol)
    }

    pub fn solve(&self, b: &[C64]) -> Vec<C64> {
        let n = self.lu.n;
        assert_eq!(b.len(), n);
        let mut x: Vec<C64> = self.piv.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let f = self.lu.at(i, j) * x[j];
                x[i] -= f;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let f = self.lu.at(i, j) * x[j];
                x[i] -= f;
            }
            x[i] /= self.lu.at(i, i);
        }
        x
    }
}

pub fn det(a: &CMatrix) -> C64 {
    Lu::new(a).det()
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.
fn symmetric_eigenvalues(mut h: Vec<Vec<f64>>) -> Vec<f64> {
    let n = h.len();
    for _sweep in 0..200 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += h[i][j] * h[i][j];
            }
        }
        let scale: f64 = (0..n).map(|i| h[i][i].abs()).fold(1e-300, f64::max);
        if off.sqrt() < 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = h[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (h[q][q] - h[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let hpk = h[p][k];
                    let hqk = h[q][k];
                    h[p][k] = c * hpk - s * hqk;
                    h[q][k] = s * hpk + c * hqk;
                }
                for k in 0..n {
                    let hkp = h[k][p];
                    let hkq = h[k][q];
                    h[k][p] = c * hkp - s * hkq;
                    h[k][q] = s * hkp + c * hkq;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| h[i][i]).collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Eigenvalues of a Hermitian matrix, sorted ascending. The input is
/// symmetrized first, then embedded as the real symmetric [[A, -B], [B, A]]
/// whose spectrum doubles that of A + iB.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Vec<f64> {
    assert_eq!(a.n, a.m);
    let n = a.n;
    let mut big = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let h = 0.5 * (a.at(i, j) + a.at(j, i).conj());
            big[i][j] = h.re;
            big[n + i][n + j] = h.re;
            big[i][n + j] = -h.im;
            big[n + i][j] = h.im;
        }
    }
    let ev2 = symmetric_eigenvalues(big);
    (0..n).map(|i| 0.5 * (ev2[2 * i] + ev2[2 * i + 1])).collect()
}

/// Numeric rank: eigenvalues of A^H A above tol^2 * max (with a floor at the
/// eigensolver noise level).
pub fn numeric_rank(a: &CMatrix, tol: f64) -> usize {
    let g = a.conj_transpose().matmul(a);
    let ev = hermitian_eigenvalues(&g);
    let top = ev.last().copied().unwrap_or(0.0).max(0.0);
    if top == 0.0 {
        return 0;
    }
    let cut = top * (tol * tol).max(1e-13);
    ev.iter().filter(|&&x| x > cut).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::c64;

    #[test]
    fn lu_solve_roundtrip() {
        let a = CMatrix::from_rows(&[
            vec![c64(2.0, 1.0), c64(0.5, -0.2), c64(0.0, 0.3)],
            vec![c64(-1.0, 0.4), c64(3.0, 0.0), c64(1.2, -1.0)],
            vec![c64(0.3, 0.0), c64(0.1, 2.0), c64(-0.7, 0.5)],
        ]);
        let x_true = vec![c64(1.0, -2.0), c64(0.5, 0.5), c64(-1.5, 0.25)];
        let mut b = vec![C64::new(0.0, 0.0); 3];
        for i in 0..3 {
            for j in 0..3 {
                b[i] += a.at(i, j) * x_true[j];
            }
        }
        let lu = Lu::new(&a);
        let x = lu.solve(&b);
        for i in 0..3 {
            assert!((x[i] - x_true[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn det_2x2() {
        let a = CMatrix::from_rows(&[
            vec![c64(1.0, 1.0), c64(2.0, 0.0)],
            vec![c64(0.0, 1.0), c64(1.0, -1.0)],
        ]);
        // det = (1+i)(1-i) - 2i = 2 - 2i
        assert!((det(&a) - c64(2.0, -2.0)).norm() < 1e-14);
    }

    #[test]
    fn hermitian_eigs() {
        // known spectrum: diag(1, 3) rotated
        let a = CMatrix::from_rows(&[
            vec![c64(2.0, 0.0), c64(0.0, -1.0)],
            vec![c64(0.0, 1.0), c64(2.0, 0.0)],
        ]);
        let ev = hermitian_eigenvalues(&a);
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rank_detection() {
        let a = CMatrix::from_rows(&[
            vec![c64(1.0, 0.0), c64(2.0, 0.0)],
            vec![c64(2.0, 0.0), c64(4.0, 0.0)],
        ]);
        assert_eq!(numeric_rank(&a, 1e-10), 1);
    }
}

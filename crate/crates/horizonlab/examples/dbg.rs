use horizonlab::linalg::*;
use horizonlab::types::*;

fn main() {
    // rank-2 PSD: A = B^H B with B 2x4
    let b = CMatrix::from_rows(&[
        vec![c64(1.0,0.3), c64(-0.5,0.2), c64(0.0,1.0), c64(2.0,-0.4)],
        vec![c64(0.3,-1.0), c64(0.8,0.0), c64(1.5,0.5), c64(-0.2,0.9)],
    ]);
    let g = b.conj_transpose().matmul(&b);
    let ev = hermitian_eigenvalues(&g);
    println!("eigs of rank-2 PSD 4x4: {:?}", ev);
    println!("numeric_rank = {}", numeric_rank(&b, 1e-8));

    // hermitian with known spectrum: diag(1,2,3) conjugated by complex unitary-ish (use B^H B + shift)
    let a = CMatrix::from_rows(&[
        vec![c64(2.0,0.0), c64(0.3,0.4), c64(-0.1,0.2)],
        vec![c64(0.3,-0.4), c64(1.0,0.0), c64(0.5,-0.6)],
        vec![c64(-0.1,-0.2), c64(0.5,0.6), c64(3.0,0.0)],
    ]);
    let ev = hermitian_eigenvalues(&a);
    println!("eigs: {:?}", ev);
    // trace check
    println!("sum = {} vs trace 6", ev.iter().sum::<f64>());
}

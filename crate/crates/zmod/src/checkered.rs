//! Endomorphisms of `⊕_i Z/p^{e_i}` as matrices acting on row vectors.
//!
//! Entry `(i, j)` of such a matrix must be divisible by `p^{max(0, e_j - e_i)}`
//! and is reduced modulo `p^{e_j}`; writing it as that power times a free
//! parameter in `Z/p^{min(e_i, e_j)}` identifies the endomorphisms with
//! `⊕_{i,j} Z/p^{min(e_i, e_j)}`.

use crate::{add_mod, ipow, mul_mod};

pub type Matrix = Vec<Vec<u64>>;

pub fn shift(p: u64, exps: &[u32], i: usize, j: usize) -> u64 {
    ipow(p, exps[j].saturating_sub(exps[i]))
}

/// Exponents of the free parameters, row-major.
pub fn param_exps(exps: &[u32]) -> Vec<u32> {
    let n = exps.len();
    (0..n * n).map(|k| exps[k / n].min(exps[k % n])).collect()
}

pub fn to_matrix(p: u64, exps: &[u32], t: &[u64]) -> Matrix {
    let n = exps.len();
    (0..n)
        .map(|i| (0..n).map(|j| mul_mod(t[i * n + j], shift(p, exps, i, j), ipow(p, exps[j]))).collect())
        .collect()
}

pub fn to_params(p: u64, exps: &[u32], m: &Matrix) -> Vec<u64> {
    let n = exps.len();
    let mut t = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let s = shift(p, exps, i, j);
            debug_assert_eq!(m[i][j] % s, 0);
            t.push((m[i][j] / s) % ipow(p, exps[i].min(exps[j])));
        }
    }
    t
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

/// `a` then `b`.
pub fn mat_mul(p: u64, exps: &[u32], a: &Matrix, b: &Matrix) -> Matrix {
    let n = exps.len();
    let q = ipow(p, exps.iter().copied().max().unwrap_or(0));
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = 0u64;
                    for k in 0..n {
                        acc = add_mod(acc, mul_mod(a[i][k], b[k][j], q), q);
                    }
                    acc % ipow(p, exps[j])
                })
                .collect()
        })
        .collect()
}

/// Image of the row vector `v` under `m`.
pub fn apply(p: u64, exps: &[u32], v: &[u64], m: &Matrix) -> Vec<u64> {
    let n = exps.len();
    let q = ipow(p, exps.iter().copied().max().unwrap_or(0));
    (0..n)
        .map(|j| {
            let mut acc = 0u64;
            for i in 0..n {
                acc = add_mod(acc, mul_mod(v[i], m[i][j], q), q);
            }
            acc % ipow(p, exps[j])
        })
        .collect()
}

use crate::{inv_mod, ipow, mul_mod, sub_mod, valuation};

/// One congruence `sum coeffs[j] * x_j = rhs (mod p^exp)`.
#[derive(Clone, Debug)]
pub struct Row {
    pub coeffs: Vec<u64>,
    pub rhs: u64,
    pub exp: u32,
}

/// A particular solution and generators of the homogeneous solution group.
/// Entry `j` of every vector is reduced modulo `p^{unknown_exps[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

/// Smith-style elimination over Z/p^e. Rows are transformed in place
/// together with a right-hand side; column operations are accumulated in
/// `cols` (and its inverse in `cols_inv`).
struct Elim {
    p: u64,
    e: u32,
    q: u64,
    a: Vec<Vec<u64>>,
    rhs: Vec<u64>,
    cols: Vec<Vec<u64>>,
    cols_inv: Vec<Vec<u64>>,
    vals: Vec<u32>,
}

impl Elim {
    fn new(p: u64, e: u32, a: Vec<Vec<u64>>, rhs: Vec<u64>, k: usize) -> Self {
        let q = ipow(p, e);
        let mut id = vec![vec![0u64; k]; k];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = 1 % q;
        }
        Elim { p, e, q, a, rhs, cols: id.clone(), cols_inv: id, vals: Vec::new() }
    }

    fn val(&self, x: u64) -> u32 {
        if x == 0 {
            self.e
        } else {
            valuation(x, self.p).min(self.e)
        }
    }

    fn run(&mut self) {
        let m = self.a.len();
        let k = self.cols.len();
        let q = self.q;
        let mut r = 0;
        while r < m.min(k) {
            let mut best: Option<(u32, usize, usize)> = None;
            'search: for i in r..m {
                for j in r..k {
                    let x = self.a[i][j];
                    if x == 0 {
                        continue;
                    }
                    let v = self.val(x);
                    if best.map_or(true, |b| v < b.0) {
                        best = Some((v, i, j));
                        if v == 0 {
                            break 'search;
                        }
                    }
                }
            }
            let Some((v, pi, pj)) = best else { break };
            self.a.swap(r, pi);
            self.rhs.swap(r, pi);
            if pj != r {
                for row in self.a.iter_mut() {
                    row.swap(r, pj);
                }
                for row in self.cols.iter_mut() {
                    row.swap(r, pj);
                }
                self.cols_inv.swap(r, pj);
            }
            let pv = ipow(self.p, v);
            let unit = self.a[r][r] / pv;
            let uinv = inv_mod(unit, q).expect("unit part is invertible");
            for x in self.a[r].iter_mut() {
                *x = mul_mod(*x, uinv, q);
            }
            self.rhs[r] = mul_mod(self.rhs[r], uinv, q);
            let pivot_row = self.a[r].clone();
            let pivot_rhs = self.rhs[r];
            for i in 0..m {
                if i == r || self.a[i][r] == 0 {
                    continue;
                }
                let f = self.a[i][r] / pv;
                let row = &mut self.a[i];
                for j in r..k {
                    if pivot_row[j] != 0 {
                        row[j] = sub_mod(row[j], mul_mod(f, pivot_row[j], q), q);
                    }
                }
                self.rhs[i] = sub_mod(self.rhs[i], mul_mod(f, pivot_rhs, q), q);
            }
            for j in (r + 1)..k {
                let x = self.a[r][j];
                if x == 0 {
                    continue;
                }
                let f = x / pv;
                self.a[r][j] = 0;
                for row in self.cols.iter_mut() {
                    row[j] = sub_mod(row[j], mul_mod(f, row[r], q), q);
                }
                let src = self.cols_inv[j].clone();
                for (t, s) in self.cols_inv[r].iter_mut().zip(src) {
                    *t = (*t + mul_mod(f, s, q)) % q;
                }
            }
            self.vals.push(v);
            r += 1;
        }
    }
}

/// Solves a system of congruences over Z/p^E where unknown `j` lives in
/// Z/p^{unknown_exps[j]} and each row carries its own modulus. Every row
/// must be well defined on the unknowns' residues (the caller's duty).
pub fn solve(p: u64, unknown_exps: &[u32], rows: &[Row]) -> Option<Solution> {
    let k = unknown_exps.len();
    let e = rows
        .iter()
        .map(|r| r.exp)
        .chain(unknown_exps.iter().copied())
        .max()
        .unwrap_or(1)
        .max(1);
    let q = ipow(p, e);
    let mut a = Vec::with_capacity(rows.len());
    let mut rhs = Vec::with_capacity(rows.len());
    for row in rows {
        if row.exp == 0 {
            continue;
        }
        debug_assert_eq!(row.coeffs.len(), k);
        let scale = ipow(p, e - row.exp);
        let m = ipow(p, row.exp);
        a.push(row.coeffs.iter().map(|c| mul_mod(c % m, scale, q)).collect::<Vec<_>>());
        rhs.push(mul_mod(row.rhs % m, scale, q));
    }
    let mut el = Elim::new(p, e, a, rhs, k);
    el.run();
    let r = el.vals.len();
    let mut y = vec![0u64; k];
    for i in 0..r {
        let v = el.vals[i];
        let b = el.rhs[i];
        if b != 0 && el.val(b) < v {
            return None;
        }
        y[i] = b / ipow(p, v);
    }
    if el.rhs[r..].iter().any(|&b| b != 0) {
        return None;
    }
    let apply = |y: &[u64]| -> Vec<u64> {
        (0..k)
            .map(|row| {
                let mut acc = 0u64;
                for (c, yi) in el.cols[row].iter().zip(y) {
                    acc = (acc + mul_mod(*c, *yi, q)) % q;
                }
                acc % ipow(p, unknown_exps[row])
            })
            .collect()
    };
    let particular = apply(&y);
    let mut kernel = Vec::new();
    for i in 0..k {
        let mut v = vec![0u64; k];
        if i < r {
            if el.vals[i] == 0 {
                continue;
            }
            v[i] = ipow(p, e - el.vals[i]);
        } else {
            v[i] = 1;
        }
        let x = apply(&v);
        if x.iter().any(|&c| c != 0) {
            kernel.push(x);
        }
    }
    Some(Solution { particular, kernel })
}

/// An independent generating set, with order exponents, of the subgroup of
/// `⊕_j Z/p^{col_exps[j]}` generated by `gens`. Orders come out descending.
pub fn span_basis(p: u64, col_exps: &[u32], gens: &[Vec<u64>]) -> Vec<(Vec<u64>, u32)> {
    let k = col_exps.len();
    let e = col_exps.iter().copied().max().unwrap_or(0);
    if e == 0 || gens.is_empty() {
        return Vec::new();
    }
    let q = ipow(p, e);
    let a: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| {
            (0..k)
                .map(|j| mul_mod(g[j] % ipow(p, col_exps[j]), ipow(p, e - col_exps[j]), q))
                .collect()
        })
        .collect();
    let m = a.len();
    let mut el = Elim::new(p, e, a, vec![0; m], k);
    el.run();
    let mut out = Vec::new();
    for (i, &v) in el.vals.iter().enumerate() {
        let pv = ipow(p, v);
        let vec: Vec<u64> = (0..k)
            .map(|j| mul_mod(el.cols_inv[i][j], pv, q) / ipow(p, e - col_exps[j]))
            .collect();
        out.push((vec, e - v));
    }
    out
}

/// Structure of `(Z/p^e)^k / ⟨relations⟩`, as returned by
/// [`quotient_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    /// New generators `(old coordinates, order exponent)`, trivial ones
    /// dropped.
    pub gens: Vec<(Vec<u64>, u32)>,
    /// `transform[i][t]`: coordinate `t` (modulo `p^{gens[t].1}`) of old
    /// generator `i`.
    pub transform: Vec<Vec<u64>>,
}

/// Invariant-factor form of the quotient of `(Z/p^e)^k` by the span of
/// `relations`.
pub fn quotient_basis(p: u64, e: u32, k: usize, relations: &[Vec<u64>]) -> QuotientBasis {
    let q = ipow(p, e);
    let a: Vec<Vec<u64>> = relations.iter().map(|r| r.iter().map(|x| x % q).collect()).collect();
    let m = a.len();
    let mut el = Elim::new(p, e, a, vec![0; m], k);
    el.run();
    let mut gens = Vec::new();
    let mut keep = Vec::new();
    for j in 0..k {
        let v = el.vals.get(j).copied().unwrap_or(e);
        if v == 0 {
            continue;
        }
        keep.push((j, v));
        gens.push((el.cols_inv[j].clone(), v));
    }
    let transform = (0..k)
        .map(|i| keep.iter().map(|&(j, v)| el.cols[i][j] % ipow(p, v)).collect())
        .collect();
    QuotientBasis { gens, transform }
}

/// Coordinates of `target` with respect to an independent basis of a
/// subgroup of `⊕_j Z/p^{col_exps[j]}`; `None` when outside the span.
pub fn coordinates(
    p: u64,
    col_exps: &[u32],
    basis: &[(Vec<u64>, u32)],
    target: &[u64],
) -> Option<Vec<u64>> {
    let unknowns: Vec<u32> = basis.iter().map(|b| b.1).collect();
    let rows: Vec<Row> = (0..col_exps.len())
        .map(|j| Row {
            coeffs: basis.iter().map(|b| b.0[j]).collect(),
            rhs: target[j],
            exp: col_exps[j],
        })
        .collect();
    solve(p, &unknowns, &rows).map(|s| s.particular)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(p: u64, ue: &[u32], rows: &[Row], x: &[u64]) -> bool {
        rows.iter().all(|r| {
            let m = ipow(p, r.exp);
            let mut acc = 0u64;
            for (c, v) in r.coeffs.iter().zip(x) {
                acc = (acc + mul_mod(*c, *v, m)) % m;
            }
            acc == r.rhs % m
        }) && x.iter().zip(ue).all(|(v, e)| *v < ipow(p, *e))
    }

    #[test]
    fn z4_square_has_no_root() {
        // 2x = 2 (mod 4) with x in 2Z/4 parametrised as x = 2t, t mod 2: 4t = 2 impossible.
        let rows = vec![Row { coeffs: vec![0], rhs: 2, exp: 2 }];
        assert!(solve(2, &[1], &rows).is_none());
    }

    #[test]
    fn mixed_moduli() {
        // x in Z/4, y in Z/2: x + 2y = 3 (mod 4), x = 1 (mod 2).
        let rows = vec![
            Row { coeffs: vec![1, 2], rhs: 3, exp: 2 },
            Row { coeffs: vec![1, 0], rhs: 1, exp: 1 },
        ];
        let s = solve(2, &[2, 1], &rows).unwrap();
        assert!(check(2, &[2, 1], &rows, &s.particular));
        for k in &s.kernel {
            let hom: Vec<Row> = rows.iter().map(|r| Row { rhs: 0, ..r.clone() }).collect();
            assert!(check(2, &[2, 1], &hom, k));
        }
        // Solutions: (3,0), (1,1): the kernel has one generator.
        assert_eq!(s.kernel.len(), 1);
    }

    #[test]
    fn basis_of_span() {
        // Subgroup of Z/4 + Z/2 generated by (2,1) and (0,1): orders 2 and 2.
        let b = span_basis(2, &[2, 1], &[vec![2, 1], vec![0, 1]]);
        let orders: Vec<u32> = b.iter().map(|x| x.1).collect();
        assert_eq!(orders, vec![1, 1]);
        let c = coordinates(2, &[2, 1], &b, &[2, 0]).unwrap();
        let mut back = [0u64; 2];
        for (ci, (v, _)) in c.iter().zip(&b) {
            back[0] = (back[0] + ci * v[0]) % 4;
            back[1] = (back[1] + ci * v[1]) % 2;
        }
        assert_eq!(back, [2, 0]);
        assert!(coordinates(2, &[2, 1], &b, &[1, 0]).is_none());
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn solutions_satisfy_random_systems(
            coeffs in proptest::collection::vec(0u64..27, 12),
            xs in proptest::collection::vec(0u64..27, 4),
        ) {
            let ue = [3u32, 3, 2, 1];
            let x: Vec<u64> = xs.iter().zip(ue).map(|(v, e)| v % ipow(3, e)).collect();
            // Rows modulo 3^1 so that every unknown is well defined.
            let rows: Vec<Row> = coeffs.chunks(4).map(|c| {
                let mut acc = 0;
                for (a, b) in c.iter().zip(&x) { acc = (acc + a * b) % 3; }
                Row { coeffs: c.to_vec(), rhs: acc, exp: 1 }
            }).collect();
            let s = solve(3, &ue, &rows).expect("consistent by construction");
            prop_assert!(check(3, &ue, &rows, &s.particular));
        }
    }

    #[test]
    fn quotient_structure() {
        // b of order 2, y with y^2 = b: cyclic of order 4
        let qb = quotient_basis(2, 3, 2, &[vec![2, 0], vec![7, 2]]);
        let mut orders: Vec<u32> = qb.gens.iter().map(|g| g.1).collect();
        orders.sort();
        assert_eq!(orders, vec![2]);
        // (Z/4)^2 / <(0, 2)> = Z4 x Z2
        let qb = quotient_basis(2, 2, 2, &[vec![0, 2]]);
        let mut orders: Vec<u32> = qb.gens.iter().map(|g| g.1).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2]);
        // transform composed with generators is the identity on coordinates
        for (i, row) in qb.transform.iter().enumerate() {
            for k in 0..2 {
                let mut acc = 0u64;
                for (t, g) in qb.gens.iter().enumerate() {
                    acc += row[t] * g.0[k];
                }
                let m = if k == 1 { 2 } else { 4 };
                assert_eq!(acc % m, u64::from(i == k) % m);
            }
        }
    }
}

//! Finite commutative unital rings given by structure constants over
//! `Z/p^e`, with idempotent lifting and frames.
//!
//! Additively a ring is `⊕_i Z/p^{e_i} b_i`. Elements are coordinate
//! vectors; coordinate `i` is reduced modulo `p^{e_i}`.

use thiserror::Error;
use zmod::{add_mod, ipow, mul_mod, sub_mod};

pub type Elem = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("structure constants have the wrong shape: {0}")]
    Shape(String),
    #[error("b{x} * b{y} != b{y} * b{x}")]
    NotCommutative { x: usize, y: usize },
    #[error("(b{x} * b{y}) * b{z} != b{x} * (b{y} * b{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("the given identity does not fix b{0}")]
    NotIdentity(usize),
    #[error("b{x} * b{y} is not killed by the additive order of its factors")]
    NotWellDefined { x: usize, y: usize },
    #[error("e^2 - e is not nilpotent")]
    NotNilpotent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCommRing {
    p: u64,
    exps: Vec<u32>,
    /// `table[x][y]` = coordinates of `b_x b_y`.
    table: Vec<Vec<Elem>>,
    one: Elem,
}

impl FiniteCommRing {
    /// Ring of characteristic `p^e` with `n = one.len()` basis elements.
    pub fn from_structure_constants(
        p: u64,
        e: u32,
        table: Vec<Vec<Elem>>,
        one: Elem,
    ) -> Result<Self, RingError> {
        let n = one.len();
        Self::with_orders(p, vec![e; n], table, one)
    }

    /// Basis element `i` has additive order `p^{exps[i]}`.
    pub fn with_orders(
        p: u64,
        exps: Vec<u32>,
        table: Vec<Vec<Elem>>,
        one: Elem,
    ) -> Result<Self, RingError> {
        let n = exps.len();
        if exps.iter().any(|&e| e == 0) {
            return Err(RingError::Shape("zero additive order".into()));
        }
        if one.len() != n || table.len() != n {
            return Err(RingError::Shape(format!("expected rank {}", n)));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|c| c.len() != n) {
                return Err(RingError::Shape(format!("expected {n}x{n}x{n} constants")));
            }
        }
        let mut r = FiniteCommRing { p, exps, table, one };
        for x in 0..n {
            for y in 0..n {
                let c = r.reduce(r.table[x][y].clone());
                r.table[x][y] = c;
            }
        }
        r.one = r.reduce(r.one.clone());
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<(), RingError> {
        let n = self.rank();
        for x in 0..n {
            for y in 0..n {
                if self.table[x][y] != self.table[y][x] {
                    return Err(RingError::NotCommutative { x, y });
                }
                let k = self.exps[x].min(self.exps[y]);
                if !self.is_zero(&self.scale(&self.table[x][y], ipow(self.p, k))) {
                    return Err(RingError::NotWellDefined { x, y });
                }
            }
        }
        for x in 0..n {
            let bx = self.basis_element(x);
            if self.mul(&self.one, &bx) != bx {
                return Err(RingError::NotIdentity(x));
            }
            for y in 0..n {
                for z in 0..n {
                    let l = self.mul(&self.table[x][y], &self.basis_element(z));
                    let r = self.mul(&bx, &self.table[y][z]);
                    if l != r {
                        return Err(RingError::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// The largest `e` with some basis element of order `p^e`.
    pub fn char_exp(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// `log_p |R|`.
    pub fn length(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn table(&self) -> &[Vec<Elem>] {
        &self.table
    }

    pub fn modulus(&self, i: usize) -> u64 {
        ipow(self.p, self.exps[i])
    }

    pub fn reduce(&self, mut a: Elem) -> Elem {
        for (i, x) in a.iter_mut().enumerate() {
            *x %= self.modulus(i);
        }
        a
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.rank()]
    }

    pub fn one(&self) -> Elem {
        self.one.clone()
    }

    pub fn basis_element(&self, i: usize) -> Elem {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Elem {
        (0..self.rank()).map(|i| add_mod(a[i], b[i], self.modulus(i))).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Elem {
        (0..self.rank()).map(|i| sub_mod(a[i], b[i], self.modulus(i))).collect()
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Elem {
        (0..self.rank()).map(|i| mul_mod(a[i], c, self.modulus(i))).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Elem {
        let n = self.rank();
        let q = ipow(self.p, self.char_exp());
        let mut acc = vec![0u64; n];
        for x in 0..n {
            if a[x] == 0 {
                continue;
            }
            for y in 0..n {
                if b[y] == 0 {
                    continue;
                }
                let c = mul_mod(a[x], b[y], q);
                for (z, t) in self.table[x][y].iter().enumerate() {
                    if *t != 0 {
                        acc[z] = add_mod(acc[z], mul_mod(c, *t, q), q);
                    }
                }
            }
        }
        self.reduce(acc)
    }

    pub fn pow(&self, a: &[u64], mut k: u64) -> Elem {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn is_idempotent(&self, e: &[u64]) -> bool {
        self.mul(e, e) == e
    }

    /// Smallest `k` with `t^k = 0`, if `t` is nilpotent.
    pub fn nilpotency_index(&self, t: &[u64]) -> Option<u32> {
        let mut x = t.to_vec();
        for k in 1..=self.length().max(1) {
            if self.is_zero(&x) {
                return Some(k);
            }
            x = self.mul(&x, t);
        }
        if self.is_zero(&x) {
            Some(self.length().max(1) + 1)
        } else {
            None
        }
    }

    /// The idempotent `ê = Σ_{i<n} C(2n-1, i) e^{2n-1-i} (1-e)^i`, where `n`
    /// is the nilpotency index of `e^2 - e`.
    pub fn lift_idempotent(&self, e: &[u64]) -> Result<Elem, RingError> {
        let e = self.reduce(e.to_vec());
        let t = self.sub(&self.mul(&e, &e), &e);
        let n = self.nilpotency_index(&t).ok_or(RingError::NotNilpotent)? as u64;
        if n == 1 {
            return Ok(e);
        }
        let q = ipow(self.p, self.char_exp());
        let mut row = vec![1u64];
        for _ in 0..2 * n - 1 {
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = add_mod(row[i - 1], row[i], q);
            }
            row = next;
        }
        let f = self.sub(&self.one, &e);
        let mut acc = self.zero();
        for i in 0..n {
            let c = row[i as usize];
            if c == 0 {
                continue;
            }
            let term = self.mul(&self.pow(&e, 2 * n - 1 - i), &self.pow(&f, i));
            acc = self.add(&acc, &self.scale(&term, c));
        }
        Ok(acc)
    }

    /// Structure constants modulo `p`.
    fn residue_table(&self) -> Vec<Vec<Elem>> {
        let p = self.p;
        self.table
            .iter()
            .map(|row| row.iter().map(|c| c.iter().map(|x| x % p).collect()).collect())
            .collect()
    }

    /// The unique frame: pairwise orthogonal primitive idempotents summing
    /// to 1, sorted by coordinates. Empty for the zero ring.
    pub fn frame(&self) -> Vec<Elem> {
        let n = self.rank();
        if n == 0 || self.is_zero(&self.one) {
            return Vec::new();
        }
        let p = self.p;
        let bar = FiniteCommRing {
            p,
            exps: vec![1; n],
            table: self.residue_table(),
            one: self.one.iter().map(|x| x % p).collect(),
        };
        // Fixed points of Frobenius form a copy of F_p^k, k = frame size.
        let frob: Vec<Elem> = (0..n).map(|i| bar.pow(&bar.basis_element(i), p)).collect();
        let rows: Vec<zmod::Row> = (0..n)
            .map(|j| zmod::Row {
                coeffs: (0..n).map(|i| sub_mod(frob[i][j], u64::from(i == j), p)).collect(),
                rhs: 0,
                exp: 1,
            })
            .collect();
        let fixed = zmod::solve(p, &vec![1; n], &rows).expect("homogeneous system").kernel;
        let mut parts = vec![bar.one()];
        for y in &fixed {
            let mut next = Vec::new();
            for f in &parts {
                for c in 0..p {
                    let shifted = bar.sub(y, &bar.scale(&bar.one, c));
                    let ind = bar.sub(&bar.one, &bar.pow(&shifted, p - 1));
                    let g = bar.mul(f, &ind);
                    if !bar.is_zero(&g) {
                        next.push(g);
                    }
                }
            }
            parts = next;
        }
        let mut out: Vec<Elem> = parts
            .iter()
            .map(|e| self.lift_idempotent(e).expect("idempotent modulo p lifts"))
            .collect();
        out.sort();
        out
    }

    /// Multiplication by `a` as a matrix acting on row vectors of
    /// coordinates modulo `p`.
    pub fn residue_mult_matrix(&self, a: &[u64]) -> Vec<Vec<u64>> {
        (0..self.rank())
            .map(|i| self.mul(&self.basis_element(i), a).iter().map(|x| x % self.p).collect())
            .collect()
    }

    /// The same ring with its basis reordered: new basis element `i` is old
    /// basis element `perm[i]`.
    pub fn permute_basis(&self, perm: &[usize]) -> FiniteCommRing {
        let n = self.rank();
        let remap = |v: &Elem| -> Elem { (0..n).map(|i| v[perm[i]]).collect() };
        let table = (0..n)
            .map(|x| (0..n).map(|y| remap(&self.table[perm[x]][perm[y]])).collect())
            .collect();
        FiniteCommRing { p: self.p, exps: perm.iter().map(|&j| self.exps[j]).collect(), table, one: remap(&self.one) }
    }
}

/// `Z/p^e`.
pub fn cyclic_ring(p: u64, e: u32) -> FiniteCommRing {
    FiniteCommRing::from_structure_constants(p, e, vec![vec![vec![1]]], vec![1]).expect("Z/p^e")
}

/// `(Z/p^e)[x]/(x^k)` with basis `1, x, ..., x^{k-1}`.
pub fn truncated_polynomial_ring(p: u64, e: u32, k: usize) -> FiniteCommRing {
    let table = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut v = vec![0u64; k];
                    if i + j < k {
                        v[i + j] = 1;
                    }
                    v
                })
                .collect()
        })
        .collect();
    let mut one = vec![0u64; k];
    one[0] = 1;
    FiniteCommRing::from_structure_constants(p, e, table, one).expect("truncated polynomial ring")
}

/// `R ⊕ S` over the same prime.
pub fn direct_sum(r: &FiniteCommRing, s: &FiniteCommRing) -> FiniteCommRing {
    assert_eq!(r.p, s.p, "direct sum of rings over different primes");
    let (n, m) = (r.rank(), s.rank());
    let mut table = vec![vec![vec![0u64; n + m]; n + m]; n + m];
    for x in 0..n {
        for y in 0..n {
            table[x][y][..n].copy_from_slice(&r.table[x][y]);
        }
    }
    for x in 0..m {
        for y in 0..m {
            table[n + x][n + y][n..].copy_from_slice(&s.table[x][y]);
        }
    }
    let mut exps = r.exps.clone();
    exps.extend_from_slice(&s.exps);
    let mut one = r.one.clone();
    one.extend_from_slice(&s.one);
    FiniteCommRing::with_orders(r.p, exps, table, one).expect("direct sum of rings")
}

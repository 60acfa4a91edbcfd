use perm_core::PermGroup;
use zmod::{inv_mod, mul_mod, sub_mod};

use crate::{AbelianError, AbelianPresentation, Matrix};

/// Row-reduced basis of a subspace of `F_p^n`.
#[derive(Clone, Debug)]
pub struct Subspace {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Subspace {
    pub fn new(p: u64) -> Self {
        Subspace { p, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|r| r.1.clone()).collect()
    }

    fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = sub_mod(*x, mul_mod(c, *y, p), p);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(v[piv], p).expect("prime field");
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = sub_mod(*x, mul_mod(c, *y, p), p);
                }
            }
        }
        self.rows.push((piv, v));
        self.rows.sort_by_key(|r| r.0);
        true
    }

    /// Vectors of the subspace with first nonzero coefficient 1 (one per
    /// line), in a fixed order.
    fn lines(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let d = self.dim();
        let p = self.p;
        let n = self.rows.first().map_or(0, |r| r.1.len());
        let total = (p as u128).pow(d as u32);
        (1..total).filter_map(move |mut idx| {
            let mut c = vec![0u64; d];
            for x in c.iter_mut() {
                *x = (idx % p as u128) as u64;
                idx /= p as u128;
            }
            if c.iter().find(|&&x| x != 0) != Some(&1) {
                return None;
            }
            let mut v = vec![0u64; n];
            for (k, (_, row)) in self.rows.iter().enumerate() {
                if c[k] != 0 {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = (*x + mul_mod(c[k], *y, p)) % p;
                    }
                }
            }
            Some(v)
        })
    }
}

fn apply(p: u64, v: &[u64], m: &Matrix) -> Vec<u64> {
    let n = v.len();
    (0..n)
        .map(|j| (0..n).fold(0u64, |acc, i| (acc + mul_mod(v[i], m[i][j], p)) % p))
        .collect()
}

/// Smallest subspace containing `v` and invariant under `ops`.
pub fn spin(p: u64, v: &[u64], ops: &[Matrix]) -> Subspace {
    let mut s = Subspace::new(p);
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        if s.insert(&w) {
            for m in ops {
                queue.push(apply(p, &w, m));
            }
        }
    }
    s
}

/// A minimal nonzero `ops`-invariant subspace of `F_p^n`: spin the first
/// basis vector, then shrink while some vector spins a proper subspace.
pub fn irreducible_subspace(p: u64, n: usize, ops: &[Matrix]) -> Subspace {
    let mut e1 = vec![0u64; n];
    e1[0] = 1;
    let mut w = spin(p, &e1, ops);
    'outer: loop {
        if w.dim() == 1 {
            return w;
        }
        let lines: Vec<Vec<u64>> = w.lines().collect();
        for v in lines {
            let s = spin(p, &v, ops);
            if s.dim() < w.dim() {
                w = s;
                continue 'outer;
            }
        }
        return w;
    }
}

/// Irreducible submodule of an elementary abelian group under `ops`
/// (matrices on its basis), as a subgroup.
pub fn irreducible_submodule(a: &AbelianPresentation, ops: &[Matrix]) -> Result<PermGroup, AbelianError> {
    if a.is_empty() {
        return Err(AbelianError::Trivial);
    }
    if a.exps().iter().any(|&e| e != 1) || a.prime_set().len() != 1 {
        return Err(AbelianError::NotElementary);
    }
    let p = a.primes()[0];
    let w = irreducible_subspace(p, a.len(), ops);
    let gens = w.basis().iter().map(|v| a.element(v)).collect();
    Ok(PermGroup::generated(a.degree(), gens))
}

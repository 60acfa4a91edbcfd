use std::sync::Arc;

use perm_core::{PermGroup, Permutation};
use zmod::{add_mod, ipow, sub_mod};

use crate::AbelianError;

/// An abelian permutation group with an independent basis of prime power
/// orders. Basis elements are grouped by prime (ascending), then by order
/// (descending), then canonical element order.
#[derive(Clone, Debug)]
pub struct AbelianPresentation {
    degree: usize,
    basis: Vec<Permutation>,
    primes: Vec<u64>,
    exps: Vec<u32>,
    group: PermGroup,
    coords: Arc<(Vec<Vec<u64>>, Vec<Vec<u64>>)>,
}

impl AbelianPresentation {
    /// Builds a presentation from a basis already known to be independent.
    pub fn from_basis(degree: usize, mut items: Vec<(Permutation, u64, u32)>) -> Self {
        items.retain(|(_, _, e)| *e > 0);
        items.sort_by(|a, b| a.1.cmp(&b.1).then(b.2.cmp(&a.2)).then(a.0.cmp(&b.0)));
        let basis: Vec<Permutation> = items.iter().map(|x| x.0.clone()).collect();
        let primes: Vec<u64> = items.iter().map(|x| x.1).collect();
        let exps: Vec<u32> = items.iter().map(|x| x.2).collect();
        let group = PermGroup::generated(degree, basis.clone());
        let moduli: Vec<u64> = primes.iter().zip(&exps).map(|(&p, &e)| ipow(p, e)).collect();
        let k = basis.len();
        let units: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
            .collect();
        let zero = vec![0u64; k];
        let m1 = moduli.clone();
        let m2 = moduli.clone();
        let strong = group.eval_strong(
            &units,
            &zero,
            move |a, b| (0..a.len()).map(|i| add_mod(a[i], b[i], m1[i])).collect(),
            move |a| (0..a.len()).map(|i| sub_mod(0, a[i], m2[i])).collect(),
        );
        let inv = strong
            .iter()
            .map(|a| (0..k).map(|i| sub_mod(0, a[i], moduli[i])).collect())
            .collect();
        AbelianPresentation { degree, basis, primes, exps, group, coords: Arc::new((strong, inv)) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Orders `p^e` of the basis elements.
    pub fn orders(&self) -> Vec<u64> {
        self.primes.iter().zip(&self.exps).map(|(&p, &e)| ipow(p, e)).collect()
    }

    pub fn modulus(&self, i: usize) -> u64 {
        ipow(self.primes[i], self.exps[i])
    }

    /// The subgroup generated by the basis.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.orders().iter().map(|&m| m as u128).product()
    }

    /// Distinct primes, ascending.
    pub fn prime_set(&self) -> Vec<u64> {
        let mut v = self.primes.clone();
        v.dedup();
        v
    }

    /// Index range of the basis elements for the prime `p`.
    pub fn prime_range(&self, p: u64) -> std::ops::Range<usize> {
        let start = self.primes.iter().position(|&q| q == p).unwrap_or(self.primes.len());
        let end = self.primes.iter().rposition(|&q| q == p).map_or(start, |i| i + 1);
        start..end
    }

    /// The presentation of the Sylow `p`-subgroup.
    pub fn prime_part(&self, p: u64) -> AbelianPresentation {
        let r = self.prime_range(p);
        let items = r.map(|i| (self.basis[i].clone(), p, self.exps[i])).collect();
        AbelianPresentation::from_basis(self.degree, items)
    }

    /// Coordinates of `g`, entry `i` modulo the order of basis element `i`.
    pub fn coordinates(&self, g: &Permutation) -> Option<Vec<u64>> {
        let k = self.basis.len();
        let moduli = self.orders();
        self.group.eval_element(g, &self.coords.0, &self.coords.1, &vec![0; k], |a, b| {
            (0..k).map(|i| add_mod(a[i], b[i], moduli[i])).collect()
        })
    }

    /// `Π basis[i]^{c[i]}`.
    pub fn element(&self, c: &[u64]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for (b, &x) in self.basis.iter().zip(c) {
            if x != 0 {
                acc = acc.mul(&b.pow(x as i64));
            }
        }
        acc
    }
}

/// Independent prime-power basis of an abelian group.
pub fn primary_decomposition(a: &PermGroup) -> Result<AbelianPresentation, AbelianError> {
    if !a.is_abelian() {
        return Err(AbelianError::NotAbelian);
    }
    let n = a.order();
    let mut items = Vec::new();
    for (p, k) in zmod::factorize(n) {
        let m = n / (p as u128).pow(k);
        let gens: Vec<Permutation> = a
            .gens()
            .iter()
            .map(|g| g.pow((m % g.order()) as i64))
            .filter(|g| !g.is_identity())
            .collect();
        for (b, e) in p_basis(a.degree(), p, &gens) {
            items.push((b, p, e));
        }
    }
    Ok(AbelianPresentation::from_basis(a.degree(), items))
}

/// Independent basis of the abelian `p`-group generated by `gens`.
pub fn p_basis(degree: usize, p: u64, gens: &[Permutation]) -> Vec<(Permutation, u32)> {
    let mut basis: Vec<(Permutation, u32)> = Vec::new();
    for y in gens {
        let pres = AbelianPresentation::from_basis(
            degree,
            basis.iter().map(|(b, e)| (b.clone(), p, *e)).collect(),
        );
        // order of y modulo the current span
        let mut z = y.clone();
        let mut k = 0u32;
        let c = loop {
            if let Some(c) = pres.coordinates(&z) {
                break c;
            }
            z = z.pow(p as i64);
            k += 1;
        };
        if k == 0 {
            continue;
        }
        let old: Vec<(Permutation, u32)> = pres.basis().iter().cloned().zip(pres.exps().iter().copied()).collect();
        let r = old.len();
        let emax = old.iter().map(|x| x.1).max().unwrap_or(0);
        let big = emax + k;
        let q = ipow(p, big);
        let mut rels: Vec<Vec<u64>> = Vec::new();
        for (i, (_, e)) in old.iter().enumerate() {
            let mut row = vec![0u64; r + 1];
            row[i] = ipow(p, *e);
            rels.push(row);
        }
        let mut row: Vec<u64> = c.iter().map(|&x| (q - x % q) % q).collect();
        row.push(ipow(p, k));
        rels.push(row);
        let qb = zmod::quotient_basis(p, big, r + 1, &rels);
        let mut gens_all: Vec<Permutation> = old.iter().map(|x| x.0.clone()).collect();
        gens_all.push(y.clone());
        basis = qb
            .gens
            .iter()
            .map(|(coords, e)| {
                let mut acc = Permutation::identity(degree);
                for (g, &x) in gens_all.iter().zip(coords) {
                    if x != 0 {
                        acc = acc.mul(&g.pow((x % q) as i64));
                    }
                }
                (acc, *e)
            })
            .collect();
    }
    basis
}

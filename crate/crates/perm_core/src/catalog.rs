//! Standard groups as permutation groups, matrix groups acting on vectors,
//! and groups given by multiplication tables.

use crate::{PermError, PermGroup, Permutation};

pub type Matrix = Vec<Vec<u64>>;

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("catalog permutation")
}

fn cycle_on(degree: usize, start: usize, len: usize) -> Permutation {
    let mut im: Vec<usize> = (0..degree).collect();
    for i in 0..len {
        im[start + i] = start + (i + 1) % len;
    }
    perm(im)
}

pub fn cyclic(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1);
    }
    PermGroup::generated(n, vec![cycle_on(n, 0, n)])
}

/// Direct product of cyclic groups of the given orders, on disjoint cycles.
pub fn abelian(orders: &[usize]) -> PermGroup {
    let orders: Vec<usize> = orders.iter().copied().filter(|&m| m > 1).collect();
    let degree: usize = orders.iter().sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut start = 0;
    for &m in &orders {
        gens.push(cycle_on(degree, start, m));
        start += m;
    }
    PermGroup::generated(degree, gens)
}

pub fn symmetric(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1);
    }
    let mut t: Vec<usize> = (0..n).collect();
    t.swap(0, 1);
    if n == 2 {
        return PermGroup::generated(2, vec![perm(t)]);
    }
    PermGroup::generated(n, vec![cycle_on(n, 0, n), perm(t)])
}

pub fn alternating(n: usize) -> PermGroup {
    if n <= 2 {
        return PermGroup::trivial(n.max(1));
    }
    let gens = (0..n - 2).map(|i| {
        let mut im: Vec<usize> = (0..n).collect();
        im[i] = i + 1;
        im[i + 1] = i + 2;
        im[i + 2] = i;
        perm(im)
    });
    PermGroup::generated(n, gens.collect())
}

/// Dihedral group of order `2n` acting on the `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    if n <= 2 {
        return abelian(&[2, 2][..n.min(2)]);
    }
    let refl = perm((0..n).map(|i| (n - i) % n).collect());
    PermGroup::generated(n, vec![cycle_on(n, 0, n), refl])
}

/// External direct product on concatenated point sets.
pub fn direct_product(groups: &[PermGroup]) -> PermGroup {
    let degree: usize = groups.iter().map(|g| g.degree()).sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut start = 0;
    for g in groups {
        for x in g.gens() {
            let mut im: Vec<usize> = (0..degree).collect();
            for p in 0..g.degree() {
                im[start + p] = start + x.image(p);
            }
            gens.push(perm(im));
        }
        start += g.degree();
    }
    PermGroup::generated(degree, gens)
}

fn vec_index(p: u64, v: &[u64]) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

/// Permutation induced by `v -> v m` on the nonzero row vectors of
/// `F_p^d`, listed in lexicographic order.
pub fn matrix_permutation(p: u64, m: &Matrix) -> Permutation {
    let d = m.len();
    let q = (p as usize).pow(d as u32);
    let mut im = Vec::with_capacity(q - 1);
    let mut v = vec![0u64; d];
    for idx in 1..q {
        let mut r = idx;
        for j in (0..d).rev() {
            v[j] = (r % p as usize) as u64;
            r /= p as usize;
        }
        let w: Vec<u64> = (0..d).map(|j| (0..d).map(|i| v[i] * m[i][j]).sum::<u64>() % p).collect();
        im.push(vec_index(p, &w) - 1);
    }
    perm(im)
}

pub fn matrix_group(p: u64, gens: &[Matrix]) -> PermGroup {
    let d = gens.first().map_or(1, |m| m.len());
    let degree = (p as usize).pow(d as u32) - 1;
    PermGroup::generated(degree, gens.iter().map(|m| matrix_permutation(p, m)).collect())
}

pub fn kronecker(p: u64, a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0u64; n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l] % p;
                }
            }
        }
    }
    out
}

fn identity_matrix(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect()
}

pub fn q8_matrices() -> Vec<Matrix> {
    vec![vec![vec![0, 2], vec![1, 0]], vec![vec![1, 1], vec![1, 2]]]
}

pub fn sl23_matrices() -> Vec<Matrix> {
    vec![vec![vec![1, 1], vec![0, 1]], vec![vec![0, 2], vec![1, 0]]]
}

pub fn d8_matrices() -> Vec<Matrix> {
    vec![vec![vec![0, 1], vec![1, 0]], vec![vec![1, 0], vec![0, 2]]]
}

/// ⟨(1 2 3 4), (1 3)⟩.
pub fn d8() -> PermGroup {
    dihedral(4)
}

/// Quaternion group, regular on the nonzero vectors of `F_3^2`.
pub fn q8() -> PermGroup {
    matrix_group(3, &q8_matrices())
}

/// SL(2,3) on the nonzero vectors of `F_3^2`.
pub fn sl23() -> PermGroup {
    matrix_group(3, &sl23_matrices())
}

/// Central product of two subgroups of GL(2,3) containing `-I`, realized
/// as `A ⊗ B` on `F_3^4`.
pub fn central_product_gl23(a: &[Matrix], b: &[Matrix]) -> PermGroup {
    let i2 = identity_matrix(2);
    let mut gens: Vec<Matrix> = a.iter().map(|x| kronecker(3, x, &i2)).collect();
    gens.extend(b.iter().map(|y| kronecker(3, &i2, y)));
    matrix_group(3, &gens)
}

/// Upper unitriangular 3×3 matrices over `F_p`, on `F_p^3 \ 0`.
pub fn heisenberg(p: u64) -> PermGroup {
    let x = vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]];
    let y = vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]];
    matrix_group(p, &[x, y])
}

/// `D8 × Q8 × SL(2,3) × (SL(2,3) ∘ SL(2,3))`, degree 100, order 442368.
pub fn four_factor_example() -> PermGroup {
    let sl = sl23_matrices();
    direct_product(&[d8(), q8(), sl23(), central_product_gl23(&sl, &sl)])
}

/// A group given by its multiplication table, with the labels of its
/// elements.
#[derive(Clone, Debug)]
pub struct TableGroup {
    pub group: PermGroup,
    /// `elements[i]` is the right regular image of the element labelled
    /// `i + offset`.
    pub elements: Vec<Permutation>,
    pub offset: usize,
    /// Labels (with offset) of the chosen generators.
    pub generator_labels: Vec<usize>,
}

impl TableGroup {
    pub fn label_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.iter().position(|x| x == g).map(|i| i + self.offset)
    }

    pub fn element(&self, label: usize) -> Option<&Permutation> {
        label.checked_sub(self.offset).and_then(|i| self.elements.get(i))
    }
}

/// Right regular representation of a multiplication table: label `i` acts
/// by `j -> table[j][i]`. Labels are `1..=n`, or `0..n` when the table uses 0.
pub fn group_from_table(table: &[Vec<usize>]) -> Result<TableGroup, PermError> {
    let n = table.len();
    if n == 0 {
        return Err(PermError::InvalidTable("empty table".into()));
    }
    if let Some(i) = table.iter().position(|r| r.len() != n) {
        return Err(PermError::InvalidTable(format!("row {} has length {}, expected {}", i, table[i].len(), n)));
    }
    let offset = if table.iter().flatten().any(|&x| x == 0) { 0 } else { 1 };
    let mut t = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = table[i][j];
            if x < offset || x - offset >= n {
                return Err(PermError::InvalidTable(format!("entry {} out of range", x)));
            }
            t[i][j] = x - offset;
        }
    }
    for i in 0..n {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for j in 0..n {
            if std::mem::replace(&mut row[t[i][j]], true) {
                return Err(PermError::InvalidTable(format!("not a Latin square: row {} repeats {}", i + offset, t[i][j] + offset)));
            }
            if std::mem::replace(&mut col[t[j][i]], true) {
                return Err(PermError::InvalidTable(format!("not a Latin square: column {} repeats {}", i + offset, t[j][i] + offset)));
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|j| t[e][j] == j && t[j][e] == j)) else {
        return Err(PermError::InvalidTable("no identity element".into()));
    };
    let elements: Vec<Permutation> =
        (0..n).map(|i| Permutation::from_raw((0..n).map(|j| t[j][i] as u32).collect())).collect();
    let mut b = crate::GroupBuilder::new(n);
    let mut labels = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        if i != e && b.add(x.clone()) {
            labels.push(i);
        }
    }
    for &s in &labels {
        for x in 0..n {
            for y in 0..n {
                if t[t[x][s]][y] != t[x][t[s][y]] {
                    return Err(PermError::InvalidTable(format!(
                        "not a group: associativity fails for ({}, {}, {})",
                        x + offset,
                        s + offset,
                        y + offset
                    )));
                }
            }
        }
    }
    let group = b.build();
    if group.order() != n as u128 {
        return Err(PermError::InvalidTable("table does not define a group".into()));
    }
    Ok(TableGroup {
        group,
        elements,
        offset,
        generator_labels: labels.into_iter().map(|i| i + offset).collect(),
    })
}

/// Multiplication table (0-based labels) of a permutation group, with its
/// elements in canonical order.
pub fn table_of(g: &PermGroup) -> (Vec<Permutation>, Vec<Vec<usize>>) {
    let elems = g.elements();
    let index: std::collections::HashMap<&Permutation, usize> =
        elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let table = elems.iter().map(|a| elems.iter().map(|b| index[&a.mul(b)]).collect()).collect();
    (elems, table)
}

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use perm_core::Permutation;

use crate::OracleError;

/// A finite group by its full multiplication table. Element 0 is the
/// identity.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    n: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    gens: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// `labels[i]` is the caller's label of element `i` in table mode.
    labels: Vec<usize>,
}

/// A subset of a [`SmallGroup`], usually a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    bits: FixedBitSet,
}

impl Subgroup {
    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        for x in elements {
            bits.insert(x);
        }
        Subgroup { bits }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn order(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn elements(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn meet_order(&self, other: &Subgroup) -> usize {
        self.bits.intersection(&other.bits).count()
    }
}

impl SmallGroup {
    /// Enumerate the group generated by `gens`, failing past `bound`
    /// elements.
    pub fn from_permutations(degree: usize, gens: &[Permutation], bound: usize) -> Result<Self, OracleError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(OracleError::DegreeMismatch);
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let one = Permutation::identity(degree);
        let mut elements = vec![one.clone()];
        let mut index = HashMap::from([(one, 0usize)]);
        // parent[j], generator index with elements[j] = elements[parent[j]] * gens[k]
        let mut parent = vec![(0usize, 0usize)];
        let mut right: Vec<Vec<u16>> = vec![Vec::new(); gens.len()];
        let mut i = 0;
        while i < elements.len() {
            for (k, g) in gens.iter().enumerate() {
                let y = elements[i].mul(g);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= bound || j >= u16::MAX as usize {
                            return Err(OracleError::TooLarge { bound });
                        }
                        index.insert(y.clone(), j);
                        elements.push(y);
                        parent.push((i, k));
                        j
                    }
                };
                right[k].push(j as u16);
            }
            i += 1;
        }
        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            table[a * n] = a as u16;
            for j in 1..n {
                let (p, k) = parent[j];
                table[a * n + j] = right[k][table[a * n + p] as usize];
            }
        }
        let gen_ids = gens.iter().map(|g| index[g]).collect();
        Ok(Self::finish(n, table, gen_ids, elements, index, (0..n).collect()))
    }

    /// A group from a 0-based multiplication table. The identity may carry
    /// any label; it is moved to index 0 internally and [`SmallGroup::label`]
    /// recovers the caller's labels.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, OracleError> {
        let n = rows.len();
        if n == 0 {
            return Err(OracleError::NotAGroup("empty table".into()));
        }
        if n >= u16::MAX as usize {
            return Err(OracleError::TooLarge { bound: u16::MAX as usize - 1 });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(OracleError::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(OracleError::NotAGroup(format!("row {i} is not a permutation")));
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in rows {
                if std::mem::replace(&mut seen[row[j]], true) {
                    return Err(OracleError::NotAGroup(format!("column {j} is not a permutation")));
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| OracleError::NotAGroup("no identity".into()))?;
        let mut labels: Vec<usize> = (0..n).collect();
        labels.swap(0, e);
        let mut pos = vec![0usize; n];
        for (i, &l) in labels.iter().enumerate() {
            pos[l] = i;
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = pos[rows[labels[a]][labels[b]]] as u16;
            }
        }
        let mut g = Self::finish(n, table, Vec::new(), Vec::new(), HashMap::new(), labels);
        g.gens = g.generating_set();
        // Light's test on a generating set
        for &a in &g.gens {
            for x in 0..n {
                let xa = g.mul(x, a);
                for y in 0..n {
                    if g.mul(xa, y) != g.mul(x, g.mul(a, y)) {
                        let l = &g.labels;
                        return Err(OracleError::NotAGroup(format!(
                            "({} {}) {} differs from {} ({} {})",
                            l[x], l[a], l[y], l[x], l[a], l[y]
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    fn finish(
        n: usize,
        table: Vec<u16>,
        gens: Vec<usize>,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        labels: Vec<usize>,
    ) -> Self {
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a * n + b] == 0).unwrap_or(0) as u16;
        }
        SmallGroup { n, table, inverse, gens, elements, index, labels }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    /// The permutation of element `i`, when built from permutations.
    pub fn element(&self, i: usize) -> Option<&Permutation> {
        self.elements.get(i)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The caller's label for element `i`.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_elements(self.n, 0..self.n)
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_elements(self.n, [0])
    }

    /// Closure of `start` under right multiplication by `gens`.
    pub fn close(&self, start: &Subgroup, gens: &[usize]) -> Subgroup {
        let mut bits = start.bits.clone();
        let mut queue: VecDeque<usize> = bits.ones().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !bits.put(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup { bits }
    }

    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        self.close(&self.trivial(), gens)
    }

    /// A generating set, chosen greedily among elements of largest order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.n).collect();
        let orders: Vec<usize> = (0..self.n).map(|x| self.element_order(x)).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
        let mut gens = Vec::new();
        let mut h = self.trivial();
        for x in by_order {
            if h.order() == self.n {
                break;
            }
            if !h.contains(x) {
                gens.push(x);
                h = self.close(&h, &gens);
            }
        }
        gens
    }

    /// A subgroup as a group in its own right, relabelled in increasing
    /// order of the original indices.
    pub fn subgroup(&self, h: &Subgroup) -> SmallGroup {
        let elts = h.elements();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in elts.iter().enumerate() {
            pos[x] = i;
        }
        let m = elts.len();
        let mut table = vec![0u16; m * m];
        for (i, &a) in elts.iter().enumerate() {
            for (j, &b) in elts.iter().enumerate() {
                table[i * m + j] = pos[self.mul(a, b)] as u16;
            }
        }
        let elements: Vec<Permutation> = if self.elements.is_empty() {
            Vec::new()
        } else {
            elts.iter().map(|&x| self.elements[x].clone()).collect()
        };
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let labels = elts.iter().map(|&x| self.labels[x]).collect();
        let mut g = Self::finish(m, table, Vec::new(), elements, index, labels);
        g.gens = g.generating_set();
        g
    }
}

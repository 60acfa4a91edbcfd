use std::sync::Arc;

use crate::chain::{Chain, SlpBuilder, Word};
use crate::slp::Slp;
use crate::{PermError, Permutation};

/// A permutation group given by generators, carrying a complete stabilizer
/// chain. Cloning is cheap; the chain is shared.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Arc<Chain>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.chain.order())
            .field("gens", &self.gens)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        Ok(Self::generated(degree, gens))
    }

    /// Like [`PermGroup::new`] for generators already known to have the
    /// right degree.
    pub fn generated(degree: usize, gens: Vec<Permutation>) -> Self {
        let chain = Chain::build(degree, &gens, &[]);
        PermGroup { degree, gens, chain: Arc::new(chain) }
    }

    /// Same group with a stabilizer chain whose base begins with `prefix`.
    pub fn with_base_prefix(degree: usize, gens: Vec<Permutation>, prefix: &[usize]) -> Self {
        let chain = Chain::build(degree, &gens, prefix);
        PermGroup { degree, gens, chain: Arc::new(chain) }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generated(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub(crate) fn chain(&self) -> &Chain {
        &self.chain
    }

    /// Exact order. Panics if it does not fit in 128 bits; use
    /// [`PermGroup::try_order`] on untrusted input.
    pub fn order(&self) -> u128 {
        self.chain.order().expect("group order exceeds 128 bits")
    }

    pub fn try_order(&self) -> Option<u128> {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong.iter().map(|s| s.perm.clone()).collect()
    }

    pub fn num_strong(&self) -> usize {
        self.chain.num_strong()
    }

    /// Fundamental orbit lengths along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain.contains(g)
    }

    /// Word for `g` in the strong generators.
    pub fn strong_word(&self, g: &Permutation) -> Option<Word> {
        if g.degree() != self.degree {
            return None;
        }
        self.chain.word(g)
    }

    /// A straight-line program over the generators evaluating to `g`, or
    /// `None` if `g` is not in the group.
    pub fn membership(&self, g: &Permutation) -> Result<Option<Slp>, PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        if g.is_identity() {
            return Ok(Some(Slp::identity(self.gens.len())));
        }
        if let Some(i) = self.gens.iter().position(|x| x == g) {
            return Ok(Some(Slp::generator(self.gens.len(), i)));
        }
        let Some(w) = self.chain.word(g) else { return Ok(None) };
        let mut b = self.slp_builder();
        let out = b.word(&w);
        Ok(Some(b.finish(vec![out])))
    }

    /// Relators presenting the group on its generators, as the outputs of
    /// one straight-line program. Identity outputs may occur.
    pub fn presentation(&self) -> Slp {
        let mut b = self.slp_builder();
        let outs = self.chain.relator_words().iter().map(|w| b.word(w)).collect();
        b.finish(outs)
    }

    pub fn slp_builder(&self) -> SlpBuilder<'_> {
        SlpBuilder::new(&self.chain, self.gens.len())
    }

    /// Images of the strong generators under the assignment
    /// `gens[i] -> gen_images[i]`, in any group given by closures.
    pub fn eval_strong<T: Clone>(
        &self,
        gen_images: &[T],
        one: &T,
        mul: impl Fn(&T, &T) -> T,
        inv: impl Fn(&T) -> T,
    ) -> Vec<T> {
        self.chain.eval_strong(gen_images, one, &mul, &inv)
    }

    /// Evaluate `g` through precomputed strong generator images.
    pub fn eval_element<T: Clone>(
        &self,
        g: &Permutation,
        strong_images: &[T],
        strong_inverses: &[T],
        one: &T,
        mul: impl Fn(&T, &T) -> T,
    ) -> Option<T> {
        let w = self.strong_word(g)?;
        let mut acc = one.clone();
        for (k, inv) in w {
            let f = if inv { &strong_inverses[k as usize] } else { &strong_images[k as usize] };
            acc = mul(&acc, f);
        }
        Some(acc)
    }

    /// All elements, sorted in canonical order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elems = vec![self.identity()];
        for l in (0..self.chain.levels.len()).rev() {
            let level = &self.chain.levels[l];
            let reps: Vec<Permutation> =
                level.orbit.iter().map(|&q| self.chain.rep(l, q as usize)).collect();
            let mut next = Vec::with_capacity(elems.len() * reps.len());
            for e in &elems {
                for u in &reps {
                    next.push(e.mul(u));
                }
            }
            elems = next;
        }
        elems.sort();
        elems
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// First conjugate `h^x` (h a generator here, x from `by`) that leaves the group.
    pub fn normalizer_witness(&self, by: &[Permutation]) -> Option<Permutation> {
        for x in by {
            for h in &self.gens {
                let c = h.conj(x);
                if !self.contains(&c) {
                    return Some(c);
                }
            }
        }
        None
    }

    pub fn is_normalized_by(&self, by: &[Permutation]) -> bool {
        self.normalizer_witness(by).is_none()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gens;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    /// The group generated by the current generators and `extra`,
    /// reusing the existing chain.
    pub fn extended(&self, extra: &[Permutation]) -> PermGroup {
        let mut b = GroupBuilder::from_group(self);
        for g in extra {
            b.add(g.clone());
        }
        b.build()
    }

    /// Orbits on points, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orb = vec![s];
            let mut i = 0;
            while i < orb.len() {
                let x = orb[i];
                for g in &self.gens {
                    let y = g.image(x);
                    if !seen[y] {
                        seen[y] = true;
                        orb.push(y);
                    }
                }
                i += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }
}

/// Incrementally grows a group, keeping its chain complete. Generators that
/// are already members are dropped.
pub struct GroupBuilder {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Chain,
}

impl GroupBuilder {
    pub fn new(degree: usize) -> Self {
        GroupBuilder { degree, gens: Vec::new(), chain: Chain::empty(degree) }
    }

    pub fn from_group(g: &PermGroup) -> Self {
        GroupBuilder { degree: g.degree, gens: g.gens.clone(), chain: (*g.chain).clone() }
    }

    /// Adds `g`; returns whether the group grew.
    pub fn add(&mut self, g: Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        if self.chain.add_generator(&g, self.gens.len()) {
            self.gens.push(g);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn order(&self) -> u128 {
        self.chain.order().expect("group order exceeds 128 bits")
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn build(self) -> PermGroup {
        PermGroup { degree: self.degree, gens: self.gens, chain: Arc::new(self.chain) }
    }
}

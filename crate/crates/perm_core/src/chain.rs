//! Deterministic Schreier-Sims with Schreier trees.
//!
//! Every strong generator remembers how it was obtained: either it is an
//! input generator, or it is a word in earlier strong generators. Sifting
//! records the strong generators it divides by, so membership comes with a
//! word and, through the definitions, with a straight-line program.

use crate::slp::{Line, Slp};
use crate::Permutation;

pub(crate) const NONE: u32 = u32::MAX;
pub(crate) const ROOT: u32 = u32::MAX - 1;

/// A word in strong generators: `(index, inverted)` read left to right.
pub type Word = Vec<(u32, bool)>;

#[derive(Clone, Debug)]
pub(crate) enum Def {
    Gen(usize),
    Word(Word),
}

#[derive(Clone, Debug)]
pub(crate) struct Strong {
    pub perm: Permutation,
    pub inv: Permutation,
    pub def: Def,
}

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    pub gens: Vec<u32>,
    pub orbit: Vec<u32>,
    /// For each point, the strong generator labelling the tree edge into it.
    pub edge: Vec<u32>,
    checked: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct Chain {
    pub(crate) degree: usize,
    pub(crate) strong: Vec<Strong>,
    pub(crate) levels: Vec<Level>,
}

impl Chain {
    pub(crate) fn empty(degree: usize) -> Self {
        Chain { degree, strong: Vec::new(), levels: Vec::new() }
    }

    /// Complete chain for `gens`, with base starting at `prefix`.
    pub(crate) fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut c = Chain::empty(degree);
        for &b in prefix {
            c.push_level(b as u32);
        }
        for (i, g) in gens.iter().enumerate() {
            if !g.is_identity() {
                c.add_strong(g.clone(), Def::Gen(i), 0);
            }
        }
        if !c.levels.is_empty() {
            c.complete(c.levels.len() - 1);
        }
        c
    }

    /// Add a new input generator (index `gen_index`) to a complete chain.
    /// Returns false when it was already a member.
    pub(crate) fn add_generator(&mut self, g: &Permutation, gen_index: usize) -> bool {
        if self.contains(g) {
            return false;
        }
        let j = self.add_strong(g.clone(), Def::Gen(gen_index), 0);
        self.complete(j);
        true
    }

    fn push_level(&mut self, base: u32) {
        let mut edge = vec![NONE; self.degree];
        edge[base as usize] = ROOT;
        self.levels.push(Level { base, gens: Vec::new(), orbit: vec![base], edge, checked: vec![0] });
    }

    fn add_strong(&mut self, perm: Permutation, def: Def, from: usize) -> usize {
        let idx = self.strong.len() as u32;
        let inv = perm.inverse();
        let mut j = self.levels.len();
        for l in from..self.levels.len() {
            let b = self.levels[l].base as usize;
            if perm.image(b) != b {
                j = l;
                break;
            }
        }
        if j == self.levels.len() {
            let b = perm.smallest_moved_point().expect("nonidentity strong generator");
            self.push_level(b as u32);
        }
        self.strong.push(Strong { perm, inv, def });
        for l in from..=j {
            self.add_to_level(l, idx);
        }
        j
    }

    fn add_to_level(&mut self, l: usize, idx: u32) {
        let strong = &self.strong;
        let level = &mut self.levels[l];
        level.gens.push(idx);
        let s = &strong[idx as usize].perm;
        let old = level.orbit.len();
        for pos in 0..old {
            let r = s.image(level.orbit[pos] as usize);
            if level.edge[r] == NONE {
                level.edge[r] = idx;
                level.orbit.push(r as u32);
                level.checked.push(0);
            }
        }
        let mut pos = old;
        while pos < level.orbit.len() {
            let q = level.orbit[pos] as usize;
            for &g in &level.gens {
                let r = strong[g as usize].perm.image(q);
                if level.edge[r] == NONE {
                    level.edge[r] = g;
                    level.orbit.push(r as u32);
                    level.checked.push(0);
                }
            }
            pos += 1;
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            match self.check_level(i as usize) {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Verify the Schreier generators of level `i`; on the first one that
    /// does not sift, add its residue and return the deepest level touched.
    fn check_level(&mut self, i: usize) -> Option<usize> {
        let mut pos = 0;
        while pos < self.levels[i].orbit.len() {
            let q = self.levels[i].orbit[pos] as usize;
            while (self.levels[i].checked[pos] as usize) < self.levels[i].gens.len() {
                let gi = self.levels[i].checked[pos] as usize;
                let s = self.levels[i].gens[gi];
                let r = self.strong[s as usize].perm.image(q);
                if self.levels[i].edge[r] == s {
                    self.levels[i].checked[pos] += 1;
                    continue;
                }
                let schreier = self
                    .rep(i, q)
                    .mul(&self.strong[s as usize].perm)
                    .mul(&self.rep_inv(i, r));
                let (res, _, factors) = self.sift(&schreier, i + 1);
                if res.is_identity() {
                    self.levels[i].checked[pos] += 1;
                    continue;
                }
                let mut word = self.path(i, q);
                word.push((s, false));
                word.extend(self.path_inv(i, r));
                word.extend(factors);
                let j = self.add_strong(res, Def::Word(word), i + 1);
                return Some(j);
            }
            pos += 1;
        }
        None
    }

    /// Strong generators along the tree path from the base to `q`.
    pub(crate) fn path(&self, l: usize, q: usize) -> Word {
        let mut w = self.path_inv(l, q);
        w.reverse();
        for x in w.iter_mut() {
            x.1 = false;
        }
        w
    }

    /// The word for `u_q^{-1}`.
    pub(crate) fn path_inv(&self, l: usize, q: usize) -> Word {
        let level = &self.levels[l];
        let mut w = Vec::new();
        let mut x = q;
        while level.edge[x] != ROOT {
            let k = level.edge[x];
            w.push((k, true));
            x = self.strong[k as usize].inv.image(x);
        }
        w
    }

    pub(crate) fn rep_inv(&self, l: usize, q: usize) -> Permutation {
        let level = &self.levels[l];
        let mut acc = Permutation::identity(self.degree);
        let mut x = q;
        while level.edge[x] != ROOT {
            let k = level.edge[x] as usize;
            acc = acc.mul(&self.strong[k].inv);
            x = self.strong[k].inv.image(x);
        }
        acc
    }

    pub(crate) fn rep(&self, l: usize, q: usize) -> Permutation {
        self.rep_inv(l, q).inverse()
    }

    /// Sift from level `from`: returns the residue, the level where sifting
    /// stopped (`levels.len()` if it went through) and the divided factors,
    /// so that `g * factors = residue`.
    pub(crate) fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize, Word) {
        let mut r = g.clone();
        let mut factors = Vec::new();
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let q = r.image(level.base as usize);
            if level.edge[q] == NONE {
                return (r, l, factors);
            }
            let mut x = q;
            while level.edge[x] != ROOT {
                let k = level.edge[x];
                r = r.mul(&self.strong[k as usize].inv);
                factors.push((k, true));
                x = self.strong[k as usize].inv.image(x);
            }
        }
        (r, self.levels.len(), factors)
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        let mut r = g.clone();
        for level in &self.levels {
            let q = r.image(level.base as usize);
            if level.edge[q] == NONE {
                return false;
            }
            let mut x = q;
            while level.edge[x] != ROOT {
                let k = level.edge[x] as usize;
                r = r.mul(&self.strong[k].inv);
                x = self.strong[k].inv.image(x);
            }
        }
        r.is_identity()
    }

    /// Word in strong generators equal to `g`, if `g` is a member.
    pub(crate) fn word(&self, g: &Permutation) -> Option<Word> {
        let (r, _, factors) = self.sift(g, 0);
        if !r.is_identity() {
            return None;
        }
        Some(factors.into_iter().rev().map(|(k, inv)| (k, !inv)).collect())
    }

    pub(crate) fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    /// Evaluate all strong generators in another group given the images of
    /// the input generators.
    pub(crate) fn eval_strong<T: Clone>(
        &self,
        gen_images: &[T],
        one: &T,
        mul: &impl Fn(&T, &T) -> T,
        inv: &impl Fn(&T) -> T,
    ) -> Vec<T> {
        let mut out: Vec<T> = Vec::with_capacity(self.strong.len());
        let mut out_inv: Vec<T> = Vec::with_capacity(self.strong.len());
        for s in &self.strong {
            let v = match &s.def {
                Def::Gen(i) => gen_images[*i].clone(),
                Def::Word(w) => {
                    let mut acc = one.clone();
                    for &(k, i) in w {
                        let f = if i { &out_inv[k as usize] } else { &out[k as usize] };
                        acc = mul(&acc, f);
                    }
                    acc
                }
            };
            out_inv.push(inv(&v));
            out.push(v);
        }
        out
    }

    /// Defining relators in the strong generators: for every level, point
    /// and level generator off the Schreier tree, `u_q s u_{qs}^{-1}` times
    /// the inverse of its sifted word.
    pub(crate) fn relator_words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for (i, level) in self.levels.iter().enumerate() {
            for &q in &level.orbit {
                for &s in &level.gens {
                    let r = self.strong[s as usize].perm.image(q as usize);
                    if level.edge[r] == s {
                        continue;
                    }
                    let g = self.rep(i, q as usize).mul(&self.strong[s as usize].perm).mul(&self.rep_inv(i, r));
                    let (res, _, factors) = self.sift(&g, i + 1);
                    debug_assert!(res.is_identity());
                    let mut w = self.path(i, q as usize);
                    w.push((s, false));
                    w.extend(self.path_inv(i, r));
                    w.extend(factors);
                    out.push(w);
                }
            }
        }
        out
    }

    pub(crate) fn num_strong(&self) -> usize {
        self.strong.len()
    }
}

/// Builds straight-line programs over the input generators from words in
/// strong generators, sharing the definitions of strong generators.
pub struct SlpBuilder<'a> {
    chain: &'a Chain,
    ngens: usize,
    lines: Vec<Line>,
    strong_line: Vec<Option<usize>>,
    inverse_line: Vec<Option<usize>>,
    gen_line: Vec<Option<usize>>,
}

impl<'a> SlpBuilder<'a> {
    pub(crate) fn new(chain: &'a Chain, ngens: usize) -> Self {
        SlpBuilder {
            chain,
            ngens,
            lines: Vec::new(),
            strong_line: vec![None; chain.strong.len()],
            inverse_line: vec![None; chain.strong.len()],
            gen_line: vec![None; ngens],
        }
    }

    fn push(&mut self, l: Line) -> usize {
        self.lines.push(l);
        self.lines.len() - 1
    }

    pub fn generator(&mut self, i: usize) -> usize {
        if let Some(x) = self.gen_line[i] {
            return x;
        }
        let x = self.push(Line::Gen(i));
        self.gen_line[i] = Some(x);
        x
    }

    fn strong(&mut self, k: usize, inverted: bool) -> usize {
        if inverted {
            if let Some(x) = self.inverse_line[k] {
                return x;
            }
            let base = self.strong(k, false);
            let x = self.push(Line::Inv(base));
            self.inverse_line[k] = Some(x);
            return x;
        }
        if let Some(x) = self.strong_line[k] {
            return x;
        }
        let x = match &self.chain.strong[k].def {
            Def::Gen(i) => self.generator(*i),
            Def::Word(w) => {
                let w = w.clone();
                self.word(&w).expect("derived strong generators are nontrivial words")
            }
        };
        self.strong_line[k] = Some(x);
        x
    }

    /// Line holding the product of the word, or `None` for the empty word.
    pub fn word(&mut self, w: &[(u32, bool)]) -> Option<usize> {
        let mut acc: Option<usize> = None;
        for &(k, inv) in w {
            let f = self.strong(k as usize, inv);
            acc = Some(match acc {
                None => f,
                Some(a) => self.push(Line::Mul(a, f)),
            });
        }
        acc
    }

    /// Product of already built lines (either may be the identity).
    pub fn product(&mut self, a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => Some(self.push(Line::Mul(a, b))),
        }
    }

    pub fn inverse(&mut self, a: Option<usize>) -> Option<usize> {
        a.map(|a| self.push(Line::Inv(a)))
    }

    pub fn finish(self, outputs: Vec<Option<usize>>) -> Slp {
        Slp { ngens: self.ngens, lines: self.lines, outputs }
    }
}

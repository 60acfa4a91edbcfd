use perm_core::quotient::Quotient;
use perm_core::{Line, PermError, PermGroup, Permutation, Slp};

use crate::{DecompError, Settings};

enum Realization {
    /// `M = G`: everything maps to the identity of degree 1.
    Whole,
    /// `M = 1`: the group acts on itself.
    Faithful,
    Action(Box<Quotient>),
}

/// A constructive presentation of `G` modulo a normal subgroup `M`: symbols
/// `X` with `f(x) ∈ G`, relators as straight-line programs over `X` that
/// evaluate into `M`, and a rewriting map `ℓ` from `G` to programs over `X`
/// with `ℓ(g)(f) ≡ g (mod M)`.
pub struct Presentation {
    group: PermGroup,
    modulus: PermGroup,
    gens: Vec<Permutation>,
    relators: Slp,
    image: PermGroup,
    realization: Realization,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("symbols", &self.gens.len())
            .field("relators", &self.relators.outputs.len())
            .finish()
    }
}

impl Presentation {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn modulus(&self) -> &PermGroup {
        &self.modulus
    }

    /// `f(x)` for each symbol.
    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn relators(&self) -> &Slp {
        &self.relators
    }

    /// `G/M` acting faithfully, generated by the images of the symbols.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn quotient_order(&self) -> u128 {
        self.image.order()
    }

    /// Image of `g` in the realization of `G/M`.
    pub fn map(&self, g: &Permutation) -> Permutation {
        match &self.realization {
            Realization::Whole => Permutation::identity(1),
            Realization::Faithful => g.clone(),
            Realization::Action(q) => q.map(g),
        }
    }

    /// `ℓ(g)`, or `None` when `g` is not in `G`.
    pub fn rewrite(&self, g: &Permutation) -> Option<Slp> {
        if !self.group.contains(g) {
            return None;
        }
        self.image.membership(&self.map(g)).ok().flatten()
    }

    /// Outputs of `w` evaluated at `f`.
    pub fn evaluate(&self, w: &Slp) -> Vec<Permutation> {
        w.evaluate(&self.gens, self.group.degree())
    }

    pub fn relator_values(&self) -> Vec<Permutation> {
        self.evaluate(&self.relators)
    }

    /// Relators evaluate into `M`, each `ℓ(f(x))` returns `f(x)` modulo `M`,
    /// and coset enumeration over the relators (when it finishes within
    /// `limit` cosets) gives `|G/M|`.
    pub fn verify(&self, limit: usize) -> bool {
        if !self.relator_values().iter().all(|r| self.modulus.contains(r)) {
            return false;
        }
        for g in self.group.gens() {
            let Some(w) = self.rewrite(g) else { return false };
            let back = w.evaluate_one(&self.gens, self.group.degree());
            if !self.modulus.contains(&back.inverse().mul(g)) {
                return false;
            }
        }
        match self.coset_count(limit) {
            Some(n) => n as u128 == self.quotient_order(),
            None => true,
        }
    }

    /// Size of the group defined by the relators, by coset enumeration.
    pub fn coset_count(&self, limit: usize) -> Option<usize> {
        let words = slp_words(&self.relators, 1 << 16)?;
        enumerate_cosets(self.gens.len(), &words, limit)
    }
}

/// A constructive presentation of `g` modulo the normal subgroup `m`, with
/// relators read off a stabilizer chain of a faithful action of `g/m`.
pub fn constructive_presentation(g: &PermGroup, m: &PermGroup, settings: &Settings) -> Result<Presentation, DecompError> {
    if !m.is_subgroup_of(g) {
        return Err(DecompError::NotSubgroup);
    }
    if let Some(w) = m.normalizer_witness(g.gens()) {
        return Err(PermError::NotNormal(w).into());
    }
    let realization = if m.order() == g.order() {
        Realization::Whole
    } else if m.is_trivial() {
        Realization::Faithful
    } else {
        Realization::Action(Box::new(Quotient::new(g, m, settings.coset_bound)?))
    };
    let mut pres = Presentation {
        group: g.clone(),
        modulus: m.clone(),
        gens: Vec::new(),
        relators: Slp { ngens: 0, lines: Vec::new(), outputs: Vec::new() },
        image: PermGroup::trivial(1),
        realization,
    };
    let mut images: Vec<Permutation> = Vec::new();
    for x in g.gens() {
        let y = pres.map(x);
        if !y.is_identity() && !images.contains(&y) {
            images.push(y);
            pres.gens.push(x.clone());
        }
    }
    if !images.is_empty() {
        let degree = images[0].degree();
        pres.image = PermGroup::generated(degree, images);
        pres.relators = pres.image.presentation();
    }
    Ok(pres)
}

type Letters = Vec<(usize, bool)>;

fn reduce_into(acc: &mut Letters, tail: impl IntoIterator<Item = (usize, bool)>) {
    for l in tail {
        match acc.last() {
            Some(&(g, inv)) if g == l.0 && inv != l.1 => {
                acc.pop();
            }
            _ => acc.push(l),
        }
    }
}

fn inverse_word(w: &Letters) -> Letters {
    w.iter().rev().map(|&(g, inv)| (g, !inv)).collect()
}

/// Freely reduced words for the outputs, or `None` past `cap` letters.
fn slp_words(slp: &Slp, cap: usize) -> Option<Vec<Letters>> {
    let mut vals: Vec<Letters> = Vec::with_capacity(slp.lines.len());
    for line in &slp.lines {
        let w = match *line {
            Line::Gen(i) => vec![(i, false)],
            Line::Mul(a, b) => {
                let mut w = vals[a].clone();
                reduce_into(&mut w, vals[b].iter().copied());
                w
            }
            Line::Inv(a) => inverse_word(&vals[a]),
            Line::Pow(a, e) => {
                let base = if e < 0 { inverse_word(&vals[a]) } else { vals[a].clone() };
                let mut w = Vec::new();
                for _ in 0..e.unsigned_abs() {
                    reduce_into(&mut w, base.iter().copied());
                    if w.len() > cap {
                        return None;
                    }
                }
                w
            }
        };
        if w.len() > cap {
            return None;
        }
        vals.push(w);
    }
    Some(slp.outputs.iter().map(|o| o.map_or_else(Vec::new, |i| vals[i].clone())).collect())
}

const UNDEF: usize = usize::MAX;

struct CosetTable {
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    limit: usize,
}

impl CosetTable {
    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, k: usize) -> usize {
        let mut l = k;
        while self.parent[l] != l {
            l = self.parent[l];
        }
        let mut m = k;
        while self.parent[m] != m {
            let n = self.parent[m];
            self.parent[m] = l;
            m = n;
        }
        l
    }

    fn define(&mut self, c: usize, x: usize) -> Option<()> {
        if self.rows.len() >= self.limit {
            return None;
        }
        let n = self.rows.len();
        let mut row = vec![UNDEF; self.rows[0].len()];
        row[x ^ 1] = c;
        self.rows.push(row);
        self.parent.push(n);
        self.rows[c][x] = n;
        Some(())
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.rows[e].len() {
                let f = self.rows[e][x];
                if f == UNDEF {
                    continue;
                }
                self.rows[f][x ^ 1] = UNDEF;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.rows[e1][x] != UNDEF {
                    let t = self.rows[e1][x];
                    self.merge(f1, t);
                } else if self.rows[f1][x ^ 1] != UNDEF {
                    let t = self.rows[f1][x ^ 1];
                    self.merge(e1, t);
                } else {
                    self.rows[e1][x] = f1;
                    self.rows[f1][x ^ 1] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Option<()> {
        if w.is_empty() {
            return Some(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.rows[f][w[i as usize]] != UNDEF {
                f = self.rows[f][w[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j >= i && self.rows[b][w[j as usize] ^ 1] != UNDEF {
                b = self.rows[b][w[j as usize] ^ 1];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Some(());
            }
            if i == j {
                let x = w[i as usize];
                self.rows[f][x] = b;
                self.rows[b][x ^ 1] = f;
                return Some(());
            }
            self.define(f, w[i as usize])?;
        }
    }
}

/// Index of the trivial subgroup in `⟨gens | relators⟩` by HLT coset
/// enumeration; `None` if more than `limit` cosets get defined.
pub fn enumerate_cosets(ngens: usize, relators: &[Vec<(usize, bool)>], limit: usize) -> Option<usize> {
    let rels: Vec<Vec<usize>> =
        relators.iter().map(|r| r.iter().map(|&(g, inv)| 2 * g + usize::from(inv)).collect()).collect();
    let mut t = CosetTable { rows: vec![vec![UNDEF; 2 * ngens]], parent: vec![0], queue: Vec::new(), limit };
    let mut c = 0;
    while c < t.rows.len() {
        for r in &rels {
            if !t.live(c) {
                break;
            }
            t.scan_and_fill(c, r)?;
        }
        if t.live(c) {
            for x in 0..2 * ngens {
                if t.rows[c][x] == UNDEF {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    Some((0..t.rows.len()).filter(|&k| t.live(k)).count())
}

use crate::{Hom, PermGroup, Permutation};

/// One operator acting on a group: conjugation by a permutation that
/// normalizes it, or a map given by generator images.
#[derive(Clone, Debug)]
pub enum Operator {
    Conj(Permutation),
    Map(Hom),
}

impl Operator {
    /// Image of `g`. Panics if `g` lies outside the domain of a map.
    pub fn apply(&self, g: &Permutation) -> Permutation {
        match self {
            Operator::Conj(x) => g.conj(x),
            Operator::Map(h) => h.apply(g).expect("operator applied outside its domain"),
        }
    }

    pub fn is_conjugation(&self) -> bool {
        matches!(self, Operator::Conj(_))
    }
}

/// An ordered set of operators.
#[derive(Clone, Debug, Default)]
pub struct OperatorSet {
    ops: Vec<Operator>,
}

impl OperatorSet {
    pub fn new() -> Self {
        OperatorSet { ops: Vec::new() }
    }

    pub fn from_vec(ops: Vec<Operator>) -> Self {
        OperatorSet { ops }
    }

    pub fn push(&mut self, op: Operator) {
        self.ops.push(op);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Operator> {
        self.ops.iter()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn as_slice(&self) -> &[Operator] {
        &self.ops
    }

    /// This set together with conjugation by each of `by`.
    pub fn with_conjugation(&self, by: &[Permutation]) -> OperatorSet {
        let mut ops = self.ops.clone();
        ops.extend(by.iter().filter(|x| !x.is_identity()).map(|x| Operator::Conj(x.clone())));
        OperatorSet { ops }
    }

    /// This set together with the inner automorphisms of `g`.
    pub fn with_inner(&self, g: &PermGroup) -> OperatorSet {
        self.with_conjugation(g.gens())
    }

    /// The first image `ω(h)` (h a generator of `h_group`) that leaves it.
    pub fn invariance_witness(&self, h_group: &PermGroup) -> Option<Permutation> {
        for op in &self.ops {
            for h in h_group.gens() {
                let y = op.apply(h);
                if !h_group.contains(&y) {
                    return Some(y);
                }
            }
        }
        None
    }

    pub fn stabilizes(&self, h_group: &PermGroup) -> bool {
        self.invariance_witness(h_group).is_none()
    }
}

impl<'a> IntoIterator for &'a OperatorSet {
    type Item = &'a Operator;
    type IntoIter = std::slice::Iter<'a, Operator>;
    fn into_iter(self) -> Self::IntoIter {
        self.ops.iter()
    }
}

use perm_core::algo::{derived_subgroup, normal_closure_ops};
use perm_core::{OperatorSet, PermGroup, Permutation};

use crate::endo::operator_matrix;
use crate::{irreducible_submodule, primary_decomposition, AbelianError, AbelianPresentation};

/// A minimal `(Ω ∪ G)`-subgroup of `g`.
pub fn minimal_normal_subgroup(g: &PermGroup, ops: &OperatorSet) -> Result<PermGroup, AbelianError> {
    if g.is_trivial() {
        return Err(AbelianError::Trivial);
    }
    let mut m = last_derived(g);
    loop {
        if m.is_abelian() {
            return minimal_in_abelian(g, &m, ops);
        }
        // m is perfect: descend through proper closures
        let mut best: Option<PermGroup> = None;
        for x in m.elements().iter().skip(1) {
            let n = normal_closure_ops(g, std::slice::from_ref(x), ops);
            if n.order() < m.order() && best.as_ref().map_or(true, |b| n.order() < b.order()) {
                best = Some(n);
            }
        }
        match best {
            None => return Ok(m),
            Some(n) => m = last_derived(&n),
        }
    }
}

fn last_derived(g: &PermGroup) -> PermGroup {
    let mut cur = g.clone();
    loop {
        let d = derived_subgroup(&cur);
        if d.is_trivial() || d.order() == cur.order() {
            return cur;
        }
        cur = d;
    }
}

/// Minimal `(Ω ∪ G)`-subgroup inside an abelian `(Ω ∪ G)`-subgroup `a`.
fn minimal_in_abelian(g: &PermGroup, a: &PermGroup, ops: &OperatorSet) -> Result<PermGroup, AbelianError> {
    let pres = primary_decomposition(a)?;
    let p = pres.primes()[0];
    let part = pres.prime_part(p);
    let socle: Vec<(Permutation, u64, u32)> = part
        .basis()
        .iter()
        .zip(part.exps())
        .map(|(b, &e)| (b.pow(zmod::ipow(p, e - 1) as i64), p, 1))
        .collect();
    let v = AbelianPresentation::from_basis(g.degree(), socle);
    let mut mats = Vec::new();
    for x in g.gens() {
        mats.push(operator_matrix(&v, |h| h.conj(x))?);
    }
    for op in ops {
        mats.push(operator_matrix(&v, |h| op.apply(h))?);
    }
    irreducible_submodule(&v, &mats)
}

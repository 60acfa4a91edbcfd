//! Subgroup constructions: closures, commutators, central series and
//! centralizers.

use std::collections::HashMap;

use crate::{GroupBuilder, OperatorSet, PermError, PermGroup, Permutation};

/// Smallest subgroup containing `seeds` that is invariant under conjugation
/// by `conj_by` and under every operator in `ops`.
pub fn invariant_closure(
    degree: usize,
    seeds: &[Permutation],
    conj_by: &[Permutation],
    ops: &OperatorSet,
) -> PermGroup {
    let mut b = GroupBuilder::new(degree);
    for s in seeds {
        b.add(s.clone());
    }
    let mut i = 0;
    while i < b.gens().len() {
        let h = b.gens()[i].clone();
        for x in conj_by {
            b.add(h.conj(x));
        }
        for op in ops {
            b.add(op.apply(&h));
        }
        i += 1;
    }
    b.build()
}

/// Normal closure of `s` in `g`.
pub fn normal_closure(g: &PermGroup, s: &[Permutation]) -> Result<PermGroup, PermError> {
    for x in s {
        if !g.contains(x) {
            return Err(PermError::NotMember(x.clone()));
        }
    }
    Ok(invariant_closure(g.degree(), s, g.gens(), &OperatorSet::new()))
}

/// The smallest (Ω ∪ G)-subgroup of `g` containing `s`.
pub fn normal_closure_ops(g: &PermGroup, s: &[Permutation], ops: &OperatorSet) -> PermGroup {
    invariant_closure(g.degree(), s, g.gens(), ops)
}

/// `[a, b]` for subgroups normalized by `g`, as a normal subgroup of `g`.
pub fn commutator_subgroup(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> PermGroup {
    let mut seeds = Vec::new();
    for x in a.gens() {
        for y in b.gens() {
            let c = x.comm(y);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    invariant_closure(g.degree(), &seeds, g.gens(), &OperatorSet::new())
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    commutator_subgroup(g, g, g)
}

/// `[G, γ1 = G, γ2, ...]`, stopping at the trivial group or at the first
/// repeated term (which is included once).
pub fn lower_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut out = vec![g.clone()];
    loop {
        let last = out.last().expect("nonempty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(g, last, g);
        let repeat = next.order() == last.order();
        out.push(next);
        if repeat {
            break;
        }
    }
    out
}

/// `C_G(x)` for a permutation `x` whose conjugacy orbit under `g` is
/// enumerated explicitly.
pub fn centralizer_of_element(g: &PermGroup, x: &Permutation) -> PermGroup {
    if g.gens().iter().all(|s| s.commutes_with(x)) {
        return g.clone();
    }
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut orbit = vec![x.clone()];
    let mut trans = vec![g.identity()];
    index.insert(x.clone(), 0);
    let mut i = 0;
    while i < orbit.len() {
        for s in g.gens() {
            let y = orbit[i].conj(s);
            if !index.contains_key(&y) {
                index.insert(y.clone(), orbit.len());
                trans.push(trans[i].mul(s));
                orbit.push(y);
            }
        }
        i += 1;
    }
    let target = g.order() / orbit.len() as u128;
    let mut b = GroupBuilder::new(g.degree());
    if target == 1 {
        return b.build();
    }
    'outer: for i in 0..orbit.len() {
        for s in g.gens() {
            let j = index[&orbit[i].conj(s)];
            let sg = trans[i].mul(s).mul(&trans[j].inverse());
            if !sg.is_identity() {
                b.add(sg);
                if b.order() == target {
                    break 'outer;
                }
            }
        }
    }
    debug_assert_eq!(b.order(), target);
    b.build()
}

/// `C_G(S)` for a set of permutations, as iterated element centralizers.
pub fn centralizer(g: &PermGroup, s: &[Permutation]) -> PermGroup {
    let mut c = g.clone();
    for x in s {
        if c.gens().iter().all(|y| y.commutes_with(x)) {
            continue;
        }
        c = centralizer_of_element(&c, x);
    }
    c
}

/// `C_G(H)` for `H` normal in `G`.
pub fn centralizer_of_normal(g: &PermGroup, h: &PermGroup) -> Result<PermGroup, PermError> {
    for x in h.gens() {
        if !g.contains(x) {
            return Err(PermError::NotMember(x.clone()));
        }
    }
    if let Some(w) = h.normalizer_witness(g.gens()) {
        return Err(PermError::NotNormal(w));
    }
    Ok(centralizer(g, h.gens()))
}

pub fn center(g: &PermGroup) -> PermGroup {
    centralizer(g, g.gens())
}

/// Whether `[a, b] ≤ target`, checked on generators (valid when `target`
/// is normal in a group normalizing `a` and `b`).
pub fn commutators_inside(a: &PermGroup, b: &PermGroup, target: &PermGroup) -> bool {
    a.gens().iter().all(|x| b.gens().iter().all(|y| target.contains(&x.comm(y))))
}

/// The Sylow p-subgroup of a nilpotent group: generated by the `m`-th powers
/// of the generators, where `|G| = p^a m`.
pub fn nilpotent_sylow(g: &PermGroup, p: u64) -> PermGroup {
    let mut m = g.order();
    while m % p as u128 == 0 {
        m /= p as u128;
    }
    let gens: Vec<Permutation> = g
        .gens()
        .iter()
        .map(|x| x.pow((m % x.order()) as i64))
        .filter(|x| !x.is_identity())
        .collect();
    PermGroup::generated(g.degree(), gens)
}

/// `[1, ζ1, ζ2, ...]`, stopping at the first term that does not grow
/// (not repeated). Each step is the preimage of the center of a quotient.
pub fn upper_central_series(g: &PermGroup, bound: usize) -> Result<Vec<PermGroup>, PermError> {
    let mut out = vec![PermGroup::trivial(g.degree())];
    let mut z = center(g);
    loop {
        if z.order() == out.last().expect("nonempty").order() {
            break;
        }
        out.push(z.clone());
        if z.order() == g.order() {
            break;
        }
        let q = crate::quotient::Quotient::new(g, &z, bound)?;
        let zq = center(q.image());
        z = q.preimage_group(&zq);
    }
    Ok(out)
}

/// `ζ_c(G)`.
pub fn upper_central_term(g: &PermGroup, c: usize, bound: usize) -> Result<PermGroup, PermError> {
    let mut z = PermGroup::trivial(g.degree());
    for _ in 0..c {
        if z.is_trivial() {
            z = center(g);
        } else {
            if z.order() == g.order() {
                break;
            }
            let q = crate::quotient::Quotient::new(g, &z, bound)?;
            let next = q.preimage_group(&center(q.image()));
            if next.order() == z.order() {
                break;
            }
            z = next;
        }
    }
    Ok(z)
}

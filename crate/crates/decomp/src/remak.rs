use abelian::{minimal_normal_subgroup, remak_abelian};
use bilinear::{bi_of_group, frame_decomposition_with};
use perm_core::algo::{center, centralizer_of_normal, commutators_inside, nilpotent_sylow, upper_central_term};
use perm_core::quotient::Quotient;
use perm_core::{Hom, Operator, OperatorSet, PermGroup, Permutation};

use crate::{centralize_refine, extend, merge, quotient_operators, restrict_operators};
use crate::{DecompError, Decomposition, Settings};

/// Remak decomposition of a nilpotent group of class at most 2 under
/// operators that stabilize it.
pub fn remak_class2(g: &PermGroup, ops: &OperatorSet, settings: &Settings) -> Result<Decomposition, DecompError> {
    let factors = class2(g, ops, settings)?;
    Ok(Decomposition::new(g, factors, ops, true))
}

fn class2(g: &PermGroup, ops: &OperatorSet, settings: &Settings) -> Result<Vec<PermGroup>, DecompError> {
    if g.is_abelian() {
        return Ok(remak_abelian(g, ops)?);
    }
    let z = center(g);
    if !commutators_inside(g, g, &z) {
        return Err(DecompError::ClassTooLarge);
    }
    let mut out = Vec::new();
    for (p, _) in zmod::factorize(g.order()) {
        let sylow = nilpotent_sylow(g, p);
        if sylow.is_abelian() {
            out.extend(remak_abelian(&sylow, ops)?);
            continue;
        }
        let b = bi_of_group(&sylow)?;
        let mut mats = Vec::new();
        for op in ops {
            // inner automorphisms act trivially on both V and W
            if matches!(op, Operator::Conj(x) if g.contains(x)) {
                continue;
            }
            let m = b
                .induced(|x| op.apply(x))
                .ok_or_else(|| DecompError::Hypothesis("operator does not stabilize the Sylow subgroup".into()))?;
            mats.push(m);
        }
        let blocks = frame_decomposition_with(&b, &mats)?;
        let zeta = b.zeta().expect("built from a group").clone();
        let hs: Vec<PermGroup> = blocks
            .iter()
            .map(|blk| {
                let reps = blk.v_basis.iter().map(|(c, _)| b.v_element(c).expect("built from a group"));
                zeta.extended(&reps.collect::<Vec<_>>())
            })
            .collect();
        let zs = remak_abelian(&zeta, ops)?;
        out.extend(merge(&sylow, &zs, &hs, ops, settings)?);
    }
    Ok(out)
}

/// Remak decomposition of `g` under operators acting as automorphisms.
pub fn find_remak(g: &PermGroup, ops: &OperatorSet, settings: &Settings) -> Result<Decomposition, DecompError> {
    let factors = find(g, ops, settings)?;
    Ok(Decomposition::new(g, factors, ops, true))
}

fn find(g: &PermGroup, ops: &OperatorSet, settings: &Settings) -> Result<Vec<PermGroup>, DecompError> {
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    if g.is_abelian() {
        return Ok(remak_abelian(g, ops)?);
    }
    let z1 = center(g);
    let with_g = ops.with_inner(g);
    if z1.is_trivial() {
        let n = minimal_normal_subgroup(g, ops)?;
        let c = centralizer_of_normal(g, &n)?;
        if c.is_trivial() {
            return Ok(vec![g.clone()]);
        }
        let k = find(&c, &with_g, settings)?;
        return Ok(extend(g, &k, &with_g, settings)?.factors());
    }
    let z2 = upper_central_term(g, 2, settings.coset_bound)?;
    if z2.order() == g.order() {
        return class2(g, ops, settings);
    }
    let a = class2(&z2, &with_g, settings)?;
    let q = Quotient::new(g, &z1, settings.coset_bound)?;
    let q_ops = quotient_operators(ops, &q)?;
    let upstairs: Vec<PermGroup> = find(q.image(), &q_ops, settings)?
        .iter()
        .map(|h| q.preimage_group(h).extended(z2.gens()))
        .filter(|h| h.order() > z2.order())
        .collect();
    let hs = centralize_refine(g, &upstairs, 2, settings)?;
    merge(g, &a, &hs, ops, settings)
}

/// Split off kernels and images of powers of operators that are not
/// bijective (Fitting), then decompose each piece under the restricted
/// operators. Pieces on which an operator is nilpotent keep it.
pub fn reduce_general_operators(
    g: &PermGroup,
    ops: &OperatorSet,
    settings: &Settings,
) -> Result<Decomposition, DecompError> {
    let factors = reduce(g, ops, settings)?;
    Ok(Decomposition::new(g, factors, ops, true))
}

fn reduce(g: &PermGroup, ops: &OperatorSet, settings: &Settings) -> Result<Vec<PermGroup>, DecompError> {
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    for op in ops {
        if op.is_conjugation() {
            continue;
        }
        let mut images: Vec<Permutation> = g.gens().iter().map(|x| op.apply(x)).collect();
        if let Some(y) = images.iter().find(|y| !g.contains(y)) {
            return Err(DecompError::NotInvariant(y.clone()));
        }
        if !Hom::new(g, images.clone(), g.degree())?.is_homomorphism() {
            return Err(DecompError::OperatorNotHomomorphism);
        }
        let mut size = PermGroup::generated(g.degree(), images.clone()).order();
        if size == g.order() {
            continue;
        }
        loop {
            let next: Vec<Permutation> = images.iter().map(|x| op.apply(x)).collect();
            let s = PermGroup::generated(g.degree(), next.clone()).order();
            images = next;
            if s == size {
                break;
            }
            size = s;
        }
        let image = PermGroup::generated(g.degree(), images.clone());
        if image.is_trivial() {
            continue;
        }
        let kernel = Hom::new(g, images, g.degree())?.kernel();
        if !(ops.stabilizes(&kernel) && ops.stabilizes(&image)) {
            continue;
        }
        let mut out = Vec::new();
        for part in [kernel, image] {
            let part_ops = restrict_operators(ops, &part)?;
            out.extend(reduce(&part, &part_ops, settings)?);
        }
        return Ok(out);
    }
    let autos = OperatorSet::from_vec(ops.iter().filter(|op| !is_zero(op, g)).cloned().collect());
    find(g, &autos, settings)
}

fn is_zero(op: &Operator, g: &PermGroup) -> bool {
    !op.is_conjugation() && g.gens().iter().all(|x| op.apply(x).is_identity())
}

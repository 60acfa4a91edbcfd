use perm_core::algo::upper_central_series;
use perm_core::{OperatorSet, PermGroup, Permutation};

use crate::{direct_complement, Complement, DecompError, Settings};

/// Members of the input kept as direct factors, and the complement of
/// their product when it is nontrivial.
#[derive(Clone, Debug)]
pub struct Extension {
    pub kept: Vec<PermGroup>,
    pub leftover: Option<PermGroup>,
}

impl Extension {
    pub fn factors(&self) -> Vec<PermGroup> {
        let mut out = self.kept.clone();
        out.extend(self.leftover.iter().cloned());
        out
    }
}

fn join(degree: usize, groups: &[&PermGroup]) -> PermGroup {
    PermGroup::generated(degree, groups.iter().flat_map(|h| h.gens().iter().cloned()).collect())
}

/// Greedy extension of a direct decomposition `k` of a subgroup to one of
/// `g`: members are tried in input order and kept whenever the product of
/// the kept members with the new one has a direct complement.
///
/// A member refused once stays refused (a direct factor of a direct factor
/// is a direct factor), so one pass suffices.
pub fn extend(
    g: &PermGroup,
    k: &[PermGroup],
    ops: &OperatorSet,
    settings: &Settings,
) -> Result<Extension, DecompError> {
    let degree = g.degree();
    for h in k {
        if !h.is_subgroup_of(g) {
            return Err(DecompError::NotSubgroup);
        }
        if let Some(w) = h.normalizer_witness(g.gens()).or_else(|| ops.invariance_witness(h)) {
            return Err(DecompError::Hypothesis(format!("member not invariant, witness {w}")));
        }
    }
    let refs: Vec<&PermGroup> = k.iter().collect();
    if join(degree, &refs).order() != k.iter().map(|h| h.order()).product::<u128>() {
        return Err(DecompError::Hypothesis("members do not form a direct product".into()));
    }
    let mut kept: Vec<PermGroup> = Vec::new();
    let mut floor = g.clone();
    for h in k {
        if h.is_trivial() {
            continue;
        }
        let mut parts: Vec<&PermGroup> = kept.iter().collect();
        parts.push(h);
        let candidate = join(degree, &parts);
        if let Complement::Found(c) = direct_complement(g, &candidate, ops, settings)? {
            kept.push(h.clone());
            floor = c;
        }
    }
    let leftover = if floor.is_trivial() { None } else { Some(floor) };
    Ok(Extension { kept, leftover })
}

/// Glue a decomposition `a` of a normal subgroup to the members of `hs`
/// one at a time: `K = Extend(⟨H, K⟩, K)`. Operators are taken together
/// with conjugation by `g`.
pub fn merge(
    g: &PermGroup,
    a: &[PermGroup],
    hs: &[PermGroup],
    ops: &OperatorSet,
    settings: &Settings,
) -> Result<Vec<PermGroup>, DecompError> {
    let ops = ops.with_inner(g);
    let mut k: Vec<PermGroup> = a.iter().filter(|x| !x.is_trivial()).cloned().collect();
    for h in hs {
        let mut parts: Vec<&PermGroup> = vec![h];
        parts.extend(k.iter());
        let l = join(g.degree(), &parts);
        k = extend(&l, &k, &ops, settings)?.factors();
    }
    Ok(k)
}

/// Fuse members of `hs` (each containing `ζ_c(g)`) until every fused block
/// `K` has `ζ_c(K) = ζ_c(g)`. Two blocks are fused when an element of the
/// upper central series of one fails to be central enough against the
/// other.
pub fn centralize_refine(
    g: &PermGroup,
    hs: &[PermGroup],
    c: usize,
    settings: &Settings,
) -> Result<Vec<PermGroup>, DecompError> {
    let series = upper_central_series(g, settings.coset_bound)?;
    let term = |i: usize| series[i.min(series.len() - 1)].clone();
    let zc = term(c);
    for h in hs {
        if !zc.is_subgroup_of(h) {
            return Err(DecompError::Hypothesis("member does not contain the central term".into()));
        }
    }
    let n = hs.len();
    let mut block: Vec<usize> = (0..n).collect();
    loop {
        let ids: Vec<usize> = {
            let mut v = block.clone();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut fused = false;
        for &b in &ids {
            let members: Vec<&PermGroup> = (0..n).filter(|&i| block[i] == b).map(|i| &hs[i]).collect();
            let k = join(g.degree(), &members);
            let kz = upper_central_series(&k, settings.coset_bound)?;
            let kc = &kz[c.min(kz.len() - 1)];
            if kc.order() == zc.order() {
                continue;
            }
            let others: Vec<(usize, &PermGroup)> = (0..n).filter(|&i| block[i] != b).map(|i| (block[i], &hs[i])).collect();
            let mut links: Vec<usize> = Vec::new();
            for z in kc.gens() {
                collect_links(z, c, &k, &others, &term, &mut links);
            }
            links.sort_unstable();
            links.dedup();
            if links.is_empty() {
                // no single culprit: fall back to one block
                links = ids.iter().copied().filter(|&x| x != b).collect();
            }
            for x in block.iter_mut() {
                if links.contains(x) {
                    *x = b;
                }
            }
            fused = !links.is_empty();
            if fused {
                break;
            }
        }
        if !fused {
            break;
        }
    }
    let mut order: Vec<usize> = Vec::new();
    for &b in &block {
        if !order.contains(&b) {
            order.push(b);
        }
    }
    Ok(order
        .iter()
        .map(|&b| {
            let members: Vec<&PermGroup> = (0..n).filter(|&i| block[i] == b).map(|i| &hs[i]).collect();
            join(g.degree(), &members)
        })
        .collect())
}

/// Blocks whose generators show that `z` (an element of `ζ_level(K)`) is
/// not in `ζ_level(G)`.
fn collect_links(
    z: &Permutation,
    level: usize,
    k: &PermGroup,
    others: &[(usize, &PermGroup)],
    term: &impl Fn(usize) -> PermGroup,
    links: &mut Vec<usize>,
) {
    if level == 0 || z.is_identity() {
        return;
    }
    let below = term(level - 1);
    for (b, h) in others {
        if h.gens().iter().any(|x| !below.contains(&z.comm(x))) {
            links.push(*b);
        }
    }
    for x in k.gens() {
        let w = z.comm(x);
        if !below.contains(&w) {
            collect_links(&w, level - 1, k, others, term, links);
        }
    }
}

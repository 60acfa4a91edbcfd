use crate::{OracleError, SmallGroup};

/// Whether `g ≅ h`, by backtracking over images of a generating set of
/// `g`. Both orders must be at most `bound`.
pub fn isomorphic_small(g: &SmallGroup, h: &SmallGroup, bound: usize) -> Result<bool, OracleError> {
    if g.order() > bound || h.order() > bound {
        return Err(OracleError::TooLarge { bound });
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    let og: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let oh: Vec<usize> = (0..h.order()).map(|x| h.element_order(x)).collect();
    let (mut sg, mut sh) = (og.clone(), oh.clone());
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh || g.is_abelian() != h.is_abelian() {
        return Ok(false);
    }
    let gens = g.generating_set();
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&x| (0..h.order()).filter(|&y| oh[y] == og[x]).collect()).collect();
    let mut images = Vec::new();
    Ok(search(g, h, &gens, &candidates, &mut images))
}

fn search(g: &SmallGroup, h: &SmallGroup, gens: &[usize], candidates: &[Vec<usize>], images: &mut Vec<usize>) -> bool {
    let k = images.len();
    if k == gens.len() {
        return true;
    }
    for &y in &candidates[k] {
        images.push(y);
        if consistent(g, h, &gens[..=k], images) && search(g, h, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extend `gens[i] ↦ images[i]` along right multiplication and check that
/// the result is a well-defined injection on `⟨gens⟩`.
fn consistent(g: &SmallGroup, h: &SmallGroup, gens: &[usize], images: &[usize]) -> bool {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for (&a, &b) in gens.iter().zip(images) {
            let (xa, yb) = (g.mul(x, a), h.mul(map[x], b));
            if map[xa] == usize::MAX {
                if used[yb] {
                    return false;
                }
                used[yb] = true;
                map[xa] = yb;
                stack.push(xa);
            } else if map[xa] != yb {
                return false;
            }
        }
    }
    true
}

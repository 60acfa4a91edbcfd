use perm_core::{OperatorSet, PermGroup, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zmod::poly;

use crate::endo::{endomorphism_ring_matrices, operator_matrices, EndRing, Matrix};
use crate::presentation::p_basis;
use crate::{primary_decomposition, AbelianError, AbelianPresentation};

const EXHAUSTIVE_LIMIT: u128 = 1 << 10;
const RANDOM_TRIES: usize = 256;

/// Remak decomposition of an abelian group under operators that stabilize
/// it. Factors are listed by prime, ascending.
pub fn remak_abelian(a: &PermGroup, ops: &OperatorSet) -> Result<Vec<PermGroup>, AbelianError> {
    let pres = primary_decomposition(a)?;
    let mut out = Vec::new();
    for p in pres.prime_set() {
        split(&pres.prime_part(p), ops, &mut out)?;
    }
    Ok(out)
}

fn split(part: &AbelianPresentation, ops: &OperatorSet, out: &mut Vec<PermGroup>) -> Result<(), AbelianError> {
    if part.len() <= 1 {
        out.push(part.group().clone());
        return Ok(());
    }
    let p = part.primes()[0];
    let mats = operator_matrices(part, ops)?;
    let end = endomorphism_ring_matrices(p, part.exps(), &mats);
    match splitting_idempotents(&end) {
        None => out.push(part.group().clone()),
        Some(idems) => {
            for e in idems {
                let gens: Vec<Permutation> = e
                    .iter()
                    .map(|row| part.element(row))
                    .filter(|g| !g.is_identity())
                    .collect();
                let basis = p_basis(part.degree(), p, &gens);
                let piece = AbelianPresentation::from_basis(
                    part.degree(),
                    basis.into_iter().map(|(b, e)| (b, p, e)).collect(),
                );
                split(&piece, ops, out)?;
            }
        }
    }
    Ok(())
}

/// Nontrivial orthogonal idempotents summing to 1, when the ring is not
/// local.
pub fn splitting_idempotents(end: &EndRing) -> Option<Vec<Matrix>> {
    let p = end.p();
    let basis = end.basis();
    let m = basis.len();
    if m <= 1 {
        return None;
    }
    let try_one = |x: &Matrix| -> Option<Vec<Matrix>> {
        let f = poly::min_poly(p, &end.residue_left_mult(x));
        if poly::is_primary(p, &f) {
            return None;
        }
        let (r, mats) = end.subring(x);
        let frame = r.frame();
        if frame.len() < 2 {
            return None;
        }
        Some(frame.iter().map(|c| combine(end, &mats, c)).collect())
    };
    for (b, _) in &basis {
        if let Some(v) = try_one(b) {
            return Some(v);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if let Some(v) = try_one(&end.add(&basis[i].0, &basis[j].0)) {
                return Some(v);
            }
        }
    }
    let size = (p as u128).checked_pow(m as u32);
    if size.map_or(false, |s| s <= EXHAUSTIVE_LIMIT) {
        for mut idx in 1..size.unwrap() {
            let mut c = vec![0u64; m];
            for x in c.iter_mut() {
                *x = (idx % p as u128) as u64;
                idx /= p as u128;
            }
            if let Some(v) = try_one(&end.combination(&c)) {
                return Some(v);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..RANDOM_TRIES {
            let c: Vec<u64> = (0..m).map(|_| rng.gen_range(0..p)).collect();
            if let Some(v) = try_one(&end.combination(&c)) {
                return Some(v);
            }
        }
    }
    None
}

fn combine(end: &EndRing, mats: &[Matrix], c: &[u64]) -> Matrix {
    let mut acc = end.scale(&end.identity(), 0);
    for (m, &x) in mats.iter().zip(c) {
        if x != 0 {
            acc = end.add(&acc, &end.scale(m, x));
        }
    }
    acc
}

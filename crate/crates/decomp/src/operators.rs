use perm_core::quotient::Quotient;
use perm_core::{Hom, Operator, OperatorSet, PermGroup};

use crate::DecompError;

/// Operators of `G` induced on `G/N`. Conjugation by members of `G` maps to
/// conjugation in the image; anything else becomes a map on the image
/// generators, checked to be a homomorphism.
pub fn quotient_operators(ops: &OperatorSet, q: &Quotient) -> Result<OperatorSet, DecompError> {
    let g = q.group();
    let image = q.image();
    if let Some(w) = ops.invariance_witness(q.kernel()) {
        return Err(DecompError::NotInvariant(w));
    }
    let mut out = OperatorSet::new();
    for op in ops {
        if let Operator::Conj(x) = op {
            if g.contains(x) {
                let y = q.map(x);
                if !y.is_identity() {
                    out.push(Operator::Conj(y));
                }
                continue;
            }
        }
        let images = g.gens().iter().map(|x| q.map(&op.apply(x))).collect();
        let hom = Hom::new(image, images, q.degree())?;
        if !hom.is_homomorphism() {
            return Err(DecompError::OperatorNotHomomorphism);
        }
        out.push(Operator::Map(hom));
    }
    Ok(out)
}

/// Operators restricted to an invariant subgroup `h`. Maps are rebuilt on
/// the generators of `h`; conjugations are kept.
pub fn restrict_operators(ops: &OperatorSet, h: &PermGroup) -> Result<OperatorSet, DecompError> {
    let mut out = OperatorSet::new();
    for op in ops {
        match op {
            Operator::Conj(_) => out.push(op.clone()),
            Operator::Map(_) => {
                let images: Vec<_> = h.gens().iter().map(|x| op.apply(x)).collect();
                if let Some(y) = images.iter().find(|y| !h.contains(y)) {
                    return Err(DecompError::NotInvariant(y.clone()));
                }
                out.push(Operator::Map(Hom::new(h, images, h.degree())?));
            }
        }
    }
    Ok(out)
}

use abelian::primary_decomposition;
use perm_core::algo::{center, centralizer_of_normal};
use perm_core::{Operator, OperatorSet, PermError, PermGroup, Permutation};
use zmod::sub_mod;

use crate::module::{AffineModule, LinearSystem};
use crate::{constructive_presentation, DecompError, Settings};

/// Why a subgroup is not a direct factor, by the first test that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refusal {
    /// An image of a generator under conjugation or an operator leaves `H`.
    NotInvariant(Permutation),
    /// `|H C_G(H)| < |G|`.
    ProductTooSmall { product: u128, order: u128 },
    /// An operator moves `C_G(H)` off itself.
    CentralizerNotInvariant(Permutation),
    /// The linear system for a complement of `ζ1(H)` in `C_G(H)` has no
    /// solution.
    Infeasible,
}

#[derive(Clone, Debug)]
pub enum Complement {
    Found(PermGroup),
    NotFactor(Refusal),
}

impl Complement {
    pub fn group(&self) -> Option<&PermGroup> {
        match self {
            Complement::Found(k) => Some(k),
            Complement::NotFactor(_) => None,
        }
    }

    pub fn refusal(&self) -> Option<&Refusal> {
        match self {
            Complement::Found(_) => None,
            Complement::NotFactor(r) => Some(r),
        }
    }
}

/// An operator-invariant `K` with `G = M ⋊ K`, for an abelian normal
/// operator-invariant `M`, or `None` when there is none.
pub fn complement_abelian(
    g: &PermGroup,
    m: &PermGroup,
    ops: &OperatorSet,
    settings: &Settings,
) -> Result<Option<PermGroup>, DecompError> {
    if !m.is_subgroup_of(g) {
        return Err(DecompError::NotSubgroup);
    }
    if !m.is_abelian() {
        return Err(DecompError::NotAbelian);
    }
    if let Some(w) = m.normalizer_witness(g.gens()) {
        return Err(PermError::NotNormal(w).into());
    }
    if let Some(w) = ops.invariance_witness(m) {
        return Err(DecompError::NotInvariant(w));
    }
    if m.is_trivial() {
        return Ok(Some(g.clone()));
    }
    if m.order() == g.order() {
        return Ok(Some(PermGroup::trivial(g.degree())));
    }
    let pres = constructive_presentation(g, m, settings)?;
    let mp = primary_decomposition(m)?;
    let nx = pres.len();
    let module = AffineModule::new(&mp, nx);
    let mut system = LinearSystem::new(&mp, nx);
    for a in module.evaluate(pres.relators(), pres.gens()) {
        if !system.push_trivial(&a) {
            return Err(DecompError::Internal("relator outside the modulus".into()));
        }
    }
    for op in ops {
        let s = module.matrix_of(|x| op.apply(x))?;
        for (x, fx) in pres.gens().iter().enumerate() {
            let y = op.apply(fx);
            let w = pres.rewrite(&y).ok_or_else(|| DecompError::NotInvariant(y.clone()))?;
            let a = module.evaluate(&w, pres.gens()).swap_remove(0);
            // ℓ(y)(fμ) = ω(f(x) μ_x)
            let c = mp
                .coordinates(&y.inverse().mul(&a.value))
                .ok_or_else(|| DecompError::Internal("rewriting leaves the coset".into()))?;
            let lin = module.add(&a.lin, &module.neg(&module.slot(x, &s)));
            let rhs = c.iter().enumerate().map(|(j, &v)| sub_mod(0, v, mp.modulus(j))).collect();
            system.push(lin, rhs);
        }
    }
    let Some((mu, _)) = system.solve() else { return Ok(None) };
    let gens: Vec<Permutation> = pres.gens().iter().zip(&mu).map(|(fx, c)| fx.mul(&mp.element(c))).collect();
    let k = PermGroup::generated(g.degree(), gens);
    if k.order() * m.order() != g.order() || !ops.stabilizes(&k) {
        return Err(DecompError::Internal("complement failed verification".into()));
    }
    Ok(Some(k))
}

/// A direct complement of `h` in `g` invariant under `ops` and under
/// conjugation by `g`, or the first failed test.
pub fn direct_complement(
    g: &PermGroup,
    h: &PermGroup,
    ops: &OperatorSet,
    settings: &Settings,
) -> Result<Complement, DecompError> {
    if !h.is_subgroup_of(g) {
        return Err(DecompError::NotSubgroup);
    }
    if let Some(w) = h.normalizer_witness(g.gens()).or_else(|| ops.invariance_witness(h)) {
        return Ok(Complement::NotFactor(Refusal::NotInvariant(w)));
    }
    let c = centralizer_of_normal(g, h)?;
    let z = center(h);
    let product = h.order() * c.order() / z.order();
    if product != g.order() {
        return Ok(Complement::NotFactor(Refusal::ProductTooSmall { product, order: g.order() }));
    }
    if let Some(w) = ops.invariance_witness(&c) {
        return Ok(Complement::NotFactor(Refusal::CentralizerNotInvariant(w)));
    }
    // conjugation by g = h c_g(h) normalizes any complement of a central subgroup of c
    let outer = OperatorSet::from_vec(
        ops.iter().filter(|op| !matches!(op, Operator::Conj(x) if g.contains(x))).cloned().collect(),
    );
    let Some(k) = complement_abelian(&c, &z, &outer, settings)? else {
        return Ok(Complement::NotFactor(Refusal::Infeasible));
    };
    let both = h.extended(k.gens());
    if h.order() * k.order() != g.order() || both.order() != g.order() {
        return Err(DecompError::Internal("direct complement failed verification".into()));
    }
    Ok(Complement::Found(k))
}

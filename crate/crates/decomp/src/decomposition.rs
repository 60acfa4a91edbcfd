use perm_core::{OperatorSet, PermGroup, Permutation};

/// Facts that make a list of subgroups a direct decomposition, each
/// rechecked from scratch by [`Certificate::compute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub ambient_order: u128,
    pub factor_orders: Vec<u128>,
    /// `|⟨factors except i⟩|` for each `i`.
    pub complement_orders: Vec<u128>,
    /// `|⟨all factors⟩|`.
    pub span_order: u128,
    /// A conjugate of a factor generator that leaves the factor.
    pub normality_witnesses: Vec<Option<Permutation>>,
    /// An operator image of a factor generator that leaves the factor.
    pub operator_witnesses: Vec<Option<Permutation>>,
    /// Whether all factors are contained in the ambient group.
    pub contained: bool,
}

impl Certificate {
    pub fn compute(ambient: &PermGroup, factors: &[PermGroup], ops: &OperatorSet) -> Self {
        let degree = ambient.degree();
        let gens_except = |skip: Option<usize>| -> Vec<Permutation> {
            factors
                .iter()
                .enumerate()
                .filter(|(i, _)| Some(*i) != skip)
                .flat_map(|(_, f)| f.gens().iter().cloned())
                .collect()
        };
        Certificate {
            ambient_order: ambient.order(),
            factor_orders: factors.iter().map(|f| f.order()).collect(),
            complement_orders: (0..factors.len())
                .map(|i| PermGroup::generated(degree, gens_except(Some(i))).order())
                .collect(),
            span_order: PermGroup::generated(degree, gens_except(None)).order(),
            normality_witnesses: factors.iter().map(|f| f.normalizer_witness(ambient.gens())).collect(),
            operator_witnesses: factors.iter().map(|f| ops.invariance_witness(f)).collect(),
            contained: factors.iter().all(|f| f.degree() == degree && f.is_subgroup_of(ambient)),
        }
    }

    /// Normal, operator-invariant, nontrivial factors whose orders multiply
    /// to `|G|`, generating `G`, each meeting the others trivially.
    pub fn is_direct(&self) -> bool {
        self.contained
            && self.normality_witnesses.iter().all(Option::is_none)
            && self.factor_orders.iter().all(|&o| o > 1)
            && self.span_order == self.ambient_order
            && self.factor_orders.iter().product::<u128>() == self.ambient_order
            && self.factor_orders.iter().zip(&self.complement_orders).all(|(a, b)| a * b == self.ambient_order)
    }

    pub fn is_operator_stable(&self) -> bool {
        self.operator_witnesses.iter().all(Option::is_none)
    }
}

/// A list of subgroups of `ambient` with its certificate.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub ambient: PermGroup,
    pub factors: Vec<PermGroup>,
    pub is_direct: bool,
    pub is_remak_claimed: bool,
    pub omega_stable: bool,
    pub certificate: Certificate,
}

impl Decomposition {
    pub fn new(ambient: &PermGroup, factors: Vec<PermGroup>, ops: &OperatorSet, remak: bool) -> Self {
        let certificate = Certificate::compute(ambient, &factors, ops);
        let is_direct = certificate.is_direct();
        Decomposition {
            ambient: ambient.clone(),
            factors,
            is_direct,
            is_remak_claimed: remak && is_direct,
            omega_stable: certificate.is_operator_stable(),
            certificate,
        }
    }

    /// Factor orders, ascending.
    pub fn orders(&self) -> Vec<u128> {
        let mut o: Vec<u128> = self.factors.iter().map(|f| f.order()).collect();
        o.sort_unstable();
        o
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Recompute the certificate and compare.
    pub fn verify(&self, ops: &OperatorSet) -> bool {
        let fresh = Certificate::compute(&self.ambient, &self.factors, ops);
        fresh == self.certificate && fresh.is_direct() && fresh.is_operator_stable()
    }
}

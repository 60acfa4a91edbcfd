use decomp::Decomposition;
use oracle::{brute_remak, isomorphic_small, Bounds, SmallGroup};
use perm_core::PermGroup;

use crate::CliError;

/// Factor orders from the pipeline and from the brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OracleComparison {
    pub pipeline: Vec<u64>,
    pub oracle: Vec<u64>,
    /// Whether pipeline factors within the isomorphism bound match oracle
    /// factors one to one; `None` when no factor is that small.
    pub isomorphic: Option<bool>,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.pipeline == self.oracle && self.isomorphic != Some(false)
    }
}

pub fn small_group(g: &PermGroup, bound: usize) -> Result<SmallGroup, CliError> {
    Ok(SmallGroup::from_permutations(g.degree(), g.gens(), bound)?)
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

/// Match every group of order at most `bound` in `a` with an isomorphic,
/// unused group in `b`.
pub fn match_isomorphic(a: &[SmallGroup], b: &[SmallGroup], bound: usize) -> Result<Option<bool>, CliError> {
    let mut used = vec![false; b.len()];
    let mut checked = false;
    for x in a.iter().filter(|x| x.order() <= bound) {
        checked = true;
        let mut hit = None;
        for (j, y) in b.iter().enumerate() {
            if !used[j] && y.order() == x.order() && isomorphic_small(x, y, bound)? {
                hit = Some(j);
                break;
            }
        }
        match hit {
            Some(j) => used[j] = true,
            None => return Ok(Some(false)),
        }
    }
    Ok(checked.then_some(true))
}

/// Compare a decomposition of `g` with [`brute_remak`].
pub fn compare_with_oracle(d: &Decomposition, bounds: &Bounds) -> Result<OracleComparison, CliError> {
    let s = small_group(&d.ambient, bounds.order)?;
    let brute = brute_remak(&s, bounds.lattice)?;
    let pipeline = sorted(d.factors.iter().map(|f| f.order() as u64).collect());
    let oracle = sorted(brute.iter().map(|h| h.order() as u64).collect());
    let isomorphic = if pipeline == oracle {
        let ours: Vec<SmallGroup> = d
            .factors
            .iter()
            .filter(|f| f.order() as usize <= bounds.iso)
            .map(|f| small_group(f, bounds.order))
            .collect::<Result<_, _>>()?;
        let theirs: Vec<SmallGroup> =
            brute.iter().filter(|h| h.order() <= bounds.iso).map(|h| s.subgroup(h)).collect();
        match_isomorphic(&ours, &theirs, bounds.iso)?
    } else {
        None
    };
    Ok(OracleComparison { pipeline, oracle, isomorphic })
}

use std::sync::Arc;

use abelian::{primary_decomposition, AbelianPresentation};
use perm_core::algo::{center, commutators_inside, derived_subgroup};
use perm_core::catalog::{group_from_table, TableGroup};
use perm_core::quotient::{Quotient, DEFAULT_COSET_BOUND};
use perm_core::{PermGroup, Permutation};
use zmod::checkered::Matrix;
use zmod::{add_mod, ipow, mul_mod, span_basis, sub_mod, Row};

use crate::BilinearError;

/// `⊕_i Z/p^{exps[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub p: u64,
    pub exps: Vec<u32>,
}

impl Module {
    pub fn new(p: u64, exps: Vec<u32>) -> Self {
        Module { p, exps }
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn modulus(&self, i: usize) -> u64 {
        ipow(self.p, self.exps[i])
    }

    /// `log_p` of the order.
    pub fn length(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        (0..self.dim()).map(|i| add_mod(a[i], b[i], self.modulus(i))).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        (0..self.dim()).map(|i| sub_mod(a[i], b[i], self.modulus(i))).collect()
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Vec<u64> {
        (0..self.dim()).map(|i| mul_mod(a[i], c, self.modulus(i))).collect()
    }

    /// Independent basis of the submodule generated by `gens`.
    pub fn span(&self, gens: &[Vec<u64>]) -> Vec<(Vec<u64>, u32)> {
        span_basis(self.p, &self.exps, gens)
    }

    pub fn coordinates(&self, basis: &[(Vec<u64>, u32)], v: &[u64]) -> Option<Vec<u64>> {
        zmod::coordinates(self.p, &self.exps, basis, v)
    }
}

/// Where a bilinear map came from when it is the commutator map of a group.
#[derive(Debug)]
struct Origin {
    zeta: PermGroup,
    quotient: Quotient,
    v_pres: AbelianPresentation,
    v_reps: Vec<Permutation>,
    w_pres: AbelianPresentation,
}

/// A biadditive map `V × V → W`; `consts[x][y]` holds `b(v_x, v_y)` in the
/// basis of `W`.
#[derive(Clone, Debug)]
pub struct BilinearMap {
    v: Module,
    w: Module,
    consts: Vec<Vec<Vec<u64>>>,
    origin: Option<Arc<Origin>>,
}

impl BilinearMap {
    pub fn new(v: Module, w: Module, consts: Vec<Vec<Vec<u64>>>) -> Result<Self, BilinearError> {
        assert_eq!(v.p, w.p, "V and W over different primes");
        let n = v.dim();
        if consts.len() != n || consts.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != w.dim())) {
            return Err(BilinearError::NotWellDefined);
        }
        let mut b = BilinearMap { v, w, consts, origin: None };
        for x in 0..n {
            for y in 0..n {
                let c: Vec<u64> = (0..b.w.dim()).map(|z| b.consts[x][y][z] % b.w.modulus(z)).collect();
                let k = b.v.exps[x].min(b.v.exps[y]);
                if b.w.scale(&c, ipow(b.v.p, k)).iter().any(|&t| t != 0) {
                    return Err(BilinearError::NotWellDefined);
                }
                b.consts[x][y] = c;
            }
        }
        Ok(b)
    }

    pub fn p(&self) -> u64 {
        self.v.p
    }

    pub fn v(&self) -> &Module {
        &self.v
    }

    pub fn w(&self) -> &Module {
        &self.w
    }

    pub fn consts(&self) -> &[Vec<Vec<u64>>] {
        &self.consts
    }

    pub fn eval(&self, u: &[u64], v: &[u64]) -> Vec<u64> {
        let mut acc = self.w.zero();
        for x in 0..self.v.dim() {
            if u[x] == 0 {
                continue;
            }
            for y in 0..self.v.dim() {
                if v[y] == 0 {
                    continue;
                }
                let c = u[x] as u128 * v[y] as u128;
                let q = ipow(self.p(), self.w.exps.iter().copied().max().unwrap_or(0)) as u128;
                acc = self.w.add(&acc, &self.w.scale(&self.consts[x][y], (c % q.max(1)) as u64));
            }
        }
        acc
    }

    /// `{v : b(v, V) = 0 = b(V, v)}`.
    pub fn radical(&self) -> Vec<(Vec<u64>, u32)> {
        let n = self.v.dim();
        let mut rows = Vec::new();
        for y in 0..n {
            for z in 0..self.w.dim() {
                let left = (0..n).map(|x| self.consts[x][y][z]).collect();
                let right = (0..n).map(|x| self.consts[y][x][z]).collect();
                rows.push(Row { coeffs: left, rhs: 0, exp: self.w.exps[z] });
                rows.push(Row { coeffs: right, rhs: 0, exp: self.w.exps[z] });
            }
        }
        let kernel = if rows.is_empty() {
            (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
        } else {
            zmod::solve(self.p(), &self.v.exps, &rows).expect("homogeneous").kernel
        };
        self.v.span(&kernel)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().is_empty()
    }

    /// Basis of the submodule `b(V, V)` of `W`.
    pub fn value_span(&self) -> Vec<(Vec<u64>, u32)> {
        let vals: Vec<Vec<u64>> = self.consts.iter().flatten().cloned().collect();
        self.w.span(&vals)
    }

    pub fn is_alternating(&self) -> bool {
        let n = self.v.dim();
        (0..n).all(|x| self.consts[x][x].iter().all(|&t| t == 0))
            && (0..n).all(|x| (0..n).all(|y| self.w.add(&self.consts[x][y], &self.consts[y][x]).iter().all(|&t| t == 0)))
    }

    /// The restriction to `V' × V' → W'` in the given bases (the values must
    /// lie in `W'`).
    pub fn restrict(&self, v_basis: &[(Vec<u64>, u32)], w_basis: &[(Vec<u64>, u32)]) -> Option<BilinearMap> {
        let consts = v_basis
            .iter()
            .map(|(a, _)| {
                v_basis
                    .iter()
                    .map(|(c, _)| self.w.coordinates(w_basis, &self.eval(a, c)))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        BilinearMap::new(
            Module::new(self.p(), v_basis.iter().map(|b| b.1).collect()),
            Module::new(self.p(), w_basis.iter().map(|b| b.1).collect()),
            consts,
        )
        .ok()
    }

    /// Block sum `b1 ⊥ b2` with `V = V1 ⊕ V2`, `W = W1 ⊕ W2`.
    pub fn orthogonal_sum(&self, other: &BilinearMap) -> BilinearMap {
        let (n1, n2) = (self.v.dim(), other.v.dim());
        let (m1, m2) = (self.w.dim(), other.w.dim());
        let mut consts = vec![vec![vec![0u64; m1 + m2]; n1 + n2]; n1 + n2];
        for x in 0..n1 {
            for y in 0..n1 {
                consts[x][y][..m1].copy_from_slice(&self.consts[x][y]);
            }
        }
        for x in 0..n2 {
            for y in 0..n2 {
                consts[n1 + x][n1 + y][m1..].copy_from_slice(&other.consts[x][y]);
            }
        }
        let cat = |a: &[u32], b: &[u32]| a.iter().chain(b).copied().collect::<Vec<u32>>();
        BilinearMap::new(
            Module::new(self.p(), cat(&self.v.exps, &other.v.exps)),
            Module::new(self.p(), cat(&self.w.exps, &other.w.exps)),
            consts,
        )
        .expect("block sum of bilinear maps")
    }

    /// `ζ1(P)` when built from a group.
    pub fn zeta(&self) -> Option<&PermGroup> {
        self.origin.as_ref().map(|o| &o.zeta)
    }

    /// Coset representatives of the basis of `V = P/ζ1(P)`.
    pub fn v_reps(&self) -> Option<&[Permutation]> {
        self.origin.as_ref().map(|o| o.v_reps.as_slice())
    }

    /// The basis of `W = γ2(P)`.
    pub fn w_basis_elements(&self) -> Option<&[Permutation]> {
        self.origin.as_ref().map(|o| o.w_pres.basis())
    }

    /// A representative of the coset with coordinates `c`.
    pub fn v_element(&self, c: &[u64]) -> Option<Permutation> {
        let o = self.origin.as_ref()?;
        let mut acc = o.zeta.identity();
        for (r, &x) in o.v_reps.iter().zip(c) {
            if x != 0 {
                acc = acc.mul(&r.pow(x as i64));
            }
        }
        Some(acc)
    }

    /// Coordinates in `V` of the coset of `g`.
    pub fn v_coordinates(&self, g: &Permutation) -> Option<Vec<u64>> {
        let o = self.origin.as_ref()?;
        o.v_pres.coordinates(&o.quotient.map(g))
    }

    pub fn w_coordinates(&self, g: &Permutation) -> Option<Vec<u64>> {
        self.origin.as_ref()?.w_pres.coordinates(g)
    }

    /// Matrices on `V` and `W` of the maps induced by an endomorphism of the
    /// source group that fixes `ζ1` and `γ2`.
    pub fn induced(&self, f: impl Fn(&Permutation) -> Permutation) -> Option<(Matrix, Matrix)> {
        let o = self.origin.as_ref()?;
        let v = o.v_reps.iter().map(|r| self.v_coordinates(&f(r))).collect::<Option<Vec<_>>>()?;
        let w = o.w_pres.basis().iter().map(|r| self.w_coordinates(&f(r))).collect::<Option<Vec<_>>>()?;
        Some((v, w))
    }
}

/// The commutator map `P/ζ1(P) × P/ζ1(P) → γ2(P)` of a `p`-group of class
/// at most 2.
pub fn bi_of_group(g: &PermGroup) -> Result<BilinearMap, BilinearError> {
    let Some((p, _)) = zmod::prime_power(g.order()) else {
        return Err(BilinearError::NotPGroup);
    };
    let p = if g.order() == 1 { 2 } else { p };
    let zeta = center(g);
    let gamma = derived_subgroup(g);
    if !commutators_inside(&gamma, g, &PermGroup::trivial(g.degree())) {
        return Err(BilinearError::ClassTooLarge);
    }
    let quotient =
        Quotient::new(g, &zeta, DEFAULT_COSET_BOUND).map_err(|e| BilinearError::Group(e.to_string()))?;
    let v_pres = primary_decomposition(quotient.image()).map_err(|e| BilinearError::Group(e.to_string()))?;
    let v_reps: Vec<Permutation> =
        v_pres.basis().iter().map(|x| quotient.lift(x).expect("lift into P")).collect();
    let w_pres = primary_decomposition(&gamma).map_err(|e| BilinearError::Group(e.to_string()))?;
    let consts = v_reps
        .iter()
        .map(|a| v_reps.iter().map(|b| w_pres.coordinates(&a.comm(b)).expect("commutator in γ2")).collect())
        .collect();
    let mut b = BilinearMap::new(
        Module::new(p, v_pres.exps().to_vec()),
        Module::new(p, w_pres.exps().to_vec()),
        consts,
    )?;
    b.origin = Some(Arc::new(Origin { zeta, quotient, v_pres, v_reps, w_pres }));
    Ok(b)
}

/// The group on `V × W` with `(u, w)(u', w') = (u + u', w + b(u, u') + w')`,
/// as a multiplication table group. Element `(u, w)` has label
/// `index(u) * |W| + index(w)` (0-based, little-endian mixed radix).
pub fn grp_of_bilinear(b: &BilinearMap) -> Result<TableGroup, BilinearError> {
    let enumerate = |m: &Module| -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for i in (0..m.dim()).rev() {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u64>| {
                    (0..m.modulus(i)).map(move |x| {
                        let mut w = vec![x];
                        w.extend_from_slice(&v);
                        w
                    })
                })
                .collect();
        }
        out
    };
    let vs = enumerate(&b.v);
    let ws = enumerate(&b.w);
    let index = |m: &Module, v: &[u64]| -> usize {
        let mut idx = 0usize;
        for i in (0..m.dim()).rev() {
            idx = idx * m.modulus(i) as usize + v[i] as usize;
        }
        idx
    };
    let nw = ws.len();
    let n = vs.len() * nw;
    let mut table = vec![vec![0usize; n]; n];
    for (iu, u) in vs.iter().enumerate() {
        for (iu2, u2) in vs.iter().enumerate() {
            let buu = b.eval(u, u2);
            let su = index(&b.v, &b.v.add(u, u2));
            for (iw, w) in ws.iter().enumerate() {
                let base = b.w.add(w, &buu);
                for (iw2, w2) in ws.iter().enumerate() {
                    table[iu * nw + iw][iu2 * nw + iw2] = su * nw + index(&b.w, &b.w.add(&base, w2));
                }
            }
        }
    }
    group_from_table(&table).map_err(|e| BilinearError::Group(e.to_string()))
}

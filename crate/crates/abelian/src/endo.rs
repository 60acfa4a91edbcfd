use perm_core::{OperatorSet, Permutation};
use ring::FiniteCommRing;
use zmod::checkered;
use zmod::{add_mod, ipow, mul_mod, span_basis, sub_mod, Row};

use crate::{AbelianError, AbelianPresentation};

/// Square matrix acting on coordinate row vectors: row `i` holds the
/// coordinates of the image of basis element `i`.
pub type Matrix = checkered::Matrix;

/// The matrix of `f` on the basis of `a`. Fails if some image leaves `a`.
pub fn operator_matrix(
    a: &AbelianPresentation,
    f: impl Fn(&Permutation) -> Permutation,
) -> Result<Matrix, AbelianError> {
    a.basis()
        .iter()
        .map(|b| a.coordinates(&f(b)).ok_or(AbelianError::NotStabilized))
        .collect()
}

/// Matrices of all operators in `ops` on `a`.
pub fn operator_matrices(a: &AbelianPresentation, ops: &OperatorSet) -> Result<Vec<Matrix>, AbelianError> {
    ops.iter().map(|op| operator_matrix(a, |g| op.apply(g))).collect()
}

/// An additive basis of a ring of endomorphisms of an abelian `p`-group
/// with basis orders `p^{exps[i]}`.
#[derive(Clone, Debug)]
pub struct EndRing {
    p: u64,
    exps: Vec<u32>,
    basis: Vec<(Vec<u64>, u32)>,
}

impl EndRing {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    fn dim(&self) -> usize {
        self.exps.len()
    }

    fn t_exps(&self) -> Vec<u32> {
        checkered::param_exps(&self.exps)
    }

    fn shift(&self, i: usize, j: usize) -> u64 {
        checkered::shift(self.p, &self.exps, i, j)
    }

    pub fn to_matrix(&self, t: &[u64]) -> Matrix {
        checkered::to_matrix(self.p, &self.exps, t)
    }

    pub fn to_params(&self, m: &Matrix) -> Vec<u64> {
        checkered::to_params(self.p, &self.exps, m)
    }

    /// Additive basis, each with the exponent of its additive order.
    pub fn basis(&self) -> Vec<(Matrix, u32)> {
        self.basis.iter().map(|(t, e)| (self.to_matrix(t), *e)).collect()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn identity(&self) -> Matrix {
        checkered::identity(self.dim())
    }

    /// Apply `a` then `b`.
    pub fn compose(&self, a: &Matrix, b: &Matrix) -> Matrix {
        checkered::mat_mul(self.p, &self.exps, a, b)
    }

    pub fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| add_mod(a[i][j], b[i][j], ipow(self.p, self.exps[j]))).collect())
            .collect()
    }

    pub fn scale(&self, a: &Matrix, c: u64) -> Matrix {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| mul_mod(a[i][j], c, ipow(self.p, self.exps[j]))).collect())
            .collect()
    }

    /// Coordinates of `m` in the additive basis.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<u64>> {
        zmod::coordinates(self.p, &self.t_exps(), &self.basis, &self.to_params(m))
    }

    pub fn combination(&self, c: &[u64]) -> Matrix {
        let mut acc = vec![vec![0u64; self.dim()]; self.dim()];
        for ((t, _), &x) in self.basis.iter().zip(c) {
            if x != 0 {
                acc = self.add(&acc, &self.scale(&self.to_matrix(t), x));
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let b = self.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.compose(&b[i].0, &b[j].0) == self.compose(&b[j].0, &b[i].0)))
    }

    /// Left multiplication by `x` on `R/pR`, over `F_p`.
    pub fn residue_left_mult(&self, x: &Matrix) -> Matrix {
        self.basis()
            .iter()
            .map(|(b, _)| {
                let c = self.coordinates(&self.compose(x, b)).expect("ring closed under composition");
                c.iter().map(|v| v % self.p).collect()
            })
            .collect()
    }

    /// The commutative subring generated by `x`, with its basis matrices.
    pub fn subring(&self, x: &Matrix) -> (FiniteCommRing, Vec<Matrix>) {
        let t_exps = self.t_exps();
        let mut gens = vec![self.to_params(&self.identity())];
        let mut span = span_basis(self.p, &t_exps, &gens);
        let mut cur = self.identity();
        loop {
            cur = self.compose(&cur, x);
            gens.push(self.to_params(&cur));
            let next = span_basis(self.p, &t_exps, &gens);
            let size = |s: &[(Vec<u64>, u32)]| s.iter().map(|b| b.1).sum::<u32>();
            if size(&next) == size(&span) {
                break;
            }
            span = next;
        }
        let mats: Vec<Matrix> = span.iter().map(|(t, _)| self.to_matrix(t)).collect();
        let coords = |m: &Matrix| zmod::coordinates(self.p, &t_exps, &span, &self.to_params(m)).expect("in the subring");
        let table = mats.iter().map(|a| mats.iter().map(|b| coords(&self.compose(a, b))).collect()).collect();
        let one = coords(&self.identity());
        let exps = span.iter().map(|b| b.1).collect();
        let r = FiniteCommRing::with_orders(self.p, exps, table, one).expect("polynomial subring is a commutative ring");
        (r, mats)
    }

    /// The ring itself, when commutative.
    pub fn to_ring(&self) -> Option<FiniteCommRing> {
        if !self.is_commutative() {
            return None;
        }
        let mats: Vec<Matrix> = self.basis().into_iter().map(|b| b.0).collect();
        let table = mats
            .iter()
            .map(|a| mats.iter().map(|b| self.coordinates(&self.compose(a, b)).expect("closed")).collect())
            .collect();
        let one = self.coordinates(&self.identity()).expect("contains 1");
        FiniteCommRing::with_orders(self.p, self.basis.iter().map(|b| b.1).collect(), table, one).ok()
    }
}

/// Endomorphisms commuting with every matrix in `ops`, for the `p`-group
/// with basis orders `p^{exps[i]}`.
pub fn endomorphism_ring_matrices(p: u64, exps: &[u32], ops: &[Matrix]) -> EndRing {
    let n = exps.len();
    let mut shell = EndRing { p, exps: exps.to_vec(), basis: Vec::new() };
    let t_exps = shell.t_exps();
    let mut rows = Vec::new();
    for s in ops {
        // (S Φ - Φ S)_{ij} = 0 modulo p^{e_j}
        for i in 0..n {
            for j in 0..n {
                let mut coeffs = vec![0u64; n * n];
                let q = ipow(p, exps[j]);
                for k in 0..n {
                    let c = mul_mod(s[i][k], shell.shift(k, j), q);
                    coeffs[k * n + j] = add_mod(coeffs[k * n + j], c, q);
                    let d = mul_mod(s[k][j], shell.shift(i, k), q);
                    coeffs[i * n + k] = sub_mod(coeffs[i * n + k], d, q);
                }
                rows.push(Row { coeffs, rhs: 0, exp: exps[j] });
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..n * n)
            .map(|k| {
                let mut v = vec![0u64; n * n];
                v[k] = 1;
                v
            })
            .collect()
    } else {
        zmod::solve(p, &t_exps, &rows).expect("homogeneous system").kernel
    };
    shell.basis = span_basis(p, &t_exps, &kernel);
    shell
}

/// `End_Ω` of a primary presentation of an abelian `p`-group.
pub fn endomorphism_ring(a: &AbelianPresentation, ops: &OperatorSet) -> Result<EndRing, AbelianError> {
    let primes = a.prime_set();
    if primes.len() > 1 {
        return Err(AbelianError::NotPrimary);
    }
    let p = primes.first().copied().unwrap_or(2);
    let mats = operator_matrices(a, ops)?;
    Ok(endomorphism_ring_matrices(p, a.exps(), &mats))
}

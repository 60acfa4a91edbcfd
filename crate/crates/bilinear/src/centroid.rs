use ring::FiniteCommRing;
use zmod::checkered::{self, Matrix};
use zmod::{add_mod, ipow, mul_mod, span_basis, sub_mod, Row};

use crate::{BilinearError, BilinearMap};

/// A pair `(f, g)` with `b(uf, v) = b(u, v)g = b(u, vf)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidElement {
    pub f: Matrix,
    pub g: Matrix,
}

/// The centroid as a ring, with the pairs behind its additive basis.
#[derive(Clone, Debug)]
pub struct Centroid {
    pub ring: FiniteCommRing,
    pub elements: Vec<CentroidElement>,
}

impl Centroid {
    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    /// The pair with coordinates `c` in the additive basis.
    pub fn element(&self, b: &BilinearMap, c: &[u64]) -> CentroidElement {
        let (vn, wn) = (b.v().dim(), b.w().dim());
        let mut f = vec![vec![0u64; vn]; vn];
        let mut g = vec![vec![0u64; wn]; wn];
        for (el, &x) in self.elements.iter().zip(c) {
            if x == 0 {
                continue;
            }
            for i in 0..vn {
                for j in 0..vn {
                    let m = b.v().modulus(j);
                    f[i][j] = add_mod(f[i][j], mul_mod(el.f[i][j], x, m), m);
                }
            }
            for i in 0..wn {
                for j in 0..wn {
                    let m = b.w().modulus(j);
                    g[i][j] = add_mod(g[i][j], mul_mod(el.g[i][j], x, m), m);
                }
            }
        }
        CentroidElement { f, g }
    }
}

/// The centroid `C(b)` of a nondegenerate map with `W = b(V, V)`.
pub fn centroid(b: &BilinearMap) -> Result<Centroid, BilinearError> {
    centroid_with(b, &[])
}

/// The elements of the centroid whose two components commute with the
/// given pairs of operator matrices on `V` and `W`.
pub fn centroid_with(b: &BilinearMap, ops: &[(Matrix, Matrix)]) -> Result<Centroid, BilinearError> {
    if !b.is_nondegenerate() {
        return Err(BilinearError::Degenerate);
    }
    if b.value_span().iter().map(|x| x.1).sum::<u32>() != b.w().length() {
        return Err(BilinearError::NotSurjective);
    }
    let p = b.p();
    let (ve, we) = (b.v().exps.clone(), b.w().exps.clone());
    let (vn, wn) = (ve.len(), we.len());
    let fexps = checkered::param_exps(&ve);
    let gexps = checkered::param_exps(&we);
    let unknowns: Vec<u32> = fexps.iter().chain(&gexps).copied().collect();
    let nf = vn * vn;
    let consts = b.consts();
    let mut rows = Vec::new();
    for x in 0..vn {
        for y in 0..vn {
            for t in 0..wn {
                let q = ipow(p, we[t]);
                // b(v_x f, v_y) - b(v_x, v_y) g  and  b(v_x, v_y f) - b(v_x, v_y) g
                let mut left = vec![0u64; unknowns.len()];
                let mut right = vec![0u64; unknowns.len()];
                for k in 0..vn {
                    left[x * vn + k] = mul_mod(checkered::shift(p, &ve, x, k), consts[k][y][t], q);
                    right[y * vn + k] = mul_mod(checkered::shift(p, &ve, y, k), consts[x][k][t], q);
                }
                for z in 0..wn {
                    let c = mul_mod(consts[x][y][z], checkered::shift(p, &we, z, t), q);
                    let idx = nf + z * wn + t;
                    left[idx] = sub_mod(left[idx], c, q);
                    right[idx] = sub_mod(right[idx], c, q);
                }
                rows.push(Row { coeffs: left, rhs: 0, exp: we[t] });
                rows.push(Row { coeffs: right, rhs: 0, exp: we[t] });
            }
        }
    }
    for (sv, sw) in ops {
        commuting_rows(p, &ve, sv, 0, unknowns.len(), &mut rows);
        commuting_rows(p, &we, sw, nf, unknowns.len(), &mut rows);
    }
    let kernel = if rows.is_empty() {
        Vec::new()
    } else {
        zmod::solve(p, &unknowns, &rows).expect("homogeneous system").kernel
    };
    let basis = span_basis(p, &unknowns, &kernel);
    let to_pair = |t: &[u64]| CentroidElement {
        f: checkered::to_matrix(p, &ve, &t[..nf]),
        g: checkered::to_matrix(p, &we, &t[nf..]),
    };
    let to_params = |e: &CentroidElement| -> Vec<u64> {
        let mut t = checkered::to_params(p, &ve, &e.f);
        t.extend(checkered::to_params(p, &we, &e.g));
        t
    };
    let elements: Vec<CentroidElement> = basis.iter().map(|(t, _)| to_pair(t)).collect();
    let compose = |a: &CentroidElement, c: &CentroidElement| CentroidElement {
        f: checkered::mat_mul(p, &ve, &a.f, &c.f),
        g: checkered::mat_mul(p, &we, &a.g, &c.g),
    };
    let coords =
        |e: &CentroidElement| zmod::coordinates(p, &unknowns, &basis, &to_params(e)).expect("centroid is a ring");
    let table = elements.iter().map(|a| elements.iter().map(|c| coords(&compose(a, c))).collect()).collect();
    let one = if elements.is_empty() {
        Vec::new()
    } else {
        coords(&CentroidElement { f: checkered::identity(vn), g: checkered::identity(wn) })
    };
    let ring = FiniteCommRing::with_orders(p, basis.iter().map(|x| x.1).collect(), table, one)
        .expect("centroid of a nondegenerate surjective map is commutative");
    Ok(Centroid { ring, elements })
}

/// Rows of `SΦ = ΦS` for the block of unknowns starting at `offset`.
fn commuting_rows(p: u64, exps: &[u32], s: &Matrix, offset: usize, total: usize, rows: &mut Vec<Row>) {
    let n = exps.len();
    for i in 0..n {
        for j in 0..n {
            let q = ipow(p, exps[j]);
            let mut coeffs = vec![0u64; total];
            for k in 0..n {
                let a = offset + k * n + j;
                coeffs[a] = add_mod(coeffs[a], mul_mod(s[i][k], checkered::shift(p, exps, k, j), q), q);
                let c = offset + i * n + k;
                coeffs[c] = sub_mod(coeffs[c], mul_mod(s[k][j], checkered::shift(p, exps, i, k), q), q);
            }
            rows.push(Row { coeffs, rhs: 0, exp: exps[j] });
        }
    }
}

/// One block of the frame decomposition: `V e × V e → W e`.
#[derive(Clone, Debug)]
pub struct Block {
    pub idempotent: CentroidElement,
    pub v_basis: Vec<(Vec<u64>, u32)>,
    pub w_basis: Vec<(Vec<u64>, u32)>,
}

/// The blocks cut out by the frame of the centroid, in frame order.
pub fn frame_decomposition(b: &BilinearMap) -> Result<Vec<Block>, BilinearError> {
    frame_decomposition_with(b, &[])
}

/// Frame blocks of the operator-commuting centroid.
pub fn frame_decomposition_with(b: &BilinearMap, ops: &[(Matrix, Matrix)]) -> Result<Vec<Block>, BilinearError> {
    let c = centroid_with(b, ops)?;
    Ok(c.ring
        .frame()
        .iter()
        .map(|e| {
            let idem = c.element(b, e);
            let v_basis = b.v().span(&idem.f);
            let w_basis = b.w().span(&idem.g);
            Block { idempotent: idem, v_basis, w_basis }
        })
        .collect())
}

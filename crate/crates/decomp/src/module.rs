use abelian::{primary_decomposition, AbelianPresentation};
use perm_core::{PermError, PermGroup, Permutation, Slp};
use zmod::{add_mod, mul_mod, sub_mod, Row};

use crate::DecompError;

/// A linear map `M^X → M`: row `x * r + k` holds the image of basis element
/// `k` placed in slot `x`.
pub(crate) type Lin = Vec<Vec<u64>>;

/// A word evaluated at `fμ` for unknown `μ ∈ M^X`: it equals
/// `value * lin(μ)`.
#[derive(Clone, Debug)]
pub(crate) struct Affine {
    pub value: Permutation,
    pub lin: Lin,
}

/// Arithmetic of affine values over an abelian normal subgroup `M`.
pub(crate) struct AffineModule<'a> {
    pub pres: &'a AbelianPresentation,
    pub nx: usize,
}

impl<'a> AffineModule<'a> {
    pub fn new(pres: &'a AbelianPresentation, nx: usize) -> Self {
        AffineModule { pres, nx }
    }

    fn r(&self) -> usize {
        self.pres.len()
    }

    fn zero(&self) -> Lin {
        vec![vec![0u64; self.r()]; self.nx * self.r()]
    }

    /// Matrix of `m ↦ s(m)` on `M`, for any map stabilizing `M`.
    pub fn matrix_of(&self, s: impl Fn(&Permutation) -> Permutation) -> Result<Lin, DecompError> {
        self.pres
            .basis()
            .iter()
            .map(|b| {
                let y = s(b);
                self.pres.coordinates(&y).ok_or(DecompError::NotInvariant(y))
            })
            .collect()
    }

    fn act(&self, b: &Permutation) -> Lin {
        self.matrix_of(|m| m.conj(b)).expect("M is normal")
    }

    /// `t` followed by the endomorphism `a` of `M`.
    pub fn compose(&self, t: &Lin, a: &Lin) -> Lin {
        let r = self.r();
        t.iter()
            .map(|row| {
                (0..r)
                    .map(|j| {
                        let m = self.pres.modulus(j);
                        let mut acc = 0u64;
                        for (k, &x) in row.iter().enumerate() {
                            if x != 0 && a[k][j] != 0 {
                                acc = add_mod(acc, mul_mod(x, a[k][j], m), m);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    pub fn add(&self, a: &Lin, b: &Lin) -> Lin {
        a.iter()
            .zip(b)
            .map(|(x, y)| {
                x.iter().zip(y).enumerate().map(|(j, (&u, &v))| add_mod(u, v, self.pres.modulus(j))).collect()
            })
            .collect()
    }

    pub fn neg(&self, a: &Lin) -> Lin {
        a.iter()
            .map(|x| x.iter().enumerate().map(|(j, &u)| sub_mod(0, u, self.pres.modulus(j))).collect())
            .collect()
    }

    /// The map `μ ↦ μ_x` followed by `a`.
    pub fn slot(&self, x: usize, a: &Lin) -> Lin {
        let r = self.r();
        let mut t = self.zero();
        for k in 0..r {
            t[x * r + k] = a[k].clone();
        }
        t
    }

    fn mul(&self, x: &Affine, y: &Affine) -> Affine {
        let lin = if self.r() == 0 { Vec::new() } else { self.add(&self.compose(&x.lin, &self.act(&y.value)), &y.lin) };
        Affine { value: x.value.mul(&y.value), lin }
    }

    fn inv(&self, x: &Affine) -> Affine {
        let value = x.value.inverse();
        let lin = if self.r() == 0 { Vec::new() } else { self.neg(&self.compose(&x.lin, &self.act(&value))) };
        Affine { value, lin }
    }

    /// Outputs of `slp` evaluated at `fμ`.
    pub fn evaluate(&self, slp: &Slp, f: &[Permutation]) -> Vec<Affine> {
        let r = self.r();
        let ident: Lin = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
        let gens: Vec<Affine> =
            f.iter().enumerate().map(|(x, g)| Affine { value: g.clone(), lin: self.slot(x, &ident) }).collect();
        let one = Affine { value: Permutation::identity(self.pres.degree()), lin: self.zero() };
        slp.evaluate_with(&gens, &one, |a, b| self.mul(a, b), |a| self.inv(a))
    }
}

/// Linear equations `lin(μ) = rhs` over the coordinates of `M`.
pub(crate) struct LinearSystem<'a> {
    pres: &'a AbelianPresentation,
    nx: usize,
    equations: Vec<(Lin, Vec<u64>)>,
}

/// `μ` as coordinate vectors, one per symbol, and generators of the
/// homogeneous solutions.
pub(crate) type Coords = Vec<Vec<u64>>;

impl<'a> LinearSystem<'a> {
    pub fn new(pres: &'a AbelianPresentation, nx: usize) -> Self {
        LinearSystem { pres, nx, equations: Vec::new() }
    }

    pub fn push(&mut self, lin: Lin, rhs: Vec<u64>) {
        self.equations.push((lin, rhs));
    }

    /// Require `a.value * a.lin(μ) = 1`. Fails at once when the value lies
    /// outside `M`.
    pub fn push_trivial(&mut self, a: &Affine) -> bool {
        match self.pres.coordinates(&a.value) {
            None => false,
            Some(c) => {
                let rhs = c.iter().enumerate().map(|(j, &v)| sub_mod(0, v, self.pres.modulus(j))).collect();
                self.push(a.lin.clone(), rhs);
                true
            }
        }
    }

    /// A particular solution and homogeneous generators, or `None`.
    pub fn solve(&self) -> Option<(Coords, Vec<Coords>)> {
        let r = self.pres.len();
        let nx = self.nx;
        let mut particular = vec![vec![0u64; r]; nx];
        let mut kernel: Vec<Coords> = Vec::new();
        for p in self.pres.prime_set() {
            let range = self.pres.prime_range(p);
            let local: Vec<(usize, usize)> = (0..nx).flat_map(|x| range.clone().map(move |k| (x, k))).collect();
            let unknown_exps: Vec<u32> = local.iter().map(|&(_, k)| self.pres.exps()[k]).collect();
            let mut rows = Vec::new();
            for (lin, rhs) in &self.equations {
                for j in range.clone() {
                    let coeffs: Vec<u64> = local.iter().map(|&(x, k)| lin[x * r + k][j]).collect();
                    let rhs = rhs[j];
                    if rhs == 0 && coeffs.iter().all(|&c| c == 0) {
                        continue;
                    }
                    rows.push(Row { coeffs, rhs, exp: self.pres.exps()[j] });
                }
            }
            let sol = if rows.is_empty() {
                zmod::Solution {
                    particular: vec![0; local.len()],
                    kernel: (0..local.len())
                        .map(|i| (0..local.len()).map(|j| u64::from(i == j)).collect())
                        .collect(),
                }
            } else {
                zmod::solve(p, &unknown_exps, &rows)?
            };
            for (&(x, k), &v) in local.iter().zip(&sol.particular) {
                particular[x][k] = v;
            }
            for vec in &sol.kernel {
                if vec.iter().all(|&v| v == 0) {
                    continue;
                }
                let mut c = vec![vec![0u64; r]; nx];
                for (&(x, k), &v) in local.iter().zip(vec) {
                    c[x][k] = v;
                }
                kernel.push(c);
            }
        }
        Some((particular, kernel))
    }
}

/// Solutions `μ ∈ M^X` of `w(fμ) = 1`, as elements of `M`.
#[derive(Clone, Debug)]
pub struct ModuleSolution {
    pub particular: Vec<Permutation>,
    pub homogeneous: Vec<Vec<Permutation>>,
}

/// Solve `w(fμ) = 1` for every output `w` of `words`, with `f` given by
/// elements of `g` and `μ` ranging over the abelian normal subgroup `m`.
pub fn solve_module_equations(
    g: &PermGroup,
    m: &PermGroup,
    f: &[Permutation],
    words: &Slp,
) -> Result<Option<ModuleSolution>, DecompError> {
    if !m.is_subgroup_of(g) || !f.iter().all(|x| g.contains(x)) {
        return Err(DecompError::NotSubgroup);
    }
    if !m.is_abelian() {
        return Err(DecompError::NotAbelian);
    }
    if let Some(w) = m.normalizer_witness(g.gens()) {
        return Err(PermError::NotNormal(w).into());
    }
    if words.ngens != f.len() {
        return Err(PermError::ImageCount { expected: words.ngens, found: f.len() }.into());
    }
    let pres = primary_decomposition(m)?;
    let module = AffineModule::new(&pres, f.len());
    let mut system = LinearSystem::new(&pres, f.len());
    for a in module.evaluate(words, f) {
        if !system.push_trivial(&a) {
            return Ok(None);
        }
    }
    let Some((particular, kernel)) = system.solve() else { return Ok(None) };
    let to_elements = |c: &Coords| c.iter().map(|v| pres.element(v)).collect::<Vec<_>>();
    Ok(Some(ModuleSolution {
        particular: to_elements(&particular),
        homogeneous: kernel.iter().map(to_elements).collect(),
    }))
}

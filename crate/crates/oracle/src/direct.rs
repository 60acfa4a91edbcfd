use std::collections::HashMap;

use crate::{all_normal_subgroups, OracleError, SmallGroup, Subgroup};

/// Outcome of [`is_direct_decomposition`], with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectVerdict {
    Direct,
    /// `parts[part]` is not closed under multiplication.
    NotSubgroup { part: usize },
    Trivial { part: usize },
    /// `element` of `parts[part]` conjugated by generator `by` leaves it.
    NotNormal { part: usize, element: usize, by: usize },
    /// The parts generate a subgroup of this order only.
    NotGenerating { order: usize },
    /// `element ≠ 1` lies in `parts[part]` and in the span of the others.
    Intersects { part: usize, element: usize },
}

impl DirectVerdict {
    pub fn is_direct(&self) -> bool {
        *self == DirectVerdict::Direct
    }
}

/// Check, element by element, that `parts` are nontrivial normal
/// subgroups generating `g` with `H ∩ ⟨parts − H⟩ = 1` for each `H`.
pub fn is_direct_decomposition(g: &SmallGroup, parts: &[Subgroup]) -> DirectVerdict {
    for (i, h) in parts.iter().enumerate() {
        let elts = h.elements();
        if !h.contains(0) || elts.iter().any(|&a| elts.iter().any(|&b| !h.contains(g.mul(a, b)))) {
            return DirectVerdict::NotSubgroup { part: i };
        }
        if h.is_trivial() {
            return DirectVerdict::Trivial { part: i };
        }
        for &x in &elts {
            for &s in g.gens() {
                if !h.contains(g.conj(x, s)) {
                    return DirectVerdict::NotNormal { part: i, element: x, by: s };
                }
            }
        }
    }
    let all: Vec<usize> = parts.iter().flat_map(|h| h.elements()).collect();
    let span = g.generate(&all);
    if span.order() != g.order() {
        return DirectVerdict::NotGenerating { order: span.order() };
    }
    for (i, h) in parts.iter().enumerate() {
        let rest: Vec<usize> =
            parts.iter().enumerate().filter(|&(j, _)| j != i).flat_map(|(_, k)| k.elements()).collect();
        let r = g.generate(&rest);
        if let Some(x) = h.elements().into_iter().find(|&x| x != 0 && r.contains(x)) {
            return DirectVerdict::Intersects { part: i, element: x };
        }
    }
    DirectVerdict::Direct
}

/// Remak decomposition by exhaustive search. Abelian groups are split into
/// cyclic factors of prime power order read off the element-order census;
/// otherwise the normal subgroup lattice is scanned for pairs `(N, C)` with
/// `N ∩ C = 1` and `|N||C| = |G|`, recursing until no pair exists.
pub fn brute_remak(g: &SmallGroup, lattice_bound: usize) -> Result<Vec<Subgroup>, OracleError> {
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    if g.is_abelian() {
        return Ok(abelian_remak(g));
    }
    let lattice = all_normal_subgroups(g, lattice_bound)?;
    let mut out = Vec::new();
    split(&lattice, &g.whole(), &mut out);
    Ok(out)
}

fn split(lattice: &[Subgroup], x: &Subgroup, out: &mut Vec<Subgroup>) {
    let inside: Vec<&Subgroup> = lattice.iter().filter(|n| n.is_subset(x)).collect();
    let mut by_order: HashMap<usize, Vec<&Subgroup>> = HashMap::new();
    for n in &inside {
        by_order.entry(n.order()).or_default().push(n);
    }
    let total = x.order();
    for n in &inside {
        let a = n.order();
        if a == 1 || a * a > total {
            continue;
        }
        let Some(cs) = by_order.get(&(total / a)) else { continue };
        if total % a != 0 {
            continue;
        }
        if let Some(c) = cs.iter().find(|c| c.meet_order(n) == 1) {
            split(lattice, n, out);
            split(lattice, c, out);
            return;
        }
    }
    out.push(x.clone());
}

/// `(p, e)` with `p` prime, `p^e` exactly dividing `n`.
fn prime_powers(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn abelian_remak(g: &SmallGroup) -> Vec<Subgroup> {
    let n = g.order();
    let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let mut out = Vec::new();
    for (p, e) in prime_powers(n) {
        // |{x : x^(p^k) = 1}| = p^(sum over factors of min(k, e_i))
        let torsion = |k: u32| orders.iter().filter(|&&o| p.pow(k) % o == 0).count();
        let mut invariants = Vec::new();
        let mut prev = 1;
        let mut at_least = Vec::new();
        for k in 1..=e {
            let t = torsion(k);
            at_least.push((t / prev).ilog(p) as usize);
            prev = t;
        }
        for k in (1..=e as usize).rev() {
            let beyond = if k < e as usize { at_least[k] } else { 0 };
            for _ in 0..at_least[k - 1] - beyond {
                invariants.push(p.pow(k as u32));
            }
        }
        let mut basis = Vec::new();
        let found = extend_basis(g, &orders, &invariants, &g.trivial(), &mut basis);
        debug_assert!(found, "abelian basis search failed");
        out.extend(basis.iter().map(|&x| g.generate(&[x])));
    }
    out
}

fn extend_basis(g: &SmallGroup, orders: &[usize], targets: &[usize], s: &Subgroup, basis: &mut Vec<usize>) -> bool {
    let Some((&t, rest)) = targets.split_first() else { return true };
    for x in 0..g.order() {
        if orders[x] != t || s.contains(x) {
            continue;
        }
        let c = g.generate(&[x]);
        if c.meet_order(s) != 1 {
            continue;
        }
        let mut gens = basis.clone();
        gens.push(x);
        let next = g.close(s, &gens);
        basis.push(x);
        if extend_basis(g, orders, rest, &next, basis) {
            return true;
        }
        basis.pop();
    }
    false
}

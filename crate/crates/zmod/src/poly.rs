//! Dense polynomials over F_p, coefficients stored low degree first with no
//! trailing zeros (the zero polynomial is the empty vector).

use crate::{inv_mod, mul_mod, sub_mod};

pub type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &Poly) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn sub(p: u64, f: &Poly, g: &Poly) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| sub_mod(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0), p))
        .collect();
    trim(out)
}

pub fn mul(p: u64, f: &Poly, g: &Poly) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(*a, *b, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder; `g` must be nonzero.
pub fn divrem(p: u64, f: &Poly, g: &Poly) -> (Poly, Poly) {
    let dg = degree(g).expect("division by zero polynomial");
    let lead_inv = inv_mod(g[dg], p).expect("p prime");
    let mut r = f.clone();
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - dg];
    for i in (dg..r.len()).rev() {
        let c = mul_mod(r[i], lead_inv, p);
        if c == 0 {
            continue;
        }
        q[i - dg] = c;
        for j in 0..=dg {
            r[i - dg + j] = sub_mod(r[i - dg + j], mul_mod(c, g[j], p), p);
        }
    }
    (trim(q), trim(r))
}

pub fn monic(p: u64, f: &Poly) -> Poly {
    match f.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv_mod(l, p).expect("p prime");
            f.iter().map(|c| mul_mod(*c, li, p)).collect()
        }
    }
}

pub fn gcd(p: u64, f: &Poly, g: &Poly) -> Poly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = divrem(p, &a, &b).1;
        a = b;
        b = r;
    }
    monic(p, &a)
}

pub fn derivative(p: u64, f: &Poly) -> Poly {
    let out = f.iter().enumerate().skip(1).map(|(i, c)| mul_mod(*c, i as u64 % p, p)).collect();
    trim(out)
}

/// Ben-Or irreducibility test.
pub fn is_irreducible(p: u64, f: &Poly) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    let mut h: Poly = vec![0, 1];
    for _ in 1..=d / 2 {
        // h <- h^p mod f
        let mut acc: Poly = vec![1];
        for _ in 0..p {
            acc = divrem(p, &mul(p, &acc, &h), f).1;
        }
        h = acc;
        let g = gcd(p, &sub(p, &h, &vec![0, 1]), f);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Whether `f` (nonconstant) is a power of a single irreducible polynomial.
pub fn is_primary(p: u64, f: &Poly) -> bool {
    let f = monic(p, f);
    match degree(&f) {
        None | Some(0) => return false,
        Some(1) => return true,
        _ => {}
    }
    let df = derivative(p, &f);
    if df.is_empty() {
        // f(x) = h(x^p) = h(x)^p over F_p.
        let h: Poly = f.iter().step_by(p as usize).copied().collect();
        return is_primary(p, &h);
    }
    let g = gcd(p, &f, &df);
    let s = divrem(p, &f, &g).0;
    if !is_irreducible(p, &s) {
        return false;
    }
    let mut rest = f;
    while degree(&rest) != Some(0) {
        let (q, r) = divrem(p, &rest, &s);
        if !r.is_empty() {
            return false;
        }
        rest = q;
    }
    true
}

/// Minimal polynomial of a square matrix over F_p (monic).
pub fn min_poly(p: u64, m: &[Vec<u64>]) -> Poly {
    let d = m.len();
    let mut pow: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|j| u64::from(i == j) % p).collect())
        .collect();
    // Echelon rows: (pivot, vector, combination over powers of m).
    let mut basis: Vec<(usize, Vec<u64>, Poly)> = Vec::new();
    for k in 0..=d * d {
        let mut v: Vec<u64> = pow.iter().flatten().copied().collect();
        let mut comb: Vec<u64> = vec![0; k + 1];
        comb[k] = 1;
        for (piv, bv, bc) in &basis {
            let c = v[*piv];
            if c == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(bv) {
                *x = sub_mod(*x, mul_mod(c, *y, p), p);
            }
            for (i, y) in bc.iter().enumerate() {
                comb[i] = sub_mod(comb[i], mul_mod(c, *y, p), p);
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => return monic(p, &trim(comb)),
            Some(piv) => {
                let inv = inv_mod(v[piv], p).expect("p prime");
                let v: Vec<u64> = v.iter().map(|x| mul_mod(*x, inv, p)).collect();
                let comb: Vec<u64> = comb.iter().map(|x| mul_mod(*x, inv, p)).collect();
                basis.push((piv, v, comb));
            }
        }
        let next: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).fold(0u64, |acc, t| (acc + mul_mod(pow[i][t], m[t][j], p)) % p))
                    .collect()
            })
            .collect();
        pow = next;
    }
    unreachable!("Cayley-Hamilton bounds the degree")
}

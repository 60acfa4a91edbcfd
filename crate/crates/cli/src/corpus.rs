use perm_core::catalog::{
    abelian, alternating, central_product_gl23, d8, d8_matrices, direct_product, heisenberg, q8, q8_matrices, sl23,
    sl23_matrices, symmetric,
};
use perm_core::PermGroup;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: PermGroup,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, group: PermGroup) -> Self {
        CorpusEntry { name: name.into(), group }
    }
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorize(mut n: usize) -> Vec<(usize, u32)> {
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

/// Elementary divisors of every abelian group of order `n`.
pub fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let parts: Vec<Vec<usize>> =
            partitions(e, e).into_iter().map(|l| l.into_iter().map(|k| p.pow(k)).collect()).collect();
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                parts.iter().map(move |part| {
                    let mut v = prefix.clone();
                    v.extend(part);
                    v
                })
            })
            .collect();
    }
    out
}

fn abelian_name(orders: &[usize]) -> String {
    if orders.is_empty() {
        return "1".into();
    }
    orders.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x")
}

/// Every abelian group of order at most `max`, trivial group included.
pub fn abelian_corpus(max: usize) -> Vec<CorpusEntry> {
    (1..=max)
        .flat_map(|n| abelian_types(n).into_iter().map(|t| CorpusEntry::new(abelian_name(&t), abelian(&t))))
        .collect()
}

/// D8, Q8, S3, S4, A4 and SL(2,3).
pub fn base_groups() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::new("D8", d8()),
        CorpusEntry::new("Q8", q8()),
        CorpusEntry::new("S3", symmetric(3)),
        CorpusEntry::new("S4", symmetric(4)),
        CorpusEntry::new("A4", alternating(4)),
        CorpusEntry::new("SL23", sl23()),
    ]
}

pub fn central_products() -> Vec<CorpusEntry> {
    let (d, q, s) = (d8_matrices(), q8_matrices(), sl23_matrices());
    vec![
        CorpusEntry::new("D8oD8", central_product_gl23(&d, &d)),
        CorpusEntry::new("Q8oQ8", central_product_gl23(&q, &q)),
        CorpusEntry::new("SL23oSL23", central_product_gl23(&s, &s)),
    ]
}

/// Products of two or three base groups of order at most `max`.
pub fn base_products(max: u128) -> Vec<CorpusEntry> {
    let base = base_groups();
    let n = base.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let pair = [&base[i], &base[j]];
            if pair.iter().map(|e| e.group.order()).product::<u128>() <= max {
                out.push(product(&pair));
            }
            for k in j..n {
                let triple = [&base[i], &base[j], &base[k]];
                if triple.iter().map(|e| e.group.order()).product::<u128>() <= max {
                    out.push(product(&triple));
                }
            }
        }
    }
    out
}

fn product(parts: &[&CorpusEntry]) -> CorpusEntry {
    let name = parts.iter().map(|e| e.name.as_str()).collect::<Vec<_>>().join("x");
    let groups: Vec<PermGroup> = parts.iter().map(|e| e.group.clone()).collect();
    CorpusEntry::new(name, direct_product(&groups))
}

/// Exponent-3 and exponent-5 groups with centre inside the Frattini
/// subgroup, and one product with an abelian factor.
pub fn heisenberg_groups() -> Vec<CorpusEntry> {
    let h3 = heisenberg(3);
    vec![
        CorpusEntry::new("He3", h3.clone()),
        CorpusEntry::new("He5", heisenberg(5)),
        CorpusEntry::new("He3xHe3", direct_product(&[h3.clone(), h3.clone()])),
        CorpusEntry::new("He3xZ3", direct_product(&[h3, abelian(&[3])])),
    ]
}

/// The full test corpus: abelian groups of order at most 256, the base
/// groups and their products up to order 2000, central products, and
/// Heisenberg groups.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = abelian_corpus(256);
    out.extend(base_groups());
    out.extend(base_products(2000));
    out.extend(central_products());
    out.extend(heisenberg_groups());
    out
}

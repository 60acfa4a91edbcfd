//! Acceptance criteria 1 to 9, one line each. Runs without the test
//! harness so the lines always reach stdout.

use std::time::{Duration, Instant};

use cli::check::{compare_with_oracle, match_isomorphic, small_group};
use cli::commands::{centroid_parts, decompose, decompose_group, Options};
use cli::corpus::{base_groups, central_products, corpus, CorpusEntry};
use cli::input::{load_group, perm_file, table_file};
use decomp::{direct_complement, extend, find_remak, Complement, Decomposition, Refusal, Settings};
use oracle::{brute_remak, Bounds};
use perm_core::algo::{center, derived_subgroup};
use perm_core::catalog::{abelian, alternating, cyclic, d8, q8, sl23, symmetric};
use perm_core::{OperatorSet, PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ring::{cyclic_ring, direct_sum, truncated_polynomial_ring, Elem, FiniteCommRing};

type Outcome = Result<String, String>;

fn none() -> OperatorSet {
    OperatorSet::new()
}

fn settings() -> Settings {
    Settings::default()
}

fn orders(d: &Decomposition) -> Vec<u128> {
    d.orders()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// External direct product with the embedded copies of each part.
fn embed(parts: &[PermGroup]) -> (PermGroup, Vec<PermGroup>) {
    let degree: usize = parts.iter().map(|g| g.degree()).sum();
    let mut start = 0;
    let mut pieces = Vec::new();
    for g in parts {
        let gens: Vec<Permutation> = g
            .gens()
            .iter()
            .map(|x| {
                let mut im: Vec<usize> = (0..degree).collect();
                for p in 0..g.degree() {
                    im[start + p] = start + x.image(p);
                }
                Permutation::from_images(im).unwrap()
            })
            .collect();
        pieces.push(PermGroup::generated(degree, gens));
        start += g.degree();
    }
    let all = pieces.iter().flat_map(|h| h.gens().iter().cloned()).collect();
    (PermGroup::generated(degree, all), pieces)
}

fn same_subgroup(a: &PermGroup, b: &PermGroup) -> bool {
    a.order() == b.order() && a.is_subgroup_of(b)
}

fn is_class2_p_group(g: &PermGroup) -> bool {
    let n = g.order();
    if n == 1 {
        return false;
    }
    let p = (2..=n).find(|d| n % d == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1 && !g.is_abelian() && derived_subgroup(g).is_subgroup_of(&center(g))
}

fn criterion1() -> Outcome {
    let groups: Vec<CorpusEntry> = corpus().into_iter().filter(|e| e.group.order() <= 2000).collect();
    ensure(groups.len() >= 200, || format!("corpus has only {} groups", groups.len()))?;
    let bounds = Bounds::default();
    let results: Vec<Result<bool, String>> = groups
        .par_iter()
        .map(|e| {
            let d = find_remak(&e.group, &none(), &settings()).map_err(|x| format!("{}: {x}", e.name))?;
            let c = compare_with_oracle(&d, &bounds).map_err(|x| format!("{}: {x}", e.name))?;
            if !c.agrees() {
                return Err(format!("{}: pipeline {:?}, oracle {:?}, iso {:?}", e.name, c.pipeline, c.oracle, c.isomorphic));
            }
            Ok(c.isomorphic == Some(true))
        })
        .collect();
    let mut iso = 0;
    for r in results {
        iso += r? as usize;
    }
    Ok(format!("{} groups agree, {iso} with factors matched up to isomorphism", groups.len()))
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let g = perm_core::catalog::four_factor_example();
    ensure(g.order() == 442_368, || format!("order {}", g.order()))?;
    let d = find_remak(&g, &none(), &settings()).map_err(|e| e.to_string())?;
    ensure(d.is_direct && d.verify(&none()), || "certificate fails".into())?;
    ensure(orders(&d) == vec![8, 8, 24, 288], || format!("orders {:?}", orders(&d)))?;
    let z2 = perm_core::algo::upper_central_term(&g, 2, settings().coset_bound).map_err(|e| e.to_string())?;
    let parts = centroid_parts(&z2, settings().coset_bound).map_err(|e| e.to_string())?;
    ensure(parts.len() == 1 && parts[0].p == 2, || format!("{parts:?}"))?;
    ensure(parts[0].rank == 2 && parts[0].frame_size == 2, || format!("{parts:?}"))?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(300), || format!("took {t:?}"))?;
    Ok(format!("orders 8 8 24 288, centroid of Bi(ζ2) rank 2 with frame 2, {:.1}s", t.as_secs_f64()))
}

fn criterion3() -> Outcome {
    let all = corpus();
    let small: Vec<&CorpusEntry> = all.iter().filter(|e| e.group.order() <= 64 && is_class2_p_group(&e.group)).collect();
    let rank = |g: &PermGroup| -> Result<usize, String> {
        let parts = centroid_parts(g, settings().coset_bound).map_err(|e| e.to_string())?;
        Ok(parts.iter().map(|c| c.rank).sum())
    };
    let mut pairs = 0;
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            if a.group.order() % 2 != b.group.order() % 2 {
                continue;
            }
            let (ab, _) = embed(&[a.group.clone(), b.group.clone()]);
            let (ra, rb, rab) = (rank(&a.group)?, rank(&b.group)?, rank(&ab)?);
            ensure(rab == ra + rb, || format!("{} x {}: {rab} != {ra} + {rb}", a.name, b.name))?;
            pairs += 1;
        }
    }
    ensure(pairs > 0, || "no class-2 pairs".into())?;
    let mut exp_p = 0;
    for e in all.iter().filter(|e| is_class2_p_group(&e.group)) {
        let g = &e.group;
        let p = (2..).find(|d| g.order() % d == 0).unwrap();
        let exponent_p = g.elements().iter().all(|x| x.pow(p as i64).is_identity());
        // for exponent p the Frattini subgroup is the derived subgroup
        if !exponent_p || !center(g).is_subgroup_of(&derived_subgroup(g)) {
            continue;
        }
        let parts = centroid_parts(g, settings().coset_bound).map_err(|e| e.to_string())?;
        let local = parts.iter().map(|c| c.frame_size).sum::<usize>() == 1;
        let s = small_group(g, oracle::DEFAULT_ORDER_BOUND).map_err(|e| e.to_string())?;
        let indecomposable = brute_remak(&s, oracle::DEFAULT_LATTICE_BOUND).map_err(|e| e.to_string())?.len() == 1;
        ensure(local == indecomposable, || format!("{}: local {local}, indecomposable {indecomposable}", e.name))?;
        exp_p += 1;
    }
    ensure(exp_p > 0, || "no exponent-p groups".into())?;
    Ok(format!("centroid rank additive on {pairs} pairs, locality matches indecomposability on {exp_p} groups"))
}

/// A random basis of an abelian group, with the same cyclic orders as its
/// primary basis.
fn random_basis(z: &PermGroup, rng: &mut ChaCha8Rng) -> Vec<PermGroup> {
    if z.is_trivial() {
        return Vec::new();
    }
    let pres = abelian::primary_decomposition(z).unwrap();
    let basis = pres.basis().to_vec();
    let target = pres.orders();
    loop {
        let ys: Vec<Permutation> = basis
            .iter()
            .map(|_| {
                basis.iter().zip(&target).fold(Permutation::identity(z.degree()), |acc, (b, &m)| {
                    acc.mul(&b.pow(rng.gen_range(0..m as i64)))
                })
            })
            .collect();
        let ok = ys.iter().zip(&target).all(|(y, &m)| y.order() == m as u128)
            && PermGroup::generated(z.degree(), ys.clone()).order() == z.order();
        if ok {
            return ys.into_iter().map(|y| PermGroup::generated(z.degree(), vec![y])).collect();
        }
    }
}

fn criterion4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let pool: Vec<(bool, PermGroup)> = vec![
        (false, d8()),
        (false, q8()),
        (false, symmetric(3)),
        (false, alternating(4)),
        (false, sl23()),
        (true, cyclic(2)),
        (true, cyclic(3)),
        (true, cyclic(4)),
        (true, abelian(&[2, 2])),
    ];
    let mut kept_checks = 0;
    for round in 0..100 {
        let k = rng.gen_range(2..=3);
        let picks: Vec<&(bool, PermGroup)> = (0..k).map(|_| pool.choose(&mut rng).unwrap()).collect();
        let (g, pieces) = embed(&picks.iter().map(|(_, h)| h.clone()).collect::<Vec<_>>());
        let mut members: Vec<PermGroup> = Vec::new();
        let mut central: Vec<Permutation> = Vec::new();
        for ((is_abelian, _), h) in picks.iter().zip(&pieces) {
            if !*is_abelian && rng.gen_bool(0.6) {
                members.push(h.clone());
            } else {
                central.extend(center(h).gens().iter().cloned());
            }
        }
        members.extend(random_basis(&PermGroup::generated(g.degree(), central), &mut rng));
        members.shuffle(&mut rng);
        let span = PermGroup::generated(g.degree(), members.iter().flat_map(|m| m.gens().iter().cloned()).collect());
        ensure(same_subgroup(&center(&span), &center(&g)), || format!("round {round}: bad instance"))?;
        let e = extend(&g, &members, &none(), &settings()).map_err(|x| format!("round {round}: {x}"))?;
        let out = e.factors();
        let d = Decomposition::new(&g, out.clone(), &none(), false);
        ensure(d.is_direct, || format!("round {round}: output not direct"))?;
        let new = out.iter().filter(|h| !members.iter().any(|m| same_subgroup(h, m))).count();
        ensure(new <= 1, || format!("round {round}: {new} new factors"))?;
        for m in members.iter().filter(|m| !m.is_abelian()) {
            let c = direct_complement(&g, m, &none(), &settings()).map_err(|x| x.to_string())?;
            if matches!(c, Complement::Found(_)) {
                ensure(e.kept.iter().any(|h| same_subgroup(h, m)), || format!("round {round}: factor dropped"))?;
                kept_checks += 1;
            }
        }
    }
    let (g, pieces) = embed(&[d8(), cyclic(2)]);
    let r = pieces[0].gens()[0].clone();
    let z = pieces[1].gens()[0].clone();
    let k = vec![PermGroup::generated(g.degree(), vec![r.pow(2).mul(&z)]), PermGroup::generated(g.degree(), vec![z])];
    let e = extend(&g, &k, &none(), &settings()).map_err(|x| x.to_string())?;
    ensure(e.kept.len() == 1 && e.leftover.as_ref().map(|l| l.order()) == Some(8), || {
        format!("D8xZ2: kept {}, leftover {:?}", e.kept.len(), e.leftover.as_ref().map(|l| l.order()))
    })?;
    Ok(format!("100 instances, {kept_checks} nonabelian factors kept, D8xZ2 keeps one of two"))
}

fn criterion5() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pool: Vec<PermGroup> = base_groups().into_iter().map(|e| e.group).collect();
    pool.extend([cyclic(2), cyclic(3), cyclic(4), abelian(&[2, 2]), cyclic(5)]);
    pool.extend(central_products().into_iter().filter(|e| e.group.order() <= 32).map(|e| e.group));
    for round in 0..100 {
        let a = pool.choose(&mut rng).unwrap().clone();
        let b = pool.choose(&mut rng).unwrap().clone();
        let (g, pieces) = embed(&[a, b]);
        let h = &pieces[0];
        match direct_complement(&g, h, &none(), &settings()).map_err(|x| format!("round {round}: {x}"))? {
            Complement::Found(k) => {
                let d = Decomposition::new(&g, vec![h.clone(), k], &none(), false);
                ensure(d.is_direct && d.verify(&none()), || format!("round {round}: invalid complement"))?;
            }
            Complement::NotFactor(r) => return Err(format!("round {round}: refused with {r:?}")),
        }
    }
    type Template = (PermGroup, fn(&PermGroup) -> PermGroup, &'static str);
    let sub = |g: &PermGroup, gens: Vec<Permutation>| PermGroup::generated(g.degree(), gens);
    let _ = sub;
    let templates: Vec<Template> = vec![
        (symmetric(3), |a| PermGroup::generated(a.degree(), vec![a.gens()[1].clone()]), "not-invariant"),
        (d8(), |a| PermGroup::generated(a.degree(), vec![a.gens()[1].clone()]), "not-invariant"),
        (symmetric(3), |a| PermGroup::generated(a.degree(), vec![a.gens()[0].clone()]), "product-too-small"),
        (d8(), |a| PermGroup::generated(a.degree(), vec![a.gens()[0].clone()]), "product-too-small"),
        (symmetric(4), |_| alternating(4), "product-too-small"),
        (sl23(), derived_subgroup, "product-too-small"),
        (d8(), center, "infeasible"),
        (q8(), center, "infeasible"),
        (sl23(), center, "infeasible"),
        (cyclic(4), |a| PermGroup::generated(a.degree(), vec![a.gens()[0].pow(2)]), "infeasible"),
    ];
    let mut by_stage = std::collections::BTreeMap::new();
    for round in 0..100 {
        let (a, pick, stage) = &templates[round % templates.len()];
        let x = pool.choose(&mut rng).unwrap().clone();
        let ha = pick(a);
        let (g, pieces) = embed(&[a.clone(), x]);
        // carry `ha` into the first factor of g
        let h = PermGroup::generated(
            g.degree(),
            ha.gens()
                .iter()
                .map(|y| {
                    let mut im: Vec<usize> = (0..g.degree()).collect();
                    for p in 0..a.degree() {
                        im[p] = y.image(p);
                    }
                    Permutation::from_images(im).unwrap()
                })
                .collect(),
        );
        ensure(h.is_subgroup_of(&pieces[0]), || format!("round {round}: bad template"))?;
        let got = match direct_complement(&g, &h, &none(), &settings()).map_err(|x| x.to_string())? {
            Complement::Found(_) => "found",
            Complement::NotFactor(r) => match r {
                Refusal::NotInvariant(_) => "not-invariant",
                Refusal::ProductTooSmall { .. } => "product-too-small",
                Refusal::CentralizerNotInvariant(_) => "centralizer-not-invariant",
                Refusal::Infeasible => "infeasible",
            },
        };
        ensure(got == *stage, || format!("round {round}: expected {stage}, got {got}"))?;
        *by_stage.entry(*stage).or_insert(0) += 1;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(120), || format!("took {t:?}"))?;
    Ok(format!("100 complements verified, 100 refusals at the expected stage {by_stage:?}"))
}

fn ring_elements(r: &FiniteCommRing, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    let size: u128 = (0..r.rank()).map(|i| r.modulus(i) as u128).product();
    if size <= 4096 {
        let mut out = vec![Vec::new()];
        for i in 0..r.rank() {
            let m = r.modulus(i);
            out = out
                .into_iter()
                .flat_map(|v: Elem| {
                    (0..m).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    } else {
        (0..2000).map(|_| (0..r.rank()).map(|i| rng.gen_range(0..r.modulus(i))).collect()).collect()
    }
}

fn criterion6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut rings: Vec<(String, FiniteCommRing)> = Vec::new();
    for p in [2u64, 3, 5] {
        let mut local = Vec::new();
        for e in 1..=3 {
            local.push((format!("Z{p}^{e}"), cyclic_ring(p, e)));
        }
        for k in 2..=3 {
            local.push((format!("F{p}[x]/x^{k}"), truncated_polynomial_ring(p, 1, k)));
        }
        local.push((format!("Z{p}^2[x]/x^2"), truncated_polynomial_ring(p, 2, 2)));
        rings.extend(local.iter().cloned());
        for i in 0..local.len() {
            for j in i..local.len() {
                if rings.len() < 50 + 3 && (i + j) % 2 == 0 {
                    let (a, b) = (&local[i], &local[j]);
                    rings.push((format!("{}+{}", a.0, b.0), direct_sum(&a.1, &b.1)));
                }
            }
        }
    }
    rings.truncate(50);
    ensure(rings.len() == 50, || format!("only {} rings", rings.len()))?;
    let mut lifted = 0;
    for (name, r) in &rings {
        for e in ring_elements(r, &mut rng) {
            let t = r.sub(&r.mul(&e, &e), &e);
            if r.nilpotency_index(&t).is_none() {
                continue;
            }
            let f = r.lift_idempotent(&e).map_err(|x| format!("{name}: {x}"))?;
            ensure(r.is_idempotent(&f), || format!("{name}: lift of {e:?} not idempotent"))?;
            let g = r.lift_idempotent(&r.sub(&r.one(), &e)).map_err(|x| format!("{name}: {x}"))?;
            ensure(g == r.sub(&r.one(), &f), || format!("{name}: lift(1-e) != 1-lift(e) at {e:?}"))?;
            lifted += 1;
        }
        let frame = sorted(r.frame());
        let n = r.rank();
        let perms: Vec<Vec<usize>> = vec![(0..n).rev().collect(), (0..n).map(|i| (i + 1) % n).collect()];
        for perm in perms {
            let back: Vec<Elem> = r
                .permute_basis(&perm)
                .frame()
                .into_iter()
                .map(|v| {
                    let mut w = vec![0u64; n];
                    for i in 0..n {
                        w[perm[i]] = v[i];
                    }
                    w
                })
                .collect();
            ensure(sorted(back) == frame, || format!("{name}: frame changes under {perm:?}"))?;
        }
    }
    Ok(format!("50 rings, {lifted} idempotent lifts checked, frames stable under basis permutation"))
}

fn sorted(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort();
    v
}

fn random_generating_set(g: &PermGroup, rng: &mut ChaCha8Rng) -> Vec<Permutation> {
    let mut gens = Vec::new();
    while PermGroup::generated(g.degree(), gens.clone()).order() != g.order() {
        let mut x = Permutation::identity(g.degree());
        for _ in 0..rng.gen_range(1..=20) {
            x = x.mul(g.gens().choose(rng).unwrap());
        }
        gens.push(x);
    }
    gens
}

fn criterion7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let all = corpus();
    let mut chosen: Vec<&CorpusEntry> = all.iter().filter(|e| !e.group.is_abelian()).collect();
    let abelian_fill: Vec<&CorpusEntry> = all.iter().filter(|e| e.group.is_abelian() && e.group.order() > 16).step_by(7).collect();
    chosen.extend(abelian_fill);
    chosen.truncate(50);
    ensure(chosen.len() == 50, || format!("only {} groups", chosen.len()))?;
    let sets: Vec<(String, [PermGroup; 3])> = chosen
        .iter()
        .map(|e| {
            let g = &e.group;
            let mut rev = g.gens().to_vec();
            rev.reverse();
            if rev.len() > 1 {
                rev.push(rev[0].mul(&rev[1]));
            }
            let rnd = random_generating_set(g, &mut rng);
            (e.name.clone(), [g.clone(), PermGroup::generated(g.degree(), rev), PermGroup::generated(g.degree(), rnd)])
        })
        .collect();
    let checked: Vec<Result<bool, String>> = sets
        .par_iter()
        .map(|(name, gs)| {
            let ds: Vec<Decomposition> = gs
                .iter()
                .map(|g| find_remak(g, &none(), &settings()).map_err(|x| format!("{name}: {x}")))
                .collect::<Result<_, _>>()?;
            for d in &ds[1..] {
                ensure(orders(d) == orders(&ds[0]), || format!("{name}: {:?} vs {:?}", orders(d), orders(&ds[0])))?;
            }
            let smalls = |d: &Decomposition| -> Result<Vec<oracle::SmallGroup>, String> {
                d.factors.iter().filter(|f| f.order() <= 512).map(|f| small_group(f, 5000).map_err(|x| x.to_string())).collect()
            };
            let base = smalls(&ds[0])?;
            let mut any = false;
            for d in &ds[1..] {
                match match_isomorphic(&smalls(d)?, &base, 512).map_err(|x| x.to_string())? {
                    Some(false) => return Err(format!("{name}: factors not isomorphic")),
                    Some(true) => any = true,
                    None => {}
                }
            }
            Ok(any)
        })
        .collect();
    let mut iso = 0;
    for c in checked {
        iso += c? as usize;
    }
    Ok(format!("50 groups on 3 generating sets, {iso} compared up to isomorphism"))
}

fn criterion8() -> Outcome {
    let groups: Vec<CorpusEntry> = corpus().into_iter().filter(|e| e.group.order() <= 128).collect();
    let opts = Options::default();
    let mut slowest = (Duration::ZERO, String::new());
    for e in &groups {
        let text = serde_json::to_string(&table_file(&e.group)).unwrap();
        let start = Instant::now();
        let loaded = load_group(&text).map_err(|x| format!("{}: {x}", e.name))?;
        let d = decompose_group(&loaded.group, &loaded.ops, &opts).map_err(|x| format!("{}: {x}", e.name))?;
        let t = start.elapsed();
        let reference = find_remak(&e.group, &none(), &settings()).map_err(|x| x.to_string())?;
        ensure(orders(&d) == orders(&reference), || format!("{}: table {:?}, perm {:?}", e.name, orders(&d), orders(&reference)))?;
        if t > slowest.0 {
            slowest = (t, e.name.clone());
        }
    }
    ensure(slowest.0 < Duration::from_secs(1), || format!("{} took {:?}", slowest.1, slowest.0))?;
    Ok(format!("{} tables, slowest {} at {:.0} ms", groups.len(), slowest.1, slowest.0.as_secs_f64() * 1000.0))
}

fn criterion9() -> Outcome {
    let groups = corpus();
    let opts = Options::default();
    let results: Vec<Result<(), String>> = groups
        .par_iter()
        .map(|e| {
            let text = serde_json::to_string(&perm_file(&e.group)).unwrap();
            let a = decompose(&text, None, &opts).map_err(|x| format!("{}: {x}", e.name))?;
            let b = decompose(&text, None, &opts).map_err(|x| format!("{}: {x}", e.name))?;
            ensure(a.to_json() == b.to_json() && a.to_text() == b.to_text(), || format!("{}: runs differ", e.name))
        })
        .collect();
    for r in results {
        r?;
    }
    Ok(format!("{} groups, two runs byte-identical", groups.len()))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("oracle equivalence", criterion1),
        ("four-factor example", criterion2),
        ("centroid rank and locality", criterion3),
        ("extend contract", criterion4),
        ("complement round trip", criterion5),
        ("idempotent lifting", criterion6),
        ("generating-set invariance", criterion7),
        ("multiplication tables", criterion8),
        ("determinism", criterion9),
    ];
    // optional criterion numbers on the command line select a subset
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let selected: Vec<(usize, &str, fn() -> Outcome)> = criteria
        .iter()
        .enumerate()
        .filter(|(i, _)| only.is_empty() || only.contains(&(i + 1)))
        .map(|(i, (name, f))| (i, *name, *f))
        .collect();
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&(i, _, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    eprintln!("criterion {} finished after {:.1}s", i + 1, start.elapsed().as_secs_f64());
                    (r, start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for ((i, name, _), (r, t)) in selected.iter().zip(&results) {
        let secs = t.as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {} {name}: PASS ({msg}; {secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({msg}; {secs:.1}s)", i + 1)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

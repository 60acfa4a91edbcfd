use decomp::{
    centralize_refine, complement_abelian, constructive_presentation, direct_complement, extend, find_remak, merge,
    reduce_general_operators, remak_class2, solve_module_equations, Complement, DecompError, Refusal, Settings,
};
use perm_core::algo::{center, upper_central_term};
use perm_core::catalog::{cyclic, d8, direct_product, dihedral, four_factor_example, q8, symmetric};
use perm_core::{Hom, Operator, OperatorSet, PermGroup, Permutation, Slp};

fn settings() -> Settings {
    Settings::default()
}

fn none() -> OperatorSet {
    OperatorSet::new()
}

fn sub(g: &PermGroup, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::generated(g.degree(), gens)
}

fn power_word(e: i64) -> Slp {
    Slp { ngens: 1, lines: vec![perm_core::Line::Gen(0), perm_core::Line::Pow(0, e)], outputs: vec![Some(1)] }
}

// points 1-based
fn transposition(n: usize, a: usize, b: usize) -> Permutation {
    Permutation::from_cycles(n, &[vec![a, b]]).unwrap()
}

#[test]
fn module_equations() {
    let z4 = cyclic(4);
    let a = z4.gens()[0].clone();

    let all = solve_module_equations(&z4, &z4, &[a.clone()], &power_word(4)).unwrap().unwrap();
    let span = sub(&z4, all.homogeneous.iter().map(|v| v[0].clone()).collect());
    assert_eq!(span.order(), 4);

    let m = sub(&z4, vec![a.pow(2)]);
    assert!(solve_module_equations(&z4, &m, &[a.clone()], &power_word(2)).unwrap().is_none());

    let s3 = symmetric(3);
    let a3 = center_free_a3(&s3);
    let t = transposition(3, 1, 2);
    let sol = solve_module_equations(&s3, &a3, &[t.clone()], &power_word(2)).unwrap().unwrap();
    let span = sub(&s3, sol.homogeneous.iter().map(|v| v[0].clone()).collect());
    assert_eq!(span.order(), 3);
    let x = t.mul(&sol.particular[0]);
    assert!(x.pow(2).is_identity());
}

fn center_free_a3(s3: &PermGroup) -> PermGroup {
    sub(s3, vec![Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()])
}

#[test]
fn module_equations_reject_nonabelian() {
    let s3 = symmetric(3);
    let t = transposition(3, 1, 2);
    assert!(matches!(solve_module_equations(&s3, &s3, &[t], &power_word(2)), Err(DecompError::NotAbelian)));
}

#[test]
fn presentations() {
    let bound = settings().coset_bound;
    let g = d8();
    let p = constructive_presentation(&g, &g, &settings()).unwrap();
    assert!(p.is_empty());

    let s3 = symmetric(3);
    let a3 = center_free_a3(&s3);
    let p = constructive_presentation(&s3, &a3, &settings()).unwrap();
    assert_eq!(p.len(), 1);
    assert_eq!(p.quotient_order(), 2);
    assert!(!a3.contains(&p.gens()[0]));
    assert!(p.verify(bound));

    let z = center(&g);
    let p = constructive_presentation(&g, &z, &settings()).unwrap();
    assert_eq!(p.len(), 2);
    assert_eq!(p.coset_count(bound), Some(4));
    assert!(p.verify(bound));
    for r in p.relator_values() {
        assert!(z.contains(&r));
    }
    for x in g.elements() {
        let w = p.rewrite(&x).unwrap();
        let y = p.evaluate(&w).swap_remove(0);
        assert!(z.contains(&y.inverse().mul(&x)));
    }
}

#[test]
fn presentation_of_larger_quotient() {
    let g = four_factor_example();
    let z = center(&g);
    let p = constructive_presentation(&g, &z, &settings()).unwrap();
    assert_eq!(p.quotient_order() * z.order(), g.order());
    assert!(p.relator_values().iter().all(|r| z.contains(r)));
}

#[test]
fn abelian_complements() {
    let v = direct_product(&[cyclic(2), cyclic(2)]);
    let m = sub(&v, vec![v.gens()[0].clone()]);
    let k = complement_abelian(&v, &m, &none(), &settings()).unwrap().unwrap();
    assert_eq!(k.order(), 2);
    assert!(!m.contains(&k.gens()[0]));

    let z4 = cyclic(4);
    let m = sub(&z4, vec![z4.gens()[0].pow(2)]);
    assert!(complement_abelian(&z4, &m, &none(), &settings()).unwrap().is_none());

    let s3 = symmetric(3);
    let a3 = center_free_a3(&s3);
    let k = complement_abelian(&s3, &a3, &none(), &settings()).unwrap().unwrap();
    assert_eq!(k.order(), 2);
    assert_eq!(a3.extended(k.gens()).order(), 6);
}

#[test]
fn abelian_complement_respects_operators() {
    // Z2 × Z2 with the swap: the only invariant complement to the diagonal
    // does not exist, while the first factor is not invariant at all.
    let v = direct_product(&[cyclic(2), cyclic(2)]);
    let (a, b) = (v.gens()[0].clone(), v.gens()[1].clone());
    let swap = Hom::new(&v, vec![b.clone(), a.clone()], v.degree()).unwrap();
    let ops = OperatorSet::from_vec(vec![Operator::Map(swap)]);
    let diag = sub(&v, vec![a.mul(&b)]);
    assert!(complement_abelian(&v, &diag, &ops, &settings()).unwrap().is_none());
    let first = sub(&v, vec![a]);
    assert!(matches!(complement_abelian(&v, &first, &ops, &settings()), Err(DecompError::NotInvariant(_))));
}

#[test]
fn direct_complements() {
    let z6 = cyclic(6);
    let h = sub(&z6, vec![z6.gens()[0].pow(2)]);
    let k = direct_complement(&z6, &h, &none(), &settings()).unwrap();
    assert_eq!(k.group().unwrap().order(), 2);

    let s3 = symmetric(3);
    let a3 = center_free_a3(&s3);
    let r = direct_complement(&s3, &a3, &none(), &settings()).unwrap();
    assert!(matches!(r.refusal(), Some(Refusal::ProductTooSmall { product: 3, order: 6 })));

    let g = d8();
    let z = center(&g);
    let r = direct_complement(&g, &z, &none(), &settings()).unwrap();
    assert_eq!(r.refusal(), Some(&Refusal::Infeasible));

    let t = sub(&s3, vec![transposition(3, 1, 2)]);
    let r = direct_complement(&s3, &t, &none(), &settings()).unwrap();
    assert!(matches!(r.refusal(), Some(Refusal::NotInvariant(_))));
}

#[test]
fn direct_complement_of_a_factor() {
    let g = direct_product(&[d8(), q8()]);
    let d = sub(&g, g.gens()[..2].to_vec());
    let Complement::Found(k) = direct_complement(&g, &d, &none(), &settings()).unwrap() else {
        panic!("D8 is a direct factor");
    };
    assert_eq!(k.order(), 8);
    assert!(k.gens().iter().all(|x| d.gens().iter().all(|y| x.commutes_with(y))));
}

#[test]
fn extend_keeps_one_central_subgroup() {
    let g = direct_product(&[d8(), cyclic(2)]);
    let r = g.gens()[0].clone();
    let t = g.gens()[2].clone();
    let k = vec![sub(&g, vec![r.pow(2).mul(&t)]), sub(&g, vec![t.clone()])];
    let e = extend(&g, &k, &none(), &settings()).unwrap();
    assert_eq!(e.kept.len(), 1);
    assert_eq!(e.leftover.as_ref().map(|l| l.order()), Some(8));
    let d = decomp::Decomposition::new(&g, e.factors(), &none(), false);
    assert!(d.is_direct);
}

#[test]
fn extend_of_full_decomposition() {
    let g = direct_product(&[cyclic(2), cyclic(3)]);
    let k: Vec<PermGroup> = g.gens().iter().map(|x| sub(&g, vec![x.clone()])).collect();
    let e = extend(&g, &k, &none(), &settings()).unwrap();
    assert_eq!(e.kept.len(), 2);
    assert!(e.leftover.is_none());
}

#[test]
fn extend_in_elementary_abelian() {
    let g = direct_product(&[cyclic(2), cyclic(2), cyclic(2)]);
    let k = vec![sub(&g, vec![g.gens()[0].clone()])];
    let e = extend(&g, &k, &none(), &settings()).unwrap();
    assert_eq!(e.kept.len(), 1);
    let f = e.factors();
    assert!(f.len() - e.kept.len() <= 1);
    let d = decomp::Decomposition::new(&g, f, &none(), false);
    assert!(d.is_direct);
    assert_eq!(d.orders(), vec![2, 4]);
}

#[test]
fn extend_rejects_non_direct_input() {
    let g = cyclic(4);
    let k = vec![g.clone(), g.clone()];
    assert!(matches!(extend(&g, &k, &none(), &settings()), Err(DecompError::Hypothesis(_))));
}

#[test]
fn merge_class_two() {
    let g = direct_product(&[d8(), q8()]);
    let z = center(&g);
    let a: Vec<PermGroup> = z.gens().iter().map(|x| sub(&g, vec![x.clone()])).collect();
    assert_eq!(a.iter().map(|x| x.order()).product::<u128>(), 4);
    let hs = vec![z.extended(&g.gens()[..2]), z.extended(&g.gens()[2..])];
    let out = merge(&g, &a, &hs, &none(), &settings()).unwrap();
    let d = decomp::Decomposition::new(&g, out, &none(), true);
    assert!(d.is_direct);
    assert_eq!(d.orders(), vec![8, 8]);

    assert_eq!(merge(&g, &a, &[], &none(), &settings()).unwrap().len(), a.len());
}

#[test]
fn merge_abelian() {
    let g = direct_product(&[cyclic(4), cyclic(2)]);
    let out = merge(&g, &[], &[g.clone()], &none(), &settings()).unwrap();
    assert_eq!(out.len(), 1);
    let a = abelian::remak_abelian(&g, &none()).unwrap();
    let out = merge(&g, &a, &[g.clone()], &none(), &settings()).unwrap();
    let d = decomp::Decomposition::new(&g, out, &none(), true);
    assert_eq!(d.orders(), vec![2, 4]);
}

#[test]
fn centralize() {
    let g = d8();
    assert_eq!(centralize_refine(&g, &[g.clone()], 1, &settings()).unwrap().len(), 1);
    let (r, s) = (g.gens()[0].clone(), g.gens()[1].clone());
    let hs = vec![sub(&g, vec![r.clone()]), sub(&g, vec![s, r.pow(2)])];
    let out = centralize_refine(&g, &hs, 1, &settings()).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].order(), 8);

    let g = direct_product(&[d8(), q8()]);
    let z2 = upper_central_term(&g, 2, settings().coset_bound).unwrap();
    let hs = vec![z2.extended(&g.gens()[..2]), z2.extended(&g.gens()[2..])];
    assert_eq!(centralize_refine(&g, &hs, 2, &settings()).unwrap().len(), 2);

    let g = direct_product(&[d8(), d8()]);
    let z = center(&g);
    let hs = vec![z.extended(&g.gens()[..2]), z.extended(&g.gens()[2..])];
    assert_eq!(centralize_refine(&g, &hs, 1, &settings()).unwrap().len(), 2);
}

#[test]
fn class_two() {
    let d = remak_class2(&d8(), &none(), &settings()).unwrap();
    assert_eq!(d.orders(), vec![8]);
    let g = direct_product(&[d8(), q8()]);
    let d = remak_class2(&g, &none(), &settings()).unwrap();
    assert!(d.is_remak_claimed);
    assert_eq!(d.orders(), vec![8, 8]);
    let g = direct_product(&[cyclic(4), cyclic(6)]);
    assert_eq!(remak_class2(&g, &none(), &settings()).unwrap().orders(), vec![2, 3, 4]);
    assert!(matches!(remak_class2(&dihedral(8), &none(), &settings()), Err(DecompError::ClassTooLarge)));
}

#[test]
fn class_two_with_swap() {
    // swapping the two copies of D8 leaves only one invariant factor
    let g = direct_product(&[d8(), d8()]);
    let gens = g.gens().to_vec();
    let swap = Hom::new(&g, vec![gens[2].clone(), gens[3].clone(), gens[0].clone(), gens[1].clone()], g.degree()).unwrap();
    let ops = OperatorSet::from_vec(vec![Operator::Map(swap)]);
    let d = remak_class2(&g, &ops, &settings()).unwrap();
    assert!(d.is_direct && d.omega_stable);
    assert_eq!(d.orders(), vec![64]);
    assert_eq!(remak_class2(&g, &none(), &settings()).unwrap().orders(), vec![8, 8]);
}

#[test]
fn remak_small() {
    assert_eq!(find_remak(&symmetric(3), &none(), &settings()).unwrap().orders(), vec![6]);
    assert_eq!(find_remak(&cyclic(6), &none(), &settings()).unwrap().orders(), vec![2, 3]);
    assert!(find_remak(&PermGroup::trivial(3), &none(), &settings()).unwrap().is_empty());
    let g = direct_product(&[symmetric(3), cyclic(2), symmetric(4)]);
    let d = find_remak(&g, &none(), &settings()).unwrap();
    assert!(d.verify(&none()));
    assert_eq!(d.orders(), vec![2, 6, 24]);
}

#[test]
fn remak_four_factors() {
    let g = four_factor_example();
    let d = find_remak(&g, &none(), &settings()).unwrap();
    assert!(d.is_direct && d.is_remak_claimed);
    assert!(d.verify(&none()));
    assert_eq!(d.orders(), vec![8, 8, 24, 288]);
    let z = center(&g);
    for f in &d.factors {
        let zf = center(f);
        let meet = f.elements().into_iter().filter(|x| z.contains(x)).count() as u128;
        assert_eq!(zf.order(), meet);
    }
}

#[test]
fn remak_ignores_generator_order() {
    let g = direct_product(&[q8(), symmetric(3), cyclic(3)]);
    let base = find_remak(&g, &none(), &settings()).unwrap().orders();
    let mut gens = g.gens().to_vec();
    gens.reverse();
    gens.push(gens[0].mul(&gens[1]));
    let h = PermGroup::generated(g.degree(), gens);
    assert_eq!(find_remak(&h, &none(), &settings()).unwrap().orders(), base);
    let c = Permutation::from_images((0..g.degree()).rev().collect()).unwrap();
    let conj = PermGroup::generated(g.degree(), g.gens().iter().map(|x| x.conj(&c)).collect());
    assert_eq!(find_remak(&conj, &none(), &settings()).unwrap().orders(), base);
}

#[test]
fn fitting_split() {
    let v = direct_product(&[cyclic(2), cyclic(2)]);
    let (a, b) = (v.gens()[0].clone(), v.gens()[1].clone());
    let id = Permutation::identity(v.degree());
    let proj = Hom::new(&v, vec![a.clone(), id], v.degree()).unwrap();
    let ops = OperatorSet::from_vec(vec![Operator::Map(proj)]);
    let d = reduce_general_operators(&v, &ops, &settings()).unwrap();
    assert!(d.is_direct && d.omega_stable);
    assert_eq!(d.len(), 2);
    assert!(d.factors.iter().any(|f| f.contains(&a)) && d.factors.iter().any(|f| f.contains(&b)));

    let ident = Hom::new(&v, vec![a.clone(), b.clone()], v.degree()).unwrap();
    let d = reduce_general_operators(&v, &OperatorSet::from_vec(vec![Operator::Map(ident)]), &settings()).unwrap();
    assert_eq!(d.len(), 2);

    let z4 = cyclic(4);
    let x = z4.gens()[0].clone();
    let square = Hom::new(&z4, vec![x.pow(2)], z4.degree()).unwrap();
    let d = reduce_general_operators(&z4, &OperatorSet::from_vec(vec![Operator::Map(square)]), &settings()).unwrap();
    assert_eq!(d.orders(), vec![4]);
}

#[test]
fn fitting_rejects_non_homomorphism() {
    let s3 = symmetric(3);
    let t = transposition(3, 1, 2);
    let id = Permutation::identity(3);
    let bad = Hom::new(&s3, vec![t, id], 3).unwrap();
    let r = reduce_general_operators(&s3, &OperatorSet::from_vec(vec![Operator::Map(bad)]), &settings());
    assert!(matches!(r, Err(DecompError::OperatorNotHomomorphism)));
}

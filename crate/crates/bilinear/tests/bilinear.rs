use bilinear::*;
use perm_core::catalog::*;
use perm_core::PermGroup;

fn form(p: u64, v: usize, w: usize, entries: &[(usize, usize, usize, u64)]) -> BilinearMap {
    let mut c = vec![vec![vec![0u64; w]; v]; v];
    for &(x, y, z, val) in entries {
        c[x][y][z] = val % p;
    }
    BilinearMap::new(Module::new(p, vec![1; v]), Module::new(p, vec![1; w]), c).unwrap()
}

fn hyperbolic(p: u64) -> BilinearMap {
    form(p, 2, 1, &[(0, 1, 0, 1), (1, 0, 0, p - 1)])
}

fn check_centroid_identities(b: &BilinearMap, c: &Centroid) {
    let n = b.v().dim();
    let unit = |i: usize| (0..n).map(|j| u64::from(i == j)).collect::<Vec<u64>>();
    let apply = |v: &[u64], m: &Vec<Vec<u64>>, module: &Module| -> Vec<u64> {
        zmod::checkered::apply(module.p, &module.exps, v, m)
    };
    for e in &c.elements {
        for x in 0..n {
            for y in 0..n {
                let (u, v) = (unit(x), unit(y));
                let base = apply(&b.eval(&u, &v), &e.g, b.w());
                assert_eq!(b.eval(&apply(&u, &e.f, b.v()), &v), base);
                assert_eq!(b.eval(&u, &apply(&v, &e.f, b.v())), base);
            }
        }
    }
}

fn centroid_rank(g: &PermGroup) -> usize {
    let b = bi_of_group(g).unwrap();
    let c = centroid(&b).unwrap();
    check_centroid_identities(&b, &c);
    c.rank()
}

#[test]
fn group_maps() {
    let a = bi_of_group(&abelian(&[4, 2])).unwrap();
    assert_eq!(a.v().dim(), 0);
    assert_eq!(centroid(&a).unwrap().rank(), 0);
    let d = bi_of_group(&d8()).unwrap();
    assert_eq!(d.v().exps, vec![1, 1]);
    assert_eq!(d.w().exps, vec![1]);
    assert_eq!(d.consts()[0][1], vec![1]);
    assert_eq!(d.consts()[1][0], vec![1]);
    assert!(d.is_alternating());
    assert!(d.is_nondegenerate());
    let dq = bi_of_group(&direct_product(&[d8(), q8()])).unwrap();
    assert_eq!((dq.v().dim(), dq.w().dim()), (4, 2));
    assert!(matches!(bi_of_group(&symmetric(3)), Err(BilinearError::NotPGroup)));
    assert!(matches!(bi_of_group(&dihedral(8)), Err(BilinearError::ClassTooLarge)));
}

#[test]
fn radicals() {
    let zero = form(2, 2, 1, &[]);
    assert_eq!(zero.radical().len(), 2);
    assert!(matches!(centroid(&zero), Err(BilinearError::Degenerate)));
    let h = hyperbolic(3);
    assert!(h.radical().is_empty());
    let padded = form(3, 3, 1, &[(0, 1, 0, 1), (1, 0, 0, 2)]);
    assert_eq!(padded.radical(), vec![(vec![0, 0, 1], 1)]);
    let wide = form(3, 2, 2, &[(0, 1, 0, 1), (1, 0, 0, 2)]);
    assert!(matches!(centroid(&wide), Err(BilinearError::NotSurjective)));
}

#[test]
fn centroids_and_frames() {
    let mult = form(5, 1, 1, &[(0, 0, 0, 1)]);
    assert_eq!(centroid(&mult).unwrap().rank(), 1);
    let d = bi_of_group(&d8()).unwrap();
    let c = centroid(&d).unwrap();
    assert_eq!(c.rank(), 1);
    assert_eq!(frame_decomposition(&d).unwrap().len(), 1);
    let dq = bi_of_group(&direct_product(&[d8(), q8()])).unwrap();
    let c = centroid(&dq).unwrap();
    assert_eq!(c.rank(), 2);
    check_centroid_identities(&dq, &c);
    let blocks = frame_decomposition(&dq).unwrap();
    assert_eq!(blocks.len(), 2);
    for blk in &blocks {
        assert_eq!(blk.v_basis.len(), 2);
        assert_eq!(blk.w_basis.len(), 1);
    }
    let three = hyperbolic(3).orthogonal_sum(&hyperbolic(3)).orthogonal_sum(&hyperbolic(3));
    let blocks = frame_decomposition(&three).unwrap();
    assert_eq!(blocks.len(), 3);
    reassemble(&three, &blocks);
    reassemble(&dq, &frame_decomposition(&dq).unwrap());
}

/// `b(u, v) = Σ_e b(u e, v e)` and distinct blocks are orthogonal.
fn reassemble(b: &BilinearMap, blocks: &[Block]) {
    let n = b.v().dim();
    let total: u32 = blocks.iter().flat_map(|blk| blk.v_basis.iter().map(|x| x.1)).sum();
    assert_eq!(total, b.v().length());
    let wtotal: u32 = blocks.iter().flat_map(|blk| blk.w_basis.iter().map(|x| x.1)).sum();
    assert_eq!(wtotal, b.w().length());
    for x in 0..n {
        for y in 0..n {
            let u: Vec<u64> = (0..n).map(|j| u64::from(j == x)).collect();
            let v: Vec<u64> = (0..n).map(|j| u64::from(j == y)).collect();
            let mut acc = b.w().zero();
            for blk in blocks {
                let f = &blk.idempotent.f;
                let ue = zmod::checkered::apply(b.p(), &b.v().exps, &u, f);
                let ve = zmod::checkered::apply(b.p(), &b.v().exps, &v, f);
                acc = b.w().add(&acc, &b.eval(&ue, &ve));
            }
            assert_eq!(acc, b.eval(&u, &v));
        }
    }
    for (i, a) in blocks.iter().enumerate() {
        for c in &blocks[i + 1..] {
            for (x, _) in &a.v_basis {
                for (y, _) in &c.v_basis {
                    assert!(b.eval(x, y).iter().all(|&t| t == 0));
                }
            }
        }
    }
}

#[test]
fn reconstruction() {
    let z2 = BilinearMap::new(Module::new(2, vec![1]), Module::new(2, vec![]), vec![vec![vec![]]]).unwrap();
    assert_eq!(grp_of_bilinear(&z2).unwrap().group.order(), 2);
    let std3 = form(3, 2, 1, &[(0, 1, 0, 1), (1, 0, 0, 2)]);
    let t = grp_of_bilinear(&std3).unwrap();
    assert_eq!(t.group.order(), 27);
    assert!(!t.group.is_abelian());
    assert!(t.elements.iter().all(|x| x.order() <= 3));
    let h = bi_of_group(&heisenberg(3)).unwrap();
    let t = grp_of_bilinear(&h).unwrap();
    assert_eq!(t.group.order(), 27);
    assert!(!t.group.is_abelian());
    assert!(t.elements.iter().all(|x| x.order() <= 3));
}

#[test]
fn centroid_rank_is_additive() {
    let groups = vec![
        d8(),
        q8(),
        abelian(&[4]),
        abelian(&[2, 2]),
        central_product_gl23(&d8_matrices(), &d8_matrices()),
    ];
    for (i, a) in groups.iter().enumerate() {
        for b in &groups[i..] {
            if a.order() * b.order() > 256 {
                continue;
            }
            let prod = direct_product(&[a.clone(), b.clone()]);
            assert_eq!(centroid_rank(&prod), centroid_rank(a) + centroid_rank(b));
        }
    }
}

#[test]
fn basis_choice_does_not_change_centroid() {
    let g = direct_product(&[d8(), q8()]);
    let mut gens = g.gens().to_vec();
    gens.reverse();
    let extra = gens[0].mul(&gens[1]);
    gens.push(extra);
    let h = PermGroup::generated(g.degree(), gens);
    let (b1, b2) = (bi_of_group(&g).unwrap(), bi_of_group(&h).unwrap());
    let (c1, c2) = (centroid(&b1).unwrap(), centroid(&b2).unwrap());
    assert_eq!(c1.rank(), c2.rank());
    assert_eq!(c1.ring.frame().len(), c2.ring.frame().len());
}

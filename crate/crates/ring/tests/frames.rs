use proptest::prelude::*;
use ring::*;

/// `(Z/p^e)[x]/(f)` for monic `f` (low degree first, leading 1 omitted).
fn quotient_ring(p: u64, e: u32, f_low: &[u64]) -> FiniteCommRing {
    let k = f_low.len();
    let q = p.pow(e);
    // x^m reduced, for m < 2k
    let mut powers: Vec<Vec<u64>> = Vec::new();
    let mut cur = vec![0u64; k];
    cur[0] = 1;
    for _ in 0..2 * k {
        powers.push(cur.clone());
        let top = cur[k - 1];
        let mut next = vec![0u64; k];
        for i in (1..k).rev() {
            next[i] = cur[i - 1];
        }
        for i in 0..k {
            next[i] = (next[i] + q - (top * f_low[i]) % q) % q;
        }
        cur = next;
    }
    let table = (0..k).map(|i| (0..k).map(|j| powers[i + j].clone()).collect()).collect();
    FiniteCommRing::from_structure_constants(p, e, table, powers[0].clone()).unwrap()
}

fn all_elements(r: &FiniteCommRing) -> Vec<Elem> {
    let mut out = vec![Vec::new()];
    for i in 0..r.rank() {
        let m = r.modulus(i);
        out = out
            .into_iter()
            .flat_map(|v: Vec<u64>| {
                (0..m).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn brute_frame(r: &FiniteCommRing) -> Vec<Elem> {
    let idem: Vec<Elem> =
        all_elements(r).into_iter().filter(|e| !r.is_zero(e) && r.is_idempotent(e)).collect();
    let mut prim: Vec<Elem> = idem
        .iter()
        .filter(|e| idem.iter().all(|f| f == *e || r.mul(f, e) != *f))
        .cloned()
        .collect();
    prim.sort();
    prim
}

fn check_frame(r: &FiniteCommRing) -> Vec<Elem> {
    let f = r.frame();
    let mut sum = r.zero();
    for (i, e) in f.iter().enumerate() {
        assert!(r.is_idempotent(e) && !r.is_zero(e));
        for g in &f[i + 1..] {
            assert!(r.is_zero(&r.mul(e, g)));
        }
        sum = r.add(&sum, e);
    }
    assert_eq!(sum, r.one());
    f
}

fn corpus() -> Vec<FiniteCommRing> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for e in 1..=3 {
            out.push(cyclic_ring(p, e));
        }
        for k in 2..=3 {
            out.push(truncated_polynomial_ring(p, 1, k));
        }
        out.push(truncated_polynomial_ring(p, 2, 2));
        out.push(direct_sum(&cyclic_ring(p, 1), &cyclic_ring(p, 2)));
        out.push(direct_sum(&truncated_polynomial_ring(p, 1, 2), &cyclic_ring(p, 1)));
        out.push(direct_sum(&cyclic_ring(p, 1), &direct_sum(&cyclic_ring(p, 1), &cyclic_ring(p, 1))));
    }
    out.push(quotient_ring(2, 1, &[1, 1])); // F4
    out.push(quotient_ring(2, 2, &[1, 1])); // Galois ring of order 16
    out.push(quotient_ring(2, 1, &[0, 1])); // F2[x]/(x^2+x) = F2 + F2
    out.push(quotient_ring(3, 1, &[1, 0])); // F9
    out.push(quotient_ring(3, 1, &[2, 0])); // F3[x]/(x^2-1) = F3 + F3
    out.push(quotient_ring(3, 2, &[8, 0])); // Z9[x]/(x^2-1)
    out.push(quotient_ring(5, 1, &[1, 0])); // x^2+1 splits mod 5
    out.push(quotient_ring(2, 1, &[0, 1, 1])); // x^3+x^2+x = x(x^2+x+1)
    out.push(quotient_ring(2, 1, &[1, 0, 1])); // x^3+x^2+1 irreducible
    out.push(quotient_ring(2, 2, &[0, 3, 0])); // Z4[x]/(x^3 - x)
    out.push(quotient_ring(3, 1, &[0, 2, 0])); // x^3 - x over F3
    out.push(quotient_ring(2, 1, &[0, 0, 0, 1])); // x^3 (x + 1)
    out.push(direct_sum(&quotient_ring(2, 1, &[1, 1]), &truncated_polynomial_ring(2, 1, 2)));
    out
}

#[test]
fn spec_examples() {
    let z = cyclic_ring(2, 3);
    assert_eq!(z.frame(), vec![vec![1]]);
    assert_eq!(cyclic_ring(2, 2).lift_idempotent(&[3]).unwrap(), vec![1]);
    assert_eq!(cyclic_ring(3, 2).lift_idempotent(&[4]).unwrap(), vec![1]);
    assert_eq!(cyclic_ring(3, 2).lift_idempotent(&[1]).unwrap(), vec![1]);
    let f2f2 = direct_sum(&cyclic_ring(2, 1), &cyclic_ring(2, 1));
    assert_eq!(f2f2.frame(), vec![vec![0, 1], vec![1, 0]]);
    let dual = truncated_polynomial_ring(2, 1, 2);
    assert_eq!(dual.frame(), vec![vec![1, 0]]);
    assert_eq!(cyclic_ring(2, 2).frame(), vec![vec![1]]);
}

#[test]
fn invalid_rings_rejected() {
    // x*y = x, y*x = 0
    let t = vec![
        vec![vec![1, 0], vec![1, 0]],
        vec![vec![0, 0], vec![0, 1]],
    ];
    let r = FiniteCommRing::from_structure_constants(2, 1, t, vec![1, 1]);
    assert!(matches!(r, Err(RingError::NotCommutative { .. })));
    let no_one = FiniteCommRing::from_structure_constants(2, 1, vec![vec![vec![0]]], vec![1]);
    assert!(matches!(no_one, Err(RingError::NotIdentity(0))));
    assert!(matches!(cyclic_ring(2, 1).lift_idempotent(&[0]), Ok(v) if v == vec![0]));
    let f4 = quotient_ring(2, 1, &[1, 1]);
    assert_eq!(f4.lift_idempotent(&[0, 1]), Err(RingError::NotNilpotent));
}

#[test]
fn frames_match_brute_force() {
    for r in corpus() {
        if r.length() as f64 * (r.p() as f64).log2() > 12.0 {
            continue;
        }
        assert_eq!(check_frame(&r), brute_frame(&r), "{:?}", r);
    }
}

#[test]
fn lifting_over_corpus() {
    let mut count = 0;
    for r in corpus() {
        if r.length() as f64 * (r.p() as f64).log2() > 12.0 {
            continue;
        }
        count += 1;
        for e in all_elements(&r) {
            let t = r.sub(&r.mul(&e, &e), &e);
            if r.nilpotency_index(&t).is_none() {
                continue;
            }
            let l = r.lift_idempotent(&e).unwrap();
            assert!(r.is_idempotent(&l));
            assert!(r.nilpotency_index(&r.sub(&l, &e)).is_some());
            let one_minus = r.lift_idempotent(&r.sub(&r.one(), &e)).unwrap();
            assert_eq!(one_minus, r.sub(&r.one(), &l));
        }
    }
    assert!(count >= 20);
}

proptest! {
    #[test]
    fn frame_is_basis_independent(idx in 0usize..40, seed in any::<u64>()) {
        let rings = corpus();
        let r = &rings[idx % rings.len()];
        let n = r.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let r2 = r.permute_basis(&perm);
        let mut mapped: Vec<Elem> = r.frame().iter().map(|e| perm.iter().map(|&j| e[j]).collect()).collect();
        mapped.sort();
        prop_assert_eq!(check_frame(&r2), mapped);
    }
}

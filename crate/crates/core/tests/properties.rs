use proptest::prelude::*;

use clstab::fock::{act_root_vector, all_roots, basis_keys, Coeff, FockVector};
use clstab::gtpattern::enumerate_patterns;
use clstab::linalg;
use clstab::partitions::{enumerate_rect, Partition};
use clstab::pop::{enumerate_pops, PopFilter};
use clstab::rootdata::{translate_weight, FiniteWeight};
use clstab::translate::{cocycle_eps, translate_fundamental, translate_q, Direction};

fn partition_in_rect() -> impl Strategy<Value = (Partition, u32, u32)> {
    (0u32..=4, 0u32..=4).prop_flat_map(|(d, dp)| {
        let all = enumerate_rect(d, dp);
        (0..all.len()).prop_map(move |i| (all[i].clone(), d, dp))
    })
}

fn random_vector(r: usize, sector: usize) -> impl Strategy<Value = FockVector> {
    let keys = basis_keys(r, sector, 2);
    let n = keys.len();
    proptest::collection::vec((0..n, -5i64..=5, 1i64..=3), 1..6).prop_map(move |terms| {
        let it = terms.into_iter().map(|(i, p, q)| (keys[i].clone(), Coeff::new(p.into(), q.into())));
        FockVector::from_terms(r, sector, it).unwrap()
    })
}

fn small_q(r: usize) -> impl Strategy<Value = FiniteWeight> {
    proptest::collection::vec(-2i64..=2, r).prop_map(move |n| FiniteWeight::from_root_coords(r, &n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution((p, d, dp) in partition_in_rect()) {
        let c = p.complement(d, dp).unwrap();
        prop_assert!(c.fits_rectangle(d, dp));
        prop_assert_eq!(c.complement(d, dp).unwrap(), p);
    }

    #[test]
    fn pattern_shifts_compose(idx in 0usize..64, k in 0i64..=3, l in 0i64..=3) {
        let pats = enumerate_patterns(&[3, 1, 0]).unwrap();
        let p = &pats[idx % pats.len()];
        prop_assert_eq!(p.shift(k).shift(l), p.shift(k + l));
        prop_assert_eq!(p.shift(k).weight(), p.weight());
    }

    #[test]
    fn pop_shift_preserves_invariants(idx in 0usize..512, k in 1i64..=3) {
        let pops = enumerate_pops(&[2, 1, 0], &PopFilter::default()).unwrap();
        let p = &pops[idx % pops.len()];
        let q = p.shift(k);
        prop_assert_eq!(q.weight(), p.weight());
        prop_assert_eq!(q.total_depth(), p.total_depth());
        for s in 1..=3 {
            prop_assert_eq!(q.invariant_set(s).unwrap(), p.invariant_set(s).unwrap());
        }
        if p.is_stable() {
            prop_assert!(q.is_stable() && q.shift(1).is_stable());
        }
    }

    #[test]
    fn translations_invert(v in random_vector(2, 0), root in 0usize..6) {
        let a = &all_roots(2)[root].weight;
        let t = translate_q(a, &v).unwrap();
        prop_assert_eq!(translate_q(&-a, &t).unwrap(), v);
    }

    #[test]
    fn fundamental_translations_invert(v in random_vector(2, 0), i in 1usize..=2) {
        let t = translate_fundamental(i, &v, Direction::Plus).unwrap();
        prop_assert_eq!(t.sector(), i);
        prop_assert_eq!(translate_fundamental(i, &t, Direction::Minus).unwrap(), v);
    }

    #[test]
    fn translations_compose_with_cocycle(v in random_vector(2, 1), a in small_q(2), b in small_q(2)) {
        let lhs = translate_q(&a, &translate_q(&b, &v).unwrap()).unwrap();
        let e = cocycle_eps(&a, &b).unwrap();
        let rhs = translate_q(&(&a + &b), &v).unwrap().scaled(&Coeff::from_integer(e.into()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translations_transport_weights(k in 0usize..40, a in small_q(2)) {
        let keys = basis_keys(2, 0, 2);
        let v = FockVector::basis(keys[k % keys.len()].clone());
        let t = translate_q(&a, &v).unwrap();
        prop_assert_eq!(t.weight().unwrap(), translate_weight(&a, &v.weight().unwrap()));
    }

    #[test]
    fn root_vectors_shift_weights(k in 0usize..40, root in 0usize..6, s in -2i64..=2) {
        let keys = basis_keys(2, 1, 2);
        let v = FockVector::basis(keys[k % keys.len()].clone());
        let a = &all_roots(2)[root];
        let w = act_root_vector(a, s, &v);
        if !w.is_zero() {
            let mut want = v.weight().unwrap();
            want.finite = &want.finite + &a.weight;
            prop_assert_eq!(w.weight().unwrap(), want.minus_delta(-s));
        }
    }

    #[test]
    fn combinations_lie_in_the_span(vs in proptest::collection::vec(random_vector(1, 0), 1..4), c in proptest::collection::vec(-3i64..=3, 4)) {
        let mut comb = FockVector::zero(1, 0);
        for (v, &x) in vs.iter().zip(&c) {
            comb = comb.add(&v.scaled(&Coeff::from_integer(x.into())));
        }
        prop_assert!(linalg::in_span(&vs, &comb));
        let mut with = vs.clone();
        with.push(comb);
        prop_assert_eq!(linalg::rank(&with), linalg::rank(&vs));
    }
}

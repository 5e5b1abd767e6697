mod common;

use common::*;
use latdeg::degrees::{d_group, d_pair, sd_group, ssd_group};
use latdeg::{Group, Lattice, Mask, Rational};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Group> {
    prop_oneof![
        (1usize..=30).prop_map(c),
        (1usize..=15).prop_map(d),
        (1usize..=4).prop_map(s),
        Just(q8()),
        prop_oneof![Just((2u64, 3u32)), Just((2, 4)), Just((3, 3))].prop_map(|(p, k)| m(p, k)),
    ]
}

fn small_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        4 => family(),
        1 => (family(), 1usize..=4)
            .prop_filter("order", |(g, k)| g.order() * k <= 48)
            .prop_map(|(g, k)| x(&g, &c(k))),
    ]
}

fn group_and_elements(k: usize) -> impl Strategy<Value = (Group, Vec<usize>)> {
    small_group().prop_flat_map(move |g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(0..n, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms((g, e) in group_and_elements(3)) {
        let (a, b, cc) = (e[0], e[1], e[2]);
        prop_assert_eq!(g.mul(g.mul(a, b), cc), g.mul(a, g.mul(b, cc)));
        prop_assert_eq!(g.mul(a, 0), a);
        prop_assert_eq!(g.mul(0, a), a);
        prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        prop_assert!(g.verify_axioms().is_ok());
    }

    #[test]
    fn commutator_is_trivial_iff_elements_commute((g, e) in group_and_elements(2)) {
        let k = g.commutator(e[0], e[1]).unwrap();
        prop_assert_eq!(k == 0, g.commutes(e[0], e[1]));
        prop_assert_eq!(k, comm(&g, e[0], e[1]));
    }

    #[test]
    fn closure_is_idempotent((g, e) in group_and_elements(2)) {
        let h = g.closure(&e);
        let elems: Vec<usize> = h.elements().collect();
        prop_assert_eq!(g.closure(&elems), h.clone());
        prop_assert_eq!(g.order() % h.size(), 0);
        for &a in &elems {
            for &b in &elems {
                prop_assert!(h.contains(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn class_sizes_partition_the_group(g in small_group()) {
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
        for cl in &classes {
            prop_assert_eq!(g.order() % cl.len(), 0);
        }
        prop_assert_eq!(Rational::new(classes.len(), g.order()), d_group(&g));
    }

    #[test]
    fn lattice_invariants(g in small_group()) {
        let l = Lattice::enumerate(&g).unwrap();
        let (ssd, sd) = (ssd_group(&l), sd_group(&l));
        prop_assert!(ssd <= sd);
        prop_assert!(sd <= Rational::one());
        prop_assert!(ssd > Rational::zero());
        prop_assert_eq!(ssd.is_one(), is_abelian(&g));
        for i in 0..l.len() {
            for j in 0..l.len() {
                prop_assert_eq!(l.commute(i, j), l.commute(j, i));
                if l.commute(i, j) {
                    prop_assert!(l.permutes_at(i, j));
                }
            }
            prop_assert_eq!(g.order() % l.get(i).size(), 0);
        }
    }

    #[test]
    fn centralizer_of_subgroup_is_meet_of_element_centralizers(
        (g, e) in group_and_elements(3)
    ) {
        let h = g.closure(&e[..2]);
        let k = g.closure(&e[2..]);
        let ck = g.centralizer_in(&k, &h);
        let mut meet = k.mask().clone();
        for x in h.elements() {
            meet.intersect_with(&g.centralizer_of(x));
        }
        prop_assert_eq!(ck.mask(), &meet);
        let weighted: usize = h.elements().map(|x| g.centralizer_of(x).intersection_count(k.mask())).sum();
        prop_assert_eq!(d_pair(&g, &h, &k).unwrap(), Rational::new(weighted, h.size() * k.size()));
        prop_assert!(ck.size() * h.size() <= weighted);
    }

    #[test]
    fn mask_order_matches_sorted_lists(
        a in proptest::collection::btree_set(0usize..150, 0..20),
        b in proptest::collection::btree_set(0usize..150, 0..20),
    ) {
        let ma = Mask::from_indices(150, a.iter().copied());
        let mb = Mask::from_indices(150, b.iter().copied());
        let va: Vec<usize> = a.iter().copied().collect();
        let vb: Vec<usize> = b.iter().copied().collect();
        prop_assert_eq!(ma.cmp_lex(&mb), va.cmp(&vb));
        prop_assert_eq!(ma.iter().collect::<Vec<_>>(), va);
        prop_assert_eq!(ma.intersection_count(&mb), a.intersection(&b).count());
        prop_assert_eq!(ma.is_subset(&mb), a.is_subset(&b));
    }

    #[test]
    fn rational_approx_is_close(num in 0u64..10_000, den in 1u64..10_000) {
        let q = Rational::new(num, den);
        let text = q.approx(12);
        let parsed: f64 = text.parse().unwrap();
        prop_assert!((parsed - num as f64 / den as f64).abs() < 1e-9);
        prop_assert_eq!(text.split('.').nth(1).map(str::len), Some(12));
    }
}

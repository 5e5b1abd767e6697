mod common;

use std::collections::BTreeSet;

use common::*;
use latdeg::characters::{class_count, ssd_cyclic, xi, xi_vector};
use latdeg::degrees::{
    d_group, d_multi, d_multi_in, d_pair, sd_group, sd_group_with, ssd_group, ssd_multi,
    ssd_multi_within, BracketTable,
};
use latdeg::{Exec, Group, Lattice, Rational};

fn lat(g: &Group) -> Lattice {
    Lattice::enumerate(g).unwrap()
}

#[test]
fn frozen_values_agree_with_oracles() {
    let cases: [(Group, Rational, Rational, Rational); 7] = [
        (s(3), r(1, 2), r(5, 6), r(5, 12)),
        (d(4), r(5, 8), r(23, 25), r(11, 20)),
        (q8(), r(5, 8), r(1, 1), r(23, 36)),
        (m(2, 3), r(5, 8), r(23, 25), r(11, 20)),
        (m(2, 4), r(5, 8), r(1, 1), r(84, 121)),
        (s(4), r(5, 24), r(17, 30), r(139, 900)),
        (c(8), r(1, 1), r(1, 1), r(1, 1)),
    ];
    for (g, dv, sdv, ssdv) in cases {
        let l = lat(&g);
        assert_eq!(oracle_d(&g), dv, "{} d oracle", g.label());
        assert_eq!(oracle_sd(&g), sdv, "{} sd oracle", g.label());
        assert_eq!(oracle_ssd(&g), ssdv, "{} ssd oracle", g.label());
        assert_eq!(d_group(&g), dv, "{}", g.label());
        assert_eq!(sd_group(&l), sdv, "{}", g.label());
        assert_eq!(ssd_group(&l), ssdv, "{}", g.label());
    }
}

#[test]
fn modular_groups_permute_but_do_not_commute() {
    for g in [m(3, 3), m(2, 4), m(5, 3)] {
        let l = lat(&g);
        assert!(sd_group(&l).is_one(), "{}", g.label());
        assert!(ssd_group(&l) < Rational::one(), "{}", g.label());
    }
}

#[test]
fn degrees_agree_with_oracles_on_small_groups() {
    for g in groups_up_to_24().into_iter().filter(|g| g.order() <= 16) {
        let l = lat(&g);
        assert_eq!(d_group(&g), oracle_d(&g), "{}", g.label());
        assert_eq!(ssd_group(&l), oracle_ssd(&g), "{}", g.label());
        assert_eq!(sd_group(&l), oracle_sd(&g), "{}", g.label());
        assert_eq!(sd_group_with(&l, Exec::Sequential), sd_group(&l));
    }
}

#[test]
fn abelian_groups_have_unit_degrees() {
    let mut abelian: Vec<Group> = (1..=64).map(c).collect();
    abelian.extend([
        x(&c(2), &c(2)),
        x(&c(4), &c(4)),
        x(&c(2), &c(8)),
        x(&x(&c(2), &c(2)), &c(2)),
        x(&x(&c(2), &c(4)), &c(2)),
        x(&c(3), &c(3)),
    ]);
    for g in abelian {
        let l = lat(&g);
        let bt = BracketTable::new(&l);
        assert!(d_group(&g).is_one());
        assert!(sd_group(&l).is_one());
        assert!(ssd_group(&l).is_one());
        for n in 1..=3 {
            assert!(ssd_multi(&l, &bt, &g.whole(), n).unwrap().is_one());
        }
    }
}

#[test]
fn multiple_degree_sequences() {
    let cases = [
        (s(3), [r(5, 12), r(11, 18), r(20, 27)]),
        (d(4), [r(11, 20), r(1, 1), r(1, 1)]),
        (q8(), [r(23, 36), r(1, 1), r(1, 1)]),
        (d(5), [r(21, 64), r(127, 256), r(637, 1024)]),
        (d(6), [r(91, 256), r(529, 1024), r(2611, 4096)]),
        (m(2, 4), [r(84, 121), r(1, 1), r(1, 1)]),
    ];
    for (g, values) in cases {
        let l = lat(&g);
        let bt = BracketTable::new(&l);
        for (n, v) in (1..=3).zip(values) {
            assert_eq!(ssd_multi(&l, &bt, &g.whole(), n).unwrap(), v, "{} n={n}", g.label());
            assert_eq!(ssd_multi_within(&l, &bt, &g.whole(), n).unwrap(), v);
        }
    }
}

#[test]
fn lattice_dp_matches_tuple_enumeration() {
    let small: Vec<Group> = groups_up_to_24()
        .into_iter()
        .filter(|g| lat(g).len() <= 10)
        .collect();
    assert!(small.len() > 10);
    for g in small {
        let l = lat(&g);
        let bt = BracketTable::new(&l);
        for h in l.subgroups() {
            let hs: BTreeSet<usize> = h.elements().collect();
            for n in 1..=3 {
                assert_eq!(
                    ssd_multi(&l, &bt, h, n).unwrap(),
                    oracle_ssd_multi(&g, &hs, n, false),
                    "{} |H|={} n={n}",
                    g.label(),
                    h.size()
                );
                assert_eq!(
                    ssd_multi_within(&l, &bt, h, n).unwrap(),
                    oracle_ssd_multi(&g, &hs, n, true)
                );
            }
        }
    }
}

#[test]
fn element_dp_matches_tuple_enumeration() {
    for g in [s(3), d(4), q8(), d(5), c(6), x(&s(3), &c(2))] {
        for n in 1..=3 {
            if g.order().pow(n as u32 + 1) > 2_000_000 {
                continue;
            }
            assert_eq!(d_multi(&g, n).unwrap(), oracle_d_multi(&g, n), "{} n={n}", g.label());
        }
    }
    assert_eq!(d_multi(&s(3), 2).unwrap(), r(3, 4));
    assert_eq!(d_multi(&d(5), 2).unwrap(), r(7, 10));
    assert_eq!(d_multi(&d(6), 2).unwrap(), r(3, 4));
    assert_eq!(d_multi(&q8(), 2).unwrap(), r(1, 1));
}

#[test]
fn d_multi_in_subgroup_uses_only_subgroup_elements() {
    let g = s(4);
    let l = lat(&g);
    for h in l.subgroups() {
        let hg = subgroup_as_group(&g, h);
        for n in 1..=2 {
            assert_eq!(d_multi_in(&g, h, n, 10_000_000).unwrap(), d_multi(&hg, n).unwrap());
        }
    }
}

fn subgroup_as_group(g: &Group, h: &latdeg::Subgroup) -> Group {
    let elems: Vec<usize> = h.elements().collect();
    let pos = |e: usize| elems.iter().position(|&x| x == e).unwrap();
    let table = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| pos(g.mul(a, b))).collect())
        .collect();
    Group::from_table("sub", table).unwrap()
}

#[test]
fn pair_degree_of_whole_group_is_d() {
    for g in [s(3), d(4), q8(), s(4)] {
        assert_eq!(d_pair(&g, &g.whole(), &g.whole()).unwrap(), d_group(&g));
    }
}

#[test]
fn coprime_products_multiply() {
    // S(3) x C(5) x C(7) has order 210
    latdeg::group::set_order_cap(210);
    let cases = [
        (s(3), c(5)),
        (d(4), c(3)),
        (q8(), c(5)),
        (s(3), x(&c(5), &c(7))),
    ];
    for (a, b) in cases {
        let g = x(&a, &b);
        let lhs = ssd_group(&lat(&g));
        let rhs = ssd_group(&lat(&a)) * ssd_group(&lat(&b));
        assert_eq!(lhs, rhs, "{}", g.label());
    }
}

#[test]
fn relative_multiple_degree_multiplies() {
    let (cg, dg) = (s(3), c(5));
    let g = x(&cg, &dg);
    let (lc, ld, l) = (lat(&cg), lat(&dg), lat(&g));
    let (bc, bd, bt) = (BracketTable::new(&lc), BracketTable::new(&ld), BracketTable::new(&l));
    let a = cg.closure(&[latdeg::group::perm_index(&[1, 0, 2])]);
    let b = dg.whole();
    let ab: Vec<usize> = a.elements().flat_map(|x| b.elements().map(move |y| x * 5 + y)).collect();
    let ab = g.closure(&ab);
    assert_eq!(ab.size(), 10);
    for n in 1..=2 {
        let lhs = ssd_multi(&l, &bt, &ab, n).unwrap();
        let rhs = ssd_multi(&lc, &bc, &a, n).unwrap() * ssd_multi(&ld, &bd, &b, n).unwrap();
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn xi_values_and_class_counts() {
    let g = s(3);
    let l = lat(&g);
    let t = latdeg::group::perm_index(&[1, 0, 2]);
    assert_eq!(xi(&l, t).unwrap(), 8);
    assert_eq!(ssd_cyclic(&l, t).unwrap(), r(2, 3));
    for g in groups_up_to_24() {
        let l = lat(&g);
        let v = xi_vector(&l);
        for class in g.conjugacy_classes() {
            assert!(class.iter().all(|&x| v.values[x] == v.values[class[0]]));
        }
        assert_eq!(Rational::from(class_count(&g)), Rational::from(g.order()) * d_group(&g));
    }
}

#[test]
fn bracket_tables_do_not_depend_on_strategy() {
    for g in [s(4), d(6), x(&q8(), &c(3))] {
        let l = lat(&g);
        assert_eq!(BracketTable::build_with(&l, Exec::Sequential), BracketTable::new(&l));
    }
}

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use latdeg::{Group, Rational};

pub fn c(n: usize) -> Group {
    Group::cyclic(n).unwrap()
}

pub fn d(n: usize) -> Group {
    Group::dihedral(n).unwrap()
}

pub fn s(n: usize) -> Group {
    Group::symmetric(n).unwrap()
}

pub fn q8() -> Group {
    Group::quaternion().unwrap()
}

pub fn m(p: u64, k: u32) -> Group {
    Group::modular(p, k).unwrap()
}

pub fn x(a: &Group, b: &Group) -> Group {
    Group::direct_product(a, b).unwrap()
}

/// Family atoms of order at most `max`.
pub fn atoms_up_to(max: usize) -> Vec<Group> {
    let mut v: Vec<Group> = (1..=max).map(c).collect();
    v.extend((1..=max / 2).map(d));
    v.extend((1..=5).map(s).filter(|g| g.order() <= max));
    if max >= 8 {
        v.push(q8());
    }
    for (p, k) in [(2, 3), (2, 4), (3, 3), (2, 5), (5, 3)] {
        let g = m(p, k);
        if g.order() <= max {
            v.push(g);
        }
    }
    v
}

/// Atoms plus a handful of small direct products, all of order at most 24.
pub fn groups_up_to_24() -> Vec<Group> {
    let mut v = atoms_up_to(24);
    v.extend([
        x(&c(2), &c(2)),
        x(&x(&c(2), &c(2)), &c(2)),
        x(&x(&c(2), &c(2)), &x(&c(2), &c(2))),
        x(&c(3), &c(3)),
        x(&c(2), &c(4)),
        x(&c(2), &c(6)),
        x(&c(2), &x(&c(2), &c(4))),
        x(&s(3), &c(2)),
        x(&s(3), &c(3)),
        x(&s(3), &c(4)),
        x(&d(4), &c(2)),
        x(&d(4), &c(3)),
        x(&q8(), &c(2)),
        x(&q8(), &c(3)),
        x(&x(&s(3), &c(2)), &c(2)),
    ]);
    v
}

pub fn is_abelian(g: &Group) -> bool {
    (0..g.order()).all(|a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a)))
}

/// Subgroup generated by `gens`, by breadth-first search over products.
pub fn span(g: &Group, gens: &[usize]) -> BTreeSet<usize> {
    let mut seen: BTreeSet<usize> = BTreeSet::from([0]);
    let mut queue = VecDeque::from([0]);
    while let Some(a) = queue.pop_front() {
        for &t in gens {
            let b = g.mul(a, t);
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    seen
}

/// Every subgroup, found by growing generator tuples one element at a time
/// until a round adds nothing new.
pub fn subgroups_by_generator_tuples(g: &Group) -> BTreeSet<BTreeSet<usize>> {
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    found.insert(BTreeSet::from([0]));
    loop {
        let mut next = Vec::new();
        for gens in &frontier {
            for e in 0..g.order() {
                let mut t = gens.clone();
                t.push(e);
                let h = span(g, &t);
                if found.insert(h.clone()) {
                    next.push(h.into_iter().collect());
                }
            }
        }
        if next.is_empty() {
            return found;
        }
        frontier = next;
    }
}

pub fn comm(g: &Group, a: usize, b: usize) -> usize {
    let ia = (0..g.order()).find(|&y| g.mul(a, y) == 0).unwrap();
    let ib = (0..g.order()).find(|&y| g.mul(b, y) == 0).unwrap();
    g.mul(g.mul(ia, ib), g.mul(a, b))
}

/// `[H, K]` as the span of all commutators.
pub fn bracket(g: &Group, h: &BTreeSet<usize>, k: &BTreeSet<usize>) -> BTreeSet<usize> {
    let gens: Vec<usize> = h
        .iter()
        .flat_map(|&a| k.iter().map(move |&b| (a, b)))
        .map(|(a, b)| comm(g, a, b))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    span(g, &gens)
}

pub fn elementwise_commute(g: &Group, h: &BTreeSet<usize>, k: &BTreeSet<usize>) -> bool {
    h.iter().all(|&a| k.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn oracle_d(g: &Group) -> Rational {
    let n = g.order();
    let c = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| g.mul(a, b) == g.mul(b, a))
        .count();
    Rational::new(c, n * n)
}

pub fn oracle_ssd(g: &Group) -> Rational {
    let subs: Vec<_> = subgroups_by_generator_tuples(g).into_iter().collect();
    let c = subs
        .iter()
        .flat_map(|h| subs.iter().map(move |k| (h, k)))
        .filter(|(h, k)| elementwise_commute(g, h, k))
        .count();
    Rational::new(c, subs.len() * subs.len())
}

pub fn oracle_sd(g: &Group) -> Rational {
    let subs: Vec<_> = subgroups_by_generator_tuples(g).into_iter().collect();
    let product = |h: &BTreeSet<usize>, k: &BTreeSet<usize>| -> BTreeSet<usize> {
        h.iter().flat_map(|&a| k.iter().map(move |&b| g.mul(a, b))).collect()
    };
    let c = subs
        .iter()
        .flat_map(|h| subs.iter().map(move |k| (h, k)))
        .filter(|(h, k)| product(h, k) == product(k, h))
        .count();
    Rational::new(c, subs.len() * subs.len())
}

/// `ssd^(n)(H, G)` by enumerating every tuple and computing each bracket
/// from scratch. `within` restricts the last entry to `L(H)` as well.
pub fn oracle_ssd_multi(g: &Group, h: &BTreeSet<usize>, n: usize, within: bool) -> Rational {
    let subs: Vec<_> = subgroups_by_generator_tuples(g).into_iter().collect();
    let in_h: Vec<_> = subs.iter().filter(|s| s.is_subset(h)).cloned().collect();
    let tails = if within { &in_h } else { &subs };
    let trivial = BTreeSet::from([0]);
    let mut count = 0usize;
    let mut idx = vec![0usize; n];
    loop {
        let mut acc = in_h[idx[0]].clone();
        for &i in &idx[1..] {
            acc = bracket(g, &acc, &in_h[i]);
        }
        count += tails.iter().filter(|k| bracket(g, &acc, k) == trivial).count();
        let mut pos = n;
        loop {
            if pos == 0 {
                let den = in_h.len().pow(n as u32) * tails.len();
                return Rational::new(count, den);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < in_h.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `d^(n)` of the whole group by enumerating all `(n+1)`-tuples.
pub fn oracle_d_multi(g: &Group, n: usize) -> Rational {
    let order = g.order();
    let mut count = 0usize;
    let mut idx = vec![0usize; n + 1];
    loop {
        let mut acc = idx[0];
        for &e in &idx[1..] {
            acc = comm(g, acc, e);
        }
        if acc == 0 {
            count += 1;
        }
        let mut pos = n + 1;
        loop {
            if pos == 0 {
                return Rational::new(count, order.pow(n as u32 + 1));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < order {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn r(a: u64, b: u64) -> Rational {
    Rational::new(a, b)
}

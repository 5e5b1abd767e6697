//! The class function `xi` and the class-count identity for `d(G)`.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::Lattice;
use crate::rational::Rational;

/// `xi` evaluated at every element, with one representative per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiVector {
    pub values: Vec<u64>,
    pub class_reps: Vec<usize>,
}

fn check(lattice: &Lattice, g: usize) -> Result<usize> {
    let order = lattice.group().order();
    if g >= order {
        return Err(Error::ElementOutOfRange { index: g, order });
    }
    let cyclic = lattice.group().closure(&[g]);
    Ok(lattice.index_of(&cyclic).expect("cyclic subgroup missing from lattice"))
}

/// `xi(g) = |{(X, Y) ∈ L(<g>) × L(G) : [X, Y] = 1}|`.
pub fn xi(lattice: &Lattice, g: usize) -> Result<u64> {
    let c = check(lattice, g)?;
    Ok(xi_at(lattice, c))
}

fn xi_at(lattice: &Lattice, cyclic: usize) -> u64 {
    lattice
        .sublattice(cyclic)
        .iter()
        .map(|&x| (0..lattice.len()).filter(|&y| lattice.commute(x, y)).count() as u64)
        .sum()
}

pub fn xi_vector(lattice: &Lattice) -> XiVector {
    let g = lattice.group();
    // xi only depends on <g>, so evaluate once per cyclic subgroup
    let cyclic: Vec<usize> = (0..g.order())
        .map(|x| lattice.index_of(&g.closure(&[x])).unwrap())
        .collect();
    let mut cache = vec![None; lattice.len()];
    let values = cyclic
        .iter()
        .map(|&c| *cache[c].get_or_insert_with(|| xi_at(lattice, c)))
        .collect();
    let class_reps = g.conjugacy_classes().iter().map(|c| c[0]).collect();
    XiVector { values, class_reps }
}

/// `ssd(<g>, G) = xi(g) / (|L(<g>)| |L(G)|)`.
pub fn ssd_cyclic(lattice: &Lattice, g: usize) -> Result<Rational> {
    let c = check(lattice, g)?;
    let den = lattice.sublattice(c).len() as u64 * lattice.len() as u64;
    Ok(Rational::new(xi_at(lattice, c), den))
}

/// Number of conjugacy classes, which equals `|Irr(G)|`.
pub fn class_count(g: &Group) -> usize {
    g.conjugacy_classes().len()
}

/// Pairs `(x, y)` with `<x> = <y>` but `xi(x) != xi(y)`.
pub fn equal_generator_invariance(lattice: &Lattice) -> Vec<(usize, usize)> {
    let g = lattice.group();
    let cyclic: Vec<usize> = (0..g.order())
        .map(|x| lattice.index_of(&g.closure(&[x])).unwrap())
        .collect();
    // evaluated per element, deliberately not through the per-subgroup cache
    let values: Vec<u64> = (0..g.order()).map(|x| xi(lattice, x).unwrap()).collect();
    let mut violations = Vec::new();
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            if cyclic[x] == cyclic[y] && values[x] != values[y] {
                violations.push((x, y));
            }
        }
    }
    violations
}

//! Commutativity degrees as exact rationals.
//!
//! Element-level degrees count commuting tuples of elements; lattice-level
//! degrees count pairs (or tuples) of subgroups that permute or whose
//! commutator subgroup is trivial.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{Group, Subgroup};
use crate::lattice::Lattice;
use crate::rational::Rational;

/// Largest bracket depth accepted by [`ssd_multi`].
pub const MAX_DEPTH: usize = 4;

/// Default work budget for [`d_multi`], in commutator evaluations.
pub const DEFAULT_D_MULTI_BUDGET: u128 = 10_000_000;

/// `d(G) = |{(x, y) : [x, y] = 1}| / |G|^2`.
pub fn d_group(g: &Group) -> Rational {
    d_group_with(g, Exec::default())
}

pub fn d_group_with(g: &Group, exec: Exec) -> Rational {
    let n = g.order();
    let pairs = exec.sum(n, |x| (0..n).filter(|&y| g.commutes(x, y)).count() as u128);
    Rational::new(pairs, (n * n) as u128)
}

/// `sum_{h in H} |C_K(h)|`, the number of commuting pairs in `H × K`.
pub fn commuting_pairs(g: &Group, h: &Subgroup, k: &Subgroup) -> u128 {
    h.elements()
        .map(|x| g.centralizer_of(x).intersection_count(k.mask()) as u128)
        .sum()
}

/// `d(H, K) = sum_{h in H} |C_K(h)| / (|H| |K|)`.
pub fn d_pair(g: &Group, h: &Subgroup, k: &Subgroup) -> Result<Rational> {
    g.check_parent(h)?;
    g.check_parent(k)?;
    Ok(Rational::new(
        commuting_pairs(g, h, k),
        (h.size() * k.size()) as u128,
    ))
}

/// The multiple commutativity degree of the whole group:
/// the fraction of `(x_1, ..., x_{n+1})` with `[x_1, ..., x_{n+1}] = 1`,
/// brackets left-normed.
pub fn d_multi(g: &Group, n: usize) -> Result<Rational> {
    d_multi_in(g, &g.whole(), n, DEFAULT_D_MULTI_BUDGET)
}

/// [`d_multi`] restricted to tuples from the subgroup `k`, i.e. `d^(n)(K, K)`.
///
/// Counts are propagated through the distribution of the partial bracket
/// `[x_1, ..., x_j]`, so the work is `n |K|^2` commutator evaluations; that
/// figure is checked against `budget`.
pub fn d_multi_in(g: &Group, k: &Subgroup, n: usize, budget: u128) -> Result<Rational> {
    g.check_parent(k)?;
    if n == 0 {
        return Err(Error::DepthOutOfRange { n, max: usize::MAX });
    }
    let size = k.size() as u128;
    let work = n as u128 * size * size;
    let total = size.checked_pow(n as u32 + 1);
    let Some(total) = total.filter(|_| work <= budget) else {
        return Err(Error::BudgetExceeded { needed: work, budget });
    };

    let members: Vec<usize> = k.elements().collect();
    let mut counts = vec![0u128; g.order()];
    for &x in &members {
        counts[x] = 1;
    }
    for _ in 0..n {
        let mut next = vec![0u128; g.order()];
        for &t in &members {
            let c = counts[t];
            if c == 0 {
                continue;
            }
            for &x in &members {
                next[g.comm_unchecked(t, x)] += c;
            }
        }
        counts = next;
    }
    Ok(Rational::new(counts[0], total))
}

/// Number of ordered pairs `(L_i, L_j)` over the given members with `L_i L_j = L_j L_i`.
pub fn permuting_pairs(lattice: &Lattice, members: &[usize], exec: Exec) -> u128 {
    let m = members.len();
    exec.sum(m, |a| {
        let i = members[a];
        let mut c = 1u128; // a subgroup permutes with itself
        for &j in &members[a + 1..] {
            if lattice.permutes_at(i, j) {
                c += 2;
            }
        }
        c
    })
}

/// Number of ordered pairs `(L_i, L_j)` over the given members with `[L_i, L_j] = 1`.
pub fn commuting_subgroup_pairs(lattice: &Lattice, members: &[usize]) -> u128 {
    members
        .iter()
        .map(|&i| members.iter().filter(|&&j| lattice.commute(i, j)).count() as u128)
        .sum()
}

fn all(lattice: &Lattice) -> Vec<usize> {
    (0..lattice.len()).collect()
}

/// `sd(G)`, the fraction of ordered subgroup pairs that permute.
pub fn sd_group(lattice: &Lattice) -> Rational {
    sd_group_with(lattice, Exec::default())
}

pub fn sd_group_with(lattice: &Lattice, exec: Exec) -> Rational {
    let l = lattice.len() as u128;
    Rational::new(permuting_pairs(lattice, &all(lattice), exec), l * l)
}

/// `ssd(G)`, the fraction of ordered subgroup pairs with trivial commutator subgroup.
pub fn ssd_group(lattice: &Lattice) -> Rational {
    let l = lattice.len() as u128;
    Rational::new(commuting_subgroup_pairs(lattice, &all(lattice)), l * l)
}

/// `1` when `[X, Y] = 1`, else `0`.
pub fn phi(g: &Group, x: &Subgroup, y: &Subgroup) -> Result<u8> {
    g.check_parent(x)?;
    g.check_parent(y)?;
    let commute = x.elements().all(|a| y.elements().all(|b| g.commutes(a, b)));
    Ok(commute as u8)
}

/// Lattice positions of every commutator subgroup `[L_i, L_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    size: usize,
    entries: Vec<u32>,
}

impl BracketTable {
    pub fn new(lattice: &Lattice) -> BracketTable {
        Self::build_with(lattice, Exec::default())
    }

    /// Every ordered pair is computed from its own commutator set; `(i, j)`
    /// and `(j, i)` are not copied from each other.
    pub fn build_with(lattice: &Lattice, exec: Exec) -> BracketTable {
        let size = lattice.len();
        let g = lattice.group();
        let rows = exec.map(size, |i| {
            (0..size)
                .map(|j| {
                    if lattice.commute(i, j) {
                        return 0;
                    }
                    let b = g.bracket(lattice.get(i), lattice.get(j));
                    lattice
                        .index_of(&b)
                        .expect("commutator subgroup missing from a complete lattice")
                        as u32
                })
                .collect::<Vec<u32>>()
        });
        BracketTable {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.size + j] as usize
    }
}

/// Number of tuples `(L_1, ..., L_n, K)` with each `L_i` from `tuple_members`,
/// `K` from `tail_members`, and `[L_1, ..., L_n, K] = 1` (left-normed).
///
/// `count[S]` holds how many prefixes `(L_1, ..., L_j)` have bracket `S`; one
/// step maps it through the bracket table, and the final step counts the
/// `K` with `[S, K] = 1`.
pub fn multi_bracket_count(
    brackets: &BracketTable,
    tuple_members: &[usize],
    tail_members: &[usize],
    n: usize,
) -> u128 {
    let mut counts = vec![0u128; brackets.len()];
    for &l in tuple_members {
        counts[l] += 1;
    }
    for _ in 1..n {
        let mut next = vec![0u128; brackets.len()];
        for (s, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &l in tuple_members {
                next[brackets.get(s, l)] += c;
            }
        }
        counts = next;
    }
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(s, &c)| {
            c * tail_members.iter().filter(|&&k| brackets.get(s, k) == 0).count() as u128
        })
        .sum()
}

fn check_depth(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEPTH {
        return Err(Error::DepthOutOfRange { n, max: MAX_DEPTH });
    }
    Ok(())
}

/// `ssd^(n)(H, G)`: tuples `(L_1, ..., L_n) ∈ L(H)^n`, `K ∈ L(G)`, with
/// `[L_1, ..., L_n, K] = 1`, over `|L(H)|^n |L(G)|`.
pub fn ssd_multi(
    lattice: &Lattice,
    brackets: &BracketTable,
    h: &Subgroup,
    n: usize,
) -> Result<Rational> {
    check_depth(n)?;
    lattice.group().check_parent(h)?;
    let hi = lattice.index_of(h).ok_or(Error::NotInLattice)?;
    let sub = lattice.sublattice(hi);
    let whole: Vec<usize> = (0..lattice.len()).collect();
    let count = multi_bracket_count(brackets, &sub, &whole, n);
    let den = (sub.len() as u128).pow(n as u32) * lattice.len() as u128;
    Ok(Rational::new(count, den))
}

/// `ssd^(n)(H, H)`: as [`ssd_multi`] with the tail `K` also ranging over `L(H)`.
pub fn ssd_multi_within(
    lattice: &Lattice,
    brackets: &BracketTable,
    h: &Subgroup,
    n: usize,
) -> Result<Rational> {
    check_depth(n)?;
    lattice.group().check_parent(h)?;
    let hi = lattice.index_of(h).ok_or(Error::NotInLattice)?;
    let sub = lattice.sublattice(hi);
    let count = multi_bracket_count(brackets, &sub, &sub, n);
    let den = (sub.len() as u128).pow(n as u32 + 1);
    Ok(Rational::new(count, den))
}

//! Finite groups as multiplication tables.
//!
//! Elements are indices `0..order` and element `0` is always the identity.
//! Groups are immutable once built; every constructor checks the global order
//! cap before allocating a table.

use std::collections::VecDeque;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::mask::Mask;

pub const DEFAULT_ORDER_CAP: usize = 200;

static ORDER_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ORDER_CAP);

/// The largest group order any constructor will build.
pub fn order_cap() -> usize {
    ORDER_CAP.load(Ordering::Relaxed)
}

pub fn set_order_cap(cap: usize) {
    ORDER_CAP.store(cap, Ordering::Relaxed);
}

fn check_cap(order: u128) -> Result<usize> {
    let cap = order_cap();
    if order > cap as u128 {
        return Err(Error::OrderCapExceeded { order, cap });
    }
    Ok(order as usize)
}

/// Where a group came from. Claims that only apply to one family (the
/// dihedral lattice count, the modular-group remark) dispatch on this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    /// `Dihedral(n)` has order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Quaternion,
    Modular { p: u64, m: u32 },
    Product,
    Quotient,
    Table,
}

#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    label: String,
    family: Family,
    factors: Vec<Group>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for Group {}

impl Group {
    /// Builds a group from a table whose entry `table[a][b]` is the index of
    /// `a * b`, validating every group axiom.
    pub fn from_table(label: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Group> {
        let order = table.len();
        check_cap(order as u128)?;
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!("row {a} has {} entries", row.len())));
            }
            for &c in row {
                if c >= order {
                    return Err(Error::InvalidTable(format!("entry {c} out of range")));
                }
                flat.push(c as u32);
            }
        }
        let g = Group::from_flat(label.into(), Family::Table, order, flat)?;
        g.verify_axioms()?;
        Ok(g)
    }

    // Trusted constructors build the table directly; inverses are derived here.
    fn from_flat(label: String, family: Family, order: usize, table: Vec<u32>) -> Result<Group> {
        let mut inverses = vec![u32::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            if let Some(b) = row.iter().position(|&c| c == 0) {
                inverses[a] = b as u32;
            } else {
                return Err(Error::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        Ok(Group {
            order,
            table,
            inverses,
            label,
            family,
            factors: Vec::new(),
        })
    }

    /// The cyclic group `C_n`, with `a * b = (a + b) mod n`.
    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidParameter {
                family: "cyclic",
                reason: "n must be at least 1".into(),
            });
        }
        let n = check_cap(n as u128)?;
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        Group::from_flat(format!("C({n})"), Family::Cyclic(n), n, table)
    }

    /// The dihedral group of order `2n`, `<s, r | s^2 = r^n = 1, s r s = r^-1>`.
    ///
    /// Element `f * n + k` is `r^k s^f`.
    pub fn dihedral(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidParameter {
                family: "dihedral",
                reason: "n must be at least 1".into(),
            });
        }
        let order = check_cap(2 * n as u128)?;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (f1, k1) = (a / n, a % n);
            for b in 0..order {
                let (f2, k2) = (b / n, b % n);
                // r^k1 s^f1 r^k2 s^f2 = r^(k1 ± k2) s^(f1 + f2)
                let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
                let f = (f1 + f2) % 2;
                table.push((f * n + k) as u32);
            }
        }
        Group::from_flat(format!("D({n})"), Family::Dihedral(n), order, table)
    }

    /// The modular p-group `M(p^m) = <x, y | x^(p^(m-1)) = y^p = 1, y^-1 x y = x^(p^(m-2) + 1)>`,
    /// realised as `<y> ⋉ <x>`. Element `a * p^(m-1) + i` is `y^a x^i`.
    ///
    /// `M(2^3)` is the dihedral group of order 8.
    pub fn modular(p: u64, m: u32) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter {
                family: "modular",
                reason: format!("{p} is not prime"),
            });
        }
        if m < 3 {
            return Err(Error::InvalidParameter {
                family: "modular",
                reason: format!("m = {m} is below 3"),
            });
        }
        let order = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        let order = check_cap(order)?;
        let p = p as usize;
        let n = order / p;
        let e = p.pow(m - 2) + 1;
        // x^i y^b = y^b x^(i e^b)
        let mut e_pow = vec![1usize; p];
        for b in 1..p {
            e_pow[b] = e_pow[b - 1] * e % n;
        }
        let mut table = Vec::with_capacity(order * order);
        for u in 0..order {
            let (a, i) = (u / n, u % n);
            for v in 0..order {
                let (b, k) = (v / n, v % n);
                let y = (a + b) % p;
                let x = (i * e_pow[b] + k) % n;
                table.push((y * n + x) as u32);
            }
        }
        Group::from_flat(
            format!("M({p},{m})"),
            Family::Modular { p: p as u64, m },
            order,
            table,
        )
    }

    /// The quaternion group `Q8`, elements in the order
    /// `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Result<Group> {
        check_cap(8)?;
        // unit products: (sign, unit) for units 1, i, j, k
        const UNIT: [[(i8, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let decode = |e: usize| (if e.is_multiple_of(2) { 1i8 } else { -1 }, e / 2);
        let encode = |s: i8, u: usize| u * 2 + usize::from(s < 0);
        let mut table = Vec::with_capacity(64);
        for a in 0..8 {
            let (sa, ua) = decode(a);
            for b in 0..8 {
                let (sb, ub) = decode(b);
                let (s, u) = UNIT[ua][ub];
                table.push(encode(sa * sb * s, u) as u32);
            }
        }
        Group::from_flat("Q8".into(), Family::Quaternion, 8, table)
    }

    /// The symmetric group `S_n` for `1 <= n <= 5`.
    ///
    /// Elements are the permutations of `0..n` in lexicographic order of their
    /// image lists (see [`perm_index`]); `(a * b)(i) = b(a(i))`, so the left
    /// factor acts first.
    pub fn symmetric(n: usize) -> Result<Group> {
        if n > 5 {
            let order = (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k));
            check_cap(order.unwrap_or(u128::MAX))?;
        }
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidParameter {
                family: "symmetric",
                reason: format!("n = {n} outside 1..=5"),
            });
        }
        let perms = permutations(n);
        let order = check_cap(perms.len() as u128)?;
        let mut table = Vec::with_capacity(order * order);
        for a in &perms {
            for b in &perms {
                let prod: Vec<usize> = a.iter().map(|&i| b[i]).collect();
                table.push(perm_index(&prod) as u32);
            }
        }
        Group::from_flat(format!("S({n})"), Family::Symmetric(n), order, table)
    }

    /// `G1 × G2`; element `a * |G2| + b` is `(a, b)`.
    pub fn direct_product(g1: &Group, g2: &Group) -> Result<Group> {
        let order = check_cap(g1.order as u128 * g2.order as u128)?;
        let n2 = g2.order;
        let mut table = Vec::with_capacity(order * order);
        for u in 0..order {
            let (a1, b1) = (u / n2, u % n2);
            for v in 0..order {
                let (a2, b2) = (v / n2, v % n2);
                table.push((g1.mul(a1, a2) * n2 + g2.mul(b1, b2)) as u32);
            }
        }
        let mut g = Group::from_flat(
            format!("{} x {}", g1.label, g2.label),
            Family::Product,
            order,
            table,
        )?;
        g.factors = g1.factor_list();
        g.factors.extend(g2.factor_list());
        Ok(g)
    }

    /// `G / N` on the cosets of a normal subgroup. Cosets are numbered by
    /// their smallest element, so `N` itself is the identity.
    pub fn quotient(&self, n: &Subgroup) -> Result<Group> {
        self.check_parent(n)?;
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if coset_of[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for x in n.elements() {
                coset_of[self.mul(a, x)] = id;
            }
        }
        let q = reps.len();
        let table = reps
            .iter()
            .flat_map(|&a| reps.iter().map(move |&b| (a, b)))
            .map(|(a, b)| coset_of[self.mul(a, b)] as u32)
            .collect();
        Group::from_flat(
            format!("{}/N{}", self.label, n.size()),
            Family::Quotient,
            q,
            table,
        )
    }

    fn factor_list(&self) -> Vec<Group> {
        if self.factors.is_empty() {
            vec![self.clone()]
        } else {
            self.factors.clone()
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// The direct factors this group was assembled from, flattened; empty for
    /// groups not built by [`Group::direct_product`].
    pub fn factors(&self) -> &[Group] {
        &self.factors
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub(crate) fn comm_unchecked(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.order {
            return Err(Error::ElementOutOfRange { index, order: self.order });
        }
        Ok(())
    }

    pub(crate) fn check_parent(&self, h: &Subgroup) -> Result<()> {
        if h.parent_order != self.order {
            return Err(Error::ParentMismatch { expected: self.order, found: h.parent_order });
        }
        Ok(())
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> Result<usize> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.comm_unchecked(x, y))
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    /// Checks the Latin-square, identity, associativity and inverse laws.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            let mut row = Mask::empty(n);
            let mut col = Mask::empty(n);
            for b in 0..n {
                if !row.insert(self.mul(a, b)) || !col.insert(self.mul(b, a)) {
                    return Err(Error::InvalidTable(format!("row/column {a} repeats an entry")));
                }
            }
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidTable(format!("0 is not an identity for {a}")));
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::InvalidTable(format!("{a} has no two-sided inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The smallest subgroup containing `gens`. Panics on an out-of-range index.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        self.subgroup_from_mask(self.closure_mask(gens.iter().copied()))
    }

    // In a finite group the generated subgroup is the set reachable from the
    // identity by right multiplication with generators.
    pub(crate) fn closure_mask(&self, gens: impl IntoIterator<Item = usize>) -> Mask {
        let mut gs: Vec<usize> = gens.into_iter().filter(|&g| g != 0).collect();
        gs.sort_unstable();
        gs.dedup();
        let mut mask = Mask::singleton(self.order, 0);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in &gs {
                let y = self.mul(x, g);
                if mask.insert(y) {
                    stack.push(y);
                }
            }
        }
        mask
    }

    /// Closure of an arbitrary element set, adding generators one at a time.
    pub(crate) fn closure_of_set(&self, set: &Mask) -> Mask {
        let mut gens = Vec::new();
        let mut mask = Mask::singleton(self.order, 0);
        for x in set.iter() {
            if !mask.contains(x) {
                gens.push(x);
                mask = self.closure_mask(gens.iter().copied());
            }
        }
        mask
    }

    pub(crate) fn subgroup_from_mask(&self, mask: Mask) -> Subgroup {
        debug_assert_eq!(mask.len(), self.order);
        Subgroup::from_mask(mask)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_mask(Mask::singleton(self.order, 0))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(Mask::full(self.order))
    }

    /// `[H, K]`, the subgroup generated by all `[h, k]`.
    pub fn bracket(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut comms = Mask::empty(self.order);
        for x in h.elements() {
            for y in k.elements() {
                comms.insert(self.comm_unchecked(x, y));
            }
        }
        self.subgroup_from_mask(self.closure_of_set(&comms))
    }

    /// Centraliser of an element as a mask.
    pub fn centralizer_of(&self, x: usize) -> Mask {
        Mask::from_indices(self.order, (0..self.order).filter(|&y| self.commutes(x, y)))
    }

    /// `C_K(H) = { k in K : k h = h k for all h in H }`.
    pub fn centralizer_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        let mask = Mask::from_indices(
            self.order,
            k.elements().filter(|&x| h.elements().all(|y| self.commutes(x, y))),
        );
        self.subgroup_from_mask(mask)
    }

    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(a, g), self.inv(a))
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        (0..self.order).all(|a| n.elements().all(|x| n.contains(self.conjugate(a, x))))
    }

    /// Orbits of `g -> a g a^-1`, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = Mask::empty(self.order);
        let mut classes = Vec::new();
        for g in 0..self.order {
            if seen.contains(g) {
                continue;
            }
            let mut class = Mask::singleton(self.order, g);
            let mut queue = VecDeque::from([g]);
            while let Some(x) = queue.pop_front() {
                for a in 0..self.order {
                    let y = self.conjugate(a, x);
                    if class.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            for x in class.iter() {
                seen.insert(x);
            }
            classes.push(class.iter().collect());
        }
        classes
    }

    /// `G ⊇ G' ⊇ G'' ⊇ ...`, stopping at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket(last, last);
            if next == *last {
                return series;
            }
            let done = next.size() == 1;
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.bracket(&g, &g)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|s| s.size() == 1)
    }

    /// `G'' = 1`.
    pub fn is_metabelian(&self) -> bool {
        let series = self.derived_series();
        series.len() <= 3 && series.last().is_some_and(|s| s.size() == 1)
    }
}

/// A subgroup of one parent group, as a membership mask over its elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    mask: Mask,
    size: usize,
    parent_order: usize,
}

impl Subgroup {
    fn from_mask(mask: Mask) -> Self {
        Subgroup {
            size: mask.count(),
            parent_order: mask.len(),
            mask,
        }
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.mask)
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Rank of a permutation of `0..n` (given as its image list) among all
/// permutations in lexicographic order; this is its element index in
/// [`Group::symmetric`].
pub fn perm_index(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

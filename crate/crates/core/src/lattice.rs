//! Complete subgroup lattices and the subgroup-level primitives the degrees
//! are built from.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{order_cap, Group, Subgroup};
use crate::mask::Mask;

/// Every subgroup of a group, in canonical order: ascending size, ties broken
/// by lexicographic order of the element lists. Position 0 is the trivial
/// subgroup and the last position is the whole group.
#[derive(Clone, Debug)]
pub struct Lattice {
    group: Arc<Group>,
    subgroups: Vec<Subgroup>,
    generators: Vec<Vec<usize>>,
    // C_G(L_i) as element masks
    centralizers: Vec<Mask>,
    index: HashMap<Mask, usize>,
}

/// Enumerates all subgroups by join-closure: start from the cyclic subgroups
/// and join every discovered subgroup with every cyclic subgroup until no new
/// subgroup appears.
pub fn enumerate_subgroups(group: &Group) -> Result<Lattice> {
    if group.order() > order_cap() {
        return Err(Error::OrderCapExceeded { order: group.order() as u128, cap: order_cap() });
    }
    let n = group.order();

    let mut found: HashMap<Mask, Vec<usize>> = HashMap::new();
    let mut cyclic: Vec<(Mask, usize)> = Vec::new();
    for a in 0..n {
        let m = group.closure_mask([a]);
        if !found.contains_key(&m) {
            found.insert(m.clone(), if a == 0 { vec![] } else { vec![a] });
            cyclic.push((m, a));
        }
    }

    let mut queue: Vec<Mask> = cyclic.iter().map(|(m, _)| m.clone()).collect();
    while let Some(s) = queue.pop() {
        let gens = found[&s].clone();
        for (c, a) in &cyclic {
            if c.is_subset(&s) {
                continue;
            }
            let joined = group.closure_mask(gens.iter().copied().chain([*a]));
            if !found.contains_key(&joined) {
                let mut g = gens.clone();
                g.push(*a);
                found.insert(joined.clone(), g);
                queue.push(joined);
            }
        }
    }

    let mut entries: Vec<(Mask, Vec<usize>)> = found.into_iter().collect();
    entries.sort_by(|(a, _), (b, _)| a.count().cmp(&b.count()).then_with(|| a.cmp_lex(b)));

    let element_centralizers: Vec<Mask> = (0..n).map(|x| group.centralizer_of(x)).collect();
    let mut subgroups = Vec::with_capacity(entries.len());
    let mut generators = Vec::with_capacity(entries.len());
    let mut centralizers = Vec::with_capacity(entries.len());
    let mut index = HashMap::with_capacity(entries.len());
    for (i, (mask, gens)) in entries.into_iter().enumerate() {
        let mut c = Mask::full(n);
        for &g in &gens {
            c.intersect_with(&element_centralizers[g]);
        }
        centralizers.push(c);
        index.insert(mask.clone(), i);
        subgroups.push(group.subgroup_from_mask(mask));
        generators.push(gens);
    }

    Ok(Lattice {
        group: Arc::new(group.clone()),
        subgroups,
        generators,
        centralizers,
        index,
    })
}

impl Lattice {
    pub fn enumerate(group: &Group) -> Result<Lattice> {
        enumerate_subgroups(group)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// A generating set for member `i` (empty for the trivial subgroup).
    pub fn generators(&self, i: usize) -> &[usize] {
        &self.generators[i]
    }

    /// `C_G(L_i)` as an element mask.
    pub fn centralizer_mask(&self, i: usize) -> &Mask {
        &self.centralizers[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.mask()).copied()
    }

    pub fn index_of_mask(&self, mask: &Mask) -> Option<usize> {
        self.index.get(mask).copied()
    }

    fn position(&self, h: &Subgroup) -> Result<usize> {
        self.group.check_parent(h)?;
        self.index_of(h).ok_or(Error::NotInLattice)
    }

    /// Positions of the members contained in member `h`, i.e. `L(H)`.
    pub fn sublattice(&self, h: usize) -> Vec<usize> {
        let hm = self.subgroups[h].mask();
        (0..=h).filter(|&i| self.subgroups[i].mask().is_subset(hm)).collect()
    }

    /// Positions of the members containing member `n`; for normal `N` these
    /// correspond to the subgroups of `G/N`.
    pub fn overgroups(&self, n: usize) -> Vec<usize> {
        let nm = self.subgroups[n].mask();
        (n..self.len()).filter(|&i| nm.is_subset(self.subgroups[i].mask())).collect()
    }

    /// `[L_i, L_j] = 1`, read off the centraliser masks.
    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.subgroups[i].mask().is_subset(&self.centralizers[j])
    }

    /// Positions of `Comm_G(H) = { K : [H, K] = 1 }`.
    pub fn comm_set(&self, h: &Subgroup) -> Result<Vec<usize>> {
        let i = self.position(h)?;
        Ok((0..self.len()).filter(|&j| self.commute(i, j)).collect())
    }

    /// Positions of `C(H) = { K : HK = KH }`.
    pub fn c_set(&self, h: &Subgroup) -> Result<Vec<usize>> {
        self.position(h)?;
        let g = &*self.group;
        Ok((0..self.len())
            .filter(|&j| products_equal(g, h, &self.subgroups[j]))
            .collect())
    }

    pub fn normal_subgroups(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.group.is_normal(&self.subgroups[i]))
            .collect()
    }

    pub fn permutes_at(&self, i: usize, j: usize) -> bool {
        products_equal(&self.group, &self.subgroups[i], &self.subgroups[j])
    }
}

fn products_equal(g: &Group, h: &Subgroup, k: &Subgroup) -> bool {
    let mut hk = Mask::empty(g.order());
    let mut kh = Mask::empty(g.order());
    for x in h.elements() {
        for y in k.elements() {
            hk.insert(g.mul(x, y));
            kh.insert(g.mul(y, x));
        }
    }
    hk == kh
}

/// `HK = KH` as element sets.
pub fn permutes(g: &Group, h: &Subgroup, k: &Subgroup) -> Result<bool> {
    g.check_parent(h)?;
    g.check_parent(k)?;
    Ok(products_equal(g, h, k))
}

/// `[H, K] = <[h, k] : h in H, k in K>`.
pub fn commutator_subgroup(g: &Group, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    g.check_parent(h)?;
    g.check_parent(k)?;
    Ok(g.bracket(h, k))
}

/// `C_K(H) = { k in K : [k, h] = 1 for all h in H }`.
pub fn centralizer_in(g: &Group, k: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    g.check_parent(h)?;
    g.check_parent(k)?;
    Ok(g.centralizer_in(k, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm_index;

    fn s3() -> Group {
        Group::symmetric(3).unwrap()
    }

    #[test]
    fn small_lattice_sizes() {
        assert_eq!(Lattice::enumerate(&Group::cyclic(6).unwrap()).unwrap().len(), 4);
        assert_eq!(Lattice::enumerate(&Group::cyclic(12).unwrap()).unwrap().len(), 6);
        assert_eq!(Lattice::enumerate(&Group::cyclic(1).unwrap()).unwrap().len(), 1);
        assert_eq!(Lattice::enumerate(&s3()).unwrap().len(), 6);
        assert_eq!(Lattice::enumerate(&Group::dihedral(4).unwrap()).unwrap().len(), 10);
        assert_eq!(Lattice::enumerate(&Group::quaternion().unwrap()).unwrap().len(), 6);
        assert_eq!(Lattice::enumerate(&Group::symmetric(4).unwrap()).unwrap().len(), 30);
    }

    #[test]
    fn canonical_order() {
        let l = Lattice::enumerate(&s3()).unwrap();
        let sizes: Vec<usize> = l.subgroups().iter().map(Subgroup::size).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
        for w in l.subgroups().windows(2) {
            let ord = w[0].size().cmp(&w[1].size()).then_with(|| w[0].mask().cmp_lex(w[1].mask()));
            assert!(ord.is_lt());
        }
    }

    #[test]
    fn permutability_in_s3() {
        let g = s3();
        let t12 = g.closure(&[perm_index(&[1, 0, 2])]);
        let t13 = g.closure(&[perm_index(&[2, 1, 0])]);
        let a3 = g.derived_subgroup();
        assert!(permutes(&g, &t12, &a3).unwrap());
        assert!(!permutes(&g, &t12, &t13).unwrap());
        assert!(permutes(&g, &t12, &t12).unwrap());
        let foreign = Group::cyclic(3).unwrap().whole();
        assert!(permutes(&g, &t12, &foreign).is_err());
    }

    #[test]
    fn brackets_and_centralizers() {
        let g = s3();
        let a3 = g.derived_subgroup();
        assert_eq!(a3.size(), 3);
        assert_eq!(commutator_subgroup(&g, &g.whole(), &g.whole()).unwrap(), a3);
        assert!(commutator_subgroup(&g, &a3, &g.trivial_subgroup()).unwrap().is_trivial());
        assert_eq!(centralizer_in(&g, &g.whole(), &a3).unwrap(), a3);
        assert_eq!(centralizer_in(&g, &a3, &g.trivial_subgroup()).unwrap(), a3);

        let q = Group::quaternion().unwrap();
        let i = q.closure(&[2]);
        let j = q.closure(&[4]);
        assert_eq!(commutator_subgroup(&q, &i, &j).unwrap(), q.closure(&[1]));
        assert_eq!(centralizer_in(&q, &q.whole(), &i).unwrap(), i);
    }

    #[test]
    fn comm_and_c_sets() {
        let g = s3();
        let l = Lattice::enumerate(&g).unwrap();
        assert_eq!(l.comm_set(l.get(0)).unwrap().len(), 6);
        assert_eq!(l.comm_set(l.get(l.top())).unwrap(), vec![0]);
        let t12 = g.closure(&[perm_index(&[1, 0, 2])]);
        let c: Vec<usize> = l.c_set(&t12).unwrap();
        let sizes: Vec<usize> = c.iter().map(|&i| l.get(i).size()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
        assert!(c.contains(&l.index_of(&t12).unwrap()));
        assert_eq!(l.c_set(l.get(l.top())).unwrap().len(), 6);

        let q = Group::quaternion().unwrap();
        let lq = Lattice::enumerate(&q).unwrap();
        let comm: Vec<usize> = lq.comm_set(&q.closure(&[2])).unwrap();
        let sizes: Vec<usize> = comm.iter().map(|&i| lq.get(i).size()).collect();
        assert_eq!(sizes, vec![1, 2, 4]);

        let not_member = Group::cyclic(4).unwrap().whole();
        assert!(l.comm_set(&not_member).is_err());
    }

    #[test]
    fn normal_subgroup_lists() {
        let l = Lattice::enumerate(&s3()).unwrap();
        let sizes: Vec<usize> = l.normal_subgroups().iter().map(|&i| l.get(i).size()).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
        let q = Lattice::enumerate(&Group::quaternion().unwrap()).unwrap();
        assert_eq!(q.normal_subgroups().len(), 6);
        let c = Lattice::enumerate(&Group::cyclic(8).unwrap()).unwrap();
        assert_eq!(c.normal_subgroups().len(), c.len());
    }

    #[test]
    fn sub_and_overgroups() {
        let l = Lattice::enumerate(&Group::dihedral(4).unwrap()).unwrap();
        assert_eq!(l.sublattice(l.top()).len(), l.len());
        assert_eq!(l.sublattice(0), vec![0]);
        assert_eq!(l.overgroups(0).len(), l.len());
        assert_eq!(l.overgroups(l.top()), vec![l.top()]);
    }
}

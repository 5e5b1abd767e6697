//! Fixed-width bit sets over the element indices of one group.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A set of element indices `0..len`, stored one bit per element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mask {
    words: Box<[u64]>,
    len: usize,
}

impl Mask {
    pub fn empty(len: usize) -> Self {
        Mask {
            words: vec![0; len.div_ceil(WORD)].into_boxed_slice(),
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Self::empty(len);
        for (i, w) in m.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (len - lo).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        m
    }

    pub fn singleton(len: usize, index: usize) -> Self {
        let mut m = Self::empty(len);
        m.insert(index);
        m
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(len);
        for i in indices {
            m.insert(i);
        }
        m
    }

    /// Width of the mask (the order of the group it refers to).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        index < self.len && self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    /// Sets bit `index`; returns true if it was previously clear.
    #[inline]
    pub fn insert(&mut self, index: usize) -> bool {
        assert!(index < self.len, "mask index {index} out of range {}", self.len);
        let w = &mut self.words[index / WORD];
        let bit = 1u64 << (index % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Mask) -> Mask {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Mask) -> Mask {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn intersection_count(&self, other: &Mask) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &Mask) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            })
        })
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn cmp_lex(&self, other: &Mask) -> Ordering {
        let first_diff = self
            .words
            .iter()
            .zip(other.words.iter())
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| i * WORD + (a ^ b).trailing_zeros() as usize);
        let Some(i) = first_diff else {
            return Ordering::Equal;
        };
        // Elements below i agree. The side holding i is smaller unless the
        // other side has nothing left (it is then a proper prefix).
        let (lacker, holder_is_self) = if self.contains(i) {
            (other, true)
        } else {
            (self, false)
        };
        match (lacker.any_above(i), holder_is_self) {
            (true, true) | (false, false) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    fn any_above(&self, index: usize) -> bool {
        let w = index / WORD;
        let shift = index % WORD;
        let above = if shift == WORD - 1 { 0 } else { self.words[w] >> (shift + 1) };
        above != 0 || self.words[w + 1..].iter().any(|&x| x != 0)
    }

    fn zip_with(&self, other: &Mask, f: impl Fn(u64, u64) -> u64) -> Mask {
        debug_assert_eq!(self.len, other.len);
        Mask {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
            len: self.len,
        }
    }

    /// Little-endian hex rendering: bit `i` of the mask is bit `i % 4` of
    /// hex digit `i / 4`, digits written least significant first.
    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4);
        (0..digits)
            .map(|d| {
                let nib = (0..4).fold(0u32, |acc, b| {
                    acc | (self.contains(d * 4 + b) as u32) << b
                });
                char::from_digit(nib, 16).unwrap()
            })
            .collect()
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

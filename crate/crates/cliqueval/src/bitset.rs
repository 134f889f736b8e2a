//! Fixed-capacity bitsets used for adjacency rows and vertex masks.

use std::fmt;

const WORD_BITS: usize = 64;

/// A set of indices in `0..capacity`, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    capacity: usize,
    words: Vec<u64>,
}

impl Bitset {
    /// Creates an empty set that can hold indices `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        Self {
            capacity,
            words: vec![0; capacity.div_ceil(WORD_BITS)],
        }
    }

    /// Builds a set from an iterator of indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, indices: I) -> Self {
        let mut set = Self::new(capacity);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// The set `{0, 1, ..., capacity - 1}`.
    pub fn full(capacity: usize) -> Self {
        Self::from_indices(capacity, 0..capacity)
    }

    /// Removes every element smaller than `limit`.
    pub fn remove_below(&mut self, limit: usize) {
        let cut = limit.min(self.capacity);
        for word in self.words.iter_mut().take(cut / WORD_BITS) {
            *word = 0;
        }
        if !cut.is_multiple_of(WORD_BITS) {
            self.words[cut / WORD_BITS] &= !0u64 << (cut % WORD_BITS);
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.capacity, "index {i} out of range");
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.capacity, "index {i} out of range");
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.capacity, "index {i} out of range");
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// Number of elements in the set.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Keeps only the elements also present in `other`.
    pub fn intersect_assign(&mut self, other: &Bitset) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        let mut out = self.clone();
        out.intersect_assign(other);
        out
    }

    pub fn union_assign(&mut self, other: &Bitset) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// True iff the two sets share no element.
    pub fn is_disjoint(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words.iter().zip(&other.words).all(|(w, o)| w & o == 0)
    }

    /// Iterates over the elements in increasing order.
    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl fmt::Debug for Bitset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

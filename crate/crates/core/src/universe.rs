//! The vertex ground set and subsets of it.

use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// A finite ground set of vertices, identified by the indices `0..n`.
///
/// Every relation, vertex set, and graph in this crate is tied to a
/// universe; combining values from different universes is an error.
/// The empty universe (`n = 0`) is legal; only the solver insists on
/// at least one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    n: usize,
}

impl Universe {
    pub fn new(n: usize) -> Self {
        Universe { n }
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n
    }

    /// Iterates over all vertices in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub(crate) fn words(&self) -> usize {
        self.n.div_ceil(WORD_BITS)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                size: self.n,
            })
        }
    }
}

/// A subset of a universe's vertices, stored as a bit set.
///
/// Binary set operations panic on universe mismatch; the fallible
/// entry points of this crate check universes before ever getting here.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: Universe,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: Universe) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.words()],
        }
    }

    pub fn full(universe: Universe) -> Self {
        let mut s = Self::empty(universe);
        for w in &mut s.words {
            *w = !0;
        }
        s.mask_tail();
        s
    }

    pub fn singleton(universe: Universe, v: usize) -> Result<Self> {
        universe.check_vertex(v)?;
        let mut s = Self::empty(universe);
        s.insert(v);
        Ok(s)
    }

    /// Builds a set from explicit members, rejecting out-of-range vertices.
    pub fn of<I: IntoIterator<Item = usize>>(universe: Universe, members: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for v in members {
            universe.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * WORD_BITS;
            BitIter { word: w, base }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub(crate) fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(universe: Universe, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), universe.words());
        let mut s = VertexSet { universe, words };
        s.mask_tail();
        s
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn mask_tail(&mut self) {
        let tail = self.universe.n % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let bit = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + bit)
    }
}

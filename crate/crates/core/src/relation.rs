//! Binary relations over a finite universe.
//!
//! A [`Relation`] is a set of ordered vertex pairs, stored as a dense bit
//! matrix: row `x` holds the successors of `x`. All operations return new
//! values; nothing is mutated after construction. Equality is extensional
//! (same universe, same pair set).

use crate::path::Path;
use crate::universe::{Universe, VertexSet};
use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// A binary relation on a [`Universe`], i.e. a set of ordered pairs
/// `(tail, head)` of vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    universe: Universe,
    words_per_row: usize,
    rows: Vec<u64>,
}

/// Outcome of checking whether a relation is a strict partial order
/// (irreflexive and transitive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SporderCheck {
    pub irreflexive: bool,
    pub transitive: bool,
}

impl SporderCheck {
    pub fn is_sporder(&self) -> bool {
        self.irreflexive && self.transitive
    }
}

impl Relation {
    pub fn empty(universe: Universe) -> Self {
        let words_per_row = universe.words();
        Relation {
            universe,
            words_per_row,
            rows: vec![0; universe.size() * words_per_row],
        }
    }

    /// The full relation: every ordered pair, loops included.
    pub fn full(universe: Universe) -> Self {
        let mut r = Self::empty(universe);
        for x in universe.vertices() {
            let row = r.row_mut(x);
            for w in row.iter_mut() {
                *w = !0;
            }
        }
        r.mask_tails();
        r
    }

    pub fn from_pairs<I>(universe: Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            universe.check_vertex(x)?;
            universe.check_vertex(y)?;
            r.insert(x, y);
        }
        Ok(r)
    }

    /// The subdiagonal relation `{(x, x) : x in b}`.
    pub fn diagonal(b: &VertexSet) -> Self {
        let mut r = Self::empty(b.universe());
        for x in b.iter() {
            r.insert(x, x);
        }
        r
    }

    /// The full diagonal relation on the universe.
    pub fn identity(universe: Universe) -> Self {
        Self::diagonal(&VertexSet::full(universe))
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.universe.size()
            && y < self.universe.size()
            && self.row(x)[y / WORD_BITS] >> (y % WORD_BITS) & 1 == 1
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.universe.vertices() {
            for y in self.successors(x) {
                out.push((x, y));
            }
        }
        out
    }

    /// Successors of `x` in increasing order.
    pub fn successors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(
            self.universe.contains(x),
            "vertex {x} out of range for a universe of {} vertices",
            self.universe.size()
        );
        let row = self.row(x);
        row.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * WORD_BITS;
            std::iter::from_fn({
                let mut w = w;
                move || {
                    if w == 0 {
                        return None;
                    }
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(base + bit)
                }
            })
        })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.zip_with(other, |a, b| a & b)
    }

    /// The complementary relation: all pairs not in `self`.
    pub fn complement(&self) -> Relation {
        let mut r = Relation {
            universe: self.universe,
            words_per_row: self.words_per_row,
            rows: self.rows.iter().map(|w| !w).collect(),
        };
        r.mask_tails();
        r
    }

    /// The converse relation: `(x, y)` becomes `(y, x)`.
    pub fn converse(&self) -> Relation {
        let mut r = Self::empty(self.universe);
        for x in self.universe.vertices() {
            for y in self.successors(x) {
                r.insert(y, x);
            }
        }
        r
    }

    /// Relational composition: `(x, z)` is in the result iff some `y`
    /// has `(x, y)` in `self` and `(y, z)` in `other`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        let mut r = Self::empty(self.universe);
        for x in self.universe.vertices() {
            for y in self.successors(x) {
                let src = other.row(y).to_vec();
                let dst = r.row_mut(x);
                for (d, s) in dst.iter_mut().zip(src) {
                    *d |= s;
                }
            }
        }
        Ok(r)
    }

    /// `k`-fold composition, `k >= 1`. The zeroth power is deliberately
    /// rejected; the diagonal is produced by [`Relation::diagonal`] and
    /// enters only the reflexive closure.
    pub fn power(&self, k: usize) -> Result<Relation> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc: Option<Relation> = None;
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.compose(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.compose(&base)?;
        }
        Ok(acc.expect("k >= 1"))
    }

    /// The transitive closure: the union of all positive powers, i.e.
    /// `(x, y)` is related iff `y` is reachable from `x` in at least one
    /// step. Computed by a bit-parallel Warshall pass.
    pub fn transitive_closure(&self) -> Relation {
        let mut c = self.clone();
        let n = self.universe.size();
        let w = self.words_per_row;
        for k in 0..n {
            let row_k = c.row(k).to_vec();
            for i in 0..n {
                if c.rows[i * w + k / WORD_BITS] >> (k % WORD_BITS) & 1 == 1 {
                    let row_i = &mut c.rows[i * w..(i + 1) * w];
                    for (d, s) in row_i.iter_mut().zip(&row_k) {
                        *d |= s;
                    }
                }
            }
        }
        c
    }

    /// The reflexive and transitive closure: transitive closure plus the
    /// full diagonal.
    pub fn reflexive_transitive_closure(&self) -> Relation {
        let mut c = self.transitive_closure();
        for x in self.universe.vertices() {
            c.insert(x, x);
        }
        c
    }

    /// The foreset of `c`: all predecessors `{x : exists v in c, (x, v) in self}`.
    pub fn foreset(&self, c: &VertexSet) -> Result<VertexSet> {
        if self.universe != c.universe() {
            return Err(Error::UniverseMismatch);
        }
        let mut out = VertexSet::empty(self.universe);
        for x in self.universe.vertices() {
            if self
                .row(x)
                .iter()
                .zip(c.words())
                .any(|(a, b)| a & b != 0)
            {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// The afterset of `b`: all successors `{y : exists v in b, (v, y) in self}`.
    pub fn afterset(&self, b: &VertexSet) -> Result<VertexSet> {
        if self.universe != b.universe() {
            return Err(Error::UniverseMismatch);
        }
        let mut words = vec![0u64; self.words_per_row];
        for x in b.iter() {
            for (d, s) in words.iter_mut().zip(self.row(x)) {
                *d |= s;
            }
        }
        Ok(VertexSet::from_words(self.universe, words))
    }

    /// The asymmetric part: pairs of `self` whose reverse is absent.
    pub fn asym_part(&self) -> Relation {
        let conv = self.converse();
        let mut r = self.clone();
        for (d, s) in r.rows.iter_mut().zip(&conv.rows) {
            *d &= !s;
        }
        r
    }

    /// Restriction to pairs whose endpoints both lie in `s`.
    pub fn restrict(&self, s: &VertexSet) -> Result<Relation> {
        if self.universe != s.universe() {
            return Err(Error::UniverseMismatch);
        }
        let mut r = Self::empty(self.universe);
        for x in s.iter() {
            let dst = r.row_mut(x);
            for ((d, a), b) in dst.iter_mut().zip(self.rows[x * self.words_per_row..].iter()).zip(s.words()) {
                *d = a & b;
            }
        }
        Ok(r)
    }

    pub fn is_subset_of(&self, other: &Relation) -> Result<bool> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0))
    }

    /// True iff no two distinct members of `s` are related, in either
    /// direction realized by the pairs. Loops on a member are harmless.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        if self.universe != s.universe() {
            return Err(Error::UniverseMismatch);
        }
        for x in s.iter() {
            let row = self.row(x);
            for (i, (a, b)) in row.iter().zip(s.words()).enumerate() {
                let mut hits = a & b;
                if x / WORD_BITS == i {
                    hits &= !(1 << (x % WORD_BITS));
                }
                if hits != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The set order induced by this relation: `a <= b` iff every member
    /// of `a` is in `b` or relates into `b`, i.e. `a` is covered by
    /// `b` together with the foreset of `b`.
    pub fn le_set(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        if self.universe != a.universe() || self.universe != b.universe() {
            return Err(Error::UniverseMismatch);
        }
        let cover = b.union(&self.foreset(b)?);
        Ok(a.is_subset(&cover))
    }

    /// Checks the two strict-partial-order laws separately.
    pub fn sporder_check(&self) -> SporderCheck {
        let irreflexive = self.universe.vertices().all(|x| !self.contains(x, x));
        let transitive = self
            .compose(self)
            .expect("same universe")
            .is_subset_of(self)
            .expect("same universe");
        SporderCheck {
            irreflexive,
            transitive,
        }
    }

    /// Every member of `domain` has at least one successor.
    pub fn is_left_total(&self, domain: &VertexSet) -> Result<bool> {
        if self.universe != domain.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(domain
            .iter()
            .all(|x| self.row(x).iter().any(|&w| w != 0)))
    }

    /// Finds a cycle if one exists: a vertex sequence `v0..vk`, `k >= 1`,
    /// with consecutive pairs in the relation, `v0 = vk`, and distinct
    /// interior vertices. The scan starts from the lowest vertex index and
    /// visits successors in increasing order, so the witness is
    /// reproducible. On a finite universe a cycle is exactly what an
    /// endless outward walk collapses to; absence of a cycle means every
    /// walk eventually stops.
    pub fn has_cycle(&self) -> Option<Path> {
        let n = self.universe.size();
        // 0 = unvisited, 1 = on the current stack, 2 = finished
        let mut state = vec![0u8; n];
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            state[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                match self.next_successor(v, *next) {
                    Some(y) => {
                        *next = y + 1;
                        if state[y] == 1 {
                            let pos = stack
                                .iter()
                                .position(|&(u, _)| u == y)
                                .expect("gray vertex is on the stack");
                            let mut verts: Vec<usize> =
                                stack[pos..].iter().map(|&(u, _)| u).collect();
                            verts.push(y);
                            return Some(
                                Path::new(self.universe, verts)
                                    .expect("cycle vertices are in range"),
                            );
                        }
                        if state[y] == 0 {
                            state[y] = 1;
                            stack.push((y, 0));
                        }
                    }
                    None => {
                        state[v] = 2;
                        stack.pop();
                    }
                }
            }
        }
        None
    }

    fn next_successor(&self, x: usize, from: usize) -> Option<usize> {
        if from >= self.universe.size() {
            return None;
        }
        let row = self.row(x);
        let mut word_idx = from / WORD_BITS;
        let mut w = row[word_idx] & (!0u64 << (from % WORD_BITS));
        loop {
            if w != 0 {
                return Some(word_idx * WORD_BITS + w.trailing_zeros() as usize);
            }
            word_idx += 1;
            if word_idx >= self.words_per_row {
                return None;
            }
            w = row[word_idx];
        }
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.rows[x * self.words_per_row..(x + 1) * self.words_per_row]
    }

    fn row_mut(&mut self, x: usize) -> &mut [u64] {
        &mut self.rows[x * self.words_per_row..(x + 1) * self.words_per_row]
    }

    fn insert(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.universe.size() && y < self.universe.size());
        self.rows[x * self.words_per_row + y / WORD_BITS] |= 1 << (y % WORD_BITS);
    }

    fn zip_with(&self, other: &Relation, f: impl Fn(u64, u64) -> u64) -> Result<Relation> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(Relation {
            universe: self.universe,
            words_per_row: self.words_per_row,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    fn mask_tails(&mut self) {
        let n = self.universe.size();
        let tail = n % WORD_BITS;
        if tail == 0 {
            return;
        }
        let mask = (1u64 << tail) - 1;
        let w = self.words_per_row;
        for x in 0..n {
            self.rows[x * w + w - 1] &= mask;
        }
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

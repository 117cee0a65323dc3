//! Two-colored directed graphs and the monochromatic-absorption
//! predicates the solver is built on.
//!
//! A graph is a universe plus a blue and a red edge relation. Loops are
//! allowed and an ordered pair may carry both colors. The central object
//! is the monochromatic relation: `(x, y)` is related iff some
//! single-color path leads from `x` to `y`.

use crate::path::Path;
use crate::relation::Relation;
use crate::universe::{Universe, VertexSet};
use crate::{Error, Result};

/// A directed graph whose edges carry one of two colors (or both).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoredDigraph {
    universe: Universe,
    blue: Relation,
    red: Relation,
}

/// What the solver's hypotheses look like on a concrete graph. On a
/// finite universe the asymmetric parts of the color closures never
/// admit a cycle, so the two `*_asym_acyclic` flags are expected to be
/// true for every input; the raw colors may well contain cycles, which
/// is exactly the situation where requiring acyclic colors outright
/// would be too strong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub blue_asym_acyclic: bool,
    pub red_asym_acyclic: bool,
    pub blue_cycle: Option<Path>,
    pub red_cycle: Option<Path>,
    pub nonempty: bool,
}

impl TwoColoredDigraph {
    pub fn new(blue: Relation, red: Relation) -> Result<Self> {
        if blue.universe() != red.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(TwoColoredDigraph {
            universe: blue.universe(),
            blue,
            red,
        })
    }

    pub fn empty(universe: Universe) -> Self {
        TwoColoredDigraph {
            universe,
            blue: Relation::empty(universe),
            red: Relation::empty(universe),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn blue(&self) -> &Relation {
        &self.blue
    }

    pub fn red(&self) -> &Relation {
        &self.red
    }

    /// The monochromatic relation: the union of the blue and red
    /// transitive closures.
    pub fn mono(&self) -> Relation {
        self.blue
            .transitive_closure()
            .union(&self.red.transitive_closure())
            .expect("colors share the universe")
    }

    /// Reports raw-color cycles and whether the asymmetric parts of the
    /// color closures are cycle-free.
    pub fn check_hypotheses(&self) -> HypothesisReport {
        let blue_asym = self.blue.transitive_closure().asym_part();
        let red_asym = self.red.transitive_closure().asym_part();
        HypothesisReport {
            blue_asym_acyclic: blue_asym.has_cycle().is_none(),
            red_asym_acyclic: red_asym.has_cycle().is_none(),
            blue_cycle: self.blue.has_cycle(),
            red_cycle: self.red.has_cycle(),
            nonempty: !self.universe.is_empty(),
        }
    }

    /// Membership in the solver's invariant family: `s` is nonempty,
    /// independent under the monochromatic relation, and every vertex
    /// red-reachable from `s` reaches `s` back monochromatically.
    pub fn is_in_family_s(&self, s: &VertexSet) -> Result<bool> {
        if s.universe() != self.universe {
            return Err(Error::UniverseMismatch);
        }
        if s.is_empty() {
            return Ok(false);
        }
        let mono = self.mono();
        if !mono.is_independent(s)? {
            return Ok(false);
        }
        let red_reach = self.red.transitive_closure().afterset(s)?;
        Ok(red_reach.is_subset(&mono.foreset(s)?))
    }

    /// The vertices that neither belong to `s` nor reach it by a
    /// monochromatic path. A solution is exactly an independent set
    /// whose absorbed complement is empty.
    pub fn absorbed_complement(&self, s: &VertexSet) -> Result<VertexSet> {
        if s.universe() != self.universe {
            return Err(Error::UniverseMismatch);
        }
        let reach = self.mono().foreset(s)?;
        Ok(s.union(&reach).complement())
    }

    /// True iff `s` is nonempty, independent under the monochromatic
    /// relation, and absorbs every other vertex monochromatically. On
    /// the empty universe no set qualifies.
    pub fn is_solution(&self, s: &VertexSet) -> Result<bool> {
        if s.universe() != self.universe {
            return Err(Error::UniverseMismatch);
        }
        if s.is_empty() {
            return Ok(false);
        }
        Ok(self.mono().is_independent(s)? && self.absorbed_complement(s)?.is_empty())
    }

    /// Kernel test for the underlying uncolored digraph: `s` is
    /// independent for the union of the colors and every outside vertex
    /// has a single edge (of either color) into `s`.
    pub fn is_kernel(&self, s: &VertexSet) -> Result<bool> {
        if s.universe() != self.universe {
            return Err(Error::UniverseMismatch);
        }
        let edges = self.blue.union(&self.red).expect("colors share the universe");
        if !edges.is_independent(s)? {
            return Ok(false);
        }
        let covered = s.union(&edges.foreset(s)?);
        Ok(covered.complement().is_empty())
    }
}

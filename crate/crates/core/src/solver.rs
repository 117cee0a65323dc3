//! The absorbing-set solver.
//!
//! Given any finite two-colored digraph with at least one vertex, the
//! solver produces an independent set that every outside vertex reaches
//! by a monochromatic path. It does so constructively:
//!
//! 1. *Seed*: the asymmetric part of the red closure is finite and
//!    cycle-free, so it has a sink `v`; the singleton `{v}` already has
//!    the invariant: whatever is red-reachable from it reaches it back.
//! 2. *Grow*: while some vertex is unabsorbed, pick among the unabsorbed
//!    ones a sink of the (restricted) asymmetric red closure, move it
//!    in, and drop the current members that had an asymmetric blue route
//!    to it. This keeps the invariant and strictly enlarges the set in
//!    the blue set order, so it terminates.
//!
//! The chain of iterates is kept in the [`SolveTrace`], and the
//! chain-level apparatus ([`Chain::s_infinity`], [`Chain::rc_relation`],
//! [`Chain::upper_bound_check`]) is exposed so the upper-bound argument
//! behind the construction can be exercised directly.

use crate::graph::TwoColoredDigraph;
use crate::relation::Relation;
use crate::universe::VertexSet;
use crate::{Error, Result};

/// A sequence of vertex sets over one graph, strictly ascending in the
/// set order of the asymmetric blue closure.
///
/// Construction validates the ordering and distinctness. Membership of
/// every set in the solver's invariant family is *not* revalidated here;
/// it holds for solver-produced chains and is what
/// [`Chain::upper_bound_check`] verifies.
#[derive(Debug, Clone)]
pub struct Chain {
    graph: TwoColoredDigraph,
    sporder: Relation,
    sets: Vec<VertexSet>,
}

/// The full run of the solver: the ascending chain of iterates and the
/// final absorbing independent set.
#[derive(Debug, Clone)]
pub struct SolveTrace {
    iterations: usize,
    chain: Chain,
    result: VertexSet,
}

impl Chain {
    /// Builds a chain over `graph`, checking that the sets live in the
    /// graph's universe and strictly ascend pairwise.
    pub fn new(graph: TwoColoredDigraph, sets: Vec<VertexSet>) -> Result<Self> {
        let sporder = graph.blue().transitive_closure().asym_part();
        for s in &sets {
            if s.universe() != graph.universe() {
                return Err(Error::UniverseMismatch);
            }
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if sets[i] == sets[j] {
                    return Err(Error::Precondition(
                        "chain members must be pairwise distinct".into(),
                    ));
                }
                if !sporder.le_set(&sets[i], &sets[j])? {
                    return Err(Error::Precondition(
                        "chain members must ascend in the blue set order".into(),
                    ));
                }
            }
        }
        Ok(Chain {
            graph,
            sporder,
            sets,
        })
    }

    pub fn graph(&self) -> &TwoColoredDigraph {
        &self.graph
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The set order the chain ascends in.
    pub fn order(&self) -> &Relation {
        &self.sporder
    }

    /// The vertices that belong to every member of the chain from some
    /// point on: `s` qualifies iff some member `S` has `s` in every
    /// member at or above `S`. For a finite chain this is the maximum
    /// element, but it is evaluated literally here; the shortcut is a
    /// test-side cross-check.
    pub fn s_infinity(&self) -> Result<VertexSet> {
        if self.sets.is_empty() {
            return Err(Error::EmptyChain);
        }
        let mut out = VertexSet::empty(self.graph.universe());
        for v in self.graph.universe().vertices() {
            let stable_from = |s: &VertexSet| -> Result<bool> {
                for u in &self.sets {
                    if self.sporder.le_set(s, u)? && !u.contains(v) {
                        return Ok(false);
                    }
                }
                Ok(true)
            };
            for s in &self.sets {
                if stable_from(s)? {
                    out.insert(v);
                    break;
                }
            }
        }
        Ok(out)
    }

    /// The successor relation used in the upper-bound argument: members
    /// of the limit set point to themselves, anything else points along
    /// the asymmetric blue closure. Pairs are restricted to the union of
    /// the chain's members.
    pub fn rc_relation(&self) -> Result<Relation> {
        if self.sets.is_empty() {
            return Err(Error::EmptyChain);
        }
        let universe = self.graph.universe();
        let sinf = self.s_infinity()?;
        let stay = Relation::diagonal(&sinf);
        let move_on = Relation::diagonal(&sinf.complement())
            .compose(&self.sporder)
            .expect("same universe");
        let full = stay.union(&move_on).expect("same universe");
        let mut support = VertexSet::empty(universe);
        for s in &self.sets {
            support = support.union(s);
        }
        full.restrict(&support)
    }

    /// Verifies that the literal limit set is a genuine upper bound:
    /// nonempty, a member of the invariant family, and above every chain
    /// member in the blue set order.
    pub fn upper_bound_check(&self) -> Result<bool> {
        if self.sets.is_empty() {
            return Err(Error::EmptyChain);
        }
        let sinf = self.s_infinity()?;
        if sinf.is_empty() || !self.graph.is_in_family_s(&sinf)? {
            return Ok(false);
        }
        for s in &self.sets {
            if !self.sporder.le_set(s, &sinf)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl SolveTrace {
    /// Number of growth steps taken after seeding.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    /// The final absorbing independent set.
    pub fn result(&self) -> &VertexSet {
        &self.result
    }
}

/// Shared precomputed closures for one solve run.
struct SolveContext<'a> {
    graph: &'a TwoColoredDigraph,
    mono: Relation,
    red_closure: Relation,
    red_sporder: Relation,
    blue_sporder: Relation,
}

impl<'a> SolveContext<'a> {
    fn new(graph: &'a TwoColoredDigraph) -> Self {
        let blue_closure = graph.blue().transitive_closure();
        let red_closure = graph.red().transitive_closure();
        let mono = blue_closure
            .union(&red_closure)
            .expect("colors share the universe");
        SolveContext {
            graph,
            blue_sporder: blue_closure.asym_part(),
            red_sporder: red_closure.asym_part(),
            mono,
            red_closure,
        }
    }

    fn absorbed_complement(&self, s: &VertexSet) -> VertexSet {
        let reach = self.mono.foreset(s).expect("same universe");
        s.union(&reach).complement()
    }

    fn in_family(&self, s: &VertexSet) -> bool {
        if s.is_empty() {
            return false;
        }
        if !self.mono.is_independent(s).expect("same universe") {
            return false;
        }
        let red_reach = self.red_closure.afterset(s).expect("same universe");
        red_reach.is_subset(&self.mono.foreset(s).expect("same universe"))
    }

    /// Lowest-index sink of the asymmetric red closure restricted to
    /// `within`: a vertex whose red successors inside `within` all reach
    /// it back.
    fn red_sink(&self, within: &VertexSet) -> Option<usize> {
        let restricted = self
            .red_sporder
            .restrict(within)
            .expect("same universe");
        within
            .iter()
            .find(|&v| restricted.successors(v).next().is_none())
    }

    fn seed(&self) -> Result<VertexSet> {
        let universe = self.graph.universe();
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let all = VertexSet::full(universe);
        let v = self
            .red_sink(&all)
            .expect("a finite cycle-free relation has a sink");
        VertexSet::singleton(universe, v)
    }

    fn displaced(&self, sm: &VertexSet, x: usize) -> VertexSet {
        let mut out = VertexSet::empty(self.graph.universe());
        for s in sm.iter() {
            if self.blue_sporder.contains(s, x) {
                out.insert(s);
            }
        }
        out
    }

    fn grow(&self, sm: &VertexSet) -> Result<VertexSet> {
        let se = self.absorbed_complement(sm);
        let x = self
            .red_sink(&se)
            .expect("the unabsorbed region is nonempty and has a red sink");
        let mut next = sm.difference(&self.displaced(sm, x));
        next.insert(x);

        // the growth facts, asserted at runtime: staying in the family,
        // strictly ascending, never repeating
        if !self.in_family(&next) {
            return Err(Error::InvariantViolated(
                "grown set left the invariant family".into(),
            ));
        }
        if !self.blue_sporder.le_set(sm, &next)? {
            return Err(Error::InvariantViolated(
                "grown set does not dominate its predecessor".into(),
            ));
        }
        if next == *sm {
            return Err(Error::InvariantViolated(
                "growth step produced no progress".into(),
            ));
        }
        Ok(next)
    }
}

/// The starting singleton: the lowest-index vertex with no outgoing
/// edge in the asymmetric part of the red closure. Such a vertex always
/// exists on a nonempty finite universe, and its singleton belongs to
/// the invariant family.
pub fn seed(g: &TwoColoredDigraph) -> Result<VertexSet> {
    SolveContext::new(g).seed()
}

/// The members of `sm` displaced when `x` joins: those with an
/// asymmetric blue route to `x`. Requires `x` to be outside `sm` and
/// unabsorbed by it.
pub fn displaced(g: &TwoColoredDigraph, sm: &VertexSet, x: usize) -> Result<VertexSet> {
    if sm.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    g.universe().check_vertex(x)?;
    let ctx = SolveContext::new(g);
    if sm.contains(x) {
        return Err(Error::Precondition(
            "the incoming vertex must lie outside the current set".into(),
        ));
    }
    if !ctx.absorbed_complement(sm).contains(x) {
        return Err(Error::Precondition(
            "the incoming vertex must be unabsorbed by the current set".into(),
        ));
    }
    Ok(ctx.displaced(sm, x))
}

/// One growth step: requires `sm` to be in the invariant family with a
/// nonempty unabsorbed region, and returns the strictly larger
/// replacement set.
pub fn grow_step(g: &TwoColoredDigraph, sm: &VertexSet) -> Result<VertexSet> {
    if sm.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    let ctx = SolveContext::new(g);
    if !ctx.in_family(sm) {
        return Err(Error::Precondition(
            "the current set must belong to the invariant family".into(),
        ));
    }
    if ctx.absorbed_complement(sm).is_empty() {
        return Err(Error::Precondition(
            "nothing to grow: every vertex is already absorbed".into(),
        ));
    }
    ctx.grow(sm)
}

/// Runs the full construction: seed, then grow until every vertex
/// outside the set reaches it monochromatically. The returned trace
/// carries the ascending chain of iterates; its result always satisfies
/// [`TwoColoredDigraph::is_solution`].
pub fn solve(g: &TwoColoredDigraph) -> Result<SolveTrace> {
    let ctx = SolveContext::new(g);
    let mut current = ctx.seed()?;
    let mut sets = vec![current.clone()];
    let budget = iteration_budget(g.universe().size());
    let mut iterations: u128 = 0;
    while !ctx.absorbed_complement(&current).is_empty() {
        if iterations >= budget {
            return Err(Error::IterationBudget);
        }
        current = ctx.grow(&current)?;
        sets.push(current.clone());
        iterations += 1;
    }
    let chain = Chain::new(g.clone(), sets)?;
    Ok(SolveTrace {
        iterations: iterations as usize,
        chain,
        result: current,
    })
}

/// Strict ascent bounds any chain by the number of distinct vertex
/// sets, so exceeding this budget proves a bug rather than a hard input.
fn iteration_budget(n: usize) -> u128 {
    if n >= 127 {
        u128::MAX
    } else {
        1u128 << n
    }
}

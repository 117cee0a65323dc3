//! Brute-force ground truth for desk-scale instances.
//!
//! Everything here deliberately avoids the bit-matrix closure and the
//! constructive solver: reachability is recomputed by plain graph
//! search and candidate sets are classified by scanning all subsets.
//! Agreement between the two routes is what the test suites certify.

use crate::graph::TwoColoredDigraph;
use crate::relation::Relation;
use crate::universe::{Universe, VertexSet};
use crate::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest universe the subset enumeration accepts.
pub const ORACLE_CAP: usize = 20;

/// Every qualifying subset of a graph's vertices, classified three ways.
/// Lists are duplicate-free and sorted by size, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub valid_solutions: Vec<VertexSet>,
    pub family_s_members: Vec<VertexSet>,
    pub kernel_sets: Vec<VertexSet>,
}

/// Reachability in at least one step, computed by per-vertex
/// breadth-first search. Extensionally equal to
/// [`Relation::transitive_closure`], by an independent route.
pub fn reachability_oracle(r: &Relation) -> Relation {
    let universe = r.universe();
    let n = universe.size();
    let mut pairs = Vec::new();
    for x in 0..n {
        let mut seen = vec![false; n];
        let mut queue: Vec<usize> = r.successors(x).collect();
        for &y in &queue {
            seen[y] = true;
        }
        while let Some(y) = queue.pop() {
            pairs.push((x, y));
            for z in r.successors(y) {
                if !seen[z] {
                    seen[z] = true;
                    queue.push(z);
                }
            }
        }
    }
    Relation::from_pairs(universe, pairs).expect("vertices are in range")
}

/// Scans all `2^n` subsets of the vertices and classifies each one as a
/// solution, an invariant-family member, and/or a kernel, using the
/// search-based reachability above.
pub fn enumerate_solutions(g: &TwoColoredDigraph) -> Result<OracleReport> {
    let universe = g.universe();
    let n = universe.size();
    if n > ORACLE_CAP {
        return Err(Error::OracleCap {
            size: n,
            limit: ORACLE_CAP,
        });
    }

    let blue_reach = reachability_oracle(g.blue());
    let red_reach = reachability_oracle(g.red());
    let mono = blue_reach.union(&red_reach).expect("same universe");
    let edges = g.blue().union(g.red()).expect("same universe");

    let mut report = OracleReport {
        valid_solutions: Vec::new(),
        family_s_members: Vec::new(),
        kernel_sets: Vec::new(),
    };

    for mask in 0u64..1 << n {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let s = VertexSet::of(universe, members.iter().copied())?;

        let independent_mono = members
            .iter()
            .all(|&x| members.iter().all(|&y| x == y || !mono.contains(x, y)));
        let absorbs = (0..n)
            .all(|x| s.contains(x) || members.iter().any(|&t| mono.contains(x, t)));
        if !members.is_empty() && independent_mono && absorbs {
            report.valid_solutions.push(s.clone());
        }

        let red_afterset_ok = (0..n).all(|v| {
            let red_reachable = members.iter().any(|&t| red_reach.contains(t, v));
            !red_reachable || members.iter().any(|&t| mono.contains(v, t))
        });
        if !members.is_empty() && independent_mono && red_afterset_ok {
            report.family_s_members.push(s.clone());
        }

        let independent_edges = members
            .iter()
            .all(|&x| members.iter().all(|&y| x == y || !edges.contains(x, y)));
        let edge_covered = (0..n)
            .all(|x| s.contains(x) || members.iter().any(|&t| edges.contains(x, t)));
        if independent_edges && edge_covered {
            report.kernel_sets.push(s);
        }
    }

    sort_canonically(&mut report.valid_solutions);
    sort_canonically(&mut report.family_s_members);
    sort_canonically(&mut report.kernel_sets);
    Ok(report)
}

fn sort_canonically(sets: &mut [VertexSet]) {
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
}

/// A seeded random graph: every ordered pair, loops included, receives
/// each color independently with the given probability, so two-colored
/// pairs do occur. Identical arguments always produce identical graphs.
pub fn random_graph(n: usize, blue_density: f64, red_density: f64, seed: u64) -> TwoColoredDigraph {
    assert!(
        (0.0..=1.0).contains(&blue_density) && (0.0..=1.0).contains(&red_density),
        "densities must lie in [0, 1]"
    );
    let universe = Universe::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blue = Vec::new();
    let mut red = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if rng.gen_bool(blue_density) {
                blue.push((x, y));
            }
            if rng.gen_bool(red_density) {
                red.push((x, y));
            }
        }
    }
    let blue = Relation::from_pairs(universe, blue).expect("vertices are in range");
    let red = Relation::from_pairs(universe, red).expect("vertices are in range");
    TwoColoredDigraph::new(blue, red).expect("same universe")
}

//! Helpers shared by the integration suites.
#![allow(dead_code)]

use ssw::{Relation, TwoColoredDigraph, Universe};

/// Runs one acceptance check and prints a single pass/fail line.
pub fn criterion(name: &str, run: impl FnOnce() -> Result<(), String>) {
    let start = std::time::Instant::now();
    match run() {
        Ok(()) => println!("[PASS] {name} ({:.1?})", start.elapsed()),
        Err(msg) => {
            println!("[FAIL] {name}: {msg}");
            panic!("{name}: {msg}");
        }
    }
}

/// Every two-colored digraph on `n` vertices: each ordered pair is
/// independently absent, blue, red, or both, giving `4^(n^2)` graphs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = TwoColoredDigraph> {
    let cells = n * n;
    assert!(2 * cells <= 63, "enumeration only works at desk scale");
    (0u64..1 << (2 * cells)).map(move |code| graph_from_code(n, code))
}

pub fn graph_from_code(n: usize, code: u64) -> TwoColoredDigraph {
    let cells = n * n;
    let universe = Universe::new(n);
    let mut blue = Vec::new();
    let mut red = Vec::new();
    for c in 0..cells {
        let pair = (c / n, c % n);
        if code >> (2 * c) & 1 == 1 {
            blue.push(pair);
        }
        if code >> (2 * c + 1) & 1 == 1 {
            red.push(pair);
        }
    }
    TwoColoredDigraph::new(
        Relation::from_pairs(universe, blue).expect("in range"),
        Relation::from_pairs(universe, red).expect("in range"),
    )
    .expect("same universe")
}

/// The seeded random-graph population used by the randomized sweeps:
/// sizes cycle through 1..=12 and densities through {0.1, 0.3, 0.6}
/// independently per color.
pub fn random_population(count: usize) -> impl Iterator<Item = TwoColoredDigraph> {
    const DENSITIES: [f64; 3] = [0.1, 0.3, 0.6];
    (0..count).map(|i| {
        let n = 1 + i % 12;
        let blue = DENSITIES[i % 3];
        let red = DENSITIES[(i / 3) % 3];
        ssw::oracle::random_graph(n, blue, red, 1000 + i as u64)
    })
}

/// The worked example: a chain whose neighbors are joined by blue edges
/// in both directions, and no red edges at all.
pub fn bidirectional_blue_chain(n: usize) -> TwoColoredDigraph {
    let universe = Universe::new(n);
    let mut blue = Vec::new();
    for i in 0..n.saturating_sub(1) {
        blue.push((i, i + 1));
        blue.push((i + 1, i));
    }
    TwoColoredDigraph::new(
        Relation::from_pairs(universe, blue).expect("in range"),
        Relation::empty(universe),
    )
    .expect("same universe")
}

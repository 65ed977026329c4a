//! Shared fixtures for the criterion benchmarks.

use chromastab::families::{generate, DPattern, FamilyParams};
use chromastab::Graph;

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Complete tripartite K(3,3,3): a dense 3-chromatic graph, the worst case
/// for the frustration branch and bound at order 9.
pub fn k333() -> Graph {
    let edges = (0..9).flat_map(|u| (u + 1..9).filter(move |v| v % 3 != u % 3).map(move |v| (u, v)));
    Graph::from_edges(9, edges).unwrap()
}

pub fn k4_subdivision() -> Graph {
    generate(&FamilyParams::D {
        lengths: [1, 2, 2, 2, 2, 1],
        pattern: DPattern::OddOpposite,
    })
    .unwrap()
}

/// A 12-vertex chain of three even cycles.
pub fn chain12() -> Graph {
    generate(&FamilyParams::E {
        cycles: vec![(4, 1), (4, 1), (6, 1)],
    })
    .unwrap()
}

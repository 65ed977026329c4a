//! Simple-cycle enumeration and the odd-cycle census.
//!
//! Cycles are enumerated by a depth-first search anchored at their minimum
//! vertex: from anchor `a` the search only visits vertices greater than `a`,
//! and a closed walk is emitted once per orientation by requiring the second
//! vertex of the path to be smaller than the last. Every simple cycle is
//! therefore produced exactly once, with no hashing.

use serde::Serialize;

use crate::graph::Graph;

/// Counts of simple cycles, possibly saturated at a cutoff.
///
/// When `saturated` is false both counts are exact and `witnesses` holds
/// every odd cycle. When the cutoff fired, `odd_count` equals the cutoff and
/// `total_count` only covers the cycles seen before stopping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCycleCensus {
    pub odd_count: usize,
    pub total_count: usize,
    pub saturated: bool,
    pub witnesses: Vec<Vec<usize>>,
}

impl OddCycleCensus {
    /// Exact odd-cycle count bucket used by the theorem scans: `Some(k)` for
    /// an exact count of `k`, `None` when the census saturated.
    pub fn exact_odd_count(&self) -> Option<usize> {
        (!self.saturated).then_some(self.odd_count)
    }
}

struct CycleSearch<'a> {
    g: &'a Graph,
    cutoff: Option<usize>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    census: OddCycleCensus,
}

impl CycleSearch<'_> {
    /// Returns false once the cutoff is reached, aborting the whole search.
    fn extend(&mut self, anchor: usize, v: usize) -> bool {
        for &w in self.g.neighbors(v) {
            if w == anchor && self.path.len() >= 3 {
                // Count each cycle once: pick the orientation whose second
                // vertex is smaller than its last.
                if self.path[1] < *self.path.last().unwrap() {
                    self.census.total_count += 1;
                    if self.path.len() % 2 == 1 {
                        self.census.odd_count += 1;
                        self.census.witnesses.push(self.path.clone());
                        if Some(self.census.odd_count) == self.cutoff {
                            self.census.saturated = true;
                            return false;
                        }
                    }
                }
            } else if w > anchor && !self.on_path[w] {
                self.on_path[w] = true;
                self.path.push(w);
                let keep_going = self.extend(anchor, w);
                self.path.pop();
                self.on_path[w] = false;
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }
}

/// Enumerates the simple cycles of `g`. With `cutoff = Some(c)` the search
/// stops as soon as `c` odd cycles have been found; `c` must be at least 1.
pub fn count_odd_cycles(g: &Graph, cutoff: Option<usize>) -> OddCycleCensus {
    if let Some(c) = cutoff {
        assert!(c >= 1, "cutoff must be at least 1");
    }
    let mut search = CycleSearch {
        g,
        cutoff,
        on_path: vec![false; g.n()],
        path: Vec::new(),
        census: OddCycleCensus {
            odd_count: 0,
            total_count: 0,
            saturated: false,
            witnesses: Vec::new(),
        },
    };
    for anchor in 0..g.n() {
        if g.degree(anchor) < 2 {
            continue;
        }
        search.on_path[anchor] = true;
        search.path.push(anchor);
        let keep_going = search.extend(anchor, anchor);
        search.path.pop();
        search.on_path[anchor] = false;
        if !keep_going {
            break;
        }
    }
    search.census
}

//! Detection of subdivisions of four small multigraph patterns inside a
//! host graph, with explicit witness embeddings.
//!
//! A subdivision embedding maps pattern vertices injectively to host
//! vertices and each pattern edge to a host path of length at least one;
//! the paths are internally disjoint from each other and from every branch
//! image, and no host edge is used twice (so a doubled pattern edge cannot
//! collapse onto a single host edge).
//!
//! The search is exhaustive backtracking: injective branch maps in
//! lexicographic order over host vertices of sufficient degree, then the
//! required paths grown one at a time in ascending-vertex order with used
//! interiors blocked. The first embedding found is returned, which makes
//! the reported witness the lexicographically smallest by branch map.

use serde::Serialize;

use crate::graph::{Edge, Graph};

/// The four patterns: two vertices with four parallel edges, the complete
/// graph K4, a triangle with two doubled edges, and a 4-cycle with two
/// opposite edges doubled.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum PatternKind {
    K2_4,
    K4,
    K3_221,
    C4_2121,
}

impl PatternKind {
    /// Fixed trial order used by [`find_any_pattern`].
    pub const ALL: [PatternKind; 4] = [
        PatternKind::K2_4,
        PatternKind::K4,
        PatternKind::K3_221,
        PatternKind::C4_2121,
    ];

    pub fn order(&self) -> usize {
        match self {
            PatternKind::K2_4 => 2,
            PatternKind::K4 => 4,
            PatternKind::K3_221 => 3,
            PatternKind::C4_2121 => 4,
        }
    }

    /// Pattern edges with multiplicity; vertex 1 of K3_221 carries both
    /// doubled pairs (degrees 3, 4, 3).
    pub fn edges(&self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::K2_4 => &[(0, 1), (0, 1), (0, 1), (0, 1)],
            PatternKind::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            PatternKind::K3_221 => &[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)],
            PatternKind::C4_2121 => &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)],
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges()
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            PatternKind::K2_4 => "K2_4",
            PatternKind::K4 => "K4",
            PatternKind::K3_221 => "K3_221",
            PatternKind::C4_2121 => "C4_2121",
        }
    }
}

/// Witness that a host graph contains a subdivision of a pattern:
/// `branch_map[p]` is the host image of pattern vertex `p`, and
/// `path_map[i]` is the host path (full vertex sequence) realizing the i-th
/// pattern edge.
#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionEmbedding {
    pub pattern: PatternKind,
    pub branch_map: Vec<usize>,
    pub path_map: Vec<Vec<usize>>,
}

impl SubdivisionEmbedding {
    /// The host subgraph formed by the embedding's paths (same vertex set
    /// as the host).
    pub fn subgraph(&self, host: &Graph) -> Graph {
        let edges = self.path_map.iter().flat_map(|path| {
            path.windows(2).map(|w| (w[0], w[1]))
        });
        Graph::from_edges(host.n(), edges).expect("embedding paths are edge-disjoint host paths")
    }

    /// Full invariant check against the host; returns a description of the
    /// first violation, if any.
    pub fn verify(&self, host: &Graph) -> Result<(), String> {
        let pattern = self.pattern;
        if self.branch_map.len() != pattern.order() {
            return Err(format!(
                "branch map has {} entries, pattern has {} vertices",
                self.branch_map.len(),
                pattern.order()
            ));
        }
        let mut sorted = self.branch_map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.branch_map.len() {
            return Err("branch map is not injective".into());
        }
        if self.path_map.len() != pattern.edges().len() {
            return Err(format!(
                "path map has {} entries, pattern has {} edges",
                self.path_map.len(),
                pattern.edges().len()
            ));
        }
        let mut used_edges = std::collections::BTreeSet::new();
        let mut used_interiors = std::collections::BTreeSet::new();
        for (i, &(pu, pv)) in pattern.edges().iter().enumerate() {
            let path = &self.path_map[i];
            if path.len() < 2 {
                return Err(format!("path {i} has length {}", path.len() as isize - 1));
            }
            if path[0] != self.branch_map[pu] || *path.last().unwrap() != self.branch_map[pv] {
                return Err(format!("path {i} does not join its branch images"));
            }
            for w in path.windows(2) {
                if !host.has_edge(w[0], w[1]) {
                    return Err(format!("path {i} uses the non-edge ({}, {})", w[0], w[1]));
                }
                if !used_edges.insert(Edge::new(w[0], w[1])) {
                    return Err(format!("host edge ({}, {}) used twice", w[0], w[1]));
                }
            }
            for &v in &path[1..path.len() - 1] {
                if self.branch_map.contains(&v) {
                    return Err(format!("path {i} passes through branch image {v}"));
                }
                if !used_interiors.insert(v) {
                    return Err(format!("interior vertex {v} shared between paths"));
                }
            }
        }
        Ok(())
    }
}

struct PathSearch<'a> {
    host: &'a Graph,
    pattern: PatternKind,
    branch_map: Vec<usize>,
    blocked: Vec<bool>,
    edge_used: Vec<bool>,
    paths: Vec<Vec<usize>>,
}

impl PathSearch<'_> {
    fn edge_idx(&self, a: usize, b: usize) -> usize {
        self.host
            .edges()
            .binary_search(&Edge::new(a, b))
            .expect("host edge")
    }

    /// Finds internally disjoint host paths for pattern edges `from_edge..`.
    fn solve(&mut self, from_edge: usize) -> bool {
        let edges = self.pattern.edges();
        if from_edge == edges.len() {
            return true;
        }
        let (pu, pv) = edges[from_edge];
        let (start, target) = (self.branch_map[pu], self.branch_map[pv]);
        let mut path = vec![start];
        self.grow(from_edge, target, &mut path)
    }

    fn grow(&mut self, edge_i: usize, target: usize, path: &mut Vec<usize>) -> bool {
        let cur = *path.last().unwrap();
        let nbrs: Vec<usize> = self.host.neighbors(cur).to_vec();
        for w in nbrs {
            let ei = self.edge_idx(cur, w);
            if self.edge_used[ei] {
                continue;
            }
            if w == target {
                self.edge_used[ei] = true;
                path.push(w);
                let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
                for &v in &interior {
                    self.blocked[v] = true;
                }
                self.paths.push(path.clone());
                if self.solve(edge_i + 1) {
                    return true;
                }
                self.paths.pop();
                for &v in &interior {
                    self.blocked[v] = false;
                }
                path.pop();
                self.edge_used[ei] = false;
                continue;
            }
            if self.blocked[w] || path.contains(&w) {
                continue;
            }
            self.edge_used[ei] = true;
            path.push(w);
            if self.grow(edge_i, target, path) {
                return true;
            }
            path.pop();
            self.edge_used[ei] = false;
        }
        false
    }
}

/// Searches for a subdivision of `pattern` in `g`. Exhaustive and intended
/// for small hosts (roughly up to a dozen vertices); no polynomial bound is
/// claimed.
pub fn find_subdivision(g: &Graph, pattern: PatternKind) -> Option<SubdivisionEmbedding> {
    let order = pattern.order();
    if g.n() < order {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..order)
        .map(|p| (0..g.n()).filter(|&v| g.degree(v) >= pattern.degree(p)).collect())
        .collect();
    let mut branch_map = vec![usize::MAX; order];
    let mut used = vec![false; g.n()];
    try_branch_maps(g, pattern, &candidates, 0, &mut branch_map, &mut used)
}

fn try_branch_maps(
    g: &Graph,
    pattern: PatternKind,
    candidates: &[Vec<usize>],
    slot: usize,
    branch_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<SubdivisionEmbedding> {
    if slot == pattern.order() {
        let mut blocked = vec![false; g.n()];
        for &v in branch_map.iter() {
            blocked[v] = true;
        }
        let mut search = PathSearch {
            host: g,
            pattern,
            branch_map: branch_map.clone(),
            blocked,
            edge_used: vec![false; g.edge_count()],
            paths: Vec::new(),
        };
        if search.solve(0) {
            return Some(SubdivisionEmbedding {
                pattern,
                branch_map: branch_map.clone(),
                path_map: search.paths,
            });
        }
        return None;
    }
    for &v in &candidates[slot] {
        if used[v] {
            continue;
        }
        branch_map[slot] = v;
        used[v] = true;
        let hit = try_branch_maps(g, pattern, candidates, slot + 1, branch_map, used);
        used[v] = false;
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Tries the four patterns in the fixed order of [`PatternKind::ALL`] and
/// returns the first subdivision found.
pub fn find_any_pattern(g: &Graph) -> Option<(PatternKind, SubdivisionEmbedding)> {
    PatternKind::ALL
        .iter()
        .find_map(|&p| find_subdivision(g, p).map(|emb| (p, emb)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, DPattern, FamilyParams};

    #[test]
    fn k4_hosts_itself() {
        let emb = find_subdivision(&Graph::complete(4), PatternKind::K4).unwrap();
        emb.verify(&Graph::complete(4)).unwrap();
        assert!(emb.path_map.iter().all(|p| p.len() == 2));
        assert_eq!(emb.branch_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn theta_hosts_k2_4() {
        let theta = generate(&FamilyParams::C { lengths: [1, 3, 2, 2] }).unwrap();
        let emb = find_subdivision(&theta, PatternKind::K2_4).unwrap();
        emb.verify(&theta).unwrap();
        // Branch vertices must be the two degree-4 vertices.
        let mut branches = emb.branch_map.clone();
        branches.sort_unstable();
        assert_eq!(branches, vec![0, 1]);
    }

    #[test]
    fn low_degree_hosts_fail_fast() {
        assert!(find_subdivision(&Graph::cycle(6), PatternKind::K2_4).is_none());
        assert!(find_any_pattern(&Graph::cycle(5)).is_none());
    }

    #[test]
    fn butterfly_has_no_pattern() {
        // Each pattern is 2-connected after subdividing, and the butterfly
        // has a cut vertex splitting every candidate; confirmed against the
        // suppression oracle in the integration suite.
        let butterfly =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(find_any_pattern(&butterfly).is_none());
    }

    #[test]
    fn k4_subdivision_member_reports_k4() {
        let d = generate(&FamilyParams::D {
            lengths: [1, 2, 2, 2, 2, 1],
            pattern: DPattern::OddOpposite,
        })
        .unwrap();
        let (kind, emb) = find_any_pattern(&d).unwrap();
        assert_eq!(kind, PatternKind::K4);
        emb.verify(&d).unwrap();
    }

    #[test]
    fn doubled_pattern_edges_use_distinct_host_paths() {
        // C4 with one diagonal: contains K3_221? Degrees are too small.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(find_subdivision(&g, PatternKind::K3_221).is_none());

        // K4 has maximum degree 3, so no K2_4 branch vertex qualifies.
        assert!(find_subdivision(&Graph::complete(4), PatternKind::K2_4).is_none());
        // K5 does contain one.
        let emb = find_subdivision(&Graph::complete(5), PatternKind::K2_4).unwrap();
        emb.verify(&Graph::complete(5)).unwrap();
    }

    #[test]
    fn embedding_subgraph_is_the_drawn_paths() {
        let theta = generate(&FamilyParams::C { lengths: [2, 2, 3, 3] }).unwrap();
        let emb = find_subdivision(&theta, PatternKind::K2_4).unwrap();
        let sub = emb.subgraph(&theta);
        let drawn: usize = emb.path_map.iter().map(|p| p.len() - 1).sum();
        assert_eq!(sub.edge_count(), drawn);
    }
}

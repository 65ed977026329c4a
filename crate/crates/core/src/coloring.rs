//! Exact k-colorability and chromatic number.
//!
//! The solver is a complete backtracking search: vertices are colored in
//! descending-degree order with forward checking on the remaining color
//! domains, colors are symmetry-broken by pre-assigning a greedily grown
//! clique and by never opening more than one fresh color at a time. All tie
//! breaks are by lowest vertex index, so returned colorings are reproducible.

use crate::graph::Graph;

/// A proper coloring; `colors[v]` is the color of vertex `v` and `k` is the
/// number of colors actually used (`max color + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    /// Checks properness against `g`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges().iter().all(|e| self.colors[e.u()] != self.colors[e.v()])
            && self.colors.iter().all(|&c| c < self.k)
    }
}

/// Grows a clique greedily: start from a maximum-degree vertex, repeatedly
/// add the highest-degree vertex adjacent to everything chosen so far.
/// Deterministic via lowest-index tie breaks.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let by_degree = |v: &usize| std::cmp::Reverse((g.degree(*v), std::cmp::Reverse(*v)));
    let start = (0..n).min_by_key(by_degree).unwrap();
    let mut clique = vec![start];
    loop {
        let next = (0..n)
            .filter(|&v| !clique.contains(&v) && clique.iter().all(|&c| g.has_edge(v, c)))
            .min_by_key(by_degree);
        match next {
            Some(v) => clique.push(v),
            None => break,
        }
    }
    clique.sort_unstable();
    clique
}

/// Greedy coloring in descending-degree order; an upper bound for chi.
fn greedy_coloring_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for &v in &order {
        let mut taken = 0u64;
        for &w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                taken |= 1 << colors[w];
            }
        }
        let c = (0..).find(|&c| taken & 1 << c == 0).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

struct ColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    colors: Vec<usize>,
    /// Bitmask of colors still allowed per vertex.
    domain: Vec<u64>,
    /// Highest color index opened so far; fresh colors open one at a time.
    max_used: usize,
}

impl ColorSearch<'_> {
    fn solve(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        if self.colors[v] != usize::MAX {
            return self.solve(depth + 1);
        }
        let cap = self.k.min(self.max_used + 2);
        for c in 0..cap {
            if self.domain[v] & 1 << c == 0 {
                continue;
            }
            let saved_max = self.max_used;
            self.max_used = self.max_used.max(c);
            self.colors[v] = c;
            // Forward checking: prune c from uncolored neighbors, fail on a
            // wiped-out domain.
            let mut touched = Vec::new();
            let mut dead_end = false;
            for &w in self.g.neighbors(v) {
                if self.colors[w] == usize::MAX && self.domain[w] & 1 << c != 0 {
                    self.domain[w] &= !(1 << c);
                    touched.push(w);
                    if self.domain[w] == 0 {
                        dead_end = true;
                        break;
                    }
                }
            }
            if !dead_end && self.solve(depth + 1) {
                return true;
            }
            for w in touched {
                self.domain[w] |= 1 << c;
            }
            self.colors[v] = usize::MAX;
            self.max_used = saved_max;
        }
        false
    }
}

/// Complete search for a proper k-coloring; `None` means none exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    assert!(k >= 1, "k must be at least 1");
    let n = g.n();
    if n == 0 {
        return Some(Coloring { colors: Vec::new(), k: 0 });
    }
    if g.edge_count() == 0 {
        return Some(Coloring { colors: vec![0; n], k: 1 });
    }
    if k == 1 {
        return None;
    }
    if k >= n {
        // A color per vertex always works.
        return Some(Coloring { colors: (0..n).collect(), k: n });
    }
    assert!(k < 64, "color domains are 64-bit; graphs this large are out of scope");

    let clique = greedy_clique(g);
    if clique.len() > k {
        return None;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let full: u64 = (1u64 << k) - 1;
    let mut search = ColorSearch {
        g,
        k,
        order,
        colors: vec![usize::MAX; n],
        domain: vec![full; n],
        max_used: 0,
    };

    // Pre-color the clique: its vertices must all differ, so fixing them to
    // 0..clique.len()-1 loses nothing and kills color permutations.
    for (c, &v) in clique.iter().enumerate() {
        search.colors[v] = c;
        search.max_used = search.max_used.max(c);
        for &w in g.neighbors(v) {
            if search.colors[w] == usize::MAX {
                search.domain[w] &= !(1 << c);
                if search.domain[w] == 0 {
                    return None;
                }
            }
        }
    }

    if !search.solve(0) {
        return None;
    }
    let colors = search.colors;
    let k_used = colors.iter().copied().max().unwrap_or(0) + 1;
    Some(Coloring { colors, k: k_used })
}

/// Exact chromatic number. The empty graph has chi = 0 and any edgeless
/// graph on at least one vertex has chi = 1.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lower = greedy_clique(g).len().max(2);
    let upper = greedy_coloring_bound(g);
    for k in lower..upper {
        if is_k_colorable(g, k).is_some() {
            return k;
        }
    }
    upper
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_needs_three_colors() {
        assert!(is_k_colorable(&Graph::cycle(5), 2).is_none());
        let c = is_k_colorable(&Graph::cycle(5), 3).unwrap();
        assert!(c.is_proper(&Graph::cycle(5)));
        assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
    }

    #[test]
    fn complete_graphs() {
        assert!(is_k_colorable(&Graph::complete(4), 3).is_none());
        assert_eq!(chromatic_number(&Graph::complete(4)), 4);
        assert_eq!(chromatic_number(&Graph::complete(7)), 7);
    }

    #[test]
    fn conventions_for_tiny_graphs() {
        assert_eq!(chromatic_number(&Graph::new(0)), 0);
        assert_eq!(chromatic_number(&Graph::new(5)), 1);
        assert_eq!(chromatic_number(&Graph::path(2)), 2);
    }

    #[test]
    fn bipartite_iff_two_colorable() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6)]).unwrap();
        assert_eq!(chromatic_number(&g), 2);
        assert!(crate::graph::is_bipartite(&g).is_bipartite());
    }

    #[test]
    fn colorings_are_deterministic() {
        let g = Graph::cycle(7);
        let a = is_k_colorable(&g, 3).unwrap();
        let b = is_k_colorable(&g, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        // Cross-checked against brute-force 3-coloring enumeration in the
        // integration suite.
        let petersen = crate::graph::petersen_graph();
        assert_eq!(chromatic_number(&petersen), 3);
    }

    #[test]
    fn wheel_graphs() {
        // Odd wheel W5: hub forces a fourth color.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::from_edges(6, edges).unwrap();
        assert_eq!(chromatic_number(&w5), 4);
    }
}

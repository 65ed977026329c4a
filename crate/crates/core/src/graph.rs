//! Simple undirected graphs on vertices `0..n`, plus the bipartiteness
//! primitive everything else leans on.
//!
//! Graphs are immutable after construction: every "mutation" returns a new
//! value, so sharing across threads is free.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop, which is always
    /// a caller bug; fallible construction paths validate before calling.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "self-loop at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// The endpoint that is not `w`; panics if `w` is not an endpoint.
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            assert_eq!(w, self.v, "vertex {w} is not an endpoint of {self}");
            self.u
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(serializer)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Vertices are `0..n`. Isolated vertices are allowed and preserved by all
/// operations; the analysis entry points that assume isolate-free inputs say
/// so in their docs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an explicit edge list, rejecting self-loops,
    /// out-of-range endpoints, and repeated pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for w in [a, b] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        Ok(Graph::from_sorted_edges(n, list))
    }

    /// Internal constructor; `edges` must be sorted, deduplicated, in range.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn cycle(len: usize) -> Graph {
        assert!(len >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Disjoint union; the right operand's vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift)));
        Graph::from_edges(self.n + other.n, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b || a >= self.n || b >= self.n {
            return false;
        }
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Same vertex set, edge set minus `removed`. Errors if any requested
    /// edge is absent; vertices are never renumbered.
    pub fn delete_edges(&self, removed: &[Edge]) -> Result<Graph, GraphError> {
        for e in removed {
            if !self.has_edge(e.u, e.v) {
                return Err(GraphError::NotAnEdge(*e));
            }
        }
        Ok(self.delete_edges_unchecked(removed))
    }

    /// Hot-path variant of [`Graph::delete_edges`]: absent edges are ignored.
    pub(crate) fn delete_edges_unchecked(&self, removed: &[Edge]) -> Graph {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        Graph::from_sorted_edges(self.n, edges)
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.delete_edges(std::slice::from_ref(&e))
    }

    /// True when every vertex is reachable from vertex 0 (vacuously true for
    /// the empty graph).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Drops isolated vertices, renumbering the rest in ascending order.
    /// Returns the stripped graph and how many vertices were removed.
    pub fn without_isolates(&self) -> (Graph, usize) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        let dropped = self.n - keep.len();
        if dropped == 0 {
            return (self.clone(), 0);
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self.edges.iter().map(|e| (relabel[e.u], relabel[e.v]));
        (Graph::from_edges(keep.len(), edges).unwrap(), dropped)
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| (perm[e.u], perm[e.v]));
        Graph::from_edges(self.n, edges).unwrap()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.edges.len())?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Outcome of the 2-coloring check: either a proper 2-part assignment
/// covering every non-isolated vertex, or one odd simple cycle as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite { parts: [Vec<usize>; 2] },
    OddCycle { cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// BFS 2-coloring. Component roots (smallest vertex first) go into part 0,
/// so the returned partition is deterministic.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if side[root] != u8::MAX || g.degree(root) == 0 {
            continue;
        }
        side[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    // Scan edges in sorted order so the first conflict (and hence the
    // witness cycle) is deterministic.
    for e in g.edges() {
        if side[e.u()] == side[e.v()] {
            return Bipartiteness::OddCycle {
                cycle: tree_cycle(e.u(), e.v(), &parent, &depth),
            };
        }
    }
    let mut parts = [Vec::new(), Vec::new()];
    for v in 0..n {
        if side[v] != u8::MAX {
            parts[side[v] as usize].push(v);
        }
    }
    Bipartiteness::Bipartite { parts }
}

/// Fast path used by the (3,2)-critical recognizer: bipartiteness of the
/// graph with up to two edges skipped, no allocation of a new graph.
pub(crate) fn is_bipartite_skipping(g: &Graph, skip: &[Edge]) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if skip.iter().any(|e| *e == Edge::new(v, w)) {
                    continue;
                }
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Closes the BFS tree paths from `u` and `v` to their lowest common
/// ancestor into a simple cycle; with `depth[u] == depth[v] (mod 2)` the
/// result is an odd cycle containing the edge `uv`.
fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // left ends at the LCA, right ends one short of it.
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Parses the plain edge-list text format: first line `n m`, then one
/// `u v` pair per line.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(EdgeListError::Empty)?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .ok_or_else(|| EdgeListError::BadHeader(header.to_string()))?
        .parse()
        .map_err(|_| EdgeListError::BadHeader(header.to_string()))?;
    let m: usize = it
        .next()
        .ok_or_else(|| EdgeListError::BadHeader(header.to_string()))?
        .parse()
        .map_err(|_| EdgeListError::BadHeader(header.to_string()))?;
    if it.next().is_some() {
        return Err(EdgeListError::BadHeader(header.to_string()));
    }
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize, EdgeListError> {
            tok.ok_or(EdgeListError::BadEdgeLine { line: lineno + 1 })?
                .parse()
                .map_err(|_| EdgeListError::BadEdgeLine { line: lineno + 1 })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(EdgeListError::BadEdgeLine { line: lineno + 1 });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges).map_err(EdgeListError::Graph)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("empty edge-list input")]
    Empty,
    #[error("bad header line {0:?}, expected \"n m\"")]
    BadHeader(String),
    #[error("bad edge line {line}, expected \"u v\"")]
    BadEdgeLine { line: usize },
    #[error("header declared {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(GraphError),
}

#[cfg(test)]
pub(crate) fn petersen_graph() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

#[cfg(test)]
pub(crate) fn assert_cycle_in(g: &Graph, cycle: &[usize]) {
    assert!(cycle.len() >= 3);
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), cycle.len(), "cycle repeats a vertex");
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        assert!(g.has_edge(a, b), "missing edge ({a}, {b})");
    }
}

//! The chromatic edge-stability number es(G): the minimum number of edges
//! whose removal lowers the chromatic number by exactly one, together with
//! criticality classification and the fast (3,2)-critical recognizer.
//!
//! Dispatch by chromatic number:
//! - chi = 2: removing anything less than all edges leaves chi = 2, so
//!   es = |E| with the full edge set as witness.
//! - chi = 3: es equals the bipartite edge frustration, solved by branch and
//!   bound on odd cycles.
//! - chi >= 4: breadth-first search over edge subsets by increasing
//!   cardinality, first success wins.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{chromatic_number, is_k_colorable};
use crate::cycles::{count_odd_cycles, OddCycleCensus};
use crate::graph::{is_bipartite, is_bipartite_skipping, Edge, Graph};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StabilityError {
    #[error("edge stability is undefined for graphs with chromatic number {0} (need chi >= 2)")]
    UndefinedForChi(usize),
    #[error("criticality needs at least one edge")]
    NoEdges,
}

/// Analysis record for one graph: chromatic number, edge stability with a
/// minimum witness set, criticality, and the odd-cycle census (cutoff 5).
///
/// `es` and `witness_set` are `None` exactly when chi <= 1, where the
/// invariant is undefined.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalityRecord {
    pub chi: usize,
    pub es: Option<usize>,
    pub witness_set: Option<Vec<Edge>>,
    pub is_critical: bool,
    pub k_l: Option<(usize, usize)>,
    pub odd_cycles: OddCycleCensus,
}

/// Cutoff used for the census inside records and theorem scans: the theorems
/// only distinguish "at most four" from "five or more" odd cycles.
pub const CENSUS_CUTOFF: usize = 5;

/// Minimum number of edges whose removal makes `g` bipartite, with one
/// optimal witness set (sorted). Equals es(G) whenever chi(G) = 3.
///
/// Branch and bound: branch on deleting each edge of a shortest odd cycle,
/// bound with a greedy packing of edge-disjoint odd cycles, start from a
/// deterministic local-search bipartition.
pub fn bipartite_edge_frustration(g: &Graph) -> (usize, Vec<Edge>) {
    if is_bipartite(g).is_bipartite() {
        return (0, Vec::new());
    }
    let mut best = initial_bipartition_witness(g);
    let mut deleted = vec![false; g.edge_count()];
    branch_frustration(g, &mut deleted, 0, &mut Vec::new(), &mut best);
    best.1.sort_unstable();
    (best.0, best.1)
}

/// Greedy 2-partition improved by single-vertex flips; the monochromatic
/// edges form a valid (not necessarily optimal) deletion set.
fn initial_bipartition_witness(g: &Graph) -> (usize, Vec<Edge>) {
    let n = g.n();
    let mut side = vec![0u8; n];
    for v in 0..n {
        let same: usize = g.neighbors(v).iter().filter(|&&w| w < v && side[w] == 0).count();
        let assigned: usize = g.neighbors(v).iter().filter(|&&w| w < v).count();
        if same * 2 > assigned {
            side[v] = 1;
        }
    }
    loop {
        let mut improved = false;
        for v in 0..n {
            let same: isize = g
                .neighbors(v)
                .iter()
                .filter(|&&w| side[w] == side[v])
                .count() as isize;
            let other = g.degree(v) as isize - same;
            if same > other {
                side[v] ^= 1;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    let witness: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| side[e.u()] == side[e.v()])
        .collect();
    (witness.len(), witness)
}

fn branch_frustration(
    g: &Graph,
    deleted: &mut Vec<bool>,
    count: usize,
    chosen: &mut Vec<usize>,
    best: &mut (usize, Vec<Edge>),
) {
    let cycle = match shortest_odd_cycle_edges(g, deleted) {
        Some(c) => c,
        None => {
            if count < best.0 {
                *best = (count, chosen.iter().map(|&i| g.edges()[i]).collect());
            }
            return;
        }
    };
    if count + packing_lower_bound(g, deleted) >= best.0 {
        return;
    }
    for idx in cycle {
        deleted[idx] = true;
        chosen.push(idx);
        branch_frustration(g, deleted, count + 1, chosen, best);
        chosen.pop();
        deleted[idx] = false;
    }
}

/// Greedy count of edge-disjoint odd cycles; each needs its own deletion.
fn packing_lower_bound(g: &Graph, deleted: &[bool]) -> usize {
    let mut mask = deleted.to_vec();
    let mut packed = 0;
    while let Some(cycle) = shortest_odd_cycle_edges(g, &mask) {
        packed += 1;
        for idx in cycle {
            mask[idx] = true;
        }
    }
    packed
}

/// Edge indices of a shortest odd cycle in `g` minus the deleted edges, or
/// `None` when that graph is bipartite. BFS from every vertex; the closing
/// tree paths are trimmed at their lowest common ancestor, so the result is
/// a simple odd cycle.
fn shortest_odd_cycle_edges(g: &Graph, deleted: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let edge_index = |a: usize, b: usize| -> usize {
        g.edges().binary_search(&Edge::new(a, b)).expect("edge exists")
    };
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            // Cheap cap: nodes deeper than the best known cycle cannot help.
            if let Some(b) = &best {
                if dist[v] * 2 + 1 >= b.len() {
                    continue;
                }
            }
            for &w in g.neighbors(v) {
                if deleted[edge_index(v, w)] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if dist[w] == dist[v] && v < w {
                    // Same-level edge: odd closed walk; trim to the LCA.
                    let cycle = lca_cycle(v, w, &parent, &dist);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        let idxs = cycle_edge_indices(g, &cycle);
                        best = Some(idxs);
                        if cycle.len() == 3 {
                            return best;
                        }
                    }
                }
            }
        }
    }
    best
}

fn lca_cycle(u: usize, v: usize, parent: &[usize], dist: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    debug_assert_eq!(dist[a], dist[b]);
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

fn cycle_edge_indices(g: &Graph, cycle: &[usize]) -> Vec<usize> {
    (0..cycle.len())
        .map(|i| {
            let e = Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]);
            g.edges().binary_search(&e).expect("cycle edge exists")
        })
        .collect()
}

/// es(G): the minimum size of an edge set F with chi(G - F) = chi(G) - 1,
/// plus one such F (sorted). Errors when chi(G) <= 1.
pub fn edge_stability(g: &Graph) -> Result<(usize, Vec<Edge>), StabilityError> {
    let chi = chromatic_number(g);
    edge_stability_with_chi(g, chi)
}

pub(crate) fn edge_stability_with_chi(
    g: &Graph,
    chi: usize,
) -> Result<(usize, Vec<Edge>), StabilityError> {
    match chi {
        0 | 1 => Err(StabilityError::UndefinedForChi(chi)),
        2 => Ok((g.edge_count(), g.edges().to_vec())),
        3 => Ok(bipartite_edge_frustration(g)),
        _ => Ok(subset_search_es(g, chi)),
    }
}

/// Exhaustive search for chi >= 4: edge subsets by increasing cardinality,
/// subsets of each size in colex order over edges sorted by descending
/// degree sum. The first subset whose removal is (chi-1)-colorable wins.
fn subset_search_es(g: &Graph, chi: usize) -> (usize, Vec<Edge>) {
    let mut order: Vec<Edge> = g.edges().to_vec();
    order.sort_by_key(|e| {
        (
            std::cmp::Reverse(g.degree(e.u()) + g.degree(e.v())),
            e.endpoints(),
        )
    });
    let m = order.len();
    for size in 1..=m {
        let mut indices: Vec<usize> = (0..size).collect();
        loop {
            let subset: Vec<Edge> = indices.iter().map(|&i| order[i]).collect();
            let reduced = g.delete_edges_unchecked(&subset);
            if is_k_colorable(&reduced, chi - 1).is_some() {
                let mut witness = subset;
                witness.sort_unstable();
                return (size, witness);
            }
            if !next_colex(&mut indices, m) {
                break;
            }
        }
    }
    unreachable!("removing all edges always drops the chromatic number below chi");
}

/// Advances a sorted index tuple to its colex successor; false when done.
fn next_colex(indices: &mut [usize], m: usize) -> bool {
    let k = indices.len();
    for i in 0..k {
        let cap = if i + 1 < k { indices[i + 1] } else { m };
        if indices[i] + 1 < cap {
            indices[i] += 1;
            for (j, slot) in indices.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// True when es(G - e) < es(G) for every edge e. The comparison follows the
/// definition literally: each side is the edge stability of its own graph,
/// even when chi(G - e) differs from chi(G). An edge removal that leaves a
/// graph with chi <= 1 (undefined es) cannot witness a strict decrease.
pub fn is_edge_stability_critical(g: &Graph) -> Result<bool, StabilityError> {
    let chi = chromatic_number(g);
    if chi <= 1 {
        return Err(StabilityError::UndefinedForChi(chi));
    }
    if g.edge_count() == 0 {
        return Err(StabilityError::NoEdges);
    }
    let (es, _) = edge_stability_with_chi(g, chi)?;
    Ok(is_critical_given_es(g, es))
}

pub(crate) fn is_critical_given_es(g: &Graph, es: usize) -> bool {
    if es <= 1 {
        // es is always at least 1, so a strict decrease is impossible.
        return false;
    }
    for &e in g.edges() {
        let reduced = g.delete_edges_unchecked(&[e]);
        let chi_reduced = chromatic_number(&reduced);
        if chi_reduced <= 1 {
            return false;
        }
        let (es_reduced, _) =
            edge_stability_with_chi(&reduced, chi_reduced).expect("chi >= 2 checked");
        if es_reduced >= es {
            return false;
        }
    }
    true
}

/// `Some((chi, es))` when `g` is edge-stability critical, `None` otherwise.
pub fn classify_critical(g: &Graph) -> Result<Option<(usize, usize)>, StabilityError> {
    let chi = chromatic_number(g);
    if chi <= 1 {
        return Err(StabilityError::UndefinedForChi(chi));
    }
    if g.edge_count() == 0 {
        return Err(StabilityError::NoEdges);
    }
    let (es, _) = edge_stability_with_chi(g, chi)?;
    Ok(is_critical_given_es(g, es).then_some((chi, es)))
}

/// Fast (3,2)-critical recognizer. Checks, in order of cost:
/// (1) G - e is non-bipartite for every edge e;
/// (2) for every edge e some second edge f makes G - {e,f} bipartite;
/// (3) chi(G) = 3, confirmed by the exact solver.
///
/// Conditions (1) and (2) only use 2-coloring passes; (3) is required for
/// correctness (K4 passes the first two but has chi = 4). Isolated vertices
/// are ignored throughout.
pub fn recognize_32_critical_fast(g: &Graph) -> bool {
    if g.edge_count() < 2 {
        return false;
    }
    for &e in g.edges() {
        if is_bipartite_skipping(g, &[e]) {
            return false;
        }
    }
    for &e in g.edges() {
        let mut found = false;
        for &f in g.edges() {
            if f != e && is_bipartite_skipping(g, &[e, f]) {
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    chromatic_number(g) == 3
}

/// Full analysis record for `g` (census cutoff [`CENSUS_CUTOFF`]).
pub fn analyze(g: &Graph) -> CriticalityRecord {
    let chi = chromatic_number(g);
    let odd_cycles = count_odd_cycles(g, Some(CENSUS_CUTOFF));
    if chi <= 1 || g.edge_count() == 0 {
        return CriticalityRecord {
            chi,
            es: None,
            witness_set: None,
            is_critical: false,
            k_l: None,
            odd_cycles,
        };
    }
    let (es, witness) = edge_stability_with_chi(g, chi).expect("chi >= 2");
    let is_critical = is_critical_given_es(g, es);
    CriticalityRecord {
        chi,
        es: Some(es),
        witness_set: Some(witness),
        is_critical,
        k_l: is_critical.then_some((chi, es)),
        odd_cycles,
    }
}

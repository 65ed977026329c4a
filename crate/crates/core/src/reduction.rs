//! The clique-gluing gadget: attach a k-clique to a connected graph by
//! identifying one clique vertex with a chosen vertex u, written G_u |x| K_k.
//!
//! The point of the construction: G is k-chromatic and critical for the
//! chromatic number exactly when the gadget is (k,2)-critical, which reduces
//! chromatic criticality to (k,2)-criticality recognition in polynomial
//! time. `verify_reduction` evaluates both sides independently (the right
//! side by the brute-force criticality classifier) and reports whether they
//! agree; a disagreement would mean an implementation bug.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{chromatic_number, is_k_colorable};
use crate::graph::Graph;
use crate::stability::classify_critical;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("glue vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("clique order {0} too small, the construction needs k >= 3")]
    KTooSmall(usize),
    #[error("the construction is defined for connected graphs")]
    Disconnected,
}

/// Outcome of checking the reduction equivalence on one instance. The
/// gadget serializes as its graph6 string.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionResult {
    #[serde(serialize_with = "as_graph6")]
    pub gadget: Graph,
    pub glued_vertex: usize,
    pub clique_vertices: Vec<usize>,
    /// G is k-chromatic and critical for the chromatic number.
    pub lhs: bool,
    /// The gadget is (k,2)-critical.
    pub rhs: bool,
    pub equivalent: bool,
}

fn as_graph6<S: serde::Serializer>(g: &Graph, serializer: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize as _;
    crate::graph6::write_graph6(g)
        .map_err(serde::ser::Error::custom)?
        .serialize(serializer)
}

/// Builds G_u |x| K_k: the k-1 fresh clique vertices take indices
/// g.n() .. g.n()+k-2, and together with `u` they induce a k-clique. The
/// original graph stays an induced subgraph on its own labels.
pub fn bowtie(g: &Graph, u: usize, k: usize) -> Result<Graph, ReductionError> {
    if u >= g.n() {
        return Err(ReductionError::VertexOutOfRange { vertex: u, order: g.n() });
    }
    if k < 3 {
        return Err(ReductionError::KTooSmall(k));
    }
    if !g.is_connected() {
        return Err(ReductionError::Disconnected);
    }
    let n = g.n();
    let clique: Vec<usize> = std::iter::once(u).chain(n..n + k - 1).collect();
    let new_edges = clique
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| clique[i + 1..].iter().map(move |&b| (a, b)));
    let edges = g.edges().iter().map(|e| e.endpoints()).chain(new_edges);
    Ok(Graph::from_edges(n + k - 1, edges).expect("gadget edges are valid"))
}

/// True when chi(g) = k and deleting any single edge drops the chromatic
/// number to k-1. Intended for graphs with at least one edge and no
/// isolated vertices, where this matches criticality for the chromatic
/// number.
pub fn is_chromatic_critical(g: &Graph, k: usize) -> bool {
    if chromatic_number(g) != k {
        return false;
    }
    g.edges().iter().all(|&e| {
        let reduced = g.delete_edges_unchecked(&[e]);
        is_k_colorable(&reduced, k - 1).is_some()
    })
}

/// Evaluates both sides of the reduction equivalence for one instance.
pub fn verify_reduction(g: &Graph, u: usize, k: usize) -> Result<ReductionResult, ReductionError> {
    let gadget = bowtie(g, u, k)?;
    let clique_vertices: Vec<usize> = std::iter::once(u).chain(g.n()..g.n() + k - 1).collect();
    let lhs = is_chromatic_critical(g, k);
    let rhs = classify_critical(&gadget).expect("gadget has a clique, chi >= 3") == Some((k, 2));
    Ok(ReductionResult {
        gadget,
        glued_vertex: u,
        clique_vertices,
        lhs,
        rhs,
        equivalent: lhs == rhs,
    })
}

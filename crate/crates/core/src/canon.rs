//! Brute-force canonical labeling for small graphs.
//!
//! The canonical form of a graph is the lexicographically smallest adjacency
//! bit-string over all vertex relabelings, read in the same column-major
//! upper-triangle order graph6 uses. Two graphs get the same string exactly
//! when they are isomorphic, and the string itself is a valid graph6 value.
//!
//! The minimum is found level by level: a frontier of partial labelings is
//! kept, and at each slot only the candidates realizing the smallest next
//! column survive. The frontier width is bounded by the automorphism count,
//! which stays tiny at this order budget; interchangeable twin vertices are
//! collapsed so that highly symmetric graphs (cliques, blow-ups) do not
//! inflate it.

use thiserror::Error;

use crate::graph::Graph;


/// Orders beyond this are refused; the search is factorial in the worst case.
pub const MAX_CANON_ORDER: usize = 10;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error(
        "order {0} exceeds the brute-force canonicalization budget of {MAX_CANON_ORDER}; \
         use an external canonicalizer (e.g. nauty's labelg) for larger graphs"
    )]
    OrderBeyondBudget(usize),
}

/// Canonical form as a graph6 string: equal for two graphs iff they are
/// isomorphic. Only defined for orders up to [`MAX_CANON_ORDER`].
pub fn canonical_form(g: &Graph) -> Result<String, CanonError> {
    let n = g.n();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderBeyondBudget(n));
    }
    let adj = adjacency_masks(g);
    Ok(canonical_g6_from_masks(n, &adj))
}

/// The canonically relabeled graph itself.
pub fn canonical_copy(g: &Graph) -> Result<Graph, CanonError> {
    let n = g.n();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderBeyondBudget(n));
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let adj = adjacency_masks(g);
    let order = minimal_order(n, &adj);
    let mut relabel = vec![0usize; n];
    for (slot, &v) in order[..n].iter().enumerate() {
        relabel[v as usize] = slot;
    }
    Ok(g.relabel(&relabel))
}

fn adjacency_masks(g: &Graph) -> Vec<u16> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect()
}

/// Mask-level entry point used by the census enumerator, where building a
/// full Graph per candidate would dominate the runtime. `adj[v]` is the
/// neighbor bitmask of `v`; the caller guarantees n <= [`MAX_CANON_ORDER`].
pub(crate) fn canonical_g6_from_masks(n: usize, adj: &[u16]) -> String {
    debug_assert!(n <= MAX_CANON_ORDER);
    let mut out = vec![63 + n as u8];
    if n >= 2 {
        let order = minimal_order(n, adj);
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                let bit = adj[order[u] as usize] >> order[v] & 1;
                acc = (acc << 1) | bit as u8;
                filled += 1;
                if filled == 6 {
                    out.push(63 + acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(63 + (acc << (6 - filled)));
        }
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[derive(Clone, Copy)]
struct Partial {
    perm: [u8; MAX_CANON_ORDER],
    used: u16,
}

/// The vertex order realizing the lexicographically smallest adjacency
/// bit-string, found by the frontier search described in the module docs.
fn minimal_order(n: usize, adj: &[u16]) -> [u8; MAX_CANON_ORDER] {
    debug_assert!((2..=MAX_CANON_ORDER).contains(&n));

    // Twin classes: u and v are twins when swapping them is an automorphism,
    // i.e. their neighborhoods agree outside {u, v}.
    let mut twin = [usize::MAX; MAX_CANON_ORDER];
    for u in 0..n {
        if twin[u] != usize::MAX {
            continue;
        }
        twin[u] = u;
        for v in u + 1..n {
            if twin[v] == usize::MAX && adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                twin[v] = u;
            }
        }
    }

    // Slot 0 carries no bits, so every twin class representative ties.
    let mut frontier: Vec<Partial> = Vec::with_capacity(n);
    for (v, &class) in twin.iter().enumerate().take(n) {
        if class == v {
            let mut perm = [0u8; MAX_CANON_ORDER];
            perm[0] = v as u8;
            frontier.push(Partial { perm, used: 1 << v });
        }
    }

    let mut next: Vec<Partial> = Vec::new();
    for slot in 1..n {
        let mut best_col = u16::MAX;
        next.clear();
        for partial in &frontier {
            let mut tried: u16 = 0;
            for cand in 0..n {
                if partial.used & 1 << cand != 0 || tried & 1 << twin[cand] != 0 {
                    continue;
                }
                tried |= 1 << twin[cand];
                // Column bits: adjacency of `cand` to the placed vertices,
                // earliest slot most significant.
                let mut col = 0u16;
                for &p in &partial.perm[..slot] {
                    col = col << 1 | (adj[cand] >> p & 1);
                }
                if col > best_col {
                    continue;
                }
                if col < best_col {
                    best_col = col;
                    next.clear();
                }
                let mut ext = *partial;
                ext.perm[slot] = cand as u8;
                ext.used |= 1 << cand;
                next.push(ext);
            }
        }
        std::mem::swap(&mut frontier, &mut next);
    }

    // All survivors realize the same minimal bit-string; take the first.
    frontier[0].perm
}

//! Minimal spanning k-arc-connected subdigraphs.
//!
//! Greedy deletion in descending arc id order. A kept arc stays necessary
//! as later deletions only shrink the digraph, so one pass ends minimal, and
//! a minimally k-arc-connected digraph has at most `2k(n-1)` arcs.

use crate::connectivity::{arc_connectivity, is_k_arc_connected};
use crate::digraph::{ArcSet, Digraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsifyResult {
    /// Ids in the input digraph.
    pub kept: ArcSet,
    pub arc_count: usize,
    pub k: usize,
}

impl SparsifyResult {
    /// `2k(n-1)`.
    pub fn bound(&self, n: usize) -> usize {
        2 * self.k * (n - 1)
    }
}

pub fn dalmazzo_sparsify(digraph: &Digraph, k: usize) -> Result<SparsifyResult> {
    if k == 0 {
        return Err(Error::InvalidK {
            k,
            reason: "sparsification needs k >= 1",
        });
    }
    if !is_k_arc_connected(digraph, k)? {
        let lambda = arc_connectivity(digraph)?.value;
        return Err(Error::NotKArcConnected { lambda, k });
    }
    let mut kept = digraph.all_arcs();
    for arc in digraph.arcs().iter().rev() {
        kept.remove(arc.id);
        if !is_k_arc_connected(&digraph.restrict(&kept)?, k)? {
            kept.insert(arc.id);
        }
    }
    Ok(SparsifyResult {
        arc_count: kept.len(),
        kept,
        k,
    })
}

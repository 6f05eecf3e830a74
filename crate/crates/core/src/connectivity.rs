//! Global arc-connectivity and in-tight sets.
//!
//! `λ(D)` is the minimum in-degree over nonempty proper vertex subsets.
//! Every such subset either misses the root (vertex 0) and contains some
//! `v`, or contains the root and misses some `v`, so `λ` is the minimum of
//! the `2(n-1)` flows `root→v` and `v→root`.

use crate::digraph::{Arc, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;

const ROOT: usize = 0;

/// A nonempty proper vertex subset with its boundary counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub side: VertexSet,
    pub in_degree: usize,
    pub out_degree: usize,
}

impl Cut {
    pub fn of(digraph: &Digraph, side: VertexSet) -> Self {
        Cut {
            in_degree: digraph.in_degree(&side),
            out_degree: digraph.out_degree(&side),
            side,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda {
    pub value: usize,
    /// A cut with `in_degree == value`.
    pub witness: Cut,
}

/// Which flow produced the current best cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Probe {
    FromRoot(usize),
    ToRoot(usize),
}

/// Computes `λ(D)` and a witness cut.
///
/// Among cuts of equal value the witness comes from the smallest probe
/// vertex, trying `root→v` before `v→root`, and is the minimal sink side of
/// that flow.
pub fn arc_connectivity(digraph: &Digraph) -> Result<Lambda> {
    let n = digraph.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let base = FlowNetwork::from_digraph(digraph);
    let mut best: Option<(usize, VertexSet)> = None;
    for v in 1..n {
        for probe in [Probe::FromRoot(v), Probe::ToRoot(v)] {
            let (s, t) = match probe {
                Probe::FromRoot(v) => (ROOT, v),
                Probe::ToRoot(v) => (v, ROOT),
            };
            // Only a strictly smaller cut replaces the incumbent.
            let limit = best.as_ref().map_or(usize::MAX, |(value, _)| *value);
            let mut net = base.clone();
            let value = net.max_flow(s, t, limit);
            if value < limit {
                best = Some((value, net.sink_side(t)));
            }
        }
    }
    let (value, side) = best.expect("n >= 2 gives at least one probe");
    let witness = Cut::of(digraph, side);
    debug_assert_eq!(witness.in_degree, value);
    Ok(Lambda { value, witness })
}

/// `λ(D) >= k`, with every flow capped at `k` augmentations.
pub fn is_k_arc_connected(digraph: &Digraph, k: usize) -> Result<bool> {
    let n = digraph.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    if k == 0 {
        return Ok(true);
    }
    let base = FlowNetwork::from_digraph(digraph);
    for v in 1..n {
        for (s, t) in [(ROOT, v), (v, ROOT)] {
            if base.clone().max_flow(s, t, k) < k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The inclusion-minimal in-tight set entered by `arc`, if any.
///
/// `lambda` must be `λ(D)`. A set entered by `arc` is in-tight exactly when
/// it is a minimum `tail→head` cut of value `lambda`, so the answer is the
/// minimal sink side of that flow when its value equals `lambda`.
pub fn min_in_tight_set_entered_by(
    digraph: &Digraph,
    arc: &Arc,
    lambda: usize,
) -> Option<VertexSet> {
    let mut net = FlowNetwork::from_digraph(digraph);
    let value = net.max_flow(arc.tail, arc.head, lambda.saturating_add(1));
    (value == lambda).then(|| net.sink_side(arc.head))
}

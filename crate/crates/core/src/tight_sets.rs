//! Families of in-tight sets covering a blocked reversal set, and the
//! uncrossing step that makes them cross-free.
//!
//! When no arc of `F` can be reversed without lowering `λ(D)`, every arc of
//! `F` enters some in-tight set. Collecting the minimal such set per arc and
//! uncrossing the result yields a family that, split around a root vertex,
//! is laminar (see [`crate::certificate`]).

use crate::connectivity::{arc_connectivity, min_in_tight_set_entered_by};
use crate::digraph::{ArcSet, Digraph, VertexSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightFamily {
    pub lambda: usize,
    pub members: Vec<VertexSet>,
}

impl TightFamily {
    /// Sorts and removes duplicate members.
    pub fn new(lambda: usize, mut members: Vec<VertexSet>) -> Self {
        members.sort();
        members.dedup();
        TightFamily { lambda, members }
    }

    /// `Σ |Z|·|V - Z|` over the members.
    pub fn potential(&self) -> u64 {
        self.members.iter().map(VertexSet::cut_weight).sum()
    }

    /// Arcs of `f` entering at least one member.
    pub fn covered(&self, digraph: &Digraph, f: &ArcSet) -> ArcSet {
        f.iter()
            .filter(|&id| {
                digraph
                    .arc(id)
                    .map(|arc| self.members.iter().any(|z| arc.enters(z)))
                    .unwrap_or(false)
            })
            .collect()
    }

    /// Drops members that no arc of `f` enters.
    pub fn retain_entered_by(&mut self, digraph: &Digraph, f: &ArcSet) {
        self.members.retain(|z| digraph.in_degree_within(f, z) > 0);
    }

    /// First pair of members that cross, by index.
    pub fn crossing_pair(&self) -> Option<(usize, usize)> {
        let m = self.members.len();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .find(|&(i, j)| crosses(&self.members[i], &self.members[j]))
    }

    pub fn is_cross_free(&self) -> bool {
        self.crossing_pair().is_none()
    }
}

/// `X` and `Y` intersect, neither contains the other, and together they do
/// not cover every vertex.
///
/// A family without crossing pairs becomes laminar once the members
/// containing a fixed root are replaced by their complements.
pub fn crosses(x: &VertexSet, y: &VertexSet) -> bool {
    !x.is_disjoint(y) && !x.is_subset(y) && !y.is_subset(x) && x.union(y).is_proper()
}

/// One minimal in-tight set per arc of `f`, deduplicated.
///
/// Fails with [`Error::ArcNotBlocked`] on the first arc (by id) that enters
/// no in-tight set, i.e. an arc whose reversal keeps `λ(D)`.
pub fn build_blocking_family(digraph: &Digraph, f: &ArcSet) -> Result<TightFamily> {
    f.validate(digraph)?;
    let lambda = arc_connectivity(digraph)?.value;
    let mut members = Vec::with_capacity(f.len());
    for id in f.iter() {
        let arc = digraph.arc(id)?;
        let set =
            min_in_tight_set_entered_by(digraph, arc, lambda).ok_or(Error::ArcNotBlocked(id))?;
        members.push(set);
    }
    Ok(TightFamily::new(lambda, members))
}

/// Replaces crossing pairs `X, Y` by `X ∩ Y, X ∪ Y` until none remain.
///
/// Both replacements are nonempty and proper for a crossing pair, so
/// submodularity of the in-degree makes them in-tight, forces
/// `d(X - Y, Y - X) = d(Y - X, X - Y) = 0`, and every arc entering `X` or
/// `Y` enters one of them. The potential strictly drops at each step.
pub fn uncross(family: &TightFamily, digraph: &Digraph) -> Result<TightFamily> {
    uncross_traced(family, digraph).map(|(out, _)| out)
}

/// Like [`uncross`], also returning the potential before each replacement
/// followed by the final potential.
pub fn uncross_traced(family: &TightFamily, digraph: &Digraph) -> Result<(TightFamily, Vec<u64>)> {
    for z in &family.members {
        if !z.is_proper() || digraph.in_degree(z) != family.lambda {
            return Err(Error::NotTight(z.members()));
        }
    }
    let mut current = TightFamily::new(family.lambda, family.members.clone());
    let mut trace = vec![current.potential()];
    while let Some((i, j)) = current.crossing_pair() {
        let y = current.members.swap_remove(j);
        let x = current.members.swap_remove(i);
        let meet = x.intersection(&y);
        let join = x.union(&y);
        debug_assert_eq!(digraph.in_degree(&meet), current.lambda);
        debug_assert_eq!(digraph.in_degree(&join), current.lambda);
        current.members.push(meet);
        current.members.push(join);
        current = TightFamily::new(current.lambda, current.members);
        let potential = current.potential();
        debug_assert!(potential < *trace.last().unwrap());
        trace.push(potential);
    }
    Ok((current, trace))
}

//! Directed multigraphs with stable arc identities.
//!
//! Parallel arcs are separate records: reversal always acts on one
//! identified arc, never on a multiplicity count. Arc ids are dense
//! (`0..arc_count`) and assigned in insertion order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcId(pub usize);

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub id: ArcId,
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    /// `true` if the arc has its tail outside `set` and its head inside.
    pub fn enters(&self, set: &VertexSet) -> bool {
        !set.contains(self.tail) && set.contains(self.head)
    }

    pub fn leaves(&self, set: &VertexSet) -> bool {
        set.contains(self.tail) && !set.contains(self.head)
    }
}

/// A subset of the vertices of an `n`-vertex digraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            mask: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            mask: vec![true; n],
        }
    }

    /// Panics if a member is `>= n`.
    pub fn from_members(n: usize, members: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = VertexSet::empty(n);
        for v in members {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: Vertex) {
        self.mask[v] = true;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.mask[v] = false;
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    /// Nonempty and not the whole vertex set.
    pub fn is_proper(&self) -> bool {
        !self.is_empty() && self.mask.iter().any(|&b| !b)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn members(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            mask: self.mask.iter().map(|&b| !b).collect(),
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        assert_eq!(self.universe(), other.universe(), "vertex universes differ");
        VertexSet {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !(a && b))
    }

    /// At least one of `X - Y`, `Y - X`, `X ∩ Y` is empty.
    pub fn is_laminar_with(&self, other: &Self) -> bool {
        self.is_subset(other) || other.is_subset(self) || self.is_disjoint(other)
    }

    /// `|X| * |V - X|`, the contribution of one set to the uncrossing potential.
    pub fn cut_weight(&self) -> u64 {
        let inside = self.len() as u64;
        inside * (self.universe() as u64 - inside)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe()
            .cmp(&other.universe())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// The designated reversal set `F`, as a set of arc ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ArcSet {
    members: BTreeSet<ArcId>,
}

impl ArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, id: ArcId) -> bool {
        self.members.contains(&id)
    }

    pub fn insert(&mut self, id: ArcId) -> bool {
        self.members.insert(id)
    }

    pub fn remove(&mut self, id: ArcId) -> bool {
        self.members.remove(&id)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Ascending arc id order.
    pub fn iter(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.members.iter().copied()
    }

    /// Checks that every member names an arc of `digraph`.
    pub fn validate(&self, digraph: &Digraph) -> Result<()> {
        match self.iter().find(|&id| id.0 >= digraph.arc_count()) {
            Some(id) => Err(Error::UnknownArc(id)),
            None => Ok(()),
        }
    }
}

impl FromIterator<ArcId> for ArcSet {
    fn from_iter<I: IntoIterator<Item = ArcId>>(iter: I) -> Self {
        ArcSet {
            members: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
}

impl Digraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Digraph {
            n,
            arcs: Vec::new(),
        })
    }

    /// Builds a digraph from `(tail, head)` pairs; ids follow slice order.
    pub fn from_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for &(tail, head) in arcs {
            d.add_arc(tail, head)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, tail: Vertex, head: Vertex) -> Result<ArcId> {
        for v in [tail, head] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if tail == head {
            return Err(Error::SelfLoop(tail));
        }
        let id = ArcId(self.arcs.len());
        self.arcs.push(Arc { id, tail, head });
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> Result<&Arc> {
        self.arcs.get(id.0).ok_or(Error::UnknownArc(id))
    }

    pub fn all_arcs(&self) -> ArcSet {
        self.arcs.iter().map(|a| a.id).collect()
    }

    /// Same digraph with arc `id` pointing the other way.
    pub fn reverse_arc(&self, id: ArcId) -> Result<Digraph> {
        let mut out = self.clone();
        out.reverse_in_place(id)?;
        Ok(out)
    }

    pub fn reverse_set(&self, set: &ArcSet) -> Result<Digraph> {
        set.validate(self)?;
        let mut out = self.clone();
        for id in set.iter() {
            out.reverse_in_place(id)?;
        }
        Ok(out)
    }

    pub fn reverse_all(&self) -> Digraph {
        let mut out = self.clone();
        for arc in &mut out.arcs {
            std::mem::swap(&mut arc.tail, &mut arc.head);
        }
        out
    }

    pub(crate) fn reverse_in_place(&mut self, id: ArcId) -> Result<()> {
        let arc = self.arcs.get_mut(id.0).ok_or(Error::UnknownArc(id))?;
        std::mem::swap(&mut arc.tail, &mut arc.head);
        Ok(())
    }

    /// Spanning subdigraph on the arcs of `keep`, ids renumbered in ascending order.
    pub fn restrict(&self, keep: &ArcSet) -> Result<Digraph> {
        keep.validate(self)?;
        let mut out = Digraph::new(self.n)?;
        for id in keep.iter() {
            let arc = self.arcs[id.0];
            out.add_arc(arc.tail, arc.head)?;
        }
        Ok(out)
    }

    pub fn in_degree(&self, set: &VertexSet) -> usize {
        self.arcs.iter().filter(|a| a.enters(set)).count()
    }

    pub fn out_degree(&self, set: &VertexSet) -> usize {
        self.arcs.iter().filter(|a| a.leaves(set)).count()
    }

    /// Number of arcs of `subset` entering `set`.
    pub fn in_degree_within(&self, subset: &ArcSet, set: &VertexSet) -> usize {
        subset
            .iter()
            .filter_map(|id| self.arcs.get(id.0))
            .filter(|a| a.enters(set))
            .count()
    }

    pub fn out_degree_within(&self, subset: &ArcSet, set: &VertexSet) -> usize {
        subset
            .iter()
            .filter_map(|id| self.arcs.get(id.0))
            .filter(|a| a.leaves(set))
            .count()
    }

    /// Endpoint pairs with the smaller vertex first, one per arc, in id order.
    pub fn underlying_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.arcs
            .iter()
            .map(|a| (a.tail.min(a.head), a.tail.max(a.head)))
            .collect()
    }
}

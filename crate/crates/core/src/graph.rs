//! Mutable simple undirected graph with stable, caller-chosen vertex ids.
//!
//! Every generator and search in this crate is phrased in terms of a small set
//! of local edits: adding and removing vertices and edges, subdividing an edge
//! with a fresh vertex ([`Graph::expand_edge`]) and contracting a degree-2
//! vertex back out ([`Graph::contract_vertex`]). Ids of deleted vertices stay
//! free, so the id space may have holes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Vertex identity. Wheel hubs built by [`make_wheel`] always get id 0.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("vertex {0} does not exist")]
    MissingVertex(VertexId),
    #[error("vertex {vertex} still has degree {degree}")]
    VertexNotIsolated { vertex: VertexId, degree: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} already exists")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} does not exist")]
    MissingEdge(VertexId, VertexId),
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    NotContractible { vertex: VertexId, degree: usize },
    #[error("wheel needs at least 3 spokes, got {0}")]
    WheelTooSmall(usize),
    #[error("vertex set contains {0} more than once")]
    RepeatedMember(VertexId),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// Simple undirected graph.
///
/// Equality compares the live vertex set and the edge set only; the
/// high-water mark of assigned ids is bookkeeping and does not take part.
#[derive(Clone, Default)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
    edge_count: usize,
    highest_id: Option<VertexId>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list. Endpoints are created on demand.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new();
        for (u, v) in edges {
            for w in [u, v] {
                if !g.contains(w) {
                    g.add_vertex(w)?;
                }
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Largest id ever assigned in this graph, including deleted vertices.
    pub fn highest_id(&self) -> Option<VertexId> {
        self.highest_id
    }

    /// Smallest id strictly above every id ever assigned.
    pub fn fresh_id(&self) -> VertexId {
        self.highest_id.map_or(0, |h| h + 1)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Neighbours of `v` in ascending id order; empty if `v` is not live.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.adj.get(&v).map(BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Smallest edge strictly greater than `(u, v)` in lexicographic order.
    pub(crate) fn next_edge_after(&self, u: VertexId, v: VertexId) -> Option<(VertexId, VertexId)> {
        if let Some(&w) = self.adj.get(&u).and_then(|n| n.range(v + 1..).next()) {
            return Some((u, w));
        }
        self.adj.range(u + 1..).find_map(|(&a, n)| n.range(a + 1..).next().map(|&b| (a, b)))
    }

    pub fn add_vertex(&mut self, v: VertexId) -> Result<()> {
        if self.adj.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        self.adj.insert(v, BTreeSet::new());
        self.highest_id = Some(self.highest_id.map_or(v, |h| h.max(v)));
        Ok(())
    }

    /// Deletes an isolated vertex.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        let degree = self.degree(v).ok_or(GraphError::MissingVertex(v))?;
        if degree != 0 {
            return Err(GraphError::VertexNotIsolated { vertex: v, degree });
        }
        self.adj.remove(&v);
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.require(u)?;
        self.require(v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.link(u, v);
        debug_assert!(self.check_invariants().is_ok());
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if !self.has_edge(u, v) {
            self.require(u)?;
            self.require(v)?;
            return Err(GraphError::MissingEdge(u, v));
        }
        self.unlink(u, v);
        debug_assert!(self.check_invariants().is_ok());
        Ok(())
    }

    /// Subdivides edge `u`-`v` with the isolated vertex `w`, giving the path
    /// `u`-`w`-`v`.
    pub fn expand_edge(&mut self, u: VertexId, v: VertexId, w: VertexId) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let degree = self.degree(w).ok_or(GraphError::MissingVertex(w))?;
        if degree != 0 {
            return Err(GraphError::VertexNotIsolated { vertex: w, degree });
        }
        self.unlink(u, v);
        self.link(u, w);
        self.link(w, v);
        debug_assert!(self.check_invariants().is_ok());
        Ok(())
    }

    /// Contracts the degree-2 vertex `v`: joins its two neighbours unless they
    /// are already adjacent, then deletes `v`.
    pub fn contract_vertex(&mut self, v: VertexId) -> Result<()> {
        let nbrs = self.adj.get(&v).ok_or(GraphError::MissingVertex(v))?;
        if nbrs.len() != 2 {
            return Err(GraphError::NotContractible { vertex: v, degree: nbrs.len() });
        }
        let mut it = nbrs.iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        self.unlink(v, a);
        self.unlink(v, b);
        self.adj.remove(&v);
        if !self.has_edge(a, b) {
            self.link(a, b);
        }
        debug_assert!(self.check_invariants().is_ok());
        Ok(())
    }

    /// Copy of the graph with `v` and its incident edges deleted.
    pub fn without_vertex(&self, v: VertexId) -> Graph {
        let mut g = self.clone();
        if let Some(nbrs) = g.adj.remove(&v) {
            for u in nbrs {
                g.adj.get_mut(&u).unwrap().remove(&v);
                g.edge_count -= 1;
            }
        }
        g
    }

    /// Copy of the graph restricted to `keep`, ignoring ids that are not live.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let mut g = Graph { highest_id: self.highest_id, ..Graph::default() };
        for (&u, nbrs) in self.adj.iter().filter(|(u, _)| keep.contains(u)) {
            let kept: BTreeSet<_> = nbrs.intersection(keep).copied().collect();
            g.edge_count += kept.range(u + 1..).count();
            g.adj.insert(u, kept);
        }
        g
    }

    /// Deletes every degree-0 vertex, returning how many were removed.
    pub fn remove_isolated(&mut self) -> usize {
        let before = self.adj.len();
        self.adj.retain(|_, n| !n.is_empty());
        before - self.adj.len()
    }

    /// Verifies the structural invariants: symmetric adjacency, no loops,
    /// no dangling ids, and a consistent edge count.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut degree_sum = 0;
        for (&u, nbrs) in &self.adj {
            degree_sum += nbrs.len();
            for &v in nbrs {
                if u == v {
                    return Err(format!("self-loop at {u}"));
                }
                match self.adj.get(&v) {
                    None => return Err(format!("{u} points at dead vertex {v}")),
                    Some(back) if !back.contains(&u) => return Err(format!("edge {u}-{v} is not symmetric")),
                    _ => {}
                }
            }
        }
        if degree_sum != 2 * self.edge_count {
            return Err(format!("edge count {} disagrees with degree sum {degree_sum}", self.edge_count));
        }
        if let (Some(max), Some(h)) = (self.adj.keys().next_back(), self.highest_id) {
            if *max > h {
                return Err(format!("live id {max} above high-water mark {h}"));
            }
        }
        Ok(())
    }

    fn require(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::MissingVertex(v))
        }
    }

    fn link(&mut self, u: VertexId, v: VertexId) {
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        self.edge_count += 1;
    }

    fn unlink(&mut self, u: VertexId, v: VertexId) {
        self.adj.get_mut(&u).unwrap().remove(&v);
        self.adj.get_mut(&v).unwrap().remove(&u);
        self.edge_count -= 1;
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.edge_count == other.edge_count && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices; ", self.vertex_count())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        for v in self.vertices().filter(|&v| self.degree(v) == Some(0)) {
            write!(f, " {v}")?;
        }
        f.write_str(")")
    }
}

/// The wheel `W_k`: hub 0 joined to every rim vertex `1..=k`, rim cycle
/// `1-2-...-k-1`.
pub fn make_wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(GraphError::WheelTooSmall(k));
    }
    let mut g = Graph::new();
    for v in 0..=k {
        g.add_vertex(v)?;
    }
    for v in 1..=k {
        g.add_edge(0, v)?;
    }
    for v in 1..k {
        g.add_edge(v, v + 1)?;
    }
    g.add_edge(k, 1)?;
    Ok(g)
}

/// Duplicate-free, ordered set of vertex ids.
///
/// Order is preserved because generators enumerate regions in the order the
/// caller supplied them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(members: Vec<VertexId>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &members {
            if !seen.insert(v) {
                return Err(GraphError::RepeatedMember(v));
            }
        }
        Ok(Self(members))
    }

    /// Builds a set from ids already known to be sorted and distinct.
    pub(crate) fn from_sorted(members: Vec<VertexId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn to_btree(&self) -> BTreeSet<VertexId> {
        self.0.iter().copied().collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.0.iter().any(|v| other.contains(*v))
    }

    /// First member not live in `g`, if any.
    pub fn first_missing(&self, g: &Graph) -> Option<VertexId> {
        self.0.iter().copied().find(|&v| !g.contains(v))
    }
}

impl From<VertexSet> for Vec<VertexId> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

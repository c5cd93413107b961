//! Immutable undirected simple graphs over labelled vertices.
//!
//! Vertices are stored in ascending label order, so the dense index of a
//! vertex is also its rank in the vertex order. Everything downstream breaks
//! ties by index and therefore by label.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Dense vertex index into a [`Graph`].
pub type Vertex = usize;

/// An opaque vertex token.
///
/// Labels order "naturally": two all-digit labels compare by numeric value
/// (then textually, so `007` < `7`), all-digit labels sort before other
/// labels, and everything else compares as strings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(s: impl Into<String>) -> Self {
        Self(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<(usize, &str)> {
        let s = self.0.as_str();
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let trimmed = s.trim_start_matches('0');
        // compare by digit count first, then digits
        Some((trimmed.len(), trimmed))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Self(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Self(s)
    }
}

/// Undirected edge `{lo, hi}` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Panics on `u == v`.
    pub fn new(u: Vertex, v: Vertex) -> Self {
        assert_ne!(u, v, "an edge needs two distinct endpoints");
        Self {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn forward(self) -> DirectedEdge {
        DirectedEdge {
            tail: self.lo,
            head: self.hi,
        }
    }

    pub fn backward(self) -> DirectedEdge {
        self.forward().reversed()
    }
}

/// Directed edge `(tail, head)`; ordered by tail, then head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub tail: Vertex,
    pub head: Vertex,
}

impl DirectedEdge {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        assert_ne!(tail, head, "a directed edge needs two distinct endpoints");
        Self { tail, head }
    }

    pub fn reversed(self) -> Self {
        Self {
            tail: self.head,
            head: self.tail,
        }
    }

    pub fn undirected(self) -> Edge {
        Edge::new(self.tail, self.head)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Label>,
    adjacency: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Graph on the vertices `0..n` labelled by their decimal index.
    pub fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adjacency = alloc::vec![VertexSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        let labels = (0..n).map(|i| Label(i.to_string())).collect();
        Ok(Self::from_parts(labels, adjacency))
    }

    /// Convenience constructor for fixtures: `Graph::from_labeled_edges(&["a", "b"], &[("a", "b")])`.
    pub fn from_labeled_edges(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.add_vertex(*v);
        }
        for (u, v) in edges {
            b.add_edge(*u, *v)?;
        }
        Ok(b.build())
    }

    fn from_parts(labels: Vec<Label>, adjacency: Vec<VertexSet>) -> Self {
        let edge_count = adjacency.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self {
            labels,
            adjacency,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.labels.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn label(&self, v: Vertex) -> &Label {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.binary_search(&Label::from(label)).ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adjacency.len() && self.adjacency[u].contains(v)
    }

    /// All edges in ascending `(lo, hi)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices().flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge { lo: u, hi: v })
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub(crate) fn check_vertex_set(&self, x: &VertexSet) -> Result<()> {
        match x.last() {
            Some(m) if m >= self.vertex_count() => Err(Error::UnknownVertex(m)),
            _ => Ok(()),
        }
    }

    /// `G(X)`: the subgraph induced by `x`, keeping the labels of `x`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Self> {
        self.check_vertex_set(x)?;
        let old: Vec<Vertex> = x.iter().collect();
        let mut index = BTreeMap::new();
        for (new, &v) in old.iter().enumerate() {
            index.insert(v, new);
        }
        let adjacency = old
            .iter()
            .map(|&v| self.adjacency[v].intersection(x).iter().map(|w| index[&w]).collect())
            .collect();
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Self::from_parts(labels, adjacency))
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_set();
        let adjacency = self
            .vertices()
            .map(|v| {
                let mut s = all.difference(&self.adjacency[v]);
                s.remove(v);
                s
            })
            .collect();
        Self::from_parts(self.labels.clone(), adjacency)
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        components_within(&self.vertex_set(), |v| self.adjacency[v].clone())
    }

    /// Endpoints of the given edges (`Ã` for an edge set `A`).
    pub fn spanned_vertices<'a>(edges: impl IntoIterator<Item = &'a Edge>) -> VertexSet {
        let mut s = VertexSet::new();
        for e in edges {
            s.insert(e.lo);
            s.insert(e.hi);
        }
        s
    }

    /// Number of edges with both ends in `x`.
    pub fn edges_within(&self, x: &VertexSet) -> usize {
        x.iter().map(|v| self.adjacency[v].intersection_len(x)).sum::<usize>() / 2
    }

    /// Copy of this graph with the vertices renamed by `rename`.
    ///
    /// The new labels must be distinct; the vertex order is recomputed from them.
    pub fn relabeled(&self, mut rename: impl FnMut(Vertex, &Label) -> Label) -> Result<Self> {
        let mut b = GraphBuilder::new();
        let names: Vec<Label> = self.vertices().map(|v| rename(v, &self.labels[v])).collect();
        for name in &names {
            b.add_vertex(name.clone());
        }
        for e in self.edges() {
            b.add_edge(names[e.lo].clone(), names[e.hi].clone())?;
        }
        Ok(b.build())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&Label, &Label)> = self.edges().map(|e| (&self.labels[e.lo], &self.labels[e.hi])).collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Components of the graph on `within` whose neighbourhoods are given by `neighbors`.
pub(crate) fn components_within(within: &VertexSet, mut neighbors: impl FnMut(Vertex) -> VertexSet) -> Vec<VertexSet> {
    let mut unseen = within.clone();
    let mut out = Vec::new();
    while let Some(start) = unseen.first() {
        let mut comp = VertexSet::singleton(start);
        unseen.remove(start);
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            let fresh = neighbors(v).intersection(&unseen);
            for w in &fresh {
                unseen.remove(w);
                comp.insert(w);
                stack.push(w);
            }
        }
        out.push(comp);
    }
    out
}

/// Accumulates labelled vertices and edges, then freezes them into a [`Graph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: BTreeSet<Label>,
    edges: BTreeSet<(Label, Label)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: impl Into<Label>) {
        self.vertices.insert(v.into());
    }

    /// Adds `uv`; returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: impl Into<Label>, v: impl Into<Label>) -> Result<bool> {
        let (u, v) = (u.into(), v.into());
        match u.cmp(&v) {
            Ordering::Equal => Err(Error::SelfLoop(u.0)),
            Ordering::Less => {
                self.vertices.insert(u.clone());
                self.vertices.insert(v.clone());
                Ok(self.edges.insert((u, v)))
            }
            Ordering::Greater => {
                self.vertices.insert(u.clone());
                self.vertices.insert(v.clone());
                Ok(self.edges.insert((v, u)))
            }
        }
    }

    pub fn build(self) -> Graph {
        let labels: Vec<Label> = self.vertices.into_iter().collect();
        let mut adjacency = alloc::vec![VertexSet::new(); labels.len()];
        for (u, v) in &self.edges {
            let iu = labels.binary_search(u).expect("edge endpoints are registered");
            let iv = labels.binary_search(v).expect("edge endpoints are registered");
            adjacency[iu].insert(iv);
            adjacency[iv].insert(iu);
        }
        Graph::from_parts(labels, adjacency)
    }
}

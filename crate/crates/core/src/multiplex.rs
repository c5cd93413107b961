//! Maximal multiplices: the edges crossing distinct children of one series or
//! prime node of the decomposition tree.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::decomposition::{is_strong_module, DecompositionNode, NodeKind};
use crate::error::{Error, Result};
use crate::forcing::{ColorId, ColorMap};
use crate::graph::{Edge, Graph, Vertex};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplex {
    /// Path of child indices from the root to the generating node, when the
    /// multiplex was read off the decomposition tree.
    pub node_path: Option<Vec<usize>>,
    pub colors: BTreeSet<ColorId>,
    pub edges: BTreeSet<Edge>,
    pub span: VertexSet,
    pub rank: usize,
}

impl Multiplex {
    /// The multiplex made of the given colors, generated by a simplex of `rank`.
    pub fn from_colors(colors: &ColorMap, ids: impl IntoIterator<Item = ColorId>, rank: usize) -> Self {
        let ids: BTreeSet<ColorId> = ids.into_iter().collect();
        let edges: BTreeSet<Edge> = ids
            .iter()
            .flat_map(|&c| colors.colors[c].undirected.iter().copied())
            .collect();
        let span = Graph::spanned_vertices(&edges);
        Self {
            node_path: None,
            colors: ids,
            edges,
            span,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Rank of a multiplex (number of vertices of its generating simplex, minus one).
pub fn rank(m: &Multiplex) -> usize {
    m.rank
}

/// One multiplex per series or prime node, in tree pre-order. Their edge sets
/// partition `E(g)`.
pub fn multiplex_partition(g: &Graph, tree: &DecompositionNode, colors: &ColorMap) -> Vec<Multiplex> {
    let mut out = Vec::new();
    for (path, node) in tree.preorder() {
        let rank = match node.kind {
            NodeKind::Series => node.children.len() - 1,
            NodeKind::Prime => 1,
            NodeKind::Leaf | NodeKind::Parallel => continue,
        };
        let edges: BTreeSet<Edge> = crossing_edges(g, node).collect();
        let ids: BTreeSet<ColorId> = edges
            .iter()
            .map(|&e| colors.color_of(e).expect("every edge is colored"))
            .collect();
        out.push(Multiplex {
            node_path: Some(path),
            colors: ids,
            span: Graph::spanned_vertices(&edges),
            edges,
            rank,
        });
    }
    out
}

/// Edges of `g` joining two different children of `node`.
pub fn crossing_edges<'a>(g: &'a Graph, node: &'a DecompositionNode) -> impl Iterator<Item = Edge> + 'a {
    node.children.iter().enumerate().flat_map(move |(i, ci)| {
        node.children[i + 1..].iter().flat_map(move |cj| {
            ci.vertex_set.iter().flat_map(move |x| {
                g.neighbors(x)
                    .intersection(&cj.vertex_set)
                    .iter()
                    .map(move |y| Edge::new(x, y))
                    .collect::<Vec<_>>()
            })
        })
    })
}

/// A multiplex is maximal iff its span is a strong module.
pub fn is_maximal_multiplex(g: &Graph, m: &Multiplex) -> bool {
    is_strong_module(g, &m.span)
}

/// Whether the simplex generating `m` extends by the outside vertex `a`: some
/// `b, c` in the span reach `a` through two distinct colors foreign to `m`.
pub fn simplex_extension_exists(g: &Graph, colors: &ColorMap, m: &Multiplex, a: Vertex) -> Result<bool> {
    if a >= g.vertex_count() {
        return Err(Error::UnknownVertex(a));
    }
    if m.span.contains(a) {
        return Err(Error::VertexInSpan(g.label(a).as_str().into()));
    }
    let foreign: BTreeSet<ColorId> = g
        .neighbors(a)
        .intersection(&m.span)
        .iter()
        .filter_map(|b| colors.color_of(Edge::new(a, b)))
        .filter(|c| !m.colors.contains(c))
        .collect();
    Ok(foreign.len() >= 2)
}

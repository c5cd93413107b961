//! Modules, strong modules and the decomposition tree.
//!
//! A module is a vertex set every outside vertex sees uniformly (adjacent to
//! all of it or to none). Strong modules are those no other module overlaps;
//! they nest, and the tree below lists all of them. Each internal node is
//! split into its maximal strong submodules: the connected components when the
//! node is disconnected, the co-components when its complement is
//! disconnected, and otherwise the maximal proper modules.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{components_within, Graph, GraphBuilder, Vertex};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    Leaf,
    /// Edgeless quotient: the children are the connected components.
    Parallel,
    /// Complete quotient: the children are the co-components.
    Series,
    /// Quotient that is connected, co-connected and has only trivial modules.
    Prime,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Parallel => "parallel",
            NodeKind::Series => "series",
            NodeKind::Prime => "prime",
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One strong module and its split into maximal strong submodules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionNode {
    pub vertex_set: VertexSet,
    pub kind: NodeKind,
    /// Ordered by smallest vertex.
    pub children: Vec<DecompositionNode>,
    /// Graph on one representative per child, in child order. `None` on leaves.
    pub quotient: Option<Graph>,
    /// Smallest vertex of `vertex_set`.
    pub representative: Vertex,
}

impl DecompositionNode {
    pub fn is_leaf(&self) -> bool {
        self.kind == NodeKind::Leaf
    }

    /// Nodes in pre-order, each with its path of child indices from `self`.
    pub fn preorder(&self) -> Vec<(Vec<usize>, &DecompositionNode)> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![(Vec::new(), self)];
        while let Some((path, node)) = stack.pop() {
            for (i, child) in node.children.iter().enumerate().rev() {
                let mut p = path.clone();
                p.push(i);
                stack.push((p, child));
            }
            out.push((path, node));
        }
        out
    }

    pub fn node_at(&self, path: &[usize]) -> Option<&DecompositionNode> {
        path.iter().try_fold(self, |node, &i| node.children.get(i))
    }

    /// The vertex sets of every node.
    pub fn strong_modules(&self) -> Vec<VertexSet> {
        self.preorder().into_iter().map(|(_, n)| n.vertex_set.clone()).collect()
    }

    /// Index of the child containing each vertex of `vertex_set`.
    pub fn child_index(&self, v: Vertex) -> Option<usize> {
        self.children.iter().position(|c| c.vertex_set.contains(v))
    }
}

/// The partition of `V` into maximal strong modules other than `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongPartition {
    pub parts: Vec<VertexSet>,
}

fn all_or_none(g: &Graph, c: Vertex, x: &VertexSet) -> bool {
    let seen = g.neighbors(c).intersection_len(x);
    seen == 0 || seen == x.len()
}

/// Whether every vertex outside `x` is adjacent to all of `x` or to none of it.
pub fn is_module(g: &Graph, x: &VertexSet) -> bool {
    is_module_within(g, &g.vertex_set(), x)
}

pub(crate) fn is_module_within(g: &Graph, within: &VertexSet, x: &VertexSet) -> bool {
    within.difference(x).iter().all(|c| all_or_none(g, c, x))
}

/// The inclusion-minimal module containing `seed`.
pub fn smallest_module(g: &Graph, seed: &VertexSet) -> Result<VertexSet> {
    g.check_vertex_set(seed)?;
    if seed.is_empty() {
        return Err(Error::TooFewVertices { needed: 1, actual: 0 });
    }
    Ok(smallest_module_within(g, &g.vertex_set(), seed))
}

/// Adds splitters (outside vertices seeing part of the set) until none remain.
pub(crate) fn smallest_module_within(g: &Graph, within: &VertexSet, seed: &VertexSet) -> VertexSet {
    let mut x = seed.clone();
    loop {
        let splitters: VertexSet = within
            .difference(&x)
            .iter()
            .filter(|&c| !all_or_none(g, c, &x))
            .collect();
        if splitters.is_empty() {
            return x;
        }
        x.union_with(&splitters);
    }
}

/// Whether `x` is a strong module, i.e. a node of the decomposition tree.
pub fn is_strong_module(g: &Graph, x: &VertexSet) -> bool {
    if x.is_empty() || g.check_vertex_set(x).is_err() || !is_module(g, x) {
        return false;
    }
    if x.len() == 1 || x.len() == g.vertex_count() {
        return true;
    }
    let mut node = decomposition_tree(g);
    loop {
        if node.vertex_set == *x {
            return true;
        }
        match node.children.into_iter().find(|c| c.vertex_set.intersects(x)) {
            Some(child) if x.is_subset(&child.vertex_set) => node = child,
            _ => return false,
        }
    }
}

fn complement_neighbors(g: &Graph, within: &VertexSet, v: Vertex) -> VertexSet {
    let mut s = within.difference(g.neighbors(v));
    s.remove(v);
    s
}

/// The three mutually exclusive shapes a node of two or more vertices can have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Split {
    Components(Vec<VertexSet>),
    CoComponents(Vec<VertexSet>),
    MaximalModules(Vec<VertexSet>),
}

impl Split {
    fn parts(self) -> Vec<VertexSet> {
        match self {
            Split::Components(p) | Split::CoComponents(p) | Split::MaximalModules(p) => p,
        }
    }
}

/// Maximal strong modules of `G(within)` other than `within`; `order` fixes
/// the order in which pair seeds are tried in the prime case.
pub(crate) fn split_within(g: &Graph, within: &VertexSet, order: &[Vertex]) -> Split {
    debug_assert!(within.len() >= 2);
    let comps = components_within(within, |v| g.neighbors(v).intersection(within));
    if comps.len() > 1 {
        return Split::Components(comps);
    }
    let co = components_within(within, |v| complement_neighbors(g, within, v));
    if co.len() > 1 {
        return Split::CoComponents(co);
    }

    // Connected and co-connected: every proper module sits inside exactly one
    // maximal strong module, so merging intersecting pair closures finds them.
    let members: Vec<Vertex> = order.iter().copied().filter(|&v| within.contains(v)).collect();
    let mut classes: Vec<VertexSet> = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if classes.iter().any(|c| c.contains(u) && c.contains(v)) {
                continue;
            }
            let pair: VertexSet = [u, v].into_iter().collect();
            let mut merged = smallest_module_within(g, within, &pair);
            if merged == *within {
                continue;
            }
            classes.retain(|c| {
                if c.intersects(&merged) {
                    merged.union_with(c);
                    false
                } else {
                    true
                }
            });
            assert!(
                merged != *within,
                "overlapping proper modules of a prime graph merged into the whole vertex set"
            );
            classes.push(merged);
        }
    }
    let mut covered = VertexSet::new();
    for c in &classes {
        covered.union_with(c);
    }
    classes.extend(within.difference(&covered).iter().map(VertexSet::singleton));
    classes.sort();
    Split::MaximalModules(classes)
}

/// The unique partition of `V` into maximal strong modules other than `V`.
pub fn maximal_strong_partition(g: &Graph) -> Result<StrongPartition> {
    let order: Vec<Vertex> = g.vertices().collect();
    maximal_strong_partition_in_order(g, &order)
}

/// As [`maximal_strong_partition`], trying seeds in the given vertex order.
/// The result does not depend on `order`.
pub fn maximal_strong_partition_in_order(g: &Graph, order: &[Vertex]) -> Result<StrongPartition> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            actual: g.vertex_count(),
        });
    }
    Ok(StrongPartition {
        parts: split_within(g, &g.vertex_set(), order).parts(),
    })
}

/// The decomposition tree of `g`. An empty graph yields a single empty leaf.
pub fn decomposition_tree(g: &Graph) -> DecompositionNode {
    let order: Vec<Vertex> = g.vertices().collect();
    decomposition_tree_in_order(g, &order)
}

/// As [`decomposition_tree`], trying prime-case seeds in the given vertex order.
pub fn decomposition_tree_in_order(g: &Graph, order: &[Vertex]) -> DecompositionNode {
    build_node(g, g.vertex_set(), order)
}

fn build_node(g: &Graph, vertex_set: VertexSet, order: &[Vertex]) -> DecompositionNode {
    let representative = vertex_set.first().unwrap_or(0);
    if vertex_set.len() <= 1 {
        return DecompositionNode {
            vertex_set,
            kind: NodeKind::Leaf,
            children: Vec::new(),
            quotient: None,
            representative,
        };
    }
    let split = split_within(g, &vertex_set, order);
    let kind = match &split {
        Split::Components(_) => NodeKind::Parallel,
        Split::CoComponents(_) => NodeKind::Series,
        Split::MaximalModules(_) => NodeKind::Prime,
    };
    let parts = split.parts();
    let quotient = quotient_of_parts(g, &parts);
    if kind == NodeKind::Prime {
        debug_assert!(parts.len() >= 4, "prime quotients have at least four vertices");
    }
    let children = parts.into_iter().map(|p| build_node(g, p, order)).collect();
    DecompositionNode {
        vertex_set,
        kind,
        children,
        quotient: Some(quotient),
        representative,
    }
}

fn quotient_of_parts(g: &Graph, parts: &[VertexSet]) -> Graph {
    let reps: Vec<Vertex> = parts.iter().map(|p| p.first().expect("parts are non-empty")).collect();
    let mut b = GraphBuilder::new();
    for &r in &reps {
        b.add_vertex(g.label(r).clone());
    }
    for (i, &r) in reps.iter().enumerate() {
        for &s in &reps[i + 1..] {
            if g.has_edge(r, s) {
                b.add_edge(g.label(r).clone(), g.label(s).clone())
                    .expect("distinct representatives");
            }
        }
    }
    b.build()
}

/// `G/P`: the graph induced on the smallest vertex of every part.
pub fn quotient(g: &Graph, partition: &StrongPartition) -> Result<Graph> {
    let mut covered = VertexSet::new();
    for part in &partition.parts {
        g.check_vertex_set(part)?;
        if part.is_empty() {
            return Err(Error::NotAModulePartition("empty part"));
        }
        if covered.intersects(part) {
            return Err(Error::NotAModulePartition("parts intersect"));
        }
        if !is_module(g, part) {
            return Err(Error::NotAModulePartition("a part is not a module"));
        }
        covered.union_with(part);
    }
    if covered != g.vertex_set() {
        return Err(Error::NotAModulePartition("parts do not cover the vertex set"));
    }
    let mut parts = partition.parts.clone();
    parts.sort();
    Ok(quotient_of_parts(g, &parts))
}

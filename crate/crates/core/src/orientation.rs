//! Counting and enumerating transitive orientations.
//!
//! A comparability graph is oriented node by node of its decomposition tree:
//! a series node with `k` children picks one of `k!` linear orders of its
//! children, a prime node picks one of the two transitive orientations of its
//! quotient, and parallel nodes and leaves pick nothing. The choices do not
//! interact, so the orientations are exactly the cartesian product of the
//! per-node choices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::decomposition::{decomposition_tree, DecompositionNode, NodeKind};
use crate::error::{Error, Result};
use crate::forcing::{color_classes, is_comparability_with, not_an_edge};
use crate::graph::{DirectedEdge, Edge, Graph, Vertex};
use crate::vertex_set::VertexSet;

/// One direction for every edge of a graph, kept sorted by `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    arcs: Vec<DirectedEdge>,
}

impl Orientation {
    pub fn from_arcs(arcs: impl IntoIterator<Item = DirectedEdge>) -> Self {
        let mut arcs: Vec<DirectedEdge> = arcs.into_iter().collect();
        arcs.sort_unstable();
        arcs.dedup();
        Self { arcs }
    }

    pub(crate) fn from_sorted_arcs(arcs: Vec<DirectedEdge>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        Self { arcs }
    }

    pub fn arcs(&self) -> &[DirectedEdge] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, d: DirectedEdge) -> bool {
        self.arcs.binary_search(&d).is_ok()
    }

    /// The chosen direction of `e`, if `e` is oriented at all.
    pub fn direction(&self, e: Edge) -> Option<DirectedEdge> {
        [e.forward(), e.backward()].into_iter().find(|&d| self.contains(d))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeDirection {
    /// The implication class holding the smallest directed edge.
    Canonical,
    Reversed,
}

/// The choice made at one series or prime node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeChoice {
    /// Child indices from first (source side) to last.
    Series(Vec<usize>),
    Prime(PrimeDirection),
}

pub type NodePath = Vec<usize>;

/// Rearranges `xs` into the next permutation in lexicographic order; returns
/// `false` (leaving `xs` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        xs.reverse();
        return false;
    };
    let j = xs.iter().rposition(|x| *x > xs[i]).expect("a larger element exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[derive(Debug, Clone)]
enum Step {
    Series,
    /// Child-index arcs `i → j` of the canonical class of the quotient.
    Prime(Vec<(usize, usize)>),
}

#[derive(Debug, Clone)]
struct PlanNode {
    path: NodePath,
    children: Vec<VertexSet>,
    /// Pairs of adjacent children `(i, j)`, `i < j`.
    adjacent: Vec<(usize, usize)>,
    step: Step,
}

/// Series and prime nodes in pre-order, with what is needed to lift a choice.
#[derive(Debug, Clone)]
struct Plan {
    nodes: Vec<PlanNode>,
}

impl Plan {
    fn new(tree: &DecompositionNode) -> Result<Self> {
        let mut nodes = Vec::new();
        for (path, node) in tree.preorder() {
            let step = match node.kind {
                NodeKind::Leaf | NodeKind::Parallel => continue,
                NodeKind::Series => Step::Series,
                NodeKind::Prime => Step::Prime(prime_arcs(node).ok_or_else(|| Error::NotOrientable(path.clone()))?),
            };
            let q = node.quotient.as_ref().expect("internal nodes carry a quotient");
            let adjacent = q.edges().map(|e| (e.lo(), e.hi())).collect();
            nodes.push(PlanNode {
                path,
                children: node.children.iter().map(|c| c.vertex_set.clone()).collect(),
                adjacent,
                step,
            });
        }
        Ok(Self { nodes })
    }

    fn first_choices(&self) -> Vec<NodeChoice> {
        self.nodes
            .iter()
            .map(|n| match n.step {
                Step::Series => NodeChoice::Series((0..n.children.len()).collect()),
                Step::Prime(_) => NodeChoice::Prime(PrimeDirection::Canonical),
            })
            .collect()
    }

    fn lift(&self, g_arcs: &mut Vec<DirectedEdge>, node: &PlanNode, choice: &NodeChoice) -> Result<()> {
        let bad = || Error::BadChoice(node.path.clone());
        // forward[(i, j)]: children i and j are joined i → j
        let forward: BTreeSet<(usize, usize)> = match (&node.step, choice) {
            (Step::Series, NodeChoice::Series(perm)) => {
                let k = node.children.len();
                let mut position = alloc::vec![usize::MAX; k];
                for (pos, &child) in perm.iter().enumerate() {
                    if child >= k || position[child] != usize::MAX {
                        return Err(bad());
                    }
                    position[child] = pos;
                }
                if perm.len() != k {
                    return Err(bad());
                }
                node.adjacent
                    .iter()
                    .map(|&(i, j)| if position[i] < position[j] { (i, j) } else { (j, i) })
                    .collect()
            }
            (Step::Prime(arcs), NodeChoice::Prime(dir)) => arcs
                .iter()
                .map(|&(i, j)| match dir {
                    PrimeDirection::Canonical => (i, j),
                    PrimeDirection::Reversed => (j, i),
                })
                .collect(),
            _ => return Err(bad()),
        };
        for (i, j) in forward {
            for x in &node.children[i] {
                for y in &node.children[j] {
                    g_arcs.push(DirectedEdge::new(x, y));
                }
            }
        }
        Ok(())
    }

    fn materialize(&self, choices: &[NodeChoice]) -> Result<Orientation> {
        let mut arcs = Vec::new();
        for (node, choice) in self.nodes.iter().zip(choices) {
            self.lift(&mut arcs, node, choice)?;
        }
        Ok(Orientation::from_arcs(arcs))
    }
}

/// Canonical transitive orientation of a prime node's quotient, as child-index
/// arcs; `None` when the quotient is not a comparability graph.
fn prime_arcs(node: &DecompositionNode) -> Option<Vec<(usize, usize)>> {
    let q = node.quotient.as_ref()?;
    let colors = color_classes(q);
    debug_assert_eq!(colors.len(), 1, "a prime quotient has a single color class");
    let color = colors.colors.first()?;
    if color.self_inverse {
        return None;
    }
    Some(color.class_a.iter().map(|d| (d.tail, d.head)).collect())
}

/// Lifts one choice per series/prime node (keyed by node path) to an orientation.
pub fn materialize(tree: &DecompositionNode, choices: &BTreeMap<NodePath, NodeChoice>) -> Result<Orientation> {
    let plan = Plan::new(tree)?;
    let ordered = plan
        .nodes
        .iter()
        .map(|n| {
            choices
                .get(&n.path)
                .cloned()
                .ok_or_else(|| Error::BadChoice(n.path.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    plan.materialize(&ordered)
}

/// The first orientation in enumeration order: identity permutations and
/// canonical prime directions everywhere.
pub fn first_orientation(tree: &DecompositionNode) -> Result<Orientation> {
    let plan = Plan::new(tree)?;
    plan.materialize(&plan.first_choices())
}

/// Number of transitive orientations: zero for non-comparability graphs,
/// otherwise the product of `k!` over series nodes with `k` children and of 2
/// over prime nodes.
pub fn count_orientations(g: &Graph) -> BigUint {
    let colors = color_classes(g);
    if !is_comparability_with(g, &colors) {
        return BigUint::zero();
    }
    count_from_tree(&decomposition_tree(g))
}

/// The product formula on a tree whose prime nodes are all orientable.
pub fn count_from_tree(tree: &DecompositionNode) -> BigUint {
    let mut total = BigUint::one();
    for (_, node) in tree.preorder() {
        match node.kind {
            NodeKind::Series => {
                for k in 2..=node.children.len() {
                    total *= k as u64;
                }
            }
            NodeKind::Prime => total *= 2u32,
            NodeKind::Leaf | NodeKind::Parallel => {}
        }
    }
    total
}

/// Lazily streams every transitive orientation of `g` in a fixed order.
///
/// The order is lexicographic over the per-node choices, nodes taken in tree
/// pre-order with the last node varying fastest; series permutations run in
/// lexicographic order of child representatives, prime nodes yield the
/// canonical class before its reverse. A non-comparability graph yields
/// nothing.
pub fn enumerate_orientations(g: &Graph, limit: Option<usize>) -> Orientations {
    let colors = color_classes(g);
    let plan = if colors.all_orientable() {
        Plan::new(&decomposition_tree(g)).ok()
    } else {
        None
    };
    let choices = plan.as_ref().map(Plan::first_choices).unwrap_or_default();
    Orientations {
        done: plan.is_none() || limit == Some(0),
        plan: plan.unwrap_or(Plan { nodes: Vec::new() }),
        choices,
        remaining: limit,
    }
}

/// Iterator returned by [`enumerate_orientations`].
#[derive(Debug, Clone)]
pub struct Orientations {
    plan: Plan,
    choices: Vec<NodeChoice>,
    done: bool,
    remaining: Option<usize>,
}

impl Orientations {
    /// The node choices that produce the next orientation.
    pub fn peek_choices(&self) -> Option<BTreeMap<NodePath, NodeChoice>> {
        if self.done {
            return None;
        }
        Some(
            self.plan
                .nodes
                .iter()
                .map(|n| n.path.clone())
                .zip(self.choices.iter().cloned())
                .collect(),
        )
    }

    fn advance(&mut self) {
        for choice in self.choices.iter_mut().rev() {
            let carry = match choice {
                NodeChoice::Series(perm) => !next_permutation(perm),
                NodeChoice::Prime(dir) => {
                    let wrapped = *dir == PrimeDirection::Reversed;
                    *dir = if wrapped {
                        PrimeDirection::Canonical
                    } else {
                        PrimeDirection::Reversed
                    };
                    wrapped
                }
            };
            if !carry {
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.done {
            return None;
        }
        let o = self
            .plan
            .materialize(&self.choices)
            .expect("plan choices are well formed");
        self.advance();
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
            if *r == 0 {
                self.done = true;
            }
        }
        Some(o)
    }
}

fn out_sets(g: &Graph, o: &Orientation) -> Result<Vec<VertexSet>> {
    if o.len() != g.edge_count() {
        return Err(Error::OrientationMismatch("arc count differs from edge count"));
    }
    let mut out = alloc::vec![VertexSet::new(); g.vertex_count()];
    let mut seen = BTreeSet::new();
    for &d in o.arcs() {
        if !g.has_edge(d.tail, d.head) {
            return Err(not_an_edge(g, d.tail, d.head));
        }
        if !seen.insert(d.undirected()) {
            return Err(Error::OrientationMismatch("an edge is oriented both ways"));
        }
        out[d.tail].insert(d.head);
    }
    Ok(out)
}

/// Whether `o` (one direction per edge of `g`) is transitive: `x→y`, `y→z`
/// imply that `xz` is an edge directed `x→z`.
pub fn is_transitive(g: &Graph, o: &Orientation) -> Result<bool> {
    let out = out_sets(g, o)?;
    Ok(g.vertices().all(|x| out[x].iter().all(|y| out[y].is_subset(&out[x]))))
}

pub const MAX_ORDER_MODULE_VERTICES: usize = 10;

/// Strong modules of the partial order `o`, by brute force.
///
/// `X` is a module of the order when every outside `c` relates uniformly to
/// `X` in each direction: `c→x` for all or no `x ∈ X`, and likewise `x→c`.
pub fn strong_modules_of_order(g: &Graph, o: &Orientation) -> Result<BTreeSet<VertexSet>> {
    if g.vertex_count() > MAX_ORDER_MODULE_VERTICES {
        return Err(Error::OracleScale {
            what: "vertex count",
            actual: g.vertex_count(),
            limit: MAX_ORDER_MODULE_VERTICES,
        });
    }
    if !is_transitive(g, o)? {
        return Err(Error::NotTransitive);
    }
    let modules = directed_module_masks(g.vertex_count(), o);
    let overlapped = |x: u64, y: u64| x & y != 0 && x & !y != 0 && y & !x != 0;
    Ok(modules
        .iter()
        .filter(|&&x| !modules.iter().any(|&y| overlapped(x, y)))
        .map(|&x| (0..g.vertex_count()).filter(|v| x & (1 << v) != 0).collect())
        .collect())
}

/// Every non-empty module of the digraph `o`, as vertex bitmasks.
fn directed_module_masks(n: usize, o: &Orientation) -> Vec<u64> {
    let mut out = alloc::vec![0u64; n];
    let mut inn = alloc::vec![0u64; n];
    for d in o.arcs() {
        out[d.tail] |= 1 << d.head;
        inn[d.head] |= 1 << d.tail;
    }
    let uniform = |m: u64, x: u64| m & x == 0 || m & x == x;
    (1u64..(1u64 << n))
        .filter(|&x| {
            (0..n)
                .filter(|&c| x & (1 << c) == 0)
                .all(|c| uniform(out[c], x) && uniform(inn[c], x))
        })
        .collect()
}

/// Every non-empty module of the digraph `o` (test support, `|V| ≤ 10`).
pub fn modules_of_order(g: &Graph, o: &Orientation) -> Result<BTreeSet<VertexSet>> {
    if g.vertex_count() > MAX_ORDER_MODULE_VERTICES {
        return Err(Error::OracleScale {
            what: "vertex count",
            actual: g.vertex_count(),
            limit: MAX_ORDER_MODULE_VERTICES,
        });
    }
    out_sets(g, o)?;
    Ok(directed_module_masks(g.vertex_count(), o)
        .into_iter()
        .map(|x| {
            (0..g.vertex_count())
                .filter(|v| x & (1 << v) != 0)
                .collect::<VertexSet>()
        })
        .collect())
}

/// Vertex pairs `(tail, head)` by label, for display and serialization.
pub fn labeled_arcs<'g>(g: &'g Graph, o: &Orientation) -> Vec<(&'g str, &'g str)> {
    o.arcs()
        .iter()
        .map(|d| (g.label(d.tail).as_str(), g.label(d.head).as_str()))
        .collect()
}

/// Orientation from labelled `(tail, head)` pairs.
pub fn orientation_from_labels<'a>(
    g: &Graph,
    pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
) -> Result<Orientation> {
    let lookup = |s: &str| -> Result<Vertex> { g.vertex_by_label(s).ok_or_else(|| Error::UnknownLabel(s.into())) };
    let mut arcs = Vec::new();
    for (t, h) in pairs {
        let (t, h) = (lookup(t)?, lookup(h)?);
        if t == h {
            return Err(Error::SelfLoop(g.label(t).as_str().into()));
        }
        arcs.push(DirectedEdge::new(t, h));
    }
    let n = arcs.len();
    let o = Orientation::from_arcs(arcs);
    if o.len() != n {
        return Err(Error::OrientationMismatch("duplicate arc"));
    }
    Ok(o)
}

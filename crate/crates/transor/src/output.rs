//! JSON, DOT and text renderings. Every collection is emitted in vertex
//! order, so equal inputs give byte-identical output.

use std::fmt::Write as _;

use serde::Serialize;
use transor_core::{ColorMap, DecompositionNode, Edge, Graph, Multiplex, Orientation, VertexSet};

fn names<'g>(g: &'g Graph, s: &VertexSet) -> Vec<&'g str> {
    s.iter().map(|v| g.label(v).as_str()).collect()
}

fn pair(g: &Graph, e: Edge) -> [&str; 2] {
    [g.label(e.lo()).as_str(), g.label(e.hi()).as_str()]
}

#[derive(Debug, Serialize)]
pub struct TreeJson<'g> {
    pub vertices: Vec<&'g str>,
    pub kind: &'static str,
    pub children: Vec<TreeJson<'g>>,
}

impl<'g> TreeJson<'g> {
    pub fn new(g: &'g Graph, node: &DecompositionNode) -> Self {
        Self {
            vertices: names(g, &node.vertex_set),
            kind: node.kind.as_str(),
            children: node.children.iter().map(|c| Self::new(g, c)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MultiplexJson<'g> {
    pub node_path: Vec<usize>,
    pub rank: usize,
    pub colors: Vec<usize>,
    pub edges: Vec<[&'g str; 2]>,
}

impl<'g> MultiplexJson<'g> {
    pub fn new(g: &'g Graph, m: &Multiplex) -> Self {
        Self {
            node_path: m.node_path.clone().unwrap_or_default(),
            rank: m.rank,
            colors: m.colors.iter().copied().collect(),
            edges: m.edges.iter().map(|&e| pair(g, e)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ColorJson<'g> {
    pub id: usize,
    pub span: Vec<&'g str>,
    pub edges: Vec<[&'g str; 2]>,
    /// The implication class holding the color's smallest directed edge.
    pub class: Vec<[&'g str; 2]>,
    pub self_inverse: bool,
}

pub fn colors_json<'g>(g: &'g Graph, colors: &ColorMap) -> Vec<ColorJson<'g>> {
    colors
        .colors
        .iter()
        .map(|c| ColorJson {
            id: c.id,
            span: names(g, &c.span),
            edges: c.undirected.iter().map(|&e| pair(g, e)).collect(),
            class: c
                .class_a
                .iter()
                .map(|d| [g.label(d.tail).as_str(), g.label(d.head).as_str()])
                .collect(),
            self_inverse: c.self_inverse,
        })
        .collect()
}

/// One line per color: id, span, edges.
pub fn colors_text(g: &Graph, colors: &ColorMap) -> String {
    let mut out = String::new();
    for c in &colors.colors {
        let edges: Vec<String> = c.undirected.iter().map(|&e| pair(g, e).join("-")).collect();
        let _ = writeln!(
            out,
            "color {} span {{{}}} edges {}{}",
            c.id,
            names(g, &c.span).join(", "),
            edges.join(" "),
            if c.self_inverse { " self-inverse" } else { "" }
        );
    }
    out
}

/// Compact JSON list of `["tail","head"]` pairs sorted by (tail, head).
pub fn orientation_json(g: &Graph, o: &Orientation) -> String {
    let arcs: Vec<[&str; 2]> = o
        .arcs()
        .iter()
        .map(|d| [g.label(d.tail).as_str(), g.label(d.head).as_str()])
        .collect();
    serde_json::to_string(&arcs).expect("string pairs serialize")
}

pub fn tree_json(g: &Graph, tree: &DecompositionNode) -> String {
    serde_json::to_string_pretty(&TreeJson::new(g, tree)).expect("tree serializes")
}

pub fn multiplexes_json(g: &Graph, ms: &[Multiplex]) -> String {
    let v: Vec<MultiplexJson> = ms.iter().map(|m| MultiplexJson::new(g, m)).collect();
    serde_json::to_string_pretty(&v).expect("multiplices serialize")
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The decomposition tree as a Graphviz digraph. Nodes are labelled with
/// their kind and vertex set; series and prime nodes also show the rank of
/// their multiplex.
pub fn tree_dot(g: &Graph, tree: &DecompositionNode, ms: &[Multiplex]) -> String {
    let mut out = String::from("digraph decomposition {\n  node [shape=box, fontname=\"monospace\"];\n");
    let ids: Vec<(Vec<usize>, &DecompositionNode)> = tree.preorder();
    let id_of = |path: &[usize]| ids.iter().position(|(p, _)| p == path).expect("path from preorder");
    for (i, (path, node)) in ids.iter().enumerate() {
        let mut label = format!(
            "{}\\n{{{}}}",
            node.kind,
            dot_escape(&names(g, &node.vertex_set).join(", "))
        );
        if let Some(m) = ms.iter().find(|m| m.node_path.as_ref() == Some(path)) {
            let _ = write!(label, "\\nrank {}", m.rank);
        }
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
        if let Some((_, parent)) = path.split_last() {
            let _ = writeln!(out, "  n{} -> n{i};", id_of(parent));
        }
    }
    out.push_str("}\n");
    out
}

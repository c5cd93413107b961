//! Structural checks run over the graph corpus, each against brute-force
//! ground truth from `transor_core::oracle`.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use transor_core::decomposition::{decomposition_tree_in_order, maximal_strong_partition_in_order};
use transor_core::forcing::ColorId;
use transor_core::multiplex::crossing_edges;
use transor_core::oracle::{self, brute_force_modules, brute_force_strong_modules};
use transor_core::orientation::modules_of_order;
use transor_core::*;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Everything the checks need about one graph, computed once.
pub struct Ctx {
    pub g: Graph,
    pub colors: ColorMap,
    pub tree: DecompositionNode,
    pub multiplices: Vec<Multiplex>,
    pub modules: BTreeSet<VertexSet>,
    pub strong: BTreeSet<VertexSet>,
    pub comparability: bool,
    pub count: BigUint,
    pub orientations: Vec<Orientation>,
}

pub const MAX_ENUMERATED: usize = 50_000;

impl Ctx {
    pub fn new(g: &Graph) -> Self {
        let colors = color_classes(g);
        let tree = decomposition_tree(g);
        let multiplices = multiplex_partition(g, &tree, &colors);
        let count = count_orientations(g);
        let orientations = if count <= BigUint::from(MAX_ENUMERATED) {
            enumerate_orientations(g, None).collect()
        } else {
            Vec::new()
        };
        Self {
            g: g.clone(),
            modules: brute_force_modules(g).expect("corpus graphs are oracle-sized"),
            strong: brute_force_strong_modules(g).expect("corpus graphs are oracle-sized"),
            comparability: is_comparability(g),
            colors,
            tree,
            multiplices,
            count,
            orientations,
        }
    }

    fn color_edges_within(&self, c: ColorId, x: &VertexSet) -> usize {
        self.colors.colors[c]
            .undirected
            .iter()
            .filter(|e| x.contains(e.lo()) && x.contains(e.hi()))
            .count()
    }

    /// Every multiplex of the graph: the maximal ones plus, at series nodes,
    /// those generated by simplices on a proper subset (of size ≥ 2) of the
    /// children. Returned with a flag telling whether it is maximal.
    pub fn all_multiplices(&self) -> Vec<(Multiplex, bool)> {
        let mut out = Vec::new();
        for (path, node) in self.tree.preorder() {
            match node.kind {
                NodeKind::Prime => {
                    let m = self
                        .multiplices
                        .iter()
                        .find(|m| m.node_path.as_deref() == Some(&path[..]))
                        .unwrap();
                    out.push((m.clone(), true));
                }
                NodeKind::Series => {
                    let k = node.children.len();
                    if k > 7 {
                        continue;
                    }
                    for mask in 1u32..(1 << k) {
                        if mask.count_ones() < 2 {
                            continue;
                        }
                        let chosen: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
                        let mut ids = BTreeSet::new();
                        for (a, &i) in chosen.iter().enumerate() {
                            for &j in &chosen[a + 1..] {
                                let x = node.children[i].representative;
                                let y = node.children[j].representative;
                                ids.insert(self.colors.color_of(Edge::new(x, y)).unwrap());
                            }
                        }
                        let m = Multiplex::from_colors(&self.colors, ids, chosen.len() - 1);
                        out.push((m, chosen.len() == k));
                    }
                }
                _ => {}
            }
        }
        out
    }
}

pub fn color_classes_partition_edges(c: &Ctx) -> Check {
    let mut seen = BTreeSet::new();
    for color in &c.colors.colors {
        for e in &color.undirected {
            ensure!(seen.insert(*e), "edge {e:?} in two colors");
            ensure!(c.colors.color_of(*e) == Some(color.id), "edge map disagrees for {e:?}");
        }
        let inv: BTreeSet<_> = color.class_a.iter().map(|d| d.reversed()).collect();
        ensure!(inv == color.class_a_inv, "class_a_inv is not the reversal of class_a");
        ensure!(
            color.self_inverse == !color.class_a.is_disjoint(&color.class_a_inv),
            "self-inverse flag wrong on color {}",
            color.id
        );
        ensure!(
            color.span == Graph::spanned_vertices(&color.undirected),
            "span mismatch"
        );
    }
    ensure!(seen.len() == c.g.edge_count(), "colors miss some edges");
    Ok(())
}

pub fn equal_spans_iff_equal_colors(c: &Ctx) -> Check {
    for a in &c.colors.colors {
        for b in &c.colors.colors {
            ensure!(
                (a.id == b.id) == (a.span == b.span),
                "colors {} and {} share a span",
                a.id,
                b.id
            );
        }
    }
    Ok(())
}

pub fn color_span_is_module(c: &Ctx) -> Check {
    for color in &c.colors.colors {
        ensure!(
            c.modules.contains(&color.span),
            "span of color {} is not a module",
            color.id
        );
        ensure!(is_module(&c.g, &color.span), "is_module disagrees with oracle");
    }
    Ok(())
}

pub fn color_meeting_module_lies_inside(c: &Ctx) -> Check {
    for x in &c.modules {
        for color in &c.colors.colors {
            let inside = c.color_edges_within(color.id, x);
            ensure!(
                inside == 0 || inside == color.undirected.len(),
                "color {} partly inside module {x:?}",
                color.id
            );
        }
    }
    Ok(())
}

fn is_transitive_on(arcs: &BTreeSet<DirectedEdge>, edges: &BTreeSet<Edge>) -> bool {
    arcs.iter().all(|&xy| {
        arcs.iter().filter(|yz| yz.tail == xy.head).all(|&yz| {
            xy.tail != yz.head
                && edges.contains(&Edge::new(xy.tail, yz.head))
                && arcs.contains(&DirectedEdge::new(xy.tail, yz.head))
        })
    })
}

pub fn implication_class_dichotomy(c: &Ctx) -> Check {
    for color in &c.colors.colors {
        if color.self_inverse {
            ensure!(
                color.class_a == color.class_a_inv,
                "self-inverse class differs from its reverse"
            );
            ensure!(
                color.class_a.len() == 2 * color.undirected.len(),
                "self-inverse class is not all of Â"
            );
            if color.undirected.len() <= oracle::MAX_BRUTE_FORCE_EDGES {
                let n = c.g.vertex_count();
                let sub = Graph::from_index_edges(n, color.undirected.iter().map(|e| (e.lo(), e.hi()))).unwrap();
                ensure!(
                    oracle::brute_force_orientations(&sub).unwrap().is_empty(),
                    "self-inverse color {} is transitively orientable",
                    color.id
                );
            }
        } else {
            ensure!(
                color.class_a.is_disjoint(&color.class_a_inv),
                "A meets A⁻¹ on color {}",
                color.id
            );
            ensure!(
                is_transitive_on(&color.class_a, &color.undirected),
                "A not transitive on color {}",
                color.id
            );
            ensure!(
                is_transitive_on(&color.class_a_inv, &color.undirected),
                "A⁻¹ not transitive on color {}",
                color.id
            );
        }
    }
    Ok(())
}

pub fn module_inside_span_has_uniform_apex(c: &Ctx) -> Check {
    for color in &c.colors.colors {
        for x in c
            .modules
            .iter()
            .filter(|x| x.is_subset(&color.span) && **x != color.span)
        {
            let found = color.span.difference(x).iter().any(|a| {
                x.iter()
                    .all(|v| c.g.has_edge(a, v) && c.colors.color_of(Edge::new(a, v)) == Some(color.id))
            });
            ensure!(found, "no uniform apex for module {x:?} inside color {}", color.id);
        }
    }
    Ok(())
}

pub fn triangle_lemma_holds(c: &Ctx) -> Check {
    let v = check_triangle_lemma(&c.g);
    ensure!(v.is_empty(), "triangle lemma violations: {v:?}");
    Ok(())
}

pub fn crossing_spans_meet_in_strong_module(c: &Ctx) -> Check {
    for a in &c.colors.colors {
        for b in &c.colors.colors {
            let x = a.span.intersection(&b.span);
            if a.span.difference(&b.span).is_empty() || b.span.difference(&a.span).is_empty() || x.is_empty() {
                continue;
            }
            ensure!(c.strong.contains(&x), "Ã∩B̃ = {x:?} is not strong");
            ensure!(is_strong_module(&c.g, &x), "is_strong_module disagrees on {x:?}");
        }
    }
    Ok(())
}

fn cross_colors(c: &Ctx, x: &VertexSet, y: &VertexSet) -> BTreeSet<ColorId> {
    x.iter()
        .flat_map(|u| {
            c.g.neighbors(u)
                .intersection(y)
                .iter()
                .map(move |v| Edge::new(u, v))
                .collect::<Vec<_>>()
        })
        .map(|e| c.colors.color_of(e).unwrap())
        .collect()
}

pub fn disjoint_strong_modules_share_one_color(c: &Ctx) -> Check {
    for x in &c.strong {
        for y in c.strong.iter().filter(|y| !y.intersects(x)) {
            let k = cross_colors(c, x, y).len();
            ensure!(k <= 1, "strong modules {x:?} and {y:?} joined by {k} colors");
        }
    }
    Ok(())
}

pub fn outside_vertex_sees_strong_module_in_one_color(c: &Ctx) -> Check {
    for x in c.strong.iter().filter(|x| x.len() < c.g.vertex_count()) {
        for u in c.g.vertex_set().difference(x).iter() {
            let nb = c.g.neighbors(u).intersection(x);
            ensure!(nb.is_empty() || nb == *x, "{u} splits strong module {x:?}");
            ensure!(
                cross_colors(c, &VertexSet::singleton(u), x).len() <= 1,
                "{u} reaches {x:?} in several colors"
            );
        }
    }
    Ok(())
}

pub fn multiplex_meeting_strong_module_lies_inside(c: &Ctx) -> Check {
    for (m, _) in c.all_multiplices() {
        for x in &c.strong {
            let inside = m
                .edges
                .iter()
                .filter(|e| x.contains(e.lo()) && x.contains(e.hi()))
                .count();
            ensure!(
                inside == 0 || inside == m.edges.len(),
                "multiplex {:?} partly inside {x:?}",
                m.colors
            );
        }
    }
    Ok(())
}

pub fn maximal_iff_span_strong(c: &Ctx) -> Check {
    for (m, maximal) in c.all_multiplices() {
        ensure!(
            c.strong.contains(&m.span) == maximal,
            "multiplex {:?}: maximal={maximal}, span strong={}",
            m.colors,
            c.strong.contains(&m.span)
        );
        ensure!(
            is_maximal_multiplex(&c.g, &m) == maximal,
            "is_maximal_multiplex wrong on {:?}",
            m.colors
        );
    }
    Ok(())
}

pub fn extension_iff_not_maximal(c: &Ctx) -> Check {
    for (m, maximal) in c.all_multiplices() {
        let extensible =
            c.g.vertex_set()
                .difference(&m.span)
                .iter()
                .any(|a| simplex_extension_exists(&c.g, &c.colors, &m, a).unwrap());
        ensure!(
            extensible != maximal,
            "multiplex {:?}: maximal={maximal}, extensible={extensible}",
            m.colors
        );
    }
    Ok(())
}

pub fn multiplices_partition_edges(c: &Ctx) -> Check {
    let mut all = BTreeSet::new();
    for m in &c.multiplices {
        let from_colors: BTreeSet<Edge> = m
            .colors
            .iter()
            .flat_map(|&id| c.colors.colors[id].undirected.iter().copied())
            .collect();
        ensure!(
            from_colors == m.edges,
            "multiplex at {:?} is not a union of colors",
            m.node_path
        );
        let node = c.tree.node_at(m.node_path.as_ref().unwrap()).unwrap();
        ensure!(m.span == node.vertex_set, "multiplex span differs from its node");
        all.extend(m.edges.iter().copied());
    }
    ensure!(all == c.g.edges().collect(), "multiplices do not cover E");
    for (i, a) in c.multiplices.iter().enumerate() {
        for b in &c.multiplices[i + 1..] {
            ensure!(a.edges.is_disjoint(&b.edges), "maximal multiplices intersect");
        }
    }
    let spanning = c.multiplices.iter().filter(|m| m.span == c.g.vertex_set()).count();
    ensure!(spanning <= 1, "{spanning} multiplices span V");
    Ok(())
}

pub fn connected_iff_multiplex_spans(c: &Ctx) -> Check {
    if c.g.vertex_count() < 2 {
        return Ok(());
    }
    let connected = c.g.connected_components().len() == 1;
    let spans = c.multiplices.iter().any(|m| m.span == c.g.vertex_set());
    ensure!(
        connected == spans,
        "connected={connected} but spanning multiplex={spans}"
    );
    let f = maximal_strong_partition(&c.g).map_err(|e| e.to_string())?;
    ensure!(f.parts.len() >= 2, "F_G = {{V}}");
    Ok(())
}

fn quotient_is_prime(q: &Graph) -> bool {
    q.vertex_count() >= 4
        && q.connected_components().len() == 1
        && q.complement().connected_components().len() == 1
        && brute_force_modules(q)
            .unwrap()
            .iter()
            .all(|x| x.len() == 1 || x.len() == q.vertex_count())
}

pub fn node_shapes(c: &Ctx) -> Check {
    for (path, node) in c.tree.preorder() {
        if node.is_leaf() {
            ensure!(
                node.vertex_set.len() == 1,
                "leaf with {} vertices",
                node.vertex_set.len()
            );
            continue;
        }
        let q = node.quotient.as_ref().unwrap();
        let shapes = [q.edge_count() == 0, q.is_complete(), quotient_is_prime(q)];
        ensure!(
            shapes.iter().filter(|s| **s).count() == 1,
            "node {path:?} shapes {shapes:?}"
        );
        ensure!(node.children.len() >= 2, "internal node with one child");
        let sub = c.g.induced_subgraph(&node.vertex_set).unwrap();
        match node.kind {
            NodeKind::Parallel => {
                ensure!(shapes[0], "parallel node with edges in quotient");
                ensure!(sub.connected_components().len() > 1, "parallel node is connected");
            }
            NodeKind::Series => {
                ensure!(shapes[1], "series node quotient not complete");
                let m = c
                    .multiplices
                    .iter()
                    .find(|m| m.node_path.as_ref() == Some(&path))
                    .unwrap();
                let k = node.children.len();
                ensure!(m.rank == k - 1, "series rank");
                ensure!(
                    m.colors.len() == k * (k - 1) / 2,
                    "series node colors are not pairwise distinct"
                );
                let co: BTreeSet<VertexSet> = sub
                    .complement()
                    .connected_components()
                    .iter()
                    .map(|s| {
                        s.iter()
                            .map(|i| c.g.vertex_by_label(sub.label(i).as_str()).unwrap())
                            .collect()
                    })
                    .collect();
                let children: BTreeSet<VertexSet> = node.children.iter().map(|ch| ch.vertex_set.clone()).collect();
                ensure!(co == children, "series children are not the co-components");
                if k >= 3 {
                    let mut meets = BTreeSet::new();
                    for &a in &m.colors {
                        for &b in &m.colors {
                            let (sa, sb) = (&c.colors.colors[a].span, &c.colors.colors[b].span);
                            let x = sa.intersection(sb);
                            if a != b && !sa.difference(sb).is_empty() && !sb.difference(sa).is_empty() && !x.is_empty()
                            {
                                meets.insert(x);
                            }
                        }
                    }
                    ensure!(
                        meets == children,
                        "span intersections differ from the children at {path:?}"
                    );
                }
            }
            NodeKind::Prime => {
                ensure!(shapes[2], "prime node quotient is not prime");
                let m = c
                    .multiplices
                    .iter()
                    .find(|m| m.node_path.as_ref() == Some(&path))
                    .unwrap();
                ensure!(
                    m.rank == 1 && m.colors.len() == 1,
                    "prime multiplex is not a single color"
                );
                let crossing: BTreeSet<Edge> = crossing_edges(&c.g, node).collect();
                ensure!(crossing == m.edges, "prime multiplex is not the crossing edge set");
                let qc = color_classes(q);
                ensure!(
                    qc.len() == 1 && qc.colors[0].span == q.vertex_set(),
                    "prime quotient color count"
                );
                let reps: Vec<Vertex> = node.children.iter().map(|ch| ch.representative).collect();
                for e in q.edges() {
                    ensure!(
                        m.edges.contains(&Edge::new(reps[e.lo()], reps[e.hi()])),
                        "quotient edge outside M"
                    );
                }
            }
            NodeKind::Leaf => unreachable!(),
        }
    }
    Ok(())
}

pub fn tree_nodes_are_strong_modules(c: &Ctx) -> Check {
    let nodes: BTreeSet<VertexSet> = c.tree.strong_modules().into_iter().collect();
    ensure!(nodes == c.strong, "tree nodes {nodes:?} vs oracle {:?}", c.strong);
    for x in &c.modules {
        ensure!(
            is_strong_module(&c.g, x) == c.strong.contains(x),
            "is_strong_module wrong on {x:?}"
        );
    }
    Ok(())
}

pub fn strength_restricts_to_strong_subgraphs(c: &Ctx) -> Check {
    for y in &c.strong {
        let sub = c.g.induced_subgraph(y).unwrap();
        let back = |s: &VertexSet| -> VertexSet {
            s.iter()
                .map(|i| c.g.vertex_by_label(sub.label(i).as_str()).unwrap())
                .collect()
        };
        let sub_strong: BTreeSet<VertexSet> = decomposition_tree(&sub).strong_modules().iter().map(back).collect();
        let under_y: BTreeSet<VertexSet> = c.strong.iter().filter(|x| x.is_subset(y)).cloned().collect();
        ensure!(
            sub_strong == under_y,
            "strong modules of G({y:?}) differ from those of G under it"
        );
    }
    Ok(())
}

pub fn quotient_modules_lift(c: &Ctx) -> Check {
    if c.g.vertex_count() < 2 {
        return Ok(());
    }
    let p = maximal_strong_partition(&c.g).unwrap();
    let q = quotient(&c.g, &p).unwrap();
    let qm = brute_force_modules(&q).unwrap();
    let qs = brute_force_strong_modules(&q).unwrap();
    let k = p.parts.len();
    for mask in 1u32..(1 << k) {
        let chosen: VertexSet = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let mut union = VertexSet::new();
        for i in &chosen {
            union.union_with(&p.parts[i]);
        }
        ensure!(
            qm.contains(&chosen) == c.modules.contains(&union),
            "module lift fails for {chosen:?}"
        );
        ensure!(
            qs.contains(&chosen) == c.strong.contains(&union),
            "strong lift fails for {chosen:?}"
        );
    }
    Ok(())
}

pub fn quotient_conserves_colors(c: &Ctx) -> Check {
    if c.g.vertex_count() < 2 {
        return Ok(());
    }
    let p = maximal_strong_partition(&c.g).unwrap();
    for pick_last in [false, true] {
        let reps: Vec<Vertex> = p
            .parts
            .iter()
            .map(|x| if pick_last { x.last() } else { x.first() }.unwrap())
            .collect();
        let rep_set: VertexSet = reps.iter().copied().collect();
        let q = c.g.induced_subgraph(&rep_set).unwrap();
        let qc = color_classes(&q);
        let lift = |e: Edge| Edge::new(rep_set.iter().nth(e.lo()).unwrap(), rep_set.iter().nth(e.hi()).unwrap());
        let qe: Vec<Edge> = q.edges().collect();
        for &e in &qe {
            for &f in &qe {
                let same_q = qc.color_of(e) == qc.color_of(f);
                let same_g = c.colors.color_of(lift(e)) == c.colors.color_of(lift(f));
                ensure!(
                    same_q == same_g,
                    "quotient colors differ from G colors (reps last={pick_last})"
                );
            }
        }
    }
    Ok(())
}

pub fn decomposable_spanning_color_has_nontrivial_maximal(c: &Ctx) -> Check {
    let n = c.g.vertex_count();
    let decomposable = c.modules.iter().any(|x| x.len() > 1 && x.len() < n);
    let spanning = c.colors.colors.iter().any(|col| col.span.len() == n);
    if n > 2 && decomposable && spanning {
        let f = maximal_strong_partition(&c.g).unwrap();
        ensure!(
            f.parts.iter().any(|x| x.len() >= 2),
            "no non-trivial maximal strong module"
        );
    }
    Ok(())
}

pub fn partition_is_order_independent(c: &Ctx) -> Check {
    let n = c.g.vertex_count();
    if n < 2 {
        return Ok(());
    }
    let base: Vec<Vertex> = c.g.vertices().collect();
    let reference = maximal_strong_partition_in_order(&c.g, &base).unwrap();
    let tree = decomposition_tree_in_order(&c.g, &base);
    for seed in 0..4u64 {
        let order = shuffled(&base, seed);
        ensure!(
            maximal_strong_partition_in_order(&c.g, &order).unwrap() == reference,
            "partition depends on order"
        );
        ensure!(
            decomposition_tree_in_order(&c.g, &order) == tree,
            "tree depends on order"
        );
    }
    let mut rev = base.clone();
    rev.reverse();
    ensure!(decomposition_tree_in_order(&c.g, &rev) == tree, "tree depends on order");
    Ok(())
}

/// Fisher–Yates driven by a SplitMix64 stream (test-only shuffling).
pub fn shuffled<T: Clone>(xs: &[T], seed: u64) -> Vec<T> {
    let mut state = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut next = || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    let mut v = xs.to_vec();
    for i in (1..v.len()).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
    v
}

pub fn comparability_matches_oracle(c: &Ctx) -> Check {
    let oracle_count = oracle_orientations(&c.g).len();
    ensure!(
        c.comparability == (oracle_count > 0),
        "comparability verdict disagrees with oracle"
    );
    ensure!(
        c.count == BigUint::from(oracle_count),
        "count {} vs oracle {oracle_count}",
        c.count
    );
    Ok(())
}

pub fn oracle_orientations(g: &Graph) -> Vec<Orientation> {
    oracle::reference_orientations(g).unwrap()
}

pub fn enumeration_is_exact(c: &Ctx) -> Check {
    if c.count > BigUint::from(MAX_ENUMERATED) {
        return Ok(());
    }
    ensure!(
        BigUint::from(c.orientations.len()) == c.count,
        "stream length differs from count"
    );
    let streamed: BTreeSet<&Orientation> = c.orientations.iter().collect();
    ensure!(streamed.len() == c.orientations.len(), "stream repeats an orientation");
    let oracle = oracle_orientations(&c.g);
    ensure!(
        streamed == oracle.iter().collect(),
        "streamed set differs from oracle set"
    );
    for o in &c.orientations {
        ensure!(is_transitive(&c.g, o) == Ok(true), "emitted orientation not transitive");
    }
    Ok(())
}

pub fn orientation_picks_class_or_reverse(c: &Ctx) -> Check {
    for o in &c.orientations {
        for color in &c.colors.colors {
            let chosen: BTreeSet<DirectedEdge> = color.undirected.iter().map(|&e| o.direction(e).unwrap()).collect();
            ensure!(
                chosen == color.class_a || chosen == color.class_a_inv,
                "orientation splits color {}",
                color.id
            );
        }
    }
    Ok(())
}

pub fn order_has_same_strong_modules(c: &Ctx) -> Check {
    if c.g.vertex_count() > 8 {
        return Ok(());
    }
    for o in &c.orientations {
        let s = strong_modules_of_order(&c.g, o).map_err(|e| e.to_string())?;
        ensure!(s == c.strong, "order strong modules {s:?} vs graph {:?}", c.strong);
        let directed = modules_of_order(&c.g, o).map_err(|e| e.to_string())?;
        ensure!(
            directed.is_subset(&c.modules),
            "a module of the order is not a module of the graph"
        );
    }
    Ok(())
}

pub fn first_orientation_is_canonical(c: &Ctx) -> Check {
    let Some(first) = c.orientations.first() else {
        return Ok(());
    };
    // canonical prime choice: the smallest directed crossing edge points forward
    for (path, node) in c.tree.preorder() {
        match node.kind {
            NodeKind::Prime => {
                let smallest = crossing_edges(&c.g, node).map(|e| e.forward()).min().unwrap();
                ensure!(
                    first.contains(smallest),
                    "prime node {path:?} not canonical in first orientation"
                );
            }
            NodeKind::Series => {
                for (i, ci) in node.children.iter().enumerate() {
                    for cj in &node.children[i + 1..] {
                        let d = DirectedEdge::new(ci.representative, cj.representative);
                        ensure!(
                            first.contains(d),
                            "series node {path:?} not identity in first orientation"
                        );
                    }
                }
            }
            _ => {}
        }
    }
    Ok(())
}

pub type NamedCheck = (&'static str, fn(&Ctx) -> Check);

pub const STRUCTURE_CHECKS: &[NamedCheck] = &[
    ("colors partition the edges", color_classes_partition_edges),
    ("equal spans iff equal colors", equal_spans_iff_equal_colors),
    ("color spans are modules", color_span_is_module),
    (
        "a color meeting a module lies inside it",
        color_meeting_module_lies_inside,
    ),
    ("implication class dichotomy", implication_class_dichotomy),
    (
        "module inside a span has a uniform apex",
        module_inside_span_has_uniform_apex,
    ),
    ("triangle lemma", triangle_lemma_holds),
    (
        "crossing spans meet in a strong module",
        crossing_spans_meet_in_strong_module,
    ),
    (
        "disjoint strong modules share one color",
        disjoint_strong_modules_share_one_color,
    ),
    (
        "outside vertex sees a strong module in one color",
        outside_vertex_sees_strong_module_in_one_color,
    ),
    (
        "multiplex meeting a strong module lies inside",
        multiplex_meeting_strong_module_lies_inside,
    ),
    ("multiplex maximal iff span strong", maximal_iff_span_strong),
    (
        "simplex extensible iff multiplex not maximal",
        extension_iff_not_maximal,
    ),
    ("maximal multiplices partition E", multiplices_partition_edges),
    ("connected iff a multiplex spans V", connected_iff_multiplex_spans),
    ("node shapes and exclusive trichotomy", node_shapes),
    ("tree nodes are the strong modules", tree_nodes_are_strong_modules),
    (
        "strength restricts to strong subgraphs",
        strength_restricts_to_strong_subgraphs,
    ),
    ("quotient modules lift to unions", quotient_modules_lift),
    ("quotient conserves colors", quotient_conserves_colors),
    (
        "decomposable graph with spanning color",
        decomposable_spanning_color_has_nontrivial_maximal,
    ),
    ("partition independent of seed order", partition_is_order_independent),
];

pub const ORIENTATION_CHECKS: &[NamedCheck] = &[
    ("comparability and count match oracle", comparability_matches_oracle),
    ("enumeration equals oracle set", enumeration_is_exact),
    (
        "orientation picks a class or its reverse",
        orientation_picks_class_or_reverse,
    ),
    ("order has the graph's strong modules", order_has_same_strong_modules),
    ("first orientation is canonical", first_orientation_is_canonical),
];

/// Runs `checks` on every graph; returns failures as `(check, graph, message)`.
pub fn run_checks<'a>(graphs: impl IntoIterator<Item = &'a Graph>, checks: &[NamedCheck]) -> Vec<(String, String)> {
    let mut failures = Vec::new();
    for g in graphs {
        let ctx = Ctx::new(g);
        for (name, check) in checks {
            if let Err(msg) = check(&ctx) {
                failures.push((name.to_string(), format!("{g:?}: {msg}")));
            }
        }
    }
    failures
}

pub fn corpus_by_name() -> BTreeMap<String, Graph> {
    let corpus = oracle::Corpus::standard();
    let mut out = BTreeMap::new();
    for (name, g) in &corpus.fixtures {
        out.insert(name.to_string(), g.clone());
    }
    for (i, g) in corpus.exhaustive.iter().enumerate() {
        out.insert(format!("exhaustive-{i:03}"), g.clone());
    }
    for (i, g) in corpus.random.iter().enumerate() {
        out.insert(format!("random-{i:03}"), g.clone());
    }
    out
}

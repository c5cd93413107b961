//! Brute-force ground truth and test corpora.
//!
//! Nothing in here touches the forcing or decomposition machinery: orientations
//! are found by trying every direction assignment, modules by scanning every
//! vertex subset. The hard size limits are part of the contract, since every
//! routine here is exponential.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, Edge, Graph};
use crate::orientation::Orientation;
use crate::vertex_set::VertexSet;

pub const MAX_BRUTE_FORCE_EDGES: usize = 20;
pub const MAX_BRUTE_FORCE_VERTICES: usize = 12;
pub const MAX_SEARCH_VERTICES: usize = 10;

fn refuse(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::OracleScale { what, actual, limit })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
        .collect()
}

/// `out[y] ⊆ out[x]` for every arc `x→y`; with one arc per edge this is
/// exactly "the orientation is a strict partial order".
fn transitive(out: &[u64]) -> bool {
    out.iter().all(|&ox| {
        let mut ys = ox;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            if out[y] & !ox != 0 {
                return false;
            }
        }
        true
    })
}

fn orientation_from_out(out: &[u64]) -> Orientation {
    let mut arcs = Vec::new();
    for (x, &ox) in out.iter().enumerate() {
        let mut ys = ox;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            arcs.push(DirectedEdge::new(x, y));
        }
    }
    Orientation::from_sorted_arcs(arcs)
}

/// Every transitive orientation of `g`, by testing all `2^|E|` direction
/// assignments. Sorted canonically.
pub fn brute_force_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    refuse("edge count", g.edge_count(), MAX_BRUTE_FORCE_EDGES)?;
    let edges: Vec<Edge> = g.edges().collect();
    let mut out = alloc::vec![0u64; g.vertex_count()];
    for e in &edges {
        out[e.lo()] |= 1 << e.hi();
    }
    let mut found = Vec::new();
    if transitive(&out) {
        found.push(orientation_from_out(&out));
    }
    // Gray code walk: step i flips the edge at the lowest set bit of i.
    for step in 1u64..(1u64 << edges.len()) {
        let e = edges[step.trailing_zeros() as usize];
        out[e.lo()] ^= 1 << e.hi();
        out[e.hi()] ^= 1 << e.lo();
        if transitive(&out) {
            found.push(orientation_from_out(&out));
        }
    }
    found.sort();
    Ok(found)
}

/// Same set as [`brute_force_orientations`], found by depth-first assignment
/// with early rejection of partial assignments that already contain
/// `x→y→z` with `xz` missing or directed `z→x`. Usable past the 20-edge guard.
pub fn search_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    refuse("vertex count", g.vertex_count(), MAX_SEARCH_VERTICES)?;
    let edges: Vec<Edge> = g.edges().collect();
    let adj = adjacency_masks(g);
    let mut out = alloc::vec![0u64; g.vertex_count()];
    let mut inn = alloc::vec![0u64; g.vertex_count()];
    let mut found = Vec::new();
    search(&edges, 0, &adj, &mut out, &mut inn, &mut found);
    found.sort();
    Ok(found)
}

/// Transitive orientations by brute force when the edge guard allows it,
/// otherwise by [`search_orientations`].
pub fn reference_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    if g.edge_count() <= MAX_BRUTE_FORCE_EDGES {
        brute_force_orientations(g)
    } else {
        search_orientations(g)
    }
}

fn search(edges: &[Edge], i: usize, adj: &[u64], out: &mut [u64], inn: &mut [u64], found: &mut Vec<Orientation>) {
    if i == edges.len() {
        debug_assert!(transitive(out));
        found.push(orientation_from_out(out));
        return;
    }
    let e = edges[i];
    for (t, h) in [(e.lo(), e.hi()), (e.hi(), e.lo())] {
        // New arc t→h: predecessors p→t need ph ∈ E and not h→p;
        // successors h→s need ts ∈ E and not s→t.
        let bad_pred = inn[t] & !adj[h] != 0 || inn[t] & out[h] != 0;
        let bad_succ = out[h] & !adj[t] != 0 || out[h] & inn[t] != 0;
        if bad_pred || bad_succ {
            continue;
        }
        out[t] |= 1 << h;
        inn[h] |= 1 << t;
        search(edges, i + 1, adj, out, inn, found);
        out[t] &= !(1 << h);
        inn[h] &= !(1 << t);
    }
}

fn is_module_mask(adj: &[u64], x: u64) -> bool {
    (0..adj.len()).filter(|&c| x & (1 << c) == 0).all(|c| {
        let seen = adj[c] & x;
        seen == 0 || seen == x
    })
}

fn mask_to_set(mut m: u64) -> VertexSet {
    let mut s = VertexSet::new();
    while m != 0 {
        s.insert(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    s
}

fn module_masks(g: &Graph) -> Result<Vec<u64>> {
    refuse("vertex count", g.vertex_count(), MAX_BRUTE_FORCE_VERTICES)?;
    let adj = adjacency_masks(g);
    Ok((1u64..(1u64 << g.vertex_count()))
        .filter(|&x| is_module_mask(&adj, x))
        .collect())
}

fn overlapped(x: u64, y: u64) -> bool {
    x & y != 0 && x & !y != 0 && y & !x != 0
}

/// All non-empty modules of `g`.
pub fn brute_force_modules(g: &Graph) -> Result<BTreeSet<VertexSet>> {
    Ok(module_masks(g)?.into_iter().map(mask_to_set).collect())
}

/// Modules overlapped by no other module.
pub fn brute_force_strong_modules(g: &Graph) -> Result<BTreeSet<VertexSet>> {
    let modules = module_masks(g)?;
    Ok(modules
        .iter()
        .filter(|&&x| !modules.iter().any(|&y| overlapped(x, y)))
        .map(|&x| mask_to_set(x))
        .collect())
}

/// Seeded G(n, p) sample.
///
/// The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64(seed)`).
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order; each draws one
/// `next_u64()` and is kept iff the draw is below `floor(p * 2^64)`, with
/// `p = 1` keeping every pair. The output is identical on every platform.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Saturating float-to-int conversion; exact for every p < 1.
    let threshold = (p * 18_446_744_073_709_551_616.0) as u64;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let draw = rng.next_u64();
            if p >= 1.0 || draw < threshold {
                edges.push((u, v));
            }
        }
    }
    Graph::from_index_edges(n, edges)
}

/// One representative (the one with the smallest edge bitmask) of every
/// isomorphism class of graphs on exactly `n` vertices, `n ≤ 7`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let pair_index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| pair_index(p[u], p[v])).collect())
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1u32 << pairs.len()) {
        for map in &maps {
            let mut image = 0u32;
            for (i, &j) in map.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    image |= 1 << j;
                }
            }
            if image < mask {
                continue 'mask;
            }
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p);
        out.push(Graph::from_index_edges(n, edges).expect("pairs are valid"));
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut all = alloc::vec![current.clone()];
    while crate::orientation::next_permutation(&mut current) {
        all.push(current.clone());
    }
    all
}

/// Named graphs used throughout the tests and documentation.
pub mod fixtures {
    use super::*;

    fn build(vertices: &[&str], edges: &[(&str, &str)]) -> Graph {
        Graph::from_labeled_edges(vertices, edges).expect("fixture is a simple graph")
    }

    /// `({a,b,c,d}, {ab, ac, ad, bc})`: a triangle with a pendant edge.
    pub fn paw() -> Graph {
        build(&[], &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c")])
    }

    pub fn p4() -> Graph {
        build(&[], &[("a", "b"), ("b", "c"), ("c", "d")])
    }

    pub fn c4() -> Graph {
        build(&[], &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    }

    pub fn c5() -> Graph {
        build(&[], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e")])
    }

    /// `K_n` on `a, b, c, ..` (numeric labels past 26 vertices).
    pub fn complete(n: usize) -> Graph {
        let names: Vec<String> = (0..n)
            .map(|i| {
                if n <= 26 {
                    char::from(b'a' + i as u8).to_string()
                } else {
                    i.to_string()
                }
            })
            .collect();
        let mut b = crate::graph::GraphBuilder::new();
        for name in &names {
            b.add_vertex(name.as_str());
        }
        for i in 0..n {
            for j in (i + 1)..n {
                b.add_edge(names[i].as_str(), names[j].as_str()).expect("distinct");
            }
        }
        b.build()
    }

    /// The claw: centre `a`, leaves `b, c, d`.
    pub fn k13() -> Graph {
        build(&[], &[("a", "b"), ("a", "c"), ("a", "d")])
    }

    /// `K2` on `{a1, a2}` joined to the independent pair `{b, c}`.
    pub fn join_k2_2k1() -> Graph {
        build(&[], &[("a1", "a2"), ("a1", "b"), ("a1", "c"), ("a2", "b"), ("a2", "c")])
    }

    pub fn two_k2() -> Graph {
        build(&[], &[("a", "b"), ("c", "d")])
    }

    pub fn k2() -> Graph {
        build(&[], &[("a", "b")])
    }

    pub fn all() -> Vec<(&'static str, Graph)> {
        alloc::vec![
            ("paw", paw()),
            ("p4", p4()),
            ("c4", c4()),
            ("c5", c5()),
            ("k3", complete(3)),
            ("k4", complete(4)),
            ("k13", k13()),
            ("join_k2_2k1", join_k2_2k1()),
            ("2k2", two_k2()),
        ]
    }
}

/// The property-test corpus.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub fixtures: Vec<(&'static str, Graph)>,
    /// One graph per isomorphism class on 1..=6 vertices.
    pub exhaustive: Vec<Graph>,
    pub random: Vec<Graph>,
}

pub const RANDOM_FAMILY_SIZE: usize = 200;
pub const RANDOM_FAMILY_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// `RANDOM_FAMILY_SIZE` seeded graphs: graph `i` has `n = 1 + i % 8`,
/// `p = RANDOM_FAMILY_PROBABILITIES[(i / 8) % 3]` and seed `base_seed + i`.
pub fn random_family(base_seed: u64) -> Vec<Graph> {
    (0..RANDOM_FAMILY_SIZE)
        .map(|i| {
            let n = 1 + i % 8;
            let p = RANDOM_FAMILY_PROBABILITIES[(i / 8) % 3];
            random_graph(n, p, base_seed.wrapping_add(i as u64)).expect("valid probability")
        })
        .collect()
}

impl Corpus {
    pub fn standard() -> Self {
        Self::with_seed(0)
    }

    pub fn with_seed(seed: u64) -> Self {
        Self {
            fixtures: fixtures::all(),
            exhaustive: (1..=6).flat_map(nonisomorphic_graphs).collect(),
            random: random_family(seed),
        }
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.fixtures
            .iter()
            .map(|(_, g)| g)
            .chain(&self.exhaustive)
            .chain(&self.random)
    }
}

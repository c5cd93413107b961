//! Strong-module decomposition of undirected graphs, implication classes,
//! maximal multiplices, and exact counting and enumeration of all transitive
//! orientations.
//!
//! The crate is `no_std` and only needs `alloc`. Vertices carry opaque
//! [`Label`]s; internally they are dense indices in label order, and every
//! output is ordered by that index so results are reproducible.
//!
//! ```
//! use transor_core::{count_orientations, oracle::fixtures};
//!
//! // a triangle with a pendant edge
//! let paw = fixtures::paw();
//! assert_eq!(count_orientations(&paw), 4u32.into());
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod decomposition;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod multiplex;
pub mod oracle;
pub mod orientation;
pub mod vertex_set;

pub use decomposition::{
    decomposition_tree, is_module, is_strong_module, maximal_strong_partition, quotient, smallest_module,
    DecompositionNode, NodeKind, StrongPartition,
};
pub use error::{Error, Result};
pub use forcing::{check_triangle_lemma, color_classes, gamma_forces, is_comparability, ColorClass, ColorMap};
pub use graph::{DirectedEdge, Edge, Graph, GraphBuilder, Label, Vertex};
pub use multiplex::{is_maximal_multiplex, multiplex_partition, simplex_extension_exists, Multiplex};
pub use orientation::{
    count_orientations, enumerate_orientations, is_transitive, materialize, strong_modules_of_order, NodeChoice,
    Orientation, PrimeDirection,
};
pub use vertex_set::VertexSet;

pub use num_bigint::BigUint;

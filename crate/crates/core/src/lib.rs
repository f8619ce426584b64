//! Toric partial orders: flip classes of acyclic orientations of simple
//! graphs, with their toric chains, toric transitive closures, toric Hasse
//! diagrams, toric total extensions and toric antichains.
//!
//! Vertices are indexed `0..n` internally; each graph carries strictly
//! increasing external labels (default `1..=n`) used for all I/O.

pub mod antichains;
pub mod closure;
pub mod cyclic;
pub mod error;
pub mod flips;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod toric;
pub mod tutte;
pub mod verify;
pub mod vset;

pub use antichains::{
    is_combinatorial_antichain, is_geometric_antichain, max_toric_chain, min_antichain_cover,
    min_chain_cover, toric_width, AntichainKind, Cover, Extremum,
};
pub use closure::{extreme_points, graphs_between, ordinary_closure, toric_closure, toric_hasse};
pub use cyclic::{cyclic_restriction, CyclicWord};
pub use error::{Error, Result};
pub use flips::{canonical, equivalent, flip_class, flip_sinks, flip_sources, nu, toric_posets, DirectedCycle, ToricPoset};
pub use geometry::{alpha, point_for, sample_classes, TorusPoint};
pub use graph::{enumerate_acyclic, is_acyclic, orientation_from_order, DirectedEdgeSet, Graph, Orientation};
pub use toric::{all_toric_chains, is_toric_chain, is_toric_extension, toric_directed_paths, toric_total_extensions};
pub use tutte::{count_check, tutte, CountCheck, Polynomial2};
pub use vset::VertexSet;

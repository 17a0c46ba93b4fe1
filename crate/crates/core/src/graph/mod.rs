//! Graph and digraph representations, generators for the graph families the
//! toolkit reproduces, products, the triangulation gadget, orientations, and
//! structural decompositions.

mod automorphism;
mod digraph;
mod generate;
mod orientation;
mod simple;
mod structure;

pub use automorphism::{
    apply_edge_action, automorphisms, compose, edge_action, invert, EdgeAction,
    AUTOMORPHISM_VERTEX_CAP,
};
pub use digraph::Digraph;
pub use generate::{generate, product, triangulation_gadget, Family, ProductKind};
pub use orientation::{orient, orientation_bits_of, Orientation};
pub use simple::SimpleGraph;
pub use structure::{
    bridges, is_strongly_connected, is_strongly_connected_induced, robbins_orientation, scc,
    two_edge_connected_components,
};

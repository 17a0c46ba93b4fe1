//! Exact computation of eternal domination parameters on digraphs, their
//! minima over all orientations of undirected graphs, and compact strategy
//! certificates that witness the upper bounds independently of the solver.
//!
//! Vertices are dense integers `0..n` with `n <= 64`; vertex sets are `u64`
//! bitmasks throughout. All types are immutable after construction and safe
//! to share across threads.

pub mod bits;
pub mod certs;
pub mod error;
pub mod forms;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod orient;
pub mod solver;

pub use error::Error;
pub use graph::{Digraph, Family, Orientation, ProductKind, SimpleGraph};
pub use certs::{MoveMode, StrategyCertificate};
pub use solver::{ConfigFamily, GameResult};

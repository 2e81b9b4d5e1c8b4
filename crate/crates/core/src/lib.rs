//! Snark criticality: edge colourings, nowhere-zero 4-flows and the local
//! operations that relate them on cubic multigraphs.

pub mod cli;
pub mod coloring;
pub mod criticality;
pub mod error;
pub mod flows;
pub mod graph;
pub mod io;
pub mod iso;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{CubicGraph, Edge, EdgeId, Endpoint, VertexId, VertexPair};

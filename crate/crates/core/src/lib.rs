//! Structural metrics of link graphs.
//!
//! First order: degree distribution. Second order: joint degree
//! distribution, k_nn(k), assortative coefficient, rich-club connectivity.
//! Third order: triangle and clustering coefficients, including in- and
//! out-triangles of directed graphs. Also: preferential-attachment and
//! random baseline generators, cross-network curve averaging and a log-log
//! quadratic fit for Δ(k).

pub mod aggregate;
pub mod cli;
pub mod connectivity;
pub mod curve;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod triangles;

pub use curve::MetricCurve;
pub use error::{Error, Result};
pub use graph::{build_directed, build_undirected, DirectedGraph, NodeId, UndirectedGraph};

//! Deciders for the stability, criticality, unfrozenness, and frozenness of
//! the graph parameters alpha (independence number), beta (vertex cover
//! number), omega (clique number), and chi (chromatic number).
//!
//! An exact exponential-time oracle answers every question by definition on
//! small graphs; polynomial engines answer them on seven special classes
//! (empty graphs, complete graphs, paths, trees, forests, bipartite graphs,
//! co-graphs) and are tested element-for-element against the oracle.

pub mod bitset;
pub mod classify;
pub mod error;
pub mod format;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod route;
pub mod verdict;

pub mod bipartite;
pub mod cograph;
pub mod forest;
pub mod generic;
pub mod simple;

pub use error::{Error, Result};
pub use graph::{EdgeRef, Graph, Parameter, Question};
pub use verdict::{Decider, Delta, Element, Sweep, Verdict};

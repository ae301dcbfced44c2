//! Identification of macro causal effects in cluster directed mixed graphs.
//!
//! A C-DMG is a coarse causal graph whose vertices are clusters of micro
//! variables. Clustering an acyclic directed mixed graph (ADMG) can introduce
//! cycles, so every algorithm here works on general mixed graphs with cycles
//! and self-loops.
//!
//! The crate is organised as:
//!
//! - [`graph`] — the mixed-graph representation, reachability, cluster
//!   abstraction and the ADMG/C-DMG compatibility relation;
//! - [`separation`] — blocked walks, primary paths and d-separation;
//! - [`mutilation`] — the edge-removal operations behind every do-calculus
//!   side condition;
//! - [`docalc`] — applicability of the three do-calculus rules on C-DMGs,
//!   plus counterexample construction when a rule fails;
//! - [`hedge`] — C-components, C-forests, SC-projection and SC-hedge
//!   certificates of non-identifiability;
//! - [`estimand`] — symbolic probability expressions with rendering,
//!   parsing, JSON serialisation and exact evaluation;
//! - [`identify`] — the bounded do-calculus rewrite search producing a
//!   three-valued identifiability verdict;
//! - [`oracle`] — brute-force ground truth: compatible-ADMG enumeration,
//!   witness construction, exact discrete SCM inference and the two-model
//!   non-identifiability probe;
//! - [`dsl`] — the text format for graphs, cluster specs and queries.

pub mod docalc;
pub mod dsl;
pub mod estimand;
pub mod graph;
pub mod hedge;
pub mod identify;
pub mod mutilation;
pub mod oracle;
pub mod separation;

pub use graph::{ClusterInfo, ClusterSpec, GraphError, MixedGraph, VertexId, VertexSet};
pub use separation::{Path, Step, StepKind, Walk};

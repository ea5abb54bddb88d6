//! Algorithms for binary matroids, multigraphs and signed graphs, built around
//! one question: is a given cographic matroid with graphic cocircuits
//! signed-graphic?
//!
//! The crate is organised as a small stack. [`gf2`] provides bit-packed GF(2)
//! linear algebra. [`matroid`] builds binary and circuit-presented matroids on
//! top of it, with duality, minors, isomorphism and connectivity. [`graph`]
//! implements multigraphs with the four edge kinds (links, loops, half edges,
//! loose edges) and their cycle matroids; [`signed`] adds signatures and the
//! circuits of the induced signed-graphic matroid. [`catalog`] constructs the
//! named instances used throughout the test suites, including the two
//! excluded-minor matrices `R15` and `R16`. [`recognize`] contains the
//! decision procedures (graphicness, cocircuit audits, decomposition into
//! 3-connected parts, graph realization, family matching and the end-to-end
//! recognition routine), and [`negami`] the extension-based generation used to
//! verify the family characterizations exhaustively at small sizes.

#![forbid(unsafe_code)]

pub mod catalog;
mod error;
pub mod gf2;
pub mod graph;
pub mod matroid;
pub mod negami;
pub mod recognize;
pub mod signed;

pub use catalog::FamilyTag;
pub use error::{Error, Result};
pub use recognize::{Decision, RecognitionReport, RecognizeOptions};
pub use gf2::Gf2Matrix;
pub use graph::{Edge, EdgeKind, Ends, Multigraph};
pub use matroid::{
    BinaryMatroid, CircuitMatroid, Connectivity, MinorWitness, Separation,
};
pub use signed::{Sign, SignedGraph};

/// Default ceiling on ground-set size for the exhaustive matroid searches.
pub const DEFAULT_ELEMENT_BOUND: usize = 20;

/// Default ceiling on edge count for the exhaustive graph searches.
pub const DEFAULT_EDGE_BOUND: usize = 24;

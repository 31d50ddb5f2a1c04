//! Spectral Turán-type objects over dense simple graphs.
//!
//! The crate houses the computable pieces: Turán and complete multipartite
//! constructions, the spectral radius with certified error intervals, clique,
//! joint and book statistics, complete multipartite and `K_r^+` embedding
//! search, and hypothesis/conclusion checkers for the spectral saturation
//! theorems and their supporting facts.
//!
//! Everything here is `no_std` with `alloc`; file formats, the experiment
//! harness and the command line live in the companion `specsat` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
mod count_serde;
pub mod error;
pub mod exact;
pub mod graph;
pub mod random;
pub mod spectral;
pub mod subgraph;
pub mod theorems;

pub use error::Error;
pub use graph::{Graph, PartSpec};
pub use spectral::{SpectralComparison, SpectralEstimate, Verdict};

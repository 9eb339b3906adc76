//! Eccentricity terrain analysis for connected, unweighted, undirected graphs.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure function
//! of an immutable [`Graph`]; file formats, JSON and the command line live in
//! the `hyperterrain` companion crate.
//!
//! Quantities that can be half-integral (the hyperbolicity δ, Gromov products)
//! are carried doubled, as integers: `delta2 == 2δ`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod approx;
pub mod convexity;
mod error;
pub mod exact;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod rng;
pub mod terrain;
pub mod verify;

pub use error::Error;
pub use exact::{DistanceMatrix, EccentricityProfile, HyperbolicityCertificate, LocalityMap};
pub use graph::{DistanceVector, Graph, Path, Vertex};

pub type Result<T, E = Error> = core::result::Result<T, E>;

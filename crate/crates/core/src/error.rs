use core::fmt;

use crate::Vertex;

/// Everything that can go wrong in the core crate.
///
/// Vertex-carrying variants hold *original* labels when they come from
/// [`Graph::from_edges`](crate::Graph::from_edges) and dense ids otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyInput,
    SelfLoop { vertex: u64 },
    DuplicateEdge { u: u64, v: u64 },
    DisconnectedGraph { unreachable: u64, components: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    KOutOfRange { k: u32, max: u32 },
    SizeLimitExceeded { what: &'static str, n: usize, cap: usize },
    InvalidParams(&'static str),
    IterationCapExceeded { cap: usize },
    NotMutuallyDistant { x: Vertex, y: Vertex },
    InvalidTree(&'static str),
    NotAShortestPath { index: usize },
    MissingDelta,
    EmptySet,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => f.write_str("empty edge list"),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::DisconnectedGraph { unreachable, components } => write!(
                f,
                "graph is disconnected ({components} components); vertex {unreachable} is unreachable from the first vertex"
            ),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph with {n} vertices")
            }
            Error::KOutOfRange { k, max } => write!(f, "slice index {k} outside [0, {max}]"),
            Error::SizeLimitExceeded { what, n, cap } => {
                write!(f, "{what}: n = {n} exceeds the cap of {cap}")
            }
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::IterationCapExceeded { cap } => {
                write!(f, "furthest-vertex sweep did not settle within {cap} iterations")
            }
            Error::NotMutuallyDistant { x, y } => {
                write!(f, "vertices {x} and {y} are not a mutually distant pair")
            }
            Error::InvalidTree(msg) => write!(f, "invalid spanning tree: {msg}"),
            Error::NotAShortestPath { index } => {
                write!(f, "path is not a shortest path (first bad vertex at index {index})")
            }
            Error::MissingDelta => f.write_str("operation needs a hyperbolicity value (delta2)"),
            Error::EmptySet => f.write_str("vertex set must be non-empty"),
        }
    }
}

impl core::error::Error for Error {}

//! Furthest-vertex sweeps: the beam (two sweeps), the iterated sweep that
//! settles on a mutually distant pair, and middle-vertex selection.

use alloc::vec::Vec;

use crate::graph::canonical_path_by;
use crate::{DistanceVector, Error, Graph, Path, Result, Vertex};

/// The vertex sequence `v_0, v_1, …, v_t` of an iterated sweep, where each
/// `v_{i+1}` is the smallest-id vertex furthest from `v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepTrace {
    pub sequence: Vec<Vertex>,
    /// `dists[i] = d(v_i, v_{i+1})`.
    pub dists: Vec<u32>,
    /// `(v_{t−1}, v_t)`.
    pub terminal_pair: (Vertex, Vertex),
    /// Whether the terminal pair was confirmed mutually distant.
    pub mutual: bool,
    /// BFS sweeps performed.
    pub sweeps: usize,
}

/// A finished sweep together with BFS vectors from both terminal vertices.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub trace: SweepTrace,
    pub from_x: DistanceVector,
    pub from_y: DistanceVector,
}

/// Smallest-id member of `F(v)`.
pub fn furthest_vertex(g: &Graph, v: Vertex) -> Vertex {
    g.bfs(v).furthest()
}

/// Iterates `v_{i+1} = furthest(v_i)` from `start` until the last two vertices
/// are mutually distant, i.e. until `e(v_t) = d(v_{t−1}, v_t)`.
///
/// The step distances strictly increase until then, so the loop is bounded by
/// the diameter; the `n` cap only guards against a logic error.
pub fn mutually_distant_pair(g: &Graph, start: Vertex) -> Result<Sweep> {
    g.check_vertex(start)?;
    let mut sequence = Vec::from([start]);
    let mut dists = Vec::new();
    let mut prev = g.bfs(start);
    let mut sweeps = 1;
    loop {
        let next = prev.furthest();
        let step = prev.eccentricity();
        sequence.push(next);
        dists.push(step);
        let cur = g.bfs(next);
        sweeps += 1;
        if cur.eccentricity() == step {
            let trace = SweepTrace { terminal_pair: (prev.source, next), sequence, dists, mutual: true, sweeps };
            return Ok(Sweep { trace, from_x: prev, from_y: cur });
        }
        if sweeps > g.n() {
            return Err(Error::IterationCapExceeded { cap: g.n() });
        }
        prev = cur;
    }
}

/// `(x, y)` with `x = furthest(z)` and `y = furthest(x)`.
pub fn beam(g: &Graph, z: Vertex) -> (Vertex, Vertex) {
    let x = furthest_vertex(g, z);
    (x, furthest_vertex(g, x))
}

/// The beam with the BFS vectors of both ends.
pub(crate) fn beam_with_distances(g: &Graph, z: Vertex) -> (DistanceVector, DistanceVector) {
    let x = furthest_vertex(g, z);
    let from_x = g.bfs(x);
    let y = from_x.furthest();
    (from_x, g.bfs(y))
}

/// Path vertex at index `⌊len/2⌋` from the first endpoint.
pub fn middle_vertex(path: &Path) -> Vertex {
    path.vertices[path.len() / 2]
}

/// Middle vertex of the canonical shortest path from `from_x.source` to `y`.
pub(crate) fn middle_of_canonical(g: &Graph, from_x: &DistanceVector, y: Vertex) -> Vertex {
    middle_vertex(&canonical_path_by(g, |v| from_x.get(v), from_x.source, y))
}

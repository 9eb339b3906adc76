//! Immutable compressed adjacency plus the BFS-based metric primitives every
//! other module builds on: distances, intervals, slices, disks and Gromov
//! products.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// Marker for "not reached yet" inside BFS buffers. Never escapes a finished
/// BFS because graphs are connected.
pub(crate) const UNREACHED: u32 = u32::MAX;

/// A finite, simple, connected, undirected graph over dense ids.
///
/// Neighbor lists are sorted ascending. Dense ids are assigned in ascending
/// order of the original labels, so "smallest id" and "smallest label" agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    labels: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list over arbitrary non-negative labels.
    ///
    /// Rejects empty input, self-loops, repeated edges (in either orientation)
    /// and disconnected graphs; errors name the offending labels.
    pub fn from_edges(edges: &[(u64, u64)]) -> Result<Graph> {
        if edges.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut labels: Vec<u64> = Vec::with_capacity(edges.len() * 2);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            labels.push(u);
            labels.push(v);
        }
        labels.sort_unstable();
        labels.dedup();
        let id = |l: u64| labels.binary_search(&l).expect("label collected above");
        let dense: Vec<(Vertex, Vertex)> = edges.iter().map(|&(u, v)| (id(u), id(v))).collect();
        Self::assemble(labels.len(), &dense, labels.clone())
    }

    /// Builds a graph whose vertices are exactly `0..n` (labels equal ids).
    ///
    /// Every id in range must be touched by at least one edge, otherwise the
    /// graph is reported as disconnected.
    pub fn from_dense_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        if edges.is_empty() || n == 0 {
            return Err(Error::EmptyInput);
        }
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u as u64 });
            }
        }
        Self::assemble(n, edges, (0..n as u64).collect())
    }

    fn assemble(n: usize, edges: &[(Vertex, Vertex)], labels: Vec<u64>) -> Result<Graph> {
        let mut pairs: Vec<(Vertex, Vertex)> =
            edges.iter().map(|&(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(Error::DuplicateEdge { u: labels[u], v: labels[v] });
        }

        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        // pairs are sorted by (u, v): pushing v onto u yields ascending lists for
        // the smaller endpoint; the larger endpoint's lists are sorted below
        for &(u, v) in &pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }

        let g = Graph { offsets, targets, labels };
        g.check_connected()?;
        Ok(g)
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut components = 0;
        let mut first_unreachable = None;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            if components == 1 && first_unreachable.is_none() {
                first_unreachable = Some(s);
            }
            comp[s] = components;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = components;
                        queue.push_back(w);
                    }
                }
            }
            components += 1;
        }
        match first_unreachable {
            None => Ok(()),
            Some(v) => Err(Error::DisconnectedGraph { unreachable: self.labels[v], components }),
        }
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Original label of a dense id.
    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Dense id of an original label.
    pub fn vertex_of(&self, label: u64) -> Option<Vertex> {
        self.labels.binary_search(&label).ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Hop distances from `source`. Panics if `source` is out of range.
    pub fn bfs(&self, source: Vertex) -> DistanceVector {
        let mut dist = Vec::new();
        self.bfs_multi_into(&[source], &mut dist, &mut Vec::new());
        DistanceVector { source, dist }
    }

    /// Distances to the nearest of `sources`, written into `dist`.
    ///
    /// `queue` is scratch space; both buffers are reused across calls so
    /// repeated sweeps do not allocate.
    pub fn bfs_multi_into(&self, sources: &[Vertex], dist: &mut Vec<u32>, queue: &mut Vec<Vertex>) {
        dist.clear();
        dist.resize(self.n(), UNREACHED);
        queue.clear();
        for &s in sources {
            assert!(s < self.n(), "BFS source {s} out of range (n = {})", self.n());
            if dist[s] == UNREACHED {
                dist[s] = 0;
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u] + 1;
            for &w in self.neighbors(u) {
                if dist[w] == UNREACHED {
                    dist[w] = du;
                    queue.push(w);
                }
            }
        }
    }

    /// Distances from a set of sources.
    pub fn bfs_multi(&self, sources: &[Vertex]) -> Vec<u32> {
        let mut dist = Vec::new();
        self.bfs_multi_into(sources, &mut dist, &mut Vec::new());
        dist
    }
}

/// Hop distances from one source to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: Vertex,
    pub dist: Vec<u32>,
}

impl DistanceVector {
    pub fn get(&self, v: Vertex) -> u32 {
        self.dist[v]
    }

    /// Eccentricity of the source.
    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Smallest-id vertex at maximum distance.
    pub fn furthest(&self) -> Vertex {
        let e = self.eccentricity();
        self.dist.iter().position(|&d| d == e).unwrap_or(self.source)
    }

    /// All vertices at maximum distance, ascending.
    pub fn furthest_set(&self) -> Vec<Vertex> {
        let e = self.eccentricity();
        (0..self.dist.len()).filter(|&v| self.dist[v] == e).collect()
    }
}

/// `I(x, y)`: vertices lying on some shortest path between the two sources.
pub fn interval_from(dx: &DistanceVector, dy: &DistanceVector) -> Vec<Vertex> {
    let dxy = dx.get(dy.source);
    (0..dx.dist.len()).filter(|&v| dx.dist[v] + dy.dist[v] == dxy).collect()
}

pub fn interval(g: &Graph, x: Vertex, y: Vertex) -> Vec<Vertex> {
    interval_from(&g.bfs(x), &g.bfs(y))
}

/// `S_k(x, y)`: interval vertices at distance `k` from `x`.
pub fn slice_from(dx: &DistanceVector, dy: &DistanceVector, k: u32) -> Result<Vec<Vertex>> {
    let dxy = dx.get(dy.source);
    if k > dxy {
        return Err(Error::KOutOfRange { k, max: dxy });
    }
    Ok((0..dx.dist.len()).filter(|&v| dx.dist[v] == k && dx.dist[v] + dy.dist[v] == dxy).collect())
}

pub fn slice(g: &Graph, x: Vertex, y: Vertex, k: u32) -> Result<Vec<Vertex>> {
    slice_from(&g.bfs(x), &g.bfs(y), k)
}

/// `D(S, r)`: vertices within distance `r` of the set `centers`, ascending.
pub fn disk(g: &Graph, centers: &[Vertex], r: u32) -> Result<Vec<Vertex>> {
    if centers.is_empty() {
        return Err(Error::EmptySet);
    }
    for &c in centers {
        g.check_vertex(c)?;
    }
    let dist = g.bfs_multi(centers);
    Ok((0..g.n()).filter(|&v| dist[v] <= r).collect())
}

/// Doubled Gromov product `2·(x|y)_z = d(x,z) + d(y,z) − d(x,y)`.
pub fn gromov_product_doubled(g: &Graph, x: Vertex, y: Vertex, z: Vertex) -> u32 {
    let dz = g.bfs(z);
    let dx = g.bfs(x);
    dz.get(x) + dz.get(y) - dx.get(y)
}

/// An ordered vertex sequence; constructed paths are always shortest paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Path {
        Path { vertices }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("non-empty path")
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    /// Confirms the sequence is a shortest path of `g`.
    pub fn check_shortest(&self, g: &Graph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::NotAShortestPath { index: 0 });
        }
        for &v in &self.vertices {
            g.check_vertex(v)?;
        }
        let d = g.bfs(self.first());
        for (i, &v) in self.vertices.iter().enumerate() {
            if d.get(v) as usize != i {
                return Err(Error::NotAShortestPath { index: i });
            }
            if i > 0 && !g.has_edge(self.vertices[i - 1], v) {
                return Err(Error::NotAShortestPath { index: i });
            }
        }
        Ok(())
    }
}

/// The deterministic representative of `P(from, to)`: walking back from `to`,
/// always step to the smallest-id neighbor one hop closer to `from`.
pub fn canonical_shortest_path(g: &Graph, from: Vertex, to: Vertex) -> Path {
    let d = g.bfs(from);
    canonical_path_by(g, |v| d.get(v), from, to)
}

/// As [`canonical_shortest_path`] with distances to `from` supplied by the
/// caller (a BFS vector or a row of a distance matrix).
pub fn canonical_path_by(g: &Graph, dist_from: impl Fn(Vertex) -> u32, from: Vertex, to: Vertex) -> Path {
    let mut rev = Vec::with_capacity(dist_from(to) as usize + 1);
    let mut cur = to;
    rev.push(cur);
    while cur != from {
        let dc = dist_from(cur);
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist_from(w) + 1 == dc)
            .expect("connected graph has a predecessor on every BFS layer");
        rev.push(cur);
    }
    rev.reverse();
    Path { vertices: rev }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_dense_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_dense_edges(n, &e).unwrap()
    }

    #[test]
    fn builds_p3() {
        let g = Graph::from_edges(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(&[(0, 1), (2, 3)]),
            Err(Error::DisconnectedGraph { unreachable: 2, components: 2 })
        );
        assert_eq!(Graph::from_edges(&[(0, 0)]), Err(Error::SelfLoop { vertex: 0 }));
        assert_eq!(Graph::from_edges(&[]), Err(Error::EmptyInput));
        assert_eq!(Graph::from_edges(&[(5, 7), (7, 5)]), Err(Error::DuplicateEdge { u: 5, v: 7 }));
    }

    #[test]
    fn relabels_densely_in_label_order() {
        let g = Graph::from_edges(&[(100, 7), (7, 42)]).unwrap();
        assert_eq!(g.labels(), &[7, 42, 100]);
        assert_eq!(g.vertex_of(42), Some(1));
        assert_eq!(g.vertex_of(8), None);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(path_graph(3).bfs(0).dist, vec![0, 1, 2]);
        assert_eq!(cycle(4).bfs(0).dist, vec![0, 1, 2, 1]);
    }

    #[test]
    fn intervals_and_slices() {
        let c4 = cycle(4);
        assert_eq!(interval(&c4, 0, 2), vec![0, 1, 2, 3]);
        assert_eq!(slice(&c4, 0, 2, 1).unwrap(), vec![1, 3]);
        let p3 = path_graph(3);
        assert_eq!(interval(&p3, 0, 2), vec![0, 1, 2]);
        assert_eq!(slice(&p3, 0, 2, 0).unwrap(), vec![0]);
        assert_eq!(slice(&path_graph(5), 0, 4, 2).unwrap(), vec![2]);
        assert_eq!(slice(&p3, 0, 2, 3), Err(Error::KOutOfRange { k: 3, max: 2 }));
    }

    #[test]
    fn disks() {
        let p5 = path_graph(5);
        assert_eq!(disk(&p5, &[2], 1).unwrap(), vec![1, 2, 3]);
        assert_eq!(disk(&p5, &[3], 0).unwrap(), vec![3]);
        let all: Vec<_> = (0..5).collect();
        assert_eq!(disk(&p5, &all, 0).unwrap(), all);
        assert_eq!(disk(&p5, &[], 1), Err(Error::EmptySet));
    }

    #[test]
    fn gromov_products() {
        assert_eq!(gromov_product_doubled(&path_graph(3), 0, 2, 1), 0);
        assert_eq!(gromov_product_doubled(&cycle(4), 0, 2, 1), 0);
        assert_eq!(gromov_product_doubled(&cycle(5), 3, 3, 3), 0);
        // (0|2)_4 in P5: (4 + 2 - 2) / 2 = 2
        assert_eq!(gromov_product_doubled(&path_graph(5), 0, 2, 4), 4);
    }

    #[test]
    fn canonical_paths() {
        assert_eq!(canonical_shortest_path(&path_graph(3), 0, 2).vertices, vec![0, 1, 2]);
        assert_eq!(canonical_shortest_path(&cycle(4), 0, 2).vertices, vec![0, 1, 2]);
        assert_eq!(canonical_shortest_path(&cycle(4), 2, 2).vertices, vec![2]);
    }

    #[test]
    fn shortest_path_check() {
        let c4 = cycle(4);
        assert!(Path::new(vec![0, 3, 2]).check_shortest(&c4).is_ok());
        assert_eq!(Path::new(vec![0, 1, 0]).check_shortest(&c4), Err(Error::NotAShortestPath { index: 2 }));
        assert_eq!(Path::new(vec![0, 2]).check_shortest(&c4), Err(Error::NotAShortestPath { index: 1 }));
    }
}

//! Deterministic test-graph families, including the up-hill counterexample
//! family built from two long `x`–`y` paths joined by a ladder of `w` vertices.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::rng::SplitMix64;
use crate::{Error, Graph, Result, Vertex};

/// A graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Grid(usize, usize),
    RandomTree { n: usize, seed: u64 },
    GnmConnected { n: usize, m: usize, seed: u64 },
    Fig3(Fig3Params),
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Grid(r, c) => grid(r, c),
            Family::RandomTree { n, seed } => random_tree(n, seed),
            Family::GnmConnected { n, m, seed } => gnm_connected(n, m, seed),
            Family::Fig3(p) => Ok(gen_fig3(p)?.graph),
        }
    }
}

/// Descriptor syntax, also used by the command line:
/// `path:N`, `cycle:N`, `complete:N`, `grid:RxC`, `tree:N:SEED`,
/// `gnm:N:M:SEED`, `fig3:K:P`.
impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Grid(r, c) => write!(f, "grid:{r}x{c}"),
            Family::RandomTree { n, seed } => write!(f, "tree:{n}:{seed}"),
            Family::GnmConnected { n, m, seed } => write!(f, "gnm:{n}:{m}:{seed}"),
            Family::Fig3(p) => write!(f, "fig3:{}:{}", p.k, p.p),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let bad = Error::InvalidParams("unrecognized family descriptor");
        let (name, rest) = s.split_once(':').ok_or(bad.clone())?;
        let nums = |sep: char| -> Result<Vec<u64>> {
            rest.split(sep).map(|t| t.trim().parse::<u64>().map_err(|_| bad.clone())).collect()
        };
        let fam = match (name, nums(if name == "grid" { 'x' } else { ':' })?.as_slice()) {
            ("path", &[n]) => Family::Path(n as usize),
            ("cycle", &[n]) => Family::Cycle(n as usize),
            ("complete", &[n]) => Family::Complete(n as usize),
            ("grid", &[r, c]) => Family::Grid(r as usize, c as usize),
            ("tree" | "random_tree", &[n, seed]) => Family::RandomTree { n: n as usize, seed },
            ("gnm" | "gnm_connected", &[n, m, seed]) => Family::GnmConnected { n: n as usize, m: m as usize, seed },
            ("fig3", &[k, p]) => Family::Fig3(Fig3Params { k: k as usize, p: p as usize }),
            _ => return Err(bad),
        };
        Ok(fam)
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("path needs at least 2 vertices"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_dense_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams("cycle needs at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_dense_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("complete graph needs at least 2 vertices"));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_dense_edges(n, &edges)
}

/// `rows × cols` grid; vertex `(i, j)` has id `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 || rows * cols < 2 {
        return Err(Error::InvalidParams("grid needs at least 2 cells"));
    }
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_dense_edges(rows * cols, &edges)
}

/// Random recursive tree over a shuffled vertex order: the `i`-th vertex of
/// the order attaches to a uniformly chosen earlier one.
fn random_tree_edges(n: usize, rng: &mut SplitMix64) -> Vec<(Vertex, Vertex)> {
    let mut order: Vec<Vertex> = (0..n).collect();
    rng.shuffle(&mut order);
    (1..n).map(|i| (order[i], order[rng.index(i)])).collect()
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("random tree needs at least 2 vertices"));
    }
    let mut rng = SplitMix64::new(seed);
    Graph::from_dense_edges(n, &random_tree_edges(n, &mut rng))
}

/// Connected graph with exactly `n` vertices and `m` edges: a random recursive
/// spanning tree plus `m − n + 1` further edges drawn uniformly from the
/// remaining pairs.
pub fn gnm_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("gnm needs at least 2 vertices"));
    }
    let max = n * (n - 1) / 2;
    if m < n - 1 || m > max {
        return Err(Error::InvalidParams("gnm needs n - 1 <= m <= n(n-1)/2"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let mut present: BTreeSet<(Vertex, Vertex)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let extra = m - (n - 1);
    if 2 * extra > max - (n - 1) {
        let mut pool: Vec<(Vertex, Vertex)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|p| !present.contains(p)).collect();
        rng.shuffle(&mut pool);
        edges.extend_from_slice(&pool[..extra]);
    } else {
        while edges.len() < m {
            let u = rng.index(n);
            let v = rng.index(n);
            if u != v && present.insert((u.min(v), u.max(v))) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_dense_edges(n, &edges)
}

/// Parameters of the up-hill counterexample family; the branch length is
/// `ℓ = k + p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fig3Params {
    pub k: usize,
    pub p: usize,
}

impl Fig3Params {
    pub fn ell(&self) -> usize {
        self.k + self.p
    }
}

/// The generated graph together with vertex names (`x`, `y`, `u1`…, `v1`…,
/// `w2`…, the branch ends `u` and `v`, and the pendant ends `x*`, `y*`).
#[derive(Debug, Clone)]
pub struct Fig3 {
    pub graph: Graph,
    pub params: Fig3Params,
    names: Vec<String>,
}

impl Fig3 {
    pub fn id(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|s| s == name)
    }

    /// Like [`Fig3::id`] for names that are known to exist.
    pub fn v(&self, name: &str) -> Vertex {
        self.id(name).unwrap_or_else(|| panic!("no vertex named {name}"))
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

pub fn gen_fig3(params: Fig3Params) -> Result<Fig3> {
    let Fig3Params { k, p } = params;
    if k < 1 || p < 1 {
        return Err(Error::InvalidParams("fig3 needs k >= 1 and p >= 1"));
    }
    let ell = params.ell();
    let mut names: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let add = |names: &mut Vec<String>, name: String| {
        names.push(name);
        names.len() - 1
    };

    let x = add(&mut names, "x".into());
    let us: Vec<Vertex> = (1..=2 * k + 1).map(|i| add(&mut names, format!("u{i}"))).collect();
    let y = add(&mut names, "y".into());
    let vs: Vec<Vertex> = (1..=2 * k + 1).map(|i| add(&mut names, format!("v{i}"))).collect();
    let ws: Vec<Vertex> = (2..=2 * k).map(|i| add(&mut names, format!("w{i}"))).collect();

    for side in [&us, &vs] {
        edges.push((x, side[0]));
        edges.extend(side.windows(2).map(|w| (w[0], w[1])));
        edges.push((side[2 * k], y));
    }
    edges.extend(ws.windows(2).map(|w| (w[0], w[1])));
    for i in 2..=2 * k {
        let w = ws[i - 2];
        edges.push((us[i - 1], w));
        edges.push((w, vs[i - 1]));
    }

    // a path of `len` edges hanging off `from`; interior vertices get
    // `prefix1..`, the far end gets `end`
    let mut hang = |names: &mut Vec<String>, from: Vertex, len: usize, prefix: &str, end: &str| {
        let mut prev = from;
        for i in 1..=len {
            let name = if i == len { end.into() } else { format!("{prefix}{i}") };
            let cur = add(names, name);
            edges.push((prev, cur));
            prev = cur;
        }
    };
    hang(&mut names, us[k + 1], ell, "a", "u");
    hang(&mut names, vs[k + 1], ell, "b", "v");
    hang(&mut names, x, p, "p", "x*");
    hang(&mut names, y, p, "q", "y*");

    let graph = Graph::from_dense_edges(names.len(), &edges)?;
    Ok(Fig3 { graph, params, names })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_round_trip() {
        for s in ["path:5", "cycle:6", "complete:4", "grid:3x4", "tree:50:7", "gnm:100:300:1", "fig3:2:1"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("grid:3".parse::<Family>().is_err());
        assert!("blob:3".parse::<Family>().is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(path(5).unwrap().m(), 4);
        assert_eq!(cycle(6).unwrap().m(), 6);
        assert_eq!(complete(4).unwrap().m(), 6);
        let g = grid(3, 4).unwrap();
        assert_eq!((g.n(), g.m()), (12, 17));
        let t = random_tree(50, 7).unwrap();
        assert_eq!((t.n(), t.m()), (50, 49));
        let h = gnm_connected(100, 300, 1).unwrap();
        assert_eq!((h.n(), h.m()), (100, 300));
        let dense = gnm_connected(10, 44, 3).unwrap();
        assert_eq!(dense.m(), 44);
    }

    #[test]
    fn seeded_generators_are_pure() {
        assert_eq!(random_tree(40, 3).unwrap(), random_tree(40, 3).unwrap());
        assert_eq!(gnm_connected(60, 150, 3).unwrap(), gnm_connected(60, 150, 3).unwrap());
        assert_ne!(gnm_connected(60, 150, 3).unwrap(), gnm_connected(60, 150, 4).unwrap());
    }

    #[test]
    fn invalid_params() {
        assert!(path(1).is_err());
        assert!(cycle(2).is_err());
        assert!(gnm_connected(10, 8, 1).is_err());
        assert!(gnm_connected(10, 46, 1).is_err());
        assert!(gen_fig3(Fig3Params { k: 0, p: 1 }).is_err());
        assert!(gen_fig3(Fig3Params { k: 1, p: 0 }).is_err());
    }

    #[test]
    fn fig3_shape() {
        let f = gen_fig3(Fig3Params { k: 2, p: 1 }).unwrap();
        // 2(2k+1) + 2 + (2k-1) + 2ℓ + 2p
        assert_eq!(f.graph.n(), 23);
        assert_eq!(f.name(0), "x");
        assert!(f.graph.has_edge(f.v("x"), f.v("u1")));
        assert!(f.graph.has_edge(f.v("u5"), f.v("y")));
        assert!(f.graph.has_edge(f.v("u3"), f.v("w3")));
        assert!(f.graph.has_edge(f.v("w3"), f.v("v3")));
        assert!(f.graph.has_edge(f.v("x"), f.v("x*")));
        assert_eq!(f.graph.bfs(f.v("x")).get(f.v("u")), 7);
    }
}

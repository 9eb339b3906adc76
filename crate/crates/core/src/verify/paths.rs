//! The shortest paths terrain checks run over.

use alloc::vec;
use alloc::vec::Vec;

use super::oracle::{Oracle, TableOracle};
use super::SuiteConfig;
use crate::rng::{derive_seed, SplitMix64};
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathMode {
    /// Every shortest path between every ordered pair of distinct vertices.
    Enumerated,
    /// Canonical paths from each vertex to the center plus random shortest
    /// paths between random pairs.
    Sampled,
}

impl PathMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            PathMode::Enumerated => "enumerated",
            PathMode::Sampled => "sampled",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSet {
    pub mode: PathMode,
    pub count: u64,
    sampled: Vec<Vec<Vertex>>,
}

/// Number of shortest paths between all ordered pairs of distinct vertices,
/// saturating.
pub fn count_shortest_paths(o: &TableOracle<'_>) -> u64 {
    let n = o.n();
    let g = o.graph();
    let mut order: Vec<Vertex> = (0..n).collect();
    let mut sigma = vec![0u64; n];
    let mut total = 0u64;
    for x in 0..n {
        order.sort_by_key(|&v| o.d(x, v));
        sigma.iter_mut().for_each(|s| *s = 0);
        sigma[x] = 1;
        for &v in &order[1..] {
            let dv = o.d(x, v);
            sigma[v] = g
                .neighbors(v)
                .iter()
                .filter(|&&w| o.d(x, w) + 1 == dv)
                .fold(0u64, |acc, &w| acc.saturating_add(sigma[w]));
            total = total.saturating_add(sigma[v]);
        }
    }
    total
}

impl PathSet {
    pub(crate) fn build(o: &TableOracle<'_>, config: &SuiteConfig) -> PathSet {
        let n = o.n();
        if n <= config.enumerate_paths_max_n {
            let count = count_shortest_paths(o);
            if count <= config.path_cap {
                return PathSet { mode: PathMode::Enumerated, count, sampled: Vec::new() };
            }
        }
        let center = &o.profile().center;
        let mut sampled = Vec::new();
        for v in 0..n {
            let c = *center.iter().min_by_key(|&&c| (o.d(v, c), c)).unwrap();
            if c != v {
                sampled.push(walk(o, v, c, |cands| cands[0]));
            }
        }
        let mut rng = SplitMix64::new(derive_seed(config.seed, "paths"));
        if n > 1 {
            for _ in 0..config.random_paths {
                let x = rng.index(n);
                let y = (x + 1 + rng.index(n - 1)) % n;
                sampled.push(walk(o, x, y, |cands| cands[rng.index(cands.len())]));
            }
        }
        PathSet { mode: PathMode::Sampled, count: sampled.len() as u64, sampled }
    }

    /// Calls `f` on every path of the set.
    pub fn for_each(&self, o: &TableOracle<'_>, mut f: impl FnMut(&[Vertex])) {
        match self.mode {
            PathMode::Sampled => self.sampled.iter().for_each(|p| f(p)),
            PathMode::Enumerated => {
                let n = o.n();
                let mut path = Vec::new();
                for x in 0..n {
                    for y in (0..n).filter(|&y| y != x) {
                        path.clear();
                        path.push(x);
                        extend_all(o, y, &mut path, &mut f);
                    }
                }
            }
        }
    }
}

fn extend_all(o: &TableOracle<'_>, y: Vertex, path: &mut Vec<Vertex>, f: &mut impl FnMut(&[Vertex])) {
    let cur = *path.last().unwrap();
    if cur == y {
        f(path);
        return;
    }
    let dc = o.d(cur, y);
    for &w in o.graph().neighbors(cur) {
        if o.d(w, y) + 1 == dc {
            path.push(w);
            extend_all(o, y, path, f);
            path.pop();
        }
    }
}

/// Walks a shortest path from `x` to `y`, choosing each next step among the
/// neighbors one closer to `y` (in id order).
fn walk(o: &TableOracle<'_>, x: Vertex, y: Vertex, mut pick: impl FnMut(&[Vertex]) -> Vertex) -> Vec<Vertex> {
    let mut path = vec![x];
    let mut cur = x;
    let mut cands = Vec::new();
    while cur != y {
        let dc = o.d(cur, y);
        cands.clear();
        cands.extend(o.graph().neighbors(cur).iter().copied().filter(|&w| o.d(w, y) + 1 == dc));
        cur = pick(&cands);
        path.push(cur);
    }
    path
}

impl PathSet {
    pub fn coverage(&self) -> super::Coverage {
        match self.mode {
            PathMode::Enumerated => super::Coverage::Exhaustive,
            PathMode::Sampled => super::Coverage::Sampled,
        }
    }
}

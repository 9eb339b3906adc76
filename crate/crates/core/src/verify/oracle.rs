//! Distance and eccentricity sources the checks are written against.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::{Cell, RefCell};

use crate::exact::DistanceMatrix;
use crate::{EccentricityProfile, Graph, LocalityMap, Vertex};

/// Exact metric facts about one graph, plus the δ the bounds are tested at.
pub trait Oracle {
    fn graph(&self) -> &Graph;
    /// `2δ` used for every bound.
    fn delta2(&self) -> u32;
    fn d(&self, u: Vertex, v: Vertex) -> u32;
    fn e(&self, v: Vertex) -> u32;
    fn rad(&self) -> u32;
    fn diam(&self) -> u32;

    fn n(&self) -> usize {
        self.graph().n()
    }

    fn layer(&self, v: Vertex) -> u32 {
        self.e(v) - self.rad()
    }

    /// `d(v, C_≤k(G))`
    fn dist_to_layers(&self, v: Vertex, k: u32) -> u32 {
        let cap = self.rad() + k;
        (0..self.n()).filter(|&u| self.e(u) <= cap).map(|u| self.d(v, u)).min().unwrap_or(u32::MAX)
    }

    /// Distance to the nearest vertex of strictly smaller eccentricity, 0 on
    /// the center.
    fn loc(&self, v: Vertex) -> u32 {
        let ev = self.e(v);
        (0..self.n()).filter(|&u| self.e(u) < ev).map(|u| self.d(v, u)).min().unwrap_or(0)
    }

    fn in_interval(&self, x: Vertex, y: Vertex, z: Vertex) -> bool {
        self.d(x, z) + self.d(z, y) == self.d(x, y)
    }

    /// Whether `path` is a shortest path of the graph.
    fn is_shortest_path(&self, path: &[Vertex]) -> bool {
        let Some((&first, _)) = path.split_first() else {
            return false;
        };
        let n = self.n();
        path.iter().all(|&v| v < n)
            && path.windows(2).all(|w| self.graph().has_edge(w[0], w[1]))
            && self.d(first, *path.last().unwrap()) as usize == path.len() - 1
    }
}

/// Backed by the precomputed distance table and profile.
pub struct TableOracle<'a> {
    pub(crate) g: &'a Graph,
    pub(crate) m: DistanceMatrix,
    pub(crate) prof: EccentricityProfile,
    pub(crate) loc: LocalityMap,
    pub(crate) delta2: u32,
    pub(crate) to_center: Vec<u32>,
    pub(crate) to_cdelta: Vec<u32>,
}

impl<'a> TableOracle<'a> {
    pub(crate) fn new(
        g: &'a Graph,
        m: DistanceMatrix,
        prof: EccentricityProfile,
        loc: LocalityMap,
        delta2: u32,
    ) -> Self {
        let to_center = m.dist_to_set(&prof.center);
        let to_cdelta = m.dist_to_set(&prof.c_le(delta2));
        TableOracle { g, m, prof, loc, delta2, to_center, to_cdelta }
    }

    pub fn matrix(&self) -> &DistanceMatrix {
        &self.m
    }

    pub fn profile(&self) -> &EccentricityProfile {
        &self.prof
    }
}

impl Oracle for TableOracle<'_> {
    fn graph(&self) -> &Graph {
        self.g
    }

    fn delta2(&self) -> u32 {
        self.delta2
    }

    #[inline]
    fn d(&self, u: Vertex, v: Vertex) -> u32 {
        self.m.get(u, v)
    }

    #[inline]
    fn e(&self, v: Vertex) -> u32 {
        self.prof.ecc[v]
    }

    fn rad(&self) -> u32 {
        self.prof.rad
    }

    fn diam(&self) -> u32 {
        self.prof.diam
    }

    fn layer(&self, v: Vertex) -> u32 {
        self.prof.layer[v]
    }

    fn dist_to_layers(&self, v: Vertex, k: u32) -> u32 {
        if k == 0 {
            self.to_center[v]
        } else if k == self.delta2 {
            self.to_cdelta[v]
        } else {
            self.m.dist_to_set(&self.prof.c_le(k))[v]
        }
    }

    fn loc(&self, v: Vertex) -> u32 {
        self.loc.loc[v]
    }
}

/// Recomputes everything from BFS on demand, sharing nothing with a suite
/// run. Used to re-verify witnesses.
pub struct FreshOracle<'a> {
    g: &'a Graph,
    delta2: u32,
    rows: RefCell<Vec<Option<Vec<u32>>>>,
    extremes: Cell<Option<(u32, u32)>>,
}

impl<'a> FreshOracle<'a> {
    pub fn new(g: &'a Graph, delta2: u32) -> Self {
        FreshOracle { g, delta2, rows: RefCell::new(vec![None; g.n()]), extremes: Cell::new(None) }
    }

    fn with_row<T>(&self, u: Vertex, f: impl FnOnce(&[u32]) -> T) -> T {
        let mut rows = self.rows.borrow_mut();
        let row = rows[u].get_or_insert_with(|| self.g.bfs(u).dist);
        f(row)
    }

    fn extremes(&self) -> (u32, u32) {
        if let Some(x) = self.extremes.get() {
            return x;
        }
        let ecc: Vec<u32> = (0..self.n()).map(|v| self.e(v)).collect();
        let x = (ecc.iter().copied().min().unwrap_or(0), ecc.iter().copied().max().unwrap_or(0));
        self.extremes.set(Some(x));
        x
    }
}

impl Oracle for FreshOracle<'_> {
    fn graph(&self) -> &Graph {
        self.g
    }

    fn delta2(&self) -> u32 {
        self.delta2
    }

    fn d(&self, u: Vertex, v: Vertex) -> u32 {
        self.with_row(u, |r| r[v])
    }

    fn e(&self, v: Vertex) -> u32 {
        self.with_row(v, |r| r.iter().copied().max().unwrap_or(0))
    }

    fn rad(&self) -> u32 {
        self.extremes().0
    }

    fn diam(&self) -> u32 {
        self.extremes().1
    }
}

//! Brute-force ground truth: all-pairs distances, the eccentricity profile,
//! localities and exact hyperbolicity with a witness quadruple.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::graph::UNREACHED;
use crate::{Error, Graph, Result, Vertex};

/// Size caps for the quadratic and quartic oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest `n` for all-pairs distances and exact eccentricities.
    pub apsp: usize,
    /// Largest `n` for the exhaustive four-point scan.
    pub delta: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { apsp: 20_000, delta: 400 }
    }
}

impl OracleCaps {
    fn check_apsp(&self, n: usize) -> Result<()> {
        // the matrix stores u16 entries
        let cap = self.apsp.min(u16::MAX as usize);
        if n > cap {
            return Err(Error::SizeLimitExceeded { what: "all-pairs distances", n, cap });
        }
        Ok(())
    }
}

/// Dense symmetric hop-distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v] as u32
    }

    pub fn row(&self, u: Vertex) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// `d(v, S)` for every `v`.
    pub fn dist_to_set(&self, set: &[Vertex]) -> Vec<u32> {
        let mut out = vec![u32::MAX; self.n];
        for &s in set {
            for (o, &d) in out.iter_mut().zip(self.row(s)) {
                *o = (*o).min(d as u32);
            }
        }
        out
    }

    /// `I(x, y)`, ascending.
    pub fn interval(&self, x: Vertex, y: Vertex) -> Vec<Vertex> {
        let dxy = self.get(x, y);
        let (rx, ry) = (self.row(x), self.row(y));
        (0..self.n).filter(|&v| rx[v] as u32 + ry[v] as u32 == dxy).collect()
    }

    /// `S_k(x, y)`, ascending; empty when `k > d(x, y)`.
    pub fn slice(&self, x: Vertex, y: Vertex, k: u32) -> Vec<Vertex> {
        let dxy = self.get(x, y);
        let (rx, ry) = (self.row(x), self.row(y));
        (0..self.n).filter(|&v| rx[v] as u32 == k && rx[v] as u32 + ry[v] as u32 == dxy).collect()
    }

    /// Largest distance between two members of `set`.
    pub fn set_diameter(&self, set: &[Vertex]) -> u32 {
        let mut best = 0;
        for &a in set {
            let row = self.row(a);
            for &b in set {
                best = best.max(row[b] as u32);
            }
        }
        best
    }
}

/// `n` BFS sweeps into an `n × n` table.
pub fn all_pairs_distances(g: &Graph, caps: &OracleCaps) -> Result<DistanceMatrix> {
    let n = g.n();
    caps.check_apsp(n)?;
    let mut d = Vec::with_capacity(n * n);
    let (mut dist, mut queue) = (Vec::new(), Vec::new());
    for s in 0..n {
        g.bfs_multi_into(&[s], &mut dist, &mut queue);
        d.extend(dist.iter().map(|&x| x as u16));
    }
    Ok(DistanceMatrix { n, d })
}

/// Exact eccentricities with the derived radius, diameter, center and layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub rad: u32,
    pub diam: u32,
    /// `C(G)`, ascending.
    pub center: Vec<Vertex>,
    /// `layer[v] = ecc[v] − rad`.
    pub layer: Vec<u32>,
}

impl EccentricityProfile {
    pub fn from_eccentricities(ecc: Vec<u32>) -> EccentricityProfile {
        let rad = ecc.iter().copied().min().unwrap_or(0);
        let diam = ecc.iter().copied().max().unwrap_or(0);
        let center = (0..ecc.len()).filter(|&v| ecc[v] == rad).collect();
        let layer = ecc.iter().map(|&e| e - rad).collect();
        EccentricityProfile { ecc, rad, diam, center, layer }
    }

    pub fn from_matrix(m: &DistanceMatrix) -> EccentricityProfile {
        let ecc = (0..m.n()).map(|v| m.row(v).iter().copied().max().unwrap_or(0) as u32).collect();
        Self::from_eccentricities(ecc)
    }

    /// `C_≤k(G)`, ascending.
    pub fn c_le(&self, k: u32) -> Vec<Vertex> {
        (0..self.ecc.len()).filter(|&v| self.layer[v] <= k).collect()
    }

    /// Number of vertices in each layer `C_0, C_1, …, C_{diam−rad}`.
    pub fn layer_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; (self.diam - self.rad) as usize + 1];
        for &l in &self.layer {
            h[l as usize] += 1;
        }
        h
    }

    pub fn max_layer(&self) -> u32 {
        self.diam - self.rad
    }
}

/// Exact profile by `n` BFS sweeps, `O(n)` memory.
pub fn eccentricity_profile(g: &Graph, caps: &OracleCaps) -> Result<EccentricityProfile> {
    caps.check_apsp(g.n())?;
    let (mut dist, mut queue) = (Vec::new(), Vec::new());
    let ecc = (0..g.n())
        .map(|s| {
            g.bfs_multi_into(&[s], &mut dist, &mut queue);
            // BFS visits in nondecreasing distance order
            dist[*queue.last().unwrap()]
        })
        .collect();
    Ok(EccentricityProfile::from_eccentricities(ecc))
}

/// `F(v)`: vertices at distance `e(v)` from `v`, ascending.
pub fn furthest_set(g: &Graph, v: Vertex) -> Vec<Vertex> {
    g.bfs(v).furthest_set()
}

/// Distance from each vertex to the nearest vertex of strictly smaller
/// eccentricity (0 on the center).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityMap {
    pub loc: Vec<u32>,
}

/// Truncated BFS per vertex, stopping at the first layer that contains a
/// vertex of smaller eccentricity.
pub fn locality_map(g: &Graph, prof: &EccentricityProfile) -> LocalityMap {
    let n = g.n();
    let mut dist = vec![UNREACHED; n];
    let mut queue: Vec<Vertex> = Vec::new();
    let mut loc = vec![0; n];
    for s in 0..n {
        if prof.ecc[s] == prof.rad {
            continue;
        }
        let es = prof.ecc[s];
        queue.clear();
        queue.push(s);
        dist[s] = 0;
        let mut head = 0;
        let mut found = UNREACHED;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if dist[u] >= found {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNREACHED {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                    if prof.ecc[w] < es {
                        found = found.min(dist[w]);
                    }
                }
            }
        }
        loc[s] = found;
        for &v in &queue {
            dist[v] = UNREACHED;
        }
    }
    LocalityMap { loc }
}

/// Doubled hyperbolicity `2δ` with the lexicographically first quadruple
/// attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperbolicityCertificate {
    pub delta2: u32,
    pub witness: [Vertex; 4],
}

/// Largest minus second-largest of the three pairwise distance sums.
#[inline]
pub fn four_point_doubled(m: &DistanceMatrix, [a, b, c, d]: [Vertex; 4]) -> u32 {
    let s1 = m.get(a, b) + m.get(c, d);
    let s2 = m.get(a, c) + m.get(b, d);
    let s3 = m.get(a, d) + m.get(b, c);
    let (hi, mid) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
    if s3 >= hi {
        s3 - hi
    } else if s3 >= mid {
        hi - s3
    } else {
        hi - mid
    }
}

/// Exhaustive scan over every quadruple `a < b < c < d`.
pub fn hyperbolicity_exact(m: &DistanceMatrix, caps: &OracleCaps) -> Result<HyperbolicityCertificate> {
    if m.n() > caps.delta {
        return Err(Error::SizeLimitExceeded { what: "exact hyperbolicity", n: m.n(), cap: caps.delta });
    }
    Ok(hyperbolicity_scan(m, 0..m.n()))
}

/// The scan restricted to quadruples whose smallest vertex lies in `first`.
///
/// Splitting `0..n` into consecutive ranges and keeping, across the parts, the
/// largest `delta2` from the earliest range reproduces the full scan exactly.
pub fn hyperbolicity_scan(m: &DistanceMatrix, first: Range<Vertex>) -> HyperbolicityCertificate {
    let n = m.n();
    let mut best = HyperbolicityCertificate { delta2: 0, witness: [0; 4] };
    let mut seen = false;
    for a in first {
        let ra = m.row(a);
        for b in a + 1..n {
            let rb = m.row(b);
            let ab = ra[b] as u32;
            for c in b + 1..n {
                let rc = m.row(c);
                let (ac, bc) = (ra[c] as u32, rb[c] as u32);
                for d in c + 1..n {
                    let s1 = ab + rc[d] as u32;
                    let s2 = ac + rb[d] as u32;
                    let s3 = ra[d] as u32 + bc;
                    let (hi, mid) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
                    let val = if s3 >= hi {
                        s3 - hi
                    } else if s3 >= mid {
                        hi - s3
                    } else {
                        hi - mid
                    };
                    if !seen || val > best.delta2 {
                        best = HyperbolicityCertificate { delta2: val, witness: [a, b, c, d] };
                        seen = true;
                    }
                }
            }
        }
    }
    if !seen {
        // fewer than four vertices available: every quadruple repeats a vertex
        best.witness = [0; 4];
    }
    best
}

/// Combines per-range scans in range order (see [`hyperbolicity_scan`]).
pub fn merge_scans(parts: impl IntoIterator<Item = HyperbolicityCertificate>) -> HyperbolicityCertificate {
    let mut best: Option<HyperbolicityCertificate> = None;
    for p in parts {
        match best {
            Some(b) if p.delta2 <= b.delta2 => {}
            _ => best = Some(p),
        }
    }
    best.unwrap_or(HyperbolicityCertificate { delta2: 0, witness: [0; 4] })
}

//! All-eccentricity estimators: a left-sided estimate from a mutually distant
//! pair and two right-sided estimates read off a BFS tree rooted at a middle
//! vertex. None of them needs the hyperbolicity; the guarantee attached to
//! each result is expressed in terms of it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::extremal::{beam_with_distances, middle_of_canonical, mutually_distant_pair, SweepTrace};
use crate::graph::UNREACHED;
use crate::{DistanceVector, Error, Graph, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    PairLeft,
    TreeMiddle,
    TreeFast,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::PairLeft => "pair_left",
            Method::TreeMiddle => "tree_middle",
            Method::TreeFast => "tree_fast_k",
        }
    }
}

/// Which side of the truth the estimate lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `e(v) − err ≤ ê(v) ≤ e(v)`
    Left,
    /// `e(v) ≤ ê(v) ≤ e(v) + err`
    Right,
}

/// Additive error bound as a function of δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdditiveBound {
    /// `2δ`
    TwoDelta,
    /// `4δ + 1`
    FourDeltaPlusOne,
    /// `6δ + 1 − k`, valid for `k ≤ 2δ`.
    SixDeltaPlusOneMinusK(u32),
}

impl AdditiveBound {
    /// The bound for a given `delta2 = 2δ`, or `None` where it is not
    /// guaranteed (`6δ + 1 − k` with `k > 2δ`).
    pub fn evaluate(&self, delta2: u32) -> Option<u32> {
        match *self {
            AdditiveBound::TwoDelta => Some(delta2),
            AdditiveBound::FourDeltaPlusOne => Some(2 * delta2 + 1),
            AdditiveBound::SixDeltaPlusOneMinusK(k) => (k <= delta2).then(|| 3 * delta2 + 1 - k),
        }
    }
}

impl fmt::Display for AdditiveBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdditiveBound::TwoDelta => f.write_str("2d"),
            AdditiveBound::FourDeltaPlusOne => f.write_str("4d+1"),
            AdditiveBound::SixDeltaPlusOneMinusK(_) => f.write_str("6d+1-k"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guarantee {
    pub side: Side,
    pub additive: AdditiveBound,
}

/// Vertices an estimate was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchors {
    pub x: Vertex,
    pub y: Vertex,
    /// Tree root, for the tree methods.
    pub c: Option<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxEccentricities {
    pub est: Vec<u32>,
    pub method: Method,
    /// `k` for the fast tree method.
    pub k: Option<u32>,
    pub anchors: Anchors,
    pub guarantee: Guarantee,
    /// BFS sweeps over `G` spent on this estimate (tree work excluded).
    pub sweeps: usize,
}

impl ApproxEccentricities {
    /// The additive error bound for a known `delta2`, if one is guaranteed.
    pub fn bound(&self, delta2: u32) -> Option<u32> {
        self.guarantee.additive.evaluate(delta2)
    }

    /// The right-sided variant of the pair estimate, `ê(v) + 2δ`, available
    /// once δ is known.
    pub fn shifted_right(&self, delta2: u32) -> Option<ApproxEccentricities> {
        if self.method != Method::PairLeft {
            return None;
        }
        let mut out = self.clone();
        out.est.iter_mut().for_each(|e| *e += delta2);
        out.guarantee.side = Side::Right;
        Some(out)
    }
}

/// A rooted spanning tree given by parent pointers; the root is its own parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub parent: Vec<Vertex>,
    pub root: Vertex,
}

/// BFS tree of `g` rooted at `root`: each vertex hangs off its smallest-id
/// neighbor one step closer to the root.
pub fn bfs_tree(g: &Graph, root: Vertex) -> SpanningTree {
    bfs_tree_from(g, &g.bfs(root))
}

fn bfs_tree_from(g: &Graph, from_root: &DistanceVector) -> SpanningTree {
    let parent = (0..g.n())
        .map(|v| {
            let dv = from_root.get(v);
            if dv == 0 {
                v
            } else {
                *g.neighbors(v).iter().find(|&&w| from_root.get(w) + 1 == dv).expect("BFS predecessor")
            }
        })
        .collect();
    SpanningTree { parent, root: from_root.source }
}

impl SpanningTree {
    /// Adjacency lists of the tree after validating it against `g`.
    fn adjacency(&self, g: &Graph) -> Result<Vec<Vec<Vertex>>> {
        let n = g.n();
        if self.parent.len() != n || self.root >= n {
            return Err(Error::InvalidTree("parent array does not match the graph"));
        }
        if self.parent[self.root] != self.root {
            return Err(Error::InvalidTree("root must be its own parent"));
        }
        let mut adj = vec![Vec::new(); n];
        for (v, &p) in self.parent.iter().enumerate() {
            if v == self.root {
                continue;
            }
            if p >= n || p == v || !g.has_edge(v, p) {
                return Err(Error::InvalidTree("tree edge missing from the graph"));
            }
            adj[v].push(p);
            adj[p].push(v);
        }
        // n − 1 edges; acyclic iff every vertex is reached from the root
        let dist = tree_bfs(&adj, &[self.root]);
        if dist.contains(&UNREACHED) {
            return Err(Error::InvalidTree("parent pointers contain a cycle"));
        }
        Ok(adj)
    }
}

fn tree_bfs(adj: &[Vec<Vertex>], sources: &[Vertex]) -> Vec<u32> {
    let mut dist = vec![UNREACHED; adj.len()];
    let mut queue = Vec::with_capacity(adj.len());
    for &s in sources {
        dist[s] = 0;
        queue.push(s);
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &w in &adj[u] {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push(w);
            }
        }
    }
    dist
}

fn argmax(d: &[u32]) -> Vertex {
    let m = d.iter().copied().max().unwrap_or(0);
    d.iter().position(|&x| x == m).unwrap_or(0)
}

/// Eccentricities in the tree, `e_T(v) = d_T(v, C(T)) + rad(T)`, where the
/// tree center is the middle of a tree diameter (one vertex, or two adjacent
/// ones). Three tree BFS passes in total.
pub fn tree_eccentricities(g: &Graph, t: &SpanningTree) -> Result<Vec<u32>> {
    let adj = t.adjacency(g)?;
    let from_root = tree_bfs(&adj, &[t.root]);
    let a = argmax(&from_root);
    let from_a = tree_bfs(&adj, &[a]);
    let b = argmax(&from_a);
    let diam = from_a[b];
    // walk from b toward a to reach the middle of the a–b path
    let mut mid = b;
    for _ in 0..diam / 2 {
        mid = *adj[mid].iter().find(|&&w| from_a[w] + 1 == from_a[mid]).expect("tree path");
    }
    let rad = diam.div_ceil(2);
    let center: Vec<Vertex> = if diam.is_multiple_of(2) {
        vec![mid]
    } else {
        let next = *adj[mid].iter().find(|&&w| from_a[w] + 1 == from_a[mid]).expect("tree path");
        vec![mid, next]
    };
    let to_center = tree_bfs(&adj, &center);
    Ok(to_center.iter().map(|&d| d + rad).collect())
}

fn require_mutual(g: &Graph, trace: &SweepTrace) -> Result<(DistanceVector, DistanceVector)> {
    let (x, y) = trace.terminal_pair;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let (from_x, from_y) = (g.bfs(x), g.bfs(y));
    let dxy = from_x.get(y);
    if from_x.eccentricity() != dxy || from_y.eccentricity() != dxy {
        return Err(Error::NotMutuallyDistant { x, y });
    }
    Ok((from_x, from_y))
}

/// `ê(v) = max{d(x, v), d(y, v)}` for the sweep's terminal pair; left-sided
/// within `2δ`.
pub fn approx_pair_left(g: &Graph, trace: &SweepTrace) -> Result<ApproxEccentricities> {
    let (from_x, from_y) = require_mutual(g, trace)?;
    Ok(pair_left_from(&from_x, &from_y, trace.sweeps))
}

fn pair_left_from(from_x: &DistanceVector, from_y: &DistanceVector, sweeps: usize) -> ApproxEccentricities {
    let est = from_x.dist.iter().zip(&from_y.dist).map(|(&a, &b)| a.max(b)).collect();
    ApproxEccentricities {
        est,
        method: Method::PairLeft,
        k: None,
        anchors: Anchors { x: from_x.source, y: from_y.source, c: None },
        guarantee: Guarantee { side: Side::Left, additive: AdditiveBound::TwoDelta },
        sweeps,
    }
}

/// Runs the sweep from `start` and returns the pair estimate.
pub fn pair_left_from_start(g: &Graph, start: Vertex) -> Result<ApproxEccentricities> {
    let s = mutually_distant_pair(g, start)?;
    Ok(pair_left_from(&s.from_x, &s.from_y, s.trace.sweeps))
}

/// BFS tree rooted at the middle of the canonical shortest path between the
/// terminal pair; right-sided within `4δ + 1`.
pub fn approx_tree_middle(g: &Graph, trace: &SweepTrace) -> Result<(SpanningTree, ApproxEccentricities)> {
    let (from_x, _) = require_mutual(g, trace)?;
    Ok(tree_middle_from(g, &from_x, trace.terminal_pair.1, trace.sweeps))
}

pub fn tree_middle_from_start(g: &Graph, start: Vertex) -> Result<(SpanningTree, ApproxEccentricities)> {
    let s = mutually_distant_pair(g, start)?;
    Ok(tree_middle_from(g, &s.from_x, s.from_y.source, s.trace.sweeps))
}

fn tree_middle_from(
    g: &Graph,
    from_x: &DistanceVector,
    y: Vertex,
    sweeps: usize,
) -> (SpanningTree, ApproxEccentricities) {
    let c = middle_of_canonical(g, from_x, y);
    let tree = bfs_tree(g, c);
    let est = tree_eccentricities(g, &tree).expect("BFS trees are valid spanning trees");
    let approx = ApproxEccentricities {
        est,
        method: Method::TreeMiddle,
        k: None,
        anchors: Anchors { x: from_x.source, y, c: Some(c) },
        guarantee: Guarantee { side: Side::Right, additive: AdditiveBound::FourDeltaPlusOne },
        sweeps,
    };
    (tree, approx)
}

/// The `O(k·m)` tree estimate: sweep `u_0 = start, u_{i+1} = furthest(u_i)` up
/// to `u_{k+2}`, root a BFS tree at the middle of the canonical
/// `(u_{k+1}, u_{k+2})` path.
///
/// If some sweep shows `{u_i, u_{i+1}}` to be mutually distant before the
/// budget is spent, the sweep stops there and that pair is used instead; the
/// guarantee then becomes `4δ + 1` (which is at most `6δ + 1 − k` whenever
/// `k ≤ 2δ`).
pub fn approx_tree_fast(g: &Graph, start: Vertex, k: u32) -> Result<(SpanningTree, ApproxEccentricities)> {
    g.check_vertex(start)?;
    let mut prev = g.bfs(start);
    let mut sweeps = 1;
    let mut mutual = false;
    // invariant: `prev` is BFS from u_i, `cand` = u_{i+1}
    for _ in 0..=k {
        let next = g.bfs(prev.furthest());
        sweeps += 1;
        if next.eccentricity() == prev.eccentricity() {
            mutual = true;
            break;
        }
        prev = next;
    }
    let y = prev.furthest();
    let (tree, mut approx) = tree_middle_from(g, &prev, y, sweeps);
    approx.method = Method::TreeFast;
    approx.k = Some(k);
    approx.guarantee.additive =
        if mutual { AdditiveBound::FourDeltaPlusOne } else { AdditiveBound::SixDeltaPlusOneMinusK(k) };
    Ok((tree, approx))
}

/// Which sweep a center enclosure is built around.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Middle of a beam: radius `5δ + 1 + k`.
    Beam,
    /// Middle of a mutually distant pair: radius `4δ + 1 + k`.
    Mutual,
}

/// Enclosure radius `⌊r·δ⌋ + 1 + k` in doubled arithmetic.
pub fn enclosure_radius(mode: SweepMode, delta2: u32, k: u32) -> u32 {
    let factor = match mode {
        SweepMode::Beam => 5,
        SweepMode::Mutual => 4,
    };
    factor * delta2 / 2 + 1 + k
}

/// `D(c, rδ + 1 + k)`, a superset of `C_≤k(G)` when `c` is the middle vertex
/// produced by the matching sweep.
pub fn center_enclosure(g: &Graph, c: Vertex, mode: SweepMode, k: u32, delta2: Option<u32>) -> Result<Vec<Vertex>> {
    let delta2 = delta2.ok_or(Error::MissingDelta)?;
    crate::graph::disk(g, &[c], enclosure_radius(mode, delta2, k))
}

/// Middle vertex of the beam from `z` and of the mutually distant pair
/// reached from `z`.
pub fn middle_vertices(g: &Graph, z: Vertex) -> Result<(Vertex, Vertex)> {
    let (bx, by) = beam_with_distances(g, z);
    let beam_mid = middle_of_canonical(g, &bx, by.source);
    let s = mutually_distant_pair(g, z)?;
    let mutual_mid = middle_of_canonical(g, &s.from_x, s.from_y.source);
    Ok((beam_mid, mutual_mid))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadDiamEstimates {
    /// `e(c)` for the middle `c` of the beam from the start vertex.
    pub rad_ub_fast: u32,
    pub fast_anchor: Vertex,
    pub beam: (Vertex, Vertex),
    /// `e(c)` for the middle `c` of the mutually distant pair.
    pub rad_ub_tight: u32,
    pub tight_anchor: Vertex,
    pub pair: (Vertex, Vertex),
    /// `d(x, y)` for the mutually distant pair.
    pub diam_lb: u32,
}

/// Radius upper bounds and a diameter lower bound from sweeps out of `start`.
pub fn radius_diameter_estimates(g: &Graph, start: Vertex) -> Result<RadDiamEstimates> {
    g.check_vertex(start)?;
    let (bx, by) = beam_with_distances(g, start);
    let fast_anchor = middle_of_canonical(g, &bx, by.source);
    let s = mutually_distant_pair(g, start)?;
    let tight_anchor = middle_of_canonical(g, &s.from_x, s.from_y.source);
    Ok(RadDiamEstimates {
        rad_ub_fast: g.bfs(fast_anchor).eccentricity(),
        fast_anchor,
        beam: (bx.source, by.source),
        rad_ub_tight: g.bfs(tight_anchor).eccentricity(),
        tight_anchor,
        pair: s.trace.terminal_pair,
        diam_lb: s.from_x.get(s.from_y.source),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{eccentricity_profile, OracleCaps};
    use crate::generators::{complete, cycle, path, random_tree};

    fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_dense_edges(leaves + 1, &e).unwrap()
    }

    fn identity_tree(g: &Graph, root: Vertex) -> SpanningTree {
        bfs_tree(g, root)
    }

    #[test]
    fn tree_ecc_examples() {
        let s = star(4);
        assert_eq!(tree_eccentricities(&s, &identity_tree(&s, 0)).unwrap(), vec![1, 2, 2, 2, 2]);
        let p5 = path(5).unwrap();
        assert_eq!(tree_eccentricities(&p5, &identity_tree(&p5, 3)).unwrap(), vec![4, 3, 2, 3, 4]);
        let p4 = path(4).unwrap();
        assert_eq!(tree_eccentricities(&p4, &identity_tree(&p4, 0)).unwrap(), vec![3, 2, 2, 3]);
    }

    #[test]
    fn tree_validation() {
        let c4 = cycle(4).unwrap();
        let bad_edge = SpanningTree { parent: vec![0, 0, 0, 0], root: 0 };
        assert!(matches!(tree_eccentricities(&c4, &bad_edge), Err(Error::InvalidTree(_))));
        let cyclic = SpanningTree { parent: vec![0, 2, 3, 2], root: 0 };
        assert!(matches!(tree_eccentricities(&c4, &cyclic), Err(Error::InvalidTree(_))));
        let bad_root = SpanningTree { parent: vec![1, 0, 1, 0], root: 0 };
        assert!(matches!(tree_eccentricities(&c4, &bad_root), Err(Error::InvalidTree(_))));
    }

    #[test]
    fn bfs_tree_keeps_root_distances() {
        let g = crate::generators::gnm_connected(50, 120, 5).unwrap();
        let t = bfs_tree(&g, 7);
        let d = g.bfs(7);
        let mut adj = vec![Vec::new(); g.n()];
        for (v, &p) in t.parent.iter().enumerate() {
            if v != t.root {
                adj[v].push(p);
                adj[p].push(v);
            }
        }
        assert_eq!(tree_bfs(&adj, &[7]), d.dist);
    }

    #[test]
    fn pair_left_on_c4() {
        let c4 = cycle(4).unwrap();
        let s = mutually_distant_pair(&c4, 0).unwrap();
        let a = approx_pair_left(&c4, &s.trace).unwrap();
        assert_eq!(a.anchors.x, 0);
        assert_eq!(a.anchors.y, 2);
        assert_eq!(a.est[1], 1);
        let right = a.shifted_right(2).unwrap();
        assert_eq!(right.est[1], 3);
        assert_eq!(right.guarantee.side, Side::Right);
    }

    #[test]
    fn rejects_non_mutual_pairs() {
        let p5 = path(5).unwrap();
        let trace = SweepTrace { sequence: vec![1, 3], dists: vec![2], terminal_pair: (1, 3), mutual: true, sweeps: 1 };
        assert_eq!(approx_pair_left(&p5, &trace), Err(Error::NotMutuallyDistant { x: 1, y: 3 }));
        assert!(approx_tree_middle(&p5, &trace).is_err());
    }

    #[test]
    fn exact_on_trees() {
        for seed in 0..8 {
            let t = random_tree(70, seed).unwrap();
            let e = eccentricity_profile(&t, &OracleCaps::default()).unwrap().ecc;
            for start in [0, 35] {
                assert_eq!(pair_left_from_start(&t, start).unwrap().est, e);
                let (tree, a) = tree_middle_from_start(&t, start).unwrap();
                assert_eq!(tree.root, a.anchors.c.unwrap());
                assert_eq!(a.est, e);
                let (_, f) = approx_tree_fast(&t, start, 1).unwrap();
                assert_eq!(f.est, e);
                let r = radius_diameter_estimates(&t, start).unwrap();
                let prof = eccentricity_profile(&t, &OracleCaps::default()).unwrap();
                assert_eq!((r.rad_ub_tight, r.diam_lb), (prof.rad, prof.diam));
            }
        }
    }

    #[test]
    fn c4_estimates() {
        let r = radius_diameter_estimates(&cycle(4).unwrap(), 0).unwrap();
        assert_eq!(r.diam_lb, 2);
        assert_eq!(r.pair, (0, 2));
    }

    #[test]
    fn bounds_evaluate_in_doubled_form() {
        assert_eq!(AdditiveBound::TwoDelta.evaluate(3), Some(3));
        assert_eq!(AdditiveBound::FourDeltaPlusOne.evaluate(3), Some(7));
        assert_eq!(AdditiveBound::SixDeltaPlusOneMinusK(1).evaluate(2), Some(6));
        assert_eq!(AdditiveBound::SixDeltaPlusOneMinusK(3).evaluate(2), None);
        assert_eq!(enclosure_radius(SweepMode::Beam, 1, 0), 3);
        assert_eq!(enclosure_radius(SweepMode::Mutual, 1, 2), 5);
    }

    #[test]
    fn enclosure_needs_delta() {
        let k4 = complete(4).unwrap();
        assert_eq!(center_enclosure(&k4, 0, SweepMode::Mutual, 0, None), Err(Error::MissingDelta));
        assert_eq!(center_enclosure(&k4, 0, SweepMode::Mutual, 0, Some(0)).unwrap().len(), 4);
        let t = random_tree(40, 3).unwrap();
        let prof = eccentricity_profile(&t, &OracleCaps::default()).unwrap();
        let (_, mid) = middle_vertices(&t, 0).unwrap();
        let enc = center_enclosure(&t, mid, SweepMode::Mutual, 0, Some(0)).unwrap();
        assert!(prof.center.iter().all(|c| enc.contains(c)));
    }
}

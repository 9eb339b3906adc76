//! β-pseudoconvexity and ε-quasiconvexity of vertex sets.
//!
//! `S` is β-pseudoconvex when every `z ∈ I(x, y) \ S` with `x, y ∈ S` lies
//! within β of `x` or of `y`, and ε-quasiconvex when every such interval lies
//! in `D(S, ε)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::exact::DistanceMatrix;
use crate::graph::disk;
use crate::rng::{derive_seed, SplitMix64};
use crate::{EccentricityProfile, Error, Graph, Result, Vertex};

/// Sets larger than this are checked on sampled member pairs.
pub const EXHAUSTIVE_SET_CAP: usize = 2000;
/// Member pairs drawn for sets above [`EXHAUSTIVE_SET_CAP`].
pub const SAMPLED_PAIRS: usize = 100_000;

trait Dist {
    fn n(&self) -> usize;
    /// `d(u, v)`; at least one of the two is a member of the set under test.
    fn d(&self, u: Vertex, v: Vertex) -> u32;
}

impl Dist for DistanceMatrix {
    fn n(&self) -> usize {
        DistanceMatrix::n(self)
    }

    fn d(&self, u: Vertex, v: Vertex) -> u32 {
        self.get(u, v)
    }
}

/// BFS rows from the members of a set.
struct MemberRows {
    pos: Vec<Option<usize>>,
    rows: Vec<Vec<u32>>,
}

impl MemberRows {
    fn new(g: &Graph, members: &[Vertex]) -> MemberRows {
        let mut pos = vec![None; g.n()];
        let mut rows = Vec::with_capacity(members.len());
        for &s in members {
            if pos[s].is_none() {
                pos[s] = Some(rows.len());
                rows.push(g.bfs(s).dist);
            }
        }
        MemberRows { pos, rows }
    }
}

impl Dist for MemberRows {
    fn n(&self) -> usize {
        self.pos.len()
    }

    fn d(&self, u: Vertex, v: Vertex) -> u32 {
        match (self.pos[u], self.pos[v]) {
            (Some(i), _) => self.rows[i][v],
            (None, Some(j)) => self.rows[j][u],
            (None, None) => unreachable!("neither endpoint is a set member"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoconvexityReport {
    /// The set, ascending and deduplicated.
    pub set: Vec<Vertex>,
    pub beta_min: u32,
    /// `(x, y, z)` with `x, y ∈ S`, `z ∈ I(x, y) \ S` and
    /// `min{d(z, x), d(z, y)} = beta_min`; the lexicographically first such
    /// triple. It refutes β-pseudoconvexity for every `β < beta_min`.
    pub witness: Option<(Vertex, Vertex, Vertex)>,
    pub pairs_examined: u64,
    /// False when member pairs were sampled.
    pub exhaustive: bool,
}

fn normalize(n: usize, s: &[Vertex]) -> Result<Vec<Vertex>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(set)
}

/// Member pairs `x < y` to examine: all of them, or a seeded sample.
fn member_pairs(set: &[Vertex]) -> (Vec<(Vertex, Vertex)>, bool) {
    let s = set.len();
    if s <= EXHAUSTIVE_SET_CAP {
        let pairs = (0..s).flat_map(|i| (i + 1..s).map(move |j| (set[i], set[j]))).collect();
        return (pairs, true);
    }
    let mut rng = SplitMix64::new(derive_seed(s as u64, "pseudoconvexity-pairs"));
    let mut pairs: Vec<_> = (0..SAMPLED_PAIRS)
        .map(|_| {
            let i = rng.index(s);
            let j = (i + 1 + rng.index(s - 1)) % s;
            (set[i.min(j)], set[i.max(j)])
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    (pairs, false)
}

fn beta_over<D: Dist>(dist: &D, set: Vec<Vertex>) -> PseudoconvexityReport {
    let n = dist.n();
    let mut in_set = vec![false; n];
    set.iter().for_each(|&v| in_set[v] = true);
    let (pairs, exhaustive) = member_pairs(&set);
    let mut best = 0;
    let mut witness = None;
    for &(x, y) in &pairs {
        let dxy = dist.d(x, y);
        // min{d(z, x), d(z, y)} ≤ ⌊d(x, y)/2⌋ on the interval
        if dxy / 2 <= best {
            continue;
        }
        for z in (0..n).filter(|&z| !in_set[z]) {
            let (a, b) = (dist.d(x, z), dist.d(y, z));
            if a + b == dxy {
                let m = a.min(b);
                if m > best {
                    best = m;
                    witness = Some((x, y, z));
                }
            }
        }
    }
    PseudoconvexityReport { set, beta_min: best, witness, pairs_examined: pairs.len() as u64, exhaustive }
}

/// Smallest β for which `s` is β-pseudoconvex, from BFS out of each member.
pub fn pseudoconvexity_beta(g: &Graph, s: &[Vertex]) -> Result<PseudoconvexityReport> {
    let set = normalize(g.n(), s)?;
    let rows = MemberRows::new(g, &sampled_members(&set));
    Ok(beta_over(&rows, set))
}

/// Members that can appear in [`member_pairs`]; all of them below the cap.
fn sampled_members(set: &[Vertex]) -> Vec<Vertex> {
    if set.len() <= EXHAUSTIVE_SET_CAP {
        return set.to_vec();
    }
    let mut used: Vec<Vertex> = member_pairs(set).0.into_iter().flat_map(|(a, b)| [a, b]).collect();
    used.sort_unstable();
    used.dedup();
    used
}

/// As [`pseudoconvexity_beta`], reading distances from a table.
pub fn pseudoconvexity_beta_in(m: &DistanceMatrix, s: &[Vertex]) -> Result<PseudoconvexityReport> {
    let set = normalize(m.n(), s)?;
    Ok(beta_over(m, set))
}

fn eps_over<D: Dist>(dist: &D, set: &[Vertex], to_set: &[u32]) -> u32 {
    let (pairs, _) = member_pairs(set);
    let mut eps = 0;
    for &(x, y) in &pairs {
        let dxy = dist.d(x, y);
        for (z, &t) in to_set.iter().enumerate() {
            if t > eps && dist.d(x, z) + dist.d(y, z) == dxy {
                eps = t;
            }
        }
    }
    eps
}

/// Smallest ε with `I(x, y) ⊆ D(S, ε)` for all `x, y ∈ S`.
pub fn quasiconvexity_eps(g: &Graph, s: &[Vertex]) -> Result<u32> {
    let set = normalize(g.n(), s)?;
    let rows = MemberRows::new(g, &sampled_members(&set));
    Ok(eps_over(&rows, &set, &g.bfs_multi(&set)))
}

pub fn quasiconvexity_eps_in(m: &DistanceMatrix, s: &[Vertex]) -> Result<u32> {
    let set = normalize(m.n(), s)?;
    Ok(eps_over(m, &set, &m.dist_to_set(&set)))
}

/// The pseudoconvexity parameter `2δ − 1` (0 when `δ ≤ 1/2`), doubled input.
pub fn allowed_beta(delta2: u32) -> u32 {
    delta2.saturating_sub(1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerConvexity {
    pub k: u32,
    pub size: usize,
    pub beta_min: u32,
    pub allowed_beta: u32,
    pub witness: Option<(Vertex, Vertex, Vertex)>,
    pub diameter: u32,
    /// `2k + 4δ + 1`
    pub diameter_bound: u32,
}

impl LayerConvexity {
    pub fn pseudoconvex_ok(&self) -> bool {
        self.beta_min <= self.allowed_beta
    }

    pub fn diameter_ok(&self) -> bool {
        self.diameter <= self.diameter_bound
    }

    pub fn ok(&self) -> bool {
        self.pseudoconvex_ok() && self.diameter_ok()
    }
}

/// Pseudoconvexity and diameter of every layer set `C_≤k(G)`.
pub fn check_layer_pseudoconvexity(m: &DistanceMatrix, prof: &EccentricityProfile, delta2: u32) -> Vec<LayerConvexity> {
    (0..=prof.max_layer())
        .map(|k| {
            let set = prof.c_le(k);
            let r = beta_over(m, set);
            LayerConvexity {
                k,
                size: r.set.len(),
                beta_min: r.beta_min,
                allowed_beta: allowed_beta(delta2),
                witness: r.witness,
                diameter: m.set_diameter(&r.set),
                diameter_bound: 2 * k + 2 * delta2 + 1,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskConvexity {
    pub center: Vertex,
    pub radius: u32,
    pub size: usize,
    pub beta_min: u32,
    pub allowed_beta: u32,
    pub witness: Option<(Vertex, Vertex, Vertex)>,
}

impl DiskConvexity {
    pub fn ok(&self) -> bool {
        self.beta_min <= self.allowed_beta
    }
}

/// Pseudoconvexity of `samples` seeded disks `D(c, r)`, `0 ≤ r ≤ e(c)`.
pub fn check_disk_pseudoconvexity(
    g: &Graph,
    m: &DistanceMatrix,
    delta2: u32,
    samples: usize,
    seed: u64,
) -> Vec<DiskConvexity> {
    let mut rng = SplitMix64::new(derive_seed(seed, "disks"));
    (0..samples)
        .map(|_| {
            let c = rng.index(g.n());
            let ecc = (0..g.n()).map(|v| m.get(c, v)).max().unwrap_or(0);
            let r = rng.below(ecc as u64 + 1) as u32;
            let set = disk(g, &[c], r).expect("non-empty centers");
            let rep = beta_over(m, set);
            DiskConvexity {
                center: c,
                radius: r,
                size: rep.set.len(),
                beta_min: rep.beta_min,
                allowed_beta: allowed_beta(delta2),
                witness: rep.witness,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{all_pairs_distances, eccentricity_profile, OracleCaps};
    use crate::generators::{complete, cycle, path, random_tree};

    #[test]
    fn path_endpoints() {
        let g = path(5).unwrap();
        let r = pseudoconvexity_beta(&g, &[0, 4]).unwrap();
        assert_eq!(r.beta_min, 2);
        assert_eq!(r.witness, Some((0, 4, 2)));
        assert_eq!(quasiconvexity_eps(&g, &[0, 4]).unwrap(), 2);
    }

    #[test]
    fn odd_positions_are_one_quasiconvex() {
        let g = path(7).unwrap();
        assert_eq!(quasiconvexity_eps(&g, &[0, 1, 3, 5, 6]).unwrap(), 1);
        assert_eq!(quasiconvexity_eps(&g, &[0, 2, 4, 6]).unwrap(), 1);
        // their intersection {v0, v6} is only 3-quasiconvex
        assert_eq!(quasiconvexity_eps(&g, &[0, 6]).unwrap(), 3);
    }

    #[test]
    fn trivial_sets() {
        let g = cycle(7).unwrap();
        let all: Vec<_> = (0..7).collect();
        assert_eq!(pseudoconvexity_beta(&g, &all).unwrap().beta_min, 0);
        assert_eq!(pseudoconvexity_beta(&g, &[3]).unwrap().witness, None);
        assert_eq!(pseudoconvexity_beta(&g, &[]), Err(Error::EmptySet));
        assert_eq!(quasiconvexity_eps(&g, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn c4_disk() {
        let g = cycle(4).unwrap();
        let r = pseudoconvexity_beta(&g, &[0, 1, 3]).unwrap();
        assert_eq!(r.beta_min, 1);
        assert_eq!(r.witness, Some((1, 3, 2)));
        assert!(r.beta_min <= allowed_beta(2));
    }

    #[test]
    fn tree_disks_and_layers_are_convex() {
        let g = random_tree(40, 2).unwrap();
        let m = all_pairs_distances(&g, &OracleCaps::default()).unwrap();
        for d in check_disk_pseudoconvexity(&g, &m, 0, 50, 1) {
            assert_eq!(d.beta_min, 0, "disk {} {}", d.center, d.radius);
        }
        let prof = eccentricity_profile(&g, &OracleCaps::default()).unwrap();
        for l in check_layer_pseudoconvexity(&m, &prof, 0) {
            assert!(l.ok());
            assert_eq!(l.beta_min, 0);
        }
    }

    #[test]
    fn complete_graph_disks() {
        let g = complete(6).unwrap();
        let m = all_pairs_distances(&g, &OracleCaps::default()).unwrap();
        assert!(check_disk_pseudoconvexity(&g, &m, 0, 20, 4).iter().all(|d| d.beta_min == 0));
    }

    #[test]
    fn table_and_bfs_agree() {
        let g = crate::generators::gnm_connected(40, 90, 7).unwrap();
        let m = all_pairs_distances(&g, &OracleCaps::default()).unwrap();
        let set = disk(&g, &[3], 2).unwrap();
        assert_eq!(pseudoconvexity_beta(&g, &set).unwrap(), pseudoconvexity_beta_in(&m, &set).unwrap());
        assert_eq!(quasiconvexity_eps(&g, &set).unwrap(), quasiconvexity_eps_in(&m, &set).unwrap());
    }
}

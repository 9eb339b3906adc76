//! Pseudoconvexity of disks and layer sets, intersections, and layer-set
//! diameters.

use alloc::vec;
use alloc::vec::Vec;

use super::{le, shape_ok, Coverage, Oracle, SuiteContext, Tally, Violation};
use crate::convexity::{
    allowed_beta, check_disk_pseudoconvexity, check_layer_pseudoconvexity, pseudoconvexity_beta,
    pseudoconvexity_beta_in, quasiconvexity_eps, quasiconvexity_eps_in, EXHAUSTIVE_SET_CAP,
};
use crate::rng::SplitMix64;
use crate::Vertex;

fn disk_of<O: Oracle + ?Sized>(o: &O, c: Vertex, r: u32) -> Vec<Vertex> {
    (0..o.n()).filter(|&v| o.d(c, v) <= r).collect()
}

/// `min{d(z, x), d(z, y)}` for a triple leaving a set.
fn gap<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, z: Vertex) -> i64 {
    o.d(z, x).min(o.d(z, y)) as i64
}

fn random_disk(o: &super::TableOracle<'_>, rng: &mut SplitMix64) -> (Vertex, u32) {
    let c = rng.index(o.n());
    let r = rng.below(o.e(c) as u64 + 1) as u32;
    (c, r)
}

pub(crate) mod cvx1 {
    use super::*;

    /// `vs = [c, x, y, z]`, `ps = [r]`: `x, y ∈ D(c, r)`, `z ∈ I(x, y)` outside.
    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, z: Vertex) -> Option<Violation> {
        le("disk_pseudoconvex", gap(o, x, y, z), allowed_beta(o.delta2()) as i64)
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        let disks =
            check_disk_pseudoconvexity(ctx.graph(), o.matrix(), o.delta2, ctx.config.disk_samples, rng.next_u64());
        for dc in &disks {
            let v = dc.witness.and_then(|(x, y, z)| claim(o, x, y, z));
            t.record(v, || {
                let (x, y, z) = dc.witness.unwrap();
                (vec![dc.center, x, y, z], vec![dc.radius])
            });
        }
        t.covered(Coverage::Sampled);
        t.stat("disks", disks.len() as u64);
        t.stat("max_beta", disks.iter().map(|d| d.beta_min as u64).max().unwrap_or(0));
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        if !shape_ok(o, vs, 4) || ps.len() != 1 {
            return None;
        }
        let (c, x, y, z, r) = (vs[0], vs[1], vs[2], vs[3], ps[0]);
        let pre = o.d(c, x) <= r && o.d(c, y) <= r && o.d(c, z) > r && o.in_interval(x, y, z);
        pre.then(|| claim(o, x, y, z)).flatten()
    }
}

pub(crate) mod cvx2 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, z: Vertex) -> Option<Violation> {
        le("layer_pseudoconvex", gap(o, x, y, z), allowed_beta(o.delta2()) as i64)
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        let layers = check_layer_pseudoconvexity(o.matrix(), o.profile(), o.delta2);
        for l in &layers {
            let v = l.witness.and_then(|(x, y, z)| claim(o, x, y, z));
            t.record(v, || {
                let (x, y, z) = l.witness.unwrap();
                (vec![x, y, z], vec![l.k])
            });
            if l.size > EXHAUSTIVE_SET_CAP {
                t.covered(Coverage::Sampled);
            }
        }
        t.stat("layers", layers.len() as u64);
        t.stat("max_beta", layers.iter().map(|l| l.beta_min as u64).max().unwrap_or(0));
        t
    }

    /// `vs = [x, y, z]`, `ps = [k]`.
    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        if !shape_ok(o, vs, 3) || ps.len() != 1 {
            return None;
        }
        let (x, y, z, k) = (vs[0], vs[1], vs[2], ps[0]);
        let pre = o.layer(x) <= k && o.layer(y) <= k && o.layer(z) > k && o.in_interval(x, y, z);
        pre.then(|| claim(o, x, y, z)).flatten()
    }
}

pub(crate) mod cvx3 {
    use super::*;

    const INTERSECTION: u32 = 0;
    const QUASI: u32 = 1;

    /// A triple leaving `S1 ∩ S2` against the parameters of the two disks.
    pub(crate) fn claim_intersection<O: Oracle + ?Sized>(
        o: &O,
        (x, y, z): (Vertex, Vertex, Vertex),
        beta1: u32,
        beta2: u32,
    ) -> Option<Violation> {
        le("intersection_closure", gap(o, x, y, z), beta1.max(beta2) as i64)
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let m = o.matrix();
        let mut t = Tally::new();
        let mut quasi_tested = 0;
        for _ in 0..ctx.config.disk_pairs {
            let (c1, r1) = random_disk(o, rng);
            let (c2, r2) = random_disk(o, rng);
            let s1 = disk_of(o, c1, r1);
            let s2 = disk_of(o, c2, r2);
            let b1 = pseudoconvexity_beta_in(m, &s1).expect("disks are non-empty");
            let b2 = pseudoconvexity_beta_in(m, &s2).expect("disks are non-empty");
            let both: Vec<Vertex> = s1.iter().copied().filter(|&v| o.d(c2, v) <= r2).collect();
            if !both.is_empty() {
                let b12 = pseudoconvexity_beta_in(m, &both).expect("checked non-empty");
                let v = b12.witness.and_then(|w| claim_intersection(o, w, b1.beta_min, b2.beta_min));
                t.record(v, || {
                    let (x, y, z) = b12.witness.unwrap();
                    (vec![c1, c2, x, y, z], vec![INTERSECTION, r1, r2])
                });
            }
            for (c, r, s, b) in [(c1, r1, &s1, &b1), (c2, r2, &s2, &b2)] {
                let eps = quasiconvexity_eps_in(m, s).expect("disks are non-empty");
                quasi_tested += 1;
                t.record(le("pseudo_implies_quasi", eps as i64, b.beta_min as i64), || (vec![c], vec![QUASI, r]));
            }
        }
        t.covered(Coverage::Sampled);
        t.stat("disk_pairs", ctx.config.disk_pairs as u64);
        t.stat("quasi_instances", quasi_tested);
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        let g = o.graph();
        match ps {
            [INTERSECTION, r1, r2] if shape_ok(o, vs, 5) => {
                let (c1, c2, x, y, z) = (vs[0], vs[1], vs[2], vs[3], vs[4]);
                let inside = |v| o.d(c1, v) <= *r1 && o.d(c2, v) <= *r2;
                if !(inside(x) && inside(y) && !inside(z) && o.in_interval(x, y, z)) {
                    return None;
                }
                let b1 = pseudoconvexity_beta(g, &disk_of(o, c1, *r1)).ok()?;
                let b2 = pseudoconvexity_beta(g, &disk_of(o, c2, *r2)).ok()?;
                claim_intersection(o, (x, y, z), b1.beta_min, b2.beta_min)
            }
            [QUASI, r] if shape_ok(o, vs, 1) => {
                let s = disk_of(o, vs[0], *r);
                let eps = quasiconvexity_eps(g, &s).ok()?;
                let beta = pseudoconvexity_beta(g, &s).ok()?.beta_min;
                le("pseudo_implies_quasi", eps as i64, beta as i64)
            }
            _ => None,
        }
    }
}

pub(crate) mod cvx4 {
    use super::*;

    const DIAMETER: u32 = 0;
    const AVOIDING: u32 = 1;

    pub(crate) fn claim_diameter<O: Oracle + ?Sized>(o: &O, u: Vertex, v: Vertex, k: u32) -> Option<Violation> {
        le("layer_diameter", o.d(u, v) as i64, 2 * k as i64 + o.delta2() as i64 + 1)
    }

    /// Whether the interior of `path` avoids `C_≤k`, `k` the larger layer of
    /// its endpoints.
    fn avoids<O: Oracle + ?Sized>(o: &O, path: &[Vertex]) -> bool {
        if path.len() < 2 {
            return false;
        }
        let k = o.layer(path[0]).max(o.layer(path[path.len() - 1]));
        path[1..path.len() - 1].iter().all(|&v| o.layer(v) > k)
    }

    /// Shortest paths between members of `C_≤k` whose interior avoids it.
    /// Convexity covers `δ ≤ 1/2`, where the interior must be empty.
    pub(crate) fn claim_avoiding<O: Oracle + ?Sized>(o: &O, path: &[Vertex]) -> Option<Violation> {
        if !avoids(o, path) {
            return None;
        }
        let bound = (2 * o.delta2() as i64 - 1).max(1);
        le("center_avoiding_path", path.len() as i64 - 1, bound)
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let prof = o.profile();
        let mut t = Tally::new();
        for k in 0..=prof.max_layer() {
            let set = prof.c_le(k);
            let mut best = (0, set[0], set[0]);
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    if o.d(u, v) > best.0 {
                        best = (o.d(u, v), u, v);
                    }
                }
            }
            let (_, u, v) = best;
            t.record(claim_diameter(o, u, v, k), || (vec![u, v], vec![DIAMETER, k]));
        }
        let mut avoiding = 0;
        ctx.paths.for_each(o, |p| {
            if avoids(o, p) {
                avoiding += 1;
                t.record(claim_avoiding(o, p), || (p.to_vec(), vec![AVOIDING]));
            }
        });
        t.covered(ctx.paths.coverage());
        t.stat("center_avoiding_paths", avoiding);
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        match ps {
            [DIAMETER, k] if shape_ok(o, vs, 2) => {
                (o.layer(vs[0]) <= *k && o.layer(vs[1]) <= *k).then(|| claim_diameter(o, vs[0], vs[1], *k)).flatten()
            }
            [AVOIDING] if o.is_shortest_path(vs) => claim_avoiding(o, vs),
            _ => None,
        }
    }
}

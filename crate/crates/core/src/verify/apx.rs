//! Radius, diameter and all-eccentricity estimators against exact values,
//! run from every start vertex (or a seeded sample of them).

use alloc::vec;
use alloc::vec::Vec;

use super::{le, shape_ok, Oracle, SuiteContext, Tally, Violation};
use crate::approx::{
    approx_tree_fast, pair_left_from_start, radius_diameter_estimates, tree_middle_from_start, ApproxEccentricities,
};
use crate::rng::SplitMix64;
use crate::Vertex;

fn dd<O: Oracle + ?Sized>(o: &O) -> i64 {
    o.delta2() as i64
}

pub(crate) mod rad1 {
    use super::*;
    use crate::approx::RadDiamEstimates;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, r: &RadDiamEstimates) -> Option<Violation> {
        let (rad, diam, dd) = (o.rad() as i64, o.diam() as i64, dd(o));
        let fast = o.e(r.fast_anchor) as i64;
        let tight = o.e(r.tight_anchor) as i64;
        let lb = r.diam_lb as i64;
        le("fast_reported", r.rad_ub_fast as i64, fast)
            .or_else(|| le("fast_reported_exact", fast, r.rad_ub_fast as i64))
            .or_else(|| le("tight_reported", r.rad_ub_tight as i64, tight))
            .or_else(|| le("tight_reported_exact", tight, r.rad_ub_tight as i64))
            .or_else(|| le("beam_middle", 2 * fast, 2 * rad + 3 * dd))
            .or_else(|| le("mutual_middle", tight, rad + dd))
            .or_else(|| le("pair_upper", lb, diam))
            .or_else(|| le("pair_lower", diam - dd, lb))
            .or_else(|| le("pair_radius", 2 * rad - 2 * dd - 1, lb))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        let (starts, cov) = ctx.starts(rng);
        for s in starts {
            if let Ok(r) = radius_diameter_estimates(ctx.graph(), s) {
                t.record(claim(o, &r), || (vec![s], Vec::new()));
            }
        }
        t.covered(cov);
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        if !shape_ok(o, vs, 1) {
            return None;
        }
        claim(o, &radius_diameter_estimates(o.graph(), vs[0]).ok()?)
    }
}

/// Records `claim(est[v], v)` for every vertex of every start's estimate.
fn run_estimator(
    ctx: &SuiteContext<'_>,
    rng: &mut SplitMix64,
    ks: &[u32],
    estimate: impl Fn(Vertex, u32) -> Option<ApproxEccentricities>,
    claim: impl Fn(&ApproxEccentricities, Vertex) -> Option<Violation>,
) -> Tally {
    let mut t = Tally::new();
    let (starts, cov) = ctx.starts(rng);
    for s in starts {
        for &k in ks {
            let Some(a) = estimate(s, k) else { continue };
            for v in 0..ctx.n() {
                t.record(claim(&a, v), || (vec![s, v], vec![k]));
            }
        }
    }
    t.covered(cov);
    t
}

fn eval_estimator<O: Oracle + ?Sized>(
    o: &O,
    vs: &[Vertex],
    ps: &[u32],
    estimate: impl Fn(Vertex, u32) -> Option<ApproxEccentricities>,
    claim: impl Fn(&O, &ApproxEccentricities, Vertex) -> Option<Violation>,
) -> Option<Violation> {
    if !shape_ok(o, vs, 2) || ps.len() != 1 {
        return None;
    }
    claim(o, &estimate(vs[0], ps[0])?, vs[1])
}

pub(crate) mod apx1 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, a: &ApproxEccentricities, v: Vertex) -> Option<Violation> {
        let (est, e) = (a.est[v] as i64, o.e(v) as i64);
        le("left_sided", est, e).or_else(|| le("pair_error", e, est + dd(o)))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let g = ctx.graph();
        run_estimator(ctx, rng, &[0], |s, _| pair_left_from_start(g, s).ok(), |a, v| claim(&ctx.oracle, a, v))
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        eval_estimator(o, vs, ps, |s, _| pair_left_from_start(o.graph(), s).ok(), claim)
    }
}

pub(crate) mod apx2 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, a: &ApproxEccentricities, v: Vertex) -> Option<Violation> {
        let (est, e) = (a.est[v] as i64, o.e(v) as i64);
        le("right_sided", e, est).or_else(|| le("tree_middle_error", est, e + 2 * dd(o) + 1))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let g = ctx.graph();
        run_estimator(
            ctx,
            rng,
            &[0],
            |s, _| tree_middle_from_start(g, s).ok().map(|r| r.1),
            |a, v| claim(&ctx.oracle, a, v),
        )
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        eval_estimator(o, vs, ps, |s, _| tree_middle_from_start(o.graph(), s).ok().map(|r| r.1), claim)
    }
}

pub(crate) mod apx3 {
    use super::*;

    /// The guarantee the run reports, which needs `k ≤ 2δ` unless it stopped
    /// at a mutually distant pair. For `k = 1` and `δ > 0` the bound is at
    /// most `6δ`.
    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, a: &ApproxEccentricities, v: Vertex) -> Option<Violation> {
        let (est, e, dd) = (a.est[v] as i64, o.e(v) as i64, dd(o));
        let k = a.k.unwrap_or(0) as i64;
        le("right_sided", e, est)
            .or_else(|| match a.bound(o.delta2()) {
                Some(b) => le("tree_fast_error", est, e + b as i64),
                None => le("k_within_two_delta", k, dd),
            })
            .or_else(|| (k == 1 && dd > 0).then(|| le("tree_fast_k1_error", est, e + 3 * dd)).flatten())
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let g = ctx.graph();
        run_estimator(
            ctx,
            rng,
            &[0, 1, 2],
            |s, k| approx_tree_fast(g, s, k).ok().map(|r| r.1),
            |a, v| claim(&ctx.oracle, a, v),
        )
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        eval_estimator(o, vs, ps, |s, k| approx_tree_fast(o.graph(), s, k).ok().map(|r| r.1), claim)
    }
}

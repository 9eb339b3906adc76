//! Consequences of the duality lemma on single intervals.

use super::{interval_ok, le, run_xyc, run_xycv, Oracle, SuiteContext, Tally, Violation};
use crate::rng::SplitMix64;
use crate::Vertex;

fn delta2<O: Oracle + ?Sized>(o: &O) -> i64 {
    o.delta2() as i64
}

pub(crate) mod dual1 {
    use super::*;

    /// The branch based at `a` (opposite end `b`), when its condition holds.
    fn side<O: Oracle + ?Sized>(o: &O, a: Vertex, b: Vertex, c: Vertex, v: Vertex) -> Option<Violation> {
        let dd = delta2(o);
        let d = |p, q| o.d(p, q) as i64;
        if 2 * d(a, c) > d(v, a) + d(b, a) - d(v, b) {
            return None;
        }
        le("dist_drop", d(c, v), d(a, v) - d(a, c) + dd)
            .or_else(|| le("dist_half", 2 * d(c, v), 2 * d(a, v) + dd))
            .or_else(|| {
                if o.d(c, v) != o.e(c) {
                    return None;
                }
                let (ec, ea) = (o.e(c) as i64, o.e(a) as i64);
                le("ecc_drop", ec, ea - d(a, c) + dd).or_else(|| le("ecc_half", 2 * ec, 2 * ea + dd))
            })
    }

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex, v: Vertex) -> Option<Violation> {
        side(o, x, y, c, v).or_else(|| side(o, y, x, c, v))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        run_xycv(ctx, rng, claim)
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        interval_ok(o, vs, 4).then(|| claim(o, vs[0], vs[1], vs[2], vs[3])).flatten()
    }
}

pub(crate) mod dual2 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex, v: Vertex) -> Option<Violation> {
        let d = |p, q| o.d(p, q) as i64;
        le("max_min", d(c, v), d(x, v).max(d(y, v)) - d(x, c).min(d(y, c)) + delta2(o))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        run_xycv(ctx, rng, claim)
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        interval_ok(o, vs, 4).then(|| claim(o, vs[0], vs[1], vs[2], vs[3])).flatten()
    }
}

/// The three-part bound shared by distances and eccentricities: `value(c)`
/// against `max(value(x), value(y))`.
fn middle_bounds(dd: i64, dxy: i64, dxc: i64, dyc: i64, vc: i64, mx: i64) -> Option<Violation> {
    le("half_delta", 2 * vc, 2 * mx + dd)
        .or_else(|| (dxy >= 2 * dd && dxc >= dd && dyc >= dd).then(|| le("far_middle", vc, mx)).flatten())
        .or_else(|| (dxy > 2 * dd + 1 && dxc > dd && dyc > dd).then(|| le("far_middle_strict", vc, mx - 1)).flatten())
}

pub(crate) mod dual3 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex, v: Vertex) -> Option<Violation> {
        let d = |p, q| o.d(p, q) as i64;
        middle_bounds(delta2(o), d(x, y), d(x, c), d(y, c), d(c, v), d(x, v).max(d(y, v)))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        run_xycv(ctx, rng, claim)
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        interval_ok(o, vs, 4).then(|| claim(o, vs[0], vs[1], vs[2], vs[3])).flatten()
    }
}

pub(crate) mod dual4 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex) -> Option<Violation> {
        let d = |p, q| o.d(p, q) as i64;
        let e = |p| o.e(p) as i64;
        middle_bounds(delta2(o), d(x, y), d(x, c), d(y, c), e(c), e(x).max(e(y)))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        run_xyc(ctx, rng, claim)
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        interval_ok(o, vs, 3).then(|| claim(o, vs[0], vs[1], vs[2])).flatten()
    }
}

pub(crate) mod dual5 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex) -> Option<Violation> {
        let dd = delta2(o);
        let dxy = o.d(x, y) as i64;
        let applies = dxy > dd && o.d(x, c) as i64 == dd + 1 && o.e(c) >= o.e(x).max(o.e(y));
        applies.then(|| le("short_pair", dxy, 2 * dd + 1)).flatten()
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        run_xyc(ctx, rng, claim)
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        interval_ok(o, vs, 3).then(|| claim(o, vs[0], vs[1], vs[2])).flatten()
    }
}

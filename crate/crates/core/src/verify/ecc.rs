//! Eccentricity bounds: oracle sanity, distance to the center, furthest
//! vertices, beams, mutually distant pairs and center enclosures.

use alloc::vec;
use alloc::vec::Vec;

use super::{le, shape_ok, Coverage, Oracle, SuiteContext, TableOracle, Tally, Violation};
use crate::approx::{center_enclosure, enclosure_radius, middle_vertices, SweepMode};
use crate::rng::SplitMix64;
use crate::Vertex;

fn furthest<O: Oracle + ?Sized>(o: &O, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
    let ex = o.e(x);
    (0..o.n()).filter(move |&y| o.d(x, y) == ex)
}

fn is_furthest<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex) -> bool {
    o.d(x, y) == o.e(x)
}

fn dd<O: Oracle + ?Sized>(o: &O) -> i64 {
    o.delta2() as i64
}

/// Beams `(z, x, y)`: `x ∈ F(z)` with the smallest such `z`, and `y ∈ F(x)`.
fn beams(o: &TableOracle<'_>) -> Vec<(Vertex, Vertex, Vertex)> {
    let n = o.n();
    let mut rep = vec![usize::MAX; n];
    for z in 0..n {
        for x in furthest(o, z) {
            if rep[x] == usize::MAX {
                rep[x] = z;
            }
        }
    }
    (0..n)
        .filter(|&x| rep[x] != usize::MAX)
        .flat_map(|x| {
            let z = rep[x];
            furthest(o, x).map(move |y| (z, x, y))
        })
        .collect()
}

/// Ordered mutually distant pairs.
fn mutual_pairs(o: &TableOracle<'_>) -> Vec<(Vertex, Vertex)> {
    (0..o.n()).flat_map(|x| furthest(o, x).filter(move |&y| is_furthest(o, y, x)).map(move |y| (x, y))).collect()
}

/// Visits `(item, c)` for `c` among `candidates(item)` (every vertex when
/// `None`); exhaustive when the total is within the cap, otherwise sampled.
fn for_each_member<T: Copy>(
    ctx: &SuiteContext<'_>,
    rng: &mut SplitMix64,
    items: &[T],
    candidates: Option<&dyn Fn(T) -> Vec<Vertex>>,
    mut f: impl FnMut(T, Vertex),
) -> Coverage {
    let n = ctx.n();
    if items.is_empty() {
        return Coverage::Exhaustive;
    }
    let sets: Option<Vec<Vec<Vertex>>> = candidates.map(|cand| items.iter().map(|&t| cand(t)).collect());
    let total: u64 = match &sets {
        Some(sets) => sets.iter().map(|s| s.len() as u64).sum(),
        None => items.len() as u64 * n as u64,
    };
    if total <= ctx.config.exhaustive_cap {
        for (i, &t) in items.iter().enumerate() {
            match &sets {
                Some(sets) => sets[i].iter().for_each(|&c| f(t, c)),
                None => (0..n).for_each(|c| f(t, c)),
            }
        }
        return Coverage::Exhaustive;
    }
    for _ in 0..ctx.config.samples {
        let i = rng.index(items.len());
        match &sets {
            Some(sets) if sets[i].is_empty() => {}
            Some(sets) => f(items[i], sets[i][rng.index(sets[i].len())]),
            None => f(items[i], rng.index(n)),
        }
    }
    Coverage::Sampled
}

pub(crate) mod orc1 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, u: Vertex, v: Vertex) -> Option<Violation> {
        le("lipschitz", (o.e(u) as i64 - o.e(v) as i64).abs(), 1)
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        for (u, v) in ctx.graph().edges() {
            t.record(claim(o, u, v), || (vec![u, v], Vec::new()));
        }
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        (shape_ok(o, vs, 2) && o.graph().has_edge(vs[0], vs[1])).then(|| claim(o, vs[0], vs[1])).flatten()
    }
}

pub(crate) mod orc2 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O) -> Option<Violation> {
        le("delta_le_half_diameter", dd(o), o.diam() as i64)
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let mut t = Tally::new();
        t.record(claim(&ctx.oracle), || (Vec::new(), Vec::new()));
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, _: &[Vertex], _: &[u32]) -> Option<Violation> {
        claim(o)
    }
}

pub(crate) mod ecc1 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex) -> Option<Violation> {
        let (e, rad, dd) = (o.e(x) as i64, o.rad() as i64, dd(o));
        let to_cd = o.dist_to_layers(x, o.delta2()) as i64;
        let to_c = o.dist_to_layers(x, 0) as i64;
        le("ecc_ge_c_delta", to_cd + rad, e)
            .or_else(|| le("ecc_le_c_delta", e, to_cd + rad + dd))
            .or_else(|| le("ecc_ge_center", to_c + rad - 2 * dd, e))
            .or_else(|| le("ecc_le_center", e, to_c + rad))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        (0..o.n()).for_each(|x| t.record(claim(o, x), || (vec![x], Vec::new())));
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        shape_ok(o, vs, 1).then(|| claim(o, vs[0])).flatten()
    }
}

pub(crate) mod ecc2 {
    use super::*;

    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex) -> Option<Violation> {
        let (k, dd) = (o.layer(x) as i64, dd(o));
        let l = o.dist_to_layers(x, o.delta2()) as i64;
        let to_c = o.dist_to_layers(x, 0) as i64;
        le("c_delta_le_layer", l, k)
            .or_else(|| le("layer_le_center", k, to_c))
            .or_else(|| le("layer_le_c_delta", k - dd, l))
            .or_else(|| le("center_le_layer", to_c, k + 2 * dd))
            .or_else(|| le("center_le_c_delta", to_c, l + 3 * dd))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        (0..o.n()).for_each(|x| t.record(claim(o, x), || (vec![x], Vec::new())));
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        shape_ok(o, vs, 1).then(|| claim(o, vs[0])).flatten()
    }
}

pub(crate) mod ecc3 {
    use super::*;

    /// `y ∈ F(x)`, `c ∈ I(x, y)` with `d(y, c) ≥ rad`.
    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, _x: Vertex, y: Vertex, c: Vertex) -> Option<Violation> {
        let (rad, dyc) = (o.rad() as i64, o.d(y, c) as i64);
        le("slice_from_far_end", o.e(c) as i64, rad + dd(o) + (dyc - rad))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let m = o.matrix();
        let rad = o.rad();
        let pairs: Vec<(Vertex, Vertex)> = (0..o.n()).flat_map(|x| furthest(o, x).map(move |y| (x, y))).collect();
        let mut t = Tally::new();
        let cov = for_each_member(
            ctx,
            rng,
            &pairs,
            Some(&|(x, y)| m.interval(x, y).into_iter().filter(|&c| m.get(y, c) >= rad).collect()),
            |(x, y), c| t.record(claim(o, x, y, c), || (vec![x, y, c], Vec::new())),
        );
        t.covered(cov);
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        let ok = shape_ok(o, vs, 3)
            && is_furthest(o, vs[0], vs[1])
            && o.in_interval(vs[0], vs[1], vs[2])
            && o.d(vs[1], vs[2]) >= o.rad();
        ok.then(|| claim(o, vs[0], vs[1], vs[2])).flatten()
    }
}

pub(crate) mod ecc4 {
    use super::*;

    /// `{x, y}` mutually distant, any `c`.
    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex) -> Option<Violation> {
        let dd = dd(o);
        let (dxy, dxc, dyc) = (o.d(x, y) as i64, o.d(x, c) as i64, o.d(y, c) as i64);
        let (ec, rad) = (o.e(c) as i64, o.rad() as i64);
        let mx = dxc.max(dyc);
        let middle = dxc + dyc == dxy && (dxc == dxy / 2 || dyc == dxy / 2);
        le("pair_lower", mx, ec)
            .or_else(|| le("pair_upper", ec, mx + dd))
            .or_else(|| {
                middle
                    .then(|| le("middle_half", ec, (dxy + 1) / 2 + dd).or_else(|| le("middle_radius", ec, rad + dd)))
                    .flatten()
            })
            .or_else(|| le("pair_length", 2 * rad - 2 * dd - 1, dxy))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let pairs = mutual_pairs(o);
        let mut t = Tally::new();
        let cov = for_each_member(ctx, rng, &pairs, None, |(x, y), c| {
            t.record(claim(o, x, y, c), || (vec![x, y, c], Vec::new()))
        });
        t.covered(cov);
        t.stat("mutual_pairs", pairs.len() as u64);
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        let ok = shape_ok(o, vs, 3) && is_furthest(o, vs[0], vs[1]) && is_furthest(o, vs[1], vs[0]);
        ok.then(|| claim(o, vs[0], vs[1], vs[2])).flatten()
    }
}

pub(crate) mod ecc5 {
    use super::*;

    /// `v ∈ F(c)`.
    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, _c: Vertex, v: Vertex) -> Option<Violation> {
        le("furthest_almost_diametral", o.diam() as i64, o.e(v) as i64 + dd(o))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        for c in 0..o.n() {
            furthest(o, c).for_each(|v| t.record(claim(o, c, v), || (vec![c, v], Vec::new())));
        }
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        (shape_ok(o, vs, 2) && is_furthest(o, vs[0], vs[1])).then(|| claim(o, vs[0], vs[1])).flatten()
    }
}

pub(crate) mod ecc6 {
    use super::*;

    /// `y ∈ F(x)`.
    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, _x: Vertex, y: Vertex) -> Option<Violation> {
        let (ey, dd) = (o.e(y) as i64, dd(o));
        le("beam_end_diameter", o.diam() as i64 - dd, ey)
            .or_else(|| le("beam_end_radius", 2 * o.rad() as i64 - 3 * dd - 1, ey))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let mut t = Tally::new();
        for x in 0..o.n() {
            furthest(o, x).for_each(|y| t.record(claim(o, x, y), || (vec![x, y], Vec::new())));
        }
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        (shape_ok(o, vs, 2) && is_furthest(o, vs[0], vs[1])).then(|| claim(o, vs[0], vs[1])).flatten()
    }
}

/// `x ∈ F(z)` and `y ∈ F(x)`.
fn beam_ok<O: Oracle + ?Sized>(o: &O, z: Vertex, x: Vertex, y: Vertex) -> bool {
    is_furthest(o, z, x) && is_furthest(o, x, y)
}

/// Vertices of `S_⌈d/2⌉(x, y) ∪ S_⌈d/2⌉(y, x)`.
fn ceil_slices(o: &TableOracle<'_>, x: Vertex, y: Vertex) -> Vec<Vertex> {
    let m = o.matrix();
    let h = m.get(x, y).div_ceil(2);
    m.interval(x, y).into_iter().filter(|&c| m.get(x, c) == h || m.get(y, c) == h).collect()
}

fn in_ceil_slices<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex) -> bool {
    let h = o.d(x, y).div_ceil(2);
    o.in_interval(x, y, c) && (o.d(x, c) == h || o.d(y, c) == h)
}

pub(crate) mod ecc7 {
    use super::*;

    /// A beam `(z, x, y)` and `c ∈ S_⌊d/2⌋(x, y)`.
    pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, x: Vertex, y: Vertex, c: Vertex) -> Option<Violation> {
        let (ec, dd, dxy) = (o.e(c) as i64, dd(o), o.d(x, y) as i64);
        le("beam_middle_radius", 2 * ec, 2 * o.rad() as i64 + 3 * dd)
            .or_else(|| le("beam_middle_half", ec, (dxy + 1) / 2 + 2 * dd))
    }

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        let o = &ctx.oracle;
        let m = o.matrix();
        let triples = beams(o);
        let mut t = Tally::new();
        let cov =
            for_each_member(ctx, rng, &triples, Some(&|(_, x, y)| m.slice(x, y, m.get(x, y) / 2)), |(z, x, y), c| {
                t.record(claim(o, x, y, c), || (vec![z, x, y, c], Vec::new()))
            });
        t.covered(cov);
        t.stat("beams", triples.len() as u64);
        t
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
        if !shape_ok(o, vs, 4) {
            return None;
        }
        let (z, x, y, c) = (vs[0], vs[1], vs[2], vs[3]);
        let ok = beam_ok(o, z, x, y) && o.in_interval(x, y, c) && o.d(x, c) == o.d(x, y) / 2;
        ok.then(|| claim(o, x, y, c)).flatten()
    }
}

const ALL_MIDDLES: u32 = 0;
const API: u32 = 1;

/// Enclosure claim for a middle vertex `c` and any `u`, at the layer of `u`.
fn enclosure_claim<O: Oracle + ?Sized>(o: &O, mode: SweepMode, c: Vertex, u: Vertex) -> Option<Violation> {
    let r = enclosure_radius(mode, o.delta2(), o.layer(u));
    le("enclosure", o.d(c, u) as i64, r as i64)
}

/// The library's middle vertex from `start` and its enclosure of `C_≤k`:
/// `u ∈ C_≤k` missing from the returned disk.
fn api_claim<O: Oracle + ?Sized>(o: &O, mode: SweepMode, start: Vertex, k: u32, u: Vertex) -> Option<Violation> {
    let (beam_mid, mutual_mid) = middle_vertices(o.graph(), start).ok()?;
    let c = if mode == SweepMode::Beam { beam_mid } else { mutual_mid };
    let disk = center_enclosure(o.graph(), c, mode, k, Some(o.delta2())).ok()?;
    if o.layer(u) > k || disk.binary_search(&u).is_ok() {
        return None;
    }
    le("enclosure_api", o.d(c, u) as i64, enclosure_radius(mode, o.delta2(), k) as i64)
}

fn run_api(ctx: &SuiteContext<'_>, rng: &mut SplitMix64, mode: SweepMode, t: &mut Tally) {
    let o = &ctx.oracle;
    let (starts, cov) = ctx.starts(rng);
    for s in starts {
        let Ok((beam_mid, mutual_mid)) = middle_vertices(ctx.graph(), s) else { continue };
        let c = if mode == SweepMode::Beam { beam_mid } else { mutual_mid };
        for k in 0..=2 {
            let Ok(disk) = center_enclosure(ctx.graph(), c, mode, k, Some(o.delta2)) else { continue };
            for u in o.profile().c_le(k) {
                let v = if disk.binary_search(&u).is_ok() {
                    None
                } else {
                    le("enclosure_api", o.d(c, u) as i64, enclosure_radius(mode, o.delta2, k) as i64)
                };
                t.record(v, || (vec![s, u], vec![API, k]));
            }
        }
    }
    t.covered(cov);
}

fn eval_enclosure(o: &dyn Oracle, vs: &[Vertex], ps: &[u32], mode: SweepMode) -> Option<Violation> {
    match ps {
        [ALL_MIDDLES] if shape_ok(o, vs, 5) => {
            let (z, x, y, c, u) = (vs[0], vs[1], vs[2], vs[3], vs[4]);
            let pair_ok = match mode {
                SweepMode::Beam => beam_ok(o, z, x, y),
                SweepMode::Mutual => is_furthest(o, x, y) && is_furthest(o, y, x),
            };
            (pair_ok && in_ceil_slices(o, x, y, c)).then(|| enclosure_claim(o, mode, c, u)).flatten()
        }
        [API, k] if shape_ok(o, vs, 2) => api_claim(o, mode, vs[0], *k, vs[1]),
        _ => None,
    }
}

fn run_enclosure(ctx: &SuiteContext<'_>, rng: &mut SplitMix64, mode: SweepMode) -> Tally {
    let o = &ctx.oracle;
    let triples: Vec<(Vertex, Vertex, Vertex)> = match mode {
        SweepMode::Beam => beams(o),
        // the first slot repeats `x`; it only matters for beams
        SweepMode::Mutual => mutual_pairs(o).into_iter().map(|(x, y)| (x, x, y)).collect(),
    };
    let middles: Vec<(Vertex, Vertex, Vertex, Vertex)> =
        triples.iter().flat_map(|&(z, x, y)| ceil_slices(o, x, y).into_iter().map(move |c| (z, x, y, c))).collect();
    let mut t = Tally::new();
    let cov = for_each_member(ctx, rng, &middles, None, |(z, x, y, c), u| {
        t.record(enclosure_claim(o, mode, c, u), || (vec![z, x, y, c, u], vec![ALL_MIDDLES]))
    });
    t.covered(cov);
    t.stat("middles", middles.len() as u64);
    run_api(ctx, rng, mode, &mut t);
    t
}

pub(crate) mod ecc8 {
    use super::*;

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        run_enclosure(ctx, rng, SweepMode::Beam)
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        eval_enclosure(o, vs, ps, SweepMode::Beam)
    }
}

pub(crate) mod ecc9 {
    use super::*;

    pub(crate) fn run(ctx: &SuiteContext<'_>, rng: &mut SplitMix64) -> Tally {
        run_enclosure(ctx, rng, SweepMode::Mutual)
    }

    pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], ps: &[u32]) -> Option<Violation> {
        eval_enclosure(o, vs, ps, SweepMode::Mutual)
    }
}

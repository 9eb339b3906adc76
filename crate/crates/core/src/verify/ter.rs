//! Terrain invariants along shortest paths `P(y, x) = (v_0, ..., v_p)`,
//! walked from `y = v_0` to `x = v_p`.

use alloc::vec::Vec;

use super::{eq, le, Oracle, SuiteContext, Tally, Violation};
use crate::rng::SplitMix64;
use crate::terrain::{path_kind_of, segments_of, EdgeClass, PathKind, PlainKind, Segment, SegmentKind};
use crate::Vertex;

/// A path with its eccentricities and shape.
struct Walk {
    e: Vec<i64>,
    classes: Vec<EdgeClass>,
    segments: Vec<Segment>,
    kind: PathKind,
    /// `2δ`
    dd: i64,
}

impl Walk {
    fn new<O: Oracle + ?Sized>(o: &O, path: &[Vertex]) -> Walk {
        let ecc: Vec<u32> = path.iter().map(|&v| o.e(v)).collect();
        let classes: Vec<EdgeClass> = ecc.windows(2).map(|w| EdgeClass::of(w[0], w[1])).collect();
        Walk {
            kind: path_kind_of(&ecc),
            e: ecc.into_iter().map(i64::from).collect(),
            segments: segments_of(&classes),
            classes,
            dd: o.delta2() as i64,
        }
    }

    /// Path length `p`.
    fn p(&self) -> i64 {
        self.classes.len() as i64
    }

    fn end_minimal(&self) -> bool {
        self.kind >= PathKind::EndMinimal
    }

    fn strict(&self) -> bool {
        self.kind == PathKind::StrictEndMinimal
    }

    fn first(&self) -> i64 {
        self.e[0]
    }

    fn last(&self) -> i64 {
        self.e[self.e.len() - 1]
    }

    /// `(U, H)` over the first `i` edges.
    fn counts(&self, i: usize) -> (i64, i64) {
        self.classes[..i].iter().fold((0, 0), |(u, h), c| match c {
            EdgeClass::Up => (u + 1, h),
            EdgeClass::Horizontal => (u, h + 1),
            EdgeClass::Down => (u, h),
        })
    }

    fn plains(&self) -> impl Iterator<Item = &Segment> {
        self.segments.iter().filter(|s| s.kind == SegmentKind::Plain)
    }

    /// Vertex indices `i` with `x' = v_i` satisfying the prefix condition:
    /// `e(v_i) > e(x) + δ`, or an end-minimal path with `d(x, v_i) > 2δ`.
    fn prefix_ends(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.e.len()).filter(move |&i| {
            2 * self.e[i] > 2 * self.last() + self.dd || (self.end_minimal() && self.p() - i as i64 > self.dd)
        })
    }
}

fn first_of(mut it: impl Iterator<Item = Option<Violation>>) -> Option<Violation> {
    it.find_map(|v| v)
}

macro_rules! path_check {
    ($name:ident, $claim:expr) => {
        path_check!($name, $claim, |_, _, _| {});
    };
    ($name:ident, $claim:expr, $visit:expr) => {
        pub(crate) mod $name {
            use super::*;

            pub(crate) fn claim<O: Oracle + ?Sized>(o: &O, path: &[Vertex]) -> Option<Violation> {
                check(o, path, &Walk::new(o, path))
            }

            fn check<O: Oracle + ?Sized>(o: &O, path: &[Vertex], w: &Walk) -> Option<Violation> {
                let f: fn(&O, &[Vertex], &Walk) -> Option<Violation> = $claim;
                f(o, path, w)
            }

            pub(crate) fn run(ctx: &SuiteContext<'_>, _: &mut SplitMix64) -> Tally {
                let o = &ctx.oracle;
                let visit: fn(&[Vertex], &Walk, &mut Tally) = $visit;
                let mut t = Tally::new();
                ctx.paths.for_each(o, |p| {
                    let w = Walk::new(o, p);
                    t.record(check(o, p, &w), || (p.to_vec(), Vec::new()));
                    visit(p, &w, &mut t);
                });
                t.covered(ctx.paths.coverage());
                t
            }

            pub(crate) fn eval(o: &dyn Oracle, vs: &[Vertex], _: &[u32]) -> Option<Violation> {
                o.is_shortest_path(vs).then(|| claim(o, vs)).flatten()
            }
        }
    };
}

path_check!(ter1, |_, _, w| {
    let dd = w.dd;
    first_of(w.plains().map(|s| {
        let width = s.len as i64;
        le("plain_width", width, 2 * dd + 1).or_else(|| match s.plain_kind {
            Some(PlainKind::Terrace) => le("terrace_width", width, if dd == 0 { 0 } else { 2 * dd - 1 }),
            Some(PlainKind::Plateau) => le("plateau_width", width, if dd <= 1 { 0 } else { 2 * dd - 3 }),
            _ => None,
        })
    }))
});

path_check!(ter2, |_, _, w| {
    let dd = w.dd;
    let mn = w.first().min(w.last());
    first_of(w.plains().map(|s| {
        let width = s.len as i64;
        let plateau = s.plain_kind == Some(PlainKind::Plateau);
        let elevated = 2 * w.e[s.start] > 2 * mn + dd;
        let v = if elevated {
            le("elevated_plain_width", width, dd)
                .or_else(|| plateau.then(|| le("elevated_plateau_width", width, dd - 2)).flatten())
        } else {
            None
        };
        v.or_else(|| (plateau && dd == 2 && w.strict()).then(|| le("plateau_absent", width, 0)).flatten())
    }))
});

path_check!(ter3, |_, _, w| {
    let (dd, p) = (w.dd, w.p());
    let mn = w.first().min(w.last());
    let inner = |i: usize| i as i64 > dd && p - i as i64 > dd;
    first_of((0..w.e.len()).filter(|&i| inner(i) && w.e[i] >= mn).flat_map(|i| {
        (i + 1..w.e.len())
            .filter(move |&j| inner(j) && w.e[j] == w.e[i])
            .map(move |j| le("equal_ecc_distance", (j - i) as i64, dd))
    }))
});

/// Up-hills of an end-minimal path, as vertex runs.
fn uphills<'p>(path: &'p [Vertex], w: &'p Walk) -> impl Iterator<Item = &'p [Vertex]> + 'p {
    w.segments
        .iter()
        .filter(move |s| w.end_minimal() && s.kind == SegmentKind::UpHill)
        .map(move |s| &path[s.start..=s.end()])
}

path_check!(
    ter4,
    |_, path, w| first_of(uphills(path, w).map(|h| le("uphill_height", 2 * (h.len() as i64 - 1), w.dd))),
    |path, w, t| uphills(path, w).for_each(|h| t.example(h))
);

path_check!(ter5, |_, _, w| {
    if !w.end_minimal() {
        return None;
    }
    let (dd, e0) = (w.dd, w.first());
    first_of((0..w.e.len()).filter(|&i| w.p() - i as i64 > dd).map(|i| {
        le("far_ecc_half", 2 * w.e[i], 2 * e0 + dd).or_else(|| le("far_ecc_drop", w.e[i], e0 - i as i64 + dd))
    }))
});

path_check!(ter6, |_, _, w| {
    let (dd, p) = (w.dd, w.p());
    if !w.end_minimal() || p <= 2 * dd + 1 {
        return None;
    }
    let (lo, hi) = ((dd + 1) as usize, (p - dd - 1) as usize);
    first_of((lo..=hi).map(|i| {
        let before = w.e[..i - dd as usize].iter().copied().min().unwrap();
        le("pseudodescending", w.e[i], before - 1)
    }))
});

path_check!(ter7, |_, _, w| {
    let (dd, p) = (w.dd, w.p());
    let (u, h) = w.counts(w.classes.len());
    let drop = w.first() - w.last();
    let strict_budget = (2 * dd - 1).max(0);
    let whole = if w.strict() {
        le("uh_budget_strict", 2 * u + h, strict_budget).or_else(|| le("length_strict", p, drop + strict_budget))
    } else {
        None
    };
    whole
        .or_else(|| {
            w.end_minimal()
                .then(|| le("uh_budget", 2 * u + h, 2 * dd + 1).or_else(|| le("length", p, drop + 2 * dd + 1)))
                .flatten()
        })
        .or_else(|| {
            first_of(w.prefix_ends().map(|i| {
                let (u, h) = w.counts(i);
                le("prefix_uh_budget", 2 * u + h, dd).or_else(|| le("prefix_length", i as i64, w.first() - w.e[i] + dd))
            }))
        })
});

/// Locality counts: `(loc > 1, of those outside C_≤δ, of those further than
/// 2δ from C(G))` over the first `len` vertices.
fn locality_counts<O: Oracle + ?Sized>(o: &O, path: &[Vertex]) -> (i64, i64, i64) {
    let dd = o.delta2();
    path.iter().filter(|&&v| o.loc(v) > 1).fold((0, 0, 0), |(a, b, c), &v| {
        (a + 1, b + (2 * o.layer(v) > dd) as i64, c + (o.dist_to_layers(v, 0) > dd) as i64)
    })
}

path_check!(ter8, |o, path, w| {
    let dd = w.dd;
    let (count, outside, far) = locality_counts(o, path);
    let central_end = o.layer(path[path.len() - 1]) == 0;
    let whole = if w.strict() {
        le("loc_strict", count, 2 * dd)
            .or_else(|| central_end.then(|| le("loc_strict_center", count, (2 * dd - 1).max(0))).flatten())
    } else if w.end_minimal() {
        le("loc_end_minimal", count, 2 * dd + 2)
    } else {
        le("loc_general", count, 4 * dd + 1)
    };
    whole
        .or_else(|| {
            first_of(w.prefix_ends().map(|i| {
                let c = locality_counts(o, &path[..=i]).0;
                let high = 2 * w.e[i] > 2 * w.last() + dd;
                if high {
                    le("loc_prefix_high", c, dd)
                } else {
                    le("loc_prefix_far", c, dd + 1)
                }
            }))
        })
        .or_else(|| {
            central_end
                .then(|| le("loc_outside_c_delta", outside, dd).or_else(|| le("loc_far_from_center", far, dd + 1)))
                .flatten()
        })
});

path_check!(ter9, |o, path, w| {
    let (dd, p) = (w.dd, w.p());
    let central_end = o.layer(path[path.len() - 1]) == 0;
    (central_end && p > 2 * dd + 1).then(|| le("center_path_descends", w.e[(dd + 1) as usize], w.first() - 1)).flatten()
});

path_check!(id1, |_, _, w| {
    let (u, _) = w.counts(w.classes.len());
    let down = w.classes.iter().filter(|&&c| c == EdgeClass::Down).count() as i64;
    eq("down_minus_up", down - u, w.first() - w.last())
});

path_check!(id2, |_, _, w| {
    let (u, h) = w.counts(w.classes.len());
    eq("two_up_plus_horizontal", 2 * u + h, w.p() - (w.first() - w.last()))
});

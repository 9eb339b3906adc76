//! Terrain of a shortest path: each ordered edge goes up, down or stays level
//! in eccentricity, and maximal runs of one direction form hills and plains.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{EccentricityProfile, Graph, LocalityMap, Path, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Up,
    Horizontal,
    Down,
}

impl EdgeClass {
    pub fn of(e_from: u32, e_to: u32) -> EdgeClass {
        match e_from.cmp(&e_to) {
            core::cmp::Ordering::Less => EdgeClass::Up,
            core::cmp::Ordering::Equal => EdgeClass::Horizontal,
            core::cmp::Ordering::Greater => EdgeClass::Down,
        }
    }

    /// Character used in terrain strips.
    pub fn glyph(&self) -> char {
        match self {
            EdgeClass::Up => '/',
            EdgeClass::Horizontal => '-',
            EdgeClass::Down => '\\',
        }
    }

    pub fn letter(&self) -> char {
        match self {
            EdgeClass::Up => 'U',
            EdgeClass::Horizontal => 'H',
            EdgeClass::Down => 'D',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    UpHill,
    DownHill,
    Plain,
}

/// Shape of a plain, read from the edges flanking it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlainKind {
    /// Entered going up, left going down.
    Plateau,
    /// Entered going down, left going up.
    Valley,
    /// Entered and left in the same direction.
    Terrace,
    /// Touches an end of the path, so one flank is missing.
    Boundary,
}

/// A maximal m-segment spanning path vertices `start..=start + len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start: usize,
    /// Height of a hill or width of a plain.
    pub len: usize,
    pub plain_kind: Option<PlainKind>,
}

impl Segment {
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdgeCounts {
    pub up: usize,
    pub horizontal: usize,
    pub down: usize,
}

impl EdgeCounts {
    pub fn total(&self) -> usize {
        self.up + self.horizontal + self.down
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerrainSegmentation {
    pub path: Path,
    /// Eccentricity of each path vertex.
    pub ecc: Vec<u32>,
    pub classes: Vec<EdgeClass>,
    pub segments: Vec<Segment>,
    pub counts: EdgeCounts,
}

impl TerrainSegmentation {
    /// Segments a path given the eccentricities of its vertices in order.
    pub fn from_eccentricities(path: Path, ecc: Vec<u32>) -> TerrainSegmentation {
        let classes: Vec<EdgeClass> = ecc.windows(2).map(|w| EdgeClass::of(w[0], w[1])).collect();
        let segments = segments_of(&classes);
        let mut counts = EdgeCounts::default();
        for c in &classes {
            match c {
                EdgeClass::Up => counts.up += 1,
                EdgeClass::Horizontal => counts.horizontal += 1,
                EdgeClass::Down => counts.down += 1,
            }
        }
        TerrainSegmentation { path, ecc, classes, segments, counts }
    }

    /// One glyph per edge: `/` up, `-` level, `\` down.
    pub fn strip(&self) -> String {
        self.classes.iter().map(EdgeClass::glyph).collect()
    }

    /// One letter per edge: `U`, `H`, `D`.
    pub fn class_letters(&self) -> String {
        self.classes.iter().map(EdgeClass::letter).collect()
    }

    pub fn plains(&self) -> impl Iterator<Item = &Segment> {
        self.segments.iter().filter(|s| s.kind == SegmentKind::Plain)
    }

    pub fn up_hills(&self) -> impl Iterator<Item = &Segment> {
        self.segments.iter().filter(|s| s.kind == SegmentKind::UpHill)
    }
}

impl fmt::Display for TerrainSegmentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.strip())
    }
}

/// Maximal runs of equal classes, with plain kinds filled in.
pub fn segments_of(classes: &[EdgeClass]) -> Vec<Segment> {
    let mut segments: Vec<Segment> = Vec::new();
    let mut i = 0;
    while i < classes.len() {
        let mut j = i + 1;
        while j < classes.len() && classes[j] == classes[i] {
            j += 1;
        }
        let kind = match classes[i] {
            EdgeClass::Up => SegmentKind::UpHill,
            EdgeClass::Down => SegmentKind::DownHill,
            EdgeClass::Horizontal => SegmentKind::Plain,
        };
        let plain_kind = (kind == SegmentKind::Plain).then(|| {
            if i == 0 || j == classes.len() {
                PlainKind::Boundary
            } else {
                match (classes[i - 1], classes[j]) {
                    (EdgeClass::Up, EdgeClass::Down) => PlainKind::Plateau,
                    (EdgeClass::Down, EdgeClass::Up) => PlainKind::Valley,
                    _ => PlainKind::Terrace,
                }
            }
        });
        segments.push(Segment { kind, start: i, len: j - i, plain_kind });
        i = j;
    }
    segments
}

/// Segments a shortest path of `g` using exact eccentricities.
pub fn segment_path(g: &Graph, prof: &EccentricityProfile, path: &Path) -> Result<TerrainSegmentation> {
    path.check_shortest(g)?;
    let ecc = path.vertices.iter().map(|&v| prof.ecc[v]).collect();
    Ok(TerrainSegmentation::from_eccentricities(path.clone(), ecc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathKind {
    General,
    /// The last vertex has minimum eccentricity on the path.
    EndMinimal,
    /// The last vertex is the unique minimum.
    StrictEndMinimal,
}

/// Kind of a path given the eccentricities of its vertices in order.
pub fn path_kind_of(ecc: &[u32]) -> PathKind {
    let Some((&last, rest)) = ecc.split_last() else {
        return PathKind::StrictEndMinimal;
    };
    if rest.iter().all(|&e| e > last) {
        PathKind::StrictEndMinimal
    } else if rest.iter().all(|&e| e >= last) {
        PathKind::EndMinimal
    } else {
        PathKind::General
    }
}

pub fn classify_path_kind(prof: &EccentricityProfile, path: &Path) -> PathKind {
    let ecc: Vec<u32> = path.vertices.iter().map(|&v| prof.ecc[v]).collect();
    path_kind_of(&ecc)
}

/// Both sides of the two edge-count identities for a path `P(y, x)`:
/// `D − U = e(y) − e(x)` and `2U + H = d(y, x) − (e(y) − e(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCountIdentities {
    pub lhs1: i64,
    pub rhs1: i64,
    pub lhs2: i64,
    pub rhs2: i64,
}

impl EdgeCountIdentities {
    pub fn holds(&self) -> bool {
        self.lhs1 == self.rhs1 && self.lhs2 == self.rhs2
    }
}

/// Evaluates the identities against `prof`, independently of the
/// eccentricities cached in `seg`.
pub fn edge_count_identities(seg: &TerrainSegmentation, prof: &EccentricityProfile) -> EdgeCountIdentities {
    identities_with(seg, prof.ecc[seg.path.first()], prof.ecc[seg.path.last()])
}

impl TerrainSegmentation {
    /// The identities evaluated with the cached endpoint eccentricities.
    pub fn identities(&self) -> EdgeCountIdentities {
        let last = *self.ecc.last().expect("a path has at least one vertex");
        identities_with(self, self.ecc[0], last)
    }
}

fn identities_with(seg: &TerrainSegmentation, ey: u32, ex: u32) -> EdgeCountIdentities {
    let (ey, ex) = (ey as i64, ex as i64);
    let c = seg.counts;
    EdgeCountIdentities {
        lhs1: c.down as i64 - c.up as i64,
        rhs1: ey - ex,
        lhs2: 2 * c.up as i64 + c.horizontal as i64,
        rhs2: seg.path.len() as i64 - (ey - ex),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PathLocalityStats {
    /// Path vertices with locality above 1.
    pub count_loc_gt1: usize,
    /// Of those, the ones outside `C_≤δ(G)`.
    pub count_outside_cdelta: usize,
    /// Of those, the ones further than `2δ` from `C(G)`.
    pub count_far_from_center: usize,
}

/// Locality counts along a path. The split by `C_≤δ` and by distance to the
/// center needs δ, passed doubled.
pub fn path_locality_stats(
    g: &Graph,
    prof: &EccentricityProfile,
    loc: &LocalityMap,
    path: &Path,
    delta2: u32,
) -> PathLocalityStats {
    let to_center = g.bfs_multi(&prof.center);
    path_locality_stats_with(prof, loc, &to_center, path, delta2)
}

/// As [`path_locality_stats`], with `d(·, C(G))` precomputed.
pub fn path_locality_stats_with(
    prof: &EccentricityProfile,
    loc: &LocalityMap,
    to_center: &[u32],
    path: &Path,
    delta2: u32,
) -> PathLocalityStats {
    let mut s = PathLocalityStats::default();
    for &v in path.vertices.iter().filter(|&&v| loc.loc[v] > 1) {
        s.count_loc_gt1 += 1;
        if 2 * prof.layer[v] > delta2 {
            s.count_outside_cdelta += 1;
        }
        if to_center[v] > delta2 {
            s.count_far_from_center += 1;
        }
    }
    s
}

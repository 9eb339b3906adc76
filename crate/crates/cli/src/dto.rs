//! JSON documents written by the command line. Vertices always appear under
//! their original labels. Each document carries `schema_version` and `kind`;
//! the matching JSON Schemas live in `schema/`.

use std::collections::BTreeMap;

use hyperterrain_core::approx::{ApproxEccentricities, Side};
use hyperterrain_core::convexity::{DiskConvexity, LayerConvexity, PseudoconvexityReport};
use hyperterrain_core::terrain::{EdgeCountIdentities, PathKind, PlainKind, SegmentKind, TerrainSegmentation};
use hyperterrain_core::verify::{CheckResult, VerificationReport, Witness};
use hyperterrain_core::{Graph, Vertex};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

fn labels(g: &Graph, vs: &[Vertex]) -> Vec<u64> {
    vs.iter().map(|&v| g.label(v)).collect()
}

fn triple(g: &Graph, w: Option<(Vertex, Vertex, Vertex)>) -> Option<[u64; 3]> {
    w.map(|(x, y, z)| [g.label(x), g.label(y), g.label(z)])
}

#[derive(Debug, Serialize)]
pub struct Skipped {
    pub what: &'static str,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct StatsDoc {
    pub schema_version: u32,
    pub kind: &'static str,
    pub n: usize,
    pub m: usize,
    pub rad: Option<u32>,
    pub diam: Option<u32>,
    pub center: Option<Vec<u64>>,
    pub center_size: Option<usize>,
    pub delta2: Option<u32>,
    pub delta_witness: Option<[u64; 4]>,
    pub layer_histogram: Option<Vec<usize>>,
    pub skipped: Vec<Skipped>,
}

#[derive(Debug, Serialize)]
pub struct EccRow {
    pub vertex: u64,
    pub estimate: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<u32>,
    /// `estimate − exact`, negative for left-sided estimates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<i64>,
}

#[derive(Debug, Serialize)]
pub struct Anchors {
    pub x: u64,
    pub y: u64,
    pub root: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct EccGuarantee {
    pub side: &'static str,
    /// The additive error in terms of δ, e.g. `4d+1`.
    pub additive: String,
    /// The error bound for the known δ, if one is guaranteed.
    pub bound: Option<u32>,
}

#[derive(Debug, Serialize)]
pub struct EccDoc {
    pub schema_version: u32,
    pub kind: &'static str,
    pub mode: String,
    pub method: &'static str,
    pub k: Option<u32>,
    pub start: Option<u64>,
    pub anchors: Option<Anchors>,
    pub sweeps: Option<usize>,
    pub delta2: Option<u32>,
    pub guarantee: Option<EccGuarantee>,
    pub max_abs_error: Option<u32>,
    pub rows: Vec<EccRow>,
}

pub fn side_str(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

impl EccDoc {
    pub fn approx(
        g: &Graph,
        mode: &str,
        start: Vertex,
        a: &ApproxEccentricities,
        exact: Option<&[u32]>,
        delta2: Option<u32>,
    ) -> EccDoc {
        let rows = rows(g, &a.est, exact);
        EccDoc {
            schema_version: SCHEMA_VERSION,
            kind: "ecc",
            mode: mode.into(),
            method: a.method.as_str(),
            k: a.k,
            start: Some(g.label(start)),
            anchors: Some(Anchors {
                x: g.label(a.anchors.x),
                y: g.label(a.anchors.y),
                root: a.anchors.c.map(|c| g.label(c)),
            }),
            sweeps: Some(a.sweeps),
            delta2,
            guarantee: Some(EccGuarantee {
                side: side_str(a.guarantee.side),
                additive: a.guarantee.additive.to_string(),
                bound: delta2.and_then(|d| a.bound(d)),
            }),
            max_abs_error: max_abs(&rows),
            rows,
        }
    }

    pub fn exact(g: &Graph, ecc: &[u32], delta2: Option<u32>) -> EccDoc {
        let rows = rows(g, ecc, Some(ecc));
        EccDoc {
            schema_version: SCHEMA_VERSION,
            kind: "ecc",
            mode: "exact".into(),
            method: "exact",
            k: None,
            start: None,
            anchors: None,
            sweeps: Some(g.n()),
            delta2,
            guarantee: None,
            max_abs_error: max_abs(&rows),
            rows,
        }
    }
}

fn rows(g: &Graph, est: &[u32], exact: Option<&[u32]>) -> Vec<EccRow> {
    (0..g.n())
        .map(|v| EccRow {
            vertex: g.label(v),
            estimate: est[v],
            exact: exact.map(|e| e[v]),
            error: exact.map(|e| est[v] as i64 - e[v] as i64),
        })
        .collect()
}

fn max_abs(rows: &[EccRow]) -> Option<u32> {
    rows.iter().map(|r| r.error.map(|e| e.unsigned_abs() as u32)).max().flatten()
}

#[derive(Debug, Serialize)]
pub struct SegmentDoc {
    pub kind: &'static str,
    pub plain_kind: Option<&'static str>,
    /// Index of the first path vertex.
    pub start: usize,
    pub len: usize,
    pub from: u64,
    pub to: u64,
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub up: usize,
    pub horizontal: usize,
    pub down: usize,
}

#[derive(Debug, Serialize)]
pub struct Identities {
    pub down_minus_up: i64,
    pub ecc_drop: i64,
    pub twice_up_plus_horizontal: i64,
    pub length_minus_drop: i64,
    pub hold: bool,
}

impl From<EdgeCountIdentities> for Identities {
    fn from(i: EdgeCountIdentities) -> Self {
        Identities {
            down_minus_up: i.lhs1,
            ecc_drop: i.rhs1,
            twice_up_plus_horizontal: i.lhs2,
            length_minus_drop: i.rhs2,
            hold: i.holds(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TerrainDoc {
    pub schema_version: u32,
    pub kind: &'static str,
    pub from: u64,
    pub to: u64,
    pub length: usize,
    pub path: Vec<u64>,
    pub ecc: Vec<u32>,
    pub strip: String,
    pub classes: String,
    pub counts: Counts,
    pub segments: Vec<SegmentDoc>,
    pub path_kind: &'static str,
    pub identities: Identities,
}

pub fn segment_kind_str(k: SegmentKind) -> &'static str {
    match k {
        SegmentKind::UpHill => "up_hill",
        SegmentKind::DownHill => "down_hill",
        SegmentKind::Plain => "plain",
    }
}

pub fn plain_kind_str(k: PlainKind) -> &'static str {
    match k {
        PlainKind::Plateau => "plateau",
        PlainKind::Valley => "valley",
        PlainKind::Terrace => "terrace",
        PlainKind::Boundary => "boundary",
    }
}

pub fn path_kind_str(k: PathKind) -> &'static str {
    match k {
        PathKind::General => "general",
        PathKind::EndMinimal => "end_minimal",
        PathKind::StrictEndMinimal => "strict_end_minimal",
    }
}

impl TerrainDoc {
    pub fn new(g: &Graph, seg: &TerrainSegmentation, kind: PathKind, ids: EdgeCountIdentities) -> TerrainDoc {
        let p = &seg.path.vertices;
        TerrainDoc {
            schema_version: SCHEMA_VERSION,
            kind: "terrain",
            from: g.label(seg.path.first()),
            to: g.label(seg.path.last()),
            length: seg.path.len(),
            path: labels(g, p),
            ecc: seg.ecc.clone(),
            strip: seg.strip(),
            classes: seg.class_letters(),
            counts: Counts { up: seg.counts.up, horizontal: seg.counts.horizontal, down: seg.counts.down },
            segments: seg
                .segments
                .iter()
                .map(|s| SegmentDoc {
                    kind: segment_kind_str(s.kind),
                    plain_kind: s.plain_kind.map(plain_kind_str),
                    start: s.start,
                    len: s.len,
                    from: g.label(p[s.start]),
                    to: g.label(p[s.end()]),
                })
                .collect(),
            path_kind: path_kind_str(kind),
            identities: ids.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LayerDoc {
    pub k: u32,
    pub size: usize,
    pub beta_min: u32,
    pub allowed_beta: u32,
    pub witness: Option<[u64; 3]>,
    pub diameter: u32,
    pub diameter_bound: u32,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DiskDoc {
    pub center: u64,
    pub radius: u32,
    pub size: usize,
    pub beta_min: u32,
    pub allowed_beta: u32,
    pub witness: Option<[u64; 3]>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct SetDoc {
    pub set: Vec<u64>,
    pub beta_min: u32,
    pub witness: Option<[u64; 3]>,
    pub eps: u32,
    pub exhaustive: bool,
}

#[derive(Debug, Serialize)]
pub struct ConvexityDoc {
    pub schema_version: u32,
    pub kind: &'static str,
    pub delta2: u32,
    pub delta_source: &'static str,
    pub allowed_beta: u32,
    pub layers: Vec<LayerDoc>,
    pub disks: Vec<DiskDoc>,
    pub set: Option<SetDoc>,
    pub passed: bool,
}

impl LayerDoc {
    pub fn new(g: &Graph, l: &LayerConvexity) -> LayerDoc {
        LayerDoc {
            k: l.k,
            size: l.size,
            beta_min: l.beta_min,
            allowed_beta: l.allowed_beta,
            witness: triple(g, l.witness),
            diameter: l.diameter,
            diameter_bound: l.diameter_bound,
            ok: l.ok(),
        }
    }
}

impl DiskDoc {
    pub fn new(g: &Graph, d: &DiskConvexity) -> DiskDoc {
        DiskDoc {
            center: g.label(d.center),
            radius: d.radius,
            size: d.size,
            beta_min: d.beta_min,
            allowed_beta: d.allowed_beta,
            witness: triple(g, d.witness),
            ok: d.ok(),
        }
    }
}

impl SetDoc {
    pub fn new(g: &Graph, r: &PseudoconvexityReport, eps: u32) -> SetDoc {
        SetDoc {
            set: labels(g, &r.set),
            beta_min: r.beta_min,
            witness: triple(g, r.witness),
            eps,
            exhaustive: r.exhaustive,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessDoc {
    /// Witness vertices as labels, in the order the check defines.
    pub vertices: Vec<u64>,
    pub params: Vec<u32>,
    pub claim: &'static str,
    pub relation: &'static str,
    pub lhs: i64,
    pub rhs: i64,
}

impl WitnessDoc {
    fn new(g: &Graph, w: &Witness) -> WitnessDoc {
        WitnessDoc {
            vertices: labels(g, &w.vertices),
            params: w.params.clone(),
            claim: w.violation.claim,
            relation: w.violation.relation.as_str(),
            lhs: w.violation.lhs,
            rhs: w.violation.rhs,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckDoc {
    pub check_id: &'static str,
    pub title: &'static str,
    pub status: &'static str,
    pub coverage: &'static str,
    pub tested_instances: u64,
    pub violations: u64,
    pub witness: Option<WitnessDoc>,
    pub reason: Option<String>,
    pub stats: BTreeMap<&'static str, u64>,
    pub examples: Vec<Vec<u64>>,
}

impl CheckDoc {
    fn new(g: &Graph, c: &CheckResult) -> CheckDoc {
        CheckDoc {
            check_id: c.id,
            title: c.title,
            status: c.status.as_str(),
            coverage: c.coverage.as_str(),
            tested_instances: c.tested,
            violations: c.violations,
            witness: c.witness.as_ref().map(|w| WitnessDoc::new(g, w)),
            reason: c.reason.clone(),
            stats: c.stats.iter().copied().collect(),
            examples: c.examples.iter().map(|e| labels(g, e)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub schema_version: u32,
    pub kind: &'static str,
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub rad: u32,
    pub diam: u32,
    pub delta2: Option<u32>,
    pub delta_source: &'static str,
    pub delta_witness: Option<[u64; 4]>,
    pub path_mode: &'static str,
    pub path_count: u64,
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

impl ReportDoc {
    pub fn new(g: &Graph, r: &VerificationReport) -> ReportDoc {
        ReportDoc {
            schema_version: SCHEMA_VERSION,
            kind: "verification_report",
            graph_id: r.graph_id.clone(),
            n: r.n,
            m: r.m,
            seed: r.seed,
            rad: r.rad,
            diam: r.diam,
            delta2: r.delta2,
            delta_source: r.delta_source.as_str(),
            delta_witness: r.delta_witness.map(|w| w.map(|v| g.label(v))),
            path_mode: r.path_mode.as_str(),
            path_count: r.path_count,
            passed: r.passed(),
            checks: r.checks.iter().map(|c| CheckDoc::new(g, c)).collect(),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct CheckTotals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Serialize)]
pub struct CorpusDoc {
    pub schema_version: u32,
    pub kind: &'static str,
    pub seed: u64,
    pub graphs: usize,
    pub graphs_passed: usize,
    pub passed: bool,
    pub per_check: BTreeMap<&'static str, CheckTotals>,
    pub reports: Vec<ReportDoc>,
}

impl CorpusDoc {
    pub fn new(seed: u64, reports: Vec<ReportDoc>) -> CorpusDoc {
        let mut per_check: BTreeMap<&'static str, CheckTotals> = BTreeMap::new();
        for c in reports.iter().flat_map(|r| &r.checks) {
            let t = per_check.entry(c.check_id).or_default();
            match c.status {
                "pass" => t.pass += 1,
                "fail" => t.fail += 1,
                _ => t.skipped += 1,
            }
        }
        let graphs_passed = reports.iter().filter(|r| r.passed).count();
        CorpusDoc {
            schema_version: SCHEMA_VERSION,
            kind: "corpus_report",
            seed,
            graphs: reports.len(),
            graphs_passed,
            passed: graphs_passed == reports.len(),
            per_check,
            reports,
        }
    }
}

//! Verification harness: every implemented bound runs as a named check
//! against the exact oracle, producing pass/fail results with witnesses.
//!
//! A check is exhaustive when its instance space has at most
//! [`SuiteConfig::exhaustive_cap`] tuples and otherwise runs on seeded
//! uniform samples. Sampling can only refute, never prove; results say which
//! of the two happened.

mod apx;
mod cvx;
mod dual;
mod ecc;
mod oracle;
mod paths;
mod ter;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use oracle::{FreshOracle, Oracle, TableOracle};
pub use paths::{PathMode, PathSet};

use crate::exact::{all_pairs_distances, hyperbolicity_exact, locality_map, DistanceMatrix, OracleCaps};
use crate::rng::{derive_seed, SplitMix64};
use crate::{EccentricityProfile, Error, Graph, HyperbolicityCertificate, Result, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest instance space checked exhaustively.
    pub exhaustive_cap: u64,
    /// Samples drawn when a space exceeds the cap.
    pub samples: usize,
    /// All shortest paths are enumerated up to this many vertices.
    pub enumerate_paths_max_n: usize,
    /// Give up enumerating beyond this many paths.
    pub path_cap: u64,
    /// Random shortest paths added to the canonical ones when not enumerating.
    pub random_paths: usize,
    pub disk_samples: usize,
    pub disk_pairs: usize,
    /// Start vertices for the sweep-based estimators; all vertices up to this.
    pub max_starts: usize,
    pub caps: OracleCaps,
    /// Tests bounds at this `2δ` instead of the exact value. Only meant for
    /// exercising the harness itself; reports flag it.
    pub delta2_override: Option<u32>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            exhaustive_cap: 10_000_000,
            samples: 100_000,
            enumerate_paths_max_n: 40,
            path_cap: 1_000_000,
            random_paths: 500,
            disk_samples: 200,
            disk_pairs: 100,
            max_starts: 256,
            caps: OracleCaps::default(),
            delta2_override: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

impl Coverage {
    pub fn as_str(&self) -> &'static str {
        match self {
            Coverage::Exhaustive => "exhaustive",
            Coverage::Sampled => "sampled",
        }
    }

    fn and(self, other: Coverage) -> Coverage {
        if self == Coverage::Exhaustive && other == Coverage::Exhaustive {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

impl Relation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "==",
        }
    }
}

/// A failed claim `lhs <= rhs` (or `lhs == rhs`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub claim: &'static str,
    pub relation: Relation,
    pub lhs: i64,
    pub rhs: i64,
}

pub(crate) fn le(claim: &'static str, lhs: i64, rhs: i64) -> Option<Violation> {
    (lhs > rhs).then_some(Violation { claim, relation: Relation::Le, lhs, rhs })
}

pub(crate) fn eq(claim: &'static str, lhs: i64, rhs: i64) -> Option<Violation> {
    (lhs != rhs).then_some(Violation { claim, relation: Relation::Eq, lhs, rhs })
}

/// A counterexample: the instance (vertices and integer parameters, whose
/// meaning depends on the check) and the failed claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
    pub params: Vec<u32>,
    pub violation: Violation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub coverage: Coverage,
    pub tested: u64,
    pub violations: u64,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
    /// Check-specific counters.
    pub stats: Vec<(&'static str, u64)>,
    /// Notable instances seen while checking, e.g. the up-hills met on
    /// end-minimal paths.
    pub examples: Vec<Vec<Vertex>>,
}

/// What a check run produces before status is assigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Tally {
    pub tested: u64,
    pub violations: u64,
    pub witness: Option<Witness>,
    pub coverage: Coverage,
    pub stats: Vec<(&'static str, u64)>,
    pub examples: BTreeSet<Vec<Vertex>>,
}

/// Most examples kept per check.
pub const MAX_EXAMPLES: usize = 64;

impl Tally {
    pub fn new() -> Tally {
        Tally {
            tested: 0,
            violations: 0,
            witness: None,
            coverage: Coverage::Exhaustive,
            stats: Vec::new(),
            examples: BTreeSet::new(),
        }
    }

    pub fn example(&mut self, vs: &[Vertex]) {
        if self.examples.len() < MAX_EXAMPLES && !self.examples.contains(vs) {
            self.examples.insert(vs.to_vec());
        }
    }

    /// Counts one instance; the first violation becomes the witness.
    #[inline]
    pub fn record(&mut self, v: Option<Violation>, instance: impl FnOnce() -> (Vec<Vertex>, Vec<u32>)) {
        self.tested += 1;
        if let Some(violation) = v {
            self.violations += 1;
            if self.witness.is_none() {
                let (vertices, params) = instance();
                self.witness = Some(Witness { vertices, params, violation });
            }
        }
    }

    pub fn covered(&mut self, c: Coverage) {
        self.coverage = self.coverage.and(c);
    }

    pub fn stat(&mut self, name: &'static str, value: u64) {
        match self.stats.iter_mut().find(|(k, _)| *k == name) {
            Some(entry) => entry.1 = value,
            None => self.stats.push((name, value)),
        }
    }
}

type RunFn = fn(&SuiteContext<'_>, &mut SplitMix64) -> Tally;
type EvalFn = fn(&dyn Oracle, &[Vertex], &[u32]) -> Option<Violation>;

/// One registered check.
pub struct CheckDef {
    pub id: &'static str,
    pub title: &'static str,
    pub needs_delta: bool,
    run: RunFn,
    eval: EvalFn,
}

impl fmt::Debug for CheckDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckDef").field("id", &self.id).finish()
    }
}

macro_rules! check {
    ($id:literal, $title:literal, $delta:literal, $module:ident :: $name:ident) => {
        CheckDef { id: $id, title: $title, needs_delta: $delta, run: $module::$name::run, eval: $module::$name::eval }
    };
}

static REGISTRY: &[CheckDef] = &[
    check!("ORC-1", "eccentricity is 1-Lipschitz on edges", false, ecc::orc1),
    check!("ORC-2", "2δ is at most the diameter", true, ecc::orc2),
    check!("DUAL-1", "duality lemma, both branches", true, dual::dual1),
    check!("DUAL-2", "max-min duality bound", true, dual::dual2),
    check!("DUAL-3", "distances from interval vertices", true, dual::dual3),
    check!("DUAL-4", "eccentricity of interval vertices", true, dual::dual4),
    check!("DUAL-5", "middle of high eccentricity forces short pair", true, dual::dual5),
    check!("CVX-1", "disks are (2δ−1)-pseudoconvex", true, cvx::cvx1),
    check!("CVX-2", "layer sets C≤k are (2δ−1)-pseudoconvex", true, cvx::cvx2),
    check!("CVX-3", "intersection closure and pseudo- implies quasiconvexity", false, cvx::cvx3),
    check!("CVX-4", "diameter of C≤k and center-avoiding shortest paths", true, cvx::cvx4),
    check!("TER-1", "plain, terrace and plateau widths", true, ter::ter1),
    check!("TER-2", "elevated plains and plateaus", true, ter::ter2),
    check!("TER-3", "equal-eccentricity vertices far from both ends", true, ter::ter3),
    check!("TER-4", "up-hill heights on end-minimal paths", true, ter::ter4),
    check!("TER-5", "eccentricity far from the end of end-minimal paths", true, ter::ter5),
    check!("TER-6", "pseudodescending end-minimal paths", true, ter::ter6),
    check!("TER-7", "up and horizontal edge budget", true, ter::ter7),
    check!("TER-8", "vertices of locality above 1", true, ter::ter8),
    check!("TER-9", "locality along paths to the center", true, ter::ter9),
    check!("ECC-1", "eccentricity versus distance to C(G) and C≤2δ", true, ecc::ecc1),
    check!("ECC-2", "layer index versus distance to C(G) and C≤2δ", true, ecc::ecc2),
    check!("ECC-3", "slices of a furthest pair near the radius", true, ecc::ecc3),
    check!("ECC-4", "mutually distant pairs estimate eccentricities", true, ecc::ecc4),
    check!("ECC-5", "furthest vertices are almost diametral", true, ecc::ecc5),
    check!("ECC-6", "beam ends are almost diametral", true, ecc::ecc6),
    check!("ECC-7", "middle of a beam has small eccentricity", true, ecc::ecc7),
    check!("ECC-8", "beam middle encloses C≤k", true, ecc::ecc8),
    check!("ECC-9", "mutual-pair middle encloses C≤k", true, ecc::ecc9),
    check!("RAD-1", "radius and diameter estimates", true, apx::rad1),
    check!("APX-1", "pair estimate is left-sided within 2δ", true, apx::apx1),
    check!("APX-2", "middle BFS tree is right-sided within 4δ+1", true, apx::apx2),
    check!("APX-3", "fast BFS tree is right-sided within its bound", true, apx::apx3),
    check!("ID-1", "down minus up edges equals eccentricity drop", false, ter::id1),
    check!("ID-2", "2U + H identity", false, ter::id2),
];

/// The check registry, in report order.
pub fn registry() -> &'static [CheckDef] {
    REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSource {
    Exact,
    Override,
    /// The graph is above the exact-δ cap; δ-dependent checks are skipped.
    Unavailable,
}

impl DeltaSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            DeltaSource::Exact => "exact",
            DeltaSource::Override => "override",
            DeltaSource::Unavailable => "unavailable",
        }
    }
}

/// Everything the checks share: the oracle tables, δ and the path source.
pub struct SuiteContext<'a> {
    pub graph_id: String,
    pub config: SuiteConfig,
    pub oracle: TableOracle<'a>,
    pub certificate: Option<HyperbolicityCertificate>,
    pub delta_source: DeltaSource,
    pub paths: PathSet,
    interval_total: Option<u64>,
}

impl<'a> SuiteContext<'a> {
    pub fn new(g: &'a Graph, graph_id: &str, config: SuiteConfig) -> Result<SuiteContext<'a>> {
        Self::with_hyperbolicity(g, graph_id, config, hyperbolicity_exact)
    }

    /// As [`SuiteContext::new`] with a caller-provided exact δ routine (for
    /// example a parallel one). It is only called within the δ cap.
    pub fn with_hyperbolicity(
        g: &'a Graph,
        graph_id: &str,
        config: SuiteConfig,
        delta: impl FnOnce(&DistanceMatrix, &OracleCaps) -> Result<HyperbolicityCertificate>,
    ) -> Result<SuiteContext<'a>> {
        let m = all_pairs_distances(g, &config.caps)?;
        let prof = EccentricityProfile::from_matrix(&m);
        let loc = locality_map(g, &prof);
        let (certificate, delta_source) = if g.n() <= config.caps.delta {
            (Some(delta(&m, &config.caps)?), DeltaSource::Exact)
        } else {
            (None, DeltaSource::Unavailable)
        };
        let (delta2, delta_source) = match (config.delta2_override, certificate) {
            (Some(d), _) => (d, DeltaSource::Override),
            (None, Some(c)) => (c.delta2, delta_source),
            (None, None) => (0, delta_source),
        };
        let oracle = TableOracle::new(g, m, prof, loc, delta2);
        let paths = PathSet::build(&oracle, &config);
        let n = g.n() as u64;
        let interval_total = (n.pow(3) <= config.exhaustive_cap && n.pow(4) > config.exhaustive_cap).then(|| {
            let m = oracle.matrix();
            let mut total = 0u64;
            for x in 0..g.n() {
                for y in (0..g.n()).filter(|&y| y != x) {
                    let dxy = m.get(x, y);
                    total += (0..g.n()).filter(|&c| m.get(x, c) + m.get(c, y) == dxy).count() as u64;
                }
            }
            total
        });
        Ok(SuiteContext { graph_id: graph_id.into(), config, oracle, certificate, delta_source, paths, interval_total })
    }

    pub fn graph(&self) -> &'a Graph {
        self.oracle.g
    }

    pub fn n(&self) -> usize {
        self.oracle.g.n()
    }

    pub fn delta2(&self) -> Option<u32> {
        (self.delta_source != DeltaSource::Unavailable).then_some(self.oracle.delta2)
    }

    /// Start vertices for sweep-based checks.
    pub(crate) fn starts(&self, rng: &mut SplitMix64) -> (Vec<Vertex>, Coverage) {
        let n = self.n();
        if n <= self.config.max_starts {
            return ((0..n).collect(), Coverage::Exhaustive);
        }
        let mut all: Vec<Vertex> = (0..n).collect();
        rng.shuffle(&mut all);
        all.truncate(self.config.max_starts);
        all.sort_unstable();
        (all, Coverage::Sampled)
    }

    /// Visits `(x, y, c)` with `x ≠ y` and `c ∈ I(x, y)`.
    pub(crate) fn for_each_xyc(&self, rng: &mut SplitMix64, mut f: impl FnMut(Vertex, Vertex, Vertex)) -> Coverage {
        let n = self.n();
        let m = self.oracle.matrix();
        if (n as u64).pow(3) <= self.config.exhaustive_cap {
            for x in 0..n {
                for y in (0..n).filter(|&y| y != x) {
                    let dxy = m.get(x, y);
                    let (rx, ry) = (m.row(x), m.row(y));
                    for c in (0..n).filter(|&c| rx[c] as u32 + ry[c] as u32 == dxy) {
                        f(x, y, c);
                    }
                }
            }
            return Coverage::Exhaustive;
        }
        for _ in 0..self.config.samples {
            let (x, y, c) = self.sample_xyc(rng);
            f(x, y, c);
        }
        Coverage::Sampled
    }

    /// Visits `(x, y, c, v)` with `x ≠ y`, `c ∈ I(x, y)` and any `v`.
    pub(crate) fn for_each_xycv(
        &self,
        rng: &mut SplitMix64,
        mut f: impl FnMut(Vertex, Vertex, Vertex, Vertex),
    ) -> Coverage {
        let n = self.n();
        let cap = self.config.exhaustive_cap;
        let exhaustive = (n as u64).pow(4) <= cap || self.interval_total.is_some_and(|t| t * n as u64 <= cap);
        if exhaustive {
            let mut rng = SplitMix64::new(0);
            self.for_each_xyc(&mut rng, |x, y, c| (0..n).for_each(|v| f(x, y, c, v)));
            return Coverage::Exhaustive;
        }
        for _ in 0..self.config.samples {
            let (x, y, c) = self.sample_xyc(rng);
            f(x, y, c, rng.index(n));
        }
        Coverage::Sampled
    }

    fn sample_xyc(&self, rng: &mut SplitMix64) -> (Vertex, Vertex, Vertex) {
        let n = self.n();
        let x = rng.index(n);
        let y = (x + 1 + rng.index(n - 1)) % n;
        let interval = self.oracle.matrix().interval(x, y);
        (x, y, interval[rng.index(interval.len())])
    }

    /// Runs one check; δ-dependent checks are skipped when δ is unavailable.
    pub fn run_check(&self, def: &CheckDef) -> CheckResult {
        if def.needs_delta && self.delta2().is_none() {
            return CheckResult {
                id: def.id,
                title: def.title,
                status: Status::Skipped,
                coverage: Coverage::Sampled,
                tested: 0,
                violations: 0,
                witness: None,
                reason: Some(alloc::format!("exact hyperbolicity is capped at n <= {}", self.config.caps.delta)),
                stats: Vec::new(),
                examples: Vec::new(),
            };
        }
        let mut rng = SplitMix64::new(derive_seed(self.config.seed, def.id));
        let t = (def.run)(self, &mut rng);
        debug_assert!(
            t.witness.as_ref().is_none_or(|w| (def.eval)(&self.oracle, &w.vertices, &w.params) == Some(w.violation)),
            "{} produced a witness its own evaluation does not reproduce",
            def.id
        );
        CheckResult {
            id: def.id,
            title: def.title,
            status: if t.violations == 0 { Status::Pass } else { Status::Fail },
            coverage: t.coverage,
            tested: t.tested,
            violations: t.violations,
            witness: t.witness,
            reason: None,
            stats: t.stats,
            examples: t.examples.into_iter().collect(),
        }
    }

    /// Assembles a report from results in registry order.
    pub fn report(&self, checks: Vec<CheckResult>) -> VerificationReport {
        let prof = self.oracle.profile();
        VerificationReport {
            graph_id: self.graph_id.clone(),
            n: self.n(),
            m: self.graph().m(),
            seed: self.config.seed,
            rad: prof.rad,
            diam: prof.diam,
            delta2: self.delta2(),
            delta_source: self.delta_source,
            delta_witness: self.certificate.map(|c| c.witness),
            path_mode: self.paths.mode,
            path_count: self.paths.count,
            checks,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub rad: u32,
    pub diam: u32,
    pub delta2: Option<u32>,
    pub delta_source: DeltaSource,
    pub delta_witness: Option<[Vertex; 4]>,
    pub path_mode: PathMode,
    pub path_count: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Builds the context and runs the whole registry in order.
pub fn run_suite(g: &Graph, graph_id: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    let ctx = SuiteContext::new(g, graph_id, config.clone())?;
    let checks = registry().iter().map(|def| ctx.run_check(def)).collect();
    Ok(ctx.report(checks))
}

/// Re-evaluates a witness from fresh BFS distances at the given `2δ`. True
/// when it reproduces exactly the recorded violation.
pub fn reverify_witness(g: &Graph, delta2: u32, check_id: &str, w: &Witness) -> Result<bool> {
    let def = find_check(check_id).ok_or(Error::InvalidParams("unknown check id"))?;
    let fresh = FreshOracle::new(g, delta2);
    Ok((def.eval)(&fresh, &w.vertices, &w.params) == Some(w.violation))
}

/// `vs` has exactly `len` in-range vertices.
pub(crate) fn shape_ok<O: Oracle + ?Sized>(o: &O, vs: &[Vertex], len: usize) -> bool {
    vs.len() == len && vs.iter().all(|&v| v < o.n())
}

/// `vs` starts with `x ≠ y` and `c ∈ I(x, y)`.
pub(crate) fn interval_ok<O: Oracle + ?Sized>(o: &O, vs: &[Vertex], len: usize) -> bool {
    shape_ok(o, vs, len) && vs[0] != vs[1] && o.in_interval(vs[0], vs[1], vs[2])
}

pub(crate) fn run_xyc<'a>(
    ctx: &SuiteContext<'a>,
    rng: &mut SplitMix64,
    claim: impl Fn(&TableOracle<'a>, Vertex, Vertex, Vertex) -> Option<Violation>,
) -> Tally {
    let o = &ctx.oracle;
    let mut t = Tally::new();
    let cov = ctx.for_each_xyc(rng, |x, y, c| t.record(claim(o, x, y, c), || (alloc::vec![x, y, c], Vec::new())));
    t.covered(cov);
    t
}

pub(crate) fn run_xycv<'a>(
    ctx: &SuiteContext<'a>,
    rng: &mut SplitMix64,
    claim: impl Fn(&TableOracle<'a>, Vertex, Vertex, Vertex, Vertex) -> Option<Violation>,
) -> Tally {
    let o = &ctx.oracle;
    let mut t = Tally::new();
    let cov =
        ctx.for_each_xycv(rng, |x, y, c, v| t.record(claim(o, x, y, c, v), || (alloc::vec![x, y, c, v], Vec::new())));
    t.covered(cov);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_fig3, gnm_connected, grid, path, random_tree, Fig3Params};

    fn assert_all_pass(r: &VerificationReport) {
        for c in &r.checks {
            assert_ne!(c.status, Status::Fail, "{} failed on {}: {:?}", c.id, r.graph_id, c.witness);
        }
    }

    #[test]
    fn trees_pass_with_zero_delta() {
        for seed in 0..3 {
            let g = random_tree(25, seed).unwrap();
            let r = run_suite(&g, "tree", &SuiteConfig::default()).unwrap();
            assert_eq!(r.delta2, Some(0));
            assert_all_pass(&r);
            assert!(r.checks.iter().all(|c| c.status == Status::Pass));
        }
    }

    #[test]
    fn small_families_pass() {
        for (name, g) in [
            ("cycle7", cycle(7).unwrap()),
            ("cycle10", cycle(10).unwrap()),
            ("grid4x5", grid(4, 5).unwrap()),
            ("k5", complete(5).unwrap()),
            ("path9", path(9).unwrap()),
        ] {
            assert_all_pass(&run_suite(&g, name, &SuiteConfig::default()).unwrap());
        }
    }

    #[test]
    fn fig3_records_the_far_uphill() {
        let f = gen_fig3(Fig3Params { k: 2, p: 1 }).unwrap();
        let r = run_suite(&f.graph, "fig3", &SuiteConfig::default()).unwrap();
        assert_all_pass(&r);
        let ter4 = r.check("TER-4").unwrap();
        let (x, u1, v1) = (f.v("x"), f.v("u1"), f.v("v1"));
        assert!(ter4.examples.iter().any(|h| h.windows(2).any(|e| e == [x, u1] || e == [x, v1])));
    }

    #[test]
    fn underestimated_delta_yields_reverifiable_witnesses() {
        let g = gnm_connected(30, 70, 5).unwrap();
        let exact = run_suite(&g, "g", &SuiteConfig::default()).unwrap();
        let d2 = exact.delta2.unwrap();
        assert!(d2 >= 2);
        let config = SuiteConfig { delta2_override: Some(0), ..SuiteConfig::default() };
        let r = run_suite(&g, "g", &config).unwrap();
        assert_eq!(r.delta_source, DeltaSource::Override);
        assert!(!r.passed());
        for c in r.failures() {
            let w = c.witness.as_ref().expect("failures carry witnesses");
            assert!(reverify_witness(&g, 0, c.id, w).unwrap(), "{} witness does not re-verify", c.id);
            // the same instance is fine at the true δ
            if find_check(c.id).unwrap().needs_delta {
                assert!(!reverify_witness(&g, d2, c.id, w).unwrap());
            }
        }
    }

    #[test]
    fn reverify_rejects_tampered_witnesses() {
        let g = cycle(8).unwrap();
        let config = SuiteConfig { delta2_override: Some(0), ..SuiteConfig::default() };
        let r = run_suite(&g, "c8", &config).unwrap();
        let c = r.failures().next().expect("cycles are not 0-hyperbolic");
        let mut w = c.witness.clone().unwrap();
        w.violation.lhs += 1;
        assert!(!reverify_witness(&g, 0, c.id, &w).unwrap());
        assert!(reverify_witness(&g, 0, "NOPE-1", &w).is_err());
    }

    #[test]
    fn delta_checks_skip_above_the_cap() {
        let g = cycle(12).unwrap();
        let mut config = SuiteConfig::default();
        config.caps.delta = 10;
        let r = run_suite(&g, "c12", &config).unwrap();
        assert_eq!(r.delta2, None);
        assert_eq!(r.check("DUAL-1").unwrap().status, Status::Skipped);
        assert!(r.check("DUAL-1").unwrap().reason.is_some());
        assert_eq!(r.check("ID-1").unwrap().status, Status::Pass);
        assert!(r.passed());
    }

    #[test]
    fn deterministic_for_a_seed() {
        let g = gnm_connected(50, 200, 2).unwrap();
        let config = SuiteConfig { samples: 2000, exhaustive_cap: 1000, ..SuiteConfig::default() };
        let a = run_suite(&g, "g", &config).unwrap();
        let b = run_suite(&g, "g", &config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.check("DUAL-1").unwrap().coverage, Coverage::Sampled);
    }

    #[test]
    fn path_enumeration_counts() {
        let g = grid(3, 3).unwrap();
        let ctx = SuiteContext::new(&g, "g", SuiteConfig::default()).unwrap();
        assert_eq!(ctx.paths.mode, PathMode::Enumerated);
        let mut seen = 0u64;
        ctx.paths.for_each(&ctx.oracle, |p| {
            assert!(ctx.oracle.is_shortest_path(p));
            seen += 1;
        });
        assert_eq!(seen, ctx.paths.count);
        // corner to opposite corner of a 3x3 grid: C(4, 2) paths
        let mut corner = 0;
        ctx.paths.for_each(&ctx.oracle, |p| corner += (p[0] == 0 && *p.last().unwrap() == 8) as u32);
        assert_eq!(corner, 6);
    }
}

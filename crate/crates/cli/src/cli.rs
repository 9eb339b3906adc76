//! Argument parsing and the six subcommands.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperterrain_core::approx::{approx_tree_fast, pair_left_from_start, tree_middle_from_start};
use hyperterrain_core::convexity::{
    allowed_beta, check_disk_pseudoconvexity, check_layer_pseudoconvexity, pseudoconvexity_beta_in,
    quasiconvexity_eps_in,
};
use hyperterrain_core::exact::{all_pairs_distances, OracleCaps};
use hyperterrain_core::generators::Family;
use hyperterrain_core::graph::canonical_shortest_path;
use hyperterrain_core::terrain::{path_kind_of, TerrainSegmentation};
use hyperterrain_core::verify::{SuiteConfig, VerificationReport};
use hyperterrain_core::{EccentricityProfile, Error, Graph, Vertex};
use rayon::prelude::*;
use serde::Serialize;

use crate::dto::{
    ConvexityDoc, CorpusDoc, DiskDoc, EccDoc, LayerDoc, ReportDoc, SetDoc, Skipped, StatsDoc, TerrainDoc,
    SCHEMA_VERSION,
};
use crate::error::CliError;
use crate::io::{read_graph_file, write_edge_list};
use crate::suite::{hyperbolicity_parallel, parse_corpus, run_corpus, run_suite_parallel};

#[derive(Debug, Parser)]
#[command(name = "hyperterrain", version, about = "Eccentricity terrain of hyperbolic graphs")]
pub struct Cli {
    /// Worker threads (default: hardware parallelism).
    #[arg(long, global = true, env = "HYPERTERRAIN_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for every sampled quantity.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest n for all-pairs distances and exact eccentricities.
    #[arg(long, global = true, default_value_t = OracleCaps::default().apsp)]
    pub apsp_cap: usize,
    /// Largest n for the exact four-point scan.
    #[arg(long, global = true, default_value_t = OracleCaps::default().delta)]
    pub delta_cap: usize,
    /// Ignore both size caps.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Edge-list file, `-` for standard input.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Generated graph, e.g. `gnm:100:400:1`, `grid:4x5`, `fig3:2:1`.
    #[arg(long = "gen")]
    pub generate: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EccMode {
    Exact,
    Pair,
    Tree,
    TreeFast,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph as an edge list.
    Gen {
        /// Family descriptor: path:N, cycle:N, complete:N, grid:RxC, tree:N:SEED, gnm:N:M:SEED, fig3:K:P.
        family: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Size, radius, diameter, center, δ and the layer histogram.
    Stats {
        #[command(flatten)]
        input: Input,
    },
    /// Exact or estimated eccentricities of every vertex.
    Ecc {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "exact")]
        mode: EccMode,
        /// Sweep budget for `tree-fast`.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Start vertex label for the sweeps (default: smallest label).
        #[arg(long)]
        start: Option<u64>,
        /// Add exact eccentricities and the error of each estimate.
        #[arg(long)]
        with_exact: bool,
        /// Known 2δ, used to evaluate the additive guarantee.
        #[arg(long)]
        delta2: Option<u32>,
    },
    /// Up/level/down segmentation of the canonical shortest path.
    Terrain {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Pseudoconvexity of the layer sets, sampled disks and an optional set.
    Convexity {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 200)]
        disks: usize,
        /// Comma-separated vertex labels to measure as well.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u64>>,
        /// Use this 2δ instead of the exact value.
        #[arg(long)]
        delta2: Option<u32>,
    },
    /// Run the check registry on one graph or a corpus.
    Verify {
        #[arg(long, short, conflicts_with_all = ["generate", "corpus"])]
        input: Option<PathBuf>,
        #[arg(long = "gen", conflicts_with = "corpus")]
        generate: Option<String>,
        /// `default`, `trees`, or comma-separated family descriptors.
        #[arg(long)]
        corpus: Option<String>,
        /// Samples per sampled check.
        #[arg(long)]
        samples: Option<usize>,
        /// Also write the JSON report here.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Exit status: 0 success, 1 a check failed, 2 input or configuration error.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let caps = if cli.force {
        OracleCaps { apsp: usize::MAX, delta: usize::MAX }
    } else {
        OracleCaps { apsp: cli.apsp_cap, delta: cli.delta_cap }
    };
    let ctx = Ctx { format: cli.format, seed: cli.seed, caps };
    match cli.command {
        Command::Gen { family, output } => {
            let g = generate_graph(&family)?;
            match output {
                Some(p) => write_edge_list(&g, BufWriter::new(File::create(p)?))?,
                None => write_edge_list(&g, &mut *out)?,
            }
            Ok(0)
        }
        Command::Stats { input } => ctx.stats(&load(&input)?, out),
        Command::Ecc { input, mode, k, start, with_exact, delta2 } => {
            ctx.ecc(&load(&input)?, mode, k, start, with_exact, delta2, out)
        }
        Command::Terrain { input, from, to } => ctx.terrain(&load(&input)?, from, to, out),
        Command::Convexity { input, disks, set, delta2 } => ctx.convexity(&load(&input)?, disks, set, delta2, out),
        Command::Verify { input, generate, corpus, samples, output } => {
            let mut config = SuiteConfig { seed: ctx.seed, caps: ctx.caps, ..SuiteConfig::default() };
            if let Some(s) = samples {
                config.samples = s;
            }
            if let Some(desc) = corpus {
                return ctx.verify_corpus(&desc, &config, output, out);
            }
            let input = Input { input, generate };
            let (g, id) = match (&input.input, &input.generate) {
                (Some(p), _) => (read_graph_file(p)?, p.display().to_string()),
                (None, Some(d)) => (generate_graph(d)?, d.clone()),
                (None, None) => return Err(CliError::Config("verify needs --input, --gen or --corpus".into())),
            };
            ctx.verify_one(&g, &id, &config, output, out)
        }
    }
}

struct Ctx {
    format: Option<Format>,
    seed: u64,
    caps: OracleCaps,
}

fn generate_graph(desc: &str) -> Result<Graph, CliError> {
    let fam: Family = desc.parse().map_err(|_| CliError::Config(format!("bad family descriptor `{desc}`")))?;
    Ok(fam.generate()?)
}

fn load(input: &Input) -> Result<Graph, CliError> {
    match (&input.input, &input.generate) {
        (Some(p), _) => read_graph_file(p),
        (None, Some(d)) => generate_graph(d),
        (None, None) => Err(CliError::Config("need --input or --gen".into())),
    }
}

fn vertex(g: &Graph, label: u64) -> Result<Vertex, CliError> {
    g.vertex_of(label).ok_or(CliError::UnknownVertex(label))
}

fn json<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, doc).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn cap_error(what: &'static str, n: usize, cap: usize) -> Error {
    Error::SizeLimitExceeded { what, n, cap }
}

/// Exact eccentricities by one BFS per vertex, spread over the pool.
pub fn eccentricities_parallel(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .into_par_iter()
        .map_init(
            || (Vec::new(), Vec::new()),
            |(dist, queue), s| {
                g.bfs_multi_into(&[s], dist, queue);
                dist[*queue.last().expect("source is queued")]
            },
        )
        .collect()
}

impl Ctx {
    fn profile(&self, g: &Graph) -> Result<EccentricityProfile, Error> {
        if g.n() > self.caps.apsp {
            return Err(cap_error("exact eccentricities", g.n(), self.caps.apsp));
        }
        Ok(EccentricityProfile::from_eccentricities(eccentricities_parallel(g)))
    }

    fn delta(&self, g: &Graph) -> Result<hyperterrain_core::HyperbolicityCertificate, Error> {
        if g.n() > self.caps.delta {
            return Err(cap_error("exact hyperbolicity", g.n(), self.caps.delta));
        }
        let m = all_pairs_distances(g, &self.caps)?;
        hyperbolicity_parallel(&m, &self.caps)
    }

    fn stats(&self, g: &Graph, out: &mut dyn Write) -> Result<i32, CliError> {
        let mut skipped = Vec::new();
        let prof = match self.profile(g) {
            Ok(p) => Some(p),
            Err(e) => {
                skipped.push(Skipped { what: "eccentricities", reason: e.to_string() });
                None
            }
        };
        let cert = match self.delta(g) {
            Ok(c) => Some(c),
            Err(e) => {
                skipped.push(Skipped { what: "delta", reason: e.to_string() });
                None
            }
        };
        let doc = StatsDoc {
            schema_version: SCHEMA_VERSION,
            kind: "stats",
            n: g.n(),
            m: g.m(),
            rad: prof.as_ref().map(|p| p.rad),
            diam: prof.as_ref().map(|p| p.diam),
            center: prof.as_ref().map(|p| p.center.iter().map(|&v| g.label(v)).collect()),
            center_size: prof.as_ref().map(|p| p.center.len()),
            delta2: cert.map(|c| c.delta2),
            delta_witness: cert.map(|c| c.witness.map(|v| g.label(v))),
            layer_histogram: prof.as_ref().map(|p| p.layer_histogram()),
            skipped,
        };
        if self.format == Some(Format::Json) {
            json(out, &doc)?;
            return Ok(0);
        }
        let opt = |v: Option<u32>| v.map_or("skipped".to_string(), |x| x.to_string());
        writeln!(out, "n\t{}", doc.n)?;
        writeln!(out, "m\t{}", doc.m)?;
        writeln!(out, "rad\t{}", opt(doc.rad))?;
        writeln!(out, "diam\t{}", opt(doc.diam))?;
        writeln!(out, "center_size\t{}", doc.center_size.map_or("skipped".into(), |c| c.to_string()))?;
        if let Some(c) = &doc.center {
            writeln!(out, "center\t{}", join(c))?;
        }
        writeln!(out, "delta2\t{}", opt(doc.delta2))?;
        if let Some(h) = &doc.layer_histogram {
            writeln!(out, "layers\t{}", join(h))?;
        }
        for s in &doc.skipped {
            writeln!(out, "# skipped {}: {}", s.what, s.reason)?;
        }
        Ok(0)
    }

    #[allow(clippy::too_many_arguments)]
    fn ecc(
        &self,
        g: &Graph,
        mode: EccMode,
        k: u32,
        start: Option<u64>,
        with_exact: bool,
        delta2: Option<u32>,
        out: &mut dyn Write,
    ) -> Result<i32, CliError> {
        let start = start.map(|l| vertex(g, l)).transpose()?.unwrap_or(0);
        let exact = if with_exact || mode == EccMode::Exact { Some(self.profile(g)?.ecc) } else { None };
        let delta2 = match delta2 {
            Some(d) => Some(d),
            None if with_exact && g.n() <= self.caps.delta => Some(self.delta(g)?.delta2),
            None => None,
        };
        let doc = match mode {
            EccMode::Exact => EccDoc::exact(g, exact.as_deref().expect("computed above"), delta2),
            EccMode::Pair => {
                EccDoc::approx(g, "pair", start, &pair_left_from_start(g, start)?, exact.as_deref(), delta2)
            }
            EccMode::Tree => {
                let (_, a) = tree_middle_from_start(g, start)?;
                EccDoc::approx(g, "tree", start, &a, exact.as_deref(), delta2)
            }
            EccMode::TreeFast => {
                let (_, a) = approx_tree_fast(g, start, k)?;
                EccDoc::approx(g, "tree-fast", start, &a, exact.as_deref(), delta2)
            }
        };
        if self.format == Some(Format::Json) {
            json(out, &doc)?;
            return Ok(0);
        }
        let mut w = BufWriter::new(out);
        let guarantee = match &doc.guarantee {
            Some(gu) => match gu.bound {
                Some(b) => format!("{}:{}={}", gu.side, gu.additive, b),
                None => format!("{}:{}", gu.side, gu.additive),
            },
            None => "exact".into(),
        };
        write!(w, "# method={} delta2={}", doc.method, doc.delta2.map_or("unknown".into(), |d| d.to_string()))?;
        if let Some(a) = &doc.anchors {
            write!(w, " x={} y={}", a.x, a.y)?;
            if let Some(r) = a.root {
                write!(w, " root={r}")?;
            }
        }
        writeln!(w)?;
        let with_err = exact.is_some() && mode != EccMode::Exact;
        writeln!(w, "vertex\testimate{}\tguarantee", if with_err { "\texact\terror" } else { "" })?;
        for r in &doc.rows {
            write!(w, "{}\t{}", r.vertex, r.estimate)?;
            if with_err {
                write!(w, "\t{}\t{}", r.exact.unwrap_or_default(), r.error.unwrap_or_default())?;
            }
            writeln!(w, "\t{guarantee}")?;
        }
        w.flush()?;
        Ok(0)
    }

    fn terrain(&self, g: &Graph, from: u64, to: u64, out: &mut dyn Write) -> Result<i32, CliError> {
        let path = canonical_shortest_path(g, vertex(g, from)?, vertex(g, to)?);
        // only the path vertices need eccentricities
        let ecc: Vec<u32> = path.vertices.par_iter().map(|&v| g.bfs(v).eccentricity()).collect();
        let kind = path_kind_of(&ecc);
        let seg = TerrainSegmentation::from_eccentricities(path, ecc);
        let doc = TerrainDoc::new(g, &seg, kind, seg.identities());
        if self.format == Some(Format::Json) {
            json(out, &doc)?;
            return Ok(0);
        }
        writeln!(out, "path\t{}", join(&doc.path))?;
        writeln!(out, "ecc\t{}", join(&doc.ecc))?;
        writeln!(out, "strip\t{}", doc.strip)?;
        writeln!(out, "classes\t{}", doc.classes)?;
        writeln!(out, "kind\t{}", doc.path_kind)?;
        writeln!(out, "counts\tup={} horizontal={} down={}", doc.counts.up, doc.counts.horizontal, doc.counts.down)?;
        for s in &doc.segments {
            let pk = s.plain_kind.map(|p| format!(" ({p})")).unwrap_or_default();
            writeln!(out, "segment\t{}{}\t{} -> {}\tlen={}", s.kind, pk, s.from, s.to, s.len)?;
        }
        writeln!(out, "identities\t{}", if doc.identities.hold { "hold" } else { "FAIL" })?;
        Ok(0)
    }

    fn convexity(
        &self,
        g: &Graph,
        disks: usize,
        set: Option<Vec<u64>>,
        delta2: Option<u32>,
        out: &mut dyn Write,
    ) -> Result<i32, CliError> {
        let m = all_pairs_distances(g, &self.caps)?;
        let (delta2, source) = match delta2 {
            Some(d) => (d, "override"),
            None => (hyperbolicity_parallel(&m, &self.caps)?.delta2, "exact"),
        };
        let prof = EccentricityProfile::from_matrix(&m);
        let layers = check_layer_pseudoconvexity(&m, &prof, delta2);
        let disk_reports = check_disk_pseudoconvexity(g, &m, delta2, disks, self.seed);
        let set = match set {
            Some(labels) => {
                let vs = labels.iter().map(|&l| vertex(g, l)).collect::<Result<Vec<_>, _>>()?;
                let r = pseudoconvexity_beta_in(&m, &vs)?;
                Some(SetDoc::new(g, &r, quasiconvexity_eps_in(&m, &vs)?))
            }
            None => None,
        };
        let passed = layers.iter().all(|l| l.ok()) && disk_reports.iter().all(|d| d.ok());
        let doc = ConvexityDoc {
            schema_version: SCHEMA_VERSION,
            kind: "convexity",
            delta2,
            delta_source: source,
            allowed_beta: allowed_beta(delta2),
            layers: layers.iter().map(|l| LayerDoc::new(g, l)).collect(),
            disks: disk_reports.iter().map(|d| DiskDoc::new(g, d)).collect(),
            set,
            passed,
        };
        if self.format == Some(Format::Json) {
            json(out, &doc)?;
        } else {
            writeln!(out, "delta2\t{}\nallowed_beta\t{}", doc.delta2, doc.allowed_beta)?;
            writeln!(out, "k\tsize\tbeta\tdiameter\tbound\tok")?;
            for l in &doc.layers {
                writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}", l.k, l.size, l.beta_min, l.diameter, l.diameter_bound, l.ok)?;
            }
            let bad = doc.disks.iter().filter(|d| !d.ok).count();
            writeln!(out, "disks\t{} sampled, {} above allowed beta", doc.disks.len(), bad)?;
            if let Some(s) = &doc.set {
                writeln!(out, "set\tbeta={} eps={} exhaustive={}", s.beta_min, s.eps, s.exhaustive)?;
            }
        }
        Ok(if passed { 0 } else { 1 })
    }

    fn verify_one(
        &self,
        g: &Graph,
        id: &str,
        config: &SuiteConfig,
        output: Option<PathBuf>,
        out: &mut dyn Write,
    ) -> Result<i32, CliError> {
        let report = run_suite_parallel(g, id, config)?;
        let doc = ReportDoc::new(g, &report);
        if let Some(p) = output {
            json(&mut BufWriter::new(File::create(p)?), &doc)?;
        }
        if self.format == Some(Format::Json) {
            json(out, &doc)?;
        } else {
            write_report_text(out, &report)?;
        }
        Ok(if report.passed() { 0 } else { 1 })
    }

    fn verify_corpus(
        &self,
        desc: &str,
        config: &SuiteConfig,
        output: Option<PathBuf>,
        out: &mut dyn Write,
    ) -> Result<i32, CliError> {
        let entries = parse_corpus(desc)?;
        let reports = run_corpus(&entries, config)?;
        let graphs: Vec<Graph> = entries.iter().map(|e| e.family.generate()).collect::<Result<_, _>>()?;
        let docs = graphs.iter().zip(&reports).map(|(g, r)| ReportDoc::new(g, r)).collect();
        let doc = CorpusDoc::new(config.seed, docs);
        if let Some(p) = output {
            json(&mut BufWriter::new(File::create(p)?), &doc)?;
        }
        if self.format == Some(Format::Json) {
            json(out, &doc)?;
        } else {
            for r in &reports {
                write_report_text(out, r)?;
            }
            writeln!(out, "corpus\t{}/{} graphs passed", doc.graphs_passed, doc.graphs)?;
        }
        Ok(if doc.passed { 0 } else { 1 })
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_report_text(out: &mut dyn Write, r: &VerificationReport) -> std::io::Result<()> {
    let d = r.delta2.map_or("unavailable".into(), |d| d.to_string());
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(out, "{}\t{verdict}\tn={} m={} rad={} diam={} delta2={d}", r.graph_id, r.n, r.m, r.rad, r.diam)?;
    for c in &r.checks {
        write!(out, "  {}\t{}\t{}\t{}", c.id, c.status.as_str(), c.coverage.as_str(), c.tested)?;
        if let Some(w) = &c.witness {
            let v = w.violation;
            write!(out, "\t{}: {} {} {} at {:?}", v.claim, v.lhs, v.relation.as_str(), v.rhs, w.vertices)?;
        }
        if let Some(reason) = &c.reason {
            write!(out, "\t{reason}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Parses arguments, sizes the thread pool and runs; returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            let _ = writeln!(err, "error: --threads must be positive");
            return 2;
        }
        // a pool may already exist when called repeatedly in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

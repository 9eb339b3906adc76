//! Parallel drivers for the exact δ scan, the check registry and corpora.

use hyperterrain_core::exact::{hyperbolicity_scan, merge_scans, OracleCaps};
use hyperterrain_core::generators::{Family, Fig3Params};
use hyperterrain_core::verify::{registry, SuiteConfig, SuiteContext, VerificationReport};
use hyperterrain_core::{DistanceMatrix, Error, Graph, HyperbolicityCertificate};
use rayon::prelude::*;

use crate::error::CliError;

/// The four-point scan split over ranges of the smallest vertex. Ranges shrink
/// towards the front, where each first vertex owns the most quadruples.
pub fn hyperbolicity_parallel(m: &DistanceMatrix, caps: &OracleCaps) -> Result<HyperbolicityCertificate, Error> {
    let n = m.n();
    if n > caps.delta {
        return Err(Error::SizeLimitExceeded { what: "exact hyperbolicity", n, cap: caps.delta });
    }
    let mut bounds = vec![0];
    let mut a = 0;
    while a < n {
        let step = ((a + 1) / 8).max(1);
        a = (a + step).min(n);
        bounds.push(a);
    }
    let parts: Vec<_> = bounds.par_windows(2).map(|w| hyperbolicity_scan(m, w[0]..w[1])).collect();
    Ok(merge_scans(parts))
}

/// [`hyperterrain_core::verify::run_suite`] with the δ scan and the checks
/// spread over the thread pool. Checks come back in registry order.
pub fn run_suite_parallel(g: &Graph, graph_id: &str, config: &SuiteConfig) -> Result<VerificationReport, Error> {
    let ctx = SuiteContext::with_hyperbolicity(g, graph_id, config.clone(), hyperbolicity_parallel)?;
    let checks = registry().par_iter().map(|def| ctx.run_check(def)).collect();
    Ok(ctx.report(checks))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub family: Family,
    /// Corpus seed; added to the suite seed.
    pub seed: u64,
}

impl CorpusEntry {
    pub fn id(&self) -> String {
        format!("{}#{}", self.family, self.seed)
    }
}

pub const CORPUS_SIZES: [usize; 4] = [20, 40, 60, 80];
pub const CORPUS_SEEDS: std::ops::RangeInclusive<u64> = 1..=5;

/// Grid shapes standing in for `grid(a, b)` at each corpus size.
fn grid_shape(n: usize) -> (usize, usize) {
    match n {
        20 => (4, 5),
        40 => (5, 8),
        60 => (6, 10),
        80 => (8, 10),
        _ => (1, n),
    }
}

/// Every family at every size and seed, then the fig3 graphs.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in CORPUS_SIZES {
        for seed in CORPUS_SEEDS {
            let (a, b) = grid_shape(n);
            let fams = [
                Family::Path(n),
                Family::Cycle(n),
                Family::Grid(a, b),
                Family::RandomTree { n, seed },
                Family::GnmConnected { n, m: 2 * n, seed },
                Family::GnmConnected { n, m: 4 * n, seed },
            ];
            out.extend(fams.into_iter().map(|family| CorpusEntry { family, seed }));
        }
    }
    for k in 1..=3 {
        for p in 1..=2 {
            out.push(CorpusEntry { family: Family::Fig3(Fig3Params { k, p }), seed: 1 });
        }
    }
    out
}

pub fn tree_corpus() -> Vec<CorpusEntry> {
    CORPUS_SIZES
        .into_iter()
        .flat_map(|n| CORPUS_SEEDS.map(move |seed| CorpusEntry { family: Family::RandomTree { n, seed }, seed }))
        .collect()
}

/// `default`, `trees`, or a comma-separated list of family descriptors.
pub fn parse_corpus(desc: &str) -> Result<Vec<CorpusEntry>, CliError> {
    match desc {
        "default" => Ok(default_corpus()),
        "trees" => Ok(tree_corpus()),
        _ => desc
            .split(',')
            .map(|d| {
                let family = d.trim().parse().map_err(|_| CliError::Config(format!("bad family descriptor `{d}`")))?;
                Ok(CorpusEntry { family, seed: 0 })
            })
            .collect(),
    }
}

/// Runs every entry; reports come back in corpus order.
pub fn run_corpus(entries: &[CorpusEntry], config: &SuiteConfig) -> Result<Vec<VerificationReport>, Error> {
    entries
        .par_iter()
        .map(|e| {
            let g = e.family.generate()?;
            let cfg = SuiteConfig { seed: config.seed.wrapping_add(e.seed), ..config.clone() };
            run_suite_parallel(&g, &e.id(), &cfg)
        })
        .collect()
}

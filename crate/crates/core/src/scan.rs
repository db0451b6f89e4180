//! Seeded searches for large `sdiam_k / srad_k` ratios, and the small-graph
//! corpus used for oracle comparisons.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::eccentricity::{steiner_profile, Budget};
use crate::families::{random_graph, Ensemble, EnsembleConfig};
use crate::graph::{Graph, Vertex};
use crate::steiner::TerminalSet;
use crate::verify::{
    check_bound_with_profile, check_lemma_with_profile, check_tree_bound_with_profile, BoundSpec, Status,
    VerificationReport, VerifyError,
};
use crate::Rational;

/// Largest `max_n` accepted by [`seeded_corpus`].
pub const CORPUS_MAX_N: usize = 8;

/// Largest order enumerated exhaustively by [`seeded_corpus`].
pub const CORPUS_EXHAUSTIVE_N: usize = 7;

/// Random graphs appended to the corpus.
pub const CORPUS_RANDOM: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("max_n = {max_n} exceeds the corpus cap of {cap}")]
    CapExceeded { max_n: usize, cap: usize },
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// A graph together with its k-radius data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanWitness {
    pub trial: usize,
    pub seed: u64,
    pub graph: Graph,
    pub k: usize,
    pub srad: u32,
    pub sdiam: u32,
    pub ratio: Rational,
    pub diametral: TerminalSet,
    pub center: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialOutcome {
    Done { srad: u32, sdiam: u32 },
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub outcome: TrialOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub k: usize,
    pub trials: usize,
    pub completed: usize,
    pub bound: Rational,
    /// `k / (k - 1)`, checked only for tree ensembles.
    pub tree_bound: Option<Rational>,
    pub best_ratio: Option<Rational>,
    pub best_witness: Option<ScanWitness>,
    /// Bound reports with status Refuted, with their witnesses.
    pub violations: Vec<(ScanWitness, VerificationReport)>,
    /// Lemma checks run on near-extremal trials.
    pub lemma_reports: Vec<(usize, VerificationReport)>,
    /// Whether recomputing the best witness reproduced its ratio.
    pub recomputed: bool,
    pub log: Vec<TrialRecord>,
}

impl ScanResult {
    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.log.iter().filter(|r| matches!(r.outcome, TrialOutcome::Failed(_)))
    }

    pub fn lemma_refuted(&self) -> usize {
        self.lemma_reports
            .iter()
            .filter(|(_, r)| r.status == Status::Refuted)
            .count()
    }

    /// Verified iff no violation, no refuted lemma and a faithful recomputation.
    pub fn to_report(&self) -> VerificationReport {
        let mut r = VerificationReport::new("scan");
        r.push("k", self.k);
        r.push("trials", self.trials);
        r.push("completed", self.completed);
        r.push("skipped", self.trials - self.completed);
        if let Some(best) = self.best_ratio {
            r.push("best_ratio", best);
        }
        r.push("bound", self.bound);
        if let Some(tb) = self.tree_bound {
            r.push("tree_bound", tb);
        }
        r.push("violations", self.violations.len());
        r.push("lemma_checks", self.lemma_reports.len());
        r.push("lemma_refuted", self.lemma_refuted());
        if let Some(w) = &self.best_witness {
            r.push("best_trial", w.trial);
            r.push("best_seed", w.seed as i64);
            r.push("best_n", w.graph.vertex_count());
            r.push("best_srad", w.srad);
            r.push("best_sdiam", w.sdiam);
        }
        r.push("recomputed", self.recomputed);
        r.require(self.violations.is_empty() && self.lemma_refuted() == 0 && self.recomputed);
        r
    }
}

fn is_tree_ensemble(cfg: &EnsembleConfig) -> bool {
    matches!(cfg.kind, Ensemble::RandomTree { .. })
}

/// Ratio above which a trial is close enough to the bound to run the
/// lemma check on it.
fn lemma_trigger(k: usize) -> Option<Rational> {
    (k >= 5).then(|| Rational::new(k as i64 + 3, k as i64 + 1) - Rational::new(1, 100))
}

struct TrialData {
    record: TrialRecord,
    witness: Option<ScanWitness>,
    violations: Vec<VerificationReport>,
    lemma: Option<VerificationReport>,
}

fn run_trial(cfg: &EnsembleConfig, k: usize, trial: usize, budget: Budget) -> TrialData {
    let seed = cfg.seed.wrapping_add(trial as u64);
    let failed = |msg: String| TrialData {
        record: TrialRecord {
            trial,
            seed,
            outcome: TrialOutcome::Failed(msg),
        },
        witness: None,
        violations: Vec::new(),
        lemma: None,
    };
    let g = match random_graph(&cfg.with_seed(seed)) {
        Ok(g) => g,
        Err(e) => return failed(e.to_string()),
    };
    let profile = match steiner_profile(&g, k, budget) {
        Ok(p) => p,
        Err(e) => return failed(e.to_string()),
    };
    let summary = profile.report();
    let srad = summary.srad.finite().expect("connected");
    let sdiam = summary.sdiam.finite().expect("connected");

    let mut violations = Vec::new();
    let mut checks = vec![check_bound_with_profile(&g, &profile)];
    if is_tree_ensemble(cfg) {
        checks.push(check_tree_bound_with_profile(&g, &profile));
    }
    for check in checks {
        match check {
            Ok(rep) if rep.status == Status::Refuted => violations.push(rep),
            Ok(_) => {}
            Err(e) => return failed(e.to_string()),
        }
    }

    let lemma = match lemma_trigger(k) {
        Some(trigger) if summary.ratio > trigger => {
            let p = summary.ratio * Rational::new(999, 1000);
            match check_lemma_with_profile(&g, &profile, p, "lemma") {
                Ok(rep) => Some(rep),
                Err(e) => return failed(e.to_string()),
            }
        }
        _ => None,
    };

    TrialData {
        record: TrialRecord {
            trial,
            seed,
            outcome: TrialOutcome::Done { srad, sdiam },
        },
        witness: Some(ScanWitness {
            trial,
            seed,
            graph: g,
            k,
            srad,
            sdiam,
            ratio: summary.ratio,
            diametral: summary.diametral_set,
            center: summary.center_vertices,
        }),
        violations,
        lemma,
    }
}

/// Runs `trials` seeded trials (trial `i` uses seed `cfg.seed + i`) and
/// reports the largest ratio, any bound violations and the lemma checks of
/// near-extremal trials. Failed trials are recorded in the log and skipped.
/// The result does not depend on thread scheduling.
pub fn ratio_scan(cfg: &EnsembleConfig, k: usize, trials: usize, budget: Budget) -> Result<ScanResult, ScanError> {
    if trials == 0 {
        return Err(ScanError::NoTrials);
    }
    let bound = BoundSpec::for_k(k)?.bound;
    let tree_bound = if is_tree_ensemble(cfg) {
        Some(BoundSpec::for_trees(k)?.bound)
    } else {
        None
    };
    let data: Vec<TrialData> = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, k, i, budget))
        .collect();

    let mut result = ScanResult {
        k,
        trials,
        completed: 0,
        bound,
        tree_bound,
        best_ratio: None,
        best_witness: None,
        violations: Vec::new(),
        lemma_reports: Vec::new(),
        recomputed: true,
        log: Vec::with_capacity(trials),
    };
    for d in data {
        result.log.push(d.record);
        let Some(w) = d.witness else { continue };
        result.completed += 1;
        if let Some(rep) = d.lemma {
            result.lemma_reports.push((w.trial, rep));
        }
        for rep in d.violations {
            result.violations.push((w.clone(), rep));
        }
        // Strict comparison keeps the earliest trial on ties.
        if result.best_ratio.map_or(true, |b| w.ratio > b) {
            result.best_ratio = Some(w.ratio);
            result.best_witness = Some(w);
        }
    }
    if let Some(w) = &result.best_witness {
        result.recomputed = match steiner_profile(&w.graph, k, budget) {
            Ok(p) => {
                let again = p.report();
                again.ratio == w.ratio && again.diametral_set == w.diametral
            }
            Err(_) => false,
        };
    }
    Ok(result)
}

/// Upper-triangle adjacency bits of `g` with vertices listed in `order`,
/// most significant bit first.
fn code_for(adj: &[u32], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn adjacency_bits(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

/// Lexicographic permutation step; false after the last permutation.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("pivot has a successor");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Canonical code: the smallest adjacency code over vertex orders that
/// list degree classes in increasing degree. Isomorphic graphs share the
/// set of such orders up to relabelling, so the code is an invariant, and
/// it determines the graph.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let adj = adjacency_bits(g);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    // Odometer over per-class permutations.
    loop {
        order.clear();
        for c in &classes {
            order.extend_from_slice(c);
        }
        best = best.min(code_for(&adj, &order));
        let mut advanced = false;
        for c in classes.iter_mut().rev() {
            if next_permutation(c) {
                advanced = true;
                break;
            }
            c.sort_unstable();
        }
        if !advanced {
            return best;
        }
    }
}

/// Minimum adjacency code over all `n!` orders; slow reference for tests.
pub fn canonical_code_naive(g: &Graph) -> u64 {
    let adj = adjacency_bits(g);
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    let mut best = u64::MAX;
    loop {
        best = best.min(code_for(&adj, &order));
        if !next_permutation(&mut order) {
            return best;
        }
    }
}

/// Rebuilds a graph from a code produced by [`canonical_code`] for `n`
/// vertices; the result lists vertices in canonical order.
fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = pairs;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges, None).expect("codes describe simple graphs")
}

/// All connected graphs on `n` vertices up to isomorphism, in increasing
/// canonical code order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    if n == 0 {
        return Vec::new();
    }
    // Every connected graph has a vertex whose removal keeps it connected,
    // so extending each smaller graph by one vertex reaches them all.
    for m in 2..=n {
        let mut codes = BTreeSet::new();
        for g in &level {
            let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
            for subset in 1u32..(1 << (m - 1)) {
                let mut e: Vec<(Vertex, Vertex)> = edges.clone();
                e.extend((0..m - 1).filter(|&v| subset >> v & 1 == 1).map(|v| (v, m - 1)));
                let h = Graph::from_edge_list(m, &e, None).expect("simple extension");
                codes.insert(canonical_code(&h));
            }
        }
        level = codes.into_iter().map(|c| graph_from_code(m, c)).collect();
    }
    level
}

/// Every connected graph with at most `min(7, max_n)` vertices, by order
/// and then canonical code, followed by 100 seeded connected `G(n, 1/2)`
/// graphs with `n = max_n`.
pub fn seeded_corpus(max_n: usize) -> Result<Vec<Graph>, ScanError> {
    if max_n > CORPUS_MAX_N {
        return Err(ScanError::CapExceeded {
            max_n,
            cap: CORPUS_MAX_N,
        });
    }
    let mut out: Vec<Graph> = (1..=max_n.min(CORPUS_EXHAUSTIVE_N)).flat_map(connected_graphs).collect();
    if max_n >= 2 {
        for seed in 0..CORPUS_RANDOM as u64 {
            let cfg = EnsembleConfig::gnp(max_n, Rational::new(1, 2), seed);
            out.push(random_graph(&cfg).expect("G(n, 1/2) is connected often enough"));
        }
    }
    Ok(out)
}

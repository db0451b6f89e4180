//! Exact checks of the ratio bounds and of the numbers quoted for `G_k`
//! and `H`. Every comparison is done in integers or exact rationals.

use std::fmt;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::decomposition::{
    classify_shape, decompose, decompose_with_trees, prune_to_t_double_prime, substituted_sets,
    DecompositionError, TreeShape,
};
use crate::eccentricity::{k_eccentricity, steiner_profile, Budget, EccentricityError, SteinerProfile};
use crate::families::{build_gk, build_h, FamilyError};
use crate::graph::{write_graph, Distance, Graph, Vertex};
use crate::steiner::{enumerate_min_steiner_trees, steiner_cost, steiner_distance, SteinerError, TerminalSet};
use crate::Rational;

/// Directory for witness dumps of refuted checks; defaults to the system
/// temp directory.
pub const DUMP_DIR_ENV: &str = "STEINER_DUMP_DIR";

/// Largest `k` for which the exhaustive `G_k` tier runs under a finite
/// budget.
pub const GK_EXHAUSTIVE_MAX_K: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("k = {0} is too small for a ratio bound (need k >= 2)")]
    KTooSmall(usize),
    #[error("p = {0} must be greater than 1")]
    InvalidP(Rational),
    #[error("input graph is not a tree")]
    NotATree,
    #[error("{0}")]
    Instance(String),
    #[error(transparent)]
    Eccentricity(#[from] EccentricityError),
    #[error(transparent)]
    Steiner(#[from] SteinerError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Upper bound on `sdiam_k / srad_k` over connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundSpec {
    pub k: usize,
    pub bound: Rational,
}

impl BoundSpec {
    pub fn for_k(k: usize) -> Result<Self, VerifyError> {
        let bound = match k {
            0 | 1 => return Err(VerifyError::KTooSmall(k)),
            2 => Rational::from_integer(2),
            3 => Rational::new(8, 5),
            4 => Rational::new(10, 7),
            _ => Rational::new(k as i64 + 3, k as i64 + 1),
        };
        Ok(BoundSpec { k, bound })
    }

    /// The sharper bound `k / (k - 1)` for trees.
    pub fn for_trees(k: usize) -> Result<Self, VerifyError> {
        if k < 2 {
            return Err(VerifyError::KTooSmall(k));
        }
        Ok(BoundSpec {
            k,
            bound: Rational::new(k as i64, k as i64 - 1),
        })
    }

    /// `den · sdiam <= num · srad`.
    pub fn holds(&self, srad: u32, sdiam: u32) -> bool {
        self.lhs(sdiam) <= self.rhs(srad)
    }

    fn lhs(&self, sdiam: u32) -> i64 {
        self.bound.denom() * i64::from(sdiam)
    }

    fn rhs(&self, srad: u32) -> i64 {
        self.bound.numer() * i64::from(srad)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Verified,
    Refuted,
    PremiseNotMet,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Verified => "Verified",
            Status::Refuted => "Refuted",
            Status::PremiseNotMet => "PremiseNotMet",
            Status::Skipped => "Skipped",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Ratio(Rational),
    Bool(bool),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(x) => write!(f, "{x}"),
            Value::Ratio(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Value {
    fn from(x: i64) -> Self {
        Value::Int(x)
    }
}

impl From<u32> for Value {
    fn from(x: u32) -> Self {
        Value::Int(i64::from(x))
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Ratio(r)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub status: Status,
    pub values: Vec<(String, Value)>,
    pub runtime: Duration,
}

impl VerificationReport {
    pub fn new(claim: &str) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            status: Status::Verified,
            values: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    pub fn push(&mut self, name: &str, value: impl Into<Value>) {
        self.values.push((name.to_string(), value.into()));
    }

    /// Records a checked condition; any failure makes the report Refuted.
    pub fn require(&mut self, ok: bool) {
        if !ok {
            self.status = Status::Refuted;
        }
    }

    fn skipped(claim: &str, err: &EccentricityError) -> Self {
        let mut r = VerificationReport::new(claim);
        r.status = Status::Skipped;
        r.push("reason", "budget");
        if let EccentricityError::BudgetExceeded { estimate, budget } = err {
            r.push("estimate", *estimate as i64);
            r.push("budget", *budget as i64);
        }
        r
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn int(&self, name: &str) -> Option<i64> {
        match self.get(name)? {
            Value::Int(x) => Some(*x),
            _ => None,
        }
    }

    /// `claim=<id> status=<status> name=value ...`, runtime excluded.
    pub fn to_line(&self) -> String {
        let mut line = format!("claim={} status={}", self.claim, self.status);
        for (name, value) in &self.values {
            line.push_str(&format!(" {name}={value}"));
        }
        line
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

fn timed(
    start: Instant,
    r: Result<VerificationReport, VerifyError>,
) -> Result<VerificationReport, VerifyError> {
    r.map(|mut rep| {
        rep.runtime = start.elapsed();
        rep
    })
}

fn fin(d: Distance) -> u32 {
    d.finite().expect("connected instance")
}

fn set_text(g: &Graph, s: &TerminalSet) -> String {
    s.iter().map(|v| g.display_name(v)).collect::<Vec<_>>().join(",")
}

/// Writes the graph and the report line next to each other and returns
/// the graph path.
pub fn dump_witness(g: &Graph, report: &VerificationReport) -> std::io::Result<PathBuf> {
    let dir = std::env::var_os(DUMP_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos())
        .unwrap_or(0);
    let stem = format!("refuted-{}-{}-{stamp}", report.claim, std::process::id());
    let graph_path = dir.join(format!("{stem}.graph"));
    std::fs::write(&graph_path, write_graph(g))?;
    std::fs::write(dir.join(format!("{stem}.report")), report.to_line() + "\n")?;
    Ok(graph_path)
}

fn dump_if_refuted(g: &Graph, report: &mut VerificationReport) {
    if report.status == Status::Refuted {
        let value = match dump_witness(g, report) {
            Ok(path) => path.display().to_string(),
            Err(e) => format!("failed:{e}").replace(' ', "_"),
        };
        report.push("dump", value);
    }
}

fn bound_report(claim: &str, g: &Graph, spec: BoundSpec, profile: &SteinerProfile) -> VerificationReport {
    let summary = profile.report();
    let (srad, sdiam) = (fin(summary.srad), fin(summary.sdiam));
    let mut r = VerificationReport::new(claim);
    r.push("srad", srad);
    r.push("sdiam", sdiam);
    r.push("k", spec.k);
    r.push("ratio", summary.ratio);
    r.push("bound", spec.bound);
    r.push("lhs", spec.lhs(sdiam));
    r.push("rhs", spec.rhs(srad));
    r.push("tight", spec.lhs(sdiam) == spec.rhs(srad));
    r.push("diametral", set_text(g, &summary.diametral_set));
    r.require(spec.holds(srad, sdiam));
    dump_if_refuted(g, &mut r);
    r
}

/// Checks the general bound with an already computed profile.
pub fn check_bound_with_profile(g: &Graph, profile: &SteinerProfile) -> Result<VerificationReport, VerifyError> {
    Ok(bound_report("bound", g, BoundSpec::for_k(profile.k)?, profile))
}

/// Checks the tree bound with an already computed profile.
pub fn check_tree_bound_with_profile(g: &Graph, profile: &SteinerProfile) -> Result<VerificationReport, VerifyError> {
    if !g.is_tree() {
        return Err(VerifyError::NotATree);
    }
    Ok(bound_report("tree_bound", g, BoundSpec::for_trees(profile.k)?, profile))
}

/// `sdiam_k <= bound(k) · srad_k`. A Refuted report dumps `g`.
pub fn check_bound(g: &Graph, k: usize, budget: Budget) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    BoundSpec::for_k(k)?;
    let profile = match steiner_profile(g, k, budget) {
        Ok(p) => p,
        Err(e @ EccentricityError::BudgetExceeded { .. }) => return Ok(VerificationReport::skipped("bound", &e)),
        Err(e) => return Err(e.into()),
    };
    timed(start, check_bound_with_profile(g, &profile))
}

/// `(k - 1) · sdiam_k <= k · srad_k` on a tree.
pub fn check_tree_bound(t: &Graph, k: usize, budget: Budget) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    if !t.is_tree() {
        return Err(VerifyError::NotATree);
    }
    BoundSpec::for_trees(k)?;
    let profile = match steiner_profile(t, k, budget) {
        Ok(p) => p,
        Err(e @ EccentricityError::BudgetExceeded { .. }) => {
            return Ok(VerificationReport::skipped("tree_bound", &e))
        }
        Err(e) => return Err(e.into()),
    };
    timed(start, check_tree_bound_with_profile(t, &profile))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    /// Displayed witnesses plus one single-vertex sweep.
    Witness,
    /// Full profile over every vertex.
    Exhaustive,
}

/// Checks `d(R) = k+1`, `d(D) = k+3` and `e_k(r) = k+1` on `G_k`; the
/// exhaustive tier also checks `srad_k = k+1` and `sdiam_k = k+3`.
pub fn verify_gk(k: usize, tier: Tier, budget: Budget) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let h = build_gk(k)?;
    let g = &h.graph;
    let r_vertex = h.role("r");
    let ds: Vec<Vertex> = (1..=k).map(|i| h.role(&format!("d{i}"))).collect();
    let d_set = TerminalSet::new(ds.iter().copied())?;
    let r_set = TerminalSet::new(ds[..k - 1].iter().copied().chain([r_vertex]))?;

    let mut rep = VerificationReport::new("gk");
    if tier == Tier::Exhaustive {
        if k > GK_EXHAUSTIVE_MAX_K && budget.max_calls().is_some() {
            rep.status = Status::Skipped;
            rep.push("reason", "k_above_exhaustive_cap");
            rep.push("k", k);
            return timed(start, Ok(rep));
        }
        let profile = match steiner_profile(g, k, budget) {
            Ok(p) => p,
            Err(e @ EccentricityError::BudgetExceeded { .. }) => {
                return timed(start, Ok(VerificationReport::skipped("gk", &e)))
            }
            Err(e) => return Err(e.into()),
        };
        let summary = profile.report();
        let (srad, sdiam) = (fin(summary.srad), fin(summary.sdiam));
        rep.push("srad", srad);
        rep.push("sdiam", sdiam);
        rep.push("ratio", Rational::new(i64::from(sdiam), i64::from(srad)));
        rep.push("bound", BoundSpec::for_k(k)?.bound);
        rep.require(srad as usize == k + 1 && sdiam as usize == k + 3);
        rep.push("center", set_text(g, &TerminalSet::new(summary.center_vertices.iter().copied())?));
        rep.push("diametral", set_text(g, &summary.diametral_set));
    }
    let d_r = fin(steiner_cost(g, &r_set)?);
    let d_d = fin(steiner_cost(g, &d_set)?);
    let e_r = match k_eccentricity(g, r_vertex, k, budget) {
        Ok(e) => fin(e.value),
        Err(e @ EccentricityError::BudgetExceeded { .. }) => {
            return timed(start, Ok(VerificationReport::skipped("gk", &e)))
        }
        Err(e) => return Err(e.into()),
    };
    rep.push("k", k);
    rep.push("d_R", d_r);
    rep.push("d_D", d_d);
    rep.push("e_r", e_r);
    rep.require(d_r as usize == k + 1 && d_d as usize == k + 3 && e_r as usize == k + 1);
    timed(start, Ok(rep))
}

/// Distance families, `e_4(v_0) = 20`, `d(v_1..v_4) = 26` and the ratio
/// check on `H`; the exhaustive tier adds `srad_4 = 20`, `sdiam_4 = 26`.
pub fn verify_h(tier: Tier, budget: Budget) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let h = build_h();
    let g = &h.graph;
    let v0 = h.role("v0");
    let u = |i: usize| h.role(&format!("u{i}"));
    let v = |j: usize| h.role(&format!("v{j}"));
    let mut rep = VerificationReport::new("h");

    let mut exhaustive = None;
    if tier == Tier::Exhaustive {
        match steiner_profile(g, 4, budget) {
            Ok(p) => exhaustive = Some(p.report()),
            Err(e @ EccentricityError::BudgetExceeded { .. }) => {
                return timed(start, Ok(VerificationReport::skipped("h", &e)))
            }
            Err(e) => return Err(e.into()),
        }
    }
    if let Some(summary) = &exhaustive {
        let (srad, sdiam) = (fin(summary.srad), fin(summary.sdiam));
        rep.push("srad", srad);
        rep.push("sdiam", sdiam);
        rep.require(srad == 20 && sdiam == 26);
        rep.push("center", set_text(g, &TerminalSet::new(summary.center_vertices.iter().copied())?));
        rep.push("diametral", set_text(g, &summary.diametral_set));
    }

    for i in 1..=4 {
        let d = fin(g.distance(v0, u(i)).expect("role vertex"));
        rep.push(&format!("d_v0_u{i}"), d);
        rep.require(d == if i == 4 { 2 } else { 1 });
    }
    let uv: Vec<u32> = (1..=4)
        .flat_map(|i| (1..=4).filter(move |&j| i + j != 5).map(move |j| (i, j)))
        .map(|(i, j)| fin(g.distance(u(i), v(j)).expect("role vertex")))
        .collect();
    let (uv_min, uv_max) = (*uv.iter().min().expect("12 pairs"), *uv.iter().max().expect("12 pairs"));
    rep.push("d_u_v_min", uv_min);
    rep.push("d_u_v_max", uv_max);
    rep.require(uv_min == 6 && uv_max == 6);

    let e_v0 = match k_eccentricity(g, v0, 4, budget) {
        Ok(e) => e,
        Err(e @ EccentricityError::BudgetExceeded { .. }) => {
            return timed(start, Ok(VerificationReport::skipped("h", &e)))
        }
        Err(e) => return Err(e.into()),
    };
    let e4 = fin(e_v0.value);
    let d_set = TerminalSet::new((1..=4).map(v))?;
    let d_d = fin(steiner_cost(g, &d_set)?);
    let bound = BoundSpec::for_k(4)?;
    rep.push("e4_v0", e4);
    rep.push("e4_v0_witness", set_text(g, &e_v0.witness));
    rep.push("d_D", d_d);
    rep.push("ratio", Rational::new(i64::from(d_d), i64::from(e4)));
    rep.push("bound", bound.bound);
    rep.push("lhs", bound.lhs(d_d));
    rep.push("rhs", bound.rhs(e4));
    rep.require(e4 == 20 && d_d == 26 && bound.lhs(d_d) < bound.rhs(e4));
    timed(start, Ok(rep))
}

/// Reproduces `‖T_2''‖ + a_1 + b_1 = 13 + 6 + 6 = 25 < 26 = d(D)` on `H`.
///
/// `T_1` and `T_2` are chosen among all minimum Steiner trees of `D_1` and
/// `D_2` as the ones with the four-leaf shape. Also records whether the
/// configuration meets the two hypotheses attached to the inequality.
pub fn verify_claim_violation() -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let h = build_h();
    let g = &h.graph;
    let v0 = h.role("v0");
    let d = TerminalSet::new(h.roles_of(&["v1", "v2", "v3", "v4"]))?;
    let sets = substituted_sets(&d, v0);
    let limit = 10_000;

    let four_leaf = |di: &TerminalSet| -> Result<Vec<_>, VerifyError> {
        let mut out = Vec::new();
        for t in enumerate_min_steiner_trees(g, di, limit)? {
            if let TreeShape::FourLeaf(f) = classify_shape(&t.tree, di, v0)? {
                out.push((t, f));
            }
        }
        Ok(out)
    };

    let t2_candidates = four_leaf(&sets[1])?;
    let (t2, shape2) = t2_candidates
        .iter()
        .find(|(t, f)| {
            prune_to_t_double_prime(&t.tree, &TreeShape::FourLeaf(*f))
                .map(|p| p.edge_count() == 13)
                .unwrap_or(false)
        })
        .or_else(|| t2_candidates.first())
        .cloned()
        .ok_or_else(|| VerifyError::Instance("D_2 has no four-leaf minimum Steiner tree".into()))?;
    let t2pp = prune_to_t_double_prime(&t2.tree, &TreeShape::FourLeaf(shape2))?.edge_count();

    let (t1, shape1) = four_leaf(&sets[0])?
        .into_iter()
        .next()
        .ok_or_else(|| VerifyError::Instance("D_1 has no four-leaf minimum Steiner tree".into()))?;

    let mut trees = Vec::with_capacity(4);
    for (i, di) in sets.iter().enumerate() {
        trees.push(match i {
            0 => t1.clone(),
            1 => t2.clone(),
            _ => steiner_distance(g, di)?,
        });
    }
    let dec = decompose_with_trees(g, &d, v0, trees)?;
    let d_d = fin(steiner_cost(g, &d)?);
    let sum = t2pp as u32 + shape1.a + shape1.b;

    let mut rep = VerificationReport::new("claim");
    rep.push("t2pp", t2pp);
    rep.push("a1", shape1.a);
    rep.push("b1", shape1.b);
    rep.push("sum", sum);
    rep.push("sdiam", d_d);
    rep.push("violated", sum < d_d);
    rep.push("t2_cost", fin(t2.cost));
    rep.push("c1", shape1.c);
    rep.push("d1", shape1.d);
    rep.push("ell1", shape1.ell);
    rep.require(t2pp == 13 && shape1.a == 6 && shape1.b == 6 && sum == 25 && d_d == 26);
    rep.require(fin(t2.cost) == 19 && (shape1.c, shape1.d, shape1.ell) == (6, 0, 2));
    rep.require(dec.part(1).ell == 2);

    // Hypotheses: ℓ_1 < sdiam/10 and d(v0, v_i) > 3·sdiam/10.
    let ell_ok = 10 * i64::from(shape1.ell) < i64::from(d_d);
    let min_v0 = d.iter().map(|x| fin(g.distance(v0, x).expect("role vertex"))).min().expect("4 terminals");
    rep.push("hyp_ell", ell_ok);
    rep.push("min_d_v0_D", min_v0);
    rep.push("hyp_distance", 10 * i64::from(min_v0) > 3 * i64::from(d_d));
    rep.push("ell_min", dec.first().ell);
    timed(start, Ok(rep))
}

/// The two inequalities for `T_1` given a precomputed profile, over every
/// centre vertex as `v_0` and the lexicographically smallest diametral set.
pub fn check_lemma_with_profile(
    g: &Graph,
    profile: &SteinerProfile,
    p: Rational,
    claim: &str,
) -> Result<VerificationReport, VerifyError> {
    if p <= Rational::from_integer(1) {
        return Err(VerifyError::InvalidP(p));
    }
    let summary = profile.report();
    let (srad, sdiam) = (fin(summary.srad), fin(summary.sdiam));
    let sdiam_r = Rational::from_integer(i64::from(sdiam));
    let mut rep = VerificationReport::new(claim);
    rep.push("srad", srad);
    rep.push("sdiam", sdiam);
    rep.push("k", profile.k);
    rep.push("p", p);
    if sdiam_r <= p * Rational::from_integer(i64::from(srad)) {
        rep.status = Status::PremiseNotMet;
        return Ok(rep);
    }
    let threshold = (p - Rational::from_integer(1)) / p * sdiam_r;
    rep.push("threshold", threshold);

    let d = &summary.diametral_set;
    let mut min_to_v0: Option<u32> = None;
    let mut min_pair_slack: Option<Rational> = None;
    for &v0 in &summary.center_vertices {
        let dec = decompose(g, d, v0)?;
        let t1 = dec.first();
        let tree = &t1.tree.tree;
        let others: Vec<Vertex> = d.iter().filter(|&x| x != t1.removed).collect();
        for (a, &vi) in others.iter().enumerate() {
            let dv0 = tree.distance(vi, v0).map_err(DecompositionError::from)?;
            min_to_v0 = Some(min_to_v0.map_or(dv0, |m| m.min(dv0)));
            for &vj in &others[a + 1..] {
                let dij = tree.distance(vi, vj).map_err(DecompositionError::from)?;
                let slack = Rational::from_integer(i64::from(dij))
                    - Rational::from_integer(i64::from(t1.ell))
                    - threshold;
                min_pair_slack = Some(min_pair_slack.map_or(slack, |m| m.min(slack)));
            }
        }
    }
    rep.push("centers_checked", summary.center_vertices.len());
    let min_to_v0 = min_to_v0.expect("k >= 2 leaves another terminal");
    rep.push("min_dT1_v0", min_to_v0);
    rep.require(Rational::from_integer(i64::from(min_to_v0)) > threshold);
    if let Some(slack) = min_pair_slack {
        rep.push("min_pair_slack", slack);
        rep.require(slack > Rational::from_integer(0));
    }
    dump_if_refuted(g, &mut rep);
    Ok(rep)
}

/// Computes the profile and runs [`check_lemma_with_profile`]. Reports
/// PremiseNotMet unless `sdiam_k > p · srad_k`.
pub fn check_lemma(g: &Graph, k: usize, p: Rational, budget: Budget) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    if p <= Rational::from_integer(1) {
        return Err(VerifyError::InvalidP(p));
    }
    let profile = match steiner_profile(g, k, budget) {
        Ok(pr) => pr,
        Err(e @ EccentricityError::BudgetExceeded { .. }) => return Ok(VerificationReport::skipped("lemma", &e)),
        Err(e) => return Err(e.into()),
    };
    timed(start, check_lemma_with_profile(g, &profile, p, "lemma"))
}

/// The lemma at `p = (k+3)/(k+1)`, where the first threshold is
/// `2/(k+3) · sdiam_k`.
pub fn check_corollary(g: &Graph, k: usize, budget: Budget) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let p = Rational::new(k as i64 + 3, k as i64 + 1);
    let profile = match steiner_profile(g, k, budget) {
        Ok(pr) => pr,
        Err(e @ EccentricityError::BudgetExceeded { .. }) => {
            return Ok(VerificationReport::skipped("corollary", &e))
        }
        Err(e) => return Err(e.into()),
    };
    timed(start, check_lemma_with_profile(g, &profile, p, "corollary"))
}

//! Steiner k-eccentricity, k-radius, k-diameter and k-center by exhaustive
//! sweep over k-subsets.
//!
//! Each k-subset is solved once and credited to all of its members, so a
//! full profile costs `C(n, k)` Steiner computations. Subsets are split into
//! tasks by their two smallest elements; tasks run in parallel and are
//! reduced in lexicographic task order, keeping for every vertex the pair
//! (largest value, lexicographically smallest witness). The result does not
//! depend on scheduling.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Distance, Graph, Vertex};
use crate::steiner::{SteinerSolver, TerminalSet};
use crate::Rational;

/// Default cap on estimated Steiner computations per sweep.
pub const DEFAULT_BUDGET: u64 = 500_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "STEINER_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EccentricityError {
    #[error("k = {k} is out of range for a graph with {n} vertices (need 2 <= k <= n)")]
    KOutOfRange { k: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("estimated {estimate} Steiner computations exceed the budget of {budget}")]
    BudgetExceeded { estimate: u64, budget: u64 },
    #[error("invalid {BUDGET_ENV} value {0:?}")]
    InvalidBudget(String),
}

/// Upper bound on the number of Steiner computations a sweep may run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_calls: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::calls(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn calls(max_calls: u64) -> Self {
        Budget {
            max_calls: Some(max_calls),
        }
    }

    pub fn unlimited() -> Self {
        Budget { max_calls: None }
    }

    /// The default budget, or the value of `STEINER_BUDGET` when set.
    pub fn from_env() -> Result<Self, EccentricityError> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .parse()
                .map(Budget::calls)
                .map_err(|_| EccentricityError::InvalidBudget(raw)),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn max_calls(&self) -> Option<u64> {
        self.max_calls
    }

    pub fn check(&self, estimate: u64) -> Result<(), EccentricityError> {
        match self.max_calls {
            Some(budget) if estimate > budget => {
                Err(EccentricityError::BudgetExceeded { estimate, budget })
            }
            _ => Ok(()),
        }
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Steiner computations needed for a full profile.
pub fn profile_cost(n: usize, k: usize) -> u64 {
    binomial(n, k)
}

/// Steiner computations needed for a single `e_k(v)`.
pub fn vertex_cost(n: usize, k: usize) -> u64 {
    binomial(n.saturating_sub(1), k.saturating_sub(1))
}

/// `e_k(v)` with the lexicographically smallest k-set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityReport {
    pub vertex: Vertex,
    pub k: usize,
    pub value: Distance,
    pub witness: TerminalSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusDiameterReport {
    pub k: usize,
    pub srad: Distance,
    pub sdiam: Distance,
    pub center_vertices: Vec<Vertex>,
    pub diametral_set: TerminalSet,
    /// `sdiam / srad`, reduced.
    pub ratio: Rational,
}

/// Every vertex's k-eccentricity from one sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerProfile {
    pub k: usize,
    pub eccentricities: Vec<EccentricityReport>,
}

impl SteinerProfile {
    pub fn value(&self, v: Vertex) -> Distance {
        self.eccentricities[v].value
    }

    pub fn srad(&self) -> Distance {
        self.eccentricities.iter().map(|r| r.value).min().expect("k <= n")
    }

    pub fn sdiam(&self) -> Distance {
        self.eccentricities.iter().map(|r| r.value).max().expect("k <= n")
    }

    pub fn center(&self) -> Vec<Vertex> {
        let srad = self.srad();
        self.eccentricities
            .iter()
            .filter(|r| r.value == srad)
            .map(|r| r.vertex)
            .collect()
    }

    /// Lexicographically smallest k-set of Steiner distance `sdiam`. Every
    /// such set contains a vertex of maximum eccentricity whose own witness
    /// is no larger, so the minimum over those witnesses is the answer.
    pub fn diametral_set(&self) -> TerminalSet {
        let sdiam = self.sdiam();
        self.eccentricities
            .iter()
            .filter(|r| r.value == sdiam)
            .map(|r| &r.witness)
            .min()
            .expect("some vertex attains sdiam")
            .clone()
    }

    pub fn report(&self) -> RadiusDiameterReport {
        let srad = self.srad();
        let sdiam = self.sdiam();
        let ratio = match (srad, sdiam) {
            (Distance::Finite(r), Distance::Finite(d)) if r > 0 => {
                Rational::new(i64::from(d), i64::from(r))
            }
            _ => unreachable!("connected graphs with k >= 2 have positive finite radius"),
        };
        RadiusDiameterReport {
            k: self.k,
            srad,
            sdiam,
            center_vertices: self.center(),
            diametral_set: self.diametral_set(),
            ratio,
        }
    }
}

fn check_input(g: &Graph, k: usize) -> Result<(), EccentricityError> {
    let n = g.vertex_count();
    if k < 2 || k > n {
        return Err(EccentricityError::KOutOfRange { k, n });
    }
    if !g.is_connected() {
        return Err(EccentricityError::Disconnected);
    }
    Ok(())
}

/// Advances `combo` to the next subset of the same size, in lexicographic
/// order, among subsets of `..n` bounded below by its current first entry.
fn next_combination(combo: &mut [Vertex], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Visits every `len`-subset of `lo..n` in lexicographic order.
fn for_each_combination(lo: Vertex, n: usize, len: usize, mut f: impl FnMut(&[Vertex])) {
    if len == 0 {
        f(&[]);
        return;
    }
    if lo + len > n {
        return;
    }
    let mut combo: Vec<Vertex> = (lo..lo + len).collect();
    loop {
        f(&combo);
        if !next_combination(&mut combo, n) {
            break;
        }
    }
}

#[derive(Debug, Clone)]
struct Best {
    value: u32,
    witness: Vec<Vertex>,
}

fn better(value: u32, witness: &[Vertex], current: &Option<Best>) -> bool {
    match current {
        None => true,
        Some(b) => value > b.value || (value == b.value && witness < b.witness.as_slice()),
    }
}

fn merge_into(acc: &mut [Option<Best>], part: Vec<Option<Best>>) {
    for (slot, candidate) in acc.iter_mut().zip(part) {
        if let Some(c) = candidate {
            if better(c.value, &c.witness, slot) {
                *slot = Some(c);
            }
        }
    }
}

/// Computes `e_k(v)` for every vertex in one sweep.
pub fn steiner_profile(g: &Graph, k: usize, budget: Budget) -> Result<SteinerProfile, EccentricityError> {
    check_input(g, k)?;
    let n = g.vertex_count();
    budget.check(profile_cost(n, k))?;

    let prefix_len = k.min(2);
    let mut prefixes = Vec::new();
    for_each_combination(0, n, prefix_len, |p| prefixes.push(p.to_vec()));

    let parts: Vec<Vec<Option<Best>>> = prefixes
        .par_iter()
        .map_init(SteinerSolver::new, |solver, prefix| {
            let mut local: Vec<Option<Best>> = vec![None; n];
            let start = prefix.last().map_or(0, |&x| x + 1);
            let mut set = prefix.clone();
            for_each_combination(start, n, k - prefix_len, |rest| {
                set.truncate(prefix_len);
                set.extend_from_slice(rest);
                let value = solver.cost(g, &set).expect("connected graph");
                for &v in &set {
                    if better(value, &set, &local[v]) {
                        local[v] = Some(Best {
                            value,
                            witness: set.clone(),
                        });
                    }
                }
            });
            local
        })
        .collect();

    let mut acc: Vec<Option<Best>> = vec![None; n];
    for part in parts {
        merge_into(&mut acc, part);
    }
    let eccentricities = acc
        .into_iter()
        .enumerate()
        .map(|(v, best)| {
            let best = best.expect("every vertex lies in some k-subset");
            EccentricityReport {
                vertex: v,
                k,
                value: Distance::Finite(best.value),
                witness: TerminalSet::from_sorted(best.witness),
            }
        })
        .collect();
    Ok(SteinerProfile { k, eccentricities })
}

/// `e_k(v)`: the largest Steiner distance over k-sets containing `v`.
pub fn k_eccentricity(
    g: &Graph,
    v: Vertex,
    k: usize,
    budget: Budget,
) -> Result<EccentricityReport, EccentricityError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(EccentricityError::VertexOutOfRange { vertex: v, n });
    }
    check_input(g, k)?;
    budget.check(vertex_cost(n, k))?;

    let others: Vec<Vertex> = (0..n).filter(|&w| w != v).collect();
    let m = others.len();
    let parts: Vec<Option<Best>> = (0..m)
        .into_par_iter()
        .map_init(SteinerSolver::new, |solver, first| {
            let mut local: Option<Best> = None;
            let mut set = Vec::with_capacity(k);
            for_each_combination(first + 1, m, k - 2, |rest| {
                set.clear();
                set.push(v);
                set.push(others[first]);
                set.extend(rest.iter().map(|&i| others[i]));
                set.sort_unstable();
                let value = solver.cost(g, &set).expect("connected graph");
                if better(value, &set, &local) {
                    local = Some(Best {
                        value,
                        witness: set.clone(),
                    });
                }
            });
            local
        })
        .collect();

    let mut acc = [None];
    for part in parts {
        merge_into(&mut acc, vec![part]);
    }
    let [best] = acc;
    let best = best.expect("k <= n");
    Ok(EccentricityReport {
        vertex: v,
        k,
        value: Distance::Finite(best.value),
        witness: TerminalSet::from_sorted(best.witness),
    })
}

pub fn steiner_radius(g: &Graph, k: usize, budget: Budget) -> Result<RadiusDiameterReport, EccentricityError> {
    Ok(steiner_profile(g, k, budget)?.report())
}

pub fn steiner_diameter(g: &Graph, k: usize, budget: Budget) -> Result<RadiusDiameterReport, EccentricityError> {
    Ok(steiner_profile(g, k, budget)?.report())
}

pub fn steiner_center(g: &Graph, k: usize, budget: Budget) -> Result<Vec<Vertex>, EccentricityError> {
    Ok(steiner_profile(g, k, budget)?.center())
}

pub fn diametral_set(g: &Graph, k: usize, budget: Budget) -> Result<TerminalSet, EccentricityError> {
    Ok(steiner_profile(g, k, budget)?.diametral_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steiner::steiner_distance_bruteforce;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges, None).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n, &edges)
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        graph(leaves + 1, &edges)
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        graph(n, &edges)
    }

    /// Oracle: e_k for every vertex via the brute-force Steiner distance
    /// over every k-subset, written without the sweep machinery.
    fn brute_eccentricities(g: &Graph, k: usize) -> Vec<u32> {
        let n = g.vertex_count();
        let mut ecc = vec![0u32; n];
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
            let d = steiner_distance_bruteforce(g, &TerminalSet::new(s.clone()).unwrap())
                .unwrap()
                .finite()
                .unwrap();
            for v in s {
                ecc[v] = ecc[v].max(d);
            }
        }
        ecc
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(1, 5, 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        let mut count = 0;
        for_each_combination(0, 7, 0, |_| count += 1);
        assert_eq!(count, 1);
        for_each_combination(3, 4, 2, |_| count += 1);
        assert_eq!(count, 1);
        assert_eq!(binomial(70, 4), 916_895);
        assert_eq!(binomial(5, 7), 0);
    }

    #[test]
    fn star_k1_4_with_k3() {
        let g = star(4);
        let ecc = brute_eccentricities(&g, 3);
        // Centre: itself plus two leaves spans 2 edges; three leaves span 3.
        assert_eq!(ecc, vec![2, 3, 3, 3, 3]);
        let report = steiner_radius(&g, 3, Budget::default()).unwrap();
        assert_eq!(report.srad, Distance::Finite(2));
        assert_eq!(report.sdiam, Distance::Finite(3));
        assert_eq!(report.center_vertices, vec![0]);
        assert_eq!(report.diametral_set.as_slice(), &[1, 2, 3]);
        assert_eq!(report.ratio, Rational::new(3, 2));
    }

    #[test]
    fn path_with_k2_is_classical() {
        for n in 2..9 {
            let r = steiner_radius(&path(n), 2, Budget::default()).unwrap();
            assert_eq!(r.srad, Distance::Finite(((n - 1) as u32).div_ceil(2)));
            assert_eq!(r.sdiam, Distance::Finite(n as u32 - 1));
        }
        assert_eq!(
            diametral_set(&path(3), 2, Budget::default()).unwrap().as_slice(),
            &[0, 2]
        );
    }

    #[test]
    fn clique_diametral_set_is_first_k() {
        let d = diametral_set(&complete(5), 3, Budget::default()).unwrap();
        assert_eq!(d.as_slice(), &[0, 1, 2]);
        let r = steiner_diameter(&complete(5), 3, Budget::default()).unwrap();
        assert_eq!((r.srad, r.sdiam), (Distance::Finite(2), Distance::Finite(2)));
    }

    #[test]
    fn single_vertex_matches_profile_and_oracle() {
        let g = graph(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3), (2, 5)],
        );
        for k in 2..=7 {
            let oracle = brute_eccentricities(&g, k);
            let profile = steiner_profile(&g, k, Budget::default()).unwrap();
            for v in 0..7 {
                let single = k_eccentricity(&g, v, k, Budget::default()).unwrap();
                assert_eq!(single.value, Distance::Finite(oracle[v]));
                assert_eq!(single, profile.eccentricities[v]);
                assert!(single.witness.contains(v));
                assert_eq!(single.witness.len(), k);
            }
        }
    }

    #[test]
    fn errors() {
        let g = path(4);
        assert_eq!(
            steiner_profile(&g, 1, Budget::default()),
            Err(EccentricityError::KOutOfRange { k: 1, n: 4 })
        );
        assert_eq!(
            steiner_profile(&g, 5, Budget::default()),
            Err(EccentricityError::KOutOfRange { k: 5, n: 4 })
        );
        assert_eq!(
            steiner_profile(&Graph::empty(3), 2, Budget::default()),
            Err(EccentricityError::Disconnected)
        );
        assert_eq!(
            k_eccentricity(&g, 9, 2, Budget::default()),
            Err(EccentricityError::VertexOutOfRange { vertex: 9, n: 4 })
        );
        assert_eq!(
            steiner_profile(&path(10), 5, Budget::calls(100)),
            Err(EccentricityError::BudgetExceeded {
                estimate: 252,
                budget: 100
            })
        );
        assert!(steiner_profile(&path(10), 5, Budget::unlimited()).is_ok());
    }

    #[test]
    fn monotone_in_k() {
        let g = graph(8, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (6, 7), (7, 2)]);
        let profiles: Vec<_> = (2..=8)
            .map(|k| steiner_profile(&g, k, Budget::default()).unwrap())
            .collect();
        for pair in profiles.windows(2) {
            for v in 0..8 {
                assert!(pair[0].value(v) <= pair[1].value(v));
            }
            let r = pair[0].report();
            assert!(r.srad <= r.sdiam);
        }
    }
}

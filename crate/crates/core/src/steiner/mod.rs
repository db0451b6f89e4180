//! Exact Steiner distance `d(S)`: the fewest edges of a connected subgraph
//! containing every vertex of `S`, with witness trees.

mod dp;

pub use dp::SteinerSolver;

use std::fmt;

use thiserror::Error;

use crate::graph::{Distance, Graph, Vertex};
use crate::tree::Tree;

/// Largest graph accepted by [`steiner_distance_bruteforce`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 16;

/// Largest terminal set accepted by the subset DP.
pub const MAX_TERMINALS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinerError {
    #[error("terminal set is empty")]
    EmptyTerminalSet,
    #[error("terminal {vertex} out of range for graph with {n} vertices")]
    TerminalOutOfRange { vertex: Vertex, n: usize },
    #[error("{0} terminals exceed the supported maximum of {MAX_TERMINALS}")]
    TooManyTerminals(usize),
    #[error("brute force is capped at {cap} vertices, graph has {n}")]
    TooLargeForBruteForce { n: usize, cap: usize },
    #[error("terminals lie in different components")]
    Unreachable,
    #[error("enumeration limit must be at least 1")]
    ZeroLimit,
}

/// A nonempty set of distinct vertices, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TerminalSet(Vec<Vertex>);

impl TerminalSet {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self, SteinerError> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(SteinerError::EmptyTerminalSet);
        }
        Ok(TerminalSet(v))
    }

    /// Wraps a slice already known to be sorted, distinct and nonempty.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        TerminalSet(v)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &TerminalSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Checks every member against the vertex count of `g`.
    pub fn check(&self, g: &Graph) -> Result<(), SteinerError> {
        let n = g.vertex_count();
        match self.0.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(SteinerError::TerminalOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for TerminalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `d(S)` with one minimum Steiner tree. The tree is empty when the
/// terminals are unreachable from one another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerResult {
    pub cost: Distance,
    pub tree: Tree,
}

fn check_terminals(g: &Graph, s: &TerminalSet) -> Result<(), SteinerError> {
    s.check(g)?;
    if s.len() > MAX_TERMINALS {
        return Err(SteinerError::TooManyTerminals(s.len()));
    }
    Ok(())
}

fn build_tree(s: &TerminalSet, edges: Vec<(Vertex, Vertex)>) -> Tree {
    let isolated = edges.is_empty().then(|| s.as_slice()[0]);
    Tree::from_edges(edges, isolated).expect("optimal edge sets are trees")
}

/// Exact Steiner distance with a deterministic witness tree.
pub fn steiner_distance(g: &Graph, s: &TerminalSet) -> Result<SteinerResult, SteinerError> {
    check_terminals(g, s)?;
    let mut solver = SteinerSolver::new();
    Ok(match solver.solve_with_tree(g, s.as_slice()) {
        Some((cost, edges)) => SteinerResult {
            cost: Distance::Finite(cost),
            tree: build_tree(s, edges),
        },
        None => SteinerResult {
            cost: Distance::Unreachable,
            tree: Tree::empty(),
        },
    })
}

/// Steiner distance without building a witness.
pub fn steiner_cost(g: &Graph, s: &TerminalSet) -> Result<Distance, SteinerError> {
    check_terminals(g, s)?;
    Ok(SteinerSolver::new()
        .cost(g, s.as_slice())
        .map_or(Distance::Unreachable, Distance::Finite))
}

/// Independent oracle: the smallest connected vertex set `W ⊇ S`, by
/// enumerating every superset of `S`. A minimum Steiner tree spans exactly
/// such a set, so `d(S) = |W| - 1`.
pub fn steiner_distance_bruteforce(g: &Graph, s: &TerminalSet) -> Result<Distance, SteinerError> {
    s.check(g)?;
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(SteinerError::TooLargeForBruteForce {
            n,
            cap: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let adjacency: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let required = s.iter().fold(0u32, |m, v| m | (1 << v));
    let free = ((1u32 << n) - 1) & !required;

    let connected = |set: u32| -> bool {
        let start = set & set.wrapping_neg();
        let mut reached = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adjacency[v];
            }
            next &= set & !reached;
            reached |= next;
            frontier = next;
        }
        reached == set
    };

    let mut best: Option<u32> = None;
    let mut extra = 0u32;
    loop {
        let set = required | extra;
        let size = set.count_ones();
        if best.is_none_or(|b| size < b) && connected(set) {
            best = Some(size);
        }
        if extra == free {
            break;
        }
        extra = (extra.wrapping_sub(free)) & free;
    }
    Ok(best.map_or(Distance::Unreachable, |size| Distance::Finite(size - 1)))
}

/// Up to `limit` distinct minimum Steiner trees in lexicographic order of
/// their sorted edge lists. The list is complete whenever the number of
/// minimum trees does not exceed `limit`.
pub fn enumerate_min_steiner_trees(
    g: &Graph,
    s: &TerminalSet,
    limit: usize,
) -> Result<Vec<SteinerResult>, SteinerError> {
    check_terminals(g, s)?;
    if limit == 0 {
        return Err(SteinerError::ZeroLimit);
    }
    let (cost, trees) = SteinerSolver::new()
        .enumerate(g, s.as_slice(), limit)
        .ok_or(SteinerError::Unreachable)?;
    Ok(trees
        .into_iter()
        .map(|edges| SteinerResult {
            cost: Distance::Finite(cost),
            tree: build_tree(s, edges),
        })
        .collect())
}

//! Generators: the tightness family `G_k`, the counterexample graph `H`,
//! and seeded random ensembles.

use std::collections::{BTreeMap, BinaryHeap};
use std::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("G_k is defined for k >= 5, got k = {0}")]
    KTooSmall(usize),
    #[error("invalid ensemble: {0}")]
    InvalidConfig(String),
    #[error("no connected sample after {0} attempts")]
    RejectionsExhausted(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    Gk { k: usize, m: usize },
    H,
}

/// A generated graph plus its named construction vertices. Role names are
/// also attached to the graph as vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyHandle {
    pub graph: Graph,
    pub roles: BTreeMap<String, Vertex>,
    pub params: FamilyParams,
}

impl FamilyHandle {
    /// Vertex for a role name.
    ///
    /// # Panics
    /// If the role does not exist in this family.
    pub fn role(&self, name: &str) -> Vertex {
        *self
            .roles
            .get(name)
            .unwrap_or_else(|| panic!("no role {name:?} in this family"))
    }

    pub fn roles_of(&self, names: &[&str]) -> Vec<Vertex> {
        names.iter().map(|n| self.role(n)).collect()
    }

    fn from_roles(graph: Graph, roles: BTreeMap<String, Vertex>, params: FamilyParams) -> Self {
        let graph = graph
            .with_labels(roles.iter().map(|(name, &v)| (v, name.as_str())))
            .expect("role names are distinct");
        FamilyHandle { graph, roles, params }
    }
}

/// `m = ⌈(k+1)/2⌉`, the size of each half `D_1`, `D_2` in `G_k` (they share
/// `d_m`).
pub fn gk_half(k: usize) -> usize {
    (k + 2) / 2
}

/// The graph `G_k`, `k >= 5`: independent vertices `d_1..d_k`; for each
/// `d_i` in `D_1 = {d_1..d_m}` a vertex `a_i` adjacent to `D_1 \ {d_i}`; for
/// each `d_j` in `D_2 = {d_m..d_k}` a vertex `b_j` adjacent to
/// `D_2 \ {d_j}`; and a vertex `r` adjacent to every `a_i` and `b_j`.
///
/// Vertex order: `d_1..d_k`, `a_1..a_m`, `b_m..b_k`, `r`.
pub fn build_gk(k: usize) -> Result<FamilyHandle, FamilyError> {
    if k < 5 {
        return Err(FamilyError::KTooSmall(k));
    }
    let m = gk_half(k);
    let d = |i: usize| i - 1;
    let a = |i: usize| k + i - 1;
    let b = |j: usize| k + m + (j - m);
    let r = k + m + (k - m + 1);
    let n = r + 1;

    let mut edges = Vec::new();
    for i in 1..=m {
        edges.extend((1..=m).filter(|&x| x != i).map(|x| (a(i), d(x))));
        edges.push((a(i), r));
    }
    for j in m..=k {
        edges.extend((m..=k).filter(|&x| x != j).map(|x| (b(j), d(x))));
        edges.push((b(j), r));
    }
    let graph = Graph::from_edge_list(n, &edges, None).expect("construction is simple");

    let mut roles = BTreeMap::new();
    for i in 1..=k {
        roles.insert(format!("d{i}"), d(i));
    }
    for i in 1..=m {
        roles.insert(format!("a{i}"), a(i));
    }
    for j in m..=k {
        roles.insert(format!("b{j}"), b(j));
    }
    roles.insert("r".to_string(), r);
    Ok(FamilyHandle::from_roles(graph, roles, FamilyParams::Gk { k, m }))
}

/// Number of interior vertices placed on each `u_i v_j` edge of `H`.
pub const H_UV_SUBDIVISIONS: usize = 5;

/// The graph `H`: `K_{4,4}` on `U = {u_1..u_4}`, `V = {v_1..v_4}` minus the
/// matching `u_i v_{5-i}`, plus `v_0` joined to all of `U`; the edge
/// `v_0 u_4` is subdivided once and each remaining `u v` edge five times.
///
/// Vertex order: `v0`, `u1..u4`, `v1..v4`, then subdivision vertices.
pub fn build_h() -> FamilyHandle {
    let v0 = 0;
    let u = |i: usize| i;
    let v = |j: usize| 4 + j;
    let mut edges: Vec<(Vertex, Vertex)> = (1..=4).map(|i| (v0, u(i))).collect();
    let mut uv_edges = Vec::new();
    for i in 1..=4 {
        for j in (1..=4).filter(|&j| i + j != 5) {
            uv_edges.push((u(i), v(j)));
        }
    }
    edges.extend(&uv_edges);
    let mut graph = Graph::from_edge_list(9, &edges, None).expect("construction is simple");
    graph = graph.subdivide_edge(v0, u(4), 1).expect("v0u4 is an edge");
    for (a, b) in uv_edges {
        graph = graph
            .subdivide_edge(a, b, H_UV_SUBDIVISIONS)
            .expect("uv edges survive earlier subdivisions");
    }

    let mut roles = BTreeMap::new();
    roles.insert("v0".to_string(), v0);
    for i in 1..=4 {
        roles.insert(format!("u{i}"), u(i));
        roles.insert(format!("v{i}"), v(i));
    }
    FamilyHandle::from_roles(graph, roles, FamilyParams::H)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ensemble {
    /// `G(n, p)` conditioned on connectivity by rejection.
    RandomConnectedGnp {
        n: usize,
        p: Rational,
        max_rejections: u32,
    },
    /// Uniform labelled tree, decoded from a random Prüfer sequence.
    RandomTree { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnsembleConfig {
    pub kind: Ensemble,
    pub seed: u64,
}

impl EnsembleConfig {
    pub fn gnp(n: usize, p: Rational, seed: u64) -> Self {
        EnsembleConfig {
            kind: Ensemble::RandomConnectedGnp {
                n,
                p,
                max_rejections: 10_000,
            },
            seed,
        }
    }

    pub fn tree(n: usize, seed: u64) -> Self {
        EnsembleConfig {
            kind: Ensemble::RandomTree { n },
            seed,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        EnsembleConfig {
            kind: self.kind.clone(),
            seed,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            Ensemble::RandomConnectedGnp { n, .. } | Ensemble::RandomTree { n } => n,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(FamilyError::InvalidConfig(format!("n = {n} must be at least 2")));
        }
        if let Ensemble::RandomConnectedGnp { p, max_rejections, .. } = self.kind {
            if p <= Rational::from_integer(0) || p >= Rational::from_integer(1) {
                return Err(FamilyError::InvalidConfig(format!("p = {p} must lie in (0, 1)")));
            }
            if max_rejections == 0 {
                return Err(FamilyError::InvalidConfig("max_rejections must be positive".into()));
            }
        }
        Ok(())
    }
}

pub fn random_graph(cfg: &EnsembleConfig) -> Result<Graph, FamilyError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match cfg.kind {
        Ensemble::RandomConnectedGnp { n, p, max_rejections } => {
            let (num, den) = (*p.numer() as u64, *p.denom() as u64);
            for _ in 0..max_rejections {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_range(0..den) < num {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edge_list(n, &edges, None).expect("sampled edges are simple");
                if g.is_connected() {
                    return Ok(g);
                }
            }
            Err(FamilyError::RejectionsExhausted(max_rejections))
        }
        Ensemble::RandomTree { n } => {
            let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Ok(prufer_decode(n, &code))
        }
    }
}

/// Decodes a Prüfer sequence of length `n - 2` into its labelled tree.
pub fn prufer_decode(n: usize, code: &[Vertex]) -> Graph {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let Reverse(leaf) = leaves.pop().expect("a tree code always leaves a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::from_edge_list(n, &edges, None).expect("decoded edges are simple")
}

//! Simple undirected graphs on dense vertex indices, with BFS distance
//! queries and the subdivision constructor used to model long edges.

mod io;

pub use io::{parse_graph, write_graph, ParseError};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Vertex index into a [`Graph`].
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: Vertex, v: Vertex },
    #[error("subdivision count must be at least 1")]
    ZeroSubdivision,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("vertex {0} labelled twice")]
    RelabelledVertex(Vertex),
    #[error("invalid label {0:?}: labels must be non-empty without surrounding whitespace or newlines")]
    InvalidLabel(String),
}

/// A shortest-path length, or `Unreachable` when the endpoints lie in
/// different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

impl From<u32> for Distance {
    fn from(d: u32) -> Self {
        Distance::Finite(d)
    }
}

/// Immutable simple undirected graph.
///
/// Adjacency lists are sorted and symmetric. Labels are an optional
/// presentation layer mapping strings to vertex indices; every algorithm
/// works on indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: BTreeMap<Vertex, String>,
    by_label: HashMap<String, Vertex>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are merged.
    pub fn from_edge_list(
        n: usize,
        edges: &[(Vertex, Vertex)],
        labels: Option<&[(Vertex, &str)]>,
    ) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        let mut graph = Graph {
            adjacency,
            edge_count: edge_count / 2,
            labels: BTreeMap::new(),
            by_label: HashMap::new(),
        };
        if let Some(labels) = labels {
            for &(v, name) in labels {
                graph.set_label(v, name)?;
            }
        }
        Ok(graph)
    }

    /// Empty graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
            labels: BTreeMap::new(),
            by_label: HashMap::new(),
        }
    }

    pub(crate) fn set_label(&mut self, v: Vertex, name: &str) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(GraphError::OutOfRange { vertex: v, n });
        }
        if name.is_empty() || name.trim() != name || name.contains(['\n', '\r']) {
            return Err(GraphError::InvalidLabel(name.to_string()));
        }
        if self.by_label.contains_key(name) {
            return Err(GraphError::DuplicateLabel(name.to_string()));
        }
        if self.labels.contains_key(&v) {
            return Err(GraphError::RelabelledVertex(v));
        }
        self.labels.insert(v, name.to_string());
        self.by_label.insert(name.to_string(), v);
        Ok(())
    }

    /// Returns a copy of this graph with the given labels attached.
    pub fn with_labels<'a>(
        mut self,
        labels: impl IntoIterator<Item = (Vertex, &'a str)>,
    ) -> Result<Self, GraphError> {
        for (v, name) in labels {
            self.set_label(v, name)?;
        }
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<Vertex> {
        self.by_label.get(name).copied()
    }

    pub fn labels(&self) -> impl Iterator<Item = (Vertex, &str)> + '_ {
        self.labels.iter().map(|(&v, s)| (v, s.as_str()))
    }

    /// Resolves a vertex token: a label if one matches, otherwise a
    /// decimal index.
    pub fn resolve(&self, token: &str) -> Option<Vertex> {
        self.vertex_by_label(token).or_else(|| {
            token
                .parse::<Vertex>()
                .ok()
                .filter(|&v| v < self.vertex_count())
        })
    }

    /// Display name of a vertex: its label, or its index.
    pub fn display_name(&self, v: Vertex) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_string)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// Single-source BFS distances.
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<Distance>, GraphError> {
        self.check_vertex(source)?;
        Ok(self
            .bfs_raw(source)
            .into_iter()
            .map(|d| {
                if d == u32::MAX {
                    Distance::Unreachable
                } else {
                    Distance::Finite(d)
                }
            })
            .collect())
    }

    /// BFS with `u32::MAX` marking unreachable vertices.
    pub(crate) fn bfs_raw(&self, source: Vertex) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance, GraphError> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)?[v])
    }

    pub fn eccentricity(&self, v: Vertex) -> Result<Distance, GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self
            .bfs_distances(v)?
            .into_iter()
            .max()
            .expect("nonempty graph"))
    }

    fn eccentricities(&self) -> Result<Vec<Distance>, GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        (0..self.vertex_count()).map(|v| self.eccentricity(v)).collect()
    }

    /// Classical radius; `Unreachable` for disconnected graphs.
    pub fn radius(&self) -> Result<Distance, GraphError> {
        let ecc = self.eccentricities()?;
        if ecc.iter().any(|d| !d.is_finite()) {
            return Ok(Distance::Unreachable);
        }
        Ok(ecc.into_iter().min().expect("nonempty graph"))
    }

    pub fn diameter(&self) -> Result<Distance, GraphError> {
        Ok(self.eccentricities()?.into_iter().max().expect("nonempty graph"))
    }

    /// Vertices of minimum eccentricity. For a disconnected graph every
    /// eccentricity is unreachable, so every vertex is returned.
    pub fn center(&self) -> Result<Vec<Vertex>, GraphError> {
        let ecc = self.eccentricities()?;
        let rad = *ecc.iter().min().expect("nonempty graph");
        Ok((0..ecc.len()).filter(|&v| ecc[v] == rad).collect())
    }

    pub fn is_connected(&self) -> bool {
        match self.vertex_count() {
            0 => true,
            _ => self.bfs_raw(0).iter().all(|&d| d != u32::MAX),
        }
    }

    /// A connected graph whose edge count is one less than its order.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.edge_count + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Replaces the edge `uv` by a path `u - w_1 - ... - w_t - v`. The new
    /// vertices are appended after the existing ones, in order from `u`.
    pub fn subdivide_edge(&self, u: Vertex, v: Vertex, t: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        if t == 0 {
            return Err(GraphError::ZeroSubdivision);
        }
        let n = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.resize(n + t, Vec::new());
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        let mut prev = u;
        for w in (n..n + t).chain(std::iter::once(v)) {
            adjacency[prev].push(w);
            adjacency[w].push(prev);
            prev = w;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edge_count: self.edge_count + t,
            labels: self.labels.clone(),
            by_label: self.by_label.clone(),
        })
    }

    /// Induced subgraph on `vertices`. Returns the subgraph and the map
    /// from new indices to original indices; labels carry over.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut keep: Vec<Vertex> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let edges: Vec<(Vertex, Vertex)> = self
            .edges()
            .filter(|&(a, b)| position[a] != usize::MAX && position[b] != usize::MAX)
            .map(|(a, b)| (position[a], position[b]))
            .collect();
        let mut sub = Graph::from_edge_list(keep.len(), &edges, None)?;
        for (i, &v) in keep.iter().enumerate() {
            if let Some(name) = self.label(v) {
                sub.set_label(i, name)?;
            }
        }
        Ok((sub, keep))
    }
}

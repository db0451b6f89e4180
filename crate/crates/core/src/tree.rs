//! Trees embedded in a host graph, stored as sorted vertex and edge lists.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("edge {0}-{1} has an endpoint outside the vertex set")]
    DanglingEdge(Vertex, Vertex),
    #[error("{edges} edges on {vertices} vertices cannot form a tree")]
    WrongEdgeCount { vertices: usize, edges: usize },
    #[error("edges do not connect all vertices")]
    Disconnected,
    #[error("vertex {0} is not in the tree")]
    MissingVertex(Vertex),
}

/// An undirected tree. Edges are normalized to `(u, v)` with `u < v` and
/// kept sorted, so two trees with the same edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tree {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Tree {
    pub fn empty() -> Self {
        Tree::default()
    }

    pub fn singleton(v: Vertex) -> Self {
        Tree {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a tree from an edge set, checking that it is connected and
    /// acyclic. An empty edge set needs `isolated` to name the single vertex.
    pub fn from_edges(
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
        isolated: Option<Vertex>,
    ) -> Result<Self, TreeError> {
        let mut edges: Vec<(Vertex, Vertex)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.extend(isolated);
        vertices.sort_unstable();
        vertices.dedup();
        let tree = Tree { vertices, edges };
        tree.validate()?;
        Ok(tree)
    }

    fn validate(&self) -> Result<(), TreeError> {
        if self.vertices.is_empty() {
            return if self.edges.is_empty() {
                Ok(())
            } else {
                Err(TreeError::Disconnected)
            };
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return Err(TreeError::WrongEdgeCount {
                vertices: self.vertices.len(),
                edges: self.edges.len(),
            });
        }
        for &(u, v) in &self.edges {
            if !self.contains(u) || !self.contains(v) {
                return Err(TreeError::DanglingEdge(u, v));
            }
        }
        let reached = self.bfs_positions(0).iter().filter(|d| d.is_some()).count();
        if reached != self.vertices.len() {
            return Err(TreeError::Disconnected);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(u, v) in &self.edges {
            deg[self.position(u).expect("validated")] += 1;
            deg[self.position(v).expect("validated")] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Vertices of degree at most one. A single-vertex tree is its own leaf.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.degrees()
            .into_iter()
            .zip(&self.vertices)
            .filter(|&(d, _)| d <= 1)
            .map(|(_, &v)| v)
            .collect()
    }

    fn adjacency_positions(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            let (pu, pv) = (
                self.position(u).expect("validated"),
                self.position(v).expect("validated"),
            );
            adj[pu].push(pv);
            adj[pv].push(pu);
        }
        adj
    }

    fn bfs_positions(&self, start: usize) -> Vec<Option<(u32, usize)>> {
        let adj = self.adjacency_positions();
        let mut seen: Vec<Option<(u32, usize)>> = vec![None; self.vertices.len()];
        seen[start] = Some((0, start));
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            let d = seen[p].expect("queued vertices are seen").0;
            for &q in &adj[p] {
                if seen[q].is_none() {
                    seen[q] = Some((d + 1, p));
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    /// Distances inside the tree from `v` to every tree vertex, aligned
    /// with [`Tree::vertices`].
    pub fn distances_from(&self, v: Vertex) -> Result<Vec<u32>, TreeError> {
        let start = self.position(v).ok_or(TreeError::MissingVertex(v))?;
        Ok(self
            .bfs_positions(start)
            .into_iter()
            .map(|d| d.expect("tree is connected").0)
            .collect())
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<u32, TreeError> {
        let target = self.position(v).ok_or(TreeError::MissingVertex(v))?;
        Ok(self.distances_from(u)?[target])
    }

    /// The unique path from `u` to `v`, both endpoints included.
    pub fn path(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>, TreeError> {
        let start = self.position(u).ok_or(TreeError::MissingVertex(u))?;
        let target = self.position(v).ok_or(TreeError::MissingVertex(v))?;
        let seen = self.bfs_positions(start);
        let mut path = vec![self.vertices[target]];
        let mut p = target;
        while p != start {
            p = seen[p].expect("tree is connected").1;
            path.push(self.vertices[p]);
        }
        path.reverse();
        Ok(path)
    }

    /// Distance from `v` to the nearest vertex of `other`, measured in this
    /// tree. `None` when `other` shares no vertex with this tree.
    pub fn distance_to_subtree(&self, v: Vertex, other: &Tree) -> Result<Option<u32>, TreeError> {
        let dist = self.distances_from(v)?;
        Ok(self
            .vertices
            .iter()
            .zip(dist)
            .filter(|(w, _)| other.contains(**w))
            .map(|(_, d)| d)
            .min())
    }

    /// Removes the given vertices and every edge touching them.
    pub(crate) fn without_vertices(&self, drop: &[Vertex]) -> Result<Tree, TreeError> {
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|(u, v)| !drop.contains(u) && !drop.contains(v))
            .collect();
        let rest: Vec<Vertex> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !drop.contains(v))
            .collect();
        match rest.as_slice() {
            [] => Ok(Tree::empty()),
            [only] => Tree::from_edges(edges, Some(*only)),
            _ => Tree::from_edges(edges, None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Tree {
        Tree::from_edges([(0, 1), (0, 2), (3, 0)], None).unwrap()
    }

    #[test]
    fn validates_shape() {
        assert_eq!(
            Tree::from_edges([(0, 1), (1, 2), (2, 0)], None),
            Err(TreeError::WrongEdgeCount { vertices: 3, edges: 3 })
        );
        assert_eq!(
            Tree::from_edges([(0, 1)], Some(5)),
            Err(TreeError::WrongEdgeCount { vertices: 3, edges: 1 })
        );
        assert_eq!(Tree::from_edges([], Some(4)).unwrap(), Tree::singleton(4));
        assert_eq!(Tree::from_edges([], None).unwrap(), Tree::empty());
    }

    #[test]
    fn star_queries() {
        let t = star();
        assert_eq!(t.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(t.leaves(), vec![1, 2, 3]);
        assert_eq!(t.max_degree(), 3);
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.distance(1, 3).unwrap(), 2);
        assert_eq!(t.path(1, 3).unwrap(), vec![1, 0, 3]);
        assert_eq!(t.neighbors(0), vec![1, 2, 3]);
        assert_eq!(t.distance(1, 9), Err(TreeError::MissingVertex(9)));
        let rest = t.without_vertices(&[3]).unwrap();
        assert_eq!(rest.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(
            t.distance_to_subtree(3, &Tree::singleton(2)).unwrap(),
            Some(2)
        );
    }

    #[test]
    fn singleton_is_a_leaf() {
        assert_eq!(Tree::singleton(7).leaves(), vec![7]);
        assert_eq!(Tree::singleton(7).max_degree(), 0);
    }
}

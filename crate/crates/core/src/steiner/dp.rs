//! Subset dynamic program over terminal subsets.
//!
//! One terminal is the root; the remaining `r = q - 1` terminals index the
//! bits of a mask. `table[mask][v]` is the size of a smallest tree
//! containing the masked terminals and `v`. Rows are filled in increasing
//! mask order: first the best split of the mask at `v`, then a unit-weight
//! Dijkstra pass that lets every vertex inherit a neighbour's tree plus one
//! edge. The answer is `table[full][root]`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::graph::{Graph, Vertex};

pub(crate) const INF: u32 = u32::MAX / 4;

type EdgeList = Vec<(Vertex, Vertex)>;

/// Reusable scratch space for repeated Steiner queries on one thread.
#[derive(Debug, Default)]
pub struct SteinerSolver {
    table: Vec<u32>,
    order: Vec<(u32, Vertex)>,
    queue: VecDeque<(u32, Vertex)>,
    n: usize,
    terminals: Vec<Vertex>,
}

/// Proper submasks of `mask` that contain its lowest bit, in increasing
/// order. Each unordered split appears exactly once.
fn splits(mask: usize) -> impl Iterator<Item = usize> {
    let low = mask & mask.wrapping_neg();
    let rest = mask ^ low;
    let mut next = Some(0usize);
    std::iter::from_fn(move || {
        let s = next?;
        if s == rest {
            return None;
        }
        next = Some(((s | !rest).wrapping_add(1)) & rest);
        Some(low | s)
    })
}

impl SteinerSolver {
    pub fn new() -> Self {
        Self::default()
    }

    fn at(&self, mask: usize, v: Vertex) -> u32 {
        self.table[mask * self.n + v]
    }

    /// Fills the table for sorted, distinct, in-range terminals (at least
    /// two of them).
    fn fill(&mut self, g: &Graph, terminals: &[Vertex]) {
        let n = g.vertex_count();
        let r = terminals.len() - 1;
        let masks = 1usize << r;
        self.n = n;
        self.terminals.clear();
        self.terminals.extend_from_slice(terminals);
        self.table.clear();
        self.table.resize(masks * n, INF);

        for mask in 1..masks {
            let (done, current) = self.table.split_at_mut(mask * n);
            let row = &mut current[..n];
            if mask.is_power_of_two() {
                let bit = mask.trailing_zeros() as usize;
                row[terminals[bit + 1]] = 0;
            } else {
                for a in splits(mask) {
                    let b = mask ^ a;
                    let ra = &done[a * n..(a + 1) * n];
                    let rb = &done[b * n..(b + 1) * n];
                    for ((slot, &x), &y) in row.iter_mut().zip(ra).zip(rb) {
                        let s = x + y;
                        if s < *slot {
                            *slot = s;
                        }
                    }
                }
            }
            relax(g, row, &mut self.order, &mut self.queue);
        }
    }

    /// Steiner distance only, or `None` when the terminals are not all in
    /// one component. `terminals` must be sorted, distinct and in range.
    pub fn cost(&mut self, g: &Graph, terminals: &[Vertex]) -> Option<u32> {
        if terminals.len() <= 1 {
            return Some(0);
        }
        self.fill(g, terminals);
        let full = (1usize << (terminals.len() - 1)) - 1;
        let c = self.at(full, terminals[0]);
        (c < INF).then_some(c)
    }

    /// Solves and returns the cost together with one optimal edge set,
    /// chosen deterministically: at each state the first split (in
    /// increasing submask order) attaining the optimum wins, and otherwise
    /// the smallest-index neighbour does.
    pub(crate) fn solve_with_tree(&mut self, g: &Graph, terminals: &[Vertex]) -> Option<(u32, EdgeList)> {
        if terminals.len() <= 1 {
            return Some((0, Vec::new()));
        }
        self.fill(g, terminals);
        let full = (1usize << (terminals.len() - 1)) - 1;
        let root = terminals[0];
        let cost = self.at(full, root);
        if cost >= INF {
            return None;
        }
        let mut edges = Vec::with_capacity(cost as usize);
        let mut stack = vec![(full, root)];
        while let Some((mask, v)) = stack.pop() {
            let value = self.at(mask, v);
            if value == 0 {
                continue;
            }
            if !mask.is_power_of_two() {
                if let Some(a) =
                    splits(mask).find(|&a| self.at(a, v) + self.at(mask ^ a, v) == value)
                {
                    stack.push((mask ^ a, v));
                    stack.push((a, v));
                    continue;
                }
            }
            let u = *g
                .neighbors(v)
                .iter()
                .find(|&&u| self.at(mask, u) + 1 == value)
                .expect("optimal value has a predecessor");
            edges.push((v.min(u), v.max(u)));
            stack.push((mask, u));
        }
        edges.sort_unstable();
        debug_assert_eq!(edges.len(), cost as usize);
        Some((cost, edges))
    }

    /// All optimal edge sets, up to `limit`, sorted. Exhaustive whenever the
    /// true number of minimum trees is at most `limit`.
    pub(crate) fn enumerate(
        &mut self,
        g: &Graph,
        terminals: &[Vertex],
        limit: usize,
    ) -> Option<(u32, Vec<EdgeList>)> {
        if terminals.len() <= 1 {
            return Some((0, vec![Vec::new()]));
        }
        self.fill(g, terminals);
        let full = (1usize << (terminals.len() - 1)) - 1;
        let root = terminals[0];
        let cost = self.at(full, root);
        if cost >= INF {
            return None;
        }
        let mut memo = HashMap::new();
        let trees = self.enumerate_state(g, full, root, limit, &mut memo);
        Some((cost, trees))
    }

    // A subtree found at a reachable state extends to a distinct optimal
    // tree at the root, so truncating each state to `limit` trees never
    // hides trees when the root count is within `limit`.
    fn enumerate_state(
        &self,
        g: &Graph,
        mask: usize,
        v: Vertex,
        limit: usize,
        memo: &mut HashMap<(usize, Vertex), Vec<EdgeList>>,
    ) -> Vec<EdgeList> {
        if let Some(hit) = memo.get(&(mask, v)) {
            return hit.clone();
        }
        let value = self.at(mask, v);
        let mut found: BTreeSet<EdgeList> = BTreeSet::new();
        if value == 0 {
            found.insert(Vec::new());
        } else {
            if !mask.is_power_of_two() {
                for a in splits(mask) {
                    let b = mask ^ a;
                    if self.at(a, v) + self.at(b, v) != value {
                        continue;
                    }
                    let left = self.enumerate_state(g, a, v, limit, memo);
                    let right = self.enumerate_state(g, b, v, limit, memo);
                    for x in &left {
                        for y in &right {
                            let mut merged: EdgeList = x.iter().chain(y).copied().collect();
                            merged.sort_unstable();
                            found.insert(merged);
                        }
                    }
                }
            }
            for &u in g.neighbors(v) {
                if self.at(mask, u) + 1 != value {
                    continue;
                }
                for t in self.enumerate_state(g, mask, u, limit, memo) {
                    let mut extended = t;
                    extended.push((v.min(u), v.max(u)));
                    extended.sort_unstable();
                    found.insert(extended);
                }
            }
        }
        let result: Vec<EdgeList> = found.into_iter().take(limit).collect();
        memo.insert((mask, v), result.clone());
        result
    }

    #[cfg(test)]
    pub(crate) fn debug_row(&self, mask: usize) -> Vec<u32> {
        self.table[mask * self.n..(mask + 1) * self.n].to_vec()
    }
}

/// Unit-weight Dijkstra over one table row with arbitrary initial values.
/// Initial values are consumed in sorted order and merged with a FIFO of
/// relaxed vertices, whose values are nondecreasing.
fn relax(g: &Graph, row: &mut [u32], order: &mut Vec<(u32, Vertex)>, queue: &mut VecDeque<(u32, Vertex)>) {
    order.clear();
    order.extend(
        row.iter()
            .enumerate()
            .filter(|(_, &d)| d < INF)
            .map(|(v, &d)| (d, v)),
    );
    order.sort_unstable();
    queue.clear();
    let mut i = 0;
    loop {
        let take_order = match (order.get(i), queue.front()) {
            (Some(a), Some(b)) => a.0 <= b.0,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let (d, u) = if take_order {
            i += 1;
            order[i - 1]
        } else {
            queue.pop_front().expect("checked nonempty")
        };
        if d > row[u] {
            continue;
        }
        for &w in g.neighbors(u) {
            if d + 1 < row[w] {
                row[w] = d + 1;
                queue.push_back((d + 1, w));
            }
        }
    }
}

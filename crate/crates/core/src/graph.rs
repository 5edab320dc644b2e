//! Weighted undirected graphs whose edge order is the item order.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use crate::bound::CostVector;
use crate::error::{Error, Result};

/// 1-based vertex id.
pub type VertexId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub cost: i64,
}

/// Edge `i` (0-based) of the list is item `i + 1` of any diagram built from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: u32,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(n_vertices: u32, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = FxHashSet::default();
        for (i, e) in edges.iter().enumerate() {
            if e.u == 0 || e.v == 0 || e.u > n_vertices || e.v > n_vertices {
                return Err(Error::contract(format!(
                    "edge {} ({}, {}) has a vertex outside 1..={n_vertices}",
                    i + 1,
                    e.u,
                    e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::contract(format!("edge {} is a self-loop on {}", i + 1, e.u)));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(Error::contract(format!(
                    "edge {} duplicates ({}, {})",
                    i + 1,
                    e.u,
                    e.v
                )));
            }
        }
        Ok(Graph { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> u32 {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn costs(&self) -> CostVector {
        CostVector::new(self.edges.iter().map(|e| e.cost).collect())
    }

    /// Same graph with edges reordered breadth-first from `s`: edges are
    /// sorted by the discovery rank of their endpoints, which keeps the
    /// frontier narrow on sparse graphs.
    pub fn bfs_ordered(&self, s: VertexId) -> Result<Graph> {
        if s == 0 || s > self.n_vertices {
            return Err(Error::contract(format!("vertex {s} outside 1..={}", self.n_vertices)));
        }
        let n = self.n_vertices as usize;
        let mut adj = vec![Vec::new(); n + 1];
        for e in &self.edges {
            adj[e.u as usize].push(e.v);
            adj[e.v as usize].push(e.u);
        }
        let mut rank = vec![u32::MAX; n + 1];
        let mut next = 0;
        for root in std::iter::once(s).chain(1..=self.n_vertices) {
            if rank[root as usize] != u32::MAX {
                continue;
            }
            rank[root as usize] = next;
            next += 1;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v as usize] {
                    if rank[w as usize] == u32::MAX {
                        rank[w as usize] = next;
                        next += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| {
            let (a, b) = (rank[e.u as usize], rank[e.v as usize]);
            (a.min(b), a.max(b))
        });
        Ok(Graph { n_vertices: self.n_vertices, edges })
    }
}

/// Vertex id of row `r`, column `c` in an `n × n` cell grid (row-major).
pub fn grid_vertex(n: u32, r: u32, c: u32) -> VertexId {
    r * (n + 1) + c + 1
}

/// The `n × n` cell grid: `(n+1)^2` vertices, `2n(n+1)` edges.
///
/// Edges go row by row; at each column the horizontal edge to the right
/// comes before the vertical edge below, so at most `n + 2` vertices are on
/// the frontier. Costs are drawn uniformly from `cost_lo..=cost_hi` in edge
/// order by `ChaCha8Rng::seed_from_u64(seed)`.
pub fn grid_graph(n: u32, cost_lo: i64, cost_hi: i64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::contract("grid size must be at least 1"));
    }
    if cost_lo > cost_hi {
        return Err(Error::contract(format!("cost range {cost_lo}..={cost_hi} is empty")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(2 * (n * (n + 1)) as usize);
    for r in 0..=n {
        for c in 0..=n {
            let here = grid_vertex(n, r, c);
            if c < n {
                edges.push((here, grid_vertex(n, r, c + 1)));
            }
            if r < n {
                edges.push((here, grid_vertex(n, r + 1, c)));
            }
        }
    }
    let edges = edges
        .into_iter()
        .map(|(u, v)| Edge { u, v, cost: rng.gen_range(cost_lo..=cost_hi) })
        .collect();
    Graph::new((n + 1) * (n + 1), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        let g = grid_graph(8, 1000, 1999, 1).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (81, 144));
        let g = grid_graph(10, 1000, 1999, 1).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (121, 220));
        let g = grid_graph(1, 7, 7, 99).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (4, 4));
        assert!(g.edges().iter().all(|e| e.cost == 7));
    }

    #[test]
    fn grid_costs_are_seeded() {
        let a = grid_graph(4, 1000, 1999, 5).unwrap();
        let b = grid_graph(4, 1000, 1999, 5).unwrap();
        let c = grid_graph(4, 1000, 1999, 6).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.edges().iter().all(|e| (1000..=1999).contains(&e.cost)));
    }

    #[test]
    fn invalid_graphs() {
        let e = |u, v| Edge { u, v, cost: 1 };
        assert!(Graph::new(2, vec![e(1, 1)]).is_err());
        assert!(Graph::new(2, vec![e(1, 3)]).is_err());
        assert!(Graph::new(2, vec![e(1, 2), e(2, 1)]).is_err());
        assert!(grid_graph(0, 1, 1, 0).is_err());
        assert!(grid_graph(2, 5, 4, 0).is_err());
    }

    #[test]
    fn bfs_order_keeps_the_edge_set() {
        let g = grid_graph(3, 1, 9, 3).unwrap();
        let h = g.bfs_ordered(16).unwrap();
        let mut a = g.edges().to_vec();
        let mut b = h.edges().to_vec();
        a.sort_by_key(|e| (e.u, e.v));
        b.sort_by_key(|e| (e.u, e.v));
        assert_eq!(a, b);
        assert!(h.edges()[0].u == 16 || h.edges()[0].v == 16);
    }
}

//! Grid fixtures shared by the benchmarks.

use costzdd::{build_path_zdd, grid_graph, CostVector, ExtInt, Forest, NodeId, PathKind};

/// A grid's path diagram with its edge costs.
pub struct Fixture {
    pub forest: Forest,
    pub f: NodeId,
    pub costs: CostVector,
    pub min: i64,
}

/// `n`×`n` cell grid, costs in 1000..=1999, corner terminals.
pub fn grid_fixture(n: u32, kind: PathKind, seed: u64) -> Fixture {
    let g = grid_graph(n, 1000, 1999, seed).expect("grid parameters are valid");
    let mut forest = Forest::new(g.n_edges() as u32);
    let f = build_path_zdd(&mut forest, &g, 1, (n + 1) * (n + 1), kind).expect("corners are vertices");
    let costs = g.costs();
    let (min, _) = forest.min_max_cost(f, &costs).expect("costs match the diagram");
    Fixture { forest, f, costs, min: min.finite().expect("grids have a path") }
}

impl Fixture {
    pub fn bound(&self, ratio: f64) -> ExtInt {
        ExtInt::Finite((ratio * self.min as f64 + 1e-9).floor() as i64)
    }
}

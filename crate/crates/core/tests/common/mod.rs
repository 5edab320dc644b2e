//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use costzdd::{Edge, Forest, Graph, ItemSet, NodeId, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// A family as a plain ordered set of sorted item lists.
pub type Family = BTreeSet<Vec<u32>>;

pub fn random_family<R: Rng>(rng: &mut R, n: u32, max_sets: usize) -> Family {
    let k = rng.gen_range(0..=max_sets);
    (0..k)
        .map(|_| {
            let density = rng.gen_range(0.1..0.9);
            (1..=n).filter(|_| rng.gen_bool(density)).collect()
        })
        .collect()
}

pub fn to_sets(fam: &Family) -> Vec<ItemSet> {
    fam.iter().map(|s| ItemSet::new(s.iter().copied())).collect()
}

pub fn build(z: &mut Forest, fam: &Family) -> NodeId {
    z.from_sets(&to_sets(fam)).unwrap()
}

pub fn read_back(z: &mut Forest, f: NodeId) -> Family {
    z.enumerate(f, 1 << 20).unwrap().into_iter().map(|s| s.items().to_vec()).collect()
}

pub fn cost_of(costs: &[i64], set: &[u32]) -> i64 {
    set.iter().map(|&i| costs[i as usize - 1]).sum()
}

pub fn filter(fam: &Family, costs: &[i64], b: Option<i64>) -> Family {
    fam.iter().filter(|s| b.is_none_or(|b| cost_of(costs, s) <= b)).cloned().collect()
}

/// Connected graph on `nv` vertices: a random spanning tree plus extra edges,
/// listed in a shuffled order.
pub fn random_connected_graph<R: Rng>(rng: &mut R, nv: u32, max_edges: usize, lo: i64, hi: i64) -> Graph {
    let mut pairs: BTreeSet<(u32, u32)> = BTreeSet::new();
    for v in 2..=nv {
        let u = rng.gen_range(1..v);
        pairs.insert((u, v));
    }
    let all = nv as usize * (nv as usize - 1) / 2;
    let target = rng.gen_range(pairs.len()..=max_edges.max(pairs.len()).min(all));
    while pairs.len() < target {
        let u = rng.gen_range(1..=nv);
        let v = rng.gen_range(1..=nv);
        if u != v {
            pairs.insert((u.min(v), u.max(v)));
        }
    }
    let mut edges: Vec<Edge> = pairs
        .into_iter()
        .map(|(u, v)| {
            let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            Edge { u, v, cost: rng.gen_range(lo..=hi) }
        })
        .collect();
    edges.shuffle(rng);
    Graph::new(nv, edges).unwrap()
}

/// Every simple `s`–`t` path as its sorted edge-item list; with `hamiltonian`
/// only those visiting all vertices.
pub fn dfs_paths(g: &Graph, s: VertexId, t: VertexId, hamiltonian: bool) -> Family {
    let nv = g.n_vertices() as usize;
    let mut adj = vec![Vec::new(); nv + 1];
    for (i, e) in g.edges().iter().enumerate() {
        adj[e.u as usize].push((e.v, i as u32 + 1));
        adj[e.v as usize].push((e.u, i as u32 + 1));
    }
    let mut out = Family::new();
    let mut seen = vec![false; nv + 1];
    let mut path = Vec::new();
    fn go(
        v: VertexId,
        t: VertexId,
        adj: &[Vec<(VertexId, u32)>],
        seen: &mut [bool],
        path: &mut Vec<u32>,
        out: &mut Family,
        need: Option<usize>,
    ) {
        if v == t {
            if need.is_none_or(|n| path.len() + 1 == n) {
                let mut p = path.clone();
                p.sort_unstable();
                out.insert(p);
            }
            return;
        }
        for &(w, e) in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                path.push(e);
                go(w, t, adj, seen, path, out, need);
                path.pop();
                seen[w as usize] = false;
            }
        }
    }
    seen[s as usize] = true;
    go(s, t, &adj, &mut seen, &mut path, &mut out, hamiltonian.then_some(nv));
    out
}

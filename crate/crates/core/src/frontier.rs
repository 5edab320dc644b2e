//! Frontier-based construction of path diagrams.
//!
//! Edges are processed in item order. A partial solution is summarized by
//! the mate value of each frontier vertex: the vertex itself when untouched,
//! the opposite end of its path fragment when it is a fragment end, or
//! [`USED`] once it can take no further edge. Equal summaries at one level
//! are merged, and the levels are then emitted bottom-up through the
//! forest's unique table so the result comes out reduced.

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::zdd::{Forest, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    /// Every simple path from `s` to `t`.
    Simple,
    /// Simple paths from `s` to `t` that visit every vertex.
    Hamiltonian,
}

impl std::str::FromStr for PathKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "simple" => Ok(PathKind::Simple),
            "hamiltonian" | "ham" => Ok(PathKind::Hamiltonian),
            other => Err(format!("unknown path kind {other:?}")),
        }
    }
}

type Mate = u16;
/// Mate of a vertex that already has its final degree.
const USED: Mate = 0;
const NO_SLOT: u32 = u32::MAX;

/// Outgoing edge of a state: a terminal or a state on the next level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Child {
    Reject,
    Accept,
    State(u32),
}

enum Step {
    Reject,
    Accept,
    Next,
}

/// Per-vertex first and last incident edge positions.
struct Span {
    first: Vec<usize>,
    last: Vec<usize>,
}

impl Span {
    fn of(g: &Graph) -> Self {
        let n = g.n_vertices() as usize;
        let mut first = vec![usize::MAX; n + 1];
        let mut last = vec![0; n + 1];
        for (i, e) in g.edges().iter().enumerate() {
            for v in [e.u as usize, e.v as usize] {
                first[v] = first[v].min(i);
                last[v] = i;
            }
        }
        Span { first, last }
    }

    fn isolated(&self, v: VertexId) -> bool {
        self.first[v as usize] == usize::MAX
    }

    /// Vertices present while edge `i` is processed, in increasing id order.
    fn active(&self, i: usize) -> Vec<VertexId> {
        (1..self.first.len())
            .filter(|&v| self.first[v] <= i && i <= self.last[v])
            .map(|v| v as VertexId)
            .collect()
    }
}

/// Largest number of vertices that, after some edge is processed, are
/// incident to both a processed and an unprocessed edge.
pub fn frontier_width(g: &Graph) -> usize {
    let span = Span::of(g);
    let mut entering = vec![0i64; g.n_edges() + 1];
    for v in 1..span.first.len() {
        let (a, b) = (span.first[v], span.last[v]);
        if a != usize::MAX && a < b {
            // On the boundary after steps a..b-1.
            entering[a] += 1;
            entering[b] -= 1;
        }
    }
    let mut width = 0i64;
    let mut best = 0;
    for d in entering {
        width += d;
        best = best.max(width);
    }
    best as usize
}

/// Builds the diagram of all `s`–`t` paths of the requested kind; edge `i`
/// of `g` is item `i + 1` of `forest`.
pub fn build_path_zdd(
    forest: &mut Forest,
    g: &Graph,
    s: VertexId,
    t: VertexId,
    kind: PathKind,
) -> Result<NodeId> {
    let n = g.n_vertices();
    if s == 0 || s > n || t == 0 || t > n {
        return Err(Error::contract(format!("terminal {s} or {t} outside 1..={n}")));
    }
    if s == t {
        return Err(Error::contract("source and target must differ"));
    }
    if n >= Mate::MAX as u32 {
        return Err(Error::contract(format!("{n} vertices exceed the frontier encoding")));
    }
    if forest.n_items() as usize != g.n_edges() {
        return Err(Error::contract(format!(
            "forest has {} items but the graph has {} edges",
            forest.n_items(),
            g.n_edges()
        )));
    }

    let span = Span::of(g);
    if span.isolated(s) || span.isolated(t) {
        return Ok(NodeId::ZERO);
    }
    if kind == PathKind::Hamiltonian && (1..=n).any(|v| span.isolated(v)) {
        return Ok(NodeId::ZERO);
    }
    let last_entry = span.first[1..]
        .iter()
        .copied()
        .filter(|&f| f != usize::MAX)
        .max()
        .unwrap_or(0);

    let m = g.n_edges();
    let mut builder = Builder {
        g,
        s,
        t,
        kind,
        last_entry,
        active: Vec::new(),
        slot: vec![NO_SLOT; n as usize + 1],
        mates: Vec::new(),
    };

    // Top-down: distinct states per level and their two children.
    let mut children: Vec<Vec<[Child; 2]>> = Vec::with_capacity(m);
    let mut active = span.active(0);
    let mut states: IndexSet<Box<[Mate]>, FxBuildHasher> = IndexSet::default();
    states.insert(active.iter().map(|&v| v as Mate).collect());

    for i in 0..m {
        let next_active = if i + 1 < m { span.active(i + 1) } else { Vec::new() };
        let mut next_states: IndexSet<Box<[Mate]>, FxBuildHasher> = IndexSet::default();
        let mut level = Vec::with_capacity(states.len());

        builder.enter_level(&active);
        for state in &states {
            let mut pair = [Child::Reject; 2];
            for (take, out) in pair.iter_mut().enumerate() {
                *out = match builder.step(i, state, take == 1, &span) {
                    Step::Reject => Child::Reject,
                    Step::Accept => Child::Accept,
                    Step::Next if i + 1 == m => Child::Reject,
                    Step::Next => {
                        let next = builder.project(&next_active);
                        let (idx, _) = match next_states.get_index_of(next.as_slice()) {
                            Some(idx) => (idx, false),
                            None => next_states.insert_full(next.into_boxed_slice()),
                        };
                        Child::State(idx as u32)
                    }
                };
            }
            level.push(pair);
        }
        builder.leave_level(&active);

        children.push(level);
        states = next_states;
        active = next_active;
    }
    drop(states);

    // Bottom-up emission.
    let mut below: Vec<NodeId> = Vec::new();
    for (i, level) in children.into_iter().enumerate().rev() {
        let var = i as u32 + 1;
        let resolve = |c: Child| match c {
            Child::Reject => NodeId::ZERO,
            Child::Accept => NodeId::ONE,
            Child::State(j) => below[j as usize],
        };
        let mut here = Vec::with_capacity(level.len());
        for [lo, hi] in level {
            here.push(forest.mk(var, resolve(lo), resolve(hi))?);
        }
        below = here;
    }
    Ok(below[0])
}

struct Builder<'g> {
    g: &'g Graph,
    s: VertexId,
    t: VertexId,
    kind: PathKind,
    /// Position of the last edge at which a vertex first appears.
    last_entry: usize,
    /// Active vertices of the current level, by slot.
    active: Vec<VertexId>,
    /// Slot of each active vertex at the current level.
    slot: Vec<u32>,
    /// Working copy of the state being advanced.
    mates: Vec<Mate>,
}

impl Builder<'_> {
    fn enter_level(&mut self, active: &[VertexId]) {
        self.active.clear();
        self.active.extend_from_slice(active);
        for (k, &v) in active.iter().enumerate() {
            self.slot[v as usize] = k as u32;
        }
    }

    fn leave_level(&mut self, active: &[VertexId]) {
        for &v in active {
            self.slot[v as usize] = NO_SLOT;
        }
    }

    fn is_terminal(&self, v: VertexId) -> bool {
        v == self.s || v == self.t
    }

    fn slot_of(&self, v: Mate) -> Option<usize> {
        match self.slot[v as usize] {
            NO_SLOT => None,
            k => Some(k as usize),
        }
    }

    /// Advances `state` across edge `i`, leaving the result in `self.mates`.
    fn step(&mut self, i: usize, state: &[Mate], take: bool, span: &Span) -> Step {
        self.mates.clear();
        self.mates.extend_from_slice(state);
        let e = self.g.edges()[i];

        if take {
            let (a, b) = (e.u as Mate, e.v as Mate);
            let (sa, sb) = (self.slot[e.u as usize] as usize, self.slot[e.v as usize] as usize);
            let (ma, mb) = (self.mates[sa], self.mates[sb]);
            if ma == USED || mb == USED {
                return Step::Reject;
            }
            // Terminals end with degree one.
            if (self.is_terminal(e.u) && ma != a) || (self.is_terminal(e.v) && mb != b) {
                return Step::Reject;
            }
            // Both ends of one fragment: the edge would close a cycle.
            if ma == b {
                return Step::Reject;
            }
            if ma != a {
                self.mates[sa] = USED;
            }
            if mb != b {
                self.mates[sb] = USED;
            }
            if let Some(k) = self.slot_of(ma) {
                self.mates[k] = mb;
            }
            if let Some(k) = self.slot_of(mb) {
                self.mates[k] = ma;
            }
            let (ends_lo, ends_hi) = (ma.min(mb) as VertexId, ma.max(mb) as VertexId);
            if (ends_lo, ends_hi) == (self.s.min(self.t), self.s.max(self.t)) {
                return self.close(i);
            }
        }

        for v in [e.u, e.v] {
            if span.last[v as usize] != i {
                continue;
            }
            let m = self.mates[self.slot[v as usize] as usize];
            let ok = if self.is_terminal(v) {
                m != v as Mate
            } else {
                match self.kind {
                    PathKind::Simple => m == USED || m == v as Mate,
                    PathKind::Hamiltonian => m == USED,
                }
            };
            if !ok {
                return Step::Reject;
            }
        }
        Step::Next
    }

    /// The `s`–`t` path just closed; every later edge must stay unused.
    fn close(&self, i: usize) -> Step {
        let ham = self.kind == PathKind::Hamiltonian;
        if ham && self.last_entry > i {
            return Step::Reject;
        }
        for (k, &m) in self.mates.iter().enumerate() {
            let v = self.active[k];
            if m == USED || self.is_terminal(v) {
                continue;
            }
            // Another fragment, or (for Hamiltonian paths) an unvisited vertex.
            if m != v as Mate || ham {
                return Step::Reject;
            }
        }
        Step::Accept
    }

    /// Restricts `self.mates` to the next level's active vertices; new
    /// vertices start untouched.
    fn project(&self, next_active: &[VertexId]) -> Vec<Mate> {
        next_active
            .iter()
            .map(|&v| match self.slot[v as usize] {
                NO_SLOT => v as Mate,
                k => self.mates[k as usize],
            })
            .collect()
    }
}

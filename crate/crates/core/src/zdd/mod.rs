//! Canonical zero-suppressed decision diagrams.
//!
//! A [`Forest`] owns an append-only node table over a fixed item order
//! `1..=n`. Nodes are hash-consed through a unique table, and the
//! zero-suppress rule is applied on creation, so two handles are equal iff
//! they denote the same family of sets.

mod query;
pub(crate) mod setops;
mod text;

use std::fmt;

use num_bigint::BigUint;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

pub use setops::SetOp;

/// Handle to a node inside one [`Forest`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    /// The 0-terminal: the empty family.
    pub const ZERO: NodeId = NodeId(0);
    /// The 1-terminal: the family `{∅}`.
    pub const ONE: NodeId = NodeId(1);

    pub fn is_terminal(self) -> bool {
        self.0 < 2
    }

    pub fn index(self) -> u32 {
        self.0
    }

    #[cfg(test)]
    pub(crate) fn from_index(i: u32) -> Self {
        NodeId(i)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A stored non-terminal node: item `var` with its 0-edge and 1-edge children.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZddNode {
    pub var: u32,
    pub lo: NodeId,
    pub hi: NodeId,
}

/// A strictly increasing list of items.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ItemSet(Vec<u32>);

impl ItemSet {
    /// Builds a set from items in any order; duplicates collapse.
    pub fn new(items: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ItemSet(v)
    }

    pub fn empty() -> Self {
        ItemSet(Vec::new())
    }

    pub fn items(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, item: u32) -> bool {
        self.0.binary_search(&item).is_ok()
    }

    pub(crate) fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        ItemSet(v)
    }
}

impl From<&[u32]> for ItemSet {
    fn from(items: &[u32]) -> Self {
        ItemSet::new(items.iter().copied())
    }
}

impl fmt::Display for ItemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Largest number of nodes (terminals included) one forest can address.
const MAX_NODES: u64 = u32::MAX as u64;

/// Node store, unique table and operation caches for one item order.
///
/// Nodes are never freed. Because a node can only be created after its
/// children, increasing [`NodeId`] order is a topological order (children
/// first), which the bottom-up passes in this module rely on.
pub struct Forest {
    n_items: u32,
    // Slots 0 and 1 are placeholders for the terminals, whose `var` is n+1.
    nodes: Vec<ZddNode>,
    unique: FxHashMap<ZddNode, NodeId>,
    op_cache: FxHashMap<(SetOp, NodeId, NodeId), NodeId>,
    count_cache: FxHashMap<NodeId, BigUint>,
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Forest")
            .field("n_items", &self.n_items)
            .field("stored_nodes", &self.stored_nodes())
            .finish()
    }
}

impl Forest {
    pub fn new(n_items: u32) -> Self {
        assert!(n_items < u32::MAX, "item count must leave room for the terminal level");
        let terminal = ZddNode {
            var: n_items + 1,
            lo: NodeId::ZERO,
            hi: NodeId::ZERO,
        };
        Forest {
            n_items,
            nodes: vec![terminal, terminal],
            unique: FxHashMap::default(),
            op_cache: FxHashMap::default(),
            count_cache: FxHashMap::default(),
        }
    }

    pub fn n_items(&self) -> u32 {
        self.n_items
    }

    /// Number of non-terminal nodes ever created in this forest.
    pub fn stored_nodes(&self) -> usize {
        self.nodes.len() - 2
    }

    pub fn is_valid(&self, f: NodeId) -> bool {
        (f.0 as usize) < self.nodes.len()
    }

    /// The item tested at `f`; terminals report `n + 1`.
    #[inline]
    pub fn var(&self, f: NodeId) -> u32 {
        self.nodes[f.0 as usize].var
    }

    #[inline]
    pub fn lo(&self, f: NodeId) -> NodeId {
        self.nodes[f.0 as usize].lo
    }

    #[inline]
    pub fn hi(&self, f: NodeId) -> NodeId {
        self.nodes[f.0 as usize].hi
    }

    /// The stored node behind `f`, or `None` for terminals and foreign handles.
    pub fn node(&self, f: NodeId) -> Option<ZddNode> {
        if f.is_terminal() {
            None
        } else {
            self.nodes.get(f.0 as usize).copied()
        }
    }

    /// All stored nodes, in creation order.
    pub fn iter_nodes(&self) -> impl Iterator<Item = (NodeId, ZddNode)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .skip(2)
            .map(|(i, n)| (NodeId(i as u32), *n))
    }

    /// Returns the canonical node for `(var, lo, hi)`.
    ///
    /// If `hi` is the 0-terminal the node is suppressed and `lo` is returned.
    pub fn make_node(&mut self, var: u32, lo: NodeId, hi: NodeId) -> Result<NodeId> {
        if !self.is_valid(lo) || !self.is_valid(hi) {
            return Err(Error::contract(format!("unknown child handle {lo} or {hi}")));
        }
        if var == 0 || var > self.n_items {
            return Err(Error::contract(format!(
                "item {var} outside 1..={}",
                self.n_items
            )));
        }
        if var >= self.var(lo) || var >= self.var(hi) {
            return Err(Error::contract(format!(
                "item {var} must precede its children's items {} and {}",
                self.var(lo),
                self.var(hi)
            )));
        }
        self.mk(var, lo, hi)
    }

    /// [`Forest::make_node`] without the precondition checks; callers uphold them.
    #[inline]
    pub(crate) fn mk(&mut self, var: u32, lo: NodeId, hi: NodeId) -> Result<NodeId> {
        debug_assert!(var < self.var(lo) && var < self.var(hi));
        if hi == NodeId::ZERO {
            return Ok(lo);
        }
        let key = ZddNode { var, lo, hi };
        if let Some(&id) = self.unique.get(&key) {
            return Ok(id);
        }
        if self.nodes.len() as u64 >= MAX_NODES {
            return Err(Error::Capacity(MAX_NODES - 2));
        }
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(key);
        self.unique.insert(key, id);
        Ok(id)
    }

    /// Family `{X}` for one explicit set.
    pub fn singleton(&mut self, set: &ItemSet) -> Result<NodeId> {
        if let Some(&bad) = set.items().iter().find(|&&x| x == 0 || x > self.n_items) {
            return Err(Error::contract(format!(
                "item {bad} outside 1..={}",
                self.n_items
            )));
        }
        let mut f = NodeId::ONE;
        for &x in set.items().iter().rev() {
            f = self.mk(x, NodeId::ZERO, f)?;
        }
        Ok(f)
    }

    /// Family of the given sets.
    pub fn from_sets<'a>(&mut self, sets: impl IntoIterator<Item = &'a ItemSet>) -> Result<NodeId> {
        let mut f = NodeId::ZERO;
        for s in sets {
            let g = self.singleton(s)?;
            f = self.union(f, g)?;
        }
        Ok(f)
    }

    /// The power set of all `n` items: a chain of `n` nodes.
    pub fn power_set(&mut self) -> Result<NodeId> {
        let mut f = NodeId::ONE;
        for x in (1..=self.n_items).rev() {
            f = self.mk(x, f, f)?;
        }
        Ok(f)
    }

    /// Drops cached set-operation results. Counts stay cached; they never go stale.
    pub fn clear_op_cache(&mut self) {
        self.op_cache.clear();
        self.op_cache.shrink_to_fit();
    }

    /// True when every stored node obeys the reduction rules and the
    /// unique table maps each triple to exactly one node.
    pub fn is_canonical(&self) -> bool {
        if self.unique.len() != self.stored_nodes() {
            return false;
        }
        self.iter_nodes().all(|(id, n)| {
            n.hi != NodeId::ZERO
                && n.var < self.var(n.lo)
                && n.var < self.var(n.hi)
                && self.unique.get(&n) == Some(&id)
        })
    }
}

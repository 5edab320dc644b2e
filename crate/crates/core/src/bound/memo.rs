//! Per-node interval memo.
//!
//! Each node keeps its half-open intervals `[aw, rb)` sorted by `aw`. A
//! lookup is a predecessor search on `aw` followed by one `b < rb` test.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ext_int::ExtInt;
use crate::zdd::NodeId;

/// Half-open bound interval `[aw, rb)` on which a filtered result is constant.
///
/// An upper end of `+inf` means no feasible solution was rejected, so the
/// interval then also covers the bound `+inf` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    /// Highest cost of an accepted solution (inclusive lower end).
    pub aw: ExtInt,
    /// Lowest cost of a rejected feasible solution (exclusive upper end).
    pub rb: ExtInt,
}

impl Interval {
    pub fn new(aw: ExtInt, rb: ExtInt) -> Self {
        Interval { aw, rb }
    }

    pub fn contains(&self, b: ExtInt) -> bool {
        self.aw <= b && (b < self.rb || self.rb == ExtInt::PosInf)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Entry {
    interval: Interval,
    h: NodeId,
}

#[derive(Debug, Default)]
pub struct IntervalMemo {
    by_node: FxHashMap<NodeId, Vec<Entry>>,
    len: usize,
}

impl IntervalMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Total number of stored intervals.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The stored result whose interval contains `b`, if any.
    #[inline]
    pub fn lookup(&self, node: NodeId, b: ExtInt) -> Option<(NodeId, Interval)> {
        let entries = self.by_node.get(&node)?;
        let pos = entries.partition_point(|e| e.interval.aw <= b);
        let e = entries[..pos].last()?;
        e.interval.contains(b).then_some((e.h, e.interval))
    }

    /// Stores `node, [aw, rb) -> h`.
    ///
    /// Re-inserting an identical entry is a no-op. Any other overlap with an
    /// existing interval is reported as [`Error::MemoConflict`].
    pub fn insert(&mut self, node: NodeId, interval: Interval, h: NodeId) -> Result<()> {
        if interval.aw >= interval.rb {
            return Err(Error::MemoConflict {
                node: node.index(),
                detail: format!("empty interval [{}, {})", interval.aw, interval.rb),
            });
        }
        let entries = self.by_node.entry(node).or_default();
        let pos = entries.partition_point(|e| e.interval.aw <= interval.aw);
        if let Some(prev) = pos.checked_sub(1).map(|i| entries[i]) {
            if prev.interval == interval && prev.h == h {
                return Ok(());
            }
            if prev.interval.rb > interval.aw {
                return Err(conflict(node, prev, interval, h));
            }
        }
        if let Some(&next) = entries.get(pos) {
            if interval.rb > next.interval.aw {
                return Err(conflict(node, next, interval, h));
            }
        }
        entries.insert(pos, Entry { interval, h });
        self.len += 1;
        Ok(())
    }

    /// Stored intervals of one node in increasing order.
    pub fn entries(&self, node: NodeId) -> impl Iterator<Item = (Interval, NodeId)> + '_ {
        self.by_node
            .get(&node)
            .into_iter()
            .flatten()
            .map(|e| (e.interval, e.h))
    }

    /// Every stored `(node, interval, result)`.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, Interval, NodeId)> + '_ {
        self.by_node
            .iter()
            .flat_map(|(&n, v)| v.iter().map(move |e| (n, e.interval, e.h)))
    }

    pub fn clear(&mut self) {
        self.by_node.clear();
        self.len = 0;
    }
}

fn conflict(node: NodeId, old: Entry, interval: Interval, h: NodeId) -> Error {
    Error::MemoConflict {
        node: node.index(),
        detail: format!(
            "[{}, {}) -> {} overlaps stored [{}, {}) -> {}",
            interval.aw, interval.rb, h, old.interval.aw, old.interval.rb, old.h
        ),
    }
}

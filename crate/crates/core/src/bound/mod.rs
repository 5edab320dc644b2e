//! Cost-bounded filtering of a diagram.
//!
//! Given a family `S_f` and per-item costs, every routine here builds the
//! diagram of `{X in S_f | Cost(X) <= b}`. Three backtracking variants are
//! provided (no memo, a memo keyed on the exact `(node, bound)` pair, and the
//! interval memo), plus the classical route that intersects `f` with a
//! diagram of the cost constraint itself. All of them create nodes through
//! the same forest, so their results compare by handle.

mod memo;

use num_bigint::BigUint;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ext_int::ExtInt;
use crate::zdd::setops::{STACK_GROWTH, STACK_RED_ZONE};
use crate::zdd::{Forest, ItemSet, NodeId};

pub use memo::{Interval, IntervalMemo};

/// Integer cost of each item, indexed by item (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CostVector(Vec<i64>);

impl CostVector {
    /// `costs[i]` is the cost of item `i + 1`.
    pub fn new(costs: Vec<i64>) -> Self {
        CostVector(costs)
    }

    #[inline]
    pub fn cost(&self, item: u32) -> i64 {
        self.0[item as usize - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// Total cost of a set, with overflow reported rather than wrapped.
    pub fn total(&self, set: &ItemSet) -> Result<i64> {
        set.items()
            .iter()
            .try_fold(0i64, |acc, &x| acc.checked_add(self.cost(x)).ok_or(Error::Overflow))
    }

    pub(crate) fn check_len(&self, n_items: u32) -> Result<()> {
        if self.0.len() != n_items as usize {
            return Err(Error::contract(format!(
                "cost vector has {} entries, forest has {n_items} items",
                self.0.len()
            )));
        }
        Ok(())
    }
}

impl From<Vec<i64>> for CostVector {
    fn from(v: Vec<i64>) -> Self {
        CostVector(v)
    }
}

/// Outcome of one bounding query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundResult {
    pub h: NodeId,
    /// `[accept_worst, reject_best)`; only the interval-memo variant reports it.
    pub interval: Option<Interval>,
    /// Procedure invocations made by this query, terminal and memo-hit returns included.
    pub calls: u64,
}

impl BoundResult {
    pub fn aw(&self) -> Option<ExtInt> {
        self.interval.map(|i| i.aw)
    }

    pub fn rb(&self) -> Option<ExtInt> {
        self.interval.map(|i| i.rb)
    }
}

/// Exact-pair memo, split per node so that growing it never rehashes more
/// than one node's entries at a time. It can reach tens of millions of pairs.
#[derive(Default)]
struct FlatMemo {
    finite: Vec<FxHashMap<i64, NodeId>>,
    infinite: FxHashMap<(NodeId, bool), NodeId>,
    len: usize,
}

impl FlatMemo {
    fn get(&self, f: NodeId, b: ExtInt) -> Option<NodeId> {
        match b {
            ExtInt::Finite(v) => self.finite.get(f.index() as usize)?.get(&v).copied(),
            _ => self.infinite.get(&(f, b == ExtInt::PosInf)).copied(),
        }
    }

    fn insert(&mut self, f: NodeId, b: ExtInt, h: NodeId) {
        let fresh = match b {
            ExtInt::Finite(v) => {
                let i = f.index() as usize;
                if i >= self.finite.len() {
                    self.finite.resize_with(i + 1, FxHashMap::default);
                }
                self.finite[i].insert(v, h).is_none()
            }
            _ => self.infinite.insert((f, b == ExtInt::PosInf), h).is_none(),
        };
        self.len += fresh as usize;
    }

    fn len(&self) -> usize {
        self.len
    }
}

/// Bounding session for one forest and one cost vector.
///
/// Both memos persist across queries; they are only meaningful for the cost
/// vector the session was created with.
pub struct Bounder<'a> {
    forest: &'a mut Forest,
    costs: CostVector,
    interval_memo: IntervalMemo,
    flat_memo: FlatMemo,
    /// `neg_suffix[v - 1]`: sum of the negative costs of items `v..=n`.
    neg_suffix: Vec<i64>,
    lower_bound_cut: bool,
    calls: u64,
}

impl<'a> Bounder<'a> {
    pub fn new(forest: &'a mut Forest, costs: CostVector) -> Result<Self> {
        costs.check_len(forest.n_items())?;
        let mut neg_suffix = vec![0i64; costs.len() + 1];
        for i in (0..costs.len()).rev() {
            let c = costs.as_slice()[i].min(0);
            neg_suffix[i] = neg_suffix[i + 1].checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(Bounder {
            forest,
            costs,
            interval_memo: IntervalMemo::new(),
            flat_memo: FlatMemo::default(),
            neg_suffix,
            lower_bound_cut: false,
            calls: 0,
        })
    }

    pub fn forest(&self) -> &Forest {
        self.forest
    }

    pub fn forest_mut(&mut self) -> &mut Forest {
        self.forest
    }

    pub fn costs(&self) -> &CostVector {
        &self.costs
    }

    pub fn interval_memo(&self) -> &IntervalMemo {
        &self.interval_memo
    }

    /// Size of the exact-pair memo used by [`Bounder::backtrack_memo`].
    pub fn flat_memo_len(&self) -> usize {
        self.flat_memo.len()
    }

    /// Enables or disables the lower-bound cut of [`Bounder::backtrack_memo`].
    ///
    /// Results are identical either way; only the call count changes.
    /// Cached pairs stay valid after toggling.
    pub fn set_lower_bound_cut(&mut self, enabled: bool) {
        self.lower_bound_cut = enabled;
    }

    /// Invocations made over the whole session.
    pub fn total_calls(&self) -> u64 {
        self.calls
    }

    fn check(&self, f: NodeId) -> Result<()> {
        if self.forest.is_valid(f) {
            Ok(())
        } else {
            Err(Error::contract(format!("unknown node handle {f}")))
        }
    }

    /// Plain depth-first filtering with no memo.
    pub fn backtrack_naive(&mut self, f: NodeId, b: ExtInt) -> Result<BoundResult> {
        self.check(f)?;
        let start = self.calls;
        let h = self.naive_rec(f, b)?;
        Ok(BoundResult { h, interval: None, calls: self.calls - start })
    }

    fn naive_rec(&mut self, f: NodeId, b: ExtInt) -> Result<NodeId> {
        self.calls += 1;
        if f == NodeId::ZERO {
            return Ok(NodeId::ZERO);
        }
        if f == NodeId::ONE {
            return Ok(if b >= ExtInt::ZERO { NodeId::ONE } else { NodeId::ZERO });
        }
        let x = self.forest.var(f);
        let c = self.costs.cost(x);
        let (lo, hi) = (self.forest.lo(f), self.forest.hi(f));
        let h0 = grow(|| self.naive_rec(lo, b))?;
        let h1 = grow(|| self.naive_rec(hi, b.sub(c)?))?;
        self.forest.mk(x, h0, h1)
    }

    /// Filtering with a memo keyed on the exact `(node, remaining bound)` pair.
    ///
    /// Every reachable pair is tabulated, so on large random costs the memo
    /// approaches one entry per distinct subtotal at each node.
    ///
    /// With the lower-bound cut enabled (off by default), a residual bound below
    /// the sum of all negative costs still to come returns the 0-terminal
    /// without descending, as a knapsack table would. For non-negative costs
    /// that is simply a negative residual.
    pub fn backtrack_memo(&mut self, f: NodeId, b: ExtInt) -> Result<BoundResult> {
        self.check(f)?;
        let start = self.calls;
        let h = self.memo_rec(f, b)?;
        Ok(BoundResult { h, interval: None, calls: self.calls - start })
    }

    fn memo_rec(&mut self, f: NodeId, b: ExtInt) -> Result<NodeId> {
        self.calls += 1;
        if f == NodeId::ZERO {
            return Ok(NodeId::ZERO);
        }
        if f == NodeId::ONE {
            return Ok(if b >= ExtInt::ZERO { NodeId::ONE } else { NodeId::ZERO });
        }
        let x = self.forest.var(f);
        if self.lower_bound_cut && b < self.neg_suffix[x as usize - 1] {
            return Ok(NodeId::ZERO);
        }
        if let Some(h) = self.flat_memo.get(f, b) {
            return Ok(h);
        }
        let c = self.costs.cost(x);
        let (lo, hi) = (self.forest.lo(f), self.forest.hi(f));
        let h0 = grow(|| self.memo_rec(lo, b))?;
        let h1 = grow(|| self.memo_rec(hi, b.sub(c)?))?;
        let h = self.forest.mk(x, h0, h1)?;
        self.flat_memo.insert(f, b, h);
        Ok(h)
    }

    /// Filtering with the interval memo.
    ///
    /// Besides `h`, reports `[aw, rb)`: `aw` is the highest cost of an
    /// accepted solution and `rb` the lowest cost of a rejected one, so every
    /// bound in the interval gives the same `h`. With `b = -inf` the result
    /// is empty and `rb` is the minimum cost; with `b = +inf` the result is
    /// `f` and `aw` is the maximum cost.
    pub fn backtrack_interval_memo(&mut self, f: NodeId, b: ExtInt) -> Result<BoundResult> {
        self.check(f)?;
        let start = self.calls;
        let (h, interval) = self.interval_rec(f, b)?;
        Ok(BoundResult { h, interval: Some(interval), calls: self.calls - start })
    }

    fn interval_rec(&mut self, f: NodeId, b: ExtInt) -> Result<(NodeId, Interval)> {
        self.calls += 1;
        if f == NodeId::ZERO {
            return Ok((NodeId::ZERO, Interval::new(ExtInt::NegInf, ExtInt::PosInf)));
        }
        if f == NodeId::ONE {
            return Ok(if b >= ExtInt::ZERO {
                (NodeId::ONE, Interval::new(ExtInt::ZERO, ExtInt::PosInf))
            } else {
                (NodeId::ZERO, Interval::new(ExtInt::NegInf, ExtInt::ZERO))
            });
        }
        if let Some(hit) = self.interval_memo.lookup(f, b) {
            return Ok(hit);
        }
        let x = self.forest.var(f);
        let c = self.costs.cost(x);
        let (lo, hi) = (self.forest.lo(f), self.forest.hi(f));
        let (h0, i0) = grow(|| self.interval_rec(lo, b))?;
        let (h1, i1) = grow(|| self.interval_rec(hi, b.sub(c)?))?;
        let h = self.forest.mk(x, h0, h1)?;
        let interval = Interval::new(i0.aw.max(i1.aw.add(c)?), i0.rb.min(i1.rb.add(c)?));
        debug_assert!(interval.contains(b));
        self.interval_memo.insert(f, interval, h)?;
        Ok((h, interval))
    }

    /// Diagram of `{X ⊆ items | Cost(X) <= b}`, built by interval-memo
    /// filtering of the power-set chain.
    pub fn build_cost_constraint(&mut self, b: ExtInt) -> Result<NodeId> {
        let p = self.forest.power_set()?;
        Ok(self.backtrack_interval_memo(p, b)?.h)
    }

    /// The classical route: `f ∩ build_cost_constraint(b)`.
    pub fn bound_via_intersection(&mut self, f: NodeId, b: ExtInt) -> Result<NodeId> {
        self.check(f)?;
        let g = self.build_cost_constraint(b)?;
        self.forest.intersection(f, g)
    }

    /// Members of `f` with `lb < Cost(X) <= ub`.
    pub fn range_query(&mut self, f: NodeId, lb: ExtInt, ub: ExtInt) -> Result<NodeId> {
        if lb > ub {
            return Err(Error::contract(format!("empty range: lower {lb} exceeds upper {ub}")));
        }
        let upper = self.backtrack_interval_memo(f, ub)?.h;
        let lower = self.backtrack_interval_memo(f, lb)?.h;
        self.forest.difference(upper, lower)
    }

    /// Number of members of `f` costing at most `c`.
    pub fn rank(&mut self, f: NodeId, c: ExtInt) -> Result<BigUint> {
        let h = self.backtrack_interval_memo(f, c)?.h;
        Ok(self.forest.count(h))
    }
}

#[inline]
fn grow<R>(f: impl FnOnce() -> R) -> R {
    stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, f)
}

/// Exact invocation count of [`Bounder::backtrack_naive`] on `f`, which
/// never prunes: one call per node of the unfolded decision tree.
pub fn naive_call_count(forest: &Forest, f: NodeId) -> BigUint {
    if f.is_terminal() {
        return BigUint::from(1u32);
    }
    let mut calls: FxHashMap<NodeId, BigUint> = FxHashMap::default();
    let get = |m: &FxHashMap<NodeId, BigUint>, n: NodeId| {
        if n.is_terminal() {
            BigUint::from(1u32)
        } else {
            m[&n].clone()
        }
    };
    for n in forest.reachable(f) {
        let c = get(&calls, forest.lo(n)) + get(&calls, forest.hi(n)) + 1u32;
        calls.insert(n, c);
    }
    calls.remove(&f).unwrap_or_default()
}

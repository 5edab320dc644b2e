use num_bigint::{BigUint, RandBigInt};
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::{FxHashMap, FxHashSet};

use super::{Forest, ItemSet, NodeId};
use crate::bound::CostVector;
use crate::error::{Error, Result};
use crate::ext_int::ExtInt;

impl Forest {
    /// Non-terminal nodes reachable from `f`, children before parents.
    pub fn reachable(&self, f: NodeId) -> Vec<NodeId> {
        let mut seen = FxHashSet::default();
        let mut stack = vec![f];
        let mut out = Vec::new();
        while let Some(n) = stack.pop() {
            if n.is_terminal() || !seen.insert(n) {
                continue;
            }
            out.push(n);
            stack.push(self.lo(n));
            stack.push(self.hi(n));
        }
        out.sort_unstable();
        out
    }

    /// Number of distinct non-terminal nodes reachable from `f`.
    pub fn node_count(&self, f: NodeId) -> usize {
        self.reachable(f).len()
    }

    /// Exact number of sets in the family of `f`.
    pub fn count(&mut self, f: NodeId) -> BigUint {
        match f {
            NodeId::ZERO => return BigUint::zero(),
            NodeId::ONE => return BigUint::from(1u32),
            _ => {}
        }
        if let Some(c) = self.count_cache.get(&f) {
            return c.clone();
        }
        let order = self.reachable(f);
        for n in order {
            if self.count_cache.contains_key(&n) {
                continue;
            }
            let c = self.cached_count(self.lo(n)) + self.cached_count(self.hi(n));
            self.count_cache.insert(n, c);
        }
        self.count_cache[&f].clone()
    }

    fn cached_count(&self, n: NodeId) -> BigUint {
        match n {
            NodeId::ZERO => BigUint::zero(),
            NodeId::ONE => BigUint::from(1u32),
            _ => self.count_cache[&n].clone(),
        }
    }

    /// Membership test for one set.
    pub fn contains(&self, f: NodeId, x: &ItemSet) -> bool {
        let items = x.items();
        let mut pos = 0;
        let mut n = f;
        while !n.is_terminal() {
            let v = self.var(n);
            // An item smaller than the current level was skipped, so it is absent.
            if pos < items.len() && items[pos] < v {
                return false;
            }
            if pos < items.len() && items[pos] == v {
                pos += 1;
                n = self.hi(n);
            } else {
                n = self.lo(n);
            }
        }
        n == NodeId::ONE && pos == items.len()
    }

    /// Every set of the family in lexicographic order.
    ///
    /// Refuses without producing anything when the family has more than
    /// `limit` members.
    pub fn enumerate(&mut self, f: NodeId, limit: u64) -> Result<Vec<ItemSet>> {
        let total = self.count(f);
        if total > BigUint::from(limit) {
            return Err(Error::LimitExceeded {
                count: total.to_string(),
                limit,
            });
        }
        let mut out = Vec::with_capacity(total.to_usize().unwrap_or(0));
        let mut prefix = Vec::new();
        self.enumerate_rec(f, &mut prefix, true, &mut out);
        Ok(out)
    }

    fn enumerate_rec(&self, f: NodeId, prefix: &mut Vec<u32>, with_empty: bool, out: &mut Vec<ItemSet>) {
        if f == NodeId::ZERO {
            return;
        }
        if f == NodeId::ONE {
            if with_empty {
                out.push(ItemSet::from_sorted(prefix.clone()));
            }
            return;
        }
        // The prefix alone sorts first, then sets continuing with `v`, then
        // sets continuing with larger items.
        let v = self.var(f);
        if with_empty && self.has_empty(f) {
            out.push(ItemSet::from_sorted(prefix.clone()));
        }
        prefix.push(v);
        self.enumerate_rec(self.hi(f), prefix, true, out);
        prefix.pop();
        self.enumerate_rec(self.lo(f), prefix, false, out);
    }

    fn has_empty(&self, mut f: NodeId) -> bool {
        while !f.is_terminal() {
            f = self.lo(f);
        }
        f == NodeId::ONE
    }

    /// Minimum and maximum total cost over the family; `(+inf, -inf)` when empty.
    pub fn min_max_cost(&self, f: NodeId, costs: &CostVector) -> Result<(ExtInt, ExtInt)> {
        costs.check_len(self.n_items())?;
        let mut memo: FxHashMap<NodeId, (ExtInt, ExtInt)> = FxHashMap::default();
        let get = |memo: &FxHashMap<NodeId, (ExtInt, ExtInt)>, n: NodeId| match n {
            NodeId::ZERO => (ExtInt::PosInf, ExtInt::NegInf),
            NodeId::ONE => (ExtInt::ZERO, ExtInt::ZERO),
            _ => memo[&n],
        };
        for n in self.reachable(f) {
            let c = costs.cost(self.var(n));
            let (lo_min, lo_max) = get(&memo, self.lo(n));
            let (hi_min, hi_max) = get(&memo, self.hi(n));
            let entry = (lo_min.min(hi_min.add(c)?), lo_max.max(hi_max.add(c)?));
            memo.insert(n, entry);
        }
        Ok(get(&memo, f))
    }

    /// `k` independent uniform draws from the family, reproducible for a seed.
    pub fn sample(&mut self, f: NodeId, k: usize, seed: u64) -> Result<Vec<ItemSet>> {
        let total = self.count(f);
        if total.is_zero() {
            return Err(Error::EmptyFamily);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(k);
        for _ in 0..k {
            // Rank of the drawn set; the 0-edge side holds the lower ranks.
            let mut r = rng.gen_biguint_below(&total);
            let mut items = Vec::new();
            let mut n = f;
            while !n.is_terminal() {
                let lo = self.lo(n);
                let c_lo = self.cached_count(lo);
                if r < c_lo {
                    n = lo;
                } else {
                    r -= c_lo;
                    items.push(self.var(n));
                    n = self.hi(n);
                }
            }
            debug_assert!(n == NodeId::ONE && r.is_zero());
            out.push(ItemSet::from_sorted(items));
        }
        Ok(out)
    }
}

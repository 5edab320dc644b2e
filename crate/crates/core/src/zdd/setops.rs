use std::fmt;
use std::str::FromStr;

use super::{Forest, NodeId};
use crate::error::Result;

// Red zone and growth step for recursive walks; depth is bounded by the item count.
pub(crate) const STACK_RED_ZONE: usize = 128 * 1024;
pub(crate) const STACK_GROWTH: usize = 4 * 1024 * 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

impl fmt::Display for SetOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetOp::Union => "union",
            SetOp::Intersection => "intersection",
            SetOp::Difference => "difference",
        })
    }
}

impl FromStr for SetOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "union" => Ok(SetOp::Union),
            "intersection" => Ok(SetOp::Intersection),
            "difference" => Ok(SetOp::Difference),
            other => Err(format!("unknown set operation {other:?}")),
        }
    }
}

impl Forest {
    /// Applies `op` to the families of `f` and `g`.
    pub fn apply_setop(&mut self, op: SetOp, f: NodeId, g: NodeId) -> Result<NodeId> {
        stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, || self.apply_rec(op, f, g))
    }

    pub fn union(&mut self, f: NodeId, g: NodeId) -> Result<NodeId> {
        self.apply_setop(SetOp::Union, f, g)
    }

    pub fn intersection(&mut self, f: NodeId, g: NodeId) -> Result<NodeId> {
        self.apply_setop(SetOp::Intersection, f, g)
    }

    pub fn difference(&mut self, f: NodeId, g: NodeId) -> Result<NodeId> {
        self.apply_setop(SetOp::Difference, f, g)
    }

    fn apply_rec(&mut self, op: SetOp, f: NodeId, g: NodeId) -> Result<NodeId> {
        // Terminal cases.
        match op {
            SetOp::Union => {
                if f == NodeId::ZERO || f == g {
                    return Ok(g);
                }
                if g == NodeId::ZERO {
                    return Ok(f);
                }
            }
            SetOp::Intersection => {
                if f == NodeId::ZERO || g == NodeId::ZERO {
                    return Ok(NodeId::ZERO);
                }
                if f == g {
                    return Ok(f);
                }
            }
            SetOp::Difference => {
                if f == NodeId::ZERO || f == g {
                    return Ok(NodeId::ZERO);
                }
                if g == NodeId::ZERO {
                    return Ok(f);
                }
            }
        }

        // Union and intersection commute; normalize the cache key.
        let (f, g) = if op != SetOp::Difference && f > g { (g, f) } else { (f, g) };
        if let Some(&h) = self.op_cache.get(&(op, f, g)) {
            return Ok(h);
        }

        let (vf, vg) = (self.var(f), self.var(g));
        let h = stacker::maybe_grow(STACK_RED_ZONE, STACK_GROWTH, || -> Result<NodeId> {
            Ok(match op {
                SetOp::Union => {
                    if vf < vg {
                        let lo = self.apply_rec(op, self.lo(f), g)?;
                        self.mk(vf, lo, self.hi(f))?
                    } else if vf > vg {
                        let lo = self.apply_rec(op, f, self.lo(g))?;
                        self.mk(vg, lo, self.hi(g))?
                    } else {
                        let lo = self.apply_rec(op, self.lo(f), self.lo(g))?;
                        let hi = self.apply_rec(op, self.hi(f), self.hi(g))?;
                        self.mk(vf, lo, hi)?
                    }
                }
                SetOp::Intersection => {
                    if vf < vg {
                        self.apply_rec(op, self.lo(f), g)?
                    } else if vf > vg {
                        self.apply_rec(op, f, self.lo(g))?
                    } else {
                        let lo = self.apply_rec(op, self.lo(f), self.lo(g))?;
                        let hi = self.apply_rec(op, self.hi(f), self.hi(g))?;
                        self.mk(vf, lo, hi)?
                    }
                }
                SetOp::Difference => {
                    if vf < vg {
                        let lo = self.apply_rec(op, self.lo(f), g)?;
                        self.mk(vf, lo, self.hi(f))?
                    } else if vf > vg {
                        self.apply_rec(op, f, self.lo(g))?
                    } else {
                        let lo = self.apply_rec(op, self.lo(f), self.lo(g))?;
                        let hi = self.apply_rec(op, self.hi(f), self.hi(g))?;
                        self.mk(vf, lo, hi)?
                    }
                }
            })
        })?;
        self.op_cache.insert((op, f, g), h);
        Ok(h)
    }
}

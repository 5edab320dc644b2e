//! Line-oriented text form of a single diagram.
//!
//! ```text
//! zdd <n_items> <n_nodes> <root_id>
//! <id> <var> <lo_id> <hi_id>
//! ```
//!
//! Ids 0 and 1 are the terminals; non-terminals are numbered from 2 with
//! children listed before parents.

use std::fmt::Write as _;

use rustc_hash::FxHashMap;

use super::{Forest, NodeId};
use crate::error::{Error, Result};

impl Forest {
    pub fn serialize(&self, f: NodeId) -> String {
        let order = self.reachable(f);
        let mut ids: FxHashMap<NodeId, u64> = FxHashMap::default();
        ids.insert(NodeId::ZERO, 0);
        ids.insert(NodeId::ONE, 1);
        for (i, &n) in order.iter().enumerate() {
            ids.insert(n, i as u64 + 2);
        }
        let mut out = String::with_capacity(24 * (order.len() + 1));
        let _ = writeln!(out, "zdd {} {} {}", self.n_items(), order.len(), ids[&f]);
        for &n in &order {
            let _ = writeln!(
                out,
                "{} {} {} {}",
                ids[&n],
                self.var(n),
                ids[&self.lo(n)],
                ids[&self.hi(n)]
            );
        }
        out
    }

    /// Reads a diagram into this forest and returns its root.
    ///
    /// The header's item count must match the forest. Every node line must
    /// reference already-defined children and respect the item order.
    pub fn deserialize(&mut self, text: &str) -> Result<NodeId> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "zdd" {
            return Err(Error::parse(hline, "expected `zdd <n_items> <n_nodes> <root_id>`"));
        }
        let n_items: u32 = parse_num(fields[1], hline, "item count")?;
        let n_nodes: u64 = parse_num(fields[2], hline, "node count")?;
        let root: u64 = parse_num(fields[3], hline, "root id")?;
        if n_items != self.n_items() {
            return Err(Error::parse(
                hline,
                format!("diagram has {n_items} items but the forest has {}", self.n_items()),
            ));
        }

        let mut map: FxHashMap<u64, NodeId> = FxHashMap::default();
        map.insert(0, NodeId::ZERO);
        map.insert(1, NodeId::ONE);
        let mut seen = 0u64;
        let mut last_line = hline;
        for (ln, line) in lines {
            last_line = ln;
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                return Err(Error::parse(ln, "expected `<id> <var> <lo_id> <hi_id>`"));
            }
            let id: u64 = parse_num(f[0], ln, "node id")?;
            let var: u32 = parse_num(f[1], ln, "item")?;
            let lo: u64 = parse_num(f[2], ln, "0-child id")?;
            let hi: u64 = parse_num(f[3], ln, "1-child id")?;
            if id < 2 {
                return Err(Error::parse(ln, format!("node id {id} is reserved for a terminal")));
            }
            if map.contains_key(&id) {
                return Err(Error::parse(ln, format!("node id {id} defined twice")));
            }
            let child = |c: u64| {
                map.get(&c)
                    .copied()
                    .ok_or_else(|| Error::parse(ln, format!("child id {c} is not defined above")))
            };
            let (lo, hi) = (child(lo)?, child(hi)?);
            if hi == NodeId::ZERO {
                return Err(Error::parse(ln, "1-edge points to the 0-terminal"));
            }
            let node = self
                .make_node(var, lo, hi)
                .map_err(|e| Error::parse(ln, e.to_string()))?;
            map.insert(id, node);
            seen += 1;
        }
        if seen != n_nodes {
            return Err(Error::parse(
                last_line,
                format!("header declares {n_nodes} nodes but {seen} were given"),
            ));
        }
        map.get(&root)
            .copied()
            .ok_or_else(|| Error::parse(hline, format!("root id {root} is not defined")))
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {s:?}")))
}

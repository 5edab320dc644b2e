//! Text formats for graphs and run reports.
//!
//! Graph files are a small DIMACS-like dialect:
//!
//! ```text
//! c any comment
//! p path <V> <E>
//! t <s> <t>
//! e <u> <v> <cost>
//! ```
//!
//! The order of the `e` lines is the item order. Reports are one JSON object
//! per line with solution counts written as decimal strings.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext_int::ExtInt;
use crate::graph::{Edge, Graph, VertexId};

/// Graph plus its optional `(s, t)` terminal line.
pub type GraphFile = (Graph, Option<(VertexId, VertexId)>);

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, u32, usize)> = None;
    let mut terminals = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(ln, "second `p` line"));
                }
                if rest.len() != 3 || rest[0] != "path" {
                    return Err(Error::parse(ln, "expected `p path <V> <E>`"));
                }
                header = Some((ln, num(rest[1], ln, "vertex count")?, num(rest[2], ln, "edge count")?));
            }
            "t" => {
                let (_, n, _) = header.ok_or_else(|| Error::parse(ln, "`t` line before `p` line"))?;
                if terminals.is_some() {
                    return Err(Error::parse(ln, "second `t` line"));
                }
                if rest.len() != 2 {
                    return Err(Error::parse(ln, "expected `t <s> <t>`"));
                }
                let s = vertex(rest[0], n, ln)?;
                let t = vertex(rest[1], n, ln)?;
                if s == t {
                    return Err(Error::parse(ln, "source and target coincide"));
                }
                terminals = Some((s, t));
            }
            "e" => {
                let (_, n, _) = header.ok_or_else(|| Error::parse(ln, "`e` line before `p` line"))?;
                if rest.len() != 3 {
                    return Err(Error::parse(ln, "expected `e <u> <v> <cost>`"));
                }
                let u = vertex(rest[0], n, ln)?;
                let v = vertex(rest[1], n, ln)?;
                if u == v {
                    return Err(Error::parse(ln, format!("self-loop on vertex {u}")));
                }
                edges.push(Edge { u, v, cost: num(rest[2], ln, "cost")? });
                edge_lines.push(ln);
            }
            other => return Err(Error::parse(ln, format!("unknown line type {other:?}"))),
        }
    }

    let (hline, n, m) = header.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing `p path` line"))?;
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges but {} edge lines follow", edges.len()),
        ));
    }
    let graph = Graph::new(n, edges).map_err(|e| {
        // Graph::new numbers edges from 1; map back to the offending line.
        let line = match &e {
            Error::Contract(msg) => msg
                .strip_prefix("edge ")
                .and_then(|r| r.split_whitespace().next())
                .and_then(|k| k.parse::<usize>().ok())
                .and_then(|k| edge_lines.get(k - 1).copied())
                .unwrap_or(hline),
            _ => hline,
        };
        Error::parse(line, e.to_string())
    })?;
    Ok((graph, terminals))
}

pub fn write_graph(g: &Graph, terminals: Option<(VertexId, VertexId)>) -> String {
    let mut out = String::with_capacity(16 * (g.n_edges() + 2));
    let _ = writeln!(out, "p path {} {}", g.n_vertices(), g.n_edges());
    if let Some((s, t)) = terminals {
        let _ = writeln!(out, "t {s} {t}");
    }
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.cost);
    }
    out
}

fn num<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {s:?}")))
}

fn vertex(s: &str, n: u32, line: usize) -> Result<VertexId> {
    let v: VertexId = num(s, line, "vertex")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v)
}

/// One row of a bounding run, shaped like the experiment tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub bound: ExtInt,
    /// `bound / minimum cost`, when both are finite and the minimum is positive.
    pub ratio: Option<f64>,
    #[serde(with = "decimal")]
    pub solutions: BigUint,
    pub zdd_size: u64,
    pub calls: u64,
    pub time_ms: f64,
    pub method: String,
    pub accept_worst: Option<ExtInt>,
    pub reject_best: Option<ExtInt>,
}

impl RunReport {
    /// Ratio of `bound` to `min_cost`, rounded to four decimals.
    pub fn ratio_of(bound: ExtInt, min_cost: ExtInt) -> Option<f64> {
        match (bound, min_cost) {
            (ExtInt::Finite(b), ExtInt::Finite(m)) if m > 0 => {
                Some((b as f64 / m as f64 * 1e4).round() / 1e4)
            }
            _ => None,
        }
    }

    /// Milliseconds rounded to three decimals.
    pub fn millis(d: std::time::Duration) -> f64 {
        (d.as_secs_f64() * 1e6).round() / 1e3
    }
}

pub fn write_report(rows: &[RunReport]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r).expect("report rows always serialize"));
        out.push('\n');
    }
    out
}

pub fn parse_report(text: &str) -> Result<Vec<RunReport>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::parse(i + 1, e.to_string())))
        .collect()
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

//! Named experiment setups: an instance, the path kind, and the bound ratios
//! of its table rows.

use std::path::Path;

use costzdd::{grid_graph, parse_graph, Graph, PathKind, VertexId};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// `n`×`n` grid, corner to corner, costs uniform in [1000, 1999].
    Grid(u32),
    /// External US map file in graph format.
    UsData,
}

#[derive(Debug, Clone, Copy)]
pub struct Preset {
    pub name: &'static str,
    pub source: Source,
    pub kind: PathKind,
    /// Row bounds as multiples of the minimum cost; a last row at the
    /// maximum cost is always added.
    pub ratios: &'static [f64],
}

const HAM_US: &[f64] = &[1.00, 1.01, 1.02, 1.05, 1.10, 1.20, 1.30, 1.40, 1.50];
const HAM_GRID: &[f64] = &[1.00, 1.01, 1.02, 1.03, 1.05, 1.08, 1.10, 1.12];
const HAM_GRID10: &[f64] = &[1.00, 1.01, 1.02, 1.03, 1.05, 1.08, 1.10, 1.12, 1.15];
const SIMPLE_US: &[f64] = &[1.00, 1.10, 1.20, 1.50, 2.00, 2.50, 3.00, 3.50, 4.00, 4.50];
const SIMPLE_GRID6: &[f64] = &[1.00, 1.10, 1.20, 1.50, 2.00, 2.50, 3.00, 3.50, 4.00, 4.50];
const SIMPLE_GRID7: &[f64] = &[1.00, 1.10, 1.20, 1.50, 2.00, 2.50, 3.00, 3.50, 4.00, 4.50, 5.00, 5.50];

pub const PRESETS: &[Preset] = &[
    Preset { name: "us48-ham", source: Source::UsData, kind: PathKind::Hamiltonian, ratios: HAM_US },
    Preset { name: "us48-simple", source: Source::UsData, kind: PathKind::Simple, ratios: SIMPLE_US },
    Preset { name: "grid8-ham", source: Source::Grid(8), kind: PathKind::Hamiltonian, ratios: HAM_GRID },
    Preset { name: "grid10-ham", source: Source::Grid(10), kind: PathKind::Hamiltonian, ratios: HAM_GRID10 },
    Preset { name: "grid6-simple", source: Source::Grid(6), kind: PathKind::Simple, ratios: SIMPLE_GRID6 },
    Preset { name: "grid7-simple", source: Source::Grid(7), kind: PathKind::Simple, ratios: SIMPLE_GRID7 },
];

pub const GRID_COST_LO: i64 = 1000;
pub const GRID_COST_HI: i64 = 1999;

pub fn preset(name: &str) -> CliResult<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name).ok_or_else(|| {
        let names: Vec<_> = PRESETS.iter().map(|p| p.name).collect();
        CliError::usage(format!("unknown preset `{name}` (known: {})", names.join(", ")))
    })
}

impl Preset {
    /// The graph and its terminals. Grid costs come from `seed`; the US map
    /// needs `data` and takes its terminals from the file unless overridden.
    pub fn instance(
        &self,
        seed: u64,
        data: Option<&Path>,
        terminals: Option<(VertexId, VertexId)>,
    ) -> CliResult<(Graph, VertexId, VertexId)> {
        match self.source {
            Source::Grid(n) => {
                let g = grid_graph(n, GRID_COST_LO, GRID_COST_HI, seed)?;
                let (s, t) = terminals.unwrap_or((1, (n + 1) * (n + 1)));
                Ok((g, s, t))
            }
            Source::UsData => {
                let path = data.ok_or_else(|| {
                    CliError::usage(format!("preset `{}` needs --data <US map graph file>", self.name))
                })?;
                let text = crate::read_file(path)?;
                let (g, file_t) = parse_graph(&text)?;
                let (s, t) = terminals.or(file_t).ok_or_else(|| {
                    CliError::usage("US map file has no `t` line; pass --source and --target")
                })?;
                Ok((g, s, t))
            }
        }
    }
}

//! Timing runs over a directory of graph files.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::ValueEnum;
use wtoll::format::parse_graph6_corpus;
use wtoll::{hull, interval, wtc_exact, wth, wtn, Graph, VertexSet};

use crate::input::{self, Format, InputError};

pub const CSV_HEADER: &str = "graph,n,m,op,value,ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Interval,
    Hull,
    Wtn,
    Wth,
    Wtc,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Interval => "interval",
            Op::Hull => "hull",
            Op::Wtn => "wtn",
            Op::Wth => "wth",
            Op::Wtc => "wtc",
        }
    }
}

pub struct BenchOutput {
    pub csv: String,
    pub rows: usize,
    pub warnings: Vec<String>,
}

/// The first non-adjacent pair, or `{0}` when there is none.
fn probe_set(g: &Graph) -> VertexSet {
    match g.non_edges().next() {
        Some((a, b)) => VertexSet::from([a, b]),
        None => (0..g.n().min(1)).collect(),
    }
}

fn run_op(g: &Graph, op: Op) -> wtoll::Result<usize> {
    Ok(match op {
        Op::Interval => interval(g, &probe_set(g)).len(),
        Op::Hull => hull(g, &probe_set(g)).len(),
        Op::Wtn => wtn(g)?.value,
        Op::Wth => wth(g)?.value,
        Op::Wtc => wtc_exact(g)?.value,
    })
}

fn graphs_in(path: &Path) -> Result<Vec<(String, Graph)>, String> {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let text = match input::read_text(path) {
        Ok(text) => text,
        Err(InputError::Io(_, e)) => return Err(e.to_string()),
        Err(e) => return Err(e.to_string()),
    };
    match Format::detect(path) {
        Format::G6 => {
            let graphs = parse_graph6_corpus(&text).map_err(|e| e.to_string())?;
            if graphs.len() == 1 {
                Ok(vec![(name, graphs.into_iter().next().unwrap())])
            } else {
                Ok(graphs
                    .into_iter()
                    .enumerate()
                    .map(|(i, g)| (format!("{name}#{i}"), g))
                    .collect())
            }
        }
        Format::El => {
            let g = input::parse(&text, Format::El).map_err(|e| e.to_string())?;
            Ok(vec![(name, g)])
        }
    }
}

/// Runs `ops` on every `.el` / `.g6` file of `dir` in name order.
pub fn run(dir: &Path, ops: &[Op]) -> std::io::Result<BenchOutput> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();

    let mut out = BenchOutput {
        csv: format!("{CSV_HEADER}\n"),
        rows: 0,
        warnings: Vec::new(),
    };
    for file in files {
        let ext = file.extension().and_then(|e| e.to_str()).unwrap_or("");
        if !matches!(ext, "el" | "g6") {
            out.warnings
                .push(format!("skipping {}: not a .el or .g6 file", file.display()));
            continue;
        }
        let graphs = match graphs_in(&file) {
            Ok(gs) => gs,
            Err(e) => {
                out.warnings.push(format!("skipping {}: {e}", file.display()));
                continue;
            }
        };
        for (name, g) in graphs {
            for &op in ops {
                let start = Instant::now();
                match run_op(&g, op) {
                    Ok(value) => {
                        let ms = start.elapsed().as_secs_f64() * 1000.0;
                        out.csv.push_str(&format!(
                            "{name},{},{},{},{value},{ms:.3}\n",
                            g.n(),
                            g.m(),
                            op.name()
                        ));
                        out.rows += 1;
                    }
                    Err(e) => out.warnings.push(format!("{name}: {}: {e}", op.name())),
                }
            }
        }
    }
    Ok(out)
}

//! `wtoll`: weakly toll convexity from the command line.
//!
//! Reports are JSON on stdout unless `--plain` is given. Exit codes: 0 ok,
//! 1 internal failure, 2 parse or argument error, 3 disconnected input,
//! 4 size cap exceeded.

mod bench;
mod input;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use wtoll::format::{format_set, write_graph6};
use wtoll::generators::{bowtie, complete, cycle, path, random_gnp, star};
use wtoll::twins::classify_extreme;
use wtoll::wtc::wtc_with_cap;
use wtoll::{
    clique_reduction, decompose, extreme_vertices, hull, interval, twin_classes, write_edge_list,
    wth, wtn, Error, Graph, InvariantResult, VertexSet,
};

use bench::Op;
use input::{Fingerprint, Format, InputError};

#[derive(Parser)]
#[command(name = "wtoll", version, about = "Weakly toll convexity on finite simple graphs")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    /// Graph file format; detected from the extension when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weakly toll interval I(S).
    Interval {
        /// Graph file, or `-` for stdin.
        graph: PathBuf,
        #[arg(required = true)]
        vertices: Vec<usize>,
    },
    /// Weakly toll convex hull H(S).
    Hull {
        graph: PathBuf,
        #[arg(required = true)]
        vertices: Vec<usize>,
    },
    /// Interval number.
    Wtn { graph: PathBuf },
    /// Hull number.
    Wth { graph: PathBuf },
    /// Convexity number.
    Wtc {
        graph: PathBuf,
        /// Largest order accepted by the exhaustive search.
        #[arg(long, default_value_t = wtoll::wtc::DEFAULT_CAP)]
        cap: usize,
    },
    /// Atoms of the clique-separator decomposition.
    Decompose { graph: PathBuf },
    /// True-twin classes.
    Twins { graph: PathBuf },
    /// Extreme vertices.
    Extreme { graph: PathBuf },
    /// Write a graph from a named family.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Output file; stdout when omitted.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Time operations over every .el/.g6 file in a directory; CSV output.
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "interval,hull,wtn,wth")]
        ops: Vec<Op>,
        /// CSV file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// K_{1,leaves} with center 0.
    Star { leaves: usize },
    Bowtie,
    RandomGnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Prime graph G' with a k-clique iff the input has one.
    CliqueReduction { graph: PathBuf, k: usize },
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    input: Fingerprint,
    result: Value,
    ms: f64,
}

#[derive(Debug)]
enum Failure {
    Input(InputError),
    Solver(Error),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) | Failure::Io(_) => 2,
            Failure::Solver(e) => match e {
                Error::Parse { .. } | Error::Graph6(_) | Error::Argument(_) => 2,
                Error::Disconnected => 3,
                Error::CapExceeded { .. } => 4,
                Error::Internal(_) => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(e) => e.to_string(),
            Failure::Solver(e) => e.to_string(),
            Failure::Io(s) => s.clone(),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Solver(e)
    }
}

fn vertex_set(g: &Graph, vertices: &[usize]) -> Result<VertexSet, Failure> {
    let s: VertexSet = vertices.iter().copied().collect();
    g.check_set(&s)?;
    Ok(s)
}

fn invariant_plain(r: &InvariantResult) -> String {
    format!(
        "value {}\nwitness {}\ncase {}",
        r.value,
        format_set(r.witness.iter()),
        r.case_tag.as_str()
    )
}

/// Runs a graph command and returns (JSON payload, plain text).
fn analyse(command: &Command, g: &Graph) -> Result<(Value, String), Failure> {
    let out = match command {
        Command::Interval { vertices, .. } | Command::Hull { vertices, .. } => {
            let s = vertex_set(g, vertices)?;
            let r = if matches!(command, Command::Interval { .. }) {
                interval(g, &s)
            } else {
                hull(g, &s)
            };
            (json!({ "set": s, "value": r }), format_set(r.iter()))
        }
        Command::Wtn { .. } => {
            let r = wtn(g)?;
            (serde_json::to_value(&r).unwrap(), invariant_plain(&r))
        }
        Command::Wth { .. } => {
            let r = wth(g)?;
            (serde_json::to_value(&r).unwrap(), invariant_plain(&r))
        }
        Command::Wtc { cap, .. } => {
            let r = wtc_with_cap(g, *cap)?;
            (serde_json::to_value(&r).unwrap(), invariant_plain(&r))
        }
        Command::Decompose { .. } => {
            let d = decompose(g)?;
            let mut plain = Vec::new();
            let atoms: Vec<Value> = (0..d.len())
                .map(|i| {
                    plain.push(format!(
                        "atom {i} {} shared {} exclusive {}{}",
                        format_set(d.atoms[i].iter()),
                        format_set(d.shared[i].iter()),
                        format_set(d.exclusive[i].iter()),
                        if d.extremal[i] { " extremal" } else { "" }
                    ));
                    json!({
                        "vertices": d.atoms[i],
                        "shared": d.shared[i],
                        "exclusive": d.exclusive[i],
                        "extremal": d.extremal[i],
                        "partner": d.extremal_partner[i],
                    })
                })
                .collect();
            (json!({ "prime": d.is_prime(), "atoms": atoms }), plain.join("\n"))
        }
        Command::Twins { .. } => {
            let p = twin_classes(g);
            let ext = classify_extreme(g, &p, &extreme_vertices(g))?;
            let plain = p
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mark = if ext.classes.contains(&i) { " extreme" } else { "" };
                    format!("{}{mark}", format_set(c.iter()))
                })
                .collect::<Vec<_>>()
                .join("\n");
            (
                json!({ "classes": p.classes, "extreme_classes": ext.classes }),
                plain,
            )
        }
        Command::Extreme { .. } => {
            let ext = extreme_vertices(g);
            (json!({ "extreme": ext }), format_set(ext.iter()))
        }
        Command::Generate { .. } | Command::Bench { .. } => unreachable!("handled separately"),
    };
    Ok(out)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Interval { .. } => "interval",
        Command::Hull { .. } => "hull",
        Command::Wtn { .. } => "wtn",
        Command::Wth { .. } => "wth",
        Command::Wtc { .. } => "wtc",
        Command::Decompose { .. } => "decompose",
        Command::Twins { .. } => "twins",
        Command::Extreme { .. } => "extreme",
        Command::Generate { .. } => "generate",
        Command::Bench { .. } => "bench",
    }
}

fn graph_path(c: &Command) -> &Path {
    match c {
        Command::Interval { graph, .. }
        | Command::Hull { graph, .. }
        | Command::Wtn { graph }
        | Command::Wth { graph }
        | Command::Wtc { graph, .. }
        | Command::Decompose { graph }
        | Command::Twins { graph }
        | Command::Extreme { graph } => graph,
        Command::Generate { .. } | Command::Bench { .. } => unreachable!("no single graph input"),
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(family: &Family, format: Option<Format>) -> Result<String, Failure> {
    let render = |g: &Graph| match format {
        Some(Format::G6) => format!("{}\n", write_graph6(g)),
        _ => write_edge_list(g),
    };
    let g = match family {
        Family::Path { n } => path(*n),
        Family::Cycle { n } => {
            if *n < 3 {
                return Err(Error::Argument(format!("a cycle needs at least 3 vertices, got {n}")).into());
            }
            cycle(*n)
        }
        Family::Complete { n } => complete(*n),
        Family::Star { leaves } => star(*leaves),
        Family::Bowtie => bowtie(),
        Family::RandomGnp { n, p, seed } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::Argument(format!("edge probability {p} is outside [0, 1]")).into());
            }
            random_gnp(*n, *p, *seed)
        }
        Family::CliqueReduction { graph, k } => {
            let source = input::load(graph, None)?;
            let r = clique_reduction(&source, *k)?;
            return Ok(match format {
                Some(Format::G6) => render(&r.g_prime),
                _ => r.to_edge_list(),
            });
        }
    };
    Ok(render(&g))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Generate { family, out } => {
            let text = generate(family, cli.format)?;
            write_output(out.as_deref(), &text)
        }
        Command::Bench { dir, ops, out } => {
            let result = bench::run(dir, ops)
                .map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
            for w in &result.warnings {
                eprintln!("warning: {w}");
            }
            write_output(out.as_deref(), &result.csv)?;
            if out.is_some() && !cli.plain {
                let summary = json!({
                    "command": "bench",
                    "rows": result.rows,
                    "skipped": result.warnings.len(),
                });
                println!("{summary}");
            }
            Ok(())
        }
        command => {
            let g = input::load(graph_path(command), cli.format)?;
            let start = Instant::now();
            let (payload, plain) = analyse(command, &g)?;
            let ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
            if cli.plain {
                println!("{plain}");
            } else {
                let report = RunReport {
                    command: command_name(command),
                    input: Fingerprint::of(&g),
                    result: payload,
                    ms,
                };
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

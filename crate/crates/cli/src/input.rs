//! Reading graphs from files or stdin.

use std::fmt;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use sha2::{Digest, Sha256};
use wtoll::{parse_edge_list, parse_graph6, write_edge_list, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Edge list: `n m` header, then `m` lines `u v`.
    El,
    /// graph6, one graph on the first non-empty line.
    G6,
}

impl Format {
    /// `.g6` means graph6, anything else an edge list.
    pub fn detect(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("g6") => Format::G6,
            _ => Format::El,
        }
    }
}

/// Failure to obtain a graph: I/O or a malformed file.
#[derive(Debug)]
pub enum InputError {
    Io(String, std::io::Error),
    Graph(String, wtoll::Error),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(name, e) => write!(f, "{name}: {e}"),
            InputError::Graph(name, e) => write!(f, "{name}: {e}"),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    let name = path.display().to_string();
    if name == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| InputError::Io(name, e))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError::Io(name, e))
    }
}

pub fn parse(text: &str, format: Format) -> wtoll::Result<Graph> {
    match format {
        Format::El => parse_edge_list(text),
        Format::G6 => {
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            parse_graph6(line)
        }
    }
}

pub fn load(path: &Path, forced: Option<Format>) -> Result<Graph, InputError> {
    let text = read_text(path)?;
    let format = forced.unwrap_or_else(|| Format::detect(path));
    parse(&text, format).map_err(|e| InputError::Graph(path.display().to_string(), e))
}

/// Order, size and a SHA-256 of the canonical edge list.
#[derive(Debug, Clone, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub m: usize,
    pub sha256: String,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        let digest = Sha256::digest(write_edge_list(g).as_bytes());
        Fingerprint {
            n: g.n(),
            m: g.m(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

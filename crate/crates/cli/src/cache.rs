//! Enumerations persisted as line-delimited JSON, guarded by a checksum.
//!
//! The first line is a header `{"n", "kind", "count", "sha256"}`; each further
//! line is one object. The checksum covers the object lines, newlines
//! included.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use tamari_cubic::cells::enumerate_cells;
use tamari_cubic::cubic::enumerate_cc;
use tamari_cubic::diagrams::enumerate_tid;
use tamari_cubic::intervalposets::{enumerate_interval_posets, enumerate_intervals};

pub const CACHE_DIR_ENV: &str = "CUBIC_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Cc,
    Tid,
    TreePair,
    IntervalPoset,
    Cell,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Cc => "cc",
            Kind::Tid => "tid",
            Kind::TreePair => "tree-pair",
            Kind::IntervalPoset => "interval-poset",
            Kind::Cell => "cell",
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct Header {
    n: usize,
    kind: Kind,
    count: usize,
    sha256: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoadStatus {
    Hit,
    /// The file was missing, unreadable or failed its checksum.
    Rebuilt,
}

/// One JSON line per object, in enumeration order.
pub fn enumerate_lines(kind: Kind, n: usize) -> Vec<String> {
    fn lines<T: Serialize>(items: Vec<T>) -> Vec<String> {
        items.iter().map(|x| serde_json::to_string(x).expect("serializable")).collect()
    }
    match kind {
        Kind::Cc => lines(enumerate_cc(n)),
        Kind::Tid => lines(enumerate_tid(n)),
        Kind::TreePair => lines(enumerate_intervals(n)),
        Kind::IntervalPoset => lines(enumerate_interval_posets(n)),
        Kind::Cell => lines(enumerate_cells(n)),
    }
}

pub fn path_for(dir: &Path, kind: Kind, n: usize) -> PathBuf {
    dir.join(format!("{}-{n}.jsonl", kind.name()))
}

fn digest(lines: &[String]) -> String {
    let mut h = Sha256::new();
    for l in lines {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

pub fn build(dir: &Path, kind: Kind, n: usize) -> Result<PathBuf> {
    let lines = enumerate_lines(kind, n);
    let header = Header { n, kind, count: lines.len(), sha256: digest(&lines) };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut body = serde_json::to_string(&header)?;
    body.push('\n');
    for l in &lines {
        body.push_str(l);
        body.push('\n');
    }
    let path = path_for(dir, kind, n);
    fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}

fn read_verified(path: &Path, kind: Kind, n: usize) -> Option<Vec<String>> {
    let text = fs::read_to_string(path).ok()?;
    let mut it = text.lines();
    let header: Header = serde_json::from_str(it.next()?).ok()?;
    let lines: Vec<String> = it.map(str::to_owned).collect();
    let ok = header.n == n && header.kind == kind && header.count == lines.len() && header.sha256 == digest(&lines);
    ok.then_some(lines)
}

/// Loads a cached enumeration, rebuilding it when absent or corrupt.
pub fn load(dir: &Path, kind: Kind, n: usize) -> Result<(Vec<String>, LoadStatus)> {
    let path = path_for(dir, kind, n);
    if let Some(lines) = read_verified(&path, kind, n) {
        return Ok((lines, LoadStatus::Hit));
    }
    build(dir, kind, n)?;
    let lines = read_verified(&path, kind, n).context("cache file unreadable after rebuild")?;
    Ok((lines, LoadStatus::Rebuilt))
}

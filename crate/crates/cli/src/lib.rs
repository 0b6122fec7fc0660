//! Command-line front end: enumeration, conversion, checks, export and
//! caching of cubic coordinates.

pub mod cache;
pub mod check;
pub mod convert;
pub mod export;

use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tamari_cubic::cells::{cell_volume, enumerate_cells, gamma};
use tamari_cubic::cubic::cc_lattice;
use tamari_cubic::trees::enumerate_trees;

use crate::cache::{Kind, LoadStatus, CACHE_DIR_ENV};
use crate::check::Suite;
use crate::convert::Repr;
use crate::export::RealizationGraph;

/// Largest size accepted by enumeration commands without `--cap-override`.
pub const ENUMERATION_CAP: usize = 6;
/// Largest size accepted by the shelling check without `--cap-override`.
pub const SHELLING_CAP: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "cubic", version, about = "Cubic coordinates of Tamari intervals")]
pub struct Cli {
    /// Allow sizes above the default caps.
    #[arg(long, global = true)]
    pub cap_override: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count coordinates, synchronized ones, cells, trees and covers.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
    },
    /// Convert an interval between representations.
    Convert {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
        /// The object to convert, or `-` to read standard input.
        input: String,
    },
    /// Export the cover graph of CC(n).
    Export {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run an invariant suite on every size up to n.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
        /// Instead of a report, print every comparable pair of size n with
        /// its increasing chain and labels, one JSON object per line.
        #[arg(long)]
        certificates: bool,
    },
    /// List the cells of size n.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
    },
    /// Cell volumes of size n, one line per cell, then the total.
    Volume {
        #[arg(long)]
        n: usize,
    },
    /// Build or load cached enumerations.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    Build(CacheArgs),
    Load(CacheArgs),
}

#[derive(Debug, clap::Args)]
pub struct CacheArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "cc")]
    pub kind: Kind,
    #[arg(long, env = CACHE_DIR_ENV, default_value = ".cubic-cache")]
    pub cache_dir: PathBuf,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct Counts {
    pub n: usize,
    pub cc: usize,
    pub synchronized: usize,
    pub cells: usize,
    pub trees: usize,
    pub edges: usize,
}

pub fn counts(n: usize) -> Counts {
    let lat = cc_lattice(n);
    Counts {
        n,
        cc: lat.len(),
        synchronized: lat.elements().iter().filter(|c| c.is_synchronized()).count(),
        cells: enumerate_cells(n).len(),
        trees: enumerate_trees(n).len(),
        edges: lat.edge_count(),
    }
}

fn enforce_cap(n: usize, cap: usize, what: &str, override_: bool, err: &mut dyn Write) -> Result<()> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    if n > cap {
        if !override_ {
            bail!("n={n} exceeds the {what} cap of {cap}; pass --cap-override to proceed");
        }
        writeln!(err, "warning: n={n} exceeds the {what} cap of {cap}, this may be slow")?;
    }
    Ok(())
}

/// Runs one command; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let over = cli.cap_override;
    match cli.command {
        Command::Count { n, format } => {
            enforce_cap(n, ENUMERATION_CAP, "enumeration", over, err)?;
            let c = counts(n);
            match format {
                Output::Json => writeln!(out, "{}", serde_json::to_string(&c)?)?,
                Output::Text => {
                    for (k, v) in [("cc", c.cc), ("synchronized", c.synchronized), ("cells", c.cells), ("trees", c.trees), ("edges", c.edges)] {
                        writeln!(out, "{k} {v}")?;
                    }
                }
            }
        }
        Command::Convert { from, to, format, input } => {
            let input = if input == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                input
            };
            writeln!(out, "{}", convert::convert(&input, from, to, format == Output::Json)?)?;
        }
        Command::Export { n, format, output } => {
            enforce_cap(n, ENUMERATION_CAP, "enumeration", over, err)?;
            let g = RealizationGraph::new(n);
            let text = match format {
                GraphFormat::Json => serde_json::to_string(&g)? + "\n",
                GraphFormat::Dot => g.to_dot(),
            };
            match output {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Check { suite, n, format, certificates } => {
            enforce_cap(n, ENUMERATION_CAP, "enumeration", over, err)?;
            if matches!(suite, Suite::Shelling | Suite::All) || certificates {
                enforce_cap(n, SHELLING_CAP, "shelling", over, err)?;
            }
            if certificates {
                for c in tamari_cubic::shelling::certificates(n) {
                    writeln!(out, "{}", serde_json::to_string(&c)?)?;
                }
                return Ok(0);
            }
            let report = check::run(suite, n);
            match format {
                Output::Json => {
                    #[derive(Serialize)]
                    struct Tagged<'a> {
                        suite: Suite,
                        n: usize,
                        passed: bool,
                        #[serde(flatten)]
                        report: &'a check::Report,
                    }
                    let t = Tagged { suite, n, passed: report.passed(), report: &report };
                    writeln!(out, "{}", serde_json::to_string(&t)?)?;
                }
                Output::Text => {
                    for note in &report.notes {
                        writeln!(out, "{note}")?;
                    }
                    let status = if report.passed() { "PASS" } else { "FAIL" };
                    writeln!(out, "{status} {suite:?} up to n={n}: {} checks, {} failures", report.checks, report.failures.len())?;
                    if let Some(first) = report.failures.first() {
                        writeln!(out, "first counterexample: {first}")?;
                    }
                }
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Cells { n, format } => {
            enforce_cap(n, ENUMERATION_CAP, "enumeration", over, err)?;
            for cell in enumerate_cells(n) {
                match format {
                    Output::Json => writeln!(out, "{}", serde_json::to_string(&cell)?)?,
                    Output::Text => writeln!(
                        out,
                        "{} {} gamma={} volume={}",
                        cell.c_min(),
                        cell.c_max(),
                        gamma(&cell),
                        cell_volume(&cell)
                    )?,
                }
            }
        }
        Command::Volume { n } => {
            enforce_cap(n, ENUMERATION_CAP, "enumeration", over, err)?;
            let mut total = 0;
            for cell in enumerate_cells(n) {
                let v = cell_volume(&cell);
                total += v;
                writeln!(out, "{} {} {}", cell.c_min(), cell.c_max(), v)?;
            }
            writeln!(out, "total {total}")?;
        }
        Command::Cache { action } => match action {
            CacheAction::Build(a) => {
                enforce_cap(a.n, ENUMERATION_CAP, "enumeration", over, err)?;
                let path = cache::build(&a.cache_dir, a.kind, a.n)?;
                writeln!(out, "wrote {}", path.display())?;
            }
            CacheAction::Load(a) => {
                enforce_cap(a.n, ENUMERATION_CAP, "enumeration", over, err)?;
                let (lines, status) = cache::load(&a.cache_dir, a.kind, a.n)?;
                if status == LoadStatus::Rebuilt {
                    writeln!(err, "cache missing or corrupt, rebuilt")?;
                }
                writeln!(out, "{} objects ({})", lines.len(), if status == LoadStatus::Hit { "hit" } else { "rebuilt" })?;
            }
        },
    }
    Ok(0)
}

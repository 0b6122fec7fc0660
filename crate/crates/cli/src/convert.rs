//! Conversion between the four textual representations of an interval.

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::de::DeserializeOwned;

use tamari_cubic::cubic::{psi, psi_inv};
use tamari_cubic::intervalposets::{chi, chi_inv, rho, rho_inv};
use tamari_cubic::{CubicCoordinate, IntervalPoset, TamariInterval, TamariIntervalDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    /// Lower and upper trees as balanced parentheses, e.g. `(()) ()()`.
    TreePair,
    /// JSON object with `n`, `decreasing` and `increasing` relations.
    IntervalPoset,
    /// Diagram pair as two comma lists, e.g. `2,0,0 0,0,1`.
    Tid,
    /// Cubic coordinate, e.g. `(2,0,-2,1)`.
    Cc,
}

pub const ALL_REPRS: [Repr; 4] = [Repr::TreePair, Repr::IntervalPoset, Repr::Tid, Repr::Cc];

fn looks_like_json(s: &str) -> bool {
    matches!(s.trim_start().chars().next(), Some('{') | Some('['))
}

fn parse_either<T: DeserializeOwned + std::str::FromStr>(s: &str) -> Result<T>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    if looks_like_json(s) {
        serde_json::from_str(s).context("invalid JSON input")
    } else {
        s.trim().parse().context("invalid input")
    }
}

/// Reads `input` in representation `from`, as text or as JSON.
pub fn parse(input: &str, from: Repr) -> Result<TamariInterval> {
    Ok(match from {
        Repr::TreePair => parse_either::<TamariInterval>(input)?,
        Repr::IntervalPoset => {
            let p: IntervalPoset = serde_json::from_str(input).context("invalid interval-poset")?;
            rho(&p)
        }
        Repr::Tid => rho(&chi(&parse_either::<TamariIntervalDiagram>(input)?)),
        Repr::Cc => psi_inv(&parse_either::<CubicCoordinate>(input)?),
    })
}

/// Writes `iv` in representation `to`; interval-posets are always JSON.
pub fn emit(iv: &TamariInterval, to: Repr, json: bool) -> Result<String> {
    let p = rho_inv(iv);
    Ok(match (to, json) {
        (Repr::TreePair, false) => iv.to_string(),
        (Repr::TreePair, true) => serde_json::to_string(iv)?,
        (Repr::IntervalPoset, _) => serde_json::to_string(&p)?,
        (Repr::Tid, false) => chi_inv(&p).to_string(),
        (Repr::Tid, true) => serde_json::to_string(&chi_inv(&p))?,
        (Repr::Cc, _) if iv.size() == 0 => bail!("the empty interval has no cubic coordinate"),
        (Repr::Cc, false) => psi(iv).to_string(),
        (Repr::Cc, true) => serde_json::to_string(&psi(iv))?,
    })
}

pub fn convert(input: &str, from: Repr, to: Repr, json: bool) -> Result<String> {
    emit(&parse(input, from)?, to, json)
}

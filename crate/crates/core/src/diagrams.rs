//! Tamari diagrams (bracket vectors), their duals, and Tamari interval
//! diagrams.
//!
//! A Tamari diagram `u` of size `n` satisfies
//!
//! * (i) `0 <= u_i <= n - i`,
//! * (ii) `u_{i+j} <= u_i - j` for every `j` in `0..=u_i`,
//!
//! and a dual Tamari diagram `v` is a word whose mirror image is a Tamari
//! diagram. A compatible pair `(u, v)` is a Tamari interval diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trees;

/// Word encoding a binary tree by the sizes of the right subtrees, in infix
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct TamariDiagram(Vec<usize>);

/// Word encoding a binary tree by the sizes of the left subtrees, in infix
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DualTamariDiagram(Vec<usize>);

/// Checks both Tamari diagram conditions and reports the first failure,
/// scanning positions left to right and, at each position, condition (i)
/// before condition (ii).
pub fn validate_tamari_diagram(word: &[usize]) -> Result<()> {
    let n = word.len();
    for i in 1..=n {
        let ui = word[i - 1];
        if ui > n - i {
            return Err(Error::DiagramBound { index: i, value: ui, bound: n - i });
        }
        for j in 1..=ui {
            if word[i + j - 1] + j > ui {
                return Err(Error::DiagramNesting { i, j });
            }
        }
    }
    Ok(())
}

/// Mirror of [`validate_tamari_diagram`] for dual diagrams.
pub fn validate_dual_tamari_diagram(word: &[usize]) -> Result<()> {
    for i in 1..=word.len() {
        let vi = word[i - 1];
        if vi > i - 1 {
            return Err(Error::DualDiagramBound { index: i, value: vi, bound: i - 1 });
        }
        for j in 1..=vi {
            if word[i - j - 1] + j > vi {
                return Err(Error::DualDiagramNesting { i, j });
            }
        }
    }
    Ok(())
}

impl TamariDiagram {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        validate_tamari_diagram(&word)?;
        Ok(TamariDiagram(word))
    }

    pub(crate) fn new_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(validate_tamari_diagram(&word).is_ok());
        TamariDiagram(word)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Componentwise comparison. On Tamari diagrams this is the Tamari order.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl DualTamariDiagram {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        validate_dual_tamari_diagram(&word)?;
        Ok(DualTamariDiagram(word))
    }

    pub(crate) fn new_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(validate_dual_tamari_diagram(&word).is_ok());
        DualTamariDiagram(word)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// The reversed word, which is a Tamari diagram.
    pub fn reversed(&self) -> TamariDiagram {
        TamariDiagram::new_unchecked(self.0.iter().rev().copied().collect())
    }
}

impl TryFrom<Vec<usize>> for TamariDiagram {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        TamariDiagram::new(word)
    }
}

impl TryFrom<Vec<usize>> for DualTamariDiagram {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        DualTamariDiagram::new(word)
    }
}

impl From<TamariDiagram> for Vec<usize> {
    fn from(d: TamariDiagram) -> Self {
        d.0
    }
}

impl From<DualTamariDiagram> for Vec<usize> {
    fn from(d: DualTamariDiagram) -> Self {
        d.0
    }
}

fn first_incompatibility(u: &[usize], v: &[usize]) -> Option<(usize, usize)> {
    let n = u.len();
    for i in 1..=n {
        for j in (i + 1)..=(i + u[i - 1]).min(n) {
            if v[j - 1] >= j - i {
                return Some((i, j));
            }
        }
    }
    None
}

/// Whether `u_i >= j - i` implies `v_j < j - i` for all `i < j`.
pub fn compatible(u: &TamariDiagram, v: &DualTamariDiagram) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch { left: u.len(), right: v.len() });
    }
    Ok(first_incompatibility(&u.0, &v.0).is_none())
}

/// Compatible pair of a Tamari diagram and a dual Tamari diagram of the same
/// size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTid")]
pub struct TamariIntervalDiagram {
    u: TamariDiagram,
    v: DualTamariDiagram,
}

#[derive(Deserialize)]
struct RawTid {
    u: Vec<usize>,
    v: Vec<usize>,
}

impl TryFrom<RawTid> for TamariIntervalDiagram {
    type Error = Error;
    fn try_from(raw: RawTid) -> Result<Self> {
        TamariIntervalDiagram::from_words(raw.u, raw.v)
    }
}

impl TamariIntervalDiagram {
    pub fn new(u: TamariDiagram, v: DualTamariDiagram) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::SizeMismatch { left: u.len(), right: v.len() });
        }
        if let Some((i, j)) = first_incompatibility(&u.0, &v.0) {
            return Err(Error::Incompatible { i, j });
        }
        Ok(TamariIntervalDiagram { u, v })
    }

    /// Validates both words and their compatibility.
    pub fn from_words(u: Vec<usize>, v: Vec<usize>) -> Result<Self> {
        TamariIntervalDiagram::new(TamariDiagram::new(u)?, DualTamariDiagram::new(v)?)
    }

    pub(crate) fn new_unchecked(u: Vec<usize>, v: Vec<usize>) -> Self {
        let d = TamariIntervalDiagram { u: TamariDiagram(u), v: DualTamariDiagram(v) };
        debug_assert!(validate_tamari_diagram(&d.u.0).is_ok());
        debug_assert!(validate_dual_tamari_diagram(&d.v.0).is_ok());
        debug_assert!(first_incompatibility(&d.u.0, &d.v.0).is_none());
        d
    }

    pub fn u(&self) -> &TamariDiagram {
        &self.u
    }

    pub fn v(&self) -> &DualTamariDiagram {
        &self.v
    }

    pub fn size(&self) -> usize {
        self.u.len()
    }

    /// For every `i < n`, at least one of `u_i` and `v_{i+1}` is non-zero.
    pub fn is_synchronized(&self) -> bool {
        (1..self.size()).all(|i| self.u.get(i) != 0 || self.v.get(i + 1) != 0)
    }

    /// New Tamari interval diagrams: strict bounds on both words and no pair
    /// `k + 1 < l` with `u_k` and `v_l` both reaching `l - k - 1`.
    pub fn is_new(&self) -> Result<bool> {
        let n = self.size();
        if n < 3 {
            return Err(Error::SizeTooSmall { size: n, min: 3 });
        }
        if (1..n).any(|i| self.u.get(i) > n - i - 1) {
            return Ok(false);
        }
        if (2..=n).any(|j| self.v.get(j) > j - 2) {
            return Ok(false);
        }
        for k in 1..=n {
            for l in (k + 2)..=n {
                let bound = l - k - 1;
                if self.u.get(k) >= bound && self.v.get(l) >= bound {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn join_word(word: &[usize]) -> String {
    word.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_word(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

/// Text form: two space-separated comma-joined lists, `u` then `v`.
impl fmt::Display for TamariIntervalDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", join_word(&self.u.0), join_word(&self.v.0))
    }
}

impl FromStr for TamariIntervalDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            [] => TamariIntervalDiagram::from_words(Vec::new(), Vec::new()),
            [u, v] => TamariIntervalDiagram::from_words(parse_word(u)?, parse_word(v)?),
            _ => Err(Error::Parse(format!("expected two words, got {}", parts.len()))),
        }
    }
}

/// All Tamari interval diagrams of size `n`, sorted by `(u, v)`.
pub fn enumerate_tid(n: usize) -> Vec<TamariIntervalDiagram> {
    let all = trees::enumerate_trees(n);
    let mut us: Vec<TamariDiagram> = all.iter().map(|t| t.tamari_diagram()).collect();
    let mut vs: Vec<DualTamariDiagram> = all.iter().map(|t| t.dual_tamari_diagram()).collect();
    us.sort();
    vs.sort();
    let mut out = Vec::new();
    for u in &us {
        for v in &vs {
            if first_incompatibility(&u.0, &v.0).is_none() {
                out.push(TamariIntervalDiagram { u: u.clone(), v: v.clone() });
            }
        }
    }
    out
}

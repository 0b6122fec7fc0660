//! The edge labelling `λ(c, c') = (ε, i, c_i)` of the cubic coordinate
//! lattice and an exhaustive check that it is an EL-labelling.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cubic::{cc_lattice, cc_leq, chain_between, covers, min_increase, CcLattice, CubicCoordinate};
use crate::error::{Error, Result};

/// `(ε, i, c_i)`, compared lexicographically. `epsilon` is `-1` when `c_i`
/// is negative and `1` otherwise; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(i8, usize, i32)", try_from = "(i8, usize, i32)")]
pub struct ELLabel {
    pub epsilon: i8,
    pub index: usize,
    pub value: i32,
}

impl From<ELLabel> for (i8, usize, i32) {
    fn from(l: ELLabel) -> Self {
        (l.epsilon, l.index, l.value)
    }
}

impl TryFrom<(i8, usize, i32)> for ELLabel {
    type Error = Error;
    fn try_from((epsilon, index, value): (i8, usize, i32)) -> Result<Self> {
        if epsilon != if value < 0 { -1 } else { 1 } {
            return Err(Error::Parse(format!("sign {epsilon} does not match value {value}")));
        }
        Ok(ELLabel { epsilon, index, value })
    }
}

impl fmt::Display for ELLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.epsilon, self.index, self.value)
    }
}

fn label_at(c: &[i32], d: &[i32]) -> ELLabel {
    let k = c.iter().zip(d).position(|(a, b)| a != b).expect("distinct endpoints");
    let value = c[k];
    ELLabel { epsilon: if value < 0 { -1 } else { 1 }, index: k + 1, value }
}

/// Label of the cover `c ⋖ d`.
pub fn lambda(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<ELLabel> {
    if c.size() != d.size() || !covers(c).contains(d) {
        return Err(Error::NotACover);
    }
    Ok(label_at(c.as_slice(), d.as_slice()))
}

/// Consecutive cover relations with their labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturatedChain {
    pub elements: Vec<CubicCoordinate>,
    pub labels: Vec<ELLabel>,
}

impl SaturatedChain {
    pub fn new(elements: Vec<CubicCoordinate>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::NotComparable);
        }
        let labels = elements.windows(2).map(|w| lambda(&w[0], &w[1])).collect::<Result<_>>()?;
        Ok(SaturatedChain { elements, labels })
    }

    /// Number of cover relations.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_increasing(&self) -> bool {
        is_increasing(&self.labels)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        is_weakly_decreasing(&self.labels)
    }
}

fn is_increasing(w: &[ELLabel]) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

fn is_weakly_decreasing(w: &[ELLabel]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

/// The λ-increasing chain: negative components first, then the others, both
/// passes left to right.
pub fn increasing_chain(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<SaturatedChain> {
    SaturatedChain::new(chain_between(c, d)?)
}

/// Changes every differing non-negative component in one step, right to
/// left, then every differing negative component in one step, right to
/// left. `None` when some step is not a cover.
pub fn weakly_decreasing_chain(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<Option<SaturatedChain>> {
    if !cc_leq(c, d)? {
        return Err(Error::NotComparable);
    }
    let m = c.size() - 1;
    let differs = |i: usize| c.get(i) != d.get(i);
    let order = (1..=m).rev().filter(|&i| differs(i) && c.get(i) >= 0).chain((1..=m).rev().filter(|&i| differs(i) && c.get(i) < 0));
    let mut chain = vec![c.clone()];
    for i in order {
        // A component crossing zero takes at least two steps.
        if c.get(i) < 0 && d.get(i) > 0 {
            return Ok(None);
        }
        match min_increase(chain.last().unwrap(), i) {
            Some(next) if next.get(i) == d.get(i) => chain.push(next),
            _ => return Ok(None),
        }
    }
    Ok(Some(SaturatedChain::new(chain)?))
}

/// Every saturated chain from `c` to `d`, by depth-first traversal of covers.
pub fn all_saturated_chains(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<Vec<SaturatedChain>> {
    if !cc_leq(c, d)? {
        return Err(Error::NotComparable);
    }
    let lat = cc_lattice(c.size());
    let (a, b) = (lat.index_of(c).unwrap(), lat.index_of(d).unwrap());
    let mut out = Vec::new();
    walk_chains(&lat, a, b, &mut vec![a], &mut |path| {
        let elements = path.iter().map(|&k| lat.get(k).clone()).collect();
        out.push(SaturatedChain::new(elements).expect("walked along covers"));
    });
    Ok(out)
}

fn walk_chains(lat: &CcLattice, at: usize, goal: usize, path: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if at == goal {
        visit(path);
        return;
    }
    for &next in lat.up(at) {
        if lat.leq(next, goal) {
            path.push(next);
            walk_chains(lat, next, goal, path, visit);
            path.pop();
        }
    }
}

/// What the verifier checked for each comparable pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShellingMode {
    /// Uniqueness and minimality of the increasing chain, and uniqueness of
    /// the weakly decreasing one, over all saturated chains.
    Full,
    /// Uniqueness of the increasing chain only, found by a pruned search.
    IncreasingOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingReport {
    pub n: usize,
    pub mode: ShellingMode,
    pub pairs: usize,
    pub failures: Vec<String>,
}

impl ShellingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Above this size only the increasing chains are checked.
pub const FULL_SHELLING_MAX: usize = 4;

/// Checks the EL property on every comparable pair of `CC(n)`. Sizes up to
/// [`FULL_SHELLING_MAX`] get the full check.
pub fn verify_el_shellability(n: usize) -> ShellingReport {
    let mode = if n <= FULL_SHELLING_MAX { ShellingMode::Full } else { ShellingMode::IncreasingOnly };
    verify_with(n, mode)
}

pub fn verify_with(n: usize, mode: ShellingMode) -> ShellingReport {
    let lat = cc_lattice(n);
    let mut report = ShellingReport { n, mode, pairs: 0, failures: Vec::new() };
    for a in 0..lat.len() {
        for b in 0..lat.len() {
            if !lat.leq(a, b) {
                continue;
            }
            report.pairs += 1;
            let result = match mode {
                ShellingMode::Full => check_pair_full(&lat, a, b),
                ShellingMode::IncreasingOnly => check_pair_increasing(&lat, a, b),
            };
            if let Err(msg) = result {
                report.failures.push(format!("{} -> {}: {msg}", lat.get(a), lat.get(b)));
            }
        }
    }
    report
}

fn word(lat: &CcLattice, path: &[usize]) -> Vec<ELLabel> {
    path.windows(2).map(|w| label_at(lat.get(w[0]).as_slice(), lat.get(w[1]).as_slice())).collect()
}

fn elements(lat: &CcLattice, path: &[usize]) -> Vec<CubicCoordinate> {
    path.iter().map(|&k| lat.get(k).clone()).collect()
}

fn check_pair_full(lat: &CcLattice, a: usize, b: usize) -> std::result::Result<(), String> {
    let (c, d) = (lat.get(a), lat.get(b));
    let mut increasing = Vec::new();
    let mut decreasing = Vec::new();
    let mut words = Vec::new();
    walk_chains(lat, a, b, &mut vec![a], &mut |path| {
        let w = word(lat, path);
        if is_increasing(&w) {
            increasing.push(elements(lat, path));
        }
        if is_weakly_decreasing(&w) {
            decreasing.push(elements(lat, path));
        }
        words.push(w);
    });
    if increasing.len() != 1 {
        return Err(format!("{} increasing chains", increasing.len()));
    }
    let canonical = increasing_chain(c, d).map_err(|e| e.to_string())?;
    if canonical.elements != increasing[0] {
        return Err("increasing chain differs from the canonical construction".into());
    }
    if words.iter().any(|w| *w < canonical.labels) {
        return Err("increasing chain is not lexicographically first".into());
    }
    // Distinct chains never have prefix-related words, so the prefix
    // convention of the lexicographic order never decides a comparison.
    for (x, y) in words.iter().enumerate().flat_map(|(k, x)| words[k + 1..].iter().map(move |y| (x, y))) {
        let k = x.len().min(y.len());
        if x[..k] == y[..k] {
            return Err("two chains have prefix-related label words".into());
        }
    }
    if decreasing.len() > 1 {
        return Err(format!("{} weakly decreasing chains", decreasing.len()));
    }
    let constructed = weakly_decreasing_chain(c, d).map_err(|e| e.to_string())?.map(|ch| ch.elements);
    if constructed != decreasing.pop() {
        return Err("weakly decreasing chain differs from the constructed one".into());
    }
    Ok(())
}

fn check_pair_increasing(lat: &CcLattice, a: usize, b: usize) -> std::result::Result<(), String> {
    fn walk(lat: &CcLattice, at: usize, goal: usize, last: Option<ELLabel>, path: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
        if at == goal {
            found.push(path.clone());
            return;
        }
        for &next in lat.up(at) {
            let l = label_at(lat.get(at).as_slice(), lat.get(next).as_slice());
            if lat.leq(next, goal) && last.is_none_or(|p| p < l) {
                path.push(next);
                walk(lat, next, goal, Some(l), path, found);
                path.pop();
            }
        }
    }
    let mut found = Vec::new();
    walk(lat, a, b, None, &mut vec![a], &mut found);
    if found.len() != 1 {
        return Err(format!("{} increasing chains", found.len()));
    }
    let canonical = increasing_chain(lat.get(a), lat.get(b)).map_err(|e| e.to_string())?;
    if canonical.elements != elements(lat, &found[0]) {
        return Err("increasing chain differs from the canonical construction".into());
    }
    Ok(())
}

/// A comparable pair with its increasing chain, for certificate output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub from: CubicCoordinate,
    pub to: CubicCoordinate,
    pub chain: SaturatedChain,
}

pub fn certificates(n: usize) -> Vec<Certificate> {
    let lat = cc_lattice(n);
    let mut out = Vec::new();
    for a in lat.elements() {
        for b in lat.elements() {
            if cc_leq(a, b).unwrap() {
                let chain = increasing_chain(a, b).expect("comparable");
                out.push(Certificate { from: a.clone(), to: b.clone(), chain });
            }
        }
    }
    out
}

/// Möbius function of `CC(n)` as a matrix indexed like [`cc_lattice`];
/// zero off comparable pairs.
pub fn mobius_matrix(n: usize) -> Vec<Vec<i64>> {
    let lat = cc_lattice(n);
    let len = lat.len();
    // Sorting by component sum gives a linear extension.
    let mut order: Vec<usize> = (0..len).collect();
    order.sort_by_key(|&k| lat.get(k).as_slice().iter().sum::<i32>());
    let mut mu = vec![vec![0i64; len]; len];
    for &x in &order {
        let above: Vec<usize> = order.iter().copied().filter(|&y| lat.leq(x, y)).collect();
        for (pos, &y) in above.iter().enumerate() {
            mu[x][y] = if y == x {
                1
            } else {
                -above[..pos].iter().filter(|&&z| lat.leq(z, y)).map(|&z| mu[x][z]).sum::<i64>()
            };
        }
    }
    mu
}

/// `μ(c, d)`, zero when `c` is not below `d`.
pub fn mobius(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<i64> {
    if c.size() != d.size() {
        return Err(Error::SizeMismatch { left: c.size(), right: d.size() });
    }
    let lat = cc_lattice(c.size());
    let (a, b) = (lat.index_of(c).unwrap(), lat.index_of(d).unwrap());
    Ok(mobius_matrix(c.size())[a][b])
}

/// Multiset of `μ(c, d)` over comparable pairs: value to multiplicity.
pub fn mobius_values(n: usize) -> BTreeMap<i64, usize> {
    let lat = cc_lattice(n);
    let mu = mobius_matrix(n);
    let mut out = BTreeMap::new();
    for (a, row) in mu.iter().enumerate() {
        for (b, &value) in row.iter().enumerate() {
            if lat.leq(a, b) {
                *out.entry(value).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Orders label words with a shorter prefix first, as `Vec` does.
pub fn compare_words(a: &[ELLabel], b: &[ELLabel]) -> Ordering {
    a.cmp(b)
}

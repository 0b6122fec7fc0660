//! Cubic coordinates: integer tuples encoding Tamari intervals, ordered
//! componentwise.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::diagrams::{enumerate_tid, TamariIntervalDiagram};
use crate::error::{Error, Result};
use crate::intervalposets::{interval_to_tid, tid_to_interval, TamariInterval};
use crate::trees::{tamari_join, tamari_meet};

/// A tuple of `n - 1` integers whose induced diagram pair is a Tamari
/// interval diagram. Invalid tuples cannot be constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct CubicCoordinate(Vec<i32>);

impl CubicCoordinate {
    pub fn new(components: Vec<i32>) -> Result<Self> {
        diagram_of(&components)?;
        Ok(CubicCoordinate(components))
    }

    /// The all-zero coordinate of size `n`, which is always valid.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "cubic coordinates have size at least 1");
        CubicCoordinate(vec![0; n - 1])
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i32> {
        self.0
    }

    /// Number of components plus one.
    pub fn size(&self) -> usize {
        self.0.len() + 1
    }

    /// Component `i`, 1-based.
    pub fn get(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    /// No component is zero.
    pub fn is_synchronized(&self) -> bool {
        self.0.iter().all(|&x| x != 0)
    }

    fn with(&self, i: usize, value: i32) -> Vec<i32> {
        let mut w = self.0.clone();
        w[i - 1] = value;
        w
    }
}

impl TryFrom<Vec<i32>> for CubicCoordinate {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        CubicCoordinate::new(v)
    }
}

impl From<CubicCoordinate> for Vec<i32> {
    fn from(c: CubicCoordinate) -> Self {
        c.0
    }
}

impl fmt::Display for CubicCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CubicCoordinate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected a parenthesised tuple, got {s:?}")))?;
        if inner.trim().is_empty() {
            return CubicCoordinate::new(Vec::new());
        }
        let components = inner
            .split(',')
            .map(|p| p.trim().parse::<i32>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        CubicCoordinate::new(components)
    }
}

fn diagram_of(c: &[i32]) -> Result<TamariIntervalDiagram> {
    let u = c.iter().map(|&x| x.max(0) as usize).chain([0]).collect();
    let v = std::iter::once(0).chain(c.iter().map(|&x| (-x.min(0)) as usize)).collect();
    TamariIntervalDiagram::from_words(u, v)
}

fn is_valid(c: &[i32]) -> bool {
    diagram_of(c).is_ok()
}

/// `u_i = max(c_i, 0)` with `u_n = 0`, and `v_1 = 0`, `v_i = |min(c_{i-1}, 0)|`.
pub fn phi(c: &CubicCoordinate) -> TamariIntervalDiagram {
    diagram_of(&c.0).expect("validated at construction")
}

/// `c_i = u_i - v_{i+1}`.
///
/// # Panics
/// On the empty diagram, which has no cubic coordinate.
pub fn phi_inv(d: &TamariIntervalDiagram) -> CubicCoordinate {
    let n = d.size();
    assert!(n >= 1, "size 0 has no cubic coordinate");
    let c = (1..n).map(|i| d.u().get(i) as i32 - d.v().get(i + 1) as i32).collect();
    CubicCoordinate(c)
}

pub fn psi(iv: &TamariInterval) -> CubicCoordinate {
    phi_inv(&interval_to_tid(iv))
}

pub fn psi_inv(c: &CubicCoordinate) -> TamariInterval {
    tid_to_interval(&phi(c))
}

fn same_size(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<()> {
    if c.size() != d.size() {
        return Err(Error::SizeMismatch { left: c.size(), right: d.size() });
    }
    Ok(())
}

/// Componentwise order.
pub fn cc_leq(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<bool> {
    same_size(c, d)?;
    Ok(c.0.iter().zip(&d.0).all(|(a, b)| a <= b))
}

/// `↑_i(c)`: the coordinate equal to `c` except at component `i`, with the
/// smallest valid value above `c_i`. It covers `c`. `None` when `c_i`
/// cannot increase.
///
/// # Panics
/// If `i` is not in `1..=n-1`.
pub fn min_increase(c: &CubicCoordinate, i: usize) -> Option<CubicCoordinate> {
    let n = c.size();
    assert!((1..n).contains(&i), "component {i} out of range 1..={}", n - 1);
    let cap = (n - i) as i32;
    let ci = c.get(i);
    // A negative component never jumps past 0, and 0 is always valid.
    let top = if ci < 0 { 0 } else { cap };
    ((ci + 1)..=top).map(|x| c.with(i, x)).find(|w| is_valid(w)).map(CubicCoordinate)
}

/// Every coordinate covering `c`, sorted.
pub fn covers(c: &CubicCoordinate) -> Vec<CubicCoordinate> {
    let mut out: Vec<_> = (1..c.size()).filter_map(|i| min_increase(c, i)).collect();
    out.sort();
    out
}

/// Sets component `i` to zero, which always yields a valid coordinate.
pub fn zero_component(c: &CubicCoordinate, i: usize) -> Result<CubicCoordinate> {
    let max = c.size() - 1;
    if !(1..=max).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    if c.get(i) == 0 {
        return Err(Error::ComponentAlreadyZero { index: i });
    }
    let w = c.with(i, 0);
    debug_assert!(is_valid(&w));
    Ok(CubicCoordinate(w))
}

/// Differing positions whose target is non-positive (`d_minus`) or whose
/// source is non-negative (`d_plus`), 1-based and ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaSets {
    pub d_minus: BTreeSet<usize>,
    pub d_plus: BTreeSet<usize>,
}

pub fn delta_sets(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<DeltaSets> {
    same_size(c, d)?;
    let mut out = DeltaSets { d_minus: BTreeSet::new(), d_plus: BTreeSet::new() };
    for i in 1..c.size() {
        let (a, b) = (c.get(i), d.get(i));
        if a == b {
            continue;
        }
        if b <= 0 {
            out.d_minus.insert(i);
        }
        if a >= 0 {
            out.d_plus.insert(i);
        }
    }
    Ok(out)
}

/// Saturated chain from `c` to `d`. Negative components are raised first,
/// left to right, up to `min(d_i, 0)`; then the remaining components are
/// raised left to right. Every step is one `↑_i`.
pub fn chain_between(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<Vec<CubicCoordinate>> {
    if !cc_leq(c, d)? {
        return Err(Error::NotComparable);
    }
    let mut chain = vec![c.clone()];
    let mut raise = |i: usize, target: i32| {
        while chain.last().unwrap().get(i) < target {
            let next = min_increase(chain.last().unwrap(), i).expect("target is reachable");
            assert!(next.get(i) <= target, "↑_{i} overshoots");
            chain.push(next);
        }
    };
    for i in 1..c.size() {
        if c.get(i) < 0 {
            raise(i, d.get(i).min(0));
        }
    }
    for i in 1..c.size() {
        raise(i, d.get(i));
    }
    Ok(chain)
}

fn lattice_op(
    c: &CubicCoordinate,
    d: &CubicCoordinate,
    op: fn(&crate::trees::BinaryTree, &crate::trees::BinaryTree) -> Result<crate::trees::BinaryTree>,
) -> Result<CubicCoordinate> {
    same_size(c, d)?;
    let (a, b) = (psi_inv(c), psi_inv(d));
    let iv = TamariInterval::new(op(a.lower(), b.lower())?, op(a.upper(), b.upper())?)?;
    Ok(psi(&iv))
}

/// Greatest lower bound, through the meets of the bounding trees.
pub fn meet(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<CubicCoordinate> {
    lattice_op(c, d, tamari_meet)
}

/// Least upper bound, through the joins of the bounding trees.
pub fn join(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<CubicCoordinate> {
    lattice_op(c, d, tamari_join)
}

/// All cubic coordinates of size `n` in lexicographic order. Empty for `n = 0`.
pub fn enumerate_cc(n: usize) -> Vec<CubicCoordinate> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<_> = enumerate_tid(n).iter().map(phi_inv).collect();
    out.sort();
    out
}

/// `CC(n)` with its order and cover relation precomputed, indexed by
/// position in the lexicographic enumeration.
#[derive(Debug)]
pub struct CcLattice {
    elements: Vec<CubicCoordinate>,
    index: HashMap<CubicCoordinate, usize>,
    up: Vec<Vec<usize>>,
}

impl CcLattice {
    pub fn new(n: usize) -> Self {
        let elements = enumerate_cc(n);
        let index: HashMap<_, _> = elements.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
        let up = elements.iter().map(|c| covers(c).iter().map(|d| index[d]).collect()).collect();
        CcLattice { elements, index, up }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[CubicCoordinate] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &CubicCoordinate {
        &self.elements[k]
    }

    pub fn index_of(&self, c: &CubicCoordinate) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Indices of the covers of element `k`, sorted.
    pub fn up(&self, k: usize) -> &[usize] {
        &self.up[k]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a].0.iter().zip(&self.elements[b].0).all(|(x, y)| x <= y)
    }

    /// Number of cover relations.
    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }
}

/// Shared, lazily built `CC(n)`.
pub fn cc_lattice(n: usize) -> Arc<CcLattice> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CcLattice>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(l) = cache.lock().unwrap().get(&n) {
        return Arc::clone(l);
    }
    let built = Arc::new(CcLattice::new(n));
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(built))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervalposets::{enumerate_intervals, rho};
    use crate::trees::{tamari_leq_with, LeqMethod};

    fn cc(v: &[i32]) -> CubicCoordinate {
        CubicCoordinate::new(v.to_vec()).unwrap()
    }

    fn tid(u: &[usize], v: &[usize]) -> TamariIntervalDiagram {
        TamariIntervalDiagram::from_words(u.to_vec(), v.to_vec()).unwrap()
    }

    const CC3_VERTICES: [[i32; 2]; 13] = [
        [-1, -2],
        [0, -1],
        [-1, 0],
        [-1, 1],
        [1, 0],
        [0, -2],
        [0, 0],
        [0, 1],
        [2, 0],
        [1, -2],
        [1, -1],
        [2, 1],
        [2, -1],
    ];

    const CC3_COVERS: [([i32; 2], [i32; 2]); 18] = [
        ([-1, -2], [-1, 0]),
        ([-1, -2], [0, -2]),
        ([0, -1], [0, 0]),
        ([-1, 0], [-1, 1]),
        ([-1, 0], [0, 0]),
        ([0, 0], [1, 0]),
        ([1, -1], [1, 0]),
        ([-1, 1], [0, 1]),
        ([1, 0], [2, 0]),
        ([0, -2], [0, -1]),
        ([0, -2], [1, -2]),
        ([0, 0], [0, 1]),
        ([1, -1], [2, -1]),
        ([0, -1], [1, -1]),
        ([2, 0], [2, 1]),
        ([1, -2], [1, -1]),
        ([0, 1], [2, 1]),
        ([2, -1], [2, 0]),
    ];

    #[test]
    fn phi_examples() {
        let big = cc(&[9, -1, 2, 1, -4, 4, 3, 1, -2]);
        let d = tid(&[9, 0, 2, 1, 0, 4, 3, 1, 0, 0], &[0, 0, 1, 0, 0, 4, 0, 0, 0, 2]);
        assert_eq!(phi(&big), d);
        assert_eq!(phi_inv(&d), big);
        assert_eq!(phi(&cc(&[0, 0, 0])), tid(&[0; 4], &[0; 4]));
        assert_eq!(phi_inv(&tid(&[0; 4], &[0; 4])), cc(&[0, 0, 0]));
        assert_eq!(phi(&cc(&[2, 0, -2, 1])), tid(&[2, 0, 0, 1, 0], &[0, 0, 0, 2, 0]));
        assert!(CubicCoordinate::new(vec![1, 1]).is_err());
        assert!(CubicCoordinate::new(vec![3, 0]).is_err());
    }

    #[test]
    fn phi_round_trips() {
        for n in 1..=5 {
            for d in enumerate_tid(n) {
                let c = phi_inv(&d);
                assert_eq!(phi(&c), d);
                assert_eq!(phi_inv(&phi(&c)), c);
            }
        }
    }

    #[test]
    fn psi_examples() {
        let one = TamariInterval::new(crate::trees::BinaryTree::left_comb(1), crate::trees::BinaryTree::left_comb(1)).unwrap();
        assert_eq!(psi(&one), cc(&[]));
        assert_eq!(psi_inv(&cc(&[])), one);
        let five = rho(&crate::intervalposets::chi(&tid(&[2, 0, 0, 1, 0], &[0, 0, 0, 2, 0])));
        assert_eq!(psi(&five), cc(&[2, 0, -2, 1]));
        assert_eq!(psi_inv(&cc(&[2, 0, -2, 1])), five);
        let image: BTreeSet<_> = enumerate_intervals(4).iter().map(psi).collect();
        assert_eq!(image.len(), 68);
        for c in enumerate_cc(5) {
            assert_eq!(psi(&psi_inv(&c)), c);
        }
    }

    #[test]
    fn order_is_an_isomorphism() {
        for n in 1..=4 {
            let ivs = enumerate_intervals(n);
            for a in &ivs {
                for b in &ivs {
                    let by_trees = tamari_leq_with(a.lower(), b.lower(), LeqMethod::RotationClosure).unwrap()
                        && tamari_leq_with(a.upper(), b.upper(), LeqMethod::RotationClosure).unwrap();
                    assert_eq!(cc_leq(&psi(a), &psi(b)).unwrap(), by_trees);
                }
            }
        }
        assert!(cc_leq(&cc(&[-1, -2]), &cc(&[2, 1])).unwrap());
        assert_eq!(cc_leq(&cc(&[0]), &cc(&[0, 0])), Err(Error::SizeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn min_increase_examples() {
        assert_eq!(min_increase(&cc(&[-1, -2]), 1), Some(cc(&[0, -2])));
        assert_eq!(min_increase(&cc(&[0, 1]), 1), Some(cc(&[2, 1])));
        assert_eq!(min_increase(&cc(&[2, 1]), 1), None);
        assert_eq!(min_increase(&cc(&[2, 1]), 2), None);
    }

    #[test]
    fn sign_law() {
        for n in 2..=5 {
            for c in enumerate_cc(n) {
                for i in 1..n {
                    if let (true, Some(up)) = (c.get(i) < 0, min_increase(&c, i)) {
                        assert!(up.get(i) <= 0, "{c} at {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn size_three_realization() {
        let all = enumerate_cc(3);
        let expected: BTreeSet<_> = CC3_VERTICES.iter().map(|v| cc(v)).collect();
        assert_eq!(all.iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert_eq!(all.len(), 13);
        let edges: BTreeSet<_> = all.iter().flat_map(|c| covers(c).into_iter().map(move |d| (c.clone(), d))).collect();
        let drawn: BTreeSet<_> = CC3_COVERS.iter().map(|(a, b)| (cc(a), cc(b))).collect();
        assert_eq!(edges, drawn);
        assert!(covers(&cc(&[2, 1])).is_empty());
        assert_eq!(covers(&cc(&[0, 0])), [cc(&[0, 1]), cc(&[1, 0])]);
        assert_eq!(cc_lattice(3).edge_count(), 18);
    }

    #[test]
    fn covers_match_the_order() {
        for n in 1..=5 {
            let lat = CcLattice::new(n);
            for a in 0..lat.len() {
                let ups: BTreeSet<usize> = lat.up(a).iter().copied().collect();
                let x = lat.get(a);
                for b in 0..lat.len() {
                    if a == b || !lat.leq(a, b) {
                        assert!(!ups.contains(&b));
                        continue;
                    }
                    let y = lat.get(b);
                    let differing = (1..n).filter(|&i| x.get(i) != y.get(i)).count();
                    let between = (0..lat.len()).any(|z| z != a && z != b && lat.leq(a, z) && lat.leq(z, b));
                    let is_cover = differing == 1 && !between;
                    assert_eq!(ups.contains(&b), is_cover, "{x} -> {y}");
                    if !between {
                        assert_eq!(differing, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_component_examples() {
        let big = cc(&[9, -1, 2, 1, -4, 4, 3, 1, -2]);
        assert_eq!(zero_component(&big, 1).unwrap(), cc(&[0, -1, 2, 1, -4, 4, 3, 1, -2]));
        assert_eq!(zero_component(&cc(&[-1, -2]), 2).unwrap(), cc(&[-1, 0]));
        assert_eq!(zero_component(&cc(&[1]), 1).unwrap(), cc(&[0]));
        assert_eq!(zero_component(&cc(&[0]), 1), Err(Error::ComponentAlreadyZero { index: 1 }));
        for c in enumerate_cc(5) {
            for i in 1..5 {
                if c.get(i) != 0 {
                    zero_component(&c, i).unwrap();
                }
            }
        }
    }

    #[test]
    fn delta_set_examples() {
        let d = delta_sets(&cc(&[-1, -2]), &cc(&[2, 1])).unwrap();
        assert!(d.d_minus.is_empty() && d.d_plus.is_empty());
        let d = delta_sets(&cc(&[-1, -2]), &cc(&[0, 0])).unwrap();
        assert_eq!(d.d_minus, BTreeSet::from([1, 2]));
        assert_eq!(d.d_plus, BTreeSet::new());
        let d = delta_sets(&cc(&[0, 0]), &cc(&[2, 1])).unwrap();
        assert_eq!(d.d_plus, BTreeSet::from([1, 2]));
        assert_eq!(delta_sets(&cc(&[0, 0]), &cc(&[0, 0])).unwrap().d_minus.len(), 0);
    }

    #[test]
    fn chain_examples() {
        let chain = chain_between(&cc(&[-1, -2]), &cc(&[2, 1])).unwrap();
        let expected: Vec<_> = [[-1, -2], [0, -2], [0, -1], [0, 0], [1, 0], [2, 0], [2, 1]].iter().map(|v| cc(v)).collect();
        assert_eq!(chain, expected);
        assert_eq!(chain_between(&cc(&[0, 1]), &cc(&[0, 1])).unwrap(), [cc(&[0, 1])]);
        assert_eq!(chain_between(&cc(&[2, 1]), &cc(&[0, 0])), Err(Error::NotComparable));
        for n in 1..=4 {
            let all = enumerate_cc(n);
            for a in &all {
                for b in &all {
                    if !cc_leq(a, b).unwrap() {
                        continue;
                    }
                    let chain = chain_between(a, b).unwrap();
                    assert_eq!((chain.first(), chain.last()), (Some(a), Some(b)));
                    for w in chain.windows(2) {
                        assert!(covers(&w[0]).contains(&w[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(join(&cc(&[-1, 1]), &cc(&[1, -2])).unwrap(), cc(&[2, 1]));
        assert_eq!(meet(&cc(&[-1, 1]), &cc(&[1, -2])).unwrap(), cc(&[-1, -2]));
        for c in enumerate_cc(4) {
            assert_eq!(join(&c, &c).unwrap(), c);
            assert_eq!(meet(&c, &c).unwrap(), c);
        }
        assert_eq!(join(&cc(&[0]), &cc(&[0, 0])), Err(Error::SizeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn counts_and_formats() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_cc(n).len()).collect();
        assert_eq!(counts, [1, 3, 13, 68, 399, 2530]);
        assert_eq!(enumerate_cc(1), [cc(&[])]);
        let all = enumerate_cc(4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let big = cc(&[9, -1, 2, 1, -4, 4, 3, 1, -2]);
        assert_eq!(big.to_string(), "(9,-1,2,1,-4,4,3,1,-2)");
        assert_eq!("(9, -1,2,1,-4,4,3,1,-2)".parse::<CubicCoordinate>().unwrap(), big);
        assert_eq!("()".parse::<CubicCoordinate>().unwrap(), cc(&[]));
        assert!("(1,1)".parse::<CubicCoordinate>().is_err());
        assert!("1,0".parse::<CubicCoordinate>().is_err());
        assert!("(a)".parse::<CubicCoordinate>().is_err());
        assert_eq!(serde_json::to_string(&big).unwrap(), "[9,-1,2,1,-4,4,3,1,-2]");
        assert_eq!(serde_json::from_str::<CubicCoordinate>("[2,0,-2,1]").unwrap(), cc(&[2, 0, -2, 1]));
        assert!(serde_json::from_str::<CubicCoordinate>("[1,1]").is_err());
    }

    #[test]
    fn synchronized_examples() {
        assert!(cc(&[-1, -2]).is_synchronized());
        assert!(!cc(&[0, 0]).is_synchronized());
        for n in 1..=5 {
            for c in enumerate_cc(n) {
                assert_eq!(c.is_synchronized(), psi_inv(&c).is_synchronized());
                assert_eq!(c.is_synchronized(), phi(&c).is_synchronized());
            }
        }
    }
}

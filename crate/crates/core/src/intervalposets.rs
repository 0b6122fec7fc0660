//! Interval-posets, Tamari intervals, and the bijections `chi` (with Tamari
//! interval diagrams) and `rho` (with Tamari intervals).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagrams::{enumerate_tid, TamariIntervalDiagram};
use crate::error::{Error, Result};
use crate::trees::{enumerate_trees, tamari_leq, BinaryTree};

/// Partial order on `x_1..x_n` closed under the two interval-poset
/// properties. Stored in closed form, reflexive pairs included.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WirePoset", into = "WirePoset")]
pub struct IntervalPoset {
    n: usize,
    /// `rel[(a - 1) * n + (b - 1)]` holds `x_a ◁ x_b`.
    rel: Vec<bool>,
}

/// Wire form with the reflexive pairs left out.
#[derive(Serialize, Deserialize)]
struct WirePoset {
    n: usize,
    /// `[j, i]` with `i < j` means `x_j ◁ x_i`.
    decreasing: Vec<[usize; 2]>,
    /// `[i, j]` with `i < j` means `x_i ◁ x_j`.
    increasing: Vec<[usize; 2]>,
}

impl TryFrom<WirePoset> for IntervalPoset {
    type Error = Error;
    fn try_from(w: WirePoset) -> Result<Self> {
        let mut pairs = Vec::new();
        for [j, i] in w.decreasing {
            if i >= j {
                return Err(Error::Parse(format!("decreasing relation [{j},{i}] needs {i} < {j}")));
            }
            pairs.push((j, i));
        }
        for [i, j] in w.increasing {
            if i >= j {
                return Err(Error::Parse(format!("increasing relation [{i},{j}] needs {i} < {j}")));
            }
            pairs.push((i, j));
        }
        pairs.extend((1..=w.n).map(|a| (a, a)));
        IntervalPoset::new(w.n, pairs)
    }
}

impl From<IntervalPoset> for WirePoset {
    fn from(p: IntervalPoset) -> Self {
        WirePoset {
            n: p.n,
            decreasing: p.decreasing_relations().map(|(j, i)| [j, i]).collect(),
            increasing: p.increasing_relations().map(|(i, j)| [i, j]).collect(),
        }
    }
}

fn idx(n: usize, a: usize, b: usize) -> usize {
    (a - 1) * n + (b - 1)
}

fn check(n: usize, rel: &[bool]) -> Result<()> {
    let r = |a: usize, b: usize| rel[idx(n, a, b)];
    for a in 1..=n {
        if !r(a, a) {
            return Err(Error::NotReflexive { index: a });
        }
    }
    for a in 1..=n {
        for b in (a + 1)..=n {
            if r(a, b) && r(b, a) {
                return Err(Error::NotAntisymmetric { a, b });
            }
        }
    }
    for a in 1..=n {
        for b in 1..=n {
            if a == b || !r(a, b) {
                continue;
            }
            for c in 1..=n {
                if c != b && r(b, c) && !r(a, c) {
                    return Err(Error::NotTransitive { a, b, c });
                }
            }
        }
    }
    for i in 1..=n {
        for k in (i + 2)..=n {
            for j in (i + 1)..k {
                if r(k, i) && !r(j, i) {
                    return Err(Error::IntervalPosetDecreasing { i, j, k });
                }
                if r(i, k) && !r(j, k) {
                    return Err(Error::IntervalPosetIncreasing { i, j, k });
                }
            }
        }
    }
    Ok(())
}

impl IntervalPoset {
    /// Validates a closed relation given as pairs `(a, b)` meaning `x_a ◁ x_b`.
    /// Reflexive pairs must be present.
    pub fn new(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let rel = Self::matrix(n, relations)?;
        check(n, &rel)?;
        Ok(IntervalPoset { n, rel })
    }

    fn matrix(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Vec<bool>> {
        let mut rel = vec![false; n * n];
        for (a, b) in relations {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange { index: x, max: n });
                }
            }
            rel[idx(n, a, b)] = true;
        }
        Ok(rel)
    }

    /// Builds an interval-poset from the arcs of its minimalist
    /// representation (or any generating set of relations), closing under
    /// reflexivity, the interval-poset properties and transitivity.
    pub fn from_minimalist(n: usize, decreasing: &[(usize, usize)], increasing: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Self::matrix(n, decreasing.iter().chain(increasing).copied())?;
        for a in 1..=n {
            rel[idx(n, a, a)] = true;
        }
        loop {
            let mut changed = false;
            let mut set = |rel: &mut Vec<bool>, a: usize, b: usize| {
                if !rel[idx(n, a, b)] {
                    rel[idx(n, a, b)] = true;
                    changed = true;
                }
            };
            for i in 1..=n {
                for k in (i + 2)..=n {
                    for j in (i + 1)..k {
                        if rel[idx(n, k, i)] {
                            set(&mut rel, j, i);
                        }
                        if rel[idx(n, i, k)] {
                            set(&mut rel, j, k);
                        }
                    }
                }
            }
            for b in 1..=n {
                for a in 1..=n {
                    if !rel[idx(n, a, b)] {
                        continue;
                    }
                    for c in 1..=n {
                        if rel[idx(n, b, c)] {
                            set(&mut rel, a, c);
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        check(n, &rel)?;
        Ok(IntervalPoset { n, rel })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `x_a ◁ x_b`.
    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.rel[idx(self.n, a, b)]
    }

    /// All pairs `(a, b)` with `x_a ◁ x_b`, reflexive ones included.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |a| (1..=n).map(move |b| (a, b))).filter(|&(a, b)| self.relates(a, b))
    }

    /// Pairs `(j, i)` with `i < j` and `x_j ◁ x_i`.
    pub fn decreasing_relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.relations().filter(|&(a, b)| a > b)
    }

    /// Pairs `(i, j)` with `i < j` and `x_i ◁ x_j`.
    pub fn increasing_relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.relations().filter(|&(a, b)| a < b)
    }

}

/// Decreasing ranges from `u`, increasing ranges from `v`, plus reflexivity.
pub fn chi(d: &TamariIntervalDiagram) -> IntervalPoset {
    let n = d.size();
    let mut rel = vec![false; n * n];
    for i in 1..=n {
        for l in 0..=d.u().get(i) {
            rel[idx(n, i + l, i)] = true;
        }
        for k in 0..=d.v().get(i) {
            rel[idx(n, i - k, i)] = true;
        }
    }
    debug_assert!(check(n, &rel).is_ok());
    IntervalPoset { n, rel }
}

/// `u_i` counts decreasing relations of goal `x_i`, `v_j` increasing ones
/// of goal `x_j`.
pub fn chi_inv(p: &IntervalPoset) -> TamariIntervalDiagram {
    let n = p.n;
    let u = (1..=n).map(|i| ((i + 1)..=n).filter(|&j| p.relates(j, i)).count()).collect();
    let v = (1..=n).map(|j| (1..j).filter(|&i| p.relates(i, j)).count()).collect();
    TamariIntervalDiagram::new_unchecked(u, v)
}

/// Pair of trees `[lower, upper]` with `lower <= upper` in the Tamari order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawInterval")]
pub struct TamariInterval {
    lower: BinaryTree,
    upper: BinaryTree,
}

#[derive(Deserialize)]
struct RawInterval {
    lower: BinaryTree,
    upper: BinaryTree,
}

impl TryFrom<RawInterval> for TamariInterval {
    type Error = Error;
    fn try_from(raw: RawInterval) -> Result<Self> {
        TamariInterval::new(raw.lower, raw.upper)
    }
}

impl TamariInterval {
    pub fn new(lower: BinaryTree, upper: BinaryTree) -> Result<Self> {
        if !tamari_leq(&lower, &upper)? {
            return Err(Error::NotAnInterval);
        }
        Ok(TamariInterval { lower, upper })
    }

    pub fn lower(&self) -> &BinaryTree {
        &self.lower
    }

    pub fn upper(&self) -> &BinaryTree {
        &self.upper
    }

    pub fn size(&self) -> usize {
        self.lower.size()
    }

    /// Interval order: both bounds compared in the Tamari order.
    pub fn leq(&self, other: &TamariInterval) -> Result<bool> {
        Ok(tamari_leq(&self.lower, &other.lower)? && tamari_leq(&self.upper, &other.upper)?)
    }

    /// Both trees share the same canopy.
    pub fn is_synchronized(&self) -> bool {
        self.lower.canopy() == self.upper.canopy()
    }
}

/// Text form: the balanced-parenthesis words of both trees, space separated.
impl fmt::Display for TamariInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lower, self.upper)
    }
}

impl FromStr for TamariInterval {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            [] => TamariInterval::new(BinaryTree::Leaf, BinaryTree::Leaf),
            [a, b] => TamariInterval::new(a.parse()?, b.parse()?),
            _ => Err(Error::Parse(format!("expected two trees, got {}", parts.len()))),
        }
    }
}

/// The lower tree carries the decreasing relations, the upper tree the
/// increasing ones.
pub fn rho(p: &IntervalPoset) -> TamariInterval {
    let d = chi_inv(p);
    TamariInterval {
        lower: BinaryTree::from_valid_tamari(d.u().as_slice()),
        upper: BinaryTree::from_valid_dual(d.v().as_slice()),
    }
}

pub fn rho_inv(iv: &TamariInterval) -> IntervalPoset {
    chi(&interval_to_tid(iv))
}

/// `(u(S), v(T))`, compatible because `S <= T`.
pub(crate) fn interval_to_tid(iv: &TamariInterval) -> TamariIntervalDiagram {
    TamariIntervalDiagram::new(iv.lower.tamari_diagram(), iv.upper.dual_tamari_diagram())
        .expect("S <= T gives compatible diagrams")
}

pub(crate) fn tid_to_interval(d: &TamariIntervalDiagram) -> TamariInterval {
    TamariInterval {
        lower: BinaryTree::from_valid_tamari(d.u().as_slice()),
        upper: BinaryTree::from_valid_dual(d.v().as_slice()),
    }
}

/// Intervals covering `iv`: one right rotation in the lower tree staying
/// below the upper tree, or one right rotation in the upper tree.
pub fn interval_covers(iv: &TamariInterval) -> Vec<TamariInterval> {
    let mut out: Vec<TamariInterval> = iv
        .lower
        .rotations()
        .into_iter()
        .filter(|s| tamari_leq(s, &iv.upper).expect("same size"))
        .map(|s| TamariInterval { lower: s, upper: iv.upper.clone() })
        .chain(iv.upper.rotations().into_iter().map(|t| TamariInterval { lower: iv.lower.clone(), upper: t }))
        .collect();
    out.sort();
    out
}

/// Which of the two relation-level cover conditions links `p` to `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverCondition {
    /// Decreasing relations of goal `x_k` were added.
    Star { k: usize },
    /// Increasing relations of goal `x_l` were removed.
    Diamond { l: usize },
}

/// Tests whether `q` is obtained from `p` by adding only decreasing
/// relations of a single goal (`Star`), or by removing only increasing
/// relations of a single goal (`Diamond`), with no interval-poset in between
/// reachable by a partial change of the same kind.
///
/// Toggling back a single relation is not enough to detect minimality: when
/// three increasing relations of goal `x_4` are removed at once, each one put
/// back alone can break transitivity even though a smaller removal exists.
pub fn cover_condition(p: &IntervalPoset, q: &IntervalPoset) -> Option<CoverCondition> {
    if p.n != q.n || p == q {
        return None;
    }
    let n = p.n;
    let added: Vec<(usize, usize)> = q.relations().filter(|&(a, b)| !p.relates(a, b)).collect();
    let removed: Vec<(usize, usize)> = p.relations().filter(|&(a, b)| !q.relates(a, b)).collect();
    let single_goal = |pairs: &[(usize, usize)], decreasing: bool| -> Option<usize> {
        let goal = pairs[0].1;
        pairs
            .iter()
            .all(|&(a, b)| b == goal && if decreasing { a > b } else { a < b })
            .then_some(goal)
    };
    // Some proper non-empty subset of `changed`, toggled on `p`, is valid.
    let has_intermediate = |changed: &[(usize, usize)], value: bool| {
        let full = (1u64 << changed.len()) - 1;
        (1..full).any(|mask| {
            let mut rel = p.rel.clone();
            for (bit, &(a, b)) in changed.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    rel[idx(n, a, b)] = value;
                }
            }
            check(n, &rel).is_ok()
        })
    };
    if removed.is_empty() {
        let k = single_goal(&added, true)?;
        return (!has_intermediate(&added, true)).then_some(CoverCondition::Star { k });
    }
    if added.is_empty() {
        let l = single_goal(&removed, false)?;
        return (!has_intermediate(&removed, false)).then_some(CoverCondition::Diamond { l });
    }
    None
}

/// All Tamari intervals of size `n`, sorted.
pub fn enumerate_intervals(n: usize) -> Vec<TamariInterval> {
    let all = enumerate_trees(n);
    let mut out = Vec::new();
    for s in &all {
        for t in &all {
            if tamari_leq(s, t).expect("same size") {
                out.push(TamariInterval { lower: s.clone(), upper: t.clone() });
            }
        }
    }
    out
}

/// All interval-posets of size `n`, as images of the Tamari interval diagrams.
pub fn enumerate_interval_posets(n: usize) -> Vec<IntervalPoset> {
    let mut out: Vec<IntervalPoset> = enumerate_tid(n).iter().map(chi).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn refl(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (1..=n).map(|a| (a, a))
    }

    fn five_node_poset() -> IntervalPoset {
        let rels = [(2, 1), (3, 1), (5, 4), (2, 4), (3, 4)];
        IntervalPoset::new(5, rels.into_iter().chain(refl(5))).unwrap()
    }

    fn tid(u: &[usize], v: &[usize]) -> TamariIntervalDiagram {
        TamariIntervalDiagram::from_words(u.to_vec(), v.to_vec()).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(IntervalPoset::new(1, [(1, 1)]).is_ok());
        five_node_poset();
        let bad = IntervalPoset::new(3, [(3, 1)].into_iter().chain(refl(3)));
        assert_eq!(bad, Err(Error::IntervalPosetDecreasing { i: 1, j: 2, k: 3 }));
        assert_eq!(IntervalPoset::new(2, [(1, 1)]), Err(Error::NotReflexive { index: 2 }));
        assert_eq!(
            IntervalPoset::new(2, [(1, 2), (2, 1)].into_iter().chain(refl(2))),
            Err(Error::NotAntisymmetric { a: 1, b: 2 })
        );
        assert_eq!(
            IntervalPoset::new(3, [(1, 2), (2, 3)].into_iter().chain(refl(3))),
            Err(Error::NotTransitive { a: 1, b: 2, c: 3 })
        );
        assert_eq!(
            IntervalPoset::new(3, [(1, 3)].into_iter().chain(refl(3))),
            Err(Error::IntervalPosetIncreasing { i: 1, j: 2, k: 3 })
        );
        assert_eq!(IntervalPoset::new(2, [(1, 3)]), Err(Error::IndexOutOfRange { index: 3, max: 2 }));
    }

    #[test]
    fn chi_examples() {
        let zero = tid(&[0, 0, 0, 0], &[0, 0, 0, 0]);
        assert_eq!(chi(&zero).relations().count(), 4);
        assert_eq!(chi(&tid(&[2, 0, 0, 1, 0], &[0, 0, 0, 2, 0])), five_node_poset());
        assert_eq!(chi_inv(&five_node_poset()), tid(&[2, 0, 0, 1, 0], &[0, 0, 0, 2, 0]));
        assert_eq!(chi_inv(&chi(&zero)), zero);
    }

    #[test]
    fn minimalist_arcs_of_the_size_ten_example() {
        let p = IntervalPoset::from_minimalist(
            10,
            &[(10, 1), (5, 3), (5, 4), (10, 6), (10, 7), (9, 8)],
            &[(2, 3), (2, 6), (8, 10)],
        )
        .unwrap();
        let d = tid(&[9, 0, 2, 1, 0, 4, 3, 1, 0, 0], &[0, 0, 1, 0, 0, 4, 0, 0, 0, 2]);
        assert_eq!(p, chi(&d));
        assert_eq!(chi_inv(&p), d);
    }

    #[test]
    fn chi_is_a_bijection_up_to_five() {
        for n in 0..=5 {
            let tids = enumerate_tid(n);
            let mut images = BTreeSet::new();
            for d in &tids {
                let p = chi(d);
                IntervalPoset::new(n, p.relations()).unwrap();
                assert_eq!(&chi_inv(&p), d);
                images.insert(p);
            }
            assert_eq!(images.len(), tids.len());
        }
    }

    /// Interval-posets by brute force: every relation set on `n` points
    /// passing validation, for `n <= 3`.
    #[test]
    fn interval_posets_by_exhaustion() {
        for n in 0..=3usize {
            let candidates: Vec<(usize, usize)> =
                (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
            let mut found = BTreeSet::new();
            for mask in 0u32..(1 << candidates.len()) {
                let rels = candidates
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask & (1 << bit) != 0)
                    .map(|(_, &p)| p)
                    .chain(refl(n));
                if let Ok(p) = IntervalPoset::new(n, rels) {
                    found.insert(p);
                }
            }
            let listed: BTreeSet<_> = enumerate_interval_posets(n).into_iter().collect();
            assert_eq!(found, listed);
        }
    }

    /// Descendant relations read directly off the trees.
    fn poset_from_trees(iv: &TamariInterval) -> IntervalPoset {
        fn descendants(t: &BinaryTree, offset: usize, out: &mut Vec<(usize, Vec<usize>, Vec<usize>)>) -> Vec<usize> {
            match t {
                BinaryTree::Leaf => Vec::new(),
                BinaryTree::Node(l, r) => {
                    let me = offset + l.size() + 1;
                    let left = descendants(l, offset, out);
                    let right = descendants(r, me, out);
                    out.push((me, left.clone(), right.clone()));
                    left.into_iter().chain([me]).chain(right).collect()
                }
            }
        }
        let n = iv.size();
        let mut lower = Vec::new();
        descendants(iv.lower(), 0, &mut lower);
        let mut upper = Vec::new();
        descendants(iv.upper(), 0, &mut upper);
        let mut rels: Vec<(usize, usize)> = refl(n).collect();
        for (i, _, right) in lower {
            rels.extend(right.into_iter().map(|j| (j, i)));
        }
        for (j, left, _) in upper {
            rels.extend(left.into_iter().map(|i| (i, j)));
        }
        IntervalPoset::new(n, rels).unwrap()
    }

    #[test]
    fn rho_matches_descendant_construction() {
        for n in 0..=4 {
            let posets: BTreeSet<_> = enumerate_interval_posets(n).into_iter().collect();
            for iv in enumerate_intervals(n) {
                let p = rho_inv(&iv);
                assert_eq!(p, poset_from_trees(&iv));
                assert!(posets.contains(&p));
                assert_eq!(rho(&p), iv);
            }
        }
    }

    #[test]
    fn rho_examples() {
        let iv = rho(&five_node_poset());
        assert_eq!(iv.lower().tamari_diagram().as_slice(), [2, 0, 0, 1, 0]);
        assert_eq!(iv.upper().dual_tamari_diagram().as_slice(), [0, 0, 0, 2, 0]);
        assert_eq!(rho_inv(&iv), five_node_poset());
        let antichain = chi(&tid(&[0, 0, 0], &[0, 0, 0]));
        let full = rho(&antichain);
        assert_eq!(full.lower(), &BinaryTree::left_comb(3));
        assert_eq!(full.upper(), &BinaryTree::right_comb(3));
        let one = rho(&IntervalPoset::new(1, [(1, 1)]).unwrap());
        assert_eq!(one, TamariInterval::new(BinaryTree::left_comb(1), BinaryTree::left_comb(1)).unwrap());
        assert_eq!(enumerate_intervals(4).len(), 68);
    }

    #[test]
    fn rejects_non_intervals() {
        assert_eq!(
            TamariInterval::new(BinaryTree::right_comb(3), BinaryTree::left_comb(3)),
            Err(Error::NotAnInterval)
        );
        assert!("(()) ()()".parse::<TamariInterval>().is_ok());
        assert!("()() (())".parse::<TamariInterval>().is_err());
        assert!("(()) ()".parse::<TamariInterval>().is_err());
    }

    #[test]
    fn interval_cover_examples() {
        let top = TamariInterval::new(BinaryTree::right_comb(3), BinaryTree::right_comb(3)).unwrap();
        assert!(interval_covers(&top).is_empty());
        let bottom = TamariInterval::new(BinaryTree::left_comb(3), BinaryTree::left_comb(3)).unwrap();
        assert_eq!(interval_covers(&bottom).len(), 2);
        let edges: usize = enumerate_intervals(3).iter().map(|iv| interval_covers(iv).len()).sum();
        assert_eq!(edges, 18);
    }

    #[test]
    fn covers_agree_with_order_and_relation_conditions() {
        for n in 0..=4 {
            let all = enumerate_intervals(n);
            for a in &all {
                let covers = interval_covers(a);
                for b in &all {
                    let by_order = a != b
                        && a.leq(b).unwrap()
                        && !all.iter().any(|z| z != a && z != b && a.leq(z).unwrap() && z.leq(b).unwrap());
                    assert_eq!(by_order, covers.contains(b), "{a} -> {b}");
                    let cond = cover_condition(&rho_inv(a), &rho_inv(b));
                    assert_eq!(cond.is_some(), by_order, "{a} -> {b}: {cond:?}");
                }
            }
        }
    }

    #[test]
    fn json_wire_form() {
        let p = five_node_poset();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":5,"decreasing":[[2,1],[3,1],[5,4]],"increasing":[[2,4],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<IntervalPoset>(&json).unwrap(), p);
        assert!(serde_json::from_str::<IntervalPoset>(r#"{"n":3,"decreasing":[[3,1]],"increasing":[]}"#).is_err());
        assert!(serde_json::from_str::<IntervalPoset>(r#"{"n":3,"decreasing":[[1,3]],"increasing":[]}"#).is_err());
        let iv = rho(&p);
        let json = serde_json::to_string(&iv).unwrap();
        assert_eq!(serde_json::from_str::<TamariInterval>(&json).unwrap(), iv);
    }
}

//! Reference computations that share no code path with the main
//! constructions: closed formulas and brute-force searches.

use crate::cubic::{cc_lattice, CubicCoordinate};
use crate::error::{Error, Result};

/// `2 (4n+1)! / ((n+1)! (3n+2)!)`, the number of Tamari intervals of size
/// `n`. `None` once the factorials overflow (`n > 8`).
pub fn interval_count(n: u32) -> Option<u128> {
    fn fact(k: u32) -> Option<u128> {
        (1..=k as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
    }
    let num = fact(4 * n + 1)?.checked_mul(2)?;
    let den = fact(n + 1)?.checked_mul(fact(3 * n + 2)?)?;
    Some(num / den)
}

fn bounds(c: &CubicCoordinate, d: &CubicCoordinate, upper: bool) -> Result<CubicCoordinate> {
    if c.size() != d.size() {
        return Err(Error::SizeMismatch { left: c.size(), right: d.size() });
    }
    let lat = cc_lattice(c.size());
    let le = |x: &CubicCoordinate, y: &CubicCoordinate| x.as_slice().iter().zip(y.as_slice()).all(|(a, b)| a <= b);
    let common: Vec<&CubicCoordinate> = lat
        .elements()
        .iter()
        .filter(|z| if upper { le(c, z) && le(d, z) } else { le(z, c) && le(z, d) })
        .collect();
    let extreme: Vec<&CubicCoordinate> = common
        .iter()
        .copied()
        .filter(|z| common.iter().all(|w| if upper { le(z, w) } else { le(w, z) }))
        .collect();
    match extreme.as_slice() {
        [one] => Ok((*one).clone()),
        _ => Err(Error::NotComparable),
    }
}

/// Least common upper bound found by scanning all of `CC(n)`.
pub fn brute_join(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<CubicCoordinate> {
    bounds(c, d, true)
}

/// Greatest common lower bound found by scanning all of `CC(n)`.
pub fn brute_meet(c: &CubicCoordinate, d: &CubicCoordinate) -> Result<CubicCoordinate> {
    bounds(c, d, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_counts() {
        let v: Vec<u128> = (0..=7).map(|n| interval_count(n).unwrap()).collect();
        assert_eq!(v, [1, 1, 3, 13, 68, 399, 2530, 16965]);
        assert!(interval_count(8).is_some());
        assert_eq!(interval_count(9), None);
    }

    #[test]
    fn bound_examples() {
        let c = CubicCoordinate::new(vec![-1, 1]).unwrap();
        let d = CubicCoordinate::new(vec![1, -2]).unwrap();
        assert_eq!(brute_join(&c, &d).unwrap().as_slice(), [2, 1]);
        assert_eq!(brute_meet(&c, &d).unwrap().as_slice(), [-1, -2]);
    }
}

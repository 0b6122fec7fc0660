//! Cells of the cubic realization, their correspondence with synchronized
//! coordinates, regions and volumes.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cubic::{cc_lattice, covers, min_increase, CubicCoordinate};
use crate::error::{Error, Result};

/// A minimal-cellular coordinate together with its maximal-cellular.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WireCell", into = "WireCell")]
pub struct Cell {
    c_min: CubicCoordinate,
    c_max: CubicCoordinate,
}

#[derive(Serialize, Deserialize)]
struct WireCell {
    min: CubicCoordinate,
    max: CubicCoordinate,
    gamma: CubicCoordinate,
    volume: u64,
}

impl From<Cell> for WireCell {
    fn from(cell: Cell) -> Self {
        WireCell { gamma: gamma(&cell), volume: cell_volume(&cell), min: cell.c_min, max: cell.c_max }
    }
}

impl TryFrom<WireCell> for Cell {
    type Error = Error;
    fn try_from(w: WireCell) -> Result<Self> {
        let cell = Cell::new(w.min)?;
        if cell.c_max != w.max || gamma(&cell) != w.gamma || cell_volume(&cell) != w.volume {
            return Err(Error::Parse("cell fields are inconsistent with its minimum".into()));
        }
        Ok(cell)
    }
}

impl Cell {
    pub fn new(c_min: CubicCoordinate) -> Result<Self> {
        let c_max = maximal_cellular(&c_min)?;
        Ok(Cell { c_min, c_max })
    }

    pub fn c_min(&self) -> &CubicCoordinate {
        &self.c_min
    }

    pub fn c_max(&self) -> &CubicCoordinate {
        &self.c_max
    }

    pub fn size(&self) -> usize {
        self.c_min.size()
    }

    fn pick(&self, take_min: impl Fn(i32) -> bool) -> CubicCoordinate {
        let w = self
            .c_min
            .as_slice()
            .iter()
            .zip(self.c_max.as_slice())
            .map(|(&lo, &hi)| if take_min(lo) { lo } else { hi })
            .collect();
        CubicCoordinate::new(w).expect("cell vertices are coordinates")
    }
}

/// Exactly `n - 1` covers.
pub fn is_minimal_cellular(c: &CubicCoordinate) -> bool {
    covers(c).len() == c.size() - 1
}

/// `↑_1(↑_2(…↑_{n-1}(c)…))`.
pub fn maximal_cellular(c: &CubicCoordinate) -> Result<CubicCoordinate> {
    if !is_minimal_cellular(c) {
        return Err(Error::NotMinimalCellular);
    }
    let mut cur = c.clone();
    for i in (1..c.size()).rev() {
        cur = min_increase(&cur, i).expect("defined from a minimal-cellular");
    }
    Ok(cur)
}

/// The `2^(n-1)` corners, sorted.
pub fn cell_vertices(cell: &Cell) -> Vec<CubicCoordinate> {
    let lo = cell.c_min.as_slice();
    let hi = cell.c_max.as_slice();
    let mut out: Vec<_> = (0u64..1 << lo.len())
        .map(|mask| {
            let w = (0..lo.len()).map(|k| if mask >> k & 1 == 1 { hi[k] } else { lo[k] }).collect();
            CubicCoordinate::new(w).expect("corners of a cell are coordinates")
        })
        .collect();
    out.sort();
    out
}

/// Coordinates strictly inside the cell in every component. The single
/// point of the size-1 cell is a corner, not an interior point.
pub fn interior_coordinates(cell: &Cell) -> Vec<CubicCoordinate> {
    if cell.size() == 1 {
        return Vec::new();
    }
    let lo = cell.c_min.as_slice();
    let hi = cell.c_max.as_slice();
    cc_lattice(cell.size())
        .elements()
        .iter()
        .filter(|c| c.as_slice().iter().enumerate().all(|(k, &x)| lo[k] < x && x < hi[k]))
        .cloned()
        .collect()
}

/// Minimum on negative components, maximum elsewhere. Always synchronized.
pub fn gamma(cell: &Cell) -> CubicCoordinate {
    cell.pick(|lo| lo < 0)
}

/// The corner opposite to `gamma`.
pub fn gamma_bar(cell: &Cell) -> CubicCoordinate {
    cell.pick(|lo| lo >= 0)
}

/// The cell sent to `c` by `gamma`.
///
/// Negative components of `c` are those of the minimum, positive ones those
/// of the maximum; the unknown minimum components are searched in
/// `0..c_i`.
pub fn gamma_inv(c: &CubicCoordinate) -> Result<Cell> {
    if !c.is_synchronized() {
        return Err(Error::NotSynchronized);
    }
    let comps = c.as_slice();
    let free: Vec<usize> = (0..comps.len()).filter(|&k| comps[k] > 0).collect();
    let mut digits = vec![0i32; free.len()];
    loop {
        let mut w = comps.to_vec();
        for (&k, &d) in free.iter().zip(&digits) {
            w[k] = d;
        }
        if let Ok(cand) = CubicCoordinate::new(w) {
            if let Ok(cell) = Cell::new(cand) {
                if gamma(&cell) == *c {
                    return Ok(cell);
                }
            }
        }
        // Next mixed-radix counter value, digit k ranging over 0..comps[free[k]].
        let mut pos = 0;
        loop {
            if pos == free.len() {
                return enumerate_cells(c.size())
                    .into_iter()
                    .find(|cell| gamma(cell) == *c)
                    .ok_or(Error::NotSynchronized);
            }
            digits[pos] += 1;
            if digits[pos] < comps[free[pos]] {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// `Π (c_max_i - c_min_i)`.
pub fn cell_volume(cell: &Cell) -> u64 {
    cell.c_min.as_slice().iter().zip(cell.c_max.as_slice()).map(|(&lo, &hi)| (hi - lo) as u64).product()
}

/// `Π |c_i|` for a synchronized coordinate.
pub fn extended_sync_volume(c: &CubicCoordinate) -> Result<u64> {
    if !c.is_synchronized() {
        return Err(Error::NotSynchronized);
    }
    Ok(c.as_slice().iter().map(|x| x.unsigned_abs() as u64).product())
}

/// `c' ≼ₛ c`: same signs and `|c'_i| <= |c_i|` everywhere.
pub fn sync_leq(c_prime: &CubicCoordinate, c: &CubicCoordinate) -> Result<bool> {
    if c_prime.size() != c.size() {
        return Err(Error::SizeMismatch { left: c_prime.size(), right: c.size() });
    }
    if !c_prime.is_synchronized() || !c.is_synchronized() {
        return Err(Error::NotSynchronized);
    }
    Ok(sync_leq_raw(c_prime.as_slice(), c.as_slice()))
}

fn sync_leq_raw(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x.signum() == y.signum() && x.abs() <= y.abs())
}

/// Möbius inversion of the extended volume over `≼ₛ`, for every
/// synchronized coordinate of one size.
#[derive(Debug)]
pub struct SyncVolumeTable {
    values: HashMap<CubicCoordinate, u64>,
}

impl SyncVolumeTable {
    pub fn new(n: usize) -> Self {
        let mut sync: Vec<CubicCoordinate> =
            cc_lattice(n).elements().iter().filter(|c| c.is_synchronized()).cloned().collect();
        // Strict predecessors have smaller total magnitude.
        sync.sort_by_key(|c| c.as_slice().iter().map(|x| x.abs()).sum::<i32>());
        let mut values: HashMap<CubicCoordinate, u64> = HashMap::new();
        for c in &sync {
            let below: i64 = values
                .iter()
                .filter(|(d, _)| *d != c && sync_leq_raw(d.as_slice(), c.as_slice()))
                .map(|(_, &v)| v as i64)
                .sum();
            let total = extended_sync_volume(c).unwrap() as i64 - below;
            assert!(total >= 1, "volume of {c} is {total}");
            values.insert(c.clone(), total as u64);
        }
        SyncVolumeTable { values }
    }

    pub fn get(&self, c: &CubicCoordinate) -> Option<u64> {
        self.values.get(c).copied()
    }

    pub fn total(&self) -> u64 {
        self.values.values().sum()
    }
}

/// Shared, lazily built volume table.
pub fn sync_volume_table(n: usize) -> Arc<SyncVolumeTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SyncVolumeTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(SyncVolumeTable::new(n));
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(built))
}

/// `𝒱̄(c)`.
pub fn sync_volume(c: &CubicCoordinate) -> Result<u64> {
    if !c.is_synchronized() {
        return Err(Error::NotSynchronized);
    }
    Ok(sync_volume_table(c.size()).get(c).expect("synchronized coordinates are tabulated"))
}

/// Open orthant around a center: `x_i < c_i` where the sign is `-1`,
/// `x_i > c_i` where it is `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub center: CubicCoordinate,
    pub signs: Vec<i8>,
}

impl Region {
    pub fn contains(&self, x: &CubicCoordinate) -> bool {
        let c = self.center.as_slice();
        x.as_slice().iter().zip(c).zip(&self.signs).all(|((&xi, &ci), &e)| if e < 0 { xi < ci } else { xi > ci })
    }

    /// The `2^(n-1)` regions around `center`.
    pub fn all_around(center: &CubicCoordinate) -> Vec<Region> {
        let m = center.as_slice().len();
        (0u64..1 << m)
            .map(|mask| Region {
                center: center.clone(),
                signs: (0..m).map(|k| if mask >> k & 1 == 1 { 1 } else { -1 }).collect(),
            })
            .collect()
    }
}

/// Some region around `c` holds no coordinate of the same size. The empty
/// tuple has one region, holding itself, so it is internal.
pub fn is_external(c: &CubicCoordinate) -> bool {
    let lattice = cc_lattice(c.size());
    Region::all_around(c).iter().any(|r| !lattice.elements().iter().any(|x| r.contains(x)))
}

pub fn is_internal(c: &CubicCoordinate) -> bool {
    !is_external(c)
}

/// All cells of size `n`, sorted by minimum.
pub fn enumerate_cells(n: usize) -> Vec<Cell> {
    cc_lattice(n)
        .elements()
        .iter()
        .filter(|c| is_minimal_cellular(c))
        .map(|c| Cell::new(c.clone()).expect("filtered"))
        .collect()
}

/// Checks that the box between the origin and the synchronized `c` is tiled
/// by the cells `Γ⁻¹(c')`, `c' ≼ₛ c`: every unit cube of the box lies in
/// exactly one of them, and none of them leaves the box.
pub fn hypercube_is_partitioned(c: &CubicCoordinate) -> Result<bool> {
    if !c.is_synchronized() {
        return Err(Error::NotSynchronized);
    }
    let comps = c.as_slice();
    let lo: Vec<i32> = comps.iter().map(|&x| x.min(0)).collect();
    let hi: Vec<i32> = comps.iter().map(|&x| x.max(0)).collect();
    let cells: Vec<Cell> = cc_lattice(c.size())
        .elements()
        .iter()
        .filter(|d| d.is_synchronized() && sync_leq_raw(d.as_slice(), comps))
        .map(gamma_inv)
        .collect::<Result<_>>()?;
    for cell in &cells {
        let inside = (0..comps.len())
            .all(|k| lo[k] <= cell.c_min.as_slice()[k] && cell.c_max.as_slice()[k] <= hi[k]);
        if !inside {
            return Ok(false);
        }
    }
    // Unit cubes indexed by their lowest corner.
    let mut corner = lo.clone();
    loop {
        let holders = cells
            .iter()
            .filter(|cell| {
                (0..comps.len())
                    .all(|k| cell.c_min.as_slice()[k] <= corner[k] && corner[k] < cell.c_max.as_slice()[k])
            })
            .count();
        if holders != 1 {
            return Ok(false);
        }
        let mut k = 0;
        loop {
            if k == comps.len() {
                return Ok(true);
            }
            corner[k] += 1;
            if corner[k] < hi[k] {
                break;
            }
            corner[k] = lo[k];
            k += 1;
        }
    }
}

//! Invariant suites run by `cubic check`.

use clap::ValueEnum;
use serde::Serialize;

use tamari_cubic::cells::{
    cell_vertices, cell_volume, enumerate_cells, gamma, gamma_inv, hypercube_is_partitioned, interior_coordinates,
    is_external, is_internal, sync_volume,
};
use tamari_cubic::cubic::{cc_lattice, enumerate_cc, join, meet, phi, phi_inv, psi, psi_inv};
use tamari_cubic::diagrams::enumerate_tid;
use tamari_cubic::intervalposets::{chi, chi_inv, enumerate_intervals, rho, rho_inv};
use tamari_cubic::oracle::{brute_join, brute_meet, interval_count};
use tamari_cubic::shelling::{mobius_values, verify_el_shellability};
use tamari_cubic::trees::{tamari_leq_with, LeqMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Bijections,
    Lattice,
    Cells,
    Volumes,
    Shelling,
    All,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: usize,
    /// Comparable pairs examined by the shelling suite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<usize>,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        if let Some(p) = other.pairs {
            *self.pairs.get_or_insert(0) += p;
        }
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

/// Runs `suite` for every size from 1 to `n`.
pub fn run(suite: Suite, n: usize) -> Report {
    match suite {
        Suite::Bijections => bijections(n),
        Suite::Lattice => lattice(n),
        Suite::Cells => cells(n),
        Suite::Volumes => volumes(n),
        Suite::Shelling => shelling(n),
        Suite::All => {
            let mut r = Report::default();
            for s in [Suite::Bijections, Suite::Lattice, Suite::Cells, Suite::Volumes, Suite::Shelling] {
                r.merge(run(s, n));
            }
            r
        }
    }
}

fn bijections(n: usize) -> Report {
    let mut r = Report::default();
    for m in 1..=n {
        let tids = enumerate_tid(m);
        if let Some(expected) = interval_count(m as u32) {
            r.check(tids.len() as u128 == expected, || format!("n={m}: {} diagram pairs, expected {expected}", tids.len()));
        }
        for d in &tids {
            let p = chi(d);
            r.check(&chi_inv(&p) == d, || format!("chi round trip fails at {d}"));
            let c = phi_inv(d);
            r.check(&phi(&c) == d, || format!("phi round trip fails at {d}"));
            let iv = rho(&p);
            r.check(rho_inv(&iv) == p, || format!("rho round trip fails at {iv}"));
            r.check(psi(&iv) == c && psi_inv(&c) == iv, || format!("psi round trip fails at {c}"));
        }
    }
    r
}

fn lattice(n: usize) -> Report {
    let mut r = Report::default();
    for m in 1..=n {
        let ivs = enumerate_intervals(m);
        let images: Vec<_> = ivs.iter().map(psi).collect();
        for (a, x) in ivs.iter().enumerate() {
            for (b, y) in ivs.iter().enumerate() {
                let by_rotation = tamari_leq_with(x.lower(), y.lower(), LeqMethod::RotationClosure).unwrap()
                    && tamari_leq_with(x.upper(), y.upper(), LeqMethod::RotationClosure).unwrap();
                let by_cc = images[a].as_slice().iter().zip(images[b].as_slice()).all(|(p, q)| p <= q);
                r.check(by_rotation == by_cc, || format!("order differs at {} vs {}", images[a], images[b]));
            }
        }
        let lat = cc_lattice(m);
        for x in lat.elements() {
            for y in lat.elements() {
                let j = join(x, y).unwrap();
                r.check(brute_join(x, y).as_ref() == Ok(&j), || format!("join {x} {y} gives {j}"));
                let k = meet(x, y).unwrap();
                r.check(brute_meet(x, y).as_ref() == Ok(&k), || format!("meet {x} {y} gives {k}"));
            }
        }
        let edges = lat.edge_count();
        r.notes.push(format!("n={m}: {} coordinates, {edges} covers", lat.len()));
    }
    r
}

fn cells(n: usize) -> Report {
    let mut r = Report::default();
    for m in 1..=n {
        let cells = enumerate_cells(m);
        for cell in &cells {
            let v = cell_vertices(cell);
            r.check(v.len() == 1 << (m - 1), || format!("cell at {} has {} vertices", cell.c_min(), v.len()));
            r.check(interior_coordinates(cell).is_empty(), || format!("cell at {} has interior points", cell.c_min()));
            r.check(gamma_inv(&gamma(cell)).as_ref() == Ok(cell), || format!("gamma not inverted at {}", cell.c_min()));
        }
        let sync: Vec<_> = enumerate_cc(m).into_iter().filter(|c| c.is_synchronized()).collect();
        r.check(sync.len() == cells.len(), || format!("n={m}: {} synchronized, {} cells", sync.len(), cells.len()));
        for c in enumerate_cc(m) {
            if c.is_synchronized() && m >= 2 {
                r.check(is_external(&c), || format!("synchronized {c} is internal"));
            }
            if m >= 3 && is_internal(&c) {
                r.check(phi(&c).is_new().unwrap(), || format!("internal {c} is not new"));
            }
        }
        r.notes.push(format!("n={m}: {} cells", cells.len()));
    }
    r
}

fn volumes(n: usize) -> Report {
    let mut r = Report::default();
    for m in 1..=n {
        let cells = enumerate_cells(m);
        for cell in &cells {
            let (a, b) = (sync_volume(&gamma(cell)).unwrap(), cell_volume(cell));
            r.check(a == b, || format!("cell at {}: volume {b}, inverted volume {a}", cell.c_min()));
        }
        for c in cc_lattice(m).elements().iter().filter(|c| c.is_synchronized()) {
            r.check(hypercube_is_partitioned(c) == Ok(true), || format!("box of {c} is not tiled by its cells"));
        }
        let total: u64 = cells.iter().map(cell_volume).sum();
        r.notes.push(format!("n={m}: total volume {total}"));
    }
    r
}

fn shelling(n: usize) -> Report {
    let mut r = Report::default();
    for m in 1..=n {
        let report = verify_el_shellability(m);
        r.checks += report.pairs;
        *r.pairs.get_or_insert(0) += report.pairs;
        r.failures.extend(report.failures);
        let values = mobius_values(m);
        r.check(values.keys().all(|v| (-1..=1).contains(v)), || format!("n={m}: Möbius values {values:?}"));
        r.notes.push(format!("n={m}: {} pairs ({:?})", report.pairs, report.mode));
    }
    r
}

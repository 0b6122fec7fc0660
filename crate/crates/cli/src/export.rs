//! The cubic realization as a directed graph of covers.

use std::fmt::Write;

use serde::Serialize;

use tamari_cubic::cubic::cc_lattice;
use tamari_cubic::CubicCoordinate;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizationGraph {
    pub n: usize,
    pub vertices: Vec<CubicCoordinate>,
    /// `(from, to)` indices into `vertices`, one per cover relation.
    pub edges: Vec<(usize, usize)>,
}

impl RealizationGraph {
    pub fn new(n: usize) -> Self {
        let lat = cc_lattice(n);
        let edges = (0..lat.len()).flat_map(|a| lat.up(a).iter().map(move |&b| (a, b))).collect();
        RealizationGraph { n, vertices: lat.elements().to_vec(), edges }
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph cc{} {{\n", self.n);
        for (k, v) in self.vertices.iter().enumerate() {
            writeln!(out, "  {k} [label=\"{v}\"];").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  {a} -> {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

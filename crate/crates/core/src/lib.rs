//! Tamari intervals and their cubic coordinates.
//!
//! A Tamari interval of size `n` is encoded by a tuple of `n - 1` integers
//! (its cubic coordinate), and the interval lattice becomes the componentwise
//! order on those tuples. The modules follow the chain of bijections
//!
//! ```text
//! intervals of binary trees  <->  interval-posets  <->  diagram pairs  <->  cubic coordinates
//! ```
//!
//! then study the geometry ([`cells`]) and the EL-labelling ([`shelling`]).
//!
//! Node, letter and component positions are 1-based everywhere.

pub mod cells;
pub mod cubic;
pub mod diagrams;
pub mod error;
pub mod intervalposets;
pub mod oracle;
pub mod shelling;
pub mod trees;

pub use cells::Cell;
pub use cubic::CubicCoordinate;
pub use diagrams::{DualTamariDiagram, TamariDiagram, TamariIntervalDiagram};
pub use error::{Error, Result};
pub use intervalposets::{IntervalPoset, TamariInterval};
pub use shelling::{ELLabel, SaturatedChain};
pub use trees::BinaryTree;

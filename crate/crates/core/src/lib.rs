//! Weak Ramsey numbers and bad sequences under Dickson's lemma.
//!
//! The crate computes least witnesses for the weak Paris–Harrington
//! principle for pairs and for miniaturized Dickson's lemma by exhaustive
//! search, converts bad colorings into bad sequences and back, lifts bad
//! colorings to higher dimensions, extracts weakly homogeneous sets with an
//! Erdős–Rado tree, and evaluates the associated tower and fast-growing
//! bounds exactly.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod format;
pub mod lift;
pub mod primitives;
pub mod search;
pub mod transforms;

pub use error::{Error, Result};
pub use primitives::{Coloring, FSpec, Tuple, TupleSequence, Witness, WitnessKind};

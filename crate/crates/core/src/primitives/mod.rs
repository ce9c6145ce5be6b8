//! Domain types and the basic predicates: product-order domination, norms,
//! bad and bounded sequences, and (weak) homogeneity of colorings.

mod coloring;
mod fspec;
mod homogeneity;
mod tuple;
mod witness;

pub use coloring::{binomial, ColorRule, Coloring, Combinations, DEFAULT_MAX_CELLS};
pub use fspec::{eval_f, FSpec};
pub use homogeneity::{is_homogeneous, is_min_d_homogeneous, is_weakly_homogeneous};
pub use tuple::{dominates, is_bad_sequence, is_bounded, norm, Tuple, TupleSequence};
pub use witness::{Payload, Witness, WitnessKind};

use std::fmt;

use crate::error::{Error, Result};
use crate::primitives::{
    is_min_d_homogeneous, is_weakly_homogeneous, Coloring, FSpec, TupleSequence,
};
use crate::search;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    WeakHomSet,
    BadSequence,
    BadColoring,
    MinDHomSet,
}

#[derive(Debug, Clone)]
pub enum Payload {
    /// A weakly homogeneous set, with `|set| > f(min set)` when `exceeds` is
    /// given and `|set| ≥ min_len` always.
    WeakHomSet {
        coloring: Coloring,
        set: Vec<u64>,
        exceeds: Option<FSpec>,
        min_len: usize,
    },
    BadSequence {
        sequence: TupleSequence,
        a: u64,
        f: FSpec,
    },
    BadColoring {
        coloring: Coloring,
        f: FSpec,
    },
    MinDHomSet {
        coloring: Coloring,
        set: Vec<u64>,
    },
}

/// A certified search or construction output. Constructors check the
/// property before handing the witness out, and [`Witness::verify`]
/// re-checks it from scratch.
#[derive(Debug, Clone)]
pub struct Witness {
    payload: Payload,
    certificate: String,
}

impl Witness {
    pub fn weak_hom_set(
        coloring: Coloring,
        set: Vec<u64>,
        exceeds: Option<FSpec>,
        min_len: usize,
    ) -> Result<Self> {
        let certificate = match &exceeds {
            Some(f) => format!(
                "weakly homogeneous set of size {} > f(min H) = {} for f={f}",
                set.len(),
                set.first().map_or(0, |&m| f.eval(m))
            ),
            None => format!("weakly homogeneous set of size {} >= {min_len}", set.len()),
        };
        Self::checked(
            Payload::WeakHomSet {
                coloring,
                set,
                exceeds,
                min_len,
            },
            certificate,
        )
    }

    pub fn bad_sequence(sequence: TupleSequence, a: u64, f: FSpec) -> Result<Self> {
        let certificate = format!(
            "({a},{f})-bad sequence of {} tuples of arity {}",
            sequence.len(),
            sequence.arity()
        );
        Self::checked(Payload::BadSequence { sequence, a, f }, certificate)
    }

    pub fn bad_coloring(coloring: Coloring, f: FSpec) -> Result<Self> {
        let certificate = format!(
            "{f}-bad coloring [{},{}]^{} -> {}",
            coloring.lo(),
            coloring.hi(),
            coloring.dim(),
            coloring.colors()
        );
        Self::checked(Payload::BadColoring { coloring, f }, certificate)
    }

    pub fn min_d_hom_set(coloring: Coloring, set: Vec<u64>) -> Result<Self> {
        let certificate = format!(
            "min_{}-homogeneous set of size {}",
            coloring.dim().saturating_sub(1),
            set.len()
        );
        Self::checked(Payload::MinDHomSet { coloring, set }, certificate)
    }

    fn checked(payload: Payload, certificate: String) -> Result<Self> {
        let w = Witness {
            payload,
            certificate,
        };
        if w.verify()? {
            Ok(w)
        } else {
            Err(Error::precondition(format!(
                "witness failed verification: {}",
                w.certificate
            )))
        }
    }

    pub fn kind(&self) -> WitnessKind {
        match self.payload {
            Payload::WeakHomSet { .. } => WitnessKind::WeakHomSet,
            Payload::BadSequence { .. } => WitnessKind::BadSequence,
            Payload::BadColoring { .. } => WitnessKind::BadColoring,
            Payload::MinDHomSet { .. } => WitnessKind::MinDHomSet,
        }
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn certificate(&self) -> &str {
        &self.certificate
    }

    /// The set carried by set-valued witnesses.
    pub fn set(&self) -> Option<&[u64]> {
        match &self.payload {
            Payload::WeakHomSet { set, .. } | Payload::MinDHomSet { set, .. } => Some(set),
            _ => None,
        }
    }

    pub fn sequence(&self) -> Option<&TupleSequence> {
        match &self.payload {
            Payload::BadSequence { sequence, .. } => Some(sequence),
            _ => None,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.payload {
            Payload::WeakHomSet { coloring, .. }
            | Payload::BadColoring { coloring, .. }
            | Payload::MinDHomSet { coloring, .. } => Some(coloring),
            Payload::BadSequence { .. } => None,
        }
    }

    /// Re-runs the predicate matching the witness kind.
    pub fn verify(&self) -> Result<bool> {
        Ok(match &self.payload {
            Payload::WeakHomSet {
                coloring,
                set,
                exceeds,
                min_len,
            } => {
                let big_enough = match (exceeds, set.first()) {
                    (Some(f), Some(&m)) => set.len() as u64 > f.eval(m),
                    (Some(_), None) => false,
                    (None, _) => true,
                };
                big_enough && set.len() >= *min_len && is_weakly_homogeneous(coloring, set)?
            }
            Payload::BadSequence { sequence, a, f } => {
                sequence.is_bad() && sequence.is_bounded(*a, f)
            }
            Payload::BadColoring { coloring, f } => search::is_f_bad_coloring(coloring, f)?,
            Payload::MinDHomSet { coloring, set } => {
                coloring.dim() >= 1 && is_min_d_homogeneous(coloring, set)?
            }
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.certificate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_refuse_false_claims() {
        let c = Coloring::from_fn(2, 2, 0, 2, 100, |p| u32::from(p[0] == 1)).unwrap();
        assert!(Witness::weak_hom_set(c.clone(), vec![0, 1, 2], None, 0).is_err());
        let w = Witness::weak_hom_set(c, vec![0, 2], Some(FSpec::Const(1)), 2).unwrap();
        assert_eq!(w.kind(), WitnessKind::WeakHomSet);
        assert!(w.verify().unwrap());

        let s = TupleSequence::from_rows(1, [[0], [1]]).unwrap();
        assert!(Witness::bad_sequence(s, 0, FSpec::Const(5)).is_err());
        let s = TupleSequence::from_rows(1, [[1], [0]]).unwrap();
        assert!(Witness::bad_sequence(s.clone(), 0, FSpec::Const(1)).is_err());
        assert!(Witness::bad_sequence(s, 0, FSpec::Const(2)).is_ok());
    }
}

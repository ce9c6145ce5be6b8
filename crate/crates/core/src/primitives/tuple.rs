use std::fmt;

use crate::error::{Error, Result};
use crate::primitives::FSpec;

/// A c-tuple of naturals under the coordinatewise product order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple(Vec<u64>);

impl Tuple {
    pub fn new(coords: Vec<u64>) -> Self {
        Tuple(coords)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    /// Largest coordinate; the empty tuple has norm 0.
    pub fn norm(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `self ≤ other` in the product order.
    pub fn dominated_by(&self, other: &Tuple) -> Result<bool> {
        if self.arity() != other.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(self.le_unchecked(other))
    }

    pub(crate) fn le_unchecked(&self, other: &Tuple) -> bool {
        self.0.iter().zip(&other.0).all(|(s, t)| s <= t)
    }
}

impl From<Vec<u64>> for Tuple {
    fn from(v: Vec<u64>) -> Self {
        Tuple(v)
    }
}

impl<const N: usize> From<[u64; N]> for Tuple {
    fn from(v: [u64; N]) -> Self {
        Tuple(v.to_vec())
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A finite sequence of tuples sharing one arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupleSequence {
    arity: usize,
    items: Vec<Tuple>,
}

impl TupleSequence {
    pub fn new(arity: usize, items: Vec<Tuple>) -> Result<Self> {
        if let Some(bad) = items.iter().find(|t| t.arity() != arity) {
            return Err(Error::Arity {
                expected: arity,
                found: bad.arity(),
            });
        }
        Ok(TupleSequence { arity, items })
    }

    /// Builds a sequence from raw coordinate rows.
    pub fn from_rows<I, R>(arity: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: Into<Vec<u64>>,
    {
        let items = rows.into_iter().map(|r| Tuple::new(r.into())).collect();
        Self::new(arity, items)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn items(&self) -> &[Tuple] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// First pair `i < j` (in lexicographic order of `(i, j)`) with `items[i] ≤ items[j]`.
    pub fn first_domination(&self) -> Option<(usize, usize)> {
        for (i, s) in self.items.iter().enumerate() {
            for (j, t) in self.items.iter().enumerate().skip(i + 1) {
                if s.le_unchecked(t) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_bad(&self) -> bool {
        self.first_domination().is_none()
    }

    /// Every item `i` has norm strictly below `f(a + i)`.
    pub fn is_bounded(&self, a: u64, f: &FSpec) -> bool {
        self.items
            .iter()
            .enumerate()
            .all(|(i, t)| t.norm() < f.eval(a.saturating_add(i as u64)))
    }
}

impl fmt::Display for TupleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

pub fn dominates(s: &Tuple, t: &Tuple) -> Result<bool> {
    s.dominated_by(t)
}

pub fn norm(t: &Tuple) -> u64 {
    t.norm()
}

pub fn is_bad_sequence(s: &TupleSequence) -> bool {
    s.is_bad()
}

pub fn is_bounded(s: &TupleSequence, a: u64, f: &FSpec) -> bool {
    s.is_bounded(a, f)
}

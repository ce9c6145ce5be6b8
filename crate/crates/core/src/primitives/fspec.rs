use std::fmt;

/// A finitely described function `N → N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FSpec {
    Const(u64),
    Id,
    /// `x ↦ p·x + q`
    Affine(u64, u64),
    /// Lookup table; arguments past the end map to `default`.
    Table {
        values: Vec<u64>,
        default: u64,
    },
}

impl FSpec {
    /// Total evaluation. Affine values saturate at `u64::MAX`.
    pub fn eval(&self, x: u64) -> u64 {
        match self {
            FSpec::Const(k) => *k,
            FSpec::Id => x,
            FSpec::Affine(p, q) => p.saturating_mul(x).saturating_add(*q),
            FSpec::Table { values, default } => usize::try_from(x)
                .ok()
                .and_then(|i| values.get(i))
                .copied()
                .unwrap_or(*default),
        }
    }
}

pub fn eval_f(f: &FSpec, x: u64) -> u64 {
    f.eval(x)
}

impl fmt::Display for FSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FSpec::Const(k) => write!(f, "const:{k}"),
            FSpec::Id => write!(f, "id"),
            FSpec::Affine(p, q) => write!(f, "affine:{p},{q}"),
            FSpec::Table { values, default } => {
                write!(f, "table[")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ";default {default}]")
            }
        }
    }
}

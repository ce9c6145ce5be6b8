//! Exact evaluation of the tower bounds for `wr^d_c(m)`, the finite levels
//! of the fast-growing hierarchy, and the iterated-log threshold functions.
//!
//! All values are arbitrary-precision. Anything that would exceed the bit
//! budget is refused with [`Error::Budget`], whose estimate is a lower bound
//! on the bit length of the refused value.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cap on the bit length of any intermediate value.
pub const DEFAULT_MAX_BITS: u64 = 1 << 20;

/// Bit-length limit for the bound evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitBudget(pub u64);

impl Default for BitBudget {
    fn default() -> Self {
        BitBudget(DEFAULT_MAX_BITS)
    }
}

impl BitBudget {
    fn refuse(&self, what: impl Into<String>, bits: impl std::fmt::Display) -> Error {
        Error::budget(what, format!("at least {bits} bits, limit {}", self.0))
    }

    /// `2^exp`, if it fits.
    fn pow2(&self, exp: &BigUint) -> Result<BigUint> {
        match exp.to_u64() {
            Some(e) if e < self.0 => Ok(BigUint::one() << e),
            _ => Err(self.refuse(format!("2^{}", short(exp)), exp + 1u32)),
        }
    }

    /// `base^exp`, if it fits.
    fn pow(&self, base: u64, exp: u64) -> Result<BigUint> {
        if exp == 0 {
            return Ok(BigUint::one());
        }
        if base <= 1 {
            return Ok(BigUint::from(base));
        }
        let bits_per = 64 - base.leading_zeros() as u64 - 1;
        let est = (bits_per as u128) * (exp as u128);
        if est >= self.0 as u128 {
            return Err(self.refuse(format!("{base}^{exp}"), est));
        }
        Ok(BigUint::from(base).pow(exp as u32))
    }
}

fn short(x: &BigUint) -> String {
    let s = x.to_string();
    if s.len() <= 24 {
        s
    } else {
        format!("<{} digits>", s.len())
    }
}

/// `height`-fold iterated power of two applied to `x`.
pub fn tower(height: u32, x: &BigUint) -> Result<BigUint> {
    tower_with(height, x, &BitBudget::default())
}

pub fn tower_with(height: u32, x: &BigUint, budget: &BitBudget) -> Result<BigUint> {
    let mut v = x.clone();
    for _ in 0..height {
        v = budget.pow2(&v)?;
    }
    Ok(v)
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Upper bound `tower(d - 2, m^{k·c})` with `k = (d + 1)!`.
pub fn ub_bound(d: u32, c: u64, m: u64) -> Result<BigUint> {
    ub_bound_with(d, c, m, &BitBudget::default())
}

pub fn ub_bound_with(d: u32, c: u64, m: u64, budget: &BitBudget) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::precondition(format!("dimension {d} < 2")));
    }
    let exp = factorial(d as u64 + 1)
        .and_then(|k| k.checked_mul(c))
        .ok_or_else(|| budget.refuse(format!("exponent ({}+1)!·{c}", d), "64"))?;
    let base = budget.pow(m, exp)?;
    tower_with(d - 2, &base, budget)
}

/// Lower bound for `wr^d_{kc}(m)`: returns `(k·c, tower(d - 2, m^c))` with
/// `k = 5^{d-2}`.
pub fn lb_bound(d: u32, c: u64, m: u64) -> Result<(u64, BigUint)> {
    lb_bound_with(d, c, m, &BitBudget::default())
}

pub fn lb_bound_with(d: u32, c: u64, m: u64, budget: &BitBudget) -> Result<(u64, BigUint)> {
    if d < 2 {
        return Err(Error::precondition(format!("dimension {d} < 2")));
    }
    if c < 1 {
        return Err(Error::precondition("lower bound needs c >= 1"));
    }
    if m < d as u64 {
        return Err(Error::precondition(format!(
            "m = {m} is below the dimension {d}"
        )));
    }
    let colors = 5u64
        .checked_pow(d - 2)
        .and_then(|k| k.checked_mul(c))
        .ok_or_else(|| Error::domain(format!("5^{}·{c} overflows", d - 2)))?;
    let base = budget.pow(m, c)?;
    Ok((colors, tower_with(d - 2, &base, budget)?))
}

/// `F_n(x)` with `F_0(x) = x + 1` and `F_{n+1}(x) = F_n^{(x+1)}(x)`.
pub fn fgh(n: u32, x: u64) -> Result<BigUint> {
    fgh_with(n, &BigUint::from(x), &BitBudget::default())
}

pub fn fgh_with(n: u32, x: &BigUint, budget: &BitBudget) -> Result<BigUint> {
    match n {
        0 => Ok(x + 1u32),
        1 => Ok(x * 2u32 + 1u32),
        // F_2(x) = 2^{x+1}·(x+1) - 1
        2 => {
            let x1 = x + 1u32;
            let p = budget.pow2(&x1)?;
            if p.bits() + x1.bits() > budget.0 {
                return Err(budget.refuse(format!("F_2({})", short(x)), p.bits() + x1.bits() - 1));
            }
            Ok(p * x1 - 1u32)
        }
        _ => {
            // F_n(x) ≥ F_2(x) has more than x bits.
            let steps = match x.to_u64() {
                Some(s) if s < budget.0 => s + 1,
                _ => return Err(budget.refuse(format!("F_{n}({})", short(x)), x)),
            };
            let mut v = x.clone();
            for _ in 0..steps {
                v = fgh_with(n - 1, &v, budget)?;
            }
            Ok(v)
        }
    }
}

/// `k`-fold iterated `⌊log2⌋`; `log_iter(0, x) = x`.
pub fn log_iter(k: u32, x: &BigUint) -> Result<BigUint> {
    let mut v = x.clone();
    for step in 0..k {
        if v.is_zero() {
            return Err(Error::domain(format!(
                "log of 0 at step {} of {k}",
                step + 1
            )));
        }
        v = BigUint::from(v.bits() - 1);
    }
    Ok(v)
}

/// `⌊ⁿ√(log^{(d-2)}(x))⌋`; the `0`-th root is the identity.
pub fn threshold_f(d: u32, n: u32, x: &BigUint) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::precondition(format!("dimension {d} < 2")));
    }
    let v = log_iter(d - 2, x)?;
    Ok(if n == 0 { v } else { v.nth_root(n) })
}

/// `⌊log^{(d-1)}(x)⌋`.
pub fn log_threshold(d: u32, x: &BigUint) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::precondition(format!("dimension {d} < 2")));
    }
    log_iter(d - 1, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn tower_examples() {
        assert_eq!(tower(0, &big(9)).unwrap(), big(9));
        assert_eq!(tower(1, &big(3)).unwrap(), big(8));
        assert_eq!(tower(2, &big(2)).unwrap(), big(16));
        assert_eq!(tower(3, &big(2)).unwrap(), big(65536));
        assert!(matches!(tower(5, &big(2)), Err(Error::Budget { .. })));
    }

    #[test]
    fn ub_examples() {
        assert_eq!(ub_bound(2, 2, 3).unwrap(), big(531441));
        assert_eq!(ub_bound(2, 1, 4).unwrap(), big(4u64.pow(6)));
        let err = ub_bound(3, 1, 2).unwrap_err();
        match err {
            Error::Budget { estimate, .. } => assert!(estimate.contains("16777217"), "{estimate}"),
            e => panic!("{e:?}"),
        }
        assert!(ub_bound(1, 1, 2).is_err());
    }

    #[test]
    fn lb_examples() {
        assert_eq!(lb_bound(2, 2, 3).unwrap(), (2, big(9)));
        assert_eq!(lb_bound(3, 1, 3).unwrap(), (5, big(8)));
        assert_eq!(lb_bound(2, 1, 5).unwrap(), (1, big(5)));
        assert!(lb_bound(3, 1, 2).is_err());
        assert!(lb_bound(2, 0, 3).is_err());
    }

    #[test]
    fn small_pow_edges() {
        let b = BitBudget::default();
        assert_eq!(b.pow(0, 0).unwrap(), big(1));
        assert_eq!(b.pow(0, 5).unwrap(), big(0));
        assert_eq!(b.pow(1, 1 << 40).unwrap(), big(1));
        assert_eq!(b.pow(7, 0).unwrap(), big(1));
        assert_eq!(b.pow(3, 4).unwrap(), big(81));
    }

    #[test]
    fn fgh_examples() {
        assert_eq!(fgh(0, 7).unwrap(), big(8));
        assert_eq!(fgh(1, 3).unwrap(), big(7));
        assert_eq!(fgh(2, 2).unwrap(), big(23));
        assert_eq!(fgh(3, 1).unwrap(), big(2047));
        assert!(matches!(fgh(3, 2), Err(Error::Budget { .. })));
        assert!(matches!(fgh(4, 3), Err(Error::Budget { .. })));
    }

    #[test]
    fn log_examples() {
        assert_eq!(log_iter(1, &big(8)).unwrap(), big(3));
        assert_eq!(log_iter(2, &big(16)).unwrap(), big(2));
        assert_eq!(log_iter(0, &big(5)).unwrap(), big(5));
        assert!(log_iter(1, &big(0)).is_err());
        assert!(log_iter(2, &big(1)).is_err());
        assert_eq!(log_iter(0, &big(0)).unwrap(), big(0));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold_f(2, 2, &big(9)).unwrap(), big(3));
        assert_eq!(threshold_f(3, 1, &big(256)).unwrap(), big(8));
        assert_eq!(threshold_f(2, 1, &big(12345)).unwrap(), big(12345));
        assert_eq!(threshold_f(3, 0, &big(1024)).unwrap(), big(10));
        assert_eq!(log_threshold(3, &big(65536)).unwrap(), big(4));
    }
}

//! Memoized exact integer sequences: Fibonacci, Lucas and the type-D
//! independent-set sequence `d` (1, 4, 5, 9, 14, ...).

use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// `F_1 = F_2 = 1`, defined for `n >= 1`.
    Fibonacci,
    /// `L_0 = 2`, `L_1 = 1`, defined for `n >= 0`.
    Lucas,
    /// `d_0 = 1`, `d_1 = 1`, `d_2 = 4`, `d_n = d_{n-1} + d_{n-2}` for `n >= 3`.
    D,
}

/// Thread-safe memo of the three sequences.
#[derive(Debug, Default)]
pub struct SequenceProvider {
    fib: RwLock<Vec<BigUint>>,
    lucas: RwLock<Vec<BigUint>>,
    d: RwLock<Vec<BigUint>>,
}

impl SequenceProvider {
    pub fn new() -> Self {
        SequenceProvider {
            // index 0 holds F_0 = 0 so that index n is F_n
            fib: RwLock::new(vec![BigUint::zero(), BigUint::one(), BigUint::one()]),
            lucas: RwLock::new(vec![BigUint::from(2u32), BigUint::one()]),
            d: RwLock::new(vec![BigUint::one(), BigUint::one(), BigUint::from(4u32)]),
        }
    }

    pub fn get(&self, kind: SequenceKind, n: usize) -> Result<BigUint> {
        let table = match kind {
            SequenceKind::Fibonacci => {
                if n == 0 {
                    return Err(domain("Fibonacci index starts at 1"));
                }
                &self.fib
            }
            SequenceKind::Lucas => &self.lucas,
            SequenceKind::D => &self.d,
        };
        if let Some(v) = table.read().expect("sequence memo poisoned").get(n) {
            return Ok(v.clone());
        }
        let mut w = table.write().expect("sequence memo poisoned");
        while w.len() <= n {
            let next = &w[w.len() - 1] + &w[w.len() - 2];
            w.push(next);
        }
        Ok(w[n].clone())
    }
}

static PROVIDER: LazyLock<SequenceProvider> = LazyLock::new(SequenceProvider::new);

pub fn sequence(kind: SequenceKind, n: usize) -> Result<BigUint> {
    PROVIDER.get(kind, n)
}

pub fn fibonacci(n: usize) -> Result<BigUint> {
    sequence(SequenceKind::Fibonacci, n)
}

pub fn lucas(n: usize) -> Result<BigUint> {
    sequence(SequenceKind::Lucas, n)
}

pub fn d_number(n: usize) -> Result<BigUint> {
    sequence(SequenceKind::D, n)
}

/// `C(a, b)`, zero whenever `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(a as u64), BigUint::from(b as u64))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Exact division; `None` when `den` does not divide `num`.
pub fn exact_div(num: &BigUint, den: &BigUint) -> Option<BigUint> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

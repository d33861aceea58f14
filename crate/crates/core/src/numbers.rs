//! Bell, 2-Bell, Stirling, Fibonacci, Lucas, binomial and factorial numbers.
//!
//! [`Sequences`] grows its tables on demand and never rewrites an entry. It
//! is not shared between threads; give each worker its own.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("{what} is defined for n >= {min}, got {n}")]
    BelowDomain { what: &'static str, min: usize, n: usize },
}

/// Memo tables for the classical sequences.
#[derive(Debug, Clone)]
pub struct Sequences {
    // bell[i] is the first entry of row i of the Bell triangle
    bell: Vec<BigUint>,
    triangle_row: Vec<BigUint>,
    stirling: Vec<Vec<BigUint>>,
    pascal: Vec<Vec<BigUint>>,
    fib: Vec<BigUint>,
    lucas: Vec<BigUint>,
    factorial: Vec<BigUint>,
}

impl Default for Sequences {
    fn default() -> Self {
        Self::new()
    }
}

impl Sequences {
    pub fn new() -> Self {
        Sequences {
            bell: alloc::vec![BigUint::one()],
            triangle_row: alloc::vec![BigUint::one()],
            stirling: alloc::vec![alloc::vec![BigUint::one()]],
            pascal: alloc::vec![alloc::vec![BigUint::one()]],
            fib: alloc::vec![BigUint::zero(), BigUint::one()],
            lucas: alloc::vec![BigUint::from(2u32), BigUint::one()],
            factorial: alloc::vec![BigUint::one()],
        }
    }

    /// Bell number `B_n` via the Bell triangle.
    pub fn bell(&mut self, n: usize) -> BigUint {
        while self.bell.len() <= n {
            let prev = &self.triangle_row;
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(prev[prev.len() - 1].clone());
            for x in prev {
                let next = row[row.len() - 1].clone() + x;
                row.push(next);
            }
            self.bell.push(row[0].clone());
            self.triangle_row = row;
        }
        self.bell[n].clone()
    }

    /// Stirling number of the second kind `{n, k}`; zero when `k > n`.
    pub fn stirling2(&mut self, n: usize, k: usize) -> BigUint {
        while self.stirling.len() <= n {
            let prev = &self.stirling[self.stirling.len() - 1];
            let m = prev.len();
            let row: Vec<BigUint> = (0..=m)
                .map(|k| {
                    let stay = if k < m { prev[k].clone() * k } else { BigUint::zero() };
                    let new_block = if k > 0 { prev[k - 1].clone() } else { BigUint::zero() };
                    stay + new_block
                })
                .collect();
            self.stirling.push(row);
        }
        self.stirling[n].get(k).cloned().unwrap_or_default()
    }

    /// 2-Bell number `T_n = sum_k k {n, k}`, the total block count over all
    /// partitions of an `n`-set.
    pub fn two_bell(&mut self, n: usize) -> BigUint {
        (1..=n).map(|k| self.stirling2(n, k) * k).sum()
    }

    /// `F_0 = 0`, `F_1 = F_2 = 1`.
    pub fn fibonacci(&mut self, n: usize) -> BigUint {
        while self.fib.len() <= n {
            let l = self.fib.len();
            let next = &self.fib[l - 1] + &self.fib[l - 2];
            self.fib.push(next);
        }
        self.fib[n].clone()
    }

    /// `L_0 = 2`, `L_1 = 1`, `L_2 = 3`.
    pub fn lucas(&mut self, n: usize) -> BigUint {
        while self.lucas.len() <= n {
            let l = self.lucas.len();
            let next = &self.lucas[l - 1] + &self.lucas[l - 2];
            self.lucas.push(next);
        }
        self.lucas[n].clone()
    }

    /// `C(n, k)`; zero when `k > n`.
    pub fn binomial(&mut self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        while self.pascal.len() <= n {
            let prev = &self.pascal[self.pascal.len() - 1];
            let row: Vec<BigUint> = (0..=prev.len())
                .map(|k| match k {
                    0 => BigUint::one(),
                    k if k == prev.len() => BigUint::one(),
                    k => &prev[k - 1] + &prev[k],
                })
                .collect();
            self.pascal.push(row);
        }
        self.pascal[n][k].clone()
    }

    pub fn factorial(&mut self, n: usize) -> BigUint {
        while self.factorial.len() <= n {
            let l = self.factorial.len();
            let next = &self.factorial[l - 1] * l;
            self.factorial.push(next);
        }
        self.factorial[n].clone()
    }

    /// Average number of blocks in a partition of an `n`-set,
    /// `(B_{n+1} - B_n) / B_n`, `n >= 1`.
    pub fn average_blocks(&mut self, n: usize) -> Result<ExactRational, NumberError> {
        if n < 1 {
            return Err(NumberError::BelowDomain {
                what: "average_blocks",
                min: 1,
                n,
            });
        }
        let b = self.bell(n);
        let t = self.bell(n + 1) - &b;
        debug_assert_eq!(t, self.two_bell(n), "T_n = B_(n+1) - B_n");
        Ok(ExactRational::ratio(&t, &b))
    }
}

pub fn bell(n: usize) -> BigUint {
    Sequences::new().bell(n)
}

pub fn two_bell(n: usize) -> BigUint {
    Sequences::new().two_bell(n)
}

pub fn stirling2(n: usize, k: usize) -> BigUint {
    Sequences::new().stirling2(n, k)
}

pub fn fibonacci(n: usize) -> BigUint {
    Sequences::new().fibonacci(n)
}

pub fn lucas(n: usize) -> BigUint {
    Sequences::new().lucas(n)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    Sequences::new().binomial(n, k)
}

pub fn factorial(n: usize) -> BigUint {
    Sequences::new().factorial(n)
}

//! Exact counting formulas with memoization.
//!
//! Each formula is applied only inside the `(n, k)` range its derivation
//! covers. Cells outside that range are resolved by one oracle call, cached
//! like any other value. Nothing is extrapolated.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::{AvoidanceQuery, Oracle};
use crate::perm::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    A213,
    B213,
    A231,
    B231,
    A1342,
    B1342,
}

/// Memoized evaluator. The memo is per instance; share nothing, clone freely.
#[derive(Debug, Clone, Default)]
pub struct Recurrences {
    oracle: Oracle,
    memo: HashMap<(Kind, usize, usize), BigUint>,
}

fn pattern(s: &str) -> Pattern {
    s.parse().expect("built-in pattern")
}

fn domain(what: &str, n: usize, k: usize) -> Error {
    Error::Domain(format!("{what} is undefined at n = {n}, k = {k}"))
}

/// `F_i` with `F_1 = F_2 = 1`.
pub fn fibonacci(i: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..i {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

impl Recurrences {
    pub fn new(oracle: Oracle) -> Self {
        Recurrences {
            oracle,
            memo: HashMap::new(),
        }
    }

    pub fn oracle(&self) -> &Oracle {
        &self.oracle
    }

    fn cached(&self, kind: Kind, n: usize, k: usize) -> Option<BigUint> {
        self.memo.get(&(kind, n, k)).cloned()
    }

    fn store(&mut self, kind: Kind, n: usize, k: usize, v: BigUint) -> BigUint {
        self.memo.insert((kind, n, k), v.clone());
        v
    }

    fn oracle_b(&self, n: usize, k: usize, tau: &str, circular: bool) -> Result<BigUint> {
        let tau = pattern(tau);
        let q = if circular {
            AvoidanceQuery::circular(n, k, &tau)
        } else {
            AvoidanceQuery::standard(n, k, &tau)
        };
        self.oracle.count(&q.with_first(n))
    }

    /// `a_{n,k}(213)`.
    pub fn a213(&mut self, n: usize, k: usize) -> Result<BigUint> {
        if n < 1 || k < 1 {
            return Err(domain("a213", n, k));
        }
        if let Some(v) = self.cached(Kind::A213, n, k) {
            return Ok(v);
        }
        let v = match (n, k) {
            (1, 1) => BigUint::zero(),
            (1, _) => BigUint::one(),
            (_, 1 | 2) => BigUint::zero(),
            (_, 3) => pow2(n - 2),
            _ => {
                let mut sum = BigUint::zero();
                for i in 1..n {
                    sum += self.a213(i, k)? * self.a213(n - i, k - 1)?;
                }
                sum
            }
        };
        Ok(self.store(Kind::A213, n, k, v))
    }

    /// `b_{n,k}(213)`: members of `A_n(δ_k;213)` with `π_1 = n`.
    ///
    /// `b_{n,k} = a_{n-1,k-1}` is used for `n >= 4, k >= 4`. At `k = 3` the
    /// identity fails (`b_{4,3} = 1` while `a_{3,2} = 0`), so those cells
    /// come from the oracle.
    pub fn b213(&mut self, n: usize, k: usize) -> Result<BigUint> {
        if n < 1 || k < 1 {
            return Err(domain("b213", n, k));
        }
        if let Some(v) = self.cached(Kind::B213, n, k) {
            return Ok(v);
        }
        let v = if n >= 4 && k >= 4 {
            self.a213(n - 1, k - 1)?
        } else {
            self.oracle_b(n, k, "213", false)?
        };
        Ok(self.store(Kind::B213, n, k, v))
    }

    /// `a_{n,k}(312)`, equal to `a_{n,k}(213)` by reversal.
    pub fn a312(&mut self, n: usize, k: usize) -> Result<BigUint> {
        self.a213(n, k)
    }

    /// `a_{n,k}(231)`.
    pub fn a231(&mut self, n: usize, k: usize) -> Result<BigUint> {
        if n < 1 || k < 1 {
            return Err(domain("a231", n, k));
        }
        if let Some(v) = self.cached(Kind::A231, n, k) {
            return Ok(v);
        }
        let v = match (n, k) {
            (1, 1) => BigUint::zero(),
            (1, _) => BigUint::one(),
            (_, 1 | 2) => BigUint::zero(),
            (_, 3) => BigUint::from(n - 1),
            (2, _) => BigUint::one(),
            (_, 4) => {
                let mut sum = BigUint::from(n - 2);
                for j in 2..n {
                    sum += self.a231(n - j + 1, 4)?;
                }
                sum
            }
            _ => {
                let mut sum = self.b231(n, k)?;
                for j in 2..n {
                    sum += self.a213(j - 1, k - 2)? * self.a231(n + 1 - j, k)?;
                }
                sum
            }
        };
        Ok(self.store(Kind::A231, n, k, v))
    }

    /// `b_{n,k}(231)`: members of `A_n(δ_k;231)` with `π_1 = n`.
    pub fn b231(&mut self, n: usize, k: usize) -> Result<BigUint> {
        if n < 1 || k < 1 {
            return Err(domain("b231", n, k));
        }
        if let Some(v) = self.cached(Kind::B231, n, k) {
            return Ok(v);
        }
        let v = if n >= 3 && k == 4 {
            BigUint::from(n - 2)
        } else if n >= 3 && k >= 5 {
            let mut sum = self.b231(n - 1, k)?;
            for j in 2..n - 1 {
                sum += self.a213(j - 1, k - 2)? * self.a213(n - j, k - 2)?;
            }
            sum
        } else {
            self.oracle_b(n, k, "231", false)?
        };
        Ok(self.store(Kind::B231, n, k, v))
    }

    /// `a°_{n,k}(1324)`: `2^{n-2}` for `k = 3`, `F_{2n-3}` for `k >= 4`.
    pub fn a1324_circ(&self, n: usize, k: usize) -> Result<BigUint> {
        if n < 2 || k < 3 {
            return Err(domain("a1324_circ", n, k));
        }
        Ok(match (n, k) {
            (2, _) => BigUint::one(),
            (_, 3) => pow2(n - 2),
            _ => fibonacci(2 * n - 3),
        })
    }

    /// `a°_{n,k}(1423)`, identical to the 1324 counts.
    pub fn a1423_circ(&self, n: usize, k: usize) -> Result<BigUint> {
        self.a1324_circ(n, k)
    }

    /// `a°_{n,k}(1342)`.
    pub fn a1342_circ(&mut self, n: usize, k: usize) -> Result<BigUint> {
        if n < 1 || k < 3 {
            return Err(domain("a1342_circ", n, k));
        }
        if let Some(v) = self.cached(Kind::A1342, n, k) {
            return Ok(v);
        }
        let v = if k == 3 && n >= 3 {
            BigUint::from(n - 1)
        } else if k >= 4 && n >= 5 {
            let mut sum = self.a1342_circ(n - 1, k)? + self.b1342_circ(n, k)?;
            for r in 3..n {
                sum += self.b1342_circ(r, k - 1)?;
            }
            sum
        } else {
            self.oracle
                .count(&AvoidanceQuery::circular(n, k, &pattern("1342")))?
        };
        Ok(self.store(Kind::A1342, n, k, v))
    }

    /// `b°_{n,k}(1342)`: members of `A°_n(δ_k;1342)` with `π_1 = n`.
    pub fn b1342_circ(&mut self, n: usize, k: usize) -> Result<BigUint> {
        if n < 1 || k < 3 {
            return Err(domain("b1342_circ", n, k));
        }
        if let Some(v) = self.cached(Kind::B1342, n, k) {
            return Ok(v);
        }
        let v = if k == 3 || n <= 3 {
            BigUint::one()
        } else {
            self.b1342_circ(n - 1, k)? + self.b1342_circ(n - 1, k - 1)?
        };
        Ok(self.store(Kind::B1342, n, k, v))
    }
}

/// `a_{n,k}(τ)` for `τ ∈ {123, 132}`: exactly one member for every `n`.
pub fn trivial_counts(n: usize, k: usize, tau: &Pattern) -> Result<BigUint> {
    let name = tau.to_string();
    if name != "123" && name != "132" {
        return Err(Error::Domain(format!("trivial_counts covers 123 and 132, not {name}")));
    }
    if n < 1 || k < 3 {
        return Err(domain("trivial_counts", n, k));
    }
    Ok(BigUint::one())
}

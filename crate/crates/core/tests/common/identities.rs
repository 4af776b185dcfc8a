//! Counting identities checked cell by cell against brute-force counts.

use std::collections::HashMap;
use std::sync::Mutex;

use cycpat::perm::{any_rotation_contains, contains, lds_length};
use cycpat::{Oracle, Pattern};

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

type Key = (usize, usize, String, bool, Option<usize>, Option<usize>, Option<usize>);

/// Brute-force counts of constrained cyclic permutations, memoized.
#[derive(Default)]
pub struct Counts {
    oracle: Oracle,
    memo: Mutex<HashMap<Key, u64>>,
}

impl Counts {
    /// Members of `A_n(δ_k; τ)` (or `A°` when `circular`) with optional
    /// prescribed `π_1`, `π_n` and `π_{n-1}`.
    #[allow(clippy::too_many_arguments)]
    pub fn count(
        &self,
        n: usize,
        k: usize,
        tau: &str,
        circular: bool,
        first: Option<usize>,
        last: Option<usize>,
        second_last: Option<usize>,
    ) -> u64 {
        if n == 0 || k <= 1 {
            return 0;
        }
        let key = (n, k, tau.to_string(), circular, first, last, second_last);
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        let t = pat(tau);
        let v = self
            .oracle
            .count_where(n, |p, c| {
                first.is_none_or(|v| p[0] == v)
                    && last.is_none_or(|v| p[n - 1] == v)
                    && second_last.is_none_or(|v| n >= 2 && p[n - 2] == v)
                    && lds_length(p) < k
                    && if circular { !any_rotation_contains(c, &t) } else { !contains(c, &t) }
            })
            .unwrap();
        self.memo.lock().unwrap().insert(key, v);
        v
    }

    pub fn a(&self, n: usize, k: usize, tau: &str) -> u64 {
        self.count(n, k, tau, false, None, None, None)
    }

    /// `π_1 = n`.
    pub fn b(&self, n: usize, k: usize, tau: &str) -> u64 {
        self.count(n, k, tau, false, Some(n), None, None)
    }

    pub fn a_circ(&self, n: usize, k: usize, tau: &str) -> u64 {
        self.count(n, k, tau, true, None, None, None)
    }

    pub fn b_circ(&self, n: usize, k: usize, tau: &str) -> u64 {
        self.count(n, k, tau, true, Some(n), None, None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `a_{n,k}(213) = Σ_{j=2}^{n} b_{j,k}(213) a_{n+1-j,k}(213)`.
    As213,
    /// `#{π ∈ B_n(δ_k;213): π_n = 2} = a_{n-2,k-2}(213)`.
    N2s213,
    /// `b_{n,k}(213) = Σ_{j=2}^{n-1} b_{j,k}(213) a_{n-j,k-2}(213)`.
    Bs213,
    /// `b_{n+1,k}(213) = a_{n,k-1}(213)`.
    AEqualsB213,
    /// `#{π ∈ A_n(δ_k;231): π_1 = n-1, π_n = 1} = a_{n-2,k-2}(213)`.
    Bullet1,
    /// `#{π ∈ A_n(δ_k;231): π_1 = n, π_n = 2} = a_{n-2,k-2}(213)`.
    Bullet2,
    /// `#{π ∈ A_n(δ_k;231): π_1 = n, π_{n-1} = 1, π_n = n-2} = a_{n-3,k-2}(213)`.
    Bullet3,
    /// `a_{n,k}(231) = b_{n,k}(231) + Σ_{j=2}^{n-1} a_{j-1,k-2}(213) a_{n+1-j,k}(231)`.
    As231,
    /// `b_{n,k}(231) = b_{n-1,k}(231) + Σ_{j=2}^{n-2} a_{j-1,k-2}(213) a_{n-j,k-2}(213)`.
    Bs231,
    /// `#{π ∈ A°_n(δ_k;1342): π_1 = n-1, π_n = 1} = b°_{n-1,k-1}(1342)`.
    Delete1342,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::As213,
        Identity::N2s213,
        Identity::Bs213,
        Identity::AEqualsB213,
        Identity::Bullet1,
        Identity::Bullet2,
        Identity::Bullet3,
        Identity::As231,
        Identity::Bs231,
        Identity::Delete1342,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::As213 => "213 split at π_1",
            Identity::N2s213 => "213 first n, last 2",
            Identity::Bs213 => "213 split at π_n",
            Identity::AEqualsB213 => "b(n+1,k) = a(n,k-1) for 213",
            Identity::Bullet1 => "231 with π_1 = n-1, π_n = 1",
            Identity::Bullet2 => "231 with π_1 = n, π_n = 2",
            Identity::Bullet3 => "231 with π_1 = n, π_(n-1) = 1, π_n = n-2",
            Identity::As231 => "231 split at π_1",
            Identity::Bs231 => "231 first n",
            Identity::Delete1342 => "1342 delete n",
        }
    }

    /// The `(n, k)` cells the identity is claimed for, cut off at `n, k <= 8`.
    pub fn stated_range(self) -> Vec<(usize, usize)> {
        let grid = |n0: usize, n1: usize, k0: usize| {
            (n0..=n1).flat_map(move |n| (k0..=8).map(move |k| (n, k))).collect::<Vec<_>>()
        };
        match self {
            Identity::As213 => grid(2, 8, 3),
            Identity::N2s213 => grid(3, 8, 3),
            Identity::Bs213 => grid(3, 8, 2),
            Identity::AEqualsB213 => grid(3, 7, 3),
            Identity::Bullet1 | Identity::Bullet2 | Identity::As231 | Identity::Bs231 => grid(3, 8, 5),
            Identity::Bullet3 => grid(4, 8, 5),
            Identity::Delete1342 => grid(3, 8, 4),
        }
    }

    pub fn sides(self, c: &Counts, n: usize, k: usize) -> (u64, u64) {
        let k2 = k.saturating_sub(2);
        match self {
            Identity::As213 => (
                c.a(n, k, "213"),
                (2..=n).map(|j| c.b(j, k, "213") * c.a(n + 1 - j, k, "213")).sum(),
            ),
            Identity::N2s213 => (c.count(n, k, "213", false, Some(n), Some(2), None), c.a(n - 2, k2, "213")),
            Identity::Bs213 => (
                c.b(n, k, "213"),
                (2..n).map(|j| c.b(j, k, "213") * c.a(n - j, k2, "213")).sum(),
            ),
            Identity::AEqualsB213 => (c.b(n + 1, k, "213"), c.a(n, k - 1, "213")),
            Identity::Bullet1 => (c.count(n, k, "231", false, Some(n - 1), Some(1), None), c.a(n - 2, k2, "213")),
            Identity::Bullet2 => (c.count(n, k, "231", false, Some(n), Some(2), None), c.a(n - 2, k2, "213")),
            Identity::Bullet3 => (
                c.count(n, k, "231", false, Some(n), Some(n - 2), Some(1)),
                c.a(n - 3, k2, "213"),
            ),
            Identity::As231 => (
                c.a(n, k, "231"),
                c.b(n, k, "231") + (2..n).map(|j| c.a(j - 1, k2, "213") * c.a(n + 1 - j, k, "231")).sum::<u64>(),
            ),
            Identity::Bs231 => (
                c.b(n, k, "231"),
                c.b(n - 1, k, "231") + (2..n - 1).map(|j| c.a(j - 1, k2, "213") * c.a(n - j, k2, "213")).sum::<u64>(),
            ),
            Identity::Delete1342 => (
                c.count(n, k, "1342", true, Some(n - 1), Some(1), None),
                c.b_circ(n - 1, k - 1, "1342"),
            ),
        }
    }

    /// Cells of `cells` where the two sides differ.
    pub fn failures(self, c: &Counts, cells: &[(usize, usize)]) -> Vec<(usize, usize, u64, u64)> {
        cells
            .iter()
            .filter_map(|&(n, k)| {
                let (l, r) = self.sides(c, n, k);
                (l != r).then_some((n, k, l, r))
            })
            .collect()
    }
}

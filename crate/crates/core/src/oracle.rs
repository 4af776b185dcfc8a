//! Exhaustive enumeration of cyclic permutations.
//!
//! Cycles `(1, c_2, ..., c_n)` are generated in lexicographic order of
//! `(c_2, ..., c_n)`. Counting splits the work into one shard per value of
//! `c_2`; shards are summed, so results never depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{any_rotation_contains, contains, lds_length, one_line_from_cycle, Pattern, Permutation};
use crate::table::{CountTable, Source};

pub const DEFAULT_ORACLE_CAP: usize = 12;
pub const ORACLE_CAP_ENV: &str = "CYCPAT_ORACLE_CAP";

/// Rearranges `v` into the next permutation in lexicographic order. Returns
/// `false` (leaving `v` sorted ascending) once the last one has been passed.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        v.reverse();
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// How the cycle pattern is tested against `C(π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleMode {
    /// `C(π)` itself, written with 1 first, avoids the pattern.
    StandardForm,
    /// Every cyclic rotation of `C(π)` avoids the pattern.
    AllRotations,
}

impl CycleMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleMode::StandardForm => "standard",
            CycleMode::AllRotations => "rotations",
        }
    }

    fn admits(self, cycle: &[usize], pattern: &Pattern) -> bool {
        match self {
            CycleMode::StandardForm => !contains(cycle, pattern),
            CycleMode::AllRotations => !any_rotation_contains(cycle, pattern),
        }
    }
}

impl fmt::Display for CycleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CycleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" | "standard_form" | "standard-form" => Ok(CycleMode::StandardForm),
            "rotations" | "all_rotations" | "all-rotations" | "circular" => Ok(CycleMode::AllRotations),
            other => Err(Error::Parse(format!("unknown cycle mode {other:?}"))),
        }
    }
}

/// Which cyclic permutations of `[n]` to count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceQuery {
    pub n: usize,
    pub one_line_pattern: Pattern,
    pub cycle_pattern: Pattern,
    pub cycle_mode: CycleMode,
    pub first_entry: Option<usize>,
    pub last_entry: Option<usize>,
}

impl AvoidanceQuery {
    pub fn new(n: usize, one_line_pattern: Pattern, cycle_pattern: Pattern, cycle_mode: CycleMode) -> Self {
        AvoidanceQuery {
            n,
            one_line_pattern,
            cycle_pattern,
            cycle_mode,
            first_entry: None,
            last_entry: None,
        }
    }

    /// `A_n(δ_k; τ)` in standard-form mode.
    pub fn standard(n: usize, k: usize, tau: &Pattern) -> Self {
        Self::new(n, Pattern::decreasing(k), tau.clone(), CycleMode::StandardForm)
    }

    /// `A°_n(δ_k; τ)`: every rotation of the cycle avoids `τ`.
    pub fn circular(n: usize, k: usize, tau: &Pattern) -> Self {
        Self::new(n, Pattern::decreasing(k), tau.clone(), CycleMode::AllRotations)
    }

    pub fn with_first(mut self, value: usize) -> Self {
        self.first_entry = Some(value);
        self
    }

    pub fn with_last(mut self, value: usize) -> Self {
        self.last_entry = Some(value);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidQuery("n must be at least 1".into()));
        }
        for (name, v) in [("first_entry", self.first_entry), ("last_entry", self.last_entry)] {
            if let Some(v) = v {
                if v == 0 || v > self.n {
                    return Err(Error::InvalidQuery(format!("{name} = {v} outside 1..={}", self.n)));
                }
            }
        }
        if self.n > 1 && self.first_entry.is_some() && self.first_entry == self.last_entry {
            return Err(Error::InvalidQuery("first_entry and last_entry must differ".into()));
        }
        Ok(())
    }

    fn admits(&self, cycle: &[usize], one_line: &[usize]) -> bool {
        if self.first_entry.is_some_and(|v| one_line[0] != v) {
            return false;
        }
        if self.last_entry.is_some_and(|v| one_line[one_line.len() - 1] != v) {
            return false;
        }
        !contains(one_line, &self.one_line_pattern) && self.cycle_mode.admits(cycle, &self.cycle_pattern)
    }
}

/// Brute-force counter with a size cap and an optional dedicated thread pool.
#[derive(Clone)]
pub struct Oracle {
    cap: usize,
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oracle")
            .field("cap", &self.cap)
            .field("threads", &self.pool.as_ref().map(|p| p.current_num_threads()))
            .finish()
    }
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_ORACLE_CAP)
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle { cap, pool: None }
    }

    /// Cap from `CYCPAT_ORACLE_CAP` when set and valid, else the default.
    pub fn from_env() -> Self {
        let cap = std::env::var(ORACLE_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&c: &usize| c >= 1)
            .unwrap_or(DEFAULT_ORACLE_CAP);
        Oracle::new(cap)
    }

    /// Runs shards on a private pool of `threads` workers.
    pub fn with_threads(mut self, threads: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
            .expect("thread pool");
        self.pool = Some(Arc::new(pool));
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::ResourceLimit { n, cap: self.cap });
        }
        Ok(())
    }

    fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(op),
            None => op(),
        }
    }

    /// Every cyclic permutation of `[n]` in lexicographic order of its cycle.
    pub fn enumerate_cyclic(&self, n: usize) -> Result<CyclicPermutations> {
        if n == 0 {
            return Err(Error::InvalidQuery("n must be at least 1".into()));
        }
        self.check(n)?;
        Ok(CyclicPermutations::new(n))
    }

    /// Counts cyclic permutations of `[n]` whose one-line form and cycle
    /// satisfy `keep(one_line, cycle)`.
    pub fn count_where<F>(&self, n: usize, keep: F) -> Result<u64>
    where
        F: Fn(&[usize], &[usize]) -> bool + Sync,
    {
        if n == 0 {
            return Err(Error::InvalidQuery("n must be at least 1".into()));
        }
        self.check(n)?;
        Ok(self.install(|| {
            shards(n)
                .into_par_iter()
                .map(|c2| {
                    let mut count = 0u64;
                    for_each_in_shard(n, c2, |cycle, one_line| {
                        if keep(one_line, cycle) {
                            count += 1;
                        }
                    });
                    count
                })
                .sum()
        }))
    }

    pub fn count(&self, query: &AvoidanceQuery) -> Result<BigUint> {
        query.validate()?;
        self.count_where(query.n, |one_line, cycle| query.admits(cycle, one_line))
            .map(BigUint::from)
    }

    /// Members in the enumeration order of their cycles.
    pub fn list_members(&self, query: &AvoidanceQuery) -> Result<Vec<Permutation>> {
        query.validate()?;
        self.check(query.n)?;
        let mut out = Vec::new();
        for c2 in shards(query.n) {
            for_each_in_shard(query.n, c2, |cycle, one_line| {
                if query.admits(cycle, one_line) {
                    out.push(Permutation::new_unchecked(one_line.to_vec()));
                }
            });
        }
        Ok(out)
    }

    /// `hist[L]` is the number of cyclic permutations of `[n]` whose cycle
    /// passes `tau` under `mode` and whose longest decreasing subsequence has
    /// length exactly `L`. Such a permutation avoids `δ_k` iff `L < k`.
    pub fn lds_histogram(&self, tau: &Pattern, mode: CycleMode, n: usize) -> Result<Vec<u64>> {
        if n == 0 {
            return Err(Error::InvalidQuery("n must be at least 1".into()));
        }
        self.check(n)?;
        Ok(self.install(|| {
            shards(n)
                .into_par_iter()
                .map(|c2| {
                    let mut hist = vec![0u64; n + 1];
                    for_each_in_shard(n, c2, |cycle, one_line| {
                        if mode.admits(cycle, tau) {
                            hist[lds_length(one_line)] += 1;
                        }
                    });
                    hist
                })
                .reduce(
                    || vec![0u64; n + 1],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        }))
    }

    /// Rows `k = 2..=k_max`, columns `n = 1..=n_max`, entry = count with the
    /// one-line form avoiding `δ_k`.
    pub fn count_table(&self, tau: &Pattern, mode: CycleMode, n_max: usize, k_max: usize) -> Result<CountTable> {
        self.check(n_max)?;
        let mut table = CountTable::zeros(tau.to_string(), mode, Source::Oracle, 2..=k_max, n_max);
        for n in 1..=n_max {
            let hist = self.lds_histogram(tau, mode, n)?;
            for k in 2..=k_max {
                let below: u64 = hist.iter().take(k).sum();
                table.set(k, n, BigUint::from(below));
            }
        }
        Ok(table)
    }
}

fn shards(n: usize) -> Vec<usize> {
    if n == 1 {
        vec![1]
    } else {
        (2..=n).collect()
    }
}

/// Visits each cycle `(1, c2, ...)` with the given second entry, in
/// lexicographic order, together with its one-line form.
fn for_each_in_shard(n: usize, c2: usize, mut visit: impl FnMut(&[usize], &[usize])) {
    if n == 1 {
        visit(&[1], &[1]);
        return;
    }
    let mut rest: Vec<usize> = (2..=n).filter(|&v| v != c2).collect();
    let mut cycle = vec![0; n];
    let mut one_line = vec![0; n];
    cycle[0] = 1;
    cycle[1] = c2;
    loop {
        cycle[2..].copy_from_slice(&rest);
        for i in 0..n {
            one_line[cycle[i] - 1] = cycle[(i + 1) % n];
        }
        visit(&cycle, &one_line);
        if !next_permutation(&mut rest) {
            break;
        }
    }
}

/// Iterator over the `(n-1)!` cyclic permutations of `[n]`.
#[derive(Debug, Clone)]
pub struct CyclicPermutations {
    tail: Vec<usize>,
    done: bool,
}

impl CyclicPermutations {
    fn new(n: usize) -> Self {
        CyclicPermutations {
            tail: (2..=n).collect(),
            done: false,
        }
    }
}

impl Iterator for CyclicPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut cycle = Vec::with_capacity(self.tail.len() + 1);
        cycle.push(1);
        cycle.extend_from_slice(&self.tail);
        if !next_permutation(&mut self.tail) {
            self.done = true;
        }
        Some(Permutation::new_unchecked(one_line_from_cycle(&cycle)))
    }
}

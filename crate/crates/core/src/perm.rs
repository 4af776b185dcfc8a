//! Permutations in one-line notation, cycle forms, and classical pattern
//! containment.
//!
//! Every value here is 1-based: a permutation of length `n` holds each of
//! `1..=n` exactly once.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest pattern the general matcher accepts. Decreasing patterns of any
/// length are exempt because they are tested through [`lds_length`].
pub const MAX_PATTERN_LEN: usize = 8;

fn check_is_permutation(entries: &[usize]) -> std::result::Result<(), String> {
    let n = entries.len();
    if n == 0 {
        return Err("length must be at least 1".into());
    }
    let mut seen = vec![false; n + 1];
    for &v in entries {
        if v == 0 || v > n {
            return Err(format!("entry {v} outside 1..={n}"));
        }
        if seen[v] {
            return Err(format!("entry {v} repeated"));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Replaces each entry by its rank among the entries (1-based).
pub fn standardize(values: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    let mut out = vec![0; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

/// A bijection on `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        check_is_permutation(&entries).map_err(Error::InvalidPermutation)?;
        Ok(Permutation(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(check_is_permutation(&entries).is_ok(), "{entries:?}");
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = 0;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.at(x);
            }
        }
        cycles
    }

    pub fn is_cyclic(&self) -> bool {
        is_cyclic(&self.0)
    }

    /// The cycle `(1, c_2, ..., c_n)` with `c_{i+1} = π(c_i)`.
    pub fn cycle_form(&self) -> Result<CycleForm> {
        if !self.is_cyclic() {
            return Err(Error::NotCyclic {
                cycles: self.cycle_count(),
            });
        }
        let n = self.len();
        let mut cycle = Vec::with_capacity(n);
        let mut x = 1;
        for _ in 0..n {
            cycle.push(x);
            x = self.at(x);
        }
        Ok(CycleForm(cycle))
    }

    pub fn from_cycle(cycle: &CycleForm) -> Self {
        Permutation(one_line_from_cycle(&cycle.0))
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn apply_symmetry(&self, symmetry: Symmetry) -> Self {
        match symmetry {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
            Symmetry::ReverseComplement => self.complement().reverse(),
        }
    }

    pub fn lds_length(&self) -> usize {
        lds_length(&self.0)
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        contains(&self.0, pattern)
    }

    pub fn avoids(&self, pattern: &Pattern) -> bool {
        !self.contains(pattern)
    }
}

/// True iff the 1-based one-line permutation `entries` is a single cycle.
pub fn is_cyclic(entries: &[usize]) -> bool {
    let n = entries.len();
    if n == 0 {
        return false;
    }
    let mut x = 1;
    for step in 1..=n {
        x = entries[x - 1];
        if x == 1 {
            return step == n;
        }
    }
    false
}

pub(crate) fn one_line_from_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let mut out = vec![0; n];
    for i in 0..n {
        out[cycle[i] - 1] = cycle[(i + 1) % n];
    }
    out
}

/// The standard symmetries of the square acting on permutation diagrams that
/// the enumeration arguments rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
    ReverseComplement,
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reverse" | "r" => Ok(Symmetry::Reverse),
            "complement" | "c" => Ok(Symmetry::Complement),
            "inverse" | "i" => Ok(Symmetry::Inverse),
            "reverse_complement" | "reverse-complement" | "rc" => Ok(Symmetry::ReverseComplement),
            other => Err(Error::Parse(format!("unknown symmetry {other:?}"))),
        }
    }
}

/// Cycle notation of a cyclic permutation, written starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleForm(Vec<usize>);

impl CycleForm {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        check_is_permutation(&entries).map_err(Error::InvalidCycleForm)?;
        if entries[0] != 1 {
            return Err(Error::InvalidCycleForm(format!(
                "must start with 1, found {}",
                entries[0]
            )));
        }
        Ok(CycleForm(entries))
    }

    /// Rotates an arbitrary cyclic arrangement of `1..=n` so that 1 leads.
    pub fn from_rotation(entries: &[usize]) -> Result<Self> {
        check_is_permutation(entries).map_err(Error::InvalidCycleForm)?;
        let at = entries.iter().position(|&v| v == 1).unwrap();
        let mut out = entries[at..].to_vec();
        out.extend_from_slice(&entries[..at]);
        Ok(CycleForm(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycle(self)
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }

    /// All `n` cyclic rotations; rotation 0 is the cycle itself.
    pub fn rotations(&self) -> Vec<Word> {
        let n = self.len();
        (0..n)
            .map(|s| Word(self.0[s..].iter().chain(&self.0[..s]).copied().collect()))
            .collect()
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        contains(&self.0, pattern)
    }

    /// True iff some rotation of the cycle contains `pattern`.
    pub fn any_rotation_contains(&self, pattern: &Pattern) -> bool {
        any_rotation_contains(&self.0, pattern)
    }
}

/// Sequence of distinct positive integers, not necessarily `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if sorted.first() == Some(&0) || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidWord);
        }
        Ok(Word(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        contains(&self.0, pattern)
    }

    pub fn lds_length(&self) -> usize {
        lds_length(&self.0)
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Self {
        Word(p.0)
    }
}

impl From<CycleForm> for Word {
    fn from(c: CycleForm) -> Self {
        Word(c.0)
    }
}

/// A classical pattern.
///
/// For position `t`, `lower[t]` / `upper[t]` index the earlier pattern
/// entries whose values are the nearest below / above `entries[t]`; the
/// matcher only has to compare a candidate against those two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    entries: Vec<usize>,
    lower: Vec<Option<usize>>,
    upper: Vec<Option<usize>>,
    decreasing: bool,
}

impl Pattern {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        check_is_permutation(&entries).map_err(Error::InvalidPattern)?;
        let decreasing = entries.windows(2).all(|w| w[0] > w[1]);
        if !decreasing && entries.len() > MAX_PATTERN_LEN {
            return Err(Error::InvalidPattern(format!(
                "length {} exceeds the cap of {MAX_PATTERN_LEN}",
                entries.len()
            )));
        }
        let m = entries.len();
        let mut lower = vec![None; m];
        let mut upper = vec![None; m];
        for t in 0..m {
            for s in 0..t {
                if entries[s] < entries[t] && lower[t].is_none_or(|l: usize| entries[l] < entries[s]) {
                    lower[t] = Some(s);
                }
                if entries[s] > entries[t] && upper[t].is_none_or(|u: usize| entries[u] > entries[s]) {
                    upper[t] = Some(s);
                }
            }
        }
        Ok(Pattern {
            entries,
            lower,
            upper,
            decreasing,
        })
    }

    /// `δ_k = k (k-1) ... 2 1`.
    pub fn decreasing(k: usize) -> Self {
        assert!(k >= 1, "decreasing pattern needs k >= 1");
        Pattern::new((1..=k).rev().collect()).expect("decreasing pattern is valid")
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_decreasing(&self) -> bool {
        self.decreasing
    }

    pub fn reverse(&self) -> Self {
        Pattern::new(self.entries.iter().rev().copied().collect()).unwrap()
    }

    pub fn complement(&self) -> Self {
        let m = self.len();
        Pattern::new(self.entries.iter().map(|&v| m + 1 - v).collect()).unwrap()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compact(f, &self.entries)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::new(parse_entries(s)?)
    }
}

/// Whether some subsequence of `word` is order-isomorphic to `pattern`.
pub fn contains(word: &[usize], pattern: &Pattern) -> bool {
    let m = pattern.len();
    if m > word.len() {
        return false;
    }
    if pattern.decreasing {
        return lds_length(word) >= m;
    }
    let mut chosen = [0usize; MAX_PATTERN_LEN];
    matches_from(word, pattern, 0, 0, &mut chosen)
}

fn matches_from(
    word: &[usize],
    pattern: &Pattern,
    t: usize,
    start: usize,
    chosen: &mut [usize; MAX_PATTERN_LEN],
) -> bool {
    let m = pattern.len();
    if t == m {
        return true;
    }
    let lo = pattern.lower[t].map(|s| chosen[s]);
    let hi = pattern.upper[t].map(|s| chosen[s]);
    // leave room for the remaining m - t - 1 pattern entries
    let end = word.len() + t + 1 - m;
    for i in start..end {
        let v = word[i];
        if lo.is_some_and(|l| v <= l) || hi.is_some_and(|h| v >= h) {
            continue;
        }
        chosen[t] = v;
        if matches_from(word, pattern, t + 1, i + 1, chosen) {
            return true;
        }
    }
    false
}

/// True iff any cyclic rotation of `cycle` contains `pattern`.
pub fn any_rotation_contains(cycle: &[usize], pattern: &Pattern) -> bool {
    let n = cycle.len();
    if pattern.len() > n {
        return false;
    }
    let mut doubled = Vec::with_capacity(2 * n);
    doubled.extend_from_slice(cycle);
    doubled.extend_from_slice(cycle);
    (0..n).any(|s| contains(&doubled[s..s + n], pattern))
}

/// Length of the longest strictly decreasing subsequence, by patience sorting.
pub fn lds_length(word: &[usize]) -> usize {
    // tails[i]: largest possible last entry of a decreasing run of length i+1
    let mut tails: Vec<usize> = Vec::with_capacity(word.len());
    for &x in word {
        let at = tails.partition_point(|&t| t > x);
        if at == tails.len() {
            tails.push(x);
        } else {
            tails[at] = x;
        }
    }
    tails.len()
}

pub fn cycle_form(p: &Permutation) -> Result<CycleForm> {
    p.cycle_form()
}

pub fn from_cycle(c: &CycleForm) -> Permutation {
    Permutation::from_cycle(c)
}

pub fn rotations(c: &CycleForm) -> Vec<Word> {
    c.rotations()
}

pub fn apply_symmetry(p: &Permutation, symmetry: Symmetry) -> Permutation {
    p.apply_symmetry(symmetry)
}

fn write_compact(f: &mut fmt::Formatter<'_>, entries: &[usize]) -> fmt::Result {
    if entries.iter().all(|&v| v <= 9) {
        for v in entries {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = entries.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Accepts `41532`, `4 1 5 3 2`, `4,1,5,3,2` and `(1,4,3,5,2)`.
pub(crate) fn parse_entries(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let separated = trimmed.contains(|c: char| c == ',' || c.is_whitespace());
    let parse_one = |tok: &str| {
        tok.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad entry {tok:?} in {s:?}")))
    };
    if separated {
        trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_one)
            .collect()
    } else {
        trimmed
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad character {c:?} in {s:?}")))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compact(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_entries(s)?)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CycleForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CycleForm::new(parse_entries(s)?)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compact(f, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    // every subsequence, checked by standardizing
    fn naive_contains(word: &[usize], pattern: &[usize]) -> bool {
        let n = word.len();
        let m = pattern.len();
        if m > n {
            return false;
        }
        (0u32..1 << n).filter(|mask| mask.count_ones() as usize == m).any(|mask| {
            let sub: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
            standardize(&sub) == pattern
        })
    }

    #[test]
    fn cycle_form_examples() {
        assert_eq!(perm("41532").cycle_form().unwrap().to_string(), "(1,4,3,5,2)");
        assert_eq!(perm("1").cycle_form().unwrap().entries(), &[1]);
        assert_eq!(
            perm("531269478").cycle_form().unwrap().to_string(),
            "(1,5,6,9,8,7,4,2,3)"
        );
    }

    #[test]
    fn not_cyclic_reports_cycle_count() {
        assert_eq!(perm("12").cycle_form(), Err(Error::NotCyclic { cycles: 2 }));
        assert_eq!(perm("21354").cycle_form(), Err(Error::NotCyclic { cycles: 3 }));
    }

    #[test]
    fn from_cycle_examples() {
        let c: CycleForm = "(1,4,3,5,2)".parse().unwrap();
        assert_eq!(c.to_permutation(), perm("41532"));
        for n in 1..=9 {
            let up = CycleForm::new((1..=n).collect()).unwrap();
            let mut expect: Vec<usize> = (2..=n).collect();
            expect.push(1);
            assert_eq!(up.to_permutation().entries(), &expect[..]);

            let mut down = vec![1];
            down.extend((2..=n).rev());
            let mut expect = vec![n];
            expect.extend(1..n);
            assert_eq!(CycleForm::new(down).unwrap().to_permutation().entries(), &expect[..]);
        }
    }

    #[test]
    fn cyclicity() {
        assert!(perm("41532").is_cyclic());
        assert!(!perm("12").is_cyclic());
        assert!(perm("21").is_cyclic());
        assert!(perm("1").is_cyclic());
    }

    #[test]
    fn containment_examples() {
        let w = perm("32185476");
        assert!(!w.contains(&pat("231")));
        assert!(w.contains(&pat("123")));
        assert!(naive_contains(&[2, 5, 7], &[1, 2, 3]));
        assert!(!perm("21").contains(&pat("123")));
    }

    #[test]
    fn lds_examples() {
        assert_eq!(lds_length(&[3, 2, 1, 8, 5, 4, 7, 6]), 3);
        assert_eq!(lds_length(&[1, 2, 5, 9]), 1);
        for k in 1..=9 {
            assert_eq!(Pattern::decreasing(k).entries().len(), k);
            assert_eq!(lds_length(Pattern::decreasing(k).entries()), k);
        }
        assert_eq!(lds_length(&[]), 0);
    }

    #[test]
    fn lds_matches_brute_force_on_example() {
        let w = [3, 2, 1, 8, 5, 4, 7, 6];
        let best = (0u32..1 << w.len())
            .filter(|mask| {
                let sub: Vec<usize> = (0..w.len()).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
                sub.windows(2).all(|p| p[0] > p[1])
            })
            .map(|mask| mask.count_ones())
            .max()
            .unwrap();
        assert_eq!(best, 3);
    }

    #[test]
    fn rotation_examples() {
        let c: CycleForm = "(1,3,2)".parse().unwrap();
        let rots: Vec<String> = c.rotations().iter().map(|w| w.to_string()).collect();
        assert_eq!(rots, ["132", "321", "213"]);
        assert_eq!(CycleForm::new(vec![1]).unwrap().rotations().len(), 1);

        let c: CycleForm = "(1,3,2,9,8,7,6,5,4)".parse().unwrap();
        let p = pat("1342");
        assert!(c.rotations().iter().all(|w| !w.contains(&p)));
        assert!(!c.any_rotation_contains(&p));
        assert_eq!(c.to_permutation(), perm("392145678"));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(perm("213").reverse(), perm("312"));
        let p: Permutation = "11 4 2 9 3 5 6 7 10 12 8 1".parse().unwrap();
        let rc = p.apply_symmetry(Symmetry::ReverseComplement);
        assert_eq!(rc.first(), 12);
        assert_eq!(rc.last(), 2);
        assert_eq!(rc.apply_symmetry(Symmetry::ReverseComplement), p);
        assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn invalid_inputs() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(CycleForm::new(vec![2, 1]).is_err());
        assert!(Word::new(vec![3, 3]).is_err());
        assert!(Pattern::new((1..=9).collect()).is_err());
        assert!(Pattern::new((1..=12).rev().collect()).is_ok());
        assert!("1x3".parse::<Permutation>().is_err());
    }

    #[test]
    fn pattern_longer_than_word() {
        assert!(!contains(&[2, 1], &pat("1324")));
        assert!(!any_rotation_contains(&[1, 3, 2], &pat("1342")));
    }

    #[test]
    fn matcher_agrees_with_naive_for_all_small_patterns() {
        let words: [&[usize]; 4] = [&[3, 2, 1, 8, 5, 4, 7, 6], &[5, 1, 7, 3, 8, 2, 6, 4], &[2, 9, 4, 11, 6], &[1, 2, 3, 4]];
        for m in 1..=4 {
            let mut p: Vec<usize> = (1..=m).collect();
            loop {
                let pattern = Pattern::new(p.clone()).unwrap();
                for w in words {
                    assert_eq!(contains(w, &pattern), naive_contains(w, &p), "{w:?} {p:?}");
                }
                if !crate::oracle::next_permutation(&mut p) {
                    break;
                }
            }
        }
    }
}

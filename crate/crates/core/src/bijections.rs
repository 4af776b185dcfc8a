//! Constructive correspondences between families of cyclic permutations.
//!
//! Every map here works on cycle forms by deleting a set of values and
//! relabeling what is left by rank ([`compress_cycle`]), sometimes combined
//! with complementing. Inputs are checked eagerly; a [`Error::NotInDomain`]
//! names the condition that failed.

use crate::error::{Error, Result};
use crate::perm::{any_rotation_contains, contains, lds_length, CycleForm, Pattern, Permutation};

fn pattern(s: &str) -> Pattern {
    s.parse().expect("built-in pattern")
}

fn reject(msg: impl Into<String>) -> Error {
    Error::NotInDomain(msg.into())
}

/// Keeps the cycle entries accepted by `keep` and relabels them by rank.
/// The value 1 must be kept so the result still starts with 1.
pub fn compress_cycle(cycle: &[usize], keep: impl Fn(usize) -> bool) -> CycleForm {
    let kept: Vec<usize> = cycle.iter().copied().filter(|&v| keep(v)).collect();
    debug_assert_eq!(kept.first(), Some(&1));
    let mut sorted = kept.clone();
    sorted.sort_unstable();
    let ranked = kept
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() + 1)
        .collect();
    CycleForm::new(ranked).expect("ranked cycle starts with 1")
}

fn cycle_of(p: &Permutation) -> Result<CycleForm> {
    p.cycle_form().map_err(|e| reject(e.to_string()))
}

fn from_entries(entries: Vec<usize>) -> Permutation {
    CycleForm::new(entries).expect("constructed cycle is valid").to_permutation()
}

/// Checks `p ∈ A_n(δ_k; τ)` (or `A°` for `circular`).
fn require_member(p: &Permutation, k: usize, tau: &str, circular: bool) -> Result<CycleForm> {
    let c = cycle_of(p)?;
    if lds_length(p.entries()) >= k {
        return Err(reject(format!("{p} contains δ_{k}")));
    }
    let t = pattern(tau);
    let bad = if circular {
        any_rotation_contains(c.entries(), &t)
    } else {
        contains(c.entries(), &t)
    };
    if bad {
        let which = if circular { "a rotation of the cycle form" } else { "the cycle form" };
        return Err(reject(format!("{which} {c} contains {tau}")));
    }
    Ok(c)
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(reject(msg()))
    }
}

fn require_first_is_len(p: &Permutation, what: &str) -> Result<()> {
    require(p.first() == p.len(), || format!("{what} {p} must start with its length {}", p.len()))
}

/// The two halves of a 213 decomposition split at `j = π_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition213 {
    /// In `B_j(δ_k;213)`: first entry equals its length `j`.
    pub inner: Permutation,
    /// In `A_{n+1-j}(δ_k;213)`.
    pub outer: Permutation,
    pub j: usize,
}

/// Splits `π ∈ A_n(δ_k;213)` with `π_1 = j`: the outer part deletes `[2, j]`
/// from `C(π)`, the inner part deletes `[j+1, n]`.
pub fn decompose_as213(p: &Permutation, k: usize) -> Result<Decomposition213> {
    require(p.len() >= 2, || "n must be at least 2".into())?;
    let c = require_member(p, k, "213", false)?;
    let j = p.first();
    Ok(Decomposition213 {
        inner: compress_cycle(c.entries(), |v| v <= j).to_permutation(),
        outer: compress_cycle(c.entries(), |v| v == 1 || v > j).to_permutation(),
        j,
    })
}

/// Inverse of [`decompose_as213`]:
/// `C(π) = (1, j, c'_2 + j - 1, ..., c'_m + j - 1, c''_3, ..., c''_j)`.
pub fn compose_as213(inner: &Permutation, outer: &Permutation, k: usize) -> Result<Permutation> {
    let ci = require_member(inner, k, "213", false)?;
    require_first_is_len(inner, "inner")?;
    require(inner.len() >= 2, || "inner must have length at least 2".into())?;
    let co = require_member(outer, k, "213", false)?;
    let j = inner.len();
    let mut entries = vec![1, j];
    entries.extend(co.entries()[1..].iter().map(|&v| v + j - 1));
    entries.extend_from_slice(&ci.entries()[2..]);
    Ok(from_entries(entries))
}

/// `π ∈ B_n(δ_k;213)` with `π_n = 2` to the permutation obtained by deleting
/// `n` and `2` from `C(π)`. The image avoids `δ_{k-2}` when `k >= 5`.
pub fn strip_n2(p: &Permutation, k: usize) -> Result<Permutation> {
    let n = p.len();
    require(n >= 3, || "n must be at least 3".into())?;
    let c = require_member(p, k, "213", false)?;
    require_first_is_len(p, "input")?;
    require(p.last() == 2, || format!("{p} must end with 2"))?;
    Ok(compress_cycle(c.entries(), |v| v != n && v != 2).to_permutation())
}

/// Inverse of [`strip_n2`]: `n` goes to the front and `2` to the end of the
/// one-line form, i.e. `C(π) = (1, n, 2, c'_2 + 1, ...)`.
pub fn insert_n2(q: &Permutation) -> Result<Permutation> {
    let c = cycle_of(q)?;
    let n = q.len() + 2;
    let mut entries = vec![1, n, 2];
    entries.extend(c.entries()[1..].iter().map(|&v| v + 1));
    Ok(from_entries(entries))
}

/// An occurrence of `δ_m` in `p` (as values, left to right) that avoids the
/// value 1, found by the exchange argument: an occurrence ending in 1 can
/// end in 2 instead when 2 comes after 1; when `π_1 = 2`, so that the cycle
/// form begins `(1, 2, ...)`, delete that 2 and argue in the smaller
/// permutation. `None` when `p` avoids `δ_m` or the argument breaks down.
pub fn decreasing_occurrence_avoiding_one(p: &Permutation, m: usize) -> Option<Vec<usize>> {
    let occ = first_decreasing_occurrence(p.entries(), m)?;
    if occ.last() != Some(&1) {
        return Some(occ);
    }
    let pos = |v: usize| p.entries().iter().position(|&x| x == v);
    let (r, s) = (pos(1)?, pos(2)?);
    if s > r {
        let mut occ = occ;
        *occ.last_mut().unwrap() = 2;
        return Some(occ);
    }
    if s != 0 {
        // 2 before 1 away from the front means C(π) contains 213.
        return None;
    }
    let c = p.cycle_form().ok()?;
    let smaller = compress_cycle(c.entries(), |v| v != 2).to_permutation();
    let inner = decreasing_occurrence_avoiding_one(&smaller, m)?;
    Some(inner.into_iter().map(|v| if v >= 2 { v + 1 } else { v }).collect())
}

/// Leftmost (by positions, lexicographically) strictly decreasing
/// subsequence of length `m`.
fn first_decreasing_occurrence(word: &[usize], m: usize) -> Option<Vec<usize>> {
    fn go(word: &[usize], from: usize, bound: usize, m: usize, acc: &mut Vec<usize>) -> bool {
        if acc.len() == m {
            return true;
        }
        for i in from..word.len() {
            if word[i] < bound {
                acc.push(word[i]);
                if go(word, i + 1, word[i], m, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    if m == 0 {
        return Some(Vec::new());
    }
    let mut acc = Vec::with_capacity(m);
    go(word, 0, usize::MAX, m, &mut acc).then_some(acc)
}

/// Splits `π ∈ B_n(δ_k;213)` with `π_n = j ∈ [2, n-1]` into
/// `π' ∈ B_{n-j+2}` ending in 2 (delete `[2, j-1]` from `C(π)`) and
/// `π'' ∈ B_j` (delete `[j+1, n]`).
pub fn decompose_bs213(p: &Permutation, k: usize) -> Result<(Permutation, Permutation)> {
    let n = p.len();
    require(n >= 3, || "n must be at least 3".into())?;
    let c = require_member(p, k, "213", false)?;
    require_first_is_len(p, "input")?;
    let j = p.last();
    require((2..n).contains(&j), || format!("last entry {j} must lie in [2, n-1]"))?;
    let first = compress_cycle(c.entries(), |v| v == 1 || v >= j).to_permutation();
    let second = compress_cycle(c.entries(), |v| v <= j).to_permutation();
    Ok((first, second))
}

/// Inverse of [`decompose_bs213`]:
/// `C(π) = (1, n, j, c'_4 + j - 2, ..., c'_m + j - 2, c''_3, ..., c''_j)`.
pub fn compose_bs213(first: &Permutation, second: &Permutation, k: usize) -> Result<Permutation> {
    let c1 = require_member(first, k, "213", false)?;
    require_first_is_len(first, "first part")?;
    require(first.len() >= 2 && first.last() == 2, || format!("first part {first} must end with 2"))?;
    let c2 = require_member(second, k, "213", false)?;
    require_first_is_len(second, "second part")?;
    require(second.len() >= 2, || "second part must have length at least 2".into())?;
    let (m, j) = (first.len(), second.len());
    let n = m + j - 2;
    let mut entries = vec![1, n, j];
    entries.extend(c1.entries().iter().skip(3).map(|&v| v + j - 2));
    entries.extend_from_slice(&c2.entries()[2..]);
    Ok(from_entries(entries))
}

/// The three correspondences from 231-avoiding cycle forms to 213-avoiding
/// ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bullet {
    /// `π_1 = n-1, π_n = 1` to `π^{rc}`, which has `π'_1 = n, π'_n = 2`.
    One,
    /// `π_1 = n, π_n = 2`: complement `C(π)`, then delete `n`.
    Two,
    /// `π_1 = n, π_{n-1} = 1, π_n = n-2`: delete `1, n, n-2` from `C(π)`,
    /// then complement.
    Three,
}

impl std::str::FromStr for Bullet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "bullet1" => Ok(Bullet::One),
            "2" | "bullet2" => Ok(Bullet::Two),
            "3" | "bullet3" => Ok(Bullet::Three),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

pub fn map_231_rc(p: &Permutation, variant: Bullet, k: usize) -> Result<Permutation> {
    let n = p.len();
    require(n >= 3, || "n must be at least 3".into())?;
    let c = require_member(p, k, "231", false)?;
    match variant {
        Bullet::One => {
            require(p.first() == n - 1 && p.last() == 1, || format!("{p} needs π_1 = n-1 and π_n = 1"))?;
            Ok(p.reverse().complement())
        }
        Bullet::Two => {
            require(p.first() == n && p.last() == 2, || format!("{p} needs π_1 = n and π_n = 2"))?;
            let mut entries = vec![1, n - 1];
            entries.extend(c.entries()[3..].iter().map(|&v| n + 1 - v));
            Ok(from_entries(entries))
        }
        Bullet::Three => {
            require(n >= 4, || "n must be at least 4".into())?;
            require(p.first() == n && p.at(n - 1) == 1 && p.last() == n - 2, || {
                format!("{p} needs π_1 = n, π_(n-1) = 1 and π_n = n-2")
            })?;
            let mut entries = vec![1];
            entries.extend(c.entries()[3..n - 1].iter().map(|&v| n - 1 - v));
            Ok(from_entries(entries))
        }
    }
}

/// Inverse of [`map_231_rc`].
pub fn unmap_231_rc(q: &Permutation, variant: Bullet, k: usize) -> Result<Permutation> {
    let c = cycle_of(q)?;
    let p = match variant {
        Bullet::One => q.reverse().complement(),
        Bullet::Two => {
            let n = q.len() + 1;
            require_first_is_len(q, "image")?;
            let mut entries = vec![1, n, 2];
            entries.extend(c.entries()[2..].iter().map(|&v| n + 1 - v));
            from_entries(entries)
        }
        Bullet::Three => {
            let n = q.len() + 3;
            let mut entries = vec![1, n, n - 2];
            entries.extend(c.entries()[1..].iter().map(|&v| n - 1 - v));
            entries.push(n - 1);
            from_entries(entries)
        }
    };
    map_231_rc(&p, variant, k)?;
    Ok(p)
}

/// Splits `π ∈ A_n(δ_k;231)` with `π_1 = j < n`: `π'` deletes `[2, j]` from
/// `C(π)`; `π''` deletes `[j+1, n]` except `c_{j+1}`, so it ends in 1.
pub fn decompose_as231(p: &Permutation, k: usize) -> Result<(Permutation, Permutation)> {
    let n = p.len();
    let c = require_member(p, k, "231", false)?;
    let j = p.first();
    require(n >= 3 && j < n, || format!("π_1 = {j} must be smaller than n = {n}"))?;
    let keep = c.entries()[j];
    let first = compress_cycle(c.entries(), |v| v == 1 || v > j).to_permutation();
    let second = compress_cycle(c.entries(), |v| v <= j || v == keep).to_permutation();
    Ok((first, second))
}

/// Inverse of [`decompose_as231`]:
/// `C(π) = (1, j, c''_3, ..., c''_j, c'_2 + j - 1, ..., c'_m + j - 1)`.
pub fn compose_as231(first: &Permutation, second: &Permutation, k: usize) -> Result<Permutation> {
    let c1 = require_member(first, k, "231", false)?;
    let c2 = require_member(second, k, "231", false)?;
    let j = second.len() - 1;
    require(j >= 2 && second.first() == j && second.last() == 1, || {
        format!("second part {second} needs π''_1 = j and π''_(j+1) = 1")
    })?;
    require(first.len() >= 2, || "first part must have length at least 2".into())?;
    let mut entries = vec![1, j];
    entries.extend_from_slice(&c2.entries()[2..j]);
    entries.extend(c1.entries()[1..].iter().map(|&v| v + j - 1));
    Ok(from_entries(entries))
}

/// `π ∈ A°_n(δ_k;1342)` with `π_1 = n-1, π_n = 1` to the permutation
/// obtained by deleting `n` from `C(π)`, which lies in `B°_{n-1}(δ_{k-1};1342)`.
pub fn delete_n_1342(p: &Permutation, k: usize) -> Result<Permutation> {
    let n = p.len();
    require(n >= 3, || "n must be at least 3".into())?;
    let c = require_member(p, k, "1342", true)?;
    require(p.first() == n - 1 && p.last() == 1, || format!("{p} needs π_1 = n-1 and π_n = 1"))?;
    Ok(compress_cycle(c.entries(), |v| v != n).to_permutation())
}

/// Inverse of [`delete_n_1342`]: append `n` to the cycle form.
pub fn insert_n_1342(q: &Permutation) -> Result<Permutation> {
    let c = cycle_of(q)?;
    let mut entries = c.entries().to_vec();
    entries.push(q.len() + 1);
    Ok(from_entries(entries))
}

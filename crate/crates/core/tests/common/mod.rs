#![allow(dead_code)]

pub mod identities;

use cycpat::perm::{any_rotation_contains, contains, lds_length};
use cycpat::{Oracle, Pattern, Permutation};

pub fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn cyclic(n: usize) -> Vec<Permutation> {
    Oracle::default().enumerate_cyclic(n).unwrap().collect()
}

/// `p ∈ A_n(δ_k; τ)`, or `A°` when `circular`.
pub fn member(p: &Permutation, k: usize, tau: &str, circular: bool) -> bool {
    let Ok(c) = p.cycle_form() else { return false };
    let t = pat(tau);
    let cycle_ok = if circular {
        !any_rotation_contains(c.entries(), &t)
    } else {
        !contains(c.entries(), &t)
    };
    lds_length(p.entries()) < k && cycle_ok
}

pub fn members(n: usize, k: usize, tau: &str, circular: bool) -> Vec<Permutation> {
    cyclic(n).into_iter().filter(|p| member(p, k, tau, circular)).collect()
}

pub fn count_if(n: usize, k: usize, tau: &str, circular: bool, f: impl Fn(&Permutation) -> bool) -> u64 {
    members(n, k, tau, circular).iter().filter(|p| f(p)).count() as u64
}

pub fn u(v: impl TryInto<u64>) -> u64 {
    v.try_into().ok().unwrap()
}

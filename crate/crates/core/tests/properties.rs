mod common;

use common::pat;
use cycpat::genfun::{arith, ArithOp};
use cycpat::oracle::next_permutation;
use cycpat::perm::{contains, lds_length};
use cycpat::{CycleForm, Pattern, Permutation, Poly, RationalGF, Symmetry};
use proptest::prelude::*;

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = (1..=n).collect();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

fn cyclic_perms(n: usize) -> Vec<Permutation> {
    all_perms(n)
        .into_iter()
        .map(|v| Permutation::new(v).unwrap())
        .filter(|p| p.is_cyclic())
        .collect()
}

/// Subset enumeration: some `m` positions carry a decreasing run.
fn naive_has_decreasing(word: &[usize], m: usize) -> bool {
    let n = word.len();
    (0u32..1 << n).filter(|s| s.count_ones() as usize == m).any(|s| {
        let picked: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).map(|i| word[i]).collect();
        picked.windows(2).all(|w| w[0] > w[1])
    })
}

/// Subset enumeration against an arbitrary pattern.
fn naive_contains(word: &[usize], p: &[usize]) -> bool {
    let n = word.len();
    (0u32..1 << n).filter(|s| s.count_ones() as usize == p.len()).any(|s| {
        let picked: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).map(|i| word[i]).collect();
        (0..p.len()).all(|a| (0..p.len()).all(|b| (picked[a] < picked[b]) == (p[a] < p[b])))
    })
}

#[test]
fn cycle_form_round_trip_exhaustive() {
    for n in 1..=8 {
        let mut seen = 0;
        for p in cyclic_perms(n) {
            let c = p.cycle_form().unwrap();
            assert_eq!(c.entries()[0], 1);
            assert_eq!(c.to_permutation(), p);
            assert_eq!(Permutation::from_cycle(&c), p);
            assert_eq!(c.to_string().parse::<CycleForm>().unwrap(), c);
            seen += 1;
        }
        assert_eq!(seen, (1..n).product::<usize>().max(1));
    }
}

#[test]
fn lds_matches_decreasing_containment_exhaustive() {
    for n in 0..=8 {
        for w in all_perms(n) {
            let lds = lds_length(&w);
            for k in 1..=8 {
                let naive = naive_has_decreasing(&w, k);
                assert_eq!(naive, lds >= k, "{w:?}, k = {k}");
                assert_eq!(contains(&w, &Pattern::decreasing(k)), naive, "{w:?}, k = {k}");
            }
        }
    }
}

#[test]
fn general_containment_matches_naive() {
    let patterns = ["213", "231", "1324", "1342", "1423", "4123", "2431", "4132", "321", "12"];
    for n in 0..=7 {
        for w in all_perms(n) {
            for p in patterns {
                let t = pat(p);
                assert_eq!(contains(&w, &t), naive_contains(&w, t.entries()), "{w:?} vs {p}");
            }
        }
    }
}

#[test]
fn reverse_complement_complements_the_cycle() {
    for n in 1..=7 {
        for p in cyclic_perms(n) {
            let c = p.cycle_form().unwrap();
            let comp: Vec<usize> = c.entries().iter().map(|&v| n + 1 - v).collect();
            let at = comp.iter().position(|&v| v == 1).unwrap();
            let mut rotated = comp[at..].to_vec();
            rotated.extend_from_slice(&comp[..at]);
            let rc = p.apply_symmetry(Symmetry::ReverseComplement);
            assert_eq!(rc.cycle_form().unwrap().entries(), rotated.as_slice(), "{p}");
            assert_eq!(rc.apply_symmetry(Symmetry::ReverseComplement), p);
        }
    }
}

#[test]
fn inverse_reverses_the_cycle() {
    for n in 1..=7 {
        for p in cyclic_perms(n) {
            let c = p.cycle_form().unwrap();
            let mut expect = vec![1];
            expect.extend(c.entries()[1..].iter().rev());
            let inv = p.apply_symmetry(Symmetry::Inverse);
            assert!(inv.is_cyclic());
            assert_eq!(inv.cycle_form().unwrap().entries(), expect.as_slice(), "{p}");
        }
    }
}

#[test]
fn symmetry_examples() {
    assert_eq!(pat("213").reverse(), pat("312"));
    let p: Permutation = "11 4 2 9 3 5 6 7 10 12 8 1".parse().unwrap();
    let rc = p.apply_symmetry(Symmetry::ReverseComplement);
    assert_eq!((rc.first(), rc.last()), (12, 2));
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    (0usize..=10).prop_flat_map(|n| {
        proptest::sample::subsequence((1..=40).collect::<Vec<usize>>(), n).prop_shuffle()
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_i64s(&c))
}

/// Rational functions with denominator constant term ±1, so series stay integral.
fn gf() -> impl Strategy<Value = RationalGF> {
    (poly(), proptest::collection::vec(-3i64..=3, 0..3), prop_oneof![Just(1i64), Just(-1)]).prop_map(
        |(num, tail, c0)| {
            let mut den = vec![c0];
            den.extend(tail);
            RationalGF::new(num, Poly::from_i64s(&den)).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn lds_is_naive_on_words(w in word(), k in 1usize..=8) {
        prop_assert_eq!(contains(&w, &Pattern::decreasing(k)), naive_has_decreasing(&w, k));
    }

    #[test]
    fn containment_is_monotone(w in word(), mask in any::<u16>(), p in prop_oneof![
        Just("213"), Just("231"), Just("1324"), Just("1342"), Just("321"), Just("4132")
    ]) {
        let t = pat(p);
        let sub: Vec<usize> = w.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        if contains(&sub, &t) {
            prop_assert!(contains(&w, &t));
        }
    }

    #[test]
    fn permutation_text_round_trip(w in (1usize..=12).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())) {
        let p = Permutation::new(w).unwrap();
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse().reverse(), p);
    }

    #[test]
    fn arith_field_laws(a in gf(), b in gf(), c in gf()) {
        let add = |x: &RationalGF, y: &RationalGF| arith(x, y, ArithOp::Add).unwrap();
        let mul = |x: &RationalGF, y: &RationalGF| arith(x, y, ArithOp::Mul).unwrap();
        let sub = |x: &RationalGF, y: &RationalGF| arith(x, y, ArithOp::Sub).unwrap();
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert_eq!(sub(&add(&a, &b), &b), a.clone());
        if let Ok(q) = arith(&a, &b, ArithOp::Div) {
            prop_assert_eq!(mul(&q, &b), a.clone());
        }
        let sa = a.series(8).unwrap();
        let sb = b.series(8).unwrap();
        let sum = add(&a, &b).series(8).unwrap();
        for i in 0..=8 {
            prop_assert_eq!(&sum[i], &(&sa[i] + &sb[i]));
        }
    }

    #[test]
    fn gf_text_round_trip(a in gf()) {
        prop_assert_eq!(a.to_string().parse::<RationalGF>().unwrap(), a.clone());
    }
}

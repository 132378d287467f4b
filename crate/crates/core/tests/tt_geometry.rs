mod common;

use std::collections::{BTreeMap, BTreeSet};

use motspc::tt_geometry::{
    cone, duality_unit_check, enumerate_primes, ideal_closure, rho, spc_equivariant, spc_shtop, spc_tate, support,
    verify_comparison, FiniteSpectralSpace, TateMorphism, TateObject, Universe,
};
use num_rational::Ratio;
use proptest::prelude::*;

fn euler(a: &TateObject) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for (&(i, m), &d) in a.slots() {
        *out.entry(i).or_insert(0) += if m % 2 == 0 { d as i64 } else { -(d as i64) };
    }
    out.retain(|_, v| *v != 0);
    out
}

#[test]
fn cone_is_additive_on_euler_characteristics() {
    let a = TateObject::from_slots([((0, 0), 2), ((1, 0), 1)]);
    let b = TateObject::from_slots([((0, 0), 1), ((1, 0), 2)]);
    let one = Ratio::from_integer(1);
    let zero = Ratio::from_integer(0);
    let blocks = BTreeMap::from([((0, 0), vec![vec![one, zero]]), ((1, 0), vec![vec![one], vec![zero]])]);
    let f = TateMorphism::new(&a, &b, blocks).unwrap();
    let c = cone(&f);
    let mut want = euler(&b);
    for (i, v) in euler(&a) {
        *want.entry(i).or_insert(0) -= v;
    }
    want.retain(|_, v| *v != 0);
    assert_eq!(euler(&c), want);
    assert_eq!(c, TateObject::from_slots([((0, 1), 1), ((1, 0), 1)]));
    assert!(cone(&TateMorphism::identity(&a)).is_zero());
}

#[test]
fn only_the_zero_ideal_is_prime() {
    for (t, s) in [(0, 0), (1, 0), (1, 1), (2, 1), (4, 2)] {
        let u = Universe::new(t, s);
        let e = enumerate_primes(&u);
        assert_eq!(e.primes.len(), 1, "universe ({t},{s})");
        assert!(e.primes[0].slots.is_empty());
        assert_eq!(rho(&e.primes[0]), 0, "ρ(0) is the zero ideal of Q");
        // every nonzero object generates everything
        for &slot in u.slots().iter().take(5) {
            let i = ideal_closure(&[TateObject::simple(slot.0, slot.1)], &u).unwrap();
            assert_eq!(i.slots.len(), u.slots().len());
        }
        assert_eq!(support(&TateObject::unit(), &e.primes).len(), 1);
        assert!(support(&TateObject::zero(), &e.primes).is_empty());
    }
    assert!(enumerate_primes(&Universe::degenerate()).primes.is_empty());
}

#[test]
fn objects_are_rigid() {
    for a in [
        TateObject::unit(),
        TateObject::simple(2, -1),
        TateObject::from_slots([((0, 0), 2), ((1, 1), 1), ((-1, 2), 1)]),
    ] {
        assert!(duality_unit_check(&a), "{a}");
        assert_eq!(a.dual().dual(), a);
    }
}

#[test]
fn comparison_on_several_universes() {
    for (t, s) in [(1, 2), (2, 2), (4, 2), (3, 4)] {
        assert!(verify_comparison(&Universe::new(t, s)).passed, "({t},{s})");
    }
    assert_eq!(spc_tate(&Universe::default()).unwrap().len(), 1);
}

#[test]
fn chromatic_truncations() {
    for b in [1, 2, 5, 7] {
        for h in 1..=3u64 {
            let s = spc_shtop(b, h).unwrap();
            let primes = (2..=b).filter(|&p| motspc::finite_field::is_prime(p)).count() as u64;
            assert_eq!(s.len() as u64, 1 + primes * (h + 1));
            if s.len() <= 12 {
                assert_eq!(s.enumerate_thomason(), common::upsets(s.len(), |i, j| s.specializes(i, j)));
            }
        }
    }
    let e = spc_equivariant(6, 2, 1).unwrap();
    assert_eq!(e.len(), 4 * 3);
    let glued = e.with_relations(&[("C1:P(2,inf)", "C2:P(2,1)")]).unwrap();
    assert!(glued.specializes(glued.index_of("C1:P(0,1)").unwrap(), glued.index_of("C2:P(2,inf)").unwrap()));
    assert!(spc_shtop(0, 1).is_err());
}

#[test]
fn quotient_and_localization() {
    let s = spc_shtop(2, 2).unwrap();
    let y = s.closure_of_labels(&["P(2,2)"]).unwrap();
    let q = s.lattice_quotient(&y).unwrap();
    assert_eq!(q.labels, ["P(0,1)", "P(2,1)"]);
    assert_eq!(s.lattice_localize(&y).unwrap().labels, ["P(2,2)", "P(2,inf)"]);
    let generic: BTreeSet<usize> = [s.index_of("P(0,1)").unwrap()].into();
    assert!(s.lattice_quotient(&generic).is_err());
}

fn arb_poset(max: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max).prop_flat_map(|n| {
        let pairs = prop::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), pairs.prop_map(|v| v.into_iter().filter(|(i, j)| i < j).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn thomason_subsets_are_upsets((n, rel) in arb_poset(12)) {
        let s = FiniteSpectralSpace::new((0..n).map(|i| format!("x{i}")).collect(), &rel).unwrap();
        let brute = common::upsets(n, |i, j| s.specializes(i, j));
        prop_assert_eq!(s.enumerate_thomason(), brute.clone());
        for t in &brute {
            prop_assert!(s.is_specialization_closed(t));
        }
    }
}

mod common;

use common::{field, inverse_brute, is_square_brute, order_brute, ORDERS};
use motspc::finite_field::{field_of_order, make_field, FieldError};
use proptest::prelude::*;

#[test]
fn every_unit_has_an_inverse() {
    for q in ORDERS {
        let f = field(q);
        for a in f.units() {
            let b = inverse_brute(&a).expect("unit");
            assert_eq!(a.inv().unwrap(), b, "q={q} a={a}");
        }
        assert!(f.zero().inv().is_err());
    }
}

#[test]
fn minus_one_is_a_square_iff_q_is_one_mod_four() {
    for q in ORDERS {
        let f = field(q);
        assert_eq!(is_square_brute(&f.minus_one()), q % 4 == 1, "q={q}");
    }
}

#[test]
fn squares_agree_with_search() {
    for q in ORDERS {
        let f = field(q);
        for a in f.units() {
            assert_eq!(a.is_square().unwrap(), is_square_brute(&a), "q={q} a={a}");
        }
        let squares = f.units().filter(is_square_brute).count() as u64;
        assert_eq!(squares, (q - 1) / 2);
    }
}

#[test]
fn generator_has_full_order() {
    for q in ORDERS {
        let f = field(q);
        let w = f.primitive_element();
        assert_eq!(order_brute(&w), q - 1, "q={q}");
        // least such element in the encoding order
        for a in f.units().take_while(|a| *a != w) {
            assert!(order_brute(&a) < q - 1, "q={q}: {a} also generates");
        }
        for a in f.units() {
            assert_eq!(a.multiplicative_order().unwrap(), order_brute(&a));
            let k = a.discrete_log().unwrap();
            assert_eq!(w.pow(k), a);
        }
    }
}

#[test]
fn modulus_of_f9_has_no_root() {
    let f = field(9);
    assert_eq!(f.modulus(), &[1, 0, 1]);
    let base = field(3);
    for x in base.elements() {
        assert!(!(x.clone() * x + base.one()).is_zero());
    }
}

#[test]
fn rejects_even_and_composite_orders() {
    assert!(matches!(field_of_order(8), Err(FieldError::EvenCharacteristic)));
    assert!(field_of_order(15).is_err());
    assert!(make_field(4, 1).is_err());
}

proptest! {
    #[test]
    fn field_axioms(q in prop::sample::select(ORDERS.to_vec()), a in 0u64..13, b in 0u64..13, c in 0u64..13) {
        let f = field(q);
        let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() - a.clone(), f.zero());
        prop_assert_eq!(a.pow(q), a);
    }
}

mod common;

use common::{
    diag_value, field, gram_value, hyperbolic_brute, isotropic_brute, value_census, vectors, witt_equivalent,
};
use motspc::finite_field::FieldElement;
use motspc::quadratic_forms::{
    diagonalize, fundamental_ideal_power, gw_class, is_isotropic, isotropic_vector, witt_decompose,
    witt_ring_structure, DiagonalForm, GramForm, WittClass, WittRingType,
};
use proptest::prelude::*;

fn forms_up_to_rank(f: &motspc::finite_field::PrimePower, max: usize) -> Vec<Vec<FieldElement>> {
    let units: Vec<FieldElement> = f.units().collect();
    let mut all = vec![vec![]];
    let mut layer: Vec<Vec<FieldElement>> = vec![vec![]];
    for _ in 0..max {
        layer =
            layer.into_iter().flat_map(|v| units.iter().map(move |u| [v.clone(), vec![u.clone()]].concat())).collect();
        all.extend(layer.iter().cloned());
    }
    all
}

#[test]
fn isotropy_matches_search() {
    for q in [3, 5, 7, 9] {
        let f = field(q);
        for d in forms_up_to_rank(&f, 3) {
            let form = DiagonalForm::new(&f, d.clone()).unwrap();
            assert_eq!(is_isotropic(&form), isotropic_brute(&d), "q={q} {d:?}");
            if let Some(v) = isotropic_vector(&form) {
                assert!(v.iter().any(|x| !x.is_zero()));
                assert!(diag_value(&d, &v).is_zero());
            }
        }
    }
}

#[test]
fn witt_classes_match_hyperbolicity() {
    for q in [3, 5, 7, 9, 11, 13] {
        let f = field(q);
        let classes = WittClass::all(&f);
        assert_eq!(classes.len(), 4);
        for d in forms_up_to_rank(&f, 2) {
            let lib = WittClass::of(&DiagonalForm::new(&f, d.clone()).unwrap());
            for c in &classes {
                let kernel = c.anisotropic_kernel().entries().to_vec();
                assert_eq!(*c == lib, witt_equivalent(&f, &d, &kernel), "q={q} {d:?} vs {c}");
            }
        }
    }
}

#[test]
fn witt_decomposition_counts_hyperbolic_planes() {
    for q in [3, 5, 7] {
        let f = field(q);
        for d in forms_up_to_rank(&f, 3) {
            let form = DiagonalForm::new(&f, d.clone()).unwrap();
            let (planes, kernel) = witt_decompose(&form);
            assert_eq!(2 * planes + kernel.rank(), d.len());
            assert!(!isotropic_brute(kernel.entries()), "q={q} {d:?}: kernel {kernel}");
            assert!(witt_equivalent(&f, &d, kernel.entries()));
        }
    }
}

#[test]
fn order_of_one_is_four_iff_three_mod_four() {
    for q in [3, 5, 7, 9, 11, 13] {
        let f = field(q);
        let s = witt_ring_structure(&f);
        let two_hyperbolic = hyperbolic_brute(&f, &[f.one(), f.one()]);
        assert_eq!(s.order_of_one == 2, two_hyperbolic);
        assert_eq!(s.order_of_one == 4, q % 4 == 3);
        assert_eq!(s.kind == WittRingType::Z4, q % 4 == 3);
    }
}

#[test]
fn gw_class_is_rank_and_discriminant() {
    let f = field(7);
    for d in forms_up_to_rank(&f, 2) {
        let g = gw_class(&DiagonalForm::new(&f, d.clone()).unwrap());
        assert_eq!(g.rank, d.len() as i64);
        let det = d.iter().fold(f.one(), |a, b| a * b.clone());
        assert_eq!(g.disc == 0, common::is_square_brute(&det));
    }
}

#[test]
fn fundamental_ideal_powers() {
    for q in [3, 5, 7, 9] {
        let f = field(q);
        assert_eq!(fundamental_ideal_power(&f, 0).order(), 4);
        assert_eq!(fundamental_ideal_power(&f, 1).order(), 2);
        assert_eq!(fundamental_ideal_power(&f, 2).order(), 1);
        for w in fundamental_ideal_power(&f, 1).elements {
            assert_eq!(w.rank_parity(), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn diagonalization_is_an_isometry(q in prop::sample::select(vec![3u64, 5]), entries in prop::collection::vec(-4i64..5, 6)) {
        let f = field(q);
        let [a, b, c, d, e, g] = <[i64; 6]>::try_from(entries).unwrap();
        let gram = vec![vec![a, b, c], vec![b, d, e], vec![c, e, g]];
        let form = GramForm::from_ints(&f, &gram).unwrap();
        prop_assume!(!form.determinant().is_zero());
        let diag = diagonalize(&form).unwrap();
        let lhs = value_census(vectors(&f, 3).iter().map(|v| gram_value(form.gram(), v)));
        let rhs = value_census(vectors(&f, 3).iter().map(|v| diag_value(diag.entries(), v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn witt_addition_matches_orthogonal_sum(q in prop::sample::select(vec![3u64, 5, 7, 9]), x in prop::collection::vec(1u64..9, 1..3), y in prop::collection::vec(1u64..9, 1..3)) {
        let f = field(q);
        let to_units = |v: &[u64]| -> Vec<FieldElement> { v.iter().map(|&k| f.element(1 + (k - 1) % (q - 1)).unwrap()).collect() };
        let (dx, dy) = (to_units(&x), to_units(&y));
        let a = WittClass::of(&DiagonalForm::new(&f, dx.clone()).unwrap());
        let b = WittClass::of(&DiagonalForm::new(&f, dy.clone()).unwrap());
        let sum = WittClass::of(&DiagonalForm::new(&f, [dx, dy].concat()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap(), sum);
    }
}

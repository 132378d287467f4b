mod common;

use std::collections::BTreeSet;

use common::field;
use motspc::finite_field::is_prime;
use motspc::graded_spectrum::{
    enumerate_primes, is_prime as is_homogeneous_prime, Bounds, Generator, GradedRingPresentation,
};

/// Hand model of `Z[η]/(2η)` with `deg η = −1`: degree 0 holds an integer,
/// negative degrees hold a bit times `η^m`, positive degrees vanish.
#[derive(Clone, Copy, Debug)]
struct Hom {
    degree: i64,
    value: i64,
}

fn model_mul(a: Hom, b: Hom) -> Hom {
    let degree = a.degree + b.degree;
    let value = if degree == 0 { a.value * b.value } else { (a.value * b.value).rem_euclid(2) };
    Hom { degree, value }
}

/// Membership in the ideal generated by `η` (optional) and an integer `n` (0 for none).
fn model_contains(eta: bool, n: i64, x: Hom) -> bool {
    match x.degree {
        0 => (n != 0 && x.value % n == 0) || x.value == 0,
        d if d < 0 => eta || x.value % 2 == 0 || (n % 2 == 1),
        _ => true,
    }
}

fn model_is_prime(eta: bool, n: i64) -> bool {
    let mut elems = Vec::new();
    for v in -12..=12 {
        elems.push(Hom { degree: 0, value: v });
    }
    for d in -4..0 {
        elems.push(Hom { degree: d, value: 1 });
    }
    let proper = !model_contains(eta, n, Hom { degree: 0, value: 1 });
    proper
        && elems.iter().all(|&a| {
            elems.iter().all(|&b| {
                !model_contains(eta, n, model_mul(a, b)) || model_contains(eta, n, a) || model_contains(eta, n, b)
            })
        })
}

fn split(gens: &[Generator]) -> (bool, i64) {
    let eta = gens.contains(&Generator::Eta);
    let n = gens.iter().find_map(|g| if let Generator::Integer(p) = g { Some(*p as i64) } else { None }).unwrap_or(0);
    (eta, n)
}

#[test]
fn points_are_prime_in_the_model() {
    for q in [3, 5, 9] {
        let space = enumerate_primes(&field(q), 13).unwrap();
        for p in &space.points {
            assert!(p.generators.contains(&Generator::Omega), "{}", p.name);
            let (eta, n) = split(&p.generators);
            assert!(model_is_prime(eta, n), "q={q}: {} is not prime in the model", p.name);
        }
    }
}

#[test]
fn points_are_exactly_the_model_primes() {
    let mut model: BTreeSet<String> = BTreeSet::new();
    for eta in [false, true] {
        for n in (0..=13).filter(|&n| n == 0 || is_prime(n as u64)) {
            if model_is_prime(eta, n) {
                // p·η = η for odd p, so (p) and (η, p) coincide
                let eta = eta || n % 2 == 1;
                let mut parts = vec!["[ω]".to_string()];
                if eta {
                    parts.push("η".into());
                }
                if n != 0 {
                    parts.push(n.to_string());
                }
                model.insert(format!("({})", parts.join(",")));
            }
        }
    }
    let space = enumerate_primes(&field(7), 13).unwrap();
    let got: BTreeSet<String> = space.names().into_iter().collect();
    assert_eq!(got, model);
}

#[test]
fn principal_opens_are_multiplicative() {
    let space = enumerate_primes(&field(5), 7).unwrap();
    let gens = [Generator::Omega, Generator::Eta, Generator::Integer(2), Generator::Integer(3), Generator::Integer(7)];
    for &s in &gens {
        for &t in &gens {
            let (a, b) = (space.element(s), space.element(t));
            let st = space.mul(&a, &b).unwrap();
            let meet: BTreeSet<usize> = space.d_open(&a).intersection(&space.d_open(&b)).copied().collect();
            assert_eq!(space.d_open(&st), meet, "D({s}{t})");
        }
    }
    assert!(space.d_open(&space.element(Generator::Omega)).is_empty());
}

#[test]
fn closures_and_generic_points() {
    let space = enumerate_primes(&field(7), 5).unwrap();
    let mut generic: Vec<String> = space.generic_points().into_iter().map(|i| space.points[i].name.clone()).collect();
    generic.sort();
    assert_eq!(generic, ["([ω],2)", "([ω],η)"]);
    let i = space.index_of("([w],eta)").unwrap();
    let closure: BTreeSet<String> = space.closure(&[i]).into_iter().map(|j| space.points[j].name.clone()).collect();
    let want: BTreeSet<String> =
        ["([ω],η)", "([ω],η,2)", "([ω],η,3)", "([ω],η,5)"].iter().map(|s| s.to_string()).collect();
    assert_eq!(closure, want);
    let v = space.v_closed(&[space.element(Generator::Integer(2))]);
    assert_eq!(space.closure(&v.iter().copied().collect::<Vec<_>>()), v);
}

#[test]
fn non_primes_are_rejected() {
    let ring = GradedRingPresentation::kmw(&field(7));
    let bounds = Bounds::default();
    assert!(!is_homogeneous_prime(&ring, &["eta"], bounds).unwrap().passed());
    assert!(is_homogeneous_prime(&ring, &["[w]", "eta", "3"], bounds).unwrap().passed());
    assert!(is_homogeneous_prime(&ring, &["[w]", "4"], bounds).is_err());
}

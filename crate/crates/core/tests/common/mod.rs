//! Brute-force oracles shared by the integration tests. Everything here works
//! from definitions by exhaustive search and never calls the structural
//! algorithms it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use motspc::finite_field::{field_of_order, FieldElement, PrimePower};

pub const ORDERS: [u64; 6] = [3, 5, 7, 9, 11, 13];

pub fn field(q: u64) -> PrimePower {
    field_of_order(q).unwrap()
}

/// `a` is a square iff some `x` has `x² = a`.
pub fn is_square_brute(a: &FieldElement) -> bool {
    a.field().elements().any(|x| x.clone() * x == *a)
}

/// Multiplicative inverse by search.
pub fn inverse_brute(a: &FieldElement) -> Option<FieldElement> {
    a.field().elements().find(|x| (x.clone() * a.clone()).is_one())
}

/// Least `k ≥ 1` with `a^k = 1`, by repeated multiplication.
pub fn order_brute(a: &FieldElement) -> u64 {
    let mut x = a.clone();
    let mut k = 1;
    while !x.is_one() {
        x = x * a.clone();
        k += 1;
        assert!(k <= a.field().q(), "not a unit");
    }
    k
}

pub fn vectors(f: &PrimePower, dim: usize) -> Vec<Vec<FieldElement>> {
    let elems: Vec<FieldElement> = f.elements().collect();
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v: Vec<FieldElement>| elems.iter().map(move |e| [v.clone(), vec![e.clone()]].concat()))
            .collect();
    }
    out
}

pub fn diag_value(d: &[FieldElement], x: &[FieldElement]) -> FieldElement {
    d.iter().zip(x).fold(d[0].field().zero(), |acc, (a, u)| acc + a.clone() * u.clone() * u.clone())
}

pub fn gram_value(g: &[Vec<FieldElement>], x: &[FieldElement]) -> FieldElement {
    let f = x[0].field().clone();
    let mut acc = f.zero();
    for (i, row) in g.iter().enumerate() {
        for (j, gij) in row.iter().enumerate() {
            acc = acc + gij.clone() * x[i].clone() * x[j].clone();
        }
    }
    acc
}

/// Some nonzero vector has value zero.
pub fn isotropic_brute(d: &[FieldElement]) -> bool {
    if d.is_empty() {
        return false;
    }
    vectors(d[0].field(), d.len()).into_iter().any(|v| v.iter().any(|x| !x.is_zero()) && diag_value(d, &v).is_zero())
}

/// Multiset of values `q(v)` over all vectors, an isometry invariant.
pub fn value_census(values: impl Iterator<Item = FieldElement>) -> Vec<(FieldElement, usize)> {
    let mut all: Vec<FieldElement> = values.collect();
    all.sort();
    let mut out: Vec<(FieldElement, usize)> = Vec::new();
    for v in all {
        match out.last_mut() {
            Some((w, c)) if *w == v => *c += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

fn diag_bilinear(d: &[FieldElement], x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
    d.iter().zip(x).zip(y).fold(d[0].field().zero(), |acc, ((a, u), v)| acc + a.clone() * u.clone() * v.clone())
}

/// A totally isotropic subspace of half the rank exists (rank ≤ 4).
pub fn hyperbolic_brute(f: &PrimePower, d: &[FieldElement]) -> bool {
    match d.len() {
        0 => true,
        r if r % 2 == 1 => false,
        2 => isotropic_brute(d),
        4 => {
            // one representative per line: first nonzero coordinate is 1
            let iso: Vec<Vec<FieldElement>> = vectors(f, 4)
                .into_iter()
                .filter(|v| v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_one()))
                .filter(|v| diag_value(d, v).is_zero())
                .collect();
            iso.iter().enumerate().any(|(i, v)| iso[i + 1..].iter().any(|w| diag_bilinear(d, v, w).is_zero()))
        }
        r => panic!("rank {r} is out of range"),
    }
}

/// `d₁ ~ d₂` in the Witt ring: `d₁ ⊥ −d₂` is hyperbolic.
pub fn witt_equivalent(f: &PrimePower, d1: &[FieldElement], d2: &[FieldElement]) -> bool {
    let mut all = d1.to_vec();
    all.extend(d2.iter().map(|x| -x.clone()));
    hyperbolic_brute(f, &all)
}

/// Up-sets of a relation given as a closure predicate, by checking all subsets.
pub fn upsets(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = (0u32..1 << n)
        .filter(|m| (0..n).all(|i| m & (1 << i) == 0 || (0..n).all(|j| !leq(i, j) || m & (1 << j) != 0)))
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    out.sort();
    out
}

use motspc::chow_motives::{
    compose, hom_group, motive_decompose, pairing_nondegenerate, projection_to_infinity, ChowClass, Correspondence,
    Motive, ProjSpaceProduct,
};
use proptest::prelude::*;

fn space(s: &str) -> ProjSpaceProduct {
    s.parse().unwrap()
}

/// Degree of a monomial: 1 on the point class, 0 otherwise.
fn degree_rule(x: &ProjSpaceProduct, e: &[u32]) -> i64 {
    (e == x.top().as_slice()) as i64
}

#[test]
fn monomial_products_follow_exponent_addition() {
    let x = space("P2xP1");
    for a in x.monomials() {
        for b in x.monomials() {
            let p = ChowClass::monomial(&x, a.clone(), 1)
                .unwrap()
                .mul(&ChowClass::monomial(&x, b.clone(), 1).unwrap())
                .unwrap();
            let sum: Vec<u32> = a.iter().zip(&b).map(|(u, v)| u + v).collect();
            let fits = sum.iter().zip(x.dims()).all(|(s, n)| s <= n);
            assert_eq!(p.coefficient(&sum), fits as i64, "{a:?}·{b:?}");
            assert_eq!(p.degree(), if fits { degree_rule(&x, &sum) } else { 0 });
        }
    }
}

#[test]
fn pushforward_satisfies_the_projection_formula() {
    let x = space("P2xP1");
    let base = space("P2");
    for c in x.monomials() {
        let cls = ChowClass::monomial(&x, c.clone(), 1).unwrap();
        let pushed = cls.pushforward(&[0]).unwrap();
        for a in base.monomials() {
            let alpha = ChowClass::monomial(&base, a.clone(), 1).unwrap();
            let lhs = pushed.mul(&alpha).unwrap().degree();
            let rhs = cls.mul(&alpha.pullback(&x, &[0]).unwrap()).unwrap().degree();
            assert_eq!(lhs, rhs, "{c:?} against {a:?}");
            let brute = degree_rule(&x, &[c[0] + a[0], c[1]]) * ((c[0] + a[0]) <= 2) as i64;
            assert_eq!(rhs, brute);
        }
    }
}

#[test]
fn tate_summands_and_hom_ranks() {
    for n in 0..=4 {
        let x = ProjSpaceProduct::projective(n);
        let summands = motive_decompose(&x);
        assert_eq!(summands.len(), n as usize + 1);
        for a in -1..=(n as i64 + 1) {
            let rank = hom_group(&Motive::lefschetz(a), &Motive::of_space(&x)).unwrap().rank();
            assert_eq!(rank, (0..=n as i64).contains(&a) as usize, "hom(L^{a}, M(P^{n}))");
        }
    }
    let weights: Vec<i64> = motive_decompose(&space("P1xP1")).iter().map(|s| s.weight).collect();
    let mut sorted = weights.clone();
    sorted.sort();
    assert_eq!(sorted, [0, 1, 1, 2]);
}

#[test]
fn projector_to_infinity() {
    let p = projection_to_infinity();
    assert!(p.is_idempotent());
    assert!(p.transpose().is_idempotent());
    let id = Correspondence::identity(p.source());
    let q = id.sub(&p).unwrap();
    assert!(q.is_idempotent());
    assert!(compose(&p, &q).unwrap().is_zero());
}

#[test]
fn pairing_on_small_products() {
    for s in ["pt", "P1", "P3", "P1xP1", "P2xP1", "P1xP1xP1xP1"] {
        let rep = pairing_nondegenerate(&space(s));
        assert!(rep.nondegenerate, "{s}");
        let n = rep.full_matrix.len();
        // the full pairing against complementary monomials is the identity
        for (i, row) in rep.full_matrix.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, (i == j) as i64, "{s}");
            }
        }
    }
}

fn arb_corr(src: &'static str, tgt: &'static str, shift: i64) -> impl Strategy<Value = Correspondence> {
    let (x, y) = (space(src), space(tgt));
    let prod = x.product(&y);
    let basis = prod.basis(x.dim() + shift);
    prop::collection::vec(-3i64..4, basis.len()).prop_map(move |coeffs| {
        let cls = ChowClass::from_coefficients(&prod, &basis, &coeffs);
        Correspondence::new(&x, &y, shift, cls).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn composition_is_associative(
        a in arb_corr("P1", "P2", 0),
        b in arb_corr("P2", "P1xP1", 1),
        c in arb_corr("P1xP1", "P1", -1),
    ) {
        let left = compose(&compose(&c, &b).unwrap(), &a).unwrap();
        let right = compose(&c, &compose(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_and_transpose(a in arb_corr("P2", "P1", 0), b in arb_corr("P1", "P2", 1)) {
        let id = Correspondence::identity(a.source());
        prop_assert_eq!(compose(&a, &id).unwrap(), a.clone());
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        let ba = compose(&b, &a).unwrap();
        prop_assert_eq!(ba.transpose(), compose(&a.transpose(), &b.transpose()).unwrap());
    }
}

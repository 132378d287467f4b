//! Named invariant suites shared by the CLI and the test suites.
//!
//! Every suite is deterministic: it walks a fixed parameter grid, counts the
//! checks it performs and records each violated invariant with a witness.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::chow_motives::{
    decomposition_is_complete, hom_group, motive_decompose, pairing_nondegenerate, rigidity_check, Motive,
    ProjSpaceProduct,
};
use crate::finite_field::{field_of_order, FieldElement, PrimePower};
use crate::graded_spectrum::{enumerate_primes, Generator};
use crate::milnor_witt::{gw_idempotents, MilnorWitt, SymbolWord};
use crate::quadratic_forms::{gw_class, witt_ring_structure, DiagonalForm, GWClass, WittClass, WittRingType};
use crate::tt_geometry::{
    enumerate_primes as tate_primes, graded_hom_dimension, spc_equivariant, spc_shtop, spc_tate, verify_comparison,
    FiniteSpectralSpace, Universe,
};

/// Failures kept per suite; the total count is always reported.
pub const MAX_RECORDED_FAILURES: usize = 20;

/// Odd prime powers up to 13.
pub const FIELD_ORDERS: [u64; 6] = [3, 5, 7, 9, 11, 13];

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{name}`; available suites: {available}")]
    UnknownSuite { name: String, available: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub invariant: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub description: String,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

/// Suite names with one-line descriptions, in execution order.
pub const SUITES: [(&str, &str); 9] = [
    ("kmw-tables", "K^MW_n(F_q) group shapes for q <= 13 and n in [-6, 6]"),
    ("witt", "W(F_q) structure against brute-force hyperbolicity of all forms of rank <= 3"),
    ("ses", "exactness of 0 -> I^{n+1} -> K^MW_n -> K^M_n -> 0 for n in [-4, 4]"),
    ("oracle", "K^MW coordinates in degrees <= 0 against the quadratic-forms model"),
    ("spech", "homogeneous primes of K^MW(F_q) for integer primes up to 50"),
    ("eta", "non-nilpotence of eta and the eta-localization"),
    ("motives", "Tate decompositions, rigidity and the intersection pairing"),
    ("tate", "primes of the rational Tate model and End(1)"),
    ("spaces", "finite spectral spaces, Thomason subsets and the comparison map"),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(name: &str) -> Result<SuiteReport, VerifyError> {
    let Some(&(name, description)) = SUITES.iter().find(|(n, _)| *n == name) else {
        return Err(VerifyError::UnknownSuite { name: name.to_string(), available: suite_names().join(", ") });
    };
    let mut r = Recorder::default();
    match name {
        "kmw-tables" => kmw_tables(&mut r),
        "witt" => witt(&mut r),
        "ses" => ses(&mut r),
        "oracle" => oracle(&mut r),
        "spech" => spech(&mut r),
        "eta" => eta(&mut r),
        "motives" => motives(&mut r),
        "tate" => tate(&mut r),
        "spaces" => spaces(&mut r),
        _ => unreachable!("suite table and dispatch agree"),
    }
    Ok(r.finish(name, description))
}

pub fn run_all() -> Vec<SuiteReport> {
    suite_names().into_iter().map(|n| run_suite(n).expect("listed suite")).collect()
}

#[derive(Default)]
struct Recorder {
    checks: u64,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl Recorder {
    fn check(&mut self, ok: bool, invariant: &str, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(invariant, witness());
        }
    }

    fn fail(&mut self, invariant: &str, witness: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure { invariant: invariant.to_string(), witness });
        }
    }

    /// Unwraps a library result, recording an error as a failure.
    fn ok<T, E: std::fmt::Display>(&mut self, res: Result<T, E>, invariant: &str) -> Option<T> {
        match res {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(invariant, e.to_string());
                None
            }
        }
    }

    fn finish(self, name: &str, description: &str) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            description: description.to_string(),
            checks: self.checks,
            passed: self.failure_count == 0 && self.checks > 0,
            failure_count: self.failure_count,
            failures: self.failures,
        }
    }
}

fn field(q: u64) -> PrimePower {
    field_of_order(q).expect("suite fields are odd prime powers")
}

/// Group shape of `K^MW_n(F_q)` as listed in the reference table.
pub fn expected_kmw_shape(q: u64, n: i64) -> String {
    match n {
        n if n >= 2 => "0".into(),
        1 => format!("Z/{}", q - 1),
        0 => "Z + Z/2".into(),
        _ if q % 4 == 3 => "Z/4".into(),
        _ => "Z/2 + Z/2".into(),
    }
}

fn kmw_tables(r: &mut Recorder) {
    for q in FIELD_ORDERS {
        let ring = MilnorWitt::new(&field(q));
        for n in -6..=6 {
            let Some(g) = r.ok(ring.group(n), "group is defined") else { continue };
            let want = expected_kmw_shape(q, n);
            r.check(g.shape() == want, "K^MW_n shape", || format!("q={q} n={n}: got {}, want {want}", g.shape()));
        }
    }
}

// ---------------------------------------------------------------------------
// brute-force hyperbolicity

fn normalized_vectors(field: &PrimePower, dim: usize) -> Vec<Vec<FieldElement>> {
    let elems: Vec<FieldElement> = field.elements().collect();
    let mut out: Vec<Vec<FieldElement>> = vec![vec![]];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|v| elems.iter().map(move |e| [v.clone(), vec![e.clone()]].concat())).collect();
    }
    out.retain(|v| v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_one()));
    out
}

fn diag_bilinear(d: &[FieldElement], x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
    d.iter().zip(x).zip(y).fold(d[0].field().zero(), |acc, ((a, u), v)| acc + a.clone() * u.clone() * v.clone())
}

/// Whether `⟨d_1, …, d_r⟩` (`r ≤ 4`) has a totally isotropic subspace of
/// dimension `r / 2`, by exhaustive search over projective points.
pub fn is_hyperbolic_bruteforce(field: &PrimePower, d: &[FieldElement]) -> bool {
    let r = d.len();
    assert!(r <= 4, "brute-force search is limited to rank 4");
    if r % 2 == 1 {
        return false;
    }
    if r == 0 {
        return true;
    }
    let isotropic: Vec<Vec<FieldElement>> =
        normalized_vectors(field, r).into_iter().filter(|v| diag_bilinear(d, v, v).is_zero()).collect();
    if r == 2 {
        return !isotropic.is_empty();
    }
    isotropic.iter().enumerate().any(|(i, v)| isotropic[i + 1..].iter().any(|w| diag_bilinear(d, v, w).is_zero()))
}

fn witt(r: &mut Recorder) {
    for q in FIELD_ORDERS {
        let f = field(q);
        let w = f.primitive_element();
        let one = f.one();
        let candidates: Vec<Vec<FieldElement>> =
            vec![vec![], vec![one.clone()], vec![w.clone()], vec![one.clone(), -w.clone()]];
        let to_class = |e: &FieldElement| if e.is_square().unwrap() { one.clone() } else { w.clone() };
        // f ~ c in W iff f ⊥ −c is hyperbolic; memoized on square classes
        let mut memo: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
        let mut matching = |entries: &[FieldElement]| -> Vec<usize> {
            let mut key: Vec<FieldElement> = entries.iter().map(to_class).collect();
            key.sort();
            memo.entry(key.iter().map(FieldElement::repr).collect())
                .or_insert_with(|| {
                    (0..candidates.len())
                        .filter(|&c| (key.len() + candidates[c].len()).is_multiple_of(2))
                        .filter(|&c| {
                            let mut all = key.clone();
                            all.extend(candidates[c].iter().map(|x| -x.clone()));
                            is_hyperbolic_bruteforce(&f, &all)
                        })
                        .collect()
                })
                .clone()
        };
        let cand_classes: Vec<WittClass> =
            candidates.iter().map(|c| WittClass::of(&DiagonalForm::new(&f, c.clone()).unwrap())).collect();
        let units: Vec<FieldElement> = f.units().collect();
        let mut forms: Vec<Vec<FieldElement>> = vec![vec![]];
        for rank in 1..=3usize {
            let mut layer: Vec<Vec<FieldElement>> = vec![vec![]];
            for _ in 0..rank {
                layer = layer
                    .into_iter()
                    .flat_map(|v| {
                        let lo = v.last().cloned();
                        units
                            .iter()
                            .filter(move |u| lo.as_ref().is_none_or(|l| *u >= l))
                            .map(move |u| [v.clone(), vec![u.clone()]].concat())
                    })
                    .collect();
            }
            forms.extend(layer);
        }
        for entries in &forms {
            let m = matching(entries);
            r.check(m.len() == 1, "each form is Witt-equivalent to exactly one canonical class", || {
                format!("q={q} form {entries:?} matches candidates {m:?}")
            });
            if m.len() == 1 {
                let lib = WittClass::of(&DiagonalForm::new(&f, entries.clone()).unwrap());
                r.check(lib == cand_classes[m[0]], "library Witt class agrees with brute force", || {
                    format!("q={q} form {entries:?}: library {lib}, brute force {}", cand_classes[m[0]])
                });
            }
        }
        let order = if is_hyperbolic_bruteforce(&f, &[one.clone(), one.clone()]) {
            2
        } else if is_hyperbolic_bruteforce(&f, &vec![one.clone(); 4]) {
            4
        } else {
            0
        };
        let s = witt_ring_structure(&f);
        r.check(s.order_of_one == order, "additive order of <1>", || {
            format!("q={q}: library {}, brute force {order}", s.order_of_one)
        });
        r.check((order == 4) == (q % 4 == 3), "order of <1> is 4 iff q = 3 mod 4", || format!("q={q}: order {order}"));
        let want = if order == 4 { WittRingType::Z4 } else { WittRingType::DualNumbersF2 };
        r.check(s.kind == want, "Witt ring type", || format!("q={q}: library {}, brute force {want}", s.kind));
    }
}

fn ses(r: &mut Recorder) {
    for q in [3, 5, 7, 9] {
        let ring = MilnorWitt::new(&field(q));
        for n in -4..=4 {
            let Some(rep) = r.ok(ring.verify_ses(n), "short exact sequence is computable") else { continue };
            r.check(rep.passed(), "0 -> I^{n+1} -> K^MW_n -> K^M_n -> 0 is exact", || {
                format!("q={q} n={n}: {}", rep.witnesses.join("; "))
            });
        }
    }
}

/// `Π (⟨a_j⟩ − ⟨1⟩)` in `GW(F_q)`.
fn gw_model(f: &PrimePower, symbols: &[FieldElement]) -> GWClass {
    let one = GWClass::new(f, 1, 0);
    symbols.iter().fold(one.clone(), |acc, a| {
        let unary = gw_class(&DiagonalForm::new(f, vec![a.clone()]).unwrap());
        acc.mul(&unary.add(&one.neg()).unwrap()).unwrap()
    })
}

fn oracle(r: &mut Recorder) {
    for q in [3, 5, 7, 9] {
        let f = field(q);
        let ring = MilnorWitt::new(&f);
        let units: Vec<FieldElement> = f.units().collect();
        for n in -4..=0i64 {
            let mut tuples: Vec<Vec<FieldElement>> = vec![vec![]];
            tuples.extend(units.iter().map(|a| vec![a.clone()]));
            tuples.extend(units.iter().flat_map(|a| units.iter().map(move |b| vec![a.clone(), b.clone()])));
            for t in tuples {
                let i = t.len() as i64 - n;
                let mut word = SymbolWord::eta_power(&f, i as u32);
                for a in &t {
                    word = word.mul(&SymbolWord::symbol(a).unwrap()).unwrap();
                }
                let Some(red) = r.ok(ring.reduce(&word), "word reduces") else { continue };
                let x = match red.get(&n) {
                    Some(x) => x.clone(),
                    None => ring.zero(n).unwrap(),
                };
                let model = gw_model(&f, &t);
                if n == 0 {
                    let got = ring.to_gw(&x).unwrap();
                    r.check(got == model, "degree-0 coordinates agree with GW", || {
                        format!("q={q} word {word}: coordinates {:?} give {got}, model {model}", x.coords)
                    });
                } else {
                    let got = ring.to_witt(&x).unwrap();
                    let want = model.witt_class();
                    r.check(got == want, "negative-degree coordinates agree with W", || {
                        format!("q={q} word {word}: coordinates {:?} give {got}, model {want}", x.coords)
                    });
                }
            }
            // every coordinate vector, rebuilt as a word and evaluated in the model
            let Some(elements) = r.ok(ring.elements(n, 3), "elements enumerate") else { continue };
            let mut images: Vec<String> = Vec::new();
            let m = (-n) as u32;
            for x in &elements {
                let (c0, c1) = (x.coords[0], x.coords.get(1).copied().unwrap_or(0));
                let w = f.primitive_element();
                let word = SymbolWord::eta_power(&f, m)
                    .scale(c0)
                    .add(&SymbolWord::eta_power(&f, m + 1).mul(&SymbolWord::symbol(&w).unwrap()).unwrap().scale(c1))
                    .unwrap();
                let back =
                    ring.reduce(&word).ok().and_then(|mut red| red.remove(&n)).unwrap_or_else(|| ring.zero(n).unwrap());
                r.check(back == *x, "coordinates round-trip through words", || {
                    format!("q={q} n={n}: {:?} reduces to {:?}", x.coords, back.coords)
                });
                let unit = gw_model(&f, &[]);
                let pf = gw_model(&f, std::slice::from_ref(&w));
                let model = unit
                    .mul(&GWClass::new(&f, c0, 0))
                    .unwrap()
                    .add(&pf.mul(&GWClass::new(&f, c1, 0)).unwrap())
                    .unwrap();
                let (got, want) = if n == 0 {
                    (ring.to_gw(x).unwrap().to_string(), model.to_string())
                } else {
                    (ring.to_witt(x).unwrap().to_string(), model.witt_class().to_string())
                };
                r.check(got == want, "element agrees with the quadratic-forms model", || {
                    format!("q={q} n={n} coordinates {:?}: {got} vs {want}", x.coords)
                });
                images.push(got);
            }
            let distinct: BTreeSet<&String> = images.iter().collect();
            r.check(distinct.len() == images.len(), "the comparison map is injective", || {
                format!("q={q} n={n}: {} elements, {} images", images.len(), distinct.len())
            });
        }
    }
}

fn spech(r: &mut Recorder) {
    let bound = 50;
    let primes: Vec<u64> = (2..=bound).filter(|&p| crate::finite_field::is_prime(p)).collect();
    for q in [3, 5, 7, 9] {
        let f = field(q);
        let Some(space) = r.ok(enumerate_primes(&f, bound), "Spec^h enumerates") else { continue };
        let mut want = vec!["([ω],η)".to_string()];
        want.extend(primes.iter().map(|p| format!("([ω],η,{p})")));
        want.push("([ω],2)".into());
        let mut got = space.names();
        got.sort();
        want.sort();
        r.check(got == want, "Spec^h point list", || format!("q={q}: got {got:?}"));
        for p in &space.points {
            r.check(p.certificate.passed() && p.certificate.degree_bound >= 12, "primality certificate", || {
                format!("q={q} {}: {:?}", p.name, p.certificate.counterexample)
            });
        }
        let disc: Vec<&str> = space.discrepancies().iter().map(|p| p.name.as_str()).collect();
        r.check(disc == ["([ω],η,2)"], "exactly one flagged discrepancy", || format!("q={q}: {disc:?}"));
        let d_eta: Vec<String> =
            space.d_open(&space.element(Generator::Eta)).iter().map(|&i| space.points[i].name.clone()).collect();
        r.check(d_eta == ["([ω],2)"], "D(η) is the single point ([ω],2)", || format!("q={q}: {d_eta:?}"));
    }
}

fn eta(r: &mut Recorder) {
    for q in FIELD_ORDERS {
        let ring = MilnorWitt::new(&field(q));
        for n in 0..=64 {
            let Some(nz) = r.ok(ring.eta_power_nonzero(n), "η^n is defined") else { continue };
            r.check(nz, "η is not nilpotent", || format!("q={q}: η^{n} = 0"));
        }
        let Some(loc) = r.ok(ring.localize_eta(-4, 2), "η-localization is computable") else { continue };
        r.check(loc.four_is_zero, "4 = 0 after inverting η", || format!("q={q}"));
        r.check(loc.two_is_zero == (q % 4 == 1), "2 = 0 after inverting η iff q = 1 mod 4", || {
            format!("q={q}: two_is_zero={}", loc.two_is_zero)
        });
        let (_, splittings) = gw_idempotents(&field(q), 12);
        r.check(splittings.is_empty(), "1 is not a sum of two nonzero idempotents of GW[1/p]", || {
            format!("q={q}: {splittings:?}")
        });
    }
}

/// Products of projective spaces of total dimension at most `d`, every factor positive.
pub fn spaces_up_to(d: u32) -> Vec<ProjSpaceProduct> {
    let mut out = vec![ProjSpaceProduct::point()];
    let mut frontier: Vec<Vec<u32>> = vec![vec![]];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for dims in frontier {
            let used: u32 = dims.iter().sum();
            for k in 1..=d.saturating_sub(used) {
                let mut e = dims.clone();
                e.push(k);
                out.push(ProjSpaceProduct::new(e.clone()));
                next.push(e);
            }
        }
        frontier = next;
    }
    out
}

fn motives(r: &mut Recorder) {
    for n in 0..=4 {
        let x = ProjSpaceProduct::projective(n);
        let summands = motive_decompose(&x);
        let weights: Vec<i64> = summands.iter().map(|s| s.weight).collect();
        r.check(summands.len() == n as usize + 1, "M(P^n) has n+1 Tate summands", || format!("P^{n}: {weights:?}"));
        r.check(summands.iter().all(|s| s.verified), "summands are isomorphic to their Tate motives", || {
            format!("P^{n}")
        });
        r.check(decomposition_is_complete(&x, &summands), "summands are orthogonal and sum to the diagonal", || {
            format!("P^{n}")
        });
        let mut sorted = weights.clone();
        sorted.sort();
        r.check(sorted == (0..=n as i64).collect::<Vec<_>>(), "weights are 0..n", || format!("P^{n}: {weights:?}"));
    }
    let tate: Vec<Motive> = (-3..=3).map(Motive::lefschetz).collect();
    for (i, m) in tate.iter().enumerate() {
        for (j, n) in tate.iter().enumerate() {
            for (k, p) in tate.iter().enumerate() {
                let Some(rep) = r.ok(rigidity_check(m, n, p), "rigidity is computable") else { continue };
                r.check(rep.bijective, "hom(M⊗N, P) = hom(M, N^∨⊗P)", || {
                    format!(
                        "L^{}, L^{}, L^{}: ranks {} and {}",
                        i as i64 - 3,
                        j as i64 - 3,
                        k as i64 - 3,
                        rep.lhs_rank,
                        rep.rhs_rank
                    )
                });
            }
        }
    }
    for x in spaces_up_to(4) {
        let rep = pairing_nondegenerate(&x);
        r.check(rep.nondegenerate, "intersection pairing is perfect", || {
            format!("{x}: determinants {:?}", rep.blocks.iter().map(|b| b.determinant).collect::<Vec<_>>())
        });
    }
}

fn tate(r: &mut Recorder) {
    let universe = Universe::default();
    let e = tate_primes(&universe);
    r.check(e.primes.len() == 1, "exactly one prime", || {
        format!("{} primes: {:?}", e.primes.len(), e.primes.iter().map(|p| &p.label).collect::<Vec<_>>())
    });
    r.check(e.primes.iter().all(|p| p.slots.is_empty()), "the prime is the zero ideal", || {
        format!("{:?}", e.primes.iter().map(|p| &p.label).collect::<Vec<_>>())
    });
    if let Some(h) = r.ok(hom_group(&Motive::unit(), &Motive::unit()), "End(1) is computable") {
        let rat = h.rationalize();
        r.check(rat.dimension == 1 && rat.is_injective(), "End(1) ⊗ Q is Q", || {
            format!("dimension {}", rat.dimension)
        });
    }
    r.check(graded_hom_dimension(0) == 1, "hom(1, 1) in the Tate model is Q", || {
        format!("{}", graded_hom_dimension(0))
    });
}

/// Up-sets of the specialization order, by checking every subset.
pub fn thomason_bruteforce(space: &FiniteSpectralSpace) -> Vec<BTreeSet<usize>> {
    let n = space.len();
    assert!(n <= 20, "brute force is exponential");
    let mut out: Vec<BTreeSet<usize>> = (0u32..1 << n)
        .filter(|mask| {
            (0..n).all(|i| mask & (1 << i) == 0 || (0..n).all(|j| !space.specializes(i, j) || mask & (1 << j) != 0))
        })
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    out.sort();
    out
}

fn spaces(r: &mut Recorder) {
    if let Some(space) = r.ok(spc_shtop(3, 3), "Spc(SH^c) truncation builds") {
        let primes = [2u64, 3];
        let want_len = 1 + primes.len() * 4;
        r.check(space.len() == want_len, "point count", || format!("{} points", space.len()));
        for &p in &primes {
            for n in 1..=3u64 {
                let label = format!("P({p},{n})");
                let mut want: BTreeSet<String> = (n..=3).map(|m| format!("P({p},{m})")).collect();
                want.insert(format!("P({p},inf)"));
                let got: BTreeSet<String> = match space.closure_of_labels(&[&label]) {
                    Ok(c) => space.labels_of(&c).into_iter().collect(),
                    Err(e) => BTreeSet::from([e.to_string()]),
                };
                r.check(got == want, "closure of P(p,n) is {P(p,m) : m >= n} with P(p,inf)", || {
                    format!("{label}: {got:?}")
                });
            }
            let top = space.index_of(&format!("P({p},inf)")).unwrap();
            let gen: BTreeSet<String> =
                (0..space.len()).filter(|&i| space.specializes(i, top)).map(|i| space.labels[i].clone()).collect();
            let mut want: BTreeSet<String> = (1..=3).map(|m| format!("P({p},{m})")).collect();
            want.insert(format!("P({p},inf)"));
            want.insert("P(0,1)".into());
            r.check(gen == want, "generizations of P(p,inf)", || format!("P({p},inf): {gen:?}"));
        }
        let all: BTreeSet<usize> = (0..space.len()).collect();
        let c = space.closure_of_labels(&["P(0,1)"]).unwrap_or_default();
        r.check(c == all, "P(0,1) is the generic point", || format!("{:?}", space.labels_of(&c)));
    }
    let mut spaces: Vec<(String, FiniteSpectralSpace)> = Vec::new();
    for b in 1..=7 {
        for h in 1..=4 {
            if let Ok(s) = spc_shtop(b, h) {
                spaces.push((format!("sh-top({b},{h})"), s));
            }
            for n in 1..=4 {
                if let Ok(s) = spc_equivariant(n, b, h) {
                    spaces.push((format!("equivariant({n},{b},{h})"), s));
                }
            }
        }
    }
    if let Ok(s) = spc_tate(&Universe::default()) {
        spaces.push(("tate".into(), s));
    }
    for (name, s) in spaces.iter().filter(|(_, s)| s.len() <= 12) {
        let lib = s.enumerate_thomason();
        let brute = thomason_bruteforce(s);
        r.check(lib == brute, "Thomason subsets are the up-sets", || {
            format!("{name}: {} enumerated, {} by brute force", lib.len(), brute.len())
        });
    }
    let cmp = verify_comparison(&Universe::default());
    r.check(cmp.passed, "preimage of D(s) is U(Cone(s))", || {
        cmp.checks.iter().filter(|c| !c.agrees).map(|c| c.element.clone()).collect::<Vec<_>>().join(", ")
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_planes() {
        let f = field(7);
        let one = f.one();
        assert!(is_hyperbolic_bruteforce(&f, &[one.clone(), -one.clone()]));
        assert!(!is_hyperbolic_bruteforce(&f, &[one.clone(), one.clone()]));
        assert!(is_hyperbolic_bruteforce(&f, &vec![one; 4]));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope"), Err(VerifyError::UnknownSuite { .. })));
    }

    #[test]
    fn small_suites_pass() {
        for name in ["kmw-tables", "ses", "tate"] {
            let rep = run_suite(name).unwrap();
            assert!(rep.passed, "{name}: {:?}", rep.failures);
        }
    }
}

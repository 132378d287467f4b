//! Homogeneous prime spectrum of `K^MW_•(F_q)`.
//!
//! The nilpotent generators `[ω]`, `η[ω]` and `2η` are found by squaring, the
//! quotient is compared degree by degree with `Z[η]/(2η)`, and homogeneous
//! primes are enumerated over that reduced ring from the alphabet
//! `{η, 2} ∪ {odd primes ≤ bound}`. Each prime is lifted back by adjoining `[ω]`
//! and certified again in the full ring. Primality certificates are bounded in
//! degree and in coefficient size.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::finite_field::{is_prime as is_prime_integer, PrimePower};
use crate::linalg::{quotient_invariants, IntLattice};
use crate::milnor_witt::{KmwElement, KmwError, MilnorWitt};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("unknown generator {0:?}; expected [w], eta, 2 or an odd prime")]
    UnknownGenerator(String),
    #[error("prime bound must be at least 2, got {0}")]
    PrimeBoundTooSmall(u64),
    #[error(transparent)]
    Kmw(#[from] KmwError),
}

/// Named generators of candidate ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Generator {
    Omega,
    Eta,
    Integer(u64),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Omega => write!(f, "[ω]"),
            Generator::Eta => write!(f, "η"),
            Generator::Integer(n) => write!(f, "{n}"),
        }
    }
}

impl Generator {
    pub fn parse(s: &str) -> Result<Generator, SpecError> {
        match s.trim() {
            "[w]" | "[ω]" | "w" | "ω" => Ok(Generator::Omega),
            "eta" | "η" => Ok(Generator::Eta),
            t => match t.parse::<u64>() {
                Ok(p) if is_prime_integer(p) => Ok(Generator::Integer(p)),
                _ => Err(SpecError::UnknownGenerator(s.to_string())),
            },
        }
    }
}

fn ideal_name(gens: &[Generator]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Homogeneous element given by degree and coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HomElem {
    pub degree: i64,
    pub coords: Vec<i64>,
}

impl From<&KmwElement> for HomElem {
    fn from(x: &KmwElement) -> Self {
        HomElem { degree: x.degree, coords: x.coords.clone() }
    }
}

/// `Z[t]/(m·t)` with `t` in degree `t_degree ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedPolynomial {
    pub t_degree: i64,
    pub m: u64,
}

/// Graded rings whose homogeneous pieces are finitely generated abelian groups
/// with explicit coordinates.
#[derive(Clone, Debug)]
pub enum GradedRingPresentation {
    Kmw(MilnorWitt),
    Truncated(TruncatedPolynomial),
}

const TRUNCATED_WINDOW: (i64, i64) = (-64, 64);

impl GradedRingPresentation {
    pub fn kmw(field: &PrimePower) -> Self {
        GradedRingPresentation::Kmw(MilnorWitt::new(field))
    }

    pub fn degree_window(&self) -> (i64, i64) {
        match self {
            GradedRingPresentation::Kmw(r) => (r.config().min_degree, r.config().max_degree),
            GradedRingPresentation::Truncated(_) => TRUNCATED_WINDOW,
        }
    }

    fn in_window(&self, n: i64) -> bool {
        let (lo, hi) = self.degree_window();
        (lo..=hi).contains(&n)
    }

    /// Coordinate moduli of degree `n`, `0` for a free coordinate.
    pub fn moduli(&self, n: i64) -> Vec<u64> {
        match self {
            GradedRingPresentation::Kmw(r) => r.coordinate_moduli(n),
            GradedRingPresentation::Truncated(t) => {
                if n == 0 {
                    vec![0]
                } else if n % t.t_degree == 0 && n / t.t_degree >= 1 && t.m != 1 {
                    vec![t.m]
                } else {
                    vec![]
                }
            }
        }
    }

    /// Invariant factors of the degree-`n` piece.
    pub fn shape(&self, n: i64) -> Vec<u64> {
        let m = self.moduli(n);
        let rows = relation_rows(&m);
        quotient_invariants(&rows, m.len())
    }

    fn normalize(&self, mut x: HomElem) -> HomElem {
        for (c, m) in x.coords.iter_mut().zip(self.moduli(x.degree)) {
            if m != 0 {
                *c = c.rem_euclid(m as i64);
            }
        }
        x
    }

    pub fn zero(&self, n: i64) -> HomElem {
        HomElem { degree: n, coords: vec![0; self.moduli(n).len()] }
    }

    pub fn is_zero(&self, x: &HomElem) -> bool {
        self.normalize(x.clone()).coords.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, x: &HomElem, y: &HomElem) -> Result<HomElem, SpecError> {
        match self {
            GradedRingPresentation::Kmw(r) => {
                let a = r.element(x.degree, x.coords.clone())?;
                let b = r.element(y.degree, y.coords.clone())?;
                Ok(HomElem::from(&r.mul(&a, &b)?))
            }
            GradedRingPresentation::Truncated(_) => {
                let n = x.degree + y.degree;
                let mut z = self.zero(n);
                if let (Some(a), Some(b), Some(c)) = (x.coords.first(), y.coords.first(), z.coords.first_mut()) {
                    *c = a * b;
                }
                Ok(self.normalize(z))
            }
        }
    }

    /// The element named by `g`; `[ω]` is zero in a truncated polynomial ring.
    pub fn generator(&self, g: Generator) -> HomElem {
        match (self, g) {
            (GradedRingPresentation::Kmw(r), Generator::Omega) => {
                HomElem::from(&r.symbol(&r.field().primitive_element()).expect("ω is a unit"))
            }
            (GradedRingPresentation::Kmw(r), Generator::Eta) => HomElem::from(&r.eta().expect("degree −1 in window")),
            (GradedRingPresentation::Truncated(_), Generator::Omega) => self.zero(1),
            (GradedRingPresentation::Truncated(t), Generator::Eta) => {
                self.normalize(HomElem { degree: t.t_degree, coords: vec![1] })
            }
            (_, Generator::Integer(n)) => self.normalize(HomElem { degree: 0, coords: self.integer_coords(n as i64) }),
        }
    }

    fn integer_coords(&self, n: i64) -> Vec<i64> {
        let mut c = vec![0; self.moduli(0).len()];
        c[0] = n;
        c
    }

    pub fn one(&self) -> HomElem {
        HomElem { degree: 0, coords: self.integer_coords(1) }
    }

    fn basis(&self, n: i64) -> Vec<HomElem> {
        let k = self.moduli(n).len();
        (0..k).map(|i| HomElem { degree: n, coords: (0..k).map(|j| (i == j) as i64).collect() }).collect()
    }

    /// Elements of degree `n` with coordinates of magnitude at most `bound`
    /// (all elements of a finite coordinate when it is small).
    pub fn sample_elements(&self, n: i64, bound: i64) -> Vec<HomElem> {
        let ranges: Vec<Vec<i64>> = self
            .moduli(n)
            .into_iter()
            .map(|m| {
                if m != 0 && m as i64 <= 2 * bound + 1 {
                    (0..m as i64).collect()
                } else {
                    let mut v: Vec<i64> =
                        (-bound..=bound).map(|c| if m == 0 { c } else { c.rem_euclid(m as i64) }).collect();
                    v.sort_unstable();
                    v.dedup();
                    v
                }
            })
            .collect();
        let mut out = vec![Vec::new()];
        for r in ranges {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    r.iter().map(move |&c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|coords| HomElem { degree: n, coords }).collect()
    }
}

fn relation_rows(moduli: &[u64]) -> Vec<Vec<i64>> {
    moduli
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(i, &m)| (0..moduli.len()).map(|j| if i == j { m as i64 } else { 0 }).collect())
        .collect()
}

/// Two-sided homogeneous ideal given by homogeneous generators.
#[derive(Clone, Debug, Default)]
pub struct HomogeneousIdeal {
    generators: Vec<HomElem>,
}

impl HomogeneousIdeal {
    pub fn new(generators: Vec<HomElem>) -> Self {
        HomogeneousIdeal { generators }
    }

    pub fn from_names(ring: &GradedRingPresentation, gens: &[Generator]) -> Self {
        HomogeneousIdeal::new(gens.iter().map(|&g| ring.generator(g)).collect())
    }

    pub fn generators(&self) -> &[HomElem] {
        &self.generators
    }

    /// The degree-`n` piece as a lattice of coordinate vectors, relations included.
    pub fn piece(&self, ring: &GradedRingPresentation, n: i64) -> IntLattice {
        let moduli = ring.moduli(n);
        let mut rows = relation_rows(&moduli);
        for g in &self.generators {
            let d = n - g.degree;
            if !ring.in_window(d) || !ring.in_window(n) {
                continue;
            }
            for b in ring.basis(d) {
                for p in [ring.mul(&b, g), ring.mul(g, &b)] {
                    rows.push(p.expect("degrees checked against the window").coords);
                }
            }
        }
        IntLattice::new(moduli.len(), rows)
    }

    pub fn contains(&self, ring: &GradedRingPresentation, x: &HomElem) -> bool {
        self.piece(ring, x.degree).contains(&x.coords)
    }

    pub fn is_proper(&self, ring: &GradedRingPresentation) -> bool {
        !self.contains(ring, &ring.one())
    }

    /// Degree-wise inclusion on `lo..=hi`.
    pub fn is_subset_on(&self, other: &HomogeneousIdeal, ring: &GradedRingPresentation, lo: i64, hi: i64) -> bool {
        (lo..=hi).all(|n| other.piece(ring, n).contains_lattice(&self.piece(ring, n)))
    }

    fn signature(&self, ring: &GradedRingPresentation, lo: i64, hi: i64) -> Vec<Vec<Vec<i64>>> {
        (lo..=hi).map(|n| self.piece(ring, n).basis()).collect()
    }
}

/// Outcome of the bounded multiplicativity check.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeCertificate {
    pub ideal: String,
    pub proper: bool,
    pub degree_bound: i64,
    pub coefficient_bound: i64,
    pub pairs_checked: u64,
    /// `(x, y)` with `x·y ∈ I`, `x ∉ I`, `y ∉ I`.
    pub counterexample: Option<(HomElem, HomElem)>,
}

impl PrimeCertificate {
    pub fn passed(&self) -> bool {
        self.proper && self.counterexample.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub degree_bound: i64,
    pub coefficient_bound: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { degree_bound: 12, coefficient_bound: 8 }
    }
}

/// Bounded primality check for the ideal generated by the named generators.
pub fn is_prime(ring: &GradedRingPresentation, names: &[&str], bounds: Bounds) -> Result<PrimeCertificate, SpecError> {
    let gens = names.iter().map(|s| Generator::parse(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(certify(ring, &gens, bounds))
}

pub fn certify(ring: &GradedRingPresentation, gens: &[Generator], bounds: Bounds) -> PrimeCertificate {
    let ideal = HomogeneousIdeal::from_names(ring, gens);
    certify_ideal(ring, &ideal, ideal_name(gens), bounds)
}

pub fn certify_ideal(
    ring: &GradedRingPresentation,
    ideal: &HomogeneousIdeal,
    name: String,
    bounds: Bounds,
) -> PrimeCertificate {
    let Bounds { degree_bound: d, coefficient_bound: c } = bounds;
    let mut cert = PrimeCertificate {
        ideal: name,
        proper: ideal.is_proper(ring),
        degree_bound: d,
        coefficient_bound: c,
        pairs_checked: 0,
        counterexample: None,
    };
    if !cert.proper {
        return cert;
    }
    let pieces: BTreeMap<i64, IntLattice> =
        (-2 * d..=2 * d).filter(|&n| ring.in_window(n)).map(|n| (n, ideal.piece(ring, n))).collect();
    let outside: Vec<HomElem> = (-d..=d)
        .filter(|&n| ring.in_window(n))
        .flat_map(|n| ring.sample_elements(n, c))
        .filter(|x| !pieces[&x.degree].contains(&x.coords))
        .collect();
    for x in &outside {
        for y in &outside {
            let Some(piece) = pieces.get(&(x.degree + y.degree)) else {
                continue;
            };
            cert.pairs_checked += 1;
            let xy = ring.mul(x, y).expect("degrees in window");
            if piece.contains(&xy.coords) {
                cert.counterexample = Some((x.clone(), y.clone()));
                return cert;
            }
        }
    }
    cert
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotentWitness {
    pub element: String,
    pub degree: i64,
    /// Least `k` with `x^k = 0`.
    pub power: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceComparison {
    pub degree: i64,
    pub quotient_shape: Vec<u64>,
    pub reduced_shape: Vec<u64>,
}

/// `K^MW_•(F_q)` modulo its nilradical.
#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub q: u64,
    pub reduced: TruncatedPolynomial,
    pub killed: Vec<NilpotentWitness>,
    /// Generators checked to be non-nilpotent on the degree window.
    pub retained: Vec<String>,
    pub comparison: Vec<PieceComparison>,
    pub consistent: bool,
}

fn nilpotency_index(ring: &GradedRingPresentation, x: &HomElem, max: u32) -> Option<u32> {
    let mut acc = x.clone();
    for k in 1..=max {
        if ring.is_zero(&acc) {
            return Some(k);
        }
        if !ring.in_window(acc.degree + x.degree) {
            return None;
        }
        acc = ring.mul(&acc, x).ok()?;
    }
    None
}

/// Identifies the nilpotent generators by squaring and checks that the
/// quotient agrees degree-wise with `Z[η]/(2η)`, `deg η = −1`.
pub fn nilradical_reduction(field: &PrimePower) -> Result<Reduction, SpecError> {
    let ring = GradedRingPresentation::kmw(field);
    let reduced = TruncatedPolynomial { t_degree: -1, m: 2 };
    let reduced_ring = GradedRingPresentation::Truncated(reduced);
    let omega = ring.generator(Generator::Omega);
    let eta = ring.generator(Generator::Eta);
    let eta_omega = ring.mul(&eta, &omega)?;
    let two_eta = ring.mul(&ring.generator(Generator::Integer(2)), &eta)?;
    let mut killed = Vec::new();
    let mut consistent = true;
    for (name, x) in [("[w]", &omega), ("eta[w]", &eta_omega), ("2eta", &two_eta)] {
        // exponent at which the power first vanishes, starting from x^1
        let mut power = None;
        let mut acc = x.clone();
        for k in 1..=4u32 {
            if ring.is_zero(&acc) {
                power = Some(k);
                break;
            }
            acc = ring.mul(&acc, x)?;
        }
        match power {
            Some(power) => killed.push(NilpotentWitness { element: name.into(), degree: x.degree, power }),
            None => consistent = false,
        }
    }
    let (lo, _) = ring.degree_window();
    let eta_survives = (1..=-lo as u32).all(|k| {
        let mut acc = ring.one();
        for _ in 0..k {
            acc = ring.mul(&acc, &eta).expect("in window");
        }
        !ring.is_zero(&acc)
    });
    let reduced_eta = reduced_ring.generator(Generator::Eta);
    let reduced_eta_survives = nilpotency_index(&reduced_ring, &reduced_eta, 32).is_none();
    consistent &= eta_survives && reduced_eta_survives;
    let nil = HomogeneousIdeal::new(vec![omega, eta_omega, two_eta]);
    let comparison: Vec<PieceComparison> = (-8..=8)
        .map(|n| {
            let piece = nil.piece(&ring, n);
            PieceComparison {
                degree: n,
                quotient_shape: quotient_invariants(&piece.basis(), ring.moduli(n).len()),
                reduced_shape: reduced_ring.shape(n),
            }
        })
        .collect();
    consistent &= comparison.iter().all(|c| c.quotient_shape == c.reduced_shape);
    let retained = if eta_survives { vec!["eta".to_string()] } else { vec![] };
    Ok(Reduction { q: field.q(), reduced, killed, retained, comparison, consistent })
}

#[derive(Clone, Debug, Serialize)]
pub struct HomogeneousPrime {
    pub generators: Vec<Generator>,
    pub name: String,
    /// Characteristic of the degree-0 residue ring.
    pub characteristic: u64,
    pub reduced_certificate: PrimeCertificate,
    pub certificate: PrimeCertificate,
    /// Set when the point lies outside the three expected families.
    pub discrepancy: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RejectedCandidate {
    pub generators: Vec<Generator>,
    pub reason: String,
}

/// Finite truncation of `Spec^h(K^MW_•(F_q))`.
#[derive(Clone, Debug, Serialize)]
pub struct SpecHSpace {
    pub q: u64,
    pub prime_bound: u64,
    pub bounds: Bounds,
    pub points: Vec<HomogeneousPrime>,
    /// `(i, j)` with `i ≠ j` and `P_i ⊆ P_j`: `P_j` is a specialization of `P_i`.
    pub specializations: Vec<(usize, usize)>,
    pub rejected: Vec<RejectedCandidate>,
    pub reduction: Reduction,
    #[serde(skip)]
    ring: Option<GradedRingPresentation>,
    #[serde(skip)]
    ideals: Vec<HomogeneousIdeal>,
}

pub fn enumerate_primes(field: &PrimePower, prime_bound: u64) -> Result<SpecHSpace, SpecError> {
    enumerate_primes_with(field, prime_bound, Bounds::default())
}

fn odd_primes(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&p| is_prime_integer(p)).collect()
}

pub fn enumerate_primes_with(field: &PrimePower, prime_bound: u64, bounds: Bounds) -> Result<SpecHSpace, SpecError> {
    if prime_bound < 2 {
        return Err(SpecError::PrimeBoundTooSmall(prime_bound));
    }
    let reduction = nilradical_reduction(field)?;
    let reduced = GradedRingPresentation::Truncated(reduction.reduced);
    let full = GradedRingPresentation::kmw(field);
    let d = bounds.degree_bound;

    let mut alphabet = vec![Generator::Eta, Generator::Integer(2)];
    alphabet.extend(odd_primes(prime_bound).into_iter().map(Generator::Integer));

    // depth-first over subsets in alphabet order; improper sets are not extended
    let mut rejected = Vec::new();
    type Classes = BTreeMap<Vec<Vec<Vec<i64>>>, (HomogeneousIdeal, Vec<Vec<Generator>>)>;
    let mut classes: Classes = BTreeMap::new();
    let mut stack: Vec<(Vec<Generator>, usize)> = vec![(vec![], 0)];
    while let Some((set, next)) = stack.pop() {
        let ideal = HomogeneousIdeal::from_names(&reduced, &set);
        if !ideal.is_proper(&reduced) {
            rejected.push(RejectedCandidate { generators: lift(&set), reason: "improper".into() });
            continue;
        }
        let sig = ideal.signature(&reduced, -d, d);
        classes.entry(sig).or_insert_with(|| (ideal, Vec::new())).1.push(set.clone());
        for i in (next..alphabet.len()).rev() {
            let mut s = set.clone();
            s.push(alphabet[i]);
            stack.push((s, i + 1));
        }
    }

    let mut points = Vec::new();
    let mut ideals = Vec::new();
    for (ideal, sets) in classes.into_values() {
        let name: Vec<Generator> =
            alphabet.iter().copied().filter(|&g| ideal.contains(&reduced, &reduced.generator(g))).collect();
        let cert = certify_ideal(&reduced, &ideal, ideal_name(&name), bounds);
        if !cert.passed() {
            for s in sets {
                let (x, y) = cert.counterexample.clone().expect("proper ideals fail only by a counterexample");
                rejected.push(RejectedCandidate {
                    generators: lift(&s),
                    reason: format!("not prime: {x:?} * {y:?} lies in the ideal"),
                });
            }
            continue;
        }
        for s in sets.into_iter().filter(|s| *s != name) {
            rejected.push(RejectedCandidate {
                generators: lift(&s),
                reason: format!("same ideal as {}", ideal_name(&lift(&name))),
            });
        }
        let generators = lift(&name);
        let full_ideal = HomogeneousIdeal::from_names(&full, &generators);
        let certificate = certify_ideal(&full, &full_ideal, ideal_name(&generators), bounds);
        let characteristic = name
            .iter()
            .find_map(|g| match g {
                Generator::Integer(p) => Some(*p),
                _ => None,
            })
            .unwrap_or(0);
        let expected = name == [Generator::Eta]
            || name == [Generator::Integer(2)]
            || (name.len() == 2 && name[0] == Generator::Eta && characteristic > 2);
        let discrepancy = (!expected).then(|| {
            format!(
                "{} is prime but outside the families ([ω],η), ([ω],2), ([ω],η,p) with p odd",
                ideal_name(&generators)
            )
        });
        points.push(HomogeneousPrime {
            name: ideal_name(&generators),
            generators,
            characteristic,
            reduced_certificate: cert,
            certificate,
            discrepancy,
        });
        ideals.push(full_ideal);
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].generators.cmp(&points[b].generators));
    let points: Vec<HomogeneousPrime> = order.iter().map(|&i| points[i].clone()).collect();
    let ideals: Vec<HomogeneousIdeal> = order.iter().map(|&i| ideals[i].clone()).collect();

    let mut specializations = Vec::new();
    for i in 0..ideals.len() {
        for j in 0..ideals.len() {
            if i != j && ideals[i].is_subset_on(&ideals[j], &full, -d, d) {
                specializations.push((i, j));
            }
        }
    }
    rejected.sort_by(|a, b| a.generators.cmp(&b.generators));
    Ok(SpecHSpace {
        q: field.q(),
        prime_bound,
        bounds,
        points,
        specializations,
        rejected,
        reduction,
        ring: Some(full),
        ideals,
    })
}

fn lift(set: &[Generator]) -> Vec<Generator> {
    let mut v = vec![Generator::Omega];
    v.extend_from_slice(set);
    v
}

impl SpecHSpace {
    fn ring(&self) -> &GradedRingPresentation {
        self.ring.as_ref().expect("space built by enumeration")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let normalized: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        let normalized = normalized.replace("[w]", "[ω]").replace("eta", "η");
        self.points.iter().position(|p| p.name == normalized)
    }

    pub fn names(&self) -> Vec<String> {
        self.points.iter().map(|p| p.name.clone()).collect()
    }

    pub fn all_points(&self) -> BTreeSet<usize> {
        (0..self.points.len()).collect()
    }

    pub fn contains(&self, point: usize, x: &HomElem) -> bool {
        self.ideals[point].contains(self.ring(), x)
    }

    /// `D(s) = {P : s ∉ P}`.
    pub fn d_open(&self, s: &HomElem) -> BTreeSet<usize> {
        (0..self.points.len()).filter(|&i| !self.contains(i, s)).collect()
    }

    /// `V(I) = {P : I ⊆ P}` for the ideal generated by `gens`.
    pub fn v_closed(&self, gens: &[HomElem]) -> BTreeSet<usize> {
        (0..self.points.len()).filter(|&i| gens.iter().all(|g| self.contains(i, g))).collect()
    }

    pub fn element(&self, g: Generator) -> HomElem {
        self.ring().generator(g)
    }

    pub fn mul(&self, x: &HomElem, y: &HomElem) -> Result<HomElem, SpecError> {
        self.ring().mul(x, y)
    }

    /// Points are specializations of `p` iff they contain it.
    pub fn closure(&self, points: &[usize]) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> = points.iter().copied().collect();
        for &(i, j) in &self.specializations {
            if points.contains(&i) {
                out.insert(j);
            }
        }
        out
    }

    /// Points minimal for inclusion.
    pub fn generic_points(&self) -> Vec<usize> {
        (0..self.points.len()).filter(|&j| !self.specializations.iter().any(|&(i, k)| k == j && i != j)).collect()
    }

    pub fn discrepancies(&self) -> Vec<&HomogeneousPrime> {
        self.points.iter().filter(|p| p.discrepancy.is_some()).collect()
    }
}

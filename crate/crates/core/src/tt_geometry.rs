//! Combinatorial tensor-triangular geometry.
//!
//! - The rational Tate model: objects are finite sums of `Q(i)[m]`, morphisms
//!   are slotwise rational matrices. Thick tensor ideals inside a finite
//!   window of slots are computed exhaustively, together with the comparison
//!   maps to the homogeneous spectrum of `⊕ₙ hom(1, u^n)`, `u = Q(1)[2]`.
//! - Finite spectral spaces given by a specialization order, with Thomason
//!   subsets, quotients and localizations as order-theoretic restrictions, and
//!   the chromatic and cyclic-equivariant truncations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{rational_rank, Rational};
use crate::milnor_witt::{KmwElement, KmwError, MilnorWitt};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TtError {
    #[error("matrix shape does not match the slot dimensions at {slot:?}")]
    ShapeMismatch { slot: (i64, i64) },
    #[error("object slot Q({}){} lies outside the universe", .slot.0, shift_suffix(.slot.1))]
    UniverseTooSmall { slot: (i64, i64) },
    #[error("subset {0:?} is not closed under specialization")]
    NotSpecializationClosed(Vec<String>),
    #[error("bound must be at least {min}, got {got}")]
    InvalidBound { min: u64, got: u64 },
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("specialization relation has a cycle through {0:?}")]
    NotAPartialOrder(String),
    #[error(transparent)]
    Kmw(#[from] KmwError),
}

fn shift_suffix(m: i64) -> String {
    if m == 0 {
        String::new()
    } else {
        format!("[{m}]")
    }
}

/// A slot `Q(twist)[shift]`.
pub type Slot = (i64, i64);

/// Finite sum `⊕ Q(i)[m]^{d_{i,m}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TateObject {
    slots: BTreeMap<Slot, u32>,
}

impl TateObject {
    pub fn zero() -> Self {
        TateObject::default()
    }

    pub fn unit() -> Self {
        TateObject::simple(0, 0)
    }

    pub fn simple(twist: i64, shift: i64) -> Self {
        TateObject::from_slots([((twist, shift), 1)])
    }

    pub fn from_slots(slots: impl IntoIterator<Item = (Slot, u32)>) -> Self {
        let mut out = TateObject::zero();
        for (s, d) in slots {
            if d > 0 {
                *out.slots.entry(s).or_insert(0) += d;
            }
        }
        out
    }

    pub fn slots(&self) -> &BTreeMap<Slot, u32> {
        &self.slots
    }

    pub fn dim(&self, slot: Slot) -> u32 {
        self.slots.get(&slot).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> u32 {
        self.slots.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn direct_sum(&self, other: &TateObject) -> TateObject {
        TateObject::from_slots(self.slots.iter().chain(&other.slots).map(|(&s, &d)| (s, d)))
    }

    pub fn shift(&self, k: i64) -> TateObject {
        TateObject::from_slots(self.slots.iter().map(|(&(i, m), &d)| ((i, m + k), d)))
    }

    pub fn twist(&self, k: i64) -> TateObject {
        TateObject::from_slots(self.slots.iter().map(|(&(i, m), &d)| ((i + k, m), d)))
    }

    pub fn tensor(&self, other: &TateObject) -> TateObject {
        TateObject::from_slots(
            self.slots
                .iter()
                .flat_map(|(&(i, m), &d)| other.slots.iter().map(move |(&(j, n), &e)| ((i + j, m + n), d * e))),
        )
    }

    pub fn dual(&self) -> TateObject {
        TateObject::from_slots(self.slots.iter().map(|(&(i, m), &d)| ((-i, -m), d)))
    }

    /// Basis vectors `(slot, index)` in slot order.
    fn basis(&self) -> Vec<(Slot, u32)> {
        self.slots.iter().flat_map(|(&s, &d)| (0..d).map(move |k| (s, k))).collect()
    }
}

impl fmt::Display for TateObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slots.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|(&(i, m), &d)| {
                let base = format!("Q({i}){}", shift_suffix(m));
                if d == 1 {
                    base
                } else {
                    format!("{base}^{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for TateObject {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn tensor(a: &TateObject, b: &TateObject) -> TateObject {
    a.tensor(b)
}

pub fn dual(a: &TateObject) -> TateObject {
    a.dual()
}

type Matrix = Vec<Vec<Rational>>;

fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rational::from_integer(0); cols]; rows]
}

/// Slotwise rational matrices; a missing block is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateMorphism {
    source: TateObject,
    target: TateObject,
    blocks: BTreeMap<Slot, Matrix>,
}

impl TateMorphism {
    pub fn new(source: &TateObject, target: &TateObject, blocks: BTreeMap<Slot, Matrix>) -> Result<Self, TtError> {
        for (&slot, m) in &blocks {
            let (r, c) = (target.dim(slot) as usize, source.dim(slot) as usize);
            if m.len() != r || m.iter().any(|row| row.len() != c) {
                return Err(TtError::ShapeMismatch { slot });
            }
        }
        Ok(TateMorphism { source: source.clone(), target: target.clone(), blocks })
    }

    pub fn zero(source: &TateObject, target: &TateObject) -> Self {
        TateMorphism { source: source.clone(), target: target.clone(), blocks: BTreeMap::new() }
    }

    pub fn scalar(a: &TateObject, lambda: Rational) -> Self {
        let blocks = a
            .slots
            .iter()
            .map(|(&s, &d)| {
                let d = d as usize;
                let mut m = zero_matrix(d, d);
                for (k, row) in m.iter_mut().enumerate() {
                    row[k] = lambda;
                }
                (s, m)
            })
            .collect();
        TateMorphism { source: a.clone(), target: a.clone(), blocks }
    }

    pub fn identity(a: &TateObject) -> Self {
        TateMorphism::scalar(a, Rational::from_integer(1))
    }

    pub fn source(&self) -> &TateObject {
        &self.source
    }

    pub fn target(&self) -> &TateObject {
        &self.target
    }

    pub fn rank(&self, slot: Slot) -> usize {
        self.blocks.get(&slot).map_or(0, |m| rational_rank(m))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.keys().all(|&s| self.rank(s) == 0)
    }

    /// Full rank in every slot of equal source and target.
    pub fn is_iso(&self) -> bool {
        self.source == self.target && self.source.slots.iter().all(|(&s, &d)| self.rank(s) == d as usize)
    }
}

/// `Cone(f) = ker(f)[1] ⊕ coker(f)`.
pub fn cone(f: &TateMorphism) -> TateObject {
    let slots: BTreeSet<Slot> = f.source.slots.keys().chain(f.target.slots.keys()).copied().collect();
    let mut out = Vec::new();
    for (i, m) in slots {
        let r = f.rank((i, m)) as u32;
        out.push(((i, m + 1), f.source.dim((i, m)) - r));
        out.push(((i, m), f.target.dim((i, m)) - r));
    }
    TateObject::from_slots(out)
}

/// Builds `coev: 1 → a ⊗ Da` and `ev: Da ⊗ a → 1` on explicit bases and checks
/// that `a → a ⊗ Da ⊗ a → a` is the identity matrix and preserves slots.
pub fn duality_unit_check(a: &TateObject) -> bool {
    let basis = a.basis();
    let n = basis.len();
    // index of e_s ⊗ e*_t ⊗ e_u in a ⊗ Da ⊗ a
    let idx = |s: usize, t: usize, u: usize| (s * n + t) * n + u;
    let mut first = zero_matrix(n * n * n, n);
    for u in 0..n {
        for s in 0..n {
            first[idx(s, s, u)][u] = Rational::from_integer(1);
        }
    }
    let mut second = zero_matrix(n, n * n * n);
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                if t == u {
                    second[s][idx(s, t, u)] = Rational::from_integer(1);
                }
            }
        }
    }
    let slot_of = |s: usize, t: usize, u: usize| {
        let ((i1, m1), _) = basis[s];
        let ((i2, m2), _) = basis[t];
        let ((i3, m3), _) = basis[u];
        (i1 - i2 + i3, m1 - m2 + m3)
    };
    let zero = Rational::from_integer(0);
    let first_ok = (0..n * n * n).all(|k| {
        let (s, t, u) = (k / (n * n), (k / n) % n, k % n);
        (0..n).all(|c| first[k][c] == zero || slot_of(s, t, u) == basis[c].0)
    });
    let second_ok = (0..n * n * n).all(|k| {
        let (s, t, u) = (k / (n * n), (k / n) % n, k % n);
        (0..n).all(|r| second[r][k] == zero || slot_of(s, t, u) == basis[r].0)
    });
    let preserves_slots = first_ok && second_ok;
    let composite: Matrix =
        (0..n).map(|r| (0..n).map(|c| (0..n * n * n).map(|k| second[r][k] * first[k][c]).sum()).collect()).collect();
    let identity = (0..n).all(|r| (0..n).all(|c| composite[r][c] == Rational::from_integer((r == c) as i64)));
    preserves_slots && identity
}

/// Finite window of slots; `degenerate` universes contain only `0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Universe {
    pub twist_radius: i64,
    pub shift_radius: i64,
    pub degenerate: bool,
}

impl Universe {
    pub fn new(twist_radius: i64, shift_radius: i64) -> Self {
        Universe { twist_radius, shift_radius, degenerate: false }
    }

    pub fn degenerate() -> Self {
        Universe { twist_radius: 0, shift_radius: 0, degenerate: true }
    }

    pub fn contains_slot(&self, (i, m): Slot) -> bool {
        !self.degenerate && i.abs() <= self.twist_radius && m.abs() <= self.shift_radius
    }

    pub fn contains(&self, a: &TateObject) -> bool {
        a.slots.keys().all(|&s| self.contains_slot(s))
    }

    pub fn slots(&self) -> Vec<Slot> {
        if self.degenerate {
            return vec![];
        }
        let (t, s) = (self.twist_radius, self.shift_radius);
        (-t..=t).flat_map(|i| (-s..=s).map(move |m| (i, m))).collect()
    }
}

impl Default for Universe {
    fn default() -> Self {
        Universe::new(4, 2)
    }
}

/// Thick tensor ideal of the universe; by semisimplicity it is the set of
/// objects supported on `slots`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThickTensorIdeal {
    pub slots: BTreeSet<Slot>,
    pub label: String,
}

impl ThickTensorIdeal {
    fn from_slots(slots: BTreeSet<Slot>, universe: &Universe) -> Self {
        let label = if slots.is_empty() {
            "0".to_string()
        } else if slots.len() == universe.slots().len() {
            "whole universe".to_string()
        } else {
            let parts: Vec<String> = slots.iter().map(|&(i, m)| format!("Q({i}){}", shift_suffix(m))).collect();
            format!("<{}>", parts.join(", "))
        };
        ThickTensorIdeal { slots, label }
    }

    pub fn contains(&self, a: &TateObject) -> bool {
        a.slots.keys().all(|s| self.slots.contains(s))
    }

    pub fn is_proper(&self) -> bool {
        !self.slots.contains(&(0, 0))
    }
}

/// Least thick tensor ideal of the universe containing the generators.
pub fn ideal_closure(generators: &[TateObject], universe: &Universe) -> Result<ThickTensorIdeal, TtError> {
    let mut slots = BTreeSet::new();
    for g in generators {
        for &s in g.slots.keys() {
            if !universe.contains_slot(s) {
                return Err(TtError::UniverseTooSmall { slot: s });
            }
            // summands
            slots.insert(s);
        }
    }
    Ok(ThickTensorIdeal::from_slots(close_slots(slots, universe), universe))
}

/// Closes a slot set under shifts and tensoring with universe slots; cones and
/// sums add no new slots in a semisimple model.
fn close_slots(mut slots: BTreeSet<Slot>, universe: &Universe) -> BTreeSet<Slot> {
    let all = universe.slots();
    loop {
        let mut next = slots.clone();
        for &(i, m) in &slots {
            for k in [-1, 1] {
                if universe.contains_slot((i, m + k)) {
                    next.insert((i, m + k));
                }
            }
            for &(j, n) in &all {
                if universe.contains_slot((i + j, m + n)) {
                    next.insert((i + j, m + n));
                }
            }
        }
        if next == slots {
            return slots;
        }
        slots = next;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeEnumeration {
    pub universe: Universe,
    pub ideals: Vec<ThickTensorIdeal>,
    pub primes: Vec<ThickTensorIdeal>,
    pub diagnostic: Option<String>,
}

/// Every ideal is a join of principal closures; all joins are generated and
/// primality is tested on indecomposable pairs `Q(i)[m], Q(j)[n]`.
pub fn enumerate_primes(universe: &Universe) -> PrimeEnumeration {
    let slots = universe.slots();
    if !universe.contains_slot((0, 0)) {
        return PrimeEnumeration {
            universe: universe.clone(),
            ideals: vec![ThickTensorIdeal::from_slots(BTreeSet::new(), universe)],
            primes: vec![],
            diagnostic: Some(
                "the unit object is not in the universe, so no ideal is proper in a meaningful sense".into(),
            ),
        };
    }
    let mut ideals: BTreeSet<BTreeSet<Slot>> = BTreeSet::new();
    ideals.insert(BTreeSet::new());
    for &s in &slots {
        ideals.insert(close_slots([s].into(), universe));
    }
    loop {
        let current: Vec<BTreeSet<Slot>> = ideals.iter().cloned().collect();
        let mut grew = false;
        for a in &current {
            for b in &current {
                let joined = close_slots(a.union(b).copied().collect(), universe);
                grew |= ideals.insert(joined);
            }
        }
        if !grew {
            break;
        }
    }
    let ideals: Vec<ThickTensorIdeal> = ideals.into_iter().map(|s| ThickTensorIdeal::from_slots(s, universe)).collect();
    let primes = ideals
        .iter()
        .filter(|p| p.is_proper())
        .filter(|p| {
            slots.iter().all(|&(i, m)| {
                slots.iter().all(|&(j, n)| {
                    let prod = (i + j, m + n);
                    !universe.contains_slot(prod)
                        || !p.slots.contains(&prod)
                        || p.slots.contains(&(i, m))
                        || p.slots.contains(&(j, n))
                })
            })
        })
        .cloned()
        .collect();
    PrimeEnumeration { universe: universe.clone(), ideals, primes, diagnostic: None }
}

/// `supp(a) = {P : a ∉ P}`.
pub fn support(a: &TateObject, primes: &[ThickTensorIdeal]) -> BTreeSet<usize> {
    (0..primes.len()).filter(|&i| !primes[i].contains(a)).collect()
}

/// `U(a) = {P : a ∈ P}`.
pub fn u_open(a: &TateObject, primes: &[ThickTensorIdeal]) -> BTreeSet<usize> {
    (0..primes.len()).filter(|&i| primes[i].contains(a)).collect()
}

/// Which closure rules are active in [`ObjectClosureEngine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureRules {
    pub shifts: bool,
    pub sums: bool,
    pub cones: bool,
    pub summands: bool,
    pub tensor: bool,
}

impl ClosureRules {
    pub fn all() -> Self {
        ClosureRules { shifts: true, sums: true, cones: true, summands: true, tensor: true }
    }
}

/// Closure over the objects of multiplicity at most one in a tiny window,
/// with each rule switchable. Objects are bitmasks over the window's slots.
#[derive(Clone, Debug)]
pub struct ObjectClosureEngine {
    universe: Universe,
    slots: Vec<Slot>,
    rules: ClosureRules,
}

impl ObjectClosureEngine {
    pub fn new(universe: &Universe, rules: ClosureRules) -> Self {
        let slots = universe.slots();
        assert!(slots.len() <= 6, "object-level engine is meant for windows of at most 6 slots");
        ObjectClosureEngine { universe: universe.clone(), slots, rules }
    }

    pub fn object_count(&self) -> usize {
        1 << self.slots.len()
    }

    pub fn object(&self, mask: usize) -> TateObject {
        TateObject::from_slots(self.slots.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &s)| (s, 1)))
    }

    fn mask_of(&self, a: &TateObject) -> Option<usize> {
        let mut mask = 0;
        for (s, &d) in &a.slots {
            let k = self.slots.iter().position(|t| t == s)?;
            if d != 1 {
                return None;
            }
            mask |= 1 << k;
        }
        Some(mask)
    }

    fn step(&self, family: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = family.clone();
        let r = self.rules;
        for &a in family {
            let oa = self.object(a);
            if r.shifts {
                for k in [-1, 1] {
                    out.extend(self.mask_of(&oa.shift(k)));
                }
            }
            if r.summands {
                // every sub-mask
                let mut sub = a;
                loop {
                    out.insert(sub);
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & a;
                }
            }
            if r.tensor {
                for u in 0..self.object_count() {
                    out.extend(self.mask_of(&oa.tensor(&self.object(u))));
                }
            }
            for &b in family {
                if r.sums && a & b == 0 {
                    out.insert(a | b);
                }
                if r.cones {
                    // morphisms a → b: an iso on a set S of common slots, zero elsewhere
                    let common = a & b;
                    let mut s = common;
                    loop {
                        let ker = self.object(a & !s);
                        let coker = self.object(b & !s);
                        out.extend(self.mask_of(&ker.shift(1).direct_sum(&coker)));
                        if s == 0 {
                            break;
                        }
                        s = (s - 1) & common;
                    }
                }
            }
        }
        out
    }

    pub fn closure(&self, generators: &[TateObject]) -> Result<BTreeSet<usize>, TtError> {
        let mut family: BTreeSet<usize> = [0].into();
        for g in generators {
            match self.mask_of(g) {
                Some(m) => {
                    family.insert(m);
                }
                None => {
                    let slot = *g.slots.keys().find(|s| !self.universe.contains_slot(**s)).unwrap_or(&(0, 0));
                    return Err(TtError::UniverseTooSmall { slot });
                }
            }
        }
        loop {
            let next = self.step(&family);
            if next == family {
                return Ok(family);
            }
            family = next;
        }
    }

    /// All families containing `0` that are closed under the active rules.
    pub fn closed_families(&self) -> Vec<BTreeSet<usize>> {
        let n = self.object_count();
        let mut out = Vec::new();
        for bits in 0u64..(1u64 << (n - 1)) {
            let family: BTreeSet<usize> =
                std::iter::once(0).chain((1..n).filter(|k| bits >> (k - 1) & 1 == 1)).collect();
            if self.step(&family) == family {
                out.push(family);
            }
        }
        out
    }
}

/// The graded ring `⊕ₙ hom(1, u^n)` with `u = Q(1)[2]`: `Q` in degree 0.
pub fn graded_hom_dimension(n: i64) -> usize {
    (n == 0) as usize
}

pub fn u_power(n: i64) -> TateObject {
    TateObject::simple(n, 2 * n)
}

/// Homogeneous element `f: 1 → u^n`; only degree 0 carries nonzero scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHom {
    pub degree: i64,
    pub scalar: Rational,
}

impl GradedHom {
    pub fn morphism(&self) -> TateMorphism {
        let target = u_power(self.degree);
        if self.degree == 0 {
            TateMorphism::scalar(&TateObject::unit(), self.scalar)
        } else {
            TateMorphism::zero(&TateObject::unit(), &target)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.degree != 0 || self.scalar == Rational::from_integer(0)
    }
}

impl fmt::Display for GradedHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0 (deg {})", self.degree)
        } else {
            write!(f, "{} (deg {})", self.scalar, self.degree)
        }
    }
}

/// Homogeneous ideal of `⊕ₙ hom(1, u^n)`, recorded by the dimension of each piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TateGradedIdeal {
    /// `(n, dim I_n)` for the scanned degrees.
    pub pieces: Vec<(i64, usize)>,
}

impl TateGradedIdeal {
    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|&(_, d)| d == 0)
    }

    pub fn contains(&self, s: &GradedHom) -> bool {
        s.is_zero() || self.pieces.iter().any(|&(n, d)| n == s.degree && d == graded_hom_dimension(n))
    }
}

fn scanned_degrees(universe: &Universe) -> Vec<i64> {
    // keep u^n and 1[1] inside the window so cones can be tested for membership
    let r = universe.twist_radius.min(universe.shift_radius / 2);
    if universe.shift_radius < 1 {
        return vec![0];
    }
    (-r..=r).collect()
}

fn sample_scalars() -> Vec<Rational> {
    [(0, 1), (1, 1), (2, 1), (-1, 1), (1, 2), (-3, 4)].iter().map(|&(a, b)| Rational::new(a, b)).collect()
}

fn scanned_homs(universe: &Universe) -> Vec<GradedHom> {
    scanned_degrees(universe)
        .into_iter()
        .flat_map(|n| {
            let scalars = if n == 0 { sample_scalars() } else { vec![Rational::from_integer(0)] };
            scalars.into_iter().map(move |scalar| GradedHom { degree: n, scalar })
        })
        .collect()
}

/// `ρ•(P)`: generated by the `f: 1 → u^n` with `Cone(f) ∉ P`.
pub fn rho_bullet(prime: &ThickTensorIdeal, universe: &Universe) -> TateGradedIdeal {
    let mut pieces = Vec::new();
    for n in scanned_degrees(universe) {
        let mut dim = 0;
        for f in scanned_homs(universe).into_iter().filter(|f| f.degree == n) {
            if !prime.contains(&cone(&f.morphism())) && !f.is_zero() {
                dim = graded_hom_dimension(n);
            }
        }
        pieces.push((n, dim));
    }
    TateGradedIdeal { pieces }
}

/// `ρ(P)`: the ideal of `End(1) = Q` generated by the `f` with `Cone(f) ∉ P`;
/// returns its dimension.
pub fn rho(prime: &ThickTensorIdeal) -> usize {
    sample_scalars()
        .into_iter()
        .filter(|&l| l != Rational::from_integer(0))
        .any(|l| !prime.contains(&cone(&TateMorphism::scalar(&TateObject::unit(), l)))) as usize
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonCheck {
    pub element: String,
    pub preimage_of_d: Vec<usize>,
    pub u_of_cone: Vec<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub universe: Universe,
    pub source_points: Vec<String>,
    pub target_points: Vec<String>,
    pub images: Vec<TateGradedIdeal>,
    pub checks: Vec<ComparisonCheck>,
    pub passed: bool,
}

/// Checks `ρ•⁻¹(D(s)) = U(Cone(s))` for every scanned homogeneous `s`.
pub fn verify_comparison(universe: &Universe) -> ComparisonReport {
    let primes = enumerate_primes(universe).primes;
    // Spec^h of Q concentrated in degree 0: the zero ideal only
    let target = TateGradedIdeal { pieces: scanned_degrees(universe).into_iter().map(|n| (n, 0)).collect() };
    let images: Vec<TateGradedIdeal> = primes.iter().map(|p| rho_bullet(p, universe)).collect();
    let mut checks = Vec::new();
    for s in scanned_homs(universe) {
        let in_d = !target.contains(&s);
        let preimage: Vec<usize> = (0..primes.len()).filter(|&i| images[i] == target && in_d).collect();
        let c = cone(&s.morphism());
        let u: Vec<usize> = u_open(&c, &primes).into_iter().collect();
        checks.push(ComparisonCheck {
            element: s.to_string(),
            agrees: preimage == u,
            preimage_of_d: preimage,
            u_of_cone: u,
        });
    }
    let passed = !checks.is_empty() && checks.iter().all(|c| c.agrees) && images.iter().all(|i| *i == target);
    ComparisonReport {
        universe: universe.clone(),
        source_points: primes.iter().map(|p| p.label.clone()).collect(),
        target_points: vec!["(0)".into()],
        images,
        checks,
        passed,
    }
}

/// Input to [`nilpotence_dichotomy`].
pub enum NilpotenceInput<'a> {
    Kmw { ring: &'a MilnorWitt, element: &'a KmwElement, max_power: u32 },
    TateScalar(Rational),
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotenceVerdict {
    pub nilpotent: bool,
    pub first_vanishing_power: Option<u32>,
    pub checked_up_to: Option<u32>,
    /// Some prime contains `Cone(f)` exactly when `f` is not ⊗-nilpotent.
    pub cone_prime_exists: bool,
}

/// `U(Cone f) ≠ ∅ ⇔ f^{⊗n} ≠ 0` for all `n`.
pub fn nilpotence_dichotomy(input: NilpotenceInput<'_>) -> Result<NilpotenceVerdict, TtError> {
    match input {
        NilpotenceInput::TateScalar(l) => {
            let nilpotent = l == Rational::from_integer(0);
            Ok(NilpotenceVerdict {
                nilpotent,
                first_vanishing_power: nilpotent.then_some(1),
                checked_up_to: None,
                cone_prime_exists: !nilpotent,
            })
        }
        NilpotenceInput::Kmw { ring, element, max_power } => {
            let mut acc = element.clone();
            let mut first = None;
            let mut checked = 0;
            for k in 1..=max_power {
                checked = k;
                if acc.is_zero() {
                    first = Some(k);
                    break;
                }
                if k == max_power {
                    break;
                }
                match ring.mul(&acc, element) {
                    Ok(next) => acc = next,
                    Err(KmwError::DegreeOutOfRange { .. }) => break,
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(NilpotenceVerdict {
                nilpotent: first.is_some(),
                first_vanishing_power: first,
                checked_up_to: Some(checked),
                cone_prime_exists: first.is_none(),
            })
        }
    }
}

/// Finite poset read as a spectral space: the closure of a point is the set of
/// its specializations.
#[derive(Clone, Debug, Serialize)]
pub struct FiniteSpectralSpace {
    pub labels: Vec<String>,
    /// `leq[i][j]`: `j` lies in the closure of `i`.
    leq: Vec<Vec<bool>>,
    /// Optional list, per point, of labelled objects the point contains.
    pub incidence: Option<Vec<Vec<String>>>,
}

impl FiniteSpectralSpace {
    /// Builds the space from specialization pairs `(i, j)`: `j ∈ closure(i)`.
    pub fn new(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self, TtError> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in relations {
            leq[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(TtError::NotAPartialOrder(labels[i].clone()));
                }
            }
        }
        Ok(FiniteSpectralSpace { labels, leq, incidence: None })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, TtError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| TtError::UnknownPoint(label.to_string()))
    }

    pub fn specializes(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn closure(&self, points: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.len()).filter(|&j| points.iter().any(|&i| self.leq[i][j])).collect()
    }

    pub fn closure_of_labels(&self, labels: &[&str]) -> Result<BTreeSet<usize>, TtError> {
        let pts = labels.iter().map(|l| self.index_of(l)).collect::<Result<BTreeSet<_>, _>>()?;
        Ok(self.closure(&pts))
    }

    pub fn is_specialization_closed(&self, set: &BTreeSet<usize>) -> bool {
        self.closure(set) == *set
    }

    /// Covering pairs of the order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] && !(0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn labels_of(&self, set: &BTreeSet<usize>) -> Vec<String> {
        set.iter().map(|&i| self.labels[i].clone()).collect()
    }

    /// Thomason subsets of a finite spectral space: the up-sets of the order.
    pub fn enumerate_thomason(&self) -> Vec<BTreeSet<usize>> {
        let n = self.len();
        let mut out = Vec::new();
        // 0 = undecided, 1 = in, 2 = out
        fn go(space: &FiniteSpectralSpace, state: &mut Vec<u8>, out: &mut Vec<BTreeSet<usize>>) {
            let n = state.len();
            let Some(x) = (0..n).find(|&i| state[i] == 0) else {
                out.push((0..n).filter(|&i| state[i] == 1).collect());
                return;
            };
            let saved = state.clone();
            // include x and its specializations
            if (0..n).all(|j| !space.leq[x][j] || state[j] != 2) {
                for j in 0..n {
                    if space.leq[x][j] {
                        state[j] = 1;
                    }
                }
                go(space, state, out);
                *state = saved.clone();
            }
            // exclude x and its generizations
            if (0..n).all(|j| !space.leq[j][x] || state[j] != 1) {
                for j in 0..n {
                    if space.leq[j][x] {
                        state[j] = 2;
                    }
                }
                go(space, state, out);
                *state = saved;
            }
        }
        go(self, &mut vec![0; n], &mut out);
        out.sort();
        out
    }

    /// Subspace with the induced order.
    pub fn subspace(&self, points: &BTreeSet<usize>) -> FiniteSpectralSpace {
        let idx: Vec<usize> = points.iter().copied().collect();
        let leq = idx.iter().map(|&i| idx.iter().map(|&j| self.leq[i][j]).collect()).collect();
        let incidence = self.incidence.as_ref().map(|inc| idx.iter().map(|&i| inc[i].clone()).collect());
        FiniteSpectralSpace { labels: idx.iter().map(|&i| self.labels[i].clone()).collect(), leq, incidence }
    }

    /// Points outside the specialization-closed subset `y`.
    pub fn lattice_quotient(&self, y: &BTreeSet<usize>) -> Result<FiniteSpectralSpace, TtError> {
        if !self.is_specialization_closed(y) {
            return Err(TtError::NotSpecializationClosed(self.labels_of(y)));
        }
        let rest: BTreeSet<usize> = (0..self.len()).filter(|i| !y.contains(i)).collect();
        Ok(self.subspace(&rest))
    }

    /// The closed subspace `z`.
    pub fn lattice_localize(&self, z: &BTreeSet<usize>) -> Result<FiniteSpectralSpace, TtError> {
        if !self.is_specialization_closed(z) {
            return Err(TtError::NotSpecializationClosed(self.labels_of(z)));
        }
        Ok(self.subspace(z))
    }

    /// Adds specialization relations given by labels and recloses the order.
    pub fn with_relations(&self, extra: &[(&str, &str)]) -> Result<FiniteSpectralSpace, TtError> {
        let mut rel: Vec<(usize, usize)> = self.hasse_edges();
        for (a, b) in extra {
            rel.push((self.index_of(a)?, self.index_of(b)?));
        }
        let mut out = FiniteSpectralSpace::new(self.labels.clone(), &rel)?;
        out.incidence = self.incidence.clone();
        Ok(out)
    }

    /// Graphviz description of the Hasse diagram, generic points at the bottom.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{l}\"];\n"));
        }
        for (i, j) in self.hasse_edges() {
            s.push_str(&format!("  n{i} -> n{j};\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn chromatic_label(p: u64, n: Option<u64>) -> String {
    match n {
        Some(n) => format!("P({p},{n})"),
        None => format!("P({p},inf)"),
    }
}

fn chromatic_parts(prime_bound: u64, height_bound: u64) -> (Vec<String>, Vec<(usize, usize)>) {
    let mut labels = vec![chromatic_label(0, Some(1))];
    let mut rel = Vec::new();
    for p in (2..=prime_bound).filter(|&p| crate::finite_field::is_prime(p)) {
        let mut prev = 0;
        for n in 1..=height_bound {
            labels.push(chromatic_label(p, Some(n)));
            rel.push((prev, labels.len() - 1));
            prev = labels.len() - 1;
        }
        labels.push(chromatic_label(p, None));
        rel.push((prev, labels.len() - 1));
    }
    (labels, rel)
}

/// Truncation of the spectrum of finite spectra: `P(0,1)`, `P(p,n)` for primes
/// `p ≤ prime_bound` and `1 ≤ n ≤ height_bound`, and `P(p,inf)`.
pub fn spc_shtop(prime_bound: u64, height_bound: u64) -> Result<FiniteSpectralSpace, TtError> {
    if prime_bound < 1 {
        return Err(TtError::InvalidBound { min: 1, got: prime_bound });
    }
    if height_bound < 1 {
        return Err(TtError::InvalidBound { min: 1, got: height_bound });
    }
    let (labels, rel) = chromatic_parts(prime_bound, height_bound);
    FiniteSpectralSpace::new(labels, &rel)
}

/// `C_n`-equivariant truncation: one chromatic copy per subgroup `C_m`, `m | n`.
/// Conjugacy identifications are trivial for an abelian group; relations
/// between copies can be added with [`FiniteSpectralSpace::with_relations`].
pub fn spc_equivariant(n: u64, prime_bound: u64, height_bound: u64) -> Result<FiniteSpectralSpace, TtError> {
    if n < 1 {
        return Err(TtError::InvalidBound { min: 1, got: n });
    }
    let base = spc_shtop(prime_bound, height_bound)?;
    let edges = base.hasse_edges();
    let mut labels = Vec::new();
    let mut rel = Vec::new();
    for m in (1..=n).filter(|m| n.is_multiple_of(*m)) {
        let offset = labels.len();
        labels.extend(base.labels.iter().map(|l| format!("C{m}:{l}")));
        rel.extend(edges.iter().map(|&(i, j)| (i + offset, j + offset)));
    }
    FiniteSpectralSpace::new(labels, &rel)
}

/// The one-point space of the rational Tate model, with the incidence of the
/// zero prime.
pub fn spc_tate(universe: &Universe) -> Result<FiniteSpectralSpace, TtError> {
    let primes = enumerate_primes(universe).primes;
    let mut space = FiniteSpectralSpace::new(primes.iter().map(|p| p.label.clone()).collect(), &[])?;
    space.incidence = Some(primes.iter().map(|_| vec!["0".to_string()]).collect());
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a)
    }

    #[test]
    fn cones() {
        let u = TateObject::unit();
        assert!(cone(&TateMorphism::identity(&u)).is_zero());
        assert_eq!(cone(&TateMorphism::zero(&u, &u)), u.shift(1).direct_sum(&u));
        let a = TateObject::from_slots([((0, 0), 2)]);
        let f = TateMorphism::new(&a, &a, [((0, 0), vec![vec![q(1), q(2)], vec![q(2), q(4)]])].into()).unwrap();
        assert_eq!(cone(&f), TateObject::from_slots([((0, 1), 1), ((0, 0), 1)]));
        assert!(TateMorphism::new(&a, &a, [((0, 0), vec![vec![q(1)]])].into()).is_err());
    }

    #[test]
    fn tensor_and_dual() {
        assert_eq!(TateObject::simple(1, 2).tensor(&TateObject::simple(-1, -2)), TateObject::unit());
        assert_eq!(TateObject::simple(2, 1).dual(), TateObject::simple(-2, -1));
        let a = TateObject::from_slots([((1, 0), 2), ((-3, 1), 1)]);
        assert!(duality_unit_check(&a));
    }

    #[test]
    fn ideals_and_primes() {
        let u = Universe::default();
        assert!(ideal_closure(&[TateObject::zero()], &u).unwrap().slots.is_empty());
        assert_eq!(ideal_closure(&[TateObject::simple(5, 0)], &Universe::new(5, 1)).unwrap().slots.len(), 33);
        let g = TateObject::unit().direct_sum(&TateObject::simple(1, 0));
        assert!(!ideal_closure(&[g], &u).unwrap().is_proper());
        assert!(matches!(ideal_closure(&[TateObject::simple(9, 0)], &u), Err(TtError::UniverseTooSmall { .. })));
        let e = enumerate_primes(&u);
        assert_eq!(e.primes.len(), 1);
        assert!(e.primes[0].slots.is_empty());
        let d = enumerate_primes(&Universe::degenerate());
        assert!(d.primes.is_empty() && d.diagnostic.is_some());
    }

    #[test]
    fn summand_rule_is_needed() {
        let u = Universe::new(1, 0);
        let with = ObjectClosureEngine::new(&u, ClosureRules::all()).closed_families();
        let without =
            ObjectClosureEngine::new(&u, ClosureRules { summands: false, ..ClosureRules::all() }).closed_families();
        assert_eq!(with.len(), 2);
        assert!(without.len() > with.len());
    }

    #[test]
    fn comparison() {
        let r = verify_comparison(&Universe::default());
        assert!(r.passed, "{r:?}");
        let p = &enumerate_primes(&Universe::default()).primes[0];
        assert!(rho_bullet(p, &Universe::default()).is_zero());
        assert_eq!(rho(p), 0);
    }

    #[test]
    fn chromatic() {
        let s = spc_shtop(3, 2).unwrap();
        assert_eq!(s.len(), 7);
        let c = s.closure_of_labels(&["P(2,1)"]).unwrap();
        assert_eq!(s.labels_of(&c), vec!["P(2,1)", "P(2,2)", "P(2,inf)"]);
        assert_eq!(s.closure_of_labels(&["P(0,1)"]).unwrap().len(), 7);
        assert_eq!(spc_equivariant(6, 3, 2).unwrap().len(), 28);
        assert_eq!(spc_equivariant(2, 2, 1).unwrap().len(), 6);
        let chain = spc_shtop(2, 1).unwrap();
        assert_eq!(chain.enumerate_thomason().len(), 4);
        assert_eq!(chain.lattice_quotient(&BTreeSet::new()).unwrap().labels, chain.labels);
        assert!(chain.lattice_localize(&[0].into()).is_err());
    }

    #[test]
    fn dichotomy() {
        let f = crate::finite_field::field_of_order(3).unwrap();
        let r = MilnorWitt::new(&f);
        let eta = r.eta().unwrap();
        let v = nilpotence_dichotomy(NilpotenceInput::Kmw { ring: &r, element: &eta, max_power: 64 }).unwrap();
        assert!(!v.nilpotent && v.cone_prime_exists);
        assert!(nilpotence_dichotomy(NilpotenceInput::TateScalar(q(0))).unwrap().nilpotent);
        assert!(!nilpotence_dichotomy(NilpotenceInput::TateScalar(q(2))).unwrap().nilpotent);
    }
}

//! Chow motives of products of projective spaces.
//!
//! `CH^*(P^{n₁} × ⋯ × P^{n_k}) = Z[h₁,…,h_k]/(h_i^{n_i+1})`; classes are sparse
//! maps from exponent vectors to integers. Correspondences follow the
//! convention `Corr^r(X, Y) = CH^{dim X + r}(X × Y)`, composed by pulling back
//! to the triple product, intersecting and pushing forward, and
//!
//! ```text
//! hom((X, p, m), (Y, q, n)) = { α ∈ Corr^{n−m}(X, Y) : α = q ∘ α ∘ p }.
//! ```
//!
//! With this convention `L = (pt, id, −1)`, and the summand `h^a ⊗ h^{n−a}` of
//! `M(P^n)` is isomorphic to `L^{n−a}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{determinant, integer_kernel, rational_rank, IntLattice, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChowError {
    #[error("spaces do not match: {0} vs {1}")]
    SpaceMismatch(String, String),
    #[error("exponent vector {0:?} is outside the Chow ring of {1}")]
    ExponentOutOfRange(Vec<u32>, String),
    #[error("class is not homogeneous of codimension {expected}")]
    NotHomogeneous { expected: i64 },
    #[error("projector is not idempotent")]
    NotIdempotent,
    #[error("projector must be a degree-0 correspondence from {0} to itself")]
    NotAnEndomorphism(String),
    #[error("cannot parse space {0:?}; expected e.g. P2xP1 or pt")]
    BadSpace(String),
    #[error("factor positions do not describe a projection onto {0}")]
    BadProjection(String),
}

/// `P^{n₁} × ⋯ × P^{n_k}`; the empty product is the point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ProjSpaceProduct {
    dims: Vec<u32>,
}

impl ProjSpaceProduct {
    pub fn new(dims: Vec<u32>) -> Self {
        ProjSpaceProduct { dims }
    }

    pub fn point() -> Self {
        ProjSpaceProduct { dims: vec![] }
    }

    pub fn projective(n: u32) -> Self {
        ProjSpaceProduct { dims: vec![n] }
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self) -> i64 {
        self.dims.iter().map(|&n| n as i64).sum()
    }

    pub fn product(&self, other: &ProjSpaceProduct) -> ProjSpaceProduct {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        ProjSpaceProduct { dims }
    }

    pub fn top(&self) -> Vec<u32> {
        self.dims.clone()
    }

    /// All exponent vectors, ordered by codimension and then lexicographically.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &n in &self.dims {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=n).map(move |e| {
                        let mut p = prefix.clone();
                        p.push(e);
                        p
                    })
                })
                .collect();
        }
        out.sort_by_key(|e| (codim_of(e), e.clone()));
        out
    }

    /// Monomial basis of `CH^c`.
    pub fn basis(&self, c: i64) -> Vec<Vec<u32>> {
        self.monomials().into_iter().filter(|e| codim_of(e) == c).collect()
    }

    pub fn rank(&self, c: i64) -> usize {
        self.basis(c).len()
    }

    fn admits(&self, e: &[u32]) -> bool {
        e.len() == self.dims.len() && e.iter().zip(&self.dims).all(|(a, n)| a <= n)
    }
}

fn codim_of(e: &[u32]) -> i64 {
    e.iter().map(|&a| a as i64).sum()
}

impl fmt::Display for ProjSpaceProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "pt");
        }
        let parts: Vec<String> = self.dims.iter().map(|n| format!("P{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for ProjSpaceProduct {
    type Err = ChowError;

    fn from_str(s: &str) -> Result<Self, ChowError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("pt") || t.eq_ignore_ascii_case("point") {
            return Ok(ProjSpaceProduct::point());
        }
        let bad = || ChowError::BadSpace(s.to_string());
        let dims = t
            .split(['x', 'X', '*'])
            .map(|part| {
                let part = part.trim();
                let digits = part.strip_prefix('P').or_else(|| part.strip_prefix('p')).ok_or_else(bad)?;
                let n: u32 = digits.parse().map_err(|_| bad())?;
                if n > 16 {
                    return Err(bad());
                }
                Ok(n)
            })
            .collect::<Result<Vec<_>, _>>()?;
        // P0 factors are points
        Ok(ProjSpaceProduct { dims: dims.into_iter().filter(|&n| n > 0).collect() })
    }
}

impl Serialize for ProjSpaceProduct {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Element of `CH^*(X)` with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass {
    space: ProjSpaceProduct,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl ChowClass {
    pub fn zero(space: &ProjSpaceProduct) -> Self {
        ChowClass { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn one(space: &ProjSpaceProduct) -> Self {
        ChowClass::monomial(space, vec![0; space.factors()], 1).expect("zero exponents")
    }

    pub fn monomial(space: &ProjSpaceProduct, exps: Vec<u32>, coeff: i64) -> Result<Self, ChowError> {
        if !space.admits(&exps) {
            return Err(ChowError::ExponentOutOfRange(exps, space.to_string()));
        }
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exps, coeff);
        }
        Ok(ChowClass { space: space.clone(), terms })
    }

    /// Hyperplane class `h_i` of the `i`-th factor.
    pub fn hyperplane(space: &ProjSpaceProduct, i: usize) -> Result<Self, ChowError> {
        let mut e = vec![0; space.factors()];
        if i < e.len() {
            e[i] = 1;
        }
        ChowClass::monomial(space, e, 1)
    }

    /// The class of a point.
    pub fn point_class(space: &ProjSpaceProduct) -> Self {
        ChowClass::monomial(space, space.top(), 1).expect("top monomial")
    }

    pub fn from_coefficients(space: &ProjSpaceProduct, basis: &[Vec<u32>], coeffs: &[i64]) -> Self {
        let mut c = ChowClass::zero(space);
        for (e, &k) in basis.iter().zip(coeffs) {
            c.add_term(e.clone(), k);
        }
        c
    }

    fn add_term(&mut self, e: Vec<u32>, k: i64) {
        if k == 0 {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(k);
            }
        }
    }

    pub fn space(&self) -> &ProjSpaceProduct {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn coefficients(&self, basis: &[Vec<u32>]) -> Vec<i64> {
        basis.iter().map(|e| self.coefficient(e)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the zero-cycle part.
    pub fn degree(&self) -> i64 {
        self.coefficient(&self.space.top())
    }

    pub fn is_homogeneous_of(&self, c: i64) -> bool {
        self.terms.keys().all(|e| codim_of(e) == c)
    }

    fn check(&self, other: &ChowClass) -> Result<(), ChowError> {
        if self.space != other.space {
            return Err(ChowError::SpaceMismatch(self.space.to_string(), other.space.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, &k) in &other.terms {
            out.add_term(e.clone(), k);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> ChowClass {
        let mut out = ChowClass::zero(&self.space);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.add(&other.scale(-1))
    }

    /// Intersection product, truncated by `h_i^{n_i+1} = 0`.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(other)?;
        let mut out = ChowClass::zero(&self.space);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                if self.space.admits(&e) {
                    out.add_term(e, x * y);
                }
            }
        }
        Ok(out)
    }

    /// Pullback along the projection `target → self.space` that sends factor
    /// `positions[i]` of `target` onto factor `i`.
    pub fn pullback(&self, target: &ProjSpaceProduct, positions: &[usize]) -> Result<ChowClass, ChowError> {
        let ok = positions.len() == self.space.factors()
            && positions.iter().enumerate().all(|(i, &p)| target.dims.get(p) == Some(&self.space.dims[i]));
        if !ok {
            return Err(ChowError::BadProjection(self.space.to_string()));
        }
        let mut out = ChowClass::zero(target);
        for (e, &k) in &self.terms {
            let mut big = vec![0; target.factors()];
            for (i, &p) in positions.iter().enumerate() {
                big[p] = e[i];
            }
            out.add_term(big, k);
        }
        Ok(out)
    }

    /// Pushforward along the projection onto the factors in `keep` (in order):
    /// only terms carrying the top class of every forgotten factor survive.
    pub fn pushforward(&self, keep: &[usize]) -> Result<ChowClass, ChowError> {
        if keep.iter().any(|&i| i >= self.space.factors()) {
            return Err(ChowError::BadProjection(self.space.to_string()));
        }
        let image = ProjSpaceProduct { dims: keep.iter().map(|&i| self.space.dims[i]).collect() };
        let mut out = ChowClass::zero(&image);
        for (e, &k) in &self.terms {
            let forgotten_top =
                (0..self.space.factors()).filter(|i| !keep.contains(i)).all(|i| e[i] == self.space.dims[i]);
            if forgotten_top {
                out.add_term(keep.iter().map(|&i| e[i]).collect(), k);
            }
        }
        Ok(out)
    }

    /// Exterior product on `X × Y`.
    pub fn exterior(&self, other: &ChowClass) -> ChowClass {
        let space = self.space.product(&other.space);
        let mut out = ChowClass::zero(&space);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let mut e = a.clone();
                e.extend_from_slice(b);
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Reorders factors: factor `i` of the result is factor `order[i]` of `self`.
    fn permute(&self, order: &[usize]) -> ChowClass {
        let space = ProjSpaceProduct { dims: order.iter().map(|&i| self.space.dims[i]).collect() };
        let mut out = ChowClass::zero(&space);
        for (e, &k) in &self.terms {
            out.add_term(order.iter().map(|&i| e[i]).collect(), k);
        }
        out
    }
}

fn format_monomial(e: &[u32]) -> String {
    let single = e.len() == 1;
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| {
            let base = if single { "h".to_string() } else { format!("h{}", i + 1) };
            if a == 1 {
                base
            } else {
                format!("{base}^{a}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, &k)| {
                let m = format_monomial(e);
                match (k, m.as_str()) {
                    (k, "1") => k.to_string(),
                    (1, m) => m.to_string(),
                    (-1, m) => format!("-{m}"),
                    (k, m) => format!("{k}*{m}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.space)
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    exponents: &'a [u32],
    coefficient: i64,
}

impl Serialize for ChowClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermOut<'_>> =
            self.terms.iter().map(|(e, &k)| TermOut { exponents: e, coefficient: k }).collect();
        let mut st = s.serialize_struct("ChowClass", 3)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("display", &self.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

pub fn chow_mul(a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
    a.mul(b)
}

/// Element of `Corr^r(X, Y) = CH^{dim X + r}(X × Y)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Correspondence {
    source: ProjSpaceProduct,
    target: ProjSpaceProduct,
    shift: i64,
    class: ChowClass,
}

impl Correspondence {
    pub fn new(
        source: &ProjSpaceProduct,
        target: &ProjSpaceProduct,
        shift: i64,
        class: ChowClass,
    ) -> Result<Self, ChowError> {
        let space = source.product(target);
        if class.space != space {
            return Err(ChowError::SpaceMismatch(class.space.to_string(), space.to_string()));
        }
        let expected = source.dim() + shift;
        if !class.is_homogeneous_of(expected) {
            return Err(ChowError::NotHomogeneous { expected });
        }
        Ok(Correspondence { source: source.clone(), target: target.clone(), shift, class })
    }

    pub fn zero(source: &ProjSpaceProduct, target: &ProjSpaceProduct, shift: i64) -> Self {
        Correspondence {
            source: source.clone(),
            target: target.clone(),
            shift,
            class: ChowClass::zero(&source.product(target)),
        }
    }

    /// The diagonal `Σ h^a ⊗ h^{n−a}`, factor by factor.
    pub fn identity(x: &ProjSpaceProduct) -> Self {
        let space = x.product(x);
        let k = x.factors();
        let mut class = ChowClass::zero(&space);
        for a in x.monomials() {
            let mut e = a.clone();
            e.extend(a.iter().zip(&x.dims).map(|(ai, n)| n - ai));
            debug_assert_eq!(e.len(), 2 * k);
            class.add_term(e, 1);
        }
        Correspondence { source: x.clone(), target: x.clone(), shift: 0, class }
    }

    /// `x ⊗ y` with `x ∈ CH(X)`, `y ∈ CH(Y)`; the shift is read off the codimension.
    pub fn from_product(x: &ChowClass, y: &ChowClass) -> Result<Self, ChowError> {
        let class = x.exterior(y);
        let codim = class.terms.keys().next().map_or(x.space.dim(), |e| codim_of(e));
        Correspondence::new(&x.space, &y.space, codim - x.space.dim(), class)
    }

    pub fn source(&self) -> &ProjSpaceProduct {
        &self.source
    }

    pub fn target(&self) -> &ProjSpaceProduct {
        &self.target
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn class(&self) -> &ChowClass {
        &self.class
    }

    pub fn is_zero(&self) -> bool {
        self.class.is_zero()
    }

    fn same_shape(&self, other: &Correspondence) -> Result<(), ChowError> {
        if self.source != other.source || self.target != other.target || self.shift != other.shift {
            return Err(ChowError::SpaceMismatch(
                format!("{}→{}[{}]", self.source, self.target, self.shift),
                format!("{}→{}[{}]", other.source, other.target, other.shift),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Correspondence) -> Result<Correspondence, ChowError> {
        self.same_shape(other)?;
        Ok(Correspondence { class: self.class.add(&other.class)?, ..self.clone() })
    }

    pub fn sub(&self, other: &Correspondence) -> Result<Correspondence, ChowError> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Correspondence {
        Correspondence { class: self.class.scale(k), ..self.clone() }
    }

    /// `self ∘ alpha` for `alpha: X → Y` and `self: Y → Z`.
    pub fn compose(&self, alpha: &Correspondence) -> Result<Correspondence, ChowError> {
        compose(self, alpha)
    }

    /// Transpose in `CH(Y × X)`.
    pub fn transpose(&self) -> Correspondence {
        let kx = self.source.factors();
        let ky = self.target.factors();
        let order: Vec<usize> = (kx..kx + ky).chain(0..kx).collect();
        let shift = self.source.dim() + self.shift - self.target.dim();
        Correspondence {
            source: self.target.clone(),
            target: self.source.clone(),
            shift,
            class: self.class.permute(&order),
        }
    }

    /// `α ⊗ β : X × X' → Y × Y'`.
    pub fn tensor(&self, other: &Correspondence) -> Correspondence {
        let (kx, ky) = (self.source.factors(), self.target.factors());
        let (kx2, ky2) = (other.source.factors(), other.target.factors());
        let raw = self.class.exterior(&other.class);
        // raw factors: X, Y, X', Y'  →  X, X', Y, Y'
        let order: Vec<usize> = (0..kx)
            .chain(kx + ky..kx + ky + kx2)
            .chain(kx..kx + ky)
            .chain(kx + ky + kx2..kx + ky + kx2 + ky2)
            .collect();
        Correspondence {
            source: self.source.product(&other.source),
            target: self.target.product(&other.target),
            shift: self.shift + other.shift,
            class: raw.permute(&order),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.source == self.target && self.shift == 0 && compose(self, self).is_ok_and(|c| c == *self)
    }
}

pub fn compose(beta: &Correspondence, alpha: &Correspondence) -> Result<Correspondence, ChowError> {
    if alpha.target != beta.source {
        return Err(ChowError::SpaceMismatch(alpha.target.to_string(), beta.source.to_string()));
    }
    let (x, y, z) = (&alpha.source, &alpha.target, &beta.target);
    let (kx, ky, kz) = (x.factors(), y.factors(), z.factors());
    let triple = x.product(y).product(z);
    let a = alpha.class.pullback(&triple, &(0..kx + ky).collect::<Vec<_>>())?;
    let b = beta.class.pullback(&triple, &(kx..kx + ky + kz).collect::<Vec<_>>())?;
    let keep: Vec<usize> = (0..kx).chain(kx + ky..kx + ky + kz).collect();
    let class = a.mul(&b)?.pushforward(&keep)?;
    Ok(Correspondence { source: x.clone(), target: z.clone(), shift: alpha.shift + beta.shift, class })
}

/// The endomorphism `h ⊗ 1 = [pt × P¹]` of `M(P¹)`: its image is the unit
/// motive and its complement `1 − h⊗1 = 1 ⊗ h` cuts out `L`.
pub fn projection_to_infinity() -> Correspondence {
    let p1 = ProjSpaceProduct::projective(1);
    let space = p1.product(&p1);
    Correspondence::new(&p1, &p1, 0, ChowClass::monomial(&space, vec![1, 0], 1).unwrap()).unwrap()
}

/// The motive `(X, p, n)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Motive {
    space: ProjSpaceProduct,
    projector: Correspondence,
    twist: i64,
}

impl Motive {
    pub fn new(projector: Correspondence, twist: i64) -> Result<Self, ChowError> {
        if projector.source != projector.target || projector.shift != 0 {
            return Err(ChowError::NotAnEndomorphism(projector.source.to_string()));
        }
        if !projector.is_idempotent() {
            return Err(ChowError::NotIdempotent);
        }
        Ok(Motive { space: projector.source.clone(), projector, twist })
    }

    /// `M(X) = (X, Δ, 0)`.
    pub fn of_space(x: &ProjSpaceProduct) -> Self {
        Motive { space: x.clone(), projector: Correspondence::identity(x), twist: 0 }
    }

    pub fn unit() -> Self {
        Motive::of_space(&ProjSpaceProduct::point())
    }

    /// `L^k = (pt, id, −k)` for any integer `k`.
    pub fn lefschetz(k: i64) -> Self {
        Motive { twist: -k, ..Motive::unit() }
    }

    pub fn space(&self) -> &ProjSpaceProduct {
        &self.space
    }

    pub fn projector(&self) -> &Correspondence {
        &self.projector
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    /// `(X, p, m) ⊗ (Y, q, n) = (X × Y, p ⊗ q, m + n)`.
    pub fn tensor(&self, other: &Motive) -> Motive {
        Motive {
            space: self.space.product(&other.space),
            projector: self.projector.tensor(&other.projector),
            twist: self.twist + other.twist,
        }
    }

    /// `(X, p, m)^∨ = (X, pᵗ, dim X − m)`.
    pub fn dual(&self) -> Motive {
        Motive {
            space: self.space.clone(),
            projector: self.projector.transpose(),
            twist: self.space.dim() - self.twist,
        }
    }
}

pub fn dual(m: &Motive) -> Motive {
    m.dual()
}

/// One rank-one summand of `M(X)` with explicit inverse isomorphisms to `L^w`.
#[derive(Clone, Debug, Serialize)]
pub struct TateSummand {
    pub exponents: Vec<u32>,
    pub weight: i64,
    pub label: String,
    pub motive: Motive,
    /// `L^w → (X, p, 0)`.
    pub from_tate: Correspondence,
    /// `(X, p, 0) → L^w`.
    pub to_tate: Correspondence,
    pub verified: bool,
}

pub fn tate_label(w: i64) -> String {
    match w {
        0 => "1".into(),
        1 => "L".into(),
        w => format!("L^{w}"),
    }
}

/// Splits `M(X)` into `h^a ⊗ h^{n−a}` summands, each shown isomorphic to `L^{|n−a|}`.
pub fn motive_decompose(x: &ProjSpaceProduct) -> Vec<TateSummand> {
    let space = x.product(x);
    let pt = ProjSpaceProduct::point();
    x.monomials()
        .into_iter()
        .map(|a| {
            let comp: Vec<u32> = a.iter().zip(&x.dims).map(|(ai, n)| n - ai).collect();
            let weight = codim_of(&comp);
            let mut e = a.clone();
            e.extend_from_slice(&comp);
            let p = Correspondence::new(x, x, 0, ChowClass::monomial(&space, e, 1).unwrap()).unwrap();
            let motive = Motive { space: x.clone(), projector: p.clone(), twist: 0 };
            let from_tate =
                Correspondence::from_product(&ChowClass::one(&pt), &ChowClass::monomial(x, comp, 1).unwrap())
                    .expect("homogeneous");
            let to_tate =
                Correspondence::from_product(&ChowClass::monomial(x, a.clone(), 1).unwrap(), &ChowClass::one(&pt))
                    .expect("homogeneous");
            let id_pt = Correspondence::identity(&pt);
            let verified = p.is_idempotent()
                && compose(&to_tate, &from_tate).is_ok_and(|c| c.class == id_pt.class)
                && compose(&from_tate, &to_tate).is_ok_and(|c| c.class == p.class)
                && hom_group(&Motive::lefschetz(weight), &motive).is_ok_and(|h| h.rank() == 1);
            TateSummand { exponents: a, weight, label: tate_label(weight), motive, from_tate, to_tate, verified }
        })
        .collect()
}

/// Checks that the summand projectors are idempotent, pairwise orthogonal and sum to `Δ`.
pub fn decomposition_is_complete(x: &ProjSpaceProduct, summands: &[TateSummand]) -> bool {
    let id = Correspondence::identity(x);
    let mut total = Correspondence::zero(x, x, 0);
    for (i, s) in summands.iter().enumerate() {
        let p = &s.motive.projector;
        if !p.is_idempotent() {
            return false;
        }
        for t in &summands[i + 1..] {
            let q = &t.motive.projector;
            if !compose(p, q).is_ok_and(|c| c.is_zero()) || !compose(q, p).is_ok_and(|c| c.is_zero()) {
                return false;
            }
        }
        total = total.add(p).expect("same shape");
    }
    total == id
}

/// Free abelian group of morphisms between two motives.
#[derive(Clone, Debug, Serialize)]
pub struct HomGroup {
    pub source: Motive,
    pub target: Motive,
    pub codimension: i64,
    pub basis: Vec<Correspondence>,
}

impl HomGroup {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn monomial_basis(&self) -> Vec<Vec<u32>> {
        self.source.space.product(&self.target.space).basis(self.codimension)
    }

    /// Coordinates of the basis over the monomials of `CH^c(X × Y)`.
    pub fn lattice(&self) -> IntLattice {
        let mb = self.monomial_basis();
        IntLattice::new(mb.len(), self.basis.iter().map(|b| b.class.coefficients(&mb)))
    }

    /// `hom ⊗ Q`, with its basis over the monomials.
    pub fn rationalize(&self) -> RationalHom {
        let mb = self.monomial_basis();
        let basis: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|b| b.class.coefficients(&mb).into_iter().map(Rational::from_integer).collect())
            .collect();
        let dimension = rational_rank(&basis);
        RationalHom { dimension, integer_rank: self.rank(), basis }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalHom {
    pub dimension: usize,
    pub integer_rank: usize,
    #[serde(serialize_with = "serialize_rational_rows")]
    pub basis: Vec<Vec<Rational>>,
}

impl RationalHom {
    /// Rationalization of a free group loses nothing.
    pub fn is_injective(&self) -> bool {
        self.dimension == self.integer_rank
    }
}

fn serialize_rational_rows<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    let out: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    out.serialize(s)
}

/// Basis of `{α ∈ Corr^{n−m}(X, Y) : α = q ∘ α ∘ p}`.
pub fn hom_group(m: &Motive, n: &Motive) -> Result<HomGroup, ChowError> {
    let (x, y) = (&m.space, &n.space);
    let shift = n.twist - m.twist;
    let codim = x.dim() + shift;
    let space = x.product(y);
    let mb = space.basis(codim);
    // columns: images of basis monomials under α ↦ q∘α∘p, minus the identity
    let mut columns = Vec::with_capacity(mb.len());
    for (j, e) in mb.iter().enumerate() {
        let alpha = Correspondence::new(x, y, shift, ChowClass::monomial(&space, e.clone(), 1)?)?;
        let image = compose(&n.projector, &compose(&alpha, &m.projector)?)?;
        let mut col = image.class.coefficients(&mb);
        col[j] -= 1;
        columns.push(col);
    }
    let rows: Vec<Vec<i64>> = (0..mb.len()).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    let kernel = integer_kernel(&rows, mb.len());
    let basis = kernel
        .into_iter()
        .map(|v| Correspondence {
            source: x.clone(),
            target: y.clone(),
            shift,
            class: ChowClass::from_coefficients(&space, &mb, &v),
        })
        .collect();
    Ok(HomGroup { source: m.clone(), target: n.clone(), codimension: codim, basis })
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityReport {
    pub lhs_rank: usize,
    pub rhs_rank: usize,
    pub bijective: bool,
}

/// `hom(M ⊗ N, P) → hom(M, N^∨ ⊗ P)`. On cycles the map is the identity of
/// `CH(X × Y × Z)`, so bijectivity is equality of the two sublattices.
pub fn rigidity_check(m: &Motive, n: &Motive, p: &Motive) -> Result<RigidityReport, ChowError> {
    let lhs = hom_group(&m.tensor(n), p)?;
    let rhs = hom_group(m, &n.dual().tensor(p))?;
    let bijective = lhs.codimension == rhs.codimension && {
        let (a, b) = (lhs.lattice(), rhs.lattice());
        a.contains_lattice(&b) && b.contains_lattice(&a)
    };
    Ok(RigidityReport { lhs_rank: lhs.rank(), rhs_rank: rhs.rank(), bijective })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingBlock {
    pub codimension: i64,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    pub determinant: i128,
    pub unimodular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub space: ProjSpaceProduct,
    pub blocks: Vec<PairingBlock>,
    /// Full pairing with rows by codimension and columns the complementary monomials.
    pub full_matrix: Vec<Vec<i64>>,
    pub nondegenerate: bool,
}

/// Intersection pairing `CH^i × CH^{d−i} → Z` in every codimension.
pub fn pairing_nondegenerate(x: &ProjSpaceProduct) -> PairingReport {
    let d = x.dim();
    let deg = |a: &[u32], b: &[u32]| -> i64 {
        let ca = ChowClass::monomial(x, a.to_vec(), 1).unwrap();
        let cb = ChowClass::monomial(x, b.to_vec(), 1).unwrap();
        ca.mul(&cb).unwrap().degree()
    };
    let blocks: Vec<PairingBlock> = (0..=d)
        .map(|i| {
            let rows = x.basis(i);
            let cols: Vec<Vec<u32>> =
                rows.iter().map(|e| e.iter().zip(&x.dims).map(|(a, n)| n - a).collect()).collect();
            let matrix: Vec<Vec<i64>> =
                rows.iter().map(|r| x.basis(d - i).iter().map(|c| deg(r, c)).collect()).collect();
            let det = determinant(&matrix);
            PairingBlock {
                codimension: i,
                rows: rows.iter().map(|e| format_monomial(e)).collect(),
                columns: x.basis(d - i).iter().map(|e| format_monomial(e)).collect(),
                matrix,
                determinant: det,
                unimodular: det.abs() == 1 && cols.len() == rows.len(),
            }
        })
        .collect();
    let all = x.monomials();
    let complements: Vec<Vec<u32>> = all.iter().map(|e| e.iter().zip(&x.dims).map(|(a, n)| n - a).collect()).collect();
    let full_matrix = all.iter().map(|r| complements.iter().map(|c| deg(r, c)).collect()).collect();
    let nondegenerate = blocks.iter().all(|b| b.unimodular);
    PairingReport { space: x.clone(), blocks, full_matrix, nondegenerate }
}

#[derive(Clone, Debug, Serialize)]
pub struct SemisimplicityReport {
    pub labels: Vec<String>,
    /// `ranks[i][j] = rank hom(S_i, S_j)` over the summands of the decomposition.
    pub ranks: Vec<Vec<usize>>,
    pub endomorphisms_are_q: bool,
    pub cross_homs_vanish: bool,
}

/// Rationalized homs between the Tate summands of `M(X)`: each endomorphism
/// ring is `Q` and homs between summands of different weight vanish.
pub fn semisimplicity_check(x: &ProjSpaceProduct) -> Result<SemisimplicityReport, ChowError> {
    let summands = motive_decompose(x);
    let mut ranks = vec![vec![0; summands.len()]; summands.len()];
    let mut endo = true;
    let mut cross = true;
    for (i, s) in summands.iter().enumerate() {
        for (j, t) in summands.iter().enumerate() {
            let h = hom_group(&s.motive, &t.motive)?.rationalize();
            ranks[i][j] = h.dimension;
            if i == j {
                endo &= h.dimension == 1;
            } else if s.weight != t.weight {
                cross &= h.dimension == 0;
            } else {
                cross &= h.dimension == 1;
            }
        }
    }
    Ok(SemisimplicityReport {
        labels: summands.iter().map(|s| s.label.clone()).collect(),
        ranks,
        endomorphisms_are_q: endo,
        cross_homs_vanish: cross,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> ProjSpaceProduct {
        s.parse().unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        let p2 = sp("P2");
        let h = ChowClass::hyperplane(&p2, 0).unwrap();
        let h2 = h.mul(&h).unwrap();
        assert_eq!(h2, ChowClass::monomial(&p2, vec![2], 1).unwrap());
        assert!(h.mul(&h2).unwrap().is_zero());
        assert_eq!(sp("P2xP1").dim(), 3);
        assert_eq!(sp("pt"), ProjSpaceProduct::point());
        assert!("Q3".parse::<ProjSpaceProduct>().is_err());
    }

    #[test]
    fn pushforward_of_point() {
        let x = sp("P1");
        let c = ChowClass::point_class(&x);
        let pushed = c.pushforward(&[]).unwrap();
        assert_eq!(pushed, ChowClass::one(&ProjSpaceProduct::point()));
        assert!(ChowClass::one(&x).pushforward(&[]).unwrap().is_zero());
    }

    #[test]
    fn diagonal_is_identity() {
        let x = sp("P2");
        let d = Correspondence::identity(&x);
        assert_eq!(compose(&d, &d).unwrap(), d);
        let pi = projection_to_infinity();
        assert!(pi.is_idempotent());
        assert!(pi.transpose().is_idempotent());
    }

    #[test]
    fn decompositions() {
        for (s, labels) in
            [("P1", vec!["1", "L"]), ("P2", vec!["1", "L", "L^2"]), ("P1xP1", vec!["1", "L", "L", "L^2"])]
        {
            let x = sp(s);
            let d = motive_decompose(&x);
            let mut got: Vec<String> = d.iter().map(|t| t.label.clone()).collect();
            got.sort();
            assert_eq!(got, labels);
            assert!(d.iter().all(|t| t.verified));
            assert!(decomposition_is_complete(&x, &d));
        }
    }

    #[test]
    fn homs() {
        for i in -3..=3 {
            for j in -3..=3 {
                let r = hom_group(&Motive::lefschetz(i), &Motive::lefschetz(j)).unwrap().rank();
                assert_eq!(r, (i == j) as usize);
            }
        }
        let m = Motive::of_space(&sp("P1"));
        assert_eq!(hom_group(&m, &m).unwrap().rank(), 2);
        assert_eq!(hom_group(&Motive::unit(), &Motive::unit()).unwrap().rank(), 1);
    }

    #[test]
    fn duals_and_rigidity() {
        let x = sp("P2");
        for s in motive_decompose(&x) {
            let m = Motive { twist: 1, ..s.motive };
            assert_eq!(m.dual().dual(), m);
        }
        assert_eq!(Motive::unit().dual(), Motive::unit());
        let l = Motive::lefschetz(1);
        assert_eq!(hom_group(&l.tensor(&l.dual()), &Motive::unit()).unwrap().rank(), 1);
        let r = rigidity_check(&Motive::unit(), &l, &l).unwrap();
        assert!(r.bijective && r.lhs_rank == 1);
        let p1 = Motive::of_space(&sp("P1"));
        let r = rigidity_check(&p1, &Motive::unit(), &p1).unwrap();
        assert!(r.bijective && r.lhs_rank == 2);
    }

    #[test]
    fn pairings() {
        let r = pairing_nondegenerate(&sp("P2"));
        assert_eq!(r.full_matrix, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(r.nondegenerate);
        let r = pairing_nondegenerate(&sp("P1xP1"));
        assert_eq!(r.blocks[1].matrix, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(pairing_nondegenerate(&ProjSpaceProduct::point()).blocks[0].matrix, vec![vec![1]]);
    }

    #[test]
    fn semisimple() {
        let r = semisimplicity_check(&sp("P1xP1")).unwrap();
        assert!(r.endomorphisms_are_q && r.cross_homs_vanish);
        let end1 = hom_group(&Motive::unit(), &Motive::unit()).unwrap().rationalize();
        assert_eq!(end1.dimension, 1);
        assert!(end1.is_injective());
    }
}

//! Milnor-Witt K-theory `K^MW_•(F_q)` in canonical degree-wise coordinates.
//!
//! Coordinates are taken relative to the fixed generator `ω` of `F_q^*`:
//!
//! | degree `n`      | group                    | generators                  |
//! |-----------------|--------------------------|-----------------------------|
//! | `n ≥ 2`         | `0`                      |                             |
//! | `1`             | `Z/(q−1)`                | `[ω]`                       |
//! | `0`             | `Z ⊕ Z/2`                | `1`, `η[ω]`                 |
//! | `−m`, q ≡ 3 (4) | `Z/4`                    | `η^m`                       |
//! | `−m`, q ≡ 1 (4) | `Z/2 ⊕ Z/2`              | `η^m`, `η^{m+1}[ω]`         |
//!
//! Symbol words are rewritten with the presentation by generators `[a]`, `η`
//! and relations `[a][1−a] = 0`, `[ab] = [a] + [b] + η[a][b]`, `η[a] = [a]η`,
//! `η·h = 0` with `h = 1 + (η[−1] + 1)`. Because `K^MW_2(F_q) = 0`, every
//! monomial with two bracket factors vanishes, `[a] = dlog(a)·[ω]`, and the
//! torsion in degrees `≤ 0` is fixed by `2η = −η²[−1]`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::finite_field::{FieldElement, FieldError, PrimePower};
use crate::linalg::IntLattice;
use crate::quadratic_forms::{fundamental_ideal_power_signed, GWClass, WittClass};

mod word;

pub use word::{parse_word, ParseError, SymbolMonomial, SymbolWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KmwError {
    #[error("a symbol [a] requires a ≠ 0")]
    ZeroSymbolEntry,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i64, i64),
    #[error("degree {degree} outside the supported window [{min}, {max}]")]
    DegreeOutOfRange { degree: i64, min: i64, max: i64 },
    #[error("Milnor K-theory is not modelled in negative degree {0}")]
    NegativeDegree(i64),
    #[error("the class is not in I^{0}")]
    NotInIdealPower(i64),
    #[error("word is not homogeneous (degrees {0:?})")]
    MixedDegree(Vec<i64>),
    #[error("coordinate vector has length {got}, expected {expected}")]
    BadCoordinates { got: usize, expected: usize },
    #[error("the element does not generate F_q^*")]
    NotAGenerator,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Window of supported degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KmwConfig {
    pub min_degree: i64,
    pub max_degree: i64,
}

impl Default for KmwConfig {
    fn default() -> Self {
        KmwConfig { min_degree: -64, max_degree: 64 }
    }
}

/// Abelian group descriptor; an invariant factor `0` denotes a copy of `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KmwGroup {
    pub degree: i64,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<String>,
}

impl KmwGroup {
    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        self.invariant_factors.iter().try_fold(1u64, |acc, &m| if m == 0 { None } else { Some(acc * m) })
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn shape(&self) -> String {
        if self.invariant_factors.is_empty() {
            return "0".into();
        }
        self.invariant_factors
            .iter()
            .map(|&m| if m == 0 { "Z".to_string() } else { format!("Z/{m}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Element of `K^MW_n(F_q)` in the canonical coordinates of its degree.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct KmwElement {
    #[serde(skip)]
    field: PrimePower,
    pub degree: i64,
    pub coords: Vec<i64>,
}

impl KmwElement {
    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for KmwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (deg {})", self.degree)
    }
}

impl fmt::Display for KmwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = generator_names(self.field.q_mod_4(), self.degree);
        let terms: Vec<String> = self
            .coords
            .iter()
            .zip(&names)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, name)| match (c, name.as_str()) {
                (c, "1") => c.to_string(),
                (1, n) => n.to_string(),
                (c, n) => format!("{c}*{n}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Element of Milnor K-theory `K^M_n(F_q)`, `n ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MilnorKElement {
    /// `K^M_0 = Z`.
    Integer(i64),
    /// `K^M_1 = F_q^*`, written multiplicatively.
    Unit(FieldElement),
    /// `K^M_n = 0` for `n ≥ 2`.
    Zero { degree: i64 },
}

fn generator_names(q_mod_4: u64, n: i64) -> Vec<String> {
    let eta = |m: i64| if m == 1 { "eta".to_string() } else { format!("eta^{m}") };
    match n {
        n if n >= 2 => vec![],
        1 => vec!["[w]".into()],
        0 => vec!["1".into(), "eta[w]".into()],
        n => {
            let m = -n;
            if q_mod_4 == 3 {
                vec![eta(m)]
            } else {
                vec![eta(m), format!("{}[w]", eta(m + 1))]
            }
        }
    }
}

/// Result of checking `0 → I^{n+1} → K^MW_n → K^M_n → 0`.
#[derive(Clone, Debug, Serialize)]
pub struct SesReport {
    pub degree: i64,
    pub ideal_order: usize,
    pub kmw_shape: String,
    pub milnor_shape: String,
    pub injective: bool,
    pub middle_exact: bool,
    pub surjective: bool,
    pub witnesses: Vec<String>,
}

impl SesReport {
    pub fn passed(&self) -> bool {
        self.injective && self.middle_exact && self.surjective
    }
}

/// One graded piece of `K^MW_•(F_q)[η^{-1}]`.
#[derive(Clone, Debug, Serialize)]
pub struct LocalizedPiece {
    pub degree: i64,
    /// Least `k ≥ 1` such that every η-map starting at `K^MW_{degree−k}` is onto.
    pub stabilization_index: i64,
    /// Degree from which η-multiplication is bijective; its group is the colimit.
    pub stable_from_degree: i64,
    pub group: KmwGroup,
}

#[derive(Clone, Debug, Serialize)]
pub struct EtaLocalization {
    pub pieces: Vec<LocalizedPiece>,
    pub four_is_zero: bool,
    pub two_is_zero: bool,
    pub unit_additive_order: u64,
}

/// The graded ring `K^MW_•(F_q)` with a degree window.
#[derive(Clone, Debug)]
pub struct MilnorWitt {
    field: PrimePower,
    config: KmwConfig,
}

impl MilnorWitt {
    pub fn new(field: &PrimePower) -> Self {
        MilnorWitt { field: field.clone(), config: KmwConfig::default() }
    }

    pub fn with_config(field: &PrimePower, config: KmwConfig) -> Self {
        MilnorWitt { field: field.clone(), config }
    }

    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    pub fn config(&self) -> KmwConfig {
        self.config
    }

    fn q_mod_4(&self) -> u64 {
        self.field.q_mod_4()
    }

    fn check_degree(&self, n: i64) -> Result<(), KmwError> {
        let KmwConfig { min_degree, max_degree } = self.config;
        if n < min_degree || n > max_degree {
            return Err(KmwError::DegreeOutOfRange { degree: n, min: min_degree, max: max_degree });
        }
        Ok(())
    }

    /// Moduli of the coordinates in degree `n` (`0` for a free coordinate).
    pub fn coordinate_moduli(&self, n: i64) -> Vec<u64> {
        self.moduli(n)
    }

    fn moduli(&self, n: i64) -> Vec<u64> {
        match n {
            n if n >= 2 => vec![],
            1 => vec![self.field.q() - 1],
            0 => vec![0, 2],
            _ if self.q_mod_4() == 3 => vec![4],
            _ => vec![2, 2],
        }
    }

    pub fn group(&self, n: i64) -> Result<KmwGroup, KmwError> {
        self.check_degree(n)?;
        let mut invariant_factors = self.moduli(n);
        // F_3^* = Z/2 is still a single cyclic factor; Z/1 never occurs since q ≥ 3.
        invariant_factors.retain(|&m| m != 1);
        Ok(KmwGroup { degree: n, invariant_factors, generators: generator_names(self.q_mod_4(), n) })
    }

    fn reduce_coords(&self, n: i64, coords: &mut [i64]) {
        for (c, m) in coords.iter_mut().zip(self.moduli(n)) {
            if m != 0 {
                *c = c.rem_euclid(m as i64);
            }
        }
    }

    pub fn element(&self, n: i64, mut coords: Vec<i64>) -> Result<KmwElement, KmwError> {
        self.check_degree(n)?;
        let expected = self.moduli(n).len();
        if coords.len() != expected {
            return Err(KmwError::BadCoordinates { got: coords.len(), expected });
        }
        self.reduce_coords(n, &mut coords);
        Ok(KmwElement { field: self.field.clone(), degree: n, coords })
    }

    pub fn zero(&self, n: i64) -> Result<KmwElement, KmwError> {
        self.element(n, vec![0; self.moduli(n).len()])
    }

    pub fn one(&self) -> KmwElement {
        self.element(0, vec![1, 0]).expect("degree 0 is always supported")
    }

    /// `η^m`, `m ≥ 0`.
    pub fn eta_power(&self, m: u32) -> Result<KmwElement, KmwError> {
        self.monomial(m as i64, 0)
    }

    pub fn eta(&self) -> Result<KmwElement, KmwError> {
        self.eta_power(1)
    }

    /// `[a]` in degree 1.
    pub fn symbol(&self, a: &FieldElement) -> Result<KmwElement, KmwError> {
        if a.field() != &self.field {
            return Err(KmwError::FieldMismatch);
        }
        if a.is_zero() {
            return Err(KmwError::ZeroSymbolEntry);
        }
        self.element(1, vec![a.discrete_log()? as i64])
    }

    /// `h = 1 + (η[−1] + 1)`.
    pub fn hyperbolic(&self) -> KmwElement {
        let eta_minus_one = self.mul(&self.eta().unwrap(), &self.symbol(&self.field.minus_one()).unwrap()).unwrap();
        let two = self.scale(&self.one(), 2);
        self.add(&two, &eta_minus_one).unwrap()
    }

    /// Coordinates of the generator monomial `η^i [ω]^j` in degree `j − i`.
    fn monomial(&self, eta: i64, brackets: i64) -> Result<KmwElement, KmwError> {
        let n = brackets - eta;
        self.check_degree(n)?;
        let coords = match (eta, brackets) {
            (_, j) if j >= 2 => vec![0; self.moduli(n).len()],
            (0, 1) => vec![1],
            (1, 1) => vec![0, 1],
            // η^{m+1}[ω] with m ≥ 1
            (_, 1) if self.q_mod_4() == 3 => vec![2],
            (_, 1) => vec![0, 1],
            (0, 0) => vec![1, 0],
            (_, 0) if self.q_mod_4() == 3 => vec![1],
            (_, 0) => vec![1, 0],
            _ => unreachable!("negative exponents do not occur"),
        };
        self.element(n, coords)
    }

    /// The coordinate generators of degree `n` as `(η-exponent, bracket count)`.
    fn generator_monomials(&self, n: i64) -> Vec<(i64, i64)> {
        match n {
            n if n >= 2 => vec![],
            1 => vec![(0, 1)],
            0 => vec![(0, 0), (1, 1)],
            n if self.q_mod_4() == 3 => vec![(-n, 0)],
            n => vec![(-n, 0), (-n + 1, 1)],
        }
    }

    fn same_field(&self, x: &KmwElement) -> Result<(), KmwError> {
        if x.field != self.field {
            return Err(KmwError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, x: &KmwElement, y: &KmwElement) -> Result<KmwElement, KmwError> {
        self.same_field(x)?;
        self.same_field(y)?;
        if x.degree != y.degree {
            return Err(KmwError::DegreeMismatch(x.degree, y.degree));
        }
        let coords = x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect();
        self.element(x.degree, coords)
    }

    pub fn neg(&self, x: &KmwElement) -> KmwElement {
        self.scale(x, -1)
    }

    pub fn sub(&self, x: &KmwElement, y: &KmwElement) -> Result<KmwElement, KmwError> {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &KmwElement, k: i64) -> KmwElement {
        let coords = x.coords.iter().map(|c| c * k).collect();
        self.element(x.degree, coords).expect("same degree as input")
    }

    /// Graded product by expansion in generator monomials.
    pub fn mul(&self, x: &KmwElement, y: &KmwElement) -> Result<KmwElement, KmwError> {
        self.same_field(x)?;
        self.same_field(y)?;
        let n = x.degree + y.degree;
        let mut acc = self.zero(n)?;
        for (cx, gx) in x.coords.iter().zip(self.generator_monomials(x.degree)) {
            for (cy, gy) in y.coords.iter().zip(self.generator_monomials(y.degree)) {
                if cx * cy == 0 {
                    continue;
                }
                let m = self.monomial(gx.0 + gy.0, gx.1 + gy.1)?;
                acc = self.add(&acc, &self.scale(&m, cx * cy))?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, x: &KmwElement, k: u32) -> Result<KmwElement, KmwError> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Rewrites a symbol word into canonical coordinates, one element per degree.
    pub fn reduce(&self, w: &SymbolWord) -> Result<BTreeMap<i64, KmwElement>, KmwError> {
        if w.field() != &self.field {
            return Err(KmwError::FieldMismatch);
        }
        let mut out: BTreeMap<i64, KmwElement> = BTreeMap::new();
        for (coeff, mono) in w.terms() {
            let n = mono.degree();
            let value = self.reduce_monomial(mono)?;
            let term = self.scale(&value, *coeff);
            let slot = match out.remove(&n) {
                Some(prev) => self.add(&prev, &term)?,
                None => term,
            };
            out.insert(n, slot);
        }
        Ok(out)
    }

    /// Like [`reduce`](Self::reduce) but requires a single degree; the empty word is `0 ∈ K^MW_0`.
    pub fn reduce_homogeneous(&self, w: &SymbolWord) -> Result<KmwElement, KmwError> {
        let mut parts = self.reduce(w)?;
        match parts.len() {
            0 => self.zero(0),
            1 => Ok(parts.pop_first().unwrap().1),
            _ => Err(KmwError::MixedDegree(parts.keys().copied().collect())),
        }
    }

    fn reduce_monomial(&self, mono: &SymbolMonomial) -> Result<KmwElement, KmwError> {
        let mut log_product: i64 = 1;
        let n = self.field.q() as i64 - 1;
        for a in mono.symbols() {
            if a.is_zero() {
                return Err(KmwError::ZeroSymbolEntry);
            }
            // [a] = dlog(a)·[ω] in degree 1; products of two brackets vanish
            log_product = (log_product * a.discrete_log()? as i64) % n;
        }
        let m = self.monomial(mono.eta() as i64, mono.symbols().len() as i64)?;
        Ok(self.scale(&m, log_product))
    }

    /// Quotient map `K^MW_n → K^M_n = K^MW_n / η`.
    pub fn to_milnor(&self, x: &KmwElement) -> Result<MilnorKElement, KmwError> {
        self.same_field(x)?;
        match x.degree {
            n if n < 0 => Err(KmwError::NegativeDegree(n)),
            0 => Ok(MilnorKElement::Integer(x.coords[0])),
            1 => Ok(MilnorKElement::Unit(self.field.generator_power(x.coords[0]))),
            n => Ok(MilnorKElement::Zero { degree: n }),
        }
    }

    /// Additive generators of the kernel of `to_milnor` in degree `n ≥ 0`.
    pub fn milnor_kernel(&self, n: i64) -> Result<Vec<KmwElement>, KmwError> {
        match n {
            n if n < 0 => Err(KmwError::NegativeDegree(n)),
            0 => Ok(vec![self.element(0, vec![0, 1])?]),
            _ => Ok(vec![]),
        }
    }

    /// `I^{n+1} ≅ K^W_{n+1} →(·η) K^MW_n`, where `[a] ∈ K^W_1` is the Pfister
    /// form `⟨1, −a⟩` and `1 + η[a] ∈ K^W_0` is `⟨a⟩`.
    pub fn from_fundamental_ideal(&self, n: i64, w: &WittClass) -> Result<KmwElement, KmwError> {
        if w.field() != &self.field {
            return Err(KmwError::FieldMismatch);
        }
        self.check_degree(n)?;
        let ideal = fundamental_ideal_power_signed(&self.field, n + 1);
        if !ideal.contains(w) {
            return Err(KmwError::NotInIdealPower(n + 1));
        }
        let word = if n < 0 {
            // w = Σ ⟨a_i⟩ ↦ η^{-n}(1 + η[a_i])
            let mut word = SymbolWord::zero(&self.field);
            for a in w.anisotropic_kernel().entries() {
                let unary =
                    SymbolWord::one(&self.field).add(&SymbolWord::eta(&self.field).mul(&SymbolWord::symbol(a)?)?)?;
                word = word.add(&SymbolWord::eta_power(&self.field, (-n) as u32).mul(&unary)?)?;
            }
            word
        } else {
            // w = Σ Pfister products ⟨⟨a_1,…,a_{n+1}⟩⟩ ↦ η[a_1]⋯[a_{n+1}]
            let k = (n + 1) as usize;
            let mut word = SymbolWord::zero(&self.field);
            for tuple in pfister_decomposition(&self.field, k, w) {
                let mut term = SymbolWord::eta(&self.field);
                for a in &tuple {
                    term = term.mul(&SymbolWord::symbol(a)?)?;
                }
                word = word.add(&term)?;
            }
            word
        };
        let parts = self.reduce(&word)?;
        match parts.get(&n) {
            Some(x) => Ok(x.clone()),
            None => self.zero(n),
        }
    }

    /// `K^MW_0 → GW`, `a + b·η[ω] ↦ a⟨1⟩ + b(⟨ω⟩ − ⟨1⟩)`.
    pub fn to_gw(&self, x: &KmwElement) -> Result<GWClass, KmwError> {
        self.same_field(x)?;
        if x.degree != 0 {
            return Err(KmwError::DegreeMismatch(x.degree, 0));
        }
        Ok(GWClass::new(&self.field, x.coords[0], x.coords[1] as u8))
    }

    pub fn from_gw(&self, g: &GWClass) -> Result<KmwElement, KmwError> {
        if g.field() != &self.field {
            return Err(KmwError::FieldMismatch);
        }
        self.element(0, vec![g.rank, g.disc as i64])
    }

    /// Image of a degree `≤ 0` element in `W(F_q)` (degree 0 via `GW → W`).
    pub fn to_witt(&self, x: &KmwElement) -> Result<WittClass, KmwError> {
        self.same_field(x)?;
        match x.degree {
            0 => Ok(self.to_gw(x)?.witt_class()),
            n if n < 0 => {
                let (a, b) = if self.q_mod_4() == 3 { (x.coords[0], 0) } else { (x.coords[0], x.coords[1]) };
                Ok(GWClass::new(&self.field, a, b as u8).witt_class())
            }
            n => Err(KmwError::DegreeMismatch(n, 0)),
        }
    }

    pub fn eta_power_nonzero(&self, n: u32) -> Result<bool, KmwError> {
        Ok(!self.eta_power(n)?.is_zero())
    }

    /// Every element of a finite degree; degree 0 is truncated to `|rank| ≤ rank_bound`.
    pub fn elements(&self, n: i64, rank_bound: i64) -> Result<Vec<KmwElement>, KmwError> {
        let moduli = self.moduli(n);
        let mut out = vec![Vec::new()];
        for m in moduli {
            let range: Vec<i64> = if m == 0 { (-rank_bound..=rank_bound).collect() } else { (0..m as i64).collect() };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    range.iter().map(move |&c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|c| self.element(n, c)).collect()
    }

    /// Checks the short exact sequence `0 → I^{n+1} → K^MW_n → K^M_n → 0`
    /// element by element; the free part of `K^MW_0` is scanned for `|rank| ≤ 8`.
    pub fn verify_ses(&self, n: i64) -> Result<SesReport, KmwError> {
        let ideal = fundamental_ideal_power_signed(&self.field, n + 1);
        let kmw = self.group(n)?;
        let mut witnesses = Vec::new();

        let images: Vec<KmwElement> =
            ideal.elements.iter().map(|w| self.from_fundamental_ideal(n, w)).collect::<Result<_, _>>()?;
        let mut injective = true;
        for (i, x) in images.iter().enumerate() {
            for (j, y) in images.iter().enumerate().skip(i + 1) {
                if x == y {
                    injective = false;
                    witnesses.push(format!(
                        "left map not injective: {} and {} both map to {x}",
                        ideal.elements[i], ideal.elements[j]
                    ));
                }
            }
        }

        let in_kernel = |x: &KmwElement| -> Result<bool, KmwError> {
            Ok(match n {
                n if n < 0 => true,
                _ => match self.to_milnor(x)? {
                    MilnorKElement::Integer(k) => k == 0,
                    MilnorKElement::Unit(u) => u.is_one(),
                    MilnorKElement::Zero { .. } => true,
                },
            })
        };
        let mut middle_exact = true;
        for x in &images {
            if !in_kernel(x)? {
                middle_exact = false;
                witnesses.push(format!("composite not zero on {x}"));
            }
        }
        for x in self.elements(n, 8)? {
            if in_kernel(&x)? && !images.contains(&x) {
                middle_exact = false;
                witnesses.push(format!("{x} is in the kernel but not in the image of I^{}", n + 1));
            }
        }

        let surjective = match n {
            n if !(0..2).contains(&n) => true,
            0 => self.to_milnor(&self.one())? == MilnorKElement::Integer(1),
            _ => {
                let mut hit = vec![false; self.field.q() as usize];
                for x in self.elements(1, 0)? {
                    if let MilnorKElement::Unit(u) = self.to_milnor(&x)? {
                        hit[u.repr() as usize] = true;
                    }
                }
                hit[1..].iter().all(|&b| b)
            }
        };
        if !surjective {
            witnesses.push("right map not surjective".into());
        }
        let milnor_shape = match n {
            0 => "Z".to_string(),
            1 => format!("F_{}^*", self.field.q()),
            _ => "0".to_string(),
        };
        Ok(SesReport {
            degree: n,
            ideal_order: ideal.order(),
            kmw_shape: kmw.shape(),
            milnor_shape,
            injective,
            middle_exact,
            surjective,
            witnesses,
        })
    }

    /// Whether `η·: K^MW_n → K^MW_{n−1}` is onto, checked on lattices.
    fn eta_map_surjective(&self, n: i64) -> Result<bool, KmwError> {
        let target = n - 1;
        let moduli = self.moduli(target);
        let dim = moduli.len();
        if dim == 0 {
            return Ok(true);
        }
        let eta = self.eta()?;
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for (i, _) in self.moduli(n).iter().enumerate() {
            let mut c = vec![0; self.moduli(n).len()];
            c[i] = 1;
            gens.push(self.mul(&eta, &self.element(n, c)?)?.coords);
        }
        for (i, &m) in moduli.iter().enumerate() {
            let mut r = vec![0; dim];
            r[i] = m as i64;
            gens.push(r);
        }
        let lattice = IntLattice::new(dim, gens);
        Ok((0..dim).all(|i| {
            let mut e = vec![0; dim];
            e[i] = 1;
            lattice.contains(&e)
        }))
    }

    fn eta_map_injective(&self, n: i64) -> Result<bool, KmwError> {
        let eta = self.eta()?;
        for x in self.elements(n, 8)? {
            if !x.is_zero() && self.mul(&eta, &x)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `K^MW_•(F_q)[η^{-1}]` on the degrees `lo..=hi`, with the facts `4 = 0`
    /// and (iff `q ≡ 1 mod 4`) `2 = 0` checked in the colimit.
    pub fn localize_eta(&self, lo: i64, hi: i64) -> Result<EtaLocalization, KmwError> {
        let floor = self.config.min_degree + 1;
        let mut pieces = Vec::new();
        for d in lo..=hi {
            let mut stabilization_index = None;
            let mut stable_from = None;
            for k in 1..=(d - floor) {
                let start = d - k;
                let mut onto = true;
                let mut bijective = true;
                // maps K_s → K_{s−1} for s = start down to the floor
                let mut s = start;
                while s > floor {
                    onto &= self.eta_map_surjective(s)?;
                    if bijective {
                        bijective = self.eta_map_injective(s)? && onto;
                    }
                    if !onto {
                        break;
                    }
                    s -= 1;
                }
                if onto && stabilization_index.is_none() {
                    stabilization_index = Some(k);
                }
                if bijective && stable_from.is_none() {
                    stable_from = Some(start);
                }
                if stabilization_index.is_some() && stable_from.is_some() {
                    break;
                }
            }
            let stable_from = stable_from.unwrap_or(floor);
            let mut group = self.group(stable_from)?;
            group.degree = d;
            pieces.push(LocalizedPiece {
                degree: d,
                stabilization_index: stabilization_index.unwrap_or(d - floor),
                stable_from_degree: stable_from,
                group,
            });
        }
        // image of k·1 in the colimit of degree 0: push to a stable degree
        let stable = pieces.iter().find(|p| p.degree == 0).map_or(-1, |p| p.stable_from_degree);
        let push = |k: i64| -> Result<bool, KmwError> {
            let x = self.scale(&self.one(), k);
            Ok(self.mul(&x, &self.eta_power((-stable) as u32)?)?.is_zero())
        };
        let four_is_zero = push(4)?;
        let two_is_zero = push(2)?;
        let unit_additive_order = (1..=8).find(|&k| push(k).unwrap_or(false)).unwrap_or(0) as u64;
        Ok(EtaLocalization { pieces, four_is_zero, two_is_zero, unit_additive_order })
    }

    /// Coordinates of `x` relative to another generator `ω'` of `F_q^*`.
    pub fn change_generator(&self, x: &KmwElement, new_generator: &FieldElement) -> Result<Vec<i64>, KmwError> {
        self.same_field(x)?;
        let order = new_generator.multiplicative_order()?;
        if order != self.field.q() - 1 {
            return Err(KmwError::NotAGenerator);
        }
        // d with ω = ω'^d
        let n = self.field.q() - 1;
        let d = (0..n).find(|&k| new_generator.pow(k) == self.field.primitive_element()).expect("generators generate")
            as i64;
        let mut coords = x.coords.clone();
        match x.degree {
            1 => coords[0] *= d,
            0 => coords[1] *= d,
            m if m < 0 && self.q_mod_4() == 1 => coords[1] *= d,
            _ => {}
        }
        self.reduce_coords(x.degree, &mut coords);
        Ok(coords)
    }
}

/// Writes `w ∈ I^k` as a sum of `k`-fold Pfister products with entries in `{1, ω}`.
fn pfister_decomposition(field: &PrimePower, k: usize, w: &WittClass) -> Vec<Vec<FieldElement>> {
    let reps = [field.one(), field.primitive_element()];
    let mut tuples: Vec<Vec<FieldElement>> = vec![vec![]];
    for _ in 0..k {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                reps.iter().map(move |a| {
                    let mut t = t.clone();
                    t.push(a.clone());
                    t
                })
            })
            .collect();
    }
    let class = |t: &Vec<FieldElement>| {
        t.iter().map(|a| WittClass::pfister(a).unwrap()).fold(WittClass::one(field), |acc, p| acc.mul(&p).unwrap())
    };
    // breadth-first search over sums of Pfister products
    let mut seen: Vec<(WittClass, Vec<usize>)> = vec![(WittClass::zero(field), vec![])];
    let mut i = 0;
    while i < seen.len() {
        if &seen[i].0 == w {
            return seen[i].1.iter().map(|&j| tuples[j].clone()).collect();
        }
        for (j, t) in tuples.iter().enumerate() {
            let next = seen[i].0.add(&class(t)).unwrap();
            if !seen.iter().any(|(c, _)| c == &next) {
                let mut path = seen[i].1.clone();
                path.push(j);
                seen.push((next, path));
            }
        }
        i += 1;
    }
    Vec::new()
}

/// Entry of the degree-wise table of `K^MW_•` of the algebraic closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureEntry {
    pub degree: i64,
    pub group: String,
}

/// Symbolic table of `K^MW_n(F̄_p)` for `n ∈ [lo, hi]`; no element arithmetic.
pub fn kmw_closure_table(p: u64, lo: i64, hi: i64) -> Result<Vec<ClosureEntry>, FieldError> {
    if p == 2 {
        return Err(FieldError::EvenCharacteristic);
    }
    if !crate::finite_field::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok((lo..=hi)
        .map(|n| ClosureEntry {
            degree: n,
            group: match n {
                n if n < 0 => "Z/2".into(),
                0 => "Z".into(),
                1 => format!("F^* (colimit of the unit groups of F_{p}^k, k >= 1)"),
                _ => "0".into(),
            },
        })
        .collect())
}

/// An idempotent of `GW(F_q)[1/p]`: rank in `Z[1/p]`, discriminant bit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwIdempotent {
    pub rank: Ratio<i64>,
    pub disc: u8,
}

/// Idempotents of `GW(F_q)[1/p]` among `(a, b)` with `a = k/p^j`, `|k| ≤ bound`,
/// `j ≤ 2`, and the nontrivial splittings `1 = e₁ + e₂` found among them.
pub fn gw_idempotents(field: &PrimePower, bound: i64) -> (Vec<GwIdempotent>, Vec<(GwIdempotent, GwIdempotent)>) {
    let p = field.p() as i64;
    let mut candidates = Vec::new();
    for j in 0..=2u32 {
        for k in -bound..=bound {
            for b in 0..=1u8 {
                candidates.push(GwIdempotent { rank: Ratio::new(k, p.pow(j)), disc: b });
            }
        }
    }
    // (a, b)² = (a², 2ab) and 2ab vanishes in Z/2 ⊗ Z[1/p]
    let square = |e: &GwIdempotent| GwIdempotent { rank: e.rank * e.rank, disc: 0 };
    let mut idempotents: Vec<GwIdempotent> = Vec::new();
    for c in candidates {
        if square(&c) == c && !idempotents.contains(&c) {
            idempotents.push(c);
        }
    }
    let one = GwIdempotent { rank: Ratio::from_integer(1), disc: 0 };
    let zero = GwIdempotent { rank: Ratio::from_integer(0), disc: 0 };
    let mut splittings = Vec::new();
    for a in &idempotents {
        for b in &idempotents {
            if *a != zero && *b != zero && a.rank + b.rank == one.rank && (a.disc ^ b.disc) == 0 {
                splittings.push((a.clone(), b.clone()));
            }
        }
    }
    (idempotents, splittings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::field_of_order;

    fn ring(q: u64) -> MilnorWitt {
        MilnorWitt::new(&field_of_order(q).unwrap())
    }

    #[test]
    fn group_shapes() {
        assert!(ring(7).group(2).unwrap().is_trivial());
        assert_eq!(ring(13).group(0).unwrap().invariant_factors, vec![0, 2]);
        assert_eq!(ring(11).group(-3).unwrap().invariant_factors, vec![4]);
        assert_eq!(ring(11).group(-3).unwrap().generators, vec!["eta^3"]);
        assert_eq!(ring(5).group(-1).unwrap().generators, vec!["eta", "eta^2[w]"]);
        assert_eq!(ring(7).group(1).unwrap().invariant_factors, vec![6]);
        assert!(matches!(ring(7).group(65), Err(KmwError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn basic_products() {
        let r = ring(7);
        let e2 = r.eta_power(2).unwrap();
        let e3 = r.eta_power(3).unwrap();
        assert_eq!(r.mul(&e2, &e3).unwrap(), r.eta_power(5).unwrap());
        let w = r.symbol(&r.field().primitive_element()).unwrap();
        assert!(r.mul(&w, &w).unwrap().is_zero());
        let r5 = ring(5);
        let ew = r5.element(0, vec![0, 1]).unwrap();
        assert!(r5.mul(&ew, &ew).unwrap().is_zero());
        assert_eq!(r.add(&w, &e2), Err(KmwError::DegreeMismatch(1, -2)));
    }

    #[test]
    fn eta_kills_h() {
        for q in [3, 5, 7, 9, 11, 13] {
            let r = ring(q);
            assert!(r.mul(&r.eta().unwrap(), &r.hyperbolic()).unwrap().is_zero(), "q = {q}");
        }
    }

    #[test]
    fn torsion_in_negative_degrees() {
        let r = ring(3);
        let eta = r.eta().unwrap();
        assert!(r.scale(&eta, 4).is_zero());
        assert!(!r.scale(&eta, 2).is_zero());
    }

    #[test]
    fn milnor_quotient() {
        let r = ring(7);
        let w = r.field().primitive_element();
        assert_eq!(r.to_milnor(&r.symbol(&w).unwrap()).unwrap(), MilnorKElement::Unit(w));
        assert_eq!(r.to_milnor(&r.element(0, vec![0, 1]).unwrap()).unwrap(), MilnorKElement::Integer(0));
        assert_eq!(r.to_milnor(&r.one()).unwrap(), MilnorKElement::Integer(1));
        assert_eq!(r.to_milnor(&r.eta().unwrap()), Err(KmwError::NegativeDegree(-1)));
    }

    #[test]
    fn fundamental_ideal_map() {
        let r = ring(5);
        let f = r.field().clone();
        let pf = WittClass::pfister(&f.primitive_element()).unwrap();
        assert_eq!(r.from_fundamental_ideal(0, &pf).unwrap(), r.element(0, vec![0, 1]).unwrap());
        assert_eq!(r.from_fundamental_ideal(-1, &WittClass::one(&f)).unwrap(), r.eta().unwrap());
        assert!(r.from_fundamental_ideal(3, &WittClass::zero(&f)).unwrap().is_zero());
        assert_eq!(r.from_fundamental_ideal(0, &WittClass::one(&f)), Err(KmwError::NotInIdealPower(1)));
    }

    #[test]
    fn ses_examples() {
        let r3 = ring(3).verify_ses(-2).unwrap();
        assert!(r3.passed(), "{r3:?}");
        assert_eq!(r3.ideal_order, 4);
        let r5 = ring(5).verify_ses(0).unwrap();
        assert!(r5.passed(), "{r5:?}");
        assert_eq!(r5.ideal_order, 2);
        assert!(ring(7).verify_ses(2).unwrap().passed());
    }

    #[test]
    fn gw_correspondence() {
        let r = ring(7);
        let f = r.field().clone();
        let h = r.hyperbolic();
        assert_eq!(r.to_gw(&h).unwrap(), GWClass::hyperbolic(&f));
        assert_eq!(r.to_gw(&r.one()).unwrap(), GWClass::new(&f, 1, 0));
        assert!(matches!(r.to_gw(&r.eta().unwrap()), Err(KmwError::DegreeMismatch(-1, 0))));
    }

    #[test]
    fn eta_is_not_nilpotent() {
        assert!(ring(3).eta_power_nonzero(64).unwrap());
        assert!(ring(5).eta_power_nonzero(1).unwrap());
        assert!(ring(9).eta_power_nonzero(10).unwrap());
    }

    #[test]
    fn localization() {
        let l3 = ring(3).localize_eta(-3, 1).unwrap();
        assert!(l3.four_is_zero && !l3.two_is_zero);
        assert_eq!(l3.unit_additive_order, 4);
        assert!(l3.pieces.iter().all(|p| p.group.invariant_factors == vec![4]));
        let l5 = ring(5).localize_eta(-3, 1).unwrap();
        assert!(l5.four_is_zero && l5.two_is_zero);
        assert!(l5.pieces.iter().all(|p| p.stabilization_index == 1));
    }

    #[test]
    fn closure_table() {
        let t = kmw_closure_table(5, -3, 4).unwrap();
        let at = |n: i64| t.iter().find(|e| e.degree == n).unwrap().group.clone();
        assert_eq!(at(-2), "Z/2");
        assert_eq!(at(0), "Z");
        assert_eq!(at(3), "0");
        assert!(kmw_closure_table(2, 0, 0).is_err());
    }

    #[test]
    fn only_trivial_idempotents() {
        let (idem, split) = gw_idempotents(&field_of_order(7).unwrap(), 20);
        assert_eq!(idem.len(), 2);
        assert!(split.is_empty());
    }

    #[test]
    fn generator_change() {
        let r = ring(7);
        let f = r.field().clone();
        // generators of F_7^*: 3 and 5 = 3^5
        let five = f.element(5).unwrap();
        let w = r.symbol(&f.primitive_element()).unwrap();
        assert_eq!(r.change_generator(&w, &five).unwrap(), vec![5]);
        let two = r.symbol(&f.element(2).unwrap()).unwrap();
        // 2 = 3^2 = 5^4
        assert_eq!(r.change_generator(&two, &five).unwrap(), vec![4]);
    }
}

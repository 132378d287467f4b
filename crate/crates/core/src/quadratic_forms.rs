//! Quadratic forms over `F_q`: diagonalization, isotropy, Witt decomposition,
//! and the rings `W(F_q)` and `GW(F_q)`.
//!
//! Witt classes are kept in a canonical anisotropic form so that equality of
//! classes is equality of values: `⟨⟩`, `⟨1⟩`, `⟨ω⟩` or `⟨1, −ω⟩`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::finite_field::{FieldElement, PrimePower};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("the form is degenerate (zero determinant)")]
    DegenerateForm,
    #[error("diagonal entries must be nonzero")]
    ZeroEntry,
    #[error("the Gram matrix is not square and symmetric")]
    NotSymmetric,
    #[error("operands live over different fields")]
    FieldMismatch,
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramForm {
    field: PrimePower,
    gram: Vec<Vec<FieldElement>>,
}

impl GramForm {
    pub fn new(field: &PrimePower, gram: Vec<Vec<FieldElement>>) -> Result<Self, FormError> {
        let n = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != n {
                return Err(FormError::NotSymmetric);
            }
            for (j, x) in row.iter().enumerate() {
                if x.field() != field {
                    return Err(FormError::FieldMismatch);
                }
                if gram[j][i] != *x {
                    return Err(FormError::NotSymmetric);
                }
            }
        }
        Ok(GramForm { field: field.clone(), gram })
    }

    pub fn from_ints(field: &PrimePower, gram: &[Vec<i64>]) -> Result<Self, FormError> {
        let g = gram.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        GramForm::new(field, g)
    }

    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<FieldElement>] {
        &self.gram
    }

    pub fn bilinear(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let mut acc = self.field.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc = acc + xi.clone() * self.gram[i][j].clone() * yj.clone();
            }
        }
        acc
    }

    pub fn value(&self, x: &[FieldElement]) -> FieldElement {
        self.bilinear(x, x)
    }

    pub fn determinant(&self) -> FieldElement {
        determinant(&self.field, &self.gram)
    }

    /// Gram matrix of the form restricted to the span of `basis`.
    fn restrict(&self, basis: &[Vec<FieldElement>]) -> GramForm {
        let gram = basis.iter().map(|u| basis.iter().map(|v| self.bilinear(u, v)).collect()).collect();
        GramForm { field: self.field.clone(), gram }
    }
}

fn determinant(field: &PrimePower, m: &[Vec<FieldElement>]) -> FieldElement {
    let n = m.len();
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pv = a[c][c].clone();
        det = det * pv.clone();
        let inv = pv.inv().expect("nonzero pivot");
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone() * inv.clone();
            for k in c..n {
                let sub = f.clone() * a[c][k].clone();
                a[r][k] = a[r][k].clone() - sub;
            }
        }
    }
    det
}

/// Basis of `{x : A x = 0}` over `F_q` (rows of `A` given).
fn kernel(field: &PrimePower, rows: &[Vec<FieldElement>], n: usize) -> Vec<Vec<FieldElement>> {
    let mut a: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].inv().expect("nonzero pivot");
        a[r] = a[r].iter().map(|x| x.clone() * inv.clone()).collect();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); n];
            v[fc] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc].clone();
            }
            v
        })
        .collect()
}

/// Diagonal form `⟨a₁, …, aₙ⟩` with nonzero entries.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    field: PrimePower,
    entries: Vec<FieldElement>,
}

impl fmt::Debug for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl DiagonalForm {
    pub fn new(field: &PrimePower, entries: Vec<FieldElement>) -> Result<Self, FormError> {
        if entries.iter().any(|e| e.field() != field) {
            return Err(FormError::FieldMismatch);
        }
        if entries.iter().any(|e| e.is_zero()) {
            return Err(FormError::ZeroEntry);
        }
        Ok(DiagonalForm { field: field.clone(), entries })
    }

    pub fn from_ints(field: &PrimePower, entries: &[i64]) -> Result<Self, FormError> {
        DiagonalForm::new(field, entries.iter().map(|&x| field.from_int(x)).collect())
    }

    pub fn empty(field: &PrimePower) -> Self {
        DiagonalForm { field: field.clone(), entries: Vec::new() }
    }

    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Square class of the determinant (0 = square).
    pub fn discriminant_class(&self) -> u8 {
        self.entries.iter().map(|e| e.square_class().expect("nonzero entry")).fold(0, |a, b| a ^ b)
    }

    pub fn orthogonal_sum(&self, other: &DiagonalForm) -> Result<DiagonalForm, FormError> {
        if self.field != other.field {
            return Err(FormError::FieldMismatch);
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(DiagonalForm { field: self.field.clone(), entries })
    }

    pub fn tensor(&self, other: &DiagonalForm) -> Result<DiagonalForm, FormError> {
        if self.field != other.field {
            return Err(FormError::FieldMismatch);
        }
        let entries =
            self.entries.iter().flat_map(|a| other.entries.iter().map(move |b| a.clone() * b.clone())).collect();
        Ok(DiagonalForm { field: self.field.clone(), entries })
    }

    pub fn to_gram(&self) -> GramForm {
        let n = self.rank();
        let gram = (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.entries[i].clone() } else { self.field.zero() }).collect())
            .collect();
        GramForm { field: self.field.clone(), gram }
    }

    pub fn value(&self, x: &[FieldElement]) -> FieldElement {
        self.entries.iter().zip(x).fold(self.field.zero(), |acc, (a, xi)| acc + a.clone() * xi.clone() * xi.clone())
    }
}

/// Result of diagonalizing a Gram form: `basis` rows `b_i` satisfy
/// `B(b_i, b_j) = δ_ij · form.entries[i]`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub form: DiagonalForm,
    pub basis: Vec<Vec<FieldElement>>,
}

/// Orthogonal basis by symmetric Gram-Schmidt.
pub fn diagonalize(g: &GramForm) -> Result<DiagonalForm, FormError> {
    Ok(diagonalize_with_basis(g)?.form)
}

pub fn diagonalize_with_basis(g: &GramForm) -> Result<Diagonalization, FormError> {
    if g.determinant().is_zero() {
        return Err(FormError::DegenerateForm);
    }
    let field = g.field.clone();
    let n = g.dim();
    let mut remaining: Vec<Vec<FieldElement>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect();
    let mut basis = Vec::with_capacity(n);
    let mut entries = Vec::with_capacity(n);
    while !remaining.is_empty() {
        // choose an anisotropic vector in the remaining span
        let pick = remaining
            .iter()
            .position(|v| !g.value(v).is_zero())
            .map(|i| remaining.remove(i))
            .or_else(|| {
                // every basis vector isotropic: u + v has value 2B(u, v)
                (1..remaining.len()).find_map(|j| {
                    let s: Vec<FieldElement> = remaining[0].iter().zip(&remaining[j]).map(|(a, b)| a + b).collect();
                    (!g.value(&s).is_zero()).then(|| {
                        remaining[0] = s.clone();
                        remaining.remove(0)
                    })
                })
            })
            .ok_or(FormError::DegenerateForm)?;
        let a = g.value(&pick);
        let a_inv = a.inv().expect("anisotropic pick");
        // project the rest orthogonally to `pick`
        for v in remaining.iter_mut() {
            let c = g.bilinear(v, &pick) * a_inv.clone();
            for (x, y) in v.iter_mut().zip(&pick) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        basis.push(pick);
        entries.push(a);
    }
    Ok(Diagonalization { form: DiagonalForm { field, entries }, basis })
}

/// A nonzero isotropic vector of `f`, if one exists.
///
/// Ranks up to three are searched exhaustively over projective points (the last
/// free coordinate is solved with a square test). For rank at least four the
/// rank-three sub-form is searched, which always succeeds over a finite field.
pub fn isotropic_vector(f: &DiagonalForm) -> Option<Vec<FieldElement>> {
    let field = &f.field;
    let n = f.rank();
    let a = &f.entries;
    match n {
        0 | 1 => None,
        2 => {
            // a0 x^2 + a1 = 0
            let t = -(a[1].clone() * a[0].inv().unwrap());
            t.sqrt().map(|x| vec![x, field.one()])
        }
        _ => {
            // points (x, y, 1, 0, …) then (x, 1, 0, …)
            let sub = DiagonalForm { field: field.clone(), entries: a[..2].to_vec() };
            let inv1 = a[1].inv().unwrap();
            for x in field.elements() {
                let rhs = -(a[0].clone() * x.clone() * x.clone() + a[2].clone()) * inv1.clone();
                if let Some(y) = rhs.sqrt() {
                    let mut v = vec![x, y, field.one()];
                    v.resize(n, field.zero());
                    return Some(v);
                }
            }
            isotropic_vector(&sub).map(|mut v| {
                v.resize(n, field.zero());
                v
            })
        }
    }
}

pub fn is_isotropic(f: &DiagonalForm) -> bool {
    isotropic_vector(f).is_some()
}

/// Splits off hyperbolic planes until the remainder is anisotropic.
pub fn witt_decompose(f: &DiagonalForm) -> (usize, DiagonalForm) {
    let mut current = f.clone();
    let mut hyperbolic = 0;
    while let Some(v) = isotropic_vector(&current) {
        current = split_hyperbolic(&current, &v);
        hyperbolic += 1;
    }
    (hyperbolic, current)
}

/// Orthogonal complement of a hyperbolic plane through the isotropic `v`.
fn split_hyperbolic(f: &DiagonalForm, v: &[FieldElement]) -> DiagonalForm {
    let field = &f.field;
    let g = f.to_gram();
    let n = f.rank();
    // w with B(v, w) ≠ 0: a coordinate vector where a_i v_i ≠ 0
    let i = (0..n).find(|&i| !v[i].is_zero()).expect("nonzero isotropic vector");
    let mut w = vec![field.zero(); n];
    w[i] = field.one();
    let bvw = g.bilinear(v, &w);
    let scale = bvw.inv().unwrap();
    w.iter_mut().for_each(|x| *x = x.clone() * scale.clone());
    // make w isotropic: w ← w − (Q(w)/2) v
    let two_inv = field.from_int(2).inv().unwrap();
    let c = g.value(&w) * two_inv;
    for (x, y) in w.iter_mut().zip(v) {
        *x = x.clone() - c.clone() * y.clone();
    }
    // complement: x with B(x, v) = B(x, w) = 0
    let rows: Vec<Vec<FieldElement>> =
        [v.to_vec(), w].iter().map(|u| (0..n).map(|j| u[j].clone() * f.entries[j].clone()).collect()).collect();
    let comp = kernel(field, &rows, n);
    if comp.is_empty() {
        return DiagonalForm::empty(field);
    }
    diagonalize(&g.restrict(&comp)).expect("complement of a hyperbolic plane is nondegenerate")
}

/// Element of `W(F_q)`, stored as its canonical anisotropic representative.
#[derive(Clone, PartialEq, Eq)]
pub struct WittClass {
    field: PrimePower,
    kernel: DiagonalForm,
}

impl fmt::Debug for WittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.kernel)
    }
}

impl fmt::Display for WittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.kernel)
    }
}

/// Canonical anisotropic form with the given rank (≤ 2) and determinant class.
fn canonical_anisotropic(field: &PrimePower, rank: usize, disc: u8) -> DiagonalForm {
    let w = field.primitive_element();
    let entries = match (rank, disc) {
        (0, _) => vec![],
        (1, 0) => vec![field.one()],
        (1, _) => vec![w],
        (2, _) => vec![field.one(), -w],
        _ => unreachable!("anisotropic forms over F_q have rank at most 2"),
    };
    DiagonalForm { field: field.clone(), entries }
}

impl WittClass {
    pub fn of(f: &DiagonalForm) -> WittClass {
        let (_, kernel) = witt_decompose(f);
        debug_assert!(kernel.rank() <= 2);
        let canon = canonical_anisotropic(&f.field, kernel.rank(), kernel.discriminant_class());
        WittClass { field: f.field.clone(), kernel: canon }
    }

    pub fn zero(field: &PrimePower) -> WittClass {
        WittClass { field: field.clone(), kernel: DiagonalForm::empty(field) }
    }

    pub fn one(field: &PrimePower) -> WittClass {
        WittClass::of(&DiagonalForm { field: field.clone(), entries: vec![field.one()] })
    }

    /// `⟨a⟩`.
    pub fn unary(a: &FieldElement) -> Result<WittClass, FormError> {
        Ok(WittClass::of(&DiagonalForm::new(a.field(), vec![a.clone()])?))
    }

    /// Pfister form `⟨1, −a⟩`.
    pub fn pfister(a: &FieldElement) -> Result<WittClass, FormError> {
        let field = a.field();
        Ok(WittClass::of(&DiagonalForm::new(field, vec![field.one(), -a.clone()])?))
    }

    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    pub fn anisotropic_kernel(&self) -> &DiagonalForm {
        &self.kernel
    }

    pub fn is_zero(&self) -> bool {
        self.kernel.rank() == 0
    }

    /// Rank of the anisotropic representative mod 2, i.e. the map `W → Z/2`.
    pub fn rank_parity(&self) -> u8 {
        (self.kernel.rank() % 2) as u8
    }

    pub fn add(&self, other: &WittClass) -> Result<WittClass, FormError> {
        Ok(WittClass::of(&self.kernel.orthogonal_sum(&other.kernel)?))
    }

    pub fn mul(&self, other: &WittClass) -> Result<WittClass, FormError> {
        Ok(WittClass::of(&self.kernel.tensor(&other.kernel)?))
    }

    pub fn neg(&self) -> WittClass {
        let entries = self.kernel.entries.iter().map(|e| -e.clone()).collect();
        WittClass::of(&DiagonalForm { field: self.field.clone(), entries })
    }

    pub fn scale(&self, k: i64) -> WittClass {
        let base = if k < 0 { self.neg() } else { self.clone() };
        (0..k.unsigned_abs()).fold(WittClass::zero(&self.field), |acc, _| acc.add(&base).unwrap())
    }

    /// Additive order (1, 2 or 4).
    pub fn additive_order(&self) -> u32 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_zero() {
            acc = acc.add(self).unwrap();
            k += 1;
        }
        k
    }

    /// All four classes in a fixed order: `0, ⟨1⟩, ⟨ω⟩, ⟨1,−ω⟩`.
    pub fn all(field: &PrimePower) -> Vec<WittClass> {
        [(0, 0), (1, 0), (1, 1), (2, 1)]
            .into_iter()
            .map(|(r, d)| WittClass { field: field.clone(), kernel: canonical_anisotropic(field, r, d) })
            .collect()
    }
}

/// Isomorphism type of `W(F_q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WittRingType {
    /// `Z/4`, when `q ≡ 3 mod 4`.
    Z4,
    /// `Z/2[ε]/ε²`, when `q ≡ 1 mod 4`.
    DualNumbersF2,
}

impl fmt::Display for WittRingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WittRingType::Z4 => write!(f, "Z/4"),
            WittRingType::DualNumbersF2 => write!(f, "Z/2[e]/e^2"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WittRingStructure {
    pub kind: WittRingType,
    /// Named ring elements and the Witt classes they denote.
    pub generator_table: Vec<(String, WittClass)>,
    /// Additive order of `⟨1⟩`.
    pub order_of_one: u32,
}

pub fn witt_ring_structure(field: &PrimePower) -> WittRingStructure {
    let one = WittClass::one(field);
    let kind = if field.q_mod_4() == 3 { WittRingType::Z4 } else { WittRingType::DualNumbersF2 };
    let generator_table = match kind {
        WittRingType::Z4 => (0..4).map(|k| (format!("{k}"), one.scale(k))).collect(),
        WittRingType::DualNumbersF2 => {
            let eps = WittClass::pfister(&field.primitive_element()).unwrap();
            vec![
                ("0".into(), WittClass::zero(field)),
                ("1".into(), one.clone()),
                ("e".into(), eps.clone()),
                ("1+e".into(), one.add(&eps).unwrap()),
            ]
        }
    };
    WittRingStructure { kind, generator_table, order_of_one: one.additive_order() }
}

/// Element of `GW(F_q) ≅ Z ⊕ Z/2`: virtual rank and determinant square class.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct GWClass {
    #[serde(skip)]
    field: PrimePower,
    pub rank: i64,
    pub disc: u8,
}

impl fmt::Debug for GWClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GW({}, {})", self.rank, self.disc)
    }
}

impl fmt::Display for GWClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rank {}, disc {})", self.rank, self.disc)
    }
}

pub fn gw_class(f: &DiagonalForm) -> GWClass {
    GWClass { field: f.field.clone(), rank: f.rank() as i64, disc: f.discriminant_class() }
}

impl GWClass {
    pub fn new(field: &PrimePower, rank: i64, disc: u8) -> GWClass {
        GWClass { field: field.clone(), rank, disc: disc & 1 }
    }

    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    /// Class of the hyperbolic plane `⟨1, −1⟩`.
    pub fn hyperbolic(field: &PrimePower) -> GWClass {
        gw_class(&DiagonalForm { field: field.clone(), entries: vec![field.one(), field.minus_one()] })
    }

    pub fn add(&self, o: &GWClass) -> Result<GWClass, FormError> {
        self.check(o)?;
        Ok(GWClass::new(&self.field, self.rank + o.rank, self.disc ^ o.disc))
    }

    pub fn neg(&self) -> GWClass {
        GWClass::new(&self.field, -self.rank, self.disc)
    }

    /// `det(f ⊗ g) = det(f)^{rk g} · det(g)^{rk f}`.
    pub fn mul(&self, o: &GWClass) -> Result<GWClass, FormError> {
        self.check(o)?;
        let disc = ((self.rank.rem_euclid(2) as u8) & o.disc) ^ ((o.rank.rem_euclid(2) as u8) & self.disc);
        Ok(GWClass::new(&self.field, self.rank * o.rank, disc))
    }

    fn check(&self, o: &GWClass) -> Result<(), FormError> {
        if self.field != o.field {
            return Err(FormError::FieldMismatch);
        }
        Ok(())
    }

    /// An honest form representing `self + k·h` for the least `k ≥ 0` that admits one.
    pub fn representative(&self) -> DiagonalForm {
        let field = &self.field;
        let mut c = self.clone();
        let h = GWClass::hyperbolic(field);
        while c.rank < 0 || (c.rank == 0 && c.disc == 1) {
            c = c.add(&h).unwrap();
        }
        let mut entries = vec![field.one(); c.rank as usize];
        if c.disc == 1 {
            if let Some(last) = entries.last_mut() {
                *last = field.primitive_element();
            }
        }
        DiagonalForm { field: field.clone(), entries }
    }

    /// Image under `GW → W = GW/(h)`.
    pub fn witt_class(&self) -> WittClass {
        WittClass::of(&self.representative())
    }
}

/// A subgroup of `W(F_q)` with explicit generators.
#[derive(Clone, Debug)]
pub struct IdealPower {
    pub n: u32,
    pub generators: Vec<WittClass>,
    pub elements: Vec<WittClass>,
}

impl IdealPower {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &WittClass) -> bool {
        self.elements.contains(w)
    }
}

/// Additive closure of a set of classes.
fn span(field: &PrimePower, gens: &[WittClass]) -> Vec<WittClass> {
    let mut elems = vec![WittClass::zero(field)];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x.add(g).unwrap();
                if !elems.contains(&y) {
                    elems.push(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    WittClass::all(field).into_iter().filter(|c| elems.contains(c)).collect()
}

/// `Iⁿ ⊆ W(F_q)`, generated by `n`-fold products of Pfister forms `⟨1, −a⟩`.
///
/// Pfister classes depend only on the square class of `a`, so `a` ranges over
/// `{1, ω}`; the full range is exercised in tests.
pub fn fundamental_ideal_power(field: &PrimePower, n: u32) -> IdealPower {
    if n == 0 {
        let all = WittClass::all(field);
        return IdealPower { n, generators: vec![WittClass::one(field)], elements: all };
    }
    let pfisters: Vec<WittClass> =
        [field.one(), field.primitive_element()].iter().map(|a| WittClass::pfister(a).unwrap()).collect();
    let mut products = pfisters.clone();
    for _ in 1..n {
        products = products.iter().flat_map(|x| pfisters.iter().map(move |y| x.mul(y).unwrap())).collect();
    }
    let mut generators: Vec<WittClass> = Vec::new();
    for g in products {
        if !g.is_zero() && !generators.contains(&g) {
            generators.push(g);
        }
    }
    let elements = span(field, &generators);
    IdealPower { n, generators, elements }
}

/// `Iⁿ` with the convention `Iⁿ = W` for `n ≤ 0`.
pub fn fundamental_ideal_power_signed(field: &PrimePower, n: i64) -> IdealPower {
    fundamental_ideal_power(field, n.max(0) as u32)
}

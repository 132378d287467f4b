//! Exact arithmetic in finite fields `F_q` of odd characteristic.
//!
//! A field is described by a [`PrimePower`] handle, which owns the chosen
//! irreducible modulus and lazily caches the multiplicative generator `ω` and
//! (for `q ≤ 2^16`) full exponent/logarithm tables. Elements are encoded by an
//! integer `repr = c_0 + c_1 p + … + c_{e-1} p^{e-1}` where `c_i` are the
//! coefficients of the residue polynomial; "representative order" is the
//! numeric order of this encoding.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

/// Default upper bound on the field cardinality.
pub const DEFAULT_CARDINALITY_BOUND: u64 = 1 << 20;

/// Fields at or below this size get precomputed log tables.
pub const LOG_TABLE_BOUND: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("field size {p}^{e} exceeds the bound {bound}")]
    BoundExceeded { p: u64, e: u32, bound: u64 },
    #[error("{0} is not an odd prime power")]
    NotPrimePower(u64),
    #[error("zero has no inverse, logarithm or square class")]
    ZeroInput,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("representative {0} is out of range for this field")]
    ReprOutOfRange(u64),
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus, coefficients low to high (length `e + 1`).
    modulus: Vec<u32>,
    generator: OnceLock<u32>,
    tables: OnceLock<Option<LogTables>>,
    order_factors: Vec<u64>,
}

/// Descriptor of `F_q`, `q = p^e`. Cheap to clone.
#[derive(Clone)]
pub struct PrimePower {
    inner: Arc<FieldInner>,
}

impl PartialEq for PrimePower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || (self.inner.p == other.inner.p && self.inner.e == other.inner.e)
    }
}

impl Eq for PrimePower {}

impl fmt::Debug for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds `F_{p^e}` with the default cardinality bound.
pub fn make_field(p: u64, e: u32) -> Result<PrimePower, FieldError> {
    make_field_bounded(p, e, DEFAULT_CARDINALITY_BOUND)
}

pub fn make_field_bounded(p: u64, e: u32, bound: u64) -> Result<PrimePower, FieldError> {
    if p == 2 {
        return Err(FieldError::EvenCharacteristic);
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if e == 0 {
        return Err(FieldError::ZeroExponent);
    }
    let q = p.checked_pow(e).filter(|&q| q <= bound && q < u32::MAX as u64).ok_or(FieldError::BoundExceeded {
        p,
        e,
        bound,
    })?;
    let modulus = least_irreducible(p as u32, e);
    Ok(PrimePower {
        inner: Arc::new(FieldInner {
            p: p as u32,
            e,
            q: q as u32,
            modulus,
            generator: OnceLock::new(),
            tables: OnceLock::new(),
            order_factors: prime_factors(q - 1),
        }),
    })
}

/// Builds the field with `q` elements, factoring `q` as an odd prime power.
pub fn field_of_order(q: u64) -> Result<PrimePower, FieldError> {
    if q < 3 {
        return Err(FieldError::NotPrimePower(q));
    }
    if q.is_multiple_of(2) {
        return if q.is_power_of_two() {
            Err(FieldError::EvenCharacteristic)
        } else {
            Err(FieldError::NotPrimePower(q))
        };
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    make_field(p, e)
}

// ---- polynomial helpers over Z/p, coefficients low to high ----

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    poly_trim(&mut a);
    while a.len() > dm {
        let lead = *a.last().unwrap() as u64;
        let shift = a.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = (lead * c as u64) % p as u64;
            let slot = &mut a[shift + i];
            *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
        }
        poly_trim(&mut a);
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    poly_trim(&mut out);
    out
}

fn poly_gcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u32) -> Vec<u32> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // make b monic
        let inv = mod_inv(*b.last().unwrap(), p);
        let monic: Vec<u32> = b.iter().map(|&c| ((c as u64 * inv as u64) % p as u64) as u32).collect();
        let r = poly_rem(a, &monic, p);
        a = monic;
        b = r;
    }
    a
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u32, p: u32) -> u32 {
    mod_pow(a as u64, p as u64 - 2, p as u64) as u32
}

/// `x^(p^k) mod m`, by repeated p-th powering.
fn frobenius_power_of_x(m: &[u32], p: u32, k: u32) -> Vec<u32> {
    let mut cur = poly_rem(vec![0, 1], m, p);
    for _ in 0..k {
        cur = poly_pow_mod(&cur, p as u64, m, p);
    }
    cur
}

fn poly_pow_mod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_rem(poly_mul(&acc, &b, p), m, p);
        }
        b = poly_rem(poly_mul(&b, &b, p), m, p);
        exp >>= 1;
    }
    acc
}

/// Rabin's irreducibility test for a monic polynomial of degree `e`.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let e = (m.len() - 1) as u32;
    if e == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    if poly_sub(&frobenius_power_of_x(m, p, e), &x, p) != Vec::<u32>::new() {
        return false;
    }
    for r in prime_factors(e as u64) {
        let h = poly_sub(&frobenius_power_of_x(m, p, e / r as u32), &x, p);
        let g = poly_gcd(m.to_vec(), h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Monic irreducible of degree `e` whose lower coefficients, read as a base-p
/// integer, are least.
fn least_irreducible(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(e);
    for code in 0..count {
        let mut m = decode(code as u32, p, e as usize);
        m.push(1);
        if m[0] != 0 && is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn decode(mut repr: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(repr % p);
        repr /= p;
    }
    out
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

impl PrimePower {
    pub fn p(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u64 {
        self.inner.q as u64
    }

    /// `q mod 4`, either 1 or 3.
    pub fn q_mod_4(&self) -> u64 {
        self.q() % 4
    }

    /// The chosen monic modulus, coefficients low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn element(&self, repr: u64) -> Result<FieldElement, FieldError> {
        if repr >= self.q() {
            return Err(FieldError::ReprOutOfRange(repr));
        }
        Ok(FieldElement { field: self.clone(), repr: repr as u32 })
    }

    /// The element with integer value `n`, reduced mod `p`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.p() as i64;
        FieldElement { field: self.clone(), repr: n.rem_euclid(p) as u32 }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), repr: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), repr: 1 }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |repr| FieldElement { field: self.clone(), repr })
    }

    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.inner.q).map(move |repr| FieldElement { field: self.clone(), repr })
    }

    fn mul_repr(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.inner;
        if inner.e == 1 {
            return ((a as u64 * b as u64) % inner.p as u64) as u32;
        }
        if let Some(Some(t)) = inner.tables.get() {
            let n = (inner.q - 1) as usize;
            let s = t.log[a as usize] as usize + t.log[b as usize] as usize;
            return t.exp[if s >= n { s - n } else { s }];
        }
        let e = inner.e as usize;
        let prod = poly_mul(&decode(a, inner.p, e), &decode(b, inner.p, e), inner.p);
        let mut r = poly_rem(prod, &inner.modulus, inner.p);
        r.resize(e, 0);
        encode(&r, inner.p)
    }

    fn add_repr(&self, a: u32, b: u32) -> u32 {
        let p = self.inner.p;
        if self.inner.e == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn neg_repr(&self, a: u32) -> u32 {
        let p = self.inner.p;
        if self.inner.e == 1 {
            return (p - a) % p;
        }
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn pow_repr(&self, base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_repr(acc, b);
            }
            b = self.mul_repr(b, b);
            exp >>= 1;
        }
        acc
    }

    fn order_is_full(&self, repr: u32) -> bool {
        let n = self.q() - 1;
        repr != 0
            && self.pow_repr(repr, n) == 1
            && self.inner.order_factors.iter().all(|&r| self.pow_repr(repr, n / r) != 1)
    }

    fn generator_repr(&self) -> u32 {
        *self.inner.generator.get_or_init(|| {
            (1..self.inner.q)
                .find(|&r| self.order_is_full(r))
                .expect("the multiplicative group of a finite field is cyclic")
        })
    }

    fn tables(&self) -> Option<&LogTables> {
        self.inner
            .tables
            .get_or_init(|| {
                if self.q() > LOG_TABLE_BOUND {
                    return None;
                }
                let g = self.generator_repr();
                let n = (self.inner.q - 1) as usize;
                let mut exp = Vec::with_capacity(n);
                let mut log = vec![0u32; self.inner.q as usize];
                let mut cur = 1u32;
                for k in 0..n {
                    exp.push(cur);
                    log[cur as usize] = k as u32;
                    cur = self.mul_repr(cur, g);
                }
                Some(LogTables { exp, log })
            })
            .as_ref()
    }

    /// The least element, in representative order, of multiplicative order `q − 1`.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement { field: self.clone(), repr: self.generator_repr() }
    }

    /// `ω^k`, with `k` taken mod `q − 1`.
    pub fn generator_power(&self, k: i64) -> FieldElement {
        let n = (self.q() - 1) as i64;
        let k = k.rem_euclid(n) as u64;
        if let Some(t) = self.tables() {
            return FieldElement { field: self.clone(), repr: t.exp[k as usize] };
        }
        FieldElement { field: self.clone(), repr: self.pow_repr(self.generator_repr(), k) }
    }

    /// The class of `−1` in `F_q`.
    pub fn minus_one(&self) -> FieldElement {
        -self.one()
    }
}

/// An element of `F_q`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: PrimePower,
    repr: u32,
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.repr.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.field.q(), self.repr).cmp(&(other.field.q(), other.repr))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.e() == 1 {
            return write!(f, "{}", self.repr);
        }
        let coeffs = decode(self.repr, self.field.inner.p, self.field.e() as usize);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    pub fn repr(&self) -> u64 {
        self.repr as u64
    }

    pub fn is_zero(&self) -> bool {
        self.repr == 0
    }

    pub fn is_one(&self) -> bool {
        self.repr == 1
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        FieldElement { field: self.field.clone(), repr: self.field.pow_repr(self.repr, exp) }
    }

    /// Signed exponent; negative exponents require a unit.
    pub fn pow_signed(&self, exp: i64) -> Result<FieldElement, FieldError> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        Ok(self.pow(self.field.q() - 2))
    }

    /// Euler's criterion `a^((q−1)/2) = 1`.
    pub fn is_square(&self) -> Result<bool, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        let euler = self.pow((self.field.q() - 1) / 2).is_one();
        debug_assert_eq!(euler, self.discrete_log()? % 2 == 0);
        Ok(euler)
    }

    /// Square-class bit: 0 for squares, 1 for non-squares.
    pub fn square_class(&self) -> Result<u8, FieldError> {
        Ok(if self.is_square()? { 0 } else { 1 })
    }

    /// Least `k ≥ 0` with `ω^k = self`.
    pub fn discrete_log(&self) -> Result<u64, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        if let Some(t) = self.field.tables() {
            return Ok(t.log[self.repr as usize] as u64);
        }
        Ok(self.baby_step_giant_step())
    }

    fn baby_step_giant_step(&self) -> u64 {
        let f = &self.field;
        let n = f.q() - 1;
        let m = (n as f64).sqrt().ceil() as u64;
        let g = f.generator_repr();
        let mut baby = HashMap::with_capacity(m as usize);
        let mut cur = 1u32;
        for j in 0..m {
            baby.entry(cur).or_insert(j);
            cur = f.mul_repr(cur, g);
        }
        // g^{-m}
        let factor = f.pow_repr(f.pow_repr(g, n - 1), m);
        let mut gamma = self.repr;
        for i in 0..=m {
            if let Some(&j) = baby.get(&gamma) {
                return (i * m + j) % n;
            }
            gamma = f.mul_repr(gamma, factor);
        }
        unreachable!("every unit is a power of the generator")
    }

    /// Multiplicative order of a unit.
    pub fn multiplicative_order(&self) -> Result<u64, FieldError> {
        let k = self.discrete_log()?;
        let n = self.field.q() - 1;
        Ok(n / gcd(n, k))
    }

    /// A square root, if one exists.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let k = self.discrete_log().ok()?;
        if k % 2 == 1 {
            return None;
        }
        Some(self.field.generator_power((k / 2) as i64))
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.clone() + other.clone())
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.clone() * other.clone())
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch);
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert!(self.field == rhs.field, "field mismatch");
        let repr = self.field.add_repr(self.repr, rhs.repr);
        FieldElement { field: self.field, repr }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let repr = self.field.neg_repr(self.repr);
        FieldElement { field: self.field, repr }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert!(self.field == rhs.field, "field mismatch");
        let repr = self.field.mul_repr(self.repr, rhs.repr);
        FieldElement { field: self.field, repr }
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.clone() + rhs.clone()
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.clone() * rhs.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = make_field(7, 1).unwrap();
        assert_eq!(f.q(), 7);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.primitive_element().repr(), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(2, 1).unwrap_err(), FieldError::EvenCharacteristic);
        assert_eq!(make_field(9, 1).unwrap_err(), FieldError::NotPrime(9));
        assert_eq!(make_field(3, 0).unwrap_err(), FieldError::ZeroExponent);
        assert!(matches!(make_field(3, 13), Err(FieldError::BoundExceeded { .. })));
        assert_eq!(field_of_order(8).unwrap_err(), FieldError::EvenCharacteristic);
        assert_eq!(field_of_order(15).unwrap_err(), FieldError::NotPrimePower(15));
    }

    #[test]
    fn small_generators() {
        assert_eq!(make_field(3, 1).unwrap().primitive_element().repr(), 2);
        assert_eq!(make_field(5, 1).unwrap().primitive_element().repr(), 2);
        // x + 1 in F_9 = F_3[x]/(x^2 + 1)
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert_eq!(f9.primitive_element().repr(), 4);
        assert_eq!(f9.primitive_element().to_string(), "x+1");
    }

    #[test]
    fn logs_and_squares_in_f7() {
        let f = make_field(7, 1).unwrap();
        assert_eq!(f.element(4).unwrap().discrete_log().unwrap(), 4);
        assert_eq!(f.one().discrete_log().unwrap(), 0);
        assert_eq!(f.primitive_element().discrete_log().unwrap(), 1);
        assert!(f.element(2).unwrap().is_square().unwrap());
        assert!(!f.primitive_element().is_square().unwrap());
        assert_eq!(f.zero().is_square(), Err(FieldError::ZeroInput));
        assert_eq!(f.zero().discrete_log(), Err(FieldError::ZeroInput));
        assert_eq!(f.zero().inv(), Err(FieldError::ZeroInput));
    }

    #[test]
    fn large_field_uses_giant_steps() {
        // 3^12 = 531441 > 2^16, no tables
        let f = make_field(3, 12).unwrap();
        let w = f.primitive_element();
        let a = w.pow(123_456);
        assert_eq!(a.discrete_log().unwrap(), 123_456);
        assert!(!w.is_square().unwrap());
        assert_eq!(w.pow(f.q() - 1), f.one());
    }

    #[test]
    fn arithmetic_identities() {
        let f = make_field(5, 2).unwrap();
        for a in f.elements() {
            assert_eq!(a.clone() + f.zero(), a);
            assert_eq!(a.clone() * f.one(), a);
            assert!((a.clone() - a.clone()).is_zero());
            if !a.is_zero() {
                assert!((a.clone() * a.inv().unwrap()).is_one());
            }
        }
    }
}

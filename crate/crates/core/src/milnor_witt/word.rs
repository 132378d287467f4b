//! Formal symbol words `Σ c · η^i [a₁]⋯[a_k]` and their text syntax.
//!
//! ```text
//! word    := sum
//! sum     := [sign] product (sign product)*
//! product := factor (["*"] factor)*
//! factor  := int | "eta" ["^" uint] | "h" | "[" entry "]" | "(" sum ")"
//! entry   := ["-"] uint | "w" ["^" int]
//! sign    := "+" | "-"
//! ```
//!
//! `η` and `ω` are accepted as aliases of `eta` and `w`; whitespace is ignored.
//! `h` stands for `2 + η[−1]`.

use std::fmt;

use thiserror::Error;

use super::KmwError;
use crate::finite_field::{FieldElement, PrimePower};

/// Monomial `η^i [a₁]⋯[a_k]`, of degree `k − i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolMonomial {
    eta: u32,
    symbols: Vec<FieldElement>,
}

impl SymbolMonomial {
    pub fn new(eta: u32, symbols: Vec<FieldElement>) -> Result<Self, KmwError> {
        if symbols.iter().any(|a| a.is_zero()) {
            return Err(KmwError::ZeroSymbolEntry);
        }
        Ok(SymbolMonomial { eta, symbols })
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.symbols
    }

    pub fn degree(&self) -> i64 {
        self.symbols.len() as i64 - self.eta as i64
    }
}

fn write_entry(f: &mut fmt::Formatter<'_>, a: &FieldElement) -> fmt::Result {
    if a.field().e() == 1 {
        write!(f, "[{}]", a.repr())
    } else {
        let k = a.discrete_log().expect("nonzero symbol entry");
        write!(f, "[w^{k}]")
    }
}

impl fmt::Display for SymbolMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eta {
            0 => {}
            1 => write!(f, "eta")?,
            i => write!(f, "eta^{i}")?,
        }
        for a in &self.symbols {
            write_entry(f, a)?;
        }
        Ok(())
    }
}

/// Finite integer combination of symbol monomials over a fixed field.
#[derive(Clone, PartialEq, Eq)]
pub struct SymbolWord {
    field: PrimePower,
    terms: Vec<(i64, SymbolMonomial)>,
}

impl SymbolWord {
    fn normalized(field: &PrimePower, mut terms: Vec<(i64, SymbolMonomial)>) -> Self {
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut out: Vec<(i64, SymbolMonomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((c0, m0)) if *m0 == m => *c0 += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        SymbolWord { field: field.clone(), terms: out }
    }

    pub fn from_terms(field: &PrimePower, terms: Vec<(i64, SymbolMonomial)>) -> Result<Self, KmwError> {
        if terms.iter().any(|(_, m)| m.symbols.iter().any(|a| a.field() != field)) {
            return Err(KmwError::FieldMismatch);
        }
        Ok(SymbolWord::normalized(field, terms))
    }

    pub fn field(&self) -> &PrimePower {
        &self.field
    }

    pub fn terms(&self) -> &[(i64, SymbolMonomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn zero(field: &PrimePower) -> Self {
        SymbolWord { field: field.clone(), terms: Vec::new() }
    }

    pub fn integer(field: &PrimePower, n: i64) -> Self {
        SymbolWord::normalized(field, vec![(n, SymbolMonomial { eta: 0, symbols: vec![] })])
    }

    pub fn one(field: &PrimePower) -> Self {
        SymbolWord::integer(field, 1)
    }

    pub fn eta(field: &PrimePower) -> Self {
        SymbolWord::eta_power(field, 1)
    }

    pub fn eta_power(field: &PrimePower, i: u32) -> Self {
        SymbolWord { field: field.clone(), terms: vec![(1, SymbolMonomial { eta: i, symbols: vec![] })] }
    }

    pub fn symbol(a: &FieldElement) -> Result<Self, KmwError> {
        let m = SymbolMonomial::new(0, vec![a.clone()])?;
        Ok(SymbolWord { field: a.field().clone(), terms: vec![(1, m)] })
    }

    /// `h = 2 + η[−1]`.
    pub fn hyperbolic(field: &PrimePower) -> Self {
        let m = SymbolMonomial { eta: 1, symbols: vec![field.minus_one()] };
        SymbolWord::normalized(field, vec![(2, SymbolMonomial { eta: 0, symbols: vec![] }), (1, m)])
    }

    fn check(&self, other: &SymbolWord) -> Result<(), KmwError> {
        if self.field != other.field {
            Err(KmwError::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &SymbolWord) -> Result<Self, KmwError> {
        self.check(other)?;
        let terms = self.terms.iter().chain(&other.terms).cloned().collect();
        Ok(SymbolWord::normalized(&self.field, terms))
    }

    pub fn scale(&self, k: i64) -> Self {
        let terms = self.terms.iter().map(|(c, m)| (c * k, m.clone())).collect();
        SymbolWord::normalized(&self.field, terms)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, other: &SymbolWord) -> Result<Self, KmwError> {
        self.add(&other.neg())
    }

    /// Concatenation product; `η` is central so powers of `η` are collected.
    pub fn mul(&self, other: &SymbolWord) -> Result<Self, KmwError> {
        self.check(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, m1) in &self.terms {
            for (c2, m2) in &other.terms {
                let mut symbols = m1.symbols.clone();
                symbols.extend(m2.symbols.iter().cloned());
                terms.push((c1 * c2, SymbolMonomial { eta: m1.eta + m2.eta, symbols }));
            }
        }
        Ok(SymbolWord::normalized(&self.field, terms))
    }

    /// Degrees of the monomials that occur, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.iter().map(|(_, m)| m.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

impl fmt::Display for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let bare = m.eta == 0 && m.symbols.is_empty();
            let sign = if *c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let sep = if i > 0 { " " } else { "" };
            let space = if i > 0 { " " } else { "" };
            write!(f, "{sep}{sign}{space}")?;
            let a = c.abs();
            if bare {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymbolWord({self})")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty word")]
    Empty,
    #[error("unexpected character {found:?} at position {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: &'static str },
    #[error("number at position {pos} is out of range")]
    Overflow { pos: usize },
    #[error("symbol entry at position {pos} is zero in the field")]
    ZeroSymbol { pos: usize },
}

struct Parser<'a> {
    field: &'a PrimePower,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.chars.get(self.pos) {
            Some(&found) => ParseError::Unexpected { pos: self.pos, found },
            None => ParseError::UnexpectedEnd { expected },
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let k: Vec<char> = kw.chars().collect();
        if self.chars[self.pos..].starts_with(&k) {
            self.pos += k.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| ParseError::Overflow { pos: start })
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        let v = i64::try_from(self.uint()?).map_err(|_| ParseError::Overflow { pos: start })?;
        Ok(if neg { -v } else { v })
    }

    fn sum(&mut self) -> Result<SymbolWord, ParseError> {
        let mut acc = SymbolWord::zero(self.field);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => return Ok(acc),
            };
            first = false;
            let p = self.product()?;
            acc = acc.add(&p.scale(sign)).expect("same field");
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || matches!(c, 'e' | 'η' | 'h' | '[' | '('))
    }

    fn product(&mut self) -> Result<SymbolWord, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.factor()?;
            acc = acc.mul(&f).expect("same field");
        }
    }

    fn factor(&mut self) -> Result<SymbolWord, ParseError> {
        let field = self.field;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = i64::try_from(self.uint()?).map_err(|_| ParseError::Overflow { pos: start })?;
                Ok(SymbolWord::integer(field, n))
            }
            Some('h') => {
                self.pos += 1;
                Ok(SymbolWord::hyperbolic(field))
            }
            Some('(') => {
                self.pos += 1;
                let w = self.sum()?;
                self.expect(')', "')'")?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let start = self.pos;
                let a = self.entry()?;
                self.expect(']', "']'")?;
                SymbolWord::symbol(&a).map_err(|_| ParseError::ZeroSymbol { pos: start })
            }
            Some(_) if self.keyword("eta") || self.keyword("η") => {
                let mut k = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let start = self.pos;
                    k = u32::try_from(self.uint()?).map_err(|_| ParseError::Overflow { pos: start })?;
                }
                Ok(SymbolWord::eta_power(field, k))
            }
            _ => Err(self.unexpected("a factor")),
        }
    }

    fn entry(&mut self) -> Result<FieldElement, ParseError> {
        if self.keyword("w") || self.keyword("ω") {
            let mut k = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                k = self.signed()?;
            }
            Ok(self.field.generator_power(k))
        } else {
            Ok(self.field.from_int(self.signed()?))
        }
    }
}

/// Parses a word in the grammar documented at the top of this module.
pub fn parse_word(field: &PrimePower, input: &str) -> Result<SymbolWord, ParseError> {
    let mut p = Parser { field, chars: input.chars().collect(), pos: 0 };
    if p.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let w = p.sum()?;
    if p.peek().is_some() {
        return Err(p.unexpected("end of input"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::field_of_order;

    #[test]
    fn parses_products_and_sums() {
        let f = field_of_order(7).unwrap();
        let w = parse_word(&f, "2 eta[3][w^2] - eta^2 + [1]").unwrap();
        assert_eq!(w.terms().len(), 3);
        assert_eq!(w.degrees(), vec![-2, 1]);
        let x = parse_word(&f, "eta*eta").unwrap();
        assert_eq!(x, SymbolWord::eta_power(&f, 2));
        let h = parse_word(&f, "h").unwrap();
        assert_eq!(h, SymbolWord::hyperbolic(&f));
        assert_eq!(parse_word(&f, "(1 + eta)(1 - eta)").unwrap(), parse_word(&f, "1 - eta^2").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let f = field_of_order(7).unwrap();
        assert_eq!(parse_word(&f, "  "), Err(ParseError::Empty));
        assert_eq!(parse_word(&f, "[7]"), Err(ParseError::ZeroSymbol { pos: 1 }));
        assert!(matches!(parse_word(&f, "eta +"), Err(ParseError::UnexpectedEnd { .. })));
        assert!(matches!(parse_word(&f, "eta ?"), Err(ParseError::Unexpected { pos: 4, found: '?' })));
        assert!(matches!(parse_word(&f, "[2"), Err(ParseError::UnexpectedEnd { .. })));
    }

    #[test]
    fn display_round_trips() {
        for q in [7, 9] {
            let f = field_of_order(q).unwrap();
            let w = parse_word(&f, "3 - 2eta^2[w][w^3] + eta[-1]").unwrap();
            assert_eq!(parse_word(&f, &w.to_string()).unwrap(), w);
        }
    }
}

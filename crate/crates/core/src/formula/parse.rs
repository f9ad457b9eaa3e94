//! Recursive-descent parser for the concrete formula syntax.
//!
//! ```text
//! formula := impl ; impl := disj ("->" disj)? ; disj := conj ("|" conj)* ;
//! conj := neg ("&" neg)* ; neg := "~" neg | atom ;
//! atom := "(" formula ")" | quant | acteq | grpeq ;
//! quant := ("exists"|"forall") var "(" formula ")" ;
//! acteq := mterm "=" "0" ; grpeq := gword "=" "1" .
//!
//! mterm := "0" | ["-"] summand (("+"|"-") summand)* ; summand := xvar ["*" "(" alg ")"] ;
//! alg := ["-"] mono (("+"|"-") mono)* ; mono := int ["*" yfactors] | yfactors ;
//! gword := "1" | yfactors ; yfactors := yfactor ("*" yfactor)* ;
//! yfactor := yvar ["^" ["-"] int] .
//! ```

use thiserror::Error;

use super::ast::Formula;
use crate::free::{FreeWord, GroupAlgebraElement, ModuleTerm};

/// Largest accepted `|k|` in `y^k`.
pub const MAX_EXPONENT: i64 = 1024;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("parse error at {position}: expected {expected}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    X(u32),
    Y(u32),
    Int(i64),
    Exists,
    Forall,
    LParen,
    RParen,
    Star,
    Plus,
    Minus,
    Caret,
    Eq,
    Bar,
    Amp,
    Tilde,
    Arrow,
    End,
}

fn err<T>(position: usize, expected: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        expected: expected.into(),
    })
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'*' => Some(Tok::Star),
            b'+' => Some(Tok::Plus),
            b'^' => Some(Tok::Caret),
            b'=' => Some(Tok::Eq),
            b'|' => Some(Tok::Bar),
            b'&' => Some(Tok::Amp),
            b'~' => Some(Tok::Tilde),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            i += 1;
        } else if c == b'-' {
            if bytes.get(i + 1) == Some(&b'>') {
                out.push((Tok::Arrow, start));
                i += 2;
            } else {
                out.push((Tok::Minus, start));
                i += 1;
            }
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value = text[start..i]
                .parse::<i64>()
                .or_else(|_| err(start, "an integer below 2^63"))?;
            out.push((Tok::Int(value), start));
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word = &text[start..i];
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index = &text[digits_start..i];
            let tok = match (word, index.is_empty()) {
                ("exists", true) => Tok::Exists,
                ("forall", true) => Tok::Forall,
                ("x" | "y", false) => {
                    let k: u32 = index
                        .parse()
                        .ok()
                        .filter(|&k| k >= 1)
                        .map_or_else(|| err(digits_start, "a variable index >= 1"), Ok)?;
                    if word == "x" {
                        Tok::X(k)
                    } else {
                        Tok::Y(k)
                    }
                }
                _ => return err(start, "a variable x<i>, y<j>, `exists` or `forall`"),
            };
            out.push((tok, start));
        } else {
            return err(start, "a token");
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    modulus: u32,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.at].0
    }

    fn position(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            err(self.position(), what)
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let a = self.disj()?;
        if self.eat(Tok::Arrow) {
            let b = self.disj()?;
            return Ok(Formula::implies(a, b));
        }
        Ok(a)
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut a = self.conj()?;
        while self.eat(Tok::Bar) {
            a = Formula::or(a, self.conj()?);
        }
        Ok(a)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut a = self.neg()?;
        while self.eat(Tok::Amp) {
            a = Formula::and(a, self.neg()?);
        }
        Ok(a)
    }

    fn neg(&mut self) -> Result<Formula, ParseError> {
        if self.eat(Tok::Tilde) {
            return Ok(Formula::not(self.neg()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Exists | Tok::Forall => self.quant(),
            Tok::X(_) | Tok::Minus | Tok::Int(0) => {
                let w = self.mterm()?;
                self.expect(Tok::Eq, "`=`")?;
                if self.peek() != Tok::Int(0) {
                    return err(self.position(), "`0` after a module term");
                }
                self.bump();
                Ok(Formula::ActionEq(w))
            }
            Tok::Y(_) | Tok::Int(1) => {
                let f = self.gword()?;
                self.expect(Tok::Eq, "`=`")?;
                if self.peek() != Tok::Int(1) {
                    return err(self.position(), "`1` after a group word");
                }
                self.bump();
                Ok(Formula::GroupEq(f))
            }
            _ => err(self.position(), "`(`, `~`, a quantifier, a module term or a group word"),
        }
    }

    fn quant(&mut self) -> Result<Formula, ParseError> {
        let universal = self.bump() == Tok::Forall;
        let var = self.bump();
        if !matches!(var, Tok::X(_) | Tok::Y(_)) {
            return err(self.toks[self.at - 1].1, "a variable after the quantifier");
        }
        self.expect(Tok::LParen, "`(` after the quantified variable")?;
        let body = self.formula()?;
        self.expect(Tok::RParen, "`)`")?;
        Ok(match (var, universal) {
            (Tok::X(i), false) => Formula::exists_x(i, body),
            (Tok::X(i), true) => Formula::forall_x(i, body),
            (Tok::Y(j), false) => Formula::exists_y(j, body),
            (Tok::Y(j), true) => Formula::forall_y(j, body),
            _ => unreachable!(),
        })
    }

    fn mterm(&mut self) -> Result<ModuleTerm, ParseError> {
        if self.eat(Tok::Int(0)) {
            return Ok(ModuleTerm::zero(self.modulus));
        }
        let mut negate = self.eat(Tok::Minus);
        let mut w = ModuleTerm::zero(self.modulus);
        loop {
            let s = self.summand()?;
            w = w.add(&if negate { s.neg() } else { s });
            negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(w),
            };
            self.bump();
        }
    }

    fn summand(&mut self) -> Result<ModuleTerm, ParseError> {
        let Tok::X(x) = self.peek() else {
            return err(self.position(), "a module variable x<i>");
        };
        self.bump();
        if !self.eat(Tok::Star) {
            return Ok(ModuleTerm::summand(x, GroupAlgebraElement::one(self.modulus)));
        }
        self.expect(Tok::LParen, "`(` opening a group-algebra element")?;
        let u = self.alg()?;
        self.expect(Tok::RParen, "`)` closing a group-algebra element")?;
        Ok(ModuleTerm::summand(x, u))
    }

    fn alg(&mut self) -> Result<GroupAlgebraElement, ParseError> {
        let mut sign = if self.eat(Tok::Minus) { -1 } else { 1 };
        let mut terms = Vec::new();
        loop {
            let (word, coeff) = self.mono()?;
            terms.push((word, sign * coeff));
            sign = match self.peek() {
                Tok::Plus => 1,
                Tok::Minus => -1,
                _ => return Ok(GroupAlgebraElement::from_terms(self.modulus, terms)),
            };
            self.bump();
        }
    }

    fn mono(&mut self) -> Result<(FreeWord, i64), ParseError> {
        match self.peek() {
            Tok::Int(k) => {
                self.bump();
                let word = if self.eat(Tok::Star) { self.yfactors()? } else { FreeWord::one() };
                Ok((word, k))
            }
            Tok::Y(_) => Ok((self.yfactors()?, 1)),
            _ => err(self.position(), "an integer or a group generator y<j>"),
        }
    }

    fn gword(&mut self) -> Result<FreeWord, ParseError> {
        if self.eat(Tok::Int(1)) {
            return Ok(FreeWord::one());
        }
        self.yfactors()
    }

    fn yfactors(&mut self) -> Result<FreeWord, ParseError> {
        let mut word = self.yfactor()?;
        while self.eat(Tok::Star) {
            word = word.mul(&self.yfactor()?);
        }
        Ok(word)
    }

    fn yfactor(&mut self) -> Result<FreeWord, ParseError> {
        let Tok::Y(j) = self.peek() else {
            return err(self.position(), "a group generator y<j>");
        };
        self.bump();
        let y = FreeWord::generator(j);
        if !self.eat(Tok::Caret) {
            return Ok(y);
        }
        let sign = if self.eat(Tok::Minus) { -1 } else { 1 };
        let at = self.position();
        match self.bump() {
            Tok::Int(k) if k <= MAX_EXPONENT => Ok(y.pow(sign * k)),
            Tok::Int(_) => err(at, format!("an exponent of at most {MAX_EXPONENT}")),
            _ => err(at, "an integer exponent"),
        }
    }
}

/// Parse one formula, reducing coefficients into `Z/modulus`.
///
/// # Panics
/// If `modulus` is 0.
pub fn parse(text: &str, modulus: u32) -> Result<Formula, ParseError> {
    assert!(modulus >= 1, "modulus must be at least 1");
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        modulus,
    };
    let f = p.formula()?;
    if p.peek() != Tok::End {
        return err(p.position(), "end of input");
    }
    Ok(f)
}

/// Non-empty lines of a formula batch with `#` comments stripped, as
/// `(1-based line number, source)`.
pub fn batch_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let src = line.split('#').next().unwrap_or("").trim();
        (!src.is_empty()).then_some((i + 1, src))
    })
}

//! Parsers for the three textual languages of the toolkit.
//!
//! All three share one grammar skeleton — `expr := term (('+'|'-') term)*`,
//! `term := atom ('*'? atom)*` with juxtaposition as multiplication,
//! `atom := number | variable | '(' expr ')'`, each atom optionally raised
//! with `^` — and differ only in the variable set and coefficient domain:
//!
//! * curves: variables `x`, `y`; rational coefficients written `p/q`;
//!   an optional sign may open the expression;
//! * motivic rational functions: variables `L`, `T`; integer coefficients;
//!   `L` may carry negative exponents; one top-level `/` splits numerator
//!   from a denominator product whose atoms become tracked factors;
//! * Laurent polynomials: like the motivic language but with `L` only.
//!
//! Every syntax error reports the byte offset of the offending token.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::bipoly::BiPoly;
use crate::curve::CurvePoly;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qpoly::QPoly;
use crate::rational::FactoredRational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => pos += 1,
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: BigInt = src[start..pos].parse().expect("digits parse");
                toks.push((Tok::Int(n), start));
            }
            b'+' => push_tok(&mut toks, Tok::Plus, &mut pos),
            b'-' => push_tok(&mut toks, Tok::Minus, &mut pos),
            b'*' => push_tok(&mut toks, Tok::Star, &mut pos),
            b'/' => push_tok(&mut toks, Tok::Slash, &mut pos),
            b'^' => push_tok(&mut toks, Tok::Caret, &mut pos),
            b'(' => push_tok(&mut toks, Tok::LParen, &mut pos),
            b')' => push_tok(&mut toks, Tok::RParen, &mut pos),
            c if c.is_ascii_alphabetic() => {
                toks.push((Tok::Var(c as char), pos));
                pos += 1;
            }
            c => {
                return Err(Error::Syntax {
                    offset: pos,
                    message: format!("unexpected character `{}`", c as char),
                })
            }
        }
    }
    Ok(toks)
}

fn push_tok(toks: &mut Vec<(Tok, usize)>, t: Tok, pos: &mut usize) {
    toks.push((t, *pos));
    *pos += 1;
}

/// The value domain a parse run builds into.
trait Algebra: Sized + Clone {
    fn from_int(n: &BigInt) -> Self;
    /// `p/q` coefficients; `None` when the domain is integral.
    fn ratio(n: &BigInt, d: &BigInt) -> Option<Self>;
    fn var(c: char) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Self;
    /// `L^e` for negative `e`; `None` when the domain has no such unit.
    fn l_pow(e: i64) -> Option<Self>;
}

impl Algebra for QPoly {
    fn from_int(n: &BigInt) -> Self {
        QPoly::constant(BigRational::from_integer(n.clone()))
    }
    fn ratio(n: &BigInt, d: &BigInt) -> Option<Self> {
        Some(QPoly::constant(BigRational::new(n.clone(), d.clone())))
    }
    fn var(c: char) -> Self {
        match c {
            'x' => QPoly::x(),
            'y' => QPoly::y(),
            _ => unreachable!("variable gate"),
        }
    }
    fn add(&self, o: &Self) -> Self {
        QPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        QPoly::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        QPoly::pow(self, e)
    }
    fn l_pow(_e: i64) -> Option<Self> {
        None
    }
}

impl Algebra for BiPoly {
    fn from_int(n: &BigInt) -> Self {
        BiPoly::monomial(0, 0, n.clone())
    }
    fn ratio(_n: &BigInt, _d: &BigInt) -> Option<Self> {
        None
    }
    fn var(c: char) -> Self {
        match c {
            'L' => BiPoly::l_pow(1),
            'T' => BiPoly::t(),
            _ => unreachable!("variable gate"),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, e: u32) -> Self {
        BiPoly::pow(self, e)
    }
    fn l_pow(e: i64) -> Option<Self> {
        Some(BiPoly::l_pow(e))
    }
}

struct Parser<'a, A> {
    toks: &'a [(Tok, usize)],
    idx: usize,
    end: usize,
    vars: &'a [char],
    allow_ratio: bool,
    allow_leading_sign: bool,
    _marker: std::marker::PhantomData<A>,
}

impl<'a, A: Algebra> Parser<'a, A> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.idx)
            .map(|&(_, o)| o)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t);
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<A> {
        let mut negate = false;
        if self.allow_leading_sign {
            if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                self.eat(&Tok::Plus);
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(&Tok::Plus) {
                let t = self.term()?;
                acc = acc.add(&t);
            } else if self.eat(&Tok::Minus) {
                let t = self.term()?;
                acc = acc.sub(&t);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<A> {
        let mut acc = self.atom()?;
        loop {
            if self.eat(&Tok::Star) {
                let a = self.atom()?;
                acc = acc.mul(&a);
            } else if matches!(
                self.peek(),
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen)
            ) {
                let a = self.atom()?;
                acc = acc.mul(&a);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    /// One atom with its optional exponent.
    fn atom(&mut self) -> Result<A> {
        let (val, var) = self.base_atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(val);
        }
        if self.eat(&Tok::Minus) {
            let e = self.exponent()?;
            if var != Some('L') {
                return self.err("negative exponents are only allowed on L");
            }
            return match A::l_pow(-(e as i64)) {
                Some(v) => Ok(v),
                None => self.err("negative exponents are only allowed on L"),
            };
        }
        let e = self.exponent()?;
        Ok(val.pow(e))
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.bump().cloned() {
            Some(Tok::Int(n)) => match n.to_u32() {
                Some(e) => Ok(e),
                None => {
                    self.idx -= 1;
                    self.err("exponent is too large")
                }
            },
            _ => {
                self.idx = self.idx.saturating_sub(1);
                self.err("expected an integer exponent after `^`")
            }
        }
    }

    /// An atom without its exponent; the second component remembers when the
    /// atom was a bare variable (for the negative-exponent rule).
    fn base_atom(&mut self) -> Result<(A, Option<char>)> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                if self.allow_ratio && self.peek() == Some(&Tok::Slash) {
                    let save = self.idx;
                    self.idx += 1;
                    match self.bump().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            let v = A::ratio(&n, &d).expect("ratio allowed in this domain");
                            return Ok((v, None));
                        }
                        Some(Tok::Int(_)) => {
                            self.idx -= 1;
                            return self.err("zero denominator in a coefficient");
                        }
                        _ => {
                            self.idx = save;
                            return self.err("expected an integer after `/` in a coefficient");
                        }
                    }
                }
                Ok((A::from_int(&n), None))
            }
            Some(Tok::Var(c)) => {
                if !self.vars.contains(&c) {
                    return self.err(format!("unknown variable `{c}`"));
                }
                self.idx += 1;
                Ok((A::var(c), Some(c)))
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let v = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok((v, None))
            }
            _ => self.err("expected a number, a variable, or `(`"),
        }
    }
}

/// Parse a plane curve. Beyond syntax, the result is validated: it must be
/// nonzero, squarefree, and vanish at the origin.
pub fn parse_curve(src: &str) -> Result<CurvePoly> {
    let toks = lex(src)?;
    let mut p = Parser::<QPoly> {
        toks: &toks,
        idx: 0,
        end: src.len(),
        vars: &['x', 'y'],
        allow_ratio: true,
        allow_leading_sign: true,
        _marker: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if p.idx != toks.len() {
        return p.err("unexpected trailing input");
    }
    CurvePoly::new(v)
}

fn parse_motivic(src: &str, vars: &[char]) -> Result<(BiPoly, Vec<(BiPoly, u32)>)> {
    let toks = lex(src)?;
    let mut p = Parser::<BiPoly> {
        toks: &toks,
        idx: 0,
        end: src.len(),
        vars,
        allow_ratio: false,
        allow_leading_sign: true,
        _marker: std::marker::PhantomData,
    };
    let num = p.expr()?;
    let mut den = Vec::new();
    if p.eat(&Tok::Slash) {
        // The denominator is a product of atoms, each with an optional
        // positive exponent; every atom becomes one tracked factor.
        loop {
            let (base, _) = p.base_atom()?;
            let mut exp = 1u32;
            if p.eat(&Tok::Caret) {
                exp = p.exponent()?;
                if exp == 0 {
                    return p.err("denominator factors need a positive exponent");
                }
            }
            den.push((base, exp));
            if !p.eat(&Tok::Star) {
                break;
            }
        }
    }
    if p.idx != toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok((num, den))
}

/// Parse a rational function in `L` and `T`. A single top-level `/`
/// separates the numerator from a product of denominator factors.
pub fn parse_rational(src: &str) -> Result<FactoredRational> {
    let (num, den) = parse_motivic(src, &['L', 'T'])?;
    FactoredRational::new(num, den)
}

/// Parse a Laurent polynomial in `L` alone.
pub fn parse_laurent(src: &str) -> Result<LaurentPoly> {
    let (num, den) = parse_motivic(src, &['L'])?;
    if !den.is_empty() {
        return Err(Error::Syntax {
            offset: src.find('/').unwrap_or(0),
            message: "a Laurent polynomial has no denominator".to_string(),
        });
    }
    Ok(num
        .as_laurent()
        .expect("no T variable was admitted, so the T-degree is 0"))
}

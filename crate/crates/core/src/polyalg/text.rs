//! Text format for polynomials with rational coefficients.
//!
//! ```text
//! poly  ::= term { ("+" | "-") term }
//! term  ::= [sign] coefficient { "*" var [ "^" exp ] }
//! coefficient ::= integer | integer "/" positive-integer
//! var   ::= [a-z][a-z0-9]*
//! ```
//!
//! Whitespace is insignificant. The parser also accepts a term that starts
//! with a variable (implicit coefficient 1); [`MultiPoly::render`] always
//! writes the coefficient, so `parse(render(f)) == f`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numfield::{Rational, RationalField};

use super::{Monomial, MultiPoly, PolyError, PolyRing, RingRef};

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn ident(&mut self) -> Result<String, PolyError> {
        self.skip_ws();
        let start = self.pos;
        if !self.s.get(self.pos).is_some_and(|c| c.is_ascii_lowercase()) {
            return Err(self.err("expected variable"));
        }
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_lowercase() || self.s[self.pos].is_ascii_digit()) {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string())
    }
}

type RawTerm = (Rational, Vec<(String, u32)>);

fn parse_raw(text: &str) -> Result<Vec<RawTerm>, PolyError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match lx.peek() {
            None if first => return Err(lx.err("empty input")),
            None => break,
            Some(b'+') => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return Err(lx.err("expected '+' or '-'")),
        }
        first = false;
        let mut coeff = sign;
        let mut factors = Vec::new();
        let mut need_factor = true;
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = lx.digits()?;
                    let mut q = Rational::from_integer(n);
                    if lx.peek() == Some(b'/') {
                        lx.pos += 1;
                        let d = lx.digits()?;
                        if d.is_zero() {
                            return Err(lx.err("zero denominator"));
                        }
                        q /= Rational::from_integer(d);
                    }
                    coeff *= q;
                }
                Some(c) if c.is_ascii_lowercase() => {
                    let v = lx.ident()?;
                    let mut e = 1u32;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        let d = lx.digits()?;
                        e = u32::try_from(d).map_err(|_| lx.err("exponent too large"))?;
                    }
                    factors.push((v, e));
                }
                _ if need_factor => return Err(lx.err("expected coefficient or variable")),
                _ => break,
            }
            need_factor = lx.peek() == Some(b'*');
            if need_factor {
                lx.pos += 1;
            } else {
                break;
            }
        }
        terms.push((coeff, factors));
    }
    Ok(terms)
}

/// Parses into the given ring; unknown variables are an error.
pub fn parse_poly(text: &str, ring: &RingRef<RationalField>) -> Result<MultiPoly<RationalField>, PolyError> {
    let raw = parse_raw(text)?;
    let mut terms = Vec::with_capacity(raw.len());
    for (c, factors) in raw {
        let mut e = vec![0u32; ring.arity()];
        for (v, k) in factors {
            e[ring.var_index(&v)?] += k;
        }
        terms.push((Monomial(e), c));
    }
    Ok(MultiPoly::from_terms(ring, terms))
}

/// Parses an arithmetic expression with parentheses, `+ - * ^` and
/// rational constants, expanding it into the given ring.
pub fn parse_expr(text: &str, ring: &RingRef<RationalField>) -> Result<MultiPoly<RationalField>, PolyError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let p = expr(&mut lx, ring)?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input"));
    }
    Ok(p)
}

type Poly = MultiPoly<RationalField>;

fn expr(lx: &mut Lexer, ring: &RingRef<RationalField>) -> Result<Poly, PolyError> {
    let mut acc = match lx.peek() {
        Some(b'-') => {
            lx.pos += 1;
            product(lx, ring)?.neg()
        }
        Some(b'+') => {
            lx.pos += 1;
            product(lx, ring)?
        }
        _ => product(lx, ring)?,
    };
    loop {
        match lx.peek() {
            Some(b'+') => {
                lx.pos += 1;
                acc = acc.add(&product(lx, ring)?);
            }
            Some(b'-') => {
                lx.pos += 1;
                acc = acc.sub(&product(lx, ring)?);
            }
            _ => return Ok(acc),
        }
    }
}

fn product(lx: &mut Lexer, ring: &RingRef<RationalField>) -> Result<Poly, PolyError> {
    let mut acc = power(lx, ring)?;
    while lx.peek() == Some(b'*') {
        lx.pos += 1;
        acc = acc.mul(&power(lx, ring)?);
    }
    Ok(acc)
}

fn power(lx: &mut Lexer, ring: &RingRef<RationalField>) -> Result<Poly, PolyError> {
    let base = atom(lx, ring)?;
    if lx.peek() == Some(b'^') {
        lx.pos += 1;
        let d = lx.digits()?;
        let e = u32::try_from(d).map_err(|_| lx.err("exponent too large"))?;
        return Ok(base.pow(e));
    }
    Ok(base)
}

fn atom(lx: &mut Lexer, ring: &RingRef<RationalField>) -> Result<Poly, PolyError> {
    match lx.peek() {
        Some(b'(') => {
            lx.pos += 1;
            let p = expr(lx, ring)?;
            if lx.peek() != Some(b')') {
                return Err(lx.err("expected ')'"));
            }
            lx.pos += 1;
            Ok(p)
        }
        Some(c) if c.is_ascii_digit() => {
            let mut q = Rational::from_integer(lx.digits()?);
            if lx.peek() == Some(b'/') {
                lx.pos += 1;
                let d = lx.digits()?;
                if d.is_zero() {
                    return Err(lx.err("zero denominator"));
                }
                q /= Rational::from_integer(d);
            }
            Ok(MultiPoly::constant(ring, q))
        }
        Some(c) if c.is_ascii_lowercase() => {
            let v = lx.ident()?;
            Ok(MultiPoly::var_at(ring, ring.var_index(&v)?))
        }
        _ => Err(lx.err("expected '(', number or variable")),
    }
}

/// Parses with the variables taken in order of first appearance.
pub fn parse_poly_infer(text: &str) -> Result<MultiPoly<RationalField>, PolyError> {
    let raw = parse_raw(text)?;
    let mut names: Vec<String> = Vec::new();
    for (_, factors) in &raw {
        for (v, _) in factors {
            if !names.contains(v) {
                names.push(v.clone());
            }
        }
    }
    let ring = PolyRing::from_names(RationalField, names);
    parse_poly(text, &ring)
}

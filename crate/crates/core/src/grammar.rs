//! Text grammar for polynomials: parser and printer with a bit-exact round
//! trip of the printed form.
//!
//! Terms look like `c`, `c*x^i`, `c*x^i*y^j` with the usual signs and
//! whitespace, e.g. `3.5*x^2*y - 1`. Real polynomials use the variables
//! `x`, `y`; complex ones use `z`, `zb` and admit complex coefficients
//! written as `2i`, `(1.5+2i)` or `(1.5-2i)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // needed for float math in pure no_std builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::poly::{ComplexPolyZZbar, RealPoly2};

/// Prints a real polynomial in descending graded-lex order.
pub fn print_real(p: &RealPoly2) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(print_order);
    for (idx, (m, c)) in terms.iter().enumerate() {
        let neg = *c < 0.0;
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        push_term(&mut out, c.abs(), m.a, m.b, "x", "y");
    }
    out
}

/// Descending total degree, and within a degree the first variable's power
/// descends: `x² + x*y + y² + x - 1`.
fn print_order<T>(l: &(crate::poly::Monomial, T), r: &(crate::poly::Monomial, T)) -> core::cmp::Ordering {
    r.0.total_degree()
        .cmp(&l.0.total_degree())
        .then(r.0.a.cmp(&l.0.a))
}

/// Prints a complex polynomial in descending graded-lex order over `z`, `zb`.
pub fn print_zzbar(q: &ComplexPolyZZbar) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut terms: Vec<_> = q.terms().collect();
    terms.sort_by(print_order);
    for (idx, (m, c)) in terms.iter().enumerate() {
        if c.im == 0.0 {
            let neg = c.re < 0.0;
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            push_term(&mut out, c.re.abs(), m.a, m.b, "z", "zb");
        } else if c.re == 0.0 {
            let neg = c.im < 0.0;
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            push_imag_term(&mut out, c.im.abs(), m.a, m.b);
        } else {
            if idx > 0 {
                out.push_str(" + ");
            }
            let sign = if c.im < 0.0 { '-' } else { '+' };
            out.push_str(&format!("({}{}{}i)", c.re, sign, c.im.abs()));
            push_vars(&mut out, m.a, m.b, "z", "zb", true);
        }
    }
    out
}

fn push_term(out: &mut String, mag: f64, a: u32, b: u32, va: &str, vb: &str) {
    if a == 0 && b == 0 {
        out.push_str(&format!("{mag}"));
        return;
    }
    let lead = mag != 1.0;
    if lead {
        out.push_str(&format!("{mag}"));
    }
    push_vars(out, a, b, va, vb, lead);
}

fn push_imag_term(out: &mut String, mag: f64, a: u32, b: u32) {
    out.push_str(&format!("{mag}i"));
    push_vars(out, a, b, "z", "zb", true);
}

fn push_vars(out: &mut String, a: u32, b: u32, va: &str, vb: &str, mut star: bool) {
    if a > 0 {
        if star {
            out.push('*');
        }
        out.push_str(va);
        if a > 1 {
            out.push_str(&format!("^{a}"));
        }
        star = true;
    }
    if b > 0 {
        if star {
            out.push('*');
        }
        out.push_str(vb);
        if b > 1 {
            out.push_str(&format!("^{b}"));
        }
    }
}

/// Parses a real polynomial over `x`, `y`.
pub fn parse_real(s: &str) -> Result<RealPoly2> {
    let terms = parse_terms(s, Mode::Real)?;
    let mut p = RealPoly2::zero();
    for (a, b, c) in terms {
        p.insert_add(crate::poly::Monomial::new(a, b), c.re);
    }
    Ok(p)
}

/// Parses a complex polynomial over `z`, `zb`.
pub fn parse_zzbar(s: &str) -> Result<ComplexPolyZZbar> {
    let terms = parse_terms(s, Mode::Zzbar)?;
    let mut q = ComplexPolyZZbar::zero();
    for (a, b, c) in terms {
        q.insert_add(crate::poly::Monomial::new(a, b), c);
    }
    Ok(q)
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Real,
    Zzbar,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Imag(f64),
    Ident(String),
    Star,
    Caret,
    Plus,
    Minus,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    peeked: Option<Option<(usize, Tok)>>,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { src: s.as_bytes(), pos: 0, peeked: None }
    }

    fn err(&self, offset: usize, message: &str) -> Error {
        Error::Parse { offset, message: message.to_string() }
    }

    fn peek(&mut self) -> Result<Option<(usize, Tok)>> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(self.peeked.clone().unwrap())
    }

    fn next_tok(&mut self) -> Result<Option<(usize, Tok)>> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lex(),
        }
    }

    fn lex(&mut self) -> Result<Option<(usize, Tok)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' | b'.' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_digit() || self.src[end] == b'.')
                {
                    end += 1;
                }
                // exponent part
                if end < self.src.len() && (self.src[end] == b'e' || self.src[end] == b'E') {
                    let mut e = end + 1;
                    if e < self.src.len() && (self.src[e] == b'+' || self.src[e] == b'-') {
                        e += 1;
                    }
                    if e < self.src.len() && self.src[e].is_ascii_digit() {
                        while e < self.src.len() && self.src[e].is_ascii_digit() {
                            e += 1;
                        }
                        end = e;
                    }
                }
                let text = core::str::from_utf8(&self.src[self.pos..end]).unwrap();
                let v: f64 = text
                    .parse()
                    .map_err(|_| self.err(start, "malformed number"))?;
                self.pos = end;
                // a number immediately followed by `i` is an imaginary literal
                if self.pos < self.src.len()
                    && self.src[self.pos] == b'i'
                    && !(self.pos + 1 < self.src.len()
                        && self.src[self.pos + 1].is_ascii_alphabetic())
                {
                    self.pos += 1;
                    Tok::Imag(v)
                } else {
                    Tok::Num(v)
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_alphabetic() {
                    end += 1;
                }
                let text = core::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Ident(text.to_string())
            }
            _ => return Err(self.err(start, "unexpected character")),
        };
        Ok(Some((start, tok)))
    }
}

fn parse_terms(s: &str, mode: Mode) -> Result<Vec<(u32, u32, Complex64)>> {
    let mut lx = Lexer::new(s);
    let mut terms = Vec::new();
    if lx.peek()?.is_none() {
        return Err(lx.err(0, "empty polynomial"));
    }
    loop {
        // optional sign before the term
        let mut sign = 1.0;
        while let Some((_, tok)) = lx.peek()? {
            match tok {
                Tok::Plus => {
                    lx.next_tok()?;
                }
                Tok::Minus => {
                    lx.next_tok()?;
                    sign = -sign;
                }
                _ => break,
            }
        }
        let term = parse_term(&mut lx, mode)?;
        terms.push((term.0, term.1, term.2 * sign));
        match lx.peek()? {
            None => break,
            Some((_, Tok::Plus)) | Some((_, Tok::Minus)) => continue,
            Some((off, _)) => return Err(lx.err(off, "expected '+' or '-' between terms")),
        }
    }
    Ok(terms)
}

fn parse_term(lx: &mut Lexer, mode: Mode) -> Result<(u32, u32, Complex64)> {
    let mut coeff = Complex64::new(1.0, 0.0);
    let mut ea = 0u32;
    let mut eb = 0u32;
    let mut first = true;
    loop {
        let (off, tok) = match lx.peek()? {
            Some(t) => t,
            None => break,
        };
        if !first {
            // factors after the first must be joined by '*'
            match tok {
                Tok::Star => {
                    lx.next_tok()?;
                }
                _ => break,
            }
        }
        let (off2, tok2) = lx
            .next_tok()?
            .ok_or_else(|| lx.err(off, "dangling '*'"))?;
        match tok2 {
            Tok::Num(v) => coeff *= v,
            Tok::Imag(v) => coeff *= Complex64::new(0.0, v),
            Tok::LParen => {
                if mode == Mode::Real {
                    return Err(lx.err(off2, "complex coefficient in a real polynomial"));
                }
                coeff *= parse_paren_complex(lx, off2)?;
            }
            Tok::Ident(name) => {
                let slot = match (mode, name.as_str()) {
                    (Mode::Real, "x") => 0,
                    (Mode::Real, "y") => 1,
                    (Mode::Zzbar, "z") => 0,
                    (Mode::Zzbar, "zb") => 1,
                    (Mode::Zzbar, "i") => 2,
                    _ => return Err(lx.err(off2, "unknown variable")),
                };
                if slot == 2 {
                    coeff *= Complex64::new(0.0, 1.0);
                } else {
                    let exp = parse_exponent(lx)?;
                    if slot == 0 {
                        ea += exp;
                    } else {
                        eb += exp;
                    }
                }
            }
            _ => return Err(lx.err(off2, "expected a number or variable")),
        }
        if mode == Mode::Real && coeff.im != 0.0 {
            return Err(lx.err(off2, "complex coefficient in a real polynomial"));
        }
        first = false;
    }
    if first {
        let off = lx.peek()?.map(|(o, _)| o).unwrap_or(0);
        return Err(lx.err(off, "expected a term"));
    }
    Ok((ea, eb, coeff))
}

fn parse_exponent(lx: &mut Lexer) -> Result<u32> {
    match lx.peek()? {
        Some((_, Tok::Caret)) => {
            lx.next_tok()?;
            match lx.next_tok()? {
                Some((off, Tok::Num(v))) => {
                    if v.fract() != 0.0 || v < 0.0 || v > 1e6 {
                        Err(lx.err(off, "exponent must be a small nonnegative integer"))
                    } else {
                        Ok(v as u32)
                    }
                }
                Some((off, _)) => Err(lx.err(off, "expected an integer exponent")),
                None => Err(lx.err(0, "expected an integer exponent")),
            }
        }
        _ => Ok(1),
    }
}

fn parse_paren_complex(lx: &mut Lexer, open: usize) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    let mut any = false;
    loop {
        match lx.next_tok()? {
            Some((_, Tok::RParen)) => {
                if !any {
                    return Err(lx.err(open, "empty parenthesized coefficient"));
                }
                return Ok(acc);
            }
            Some((_, Tok::Plus)) => {}
            Some((_, Tok::Minus)) => sign = -sign,
            Some((_, Tok::Num(v))) => {
                acc.re += sign * v;
                sign = 1.0;
                any = true;
            }
            Some((_, Tok::Imag(v))) => {
                acc.im += sign * v;
                sign = 1.0;
                any = true;
            }
            Some((off, _)) => return Err(lx.err(off, "malformed complex coefficient")),
            None => return Err(lx.err(open, "unterminated complex coefficient")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    #[test]
    fn parses_spec_example() {
        let p = parse_real("3.5*x^2*y - 1").unwrap();
        assert_eq!(p.coeff(2, 1), 3.5);
        assert_eq!(p.coeff(0, 0), -1.0);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn print_then_parse_is_identity() {
        let p = RealPoly2::from_terms([((2, 1), 3.5), ((0, 0), -1.0), ((1, 0), 0.1)]);
        let text = print_real(&p);
        assert_eq!(text, "3.5*x^2*y + 0.1*x - 1");
        let q = parse_real(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(print_real(&q), text);
    }

    #[test]
    fn unit_coefficients_are_omitted() {
        let p = RealPoly2::from_terms([((1, 0), 1.0), ((0, 1), -1.0)]);
        assert_eq!(print_real(&p), "x - y");
        assert_eq!(parse_real("x - y").unwrap(), p);
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(print_real(&RealPoly2::zero()), "0");
        assert!(parse_real("0").unwrap().is_zero());
    }

    #[test]
    fn zzbar_round_trip_with_complex_coefficients() {
        let q = ComplexPolyZZbar::from_terms([
            ((2, 0), Complex64::new(1.0, 0.0)),
            ((1, 1), Complex64::new(0.0, -0.5)),
            ((0, 0), Complex64::new(1.5, 2.0)),
        ]);
        let text = print_zzbar(&q);
        let back = parse_zzbar(&text).unwrap();
        assert_eq!(q, back);
        assert_eq!(print_zzbar(&back), text);
    }

    #[test]
    fn rejects_unknown_variable() {
        assert!(parse_real("x + w").is_err());
        assert!(parse_zzbar("x").is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_real("").is_err());
        assert!(parse_real("3..5*x").is_err());
        assert!(parse_real("x^").is_err());
        assert!(parse_real("x^-2").is_err());
        assert!(parse_real("2 2").is_err());
    }

    #[test]
    fn scientific_notation_coefficients() {
        let p = parse_real("1e-3*x + 2.5E2").unwrap();
        assert_eq!(p.coeff(1, 0), 1e-3);
        assert_eq!(p.coeff(0, 0), 250.0);
    }

    #[test]
    fn repeated_variables_accumulate() {
        let p = parse_real("x*x*y").unwrap();
        assert_eq!(p.coeff(2, 1), 1.0);
    }

    #[test]
    fn pure_imaginary_terms() {
        let q = parse_zzbar("2i*z - 0.5i").unwrap();
        assert_eq!(q.coeff(1, 0), Complex64::new(0.0, 2.0));
        assert_eq!(q.coeff(0, 0), Complex64::new(0.0, -0.5));
        let text = print_zzbar(&q);
        assert_eq!(parse_zzbar(&text).unwrap(), q);
    }

    #[test]
    fn graded_lex_descending_print_order() {
        let p = RealPoly2::from_terms([((0, 2), 1.0), ((2, 0), 1.0), ((1, 1), 1.0)]);
        assert_eq!(print_real(&p), "x^2 + x*y + y^2");
        let _ = Monomial::new(0, 0);
    }
}

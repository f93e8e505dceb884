//! Text formats: the polynomial grammar, matrices and vectors, cone specs and transforms.
//!
//! Polynomials are written as signed sums of terms, each term a coefficient
//! and/or a product of variable powers:
//!
//! ```text
//! z11*z22 - z12^2        (sym:2)
//! (0+1i)*z1 + 2.5        (vector:1)
//! z{1,12}^2              (sym:12)
//! ```
//!
//! Vector variables are `z1, z2, …`. Symmetric variables are `zij` with two
//! single-digit indices or `z{i,j}`; `(i, j)` and `(j, i)` denote the same
//! variable. Indices are 1-based. Whitespace is ignored everywhere.

mod cone;
mod transform;
mod values;

pub use cone::parse_cone;
pub use transform::{parse_complex, parse_transform};
pub use values::{parse_det_term, parse_index_list, parse_matrix, parse_real, parse_vector, parse_weight_matrix};

use std::fmt::Write;

use num_complex::Complex64;

use crate::error::ParseError;
use crate::poly::{ExponentVector, Polynomial};
use crate::space::Space;

/// Largest total degree of a parsed term.
pub const MAX_TERM_DEGREE: u32 = 1 << 16;

/// Parses `src` as a polynomial over `space`.
pub fn parse_polynomial(src: &str, space: &Space) -> Result<Polynomial, ParseError> {
    let mut p = Cursor::new(src);
    let mut terms: Vec<(ExponentVector, Complex64)> = Vec::new();
    let mut sign = match p.peek() {
        Some('-') => {
            p.bump();
            -1.0
        }
        Some('+') => {
            p.bump();
            1.0
        }
        _ => 1.0,
    };
    loop {
        let (e, c) = term(&mut p, space)?;
        terms.push((e, c * sign));
        match p.peek() {
            None => break,
            Some('+') => sign = 1.0,
            Some('-') => sign = -1.0,
            Some(ch) => return Err(p.error(format!("expected '+' or '-', found '{ch}'"))),
        }
        p.bump();
    }
    Polynomial::from_terms(space.nvars(), terms).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Formats `f` with graded lexicographic term order, largest monomial first.
pub fn format_polynomial(f: &Polynomial, space: &Space) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in f.terms_graded().into_iter().enumerate() {
        let mono = format_monomial(e, space);
        if c.im == 0.0 {
            let negative = c.re < 0.0;
            let mag = c.re.abs();
            let body = match (mono.is_empty(), mag == 1.0) {
                (true, _) => format_real(mag),
                (false, true) => mono,
                (false, false) => format!("{}*{}", format_real(mag), mono),
            };
            match (k == 0, negative) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        } else {
            if k > 0 {
                out.push_str(" + ");
            }
            let op = if c.im < 0.0 { '-' } else { '+' };
            let _ = write!(out, "({}{}{}i)", format_signed(c.re), op, format_real(c.im.abs()));
            if !mono.is_empty() {
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}

/// [`format_polynomial`] over the vector space of `f`.
pub fn format_vector(f: &Polynomial) -> String {
    format_polynomial(f, &Space::Vector(f.nvars()))
}

/// A monomial such as `z11*z12^2`; empty for the constant monomial.
pub fn format_monomial(e: &ExponentVector, space: &Space) -> String {
    let mut parts = Vec::new();
    for (k, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let name = variable_name(k, space);
        parts.push(if x == 1 { name } else { format!("{name}^{x}") });
    }
    parts.join("*")
}

/// The name of flat variable `k`.
pub fn variable_name(k: usize, space: &Space) -> String {
    match space {
        Space::Vector(_) => format!("z{}", k + 1),
        Space::Sym(s) => {
            let (i, j) = s.pair(k);
            if j < 9 {
                format!("z{}{}", i + 1, j + 1)
            } else {
                format!("z{{{},{}}}", i + 1, j + 1)
            }
        }
    }
}

/// Shortest decimal that reads back to the same `f64`; exponent form outside `[1e-4, 1e15)`.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn format_signed(x: f64) -> String {
    format_real(if x == 0.0 { 0.0 } else { x })
}

fn term(p: &mut Cursor, space: &Space) -> Result<(ExponentVector, Complex64), ParseError> {
    let mut exps = vec![0u32; space.nvars()];
    let coeff = match p.peek() {
        Some('z') => {
            varpow(p, space, &mut exps)?;
            Complex64::new(1.0, 0.0)
        }
        Some('(') => complex(p)?,
        Some(ch) if ch.is_ascii_digit() || ch == '.' => Complex64::new(real(p)?, 0.0),
        Some(ch) => return Err(p.error(format!("expected a term, found '{ch}'"))),
        None => return Err(p.error("expected a term, found end of input")),
    };
    while p.peek() == Some('*') {
        p.bump();
        varpow(p, space, &mut exps)?;
    }
    Ok((ExponentVector::new(exps), coeff))
}

fn varpow(p: &mut Cursor, space: &Space, exps: &mut [u32]) -> Result<(), ParseError> {
    let k = variable(p, space)?;
    let mut power = 1;
    if p.peek() == Some('^') {
        p.bump();
        let at = p.offset();
        if p.peek() == Some('-') {
            return Err(ParseError::new(at, "negative exponent"));
        }
        let digits = p.digits();
        if digits.is_empty() {
            return Err(ParseError::new(at, "expected an exponent"));
        }
        power = digits
            .parse::<u32>()
            .map_err(|_| ParseError::new(at, "exponent too large"))?;
        if power == 0 {
            return Err(ParseError::new(at, "exponent must be positive"));
        }
    }
    exps[k] = exps[k]
        .checked_add(power)
        .ok_or_else(|| p.error("exponent too large"))?;
    if exps.iter().map(|&e| u64::from(e)).sum::<u64>() > u64::from(MAX_TERM_DEGREE) {
        return Err(p.error(format!("term degree exceeds {MAX_TERM_DEGREE}")));
    }
    Ok(())
}

fn variable(p: &mut Cursor, space: &Space) -> Result<usize, ParseError> {
    let start = p.offset();
    p.expect('z')?;
    let index_at = p.offset();
    let parse_index = |s: &str, at: usize| -> Result<usize, ParseError> {
        let i: usize = s
            .parse()
            .map_err(|_| ParseError::new(at, "expected a variable index"))?;
        if i == 0 {
            return Err(ParseError::new(at, "indices start at 1"));
        }
        Ok(i - 1)
    };
    match space {
        Space::Vector(n) => {
            if p.peek() == Some('{') {
                return Err(ParseError::new(index_at, "braced indices need a symmetric space"));
            }
            let i = parse_index(&p.digits(), index_at)?;
            if i >= *n {
                return Err(ParseError::new(start, format!("index out of declared order {n}")));
            }
            Ok(i)
        }
        Space::Sym(s) => {
            let (i, j) = if p.peek() == Some('{') {
                p.bump();
                let a_at = p.offset();
                let a = parse_index(&p.digits(), a_at)?;
                p.expect(',')?;
                let b_at = p.offset();
                let b = parse_index(&p.digits(), b_at)?;
                p.expect('}')?;
                (a, b)
            } else {
                let d = p.digits();
                if d.len() != 2 {
                    return Err(ParseError::new(
                        index_at,
                        "symmetric variables need two single-digit indices or z{i,j}",
                    ));
                }
                let a = parse_index(&d[..1], index_at)?;
                let b = parse_index(&d[1..], index_at)?;
                (a, b)
            };
            if i >= s.order() || j >= s.order() {
                return Err(ParseError::new(
                    start,
                    format!("index out of declared order {}", s.order()),
                ));
            }
            Ok(s.index(i, j))
        }
    }
}

fn complex(p: &mut Cursor) -> Result<Complex64, ParseError> {
    p.expect('(')?;
    let re_sign = p.sign();
    let re = real(p)? * re_sign;
    let im_sign = match p.peek() {
        Some('+') => 1.0,
        Some('-') => -1.0,
        _ => return Err(p.error("expected '+' or '-' before the imaginary part")),
    };
    p.bump();
    let im = real(p)? * im_sign;
    p.expect('i')?;
    p.expect(')')?;
    Ok(Complex64::new(re, im))
}

fn real(p: &mut Cursor) -> Result<f64, ParseError> {
    let at = p.offset();
    let mut s = String::new();
    while let Some(ch) = p.peek() {
        if ch.is_ascii_digit() || ch == '.' {
            s.push(ch);
            p.bump();
        } else {
            break;
        }
    }
    if matches!(p.peek(), Some('e' | 'E')) {
        s.push('e');
        p.bump();
        if let Some(ch @ ('+' | '-')) = p.peek() {
            s.push(ch);
            p.bump();
        }
        s.push_str(&p.digits());
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && !s.is_empty() => Ok(x),
        _ => Err(ParseError::new(at, format!("malformed number '{s}'"))),
    }
}

/// Character cursor over the non-whitespace characters of a string, keeping byte offsets.
pub(crate) struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Self {
        Cursor {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            end: src.len(),
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    pub(crate) fn bump(&mut self) {
        self.pos += 1;
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub(crate) fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.offset(), message)
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    pub(crate) fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        s
    }

    /// Consumes an optional sign, returning `±1`.
    pub(crate) fn sign(&mut self) -> f64 {
        match self.peek() {
            Some('-') => {
                self.bump();
                -1.0
            }
            Some('+') => {
                self.bump();
                1.0
            }
            _ => 1.0,
        }
    }

    /// Consumes characters until one of `stops` (exclusive) or the end.
    pub(crate) fn take_until(&mut self, stops: &[char]) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| !stops.contains(c)) {
            s.push(c);
            self.bump();
        }
        s
    }
}

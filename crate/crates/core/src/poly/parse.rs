//! Recursive-descent parser shared by scalars and polynomials.
//!
//! Grammar: sums and differences of products; `*`, `/` (by constants only),
//! `^` with non-negative integer exponents, parentheses, implicit
//! multiplication by juxtaposition, integers, and the symbols `x y z`
//! (variables) and `w a` (the generators of K).

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::FieldK;
use crate::poly::{HomPoly, Monomial};

type Sparse = BTreeMap<Monomial, FieldK>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(pos: usize, msg: &str) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.to_string() })
}

fn constant(c: FieldK) -> Sparse {
    let mut m = Sparse::new();
    if !c.is_zero() {
        m.insert(Monomial::one(), c);
    }
    m
}

fn add_into(acc: &mut Sparse, other: &Sparse, negate: bool) {
    for (m, c) in other {
        let c = if negate { -c } else { c.clone() };
        let e = acc.entry(*m).or_insert_with(FieldK::zero);
        *e += &c;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut r = Sparse::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_into(&mut r, &constant_at(ma.mul(mb), ca * cb), false);
        }
    }
    r
}

fn constant_at(m: Monomial, c: FieldK) -> Sparse {
    let mut s = Sparse::new();
    s.insert(m, c);
    s
}

fn as_constant(s: &Sparse) -> Option<FieldK> {
    match s.len() {
        0 => Some(FieldK::zero()),
        1 => s.get(&Monomial::one()).cloned(),
        _ => None,
    }
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' | b'-' => {
                    self.pos += 1;
                    let t = self.term()?;
                    add_into(&mut acc, &t, c == b'-');
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = mul(&acc, &f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.unary()?;
                    let c = match as_constant(&f) {
                        Some(c) => c,
                        None => return err(at, "division by a non-constant"),
                    };
                    let inv = match c.inv() {
                        Ok(i) => i,
                        Err(_) => return err(at, "division by zero"),
                    };
                    acc = mul(&acc, &constant(inv));
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    let f = self.power()?;
                    acc = mul(&acc, &f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let v = self.unary()?;
                let mut r = Sparse::new();
                add_into(&mut r, &v, true);
                Ok(r)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.peek();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return err(start, "expected a non-negative integer exponent");
            }
            let e: u32 = match std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse() {
                Ok(e) => e,
                Err(_) => return err(start, "exponent out of range"),
            };
            let mut acc = constant(FieldK::one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Sparse> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return err(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = s.parse().expect("digits");
                Ok(constant(FieldK::from_bigint(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                match c {
                    b'x' => Ok(constant_at(Monomial::new(1, 0, 0), FieldK::one())),
                    b'y' => Ok(constant_at(Monomial::new(0, 1, 0), FieldK::one())),
                    b'z' => Ok(constant_at(Monomial::new(0, 0, 1), FieldK::one())),
                    b'w' => Ok(constant(FieldK::omega())),
                    b'a' => Ok(constant(FieldK::alpha())),
                    _ => err(at, "unknown symbol"),
                }
            }
            Some(_) => err(at, "unexpected character"),
            None => err(at, "unexpected end of input"),
        }
    }
}

fn parse_sparse(s: &str) -> Result<Sparse> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos, "trailing input");
    }
    Ok(v)
}

/// Parses an element of K such as `3/2 + 1*w - 2*a^2`.
pub fn parse_scalar(s: &str) -> Result<FieldK> {
    let v = parse_sparse(s)?;
    as_constant(&v).ok_or(Error::Parse { pos: 0, msg: "expected a constant".into() })
}

/// Parses a homogeneous polynomial. A zero input gets degree 0.
pub fn parse_hompoly(s: &str) -> Result<HomPoly> {
    let v = parse_sparse(s)?;
    let degree = v.keys().next().map(Monomial::degree).unwrap_or(0);
    if v.keys().any(|m| m.degree() != degree) {
        return err(0, "polynomial is not homogeneous");
    }
    HomPoly::from_terms(degree, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        let x = parse_scalar("3/2 + 1*w - 2*a^2").unwrap();
        assert_eq!(x.coords()[0], crate::field::Rational::new(3.into(), 2.into()));
        assert!(parse_scalar("w^2 + w + 1").unwrap().is_zero());
        assert_eq!(parse_scalar("a^3").unwrap(), FieldK::from_int(2));
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1/0").is_err());
    }

    #[test]
    fn polynomials() {
        let f = parse_hompoly("21(x^2+y^2) - 22xy - 6(x+y)z + z^2").unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.len(), 6);
        assert!(parse_hompoly("x^2 + y").is_err());
        assert!(parse_hompoly("x^2 + (y").is_err());
        assert!(parse_hompoly("x / y").is_err());
    }
}

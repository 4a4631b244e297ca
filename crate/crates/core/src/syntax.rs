//! Text syntax for rings, monomials, ideals and subquotients.
//!
//! ```text
//! ring      := ("Q" | "F" prime) "[" name ("," name)* "]"
//! monomial  := "1" | factor ("*"? factor)*
//! factor    := name ("^" digits | digits)?
//! ideal     := "(" ("0" | monomial ("," monomial)*) ")"
//! module    := ideal "/" ideal
//! ```
//!
//! Inside a monomial, the longest declared variable name is matched first,
//! so `x2y` reads as `x^2*y` in `Q[x,y]`. Errors carry a byte offset into the
//! input.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use crate::monomial::Monomial;
use crate::ring::{Field, RingContext};

/// A position-tracking reader over the input text.
#[derive(Debug, Clone)]
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0, base: 0 }
    }

    /// A cursor whose reported positions are shifted by `base`.
    pub fn with_offset(src: &'a str, base: usize) -> Self {
        Cursor { src, pos: 0, base }
    }

    pub fn pos(&self) -> usize {
        self.base + self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos(), msg)
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    /// `[A-Za-z_][A-Za-z0-9_]*`.
    pub fn identifier(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return Err(self.error("expected an identifier"));
        }
        self.pos += end;
        Ok(&rest[..end])
    }

    /// Consume the longest prefix (after whitespace) whose characters
    /// satisfy `pred`.
    pub fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let end = rest.find(|c: char| !pred(c)).unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn digits(&mut self) -> Option<&'a str> {
        let rest = self.rest();
        let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if end == 0 {
            return None;
        }
        self.pos += end;
        Some(&rest[..end])
    }

    pub fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let at = self.pos();
        let d = self.digits().ok_or_else(|| Error::parse(at, "expected a number"))?;
        d.parse().map_err(|_| Error::parse(at, format!("number {d} is too large")))
    }

    pub fn ring(&mut self) -> Result<RingContext> {
        self.skip_ws();
        let at = self.pos();
        let tag = self.identifier()?;
        let field = if tag == "Q" {
            Field::Rationals
        } else if let Some(p) = tag.strip_prefix('F') {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::parse(at, format!("unknown field {tag:?}")))?;
            Field::prime(p).map_err(|e| Error::parse(at, e.to_string()))?
        } else {
            return Err(Error::parse(at, format!("unknown field {tag:?}; use Q or Fp")));
        };
        self.expect('[')?;
        let mut names = vec![self.identifier()?.to_string()];
        while self.eat(',') {
            names.push(self.identifier()?.to_string());
        }
        self.expect(']')?;
        RingContext::new(field, names).map_err(|e| Error::parse(at, e.to_string()))
    }

    pub fn monomial(&mut self, ring: &RingContext) -> Result<Monomial> {
        self.skip_ws();
        let n = ring.nvars();
        let mut exps = vec![0u32; n];
        if self.rest().starts_with('1') {
            let at = self.pos();
            let d = self.digits().unwrap_or("");
            if d != "1" {
                return Err(Error::parse(at, "a monomial has no coefficient"));
            }
            return Ok(Monomial::new(exps));
        }
        loop {
            self.skip_ws();
            let at = self.pos();
            let rest = self.rest();
            let var = ring
                .var_names()
                .iter()
                .enumerate()
                .filter(|(_, name)| rest.starts_with(name.as_str()))
                .max_by_key(|(_, name)| name.len());
            let Some((v, name)) = var else {
                let shown: String = rest.chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
                return Err(Error::parse(at, format!("undeclared variable {shown:?}")));
            };
            self.pos += name.len();
            let e = if self.rest().starts_with('^') {
                self.pos += 1;
                let at = self.pos();
                if self.rest().starts_with('-') {
                    return Err(Error::parse(at, "malformed exponent: negative"));
                }
                let d = self.digits().ok_or_else(|| Error::parse(at, "malformed exponent"))?;
                d.parse::<u32>()
                    .map_err(|_| Error::parse(at, "malformed exponent: too large"))?
            } else {
                match self.digits() {
                    Some(d) => d
                        .parse::<u32>()
                        .map_err(|_| Error::parse(at, "malformed exponent: too large"))?,
                    None => 1,
                }
            };
            exps[v] = exps[v].checked_add(e).ok_or_else(|| Error::parse(at, "exponent overflow"))?;
            // continue on '*' or on an adjacent variable name
            if self.rest().starts_with('*') {
                self.pos += 1;
                continue;
            }
            let next = self.rest();
            if ring.var_names().iter().any(|name| next.starts_with(name.as_str())) {
                continue;
            }
            if next.starts_with(|c: char| c.is_ascii_alphabetic()) {
                let shown: String = next.chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
                return Err(self.error(format!("undeclared variable {shown:?}")));
            }
            return Ok(Monomial::new(exps));
        }
    }

    pub fn ideal(&mut self, ring: &RingContext) -> Result<MonomialIdeal> {
        self.expect('(')?;
        let n = ring.nvars();
        if self.peek() == Some('0') {
            let at = self.pos();
            self.digits();
            if self.eat(')') {
                return Ok(MonomialIdeal::zero(n));
            }
            return Err(Error::parse(at, "(0) cannot be combined with other generators"));
        }
        let mut gens = vec![self.monomial(ring)?];
        while self.eat(',') {
            gens.push(self.monomial(ring)?);
        }
        self.expect(')')?;
        Ok(MonomialIdeal::new(n, gens))
    }

    pub fn module(&mut self, ring: &RingContext) -> Result<Subquotient> {
        let a = self.ideal(ring)?;
        self.expect('/')?;
        self.skip_ws();
        let at = self.pos();
        let b = self.ideal(ring)?;
        Subquotient::new(a, b).map_err(|e| Error::parse(at, e.to_string()))
    }
}

fn whole<T>(src: &str, f: impl FnOnce(&mut Cursor) -> Result<T>) -> Result<T> {
    let mut c = Cursor::new(src);
    let v = f(&mut c)?;
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(v)
}

pub fn parse_ring(src: &str) -> Result<RingContext> {
    whole(src, |c| c.ring())
}

pub fn parse_monomial(src: &str, ring: &RingContext) -> Result<Monomial> {
    whole(src, |c| c.monomial(ring))
}

pub fn parse_ideal(src: &str, ring: &RingContext) -> Result<MonomialIdeal> {
    whole(src, |c| c.ideal(ring))
}

pub fn parse_module(src: &str, ring: &RingContext) -> Result<Subquotient> {
    whole(src, |c| c.module(ring))
}

pub fn print_ring(ring: &RingContext) -> String {
    ring.to_string()
}

pub fn print_monomial(m: &Monomial, ring: &RingContext) -> String {
    m.render(ring.var_names())
}

pub fn print_ideal(i: &MonomialIdeal, ring: &RingContext) -> String {
    i.render(ring.var_names())
}

pub fn print_module(m: &Subquotient, ring: &RingContext) -> String {
    m.render(ring.var_names())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qxy() -> RingContext {
        parse_ring("Q[x,y]").unwrap()
    }

    #[test]
    fn rings() {
        assert_eq!(qxy().nvars(), 2);
        let r = parse_ring("F7[x, y, z]").unwrap();
        assert_eq!(r.field(), Field::Prime(7));
        assert_eq!(print_ring(&r), "F7[x,y,z]");
        assert!(matches!(parse_ring("F8[x]"), Err(Error::Parse { pos: 0, .. })));
        assert!(parse_ring("Q[x,x]").is_err());
        assert!(parse_ring("R[x]").is_err());
    }

    #[test]
    fn monomials() {
        let r = qxy();
        assert_eq!(parse_monomial("x^2*y", &r).unwrap(), Monomial::new(vec![2, 1]));
        assert_eq!(parse_monomial("x2y", &r).unwrap(), Monomial::new(vec![2, 1]));
        assert_eq!(parse_monomial("xy^3", &r).unwrap(), Monomial::new(vec![1, 3]));
        assert_eq!(parse_monomial("1", &r).unwrap(), Monomial::one(2));
        assert_eq!(print_monomial(&Monomial::new(vec![2, 1]), &r), "x^2*y");
        assert!(matches!(parse_monomial("x*z", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_monomial("x^", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_monomial("x^-1", &r).is_err());
        assert!(parse_monomial("2x", &r).is_err());
    }

    #[test]
    fn longest_name_wins() {
        let r = RingContext::standard(Field::Rationals, 12).unwrap();
        let m = parse_monomial("x12x1^2", &r).unwrap();
        assert_eq!(m.exps()[11], 1);
        assert_eq!(m.exps()[0], 2);
    }

    #[test]
    fn ideals_and_modules() {
        let r = qxy();
        let i = parse_ideal("(x^2*y, y^3, x^2)", &r).unwrap();
        assert_eq!(print_ideal(&i, &r), "(x^2, y^3)");
        assert!(parse_ideal("(0)", &r).unwrap().is_zero());
        assert!(parse_ideal("(1)", &r).unwrap().is_unit());
        assert!(parse_ideal("(0, x)", &r).is_err());
        let m = parse_module("(1)/(x*y)", &r).unwrap();
        assert_eq!(print_module(&m, &r), "(1)/(x*y)");
        match parse_module("(x)/(y)", &r) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_ideal("(x) extra", &r).is_err());
    }

    #[test]
    fn print_then_parse_round_trips() {
        let r = parse_ring("F3[x,y,z]").unwrap();
        for src in ["(x^2*z, y)", "(0)", "(1)", "(x*y*z)"] {
            let i = parse_ideal(src, &r).unwrap();
            assert_eq!(parse_ideal(&print_ideal(&i, &r), &r).unwrap(), i);
        }
    }
}

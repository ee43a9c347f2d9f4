//! Parser for the canonical text form.
//!
//! Grammar, with the usual precedence:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | "+" unary | power
//! power  := atom ("^" "-"? integer)?
//! atom   := integer | "z" | "w" | "lambda" | "λ" | "(" expr ")"
//! ```

use num_bigint::BigInt;

use super::func::RatFun;
use super::poly::Var;
use crate::error::{Error, Result};

pub fn parse_ratfun(src: &str) -> Result<RatFun> {
    let mut p = Parser { src, pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| Error::Parse {
                    offset: at,
                    message: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFun> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected integer exponent"));
        }
        let e: u32 = digits
            .parse()
            .map_err(|_| self.err("exponent out of range"))?;
        let p = base.pow(e);
        if negative {
            p.reciprocal().map_err(|_| self.err("negative power of zero"))
        } else {
            Ok(p)
        }
    }

    fn digits(&mut self) -> &'a str {
        let rest = self.rest();
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        self.pos += n;
        &rest[..n]
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RatFun::constant(n))
            }
            Some(_) => {
                for (name, v) in [
                    ("lambda", Var::Lambda),
                    ("λ", Var::Lambda),
                    ("z", Var::Z),
                    ("w", Var::W),
                ] {
                    if self.rest().starts_with(name) {
                        let after = &self.rest()[name.len()..];
                        if after.starts_with(|c: char| c.is_alphanumeric() || c == '_') {
                            continue;
                        }
                        self.pos += name.len();
                        return Ok(RatFun::var(v));
                    }
                }
                Err(self.err("unknown symbol"))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}

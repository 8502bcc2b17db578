use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, FieldResult, QuadExt, RatFunc};
use crate::error::FieldError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> FieldResult<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
            }
            out.push(Tok::Num(digits.parse().expect("ascii digits")));
        } else if c.is_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_alphanumeric() && d != '_' {
                    break;
                }
                name.push(d);
                chars.next();
            }
            out.push(Tok::Ident(name));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(FieldError::Parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, F, R> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
    resolve: R,
    _f: std::marker::PhantomData<F>,
}

impl<'a, F: Field, R: Fn(&str) -> Option<F>> Parser<'a, F, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> FieldError {
        FieldError::Parse(format!("{msg} in `{}`", self.src))
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> FieldResult<F> {
        let mut acc = if self.eat('-') {
            self.term()?.negated()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := power (('*'|'/')? power)*
    fn term(&mut self) -> FieldResult<F> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.power()?)?;
            } else if self.eat('/') {
                acc = acc.try_div(&self.power()?)?;
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = acc.try_mul(&self.power()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    // power := atom ('^' ['-'] integer)?
    fn power(&mut self) -> FieldResult<F> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let exp = match self.peek() {
            Some(Tok::Num(n)) => u32::try_from(n.clone()).map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected integer exponent")),
        };
        self.pos += 1;
        let mut out = F::one();
        for _ in 0..exp {
            out = out.try_mul(&base)?;
        }
        if negative {
            out = out.try_inv()?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> FieldResult<F> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(F::from_rational(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                (self.resolve)(&name).ok_or_else(|| self.err(&format!("unknown variable `{name}`")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(v)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.negated())
            }
            Some(t) => Err(self.err(&format!("unexpected `{t:?}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse an arithmetic expression over `F`.
///
/// Grammar: integers, `+ - * / ^`, parentheses and implicit multiplication
/// (`2a`, `a b`). Identifiers are looked up through `resolve`.
pub fn parse_expr<F: Field>(text: &str, resolve: impl Fn(&str) -> Option<F>) -> FieldResult<F> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(FieldError::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        src: text,
        resolve,
        _f: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

pub fn parse_rational(text: &str) -> FieldResult<BigRational> {
    parse_expr(text, |_| None)
}

/// Expressions in `a` and `b`.
pub fn parse_ratfunc(text: &str) -> FieldResult<RatFunc> {
    parse_expr(text, |name| match name {
        "a" => Some(RatFunc::var_a()),
        "b" => Some(RatFunc::var_b()),
        _ => None,
    })
}

/// Expressions in `w` (also spelled `ω` or `omega`).
pub fn parse_quadext(text: &str) -> FieldResult<QuadExt> {
    parse_expr(text, |name| match name {
        "w" | "ω" | "omega" => Some(QuadExt::omega()),
        _ => None,
    })
}

//! Recursive-descent parser for the small arithmetic languages used on the
//! command line: `x1^2*x2 + x3`, `sq1(x1*x2*x3)`, `(1 - z)^2`, `3/2*z`.
//!
//! The grammar is fixed; what the symbols mean is supplied by an
//! [`Algebra`].

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset} in {input:?}")]
pub struct ParseError {
    pub message: String,
    pub offset: usize,
    pub input: String,
}

/// Interpretation of the grammar's leaves and operators.
pub trait Algebra {
    type Value: Clone;

    fn integer(&self, v: i64) -> Result<Self::Value, String>;
    fn variable(&self, name: &str) -> Result<Self::Value, String>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value, String>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn pow(&self, a: Self::Value, e: u32) -> Result<Self::Value, String>;

    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String> {
        let nb = self.neg(b)?;
        self.add(a, nb)
    }

    fn div(&self, _a: Self::Value, _b: Self::Value) -> Result<Self::Value, String> {
        Err("division is not supported here".into())
    }

    fn call(&self, name: &str, _arg: Self::Value) -> Result<Self::Value, String> {
        Err(format!("unknown function {name:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Op(char),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let err = |offset: usize, message: &str| ParseError {
        message: message.to_string(),
        offset,
        input: input.to_string(),
    };
    let mut out = Vec::new();
    let mut it = input.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                it.next();
            }
            let v = s.parse().map_err(|_| err(i, "integer literal too large"))?;
            out.push((i, Tok::Int(v)));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                it.next();
            }
            out.push((i, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            it.next();
        } else if c == '−' {
            out.push((i, Tok::Op('-')));
            it.next();
        } else {
            return Err(err(i, &format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, A: Algebra> {
    alg: &'a A,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    input: &'a str,
}

impl<'a, A: Algebra> Parser<'a, A> {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.input.len(), |t| t.0)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            message: message.into(),
            offset: self.offset(),
            input: self.input.to_string(),
        })
    }

    fn lift<T>(&self, r: Result<T, String>) -> Result<T, ParseError> {
        r.or_else(|m| self.fail(m))
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expect_op(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {c:?}"))
        }
    }

    fn expr(&mut self) -> Result<A::Value, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' {
                self.lift(self.alg.add(acc, rhs))?
            } else {
                self.lift(self.alg.sub(acc, rhs))?
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<A::Value, ParseError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                self.lift(self.alg.mul(acc, rhs))?
            } else {
                self.lift(self.alg.div(acc, rhs))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<A::Value, ParseError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            let v = self.unary()?;
            return self.lift(self.alg.neg(v));
        }
        if self.peek_op() == Some('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<A::Value, ParseError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((_, Tok::Int(e))) => {
                    let e = u32::try_from(*e).or_else(|_| self.fail("exponent too large"))?;
                    self.pos += 1;
                    return self.lift(self.alg.pow(base, e));
                }
                _ => return self.fail("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<A::Value, ParseError> {
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Int(v))) => {
                self.pos += 1;
                self.lift(self.alg.integer(v))
            }
            Some((at, Tok::Ident(name))) => {
                self.pos += 1;
                let r = if self.peek_op() == Some('(') {
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.expect_op(')')?;
                    self.alg.call(&name, arg)
                } else {
                    self.alg.variable(&name)
                };
                r.map_err(|message| ParseError {
                    message,
                    offset: at,
                    input: self.input.to_string(),
                })
            }
            Some((_, Tok::Op('('))) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect_op(')')?;
                Ok(v)
            }
            Some(_) => self.fail("unexpected token"),
            None => self.fail("unexpected end of input"),
        }
    }
}

/// Parses `input` completely under `alg`.
pub fn parse<A: Algebra>(alg: &A, input: &str) -> Result<A::Value, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser {
        alg,
        toks,
        pos: 0,
        input,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.fail("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integers with a single variable `n = 10`.
    struct Ints;

    impl Algebra for Ints {
        type Value = i64;
        fn integer(&self, v: i64) -> Result<i64, String> {
            Ok(v)
        }
        fn variable(&self, name: &str) -> Result<i64, String> {
            if name == "n" {
                Ok(10)
            } else {
                Err(format!("unknown variable {name}"))
            }
        }
        fn add(&self, a: i64, b: i64) -> Result<i64, String> {
            Ok(a + b)
        }
        fn neg(&self, a: i64) -> Result<i64, String> {
            Ok(-a)
        }
        fn mul(&self, a: i64, b: i64) -> Result<i64, String> {
            Ok(a * b)
        }
        fn pow(&self, a: i64, e: u32) -> Result<i64, String> {
            Ok(a.pow(e))
        }
        fn call(&self, name: &str, arg: i64) -> Result<i64, String> {
            match name {
                "double" => Ok(2 * arg),
                _ => Err(format!("unknown function {name}")),
            }
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(parse(&Ints, "1 + 2*3^2").unwrap(), 19);
        assert_eq!(parse(&Ints, "-(1 - n)^2").unwrap(), -81);
        assert_eq!(parse(&Ints, "double(n) - 3 - 4").unwrap(), 13);
        assert_eq!(parse(&Ints, "2 − 1").unwrap(), 1);
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse(&Ints, "1 + m").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(parse(&Ints, "(1 + 2").is_err());
        assert!(parse(&Ints, "1 2").is_err());
        assert!(parse(&Ints, "3/4").is_err());
        assert!(parse(&Ints, "2^-1").is_err());
        assert!(parse(&Ints, "").is_err());
        assert!(parse(&Ints, "1 $ 2").is_err());
    }
}

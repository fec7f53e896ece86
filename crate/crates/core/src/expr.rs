//! Recursive-descent parser for field-element expressions such as
//! `(t1^2 + 3/2*u)/(v + 1)`.

use thiserror::Error;

use crate::coeff::{FieldDescriptor, FieldValue};
use crate::field::{Field, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("column {column}: {message}")]
pub struct ExprError {
    /// 1-based character position in the input.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(num_bigint::BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer {
    tokens: Vec<(Token, usize)>,
}

impl Lexer {
    fn new(input: &str) -> Result<Self, ExprError> {
        let chars: Vec<char> = input.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let start = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let mut s = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    s.push(chars[i]);
                    i += 1;
                }
                tokens.push((Token::Int(s.parse().expect("digits")), start));
            } else if c.is_alphabetic() || c == '_' {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    s.push(chars[i]);
                    i += 1;
                }
                tokens.push((Token::Ident(s), start));
            } else if "+-*/^()".contains(c) {
                tokens.push((Token::Op(c), start));
                i += 1;
            } else {
                return Err(ExprError {
                    column: start,
                    message: format!("unexpected character '{c}'"),
                });
            }
        }
        tokens.push((Token::End, chars.len() + 1));
        Ok(Lexer { tokens })
    }
}

struct Parser<'a> {
    field: &'a FieldDescriptor,
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn column(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if *self.peek() == Token::Op(op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FieldValue, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldValue, ExprError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if *self.peek() == Token::Op('/') {
                self.pos += 1;
                let column = self.column();
                let d = self.unary()?;
                acc = acc.div(&d).ok_or(ExprError {
                    column,
                    message: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldValue, ExprError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldValue, ExprError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let Token::Int(e) = self.peek().clone() else {
            return self.error("expected an integer exponent");
        };
        let column = self.column();
        self.pos += 1;
        let e: u32 = e.try_into().map_err(|_| ExprError {
            column,
            message: "exponent too large".into(),
        })?;
        let v = base.pow(e);
        if negative {
            v.inv().ok_or(ExprError {
                column,
                message: "division by zero".into(),
            })
        } else {
            Ok(v)
        }
    }

    fn atom(&mut self) -> Result<FieldValue, ExprError> {
        match self.peek().clone() {
            Token::Int(n) => {
                self.pos += 1;
                Ok(FieldValue::from_bigint(self.field, &n))
            }
            Token::Ident(name) => {
                let column = self.column();
                self.pos += 1;
                self.field.var(&name).map_err(|_| ExprError {
                    column,
                    message: format!("unknown variable '{name}' for field {}", self.field),
                })
            }
            Token::Op('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(v)
            }
            Token::Op(c) => self.error(format!("unexpected '{c}'")),
            Token::End => self.error("unexpected end of input"),
        }
    }
}

/// Parse one expression into an element of `field`.
pub fn parse_value(input: &str, field: &FieldDescriptor) -> Result<FieldValue, ExprError> {
    let lexer = Lexer::new(input)?;
    let mut p = Parser {
        field,
        tokens: lexer.tokens,
        pos: 0,
    };
    let v = p.expr()?;
    if *p.peek() != Token::End {
        return p.error("unexpected trailing input");
    }
    Ok(v)
}

/// Parse a comma-separated list; commas inside parentheses do not split.
/// Error columns refer to the whole input.
pub fn parse_value_list(input: &str, field: &FieldDescriptor) -> Result<Vec<FieldValue>, ExprError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let chars: Vec<char> = input.chars().collect();
    let mut pieces = Vec::new();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push((start, i));
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((start, chars.len()));
    for (a, b) in pieces {
        let text: String = chars[a..b].iter().collect();
        if text.trim().is_empty() {
            return Err(ExprError {
                column: a + 1,
                message: "empty entry".into(),
            });
        }
        out.push(parse_value(&text, field).map_err(|e| ExprError {
            column: e.column + a,
            message: e.message,
        })?);
    }
    Ok(out)
}

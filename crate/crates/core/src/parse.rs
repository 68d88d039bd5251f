//! Recursive-descent parser for polynomial expressions in `x`.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*'? unary)*
//! unary    := ('-' | '+') unary | factor
//! factor   := base ('^' uint)?
//! base     := rational | 'x' | '(' expr ')'
//!           | 'binomial(' expr ',' uint ')' | 'risingfactorial(' expr ',' uint ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is ignored. Implicit multiplication applies only when the next
//! token starts a base, so `x -1` is a subtraction.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

pub const DEFAULT_EXPONENT_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigUint),
    X,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Int(digits.parse().expect("ascii digits")),
                    column,
                });
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = if word == "x" { Tok::X } else { Tok::Ident(word) };
                out.push(Token { tok, column });
                continue;
            }
            other => return Err(syntax(column, format!("unexpected character '{other}'"))),
        };
        out.push(Token { tok, column });
        i += 1;
    }
    out.push(Token {
        tok: Tok::End,
        column: chars.len() + 1,
    });
    Ok(out)
}

/// Polynomial expression parser with a configurable exponent cap.
#[derive(Clone, Debug)]
pub struct Parser {
    exponent_cap: u64,
}

impl Default for Parser {
    fn default() -> Self {
        Self {
            exponent_cap: DEFAULT_EXPONENT_CAP,
        }
    }
}

struct State<'a> {
    tokens: Vec<Token>,
    pos: usize,
    cap: u64,
    _text: &'a str,
}

impl Parser {
    pub fn with_exponent_cap(exponent_cap: u64) -> Self {
        Self { exponent_cap }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let mut st = State {
            tokens: tokenize(text)?,
            pos: 0,
            cap: self.exponent_cap,
            _text: text,
        };
        let p = st.expr()?;
        let t = st.peek();
        if t.tok != Tok::End {
            return Err(syntax(t.column, format!("unexpected {}", describe(&t.tok))));
        }
        Ok(p)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::X => "'x'".into(),
        Tok::Ident(w) => format!("identifier '{w}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Comma => "','".into(),
        Tok::End => "end of input".into(),
    }
}

impl State<'_> {
    fn peek(&self) -> Token {
        self.tokens[self.pos].clone()
    }

    fn bump(&mut self) -> Token {
        let t = self.peek();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let t = self.bump();
        if t.tok == want {
            Ok(())
        } else {
            Err(syntax(
                t.column,
                format!("expected {}, found {}", describe(&want), describe(&t.tok)),
            ))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.checked_mul(&acc, &rhs)?;
                }
                Tok::Int(_) | Tok::X | Tok::LParen | Tok::Ident(_) => {
                    let rhs = self.unary()?;
                    acc = self.checked_mul(&acc, &rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn checked_mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        let deg = a.deg() as u64 + b.deg() as u64;
        if deg > self.cap {
            return Err(Error::ExponentOverflow {
                exponent: deg.to_string(),
                cap: self.cap,
                column: self.peek().column,
            });
        }
        Ok(a * b)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.factor(),
        }
    }

    fn uint(&mut self) -> Result<(BigUint, usize)> {
        let t = self.bump();
        match t.tok {
            Tok::Int(n) => Ok((n, t.column)),
            other => Err(syntax(
                t.column,
                format!("expected a nonnegative integer, found {}", describe(&other)),
            )),
        }
    }

    fn small_uint(&mut self) -> Result<u64> {
        let (n, column) = self.uint()?;
        match n.to_u64() {
            Some(v) if v <= self.cap => Ok(v),
            _ => Err(Error::ExponentOverflow {
                exponent: n.to_string(),
                cap: self.cap,
                column,
            }),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (n, column) = self.uint()?;
        let e = match n.to_u64() {
            Some(v) if v <= self.cap => v,
            _ => {
                return Err(Error::ExponentOverflow {
                    exponent: n.to_string(),
                    cap: self.cap,
                    column,
                })
            }
        };
        if (base.deg() as u64).saturating_mul(e) > self.cap {
            return Err(Error::ExponentOverflow {
                exponent: e.to_string(),
                cap: self.cap,
                column,
            });
        }
        Ok(base.pow(e as usize))
    }

    fn base(&mut self) -> Result<Polynomial> {
        let t = self.bump();
        match t.tok {
            Tok::Int(n) => {
                let num = Rational::from_integer(n.into());
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let (d, column) = self.uint()?;
                    if d.is_zero() {
                        return Err(syntax(column, "zero denominator"));
                    }
                    Ok(Polynomial::constant(num / Rational::from_integer(d.into())))
                } else {
                    Ok(Polynomial::constant(num))
                }
            }
            Tok::X => Ok(Polynomial::x()),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let rising = match name.as_str() {
                    "binomial" => false,
                    "risingfactorial" => true,
                    _ => return Err(syntax(t.column, format!("unknown function '{name}'"))),
                };
                self.expect(Tok::LParen)?;
                let arg = self.expr()?;
                self.expect(Tok::Comma)?;
                let k = self.small_uint()?;
                self.expect(Tok::RParen)?;
                if (arg.deg() as u64).saturating_mul(k) > self.cap {
                    return Err(Error::ExponentOverflow {
                        exponent: k.to_string(),
                        cap: self.cap,
                        column: t.column,
                    });
                }
                Ok(if rising {
                    rising_factorial(&arg, k as usize)
                } else {
                    binomial_poly(&arg, k as usize)
                })
            }
            other => Err(syntax(t.column, format!("unexpected {}", describe(&other)))),
        }
    }
}

/// `e (e - 1) ... (e - k + 1) / k!`.
pub fn binomial_poly(e: &Polynomial, k: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 0..k {
        acc = &acc * &(e - &Polynomial::constant(rational::int(i as i64)));
    }
    acc.scale(&Rational::from_integer(rational::factorial(k as u64)).recip())
}

/// `e (e + 1) ... (e + k - 1)`.
pub fn rising_factorial(e: &Polynomial, k: usize) -> Polynomial {
    (0..k).fold(Polynomial::one(), |acc, i| {
        &acc * &(e + &Polynomial::constant(rational::int(i as i64)))
    })
}

/// Parses with the default exponent cap.
pub fn parse(text: &str) -> Result<Polynomial> {
    Parser::default().parse(text)
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.canonical_text())
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map_err(serde::de::Error::custom)
    }
}

//! Expression language for the command line: lexer, parser, and
//! pretty-printer.
//!
//! Grammar, loosest to tightest binding:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | power
//! power  := atom ('^' integer)?
//! atom   := number | unit | name '(' expr ')' | '(' expr ')'
//! ```
//!
//! Numbers are unsigned integers, rationals `p/q`, or decimals. A
//! rational literal is a single token: `/` is not an operator, since
//! in a ring with zero divisors division belongs behind the explicit
//! `inv(..)` function. Names are case-insensitive. Exponents are
//! nonnegative integer literals; negative powers spell as
//! `inv(x)^n` or `inv(x^n)`.

use std::fmt;

use bicx_core::ConjTag;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Basis symbols recognized in source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitSym {
    /// First imaginary unit.
    I1,
    /// Second imaginary unit.
    I2,
    /// Hyperbolic unit `i1*i2`.
    J1,
    /// Idempotent `(1 + j1)/2`.
    E1,
    /// Idempotent `(1 - j1)/2`.
    E2,
}

impl UnitSym {
    /// Lowercase source spelling.
    pub fn name(self) -> &'static str {
        match self {
            UnitSym::I1 => "i1",
            UnitSym::I2 => "i2",
            UnitSym::J1 => "j1",
            UnitSym::E1 => "e1",
            UnitSym::E2 => "e2",
        }
    }

    fn from_name(name: &str) -> Option<UnitSym> {
        match name {
            "i1" => Some(UnitSym::I1),
            "i2" => Some(UnitSym::I2),
            "j1" => Some(UnitSym::J1),
            "e1" => Some(UnitSym::E1),
            "e2" => Some(UnitSym::E2),
            _ => None,
        }
    }
}

/// Abstract syntax tree of one command-line expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative rational literal (integers and decimals normalize here).
    Literal(BigRational),
    /// One of the five basis symbols.
    Unit(UnitSym),
    /// Unary minus.
    Neg(Box<Expr>),
    /// Sum.
    Add(Box<Expr>, Box<Expr>),
    /// Difference.
    Sub(Box<Expr>, Box<Expr>),
    /// Product.
    Mul(Box<Expr>, Box<Expr>),
    /// Nonnegative integer power.
    Pow(Box<Expr>, u32),
    /// One of the eight conjugations.
    Conj(ConjTag, Box<Expr>),
    /// Multiplicative inverse via the idempotent components.
    Inv(Box<Expr>),
    /// Display transform: print the result in idempotent form.
    Idem(Box<Expr>),
    /// Display transform: print the result as a coordinate vector.
    Vec(Box<Expr>),
}

/// Parse failure with a byte offset into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset of the offending token.
    pub offset: usize,
    /// What the parser would have accepted at this point.
    pub expected: Vec<String>,
    /// The token actually found (`end of input` when exhausted).
    pub found: String,
}

impl SyntaxError {
    fn new(offset: usize, expected: &[&str], found: &str) -> SyntaxError {
        SyntaxError {
            offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: if found.is_empty() {
                "end of input".to_string()
            } else {
                found.to_string()
            },
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Debug, PartialEq)]
enum TokKind {
    Number(BigRational),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokKind,
    offset: usize,
    text: String,
}

fn lex(input: &str) -> Result<Vec<Token>, SyntaxError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if b.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value = if i + 1 < bytes.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit()
            {
                i += 1;
                let frac_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: BigInt = format!("{}{}", &input[start..frac_start - 1], &input[frac_start..i])
                    .parse()
                    .expect("digits");
                let scale = BigInt::from(10).pow((i - frac_start) as u32);
                BigRational::new(digits, scale)
            } else if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                let denom_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = input[start..denom_start - 1].parse().expect("digits");
                let denom: BigInt = input[denom_start..i].parse().expect("digits");
                if denom.is_zero() {
                    return Err(SyntaxError::new(
                        denom_start,
                        &["a nonzero denominator"],
                        &input[denom_start..i],
                    ));
                }
                BigRational::new(numer, denom)
            } else {
                BigRational::from_integer(input[start..i].parse().expect("digits"))
            };
            tokens.push(Token {
                kind: TokKind::Number(value),
                offset: start,
                text: input[start..i].to_string(),
            });
            continue;
        }
        if b.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                i += 1;
            }
            tokens.push(Token {
                kind: TokKind::Name(input[start..i].to_ascii_lowercase()),
                offset: start,
                text: input[start..i].to_string(),
            });
            continue;
        }
        let kind = match b {
            b'+' => TokKind::Plus,
            b'-' => TokKind::Minus,
            b'*' => TokKind::Star,
            b'^' => TokKind::Caret,
            b'(' => TokKind::LParen,
            b')' => TokKind::RParen,
            _ => {
                let found: String = input[start..].chars().take(1).collect();
                return Err(SyntaxError::new(
                    start,
                    &["a number", "a name", "one of + - * ^ ( )"],
                    &found,
                ));
            }
        };
        i += 1;
        tokens.push(Token {
            kind,
            offset: start,
            text: input[start..i].to_string(),
        });
    }
    tokens.push(Token {
        kind: TokKind::End,
        offset: input.len(),
        text: String::new(),
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

/// Parse one expression, requiring the whole input to be consumed.
pub fn parse(input: &str) -> Result<Expr, SyntaxError> {
    let mut parser = Parser {
        tokens: lex(input)?,
        pos: 0,
    };
    let expr = parser.expr()?;
    let trailing = parser.peek().clone();
    if trailing.kind != TokKind::End {
        return Err(SyntaxError::new(
            trailing.offset,
            &["an operator", "end of input"],
            &trailing.text,
        ));
    }
    Ok(expr)
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let token = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().kind {
                TokKind::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                TokKind::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.factor()?;
        while self.peek().kind == TokKind::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        if self.peek().kind == TokKind::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if self.peek().kind != TokKind::Caret {
            return Ok(base);
        }
        self.bump();
        let token = self.bump();
        let exponent = match &token.kind {
            TokKind::Number(value) if value.is_integer() => value.to_u32(),
            _ => None,
        };
        match exponent {
            Some(n) => Ok(Expr::Pow(Box::new(base), n)),
            None => Err(SyntaxError::new(
                token.offset,
                &["a nonnegative integer exponent"],
                &token.text,
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let token = self.bump();
        match &token.kind {
            TokKind::Number(value) => Ok(Expr::Literal(value.clone())),
            TokKind::Name(name) => {
                if let Some(unit) = UnitSym::from_name(name) {
                    return Ok(Expr::Unit(unit));
                }
                let call = |inner: Expr| -> Option<Expr> {
                    if let Some(tag) = ConjTag::from_name(name) {
                        Some(Expr::Conj(tag, Box::new(inner)))
                    } else {
                        match name.as_str() {
                            "inv" => Some(Expr::Inv(Box::new(inner))),
                            "idem" => Some(Expr::Idem(Box::new(inner))),
                            "vec" => Some(Expr::Vec(Box::new(inner))),
                            _ => None,
                        }
                    }
                };
                if call(Expr::Literal(BigRational::zero())).is_none() {
                    return Err(SyntaxError::new(
                        token.offset,
                        &["a unit (i1, i2, j1, e1, e2)", "a function name"],
                        &token.text,
                    ));
                }
                let open = self.bump();
                if open.kind != TokKind::LParen {
                    return Err(SyntaxError::new(open.offset, &["'('"], &open.text));
                }
                let inner = self.expr()?;
                let close = self.bump();
                if close.kind != TokKind::RParen {
                    return Err(SyntaxError::new(close.offset, &["')'"], &close.text));
                }
                Ok(call(inner).expect("validated above"))
            }
            TokKind::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.kind != TokKind::RParen {
                    return Err(SyntaxError::new(close.offset, &["')'"], &close.text));
                }
                Ok(inner)
            }
            _ => Err(SyntaxError::new(
                token.offset,
                &["a number", "a unit", "a function", "'('", "'-'"],
                &token.text,
            )),
        }
    }
}

impl Expr {
    /// Render with the fewest parentheses that re-parse to this tree.
    pub fn to_text(&self) -> String {
        self.render(0)
    }

    fn render(&self, min_level: u8) -> String {
        let (text, level) = match self {
            Expr::Literal(value) => (value.to_string(), 5),
            Expr::Unit(unit) => (unit.name().to_string(), 5),
            Expr::Conj(tag, inner) => (format!("{}({})", tag.name(), inner.render(0)), 5),
            Expr::Inv(inner) => (format!("inv({})", inner.render(0)), 5),
            Expr::Idem(inner) => (format!("idem({})", inner.render(0)), 5),
            Expr::Vec(inner) => (format!("vec({})", inner.render(0)), 5),
            Expr::Pow(base, n) => {
                // A fraction base reads like 5/4^2 without parentheses
                // even though the lexer keeps it atomic; always wrap it.
                let base_text = match &**base {
                    Expr::Literal(value) if !value.is_integer() => format!("({value})"),
                    other => other.render(5),
                };
                (format!("{base_text}^{n}"), 4)
            }
            Expr::Neg(inner) => (format!("-{}", inner.render(3)), 3),
            Expr::Mul(a, b) => (format!("{}*{}", a.render(2), b.render(3)), 2),
            Expr::Add(a, b) => (format!("{} + {}", a.render(1), b.render(2)), 1),
            Expr::Sub(a, b) => (format!("{} - {}", a.render(1), b.render(2)), 1),
        };
        if level < min_level {
            format!("({text})")
        } else {
            text
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

//! Text syntax for rings, squarefree monomials and polynomials.
//!
//! ```text
//! ring 6 over GF(2) params t
//! x1*x3                       # squarefree monomial
//! x1*x4 + 1/2*x2^2*(x5 - t)   # polynomial expression, expanded on parse
//! ```
//!
//! Polynomial expressions accept integer and `a/b` coefficients, `^` powers,
//! parentheses and the usual precedence. Over `GF4` the identifier `w` denotes
//! the primitive element (`w^2 = w + 1`). Everything after `#` is ignored.

use num_bigint::BigInt;

use super::field::{FieldSpec, Gf4, Scalar};
use super::poly::{Polynomial, Ring, RingSpec};
use super::varset::{SquarefreeMonomial, VarSet};
use super::RingError;

/// Parse failure with the byte offset (column) where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {}: {kind}", .offset + 1)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` repeated in a squarefree monomial")]
    NotSquarefree(String),
    #[error("parameter `{0}` cannot appear in a squarefree monomial")]
    ParameterInMonomial(String),
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("malformed ring header: {0}")]
    BadHeader(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl ParseError {
    fn new(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn strip_comment(text: &str) -> &str {
    match text.find('#') {
        Some(i) => &text[..i],
        None => text,
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let text = strip_comment(text);
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i]
                .parse()
                .map_err(|_| ParseError::new(start, ParseErrorKind::BadNumber(text[start..i].into())))?;
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap_or(c);
            return Err(ParseError::new(i, ParseErrorKind::UnexpectedChar(ch)));
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'r> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'r Ring,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::new(
            self.offset(),
            ParseErrorKind::Unexpected {
                expected,
                found: self.peek().describe(),
            },
        )
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
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

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let off = self.offset();
            match self.bump().1 {
                Tok::Int(n) => {
                    let e: u32 = (&n)
                        .try_into()
                        .map_err(|_| ParseError::new(off, ParseErrorKind::BadNumber(n.to_string())))?;
                    Ok(base.pow(e))
                }
                other => Err(ParseError::new(
                    off,
                    ParseErrorKind::Unexpected {
                        expected: "an exponent",
                        found: other.describe(),
                    },
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let field = self.ring.field();
        let off = self.offset();
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                let den = if self.eat('/') {
                    let doff = self.offset();
                    match self.bump().1 {
                        Tok::Int(d) => d,
                        other => {
                            return Err(ParseError::new(
                                doff,
                                ParseErrorKind::Unexpected {
                                    expected: "a denominator",
                                    found: other.describe(),
                                },
                            ))
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                let c = field
                    .from_ratio(&num, &den)
                    .map_err(|e| ParseError::new(off, e.into()))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(i) = self.ring.index_of(&name) {
                    Ok(Polynomial::var(self.ring, i))
                } else if field == FieldSpec::Gf4 && name == "w" {
                    Ok(Polynomial::constant(self.ring, Scalar::Gf4(Gf4::W)))
                } else {
                    Err(ParseError::new(off, ParseErrorKind::UnknownVariable(name)))
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.unexpected("`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }
}

/// Parses a polynomial expression and expands it into normal form.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    p.expect_end()?;
    Ok(poly)
}

/// Parses `xi*xj*...` as a squarefree monomial of `ring`.
pub fn parse_monomial(text: &str, ring: &Ring) -> Result<SquarefreeMonomial, ParseError> {
    let toks = tokenize(text)?;
    let mut support = VarSet::EMPTY;
    let mut k = 0;
    loop {
        let (off, tok) = &toks[k];
        match tok {
            Tok::Ident(name) => match ring.index_of(name) {
                Some(i) if i < ring.num_vars() => {
                    if support.contains(i) {
                        return Err(ParseError::new(*off, ParseErrorKind::NotSquarefree(name.clone())));
                    }
                    support = support.with(i);
                }
                Some(_) => {
                    return Err(ParseError::new(*off, ParseErrorKind::ParameterInMonomial(name.clone())))
                }
                None => return Err(ParseError::new(*off, ParseErrorKind::UnknownVariable(name.clone()))),
            },
            other => {
                return Err(ParseError::new(
                    *off,
                    ParseErrorKind::Unexpected {
                        expected: "a variable",
                        found: other.describe(),
                    },
                ))
            }
        }
        k += 1;
        match &toks[k] {
            (_, Tok::Sym('*')) => k += 1,
            (_, Tok::End) => return Ok(SquarefreeMonomial::new(support)),
            (off, other) => {
                return Err(ParseError::new(
                    *off,
                    ParseErrorKind::Unexpected {
                        expected: "`*` or end of monomial",
                        found: other.describe(),
                    },
                ))
            }
        }
    }
}

/// Parses `ring N [over QQ|GF(p)|GF4] [params t,...]`.
pub fn parse_ring_header(line: &str) -> Result<Ring, ParseError> {
    let line = strip_comment(line);
    let bad = |msg: &str| ParseError::new(0, ParseErrorKind::BadHeader(msg.to_string()));
    let rest = line
        .trim()
        .strip_prefix("ring")
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        .ok_or_else(|| bad("expected `ring N`"))?;
    let (before_params, params) = match rest.find("params") {
        Some(i) => (&rest[..i], Some(&rest[i + "params".len()..])),
        None => (rest, None),
    };
    let mut words = before_params.split_whitespace();
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| bad("missing variable count"))?;
    let field = match (words.next(), words.next()) {
        (None, _) => FieldSpec::Rational,
        (Some("over"), Some(f)) => parse_field(f).ok_or_else(|| bad("unknown field"))?,
        _ => return Err(bad("expected `over FIELD`")),
    };
    if words.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let params: Vec<String> = match params {
        Some(p) => p
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect(),
        None => Vec::new(),
    };
    if matches!(params.len(), 0) && line.contains("params") {
        return Err(bad("empty parameter list"));
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    RingSpec::with_names(names, field, params).map_err(|e| ParseError::new(0, e.into()))
}

/// Parses `QQ`, `GF(p)` or `GF4`.
pub fn parse_field(s: &str) -> Option<FieldSpec> {
    match s {
        "QQ" => Some(FieldSpec::Rational),
        "GF4" => Some(FieldSpec::Gf4),
        _ => {
            let p: u32 = s.strip_prefix("GF(")?.strip_suffix(')')?.parse().ok()?;
            FieldSpec::prime(p).ok()
        }
    }
}

pub fn format_ring_header(ring: &RingSpec) -> String {
    let mut s = format!("ring {} over {}", ring.num_vars(), ring.field());
    if ring.num_params() > 0 {
        s.push_str(" params ");
        s.push_str(&ring.param_vars().join(","));
    }
    s
}

//! Parser for the two-line curve description format.
//!
//! A curve file gives both coordinates, one per line, in either order:
//!
//! ```text
//! # comments run to the end of the line
//! x(t) = t^3 - 2*t^2
//! y(t) = sqrt(2)*t + 1/2
//! ```
//!
//! Expressions use `+ - * / ^`, parentheses, the variable `t`, integer
//! and decimal literals (decimals are rationalized exactly, never read
//! through floating point), and `sqrt(k)` for a nonnegative integer `k`.
//! Multiplication may be left implicit before `t`, `sqrt`, or `(`, as in
//! `2t` or `3(t + 1)`.  Operators at equal precedence apply left to
//! right, `^` binds tighter than unary minus (so `-t^2` is `-(t^2)`),
//! and a divisor must be a nonzero constant.  Degrees are capped (default
//! 10000, override with the `SYMCURVE_DEGREE_CAP` environment variable)
//! so a typo cannot ask for an astronomically large expansion.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::curve::Parametrization;
use crate::field::{FieldElement, Rational};
use crate::poly::{Poly, RealPoly};

/// Default bound on the degree of any intermediate polynomial.
pub const DEFAULT_DEGREE_CAP: usize = 10_000;

/// The active degree cap: `SYMCURVE_DEGREE_CAP` when it holds a positive
/// integer, the default otherwise.
pub fn degree_cap() -> usize {
    std::env::var("SYMCURVE_DEGREE_CAP")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&cap| cap > 0)
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

/// A parse failure with its position (1-based line and column).
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: unexpected character '{found}'")]
    UnexpectedCharacter { line: usize, col: usize, found: char },
    #[error("line {line}, column {col}: unknown name '{found}' (expected 't' or 'sqrt')")]
    UnknownName { line: usize, col: usize, found: String },
    #[error("line {line}, column {col}: expected {expected}, found {found}")]
    UnexpectedToken {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },
    #[error("line {line}, column {col}: division by a non-constant expression")]
    DivisionByNonConstant { line: usize, col: usize },
    #[error("line {line}, column {col}: division by zero")]
    DivisionByZero { line: usize, col: usize },
    #[error("line {line}, column {col}: sqrt argument does not fit in 64 bits")]
    RadicandTooLarge { line: usize, col: usize },
    #[error("line {line}, column {col}: degree exceeds the cap of {cap} (set SYMCURVE_DEGREE_CAP to raise it)")]
    DegreeCapExceeded { line: usize, col: usize, cap: usize },
    #[error("line {line}: coordinate '{coord}(t)' is defined twice")]
    DuplicateCoordinate { line: usize, coord: char },
    #[error("no definition found for coordinate '{coord}(t)'")]
    MissingCoordinate { coord: char },
    #[error("line {line}, column {col}: the variable 't' is not allowed in a constant")]
    VariableInConstant { line: usize, col: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Integer(BigUint),
    Decimal { whole: BigUint, frac: String },
    Variable,
    Sqrt,
    Name(char),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Equals,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Integer(n) => write!(f, "'{}'", n),
            Token::Decimal { whole, frac } => write!(f, "'{}.{}'", whole, frac),
            Token::Variable => write!(f, "'t'"),
            Token::Sqrt => write!(f, "'sqrt'"),
            Token::Name(c) => write!(f, "'{}'", c),
            Token::LParen => write!(f, "'('"),
            Token::RParen => write!(f, "')'"),
            Token::Plus => write!(f, "'+'"),
            Token::Minus => write!(f, "'-'"),
            Token::Star => write!(f, "'*'"),
            Token::Slash => write!(f, "'/'"),
            Token::Caret => write!(f, "'^'"),
            Token::Equals => write!(f, "'='"),
        }
    }
}

struct Lexer;

impl Lexer {
    /// Tokenizes one line (comments already stripped).
    fn lex(line_no: usize, text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let col = i + 1;
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let token = match c {
                '(' => Token::LParen,
                ')' => Token::RParen,
                '+' => Token::Plus,
                '-' => Token::Minus,
                '*' => Token::Star,
                '/' => Token::Slash,
                '^' => Token::Caret,
                '=' => Token::Equals,
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let whole: String = chars[start..i].iter().collect();
                    let whole = whole.parse::<BigUint>().expect("digits form an integer");
                    if i < chars.len() && chars[i] == '.' {
                        i += 1;
                        let frac_start = i;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                        if i == frac_start {
                            return Err(ParseError::UnexpectedCharacter {
                                line: line_no,
                                col: i.min(chars.len() - 1) + 1,
                                found: *chars.get(i).unwrap_or(&'.'),
                            });
                        }
                        let frac: String = chars[frac_start..i].iter().collect();
                        tokens.push((Token::Decimal { whole, frac }, col));
                    } else {
                        tokens.push((Token::Integer(whole), col));
                    }
                    continue;
                }
                c if c.is_alphabetic() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_alphanumeric() {
                        i += 1;
                    }
                    let name: String = chars[start..i].iter().collect();
                    match name.as_str() {
                        "t" => tokens.push((Token::Variable, col)),
                        "sqrt" => tokens.push((Token::Sqrt, col)),
                        "x" | "y" => tokens.push((Token::Name(name.chars().next().unwrap()), col)),
                        _ => {
                            return Err(ParseError::UnknownName {
                                line: line_no,
                                col,
                                found: name,
                            })
                        }
                    }
                    continue;
                }
                other => {
                    return Err(ParseError::UnexpectedCharacter {
                        line: line_no,
                        col,
                        found: other,
                    })
                }
            };
            tokens.push((token, col));
            i += 1;
        }
        Ok(tokens)
    }
}

struct ExprParser<'a> {
    line: usize,
    tokens: &'a [(Token, usize)],
    pos: usize,
    cap: usize,
}

impl<'a> ExprParser<'a> {
    fn new(line: usize, tokens: &'a [(Token, usize)], cap: usize) -> Self {
        ExprParser {
            line,
            tokens,
            pos: 0,
            cap,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|&(_, col)| col)
            .unwrap_or(1)
    }

    fn advance(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t);
        self.pos += 1;
        t
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let found = match self.tokens.get(self.pos) {
            Some((t, _)) => format!("{}", t),
            None => "end of line".to_string(),
        };
        ParseError::UnexpectedToken {
            line: self.line,
            col: self.here(),
            expected: expected.to_string(),
            found,
        }
    }

    /// Rejects a product before computing it when the degrees already
    /// overflow the cap.
    fn checked_mul(&self, lhs: &RealPoly, rhs: &RealPoly, col: usize) -> Result<RealPoly, ParseError> {
        let degree = lhs.degree().unwrap_or(0) + rhs.degree().unwrap_or(0);
        if degree > self.cap {
            return Err(ParseError::DegreeCapExceeded {
                line: self.line,
                col,
                cap: self.cap,
            });
        }
        Ok(lhs.mul(rhs))
    }

    fn expr(&mut self) -> Result<RealPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.advance();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RealPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    let col = self.here();
                    self.advance();
                    let rhs = self.unary()?;
                    acc = self.checked_mul(&acc, &rhs, col)?;
                }
                Some(Token::Slash) => {
                    let col = self.here();
                    self.advance();
                    let divisor = self.unary()?;
                    match divisor.degree() {
                        Some(d) if d > 0 => {
                            return Err(ParseError::DivisionByNonConstant {
                                line: self.line,
                                col,
                            })
                        }
                        _ => {}
                    }
                    let constant = divisor.coeff(0);
                    let inverse = constant.inv().map_err(|_| ParseError::DivisionByZero {
                        line: self.line,
                        col,
                    })?;
                    acc = acc.scale(&inverse);
                }
                // Implicit multiplication: a factor may follow directly,
                // as in `2t`, `2sqrt(3)`, or `(t+1)(t+2)`.
                Some(Token::Variable) | Some(Token::Sqrt) | Some(Token::LParen) => {
                    let col = self.here();
                    let rhs = self.power()?;
                    acc = self.checked_mul(&acc, &rhs, col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RealPoly, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.advance();
                Ok(self.unary()?.neg())
            }
            Some(Token::Plus) => {
                self.advance();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RealPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            let col = self.here();
            self.advance();
            let exponent = match self.peek() {
                Some(Token::Integer(n)) => {
                    let n = n.clone();
                    self.advance();
                    n
                }
                _ => return Err(self.unexpected("a nonnegative integer exponent")),
            };
            let exponent: u32 = exponent.try_into().map_err(|_| ParseError::DegreeCapExceeded {
                line: self.line,
                col,
                cap: self.cap,
            })?;
            if base.degree().unwrap_or(0) as u128 * exponent as u128 > self.cap as u128 {
                return Err(ParseError::DegreeCapExceeded {
                    line: self.line,
                    col,
                    cap: self.cap,
                });
            }
            return Ok(base.pow(exponent));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RealPoly, ParseError> {
        let col = self.here();
        match self.peek() {
            Some(Token::Integer(n)) => {
                let q = Rational::from_integer(BigInt::from(n.clone()));
                self.advance();
                Ok(Poly::constant(FieldElement::from_rational(q)))
            }
            Some(Token::Decimal { whole, frac }) => {
                let scale = BigUint::from(10u32).pow(frac.len() as u32);
                let frac_val = frac.parse::<BigUint>().expect("digits form an integer");
                let numerator = whole.clone() * &scale + frac_val;
                let q = Rational::new(BigInt::from(numerator), BigInt::from(scale));
                self.advance();
                Ok(Poly::constant(FieldElement::from_rational(q)))
            }
            Some(Token::Variable) => {
                self.advance();
                Ok(Poly::identity())
            }
            Some(Token::Sqrt) => {
                self.advance();
                if !matches!(self.peek(), Some(Token::LParen)) {
                    return Err(self.unexpected("'(' after sqrt"));
                }
                self.advance();
                let radicand = match self.peek() {
                    Some(Token::Integer(n)) => {
                        let n = n.clone();
                        self.advance();
                        n
                    }
                    _ => return Err(self.unexpected("a nonnegative integer radicand")),
                };
                if !matches!(self.peek(), Some(Token::RParen)) {
                    return Err(self.unexpected("')'"));
                }
                self.advance();
                let radicand: u64 =
                    radicand
                        .try_into()
                        .map_err(|_| ParseError::RadicandTooLarge {
                            line: self.line,
                            col,
                        })?;
                Ok(Poly::constant(FieldElement::sqrt(radicand)))
            }
            Some(Token::LParen) => {
                self.advance();
                let inner = self.expr()?;
                if !matches!(self.peek(), Some(Token::RParen)) {
                    return Err(self.unexpected("')'"));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, 't', 'sqrt', or '('")),
        }
    }
}

/// Strips a `#` comment, if any.
fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(idx) => &line[..idx],
        None => line,
    }
}

/// Parses one `x(t) = ...` or `y(t) = ...` line.  Returns the coordinate
/// tag and its polynomial.
fn parse_assignment(
    line_no: usize,
    tokens: &[(Token, usize)],
    cap: usize,
) -> Result<(char, RealPoly), ParseError> {
    let mut parser = ExprParser::new(line_no, tokens, cap);
    let coord = match parser.peek() {
        Some(Token::Name(c)) => {
            let c = *c;
            parser.advance();
            c
        }
        _ => return Err(parser.unexpected("'x' or 'y'")),
    };
    // The "(t)" after the coordinate name is optional.
    if matches!(parser.peek(), Some(Token::LParen)) {
        parser.advance();
        if !matches!(parser.peek(), Some(Token::Variable)) {
            return Err(parser.unexpected("'t'"));
        }
        parser.advance();
        if !matches!(parser.peek(), Some(Token::RParen)) {
            return Err(parser.unexpected("')'"));
        }
        parser.advance();
    }
    if !matches!(parser.peek(), Some(Token::Equals)) {
        return Err(parser.unexpected("'='"));
    }
    parser.advance();
    let poly = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(parser.unexpected("end of line"));
    }
    Ok((coord, poly))
}

/// Parses a complete two-line curve description.
pub fn parse_curve(input: &str) -> Result<Parametrization, ParseError> {
    let cap = degree_cap();
    let mut x: Option<RealPoly> = None;
    let mut y: Option<RealPoly> = None;
    for (idx, raw_line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let text = strip_comment(raw_line);
        if text.trim().is_empty() {
            continue;
        }
        let tokens = Lexer::lex(line_no, text)?;
        let (coord, poly) = parse_assignment(line_no, &tokens, cap)?;
        let slot = if coord == 'x' { &mut x } else { &mut y };
        if slot.is_some() {
            return Err(ParseError::DuplicateCoordinate {
                line: line_no,
                coord,
            });
        }
        *slot = Some(poly);
    }
    let x = x.ok_or(ParseError::MissingCoordinate { coord: 'x' })?;
    let y = y.ok_or(ParseError::MissingCoordinate { coord: 'y' })?;
    Ok(Parametrization::new(x, y))
}

/// Parses a constant expression (no `t`), e.g. an exact coordinate string
/// such as `-1/2 + 3*sqrt(2)` printed by this crate.
pub fn parse_field_element(input: &str) -> Result<FieldElement, ParseError> {
    let tokens = Lexer::lex(1, strip_comment(input))?;
    for (token, col) in &tokens {
        if matches!(token, Token::Variable) {
            return Err(ParseError::VariableInConstant { line: 1, col: *col });
        }
    }
    let mut parser = ExprParser::new(1, &tokens, DEFAULT_DEGREE_CAP);
    let poly = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(parser.unexpected("end of input"));
    }
    Ok(poly.coeff(0))
}

//! Word expressions over named generators and swap literals.
//!
//! Grammar (whitespace-insensitive between tokens):
//!
//! ```text
//! expr     := term*                      product; empty input is the empty word
//! term     := atom ('^' exponent)*      '^' binds tighter than juxtaposition
//! exponent := signed integer            power (x^-1 is the inverse)
//!           | atom                      conjugation x^g = g^-1 x g
//! atom     := name                      letters then letters/digits, e.g. a, pi0
//!           | '<' ADDR ADDR '>'         swap literal over incomparable addresses
//!           | '(' expr ')'
//!           | '[' expr ',' expr ']'     commutator [x,y] = x^-1 y^-1 x y
//! ```

use std::fmt;

use thiserror::Error;

use crate::address::{Address, AddressError, SwapPair};

/// A generator symbol: either a named generator resolved by a generating
/// set, or a swap literal that resolves in every generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenName {
    Symbol(String),
    Swap(SwapPair),
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenName::Symbol(s) => f.write_str(s),
            GenName::Swap(p) => write!(f, "{p}"),
        }
    }
}

/// A structured word over generators: the parse tree of the grammar above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordExpr {
    Empty,
    Gen(GenName),
    Inverse(Box<WordExpr>),
    Power(Box<WordExpr>, i32),
    Conjugate { base: Box<WordExpr>, by: Box<WordExpr> },
    Commutator(Box<WordExpr>, Box<WordExpr>),
    Product(Vec<WordExpr>),
}

impl WordExpr {
    pub fn gen(name: &str) -> WordExpr {
        WordExpr::Gen(GenName::Symbol(name.to_string()))
    }

    pub fn swap(pair: SwapPair) -> WordExpr {
        WordExpr::Gen(GenName::Swap(pair))
    }

    pub fn inverse(self) -> WordExpr {
        WordExpr::Inverse(Box::new(self))
    }

    pub fn power(self, n: i32) -> WordExpr {
        WordExpr::Power(Box::new(self), n)
    }

    pub fn conjugate(self, by: WordExpr) -> WordExpr {
        WordExpr::Conjugate { base: Box::new(self), by: Box::new(by) }
    }

    pub fn commutator(self, other: WordExpr) -> WordExpr {
        WordExpr::Commutator(Box::new(self), Box::new(other))
    }

    pub fn product(factors: Vec<WordExpr>) -> WordExpr {
        let mut factors: Vec<WordExpr> =
            factors.into_iter().filter(|f| !matches!(f, WordExpr::Empty)).collect();
        match factors.len() {
            0 => WordExpr::Empty,
            1 => factors.pop().unwrap(),
            _ => WordExpr::Product(factors),
        }
    }

    /// Expands conjugates, commutators and powers, then freely reduces.
    pub fn flatten(&self) -> Word {
        let mut letters = Vec::new();
        push_flat(self, &mut letters);
        free_reduce(Word { letters })
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Empty => f.write_str("1"),
            WordExpr::Gen(g) => write!(f, "{g}"),
            WordExpr::Inverse(x) => write!(f, "{}^-1", Parenthesized(x)),
            WordExpr::Power(x, n) => write!(f, "{}^{n}", Parenthesized(x)),
            WordExpr::Conjugate { base, by } => {
                write!(f, "{}^({by})", Parenthesized(base))
            }
            WordExpr::Commutator(x, y) => write!(f, "[{x}, {y}]"),
            WordExpr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{}", Parenthesized(x))?;
                }
                Ok(())
            }
        }
    }
}

/// Wraps products in parentheses when rendered inside a larger expression.
struct Parenthesized<'a>(&'a WordExpr);

impl fmt::Display for Parenthesized<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            WordExpr::Product(_) | WordExpr::Empty => write!(f, "({})", self.0),
            other => write!(f, "{other}"),
        }
    }
}

fn push_flat(e: &WordExpr, out: &mut Vec<(GenName, i8)>) {
    match e {
        WordExpr::Empty => {}
        WordExpr::Gen(g) => out.push((g.clone(), 1)),
        WordExpr::Inverse(x) => push_flat_inverted(x, out),
        WordExpr::Power(x, n) => {
            if *n >= 0 {
                for _ in 0..*n {
                    push_flat(x, out);
                }
            } else {
                for _ in 0..n.unsigned_abs() {
                    push_flat_inverted(x, out);
                }
            }
        }
        WordExpr::Conjugate { base, by } => {
            push_flat_inverted(by, out);
            push_flat(base, out);
            push_flat(by, out);
        }
        WordExpr::Commutator(x, y) => {
            push_flat_inverted(x, out);
            push_flat_inverted(y, out);
            push_flat(x, out);
            push_flat(y, out);
        }
        WordExpr::Product(fs) => {
            for x in fs {
                push_flat(x, out);
            }
        }
    }
}

// (w)^-1: w flattened, reversed, with flipped signs
fn push_flat_inverted(e: &WordExpr, out: &mut Vec<(GenName, i8)>) {
    let mut scratch = Vec::new();
    push_flat(e, &mut scratch);
    out.extend(scratch.into_iter().rev().map(|(g, s)| (g, -s)));
}

/// A flattened word: a sequence of generator letters with exponents ±1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<(GenName, i8)>,
}

impl Word {
    pub fn letters(&self) -> &[(GenName, i8)] {
        &self.letters
    }

    pub fn from_letters(letters: Vec<(GenName, i8)>) -> Word {
        debug_assert!(letters.iter().all(|(_, e)| *e == 1 || *e == -1));
        Word { letters }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }
}

impl fmt::Display for Word {
    /// Renders "1" for the empty word, otherwise space-separated letters
    /// with runs collapsed into powers: `a^3 b^-1`. Round-trips through
    /// `parse` + `flatten` to an equal word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let (g, e) = &self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == (g.clone(), *e) {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let exp = i32::from(*e) * run as i32;
            if exp == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Removes cancelling adjacent pairs until none remain; the result is
/// independent of reduction order.
pub fn free_reduce(w: Word) -> Word {
    let mut stack: Vec<(GenName, i8)> = Vec::with_capacity(w.letters.len());
    for (g, e) in w.letters {
        match stack.last() {
            Some((top, te)) if *top == g && *te == -e => {
                stack.pop();
            }
            _ => stack.push((g, e)),
        }
    }
    Word { letters: stack }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> ParseError {
        ParseError { position, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Name(String),
    Swap(SwapPair),
    Int(i32),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            '[' => {
                out.push((i, Token::LBracket));
                i += 1;
            }
            ']' => {
                out.push((i, Token::RBracket));
                i += 1;
            }
            ',' => {
                out.push((i, Token::Comma));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '<' => {
                let start = i;
                let end = text[i..]
                    .find('>')
                    .map(|o| i + o)
                    .ok_or_else(|| ParseError::new(start, "unterminated swap literal"))?;
                let inner = &text[i + 1..end];
                let parts: Vec<&str> = inner.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(ParseError::new(
                        start,
                        format!("swap literal needs two addresses, got {:?}", inner.trim()),
                    ));
                }
                let pair = parse_swap_literal(parts[0], parts[1])
                    .map_err(|e| ParseError::new(start, e.to_string()))?;
                out.push((start, Token::Swap(pair)));
                i = end + 1;
            }
            '-' | '+' | '0'..='9' => {
                let start = i;
                if c == '-' || c == '+' {
                    i += 1;
                }
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    return Err(ParseError::new(start, format!("stray {c:?}")));
                }
                let n: i32 = text[start..i]
                    .parse()
                    .map_err(|_| ParseError::new(start, "integer out of range"))?;
                out.push((start, Token::Int(n)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Token::Name(text[start..i].to_string())));
            }
            other => return Err(ParseError::new(i, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

fn parse_swap_literal(a: &str, b: &str) -> Result<SwapPair, AddressError> {
    let alpha: Address = a.parse()?;
    let beta: Address = b.parse()?;
    SwapPair::new(alpha, beta)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.position(), format!("expected {what}")))
        }
    }

    fn parse_expr(&mut self) -> Result<WordExpr, ParseError> {
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(Token::Name(_) | Token::Swap(_) | Token::LParen | Token::LBracket) => {
                    factors.push(self.parse_term()?);
                }
                // the literal 1 denotes the empty word
                Some(Token::Int(1)) => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(WordExpr::product(factors))
    }

    fn parse_term(&mut self) -> Result<WordExpr, ParseError> {
        let mut base = self.parse_atom()?;
        while self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            base = match self.peek() {
                Some(Token::Int(n)) => {
                    let n = *n;
                    self.pos += 1;
                    match n {
                        -1 => base.inverse(),
                        1 => base,
                        _ => base.power(n),
                    }
                }
                Some(Token::Name(_) | Token::Swap(_) | Token::LParen | Token::LBracket) => {
                    let by = self.parse_atom()?;
                    base.conjugate(by)
                }
                _ => {
                    return Err(ParseError::new(
                        self.position(),
                        "expected an exponent or conjugator after '^'",
                    ))
                }
            };
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<WordExpr, ParseError> {
        let position = self.position();
        match self.bump() {
            Some(Token::Name(n)) => Ok(WordExpr::Gen(GenName::Symbol(n))),
            Some(Token::Swap(p)) => Ok(WordExpr::Gen(GenName::Swap(p))),
            Some(Token::LParen) => {
                let e = self.parse_expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(e)
            }
            Some(Token::LBracket) => {
                let x = self.parse_expr()?;
                self.expect(&Token::Comma, "',' in commutator")?;
                let y = self.parse_expr()?;
                self.expect(&Token::RBracket, "']'")?;
                Ok(x.commutator(y))
            }
            other => Err(ParseError::new(
                position,
                format!("expected a generator, '(', '[' or swap literal, got {other:?}"),
            )),
        }
    }
}

/// Parses one expression in the word grammar.
pub fn parse(text: &str) -> Result<WordExpr, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens: &tokens, pos: 0, end: text.len() };
    let e = p.parse_expr()?;
    if p.pos != tokens.len() {
        return Err(ParseError::new(p.position(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a word file: one expression per non-empty line, `#` starts a
/// comment. Returns each expression with its source line number (1-based).
pub fn parse_word_file(text: &str) -> Result<Vec<(usize, WordExpr)>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let expr = parse(line).map_err(|e| {
            ParseError::new(e.position, format!("line {}: {}", idx + 1, e.message))
        })?;
        out.push((idx + 1, expr));
    }
    Ok(out)
}

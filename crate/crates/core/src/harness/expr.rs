//! Operator expressions such as `-1/2 f(1) h(0)`: a product of rational
//! prefactors and operator tokens, the rightmost factor acting first.

use std::fmt;

use crate::algebra::GenSymbol;
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Scalar(Rational),
    Gen(GenSymbol),
    /// Sugawara mode `L(n)`.
    Sugawara(i64),
    /// Critical central mode `T(n)`.
    Central(i64),
    /// The degree operator `d`.
    Degree,
    A(i64),
    AInv(i64),
    AStar(i64),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Scalar(q) => write!(f, "{q}"),
            Factor::Gen(g) => write!(f, "{g}"),
            Factor::Sugawara(n) => write!(f, "L({n})"),
            Factor::Central(n) => write!(f, "T({n})"),
            Factor::Degree => write!(f, "d"),
            Factor::A(n) => write!(f, "a({n})"),
            Factor::AInv(n) => write!(f, "ainv({n})"),
            Factor::AStar(n) => write!(f, "astar({n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {pos}: {message}")]
pub struct ParseError {
    /// Character offset into the expression.
    pub pos: usize,
    pub message: String,
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl Lexer<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    /// Character position of the next unread character.
    fn pos(&self) -> usize {
        self.i
    }

    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos, message: message.into() })
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == '*' || c == '·') {
            self.i += 1;
        }
    }

    fn take_while(&mut self, keep: impl Fn(char) -> bool) -> &str {
        let start = self.chars.get(self.i).map_or(self.src.len(), |&(b, _)| b);
        while matches!(self.peek(), Some(c) if keep(c)) {
            self.i += 1;
        }
        let end = self.chars.get(self.i).map_or(self.src.len(), |&(b, _)| b);
        &self.src[start..end]
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos();
        let mut text = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            text.push(c);
            self.i += 1;
        }
        text.push_str(self.take_while(|c| c.is_ascii_digit()));
        text.parse().or_else(|_| self.err(start, "expected an integer mode"))
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.i += 1;
                Ok(())
            }
            Some(c) => self.err(self.pos(), format!("expected '{want}', found '{c}'")),
            None => self.err(self.pos(), format!("expected '{want}', found end of input")),
        }
    }

    fn mode(&mut self) -> Result<i64, ParseError> {
        self.expect('(')?;
        let n = self.integer()?;
        self.expect(')')?;
        Ok(n)
    }

    fn scalar(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos();
        let mut text = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            text.push(c);
            self.i += 1;
        }
        text.push_str(self.take_while(|c| c.is_ascii_digit() || c == '/'));
        text.parse().or_else(|_| self.err(start, format!("malformed rational {text:?}")))
    }
}

/// Parses a product of factors; the empty expression is the identity.
pub fn parse(src: &str) -> Result<Vec<Factor>, ParseError> {
    let mut lx = Lexer { chars: src.char_indices().collect(), i: 0, src };
    let mut out = Vec::new();
    loop {
        lx.skip_separators();
        let start = lx.pos();
        let Some(c) = lx.peek() else { break };
        if c.is_ascii_digit() || c == '-' || c == '+' {
            out.push(Factor::Scalar(lx.scalar()?));
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return lx.err(start, format!("unexpected character '{c}'"));
        }
        let name = lx.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
        let factor = match name.as_str() {
            "d" => Factor::Degree,
            "e" => Factor::Gen(GenSymbol::e(lx.mode()?)),
            "f" => Factor::Gen(GenSymbol::f(lx.mode()?)),
            "h" => Factor::Gen(GenSymbol::h(lx.mode()?)),
            "phi" => Factor::Gen(GenSymbol::phi(lx.mode()?)),
            "L" => Factor::Sugawara(lx.mode()?),
            "T" => Factor::Central(lx.mode()?),
            "a" => Factor::A(lx.mode()?),
            "ainv" => Factor::AInv(lx.mode()?),
            "astar" => Factor::AStar(lx.mode()?),
            other => return lx.err(start, format!("unknown token {other:?}")),
        };
        out.push(factor);
    }
    Ok(out)
}

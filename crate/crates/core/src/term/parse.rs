use thiserror::Error;

use super::Term;

/// Parse failure; `pos` is a byte offset into the source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{ch}` at {pos}")]
    BadChar { pos: usize, ch: char },
    #[error("expected {expected} at {pos}, found `{found}`")]
    Unexpected {
        pos: usize,
        found: String,
        expected: &'static str,
    },
    #[error("expected {expected} at end of input")]
    UnexpectedEnd { expected: &'static str },
    #[error("exponent at {pos} does not fit in 32 bits")]
    ExponentOverflow { pos: usize },
    #[error("constant `{text}` at {pos} is neither 0 nor 1")]
    BadConstant { pos: usize, text: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Arrow,
    Or,
    And,
    Star,
    Tilde,
    Caret,
    LParen,
    RParen,
    Num(String),
    Ident(String),
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Arrow => "->".into(),
            Tok::Or => "\\/".into(),
            Tok::And => "/\\".into(),
            Tok::Star => "*".into(),
            Tok::Tilde => "~".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Num(s) | Tok::Ident(s) => s.clone(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some((pos, ch)) = it.next() {
        let tok = match ch {
            c if c.is_whitespace() => continue,
            '-' if matches!(it.peek(), Some((_, '>'))) => {
                it.next();
                Tok::Arrow
            }
            '\\' if matches!(it.peek(), Some((_, '/'))) => {
                it.next();
                Tok::Or
            }
            '/' if matches!(it.peek(), Some((_, '\\'))) => {
                it.next();
                Tok::And
            }
            '→' => Tok::Arrow,
            '∨' => Tok::Or,
            '∧' => Tok::And,
            '*' | '·' => Tok::Star,
            '~' | '¬' => Tok::Tilde,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '⊥' => Tok::Num("0".into()),
            '⊤' => Tok::Num("1".into()),
            c if c.is_ascii_digit() => {
                let mut s = c.to_string();
                while let Some(&(_, d)) = it.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    it.next();
                }
                Tok::Num(s)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = c.to_string();
                while let Some(&(_, d)) = it.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    s.push(d);
                    it.next();
                }
                Tok::Ident(s)
            }
            ch => return Err(ParseError::BadChar { pos, ch }),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, expected: &'static str) -> Result<T, ParseError> {
        Err(match self.toks.get(self.at) {
            Some((pos, t)) => ParseError::Unexpected {
                pos: *pos,
                found: t.text(),
                expected,
            },
            None => ParseError::UnexpectedEnd { expected },
        })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let l = self.or()?;
        if self.eat(&Tok::Arrow) {
            let r = self.term()?;
            return Ok(Term::imp(l, r));
        }
        Ok(l)
    }

    fn or(&mut self) -> Result<Term, ParseError> {
        let mut l = self.and()?;
        while self.eat(&Tok::Or) {
            l = Term::join(l, self.and()?);
        }
        Ok(l)
    }

    fn and(&mut self) -> Result<Term, ParseError> {
        let mut l = self.fus()?;
        while self.eat(&Tok::And) {
            l = Term::meet(l, self.fus()?);
        }
        Ok(l)
    }

    fn fus(&mut self) -> Result<Term, ParseError> {
        let mut l = self.unary()?;
        while self.eat(&Tok::Star) {
            l = Term::fuse(l, self.unary()?);
        }
        Ok(l)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Term::neg(self.unary()?));
        }
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let Some((pos, Tok::Num(digits))) = self.toks.get(self.at).cloned() else {
                return self.fail("an exponent");
            };
            self.at += 1;
            let n = digits
                .parse::<u32>()
                .map_err(|_| ParseError::ExponentOverflow { pos })?;
            return Ok(Term::pow(base, n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let Some((pos, tok)) = self.toks.get(self.at).cloned() else {
            return self.fail("a term");
        };
        match tok {
            Tok::Num(s) => {
                self.at += 1;
                match s.as_str() {
                    "0" => Ok(Term::Bot),
                    "1" => Ok(Term::Top),
                    _ => Err(ParseError::BadConstant { pos, text: s }),
                }
            }
            Tok::Ident(name) => {
                self.at += 1;
                Ok(Term::Var(name))
            }
            Tok::LParen => {
                self.at += 1;
                let t = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return self.fail("`)`");
                }
                Ok(t)
            }
            _ => self.fail("a term"),
        }
    }
}

pub fn parse(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
    };
    let t = p.term()?;
    if p.at < p.toks.len() {
        return p.fail("end of input");
    }
    Ok(t)
}

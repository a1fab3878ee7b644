use super::Formula;
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<(usize, Token<'a>)> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let c = rest.chars().next()?;
        Some(match c {
            '(' => (self.pos, Token::Open),
            ')' => (self.pos, Token::Close),
            _ => {
                let end = rest
                    .find(|ch: char| ch.is_whitespace() || ch == '(' || ch == ')')
                    .unwrap_or(rest.len());
                (self.pos, Token::Word(&rest[..end]))
            }
        })
    }

    fn next(&mut self) -> Option<(usize, Token<'a>)> {
        let t = self.peek()?;
        self.pos += match &t.1 {
            Token::Open | Token::Close => 1,
            Token::Word(w) => w.len(),
        };
        Some(t)
    }

    fn err(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }

    fn var(&mut self) -> Result<String> {
        match self.next() {
            Some((at, Token::Word(w))) => {
                let mut chars = w.chars();
                let head = chars.next().unwrap();
                if (head.is_ascii_alphabetic() || head == '_')
                    && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
                {
                    Ok(w.to_string())
                } else {
                    Err(self.err(at, format!("`{w}` is not a variable name")))
                }
            }
            Some((at, _)) => Err(self.err(at, "expected a variable")),
            None => Err(self.err(self.src.len(), "expected a variable, found end of input")),
        }
    }

    fn close(&mut self) -> Result<()> {
        match self.next() {
            Some((_, Token::Close)) => Ok(()),
            Some((at, _)) => Err(self.err(at, "expected `)`")),
            None => Err(self.err(self.src.len(), "missing `)`")),
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        match self.next() {
            None => Err(self.err(self.src.len(), "expected a formula, found end of input")),
            Some((at, Token::Close)) => Err(self.err(at, "unexpected `)`")),
            Some((_, Token::Word("true"))) => Ok(Formula::True),
            Some((_, Token::Word("false"))) => Ok(Formula::False),
            Some((at, Token::Word(w))) => Err(self.err(at, format!("unexpected `{w}`"))),
            Some((_, Token::Open)) => {
                let (at, head) = match self.next() {
                    Some((at, Token::Word(w))) => (at, w),
                    Some((at, _)) => return Err(self.err(at, "expected an operator")),
                    None => return Err(self.err(self.src.len(), "expected an operator")),
                };
                let f = match head {
                    "adj" | "=" => {
                        let (x, y) = (self.var()?, self.var()?);
                        if head == "adj" {
                            Formula::Adj(x, y)
                        } else {
                            Formula::Eq(x, y)
                        }
                    }
                    "not" => Formula::Not(Box::new(self.formula()?)),
                    "and" | "or" => {
                        let mut parts = Vec::new();
                        while !matches!(self.peek(), Some((_, Token::Close)) | None) {
                            parts.push(self.formula()?);
                        }
                        if head == "and" {
                            Formula::And(parts)
                        } else {
                            Formula::Or(parts)
                        }
                    }
                    "E" | "exists" | "A" | "forall" => {
                        let x = self.var()?;
                        let body = Box::new(self.formula()?);
                        if matches!(head, "E" | "exists") {
                            Formula::Exists(x, body)
                        } else {
                            Formula::Forall(x, body)
                        }
                    }
                    other => return Err(self.err(at, format!("unknown operator `{other}`"))),
                };
                self.close()?;
                Ok(f)
            }
        }
    }
}

pub fn parse_formula(src: &str) -> Result<Formula> {
    let mut lx = Lexer { src, pos: 0 };
    let f = lx.formula()?;
    if let Some((at, _)) = lx.peek() {
        return Err(lx.err(at, "trailing input after formula"));
    }
    Ok(f)
}

//! Textual form notation: `term ("+" term)*` with `term := [coeff ["*"]] ("s" | "t")`.
//!
//! `s` is a squared integer, `t` a triangular number; slots are positional.
//! Whitespace between tokens is ignored. `"s+5s+2t"` is `x² + 5y² + 2t_z`.

use super::{MixedForm, Term, TermKind};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for MixedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if term.coefficient != 1 {
                write!(f, "{}", term.coefficient)?;
            }
            write!(f, "{}", term.kind.marker())?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            position: self.pos,
            expected,
            found: match self.peek() {
                Some(c) => format!("'{c}'"),
                None => "end of input".to_string(),
            },
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let coefficient = if self.pos > start {
            let c: u64 = self.src[start..self.pos].parse().map_err(|_| ParseError {
                position: start,
                expected: vec!["a coefficient that fits in 64 bits"],
                found: self.src[start..self.pos].to_string(),
            })?;
            if c == 0 {
                return Err(ParseError {
                    position: start,
                    expected: vec!["a positive coefficient"],
                    found: "0".to_string(),
                });
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
            }
            c
        } else {
            1
        };
        let kind = match self.peek() {
            Some('s') => TermKind::Square,
            Some('t') => TermKind::Triangular,
            _ => {
                let mut expected = vec!["'s'", "'t'"];
                if self.pos == start {
                    expected.insert(0, "coefficient");
                }
                return Err(self.error(expected));
            }
        };
        self.pos += 1;
        Ok(Term { coefficient, kind })
    }
}

impl FromStr for MixedForm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s, pos: 0 };
        let mut terms = Vec::with_capacity(3);
        loop {
            terms.push(cur.term()?);
            cur.skip_ws();
            match cur.peek() {
                None => break,
                Some('+') if terms.len() < 3 => cur.pos += 1,
                Some('+') => {
                    return Err(cur.error(vec!["end of input (forms have exactly three terms)"]))
                }
                Some(_) => return Err(cur.error(vec!["'+'", "end of input"])),
            }
        }
        match <[Term; 3]>::try_from(terms) {
            Ok(t) => Ok(MixedForm::new(t).expect("coefficients checked positive")),
            Err(_) => Err(cur.error(vec!["'+' (forms have exactly three terms)"])),
        }
    }
}

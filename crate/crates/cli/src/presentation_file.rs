//! Text format for presentations.
//!
//! ```text
//! # trefoil
//! gens: a b
//! rel: a^(b) = b^(a)
//! ```
//!
//! One `gens:` line listing the generator tokens, then any number of `rel:`
//! lines `x^(W) = y^(V)` where `W`, `V` are whitespace-separated generator
//! tokens; either exponent may be left off. `#` starts a comment.

use std::collections::HashMap;
use std::fmt;

use iquandle::winker::{Presentation, Relation, Term};
use iquandle::words::{Gen, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Caret,
    Open,
    Close,
    Equals,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(s) => write!(f, "`{s}`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Open => f.write_str("`(`"),
            Tok::Close => f.write_str("`)`"),
            Tok::Equals => f.write_str("`=`"),
        }
    }
}

/// Splits `s` into tokens tagged with their 1-based column, where `s` starts
/// at column `col0`.
fn lex(s: &str, col0: usize) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut cur: Option<(usize, String)> = None;
    for (i, c) in s.chars().enumerate() {
        let col = col0 + i;
        let single = match c {
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            '=' => Some(Tok::Equals),
            _ => None,
        };
        if c.is_whitespace() || single.is_some() {
            if let Some((start, name)) = cur.take() {
                out.push((start, Tok::Name(name)));
            }
            if let Some(t) = single {
                out.push((col, t));
            }
        } else {
            match &mut cur {
                Some((_, name)) => name.push(c),
                None => cur = Some((col, c.to_string())),
            }
        }
    }
    if let Some((start, name)) = cur {
        out.push((start, Tok::Name(name)));
    }
    out
}

struct LineParser<'a> {
    line: usize,
    end_col: usize,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    gens: &'a HashMap<String, Gen>,
}

impl LineParser<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn generator(&mut self) -> Result<Gen, ParseError> {
        match self.toks.get(self.pos).cloned() {
            Some((col, Tok::Name(n))) => {
                self.pos += 1;
                self.gens
                    .get(&n)
                    .copied()
                    .ok_or_else(|| self.err(col, format!("undeclared generator `{n}`")))
            }
            Some((col, t)) => Err(self.err(col, format!("expected a generator, found {t}"))),
            None => Err(self.err(self.end_col, "expected a generator, found end of line")),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        match self.toks.get(self.pos).cloned() {
            Some((_, t)) if t == want => {
                self.pos += 1;
                Ok(())
            }
            Some((col, t)) => Err(self.err(col, format!("expected {want}, found {t}"))),
            None => Err(self.err(self.end_col, format!("expected {want}, found end of line"))),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let base = self.generator()?;
        if !matches!(self.peek(), Some((_, Tok::Caret))) {
            return Ok(Term::bare(base));
        }
        self.pos += 1;
        self.expect(Tok::Open)?;
        let mut letters = Vec::new();
        while !matches!(self.peek(), Some((_, Tok::Close))) {
            letters.push(self.generator()?);
        }
        self.pos += 1;
        Ok(Term::new(base, Word::new(letters)))
    }

    fn relation(&mut self) -> Result<Relation, ParseError> {
        let lhs = self.term()?;
        self.expect(Tok::Equals)?;
        let rhs = self.term()?;
        if let Some((col, t)) = self.peek() {
            return Err(self.err(*col, format!("unexpected {t} after relation")));
        }
        Ok(Relation::new(lhs, rhs))
    }
}

/// Parses a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut index: HashMap<String, Gen> = HashMap::new();
    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim_end().is_empty() {
            continue;
        }
        let indent = content.chars().count() - trimmed.chars().count();
        let err = |column: usize, message: String| ParseError {
            line,
            column,
            message,
        };
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(err(indent + 1, "expected `gens:` or `rel:`".into()));
        };
        let key_trim = key.trim_end();
        let rest_col = indent + key.chars().count() + 2;
        let end_col = content.trim_end().chars().count() + 1;
        match key_trim {
            "gens" => {
                if names.is_some() {
                    return Err(err(indent + 1, "generators declared twice".into()));
                }
                let mut list = Vec::new();
                for (col, tok) in lex(rest, rest_col) {
                    let Tok::Name(n) = tok else {
                        return Err(err(col, format!("unexpected {tok} in generator list")));
                    };
                    if index.contains_key(&n) {
                        return Err(err(col, format!("generator `{n}` declared twice")));
                    }
                    index.insert(n.clone(), Gen::from_index(list.len()));
                    list.push(n);
                }
                if list.is_empty() {
                    return Err(err(end_col, "no generators listed".into()));
                }
                names = Some(list);
            }
            "rel" => {
                if names.is_none() {
                    return Err(err(indent + 1, "`rel:` before `gens:`".into()));
                }
                let mut p = LineParser {
                    line,
                    end_col,
                    toks: lex(rest, rest_col),
                    pos: 0,
                    gens: &index,
                };
                relations.push(p.relation()?);
            }
            other => {
                return Err(err(indent + 1, format!("unknown directive `{other}`")));
            }
        }
    }
    let end = text.lines().count() + 1;
    let names = names.ok_or(ParseError {
        line: end,
        column: 1,
        message: "missing `gens:` line".into(),
    })?;
    Presentation::new(names, relations).map_err(|e| ParseError {
        line: end,
        column: 1,
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let p = parse_presentation("# trefoil\ngens: a b\nrel: a^(b) = b^(a)\n").unwrap();
        assert_eq!(p.names(), ["a", "b"]);
        assert_eq!(p.relations().len(), 1);
        let r = &p.relations()[0];
        assert_eq!(r.lhs, Term::new(Gen::new(1), Word::digits("2")));
        assert_eq!(r.rhs, Term::new(Gen::new(2), Word::digits("1")));
    }

    #[test]
    fn bare_sides_and_long_names() {
        let p = parse_presentation("gens: x1 x2 x3\nrel: x3 = x1^(x2 x1 x2)\nrel: x2 = x2^()\n")
            .unwrap();
        assert_eq!(p.relations()[0].lhs, Term::bare(Gen::new(3)));
        assert_eq!(p.relations()[0].rhs.word, Word::digits("212"));
        assert!(p.relations()[1].rhs.word.is_empty());
    }

    #[test]
    fn round_trip_through_text() {
        let src = "gens: 1 2 3\nrel: 2^(1) = 2^(3)\nrel: 3 = 1^(2 1 2)\n";
        let p = parse_presentation(src).unwrap();
        assert_eq!(p.to_text(), src);
        assert_eq!(parse_presentation(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn error_positions() {
        let e = parse_presentation("gens: a b\nrel: a^(c) = b\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
        assert!(e.message.contains("undeclared"));

        let e = parse_presentation("gens: a b\nrel: a^(b = b\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 11));

        let e = parse_presentation("gens: a b\nrel: a b\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));

        let e = parse_presentation("rel: a = a\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));

        let e = parse_presentation("gens: a a\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 9));

        let e = parse_presentation("  gens a\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));

        let e = parse_presentation("gens: a\nrel: a = \n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));

        let e = parse_presentation("# nothing\n").unwrap_err();
        assert!(e.message.contains("gens"));
    }
}

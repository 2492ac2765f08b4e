//! Text syntax for formulas.
//!
//! Grammar, loosest binding first: `<->`, `->`, `^`, `|`, `&`, `~`.
//! `->` associates to the right; `^` and `<->` to the left. Identifiers
//! match `[A-Za-z_][A-Za-z0-9_]*`; `true` and `false` are constants.
//! Runs of `&` and `|` parse into single n-ary nodes.
//!
//! The file format accepts one formula per line, `#` line comments, and an
//! optional `vars: a b c` header that fixes the alphabet; a multi-line file
//! denotes the conjunction of its lines.

use crate::error::{Error, ParseError};
use crate::formula::{is_identifier, Formula, Var, VarSet};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Xor,
    Implies,
    Iff,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Xor => "`^`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'~' => {
                toks.push((Tok::Not, i));
                i += 1;
            }
            b'&' => {
                toks.push((Tok::And, i));
                i += 1;
            }
            b'|' => {
                toks.push((Tok::Or, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Xor, i));
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Implies, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `->`"));
                }
            }
            b'<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    toks.push((Tok::Iff, i));
                    i += 3;
                } else {
                    return Err(ParseError::new(i, "expected `<->`"));
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            _ => {
                return Err(ParseError::new(
                    i,
                    format!("unexpected character `{}`", &text[i..].chars().next().unwrap()),
                ));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    alphabet: Option<&'a VarSet>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, o)| o)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        self.pos += 1;
        t
    }

    // <-> : left-associative, loosest
    fn parse_iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.parse_implies()?;
        while self.peek() == Some(&Tok::Iff) {
            self.bump();
            let rhs = self.parse_implies()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    // -> : right-associative
    fn parse_implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.parse_xor()?;
        if self.peek() == Some(&Tok::Implies) {
            self.bump();
            let rhs = self.parse_implies()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    // ^ : left-associative
    fn parse_xor(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.parse_or()?;
        while self.peek() == Some(&Tok::Xor) {
            self.bump();
            let rhs = self.parse_or()?;
            lhs = Formula::xor(lhs, rhs);
        }
        Ok(lhs)
    }

    // | : n-ary
    fn parse_or(&mut self) -> Result<Formula, ParseError> {
        let first = self.parse_and()?;
        if self.peek() != Some(&Tok::Or) {
            return Ok(first);
        }
        let mut kids = vec![first];
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            kids.push(self.parse_and()?);
        }
        Ok(Formula::or(kids))
    }

    // & : n-ary
    fn parse_and(&mut self) -> Result<Formula, ParseError> {
        let first = self.parse_unary()?;
        if self.peek() != Some(&Tok::And) {
            return Ok(first);
        }
        let mut kids = vec![first];
        while self.peek() == Some(&Tok::And) {
            self.bump();
            kids.push(self.parse_unary()?);
        }
        Ok(Formula::and(kids))
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.bump();
                Ok(Formula::not(self.parse_unary()?))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.parse_iff()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(ParseError::new(self.offset(), "expected `)`")),
                }
            }
            Some(Tok::True) => {
                self.bump();
                Ok(Formula::True)
            }
            Some(Tok::False) => {
                self.bump();
                Ok(Formula::False)
            }
            Some(Tok::Ident(_)) => {
                let off = self.offset();
                let Tok::Ident(name) = self.bump() else {
                    unreachable!()
                };
                if let Some(alphabet) = self.alphabet {
                    if !alphabet.contains(&Var::new(name.as_str())) {
                        return Err(ParseError::new(
                            off,
                            format!("unknown variable `{name}`"),
                        ));
                    }
                }
                Ok(Formula::atom(name.as_str()))
            }
            Some(t) => Err(ParseError::new(
                self.offset(),
                format!("expected a formula, found {}", t.describe()),
            )),
            None => Err(ParseError::new(self.offset(), "expected a formula")),
        }
    }
}

fn parse_inner(text: &str, alphabet: Option<&VarSet>) -> Result<Formula, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let f = p.parse_iff()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::new(
            p.offset(),
            format!("unexpected {}", t.describe()),
        ));
    }
    Ok(f)
}

/// Parses a single formula.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parse_inner(text, None)
}

/// Parses a single formula, rejecting variables outside `alphabet`.
pub fn parse_with_alphabet(text: &str, alphabet: &VarSet) -> Result<Formula, ParseError> {
    parse_inner(text, Some(alphabet))
}

/// A parsed formula file: an optional declared alphabet and one formula per
/// non-comment line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaFile {
    pub alphabet: Option<VarSet>,
    pub formulas: Vec<Formula>,
}

impl FormulaFile {
    /// The file read as a single formula: the conjunction of its lines.
    pub fn conjunction(&self) -> Formula {
        Formula::and(self.formulas.clone())
    }
}

/// Parses the formula file format. Errors name the offending line.
pub fn parse_file(text: &str) -> Result<FormulaFile, Error> {
    let mut alphabet: Option<VarSet> = None;
    let mut formulas = Vec::new();
    let mut saw_formula = false;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if alphabet.is_some() {
                return Err(ParseError::new(
                    0,
                    format!("line {lineno}: duplicate `vars:` header"),
                )
                .into());
            }
            if saw_formula {
                return Err(ParseError::new(
                    0,
                    format!("line {lineno}: `vars:` header must precede all formulas"),
                )
                .into());
            }
            let mut vars = VarSet::new();
            for name in rest.split_whitespace() {
                if !is_identifier(name) {
                    return Err(ParseError::new(
                        0,
                        format!("line {lineno}: `{name}` is not a valid variable name"),
                    )
                    .into());
                }
                vars.insert(Var::new(name));
            }
            alphabet = Some(vars);
            continue;
        }
        let parsed = parse_inner(line, alphabet.as_ref()).map_err(|e| {
            ParseError::new(e.offset, format!("line {lineno}: {}", e.message))
        })?;
        formulas.push(parsed);
        saw_formula = true;
    }
    Ok(FormulaFile { alphabet, formulas })
}

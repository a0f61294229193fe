//! Recursive-descent parser. Comparisons share their leading tokens with
//! Boolean atoms, so the atom parser first attempts `cexp ⋈ cexp` and rolls
//! back on failure.

use crate::lex::{lex_line, Spanned, Tok};
use crasp_core::{well_formed, Alphabet, BExp, CExp, CmpOp, Program, Rule, RuleBody, Violation};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("ill-formed program: {}", render_violations(.0))]
    IllFormed(Vec<Violation>),
}

fn render_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// A parsed `.crasp` file: the header name plus the program it declares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub name: String,
    pub program: Program,
}

/// Parse a full `.crasp` file and check well-formedness.
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    parse_source(text).map(|s| s.program)
}

/// Like [`parse_program`] but keeps the header name.
pub fn parse_source(text: &str) -> Result<SourceFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines
        .next()
        .ok_or(ParseError::Syntax {
            line: 1,
            col: 1,
            message: "empty file: expected `program <name> over {…}`".into(),
        })?;
    let toks = lex_line(header, header_line)?;
    let mut p = P::new(&toks, header_line);
    let (name, alphabet) = p.header()?;

    let mut rules = Vec::new();
    for (lineno, line) in lines {
        let toks = lex_line(line, lineno)?;
        let mut p = P::new(&toks, lineno);
        rules.push(p.rule()?);
    }

    let program = Program::new(alphabet, rules);
    match well_formed(&program) {
        Ok(()) => Ok(SourceFile { name, program }),
        Err(violations) => Err(ParseError::IllFormed(violations)),
    }
}

struct P<'a> {
    toks: &'a [Spanned],
    i: usize,
    line: usize,
}

impl<'a> P<'a> {
    fn new(toks: &'a [Spanned], line: usize) -> Self {
        P { toks, i: 0, line }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|s| &s.tok)
    }

    fn cur_col(&self) -> usize {
        self.toks
            .get(self.i)
            .map(|s| s.col)
            .unwrap_or_else(|| self.toks.last().map(|s| s.col + 1).unwrap_or(1))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: self.line,
            col: self.cur_col(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|s| s.tok.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if self.eat(&want) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => {
                    let got = got.describe();
                    self.err(format!("expected {}, found {}", want.describe(), got))
                }
                None => self.err(format!("expected {} at end of line", want.describe())),
            }
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.i += 1;
                Ok(s)
            }
            Some(got) => self.err(format!("expected an identifier, found {}", got.describe())),
            None => self.err("expected an identifier at end of line"),
        }
    }

    fn nat(&mut self) -> Result<i64, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Nat(n)) => {
                self.i += 1;
                Ok(n)
            }
            Some(got) => self.err(format!("expected a number, found {}", got.describe())),
            None => self.err("expected a number at end of line"),
        }
    }

    fn end_of_line(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(got) => {
                let got = got.describe();
                self.err(format!("unexpected {got} after a complete rule"))
            }
        }
    }

    /// `program <id> over { '<sym>' , … }`
    fn header(&mut self) -> Result<(String, Alphabet), ParseError> {
        self.expect(Tok::KwProgram)?;
        let name = self.ident()?;
        self.expect(Tok::KwOver)?;
        self.expect(Tok::LBrace)?;
        let mut symbols = Vec::new();
        loop {
            match self.bump() {
                Some(Tok::Sym(s)) => symbols.push(s),
                Some(got) => {
                    self.i -= 1;
                    return self.err(format!(
                        "expected a quoted symbol, found {}",
                        got.describe()
                    ));
                }
                None => return self.err("expected a quoted symbol at end of line"),
            }
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RBrace)?;
        self.end_of_line()?;
        let alphabet = Alphabet::new(symbols).map_err(|e| ParseError::Syntax {
            line: self.line,
            col: 1,
            message: e.to_string(),
        })?;
        Ok((name, alphabet))
    }

    /// `bool <id> := <bexp>` or `count <id> := <cexp>`
    fn rule(&mut self) -> Result<Rule, ParseError> {
        let is_bool = match self.bump() {
            Some(Tok::KwBool) => true,
            Some(Tok::KwCount) => false,
            Some(got) => {
                self.i -= 1;
                return self.err(format!(
                    "expected `bool` or `count`, found {}",
                    got.describe()
                ));
            }
            None => return self.err("expected `bool` or `count`"),
        };
        let name = self.ident()?;
        self.expect(Tok::Define)?;
        let body = if is_bool {
            RuleBody::Bool(self.bexp()?)
        } else {
            RuleBody::Count(self.cexp()?)
        };
        self.end_of_line()?;
        Ok(Rule { name, body })
    }

    fn bexp(&mut self) -> Result<BExp, ParseError> {
        let mut e = self.band()?;
        while self.eat(&Tok::KwOr) {
            let rhs = self.band()?;
            e = BExp::or(e, rhs);
        }
        Ok(e)
    }

    fn band(&mut self) -> Result<BExp, ParseError> {
        let mut e = self.bnot()?;
        while self.eat(&Tok::KwAnd) {
            let rhs = self.bnot()?;
            e = BExp::and(e, rhs);
        }
        Ok(e)
    }

    fn bnot(&mut self) -> Result<BExp, ParseError> {
        if self.eat(&Tok::KwNot) {
            Ok(BExp::not(self.bnot()?))
        } else {
            self.batom()
        }
    }

    fn cmp_op(&mut self) -> Option<CmpOp> {
        let op = match self.peek()? {
            Tok::Eq => CmpOp::Eq,
            Tok::Le => CmpOp::Le,
            Tok::Lt => CmpOp::Lt,
            _ => return None,
        };
        self.i += 1;
        Some(op)
    }

    fn batom(&mut self) -> Result<BExp, ParseError> {
        // A comparison and a Boolean atom can start with the same tokens
        // (`(`, an identifier); attempt the comparison first.
        let save = self.i;
        if let Ok(lhs) = self.cexp() {
            if let Some(op) = self.cmp_op() {
                let rhs = self.cexp()?;
                return Ok(BExp::cmp(lhs, op, rhs));
            }
        }
        self.i = save;

        match self.bump() {
            Some(Tok::KwTrue) => Ok(BExp::True),
            Some(Tok::KwFalse) => Ok(BExp::False),
            Some(Tok::Sym(s)) => Ok(BExp::letter(s)),
            Some(Tok::Ident(name)) => Ok(BExp::bref(name)),
            Some(Tok::Nat(m)) => {
                let m_col = self.toks[self.i - 1].col;
                self.expect(Tok::Percent)?;
                let o = self.nat()?;
                if m < 1 || o >= m {
                    return Err(ParseError::Syntax {
                        line: self.line,
                        col: m_col,
                        message: format!(
                            "periodicity `{m}%{o}` requires o < m (offset below modulus)"
                        ),
                    });
                }
                Ok(BExp::periodic(m as u32, o as u32))
            }
            Some(Tok::LParen) => {
                let e = self.bexp()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(got) => {
                self.i -= 1;
                self.err(format!(
                    "expected a Boolean expression, found {}",
                    got.describe()
                ))
            }
            None => self.err("expected a Boolean expression at end of line"),
        }
    }

    fn cexp(&mut self) -> Result<CExp, ParseError> {
        if self.eat(&Tok::KwIf) {
            let c = self.bexp()?;
            self.expect(Tok::KwThen)?;
            let t = self.cexp()?;
            self.expect(Tok::KwElse)?;
            let e = self.cexp()?;
            return Ok(CExp::ite(c, t, e));
        }
        let mut e = self.cterm()?;
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.cterm()?;
                e = CExp::add(e, rhs);
            } else if self.eat(&Tok::Minus) {
                let rhs = self.cterm()?;
                e = CExp::sub(e, rhs);
            } else {
                return Ok(e);
            }
        }
    }

    fn cterm(&mut self) -> Result<CExp, ParseError> {
        match self.bump() {
            Some(Tok::Nat(n)) => Ok(CExp::Const(n)),
            Some(Tok::Ident(name)) => Ok(CExp::cref(name)),
            Some(Tok::Hash) => match self.bump() {
                Some(Tok::LParen) => {
                    let body = self.bexp()?;
                    self.expect(Tok::RParen)?;
                    Ok(CExp::count(body))
                }
                Some(Tok::LBracket) => {
                    let rs = self.nat()?;
                    self.expect(Tok::Comma)?;
                    let re = self.nat()?;
                    self.expect(Tok::RBracket)?;
                    self.expect(Tok::LParen)?;
                    let body = self.bexp()?;
                    self.expect(Tok::RParen)?;
                    if rs < 0 || re < 0 || rs > u32::MAX as i64 || re > u32::MAX as i64 {
                        return self.err("window offsets out of range");
                    }
                    Ok(CExp::window(rs as u32, re as u32, body))
                }
                _ => {
                    if self.i > 0 {
                        self.i -= 1;
                    }
                    self.err("expected `(` or `[` after `#`")
                }
            },
            Some(Tok::KwMin) => {
                self.expect(Tok::LParen)?;
                let a = self.cexp()?;
                self.expect(Tok::Comma)?;
                let b = self.cexp()?;
                self.expect(Tok::RParen)?;
                Ok(CExp::min(a, b))
            }
            Some(Tok::KwMax) => {
                self.expect(Tok::LParen)?;
                let a = self.cexp()?;
                self.expect(Tok::Comma)?;
                let b = self.cexp()?;
                self.expect(Tok::RParen)?;
                Ok(CExp::max(a, b))
            }
            Some(Tok::LParen) => {
                let e = self.cexp()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(got) => {
                self.i -= 1;
                self.err(format!(
                    "expected a count expression, found {}",
                    got.describe()
                ))
            }
            None => self.err("expected a count expression at end of line"),
        }
    }
}

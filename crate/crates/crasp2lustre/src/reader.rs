//! Minimal node reader for the emitted fragment and hand-written nodes of
//! the same shape.  Accepts either a `--%PROPERTY <var>;` annotation (the
//! variable's equation becomes the check) or a `check <expr>;` statement;
//! a node with neither gets the vacuous check `true`.

use lustre_core::{Equation, LBool, LCmpOp, LExpr, LInt, LustreNode, Sort};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ReadError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Nat(i64),
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Eq,
    Le,
    Lt,
    Ge,
    Gt,
    Plus,
    Minus,
    Arrow,
    Property(String),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ReadError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        // Pragmas survive comment stripping; ordinary `--` comments don't.
        let trimmed = raw.trim();
        if let Some(rest) = trimmed.strip_prefix("--%PROPERTY") {
            let name = rest.trim().trim_end_matches(';').trim();
            out.push((Tok::Property(name.to_string()), line));
            continue;
        }
        let code = match raw.find("--") {
            Some(i) => &raw[..i],
            None => raw,
        };
        let chars: Vec<char> = code.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                ' ' | '\t' | '\r' => i += 1,
                '(' => { out.push((Tok::LParen, line)); i += 1; }
                ')' => { out.push((Tok::RParen, line)); i += 1; }
                ':' => { out.push((Tok::Colon, line)); i += 1; }
                ';' => { out.push((Tok::Semi, line)); i += 1; }
                ',' => { out.push((Tok::Comma, line)); i += 1; }
                '=' => { out.push((Tok::Eq, line)); i += 1; }
                '+' => { out.push((Tok::Plus, line)); i += 1; }
                '<' => {
                    if chars.get(i + 1) == Some(&'=') {
                        out.push((Tok::Le, line));
                        i += 2;
                    } else {
                        out.push((Tok::Lt, line));
                        i += 1;
                    }
                }
                '>' => {
                    if chars.get(i + 1) == Some(&'=') {
                        out.push((Tok::Ge, line));
                        i += 2;
                    } else {
                        out.push((Tok::Gt, line));
                        i += 1;
                    }
                }
                '-' => {
                    if chars.get(i + 1) == Some(&'>') {
                        out.push((Tok::Arrow, line));
                        i += 2;
                    } else {
                        out.push((Tok::Minus, line));
                        i += 1;
                    }
                }
                c if c.is_ascii_digit() => {
                    let mut j = i;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    let text: String = chars[i..j].iter().collect();
                    let n = text.parse().map_err(|_| ReadError {
                        line,
                        message: format!("number `{text}` out of range"),
                    })?;
                    out.push((Tok::Nat(n), line));
                    i = j;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut j = i;
                    while j < chars.len()
                        && (chars[j].is_ascii_alphanumeric() || chars[j] == '_')
                    {
                        j += 1;
                    }
                    out.push((Tok::Ident(chars[i..j].iter().collect()), line));
                    i = j;
                }
                other => {
                    return Err(ReadError {
                        line,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
    }
    Ok(out)
}

/// Untyped surface expression; sorts are resolved against declarations.
#[derive(Debug, Clone)]
enum Surf {
    True,
    False,
    Var(String),
    Nat(i64),
    Neg(Box<Surf>),
    Not(Box<Surf>),
    And(Box<Surf>, Box<Surf>),
    Or(Box<Surf>, Box<Surf>),
    Cmp(Box<Surf>, LCmpOp, Box<Surf>),
    Add(Box<Surf>, Box<Surf>),
    Sub(Box<Surf>, Box<Surf>),
    Mod(Box<Surf>, Box<Surf>),
    Ite(Box<Surf>, Box<Surf>, Box<Surf>),
    Pre(Box<Surf>),
    Arrow(Box<Surf>, Box<Surf>),
}

struct P {
    toks: Vec<(Tok, usize)>,
    i: usize,
}

impl P {
    fn line(&self) -> usize {
        self.toks
            .get(self.i)
            .or_else(|| self.toks.last())
            .map(|t| t.1)
            .unwrap_or(1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ReadError> {
        Err(ReadError { line: self.line(), message: message.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|t| t.0.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(w)) if w == kw) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ReadError> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> Result<(), ReadError> {
        if self.eat_kw(kw) {
            Ok(())
        } else {
            self.err(format!("expected `{kw}`"))
        }
    }

    fn ident(&mut self) -> Result<String, ReadError> {
        match self.bump() {
            Some(Tok::Ident(s)) => Ok(s),
            _ => {
                self.i = self.i.saturating_sub(1);
                self.err("expected an identifier")
            }
        }
    }

    // expr := `if` expr `then` expr `else` expr | disj (`->` expr)?
    fn expr(&mut self) -> Result<Surf, ReadError> {
        if self.eat_kw("if") {
            let c = self.expr()?;
            self.expect_kw("then")?;
            let t = self.expr()?;
            self.expect_kw("else")?;
            let f = self.expr()?;
            return Ok(Surf::Ite(Box::new(c), Box::new(t), Box::new(f)));
        }
        let lhs = self.disj()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.expr()?;
            return Ok(Surf::Arrow(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Surf, ReadError> {
        let mut e = self.conj()?;
        while self.eat_kw("or") {
            let rhs = self.conj()?;
            e = Surf::Or(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn conj(&mut self) -> Result<Surf, ReadError> {
        let mut e = self.negation()?;
        while self.eat_kw("and") {
            let rhs = self.negation()?;
            e = Surf::And(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn negation(&mut self) -> Result<Surf, ReadError> {
        if self.eat_kw("not") {
            return Ok(Surf::Not(Box::new(self.negation()?)));
        }
        self.comparison()
    }

    fn comparison(&mut self) -> Result<Surf, ReadError> {
        let lhs = self.additive()?;
        let op = match self.peek() {
            Some(Tok::Eq) => Some(LCmpOp::Eq),
            Some(Tok::Le) => Some(LCmpOp::Le),
            Some(Tok::Lt) => Some(LCmpOp::Lt),
            Some(Tok::Ge) => Some(LCmpOp::Ge),
            Some(Tok::Gt) => Some(LCmpOp::Gt),
            _ => None,
        };
        if let Some(op) = op {
            self.i += 1;
            let rhs = self.additive()?;
            return Ok(Surf::Cmp(Box::new(lhs), op, Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn additive(&mut self) -> Result<Surf, ReadError> {
        let mut e = self.modular()?;
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.modular()?;
                e = Surf::Add(Box::new(e), Box::new(rhs));
            } else if self.eat(&Tok::Minus) {
                let rhs = self.modular()?;
                e = Surf::Sub(Box::new(e), Box::new(rhs));
            } else {
                return Ok(e);
            }
        }
    }

    fn modular(&mut self) -> Result<Surf, ReadError> {
        let mut e = self.unary()?;
        while self.eat_kw("mod") {
            let rhs = self.unary()?;
            e = Surf::Mod(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Surf, ReadError> {
        if self.eat_kw("pre") {
            return Ok(Surf::Pre(Box::new(self.unary()?)));
        }
        if self.eat(&Tok::Minus) {
            return Ok(Surf::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Surf, ReadError> {
        match self.bump() {
            Some(Tok::Nat(n)) => Ok(Surf::Nat(n)),
            Some(Tok::Ident(w)) if w == "true" => Ok(Surf::True),
            Some(Tok::Ident(w)) if w == "false" => Ok(Surf::False),
            Some(Tok::Ident(w)) if w == "if" => {
                self.i -= 1;
                self.expr()
            }
            Some(Tok::Ident(w)) => Ok(Surf::Var(w)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => {
                self.i = self.i.saturating_sub(1);
                self.err("expected an expression")
            }
        }
    }
}

struct Sorter<'a> {
    sorts: &'a BTreeMap<String, Sort>,
    line: usize,
}

impl Sorter<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ReadError> {
        Err(ReadError { line: self.line, message: message.into() })
    }

    fn to_bool(&self, e: &Surf) -> Result<LBool, ReadError> {
        Ok(match e {
            Surf::True => LBool::True,
            Surf::False => LBool::False,
            Surf::Var(v) => match self.sorts.get(v) {
                Some(Sort::Bool) => LBool::Var(v.clone()),
                Some(Sort::Int) => return self.err(format!("`{v}` is int, expected bool")),
                None => return self.err(format!("undeclared variable `{v}`")),
            },
            Surf::Not(a) => LBool::not(self.to_bool(a)?),
            Surf::And(a, b) => LBool::and(self.to_bool(a)?, self.to_bool(b)?),
            Surf::Or(a, b) => LBool::or(self.to_bool(a)?, self.to_bool(b)?),
            Surf::Cmp(a, op, b) => LBool::cmp(self.to_int(a)?, *op, self.to_int(b)?),
            Surf::Pre(a) => LBool::pre(self.to_bool(a)?),
            Surf::Arrow(a, b) => LBool::arrow(self.to_bool(a)?, self.to_bool(b)?),
            Surf::Nat(_) | Surf::Neg(_) | Surf::Add(..) | Surf::Sub(..) | Surf::Mod(..) => {
                return self.err("integer expression where a Boolean is required")
            }
            Surf::Ite(..) => {
                return self.err("if/then/else is integer-sorted in this fragment")
            }
        })
    }

    fn to_int(&self, e: &Surf) -> Result<LInt, ReadError> {
        Ok(match e {
            Surf::Nat(n) => LInt::Const(*n),
            Surf::Neg(a) => match self.to_int(a)? {
                LInt::Const(n) => LInt::Const(-n),
                _ => return self.err("unary minus only applies to literals"),
            },
            Surf::Var(v) => match self.sorts.get(v) {
                Some(Sort::Int) => LInt::Var(v.clone()),
                Some(Sort::Bool) => return self.err(format!("`{v}` is bool, expected int")),
                None => return self.err(format!("undeclared variable `{v}`")),
            },
            Surf::Add(a, b) => LInt::add(self.to_int(a)?, self.to_int(b)?),
            Surf::Sub(a, b) => LInt::sub(self.to_int(a)?, self.to_int(b)?),
            Surf::Mod(a, b) => {
                let m = match self.to_int(b)? {
                    LInt::Const(m) if m != 0 => m,
                    LInt::Const(_) => return self.err("`mod` divisor must be nonzero"),
                    _ => return self.err("`mod` divisor must be a constant"),
                };
                LInt::modulo(self.to_int(a)?, m)
            }
            Surf::Ite(c, t, f) => {
                LInt::ite(self.to_bool(c)?, self.to_int(t)?, self.to_int(f)?)
            }
            Surf::Pre(a) => LInt::pre(self.to_int(a)?),
            Surf::Arrow(a, b) => LInt::arrow(self.to_int(a)?, self.to_int(b)?),
            Surf::True | Surf::False | Surf::Not(_) | Surf::And(..) | Surf::Or(..)
            | Surf::Cmp(..) => {
                return self.err("Boolean expression where an integer is required")
            }
        })
    }
}

/// Parse one node. Declarations give every variable a sort; equation
/// bodies and the check are resolved against them.
pub fn parse_lustre_node(text: &str) -> Result<LustreNode, ReadError> {
    let toks = lex(text)?;
    let mut p = P { toks, i: 0 };

    p.expect_kw("node")?;
    let name = p.ident()?;
    p.expect(Tok::LParen, "`(`")?;
    let input = p.ident()?;
    if input != "I" {
        return Err(ReadError {
            line: p.line(),
            message: format!("expected input variable `I`, found `{input}`"),
        });
    }
    p.expect(Tok::Colon, "`:`")?;
    p.expect_kw("int")?;
    p.expect(Tok::RParen, "`)`")?;

    let mut sorts: BTreeMap<String, Sort> = BTreeMap::new();
    sorts.insert("I".into(), Sort::Int);
    let mut returns: Vec<String> = Vec::new();

    p.expect_kw("returns")?;
    p.expect(Tok::LParen, "`(`")?;
    loop {
        let mut group = vec![p.ident()?];
        while p.eat(&Tok::Comma) {
            // Either another name in this group or the next group; peek for
            // a following colon can't disambiguate, so groups are split at
            // `name :` boundaries only.
            group.push(p.ident()?);
        }
        p.expect(Tok::Colon, "`:`")?;
        let sort = p.ident()?;
        let sort = match sort.as_str() {
            "bool" => Sort::Bool,
            "int" => Sort::Int,
            other => return Err(ReadError {
                line: p.line(),
                message: format!("unknown sort `{other}`"),
            }),
        };
        for v in group {
            sorts.insert(v.clone(), sort);
            returns.push(v);
        }
        if p.eat(&Tok::RParen) {
            break;
        }
        p.expect(Tok::Semi, "`;` between return groups")?;
    }
    p.eat(&Tok::Semi);

    let mut bool_locals = Vec::new();
    let mut int_locals = Vec::new();
    if p.eat_kw("var") {
        while !matches!(p.peek(), Some(Tok::Ident(w)) if w == "let") {
            let mut group = vec![p.ident()?];
            while p.eat(&Tok::Comma) {
                group.push(p.ident()?);
            }
            p.expect(Tok::Colon, "`:`")?;
            let sort_name = p.ident()?;
            let sort = match sort_name.as_str() {
                "bool" => Sort::Bool,
                "int" => Sort::Int,
                other => {
                    return Err(ReadError {
                        line: p.line(),
                        message: format!("unknown sort `{other}`"),
                    })
                }
            };
            p.expect(Tok::Semi, "`;` after a declaration")?;
            for v in group {
                if sorts.insert(v.clone(), sort).is_some() {
                    return Err(ReadError {
                        line: p.line(),
                        message: format!("variable `{v}` declared twice"),
                    });
                }
                match sort {
                    Sort::Bool => bool_locals.push(v),
                    Sort::Int => int_locals.push(v),
                }
            }
        }
    }
    p.expect_kw("let")?;

    let mut equations: Vec<(String, Surf, usize)> = Vec::new();
    let mut check_surf: Option<(Surf, usize)> = None;
    let mut property: Option<String> = None;
    loop {
        match p.peek() {
            Some(Tok::Ident(w)) if w == "tel" => {
                p.i += 1;
                break;
            }
            Some(Tok::Ident(w)) if w == "check" => {
                p.i += 1;
                let line = p.line();
                let e = p.expr()?;
                p.expect(Tok::Semi, "`;` after the check statement")?;
                check_surf = Some((e, line));
            }
            Some(Tok::Property(name)) => {
                property = Some(name.clone());
                p.i += 1;
            }
            Some(_) => {
                let var = p.ident()?;
                let line = p.line();
                p.expect(Tok::Eq, "`=` in an equation")?;
                let body = p.expr()?;
                p.expect(Tok::Semi, "`;` after an equation")?;
                equations.push((var, body, line));
            }
            None => return p.err("unterminated node: expected `tel`"),
        }
    }

    // A property annotation points at an output or local whose equation is
    // the check statement; fold it back.
    let mut check = None;
    if let Some(prop) = &property {
        let idx = equations.iter().position(|(v, _, _)| v == prop);
        match idx {
            Some(idx) => {
                let (_, body, line) = equations.remove(idx);
                let sorter = Sorter { sorts: &sorts, line };
                check = Some(sorter.to_bool(&body)?);
                sorts.remove(prop);
                bool_locals.retain(|v| v != prop);
                returns.retain(|v| v != prop);
            }
            None => {
                return Err(ReadError {
                    line: 1,
                    message: format!("property `{prop}` has no defining equation"),
                })
            }
        }
    }
    if let Some((surf, line)) = check_surf {
        let sorter = Sorter { sorts: &sorts, line };
        check = Some(sorter.to_bool(&surf)?);
    }

    // Remaining outputs with equations behave like locals.
    for v in returns {
        match sorts.get(&v) {
            Some(Sort::Bool) => bool_locals.push(v),
            Some(Sort::Int) => int_locals.push(v),
            None => {}
        }
    }

    let mut resolved = Vec::new();
    for (var, surf, line) in equations {
        let sorter = Sorter { sorts: &sorts, line };
        let body = match sorts.get(&var) {
            Some(Sort::Bool) => LExpr::Bool(sorter.to_bool(&surf)?),
            Some(Sort::Int) => LExpr::Int(sorter.to_int(&surf)?),
            None => {
                return Err(ReadError {
                    line,
                    message: format!("equation defines undeclared variable `{var}`"),
                })
            }
        };
        resolved.push(Equation { var, body });
    }

    Ok(LustreNode {
        name,
        bool_locals,
        int_locals,
        equations: resolved,
        check: check.unwrap_or(LBool::True),
    })
}

//! Line lexer. Files are processed line by line, so tokens carry only a
//! column; the caller knows the line number.

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Nat(i64),
    /// Quoted alphabet symbol, quotes stripped.
    Sym(String),
    KwProgram,
    KwOver,
    KwBool,
    KwCount,
    KwTrue,
    KwFalse,
    KwNot,
    KwAnd,
    KwOr,
    KwMin,
    KwMax,
    KwIf,
    KwThen,
    KwElse,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Percent,
    Plus,
    Minus,
    Eq,
    Le,
    Lt,
    Define,
    Hash,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::Sym(s) => format!("symbol `'{s}'`"),
            Tok::KwProgram => "`program`".into(),
            Tok::KwOver => "`over`".into(),
            Tok::KwBool => "`bool`".into(),
            Tok::KwCount => "`count`".into(),
            Tok::KwTrue => "`true`".into(),
            Tok::KwFalse => "`false`".into(),
            Tok::KwNot => "`not`".into(),
            Tok::KwAnd => "`and`".into(),
            Tok::KwOr => "`or`".into(),
            Tok::KwMin => "`min`".into(),
            Tok::KwMax => "`max`".into(),
            Tok::KwIf => "`if`".into(),
            Tok::KwThen => "`then`".into(),
            Tok::KwElse => "`else`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Percent => "`%`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Define => "`:=`".into(),
            Tok::Hash => "`#`".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Spanned {
    pub tok: Tok,
    pub col: usize,
}

fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "program" => Tok::KwProgram,
        "over" => Tok::KwOver,
        "bool" => Tok::KwBool,
        "count" => Tok::KwCount,
        "true" => Tok::KwTrue,
        "false" => Tok::KwFalse,
        "not" => Tok::KwNot,
        "and" => Tok::KwAnd,
        "or" => Tok::KwOr,
        "min" => Tok::KwMin,
        "max" => Tok::KwMax,
        "if" => Tok::KwIf,
        "then" => Tok::KwThen,
        "else" => Tok::KwElse,
        _ => return None,
    })
}

/// Tokenize one line. Columns are 1-based character positions.
pub fn lex_line(line: &str, lineno: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, message: String| ParseError::Syntax {
        line: lineno,
        col,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
                continue;
            }
            '\'' => {
                let mut j = i + 1;
                let mut sym = String::new();
                loop {
                    match chars.get(j) {
                        Some('\'') => break,
                        Some(&c) => {
                            sym.push(c);
                            j += 1;
                        }
                        None => return Err(err(col, "unterminated symbol quote".into())),
                    }
                }
                if sym.is_empty() {
                    return Err(err(col, "empty symbol".into()));
                }
                out.push(Spanned { tok: Tok::Sym(sym), col });
                i = j + 1;
            }
            '{' => { out.push(Spanned { tok: Tok::LBrace, col }); i += 1; }
            '}' => { out.push(Spanned { tok: Tok::RBrace, col }); i += 1; }
            '(' => { out.push(Spanned { tok: Tok::LParen, col }); i += 1; }
            ')' => { out.push(Spanned { tok: Tok::RParen, col }); i += 1; }
            '[' => { out.push(Spanned { tok: Tok::LBracket, col }); i += 1; }
            ']' => { out.push(Spanned { tok: Tok::RBracket, col }); i += 1; }
            ',' => { out.push(Spanned { tok: Tok::Comma, col }); i += 1; }
            '%' => { out.push(Spanned { tok: Tok::Percent, col }); i += 1; }
            '+' => { out.push(Spanned { tok: Tok::Plus, col }); i += 1; }
            '-' => { out.push(Spanned { tok: Tok::Minus, col }); i += 1; }
            '=' => { out.push(Spanned { tok: Tok::Eq, col }); i += 1; }
            '#' => { out.push(Spanned { tok: Tok::Hash, col }); i += 1; }
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    out.push(Spanned { tok: Tok::Le, col });
                    i += 2;
                } else {
                    out.push(Spanned { tok: Tok::Lt, col });
                    i += 1;
                }
            }
            ':' => {
                if chars.get(i + 1) == Some(&'=') {
                    out.push(Spanned { tok: Tok::Define, col });
                    i += 2;
                } else {
                    return Err(err(col, "expected `:=`".into()));
                }
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let text: String = chars[i..j].iter().collect();
                let n: i64 = text
                    .parse()
                    .map_err(|_| err(col, format!("number `{text}` out of range")))?;
                out.push(Spanned { tok: Tok::Nat(n), col });
                i = j;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len()
                    && (chars[j].is_ascii_alphanumeric() || chars[j] == '_')
                {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                let tok = keyword(&word).unwrap_or(Tok::Ident(word));
                out.push(Spanned { tok, col });
                i = j;
            }
            other => return Err(err(col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

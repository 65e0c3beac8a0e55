//! Statements of the evaluator language and their canonical printing.
//!
//! ```text
//! stmt := 'let' IDENT '=' term | term
//! term := CMD arg... | expr [('in' | 'sub' | 'eq') expr]
//! expr := '{' [expr {',' expr}] '}' | NAT | IDENT | '(' CMD arg... ')'
//!       | 'ord' '{' ... '}' | 'mewo' '{' ... '}'
//! ```
//!
//! Every command takes a fixed number of arguments. `ord` and `mewo` literals
//! use the structure text format.

use std::fmt;

use hfkit_core::text::{mewo_to_text, ord_to_text, parse_mewo, parse_ord, TextError};
use hfkit_core::{FinOrd, Mewo};

/// Commands with their arities.
pub const COMMANDS: [(&str, usize); 13] = [
    ("canon", 1),
    ("rank", 1),
    ("ord?", 1),
    ("transitive?", 1),
    ("in", 2),
    ("sub", 2),
    ("phi", 1),
    ("psi", 1),
    ("tomewo", 1),
    ("tov", 1),
    ("eq", 2),
    ("dot", 1),
    ("json", 1),
];

const INFIX: [&str; 3] = ["in", "sub", "eq"];
const KEYWORDS: [&str; 3] = ["let", "ord", "mewo"];

pub fn arity(command: &str) -> Option<usize> {
    COMMANDS.iter().find(|(c, _)| *c == command).map(|&(_, n)| n)
}

fn reserved(word: &str) -> bool {
    arity(word).is_some() || KEYWORDS.contains(&word)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    EmptySet,
    /// Never empty: `{}` parses as [`Expr::EmptySet`].
    Braces(Vec<Expr>),
    Numeral(usize),
    Ident(String),
    Op(String, Vec<Expr>),
    Ord(FinOrd),
    Mewo(Mewo, Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Let(String, Expr),
    Eval(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: expected {}, found {}", self.line, self.column, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Equals,
    Nat(usize),
    Word(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Nat(n) => format!("`{n}`"),
            Tok::Word(w) => format!("`{w}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    /// Byte offset of the next unread character.
    pos: usize,
    line: usize,
    column: usize,
    peeked: Option<(Tok, usize, usize, usize)>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Parser {
            src,
            pos: 0,
            line,
            column: 1,
            peeked: None,
        }
    }

    fn bump_char(&mut self) -> Option<char> {
        let c = self.src[self.pos..].chars().next()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek_char() {
            if c == '#' {
                while self.peek_char().is_some_and(|c| c != '\n') {
                    self.bump_char();
                }
            } else if c.is_whitespace() {
                self.bump_char();
            } else {
                break;
            }
        }
    }

    /// Returns the token with its line, column and starting byte offset.
    fn lex(&mut self) -> Result<(Tok, usize, usize, usize), ParseError> {
        self.skip_trivia();
        let (line, column, start) = (self.line, self.column, self.pos);
        let Some(c) = self.bump_char() else {
            return Ok((Tok::Eof, line, column, start));
        };
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '=' => Tok::Equals,
            '0'..='9' => {
                while self.peek_char().is_some_and(|c| c.is_ascii_digit()) {
                    self.bump_char();
                }
                let digits = &self.src[start..self.pos];
                let n = digits.parse().map_err(|_| ParseError {
                    line,
                    column,
                    expected: vec!["a numeral that fits in memory".into()],
                    found: format!("`{digits}`"),
                })?;
                Tok::Nat(n)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while self.peek_char().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.bump_char();
                }
                if self.peek_char() == Some('?') {
                    self.bump_char();
                }
                Tok::Word(self.src[start..self.pos].to_string())
            }
            other => {
                return Err(ParseError {
                    line,
                    column,
                    expected: vec!["a token".into()],
                    found: format!("`{other}`"),
                })
            }
        };
        Ok((tok, line, column, start))
    }

    fn peek(&mut self) -> Result<&(Tok, usize, usize, usize), ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(self.peeked.as_ref().expect("just filled"))
    }

    fn next(&mut self) -> Result<(Tok, usize, usize, usize), ParseError> {
        self.peek()?;
        Ok(self.peeked.take().expect("just filled"))
    }

    fn fail<T>(&mut self, expected: &[&str]) -> Result<T, ParseError> {
        let (tok, line, column, _) = self.peek()?.clone();
        Err(ParseError {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        })
    }

    fn stmt(&mut self) -> Result<Stmt, ParseError> {
        let s = if matches!(self.peek()?, (Tok::Word(w), ..) if w == "let") {
            self.next()?;
            let name = match self.peek()?.clone() {
                (Tok::Word(w), ..) if !reserved(&w) => {
                    self.next()?;
                    w
                }
                _ => return self.fail(&["an identifier"]),
            };
            if !matches!(self.peek()?, (Tok::Equals, ..)) {
                return self.fail(&["`=`"]);
            }
            self.next()?;
            Stmt::Let(name, self.term()?)
        } else {
            Stmt::Eval(self.term()?)
        };
        if !matches!(self.peek()?, (Tok::Eof, ..)) {
            return self.fail(&["end of input"]);
        }
        Ok(s)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if let (Tok::Word(w), ..) = self.peek()?.clone() {
            if let Some(n) = arity(&w) {
                self.next()?;
                return self.args(w, n);
            }
        }
        let lhs = self.expr()?;
        if let (Tok::Word(w), ..) = self.peek()?.clone() {
            if INFIX.contains(&w.as_str()) {
                self.next()?;
                let rhs = self.expr()?;
                return Ok(Expr::Op(w, vec![lhs, rhs]));
            }
        }
        Ok(lhs)
    }

    fn args(&mut self, command: String, n: usize) -> Result<Expr, ParseError> {
        let mut args = Vec::with_capacity(n);
        for _ in 0..n {
            args.push(self.expr()?);
        }
        Ok(Expr::Op(command, args))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        const START: [&str; 5] = ["`{`", "a numeral", "an identifier", "`(`", "a structure literal"];
        let (tok, ..) = self.peek()?.clone();
        match tok {
            Tok::LBrace => {
                self.next()?;
                if matches!(self.peek()?, (Tok::RBrace, ..)) {
                    self.next()?;
                    return Ok(Expr::EmptySet);
                }
                let mut members = vec![self.expr_or(&["`}`"])?];
                loop {
                    match self.peek()?.0 {
                        Tok::Comma => {
                            self.next()?;
                            members.push(self.expr()?);
                        }
                        Tok::RBrace => {
                            self.next()?;
                            return Ok(Expr::Braces(members));
                        }
                        _ => return self.fail(&["`,`", "`}`"]),
                    }
                }
            }
            Tok::Nat(n) => {
                self.next()?;
                Ok(Expr::Numeral(n))
            }
            Tok::LParen => {
                self.next()?;
                let command = match self.peek()?.clone() {
                    (Tok::Word(w), ..) if arity(&w).is_some() => {
                        self.next()?;
                        w
                    }
                    _ => return self.fail(&["a command"]),
                };
                let n = arity(&command).expect("checked");
                let op = self.args(command, n)?;
                if !matches!(self.peek()?, (Tok::RParen, ..)) {
                    return self.fail(&["`)`"]);
                }
                self.next()?;
                Ok(op)
            }
            Tok::Word(w) if w == "ord" || w == "mewo" => self.literal(&w),
            Tok::Word(w) if !reserved(&w) => {
                self.next()?;
                Ok(Expr::Ident(w))
            }
            _ => self.fail(&START),
        }
    }

    /// An expression, or a failure that also lists `extra` as acceptable.
    fn expr_or(&mut self, extra: &[&str]) -> Result<Expr, ParseError> {
        self.expr().map_err(|mut e| {
            if e.expected.first().is_some_and(|s| s == "`{`") {
                e.expected.extend(extra.iter().map(|s| s.to_string()));
            }
            e
        })
    }

    /// Hands the balanced braces after `ord` or `mewo` to the structure parser,
    /// translating its error positions.
    fn literal(&mut self, kind: &str) -> Result<Expr, ParseError> {
        let (_, line, column, start) = self.next()?;
        if !matches!(self.peek()?, (Tok::LBrace, ..)) {
            return self.fail(&["`{`"]);
        }
        // The structure syntax has tokens of its own (`<`, `;`, `:`), so the
        // literal is delimited by raw brace matching and parsed separately.
        let (_, open_line, open_column, open) = self.peeked.take().expect("peeked above");
        (self.pos, self.line, self.column) = (open, open_line, open_column);
        let mut depth = 0usize;
        loop {
            match self.bump_char() {
                Some('{') => depth += 1,
                Some('}') => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                Some(_) => {}
                None => return self.fail(&["`}`"]),
            }
        }
        let raw = &self.src[start..self.pos];
        let to_parse_error = |e: TextError| {
            let (l, c) = e.position().unwrap_or((1, 1));
            let (line, column) = if l == 1 { (line, column + c - 1) } else { (line + l - 1, c) };
            let (expected, found) = match e {
                TextError::Syntax { expected, found, .. } => (expected, found),
                TextError::UnknownElement { name, .. } => (vec!["a declared element".into()], format!("`{name}`")),
                TextError::DuplicateElement { name, .. } => (vec!["a fresh element name".into()], format!("`{name}`")),
                other => (vec![format!("a valid {kind}")], other.to_string()),
            };
            ParseError { line, column, expected, found }
        };
        Ok(if kind == "ord" {
            Expr::Ord(parse_ord(raw).map_err(to_parse_error)?)
        } else {
            let (m, names) = parse_mewo(raw).map_err(to_parse_error)?;
            Expr::Mewo(m, names)
        })
    }
}

pub fn parse_stmt(text: &str, line: usize) -> Result<Stmt, ParseError> {
    Parser::new(text, line).stmt()
}

#[cfg(test)]
fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text, 1);
    let e = p.expr()?;
    if !matches!(p.peek()?, (Tok::Eof, ..)) {
        return p.fail(&["end of input"]);
    }
    Ok(e)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::EmptySet => f.write_str("{}"),
            Expr::Braces(members) => {
                f.write_str("{")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{m}")?;
                }
                f.write_str("}")
            }
            Expr::Numeral(n) => write!(f, "{n}"),
            Expr::Ident(name) => f.write_str(name),
            Expr::Op(command, args) => {
                write!(f, "({command}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
            Expr::Ord(alpha) => f.write_str(&ord_to_text(alpha)),
            Expr::Mewo(x, names) => f.write_str(&mewo_to_text(x, Some(names))),
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Let(name, e) => write!(f, "let {name} = {e}"),
            Stmt::Eval(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(text: &str) -> Expr {
        parse_expr(text).unwrap()
    }

    #[test]
    fn brace_forms() {
        assert_eq!(e("{}"), Expr::EmptySet);
        assert_eq!(e("{{},{{}}}"), Expr::Braces(vec![Expr::EmptySet, Expr::Braces(vec![Expr::EmptySet])]));
        assert_eq!(e(" { 3 , x } "), Expr::Braces(vec![Expr::Numeral(3), Expr::Ident("x".into())]));
    }

    #[test]
    fn errors_carry_positions_and_expectations() {
        let err = parse_expr("{,").unwrap_err();
        assert_eq!((err.line, err.column), (1, 2));
        assert!(err.expected.contains(&"`}`".to_string()), "{err}");
        assert_eq!(err.found, "`,`");
        let err = parse_stmt("let = 3", 4).unwrap_err();
        assert_eq!((err.line, err.column), (4, 5));
        let err = parse_stmt("{} {}", 1).unwrap_err();
        assert_eq!((err.line, err.column), (1, 4));
        assert!(parse_stmt("let in = 3", 1).is_err());
        assert!(parse_stmt("rank", 1).is_err());
        assert!(parse_stmt("{1 2}", 1).is_err());
        assert!(parse_stmt("$", 1).is_err());
    }

    #[test]
    fn statements() {
        assert_eq!(
            parse_stmt("2 in 3", 1).unwrap(),
            Stmt::Eval(Expr::Op("in".into(), vec![Expr::Numeral(2), Expr::Numeral(3)]))
        );
        assert_eq!(parse_stmt("in 2 3", 1).unwrap(), parse_stmt("2 in 3", 1).unwrap());
        assert_eq!(
            parse_stmt("let x = rank {{{}}}  # depth two", 1).unwrap(),
            Stmt::Let("x".into(), Expr::Op("rank".into(), vec![e("{{{}}}")]))
        );
        assert_eq!(
            parse_stmt("ord? (psi 3)", 1).unwrap(),
            Stmt::Eval(Expr::Op("ord?".into(), vec![Expr::Op("psi".into(), vec![Expr::Numeral(3)])]))
        );
    }

    #[test]
    fn structure_literals() {
        let s = parse_stmt("phi mewo { elems: a b; lt: a<b; marked: b }", 1).unwrap();
        let Stmt::Eval(Expr::Op(_, args)) = &s else { panic!("{s:?}") };
        assert!(matches!(&args[0], Expr::Mewo(m, names) if m.size() == 2 && names == &["a", "b"]));
        let s = parse_stmt("eq ord { size: 2; lt: 1<0 } ord { size: 2; lt: 0<1 }", 1).unwrap();
        assert_eq!(parse_stmt(&s.to_string(), 1).unwrap(), s);
        let err = parse_stmt("phi ord { size: 2; lt: 0<1, 1<0 }", 3).unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_stmt("phi ord { size: 2; lt: 0<1,, }", 1).unwrap_err();
        assert_eq!((err.line, err.column), (1, 28));
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            Just(Expr::EmptySet),
            (0usize..20).prop_map(Expr::Numeral),
            "[a-z][a-z0-9_]{0,3}"
                .prop_filter("not reserved", |w| !reserved(w))
                .prop_map(Expr::Ident),
            (0usize..4).prop_map(|n| Expr::Ord(FinOrd::chain(n))),
        ];
        leaf.prop_recursive(4, 24, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 1..4).prop_map(Expr::Braces),
                (prop::sample::select(&COMMANDS[..]), prop::collection::vec(inner, 2))
                    .prop_map(|((c, n), mut args)| {
                        args.truncate(n);
                        Expr::Op(c.to_string(), args)
                    }),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_print(e in arb_expr(), bind in any::<bool>()) {
            let s = if bind { Stmt::Let("x".into(), e) } else { Stmt::Eval(e) };
            prop_assert_eq!(parse_stmt(&s.to_string(), 1).unwrap(), s);
        }
    }
}

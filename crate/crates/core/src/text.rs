//! Text, JSON and DOT formats for ordinals, mewos and sets.
//!
//! ```text
//! ord { size: 3; lt: 0<1, 0<2, 1<2 }
//! mewo { elems: a b c; lt: a<b, b<c; marked: c }
//! ```
//!
//! Printing is deterministic: pairs are listed lexicographically, elements in
//! declaration order.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hfset::{SetHandle, SetUniverse};
use crate::mewo::Mewo;
use crate::order::ValidationError;
use crate::ordinal::FinOrd;
use crate::relation::Relation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: unknown element `{name}`")]
    UnknownElement { line: usize, column: usize, name: String },
    #[error("{line}:{column}: element `{name}` declared twice")]
    DuplicateElement { line: usize, column: usize, name: String },
    #[error("invalid structure: {0}")]
    Invalid(#[from] ValidationError),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl TextError {
    /// Position of a syntax-level error, 1-based.
    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            TextError::Syntax { line, column, .. }
            | TextError::UnknownElement { line, column, .. }
            | TextError::DuplicateElement { line, column, .. } => Some((*line, *column)),
            _ => None,
        }
    }
}

/// A word with its line and column.
type Located = (String, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer, TextError> {
        let mut toks = Vec::new();
        let (mut line, mut column) = (1, 1);
        let mut chars = text.chars().peekable();
        while let Some(&c) = chars.peek() {
            let (l, col) = (line, column);
            if c == '\n' {
                chars.next();
                line += 1;
                column = 1;
            } else if c.is_whitespace() {
                chars.next();
                column += 1;
            } else if c == '#' {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                    column += 1;
                }
            } else if is_word_char(c) {
                let mut w = String::new();
                while let Some(&c) = chars.peek().filter(|&&c| is_word_char(c)) {
                    w.push(c);
                    chars.next();
                    column += 1;
                }
                toks.push((Tok::Word(w), l, col));
            } else if "{};:,<".contains(c) {
                chars.next();
                column += 1;
                toks.push((Tok::Punct(c), l, col));
            } else {
                return Err(TextError::Syntax {
                    line: l,
                    column: col,
                    expected: vec!["a name or punctuation".into()],
                    found: format!("`{c}`"),
                });
            }
        }
        toks.push((Tok::End, line, column));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = self.toks[self.pos];
        (l, c)
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, TextError> {
        let (line, column) = self.here();
        Err(TextError::Syntax {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn punct(&mut self, c: char) -> Result<(), TextError> {
        if *self.peek() == Tok::Punct(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn keyword(&mut self, k: &str) -> Result<(), TextError> {
        match self.peek() {
            Tok::Word(w) if w == k => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(&[&format!("`{k}`")]),
        }
    }

    fn word(&mut self, what: &str) -> Result<Located, TextError> {
        let (l, c) = self.here();
        match self.peek().clone() {
            Tok::Word(w) => {
                self.pos += 1;
                Ok((w, l, c))
            }
            _ => self.fail(&[what]),
        }
    }

    fn end(&mut self) -> Result<(), TextError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.fail(&["end of input"]),
        }
    }

    /// `a<b, c<d` up to (not including) `stop`; possibly empty.
    fn pairs(&mut self, stop: char) -> Result<Vec<(Located, Located)>, TextError> {
        let mut out = Vec::new();
        if *self.peek() == Tok::Punct(stop) {
            return Ok(out);
        }
        loop {
            let a = self.word("an element")?;
            self.punct('<')?;
            let b = self.word("an element")?;
            out.push((a, b));
            match self.peek() {
                Tok::Punct(',') => self.pos += 1,
                Tok::Punct(c) if *c == stop => return Ok(out),
                _ => return self.fail(&["`,`", &format!("`{stop}`")]),
            }
        }
    }
}

fn pairs_text(rel: &Relation, name: impl Fn(usize) -> String) -> String {
    rel.pairs()
        .map(|(i, j)| format!("{}<{}", name(i), name(j)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn clause(label: &str, body: &str) -> String {
    if body.is_empty() {
        format!("{label}:")
    } else {
        format!("{label}: {body}")
    }
}

pub fn ord_to_text(alpha: &FinOrd) -> String {
    format!(
        "ord {{ size: {}; {} }}",
        alpha.size(),
        clause("lt", &pairs_text(alpha.relation(), |i| i.to_string()))
    )
}

pub fn parse_ord(text: &str) -> Result<FinOrd, TextError> {
    let mut lx = Lexer::new(text)?;
    lx.keyword("ord")?;
    lx.punct('{')?;
    lx.keyword("size")?;
    lx.punct(':')?;
    let (n, l, c) = lx.word("a size")?;
    let size: usize = n.parse().map_err(|_| TextError::Syntax {
        line: l,
        column: c,
        expected: vec!["a natural number".into()],
        found: format!("`{n}`"),
    })?;
    lx.punct(';')?;
    lx.keyword("lt")?;
    lx.punct(':')?;
    let mut pairs = Vec::new();
    for ((a, al, ac), (b, bl, bc)) in lx.pairs('}')? {
        let index = |s: &str, line, column| -> Result<usize, TextError> {
            s.parse::<usize>()
                .ok()
                .filter(|&i| i < size)
                .ok_or(TextError::UnknownElement {
                    line,
                    column,
                    name: s.to_string(),
                })
        };
        pairs.push((index(&a, al, ac)?, index(&b, bl, bc)?));
    }
    lx.punct('}')?;
    lx.end()?;
    Ok(FinOrd::from_pairs(size, &pairs)?)
}

/// Default element names are the labels themselves.
pub fn mewo_to_text(x: &Mewo, names: Option<&[String]>) -> String {
    let name = |i: usize| match names {
        Some(ns) => ns[i].clone(),
        None => i.to_string(),
    };
    let elems: Vec<String> = (0..x.size()).map(name).collect();
    let marked: Vec<String> = x.marked_elements().map(name).collect();
    format!(
        "mewo {{ {}; {}; {} }}",
        clause("elems", &elems.join(" ")),
        clause("lt", &pairs_text(x.relation(), name)),
        clause("marked", &marked.join(" "))
    )
}

/// Parses a mewo and returns it with its element names.
pub fn parse_mewo(text: &str) -> Result<(Mewo, Vec<String>), TextError> {
    let mut lx = Lexer::new(text)?;
    lx.keyword("mewo")?;
    lx.punct('{')?;
    lx.keyword("elems")?;
    lx.punct(':')?;
    let mut names = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    while let Tok::Word(_) = lx.peek() {
        let (w, line, column) = lx.word("an element")?;
        if index.insert(w.clone(), names.len()).is_some() {
            return Err(TextError::DuplicateElement { line, column, name: w });
        }
        names.push(w);
    }
    lx.punct(';')?;
    lx.keyword("lt")?;
    lx.punct(':')?;
    let lookup = |(s, line, column): Located| -> Result<usize, TextError> {
        index
            .get(&s)
            .copied()
            .ok_or(TextError::UnknownElement { line, column, name: s })
    };
    let mut pairs = Vec::new();
    for (a, b) in lx.pairs(';')? {
        pairs.push((lookup(a)?, lookup(b)?));
    }
    lx.punct(';')?;
    lx.keyword("marked")?;
    lx.punct(':')?;
    let mut marked = Vec::new();
    while let Tok::Word(_) = lx.peek() {
        marked.push(lookup(lx.word("an element")?)?);
    }
    lx.punct('}')?;
    lx.end()?;
    Ok((Mewo::from_pairs(names.len(), &pairs, &marked)?, names))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrdJson {
    size: usize,
    pairs: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MewoJson {
    size: usize,
    pairs: Vec<[usize; 2]>,
    marked: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

fn pair_list(rel: &Relation) -> Vec<[usize; 2]> {
    rel.pairs().map(|(i, j)| [i, j]).collect()
}

fn check_pairs(size: usize, pairs: &[[usize; 2]]) -> Result<Vec<(usize, usize)>, TextError> {
    pairs
        .iter()
        .map(|&[i, j]| {
            let element = i.max(j);
            if element < size {
                Ok((i, j))
            } else {
                Err(ValidationError::ElementOutOfRange { element, size }.into())
            }
        })
        .collect()
}

pub fn ord_to_json(alpha: &FinOrd) -> String {
    serde_json::to_string(&OrdJson {
        size: alpha.size(),
        pairs: pair_list(alpha.relation()),
    })
    .expect("serializable")
}

pub fn ord_from_json(text: &str) -> Result<FinOrd, TextError> {
    let j: OrdJson = serde_json::from_str(text).map_err(|e| TextError::Json(e.to_string()))?;
    Ok(FinOrd::from_pairs(j.size, &check_pairs(j.size, &j.pairs)?)?)
}

pub fn mewo_to_json(x: &Mewo, names: Option<&[String]>) -> String {
    serde_json::to_string(&MewoJson {
        size: x.size(),
        pairs: pair_list(x.relation()),
        marked: x.marked_elements().collect(),
        names: names.map(|n| n.to_vec()),
    })
    .expect("serializable")
}

pub fn mewo_from_json(text: &str) -> Result<(Mewo, Vec<String>), TextError> {
    let j: MewoJson = serde_json::from_str(text).map_err(|e| TextError::Json(e.to_string()))?;
    let pairs = check_pairs(j.size, &j.pairs)?;
    let names = match j.names {
        Some(n) if n.len() != j.size => return Err(TextError::Json(format!("{} names for {} elements", n.len(), j.size))),
        Some(n) => n,
        None => (0..j.size).map(|i| i.to_string()).collect(),
    };
    Ok((Mewo::from_pairs(j.size, &pairs, &j.marked)?, names))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Edges point from the smaller element to the larger one, i.e. from member to
/// set. Marked elements are filled.
pub fn mewo_to_dot(x: &Mewo, names: Option<&[String]>) -> String {
    let mut out = String::from("digraph mewo {\n");
    for i in 0..x.size() {
        let label = names.map_or_else(|| i.to_string(), |n| dot_escape(&n[i]));
        let style = if x.is_marked(i) { ", style=filled, fillcolor=black, fontcolor=white" } else { "" };
        writeln!(out, "  n{i} [label=\"{label}\"{style}];").unwrap();
    }
    for (i, j) in x.relation().pairs() {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn ord_to_dot(alpha: &FinOrd) -> String {
    let mut out = String::from("digraph ord {\n");
    for i in 0..alpha.size() {
        writeln!(out, "  n{i} [label=\"{i}\"];").unwrap();
    }
    for (i, j) in alpha.relation().pairs() {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// The membership graph of `h` and its hereditary members, edges member → set.
/// The root is drawn as a box.
pub fn set_to_dot(u: &SetUniverse, h: SetHandle) -> String {
    let slice = u.export(h);
    let mut out = String::from("digraph set {\n");
    for i in 0..slice.nodes.len() {
        let shape = if i == slice.root { ", shape=box" } else { "" };
        writeln!(out, "  n{i} [label=\"{i}\"{shape}];").unwrap();
    }
    for (parent, children) in slice.nodes.iter().enumerate() {
        for child in children {
            writeln!(out, "  n{child} -> n{parent};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

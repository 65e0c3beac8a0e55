//! Evaluation of statements against a set universe and a table of bindings.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use hfkit_core::correspondence::{phi_mewo, phi_ord, psi_mewo, psi_ord};
use hfkit_core::hfset::DEFAULT_NUMERAL_LIMIT;
use hfkit_core::mewo::{bounded_sim_mewo, mewo_equal, simulation_mewo};
use hfkit_core::ordinal::{bounded_sim, simulation};
use hfkit_core::text::{
    mewo_from_json, mewo_to_dot, mewo_to_json, mewo_to_text, ord_from_json, ord_to_dot, ord_to_json, ord_to_text,
    parse_mewo, parse_ord, set_to_dot, TextError,
};
use hfkit_core::{FinOrd, Mewo, SetError, SetHandle, SetUniverse};

use crate::syntax::{parse_stmt, Expr, ParseError, Stmt};

/// Brace renderings longer than this are refused; numerals double in length
/// with each step.
pub const MAX_PRINTED_LEN: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Set(SetHandle),
    Ord(FinOrd),
    Mewo(Mewo, Vec<String>),
    Bool(bool),
    Nat(usize),
    /// Already rendered output of `canon`, `dot` and `json`.
    Text(String),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Set(_) => "a set",
            Value::Ord(_) => "an ordinal",
            Value::Mewo(..) => "a mewo",
            Value::Bool(_) => "a boolean",
            Value::Nat(_) => "a number",
            Value::Text(_) => "rendered text",
        }
    }
}

#[derive(Debug)]
pub enum EvalError {
    Parse(ParseError),
    Unbound(String),
    AlreadyBound(String),
    Type(String),
    Set(SetError),
    Load(String),
    TooLarge(u64),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Parse(e) => write!(f, "{e}"),
            EvalError::Unbound(name) => write!(f, "`{name}` is not bound"),
            EvalError::AlreadyBound(name) => write!(f, "`{name}` is already bound; bindings cannot be redefined"),
            EvalError::Type(msg) => f.write_str(msg),
            EvalError::Set(e) => write!(f, "{e}"),
            EvalError::Load(msg) => f.write_str(msg),
            EvalError::TooLarge(n) => write!(
                f,
                "brace form would take {n} bytes (limit {MAX_PRINTED_LEN}); use --format json or dot"
            ),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<SetError> for EvalError {
    fn from(e: SetError) -> Self {
        EvalError::Set(e)
    }
}

impl From<ParseError> for EvalError {
    fn from(e: ParseError) -> Self {
        EvalError::Parse(e)
    }
}

pub struct Session {
    universe: SetUniverse,
    bindings: HashMap<String, Value>,
    format: Format,
}

impl Session {
    pub fn new(node_limit: usize, format: Format) -> Self {
        Session {
            universe: SetUniverse::with_limits(node_limit, DEFAULT_NUMERAL_LIMIT),
            bindings: HashMap::new(),
            format,
        }
    }

    /// Binds `name` once; only sets, ordinals and mewos can be bound.
    pub fn bind(&mut self, name: &str, value: Value) -> Result<(), EvalError> {
        if !matches!(value, Value::Set(_) | Value::Ord(_) | Value::Mewo(..)) {
            return Err(EvalError::Type(format!(
                "only sets, ordinals and mewos can be bound, not {}",
                value.kind()
            )));
        }
        if self.bindings.contains_key(name) {
            return Err(EvalError::AlreadyBound(name.to_string()));
        }
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }

    /// Binds the ordinal or mewo stored in a file, in text or JSON form.
    pub fn load(&mut self, name: &str, contents: &str) -> Result<(), EvalError> {
        let valid_name = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid_name {
            return Err(EvalError::Load(format!("`{name}` is not a valid identifier")));
        }
        let describe = |e: TextError| EvalError::Load(format!("cannot load `{name}`: {e}"));
        let trimmed = contents.trim_start();
        let value = if trimmed.starts_with('{') {
            if trimmed.contains("\"marked\"") {
                let (m, names) = mewo_from_json(contents).map_err(describe)?;
                Value::Mewo(m, names)
            } else {
                Value::Ord(ord_from_json(contents).map_err(describe)?)
            }
        } else if trimmed.starts_with("mewo") {
            let (m, names) = parse_mewo(contents).map_err(describe)?;
            Value::Mewo(m, names)
        } else {
            Value::Ord(parse_ord(contents).map_err(describe)?)
        };
        self.bind(name, value)
    }

    /// Executes one statement and returns what it prints, if anything.
    pub fn exec_line(&mut self, text: &str, line: usize) -> Result<Option<String>, EvalError> {
        if text.trim().is_empty() || text.trim_start().starts_with('#') {
            return Ok(None);
        }
        match parse_stmt(text, line)? {
            Stmt::Let(name, e) => {
                if self.bindings.contains_key(&name) {
                    return Err(EvalError::AlreadyBound(name));
                }
                let v = self.eval(&e)?;
                self.bind(&name, v)?;
                Ok(None)
            }
            Stmt::Eval(e) => {
                let v = self.eval(&e)?;
                self.render(&v, self.format).map(Some)
            }
        }
    }

    /// Runs every line of `input`, writing results to `out` and errors to
    /// `err`. Returns whether every statement succeeded. A prompt, if given,
    /// goes to `err` before each line so that `out` matches batch mode.
    pub fn run(
        &mut self,
        input: impl BufRead,
        out: &mut impl Write,
        err: &mut impl Write,
        prompt: Option<&str>,
    ) -> std::io::Result<bool> {
        let mut ok = true;
        let mut lines = input.lines();
        let mut n = 0;
        loop {
            if let Some(p) = prompt {
                write!(err, "{p}")?;
                err.flush()?;
            }
            let Some(line) = lines.next() else { break };
            let line = line?;
            n += 1;
            match self.exec_line(&line, n) {
                Ok(Some(text)) => writeln!(out, "{}", text.trim_end_matches('\n'))?,
                Ok(None) => {}
                Err(e @ EvalError::Parse(_)) => {
                    ok = false;
                    writeln!(err, "error: {e}")?;
                }
                Err(e) => {
                    ok = false;
                    writeln!(err, "error: line {n}: {e}")?;
                }
            }
            out.flush()?;
        }
        if prompt.is_some() {
            writeln!(err)?;
        }
        Ok(ok)
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Value, EvalError> {
        Ok(match e {
            Expr::EmptySet => Value::Set(self.universe.empty_set()?),
            Expr::Braces(members) => {
                let hs = members.iter().map(|m| self.eval_set(m, "a set member")).collect::<Result<Vec<_>, _>>()?;
                Value::Set(self.universe.mk_set(&hs)?)
            }
            Expr::Numeral(n) => Value::Set(self.universe.von_neumann(*n)?),
            Expr::Ident(name) => self.bindings.get(name).cloned().ok_or_else(|| EvalError::Unbound(name.clone()))?,
            Expr::Ord(alpha) => Value::Ord(alpha.clone()),
            Expr::Mewo(x, names) => Value::Mewo(x.clone(), names.clone()),
            Expr::Op(command, args) => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                self.apply(command, vals)?
            }
        })
    }

    fn eval_set(&mut self, e: &Expr, role: &str) -> Result<SetHandle, EvalError> {
        match self.eval(e)? {
            Value::Set(h) => Ok(h),
            other => Err(EvalError::Type(format!("{role} must be a set, got {}", other.kind()))),
        }
    }

    fn apply(&mut self, command: &str, args: Vec<Value>) -> Result<Value, EvalError> {
        let type_error = |expected: &str, got: &[Value]| {
            let kinds: Vec<&str> = got.iter().map(Value::kind).collect();
            EvalError::Type(format!("`{command}` expects {expected}, got {}", kinds.join(" and ")))
        };
        let u = &mut self.universe;
        Ok(match (command, args.as_slice()) {
            ("canon", [v]) => Value::Text(self.render(v, Format::Text)?),
            ("dot", [v]) => Value::Text(self.render(v, Format::Dot)?),
            ("json", [v]) => Value::Text(self.render(v, Format::Json)?),
            ("rank", [Value::Set(h)]) => Value::Nat(u.rank_nat(*h)),
            ("ord?", [Value::Set(h)]) => Value::Bool(u.is_st_ordinal(*h)),
            ("transitive?", [Value::Set(h)]) => Value::Bool(u.is_transitive_set(*h)),
            ("rank" | "ord?" | "transitive?", _) => return Err(type_error("a set", &args)),

            ("in", [Value::Set(a), Value::Set(b)]) => Value::Bool(u.mem(*a, *b)?),
            ("sub", [Value::Set(a), Value::Set(b)]) => Value::Bool(u.subset(*a, *b)?),
            ("eq", [Value::Set(a), Value::Set(b)]) => Value::Bool(a == b),
            ("in", [Value::Ord(a), Value::Ord(b)]) => Value::Bool(bounded_sim(a, b).is_some()),
            ("sub", [Value::Ord(a), Value::Ord(b)]) => Value::Bool(simulation(a, b).is_some()),
            ("eq", [Value::Ord(a), Value::Ord(b)]) => Value::Bool(a.same_ordinal(b)),
            ("in", [Value::Mewo(a, _), Value::Mewo(b, _)]) => Value::Bool(bounded_sim_mewo(a, b).is_some()),
            ("sub", [Value::Mewo(a, _), Value::Mewo(b, _)]) => Value::Bool(simulation_mewo(a, b).is_some()),
            ("eq", [Value::Mewo(a, _), Value::Mewo(b, _)]) => Value::Bool(mewo_equal(a, b)),
            ("in" | "sub" | "eq", _) => return Err(type_error("two sets, two ordinals or two mewos", &args)),

            ("phi", [Value::Ord(alpha)]) => Value::Set(phi_ord(u, alpha)?),
            ("phi" | "tov", [Value::Mewo(x, _)]) => Value::Set(phi_mewo(u, x)?),
            ("phi", [Value::Set(_)]) => {
                return Err(EvalError::Type(
                    "`phi` maps ordinals and mewos to sets, got a set; use `psi` or `tomewo` to go from a set to a structure".into(),
                ))
            }
            ("phi", _) => return Err(type_error("an ordinal or a mewo", &args)),
            ("tov", _) => return Err(type_error("a mewo", &args)),
            ("psi", [Value::Set(h)]) => Value::Ord(psi_ord(u, *h)),
            ("tomewo", [Value::Set(h)]) => Value::Mewo(psi_mewo(u, *h), Vec::new()),
            ("psi" | "tomewo", _) => return Err(type_error("a set", &args)),
            _ => return Err(EvalError::Type(format!("unknown command `{command}`"))),
        })
    }

    fn render(&self, v: &Value, format: Format) -> Result<String, EvalError> {
        let names = |ns: &[String]| if ns.is_empty() { None } else { Some(ns.to_vec()) };
        Ok(match (v, format) {
            (Value::Bool(b), _) => b.to_string(),
            (Value::Nat(n), _) => n.to_string(),
            (Value::Text(t), _) => t.clone(),
            (Value::Set(h), Format::Text) => {
                let d = self.universe.display(*h);
                let len = d.printed_len();
                if len > MAX_PRINTED_LEN {
                    return Err(EvalError::TooLarge(len));
                }
                d.to_string()
            }
            (Value::Set(h), Format::Json) => self.universe.export(*h).to_json(),
            (Value::Set(h), Format::Dot) => set_to_dot(&self.universe, *h),
            (Value::Ord(a), Format::Text) => ord_to_text(a),
            (Value::Ord(a), Format::Json) => ord_to_json(a),
            (Value::Ord(a), Format::Dot) => ord_to_dot(a),
            (Value::Mewo(x, ns), Format::Text) => mewo_to_text(x, names(ns).as_deref()),
            (Value::Mewo(x, ns), Format::Json) => mewo_to_json(x, names(ns).as_deref()),
            (Value::Mewo(x, ns), Format::Dot) => mewo_to_dot(x, names(ns).as_deref()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(lines: &[&str]) -> Vec<Result<Option<String>, String>> {
        let mut s = Session::new(1 << 20, Format::Text);
        lines
            .iter()
            .enumerate()
            .map(|(i, l)| s.exec_line(l, i + 1).map_err(|e| e.to_string()))
            .collect()
    }

    fn out(line: &str) -> String {
        run(&[line]).remove(0).unwrap().unwrap()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(out("rank {{{}}}"), "2");
        assert_eq!(out("ord? {{},{{}}}"), "true");
        assert_eq!(out("ord? {{},{{{}}}}"), "false");
        assert_eq!(out("2 in 3"), "true");
        assert_eq!(out("3 in 2"), "false");
        assert_eq!(out("canon 2"), "{{},{{}}}");
        assert_eq!(out("transitive? {{},{{{}}}}"), "false");
    }

    #[test]
    fn rank_matches_a_recursive_count() {
        // Depth of nested braces, computed on the text alone.
        fn depth(s: &str) -> usize {
            let (mut d, mut best) = (0i32, 0i32);
            for c in s.chars() {
                match c {
                    '{' => d += 1,
                    '}' => d -= 1,
                    _ => {}
                }
                best = best.max(d);
            }
            (best - 1) as usize
        }
        for text in ["{}", "{{}}", "{{},{{{}}}}", "{{{{}}},{}}", "{{{},{{}}}}"] {
            assert_eq!(out(&format!("rank {text}")), depth(text).to_string(), "{text}");
        }
    }

    #[test]
    fn structures_and_transport() {
        assert_eq!(out("psi {{},{{}}}"), "ord { size: 2; lt: 0<1 }");
        assert_eq!(out("phi ord { size: 2; lt: 1<0 }"), "{{},{{}}}");
        assert_eq!(out("tov mewo { elems: a b; lt: a<b; marked: b }"), "{{{}}}");
        assert_eq!(out("tomewo {{{}}}"), "mewo { elems: 0 1; lt: 0<1; marked: 1 }");
        assert_eq!(out("eq (phi (psi 3)) 3"), "true");
        assert_eq!(out("ord { size: 1; lt: } in ord { size: 2; lt: 0<1 }"), "true");
        assert_eq!(
            out("mewo { elems: a; lt:; marked: a } sub mewo { elems: a b; lt: a<b; marked: b }"),
            "false"
        );
    }

    #[test]
    fn bindings_are_immutable_and_typed() {
        let r = run(&["let x = {1, 2}", "x", "let x = 3", "let r = rank x", "y", "phi x", "rank (psi x)"]);
        assert_eq!(r[0], Ok(None));
        assert_eq!(r[1], Ok(Some("{{{}},{{},{{}}}}".into())));
        assert!(r[2].as_ref().unwrap_err().contains("already bound"));
        assert!(r[3].as_ref().unwrap_err().contains("only sets"));
        assert!(r[4].as_ref().unwrap_err().contains("not bound"));
        assert!(r[5].as_ref().unwrap_err().contains("`phi`"));
        assert!(r[6].as_ref().unwrap_err().contains("`rank` expects a set"));
    }

    #[test]
    fn oversized_renderings_are_refused() {
        let r = run(&["30", "rank 30"]);
        assert!(r[0].as_ref().unwrap_err().contains("--format json"));
        assert_eq!(r[1], Ok(Some("30".into())));
    }

    #[test]
    fn loading_structures() {
        let mut s = Session::new(1 << 20, Format::Text);
        s.load("m", "mewo { elems: a b; lt: a<b; marked: b }").unwrap();
        s.load("o", "{\"size\": 2, \"pairs\": [[0, 1]]}").unwrap();
        assert!(s.load("m", "ord { size: 0; lt: }").is_err());
        assert!(s.load("9x", "ord { size: 0; lt: }").is_err());
        assert_eq!(s.exec_line("m", 1).unwrap().unwrap(), "mewo { elems: a b; lt: a<b; marked: b }");
        assert_eq!(s.exec_line("phi o", 2).unwrap().unwrap(), "{{},{{}}}");
    }
}

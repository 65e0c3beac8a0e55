//! Executable law checks. Each check sweeps a family of inputs and records
//! the cases it ran and the failures it saw.
//!
//! Inputs are swept from small to large, so the first recorded failure of a
//! check is also a smallest one.

pub mod correspondence;
pub mod counterexamples;
pub mod mewos;
pub mod ordinals;
pub mod sets;

use serde::{Deserialize, Serialize};

/// Failures kept per check; the count of cases is always exact.
pub const MAX_RECORDED_FAILURES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub name: String,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub cases: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
}

impl Outcome {
    pub fn new(name: &str) -> Outcome {
        Outcome {
            name: name.to_string(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one case. The description closures run only on failure.
    pub fn check<I, E, G>(&mut self, ok: bool, input: I, expected: E, got: G)
    where
        I: FnOnce() -> String,
        E: FnOnce() -> String,
        G: FnOnce() -> String,
    {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(Failure {
                    name: self.name.clone(),
                    input: input(),
                    expected: expected(),
                    got: got(),
                });
            }
        }
    }

    /// A case whose only interesting value is a boolean.
    pub fn expect(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.check(ok, input, || "true".into(), || "false".into());
    }

    /// Appends `other`'s counts and failures.
    pub fn absorb(&mut self, other: Outcome) {
        self.cases += other.cases;
        self.failed += other.failed;
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub(crate) fn merged(name: &str, parts: Vec<Outcome>) -> Outcome {
        let mut out = Outcome::new(name);
        for p in parts {
            out.absorb(p);
        }
        out
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} cases, {} failed", self.name, self.cases, self.failed)?;
        for fl in &self.failures {
            write!(f, "\n  input {} expected {} got {}", fl.input, fl.expected, fl.got)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_counts_and_caps() {
        let mut o = Outcome::new("x");
        for i in 0..25 {
            o.expect(i % 2 == 0, || i.to_string());
        }
        assert_eq!(o.cases, 25);
        assert_eq!(o.failed, 12);
        assert_eq!(o.failures.len(), MAX_RECORDED_FAILURES);
        assert_eq!(o.failures[0].input, "1");
        assert!(!o.passed());
    }
}

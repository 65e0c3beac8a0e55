//! Named groups of law checks with a machine-readable report.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::checks::{correspondence, counterexamples, mewos, ordinals, sets, Failure, Outcome};
use crate::par::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ordinals,
    Sets,
    Mewos,
    Correspondence,
    Counterexamples,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["ordinals", "sets", "mewos", "correspondence", "counterexamples", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ordinals => "ordinals",
            Suite::Sets => "sets",
            Suite::Mewos => "mewos",
            Suite::Correspondence => "correspondence",
            Suite::Counterexamples => "counterexamples",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "ordinals" => Suite::Ordinals,
            "sets" => Suite::Sets,
            "mewos" => Suite::Mewos,
            "correspondence" => Suite::Correspondence,
            "counterexamples" => Suite::Counterexamples,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite `{s}`; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

/// Knobs of a suite run. `max_size` bounds exhaustive structure sweeps and
/// `max_depth` bounds set ranks; each check clamps them to what it can
/// enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_size: usize,
    pub max_depth: usize,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_size: 4,
            max_depth: 4,
            exec: Exec::Parallel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub cases: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// The individual checks of a suite, in order.
pub fn outcomes(suite: Suite, cfg: &SuiteConfig) -> Vec<Outcome> {
    let SuiteConfig { seed, max_size, max_depth, exec } = *cfg;
    let level = max_depth.min(4);
    match suite {
        Suite::Ordinals => vec![
            ordinals::down_iterates(exec, (max_size + 2).min(7)),
            ordinals::sum_segments(exec, max_size.min(4)),
            ordinals::sup_segments(exec, max_size.min(4), 3),
            ordinals::oracle_agreement(exec, max_size.min(5)),
            ordinals::composition(exec, max_size.min(4)),
            ordinals::bounded_relation_is_ordinal(max_size.min(6)),
        ],
        Suite::Sets => vec![
            sets::stage_laws(level),
            sets::mk_set_laws(seed, 200),
            sets::graph_exhaustive(exec, max_size.min(5)),
            sets::graph_random(exec, seed, 1000, 8),
            sets::export_round_trip(seed, 200, max_depth.min(5)),
        ],
        Suite::Mewos => vec![
            mewos::oracle_agreement(exec, max_size.min(4)),
            mewos::order_laws(exec, max_size.min(4)),
            mewos::segment_laws(max_size.min(4)),
            mewos::principality(exec, max_size.min(4), max_size.min(3)),
            mewos::predecessors_separate(exec, max_size.min(4)),
            mewos::union_laws(exec, max_size.min(3)),
        ],
        Suite::Correspondence => vec![
            correspondence::ordinal_round_trips(exec, level, 12, (max_size + 2).min(8)),
            correspondence::ordinal_transport(exec, max_size.min(6)),
            correspondence::rank_quotients(seed, 200, 6, max_depth.min(5)),
            correspondence::mewo_round_trips(exec, level, max_size.min(4), seed, 200, 200, max_depth.min(5)),
            correspondence::mewo_transport(exec, max_size.min(4)),
            correspondence::square_commutes(exec, max_size.min(6)),
        ],
        Suite::Counterexamples => vec![counterexamples::check_fixtures()],
        Suite::All => [
            Suite::Counterexamples,
            Suite::Ordinals,
            Suite::Sets,
            Suite::Mewos,
            Suite::Correspondence,
        ]
        .into_iter()
        .flat_map(|s| outcomes(s, cfg))
        .collect(),
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Report {
    let mut report = Report {
        suite: suite.name().to_string(),
        seed: cfg.seed,
        cases: 0,
        failures: Vec::new(),
    };
    for o in outcomes(suite, cfg) {
        report.cases += o.cases;
        report.failures.extend(o.failures);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn counterexample_suite_passes() {
        let r = run_suite(Suite::Counterexamples, &SuiteConfig::default());
        assert!(r.passed());
        assert_eq!(r.cases, 8);
        assert!(r.to_json().contains("\"suite\": \"counterexamples\""));
    }
}

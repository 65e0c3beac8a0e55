//! The acceptance criteria, one line each. Runs without the libtest harness
//! so the PASS/FAIL lines always reach the terminal; exits nonzero if any
//! criterion fails.

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hfkit_core::checks::{correspondence, counterexamples, mewos, ordinals, sets, Outcome};
use hfkit_core::oracle::{enumerate_v, large_dag};
use hfkit_core::{Exec, SetUniverse};

const SEED: u64 = 0x00c0_ffee;
const EXEC: Exec = Exec::Parallel;

fn ordinal_round_trips() -> Vec<Outcome> {
    let mut u = SetUniverse::new();
    let stage = enumerate_v(&mut u, 4).unwrap();
    let mut shape = Outcome::new("stage four has 16 sets, 4 of them ordinals");
    shape.expect(stage.len() == 16 && stage.iter().filter(|&&h| u.is_st_ordinal(h)).count() == 4, || {
        format!("{} sets", stage.len())
    });
    vec![shape, correspondence::ordinal_round_trips(EXEC, 4, 12, 8)]
}

fn ordinal_transport() -> Vec<Outcome> {
    vec![correspondence::ordinal_transport(EXEC, 6)]
}

fn rank_quotients() -> Vec<Outcome> {
    vec![correspondence::rank_quotients(SEED, 500, 6, 5)]
}

fn mewo_round_trips() -> Vec<Outcome> {
    vec![correspondence::mewo_round_trips(EXEC, 4, 4, SEED, 1000, 500, 5)]
}

fn fixtures() -> Vec<Outcome> {
    vec![counterexamples::check_fixtures()]
}

fn principality() -> Vec<Outcome> {
    vec![mewos::principality(EXEC, 4, 3)]
}

fn oracle_agreement() -> Vec<Outcome> {
    vec![
        ordinals::oracle_agreement(EXEC, 5),
        mewos::oracle_agreement(EXEC, 4),
        sets::graph_exhaustive(EXEC, 5),
        sets::graph_random(EXEC, SEED, 10_000, 8),
    ]
}

fn algebraic_laws() -> Vec<Outcome> {
    vec![
        ordinals::down_iterates(EXEC, 7),
        ordinals::sum_segments(EXEC, 4),
        ordinals::sup_segments(EXEC, 4, 3),
        ordinals::composition(EXEC, 5),
        ordinals::bounded_relation_is_ordinal(6),
        sets::stage_laws(4),
        sets::mk_set_laws(SEED, 1000),
        sets::export_round_trip(SEED, 500, 5),
        mewos::segment_laws(4),
        mewos::order_laws(EXEC, 4),
        mewos::predecessors_separate(EXEC, 4),
        mewos::union_laws(EXEC, 3),
        correspondence::mewo_transport(EXEC, 4),
        correspondence::square_commutes(EXEC, 6),
    ]
}

fn large_graph() -> Vec<Outcome> {
    const VERTICES: usize = 100_000;
    let budget = Duration::from_secs(5);
    let g = large_dag(SEED, VERTICES);
    let start = Instant::now();
    let mut u = SetUniverse::new();
    let root = u.from_graph(&g).unwrap();
    let elapsed = start.elapsed();
    let mut timed = Outcome::new("sets.large_graph.budget");
    timed.check(
        elapsed <= budget && u.owns(root),
        || format!("from_graph on large_dag({SEED}, {VERTICES})"),
        || format!("at most {budget:?}"),
        || format!("{elapsed:?}"),
    );
    let (agreement, _) = sets::large_graph(SEED, VERTICES, 1000);
    vec![timed, agreement]
}

type Criterion = (&'static str, fn() -> Vec<Outcome>);

const CRITERIA: [Criterion; 9] = [
    ("ordinal round trips", ordinal_round_trips),
    ("transport of =, <, <= to =, in, subset", ordinal_transport),
    ("rank quotient agrees with rank and element ordinals", rank_quotients),
    ("mewo round trips", mewo_round_trips),
    ("counterexample fixtures", fixtures),
    ("covered iff principal on samples", principality),
    ("agreement with brute-force oracles", oracle_agreement),
    ("algebraic laws", algebraic_laws),
    ("large graph collapse within budget", large_graph),
];

fn main() -> ExitCode {
    let mut all_passed = true;
    for (i, (title, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let (passed, detail) = match panic::catch_unwind(run) {
            Ok(outcomes) => {
                let cases: u64 = outcomes.iter().map(|o| o.cases).sum();
                let failed: u64 = outcomes.iter().map(|o| o.failed).sum();
                for o in outcomes.iter().filter(|o| !o.passed()) {
                    eprintln!("{o}");
                }
                (failed == 0, format!("{cases} cases, {failed} failed"))
            }
            Err(_) => (false, "panicked".to_string()),
        };
        all_passed &= passed;
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {title} ({detail}, {:.1?})", i + 1, start.elapsed());
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

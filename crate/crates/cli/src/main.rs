mod session;
mod syntax;

use std::fs;
use std::io::{self, BufReader, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hfkit_core::hfset::DEFAULT_NODE_LIMIT;
use hfkit_core::suite::{run_suite, Suite, SuiteConfig};
use hfkit_core::Exec;

use session::{Format, Session};

/// Hereditarily finite sets, finite ordinals and marked orders.
#[derive(Parser, Debug)]
#[command(name = "hfkit", version)]
struct Cli {
    /// Output format for evaluated values.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Bind an ordinal or mewo read from a file, e.g. `--load m=shape.mewo`.
    #[arg(long, value_name = "NAME=PATH", global = true)]
    load: Vec<String>,
    /// Cap on distinct sets held by the session.
    #[arg(long, env = "HFKIT_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT, global = true)]
    node_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a file of statements, one per line (`-` reads standard input).
    Run { file: PathBuf },
    /// Read statements interactively.
    Repl,
    /// Run the given statements in order.
    Eval {
        #[arg(required = true)]
        statements: Vec<String>,
    },
    /// Run a property suite and print a JSON report.
    Check {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 4)]
        max_depth: usize,
        /// Run the sweeps on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

/// `Err` is a usage error; `Ok(false)` means some statement or check failed.
fn run(cli: Cli) -> Result<bool, String> {
    if let Command::Check { suite, seed, max_size, max_depth, sequential } = cli.command {
        let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
        let report = run_suite(suite, &SuiteConfig { seed, max_size, max_depth, exec });
        // A closed pipe (e.g. `| head`) is not worth a panic; the exit code
        // still reports the outcome.
        let _ = writeln!(io::stdout(), "{}", report.to_json());
        eprintln!(
            "{}: {} cases, {} failures",
            report.suite,
            report.cases,
            report.failures.len()
        );
        return Ok(report.passed());
    }

    let mut session = Session::new(cli.node_limit, cli.format);
    for binding in &cli.load {
        let (name, path) = binding
            .split_once('=')
            .ok_or_else(|| format!("--load expects NAME=PATH, got `{binding}`"))?;
        let contents = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        session.load(name, &contents).map_err(|e| e.to_string())?;
    }

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let io_error = |e: io::Error| e.to_string();
    match cli.command {
        Command::Run { file } => {
            if file.as_os_str() == "-" {
                session.run(io::stdin().lock(), &mut out, &mut err, None).map_err(io_error)
            } else {
                let f = fs::File::open(&file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
                session.run(BufReader::new(f), &mut out, &mut err, None).map_err(io_error)
            }
        }
        Command::Repl => {
            let stdin = io::stdin();
            let prompt = stdin.is_terminal().then_some("hfkit> ");
            session.run(stdin.lock(), &mut out, &mut err, prompt).map_err(io_error)
        }
        Command::Eval { statements } => {
            let text = statements.join("\n");
            let ok = session.run(text.as_bytes(), &mut out, &mut err, None).map_err(io_error)?;
            out.flush().map_err(io_error)?;
            Ok(ok)
        }
        Command::Check { .. } => unreachable!("handled above"),
    }
}

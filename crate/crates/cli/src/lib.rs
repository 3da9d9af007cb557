// SPDX-License-Identifier: Apache-2.0

//! The `sdeg` command line.
//!
//! Results go to stdout, one record per line; warnings and diagnostics go to
//! stderr. Exit status is 0 on success or a true answer, 1 on a false answer
//! or a mismatch, 2 on usage, input, or budget errors.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use signed_degree::certify::{self, Level};
use signed_degree::io::{from_json, to_dot, to_json};
use signed_degree::oracle::{self, EnumerationBudget};
use signed_degree::{
    is_graphical_chartrand, is_graphical_yan, realize_sequence, realize_set, DegreeSet, SignedDegreeSequence,
    SignedGraph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `--max-order` accepted without `--allow-large-order`.
pub const UNACKNOWLEDGED_MAX_ORDER: usize = 7;

/// Comma-separated integers, e.g. `1,-2,3`. The empty string is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(IntList(Vec::new()));
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("not an integer: {:?}", part.trim()))
            })
            .collect::<Result<_, _>>()
            .map(IntList)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sdeg",
    version,
    about = "Signed degree sets and sequences of signed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a connected signed graph whose signed degree set is exactly --set.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        set: IntList,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide whether --sequence is the signed degree sequence of a signed graph.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        sequence: IntList,
        #[arg(long, value_enum, default_value_t = Method::Chartrand)]
        method: Method,
        /// Also print a realizing graph as JSON.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Smallest order of a signed graph with signed degree set --set, by exhaustive search.
    MinOrder {
        #[arg(long, allow_hyphen_values = true)]
        set: IntList,
        #[arg(long, action = ArgAction::Set, default_value_t = true)]
        connected: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Recompute the signed degree set of a JSON graph file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        expect_set: Option<IntList>,
    },
    /// Run the built-in cross-checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = SelftestLevel::Quick)]
        level: SelftestLevel,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Chartrand,
    Yan,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SelftestLevel {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Largest order the exhaustive search may enumerate.
    #[arg(long, default_value_t = oracle::DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Required for --max-order above 7.
    #[arg(long)]
    pub allow_large_order: bool,
}

impl BudgetArgs {
    fn budget(&self) -> Result<EnumerationBudget, Failure> {
        if self.max_order > UNACKNOWLEDGED_MAX_ORDER && !self.allow_large_order {
            return Err(Failure(format!(
                "--max-order {} needs --allow-large-order (3^{} graphs at that order)",
                self.max_order,
                self.max_order * (self.max_order - 1) / 2
            )));
        }
        Ok(EnumerationBudget::with_max_order(self.max_order))
    }
}

/// A usage, input, or budget error; exits with status 2.
#[derive(Debug)]
struct Failure(String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<signed_degree::Error> for Failure {
    fn from(e: signed_degree::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            EXIT_USAGE
        }
    }
}

fn summary(g: &SignedGraph) -> String {
    match g.signed_degree_set() {
        Ok(set) => format!("order={} degree_set={set}", g.order()),
        Err(_) => format!("order={} degree_set={{}}", g.order()),
    }
}

fn degree_set(list: &IntList, flag: &str, err: &mut dyn Write) -> Result<DegreeSet, Failure> {
    let set =
        DegreeSet::from_multiset(list.0.iter().copied()).map_err(|e| Failure(format!("{flag}: {e}")))?;
    if set.len() != list.0.len() {
        writeln!(err, "warning: duplicate values in {flag} removed; using {set}")?;
    }
    Ok(set)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Realize {
            set,
            out: path,
            format,
        } => {
            let set = degree_set(&set, "--set", err)?;
            let graph = realize_set(&set)?.graph;
            let rendered = match format {
                Format::Json => to_json(&graph) + "\n",
                Format::Dot => to_dot(&graph),
            };
            match path {
                Some(path) => std::fs::write(&path, rendered)?,
                None => out.write_all(rendered.as_bytes())?,
            }
            writeln!(out, "{}", summary(&graph))?;
            Ok(EXIT_OK)
        }
        Command::Check {
            sequence,
            method,
            witness,
            budget,
        } => {
            let seq = SignedDegreeSequence::new(sequence.0);
            let (graphical, found) = match method {
                Method::Chartrand => (is_graphical_chartrand(&seq), None),
                Method::Yan => (is_graphical_yan(&seq), None),
                Method::Oracle => {
                    let witness = oracle::sequence_witness(&seq, &budget.budget()?)?;
                    (witness.is_some(), witness.map(|w| w.graph))
                }
            };
            if !graphical {
                writeln!(out, "not graphical")?;
                return Ok(EXIT_FALSE);
            }
            writeln!(out, "graphical")?;
            if witness {
                // the reduction deciders share the witness built from the (r, s) search
                if let Some(g) = found.or_else(|| realize_sequence(&seq)) {
                    writeln!(out, "{}", to_json(&g))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::MinOrder {
            set,
            connected,
            budget,
        } => {
            let set = degree_set(&set, "--set", err)?;
            let budget = budget.budget()?;
            let order = oracle::oracle_min_order(&set, connected, &budget)?;
            writeln!(out, "{order}")?;
            Ok(EXIT_OK)
        }
        Command::Verify { graph, expect_set } => {
            let text =
                std::fs::read_to_string(&graph).map_err(|e| Failure(format!("{}: {e}", graph.display())))?;
            let g = from_json(&text)?;
            let actual = g.signed_degree_set()?;
            writeln!(out, "{} connected={}", summary(&g), g.is_connected()?)?;
            match expect_set {
                None => Ok(EXIT_OK),
                Some(list) => {
                    let expected = degree_set(&list, "--expect-set", err)?;
                    if expected == actual {
                        writeln!(out, "match")?;
                        Ok(EXIT_OK)
                    } else {
                        writeln!(out, "mismatch expected={expected}")?;
                        Ok(EXIT_FALSE)
                    }
                }
            }
        }
        Command::Selftest { level } => {
            let level = match level {
                SelftestLevel::Quick => Level::Quick,
                SelftestLevel::Full => Level::Full,
            };
            let outcomes = certify::run(level);
            for outcome in &outcomes {
                writeln!(out, "{outcome}")?;
            }
            Ok(if outcomes.iter().all(|o| o.ok()) {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
    }
}

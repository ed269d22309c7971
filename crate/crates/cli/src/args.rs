use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perfcode::bitstrings::CubeFamily;
use perfcode::engine::{Budget, SearchMode};
use perfcode::hamming::RunBound;
use perfcode::verify::ClaimId;

/// Perfect codes in hypercubes, Fibonacci, Lucas and generalized Lucas cubes.
#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "perfcode", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// List the words of a family, one per line in ascending order.
    Enumerate(EnumerateArgs),
    /// Search a graph for a perfect code. Exit 0 found, 3 none exists, 4 budget hit.
    Search(SearchArgs),
    /// Run verification claims and report pass/fail.
    #[command(after_long_help = claim_listing())]
    Verify(VerifyArgs),
    /// Write a graph as DOT or JSON, optionally highlighting a code.
    Export(ExportArgs),
    /// Build the run-bounded Hamming-derived perfect code for a given p.
    Construct(ConstructArgs),
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct GraphArgs {
    /// qn | fib | lucas | fib1s:<s> | lucas1s:<s>
    #[arg(long)]
    pub family: CubeFamily,
    /// Word length.
    #[arg(long)]
    pub n: u32,
}

#[derive(Args, Debug, Clone, PartialEq, Default)]
pub struct BudgetArgs {
    /// Stop after this many search nodes.
    #[arg(long, env = "PERFCODE_MAX_NODES")]
    pub max_nodes: Option<u64>,
    /// Stop after this many seconds of search.
    #[arg(long, env = "PERFCODE_MAX_SECONDS")]
    pub max_seconds: Option<f64>,
    /// Worker threads for the search.
    #[arg(long, default_value_t = 1, env = "PERFCODE_THREADS")]
    pub threads: usize,
}

impl BudgetArgs {
    pub fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.max_nodes,
            max_time: self.max_seconds.map(Duration::from_secs_f64),
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Print only the number of words.
    #[arg(long)]
    pub count: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    First,
    ProveNone,
    Enumerate,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::First => SearchMode::First,
            ModeArg::ProveNone => SearchMode::ProveNone,
            ModeArg::Enumerate => SearchMode::Enumerate,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct SearchArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::First)]
    pub mode: ModeArg,
    /// Forbid codewords containing a circular run of this many ones.
    #[arg(long, value_name = "S")]
    pub avoid_circular_run: Option<u32>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// 0 keeps the natural order; other values shuffle branching.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimSelection {
    All,
    One(ClaimId),
}

impl ClaimSelection {
    pub fn claims(self) -> Vec<ClaimId> {
        match self {
            ClaimSelection::All => ClaimId::ALL.to_vec(),
            ClaimSelection::One(c) => vec![c],
        }
    }
}

impl std::fmt::Display for ClaimSelection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClaimSelection::All => f.write_str("all"),
            ClaimSelection::One(c) => write!(f, "{c}"),
        }
    }
}

fn parse_claim(s: &str) -> Result<ClaimSelection, String> {
    if s == "all" {
        return Ok(ClaimSelection::All);
    }
    s.parse().map(ClaimSelection::One).map_err(|_| {
        let ids: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
        format!("unknown claim '{s}'; valid ids: all, {}", ids.join(", "))
    })
}

/// Help section naming every claim id with its one-line summary.
pub fn claim_listing() -> String {
    let mut out = String::from("Claims:\n  all             every claim below\n");
    for c in ClaimId::ALL {
        out.push_str(&format!("  {:<15} {}\n", c.as_str(), c.summary()));
    }
    out
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct VerifyArgs {
    /// Claim id, or `all`.
    #[arg(long, value_parser = parse_claim)]
    pub claim: ClaimSelection,
    /// Upper bound on n for sweeping claims.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Hamming parameters for the construction claims (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<u32>,
    /// Lengths for the hypercube avoidance claim (3 and/or 7).
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<u32>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct ExportArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    pub format: GraphFormat,
    /// File of codewords to highlight: search output JSON, export JSON,
    /// a JSON array of words, or one word per line.
    #[arg(long, value_name = "FILE")]
    pub highlight_code: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundArg {
    #[value(name = "n")]
    Full,
    #[value(name = "n-1")]
    MinusOne,
    #[value(name = "n-2")]
    MinusTwo,
}

impl From<BoundArg> for RunBound {
    fn from(b: BoundArg) -> Self {
        match b {
            BoundArg::Full => RunBound::Full,
            BoundArg::MinusOne => RunBound::MinusOne,
            BoundArg::MinusTwo => RunBound::MinusTwo,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct ConstructArgs {
    /// Hamming parameter; the length is 2^p - 1.
    #[arg(long)]
    pub p: u32,
    /// Longest circular run of ones banned from the cube, relative to n.
    #[arg(long, value_enum, default_value_t = BoundArg::Full)]
    pub run: BoundArg,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .expect("no skipped values")
        .get_name()
        .to_string()
}

fn push(args: &mut Vec<String>, flag: &str, value: impl ToString) {
    args.push(format!("--{flag}"));
    args.push(value.to_string());
}

fn push_opt(args: &mut Vec<String>, flag: &str, value: Option<impl ToString>) {
    if let Some(v) = value {
        push(args, flag, v);
    }
}

fn push_list(args: &mut Vec<String>, flag: &str, values: &[u32]) {
    if !values.is_empty() {
        let joined: Vec<String> = values.iter().map(u32::to_string).collect();
        push(args, flag, joined.join(","));
    }
}

impl GraphArgs {
    fn canonical(&self, args: &mut Vec<String>) {
        push(args, "family", self.family);
        push(args, "n", self.n);
    }
}

impl BudgetArgs {
    fn canonical(&self, args: &mut Vec<String>) {
        push_opt(args, "max-nodes", self.max_nodes);
        push_opt(args, "max-seconds", self.max_seconds);
        push(args, "threads", self.threads);
    }
}

impl Cli {
    /// The equivalent command line with every setting spelled out, including
    /// budgets that came from the environment.
    pub fn canonical_args(&self) -> Vec<String> {
        let mut a = vec!["perfcode".to_string()];
        match &self.command {
            Command::Enumerate(e) => {
                a.push("enumerate".into());
                e.graph.canonical(&mut a);
                if e.count {
                    a.push("--count".into());
                }
            }
            Command::Search(s) => {
                a.push("search".into());
                s.graph.canonical(&mut a);
                push(&mut a, "mode", value_name(&s.mode));
                push_opt(&mut a, "avoid-circular-run", s.avoid_circular_run);
                s.budget.canonical(&mut a);
                push(&mut a, "seed", s.seed);
            }
            Command::Verify(v) => {
                a.push("verify".into());
                push(&mut a, "claim", v.claim);
                push_opt(&mut a, "n-max", v.n_max);
                push_list(&mut a, "p", &v.p);
                push_list(&mut a, "n", &v.n);
                v.budget.canonical(&mut a);
                push(&mut a, "format", value_name(&v.format));
                push_opt(&mut a, "output", v.output.as_ref().map(|p| p.display()));
            }
            Command::Export(x) => {
                a.push("export".into());
                x.graph.canonical(&mut a);
                push(&mut a, "format", value_name(&x.format));
                push_opt(
                    &mut a,
                    "highlight-code",
                    x.highlight_code.as_ref().map(|p| p.display()),
                );
                push_opt(&mut a, "output", x.output.as_ref().map(|p| p.display()));
            }
            Command::Construct(c) => {
                a.push("construct".into());
                push(&mut a, "p", c.p);
                push(&mut a, "run", value_name(&c.run));
                push(&mut a, "format", value_name(&c.format));
                push_opt(&mut a, "output", c.output.as_ref().map(|p| p.display()));
            }
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn parse(line: &str) -> Cli {
        Cli::try_parse_from(line.split_whitespace()).unwrap()
    }

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn canonical_args_round_trip() {
        let lines = [
            "perfcode enumerate --family lucas --n 4",
            "perfcode enumerate --family lucas1s:7 --n 7 --count",
            "perfcode search --family qn --n 7 --avoid-circular-run 7",
            "perfcode search --family fib1s:3 --n 9 --mode enumerate --max-nodes 100 --max-seconds 1.5 --seed 9 --threads 4",
            "perfcode verify --claim all",
            "perfcode verify --claim prop-1n --p 2,3 --format json --output r.json",
            "perfcode verify --claim prop-qn-avoid --n 3 --max-nodes 10",
            "perfcode export --family lucas --n 4 --format json --highlight-code c.txt",
            "perfcode construct --p 3 --run n-2 --format text",
        ];
        for line in lines {
            let cli = parse(line);
            let canonical = cli.canonical_args();
            let again = Cli::try_parse_from(&canonical).unwrap();
            assert_eq!(again, cli, "{line}");
            assert_eq!(again.canonical_args(), canonical);
        }
    }

    #[test]
    fn help_lists_every_claim_id() {
        let mut cmd = Cli::command();
        let verify = cmd.find_subcommand_mut("verify").unwrap();
        let help = verify.render_long_help().to_string();
        for c in ClaimId::ALL {
            assert!(help.contains(c.as_str()), "{c} missing from help");
        }
    }

    #[test]
    fn unknown_claim_lists_valid_ids() {
        let err = Cli::try_parse_from(["perfcode", "verify", "--claim", "nope"]).unwrap_err();
        let text = err.to_string();
        for c in ClaimId::ALL {
            assert!(text.contains(c.as_str()));
        }
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn bad_family_is_a_usage_error() {
        let err =
            Cli::try_parse_from(["perfcode", "enumerate", "--family", "lucas1s:x", "--n", "3"])
                .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 file or input error, 2 usage error, 3 a solver
//! ran out of budget (the partial report is still written), 4 a verification
//! check failed.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coloring::{classify, Coloring};
use crate::error::{Error, Result};
use crate::expr::parse_expression;
use crate::graph::{dimacs, generate, Family, FamilySpec, Graph};
use crate::solvers::{parameter_report, Parameter, SearchLimits};
use crate::theorems::verify_all;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;
pub const EXIT_FAILED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "fallcolor", version, about = "Fall colorings and related coloring parameters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated graph as DIMACS.
    Gen(GenArgs),
    /// Solve coloring parameters of a DIMACS graph.
    Solve(SolveArgs),
    /// Classify a coloring of a DIMACS graph.
    Check(CheckArgs),
    /// Run the full verification suite and the gap family check.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    Kbip,
    KbipMm,
    Ttree,
    PendantPath,
    Caterpillar,
}

impl From<FamilyName> for Family {
    fn from(f: FamilyName) -> Self {
        match f {
            FamilyName::Path => Family::Path,
            FamilyName::Cycle => Family::Cycle,
            FamilyName::Complete => Family::Complete,
            FamilyName::Kbip => Family::CompleteBipartite,
            FamilyName::KbipMm => Family::BipartiteMinusMatching,
            FamilyName::Ttree => Family::TTree,
            FamilyName::PendantPath => Family::PendantPath,
            FamilyName::Caterpillar => Family::CaterpillarG6,
        }
    }
}

#[derive(Args, Debug)]
pub struct Limits {
    /// Search nodes per solver call (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    pub node_budget: u64,
    /// Wall-clock seconds per solver call (0 = unlimited).
    #[arg(long, default_value_t = 0.0)]
    pub time_budget: f64,
}

impl Limits {
    fn to_limits(&self) -> SearchLimits {
        SearchLimits {
            node_budget: self.node_budget,
            time_budget: self.time_budget,
        }
    }
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["family", "expr"]))]
pub struct GenArgs {
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<FamilyName>,
    /// First family parameter (size, k or ε).
    #[arg(long)]
    pub n: Option<usize>,
    /// Second parameter, for `kbip`.
    #[arg(long)]
    pub m: Option<usize>,
    /// Graph expression, e.g. `join(cycle(4),prod(path(2),complete(3)))`.
    #[arg(long)]
    pub expr: Option<String>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    pub graph: PathBuf,
    /// Comma-separated parameters; all when omitted.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<Parameter>,
    /// Report file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory for one coloring JSON per witnessed parameter.
    #[arg(long)]
    pub witness_dir: Option<PathBuf>,
    #[command(flatten)]
    pub limits: Limits,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub graph: PathBuf,
    pub coloring: PathBuf,
    /// Print the classification as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    pub epsilon: usize,
    /// Report file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub limits: Limits,
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
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
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Syntax { .. } | Error::InvalidFamily(_) | Error::EpsilonTooSmall(_) => {
                    EXIT_USAGE
                }
                Error::Exhausted(_) => EXIT_TIMEOUT,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen(a) => gen(a, out),
        Command::Solve(a) => solve(a, out),
        Command::Check(a) => check(a, out),
        Command::VerifyPaper(a) => verify(a, out),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    dimacs::read(BufReader::new(File::open(path)?))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let g = match (&a.expr, a.family) {
        (Some(e), _) => parse_expression(e)?,
        (None, Some(f)) => {
            let mut params = vec![a.n.unwrap_or_default()];
            params.extend(a.m);
            generate(&FamilySpec::new(f.into(), params))?
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    emit(a.out.as_deref(), &dimacs::to_string(&g), out)?;
    Ok(EXIT_OK)
}

fn solve(a: SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.graph)?;
    if let Some(dir) = &a.witness_dir {
        std::fs::create_dir_all(dir)?;
    }
    let select: BTreeSet<Parameter> = if a.params.is_empty() {
        Parameter::ALL.into_iter().collect()
    } else {
        a.params.iter().copied().collect()
    };
    let report = parameter_report(&g, &a.limits.to_limits(), &select)?;
    let mut text = serde_json::to_string_pretty(&report.to_json())?;
    text.push('\n');
    emit(a.out.as_deref(), &text, out)?;
    if let Some(dir) = &a.witness_dir {
        for (p, c) in &report.witnesses {
            let path = dir.join(format!("{}.json", p.name()));
            std::fs::write(path, serde_json::to_string(c)? + "\n")?;
        }
    }
    Ok(if report.any_timeout() { EXIT_TIMEOUT } else { EXIT_OK })
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.graph)?;
    let c: Coloring = serde_json::from_reader(BufReader::new(File::open(&a.coloring)?))?;
    let cls = classify(&g, &c)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&cls)?)?;
    } else {
        writeln!(
            out,
            "k={} proper={} fall={} b_coloring={} grundy={} partial_grundy={} complete={}",
            cls.k, cls.proper, cls.fall, cls.b_coloring, cls.grundy, cls.partial_grundy, cls.complete
        )?;
        writeln!(out, "colorful={:?} grundy_vertices={:?}", cls.colorful_set, cls.grundy_set)?;
    }
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let report = verify_all(a.epsilon, &a.limits.to_limits())?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    emit(a.out.as_deref(), &text, out)?;
    Ok(if report.failed() {
        EXIT_FAILED
    } else if report.timed_out() {
        EXIT_TIMEOUT
    } else {
        EXIT_OK
    })
}

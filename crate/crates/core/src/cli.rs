//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 expression parse error,
//! 3 catalog error (unsupported or oversized manifold), 4 internal
//! arithmetic failure.

use std::ffi::OsString;
use std::fmt;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::CatalogError;
use crate::engine::{analyze, Family};
use crate::parser::{parse_manifold, ExprError};
use crate::report::{self, TableRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CATALOG: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

const EXPRESSION_HELP: &str = "\
Manifold expressions:
  Expr := Term (('x' | '*') Term)*
  Term := Atom ('^' UInt)?
  Atom := 'CP' UInt | 'RP' UInt | 'S' UInt | 'T' UInt | '(' Expr ')'

  Case-insensitive, whitespace ignored. Supported blocks: CPn (n >= 1), RP2,
  Sn (n >= 1, S1 is the circle), Tn (n-torus). Examples: \"CP2^2 x RP2\",
  \"(CP2)^3 * S2\", \"cp2 x rp2 x s1\".

Exit codes: 0 success, 1 usage error, 2 parse error, 3 catalog error,
4 internal arithmetic failure.";

#[derive(Debug, Parser)]
#[command(
    name = "chern-bounds",
    version,
    about = "Chern class bounds for totally real immersions and independent mappings into C^N",
    after_help = EXPRESSION_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute both obstruction bounds and the best existence bounds.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        expression: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print c(C (x) TM) and its inverse.
    Chern {
        #[arg(allow_hyphen_values = true)]
        expression: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate one of the example families over a range of k.
    Table {
        #[arg(value_enum, ignore_case = true)]
        family: FamilyArg,
        /// Inclusive range `A..B` (or a single `A`), A >= 1.
        #[arg(long = "k", value_parser = parse_k_range)]
        k: KRange,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "M4k")]
    M4k,
    #[value(name = "M4k1")]
    M4k1,
    #[value(name = "M4k2")]
    M4k2,
    #[value(name = "M4k3")]
    M4k3,
    #[value(name = "OrientS2")]
    OrientS2,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Self {
        match arg {
            FamilyArg::M4k => Family::M4k,
            FamilyArg::M4k1 => Family::M4k1,
            FamilyArg::M4k2 => Family::M4k2,
            FamilyArg::M4k3 => Family::M4k3,
            FamilyArg::OrientS2 => Family::OrientS2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KRange(pub RangeInclusive<u32>);

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

pub fn parse_k_range(s: &str) -> Result<KRange, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim()),
        None => (s.trim(), s.trim()),
    };
    let parse = |t: &str| t.parse::<u32>().map_err(|e| format!("invalid bound `{t}`: {e}"));
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo < 1 {
        return Err("lower bound must be at least 1".into());
    }
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(KRange(lo..=hi))
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn expr_failure(source: &str, err: ExprError) -> Outcome {
    match err {
        ExprError::Parse(e) => {
            let caret = " ".repeat(e.offset);
            Outcome::fail(EXIT_PARSE, format!("error: {e}\n  {source}\n  {caret}^\n"))
        }
        ExprError::Catalog(e) => Outcome::fail(EXIT_CATALOG, format!("error: {e}\n")),
    }
}

pub fn run_analyze(expression: &str, format: Format) -> Outcome {
    let manifold = match parse_manifold(expression) {
        Ok(m) => m,
        Err(e) => return expr_failure(expression, e),
    };
    match analyze(&manifold) {
        Ok(r) => Outcome::ok(match format {
            Format::Text => report::analyze_text(&r),
            Format::Json => report::to_json_string(&report::analyze_json(&r)),
        }),
        Err(e) => Outcome::fail(EXIT_INTERNAL, format!("error: {e}\n")),
    }
}

pub fn run_chern(expression: &str, format: Format) -> Outcome {
    let manifold = match parse_manifold(expression) {
        Ok(m) => m,
        Err(e) => return expr_failure(expression, e),
    };
    let chern = manifold.chern_class();
    let inverse = match chern.invert() {
        Ok(q) => q,
        Err(e) => return Outcome::fail(EXIT_INTERNAL, format!("error: {e}\n")),
    };
    Outcome::ok(match format {
        Format::Text => report::chern_text(&manifold, chern, &inverse),
        Format::Json => report::to_json_string(&report::chern_json(&manifold, chern, &inverse)),
    })
}

/// Rows for `family` over `ks`, computed on scoped threads and returned in
/// order of `k`.
pub fn table_rows(family: Family, ks: RangeInclusive<u32>) -> Result<Vec<TableRow>, String> {
    let manifolds = ks
        .clone()
        .map(|k| {
            family.manifold(k).map_err(|e| match e {
                CatalogError::TooLarge(why) => format!("k = {k} is too large for {}: {why}", family.name()),
                other => other.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    std::thread::scope(|scope| {
        let handles: Vec<_> = ks
            .zip(&manifolds)
            .map(|(k, m)| scope.spawn(move || analyze(m).map(|r| TableRow::from_report(k, &r))))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .expect("analysis thread panicked")
                    .map_err(|e| e.to_string())
            })
            .collect()
    })
}

pub fn run_table(family: Family, k: &KRange, format: Format) -> Outcome {
    match table_rows(family, k.0.clone()) {
        Ok(rows) => Outcome::ok(match format {
            Format::Text => report::table_text(&rows),
            Format::Json => report::to_json_string(&rows),
        }),
        Err(why) => Outcome::fail(EXIT_USAGE, format!("error: {why}\n")),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match cli.command {
        Command::Analyze { expression, format } => run_analyze(&expression, format),
        Command::Chern { expression, format } => run_chern(&expression, format),
        Command::Table { family, k, format } => run_table(family.into(), &k, format),
    }
}

//! Library half of the `eulerian` binary: argument types, the four commands,
//! and their rendering. `main.rs` only parses, dispatches and writes.

pub mod render;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use eulerian_core::insertion::{insertion_records, Position, Side};
use eulerian_core::numbers::{eulerian_triangle, general_eulerian, ExpansionCache};
use eulerian_core::oracle::BarArrangement;
use eulerian_core::permutation::DEFAULT_ENUMERATION_CAP;
use eulerian_core::{EnumerationCap, Permutation};

pub use render::Report;
pub use verify::Suite;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "eulerian",
    version,
    about = "Eulerian number tables, permutation statistics and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    pub format: OutputFormat,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest n any exhaustive enumeration may walk.
    #[arg(long = "max-enum", default_value_t = DEFAULT_ENUMERATION_CAP, global = true)]
    pub max_enum: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Eulerian,
    General,
    Cnk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::A => Side::A,
            SideArg::B => Side::B,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit A(n,k), A(n,k;a,d) or c(n,k;j) values.
    Table(TableArgs),
    /// Run identity and bijection sweeps; exits 1 if any cell fails.
    Verify(VerifyArgs),
    /// Statistics of one permutation word, or the extraneous bars of an
    /// arrangement such as `32|1||7654|`.
    Stats(StatsArgs),
    /// List every insertion record that builds AW(n,k) or BW(n,k).
    Bijection(BijectionArgs),
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = TableKind::Eulerian)]
    pub kind: TableKind,
    #[arg(long, conflicts_with = "max_n")]
    pub n: Option<usize>,
    /// Emit every n from 1 up to this value.
    #[arg(long = "max-n")]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<BigInt>,
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<BigInt>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Check this single n only.
    #[arg(long, conflicts_with = "max_n")]
    pub n: Option<usize>,
    /// Sweep n from 1 to this value. Defaults to 7 for suites that enumerate
    /// permutations and 20 for formula-only suites.
    #[arg(long = "max-n")]
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    pub word: String,
}

#[derive(Debug, Clone, Args)]
pub struct BijectionArgs {
    #[arg(long, value_enum)]
    pub side: SideArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Cap(_) => EXIT_CAP,
        }
    }
}

impl From<eulerian_core::Error> for CliError {
    fn from(e: eulerian_core::Error) -> Self {
        match e {
            eulerian_core::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Rendered text plus the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cap = EnumerationCap(cli.common.max_enum);
    let (report, code) = match &cli.command {
        Command::Table(args) => (cmd_table(args)?, EXIT_OK),
        Command::Verify(args) => cmd_verify(args, cap)?,
        Command::Stats(args) => (cmd_stats(&args.word)?, EXIT_OK),
        Command::Bijection(args) => (cmd_bijection(args, cap)?, EXIT_OK),
    };
    Ok(Outcome {
        text: report.render(cli.common.format),
        code,
    })
}

fn n_range(n: Option<usize>, max_n: Option<usize>) -> Result<Vec<usize>, CliError> {
    match (n, max_n) {
        (Some(0), _) | (_, Some(0)) => Err(CliError::Usage("n must be at least 1".into())),
        (Some(n), None) => Ok(vec![n]),
        (None, Some(m)) => Ok((1..=m).collect()),
        _ => Err(CliError::Usage("give exactly one of --n or --max-n".into())),
    }
}

fn index_range(
    fixed: Option<usize>,
    lo: usize,
    hi: usize,
    name: &str,
) -> Result<Vec<usize>, CliError> {
    match fixed {
        Some(v) if v < lo || v > hi => Err(CliError::Usage(format!(
            "--{name} {v} is outside {lo}..={hi}"
        ))),
        Some(v) => Ok(vec![v]),
        None => Ok((lo..=hi).collect()),
    }
}

pub fn cmd_table(args: &TableArgs) -> Result<Report, CliError> {
    let ns = n_range(args.n, args.max_n)?;
    let top = *ns.last().expect("range is nonempty");
    match args.kind {
        TableKind::Eulerian => {
            let triangle = eulerian_triangle(top);
            let mut report = Report::new(&["n", "k", "value"]);
            report.param("kind", "eulerian");
            for &n in &ns {
                for k in index_range(args.k, 1, n, "k")? {
                    report.push_row(vec![
                        n.to_string(),
                        k.to_string(),
                        triangle[n][k].to_string(),
                    ]);
                }
            }
            report.plain = report.grouped_plain(1);
            Ok(report)
        }
        TableKind::General => {
            let (Some(a), Some(d)) = (&args.a, &args.d) else {
                return Err(CliError::Usage("--kind general needs --a and --d".into()));
            };
            let mut report = Report::new(&["n", "a", "d", "k", "value"]);
            report.param("kind", "general").param("a", a).param("d", d);
            for &n in &ns {
                for k in index_range(args.k, 0, n, "k")? {
                    let v = general_eulerian(n, k, a, d);
                    report.push_row(vec![
                        n.to_string(),
                        a.to_string(),
                        d.to_string(),
                        k.to_string(),
                        v.to_string(),
                    ]);
                }
            }
            report.plain = report.grouped_plain(3);
            Ok(report)
        }
        TableKind::Cnk => {
            let cache = ExpansionCache::new();
            let mut report = Report::new(&["n", "k", "j", "value"]);
            report.param("kind", "cnk");
            for &n in &ns {
                for k in index_range(args.k, 0, n, "k")? {
                    let row = cache.row(n, k);
                    for j in index_range(args.j, 0, n, "j")? {
                        report.push_row(vec![
                            n.to_string(),
                            k.to_string(),
                            j.to_string(),
                            row.coeffs[j].to_string(),
                        ]);
                    }
                }
            }
            report.plain = report.grouped_plain(2);
            Ok(report)
        }
    }
}

/// Runs the selected suites and returns the report with exit code 0 or 1.
pub fn cmd_verify(args: &VerifyArgs, cap: EnumerationCap) -> Result<(Report, u8), CliError> {
    if args.n == Some(0) || args.max_n == Some(0) {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let mut plan = Vec::new();
    for suite in args.suite.expand() {
        let (lo, hi) = match (args.n, args.max_n) {
            (Some(n), _) => (n, n),
            (None, Some(m)) => (1, m),
            (None, None) => (1, suite.default_max_n()),
        };
        if suite.enumerates() && hi > cap.0 {
            return Err(CliError::Cap(format!(
                "suite {} needs n = {hi}, above the enumeration cap {}",
                suite.name(),
                cap.0
            )));
        }
        plan.push((suite, lo, hi));
    }
    let mut cells = Vec::new();
    for (suite, lo, hi) in plan {
        cells.extend(verify::run_suite(suite, lo, hi, cap)?);
    }
    let mut report = verify::report(&cells);
    report.param("suite", args.suite.name());
    if let Some(n) = args.n {
        report.param("n", n);
    }
    if let Some(m) = args.max_n {
        report.param("max_n", m);
    }
    let code = if cells.iter().all(|c| c.pass) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    Ok((report, code))
}

/// Statistics of a permutation word, or the extraneous bars of a bar
/// arrangement when the input contains `|`.
pub fn cmd_stats(word: &str) -> Result<Report, CliError> {
    if word.contains('|') {
        let arrangement: BarArrangement = word
            .parse()
            .map_err(|e| CliError::Usage(format!("malformed arrangement `{word}`: {e}")))?;
        let extraneous = arrangement
            .extraneous_bars()
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let fields = [
            ("arrangement", arrangement.to_string()),
            ("n", arrangement.n().to_string()),
            ("bars", arrangement.bar_count().to_string()),
            ("word", arrangement.word().to_string()),
            ("extraneous", format!("{{{extraneous}}}")),
        ];
        return Ok(key_value_report(&fields, word));
    }
    let pi: Permutation = word
        .parse()
        .map_err(|e| CliError::Usage(format!("malformed word `{word}`: {e}")))?;
    let fields = [
        ("word", pi.to_string()),
        ("n", pi.len().to_string()),
        ("ascents", pi.ascent_count().to_string()),
        ("wexc", pi.weak_excedance_count().to_string()),
        ("maj", pi.major_index().to_string()),
        ("Q", pi.q_position().to_string()),
        ("cycles", pi.standard_cycle_form().to_string()),
        ("f", pi.fundamental_map().to_string()),
        ("f_inv", pi.fundamental_inverse().to_string()),
        ("g", pi.complement().to_string()),
    ];
    Ok(key_value_report(&fields, word))
}

fn key_value_report(fields: &[(&str, String)], input: &str) -> Report {
    let columns: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    let mut report = Report::new(&columns);
    report.param("input", input);
    report.push_row(fields.iter().map(|(_, v)| v.clone()).collect());
    report.plain = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
    report
}

pub fn cmd_bijection(args: &BijectionArgs, cap: EnumerationCap) -> Result<Report, CliError> {
    let side = Side::from(args.side);
    let records = insertion_records(side, args.n, args.k, cap)?;
    let mut report = Report::new(&[
        "source",
        "source_class",
        "source_k",
        "position",
        "image",
        "label",
    ]);
    report
        .param("side", side)
        .param("n", args.n)
        .param("k", args.k);
    for r in &records {
        let position = match r.position {
            Position::Index(i) => i.to_string(),
            Position::End => "end".to_string(),
        };
        report.push_row(vec![
            r.source.to_string(),
            format!("{}W", side),
            r.source_k.to_string(),
            position,
            r.image.to_string(),
            r.label.to_string(),
        ]);
        report.plain.push(r.to_string());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(kind: TableKind, n: usize, k: Option<usize>) -> TableArgs {
        TableArgs {
            kind,
            n: Some(n),
            max_n: None,
            k,
            j: None,
            a: None,
            d: None,
        }
    }

    #[test]
    fn table_rows() {
        assert_eq!(
            cmd_table(&table(TableKind::Eulerian, 3, None))
                .unwrap()
                .plain,
            vec!["1,4,1"]
        );
        assert_eq!(
            cmd_table(&table(TableKind::Cnk, 3, Some(1))).unwrap().plain,
            vec!["4,4,2,1"]
        );
        let mut general = table(TableKind::General, 2, Some(1));
        general.a = Some(BigInt::from(1));
        general.d = Some(BigInt::from(2));
        assert_eq!(cmd_table(&general).unwrap().plain, vec!["6"]);
    }

    #[test]
    fn table_usage_errors() {
        let missing = table(TableKind::General, 2, None);
        assert_eq!(cmd_table(&missing).unwrap_err().exit_code(), EXIT_USAGE);
        let out_of_range = table(TableKind::Eulerian, 3, Some(4));
        assert_eq!(
            cmd_table(&out_of_range).unwrap_err().exit_code(),
            EXIT_USAGE
        );
    }

    #[test]
    fn stats_trivial_word() {
        let plain = cmd_stats("1").unwrap().plain;
        assert!(plain.contains(&"ascents=0".to_string()));
        assert!(plain.contains(&"wexc=1".to_string()));
        assert!(plain.contains(&"maj=0".to_string()));
        assert!(plain.contains(&"Q=1".to_string()));
        assert_eq!(cmd_stats("1123").unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn bijection_cap() {
        let args = BijectionArgs {
            side: SideArg::B,
            n: 6,
            k: 2,
        };
        assert_eq!(
            cmd_bijection(&args, EnumerationCap(5))
                .unwrap_err()
                .exit_code(),
            EXIT_CAP
        );
    }
}

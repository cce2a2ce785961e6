//! Command-line front end.
//!
//! Every command reads or writes the grid text format and accepts
//! `--format text|json`. Exit status is 0 on success, 1 on domain, input or
//! verification failures and 2 on usage errors.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{self, BoundFamily, BoundParams, ConstructFamily, PalKind, DEFAULT_BUDGET};
use crate::conjugacy::pal_conjugates;
use crate::error::Error;
use crate::palindromes::{
    enumerate_palindromic_factors, find_forbidden_pattern, hv_decompose, is_hv_palindrome,
    is_palindrome_2d, FactorKind,
};
use crate::search::{self, Objective, SearchConfig};
use crate::word2d::{Locus, Word2D};

/// Environment variable overriding the default search budget.
pub const BUDGET_ENV: &str = "GRIDPAL_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "gridpal",
    version,
    about = "Palindromic structure of two-dimensional words"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Input {
    /// Grid file; `-` or absent reads standard input.
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Shape, alphabet, palindrome predicates, border count and factor counts.
    Analyze(Input),
    /// List distinct palindromic factors of one kind.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_factor_kind, default_value = "pal2d")]
        kind: FactorKind,
    },
    /// Conjugacy class with its palindromic members and witness rotations.
    Conjugates(Input),
    /// Quadrant/cross decomposition of an HV-palindrome.
    Decompose(Input),
    /// First forbidden-pattern occurrence, or `none`.
    Pattern(Input),
    /// Build an extremal word.
    Construct {
        #[arg(long, value_parser = parse_construct)]
        family: ConstructFamily,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, num_args = 2, value_names = ["R", "C"], default_values_t = [2, 2])]
        periods: Vec<usize>,
    },
    /// Evaluate a closed-form count or bound.
    Bound {
        #[arg(long, value_parser = parse_family)]
        family: BoundFamily,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// For max-pal-in-2row: the word is itself a palindrome.
        #[arg(long)]
        palindromic: bool,
    },
    /// Exhaustive extremal search.
    Search {
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long, num_args = 2, value_names = ["M", "N"], required = true)]
        shape: Vec<usize>,
        #[arg(long, value_parser = parse_search_kind, default_value = "hv")]
        kind: FactorKind,
        #[arg(long, value_parser = parse_objective, default_value = "max")]
        objective: Objective,
        /// Only scan palindromic carriers of this kind.
        #[arg(long, value_parser = parse_pal_kind)]
        restrict: Option<PalKind>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 4)]
        witnesses: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Reproduce the binary maximum-HV table.
    #[command(name = "verify-table1")]
    VerifyTable1 {
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn parse_factor_kind(s: &str) -> Result<FactorKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_search_kind(s: &str) -> Result<FactorKind, String> {
    match parse_factor_kind(s)? {
        k @ (FactorKind::Pal2d | FactorKind::Hv) => Ok(k),
        k => Err(format!("search supports pal2d and hv, not {k}")),
    }
}

fn parse_pal_kind(s: &str) -> Result<PalKind, String> {
    match s {
        "palindromes-only" | "palindromes_only" => Ok(PalKind::Pal2d),
        "hv-only" | "hv_only" => Ok(PalKind::Hv),
        _ => s.parse().map_err(|e: Error| e.to_string()),
    }
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<BoundFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_construct(s: &str) -> Result<ConstructFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Process streams and environment handed to [`run`].
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    /// Value of [`BUDGET_ENV`], if set.
    pub budget_env: Option<String>,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(io.stdout, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("usage error");
            let _ = writeln!(io.stderr, "gridpal: {line}");
            return 2;
        }
    };
    match execute(&cli, io) {
        Ok(code) => code,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(io.stderr, "gridpal: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.stderr, "gridpal: {msg}");
            2
        }
    }
}

fn read_word(input: &Input, io: &mut Io<'_>) -> Result<Word2D, Failure> {
    let (label, text) = match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", p.display())))?;
            (p.display().to_string(), text)
        }
        _ => {
            let mut text = String::new();
            io.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Domain(format!("cannot read standard input: {e}")))?;
            ("<stdin>".to_string(), text)
        }
    };
    let word = Word2D::parse_grid(&text).map_err(|e| Failure::Domain(format!("{label}: {e}")))?;
    if word.cells().iter().any(|s| !s.0.is_ascii()) {
        let _ = writeln!(
            io.stderr,
            "gridpal: warning: {label} contains non-ASCII symbols"
        );
    }
    Ok(word)
}

fn resolve_budget(flag: Option<u64>, io: &Io<'_>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match &io.budget_env {
        Some(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{BUDGET_ENV} must be a non-negative integer, got `{v}`"
            ))
        }),
        None => Ok(DEFAULT_BUDGET),
    }
}

fn emit<T: Serialize>(
    io: &mut Io<'_>,
    format: Format,
    value: &T,
    text: String,
) -> Result<(), Failure> {
    let rendered = match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    io.stdout
        .write_all(rendered.as_bytes())
        .map_err(|e| Failure::Domain(format!("cannot write output: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn locus_text(l: Locus) -> String {
    match l {
        Locus::Cell(i) => i.to_string(),
        Locus::Between(a, b) => format!("{a}|{b}"),
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    rows: usize,
    cols: usize,
    alphabet: Vec<String>,
    is_2d_palindrome: bool,
    is_hv_palindrome: bool,
    borders: usize,
    center: crate::word2d::CenterLocus,
    factor_counts: FactorCounts,
}

#[derive(Serialize, Default, Clone, Copy)]
struct FactorCounts {
    pal2d: usize,
    hv: usize,
    horizontal: usize,
    vertical: usize,
    trivial: usize,
}

impl FactorCounts {
    fn slot(&mut self, kind: FactorKind) -> &mut usize {
        match kind {
            FactorKind::Pal2d => &mut self.pal2d,
            FactorKind::Hv => &mut self.hv,
            FactorKind::Horizontal => &mut self.horizontal,
            FactorKind::Vertical => &mut self.vertical,
            FactorKind::Trivial => &mut self.trivial,
        }
    }
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<i32, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Analyze(input) => {
            let word = read_word(input, io)?;
            if word.is_empty() {
                return Err(Error::EmptyWord("analyze").into());
            }
            let mut counts = FactorCounts::default();
            for kind in FactorKind::ALL {
                *counts.slot(kind) = enumerate_palindromic_factors(&word, kind)?.count();
            }
            let center = word.center()?;
            let report = AnalyzeReport {
                rows: word.rows(),
                cols: word.cols(),
                alphabet: word.alph().into_iter().map(|s| s.to_string()).collect(),
                is_2d_palindrome: is_palindrome_2d(&word),
                is_hv_palindrome: is_hv_palindrome(&word),
                borders: word.borders()?.len(),
                center,
                factor_counts: counts,
            };
            let mut t = String::new();
            let _ = writeln!(t, "shape: {}x{}", report.rows, report.cols);
            let _ = writeln!(t, "alphabet: {{{}}}", report.alphabet.join(","));
            let _ = writeln!(t, "2D-palindrome: {}", yes_no(report.is_2d_palindrome));
            let _ = writeln!(t, "HV-palindrome: {}", yes_no(report.is_hv_palindrome));
            let _ = writeln!(t, "borders: {}", report.borders);
            let _ = writeln!(
                t,
                "center: row {} col {}",
                locus_text(center.row),
                locus_text(center.col)
            );
            let mut fc = report.factor_counts;
            let counts: Vec<String> = FactorKind::ALL
                .into_iter()
                .map(|k| format!("{k}={}", fc.slot(k)))
                .collect();
            let _ = writeln!(t, "factors: {}", counts.join(" "));
            emit(io, format, &report, t)?;
        }
        Command::Enumerate { input, kind } => {
            let word = read_word(input, io)?;
            let set = enumerate_palindromic_factors(&word, *kind)?;
            #[derive(Serialize)]
            struct Out<'a> {
                kind: FactorKind,
                count: usize,
                members: &'a std::collections::BTreeSet<Word2D>,
            }
            let out = Out {
                kind: set.kind,
                count: set.count(),
                members: &set.members,
            };
            emit(io, format, &out, set.to_report())?;
        }
        Command::Conjugates(input) => {
            let word = read_word(input, io)?;
            let report = pal_conjugates(&word)?;
            let mut t = String::new();
            let _ = writeln!(t, "class size={}", report.class_members.len());
            for c in &report.class_members {
                t.push_str(&c.to_grid());
                t.push('\n');
            }
            let _ = writeln!(
                t,
                "palindromic size={} bound={}",
                report.pal_members.len(),
                report.bound()
            );
            for (c, (i, j)) in &report.witness_rotations {
                let _ = writeln!(t, "rotation cols={i} rows={j}");
                t.push_str(&c.to_grid());
                t.push('\n');
            }
            let _ = writeln!(t, "hv-palindromic size={}", report.hv_members.len());
            for c in &report.hv_members {
                t.push_str(&c.to_grid());
                t.push('\n');
            }
            emit(io, format, &report, t)?;
        }
        Command::Decompose(input) => {
            let word = read_word(input, io)?;
            let d = hv_decompose(&word)?;
            let piece = |p: &Option<Word2D>| match p {
                None => " absent\n".to_string(),
                Some(w) if w.is_empty() => " λ\n".to_string(),
                Some(w) => format!("\n{}", w.to_grid()),
            };
            let mut t = String::new();
            let _ = writeln!(t, "shape: {}x{}", d.shape.0, d.shape.1);
            let _ = writeln!(t, "parity: {} {}", d.parity().0, d.parity().1);
            t.push_str("u:");
            t.push_str(&piece(&Some(d.u.clone())));
            t.push_str("p1:");
            t.push_str(&piece(&d.p1));
            t.push_str("p2:");
            t.push_str(&piece(&d.p2));
            match d.x {
                Some(x) => {
                    let _ = writeln!(t, "x: {x}");
                }
                None => t.push_str("x: absent\n"),
            }
            emit(io, format, &d, t)?;
        }
        Command::Pattern(input) => {
            let word = read_word(input, io)?;
            let occ = find_forbidden_pattern(&word);
            let t = match &occ {
                None => "none\n".to_string(),
                Some(o) => {
                    let block = word.subarray(o.i1, o.i2, o.j1, o.j2)?;
                    format!(
                        "occurrence i1={} i2={} j1={} j2={} x={} y={}\n{}",
                        o.i1,
                        o.i2,
                        o.j1,
                        o.j2,
                        o.x,
                        o.y,
                        block.to_grid()
                    )
                }
            };
            emit(io, format, &occ, t)?;
        }
        Command::Construct { family, q, periods } => {
            let word = family.build(*q, periods[0], periods[1])?;
            emit(io, format, &word, word.to_grid())?;
        }
        Command::Bound {
            family,
            q,
            m,
            n,
            palindromic,
        } => {
            let params = BoundParams {
                q: *q,
                m: *m,
                n: *n,
                palindromic: *palindromic,
            };
            let f = bounds::evaluate(*family, params)?;
            let mut t = format!("family={}", f.family);
            for (name, v) in [("q", q), ("m", m), ("n", n)] {
                if let Some(v) = v {
                    let _ = write!(t, " {name}={v}");
                }
            }
            if *palindromic {
                t.push_str(" palindromic");
            }
            let _ = writeln!(t, " value={}", f.value);
            emit(io, format, &f, t)?;
        }
        Command::Search {
            q,
            shape,
            kind,
            objective,
            restrict,
            budget,
            witnesses,
            threads,
        } => {
            let config = SearchConfig {
                budget: resolve_budget(*budget, io)?,
                witnesses: *witnesses,
                threads: *threads,
            };
            let (m, n) = (shape[0], shape[1]);
            let result = match restrict {
                None => search::exhaustive_extremum(*q, m, n, *kind, *objective, &config)?,
                Some(r) => search::exhaustive_extremum_restricted(
                    *q, m, n, *kind, *objective, *r, &config,
                )?,
            };
            let mut t = format!(
                "q={} shape={}x{} kind={} objective={}",
                result.q,
                m,
                n,
                result.kind,
                if result.objective == Objective::Max {
                    "max"
                } else {
                    "min"
                }
            );
            if let Some(r) = result.restrict {
                let _ = write!(t, " restrict={r}");
            }
            let _ = writeln!(
                t,
                " optimum={} words={}",
                result.optimum, result.words_scanned
            );
            for wit in &result.witnesses {
                t.push('\n');
                t.push_str(&wit.to_grid());
            }
            let _ = writeln!(
                io.stderr,
                "elapsed_ms={:.1}",
                result.elapsed.as_secs_f64() * 1e3
            );
            emit(io, format, &result, t)?;
        }
        Command::VerifyTable1 { budget, threads } => {
            let config = SearchConfig {
                budget: resolve_budget(*budget, io)?,
                witnesses: 1,
                threads: *threads,
            };
            let report = search::verify_table(&search::table1_shapes(), &config)?;
            let mut t = String::new();
            for r in &report.rows {
                let _ = writeln!(
                    t,
                    "{}x{} achieved={} expected={} bound={} gap={} {}",
                    r.m,
                    r.n,
                    r.achieved,
                    r.expected.map_or("-".to_string(), |e| e.to_string()),
                    r.bound,
                    r.gap,
                    if r.ok { "ok" } else { "MISMATCH" }
                );
            }
            let matched = report.rows.iter().filter(|r| r.ok).count();
            let _ = writeln!(t, "table1: {matched}/{} rows match", report.rows.len());
            emit(io, format, &report, t)?;
            return Ok(if report.all_ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

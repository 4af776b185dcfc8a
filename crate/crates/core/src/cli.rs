//! Command-line frontend. The `cycpat` binary is a thin wrapper around
//! [`main`]; [`run`] takes explicit arguments and output streams so it can be
//! driven in-process.
//!
//! Exit status: 0 success, 1 `verify` mismatch, 2 usage or input error,
//! 3 oracle size cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijections::{self, Bullet};
use crate::conjectures::{self, IndexMap, NamedSequence, SequenceName};
use crate::error::{Error, Result};
use crate::family::{self, Family};
use crate::genfun::{self, RationalGF};
use crate::oracle::{AvoidanceQuery, CycleMode, Oracle, DEFAULT_ORACLE_CAP, ORACLE_CAP_ENV};
use crate::perm::{Pattern, Permutation};
use crate::table::{big_to_number, CountTable, Source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cycpat", version, about = "Count cyclic permutations avoiding δ_k whose cycle form avoids a pattern")]
struct Cli {
    /// Output format [default: table]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Oracle worker threads: a number or "auto"
    #[arg(long, global = true)]
    threads: Option<String>,
    /// Largest n the brute-force oracle will enumerate
    #[arg(long, global = true)]
    oracle_cap: Option<usize>,
    /// key=value file with defaults for format, threads and oracle_cap
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[arg(long)]
    n: usize,
    /// Forbid δ_k in one-line form
    #[arg(long, conflicts_with = "sigma", required_unless_present = "sigma")]
    k: Option<usize>,
    /// Forbid this pattern in one-line form instead of δ_k
    #[arg(long)]
    sigma: Option<Pattern>,
    /// Pattern the cycle form must avoid
    #[arg(long)]
    tau: Pattern,
    #[arg(long, default_value = "standard")]
    mode: CycleMode,
    /// Require π_1 = this value
    #[arg(long)]
    first: Option<usize>,
    /// Require π_n = this value
    #[arg(long)]
    last: Option<usize>,
}

impl QueryArgs {
    fn query(&self) -> AvoidanceQuery {
        let one_line = match (&self.sigma, self.k) {
            (Some(s), _) => s.clone(),
            (None, k) => Pattern::decreasing(k.unwrap_or(1)),
        };
        let mut q = AvoidanceQuery::new(self.n, one_line, self.tau.clone(), self.mode);
        q.first_entry = self.first;
        q.last_entry = self.last;
        q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    As213,
    Bs213,
    N2,
    Bullet1,
    Bullet2,
    Bullet3,
    As231,
    Delete1342,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count members of one avoidance class
    Count(QueryArgs),
    /// List members of one avoidance class in enumeration order
    List(QueryArgs),
    /// Table of counts for 1 <= n <= n_max, 2 <= k <= k_max
    Table {
        #[arg(long)]
        tau: Pattern,
        #[arg(long, default_value = "standard")]
        mode: CycleMode,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long, default_value = "oracle")]
        source: Source,
    },
    /// Power series coefficients of z^0 ..= z^n_max
    Series {
        /// 123, 132, 213, 312, 231, 1324, 1423, 1342, b231 or b1342
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Print a generating function in canonical rational form
    Gf {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
    },
    /// Compare oracle, recurrence and generating function cell by cell
    Verify {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k_max: usize,
    },
    /// Apply one of the constructive maps (or its inverse)
    Bijection {
        #[arg(long, value_enum)]
        map: MapName,
        #[arg(long)]
        k: usize,
        /// Run the inverse: compose two parts, or undo a single-output map
        #[arg(long)]
        inverse: bool,
        /// One-line permutations ("41532", "4 1 5 3 2") or cycle forms ("(1,4,3,5,2)")
        #[arg(required = true, num_args = 1..=2)]
        input: Vec<String>,
    },
    /// Test a conjectured sequence against the oracle
    Conjecture {
        #[arg(long, required_unless_present = "all")]
        sigma: Option<Pattern>,
        #[arg(long, required_unless_present = "all")]
        sequence: Option<SequenceName>,
        /// Nominal index map such as n-2 or 3n
        #[arg(long, required_unless_present = "all")]
        index: Option<IndexMap>,
        /// Freeze the shift instead of calibrating it
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Check the three claimed identities
        #[arg(long, conflicts_with_all = ["sigma", "sequence", "index"])]
        all: bool,
    },
}

/// Effective settings after merging flags, environment and config file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Format,
    pub oracle_cap: usize,
    /// `None` means rayon's default pool.
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: Format::Table,
            oracle_cap: DEFAULT_ORACLE_CAP,
            threads: None,
        }
    }
}

fn parse_threads(s: &str) -> Result<Option<usize>> {
    match s.trim() {
        "auto" => Ok(None),
        t => match t.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(Error::Parse(format!("threads must be a positive integer or auto, got {t:?}"))),
        },
    }
}

fn parse_cap(s: &str) -> Result<usize> {
    match s.trim().parse::<usize>() {
        Ok(c) if c >= 1 => Ok(c),
        _ => Err(Error::Parse(format!("oracle cap must be a positive integer, got {s:?}"))),
    }
}

/// Applies `key = value` lines; `#` starts a comment.
pub fn apply_config_text(cfg: &mut RunConfig, text: &str) -> Result<()> {
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or_default().trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", i + 1)))?;
        let value = value.trim();
        match key.trim() {
            "format" => {
                cfg.format = Format::from_str(value, true)
                    .map_err(|_| Error::Parse(format!("config line {}: bad format {value:?}", i + 1)))?
            }
            "threads" => cfg.threads = parse_threads(value)?,
            "oracle_cap" => cfg.oracle_cap = parse_cap(value)?,
            other => return Err(Error::Parse(format!("config line {}: unknown key {other:?}", i + 1))),
        }
    }
    Ok(())
}

fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read config {}: {e}", path.display())))?;
        apply_config_text(&mut cfg, &text)?;
    }
    if let Ok(v) = std::env::var(ORACLE_CAP_ENV) {
        cfg.oracle_cap = parse_cap(&v)?;
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(t) = &cli.threads {
        cfg.threads = parse_threads(t)?;
    }
    if let Some(c) = cli.oracle_cap {
        cfg.oracle_cap = parse_cap(&c.to_string())?;
    }
    Ok(cfg)
}

fn oracle_for(cfg: &RunConfig) -> Oracle {
    let oracle = Oracle::new(cfg.oracle_cap);
    match cfg.threads {
        Some(t) => oracle.with_threads(t),
        None => oracle,
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let outcome = resolve_config(&cli).and_then(|cfg| execute(&cli.command, &cfg, out));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn emit_table(out: &mut dyn Write, table: &CountTable, format: Format) -> Result<()> {
    match format {
        Format::Table => write!(out, "{table}"),
        Format::Csv => write!(out, "{}", table.to_csv()),
        Format::Json => writeln!(out, "{}", table.to_json()),
    }
    .map_err(io)
}

fn series_gf(family: &str, k: usize) -> Result<RationalGF> {
    match family {
        "b231" => genfun::gf_b231(k),
        "b1342" => genfun::gf_b1342(k),
        other => other.parse::<Family>()?.gf(k),
    }
}

fn parse_perm(s: &str) -> Result<Permutation> {
    s.parse()
}

fn describe(p: &Permutation) -> String {
    match p.cycle_form() {
        Ok(c) => format!("{p} = {c}"),
        Err(_) => p.to_string(),
    }
}

fn execute(cmd: &Command, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let oracle = oracle_for(cfg);
    match cmd {
        Command::Count(args) => {
            let q = args.query();
            let count = oracle.count(&q)?;
            match cfg.format {
                Format::Json => writeln!(out, "{}", json!({"n": q.n, "count": big_to_number(&count)})),
                _ => writeln!(out, "{count}"),
            }
            .map_err(io)?;
        }
        Command::List(args) => {
            let members = oracle.list_members(&args.query())?;
            match cfg.format {
                Format::Json => {
                    let v: Vec<String> = members.iter().map(|p| p.to_string()).collect();
                    writeln!(out, "{}", json!(v)).map_err(io)?;
                }
                Format::Csv => {
                    writeln!(out, "one_line,cycle_form").map_err(io)?;
                    for p in &members {
                        writeln!(out, "{p},\"{}\"", p.cycle_form()?).map_err(io)?;
                    }
                }
                Format::Table => {
                    for p in &members {
                        writeln!(out, "{}", describe(p)).map_err(io)?;
                    }
                }
            }
        }
        Command::Table {
            tau,
            mode,
            n_max,
            k_max,
            source,
        } => {
            let table = match source {
                Source::Oracle => oracle.count_table(tau, *mode, *n_max, *k_max)?,
                _ => {
                    let fam: Family = tau.to_string().parse()?;
                    if fam.mode() != *mode {
                        return Err(Error::InvalidQuery(format!(
                            "no {source} formulas for tau = {tau} in mode {mode}; use --source oracle"
                        )));
                    }
                    fam.table(*source, &oracle, *n_max, *k_max)?
                }
            };
            emit_table(out, &table, cfg.format)?;
        }
        Command::Series { family, k, n_max } => {
            let coeffs = series_gf(family, *k)?.series(*n_max)?;
            match cfg.format {
                Format::Json => {
                    let nums: Vec<serde_json::Number> = coeffs
                        .iter()
                        .map(|c| c.to_string().parse().expect("integer"))
                        .collect();
                    writeln!(out, "{}", json!({"family": family, "k": k, "coefficients": nums}))
                }
                _ => {
                    let text: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                    writeln!(out, "{}", text.join(","))
                }
            }
            .map_err(io)?;
        }
        Command::Gf { family, k } => {
            let gf = series_gf(family, *k)?;
            match cfg.format {
                Format::Json => writeln!(out, "{}", json!({"family": family, "k": k, "gf": gf.to_string()})),
                _ => writeln!(out, "{gf}"),
            }
            .map_err(io)?;
        }
        Command::Verify { family, n_max, k_max } => {
            let report = family::verify(*family, &oracle, *n_max, *k_max)?;
            match cfg.format {
                Format::Json => writeln!(out, "{}", report.to_json()),
                _ => writeln!(out, "{report}"),
            }
            .map_err(io)?;
            if !report.agreed() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Bijection {
            map,
            k,
            inverse,
            input,
        } => {
            let perms = input.iter().map(|s| parse_perm(s)).collect::<Result<Vec<_>>>()?;
            let lines = run_bijection(*map, *k, *inverse, &perms)?;
            match cfg.format {
                Format::Json => {
                    let obj: serde_json::Map<String, serde_json::Value> = lines
                        .iter()
                        .map(|(name, p)| (name.to_string(), json!(p.to_string())))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::Object(obj)).map_err(io)?;
                }
                _ => {
                    for (name, p) in &lines {
                        writeln!(out, "{name} = {}", describe(p)).map_err(io)?;
                    }
                }
            }
        }
        Command::Conjecture {
            sigma,
            sequence,
            index,
            shift,
            n_max,
            all,
        } => {
            let jobs: Vec<(Pattern, SequenceName, IndexMap)> = if *all {
                conjectures::claimed().into()
            } else {
                vec![(
                    sigma.clone().expect("required"),
                    sequence.expect("required"),
                    index.expect("required"),
                )]
            };
            for (sigma, seq, map) in jobs {
                let named = NamedSequence::new(seq);
                let report = match shift {
                    Some(s) => conjectures::check_with_shift(&oracle, &sigma, &named, map, *s, *n_max)?,
                    None => conjectures::check_conjecture(&oracle, &sigma, &named, map, *n_max)?,
                };
                match cfg.format {
                    Format::Json => writeln!(out, "{}", report.to_json()),
                    Format::Csv => {
                        let mut text = String::from("n,oracle,index,term,match\n");
                        for r in &report.rows {
                            let term = r.term.as_ref().map_or(String::new(), |t| t.to_string());
                            text.push_str(&format!("{},{},{},{},{}\n", r.n, r.oracle, r.index, term, r.matched));
                        }
                        write!(out, "{text}")
                    }
                    Format::Table => writeln!(out, "{report}"),
                }
                .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

type Named = (&'static str, Permutation);

fn one(perms: &[Permutation]) -> Result<&Permutation> {
    match perms {
        [p] => Ok(p),
        _ => Err(Error::InvalidQuery("this map takes exactly one permutation".into())),
    }
}

fn two(perms: &[Permutation]) -> Result<(&Permutation, &Permutation)> {
    match perms {
        [a, b] => Ok((a, b)),
        _ => Err(Error::InvalidQuery("composing takes exactly two permutations".into())),
    }
}

fn run_bijection(map: MapName, k: usize, inverse: bool, perms: &[Permutation]) -> Result<Vec<Named>> {
    let bullet = |m| match m {
        MapName::Bullet1 => Bullet::One,
        MapName::Bullet2 => Bullet::Two,
        _ => Bullet::Three,
    };
    Ok(match (map, inverse) {
        (MapName::As213, false) => {
            let d = bijections::decompose_as213(one(perms)?, k)?;
            vec![("inner", d.inner), ("outer", d.outer)]
        }
        (MapName::As213, true) => {
            let (inner, outer) = two(perms)?;
            vec![("pi", bijections::compose_as213(inner, outer, k)?)]
        }
        (MapName::Bs213, false) => {
            let (a, b) = bijections::decompose_bs213(one(perms)?, k)?;
            vec![("first", a), ("second", b)]
        }
        (MapName::Bs213, true) => {
            let (a, b) = two(perms)?;
            vec![("pi", bijections::compose_bs213(a, b, k)?)]
        }
        (MapName::N2, false) => vec![("image", bijections::strip_n2(one(perms)?, k)?)],
        (MapName::N2, true) => vec![("pi", bijections::insert_n2(one(perms)?)?)],
        (MapName::Bullet1 | MapName::Bullet2 | MapName::Bullet3, false) => {
            vec![("image", bijections::map_231_rc(one(perms)?, bullet(map), k)?)]
        }
        (MapName::Bullet1 | MapName::Bullet2 | MapName::Bullet3, true) => {
            vec![("pi", bijections::unmap_231_rc(one(perms)?, bullet(map), k)?)]
        }
        (MapName::As231, false) => {
            let (a, b) = bijections::decompose_as231(one(perms)?, k)?;
            vec![("first", a), ("second", b)]
        }
        (MapName::As231, true) => {
            let (a, b) = two(perms)?;
            vec![("pi", bijections::compose_as231(a, b, k)?)]
        }
        (MapName::Delete1342, false) => vec![("image", bijections::delete_n_1342(one(perms)?, k)?)],
        (MapName::Delete1342, true) => vec![("pi", bijections::insert_n_1342(one(perms)?)?)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cycpat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn series_command() {
        let (code, out, _) = run_str(&["series", "--family", "213", "--k", "4", "--n-max", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "0,1,1,2,5,13,34,89");
    }

    #[test]
    fn usage_error_exit_code() {
        let (code, _, err) = run_str(&["count", "--n", "5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
    }

    #[test]
    fn resource_limit_exit_code() {
        let (code, _, err) = run_str(&["--oracle-cap", "4", "count", "--n", "5", "--k", "3", "--tau", "213"]);
        assert_eq!(code, EXIT_RESOURCE);
        assert!(err.contains("cap"));
    }

    #[test]
    fn config_text() {
        let mut cfg = RunConfig::default();
        apply_config_text(&mut cfg, "# defaults\nformat = json\nthreads=2\noracle_cap = 9\n").unwrap();
        assert_eq!(
            cfg,
            RunConfig {
                format: Format::Json,
                oracle_cap: 9,
                threads: Some(2)
            }
        );
        assert!(apply_config_text(&mut cfg, "colour=red").is_err());
        assert!(apply_config_text(&mut cfg, "threads=0").is_err());
    }
}
